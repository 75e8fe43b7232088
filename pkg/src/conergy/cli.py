"""Batch front end: load lattices from JSON or builder specs, run the
energy/congruence/enumeration computations, emit JSON reports.

Exit codes: 0 success/verified, 1 verification counterexample, 2 input
error, 3 budget exceeded.
"""

import argparse
import json
import sys

from . import algebra as alg
from . import congruence as cg
from . import counting as ct
from . import energy as en
from . import enumeration as enum_mod
from . import lattice as lt
from . import partition as pt
from .errors import BudgetExceeded, ConergyError

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3

EQU_BOUND_TABLE = (0, 2, 10, 46, 218, 1088, 5752, 32226, 190990, 1194310)


def _build_one(spec):
    s = spec.strip().lower()
    if s.startswith("chain:"):
        return lt.chain(int(s.split(":", 1)[1]))
    if s in ("b4", "m3", "n5"):
        return lt.named(s.upper())
    raise ValueError(f"unknown builder part {spec!r}")


def parse_builder(spec):
    if spec.lower().startswith("glue:"):
        parts = spec[len("glue:"):].split(",")
        lats = [_build_one(p) for p in parts]
        out = lats[0]
        for nxt in lats[1:]:
            out = lt.glued_sum(out, nxt)
        return out
    return _build_one(spec)


def load_lattice(args):
    if getattr(args, "builder", None):
        return parse_builder(args.builder)
    if getattr(args, "input", None):
        with open(args.input) as fh:
            doc = json.load(fh)
        return lt.from_covers(doc["n"], [tuple(c) for c in doc["covers"]])
    raise ValueError("provide an input file or --builder")


def _emit(doc, out=None):
    text = json.dumps(doc, indent=2, sort_keys=True)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_energy(args):
    lat = load_lattice(args)
    con = cg.all_congruences(lat)
    _emit(
        {
            "n": lat.n,
            "ce": en.congruence_energy(con),
            "con_size": len(con),
            "energies": sorted(en.combinatorial_energy(m) for m in con.members),
        },
        args.out,
    )
    return EXIT_OK


def cmd_conlat(args):
    lat = load_lattice(args)
    con = cg.all_congruences(lat)
    members = list(con.members)
    hasse = []
    for i, p in enumerate(members):
        for j, q in enumerate(members):
            if p != q and pt.leq(p, q):
                if not any(
                    r != p and r != q and pt.leq(p, r) and pt.leq(r, q)
                    for r in members
                ):
                    hasse.append([i, j])
    atom_idx = sorted(members.index(a) for a in con.atoms())
    _emit(
        {
            "host_n": con.host_n,
            "members": [list(m.rep) for m in members],
            "hasse": hasse,
            "atoms": atom_idx,
            "distributive": cg.is_distributive(con),
            "boolean": cg.is_boolean(con),
        },
        args.out,
    )
    return EXIT_OK


def cmd_quotient(args):
    lat = load_lattice(args)
    rep = tuple(json.loads(args.by))
    theta = pt.Partition(lat.n, rep)
    q, block_map = cg.quotient(lat, theta)
    _emit(
        {"n": q.n, "covers": [list(c) for c in q.covers], "block_map": list(block_map)},
        args.out,
    )
    return EXIT_OK


def cmd_enumerate(args):
    report = enum_mod.extremal_report(args.n)
    doc = report.to_json_dict()
    if not args.emit:
        for rec in doc["records"]:
            del rec["covers"]
    _emit(doc, args.out)
    bad = [v for _, v in report.verdicts if v.startswith("fails")]
    return EXIT_COUNTEREXAMPLE if bad else EXIT_OK


def cmd_table(args):
    ns = list(range(1, args.max_n + 1))
    bounds = [ct.equ_energy_bound(n) for n in ns]
    if args.format == "text":
        wid = max(len(str(b)) for b in bounds) + 2
        print("".join(f"{n:>{wid}}" for n in ns))
        print("".join(f"{b:>{wid}}" for b in bounds))
    else:
        _emit({"n": ns, "bound": bounds}, args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verification suites


def suite_remark1(max_n):
    details = []
    ok = True
    for n in range(1, max_n + 1):
        for lat in enum_mod.all_lattices(n):
            for m in cg.all_congruences(lat).members:
                se = en.spectral_energy(en.adjacency_of(m), 1e-12)
                ce = en.combinatorial_energy(m)
                if abs(se - ce) >= 1e-9:
                    ok = False
                    details.append(f"n={n} rep={m.rep}: spectral {se} vs exact {ce}")
    details.append(f"checked all congruences of all iso classes up to n={max_n}")
    return ok, details


def _report_suite(key, max_n, first_n=1):
    details = []
    ok = True
    for n in range(first_n, max_n + 1):
        verdict = dict(enum_mod.extremal_report(n).verdicts)[key]
        details.append(f"n={n}: {verdict}")
        if verdict.startswith("fails"):
            ok = False
    return ok, details


def suite_thm_b(max_n):
    return _report_suite("thm_b", max_n)


def suite_thm_c(max_n):
    return _report_suite("thm_c", max_n, first_n=4)


def suite_manycon(max_n):
    return _report_suite("manycon", max_n)


def suite_pentagon(max_k):
    details = []
    ok = True
    for k in range(5, max_k + 1):
        want_ce = ct.g_pn(k)
        want_con = 5 * 2 ** (k - 5)
        for i in range(1, k - 3):
            j = k - 3 - i
            if j < 1:
                continue
            lat = lt.glued_sum(lt.chain(i), lt.glued_sum(lt.named("N5"), lt.chain(j)))
            con = cg.all_congruences(lat)
            ce = en.congruence_energy(con)
            if ce != want_ce or len(con) != want_con:
                ok = False
                details.append(f"k={k} placement {i}: ce={ce} con={len(con)}")
        details.append(f"k={k}: ce={want_ce} con={want_con} for every placement")
    return ok, details


def suite_bounds(max_n):
    details = []
    ok = True
    for n, want in zip(range(1, 11), EQU_BOUND_TABLE):
        got = ct.equ_energy_bound(n)
        if got != want:
            ok = False
            details.append(f"n={n}: table value {got} != {want}")
    for n in range(1, min(max_n, 8) + 1):
        direct = sum(en.combinatorial_energy(p) for p in pt.all_partitions(n))
        if direct != ct.equ_energy_bound(n):
            ok = False
            details.append(f"n={n}: direct sum {direct} != bound")
    details.append(f"table 1..10 and direct sums up to n={min(max_n, 8)} verified")
    return ok, details


def suite_aux(max_n=20):
    details = []
    ok = True
    for n in range(3, max_n + 1):
        for x in range(1, n - 1):
            w = ct.aux_w(n, x)
            if w != ct.aux_w_factored(n, x) or w < 0 or (w == 0) != (x == 1):
                ok = False
                details.append(f"w({n},{x}) = {w}")
    for n in range(5, max_n + 1):
        if ct.aux_u(n, 1) != 0:
            ok = False
            details.append(f"u_{n}(1) != 0")
        for x in range(2, n - 1):
            if ct.aux_u(n, x) <= 0:
                ok = False
                details.append(f"u_{n}({x}) <= 0")
            if ct.aux_v(n, x) <= 0:
                ok = False
                details.append(f"v_{n}({x}) <= 0")
    details.append(f"auxiliary sign checks verified up to n={max_n}")
    return ok, details


SUITES = {
    "remark1": (suite_remark1, 6),
    "thm-b": (suite_thm_b, 6),
    "thm-c": (suite_thm_c, 6),
    "manycon": (suite_manycon, 6),
    "pentagon": (suite_pentagon, 10),
    "bounds": (suite_bounds, 8),
    "aux": (suite_aux, 20),
}


def cmd_verify(args):
    fn, default_n = SUITES[args.suite]
    ok, details = fn(args.n if args.n is not None else default_n)
    _emit({"suite": args.suite, "ok": ok, "details": details}, args.out)
    return EXIT_OK if ok else EXIT_COUNTEREXAMPLE


def cmd_oracle(args):
    n = args.n
    details = []
    ok = True
    if n <= 6:
        fast = enum_mod.all_lattices(n)
        brute = enum_mod.all_lattices_brute(n)
        if len(fast) != len(brute):
            ok = False
        details.append(f"lattice classes: generator {len(fast)}, oracle {len(brute)}")
        for lat in fast:
            a = cg.all_congruences(lat).members
            b = cg.brute_force_congruences(lat).members
            if a != b:
                ok = False
                details.append(f"congruence mismatch on {lat.covers}")
        details.append("congruence lattices match the brute-force filter")
    else:
        details.append("lattice/congruence oracles limited to n <= 6; skipped")
    parts = pt.all_partitions(n)
    if len(parts) != ct.bell(n):
        ok = False
    details.append(f"partitions: {len(parts)} (bell {ct.bell(n)})")
    blocks = sum(pt.num_blocks(p) for p in parts)
    if blocks != ct.bell2(n):
        ok = False
    details.append(f"block-weighted count: {blocks} (2-bell {ct.bell2(n)})")
    _emit({"n": n, "ok": ok, "details": details}, args.out)
    return EXIT_OK if ok else EXIT_COUNTEREXAMPLE


def build_parser():
    p = argparse.ArgumentParser(prog="conergy", description=__doc__)
    sub = p.add_subparsers(dest="verb", required=True)

    def add_input(sp):
        sp.add_argument("input", nargs="?", help="lattice JSON file {n, covers}")
        sp.add_argument("--builder", help="inline builder, e.g. chain:6 or glue:chain:2,b4,chain:3")
        sp.add_argument("--out", help="write the JSON report here instead of stdout")

    sp = sub.add_parser("energy", help="congruence energy of a lattice")
    add_input(sp)
    sp.set_defaults(fn=cmd_energy)

    sp = sub.add_parser("conlat", help="full congruence lattice of a lattice")
    add_input(sp)
    sp.set_defaults(fn=cmd_conlat)

    sp = sub.add_parser("quotient", help="quotient lattice by a congruence")
    add_input(sp)
    sp.add_argument("--by", required=True, help="congruence rep array, e.g. [0,0,2]")
    sp.set_defaults(fn=cmd_quotient)

    sp = sub.add_parser("enumerate", help="extremal report over all iso classes")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--emit", action="store_true", help="include cover lists per class")
    sp.add_argument("--out")
    sp.set_defaults(fn=cmd_enumerate)

    sp = sub.add_parser("verify", help="run a named verification suite")
    sp.add_argument("--suite", choices=sorted(SUITES), required=True)
    sp.add_argument("--n", type=int, help="override the suite's size budget")
    sp.add_argument("--out")
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("table", help="equivalence-lattice energy bound table")
    sp.add_argument("--max-n", type=int, default=10)
    sp.add_argument("--format", choices=["json", "text"], default="json")
    sp.add_argument("--out")
    sp.set_defaults(fn=cmd_table)

    sp = sub.add_parser("oracle", help="brute-force cross-checks")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--out")
    sp.set_defaults(fn=cmd_oracle)

    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except BudgetExceeded as exc:
        print(f"budget-exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ConergyError, ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"input-error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
