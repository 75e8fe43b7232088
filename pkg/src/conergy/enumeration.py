"""Enumerate all lattices of a given order up to isomorphism, and run the
exhaustive extremal checks over them.

Generation grows one element at a time along a linear extension.  Every
prefix of a linear extension of a lattice is an order ideal, hence a meet
semilattice, so it suffices to extend a meet semilattice by a new element
whose down-set keeps greatest lower bounds intact; adding the final top
element turns the semilattice into a lattice.  Prefixes are deduplicated by
poset canonical form at every level, which keeps the search tree tiny.

An independent labeled-poset oracle (enumerate all naturally labeled
posets, filter the lattice property) guards completeness at small sizes.
"""

import os
from dataclasses import dataclass

from . import congruence as cg
from . import counting as ct
from . import energy as en
from . import lattice as lt
from .errors import BudgetExceeded, DomainError

DEFAULT_BUDGET = 8
BUDGET_CAP = 9
BUDGET_ENV = "CONERGY_BUDGET_N"


def enumeration_budget():
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return min(BUDGET_CAP, max(1, int(raw)))
    except ValueError:
        return DEFAULT_BUDGET


def _leq_from_dn(dn):
    return lambda a, b: bool(dn[b] >> a & 1)


def _down_closed_subsets(dn, k):
    """All nonempty order ideals of the k-element prefix."""
    out = []
    for mask in range(1, 1 << k):
        closed = True
        m = mask
        while m:
            j = (m & -m).bit_length() - 1
            if dn[j] & ~mask:
                closed = False
                break
            m &= m - 1
        if closed:
            out.append(mask)
    return out


def _has_greatest(dn, subset):
    m = subset
    while m:
        g = (m & -m).bit_length() - 1
        if subset & ~dn[g] == 0:
            return True
        m &= m - 1
    return False


def _lattice_from_dn(dn):
    n = len(dn)
    up = [0] * n
    for b in range(n):
        m = dn[b]
        while m:
            a = (m & -m).bit_length() - 1
            up[a] |= 1 << b
            m &= m - 1
    return lt.from_order_bits(n, up)


def all_lattices(n):
    """All n-element lattices, one representative per isomorphism class,
    in canonical-form order."""
    budget = enumeration_budget()
    if not 1 <= n <= budget:
        raise BudgetExceeded(f"all_lattices limited to 1 <= n <= {budget}")
    if n == 1:
        return [lt.chain(1)]
    level = {b"": [1]}  # canon -> dn rows of a 1-element prefix
    for k in range(1, n - 1):
        nxt = {}
        for dn in level.values():
            for mask in _down_closed_subsets(dn, k):
                if not all(_has_greatest(dn, mask & dn[j]) for j in range(k)):
                    continue
                dn2 = dn + [mask | (1 << k)]
                key = lt.canonical_order_matrix(k + 1, _leq_from_dn(dn2))
                if key not in nxt:
                    nxt[key] = dn2
        level = nxt
    found = {}
    for dn in level.values():
        full = (1 << (n - 1)) - 1
        lat = _lattice_from_dn(dn + [full | (1 << (n - 1))])
        key = lt.canonical_form(lat)
        if key not in found:
            found[key] = lat
    return [found[key] for key in sorted(found)]


def all_lattices_brute(n):
    """Completeness oracle: every naturally labeled poset with a final top,
    filtered down to lattices, deduplicated by canonical form."""
    if n == 1:
        return [lt.chain(1)]
    found = {}

    def rec(dn, k):
        if k == n:
            try:
                lat = _lattice_from_dn(dn)
            except lt.NotALattice:
                return
            full = (1 << n) - 1
            if lat.up_bits[lat.bottom] != full or lat.dn_bits[lat.top] != full:
                return
            key = lt.canonical_form(lat)
            if key not in found:
                found[key] = lat
            return
        for mask in range(1 << k):
            closed = True
            m = mask
            while m:
                j = (m & -m).bit_length() - 1
                if dn[j] & ~mask:
                    closed = False
                    break
                m &= m - 1
            if closed:
                rec(dn + [mask | (1 << k)], k + 1)

    rec([1], 1)
    return [found[key] for key in sorted(found)]


def _glued_chain_core_chain(core, n):
    """All chain + core + chain stackings of total size n, up to iso."""
    out = {}
    for i in range(1, n - core.n + 2):
        j = n - core.n - i + 2
        if j < 1:
            continue
        lat = lt.glued_sum(lt.chain(i), lt.glued_sum(core, lt.chain(j)))
        key = lt.canonical_form(lat)
        out.setdefault(key, lat)
    return [out[key] for key in sorted(out)]


def glued_b4_family(n):
    if n < 4:
        return []
    return _glued_chain_core_chain(lt.named("B4"), n)


def glued_n5_family(n):
    if n < 5:
        return []
    return _glued_chain_core_chain(lt.named("N5"), n)


def decomposes_as_chain_b4_chain(lat):
    """Structural route: isomorphic to some chain + B4 + chain stacking."""
    return any(lt.are_isomorphic(lat, k) for k in glued_b4_family(lat.n))


def has_unique_two_element_antichain(lat):
    return lt.count_two_element_antichains(lat) == 1


def is_glued_b4_shape(lat):
    """Both characterizations are evaluated; they must agree."""
    a = has_unique_two_element_antichain(lat)
    b = decomposes_as_chain_b4_chain(lat)
    if a != b:
        raise AssertionError(f"glued-B4 routes disagree on {lat.covers}")
    return b


def is_glued_n5_shape(lat):
    return any(lt.are_isomorphic(lat, k) for k in glued_n5_family(lat.n))


def glued_b4_count(n):
    """Number of iso classes of chain + B4 + chain stackings of size n."""
    if n < 4:
        raise DomainError(f"glued_b4_count needs n >= 4, got {n}")
    return len(glued_b4_family(n))


@dataclass(frozen=True)
class LatticeRecord:
    canon: str                # canonical form, hex
    covers: tuple
    ce: int
    con_size: int
    is_chain: bool
    antichain_pairs: int
    glued_b4: bool
    glued_n5: bool

    def to_json_dict(self):
        return {
            "canon": self.canon,
            "covers": [list(c) for c in self.covers],
            "ce": self.ce,
            "con_size": self.con_size,
            "is_chain": self.is_chain,
            "antichain_pairs": self.antichain_pairs,
            "glued_b4": self.glued_b4,
            "glued_n5": self.glued_n5,
        }


@dataclass(frozen=True)
class ExtremalReport:
    n: int
    lattice_count: int
    max_ce: int
    max_witnesses: tuple      # canon hex strings
    second_ce: object         # int or None (no non-chain below n = 4)
    second_witnesses: tuple
    records: tuple
    verdicts: tuple           # ((name, verdict-string), ...)

    def to_json_dict(self):
        return {
            "n": self.n,
            "lattice_count": self.lattice_count,
            "max_ce": self.max_ce,
            "max_witnesses": list(self.max_witnesses),
            "second_ce": self.second_ce,
            "second_witnesses": list(self.second_witnesses),
            "records": [r.to_json_dict() for r in self.records],
            "verdicts": {k: v for k, v in self.verdicts},
        }


def _verdict(ok, detail=""):
    return "holds" if ok else f"fails: {detail}"


def extremal_report(n):
    """Per-class CE and |Con| plus verdicts for the extremal statements."""
    lattices = all_lattices(n)
    records = []
    for lat in lattices:
        con = cg.all_congruences(lat)
        records.append(
            LatticeRecord(
                canon=lt.canonical_form(lat).hex(),
                covers=lat.covers,
                ce=en.congruence_energy(con),
                con_size=len(con),
                is_chain=lt.is_chain(lat),
                antichain_pairs=lt.count_two_element_antichains(lat),
                glued_b4=decomposes_as_chain_b4_chain(lat),
                glued_n5=is_glued_n5_shape(lat),
            )
        )
    records.sort(key=lambda r: r.canon)
    max_ce = max(r.ce for r in records)
    max_wit = tuple(r.canon for r in records if r.ce == max_ce)
    rest = [r for r in records if r.ce < max_ce]
    second_ce = max((r.ce for r in rest), default=None)
    second_wit = tuple(r.canon for r in rest if r.ce == second_ce) if rest else ()

    verdicts = []
    chains = [r for r in records if r.is_chain]
    v_b = (
        len(chains) == 1
        and chains[0].ce == ct.g_max(n)
        and all(r.ce < ct.g_max(n) for r in records if not r.is_chain)
    )
    verdicts.append(("thm_b", _verdict(v_b, "chain is not the unique maximizer")))

    if n >= 4:
        gsb = ct.g_sb(n)
        at_gsb = {r.canon for r in records if r.ce == gsb}
        one_pair = {r.canon for r in records if r.antichain_pairs == 1}
        glued = {r.canon for r in records if r.glued_b4}
        below = all(r.ce <= gsb for r in records if not r.is_chain)
        v_c = below and at_gsb == one_pair == glued
        verdicts.append(("thm_c", _verdict(v_c, "g_sb witness sets differ")))
    else:
        verdicts.append(("thm_c", "skipped-budget"))

    v_many = all(r.con_size <= 2 ** (n - 1) for r in records) and all(
        (r.con_size == 2 ** (n - 1)) == r.is_chain for r in records
    )
    if n >= 2:
        v_many = v_many and all(
            (r.con_size == 2 ** (n - 2)) == r.glued_b4
            for r in records
            if not r.is_chain
        ) and all(r.con_size <= 2 ** (n - 2) for r in records if not r.is_chain)
    verdicts.append(("manycon", _verdict(v_many, "congruence-count bounds violated")))

    if n >= 5:
        v_pent = all(
            r.ce == ct.g_pn(n) and r.con_size == 5 * 2 ** (n - 5)
            for r in records
            if r.glued_n5
        )
        verdicts.append(("pentagon", _verdict(v_pent, "pentagon family values off")))
    else:
        verdicts.append(("pentagon", "skipped-budget"))

    return ExtremalReport(
        n=n,
        lattice_count=len(records),
        max_ce=max_ce,
        max_witnesses=max_wit,
        second_ce=second_ce,
        second_witnesses=second_wit,
        records=tuple(records),
        verdicts=tuple(verdicts),
    )
