"""Finite lattices: validated construction, named builders, glued sums,
duality, and isomorphism for small orders.

Elements are integers 0..n-1.  The order matrix is stored as packed bit
rows: ``up_bits[a]`` has bit b set iff a <= b, and ``dn_bits[b]`` has bit a
set iff a <= b.  All values are immutable after construction.
"""

import itertools
from dataclasses import dataclass

from .errors import (
    BudgetExceeded,
    NotALattice,
    NotAPoset,
    OutOfRange,
    RedundantCover,
)

# Brute-force isomorphism (with invariant pruning) is only sane up to here.
ISO_BUDGET = 10


@dataclass(frozen=True)
class PrimeInterval:
    lo: int
    hi: int


@dataclass(frozen=True)
class Lattice:
    n: int
    covers: tuple            # sorted tuple of (lo, hi) covering pairs
    up_bits: tuple           # up_bits[a] = bitmask of {b : a <= b}
    dn_bits: tuple           # dn_bits[b] = bitmask of {a : a <= b}
    join_table: tuple
    meet_table: tuple

    def leq(self, a, b):
        return bool(self.up_bits[a] >> b & 1)

    def join(self, a, b):
        return self.join_table[a][b]

    def meet(self, a, b):
        return self.meet_table[a][b]

    @property
    def bottom(self):
        full = (1 << self.n) - 1
        return next(a for a in range(self.n) if self.up_bits[a] == full)

    @property
    def top(self):
        full = (1 << self.n) - 1
        return next(a for a in range(self.n) if self.dn_bits[a] == full)

    def upper_covers(self, a):
        return sorted(b for (x, b) in self.covers if x == a)

    def lower_covers(self, b):
        return sorted(a for (a, x) in self.covers if x == b)

    def to_json_dict(self):
        return {"n": self.n, "covers": [list(c) for c in self.covers]}


def _closure_from_covers(n, covers):
    """Reflexive-transitive closure of the cover digraph, as up-bitmasks.

    Raises NotAPoset on a cycle.
    """
    succ = [[] for _ in range(n)]
    indeg = [0] * n
    for a, b in covers:
        succ[a].append(b)
        indeg[b] += 1
    order = [v for v in range(n) if indeg[v] == 0]
    queue = list(order)
    while queue:
        v = queue.pop()
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                order.append(w)
                queue.append(w)
    if len(order) != n:
        raise NotAPoset("cover relation contains a cycle")
    up = [1 << v for v in range(n)]
    for v in reversed(order):
        for w in succ[v]:
            up[v] |= up[w]
    return up


def _tables_from_order(n, up, dn):
    """Join/meet tables from the order bitmasks; NotALattice if some pair
    has no least upper bound or no greatest lower bound."""
    join_t = [[0] * n for _ in range(n)]
    meet_t = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            ub = up[a] & up[b]
            j = None
            m = ub
            while m:
                z = (m & -m).bit_length() - 1
                if ub & ~up[z] == 0:
                    j = z
                    break
                m &= m - 1
            if j is None:
                raise NotALattice(f"elements {a} and {b} have no unique join")
            lb = dn[a] & dn[b]
            g = None
            m = lb
            while m:
                z = (m & -m).bit_length() - 1
                if lb & ~dn[z] == 0:
                    g = z
                    break
                m &= m - 1
            if g is None:
                raise NotALattice(f"elements {a} and {b} have no unique meet")
            join_t[a][b] = join_t[b][a] = j
            meet_t[a][b] = meet_t[b][a] = g
    return tuple(map(tuple, join_t)), tuple(map(tuple, meet_t))


def _covers_from_order(n, up, dn):
    out = []
    for a in range(n):
        for b in range(n):
            if a != b and up[a] >> b & 1:
                between = up[a] & dn[b]
                if bin(between).count("1") == 2:
                    out.append((a, b))
    return tuple(sorted(out))


def from_order_bits(n, up):
    """Build a validated Lattice directly from up-bitmasks."""
    dn = [0] * n
    for a in range(n):
        m = up[a]
        while m:
            b = (m & -m).bit_length() - 1
            dn[b] |= 1 << a
            m &= m - 1
    covers = _covers_from_order(n, up, dn)
    join_t, meet_t = _tables_from_order(n, up, dn)
    return Lattice(n, covers, tuple(up), tuple(dn), join_t, meet_t)


def from_covers(n, covers):
    """Validated lattice from a cover list.

    The input pairs must be true covering pairs: a pair implied by
    transitivity is rejected with RedundantCover rather than repaired.
    """
    if n < 1:
        raise OutOfRange(f"n must be >= 1, got {n}")
    seen = set()
    for a, b in covers:
        if not (0 <= a < n and 0 <= b < n):
            raise OutOfRange(f"cover ({a},{b}) outside 0..{n - 1}")
        if a == b:
            raise NotAPoset(f"reflexive cover ({a},{b})")
        seen.add((a, b))
    up = _closure_from_covers(n, sorted(seen))
    lat = from_order_bits(n, up)
    extra = seen - set(lat.covers)
    if extra:
        raise RedundantCover(f"input pairs are not covering pairs: {sorted(extra)}")
    return lat


def chain(n):
    """The n-element chain 0 < 1 < ... < n-1."""
    return from_covers(n, [(i, i + 1) for i in range(n - 1)])


# N5 labels: 0 < P < Q < 4 on the long side, 0 < A < 4 on the short side.
N5_P, N5_Q, N5_A = 1, 2, 3

_NAMED_COVERS = {
    "B4": (4, [(0, 1), (0, 2), (1, 3), (2, 3)]),
    "M3": (5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]),
    "N5": (5, [(0, N5_P), (N5_P, N5_Q), (N5_Q, 4), (0, N5_A), (N5_A, 4)]),
}


def named(ident):
    try:
        n, covers = _NAMED_COVERS[ident]
    except KeyError:
        raise OutOfRange(f"unknown lattice name {ident!r}") from None
    return from_covers(n, covers)


def glued_sum(u, v):
    """Stack v on top of u, identifying top(u) with bottom(v).

    Result size is |u| + |v| - 1; u keeps its labels, the non-bottom
    elements of v get fresh labels in their original order.
    """
    t = u.top
    relabel = {}
    nxt = u.n
    for x in range(v.n):
        if x == v.bottom:
            relabel[x] = t
        else:
            relabel[x] = nxt
            nxt += 1
    covers = list(u.covers)
    covers += [(relabel[a], relabel[b]) for a, b in v.covers]
    return from_covers(u.n + v.n - 1, covers)


def dual(lat):
    """Order-reversed lattice, relabelled i -> n-1-i so dual(dual(L)) == L."""
    n = lat.n
    covers = [(n - 1 - b, n - 1 - a) for a, b in lat.covers]
    return from_covers(n, covers)


def is_chain(lat):
    return count_two_element_antichains(lat) == 0


def count_two_element_antichains(lat):
    n = lat.n
    cnt = 0
    for a in range(n):
        for b in range(a + 1, n):
            if not lat.leq(a, b) and not lat.leq(b, a):
                cnt += 1
    return cnt


def prime_intervals(lat):
    return [PrimeInterval(a, b) for a, b in lat.covers]


def _refined_invariants(n, leq_fn, up_cov, dn_cov):
    """Label-independent invariant per element, refined a la
    Weisfeiler-Leman over the cover graph until stable."""
    up_sz = [sum(1 for b in range(n) if leq_fn(a, b)) for a in range(n)]
    dn_sz = [sum(1 for b in range(n) if leq_fn(b, a)) for a in range(n)]
    raw = [(dn_sz[a], up_sz[a], len(dn_cov[a]), len(up_cov[a])) for a in range(n)]
    ranks = {t: i for i, t in enumerate(sorted(set(raw)))}
    inv = [ranks[t] for t in raw]
    for _ in range(n):
        raw = [
            (
                inv[a],
                tuple(sorted(inv[b] for b in dn_cov[a])),
                tuple(sorted(inv[b] for b in up_cov[a])),
            )
            for a in range(n)
        ]
        ranks = {t: i for i, t in enumerate(sorted(set(raw)))}
        new = [ranks[t] for t in raw]
        if len(set(new)) == len(set(inv)):
            inv = new
            break
        inv = new
    return inv


def canonical_order_matrix(n, leq_fn):
    """Minimal packed order matrix over all invariant-respecting
    relabellings.  Works for any poset given by its order predicate."""
    up_cov = [[] for _ in range(n)]
    dn_cov = [[] for _ in range(n)]
    for a in range(n):
        for b in range(n):
            if a != b and leq_fn(a, b):
                if sum(1 for z in range(n) if leq_fn(a, z) and leq_fn(z, b)) == 2:
                    up_cov[a].append(b)
                    dn_cov[b].append(a)
    inv = _refined_invariants(n, leq_fn, up_cov, dn_cov)
    classes = {}
    for a in range(n):
        classes.setdefault(inv[a], []).append(a)
    groups = [classes[k] for k in sorted(classes)]
    best = None
    for parts in itertools.product(*(itertools.permutations(g) for g in groups)):
        sigma = [x for part in parts for x in part]
        code = 0
        for i in range(n):
            si = sigma[i]
            for j in range(n):
                code = code << 1 | (1 if leq_fn(si, sigma[j]) else 0)
        if best is None or code < best:
            best = code
    nbytes = (n * n + 7) // 8
    return bytes([n]) + best.to_bytes(nbytes, "big")


def canonical_form(lat):
    """Permutation-invariant byte string, injective up to isomorphism."""
    if lat.n > ISO_BUDGET:
        raise BudgetExceeded(f"canonical_form limited to n <= {ISO_BUDGET}")
    return canonical_order_matrix(lat.n, lat.leq)


def are_isomorphic(l1, l2):
    if l1.n != l2.n:
        return False
    return canonical_form(l1) == canonical_form(l2)
