"""Set partitions (equivalence relations) on {0..n-1}.

A partition is stored in canonical representative form: ``rep[i]`` is the
least element of the block containing ``i``.  Equal partitions are therefore
bitwise-equal tuples, so they hash and dedup cleanly.
"""

from dataclasses import dataclass

from .errors import BudgetExceeded, OutOfRange, SizeMismatch

# B(12) = 4_213_597 partitions; anything above that is not desk scale.
ALL_PARTITIONS_BUDGET = 12


@dataclass(frozen=True)
class Partition:
    n: int
    rep: tuple

    def __post_init__(self):
        if self.n < 1 or len(self.rep) != self.n:
            raise SizeMismatch(f"rep length {len(self.rep)} != n {self.n}")
        for i, r in enumerate(self.rep):
            if not (0 <= r <= i) or self.rep[r] != r:
                raise SizeMismatch(f"rep {self.rep} is not in canonical form")

    def blocks(self):
        """Blocks as sorted tuples, ordered by least element."""
        by_rep = {}
        for i, r in enumerate(self.rep):
            by_rep.setdefault(r, []).append(i)
        return [tuple(by_rep[r]) for r in sorted(by_rep)]

    def same_block(self, a, b):
        return self.rep[a] == self.rep[b]


def from_labels(labels):
    """Build a Partition from any block-labelling of 0..n-1 (normalizing)."""
    first = {}
    rep = []
    for i, lab in enumerate(labels):
        if lab not in first:
            first[lab] = i
        rep.append(first[lab])
    return Partition(len(rep), tuple(rep))


def bottom(n):
    if n < 1:
        raise OutOfRange(f"n must be >= 1, got {n}")
    return Partition(n, tuple(range(n)))


def top(n):
    if n < 1:
        raise OutOfRange(f"n must be >= 1, got {n}")
    return Partition(n, (0,) * n)


def equ_pair(n, a, b):
    """The least equivalence collapsing exactly {a, b}."""
    if not (0 <= a < n and 0 <= b < n):
        raise OutOfRange(f"pair ({a},{b}) outside 0..{n - 1}")
    if a == b:
        return bottom(n)
    lo, hi = min(a, b), max(a, b)
    rep = list(range(n))
    rep[hi] = lo
    return Partition(n, tuple(rep))


def num_blocks(p):
    return sum(1 for i, r in enumerate(p.rep) if r == i)


def heq(p):
    """Height of p in the equivalence lattice: n minus the block count."""
    return p.n - num_blocks(p)


def leq(p, q):
    """Refinement order: every p-block is inside a q-block."""
    if p.n != q.n:
        raise SizeMismatch(f"universe sizes differ: {p.n} vs {q.n}")
    return all(q.rep[i] == q.rep[p.rep[i]] for i in range(p.n))


def meet(p, q):
    """Common refinement: blocks are intersections of blocks."""
    if p.n != q.n:
        raise SizeMismatch(f"universe sizes differ: {p.n} vs {q.n}")
    return from_labels(list(zip(p.rep, q.rep)))


def join(p, q):
    """Transitive closure of the union, via union-find."""
    if p.n != q.n:
        raise SizeMismatch(f"universe sizes differ: {p.n} vs {q.n}")
    parent = list(range(p.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            if ra > rb:
                ra, rb = rb, ra
            parent[rb] = ra

    for i in range(p.n):
        union(i, p.rep[i])
        union(i, q.rep[i])
    return from_labels([find(i) for i in range(p.n)])


def join_pairs(n, pairs):
    """Least equivalence containing all the given pairs."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise OutOfRange(f"pair ({a},{b}) outside 0..{n - 1}")
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    return from_labels([find(i) for i in range(n)])


def all_partitions(n):
    """Every set partition of {0..n-1}, once, in restricted-growth-string
    lexicographic order (so the list is deterministic)."""
    if n < 1:
        raise OutOfRange(f"n must be >= 1, got {n}")
    if n > ALL_PARTITIONS_BUDGET:
        raise BudgetExceeded(f"all_partitions limited to n <= {ALL_PARTITIONS_BUDGET}")
    out = []
    rgs = [0] * n

    def rec(i, used):
        if i == n:
            out.append(from_labels(rgs))
            return
        for v in range(used + 1):
            rgs[i] = v
            rec(i + 1, max(used, v + 1))

    if n == 1:
        return [bottom(1)]
    rec(1, 1)
    return out
