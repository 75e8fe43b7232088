"""Congruences of finite lattices.

The congruence checker verifies that blocks are intervals and that the two
quadrilateral closure conditions (one and its dual) hold.  Principal congruences of covering pairs come from projectivity
reachability over prime intervals; the full congruence lattice is the
join-closure of those join-irreducibles.  A brute-force filter over all
partitions exists as a cross-check oracle.
"""

from dataclasses import dataclass

from . import lattice as lt
from . import partition as pt
from .errors import (
    NotACongruence,
    NotAnAtom,
    NotDistributive,
    NotPrime,
    OutOfRange,
    SizeMismatch,
)


@dataclass(frozen=True)
class CongruenceLattice:
    host_n: int
    members: tuple  # Partition tuple, sorted by (heq, rep)

    def __len__(self):
        return len(self.members)

    def __contains__(self, p):
        return p in set(self.members)

    def index(self, p):
        return self.members.index(p)

    @property
    def bottom(self):
        return pt.bottom(self.host_n)

    @property
    def top(self):
        return pt.top(self.host_n)

    def atoms(self):
        """Members covering the bottom of Con."""
        non_bottom = [m for m in self.members if pt.num_blocks(m) < self.host_n]
        out = []
        for m in non_bottom:
            if not any(p != m and pt.leq(p, m) for p in non_bottom):
                out.append(m)
        return out

    def to_json_dict(self):
        return {
            "host_n": self.host_n,
            "members": [list(m.rep) for m in self.members],
        }


def _sorted_members(n, members):
    return tuple(sorted(set(members), key=lambda p: (pt.heq(p), p.rep)))


def is_congruence(lat, p):
    """Interval blocks + quadrilateral condition + its dual."""
    if p.n != lat.n:
        raise SizeMismatch(f"partition on {p.n} elements vs lattice on {lat.n}")
    for block in p.blocks():
        lo = hi = block[0]
        for x in block[1:]:
            lo = lat.meet(lo, x)
            hi = lat.join(hi, x)
        between = lat.up_bits[lo] & lat.dn_bits[hi]
        if bin(between).count("1") != len(block):
            return False
        # lo/hi in the block is implied when the popcounts match
    for x, y in lat.covers:
        if not p.same_block(x, y):
            continue
        for z in lat.upper_covers(x):
            if z != y and not p.same_block(z, lat.join(y, z)):
                return False
    for y, x in lat.covers:
        if not p.same_block(x, y):
            continue
        for z in lat.lower_covers(x):
            if z != y and not p.same_block(z, lat.meet(y, z)):
                return False
    return True


def perspectivity_closure(lat, seed):
    """Prime intervals collapsed together with the seed: reachability under
    up/down congruence perspectivity steps over all intervals, reporting
    the prime intervals contained in reached intervals.

    The walk must pass through non-prime intervals: in the pentagon the
    short side is reached from the seed (0, p) only via the interval
    [0, q], so a prime-to-prime scan would be incomplete.
    """
    a, b = seed.lo, seed.hi
    if (a, b) not in set(lat.covers):
        raise NotPrime(f"({a},{b}) is not a covering pair")
    n = lat.n
    intervals = [
        (x, y) for x in range(n) for y in range(n) if x != y and lat.leq(x, y)
    ]
    reached = {(a, b)}
    stack = [(a, b)]
    while stack:
        x, y = stack.pop()
        for c, d in intervals:
            if (c, d) in reached:
                continue
            up = lat.join(y, c) == d and lat.leq(x, c)
            down = lat.meet(x, d) == c and lat.leq(d, y)
            if up or down:
                reached.add((c, d))
                stack.append((c, d))
    return {
        lt.PrimeInterval(c, d)
        for c, d in lat.covers
        if any(lat.leq(u, c) and lat.leq(d, v) for u, v in reached)
    }


def _principal_prime(lat, a, b):
    edges = [(iv.lo, iv.hi) for iv in perspectivity_closure(lat, lt.PrimeInterval(a, b))]
    return pt.join_pairs(lat.n, edges)


def _maximal_chain(lat, a, b, prefer_high=False):
    """Some maximal chain from a up to b (a <= b assumed)."""
    out = []
    z = a
    while z != b:
        steps = [w for w in lat.upper_covers(z) if lat.leq(w, b)]
        z2 = max(steps) if prefer_high else min(steps)
        out.append((z, z2))
        z = z2
    return out


def principal_congruence(lat, a, b, prefer_high=False):
    """Least congruence collapsing (a, b).

    Reduction: incomparable pairs go to (meet, join); a comparable pair is
    handled along a maximal chain of covers, joining the prime-interval
    principal congruences.  The result is chain-independent; prefer_high
    only switches which maximal chain is walked (used by tests).
    """
    n = lat.n
    if not (0 <= a < n and 0 <= b < n):
        raise OutOfRange(f"pair ({a},{b}) outside 0..{n - 1}")
    if a == b:
        return pt.bottom(n)
    if not lat.leq(a, b):
        if lat.leq(b, a):
            a, b = b, a
        else:
            a, b = lat.meet(a, b), lat.join(a, b)
    result = pt.bottom(n)
    for x, y in _maximal_chain(lat, a, b, prefer_high):
        result = pt.join(result, _principal_prime(lat, x, y))
    return result


def all_congruences(lat):
    """Con(L) as join-closure of the prime-interval principal congruences."""
    n = lat.n
    jis = []
    seen = set()
    for a, b in lat.covers:
        p = _principal_prime(lat, a, b)
        if p not in seen:
            seen.add(p)
            jis.append(p)
    members = {pt.bottom(n), *jis}
    frontier = list(jis)
    while frontier:
        fresh = []
        for f in frontier:
            for g in jis:
                h = pt.join(f, g)
                if h not in members:
                    members.add(h)
                    fresh.append(h)
        frontier = fresh
    return CongruenceLattice(n, _sorted_members(n, members))


def brute_force_congruences(lat):
    """Oracle route: filter every partition through the checker."""
    members = [p for p in pt.all_partitions(lat.n) if is_congruence(lat, p)]
    return CongruenceLattice(lat.n, _sorted_members(lat.n, members))


def quotient(lat, theta):
    """Quotient lattice on the theta-blocks, plus the element -> block map.

    Blocks are ordered by their least lattice element; the block order uses
    the bottoms of the (interval) blocks.
    """
    if not is_congruence(lat, theta):
        raise NotACongruence("partition is not a congruence of the lattice")
    blocks = theta.blocks()
    bots = []
    for block in blocks:
        lo = block[0]
        for x in block[1:]:
            lo = lat.meet(lo, x)
        bots.append(lo)
    t = len(blocks)
    up = [0] * t
    for i in range(t):
        for j in range(t):
            if lat.leq(bots[i], bots[j]):
                up[i] |= 1 << j
    q = lt.from_order_bits(t, up)
    block_of = [0] * lat.n
    for i, block in enumerate(blocks):
        for x in block:
            block_of[x] = i
    return q, tuple(block_of)


def atoms(c):
    return c.atoms()


def upset_split(c, alpha):
    """(C_A, C_B): the up-set of the atom alpha and its complement."""
    if alpha not in c.atoms():
        raise NotAnAtom("alpha is not an atom of the congruence lattice")
    c_a = [m for m in c.members if pt.leq(alpha, m)]
    c_b = [m for m in c.members if not pt.leq(alpha, m)]
    return c_a, c_b


@dataclass(frozen=True)
class AtomJoinMap:
    atom: object
    mapping: tuple  # ((gamma, alpha join gamma), ...)
    injective: bool
    bijective: bool


def join_with_atom_map(c, alpha):
    """The map C_B -> C_A sending gamma to alpha v gamma."""
    if not is_distributive(c):
        raise NotDistributive("congruence lattice is not distributive")
    c_a, c_b = upset_split(c, alpha)
    pairs = tuple((g, pt.join(alpha, g)) for g in c_b)
    image = {img for _, img in pairs}
    injective = len(image) == len(pairs)
    bijective = injective and len(image) == len(c_a)
    return AtomJoinMap(alpha, pairs, injective, bijective)


def _member_ops(c):
    idx = {m: i for i, m in enumerate(c.members)}
    n = len(c.members)
    join_t = [[0] * n for _ in range(n)]
    meet_t = [[0] * n for _ in range(n)]
    for i, a in enumerate(c.members):
        for j in range(i, n):
            b = c.members[j]
            join_t[i][j] = join_t[j][i] = idx[pt.join(a, b)]
            meet_t[i][j] = meet_t[j][i] = idx[pt.meet(a, b)]
    return join_t, meet_t


TRIPLE_CHECK_LIMIT = 512


def is_distributive(c):
    """Exhaustive triple identity for small Con; forbidden-sublattice scan
    (pentagon/diamond patterns) above the triple budget."""
    join_t, meet_t = _member_ops(c)
    k = len(c.members)
    if k <= TRIPLE_CHECK_LIMIT:
        for a in range(k):
            for b in range(k):
                for d in range(k):
                    if meet_t[a][join_t[b][d]] != join_t[meet_t[a][b]][meet_t[a][d]]:
                        return False
        return True
    # pentagon scan: a < b with some c giving equal joins and meets
    for a in range(k):
        for b in range(k):
            if a == b or meet_t[a][b] != a:
                continue
            for d in range(k):
                if meet_t[a][d] in (a, d) or meet_t[b][d] in (b, d):
                    continue
                if join_t[a][d] == join_t[b][d] and meet_t[a][d] == meet_t[b][d]:
                    return False
    # diamond scan: three pairwise-incomparable with common join and meet
    for a in range(k):
        for b in range(a + 1, k):
            if meet_t[a][b] in (a, b):
                continue
            for d in range(b + 1, k):
                if meet_t[a][d] in (a, d) or meet_t[b][d] in (b, d):
                    continue
                if (
                    join_t[a][b] == join_t[a][d] == join_t[b][d]
                    and meet_t[a][b] == meet_t[a][d] == meet_t[b][d]
                ):
                    return False
    return True


def is_boolean(c):
    """Boolean test, two ways that must agree: distributive + complemented,
    and distributive + the atom-join map bijective for every atom."""
    dist = is_distributive(c)
    if not dist:
        return False
    ats = c.atoms()
    # route (a): complemented.  In a distributive lattice a complement of m,
    # if any, lies above every atom not below m; boolean lattices are
    # atomistic, so the atom-join candidate test is exact.
    by_complements = len(c.members) == 2 ** len(ats)
    if by_complements:
        for m in c.members:
            below = [a for a in ats if pt.leq(a, m)]
            rest = [a for a in ats if not pt.leq(a, m)]
            cand = c.bottom
            for a in rest:
                cand = pt.join(cand, a)
            rebuilt = c.bottom
            for a in below:
                rebuilt = pt.join(rebuilt, a)
            if rebuilt != m or pt.meet(m, cand) != c.bottom or pt.join(m, cand) != c.top:
                by_complements = False
                break
    # route (b): every atom-join map is a bijection
    by_atom_maps = all(join_with_atom_map(c, a).bijective for a in ats)
    if by_complements != by_atom_maps:
        raise AssertionError("boolean test routes disagree; checker defect")
    return by_complements
