import pytest

from conergy import congruence as cg
from conergy import lattice as lt
from conergy import partition as pt
from conergy.errors import NotACongruence, NotAnAtom, NotPrime, SizeMismatch


def minimal_collapsing(lat, a, b):
    """Oracle: least partition passing the checker that collapses (a, b)."""
    best = None
    for p in pt.all_partitions(lat.n):
        if p.same_block(a, b) and cg.is_congruence(lat, p):
            if best is None or pt.heq(p) < pt.heq(best):
                best = p
    # the minimum is unique: assert every candidate lies above it
    for p in pt.all_partitions(lat.n):
        if p.same_block(a, b) and cg.is_congruence(lat, p):
            assert pt.leq(best, p)
    return best


def small_lattices():
    yield lt.chain(3)
    yield lt.chain(4)
    yield lt.named("B4")
    yield lt.named("M3")
    yield lt.named("N5")
    yield lt.glued_sum(lt.chain(2), lt.named("B4"))


def test_is_congruence_trivials():
    for lat in small_lattices():
        assert cg.is_congruence(lat, pt.bottom(lat.n))
        assert cg.is_congruence(lat, pt.top(lat.n))


def test_is_congruence_examples():
    n5 = lt.named("N5")
    assert cg.is_congruence(n5, pt.equ_pair(5, lt.N5_P, lt.N5_Q))
    b4 = lt.named("B4")
    # {1, 2} is not convex: 1 and 2 are the incomparable middle elements
    assert not cg.is_congruence(b4, pt.equ_pair(4, 1, 2))
    with pytest.raises(SizeMismatch):
        cg.is_congruence(b4, pt.bottom(5))


def test_checker_matches_closure_oracle():
    # every partition the checker accepts is stable under the generated
    # closure; every partition it rejects is strictly below its closure
    for lat in small_lattices():
        for p in pt.all_partitions(lat.n):
            closed = cg.is_congruence(lat, p)
            pairs = [(i, p.rep[i]) for i in range(lat.n)]
            regenerated = pt.bottom(lat.n)
            for a, b in pairs:
                regenerated = pt.join(regenerated, cg.principal_congruence(lat, a, b))
            assert (regenerated == p) == closed


def test_perspectivity_closure_examples():
    c3 = lt.chain(3)
    assert cg.perspectivity_closure(c3, lt.PrimeInterval(0, 1)) == {lt.PrimeInterval(0, 1)}
    b4 = lt.named("B4")
    assert cg.perspectivity_closure(b4, lt.PrimeInterval(0, 1)) == {
        lt.PrimeInterval(0, 1),
        lt.PrimeInterval(2, 3),
    }
    n5 = lt.named("N5")
    got = cg.perspectivity_closure(n5, lt.PrimeInterval(lt.N5_P, lt.N5_Q))
    assert got == {lt.PrimeInterval(lt.N5_P, lt.N5_Q)}
    with pytest.raises(NotPrime):
        cg.perspectivity_closure(c3, lt.PrimeInterval(0, 2))


def test_monotone_collapse():
    # (c,d) collapsed by con(a,b)  <=>  [c,d] in the projectivity closure
    for lat in small_lattices():
        for a, b in lat.covers:
            con = cg.principal_congruence(lat, a, b)
            closure = cg.perspectivity_closure(lat, lt.PrimeInterval(a, b))
            for c, d in lat.covers:
                assert con.same_block(c, d) == (lt.PrimeInterval(c, d) in closure)


def test_principal_congruence_examples():
    c3 = lt.chain(3)
    assert cg.principal_congruence(c3, 0, 1).blocks() == [(0, 1), (2,)]
    n5 = lt.named("N5")
    got = cg.principal_congruence(n5, lt.N5_P, lt.N5_Q)
    assert got == pt.equ_pair(5, lt.N5_P, lt.N5_Q)
    for lat in small_lattices():
        for a in range(lat.n):
            assert cg.principal_congruence(lat, a, a) == pt.bottom(lat.n)


def test_principal_congruence_matches_minimal_oracle():
    for lat in small_lattices():
        for a in range(lat.n):
            for b in range(a + 1, lat.n):
                assert cg.principal_congruence(lat, a, b) == minimal_collapsing(lat, a, b)


def test_principal_congruence_chain_independent():
    for lat in small_lattices():
        bot, top = lat.bottom, lat.top
        low = cg.principal_congruence(lat, bot, top, prefer_high=False)
        high = cg.principal_congruence(lat, bot, top, prefer_high=True)
        assert low == high


def test_all_congruences_counts():
    for n in range(1, 8):
        assert len(cg.all_congruences(lt.chain(n))) == 2 ** (n - 1)
    assert len(cg.all_congruences(lt.named("N5"))) == 5
    assert len(cg.all_congruences(lt.named("M3"))) == 2


def test_all_congruences_matches_brute_force():
    for lat in small_lattices():
        assert cg.all_congruences(lat).members == cg.brute_force_congruences(lat).members


def test_con_closed_under_join_meet():
    for lat in small_lattices():
        con = cg.all_congruences(lat)
        members = set(con.members)
        for p in members:
            for q in members:
                assert pt.join(p, q) in members
                assert pt.meet(p, q) in members


def test_con_duality():
    for lat in small_lattices():
        c1 = cg.all_congruences(lat)
        c2 = cg.all_congruences(lt.dual(lat))
        assert len(c1) == len(c2)
        assert sorted(pt.heq(m) for m in c1.members) == sorted(pt.heq(m) for m in c2.members)


def test_quotient_examples():
    n5 = lt.named("N5")
    theta = cg.principal_congruence(n5, lt.N5_P, lt.N5_Q)
    q, block_map = cg.quotient(n5, theta)
    assert lt.are_isomorphic(q, lt.named("B4"))
    assert len(set(block_map)) == q.n
    for lat in small_lattices():
        q0, m0 = cg.quotient(lat, pt.bottom(lat.n))
        assert lt.are_isomorphic(q0, lat)
        q1, _ = cg.quotient(lat, pt.top(lat.n))
        assert q1.n == 1
        assert list(m0) == list(range(lat.n))
    with pytest.raises(NotACongruence):
        cg.quotient(lt.named("B4"), pt.equ_pair(4, 1, 2))


def test_quotient_size_law_and_block_arithmetic():
    for lat in small_lattices():
        for theta in cg.all_congruences(lat).members:
            q, block_map = cg.quotient(lat, theta)
            assert q.n == lat.n - pt.heq(theta)
            # block joins/meets agree with arithmetic on the host
            for x in range(lat.n):
                for y in range(lat.n):
                    assert block_map[lat.join(x, y)] == q.join(block_map[x], block_map[y])
                    assert block_map[lat.meet(x, y)] == q.meet(block_map[x], block_map[y])


def test_atoms_and_upset_split():
    c3 = lt.chain(3)
    con = cg.all_congruences(c3)
    ats = con.atoms()
    assert len(ats) == 2
    for alpha in ats:
        c_a, c_b = cg.upset_split(con, alpha)
        assert len(c_a) == len(c_b) == 2
        assert sorted(c_a + c_b, key=lambda p: (pt.heq(p), p.rep)) == list(con.members)
        assert pt.bottom(3) in c_b
    with pytest.raises(NotAnAtom):
        cg.upset_split(con, pt.top(3))


def test_upset_size_equals_quotient_con_size():
    for lat in small_lattices():
        con = cg.all_congruences(lat)
        for alpha in con.atoms():
            c_a, _ = cg.upset_split(con, alpha)
            q, _ = cg.quotient(lat, alpha)
            assert len(c_a) == len(cg.all_congruences(q))


def test_join_with_atom_map():
    con = cg.all_congruences(lt.chain(3))
    for alpha in con.atoms():
        m = cg.join_with_atom_map(con, alpha)
        assert m.injective and m.bijective
    n5con = cg.all_congruences(lt.named("N5"))
    alpha = cg.principal_congruence(lt.named("N5"), lt.N5_P, lt.N5_Q)
    assert alpha in n5con.atoms()
    m = cg.join_with_atom_map(n5con, alpha)
    assert m.injective
    # bijectivity must line up with the boolean verdict atom by atom
    assert cg.is_boolean(n5con) == all(
        cg.join_with_atom_map(n5con, a).bijective for a in n5con.atoms()
    )


def test_atom_map_injective_for_all_small_lattices():
    for lat in small_lattices():
        con = cg.all_congruences(lat)
        assert cg.is_distributive(con)
        for alpha in con.atoms():
            assert cg.join_with_atom_map(con, alpha).injective


def test_distributive_boolean_verdicts():
    for n in range(1, 7):
        con = cg.all_congruences(lt.chain(n))
        assert cg.is_distributive(con)
        assert cg.is_boolean(con)
    n5con = cg.all_congruences(lt.named("N5"))
    assert cg.is_distributive(n5con)
    assert not cg.is_boolean(n5con)  # five elements cannot be boolean
    m3con = cg.all_congruences(lt.named("M3"))
    assert cg.is_boolean(m3con)  # the two-element chain
