import pytest
from hypothesis import given, strategies as st

from termspace.corpus import chain_semilattice, cyclic
from termspace.monoid import (DuplicateName, ElementSet, FiniteMonoid, IdentityLawFails,
                              MismatchedMonoid, NotAssociative, NotCommutative, OrderTooLarge,
                              OutOfRangeEntry, ShapeError, UnknownIdentityName, evaluate,
                              is_isomorphic, nonunits, permute, power, set_product, units,
                              validate_monoid)

from . import oracles


def test_boolean_table_is_valid():
    m = validate_monoid(["0", "1"], [[0, 0], [0, 1]], "1")
    assert m.order == 2 and m.identity == 1


def test_z4_is_valid():
    m = validate_monoid(["0", "1", "2", "3"], oracles.mod_table(4), "1")
    assert m.table == tuple(map(tuple, oracles.mod_table(4)))


def test_identity_law_failure_names_element():
    # e*a = e breaks the identity law at a
    with pytest.raises(IdentityLawFails) as exc:
        validate_monoid(["e", "a"], [[0, 0], [0, 1]], "e")
    assert exc.value.witness == (1,)


@pytest.mark.parametrize("names, table, identity, error, witness", [
    (["a", "a"], [[0, 1], [1, 1]], "a", DuplicateName, ("a",)),
    (["1", "a"], [[0, 1], [1, 1]], "z", UnknownIdentityName, ("z",)),
    (["1", "a"], [[0, 1], [1, 2]], "1", OutOfRangeEntry, (1, 1, 2)),
    (["1", "a", "b"], [[0, 1, 2], [1, 1, 1], [2, 2, 2]], "1", NotCommutative, (1, 2)),
    (["1", "a", "b"], [[0, 1, 2], [1, 0, 0], [2, 0, 0]], "1", NotAssociative, (1, 1, 2)),
])
def test_validation_errors_carry_witnesses(names, table, identity, error, witness):
    with pytest.raises(error) as exc:
        validate_monoid(names, table, identity)
    assert exc.value.witness == witness


def test_shape_errors():
    with pytest.raises(ShapeError):
        validate_monoid([], [], "1")
    with pytest.raises(ShapeError):
        validate_monoid(["1", "a"], [[0, 1]], "1")


def test_evaluate_and_power(z4):
    assert evaluate(z4, 2, 2) == 0
    assert evaluate(z4, z4.identity, 3) == 3
    assert power(z4, 3, 2) == 1
    with pytest.raises(IndexError):
        evaluate(z4, 4, 0)
    with pytest.raises(ValueError):
        power(z4, 2, 0)


@given(n=st.integers(1, 12), a=st.integers(0, 11), k=st.integers(1, 40))
def test_power_matches_modular_exponentiation(n, a, k):
    from termspace.corpus import z_mult
    a %= n
    assert power(z_mult(n), a, k) == pow(a, k, n)


@pytest.mark.parametrize("n, expected", [(4, {1, 3}), (6, {1, 5}), (1, {0})])
def test_units(n, expected):
    from termspace.corpus import z_mult
    m = z_mult(n)
    assert set(units(m)) == expected == oracles.units(oracles.mod_table(n), 1 % n)


def test_units_closed_under_product(corpus4):
    for m in corpus4:
        u = units(m)
        assert m.identity in u
        assert set_product(m, u, u) <= u
        assert nonunits(m) == u.complement()


def test_set_product(z4):
    two = z4.subset([2])
    assert set_product(z4, two, two) == z4.subset([0])
    s = z4.subset([0, 3])
    assert set_product(z4, s, z4.subset([z4.identity])) == s
    assert not set_product(z4, ElementSet(4), s)
    with pytest.raises(MismatchedMonoid):
        set_product(z4, s, ElementSet.of(3, [0]))


def test_element_set_basics():
    s = ElementSet.of(5, [0, 3])
    t = ElementSet.of(5, [3, 4])
    assert list(s) == [0, 3] and len(s) == 2 and 3 in s and 1 not in s
    assert s & t == ElementSet.of(5, [3])
    assert s | t == ElementSet.of(5, [0, 3, 4])
    assert ElementSet.of(5, [3]) < s
    with pytest.raises(ValueError):
        ElementSet.of(2, [2])
    with pytest.raises(MismatchedMonoid):
        s & ElementSet.of(4, [0])


def test_isomorphism_examples():
    boolean = FiniteMonoid.from_table([[0, 0], [0, 1]], identity=1, names=["0", "1"])
    z2_mult = validate_monoid(["0", "1"], oracles.mod_table(2), "1")
    group = FiniteMonoid.from_table([[0, 1], [1, 0]])
    assert is_isomorphic(boolean, boolean) == (0, 1)
    assert is_isomorphic(z2_mult, boolean) == (0, 1)
    assert is_isomorphic(group, boolean) is None
    assert is_isomorphic(cyclic(1, 1), chain_semilattice(2)) is not None


def test_isomorphism_cap():
    from termspace.corpus import z_mult
    with pytest.raises(OrderTooLarge):
        is_isomorphic(z_mult(7), z_mult(7))
    assert is_isomorphic(z_mult(7), z_mult(7), max_order=7) == tuple(range(7))


@given(data=st.data())
def test_isomorphism_finds_relabelling(corpus4, data):
    m = data.draw(st.sampled_from(corpus4))
    perm = data.draw(st.permutations(range(m.order)))
    m2 = permute(m, perm)
    wit = is_isomorphic(m, m2)
    assert wit is not None
    assert all(m2.table[wit[a]][wit[b]] == wit[m.table[a][b]]
               for a in range(m.order) for b in range(m.order))
    inverse = [0] * m.order
    for a, b in enumerate(wit):
        inverse[b] = a
    assert all(m.table[inverse[x]][inverse[y]] == inverse[m2.table[x][y]]
               for x in range(m.order) for y in range(m.order))
    assert is_isomorphic(m2, m) is not None


def test_mixed_subclass_comparisons(z4):
    from termspace.ideals import Ideal
    s = ElementSet.of(4, [0])
    i = Ideal(4, 0b101)
    assert s <= i and s < i and i >= s and i > s
    assert not (i <= s) and not (s >= i)
