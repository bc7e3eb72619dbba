import pytest

from termspace.ideals import (EmptyGeneratorSet, IdealNotInLattice, arithmetic_check,
                              classify_ideal, enumerate_ideals, generated_ideal, is_ideal,
                              lattice_analysis, principal_ideal, product_ideal, radical, whole)
from termspace.monoid import ElementSet, nonunits

from . import oracles


def sets(lattice):
    return [set(I) for I in lattice]


def test_is_ideal_examples(z4):
    assert is_ideal(z4, z4.subset([0, 2])) == (True, None)
    assert is_ideal(z4, z4.subset([2])) == (False, (2, 2))
    assert is_ideal(z4, z4.full()) == (True, None)
    assert is_ideal(z4, ElementSet(4)) == (False, ("empty",))


def test_generated_ideal(z4, z6):
    assert set(generated_ideal(z4, z4.subset([2]))) == {0, 2}
    assert generated_ideal(z4, z4.subset([z4.identity])) == z4.full()
    assert set(generated_ideal(z6, z6.subset([0]))) == {0}
    with pytest.raises(EmptyGeneratorSet):
        generated_ideal(z4, ElementSet(4))


def test_enumerate_ideals_examples(z4, z6, trivial):
    assert sets(enumerate_ideals(z4)) == [{0}, {0, 2}, {0, 1, 2, 3}]
    assert sets(enumerate_ideals(z6)) == [{0}, {0, 3}, {0, 2, 4}, {0, 2, 3, 4}, set(range(6))]
    assert sets(enumerate_ideals(trivial)) == [{0}]


def test_enumerate_ideals_matches_subset_scan(corpus4):
    for m in corpus4:
        table = [list(r) for r in m.table]
        assert {frozenset(I) for I in enumerate_ideals(m)} == oracles.all_ideals(table)


def test_every_ideal_is_union_of_principals(corpus4):
    for m in corpus4:
        for I in enumerate_ideals(m):
            union = ElementSet(m.order)
            for a in I:
                union = union | principal_ideal(m, a)
            assert union == I


def test_product_and_radical(z4, z6):
    i = z4.subset([0, 2])
    lat = enumerate_ideals(z4)
    I = lat[lat.position(i)]
    assert set(product_ideal(z4, I, I)) == {0}
    assert product_ideal(z4, I, whole(z4)) == I
    assert set(radical(z4, z4.subset([0]))) == {0, 2}
    assert set(radical(z6, z6.subset([0]))) == {0}


def test_radical_matches_oracle(corpus4):
    for m in corpus4:
        table = [list(r) for r in m.table]
        for I in enumerate_ideals(m):
            r = radical(m, I)
            assert frozenset(r) == oracles.radical(table, frozenset(I))
            assert I <= r and radical(m, r) == r


def test_classify_z4_maximal(z4):
    lat = enumerate_ideals(z4)
    c = classify_ideal(z4, z4.subset([0, 2]), lat)
    assert all(c.flags().values())
    assert c.witnesses == {}


def test_classify_z6_zero_ideal(z6):
    lat = enumerate_ideals(z6)
    c = classify_ideal(z6, z6.subset([0]), lat)
    assert c.proper and c.semiprime
    assert not c.prime and c.witnesses["prime"] == (2, 3)
    assert not c.strongly_irreducible
    a, b = c.witnesses["strongly_irreducible"]
    assert (set(a), set(b)) == ({0, 3}, {0, 2, 4})


def test_classify_whole_monoid(z6):
    lat = enumerate_ideals(z6)
    c = classify_ideal(z6, z6.full(), lat)
    assert not any(c.flags().values())
    assert set(c.witnesses) == set(c.FLAGS)


def test_classify_requires_lattice_member(z4):
    with pytest.raises(IdealNotInLattice):
        classify_ideal(z4, z4.subset([2]), enumerate_ideals(z4))


def test_classification_matches_definitions(corpus4):
    for m in corpus4:
        table = [list(r) for r in m.table]
        ideals = oracles.all_ideals(table)
        lat = enumerate_ideals(m)
        for c in lat.classifications:
            I = frozenset(c.ideal)
            assert c.strongly_irreducible == oracles.is_strongly_irreducible(table, I, ideals)
            assert c.prime == oracles.is_prime(table, I)
            assert c.irreducible == oracles.is_irreducible(table, I, ideals)
            for flag, value in c.flags().items():
                if not value:
                    assert flag in c.witnesses


def test_implications_and_unique_maximal(corpus4):
    for m in corpus4:
        lat = enumerate_ideals(m)
        for c in lat.classifications:
            assert not c.prime or c.strongly_irreducible
            assert not c.strongly_irreducible or c.irreducible
            assert not c.maximal or c.prime
        nu = nonunits(m)
        if nu:
            assert lat.with_flag("maximal") == (nu,)
            assert all(I <= nu for I in lat.proper)


@pytest.mark.parametrize("family", ["z_mult(6)", "z_mult(4)", "z_mult(1)"])
def test_lattice_distributive_examples(family):
    from termspace.corpus import make_family
    assert lattice_analysis(enumerate_ideals(make_family(family))).is_distributive


def test_every_corpus_lattice_is_distributive(corpus4):
    # ideals form a ring of sets, so this is expected to hold everywhere
    for m in corpus4:
        assert lattice_analysis(enumerate_ideals(m)).is_distributive


def test_arithmetic_examples(z4, z6, trivial):
    for m in (z4, z6, trivial):
        res = arithmetic_check(m, enumerate_ideals(m))
        assert res.side_a and res.side_b and res.agree and res.witness is None


def test_lattice_ring_of_sets(corpus4):
    for m in corpus4:
        lat = enumerate_ideals(m)
        bits = {I.bits for I in lat}
        assert all(a.bits & b.bits in bits and a.bits | b.bits in bits for a in lat for b in lat)
        assert lat.top == m.full()


def test_hasse_edges(z4, z6):
    assert enumerate_ideals(z4).hasse_edges() == [(0, 1), (1, 2)]
    assert sorted(enumerate_ideals(z6).hasse_edges()) == [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)]
