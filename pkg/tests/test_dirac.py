from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from orthobgg.dirac import (
    CliffordElement,
    Convention,
    DiracError,
    PolyField,
    anticommutator_identity,
    blade_name,
    blade_product,
    clifford_mul,
    dirac,
    grade_basis,
    kth_component,
    laplacian,
    laplacian_identity,
    monomials,
    sequence_k2,
    verify_complex,
)


def naive_product(a, b):
    """Multiply blades as index words: bubble sort, e_i e_i = -1."""
    word = [i for i in range(8) if a >> i & 1] + [i for i in range(8) if b >> i & 1]
    sign = 1
    changed = True
    while changed:
        changed = False
        for t in range(len(word) - 1):
            if word[t] > word[t + 1]:
                word[t], word[t + 1] = word[t + 1], word[t]
                sign = -sign
                changed = True
            elif word[t] == word[t + 1]:
                del word[t : t + 2]
                sign = -sign
                changed = True
                break
    mask = 0
    for i in word:
        mask |= 1 << i
    return sign, mask


def test_blade_product_matches_word_reduction():
    for a in range(16):
        for b in range(16):
            assert blade_product(a, b) == naive_product(a, b)


def test_clifford_relations():
    n = 4
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            ei, ej = CliffordElement.gen(n, i), CliffordElement.gen(n, j)
            expected = CliffordElement.scalar(n, -2 if i == j else 0)
            assert ei * ej + ej * ei == expected
    e = CliffordElement.blade(4, [1, 2, 3, 4])
    assert e * e == CliffordElement.scalar(4, 1)
    assert str(CliffordElement.blade(3, [1, 3]) - CliffordElement.scalar(3, Fraction(1, 2))) == "-1/2 + e13"
    assert blade_name(0b101) == "e13"
    with pytest.raises(DiracError):
        CliffordElement.gen(3, 4)


clifford = st.builds(
    lambda cs: CliffordElement(4, dict(enumerate(cs))),
    st.lists(st.integers(-3, 3), min_size=16, max_size=16),
)


@given(clifford, clifford, clifford)
def test_clifford_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert clifford_mul(a, b) == a * b
    assert (2 * a) * b == 2 * (a * b)


def test_grade_basis():
    assert grade_basis(3, 0) == [0]
    assert sorted(grade_basis(3, 1)) == [0, 1, 2, 4]
    assert len(grade_basis(4, 2)) == 11
    assert len(grade_basis(4, 4)) == 16


def test_monomials():
    assert len(list(monomials(4, 2))) == 15
    assert list(monomials(2, 1)) == [(0, 0), (1, 0), (0, 1)]


def x(k, n, *pairs, value=None):
    powers = {}
    for p in pairs:
        powers[p] = powers.get(p, 0) + 1
    return PolyField.monomial(k, n, powers, value)


def test_dirac_examples():
    n = 3
    e = [None] + [CliffordElement.gen(n, j) for j in range(1, n + 1)]
    assert dirac(1, x(2, n, (1, 1))) == x(2, n, value=e[1])
    assert dirac(2, x(2, n, (1, 1))).is_zero()
    assert dirac(1, x(2, n, (1, 1), (1, 1))) == x(2, n, (1, 1), value=e[1]).scale(2)
    assert dirac(1, x(2, n, (1, 1), value=e[1])) == x(2, n).scale(-1)
    assert str(dirac(1, x(2, n, (1, 2), (2, 3)))) == "1*x23*e2"
    with pytest.raises(DiracError):
        dirac(3, x(2, n, (1, 1)))
    with pytest.raises(DiracError):
        x(2, n, (3, 1))


@st.composite
def fields(draw, k=2, n=3):
    exps = list(monomials(k * n, 3))
    blades = grade_basis(n, n)
    terms = {}
    for _ in range(draw(st.integers(1, 4))):
        terms[(draw(st.sampled_from(exps)), draw(st.sampled_from(blades)))] = Fraction(draw(st.integers(-4, 4)))
    return PolyField(k, n, terms)


@given(fields())
def test_laplacian_and_anticommutator_identities(f):
    for i in (1, 2):
        assert laplacian_identity(i, f).is_zero()
        assert dirac(i, dirac(i, f)) == laplacian(i, f).scale(-1)
    assert anticommutator_identity(1, 2, f).is_zero()


@given(fields())
def test_operators_lower_degree(f):
    for g in sequence_k2(1, [f]):
        assert g.degrees() <= {d - 1 for d in f.degrees()}


@given(fields(), fields(), fields())
def test_both_compositions_vanish(f, g1, g2):
    assert all(r.is_zero() for r in sequence_k2(2, sequence_k2(1, [f])))
    assert sequence_k2(3, sequence_k2(2, [g1, g2])).is_zero()
    alt = Convention(alternative=True)
    assert all(r.is_zero() for r in sequence_k2(2, sequence_k2(1, [f], alt), alt))
    assert sequence_k2(3, sequence_k2(2, [g1, g2], alt), alt).is_zero()


def test_sequence_examples():
    n = 2
    e1, e2 = CliffordElement.gen(n, 1), CliffordElement.gen(n, 2)
    f = x(2, n, (1, 1), (2, 2))
    g1, g2 = sequence_k2(1, [f])
    assert g1 == x(2, n, (2, 2), value=e1)
    assert g2 == x(2, n, (1, 1), value=e2)
    with pytest.raises(DiracError):
        sequence_k2(2, [f])
    with pytest.raises(DiracError):
        sequence_k2(4, [f, f])


def test_kth_component():
    f = x(2, 3, (1, 1), (1, 2), (2, 1), (2, 3))
    g = sequence_k2(1, [f])
    h = [x(2, 3, (1, 1), (2, 2), (2, 2)), x(2, 3, (1, 3), (1, 3), (2, 1))]
    assert kth_component(h) == sequence_k2(2, h)[1]
    assert kth_component(list(g)).is_zero()
    # three variables: the last component kills gradients
    k3 = x(3, 3, (1, 1), (2, 2), (3, 3), (3, 1))
    grads = [dirac(i, k3) for i in (1, 2, 3)]
    assert kth_component(grads).is_zero()
    with pytest.raises(DiracError):
        kth_component([k3])


@pytest.mark.parametrize("n", [2, 3])
def test_verify_complex_exhaustive(n):
    rep = verify_complex(n, 3)
    assert rep.ok and rep.failures == [] and rep.laplacian_failures == 0
    assert rep.inputs == len(list(monomials(2 * n, 3))) * len(grade_basis(n, 2))
    assert 0 < rep.nonzero_inputs < rep.inputs


def test_vacuous_degree_zero():
    rep = verify_complex(2, 0)
    assert rep.ok and rep.inputs == 4 and rep.nonzero_inputs == 0


def test_mutation_is_caught_from_degree_three():
    bad = Convention(mutate=True)
    assert verify_complex(2, 2, conv=bad).ok
    rep = verify_complex(2, 3, conv=bad)
    assert not rep.ok
    assert "2o1" in {f["check"] for f in rep.failures}


def test_alternative_conventions():
    assert verify_complex(3, 3, conv=Convention(alternative=True)).ok
    rep = verify_complex(3, 3, conv=Convention(alternative=True, literal_third=True))
    assert not rep.ok
    assert {f["check"] for f in rep.failures} == {"3o2"}


def test_random_mode_is_reproducible():
    a = verify_complex(3, 4, mode="random", trials=30, seed=7)
    b = verify_complex(3, 4, mode="random", trials=30, seed=7)
    assert a.as_dict() == b.as_dict() and a.ok and a.inputs == 30


def test_guards():
    with pytest.raises(DiracError):
        verify_complex(9, 2)
    with pytest.raises(DiracError):
        verify_complex(2, 9)
    with pytest.raises(DiracError):
        verify_complex(2, 1, mode="sometimes")
