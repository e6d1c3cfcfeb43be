from fractions import Fraction

import pytest

import reflalg as ra


@pytest.fixture(scope="module")
def table():
    return ra.EulerTable.build(12)


@pytest.fixture(scope="module")
def tower(table):
    return ra.build_tower(2, table)


def test_scalars():
    x = ra.x
    assert str((x - 1) * x) == "x^2 - x"
    assert ra.CPoly.divexact(x**4 - 2 * x**3 + x, x - 1) == x**3 - x**2 - x
    with pytest.raises(ra.AlgebraError):
        ra.CPoly.divexact(x**2 - x, x + 1)


def test_euler(table):
    assert str(table.euler(2)) == "x^2 - x"
    assert ra.bernoulli(2, table) == Fraction(1, 6)
    assert all(ra.check_prE(n, table).is_zero() for n in range(5))
    assert ra.check_functional_relation(10, ra.EulerTable.build(12))


def test_enveloping():
    e, f, h = ra.NCPoly.e(), ra.NCPoly.f(), ra.NCPoly.h()
    assert str(e * f) == "f1*e1 + h1"
    assert str(ra.casimir(1)) == "4*f1*e1 + h1^2 + 2*h1"
    assert ra.commutator(ra.casimir(1), e).is_zero()
    assert ra.embed(e, 1) == ra.NCPoly.e(2)


def test_spectral():
    assert ra.yang_baxter_residual_terms() == 0
    assert ra.rll_residual_terms(1) == (0, 0)


def test_tower(tower):
    assert [t.level for t in tower] == [0, 1, 2]
    assert all(t.reflection_residual_terms() == 0 for t in tower[:2])
    one = tower[1]
    assert one.gen("h_0") == ra.NCPoly.h(1) + ra.NCPoly(ra.mu0)
    assert sorted(one.generators) == ["e_1", "f_1", "h_0", "hbar_0", "mu"]
    assert one.is_central(one.gen("mu"))
    assert not one.is_central(one.gen("h_0"))


def test_presentations(tower):
    one, two = tower[1], tower[2]
    for suite in (ra.check_higgs_n1(one), ra.hahn_check(one), ra.check_center_n1(one), ra.check_n2(two)):
        assert all(ok for _, ok, _, _ in suite)
    plain = ra.serre_check(ra.NCPoly.h(), ra.NCPoly.e(), ra.NCPoly.f())
    assert [ok for _, ok, _, _ in plain] == [True, True, False, False]
    center = {label: ok for label, ok, _, _ in ra.check_center_n2(two)}
    assert center["[delta_4,e_1] = 0"]
    assert not center["[delta_2,e_1] = 0"]
