"""Lattice enumeration and the E8 Jacobi theta series."""

from fractions import Fraction

import pytest

from jacobiforms import catalog as cat
from jacobiforms import lattice


def test_root_counts():
    assert lattice.vector_counts("E8", 2)[2] == 240
    assert lattice.vector_counts("E7", 2)[2] == 126
    assert lattice.vector_counts("A7", 2)[2] == 56
    for name in ("E8", "E7", "A7"):
        assert lattice.vector_counts(name, 0) == {0: 1}
    with pytest.raises(ValueError):
        lattice.vector_counts("D4", 2)


def test_e8_theta_series_counts_match_e4():
    # the z = 0 restriction of the Jacobi theta series is the E8 theta = E_4
    th = lattice.jacobi_theta_e8(lattice.U2, 6)
    assert th.eval_z0().agrees_with(cat.eisenstein(4, 6))
    counts = lattice.vector_counts("E8", 10)
    e4 = cat.eisenstein(4, 6)
    for norm in range(0, 11, 2):
        assert counts.get(norm, 0) == e4.coefficient(norm // 2)


def test_membership_and_primitivity():
    assert lattice.in_e8(lattice.U2) and lattice.in_e8(lattice.U8)
    assert lattice.is_primitive_e8(lattice.U8)
    assert lattice.in_e8([Fraction(1, 2)] * 8)
    assert not lattice.in_e8((1, 0, 0, 0, 0, 0, 0, 0))  # odd coordinate sum
    assert not lattice.in_e8([Fraction(1, 2)] * 7 + [Fraction(1, 3)])
    with pytest.raises(ValueError):
        lattice.jacobi_theta_e8((1, 0, 0, 0, 0, 0, 0, 0), 4)


def test_theta_on_root_is_e41():
    assert lattice.jacobi_theta_e8(lattice.U2, 6).mismatch(cat.jacobi_eis_m1(4, 6)) is None


def test_theta_on_primitive_norm8_is_e44():
    assert lattice.jacobi_theta_e8(lattice.U8, 6).mismatch(cat.jacobi_eis(4, 4, 6)) is None


def test_theta_independent_of_vector_in_orbit():
    # a different root, including one from the half-integer coset
    other_roots = [
        (0, 0, 0, 1, 0, 0, -1, 0),
        tuple([Fraction(1, 2)] * 6 + [Fraction(-1, 2)] * 2),
    ]
    reference = lattice.jacobi_theta_e8(lattice.U2, 5)
    for u in other_roots:
        if all(isinstance(x, int) for x in u):
            assert lattice.jacobi_theta_e8(u, 5).mismatch(reference) is None


def test_theta_halfinteger_vector_rejected_with_message():
    with pytest.raises(ValueError):
        lattice.jacobi_theta_e8(tuple([Fraction(1, 2)] * 8), 4)


def test_eisenstein_zero_coefficients_count_complement_roots():
    # e_{4,1}(n, 0) counts E7 vectors of norm 2n; e_{4,4}(n, 0) counts A7 ones
    e41 = cat.jacobi_eis_m1(4, 5)
    e44 = cat.jacobi_eis(4, 4, 5)
    e7 = lattice.vector_counts("E7", 8)
    a7 = lattice.vector_counts("A7", 8)
    for n in range(5):
        assert e41.coefficient(n, 0) == e7.get(2 * n, 0)
        assert e44.coefficient(n, 0) == a7.get(2 * n, 0)
