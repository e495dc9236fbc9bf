"""Smoke tests for the python bindings."""

import math

import pytest

import mmsp

BOUND = dict(v0=1.0, a=math.sqrt(2.0), b=-math.sqrt(1.28), alpha=0.5)


def test_eval_potential():
    p = mmsp.PotentialParams(v0=1.0, a=1.0, b=1.0, alpha=0.5)
    # at e^{-2 alpha r} = 1/2 the value is -9
    assert mmsp.eval_potential(p, math.log(2.0)) == pytest.approx(-9.0)


def test_ground_state_energy():
    p = mmsp.PotentialParams(**BOUND)
    ctx = mmsp.PhysicalContext()
    rec = mmsp.energy_level(p, ctx, 0, 0, mmsp.ApproximationScheme.greene_aldrich())
    assert rec.energy == pytest.approx(-2.125, abs=1e-12)
    assert rec.validity.valid
    assert rec.s_exponent == pytest.approx(0.5, abs=1e-12)


def test_schemes_coincide_at_l0():
    p = mmsp.PotentialParams(**BOUND)
    ctx = mmsp.PhysicalContext()
    ga = mmsp.energy_level(p, ctx, 0, 0, mmsp.ApproximationScheme.greene_aldrich())
    pk = mmsp.energy_level(p, ctx, 0, 0, mmsp.ApproximationScheme.pekeris())
    assert ga.energy == pytest.approx(pk.energy, abs=1e-12)


def test_enumerate_spectrum():
    p = mmsp.PotentialParams(**BOUND)
    ctx = mmsp.PhysicalContext()
    records, n_max = mmsp.enumerate_spectrum(
        p, ctx, 0, mmsp.ApproximationScheme.greene_aldrich(), 3
    )
    assert n_max == 0
    assert len(records) == 4
    assert records[0].validity.valid
    assert not records[1].validity.valid


def test_solve_quantization_matches_closed_form():
    p = mmsp.PotentialParams(**BOUND)
    ctx = mmsp.PhysicalContext()
    eps = mmsp.solve_quantization(p, ctx, 0, 0, mmsp.ApproximationScheme.greene_aldrich())
    assert eps == pytest.approx(4.25, abs=1e-10)


def test_jacobi_p():
    assert mmsp.jacobi_p(0, 0.5, 0.5, 0.3) == 1.0
    assert mmsp.jacobi_p(2, 0.0, 0.0, 0.5) == pytest.approx(-0.125)


def test_radial_table_normalized():
    p = mmsp.PotentialParams(**BOUND)
    ctx = mmsp.PhysicalContext()
    table = mmsp.radial_table(p, ctx, 0, 0, mmsp.ApproximationScheme.greene_aldrich())
    assert table.node_count == 0
    integral = sum(
        0.5 * (y1 * y1 + y0 * y0) * (r1 - r0)
        for r0, r1, y0, y1 in zip(
            table.grid, table.grid[1:], table.values, table.values[1:]
        )
    )
    assert integral == pytest.approx(1.0, abs=1e-8)


def test_oracle_agrees_loosely():
    p = mmsp.PotentialParams(**BOUND)
    ctx = mmsp.PhysicalContext()
    res = mmsp.oracle_solve(p, ctx, 0, k=1, points=4000)
    assert res.richardson_estimate[0] == pytest.approx(-2.125, rel=2e-2)


def test_supercritical_raises():
    p = mmsp.PotentialParams(v0=10.0, a=1.0, b=1.0, alpha=0.3)
    ctx = mmsp.PhysicalContext()
    with pytest.raises(mmsp.SupercriticalError):
        mmsp.energy_level(p, ctx, 0, 0, mmsp.ApproximationScheme.greene_aldrich())


def test_non_normalizable_table_raises():
    p = mmsp.PotentialParams(v0=1.0, a=0.3, b=0.2, alpha=1.0)
    ctx = mmsp.PhysicalContext()
    with pytest.raises(mmsp.InvalidStateError):
        mmsp.radial_table(p, ctx, 0, 0, mmsp.ApproximationScheme.greene_aldrich())
