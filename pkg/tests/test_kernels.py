"""Both kernel backends against each other and against scalar references."""

from __future__ import annotations

import math

import numpy as np
import pytest

from generators import random_besant, random_canonical
from inellipse import kernels
from inellipse.conic import Conic, foci, semi_axes_and_area
from inellipse.inscribed import family_coefficients


def reference_foci(cq, r):
    return foci(Conic(*family_coefficients(cq.s, cq.t, cq.v, cq.w, r)))


def test_selected_backend_is_available():
    assert kernels.BACKEND in kernels.available_backends()
    assert kernels.backend is kernels.available_backends()[kernels.BACKEND]


def test_family_foci_matches_scalar_route(backend, rng):
    for _ in range(50):
        cq = random_canonical(rng)
        rs = np.sort(rng.uniform(0.01, 0.99, 7))
        got = backend.family_foci(cq.s, cq.t, cq.v, cq.w, rs)
        assert got.shape == (7, 4)
        for row, r in zip(got, rs):
            f1, f2 = reference_foci(cq, float(r))
            assert np.allclose(row, [f1.x, f1.y, f2.x, f2.y], atol=1e-9)


def test_family_area_matches_scalar_route(backend, rng):
    cq = random_canonical(rng)
    rs = np.linspace(0.05, 0.95, 11)
    got = backend.family_area(cq.s, cq.t, cq.v, cq.w, rs)
    want = [semi_axes_and_area(Conic(*family_coefficients(cq.s, cq.t, cq.v, cq.w, float(r))))[2] for r in rs]
    assert np.allclose(got, want, rtol=1e-12)


def test_slope_sign_matches_finite_difference(backend, rng):
    cq = random_canonical(rng)
    h = 1e-6
    for r in np.linspace(0.05, 0.95, 19):
        lo, hi = backend.family_area(cq.s, cq.t, cq.v, cq.w, [r - h, r + h])
        fd = hi - lo
        if abs(fd) > 1e-9 * hi:
            assert math.copysign(1, backend.log_area_slope(cq.s, cq.t, cq.v, cq.w, float(r))) == math.copysign(1, fd)


def test_max_area_example(backend):
    r = backend.max_area_r(2.0, 4.0, 6.8, -2.4, 1e-12, 1e-12)
    assert r == pytest.approx((-151 + math.sqrt(64621)) / 123, abs=1e-10)


def test_backends_agree():
    found = kernels.available_backends()
    if len(found) < 2:
        pytest.skip("compiled extension not built")
    py, cy = found["python"], found["cython"]
    rng = np.random.default_rng(7)
    for _ in range(50):
        cq = random_besant(rng) if rng.random() < 0.5 else random_canonical(rng)
        args = (cq.s, cq.t, cq.v, cq.w)
        rs = np.linspace(0.001, 0.999, 101)
        assert np.allclose(py.family_foci(*args, rs), cy.family_foci(*args, rs), rtol=1e-10, atol=1e-9)
        assert np.allclose(py.family_area(*args, rs), cy.family_area(*args, rs), rtol=1e-10)
        assert py.max_area_r(*args, 1e-12, 1e-12) == pytest.approx(cy.max_area_r(*args, 1e-12, 1e-12), abs=1e-11)


def test_pure_python_switch(monkeypatch):
    import importlib

    monkeypatch.setenv("INELLIPSE_PURE_PYTHON", "1")
    try:
        reloaded = importlib.reload(kernels)
        assert reloaded.BACKEND == "python"
    finally:
        monkeypatch.delenv("INELLIPSE_PURE_PYTHON")
        importlib.reload(kernels)
