"""Smoke tests for the python bindings."""

import math

import numpy as np
import pytest

import agmio


def test_holder_l_of_delta_values():
    assert agmio.holder_l_of_delta(1.0, 3.5, 0.01) == 3.5
    assert agmio.holder_l_of_delta(0.0, 1.0, 2.0) == pytest.approx(1.0)
    assert agmio.holder_l_of_delta(1.0 / 3.0, 2.0, 0.5) == pytest.approx(4.0)


def test_holder_params_from_inner_max():
    nu, l_nu = agmio.holder_params_from_inner_max(3.0, 4.0, 2.0)
    assert nu == pytest.approx(0.5)
    assert l_nu == pytest.approx(math.sqrt(2.0))


def test_prox_soft_threshold():
    point, err, kind = agmio.prox_step(
        "euclidean", "whole-space", 1, 0.0, 0.3, np.array([1.0]), np.array([0.0]), 1.0
    )
    assert point[0] == pytest.approx(0.7)
    assert err == 0.0
    assert kind == "closed-form-exact"
    cert = agmio.prox_certificate(
        "euclidean", "whole-space", 1, 0.0, 0.3, np.array([1.0]), np.array([0.0]), 1.0, point
    )
    assert cert == 0.0


def test_bregman_entropy_is_kl():
    v = agmio.bregman_divergence("entropy", np.array([0.5, 0.5]), np.array([1.0, 0.0]))
    assert v == pytest.approx(math.log(2.0))


def test_gradient_mapping():
    g = agmio.gradient_mapping(np.array([1.0, 1.0]), np.array([0.5, 1.0]), 0.25)
    assert np.allclose(g, [2.0, 0.0])


def test_catalog_and_solve_with_bounds():
    names = agmio.catalog_names()
    assert "quad-cos" in names and "holder-nu-13" in names

    run = agmio.solve("quad-cos", eps=1e-4)
    assert run["stop_reason"] == "criterion-met"
    assert run["best_gmap_norm"] <= 1e-4
    assert run["all_bounds_pass"]
    assert len(run["m_k"]) == run["iterations"]
    assert run["trace_csv"].splitlines()[0].startswith("k,i_k,M_k")


def test_solve_is_deterministic():
    a = agmio.solve("quad-cos-noisy", eps=1e-3, max_iters=50, seed=11)
    b = agmio.solve("quad-cos-noisy", eps=1e-3, max_iters=50, seed=11)
    assert a["trace_csv"] == b["trace_csv"]


def test_oracle_check():
    report = agmio.oracle_check("quad-cos", trials=200)
    assert report["pass"]
    assert report["value_violations"] == 0


def test_stationarity_residual():
    r = agmio.stationarity_residual(
        np.array([1.0]), np.array([2.0]), "box", 1, 1.0, 0.0
    )
    assert r == pytest.approx(-4.0)  # box [-1, 1]: best feasible move is to -1
