"""Smoke tests for the Python bindings against known values."""

import json
import pathlib

import pytest

import galcoh

SPECS = pathlib.Path(__file__).resolve().parents[2] / "specs"


def load(name):
    return json.loads((SPECS / name).read_text())


def test_pgl2_picard():
    out = galcoh.picard(load("pgl2.json"))
    assert out["pic"] == {"invariant_factors": ["2"], "free_rank": 0}
    assert out["dual"] == out["pic"]
    assert out["pi1"] == {"invariant_factors": ["2"], "free_rank": 0}
    assert len(out["witness"]) == 1


def test_norm_one_torus():
    out = galcoh.picard(load("norm_one_torus.json"))
    assert out["pic"] == {"invariant_factors": ["2"], "free_rank": 0}


def test_inline_spec_sl2_trivial():
    spec = {"kind": "root_datum", "type": "A", "rank": 1, "isogeny": "sc"}
    out = galcoh.picard(spec)
    assert out["pic"] == {"invariant_factors": [], "free_rank": 0}


def test_dual_and_pi1():
    spec = load("pgl3.json")
    assert galcoh.dual(spec)["dual"] == {"invariant_factors": ["3"], "free_rank": 0}
    assert galcoh.pi1(spec)["pi1"] == {"invariant_factors": ["3"], "free_rank": 0}


def test_cohomology_job():
    out = galcoh.cohomology(load("sign_lattice_job.json"), degree=1)
    assert out["cohomology"] == {"invariant_factors": ["2"], "free_rank": 0}


def test_hypercohomology_and_les():
    doubling = load("doubling_complex.json")
    assert galcoh.hypercohomology(doubling, degree=1)["hyper"] == {
        "invariant_factors": ["2"],
        "free_rank": 0,
    }
    report = galcoh.verify_les(doubling, max_degree=1)
    assert report["pass"] is True
    assert all(e["pass"] for e in report["entries"])


def test_cross_check():
    out = galcoh.cross_check(load("cross_pgl2.json"))
    assert out["pipelines_agree"] is True
    assert out["pic"] == out["resolution_h1"]


def test_malformed_spec_raises():
    with pytest.raises(ValueError):
        galcoh.picard({"kind": "nope"})


def test_budget_cap_raises():
    with pytest.raises(galcoh.BudgetError):
        galcoh.picard(load("norm_one_torus.json"), cap_group=1)
