"""HTTP surface: request/response contracts and error mapping."""

import math

import pytest
from fastapi.testclient import TestClient

from freqint.service import create_app

OMEGA = 120.0 * math.pi


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_health(client):
    r = client.get("/health")
    assert r.status_code == 200
    body = r.json()
    assert body["status"] == "ok"
    assert "version" in body


def test_coeffs_tuned_kind(client):
    r = client.post("/coeffs", json={"integrator": "B", "h": 2e-3, "f_select": 60.0})
    assert r.status_code == 200
    body = r.json()
    assert body["integrator"] == "B"
    assert math.isclose(body["omega_select"], OMEGA, rel_tol=1e-12)
    assert math.isclose(body["b_now"], 0.0018158175947967016, rel_tol=1e-13)
    assert math.isclose(body["c_now"], -1.9070291301298634e-06, rel_tol=1e-13)
    assert body["b_prev"] == 0.0 and body["c_prev"] == 0.0


def test_coeffs_untuned_kind_ignores_frequency(client):
    r = client.post("/coeffs", json={"integrator": "TR", "h": 1e-3, "f_select": 60.0})
    assert r.status_code == 200
    body = r.json()
    assert body["omega_select"] == 0.0
    assert body["b_now"] == body["b_prev"] == 0.5e-3


def test_coeffs_default_frequency_is_sixty_hertz(client):
    r = client.post("/coeffs", json={"integrator": "A", "h": 1e-3})
    assert math.isclose(r.json()["omega_select"], OMEGA, rel_tol=1e-12)


def test_step_bound_violation_maps_to_422(client):
    r = client.post("/coeffs", json={"integrator": "A", "h": 0.9})
    assert r.status_code == 422
    detail = r.json()["detail"]
    assert "not admissible" in detail
    assert "0.0166" in detail  # the bound 1/60 s appears in the message


def test_unknown_integrator_rejected(client):
    r = client.post("/coeffs", json={"integrator": "XX", "h": 1e-3})
    assert r.status_code == 422


def test_nonpositive_step_rejected(client):
    r = client.post("/coeffs", json={"integrator": "TR", "h": 0.0})
    assert r.status_code == 422


def test_freq_sweep_defaults_cover_tuned_band(client):
    r = client.post("/freq-sweep", json={"integrator": "A", "h": 1e-3, "n_points": 101})
    assert r.status_code == 200
    pts = r.json()["points"]
    assert len(pts) == 101
    assert pts[0]["omega"] == 0.0
    assert math.isclose(pts[-1]["omega"], 2.0 * OMEGA, rel_tol=1e-12)
    # the midpoint lands on the notch
    mid = pts[50]
    assert math.isclose(mid["omega"], OMEGA, rel_tol=1e-12)
    assert mid["err_mag"] < 1e-12
    for p in pts:
        assert math.isclose(p["err_mag"], abs(complex(p["err_re"], p["err_im"])), rel_tol=1e-12, abs_tol=1e-300)


def test_freq_sweep_explicit_grid(client):
    r = client.post(
        "/freq-sweep",
        json={
            "integrator": "D",
            "h": 1e-3,
            "omega_min": 1.0,
            "omega_max": 100.0,
            "n_points": 3,
            "spacing": "log",
        },
    )
    omegas = [p["omega"] for p in r.json()["points"]]
    assert math.isclose(omegas[1], 10.0, rel_tol=1e-12)


def test_freq_sweep_bad_grid_maps_to_422(client):
    r = client.post(
        "/freq-sweep",
        json={"integrator": "D", "h": 1e-3, "omega_min": 10.0, "omega_max": 1.0, "n_points": 5},
    )
    assert r.status_code == 422


def test_stability_map_contract(client):
    r = client.post(
        "/stability-map",
        json={"integrator": "A", "h": 2e-3, "re_min": -4, "re_max": 0, "im_min": -2, "im_max": 2, "n": 5},
    )
    assert r.status_code == 200
    body = r.json()
    assert body["integrator"] == "A"
    assert math.isclose(body["theta"], OMEGA * 2e-3, rel_tol=1e-12)
    assert len(body["re_axis"]) == 5
    assert len(body["im_axis"]) == 5
    assert len(body["magnitude"]) == 5
    assert all(len(row) == 5 for row in body["magnitude"])
    # mu = 0 cell has |g| = 1
    assert math.isclose(body["magnitude"][4][2], 1.0, rel_tol=1e-12)


def test_stability_map_pole_serializes_as_infinity(client):
    # backward Euler pole at lambda*h = 1 must survive the JSON round trip
    r = client.post(
        "/stability-map",
        json={"integrator": "BE", "h": 1e-3, "re_min": 0, "re_max": 2, "im_min": -1, "im_max": 1, "n": 3},
    )
    assert r.status_code == 200
    mag = r.json()["magnitude"]
    assert mag[1][1] == math.inf
    assert math.isfinite(mag[0][0])


def test_transient_gains_contract(client):
    r = client.post(
        "/transient-gains",
        json={"h": 2e-3, "lh_mag_min": 10.0, "lh_mag_max": 1000.0, "n_points": 3},
    )
    assert r.status_code == 200
    body = r.json()
    rows = body["rows"]
    assert len(rows) == 3
    assert rows[0]["lambda_h"] == -10.0
    assert math.isclose(rows[0]["gain_C"], 13.0 / 43.0, rel_tol=1e-12)
    assert math.isclose(rows[0]["gain_TR"], -2.0 / 3.0, rel_tol=1e-12)
    assert math.isclose(rows[0]["exact"], math.exp(-10.0), rel_tol=1e-12)
    assert rows[-1]["lambda_h"] == -1000.0


def test_transient_gains_rejects_inverted_range(client):
    r = client.post(
        "/transient-gains",
        json={"h": 1e-3, "lh_mag_min": 100.0, "lh_mag_max": 1.0},
    )
    assert r.status_code == 422


def test_verify_roots_contract(client):
    r = client.post("/verify-roots", json={"integrator": "A", "h": 1e-3})
    assert r.status_code == 200
    body = r.json()
    assert body["passed"] is True
    # multiplicities 3, 1, 1 produce (3+1) + (1+1) + (1+1) check rows
    assert len(body["rows"]) == 8
    assert all(row["passed"] for row in body["rows"])
    origin_rows = [row for row in body["rows"] if row["root_re"] == 0 and row["root_im"] == 0]
    assert [row["order"] for row in origin_rows] == [0, 1, 2, 3]
    assert origin_rows[-1]["requirement"] == "above"


def test_case_contract(client):
    r = client.post(
        "/case", json={"case_id": 1, "t_end": 0.1, "step_sizes_us": [1000, 2000]}
    )
    assert r.status_code == 200
    body = r.json()
    assert body["integrators"] == ["A", "B", "C", "D", "TR", "BE"]
    assert body["step_sizes_us"] == [1000, 2000]
    assert len(body["errors_percent"]) == 2
    assert all(len(row) == 6 for row in body["errors_percent"])
    # tuned kinds reproduce the steady sinusoid almost exactly
    assert body["errors_percent"][0][0] < 1e-8
    assert body["errors_percent"][0][5] > 1.0


def test_demo_transient_contract(client):
    r = client.post("/demo-transient", json={"h": 2e-3, "t_end": 0.02})
    assert r.status_code == 200
    body = r.json()
    assert body["integrators"] == ["A", "B", "C", "D", "TR", "BE"]
    assert len(body["times"]) == 11
    assert len(body["states"]) == 6
    assert all(len(col) == 11 for col in body["states"])
    assert len(body["exact"]) == 11
    assert body["exact"][0] == 2.0
    # the trapezoidal column rings: adjacent samples alternate in sign
    tr_col = body["states"][4]
    assert tr_col[1] * tr_col[2] < 0.0
