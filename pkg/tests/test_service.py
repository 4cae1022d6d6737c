import numpy as np
import pytest

from tests.conftest import FIXTURE_CSV, FIXTURE_JSON

DL_EXAMPLE = 0.012835937474226467  # DL((.5,.5), (.25,.75)), frozen oracle value


class TestMatrixEndpoint:
    def test_symmetric_with_zero_diagonal(self, client, csv_payload):
        r = client.post("/matrix", json={"data": csv_payload, "measure": "dlite"})
        assert r.status_code == 200
        body = r.json()
        assert body["names"] == ["P", "Q", "R"]
        values = np.array(body["values"])
        assert np.all(np.diag(values) == 0.0)
        np.testing.assert_array_equal(values, values.T)
        assert values[0, 1] == 1.0

    def test_json_input_format(self, client):
        r = client.post(
            "/matrix",
            json={"data": {"content": FIXTURE_JSON, "format": "json"}, "measure": "tv"},
        )
        assert r.status_code == 200
        assert r.json()["names"] == ["P", "Q", "R"]

    def test_kl_disjoint_gives_409(self, client, csv_payload):
        r = client.post("/matrix", json={"data": csv_payload, "measure": "kl"})
        assert r.status_code == 409
        assert r.json()["detail"]["error"] == "KlUndefined"

    def test_kl_with_smoothing_succeeds(self, client, csv_payload):
        r = client.post(
            "/matrix",
            json={"data": csv_payload, "measure": "kl", "smooth_epsilon": 1e-6},
        )
        assert r.status_code == 200
        values = np.array(r.json()["values"])
        assert np.all(np.isfinite(values))
        # P and Q are permutation images of each other, so compare P vs R.
        assert values[0, 2] != values[2, 0]

    def test_unknown_measure_rejected(self, client, csv_payload):
        r = client.post("/matrix", json={"data": csv_payload, "measure": "hellinger"})
        assert r.status_code == 422

    def test_malformed_csv_names_row_and_column(self, client):
        bad = ",a,b\nP,1,oops\n"
        r = client.post(
            "/matrix", json={"data": {"content": bad, "format": "csv"}}
        )
        assert r.status_code == 400
        message = r.json()["detail"]["message"]
        assert "row 2" in message and "'b'" in message

    def test_nonpositive_epsilon_rejected(self, client, csv_payload):
        r = client.post(
            "/matrix", json={"data": csv_payload, "smooth_epsilon": 0.0}
        )
        assert r.status_code == 422


class TestPairEndpoint:
    def test_known_pair_values(self, client):
        content = ",a,b\nU,0.5,0.5\nV,0.25,0.75\n"
        r = client.post(
            "/pair",
            json={
                "data": {"content": content, "format": "csv"},
                "name_a": "U",
                "name_b": "V",
            },
        )
        assert r.status_code == 200
        body = r.json()
        np.testing.assert_allclose(body["dlite"], DL_EXAMPLE, rtol=1e-13)
        np.testing.assert_allclose(
            body["lit"] - body["delta_h"], body["dlite"], atol=1e-12
        )
        np.testing.assert_allclose(body["dlite_cbrt"], body["dlite"] ** (1 / 3), rtol=1e-12)
        assert set(body["per_outcome"]) == {"a", "b"}
        for terms in body["per_outcome"].values():
            assert terms["dl"] <= terms["g"]
        assert body["tv"] == 0.25
        assert body["kl"] is not None

    def test_kl_null_when_undefined(self, client, csv_payload):
        r = client.post(
            "/pair", json={"data": csv_payload, "name_a": "P", "name_b": "Q"}
        )
        assert r.status_code == 200
        body = r.json()
        assert body["kl"] is None
        assert body["dlite"] == 1.0

    def test_smoothing_defines_kl(self, client, csv_payload):
        r = client.post(
            "/pair",
            json={
                "data": csv_payload,
                "name_a": "P",
                "name_b": "Q",
                "smooth_epsilon": 1e-6,
            },
        )
        assert r.status_code == 200
        assert r.json()["kl"] is not None

    def test_unknown_name_is_404(self, client, csv_payload):
        r = client.post(
            "/pair", json={"data": csv_payload, "name_a": "P", "name_b": "nope"}
        )
        assert r.status_code == 404
        assert r.json()["detail"]["error"] == "UnknownName"

    def test_identical_pair_all_zero(self, client, csv_payload):
        r = client.post(
            "/pair", json={"data": csv_payload, "name_a": "P", "name_b": "P"}
        )
        body = r.json()
        assert body["lit"] == body["delta_h"] == body["dlite"] == 0.0
        assert body["jsd"] == body["tv"] == 0.0


class TestVerifyEndpoint:
    def test_small_run_passes(self, client):
        r = client.post(
            "/verify",
            json={"samples": 300, "dims": [2, 3], "quadrature_samples": 150,
                  "grid_n": 20},
        )
        assert r.status_code == 200
        body = r.json()
        assert body["all_passed"] is True
        assert len(body["reports"]) == 11
        for report in body["reports"]:
            assert report["passed"] is True

    def test_dims_validated(self, client):
        r = client.post("/verify", json={"dims": [1]})
        assert r.status_code == 422
        r = client.post("/verify", json={"dims": []})
        assert r.status_code == 422

    def test_samples_must_be_positive(self, client):
        r = client.post("/verify", json={"samples": 0})
        assert r.status_code == 422

    def test_unknown_tolerance_is_400(self, client):
        r = client.post(
            "/verify",
            json={"samples": 300, "dims": [2], "quadrature_samples": 150,
                  "grid_n": 20, "tolerances": {"bogus": 1.0}},
        )
        assert r.status_code == 400

    def test_tolerance_override_reported_as_failure(self, client):
        r = client.post(
            "/verify",
            json={"samples": 300, "dims": [2], "quadrature_samples": 150,
                  "grid_n": 20, "tolerances": {"scaling_identity": 1e-18}},
        )
        assert r.status_code == 200
        body = r.json()
        assert body["all_passed"] is False


class TestHealth:
    def test_health_lists_measures(self, client):
        r = client.get("/health")
        assert r.status_code == 200
        body = r.json()
        assert body["status"] == "ok"
        assert "dlite-cbrt" in body["measures"]
