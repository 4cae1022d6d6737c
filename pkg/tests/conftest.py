import pytest
from fastapi.testclient import TestClient

from dlite.service import app

FIXTURE_CSV = ",a,b,c\nP,1,0,0\nQ,0,1,0\nR,0.25,0.5,0.25\n"

FIXTURE_JSON = (
    '[{"name": "P", "masses": {"a": 1}},'
    ' {"name": "Q", "masses": {"b": 1}},'
    ' {"name": "R", "masses": {"a": 0.25, "b": 0.5, "c": 0.25}}]'
)


@pytest.fixture
def client():
    return TestClient(app)


@pytest.fixture
def csv_payload():
    return {"content": FIXTURE_CSV, "format": "csv"}


@pytest.fixture
def fixture_csv_path(tmp_path):
    path = tmp_path / "fixture.csv"
    path.write_text(FIXTURE_CSV)
    return str(path)


@pytest.fixture
def fixture_json_path(tmp_path):
    path = tmp_path / "fixture.json"
    path.write_text(FIXTURE_JSON)
    return str(path)
