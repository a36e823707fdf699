import shutil

from crepant.chern import base_ring
from crepant.fixtures import FIXTURE_ENV, fixture_path, load_fixtures, write_fixtures
from crepant.models import get_model, verify_against_paper


def test_every_table_has_one_row_per_model():
    rows = load_fixtures()
    for table in ("Table12", "Table13", "Table14"):
        assert len([r for r in rows if r.table == table]) == 17
    assert len([r for r in rows if r.table == "Table15"]) == 3 * 17


def test_misprinted_rows_differ_only_in_c1c2():
    ring = base_ring(3)
    flagged = [r for r in load_fixtures() if r.printed]
    assert {r.model for r in flagged} == {"SU4", "Spin7"}
    for r in flagged:
        diff = ring.parse(r.printed) - ring.parse(r.expr)
        assert diff == 24 * ring.parse("c1*c2")


def test_round_trip(tmp_path):
    rows = load_fixtures()
    write_fixtures(rows, tmp_path / "reference_tables.csv")
    assert load_fixtures(tmp_path) == rows


def test_env_override_is_honoured(tmp_path, monkeypatch):
    shutil.copy(fixture_path(), tmp_path / "reference_tables.csv")
    text = (tmp_path / "reference_tables.csv").read_text()
    (tmp_path / "reference_tables.csv").write_text(
        text.replace("SO3,Table12,chi,2,0,12*L*(c1 - 4*L)", "SO3,Table12,chi,2,0,12*L*(c1 - 5*L)"))
    monkeypatch.setenv(FIXTURE_ENV, str(tmp_path))
    report = verify_against_paper("Table12")
    assert [c.model for c in report.failures] == ["SO3"]
    assert get_model("SO3").reference_chi[0].table == "Table11"
