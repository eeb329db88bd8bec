import pytest

from g4census import census, database


@pytest.fixture(scope="session")
def census_records():
    records, mult = census.full_census(threads=1)
    return records, mult


@pytest.fixture(scope="session")
def census_rows(census_records):
    return [database.record_to_row(r) for r in census_records[0]]


ACCEPTANCE: dict[str, list[tuple[bool, str]]] = {}


def record_criterion(name: str, ok: bool, detail: str = "") -> None:
    ACCEPTANCE.setdefault(name, []).append((ok, detail))


@pytest.fixture(scope="session")
def census_dir(tmp_path_factory):
    from g4census.cli import main

    out = tmp_path_factory.mktemp("census")
    assert main(["run", "--out", str(out), "--threads", "1"]) == 0
    return out


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE, key=lambda s: int(s.split()[0])):
        results = ACCEPTANCE[name]
        ok = all(r for r, _ in results)
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}")
        for r, detail in results:
            if not r and detail:
                terminalreporter.write_line(f"        {detail}")
