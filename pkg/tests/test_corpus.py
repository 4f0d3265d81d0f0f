from pathlib import Path

import pytest

from hgx import corpus
from hgx.corpus import COMPUTED, CORRECTED, IDENTITY, WORKED

DATA = Path(corpus.__file__).parent / "data"
ORIGINS = {WORKED, CORRECTED, COMPUTED, IDENTITY}


def test_registry_is_well_formed():
    names = corpus.names()
    assert len(names) == len(set(names)) >= 25
    for name in names:
        e = corpus.entry(name)
        assert e.expectations, name
        assert all(x.origin in ORIGINS for x in e.expectations)
        labels = [x.label() for x in e.expectations]
        assert len(labels) == len(set(labels)), name


def test_unknown_entry():
    with pytest.raises(KeyError):
        corpus.entry("nosuch")


@pytest.mark.parametrize("name", corpus.names())
def test_packaged_file_matches_registry(name):
    assert (DATA / f"{name}.hgx").read_text() == corpus.entry(name).source
    assert corpus.round_trip(name)


@pytest.mark.parametrize("name", corpus.names())
def test_expectations_hold(name):
    failures = [o for o in corpus.run_expected(name) if not o.ok]
    assert not failures, [(o.expectation.label(), o.actual) for o in failures]


def test_outcomes_serialize():
    out = corpus.run_expected("fx")
    d = out[0].as_dict()
    assert {"entry", "check", "verdict", "origin", "expected", "actual"} <= set(d)
