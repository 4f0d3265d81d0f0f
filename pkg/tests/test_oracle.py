"""Dense structure-constant models checked against the rewriting engine.

The frozen numbers below were produced by the dense models, which only
multiply tables of labels and never rewrite words.
"""

import pytest

from hgx import corpus
from hgx import oracle as orc
from hgx.comodule import coinvariants
from hgx.exactfield import ONE, rank
from hgx.galois import canonical_map

MODELS = [
    ("sweedler", orc.sweedler, 4),
    ("taft", orc.taft, 8),
    ("trig", orc.trigonometric, 2),
    ("trunc", lambda: orc.truncated_polynomial(3), 3),
    ("cs3", lambda: orc.group_algebra("CS3", orc.symmetric_group_3()), 6),
    ("fs3", lambda: orc.function_algebra("FS3", orc.symmetric_group_3()), 6),
]


@pytest.mark.parametrize("label, build, dim", MODELS, ids=[m[0] for m in MODELS])
def test_dense_models_satisfy_their_axioms(label, build, dim):
    sc = build()
    assert sc.dim == dim
    assert sc.verify() == []


def test_corrupted_table_is_rejected():
    sc = orc.sweedler()
    g = (1, 0)
    sc.comul[g] = {(g, (0, 0)): ONE}
    assert sc.verify()


def test_can_is_invertible_for_hopf_tables():
    for sc in (orc.sweedler(), orc.taft()):
        assert rank(orc.can_matrix(sc)) == sc.dim**2


# (balanced dim, rank of chi, target dim, coinvariant dim)
FROZEN = {
    ("sweedler-h4", "reg"): (16, 16, 16, 1),
    ("taft-h4prime", "reg"): (64, 64, 64, 1),
    ("taft-subgroup", "map:pi"): (16, 16, 16, 4),
    ("orbit-z4", "act"): (8, 8, 8, 2),
    ("trunc-poly-z3", "deg"): (9, 6, 9, 1),
    ("graded-z3", "deg"): (9, 9, 9, 1),
    ("tensor-extension", "ext"): (32, 32, 32, 2),
}


@pytest.mark.parametrize("entry, ref", list(FROZEN), ids=[e for e, _ in FROZEN])
def test_frozen_canonical_data(entry, ref):
    _, cms = corpus._models(entry)
    cm = next(m for m in cms if m.coaction == ref)
    can = orc.canonical_map(cm.oc)
    assert (can.balanced_dim, can.chi_rank, can.target_dim, len(cm.oc.coinvariants())) == FROZEN[(entry, ref)]
    assert can.kills_relations


@pytest.mark.parametrize("entry, ref", list(FROZEN), ids=[e for e, _ in FROZEN])
def test_engine_agrees_with_frozen_data(ws, entry, ref):
    w = ws(entry)
    c = corpus._coaction(w, ref)
    balanced, chi_rank, target, coinv = FROZEN[(entry, ref)]
    cert = canonical_map(c, None, 4)
    assert cert.exact
    assert cert.source_dim == balanced and cert.target_dim == target
    assert cert.surjective == (chi_rank == target)
    assert cert.bijective == (chi_rank == target == balanced)
    depth = c.A.max_word_length()
    assert coinvariants(c, depth).dim == coinv


@pytest.mark.parametrize("entry", ["trig-coalgebra", "duality-z3", "duality-s3", "graded-z2", "sweedler-h4",
                                   "taft-subgroup", "orbit-z4", "tensor-extension"])
def test_full_comparison(ws, entry):
    v = corpus.compare_with_oracle(ws(entry), entry if entry != "trig-coalgebra" else "trig")
    assert v.ok, v.witness
