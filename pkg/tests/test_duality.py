import pytest

from hgx.duality import Pairing, PairingError, check_duality, check_nondegenerate
from hgx.exactfield import ONE
from hgx.tensorspace import TensorElement


@pytest.mark.parametrize("entry, rank", [("duality-z2", 2), ("duality-z3", 3), ("duality-s3", 6)])
def test_group_pairings(ws, entry, rank):
    p = ws(entry).pairings["ev"]
    v = check_duality(p, 3)
    assert v.ok, v.witness
    g = check_nondegenerate(p)
    assert g.ok and g.details["rank"] == rank


def test_corrupted_value_breaks_an_identity(ws):
    p = ws("duality-s3").pairings["ev"]
    values = dict(p.values)
    key = next(k for k in values if k[0] and k[1])
    values[key] = values[key] + ONE
    bad = Pairing(p.H, p.Hp, values, "bad")
    v = check_duality(bad, 3)
    assert not v.ok and ":" in v.witness


def test_values_must_be_on_normal_words(ws):
    p = ws("duality-z2").pairings["ev"]
    # a repeated grouplike generator is not a normal word in O(Z2)
    g = p.Hp.pres.gens[0]
    k = p.Hp.pres.index[g]
    with pytest.raises(PairingError):
        Pairing(p.H, p.Hp, {((), (k, k)): 1})


def test_pairing_of_tensors_is_multiplicative(ws):
    p = ws("duality-z3").pairings["ev"]
    H, Hp = p.H.pres, p.Hp.pres
    for u in H.full_basis():
        for v in Hp.full_basis():
            for w in Hp.full_basis():
                # <h, v w> = <h_(1), v><h_(2), w>
                lhs = p.pair(H.word(u), Hp.word(v) * Hp.word(w))
                rhs = p.pair_tensors(p.H.delta(H.word(u)), TensorElement.pure(Hp.word(v), Hp.word(w)))
                assert lhs == rhs


def test_infinite_pairing_is_indeterminate(ws):
    from hgx import dsl

    src = """scalars QIQ
algebra P {
  gens x
  coproduct x -> x (x) 1 + 1 (x) x
  counit x -> 0
  antipode x -> -x
}
pairing self {
  left P right P
  values <x, x> = 1;
}
"""
    w = dsl.load_text(src)
    assert check_nondegenerate(w.pairings["self"]).ok is None
