"""Bilinear pairings between bialgebras and the duality identities."""

from __future__ import annotations

from typing import Mapping

from .exactfield import ONE, ZERO, ExactMatrix, Scalar, rank, scalar
from .hopfcore import HopfStructure
from .presentation import NcPoly, Word
from .tensorspace import TensorElement
from .verdict import Verdict


class PairingError(ValueError):
    pass


class Pairing:
    """Values ``<h, h'>`` on normal words of ``H`` and ``H'``.

    Pairs that are not listed pair to zero.  ``finite`` is true when both
    presentations have finite normal-word bases, in which case the Gram
    matrix is the complete pairing.
    """

    def __init__(self, H: HopfStructure, Hp: HopfStructure, values: Mapping[tuple[Word, Word], object], name: str = ""):
        self.H = H
        self.Hp = Hp
        self.name = name
        self.values: dict[tuple[Word, Word], Scalar] = {}
        for (u, v), c in values.items():
            u, v = tuple(u), tuple(v)
            if not H.pres.is_normal(u) or not Hp.pres.is_normal(v):
                raise PairingError("pairing values must be given on normal words")
            c = scalar(c)
            if c:
                self.values[(u, v)] = c
        self.finite = H.pres.is_finite() and Hp.pres.is_finite()

    def word(self, u: Word, v: Word) -> Scalar:
        return self.values.get((u, v), ZERO)

    def pair(self, x: NcPoly | Mapping, y: NcPoly | Mapping) -> Scalar:
        xt = x.terms if isinstance(x, NcPoly) else x
        yt = y.terms if isinstance(y, NcPoly) else y
        acc = ZERO
        for u, a in xt.items():
            for v, b in yt.items():
                c = self.values.get((u, v))
                if c is not None:
                    acc = acc + a * b * c
        return acc

    def pair_tensors(self, s: TensorElement, t: TensorElement) -> Scalar:
        """``<h (x) l, h' (x) l'> = <h, h'><l, l'>`` extended bilinearly."""
        acc = ZERO
        for ks, a in s.terms.items():
            for kt, b in t.terms.items():
                c = a * b
                for u, v in zip(ks, kt):
                    val = self.values.get((u, v))
                    if val is None:
                        c = ZERO
                        break
                    c = c * val
                if c:
                    acc = acc + c
        return acc

    def gram(self, left: list[Word], right: list[Word]) -> ExactMatrix:
        return ExactMatrix([[self.word(u, v) for v in right] for u in left], len(right))


def check_duality(p: Pairing, d: int) -> Verdict:
    """Six duality identities on basis words, plus antipodes when both exist."""
    H, Hp = p.H, p.Hp
    A, Ap = H.pres, Hp.pres
    left = H.basis(d)
    right = Hp.basis(d)
    unit = TensorElement((A, A), {((), ()): ONE})
    unit_p = TensorElement((Ap, Ap), {((), ()): ONE})
    passed = []

    def fail(identity, witness):
        return Verdict("duality", False, f"{identity}: {witness}", {"degree": d, "passed": passed})

    for h in left:
        for l in left:
            if len(h) + len(l) > d:
                continue
            hl = A.nf_word(h + l)
            pure = TensorElement((A, A), {(h, l): ONE})
            for hp in right:
                if p.pair(hl, {hp: ONE}) != p.pair_tensors(pure, Hp.delta_word(hp)):
                    return fail("product_left", f"<{A.word_text(h)}*{A.word_text(l)}, {Ap.word_text(hp)}>")
    passed.append("product_left")
    for hp in right:
        for lp in right:
            if len(hp) + len(lp) > d:
                continue
            prod = Ap.nf_word(hp + lp)
            pure = TensorElement((Ap, Ap), {(hp, lp): ONE})
            for h in left:
                if p.pair({h: ONE}, prod) != p.pair_tensors(H.delta_word(h), pure):
                    return fail("product_right", f"<{A.word_text(h)}, {Ap.word_text(hp)}*{Ap.word_text(lp)}>")
    passed.append("product_right")
    for hp in right:
        if p.word((), hp) != Hp.eps_word(hp):
            return fail("counit_right", f"<1, {Ap.word_text(hp)}>")
    passed.append("counit_right")
    for h in left:
        if p.word(h, ()) != H.eps_word(h):
            return fail("counit_left", f"<{A.word_text(h)}, 1>")
    passed.append("counit_left")
    for hp in right:
        if p.pair_tensors(unit, Hp.delta_word(hp)) != Hp.eps_word(hp):
            return fail("unit_coproduct_right", f"<1 (x) 1, coproduct of {Ap.word_text(hp)}>")
    passed.append("unit_coproduct_right")
    for h in left:
        if p.pair_tensors(H.delta_word(h), unit_p) != H.eps_word(h):
            return fail("unit_coproduct_left", f"<coproduct of {A.word_text(h)}, 1 (x) 1>")
    passed.append("unit_coproduct_left")
    if H.has_antipode() and Hp.has_antipode():
        for h in left:
            sh = H.S_word(h)
            for hp in right:
                if p.pair(sh, {hp: ONE}) != p.pair({h: ONE}, Hp.S_word(hp)):
                    return fail("antipode", f"<S({A.word_text(h)}), {Ap.word_text(hp)}>")
        passed.append("antipode")
    return Verdict("duality", True, None, {"degree": d, "passed": passed})


def check_nondegenerate(p: Pairing, d: int | None = None) -> Verdict:
    """Full Gram rank on both sides; indeterminate for truncated infinite bases."""
    if not p.finite:
        return Verdict("nondegenerate", None, None, {"reason": "indeterminate at truncation"})
    left = p.H.pres.full_basis()
    right = p.Hp.pres.full_basis()
    r = rank(p.gram(left, right))
    ok = r == len(left) == len(right)
    details = {"rank": r, "left_dim": len(left), "right_dim": len(right)}
    return Verdict("nondegenerate", ok, None if ok else f"Gram rank {r}", details)
