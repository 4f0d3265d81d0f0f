"""Coalgebra, bialgebra and Hopf structure maps with their axiom checkers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .exactfield import ONE, ZERO, Echelon, ExactMatrix, Indexer, Scalar, nullspace, scalar
from .presentation import NcPoly, Presentation, Word
from .tensorspace import TensorElement, switch, tensor_unit
from .verdict import Verdict


class HopfError(ValueError):
    pass


MORPHISM = "morphism"
CONSTANTS = "constants"


class HopfStructure:
    """Coproduct, counit and optional antipode on a presentation.

    In ``morphism`` mode the maps are given on generators and extended
    (anti)multiplicatively.  In ``constants`` mode the generators are a
    finite basis of a pure coalgebra and the maps are given on that basis.
    """

    def __init__(
        self,
        pres: Presentation,
        delta: Mapping[str, TensorElement],
        epsilon: Mapping[str, object],
        antipode: Mapping[str, NcPoly] | None = None,
        mode: str = MORPHISM,
        name: str = "",
    ):
        self.pres = pres
        self.name = name or pres.name
        self.mode = mode
        missing = [g for g in pres.gens if g not in delta or g not in epsilon]
        if missing:
            raise HopfError(f"coproduct or counit missing on {missing}")
        self.delta_gen: dict[int, TensorElement] = {}
        for g, t in delta.items():
            if t.arity != 2 or any(p is not pres for p in t.legs):
                raise HopfError(f"coproduct of {g} must be a 2-tensor over {pres.name}")
            self.delta_gen[pres.index[g]] = t
        self.eps_gen = {pres.index[g]: scalar(v) for g, v in epsilon.items()}
        self.antipode_gen: dict[int, NcPoly] | None = None
        if antipode is not None:
            missing = [g for g in pres.gens if g not in antipode]
            if missing:
                raise HopfError(f"antipode missing on {missing}")
            self.antipode_gen = {pres.index[g]: p for g, p in antipode.items()}
        self._delta: dict[Word, TensorElement] = {}
        self._eps: dict[Word, Scalar] = {}
        self._S: dict[Word, dict] = {}

    @property
    def level(self) -> str:
        if self.mode == CONSTANTS:
            return "coalgebra"
        return "hopf" if self.antipode_gen is not None else "bialgebra"

    def has_antipode(self) -> bool:
        return self.antipode_gen is not None

    # -- structure maps on words -------------------------------------------------
    def basis(self, d: int) -> list[Word]:
        if self.mode == CONSTANTS:
            return [(g,) for g in range(len(self.pres.gens))] if d >= 1 else []
        return self.pres.basis_up_to(d)

    def delta_word(self, w: Word) -> TensorElement:
        hit = self._delta.get(w)
        if hit is not None:
            return hit
        if self.mode == CONSTANTS:
            if len(w) != 1:
                raise HopfError("a pure coalgebra has no coproduct on products")
            out = self.delta_gen[w[0]]
        elif not w:
            out = tensor_unit((self.pres, self.pres))
        elif len(w) == 1:
            out = self.delta_gen[w[0]]
        else:
            out = self.delta_word(w[:-1]) * self.delta_gen[w[-1]]
        self._delta[w] = out
        return out

    def eps_word(self, w: Word) -> Scalar:
        hit = self._eps.get(w)
        if hit is not None:
            return hit
        if self.mode == CONSTANTS:
            if len(w) != 1:
                raise HopfError("a pure coalgebra has no counit on products")
            out = self.eps_gen[w[0]]
        else:
            out = ONE
            for g in w:
                out = out * self.eps_gen[g]
        self._eps[w] = out
        return out

    def S_word(self, w: Word) -> dict:
        if self.antipode_gen is None:
            raise HopfError(f"{self.name} has no declared antipode")
        hit = self._S.get(w)
        if hit is not None:
            return hit
        if not w:
            out = {(): ONE}
        elif len(w) == 1:
            out = dict(self.antipode_gen[w[0]].terms)
        else:
            out = (NcPoly(self.pres, self.S_word(w[1:])) * self.antipode_gen[w[0]]).terms
        self._S[w] = out
        return out

    def delta(self, h: NcPoly) -> TensorElement:
        out = TensorElement((self.pres, self.pres))
        for w, c in h.terms.items():
            out = out + self.delta_word(w).scale(c)
        return out

    def epsilon(self, h: NcPoly) -> Scalar:
        acc = ZERO
        for w, c in h.terms.items():
            acc = acc + c * self.eps_word(w)
        return acc

    def antipode_apply(self, h: NcPoly) -> NcPoly:
        out: dict = {}
        for w, c in h.terms.items():
            for u, a in self.S_word(w).items():
                v = out.get(u, ZERO) + c * a
                if v:
                    out[u] = v
                else:
                    out.pop(u, None)
        return NcPoly(self.pres, out)

    def word(self, w: Word) -> NcPoly:
        return NcPoly(self.pres, {w: ONE})

    def text(self, w: Word) -> str:
        return self.pres.word_text(w)

    def __repr__(self):
        return f"HopfStructure({self.name}, {self.level})"


def delta(H: HopfStructure, h: NcPoly) -> TensorElement:
    return H.delta(h)


def epsilon(H: HopfStructure, h: NcPoly) -> Scalar:
    return H.epsilon(h)


def antipode_apply(H: HopfStructure, h: NcPoly) -> NcPoly:
    return H.antipode_apply(h)


# -- axiom checks ----------------------------------------------------------------


def _pairs(H: HopfStructure, d: int):
    words = H.basis(d)
    for u in words:
        for v in words:
            if len(u) + len(v) <= d:
                yield u, v


def check_coassoc(H: HopfStructure, d: int) -> Verdict:
    for w in H.basis(d):
        x = H.delta_word(w)
        left = x.expand_leg(1, H.delta_word)
        right = x.expand_leg(2, H.delta_word)
        if left != right:
            return Verdict("coassoc", False, H.text(w), {"degree": d})
    return Verdict("coassoc", True, None, {"degree": d})


def check_counit(H: HopfStructure, d: int) -> Verdict:
    for w in H.basis(d):
        x = H.delta_word(w)
        target = TensorElement((H.pres,), {(w,): ONE})
        if x.apply_functional(2, H.eps_word) != target or x.apply_functional(1, H.eps_word) != target:
            return Verdict("counit", False, H.text(w), {"degree": d})
    return Verdict("counit", True, None, {"degree": d})


def _raw_delta(H: HopfStructure, w: Word) -> TensorElement:
    """Coproduct of an arbitrary (not necessarily normal) word."""
    out = tensor_unit((H.pres, H.pres))
    for g in w:
        out = out * H.delta_gen[g]
    return out


def _raw_eps(H: HopfStructure, w: Word) -> Scalar:
    out = ONE
    for g in w:
        out = out * H.eps_gen[g]
    return out


def check_bialgebra(H: HopfStructure, d: int) -> Verdict:
    """Coproduct and counit respect the relations and all products up to ``d``."""
    if H.mode == CONSTANTS:
        return Verdict("bialgebra", False, "pure coalgebra", {"degree": d})
    pres = H.pres
    for lhs, rhs in pres.rules:
        left = _raw_delta(H, lhs)
        right = H.delta(NcPoly(pres, pres.normal_form(rhs)))
        if left != right:
            return Verdict("bialgebra", False, f"coproduct on {pres.word_text(lhs)}", {"degree": d})
        if _raw_eps(H, lhs) != H.epsilon(NcPoly(pres, pres.normal_form(rhs))):
            return Verdict("bialgebra", False, f"counit on {pres.word_text(lhs)}", {"degree": d})
    for u, v in _pairs(H, d):
        uv = NcPoly(pres, pres.nf_word(u + v))
        if H.delta(uv) != H.delta_word(u) * H.delta_word(v):
            return Verdict("bialgebra", False, f"{H.text(u)} * {H.text(v)}", {"degree": d})
        if H.epsilon(uv) != H.eps_word(u) * H.eps_word(v):
            return Verdict("bialgebra", False, f"counit of {H.text(u)} * {H.text(v)}", {"degree": d})
    return Verdict("bialgebra", True, None, {"degree": d})


def _mu_apply(H: HopfStructure, t: TensorElement, left: Callable | None, right: Callable | None) -> dict:
    """``mu o (left (x) right)`` applied to a 2-tensor; maps send words to dicts."""
    pres = H.pres
    out: dict = {}
    for (u, v), c in t.terms.items():
        fu = left(u) if left else {u: ONE}
        gv = right(v) if right else {v: ONE}
        raw: dict = {}
        for a, x in fu.items():
            for b, y in gv.items():
                raw[a + b] = raw.get(a + b, ZERO) + x * y
        for w, z in pres.normal_form(raw).items():
            nv = out.get(w, ZERO) + c * z
            if nv:
                out[w] = nv
            else:
                out.pop(w, None)
    return out


def check_antipode(H: HopfStructure, d: int) -> Verdict:
    if not H.has_antipode():
        return Verdict("antipode", False, "no antipode declared", {"degree": d})
    for w in H.basis(d):
        x = H.delta_word(w)
        e = H.eps_word(w)
        target = {(): e} if e else {}
        if _mu_apply(H, x, H.S_word, None) != target or _mu_apply(H, x, None, H.S_word) != target:
            return Verdict("antipode", False, H.text(w), {"degree": d})
    return Verdict("antipode", True, None, {"degree": d})


def antipode_power(H: HopfStructure, n: int, h: NcPoly) -> NcPoly:
    for _ in range(n):
        h = H.antipode_apply(h)
    return h


def check_antihom(H: HopfStructure, d: int) -> Verdict:
    if not H.has_antipode():
        return Verdict("antihom", False, "no antipode declared", {"degree": d})
    pres = H.pres
    for lhs, rhs in pres.rules:
        left = NcPoly(pres, {(): ONE})
        for g in lhs:
            left = H.antipode_gen[g] * left
        if left != H.antipode_apply(NcPoly(pres, pres.normal_form(rhs))):
            return Verdict("antihom", False, f"relation {pres.word_text(lhs)}", {"degree": d})
    for u, v in _pairs(H, d):
        uv = NcPoly(pres, pres.nf_word(u + v))
        su = NcPoly(pres, H.S_word(u))
        sv = NcPoly(pres, H.S_word(v))
        if H.antipode_apply(uv) != sv * su:
            return Verdict("antihom", False, f"{H.text(u)} * {H.text(v)}", {"degree": d})
    return Verdict("antihom", True, None, {"degree": d})


def check_anticohom(H: HopfStructure, d: int) -> Verdict:
    if not H.has_antipode():
        return Verdict("anticohom", False, "no antipode declared", {"degree": d})
    for w in H.basis(d):
        x = H.delta_word(w)
        left = x.map_legs([H.S_word, H.S_word])
        right = switch(H.delta(NcPoly(H.pres, H.S_word(w))), 1, 2)
        if left != right:
            return Verdict("anticohom", False, H.text(w), {"degree": d})
        if H.epsilon(NcPoly(H.pres, H.S_word(w))) != H.eps_word(w):
            return Verdict("anticohom", False, f"counit of S({H.text(w)})", {"degree": d})
    return Verdict("anticohom", True, None, {"degree": d})


def find_grouplikes(H: HopfStructure, d: int) -> list[Word]:
    out = []
    for w in H.basis(d):
        if H.eps_word(w) == ONE and H.delta_word(w) == TensorElement((H.pres, H.pres), {(w, w): ONE}):
            out.append(w)
    return out


def find_primitives(H: HopfStructure, d: int) -> list[NcPoly]:
    words = H.basis(d)
    idx = Indexer()
    images = []
    unit = () if H.mode == MORPHISM else None
    for w in words:
        x = H.delta_word(w)
        terms = dict(x.terms)
        if unit is not None:
            for key in ((w, unit), (unit, w)):
                v = terms.get(key, ZERO) - ONE
                if v:
                    terms[key] = v
                else:
                    terms.pop(key, None)
        vec = idx.vector(terms)
        e = H.eps_word(w)
        if e:
            vec[idx("counit")] = e
        images.append(vec)
    return [NcPoly(H.pres, {words[k]: c for k, c in v.items()}) for v in nullspace(images)]


# -- convolution ------------------------------------------------------------------


@dataclass
class LinMap:
    """Linear map between truncated bases; columns follow the source order."""

    source: list
    target: list
    matrix: ExactMatrix

    def __post_init__(self):
        self.source = [tuple(w) for w in self.source]
        self.target = [tuple(w) for w in self.target]
        if self.matrix.rows != len(self.target) or self.matrix.cols != len(self.source):
            raise HopfError("matrix shape does not match the bases")
        self._src = {w: k for k, w in enumerate(self.source)}
        self._tgt = {w: k for k, w in enumerate(self.target)}

    def apply_word(self, w: Word) -> dict:
        k = self._src.get(tuple(w))
        if k is None:
            raise HopfError("word outside the source basis")
        return {self.target[r]: self.matrix.entries[r][k] for r in range(len(self.target)) if self.matrix.entries[r][k]}

    @classmethod
    def from_images(cls, source, target, images: Mapping) -> "LinMap":
        tpos = {tuple(w): k for k, w in enumerate(target)}
        m = ExactMatrix.zeros(len(target), len(source))
        for c, w in enumerate(source):
            for u, v in images.get(tuple(w), {}).items():
                if tuple(u) not in tpos:
                    raise HopfError("image leaves the target basis")
                m.entries[tpos[tuple(u)]][c] = scalar(v)
        return cls(list(source), list(target), m)

    def __eq__(self, other):
        return (
            isinstance(other, LinMap)
            and self.source == other.source
            and self.target == other.target
            and self.matrix == other.matrix
        )


def unit_map(C: HopfStructure, A: Presentation, source, target) -> LinMap:
    """The convolution unit ``eta o epsilon``."""
    return LinMap.from_images(source, target, {tuple(w): {(): C.eps_word(tuple(w))} for w in source})


def convolution(f: LinMap, g: LinMap, C: HopfStructure, A: Presentation) -> LinMap:
    """``mu o (f (x) g) o Delta``."""
    if f.source != g.source or f.target != g.target:
        raise HopfError("basis mismatch")
    images = {}
    for w in f.source:
        raw: dict = {}
        for (u, v), c in C.delta_word(w).terms.items():
            for a, x in f.apply_word(u).items():
                for b, y in g.apply_word(v).items():
                    raw[a + b] = raw.get(a + b, ZERO) + c * x * y
        images[w] = A.normal_form(raw)
    return LinMap.from_images(f.source, f.target, images)


# -- opposite structures -----------------------------------------------------------


def _reverse_poly(p: NcPoly, pres: Presentation) -> NcPoly:
    return NcPoly(pres, {w[::-1]: c for w, c in p.terms.items()})


def opposite(H: HopfStructure, antipode: Mapping[str, NcPoly] | None = None) -> HopfStructure:
    """Opposite multiplication; ``antipode`` (usually S^-1, in H's words) is installed."""
    op = H.pres.opposite()
    delta = {
        g: TensorElement((op, op), {(u[::-1], v[::-1]): c for (u, v), c in H.delta_gen[k].terms.items()})
        for g, k in H.pres.index.items()
    }
    eps = {g: H.eps_gen[k] for g, k in H.pres.index.items()}
    S = {g: _reverse_poly(p, op) for g, p in antipode.items()} if antipode is not None else None
    return HopfStructure(op, delta, eps, S, H.mode, name=H.name + "^op")


def coopposite(H: HopfStructure, antipode: Mapping[str, NcPoly] | None = None) -> HopfStructure:
    """Flipped coproduct; ``antipode`` (usually S^-1) is installed."""
    pres = H.pres
    delta = {g: switch(H.delta_gen[k], 1, 2) for g, k in pres.index.items()}
    eps = {g: H.eps_gen[k] for g, k in pres.index.items()}
    return HopfStructure(pres, delta, eps, dict(antipode) if antipode is not None else None, H.mode, name=H.name + "^cop")


def antipode_map(H: HopfStructure) -> dict[str, NcPoly]:
    if H.antipode_gen is None:
        raise HopfError(f"{H.name} has no declared antipode")
    return {g: H.antipode_gen[k] for g, k in H.pres.index.items()}


def opposite_coopposite(H: HopfStructure) -> HopfStructure:
    """``H^{op,cop}`` carrying the antipode of ``H``."""
    cop = coopposite(H, antipode_map(H) if H.has_antipode() else None)
    return opposite(cop, antipode_map(cop) if cop.has_antipode() else None)


def inverse_antipode_from_power(H: HopfStructure, order: int) -> dict[str, NcPoly]:
    """``S^(order-1)`` on generators, valid as ``S^-1`` when ``S^order = id``."""
    out = {}
    for g in H.pres.gens:
        x = H.pres.gen(g)
        if antipode_power(H, order, x) != x:
            raise HopfError(f"S^{order} is not the identity on {g}")
        out[g] = antipode_power(H, order - 1, x)
    return out


# -- cancellation --------------------------------------------------------------------


def check_cancellation(H: HopfStructure, d: int, slack: int = 2) -> Verdict:
    """Are ``(H (x) 1) Delta(H)`` and ``Delta(H) (1 (x) H)`` all of ``H (x) H``?

    Basis tensors of combined length at most ``d`` are sought in the span of
    ``(w (x) 1) Delta(z)`` (resp. ``Delta(z) (1 (x) w)``) with ``len(z) <= d``
    and ``len(w) <= d + slack``.  A pass is a certificate; a failure may be
    an artifact of the truncation and is reported with its witness.
    """
    if H.mode == CONSTANTS:
        return Verdict("cancellation", False, "pure coalgebra", {})
    pres = H.pres
    inner = pres.basis_up_to(d)
    outer = pres.basis_up_to(d + slack)
    targets = [(u, v) for u in inner for v in inner if len(u) + len(v) <= d]
    details: dict = {"degree": d, "slack": slack}
    for side in ("left", "right"):
        idx = Indexer()
        for t in targets:
            idx(t)
        ech = Echelon()
        for z in inner:
            dz = H.delta_word(z)
            for w in outer:
                if side == "left":
                    vec = dz.map_legs([lambda x, w=w: pres.nf_word(w + x), None])
                else:
                    vec = dz.map_legs([None, lambda x, w=w: pres.nf_word(x + w)])
                ech.add(idx.vector(vec.terms))
        witness = None
        for t in targets:
            if not ech.contains({idx(t): ONE}):
                witness = f"{pres.word_text(t[0])} (x) {pres.word_text(t[1])}"
                break
        details[f"{side}_witness"] = witness
        details[side] = "pass" if witness is None else "fail"
    ok = details["left"] == "pass" and details["right"] == "pass"
    wit = None if ok else details["left_witness"] or details["right_witness"]
    return Verdict("cancellation", ok, wit, details)
