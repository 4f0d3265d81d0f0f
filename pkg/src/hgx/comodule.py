"""Right coactions of Hopf structures on presented algebras."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .exactfield import ONE, ZERO, Indexer, nullspace, scalar
from .hopfcore import HopfStructure, coopposite
from .presentation import NcPoly, Presentation, Word
from .tensorspace import TensorElement, switch, tensor_unit
from .verdict import Verdict


class CoactionError(ValueError):
    pass


class Coaction:
    """Algebra coaction ``A -> A (x) H`` given on generators of ``A``.

    With ``left=True`` the images live in ``H (x) A``; they are switched
    into right legs and ``H`` is replaced by its coopposite, which turns a
    left coaction into a right one without changing any checker.
    """

    def __init__(self, A: Presentation, H: HopfStructure, delta: Mapping[str, TensorElement], left: bool = False, name: str = ""):
        self.name = name
        self.left = left
        self.A = A
        if left:
            H = coopposite(H)
            delta = {g: _rebind(switch(t, 1, 2), (A, H.pres)) for g, t in delta.items()}
        self.H = H
        missing = [g for g in A.gens if g not in delta]
        if missing:
            raise CoactionError(f"coaction missing on {missing}")
        self.delta_gen: dict[int, TensorElement] = {}
        for g, t in delta.items():
            if t.arity != 2 or t.legs[0] is not A or t.legs[1] is not H.pres:
                raise CoactionError(f"image of {g} must have legs ({A.name}, {H.pres.name})")
            self.delta_gen[A.index[g]] = t
        self._cache: dict[Word, TensorElement] = {}

    def delta_word(self, w: Word) -> TensorElement:
        hit = self._cache.get(w)
        if hit is not None:
            return hit
        if not w:
            out = tensor_unit((self.A, self.H.pres))
        elif len(w) == 1:
            out = self.delta_gen[w[0]]
        else:
            out = self.delta_word(w[:-1]) * self.delta_gen[w[-1]]
        self._cache[w] = out
        return out

    def apply(self, x: NcPoly | Mapping) -> TensorElement:
        terms = x.terms if isinstance(x, NcPoly) else x
        out = TensorElement((self.A, self.H.pres))
        for w, c in terms.items():
            out = out + self.delta_word(w).scale(c)
        return out

    def __repr__(self):
        return f"Coaction({self.name or self.A.name} <- {self.H.name})"


def _rebind(t: TensorElement, legs) -> TensorElement:
    return TensorElement(legs, t.terms)


def regular_coaction(H: HopfStructure, name: str = "") -> Coaction:
    """``H`` coacting on itself through its coproduct."""
    return Coaction(H.pres, H, {g: H.delta_gen[k] for g, k in H.pres.index.items()}, name=name or H.name)


def check_coaction(c: Coaction, d: int) -> Verdict:
    A, H = c.A, c.H
    details = {"degree": d}
    for w in A.basis_up_to(d):
        x = c.delta_word(w)
        left = x.expand_leg(1, c.delta_word)
        right = x.expand_leg(2, H.delta_word)
        if left != right:
            return Verdict("coaction", False, f"coassociativity on {A.word_text(w)}", details)
        if x.apply_functional(2, H.eps_word) != TensorElement((A,), {(w,): ONE}):
            return Verdict("coaction", False, f"counit on {A.word_text(w)}", details)
    for lhs, rhs in A.rules:
        raw = tensor_unit((A, H.pres))
        for g in lhs:
            raw = raw * c.delta_gen[g]
        if raw != c.apply(A.normal_form(rhs)):
            return Verdict("coaction", False, f"relation {A.word_text(lhs)}", details)
    words = A.basis_up_to(d)
    for u in words:
        for v in words:
            if len(u) + len(v) > d:
                continue
            if c.apply(A.nf_word(u + v)) != c.delta_word(u) * c.delta_word(v):
                return Verdict("coaction", False, f"{A.word_text(u)} * {A.word_text(v)}", details)
    return Verdict("coaction", True, None, details)


@dataclass
class CoinvariantBasis:
    degree: int
    basis: list[NcPoly] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def texts(self) -> list[str]:
        return [str(b) for b in self.basis]


def coinvariants(c: Coaction, d: int) -> CoinvariantBasis:
    """Kernel of ``v -> delta(v) - v (x) 1`` on the words of length at most ``d``.

    The kernel is taken jointly over all lengths, since presentations with
    inhomogeneous rules need not preserve word length.
    """
    words = c.A.basis_up_to(d)
    idx = Indexer()
    images = []
    for w in words:
        terms = dict(c.delta_word(w).terms)
        key = (w, ())
        v = terms.get(key, ZERO) - ONE
        if v:
            terms[key] = v
        else:
            terms.pop(key, None)
        images.append(idx.vector(terms))
    basis = [NcPoly(c.A, {words[k]: x for k, x in vec.items()}) for vec in nullspace(images)]
    basis.sort(key=lambda p: max(c.A.key(w) for w in p.terms))
    return CoinvariantBasis(d, basis)


def is_coinvariant(c: Coaction, x: NcPoly) -> bool:
    return c.apply(x) == TensorElement((c.A, c.H.pres), {(w, ()): a for w, a in x.terms.items()})


# -- quantum subgroups -----------------------------------------------------------


class SubgroupMap:
    """Generator images ``pi: H -> H'`` extended multiplicatively."""

    def __init__(self, H: HopfStructure, Hp: HopfStructure, images: Mapping[str, NcPoly], name: str = ""):
        self.H = H
        self.Hp = Hp
        self.name = name
        missing = [g for g in H.pres.gens if g not in images]
        if missing:
            raise CoactionError(f"map missing on {missing}")
        self.images = {H.pres.index[g]: p for g, p in images.items()}
        self._cache: dict[Word, dict] = {(): {(): ONE}}

    def word(self, w: Word) -> dict:
        hit = self._cache.get(w)
        if hit is not None:
            return hit
        out = (NcPoly(self.Hp.pres, self.word(w[:-1])) * self.images[w[-1]]).terms
        self._cache[w] = out
        return out

    def apply(self, x: NcPoly | Mapping) -> NcPoly:
        terms = x.terms if isinstance(x, NcPoly) else x
        out = NcPoly(self.Hp.pres, {})
        for w, c in terms.items():
            out = out + NcPoly(self.Hp.pres, self.word(w)).scale(c)
        return out


def check_subgroup_map(pi: SubgroupMap, d: int) -> Verdict:
    """Rules, coproduct, counit and (when both exist) antipode are respected."""
    H, Hp = pi.H, pi.Hp
    P = H.pres
    details = {"degree": d}
    for lhs, rhs in P.rules:
        left = NcPoly(Hp.pres, {(): ONE})
        for g in lhs:
            left = left * pi.images[g]
        if left != pi.apply(P.normal_form(rhs)):
            return Verdict("subgroup_map", False, f"relation {P.word_text(lhs)}", details)
    for w in H.basis(d):
        img = pi.apply({w: ONE})
        pushed = H.delta_word(w).map_legs([pi.word, pi.word], (Hp.pres, Hp.pres))
        if pushed != Hp.delta(img):
            return Verdict("subgroup_map", False, f"coproduct on {P.word_text(w)}", details)
        if Hp.epsilon(img) != H.eps_word(w):
            return Verdict("subgroup_map", False, f"counit on {P.word_text(w)}", details)
        if H.has_antipode() and Hp.has_antipode():
            if pi.apply(H.S_word(w)) != Hp.antipode_apply(img):
                return Verdict("subgroup_map", False, f"antipode on {P.word_text(w)}", details)
    return Verdict("subgroup_map", True, None, details)


def induced_coaction(H: HopfStructure, Hp: HopfStructure, pi: SubgroupMap | Mapping[str, NcPoly], d: int = 2, name: str = "") -> Coaction:
    """``(id (x) pi) o Delta``, after validating ``pi`` up to degree ``d``."""
    if not isinstance(pi, SubgroupMap):
        pi = SubgroupMap(H, Hp, pi)
    v = check_subgroup_map(pi, d)
    if not v.ok:
        raise CoactionError(f"not a bialgebra map: {v.witness}")
    delta = {
        g: H.delta_gen[k].map_legs([None, pi.word], (H.pres, Hp.pres)) for g, k in H.pres.index.items()
    }
    return Coaction(H.pres, Hp, delta, name=name)


def graded_coaction(A: Presentation, G: HopfStructure, grade: Mapping[str, Word | str], name: str = "") -> Coaction:
    """``a -> a (x) g`` for ``a`` homogeneous of degree ``g`` in the group algebra ``G``."""
    gp = G.pres
    gword: dict[int, Word] = {}
    for g in A.gens:
        val = grade.get(g, ())
        w = gp.parse_word(val) if isinstance(val, str) else tuple(val)
        gword[A.index[g]] = w

    def degree(w: Word) -> Word:
        raw = tuple(x for g in w for x in gword[g])
        nf = gp.nf_word(raw)
        if len(nf) != 1 or next(iter(nf.values())) != ONE:
            raise CoactionError(f"grading value of {A.word_text(w)} is not a group element")
        return next(iter(nf))

    for lhs, rhs in A.rules:
        target = degree(lhs)
        for w in rhs:
            if degree(w) != target:
                raise CoactionError(f"inhomogeneous rule {A.word_text(lhs)} -> {A.poly_text(rhs)}")
    delta = {g: TensorElement((A, gp), {((k,), degree((k,))): ONE}) for g, k in A.index.items()}
    return Coaction(A, G, delta, name=name)


# -- transposed actions ---------------------------------------------------------------


class TransposedAction:
    """``rho(h (x) a) = a_(0) <h, a_(1)>`` for a pairing between ``H`` and the coacting ``H'``."""

    def __init__(self, c: Coaction, pairing):
        if pairing.Hp.pres is not c.H.pres:
            raise CoactionError("pairing must be against the coacting Hopf structure")
        self.c = c
        self.p = pairing
        self.H = pairing.H

    def act_word(self, h: Word, a: Word) -> dict:
        out: dict = {}
        for (u, v), x in self.c.delta_word(a).terms.items():
            val = self.p.word(h, v)
            if val:
                nv = out.get(u, ZERO) + x * val
                if nv:
                    out[u] = nv
                else:
                    out.pop(u, None)
        return out

    def act(self, h: Mapping, a: Mapping) -> dict:
        out: dict = {}
        for hw, hc in h.items():
            for aw, ac in a.items():
                for u, x in self.act_word(hw, aw).items():
                    nv = out.get(u, ZERO) + hc * ac * x
                    if nv:
                        out[u] = nv
                    else:
                        out.pop(u, None)
        return out

    def table(self, d: int) -> dict:
        return {(h, a): self.act_word(h, a) for h in self.H.basis(d) for a in self.c.A.basis_up_to(d)}

    def check(self, d: int) -> Verdict:
        """Module and Hopf-action laws on basis words."""
        A, H = self.c.A, self.H
        hw = H.basis(d)
        aw = A.basis_up_to(d)
        details = {"degree": d}
        for a in aw:
            if self.act_word((), a) != {a: ONE}:
                return Verdict("hopf_action", False, f"unit on {A.word_text(a)}", details)
        for h in hw:
            e = H.eps_word(h)
            if self.act_word(h, ()) != ({(): e} if e else {}):
                return Verdict("hopf_action", False, f"{H.text(h)} on 1", details)
            for l in hw:
                if len(h) + len(l) > d:
                    continue
                hl = H.pres.nf_word(h + l)
                for a in aw:
                    if self.act(hl, {a: ONE}) != self.act({h: ONE}, self.act_word(l, a)):
                        return Verdict("hopf_action", False, f"({H.text(h)}{H.text(l)}) on {A.word_text(a)}", details)
            dh = H.delta_word(h)
            for a in aw:
                for b in aw:
                    if len(a) + len(b) > d:
                        continue
                    left = self.act({h: ONE}, A.nf_word(a + b))
                    right: dict = {}
                    for (u, v), x in dh.terms.items():
                        pu = NcPoly(A, self.act_word(u, a))
                        pv = NcPoly(A, self.act_word(v, b))
                        for w, y in (pu * pv).terms.items():
                            nv = right.get(w, ZERO) + x * y
                            if nv:
                                right[w] = nv
                            else:
                                right.pop(w, None)
                    if left != right:
                        return Verdict(
                            "hopf_action", False, f"{H.text(h)} on {A.word_text(a)}*{A.word_text(b)}", details
                        )
        return Verdict("hopf_action", True, None, details)

    def invariants(self, d: int) -> CoinvariantBasis:
        """``{a : rho(h (x) a) = eps(h) a}`` on words of length at most ``d``."""
        A, H = self.c.A, self.H
        words = A.basis_up_to(d)
        idx = Indexer()
        images = []
        for a in words:
            vec: dict = {}
            for h in H.basis(d):
                img = dict(self.act_word(h, a))
                e = H.eps_word(h)
                if e:
                    nv = img.get(a, ZERO) - e
                    if nv:
                        img[a] = nv
                    else:
                        img.pop(a, None)
                for u, x in img.items():
                    vec[idx((h, u))] = x
            images.append(vec)
        basis = [NcPoly(A, {words[k]: x for k, x in v.items()}) for v in nullspace(images)]
        basis.sort(key=lambda p: max(A.key(w) for w in p.terms))
        return CoinvariantBasis(d, basis)


def transposed_action(c: Coaction, pairing) -> TransposedAction:
    return TransposedAction(c, pairing)


def check_hopf_action(act: TransposedAction, d: int) -> Verdict:
    return act.check(d)


def invariants_A_H(act: TransposedAction, d: int) -> CoinvariantBasis:
    return act.invariants(d)


def same_span(A: Presentation, first: list[NcPoly], second: list[NcPoly]) -> bool:
    """Do two lists of elements span the same subspace?"""
    from .exactfield import Echelon

    idx = Indexer()

    def span(polys):
        ech = Echelon()
        for p in polys:
            ech.add(idx.vector(p.terms))
        return ech

    e1, e2 = span(first), span(second)
    return all(e1.contains(idx.vector(p.terms)) for p in second) and all(
        e2.contains(idx.vector(p.terms)) for p in first
    )
