"""Tensor products of presented algebras and truncated balanced tensor products."""

from __future__ import annotations

from typing import Callable, Iterable, Mapping, Sequence

from .exactfield import ONE, ZERO, Echelon, Scalar, scalar
from .presentation import NcPoly, Presentation, Word, linear_text


class TensorError(ValueError):
    pass


def _acc(out: dict, key, c: Scalar):
    v = out.get(key, ZERO) + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


class TensorElement:
    """Finite sum of scalar multiples of k-fold tensors of normal words."""

    __slots__ = ("legs", "terms")

    def __init__(self, legs: Sequence[Presentation], terms: Mapping | None = None):
        self.legs = tuple(legs)
        self.terms = {tuple(k): c for k, c in (terms or {}).items() if c}

    @property
    def arity(self) -> int:
        return len(self.legs)

    @classmethod
    def pure(cls, *polys: NcPoly) -> "TensorElement":
        """The elementary tensor ``p1 (x) p2 (x) ...``."""
        terms: dict = {(): ONE}
        for p in polys:
            nxt: dict = {}
            for k, c in terms.items():
                for w, d in p.terms.items():
                    _acc(nxt, k + (w,), c * d)
            terms = nxt
        return cls([p.pres for p in polys], terms)

    @classmethod
    def basis(cls, legs: Sequence[Presentation], words: Sequence[Word]) -> "TensorElement":
        return cls(legs, {tuple(words): ONE})

    # linear structure
    def _check(self, other: "TensorElement"):
        if other.arity != self.arity:
            raise TensorError("arity mismatch")
        if any(a is not b for a, b in zip(self.legs, other.legs)):
            raise TensorError("leg presentations differ")

    def __add__(self, other: "TensorElement") -> "TensorElement":
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        return TensorElement(self.legs, out)

    def __neg__(self):
        return TensorElement(self.legs, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "TensorElement":
        c = scalar(c)
        return TensorElement(self.legs, {k: c * v for k, v in self.terms.items()} if c else {})

    def __rmul__(self, c):
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return tensor_mul(self, other)
        return self.scale(other)

    def __eq__(self, other):
        return (
            isinstance(other, TensorElement)
            and self.arity == other.arity
            and all(a is b for a, b in zip(self.legs, other.legs))
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    # leg operations
    def switch(self, i: int = 1, j: int = 2) -> "TensorElement":
        return switch(self, i, j)

    def map_legs(self, fns: Sequence[Callable[[Word], Mapping] | None], legs: Sequence[Presentation] | None = None) -> "TensorElement":
        """Apply a linear map per leg; ``None`` keeps the leg.

        Each map sends a normal word to a dict ``word -> Scalar``.
        """
        new_legs = tuple(legs) if legs is not None else self.legs
        out: dict = {}
        for key, c in self.terms.items():
            partial = {(): c}
            for w, f in zip(key, fns):
                img = {w: ONE} if f is None else f(w)
                nxt: dict = {}
                for k, a in partial.items():
                    for u, b in img.items():
                        _acc(nxt, k + (u,), a * b)
                partial = nxt
            for k, a in partial.items():
                _acc(out, k, a)
        return TensorElement(new_legs, out)

    def expand_leg(self, i: int, f: Callable[[Word], "TensorElement"]) -> "TensorElement":
        """Replace leg ``i`` (1-based) by the tensor ``f(word)``."""
        idx = i - 1
        out: dict = {}
        new_legs = None
        for key, c in self.terms.items():
            img = f(key[idx])
            if new_legs is None:
                new_legs = self.legs[:idx] + img.legs + self.legs[idx + 1 :]
            for k, a in img.terms.items():
                _acc(out, key[:idx] + k + key[idx + 1 :], c * a)
        if new_legs is None:
            return TensorElement(self.legs, {})
        return TensorElement(new_legs, out)

    def contract(self, i: int, j: int | None = None) -> "TensorElement":
        """Multiply adjacent legs ``i`` and ``i+1`` (1-based) into one."""
        j = i + 1 if j is None else j
        if j != i + 1:
            raise TensorError("only adjacent legs can be multiplied")
        pres = self.legs[i - 1]
        if self.legs[j - 1] is not pres:
            raise TensorError("cannot multiply legs of different algebras")
        out: dict = {}
        for key, c in self.terms.items():
            for w, a in pres.nf_word(key[i - 1] + key[j - 1]).items():
                _acc(out, key[: i - 1] + (w,) + key[j:], c * a)
        return TensorElement(self.legs[: i - 1] + (pres,) + self.legs[j:], out)

    def apply_functional(self, i: int, f: Callable[[Word], Scalar]) -> "TensorElement":
        """Evaluate leg ``i`` by a scalar functional, dropping that leg."""
        out: dict = {}
        for key, c in self.terms.items():
            v = f(key[i - 1])
            if v:
                _acc(out, key[: i - 1] + key[i:], c * v)
        return TensorElement(self.legs[: i - 1] + self.legs[i:], out)

    def to_poly(self) -> NcPoly:
        if self.arity != 1:
            raise TensorError("only one-leg tensors convert to polynomials")
        return NcPoly(self.legs[0], {k[0]: c for k, c in self.terms.items()})

    def max_lengths(self) -> tuple[int, ...]:
        return tuple(max((len(k[n]) for k in self.terms), default=0) for n in range(self.arity))

    def __str__(self):
        def key(item):
            k = item[0]
            return tuple(p.key(w) for p, w in zip(self.legs, k))

        items = sorted(self.terms.items(), key=key, reverse=True)
        return linear_text(
            [(" (x) ".join(p.word_text(w) for p, w in zip(self.legs, k)), c) for k, c in items]
        )

    def __repr__(self):
        return f"TensorElement({self})"


def tensor_mul(s: TensorElement, t: TensorElement) -> TensorElement:
    """Componentwise product ``(a1 (x) a2)(b1 (x) b2) = a1 b1 (x) a2 b2``."""
    s._check(t)
    out: dict = {}
    legs = s.legs
    for ks, cs in s.terms.items():
        for kt, ct in t.terms.items():
            partial = {(): cs * ct}
            for p, u, v in zip(legs, ks, kt):
                img = p.nf_word(u + v)
                nxt: dict = {}
                for k, a in partial.items():
                    for w, b in img.items():
                        _acc(nxt, k + (w,), a * b)
                partial = nxt
            for k, a in partial.items():
                _acc(out, k, a)
    return TensorElement(legs, out)


def switch(t: TensorElement, i: int, j: int) -> TensorElement:
    """Exchange legs ``i`` and ``j`` (1-based, ``i < j``)."""
    if not 1 <= i < j <= t.arity:
        raise TensorError(f"bad leg indices {i}, {j} for arity {t.arity}")
    a, b = i - 1, j - 1

    def sw(seq):
        seq = list(seq)
        seq[a], seq[b] = seq[b], seq[a]
        return tuple(seq)

    return TensorElement(sw(t.legs), {sw(k): c for k, c in t.terms.items()})


def tensor_unit(legs: Sequence[Presentation]) -> TensorElement:
    return TensorElement(legs, {tuple(() for _ in legs): ONE})


# -- balanced tensor product ------------------------------------------------------


class BalancedSpace:
    """Truncated model of ``A (x)_B A``.

    Raw pairs ``(u, v)`` of normal words with ``len(u) + len(v) <= d + slack``
    are taken modulo ``u*b (x) v - u (x) b*v`` for ``b`` ranging over the
    supplied spanning set of ``B`` and all words with the products inside the
    truncation.  Quotient representatives are the raw pairs left free by the
    elimination, which prefers pairs with short right legs.
    """

    def __init__(self, A: Presentation, B_elems: Iterable[NcPoly], d: int, slack: int = 2):
        self.A = A
        self.d = d
        self.slack = slack
        self.N = d + slack
        words = A.basis_up_to(self.N)
        self.words = words
        self.B = _span_closure(A, list(B_elems), words, self.N)
        pairs = [(u, v) for u in words for v in words if len(u) + len(v) <= self.N]
        pairs.sort(key=lambda p: (len(p[0]) + len(p[1]), A.key(p[1]), A.key(p[0])))
        self.raw = pairs
        self.raw_index = {p: k for k, p in enumerate(pairs)}
        self.relations: list[dict] = []
        self._ech = Echelon()
        top = A.max_word_length() if A.is_finite() else None
        # every pair is present, so no relation needs to be cut off
        self.complete = top is not None and self.N >= 2 * top
        for b in self.B:
            room = self.N - b.max_length()
            if self.complete:
                room = self.N
            elif room < 0:
                continue
            for u in words:
                if len(u) > room:
                    continue
                ub = A.normal_form({u + w: c for w, c in b.terms.items()})
                for v in words:
                    if len(u) + len(v) > room:
                        continue
                    bv = A.normal_form({w + v: c for w, c in b.terms.items()})
                    vec: dict = {}
                    for w, c in ub.items():
                        _acc(vec, self.raw_index[(w, v)], c)
                    for w, c in bv.items():
                        _acc(vec, self.raw_index[(u, w)], -c)
                    if vec:
                        self.relations.append(vec)
                        self._ech.add(vec)
        pivots = set(self._ech.rows)
        self.reps = [k for k in range(len(pairs)) if k not in pivots]
        self.rep_pos = {k: n for n, k in enumerate(self.reps)}

    @property
    def dim(self) -> int:
        return len(self.reps)

    def rep_pairs(self) -> list[tuple[Word, Word]]:
        return [self.raw[k] for k in self.reps]

    def project(self, raw) -> dict:
        """Coordinates (position -> Scalar) of a raw element of ``A (x) A``."""
        vec: dict = {}
        items = raw.terms.items() if isinstance(raw, TensorElement) else raw.items()
        for (u, v), c in items:
            k = self.raw_index.get((u, v))
            if k is None:
                raise TensorError("element exceeds the truncation")
            _acc(vec, k, scalar(c))
        res, _ = self._ech.reduce(vec)
        return {self.rep_pos[k]: c for k, c in res.items()}

    def element(self, coords: Mapping) -> TensorElement:
        """Representative tensor for quotient coordinates."""
        return TensorElement(
            (self.A, self.A), {self.raw[self.reps[n]]: c for n, c in coords.items() if c}
        )

    def text(self, coords: Mapping) -> str:
        t = self.element(coords)
        return str(t).replace(" (x) ", " (x)_B ")


def _span_closure(A: Presentation, elems: list[NcPoly], words: list[Word], N: int) -> list[NcPoly]:
    """Basis of the truncated subalgebra spanned by products of ``elems``.

    Scalar multiples of the unit are dropped since they give no relations.
    """
    pos = {w: k for k, w in enumerate(words)}
    ech = Echelon()
    ech.add({pos[()]: ONE})
    basis: list[NcPoly] = []

    def offer(p: NcPoly) -> bool:
        if p.is_zero() or p.max_length() > N:
            return False
        if ech.add({pos[w]: c for w, c in p.terms.items()}) is None:
            basis.append(p)
            return True
        return False

    for p in elems:
        offer(p)
    frontier = list(basis)
    while frontier:
        fresh = []
        for x in frontier:
            for y in list(basis):
                for z in (x * y, y * x):
                    if offer(z):
                        fresh.append(z)
        frontier = fresh
    return basis


def balanced_quotient(A: Presentation, B_gens: Iterable[NcPoly], d: int, slack: int = 2) -> BalancedSpace:
    return BalancedSpace(A, B_gens, d, slack)


def project(bs: BalancedSpace, raw) -> dict:
    return bs.project(raw)
