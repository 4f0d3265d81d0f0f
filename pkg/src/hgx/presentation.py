"""Finitely presented algebras: words, rewriting to normal form, bases."""

from __future__ import annotations

import re
import sys
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .exactfield import ONE, ZERO, Scalar, g_add, g_from, g_mul, G0, G1, scalar

Word = tuple  # tuple of generator indices

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


class PresentationError(ValueError):
    """Invalid presentation (unknown generator, non-decreasing rule, ...)."""


class NonTermination(RuntimeError):
    """Rewriting exceeded its step budget."""


@dataclass(frozen=True)
class Ambiguity:
    word: Word
    left: dict
    right: dict


class Presentation:
    """Generators plus oriented rules ``lhs -> rhs``.

    The termination order compares word length first and then the generator
    positions in declaration order (read left to right, or right to left for
    presentations of opposite algebras).  Every rule must strictly decrease
    in this order; rules are tried in declaration order on the leftmost redex.
    """

    def __init__(
        self,
        gens: Sequence[str],
        rules: Iterable[tuple[Word, Mapping]] = (),
        grading: Mapping[str, int] | None = None,
        name: str = "",
        reverse_order: bool = False,
        step_budget: int = 200_000,
    ):
        self.gens = list(gens)
        if len(set(self.gens)) != len(self.gens):
            raise PresentationError("duplicate generator")
        self.index = {g: k for k, g in enumerate(self.gens)}
        self.name = name
        self.reverse_order = reverse_order
        self.step_budget = step_budget
        self.grading = dict(grading) if grading else None
        if self.grading:
            for g in self.grading:
                if g not in self.index:
                    raise PresentationError(f"unknown generator {g!r} in grading")
        self.rules: list[tuple[Word, dict]] = []
        for lhs, rhs in rules:
            lhs = tuple(lhs)
            rhs = {tuple(w): scalar(c) for w, c in rhs.items() if scalar(c)}
            self._validate_rule(lhs, rhs)
            self.rules.append((lhs, rhs))
        for k, (lhs, _) in enumerate(self.rules):
            for j, (other, _) in enumerate(self.rules):
                if j != k and _contains(lhs, other):
                    raise PresentationError(
                        f"rule left-hand side {self.word_text(lhs)} is reducible by {self.word_text(other)}"
                    )
        self._by_first: dict[int, list[tuple[Word, dict]]] = {}
        for lhs, rhs in self.rules:
            self._by_first.setdefault(lhs[0], []).append((lhs, rhs))
        self._lhs_set = {lhs for lhs, _ in self.rules}
        self._maxlhs = max((len(l) for l, _ in self.rules), default=0)
        self._nf: dict[Word, dict] = {}
        self._levels: list[list[Word]] = [[()]]
        self._steps = 0

    # -- order -------------------------------------------------------------
    def key(self, w: Word):
        return (len(w), w[::-1] if self.reverse_order else w)

    def _validate_rule(self, lhs: Word, rhs: dict):
        if not lhs:
            raise PresentationError("empty rule left-hand side")
        for w in (lhs, *rhs):
            for g in w:
                if not 0 <= g < len(self.gens):
                    raise PresentationError(f"unknown generator index {g}")
        for w in rhs:
            if not self.key(w) < self.key(lhs):
                raise PresentationError(
                    f"non-decreasing rule: {self.word_text(lhs)} -> {self.word_text(w)}"
                )

    # -- rewriting -------------------------------------------------------------
    def _redex(self, w: Word):
        by_first = self._by_first
        for pos, g in enumerate(w):
            for lhs, rhs in by_first.get(g, ()):
                if w[pos : pos + len(lhs)] == lhs:
                    return pos, lhs, rhs
        return None

    def _nf_word(self, w: Word) -> dict:
        hit = self._nf.get(w)
        if hit is not None:
            return hit
        red = self._redex(w)
        if red is None:
            out = {w: ONE}
        else:
            self._steps += 1
            if self._steps > self.step_budget:
                raise NonTermination(f"rewriting exceeded {self.step_budget} steps at {self.word_text(w)}")
            pos, lhs, rhs = red
            pre, post = w[:pos], w[pos + len(lhs) :]
            out = {}
            for r, c in rhs.items():
                for u, cu in self._nf_word(pre + r + post).items():
                    v = out.get(u, ZERO) + c * cu
                    if v:
                        out[u] = v
                    else:
                        out.pop(u, None)
        self._nf[w] = out
        return out

    def normal_form(self, terms: Mapping) -> dict:
        """Normal form of a linear combination of raw words."""
        self._steps = 0
        out: dict = {}
        for w, c in terms.items():
            c = scalar(c)
            if not c:
                continue
            for u, cu in self._nf_word(tuple(w)).items():
                v = out.get(u, ZERO) + c * cu
                if v:
                    out[u] = v
                else:
                    out.pop(u, None)
        return out

    def nf_word(self, w: Word) -> dict:
        self._steps = 0
        return self._nf_word(tuple(w))

    def is_normal(self, w: Word) -> bool:
        return self._redex(w) is None

    # -- elements -------------------------------------------------------------
    def poly(self, terms: Mapping | None = None) -> "NcPoly":
        return NcPoly(self, self.normal_form(terms or {}))

    def one(self) -> "NcPoly":
        return NcPoly(self, {(): ONE})

    def zero(self) -> "NcPoly":
        return NcPoly(self, {})

    def gen(self, name: str) -> "NcPoly":
        if name not in self.index:
            raise PresentationError(f"unknown generator {name!r}")
        return self.poly({(self.index[name],): ONE})

    def word(self, w: Word) -> "NcPoly":
        return self.poly({tuple(w): ONE})

    def parse_word(self, text: str) -> Word:
        """Parse ``a*b^2*c`` or ``1`` into a word (not normal-formed)."""
        text = text.strip()
        if text in ("", "1"):
            return ()
        out = []
        for part in text.split("*"):
            part = part.strip()
            name, _, power = part.partition("^")
            if name not in self.index:
                raise PresentationError(f"unknown generator {name!r}")
            out.extend([self.index[name]] * (int(power) if power else 1))
        return tuple(out)

    def mul(self, p: "NcPoly", r: "NcPoly") -> "NcPoly":
        return p * r

    def add(self, p: "NcPoly", r: "NcPoly") -> "NcPoly":
        return p + r

    def mul_words(self, u: Word, v: Word) -> dict:
        return self.nf_word(u + v)

    # -- bases -------------------------------------------------------------------
    def words_of_length(self, n: int) -> list[Word]:
        while len(self._levels) <= n:
            prev = self._levels[-1]
            nxt = []
            for w in prev:
                for g in range(len(self.gens)):
                    u = w + (g,)
                    if not self._suffix_reducible(u):
                        nxt.append(u)
            nxt.sort(key=self.key)
            self._levels.append(nxt)
        return self._levels[n]

    def _suffix_reducible(self, u: Word) -> bool:
        for k in range(1, min(self._maxlhs, len(u)) + 1):
            if u[-k:] in self._lhs_set:
                return True
        return False

    def basis_up_to(self, d: int) -> list[Word]:
        if d < 0:
            raise ValueError("degree bound must be non-negative")
        out: list[Word] = []
        for n in range(d + 1):
            level = self.words_of_length(n)
            if not level:
                break
            out.extend(level)
        return out

    def is_finite(self, probe: int = 12) -> bool:
        """True when the normal words die out before length ``probe``."""
        return any(not self.words_of_length(n) for n in range(probe + 1))

    def full_basis(self, probe: int = 12) -> list[Word] | None:
        return self.basis_up_to(probe) if self.is_finite(probe) else None

    def max_word_length(self, probe: int = 12) -> int | None:
        for n in range(probe + 1):
            if not self.words_of_length(n):
                return n - 1
        return None

    # -- diagnostics ------------------------------------------------------------
    def check_local_confluence(self, d: int) -> list[Ambiguity]:
        bad = []
        for l1, r1 in self.rules:
            for l2, r2 in self.rules:
                for k in range(1, min(len(l1), len(l2))):
                    if l1[-k:] != l2[:k]:
                        continue
                    w = l1 + l2[k:]
                    if len(w) > d:
                        continue
                    left = self.normal_form({u + l2[k:]: c for u, c in r1.items()})
                    right = self.normal_form({l1[:-k] + u: c for u, c in r2.items()})
                    if left != right:
                        bad.append(Ambiguity(w, left, right))
        return bad

    def check_character(self, assignment: Mapping[str, object], q_value=None) -> bool:
        """Does the commutative evaluation ``assignment`` kill every relation?"""
        vals = {}
        for g in self.gens:
            if g not in assignment:
                raise PresentationError(f"no value for generator {g!r}")
            vals[self.index[g]] = g_from(assignment[g]) if not isinstance(assignment[g], Scalar) else assignment[g].constant()

        def ev_word(w):
            acc = G1
            for g in w:
                acc = g_mul(acc, vals[g])
            return acc

        for lhs, rhs in self.rules:
            total = ev_word(lhs)
            for w, c in rhs.items():
                cv = c.eval_q(q_value) if q_value is not None else c.constant()
                total = g_add(total, g_mul(g_from((-1, 0, 1)), g_mul(cv.constant(), ev_word(w))))
            if total != G0:
                return False
        return True

    def degree(self, w: Word) -> int:
        if not self.grading:
            return len(w)
        return sum(self.grading.get(self.gens[g], 0) for g in w)

    # -- derived presentations ------------------------------------------------------
    def opposite(self) -> "Presentation":
        """Presentation of the opposite algebra on reversed words."""
        rules = [(lhs[::-1], {w[::-1]: c for w, c in rhs.items()}) for lhs, rhs in self.rules]
        return Presentation(
            self.gens, rules, self.grading, name=self.name + "^op", reverse_order=not self.reverse_order,
            step_budget=self.step_budget,
        )

    # -- display -----------------------------------------------------------------
    def word_text(self, w: Word) -> str:
        if not w:
            return "1"
        parts = []
        k = 0
        while k < len(w):
            j = k
            while j < len(w) and w[j] == w[k]:
                j += 1
            name = self.gens[w[k]]
            parts.append(name if j - k == 1 else f"{name}^{j - k}")
            k = j
        return "*".join(parts)

    def poly_text(self, terms: Mapping) -> str:
        items = sorted(terms.items(), key=lambda kv: self.key(kv[0]), reverse=True)
        return linear_text([(self.word_text(w) if w else "", c) for w, c in items])

    def __repr__(self):
        return f"Presentation({self.name or '?'}, gens={self.gens})"


def _contains(big: Word, small: Word) -> bool:
    n = len(small)
    return any(big[k : k + n] == small for k in range(len(big) - n + 1))


_INNER_SIGN = re.compile(r"(?<!\^)[+-]")


def coef_text(c: Scalar) -> tuple[str, str]:
    """Split a coefficient into a sign and a product-safe body."""
    t = c.to_text()
    sign = ""
    if t.startswith("-"):
        u = (-c).to_text()
        if not u.startswith("-"):
            sign, t = "-", u
    if " " in t or (_INNER_SIGN.search(t, 1) and not t.startswith("(")):
        t = f"({t})"
    return sign, t


def linear_text(items: Sequence[tuple[str, Scalar]]) -> str:
    """Render ``sum coef*body``; an empty body stands for the unit."""
    if not items:
        return "0"
    out = []
    for body, c in items:
        sign, ct = coef_text(c)
        if not body:
            term = ct
        elif ct == "1":
            term = body
        else:
            term = f"{ct}*{body}"
        out.append((sign, term))
    text = ("-" if out[0][0] else "") + out[0][1]
    for sign, term in out[1:]:
        text += f" {'-' if sign else '+'} {term}"
    return text


class NcPoly:
    """Linear combination of normal words of a presentation."""

    __slots__ = ("pres", "terms")

    def __init__(self, pres: Presentation, terms: Mapping):
        self.pres = pres
        self.terms = {w: c for w, c in terms.items() if c}

    def _lift(self, other) -> "NcPoly":
        if isinstance(other, NcPoly):
            if other.pres is not self.pres:
                raise PresentationError("elements of different presentations")
            return other
        c = scalar(other)
        return NcPoly(self.pres, {(): c} if c else {})

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w, ZERO) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return NcPoly(self.pres, out)

    __radd__ = __add__

    def __neg__(self):
        return NcPoly(self.pres, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c) -> "NcPoly":
        c = scalar(c)
        if not c:
            return NcPoly(self.pres, {})
        return NcPoly(self.pres, {w: c * v for w, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, NcPoly):
            return self.scale(other)
        other = self._lift(other)
        raw: dict = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = u + v
                raw[w] = raw.get(w, ZERO) + a * b
        return NcPoly(self.pres, self.pres.normal_form(raw))

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        out = self.pres.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, NcPoly):
            return self.pres is other.pres and self.terms == other.terms
        try:
            return self == self._lift(other)
        except (TypeError, PresentationError):
            return False

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, w: Word) -> Scalar:
        return self.terms.get(tuple(w), ZERO)

    def max_length(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def __str__(self):
        return self.pres.poly_text(self.terms)

    def __repr__(self):
        return f"NcPoly({self})"


def normal_form(p: Mapping, pres: Presentation) -> NcPoly:
    return NcPoly(pres, pres.normal_form(p))


def basis_up_to(pres: Presentation, d: int) -> list[Word]:
    return pres.basis_up_to(d)


def check_local_confluence(pres: Presentation, d: int) -> list[Ambiguity]:
    return pres.check_local_confluence(d)


def check_character(pres: Presentation, assignment: Mapping, q_value=None) -> bool:
    return pres.check_character(assignment, q_value)
