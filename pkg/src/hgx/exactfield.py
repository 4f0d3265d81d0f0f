"""Exact arithmetic in Q(i)(q) and dense exact linear algebra.

A Gaussian rational is stored as an integer triple ``(re, im, den)`` with
``den > 0`` and ``gcd(re, im, den) == 1``.  Polynomials in ``q`` are tuples of
Gaussian rationals, lowest degree first, without trailing zeros.  A
:class:`Scalar` is a reduced fraction of two such polynomials whose
denominator is monic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union

GaussTriple = tuple  # (re, im, den)


class FieldError(ArithmeticError):
    """Raised for division by zero or evaluation at a pole."""


class Inconsistent(ValueError):
    """Raised by :func:`solve` when the linear system has no solution."""


# -- Gaussian rationals -----------------------------------------------------

G0 = (0, 0, 1)
G1 = (1, 0, 1)
GI = (0, 1, 1)


def _gnorm(re: int, im: int, den: int) -> GaussTriple:
    if den < 0:
        re, im, den = -re, -im, -den
    if re == 0 and im == 0:
        return G0
    g = gcd(gcd(re, im), den)
    if g != 1:
        re //= g
        im //= g
        den //= g
    return (re, im, den)


def g_add(a: GaussTriple, b: GaussTriple) -> GaussTriple:
    if a[2] == b[2]:
        return _gnorm(a[0] + b[0], a[1] + b[1], a[2])
    return _gnorm(a[0] * b[2] + b[0] * a[2], a[1] * b[2] + b[1] * a[2], a[2] * b[2])


def g_neg(a: GaussTriple) -> GaussTriple:
    return (-a[0], -a[1], a[2])


def g_sub(a: GaussTriple, b: GaussTriple) -> GaussTriple:
    return g_add(a, g_neg(b))


def g_mul(a: GaussTriple, b: GaussTriple) -> GaussTriple:
    return _gnorm(a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0], a[2] * b[2])


def g_inv(a: GaussTriple) -> GaussTriple:
    re, im, den = a
    n = re * re + im * im
    if n == 0:
        raise FieldError("division by zero")
    # den / (re + i im) = den (re - i im) / n
    return _gnorm(den * re, -den * im, n)


def g_div(a: GaussTriple, b: GaussTriple) -> GaussTriple:
    return g_mul(a, g_inv(b))


def g_from(value) -> GaussTriple:
    """Convert an int, Fraction or complex with integral parts to a triple."""
    if isinstance(value, tuple):
        return _gnorm(*value)
    if isinstance(value, bool):
        value = int(value)
    if isinstance(value, int):
        return (value, 0, 1) if value else G0
    if isinstance(value, Fraction):
        return _gnorm(value.numerator, 0, value.denominator)
    if isinstance(value, complex):
        re, im = Fraction(value.real), Fraction(value.imag)
        den = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        return _gnorm(int(re * den), int(im * den), den)
    raise TypeError(f"cannot convert {value!r} to a Gaussian rational")


def g_text(a: GaussTriple) -> str:
    re, im, den = a
    if im == 0:
        s = str(re)
    elif re == 0:
        s = "i" if im == 1 else "-i" if im == -1 else f"{im}*i"
    else:
        ipart = "i" if abs(im) == 1 else f"{abs(im)}*i"
        s = f"{re}{'+' if im > 0 else '-'}{ipart}"
    if den == 1:
        return s
    if re != 0 and im != 0:
        s = f"({s})"
    return f"{s}/{den}"


# -- polynomials over Q(i) ---------------------------------------------------

P0: tuple = ()
P1: tuple = (G1,)


def _ptrim(c: list) -> tuple:
    while c and c[-1] == G0:
        c.pop()
    return tuple(c)


def p_add(a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, x in enumerate(b):
        out[k] = g_add(out[k], x)
    return _ptrim(out)


def p_neg(a: tuple) -> tuple:
    return tuple(g_neg(x) for x in a)


def p_sub(a: tuple, b: tuple) -> tuple:
    return p_add(a, p_neg(b))


def p_scale(a: tuple, c: GaussTriple) -> tuple:
    if c == G0:
        return P0
    if c == G1:
        return a
    return tuple(g_mul(x, c) for x in a)


def p_mul(a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return P0
    if len(a) == 1:
        return p_scale(b, a[0])
    if len(b) == 1:
        return p_scale(a, b[0])
    out = [G0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == G0:
            continue
        for j, y in enumerate(b):
            out[i + j] = g_add(out[i + j], g_mul(x, y))
    return _ptrim(out)


def p_divmod(a: tuple, b: tuple) -> tuple[tuple, tuple]:
    if not b:
        raise FieldError("polynomial division by zero")
    inv_lc = g_inv(b[-1])
    rem = list(a)
    quo = [G0] * max(len(a) - len(b) + 1, 0)
    while len(rem) >= len(b) and rem:
        shift = len(rem) - len(b)
        c = g_mul(rem[-1], inv_lc)
        quo[shift] = c
        for k, y in enumerate(b):
            rem[shift + k] = g_sub(rem[shift + k], g_mul(c, y))
        rem = list(_ptrim(rem))
    return _ptrim(quo), tuple(rem)


def p_monic(a: tuple) -> tuple:
    if not a or a[-1] == G1:
        return a
    return p_scale(a, g_inv(a[-1]))


def p_gcd(a: tuple, b: tuple) -> tuple:
    while b:
        a, b = b, p_divmod(a, b)[1]
    return p_monic(a)


def p_eval(a: tuple, x: GaussTriple) -> GaussTriple:
    acc = G0
    for c in reversed(a):
        acc = g_add(g_mul(acc, x), c)
    return acc


def p_text(a: tuple, var: str = "q") -> str:
    if not a:
        return "0"
    parts = []
    for k in range(len(a) - 1, -1, -1):
        c = a[k]
        if c == G0:
            continue
        mono = "" if k == 0 else var if k == 1 else f"{var}^{k}"
        if not mono:
            body = g_text(c)
        elif c == G1:
            body = mono
        elif c == (-1, 0, 1):
            body = "-" + mono
        else:
            ct = g_text(c)
            if c[0] != 0 and c[1] != 0 and c[2] == 1:
                ct = f"({ct})"
            body = f"{ct}*{mono}"
        parts.append(body)
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


# -- the scalar field ----------------------------------------------------------

Number = Union[int, Fraction, complex]


class Scalar:
    """Element of Q(i)(q) kept as a reduced fraction with monic denominator."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: tuple = P0, den: tuple = P1, _reduced: bool = False):
        if not _reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den
        self._hash = None

    # constructors
    @staticmethod
    def of(value: "Scalar | Number | GaussTriple") -> "Scalar":
        if isinstance(value, Scalar):
            return value
        g = g_from(value)
        return Scalar((g,) if g != G0 else P0, P1, True)

    @staticmethod
    def q() -> "Scalar":
        return Q

    @staticmethod
    def i() -> "Scalar":
        return I

    # predicates
    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == P1 and self.den == P1

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and self.den == P1

    def constant(self) -> GaussTriple:
        if not self.is_constant():
            raise ValueError(f"{self} depends on q")
        return self.num[0] if self.num else G0

    # arithmetic
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self.num:
            return other
        if not other.num:
            return self
        if self.den == other.den:
            if self.den == P1:
                return Scalar(p_add(self.num, other.num), P1, True)
            return Scalar(p_add(self.num, other.num), self.den)
        return Scalar(
            p_add(p_mul(self.num, other.den), p_mul(other.num, self.den)),
            p_mul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return Scalar(p_neg(self.num), self.den, True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return ZERO
        if self.den == P1 and other.den == P1:
            return Scalar(p_mul(self.num, other.num), P1, True)
        return Scalar(p_mul(self.num, other.num), p_mul(self.den, other.den))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self.num:
            raise FieldError("division by zero")
        return Scalar(self.den, self.num)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # comparison and hashing
    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return bool(self.num)

    # evaluation and display
    def eval_q(self, value) -> "Scalar":
        """Substitute ``q = value`` exactly; raises FieldError at a pole."""
        x = g_from(value) if not isinstance(value, Scalar) else value.constant()
        d = p_eval(self.den, x)
        if d == G0:
            raise FieldError(f"pole of {self} at q = {g_text(x)}")
        return Scalar.of(g_div(p_eval(self.num, x), d))

    def to_text(self) -> str:
        n = p_text(self.num)
        if self.den == P1:
            return n
        d = p_text(self.den)
        if len([c for c in self.num if c != G0]) > 1 or (self.num and self.num[-1][0] and self.num[-1][1]):
            n = f"({n})"
        return f"{n}/({d})" if " " in d else f"{n}/{d}"

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Scalar({self.to_text()})"


def _reduce(num: tuple, den: tuple) -> tuple[tuple, tuple]:
    if not den:
        raise FieldError("division by zero")
    if not num:
        return P0, P1
    if len(den) > 1:
        g = p_gcd(num, den)
        if len(g) > 1:
            num = p_divmod(num, g)[0]
            den = p_divmod(den, g)[0]
    lc = den[-1]
    if lc != G1:
        inv = g_inv(lc)
        num = p_scale(num, inv)
        den = p_scale(den, inv)
    return num, den


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction, complex)):
        return Scalar.of(x)
    return NotImplemented


ZERO = Scalar(P0, P1, True)
ONE = Scalar(P1, P1, True)
Q = Scalar((G0, G1), P1, True)
I = Scalar((GI,), P1, True)


def scalar(value) -> Scalar:
    """Coerce ints, Fractions, complex numbers or Scalars to a Scalar."""
    return Scalar.of(value)


def eval_q(a: Scalar, value) -> Scalar:
    return a.eval_q(value)


# -- exact matrices --------------------------------------------------------------


class ExactMatrix:
    """Dense matrix of Scalars."""

    def __init__(self, entries: Sequence[Sequence], cols: int | None = None):
        self.entries = [[scalar(x) for x in row] for row in entries]
        self.rows = len(self.entries)
        if cols is None:
            cols = len(self.entries[0]) if self.entries else 0
        self.cols = cols
        for row in self.entries:
            if len(row) != cols:
                raise ValueError("ragged matrix")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls([[ZERO] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[ONE if r == c else ZERO for c in range(n)] for r in range(n)], n)

    @classmethod
    def from_columns(cls, columns: Sequence[dict], rows: int) -> "ExactMatrix":
        m = cls.zeros(rows, len(columns))
        for c, col in enumerate(columns):
            for r, v in col.items():
                m.entries[r][c] = v
        return m

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r][c]

    def __eq__(self, other):
        return isinstance(other, ExactMatrix) and self.entries == other.entries and self.cols == other.cols

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        out = ExactMatrix.zeros(self.rows, other.cols)
        for r in range(self.rows):
            row = self.entries[r]
            for k in range(self.cols):
                a = row[k]
                if not a:
                    continue
                for c, b in enumerate(other.entries[k]):
                    if b:
                        out.entries[r][c] = out.entries[r][c] + a * b
        return out

    def apply(self, vec: Sequence) -> list:
        if len(vec) != self.cols:
            raise ValueError("dimension mismatch")
        out = []
        for row in self.entries:
            acc = ZERO
            for a, b in zip(row, vec):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return out

    def column(self, c: int) -> list:
        return [row[c] for row in self.entries]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix([list(col) for col in zip(*self.entries)] if self.rows else [], self.rows)

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols})"


def rref(m: ExactMatrix) -> tuple[ExactMatrix, list[int], int]:
    """Reduced row echelon form, pivot columns and rank."""
    rows = [dict((c, v) for c, v in enumerate(row) if v) for row in m.entries]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        p = next((k for k in range(r, len(rows)) if c in rows[k]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = {k: v * inv for k, v in rows[r].items()}
        for k in range(len(rows)):
            if k != r and c in rows[k]:
                f = rows[k][c]
                row = dict(rows[k])
                for kk, v in rows[r].items():
                    nv = row.get(kk, ZERO) - f * v
                    if nv:
                        row[kk] = nv
                    else:
                        row.pop(kk, None)
                rows[k] = row
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    out = ExactMatrix.zeros(m.rows, m.cols)
    for k, row in enumerate(rows):
        for c, v in row.items():
            out.entries[k][c] = v
    return out, pivots, len(pivots)


def rank(m: ExactMatrix) -> int:
    return rref(m)[2]


def kernel(m: ExactMatrix) -> list[list[Scalar]]:
    """Basis of the null space, one vector per free column."""
    red, pivots, _ = rref(m)
    pivset = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivset:
            continue
        v = [ZERO] * m.cols
        v[free] = ONE
        for k, p in enumerate(pivots):
            v[p] = -red.entries[k][free]
        basis.append(v)
    return basis


def solve(m: ExactMatrix, rhs: Sequence) -> list[Scalar]:
    """One solution of ``m x = rhs``; raises :class:`Inconsistent` otherwise."""
    if len(rhs) != m.rows:
        raise ValueError("dimension mismatch")
    aug = ExactMatrix([list(row) + [scalar(b)] for row, b in zip(m.entries, rhs)], m.cols + 1)
    red, pivots, _ = rref(aug)
    if pivots and pivots[-1] == m.cols:
        raise Inconsistent("inconsistent")
    x = [ZERO] * m.cols
    for k, p in enumerate(pivots):
        x[p] = red.entries[k][m.cols]
    return x


# -- sparse incremental elimination -------------------------------------------------


class Echelon:
    """Incremental echelon basis of sparse vectors ``{int key: Scalar}``.

    Each stored row is normalised so that its largest key (the pivot) has
    coefficient one.  Rows remember which added vectors they combine, so the
    structure answers span membership with an explicit combination and
    reports linear dependencies among the added vectors.
    """

    def __init__(self):
        self.rows: dict[int, tuple[dict, dict]] = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: dict, combo: dict | None = None) -> tuple[dict, dict]:
        vec = dict(vec)
        combo = dict(combo) if combo else {}
        rows = self.rows
        while True:
            hits = [k for k in vec if k in rows]
            if not hits:
                return vec, combo
            k = max(hits)
            c = vec[k]
            rvec, rcombo = rows[k]
            for kk, v in rvec.items():
                nv = vec.get(kk, ZERO) - c * v
                if nv:
                    vec[kk] = nv
                else:
                    vec.pop(kk, None)
            for t, v in rcombo.items():
                nv = combo.get(t, ZERO) - c * v
                if nv:
                    combo[t] = nv
                else:
                    combo.pop(t, None)

    def add(self, vec: dict, tag=None) -> dict | None:
        """Insert ``vec``; return None if independent, else the dependency.

        The dependency maps tags to coefficients whose combination of the
        added vectors vanishes.
        """
        res, combo = self.reduce(vec, {tag: ONE} if tag is not None else None)
        if not res:
            return combo
        piv = max(res)
        inv = res[piv].inverse()
        if not inv.is_one():
            res = {k: v * inv for k, v in res.items()}
            combo = {t: v * inv for t, v in combo.items()}
        self.rows[piv] = (res, combo)
        return None

    def express(self, vec: dict) -> dict | None:
        """Coefficients over added tags reproducing ``vec``, or None."""
        res, combo = self.reduce(vec)
        if res:
            return None
        return {t: -v for t, v in combo.items()}

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)[0]


def vec_add(acc: dict, other: dict, coef: Scalar = ONE) -> dict:
    """In-place ``acc += coef * other`` for sparse vectors; returns acc."""
    for k, v in other.items():
        nv = acc.get(k, ZERO) + (v if coef is ONE else coef * v)
        if nv:
            acc[k] = nv
        else:
            acc.pop(k, None)
    return acc


def dot(a: Iterable, b: Iterable) -> Scalar:
    acc = ZERO
    for x, y in zip(a, b):
        if x and y:
            acc = acc + x * y
    return acc


def reduced_span(vectors: Sequence[dict], n: int) -> list[dict]:
    """Canonical basis of the span of sparse vectors over positions ``0..n-1``.

    Pivots sit at the highest positions and are normalised to one.
    """
    if not vectors:
        return []
    m = ExactMatrix([[v.get(n - 1 - c, ZERO) for c in range(n)] for v in vectors], n)
    red, _, r = rref(m)
    return [{n - 1 - c: x for c, x in enumerate(red.entries[k]) if x} for k in range(r)]


def nullspace(images: Sequence[dict]) -> list[dict]:
    """Kernel of the map sending position ``k`` to the sparse vector ``images[k]``."""
    ech = Echelon()
    deps = []
    for k, img in enumerate(images):
        dep = ech.add(img, tag=k)
        if dep is not None:
            deps.append(dep)
    return reduced_span(deps, len(images))


class Indexer:
    """Assigns consecutive integers to hashable keys on first sight."""

    def __init__(self):
        self.pos: dict = {}
        self.keys: list = []

    def __call__(self, key) -> int:
        k = self.pos.get(key)
        if k is None:
            k = self.pos[key] = len(self.keys)
            self.keys.append(key)
        return k

    def vector(self, terms: dict) -> dict:
        return {self(k): c for k, c in terms.items() if c}
