"""Dense structure-constant models of finite-dimensional (co)algebras.

Everything here is computed from closed formulas on labelled bases and
plain tensor contraction, with no rewriting, so it can cross-examine the
presentation engine.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Hashable, Mapping, Sequence

from .exactfield import ONE, ZERO, ExactMatrix, I, Scalar, kernel, rank, scalar


class OracleError(ValueError):
    pass


Label = Hashable


def _acc(out: dict, key, c):
    v = out.get(key, ZERO) + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


@dataclass
class StructureConstants:
    """Multiplication, comultiplication, counit and antipode on a labelled basis.

    ``mul`` maps a pair of labels to a vector (dict label -> Scalar), ``comul``
    a label to a dict over label pairs, ``antipode`` a label to a vector.
    Any of them may be missing for algebras or coalgebras.
    """

    name: str
    basis: list
    mul: dict | None = None
    unit: Label | None = None
    comul: dict | None = None
    counit: dict | None = None
    antipode: dict | None = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    def unit_vector(self) -> dict:
        if self.unit is not None:
            return {self.unit: ONE}
        return {b: ONE for b in self.basis}

    # vector-level operations
    def multiply(self, x: Mapping, y: Mapping) -> dict:
        out: dict = {}
        for a, s in x.items():
            for b, t in y.items():
                for c, u in self.mul[(a, b)].items():
                    _acc(out, c, s * t * u)
        return out

    def coproduct(self, x: Mapping) -> dict:
        out: dict = {}
        for a, s in x.items():
            for k, t in self.comul[a].items():
                _acc(out, k, s * t)
        return out

    def apply_antipode(self, x: Mapping) -> dict:
        out: dict = {}
        for a, s in x.items():
            for b, t in self.antipode[a].items():
                _acc(out, b, s * t)
        return out

    def tensor_multiply(self, x: Mapping, y: Mapping) -> dict:
        """Componentwise product in ``A (x) A``."""
        out: dict = {}
        for (a1, a2), s in x.items():
            for (b1, b2), t in y.items():
                for c1, u in self.mul[(a1, b1)].items():
                    for c2, v in self.mul[(a2, b2)].items():
                        _acc(out, (c1, c2), s * t * u * v)
        return out

    def verify(self) -> list[str]:
        """Axioms that fail on the basis (empty list when all hold)."""
        bad = []
        B = self.basis
        if self.mul is not None:
            for a, b, c in product(B, repeat=3):
                if self.multiply(self.multiply({a: ONE}, {b: ONE}), {c: ONE}) != self.multiply({a: ONE}, self.multiply({b: ONE}, {c: ONE})):
                    bad.append("associativity")
                    break
            if self.mul:
                one = self.unit_vector()
                for a in B:
                    if self.multiply(one, {a: ONE}) != {a: ONE} or self.multiply({a: ONE}, one) != {a: ONE}:
                        bad.append("unit")
                        break
        if self.comul is not None:
            for a in B:
                left: dict = {}
                right: dict = {}
                for (x, y), s in self.comul[a].items():
                    for (u, v), t in self.comul[x].items():
                        _acc(left, (u, v, y), s * t)
                    for (u, v), t in self.comul[y].items():
                        _acc(right, (x, u, v), s * t)
                if left != right:
                    bad.append("coassociativity")
                    break
            for a in B:
                l1: dict = {}
                l2: dict = {}
                for (x, y), s in self.comul[a].items():
                    _acc(l1, y, s * self.counit.get(x, ZERO))
                    _acc(l2, x, s * self.counit.get(y, ZERO))
                if l1 != {a: ONE} or l2 != {a: ONE}:
                    bad.append("counit")
                    break
        if self.mul is not None and self.comul is not None:
            for a, b in product(B, repeat=2):
                if self.coproduct(self.multiply({a: ONE}, {b: ONE})) != self.tensor_multiply(self.comul[a], self.comul[b]):
                    bad.append("bialgebra")
                    break
        if self.antipode is not None:
            for a in B:
                l: dict = {}
                r: dict = {}
                for (x, y), s in self.comul[a].items():
                    for k, t in self.multiply(self.antipode[x], {y: ONE}).items():
                        _acc(l, k, s * t)
                    for k, t in self.multiply({x: ONE}, self.antipode[y]).items():
                        _acc(r, k, s * t)
                eps = self.counit.get(a, ZERO)
                target = {k: eps * v for k, v in self.unit_vector().items()} if eps else {}
                if l != target or r != target:
                    bad.append("antipode")
                    break
        return bad


def from_generators(
    name: str,
    basis: Sequence[Label],
    mul: Callable[[Label, Label], Mapping],
    unit: Label,
    word: Callable[[Label], Sequence[Label]],
    gen_comul: Mapping | None = None,
    gen_counit: Mapping | None = None,
    gen_antipode: Mapping | None = None,
) -> StructureConstants:
    """Extend generator data multiplicatively over ``basis``.

    ``word(label)`` lists generator labels whose product is the basis element.
    """
    sc = StructureConstants(name, list(basis), {}, unit)
    for a, b in product(basis, repeat=2):
        sc.mul[(a, b)] = {k: scalar(v) for k, v in mul(a, b).items() if scalar(v)}
    if gen_comul is not None:
        sc.comul, sc.counit = {}, {}
        for b in basis:
            t: dict = {(unit, unit): ONE}
            e = ONE
            for g in word(b):
                t = sc.tensor_multiply(t, gen_comul[g])
                e = e * scalar(gen_counit[g])
            sc.comul[b] = t
            if e:
                sc.counit[b] = e
    if gen_antipode is not None:
        sc.antipode = {}
        for b in basis:
            v: dict = {unit: ONE}
            for g in word(b):
                v = sc.multiply(gen_antipode[g], v)
            sc.antipode[b] = v
    return sc


# -- concrete models ---------------------------------------------------------------------


def cyclic_group(n: int):
    elems = list(range(n))
    return elems, (lambda a, b: (a + b) % n), (lambda a: (-a) % n), 0


def symmetric_group_3():
    elems = [(0, 1, 2), (1, 0, 2), (0, 2, 1), (1, 2, 0), (2, 0, 1), (2, 1, 0)]

    def mul(p, r):
        # apply r first, then p
        return tuple(p[r[k]] for k in range(3))

    def inv(p):
        out = [0, 0, 0]
        for k, v in enumerate(p):
            out[v] = k
        return tuple(out)

    return elems, mul, inv, (0, 1, 2)


def group_algebra(name: str, group) -> StructureConstants:
    elems, mul, inv, e = group
    sc = StructureConstants(name, list(elems), {}, e, {}, {}, {})
    for g, h in product(elems, repeat=2):
        sc.mul[(g, h)] = {mul(g, h): ONE}
    for g in elems:
        sc.comul[g] = {(g, g): ONE}
        sc.counit[g] = ONE
        sc.antipode[g] = {inv(g): ONE}
    return sc


def function_algebra(name: str, group) -> StructureConstants:
    """``O(G)`` on the delta-function basis; the unit is the sum of all deltas."""
    elems, mul, inv, e = group
    sc = StructureConstants(name, list(elems), {}, None, {}, {}, {})
    for g, h in product(elems, repeat=2):
        sc.mul[(g, h)] = {g: ONE} if g == h else {}
    for g in elems:
        t: dict = {}
        for h, k in product(elems, repeat=2):
            if mul(h, k) == g:
                t[(h, k)] = ONE
        sc.comul[g] = t
        if g == e:
            sc.counit[g] = ONE
        sc.antipode[g] = {inv(g): ONE}
    return sc


def sweedler() -> StructureConstants:
    basis = [(i, j) for i in range(2) for j in range(2)]

    def mul(a, b):
        (i, j), (k, l) = a, b
        if j + l > 1:
            return {}
        sign = -1 if (j * k) % 2 else 1
        return {((i + k) % 2, j + l): sign}

    g, x = (1, 0), (0, 1)
    e = (0, 0)
    comul = {g: {(g, g): ONE}, x: {(x, e): ONE, (g, x): ONE}}
    counit = {g: 1, x: 0}
    anti = {g: {g: ONE}, x: {(1, 1): -ONE}}
    return from_generators("H4", basis, mul, e, lambda b: [g] * b[0] + [x] * b[1], comul, counit, anti)


def taft() -> StructureConstants:
    basis = [(i, j) for i in range(4) for j in range(2)]

    def mul(p, r):
        (i, j), (k, l) = p, r
        if j + l > 1:
            return {}
        # b a = -i a b, so b a^k = (-i)^k a^k b
        return {((i + k) % 4, j + l): (-I) ** (j * k)}

    a, b = (1, 0), (0, 1)
    e = (0, 0)
    comul = {a: {(a, a): ONE}, b: {(a, b): ONE, (b, (3, 0)): ONE}}
    counit = {a: 1, b: 0}
    anti = {a: {(3, 0): ONE}, b: {b: I}}
    return from_generators("Taft", basis, mul, e, lambda lab: [a] * lab[0] + [b] * lab[1], comul, counit, anti)


def trigonometric() -> StructureConstants:
    c, s = "cos", "sin"
    return StructureConstants(
        "Trig", [c, s], comul={c: {(c, c): ONE, (s, s): -ONE}, s: {(s, c): ONE, (c, s): ONE}}, counit={c: ONE}
    )


def truncated_polynomial(n: int) -> StructureConstants:
    basis = list(range(n))
    sc = StructureConstants(f"F[X]/(X^{n})", basis, {}, 0)
    for i, j in product(basis, repeat=2):
        sc.mul[(i, j)] = {i + j: ONE} if i + j < n else {}
    return sc


def tensor_algebra(A: StructureConstants, H: StructureConstants) -> StructureConstants:
    """``A (x) H`` with componentwise product and the coproduct of ``H`` on the second factor."""
    basis = [(a, h) for a in A.basis for h in H.basis]
    sc = StructureConstants(f"{A.name}(x){H.name}", basis, {}, (A.unit, H.unit))
    for (a, h), (b, k) in product(basis, repeat=2):
        out: dict = {}
        for c, s in A.mul[(a, b)].items():
            for m, t in H.mul[(h, k)].items():
                _acc(out, (c, m), s * t)
        sc.mul[((a, h), (b, k))] = out
    return sc


# -- coactions and canonical maps ----------------------------------------------------------


@dataclass
class OracleCoaction:
    A: StructureConstants
    H: StructureConstants
    delta: dict  # A label -> {(A label, H label): Scalar}
    unit_A: dict = field(default_factory=dict)
    unit_H: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.unit_A:
            self.unit_A = self.A.unit_vector()
        if not self.unit_H:
            self.unit_H = self.H.unit_vector()

    def chi(self, x: Label, y: Label) -> dict:
        out: dict = {}
        for (a, h), s in self.delta[y].items():
            for c, t in self.A.mul[(x, a)].items():
                _acc(out, (c, h), s * t)
        return out

    def coinvariants(self) -> list[dict]:
        A, H = self.A, self.H
        rows = [(a, h) for a in A.basis for h in H.basis]
        pos = {r: k for k, r in enumerate(rows)}
        m = ExactMatrix.zeros(len(rows), A.dim)
        for j, b in enumerate(A.basis):
            for key, s in self.delta[b].items():
                m.entries[pos[key]][j] = m.entries[pos[key]][j] + s
            for u, t in self.unit_H.items():
                m.entries[pos[(b, u)]][j] = m.entries[pos[(b, u)]][j] - t
        return [{A.basis[k]: v for k, v in enumerate(vec) if v} for vec in kernel(m)]


@dataclass
class OracleCanonical:
    balanced_dim: int
    chi_rank: int
    target_dim: int
    kills_relations: bool

    @property
    def bijective(self) -> bool:
        return self.kills_relations and self.chi_rank == self.target_dim == self.balanced_dim

    @property
    def surjective(self) -> bool:
        return self.chi_rank == self.target_dim


def canonical_map(c: OracleCoaction) -> OracleCanonical:
    A, H = c.A, c.H
    B = c.coinvariants()
    pairs = [(x, y) for x in A.basis for y in A.basis]
    ppos = {p: k for k, p in enumerate(pairs)}
    rel_cols = []
    for b in B:
        for x, y in pairs:
            col: dict = {}
            for u, s in A.multiply({x: ONE}, b).items():
                _acc(col, (u, y), s)
            for v, s in A.multiply(b, {y: ONE}).items():
                _acc(col, (x, v), -s)
            if col:
                rel_cols.append(col)
    rel = ExactMatrix.zeros(len(pairs), len(rel_cols))
    for j, col in enumerate(rel_cols):
        for p, s in col.items():
            rel.entries[ppos[p]][j] = s
    r = rank(rel) if rel_cols else 0
    targets = [(a, h) for a in A.basis for h in H.basis]
    tpos = {t: k for k, t in enumerate(targets)}
    chi = ExactMatrix.zeros(len(targets), len(pairs))
    for j, (x, y) in enumerate(pairs):
        for t, s in c.chi(x, y).items():
            chi.entries[tpos[t]][j] = s
    kills = all(not any(v for v in row) for row in (chi @ rel).entries) if rel_cols else True
    return OracleCanonical(len(pairs) - r, rank(chi), len(targets), kills)


def can_matrix(sc: StructureConstants) -> ExactMatrix:
    """``can_H(x (x) y) = x y_(1) (x) y_(2)`` as a dense matrix on label pairs."""
    pairs = [(x, y) for x in sc.basis for y in sc.basis]
    pos = {p: k for k, p in enumerate(pairs)}
    m = ExactMatrix.zeros(len(pairs), len(pairs))
    for j, (x, y) in enumerate(pairs):
        for (u, v), s in sc.comul[y].items():
            for w, t in sc.mul[(x, u)].items():
                m.entries[pos[(w, v)]][j] = m.entries[pos[(w, v)]][j] + s * t
    return m


def regular(sc: StructureConstants) -> OracleCoaction:
    return OracleCoaction(sc, sc, {b: dict(sc.comul[b]) for b in sc.basis})
