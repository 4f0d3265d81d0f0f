"""Canonical maps, Hopf-Galois certificates, translation maps and related checks."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Mapping

from .comodule import (
    Coaction,
    CoinvariantBasis,
    SubgroupMap,
    coinvariants,
    induced_coaction,
    is_coinvariant,
    regular_coaction,
)
from .exactfield import ONE, ZERO, Echelon, ExactMatrix, Indexer, Scalar, scalar
from .hopfcore import (
    CONSTANTS,
    HopfError,
    HopfStructure,
    LinMap,
    antipode_power,
    check_antipode,
    convolution,
)
from .presentation import NcPoly, Presentation, Word
from .tensorspace import BalancedSpace, TensorElement
from .verdict import Verdict


class GaloisError(ValueError):
    pass


def _acc(out: dict, key, c: Scalar):
    v = out.get(key, ZERO) + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


def _chi_pair(c: Coaction, u: Word, v: Word) -> dict:
    """``u * delta(v)`` as a dict over ``(A word, H word)``."""
    out: dict = {}
    A = c.A
    for (x, h), a in c.delta_word(v).terms.items():
        for w, b in A.nf_word(u + x).items():
            _acc(out, (w, h), a * b)
    return out


def _chi(c: Coaction, raw: Mapping) -> dict:
    out: dict = {}
    for (u, v), a in raw.items():
        for k, b in _chi_pair(c, u, v).items():
            _acc(out, k, a * b)
    return out


def _finite_depth(c: Coaction) -> int | None:
    """Word-length bound covering all of ``A`` and ``H`` when both are finite."""
    if not (c.A.is_finite() and c.H.pres.is_finite()):
        return None
    return max(c.A.max_word_length(), c.H.pres.max_word_length())


def _target_words(c: Coaction, d: int, exact: bool) -> list[tuple[Word, Word]]:
    A, Hp = c.A, c.H.pres
    if exact:
        pairs = [(u, h) for u in A.full_basis() for h in Hp.full_basis()]
    else:
        pairs = [(u, h) for u in A.basis_up_to(d) for h in Hp.basis_up_to(d) if len(u) + len(h) <= d]
    pairs.sort(key=lambda p: (len(p[0]) + len(p[1]), Hp.key(p[1]), A.key(p[0])))
    return pairs


@dataclass
class GaloisCertificate:
    """Canonical map on a truncated balanced tensor product, with verdicts."""

    coaction: Coaction
    degree: int
    slack: int
    source: BalancedSpace
    target: list
    columns: list
    well_defined: bool
    injective: bool
    surjective: bool
    exact: bool
    kernel_witness: str | None = None
    unreachable: str | None = None
    translation: dict = field(default_factory=dict)
    _ech: Echelon | None = None
    _tindex: Indexer | None = None

    @property
    def bijective(self) -> bool:
        return self.injective and self.surjective

    @property
    def source_dim(self) -> int:
        return self.source.dim

    @property
    def target_dim(self) -> int:
        return len(self.target)

    @property
    def matrix(self) -> ExactMatrix:
        """Dense matrix: rows follow the truncated target, columns the source."""
        rows = {t: k for k, t in enumerate(self.target)}
        m = ExactMatrix.zeros(len(self.target), len(self.columns))
        for j, col in enumerate(self.columns):
            for key, a in col.items():
                r = rows.get(key)
                if r is not None:
                    m.entries[r][j] = a
        return m

    def preimage(self, h: Word) -> dict | None:
        """Source coordinates ``x`` with ``can(x) = 1 (x) h``, or None."""
        combo = self._ech.express({self._tindex(((), tuple(h))): ONE})
        return combo

    def translation_text(self, h: Word) -> str:
        coords = self.translation.get(tuple(h))
        if coords is None:
            raise GaloisError("no translation value at this word")
        return self.source.text(coords)

    def summary(self) -> dict:
        c = self.coaction
        return {
            "source_dim": self.source_dim,
            "target_dim": self.target_dim,
            "well_defined": self.well_defined,
            "injective": self.injective,
            "surjective": self.surjective,
            "bijective": self.bijective,
            "exact": self.exact,
            "kernel_witness": self.kernel_witness,
            "unreachable": self.unreachable,
            "translation": {c.H.pres.word_text(h): self.source.text(v) for h, v in sorted(
                self.translation.items(), key=lambda kv: c.H.pres.key(kv[0]))},
        }


def canonical_map(c: Coaction, B: CoinvariantBasis | list | None = None, d: int = 4, slack: int = 2) -> GaloisCertificate:
    """Certificate for ``a (x)_B a' -> a * delta(a')``.

    For finite ``A`` and ``H`` the truncation is widened to the whole
    algebra and the certificate is marked exact.
    """
    depth = _finite_depth(c)
    exact = depth is not None
    if exact:
        d_eff, slack_eff = 2 * depth, 0
    else:
        d_eff, slack_eff = d, slack
    if B is None:
        B = coinvariants(c, depth if exact else d + slack)
    elems = B.basis if isinstance(B, CoinvariantBasis) else list(B)
    for b in elems:
        if not is_coinvariant(c, b):
            raise GaloisError(f"{b} is not coinvariant")
    bs = BalancedSpace(c.A, elems, d_eff, slack_eff)
    well_defined = all(not _chi(c, {bs.raw[k]: a for k, a in rel.items()}) for rel in bs.relations)

    target = _target_words(c, d_eff if exact else d, exact)
    tindex = Indexer()
    for t in target:
        tindex(t)
    columns = []
    ech = Echelon()
    for n, (u, v) in enumerate(bs.rep_pairs()):
        col = _chi_pair(c, u, v)
        columns.append(col)
        ech.add(tindex.vector(col), tag=n)

    # injectivity on the span of pairs of length at most d
    inner = Echelon()
    images = Echelon()
    kernel_witness = None
    injective = True
    for k, (u, v) in enumerate(bs.raw):
        if not exact and len(u) + len(v) > d:
            continue
        proj = bs.project({(u, v): ONE})
        if inner.add(proj, tag=k) is not None:
            continue
        dep = images.add(tindex.vector(_chi_pair(c, u, v)), tag=k)
        if dep is not None:
            injective = False
            if kernel_witness is None:
                coords: dict = {}
                for kk, a in dep.items():
                    u2, v2 = bs.raw[kk]
                    for pos, b in bs.project({(u2, v2): ONE}).items():
                        _acc(coords, pos, a * b)
                kernel_witness = bs.text(coords)

    unreachable = None
    for t in target:
        if not ech.contains({tindex(t): ONE}):
            unreachable = f"{c.A.word_text(t[0])} (x) {c.H.pres.word_text(t[1])}"
            break
    cert = GaloisCertificate(
        coaction=c,
        degree=d_eff if exact else d,
        slack=slack_eff,
        source=bs,
        target=target,
        columns=columns,
        well_defined=well_defined,
        injective=injective,
        surjective=unreachable is None,
        exact=exact,
        kernel_witness=kernel_witness,
        unreachable=unreachable,
        _ech=ech,
        _tindex=tindex,
    )
    if cert.bijective:
        hwords = c.H.pres.full_basis() if exact else c.H.pres.basis_up_to(d)
        for h in hwords:
            combo = cert.preimage(h)
            if combo is not None:
                cert.translation[h] = combo
    return cert


def translation_map(cert: GaloisCertificate, h: Word | str) -> dict:
    """Balanced-quotient coordinates of ``can^-1(1 (x) h)``."""
    if isinstance(h, str):
        h = cert.coaction.H.pres.parse_word(h)
        nf = cert.coaction.H.pres.nf_word(h)
        if len(nf) != 1 or next(iter(nf.values())) != ONE:
            raise GaloisError("translation values are tabulated on normal words")
        h = next(iter(nf))
    if not cert.bijective:
        raise GaloisError("canonical map is not invertible at this truncation")
    coords = cert.translation.get(tuple(h))
    if coords is None:
        if not cert.exact and len(h) > cert.degree:
            raise GaloisError("word outside the truncation")
        coords = cert.preimage(h)
        if coords is None:
            raise GaloisError("word outside the truncation")
    return coords


def check_translation(cert: GaloisCertificate) -> Verdict:
    """``can(tau(h)) = 1 (x) h`` for every tabled word."""
    c = cert.coaction
    for h, coords in cert.translation.items():
        img: dict = {}
        for n, a in coords.items():
            for k, b in cert.columns[n].items():
                _acc(img, k, a * b)
        if img != {((), h): ONE}:
            return Verdict("translation", False, c.H.pres.word_text(h), {})
    return Verdict("translation", True, None, {"entries": len(cert.translation)})


# -- antipode synthesis --------------------------------------------------------------


@dataclass
class AntipodeSynthesis:
    ok: bool
    generators: dict
    table: dict
    verdict: Verdict
    message: str = ""
    structure: HopfStructure | None = None


def antipode_from_can(H: HopfStructure, d: int = 3, slack: int = 2) -> AntipodeSynthesis:
    """``S = (id (x) eps) o can^-1 o (1 (x) id)`` for the regular coaction over the ground field.

    The values are solved for on every normal word up to ``d``; the
    generator values are installed into a copy of ``H`` and checked.
    """
    c = regular_coaction(H)
    P = H.pres
    depth = _finite_depth(c)
    N = 2 * depth if depth is not None else d + slack
    raw = [(u, v) for u in P.basis_up_to(N) for v in P.basis_up_to(N) if len(u) + len(v) <= N]
    tindex = Indexer()
    ech = Echelon()
    for n, (u, v) in enumerate(raw):
        ech.add(tindex.vector(_chi_pair(c, u, v)), tag=n)
    words = P.full_basis() if depth is not None else P.basis_up_to(d)
    table: dict = {}
    for w in words:
        combo = ech.express({tindex(((), w)): ONE})
        if combo is None:
            msg = "no antipode certified at this truncation"
            v = Verdict("antipode_synthesis", False, f"1 (x) {P.word_text(w)} not reached", {"degree": d, "slack": slack})
            return AntipodeSynthesis(False, {}, table, v, msg)
        val: dict = {}
        for n, a in combo.items():
            u, x = raw[n]
            e = H.eps_word(x)
            if e:
                _acc(val, u, a * e)
        table[w] = NcPoly(P, val)
    gens = {g: table[(k,)] for g, k in P.index.items()}
    installed = HopfStructure(P, {g: H.delta_gen[k] for g, k in P.index.items()},
                              {g: H.eps_gen[k] for g, k in P.index.items()}, gens, H.mode, H.name)
    v = check_antipode(installed, d)
    consistent = all(installed.antipode_apply(P.word(w)) == table[w] for w in words)
    ok = bool(v.ok) and consistent
    verdict = Verdict("antipode_synthesis", ok, None if ok else (v.witness or "table disagrees with the extension"),
                      {"degree": d, "slack": slack})
    return AntipodeSynthesis(ok, gens, table, verdict, "" if ok else "synthesized map fails the antipode check",
                             installed if ok else None)


# -- Koppinen correspondence -------------------------------------------------------------


def _pairs_basis(A: Presentation, C: HopfStructure) -> list:
    aw = A.full_basis()
    cw = C.basis(1) if C.mode == CONSTANTS else C.pres.full_basis()
    if aw is None or cw is None:
        raise GaloisError("Koppinen maps need finite bases")
    return [(a, c) for a in aw for c in cw]


def koppinen_R(phi: LinMap, C: HopfStructure, A: Presentation) -> LinMap:
    """``R(phi)(a (x) c) = a phi(c_(1)) (x) c_(2)`` on ``A (x) C``."""
    basis = _pairs_basis(A, C)
    images = {}
    for a, c in basis:
        out: dict = {}
        for (c1, c2), x in C.delta_word(c).terms.items():
            for w, y in phi.apply_word(c1).items():
                for z, t in A.nf_word(a + w).items():
                    _acc(out, (z, c2), x * y * t)
        images[(a, c)] = out
    return LinMap.from_images(basis, basis, images)


def koppinen_T(psi: LinMap, C: HopfStructure, A: Presentation) -> LinMap:
    """``T(psi)(c) = (id (x) eps) psi(1 (x) c)``."""
    basis = _pairs_basis(A, C)
    cw = sorted({c for _, c in basis}, key=C.pres.key)
    aw = A.full_basis()
    images = {}
    for c in cw:
        out: dict = {}
        for (a, c2), x in psi.apply_word(((), c)).items():
            e = C.eps_word(c2)
            if e:
                _acc(out, a, x * e)
        images[c] = out
    return LinMap.from_images(cw, aw, images)


def compose(f: LinMap, g: LinMap) -> LinMap:
    """``f o g``."""
    if g.target != f.source:
        raise GaloisError("cannot compose: basis mismatch")
    return LinMap(g.source, f.target, f.matrix @ g.matrix)


def can_endomorphism(H: HopfStructure) -> LinMap:
    """``can_H`` on ``H (x) H`` for a finite Hopf structure."""
    c = regular_coaction(H)
    basis = _pairs_basis(H.pres, H)
    return LinMap.from_images(basis, basis, {(u, v): _chi_pair(c, u, v) for u, v in basis})


def random_linmap(C: HopfStructure, A: Presentation, rng: random.Random, spread: int = 3) -> LinMap:
    cw = sorted({c for _, c in _pairs_basis(A, C)}, key=C.pres.key)
    aw = A.full_basis()
    m = ExactMatrix([[rng.randint(-spread, spread) for _ in cw] for _ in aw], len(cw))
    return LinMap(cw, aw, m)


# -- freeness and exactness ---------------------------------------------------------------


def _raw_pairs(A: Presentation, N: int):
    return [(u, v) for u in A.basis_up_to(N) for v in A.basis_up_to(N) if len(u) + len(v) <= N]


def check_free(c: Coaction, d: int, slack: int = 2) -> Verdict:
    """Surjectivity of the unbalanced map ``a (x) a' -> a a'_(0) (x) a'_(1)``."""
    depth = _finite_depth(c)
    exact = depth is not None
    N = 2 * depth if exact else d + slack
    tindex = Indexer()
    ech = Echelon()
    for u, v in _raw_pairs(c.A, N):
        ech.add(tindex.vector(_chi_pair(c, u, v)))
    for t in _target_words(c, d, exact):
        if not ech.contains({tindex(t): ONE}):
            w = f"{c.A.word_text(t[0])} (x) {c.H.pres.word_text(t[1])}"
            return Verdict("free", False, w, {"degree": d, "slack": slack, "exact": exact})
    return Verdict("free", True, None, {"degree": d, "slack": slack, "exact": exact})


def check_exact(c: Coaction, B: CoinvariantBasis | list | None, d: int, slack: int = 2) -> Verdict:
    """Compare ``ker(chi) ∩ ker(mu)`` with the span of ``A B2 A``.

    ``B2`` is the kernel of multiplication on ``B (x) B``, spanned by
    ``b (x) b' - bb' (x) 1``.  The kernel side is computed on pairs of
    length at most ``d``; the comparison span uses ``d + slack``.
    """
    A = c.A
    depth = _finite_depth(c)
    exact = depth is not None
    if exact:
        d, slack = 2 * depth, 0
    if B is None:
        B = coinvariants(c, d + slack)
    elems = B.basis if isinstance(B, CoinvariantBasis) else list(B)
    pairs = _raw_pairs(A, d)
    pindex = {p: k for k, p in enumerate(pairs)}
    idx = Indexer()
    ech = Echelon()
    kernel = []
    for k, (u, v) in enumerate(pairs):
        img = {("chi",) + key: a for key, a in _chi_pair(c, u, v).items()}
        for w, a in A.nf_word(u + v).items():
            img[("mu", w)] = a
        dep = ech.add(idx.vector(img), tag=k)
        if dep is not None:
            kernel.append(dep)
    # span of u (b (x) b' - bb' (x) 1) v
    N = d + slack
    span_index = Indexer()
    span = Echelon()
    words = A.basis_up_to(N)
    gens = []
    for b in elems:
        for bp in elems:
            t: dict = {}
            for w1, x in b.terms.items():
                for w2, y in bp.terms.items():
                    _acc(t, (w1, w2), x * y)
            for w, z in (b * bp).terms.items():
                _acc(t, (w, ()), -z)
            if t:
                gens.append(t)
    for r in gens:
        lens = max(len(x) + len(y) for x, y in r)
        for u in words:
            for v in words:
                if len(u) + len(v) + lens > N and not exact:
                    continue
                el: dict = {}
                for (x, y), a in r.items():
                    for xx, s in A.nf_word(u + x).items():
                        for yy, t2 in A.nf_word(y + v).items():
                            _acc(el, (xx, yy), a * s * t2)
                if el:
                    span.add(span_index.vector(el))
    details = {"degree": d, "slack": slack, "kernel_dim": len(kernel), "span_dim": len(span), "exact": exact}
    for dep in kernel:
        el: dict = {}
        for k, a in dep.items():
            _acc(el, pairs[k], a)
        if not span.contains(span_index.vector(el)):
            text = str(TensorElement((A, A), el))
            return Verdict("exact", False, text, details)
    return Verdict("exact", True, None, details)


# -- quantum principal bundles -----------------------------------------------------------------


@dataclass
class QpbReport:
    free: Verdict
    exact: Verdict
    hopf_galois: bool
    certificate: GaloisCertificate
    coinvariants: CoinvariantBasis
    subgroup: str = ""
    note: str = ""

    @property
    def free_and_exact(self) -> bool:
        return bool(self.free.ok) and bool(self.exact.ok)

    def summary(self) -> dict:
        out = {
            "free": self.free.label,
            "exact": self.exact.label,
            "hopf_galois": self.hopf_galois,
            "free_and_exact": self.free_and_exact,
            "coinvariants": self.coinvariants.texts(),
            "subgroup": self.subgroup,
            "note": self.note,
        }
        out.update({"certificate": self.certificate.summary()})
        return out


def certify_quantum_principal_bundle(
    H: HopfStructure, Hp: HopfStructure, pi: SubgroupMap | Mapping | None, d: int = 4, slack: int = 2
) -> QpbReport:
    if pi is None:
        c = regular_coaction(H)
        label = "identity"
    else:
        c = induced_coaction(H, Hp, pi, d)
        label = getattr(pi, "name", "") or "pi"
    depth = _finite_depth(c)
    B = coinvariants(c, depth if depth is not None else d + slack)
    cert = canonical_map(c, B, d, slack)
    free = check_free(c, d, slack)
    exact = check_exact(c, B, d, slack)
    note = "" if cert.exact else f"filtered evidence only: degree {d}, slack {slack}"
    return QpbReport(free, exact, cert.bijective, cert, B, label, note)


# -- opposite equivalence ---------------------------------------------------------------------


def check_opposite_equivalence(c: Coaction, d: int, inverse_antipode: Mapping[str, NcPoly] | None = None) -> Verdict:
    """``(id (x) mu)(delta (x) S) can = can'`` and invertibility of ``a (x) h -> a_(0) (x) a_(1) S(h)``."""
    H = c.H
    P = H.pres
    A = c.A
    if not H.has_antipode():
        raise GaloisError("an antipode is required")
    if inverse_antipode is None:
        for order in range(1, 9):
            if all(antipode_power(H, order, P.gen(g)) == P.gen(g) for g in P.gens):
                inverse_antipode = {g: antipode_power(H, order - 1, P.gen(g)) for g in P.gens}
                break
        else:
            raise GaloisError("missing inverse antipode")
    sinv = HopfStructure(P, {g: H.delta_gen[k] for g, k in P.index.items()},
                         {g: H.eps_gen[k] for g, k in P.index.items()}, inverse_antipode, H.mode)
    depth = _finite_depth(c)
    N = 2 * depth if depth is not None else d
    details = {"degree": N}

    def S(w):
        return H.S_word(w)

    for u, v in _raw_pairs(A, N):
        lhs: dict = {}
        for (x, h), a in _chi_pair(c, u, v).items():
            for (x0, x1), b in c.delta_word(x).terms.items():
                for s, e in S(h).items():
                    for w, f in P.nf_word(x1 + s).items():
                        _acc(lhs, (x0, w), a * b * e * f)
        rhs: dict = {}
        for (x, h), a in c.delta_word(u).terms.items():
            for w, b in A.nf_word(x + v).items():
                _acc(rhs, (w, h), a * b)
        if lhs != rhs:
            return Verdict("opposite_equivalence", False, f"{A.word_text(u)} (x) {A.word_text(v)}", details)
    hwords = P.full_basis() if depth is not None else P.basis_up_to(d)
    for a in (A.full_basis() if depth is not None else A.basis_up_to(d)):
        for h in hwords:
            # bridge followed by its candidate inverse a (x) h -> a_(0) (x) S^-1(h) a_(1)
            mid: dict = {}
            for (x0, x1), b in c.delta_word(a).terms.items():
                for s, e in sinv.S_word(h).items():
                    for w, f in P.nf_word(s + x1).items():
                        _acc(mid, (x0, w), b * e * f)
            back: dict = {}
            for (x, y), b in mid.items():
                for (x0, x1), e in c.delta_word(x).terms.items():
                    for s, f in S(y).items():
                        for w, g in P.nf_word(x1 + s).items():
                            _acc(back, (x0, w), b * e * f * g)
            if back != {(a, h): ONE}:
                return Verdict("opposite_equivalence", False, f"bridge on {A.word_text(a)} (x) {P.word_text(h)}", details)
    return Verdict("opposite_equivalence", True, None, details)
