"""Reader and writer for the ``.hgx`` presentation language.

A document starts with ``scalars QIQ`` and holds named blocks::

    algebra H4 {
      gens g x
      rules g*g -> 1; x*x -> 0; x*g -> -g*x
      coproduct g -> g (x) g  x -> x (x) 1 + g (x) x
      counit g -> 1  x -> 0
      antipode g -> g  x -> -g*x
    }

Other block kinds are ``coalgebra`` (structure constants on a basis),
``coaction``, ``subgroupmap`` and ``pairing``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Any

from .exactfield import ONE, ZERO, I, Q, FieldError, Scalar, scalar
from .presentation import Presentation, PresentationError, coef_text, linear_text
from .tensorspace import TensorElement


class DslError(ValueError):
    def __init__(self, message: str, line: int = 0, col: int = 0):
        self.message = message
        self.line = line
        self.col = col
        super().__init__(f"line {line}, column {col}: {message}" if line else message)


KEYWORDS = {
    "scalars", "algebra", "coalgebra", "coaction", "subgroupmap", "pairing", "gens", "grade", "rules",
    "coproduct", "counit", "antipode", "source", "hopf", "target", "left", "right", "regular",
    "grading", "map", "values",
}
RESERVED = {"i", "q"}

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<comment>\#[^\n]*)
  | (?P<tensor>\(x\))
  | (?P<arrow>->)
  | (?P<int>\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*/^(){};:,<>=])
    """,
    re.VERBOSE,
)


@dataclass
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    out = []
    line, start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise DslError(f"unexpected character {text[pos]!r}", line, pos - start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            start = m.end()
        elif kind not in ("ws", "comment"):
            out.append(Token(kind, m.group(), line, pos - start + 1))
        pos = m.end()
    out.append(Token("eof", "", line, pos - start + 1))
    return out


# -- expression trees --------------------------------------------------------------


@dataclass
class Node:
    op: str
    args: tuple
    line: int
    col: int


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.k = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.k]

    def peek(self, n: int = 1) -> Token:
        return self.toks[min(self.k + n, len(self.toks) - 1)]

    def error(self, msg: str, tok: Token | None = None):
        tok = tok or self.tok
        raise DslError(msg, tok.line, tok.col)

    def take(self, text: str | None = None, kind: str | None = None) -> Token:
        t = self.tok
        if (text is not None and t.text != text) or (kind is not None and t.kind != kind):
            want = repr(text) if text is not None else kind
            got = repr(t.text) if t.kind != "eof" else "end of input"
            self.error(f"expected {want}, found {got}")
        self.k += 1
        return t

    def at(self, text: str) -> bool:
        return self.tok.text == text and self.tok.kind in ("name", "op", "arrow", "tensor")

    def name(self) -> Token:
        t = self.take(kind="name")
        if t.text in KEYWORDS:
            self.error(f"keyword {t.text!r} cannot be used as a name", t)
        return t

    # expressions: sum < tensor < product < unary < power
    def expr(self) -> Node:
        t = self.tok
        if self.at("-"):
            self.k += 1
            left = Node("neg", (self.tensor(),), t.line, t.col)
        else:
            left = self.tensor()
        while self.at("+") or self.at("-"):
            op = self.take()
            right = self.tensor()
            left = Node("add" if op.text == "+" else "sub", (left, right), op.line, op.col)
        return left

    def tensor(self) -> Node:
        left = self.product()
        while self.tok.kind == "tensor":
            op = self.take()
            left = Node("tensor", (left, self.product()), op.line, op.col)
        return left

    def product(self) -> Node:
        left = self.unary()
        while self.at("*") or self.at("/"):
            op = self.take()
            left = Node("mul" if op.text == "*" else "div", (left, self.unary()), op.line, op.col)
        return left

    def unary(self) -> Node:
        if self.at("-"):
            t = self.take()
            return Node("neg", (self.unary(),), t.line, t.col)
        base = self.atom()
        if self.at("^"):
            t = self.take()
            neg = False
            if self.at("-"):
                self.take()
                neg = True
            n = int(self.take(kind="int").text)
            base = Node("pow", (base, -n if neg else n), t.line, t.col)
        return base

    def atom(self) -> Node:
        t = self.tok
        if t.kind == "int":
            self.k += 1
            return Node("int", (int(t.text),), t.line, t.col)
        if t.kind == "name":
            if t.text in KEYWORDS:
                self.error(f"unexpected keyword {t.text!r}")
            self.k += 1
            return Node("sym", (t.text,), t.line, t.col)
        if self.at("("):
            self.k += 1
            inner = self.expr()
            self.take(")")
            return inner
        got = repr(t.text) if t.kind != "eof" else "end of input"
        self.error(f"expected an expression, found {got}")


# -- evaluation of expressions into leg-indexed terms --------------------------------


@dataclass
class Value:
    arity: int
    terms: dict  # tuple of words (one per leg) -> Scalar

    def promote(self, arity: int) -> "Value":
        if self.arity == arity:
            return self
        if self.arity == 0:
            c = self.terms.get((), ZERO)
            return Value(arity, {tuple(() for _ in range(arity)): c} if c else {})
        raise ValueError("arity")


def _add(a: dict, b: dict, sign: Scalar = ONE) -> dict:
    out = dict(a)
    for k, c in b.items():
        v = out.get(k, ZERO) + sign * c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def evaluate(node: Node, legs: list[Presentation], offset: int = 0, normal: bool = True) -> Value:
    """Evaluate an expression whose ``n``-th tensor factor lives in ``legs[offset + n]``."""

    def fail(msg):
        raise DslError(msg, node.line, node.col)

    op = node.op
    if op == "int":
        return Value(0, {(): scalar(node.args[0])} if node.args[0] else {})
    if op == "sym":
        name = node.args[0]
        if name == "q":
            return Value(0, {(): Q})
        if name == "i":
            return Value(0, {(): I})
        if offset >= len(legs):
            fail(f"too many tensor factors at {name!r}")
        pres = legs[offset]
        if name not in pres.index:
            fail(f"unknown generator {name!r} in {pres.name or 'algebra'}")
        w = (pres.index[name],)
        if normal:
            return Value(1, {(u,): c for u, c in pres.nf_word(w).items()})
        return Value(1, {(w,): ONE})
    if op == "neg":
        v = evaluate(node.args[0], legs, offset, normal)
        return Value(v.arity, {k: -c for k, c in v.terms.items()})
    if op in ("add", "sub"):
        a = evaluate(node.args[0], legs, offset, normal)
        b = evaluate(node.args[1], legs, offset, normal)
        n = max(a.arity, b.arity)
        try:
            a, b = a.promote(n), b.promote(n)
        except ValueError:
            fail("sum of tensors with different numbers of factors")
        return Value(n, _add(a.terms, b.terms, ONE if op == "add" else -ONE))
    if op == "tensor":
        a = evaluate(node.args[0], legs, offset, normal)
        a = a.promote(1) if a.arity == 0 else a
        b = evaluate(node.args[1], legs, offset + a.arity, normal)
        b = b.promote(1) if b.arity == 0 else b
        out: dict = {}
        for ka, ca in a.terms.items():
            for kb, cb in b.terms.items():
                out = _add(out, {ka + kb: ca * cb})
        return Value(a.arity + b.arity, out)
    if op == "mul":
        a = evaluate(node.args[0], legs, offset, normal)
        b = evaluate(node.args[1], legs, offset, normal)
        if a.arity and b.arity and a.arity != b.arity:
            fail("product of tensors with different numbers of factors")
        n = max(a.arity, b.arity)
        a, b = a.promote(n), b.promote(n)
        out = {}
        for ka, ca in a.terms.items():
            for kb, cb in b.terms.items():
                partial = {(): ca * cb}
                for j, (u, v) in enumerate(zip(ka, kb)):
                    pres = legs[offset + j]
                    img = pres.nf_word(u + v) if normal else {u + v: ONE}
                    nxt: dict = {}
                    for k, c in partial.items():
                        for w, d in img.items():
                            nxt = _add(nxt, {k + (w,): c * d})
                    partial = nxt
                out = _add(out, partial)
        return Value(n, out)
    if op == "div":
        a = evaluate(node.args[0], legs, offset, normal)
        b = evaluate(node.args[1], legs, offset, normal)
        if b.arity != 0:
            fail("division by a non-scalar")
        c = b.terms.get((), ZERO)
        if not c:
            fail("division by zero")
        return Value(a.arity, {k: v / c for k, v in a.terms.items()})
    if op == "pow":
        base, n = node.args
        a = evaluate(base, legs, offset, normal)
        if a.arity == 0:
            c = a.terms.get((), ZERO)
            try:
                return Value(0, {(): c**n} if c or n > 0 else {})
            except FieldError:
                fail("zero to a negative power")
        if n < 0:
            fail("negative powers apply to scalars only")
        res = Value(a.arity, {tuple(() for _ in range(a.arity)): ONE})
        for _ in range(n):
            res = evaluate(Node("mul", (_Const(res), _Const(a)), node.line, node.col), legs, offset, normal)
        return res
    if op == "const":
        return node.args[0]
    fail(f"unknown operator {op}")


def _Const(v: Value) -> Node:
    return Node("const", (v,), 0, 0)



def parse_expression(text: str, legs: list[Presentation]) -> dict:
    """Normal-form terms of an expression with ``len(legs)`` tensor factors.

    Keys are tuples of words, one per factor; a single-factor expression
    still uses one-element tuples.
    """
    p = _Parser(text)
    node = p.expr()
    if p.tok.kind != "eof":
        p.error(f"unexpected {p.tok.text!r}")
    val = evaluate(node, legs)
    if val.arity == 0:
        val = val.promote(len(legs))
    if val.arity != len(legs):
        raise DslError(f"expected {len(legs)} tensor factor(s), found {val.arity}", node.line, node.col)
    return val.terms

# -- document model ---------------------------------------------------------------------


@dataclass
class AlgebraBlock:
    name: str
    kind: str  # "algebra" or "coalgebra"
    gens: list[str]
    grade: dict[str, int] = field(default_factory=dict)
    rules: list[tuple[tuple, dict]] = field(default_factory=list)
    coproduct: dict[str, dict] | None = None
    counit: dict[str, Scalar] | None = None
    antipode: dict[str, dict] | None = None
    line: int = 0

    @property
    def level(self) -> str:
        if self.kind == "coalgebra":
            return "coalgebra"
        if self.coproduct is None:
            return "algebra"
        return "hopf" if self.antipode is not None else "bialgebra"

    def data(self):
        return (self.name, self.kind, tuple(self.gens), tuple(sorted(self.grade.items())),
                tuple((l, tuple(sorted(r.items(), key=_k))) for l, r in self.rules),
                _dd(self.coproduct), _dd(self.counit, flat=True), _dd(self.antipode))


@dataclass
class CoactionBlock:
    name: str
    source: str
    hopf: str
    left: bool
    mode: str  # regular, grading or map
    grading: dict[str, tuple] = field(default_factory=dict)
    images: dict[str, dict] = field(default_factory=dict)
    line: int = 0

    def data(self):
        return (self.name, self.source, self.hopf, self.left, self.mode,
                tuple(sorted(self.grading.items())), _dd(self.images))


@dataclass
class SubgroupMapBlock:
    name: str
    source: str
    target: str
    images: dict[str, dict] = field(default_factory=dict)
    line: int = 0

    def data(self):
        return (self.name, self.source, self.target, _dd(self.images))


@dataclass
class PairingBlock:
    name: str
    left: str
    right: str
    values: dict[tuple, Scalar] = field(default_factory=dict)
    line: int = 0

    def data(self):
        return (self.name, self.left, self.right, tuple(sorted(self.values.items(), key=_k)))


def _k(item):
    return repr(item[0])


def _dd(d, flat: bool = False):
    if d is None:
        return None
    if flat:
        return tuple(sorted(d.items()))
    return tuple((g, tuple(sorted(v.items(), key=_k))) for g, v in sorted(d.items()))


@dataclass
class HgxDocument:
    blocks: dict[str, Any] = field(default_factory=dict)
    presentations: dict[str, Presentation] = field(default_factory=dict)

    def __eq__(self, other):
        return isinstance(other, HgxDocument) and [b.data() for b in self.blocks.values()] == [
            b.data() for b in other.blocks.values()
        ]

    def of_kind(self, cls) -> list:
        return [b for b in self.blocks.values() if isinstance(b, cls)]

    def algebras(self) -> list[AlgebraBlock]:
        return self.of_kind(AlgebraBlock)

    def coactions(self) -> list[CoactionBlock]:
        return self.of_kind(CoactionBlock)

    def subgroup_maps(self) -> list[SubgroupMapBlock]:
        return self.of_kind(SubgroupMapBlock)

    def pairings(self) -> list[PairingBlock]:
        return self.of_kind(PairingBlock)

    def to_text(self) -> str:
        return pretty(self)


# -- block parsing --------------------------------------------------------------------


def _word_names(pres: Presentation, w: tuple) -> str:
    return pres.word_text(w)


class _DocParser(_Parser):
    def __init__(self, text: str):
        super().__init__(text)
        self.doc = HgxDocument()

    def parse(self) -> HgxDocument:
        self.take("scalars")
        t = self.take(kind="name")
        if t.text != "QIQ":
            self.error("only the scalar field QIQ is supported", t)
        while self.tok.kind != "eof":
            t = self.tok
            kinds = {
                "algebra": self.algebra,
                "coalgebra": self.algebra,
                "coaction": self.coaction,
                "subgroupmap": self.subgroupmap,
                "pairing": self.pairing,
            }
            if t.text not in kinds:
                self.error(f"expected a block, found {t.text!r}")
            block = kinds[t.text]()
            if block.name in self.doc.blocks:
                raise DslError(f"duplicate block name {block.name!r}", t.line, t.col)
            self.doc.blocks[block.name] = block
        return self.doc

    def block_head(self):
        kind = self.take().text
        name = self.name()
        self.take("{")
        return kind, name

    def _pres(self, name_tok: Token) -> Presentation:
        pres = self.doc.presentations.get(name_tok.text)
        if pres is None:
            self.error(f"unknown algebra {name_tok.text!r}", name_tok)
        return pres

    def _maps(self, legs, arity: int, stop: set[str], gens: list[str]) -> dict:
        """``NAME -> expr`` entries until a keyword in ``stop`` or ``}``."""
        out: dict = {}
        while self.tok.kind == "name" and self.tok.text not in stop and self.tok.text != "}":
            g = self.name()
            if g.text not in gens:
                self.error(f"unknown generator {g.text!r}", g)
            if g.text in out:
                self.error(f"duplicate entry for {g.text!r}", g)
            self.take("->")
            node = self.expr()
            val = evaluate(node, legs)
            if val.arity == 0 and arity > 0:
                val = val.promote(arity)
            if val.arity != arity:
                raise DslError(f"expected {arity} tensor factor(s), found {val.arity}", node.line, node.col)
            out[g.text] = val.terms if arity else val.terms.get((), ZERO)
            if self.at(";"):
                self.take(";")
        return out

    def algebra(self) -> AlgebraBlock:
        head = self.tok
        kind, name = self.block_head()
        self.take("gens")
        gens = []
        while self.tok.kind == "name" and self.tok.text not in KEYWORDS:
            t = self.name()
            if t.text in RESERVED:
                self.error(f"{t.text!r} is reserved for scalars", t)
            if t.text in gens:
                self.error(f"duplicate generator {t.text!r}", t)
            gens.append(t.text)
        if not gens:
            self.error("expected at least one generator")
        grade: dict[str, int] = {}
        if self.at("grade"):
            self.take()
            while self.tok.kind == "name" and self.tok.text not in KEYWORDS:
                g = self.name()
                if g.text not in gens:
                    self.error(f"unknown generator {g.text!r}", g)
                self.take(":")
                neg = self.at("-")
                if neg:
                    self.take()
                n = int(self.take(kind="int").text)
                grade[g.text] = -n if neg else n
        free = Presentation(gens, name=name.text)
        rules = []
        if self.at("rules"):
            if kind == "coalgebra":
                self.error("a coalgebra block takes no rules")
            self.take()
            while True:
                lt = self.tok
                lhs = evaluate(self.product(), [free], normal=False)
                if lhs.arity != 1 or len(lhs.terms) != 1 or next(iter(lhs.terms.values())) != ONE:
                    raise DslError("rule left-hand side must be a single word", lt.line, lt.col)
                word = next(iter(lhs.terms))[0]
                self.take("->")
                rhs = evaluate(self.expr(), [free], normal=False).promote(1)
                rules.append((word, {k[0]: c for k, c in rhs.terms.items()}))
                if not self.at(";"):
                    break
                self.take(";")
        try:
            pres = Presentation(gens, rules, grade or None, name=name.text)
        except PresentationError as e:
            raise DslError(str(e), head.line, head.col) from None
        self.doc.presentations[name.text] = pres
        block = AlgebraBlock(name.text, kind, gens, grade, rules, line=head.line)
        stop = {"coproduct", "counit", "antipode"}
        if self.at("coproduct"):
            self.take()
            block.coproduct = self._maps([pres, pres], 2, stop, gens)
            self.take("counit")
            block.counit = self._maps([pres], 0, stop, gens)
            if self.at("antipode"):
                if kind == "coalgebra":
                    self.error("a coalgebra block takes no antipode")
                self.take()
                block.antipode = {g: {k[0]: c for k, c in v.items()} for g, v in self._maps([pres], 1, stop, gens).items()}
        elif kind == "coalgebra":
            self.error("a coalgebra block needs a coproduct")
        self.take("}")
        for part, label in ((block.coproduct, "coproduct"), (block.counit, "counit"), (block.antipode, "antipode")):
            if part is not None:
                missing = [g for g in gens if g not in part]
                if missing:
                    raise DslError(f"{label} missing on {', '.join(missing)}", head.line, head.col)
        return block

    def coaction(self) -> CoactionBlock:
        head = self.tok
        _, name = self.block_head()
        self.take("source")
        src_t = self.name()
        src = self._pres(src_t)
        self.take("hopf")
        hopf_t = self.name()
        hopf = self._pres(hopf_t)
        left = False
        if self.at("left"):
            self.take()
            left = True
        block = CoactionBlock(name.text, src_t.text, hopf_t.text, left, "", line=head.line)
        if self.at("regular"):
            self.take()
            if src_t.text != hopf_t.text:
                self.error("a regular coaction needs source and hopf to agree", src_t)
            block.mode = "regular"
        elif self.at("grading"):
            self.take()
            block.mode = "grading"
            while self.tok.kind == "name" and self.tok.text != "}":
                g = self.name()
                if g.text not in src.index:
                    self.error(f"unknown generator {g.text!r}", g)
                self.take(":")
                node = self.product()
                val = evaluate(node, [hopf], normal=False).promote(1)
                if len(val.terms) != 1 or next(iter(val.terms.values())) != ONE:
                    raise DslError("grading values must be single words", node.line, node.col)
                block.grading[g.text] = next(iter(val.terms))[0]
                if self.at(";"):
                    self.take(";")
        elif self.at("map"):
            self.take()
            block.mode = "map"
            legs = [hopf, src] if left else [src, hopf]
            block.images = self._maps(legs, 2, set(), list(src.gens))
        else:
            self.error("expected 'regular', 'grading' or 'map'")
        self.take("}")
        return block

    def subgroupmap(self) -> SubgroupMapBlock:
        head = self.tok
        _, name = self.block_head()
        self.take("source")
        src_t = self.name()
        src = self._pres(src_t)
        self.take("target")
        tgt_t = self.name()
        tgt = self._pres(tgt_t)
        self.take("map")
        images = self._maps([tgt], 1, set(), list(src.gens))
        self.take("}")
        return SubgroupMapBlock(
            name.text, src_t.text, tgt_t.text, {g: {k[0]: c for k, c in v.items()} for g, v in images.items()},
            line=head.line,
        )

    def pairing(self) -> PairingBlock:
        head = self.tok
        _, name = self.block_head()
        self.take("left")
        lt = self.name()
        lp = self._pres(lt)
        self.take("right")
        rt = self.name()
        rp = self._pres(rt)
        self.take("values")
        values: dict = {}
        while self.at("<"):
            self.take("<")
            u = self._single_word(lp)
            self.take(",")
            v = self._single_word(rp)
            self.take(">")
            self.take("=")
            node = self.expr()
            val = evaluate(node, [])
            if val.arity != 0:
                raise DslError("pairing values must be scalars", node.line, node.col)
            if (u, v) in values:
                raise DslError("duplicate pairing entry", node.line, node.col)
            values[(u, v)] = val.terms.get((), ZERO)
            if self.at(";"):
                self.take(";")
        self.take("}")
        return PairingBlock(name.text, lt.text, rt.text, values, line=head.line)

    def _single_word(self, pres: Presentation) -> tuple:
        node = self.product()
        val = evaluate(node, [pres]).promote(1)
        if len(val.terms) != 1 or next(iter(val.terms.values())) != ONE:
            raise DslError("expected a normal word", node.line, node.col)
        return next(iter(val.terms))[0]


def parse(text: str) -> HgxDocument:
    """Parse ``.hgx`` source into a document; errors carry line and column."""
    return _DocParser(text).parse()


# -- pretty printing ---------------------------------------------------------------------


def _tensor_text(terms: dict, legs) -> str:
    if not terms:
        return "0"

    def key(item):
        return tuple(p.key(w) for p, w in zip(legs, item[0]))

    items = sorted(terms.items(), key=key, reverse=True)
    return linear_text([(" (x) ".join(p.word_text(w) for p, w in zip(legs, k)), c) for k, c in items])


def _poly_text(terms: dict, pres: Presentation) -> str:
    items = sorted(terms.items(), key=lambda kv: pres.key(kv[0]), reverse=True)
    return linear_text([(pres.word_text(w) if w else "", c) for w, c in items])


def _scalar_text(c: Scalar) -> str:
    sign, body = coef_text(c)
    return sign + body


def pretty(doc: HgxDocument) -> str:
    out = ["scalars QIQ", ""]
    pres = doc.presentations
    for b in doc.blocks.values():
        if isinstance(b, AlgebraBlock):
            p = pres[b.name]
            out.append(f"{b.kind} {b.name} {{")
            out.append("  gens " + " ".join(b.gens))
            if b.grade:
                out.append("  grade " + " ".join(f"{g}: {n}" for g, n in b.grade.items()))
            if b.rules:
                rules = [f"{p.word_text(l)} -> {_poly_text(r, p)}" for l, r in b.rules]
                out.append("  rules")
                out.append(";\n".join("    " + r for r in rules))
            if b.coproduct is not None:
                out.append("  coproduct")
                out.extend(f"    {g} -> {_tensor_text(b.coproduct[g], [p, p])}" for g in b.gens)
                out.append("  counit")
                out.extend(f"    {g} -> {_scalar_text(b.counit[g])}" for g in b.gens)
            if b.antipode is not None:
                out.append("  antipode")
                out.extend(f"    {g} -> {_poly_text(b.antipode[g], p)}" for g in b.gens)
            out.append("}")
        elif isinstance(b, CoactionBlock):
            src, hopf = pres[b.source], pres[b.hopf]
            out.append(f"coaction {b.name} {{")
            out.append(f"  source {b.source} hopf {b.hopf}" + (" left" if b.left else ""))
            if b.mode == "regular":
                out.append("  regular")
            elif b.mode == "grading":
                out.append("  grading " + " ".join(f"{g}: {hopf.word_text(w)}" for g, w in b.grading.items()))
            else:
                legs = [hopf, src] if b.left else [src, hopf]
                out.append("  map")
                out.extend(f"    {g} -> {_tensor_text(b.images[g], legs)}" for g in src.gens)
            out.append("}")
        elif isinstance(b, SubgroupMapBlock):
            src, tgt = pres[b.source], pres[b.target]
            out.append(f"subgroupmap {b.name} {{")
            out.append(f"  source {b.source} target {b.target}")
            out.append("  map")
            out.extend(f"    {g} -> {_poly_text(b.images[g], tgt)}" for g in src.gens)
            out.append("}")
        elif isinstance(b, PairingBlock):
            lp, rp = pres[b.left], pres[b.right]
            out.append(f"pairing {b.name} {{")
            out.append(f"  left {b.left} right {b.right}")
            out.append("  values")
            for (u, v), c in b.values.items():
                out.append(f"    <{lp.word_text(u)}, {rp.word_text(v)}> = {_scalar_text(c)};")
            out.append("}")
        out.append("")
    return "\n".join(out)


# -- wiring into runtime objects ----------------------------------------------------------


@dataclass
class Workspace:
    """Runtime objects built from a document, keyed by block name."""

    document: HgxDocument
    presentations: dict = field(default_factory=dict)
    structures: dict = field(default_factory=dict)
    coactions: dict = field(default_factory=dict)
    maps: dict = field(default_factory=dict)
    pairings: dict = field(default_factory=dict)


def build(doc: HgxDocument) -> Workspace:
    from .comodule import Coaction, SubgroupMap, graded_coaction, regular_coaction
    from .duality import Pairing
    from .hopfcore import CONSTANTS, MORPHISM, HopfStructure
    from .presentation import NcPoly

    ws = Workspace(doc, dict(doc.presentations))
    for b in doc.algebras():
        p = ws.presentations[b.name]
        if b.coproduct is None:
            continue
        delta = {g: TensorElement((p, p), t) for g, t in b.coproduct.items()}
        anti = {g: NcPoly(p, t) for g, t in b.antipode.items()} if b.antipode is not None else None
        mode = CONSTANTS if b.kind == "coalgebra" else MORPHISM
        ws.structures[b.name] = HopfStructure(p, delta, dict(b.counit), anti, mode, b.name)
    for b in doc.coactions():
        H = ws.structures.get(b.hopf)
        if H is None:
            raise DslError(f"{b.hopf!r} has no coproduct", b.line, 1)
        A = ws.presentations[b.source]
        if b.mode == "regular":
            ws.coactions[b.name] = regular_coaction(H, b.name)
        elif b.mode == "grading":
            ws.coactions[b.name] = graded_coaction(A, H, b.grading, b.name)
        else:
            legs = (H.pres, A) if b.left else (A, H.pres)
            ws.coactions[b.name] = Coaction(
                A, H, {g: TensorElement(legs, t) for g, t in b.images.items()}, left=b.left, name=b.name
            )
    for b in doc.subgroup_maps():
        H, Hp = ws.structures.get(b.source), ws.structures.get(b.target)
        if H is None or Hp is None:
            raise DslError("subgroup maps join two structures with coproducts", b.line, 1)
        ws.maps[b.name] = SubgroupMap(H, Hp, {g: NcPoly(Hp.pres, t) for g, t in b.images.items()}, b.name)
    for b in doc.pairings():
        H, Hp = ws.structures.get(b.left), ws.structures.get(b.right)
        if H is None or Hp is None:
            raise DslError("pairings join two structures with coproducts", b.line, 1)
        ws.pairings[b.name] = Pairing(H, Hp, b.values, b.name)
    return ws


def load_text(text: str) -> Workspace:
    return build(parse(text))


def _subst(obj, value):
    if isinstance(obj, Scalar):
        return obj.eval_q(value)
    if isinstance(obj, dict):
        return {k: _subst(v, value) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_subst(v, value) for v in obj]
    if isinstance(obj, tuple):
        return tuple(_subst(v, value) for v in obj)
    return obj


def specialize(doc: HgxDocument, value) -> HgxDocument:
    """Substitute a number for ``q`` everywhere and re-read the result.

    Raises :class:`DslError` when a coefficient has a pole at ``value``.
    """
    import copy

    twin = copy.deepcopy(doc)
    try:
        for b in twin.blocks.values():
            for f in ("rules", "coproduct", "counit", "antipode", "images", "values"):
                if hasattr(b, f) and getattr(b, f) is not None:
                    setattr(b, f, _subst(getattr(b, f), value))
    except FieldError as e:
        raise DslError(f"cannot set q = {value}: {e}") from None
    return parse(pretty(twin))
