"""Command line interface: ``hgx parse | check | certify-galois | certify-qpb | corpus | export``.

Exit codes: 0 when every verdict passes, 1 when a verdict fails, 2 for
usage errors, unreadable input and unknown names.
"""

from __future__ import annotations

import hashlib
import json
import os
import sys
import time
from pathlib import Path

import click

from . import __version__
from .comodule import CoactionError, check_coaction, check_subgroup_map, coinvariants
from .dsl import DslError, build, parse, parse_expression, pretty, specialize
from .duality import check_duality, check_nondegenerate
from .exactfield import FieldError, Scalar
from .galois import (
    GaloisError,
    _finite_depth,
    antipode_from_can,
    canonical_map,
    certify_quantum_principal_bundle,
    check_exact,
    check_free,
)
from .hopfcore import (
    CONSTANTS,
    HopfError,
    check_antihom,
    check_anticohom,
    check_antipode,
    check_bialgebra,
    check_coassoc,
    check_counit,
)
from .presentation import PresentationError
from .verdict import Verdict

LEVELS = ("algebra", "coalgebra", "bialgebra", "hopf")
MODEL_ERRORS = (CoactionError, GaloisError, HopfError, PresentationError, FieldError)


class Usage(Exception):
    pass


def _color_enabled() -> bool:
    return os.environ.get("HGX_COLOR", "").lower() in ("1", "true", "yes", "on", "always")


def _paint(text: str, code: str) -> str:
    return f"\x1b[{code}m{text}\x1b[0m" if _color_enabled() else text


def _digest(*parts: str) -> str:
    h = hashlib.sha256()
    for p in parts:
        h.update(p.encode("utf-8"))
        h.update(b"\0")
    return h.hexdigest()


def _jsonable(x):
    if isinstance(x, Scalar):
        return x.to_text()
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    return str(x)


class Report:
    """Check records plus enough context to reproduce them."""

    def __init__(self, command: str, source: str, params: dict):
        self.command = command
        self.params = params
        self.input_digest = _digest(source, json.dumps(params, sort_keys=True))
        self.records: list[dict] = []
        self.extra: dict = {}
        self._t0 = time.perf_counter()

    def add(self, name: str, verdict, witness=None, details=None, **extra):
        if isinstance(verdict, Verdict):
            witness = verdict.witness if witness is None else witness
            details = verdict.details if details is None else details
            verdict = verdict.label
        elif verdict is True or verdict is False:
            verdict = "pass" if verdict else "fail"
        rec = {"name": name, "verdict": verdict, "witness": witness, "parameters": dict(self.params)}
        if details:
            rec["details"] = details
        rec.update(extra)
        self.records.append(_jsonable(rec))

    @property
    def failed(self) -> bool:
        return any(r["verdict"] == "fail" for r in self.records)

    def body(self) -> dict:
        out = {
            "tool": "hgx",
            "version": __version__,
            "command": self.command,
            "input_digest": self.input_digest,
            "truncation": {"degree": self.params.get("degree"), "slack": self.params.get("slack")},
            "q": self.params.get("q"),
            "checks": sorted(self.records, key=lambda r: r["name"]),
        }
        out.update(_jsonable(self.extra))
        return out

    def as_json(self) -> str:
        body = self.body()
        stable = json.dumps(body, sort_keys=True)
        body["report_digest"] = hashlib.sha256(stable.encode("utf-8")).hexdigest()
        body["timing"] = {"seconds": round(time.perf_counter() - self._t0, 3)}
        return json.dumps(body, indent=2, sort_keys=True)

    def as_text(self) -> str:
        lines = []
        for r in sorted(self.records, key=lambda r: r["name"]):
            tag = {"pass": _paint("PASS", "32"), "fail": _paint("FAIL", "31")}.get(r["verdict"], _paint("????", "33"))
            line = f"{tag} {r['name']}"
            if r.get("witness"):
                line += f"  [{r['witness']}]"
            lines.append(line)
        for key, val in self.extra.items():
            lines.append(f"{key}:")
            lines.extend(_text_block(_jsonable(val), "  "))
        n_fail = sum(r["verdict"] == "fail" for r in self.records)
        lines.append(f"{len(self.records)} checks, {n_fail} failed")
        return "\n".join(lines)

    def emit(self, fmt: str) -> None:
        click.echo(self.as_json() if fmt == "json" else self.as_text(), color=_color_enabled() or None)


def _text_block(val, indent: str) -> list[str]:
    if isinstance(val, dict):
        out = []
        for k, v in val.items():
            if isinstance(v, (dict, list)) and v:
                out.append(f"{indent}{k}:")
                out.extend(_text_block(v, indent + "  "))
            else:
                out.append(f"{indent}{k}: {v}")
        return out
    if isinstance(val, list):
        return [f"{indent}- {v}" for v in val]
    return [f"{indent}{val}"]


def _q_value(text: str | None):
    if text is None:
        return None
    try:
        terms = parse_expression(text, [])
    except DslError as e:
        raise Usage(f"--q: {e}") from None
    c = terms.get((), Scalar.of(0))
    if not c.is_constant():
        raise Usage("--q must be a Gaussian rational number")
    return c


def _load(path: str, q: str | None):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise Usage(f"cannot read {path}: {e.strerror}") from None
    try:
        doc = parse(text)
        qv = _q_value(q)
        if qv is not None:
            doc = specialize(doc, qv)
        return text, doc, build(doc)
    except DslError as e:
        raise Usage(f"{path}: {e}") from None
    except (PresentationError, CoactionError, HopfError) as e:
        raise Usage(f"{path}: {e}") from None


def _run(fn):
    """Translate exceptions into the exit-code contract."""
    try:
        code = fn()
    except Usage as e:
        click.echo(f"error: {e}", err=True)
        sys.exit(2)
    except MODEL_ERRORS as e:
        click.echo(f"error: {e}", err=True)
        sys.exit(1)
    sys.exit(code)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(__version__, prog_name="hgx")
def main():
    """Exact checks for Hopf algebras, coactions and Hopf-Galois extensions."""


_degree = click.option("--degree", default=4, show_default=True, type=click.IntRange(min=0), help="truncation degree")
_slack = click.option("--slack", default=2, show_default=True, type=click.IntRange(min=0), help="extra length for spans")
_report = click.option("--report", "fmt", default="text", show_default=True, type=click.Choice(["text", "json"]))
_q = click.option("--q", "q", default=None, help="substitute a Gaussian rational for q, e.g. 2 or 1/2+i")


@main.command("parse")
@click.argument("file", type=click.Path(dir_okay=False))
def parse_cmd(file):
    """Parse FILE and print it in canonical form."""

    def go():
        _, doc, _ = _load(file, None)
        click.echo(pretty(doc), nl=False)
        return 0

    _run(go)


def _structure_checks(rep: Report, H, level: str, d: int, slack: int):
    name = H.name
    rep.add(f"{name}.coassoc", check_coassoc(H, d))
    rep.add(f"{name}.counit", check_counit(H, d))
    if level in ("bialgebra", "hopf"):
        if H.mode == CONSTANTS:
            rep.add(f"{name}.bialgebra", False, "declared as a coalgebra only")
            return
        rep.add(f"{name}.bialgebra", check_bialgebra(H, d))
    if level == "hopf":
        if H.has_antipode():
            rep.add(f"{name}.antipode", check_antipode(H, d))
            rep.add(f"{name}.antipode_antihom", check_antihom(H, d))
            rep.add(f"{name}.antipode_anticohom", check_anticohom(H, d))
        else:
            res = antipode_from_can(H, d, slack)
            witness = None if res.ok else f"{res.message} ({res.verdict.witness})"
            gens = {g: str(p) for g, p in res.generators.items()}
            rep.add(f"{name}.antipode_synthesis", res.ok, witness, res.verdict.details, generators=gens)


@main.command("check")
@click.argument("file", type=click.Path(dir_okay=False))
@_degree
@_slack
@click.option("--level", type=click.Choice(LEVELS), default=None, help="check every structure at this level")
@_report
@_q
def check_cmd(file, degree, slack, level, fmt, q):
    """Run the axiom suite on every block of FILE."""

    def go():
        text, doc, ws = _load(file, q)
        rep = Report("check", text, {"degree": degree, "slack": slack, "level": level, "q": q})
        for b in doc.algebras():
            pres = ws.presentations[b.name]
            if b.kind == "algebra":
                amb = pres.check_local_confluence(degree)
                rep.add(f"{b.name}.confluence", not amb, str(amb[0]) if amb else None)
            H = ws.structures.get(b.name)
            if H is None:
                continue
            want = level or H.level
            if want == "algebra":
                continue
            _structure_checks(rep, H, want, degree, slack)
        for name, c in ws.coactions.items():
            rep.add(f"{name}.coaction", check_coaction(c, degree))
        for name, pi in ws.maps.items():
            rep.add(f"{name}.subgroup_map", check_subgroup_map(pi, degree))
        for name, p in ws.pairings.items():
            rep.add(f"{name}.duality", check_duality(p, degree))
            rep.add(f"{name}.nondegenerate", check_nondegenerate(p))
        rep.emit(fmt)
        return 1 if rep.failed else 0

    _run(go)


def _galois_records(rep: Report, c, cert, B, d: int, slack: int):
    rep.add("canonical.well_defined", cert.well_defined)
    rep.add("canonical.injective", cert.injective, cert.kernel_witness)
    rep.add("canonical.surjective", cert.surjective, cert.unreachable)
    rep.add("hopf_galois", cert.bijective)
    rep.add("free", check_free(c, d, slack))
    rep.add("exact", check_exact(c, B, d, slack))
    s = cert.summary()
    rep.extra["dimensions"] = {"balanced": s["source_dim"], "target": s["target_dim"], "whole_algebra": cert.exact}
    rep.extra["coinvariants"] = B.texts()
    rep.extra["translation"] = s["translation"]


@main.command("certify-galois")
@click.argument("file", type=click.Path(dir_okay=False))
@click.argument("coaction")
@_degree
@_slack
@_report
@_q
def certify_galois_cmd(file, coaction, degree, slack, fmt, q):
    """Certify the canonical map of COACTION in FILE."""

    def go():
        text, doc, ws = _load(file, q)
        c = ws.coactions.get(coaction)
        if c is None:
            raise Usage(f"no coaction named {coaction!r}")
        rep = Report("certify-galois", text, {"degree": degree, "slack": slack, "q": q, "coaction": coaction})
        depth = _finite_depth(c)
        B = coinvariants(c, depth if depth is not None else degree + slack)
        cert = canonical_map(c, B, degree, slack)
        _galois_records(rep, c, cert, B, degree, slack)
        rep.emit(fmt)
        return 0 if cert.bijective else 1

    _run(go)


@main.command("certify-qpb")
@click.argument("file", type=click.Path(dir_okay=False))
@click.argument("subgroup")
@_degree
@_slack
@_report
@_q
def certify_qpb_cmd(file, subgroup, degree, slack, fmt, q):
    """Certify the quantum principal bundle of the subgroup map SUBGROUP in FILE."""

    def go():
        text, doc, ws = _load(file, q)
        pi = ws.maps.get(subgroup)
        if pi is None:
            raise Usage(f"no subgroup map named {subgroup!r}")
        rep = Report("certify-qpb", text, {"degree": degree, "slack": slack, "q": q, "subgroup": subgroup})
        r = certify_quantum_principal_bundle(pi.H, pi.Hp, pi, degree, slack)
        rep.add("subgroup_map", check_subgroup_map(pi, degree))
        _galois_records(rep, r.certificate.coaction, r.certificate, r.coinvariants, degree, slack)
        rep.add("quantum_principal_bundle", r.hopf_galois)
        rep.add("free_and_exact", r.free_and_exact)
        if r.note:
            rep.extra["note"] = r.note
        rep.emit(fmt)
        return 0 if r.hopf_galois else 1

    _run(go)


@main.command("corpus")
@click.option("--name", "names", multiple=True, help="entry to run (repeatable)")
@click.option("--all", "run_all", is_flag=True, help="run every entry")
@click.option("--list", "listing", is_flag=True, help="list entries and exit")
@_report
def corpus_cmd(names, run_all, listing, fmt):
    """Run the expected results of built-in corpus entries."""
    from . import corpus

    def go():
        if listing:
            for n in corpus.names():
                e = corpus.entry(n)
                click.echo(f"{n:18} {e.level:10} {e.summary}")
            return 0
        if not names and not run_all:
            raise Usage("give --name NAME or --all")
        chosen = corpus.names() if run_all else list(names)
        for n in chosen:
            if n not in corpus.registry():
                raise Usage(f"unknown corpus entry {n!r}")
        sources = "".join(corpus.entry(n).source for n in chosen)
        rep = Report("corpus", sources, {"entries": chosen})
        for n in chosen:
            for o in corpus.run_expected(n):
                exp = o.expectation
                rep.add(f"{n}/{exp.label()}", o.ok, None if o.ok else f"expected {exp.expected!r}, got {o.actual!r}",
                        None, expected=exp.expected, actual=o.actual, origin=exp.origin, note=exp.note)
        rep.emit(fmt)
        return 1 if rep.failed else 0

    _run(go)


@main.command("export")
@click.argument("directory", type=click.Path(file_okay=False))
def export_cmd(directory):
    """Write every corpus entry to DIRECTORY as .hgx files."""
    from . import corpus

    def go():
        for p in corpus.export(directory):
            click.echo(str(p))
        return 0

    _run(go)


if __name__ == "__main__":
    main()
