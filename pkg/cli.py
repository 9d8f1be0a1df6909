"""CLI entry point for the whiskered categories toolkit.

Commands
--------
- validate      Check that a structure document describes a valid structure.
- check         Run an identities suite and print the report.
- commutators   Print the commutator [a, b] for every pair of morphisms.
- bracket       Print the bracket of two morphisms in R[C].
- generate      Print the document of a named example family.

Exit codes: 0 pass, 1 a gating check failed, 2 usage / parse / load error.
"""

from __future__ import annotations

import json
import logging
import sys
from pathlib import Path

import click

import config
from core.errors import DocumentParseError, StructureError, StructureLoadError

logging.basicConfig(
    level=getattr(logging, config.LOG_LEVEL, logging.WARNING),
    format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
    datefmt="%Y-%m-%d %H:%M:%S",
)
logger = logging.getLogger("cli")

EXIT_FAILURE = 1
EXIT_USAGE = 2


@click.group()
def cli():
    """Whiskered categories and groupoids -- CLI."""
    pass


def _load(path: str):
    """Load a document or exit with status 2."""
    from serialization.documents import kind_of, loads
    from serialization.hashing import fingerprint_of_text

    try:
        text = Path(path).read_text(encoding="utf-8")
        structure = loads(text)
    except DocumentParseError as exc:
        click.echo(f"PARSE ERROR  {path}: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    except StructureLoadError as exc:
        click.echo(f"LOAD ERROR   {path}: {exc}", err=True)
        for v in exc.report.violations[:10]:
            click.echo(f"    {v.law} at {v.witness} {v.detail}".rstrip(), err=True)
        sys.exit(EXIT_USAGE)
    except OSError as exc:
        click.echo(f"ERROR  cannot read {path}: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    kind = kind_of(structure)
    logger.info("loaded %s as %s", path, kind)
    return structure, kind, fingerprint_of_text(text)


# ── validate ──────────────────────────────────────────────────────────────

@cli.command()
@click.argument("path", type=click.Path())
def validate(path: str):
    """Validate a structure document."""
    _, kind, digest = _load(path)
    click.echo(f"OK  kind={kind}  fingerprint={digest}")


# ── check ─────────────────────────────────────────────────────────────────

@cli.command()
@click.argument("path", type=click.Path())
@click.option("--suite", type=click.Choice(["squares", "whisker", "commutators", "linear", "all"]),
              default="all", show_default=True, help="Which identities to check.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default=config.REPORT_FORMAT,
              show_default=True, help="Report format.")
def check(path: str, suite: str, fmt: str):
    """Run an identities suite; exit 1 if a gating check fails."""
    from checks.runner import render_json, render_text, run_checks

    structure, kind, digest = _load(path)
    report = run_checks(structure, suite, digest, kind)
    click.echo(render_json(report) if fmt == "json" else render_text(report))
    if not report.ok:
        sys.exit(EXIT_FAILURE)


# ── commutators ───────────────────────────────────────────────────────────

@cli.command()
@click.argument("path", type=click.Path())
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default=config.REPORT_FORMAT,
              show_default=True, help="Output format.")
def commutators(path: str, fmt: str):
    """Print [a, b] for every pair of morphisms of a whiskered groupoid."""
    from commutator.commutators import commutator_table
    from whisker.whiskering import WhiskeredCategory

    structure, kind, _ = _load(path)
    if not isinstance(structure, WhiskeredCategory) or not structure.is_groupoid:
        click.echo(f"commutators need a whiskered groupoid, got kind {kind}", err=True)
        sys.exit(EXIT_USAGE)

    C = structure.base
    rows = [
        (C.morphism_label(a), C.morphism_label(b), C.morphism_label(ab))
        for a, b, ab in commutator_table(structure)
    ]
    if fmt == "json":
        click.echo(json.dumps([{"a": a, "b": b, "commutator": ab} for a, b, ab in rows], indent=2, ensure_ascii=False))
        return
    for a, b, ab in rows:
        click.echo(f"[{a}, {b}] = {ab}")


# ── bracket ───────────────────────────────────────────────────────────────

@cli.command()
@click.argument("path", type=click.Path())
@click.argument("a")
@click.argument("b")
def bracket(path: str, a: str, b: str):
    """Print the bracket [A, B] = Δ(A*B) in R[C]."""
    from linear.category import LinearCategory, bracket as linear_bracket, linearize
    from utils.rendering import render_sum
    from whisker.whiskering import WhiskeredCategory

    structure, kind, _ = _load(path)
    if isinstance(structure, WhiskeredCategory):
        structure = linearize(structure)
    if not isinstance(structure, LinearCategory):
        click.echo(f"brackets need a whiskered structure, got kind {kind}", err=True)
        sys.exit(EXIT_USAGE)

    C = structure.base.base
    try:
        first, second = C.morphism_by_label(a), C.morphism_by_label(b)
    except StructureError as exc:
        click.echo(f"ERROR: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    click.echo(render_sum(linear_bracket(structure, first, second), C.morphism_label))


# ── generate ──────────────────────────────────────────────────────────────

@cli.command()
@click.argument("family")
@click.option("--monoid", default="trivial", show_default=True, help="Object monoid (or the algebra's monoid).")
@click.option("--group", default="s3", show_default=True, help="Vertex group for bundle and one-object families.")
@click.option("--action", default="trivial", show_default=True, help="Action preset for the bundle family.")
def generate(family: str, monoid: str, group: str, action: str):
    """Print the document of an example FAMILY on standard output."""
    from constructions.families import build_family
    from serialization.documents import dumps

    try:
        structure, _ = build_family(family, monoid=monoid, group=group, action=action)
    except StructureError as exc:
        click.echo(f"ERROR: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    click.echo(dumps(structure), nl=False)


if __name__ == "__main__":
    cli()
