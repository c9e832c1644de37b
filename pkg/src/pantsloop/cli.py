"""Command-line front end: ``pantsloop <command> ...``.

Loop, disk and link arguments are file paths or names from the bundled
catalog (``pantsloop examples`` lists them).
"""

import sys
from pathlib import Path

import click

from . import io
from .catalog import catalog, entry
from .cobordism import reduce as reduce_loop
from .cobordism import validate_cell
from .encode import build_loop, verify_encoding
from .four_manifold import edge_three_manifold, export_kirby, invariants as loop_invariants
from .pants import PATH_DEPTH, WEIGHT_BOUND

_SUFFIX = {"loop": ".loop", "disk": ".disk", "link": ".link"}
_WRITERS = {
    "loop": lambda e: io.write_loop(e.value),
    "disk": lambda e: io.write_disk(e.genus, e.value),
    "link": lambda e: io.write_link(e.value),
}


def _load(kind, ref):
    """(genus, value) from a file path or a catalog name."""
    path = Path(ref)
    if path.is_file():
        text = path.read_text()
        if kind == "loop":
            loop = io.read_loop(text)
            return loop.genus, loop
        if kind == "disk":
            return io.read_disk(text)
        link = io.read_link(text)
        return link.genus, link
    try:
        e = entry(ref)
    except KeyError:
        raise FileNotFoundError(f"no such file or catalog entry: {ref}") from None
    if e.kind != kind:
        raise ValueError(f"catalog entry {ref} is a {e.kind}, expected a {kind}")
    return e.genus, e.value


def _check_genus(genus, expected):
    if expected is not None and genus != expected:
        raise ValueError(f"input has genus {genus}, expected {expected}")


def _emit(text, out):
    if out:
        Path(out).write_text(text)
    else:
        click.echo(text, nl=False)


class _Group(click.Group):
    """Turns domain errors into a named message and exit code 1."""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except (ValueError, KeyError, FileNotFoundError, RuntimeError) as exc:
            click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
            sys.exit(1)


@click.group(cls=_Group)
def main():
    """Loops in the pants complex and their 4-manifolds."""


@main.command()
@click.argument("file")
@click.option("--genus", type=int, default=None, help="Fail unless the input has this genus.")
def validate(file, genus):
    """Check a loop, disk or link file (or catalog entry)."""
    path = Path(file)
    if path.is_file():
        header = io.file_kind(path.read_text())
        kind = {io.LOOP_HEADER: "loop", io.DISK_HEADER: "disk", io.LINK_HEADER: "link"}.get(header)
        if kind is None:
            raise io.FormatError(f"line 1 field header: unknown file kind {header!r}")
    else:
        kind = entry(file).kind
    g, value = _load(kind, file)
    _check_genus(g, genus)
    if kind == "disk":
        for cell, _ in value.steps:
            validate_cell(cell)
    elif kind == "link":
        value.validate()
    click.echo(f"OK {kind} genus {g}")


@main.command()
@click.argument("loop")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Also write structured text here.")
@click.option("--genus", type=int, default=None, help="Fail unless the loop has this genus.")
def invariants(loop, out, genus):
    """Euler characteristic, signature and H1 of the loop's 4-manifold."""
    g, lp = _load("loop", loop)
    _check_genus(g, genus)
    inv = loop_invariants(lp)
    click.echo(inv.summary())
    if out:
        Path(out).write_text(io.write_invariants(inv))


@main.command()
@click.argument("loop")
@click.argument("index", type=int)
def edge(loop, index):
    """Kind of edge INDEX and the 3-manifold it determines."""
    g, lp = _load("loop", loop)
    if not 0 <= index < len(lp.edges):
        raise ValueError(f"edge index {index} out of range (loop has {len(lp.edges)} edges)")
    e = lp.edges[index]
    k = edge_three_manifold(e, g)
    click.echo(f"edge {index} {e.kind} #{k}(S1xS2)")


@main.command(name="reduce")
@click.argument("loop")
@click.argument("disk")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write the ledger here.")
def reduce_cmd(loop, disk, out):
    """Run a disk certificate and print the cobordism ledger."""
    g, lp = _load("loop", loop)
    dg, d = _load("disk", disk)
    _check_genus(dg, g)
    _emit(reduce_loop(lp, d).text(), out)


@main.command()
@click.argument("link")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write the loop file here.")
@click.option("--depth", type=int, default=PATH_DEPTH, show_default=True, help="Search depth for A-paths and the closing walk.")
@click.option("--weight-bound", type=int, default=WEIGHT_BOUND, show_default=True, help="Largest curve weight tried when completing decompositions.")
def encode(link, out, depth, weight_bound):
    """Build a loop realising a surface-framed link."""
    _, lk = _load("link", link)
    lp = build_loop(lk, closing_depth=depth, weight_bound=weight_bound)
    report = verify_encoding(lk, lp)
    click.echo(report.text(), err=True, nl=False)
    _emit(io.write_loop(lp), out)


@main.command(name="export-kirby")
@click.argument("loop")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def export_kirby_cmd(loop, out):
    """Kirby data: dotted circles and surface-framed 2-handles."""
    _, lp = _load("loop", loop)
    _emit(export_kirby(lp), out)


@main.command()
@click.argument("name", required=False)
@click.option("--dir", "directory", type=click.Path(file_okay=False), default=".", show_default=True)
def examples(name, directory):
    """Write catalog files (all of them, or just NAME)."""
    names = [name] if name else sorted(catalog())
    target = Path(directory)
    target.mkdir(parents=True, exist_ok=True)
    for n in names:
        e = entry(n)
        path = target / (n + _SUFFIX[e.kind])
        path.write_text(_WRITERS[e.kind](e))
        click.echo(str(path))


if __name__ == "__main__":
    main()
