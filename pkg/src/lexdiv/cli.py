"""Command-line interface: lexicon exchange, validation, mapping derivation,
coverage and bias reports, and the development server.

The working database is itself an exchange document; its path comes from
``--db``, the LEXDB_DATA environment variable, or ./lexdb.json.
"""

import json
import sys
from pathlib import Path

import click

from . import exchange
from .errors import LexdbError, ValidationFailed
from .mapping import apply_capability, coverage, derive_gold, derive_mappings
from .metrics import bias
from .service import create_app, resolve_capability
from .store import Store

DEFAULT_DB = "lexdb.json"


def _db_path(db):
    if db:
        return Path(db)
    import os
    return Path(os.environ.get("LEXDB_DATA", DEFAULT_DB))


def _load_store(path):
    if not path.exists():
        return Store()
    try:
        doc = exchange.loads(path.read_text(encoding="utf-8"))
        return exchange.import_document(doc)
    except ValidationFailed as exc:
        for diag in exc.diagnostics:
            click.echo(str(diag), err=True)
        sys.exit(1)
    except LexdbError as exc:
        click.echo(f"error[{exc.code}]: {exc.message}", err=True)
        sys.exit(1)


def _save_store(store, path):
    doc = exchange.export_document(store)
    path.write_bytes(exchange.canonical_bytes(doc))


@click.group()
@click.option("--db", default=None, help="Path of the working database "
              "document (default: $LEXDB_DATA or ./lexdb.json).")
@click.pass_context
def main(ctx, db):
    ctx.obj = _db_path(db)


@main.command("import")
@click.argument("file", type=click.Path(exists=True, path_type=Path))
@click.pass_obj
def import_cmd(db_path, file):
    """Merge an exchange document into the working database."""
    store = _load_store(db_path)
    try:
        doc = exchange.loads(file.read_text(encoding="utf-8"))
        exchange.import_document(doc, store)
    except ValidationFailed as exc:
        for diag in exc.diagnostics:
            click.echo(str(diag), err=True)
        sys.exit(1)
    except LexdbError as exc:
        click.echo(f"error[{exc.code}]: {exc.message}", err=True)
        sys.exit(1)
    _save_store(store, db_path)
    click.echo(f"imported {file} into {db_path}")


@main.command("export")
@click.option("--langs", default=None,
              help="Comma-separated language codes (default: all).")
@click.option("--out", type=click.Path(path_type=Path), required=True)
@click.pass_obj
def export_cmd(db_path, langs, out):
    """Write the (scoped) database as a canonical exchange document."""
    store = _load_store(db_path)
    scope = [c for c in langs.split(",") if c] if langs else None
    try:
        doc = exchange.export_document(store, scope=scope)
    except LexdbError as exc:
        click.echo(f"error[{exc.code}]: {exc.message}", err=True)
        sys.exit(1)
    out.write_bytes(exchange.canonical_bytes(doc))
    click.echo(f"exported to {out}")


@main.command("validate")
@click.argument("file", type=click.Path(exists=True, path_type=Path))
def validate_cmd(file):
    """Check an exchange document; exit 1 when it has errors."""
    try:
        doc = exchange.loads(file.read_text(encoding="utf-8"))
    except LexdbError as exc:
        click.echo(f"error[{exc.code}]: {exc.message}", err=True)
        sys.exit(1)
    diags = exchange.validate_document(doc)
    for diag in diags:
        click.echo(str(diag))
    errors = sum(1 for d in diags if d.severity == "error")
    click.echo(f"{errors} error(s), {len(diags) - errors} warning(s)")
    sys.exit(1 if errors else 0)


@main.command("map")
@click.option("--from", "source", required=True)
@click.option("--to", "target", required=True)
@click.pass_obj
def map_cmd(db_path, source, target):
    """Derive cross-lingual mappings between two languages."""
    store = _load_store(db_path)
    try:
        ms = derive_mappings(store, source, target)
        exchange.export_document(store)  # assign stable ids for output
        record = exchange.mapping_set_to_record(ms, store, "derived")
    except LexdbError as exc:
        click.echo(f"error[{exc.code}]: {exc.message}", err=True)
        sys.exit(1)
    click.echo(json.dumps(record, indent=2, ensure_ascii=False))


@main.command("coverage")
@click.option("--gold", type=click.Path(exists=True, path_type=Path),
              default=None, help="Document holding a gold mapping set "
              "(default: derive the gold from the database).")
@click.option("--capability", default="full",
              help="Preset (full, no-gaps, no-bn, pivot:<lang>), "
              "a JSON object, or a path to a JSON capability file.")
@click.option("--langs", default=None)
@click.pass_obj
def coverage_cmd(db_path, gold, capability, langs):
    """Coverage of gold mappings under a capability model, plus its bias."""
    store = _load_store(db_path)
    if Path(capability).is_file():
        capability = Path(capability).read_text(encoding="utf-8")
    try:
        cap = resolve_capability(capability)
        if gold is not None:
            doc = exchange.loads(gold.read_text(encoding="utf-8"))
            exchange.import_document(doc, store)
            sets = exchange.load_mapping_sets(doc, store)
            if not sets:
                click.echo("error: gold document has no mapping_sets",
                           err=True)
                sys.exit(1)
            gold_set = next(iter(sets.values()))
        else:
            codes = ([c for c in langs.split(",") if c] if langs
                     else store.language_codes())
            gold_set = derive_gold(store, codes)
        expressible = apply_capability(gold_set, cap, store)
        report = coverage(expressible, gold_set)
    except LexdbError as exc:
        click.echo(f"error[{exc.code}]: {exc.message}", err=True)
        sys.exit(1)
    for lang in sorted(report.per_language):
        kept, total = report.counts[lang]
        click.echo(f"{lang:8s} {report.per_language[lang]:6.1%}"
                   f"  ({kept}/{total})")
    click.echo(f"{'overall':8s} {report.overall:6.1%}  "
               f"({report.overall_counts[0]}/{report.overall_counts[1]})")


@main.command("bias")
@click.option("--perf", type=click.Path(exists=True, path_type=Path),
              required=True, help="Document with perf_tables sections.")
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
def bias_cmd(perf, as_json):
    """Linguistic bias of per-language performance tables."""
    try:
        doc = exchange.loads(perf.read_text(encoding="utf-8"))
        tables = exchange.load_perf_tables(doc)
        if not tables:
            click.echo("error: document has no perf_tables", err=True)
            sys.exit(1)
        reports = {name: bias(records) for name, records in tables.items()}
    except LexdbError as exc:
        click.echo(f"error[{exc.code}]: {exc.message}", err=True)
        sys.exit(1)
    if as_json:
        click.echo(json.dumps(
            {name: {"bias": r.bias, "mean": r.mean, "n": r.n,
                    "per_language": {p.language: p.value
                                     for p in r.per_language}}
             for name, r in reports.items()},
            indent=2, ensure_ascii=False))
        return
    for name, report in reports.items():
        click.echo(f"table {name}  task={report.task!r} "
                   f"system={report.system!r} ({report.direction})")
        for record in report.per_language:
            click.echo(f"  {record.language:8s} {record.value:.4f}")
        click.echo(f"  mean  {report.mean:.4f}")
        click.echo(f"  bias  {report.bias:.4f}")


@main.command("serve")
@click.option("--port", default=8000, type=int)
@click.option("--host", default="127.0.0.1")
@click.option("--db", "db_file", type=click.Path(path_type=Path),
              default=None, help="Database document to load and snapshot.")
@click.option("--log", "log_file", type=click.Path(path_type=Path),
              default=None, help="Edit-log path (JSON lines).")
@click.option("--frontend", type=click.Path(path_type=Path), default=None,
              help="Directory of static editor files to serve at /.")
@click.option("--fixture", type=click.Choice(["rice-kinship", "alpine"]),
              default=None, help="Preload a bundled demonstration lexicon.")
@click.pass_obj
def serve_cmd(db_path, port, host, db_file, log_file, frontend, fixture):
    """Run the collaborative-editing service."""
    import uvicorn

    from .service import EditLog, replay

    path = db_file if db_file is not None else db_path
    if fixture:
        from . import fixtures
        builder = {"rice-kinship": fixtures.build_rice_kinship_store,
                   "alpine": fixtures.build_alpine_store}[fixture]
        store, _ = builder()
    else:
        store = _load_store(path)
    log = EditLog(log_file)
    if log.events and not fixture and not path.exists():
        store = replay(log.events)
    app = create_app(store, log=log,
                     snapshot_path=None if fixture else path,
                     frontend_dir=frontend)
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
