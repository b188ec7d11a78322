"""Batch command-line interface.

Every subcommand maps onto one library operation, reads and writes plain
files, and exits nonzero with a single `error: ...` line on failure.
"""

from __future__ import annotations

import csv
import functools
import sys
from pathlib import Path

import click

from .config import AppConfig, default_config, load_config
from .corpus import (build_pair_catalog, load_compatibility_file,
                     load_gloss_table, parse_semeval, save_compatibility_file,
                     save_pair_lexicon, split_dataset, validate_against_catalog)
from .embeddings import load_embeddings
from .errors import PunkitError
from .generation import (load_generation_records, run_pipeline,
                         save_generation_records)
from .judgments import export_human_eval, import_judgments
from .keywords import (PosLexicon, build_context, default_stopwords,
                       load_stopwords, pos_filter, rake_extract)
from .metrics import (classifier_metrics, fleiss_kappa, incorporation_rate,
                      select_human_baseline, tp_at_n)
from .mining import mine_pretrain_corpus, save_prompt_records
from .reporting import end_to_end_report, merge_reports
from .retrieval import rank_unsupervised
from .types import ContextSpec, PunPair


def fail_on_error(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except PunkitError as err:
            click.echo(f"error: {err}", err=True)
            sys.exit(1)
        except FileNotFoundError as err:
            click.echo(f"error: missing file: {err.filename}", err=True)
            sys.exit(1)
    return wrapper


def resolve_config(config_path, data_dir) -> AppConfig:
    if config_path:
        return load_config(config_path)
    return default_config(data_dir)


def parse_context(raw: str) -> ContextSpec:
    keywords = tuple(k.strip() for k in raw.split(",") if k.strip())
    return ContextSpec(keywords)


@click.group()
@click.option("--config", "config_path", type=click.Path(exists=True),
              default=None, help="INI config file; flags override it.")
@click.option("--data-dir", default="data", show_default=True,
              help="Directory holding the bundled datasets.")
@click.pass_context
def main(ctx, config_path, data_dir):
    """Context-situated pun generation toolkit."""
    ctx.ensure_object(dict)
    ctx.obj["config_path"] = config_path
    ctx.obj["data_dir"] = data_dir


def get_config(ctx) -> AppConfig:
    return resolve_config(ctx.obj["config_path"], ctx.obj["data_dir"])


@main.command()
@click.argument("path", type=click.Path(exists=True))
@click.option("--lexicon", type=click.Path(exists=True), default=None,
              help="Validate records against this pair lexicon.")
@click.option("--format", "fmt", type=click.Choice(["records", "semeval"]),
              default="records", show_default=True)
@click.option("--gold", type=click.Path(exists=True), default=None,
              help="Gold sense file (semeval format).")
@click.option("--gloss-table", type=click.Path(exists=True), default=None)
@click.pass_context
@fail_on_error
def ingest(ctx, path, lexicon, fmt, gold, gloss_table):
    """Load and validate a dataset file, printing its statistics."""
    if fmt == "semeval":
        if not gold or not gloss_table:
            raise click.UsageError("semeval format needs --gold and "
                                   "--gloss-table")
        result = parse_semeval(Path(path).read_bytes(),
                               Path(gold).read_bytes(),
                               load_gloss_table(gloss_table))
        click.echo(f"entries: {len(result.entries)}")
        click.echo(f"skipped: {result.skipped}")
        return
    dataset = load_compatibility_file(path)
    if lexicon:
        validate_against_catalog(dataset.records, build_pair_catalog(lexicon))
        click.echo("catalog check: ok")
    counts = dataset.label_counts
    click.echo(f"records: {len(dataset)}")
    click.echo(f"label=1: {counts[1]}")
    click.echo(f"label=0: {counts[0]}")
    for split, count in sorted(dataset.split_counts.items()):
        click.echo(f"split {split}: {count}")


@main.command()
@click.option("--lexicon", type=click.Path(exists=True), default=None)
@click.option("--from-records", "records_path", type=click.Path(exists=True),
              default=None)
@click.option("--out", type=click.Path(), default=None,
              help="Write the normalized lexicon here.")
@click.pass_context
@fail_on_error
def catalog(ctx, lexicon, records_path, out):
    """Build the pun-pair catalog and report its size."""
    if records_path:
        source = load_compatibility_file(records_path).records
    else:
        lexicon = lexicon or (Path(ctx.obj["data_dir"]) / "pair_lexicon.tsv")
        source = str(lexicon)
    built = build_pair_catalog(source)
    kinds = {"heterographic": 0, "homographic": 0}
    for pair in built.pairs:
        kinds[pair.kind] += 1
    click.echo(f"pairs: {len(built)}")
    click.echo(f"heterographic: {kinds['heterographic']}")
    click.echo(f"homographic: {kinds['homographic']}")
    if out:
        save_pair_lexicon(built, out)
        click.echo(f"wrote {out}")


@main.command()
@click.argument("text")
@click.option("--exclude", default=None, help="pun_word/alt_word to exclude.")
@click.option("--stopwords", "stopwords_path", type=click.Path(exists=True),
              default=None)
@click.option("--pos-lexicon", "pos_path", type=click.Path(exists=True),
              default=None)
@click.option("--raw", is_flag=True, help="Print raw RAKE scores instead of "
              "the final context.")
@click.pass_context
@fail_on_error
def keywords(ctx, text, exclude, stopwords_path, pos_path, raw):
    """Extract context keywords from TEXT."""
    stops = (load_stopwords(stopwords_path) if stopwords_path
             else default_stopwords())
    lexicon = PosLexicon.load(pos_path) if pos_path else None
    if raw:
        phrases = rake_extract(text, stops)
        if lexicon:
            phrases = pos_filter(phrases, lexicon)
        for sp in phrases:
            click.echo(f"{sp.score:.2f}\t{sp.phrase}")
        return
    pair = None
    if exclude:
        pun, _, alt = exclude.partition("/")
        pair = PunPair(pun, alt or pun, "unused gloss", "unused gloss")
    context = build_context(text=text, exclude=pair, stopwords=stops,
                            pos_lexicon=lexicon)
    click.echo(", ".join(context.keywords))


@main.command()
@click.option("--context", "context_raw", required=True,
              help='Comma-separated keywords, e.g. "hunts, deer".')
@click.option("--method", type=click.Choice(["unsupervised", "classifier"]),
              default="unsupervised", show_default=True)
@click.option("--k", default=5, show_default=True)
@click.pass_context
@fail_on_error
def retrieve(ctx, context_raw, method, k):
    """Rank catalog pairs for a context."""
    config = get_config(ctx)
    context = parse_context(context_raw)
    cat = build_pair_catalog(config.pair_lexicon_path)
    if method == "unsupervised":
        table = load_embeddings(config.embeddings_path)
        ranked = rank_unsupervised(context, cat, table, k)
    else:
        from .backends import make_classifier_client
        from .retrieval import classify_then_rank
        if not config.classifier_url:
            raise PunkitError("classifier backend not configured")
        client = make_classifier_client(config.classifier_url)
        ranked = classify_then_rank(context, cat, client, k)
    for sp in ranked:
        pair = sp.pair
        click.echo(f"{sp.rank}\t{pair.pun_word}/{pair.alt_word}\t"
                   f"{sp.score:.4f}\t{pair.kind[:3]}\t"
                   f"{pair.pun_gloss} | {pair.alt_gloss}")
    if len(ranked) < k:
        click.echo(f"shortfall: {k - len(ranked)}", err=True)


@main.command()
@click.option("--corpus", "corpus_path", type=click.Path(exists=True),
              required=True, help="One sentence per line.")
@click.option("--per-word", default=200, show_default=True)
@click.option("--out", type=click.Path(), default=None)
@click.pass_context
@fail_on_error
def mine(ctx, corpus_path, per_word, out):
    """Mine pretraining prompt/target records from a sentence corpus."""
    config = get_config(ctx)
    cat = build_pair_catalog(config.pair_lexicon_path)
    stops = (load_stopwords(config.stopwords_path) if config.stopwords_path
             else default_stopwords())
    lexicon = (PosLexicon.load(config.pos_lexicon_path)
               if config.pos_lexicon_path else None)
    with open(corpus_path, "r", encoding="utf-8") as fh:
        result = mine_pretrain_corpus(fh, cat, per_word=per_word,
                                      stopwords=stops, pos_lexicon=lexicon)
    click.echo(f"records: {len(result.records)}")
    click.echo(f"words with shortfall: {len(result.shortfall)}")
    click.echo(f"total shortfall: {result.total_shortfall}")
    if out:
        save_prompt_records(result.records, out)
        click.echo(f"wrote {out}")


@main.command()
@click.option("--context", "context_raw", default=None,
              help="Comma-separated keywords; omit to use dataset contexts.")
@click.option("--contexts", "n_contexts", default=0,
              help="Number of dataset contexts to run (0 = just --context).")
@click.option("--backend", default=None, help="stub:echo, stub:template or "
              "an http endpoint; defaults to the configured backend.")
@click.option("--method", type=click.Choice(["unsupervised", "classifier"]),
              default=None)
@click.option("--k", default=1, show_default=True)
@click.option("--out", type=click.Path(), default=None,
              help="Write generation records as JSONL.")
@click.pass_context
@fail_on_error
def generate(ctx, context_raw, n_contexts, backend, method, k, out):
    """Run retrieval plus generation for one or many contexts."""
    config = get_config(ctx)
    cat = build_pair_catalog(config.pair_lexicon_path)
    table = load_embeddings(config.embeddings_path)
    contexts = []
    if context_raw:
        contexts.append(parse_context(context_raw))
    if n_contexts:
        dataset = load_compatibility_file(config.records_path)
        contexts.extend(dataset.contexts()[:n_contexts])
    if not contexts:
        raise click.UsageError("provide --context or --contexts N")
    records = []
    for context in contexts:
        run = run_pipeline(context, cat, table, k=k,
                           backend_spec=backend or config.generator_backend,
                           method=method or config.retrieval_method,
                           decode=config.decode)
        for rec in run.generations:
            records.append(rec)
            click.echo(f"{rec.generation_id}\t{context.joined()}\t"
                       f"{rec.pair.pun_word}/{rec.pair.alt_word}\t{rec.text}")
    if out:
        save_generation_records(records, out)
        click.echo(f"wrote {out}")


@main.group()
def evaluate():
    """Evaluation metrics over datasets, generations, and judgments."""


@evaluate.command("tp")
@click.option("--n", default=1, show_default=True)
@click.option("--split", default="test", show_default=True)
@click.option("--method", type=click.Choice(["unsupervised"]),
              default="unsupervised", show_default=True)
@click.pass_context
@fail_on_error
def evaluate_tp(ctx, n, split, method):
    """TP@N of retrieval against the dataset's gold labels."""
    config = get_config(ctx)
    dataset = load_compatibility_file(config.records_path)
    cat = build_pair_catalog(config.pair_lexicon_path)
    table = load_embeddings(config.embeddings_path)
    contexts = dataset.contexts(split)
    if not contexts:
        raise PunkitError(f"no contexts in split {split!r}")
    retrievals = [(c, rank_unsupervised(c, cat, table, n)) for c in contexts]
    result = tp_at_n(retrievals, dataset.subset(split), n)
    click.echo(f"TP@{n}: {result.rate:.1f}")
    click.echo(f"labeled slots: {result.labeled_slots}")
    click.echo(f"unlabeled slots: {result.unlabeled_slots}")


@evaluate.command("incorporation")
@click.option("--records", "records_path", type=click.Path(exists=True),
              required=True, help="Generation records JSONL.")
@click.option("--mode", type=click.Choice(["pun_word", "context"]),
              default="pun_word", show_default=True)
@fail_on_error
def evaluate_incorporation(records_path, mode):
    """Incorporation rate over saved generation records."""
    records = load_generation_records(records_path)
    result = incorporation_rate(records, mode)
    click.echo(f"{mode} incorporation: {result.rate:.2f}")
    if result.keyword_micro_rate is not None:
        click.echo(f"keyword micro rate: {result.keyword_micro_rate:.2f}")


@evaluate.command("success")
@click.option("--sheet", type=click.Path(exists=True), required=True)
@click.option("--records", "records_path", type=click.Path(exists=True),
              default=None, help="Restrict to ids from this JSONL file.")
@fail_on_error
def evaluate_success(sheet, records_path):
    """Majority-vote success rate from a judged sheet."""
    known = None
    if records_path:
        known = {r.generation_id
                 for r in load_generation_records(records_path)}
    report = import_judgments(sheet, known_ids=known)
    click.echo(f"success: {report.rate:.2f}")
    click.echo(f"generations: {report.generations}")
    click.echo(f"judgments: {report.judgments}")


@evaluate.command("e2e")
@click.option("--contexts", "n_contexts", default=60, show_default=True)
@click.option("--k", default=1, show_default=True)
@click.option("--backend", default="stub:template", show_default=True)
@click.option("--judgments", "sheet", type=click.Path(exists=True),
              default=None)
@click.option("--export-sheet", type=click.Path(), default=None,
              help="Write a blank judging sheet for the generations.")
@click.pass_context
@fail_on_error
def evaluate_e2e(ctx, n_contexts, k, backend, sheet, export_sheet):
    """End-to-end report: retrieval, generation, incorporation metrics."""
    config = get_config(ctx)
    dataset = load_compatibility_file(config.records_path)
    cat = build_pair_catalog(config.pair_lexicon_path)
    table = load_embeddings(config.embeddings_path)
    contexts = dataset.contexts()[:n_contexts]
    runs = [run_pipeline(c, cat, table, k=k, backend_spec=backend,
                         decode=config.decode) for c in contexts]
    judged = import_judgments(sheet) if sheet else None
    report = end_to_end_report(
        runs, judgments=judged,
        provenance={"config_hash": config.hash,
                    "dataset_hash": dataset.content_hash,
                    "backend": backend, "seed": str(config.seed)})
    click.echo(report.render_table())
    if export_sheet:
        export_human_eval([g for run in runs for g in run.generations],
                          export_sheet)
        click.echo(f"wrote {export_sheet}")


@evaluate.command("classifier")
@click.option("--predictions", type=click.Path(exists=True), required=True,
              help="One 0/1 prediction per line.")
@click.option("--golds", type=click.Path(exists=True), required=True,
              help="One 0/1 gold label per line.")
@fail_on_error
def evaluate_classifier(predictions, golds):
    """Macro precision/recall/F1 and accuracy from prediction files."""
    preds = [int(x) for x in Path(predictions).read_text().split()]
    gold = [int(x) for x in Path(golds).read_text().split()]
    metrics = classifier_metrics(preds, gold)
    for name, value in metrics.as_dict().items():
        click.echo(f"{name}: {value:.2f}")


@evaluate.command("baseline")
@click.option("--context", "context_raw", required=True)
@click.option("--seed", default=13, show_default=True)
@click.pass_context
@fail_on_error
def evaluate_baseline(ctx, context_raw, seed):
    """Pick the least-difficult human pun for a context."""
    config = get_config(ctx)
    dataset = load_compatibility_file(config.records_path)
    pun = select_human_baseline(dataset.records, parse_context(context_raw),
                                rng=seed)
    click.echo(pun)


@main.command()
@click.argument("table_file", type=click.Path(exists=True))
@fail_on_error
def kappa(table_file):
    """Fleiss' kappa from a CSV of item-by-category rating counts."""
    rows = []
    with open(table_file, newline="", encoding="utf-8") as fh:
        for row in csv.reader(fh):
            if row and any(cell.strip() for cell in row):
                rows.append([int(cell) for cell in row])
    value = fleiss_kappa(rows)
    click.echo(f"kappa: {value:.3f}")


@main.command()
@click.option("--records", "records_path", type=click.Path(exists=True),
              required=True)
@click.option("--seed", default=0, show_default=True)
@click.option("--ratios", default="0.7,0.1,0.2", show_default=True)
@click.option("--force", is_flag=True)
@click.option("--out", type=click.Path(), required=True)
@fail_on_error
def split(records_path, seed, ratios, force, out):
    """Assign train/dev/test splits to an unsplit record file."""
    dataset = load_compatibility_file(records_path)
    ratio_tuple = tuple(float(x) for x in ratios.split(","))
    records = split_dataset(dataset.records, ratios=ratio_tuple, seed=seed,
                            force=force)
    save_compatibility_file(records, out)
    counts = {}
    for rec in records:
        counts[rec.split] = counts.get(rec.split, 0) + 1
    for split_name in ("train", "dev", "test"):
        click.echo(f"{split_name}: {counts.get(split_name, 0)}")
    click.echo(f"wrote {out}")


@main.command()
@click.pass_context
@fail_on_error
def serve(ctx):
    """Run the HTTP service."""
    from .server import run_server

    run_server(get_config(ctx))


if __name__ == "__main__":
    main()
