"""Command-line entry point.

Subcommands: index build | index stream | index merge | index stats,
search, dedup captions, serve. Data goes to stdout as JSON/JSONL;
diagnostics to stderr. Exit codes: 0 success, 1 usage error, 2 runtime
error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from snipsearch.analysis import AnalyzerConfig, default_stopwords
from snipsearch.dedup import dedup_captions, write_clusters_jsonl
from snipsearch.documents import CorpusSource, ShardPlan, SnipsearchError
from snipsearch.index import (
    DEFAULT_B,
    DEFAULT_K1,
    build_offline,
    build_streaming,
    merge_segments,
    open_segment,
)
from snipsearch.ingest import open_source
from snipsearch.search import score_bm25
from snipsearch.segment import DEFAULT_MAX_WORDS
from snipsearch.server import FederationConfig, serve


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _analyzer_from_args(args) -> AnalyzerConfig:
    if args.analyzer == "subword":
        if not args.vocab or not args.merges:
            raise SystemExit(1)
        return AnalyzerConfig(kind="subword", vocab_path=args.vocab, merges_path=args.merges)
    stopwords = default_stopwords()
    if args.stopwords:
        stopwords = frozenset(
            w for w in Path(args.stopwords).read_text("utf-8").split() if w
        )
    return AnalyzerConfig(kind="simple", stopwords=stopwords, stemming=args.stemming)


def _source_from_args(args) -> CorpusSource:
    kind = "stream" if args.input == "-" else (
        "directory" if Path(args.input).is_dir() else "file"
    )
    return CorpusSource(
        path=args.input,
        kind=kind,
        format=args.format,
        id_field=args.id_field,
        text_field=args.text_field,
    )


def _add_analyzer_flags(p):
    p.add_argument("--analyzer", choices=["simple", "subword"], default="simple")
    p.add_argument("--stemming", action="store_true")
    p.add_argument("--stopwords", help="stopword list file, one term per line")
    p.add_argument("--vocab", help="subword vocabulary file")
    p.add_argument("--merges", help="subword merges file")


def _add_input_flags(p):
    p.add_argument("--input", required=True, help="file, directory, or - for stdin")
    p.add_argument("--format", choices=["jsonl", "json", "csv", "tsv"], default="jsonl")
    p.add_argument("--id-field", default="id")
    p.add_argument("--text-field", default="contents")
    p.add_argument("--strict", action="store_true", help="abort on malformed records")


def build_parser() -> _Parser:
    parser = _Parser(prog="snipsearch")
    sub = parser.add_subparsers(dest="command", required=True)

    index = sub.add_parser("index")
    index_sub = index.add_subparsers(dest="index_command", required=True)

    p = index_sub.add_parser("build")
    _add_input_flags(p)
    _add_analyzer_flags(p)
    p.add_argument("--segment-words", type=int, default=DEFAULT_MAX_WORDS)
    p.add_argument("--shards", type=int, default=1)
    p.add_argument("--jobs", type=int, default=None, help="parallel shard finalization")
    p.add_argument("--k1", type=float, default=DEFAULT_K1)
    p.add_argument("--b", type=float, default=DEFAULT_B)
    p.add_argument("--output", required=True)

    p = index_sub.add_parser("stream")
    _add_input_flags(p)
    _add_analyzer_flags(p)
    p.add_argument("--segment-words", type=int, default=DEFAULT_MAX_WORDS)
    p.add_argument("--ram-budget-docs", type=int, default=100_000)
    p.add_argument("--k1", type=float, default=DEFAULT_K1)
    p.add_argument("--b", type=float, default=DEFAULT_B)
    p.add_argument("--output", required=True)

    p = index_sub.add_parser("merge")
    p.add_argument("--inputs", nargs="+", required=True)
    p.add_argument("--output", required=True)

    p = index_sub.add_parser("stats")
    p.add_argument("--index", required=True)
    p.add_argument("--top-terms", type=int, default=20)

    p = sub.add_parser("search")
    p.add_argument("--index", required=True)
    p.add_argument("--query", required=True)
    p.add_argument("--k", type=int, default=10)

    dedup = sub.add_parser("dedup")
    dedup_sub = dedup.add_subparsers(dest="dedup_command", required=True)
    p = dedup_sub.add_parser("captions")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=["jsonl", "csv", "tsv"], default="tsv")
    p.add_argument("--caption-field", default="caption")
    p.add_argument("--url-field", default="url")
    p.add_argument("--ram-pair-budget", type=int, default=None)
    p.add_argument("--output", required=True)

    p = sub.add_parser("serve")
    p.add_argument("--config", required=True, help="federation config JSON file")

    return parser


def _cmd_index_build(args) -> int:
    segments = build_offline(
        _source_from_args(args),
        _analyzer_from_args(args),
        max_words=args.segment_words,
        plan=ShardPlan(shard_count=args.shards),
        out_dir=args.output,
        strict=args.strict,
        k1=args.k1,
        b=args.b,
        jobs=args.jobs,
    )
    print(json.dumps({
        "segments": [str(s.dir) for s in segments],
        "snippets": sum(s.snippet_count for s in segments),
    }))
    return 0


def _cmd_index_stream(args) -> int:
    docs = open_source(_source_from_args(args), strict=args.strict)
    parts = build_streaming(
        docs,
        _analyzer_from_args(args),
        max_words=args.segment_words,
        ram_budget_docs=args.ram_budget_docs,
        out_dir=Path(args.output) / "parts",
        k1=args.k1,
        b=args.b,
    )
    merged = merge_segments(parts, args.output)
    print(json.dumps({"segment": str(merged.dir), "snippets": merged.snippet_count}))
    return 0


def _cmd_index_merge(args) -> int:
    merged = merge_segments(list(args.inputs), args.output)
    print(json.dumps({"segment": str(merged.dir), "snippets": merged.snippet_count}))
    return 0


def _cmd_index_stats(args) -> int:
    seg = open_segment(args.index)
    print(json.dumps({
        "snippet_count": seg.snippet_count,
        "avgdl": seg.avgdl,
        "total_term_occurrences": seg.total_term_occurrences,
        "lexicon_size": seg.lexicon_size,
        "top_terms": [
            {"term": t, "df": df, "cf": cf} for t, df, cf in seg.top_terms(args.top_terms)
        ],
    }))
    return 0


def _cmd_search(args) -> int:
    seg = open_segment(args.index)
    for hit in score_bm25(seg, args.query, args.k):
        print(json.dumps({
            "id": hit.id,
            "score": hit.score,
            "rank": hit.rank,
            "text": hit.text,
            "meta": hit.meta,
            "matched_terms": hit.matched_terms,
        }, ensure_ascii=False))
    return 0


def _cmd_dedup_captions(args) -> int:
    source = CorpusSource(
        path=args.input,
        kind="stream" if args.input == "-" else "file",
        format=args.format,
        id_field=args.caption_field,
        text_field=args.url_field,
    )
    # reuse the record reader: caption rides in doc.id, url in doc.text
    pairs = ((doc.id, doc.text) for doc in open_source(source))
    clusters = dedup_captions(pairs, ram_pair_budget=args.ram_pair_budget)
    with open(args.output, "w", encoding="utf-8") as fh:
        n = write_clusters_jsonl(clusters, fh)
    print(json.dumps({"clusters": n, "output": args.output}))
    return 0


def _cmd_serve(args) -> int:
    serve(FederationConfig.from_file(args.config))
    return 0


def run(argv: list[str] | None = None) -> int:
    logging.basicConfig(stream=sys.stderr, level=logging.INFO, format="%(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers = {
        ("index", "build"): _cmd_index_build,
        ("index", "stream"): _cmd_index_stream,
        ("index", "merge"): _cmd_index_merge,
        ("index", "stats"): _cmd_index_stats,
        ("search", None): _cmd_search,
        ("dedup", "captions"): _cmd_dedup_captions,
        ("serve", None): _cmd_serve,
    }
    key = (args.command, getattr(args, "index_command", getattr(args, "dedup_command", None)))
    try:
        return handlers[key](args)
    except (SnipsearchError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
