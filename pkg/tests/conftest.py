import json
import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from snipsearch.analysis import AnalyzerConfig
from snipsearch.documents import CorpusSource, RawDocument
from snipsearch.index import build_offline

# Filled by the acceptance suite; echoed after the run so the per-criterion
# verdict lines survive output capture.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)


FIXTURE_DOCS = [
    {"id": "d1", "contents": "a cat sat"},
    {"id": "d2", "contents": "a dog sat"},
    {"id": "d3", "contents": "cat cat cat"},
]

FIXTURE_ANALYZER = AnalyzerConfig(kind="simple", stopwords=frozenset({"a"}), stemming=False)


def write_jsonl_file(path: Path, records) -> Path:
    path.write_text("\n".join(json.dumps(r) for r in records) + "\n", "utf-8")
    return path


@pytest.fixture
def fixture_corpus(tmp_path):
    return write_jsonl_file(tmp_path / "docs.jsonl", FIXTURE_DOCS)


@pytest.fixture
def fixture_segment(tmp_path, fixture_corpus):
    segments = build_offline(
        CorpusSource(path=str(fixture_corpus)),
        FIXTURE_ANALYZER,
        out_dir=tmp_path / "ix",
    )
    assert len(segments) == 1
    return segments[0]


def make_random_docs(rng: random.Random, n_docs: int, vocab_size: int,
                     min_words: int = 1, max_words: int = 30) -> list[RawDocument]:
    vocab = [f"w{i}" for i in range(vocab_size)]
    return [
        RawDocument(
            id=f"doc{i:05d}",
            text=" ".join(rng.choices(vocab, k=rng.randint(min_words, max_words))),
        )
        for i in range(n_docs)
    ]


def docs_to_jsonl(docs, path: Path) -> Path:
    return write_jsonl_file(
        path, [{"id": d.id, "contents": d.text, "meta": d.meta} for d in docs]
    )
