"""Text -> terms, two interchangeable ways.

The simple analyzer lowercases, splits on non-alphanumerics, drops stopwords
and optionally stems. The subword analyzer pre-splits on whitespace and
applies byte-pair-encoding merges in rank order. Both are deterministic and
immutable once built; an index records a digest of its analyzer so queries
are guaranteed to use the same one.
"""

from __future__ import annotations

import hashlib
import json
import re
import unicodedata
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from snipsearch import porter

_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)


def _alnum_runs(token: str) -> list[str]:
    runs = []
    current = []
    for c in token:
        if c.isalnum():
            current.append(c)
        elif current:
            runs.append("".join(current))
            current = []
    if current:
        runs.append("".join(current))
    return runs


def default_stopwords() -> frozenset[str]:
    text = resources.files("snipsearch").joinpath("data/stopwords.txt").read_text("utf-8")
    return frozenset(w for w in text.split() if w)


@dataclass(frozen=True)
class AnalyzerConfig:
    """Which analyzer to build; exactly the fields for its kind are used."""

    kind: str = "simple"
    stopwords: frozenset[str] = field(default_factory=frozenset)
    stemming: bool = False
    vocab_path: str | None = None
    merges_path: str | None = None
    unknown_policy: str = "byte_fallback"

    def __post_init__(self):
        if self.kind not in ("simple", "subword"):
            raise ValueError(f"unknown analyzer kind {self.kind!r}")
        if self.kind == "simple":
            if self.vocab_path or self.merges_path:
                raise ValueError("vocab/merges are subword-only fields")
            for w in self.stopwords:
                if not w or w != w.lower():
                    raise ValueError(f"stopwords must be lowercase and non-empty: {w!r}")
            object.__setattr__(self, "stopwords", frozenset(self.stopwords))
        else:
            if self.stopwords or self.stemming:
                raise ValueError("stopwords/stemming are simple-only fields")
            if not self.vocab_path or not self.merges_path:
                raise ValueError("subword analyzer needs vocab_path and merges_path")
            if self.unknown_policy not in ("byte_fallback", "drop"):
                raise ValueError(f"unknown unknown_policy {self.unknown_policy!r}")


class SubwordModel:
    """Vocabulary plus ordered merge rules; rank = list position."""

    def __init__(self, vocabulary: dict[str, int], merges: list[tuple[str, str]],
                 unknown_policy: str = "byte_fallback"):
        for left, right in merges:
            if left + right not in vocabulary:
                raise ValueError(f"merge result {left + right!r} missing from vocabulary")
        self.vocabulary = vocabulary
        self.merges = merges
        self.ranks = {pair: rank for rank, pair in enumerate(merges)}
        self.unknown_policy = unknown_policy

    def encode_word(self, word: str) -> list[str]:
        symbols = list(word)
        while len(symbols) > 1:
            pairs = [(self.ranks[p], i) for i in range(len(symbols) - 1)
                     if (p := (symbols[i], symbols[i + 1])) in self.ranks]
            if not pairs:
                break
            best_rank = min(pairs)[0]
            left, right = self.merges[best_rank]
            merged = []
            i = 0
            while i < len(symbols):
                if i < len(symbols) - 1 and symbols[i] == left and symbols[i + 1] == right:
                    merged.append(left + right)
                    i += 2
                else:
                    merged.append(symbols[i])
                    i += 1
            symbols = merged
        out: list[str] = []
        for sym in symbols:
            if sym in self.vocabulary:
                out.append(sym)
            elif self.unknown_policy == "byte_fallback":
                for b in sym.encode("utf-8"):
                    tok = f"<0x{b:02X}>"
                    if tok in self.vocabulary:
                        out.append(tok)
            # drop: skip the symbol entirely
        return out


def load_subword_model(vocab_path: str | Path, merges_path: str | Path,
                       unknown_policy: str = "byte_fallback") -> SubwordModel:
    """Vocab: one token per line, id = line number. Merges: two space-separated
    symbols per line, rank = line number."""
    vocabulary: dict[str, int] = {}
    for i, line in enumerate(Path(vocab_path).read_text("utf-8").splitlines()):
        tok = line.rstrip("\n")
        if not tok:
            continue
        if tok in vocabulary:
            raise ValueError(f"duplicate vocabulary entry {tok!r} at line {i}")
        vocabulary[tok] = i
    merges: list[tuple[str, str]] = []
    for i, line in enumerate(Path(merges_path).read_text("utf-8").splitlines()):
        line = line.strip()
        if not line:
            continue
        parts = line.split(" ")
        if len(parts) != 2:
            raise ValueError(f"merges line {i}: expected two space-separated symbols")
        merges.append((parts[0], parts[1]))
    return SubwordModel(vocabulary, merges, unknown_policy)


class SimpleAnalyzer:
    def __init__(self, config: AnalyzerConfig):
        self.config = config
        self._stopwords = config.stopwords
        self._stemming = config.stemming

    def analyze(self, text: str) -> list[str]:
        text = unicodedata.normalize("NFC", text).lower()
        terms = []
        for token in _TOKEN_RE.findall(text):
            # \w admits combining marks; token splits on those too
            pieces = [token] if token.isalnum() else _alnum_runs(token)
            terms.extend(p for p in pieces if p not in self._stopwords)
        if self._stemming:
            terms = [porter.stem(t) for t in terms]
        return terms


class SubwordAnalyzer:
    def __init__(self, config: AnalyzerConfig, model: SubwordModel | None = None):
        self.config = config
        self.model = model or load_subword_model(
            config.vocab_path, config.merges_path, config.unknown_policy
        )

    def analyze(self, text: str) -> list[str]:
        out: list[str] = []
        for word in text.split():
            out.extend(self.model.encode_word(word))
        return out


def build_analyzer(config: AnalyzerConfig):
    if config.kind == "simple":
        return SimpleAnalyzer(config)
    return SubwordAnalyzer(config)


def analyze(config: AnalyzerConfig, text: str) -> list[str]:
    return build_analyzer(config).analyze(text)


def config_to_manifest(config: AnalyzerConfig) -> dict:
    """Self-contained serialization: file-backed resources go in by content
    so a copied index keeps working and digests stay path-independent."""
    if config.kind == "simple":
        return {
            "kind": "simple",
            "stopwords": sorted(config.stopwords),
            "stemming": config.stemming,
        }
    return {
        "kind": "subword",
        "vocab": Path(config.vocab_path).read_text("utf-8"),
        "merges": Path(config.merges_path).read_text("utf-8"),
        "unknown_policy": config.unknown_policy,
    }


def analyzer_from_manifest(entry: dict, scratch_dir: str | Path):
    """Rebuild an analyzer from its manifest serialization."""
    if entry["kind"] == "simple":
        return SimpleAnalyzer(
            AnalyzerConfig(
                kind="simple",
                stopwords=frozenset(entry["stopwords"]),
                stemming=entry["stemming"],
            )
        )
    scratch = Path(scratch_dir)
    scratch.mkdir(parents=True, exist_ok=True)
    vocab_path = scratch / "vocab.txt"
    merges_path = scratch / "merges.txt"
    if not vocab_path.exists():
        vocab_path.write_text(entry["vocab"], "utf-8")
        merges_path.write_text(entry["merges"], "utf-8")
    config = AnalyzerConfig(
        kind="subword",
        vocab_path=str(vocab_path),
        merges_path=str(merges_path),
        unknown_policy=entry["unknown_policy"],
    )
    return SubwordAnalyzer(config)


def analyzer_digest(config: AnalyzerConfig) -> str:
    canonical = json.dumps(config_to_manifest(config), sort_keys=True, ensure_ascii=False)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def digest_of_manifest(entry: dict) -> str:
    canonical = json.dumps(entry, sort_keys=True, ensure_ascii=False)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()
