import math
import random

import pytest

from conftest import FIXTURE_ANALYZER, docs_to_jsonl, make_random_docs, write_jsonl_file
from oracle_bm25 import brute_force_topk
from snipsearch.analysis import build_analyzer
from snipsearch.documents import CorpusSource
from snipsearch.index import build_offline
from snipsearch.search import Query, SearchError, batch_search, idf, make_query, score_bm25
from snipsearch.segment import segment


def analyzed_corpus(docs, analyzer, max_words=256):
    out = []
    for doc in docs:
        for snip in segment(doc, max_words):
            out.append((snip.snippet_id, analyzer.analyze(snip.text)))
    return out


def test_fixture_query_cat_matches_oracle(fixture_segment):
    # oracle scores over d1="a cat sat", d2="a dog sat", d3="cat cat cat"
    analyzer = build_analyzer(FIXTURE_ANALYZER)
    corpus = [
        ("d1#0", analyzer.analyze("a cat sat")),
        ("d2#0", analyzer.analyze("a dog sat")),
        ("d3#0", analyzer.analyze("cat cat cat")),
    ]
    expected = brute_force_topk(corpus, ["cat"], 10)
    hits = score_bm25(fixture_segment, "cat", 10)
    assert [h.id for h in hits] == ["d3#0", "d1#0"]
    assert [h.id for h in hits] == [sid for sid, _ in expected]
    for hit, (_, score) in zip(hits, expected):
        assert hit.score == pytest.approx(score, rel=1e-9)
    assert hits[0].score > hits[1].score


def test_absent_term_returns_empty(fixture_segment):
    assert score_bm25(fixture_segment, "zebra", 10) == []


def test_equal_scores_tie_broken_by_id(fixture_segment):
    hits = score_bm25(fixture_segment, "sat", 10)
    assert [h.id for h in hits] == ["d1#0", "d2#0"]
    assert hits[0].score == hits[1].score


def test_k_larger_than_matches(fixture_segment):
    assert len(score_bm25(fixture_segment, "dog", 50)) == 1


def test_k_truncates(fixture_segment):
    assert len(score_bm25(fixture_segment, "sat cat", 1)) == 1


def test_ranks_are_dense_and_scores_non_increasing(fixture_segment):
    hits = score_bm25(fixture_segment, "cat sat dog", 10)
    assert [h.rank for h in hits] == list(range(1, len(hits) + 1))
    assert all(a.score >= b.score for a, b in zip(hits, hits[1:]))
    assert all(h.score >= 0 for h in hits)


def test_matched_terms(fixture_segment):
    hits = {h.id: h for h in score_bm25(fixture_segment, "cat sat zebra", 10)}
    assert sorted(hits["d1#0"].matched_terms) == ["cat", "sat"]
    assert hits["d3#0"].matched_terms == ["cat"]
    assert hits["d2#0"].matched_terms == ["sat"]


def test_query_analysis_uses_index_analyzer(fixture_segment):
    # "a" is a stopword in the fixture analyzer: contributes nothing
    assert [h.id for h in score_bm25(fixture_segment, "a cat", 10)] == \
           [h.id for h in score_bm25(fixture_segment, "cat", 10)]


def test_digest_mismatch_rejected(fixture_segment):
    q = Query(raw="cat", terms=["cat"], k=5, analyzer_digest="deadbeef")
    with pytest.raises(SearchError, match="different analyzer"):
        score_bm25(fixture_segment, q)


def test_invalid_k():
    with pytest.raises(ValueError):
        Query(raw="x", terms=["x"], k=0)


def test_idf_positive_for_all_df():
    for n in (1, 2, 10, 1000):
        for df in range(1, n + 1):
            assert idf(n, df) > 0


def test_batch_search_matches_sequential(fixture_segment):
    queries = [make_query(fixture_segment, q, 5) for q in ["cat", "dog sat", "zebra"]]
    batch = batch_search(fixture_segment, queries)
    single = [score_bm25(fixture_segment, q) for q in queries]
    assert [[(h.id, h.score) for h in hits] for hits in batch] == \
           [[(h.id, h.score) for h in hits] for hits in single]


def test_batch_search_empty():
    assert batch_search(None, []) == []


def test_monotonicity_extra_occurrence_never_hurts_rank(tmp_path):
    base = [
        {"id": "d1", "contents": "cat dog"},
        {"id": "d2", "contents": "cat cat dog"},  # d1 plus one extra "cat"
        {"id": "d3", "contents": "bird dog"},
    ]
    p = write_jsonl_file(tmp_path / "docs.jsonl", base)
    seg = build_offline(CorpusSource(path=str(p)), FIXTURE_ANALYZER,
                        out_dir=tmp_path / "ix")[0]
    hits = score_bm25(seg, "cat", 10)
    ranks = {h.id: h.rank for h in hits}
    assert ranks["d2#0"] < ranks["d1#0"]


@pytest.mark.parametrize("seed", range(5))
def test_oracle_equivalence_random_corpora(tmp_path, seed):
    rng = random.Random(seed)
    docs = make_random_docs(rng, rng.randint(5, 60), rng.randint(3, 30),
                            min_words=1, max_words=50)
    p = docs_to_jsonl(docs, tmp_path / "docs.jsonl")
    seg = build_offline(CorpusSource(path=str(p)), FIXTURE_ANALYZER,
                        out_dir=tmp_path / "ix")[0]
    analyzer = build_analyzer(FIXTURE_ANALYZER)
    corpus = analyzed_corpus(docs, analyzer)
    for _ in range(20):
        terms = [f"w{rng.randrange(35)}" for _ in range(rng.randint(1, 4))]
        k = rng.randint(1, 15)
        expected = brute_force_topk(corpus, terms, k)
        hits = score_bm25(seg, " ".join(terms), k)
        assert [h.id for h in hits] == [sid for sid, _ in expected]
        for hit, (_, score) in zip(hits, expected):
            assert math.isclose(hit.score, score, rel_tol=1e-9)
