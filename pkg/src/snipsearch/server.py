"""HTTP JSON API serving one or many named index segments.

Endpoints:
    GET /healthz                  liveness, body "ok"
    GET /indices                  names with snippet counts and avgdl
    GET /indices/{name}/stats     N, avgdl, lexicon size, top 20 terms
    GET /search?q=&index=&k=      per-index ranked, redacted result lists

Without an ``index`` parameter, /search fans out to every hosted index in
parallel and returns one independently ranked list per index; lists are
never merged into a global ranking. All outgoing text and meta values pass
redaction unless it is disabled in the config.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, HTTPException, Query as QueryParam
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import PlainTextResponse

from snipsearch.index import IndexSegment, open_segment
from snipsearch.redact import DEFAULT_RULES, redact
from snipsearch.search import score_bm25

MAX_K = 100


@dataclass
class FederationConfig:
    indices: dict[str, str]
    default_k: int = 10
    port: int = 8080
    bind: str = "127.0.0.1"
    redaction: bool = True
    cors_origins: list[str] = field(default_factory=lambda: ["*"])

    def __post_init__(self):
        if not self.indices:
            raise ValueError("config must name at least one index")
        for name in self.indices:
            if not name or not all(c.isalnum() or c in "-_." for c in name):
                raise ValueError(f"index name {name!r} is not URL-safe")
        if self.default_k < 1:
            raise ValueError("default_k must be >= 1")

    @classmethod
    def from_file(cls, path: str | Path) -> "FederationConfig":
        data = json.loads(Path(path).read_text("utf-8"))
        config = cls(**data)
        if os.environ.get("PORT"):
            config.port = int(os.environ["PORT"])
        if os.environ.get("BIND_ADDR"):
            config.bind = os.environ["BIND_ADDR"]
        return config


def create_app(config: FederationConfig) -> FastAPI:
    segments: dict[str, IndexSegment] = {}
    for name, directory in config.indices.items():
        try:
            segments[name] = open_segment(directory)
        except Exception as exc:
            raise RuntimeError(f"cannot open index {name!r} at {directory}: {exc}") from exc

    app = FastAPI(title="snipsearch")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=config.cors_origins,
        allow_methods=["GET"],
        allow_headers=["*"],
    )
    pool = ThreadPoolExecutor(max_workers=max(4, len(segments)))

    def outgoing(text: str) -> str:
        return redact(text, DEFAULT_RULES)[0] if config.redaction else text

    def search_one(name: str, q: str, k: int) -> tuple[list[dict], int]:
        t0 = time.perf_counter()
        hits = score_bm25(segments[name], q, k) if q.strip() else []
        body = [
            {
                "id": h.id,
                "score": h.score,
                "text": outgoing(h.text),
                "meta": {key: outgoing(v) for key, v in h.meta.items()},
                "matched_terms": h.matched_terms,
            }
            for h in hits
        ]
        return body, int((time.perf_counter() - t0) * 1000)

    @app.get("/healthz", response_class=PlainTextResponse)
    def healthz() -> str:
        return "ok"

    @app.get("/indices")
    def indices() -> list[dict]:
        return [
            {"name": name, "snippet_count": seg.snippet_count, "avgdl": seg.avgdl}
            for name, seg in segments.items()
        ]

    @app.get("/indices/{name}/stats")
    def stats(name: str) -> dict:
        seg = segments.get(name)
        if seg is None:
            raise HTTPException(status_code=404, detail=f"unknown index {name!r}")
        return {
            "name": name,
            "snippet_count": seg.snippet_count,
            "avgdl": seg.avgdl,
            "lexicon_size": seg.lexicon_size,
            "top_terms": [
                {"term": t, "df": df, "cf": cf} for t, df, cf in seg.top_terms(20)
            ],
        }

    @app.get("/search")
    def search(
        q: str = QueryParam(default=""),
        index: str | None = QueryParam(default=None),
        k: int | None = QueryParam(default=None),
    ) -> dict:
        if k is None:
            k = config.default_k
        if k < 1:
            raise HTTPException(status_code=400, detail="k must be >= 1")
        k = min(k, MAX_K)
        if index is not None:
            if index not in segments:
                raise HTTPException(status_code=404, detail=f"unknown index {index!r}")
            names = [index]
        else:
            names = list(segments)
        futures = {name: pool.submit(search_one, name, q, k) for name in names}
        results = {}
        took = {}
        for name, fut in futures.items():
            results[name], took[name] = fut.result()
        return {"query": q, "k": k, "results": results, "took_ms": took}

    app.state.config = config
    app.state.segments = segments
    return app


def serve(config: FederationConfig) -> None:
    """Run until terminated; in-flight requests finish on shutdown."""
    import uvicorn

    uvicorn.run(create_app(config), host=config.bind, port=config.port)
