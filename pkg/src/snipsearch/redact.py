"""PII scrubbing applied to every piece of text leaving the backend.

Rules are applied in a fixed order: email, ipv4, ipv6, phone, id_number.
Each maximal match is replaced by a stable placeholder token such as
"[EMAIL]" so the UI can style it. Redaction is idempotent: placeholders
contain no digits or @, so no rule can match them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace as dc_replace
from pathlib import Path
from typing import Callable, Sequence

from snipsearch.search import ScoredHit

_EMAIL = re.compile(r"[A-Za-z0-9._%+-]+@[A-Za-z0-9-]+(?:\.[A-Za-z0-9-]+)*\.[A-Za-z]{2,}")

_IPV4 = re.compile(
    r"\b(?:(?:25[0-5]|2[0-4]\d|1\d\d|[1-9]?\d)\.){3}(?:25[0-5]|2[0-4]\d|1\d\d|[1-9]?\d)\b"
)

_IPV6 = re.compile(
    r"\b(?:[0-9a-f]{1,4}:){7}[0-9a-f]{1,4}\b"
    r"|\b(?:[0-9a-f]{1,4}:)+:(?:[0-9a-f]{1,4}(?::[0-9a-f]{1,4})*)?"
    r"|::(?:[0-9a-f]{1,4}(?::[0-9a-f]{1,4})*)",
    re.IGNORECASE,
)

# candidate phone shapes; a match only counts if it carries 7-15 digits
_PHONE = re.compile(r"\+?\(?\d{1,4}\)?(?:[ .-]?\(?\d{1,4}\)?){1,6}")

_ID_NUMBER = re.compile(r"\d(?:-?\d){7,}")


def _digit_gated(pattern: re.Pattern, placeholder: str,
                 lo: int = 7, hi: int = 10**9) -> Callable[[str], tuple[str, int]]:
    def apply(text: str) -> tuple[str, int]:
        count = 0

        def sub(m: re.Match) -> str:
            nonlocal count
            digits = sum(c.isdigit() for c in m.group(0))
            if lo <= digits <= hi:
                count += 1
                return placeholder
            return m.group(0)

        return pattern.sub(sub, text), count

    return apply


def _plain(pattern: re.Pattern, placeholder: str) -> Callable[[str], tuple[str, int]]:
    def apply(text: str) -> tuple[str, int]:
        return pattern.subn(placeholder, text)

    return apply


@dataclass(frozen=True)
class RedactionRule:
    kind: str
    apply: Callable[[str], tuple[str, int]]


DEFAULT_RULES: tuple[RedactionRule, ...] = (
    RedactionRule("email", _plain(_EMAIL, "[EMAIL]")),
    RedactionRule("ipv4", _plain(_IPV4, "[IP]")),
    RedactionRule("ipv6", _plain(_IPV6, "[IPV6]")),
    RedactionRule("phone", _digit_gated(_PHONE, "[PHONE]", lo=7, hi=15)),
    RedactionRule("id_number", _digit_gated(_ID_NUMBER, "[ID]", lo=8)),
)


def load_rules(path: str | Path) -> tuple[RedactionRule, ...]:
    """Optional override file: kind<TAB>pattern<TAB>placeholder per line."""
    rules = []
    for line in Path(path).read_text("utf-8").splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        kind, pattern, placeholder = line.split("\t")
        rules.append(RedactionRule(kind, _plain(re.compile(pattern, re.IGNORECASE), placeholder)))
    return tuple(rules)


def redact(text: str, rules: Sequence[RedactionRule] = DEFAULT_RULES) -> tuple[str, int]:
    """Returns (redacted text, number of replacements)."""
    total = 0
    for rule in rules:
        text, n = rule.apply(text)
        total += n
    return text, total


def redact_hits(hits: list[ScoredHit],
                rules: Sequence[RedactionRule] = DEFAULT_RULES) -> list[ScoredHit]:
    """Element-wise redaction of snippet text and every meta value;
    scores and ranks untouched."""
    out = []
    for hit in hits:
        text, _ = redact(hit.text, rules)
        meta = {k: redact(v, rules)[0] for k, v in hit.meta.items()}
        out.append(dc_replace(hit, text=text, meta=meta))
    return out
