/** Typed client for the snipsearch federation JSON API. */

export interface Hit {
  id: string;
  score: number;
  text: string;
  meta: Record<string, string>;
  matched_terms: string[];
}

export interface SearchResponse {
  query: string;
  k: number;
  results: Record<string, Hit[]>;
  took_ms: Record<string, number>;
}

export interface IndexInfo {
  name: string;
  snippet_count: number;
  avgdl: number;
}

export const MIN_K = 1;
export const MAX_K = 100; // server cap; mirror it so the UI never over-asks

/** Clamp any user input to a valid k. Non-numeric input falls back. */
export function clampK(raw: string | number, fallback = 10): number {
  const n = typeof raw === "number" ? raw : parseInt(raw, 10);
  if (!Number.isFinite(n)) return fallback;
  return Math.min(MAX_K, Math.max(MIN_K, Math.trunc(n)));
}

export function searchUrl(
  base: string,
  query: string,
  k: number,
  index: string | null,
): string {
  const params = new URLSearchParams({ q: query, k: String(clampK(k)) });
  if (index !== null) params.set("index", index);
  return `${base}/search?${params.toString()}`;
}

export function indicesUrl(base: string): string {
  return `${base}/indices`;
}

/** Validate a /search payload; throws on shape violations so callers surface
 * a single error banner instead of rendering garbage. */
export function parseSearchResponse(body: unknown): SearchResponse {
  if (typeof body !== "object" || body === null) {
    throw new Error("response is not an object");
  }
  const o = body as Record<string, unknown>;
  if (typeof o.query !== "string") throw new Error("missing query");
  if (typeof o.k !== "number") throw new Error("missing k");
  if (typeof o.results !== "object" || o.results === null) {
    throw new Error("missing results");
  }
  for (const [name, hits] of Object.entries(o.results as object)) {
    if (!Array.isArray(hits)) throw new Error(`results[${name}] is not a list`);
    for (const h of hits) {
      if (
        typeof h.id !== "string" ||
        typeof h.score !== "number" ||
        typeof h.text !== "string" ||
        !Array.isArray(h.matched_terms)
      ) {
        throw new Error(`malformed hit in ${name}`);
      }
    }
  }
  return o as unknown as SearchResponse;
}

export function parseIndices(body: unknown): IndexInfo[] {
  if (!Array.isArray(body)) throw new Error("indices payload is not a list");
  return body.map((e) => {
    if (typeof e.name !== "string") throw new Error("index entry missing name");
    return e as IndexInfo;
  });
}
