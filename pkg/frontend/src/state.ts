/** UI state machine, kept as pure functions so it is testable without a DOM.
 *
 * Responses are matched to requests by a sequence number: each dispatched
 * search bumps `seq`, and only the response carrying the latest seq may
 * update the view. Anything older is stale and dropped, so a slow early
 * request can never overwrite a fast later one.
 */

import type { IndexInfo, SearchResponse } from "./api.js";

export interface AppState {
  indices: IndexInfo[];
  selected: string | null; // null = fan out to every index
  k: number;
  seq: number; // latest request issued
  shownSeq: number; // request whose outcome is displayed
  loading: boolean;
  response: SearchResponse | null;
  error: string | null;
}

export function initialState(): AppState {
  return {
    indices: [],
    selected: null,
    k: 10,
    seq: 0,
    shownSeq: 0,
    loading: false,
    response: null,
    error: null,
  };
}

export function withIndices(state: AppState, indices: IndexInfo[]): AppState {
  const names = indices.map((i) => i.name);
  const selected =
    state.selected !== null && names.includes(state.selected)
      ? state.selected
      : null;
  return { ...state, indices, selected };
}

export function selectIndex(state: AppState, name: string | null): AppState {
  if (name !== null && !state.indices.some((i) => i.name === name)) {
    return state;
  }
  return { ...state, selected: name };
}

/** Issue a new search: returns the new state and the seq to tag the request. */
export function beginSearch(state: AppState): { state: AppState; seq: number } {
  const seq = state.seq + 1;
  return { state: { ...state, seq, loading: true }, seq };
}

export function applyResponse(
  state: AppState,
  seq: number,
  response: SearchResponse,
): AppState {
  if (seq < state.seq) return state; // stale: a newer request is in flight
  return {
    ...state,
    shownSeq: seq,
    loading: false,
    response,
    error: null,
  };
}

/** A failed request shows a banner but keeps the previous results visible. */
export function applyError(
  state: AppState,
  seq: number,
  message: string,
): AppState {
  if (seq < state.seq) return state;
  return { ...state, shownSeq: seq, loading: false, error: message };
}
