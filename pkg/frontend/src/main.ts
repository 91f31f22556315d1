/** Browser bootstrap: wires the pure state/render functions to the DOM and
 * fetch(). Everything interesting lives in api.ts / state.ts / render.ts. */

import {
  clampK,
  indicesUrl,
  parseIndices,
  parseSearchResponse,
  searchUrl,
} from "./api.js";
import {
  applyError,
  applyResponse,
  beginSearch,
  initialState,
  selectIndex,
  withIndices,
  type AppState,
} from "./state.js";
import { renderApp, renderIndexOptions } from "./render.js";

const BASE = ""; // same origin as the federation server

let state: AppState = initialState();

const form = document.getElementById("search-form") as HTMLFormElement;
const queryInput = document.getElementById("query") as HTMLInputElement;
const kInput = document.getElementById("k") as HTMLInputElement;
const indexSelect = document.getElementById("index") as HTMLSelectElement;
const output = document.getElementById("output") as HTMLElement;

function paint(): void {
  output.innerHTML = renderApp(state);
  indexSelect.innerHTML = renderIndexOptions(state.indices, state.selected);
}

async function loadIndices(): Promise<void> {
  try {
    const res = await fetch(indicesUrl(BASE));
    if (!res.ok) throw new Error(`GET /indices failed: ${res.status}`);
    state = withIndices(state, parseIndices(await res.json()));
  } catch (err) {
    state = applyError(state, state.seq, String(err));
  }
  paint();
}

async function runSearch(): Promise<void> {
  const begun = beginSearch(state);
  state = begun.state;
  paint();
  const url = searchUrl(
    BASE,
    queryInput.value,
    clampK(kInput.value),
    state.selected,
  );
  try {
    const res = await fetch(url);
    if (!res.ok) {
      const detail = await res.text();
      throw new Error(`search failed (${res.status}): ${detail}`);
    }
    state = applyResponse(state, begun.seq, parseSearchResponse(await res.json()));
  } catch (err) {
    state = applyError(state, begun.seq, String(err));
  }
  paint();
}

form.addEventListener("submit", (ev) => {
  ev.preventDefault();
  void runSearch();
});

indexSelect.addEventListener("change", () => {
  state = selectIndex(state, indexSelect.value === "" ? null : indexSelect.value);
});

kInput.addEventListener("change", () => {
  kInput.value = String(clampK(kInput.value));
});

void loadIndices();
