// DOM wiring: textarea + language picker + submit, a results pane, and
// a rules panel. Served by the lint service itself, so the API base is
// same-origin.

import { fetchRules, lintSource, type Language } from "./api.js";
import { renderError, renderReport, renderRules } from "./render.js";
import {
  applyFailure,
  applyReport,
  beginSubmit,
  canSubmit,
  initialState,
  setLanguage,
  setSource,
  type UiState,
} from "./state.js";

const BASE_URL = "";

function element<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (!found) {
    throw new Error(`missing element #${id}`);
  }
  return found as T;
}

function start(): void {
  let state: UiState = initialState();

  const sourceBox = element<HTMLTextAreaElement>("source");
  const languagePick = element<HTMLSelectElement>("language");
  const submitButton = element<HTMLButtonElement>("submit");
  const results = element<HTMLDivElement>("results");
  const banner = element<HTMLDivElement>("banner");
  const rulesPanel = element<HTMLDivElement>("rules");
  const rulesButton = element<HTMLButtonElement>("show-rules");

  function sync(): void {
    submitButton.disabled = !canSubmit(state);
    banner.innerHTML = state.error ? renderError(state.error) : "";
    if (state.report) {
      results.innerHTML = renderReport(state.report);
    }
  }

  sourceBox.addEventListener("input", () => {
    state = setSource(state, sourceBox.value);
    sync();
  });

  languagePick.addEventListener("change", () => {
    state = setLanguage(state, languagePick.value as Language);
    sync();
  });

  submitButton.addEventListener("click", async () => {
    const before = state;
    state = beginSubmit(state);
    if (state === before) {
      return;
    }
    sync();
    const token = state.token;
    try {
      const report = await lintSource(BASE_URL, state.language, state.source);
      state = applyReport(state, token, report);
    } catch (err) {
      state = applyFailure(state, token, err instanceof Error ? err.message : String(err));
    }
    sync();
  });

  rulesButton.addEventListener("click", async () => {
    try {
      const entries = await fetchRules(BASE_URL, languagePick.value as Language);
      rulesPanel.innerHTML = renderRules(entries);
      rulesPanel.hidden = false;
    } catch (err) {
      banner.innerHTML = renderError(err instanceof Error ? err.message : String(err));
    }
  });

  sync();
}

document.addEventListener("DOMContentLoaded", start);
