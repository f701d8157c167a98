// UI state machine. One request in flight at a time; a response is
// applied only when its token matches the latest submission, so stale
// replies can never clobber newer results.

import type { Language, Report } from "./api.js";

export interface UiState {
  language: Language;
  source: string;
  inFlight: boolean;
  token: number;
  report: Report | null;
  error: string | null;
}

export function initialState(): UiState {
  return {
    language: "python",
    source: "",
    inFlight: false,
    token: 0,
    report: null,
    error: null,
  };
}

export function setLanguage(state: UiState, language: Language): UiState {
  return { ...state, language };
}

export function setSource(state: UiState, source: string): UiState {
  return { ...state, source };
}

export function canSubmit(state: UiState): boolean {
  return !state.inFlight && state.source.trim().length > 0;
}

export function beginSubmit(state: UiState): UiState {
  if (!canSubmit(state)) {
    return state;
  }
  return { ...state, inFlight: true, token: state.token + 1, error: null };
}

export function applyReport(state: UiState, token: number, report: Report): UiState {
  if (token !== state.token) {
    return state; // stale response
  }
  return { ...state, inFlight: false, report, error: null };
}

export function applyFailure(state: UiState, token: number, message: string): UiState {
  if (token !== state.token) {
    return state;
  }
  // previous results stay on screen; only the banner changes
  return { ...state, inFlight: false, error: message };
}
