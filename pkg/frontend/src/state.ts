/** View state and its lossless URL (hash route) form.
 *
 * Route scheme: #/node/{id}?start=YYYY-MM-DD&end=YYYY-MM-DD&threshold=T&sort=S
 * Hover is transient and deliberately not part of the URL.
 */

import { SORT_CRITERIA, SortCriterion } from "./types.js";

export const DEFAULT_THRESHOLD = 0.01;
export const DEFAULT_SORT: SortCriterion = "force";

export interface ViewState {
  egoId: string;
  start: string | null; // null = server default (ego lifetime)
  end: string | null;
  threshold: number;
  sort: SortCriterion;
}

const ROUTE = /^#\/node\/([^?]+)(?:\?(.*))?$/;
const DATE = /^\d{4}-\d{2}-\d{2}$/;

export function defaultState(egoId: string): ViewState {
  return { egoId, start: null, end: null, threshold: DEFAULT_THRESHOLD, sort: DEFAULT_SORT };
}

export function formatRoute(state: ViewState): string {
  const params = new URLSearchParams();
  if (state.start !== null) params.set("start", state.start);
  if (state.end !== null) params.set("end", state.end);
  params.set("threshold", String(state.threshold));
  params.set("sort", state.sort);
  return `#/node/${encodeURIComponent(state.egoId)}?${params.toString()}`;
}

export function parseRoute(hash: string): ViewState | null {
  const match = ROUTE.exec(hash);
  if (!match || !match[1]) return null;
  const params = new URLSearchParams(match[2] ?? "");

  const rawThreshold = params.get("threshold");
  const threshold = rawThreshold === null ? DEFAULT_THRESHOLD : Number(rawThreshold);
  if (!Number.isFinite(threshold) || threshold < 0 || threshold > 1) return null;

  const sort = (params.get("sort") ?? DEFAULT_SORT) as SortCriterion;
  if (!SORT_CRITERIA.includes(sort)) return null;

  const start = params.get("start");
  const end = params.get("end");
  if (start !== null && !DATE.test(start)) return null;
  if (end !== null && !DATE.test(end)) return null;

  return {
    egoId: decodeURIComponent(match[1]),
    start,
    end,
    threshold,
    sort,
  };
}
