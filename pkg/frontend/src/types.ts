/** Wire types mirroring docs/ego_response.schema.json on the backend. */

export type SortCriterion = "force" | "total" | "in" | "out" | "category";

export const SORT_CRITERIA: readonly SortCriterion[] = [
  "force",
  "total",
  "in",
  "out",
  "category",
];

export interface WindowSpan {
  start: string; // YYYY-MM-DD, inclusive
  end: string;
}

export interface Ring {
  year: number;
  outer_radius: number; // fraction of the node radius, (0, 1]
  color_index: number;
}

export interface Influence {
  flux: number;
  normalized: number; // fraction of the ego's windowed attention, [0, 1]
}

export interface EgoNodePayload {
  id: string;
  name: string;
  created: string;
  categories: string[];
  meta: Record<string, string>;
  x: number; // timeline fraction of the window; ego is 1
  y: number;
  radius: number; // fraction of canvas height
  rings: Ring[];
  attention: number[]; // aligned to the window, one value per day
  window_attention: number;
}

export interface AlterPayload extends EgoNodePayload {
  influencing_time: string;
  incoming: Influence | null; // alter -> ego
  outgoing: Influence | null; // ego -> alter
  grey_period: WindowSpan; // creation .. influencing time
}

export interface EdgePayload {
  source: string;
  target: string;
  width: number; // [0, 1], normalised by the max flux in the network
  is_self_loop: boolean;
}

export interface EventPayload {
  node_id: string; // "" = dataset-global
  date: string;
  label: string;
  url: string | null;
}

export interface EgoResponse {
  window: WindowSpan;
  threshold: number;
  sort: SortCriterion;
  ego: EgoNodePayload;
  alters: AlterPayload[];
  self_loop: Influence | null;
  edges: EdgePayload[];
  events: EventPayload[];
  alters_truncated: boolean;
}

export interface NodeDetail {
  id: string;
  name: string;
  created: string;
  categories: string[];
  meta: Record<string, string>;
  series: { start: string; values: number[] };
  events: EventPayload[];
}

export interface SearchHit {
  id: string;
  name: string;
  total_attention: number;
  rank_score: number;
}
