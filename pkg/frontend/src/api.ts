/** Thin fetch client for the backend HTTP contract. The UI never computes
 * influence quantities itself; everything rendered comes from these
 * payloads. */

import { EgoResponse, NodeDetail, SearchHit } from "./types.js";
import { ViewState } from "./state.js";

export class ApiError extends Error {
  constructor(readonly status: number, path: string) {
    super(`request failed (${status}): ${path}`);
  }
}

export class ApiClient {
  constructor(private readonly baseUrl: string) {}

  private async get<T>(path: string, signal?: AbortSignal): Promise<T> {
    const res = await fetch(this.baseUrl + path, { signal });
    if (!res.ok) throw new ApiError(res.status, path);
    return (await res.json()) as T;
  }

  fetchNode(id: string, signal?: AbortSignal): Promise<NodeDetail> {
    return this.get(`/api/nodes/${encodeURIComponent(id)}`, signal);
  }

  fetchEgo(state: ViewState, signal?: AbortSignal): Promise<EgoResponse> {
    const params = new URLSearchParams();
    if (state.start !== null) params.set("start", state.start);
    if (state.end !== null) params.set("end", state.end);
    params.set("threshold", String(state.threshold));
    params.set("sort", state.sort);
    return this.get(
      `/api/nodes/${encodeURIComponent(state.egoId)}/ego?${params.toString()}`,
      signal,
    );
  }

  searchNodes(query: string, limit = 8, signal?: AbortSignal): Promise<SearchHit[]> {
    const params = new URLSearchParams({ q: query, limit: String(limit) });
    return this.get(`/api/search?${params.toString()}`, signal);
  }
}
