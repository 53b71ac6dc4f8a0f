/** Shared test scaffolding: the real page shell plus a mock fetch serving
 * backend-generated fixture payloads. */

import { readFileSync } from "node:fs";
import { vi } from "vitest";

import { EgoResponse, NodeDetail } from "../src/types.js";

function load<T>(name: string): T {
  return JSON.parse(
    readFileSync(new URL(`./fixtures/${name}`, import.meta.url), "utf-8"),
  ) as T;
}

export const NODE_DEEP = load<NodeDetail>("node_deep.json");
export const EGO_LOW = load<EgoResponse>("ego_deep_t001.json"); // threshold 1%
export const EGO_HIGH = load<EgoResponse>("ego_deep_t008.json"); // threshold 8%

/** Injects the body of the real index.html into jsdom. */
export function mountShell(): void {
  const html = readFileSync(new URL("../index.html", import.meta.url), "utf-8");
  const body = /<body>([\s\S]*)<\/body>/.exec(html)![1]!;
  document.body.innerHTML = body.replace(/<script[\s\S]*?<\/script>/g, "");
}

const ok = (payload: unknown) => ({
  ok: true,
  status: 200,
  json: async () => payload,
});

const notFound = { ok: false, status: 404, json: async () => ({ detail: "missing" }) };

/** Mock server: node detail + ego views for the fig-1-shaped fixture. The
 * ego payload switches to the high-threshold variant at >= 8%. */
export function installMockFetch(): ReturnType<typeof vi.fn> {
  const mock = vi.fn(async (input: RequestInfo | URL) => {
    const url = new URL(String(input), "http://mock.test");
    if (url.pathname === "/api/nodes/deep") return ok(NODE_DEEP);
    if (url.pathname === "/api/nodes/deep/ego") {
      const threshold = Number(url.searchParams.get("threshold") ?? "0.01");
      return ok(threshold >= 0.08 ? EGO_HIGH : EGO_LOW);
    }
    if (url.pathname === "/api/search") {
      const q = (url.searchParams.get("q") ?? "").toLowerCase();
      const hits = [NODE_DEEP]
        .filter((n) => n.name.toLowerCase().includes(q))
        .map((n) => ({ id: n.id, name: n.name, total_attention: 1, rank_score: 1 }));
      return ok(hits);
    }
    return notFound;
  });
  vi.stubGlobal("fetch", mock);
  return mock;
}

/** Drains pending microtasks so awaited fetch chains settle. */
export async function flush(turns = 12): Promise<void> {
  for (let i = 0; i < turns; i++) await Promise.resolve();
}
