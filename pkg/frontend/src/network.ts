/** Time-aligned ego network: tree-ring nodes on the shared timeline, the
 * ego pinned at the window end, edge strokes sized by normalised flux. */

import { clear, ringColor, svgEl } from "./dom.js";
import { LAYOUT, TimeScale, fmt } from "./scale.js";
import { EgoNodePayload, EgoResponse } from "./types.js";

export interface NetworkCallbacks {
  onHover(alterId: string | null): void;
  onSelect(alterId: string): void;
}

const TOP = 14;
const BOTTOM = 16;

function nodePosition(
  node: EgoNodePayload,
  date: string,
  scale: TimeScale,
): { x: number; y: number; r: number } {
  const innerHeight = LAYOUT.networkHeight - TOP - BOTTOM;
  return {
    x: scale.x(date),
    y: TOP + node.y * innerHeight,
    r: node.radius * LAYOUT.networkHeight,
  };
}

export function renderEgoNetwork(
  svg: SVGSVGElement,
  response: EgoResponse,
  scale: TimeScale,
  hoveredId: string | null,
  callbacks: NetworkCallbacks,
): void {
  clear(svg);
  svg.setAttribute("viewBox", `0 0 ${LAYOUT.width} ${LAYOUT.networkHeight}`);

  const positions = new Map<string, { x: number; y: number; r: number }>();
  const dates = new Map<string, string>();
  dates.set(response.ego.id, response.window.end);
  positions.set(response.ego.id, nodePosition(response.ego, response.window.end, scale));
  for (const alter of response.alters) {
    dates.set(alter.id, alter.influencing_time);
    positions.set(alter.id, nodePosition(alter, alter.influencing_time, scale));
  }

  const edgeLayer = svgEl("g", { class: "edges" });
  for (const edge of response.edges) {
    const strokeWidth = fmt(0.5 + edge.width * 6.5);
    const touchesHover =
      hoveredId !== null && (edge.source === hoveredId || edge.target === hoveredId);
    const cls = `edge${touchesHover ? " highlight" : ""}`;
    if (edge.is_self_loop) {
      const p = positions.get(edge.source);
      if (!p) continue;
      edgeLayer.appendChild(
        svgEl("circle", {
          class: `${cls} self-loop`,
          "data-source": edge.source,
          "data-target": edge.target,
          cx: fmt(p.x),
          cy: fmt(p.y - p.r),
          r: fmt(p.r * 0.75),
          fill: "none",
          "stroke-width": strokeWidth,
        }),
      );
      continue;
    }
    const a = positions.get(edge.source);
    const b = positions.get(edge.target);
    if (!a || !b) continue;
    edgeLayer.appendChild(
      svgEl("line", {
        class: cls,
        "data-source": edge.source,
        "data-target": edge.target,
        x1: fmt(a.x),
        y1: fmt(a.y),
        x2: fmt(b.x),
        y2: fmt(b.y),
        "stroke-width": strokeWidth,
      }),
    );
  }
  svg.appendChild(edgeLayer);

  const nodeLayer = svgEl("g", { class: "nodes" });
  const everyNode: EgoNodePayload[] = [response.ego, ...response.alters];
  for (const node of everyNode) {
    const isEgo = node.id === response.ego.id;
    const p = positions.get(node.id);
    if (!p) continue;
    const group = svgEl("g", {
      class: `node${isEgo ? " ego" : ""}${node.id === hoveredId ? " hovered" : ""}`,
      "data-node-id": node.id,
      "data-date": dates.get(node.id) ?? "",
    });
    // outermost ring first so inner years paint on top
    for (let i = node.rings.length - 1; i >= 0; i--) {
      const ring = node.rings[i];
      if (!ring) continue;
      group.appendChild(
        svgEl("circle", {
          class: "ring",
          "data-year": String(ring.year),
          cx: fmt(p.x),
          cy: fmt(p.y),
          r: fmt(Math.max(0.1, p.r * ring.outer_radius)),
          fill: ringColor(ring.color_index),
        }),
      );
    }
    group.appendChild(
      svgEl("circle", {
        class: "node-outline",
        cx: fmt(p.x),
        cy: fmt(p.y),
        r: fmt(p.r),
        fill: "none",
      }),
    );
    const label = svgEl("text", {
      class: "node-label",
      x: fmt(p.x),
      y: fmt(p.y - p.r - 5),
      "text-anchor": "middle",
    });
    label.textContent = node.name;
    group.appendChild(label);

    group.addEventListener("mouseenter", () => {
      callbacks.onHover(isEgo ? null : node.id);
    });
    group.addEventListener("mouseleave", () => callbacks.onHover(null));
    if (!isEgo) {
      group.addEventListener("click", () => callbacks.onSelect(node.id));
    }
    nodeLayer.appendChild(group);
  }
  svg.appendChild(nodeLayer);

  if (response.alters_truncated) {
    const note = svgEl("text", {
      class: "truncation-note",
      x: fmt(LAYOUT.width - LAYOUT.marginRight),
      y: fmt(LAYOUT.networkHeight - 4),
      "text-anchor": "end",
    });
    note.textContent = "strongest alters shown (truncated)";
    svg.appendChild(note);
  }
}

/** Toggle hover classes without rebuilding the SVG (keeps the element the
 * pointer is over alive, so mouseleave still fires). */
export function patchNetworkHover(svg: SVGSVGElement, hoveredId: string | null): void {
  for (const edge of Array.from(svg.querySelectorAll(".edge"))) {
    const touches =
      hoveredId !== null &&
      (edge.getAttribute("data-source") === hoveredId ||
        edge.getAttribute("data-target") === hoveredId);
    edge.classList.toggle("highlight", touches);
  }
  for (const node of Array.from(svg.querySelectorAll(".node"))) {
    node.classList.toggle(
      "hovered",
      hoveredId !== null && node.getAttribute("data-node-id") === hoveredId,
    );
  }
}
