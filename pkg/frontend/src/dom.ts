/** Tiny SVG/HTML element helpers; all drawing is plain vector primitives. */

export const SVG_NS = "http://www.w3.org/2000/svg";

export function svgEl<K extends keyof SVGElementTagNameMap>(
  name: K,
  attrs: Record<string, string> = {},
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, name);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, value);
  }
  return el;
}

export function clear(el: Element): void {
  while (el.firstChild) el.removeChild(el.firstChild);
}

export function htmlEl<K extends keyof HTMLElementTagNameMap>(
  name: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const el = document.createElement(name);
  if (className) el.className = className;
  if (text !== undefined) el.textContent = text;
  return el;
}

/** Color conventions: ego series blue, hovered alter pink (fixed), and a
 * categorical cycle for tree-ring years keyed by color_index. */
export const EGO_COLOR = "#1f77b4";
export const ALTER_COLOR = "#e377c2";
export const GREY_BAND = "#cccccc";
export const OUTSIDE_WINDOW = "#000000";

export const RING_PALETTE = [
  "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
  "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac",
] as const;

export function ringColor(colorIndex: number): string {
  return RING_PALETTE[colorIndex % RING_PALETTE.length] as string;
}
