/** Metadata panel for the ego and the hover info card for alters. Every
 * number shown is a field from the API payloads, formatted only. */

import { clear, htmlEl } from "./dom.js";
import { AlterPayload, EgoResponse, NodeDetail } from "./types.js";

export function formatPercent(fraction: number): string {
  return `${(100 * fraction).toFixed(2)}%`;
}

export function formatCount(value: number): string {
  return value >= 1000 ? Math.round(value).toLocaleString("en-US") : value.toFixed(1);
}

export function renderMetadataPanel(
  container: HTMLElement,
  detail: NodeDetail,
  response: EgoResponse | null,
): void {
  clear(container);
  container.appendChild(htmlEl("h2", "node-name", detail.name));
  const dl = htmlEl("dl", "node-facts");
  const fact = (label: string, value: string) => {
    dl.appendChild(htmlEl("dt", undefined, label));
    dl.appendChild(htmlEl("dd", undefined, value));
  };
  fact("Created", detail.created);
  if (detail.categories.length) fact("Categories", detail.categories.join(", "));
  for (const [key, value] of Object.entries(detail.meta)) {
    if (/^https?:\/\//.test(value)) {
      dl.appendChild(htmlEl("dt", undefined, key));
      const dd = htmlEl("dd");
      const a = htmlEl("a", undefined, value);
      a.setAttribute("href", value);
      a.setAttribute("target", "_blank");
      a.setAttribute("rel", "noopener");
      dd.appendChild(a);
      dl.appendChild(dd);
    } else {
      fact(key, value);
    }
  }
  if (response) {
    fact("Window attention", formatCount(response.ego.window_attention));
    fact("Visible alters", String(response.alters.length));
    if (response.self_loop) {
      fact("Self-loop influence", formatPercent(response.self_loop.normalized));
    }
  }
  container.appendChild(dl);
}

export function renderInfoCard(card: HTMLElement, alter: AlterPayload | null): void {
  clear(card);
  if (alter === null) {
    card.hidden = true;
    return;
  }
  card.hidden = false;
  card.appendChild(htmlEl("h3", "card-name", alter.name));
  const dl = htmlEl("dl");
  const fact = (label: string, value: string) => {
    dl.appendChild(htmlEl("dt", undefined, label));
    dl.appendChild(htmlEl("dd", undefined, value));
  };
  fact("Created", alter.created);
  if (alter.categories.length) fact("Categories", alter.categories.join(", "));
  fact("Influencing since", alter.influencing_time);
  if (alter.incoming) {
    fact("Influence on ego", formatPercent(alter.incoming.normalized));
  }
  if (alter.outgoing) {
    fact("Influence from ego", formatPercent(alter.outgoing.normalized));
  }
  fact("Window attention", formatCount(alter.window_attention));
  card.appendChild(dl);
  card.appendChild(htmlEl("p", "card-hint", "click to open this node"));
}
