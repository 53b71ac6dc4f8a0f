/** Application wiring: route <-> state, debounced refetching with
 * newest-wins cancellation, hover coordination between the two views. */

import { ApiClient } from "./api.js";
import { renderAttentionChart } from "./chart.js";
import { clear, htmlEl } from "./dom.js";
import { formatPercent, renderInfoCard, renderMetadataPanel } from "./metadata.js";
import { patchNetworkHover, renderEgoNetwork } from "./network.js";
import { LAYOUT, addDays, sharedScale } from "./scale.js";
import {
  ViewState,
  defaultState,
  formatRoute,
  parseRoute,
} from "./state.js";
import { EgoResponse, NodeDetail, SortCriterion } from "./types.js";

export interface AppOptions {
  debounceMs?: number; // slider/threshold changes are batched at this rate
}

const DEFAULT_DEBOUNCE_MS = 150;

export class App {
  private state: ViewState | null = null;
  private detail: NodeDetail | null = null;
  private response: EgoResponse | null = null;
  private hoveredId: string | null = null;

  private egoAbort: AbortController | null = null;
  private egoTimer: number | null = null;
  private searchTimer: number | null = null;
  private dragging: "start" | "end" | null = null;

  private readonly debounceMs: number;
  private readonly chartSvg: SVGSVGElement;
  private readonly networkSvg: SVGSVGElement;
  private readonly metaPanel: HTMLElement;
  private readonly infoCard: HTMLElement;
  private readonly thresholdSlider: HTMLInputElement;
  private readonly thresholdValue: HTMLElement;
  private readonly sortSelect: HTMLSelectElement;
  private readonly searchBox: HTMLInputElement;
  private readonly searchResults: HTMLElement;

  constructor(
    private readonly api: ApiClient,
    options: AppOptions = {},
  ) {
    this.debounceMs = options.debounceMs ?? DEFAULT_DEBOUNCE_MS;
    const byId = <T extends Element>(id: string): T => {
      const el = document.getElementById(id);
      if (!el) throw new Error(`missing element #${id}`);
      return el as unknown as T;
    };
    this.chartSvg = byId<SVGSVGElement>("attention-chart");
    this.networkSvg = byId<SVGSVGElement>("ego-network");
    this.metaPanel = byId<HTMLElement>("node-meta");
    this.infoCard = byId<HTMLElement>("info-card");
    this.thresholdSlider = byId<HTMLInputElement>("threshold-slider");
    this.thresholdValue = byId<HTMLElement>("threshold-value");
    this.sortSelect = byId<HTMLSelectElement>("sort-select");
    this.searchBox = byId<HTMLInputElement>("search-box");
    this.searchResults = byId<HTMLElement>("search-results");
  }

  start(): Promise<void> {
    window.addEventListener("hashchange", () => void this.onRoute());
    this.thresholdSlider.addEventListener("input", () => {
      const threshold = Number(this.thresholdSlider.value);
      this.thresholdValue.textContent = formatPercent(threshold);
      this.updateState({ threshold });
    });
    this.sortSelect.addEventListener("change", () => {
      this.updateState({ sort: this.sortSelect.value as SortCriterion });
    });
    this.searchBox.addEventListener("input", () => {
      if (this.searchTimer !== null) window.clearTimeout(this.searchTimer);
      this.searchTimer = window.setTimeout(() => void this.runSearch(), 200);
    });
    this.wireSliderDrag();
    return this.onRoute();
  }

  // -- routing --------------------------------------------------------------

  async onRoute(): Promise<void> {
    const parsed = parseRoute(window.location.hash);
    if (!parsed) {
      this.renderLanding();
      return;
    }
    const egoChanged = this.detail === null || this.state?.egoId !== parsed.egoId;
    this.state = parsed;
    this.syncControls();
    if (egoChanged) {
      this.hoveredId = null;
      try {
        this.detail = await this.api.fetchNode(parsed.egoId);
      } catch (err) {
        this.toast(`could not load node: ${String(err)}`);
        return;
      }
    }
    await this.fetchEgoNow();
  }

  private navigateTo(egoId: string): void {
    const base = this.state ?? defaultState(egoId);
    window.location.hash = formatRoute({ ...base, egoId });
    // jsdom and some browsers fire hashchange asynchronously; route now so
    // the click feels immediate and double routing stays idempotent.
    void this.onRoute();
  }

  private updateState(patch: Partial<ViewState>): void {
    if (!this.state) return;
    this.state = { ...this.state, ...patch };
    window.history.replaceState(null, "", formatRoute(this.state));
    this.scheduleEgoFetch();
  }

  // -- data flow --------------------------------------------------------------

  private scheduleEgoFetch(): void {
    if (this.egoTimer !== null) window.clearTimeout(this.egoTimer);
    this.egoTimer = window.setTimeout(() => {
      this.egoTimer = null;
      void this.fetchEgoNow();
    }, this.debounceMs);
  }

  private async fetchEgoNow(): Promise<void> {
    if (!this.state) return;
    this.egoAbort?.abort();
    const controller = new AbortController();
    this.egoAbort = controller;
    try {
      const response = await this.api.fetchEgo(this.state, controller.signal);
      if (this.egoAbort !== controller) return; // a newer request took over
      this.response = response;
      this.render();
    } catch (err) {
      if ((err as Error)?.name === "AbortError") return;
      this.toast(`ego view failed: ${String(err)}`); // stale view retained
    }
  }

  private async runSearch(): Promise<void> {
    const query = this.searchBox.value.trim();
    clear(this.searchResults);
    if (!query) {
      this.searchResults.hidden = true;
      return;
    }
    try {
      const hits = await this.api.searchNodes(query);
      this.searchResults.hidden = false;
      if (!hits.length) {
        this.searchResults.appendChild(htmlEl("p", "hint", "no matches"));
        return;
      }
      for (const hit of hits) {
        const button = htmlEl("button", "search-hit", hit.name);
        button.setAttribute("data-node-id", hit.id);
        button.addEventListener("click", () => {
          this.searchBox.value = "";
          this.searchResults.hidden = true;
          window.location.hash = formatRoute(defaultState(hit.id));
          void this.onRoute();
        });
        this.searchResults.appendChild(button);
      }
    } catch (err) {
      this.toast(`search failed: ${String(err)}`);
    }
  }

  // -- rendering --------------------------------------------------------------

  private render(): void {
    if (!this.state || !this.detail || !this.response) return;
    const domainEnd = addDays(
      this.detail.series.start,
      this.detail.series.values.length - 1,
    );
    // the single scale shared by the chart and the network
    const scale = sharedScale(this.detail.series.start, domainEnd);
    const hovered =
      this.response.alters.find((a) => a.id === this.hoveredId) ?? null;
    renderAttentionChart(this.chartSvg, this.detail, this.response, scale, hovered);
    renderEgoNetwork(this.networkSvg, this.response, scale, this.hoveredId, {
      onHover: (id) => this.setHover(id),
      onSelect: (id) => this.navigateTo(id),
    });
    renderMetadataPanel(this.metaPanel, this.detail, this.response);
    renderInfoCard(this.infoCard, hovered);
  }

  private setHover(alterId: string | null): void {
    if (alterId === this.hoveredId) return;
    this.hoveredId = alterId;
    if (!this.state || !this.detail || !this.response) return;
    const domainEnd = addDays(
      this.detail.series.start,
      this.detail.series.values.length - 1,
    );
    const scale = sharedScale(this.detail.series.start, domainEnd);
    const hovered =
      this.response.alters.find((a) => a.id === this.hoveredId) ?? null;
    renderAttentionChart(this.chartSvg, this.detail, this.response, scale, hovered);
    renderInfoCard(this.infoCard, hovered);
    patchNetworkHover(this.networkSvg, alterId);
  }

  private renderLanding(): void {
    clear(this.metaPanel);
    this.metaPanel.appendChild(
      htmlEl("p", "hint", "Search for a node by name to open its ego view."),
    );
    clear(this.chartSvg);
    clear(this.networkSvg);
    renderInfoCard(this.infoCard, null);
  }

  private syncControls(): void {
    if (!this.state) return;
    this.thresholdSlider.value = String(this.state.threshold);
    this.thresholdValue.textContent = formatPercent(this.state.threshold);
    this.sortSelect.value = this.state.sort;
  }

  // -- time slider --------------------------------------------------------------

  private wireSliderDrag(): void {
    this.chartSvg.addEventListener("pointerdown", (event) => {
      const handle = (event.target as Element | null)?.closest?.("[data-handle]");
      if (!handle) return;
      this.dragging = handle.getAttribute("data-handle") as "start" | "end";
      event.preventDefault();
    });
    window.addEventListener("pointermove", (event) => {
      if (!this.dragging || !this.state || !this.detail || !this.response) return;
      const rect = this.chartSvg.getBoundingClientRect();
      if (rect.width <= 0) return;
      const logicalX = ((event.clientX - rect.left) * LAYOUT.width) / rect.width;
      const domainEnd = addDays(
        this.detail.series.start,
        this.detail.series.values.length - 1,
      );
      const scale = sharedScale(this.detail.series.start, domainEnd);
      const iso = scale.invert(logicalX);
      const current = this.response.window;
      if (this.dragging === "start") {
        this.updateState({ start: iso <= current.end ? iso : current.end });
      } else {
        this.updateState({ end: iso >= current.start ? iso : current.start });
      }
    });
    window.addEventListener("pointerup", () => {
      this.dragging = null;
    });
  }

  private toast(message: string): void {
    const el = htmlEl("div", "toast", message);
    document.body.appendChild(el);
    window.setTimeout(() => el.remove(), 4000);
  }
}
