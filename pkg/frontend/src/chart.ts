/** Attention chart: the ego's full-lifetime series (blue), a hovered
 * alter's windowed series (pink), the alter's grey pre-influence band,
 * event markers, shaded out-of-window periods and the two-handle time
 * slider riding on the shared axis. */

import {
  ALTER_COLOR,
  EGO_COLOR,
  GREY_BAND,
  OUTSIDE_WINDOW,
  clear,
  svgEl,
} from "./dom.js";
import { LAYOUT, TimeScale, addDays, dayNumber, fmt } from "./scale.js";
import { AlterPayload, EgoResponse, NodeDetail } from "./types.js";

const TOP = 16;
const AXIS_GAP = 34; // room under the plot for the slider strip
const HANDLE_W = 8;
const HANDLE_H = 18;

function seriesPath(
  values: number[],
  startDay: number,
  scale: TimeScale,
  yOf: (v: number) => number,
): string {
  const parts: string[] = [];
  for (let i = 0; i < values.length; i++) {
    const x = fmt(scale.xOfDay(startDay + i));
    const y = fmt(yOf(values[i] as number));
    parts.push(`${i === 0 ? "M" : "L"}${x},${y}`);
  }
  return parts.join("");
}

export function renderAttentionChart(
  svg: SVGSVGElement,
  detail: NodeDetail,
  response: EgoResponse,
  scale: TimeScale,
  hovered: AlterPayload | null,
): void {
  clear(svg);
  svg.setAttribute("viewBox", `0 0 ${LAYOUT.width} ${LAYOUT.chartHeight}`);
  const plotBottom = LAYOUT.chartHeight - AXIS_GAP;
  const plotHeight = plotBottom - TOP;

  let peak = 1e-9;
  for (const v of detail.series.values) peak = Math.max(peak, v);
  if (hovered) for (const v of hovered.attention) peak = Math.max(peak, v);
  const yOf = (v: number) => plotBottom - (v / peak) * plotHeight;

  // periods outside the selected window are shaded down
  const xStart = scale.x(response.window.start);
  const xEnd = scale.x(response.window.end);
  for (const [x0, x1] of [
    [scale.rangeStart, xStart],
    [xEnd, scale.rangeEnd],
  ] as const) {
    if (x1 > x0 + 0.01) {
      svg.appendChild(
        svgEl("rect", {
          class: "outside-window",
          x: fmt(x0),
          y: fmt(TOP),
          width: fmt(x1 - x0),
          height: fmt(plotHeight),
          fill: OUTSIDE_WINDOW,
          "fill-opacity": "0.06",
        }),
      );
    }
  }

  // grey pre-influence band for the hovered alter: creation .. influencing time
  if (hovered) {
    const bandX0 = scale.x(scale.clampIso(hovered.grey_period.start));
    const bandX1 = scale.x(scale.clampIso(hovered.grey_period.end));
    svg.appendChild(
      svgEl("rect", {
        class: "grey-band",
        "data-alter": hovered.id,
        x: fmt(bandX0),
        y: fmt(TOP),
        width: fmt(Math.max(0, bandX1 - bandX0)),
        height: fmt(plotHeight),
        fill: GREY_BAND,
        "fill-opacity": "0.55",
      }),
    );
  }

  svg.appendChild(
    svgEl("path", {
      class: "ego-series",
      d: seriesPath(detail.series.values, dayNumber(detail.series.start), scale, yOf),
      fill: "none",
      stroke: EGO_COLOR,
      "stroke-width": "1.4",
    }),
  );

  if (hovered) {
    svg.appendChild(
      svgEl("path", {
        class: "alter-series",
        "data-alter": hovered.id,
        d: seriesPath(hovered.attention, dayNumber(response.window.start), scale, yOf),
        fill: "none",
        stroke: ALTER_COLOR,
        "stroke-width": "1.4",
      }),
    );
  }

  for (const event of response.events) {
    const marker = svgEl("circle", {
      class: "event-marker",
      "data-date": event.date,
      cx: fmt(scale.x(event.date)),
      cy: fmt(TOP + 6),
      r: "4",
    });
    const title = svgEl("title");
    title.textContent = `${event.label} (${event.date})`;
    marker.appendChild(title);
    svg.appendChild(marker);
  }

  renderTimeSlider(svg, response, scale, plotBottom);
}

function renderTimeSlider(
  svg: SVGSVGElement,
  response: EgoResponse,
  scale: TimeScale,
  plotBottom: number,
): void {
  const axisY = plotBottom + 14;
  const slider = svgEl("g", { class: "time-slider" });
  slider.appendChild(
    svgEl("line", {
      class: "slider-track",
      x1: fmt(scale.rangeStart),
      x2: fmt(scale.rangeEnd),
      y1: fmt(axisY),
      y2: fmt(axisY),
      stroke: "#bbbbbb",
      "stroke-width": "2",
    }),
  );
  const xStart = scale.x(response.window.start);
  const xEnd = scale.x(response.window.end);
  slider.appendChild(
    svgEl("rect", {
      class: "slider-range",
      x: fmt(xStart),
      y: fmt(axisY - 4),
      width: fmt(Math.max(0, xEnd - xStart)),
      height: "8",
    }),
  );
  for (const [which, x, date] of [
    ["start", xStart, response.window.start],
    ["end", xEnd, response.window.end],
  ] as const) {
    slider.appendChild(
      svgEl("rect", {
        class: "slider-handle",
        "data-handle": which,
        "data-date": date,
        x: fmt(x - HANDLE_W / 2),
        y: fmt(axisY - HANDLE_H / 2),
        width: String(HANDLE_W),
        height: String(HANDLE_H),
        rx: "2",
      }),
    );
  }
  for (const [anchor, x, label] of [
    ["start", scale.rangeStart, scale.domainStart],
    ["end", scale.rangeEnd, scale.domainEnd],
  ] as const) {
    const text = svgEl("text", {
      class: "axis-label",
      x: fmt(x),
      y: fmt(axisY + 24),
      "text-anchor": anchor,
    });
    text.textContent = label;
    slider.appendChild(text);
  }
  for (const [x, label] of [
    [xStart, response.window.start],
    [xEnd, response.window.end],
  ] as const) {
    const text = svgEl("text", {
      class: "window-label",
      x: fmt(x),
      y: fmt(axisY - 14),
      "text-anchor": "middle",
    });
    text.textContent = label;
    slider.appendChild(text);
  }
  svg.appendChild(slider);
}

export { addDays };
