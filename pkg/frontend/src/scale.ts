/** The one time scale both views share: any date maps to the same pixel
 * in the attention chart and the ego network. */

const MS_PER_DAY = 86_400_000;

export function dayNumber(iso: string): number {
  const parts = iso.split("-");
  return Date.UTC(Number(parts[0]), Number(parts[1]) - 1, Number(parts[2])) / MS_PER_DAY;
}

export function isoFromDayNumber(dayNum: number): string {
  return new Date(dayNum * MS_PER_DAY).toISOString().slice(0, 10);
}

export function addDays(iso: string, days: number): string {
  return isoFromDayNumber(dayNumber(iso) + days);
}

/** Fixed pixel formatting keeps rendered coordinates comparable as strings. */
export function fmt(v: number): string {
  return v.toFixed(2);
}

export class TimeScale {
  private readonly day0: number;
  private readonly day1: number;

  constructor(
    readonly domainStart: string,
    readonly domainEnd: string,
    readonly rangeStart: number,
    readonly rangeEnd: number,
  ) {
    this.day0 = dayNumber(domainStart);
    this.day1 = dayNumber(domainEnd);
  }

  xOfDay(dayNum: number): number {
    if (this.day1 === this.day0) return this.rangeEnd;
    const t = (dayNum - this.day0) / (this.day1 - this.day0);
    return this.rangeStart + t * (this.rangeEnd - this.rangeStart);
  }

  x(iso: string): number {
    return this.xOfDay(dayNumber(iso));
  }

  /** Nearest domain day for a pixel, clamped to the domain. */
  invert(px: number): string {
    if (this.day1 === this.day0) return this.domainStart;
    const t = (px - this.rangeStart) / (this.rangeEnd - this.rangeStart);
    const dayNum = Math.round(this.day0 + t * (this.day1 - this.day0));
    return isoFromDayNumber(Math.min(this.day1, Math.max(this.day0, dayNum)));
  }

  clampIso(iso: string): string {
    const d = dayNumber(iso);
    if (d < this.day0) return this.domainStart;
    if (d > this.day1) return this.domainEnd;
    return iso;
  }
}

/** Shared logical canvas: both SVGs use this width and these horizontal
 * margins, so one TimeScale instance serves chart and network alike. */
export const LAYOUT = {
  width: 960,
  chartHeight: 280,
  networkHeight: 360,
  marginLeft: 70,
  marginRight: 36,
} as const;

export function sharedScale(domainStart: string, domainEnd: string): TimeScale {
  return new TimeScale(
    domainStart,
    domainEnd,
    LAYOUT.marginLeft,
    LAYOUT.width - LAYOUT.marginRight,
  );
}
