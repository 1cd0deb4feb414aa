/**
 * Time-series view: annual count lines plus one rug tick per document.
 *
 * Rendered as hand-built SVG.  The geometry helpers are pure so the
 * mapping from data to coordinates is testable without a layout engine.
 */

import { palette, readStateColor } from "./palette.js";
import type { RugPoint, TimeSeriesData } from "./types.js";

export interface ChartGeometry {
  width: number;
  height: number;
  padLeft: number;
  padRight: number;
  padTop: number;
  rugHeight: number;
  axisGap: number;
}

export const DEFAULT_GEOMETRY: ChartGeometry = {
  width: 640,
  height: 180,
  padLeft: 36,
  padRight: 12,
  padTop: 10,
  rugHeight: 14,
  axisGap: 4,
};

export function xForYear(year: number, years: number[], geom: ChartGeometry): number {
  const first = years[0] ?? 0;
  const last = years[years.length - 1] ?? 0;
  const usable = geom.width - geom.padLeft - geom.padRight;
  if (last === first) return geom.padLeft + usable / 2;
  return geom.padLeft + ((year - first) / (last - first)) * usable;
}

export function yForCount(count: number, maxCount: number, geom: ChartGeometry): number {
  const floor = geom.height - geom.rugHeight - geom.axisGap;
  const usable = floor - geom.padTop;
  if (maxCount <= 0) return floor;
  return floor - (count / maxCount) * usable;
}

export function polylinePoints(
  years: number[],
  counts: number[],
  maxCount: number,
  geom: ChartGeometry,
): string {
  return years
    .map((year, i) => `${xForYear(year, years, geom)},${yForCount(counts[i] ?? 0, maxCount, geom)}`)
    .join(" ");
}

export interface TimeSeriesHandlers {
  onRugClick?: (point: RugPoint) => void;
  onYearHover?: (year: number, count: number) => void;
}

const SVG_NS = "http://www.w3.org/2000/svg";

function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string>,
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, value);
  }
  return el;
}

function parseYear(iso: string): number {
  return Number(iso.slice(0, 4));
}

export function renderTimeSeries(
  container: HTMLElement,
  data: TimeSeriesData,
  geom: ChartGeometry = DEFAULT_GEOMETRY,
  handlers: TimeSeriesHandlers = {},
): void {
  container.textContent = "";
  const svg = svgEl("svg", {
    viewBox: `0 0 ${geom.width} ${geom.height}`,
    width: String(geom.width),
    height: String(geom.height),
    class: "timeseries-svg",
  });

  if (data.years.length === 0) {
    container.appendChild(svg);
    return;
  }

  const maxCount = Math.max(1, ...data.query_counts);
  const baseline = geom.height - geom.rugHeight - geom.axisGap;

  svg.appendChild(
    svgEl("line", {
      x1: String(geom.padLeft),
      y1: String(baseline),
      x2: String(geom.width - geom.padRight),
      y2: String(baseline),
      stroke: palette.axis,
      "stroke-width": "1",
      class: "axis",
    }),
  );

  const queryLine = svgEl("polyline", {
    points: polylinePoints(data.years, data.query_counts, maxCount, geom),
    fill: "none",
    stroke: data.neutral ? palette.neutral : palette.query,
    "stroke-width": "2",
    class: data.neutral ? "series-line neutral" : "series-line query",
  });
  svg.appendChild(queryLine);

  if (data.subquery_counts !== null) {
    svg.appendChild(
      svgEl("polyline", {
        points: polylinePoints(data.years, data.subquery_counts, maxCount, geom),
        fill: "none",
        stroke: palette.subquery,
        "stroke-width": "2",
        class: "series-line subquery",
      }),
    );
  }

  // invisible hover bands, one per year, carrying the count tooltip
  for (let i = 0; i < data.years.length; i++) {
    const year = data.years[i]!;
    const count = data.query_counts[i] ?? 0;
    const x = xForYear(year, data.years, geom);
    const band = svgEl("rect", {
      x: String(x - 8),
      y: String(geom.padTop),
      width: "16",
      height: String(baseline - geom.padTop),
      fill: "transparent",
      class: "year-band",
      "data-year": String(year),
    });
    const title = svgEl("title", {});
    title.textContent = `${year}: ${count} documents`;
    band.appendChild(title);
    band.addEventListener("mouseenter", () => handlers.onYearHover?.(year, count));
    svg.appendChild(band);
  }

  for (const point of data.rug_points) {
    const x = xForYear(parseYear(point.date), data.years, geom);
    const tick = svgEl("line", {
      x1: String(x),
      y1: String(baseline + geom.axisGap),
      x2: String(x),
      y2: String(baseline + geom.axisGap + geom.rugHeight - 2),
      stroke: readStateColor(point.read_state),
      "stroke-width": "1.5",
      class: `rug-point ${point.read_state}`,
      "data-doc-id": point.doc_id,
    });
    const title = svgEl("title", {});
    title.textContent = point.headline;
    tick.appendChild(title);
    tick.addEventListener("click", () => handlers.onRugClick?.(point));
    svg.appendChild(tick);
  }

  const firstYear = data.years[0]!;
  const lastYear = data.years[data.years.length - 1]!;
  for (const year of [firstYear, lastYear]) {
    const label = svgEl("text", {
      x: String(xForYear(year, data.years, geom)),
      y: String(geom.height - 1),
      "text-anchor": "middle",
      "font-size": "10",
      fill: palette.axis,
      class: "year-label",
    });
    label.textContent = String(year);
    svg.appendChild(label);
  }

  container.appendChild(svg);
}
