/** Dependency-free SVG chart generation.
 *
 * Produces SVG markup strings from service data: a shortage-vs-multiplier
 * line chart and a profit-vs-price chart with vertical breakeven/threshold
 * markers.  Only coordinates are computed here; labels show service values.
 */

import type { EconomicsResponse, SweepRowPayload } from "./types.js";

export interface ChartGeometry {
  width: number;
  height: number;
  padLeft: number;
  padRight: number;
  padTop: number;
  padBottom: number;
}

export const DEFAULT_GEOMETRY: ChartGeometry = {
  width: 560,
  height: 260,
  padLeft: 54,
  padRight: 16,
  padTop: 14,
  padBottom: 34,
};

const SERIES_COLORS = ["#4063d8", "#cb3c33", "#389826", "#9558b2", "#aa7d22"];

export interface Scale {
  toX(value: number): number;
  toY(value: number): number;
}

export function linearScale(
  xDomain: [number, number],
  yDomain: [number, number],
  geometry: ChartGeometry = DEFAULT_GEOMETRY,
): Scale {
  const { width, height, padLeft, padRight, padTop, padBottom } = geometry;
  const xSpan = xDomain[1] - xDomain[0] || 1;
  const ySpan = yDomain[1] - yDomain[0] || 1;
  return {
    toX: (v) => padLeft + ((v - xDomain[0]) / xSpan) * (width - padLeft - padRight),
    toY: (v) => height - padBottom - ((v - yDomain[0]) / ySpan) * (height - padTop - padBottom),
  };
}

export function polylinePoints(
  xs: number[],
  ys: number[],
  scale: Scale,
): string {
  return xs.map((x, i) => `${scale.toX(x).toFixed(1)},${scale.toY(ys[i]).toFixed(1)}`).join(" ");
}

function axisLabels(min: number, max: number, count: number): number[] {
  const out: number[] = [];
  for (let i = 0; i < count; i++) out.push(min + ((max - min) * i) / (count - 1));
  return out;
}

function svgOpen(geometry: ChartGeometry, title: string): string {
  return (
    `<svg viewBox="0 0 ${geometry.width} ${geometry.height}" role="img" ` +
    `aria-label="${title}" xmlns="http://www.w3.org/2000/svg">`
  );
}

function frame(geometry: ChartGeometry): string {
  const { width, height, padLeft, padRight, padTop, padBottom } = geometry;
  return (
    `<rect x="${padLeft}" y="${padTop}" width="${width - padLeft - padRight}" ` +
    `height="${height - padTop - padBottom}" fill="none" stroke="#ccc"/>`
  );
}

/** Shortage (%) vs. rate multiplier, one polyline per configuration label. */
export function shortageChart(
  rowsByLabel: Map<string, SweepRowPayload[]>,
  kind: "disruption" | "recovery",
  geometry: ChartGeometry = DEFAULT_GEOMETRY,
): string {
  const all = [...rowsByLabel.values()].flat();
  if (all.length === 0) return `${svgOpen(geometry, "shortage chart")}${frame(geometry)}</svg>`;
  const multiplier = (row: SweepRowPayload) => (kind === "disruption" ? row.dis_mult : row.rec_mult);
  const xMin = Math.min(...all.map(multiplier));
  const xMax = Math.max(...all.map(multiplier));
  const yMax = Math.max(...all.map((row) => row.s * 100));
  const scale = linearScale([xMin, xMax], [0, yMax], geometry);

  const parts = [svgOpen(geometry, `expected shortage vs ${kind} multiplier`), frame(geometry)];
  let series = 0;
  for (const [label, rows] of rowsByLabel) {
    const sorted = [...rows].sort((a, b) => multiplier(a) - multiplier(b));
    const points = polylinePoints(
      sorted.map(multiplier),
      sorted.map((row) => row.s * 100),
      scale,
    );
    const color = SERIES_COLORS[series % SERIES_COLORS.length];
    parts.push(`<polyline points="${points}" fill="none" stroke="${color}" stroke-width="1.6"/>`);
    const last = sorted[sorted.length - 1];
    parts.push(
      `<text x="${scale.toX(multiplier(last)) - 2}" y="${scale.toY(last.s * 100) - 4}" ` +
        `font-size="10" fill="${color}" text-anchor="end">${label}</text>`,
    );
    series += 1;
  }
  for (const x of axisLabels(xMin, xMax, 5)) {
    parts.push(
      `<text x="${scale.toX(x)}" y="${geometry.height - 12}" font-size="10" ` +
        `text-anchor="middle" fill="#555">${x.toFixed(1)}x</text>`,
    );
  }
  for (const y of axisLabels(0, yMax, 4)) {
    parts.push(
      `<text x="${geometry.padLeft - 6}" y="${scale.toY(y) + 3}" font-size="10" ` +
        `text-anchor="end" fill="#555">${y.toFixed(0)}%</text>`,
    );
  }
  parts.push("</svg>");
  return parts.join("");
}

/** Profit vs. price with dashed vertical markers at breakeven/threshold prices. */
export function profitChart(
  economics: EconomicsResponse,
  currentPrice: number | undefined,
  geometry: ChartGeometry = DEFAULT_GEOMETRY,
): string {
  const prices = economics.prices;
  if (prices.length === 0) return `${svgOpen(geometry, "profit chart")}${frame(geometry)}</svg>`;
  const labels = Object.keys(economics.profits);
  const values = labels.flatMap((label) => economics.profits[label]);
  const yMin = Math.min(...values, 0);
  const yMax = Math.max(...values, 0);
  const scale = linearScale([prices[0], prices[prices.length - 1]], [yMin, yMax], geometry);

  const parts = [svgOpen(geometry, "expected profit vs unit price"), frame(geometry)];
  parts.push(
    `<line x1="${geometry.padLeft}" y1="${scale.toY(0)}" x2="${geometry.width - geometry.padRight}" ` +
      `y2="${scale.toY(0)}" stroke="#999" stroke-width="0.8"/>`,
  );
  labels.forEach((label, series) => {
    const color = SERIES_COLORS[series % SERIES_COLORS.length];
    const points = polylinePoints(prices, economics.profits[label], scale);
    parts.push(`<polyline points="${points}" fill="none" stroke="${color}" stroke-width="1.6"/>`);
    parts.push(
      `<text x="${geometry.width - geometry.padRight - 4}" ` +
        `y="${geometry.padTop + 12 + 12 * series}" font-size="10" fill="${color}" ` +
        `text-anchor="end">${label}</text>`,
    );
  });
  for (const [label, price] of Object.entries(economics.breakeven_prices)) {
    if (price < prices[0] || price > prices[prices.length - 1]) continue;
    const x = scale.toX(price);
    parts.push(
      `<line x1="${x}" y1="${geometry.padTop}" x2="${x}" y2="${geometry.height - geometry.padBottom}" ` +
        `stroke="#888" stroke-dasharray="3,3" stroke-width="0.8"/>`,
      `<text x="${x + 2}" y="${geometry.height - geometry.padBottom - 4}" font-size="9" ` +
        `fill="#666">${label} @ ${price.toFixed(2)}</text>`,
    );
  }
  for (const threshold of economics.thresholds) {
    if (threshold.price < prices[0] || threshold.price > prices[prices.length - 1]) continue;
    const x = scale.toX(threshold.price);
    parts.push(
      `<line x1="${x}" y1="${geometry.padTop}" x2="${x}" y2="${geometry.height - geometry.padBottom}" ` +
        `stroke="#cb3c33" stroke-dasharray="5,3" stroke-width="0.8"/>`,
      `<text x="${x + 2}" y="${geometry.padTop + 10}" font-size="9" fill="#cb3c33">` +
        `${threshold.a} = ${threshold.b} @ ${threshold.price.toFixed(2)}</text>`,
    );
  }
  if (currentPrice !== undefined) {
    const x = scale.toX(currentPrice);
    parts.push(
      `<line x1="${x}" y1="${geometry.padTop}" x2="${x}" y2="${geometry.height - geometry.padBottom}" ` +
        `stroke="#389826" stroke-width="1.2"/>`,
    );
  }
  for (const x of axisLabels(prices[0], prices[prices.length - 1], 6)) {
    parts.push(
      `<text x="${scale.toX(x)}" y="${geometry.height - 12}" font-size="10" ` +
        `text-anchor="middle" fill="#555">$${x.toFixed(0)}</text>`,
    );
  }
  parts.push("</svg>");
  return parts.join("");
}
