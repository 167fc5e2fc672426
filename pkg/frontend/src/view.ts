/** Pure view-model construction from raw service responses.
 *
 * Metric strings are passed through byte-for-byte from the service's
 * presentation fields or its raw numbers; the only client-side arithmetic is
 * the delta column of the comparison table (a difference of two
 * service-provided values, labelled as such) and chart geometry.
 */

import type { PinnedScenario } from "./state.js";
import type { EconomicsResponse, EvaluateResponse } from "./types.js";

export interface HeadlineView {
  shortagePct: string;
  shortagePctFine: string;
  uptimeYears: string;
  downtimeYears: string;
}

export function headlineView(evaluation: EvaluateResponse): HeadlineView {
  const p = evaluation.presentation;
  return {
    shortagePct: p.shortage_pct,
    shortagePctFine: p.shortage_pct_fine,
    uptimeYears: p.mean_uptime_years,
    downtimeYears: p.mean_downtime_years,
  };
}

export interface CriticalityBar {
  name: string;
  /** Raw service value (shown verbatim on hover). */
  value: number;
  /** Bar width in percent of the largest criticality. */
  widthPct: number;
}

export function criticalityBars(evaluation: EvaluateResponse): CriticalityBar[] {
  const r = evaluation.report;
  const entries: [string, number][] = [
    ["supplier", r.crit_api],
    ["plant", r.crit_plant],
    ["line", r.crit_line],
  ];
  const peak = Math.max(...entries.map(([, v]) => v), 1e-12);
  return entries.map(([name, value]) => ({
    name,
    value,
    widthPct: (value / peak) * 100,
  }));
}

/** Most-profitable badge, read from a single-price economics response. */
export function bestBadge(economics: EconomicsResponse): string {
  const best = economics.best[0];
  return best ?? "do not produce";
}

export function profitAt(economics: EconomicsResponse, label: string): number | undefined {
  return economics.profits[label]?.[0];
}

/** Breakeven marker prices keyed by configuration label. */
export function breakevenMarkers(economics: EconomicsResponse): Record<string, number> {
  return economics.breakeven_prices;
}

export interface ComparisonColumn {
  label: string;
  shortage: string;
  uptime: string;
  downtime: string;
  profit: string;
  /** Deltas vs. the first pin; empty strings for the first column. */
  deltaShortage: string;
  deltaProfit: string;
}

function firstProfit(pin: PinnedScenario): number {
  const label = pin.evaluation.request.configuration.label;
  return pin.economics.profits[label]?.[0] ?? Number.NaN;
}

const deltaFormat = new Intl.NumberFormat("en-US", {
  maximumFractionDigits: 1,
  signDisplay: "always",
});

/** Side-by-side table of pinned scenarios with deltas against the first pin. */
export function comparisonView(pins: PinnedScenario[]): ComparisonColumn[] {
  if (pins.length === 0) return [];
  const base = pins[0];
  const baseShortage = base.evaluation.report.s;
  const baseProfit = firstProfit(base);
  return pins.map((pin, index) => {
    const presentation = pin.evaluation.presentation;
    const profit = firstProfit(pin);
    return {
      label: pin.label,
      shortage: presentation.shortage_pct,
      uptime: presentation.mean_uptime_years,
      downtime: presentation.mean_downtime_years,
      profit: deltaFormat.format(profit).replace(/^\+/, ""),
      deltaShortage:
        index === 0
          ? ""
          : deltaFormat.format((pin.evaluation.report.s - baseShortage) * 100) + " pp",
      deltaProfit: index === 0 ? "" : deltaFormat.format(profit - baseProfit),
    };
  });
}

/** CSV of the comparison table (the one permitted export). */
export function comparisonCsv(pins: PinnedScenario[]): string {
  const header = "scenario,shortage,uptime_years,downtime_years,profit,delta_shortage,delta_profit";
  const lines = comparisonView(pins).map((c) =>
    [c.label, c.shortage, c.uptime, c.downtime, c.profit, c.deltaShortage, c.deltaProfit]
      .map((cell) => (cell.includes(",") ? `"${cell}"` : cell))
      .join(","),
  );
  return [header, ...lines].join("\n") + "\n";
}
