/** View-model construction from real (frozen) service responses.
 *
 * The fixtures under test/fixtures/ are verbatim service payloads, so these
 * tests pin the byte-for-byte passthrough contract: what the service said is
 * exactly what the view model exposes.
 */

import { readFileSync } from "node:fs";
import { join } from "node:path";
import { describe, expect, it } from "vitest";

import { pinScenario, type PinnedScenario } from "../src/state.js";
import type { EconomicsResponse, EvaluateResponse } from "../src/types.js";
import {
  bestBadge,
  breakevenMarkers,
  comparisonCsv,
  comparisonView,
  criticalityBars,
  headlineView,
  profitAt,
} from "../src/view.js";

function fixture<T>(name: string): T {
  const path = join(__dirname, "fixtures", `${name}.json`);
  return JSON.parse(readFileSync(path, "utf8")) as T;
}

const evaluateLean = fixture<EvaluateResponse>("evaluate_lean");
const evaluateBackupLine = fixture<EvaluateResponse>("evaluate_backup_line");
const econAt555 = fixture<EconomicsResponse>("econ_at_5_55");
const econAt200 = fixture<EconomicsResponse>("econ_at_2_00");
const econBelowThreshold = fixture<EconomicsResponse>("econ_at_9_05");
const econAboveThreshold = fixture<EconomicsResponse>("econ_at_9_07");
const curve = fixture<EconomicsResponse>("econ_curve");

describe("headlineView", () => {
  it("shows 10% for the lean scenario at defaults, byte-for-byte", () => {
    const view = headlineView(evaluateLean);
    expect(view.shortagePct).toBe("10%");
    expect(view.shortagePct).toBe(evaluateLean.presentation.shortage_pct);
    expect(view.shortagePctFine).toBe(evaluateLean.presentation.shortage_pct_fine);
    expect(view.shortagePctFine).toBe("9.9%");
    expect(view.uptimeYears).toBe("4.7");
    expect(view.downtimeYears).toBe("0.5");
  });

  it("passes the backup-line scenario through unchanged", () => {
    const view = headlineView(evaluateBackupLine);
    expect(view.shortagePct).toBe(evaluateBackupLine.presentation.shortage_pct);
    expect(view.uptimeYears).toBe("10.5");
    expect(view.downtimeYears).toBe("1.0");
  });
});

describe("criticalityBars", () => {
  it("exposes the raw service values and scales widths to the peak", () => {
    const bars = criticalityBars(evaluateLean);
    expect(bars.map((b) => b.name)).toEqual(["supplier", "plant", "line"]);
    expect(bars[0].value).toBe(evaluateLean.report.crit_api);
    expect(bars[1].value).toBe(evaluateLean.report.crit_plant);
    expect(bars[2].value).toBe(evaluateLean.report.crit_line);
    expect(Math.max(...bars.map((b) => b.widthPct))).toBeCloseTo(100, 9);
  });
});

describe("bestBadge", () => {
  it("flips across the service-computed backup-supplier threshold (9.06)", () => {
    expect(bestBadge(econBelowThreshold)).toBe("1-1-1");
    expect(bestBadge(econAboveThreshold)).toBe("2-1-1");
  });

  it("reads 'do not produce' when nothing is profitable", () => {
    expect(econAt200.best[0]).toBeNull();
    expect(bestBadge(econAt200)).toBe("do not produce");
  });

  it("picks the lean configuration at the default price", () => {
    expect(bestBadge(econAt555)).toBe("1-1-1");
  });
});

describe("profit and breakeven passthrough", () => {
  it("returns the service profit value untouched", () => {
    expect(profitAt(econAt555, "1-1-1")).toBe(econAt555.profits["1-1-1"][0]);
    expect(profitAt(econAt555, "9-9-9")).toBeUndefined();
  });

  it("exposes the service breakeven markers", () => {
    const markers = breakevenMarkers(curve);
    expect(markers).toBe(curve.breakeven_prices);
    expect(markers["1-1-1"]).toBeCloseTo(4.36, 2);
    expect(markers["2-2-1"]).toBeCloseTo(5.71, 2);
  });

  it("service thresholds include the published switch prices", () => {
    const byPair = new Map(curve.thresholds.map((t) => [`${t.a}|${t.b}`, t.price]));
    expect(byPair.get("1-1-1|2-1-1")).toBeCloseTo(9.06, 2);
    expect(byPair.get("2-1-1|2-2-1")).toBeCloseTo(34.76, 2);
  });
});

function pinOf(evaluation: EvaluateResponse, economics: EconomicsResponse): PinnedScenario[] {
  const config = evaluation.request.configuration;
  return pinScenario(
    [],
    {
      suppliers: config.suppliers,
      plants: config.plants,
      lines_per_plant: config.lines_per_plant,
      disruption: evaluation.request.multipliers.disruption,
      recovery: evaluation.request.multipliers.recovery,
      price: 5.55,
    },
    evaluation,
    economics,
  );
}

describe("comparisonView", () => {
  it("is empty with no pins", () => {
    expect(comparisonView([])).toEqual([]);
  });

  it("single pin shows service strings with empty deltas", () => {
    const pins = pinOf(evaluateLean, econAt555);
    const [column] = comparisonView(pins);
    expect(column.shortage).toBe("10%");
    expect(column.uptime).toBe("4.7");
    expect(column.downtime).toBe("0.5");
    expect(column.deltaShortage).toBe("");
    expect(column.deltaProfit).toBe("");
  });

  it("two pins show the backup-line downtime contrast (0.5 vs 1.0)", () => {
    let pins = pinOf(evaluateLean, econAt555);
    pins = [...pins, ...pinOf(evaluateBackupLine, econAt555)];
    const columns = comparisonView(pins);
    expect(columns[0].downtime).toBe("0.5");
    expect(columns[1].downtime).toBe("1.0");
    expect(columns[1].deltaShortage).not.toBe("");
  });

  it("CSV has one line per pin plus a header", () => {
    const pins = pinOf(evaluateLean, econAt555);
    const csv = comparisonCsv(pins);
    const lines = csv.trimEnd().split("\n");
    expect(lines).toHaveLength(2);
    expect(lines[0]).toContain("scenario,shortage");
    expect(lines[1]).toContain("10%");
  });
});
