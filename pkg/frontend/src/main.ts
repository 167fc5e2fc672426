/** Dashboard wiring: sliders -> debounced service calls -> rendered panels.
 *
 * One request gate per panel guarantees the screen always reflects the most
 * recent slider state; a spinner appears only when a response takes longer
 * than 300 ms.
 */

import { ApiClient, ServiceError } from "./api.js";
import { profitChart, shortageChart } from "./charts.js";
import { debounce, RequestGate } from "./requests.js";
import {
  applyInput,
  configurationOf,
  DEFAULT_INPUTS,
  multipliersOf,
  pinScenario,
  unpinScenario,
  type PinnedScenario,
  type ScenarioInputs,
} from "./state.js";
import type {
  ConfigurationPayload,
  EconomicsResponse,
  EvaluateResponse,
  SweepRowPayload,
} from "./types.js";
import { bestBadge, comparisonCsv, comparisonView, criticalityBars, headlineView, profitAt } from "./view.js";

const api = new ApiClient();
const DEBOUNCE_MS = 150;
const SPINNER_DELAY_MS = 300;

let inputs: ScenarioInputs = { ...DEFAULT_INPUTS };
let pins: PinnedScenario[] = [];
let lastEvaluation: EvaluateResponse | undefined;
let lastPointEconomics: EconomicsResponse | undefined;
let candidates: ConfigurationPayload[] = [
  { suppliers: 1, plants: 1, lines_per_plant: 1 },
  { suppliers: 2, plants: 1, lines_per_plant: 1 },
  { suppliers: 1, plants: 2, lines_per_plant: 1 },
  { suppliers: 2, plants: 2, lines_per_plant: 1 },
];
let sweepKind: "disruption" | "recovery" = "disruption";
let defaultGrids: { disruption: number[]; recovery: number[] } = {
  disruption: [0.1, 0.25, 0.5, 0.75, 1, 1.5, 2, 3, 4, 5],
  recovery: [0.1, 0.25, 0.5, 1, 2, 4, 6, 8, 10],
};

const scenarioGate = new RequestGate<[EvaluateResponse, EconomicsResponse]>();
const chartGate = new RequestGate<[Map<string, SweepRowPayload[]>, EconomicsResponse]>();

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function setText(id: string, text: string): void {
  el(id).textContent = text;
}

let spinnerTimer: ReturnType<typeof setTimeout> | undefined;

function spinnerOn(): void {
  if (spinnerTimer !== undefined) return;
  spinnerTimer = setTimeout(() => el("spinner").classList.add("visible"), SPINNER_DELAY_MS);
}

function spinnerOff(): void {
  if (spinnerTimer !== undefined) clearTimeout(spinnerTimer);
  spinnerTimer = undefined;
  el("spinner").classList.remove("visible");
}

function clearFieldErrors(): void {
  document.querySelectorAll(".field.error").forEach((node) => node.classList.remove("error"));
  el("error-box").textContent = "";
  el("error-box").classList.remove("visible");
}

function showError(error: unknown): void {
  const box = el("error-box");
  const message = error instanceof Error ? error.message : String(error);
  box.textContent = message;
  box.classList.add("visible");
  if (error instanceof ServiceError) {
    // Detail paths look like "$.configuration.suppliers: ...": highlight the slider.
    for (const field of ["suppliers", "plants", "lines_per_plant", "disruption", "recovery"]) {
      if (message.includes(field)) {
        document.getElementById(`wrap-${field}`)?.classList.add("error");
      }
    }
  }
}

function renderScenario(): void {
  if (!lastEvaluation || !lastPointEconomics) return;
  const headline = headlineView(lastEvaluation);
  setText("headline-shortage", `${headline.shortagePct} expected shortage`);
  el("headline-shortage").title = `fine rounding: ${headline.shortagePctFine}`;
  setText("uptime", headline.uptimeYears);
  el("uptime").title = String(lastEvaluation.report.mean_uptime);
  setText("downtime", headline.downtimeYears);
  el("downtime").title = String(lastEvaluation.report.mean_downtime);

  const bars = el("crit-bars");
  bars.innerHTML = "";
  for (const bar of criticalityBars(lastEvaluation)) {
    const row = document.createElement("div");
    row.className = "crit-row";
    row.innerHTML =
      `<span class="crit-name">${bar.name}</span>` +
      `<span class="crit-track"><span class="crit-fill" style="width:${bar.widthPct.toFixed(1)}%"></span></span>` +
      `<span class="crit-value" title="${bar.value}">${bar.value.toPrecision(3)}</span>`;
    bars.appendChild(row);
  }

  const label = lastEvaluation.request.configuration.label;
  const profit = profitAt(lastPointEconomics, label);
  const profitNode = el("profit");
  profitNode.textContent = profit === undefined ? "n/a" : `$${Math.round(profit).toLocaleString("en-US")}/yr`;
  profitNode.title = profit === undefined ? "" : String(profit);
  profitNode.classList.toggle("negative", profit !== undefined && profit < 0);
  setText("badge", bestBadge(lastPointEconomics));
}

function renderPins(): void {
  const table = el<HTMLTableElement>("compare-table");
  const columns = comparisonView(pins);
  if (columns.length === 0) {
    table.innerHTML = "<tr><td class='empty'>pin a scenario to compare</td></tr>";
    return;
  }
  const header =
    "<tr><th></th>" + columns.map((c, i) =>
      `<th>${c.label} <button class="unpin" data-index="${i}" title="remove">x</button></th>`,
    ).join("") + "</tr>";
  const rows = [
    ["shortage", columns.map((c) => c.shortage)],
    ["uptime (y)", columns.map((c) => c.uptime)],
    ["downtime (y)", columns.map((c) => c.downtime)],
    ["profit ($/yr)", columns.map((c) => c.profit)],
    ["delta shortage", columns.map((c) => c.deltaShortage)],
    ["delta profit", columns.map((c) => c.deltaProfit)],
  ] as const;
  table.innerHTML =
    header +
    rows.map(([name, cells]) => `<tr><th>${name}</th>${cells.map((v) => `<td>${v}</td>`).join("")}</tr>`).join("");
  table.querySelectorAll<HTMLButtonElement>("button.unpin").forEach((button) => {
    button.addEventListener("click", () => {
      pins = unpinScenario(pins, Number(button.dataset.index));
      renderPins();
    });
  });
}

async function refreshScenario(): Promise<void> {
  clearFieldErrors();
  spinnerOn();
  try {
    const result = await scenarioGate.dispatch(() =>
      Promise.all([
        api.evaluate(configurationOf(inputs), multipliersOf(inputs)),
        api.economicsAtPrice(candidates, multipliersOf(inputs), inputs.price),
      ]),
    );
    if (result === undefined) return; // superseded by a newer request
    [lastEvaluation, lastPointEconomics] = result;
    renderScenario();
  } catch (error) {
    showError(error);
  } finally {
    spinnerOff();
  }
}

async function refreshCharts(): Promise<void> {
  try {
    const grid = sweepKind === "disruption" ? defaultGrids.disruption : defaultGrids.recovery;
    const result = await chartGate.dispatch(async () => {
      const comparison = [
        { suppliers: 1, plants: 1, lines_per_plant: 1 },
        { suppliers: 1, plants: 1, lines_per_plant: 2 },
        { suppliers: 1, plants: 2, lines_per_plant: 1 },
        { suppliers: 2, plants: 1, lines_per_plant: 1 },
        { suppliers: 2, plants: 2, lines_per_plant: 1 },
      ];
      const [sweep, curve] = await Promise.all([
        api.sweep(comparison, sweepKind, grid),
        api.economicsCurve(candidates, multipliersOf(inputs), 0, 50, 0.25),
      ]);
      const byLabel = new Map<string, SweepRowPayload[]>();
      for (const row of sweep.rows) {
        const label = `${row.z_api}-${row.z_p}-${row.z_l}`;
        if (!byLabel.has(label)) byLabel.set(label, []);
        byLabel.get(label)!.push(row);
      }
      return [byLabel, curve] as [Map<string, SweepRowPayload[]>, EconomicsResponse];
    });
    if (result === undefined) return;
    const [byLabel, curve] = result;
    el("shortage-chart").innerHTML = shortageChart(byLabel, sweepKind);
    el("profit-chart").innerHTML = profitChart(curve, inputs.price);
  } catch (error) {
    showError(error);
  }
}

const debouncedScenario = debounce(() => void refreshScenario(), DEBOUNCE_MS);
const debouncedCharts = debounce(() => void refreshCharts(), DEBOUNCE_MS);

function bindSlider(field: keyof ScenarioInputs, redrawCharts = false): void {
  const slider = el<HTMLInputElement>(`field-${field}`);
  const readout = el(`value-${field}`);
  slider.value = String(inputs[field]);
  readout.textContent = String(inputs[field]);
  slider.addEventListener("input", () => {
    inputs = applyInput(inputs, field, Number(slider.value));
    readout.textContent = String(inputs[field]);
    debouncedScenario();
    if (redrawCharts) debouncedCharts();
  });
}

async function init(): Promise<void> {
  try {
    const defaults = await api.defaults();
    defaultGrids = {
      disruption: defaults.disruption_multipliers,
      recovery: defaults.recovery_multipliers,
    };
    candidates = defaults.economics_configurations.map((c) => ({
      suppliers: c.suppliers,
      plants: c.plants,
      lines_per_plant: c.lines_per_plant,
    }));
    inputs = { ...inputs, price: defaults.economics.unit_price };
    el<HTMLInputElement>("field-price").value = String(inputs.price);
    setText("value-price", String(inputs.price));
  } catch (error) {
    showError(error);
  }

  bindSlider("suppliers");
  bindSlider("plants");
  bindSlider("lines_per_plant");
  bindSlider("disruption", true);
  bindSlider("recovery", true);
  bindSlider("price", true);

  el("pin-button").addEventListener("click", () => {
    if (!lastEvaluation || !lastPointEconomics) return;
    pins = pinScenario(pins, inputs, lastEvaluation, lastPointEconomics);
    renderPins();
  });

  el("download-csv").addEventListener("click", () => {
    const blob = new Blob([comparisonCsv(pins)], { type: "text/csv" });
    const link = document.createElement("a");
    link.href = URL.createObjectURL(blob);
    link.download = "comparison.csv";
    link.click();
    URL.revokeObjectURL(link.href);
  });

  el<HTMLSelectElement>("sweep-kind").addEventListener("change", (event) => {
    sweepKind = (event.target as HTMLSelectElement).value as "disruption" | "recovery";
    debouncedCharts();
  });

  renderPins();
  await refreshScenario();
  await refreshCharts();
}

void init();
