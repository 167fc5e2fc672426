/** Scenario panel state: slider values with enforced bounds, plus pinned scenarios.
 *
 * The state holds only inputs and raw service responses.  Every number the
 * view shows comes from a stored response, so pinning or re-rendering never
 * recomputes anything.
 */

import type {
  ConfigurationPayload,
  EconomicsResponse,
  EvaluateResponse,
  MultipliersPayload,
} from "./types.js";

export interface SliderBounds {
  min: number;
  max: number;
  step: number;
}

export const BOUNDS = {
  count: { min: 1, max: 5, step: 1 } satisfies SliderBounds,
  disruption: { min: 0.1, max: 5, step: 0.1 } satisfies SliderBounds,
  recovery: { min: 0.1, max: 10, step: 0.1 } satisfies SliderBounds,
  price: { min: 0, max: 50, step: 0.25 } satisfies SliderBounds,
};

export interface ScenarioInputs {
  suppliers: number;
  plants: number;
  lines_per_plant: number;
  disruption: number;
  recovery: number;
  price: number;
}

export const DEFAULT_INPUTS: ScenarioInputs = {
  suppliers: 1,
  plants: 1,
  lines_per_plant: 1,
  disruption: 1,
  recovery: 1,
  price: 5.55,
};

export function clamp(value: number, bounds: SliderBounds): number {
  if (Number.isNaN(value)) return bounds.min;
  const snapped = Math.round((value - bounds.min) / bounds.step) * bounds.step + bounds.min;
  // Snap first, then clamp, so out-of-range values land on a boundary.
  const clamped = Math.min(bounds.max, Math.max(bounds.min, snapped));
  return Number(clamped.toFixed(4));
}

export function applyInput(
  inputs: ScenarioInputs,
  field: keyof ScenarioInputs,
  value: number,
): ScenarioInputs {
  const bounds =
    field === "disruption"
      ? BOUNDS.disruption
      : field === "recovery"
        ? BOUNDS.recovery
        : field === "price"
          ? BOUNDS.price
          : BOUNDS.count;
  return { ...inputs, [field]: clamp(value, bounds) };
}

export function configurationOf(inputs: ScenarioInputs): ConfigurationPayload {
  return {
    suppliers: inputs.suppliers,
    plants: inputs.plants,
    lines_per_plant: inputs.lines_per_plant,
  };
}

export function multipliersOf(inputs: ScenarioInputs): MultipliersPayload {
  return { disruption: inputs.disruption, recovery: inputs.recovery };
}

export function scenarioLabel(inputs: ScenarioInputs): string {
  const config = `${inputs.suppliers}-${inputs.plants}-${inputs.lines_per_plant}`;
  const multipliers =
    inputs.disruption === 1 && inputs.recovery === 1
      ? ""
      : ` @ dis ${inputs.disruption}x, rec ${inputs.recovery}x`;
  return config + multipliers;
}

/** A snapshot of the inputs together with the responses they produced. */
export interface PinnedScenario {
  label: string;
  inputs: ScenarioInputs;
  evaluation: EvaluateResponse;
  economics: EconomicsResponse;
}

export function pinScenario(
  pins: PinnedScenario[],
  inputs: ScenarioInputs,
  evaluation: EvaluateResponse,
  economics: EconomicsResponse,
): PinnedScenario[] {
  return [...pins, { label: scenarioLabel(inputs), inputs: { ...inputs }, evaluation, economics }];
}

export function unpinScenario(pins: PinnedScenario[], index: number): PinnedScenario[] {
  return pins.filter((_, i) => i !== index);
}
