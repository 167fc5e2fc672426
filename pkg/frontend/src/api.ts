/** Thin fetch client for the /api/v1 service. */

import type {
  ConfigurationPayload,
  DefaultsResponse,
  EconomicsResponse,
  EvaluateResponse,
  MultipliersPayload,
  SweepResponse,
} from "./types.js";

export class ServiceError extends Error {
  constructor(
    public readonly status: number,
    public readonly detail: string,
  ) {
    super(`service returned ${status}: ${detail}`);
  }
}

async function post<T>(base: string, path: string, body: unknown): Promise<T> {
  const response = await fetch(`${base}${path}`, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(body),
  });
  if (!response.ok) {
    let detail = response.statusText;
    try {
      const payload = (await response.json()) as { detail?: string };
      if (payload.detail) detail = payload.detail;
    } catch {
      // Body was not JSON; keep the status text.
    }
    throw new ServiceError(response.status, detail);
  }
  return (await response.json()) as T;
}

export class ApiClient {
  constructor(private readonly base: string = "") {}

  async defaults(): Promise<DefaultsResponse> {
    const response = await fetch(`${this.base}/api/v1/defaults`);
    if (!response.ok) throw new ServiceError(response.status, response.statusText);
    return (await response.json()) as DefaultsResponse;
  }

  evaluate(
    configuration: ConfigurationPayload,
    multipliers: MultipliersPayload,
  ): Promise<EvaluateResponse> {
    return post<EvaluateResponse>(this.base, "/api/v1/evaluate", {
      configuration,
      multipliers,
    });
  }

  /** Profit and most-profitable configuration at one exact price. */
  economicsAtPrice(
    configurations: ConfigurationPayload[],
    multipliers: MultipliersPayload,
    price: number,
  ): Promise<EconomicsResponse> {
    return post<EconomicsResponse>(this.base, "/api/v1/economics", {
      configurations,
      multipliers,
      price_min: price,
      price_max: price,
      step: 0.25,
    });
  }

  economicsCurve(
    configurations: ConfigurationPayload[],
    multipliers: MultipliersPayload,
    priceMin: number,
    priceMax: number,
    step: number,
  ): Promise<EconomicsResponse> {
    return post<EconomicsResponse>(this.base, "/api/v1/economics", {
      configurations,
      multipliers,
      price_min: priceMin,
      price_max: priceMax,
      step,
    });
  }

  sweep(
    configurations: ConfigurationPayload[],
    kind: "disruption" | "recovery",
    multipliers: number[],
  ): Promise<SweepResponse> {
    const body =
      kind === "disruption"
        ? { configurations, disruption_multipliers: multipliers }
        : { configurations, recovery_multipliers: multipliers };
    return post<SweepResponse>(this.base, "/api/v1/sweep", body);
  }
}
