/** Payload types for the /api/v1 service. Field names mirror the wire format. */

export interface ConfigurationPayload {
  suppliers: number;
  plants: number;
  lines_per_plant: number;
}

export interface ConfigurationInfo extends ConfigurationPayload {
  label: string;
}

export interface ComponentRatesPayload {
  mean_time_to_fail: number;
  mean_time_to_recover: number;
}

export interface RatesPayload {
  supplier: ComponentRatesPayload;
  plant: ComponentRatesPayload;
  line: ComponentRatesPayload;
}

export interface MultipliersPayload {
  disruption: number;
  recovery: number;
}

export interface ReportPayload {
  r: number;
  s: number;
  r_api: number;
  r_pl: number;
  crit_api: number;
  crit_plant: number;
  crit_line: number;
  mean_uptime: number;
  mean_downtime: number;
}

/** Display strings rounded by the service; shown verbatim, never recomputed. */
export interface PresentationPayload {
  shortage_pct: string;
  shortage_pct_fine: string;
  mean_uptime_years: string;
  mean_downtime_years: string;
}

export interface EvaluateResponse {
  request: {
    configuration: ConfigurationInfo;
    rates: RatesPayload;
    multipliers: MultipliersPayload;
  };
  report: ReportPayload;
  presentation: PresentationPayload;
}

export interface SweepRowPayload {
  z_api: number;
  z_p: number;
  z_l: number;
  dis_mult: number;
  rec_mult: number;
  r: number;
  s: number;
  r_api: number;
  r_pl: number;
  crit_api: number;
  crit_plant: number;
  crit_line: number;
  mean_uptime: number;
  mean_downtime: number;
}

export interface SweepResponse {
  rows: SweepRowPayload[];
}

export interface ThresholdPayload {
  a: string;
  b: string;
  price: number;
}

export interface SwitchPricePayload {
  price: number;
  best: string | null;
}

export interface EconomicsResponse {
  configurations: ConfigurationInfo[];
  prices: number[];
  profits: Record<string, number[]>;
  best: (string | null)[];
  breakeven_prices: Record<string, number>;
  thresholds: ThresholdPayload[];
  switch_prices: SwitchPricePayload[];
}

export interface DefaultsResponse {
  rates: RatesPayload;
  economics: Record<string, number>;
  disruption_multipliers: number[];
  recovery_multipliers: number[];
  comparison_configurations: ConfigurationInfo[];
  economics_configurations: ConfigurationInfo[];
  price_scan: { price_min: number; price_max: number; step: number };
  simulation: { horizon: number; replications: number; seed: number; warmup: number };
  row_cap: number;
}
