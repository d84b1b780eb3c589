/**
 * Explorer state and the scene documents derived from it.
 *
 * Every mutation goes through clamping, so the state can never describe
 * a request the service would reject with 422 (the alpha control is
 * constrained separately in alphaDisc.ts).
 */

export type PolyKind = "partial_sum" | "szego" | "szego_unity";
export type ModeKind = "basins" | "voronoi";

export interface ExplorerState {
  polyKind: PolyKind;
  n: number;
  mode: ModeKind;
  m: number;
  alpha: { re: number; im: number };
  mMax: number;
  palette: string;
  center: { re: number; im: number };
  width: number;
  cols: number;
  rows: number;
  busy: boolean;
}

export const LIMITS = {
  n: { min: 1, max: 64 },
  m: { min: 2, max: 10 },
  mMax: { min: 2, max: 200 },
  tile: 1024,
};

export function defaultState(): ExplorerState {
  return {
    polyKind: "partial_sum",
    n: 2,
    mode: "basins",
    m: 2,
    alpha: { re: 1, im: 0 },
    mMax: 30,
    palette: "default",
    center: { re: 0, im: 0 },
    width: 5,
    cols: 512,
    rows: 512,
    busy: false,
  };
}

function clampInt(value: number, min: number, max: number): number {
  return Math.min(max, Math.max(min, Math.round(value)));
}

/** Apply a partial update, clamping everything into the legal ranges. */
export function applyUpdate(
  state: ExplorerState,
  update: Partial<ExplorerState>,
): ExplorerState {
  const next = { ...state, ...update };
  next.n = clampInt(next.n, LIMITS.n.min, LIMITS.n.max);
  next.m = clampInt(next.m, LIMITS.m.min, LIMITS.m.max);
  next.mMax = clampInt(next.mMax, LIMITS.mMax.min, LIMITS.mMax.max);
  next.cols = clampInt(next.cols, 1, LIMITS.tile);
  next.rows = clampInt(next.rows, 1, LIMITS.tile);
  if (!(next.width > 0)) next.width = state.width > 0 ? state.width : 1;
  return next;
}

/** Zoom about a fixed complex point; factor 2 halves the viewport width. */
export function zoomAt(
  state: ExplorerState,
  factor: number,
  at?: { re: number; im: number },
): ExplorerState {
  const target = at ?? state.center;
  const width = state.width / factor;
  const center = {
    re: target.re + (state.center.re - target.re) / factor,
    im: target.im + (state.center.im - target.im) / factor,
  };
  return applyUpdate(state, { width, center });
}

export function pan(state: ExplorerState, dRe: number, dIm: number): ExplorerState {
  return applyUpdate(state, {
    center: { re: state.center.re + dRe, im: state.center.im + dIm },
  });
}

/** Scene document for POST /render, mirroring the service schema. */
export function sceneDocument(state: ExplorerState): object {
  const poly = { kind: state.polyKind, n: state.n };
  const mode =
    state.mode === "basins"
      ? { kind: "basins", m: state.m, alpha: [state.alpha.re, state.alpha.im] }
      : { kind: "voronoi", m_max: state.mMax };
  return {
    poly,
    mode,
    viewport: {
      center: [state.center.re, state.center.im],
      width: state.width,
      cols: state.cols,
      rows: state.rows,
    },
    palette: state.palette,
  };
}

/** Hash of the render-relevant state; identical hashes mean the last
 *  response is still valid and no new request should go out. */
export function renderStateHash(state: ExplorerState): string {
  return JSON.stringify(sceneDocument(state));
}

export interface Preset {
  label: string;
  polyKind: PolyKind;
  mode: ModeKind;
  nRange: [number, number];
}

export const PRESETS: Record<string, Preset> = {
  fig1: { label: "Newton basins", polyKind: "partial_sum", mode: "basins", nRange: [2, 10] },
  fig2: { label: "Voronoi cells", polyKind: "partial_sum", mode: "voronoi", nRange: [2, 7] },
  fig3: { label: "Damped Newton", polyKind: "partial_sum", mode: "basins", nRange: [2, 7] },
  fig4: { label: "Scaled sums x unity", polyKind: "szego_unity", mode: "voronoi", nRange: [2, 7] },
};

export function applyPreset(
  state: ExplorerState,
  figure: keyof typeof PRESETS,
  n: number,
): ExplorerState {
  const preset = PRESETS[figure];
  const clampedN = clampInt(n, preset.nRange[0], preset.nRange[1]);
  const width = figure === "fig4" ? 2.6 : 2.5 * clampedN;
  return applyUpdate(state, {
    polyKind: preset.polyKind,
    mode: preset.mode,
    n: clampedN,
    m: 2,
    alpha: figure === "fig3" ? { re: 0.55, im: 0.45 } : { re: 1, im: 0 },
    center: { re: 0, im: 0 },
    width,
  });
}
