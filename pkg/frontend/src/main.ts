/**
 * DOM shell wiring the pure-logic modules into an interactive explorer.
 * All math-facing behavior (state clamping, scene documents, scheduling,
 * overlay geometry, the alpha disc) lives in the imported modules, which
 * carry the tests; this file only moves values between them and the page.
 */

import { ApiClient, type OrbitResponse, type RootsResponse } from "./api.js";
import {
  alphaFromWidget,
  widgetFromAlpha,
  DISC_CENTER,
} from "./alphaDisc.js";
import {
  orbitPolyline,
  pixelToComplex,
  rootMarkers,
  unitCircle,
  type ViewportSpec,
} from "./overlay.js";
import { RenderScheduler } from "./scheduler.js";
import {
  applyPreset,
  applyUpdate,
  defaultState,
  pan,
  PRESETS,
  renderStateHash,
  sceneDocument,
  zoomAt,
  type ExplorerState,
} from "./state.js";

const params = new URLSearchParams(window.location.search);
const BASE_URL = params.get("service") ?? "http://127.0.0.1:8650";
const api = new ApiClient(BASE_URL);

let state: ExplorerState = defaultState();
let orbit: OrbitResponse | null = null;
let roots: RootsResponse | null = null;
let showRoots = false;
let imageBitmap: ImageBitmap | null = null;

const el = <T extends HTMLElement>(id: string): T =>
  document.getElementById(id) as T;

const canvas = el<HTMLCanvasElement>("view");
const ctx = canvas.getContext("2d")!;
const alphaCanvas = el<HTMLCanvasElement>("alpha-disc");
const alphaCtx = alphaCanvas.getContext("2d")!;
const errorBox = el<HTMLDivElement>("error");
const busyBox = el<HTMLSpanElement>("busy");
const orbitPanel = el<HTMLPreElement>("orbit-panel");

function viewportSpec(): ViewportSpec {
  return {
    center: state.center,
    width: state.width,
    cols: state.cols,
    rows: state.rows,
  };
}

function showError(message: string | null): void {
  errorBox.textContent = message ?? "";
  errorBox.style.display = message ? "block" : "none";
}

// ---------------------------------------------------------------------------
// rendering

const scheduler = new RenderScheduler({
  run: async () => {
    busyBox.style.display = "inline";
    try {
      const blob = await api.render(sceneDocument(state));
      imageBitmap = await createImageBitmap(blob);
      showError(null);
    } catch (err: unknown) {
      const msg =
        err && typeof err === "object" && "message" in err
          ? String((err as { message: unknown }).message)
          : String(err);
      showError(msg);
    } finally {
      busyBox.style.display = "none";
      draw();
    }
  },
});

function draw(): void {
  canvas.width = state.cols;
  canvas.height = state.rows;
  ctx.fillStyle = "#111";
  ctx.fillRect(0, 0, canvas.width, canvas.height);
  if (imageBitmap) ctx.drawImage(imageBitmap, 0, 0);

  const v = viewportSpec();
  if (showRoots && roots) {
    if (state.polyKind !== "partial_sum") {
      ctx.strokeStyle = "rgba(255,255,255,0.7)";
      ctx.beginPath();
      for (const [i, p] of unitCircle(v).entries()) {
        if (i === 0) ctx.moveTo(p.col, p.row);
        else ctx.lineTo(p.col, p.row);
      }
      ctx.stroke();
    }
    ctx.fillStyle = "#fff";
    ctx.strokeStyle = "#000";
    for (const marker of rootMarkers(v, roots.roots)) {
      if (!marker.visible) continue;
      ctx.beginPath();
      ctx.arc(marker.col, marker.row, 4, 0, 2 * Math.PI);
      ctx.fill();
      ctx.stroke();
    }
  }
  if (orbit) {
    const line = orbitPolyline(v, orbit.points);
    ctx.strokeStyle = orbit.status === "converged" ? "#4f4" : "#f44";
    ctx.lineWidth = 1.5;
    ctx.beginPath();
    for (const [i, p] of line.entries()) {
      if (i === 0) ctx.moveTo(p.col, p.row);
      else ctx.lineTo(p.col, p.row);
    }
    ctx.stroke();
    if (line.length > 0) {
      const last = line[line.length - 1];
      ctx.fillStyle = ctx.strokeStyle;
      ctx.beginPath();
      ctx.arc(last.col, last.row, 3, 0, 2 * Math.PI);
      ctx.fill();
    }
  }
}

function setState(next: ExplorerState, immediate = false): void {
  const hashBefore = renderStateHash(state);
  state = next;
  orbit = null;
  roots = null;
  syncControls();
  const hash = renderStateHash(state);
  if (hash !== hashBefore || immediate) {
    if (immediate) scheduler.requestNow(hash);
    else scheduler.request(hash);
  }
  if (showRoots) refreshRoots();
  draw();
}

// ---------------------------------------------------------------------------
// side data

async function refreshRoots(): Promise<void> {
  const kind = state.polyKind === "partial_sum" ? "partial_sum" : "szego";
  try {
    roots = await api.roots(kind, state.n);
    showError(null);
  } catch (err: unknown) {
    roots = null;
    showError(String((err as { message?: unknown }).message ?? err));
  }
  draw();
}

async function probeOrbit(z0: { re: number; im: number }): Promise<void> {
  try {
    orbit = await api.orbit(sceneDocument(state), [z0.re, z0.im]);
    showError(null);
    const lines = orbit.points.map(
      ([k, re, im, res]) =>
        `${String(k).padStart(3)}  ${re.toExponential(6)} ${im >= 0 ? "+" : "-"}${Math.abs(im).toExponential(6)}i  |p|=${res.toExponential(3)}`,
    );
    lines.push(`status=${orbit.status} root_index=${orbit.root_index ?? "-"}`);
    orbitPanel.textContent = lines.join("\n");
  } catch (err: unknown) {
    orbit = null;
    showError(String((err as { message?: unknown }).message ?? err));
  }
  draw();
}

// ---------------------------------------------------------------------------
// controls

function syncControls(): void {
  el<HTMLSelectElement>("poly-kind").value = state.polyKind;
  el<HTMLInputElement>("n").value = String(state.n);
  el<HTMLSelectElement>("mode").value = state.mode;
  el<HTMLInputElement>("m").value = String(state.m);
  el<HTMLInputElement>("m-max").value = String(state.mMax);
  el<HTMLDivElement>("basins-controls").style.display =
    state.mode === "basins" ? "block" : "none";
  el<HTMLDivElement>("voronoi-controls").style.display =
    state.mode === "voronoi" ? "block" : "none";
  el<HTMLSpanElement>("alpha-value").textContent =
    `α = ${state.alpha.re.toFixed(3)} + ${state.alpha.im.toFixed(3)}i`;
  drawAlphaDisc();
}

function drawAlphaDisc(): void {
  const size = alphaCanvas.width;
  alphaCtx.clearRect(0, 0, size, size);
  alphaCtx.fillStyle = "#223";
  alphaCtx.beginPath();
  alphaCtx.arc(size / 2, size / 2, size / 2 - 1, 0, 2 * Math.PI);
  alphaCtx.fill();
  const center = widgetFromAlpha(DISC_CENTER, size);
  alphaCtx.fillStyle = "#556";
  alphaCtx.fillRect(center.x - 1, center.y - 1, 3, 3);
  const knob = widgetFromAlpha(state.alpha, size);
  alphaCtx.fillStyle = "#fc4";
  alphaCtx.beginPath();
  alphaCtx.arc(knob.x, knob.y, 5, 0, 2 * Math.PI);
  alphaCtx.fill();
}

function wire(): void {
  el<HTMLSelectElement>("poly-kind").addEventListener("change", (e) =>
    setState(
      applyUpdate(state, {
        polyKind: (e.target as HTMLSelectElement).value as ExplorerState["polyKind"],
      }),
    ),
  );
  el<HTMLInputElement>("n").addEventListener("change", (e) =>
    setState(applyUpdate(state, { n: Number((e.target as HTMLInputElement).value) })),
  );
  el<HTMLSelectElement>("mode").addEventListener("change", (e) =>
    setState(
      applyUpdate(state, {
        mode: (e.target as HTMLSelectElement).value as ExplorerState["mode"],
      }),
    ),
  );
  el<HTMLInputElement>("m").addEventListener("change", (e) =>
    setState(applyUpdate(state, { m: Number((e.target as HTMLInputElement).value) })),
  );
  el<HTMLInputElement>("m-max").addEventListener("change", (e) =>
    setState(applyUpdate(state, { mMax: Number((e.target as HTMLInputElement).value) })),
  );

  const presetBar = el<HTMLDivElement>("presets");
  for (const [key, preset] of Object.entries(PRESETS)) {
    const button = document.createElement("button");
    button.textContent = preset.label;
    button.addEventListener("click", () =>
      setState(applyPreset(state, key, state.n), true),
    );
    presetBar.appendChild(button);
  }

  el<HTMLInputElement>("show-roots").addEventListener("change", (e) => {
    showRoots = (e.target as HTMLInputElement).checked;
    if (showRoots) refreshRoots();
    else {
      roots = null;
      draw();
    }
  });

  // Alpha disc drag.
  let draggingAlpha = false;
  const moveAlpha = (e: PointerEvent) => {
    const rect = alphaCanvas.getBoundingClientRect();
    const alpha = alphaFromWidget(
      e.clientX - rect.left,
      e.clientY - rect.top,
      alphaCanvas.width,
    );
    setState(applyUpdate(state, { alpha }));
  };
  alphaCanvas.addEventListener("pointerdown", (e) => {
    draggingAlpha = true;
    alphaCanvas.setPointerCapture(e.pointerId);
    moveAlpha(e);
  });
  alphaCanvas.addEventListener("pointermove", (e) => {
    if (draggingAlpha) moveAlpha(e);
  });
  alphaCanvas.addEventListener("pointerup", () => (draggingAlpha = false));

  // Main canvas: click probes an orbit, drag pans, wheel zooms.
  let dragStart: { x: number; y: number } | null = null;
  let dragged = false;
  canvas.addEventListener("pointerdown", (e) => {
    dragStart = { x: e.offsetX, y: e.offsetY };
    dragged = false;
    canvas.setPointerCapture(e.pointerId);
  });
  canvas.addEventListener("pointermove", (e) => {
    if (!dragStart) return;
    const dx = e.offsetX - dragStart.x;
    const dy = e.offsetY - dragStart.y;
    if (!dragged && Math.hypot(dx, dy) < 4) return;
    dragged = true;
    // Pixels are square, so one pixel spans width/cols in both directions.
    const scale = state.width / state.cols;
    setState(pan(state, -dx * scale, dy * scale));
    dragStart = { x: e.offsetX, y: e.offsetY };
  });
  canvas.addEventListener("pointerup", (e) => {
    const wasDrag = dragged;
    dragStart = null;
    dragged = false;
    if (wasDrag) return;
    const z0 = pixelToComplex(viewportSpec(), e.offsetX - 0.5, e.offsetY - 0.5);
    probeOrbit(z0);
  });
  canvas.addEventListener("wheel", (e) => {
    e.preventDefault();
    const at = pixelToComplex(viewportSpec(), e.offsetX - 0.5, e.offsetY - 0.5);
    setState(zoomAt(state, e.deltaY < 0 ? 2 : 0.5, at));
  });

  el<HTMLButtonElement>("reset-view").addEventListener("click", () =>
    setState(applyUpdate(state, { center: { re: 0, im: 0 }, width: 2.5 * state.n })),
  );
}

wire();
syncControls();
scheduler.requestNow(renderStateHash(state));
