/**
 * Geometry for drawing on top of the rendered image: the complex <-> pixel
 * transform (mirroring the renderer's pixel-center convention, row 0 at the
 * top), orbit polylines, root markers, and the unit circle shown for scaled
 * sums whose roots all sit inside it.
 */

import type { OrbitPoint } from "./api.js";

export interface ViewportSpec {
  center: { re: number; im: number };
  width: number;
  cols: number;
  rows: number;
}

export function viewportHeight(v: ViewportSpec): number {
  // Pixels are square, so height follows from width and the aspect ratio.
  return (v.width * v.rows) / v.cols;
}

/** Complex value at the center of pixel (col, row). */
export function pixelToComplex(
  v: ViewportSpec,
  col: number,
  row: number,
): { re: number; im: number } {
  const height = viewportHeight(v);
  return {
    re: v.center.re + v.width * ((col + 0.5) / v.cols - 0.5),
    im: v.center.im + height * (0.5 - (row + 0.5) / v.rows),
  };
}

/** Inverse transform: complex value -> fractional pixel coordinates. */
export function complexToPixel(
  v: ViewportSpec,
  z: { re: number; im: number },
): { col: number; row: number } {
  const height = viewportHeight(v);
  return {
    col: ((z.re - v.center.re) / v.width + 0.5) * v.cols - 0.5,
    row: (0.5 - (z.im - v.center.im) / height) * v.rows - 0.5,
  };
}

/** Orbit points -> pixel polyline, one vertex per iterate in order. */
export function orbitPolyline(
  v: ViewportSpec,
  points: OrbitPoint[],
): { col: number; row: number }[] {
  return points.map(([, re, im]) => complexToPixel(v, { re, im }));
}

export interface RootMarker {
  col: number;
  row: number;
  index: number;
  visible: boolean;
}

export function rootMarkers(
  v: ViewportSpec,
  roots: [number, number][],
): RootMarker[] {
  return roots.map(([re, im], index) => {
    const { col, row } = complexToPixel(v, { re, im });
    const visible = col >= 0 && col < v.cols && row >= 0 && row < v.rows;
    return { col, row, index, visible };
  });
}

/** Unit-circle polyline in pixel coordinates (for the scaled-sum overlay). */
export function unitCircle(
  v: ViewportSpec,
  segments = 128,
): { col: number; row: number }[] {
  const pts: { col: number; row: number }[] = [];
  for (let i = 0; i <= segments; i++) {
    const t = (2 * Math.PI * i) / segments;
    pts.push(complexToPixel(v, { re: Math.cos(t), im: Math.sin(t) }));
  }
  return pts;
}
