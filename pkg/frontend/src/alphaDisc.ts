/**
 * The damping-factor control: a disc of radius 1 centered at 1+0i.
 *
 * Roots of the polynomial stay attractive fixed points exactly when
 * |1 - alpha| < 1, so the widget's geometry is the constraint: pointer
 * positions outside the disc are projected back just inside the rim.
 */

export interface Alpha {
  re: number;
  im: number;
}

export const DISC_CENTER: Alpha = { re: 1, im: 0 };
/** Strictly inside the open disc; the boundary itself is not attractive. */
export const MAX_RADIUS = 0.999;

export function isValidAlpha(alpha: Alpha): boolean {
  const dRe = alpha.re - DISC_CENTER.re;
  const dIm = alpha.im - DISC_CENTER.im;
  return Math.hypot(dRe, dIm) < 1;
}

/** Clamp an arbitrary point into the legal disc. */
export function clampAlpha(alpha: Alpha): Alpha {
  const dRe = alpha.re - DISC_CENTER.re;
  const dIm = alpha.im - DISC_CENTER.im;
  const r = Math.hypot(dRe, dIm);
  if (r <= MAX_RADIUS) return { re: alpha.re, im: alpha.im };
  const scale = MAX_RADIUS / r;
  return { re: DISC_CENTER.re + dRe * scale, im: DISC_CENTER.im + dIm * scale };
}

/** Widget pixel coordinates -> alpha (widget is size x size, disc inscribed). */
export function alphaFromWidget(x: number, y: number, size: number): Alpha {
  const half = size / 2;
  return clampAlpha({
    re: DISC_CENTER.re + (x - half) / half,
    im: DISC_CENTER.im - (y - half) / half,
  });
}

/** Alpha -> widget pixel coordinates. */
export function widgetFromAlpha(alpha: Alpha, size: number): { x: number; y: number } {
  const half = size / 2;
  return {
    x: half + (alpha.re - DISC_CENTER.re) * half,
    y: half - (alpha.im - DISC_CENTER.im) * half,
  };
}
