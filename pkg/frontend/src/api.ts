/**
 * Thin client for the rendering service's three endpoints. The fetch
 * implementation is injectable so tests can run without a network.
 */

export interface ServiceError {
  status: number;
  message: string;
}

export interface RootsResponse {
  kind: string;
  n: number;
  all_simple: boolean;
  bounds_hold: boolean;
  roots: [number, number][];
  residuals: number[];
  derivative_moduli: number[];
}

/** [k, re, im, |p(z_k)|] as served. */
export type OrbitPoint = [number, number, number, number];

export interface OrbitResponse {
  points: OrbitPoint[];
  status: string;
  root_index: number | null;
}

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

async function raiseForStatus(resp: Response): Promise<void> {
  if (resp.ok) return;
  let message = `HTTP ${resp.status}`;
  try {
    const body = await resp.json();
    if (body && typeof body.error === "string") message = body.error;
  } catch {
    // Non-JSON error body; keep the generic message.
  }
  const err: ServiceError = { status: resp.status, message };
  throw err;
}

export class ApiClient {
  constructor(
    private baseUrl: string,
    private fetchImpl: FetchLike = (url, init) => fetch(url, init),
  ) {}

  async render(scene: object): Promise<Blob> {
    const resp = await this.fetchImpl(`${this.baseUrl}/render`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(scene),
    });
    await raiseForStatus(resp);
    return resp.blob();
  }

  async roots(kind: string, n: number): Promise<RootsResponse> {
    const query = `kind=${encodeURIComponent(kind)}&n=${n}`;
    const resp = await this.fetchImpl(`${this.baseUrl}/roots?${query}`);
    await raiseForStatus(resp);
    return resp.json();
  }

  async orbit(scene: object, z0: [number, number]): Promise<OrbitResponse> {
    const resp = await this.fetchImpl(`${this.baseUrl}/orbit`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ scene, z0 }),
    });
    await raiseForStatus(resp);
    return resp.json();
  }
}
