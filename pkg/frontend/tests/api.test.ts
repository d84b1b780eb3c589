import { describe, expect, it } from "vitest";
import { ApiClient, type ServiceError } from "../src/api.js";

function jsonResponse(status: number, body: unknown): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

describe("ApiClient", () => {
  it("POSTs scenes to /render and returns the image blob", async () => {
    const calls: { url: string; init?: RequestInit }[] = [];
    const png = new Uint8Array([0x89, 0x50, 0x4e, 0x47]);
    const client = new ApiClient("http://svc", async (url, init) => {
      calls.push({ url, init });
      return new Response(png, { status: 200, headers: { "Content-Type": "image/png" } });
    });
    const blob = await client.render({ poly: { kind: "partial_sum", n: 2 } });
    expect(calls[0].url).toBe("http://svc/render");
    expect(calls[0].init?.method).toBe("POST");
    expect(JSON.parse(calls[0].init?.body as string).poly.n).toBe(2);
    expect(blob.size).toBe(4);
  });

  it("builds the /roots query string", async () => {
    let seen = "";
    const client = new ApiClient("http://svc", async (url) => {
      seen = url;
      return jsonResponse(200, { kind: "szego", n: 3, roots: [] });
    });
    await client.roots("szego", 3);
    expect(seen).toBe("http://svc/roots?kind=szego&n=3");
  });

  it("wraps the scene and seed for /orbit", async () => {
    let body: Record<string, unknown> = {};
    const client = new ApiClient("http://svc", async (_url, init) => {
      body = JSON.parse(init?.body as string);
      return jsonResponse(200, { points: [], status: "max_steps", root_index: null });
    });
    await client.orbit({ poly: { kind: "partial_sum", n: 2 } }, [-1, 1.5]);
    expect(body.z0).toEqual([-1, 1.5]);
    expect((body.scene as Record<string, unknown>).poly).toEqual({
      kind: "partial_sum",
      n: 2,
    });
  });

  it("surfaces the service's JSON error message on non-2xx", async () => {
    const client = new ApiClient("http://svc", async () =>
      jsonResponse(422, { error: "n must be >= 1" }),
    );
    await expect(client.roots("szego", 0)).rejects.toMatchObject({
      status: 422,
      message: "n must be >= 1",
    } satisfies ServiceError);
  });

  it("falls back to a generic message for non-JSON error bodies", async () => {
    const client = new ApiClient(
      "http://svc",
      async () => new Response("boom", { status: 500 }),
    );
    await expect(client.render({})).rejects.toMatchObject({
      status: 500,
      message: "HTTP 500",
    });
  });
});
