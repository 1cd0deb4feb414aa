import { describe, expect, it, vi } from "vitest";

import { ApiClient } from "../src/api.js";
import { emptyFilters } from "../src/state.js";

function deferredFetch() {
  const seen: { url: URL; signal: AbortSignal | null }[] = [];
  let release: (() => void)[] = [];
  globalThis.fetch = vi.fn(
    (input: RequestInfo | URL, init?: RequestInit) =>
      new Promise<Response>((resolve, reject) => {
        const url = new URL(String(input), "http://service.test");
        const signal = init?.signal ?? null;
        seen.push({ url, signal });
        const finish = () => {
          if (signal?.aborted) {
            reject(Object.assign(new Error("aborted"), { name: "AbortError" }));
          } else {
            resolve(
              new Response(JSON.stringify({ ok: true }), {
                status: 200,
                headers: { "Content-Type": "application/json" },
              }),
            );
          }
        };
        release.push(finish);
        signal?.addEventListener("abort", finish);
      }),
  ) as typeof fetch;
  return { seen, release: () => release.splice(0).forEach((fn) => fn()) };
}

describe("ApiClient", () => {
  it("sends the session id with every request", async () => {
    const headers: unknown[] = [];
    globalThis.fetch = vi.fn(async (_input: RequestInfo | URL, init?: RequestInit) => {
      headers.push(init?.headers);
      return new Response("[]", { status: 200 });
    }) as typeof fetch;
    const api = new ApiClient("", "session-42");
    await api.corpora();
    expect(headers[0]).toMatchObject({ "X-Session-Id": "session-42" });
  });

  it("aborts a superseded search so only one stays in flight", async () => {
    const { seen, release } = deferredFetch();
    const api = new ApiClient();
    const first = api.search("salvador", { ...emptyFilters(), query: "duarte" });
    const second = api.search("salvador", { ...emptyFilters(), query: "reagan" });
    expect(seen).toHaveLength(2);
    expect(seen[0]!.signal?.aborted).toBe(true);
    expect(seen[1]!.signal?.aborted).toBe(false);
    release();
    await expect(first).rejects.toMatchObject({ name: "AbortError" });
    await expect(second).resolves.toEqual({ ok: true });
  });

  it("raises on error statuses", async () => {
    globalThis.fetch = vi.fn(async () => new Response("nope", { status: 404 })) as typeof fetch;
    const api = new ApiClient();
    await expect(api.corpora()).rejects.toThrow("404");
  });
});
