import { readFileSync } from "node:fs";
import { join } from "node:path";
import { vi } from "vitest";

export function fixture<T>(name: string): T {
  const path = join(process.cwd(), "tests", "fixtures", name);
  return JSON.parse(readFileSync(path, "utf-8")) as T;
}

export interface RecordedCall {
  method: string;
  url: URL;
  body: unknown;
}

export interface Route {
  method: string;
  path: string;
  /** Exact expected query parameters; order-insensitive. */
  params: Record<string, string>;
  payload: unknown | (() => unknown);
}

function paramsMatch(url: URL, expected: Record<string, string>): boolean {
  const got = [...url.searchParams.entries()].sort();
  const want = Object.entries(expected).sort();
  return JSON.stringify(got) === JSON.stringify(want);
}

/** Install a fetch mock that serves the given routes and records calls. */
export function installFetch(routes: Route[]): RecordedCall[] {
  const calls: RecordedCall[] = [];
  globalThis.fetch = vi.fn(async (input: RequestInfo | URL, init?: RequestInit) => {
    const url = new URL(String(input), "http://service.test");
    const method = init?.method ?? "GET";
    calls.push({
      method,
      url,
      body: init?.body ? JSON.parse(String(init.body)) : undefined,
    });
    for (const route of routes) {
      if (route.method === method && route.path === url.pathname && paramsMatch(url, route.params)) {
        const payload =
          typeof route.payload === "function"
            ? (route.payload as () => unknown)()
            : route.payload;
        return new Response(JSON.stringify(payload), {
          status: 200,
          headers: { "Content-Type": "application/json" },
        });
      }
    }
    throw new Error(`no mocked route for ${method} ${url.pathname}?${url.searchParams}`);
  }) as typeof fetch;
  return calls;
}

/** Mirror of index.html's element ids, for mounting the app under jsdom. */
export function mountShell(): void {
  document.body.innerHTML = `
    <input id="query-input" type="text" />
    <input id="subquery-input" type="text" />
    <input id="date-from" type="date" />
    <input id="date-to" type="date" />
    <input id="k-slider" type="range" min="1" max="5" value="1" />
    <span id="k-value">1</span>
    <section id="timeseries"></section>
    <section id="history-bar"></section>
    <section id="feed"></section>
    <section id="viewer"></section>
    <span id="status"></span>
  `;
}

export function flush(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}
