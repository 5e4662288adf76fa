import { execFileSync } from "node:child_process";
import { existsSync, readFileSync } from "node:fs";
import { join } from "node:path";

import { DIST_APP } from "./paths";

export interface Entry {
  id: string;
  name: string;
  norm: string;
  kind: string;
  article: string;
}

export interface SymdocApi {
  splitQuery(rawQuery: string): string[];
  filterEntries(entries: Entry[], rawQuery: string): Entry[];
  slugBase(id: string): string;
  assignSlugs(ids: string[]): Record<string, string>;
  pagePath(slugs: Record<string, string>, id: string): string;
  init(): void;
}

export function readTable(path: string): { version: number; entries: Entry[] } {
  return JSON.parse(readFileSync(path, "utf8"));
}

/** Recreate the two-pane shell the site generator emits in index.html. */
export function buildShell(): void {
  document.body.innerHTML =
    '<div id="layout">' +
    '<nav id="sidebar">' +
    '<input id="search-input" type="search" autocomplete="off">' +
    '<div id="match-count"></div>' +
    '<div id="list-viewport"><ul id="symbol-list" role="listbox"></ul></div>' +
    "</nav>" +
    '<main id="content"><iframe id="main-frame" name="main-frame"></iframe></main>' +
    "</div>";
}

export interface FetchCall {
  url: string;
  method: string;
}

/**
 * Replace global fetch with a stub that serves files from a built site
 * directory, so the app loads its data and HEAD-checks pages exactly as it
 * would against a static server. Returns the call log.
 */
export function installFetchStub(siteDir: string): FetchCall[] {
  const calls: FetchCall[] = [];
  const stub = (input: unknown, init?: { method?: string }): Promise<unknown> => {
    const raw = String(input);
    const rel = raw.replace(/^https?:\/\/[^/]+\//, "");
    const method = (init && init.method) || "GET";
    calls.push({ url: rel, method });
    const path = join(siteDir, rel);
    if (!existsSync(path)) {
      return Promise.resolve({
        ok: false,
        status: 404,
        json: () => Promise.reject(new Error("not found: " + rel)),
      });
    }
    return Promise.resolve({
      ok: true,
      status: 200,
      json: () => Promise.resolve(JSON.parse(readFileSync(path, "utf8"))),
    });
  };
  (globalThis as Record<string, unknown>).fetch = stub;
  return calls;
}

/** Replace global fetch with one that always rejects. */
export function installFailingFetch(): void {
  (globalThis as Record<string, unknown>).fetch = () =>
    Promise.reject(new Error("network down"));
}

let appSource: string | null = null;

/**
 * Evaluate the compiled client (dist/app.js) in the test DOM. The script
 * initializes itself against the current document, so build the shell and
 * install the fetch stub first.
 */
export function loadApp(): SymdocApi {
  if (appSource === null) {
    if (!existsSync(DIST_APP)) {
      throw new Error("dist/app.js missing; run `npm run build` first");
    }
    appSource = readFileSync(DIST_APP, "utf8");
  }
  (0, eval)(appSource);
  const api = (window as unknown as { symdocApp?: SymdocApi }).symdocApp;
  if (!api) {
    throw new Error("app did not register window.symdocApp");
  }
  return api;
}

/** Let the app's startup promises and HEAD checks settle. */
export async function flush(turns = 4): Promise<void> {
  for (let i = 0; i < turns; i++) {
    await new Promise((resolve) => setTimeout(resolve, 0));
  }
}

export function typeQuery(value: string): void {
  const input = document.getElementById("search-input") as HTMLInputElement;
  input.value = value;
  input.dispatchEvent(new Event("input"));
}

export function renderedIds(): string[] {
  const rows = document.querySelectorAll("#symbol-list li[data-id]");
  return Array.from(rows).map((row) => row.getAttribute("data-id") as string);
}

/**
 * What the windowed list renderer should show of `ids` at scroll offset
 * `scrollTop`: everything at or below 2000 rows, otherwise a slice sized by
 * the 600px fallback viewport (24px rows, 10 rows overscan) jsdom reports.
 */
export function filterDomIds(ids: string[], scrollTop = 0): string[] {
  if (ids.length <= 2000) {
    return ids;
  }
  const first = Math.max(0, Math.floor(scrollTop / 24) - 10);
  const last = Math.min(ids.length, Math.ceil((scrollTop + 600) / 24) + 10);
  return ids.slice(first, last);
}

/** Run the reference `symdoc query` CLI and return the matched ids. */
export function cliQueryIds(tablePath: string, query: string): string[] {
  const words = query.split(/\s+/).filter((w) => w.length > 0);
  const out = execFileSync(
    "python3",
    ["-m", "symdoc", "query", "--table", tablePath, "--", ...words],
    { encoding: "utf8" },
  );
  return out
    .split("\n")
    .filter((line) => line.length > 0)
    .map((line) => line.split("\t")[0]);
}

/** Small deterministic RNG so test inputs are reproducible. */
export function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return function () {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function median(samples: number[]): number {
  const sorted = samples.slice().sort((a, b) => a - b);
  const mid = Math.floor(sorted.length / 2);
  return sorted.length % 2 === 1 ? sorted[mid] : (sorted[mid - 1] + sorted[mid]) / 2;
}
