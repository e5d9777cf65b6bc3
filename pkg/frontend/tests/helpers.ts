/** A FetchLike backed by responses recorded from the real service. */

import { readFileSync } from "node:fs";
import { join } from "node:path";

import type { FetchLike } from "../src/api.js";

export function fixture<T = unknown>(name: string): T {
  const path = join(process.cwd(), "tests", "fixtures", name);
  return JSON.parse(readFileSync(path, "utf-8")) as T;
}

export const INVESTIGATION_ID: string = fixture<{ id: string }>("investigation.json").id;

export interface CallLog {
  method: string;
  path: string;
  body?: unknown;
}

export class FixtureServer {
  calls: CallLog[] = [];

  readonly fetch: FetchLike = async (url, init) => {
    const method = init?.method ?? "GET";
    const parsed = new URL(url, "http://fixtures.local");
    const path = parsed.pathname;
    const body = init?.body ? JSON.parse(String(init.body)) : undefined;
    this.calls.push({ method, path, body });
    const [status, payload] = this.route(method, path, parsed, body);
    return new Response(JSON.stringify(payload), {
      status,
      headers: { "Content-Type": "application/json" },
    });
  };

  countCalls(match: string): number {
    return this.calls.filter((c) => c.path.includes(match)).length;
  }

  private route(
    method: string,
    path: string,
    parsed: URL,
    body: unknown,
  ): [number, unknown] {
    const id = INVESTIGATION_ID;
    if (method === "POST" && path === "/investigations") {
      return [201, fixture("create_response.json")];
    }
    if (method === "PUT" && path === `/investigations/${id}/config`) {
      const patch = body as { optional_threshold?: number };
      if ((patch.optional_threshold ?? 0) > 0) {
        const recorded = fixture<{ status: number; body: unknown }>("put_config_invalid.json");
        return [recorded.status, recorded.body];
      }
      return [200, fixture("put_config_ok.json")];
    }
    if (path === `/investigations/${id}`) {
      return [200, fixture("investigation.json")];
    }
    const dataset = path.match(`^/investigations/${id}/datasets/(\\w+)$`);
    if (dataset) {
      return [200, fixture(`dataset_${dataset[1]}.json`)];
    }
    const bin = path.match(`^/investigations/${id}/bins/`);
    if (bin) {
      const sort = parsed.searchParams.get("sort") ?? "time";
      const direction = parsed.searchParams.get("direction") ?? "asc";
      const name =
        sort === "retweets" && direction === "desc"
          ? "bin_listing_retweets_desc.json"
          : "bin_listing_time_asc.json";
      return [200, fixture(name)];
    }
    if (path === `/investigations/${id}/tweets/1001`) {
      return [200, fixture("tweet_1001.json")];
    }
    if (path === `/investigations/${id}/users/101`) {
      return [200, fixture("user_101.json")];
    }
    if (path === "/stories") {
      const view = parsed.searchParams.get("view") ?? "condensed";
      return [200, fixture(view === "full" ? "stories_full.json" : "stories_condensed.json")];
    }
    if (path === "/keywords/rate") {
      return [200, fixture("rate_avion.json")];
    }
    if (path === "/keywords/suggest") {
      return [200, fixture("suggest.json")];
    }
    return [404, { detail: `no fixture for ${method} ${path}` }];
  }
}

export async function flush(times = 6): Promise<void> {
  for (let i = 0; i < times; i++) {
    await new Promise((resolve) => setTimeout(resolve, 0));
  }
}
