// Programmable fetch for tests: routes by method + path pattern, and records
// every request (URL, headers, parsed body) so tests can hold outgoing
// traffic to the endpoint schemas.

import type { FetchLike } from "../src/api.js";

export interface RecordedRequest {
  method: string;
  url: string;
  path: string;
  headers: Record<string, string>;
  body: unknown;
}

type Handler = (request: RecordedRequest) => { status?: number; json: unknown };

interface Route {
  method: string;
  pattern: RegExp;
  handler: Handler;
}

export class MockApi {
  readonly requests: RecordedRequest[] = [];
  private readonly routes: Route[] = [];

  route(method: string, pattern: RegExp | string, handler: Handler): void {
    const regex =
      typeof pattern === "string"
        ? new RegExp(`^${pattern.replace(/[.*+?^${}()|[\]\\]/g, "\\$&")}$`)
        : pattern;
    this.routes.push({ method: method.toUpperCase(), pattern: regex, handler });
  }

  get fetch(): FetchLike {
    return async (url, init) => {
      const method = (init?.method ?? "GET").toUpperCase();
      const headers: Record<string, string> = {};
      for (const [key, value] of Object.entries(init?.headers ?? {})) {
        headers[key.toLowerCase()] = String(value);
      }
      const path = url.split("?")[0] ?? url;
      const recorded: RecordedRequest = {
        method,
        url,
        path,
        headers,
        body: init?.body ? JSON.parse(String(init.body)) : undefined,
      };
      this.requests.push(recorded);
      for (const route of this.routes) {
        if (route.method === method && route.pattern.test(path)) {
          const { status = 200, json } = route.handler(recorded);
          return new Response(JSON.stringify(json), {
            status,
            headers: { "Content-Type": "application/json" },
          });
        }
      }
      return new Response(
        JSON.stringify({ code: "not-found", message: `no route for ${method} ${url}` }),
        { status: 404, headers: { "Content-Type": "application/json" } },
      );
    };
  }

  posts(): RecordedRequest[] {
    return this.requests.filter((request) => request.method === "POST");
  }
}
