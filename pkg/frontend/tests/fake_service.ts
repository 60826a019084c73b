/** A canned lexdiv service for unit tests: a FetchLike routing table with
 * just enough state to exercise the view model offline. */

import { ChangelogEvent, FetchLike } from "../src/api.js";

export interface FakeService {
  fetch: FetchLike;
  requests: string[];
  failNetwork: boolean;
  events: ChangelogEvent[];
}

function json(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

export function makeFakeService(): FakeService {
  const events: ChangelogEvent[] = [];
  let mhnRyeBread: "missing" | "lexicalized" = "missing";

  const service: FakeService = {
    requests: [],
    failNetwork: false,
    events,
    fetch: async (input: string, init?: RequestInit) => {
      const url = new URL(input, "http://fake");
      service.requests.push(`${init?.method ?? "GET"} ${url.pathname}`);
      if (service.failNetwork) throw new TypeError("fetch failed");

      if (url.pathname === "/languages") {
        return json([
          { id: 1, code: "de", name: "German", role: "trade" },
          { id: 2, code: "mhn", name: "Mòcheno", role: "local" },
        ]);
      }
      if (url.pathname === "/concepts/3") {
        return json({
          id: 3, label: "rye bread", parents: [2], children: [],
          lexicalizations: [
            { language: "de", status: "lexicalized",
              senses: [{ id: 3, lemma: "Roggenbrot", language: "de",
                         concept: 30 }] },
            { language: "mhn", status: mhnRyeBread, senses: [] },
          ],
        });
      }
      if (url.pathname === "/concepts/99") {
        return json({ code: "UNKNOWN_REF", message: "no concept 99",
                      location: null }, 404);
      }
      if (url.pathname === "/coverage") {
        const after = mhnRyeBread === "lexicalized";
        return json({
          per_language: { de: after ? 0.75 : 2 / 3,
                          mhn: after ? 0.75 : 2 / 3 },
          overall: after ? 0.75 : 2 / 3,
          counts: { de: [2, 3], mhn: [2, 3] },
          overall_counts: [2, 3],
        });
      }
      if (url.pathname === "/bias") {
        return json({ bias: 0, mean: 2 / 3, n: 2,
                      per_language: { de: 2 / 3, mhn: 2 / 3 } });
      }
      if (url.pathname === "/changelog") {
        const since = Number(url.searchParams.get("since") ?? "0");
        return json(events.filter((e) => e.seq > since));
      }
      if (url.pathname === "/edits") {
        const payload = JSON.parse(String(init?.body));
        const base = {
          seq: events.length + 1,
          contributor: payload.contributor,
          timestamp: "2026-01-01T00:00:00+00:00",
          action: payload.action,
          args: payload.args,
        };
        if (payload.action === "mark_gap") {
          events.push({ ...base, status: "error",
                        error_code: "SENSE_CONFLICT", result: null });
          return json({ code: "SENSE_CONFLICT",
                        message: "concept already has senses",
                        seq: base.seq }, 409);
        }
        if (payload.action === "lexicalize") mhnRyeBread = "lexicalized";
        events.push({ ...base, status: "ok", error_code: null,
                      result: { id: 77 } });
        return json({ seq: base.seq, status: "ok", result: { id: 77 } });
      }
      return json({ code: "UNKNOWN_REF", message: url.pathname }, 404);
    },
  };
  return service;
}
