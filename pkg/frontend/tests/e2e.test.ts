/** End-to-end session against the real service running the Alpine fixture
 * (German as trade language, Mòcheno as the local language being built up).
 */

import { ChildProcess, spawn } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { Client, ConceptRef } from "../src/api.js";
import { EditorState, emptyForm } from "../src/viewmodel.js";

const PORT = 8931;
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess;

async function waitForServer(): Promise<void> {
  for (let attempt = 0; attempt < 100; attempt++) {
    try {
      const response = await fetch(`${BASE}/languages`);
      if (response.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 150));
  }
  throw new Error("service did not come up");
}

beforeAll(async () => {
  server = spawn("python3", [
    "-m", "lexdiv.cli", "serve", "--fixture", "alpine",
    "--host", "127.0.0.1", "--port", String(PORT),
  ], { stdio: "ignore" });
  await waitForServer();
}, 30_000);

afterAll(() => {
  server?.kill();
});

async function findConcept(client: Client, label: string):
    Promise<ConceptRef> {
  const page = await client.concepts({ pageSize: 100 });
  const hit = page.items.find((c) => c.label === label);
  if (!hit) throw new Error(`fixture has no concept labelled ${label}`);
  return hit;
}

describe("editing session on the Alpine fixture", () => {
  const client = new Client(BASE);
  const state = new EditorState(client);

  it("defaults the language pair to German + Mòcheno", async () => {
    await state.init();
    expect(state.pair).toEqual(["de", "mhn"]);
  });

  it("browses to rye bread and sees a missing (not gap) badge", async () => {
    const food = await findConcept(client, "food");
    await state.focus(food.id);
    const bread = state.focused!.children.find((c) => c.label === "bread")!;
    await state.focus(bread.id);
    const rye = state.focused!.children.find(
      (c) => c.label === "rye bread")!;
    await state.focus(rye.id);
    expect(state.badge("de")).toBe("lexicalized");
    expect(state.badge("mhn")).toBe("missing");
  });

  it("distinguishes the asserted gap on pastry", async () => {
    const rye = state.focused!;
    const pastry = await findConcept(client, "pastry");
    await state.focus(pastry.id);
    expect(state.badge("mhn")).toBe("gap");
    await state.focus(rye.id);
  });

  it("adding a Mòcheno word flips the badge and raises coverage", async () => {
    const before = state.dashboard!.coverage.per_language.mhn;
    const outcome = await state.submit({
      ...emptyForm("mhn"), lemma: "roggenproat", contributor: "anna",
    });
    expect(outcome.ok).toBe(true);
    expect(state.badge("mhn")).toBe("lexicalized");
    expect(state.dashboard!.coverage.per_language.mhn)
      .toBeGreaterThan(before);
    expect(state.feed.at(-1)).toMatchObject({
      contributor: "anna", action: "lexicalize", status: "ok",
    });
  });

  it("marking a gap on a lexicalized pair is rejected inline, with no " +
     "store change", async () => {
    const logBefore = await client.changelog();
    const outcome = await state.submit({
      ...emptyForm("mhn"), action: "mark_gap", contributor: "berta",
    });
    expect(outcome.ok).toBe(false);
    if (!outcome.ok) {
      expect(outcome.error.field).toBe("gap");
      expect(outcome.error.code).toBe("SENSE_CONFLICT");
    }
    // still lexicalized, and the only new log entry is the failed attempt
    await state.focus(state.focused!.id);
    expect(state.badge("mhn")).toBe("lexicalized");
    const logAfter = await client.changelog();
    expect(logAfter.length).toBe(logBefore.length + 1);
    expect(logAfter.at(-1)).toMatchObject({
      status: "error", error_code: "SENSE_CONFLICT", contributor: "berta",
    });
  });

  it("dashboard numbers come from the service verbatim", async () => {
    const coverage = await client.coverage(state.capability,
                                           state.pair ?? undefined);
    const bias = await client.bias(state.capability,
                                   state.pair ?? undefined);
    expect(state.dashboard!.coverage).toEqual(coverage);
    expect(state.dashboard!.bias).toEqual(bias);
  });
});
