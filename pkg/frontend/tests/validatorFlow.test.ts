// Validator flows: verdict buttons map to the right endpoints with
// schema-valid bodies, unclear routes to the concept queue, accepting a
// proposal opens a merge dialog whose confirmation POSTs /concepts/merge,
// and correct-but-not-new retargets after the picker confirmation.

import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { endpointSchemas } from "../src/schemas.js";
import type { ItemDoc } from "../src/types.js";
import { ValidatorFlow } from "../src/validatorFlow.js";
import { pendingItem } from "./fixtures.js";
import { MockApi } from "./mockApi.js";

function answeredItem(concept: string, kind: "word" | "gap" | "new-concept",
                      lemma?: string, definition?: string): ItemDoc {
  return {
    ...pendingItem(concept, "uncle-aunt"),
    state: kind === "new-concept" ? "in-concept-review" : "answered",
    answer: {
      kind,
      lemma: lemma ?? null,
      definition: definition ?? null,
      comment: null,
      evidence: [],
    },
  };
}

function validatorServer(mock: MockApi, items: ItemDoc[]) {
  mock.route("GET", /^\/tasks\/t9\/items$/, (request) => {
    const url = new URL(request.url, "http://test");
    const state = url.searchParams.get("state");
    return {
      json: { task: "t9", items: items.filter((i) => !state || i.state === state) },
    };
  });
  mock.route("POST", /lexicon-review$/, (request) => {
    const concept = decodeURIComponent(request.path.split("/")[4] ?? "");
    const verdict = (request.body as { verdict: string }).verdict;
    const state =
      verdict === "correct" ? "lexicon-approved"
      : verdict === "incorrect" ? "needs-revision"
      : "in-concept-review";
    return { json: { concept, state } };
  });
  mock.route("POST", /concept-review$/, (request) => {
    const concept = decodeURIComponent(request.path.split("/")[4] ?? "");
    const verdict = (request.body as { verdict: string }).verdict;
    const state =
      verdict === "accept" ? "lexicon-approved"
      : verdict === "correct-but-not-new" ? "in-lexicon-review"
      : "needs-revision";
    return { json: { concept, state } };
  });
  mock.route("POST", /integrate$/, (request) => ({
    json: {
      concept: decodeURIComponent(request.path.split("/")[4] ?? ""),
      state: "integrated",
    },
  }));
  mock.route("POST", /^\/concepts\/merge$/, (request) => ({
    json: {
      new_id: (request.body as { new_id?: string }).new_id ?? "merged-1",
      origin: null,
      followups: [],
    },
  }));
}

describe("validator flow", () => {
  it("reviews words, routes unclear to the concept queue, integrates approvals", async () => {
    const mock = new MockApi();
    const items = [
      answeredItem("paternal-uncle", "word", "عمّ"),
      answeredItem("maternal-uncle", "word", "خال"),
      answeredItem("granduncle", "gap"),
    ];
    validatorServer(mock, items);
    const api = new ApiClient("", mock.fetch, "expert");
    const flow = new ValidatorFlow(api, "t9");
    await flow.load();
    expect(flow.lexiconQueue).toHaveLength(3);
    expect(flow.conceptQueue).toHaveLength(0);

    expect(await flow.reviewLexicon("paternal-uncle", { verdict: "correct" }))
      .toBe("lexicon-approved");
    expect(flow.approved.map((i) => i.concept)).toContain("paternal-uncle");
    expect(await flow.integrate("paternal-uncle")).toBe("integrated");

    expect(
      await flow.reviewLexicon("maternal-uncle", {
        verdict: "incorrect",
        comment: "wrong side of the family",
        correction: { type: "word", lemma: "خال" },
      }),
    ).toBe("needs-revision");

    expect(await flow.reviewLexicon("granduncle", { verdict: "unclear" }))
      .toBe("in-concept-review");
    expect(flow.conceptQueue.map((i) => i.concept)).toContain("granduncle");
    expect(flow.lexiconQueue).toHaveLength(0);

    for (const post of mock.posts()) {
      if (post.path.endsWith("lexicon-review")) {
        expect(() => endpointSchemas["lexicon-review"].parse(post.body)).not.toThrow();
        expect(post.headers["x-actor"]).toBe("expert");
      }
    }
  });

  it("accepting a proposal opens the merge dialog and posts the merge", async () => {
    const mock = new MockApi();
    const proposal = answeredItem(
      "new:gulu", "new-concept", "gulu", "parent's second eldest sibling",
    );
    validatorServer(mock, [proposal]);
    const api = new ApiClient("", mock.fetch, "concept-expert");
    const flow = new ValidatorFlow(api, "t9");
    await flow.load();
    expect(flow.conceptQueue).toHaveLength(1);

    const dialog = await flow.acceptProposal("new:gulu");
    expect(dialog).not.toBeNull();
    expect(dialog?.lemma).toBe("gulu");
    dialog!.parents = ["parents-elder-sibling"];
    dialog!.promote = true;
    const merged = await flow.completeMerge(dialog!);
    expect(merged).toBe("merged-1");

    const mergePost = mock.posts().find((p) => p.path === "/concepts/merge");
    expect(mergePost).toBeDefined();
    expect(() => endpointSchemas.merge.parse(mergePost!.body)).not.toThrow();
    expect(mergePost!.body).toMatchObject({
      task: "t9",
      concept: "new:gulu",
      parents: ["parents-elder-sibling"],
      promote: true,
    });
  });

  it("correct-but-not-new retargets onto the picked concept", async () => {
    const mock = new MockApi();
    const proposal = answeredItem("new:twin", "new-concept", "توأم", "same birth");
    validatorServer(mock, [proposal]);
    const api = new ApiClient("", mock.fetch, "concept-expert");
    const flow = new ValidatorFlow(api, "t9");
    await flow.load();

    expect(await flow.confirmNotNew("new:twin", "twin-sibling"))
      .toBe("in-lexicon-review");
    expect(flow.lexiconQueue.map((i) => i.concept)).toContain("twin-sibling");

    const post = mock.posts().find((p) => p.path.endsWith("concept-review"));
    expect(() => endpointSchemas["concept-review"].parse(post!.body)).not.toThrow();
    expect(post!.body).toMatchObject({
      verdict: "correct-but-not-new",
      existing: "twin-sibling",
    });
  });

  it("schema stops incorrect verdicts without comments client-side", async () => {
    const mock = new MockApi();
    validatorServer(mock, [answeredItem("paternal-uncle", "word", "عم")]);
    const api = new ApiClient("", mock.fetch, "expert");
    const flow = new ValidatorFlow(api, "t9");
    await flow.load();
    await expect(
      flow.reviewLexicon("paternal-uncle", { verdict: "incorrect" }),
    ).rejects.toThrow();
    expect(mock.posts()).toHaveLength(0); // nothing left the client
  });

  it("409 conflicts surface as a reload prompt", async () => {
    const mock = new MockApi();
    mock.route("GET", /items$/, () => ({
      json: { task: "t9", items: [answeredItem("paternal-uncle", "word", "عم")] },
    }));
    mock.route("POST", /lexicon-review$/, () => ({
      status: 409,
      json: { code: "wrong-state", message: "moved on" },
    }));
    const api = new ApiClient("", mock.fetch, "expert");
    const flow = new ValidatorFlow(api, "t9");
    await flow.load();
    expect(await flow.reviewLexicon("paternal-uncle", { verdict: "correct" }))
      .toBeNull();
    expect(flow.needsReload).toBe(true);
    expect(flow.lastError).toBe("item changed, reload");
  });
});
