// The contributor decision loop against a mocked API: one item is driven
// pending -> answered -> needs-revision -> answered -> integrated, and every
// POST body the UI emits must satisfy the endpoint schema.

import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { ContributorFlow } from "../src/contributorFlow.js";
import { DecisionFormModel } from "../src/decisionForm.js";
import { answerBodySchema, endpointSchemas } from "../src/schemas.js";
import type { ItemDoc, ItemState } from "../src/types.js";
import { panoramaFor, pendingItem } from "./fixtures.js";
import { MockApi } from "./mockApi.js";

function itemServer(mock: MockApi, taskId: string, item: ItemDoc) {
  const states: ItemState[] = [item.state];
  mock.route("GET", new RegExp(`^/tasks/${taskId}/items$`), (request) => {
    const url = new URL(request.url, "http://test");
    const state = url.searchParams.get("state");
    return {
      json: {
        task: taskId,
        items: !state || state === item.state ? [item] : [],
      },
    };
  });
  mock.route(
    "POST",
    new RegExp(`^/tasks/${taskId}/items/[^/]+/answer$`),
    () => {
      item.state = "answered";
      item.history = [
        ...item.history,
        {
          seq: item.history.length,
          at: 0,
          actor: "speaker",
          transition: "answer",
          comment: null,
          detail: {},
        },
      ];
      states.push(item.state);
      return { json: { concept: item.concept, state: item.state } };
    },
  );
  return {
    states,
    validatorMarksIncorrect(comment: string) {
      item.state = "needs-revision";
      item.revision_count += 1;
      item.history = [
        ...item.history,
        {
          seq: item.history.length,
          at: 0,
          actor: "expert",
          transition: "lexicon-review",
          comment,
          detail: { verdict: "incorrect", correction: null },
        },
      ];
      states.push(item.state);
    },
    validatorApprovesAndIntegrates() {
      item.state = "integrated";
      states.push(item.state);
    },
  };
}

describe("contributor decision loop", () => {
  it("drives pending -> answered -> needs-revision -> answered -> integrated", async () => {
    const mock = new MockApi();
    const item = pendingItem("maternal-grandmother", "grandparents");
    const server = itemServer(mock, "t1", item);
    const api = new ApiClient("", mock.fetch, "speaker");
    const flow = new ContributorFlow(api, "t1");

    await flow.load();
    expect(flow.current?.concept).toBe("maternal-grandmother");
    expect(flow.current?.state).toBe("pending");

    // first round: the contributor offers a word
    const panorama = panoramaFor("sibling");
    const form = new DecisionFormModel({ ...panorama, concept: item.concept });
    expect(form.canSubmit).toBe(false); // nothing chosen yet
    form.answerType = "word";
    form.lemma = "مانّي";
    form.dictionaryName = "Dictionnaire local";
    expect(form.canSubmit).toBe(true);
    expect(await flow.submit(form)).toBe("answered");

    // a validator rejects it out of band; the flow reloads the revision queue
    server.validatorMarksIncorrect("it is a gap");
    await flow.load();
    expect(flow.current?.state).toBe("needs-revision");
    const notes = flow.validatorNotes(flow.current!);
    expect(notes).toHaveLength(1);
    expect(notes[0]?.verdict).toBe("incorrect");
    expect(notes[0]?.comment).toBe("it is a gap");

    // second round: the contributor follows the correction and asserts a gap
    const revision = new DecisionFormModel({ ...panorama, concept: item.concept });
    revision.answerType = "gap";
    revision.comment = "validator was right";
    expect(await flow.submit(revision)).toBe("answered");

    server.validatorApprovesAndIntegrates();
    await flow.load();
    expect(flow.current).toBeNull();

    expect(server.states).toEqual([
      "pending", "answered", "needs-revision", "answered", "integrated",
    ]);

    // every POST the UI sent matches the endpoint schema
    const posts = mock.posts();
    expect(posts).toHaveLength(2);
    for (const post of posts) {
      expect(post.path.endsWith("/answer")).toBe(true);
      expect(() => endpointSchemas.answer.parse(post.body)).not.toThrow();
      expect(post.headers["x-actor"]).toBe("speaker");
    }
    expect(posts[0]?.body).toMatchObject({
      type: "word",
      lemma: "مانّي",
      evidence: [{ kind: "dictionary", name: "Dictionnaire local" }],
    });
    expect(posts[1]?.body).toMatchObject({ type: "gap", comment: "validator was right" });
  });

  it("surfaces 409 conflicts as a reload prompt", async () => {
    const mock = new MockApi();
    const item = pendingItem("sibling");
    mock.route("GET", /^\/tasks\/t1\/items$/, () => ({
      json: { task: "t1", items: [item] },
    }));
    mock.route("POST", /answer$/, () => ({
      status: 409,
      json: { code: "wrong-state", message: "item sibling is integrated" },
    }));
    const api = new ApiClient("", mock.fetch, "speaker");
    const flow = new ContributorFlow(api, "t1");
    await flow.load();
    const outcome = await flow.skip("giving up");
    expect(outcome).toBeNull();
    expect(flow.needsReload).toBe(true);
    expect(flow.lastError).toBe("item changed, reload");
  });

  it("rejects malformed bodies before they reach the network", () => {
    expect(() => answerBodySchema.parse({ type: "word" })).toThrow();
    expect(() =>
      answerBodySchema.parse({ type: "new-concept", lemma: "gulu" }),
    ).toThrow();
    expect(() =>
      answerBodySchema.parse({
        type: "new-concept",
        lemma: "gulu",
        definition: "parent's second eldest sibling",
      }),
    ).not.toThrow();
  });
});
