// Browser bootstrap: a login-less role chooser (the chosen actor id rides
// the X-Actor header), then contributor, validator, and exploration panels.

import { ApiClient } from "./api.js";
import { ContributorFlow } from "./contributorFlow.js";
import { DecisionFormModel } from "./decisionForm.js";
import {
  buildMatrixView,
  renderHeatmap,
  renderMatrixView,
  renderPanorama,
} from "./explore.js";
import { escapeHtml } from "./render.js";
import { renderQueueRow, TaskQueueModel } from "./taskQueue.js";
import { ValidatorFlow } from "./validatorFlow.js";

interface Session {
  actor: string;
  role: "contributor" | "lexicon-validator" | "concept-validator" | "explorer";
  taskId: string;
}

function pane(): HTMLElement {
  const element = document.getElementById("main");
  if (!element) throw new Error("missing #main");
  return element;
}

function readSession(): Session {
  const form = document.getElementById("session") as HTMLFormElement;
  const data = new FormData(form);
  return {
    actor: String(data.get("actor") ?? ""),
    role: (data.get("role") as Session["role"]) ?? "explorer",
    taskId: String(data.get("task") ?? ""),
  };
}

async function showQueue(api: ApiClient): Promise<void> {
  pane().onclick = null;
  const queue = new TaskQueueModel(api);
  const rows = await queue.load();
  pane().innerHTML =
    `<table class="tasks"><thead><tr><th>task</th><th>lexicon</th>` +
    `<th>subdomains</th><th>items</th></tr></thead><tbody>` +
    rows.map(renderQueueRow).join("") +
    `</tbody></table>`;
}

async function showContributor(api: ApiClient, session: Session): Promise<void> {
  pane().onclick = null;
  const flow = new ContributorFlow(api, session.taskId);
  await flow.load();
  const renderCurrent = async () => {
    const item = flow.current;
    if (!item) {
      pane().innerHTML = `<p>queue empty — ${flow.remaining} items left</p>`;
      return;
    }
    const concept = await api.panorama(item.concept).catch(() => null);
    const notes = flow
      .validatorNotes(item)
      .map(
        (note) =>
          `<li><strong>${escapeHtml(note.verdict)}</strong> ` +
          `${escapeHtml(note.comment ?? "")}</li>`,
      )
      .join("");
    pane().innerHTML = `
      <h2>${escapeHtml(item.concept)} <small>${escapeHtml(item.state)}</small></h2>
      <p>${escapeHtml(concept?.gloss_std ?? "")}</p>
      <p><em>${escapeHtml(concept?.gloss_en ?? "")}</em></p>
      <ul class="validator-notes">${notes}</ul>
      <form id="decision">
        <label><input type="radio" name="type" value="word"> word</label>
        <label><input type="radio" name="type" value="gap"> gap</label>
        <label><input type="radio" name="type" value="skip"> skip</label>
        <label><input type="radio" name="type" value="new-concept"> new concept</label>
        <input name="lemma" placeholder="lemma" dir="auto">
        <input name="definition" placeholder="definition (new concepts)" dir="auto">
        <input name="comment" placeholder="comment">
        <fieldset><legend>evidence</legend>
          <input name="dictionary" placeholder="dictionary name">
          <label><input type="checkbox" name="wiktionary"> Wiktionary</label>
          <input name="typology" placeholder="typology dataset">
          <input name="qwith" placeholder="query with diacritics" dir="auto">
          <input name="hwith" placeholder="hits">
          <input name="qwithout" placeholder="query without diacritics" dir="auto">
          <input name="hwithout" placeholder="hits">
        </fieldset>
        <button type="submit" disabled>submit</button>
      </form>
      <p class="flash">${escapeHtml(flow.lastError ?? "")}</p>`;
    const form = document.getElementById("decision") as HTMLFormElement;
    const model = concept
      ? new DecisionFormModel(concept, item.subdomain ?? undefined)
      : null;
    const button = form.querySelector("button") as HTMLButtonElement;
    const sync = () => {
      if (!model) return;
      const data = new FormData(form);
      model.answerType = (data.get("type") as never) ?? null;
      model.lemma = String(data.get("lemma") ?? "");
      model.definition = String(data.get("definition") ?? "");
      model.comment = String(data.get("comment") ?? "");
      model.dictionaryName = String(data.get("dictionary") ?? "");
      model.wiktionary = data.get("wiktionary") !== null;
      model.typologySource = String(data.get("typology") ?? "");
      model.searchHits = {
        queryWithDiacritics: String(data.get("qwith") ?? ""),
        hitsWith: String(data.get("hwith") ?? ""),
        queryWithout: String(data.get("qwithout") ?? ""),
        hitsWithout: String(data.get("hwithout") ?? ""),
      };
      button.disabled = !model.canSubmit;
    };
    form.addEventListener("input", sync);
    form.addEventListener("submit", async (event) => {
      event.preventDefault();
      if (!model || !model.canSubmit) return;
      await flow.submit(model);
      if (flow.needsReload) await flow.load();
      await renderCurrent();
    });
  };
  await renderCurrent();
}

async function showValidator(api: ApiClient, session: Session): Promise<void> {
  const flow = new ValidatorFlow(api, session.taskId);
  await flow.load();
  const lexRows = flow.lexiconQueue
    .map(
      (item) =>
        `<tr data-concept="${escapeHtml(item.concept)}">` +
        `<td>${escapeHtml(item.concept)}</td>` +
        `<td>${escapeHtml(item.answer?.kind ?? "")}</td>` +
        `<td dir="auto">${escapeHtml(item.answer?.lemma ?? "")}</td>` +
        `<td><button data-verdict="correct">correct</button>` +
        `<button data-verdict="incorrect">incorrect</button>` +
        `<button data-verdict="unclear">unclear</button></td></tr>`,
    )
    .join("");
  const conceptRows = flow.conceptQueue
    .map(
      (item) =>
        `<tr data-concept="${escapeHtml(item.concept)}">` +
        `<td>${escapeHtml(item.concept)}</td>` +
        `<td dir="auto">${escapeHtml(item.answer?.lemma ?? "")}</td>` +
        `<td>${escapeHtml(item.answer?.definition ?? "")}</td>` +
        `<td><button data-verdict="accept">accept</button>` +
        `<button data-verdict="not-new">not new</button>` +
        `<button data-verdict="reject">reject</button></td></tr>`,
    )
    .join("");
  pane().innerHTML = `
    <h2>lexicon review</h2>
    <table id="lexicon-queue"><tbody>${lexRows}</tbody></table>
    <h2>concept review</h2>
    <table id="concept-queue"><tbody>${conceptRows}</tbody></table>
    <p class="flash"></p>`;
  // property assignment, not addEventListener: re-renders must replace the
  // handler instead of stacking a second one that would double-post
  pane().onclick = async (event) => {
    const target = event.target as HTMLElement;
    const verdict = target.dataset["verdict"];
    const row = target.closest("tr");
    const concept = row?.dataset["concept"];
    if (!verdict || !concept) return;
    if (verdict === "correct") {
      await flow.reviewLexicon(concept, { verdict: "correct" });
    } else if (verdict === "incorrect") {
      const comment = prompt("why is it incorrect?") ?? "incorrect";
      await flow.reviewLexicon(concept, { verdict: "incorrect", comment });
    } else if (verdict === "unclear") {
      await flow.reviewLexicon(concept, { verdict: "unclear" });
    } else if (verdict === "accept") {
      const dialog = await flow.acceptProposal(concept);
      if (dialog) {
        const parents = prompt("parent concept ids (comma-separated)?") ?? "";
        dialog.parents = parents.split(",").map((p) => p.trim()).filter(Boolean);
        dialog.promote = confirm("place in the shared concept layer?");
        await flow.completeMerge(dialog);
      }
    } else if (verdict === "not-new") {
      const existing = prompt("existing concept id?") ?? "";
      if (existing) await flow.confirmNotNew(concept, existing);
    } else if (verdict === "reject") {
      const comment = prompt("reason?") ?? "not accepted";
      await flow.rejectProposal(concept, comment);
    }
    const flash = pane().querySelector(".flash");
    if (flash) flash.textContent = flow.lastError ?? "";
    await showValidator(api, session);
  };
}

async function showExplore(api: ApiClient): Promise<void> {
  pane().innerHTML = `
    <form id="explore">
      <input name="concept" placeholder="concept id">
      <input name="langs" placeholder="langs (comma-separated)">
      <input name="concepts" placeholder="matrix concepts (comma-separated)">
      <button data-view="panorama">panorama</button>
      <button data-view="heatmap">heatmap</button>
      <button data-view="matrix">matrix</button>
    </form>
    <div id="explore-out"></div>`;
  const out = document.getElementById("explore-out") as HTMLElement;
  const form = document.getElementById("explore") as HTMLFormElement;
  form.addEventListener("click", async (event) => {
    const view = (event.target as HTMLElement).dataset["view"];
    if (!view) return;
    event.preventDefault();
    const data = new FormData(form);
    const langs = String(data.get("langs") ?? "").split(",").map((c) => c.trim())
      .filter(Boolean);
    if (view === "panorama") {
      out.innerHTML = renderPanorama(await api.panorama(String(data.get("concept"))));
    } else if (view === "heatmap") {
      out.innerHTML = renderHeatmap(await api.overlap(langs, { universe: "extended" }));
    } else {
      const concepts = String(data.get("concepts") ?? "").split(",")
        .map((c) => c.trim()).filter(Boolean);
      out.innerHTML = renderMatrixView(await buildMatrixView(api, concepts, langs));
    }
  });
}

export function start(): void {
  const form = document.getElementById("session") as HTMLFormElement;
  // point at a remote API with ?api=http://host:port (same origin by default)
  const apiBase = new URLSearchParams(window.location.search).get("api") ?? "";
  form.addEventListener("submit", async (event) => {
    event.preventDefault();
    const session = readSession();
    const api = new ApiClient(apiBase, (...args) => fetch(...args), session.actor);
    if (session.role === "contributor" && session.taskId) {
      await showContributor(api, session);
    } else if (
      (session.role === "lexicon-validator" || session.role === "concept-validator") &&
      session.taskId
    ) {
      await showValidator(api, session);
    } else {
      await showQueue(api).catch(() => undefined);
      await showExplore(api);
    }
  });
}

if (typeof document !== "undefined" && document.getElementById("session")) {
  start();
}
