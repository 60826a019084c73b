/** Browser bootstrap: wires the view model to the page.
 *
 * The base URL defaults to the origin serving the page (the service mounts
 * this bundle at /) and can be overridden with ?api=<url>.
 */

import { Client } from "./api.js";
import {
  renderConcept,
  renderDashboard,
  renderFeed,
  renderInlineError,
} from "./render.js";
import { EditorState, EditForm, InlineError } from "./viewmodel.js";

function baseUrl(): string {
  const override = new URLSearchParams(window.location.search).get("api");
  return (override ?? window.location.origin).replace(/\/$/, "");
}

async function start(): Promise<void> {
  const state = new EditorState(new Client(baseUrl()));
  const el = (id: string) => document.getElementById(id) as HTMLElement;
  let formError: InlineError | null = null;

  function render(): void {
    el("banner").textContent = state.banner ?? "";
    el("banner").hidden = state.banner === null;
    el("concept").innerHTML = state.focused
      ? renderConcept(state.focused)
      : "<p class='guidance'>Pick a concept to start browsing.</p>";
    el("dashboard").innerHTML = renderDashboard(state.dashboard,
                                                state.guidance);
    el("feed").innerHTML = renderFeed(state.feed);
    el("form-error").innerHTML = renderInlineError(formError);
    for (const input of document.querySelectorAll("[data-form-field]")) {
      input.classList.toggle(
        "invalid",
        formError !== null &&
          input.getAttribute("data-form-field") === formError.field);
    }
  }

  el("concept").addEventListener("click", async (event) => {
    const link = (event.target as HTMLElement).closest("[data-concept]");
    if (!link) return;
    event.preventDefault();
    await state.focus(Number(link.getAttribute("data-concept")));
    render();
  });

  el("edit-form").addEventListener("submit", async (event) => {
    event.preventDefault();
    const read = (name: string) =>
      (document.querySelector(`[name=${name}]`) as HTMLInputElement).value;
    const form: EditForm = {
      action: read("action") as EditForm["action"],
      language: read("language"),
      lemma: read("lemma"),
      gloss: read("gloss"),
      contributor: read("contributor"),
    };
    const outcome = await state.submit(form);
    formError = outcome.ok ? null : outcome.error;
    render();
  });

  await state.init();
  const roots = await state.client.concepts({ roots: true });
  if (roots.items.length) await state.focus(roots.items[0].id);
  const languageSelect = document.querySelector(
    "[name=language]") as HTMLSelectElement;
  languageSelect.innerHTML = state.languages
    .map((l) => `<option value="${l.code}">${l.code}</option>`)
    .join("");
  if (state.pair) languageSelect.value = state.pair[1];
  render();
}

start();
