/** View state of the editor, kept free of any DOM dependency.
 *
 * Everything displayed comes from service responses: the browser never
 * invents IDs and never computes coverage or bias itself. Edits are
 * pessimistic; a view only changes after the server confirms the write and
 * the affected resources have been re-fetched.
 */

import {
  ApiError,
  BiasReport,
  ChangelogEvent,
  Client,
  ConceptDetail,
  CoverageReport,
  EditAction,
  Language,
  LexStatus,
} from "./api.js";

export interface EditForm {
  action: "lexicalize" | "mark_gap" | "add_local_concept";
  language: string;
  lemma: string;
  gloss: string;
  contributor: string;
}

export function emptyForm(language = ""): EditForm {
  return { action: "lexicalize", language, lemma: "", gloss: "",
           contributor: "" };
}

export type FormField = "lemma" | "language" | "gap" | "concept"
  | "contributor";

/** Validation or server rejection, pinned to the field that caused it. */
export interface InlineError {
  field: FormField;
  code: string;
  message: string;
}

export type SubmitOutcome =
  | { ok: true; seq: number }
  | { ok: false; error: InlineError };

export interface Dashboard {
  capability: string;
  languages: string[];
  coverage: CoverageReport;
  bias: BiasReport;
}

const FIELD_BY_CODE: Record<string, FormField> = {
  GAP_CONFLICT: "lemma",
  DUPLICATE_SENSE: "lemma",
  SENSE_CONFLICT: "gap",
  DUPLICATE_GAP: "gap",
  UNKNOWN_LANGUAGE: "language",
  MISSING_CONTRIBUTOR: "contributor",
};

export class EditorState {
  languages: Language[] = [];
  /** [trade language, local language] driving the dashboard. */
  pair: [string, string] | null = null;
  focused: ConceptDetail | null = null;
  form: EditForm = emptyForm();
  dashboard: Dashboard | null = null;
  /** Guidance text shown instead of the dashboard (e.g. one language). */
  guidance: string | null = null;
  /** Connectivity banner; browsing state is preserved underneath it. */
  banner: string | null = null;
  feed: ChangelogEvent[] = [];
  capability = "no-gaps";
  private lastSeq = 0;

  constructor(readonly client: Client) {}

  async init(): Promise<void> {
    this.languages = await this.client.languages();
    this.pair = defaultPair(this.languages);
    this.form = emptyForm(this.pair ? this.pair[1] : "");
    if (this.pair === null) {
      this.guidance =
        "Select at least two languages to see coverage and bias.";
    } else {
      await this.refreshDashboard();
    }
    await this.refreshFeed();
  }

  /** Fetch and focus a concept; on failure keep the current view. */
  async focus(conceptId: number): Promise<void> {
    try {
      this.focused = await this.client.concept(conceptId);
      this.banner = null;
    } catch (err) {
      this.banner = describeFailure(err);
    }
  }

  /** Lexicalization badge of the focused concept in one language. */
  badge(language: string): LexStatus | null {
    const entry = this.focused?.lexicalizations.find(
      (l) => l.language === language);
    return entry ? entry.status : null;
  }

  /** Client-side checks; null means the form may be submitted. */
  validate(form: EditForm): InlineError | null {
    if (this.focused === null) {
      return { field: "concept", code: "NO_CONCEPT",
               message: "Select a concept first." };
    }
    if (!form.contributor.trim()) {
      return { field: "contributor", code: "MISSING_CONTRIBUTOR",
               message: "Enter your contributor name." };
    }
    if (!form.language) {
      return { field: "language", code: "MISSING_LANGUAGE",
               message: "Select a language." };
    }
    if (form.action !== "mark_gap" && !form.lemma.trim()) {
      return { field: "lemma", code: "MISSING_LEMMA",
               message: "Enter a word form." };
    }
    return null;
  }

  /** Submit the pending edit. The server is authoritative: on success the
   * focused concept, dashboard and activity feed are re-fetched before the
   * caller re-renders; on rejection nothing changed server-side and the
   * error is attached to the offending field. */
  async submit(form: EditForm): Promise<SubmitOutcome> {
    const invalid = this.validate(form);
    if (invalid) return { ok: false, error: invalid };
    const concept = this.focused as ConceptDetail;
    const { action, args } = editRequest(form, concept);
    try {
      const result = await this.client.submitEdit(
        form.contributor.trim(), action, args);
      this.banner = null;
      await this.focus(concept.id);
      await this.refreshDashboard();
      await this.refreshFeed();
      return { ok: true, seq: result.seq };
    } catch (err) {
      if (err instanceof ApiError) {
        const field = FIELD_BY_CODE[err.code]
          ?? (form.action === "mark_gap" ? "gap" : "lemma");
        await this.refreshFeed(); // rejected attempts appear in the log too
        return { ok: false,
                 error: { field, code: err.code, message: err.message } };
      }
      this.banner = describeFailure(err);
      return { ok: false, error: { field: "concept", code: "OFFLINE",
                                   message: this.banner } };
    }
  }

  async refreshDashboard(): Promise<void> {
    if (this.pair === null) return;
    try {
      const langs = [...this.pair];
      this.dashboard = {
        capability: this.capability,
        languages: langs,
        coverage: await this.client.coverage(this.capability, langs),
        bias: await this.client.bias(this.capability, langs),
      };
      this.guidance = null;
    } catch (err) {
      if (err instanceof ApiError && err.code === "TOO_FEW_LANGUAGES") {
        this.dashboard = null;
        this.guidance =
          "Select at least two languages to see coverage and bias.";
      } else {
        this.banner = describeFailure(err);
      }
    }
  }

  /** Pull changelog entries newer than the last one seen. */
  async refreshFeed(): Promise<void> {
    try {
      const fresh = await this.client.changelog(this.lastSeq);
      if (fresh.length) {
        this.feed = [...this.feed, ...fresh];
        this.lastSeq = fresh[fresh.length - 1].seq;
      }
    } catch (err) {
      this.banner = describeFailure(err);
    }
  }

  setLanguagePair(trade: string, local: string): Promise<void> {
    this.pair = [trade, local];
    this.form.language = local;
    return this.refreshDashboard();
  }
}

/** First trade language plus first non-trade language, in listing order. */
export function defaultPair(
  languages: Language[],
): [string, string] | null {
  const trade = languages.find((l) => l.role === "trade");
  const local = languages.find((l) => l !== trade && l.role !== "trade")
    ?? languages.find((l) => l !== trade);
  return trade && local ? [trade.code, local.code] : null;
}

/** Translate a form into the wire action against the focused concept. */
export function editRequest(
  form: EditForm,
  concept: ConceptDetail,
): { action: EditAction; args: Record<string, unknown> } {
  if (form.action === "mark_gap") {
    return { action: "mark_gap",
             args: { interlingual: concept.id, language: form.language } };
  }
  if (form.action === "add_local_concept") {
    const parent = concept.lexicalizations.find(
      (l) => l.language === form.language)?.concept_id;
    return {
      action: "add_local_concept",
      args: { language: form.language, parent,
              lemma: form.lemma.trim(),
              gloss: form.gloss.trim() || null },
    };
  }
  return {
    action: "lexicalize",
    args: { interlingual: concept.id, language: form.language,
            lemma: form.lemma.trim(),
            gloss: form.gloss.trim() || null },
  };
}

function describeFailure(err: unknown): string {
  const detail = err instanceof Error ? err.message : String(err);
  return `Cannot reach the lexicon service (${detail}). ` +
    "Your view is unchanged; retry when the service is back.";
}
