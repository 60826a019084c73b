/** Typed HTTP client for the lexdiv service.
 *
 * The editor talks to the server exclusively through this module; every
 * number and badge shown in the UI originates from one of these responses.
 */

export interface Language {
  id: number;
  code: string;
  name: string;
  role: string;
}

export interface SenseInfo {
  id: number;
  lemma: string;
  language: string;
  concept: number;
}

export interface LocalConceptInfo {
  id: number;
  gloss: string | null;
  lemmas: string[];
}

export type LexStatus = "lexicalized" | "gap" | "missing";

export interface Lexicalization {
  language: string;
  status: LexStatus;
  senses: SenseInfo[];
  concept_id?: number;
  gloss?: string | null;
  local_concepts?: LocalConceptInfo[];
}

export interface ConceptRef {
  id: number;
  label: string | null;
}

export interface ConceptDetail {
  id: number;
  label: string | null;
  parents: number[];
  children: ConceptRef[];
  lexicalizations: Lexicalization[];
}

export interface SearchHit extends SenseInfo {
  interlingual: number;
  gloss: string | null;
}

export interface Page<T> {
  page: number;
  page_size: number;
  total: number;
  items: T[];
}

export interface CoverageReport {
  per_language: Record<string, number>;
  overall: number;
  counts: Record<string, [number, number]>;
  overall_counts: [number, number];
}

export interface BiasReport {
  bias: number;
  mean: number;
  n: number;
  per_language: Record<string, number>;
}

export type EditAction =
  | "add_language"
  | "add_interlingual_concept"
  | "add_semantic_relation"
  | "lexicalize"
  | "mark_gap"
  | "add_local_concept"
  | "add_sense"
  | "add_lexical_link";

export interface EditResult {
  seq: number;
  status: string;
  result: Record<string, unknown>;
}

export interface ChangelogEvent {
  seq: number;
  contributor: string;
  timestamp: string;
  action: string;
  args: Record<string, unknown>;
  status: "ok" | "error";
  error_code: string | null;
  result: Record<string, unknown> | null;
}

/** Error body the server attaches to 4xx responses. */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
    readonly location: string | null = null,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export type FetchLike = (
  input: string,
  init?: RequestInit,
) => Promise<Response>;

export class Client {
  constructor(
    readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, init);
    let body: unknown = null;
    try {
      body = await response.json();
    } catch {
      // non-JSON body; fall through to the status check
    }
    if (!response.ok) {
      const err = (body ?? {}) as Record<string, unknown>;
      throw new ApiError(
        response.status,
        typeof err.code === "string" ? err.code : `HTTP_${response.status}`,
        typeof err.message === "string" ? err.message : response.statusText,
        typeof err.location === "string" ? err.location : null,
      );
    }
    return body as T;
  }

  languages(): Promise<Language[]> {
    return this.request("/languages");
  }

  concepts(opts: { page?: number; pageSize?: number; roots?: boolean } = {}):
      Promise<Page<ConceptRef>> {
    const params = new URLSearchParams();
    if (opts.page) params.set("page", String(opts.page));
    if (opts.pageSize) params.set("page_size", String(opts.pageSize));
    if (opts.roots) params.set("roots", "true");
    const query = params.toString();
    return this.request(`/concepts${query ? "?" + query : ""}`);
  }

  concept(id: number): Promise<ConceptDetail> {
    return this.request(`/concepts/${id}`);
  }

  search(lemma: string, language?: string): Promise<Page<SearchHit>> {
    const params = new URLSearchParams({ lemma });
    if (language) params.set("language", language);
    return this.request(`/search?${params}`);
  }

  coverage(capability = "full", langs?: string[]): Promise<CoverageReport> {
    return this.request(`/coverage?${this.reportParams(capability, langs)}`);
  }

  bias(capability = "full", langs?: string[]): Promise<BiasReport> {
    return this.request(`/bias?${this.reportParams(capability, langs)}`);
  }

  private reportParams(capability: string, langs?: string[]): URLSearchParams {
    const params = new URLSearchParams({ capability });
    if (langs && langs.length) params.set("langs", langs.join(","));
    return params;
  }

  submitEdit(
    contributor: string,
    action: EditAction,
    args: Record<string, unknown>,
  ): Promise<EditResult> {
    return this.request("/edits", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ contributor, action, args }),
    });
  }

  changelog(since = 0): Promise<ChangelogEvent[]> {
    return this.request(`/changelog?since=${since}`);
  }
}
