// Typed client for the lint service. The UI does no rule logic of its
// own; everything shown comes verbatim from these responses.

export type Language = "python" | "java";

export interface MistakeEntry {
  rule: string;
  title: string;
  function: string | null;
  line: number | null;
  col: number | null;
  message: string;
}

export interface Report {
  source: string;
  language: string;
  parse_ok: boolean;
  parse_error: string | null;
  mistakes: MistakeEntry[];
  counts: Record<string, number>;
}

export interface RuleEntry {
  code: string;
  title: string;
  message_template: string;
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

async function errorMessage(response: Response): Promise<string> {
  try {
    const body = (await response.json()) as { error?: string };
    if (body && typeof body.error === "string") {
      return body.error;
    }
  } catch {
    // fall through to the generic message
  }
  return `service replied with HTTP ${response.status}`;
}

export async function lintSource(
  baseUrl: string,
  language: Language,
  source: string,
  fetchImpl: FetchLike = fetch,
): Promise<Report> {
  const response = await fetchImpl(`${baseUrl}/api/lint`, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify({ language, source }),
  });
  if (!response.ok) {
    throw new Error(await errorMessage(response));
  }
  return (await response.json()) as Report;
}

export async function fetchRules(
  baseUrl: string,
  language: Language | null,
  fetchImpl: FetchLike = fetch,
): Promise<RuleEntry[]> {
  const query = language ? `?lang=${language}` : "";
  const response = await fetchImpl(`${baseUrl}/api/rules${query}`);
  if (!response.ok) {
    throw new Error(await errorMessage(response));
  }
  return (await response.json()) as RuleEntry[];
}
