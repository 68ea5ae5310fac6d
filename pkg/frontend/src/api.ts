// Client for the local compile service. All state lives server-side per
// request; this module only shapes requests and responses.

export interface CompileParams {
  speed: number;
  tune_volume: number;
  rhythm_volume: number;
  instrument: number;
  scale: string;
  rhythm: string;
  repeat: number;
}

export interface CompileRequest extends Partial<CompileParams> {
  tune: string;
  tempo: string;
}

export interface CompileResult {
  bytes: Uint8Array;
  totalTicks: number;
  byteCount: number;
}

export interface ValidationError {
  error_code: number;
  message: string;
  detail?: string;
}

export interface ValidationReport {
  ok: boolean;
  tune_count: number;
  tempo_count: number;
  errors: ValidationError[];
}

export interface LibraryEntry {
  id: string;
  title: string;
}

export interface LibrarySong extends LibraryEntry {
  tune: string;
  tempo: string;
  params: CompileParams;
}

export interface MetaTables {
  instruments: string[];
  scales: string[];
  rhythms: string[];
}

export class CompileError extends Error {
  constructor(
    readonly errorCode: number,
    message: string,
  ) {
    super(message);
  }
}

const DEFAULT_BASE = "http://127.0.0.1:8473";

/** Service origin: ?api=… wins, then a global override, then the default port. */
export function apiBase(): string {
  if (typeof window !== "undefined") {
    const fromQuery = new URLSearchParams(window.location.search).get("api");
    if (fromQuery) return fromQuery.replace(/\/$/, "");
    const fromGlobal = (window as { NMNC_API?: string }).NMNC_API;
    if (fromGlobal) return fromGlobal.replace(/\/$/, "");
  }
  return DEFAULT_BASE;
}

async function postJson(path: string, body: unknown): Promise<Response> {
  return fetch(apiBase() + path, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(body),
  });
}

export async function compile(request: CompileRequest): Promise<CompileResult> {
  const response = await postJson("/api/compile", request);
  if (response.status === 422) {
    const payload = (await response.json()) as ValidationError;
    throw new CompileError(payload.error_code, payload.message);
  }
  if (!response.ok) {
    throw new Error(`compile failed: HTTP ${response.status}`);
  }
  const bytes = new Uint8Array(await response.arrayBuffer());
  return {
    bytes,
    totalTicks: Number(response.headers.get("X-Total-Ticks") ?? 0),
    byteCount: Number(response.headers.get("X-Byte-Count") ?? bytes.length),
  };
}

export async function validate(tune: string, tempo: string): Promise<ValidationReport> {
  const response = await postJson("/api/validate", { tune, tempo });
  if (!response.ok) throw new Error(`validate failed: HTTP ${response.status}`);
  return (await response.json()) as ValidationReport;
}

export async function librarySongs(): Promise<LibraryEntry[]> {
  const response = await fetch(apiBase() + "/api/library");
  if (!response.ok) throw new Error(`library failed: HTTP ${response.status}`);
  return (await response.json()) as LibraryEntry[];
}

export async function librarySong(id: string): Promise<LibrarySong> {
  const response = await fetch(apiBase() + `/api/library/${id}`);
  if (response.status === 404) throw new Error(`no library song "${id}"`);
  if (!response.ok) throw new Error(`library failed: HTTP ${response.status}`);
  return (await response.json()) as LibrarySong;
}

export async function metaTables(): Promise<MetaTables> {
  const response = await fetch(apiBase() + "/api/meta");
  if (!response.ok) throw new Error(`meta failed: HTTP ${response.status}`);
  return (await response.json()) as MetaTables;
}
