/** Typed fetch client for the ring nim service. */

import type {
  ApplyResponse,
  ErrorDetail,
  Move,
  MoveReason,
  Rules,
  StatusResponse,
} from "./types.js";

/** Error carrying the service's structured detail alongside the HTTP status. */
export class ApiError extends Error {
  readonly httpStatus: number;
  readonly code: string;
  readonly reason: MoveReason | undefined;

  constructor(httpStatus: number, detail: ErrorDetail) {
    super(detail.message);
    this.name = "ApiError";
    this.httpStatus = httpStatus;
    this.code = detail.code;
    this.reason = detail.reason;
  }
}

/** What the session layer needs from a service client. */
export interface ServiceClient {
  health(): Promise<boolean>;
  status(rules: Rules, piles: number[]): Promise<StatusResponse>;
  apply(
    rules: Rules,
    piles: number[],
    move: Move,
    wantReply: boolean,
  ): Promise<ApplyResponse>;
}

export class GameApi implements ServiceClient {
  private readonly baseUrl: string;

  constructor(baseUrl = "") {
    this.baseUrl = baseUrl.replace(/\/$/, "");
  }

  async health(): Promise<boolean> {
    try {
      const resp = await fetch(`${this.baseUrl}/api/v1/health`);
      if (!resp.ok) {
        return false;
      }
      const body = (await resp.json()) as { ok?: boolean };
      return body.ok === true;
    } catch {
      return false;
    }
  }

  async status(rules: Rules, piles: number[]): Promise<StatusResponse> {
    return this.post<StatusResponse>("/api/v1/status", {
      variant: rules.variant,
      k: rules.k,
      piles,
    });
  }

  async apply(
    rules: Rules,
    piles: number[],
    move: Move,
    wantReply: boolean,
  ): Promise<ApplyResponse> {
    return this.post<ApplyResponse>("/api/v1/apply", {
      variant: rules.variant,
      k: rules.k,
      piles,
      move: { window_start: move.windowStart, removals: move.removals },
      reply: wantReply,
    });
  }

  private async post<T>(path: string, body: unknown): Promise<T> {
    const resp = await fetch(this.baseUrl + path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!resp.ok) {
      throw new ApiError(resp.status, await readDetail(resp));
    }
    return (await resp.json()) as T;
  }
}

async function readDetail(resp: Response): Promise<ErrorDetail> {
  try {
    const body = (await resp.json()) as { detail?: ErrorDetail };
    if (body.detail && typeof body.detail.message === "string") {
      return body.detail;
    }
  } catch {
    // fall through to the generic detail
  }
  return { code: "unknown", message: `request failed with status ${resp.status}` };
}
