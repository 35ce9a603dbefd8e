import { readFileSync } from "node:fs";
import { join } from "node:path";

import { ApiClient } from "../src/api.js";

export function backend(): { baseUrl: string; runId: string } {
  return JSON.parse(readFileSync(join(__dirname, ".backend.json"), "utf-8"));
}

export function client(): { api: ApiClient; runId: string } {
  const { baseUrl, runId } = backend();
  return { api: new ApiClient(baseUrl), runId };
}
