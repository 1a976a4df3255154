/**
 * Thin Node wrapper around the numtok command line tool.
 *
 * Everything is delegated to the CLI over stdin/stdout, so the outputs here
 * are byte-identical to invoking `numtok` directly with the same options;
 * no grouping or marker logic is reimplemented on this side.
 *
 * The executable is resolved from NUMTOK_CLI (which may contain arguments,
 * e.g. "python3 -m numtok") and defaults to "numtok" on PATH.
 */

import { spawnSync } from "node:child_process";

export const VERSION = "0.1.0";

export interface TokenizerOptions {
  groupSize?: number;
  mode?: "compound" | "marker" | "digit_marker";
  markerStyle?: "triadic_human" | "systematic";
  maxIntLevels?: number;
  maxFracDepth?: number;
  padLeadingGroup?: boolean;
  preservePrecision?: boolean;
  locale?: "western" | "indian" | "east_asian";
  /** Path of a JSON config file; explicit options above override it. */
  configFile?: string;
}

export interface VocabEntry {
  id: number;
  text: string;
  kind: string;
  coefficient: number | null;
  exponent: number | null;
}

function cliCommand(): string[] {
  const env = process.env.NUMTOK_CLI;
  return env ? env.split(" ").filter(Boolean) : ["numtok"];
}

export function optionFlags(options: TokenizerOptions = {}): string[] {
  const flags: string[] = [];
  if (options.configFile !== undefined) flags.push("--config", options.configFile);
  if (options.groupSize !== undefined) flags.push("--group-size", String(options.groupSize));
  if (options.mode !== undefined) flags.push("--mode", options.mode);
  if (options.markerStyle !== undefined) flags.push("--marker-style", options.markerStyle);
  if (options.maxIntLevels !== undefined) flags.push("--max-int-levels", String(options.maxIntLevels));
  if (options.maxFracDepth !== undefined) flags.push("--max-frac-depth", String(options.maxFracDepth));
  if (options.padLeadingGroup !== undefined) {
    flags.push(options.padLeadingGroup ? "--pad-leading" : "--no-pad-leading");
  }
  if (options.preservePrecision !== undefined) {
    flags.push(options.preservePrecision ? "--preserve-precision" : "--no-preserve-precision");
  }
  if (options.locale !== undefined) flags.push("--locale", options.locale);
  return flags;
}

export function runCli(args: string[], input = ""): string {
  const [cmd, ...prefix] = cliCommand();
  const proc = spawnSync(cmd, [...prefix, ...args], {
    input,
    encoding: "utf8",
    maxBuffer: 256 * 1024 * 1024,
  });
  if (proc.error) {
    throw new Error(`failed to run numtok CLI: ${proc.error.message}`);
  }
  if (proc.status !== 0) {
    throw new Error(
      `numtok ${args[0] ?? ""} exited with status ${proc.status}: ${proc.stderr}`,
    );
  }
  return proc.stdout;
}

/** Token list for one line of text; plain words pass through as items. */
export function encodeText(text: string, options: TokenizerOptions = {}): string[] {
  const out = runCli(["encode", "--format", "tokens", ...optionFlags(options)], text);
  return out.replace(/\n$/, "").split(/\s+/).filter((t) => t.length > 0);
}

/** Inverse of encodeText: rebuild the line, restoring canonical numerals. */
export function decodeTokens(tokens: string[], options: TokenizerOptions = {}): string {
  if (tokens.length === 0) return "";
  const fused: string[] = [];
  for (const token of tokens) {
    const last = fused[fused.length - 1];
    if (last === "+" || last === "-") {
      fused[fused.length - 1] = last + token;
    } else {
      fused.push(token);
    }
  }
  const out = runCli(["decode", "--format", "tokens", ...optionFlags(options)], fused.join(" "));
  return out.replace(/\n$/, "");
}

/** The full token inventory for a configuration, in id order. */
export function buildVocab(options: TokenizerOptions = {}): VocabEntry[] {
  const out = runCli(["vocab", "--format", "json", ...optionFlags(options)]);
  return JSON.parse(out) as VocabEntry[];
}

/** Version reported by the underlying CLI; matches VERSION for this client. */
export function coreVersion(): string {
  return runCli(["--version"]).trim();
}
