/* tslint:disable */
/* eslint-disable */

/**
 * Near and far paths of a saturated chain, one element per line, bottom first.
 */
export function chain_decomposition(type_label: string, chain: string): string;

/**
 * The support of μ̃(·, y) with the QBG distance behind each sign.
 */
export function elements_below(type_label: string, y: string, profile: string, scope: string): string;

/**
 * μ̃(x, y) by all three methods. A regularity refusal of the closed formula
 * is reported in the result rather than thrown.
 */
export function mobius(type_label: string, x: string, y: string, profile: string, scope: string): string;

/**
 * The quantum Bruhat graph as JSON: vertices as reduced words, edges with
 * kind, label and weight.
 */
export function qbg_graph(type_label: string, convention: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly chain_decomposition: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly elements_below: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number) => [number, number, number, number];
    readonly mobius: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number, i: number, j: number) => [number, number, number, number];
    readonly qbg_graph: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
