/* tslint:disable */
/* eslint-disable */

/**
 * Expectation of sigma_c in state `sign` along `a`, evaluated with `draws`
 * random quantization directions.
 */
export function expectation_scan(a_theta: number, a_phi: number, c_theta: number, c_phi: number, plus: boolean, draws: number, seed: bigint): string;

/**
 * Operators, eigenvectors and the rotated frame for quantization direction
 * `b` and measurement direction `c`.
 */
export function operators(b_theta: number, b_phi: number, c_theta: number, c_phi: number): string;

/**
 * Runs the property catalogue and returns the report.
 */
export function verify(samples: number, seed: bigint): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly expectation_scan: (a: number, b: number, c: number, d: number, e: number, f: number, g: bigint) => [number, number, number, number];
    readonly operators: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly verify: (a: number, b: bigint) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
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
