/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const expectation_scan: (a: number, b: number, c: number, d: number, e: number, f: number, g: bigint) => [number, number, number, number];
export const operators: (a: number, b: number, c: number, d: number) => [number, number, number, number];
export const verify: (a: number, b: bigint) => [number, number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
