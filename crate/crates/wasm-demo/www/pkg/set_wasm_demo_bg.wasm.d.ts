/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_geodesicprofile_free: (a: number, b: number) => void;
export const __wbg_solvepath_free: (a: number, b: number) => void;
export const geodesic_profile: (a: number, b: number, c: number) => number;
export const geodesicprofile_blocked: (a: number) => number;
export const geodesicprofile_blocking: (a: number) => number;
export const geodesicprofile_end: (a: number) => [number, number];
export const geodesicprofile_f: (a: number) => [number, number];
export const geodesicprofile_f1: (a: number) => [number, number];
export const geodesicprofile_f2: (a: number) => [number, number];
export const geodesicprofile_step: (a: number) => number;
export const geodesicprofile_t: (a: number) => [number, number];
export const geodesicprofile_t_o: (a: number) => number;
export const geodesicprofile_t_p: (a: number) => number;
export const landscape: (a: number, b: number) => [number, number];
export const solve_path: (a: number, b: number, c: number, d: number) => number;
export const solvepath_iterations: (a: number) => number;
export const solvepath_jumps: (a: number) => [number, number];
export const solvepath_objective: (a: number) => [number, number];
export const solvepath_points: (a: number) => [number, number];
export const solvepath_relative_residual: (a: number) => number;
export const solvepath_success: (a: number) => number;
export const solvepath_transfers: (a: number) => number;
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
