/* tslint:disable */
/* eslint-disable */

export class GeodesicProfile {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    /**
     * Chart coordinates of `u(t)` at `t = π/2`, the far end of the
     * geodesic as drawn.
     */
    end(): Float64Array;
    f1(): Float64Array;
    f2(): Float64Array;
    f(): Float64Array;
    t(): Float64Array;
    readonly blocked: number;
    /**
     * Zero-based blocking column, -1 without a barrier.
     */
    readonly blocking: number;
    /**
     * Step chosen by the line search.
     */
    readonly step: number;
    /**
     * Peak of the blocking column, NaN without a barrier.
     */
    readonly t_o: number;
    /**
     * Pit of the blocked column, NaN without a barrier.
     */
    readonly t_p: number;
}

export class SolvePath {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    /**
     * Transfer steps as `y_from, z_from, y_to, z_to`.
     */
    jumps(): Float64Array;
    objective(): Float64Array;
    /**
     * Chart coordinates of every visited point, flattened `y, z` pairs.
     */
    points(): Float64Array;
    readonly iterations: number;
    readonly relative_residual: number;
    readonly success: boolean;
    readonly transfers: number;
}

/**
 * `f`, `f_1` and `f_2` along the descent geodesic from `(y, z)`, sampled
 * at `samples` points of `[0, π)`. `None` at a stationary point.
 */
export function geodesic_profile(y: number, z: number, samples: number): GeodesicProfile | undefined;

/**
 * `(f, f_1)` at the centres of a `res × res` grid over `[-half_width,
 * half_width]²`, row by row from `z = -half_width` upwards, `y` increasing
 * along each row.
 */
export function landscape(half_width: number, res: number): Float64Array;

/**
 * Runs the solver from the chart point `(y, z)`.
 */
export function solve_path(y: number, z: number, transfer: boolean, max_iter: number): SolvePath;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_geodesicprofile_free: (a: number, b: number) => void;
    readonly __wbg_solvepath_free: (a: number, b: number) => void;
    readonly geodesic_profile: (a: number, b: number, c: number) => number;
    readonly geodesicprofile_blocked: (a: number) => number;
    readonly geodesicprofile_blocking: (a: number) => number;
    readonly geodesicprofile_end: (a: number) => [number, number];
    readonly geodesicprofile_f: (a: number) => [number, number];
    readonly geodesicprofile_f1: (a: number) => [number, number];
    readonly geodesicprofile_f2: (a: number) => [number, number];
    readonly geodesicprofile_step: (a: number) => number;
    readonly geodesicprofile_t: (a: number) => [number, number];
    readonly geodesicprofile_t_o: (a: number) => number;
    readonly geodesicprofile_t_p: (a: number) => number;
    readonly landscape: (a: number, b: number) => [number, number];
    readonly solve_path: (a: number, b: number, c: number, d: number) => number;
    readonly solvepath_iterations: (a: number) => number;
    readonly solvepath_jumps: (a: number) => [number, number];
    readonly solvepath_objective: (a: number) => [number, number];
    readonly solvepath_points: (a: number) => [number, number];
    readonly solvepath_relative_residual: (a: number) => number;
    readonly solvepath_success: (a: number) => number;
    readonly solvepath_transfers: (a: number) => number;
    readonly __wbindgen_externrefs: WebAssembly.Table;
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
