/* @ts-self-types="./set_wasm_demo.d.ts" */

export class GeodesicProfile {
    static __wrap(ptr) {
        const obj = Object.create(GeodesicProfile.prototype);
        obj.__wbg_ptr = ptr;
        GeodesicProfileFinalization.register(obj, obj.__wbg_ptr, obj);
        return obj;
    }
    __destroy_into_raw() {
        const ptr = this.__wbg_ptr;
        this.__wbg_ptr = 0;
        GeodesicProfileFinalization.unregister(this);
        return ptr;
    }
    free() {
        const ptr = this.__destroy_into_raw();
        wasm.__wbg_geodesicprofile_free(ptr, 0);
    }
    /**
     * @returns {number}
     */
    get blocked() {
        const ret = wasm.geodesicprofile_blocked(this.__wbg_ptr);
        return ret;
    }
    /**
     * Zero-based blocking column, -1 without a barrier.
     * @returns {number}
     */
    get blocking() {
        const ret = wasm.geodesicprofile_blocking(this.__wbg_ptr);
        return ret;
    }
    /**
     * Chart coordinates of `u(t)` at `t = π/2`, the far end of the
     * geodesic as drawn.
     * @returns {Float64Array}
     */
    end() {
        const ret = wasm.geodesicprofile_end(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * @returns {Float64Array}
     */
    f1() {
        const ret = wasm.geodesicprofile_f1(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * @returns {Float64Array}
     */
    f2() {
        const ret = wasm.geodesicprofile_f2(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * @returns {Float64Array}
     */
    f() {
        const ret = wasm.geodesicprofile_f(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * Step chosen by the line search.
     * @returns {number}
     */
    get step() {
        const ret = wasm.geodesicprofile_step(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {Float64Array}
     */
    t() {
        const ret = wasm.geodesicprofile_t(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * Peak of the blocking column, NaN without a barrier.
     * @returns {number}
     */
    get t_o() {
        const ret = wasm.geodesicprofile_t_o(this.__wbg_ptr);
        return ret;
    }
    /**
     * Pit of the blocked column, NaN without a barrier.
     * @returns {number}
     */
    get t_p() {
        const ret = wasm.geodesicprofile_t_p(this.__wbg_ptr);
        return ret;
    }
}
if (Symbol.dispose) GeodesicProfile.prototype[Symbol.dispose] = GeodesicProfile.prototype.free;

export class SolvePath {
    static __wrap(ptr) {
        const obj = Object.create(SolvePath.prototype);
        obj.__wbg_ptr = ptr;
        SolvePathFinalization.register(obj, obj.__wbg_ptr, obj);
        return obj;
    }
    __destroy_into_raw() {
        const ptr = this.__wbg_ptr;
        this.__wbg_ptr = 0;
        SolvePathFinalization.unregister(this);
        return ptr;
    }
    free() {
        const ptr = this.__destroy_into_raw();
        wasm.__wbg_solvepath_free(ptr, 0);
    }
    /**
     * @returns {number}
     */
    get iterations() {
        const ret = wasm.solvepath_iterations(this.__wbg_ptr);
        return ret >>> 0;
    }
    /**
     * Transfer steps as `y_from, z_from, y_to, z_to`.
     * @returns {Float64Array}
     */
    jumps() {
        const ret = wasm.solvepath_jumps(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * @returns {Float64Array}
     */
    objective() {
        const ret = wasm.solvepath_objective(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * Chart coordinates of every visited point, flattened `y, z` pairs.
     * @returns {Float64Array}
     */
    points() {
        const ret = wasm.solvepath_points(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * @returns {number}
     */
    get relative_residual() {
        const ret = wasm.solvepath_relative_residual(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {boolean}
     */
    get success() {
        const ret = wasm.solvepath_success(this.__wbg_ptr);
        return ret !== 0;
    }
    /**
     * @returns {number}
     */
    get transfers() {
        const ret = wasm.solvepath_transfers(this.__wbg_ptr);
        return ret >>> 0;
    }
}
if (Symbol.dispose) SolvePath.prototype[Symbol.dispose] = SolvePath.prototype.free;

/**
 * `f`, `f_1` and `f_2` along the descent geodesic from `(y, z)`, sampled
 * at `samples` points of `[0, π)`. `None` at a stationary point.
 * @param {number} y
 * @param {number} z
 * @param {number} samples
 * @returns {GeodesicProfile | undefined}
 */
export function geodesic_profile(y, z, samples) {
    const ret = wasm.geodesic_profile(y, z, samples);
    return ret === 0 ? undefined : GeodesicProfile.__wrap(ret);
}

/**
 * `(f, f_1)` at the centres of a `res × res` grid over `[-half_width,
 * half_width]²`, row by row from `z = -half_width` upwards, `y` increasing
 * along each row.
 * @param {number} half_width
 * @param {number} res
 * @returns {Float64Array}
 */
export function landscape(half_width, res) {
    const ret = wasm.landscape(half_width, res);
    var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
    wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
    return v1;
}

/**
 * Runs the solver from the chart point `(y, z)`.
 * @param {number} y
 * @param {number} z
 * @param {boolean} transfer
 * @param {number} max_iter
 * @returns {SolvePath}
 */
export function solve_path(y, z, transfer, max_iter) {
    const ret = wasm.solve_path(y, z, transfer, max_iter);
    return SolvePath.__wrap(ret);
}
function __wbg_get_imports() {
    const import0 = {
        __proto__: null,
        __wbg___wbindgen_throw_41e9ee4f547fc59a: function(arg0, arg1) {
            throw new Error(getStringFromWasm0(arg0, arg1));
        },
        __wbindgen_init_externref_table: function() {
            const table = wasm.__wbindgen_externrefs;
            const offset = table.grow(4);
            table.set(0, undefined);
            table.set(offset + 0, undefined);
            table.set(offset + 1, null);
            table.set(offset + 2, true);
            table.set(offset + 3, false);
        },
    };
    return {
        __proto__: null,
        "./set_wasm_demo_bg.js": import0,
    };
}

const GeodesicProfileFinalization = (typeof FinalizationRegistry === 'undefined')
    ? { register: () => {}, unregister: () => {} }
    : new FinalizationRegistry(ptr => wasm.__wbg_geodesicprofile_free(ptr, 1));
const SolvePathFinalization = (typeof FinalizationRegistry === 'undefined')
    ? { register: () => {}, unregister: () => {} }
    : new FinalizationRegistry(ptr => wasm.__wbg_solvepath_free(ptr, 1));

function getArrayF64FromWasm0(ptr, len) {
    ptr = ptr >>> 0;
    return getFloat64ArrayMemory0().subarray(ptr / 8, ptr / 8 + len);
}

let cachedFloat64ArrayMemory0 = null;
function getFloat64ArrayMemory0() {
    if (cachedFloat64ArrayMemory0 === null || cachedFloat64ArrayMemory0.byteLength === 0) {
        cachedFloat64ArrayMemory0 = new Float64Array(wasm.memory.buffer);
    }
    return cachedFloat64ArrayMemory0;
}

function getStringFromWasm0(ptr, len) {
    return decodeText(ptr >>> 0, len);
}

let cachedUint8ArrayMemory0 = null;
function getUint8ArrayMemory0() {
    if (cachedUint8ArrayMemory0 === null || cachedUint8ArrayMemory0.byteLength === 0) {
        cachedUint8ArrayMemory0 = new Uint8Array(wasm.memory.buffer);
    }
    return cachedUint8ArrayMemory0;
}

let cachedTextDecoder = new TextDecoder('utf-8', { ignoreBOM: true, fatal: true });
cachedTextDecoder.decode();
const MAX_SAFARI_DECODE_BYTES = 2146435072;
let numBytesDecoded = 0;
function decodeText(ptr, len) {
    numBytesDecoded += len;
    if (numBytesDecoded >= MAX_SAFARI_DECODE_BYTES) {
        cachedTextDecoder = new TextDecoder('utf-8', { ignoreBOM: true, fatal: true });
        cachedTextDecoder.decode();
        numBytesDecoded = len;
    }
    return cachedTextDecoder.decode(getUint8ArrayMemory0().subarray(ptr, ptr + len));
}

let wasmModule, wasmInstance, wasm;
function __wbg_finalize_init(instance, module) {
    wasmInstance = instance;
    wasm = instance.exports;
    wasmModule = module;
    cachedFloat64ArrayMemory0 = null;
    cachedUint8ArrayMemory0 = null;
    wasm.__wbindgen_start();
    return wasm;
}

async function __wbg_load(module, imports) {
    if (typeof Response === 'function' && module instanceof Response) {
        if (!module.ok) {
            throw new Error(`failed to fetch Wasm: ${module.status} ${module.statusText} fetching '${module.url}'`);
        }

        if (typeof WebAssembly.instantiateStreaming === 'function') {
            try {
                return await WebAssembly.instantiateStreaming(module, imports);
            } catch (e) {
                const validResponse = expectedResponseType(module.type);

                if (validResponse && module.headers.get('Content-Type') !== 'application/wasm') {
                    console.warn("`WebAssembly.instantiateStreaming` failed because your server does not serve Wasm with `application/wasm` MIME type. Falling back to `WebAssembly.instantiate` which is slower. Original error:\n", e);

                } else { throw e; }
            }
        }

        const bytes = await module.arrayBuffer();
        return await WebAssembly.instantiate(bytes, imports);
    } else {
        const instance = await WebAssembly.instantiate(module, imports);

        if (instance instanceof WebAssembly.Instance) {
            return { instance, module };
        } else {
            return instance;
        }
    }

    function expectedResponseType(type) {
        switch (type) {
            case 'basic': case 'cors': case 'default': return true;
        }
        return false;
    }
}

function initSync(module) {
    if (wasm !== undefined) return wasm;


    if (module !== undefined) {
        if (Object.getPrototypeOf(module) === Object.prototype) {
            ({module} = module)
        } else {
            console.warn('using deprecated parameters for `initSync()`; pass a single object instead')
        }
    }

    const imports = __wbg_get_imports();
    if (!(module instanceof WebAssembly.Module)) {
        module = new WebAssembly.Module(module);
    }
    const instance = new WebAssembly.Instance(module, imports);
    return __wbg_finalize_init(instance, module);
}

async function __wbg_init(module_or_path) {
    if (wasm !== undefined) return wasm;


    if (module_or_path !== undefined) {
        if (Object.getPrototypeOf(module_or_path) === Object.prototype) {
            ({module_or_path} = module_or_path)
        } else {
            console.warn('using deprecated parameters for the initialization function; pass a single object instead')
        }
    }

    if (module_or_path === undefined) {
        module_or_path = new URL('set_wasm_demo_bg.wasm', import.meta.url);
    }
    const imports = __wbg_get_imports();

    if (typeof module_or_path === 'string' || (typeof Request === 'function' && module_or_path instanceof Request) || (typeof URL === 'function' && module_or_path instanceof URL)) {
        module_or_path = fetch(module_or_path);
    }

    const { instance, module } = await __wbg_load(await module_or_path, imports);

    return __wbg_finalize_init(instance, module);
}

export { initSync, __wbg_init as default };
