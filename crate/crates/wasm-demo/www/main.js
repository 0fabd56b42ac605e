import init, { landscape, solve_path, geodesic_profile } from "./pkg/set_wasm_demo.js";

const map = document.getElementById("map");
const prof = document.getElementById("profile");
const report = document.getElementById("report");
const widthInput = document.getElementById("width");
const itersInput = document.getElementById("iters");

const RES = 260;
let start = [-0.1, -0.1];
let background = null;

const halfWidth = () => Math.max(0.2, Number(widthInput.value) || 1.2);

function toPixel([y, z]) {
  const w = halfWidth();
  return [((y + w) / (2 * w)) * map.width, ((w - z) / (2 * w)) * map.height];
}

function toChart(px, py) {
  const w = halfWidth();
  return [(px / map.width) * 2 * w - w, w - (py / map.height) * 2 * w];
}

function heat(v) {
  // v in [0, 1], dark blue to yellow
  const r = Math.round(255 * Math.min(1, 1.6 * v));
  const g = Math.round(220 * v);
  const b = Math.round(120 * (1 - v) + 40);
  return [r, g, b];
}

function renderBackground() {
  const data = landscape(halfWidth(), RES);
  const img = new ImageData(RES, RES);
  let lo = Infinity, hi = -Infinity;
  for (let k = 0; k < RES * RES; k++) {
    const v = Math.log10(data[2 * k] + 1e-12);
    lo = Math.min(lo, v); hi = Math.max(hi, v);
  }
  lo = Math.max(lo, hi - 6);
  for (let iz = 0; iz < RES; iz++) {
    for (let iy = 0; iy < RES; iy++) {
      const k = iz * RES + iy;
      const row = RES - 1 - iz;
      const p = 4 * (row * RES + iy);
      const ridge = data[2 * k + 1] > 8 - 0.02;
      const v = (Math.max(lo, Math.log10(data[2 * k] + 1e-12)) - lo) / (hi - lo);
      const [r, g, b] = ridge ? [255, 255, 255] : heat(v);
      img.data.set([r, g, b, 255], p);
    }
  }
  const off = document.createElement("canvas");
  off.width = RES; off.height = RES;
  off.getContext("2d").putImageData(img, 0, 0);
  background = off;
}

function drawPath(ctx, path, color) {
  const pts = path.points();
  ctx.strokeStyle = color;
  ctx.fillStyle = color;
  ctx.lineWidth = 1.5;
  ctx.beginPath();
  for (let k = 0; k < pts.length; k += 2) {
    const [x, y] = toPixel([pts[k], pts[k + 1]]);
    if (k === 0) ctx.moveTo(x, y); else ctx.lineTo(x, y);
  }
  ctx.stroke();
  const jumps = path.jumps();
  ctx.setLineDash([4, 3]);
  for (let k = 0; k < jumps.length; k += 4) {
    const [x0, y0] = toPixel([jumps[k], jumps[k + 1]]);
    const [x1, y1] = toPixel([jumps[k + 2], jumps[k + 3]]);
    ctx.beginPath(); ctx.moveTo(x0, y0); ctx.lineTo(x1, y1); ctx.stroke();
    ctx.beginPath(); ctx.arc(x1, y1, 3.5, 0, 2 * Math.PI); ctx.fill();
  }
  ctx.setLineDash([]);
  const n = pts.length;
  const [xe, ye] = toPixel([pts[n - 2], pts[n - 1]]);
  ctx.beginPath(); ctx.arc(xe, ye, 4, 0, 2 * Math.PI); ctx.fill();
}

function drawMap(on, off, profile) {
  const ctx = map.getContext("2d");
  ctx.imageSmoothingEnabled = false;
  ctx.drawImage(background, 0, 0, map.width, map.height);
  if (profile) {
    // the descent geodesic is a straight line in this chart
    const [x0, y0] = toPixel(start);
    const [x1, y1] = toPixel(Array.from(profile.end()));
    const dx = x1 - x0, dy = y1 - y0, len = Math.hypot(dx, dy) || 1;
    ctx.strokeStyle = "rgba(255,255,255,0.5)";
    ctx.beginPath(); ctx.moveTo(x0, y0); ctx.lineTo(x0 + (2000 * dx) / len, y0 + (2000 * dy) / len); ctx.stroke();
  }
  drawPath(ctx, off, "#2c6fbb");
  drawPath(ctx, on, "#c0392b");
  const [sx, sy] = toPixel(start);
  ctx.strokeStyle = "#000";
  ctx.strokeRect(sx - 4, sy - 4, 8, 8);
  const [gx, gy] = toPixel([0.5, 0.5]);
  ctx.fillStyle = "#0a0";
  ctx.beginPath(); ctx.arc(gx, gy, 4, 0, 2 * Math.PI); ctx.fill();
}

function drawProfile(profile) {
  const ctx = prof.getContext("2d");
  const W = prof.width, H = prof.height, pad = 40;
  ctx.clearRect(0, 0, W, H);
  ctx.font = "12px sans-serif";
  if (!profile) {
    ctx.fillStyle = "#222";
    ctx.fillText("stationary point: no descent direction", pad, H / 2);
    return;
  }
  const t = profile.t();
  const series = [[profile.f(), "#000", "f"], [profile.f1(), "#c0392b", "f1"], [profile.f2(), "#2c6fbb", "f2"]];
  const top = Math.max(...series.map(([s]) => Math.max(...s))) * 1.05;
  const X = (v) => pad + (v / Math.PI) * (W - 2 * pad);
  const Y = (v) => H - pad - (v / top) * (H - 2 * pad);
  ctx.strokeStyle = "#999";
  ctx.strokeRect(pad, pad, W - 2 * pad, H - 2 * pad);
  ctx.fillStyle = "#222";
  ctx.fillText("t along the descent geodesic (0 to π)", W / 2 - 100, H - 12);
  ctx.fillText(top.toFixed(2), 4, pad + 4);
  ctx.fillText("0", 24, H - pad);
  for (const [s, color, label] of series) {
    ctx.strokeStyle = color;
    ctx.beginPath();
    s.forEach((v, k) => (k === 0 ? ctx.moveTo(X(t[k]), Y(v)) : ctx.lineTo(X(t[k]), Y(v))));
    ctx.stroke();
    ctx.fillStyle = color;
    ctx.fillText(label, X(t[t.length - 1]) + 4, Y(s[s.length - 1]));
  }
  const mark = (v, color, label) => {
    if (!Number.isFinite(v)) return;
    ctx.strokeStyle = color;
    ctx.setLineDash([4, 3]);
    ctx.beginPath(); ctx.moveTo(X(v), pad); ctx.lineTo(X(v), H - pad); ctx.stroke();
    ctx.setLineDash([]);
    ctx.fillStyle = color;
    ctx.fillText(label, X(v) + 3, pad + 14);
  };
  mark(profile.step, "#555", "line search");
  mark(profile.t_o, "#c0392b", "t_o");
  mark(profile.t_p, "#2c6fbb", "t_p");
}

function describe(label, path) {
  return `${label}: ${path.success ? "success" : "failure"} after ${path.iterations} iterations, ` +
    `${path.transfers} transfer(s), relative residual ${path.relative_residual.toExponential(3)}`;
}

function update() {
  const iters = Math.max(1, Math.floor(Number(itersInput.value) || 2000));
  const on = solve_path(start[0], start[1], true, iters);
  const off = solve_path(start[0], start[1], false, iters);
  const profile = geodesic_profile(start[0], start[1], 600);
  drawMap(on, off, profile);
  drawProfile(profile);
  const lines = [
    `start (y, z) = (${start[0].toFixed(3)}, ${start[1].toFixed(3)}), f = ${off.objective()[0].toPrecision(6)}`,
    describe("transfer on ", on),
    describe("transfer off", off),
  ];
  if (profile && profile.blocking >= 0) {
    lines.push(`barrier: column ${profile.blocking + 1} blocks column ${profile.blocked + 1}, ` +
      `t_o = ${profile.t_o.toFixed(5)}, t_p = ${profile.t_p.toFixed(5)}`);
  }
  report.textContent = lines.join("\n");
  on.free(); off.free(); if (profile) profile.free();
}

map.addEventListener("click", (ev) => {
  const r = map.getBoundingClientRect();
  start = toChart(((ev.clientX - r.left) / r.width) * map.width, ((ev.clientY - r.top) / r.height) * map.height);
  update();
});
widthInput.addEventListener("change", () => { renderBackground(); update(); });
itersInput.addEventListener("change", update);
document.getElementById("reset").addEventListener("click", () => { start = [-0.1, -0.1]; update(); });

await init();
renderBackground();
update();
