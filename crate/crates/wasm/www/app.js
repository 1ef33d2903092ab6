import init, * as tri from "./pkg/tripartite_wasm.js";

const COLORS = ["#1f4e9c", "#c0392b", "#2e8b57", "#8e44ad", "#d35400", "#16a085"];
const $ = (id) => document.getElementById(id);

function status(msg) {
  $("status").textContent = msg || "";
}

function inputs() {
  return { branch: $("branch").value, nbar: $("nbar").value.trim() };
}

// series: [{ name, xs, ys }]
function lineChart(canvas, series, xLabel) {
  const ctx = canvas.getContext("2d");
  const { width: w, height: h } = canvas;
  const pad = { l: 50, r: 10, t: 10, b: 35 };
  ctx.clearRect(0, 0, w, h);
  const xs = series.flatMap((s) => s.xs);
  const ys = series.flatMap((s) => s.ys).filter(Number.isFinite);
  const x0 = Math.min(...xs), x1 = Math.max(...xs);
  let y0 = Math.min(0, ...ys), y1 = Math.max(...ys);
  if (y1 <= y0) y1 = y0 + 1;
  const sx = (x) => pad.l + ((x - x0) / (x1 - x0)) * (w - pad.l - pad.r);
  const sy = (y) => h - pad.b - ((y - y0) / (y1 - y0)) * (h - pad.t - pad.b);

  ctx.strokeStyle = "#000";
  ctx.strokeRect(pad.l, pad.t, w - pad.l - pad.r, h - pad.t - pad.b);
  ctx.fillStyle = "#000";
  ctx.font = "11px sans-serif";
  for (let i = 0; i <= 4; i++) {
    const xv = x0 + (i / 4) * (x1 - x0);
    const yv = y0 + (i / 4) * (y1 - y0);
    ctx.textAlign = "center";
    ctx.fillText(xv.toPrecision(3), sx(xv), h - pad.b + 14);
    ctx.textAlign = "right";
    ctx.fillText(yv.toPrecision(3), pad.l - 4, sy(yv) + 4);
  }
  ctx.textAlign = "center";
  ctx.fillText(xLabel, pad.l + (w - pad.l - pad.r) / 2, h - 6);

  series.forEach((s, k) => {
    ctx.strokeStyle = s.color || COLORS[k % COLORS.length];
    ctx.lineWidth = 1.5;
    ctx.beginPath();
    s.xs.forEach((x, i) => {
      const y = s.ys[i];
      if (!Number.isFinite(y)) return;
      i === 0 ? ctx.moveTo(sx(x), sy(y)) : ctx.lineTo(sx(x), sy(y));
    });
    ctx.stroke();
  });
}

function drawCurves() {
  const { branch, nbar } = inputs();
  const tmax = Number($("tmax").value);
  const steps = Number($("steps").value);
  const cols = tri.curve_columns().split(",");
  const flat = tri.curves(branch, nbar, tmax, steps);
  const n = cols.length;
  const column = (k) => Array.from({ length: steps }, (_, i) => flat[i * n + k]);
  const xs = column(0);
  const xLabel = nbar === "inf" ? "n̄γt" : "γt";
  const series = cols.slice(1).map((name, k) => ({ name, xs, ys: column(k + 1), color: COLORS[k] }));
  lineChart($("curves"), series.slice(0, 2), xLabel);
  lineChart($("violations"), series.slice(2), xLabel);
  $("legend").innerHTML = series
    .map((s) => `<span style="color:${s.color}">■ ${s.name}</span>`)
    .join("");
}

function heat(v, vmax) {
  // blue for negative, red for positive
  const t = Math.max(-1, Math.min(1, v / vmax));
  const a = Math.round(255 * (1 - Math.abs(t)));
  return t >= 0 ? [255, a, a] : [a, a, 255];
}

function drawLandscape() {
  const { branch, nbar } = inputs();
  const gt = Number($("gt").value);
  const q = $("quantity").value;
  $("gt-value").textContent = gt.toFixed(3);
  const res = 120;
  const grid = tri.bell_landscape(branch, nbar, gt, q, res);
  const [tb, tc, best, bound] = tri.bell_optimum(branch, nbar, gt, q);
  const canvas = $("landscape");
  const ctx = canvas.getContext("2d");
  const img = ctx.createImageData(res, res);
  const vmax = Math.max(bound, 1e-12);
  for (let i = 0; i < res; i++) {
    for (let j = 0; j < res; j++) {
      // θ_B across, θ_C upward
      const [r, g, b] = heat(grid[i * res + j], vmax);
      const p = 4 * ((res - 1 - j) * res + i);
      img.data.set([r, g, b, 255], p);
    }
  }
  const off = new OffscreenCanvas(res, res);
  off.getContext("2d").putImageData(img, 0, 0);
  ctx.imageSmoothingEnabled = false;
  ctx.drawImage(off, 0, 0, canvas.width, canvas.height);
  const mx = (tb / (2 * Math.PI)) * canvas.width;
  const my = canvas.height - (tc / (2 * Math.PI)) * canvas.height;
  ctx.strokeStyle = "#000";
  ctx.beginPath();
  ctx.arc(mx, my, 6, 0, 2 * Math.PI);
  ctx.stroke();
  const verdict = best > bound ? `violates the bound ${bound}` : `within the bound ${bound}`;
  $("optimum").innerHTML =
    `θ_B = ${tb.toFixed(5)}<br>θ_C = ${tc.toFixed(5)}<br>` +
    `max |⟨B⟩| = ${best.toFixed(8)}<br>${verdict}<br><small>colour scale ±${bound}</small>`;
}

function fmt(x) {
  if (Number.isNaN(x)) return "never above";
  if (!Number.isFinite(x)) return "none";
  return x.toPrecision(8);
}

function drawCritical() {
  const { branch, nbar } = inputs();
  const row = tri.critical_times(branch, nbar);
  const names = ["τ_S", "τ_P1", "τ_P2", "τ_P3", "τ_P4", "τ_P5", "τ_T", "τ_E", "N_c"];
  $("critical-table").innerHTML =
    `<tr>${names.map((n) => `<th>${n}</th>`).join("")}</tr>` +
    `<tr>${row.map((v) => `<td>${fmt(v)}</td>`).join("")}</tr>`;
}

function guarded(f) {
  return () => {
    try {
      status("");
      f();
    } catch (e) {
      status(e.message || String(e));
    }
  };
}

await init();
$("draw-curves").addEventListener("click", guarded(drawCurves));
$("gt").addEventListener("input", guarded(drawLandscape));
$("quantity").addEventListener("change", guarded(drawLandscape));
$("branch").addEventListener("change", guarded(() => { drawCurves(); drawLandscape(); }));
$("nbar").addEventListener("change", guarded(() => { drawCurves(); drawLandscape(); }));
$("critical").addEventListener("click", guarded(drawCritical));
guarded(() => { drawCurves(); drawLandscape(); })();
