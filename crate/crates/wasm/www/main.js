import init, { family_json, roots_json, scan_json } from './pkg/polysep_wasm.js';

const $ = (id) => document.getElementById(id);
const num = (id) => Number($(id).value);

function fail(target, e) {
  target.textContent = String(e);
  target.className = 'err';
}

function polyText(coeffs) {
  const terms = [];
  for (let i = coeffs.length - 1; i >= 0; i--) {
    if (coeffs[i] === '0') continue;
    const x = i === 0 ? '' : i === 1 ? ' x' : ` x^${i}`;
    terms.push(`${coeffs[i]}${x}`);
  }
  return terms.join(' + ').replaceAll('+ -', '- ');
}

function axes(ctx, w, h) {
  ctx.clearRect(0, 0, w, h);
  ctx.strokeStyle = '#bbb';
  ctx.beginPath();
  ctx.moveTo(0, h / 2); ctx.lineTo(w, h / 2);
  ctx.moveTo(w / 2, 0); ctx.lineTo(w / 2, h);
  ctx.stroke();
}

function dot(ctx, x, y, color) {
  ctx.fillStyle = color;
  ctx.beginPath();
  ctx.arc(x, y, 4, 0, 2 * Math.PI);
  ctx.fill();
}

// Roots span many orders of magnitude, so plot log10|z| as the radius,
// shifted so the smallest root sits near the centre.
function drawPlane(view) {
  const c = $('plane'), ctx = c.getContext('2d');
  axes(ctx, c.width, c.height);
  const logs = view.roots.map((r) => r.log10_abs);
  const lo = Math.min(...logs) - 1, hi = Math.max(...logs);
  const scale = (Math.min(c.width, c.height) / 2 - 12) / Math.max(hi - lo, 1);
  for (const r of view.roots) {
    const rad = (r.log10_abs - lo) * scale;
    const th = Math.atan2(r.im, r.re);
    const close = r.log10_abs < lo + 1.5;
    dot(ctx, c.width / 2 + rad * Math.cos(th), c.height / 2 - rad * Math.sin(th), close ? '#c33' : '#36c');
  }
  ctx.fillStyle = '#555';
  ctx.fillText(`radius: log10|z| from ${lo.toFixed(1)} to ${hi.toFixed(1)}`, 8, 14);
}

function drawPair(view) {
  const c = $('pair'), ctx = c.getContext('2d');
  axes(ctx, c.width, c.height);
  const unit = c.width / 5;
  ctx.strokeStyle = '#999';
  ctx.setLineDash([4, 4]);
  for (const p of [-1, 1]) {
    ctx.beginPath();
    ctx.moveTo(c.width / 2 + p * unit, 20); ctx.lineTo(c.width / 2 + p * unit, c.height - 20);
    ctx.stroke();
  }
  ctx.setLineDash([]);
  for (const off of view.pair_offsets) dot(ctx, c.width / 2 + off * unit, c.height / 2, '#c33');
  ctx.fillStyle = '#555';
  ctx.fillText('close pair around its midpoint; dashed lines: predicted half-gap', 8, 14);
}

function drawScan(view) {
  const c = $('exp'), ctx = c.getContext('2d');
  ctx.clearRect(0, 0, c.width, c.height);
  const pts = view.rows.filter((r) => r.e !== null);
  if (pts.length === 0) return;
  const xs = pts.map((r) => Math.log10(r.a));
  const ys = pts.map((r) => r.e).concat([view.e_pred]);
  const x0 = Math.min(...xs), x1 = Math.max(...xs, x0 + 1);
  const y0 = Math.min(...ys) - 0.05, y1 = Math.max(...ys) + 0.05;
  const px = (x) => 40 + (x - x0) / (x1 - x0) * (c.width - 60);
  const py = (y) => c.height - 30 - (y - y0) / (y1 - y0) * (c.height - 50);
  ctx.strokeStyle = '#999';
  ctx.setLineDash([5, 4]);
  ctx.beginPath(); ctx.moveTo(px(x0), py(view.e_pred)); ctx.lineTo(px(x1), py(view.e_pred)); ctx.stroke();
  ctx.setLineDash([]);
  ctx.fillStyle = '#555';
  ctx.fillText(`limit ${view.e_pred_text}`, px(x0) + 4, py(view.e_pred) - 6);
  ctx.strokeStyle = '#36c';
  ctx.beginPath();
  pts.forEach((r, i) => (i ? ctx.lineTo : ctx.moveTo).call(ctx, px(xs[i]), py(r.e)));
  ctx.stroke();
  pts.forEach((r, i) => {
    dot(ctx, px(xs[i]), py(r.e), '#36c');
    ctx.fillStyle = '#555';
    ctx.fillText(`a=${r.a}`, px(xs[i]) - 12, c.height - 10);
  });
}

function run(button, target, fn) {
  $(button).addEventListener('click', () => {
    target.className = '';
    target.textContent = 'working...';
    // let the browser paint before the synchronous computation
    setTimeout(() => {
      try { fn(); } catch (e) { fail(target, e); }
    }, 10);
  });
}

await init();
$('status').textContent = '';

run('gen', $('poly'), () => {
  const v = JSON.parse(family_json(num('d'), num('a')));
  $('poly').textContent = `P(x) = ${polyText(v.coeffs)}\n\nheight ${v.height}\n` +
    `predicted separation ${v.prediction.sep_pred}\nexponent limit ${v.prediction.exp_pred}`;
});

run('roots', $('rootinfo'), () => {
  const v = JSON.parse(roots_json(num('d'), num('a')));
  drawPlane(v);
  drawPair(v);
  $('rootinfo').textContent =
    `sep ${v.sep} (predicted ${v.sep_pred}, ratio ${v.ratio.toFixed(8)})\n` +
    `e = ${v.e.toFixed(6)}, certified lower bound ${v.e_certified === null ? 'none' : v.e_certified.toFixed(6)}, ` +
    `limit ${v.e_pred}\nworking precision ${v.prec_bits} bits`;
});

run('scan', $('scaninfo'), () => {
  const v = JSON.parse(scan_json(num('d'), num('from'), num('to'), num('factor')));
  drawScan(v);
  $('scaninfo').textContent = v.rows
    .map((r) => `a=${r.a}  ${r.status}  e=${r.e === null ? '-' : r.e.toFixed(6)}`)
    .join('\n');
});
