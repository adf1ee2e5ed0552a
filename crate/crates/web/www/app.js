import init, { compute, classifyGraph, generateFamily } from "./pkg/edgegp_web.js";

const $ = (id) => document.getElementById(id);
const canvas = $("canvas");
const ctx = canvas.getContext("2d");

// Spring layout: edges pull, all pairs repel. Seeded on a circle so the
// picture is the same every time for the same graph.
function layout(n, edges) {
  const w = canvas.width, h = canvas.height;
  const pos = Array.from({ length: n }, (_, i) => {
    const a = (2 * Math.PI * i) / Math.max(n, 1);
    return { x: w / 2 + 0.35 * w * Math.cos(a), y: h / 2 + 0.35 * h * Math.sin(a) };
  });
  const k = Math.sqrt((w * h) / Math.max(n, 1)) * 0.6;
  for (let iter = 0, t = w / 10; iter < 300; iter++, t *= 0.985) {
    const disp = pos.map(() => ({ x: 0, y: 0 }));
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        const dx = pos[i].x - pos[j].x, dy = pos[i].y - pos[j].y;
        const d = Math.max(Math.hypot(dx, dy), 0.01);
        const f = (k * k) / d;
        disp[i].x += (dx / d) * f; disp[i].y += (dy / d) * f;
        disp[j].x -= (dx / d) * f; disp[j].y -= (dy / d) * f;
      }
    }
    for (const [u, v] of edges) {
      const dx = pos[u].x - pos[v].x, dy = pos[u].y - pos[v].y;
      const d = Math.max(Math.hypot(dx, dy), 0.01);
      const f = (d * d) / k;
      disp[u].x -= (dx / d) * f; disp[u].y -= (dy / d) * f;
      disp[v].x += (dx / d) * f; disp[v].y += (dy / d) * f;
    }
    pos.forEach((p, i) => {
      const d = Math.max(Math.hypot(disp[i].x, disp[i].y), 0.01);
      p.x = Math.min(w - 20, Math.max(20, p.x + (disp[i].x / d) * Math.min(d, t)));
      p.y = Math.min(h - 20, Math.max(20, p.y + (disp[i].y / d) * Math.min(d, t)));
    });
  }
  return pos;
}

function draw(n, edges, witness = []) {
  const pos = layout(n, edges);
  const marked = new Set(witness);
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  edges.forEach(([u, v], id) => {
    ctx.beginPath();
    ctx.moveTo(pos[u].x, pos[u].y);
    ctx.lineTo(pos[v].x, pos[v].y);
    ctx.strokeStyle = marked.has(id) ? "#d22" : "#999";
    ctx.lineWidth = marked.has(id) ? 4 : 1.5;
    ctx.stroke();
  });
  ctx.font = "11px sans-serif";
  ctx.textAlign = "center";
  ctx.textBaseline = "middle";
  pos.forEach((p, v) => {
    ctx.beginPath();
    ctx.arc(p.x, p.y, 9, 0, 2 * Math.PI);
    ctx.fillStyle = "#fff";
    ctx.fill();
    ctx.strokeStyle = "#333";
    ctx.lineWidth = 1;
    ctx.stroke();
    ctx.fillStyle = "#222";
    ctx.fillText(String(v), p.x, p.y);
  });
}

function show(html, details) {
  $("result").innerHTML = html;
  $("details").hidden = details === undefined;
  $("details").textContent = details ?? "";
}

function fail(err) {
  show(`<p class="error">${String(err.message ?? err)}</p>`);
}

function run() {
  try {
    const r = JSON.parse(compute($("graph").value));
    draw(r.n, r.edges, r.witness);
    const pairs = r.witness.map((e) => r.edges[e].join("-")).join(" ");
    const note = r.components > 1 ? ` (summed over ${r.components} components)` : "";
    show(`<p class="value">gp<sub>e</sub> = ${r.gpe}${note}</p><p>method: ${r.method}<br>graph6: <code>${r.graph6}</code></p>`, pairs);
  } catch (err) {
    fail(err);
  }
}

function describe() {
  try {
    const c = JSON.parse(classifyGraph($("graph").value));
    const flags = ["is_path", "is_cycle", "is_tree", "is_complete", "is_bipartite", "is_block_graph", "is_thick_leaved"]
      .filter((f) => c[f]).map((f) => f.slice(3).replace("_", " "));
    show(`<p>${c.n} vertices, ${c.m} edges, diameter ${c.diameter}, girth ${c.girth ?? "none"}<br>${flags.join(", ") || "no special class"}</p>`,
      JSON.stringify(c, null, 2));
  } catch (err) {
    fail(err);
  }
}

function gen() {
  try {
    $("graph").value = generateFamily($("family").value, $("params").value, BigInt($("seed").value || 0));
    run();
  } catch (err) {
    fail(err);
  }
}

await init();
$("family").addEventListener("change", (e) => { $("params").value = e.target.selectedOptions[0].dataset.params; });
$("gen").addEventListener("click", gen);
$("compute").addEventListener("click", run);
$("classify").addEventListener("click", describe);
gen();
