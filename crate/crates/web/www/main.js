import init, { describe, find_factor, find_hamilton_cycle } from "./pkg/oddvt_web.js";

const svg = document.getElementById("drawing");
const output = document.getElementById("output");
const input = document.getElementById("input");
const NS = "http://www.w3.org/2000/svg";
const COLORS = ["#d33", "#27c", "#2a5", "#e90", "#93c", "#0aa", "#c5a", "#775"];

function el(name, attrs, parent = svg) {
  const node = document.createElementNS(NS, name);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  parent.appendChild(node);
  return node;
}

function positions(n) {
  const r = n > 30 ? 185 : 170;
  return Array.from({ length: n }, (_, i) => {
    const t = (2 * Math.PI * i) / n - Math.PI / 2;
    return [r * Math.cos(t), r * Math.sin(t)];
  });
}

function draw(n, edges, cycles = []) {
  svg.replaceChildren();
  const pos = positions(n);
  for (const [a, b] of edges) {
    el("line", { class: "edge", x1: pos[a][0], y1: pos[a][1], x2: pos[b][0], y2: pos[b][1] });
  }
  cycles.forEach((cycle, i) => {
    const pts = cycle.map((v) => pos[v].join(",")).join(" ");
    el("polygon", { class: "hi", points: pts, stroke: COLORS[i % COLORS.length] });
  });
  for (let v = 0; v < n; v++) {
    el("circle", { class: "vertex", cx: pos[v][0], cy: pos[v][1], r: n > 30 ? 6 : 9 });
    if (n <= 30) {
      const t = el("text", { class: "label", x: pos[v][0], y: pos[v][1] });
      t.textContent = v;
    }
  }
}

function show(lines) {
  output.textContent = lines.join("\n");
}

function flag(b) {
  return b === null || b === undefined ? "undecided" : b ? "yes" : "no";
}

const ops = {
  describe(text) {
    const d = JSON.parse(describe(text));
    if (d.error) return show([d.error]);
    draw(d.n, d.edges);
    show([
      `graph6: ${d.graph6}`,
      `order ${d.n}, ${d.edges.length} edges, degree ${d.degree ?? "irregular"}`,
      `connected: ${flag(d.connected)}`,
      `odd order: ${flag(d.odd_order)}`,
      `vertex-transitive: ${flag(d.vertex_transitive)}`,
      `automorphisms: ${d.automorphism_group_order ?? "too many to list"}`,
    ]);
  },
  factor(text) {
    const d = JSON.parse(describe(text));
    if (d.error) return show([d.error]);
    const f = JSON.parse(find_factor(text));
    if (f.error) {
      draw(d.n, d.edges);
      return show([f.error]);
    }
    const cert = f.certificate;
    draw(d.n, d.edges, cert ? cert.factor : []);
    const lines = [`verdict: ${f.verdict}`];
    if (cert) {
      lines.push(`${cert.cycle_count} cycles of length ${cert.cycle_length}, route ${cert.route.kind}`);
      cert.factor.forEach((c) => lines.push(`  (${c.join(" ")})`));
    }
    f.notes.forEach((n) => lines.push(`note: ${n}`));
    show(lines);
  },
  hamilton(text) {
    const h = JSON.parse(find_hamilton_cycle(text));
    if (h.error) return show([h.error]);
    const out = h.procedure.outcome;
    const cycle = out.cycle ?? h.oracle?.cycle;
    draw(h.n, h.edges, cycle ? [cycle] : []);
    const lines = [];
    h.procedure.levels.forEach((l, i) => {
      const c = l.certificate;
      let line = `level ${i}: order ${l.order}, ${c.cycle_count} x C${c.cycle_length} via ${c.route.kind}`;
      if (l.quotient) {
        const q = l.quotient;
        line += `; quotient order ${q.order}, connected ${flag(q.connected)}, odd ${flag(q.odd_order)}, vertex-transitive ${flag(q.vertex_transitive)}`;
      }
      lines.push(line);
    });
    lines.push(`procedure: ${out.status}${out.level !== undefined ? ` at level ${out.level}` : ""}`);
    if (out.cycle) lines.push(`  (${out.cycle.join(" ")})`);
    if (h.oracle) {
      lines.push(`oracle: ${h.oracle.verdict}`);
      if (!out.cycle && h.oracle.cycle) lines.push(`  (${h.oracle.cycle.join(" ")})  drawn`);
    } else {
      lines.push("oracle: skipped above 24 vertices");
    }
    show(lines);
  },
};

await init();
for (const button of document.querySelectorAll("button[data-op]")) {
  button.addEventListener("click", () => {
    show(["Working…"]);
    // let the message paint before the search blocks the thread
    setTimeout(() => ops[button.dataset.op](input.value), 10);
  });
}
input.addEventListener("keydown", (e) => {
  if (e.key === "Enter") {
    e.preventDefault();
    ops.describe(input.value);
  }
});
ops.describe(input.value);
