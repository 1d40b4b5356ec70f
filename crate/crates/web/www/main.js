import init, { evaluate, order, hasse } from "./pkg/jlring_web.js";

const $ = (id) => document.getElementById(id);
const scenario = () => $("scenario").value;

function show(el, reply, render) {
  const r = JSON.parse(reply);
  el.classList.toggle("error", !r.ok);
  el.textContent = r.ok ? render(r) : r.error;
  return r.ok ? r : null;
}

function draw(r) {
  const byRank = new Map();
  r.nodes.forEach((n, i) => {
    if (!byRank.has(n.rank)) byRank.set(n.rank, []);
    byRank.get(n.rank).push(i);
  });
  const ranks = [...byRank.keys()].sort((a, b) => a - b);
  const widest = Math.max(...[...byRank.values()].map((v) => v.length));
  const dx = 170, dy = 70;
  const width = Math.max(widest * dx, 300), height = ranks.length * dy + 20;
  const pos = [];
  ranks.forEach((rank, level) => {
    const row = byRank.get(rank);
    row.forEach((i, j) => {
      pos[i] = [(j + 0.5) * width / row.length, height - 20 - level * dy];
    });
  });
  const ns = "http://www.w3.org/2000/svg";
  const svg = document.createElementNS(ns, "svg");
  svg.setAttribute("width", width);
  svg.setAttribute("height", height + 20);
  for (const [x, y] of r.edges) {
    const line = document.createElementNS(ns, "line");
    line.setAttribute("x1", pos[x][0]); line.setAttribute("y1", pos[x][1]);
    line.setAttribute("x2", pos[y][0]); line.setAttribute("y2", pos[y][1]);
    line.setAttribute("stroke", "#888");
    svg.appendChild(line);
  }
  r.nodes.forEach((n, i) => {
    const label = document.createElementNS(ns, "text");
    label.setAttribute("x", pos[i][0]);
    label.setAttribute("y", pos[i][1]);
    label.setAttribute("text-anchor", "middle");
    label.setAttribute("fill", n.mobius === 0 ? "#999" : "#000");
    label.textContent = `${n.label.replace(/^Std/, "")}  μ=${n.mobius}`;
    const box = document.createElementNS(ns, "rect");
    svg.appendChild(label);
    const b = label.getBBox();
    box.setAttribute("x", b.x - 3); box.setAttribute("y", b.y - 2);
    box.setAttribute("width", b.width + 6); box.setAttribute("height", b.height + 4);
    box.setAttribute("fill", "white"); box.setAttribute("stroke", "#ccc");
    svg.insertBefore(box, label);
  });
  $("diagram").replaceChildren(svg);
}

await init();

$("eval").onclick = () =>
  show($("eval-out"), evaluate($("op").value, $("expr").value, scenario()), (r) => r.result);

$("order").onclick = () =>
  show($("order-out"), order($("order-a").value, $("order-b").value, scenario()), (r) =>
    [String(r.related), ...r.certificate.map((s, i) => `  ${i + 1}. ${s.pair[0]} + ${s.pair[1]} -> ${s.result}`)].join("\n"));

$("hasse").onclick = () => {
  $("diagram").replaceChildren();
  const r = show($("hasse-out"), hasse($("top").value, scenario()),
    (r) => `${r.nodes.length} elements, ${r.edges.length} covering relations`);
  if (r) draw(r);
};
