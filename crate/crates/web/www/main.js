import init, { character_table, decide, orbit_explorer } from "./pkg/ostar_web.js";

const $ = (id) => document.getElementById(id);

const PARAMS = {
  dihedral: [["s", 3]],
  pq: [["p", 3], ["q", 7], ["r", 2]],
  z_group: [["s", 5], ["t", 4], ["r", 2]],
  custom: [],
};

function drawParams() {
  const fam = $("family").value;
  $("custom").hidden = fam !== "custom";
  $("params").innerHTML = PARAMS[fam]
    .map(([k, v]) => `<label>${k} <input id="p_${k}" type="number" min="1" value="${v}"></label>`)
    .join("");
}

function config() {
  const fam = $("family").value;
  if (fam === "custom") return $("custom").value;
  const params = Object.fromEntries(PARAMS[fam].map(([k]) => [k, Number($(`p_${k}`).value)]));
  return JSON.stringify({ family: { [fam]: params }, rep: $("rep").value, n: Number($("n").value) });
}

function el(tag, text, cls) {
  const e = document.createElement(tag);
  if (text !== undefined) e.textContent = text;
  if (cls) e.className = cls;
  return e;
}

function grid(header, rows, zeroTest = () => false) {
  const t = el("table");
  const h = t.insertRow();
  header.forEach((c) => h.appendChild(el("th", c)));
  rows.forEach((r) => {
    const tr = t.insertRow();
    r.forEach((c) => tr.appendChild(el("td", String(c), zeroTest(c) ? "zero" : undefined)));
  });
  return t;
}

function call(f) {
  $("error").textContent = "";
  $("out").replaceChildren();
  try {
    f();
  } catch (e) {
    $("error").textContent = String(e);
  }
}

function showTable() {
  const r = JSON.parse(character_table(config()));
  const t = r.character_table;
  $("out").appendChild(el("h2", `${r.group.label}, order ${r.group.order}, values in Q(ζ_${t.conductor})`));
  const header = ["χ", "deg", ...t.classes.map((c) => `[${c.A}|${c.H}] ×${c.size}`)];
  const rows = t.characters.map((c) => [c.index, c.degree, ...c.approx]);
  $("out").appendChild(grid(header, rows, (c) => c === "0.0000" || c === "0.000000"));
  $("chi").max = t.characters.length - 1;
}

function showDecide() {
  const r = JSON.parse(decide(config(), $("verify").checked));
  $("out").appendChild(el("h2", `${r.group.label}, m = ${r.m}, n = ${r.n}`));
  const header = ["χ", "deg", "status", "justification", "trail"];
  if (r.verification) header.push("brute force", "agrees");
  const t = grid(header, []);
  r.decisions.forEach((d, i) => {
    const tr = t.insertRow();
    tr.appendChild(el("td", d.chi));
    tr.appendChild(el("td", d.degree));
    tr.appendChild(el("td", d.verdict.status, d.verdict.status));
    tr.appendChild(el("td", d.verdict.justification));
    tr.appendChild(el("td", d.trail.map((v) => `${v.justification}: ${v.status}`).join("; ")));
    if (r.verification) {
      const v = r.verification[i];
      tr.appendChild(el("td", v.brute_force.status, v.brute_force.status));
      tr.appendChild(el("td", v.agrees_with_decision === null ? "n/a" : String(v.agrees_with_decision)));
    }
  });
  $("out").appendChild(t);
  const pre = el("pre", JSON.stringify(r.decisions.map((d) => d.verdict.witness), null, 1));
  const details = el("details");
  details.appendChild(el("summary", "witnesses"));
  details.appendChild(pre);
  $("out").appendChild(details);
}

function showOrbits() {
  const r = JSON.parse(orbit_explorer(config(), Number($("chi").value)));
  $("out").appendChild(
    el("h2", `χ${r.chi} (degree ${r.degree}): dim V_χ = ${r.dim}; ${r.surviving_orbits} of ${r.orbit_count} orbits survive`),
  );
  if (r.truncated) $("out").appendChild(el("p", `showing the first ${r.orbits.length} orbits`));
  r.orbits.forEach((o) => {
    const fam = o.orthogonal_family.length;
    $("out").appendChild(
      el("h3", `α = (${o.rep.join(",")}): orbit ${o.orbit_size}, |G_α| = ${o.stabilizer_order}, ` +
        `s_α = ${o.s_alpha} = rank, largest orthogonal family ${fam}`),
    );
    const header = ["", ...o.entries.map((_, j) => `σ${j}`)];
    const rows = o.entries.map((row, i) => [`σ${i}`, ...row]);
    $("out").appendChild(grid(header, rows, (c) => c === "0.0000"));
  });
}

await init();
drawParams();
$("family").addEventListener("change", drawParams);
$("table").addEventListener("click", () => call(showTable));
$("decide").addEventListener("click", () => call(showDecide));
$("explore").addEventListener("click", () => call(showOrbits));
