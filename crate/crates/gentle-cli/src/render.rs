//! Schematic SVG: star diagrams at a basepoint, unfolded complexes and
//! Hasse diagrams. None of these is meant to be geometrically faithful.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::time::{SystemTime, UNIX_EPOCH};

use gentle::pointed::{RegionKind, Regions};
use gentle::quiver::GentleAlgebra;
use gentle::strings::{GradedString, Letter, Word};
use gentle::thick::Poset;
use gentle::walk::end_points;

struct Svg {
    w: f64,
    h: f64,
    body: String,
}

fn esc(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

impl Svg {
    fn new(w: f64, h: f64) -> Svg {
        Svg { w, h, body: String::new() }
    }

    fn line(&mut self, x1: f64, y1: f64, x2: f64, y2: f64, style: &str) {
        writeln!(self.body, r#"  <line x1="{x1:.1}" y1="{y1:.1}" x2="{x2:.1}" y2="{y2:.1}" {style}/>"#).unwrap();
    }

    fn circle(&mut self, x: f64, y: f64, r: f64, fill: &str) {
        writeln!(self.body, r#"  <circle cx="{x:.1}" cy="{y:.1}" r="{r:.1}" fill="{fill}" stroke="black"/>"#).unwrap();
    }

    fn text(&mut self, x: f64, y: f64, s: &str, size: u32) {
        writeln!(
            self.body,
            r#"  <text x="{x:.1}" y="{y:.1}" font-size="{size}" text-anchor="middle" font-family="sans-serif">{}</text>"#,
            esc(s)
        )
        .unwrap();
    }

    fn path(&mut self, d: &str, style: &str) {
        writeln!(self.body, r#"  <path d="{d}" fill="none" {style}/>"#).unwrap();
    }

    fn rect(&mut self, x: f64, y: f64, w: f64, h: f64) {
        writeln!(
            self.body,
            r#"  <rect x="{x:.1}" y="{y:.1}" width="{w:.1}" height="{h:.1}" rx="6" fill="white" stroke="black"/>"#
        )
        .unwrap();
    }

    fn finish(self) -> String {
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0}\" height=\"{:.0}\" viewBox=\"0 0 {:.0} {:.0}\">\n\
             <defs><marker id=\"head\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\">\
             <path d=\"M0,0 L10,5 L0,10 z\"/></marker></defs>\n{}</svg>\n",
            self.w, self.h, self.w, self.h, self.body
        )
    }
}

const STROKE: &str = r#"stroke="black" stroke-width="1.5""#;
const ARROW: &str = r#"stroke="black" stroke-width="1.5" marker-end="url(#head)""#;

/// Adds a generation comment unless the output has to be reproducible.
pub fn finish(svg: String, reproducible: bool) -> String {
    if reproducible {
        return svg;
    }
    let t = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
    match svg.find('\n') {
        Some(i) => format!("{}\n<!-- generated at unix time {t} -->{}", &svg[..i], &svg[i..]),
        None => svg,
    }
}

/// Half-edges at the basepoint as rays in boundary order; loops are drawn as
/// petals joining their two half-edges, other arcs as spokes to their far end.
pub fn star(alg: &GentleAlgebra, arcs: &[GradedString], v: usize, r: &Regions) -> String {
    let (cx, cy, rad) = (260.0, 250.0, 170.0);
    let mut svg = Svg::new(520.0, 560.0);
    let b = r.order.len().max(1) as f64;
    let angle = |i: f64| -PI / 2.0 + 2.0 * PI * (i - 0.5) / b;
    let at = |a: f64, k: f64| (cx + k * rad * a.cos(), cy + k * rad * a.sin());
    for (ai, s) in arcs.iter().enumerate() {
        let idx: Vec<usize> = r.order.iter().enumerate().filter(|(_, h)| h.arc == ai).map(|(i, _)| i + 1).collect();
        let label = s.literal(alg);
        match idx.as_slice() {
            [i, j] => {
                let (p, q) = (at(angle(*i as f64), 1.3), at(angle(*j as f64), 1.3));
                svg.path(&format!("M{cx:.1},{cy:.1} C{:.1},{:.1} {:.1},{:.1} {cx:.1},{cy:.1}", p.0, p.1, q.0, q.1), STROKE);
                let mid = (*i as f64 + *j as f64) / 2.0;
                let m = if (*j as f64 - *i as f64) > b / 2.0 { mid + b / 2.0 } else { mid };
                let (x, y) = at(angle(m), 1.05);
                svg.text(x, y, &label, 11);
            }
            [i] => {
                let (x, y) = at(angle(*i as f64), 1.0);
                svg.line(cx, cy, x, y, STROKE);
                let (l, rr) = end_points(alg, s);
                let far = if l == v { rr } else { l };
                svg.circle(x, y, 5.0, "white");
                let (tx, ty) = at(angle(*i as f64), 1.15);
                svg.text(tx, ty, &alg.threads()[far].name, 12);
                let (lx, ly) = at(angle(*i as f64) + 0.12, 0.6);
                svg.text(lx, ly, &label, 11);
            }
            _ => {}
        }
    }
    for (k, kind) in r.kinds.iter().enumerate() {
        let (x, y) = match k {
            0 => at(angle(0.75), 0.32),
            k if k == r.order.len() => at(angle(b + 0.25), 0.32),
            k => at(angle(k as f64 + 0.5), 0.32),
        };
        let mark = match kind {
            RegionKind::Terminal => "",
            RegionKind::Cyclic => "*",
            RegionKind::Terminating => "'",
        };
        svg.text(x, y + 4.0, &format!("R{k}{mark}"), 10);
    }
    svg.circle(cx, cy, 7.0, "black");
    svg.text(cx, cy + 24.0, &alg.threads()[v].name, 13);
    let tau: Vec<String> = r.tau.iter().map(|(k, t)| format!("τ({k})={t}")).collect();
    svg.text(cx, 530.0, &tau.join("  "), 12);
    svg.finish()
}

/// Nodes `P_{c_l}` placed left to right and by degree, letters on the edges,
/// each edge pointing down in degree like the differential.
pub fn complex(alg: &GentleAlgebra, w: &Word) -> String {
    let (grading, nodes, letters, closing): (Vec<i32>, Vec<usize>, Vec<Letter>, Option<String>) = match w {
        Word::String(s) => (s.grading(), s.nodes(alg), s.letters.clone(), None),
        Word::Band(b) => {
            let mut g = b.grading();
            let mut n = b.nodes(alg);
            g.push(g[0]);
            n.push(n[0]);
            (g, n, b.letters.clone(), Some(format!("λ = {}, dim {}", b.lambda, b.dim)))
        }
    };
    let lo = *grading.iter().min().unwrap_or(&0);
    let hi = *grading.iter().max().unwrap_or(&0);
    let (dx, dy) = (90.0, 80.0);
    let width = 80.0 + dx * (nodes.len().max(1) - 1) as f64 + 40.0;
    let height = 80.0 + dy * (hi - lo) as f64 + 60.0;
    let mut svg = Svg::new(width.max(200.0), height);
    let pos = |l: usize| (60.0 + dx * l as f64, 50.0 + dy * (hi - grading[l]) as f64);
    for d in lo..=hi {
        let y = 50.0 + dy * (hi - d) as f64;
        svg.text(20.0, y + 4.0, &d.to_string(), 10);
    }
    for (u, l) in letters.iter().enumerate() {
        let (a, b) = (pos(u), pos(u + 1));
        // the differential runs from the node of higher degree
        let (from, to) = if grading[u + 1] > grading[u] { (b, a) } else { (a, b) };
        let len = ((to.0 - from.0).powi(2) + (to.1 - from.1).powi(2)).sqrt().max(1.0);
        let shrink = 18.0 / len;
        let (x1, y1) = (from.0 + (to.0 - from.0) * shrink, from.1 + (to.1 - from.1) * shrink);
        let (x2, y2) = (to.0 - (to.0 - from.0) * shrink, to.1 - (to.1 - from.1) * shrink);
        let style = if closing.is_some() && u + 1 == letters.len() { r#"stroke="black" stroke-dasharray="4 3" marker-end="url(#head)""# } else { ARROW };
        svg.line(x1, y1, x2, y2, style);
        let name = l.arrows.iter().map(|&x| alg.arrow(x).name.as_str()).collect::<Vec<_>>().join(".");
        svg.text((a.0 + b.0) / 2.0, (a.1 + b.1) / 2.0 - 6.0, &name, 11);
    }
    for (l, &c) in nodes.iter().enumerate() {
        let (x, y) = pos(l);
        svg.text(x, y + 4.0, &format!("P{}", alg.vertex_name(c)), 13);
    }
    if let Some(c) = closing {
        svg.text(width / 2.0, height - 15.0, &c, 11);
    }
    svg.finish()
}

/// Classes in rows by height above the minima, covering edges as lines.
pub fn hasse(p: &Poset) -> String {
    let n = p.classes.len();
    let mut level = vec![0usize; n];
    // longest chain from below; the edge set is acyclic
    for _ in 0..n {
        for ed in &p.edges {
            level[ed.upper] = level[ed.upper].max(level[ed.lower] + 1);
        }
    }
    let top = level.iter().copied().max().unwrap_or(0);
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); top + 1];
    for (i, &l) in level.iter().enumerate() {
        rows[l].push(i);
    }
    let labels: Vec<String> = p.classes.iter().map(|c| c.representative.join(" | ")).collect();
    let box_w = labels.iter().map(|l| l.chars().count()).max().unwrap_or(4) as f64 * 7.0 + 20.0;
    let widest = rows.iter().map(Vec::len).max().unwrap_or(1) as f64;
    let (gap, dy) = (30.0, 90.0);
    let width = widest * (box_w + gap) + gap;
    let height = dy * (top + 1) as f64 + 40.0;
    let mut xy = vec![(0.0, 0.0); n];
    for (l, row) in rows.iter().enumerate() {
        let span = row.len() as f64 * (box_w + gap) - gap;
        let x0 = (width - span) / 2.0;
        for (k, &i) in row.iter().enumerate() {
            xy[i] = (x0 + k as f64 * (box_w + gap) + box_w / 2.0, height - 40.0 - dy * l as f64);
        }
    }
    let mut svg = Svg::new(width, height);
    for ed in &p.edges {
        let (a, b) = (xy[ed.lower], xy[ed.upper]);
        let style = if ed.certified { STROKE } else { r#"stroke="black" stroke-dasharray="5 4""# };
        svg.line(a.0, a.1 - 14.0, b.0, b.1 + 14.0, style);
    }
    for &(i, j) in &p.unknown {
        let (a, b) = (xy[i], xy[j]);
        svg.line(a.0, a.1, b.0, b.1, r#"stroke="gray" stroke-dasharray="1 4""#);
    }
    for i in 0..n {
        let (x, y) = xy[i];
        svg.rect(x - box_w / 2.0, y - 14.0, box_w, 28.0);
        svg.text(x, y + 4.0, &labels[i], 12);
    }
    svg.finish()
}
