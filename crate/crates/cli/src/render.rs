//! Text renderings of charts and composition series.

use std::fmt::Write as _;

use isoext::comodule::CompositionSeries;
use isoext::extengine::ExtChart;
use isoext::specseq::Engine;

pub fn tsv(chart: &ExtChart, input: &str, engine: Engine) -> String {
    let b = chart.bounds;
    let engine = match engine {
        Engine::Resolution => "resolution",
        Engine::Cobar => "cobar",
    };
    let weight = b.weight.map_or("all".to_string(), |(lo, hi)| format!("{lo}..{hi}"));
    let mut out = format!(
        "# isoext chart\n# input {input}\n# engine {engine}\n# bounds max_s={} max_stem={} weight={weight}\n# s\tt\tu\tdim\n",
        b.max_s, b.max_stem
    );
    for (d, n) in chart.iter() {
        writeln!(out, "{}\t{}\t{}\t{n}", d.s, d.t, d.u).unwrap();
    }
    out
}

const CELL: i32 = 40;
const MARGIN: i32 = 40;

/// An Adams chart: stem `t - s` to the right, filtration `s` upwards, one dot
/// per dimension.
pub fn svg(chart: &ExtChart, input: &str) -> String {
    let b = chart.bounds;
    let cols = b.max_stem.max(0) + 1;
    let rows = b.max_s as i32 + 1;
    let (w, h) = (cols * CELL + 2 * MARGIN, rows * CELL + 2 * MARGIN);
    let x = |stem: i32| MARGIN + stem * CELL + CELL / 2;
    let y = |s: i32| h - MARGIN - s * CELL - CELL / 2;
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n\
         <title>Ext chart: {input}</title>\n<rect width=\"{w}\" height=\"{h}\" fill=\"white\"/>\n"
    );
    out.push_str("<g stroke=\"#ddd\" stroke-width=\"1\">\n");
    for stem in 0..cols {
        writeln!(out, "<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\"/>", x(stem), MARGIN, h - MARGIN).unwrap();
    }
    for s in 0..rows {
        writeln!(out, "<line x1=\"{1}\" y1=\"{0}\" x2=\"{2}\" y2=\"{0}\"/>", y(s), MARGIN, w - MARGIN).unwrap();
    }
    out.push_str("</g>\n<g font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">\n");
    for stem in 0..cols {
        writeln!(out, "<text x=\"{}\" y=\"{}\">{stem}</text>", x(stem), h - MARGIN / 2).unwrap();
    }
    for s in 0..rows {
        writeln!(out, "<text x=\"{}\" y=\"{}\">{s}</text>", MARGIN / 2, y(s) + 3).unwrap();
    }
    out.push_str("</g>\n<g fill=\"black\">\n");
    // several classes (different weights or dimensions) can share a cell
    let mut cell_count = std::collections::BTreeMap::<(i32, u32), i32>::new();
    for (d, n) in chart.iter() {
        for _ in 0..n {
            let k = cell_count.entry((d.stem(), d.s)).or_insert(0);
            let dx = (*k % 4) * 8 - 12;
            let dy = (*k / 4) * 8;
            writeln!(
                out,
                "<circle cx=\"{}\" cy=\"{}\" r=\"3\"><title>({},{},{})</title></circle>",
                x(d.stem()) + dx,
                y(d.s as i32) - dy,
                d.s,
                d.t,
                d.u
            )
            .unwrap();
            *k += 1;
        }
    }
    out.push_str("</g>\n</svg>\n");
    out
}

pub fn series(s: &CompositionSeries) -> String {
    let mut out = String::from("# layer\tp\tq\telement\tcocycle\n");
    for (i, layer) in s.layers.iter().enumerate() {
        let cocycle = if layer.cocycle.is_empty() {
            "0".to_string()
        } else {
            layer.cocycle.iter().map(|(m, k)| format!("{m}:{}", s.layers[*k].label)).collect::<Vec<_>>().join("+")
        };
        writeln!(out, "{i}\t{}\t{}\t{}\t{cocycle}", layer.degree.p, layer.degree.q, layer.label).unwrap();
    }
    out
}
