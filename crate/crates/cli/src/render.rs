//! Drawing code for a single diagram: unprimed nodes in the right column from
//! top to bottom, primed nodes in the left column.

use gelfand_core::diagrams::{Diagram, Node};

const STEP: f64 = 20.0;
const LEFT: f64 = 20.0;
const RIGHT: f64 = 80.0;

fn place(v: Node) -> (f64, f64) {
    let x = if v.primed { LEFT } else { RIGHT };
    (x, STEP * v.index as f64)
}

enum Stroke {
    Line((f64, f64), (f64, f64)),
    /// Arc between two nodes of one column, bulging towards the middle.
    Arc((f64, f64), (f64, f64), (f64, f64)),
}

fn strokes(d: &Diagram) -> Vec<Stroke> {
    let mut out = Vec::new();
    for part in d.parts() {
        let (tops, bottoms): (Vec<Node>, Vec<Node>) = part.iter().partition(|v| !v.primed);
        for column in [&tops, &bottoms] {
            for w in column.windows(2) {
                let (a, b) = (place(w[0]), place(w[1]));
                let bulge = (b.1 - a.1) / 2.0;
                let cx = if a.0 == RIGHT { a.0 - bulge } else { a.0 + bulge };
                out.push(Stroke::Arc(a, (cx, (a.1 + b.1) / 2.0), b));
            }
        }
        if let (Some(&t), Some(&b)) = (tops.first(), bottoms.first()) {
            out.push(Stroke::Line(place(t), place(b)));
        }
    }
    out
}

pub fn svg(d: &Diagram) -> String {
    let height = STEP * (d.n() as f64 + 1.0);
    let mut s = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"100\" height=\"{height}\" viewBox=\"0 0 100 {height}\">\n"
    );
    s.push_str("<g stroke=\"black\" stroke-width=\"2\" fill=\"none\">\n");
    for st in strokes(d) {
        match st {
            Stroke::Line(a, b) => s.push_str(&format!("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n", a.0, a.1, b.0, b.1)),
            Stroke::Arc(a, c, b) => {
                s.push_str(&format!("<path d=\"M {} {} Q {} {} {} {}\"/>\n", a.0, a.1, c.0, c.1, b.0, b.1))
            }
        }
    }
    s.push_str("</g>\n<g fill=\"black\">\n");
    for i in 1..=d.n() {
        for v in [Node::bottom(i), Node::top(i)] {
            let (x, y) = place(v);
            s.push_str(&format!("<circle cx=\"{x}\" cy=\"{y}\" r=\"3\"/>\n"));
        }
    }
    s.push_str("</g>\n</svg>\n");
    s
}

pub fn tikz(d: &Diagram) -> String {
    // TikZ has y pointing up; flip and scale so node i sits at height -i.
    let p = |(x, y): (f64, f64)| format!("({},{})", x / STEP, -y / STEP);
    let mut s = String::from("\\begin{tikzpicture}[thick]\n");
    for st in strokes(d) {
        match st {
            Stroke::Line(a, b) => s.push_str(&format!("  \\draw {} -- {};\n", p(a), p(b))),
            Stroke::Arc(a, c, b) => s.push_str(&format!("  \\draw {} .. controls {} .. {};\n", p(a), p(c), p(b))),
        }
    }
    for i in 1..=d.n() {
        for v in [Node::bottom(i), Node::top(i)] {
            s.push_str(&format!("  \\fill {} circle (2pt);\n", p(place(v))));
        }
    }
    s.push_str("\\end{tikzpicture}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use gelfand_core::diagrams::parse;

    #[test]
    fn identity_is_two_horizontal_lines() {
        let out = svg(&parse("1 1' | 2 2'", 2).unwrap());
        assert_eq!(out.matches("<line").count(), 2);
        assert!(out.contains("x1=\"80\" y1=\"20\" x2=\"20\" y2=\"20\""));
        assert!(!out.contains("<path"));
    }

    #[test]
    fn arcs_and_tikz() {
        let d = parse("1 2 | 1' 2'", 2).unwrap();
        assert_eq!(svg(&d).matches("<path").count(), 2);
        assert_eq!(tikz(&d).matches("controls").count(), 2);
    }
}
