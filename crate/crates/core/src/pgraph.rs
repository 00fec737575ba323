//! The graphs `Γ_I` on generalized compositions of parking type, and the
//! involution `ι` that realizes `Γ_I ≅ Γ_{I~}`.
//!
//! Vertices of `Γ_I` are the shuffles of `I` with `n + 1 - ℓ(I)` zeros that
//! are of parking type. An edge `J -> J'` labeled `i` exchanges a pair
//! `(a, 0)` in positions `(i, i+1)` into `(0, a)`: zeros move left. With this
//! orientation `I·0^k` is the unique source.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::caps::Caps;
use crate::comp::{Composition, GeneralizedComposition};
use crate::error::{Error, Result};
use crate::parking::{enumerate_nondecreasing_with, ParkingFamily};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub label: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaGraph {
    base: Composition,
    vertices: Vec<GeneralizedComposition>,
    index: BTreeMap<GeneralizedComposition, usize>,
    edges: Vec<Edge>,
}

/// All ways to interleave `parts` with zeros into a word of length `len`,
/// in lexicographic order of the positions of the nonzero parts.
fn shuffles_with_zeros(parts: &[u32], len: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; len];
    fn rec(parts: &[u32], next: usize, from: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if next == parts.len() {
            out.push(cur.clone());
            return;
        }
        let remaining = parts.len() - next;
        for pos in from..=cur.len() - remaining {
            cur[pos] = parts[next];
            rec(parts, next + 1, pos + 1, cur, out);
            cur[pos] = 0;
        }
    }
    rec(parts, 0, 0, &mut cur, &mut out);
    out
}

pub fn build_gamma(i: &Composition) -> Result<GammaGraph> {
    build_gamma_with(i, &Caps::default())
}

pub fn build_gamma_with(i: &Composition, caps: &Caps) -> Result<GammaGraph> {
    let n = i.weight();
    Caps::check("shuffle graphs", n, caps.graph)?;
    if i.is_empty() {
        return Err(Error::InvalidInput("the graph needs a nonempty composition".into()));
    }
    let mut vertices: Vec<GeneralizedComposition> = shuffles_with_zeros(i.parts(), n as usize + 1)
        .into_iter()
        .map(GeneralizedComposition::new)
        .filter(|j| j.is_parking_type())
        .collect();
    vertices.sort();
    let index: BTreeMap<GeneralizedComposition, usize> =
        vertices.iter().cloned().enumerate().map(|(k, v)| (v, k)).collect();
    let mut edges = Vec::new();
    for (from, v) in vertices.iter().enumerate() {
        let p = v.parts();
        for pos in 0..p.len() - 1 {
            if p[pos] > 0 && p[pos + 1] == 0 {
                let mut w = p.to_vec();
                w.swap(pos, pos + 1);
                if let Some(&to) = index.get(&GeneralizedComposition::new(w)) {
                    edges.push(Edge {
                        from,
                        to,
                        label: pos as u32 + 1,
                    });
                }
            }
        }
    }
    edges.sort();
    Ok(GammaGraph {
        base: i.clone(),
        vertices,
        index,
        edges,
    })
}

impl GammaGraph {
    pub fn base(&self) -> &Composition {
        &self.base
    }

    pub fn n(&self) -> u32 {
        self.base.weight()
    }

    pub fn vertices(&self) -> &[GeneralizedComposition] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_index(&self, v: &GeneralizedComposition) -> Option<usize> {
        self.index.get(v).copied()
    }

    /// Vertices without incoming edges.
    pub fn sources(&self) -> Vec<&GeneralizedComposition> {
        let mut has_in = vec![false; self.vertices.len()];
        for e in &self.edges {
            has_in[e.to] = true;
        }
        self.vertices
            .iter()
            .zip(has_in)
            .filter(|(_, h)| !h)
            .map(|(v, _)| v)
            .collect()
    }

    /// Vertices without outgoing edges.
    pub fn sinks(&self) -> Vec<&GeneralizedComposition> {
        let mut has_out = vec![false; self.vertices.len()];
        for e in &self.edges {
            has_out[e.from] = true;
        }
        self.vertices
            .iter()
            .zip(has_out)
            .filter(|(_, h)| !h)
            .map(|(v, _)| v)
            .collect()
    }

    /// Graphviz rendering; zeros are drawn as dots.
    pub fn to_dot(&self) -> String {
        let mut out = format!("digraph \"Gamma_{}\" {{\n", key_string(self.base.parts()));
        for (k, v) in self.vertices.iter().enumerate() {
            let cells: Vec<String> = v
                .parts()
                .iter()
                .map(|&a| if a == 0 { ".".to_string() } else { a.to_string() })
                .collect();
            out.push_str(&format!("  v{k} [label=\"({})\"];\n", cells.join(",")));
        }
        for e in &self.edges {
            out.push_str(&format!("  v{} -> v{} [label=\"{}\"];\n", e.from, e.to, e.label));
        }
        out.push_str("}\n");
        out
    }
}

fn key_string(parts: &[u32]) -> String {
    let sep = if parts.iter().all(|&p| p < 10) { "" } else { "," };
    parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(sep)
}

/// `I` followed by `n + 1 - ℓ(I)` zeros.
pub fn expected_source(i: &Composition) -> GeneralizedComposition {
    let mut v = i.parts().to_vec();
    v.resize(i.weight() as usize + 1, 0);
    GeneralizedComposition::new(v)
}

/// Every part but the last followed by exactly `part - 1` zeros, then zeros
/// up to length `n + 1`.
pub fn expected_sink(i: &Composition) -> GeneralizedComposition {
    let parts = i.parts();
    let mut v = Vec::new();
    for (k, &p) in parts.iter().enumerate() {
        v.push(p);
        if k + 1 < parts.len() {
            v.extend(std::iter::repeat_n(0, p as usize - 1));
        }
    }
    v.resize(i.weight() as usize + 1, 0);
    GeneralizedComposition::new(v)
}

/// Reverse `J`, put the parts of the conjugate of its corresponding
/// composition into the zero slots, and zero out the other slots.
pub fn iota(j: &GeneralizedComposition) -> Result<GeneralizedComposition> {
    if !j.is_parking_type() {
        return Err(Error::NotParkingType(j.parts().to_vec()));
    }
    let conj = j.corresponding_composition().conjugate();
    let mut fill = conj.parts().iter();
    let out = j
        .parts()
        .iter()
        .rev()
        .map(|&a| {
            if a == 0 {
                *fill.next().expect("slot count matches")
            } else {
                0
            }
        })
        .collect();
    Ok(GeneralizedComposition::new(out))
}

pub fn parking_type_compositions(n: u32) -> Result<Vec<GeneralizedComposition>> {
    parking_type_compositions_with(n, &Caps::default())
}

/// Evaluations of the nondecreasing parking functions of length `n`, each
/// with one trailing zero.
pub fn parking_type_compositions_with(n: u32, caps: &Caps) -> Result<Vec<GeneralizedComposition>> {
    let mut out: Vec<GeneralizedComposition> = enumerate_nondecreasing_with(ParkingFamily::Classic, n, caps)?
        .iter()
        .map(|w| {
            let mut v = w.evaluation(n as usize).parts().to_vec();
            v.push(0);
            GeneralizedComposition::new(v)
        })
        .collect();
    out.sort();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeImage {
    pub from: Vec<u32>,
    pub to: Vec<u32>,
    pub label: u32,
    pub image_from: Vec<u32>,
    pub image_to: Vec<u32>,
    /// Label of the image edge, `None` when the image is not an edge.
    pub image_label: Option<u32>,
}

/// Evidence that `ι` is an isomorphism `Γ_I -> Γ_{I~}` reflecting edge
/// labels `i -> n + 1 - i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsomorphismCertificate {
    pub base: Vec<u32>,
    pub conjugate: Vec<u32>,
    pub n: u32,
    pub orientation: &'static str,
    pub vertex_map: Vec<(Vec<u32>, Vec<u32>)>,
    pub edge_map: Vec<EdgeImage>,
    pub bijection: bool,
    pub labels_reflected: bool,
    pub directions_preserved: bool,
    pub source_to_source: bool,
    pub sink_to_sink: bool,
    pub passed: bool,
}

pub fn check_gamma_isomorphism(i: &Composition) -> Result<IsomorphismCertificate> {
    check_gamma_isomorphism_with(i, &Caps::default())
}

pub fn check_gamma_isomorphism_with(i: &Composition, caps: &Caps) -> Result<IsomorphismCertificate> {
    let conj = i.conjugate();
    let g = build_gamma_with(i, caps)?;
    let h = build_gamma_with(&conj, caps)?;
    let n = i.weight();

    let images: Vec<GeneralizedComposition> = g.vertices().iter().map(iota).collect::<Result<_>>()?;
    let mut targets: Vec<usize> = images.iter().filter_map(|v| h.vertex_index(v)).collect();
    let all_in = targets.len() == images.len();
    targets.sort_unstable();
    targets.dedup();
    let bijection = all_in && targets.len() == h.vertices().len() && images.len() == h.vertices().len();

    let h_edges: BTreeMap<(usize, usize), u32> = h.edges().iter().map(|e| ((e.from, e.to), e.label)).collect();
    let h_reversed: BTreeMap<(usize, usize), u32> = h.edges().iter().map(|e| ((e.to, e.from), e.label)).collect();
    let mut labels_reflected = true;
    let mut directions_preserved = true;
    let mut edge_map = Vec::with_capacity(g.edges().len());
    for e in g.edges() {
        let a = &images[e.from];
        let b = &images[e.to];
        let key = (h.vertex_index(a), h.vertex_index(b));
        let (forward, backward) = match key {
            (Some(x), Some(y)) => (h_edges.get(&(x, y)).copied(), h_reversed.get(&(x, y)).copied()),
            _ => (None, None),
        };
        if forward.is_none() {
            directions_preserved = false;
        }
        let image_label = forward.or(backward);
        if image_label != Some(n + 1 - e.label) {
            labels_reflected = false;
        }
        edge_map.push(EdgeImage {
            from: g.vertices()[e.from].parts().to_vec(),
            to: g.vertices()[e.to].parts().to_vec(),
            label: e.label,
            image_from: a.parts().to_vec(),
            image_to: b.parts().to_vec(),
            image_label,
        });
    }
    let edge_count_matches = g.edges().len() == h.edges().len();
    labels_reflected &= edge_count_matches;

    let src = expected_source(i);
    let sink = expected_sink(i);
    let source_to_source = g.sources() == vec![&src]
        && h.sources() == vec![&expected_source(&conj)]
        && iota(&src)? == expected_source(&conj);
    let sink_to_sink =
        g.sinks() == vec![&sink] && h.sinks() == vec![&expected_sink(&conj)] && iota(&sink)? == expected_sink(&conj);

    let vertex_map = g
        .vertices()
        .iter()
        .zip(&images)
        .map(|(v, w)| (v.parts().to_vec(), w.parts().to_vec()))
        .collect();
    let passed = bijection && labels_reflected && directions_preserved && source_to_source && sink_to_sink;
    Ok(IsomorphismCertificate {
        base: i.parts().to_vec(),
        conjugate: conj.parts().to_vec(),
        n,
        orientation: "zeros move left along edges",
        vertex_map,
        edge_map,
        bijection,
        labels_reflected,
        directions_preserved,
        source_to_source,
        sink_to_sink,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp::compositions;
    use crate::trees::delta_b;
    use num_bigint::BigUint;

    fn gc(p: &[u32]) -> GeneralizedComposition {
        GeneralizedComposition::new(p.to_vec())
    }

    fn c(p: &[u32]) -> Composition {
        Composition::from_slice(p)
    }

    #[test]
    fn small_graphs() {
        let g1 = build_gamma(&c(&[1])).unwrap();
        assert_eq!(g1.vertices(), [gc(&[1, 0])]);
        assert!(g1.edges().is_empty());
        let g11 = build_gamma(&c(&[1, 1])).unwrap();
        assert_eq!(g11.vertices(), [gc(&[1, 1, 0])]);
        assert!(g11.edges().is_empty());
        let g2 = build_gamma(&c(&[2])).unwrap();
        assert_eq!(g2.vertices(), [gc(&[2, 0, 0])]);
    }

    #[test]
    fn row_graph_is_a_path() {
        for n in 1..=6u32 {
            let g = build_gamma(&c(&[1; 6][..n as usize])).unwrap();
            assert_eq!(g.vertices().len(), 1);
            let h = build_gamma(&Composition::row(n)).unwrap();
            assert_eq!(h.vertices().len(), 1);
        }
        let g = build_gamma(&c(&[2, 1])).unwrap();
        assert_eq!(g.vertices(), [gc(&[2, 0, 1, 0]), gc(&[2, 1, 0, 0])]);
        assert_eq!(
            g.edges(),
            [Edge {
                from: 1,
                to: 0,
                label: 2
            }]
        );
    }

    #[test]
    fn vertex_counts_are_deltas() {
        for n in 1..=7u32 {
            for i in compositions(n) {
                let g = build_gamma(&i).unwrap();
                assert_eq!(BigUint::from(g.vertices().len()), delta_b(&i, 0).unwrap(), "{i}");
            }
        }
    }

    #[test]
    fn extremal_elements() {
        for n in 1..=7u32 {
            for i in compositions(n) {
                let g = build_gamma(&i).unwrap();
                assert_eq!(g.sources(), vec![&expected_source(&i)], "{i}");
                assert_eq!(g.sinks(), vec![&expected_sink(&i)], "{i}");
            }
        }
    }

    #[test]
    fn iota_example() {
        let j = gc(&[2, 1, 1, 0, 1, 2, 0, 2, 0, 0]);
        let k = iota(&j).unwrap();
        assert_eq!(k, gc(&[1, 2, 0, 5, 0, 0, 1, 0, 0, 0]));
        assert_eq!(iota(&k).unwrap(), j);
        assert_eq!(iota(&gc(&[1, 0])).unwrap(), gc(&[1, 0]));
        assert!(matches!(iota(&gc(&[0, 1])), Err(Error::NotParkingType(_))));
    }

    #[test]
    fn iota_is_an_involution() {
        for n in 1..=8u32 {
            for j in parking_type_compositions(n).unwrap() {
                let k = iota(&j).unwrap();
                assert!(k.is_parking_type());
                assert_eq!(k.corresponding_composition(), j.corresponding_composition().conjugate());
                assert_eq!(iota(&k).unwrap(), j);
            }
        }
    }

    #[test]
    fn isomorphism_certificates() {
        for n in 1..=6u32 {
            for i in compositions(n) {
                let cert = check_gamma_isomorphism(&i).unwrap();
                assert!(cert.passed, "{i}: {cert:?}");
            }
        }
        let cert = check_gamma_isomorphism(&c(&[3, 3, 1])).unwrap();
        assert!(cert.passed);
        assert_eq!(cert.conjugate, vec![2, 1, 2, 1, 1]);
        assert_eq!(
            cert.vertex_map.len(),
            build_gamma(&c(&[3, 3, 1])).unwrap().vertices().len()
        );
    }

    #[test]
    fn dot_output() {
        let g = build_gamma(&c(&[2, 1])).unwrap();
        let dot = g.to_dot();
        assert!(dot.starts_with("digraph \"Gamma_21\" {"));
        assert!(dot.contains("v0 [label=\"(2,.,1,.)\"];"));
        assert!(dot.contains("v1 -> v0 [label=\"2\"];"));
    }

    #[test]
    fn caps() {
        assert!(build_gamma(&Composition::row(10)).is_err());
    }
}
