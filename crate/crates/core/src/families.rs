//! Parameterized constructors for the named graph families and products.
//!
//! Canonical vertex orders are fixed so that exact values and layer
//! computations are reproducible:
//! - `path(n)`, `cycle(n)`: vertices 0..n in walk order.
//! - `multipartite(a1,..,ak)`: parts laid out consecutively.
//! - `star(n)`: leaves 0..n, hub last.
//! - `fan(n)`: join of `path(n)` with a hub placed last.
//! - `lollipop(m,n)`: clique 0..m, then the path; bridge (m-1, m).
//! - `hypercube(k)`: vertices are the binary codes 0..2^k, adjacency is
//!   Hamming distance one.
//! - `petersen()`: Kneser graph K(5,2); vertices are the 2-subsets of
//!   {0..4} in lexicographic order, edges join disjoint pairs.
//! - products: vertex (u, v) maps to index `u * |V(H)| + v`.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A recipe for one graph: a named family or a product of recipes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteMultipartite(Vec<usize>),
    Star(usize),
    Fan(usize),
    Lollipop(usize, usize),
    Hypercube(u32),
    Petersen,
    Join(Box<FamilySpec>, Box<FamilySpec>),
    Strong(Box<FamilySpec>, Box<FamilySpec>),
    Cartesian(Box<FamilySpec>, Box<FamilySpec>),
    /// Generalized lexicographic product H[I]: base graph, one fiber per
    /// base vertex.
    GeneralizedLex(Box<FamilySpec>, Vec<FamilySpec>),
}

impl FamilySpec {
    /// Materializes the spec, validating parameters per family.
    pub fn build(&self) -> Result<Graph> {
        let g = self.build_unnamed()?;
        Ok(g.with_name(self.to_string()))
    }

    fn build_unnamed(&self) -> Result<Graph> {
        match self {
            FamilySpec::Path(n) => path(*n),
            FamilySpec::Cycle(n) => cycle(*n),
            FamilySpec::Complete(n) => complete(*n),
            FamilySpec::CompleteMultipartite(parts) => complete_multipartite(parts),
            FamilySpec::Star(n) => star(*n),
            FamilySpec::Fan(n) => fan(*n),
            FamilySpec::Lollipop(m, n) => lollipop(*m, *n),
            FamilySpec::Hypercube(k) => hypercube(*k),
            FamilySpec::Petersen => Ok(petersen()),
            FamilySpec::Join(a, b) => Ok(join(&a.build_unnamed()?, &b.build_unnamed()?)),
            FamilySpec::Strong(a, b) => strong_product(&a.build_unnamed()?, &b.build_unnamed()?),
            FamilySpec::Cartesian(a, b) => {
                cartesian_product(&a.build_unnamed()?, &b.build_unnamed()?)
            }
            FamilySpec::GeneralizedLex(base, fibers) => {
                let h = base.build_unnamed()?;
                let built: Vec<Graph> =
                    fibers.iter().map(|f| f.build_unnamed()).collect::<Result<_>>()?;
                generalized_lexicographic(&h, &built)
            }
        }
    }

    /// Parses the `name(args)` grammar, e.g. `lollipop(4,3)` or
    /// `cartesian(complete(2),cycle(5))`. Errors carry the byte position.
    pub fn parse(s: &str) -> Result<FamilySpec> {
        let mut p = Parser { src: s, pos: 0 };
        let spec = p.spec()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(p.err("trailing input after family expression"));
        }
        Ok(spec)
    }
}

impl std::fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path({n})"),
            FamilySpec::Cycle(n) => write!(f, "cycle({n})"),
            FamilySpec::Complete(n) => write!(f, "complete({n})"),
            FamilySpec::CompleteMultipartite(parts) => {
                let args: Vec<String> = parts.iter().map(|a| a.to_string()).collect();
                write!(f, "multipartite({})", args.join(","))
            }
            FamilySpec::Star(n) => write!(f, "star({n})"),
            FamilySpec::Fan(n) => write!(f, "fan({n})"),
            FamilySpec::Lollipop(m, n) => write!(f, "lollipop({m},{n})"),
            FamilySpec::Hypercube(k) => write!(f, "hypercube({k})"),
            FamilySpec::Petersen => write!(f, "petersen()"),
            FamilySpec::Join(a, b) => write!(f, "join({a},{b})"),
            FamilySpec::Strong(a, b) => write!(f, "strong({a},{b})"),
            FamilySpec::Cartesian(a, b) => write!(f, "cartesian({a},{b})"),
            FamilySpec::GeneralizedLex(base, fibers) => {
                write!(f, "lex({base}")?;
                for fiber in fibers {
                    write!(f, ",{fiber}")?;
                }
                write!(f, ")")
            }
        }
    }
}

fn bad(family: &str, reason: impl Into<String>) -> Error {
    Error::BadFamily {
        family: family.into(),
        reason: reason.into(),
    }
}

fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(bad("path", "order must be at least 1"));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::build(n, &edges)
}

fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(bad("cycle", "order must be at least 3"));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::build(n, &edges)
}

fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(bad("complete", "order must be at least 1"));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::build(n, &edges)
}

fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.len() < 2 {
        return Err(bad("multipartite", "need at least two parts"));
    }
    if parts.contains(&0) {
        return Err(bad("multipartite", "every part must be nonempty"));
    }
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &a) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, a));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if part_of[u] != part_of[v] {
                edges.push((u, v));
            }
        }
    }
    Graph::build(n, &edges)
}

fn star(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(bad("star", "need at least one leaf"));
    }
    let edges: Vec<_> = (0..n).map(|leaf| (leaf, n)).collect();
    Graph::build(n + 1, &edges)
}

fn fan(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(bad("fan", "path part must have at least 1 vertex"));
    }
    Ok(join(&path(n)?, &complete(1)?))
}

fn lollipop(m: usize, n: usize) -> Result<Graph> {
    if m < 3 {
        return Err(bad("lollipop", "clique part needs at least 3 vertices"));
    }
    if n < 1 {
        return Err(bad("lollipop", "path part needs at least 1 vertex"));
    }
    let mut edges = Vec::new();
    for u in 0..m {
        for v in (u + 1)..m {
            edges.push((u, v));
        }
    }
    edges.push((m - 1, m));
    for i in 1..n {
        edges.push((m + i - 1, m + i));
    }
    Graph::build(m + n, &edges)
}

fn hypercube(k: u32) -> Result<Graph> {
    if k == 0 || k > 12 {
        return Err(bad("hypercube", "dimension must be in 1..=12"));
    }
    let n = 1usize << k;
    let mut edges = Vec::new();
    for u in 0..n {
        for bit in 0..k {
            let v = u ^ (1 << bit);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    Graph::build(n, &edges)
}

/// Petersen graph as Kneser K(5,2), fixed edge list.
fn petersen() -> Graph {
    let pairs: Vec<(usize, usize)> = (0..5)
        .flat_map(|a| ((a + 1)..5).map(move |b| (a, b)))
        .collect();
    debug_assert_eq!(pairs.len(), 10);
    let mut edges = Vec::new();
    for i in 0..10 {
        for j in (i + 1)..10 {
            let (a, b) = pairs[i];
            let (c, d) = pairs[j];
            if a != c && a != d && b != c && b != d {
                edges.push((i, j));
            }
        }
    }
    Graph::build(10, &edges).expect("fixed edge list is valid")
}

/// Join G + H: disjoint union plus every cross edge. G's block keeps
/// indices 0..n1, H's block follows.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let n1 = g.num_vertices();
    let n2 = h.num_vertices();
    let mut edges = g.edges();
    for (u, v) in h.edges() {
        edges.push((n1 + u, n1 + v));
    }
    for u in 0..n1 {
        for v in 0..n2 {
            edges.push((u, n1 + v));
        }
    }
    Graph::build(n1 + n2, &edges).expect("join of valid graphs is valid")
}

#[inline]
fn pair_index(u: usize, v: usize, n2: usize) -> usize {
    u * n2 + v
}

/// Strong product G x H with the canonical (u, v) -> u * |V(H)| + v order.
pub fn strong_product(g: &Graph, h: &Graph) -> Result<Graph> {
    product_impl(g, h, true)
}

/// Cartesian product with the same vertex order.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    product_impl(g, h, false)
}

fn product_impl(g: &Graph, h: &Graph, diagonal: bool) -> Result<Graph> {
    let (n1, n2) = (g.num_vertices(), h.num_vertices());
    let mut edges = Vec::new();
    for (u1, u2) in g.edges() {
        for v in 0..n2 {
            edges.push((pair_index(u1, v, n2), pair_index(u2, v, n2)));
        }
    }
    for (v1, v2) in h.edges() {
        for u in 0..n1 {
            edges.push((pair_index(u, v1, n2), pair_index(u, v2, n2)));
        }
    }
    if diagonal {
        for (u1, u2) in g.edges() {
            for (v1, v2) in h.edges() {
                edges.push((pair_index(u1, v1, n2), pair_index(u2, v2, n2)));
                edges.push((pair_index(u1, v2, n2), pair_index(u2, v1, n2)));
            }
        }
    }
    Graph::build(n1 * n2, &edges)
}

/// Generalized lexicographic product H[I]: each vertex v of H is blown up
/// into its fiber I_v; fibers joined completely along edges of H.
/// Vertex order: fibers laid out consecutively in H's vertex order.
pub fn generalized_lexicographic(h: &Graph, fibers: &[Graph]) -> Result<Graph> {
    if fibers.len() != h.num_vertices() {
        return Err(bad(
            "lex",
            format!(
                "need one fiber per base vertex: base has {}, got {} fibers",
                h.num_vertices(),
                fibers.len()
            ),
        ));
    }
    let mut offset = Vec::with_capacity(fibers.len());
    let mut total = 0usize;
    for fiber in fibers {
        offset.push(total);
        total += fiber.num_vertices();
    }
    let mut edges = Vec::new();
    for (v, fiber) in fibers.iter().enumerate() {
        for (a, b) in fiber.edges() {
            edges.push((offset[v] + a, offset[v] + b));
        }
    }
    for (v1, v2) in h.edges() {
        for a in 0..fibers[v1].num_vertices() {
            for b in 0..fibers[v2].num_vertices() {
                edges.push((offset[v1] + a, offset[v2] + b));
            }
        }
    }
    Graph::build(total, &edges)
}

/// Confirms the product distance laws by BFS on the built products:
/// max of factor distances for the strong product, sum for the cartesian.
/// Capped at 400 product vertices.
pub fn distance_check_products(g: &Graph, h: &Graph) -> Result<bool> {
    use crate::dist::DistMatrix;
    let (n1, n2) = (g.num_vertices(), h.num_vertices());
    if n1 * n2 > 400 {
        return Err(Error::ceiling("distance_check_products", n1 * n2, 400));
    }
    let dg = DistMatrix::compute(g)?;
    let dh = DistMatrix::compute(h)?;
    let ds = DistMatrix::compute(&strong_product(g, h)?)?;
    let dc = DistMatrix::compute(&cartesian_product(g, h)?)?;
    for u1 in 0..n1 {
        for v1 in 0..n2 {
            for u2 in 0..n1 {
                for v2 in 0..n2 {
                    let (a, b) = (pair_index(u1, v1, n2), pair_index(u2, v2, n2));
                    let (du, dv) = (dg.get(u1, u2), dh.get(v1, v2));
                    if ds.get(a, b) != du.max(dv) || dc.get(a, b) != du + dv {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Family-string parser
// ---------------------------------------------------------------------------

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, reason: impl Into<String>) -> Error {
        Error::parse(format!("byte {}", self.pos), reason)
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.err(format!("expected '{c}'")))
        }
    }

    fn peek_is(&mut self, c: char) -> bool {
        self.skip_ws();
        self.src[self.pos..].starts_with(c)
    }

    fn ident(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(rest.len());
        if len == 0 {
            return Err(self.err("expected a family name"));
        }
        self.pos += len;
        Ok(&rest[..len])
    }

    fn integer(&mut self) -> Result<usize> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len());
        if len == 0 {
            return Err(self.err("expected an integer"));
        }
        let value = rest[..len]
            .parse::<usize>()
            .map_err(|e| self.err(format!("bad integer: {e}")))?;
        self.pos += len;
        Ok(value)
    }

    fn int_args(&mut self, name: &str, want: usize) -> Result<Vec<usize>> {
        let args = self.int_list()?;
        if args.len() != want {
            return Err(self.err(format!(
                "{name} takes {want} integer argument(s), got {}",
                args.len()
            )));
        }
        Ok(args)
    }

    fn int_list(&mut self) -> Result<Vec<usize>> {
        self.expect('(')?;
        let mut args = Vec::new();
        if !self.peek_is(')') {
            loop {
                args.push(self.integer()?);
                if !self.peek_is(',') {
                    break;
                }
                self.expect(',')?;
            }
        }
        self.expect(')')?;
        Ok(args)
    }

    fn spec_args(&mut self, name: &str, want: usize) -> Result<Vec<FamilySpec>> {
        let args = self.spec_list()?;
        if args.len() != want {
            return Err(self.err(format!(
                "{name} takes {want} nested famil{} as arguments, got {}",
                if want == 1 { "y" } else { "ies" },
                args.len()
            )));
        }
        Ok(args)
    }

    fn spec_list(&mut self) -> Result<Vec<FamilySpec>> {
        self.expect('(')?;
        let mut args = Vec::new();
        if !self.peek_is(')') {
            loop {
                args.push(self.spec()?);
                if !self.peek_is(',') {
                    break;
                }
                self.expect(',')?;
            }
        }
        self.expect(')')?;
        Ok(args)
    }

    fn spec(&mut self) -> Result<FamilySpec> {
        let name = self.ident()?;
        match name {
            "path" => Ok(FamilySpec::Path(self.int_args("path", 1)?[0])),
            "cycle" => Ok(FamilySpec::Cycle(self.int_args("cycle", 1)?[0])),
            "complete" => Ok(FamilySpec::Complete(self.int_args("complete", 1)?[0])),
            "multipartite" | "complete_multipartite" => {
                let parts = self.int_list()?;
                Ok(FamilySpec::CompleteMultipartite(parts))
            }
            "star" => Ok(FamilySpec::Star(self.int_args("star", 1)?[0])),
            "fan" => Ok(FamilySpec::Fan(self.int_args("fan", 1)?[0])),
            "lollipop" => {
                let a = self.int_args("lollipop", 2)?;
                Ok(FamilySpec::Lollipop(a[0], a[1]))
            }
            "hypercube" => Ok(FamilySpec::Hypercube(
                self.int_args("hypercube", 1)?[0] as u32,
            )),
            "petersen" => {
                let a = self.spec_list()?;
                if !a.is_empty() {
                    return Err(self.err("petersen takes no arguments"));
                }
                Ok(FamilySpec::Petersen)
            }
            "join" | "strong" | "cartesian" => {
                let mut a = self.spec_args(name, 2)?;
                let rhs = Box::new(a.pop().unwrap());
                let lhs = Box::new(a.pop().unwrap());
                Ok(match name {
                    "join" => FamilySpec::Join(lhs, rhs),
                    "strong" => FamilySpec::Strong(lhs, rhs),
                    _ => FamilySpec::Cartesian(lhs, rhs),
                })
            }
            "lex" => {
                let mut a = self.spec_list()?;
                if a.len() < 2 {
                    return Err(self.err("lex needs a base family plus at least one fiber"));
                }
                let base = Box::new(a.remove(0));
                Ok(FamilySpec::GeneralizedLex(base, a))
            }
            other => Err(self.err(format!("unknown family '{other}'"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(s: &str) -> Graph {
        FamilySpec::parse(s).unwrap().build().unwrap()
    }

    #[test]
    fn construction_counts() {
        let fan3 = build("fan(3)");
        assert_eq!((fan3.num_vertices(), fan3.num_edges()), (4, 5));

        let l42 = build("lollipop(4,2)");
        assert_eq!((l42.num_vertices(), l42.num_edges()), (6, 8));

        let octa = build("multipartite(2,2,2)");
        assert_eq!((octa.num_vertices(), octa.num_edges()), (6, 12));

        let wheel = build("join(complete(1),cycle(4))");
        assert_eq!((wheel.num_vertices(), wheel.num_edges()), (5, 8));
    }

    #[test]
    fn join_of_paths_is_complete() {
        let k4 = build("join(path(2),path(2))");
        let expect = build("complete(4)");
        assert_eq!(k4.edges(), expect.edges());
    }

    #[test]
    fn fan_is_a_join_with_hub_last() {
        let fan = build("fan(4)");
        let joined = build("join(path(4),complete(1))");
        assert_eq!(fan.edges(), joined.edges());
        assert_eq!(fan.degree(4), 4); // hub is the last index

        // join(K1, P4) is the same graph with the hub first; check the
        // explicit relabeling is an isomorphism onto fan(4).
        let flipped = build("join(complete(1),path(4))");
        let perm = |v: usize| if v == 0 { 4 } else { v - 1 };
        for u in 0..5 {
            for v in 0..5 {
                if u != v {
                    assert_eq!(flipped.has_edge(u, v), fan.has_edge(perm(u), perm(v)));
                }
            }
        }
    }

    #[test]
    fn strong_products() {
        let k4 = build("strong(complete(2),complete(2))");
        assert_eq!(k4.edges(), build("complete(4)").edges());

        let k12 = build("strong(complete(3),complete(4))");
        assert_eq!(k12.edges(), build("complete(12)").edges());

        // Derived by counting rule-by-rule over all pairs:
        // 1*3 G-layer + 2*2 H-layer + 2*1*2 diagonal = 11 edges.
        let p2p3 = build("strong(path(2),path(3))");
        assert_eq!((p2p3.num_vertices(), p2p3.num_edges()), (6, 11));
    }

    #[test]
    fn cartesian_products() {
        let square = build("cartesian(complete(2),complete(2))");
        assert_eq!((square.num_vertices(), square.num_edges()), (4, 4));
        assert!(square.is_connected() && square.is_bipartite());
        assert!((0..4).all(|v| square.degree(v) == 2)); // the 4-cycle

        let grid = build("cartesian(path(4),path(5))");
        assert_eq!((grid.num_vertices(), grid.num_edges()), (20, 31));

        let prism = build("cartesian(complete(2),cycle(5))");
        assert_eq!((prism.num_vertices(), prism.num_edges()), (10, 15));

        // E(cartesian) is a subset of E(strong) under the shared order.
        let s = build("strong(path(3),cycle(4))");
        for (u, v) in build("cartesian(path(3),cycle(4))").edges() {
            assert!(s.has_edge(u, v));
        }
    }

    #[test]
    fn generalized_lex() {
        let k2 = build("lex(complete(2),complete(1),complete(1))");
        assert_eq!(k2.edges(), build("complete(2)").edges());

        let k4 = build("lex(path(2),complete(2),complete(2))");
        assert_eq!(k4.edges(), build("complete(4)").edges());

        let blown = build("lex(path(3),complete(2),complete(2),complete(2))");
        assert_eq!(blown.num_vertices(), 6);
        assert!(blown.every_vertex_has_true_twin());

        assert!(FamilySpec::parse("lex(path(3),complete(2))")
            .unwrap()
            .build()
            .is_err());
    }

    #[test]
    fn distance_laws() {
        let p3 = build("path(3)");
        let c5 = build("cycle(5)");
        let k2 = build("complete(2)");
        let pet = build("petersen()");
        assert!(distance_check_products(&p3, &p3).unwrap());
        assert!(distance_check_products(&c5, &k2).unwrap());
        assert!(distance_check_products(&pet, &k2).unwrap());
        let p25 = build("path(25)");
        let p17 = build("path(17)");
        assert!(distance_check_products(&p25, &p17).is_err()); // over the cap
    }

    #[test]
    fn parser_round_trips() {
        for s in [
            "petersen()",
            "lollipop(4,3)",
            "strong(complete(3),complete(4))",
            "cartesian(complete(2),cycle(5))",
            "multipartite(2,3,4)",
            "lex(path(3),complete(2),complete(2),complete(2))",
            "join(complete(3),complete(4))",
        ] {
            let spec = FamilySpec::parse(s).unwrap();
            assert_eq!(spec.to_string(), s);
            assert_eq!(FamilySpec::parse(&spec.to_string()).unwrap(), spec);
        }
    }

    #[test]
    fn parser_errors_carry_position() {
        for bad in ["frob(3)", "cycle(3", "cycle(3))", "path()", "lollipop(4)"] {
            match FamilySpec::parse(bad) {
                Err(Error::Parse { location, .. }) => {
                    assert!(location.starts_with("byte "), "{location}")
                }
                other => panic!("expected parse error for {bad:?}, got {other:?}"),
            }
        }
    }

    #[test]
    fn invalid_parameters_are_named() {
        assert!(matches!(
            FamilySpec::Cycle(2).build(),
            Err(Error::BadFamily { .. })
        ));
        assert!(FamilySpec::Lollipop(2, 1).build().is_err());
        assert!(FamilySpec::CompleteMultipartite(vec![3]).build().is_err());
    }

    #[test]
    fn petersen_shape() {
        let p = build("petersen()");
        assert_eq!((p.num_vertices(), p.num_edges()), (10, 15));
        assert!((0..10).all(|v| p.degree(v) == 3));
    }

    #[test]
    fn hypercube_shape() {
        let q4 = build("hypercube(4)");
        assert_eq!((q4.num_vertices(), q4.num_edges()), (16, 32));
        assert!(q4.is_bipartite());
    }
}
