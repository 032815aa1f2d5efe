//! Built-in polytope families: polygons, simplices, hypercubes, the
//! `{4,4}` toroids, and pyramids over arbitrary validated polytopes.
//!
//! Face ids are generated from construction coordinates (`v(1,2)`, `apex`, ..)
//! so repeated runs produce byte-identical posets.

use crate::error::{Error, Result};
use crate::poset::Polytope;

/// The `p`-gon as a 2-polytope: `p` vertices `v0..`, `p` edges `e0..`,
/// edge `ei` joining `vi` and `v(i+1 mod p)`.
pub fn polygon(p: u64) -> Result<Polytope> {
    if p < 2 {
        return Err(Error::InvalidParameter(format!("polygon needs p >= 2, got {p}")));
    }
    let mut faces = vec![("bot".to_string(), -1), ("top".to_string(), 2)];
    let mut covers = Vec::new();
    for i in 0..p {
        faces.push((format!("v{i}"), 0));
        faces.push((format!("e{i}"), 1));
        covers.push(("bot".into(), format!("v{i}")));
        covers.push((format!("e{i}"), "top".into()));
        covers.push((format!("v{i}"), format!("e{i}")));
        covers.push((format!("v{}", (i + 1) % p), format!("e{i}")));
    }
    Polytope::new(2, faces, covers)
}

/// The `n`-simplex as the boolean lattice on `n + 1` points.
pub fn simplex(n: usize) -> Result<Polytope> {
    if !(1..=10).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "simplex rank must be in 1..=10, got {n}"
        )));
    }
    let points = n + 1;
    let id_of = |mask: u32| -> String {
        if mask == 0 {
            return "s".to_string();
        }
        let mut s = String::from("s");
        let mut first = true;
        for x in 0..points {
            if mask >> x & 1 == 1 {
                if !first {
                    s.push('_');
                }
                first = false;
                s.push_str(&x.to_string());
            }
        }
        s
    };
    let mut faces = Vec::new();
    let mut covers = Vec::new();
    for mask in 0u32..1 << points {
        faces.push((id_of(mask), mask.count_ones() as i32 - 1));
        for x in 0..points {
            if mask >> x & 1 == 0 {
                covers.push((id_of(mask), id_of(mask | 1 << x)));
            }
        }
    }
    Polytope::new(n, faces, covers)
}

/// The `n`-cube face lattice: faces are words over `{0,1,*}` plus a least face.
pub fn hypercube(n: usize) -> Result<Polytope> {
    if !(1..=10).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "hypercube rank must be in 1..=10, got {n}"
        )));
    }
    let mut faces = vec![("bot".to_string(), -1)];
    let mut covers = Vec::new();
    let mut words = vec![String::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &words {
            for c in ['0', '1', '*'] {
                next.push(format!("{w}{c}"));
            }
        }
        words = next;
    }
    for w in &words {
        let stars = w.chars().filter(|&c| c == '*').count();
        faces.push((format!("c{w}"), stars as i32));
        if stars == 0 {
            covers.push(("bot".into(), format!("c{w}")));
        }
        for (k, c) in w.char_indices() {
            if c != '*' {
                let mut t = w.clone();
                t.replace_range(k..k + 1, "*");
                covers.push((format!("c{w}"), format!("c{t}")));
            }
        }
    }
    Polytope::new(n, faces, covers)
}

/// The torus map `{4,4}_{(b,0)}` as a 3-polytope: a `b x b` grid of squares
/// with wrap-around, so `b^2` vertices, `2 b^2` edges, `b^2` squares.
pub fn toroid44(b: u64) -> Result<Polytope> {
    if b < 2 {
        return Err(Error::InvalidParameter(format!("toroid44 needs b >= 2, got {b}")));
    }
    let v = |i: u64, j: u64| format!("v({},{})", i % b, j % b);
    let eh = |i: u64, j: u64| format!("eh({},{})", i % b, j % b);
    let ev = |i: u64, j: u64| format!("ev({},{})", i % b, j % b);
    let f = |i: u64, j: u64| format!("f({},{})", i % b, j % b);
    let mut faces = vec![("bot".to_string(), -1), ("top".to_string(), 3)];
    let mut covers = Vec::new();
    for i in 0..b {
        for j in 0..b {
            faces.push((v(i, j), 0));
            faces.push((eh(i, j), 1));
            faces.push((ev(i, j), 1));
            faces.push((f(i, j), 2));
            covers.push(("bot".into(), v(i, j)));
            covers.push((f(i, j), "top".into()));
            // eh(i,j): v(i,j) -- v(i+1,j); ev(i,j): v(i,j) -- v(i,j+1)
            covers.push((v(i, j), eh(i, j)));
            covers.push((v(i + 1, j), eh(i, j)));
            covers.push((v(i, j), ev(i, j)));
            covers.push((v(i, j + 1), ev(i, j)));
            // square f(i,j) has corners (i,j), (i+1,j), (i,j+1), (i+1,j+1)
            covers.push((eh(i, j), f(i, j)));
            covers.push((eh(i, j + 1), f(i, j)));
            covers.push((ev(i, j), f(i, j)));
            covers.push((ev(i + 1, j), f(i, j)));
        }
    }
    Polytope::new(3, faces, covers)
}

/// The pyramid over `q`: the join of `q` with a single new vertex. Every face
/// `F` of `q` except the greatest gains a companion `F v apex` one rank up,
/// and the old greatest face becomes a facet under the new apex-joined top.
pub fn pyramid(q: &Polytope) -> Result<Polytope> {
    q.require_valid()?;
    let n = q.rank();
    // nested pyramids already contain an "apex" vertex
    let apex_id = {
        let mut cand = "apex".to_string();
        let mut k = 1;
        while q.face_index(&cand).is_some() {
            cand = format!("apex{k}");
            k += 1;
        }
        cand
    };
    let apexed = |id: &str, rank: i32| -> String {
        if rank == -1 {
            apex_id.clone()
        } else {
            format!("{id}^{apex_id}")
        }
    };
    let mut faces = Vec::with_capacity(2 * q.face_count());
    let mut covers = Vec::new();
    for f in q.faces() {
        faces.push((f.id.clone(), f.rank));
        faces.push((apexed(&f.id, f.rank), f.rank + 1));
    }
    for (lo_idx, f) in q.faces().iter().enumerate() {
        for &hi in q.covers_above(lo_idx as u32) {
            let g = &q.faces()[hi as usize];
            covers.push((f.id.clone(), g.id.clone()));
            covers.push((apexed(&f.id, f.rank), apexed(&g.id, g.rank)));
        }
        // F is covered by F v apex; the old top sits under the new top
        covers.push((f.id.clone(), apexed(&f.id, f.rank)));
    }
    Polytope::new(n + 1, faces, covers)
}

/// Parse a construction expression: `polygon(p)`, `simplex(n)`, `hypercube(n)`,
/// `toroid44(b)`, `pyramid(expr)`, `dual(expr)`, nested arbitrarily.
pub fn parse_construction(expr: &str) -> Result<Polytope> {
    let mut p = Parser { s: expr, pos: 0 };
    let q = p.expr()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(Error::Parse(format!(
            "trailing input at byte {} of {:?}",
            p.pos, expr
        )));
    }
    Ok(q)
}

struct Parser<'a> {
    s: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.s[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.s[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(Error::Parse(format!(
                "expected {c:?} at byte {} of {:?}",
                self.pos, self.s
            )))
        }
    }

    fn ident(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.s[self.pos..]
            .starts_with(|c: char| c.is_ascii_alphanumeric() || c == '_')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Parse(format!(
                "expected a name at byte {start} of {:?}",
                self.s
            )));
        }
        Ok(&self.s[start..self.pos])
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.s[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.s[start..self.pos]
            .parse()
            .map_err(|_| Error::Parse(format!("expected a number at byte {start} of {:?}", self.s)))
    }

    fn expr(&mut self) -> Result<Polytope> {
        let name = self.ident()?;
        self.expect('(')?;
        let q = match name {
            "polygon" => polygon(self.number()?)?,
            "simplex" => simplex(self.number()? as usize)?,
            "hypercube" => hypercube(self.number()? as usize)?,
            "toroid44" => toroid44(self.number()?)?,
            "pyramid" => pyramid(&self.expr()?)?,
            "dual" => self.expr()?.dual()?,
            other => {
                return Err(Error::Parse(format!(
                    "unknown constructor {other:?}; expected polygon, simplex, hypercube, toroid44, pyramid or dual"
                )))
            }
        };
        self.expect(')')?;
        Ok(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polygons() {
        let q = polygon(4).unwrap();
        assert!(q.validate().passed);
        assert_eq!(q.flags().unwrap().len(), 8);
        assert_eq!(polygon(12).unwrap().flags().unwrap().len(), 24);
        assert!(polygon(1).is_err());
        // the digon is a perfectly good abstract polygon
        assert!(polygon(2).unwrap().validate().passed);
    }

    #[test]
    fn simplices() {
        let s1 = simplex(1).unwrap();
        assert_eq!(s1.flags().unwrap().len(), 2);
        let s3 = simplex(3).unwrap();
        assert!(s3.validate().passed);
        assert_eq!(s3.rank_counts(), vec![1, 4, 6, 4, 1]);
        assert_eq!(s3.flags().unwrap().len(), 24);
    }

    #[test]
    fn cube_counts() {
        let c = hypercube(3).unwrap();
        assert!(c.validate().passed);
        assert_eq!(c.rank_counts(), vec![1, 8, 12, 6, 1]);
        assert_eq!(c.flags().unwrap().len(), 48);
    }

    #[test]
    fn cube_vertex_figure_is_a_triangle() {
        let c = hypercube(3).unwrap();
        let v = c.faces_of_rank(0).start;
        let vid = c.faces()[v].id.clone();
        let s = c.section(&vid, "c***").unwrap();
        assert!(s.validate().passed);
        assert_eq!(s.rank_counts(), vec![1, 3, 3, 1]);
    }

    #[test]
    fn cube_facet_section_is_a_square() {
        let c = hypercube(3).unwrap();
        let f = c.faces_of_rank(2).start;
        let fid = c.faces()[f].id.clone();
        let s = c.section("bot", &fid).unwrap();
        assert!(s.validate().passed);
        assert_eq!(s.rank_counts(), vec![1, 4, 4, 1]);
    }

    #[test]
    fn dual_cube_is_the_octahedron() {
        let c = hypercube(3).unwrap();
        let d = c.dual().unwrap();
        assert!(d.validate().passed);
        assert_eq!(d.rank_counts(), vec![1, 6, 12, 8, 1]);
    }

    #[test]
    fn toroid_counts() {
        let t = toroid44(3).unwrap();
        assert!(t.validate().passed);
        assert_eq!(t.rank_counts(), vec![1, 9, 18, 9, 1]);
        assert_eq!(t.flags().unwrap().len(), 72);
        assert!(toroid44(1).is_err());
    }

    #[test]
    fn pyramid_over_triangle_is_a_simplex() {
        let p = pyramid(&polygon(3).unwrap()).unwrap();
        assert!(p.validate().passed);
        assert_eq!(p.rank_counts(), vec![1, 4, 6, 4, 1]);
        assert_eq!(p.flags().unwrap().len(), 24);
    }

    #[test]
    fn square_pyramid_counts() {
        let p = pyramid(&polygon(4).unwrap()).unwrap();
        assert!(p.validate().passed);
        assert_eq!(p.rank_counts(), vec![1, 5, 8, 5, 1]);
        assert_eq!(p.flags().unwrap().len(), 32);
        // the join doubles the face count
        assert_eq!(p.face_count(), 2 * polygon(4).unwrap().face_count());
    }

    #[test]
    fn pyramid_over_toroid_facet_inventory() {
        let p = pyramid(&toroid44(3).unwrap()).unwrap();
        assert!(p.validate().passed);
        // 9 square pyramids over the toroid squares, plus the toroid itself
        assert_eq!(p.rank_counts(), vec![1, 10, 27, 27, 10, 1]);
        assert_eq!(p.flags().unwrap().len(), 360);
    }

    #[test]
    fn expression_parser() {
        let q = parse_construction("pyramid(polygon(4))").unwrap();
        assert_eq!(q.rank(), 3);
        assert_eq!(q.flags().unwrap().len(), 32);
        let d = parse_construction(" dual( hypercube( 3 ) ) ").unwrap();
        assert_eq!(d.rank_counts(), vec![1, 6, 12, 8, 1]);
        assert!(parse_construction("prism(3)").is_err());
        assert!(parse_construction("polygon(4) junk").is_err());
        assert!(parse_construction("polygon()").is_err());
    }
}
