use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::StructureError;

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Validates closure, associativity, identity and inverses.
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<FiniteGroup, StructureError> {
        let m = labels.len();
        if m == 0 {
            return Err(StructureError::Group("empty group".to_string()));
        }
        if table.len() != m || table.iter().any(|r| r.len() != m) {
            return Err(StructureError::Group(format!("multiplication table must be {m}x{m}")));
        }
        if let Some(v) = table.iter().flatten().find(|&&v| v >= m) {
            return Err(StructureError::Group(format!("table entry {v} out of range")));
        }
        for (i, a) in labels.iter().enumerate() {
            if labels[..i].contains(a) {
                return Err(StructureError::Group(format!("duplicate label `{a}`")));
            }
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        let mul = |a: usize, b: usize| flat[a * m + b];
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return Err(StructureError::Group(format!(
                            "not associative at ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        let identity = (0..m)
            .find(|&e| (0..m).all(|a| mul(e, a) == a && mul(a, e) == a))
            .ok_or_else(|| StructureError::Group("no identity element".to_string()))?;
        let mut inverses = Vec::with_capacity(m);
        for a in 0..m {
            let inv = (0..m)
                .find(|&b| mul(a, b) == identity && mul(b, a) == identity)
                .ok_or_else(|| StructureError::Group(format!("`{}` has no inverse", labels[a])))?;
            inverses.push(inv);
        }
        Ok(FiniteGroup { labels, table: flat, identity, inverses })
    }

    pub fn trivial() -> FiniteGroup {
        FiniteGroup::new(alloc::vec!["e".to_string()], alloc::vec![alloc::vec![0]]).expect("trivial group")
    }

    /// `Z/n` with labels `0..n` and addition mod n.
    pub fn cyclic(n: usize) -> FiniteGroup {
        let labels = (0..n).map(|k| format!("{k}")).collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::new(labels, table).expect("cyclic group")
    }

    /// `S_3` on `{1,2,3}`; composition `(ab)(x) = a(b(x))`.
    pub fn symmetric3() -> FiniteGroup {
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
        let labels = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"].iter().map(|s| s.to_string()).collect();
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("closed");
        let table = (0..6)
            .map(|a| {
                (0..6)
                    .map(|b| {
                        let (pa, pb) = (perms[a], perms[b]);
                        idx([pa[pb[0]], pa[pb[1]], pa[pb[2]]])
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::new(labels, table).expect("symmetric group")
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn elements(&self) -> core::ops::Range<usize> {
        0..self.order()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `b a b^-1`.
    pub fn conj(&self, b: usize, a: usize) -> usize {
        self.mul(self.mul(b, a), self.inv(b))
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The multiplication table as rows of indices.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order()).map(<[usize]>::to_vec).collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.commute(a, b)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn s3_is_nonabelian_group() {
        let g = FiniteGroup::symmetric3();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        let t = g.index_of("(12)").unwrap();
        let c = g.index_of("(123)").unwrap();
        assert_eq!(g.inv(c), g.index_of("(132)").unwrap());
        assert_eq!(g.mul(t, t), g.identity());
        assert_eq!(g.conj(c, t), g.index_of("(23)").unwrap());
    }

    #[test]
    fn rejects_non_groups() {
        let bad = FiniteGroup::new(vec!["a".into(), "b".into()], vec![vec![0, 0], vec![0, 0]]);
        assert!(bad.is_err());
        let ragged = FiniteGroup::new(vec!["a".into()], vec![vec![0, 0]]);
        assert!(ragged.is_err());
        assert!(FiniteGroup::new(vec!["a".into(), "a".into()], vec![vec![0, 1], vec![1, 0]]).is_err());
    }
}
