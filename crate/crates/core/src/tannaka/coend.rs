use alloc::format;
use alloc::vec::Vec;

use super::diagram::{end_hom, product_diagram, FiniteDiagram};
use super::TannakaError;
use crate::exactla::Quotient;
use crate::report::Report;
use crate::structure::middle_swap;
use crate::{CycScalar, Mat};

/// The coend coalgebra of a diagram: `(+)_C End(X(C))` modulo the relations
/// `h X(f) - X(f) h`, with matrix units `E^C_ij` at ambient index
/// `offsets[C] + i * dims[C] + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoendPresentation {
    pub dims: Vec<usize>,
    pub offsets: Vec<usize>,
    pub quotient: Quotient,
    /// `dim^2 x dim`, `Delta[E_ij] = sum_k [E_ik] (x) [E_kj]`.
    pub delta: Mat,
    /// `1 x dim`, `eps[h] = Tr h`.
    pub counit: Mat,
}

impl CoendPresentation {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn ambient(&self) -> usize {
        self.quotient.ambient()
    }

    pub fn ambient_index(&self, object: usize, i: usize, j: usize) -> usize {
        self.offsets[object] + i * self.dims[object] + j
    }

    /// `(object, i, j)` of an ambient index.
    pub fn symbol(&self, index: usize) -> (usize, usize, usize) {
        let c = self.offsets.iter().rposition(|&o| o <= index).expect("index inside the ambient space");
        let local = index - self.offsets[c];
        let n = self.dims[c];
        (c, local / n, local % n)
    }

    /// Representative symbols `[E^C_ij]` of the quotient basis.
    pub fn basis_symbols(&self) -> Vec<(usize, usize, usize)> {
        self.quotient.basis().iter().map(|&k| self.symbol(k)).collect()
    }

    /// Class coordinates of `[E^C_ij]`.
    pub fn unit_class(&self, object: usize, i: usize, j: usize) -> Mat {
        self.quotient.projection().col_mat(self.ambient_index(object, i, j))
    }

    /// Class coordinates of `[h]` for `h` in `End(X(object))`.
    pub fn class_of(&self, object: usize, h: &Mat) -> Mat {
        let n = self.dims[object];
        let mut v = Mat::zeros(self.dim(), 1);
        for i in 0..n {
            for j in 0..n {
                let c = h.get(i, j);
                if !c.is_zero() {
                    v = &v + &self.unit_class(object, i, j).scale(c);
                }
            }
        }
        v
    }
}

/// Computes the coend and checks that the relation span is a coideal.
pub fn coend_coalgebra(x: &FiniteDiagram) -> Result<CoendPresentation, TannakaError> {
    x.validate()?;
    let mut offsets = Vec::with_capacity(x.dims.len());
    let mut amb = 0;
    for &d in &x.dims {
        offsets.push(amb);
        amb += d * d;
    }
    let place = |object: usize, h: &Mat, row: &mut Mat| {
        let n = x.dims[object];
        for i in 0..n {
            for j in 0..n {
                let k = offsets[object] + i * n + j;
                let v = row.get(0, k) + h.get(i, j);
                row.set(0, k, v);
            }
        }
    };
    let mut relations = Vec::new();
    for f in &x.arrows {
        let (da, db) = (x.dims[f.source], x.dims[f.target]);
        for p in 0..da {
            for q in 0..db {
                let h = Mat::unit(da, db, p, q);
                let mut row = Mat::zeros(1, amb);
                place(f.source, &(&h * &f.value), &mut row);
                place(f.target, &(&f.value * &h).scale(&-CycScalar::one()), &mut row);
                relations.push(row);
            }
        }
    }
    let rel = if relations.is_empty() { Mat::zeros(0, amb) } else { Mat::vstack(&relations)? };
    let quotient = Quotient::new(amb, &rel)?;
    let mut p = CoendPresentation {
        dims: x.dims.clone(),
        offsets,
        quotient,
        delta: Mat::zeros(0, 0),
        counit: Mat::zeros(0, 0),
    };
    let dim = p.dim();
    // (P (x) P) Delta and eps on the whole ambient space, column by column
    let mut delta_amb = Vec::with_capacity(amb);
    let mut eps_amb = Mat::zeros(1, amb);
    for t in 0..amb {
        let (c, i, j) = p.symbol(t);
        let mut col = Mat::zeros(dim * dim, 1);
        for k in 0..p.dims[c] {
            col = &col + &p.unit_class(c, i, k).kron(&p.unit_class(c, k, j));
        }
        delta_amb.push(col);
        if i == j {
            eps_amb.set(0, t, CycScalar::one());
        }
    }
    let delta_amb = if amb == 0 { Mat::zeros(dim * dim, 0) } else { Mat::hstack(&delta_amb)? };
    let section = p.quotient.section();
    p.delta = &delta_amb * &section;
    p.counit = &eps_amb * &section;
    let proj = p.quotient.projection();
    if let Some((r, c)) = (&p.delta * proj).first_difference(&delta_amb) {
        return Err(TannakaError::Internal(format!("relations are not a coideal for the coproduct at ({r}, {c})")));
    }
    if let Some((_, c)) = (&p.counit * proj).first_difference(&eps_amb) {
        return Err(TannakaError::Internal(format!("relations are not killed by the counit at ambient index {c}")));
    }
    Ok(p)
}

/// Coassociativity and counitality on the quotient.
pub fn verify_coend(p: &CoendPresentation) -> Report {
    let mut r = Report::new();
    let n = p.dim();
    let id = Mat::identity(n);
    let at = || format!("coend of dimension {n}");
    r.pass("coend.coideal");
    r.compare("coend.coassociative", &(&p.delta.kron(&id) * &p.delta), &(&id.kron(&p.delta) * &p.delta), at);
    r.compare("coend.counit_left", &(&p.counit.kron(&id) * &p.delta), &id, at);
    r.compare("coend.counit_right", &(&id.kron(&p.counit) * &p.delta), &id, at);
    r.record("coend.dimension", p.dim() + p.quotient.relation_rank() == p.ambient(), at);
    r
}

/// Duality between natural endomorphisms and the coend.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingVerdict {
    pub end_dim: usize,
    pub coend_dim: usize,
    /// `<u_k, [E_l]> = (u_k)_{C; j i}` for representative `[E^C_ij]`.
    pub matrix: Mat,
    pub det: Option<CycScalar>,
    pub report: Report,
}

pub fn pairing_check(x: &FiniteDiagram) -> Result<PairingVerdict, TannakaError> {
    let ends = end_hom(x, x)?;
    let p = coend_coalgebra(x)?;
    let symbols = p.basis_symbols();
    let mut matrix = Mat::zeros(ends.len(), symbols.len());
    for (k, u) in ends.iter().enumerate() {
        for (l, &(c, i, j)) in symbols.iter().enumerate() {
            matrix.set(k, l, u[c].get(j, i).clone());
        }
    }
    let mut report = Report::new();
    let (e, c) = (ends.len(), p.dim());
    report.record("pairing.dimension", e == c, || format!("end has dimension {e}, coend {c}"));
    let det = if e == c { Some(matrix.det()?) } else { None };
    match &det {
        Some(d) => report.record("pairing.nondegenerate", !d.is_zero(), || "pairing determinant is zero".into()),
        None => report.fail("pairing.nondegenerate", "pairing matrix is not square"),
    }
    Ok(PairingVerdict { end_dim: e, coend_dim: c, matrix, det, report })
}

/// `[S] (x) [T] -> [S (x) T]` from the product of two coends to the coend of
/// the product diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoendProduct {
    pub left: CoendPresentation,
    pub right: CoendPresentation,
    pub product: CoendPresentation,
    /// `dim(product) x dim(left) dim(right)`.
    pub map: Mat,
    pub report: Report,
}

pub fn coend_product(x: &FiniteDiagram, y: &FiniteDiagram) -> Result<CoendProduct, TannakaError> {
    let px = coend_coalgebra(x)?;
    let py = coend_coalgebra(y)?;
    let pxy = coend_coalgebra(&product_diagram(x, y))?;
    let ny = y.dims.len();
    let (sx, sy) = (px.basis_symbols(), py.basis_symbols());
    let mut map = Mat::zeros(pxy.dim(), sx.len() * sy.len());
    for (s, &(a, i, j)) in sx.iter().enumerate() {
        for (t, &(b, k, l)) in sy.iter().enumerate() {
            let db = y.dims[b];
            let col = pxy.unit_class(a * ny + b, i * db + k, j * db + l);
            for r in 0..pxy.dim() {
                map.set(r, s * sy.len() + t, col.get(r, 0).clone());
            }
        }
    }
    let mut report = Report::new();
    report.record("coend_product.bijective", map.is_invertible(), || {
        format!("map is {}x{} of rank {}", map.rows(), map.cols(), map.rank())
    });
    let at = || "product of coends".into();
    let split = &middle_swap(px.dim(), py.dim()) * &px.delta.kron(&py.delta);
    report.compare("coend_product.comultiplicative", &(&pxy.delta * &map), &(&map.kron(&map) * &split), at);
    report.compare("coend_product.counital", &(&pxy.counit * &map), &px.counit.kron(&py.counit), at);
    Ok(CoendProduct { left: px, right: py, product: pxy, map, report })
}
