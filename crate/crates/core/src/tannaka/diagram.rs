use alloc::format;
use alloc::vec::Vec;

use super::TannakaError;
use crate::exactla::block_solution_space;
use crate::Mat;

/// A generating arrow `source -> target` with value `dims[target] x dims[source]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub value: Mat,
}

/// Objects with value spaces `k^{dims[C]}` and generating arrows; composites
/// are implied.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FiniteDiagram {
    pub dims: Vec<usize>,
    pub arrows: Vec<Arrow>,
}

impl FiniteDiagram {
    pub fn new(dims: Vec<usize>, arrows: Vec<Arrow>) -> Result<FiniteDiagram, TannakaError> {
        let d = FiniteDiagram { dims, arrows };
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<(), TannakaError> {
        let n = self.dims.len();
        for (k, f) in self.arrows.iter().enumerate() {
            if f.source >= n || f.target >= n {
                return Err(TannakaError::Presentation {
                    condition: "arrow endpoints exist",
                    witness: format!("arrow {k}: {} -> {}", f.source, f.target),
                });
            }
            let want = (self.dims[f.target], self.dims[f.source]);
            if f.value.shape() != want {
                return Err(TannakaError::Shape { what: format!("arrow {k}"), expected: want, found: f.value.shape() });
            }
        }
        Ok(())
    }

    pub fn object_count(&self) -> usize {
        self.dims.len()
    }

    /// `sum_C dim X(C)^2`.
    pub fn ambient_dim(&self) -> usize {
        self.dims.iter().map(|d| d * d).sum()
    }
}

/// Basis of natural transformations `X => Y`: families `u_C: X(C) -> Y(C)`
/// with `Y(f) u_A = u_B X(f)` for each generating arrow `f: A -> B`.
pub fn end_hom(x: &FiniteDiagram, y: &FiniteDiagram) -> Result<Vec<Vec<Mat>>, TannakaError> {
    x.validate()?;
    y.validate()?;
    let same_shape = x.dims.len() == y.dims.len()
        && x.arrows.len() == y.arrows.len()
        && x.arrows.iter().zip(&y.arrows).all(|(f, g)| f.source == g.source && f.target == g.target);
    if !same_shape {
        return Err(TannakaError::Presentation {
            condition: "diagrams share objects and arrows",
            witness: format!(
                "{} vs {} objects, {} vs {} arrows",
                x.dims.len(),
                y.dims.len(),
                x.arrows.len(),
                y.arrows.len()
            ),
        });
    }
    let shapes: Vec<(usize, usize)> = x.dims.iter().zip(&y.dims).map(|(&dx, &dy)| (dy, dx)).collect();
    Ok(block_solution_space(&shapes, |u| {
        x.arrows.iter().zip(&y.arrows).map(|(f, g)| &(&g.value * &u[f.source]) - &(&u[f.target] * &f.value)).collect()
    }))
}

/// Objects `(A, B)` at index `A * |Y| + B` with value `X(A) (x) Y(B)`, and
/// generators `(f, id_B)` and `(id_A, g)`.
pub fn product_diagram(x: &FiniteDiagram, y: &FiniteDiagram) -> FiniteDiagram {
    let ny = y.dims.len();
    let mut dims = Vec::with_capacity(x.dims.len() * ny);
    for &a in &x.dims {
        for &b in &y.dims {
            dims.push(a * b);
        }
    }
    let mut arrows = Vec::new();
    for f in &x.arrows {
        for (b, &db) in y.dims.iter().enumerate() {
            arrows.push(Arrow {
                source: f.source * ny + b,
                target: f.target * ny + b,
                value: f.value.kron(&Mat::identity(db)),
            });
        }
    }
    for (a, &da) in x.dims.iter().enumerate() {
        for g in &y.arrows {
            arrows.push(Arrow {
                source: a * ny + g.source,
                target: a * ny + g.target,
                value: Mat::identity(da).kron(&g.value),
            });
        }
    }
    FiniteDiagram { dims, arrows }
}
