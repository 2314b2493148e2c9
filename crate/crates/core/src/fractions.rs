//! Fractions `h/f` in categories of finite-dimensional super vector spaces
//! over Q: the commuting-square condition defining `C_f(C, C')`, the
//! equivalence of pairs, the solver for `f (x) l = h`, and the arithmetic
//! of fractions of the unit.
//!
//! Objects are tensor words of super spaces; the empty word is the unit.
//! Morphisms are even matrices in the lexicographic product bases, with
//! rows indexed by the target. `(x)` is the Kronecker product.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Dense};
use crate::rational::{serde_q, Q};
use crate::supereval::{koszul_swap, SuperSpace};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Object(pub Vec<SuperSpace>);

impl Object {
    pub fn unit() -> Self {
        Object(Vec::new())
    }

    pub fn space(space: SuperSpace) -> Self {
        Object(vec![space])
    }

    pub fn dim(&self) -> usize {
        self.0.iter().map(SuperSpace::dim).product()
    }

    /// Parity of every product basis vector, in lexicographic order.
    pub fn parities(&self) -> Vec<bool> {
        let mut out = vec![false];
        for s in &self.0 {
            out = out
                .iter()
                .flat_map(|&p| (0..s.dim()).map(move |i| p ^ s.is_odd(i)))
                .collect();
        }
        out
    }

    pub fn tensor(&self, other: &Object) -> Object {
        Object(self.0.iter().chain(&other.0).copied().collect())
    }
}

impl fmt::Display for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|s| format!("({s})")).collect();
        write!(f, "{}", parts.join("(x)"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatMorphism {
    source: Object,
    target: Object,
    matrix: Dense,
}

impl MatMorphism {
    /// Checks the shape and that the matrix preserves parity.
    pub fn new(source: Object, target: Object, matrix: Dense) -> Result<Self> {
        if matrix.len() != target.dim() || matrix.iter().any(|r| r.len() != source.dim()) {
            return Err(Error::ShapeMismatch(format!(
                "a map {source} -> {target} needs a {}x{} matrix",
                target.dim(),
                source.dim()
            )));
        }
        let (ps, pt) = (source.parities(), target.parities());
        for (i, row) in matrix.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() && ps[j] != pt[i] {
                    return Err(Error::NotEven);
                }
            }
        }
        Ok(MatMorphism { source, target, matrix })
    }

    /// Multiplication by `c` on the unit.
    pub fn scalar(c: Q) -> Self {
        MatMorphism { source: Object::unit(), target: Object::unit(), matrix: vec![vec![c]] }
    }

    pub fn identity(object: Object) -> Self {
        let n = object.dim();
        let mut matrix = linalg::zeros(n, n);
        for (i, row) in matrix.iter_mut().enumerate() {
            row[i] = Q::one();
        }
        MatMorphism { source: object.clone(), target: object, matrix }
    }

    pub fn zero(source: Object, target: Object) -> Self {
        let matrix = linalg::zeros(target.dim(), source.dim());
        MatMorphism { source, target, matrix }
    }

    pub fn source(&self) -> &Object {
        &self.source
    }

    pub fn target(&self) -> &Object {
        &self.target
    }

    pub fn matrix(&self) -> &Dense {
        &self.matrix
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().flatten().all(Zero::is_zero)
    }

    /// `self . other` (apply `other` first).
    pub fn compose(&self, other: &MatMorphism) -> Result<MatMorphism> {
        if other.target != self.source {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose {} -> {} after {} -> {}",
                self.source, self.target, other.source, other.target
            )));
        }
        let (rows, inner, cols) = (self.target.dim(), self.source.dim(), other.source.dim());
        let mut out = linalg::zeros(rows, cols);
        for (i, out_row) in out.iter_mut().enumerate() {
            for k in 0..inner {
                let a = &self.matrix[i][k];
                if a.is_zero() {
                    continue;
                }
                for (j, slot) in out_row.iter_mut().enumerate() {
                    let b = &other.matrix[k][j];
                    if !b.is_zero() {
                        *slot += a * b;
                    }
                }
            }
        }
        Ok(MatMorphism { source: other.source.clone(), target: self.target.clone(), matrix: out })
    }

    /// Kronecker product, `self` on the left factors.
    pub fn tensor(&self, other: &MatMorphism) -> MatMorphism {
        let (r1, c1) = (self.target.dim(), self.source.dim());
        let (r2, c2) = (other.target.dim(), other.source.dim());
        let mut out = linalg::zeros(r1 * r2, c1 * c2);
        for i in 0..r1 {
            for j in 0..c1 {
                let a = &self.matrix[i][j];
                if a.is_zero() {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        out[i * r2 + k][j * c2 + l] = a * &other.matrix[k][l];
                    }
                }
            }
        }
        MatMorphism { source: self.source.tensor(&other.source), target: self.target.tensor(&other.target), matrix: out }
    }

    pub fn add(&self, other: &MatMorphism) -> Result<MatMorphism> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::ShapeMismatch(format!(
                "cannot add maps {} -> {} and {} -> {}",
                self.source, self.target, other.source, other.target
            )));
        }
        let matrix = self
            .matrix
            .iter()
            .zip(&other.matrix)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        Ok(MatMorphism { source: self.source.clone(), target: self.target.clone(), matrix })
    }

    pub fn scale(&self, c: &Q) -> MatMorphism {
        let matrix = self.matrix.iter().map(|r| r.iter().map(|x| x * c).collect()).collect();
        MatMorphism { source: self.source.clone(), target: self.target.clone(), matrix }
    }

    pub fn to_json(&self) -> MorphismJson {
        let mut entries = Vec::new();
        for (i, row) in self.matrix.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    entries.push(MatrixEntryJson { row: i, col: j, coeff: v.clone() });
                }
            }
        }
        MorphismJson { source: self.source.clone(), target: self.target.clone(), entries }
    }

    pub fn from_json(json: &MorphismJson) -> Result<Self> {
        let (rows, cols) = (json.target.dim(), json.source.dim());
        let mut matrix = linalg::zeros(rows, cols);
        for e in &json.entries {
            if e.row >= rows || e.col >= cols {
                return Err(Error::ShapeMismatch(format!("entry ({}, {}) outside {rows}x{cols}", e.row, e.col)));
            }
            matrix[e.row][e.col] += &e.coeff;
        }
        Self::new(json.source.clone(), json.target.clone(), matrix)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixEntryJson {
    pub row: usize,
    pub col: usize,
    #[serde(with = "serde_q")]
    pub coeff: Q,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismJson {
    pub source: Object,
    pub target: Object,
    pub entries: Vec<MatrixEntryJson>,
}

/// The symmetry `X (x) Y (x) Z -> Y (x) X (x) Z`.
pub fn symmetry(x: &Object, y: &Object, z: &Object) -> MatMorphism {
    let matrix = koszul_swap(&x.parities(), &y.parities(), z.dim());
    MatMorphism {
        source: x.tensor(y).tensor(z),
        target: y.tensor(x).tensor(z),
        matrix,
    }
}

/// In an integral category a morphism is regular iff it is nonzero.
pub fn is_regular(f: &MatMorphism) -> bool {
    !f.is_zero()
}

fn expect_object(what: &str, got: &Object, want: &Object) -> Result<()> {
    if got != want {
        return Err(Error::ShapeMismatch(format!("{what} is {got}, expected {want}")));
    }
    Ok(())
}

/// `h : A (x) C -> A' (x) C'` lies in `C_f(C, C')` for `f : A -> A'` iff
/// `(f (x) h) . s_{A,A,C} = s_{A',A',C'} . (f (x) h)`.
pub fn in_cf(h: &MatMorphism, f: &MatMorphism, c: &Object, c_prime: &Object) -> Result<bool> {
    let (a, a2) = (f.source(), f.target());
    expect_object("source of h", h.source(), &a.tensor(c))?;
    expect_object("target of h", h.target(), &a2.tensor(c_prime))?;
    let fh = f.tensor(h);
    let left = fh.compose(&symmetry(a, a, c))?;
    let right = symmetry(a2, a2, c_prime).compose(&fh)?;
    Ok(left == right)
}

/// `(h, f)` and `(l, g)` are equivalent iff
/// `(f (x) l) . s_{B,A,C} = s_{B',A',C'} . (g (x) h)` for `f : A -> A'`,
/// `g : B -> B'`.
pub fn pairs_equivalent(
    first: (&MatMorphism, &MatMorphism),
    second: (&MatMorphism, &MatMorphism),
    c: &Object,
    c_prime: &Object,
) -> Result<bool> {
    let ((h, f), (l, g)) = (first, second);
    let (a, a2, b, b2) = (f.source(), f.target(), g.source(), g.target());
    expect_object("source of h", h.source(), &a.tensor(c))?;
    expect_object("target of h", h.target(), &a2.tensor(c_prime))?;
    expect_object("source of l", l.source(), &b.tensor(c))?;
    expect_object("target of l", l.target(), &b2.tensor(c_prime))?;
    let left = f.tensor(l).compose(&symmetry(b, a, c))?;
    let right = symmetry(b2, a2, c_prime).compose(&g.tensor(h))?;
    Ok(left == right)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub l: MatMorphism,
    /// Dimension of the solution space of `f (x) l = h`.
    pub nullity: usize,
}

/// Solves `f (x) l = h` for `l : C -> C'` by exact linear algebra.
///
/// Fails with [`Error::Precondition`] if `f` is not regular or `h` is not
/// in `C_f(C, C')`, and with [`Error::Unsolvable`] if the system has no
/// solution anyway.
pub fn frac_solve_full(h: &MatMorphism, f: &MatMorphism, c: &Object, c_prime: &Object) -> Result<Solution> {
    if !is_regular(f) {
        return Err(Error::Precondition("f is zero, hence not regular".into()));
    }
    if !in_cf(h, f, c, c_prime)? {
        return Err(Error::Precondition("h does not lie in C_f(C, C')".into()));
    }
    let (ra, ca) = (f.target().dim(), f.source().dim());
    let (rl, cl) = (c_prime.dim(), c.dim());
    // unknown l[k][m] has index k * cl + m; equation for h[(i, k), (j, m)]
    let mut system = linalg::zeros(ra * rl * ca * cl, rl * cl);
    let mut rhs = Vec::with_capacity(ra * rl * ca * cl);
    for i in 0..ra {
        for k in 0..rl {
            for j in 0..ca {
                for m in 0..cl {
                    let eq = rhs.len();
                    system[eq][k * cl + m] = f.matrix()[i][j].clone();
                    rhs.push(h.matrix()[i * rl + k][j * cl + m].clone());
                }
            }
        }
    }
    let (x, nullity) = linalg::solve(&system, &rhs)
        .ok_or_else(|| Error::Unsolvable("no l with f (x) l = h".into()))?;
    let matrix = (0..rl).map(|k| x[k * cl..(k + 1) * cl].to_vec()).collect();
    Ok(Solution { l: MatMorphism::new(c.clone(), c_prime.clone(), matrix)?, nullity })
}

pub fn frac_solve(h: &MatMorphism, f: &MatMorphism, c: &Object, c_prime: &Object) -> Result<MatMorphism> {
    Ok(frac_solve_full(h, f, c, c_prime)?.l)
}

/// A fraction `h/f` of the unit: `f, h : A -> A'` with `f` regular and
/// `h` in `C_f(1, 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fraction {
    h: MatMorphism,
    f: MatMorphism,
}

impl Fraction {
    pub fn new(h: MatMorphism, f: MatMorphism) -> Result<Self> {
        if !is_regular(&f) {
            return Err(Error::Precondition("denominator is not regular".into()));
        }
        if !in_cf(&h, &f, &Object::unit(), &Object::unit())? {
            return Err(Error::Precondition("numerator does not commute with the denominator".into()));
        }
        Ok(Fraction { h, f })
    }

    pub fn scalar(num: Q, den: Q) -> Result<Self> {
        Self::new(MatMorphism::scalar(num), MatMorphism::scalar(den))
    }

    pub fn numerator(&self) -> &MatMorphism {
        &self.h
    }

    pub fn denominator(&self) -> &MatMorphism {
        &self.f
    }

    pub fn equivalent(&self, other: &Fraction) -> Result<bool> {
        let u = Object::unit();
        pairs_equivalent((&self.h, &self.f), (&other.h, &other.f), &u, &u)
    }
}

/// `(h (x) f' + f (x) h') / (f (x) f')`.
pub fn frac_add(x: &Fraction, y: &Fraction) -> Result<Fraction> {
    let num = x.h.tensor(&y.f).add(&x.f.tensor(&y.h))?;
    Fraction::new(num, x.f.tensor(&y.f))
}

/// `(h (x) h') / (f (x) f')`.
pub fn frac_mul(x: &Fraction, y: &Fraction) -> Result<Fraction> {
    Fraction::new(x.h.tensor(&y.h), x.f.tensor(&y.f))
}

/// The scalar `c` with `f (x) c = h`.
pub fn kappa_scalar(x: &Fraction) -> Result<Q> {
    let u = Object::unit();
    let l = frac_solve(&x.h, &x.f, &u, &u)?;
    Ok(l.matrix()[0][0].clone())
}
