//! First homology of a closed oriented surface and the action of Dehn twists on it.
//!
//! Classes are written in the interleaved basis `(a_1, b_1, a_2, b_2, ..., a_g, b_g)`
//! with `⟨a_i, b_i⟩ = +1` and all other basis pairings zero. A twist word acts
//! left to right: in `t_1 t_2` the twist `t_1` is applied first, so its matrix
//! is `T_2 · T_1`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::IntegerMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Surface {
    genus: usize,
}

impl Surface {
    pub fn new(genus: usize) -> Result<Self> {
        if genus == 0 {
            return Err(Error::InvalidGenus { genus, min: 1 });
        }
        Ok(Self { genus })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// Rank of `H_1`, i.e. `2g`.
    pub fn dimension(&self) -> usize {
        2 * self.genus
    }

    /// The intersection form `J` in the interleaved basis.
    pub fn form(&self) -> IntegerMatrix {
        let n = self.dimension();
        IntegerMatrix::from_fn(n, n, |r, c| {
            if r % 2 == 0 && c == r + 1 {
                BigInt::one()
            } else if r % 2 == 1 && c + 1 == r {
                -BigInt::one()
            } else {
                BigInt::zero()
            }
        })
    }

    fn check_same(&self, other: &Surface) -> Result<()> {
        if self != other {
            return Err(Error::SurfaceMismatch {
                left: self.genus,
                right: other.genus,
            });
        }
        Ok(())
    }
}

/// An integral homology class on a surface.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HomologyClass {
    surface: Surface,
    coords: Vec<BigInt>,
}

impl HomologyClass {
    pub fn new(surface: Surface, coords: Vec<BigInt>) -> Result<Self> {
        if coords.len() != surface.dimension() {
            return Err(Error::LengthMismatch {
                expected: surface.dimension(),
                found: coords.len(),
            });
        }
        Ok(Self { surface, coords })
    }

    pub fn from_i64(surface: Surface, coords: &[i64]) -> Result<Self> {
        Self::new(surface, coords.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero(surface: Surface) -> Self {
        Self {
            surface,
            coords: vec![BigInt::zero(); surface.dimension()],
        }
    }

    /// The basis class `a_i`, with `i` counted from 1.
    pub fn a(surface: Surface, i: usize) -> Self {
        Self::basis(surface, 2 * (i - 1))
    }

    /// The basis class `b_i`, with `i` counted from 1.
    pub fn b(surface: Surface, i: usize) -> Self {
        Self::basis(surface, 2 * (i - 1) + 1)
    }

    fn basis(surface: Surface, index: usize) -> Self {
        assert!(
            index < surface.dimension(),
            "basis index out of range for genus {}",
            surface.genus
        );
        let mut c = Self::zero(surface);
        c.coords[index] = BigInt::one();
        c
    }

    pub fn surface(&self) -> Surface {
        self.surface
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scaled(&self, k: &BigInt) -> Self {
        Self {
            surface: self.surface,
            coords: self.coords.iter().map(|x| x * k).collect(),
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        assert_eq!(self.surface, other.surface, "classes live on different surfaces");
        Self {
            surface: self.surface,
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| f(a, b)).collect(),
        }
    }
}

impl Add for &HomologyClass {
    type Output = HomologyClass;
    fn add(self, rhs: &HomologyClass) -> HomologyClass {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Add for HomologyClass {
    type Output = HomologyClass;
    fn add(self, rhs: HomologyClass) -> HomologyClass {
        &self + &rhs
    }
}

impl Sub for &HomologyClass {
    type Output = HomologyClass;
    fn sub(self, rhs: &HomologyClass) -> HomologyClass {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Sub for HomologyClass {
    type Output = HomologyClass;
    fn sub(self, rhs: HomologyClass) -> HomologyClass {
        &self - &rhs
    }
}

impl Neg for &HomologyClass {
    type Output = HomologyClass;
    fn neg(self) -> HomologyClass {
        HomologyClass {
            surface: self.surface,
            coords: self.coords.iter().map(|x| -x).collect(),
        }
    }
}

impl fmt::Debug for HomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HomologyClass{self}")
    }
}

impl fmt::Display for HomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Algebraic intersection number `xᵀ J y`.
pub fn intersection_pairing(x: &HomologyClass, y: &HomologyClass) -> Result<BigInt> {
    x.surface.check_same(&y.surface)?;
    Ok(pairing(&x.coords, &y.coords))
}

fn pairing(x: &[BigInt], y: &[BigInt]) -> BigInt {
    x.chunks(2)
        .zip(y.chunks(2))
        .map(|(p, q)| &p[0] * &q[1] - &p[1] * &q[0])
        .sum()
}

/// `Jc`, so that `⟨x, c⟩ = x · Jc`.
fn dual(c: &[BigInt]) -> Vec<BigInt> {
    c.chunks(2).flat_map(|p| [p[1].clone(), -&p[0]]).collect()
}

/// True iff `mᵀ J m = J`.
pub fn is_symplectic(m: &IntegerMatrix) -> Result<bool> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if m.rows() % 2 != 0 {
        return Err(Error::OddDimension(m.rows()));
    }
    if m.rows() == 0 {
        return Ok(true);
    }
    let j = Surface::new(m.rows() / 2)?.form();
    Ok(&(&m.transpose() * &j) * m == j)
}

/// Integer matrix preserving the intersection form of its surface.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymplecticMatrix {
    surface: Surface,
    matrix: IntegerMatrix,
}

impl SymplecticMatrix {
    pub fn new(surface: Surface, matrix: IntegerMatrix) -> Result<Self> {
        if matrix.rows() != surface.dimension() || matrix.cols() != surface.dimension() {
            return Err(Error::LengthMismatch {
                expected: surface.dimension(),
                found: matrix.rows().max(matrix.cols()),
            });
        }
        if !is_symplectic(&matrix)? {
            return Err(Error::NotSymplectic);
        }
        Ok(Self { surface, matrix })
    }

    pub fn identity(surface: Surface) -> Self {
        Self {
            surface,
            matrix: IntegerMatrix::identity(surface.dimension()),
        }
    }

    pub fn surface(&self) -> Surface {
        self.surface
    }

    pub fn matrix(&self) -> &IntegerMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> IntegerMatrix {
        self.matrix
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    pub fn apply(&self, c: &HomologyClass) -> Result<HomologyClass> {
        self.surface.check_same(&c.surface)?;
        Ok(HomologyClass {
            surface: self.surface,
            coords: self.matrix.apply(&c.coords),
        })
    }

    /// Matrix product `self · rhs` (apply `rhs` first).
    pub fn compose(&self, rhs: &Self) -> Result<Self> {
        self.surface.check_same(&rhs.surface)?;
        Ok(Self {
            surface: self.surface,
            matrix: &self.matrix * &rhs.matrix,
        })
    }

    /// Exact inverse `-J Mᵀ J`.
    pub fn inverse(&self) -> Self {
        let j = self.surface.form();
        let inv = &(&j * &self.matrix.transpose()) * &j;
        Self {
            surface: self.surface,
            matrix: inv.scale(&-BigInt::one()),
        }
    }

    pub fn pow(&self, exponent: i64) -> Self {
        let base = if exponent < 0 { self.inverse() } else { self.clone() };
        let mut acc = Self::identity(self.surface);
        let mut sq = base;
        let mut k = exponent.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc.matrix = &acc.matrix * &sq.matrix;
            }
            k >>= 1;
            if k > 0 {
                sq.matrix = &sq.matrix * &sq.matrix;
            }
        }
        acc
    }

    pub fn determinant(&self) -> BigInt {
        self.matrix
            .determinant()
            .expect("symplectic matrices are square")
    }

    /// Replaces `self` by `T_c^exponent · self` without forming the twist matrix.
    fn twist_on_left(&mut self, c: &[BigInt], exponent: &BigInt) {
        let n = self.surface.dimension();
        let jc = dual(c);
        // row vector (Jc)ᵀ M
        let u: Vec<BigInt> = (0..n)
            .map(|col| {
                (0..n)
                    .filter(|&k| !jc[k].is_zero())
                    .map(|k| &jc[k] * self.matrix.get(k, col))
                    .sum()
            })
            .collect();
        for (r, cr) in c.iter().enumerate() {
            if cr.is_zero() {
                continue;
            }
            let scale = exponent * cr;
            for (col, uc) in u.iter().enumerate() {
                if !uc.is_zero() {
                    let v = self.matrix.get(r, col) + &scale * uc;
                    self.matrix.set(r, col, v);
                }
            }
        }
    }
}

impl fmt::Debug for SymplecticMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymplecticMatrix(genus {}) {:?}", self.surface.genus, self.matrix)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Handedness {
    Right,
    Left,
}

impl Handedness {
    pub fn sign(self) -> i64 {
        match self {
            Handedness::Right => 1,
            Handedness::Left => -1,
        }
    }
}

/// Picard–Lefschetz transvection `x ↦ x + s⟨x, c⟩c`, `s = ±1` by handedness.
pub fn twist_matrix(c: &HomologyClass, handedness: Handedness) -> SymplecticMatrix {
    twist_power_matrix(c, handedness.sign())
}

/// `T_c^exponent`, i.e. `x ↦ x + exponent·⟨x, c⟩c`.
pub fn twist_power_matrix(c: &HomologyClass, exponent: impl Into<BigInt>) -> SymplecticMatrix {
    let mut m = SymplecticMatrix::identity(c.surface);
    m.twist_on_left(&c.coords, &exponent.into());
    m
}

/// One letter `t_c^exponent` of a twist word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    class: HomologyClass,
    exponent: i64,
    separating: bool,
}

impl Letter {
    pub fn new(class: HomologyClass, exponent: i64, separating: bool) -> Result<Self> {
        if exponent == 0 {
            return Err(Error::ZeroExponent);
        }
        if separating && !class.is_zero() {
            return Err(Error::SeparatingWithNonzeroClass);
        }
        Ok(Self {
            class,
            exponent,
            separating,
        })
    }

    /// Right-handed twist about a nonseparating curve.
    pub fn right(class: HomologyClass) -> Self {
        Self {
            class,
            exponent: 1,
            separating: false,
        }
    }

    /// Right-handed twist about a separating (null-homologous) curve.
    pub fn separating(surface: Surface) -> Self {
        Self {
            class: HomologyClass::zero(surface),
            exponent: 1,
            separating: true,
        }
    }

    pub fn class(&self) -> &HomologyClass {
        &self.class
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn is_separating(&self) -> bool {
        self.separating
    }

    pub fn matrix(&self) -> SymplecticMatrix {
        twist_power_matrix(&self.class, self.exponent)
    }
}

/// An ordered product of Dehn twists on one surface.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwistWord {
    surface: Surface,
    letters: Vec<Letter>,
}

impl TwistWord {
    pub fn empty(surface: Surface) -> Self {
        Self {
            surface,
            letters: Vec::new(),
        }
    }

    pub fn new(surface: Surface, letters: Vec<Letter>) -> Result<Self> {
        let mut w = Self::empty(surface);
        for l in letters {
            w.push(l)?;
        }
        Ok(w)
    }

    pub fn push(&mut self, letter: Letter) -> Result<()> {
        self.surface.check_same(&letter.class.surface)?;
        self.letters.push(letter);
        Ok(())
    }

    pub fn surface(&self) -> Surface {
        self.surface
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn separating_count(&self) -> usize {
        self.letters.iter().filter(|l| l.separating).count()
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &Self) -> Result<Self> {
        self.surface.check_same(&other.surface)?;
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        Ok(Self {
            surface: self.surface,
            letters,
        })
    }

    /// `self` repeated `k` times.
    pub fn power(&self, k: usize) -> Self {
        Self {
            surface: self.surface,
            letters: (0..k).flat_map(|_| self.letters.iter().cloned()).collect(),
        }
    }

    /// Cyclic rotation moving the first `k` letters to the end.
    pub fn rotate_left(&self, k: usize) -> Self {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        Self {
            surface: self.surface,
            letters,
        }
    }

    /// Inverse word: letters reversed with exponents negated.
    pub fn inverse(&self) -> Self {
        Self {
            surface: self.surface,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter {
                    exponent: -l.exponent,
                    ..l.clone()
                })
                .collect(),
        }
    }
}

/// Action of the whole word on homology; the empty word gives the identity.
pub fn word_matrix(w: &TwistWord) -> SymplecticMatrix {
    let mut m = SymplecticMatrix::identity(w.surface);
    for l in &w.letters {
        if !l.class.is_zero() {
            m.twist_on_left(&l.class.coords, &BigInt::from(l.exponent));
        }
    }
    m
}

/// Prefix products `W_0 = I, W_1, ..., W_s` of a word.
pub fn prefix_matrices(w: &TwistWord) -> Vec<SymplecticMatrix> {
    let mut out = Vec::with_capacity(w.len() + 1);
    let mut m = SymplecticMatrix::identity(w.surface);
    out.push(m.clone());
    for l in &w.letters {
        if !l.class.is_zero() {
            m.twist_on_left(&l.class.coords, &BigInt::from(l.exponent));
        }
        out.push(m.clone());
    }
    out
}

/// Conjugates every letter by `f`: `f t_c f⁻¹ = t_{f(c)}`.
pub fn conjugate_word(w: &TwistWord, f: &SymplecticMatrix) -> Result<TwistWord> {
    w.surface.check_same(&f.surface)?;
    let letters = w
        .letters
        .iter()
        .map(|l| {
            Ok(Letter {
                class: f.apply(&l.class)?,
                ..l.clone()
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TwistWord {
        surface: w.surface,
        letters,
    })
}
