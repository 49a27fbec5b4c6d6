//! Lefschetz fibrations described by their vanishing cycles.
//!
//! A fibration over the disk is any ordered list of right-handed vanishing
//! cycles; over the sphere the total monodromy must also be trivial, which
//! is checked here on homology only.

use std::fmt;

use num_bigint::BigInt;

use crate::atlas::{korkmaz_word, twisted_relator};
use crate::error::{Error, Result};
use crate::homology::{
    prefix_matrices, twist_power_matrix, word_matrix, HomologyClass, Letter, Surface,
    SymplecticMatrix, TwistWord,
};
use crate::linalg::{cokernel, AbelianGroup, IntegerMatrix};
use crate::meyer::meyer_cocycle;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Base {
    Disk,
    Sphere,
}

impl Base {
    pub fn euler_characteristic(self) -> i64 {
        match self {
            Base::Disk => 1,
            Base::Sphere => 2,
        }
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Base::Disk => "disk",
            Base::Sphere => "sphere",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VanishingCycle {
    pub class: HomologyClass,
    pub separating: bool,
}

impl VanishingCycle {
    pub fn letter(&self) -> Letter {
        Letter::new(self.class.clone(), 1, self.separating)
            .expect("vanishing cycles satisfy the letter invariants")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fibration {
    surface: Surface,
    base: Base,
    fiber_boundary_components: u8,
    cycles: Vec<VanishingCycle>,
    section_square: Option<i64>,
}

fn cycles_of(word: &TwistWord) -> Result<Vec<VanishingCycle>> {
    let mut cycles = Vec::with_capacity(word.len());
    for (index, l) in word.letters().iter().enumerate() {
        if l.exponent() < 0 {
            return Err(Error::NegativeTwist {
                index,
                exponent: l.exponent(),
            });
        }
        for _ in 0..l.exponent() {
            cycles.push(VanishingCycle {
                class: l.class().clone(),
                separating: l.is_separating(),
            });
        }
    }
    Ok(cycles)
}

impl Fibration {
    pub fn new(
        surface: Surface,
        base: Base,
        fiber_boundary_components: u8,
        cycles: Vec<VanishingCycle>,
        section_square: Option<i64>,
    ) -> Result<Self> {
        if fiber_boundary_components > 1 {
            return Err(Error::TooManyBoundaryComponents(fiber_boundary_components));
        }
        for c in &cycles {
            if c.class.surface() != surface {
                return Err(Error::SurfaceMismatch {
                    left: surface.genus(),
                    right: c.class.surface().genus(),
                });
            }
            if c.separating && !c.class.is_zero() {
                return Err(Error::SeparatingWithNonzeroClass);
            }
        }
        let f = Self {
            surface,
            base,
            fiber_boundary_components,
            cycles,
            section_square,
        };
        if base == Base::Sphere {
            if fiber_boundary_components != 0 {
                return Err(Error::SphereWithBoundary(fiber_boundary_components));
            }
            if !f.is_relator() {
                return Err(Error::MonodromyNotTrivial);
            }
        }
        Ok(f)
    }

    /// Closed-fiber fibration over the sphere from a relator of right-handed twists.
    pub fn over_sphere(word: &TwistWord, section_square: Option<i64>) -> Result<Self> {
        Self::new(word.surface(), Base::Sphere, 0, cycles_of(word)?, section_square)
    }

    /// Fibration over the disk; `fiber_boundary_components` is 0 or 1.
    pub fn over_disk(word: &TwistWord, fiber_boundary_components: u8) -> Result<Self> {
        Self::new(
            word.surface(),
            Base::Disk,
            fiber_boundary_components,
            cycles_of(word)?,
            None,
        )
    }

    /// `X_g`, carrying the section of square −1 that lifts `W_g` to the boundary twist.
    pub fn korkmaz(g: usize) -> Result<Self> {
        Self::over_sphere(&korkmaz_word(g)?, Some(-1))
    }

    /// `X_g(n)`, the self fiber sum of `X_g` twisted by `t_{a_1}^n`.
    pub fn twisted_korkmaz(g: usize, n: u64) -> Result<Self> {
        let x = Self::korkmaz(g)?;
        let f = twist_power_matrix(&HomologyClass::a(x.surface, 1), BigInt::from(n));
        fiber_sum(&x, &x, &f)
    }

    /// `S_g(n)`: the cycles of `W_g(n)` over the disk with a once-bounded fiber.
    pub fn stein_filling(g: usize, n: u64) -> Result<Self> {
        Self::over_disk(&twisted_relator(g, n)?, 1)
    }

    pub fn surface(&self) -> Surface {
        self.surface
    }

    pub fn fiber_genus(&self) -> usize {
        self.surface.genus()
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn fiber_boundary_components(&self) -> u8 {
        self.fiber_boundary_components
    }

    pub fn cycles(&self) -> &[VanishingCycle] {
        &self.cycles
    }

    pub fn section_square(&self) -> Option<i64> {
        self.section_square
    }

    pub fn separating_count(&self) -> usize {
        self.cycles.iter().filter(|c| c.separating).count()
    }

    pub fn to_word(&self) -> TwistWord {
        TwistWord::new(self.surface, self.cycles.iter().map(VanishingCycle::letter).collect())
            .expect("cycles share the fibration's surface")
    }

    pub fn monodromy(&self) -> SymplecticMatrix {
        word_matrix(&self.to_word())
    }

    pub fn is_relator(&self) -> bool {
        self.monodromy().is_identity()
    }

    /// `H_1` as `H_1(fiber)` modulo the vanishing-cycle classes.
    pub fn h1(&self) -> Result<AbelianGroup> {
        if self.base == Base::Sphere && self.section_square.is_none() {
            return Err(Error::MissingSection);
        }
        let columns: Vec<Vec<BigInt>> = self.cycles.iter().map(|c| c.class.coords().to_vec()).collect();
        Ok(cokernel(&IntegerMatrix::from_columns(self.surface.dimension(), &columns)?))
    }

    /// `χ(base)·χ(fiber) + #critical points`.
    pub fn euler_characteristic(&self) -> i64 {
        let g = self.surface.genus() as i64;
        let fiber = 2 - 2 * g - i64::from(self.fiber_boundary_components);
        self.base.euler_characteristic() * fiber + self.cycles.len() as i64
    }

    /// Signature from Meyer cocycle terms of the monodromy prefixes plus −1 per
    /// separating vanishing cycle. Requires trivial total monodromy.
    pub fn signature(&self) -> Result<i64> {
        let prefixes = prefix_matrices(&self.to_word());
        if !prefixes.last().expect("at least the identity").is_identity() {
            return Err(Error::NotARelator);
        }
        let mut sum = 0i64;
        for (k, cycle) in self.cycles.iter().enumerate().skip(1) {
            if cycle.class.is_zero() {
                continue;
            }
            let letter = twist_power_matrix(&cycle.class, 1);
            sum += meyer_cocycle(&prefixes[k], &letter)?;
        }
        Ok(sum - self.separating_count() as i64)
    }
}

/// Fiber sum `F1 #_f F2`: the cycles of `F1` followed by `f` applied to those of `F2`.
pub fn fiber_sum(f1: &Fibration, f2: &Fibration, f: &SymplecticMatrix) -> Result<Fibration> {
    if f1.surface != f2.surface {
        return Err(Error::SurfaceMismatch {
            left: f1.fiber_genus(),
            right: f2.fiber_genus(),
        });
    }
    if f1.base != Base::Sphere || f2.base != Base::Sphere {
        return Err(Error::FiberSumNeedsSphere);
    }
    let mut cycles = f1.cycles.clone();
    for c in &f2.cycles {
        cycles.push(VanishingCycle {
            class: f.apply(&c.class)?,
            separating: c.separating,
        });
    }
    let section_square = match (f1.section_square, f2.section_square) {
        (Some(a), Some(b)) => Some(a + b),
        _ => None,
    };
    Fibration::new(f1.surface, Base::Sphere, 0, cycles, section_square)
}

pub const RELATOR_CAVEAT: &str = "identity on homology is necessary but not sufficient for the word to be trivial in the mapping class group";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelatorReport {
    pub length: usize,
    pub matrix: SymplecticMatrix,
    pub is_identity: bool,
    pub separating_count: usize,
    pub caveat: &'static str,
}

pub fn verify_relator(w: &TwistWord) -> RelatorReport {
    let matrix = word_matrix(w);
    RelatorReport {
        length: w.len(),
        is_identity: matrix.is_identity(),
        matrix,
        separating_count: w.separating_count(),
        caveat: RELATOR_CAVEAT,
    }
}
