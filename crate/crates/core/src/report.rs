//! Aggregated invariants of the Stein fillings `S_g(n)`.

use crate::atlas::korkmaz_word;
use crate::error::Result;
use crate::fibration::Fibration;
use crate::linalg::AbelianGroup;
use crate::plumbing::{plumbing_boundary_h1, PlumbingGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FillingReport {
    pub genus: usize,
    pub twist_power: u64,
    /// Letters in `W_g(n)`.
    pub factorization_length: usize,
    /// Letters in a single copy of `W_g`.
    pub relator_length: usize,
    /// `H_1(S_g(n))` from the disk-base handle decomposition.
    pub h1: AbelianGroup,
    /// `H_1(X_g(n))` over the sphere; always equal to `h1`.
    pub closed_h1: AbelianGroup,
    /// `χ(S_g(n))` from the full factorization.
    pub euler_characteristic: i64,
    /// Disk-base `χ` counting only the letters of one `W_g`.
    pub relator_euler_characteristic: i64,
    pub signature: i64,
    pub relator_ok: bool,
    pub separating_count: usize,
    pub section_square: Option<i64>,
    /// `H_1` of the boundary plumbing `M_g`.
    pub boundary_h1: AbelianGroup,
    pub notes: Vec<String>,
}

impl FillingReport {
    /// `χ − χ(punctured fiber)`, which must equal the factorization length.
    pub fn length_from_euler_characteristic(&self) -> i64 {
        self.euler_characteristic - (1 - 2 * self.genus as i64)
    }
}

pub fn filling_report(g: usize, n: u64) -> Result<FillingReport> {
    let closed = Fibration::twisted_korkmaz(g, n)?;
    let filling = Fibration::stein_filling(g, n)?;
    let relator = korkmaz_word(g)?;
    let relator_filling = Fibration::over_disk(&relator, 1)?;

    let h1 = filling.h1()?;
    let closed_h1 = closed.h1()?;
    let euler_characteristic = filling.euler_characteristic();
    let relator_euler_characteristic = relator_filling.euler_characteristic();
    let factorization_length = filling.cycles().len();

    let mut notes = vec![format!(
        "length/chi relation: s = chi - (1 - 2g) = {} - ({}) = {}",
        euler_characteristic,
        1 - 2 * g as i64,
        factorization_length
    )];
    notes.push(format!(
        "chi from the full factorization W_g(n) ({factorization_length} letters) is {euler_characteristic}; \
         counting only the {} letters of W_g gives {relator_euler_characteristic}",
        relator.len()
    ));
    if g % 2 == 0 {
        notes.push(format!(
            "even genus: H1 has free rank g - 1 = {}, not g - 2; the closed form Z^(g-2) + Z_n holds for odd g only",
            g - 1
        ));
    }
    if n == 0 {
        notes.push("n = 0: Z_0 is counted as a free summand".to_string());
    }

    Ok(FillingReport {
        genus: g,
        twist_power: n,
        factorization_length,
        relator_length: relator.len(),
        h1,
        closed_h1,
        euler_characteristic,
        relator_euler_characteristic,
        signature: closed.signature()?,
        relator_ok: closed.is_relator(),
        separating_count: closed.separating_count(),
        section_square: closed.section_square(),
        boundary_h1: plumbing_boundary_h1(&PlumbingGraph::stein_boundary(g))?,
        notes,
    })
}
