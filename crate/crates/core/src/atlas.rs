//! Homology classes of the curves in the Korkmaz relators and the relators themselves.
//!
//! For `g = 2r + 1` the relator is `(t_{B_0} t_{B_1} ⋯ t_{B_g} t_a² t_b²)²`; for
//! `g = 2r` it is `(t_{B_0} t_{B_1} ⋯ t_{B_g} t_c)²` with `c` separating. The
//! classes are generated from the top curve downward:
//!
//! ```text
//! B_0      = b_1 + b_2 + ⋯ + b_g
//! B_{2i-1} = b_i + B_{2i} + b_{g-i+1}
//! B_{2i}   = a_i - a_{i+1} + B_{2i+1} + a_{g-i+1} - a_{g-i}
//! ```
//!
//! with `a = b = a_{r+1}` and `B_g = a + b_{r+1} + b` for odd genus, and
//! `B_g = a_r + a_{r+1}` for even genus. The curves `a` and `b` together bound
//! a subsurface, so they are homologous.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::homology::{conjugate_word, twist_power_matrix, HomologyClass, Letter, Surface, TwistWord};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtlasCurve {
    pub name: String,
    pub class: HomologyClass,
    pub separating: bool,
}

impl AtlasCurve {
    pub fn letter(&self) -> Letter {
        if self.separating {
            Letter::separating(self.class.surface())
        } else {
            Letter::right(self.class.clone())
        }
    }
}

/// Named curves `B0, ..., Bg` plus `a, b` (odd genus) or `c` (even genus).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveAtlas {
    surface: Surface,
    curves: Vec<AtlasCurve>,
}

impl CurveAtlas {
    pub fn surface(&self) -> Surface {
        self.surface
    }

    pub fn curves(&self) -> &[AtlasCurve] {
        &self.curves
    }

    pub fn get(&self, name: &str) -> Option<&AtlasCurve> {
        self.curves.iter().find(|c| c.name == name)
    }

    pub fn class(&self, name: &str) -> Option<&HomologyClass> {
        self.get(name).map(|c| &c.class)
    }

    /// `B_i`
    pub fn b_curve(&self, i: usize) -> &HomologyClass {
        self.class(&format!("B{i}")).expect("B_i exists for 0 <= i <= g")
    }

    pub fn letter(&self, name: &str) -> Result<Letter> {
        self.get(name).map(AtlasCurve::letter).ok_or_else(|| Error::UnknownCurve {
            name: name.to_string(),
            genus: self.surface.genus(),
        })
    }
}

fn check_genus(g: usize) -> Result<Surface> {
    if g < 2 {
        return Err(Error::InvalidGenus { genus: g, min: 2 });
    }
    Surface::new(g)
}

pub fn korkmaz_curves(g: usize) -> Result<CurveAtlas> {
    let s = check_genus(g)?;
    let a = |i: usize| HomologyClass::a(s, i);
    let b = |i: usize| HomologyClass::b(s, i);

    let r = g / 2;
    let mut bs: Vec<HomologyClass> = vec![HomologyClass::zero(s); g + 1];
    bs[0] = (1..=g).fold(HomologyClass::zero(s), |acc, j| &acc + &b(j));

    let mut extra = Vec::new();
    let top_odd_index;
    if g % 2 == 1 {
        let ca = a(r + 1);
        let cb = a(r + 1);
        bs[g] = &(&ca + &b(r + 1)) + &cb;
        extra.push(("a", ca, false));
        extra.push(("b", cb, false));
        top_odd_index = r;
    } else {
        bs[g] = &a(r) + &a(r + 1);
        bs[g - 1] = &(&b(r) + &bs[g]) + &b(r + 1);
        extra.push(("c", HomologyClass::zero(s), true));
        top_odd_index = r - 1;
    }
    for i in (1..=top_odd_index).rev() {
        bs[2 * i] = &(&(&(&a(i) - &a(i + 1)) + &bs[2 * i + 1]) + &a(g - i + 1)) - &a(g - i);
        bs[2 * i - 1] = &(&b(i) + &bs[2 * i]) + &b(g - i + 1);
    }

    let mut curves: Vec<AtlasCurve> = bs
        .into_iter()
        .enumerate()
        .map(|(i, class)| AtlasCurve {
            name: format!("B{i}"),
            class,
            separating: false,
        })
        .collect();
    curves.extend(extra.into_iter().map(|(name, class, separating)| AtlasCurve {
        name: name.to_string(),
        class,
        separating,
    }));
    Ok(CurveAtlas { surface: s, curves })
}

/// `W_g`, with squared twists expanded into repeated letters.
pub fn korkmaz_word(g: usize) -> Result<TwistWord> {
    let atlas = korkmaz_curves(g)?;
    let mut names: Vec<String> = (0..=g).map(|i| format!("B{i}")).collect();
    if g % 2 == 1 {
        names.extend(["a", "a", "b", "b"].map(String::from));
    } else {
        names.push("c".to_string());
    }
    let half = names
        .iter()
        .map(|n| atlas.letter(n))
        .collect::<Result<Vec<_>>>()?;
    Ok(TwistWord::new(atlas.surface(), half)?.power(2))
}

/// `W_g(n) = W_g · W_g^{t_{a_1}^n}`: the relator of the twisted self fiber sum.
pub fn twisted_relator(g: usize, n: u64) -> Result<TwistWord> {
    let w = korkmaz_word(g)?;
    let f = twist_power_matrix(&HomologyClass::a(w.surface(), 1), BigInt::from(n));
    w.concat(&conjugate_word(&w, &f)?)
}
