//! Special forms g(l1 + l2), g(l1·l2) and g((l1 + l2)/(1 − l1·l2)) from a bilinear core.

mod bilinear;
mod full;
mod jordan;
mod pencil;

use std::fmt;

use crate::field::Scalar;
use crate::ratfunc::UniRat;

pub use bilinear::{classify_bilinear, verify_form};
pub use full::{classify_full, ClassifyBounds};
pub use jordan::{jordan_2x2, JordanCase, JordanData};
pub use pencil::{extract_pencil, shift_normalize, BilinearPencil};

/// Which field the witnesses may live in.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum Mode {
    /// Real closure: tangent addition is allowed.
    #[default]
    Real,
    /// Algebraically closed: only additive and multiplicative forms.
    Complex,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SpecialKind {
    Additive,
    Multiplicative,
    Tangent,
}

impl fmt::Display for SpecialKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpecialKind::Additive => "additive",
            SpecialKind::Multiplicative => "multiplicative",
            SpecialKind::Tangent => "tangent",
        })
    }
}

/// f(x1, x2) = g(l1(x1) ⋆ l2(x2)) for the operation given by `kind`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpecialForm {
    pub kind: SpecialKind,
    pub g: UniRat<Scalar>,
    pub l1: UniRat<Scalar>,
    pub l2: UniRat<Scalar>,
}
