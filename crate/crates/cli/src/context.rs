use std::cell::RefCell;
use std::collections::BTreeMap;
use std::rc::Rc;
use std::sync::Arc;

use atlas_core::algebra::{Algebra, FiniteAlgebra};
use atlas_core::cancel::CancelToken;
use atlas_core::catalog::DerivationDims;
use atlas_core::jordan::JordanAlgebra;
use atlas_core::lie::{derivation_algebra, LieAlgebraBasis, LieError};
use clap::ValueEnum;

/// Algebras whose derivations the CLI can compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Target {
    #[value(skip)]
    Real,
    Complex,
    Quaternions,
    Octonions,
    J3r,
    J3c,
    J3h,
    J3o,
}

impl Target {
    pub const ALL: [Target; 8] = [
        Target::Real,
        Target::Complex,
        Target::Quaternions,
        Target::Octonions,
        Target::J3r,
        Target::J3c,
        Target::J3h,
        Target::J3o,
    ];

    fn coefficient_dim(self) -> usize {
        match self {
            Target::Real | Target::J3r => 1,
            Target::Complex | Target::J3c => 2,
            Target::Quaternions | Target::J3h => 4,
            Target::Octonions | Target::J3o => 8,
        }
    }

    pub fn is_jordan(self) -> bool {
        matches!(self, Target::J3r | Target::J3c | Target::J3h | Target::J3o)
    }

    pub fn algebra(self) -> Box<dyn Algebra> {
        let k = FiniteAlgebra::tower(self.coefficient_dim());
        if self.is_jordan() {
            Box::new(JordanAlgebra::new(Arc::new(k)))
        } else {
            Box::new(k)
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Target::Real => "R",
            Target::Complex => "C",
            Target::Quaternions => "H",
            Target::Octonions => "O",
            Target::J3r => "J3(R)",
            Target::J3c => "J3(C)",
            Target::J3h => "J3(H)",
            Target::J3o => "J3(O)",
        }
    }
}

/// Settings shared by every command of one run, plus a cache so that each
/// derivation algebra, in particular `Der(J3(O))`, is computed at most once.
pub struct Context {
    pub seed: u64,
    pub trials: usize,
    pub cancel: CancelToken,
    pub inject_corrupted_record: bool,
    derivations: RefCell<BTreeMap<Target, Result<Rc<LieAlgebraBasis>, LieError>>>,
}

impl Context {
    pub fn new(seed: u64, trials: usize, cancel: CancelToken) -> Self {
        Self {
            seed,
            trials,
            cancel,
            inject_corrupted_record: false,
            derivations: RefCell::default(),
        }
    }

    pub fn derivations(&self, target: Target) -> Result<Rc<LieAlgebraBasis>, LieError> {
        if let Some(cached) = self.derivations.borrow().get(&target) {
            return cached.clone();
        }
        let result = derivation_algebra(target.algebra().as_ref(), &self.cancel).map(Rc::new);
        self.derivations.borrow_mut().insert(target, result.clone());
        result
    }

    pub fn derivation_dims(&self) -> Result<DerivationDims, LieError> {
        let mut dims = DerivationDims {
            composition: [0; 4],
            jordan: [0; 4],
        };
        for (i, t) in Target::ALL.iter().enumerate() {
            let d = self.derivations(*t)?.dim();
            if i < 4 {
                dims.composition[i] = d;
            } else {
                dims.jordan[i - 4] = d;
            }
        }
        Ok(dims)
    }
}
