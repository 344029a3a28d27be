use serde::{Deserialize, Serialize};

use super::indicator::{fs_indicator_compact, FsIndicator};
use crate::error::{Error, Result};
use crate::galois::delta_tau;
use crate::lattice::IsogenyForm;
use crate::root_core::{Weight, Q};

/// How the component group of a class-S group sits over the identity component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ComponentData {
    Connected,
    /// A semidirect factor of order two. The nontrivial element acts on the
    /// weights of the semisimple part by a diagram automorphism (a permutation
    /// of simple indices) and on the torus characters by `x -> -x` or trivially.
    OrderTwo {
        diagram_action: Vec<usize>,
        negate_torus: bool,
    },
}

/// A compact group: identity component `semisimple x torus`, plus component data.
/// Weights are written as the semisimple coordinates followed by the torus ones.
#[derive(Clone, Debug)]
pub struct CompactFormDescriptor {
    semisimple: Option<IsogenyForm>,
    torus_rank: usize,
    component: ComponentData,
}

impl CompactFormDescriptor {
    pub fn connected(form: IsogenyForm) -> Self {
        CompactFormDescriptor {
            semisimple: Some(form),
            torus_rank: 0,
            component: ComponentData::Connected,
        }
    }

    /// Validates the class-S conditions on the component data.
    pub fn new(
        semisimple: Option<IsogenyForm>,
        torus_rank: usize,
        component: ComponentData,
    ) -> Result<Self> {
        if semisimple.is_none() && torus_rank == 0 {
            return Err(Error::NotClassS("trivial identity component".into()));
        }
        if let ComponentData::OrderTwo { diagram_action, .. } = &component {
            let n = semisimple.as_ref().map_or(0, |f| f.root_system().rank());
            if diagram_action.len() != n {
                return Err(Error::NotClassS(format!(
                    "diagram action has length {}, expected {n}",
                    diagram_action.len()
                )));
            }
            if diagram_action.iter().enumerate().any(|(i, &j)| j >= n || diagram_action[j] != i) {
                return Err(Error::NotClassS("component action is not an involution".into()));
            }
            if let Some(form) = &semisimple {
                let c = form.root_system().cartan_matrix();
                let preserves = (0..n)
                    .all(|i| (0..n).all(|j| c[diagram_action[i]][diagram_action[j]] == c[i][j]));
                if !preserves {
                    return Err(Error::NotClassS(
                        "component action is not a diagram automorphism".into(),
                    ));
                }
                let q = form.quotient();
                for class in form.subgroup() {
                    let rep = crate::lattice::minimal_representative(form.root_system(), q, class);
                    let moved = permute(&rep, diagram_action);
                    if !form.is_character(&moved)? {
                        return Err(Error::NotClassS(
                            "component action does not preserve the isogeny form".into(),
                        ));
                    }
                }
            }
        }
        Ok(CompactFormDescriptor {
            semisimple,
            torus_rank,
            component,
        })
    }

    pub fn semisimple(&self) -> Option<&IsogenyForm> {
        self.semisimple.as_ref()
    }

    pub fn torus_rank(&self) -> usize {
        self.torus_rank
    }

    pub fn component(&self) -> &ComponentData {
        &self.component
    }

    fn ss_rank(&self) -> usize {
        self.semisimple.as_ref().map_or(0, |f| f.root_system().rank())
    }

    fn split<'w>(&self, lambda: &'w Weight) -> Result<(Weight, &'w [Q])> {
        lambda.require_rank(self.ss_rank() + self.torus_rank)?;
        let (a, b) = lambda.coords().split_at(self.ss_rank());
        Ok((Weight::new(a.to_vec()), b))
    }

    /// Complex conjugation: `-w0` on the semisimple part, negation on the torus.
    pub fn conjugate(&self, lambda: &Weight) -> Result<Weight> {
        let (ss, torus) = self.split(lambda)?;
        let mut out = match &self.semisimple {
            Some(f) => delta_tau(f.root_system(), &ss)?.coords().to_vec(),
            None => Vec::new(),
        };
        out.extend(torus.iter().map(|t| -t));
        Ok(Weight::new(out))
    }

    /// The component action on weights of the identity component.
    pub fn component_action(&self, lambda: &Weight) -> Result<Weight> {
        let (ss, torus) = self.split(lambda)?;
        match &self.component {
            ComponentData::Connected => Ok(lambda.clone()),
            ComponentData::OrderTwo {
                diagram_action,
                negate_torus,
            } => {
                let mut out = permute(&ss, diagram_action).coords().to_vec();
                out.extend(torus.iter().map(|t| if *negate_torus { -t } else { *t }));
                Ok(Weight::new(out))
            }
        }
    }

    /// Indicator of the irreducible of the identity component with highest weight `lambda`.
    pub fn identity_component_indicator(&self, lambda: &Weight) -> Result<FsIndicator> {
        let (ss, torus) = self.split(lambda)?;
        let ss_fs = match &self.semisimple {
            Some(f) => fs_indicator_compact(f, &ss)?,
            None => FsIndicator::Real,
        };
        let torus_fs = if torus.iter().all(|t| *t == Q::from_integer(0)) {
            FsIndicator::Real
        } else {
            FsIndicator::Complex
        };
        Ok(ss_fs.product(torus_fs))
    }
}

fn permute(lambda: &Weight, sigma: &[usize]) -> Weight {
    // sigma(omega_i) = omega_{sigma(i)}
    let mut out = vec![Q::from_integer(0); lambda.rank()];
    for (i, c) in lambda.coords().iter().enumerate() {
        out[sigma[i]] = *c;
    }
    Weight::new(out)
}

/// Which branch of the order-two analysis produced the indicator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClassSCase {
    /// Connected group: the indicator of the identity component.
    Connected,
    /// Restriction to the identity component stays irreducible; indicator inherited.
    IrreducibleRestriction,
    /// Induced from a self-dual irreducible of the identity component.
    InducedSelfDual,
    /// Restriction is a pair of Galois-conjugate irreducibles. Over a number
    /// field only the real outcome is possible; the sign-flip alternative is flagged.
    ConjugatePair { exceptional_case_excluded: bool },
    /// Not self-dual.
    NotSelfDual,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSIndicator {
    pub indicator: FsIndicator,
    pub case: ClassSCase,
}

/// Indicator of the irreducible of the full class-S group attached to the
/// identity-component weight `lambda` (and its component-action image).
pub fn class_s_indicator(desc: &CompactFormDescriptor, lambda: &Weight) -> Result<ClassSIndicator> {
    let base = desc.identity_component_indicator(lambda)?;
    if desc.component == ComponentData::Connected {
        return Ok(ClassSIndicator {
            indicator: base,
            case: ClassSCase::Connected,
        });
    }
    let moved = desc.component_action(lambda)?;
    if &moved == lambda {
        return Ok(ClassSIndicator {
            indicator: base,
            case: ClassSCase::IrreducibleRestriction,
        });
    }
    let dual = desc.conjugate(lambda)?;
    if &dual == lambda {
        return Ok(ClassSIndicator {
            indicator: base,
            case: ClassSCase::InducedSelfDual,
        });
    }
    if dual == moved {
        return Ok(ClassSIndicator {
            indicator: FsIndicator::Real,
            case: ClassSCase::ConjugatePair {
                exceptional_case_excluded: true,
            },
        });
    }
    Ok(ClassSIndicator {
        indicator: FsIndicator::Complex,
        case: ClassSCase::NotSelfDual,
    })
}
