//! Real forms, theta-stable parabolics and `A_q(lambda)` descriptors.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::galois::delta_tau;
use crate::lattice::IsogenyForm;
use crate::root_core::{Root, RootSystem, Series, Weight, Q};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FormKind {
    Compact,
    /// Inner form of the compact form; a root is noncompact iff its
    /// coefficients on the marked simple roots sum to an odd number.
    EqualRankInner { noncompact_marks: Vec<usize> },
    /// The complex group of the given type viewed as a real group.
    Complex,
    GlNReal { n: usize },
    GlNComplex { n: usize },
}

impl FormKind {
    pub fn name(&self) -> &'static str {
        match self {
            FormKind::Compact => "compact",
            FormKind::EqualRankInner { .. } => "equal_rank_inner",
            FormKind::Complex => "complex",
            FormKind::GlNReal { .. } => "gl_n_real",
            FormKind::GlNComplex { .. } => "gl_n_complex",
        }
    }
}

/// Which Weyl group of the compact Cartan is realized inside the maximal
/// compact subgroup `K`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RealWeylGroup {
    /// Only the Weyl group of the identity component of `K`.
    #[default]
    IdentityComponent,
    /// The component group of `K` supplies the full Weyl group of `G`.
    Full,
}

#[derive(Clone, Debug)]
pub struct RealFormDescriptor {
    kind: FormKind,
    form: IsogenyForm,
    real_weyl: RealWeylGroup,
}

impl RealFormDescriptor {
    pub fn new(kind: FormKind, form: IsogenyForm) -> Result<Self> {
        let rs = form.root_system();
        let n = rs.rank();
        match &kind {
            FormKind::EqualRankInner { noncompact_marks } => {
                if let Some(&i) = noncompact_marks.iter().find(|&&i| i >= n) {
                    return Err(Error::LetterOutOfRange { index: i, rank: n });
                }
            }
            FormKind::GlNReal { n: m } | FormKind::GlNComplex { n: m } => {
                let factors = rs.cartan_type().factors();
                let ok = *m >= 2
                    && factors.len() == 1
                    && factors[0].series == Series::A
                    && factors[0].rank == m - 1;
                if !ok {
                    return Err(Error::InvalidDescriptor(format!(
                        "gl_n with n = {m} needs root system A{}",
                        m.saturating_sub(1)
                    )));
                }
            }
            FormKind::Compact | FormKind::Complex => {}
        }
        let kind = match kind {
            FormKind::EqualRankInner { mut noncompact_marks } => {
                noncompact_marks.sort_unstable();
                noncompact_marks.dedup();
                FormKind::EqualRankInner { noncompact_marks }
            }
            k => k,
        };
        Ok(RealFormDescriptor {
            kind,
            form,
            real_weyl: RealWeylGroup::IdentityComponent,
        })
    }

    pub fn with_real_weyl_group(mut self, w: RealWeylGroup) -> Self {
        self.real_weyl = w;
        self
    }

    pub fn kind(&self) -> &FormKind {
        &self.kind
    }

    pub fn form(&self) -> &IsogenyForm {
        &self.form
    }

    pub fn root_system(&self) -> &RootSystem {
        self.form.root_system()
    }

    pub fn real_weyl_group(&self) -> RealWeylGroup {
        self.real_weyl
    }

    /// Compact/noncompact classification of a root, when it is given by roots.
    pub fn is_noncompact(&self, root: &Root) -> Option<bool> {
        match &self.kind {
            FormKind::Compact => Some(false),
            FormKind::EqualRankInner { noncompact_marks } => {
                let s: i64 = noncompact_marks.iter().map(|&i| root.root_coords()[i]).sum();
                Some(s.rem_euclid(2) == 1)
            }
            _ => None,
        }
    }

    /// Whether the Galois action on weights is trivial (split torus) or `-w0`.
    fn star_is_identity(&self) -> bool {
        matches!(self.kind, FormKind::GlNReal { .. })
    }

    /// The action of complex conjugation on dominant weights.
    pub fn star(&self, lambda: &Weight) -> Result<Weight> {
        if self.star_is_identity() {
            lambda.require_rank(self.root_system().rank())?;
            Ok(lambda.clone())
        } else {
            delta_tau(self.root_system(), lambda)
        }
    }

    /// The induced permutation of simple indices.
    pub fn star_index(&self, i: usize) -> usize {
        if self.star_is_identity() {
            i
        } else {
            self.root_system().diagram_involution()[i]
        }
    }

    /// Dimension of the part of the center of `g` lying in `p`.
    pub fn central_p_dimension(&self) -> usize {
        match self.kind {
            FormKind::GlNReal { .. } | FormKind::GlNComplex { .. } => 1,
            _ => 0,
        }
    }

    /// The conjugate real form: marks moved by the diagram involution.
    pub fn galois_conjugate(&self) -> Self {
        let kind = match &self.kind {
            FormKind::EqualRankInner { noncompact_marks } => {
                let mut marks: Vec<usize> =
                    noncompact_marks.iter().map(|&i| self.star_index(i)).collect();
                marks.sort_unstable();
                FormKind::EqualRankInner {
                    noncompact_marks: marks,
                }
            }
            k => k.clone(),
        };
        RealFormDescriptor {
            kind,
            ..self.clone()
        }
    }
}

/// A theta-stable parabolic `q = l + u`, given by the simple roots of `l`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ThetaParabolic {
    levi: Vec<usize>,
}

impl ThetaParabolic {
    pub fn new(rs: &RootSystem, mut levi: Vec<usize>) -> Result<Self> {
        if let Some(&i) = levi.iter().find(|&&i| i >= rs.rank()) {
            return Err(Error::LetterOutOfRange {
                index: i,
                rank: rs.rank(),
            });
        }
        levi.sort_unstable();
        levi.dedup();
        Ok(ThetaParabolic { levi })
    }

    pub fn borel() -> Self {
        ThetaParabolic { levi: Vec::new() }
    }

    pub fn full(rs: &RootSystem) -> Self {
        ThetaParabolic {
            levi: (0..rs.rank()).collect(),
        }
    }

    pub fn levi(&self) -> &[usize] {
        &self.levi
    }

    pub fn is_borel(&self) -> bool {
        self.levi.is_empty()
    }

    pub fn is_full(&self, rs: &RootSystem) -> bool {
        self.levi.len() == rs.rank()
    }

    /// Positive roots of `u`: those not in the span of the Levi simple roots.
    pub fn u_roots<'r>(&self, rs: &'r RootSystem) -> Vec<&'r Root> {
        rs.positive_roots()
            .iter()
            .filter(|r| !r.supported_on(&self.levi))
            .collect()
    }

    pub fn levi_positive_roots<'r>(&self, rs: &'r RootSystem) -> Vec<&'r Root> {
        rs.levi_roots(&self.levi)
    }
}

#[derive(Clone, Debug)]
pub struct AqDescriptor {
    form: RealFormDescriptor,
    parabolic: ThetaParabolic,
    lambda: Weight,
}

impl AqDescriptor {
    pub fn new(form: RealFormDescriptor, parabolic: ThetaParabolic, lambda: Weight) -> Result<Self> {
        let rs = form.root_system();
        lambda.require_rank(rs.rank())?;
        if let Some(&i) = parabolic.levi().iter().find(|&&i| lambda.coord(i) != Q::from_integer(0)) {
            return Err(Error::InvalidDescriptor(format!(
                "lambda {lambda} pairs nontrivially with the Levi simple coroot {}",
                i + 1
            )));
        }
        if matches!(form.kind(), FormKind::GlNReal { .. } | FormKind::GlNComplex { .. })
            && !(parabolic.is_borel() || parabolic.is_full(rs))
        {
            return Err(Error::Unsupported(
                "gl_n forms support only the Borel and q = g".into(),
            ));
        }
        Ok(AqDescriptor {
            form,
            parabolic,
            lambda,
        })
    }

    pub fn form(&self) -> &RealFormDescriptor {
        &self.form
    }

    pub fn parabolic(&self) -> &ThetaParabolic {
        &self.parabolic
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn root_system(&self) -> &RootSystem {
        self.form.root_system()
    }

    /// The descriptor transported by complex conjugation: conjugate form,
    /// Levi moved by the diagram involution, `lambda` moved by the star action.
    pub fn galois_conjugate(&self) -> Result<Self> {
        let rs = self.root_system();
        let levi = self.parabolic.levi().iter().map(|&i| self.form.star_index(i)).collect();
        let n = rs.rank();
        let mut coords = vec![Q::from_integer(0); n];
        for i in 0..n {
            coords[self.form.star_index(i)] = self.lambda.coord(i);
        }
        AqDescriptor::new(
            self.form.galois_conjugate(),
            ThetaParabolic::new(rs, levi)?,
            Weight::new(coords),
        )
    }
}
