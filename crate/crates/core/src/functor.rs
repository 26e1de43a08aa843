//! Finitely presented functors as presentations, and their pointwise
//! evaluation.
//!
//! A functor is never materialized as an object of a functor category; it is
//! a variance flag plus a presentation morphism `f: A -> B` between finitely
//! presented modules, evaluated as a cokernel of induced Hom maps:
//!
//! * covariant: `F(M) = coker( Hom(B,M) -> Hom(A,M) )` (precompose `f`),
//! * contravariant: `G(M) = coker( Hom(M,A) -> Hom(M,B) )` (postcompose `f`).
//!
//! The values of pp-pair functors and annihilator functors are computed
//! directly from solution sets; the presentation bridge connects the two.

use crate::error::Error;
use crate::linalg::{Mat, QuotientSpace, Subspace};
use crate::module::{
    cokernel_module, express_in_hom_basis, hom_space, submodule, submodule_generated,
    tensor_over_r, Module, ModuleMap, Side,
};
use crate::pp::PpPair;
use crate::Result;
use std::sync::Arc;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Variance {
    Covariant,
    Contravariant,
}

/// A finitely presented functor, given by a presentation morphism.
#[derive(Clone)]
pub struct FpFunctor {
    variance: Variance,
    presentation: ModuleMap,
}

impl FpFunctor {
    pub fn new(variance: Variance, presentation: ModuleMap) -> FpFunctor {
        FpFunctor {
            variance,
            presentation,
        }
    }

    pub fn variance(&self) -> Variance {
        self.variance
    }

    pub fn presentation(&self) -> &ModuleMap {
        &self.presentation
    }

    /// The side of the modules this functor takes as arguments.
    pub fn arg_side(&self) -> Side {
        self.presentation.source().side()
    }
}

/// A functor value: a quotient `total/relations` of subspaces of an ambient
/// coordinate space, with lift and project maps.
#[derive(Clone, Debug)]
pub struct FunctorValue {
    total: Subspace,
    relations: Subspace,
    quot: QuotientSpace,
}

impl FunctorValue {
    /// `relations` must be contained in `total`.
    pub fn new(total: Subspace, relations: Subspace) -> FunctorValue {
        assert!(
            total.contains(&relations),
            "functor value relations must lie inside the total space"
        );
        let p = total.prime();
        let rel_rows: Vec<Vec<i64>> = (0..relations.dim())
            .map(|i| {
                total
                    .coords(relations.basis().row(i))
                    .expect("containment checked above")
                    .into_iter()
                    .map(i64::from)
                    .collect()
            })
            .collect();
        let rel_in_total = if rel_rows.is_empty() {
            Subspace::zero(p, total.dim())
        } else {
            Subspace::from_span(&Mat::from_rows(p, &rel_rows))
        };
        FunctorValue {
            total,
            relations,
            quot: QuotientSpace::new(rel_in_total),
        }
    }

    /// The whole coordinate space with no relations.
    pub fn full(p: u32, dim: usize) -> FunctorValue {
        FunctorValue::new(Subspace::whole(p, dim), Subspace::zero(p, dim))
    }

    /// A subspace viewed as a value (zero relations).
    pub fn from_subspace(total: Subspace) -> FunctorValue {
        let z = Subspace::zero(total.prime(), total.ambient());
        FunctorValue::new(total, z)
    }

    pub fn dim(&self) -> usize {
        self.quot.dim()
    }

    pub fn total(&self) -> &Subspace {
        &self.total
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    /// Quotient coordinates of an ambient vector lying in `total`.
    pub fn project(&self, v: &[u32]) -> Option<Vec<u32>> {
        Some(self.quot.project(&self.total.coords(v)?))
    }

    /// An ambient representative of the `k`-th quotient basis class.
    pub fn lift(&self, k: usize) -> Vec<u32> {
        self.total
            .from_coords(&self.quot.lift(&unit_vec(self.dim(), k)))
    }
}

fn unit_vec(n: usize, k: usize) -> Vec<u32> {
    let mut v = vec![0u32; n];
    v[k] = 1;
    v
}

/// `F_{φ/ψ}(M) = φ(M)/ψ(M)` from solution sets.
pub fn eval_pp_pair(pair: &PpPair, m: &Arc<Module>) -> Result<FunctorValue> {
    let total = pair.phi().solution_set(m)?;
    let relations = pair.psi().solution_set(m)?;
    Ok(FunctorValue::new(total, relations))
}

/// The annihilator value `𝔸_{φ/ψ}(M) = 𝔸_ψ(M)/𝔸_φ(M)` inside `(M*)^n`,
/// under the coordinatewise evaluation pairing `f̄·ā = Σ f_i(a_i)`, which in
/// dual-basis coordinates is the standard dot product.
pub fn annihilator_eval(pair: &PpPair, m: &Arc<Module>) -> Result<FunctorValue> {
    let phi_sols = pair.phi().solution_set(m)?;
    let psi_sols = pair.psi().solution_set(m)?;
    Ok(FunctorValue::new(
        psi_sols.orthogonal(),
        phi_sols.orthogonal(),
    ))
}

/// The value of `F(M)` together with the Hom basis that carries it.
pub struct PresEval {
    /// Basis of `Hom(A, M)` (covariant) or `Hom(M, B)` (contravariant).
    pub carrier: Vec<ModuleMap>,
    pub value: FunctorValue,
}

/// Evaluates a presented functor at a module, keeping the carrier basis.
pub fn eval_presentation_full(f: &FpFunctor, m: &Arc<Module>) -> Result<PresEval> {
    let p = m.prime();
    let pres = &f.presentation;
    let (carrier, image_rows) = match f.variance {
        Variance::Covariant => {
            // coker( Hom(B,M) --(∘f)--> Hom(A,M) )
            let hom_b = hom_space(pres.target(), m)?;
            let hom_a = hom_space(pres.source(), m)?;
            let rows: Vec<Vec<u32>> = hom_b
                .iter()
                .map(|h| {
                    let composed = h.matrix().mul(pres.matrix());
                    express_in_hom_basis(&hom_a, &composed)
                        .expect("precomposition stays in the hom space")
                })
                .collect();
            (hom_a, rows)
        }
        Variance::Contravariant => {
            // coker( Hom(M,A) --(f∘)--> Hom(M,B) )
            let hom_ma = hom_space(m, pres.source())?;
            let hom_mb = hom_space(m, pres.target())?;
            let rows: Vec<Vec<u32>> = hom_ma
                .iter()
                .map(|h| {
                    let composed = pres.matrix().mul(h.matrix());
                    express_in_hom_basis(&hom_mb, &composed)
                        .expect("postcomposition stays in the hom space")
                })
                .collect();
            (hom_mb, rows)
        }
    };
    let ambient = carrier.len();
    let image = if image_rows.is_empty() {
        Subspace::zero(p, ambient)
    } else {
        let rows: Vec<Vec<i64>> = image_rows
            .iter()
            .map(|r| r.iter().map(|&v| i64::from(v)).collect())
            .collect();
        Subspace::from_span(&Mat::from_rows(p, &rows))
    };
    let value = FunctorValue::new(Subspace::whole(p, ambient), image);
    Ok(PresEval { carrier, value })
}

pub fn eval_presentation(f: &FpFunctor, m: &Arc<Module>) -> Result<FunctorValue> {
    Ok(eval_presentation_full(f, m)?.value)
}

/// The map `F(g)` induced by `g: M -> N` on covariant presentation values.
pub fn induced_map_covariant(
    f: &FpFunctor,
    g: &ModuleMap,
    at_m: &PresEval,
    at_n: &PresEval,
) -> Mat {
    assert_eq!(f.variance, Variance::Covariant);
    let p = g.matrix().prime();
    let mut out = Mat::zeros(p, at_n.value.dim(), at_m.value.dim());
    for k in 0..at_m.value.dim() {
        let coords = at_m.value.lift(k);
        let mut mat = Mat::zeros(p, g.source().dim(), f.presentation.source().dim());
        for (i, &c) in coords.iter().enumerate() {
            if c != 0 {
                mat = mat.add(&at_m.carrier[i].matrix().scale(c));
            }
        }
        let moved = g.matrix().mul(&mat);
        let expressed =
            express_in_hom_basis(&at_n.carrier, &moved).expect("g∘h lies in Hom(A,N)");
        let projected = at_n.value.project(&expressed).expect("total is full");
        for (r, &c) in projected.iter().enumerate() {
            out.set_raw(r, k, c);
        }
    }
    out
}

/// The map `G(g): G(N) -> G(M)` induced by `g: M -> N` on contravariant
/// presentation values.
pub fn induced_map_contravariant(
    f: &FpFunctor,
    g: &ModuleMap,
    at_n: &PresEval,
    at_m: &PresEval,
) -> Mat {
    assert_eq!(f.variance, Variance::Contravariant);
    let p = g.matrix().prime();
    let mut out = Mat::zeros(p, at_m.value.dim(), at_n.value.dim());
    for k in 0..at_n.value.dim() {
        let coords = at_n.value.lift(k);
        let mut mat = Mat::zeros(p, f.presentation.target().dim(), g.target().dim());
        for (i, &c) in coords.iter().enumerate() {
            if c != 0 {
                mat = mat.add(&at_n.carrier[i].matrix().scale(c));
            }
        }
        let moved = mat.mul(g.matrix());
        let expressed =
            express_in_hom_basis(&at_m.carrier, &moved).expect("h∘g lies in Hom(M,B)");
        let projected = at_m.value.project(&expressed).expect("total is full");
        for (r, &c) in projected.iter().enumerate() {
            out.set_raw(r, k, c);
        }
    }
    out
}

/// The map `F_{φ/ψ}(g)` on pp-pair values, applying `g` componentwise.
pub fn induced_map_pp(
    pair: &PpPair,
    g: &ModuleMap,
    at_m: &FunctorValue,
    at_n: &FunctorValue,
) -> Mat {
    let p = g.matrix().prime();
    let n_vars = pair.free_vars();
    let (dm, dn) = (g.source().dim(), g.target().dim());
    let mut out = Mat::zeros(p, at_n.dim(), at_m.dim());
    for k in 0..at_m.dim() {
        let v = at_m.lift(k);
        let mut w = Vec::with_capacity(n_vars * dn);
        for j in 0..n_vars {
            w.extend(g.matrix().apply(&v[j * dm..(j + 1) * dm]));
        }
        let projected = at_n
            .project(&w)
            .expect("solutions are preserved by homomorphisms");
        for (r, &c) in projected.iter().enumerate() {
            out.set_raw(r, k, c);
        }
    }
    out
}

/// The map `𝔸_{φ/ψ}(g): 𝔸(N) -> 𝔸(M)` for `g: M -> N`, acting by
/// componentwise precomposition (transpose in dual coordinates).
pub fn induced_map_annihilator(
    pair: &PpPair,
    g: &ModuleMap,
    at_n: &FunctorValue,
    at_m: &FunctorValue,
) -> Mat {
    let p = g.matrix().prime();
    let n_vars = pair.free_vars();
    let gt = g.matrix().transpose();
    let (dm, dn) = (g.source().dim(), g.target().dim());
    let mut out = Mat::zeros(p, at_m.dim(), at_n.dim());
    for k in 0..at_n.dim() {
        let v = at_n.lift(k);
        let mut w = Vec::with_capacity(n_vars * dm);
        for j in 0..n_vars {
            w.extend(gt.apply(&v[j * dn..(j + 1) * dn]));
        }
        let projected = at_m
            .project(&w)
            .expect("annihilators pull back along maps");
        for (r, &c) in projected.iter().enumerate() {
            out.set_raw(r, k, c);
        }
    }
    out
}

/// A covariant presentation of `F_{φ/ψ}` with the distinguished tuple of the
/// source `A = C_φ` retained for the evaluation isomorphism.
pub struct PairPresentation {
    pub functor: FpFunctor,
    /// The distinguished tuple inside `A = C_φ`.
    pub tuple: Vec<Vec<u32>>,
}

/// Builds the presentation `f: C_φ -> C_ψ ⊕ coker(π_φ)`, where the first
/// component carries the distinguished tuple of `φ` to that of `ψ` and the
/// second kills the submodule the tuple generates.
pub fn pair_to_presentation(pair: &PpPair) -> Result<PairPresentation> {
    let fr_phi = pair.phi().free_realization();
    let fr_psi = pair.psi().free_realization();
    let a = &fr_phi.module;
    let c_psi = &fr_psi.module;
    let p = a.prime();

    // First component: a map A -> C_ψ sending tuple to tuple. It exists
    // because the tuple of ψ satisfies φ; solve for it in the hom space.
    let homs = hom_space(a, c_psi)?;
    let d_psi = c_psi.dim();
    let mut sys = Mat::zeros(p, pair.free_vars() * d_psi, homs.len());
    for (t, h) in homs.iter().enumerate() {
        for (j, tup) in fr_phi.tuple.iter().enumerate() {
            let img = h.apply(tup);
            for (r, &c) in img.iter().enumerate() {
                sys.set_raw(j * d_psi + r, t, c);
            }
        }
    }
    let rhs = Mat::col_vec(p, &fr_psi.flat_tuple());
    let coeffs = sys
        .solve(&rhs)
        .expect("the psi tuple satisfies phi, so a carrying map exists");
    let mut f1 = Mat::zeros(p, d_psi, a.dim());
    for (t, h) in homs.iter().enumerate() {
        let c = coeffs.raw(t, 0);
        if c != 0 {
            f1 = f1.add(&h.matrix().scale(c));
        }
    }

    // Second component: the projection onto coker(π_φ).
    let gen_span = submodule_generated(a, &fr_phi.tuple);
    let (_, incl) = submodule(a, &gen_span);
    let (q_mod, q_proj) = cokernel_module(&incl);

    let b = Module::direct_sum(c_psi, &q_mod)?;
    let matrix = f1.vstack(q_proj.matrix());
    let f = ModuleMap::new(Arc::clone(a), b, matrix)?;
    Ok(PairPresentation {
        functor: FpFunctor::new(Variance::Covariant, f),
        tuple: fr_phi.tuple.clone(),
    })
}

/// The explicit isomorphism `coker((f,M)) -> φ(M)/ψ(M)`, `[h] ↦ [h(tuple)]`,
/// as a matrix from presentation-value coordinates to pp-value coordinates.
pub fn presentation_agreement_iso(
    pres: &PairPresentation,
    pres_eval: &PresEval,
    pp_value: &FunctorValue,
    m: &Arc<Module>,
) -> Mat {
    let p = m.prime();
    let d = m.dim();
    let n = pres.tuple.len();
    let a_dim = pres.functor.presentation().source().dim();
    let mut out = Mat::zeros(p, pp_value.dim(), pres_eval.value.dim());
    for k in 0..pres_eval.value.dim() {
        let coords = pres_eval.value.lift(k);
        let mut h = Mat::zeros(p, d, a_dim);
        for (i, &c) in coords.iter().enumerate() {
            if c != 0 {
                h = h.add(&pres_eval.carrier[i].matrix().scale(c));
            }
        }
        let mut w = Vec::with_capacity(n * d);
        for tup in &pres.tuple {
            w.extend(h.apply(tup));
        }
        let projected = pp_value
            .project(&w)
            .expect("evaluating at the tuple lands in φ(M)");
        for (r, &c) in projected.iter().enumerate() {
            out.set_raw(r, k, c);
        }
    }
    out
}

/// `F*(M) = (F M)*`: the K-dual value. Dimensions agree with the underlying
/// value; the induced action on maps is the transpose of `F(g)` and runs in
/// the opposite direction.
pub fn dual_functor_eval(f: &FpFunctor, m: &Arc<Module>) -> Result<FunctorValue> {
    assert_eq!(f.variance, Variance::Covariant);
    let val = eval_presentation(f, m)?;
    Ok(FunctorValue::full(m.prime(), val.dim()))
}

/// `F_*(M) = F(M*)`: evaluate at the dual module. The functor's argument
/// side must be opposite to the side of `m`.
pub fn predual_eval(f: &FpFunctor, m: &Arc<Module>) -> Result<FunctorValue> {
    if f.arg_side() != m.side().opposite() {
        return Err(Error::SideMismatch {
            expected: m.side().opposite().as_str(),
            got: f.arg_side().as_str(),
        });
    }
    eval_presentation(f, &m.dual())
}

/// `(dF)(N) = ker(N ⊗ f : N⊗A -> N⊗B)` for a covariant `F` on left modules
/// presented by `f: A -> B`, evaluated at a right module `N`.
pub fn d_functor_eval(f: &FpFunctor, n: &Arc<Module>) -> Result<FunctorValue> {
    assert_eq!(f.variance, Variance::Covariant);
    if f.arg_side() != Side::Left {
        return Err(Error::SideMismatch {
            expected: "left",
            got: f.arg_side().as_str(),
        });
    }
    if n.side() != Side::Right {
        return Err(Error::SideMismatch {
            expected: "right",
            got: n.side().as_str(),
        });
    }
    let pres = &f.presentation;
    let ts_a = tensor_over_r(n, pres.source())?;
    let ts_b = tensor_over_r(n, pres.target())?;
    let map = ts_a.induced_module_map(&ts_b, pres);
    Ok(FunctorValue::from_subspace(Subspace::from_span(
        &map.kernel(),
    )))
}

/// The contravariant presentation of `𝔸_{φ/ψ}`: dualize the covariant
/// presentation `f': A' -> B'` of `F_{Dψ/Dφ}` through the module duality,
/// giving `𝔸_{φ/ψ} ≅ coker( (−, B'*) -> (−, A'*) )`.
pub fn annihilator_presentation(pair: &PpPair) -> Result<FpFunctor> {
    let dual_pair = pair.dual()?;
    let pres = pair_to_presentation(&dual_pair)?;
    let f_star = pres.functor.presentation().dual();
    Ok(FpFunctor::new(Variance::Contravariant, f_star))
}
