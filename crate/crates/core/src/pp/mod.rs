//! pp formulas `∃ȳ (Ax̄ = Bȳ)`, their solution sets, implication, free
//! realizations, pp pairs, and the elementary dual `Dφ`.
//!
//! A formula is kept in matrix normal form only: `rows` equations over
//! `free` x-variables and `bound` y-variables, with algebra-element
//! coefficients. For a left-side formula the coefficients act from the left;
//! for a right-side formula from the right. The textual DSL is parsed by
//! [`PpFormula::parse`] and printed by [`PpFormula::unparse`].

mod parse;

use crate::algebra::Algebra;
use crate::error::Error;
use crate::linalg::{Mat, Subspace};
use crate::module::{
    cokernel_module, hom_space, submodule, submodule_generated, Module, Side,
};
use crate::Result;
use std::fmt;
use std::sync::Arc;

/// A pp formula in matrix normal form.
#[derive(Clone)]
pub struct PpFormula {
    algebra: Arc<Algebra>,
    side: Side,
    free: usize,
    bound: usize,
    rows: usize,
    /// `rows × free` coefficient grid, each entry an algebra element.
    a: Vec<Vec<Vec<u32>>>,
    /// `rows × bound` coefficient grid.
    b: Vec<Vec<Vec<u32>>>,
}

impl fmt::Debug for PpFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PpFormula[{}]({} free, {} bound, {} rows): {}",
            self.side,
            self.free,
            self.bound,
            self.rows,
            self.unparse()
        )
    }
}

impl PpFormula {
    pub fn from_matrices(
        algebra: Arc<Algebra>,
        side: Side,
        free: usize,
        bound: usize,
        a: Vec<Vec<Vec<u32>>>,
        b: Vec<Vec<Vec<u32>>>,
    ) -> Result<PpFormula> {
        let rows = a.len();
        if b.len() != rows {
            return Err(Error::BadStructConst(format!(
                "A has {rows} rows but B has {}",
                b.len()
            )));
        }
        let d = algebra.dim();
        for grid in [&a, &b] {
            for row in grid.iter() {
                for e in row {
                    if e.len() != d {
                        return Err(Error::BadElementLength { got: e.len(), want: d });
                    }
                }
            }
        }
        if a.iter().any(|r| r.len() != free) || b.iter().any(|r| r.len() != bound) {
            return Err(Error::BadStructConst("ragged coefficient grid".into()));
        }
        Ok(PpFormula {
            algebra,
            side,
            free,
            bound,
            rows,
            a,
            b,
        })
    }

    /// The canonical tautology on `n` free variables: an empty system.
    pub fn tautology(algebra: Arc<Algebra>, side: Side, n: usize) -> PpFormula {
        PpFormula {
            algebra,
            side,
            free: n,
            bound: 0,
            rows: 0,
            a: vec![],
            b: vec![],
        }
    }

    /// The canonical bottom formula `x̄ = 0`: `A` the identity, no bound
    /// variables.
    pub fn zero(algebra: Arc<Algebra>, side: Side, n: usize) -> PpFormula {
        let d = algebra.dim();
        let unit = algebra.unit().to_vec();
        let a = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { unit.clone() } else { vec![0; d] })
                    .collect()
            })
            .collect();
        PpFormula {
            algebra,
            side,
            free: n,
            bound: 0,
            rows: n,
            a,
            b: vec![],
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn free_vars(&self) -> usize {
        self.free
    }

    pub fn bound_vars(&self) -> usize {
        self.bound
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn coeff_a(&self, row: usize, var: usize) -> &[u32] {
        &self.a[row][var]
    }

    pub fn coeff_b(&self, row: usize, var: usize) -> &[u32] {
        &self.b[row][var]
    }

    /// Conjunction: stacks the systems, keeping the free variables shared
    /// and the bound variables disjoint.
    pub fn and(&self, other: &PpFormula) -> Result<PpFormula> {
        if self.free != other.free {
            return Err(Error::ArityMismatch(self.free, other.free));
        }
        self.check_compatible(other)?;
        let d = self.algebra.dim();
        let zero = vec![0u32; d];
        let bound = self.bound + other.bound;
        let mut a = self.a.clone();
        let mut b: Vec<Vec<Vec<u32>>> = self
            .b
            .iter()
            .map(|row| {
                let mut r = row.clone();
                r.extend(std::iter::repeat(zero.clone()).take(other.bound));
                r
            })
            .collect();
        for row in 0..other.rows {
            a.push(other.a[row].clone());
            let mut r: Vec<Vec<u32>> =
                std::iter::repeat(zero.clone()).take(self.bound).collect();
            r.extend(other.b[row].iter().cloned());
            b.push(r);
        }
        Ok(PpFormula {
            algebra: Arc::clone(&self.algebra),
            side: self.side,
            free: self.free,
            bound,
            rows: self.rows + other.rows,
            a,
            b,
        })
    }

    fn check_compatible(&self, other: &PpFormula) -> Result<()> {
        if *self.algebra != *other.algebra {
            return Err(Error::AlgebraMismatch);
        }
        if self.side != other.side {
            return Err(Error::SideMismatch {
                expected: self.side.as_str(),
                got: other.side.as_str(),
            });
        }
        Ok(())
    }

    fn check_module(&self, m: &Module) -> Result<()> {
        if *self.algebra != **m.algebra() {
            return Err(Error::AlgebraMismatch);
        }
        if self.side != m.side() {
            return Err(Error::SideMismatch {
                expected: self.side.as_str(),
                got: m.side().as_str(),
            });
        }
        Ok(())
    }

    /// The solution set `φ(M) ⊆ M^n` as a canonical subspace of
    /// `GF(p)^{n·dim M}` (variable-major coordinates).
    ///
    /// Computed as the projection onto the x̄-block of the kernel of the
    /// block matrix `[ρ(A) | -ρ(B)]`, where `ρ` expands each coefficient to
    /// the module's action matrix.
    pub fn solution_set(&self, m: &Arc<Module>) -> Result<Subspace> {
        self.check_module(m)?;
        let p = m.prime();
        let d = m.dim();
        let vars = self.free + self.bound;
        let mut sys = Mat::zeros(p, self.rows * d, vars * d);
        for r in 0..self.rows {
            for j in 0..self.free {
                sys.paste(r * d, j * d, &m.act(&self.a[r][j]));
            }
            for k in 0..self.bound {
                sys.paste(r * d, (self.free + k) * d, &m.act(&self.b[r][k]).neg());
            }
        }
        let ker = sys.kernel();
        let proj = ker.submatrix(0, ker.rows(), 0, self.free * d);
        Ok(Subspace::from_span(&proj))
    }

    /// The free realization: `C_φ = R^{n+m} / ⟨rows of [A | -B]⟩` with the
    /// distinguished tuple the classes of the first `n` free generators.
    pub fn free_realization(&self) -> FreeRealization {
        let alg = &self.algebra;
        let d = alg.dim();
        let vars = self.free + self.bound;
        let free = Module::free(Arc::clone(alg), self.side, vars);
        let p = alg.prime();
        // Row elements of [A | -B] inside R^{n+m}.
        let mut rows: Vec<Vec<u32>> = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut v = vec![0u32; vars * d];
            for j in 0..self.free {
                for (t, &c) in self.a[r][j].iter().enumerate() {
                    v[j * d + t] = c;
                }
            }
            for k in 0..self.bound {
                for (t, &c) in self.b[r][k].iter().enumerate() {
                    v[(self.free + k) * d + t] = (p - c % p) % p;
                }
            }
            rows.push(v);
        }
        let span = submodule_generated(&free, &rows);
        let (_, incl) = submodule(&free, &span);
        let (module, proj) = cokernel_module(&incl);
        let tuple: Vec<Vec<u32>> = (0..self.free)
            .map(|j| proj.apply(&Module::free_embed(alg, vars, j, alg.unit())))
            .collect();
        FreeRealization { module, tuple }
    }

    /// Whether `φ(M) ⊆ ψ(M)` for every module `M`, decided finitely: the
    /// distinguished tuple of the free realization of `φ` must satisfy `ψ`.
    pub fn implies(&self, psi: &PpFormula) -> Result<bool> {
        if self.free != psi.free {
            return Err(Error::ArityMismatch(self.free, psi.free));
        }
        self.check_compatible(psi)?;
        let fr = self.free_realization();
        let sols = psi.solution_set(&fr.module)?;
        Ok(sols.contains_vec(&fr.flat_tuple()))
    }

    /// The elementary dual `Dφ` on the opposite side:
    /// `(Dφ)(x̄) = ∃ȳ (x̄ = ȳA ∧ ȳB = 0)` with `n` free and `rows` bound
    /// variables (and symmetrically for right-side input).
    pub fn dual(&self) -> PpFormula {
        let alg = &self.algebra;
        let d = alg.dim();
        let p = alg.prime();
        let zero = vec![0u32; d];
        let unit = alg.unit().to_vec();
        let new_rows = self.free + self.bound;
        let mut a: Vec<Vec<Vec<u32>>> = Vec::with_capacity(new_rows);
        let mut b: Vec<Vec<Vec<u32>>> = Vec::with_capacity(new_rows);
        // Block 1: x_j = Σ_i y_i · A[i][j].
        for j in 0..self.free {
            let mut arow: Vec<Vec<u32>> = vec![zero.clone(); self.free];
            arow[j] = unit.clone();
            a.push(arow);
            b.push((0..self.rows).map(|i| self.a[i][j].clone()).collect());
        }
        // Block 2: 0 = Σ_i y_i · B[i][k].
        for k in 0..self.bound {
            a.push(vec![zero.clone(); self.free]);
            b.push(
                (0..self.rows)
                    .map(|i| self.b[i][k].iter().map(|&c| (p - c % p) % p).collect())
                    .collect(),
            );
        }
        PpFormula {
            algebra: Arc::clone(alg),
            side: self.side.opposite(),
            free: self.free,
            bound: self.rows,
            rows: new_rows,
            a,
            b,
        }
    }
}

/// A finitely presented module `C_φ` with a distinguished tuple whose image
/// under `Hom(C_φ, M) -> M^n` is exactly `φ(M)`.
pub struct FreeRealization {
    pub module: Arc<Module>,
    /// `n` element vectors in `C_φ`.
    pub tuple: Vec<Vec<u32>>,
}

impl FreeRealization {
    /// The tuple flattened into `C^n` coordinates (variable-major).
    pub fn flat_tuple(&self) -> Vec<u32> {
        let d = self.module.dim();
        let mut out = vec![0u32; self.tuple.len() * d];
        for (j, t) in self.tuple.iter().enumerate() {
            out[j * d..(j + 1) * d].copy_from_slice(t);
        }
        out
    }

    /// The image of the evaluation map `Hom(C, M) -> M^n`, `h ↦ h(tuple)`,
    /// as a canonical subspace of `M^n`. For a genuine free realization this
    /// equals `φ(M)`.
    pub fn evaluation_image(&self, m: &Arc<Module>) -> Result<Subspace> {
        let homs = hom_space(&self.module, m)?;
        let n = self.tuple.len();
        let d = m.dim();
        let p = m.prime();
        let mut rows = Mat::zeros(p, homs.len(), n * d);
        for (i, h) in homs.iter().enumerate() {
            for (j, t) in self.tuple.iter().enumerate() {
                let v = h.apply(t);
                for (k, &x) in v.iter().enumerate() {
                    rows.set_raw(i, j * d + k, x);
                }
            }
        }
        Ok(Subspace::from_span(&rows))
    }
}

/// A certified pp pair `φ/ψ` with `ψ ≤ φ`.
#[derive(Clone)]
pub struct PpPair {
    phi: PpFormula,
    psi: PpFormula,
}

impl fmt::Debug for PpPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PpPair({} / {})", self.phi.unparse(), self.psi.unparse())
    }
}

impl PpPair {
    /// Certifies `ψ ≤ φ` by the free-realization criterion and builds the
    /// pair; reports the witnessing tuple on failure.
    pub fn new(phi: PpFormula, psi: PpFormula) -> Result<PpPair> {
        if phi.free != psi.free {
            return Err(Error::ArityMismatch(phi.free, psi.free));
        }
        phi.check_compatible(&psi)?;
        if !psi.implies(&phi)? {
            let fr = psi.free_realization();
            return Err(Error::NotAPair {
                witness: format!("{:?}", fr.tuple),
            });
        }
        Ok(PpPair { phi, psi })
    }

    pub fn phi(&self) -> &PpFormula {
        &self.phi
    }

    pub fn psi(&self) -> &PpFormula {
        &self.psi
    }

    pub fn free_vars(&self) -> usize {
        self.phi.free
    }

    pub fn side(&self) -> Side {
        self.phi.side
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        self.phi.algebra()
    }

    /// The dual pair `Dψ/Dφ` on the opposite side.
    pub fn dual(&self) -> Result<PpPair> {
        PpPair::new(self.psi.dual(), self.phi.dual())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::examples;

    fn dual_numbers() -> Arc<Algebra> {
        examples::dual_numbers(2)
    }

    fn div_by_eps(alg: &Arc<Algebra>) -> PpFormula {
        PpFormula::parse("E y1. x1 = eps*y1", Arc::clone(alg), Side::Left).unwrap()
    }

    #[test]
    fn solution_set_tautology_and_zero() {
        let alg = dual_numbers();
        let r = Module::regular(Arc::clone(&alg), Side::Left);
        let taut = PpFormula::tautology(Arc::clone(&alg), Side::Left, 1);
        assert_eq!(taut.solution_set(&r).unwrap().dim(), r.dim());
        let zero = PpFormula::zero(Arc::clone(&alg), Side::Left, 1);
        assert_eq!(zero.solution_set(&r).unwrap().dim(), 0);
    }

    #[test]
    fn solution_set_divisibility_matches_enumeration() {
        // Oracle: enumerate all 4 elements of R = K[eps]/(eps^2) and all
        // witnesses.
        let alg = dual_numbers();
        let r = Module::regular(Arc::clone(&alg), Side::Left);
        let phi = div_by_eps(&alg);
        let sols = phi.solution_set(&r).unwrap();

        let eps_action = r.act(&[0, 1]);
        let mut solutions = Vec::new();
        for x in 0..4u32 {
            let xv = vec![x & 1, (x >> 1) & 1];
            let mut witnessed = false;
            for y in 0..4u32 {
                let yv = vec![y & 1, (y >> 1) & 1];
                if eps_action.apply(&yv) == xv {
                    witnessed = true;
                }
            }
            if witnessed {
                solutions.push(xv);
            }
        }
        // eps·R = span{eps}: exactly 2 solutions, a 1-dim subspace.
        assert_eq!(solutions.len(), 2);
        assert_eq!(sols.dim(), 1);
        for s in solutions {
            assert!(sols.contains_vec(&s));
        }
    }

    #[test]
    fn implies_examples() {
        let alg = dual_numbers();
        let phi = div_by_eps(&alg);
        let taut = PpFormula::tautology(Arc::clone(&alg), Side::Left, 1);
        let zero = PpFormula::zero(Arc::clone(&alg), Side::Left, 1);
        assert!(phi.implies(&phi).unwrap());
        assert!(zero.implies(&taut).unwrap());
        // Divisibility by eps is strictly smaller than the whole module.
        assert!(!taut.implies(&phi).unwrap());
        assert!(phi.implies(&taut).unwrap());
        assert!(zero.implies(&phi).unwrap());
    }

    #[test]
    fn free_realization_examples() {
        let alg = dual_numbers();
        // tautology on one variable realizes in R with tuple (1).
        let taut = PpFormula::tautology(Arc::clone(&alg), Side::Left, 1);
        let fr = taut.free_realization();
        assert_eq!(fr.module.dim(), 2);
        assert_eq!(fr.tuple.len(), 1);

        // x1 = 0 realizes in the zero module.
        let zero = PpFormula::zero(Arc::clone(&alg), Side::Left, 1);
        let fr0 = zero.free_realization();
        assert_eq!(fr0.module.dim(), 0);

        // Divisibility: C = R^2 / R·(1, -eps), dim 2.
        let phi = div_by_eps(&alg);
        let frd = phi.free_realization();
        assert_eq!(frd.module.dim(), 2);
    }

    #[test]
    fn free_realization_evaluation_images() {
        let alg = dual_numbers();
        let phi = div_by_eps(&alg);
        let fr = phi.free_realization();
        for m in [
            Module::regular(Arc::clone(&alg), Side::Left),
            Module::free(Arc::clone(&alg), Side::Left, 2),
            Module::zero(Arc::clone(&alg), Side::Left),
        ] {
            let img = fr.evaluation_image(&m).unwrap();
            let sols = phi.solution_set(&m).unwrap();
            assert_eq!(img, sols);
        }
    }

    #[test]
    fn dual_formula_examples() {
        let alg = dual_numbers();
        let r_left = Module::regular(Arc::clone(&alg), Side::Left);
        let r_right = Module::regular(Arc::clone(&alg), Side::Right);

        // D(x1 = 0) is a tautology on the right side.
        let zero = PpFormula::zero(Arc::clone(&alg), Side::Left, 1);
        let dz = zero.dual();
        assert_eq!(dz.side(), Side::Right);
        assert_eq!(dz.solution_set(&r_right).unwrap().dim(), r_right.dim());

        // D(tautology) is x1 = 0.
        let taut = PpFormula::tautology(Arc::clone(&alg), Side::Left, 1);
        let dt = taut.dual();
        assert_eq!(dt.solution_set(&r_right).unwrap().dim(), 0);

        // D(divisibility by eps) is the right annihilation condition
        // x1·eps = 0; on the regular module that is span{eps}.
        let phi = div_by_eps(&alg);
        let dphi = phi.dual();
        let sols = dphi.solution_set(&r_right).unwrap();
        assert_eq!(sols.dim(), 1);
        assert!(sols.contains_vec(&[0, 1]));

        // D is extensionally involutive on these formulas.
        for f in [&zero, &taut, &phi] {
            let dd = f.dual().dual();
            assert_eq!(
                dd.solution_set(&r_left).unwrap(),
                f.solution_set(&r_left).unwrap()
            );
        }
    }

    #[test]
    fn pair_certification() {
        let alg = dual_numbers();
        let taut = PpFormula::tautology(Arc::clone(&alg), Side::Left, 1);
        let zero = PpFormula::zero(Arc::clone(&alg), Side::Left, 1);
        let phi = div_by_eps(&alg);

        assert!(PpPair::new(taut.clone(), zero.clone()).is_ok());
        assert!(matches!(
            PpPair::new(zero.clone(), taut.clone()),
            Err(Error::NotAPair { .. })
        ));
        assert!(PpPair::new(phi, zero).is_ok());
    }

    #[test]
    fn solutions_preserved_by_homomorphisms() {
        // Monotonicity: f(φ(M)) ⊆ φ(N) for module maps f.
        let alg = dual_numbers();
        let r = Module::regular(Arc::clone(&alg), Side::Left);
        let phi = div_by_eps(&alg);
        let maps = hom_space(&r, &r).unwrap();
        let sols = phi.solution_set(&r).unwrap();
        let target_sols = phi.solution_set(&r).unwrap();
        for f in &maps {
            for i in 0..sols.dim() {
                let v = sols.basis().row(i);
                // Apply f componentwise to the tuple.
                let d = r.dim();
                let mut w = Vec::with_capacity(v.len());
                for j in 0..phi.free_vars() {
                    w.extend(f.apply(&v[j * d..(j + 1) * d]));
                }
                assert!(target_sols.contains_vec(&w));
            }
        }
    }

    #[test]
    fn right_side_formulas_work() {
        let alg = dual_numbers();
        let r = Module::regular(Arc::clone(&alg), Side::Right);
        let phi =
            PpFormula::parse("E y1. x1 = eps*y1", Arc::clone(&alg), Side::Right).unwrap();
        assert_eq!(phi.solution_set(&r).unwrap().dim(), 1);
        let dphi = phi.dual();
        assert_eq!(dphi.side(), Side::Left);
        let r_left = Module::regular(Arc::clone(&alg), Side::Left);
        assert_eq!(dphi.solution_set(&r_left).unwrap().dim(), 1);
    }
}
