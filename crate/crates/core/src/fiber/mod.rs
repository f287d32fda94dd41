//! Integration along the fiber for the CP²-bundle (oriented case) and the
//! RP²-bundle (unoriented case).
//!
//! The cohomology of the total space is free over the base with basis
//! `{1, x, x²}`; `π_!` reads off the coefficient of `x²`.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::arithmetic::{binom_parity, is_mersenne_form, minimal_bed_solution, minimal_odd_girard_pair};
use crate::poly::{F2Poly, Monomial, PolyError, RingMap, RingPresentation, Variable};
use crate::steenrod::Sq1Action;
use crate::symmfunc::{newton_sums, s_pp, stiefel_whitney, stiefel_whitney_index, to_stiefel_whitney, SymmError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FiberError {
    #[error("degree {0} carries no primitive class (n < 4 or n = 2^i - 1)")]
    NoPrimitive(usize),
    #[error("index must be positive")]
    ZeroIndex,
    #[error("pi_!(v~*(s_{{{n},{n}}})) reduces to {reduced}, expected {expected}; full value {full}", n = 2 * t)]
    S2t2tMismatch { t: usize, expected: String, reduced: String, full: String },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Symm(#[from] SymmError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BundleCase {
    Oriented,
    Unoriented,
}

/// Base and total rings, `π^*`, and the data of the rewrite
/// `eliminated = u + basis²`, `basis³ = v + basis·u` with `u = π^*(u_base)`
/// and `v = π^*(v_base)`.
#[derive(Clone, Debug)]
pub struct BundleConfig {
    case: BundleCase,
    base_ring: RingPresentation,
    total_ring: RingPresentation,
    pi_star: RingMap<crate::poly::F2>,
    basis: Variable,
    eliminated: Variable,
    passthrough: Vec<(Variable, Variable)>,
    u: Variable,
    v: Variable,
}

fn v(name: &str, d: u32) -> Variable {
    Variable::named(name, d)
}

impl BundleConfig {
    /// `Z/2[x1, x2, x4]` over `Z/2[y1, y4, y6]` with
    /// `y1 ↦ x1, y4 ↦ x2² + x4, y6 ↦ x2 x4`.
    pub fn oriented() -> Self {
        let (x1, x2, x4) = (v("x1", 1), v("x2", 2), v("x4", 4));
        let (y1, y4, y6) = (v("y1", 1), v("y4", 4), v("y6", 6));
        let base_ring = RingPresentation::new(vec![y1, y4, y6], None).expect("distinct");
        let total_ring = RingPresentation::new(vec![x1, x2, x4], None).expect("distinct");
        let x = F2Poly::var;
        let pi_star = RingMap::new(
            base_ring.clone(),
            total_ring.clone(),
            [(y1, x(x1)), (y4, x(x2).pow(2) + x(x4)), (y6, x(x2) * x(x4))],
        )
        .expect("homogeneous images");
        BundleConfig {
            case: BundleCase::Oriented,
            base_ring,
            total_ring,
            pi_star,
            basis: x2,
            eliminated: x4,
            passthrough: vec![(x1, y1)],
            u: y4,
            v: y6,
        }
    }

    /// `Z/2[x1, x2]` over `Z/2[y2, y3]` with `y2 ↦ x1² + x2, y3 ↦ x1 x2`.
    pub fn unoriented() -> Self {
        let (x1, x2) = (v("x1", 1), v("x2", 2));
        let (y2, y3) = (crate::arithmetic::y2(), crate::arithmetic::y3());
        let base_ring = RingPresentation::new(vec![y2, y3], None).expect("distinct");
        let total_ring = RingPresentation::new(vec![x1, x2], None).expect("distinct");
        let x = F2Poly::var;
        let pi_star =
            RingMap::new(base_ring.clone(), total_ring.clone(), [(y2, x(x1).pow(2) + x(x2)), (y3, x(x1) * x(x2))])
                .expect("homogeneous images");
        BundleConfig {
            case: BundleCase::Unoriented,
            base_ring,
            total_ring,
            pi_star,
            basis: x1,
            eliminated: x2,
            passthrough: Vec::new(),
            u: y2,
            v: y3,
        }
    }

    pub fn case(&self) -> BundleCase {
        self.case
    }

    pub fn base_ring(&self) -> &RingPresentation {
        &self.base_ring
    }

    pub fn total_ring(&self) -> &RingPresentation {
        &self.total_ring
    }

    pub fn pi_star(&self) -> &RingMap<crate::poly::F2> {
        &self.pi_star
    }

    pub fn basis_variable(&self) -> Variable {
        self.basis
    }

    /// Degree lost under `π_!`, the dimension of the fiber.
    pub fn fiber_dimension(&self) -> u32 {
        2 * self.basis.degree()
    }

    /// Base generator by name.
    pub fn y(&self, name: &str) -> Variable {
        self.base_ring.variable(name).unwrap_or_else(|| panic!("no base generator {name}"))
    }

    /// Total-space generator by name.
    pub fn x(&self, name: &str) -> Variable {
        self.total_ring.variable(name).unwrap_or_else(|| panic!("no total generator {name}"))
    }
}

/// `a·1 + b·x + c·x²` with `a, b, c` in the base ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleDecomposition {
    pub a: F2Poly,
    pub b: F2Poly,
    pub c: F2Poly,
}

impl ModuleDecomposition {
    /// `π^*(a) + π^*(b) x + π^*(c) x²`.
    pub fn recompose(&self, cfg: &BundleConfig) -> Result<F2Poly, FiberError> {
        let x = F2Poly::var(cfg.basis);
        let pull = |p: &F2Poly| cfg.pi_star.apply(p);
        Ok(pull(&self.a)? + pull(&self.b)? * &x + pull(&self.c)? * x.pow(2))
    }
}

impl fmt::Display for ModuleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// `x^e = P_e + Q_e x + R_e x²` over `Z/2[u, v]`.
struct PowerTable {
    rows: Vec<[F2Poly; 3]>,
}

impl PowerTable {
    fn new(cfg: &BundleConfig, max: usize) -> Self {
        let (u, v) = (F2Poly::var(cfg.u), F2Poly::var(cfg.v));
        let mut rows = vec![
            [F2Poly::one(), F2Poly::zero(), F2Poly::zero()],
            [F2Poly::zero(), F2Poly::one(), F2Poly::zero()],
            [F2Poly::zero(), F2Poly::zero(), F2Poly::one()],
        ];
        // x · (P + Q x + R x²) = R v + (P + R u) x + Q x², using x³ = v + x u
        while rows.len() <= max {
            let [p, q, r] = rows.last().expect("seeded");
            let next = [r * &v, p + &(r * &u), q.clone()];
            rows.push(next);
        }
        PowerTable { rows }
    }
}

pub fn decompose(cfg: &BundleConfig, p: &F2Poly) -> Result<ModuleDecomposition, FiberError> {
    cfg.total_ring.check(p)?;
    let max =
        p.monomials().map(|m| (m.exponent(cfg.basis) + 2 * m.exponent(cfg.eliminated)) as usize).max().unwrap_or(0);
    let table = PowerTable::new(cfg, max);
    let mut parts = [F2Poly::zero(), F2Poly::zero(), F2Poly::zero()];
    let mut u_powers: HashMap<u32, Monomial> = HashMap::new();
    for m in p.monomials() {
        let beta = m.exponent(cfg.basis);
        let gamma = m.exponent(cfg.eliminated);
        let rest = Monomial::from_pairs(cfg.passthrough.iter().map(|&(x, y)| (y, m.exponent(x))));
        // eliminated^γ = (u + x²)^γ
        for k in (0..=gamma).filter(|&k| binom_parity(gamma as u64, k as u64) == 1) {
            let scale = rest.mul(u_powers.entry(gamma - k).or_insert_with(|| Monomial::power(cfg.u, gamma - k)));
            let row = &table.rows[(beta + 2 * k) as usize];
            for (part, coeff) in parts.iter_mut().zip(row) {
                if !coeff.is_zero() {
                    *part += &coeff.mul_monomial(&scale);
                }
            }
        }
    }
    let [a, b, c] = parts;
    Ok(ModuleDecomposition { a, b, c })
}

/// The coefficient of `x²`.
pub fn pi_shriek(cfg: &BundleConfig, p: &F2Poly) -> Result<F2Poly, FiberError> {
    Ok(decompose(cfg, p)?.c)
}

/// `π_!(x1^a x2^b x4^c)` modulo `y6` in the oriented case:
/// `y1^a y4^{d-1}` if `b = 2d > 0, c = 0`; `y1^a y4^{c-1}` if `b = 0, c > 0`;
/// zero otherwise.
pub fn pi_shriek_closed_form(a: u32, b: u32, c: u32) -> F2Poly {
    let (y1, y4) = (v("y1", 1), v("y4", 4));
    let exp4 = match (b, c) {
        (b, 0) if b > 0 && b % 2 == 0 => b / 2 - 1,
        (0, c) if c > 0 => c - 1,
        _ => return F2Poly::zero(),
    };
    F2Poly::monomial(Monomial::from_pairs([(y1, a), (y4, exp4)]))
}

/// The tangent bundle along the fiber, on Stiefel-Whitney classes.
/// Oriented: `w2 ↦ x1² + x2, w3 ↦ x1 x2, w4 ↦ x4`, all others zero.
/// Unoriented: `w1 ↦ x1, w2 ↦ x2`, all others zero.
pub fn vtilde_star(cfg: &BundleConfig, p: &F2Poly) -> Result<F2Poly, FiberError> {
    let mut classes = Vec::new();
    for var in p.variables() {
        let k = stiefel_whitney_index(var).ok_or_else(|| SymmError::NotStiefelWhitney(var.name().to_owned()))?;
        classes.push((var, k));
    }
    let x = |n: &str| F2Poly::var(cfg.x(n));
    let image = |k: usize| match (cfg.case, k) {
        (BundleCase::Oriented, 2) => x("x1").pow(2) + x("x2"),
        (BundleCase::Oriented, 3) => x("x1") * x("x2"),
        (BundleCase::Oriented, 4) => x("x4"),
        (BundleCase::Unoriented, 1) => x("x1"),
        (BundleCase::Unoriented, 2) => x("x2"),
        _ => F2Poly::zero(),
    };
    let source = RingPresentation::new(classes.iter().map(|c| c.0).collect(), None)?;
    let map = RingMap::new(source, cfg.total_ring.clone(), classes.iter().map(|&(var, k)| (var, image(k))))?;
    Ok(map.apply(p)?)
}

/// A nonzero primitive class of degree `n` in `Z/2[w2, w3, w4]`
/// (`w1 = 0`, `w5 = w6 = … = 0`): `w2^{n/2}` when `n` is a power of two,
/// otherwise `s_n(w)`.
pub fn primitive_of_degree(n: usize) -> Result<F2Poly, FiberError> {
    if n < 4 || is_mersenne_form(n as u64) {
        return Err(FiberError::NoPrimitive(n));
    }
    if n.is_power_of_two() {
        return Ok(F2Poly::var(stiefel_whitney(2)).pow(n as u32 / 2));
    }
    let e = |k: usize| match k {
        2..=4 => F2Poly::var(stiefel_whitney(k)),
        _ => F2Poly::zero(),
    };
    Ok(newton_sums(n, e).pop().expect("n >= 4"))
}

/// `π_!(ṽ^*(primitive_of_degree(n)))` modulo `y6`.
pub fn transfer_sn(n: usize) -> Result<F2Poly, FiberError> {
    let cfg = BundleConfig::oriented();
    let prim = primitive_of_degree(n)?;
    Ok(pi_shriek(&cfg, &vtilde_star(&cfg, &prim)?)?.set_zero(cfg.y("y6")))
}

/// The smallest exponent `k` of `var` in `p` with the part of `p` of exactly
/// that exponent: the leading part for the filtration by powers of `var`.
pub fn lowest_filtration_part(p: &F2Poly, var: Variable) -> Option<(u32, F2Poly)> {
    let k = p.monomials().map(|m| m.exponent(var)).min()?;
    Some((k, p.filter(|m| m.exponent(var) == k)))
}

/// The expected leading part of [`transfer_sn`] in the `y1`-filtration:
///
/// * `n = 2^{i+1}`: the whole value is `y4^{2^{i-1}-1}`;
/// * `n` odd: `y1^b y4^{(a+b)/2 - 1}` for the odd solution `(a, b)` of
///   `2a + 3b = n` with odd Girard coefficient and smallest `b`;
/// * `n = 2n'`, `n'` odd: `y1^{2b} y4^{a+b-1}` for the pair `(a, b)` of
///   `2a + 3b = n'` with odd coefficient and smallest `b`.
///
/// `None` for the remaining degrees.
pub fn predicted_leading_term(n: usize) -> Option<F2Poly> {
    let (y1, y4) = (v("y1", 1), v("y4", 4));
    let mono = |e1: u64, e4: u64| Some(F2Poly::monomial(Monomial::from_pairs([(y1, e1 as u32), (y4, e4 as u32)])));
    if n >= 4 && n.is_power_of_two() {
        return mono(0, n as u64 / 4 - 1);
    }
    if n % 2 == 1 {
        let (a, b) = minimal_bed_solution(n as u64)?;
        return mono(b, (a + b) / 2 - 1);
    }
    if n % 4 == 2 {
        let (a, b) = minimal_odd_girard_pair(n as u64 / 2)?;
        return mono(2 * b, a + b - 1);
    }
    None
}

/// `π_!(ṽ^*(s_{2t,2t}))` with `y1 = y6 = 0`, which must be `y4^{t-1}`.
/// `s_{2t,2t}` comes from the exact integer formula, reduced mod 2.
pub fn transfer_s2t2t(t: usize) -> Result<F2Poly, FiberError> {
    if t == 0 {
        return Err(FiberError::ZeroIndex);
    }
    let cfg = BundleConfig::oriented();
    let spp = to_stiefel_whitney(&s_pp(2 * t)?);
    // ṽ^* kills w1 and w_k for k >= 5; dropping them first keeps the
    // substitution small.
    let relevant = spp.filter(|m| m.variables().all(|var| matches!(var.degree(), 2..=4)));
    let full = pi_shriek(&cfg, &vtilde_star(&cfg, &relevant)?)?;
    let reduced = full.reduce_mod_variables(&[cfg.y("y1"), cfg.y("y6")]);
    let expected = F2Poly::var(cfg.y("y4")).pow(t as u32 - 1);
    if reduced != expected {
        return Err(FiberError::S2t2tMismatch {
            t,
            expected: expected.to_string(),
            reduced: reduced.to_string(),
            full: full.to_string(),
        });
    }
    Ok(reduced)
}

/// `π_!(ṽ^*(w2^a w4^c))` modulo `(y1, y6)` next to the three-branch value
/// `y4^{a/2-1}` (`a >= 2` even, `c = 0`), `y4^{c-1}` (`a = 0`, `c > 0`), `0`.
pub fn gw24_check(a: u32, c: u32) -> Result<(F2Poly, F2Poly), FiberError> {
    let cfg = BundleConfig::oriented();
    let w = |k| F2Poly::var(stiefel_whitney(k));
    let p = w(2).pow(a) * w(4).pow(c);
    let actual = pi_shriek(&cfg, &vtilde_star(&cfg, &p)?)?.reduce_mod_variables(&[cfg.y("y1"), cfg.y("y6")]);
    let y4 = F2Poly::var(cfg.y("y4"));
    let expected = match (a, c) {
        (a, 0) if a >= 2 && a % 2 == 0 => y4.pow(a / 2 - 1),
        (0, c) if c > 0 => y4.pow(c - 1),
        _ => F2Poly::zero(),
    };
    Ok((actual, expected))
}

/// `z_n = π_!(ṽ^*(s_n(w)))` for the RP²-bundle.
pub fn z_via_fiber(n: usize) -> Result<F2Poly, FiberError> {
    if n == 0 {
        return Err(FiberError::ZeroIndex);
    }
    let cfg = BundleConfig::unoriented();
    // ṽ^* factors through Z/2[w1, w2]
    let e = |k: usize| match k {
        1 | 2 => F2Poly::var(stiefel_whitney(k)),
        _ => F2Poly::zero(),
    };
    let sn = newton_sums(n, e).pop().expect("n >= 1");
    pi_shriek(&cfg, &vtilde_star(&cfg, &sn)?)
}

/// `Sq^1` on the oriented base `Z/2[y1, y4, y6]`:
/// `y1 ↦ y1², y4 ↦ 0, y6 ↦ y1 y6`.
pub fn base_sq1_action() -> Sq1Action {
    let cfg = BundleConfig::oriented();
    let (y1, y4, y6) = (cfg.y("y1"), cfg.y("y4"), cfg.y("y6"));
    let images = [(y1, F2Poly::var(y1).pow(2)), (y4, F2Poly::zero()), (y6, F2Poly::var(y1) * F2Poly::var(y6))];
    Sq1Action::new(cfg.base_ring.clone(), images).expect("a valid Sq1 action")
}

/// `Sq^1` on the unoriented base `Z/2[y2, y3] = H^*(BSO(3))` from the Wu
/// formula: `y2 ↦ y3, y3 ↦ 0`. Only used as a cross-check.
pub fn unoriented_base_sq1_action() -> Sq1Action {
    let cfg = BundleConfig::unoriented();
    let (y2, y3) = (cfg.y("y2"), cfg.y("y3"));
    Sq1Action::new(cfg.base_ring.clone(), [(y2, F2Poly::var(y3)), (y3, F2Poly::zero())]).expect("a valid Sq1 action")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arithmetic::{lemma_binom_solve, z_sequence};
    use crate::symmfunc::sn_mod2_bso;
    use proptest::prelude::*;

    fn ori() -> BundleConfig {
        BundleConfig::oriented()
    }

    fn x(name: &str) -> F2Poly {
        F2Poly::var(ori().x(name))
    }

    fn y(name: &str) -> F2Poly {
        F2Poly::var(ori().y(name))
    }

    #[test]
    fn decomposition_examples() {
        let cfg = ori();
        let d = |p: F2Poly| decompose(&cfg, &p).unwrap();
        assert_eq!(d(x("x2").pow(2)), ModuleDecomposition { a: F2Poly::zero(), b: F2Poly::zero(), c: F2Poly::one() });
        assert_eq!(d(x("x4")), ModuleDecomposition { a: y("y4"), b: F2Poly::zero(), c: F2Poly::one() });
        assert_eq!(d(x("x2").pow(3)), ModuleDecomposition { a: y("y6"), b: y("y4"), c: F2Poly::zero() });
        assert!(decompose(&cfg, &y("y4")).is_err());
    }

    #[test]
    fn pi_shriek_basics() {
        let cfg = ori();
        assert!(pi_shriek(&cfg, &F2Poly::one()).unwrap().is_zero());
        assert!(pi_shriek(&cfg, &x("x2")).unwrap().is_zero());
        assert!(pi_shriek(&cfg, &x("x1").pow(3)).unwrap().is_zero());
        // x2^5 integrates to y6 exactly, which is why the closed form holds only mod y6
        assert_eq!(pi_shriek(&cfg, &x("x2").pow(5)).unwrap(), y("y6"));
        assert_eq!(pi_shriek_closed_form(0, 2, 0), F2Poly::one());
        assert_eq!(pi_shriek_closed_form(0, 0, 1), F2Poly::one());
        assert!(pi_shriek_closed_form(1, 3, 0).is_zero());
    }

    #[test]
    fn closed_form_small_degrees() {
        let cfg = ori();
        for a in 0..=12 {
            for b in 0..=6 {
                for c in 0..=3 {
                    let m = x("x1").pow(a) * x("x2").pow(b) * x("x4").pow(c);
                    let got = pi_shriek(&cfg, &m).unwrap().set_zero(cfg.y("y6"));
                    assert_eq!(got, pi_shriek_closed_form(a, b, c), "a={a} b={b} c={c}");
                }
            }
        }
    }

    #[test]
    fn vtilde_examples() {
        let cfg = ori();
        let w = |k| F2Poly::var(stiefel_whitney(k));
        assert_eq!(vtilde_star(&cfg, &w(3)).unwrap(), x("x1") * x("x2"));
        assert_eq!(vtilde_star(&cfg, &(w(2) * w(3))).unwrap(), x("x1").pow(3) * x("x2") + x("x1") * x("x2").pow(2));
        assert!(vtilde_star(&cfg, &w(5)).unwrap().is_zero());
        for i in 0..4u32 {
            let got = vtilde_star(&cfg, &w(2).pow(1 << i)).unwrap();
            assert_eq!(got, x("x2").pow(1 << i) + x("x1").pow(1 << (i + 1)));
        }
        assert!(vtilde_star(&cfg, &y("y4")).is_err());
        let un = BundleConfig::unoriented();
        assert_eq!(vtilde_star(&un, &(w(1) * w(3))).unwrap(), F2Poly::zero());
    }

    #[test]
    fn primitives() {
        let w = |k| F2Poly::var(stiefel_whitney(k));
        assert_eq!(primitive_of_degree(4).unwrap(), w(2).pow(2));
        assert_eq!(primitive_of_degree(5).unwrap(), w(2) * w(3));
        assert_eq!(primitive_of_degree(7), Err(FiberError::NoPrimitive(7)));
        assert_eq!(primitive_of_degree(3), Err(FiberError::NoPrimitive(3)));
        for n in [6, 9, 10, 12] {
            let reduced = sn_mod2_bso(n).unwrap().filter(|m| m.variables().all(|v| v.degree() <= 4));
            assert_eq!(primitive_of_degree(n).unwrap(), reduced);
        }
    }

    #[test]
    fn transfer_examples() {
        assert_eq!(transfer_sn(4).unwrap(), F2Poly::one());
        assert_eq!(transfer_sn(5).unwrap(), y("y1"));
        assert_eq!(transfer_sn(8).unwrap(), y("y4"));
    }

    #[test]
    fn leading_terms_odd() {
        for n in (5..=31).step_by(2).filter(|&n| !is_mersenne_form(n as u64)) {
            let t = transfer_sn(n).unwrap();
            let (_, lead) = lowest_filtration_part(&t, ori().y("y1")).unwrap();
            assert_eq!(Some(lead), predicted_leading_term(n), "n={n}");
        }
    }

    #[test]
    fn construction_and_minimum_agree_below_21() {
        for n in (5..21u64).step_by(2).filter(|&n| !is_mersenne_form(n)) {
            let s = lemma_binom_solve(n).unwrap();
            assert_eq!(minimal_bed_solution(n), Some((s.a, s.b)), "n={n}");
        }
    }

    #[test]
    fn spp_transfer_small() {
        assert_eq!(transfer_s2t2t(1).unwrap(), F2Poly::one());
        assert_eq!(transfer_s2t2t(2).unwrap(), y("y4"));
        assert_eq!(transfer_s2t2t(3).unwrap(), y("y4").pow(2));
    }

    #[test]
    fn w2_w4_transfer_branches() {
        for a in 0..=10 {
            for c in 0..=5 {
                if a + 2 * c <= 10 {
                    let (actual, expected) = gw24_check(a, c).unwrap();
                    assert_eq!(actual, expected, "a={a} c={c}");
                }
            }
        }
    }

    #[test]
    fn unoriented_examples() {
        assert_eq!(z_via_fiber(2).unwrap(), F2Poly::one());
        assert_eq!(z_via_fiber(4).unwrap(), F2Poly::var(crate::arithmetic::y2()));
        assert!(z_via_fiber(7).unwrap().is_zero());
        let z = z_sequence(20).unwrap();
        for n in 1..=20 {
            assert_eq!(&z_via_fiber(n).unwrap(), z.get(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn unoriented_decomposition() {
        let cfg = BundleConfig::unoriented();
        let x1 = F2Poly::var(cfg.x("x1"));
        let d = decompose(&cfg, &x1.pow(3)).unwrap();
        assert_eq!(d.a, F2Poly::var(cfg.y("y3")));
        assert_eq!(d.b, F2Poly::var(cfg.y("y2")));
        assert_eq!(cfg.fiber_dimension(), 2);
        assert_eq!(ori().fiber_dimension(), 4);
    }

    fn total_monomial(cfg: BundleConfig) -> impl Strategy<Value = (Vec<u32>, BundleConfig)> {
        let n = cfg.total_ring().variables().len();
        (proptest::collection::vec(0u32..8, n), Just(cfg))
    }

    fn build(cfg: &BundleConfig, exps: &[u32]) -> F2Poly {
        F2Poly::monomial(Monomial::from_pairs(cfg.total_ring().variables().iter().copied().zip(exps.iter().copied())))
    }

    fn base_poly(max_degree: u32) -> impl Strategy<Value = F2Poly> {
        proptest::collection::vec(proptest::collection::vec(0u32..4, 3), 0..4).prop_map(move |rows| {
            let cfg = ori();
            rows.into_iter()
                .map(|e| Monomial::from_pairs(cfg.base_ring().variables().iter().copied().zip(e)))
                .filter(|m| m.degree() <= max_degree)
                .map(F2Poly::monomial)
                .sum()
        })
    }

    fn total_poly(max_degree: u32) -> impl Strategy<Value = F2Poly> {
        proptest::collection::vec(proptest::collection::vec(0u32..6, 3), 0..4).prop_map(move |rows| {
            let cfg = ori();
            rows.into_iter()
                .map(|e| Monomial::from_pairs(cfg.total_ring().variables().iter().copied().zip(e)))
                .filter(|m| m.degree() <= max_degree)
                .map(F2Poly::monomial)
                .sum()
        })
    }

    proptest! {
        #[test]
        fn recomposition(
            (exps, cfg) in prop_oneof![total_monomial(BundleConfig::oriented()), total_monomial(BundleConfig::unoriented())]
        ) {
            let p = build(&cfg, &exps);
            let d = decompose(&cfg, &p).unwrap();
            let back = d.recompose(&cfg).unwrap();
            prop_assert_eq!(&back, &p);
            prop_assert_eq!(decompose(&cfg, &back).unwrap(), d);
        }

        #[test]
        fn module_map(q in base_poly(10), p in total_poly(14)) {
            let cfg = ori();
            let lhs = pi_shriek(&cfg, &(cfg.pi_star().apply(&q).unwrap() * &p)).unwrap();
            prop_assert_eq!(lhs, q * pi_shriek(&cfg, &p).unwrap());
        }
    }

    #[test]
    fn unoriented_base_homology() {
        let h = crate::steenrod::sq1_homology(&unoriented_base_sq1_action(), 16).unwrap();
        let expected: Vec<usize> = (0..=16).map(|d| usize::from(d % 4 == 0)).collect();
        assert_eq!(h.dims(), expected);
        let y2 = F2Poly::var(BundleConfig::unoriented().y("y2"));
        assert!(crate::steenrod::is_homology_basis(&unoriented_base_sq1_action(), 8, &[y2.pow(4)]).unwrap());
    }
}
