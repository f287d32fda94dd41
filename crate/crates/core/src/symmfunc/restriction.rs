//! Restrictions to `Z/2[α, β, γ, δ]`, the cohomology of a rank-four
//! elementary abelian 2-group.

use crate::poly::{F2Poly, RingMap, RingPresentation, Variable};
use crate::report::Verification;
use crate::steenrod::Sq1Action;

/// `Z/2[α, β, γ, δ]` with `A = α² + αδ`, `B = β² + βδ`, `C = γ² + γδ`.
#[derive(Clone, Debug)]
pub struct BzRing {
    pub alpha: Variable,
    pub beta: Variable,
    pub gamma: Variable,
    pub delta: Variable,
    ring: RingPresentation,
}

impl Default for BzRing {
    fn default() -> Self {
        BzRing::new()
    }
}

impl BzRing {
    pub fn new() -> Self {
        let [alpha, beta, gamma, delta] = ["alpha", "beta", "gamma", "delta"].map(|n| Variable::named(n, 1));
        let ring = RingPresentation::new(vec![alpha, beta, gamma, delta], None).expect("distinct names");
        BzRing { alpha, beta, gamma, delta, ring }
    }

    pub fn ring(&self) -> &RingPresentation {
        &self.ring
    }

    fn quadric(&self, v: Variable) -> F2Poly {
        let x = F2Poly::var(v);
        &x * &x + x * F2Poly::var(self.delta)
    }

    pub fn a(&self) -> F2Poly {
        self.quadric(self.alpha)
    }

    pub fn b(&self) -> F2Poly {
        self.quadric(self.beta)
    }

    pub fn c(&self) -> F2Poly {
        self.quadric(self.gamma)
    }

    pub fn d(&self) -> F2Poly {
        F2Poly::var(self.delta)
    }

    /// `Sq^1` squares each degree-one generator.
    pub fn sq1_action(&self) -> Sq1Action {
        Sq1Action::squaring(self.ring.clone()).expect("squaring is a valid action")
    }
}

fn ring_of(names: &[(&str, u32)]) -> RingPresentation {
    RingPresentation::polynomial(names).expect("distinct names")
}

/// `Sq^1 A = Aδ` (and for `B`, `C`), then `Sq^1 (Bi)^* c4 = 0` and
/// `Sq^1 (Bi)^* c6 = (Bi)^*(c1 c6)` for
/// `(Bi)^*: c1 ↦ δ, c2 ↦ A+B+C, c4 ↦ AB+BC+AC, c6 ↦ ABC`.
pub fn verify_lemma_l32() -> Verification {
    let bz = BzRing::new();
    let sq = bz.sq1_action();
    let (a, b, c, d) = (bz.a(), bz.b(), bz.c(), bz.d());
    let mut report = Verification::new();

    for (name, x) in [("A", &a), ("B", &b), ("C", &c)] {
        let actual = sq.apply(x).expect("in ring");
        report.compare(format!("Sq1({name}) = {name}·delta"), &(x * &d), &actual);
    }

    let src = ring_of(&[("c1", 1), ("c2", 2), ("c4", 4), ("c6", 6)]);
    let var = |n: &str| src.variable(n).expect("generator");
    let images = [
        (var("c1"), d.clone()),
        (var("c2"), &a + &b + c.clone()),
        (var("c4"), &a * &b + &b * &c + &a * &c),
        (var("c6"), &a * &b * c.clone()),
    ];
    let bi = match RingMap::new(src.clone(), bz.ring().clone(), images) {
        Ok(f) => {
            report.holds("(Bi)* is a graded ring map", true);
            f
        }
        Err(e) => {
            report.compare("(Bi)* is a graded ring map", &"ok".to_owned(), &e.to_string());
            return report;
        }
    };
    let pull = |p: F2Poly| bi.apply(&p).expect("source generators");
    let c4 = pull(F2Poly::var(var("c4")));
    let c6 = pull(F2Poly::var(var("c6")));
    report.compare("Sq1(AB+BC+AC) = 0", &F2Poly::zero(), &sq.apply(&c4).expect("in ring"));
    report.compare("Sq1(ABC) = ABC·delta", &(&c6 * &d), &sq.apply(&c6).expect("in ring"));
    let c1c6 = pull(F2Poly::var(var("c1")) * F2Poly::var(var("c6")));
    report.compare("Sq1((Bi)*c6) = (Bi)*(c1 c6)", &c1c6, &sq.apply(&c6).expect("in ring"));
    report
}

/// Expands `(1+α+γ)(1+α+γ+δ)(1+β+γ)(1+β+γ+δ)`, compares it with
/// `1 + (A+B+δ²) + (A+B)δ + (AB+C²+(A+B)C)` degree by degree, checks that the
/// substitution `d1 ↦ δ, a2 ↦ A+B, a4 ↦ AB, b2 ↦ C` carries
/// `1 + (d1²+a2) + d1 a2 + (a4+b2²+a2 b2)` to the same class, and pulls it
/// back along `d1 ↦ x1, a2 ↦ x2, b2 ↦ x2, a4 ↦ x4`.
pub fn verify_lemma_analog() -> Verification {
    let bz = BzRing::new();
    let (a, b, c, d) = (bz.a(), bz.b(), bz.c(), bz.d());
    let one = F2Poly::one();
    let [al, be, ga] = [bz.alpha, bz.beta, bz.gamma].map(F2Poly::var);
    let product = (&one + &al + ga.clone())
        * (&one + &al + &ga + d.clone())
        * (&one + &be + ga.clone())
        * (&one + &be + &ga + d.clone());
    let ab = &a + &b;
    let stated = [one.clone(), F2Poly::zero(), &ab + &(&d * &d), &ab * &d, &a * &b + &c * &c + &ab * &c];
    let mut report = Verification::new();
    for (deg, expected) in stated.iter().enumerate() {
        report.compare(format!("w(i*tau~) in degree {deg}"), expected, &product.graded_component(deg as u32));
    }
    let total: F2Poly = stated.iter().cloned().sum();
    report.compare("w(i*tau~) has no terms above degree 4", &total, &product);

    let src = ring_of(&[("d1", 1), ("a2", 2), ("b2", 2), ("a4", 4)]);
    let g = |n: &str| F2Poly::var(src.variable(n).expect("generator"));
    let w_tilde =
        &one + &(g("d1").pow(2) + g("a2")) + &(g("d1") * g("a2")) + &(g("a4") + g("b2").pow(2) + g("a2") * g("b2"));
    let var = |n: &str| src.variable(n).expect("generator");
    let restrict = RingMap::new(
        src.clone(),
        bz.ring().clone(),
        [(var("d1"), d.clone()), (var("a2"), ab.clone()), (var("a4"), &a * &b), (var("b2"), c.clone())],
    )
    .expect("degrees match");
    report.compare("i*(w(tau~)) under the restriction", &product, &restrict.apply(&w_tilde).expect("in ring"));

    let total_ring = ring_of(&[("x1", 1), ("x2", 2), ("x4", 4)]);
    let x = |n: &str| F2Poly::var(total_ring.variable(n).expect("generator"));
    let incl = RingMap::new(
        src.clone(),
        total_ring.clone(),
        [(var("d1"), x("x1")), (var("a2"), x("x2")), (var("b2"), x("x2")), (var("a4"), x("x4"))],
    )
    .expect("degrees match");
    let w_tau = incl.apply(&w_tilde).expect("in ring");
    let expected = &one + &(x("x1").pow(2) + x("x2")) + &(x("x1") * x("x2")) + x("x4");
    report.compare("incl*(w(tau~)) = w(tau)", &expected, &w_tau);
    report.compare("w4(tau) = x4", &x("x4"), &w_tau.graded_component(4));
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oriented_restrictions_hold() {
        let r = verify_lemma_l32();
        assert!(r.passed(), "{:?}", r.first_failure());
        assert_eq!(r.cases[0].expected, r.cases[0].actual);
    }

    #[test]
    fn tangent_restrictions_hold() {
        let r = verify_lemma_analog();
        assert!(r.passed(), "{:?}", r.first_failure());
    }

    #[test]
    fn arg9_by_hand() {
        let bz = BzRing::new();
        let sq = bz.sq1_action();
        // Sq1(α² + αδ) = α²δ + αδ² = (α² + αδ)δ
        let expected = bz.a() * bz.d();
        assert_eq!(sq.apply(&bz.a()).unwrap(), expected);
        assert_eq!(sq.apply(&(bz.a() * bz.b() * bz.c())).unwrap(), bz.a() * bz.b() * bz.c() * bz.d());
    }
}
