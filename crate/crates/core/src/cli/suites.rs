use std::fmt::Display;

use num_bigint::BigInt;

use super::{Context, Suite};
use crate::arithmetic::{is_mersenne_form, lemma_binom_solve, verify_ia, verify_mf, z_sequence};
use crate::fiber::{
    base_sq1_action, gw24_check, lowest_filtration_part, pi_shriek, pi_shriek_closed_form, predicted_leading_term,
    transfer_s2t2t, transfer_sn, z_via_fiber, BundleConfig, FiberError,
};
use crate::generators::{gcd_report, nondivisibility_witnesses, s_n_pe_oracle};
use crate::poly::{F2Poly, Monomial, RingPresentation};
use crate::report::Verification;
use crate::steenrod::{is_homology_basis, sq1_homology, verify_sn_sq1_identities, Sq1Action};
use crate::symmfunc::{
    is_primitive, is_primitive_bso, newton_sums, s2t_mod2_quotient, s2t_reduction, s_n_girard, s_n_newton, s_pp,
    stiefel_whitney, verify_lemma_analog, verify_lemma_l32,
};

type Outcome = Result<Verification, String>;

fn err(e: impl Display) -> String {
    e.to_string()
}

fn join<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn usize_of(x: u64) -> usize {
    usize::try_from(x).unwrap_or(usize::MAX)
}

fn u32_of(x: u64) -> Result<u32, String> {
    u32::try_from(x).map_err(|_| format!("{x} is too large"))
}

/// Every registered suite, in a fixed order.
pub fn registry() -> Vec<Suite> {
    vec![
        Suite { id: "pi-closed-form", description: "π_! against its closed form mod y6", run: pi_closed_form },
        Suite {
            id: "transfer-sn",
            description: "transfers of primitives and their leading terms",
            run: transfer_sn_suite,
        },
        Suite {
            id: "transfer-s2t2t",
            description: "transfers of s_{2t,2t} and the s2t reductions",
            run: transfer_spp_suite,
        },
        Suite {
            id: "sq1-homology",
            description: "Sq1-homology bases of the base ring and of H*(BSO)",
            run: sq1_homology_suite,
        },
        Suite { id: "lemma-l32", description: "restrictions to B(Z/2)^4, oriented", run: restrictions_oriented },
        Suite { id: "lemma-analog", description: "restrictions to B(Z/2)^4, second family", run: restrictions_tangent },
        Suite { id: "sn-identities", description: "Sq1 on the power-sum classes", run: sn_identities },
        Suite { id: "primitivity", description: "primitivity of s_n and of powers of w2", run: primitivity },
        Suite {
            id: "girard-newton",
            description: "Girard against Newton, doubling mod 2, s_{p,p}",
            run: girard_newton,
        },
        Suite {
            id: "generators",
            description: "S_n(PE_r) closed form against the antisymmetrization oracle",
            run: generators,
        },
        Suite {
            id: "gcd-criterion",
            description: "gcd of S_n(PE_r) against the prime-power criterion",
            run: gcd_criterion,
        },
        Suite { id: "lemma-binom", description: "constructive odd Girard coefficients", run: lemma_binom },
        Suite { id: "zseq", description: "vanishing of z_n", run: zseq },
        Suite { id: "mf-ia", description: "doubling and leading-term identities for z_n", run: z_identities },
        Suite {
            id: "unoriented-transfer",
            description: "z_n from the RP²-bundle against the recursion",
            run: unoriented_transfer,
        },
    ]
}

fn pi_closed_form(ctx: &Context) -> Outcome {
    let max = u32_of(ctx.max_degree(20, 30))?;
    let cfg = BundleConfig::oriented();
    let (x1, x2, x4) = (cfg.x("x1"), cfg.x("x2"), cfg.x("x4"));
    let y6 = cfg.y("y6");
    let mut report = Verification::new();
    for c in 0..=max / 4 {
        for b in 0..=(max - 4 * c) / 2 {
            for a in 0..=max - 4 * c - 2 * b {
                let m = F2Poly::monomial(Monomial::from_pairs([(x1, a), (x2, b), (x4, c)]));
                let actual = pi_shriek(&cfg, &m).map_err(err)?.set_zero(y6);
                report.compare(format!("pi_!(x1^{a} x2^{b} x4^{c}) mod y6"), &pi_shriek_closed_form(a, b, c), &actual);
            }
        }
    }
    Ok(report)
}

fn transfer_sn_suite(ctx: &Context) -> Outcome {
    let max = usize_of(ctx.max_n(20, 40));
    let y1 = BundleConfig::oriented().y("y1");
    let mut report = Verification::new();
    for n in (4..=max).filter(|&n| !is_mersenne_form(n as u64)) {
        let value = transfer_sn(n).map_err(err)?;
        report.holds(format!("transfer_sn({n}) = {value} is nonzero"), !value.is_zero());
        let Some(predicted) = predicted_leading_term(n) else { continue };
        if n.is_power_of_two() {
            report.compare(format!("transfer_sn({n})"), &predicted, &value);
        } else {
            let lead = lowest_filtration_part(&value, y1).map(|(_, p)| p).unwrap_or_default();
            report.compare(format!("lowest y1-filtration part of transfer_sn({n})"), &predicted, &lead);
        }
    }
    Ok(report)
}

fn transfer_spp_suite(ctx: &Context) -> Outcome {
    let t_max = usize_of(ctx.t_max(4, 8));
    if t_max == 0 {
        return Err("t_max must be at least 1".into());
    }
    let cfg = BundleConfig::oriented();
    let (y4, w2) = (F2Poly::var(cfg.y("y4")), F2Poly::var(stiefel_whitney(2)));
    let mut report = Verification::new();
    for t in 1..=t_max {
        let label = format!("pi_!(v*(s_{{{0},{0}}})) mod (y1, y6)", 2 * t);
        match transfer_s2t2t(t) {
            Ok(v) => report.compare(label, &y4.pow(t as u32 - 1), &v),
            Err(FiberError::S2t2tMismatch { expected, reduced, .. }) => report.compare(label, &expected, &reduced),
            Err(e) => return Err(e.to_string()),
        };
        let quotient = s2t_mod2_quotient(t).map_err(err)?;
        report.compare(
            format!("s_{{{0},{0}}} in Z/2[w2^2, w4^2]/(w2^2 w4^2)", 2 * t),
            &w2.pow(2 * t as u32),
            &quotient,
        );
        let (reduced, expected) = s2t_reduction(t).map_err(err)?;
        report.compare(format!("s_{{{0},{0}}} mod (e1, e3, e>=5, e2 e4)", 2 * t), &expected, &reduced);
    }
    let top = 2 * t_max as u32;
    for c in 0..=top / 2 {
        for a in 0..=top - 2 * c {
            let (actual, expected) = gw24_check(a, c).map_err(err)?;
            report.compare(format!("pi_!(v*(w2^{a} w4^{c})) mod (y1, y6)"), &expected, &actual);
        }
    }
    Ok(report)
}

/// Monomials `y4^s y6^{2t}` of degree `d`.
fn base_basis(cfg: &BundleConfig, d: u32) -> Vec<F2Poly> {
    let (y4, y6) = (cfg.y("y4"), cfg.y("y6"));
    (0..=d / 12)
        .filter(|t| (d - 12 * t) % 4 == 0)
        .map(|t| F2Poly::monomial(Monomial::from_pairs([(y4, (d - 12 * t) / 4), (y6, 2 * t)])))
        .collect()
}

/// Monomials in `w2², w4², …` of degree `d`.
fn bso_basis(d: u32) -> Result<Vec<F2Poly>, String> {
    if d % 4 != 0 {
        return Ok(Vec::new());
    }
    let half = d / 2;
    let vars = (1..=half / 2).map(|k| stiefel_whitney(2 * k as usize)).collect();
    let ring = RingPresentation::new(vars, None).map_err(err)?;
    Ok(ring.monomials_of_degree(half).into_iter().map(|m| F2Poly::monomial(m.pow(2))).collect())
}

fn check_ring(
    report: &mut Verification,
    name: &str,
    action: &Sq1Action,
    max: u32,
    basis: impl Fn(u32) -> Result<Vec<F2Poly>, String>,
) -> Result<(), String> {
    for d in 0..=max {
        let candidates = basis(d)?;
        let ok = is_homology_basis(action, d, &candidates).map_err(err)?;
        report.holds(format!("{name}: H^{d} has basis {}", join(&candidates)), ok);
    }
    let dims = sq1_homology(action, max).map_err(err)?.dims();
    let off: Vec<usize> = (0..dims.len()).filter(|&d| d % 4 != 0 && dims[d] != 0).collect();
    report.compare(format!("{name}: degrees d <= {max}, d != 0 mod 4, with H^d != 0"), "()", &join(off));
    Ok(())
}

fn sq1_homology_suite(ctx: &Context) -> Outcome {
    let max = u32_of(ctx.max_degree(20, 40))?;
    let wu_max = max.min(24);
    ctx.record("wu_max_degree", wu_max);
    let cfg = BundleConfig::oriented();
    let mut report = Verification::new();
    check_ring(&mut report, "Z/2[y1,y4,y6]", &base_sq1_action(), max, |d| Ok(base_basis(&cfg, d)))?;
    let wu = Sq1Action::wu_truncated(2, wu_max).map_err(err)?;
    check_ring(&mut report, "Z/2[w2,w3,...]", &wu, wu_max, bso_basis)?;
    Ok(report)
}

fn restrictions_oriented(_: &Context) -> Outcome {
    Ok(verify_lemma_l32())
}

fn restrictions_tangent(_: &Context) -> Outcome {
    Ok(verify_lemma_analog())
}

fn sn_identities(ctx: &Context) -> Outcome {
    let t_max = usize_of(ctx.t_max(4, 4));
    verify_sn_sq1_identities(t_max).map_err(err)
}

fn primitivity(ctx: &Context) -> Outcome {
    let max = usize_of(ctx.max_n(12, 12));
    let w = |k| F2Poly::var(stiefel_whitney(k));
    let mut report = Verification::new();
    for (i, s) in newton_sums(max, w).iter().enumerate() {
        report.holds(format!("s_{} is primitive", i + 1), is_primitive(s).map_err(err)?);
    }
    for i in 0..=3 {
        let p = w(2).pow(1 << i);
        report.holds(format!("w2^{} is primitive in H*(BSO)", 1 << i), is_primitive_bso(&p).map_err(err)?);
    }
    report.compare("w2 w3 is primitive", &false, &is_primitive(&(w(2) * w(3))).map_err(err)?);
    Ok(report)
}

fn girard_newton(ctx: &Context) -> Outcome {
    let max = usize_of(ctx.max_n(12, 12));
    let doubling = max.saturating_sub(2);
    ctx.record("doubling_max_n", doubling);
    let mut report = Verification::new();
    for n in 1..=max {
        let newton = s_n_newton(n).map_err(err)?;
        let girard = s_n_girard(n).map_err(err)?;
        report.compare(format!("Girard s_{n} = Newton s_{n}"), newton.body(), girard.body());
        report.holds(
            format!("s_{n} is homogeneous of degree {n} with leading term (-1)^(n-1) n e_{n}"),
            newton.check_invariants().is_ok(),
        );
    }
    let sums = newton_sums(2 * doubling, |k| F2Poly::var(stiefel_whitney(k)));
    for n in 1..=doubling {
        report.compare(format!("s_{} = s_{n}^2 mod 2", 2 * n), &sums[n - 1].pow(2), &sums[2 * n - 1]);
    }
    for p in 1..=max / 2 {
        let spp = s_pp(p).map_err(err)?;
        let sp = s_n_newton(p).map_err(err)?.into_body();
        let s2p = s_n_newton(2 * p).map_err(err)?.into_body();
        report.compare(
            format!("2 s_{{{p},{p}}} = s_{} - s_{p}^2", 2 * p),
            &(s2p - &sp * &sp),
            &spp.scale(&BigInt::from(2)),
        );
    }
    Ok(report)
}

fn generators(ctx: &Context) -> Outcome {
    let n = ctx.n(4, 4);
    if n == 0 {
        return Err("n must be at least 1".into());
    }
    let r = gcd_report(n).map_err(err)?;
    let oracle = (1..=n).map(|k| s_n_pe_oracle(n, k)).collect::<Result<Vec<_>, _>>().map_err(err)?;
    let mut report = Verification::new();
    report.compare(format!("S_{n}(PE_r), r = 1..{n}, closed form vs oracle"), &join(&r.values), &join(&oracle));
    report.compare(
        format!("gcd of S_{n}(PE_r) against the criterion for 2n+1 = {}", 2 * n + 1),
        &r.criterion.expected_gcd(),
        &r.gcd,
    );
    report.holds(format!("S_{n}(PE_r) - S_{n}(PE_(r+1)) = (-1)^(r+1) C({}, r+1)", 2 * n + 1), r.difference_identity);
    Ok(report)
}

fn gcd_criterion(ctx: &Context) -> Outcome {
    let max = ctx.max_n(50, 200);
    let oracle_max = max.min(10);
    ctx.record("oracle_max_n", oracle_max);
    let mut report = Verification::new();
    for n in 1..=max {
        let r = gcd_report(n).map_err(err)?;
        report.compare(format!("n = {n}: gcd of S_n(PE_r), 2n+1 = {}", 2 * n + 1), &r.criterion.expected_gcd(), &r.gcd);
        report.holds(format!("n = {n}: difference identity"), r.difference_identity);
        report.extend(nondivisibility_witnesses(n));
        if n <= oracle_max {
            for k in 1..=n {
                let o = s_n_pe_oracle(n, k).map_err(err)?;
                report.compare(format!("S_{n}(PE_{k}) oracle"), &r.values[k as usize - 1], &o);
            }
        }
    }
    Ok(report)
}

fn lemma_binom(ctx: &Context) -> Outcome {
    let max = ctx.max_n(49, 1001);
    let mut report = Verification::new();
    for n in (5..=max).step_by(2).filter(|&n| !is_mersenne_form(n)) {
        match lemma_binom_solve(n) {
            Ok(s) => {
                report.holds(format!("n = {n}: (a, b) = ({}, {}), i = {}, j = {}", s.a, s.b, s.i, s.j), s.verify())
            }
            Err(e) => report.compare(format!("n = {n}: solution"), "a solution", &e.to_string()),
        };
    }
    Ok(report)
}

fn zseq(ctx: &Context) -> Outcome {
    let max = usize_of(ctx.max_n(50, 64));
    let seq = z_sequence(max).map_err(err)?;
    let expected: Vec<usize> = (1..usize::BITS).map(|i| (1usize << i) - 1).take_while(|&m| m <= max).collect();
    let mut report = Verification::new();
    report.compare(format!("{{n <= {max} : z_n = 0}}"), &join(expected), &join(seq.vanishing()));
    for (n, z) in seq.iter() {
        report.holds(
            format!("z_{n} is homogeneous of degree {}", n as i64 - 2),
            z.is_zero() || z.degree() == Some(n as u32 - 2),
        );
    }
    Ok(report)
}

fn z_identities(ctx: &Context) -> Outcome {
    let max = usize_of(ctx.max_n(50, 64));
    let seq = z_sequence(max).map_err(err)?;
    let mut report = Verification::new();
    for n in 1..=max {
        for j in (0..usize::BITS).take_while(|&j| 3 * (1usize << j) < n) {
            report.holds(format!("mf: n = {n}, j = {j}"), verify_mf(&seq, n, j).map_err(err)?);
        }
    }
    for n in (2..=max).filter(|&n| !is_mersenne_form(n as u64)) {
        report.holds(format!("ia: n = {n}"), verify_ia(&seq, n).map_err(err)?);
    }
    Ok(report)
}

fn unoriented_transfer(ctx: &Context) -> Outcome {
    let max = usize_of(ctx.max_n(20, 20));
    let seq = z_sequence(max.max(3)).map_err(err)?;
    let mut report = Verification::new();
    for n in 1..=max {
        let z = seq.get(n).cloned().unwrap_or_default();
        report.compare(format!("pi_!(v*(s_{n})) = z_{n}"), &z, &z_via_fiber(n).map_err(err)?);
    }
    Ok(report)
}
