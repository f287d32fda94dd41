//! Acceptance criteria, one line each. Expected values are recomputed here
//! from first principles wherever that is cheap.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use cobordism_core::arithmetic::{is_mersenne_form, lemma_binom_solve, verify_ia, verify_mf, z_sequence};
use cobordism_core::fiber::{
    base_sq1_action, lowest_filtration_part, pi_shriek, transfer_s2t2t, transfer_sn, z_via_fiber, BundleConfig,
};
use cobordism_core::generators::{gcd_report, s_n_pe, s_n_pe_oracle};
use cobordism_core::steenrod::{is_homology_basis, sq1_homology, verify_sn_sq1_identities, Sq1Action};
use cobordism_core::symmfunc::{
    is_primitive, is_primitive_bso, newton_sums, s2t_mod2_quotient, s_n_girard, s_n_newton, stiefel_whitney,
    verify_lemma_analog, verify_lemma_l32,
};
use cobordism_core::{F2Poly, Monomial, RingPresentation, Variable};

type Check = Result<(), String>;

/// Number, title, runtime limit in seconds, check.
type Criterion = (u32, &'static str, Option<u64>, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn choose(n: u64, k: u64) -> BigInt {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Parity of `n (a+b-1)! / (a! b!)`, with `None` if that is not an integer.
fn girard_parity(n: u64, a: u64, b: u64) -> Option<bool> {
    let num = BigInt::from(n) * factorial(a + b - 1);
    let (q, r) = num.div_rem(&(factorial(a) * factorial(b)));
    r.is_zero().then(|| q.is_odd())
}

fn odd_pair(n: u64, a: u64, b: u64) -> bool {
    a % 2 == 1 && b % 2 == 1 && 2 * a + 3 * b == n && girard_parity(n, a, b) == Some(true)
}

fn monomial(pairs: &[(Variable, u32)]) -> F2Poly {
    F2Poly::monomial(Monomial::from_pairs(pairs.iter().copied()))
}

fn c1_pi_closed_form() -> Check {
    let cfg = BundleConfig::oriented();
    let (x1, x2, x4) = (cfg.x("x1"), cfg.x("x2"), cfg.x("x4"));
    let (y1, y4, y6) = (cfg.y("y1"), cfg.y("y4"), cfg.y("y6"));
    let mut count = 0;
    for a in 0..=30u32 {
        for b in 0..=(30 - a) / 2 {
            for c in 0..=(30 - a - 2 * b) / 4 {
                let expected = if c == 0 && b > 0 && b % 2 == 0 {
                    monomial(&[(y1, a), (y4, b / 2 - 1)])
                } else if b == 0 && c > 0 {
                    monomial(&[(y1, a), (y4, c - 1)])
                } else {
                    F2Poly::zero()
                };
                let p = monomial(&[(x1, a), (x2, b), (x4, c)]);
                let actual = pi_shriek(&cfg, &p).map_err(|e| e.to_string())?.set_zero(y6);
                ensure(actual == expected, || format!("x1^{a} x2^{b} x4^{c}: expected {expected}, got {actual}"))?;
                count += 1;
            }
        }
    }
    ensure(count > 300, || format!("only {count} monomials"))
}

fn c2_transfer_sn() -> Check {
    let (y1, y4) = (Variable::named("y1", 1), Variable::named("y4", 4));
    for n in 4..=40u64 {
        if is_mersenne_form(n) {
            continue;
        }
        let value = transfer_sn(n as usize).map_err(|e| e.to_string())?;
        ensure(!value.is_zero(), || format!("transfer_sn({n}) = 0"))?;
        if n.is_power_of_two() {
            let expected = monomial(&[(y4, (n / 4 - 1) as u32)]);
            ensure(value == expected, || format!("transfer_sn({n}) = {value}, expected {expected}"))?;
        } else if n % 2 == 1 {
            let (a, b) = (1..=n / 3)
                .filter(|&b| (n - 3 * b) % 2 == 0)
                .map(|b| ((n - 3 * b) / 2, b))
                .find(|&(a, b)| odd_pair(n, a, b))
                .ok_or_else(|| format!("no odd pair for n = {n}"))?;
            let expected = monomial(&[(y1, b as u32), (y4, ((a + b) / 2 - 1) as u32)]);
            let (_, lead) = lowest_filtration_part(&value, y1).expect("nonzero");
            ensure(lead == expected, || format!("n = {n}: leading part {lead}, expected {expected}"))?;
        }
    }
    Ok(())
}

fn c3_spp_transfer() -> Check {
    let y4 = F2Poly::var(Variable::named("y4", 4));
    let w2 = F2Poly::var(stiefel_whitney(2));
    for t in 1..=8usize {
        let v = transfer_s2t2t(t).map_err(|e| e.to_string())?;
        ensure(v == y4.pow(t as u32 - 1), || format!("t = {t}: {v}"))?;
        let q = s2t_mod2_quotient(t).map_err(|e| e.to_string())?;
        ensure(q == w2.pow(2 * t as u32), || format!("t = {t}: s_(2t,2t) reduces to {q}"))?;
    }
    Ok(())
}

fn homology_check(name: &str, action: &Sq1Action, max: u32, basis: impl Fn(u32) -> Vec<F2Poly>) -> Check {
    for d in 0..=max {
        let b = basis(d);
        let ok = is_homology_basis(action, d, &b).map_err(|e| e.to_string())?;
        ensure(ok, || format!("{name}: wrong homology in degree {d}"))?;
    }
    let dims = sq1_homology(action, max).map_err(|e| e.to_string())?.dims();
    for (d, &dim) in dims.iter().enumerate() {
        ensure(d % 4 == 0 || dim == 0, || format!("{name}: H^{d} has dimension {dim}"))?;
        ensure(dim == basis(d as u32).len(), || format!("{name}: dim H^{d} = {dim}"))?;
    }
    Ok(())
}

fn c4_sq1_homology() -> Check {
    let (y4, y6) = (Variable::named("y4", 4), Variable::named("y6", 6));
    let base = |d: u32| {
        let mut out = Vec::new();
        for s in 0..=d / 4 {
            for t in 0..=d / 12 {
                if 4 * s + 12 * t == d {
                    out.push(monomial(&[(y4, s), (y6, 2 * t)]));
                }
            }
        }
        out
    };
    homology_check("Z/2[y1,y4,y6]", &base_sq1_action(), 40, base)?;

    let wu = Sq1Action::wu_truncated(2, 24).map_err(|e| e.to_string())?;
    let bso = |d: u32| {
        if d % 4 != 0 {
            return Vec::new();
        }
        let vars: Vec<Variable> = (1..=d / 4).map(|k| stiefel_whitney(2 * k as usize)).collect();
        let ring = RingPresentation::new(vars, None).expect("distinct");
        ring.monomials_of_degree(d / 2).into_iter().map(|m| F2Poly::monomial(m.pow(2))).collect()
    };
    homology_check("Z/2[w2,w3,...]", &wu, 24, bso)
}

fn c5_lemmas() -> Check {
    for (name, v) in [("l32", verify_lemma_l32()), ("analog", verify_lemma_analog())] {
        if let Some(f) = v.first_failure() {
            return Err(format!("{name}: {} expected {}, got {}", f.case, f.expected, f.actual));
        }
        ensure(!v.cases.is_empty(), || format!("{name}: no cases"))?;
    }
    Ok(())
}

/// `Some(p)` if `m = p^s`.
fn prime_power_base(m: u64) -> Option<u64> {
    let p = (2..=m).find(|p| m % p == 0)?;
    let mut r = m;
    while r % p == 0 {
        r /= p;
    }
    (r == 1).then_some(p)
}

fn c6_generators() -> Check {
    for n in 1..=200u64 {
        let r = gcd_report(n).map_err(|e| e.to_string())?;
        let gcd = r.values.iter().fold(BigInt::zero(), |g, v| g.gcd(v));
        let expected = prime_power_base(2 * n + 1).map_or_else(BigInt::one, BigInt::from);
        ensure(gcd == expected && r.gcd == gcd && r.consistent, || format!("n = {n}: gcd {gcd}, expected {expected}"))?;
        for k in 1..n {
            let diff = &r.values[k as usize - 1] - &r.values[k as usize];
            let c = choose(2 * n + 1, k + 1);
            let c = if k % 2 == 1 { c } else { -c };
            ensure(diff == c, || format!("n = {n}, r = {k}: difference {diff}, expected {c}"))?;
        }
        ensure(r.values.iter().all(|v| !v.is_zero() && v.abs() >= gcd), || format!("n = {n}: degenerate values"))?;
    }
    for n in 1..=10 {
        for k in 1..=n {
            let (a, b) = (s_n_pe(n, k).map_err(|e| e.to_string())?, s_n_pe_oracle(n, k).map_err(|e| e.to_string())?);
            ensure(a == b, || format!("S_{n}(PE_{k}): closed form {a}, oracle {b}"))?;
        }
    }
    Ok(())
}

fn c7_lemma_binom() -> Check {
    for n in (5..=1001u64).step_by(2).filter(|&n| !is_mersenne_form(n)) {
        let s = lemma_binom_solve(n).map_err(|e| format!("n = {n}: {e}"))?;
        ensure(odd_pair(n, s.a, s.b), || format!("n = {n}: (a, b) = ({}, {}) fails", s.a, s.b))?;
    }
    Ok(())
}

fn c8_unoriented() -> Check {
    let seq = z_sequence(64).map_err(|e| e.to_string())?;
    let zeros = seq.vanishing();
    ensure(zeros == [1, 3, 7, 15, 31, 63], || format!("z_n = 0 for n in {zeros:?}"))?;
    for n in 1..=64usize {
        for j in 0..6u32 {
            if 3 * (1usize << j) < n {
                ensure(verify_mf(&seq, n, j) == Ok(true), || format!("mf fails at n = {n}, j = {j}"))?;
            }
        }
        if n >= 2 && !is_mersenne_form(n as u64) {
            ensure(verify_ia(&seq, n) == Ok(true), || format!("ia fails at n = {n}"))?;
        }
    }
    for n in 1..=20 {
        let z = z_via_fiber(n).map_err(|e| e.to_string())?;
        ensure(Some(&z) == seq.get(n), || format!("z_{n}: fiber gives {z}"))?;
    }
    Ok(())
}

fn c9_symmetric_functions() -> Check {
    for n in 1..=12 {
        let (g, nw) = (s_n_girard(n).map_err(|e| e.to_string())?, s_n_newton(n).map_err(|e| e.to_string())?);
        ensure(g == nw, || format!("s_{n}: Girard {g}, Newton {nw}"))?;
    }
    let w = |k| F2Poly::var(stiefel_whitney(k));
    let sums = newton_sums(20, w);
    for n in 1..=10 {
        ensure(sums[2 * n - 1] == sums[n - 1].pow(2), || format!("s_{} != s_{n}^2", 2 * n))?;
    }
    for (i, s) in sums.iter().take(12).enumerate() {
        ensure(is_primitive(s) == Ok(true), || format!("s_{} not primitive", i + 1))?;
    }
    for i in 0..=3 {
        ensure(is_primitive_bso(&w(2).pow(1 << i)) == Ok(true), || format!("w2^{} not primitive", 1 << i))?;
    }
    let v = verify_sn_sq1_identities(4).map_err(|e| e.to_string())?;
    ensure(v.cases.len() == 12, || format!("{} Sq1 cases", v.cases.len()))?;
    match v.first_failure() {
        Some(f) => Err(format!("{}: expected {}, got {}", f.case, f.expected, f.actual)),
        None => Ok(()),
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (1, "pi_! closed form, degree <= 30", Some(5), c1_pi_closed_form),
        (2, "transfer_sn nonzero with leading terms, 4 <= n <= 40", Some(60), c2_transfer_sn),
        (3, "transfer of s_{2t,2t} and its mod-2 reduction, t <= 8", None, c3_spp_transfer),
        (4, "Sq1-homology bases through degrees 40 and 24", None, c4_sq1_homology),
        (5, "restriction lemmas in Z/2[alpha,beta,gamma,delta]", None, c5_lemmas),
        (6, "generator gcd criterion n <= 200, oracle n <= 10", Some(30), c6_generators),
        (7, "odd Girard coefficients, odd 5 <= n <= 1001", None, c7_lemma_binom),
        (8, "z_n vanishing, doubling, leading terms, RP2 transfer", None, c8_unoriented),
        (9, "Girard = Newton, doubling, primitivity, Sq1 on s_n", None, c9_symmetric_functions),
    ];
    let mut failed = 0;
    for (id, title, limit, check) in criteria {
        let start = Instant::now();
        let mut result = check();
        let elapsed = start.elapsed();
        if let Some(secs) = limit {
            if result.is_ok() && elapsed >= Duration::from_secs(secs) {
                result = Err(format!("took {elapsed:?}, limit {secs} s"));
            }
        }
        let limit_note = limit.map(|s| format!(", limit {s} s")).unwrap_or_default();
        match result {
            Ok(()) => println!("criterion {id}: PASS  {title} ({:.2} s{limit_note})", elapsed.as_secs_f64()),
            Err(e) => {
                failed += 1;
                println!("criterion {id}: FAIL  {title} ({:.2} s{limit_note}): {e}", elapsed.as_secs_f64());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
