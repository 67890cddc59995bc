//! Identity suites: each theorem or lemma family becomes a named suite
//! that sweeps every comparable pair and reports the failing ones.
//!
//! Suites run either symbolically (exact) or modularly (per sample point,
//! one repointed engine per point). The identities themselves are written
//! once, generically over the coefficient ring.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::casselman::{symbolic_engine, CassEngine, Variant};
use crate::hecke::HeckeAlg;
use crate::klpoly::{c_via_matrix, KLTable};
use crate::symbolics::{
    q_laurent_in, CoeffRing, FpTRing, ModCtx, ModRing, SymbolicRing,
};
use crate::weyl::WeylGroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    /// Functional equation on Q = 1 pairs.
    FeQ1,
    /// Inversion with correction coefficients on all pairs.
    FullInversion,
    /// The r/m self-duality through w_0, and the two c routes.
    Duality,
    /// z -> infinity limits against the classical R-polynomials.
    Limits,
    /// Hecke-algebra route to m against the interval sums.
    Oracle,
    /// T-basis and Yang-Baxter basis lemmas.
    HeckeLemmas,
    /// Mutual transforms among r, m, r', m', the bar-sign relation, and
    /// the Q-weighted relation between m(z^{-1}) and r(z).
    Transforms,
}

impl Suite {
    pub fn parse(s: &str) -> Option<Suite> {
        match s {
            "fe-q1" => Some(Suite::FeQ1),
            "full-inversion" => Some(Suite::FullInversion),
            "duality" => Some(Suite::Duality),
            "limits" => Some(Suite::Limits),
            "oracle" => Some(Suite::Oracle),
            "hecke-lemmas" => Some(Suite::HeckeLemmas),
            "transforms" => Some(Suite::Transforms),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::FeQ1 => "fe-q1",
            Suite::FullInversion => "full-inversion",
            Suite::Duality => "duality",
            Suite::Limits => "limits",
            Suite::Oracle => "oracle",
            Suite::HeckeLemmas => "hecke-lemmas",
            Suite::Transforms => "transforms",
        }
    }

    pub fn all() -> [Suite; 7] {
        [
            Suite::FeQ1,
            Suite::FullInversion,
            Suite::Duality,
            Suite::Limits,
            Suite::Oracle,
            Suite::HeckeLemmas,
            Suite::Transforms,
        ]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Backend {
    Symbolic,
    Modular { prime: u64, samples: usize, seed: u64 },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteOutcome {
    pub suite: String,
    pub group: String,
    pub backend: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

type Checked = (usize, Vec<String>);

fn fe_q1<R: CoeffRing + Clone>(
    engine: &mut CassEngine<R>,
    kl: &mut KLTable,
    label: &str,
) -> Checked {
    let g = engine.group().clone();
    let mut fails = Vec::new();
    let mut n = 0;
    for (u, v) in g.comparable_pairs() {
        if !kl.kl_q(u, v).is_one() {
            continue;
        }
        n += 1;
        let lhs = engine.m(Variant::Bar, u, v).expect("comparable");
        let ring = engine.ring(Variant::Plain).clone();
        let gap = g.length(v) as i64 - g.length(u) as i64;
        let rhs = ring.mul(
            &ring.q_pow(gap),
            &engine.m(Variant::Zinv, u, v).expect("comparable"),
        );
        if lhs != rhs {
            fails.push(format!(
                "{label}fe({}, {})",
                g.word_string(u),
                g.word_string(v)
            ));
        }
    }
    (n, fails)
}

fn full_inversion<R: CoeffRing + Clone>(
    engine: &mut CassEngine<R>,
    kl: &mut KLTable,
    label: &str,
) -> Checked {
    let g = engine.group().clone();
    let mut fails = Vec::new();
    let mut n = 0;
    for (u, v) in g.comparable_pairs() {
        n += 1;
        let lhs = engine.m(Variant::Bar, u, v).expect("comparable");
        let ring = engine.ring(Variant::Plain).clone();
        let mut acc = ring.zero();
        for w in g.interval(u, v).expect("comparable") {
            let c = kl.c_coeff(u, w);
            if c.is_zero() {
                continue;
            }
            let term = ring.mul(
                &q_laurent_in(&ring, &c),
                &engine.m(Variant::Zinv, w, v).expect("comparable"),
            );
            acc = ring.add(&acc, &term);
        }
        let gap = g.length(v) as i64 - g.length(u) as i64;
        let rhs = ring.mul(&ring.q_pow(gap), &acc);
        if lhs != rhs {
            fails.push(format!(
                "{label}inversion({}, {})",
                g.word_string(u),
                g.word_string(v)
            ));
        }
    }
    (n, fails)
}

fn duality<R: CoeffRing + Clone>(engine: &mut CassEngine<R>, label: &str) -> Checked {
    let g = engine.group().clone();
    let w0 = g.w0();
    let mut fails = Vec::new();
    let mut n = 0;
    for (u, v) in g.comparable_pairs() {
        n += 1;
        let ring = engine.ring(Variant::Plain).clone();
        let mut acc_r = ring.zero();
        let mut acc_m = ring.zero();
        for x in g.interval(u, v).expect("comparable") {
            let sign = ring.from_int(g.sign(x) * g.sign(v));
            let r_term = ring.mul(
                &engine.r(Variant::Plain, u, x),
                &engine.r(Variant::Plain, g.mul(w0, v), g.mul(w0, x)),
            );
            acc_r = ring.add(&acc_r, &ring.mul(&sign, &r_term));
            let m_term = ring.mul(
                &engine.m(Variant::Plain, u, x).expect("comparable"),
                &engine
                    .m(Variant::Plain, g.mul(w0, v), g.mul(w0, x))
                    .expect("comparable"),
            );
            acc_m = ring.add(&acc_m, &ring.mul(&sign, &m_term));
        }
        let delta = if u == v { ring.one() } else { ring.zero() };
        if acc_r != delta {
            fails.push(format!(
                "{label}r-duality({}, {})",
                g.word_string(u),
                g.word_string(v)
            ));
        }
        if acc_m != delta {
            fails.push(format!(
                "{label}m-duality({}, {})",
                g.word_string(u),
                g.word_string(v)
            ));
        }
        // m'_{u,v} = eps_u eps_v m_{w0 v, w0 u}
        let lhs = engine.m_prime(Variant::Plain, u, v).expect("comparable");
        let rhs = ring.mul(
            &ring.from_int(g.sign(u) * g.sign(v)),
            &engine
                .m(Variant::Plain, g.mul(w0, v), g.mul(w0, u))
                .expect("comparable"),
        );
        if lhs != rhs {
            fails.push(format!(
                "{label}m-prime-flip({}, {})",
                g.word_string(u),
                g.word_string(v)
            ));
        }
    }
    (n, fails)
}

/// The two routes to the correction coefficients agree (point-free check).
fn duality_c_routes(kl: &mut KLTable) -> Checked {
    let g = kl.group().clone();
    let by_matrix = c_via_matrix(kl);
    let mut fails = Vec::new();
    let mut n = 0;
    for (u, v) in g.comparable_pairs() {
        n += 1;
        if kl.c_coeff(u, v) != by_matrix[&(u, v)] {
            fails.push(format!(
                "c-routes({}, {})",
                g.word_string(u),
                g.word_string(v)
            ));
        }
    }
    (n, fails)
}

fn transforms<R: CoeffRing + Clone>(
    engine: &mut CassEngine<R>,
    kl: &mut KLTable,
    label: &str,
) -> Checked {
    let g = engine.group().clone();
    let mut fails = Vec::new();
    let mut n = 0;
    for (u, v) in g.comparable_pairs() {
        n += 1;
        let ring = engine.ring(Variant::Plain).clone();
        let gap = g.length(v) as i64 - g.length(u) as i64;
        let fail = |what: &str| {
            format!("{label}{what}({}, {})", g.word_string(u), g.word_string(v))
        };

        // r from m
        let direct = engine.r(Variant::Plain, u, v);
        if engine.r_from_m(Variant::Plain, u, v).expect("comparable") != direct {
            fails.push(fail("r-from-m"));
        }
        // bar-sign: bar(r) = eps_u eps_v q_u q_v^{-1} r
        let lhs = engine.r(Variant::Bar, u, v);
        let rhs = ring.mul(
            &ring.mul(&ring.from_int(g.sign(u) * g.sign(v)), &ring.q_pow(-gap)),
            &direct,
        );
        if lhs != rhs {
            fails.push(fail("bar-sign"));
        }
        // r' two routes
        let rp = engine.r_prime(Variant::Plain, u, v);
        if rp != engine.r_prime_by_inverse(Variant::Plain, u, v) {
            fails.push(fail("r-prime-routes"));
        }
        // m' = sum eps_x eps_v bar(r'_{u,x})
        let mut acc = ring.zero();
        for x in g.interval(u, v).expect("comparable") {
            let sign = ring.from_int(g.sign(x) * g.sign(v));
            acc = ring.add(&acc, &ring.mul(&sign, &engine.r_prime(Variant::Bar, u, x)));
        }
        if engine.m_prime(Variant::Plain, u, v).expect("comparable") != acc {
            fails.push(fail("m-prime-from-r-prime"));
        }
        // r' = sum bar(m'_{u,x})
        let mut acc2 = ring.zero();
        for x in g.interval(u, v).expect("comparable") {
            acc2 = ring.add(&acc2, &engine.m_prime(Variant::Bar, u, x).expect("comparable"));
        }
        if rp != acc2 {
            fails.push(fail("r-prime-from-m-prime"));
        }
        // sum_{u<=w<=t<=v} bar(Q_{u,w}) eps_w eps_t m_{t,v}(z^{-1})
        //   = q_u q_v^{-1} sum_y Q_{u,y} r_{y,v}(z)
        let interval = g.interval(u, v).expect("comparable");
        let mut lhs13 = ring.zero();
        for &t in &interval {
            let m_t = engine.m(Variant::Zinv, t, v).expect("comparable");
            for &w in &interval {
                if !g.bruhat_leq(w, t) {
                    continue;
                }
                let q_bar = q_laurent_in(&ring, &kl.kl_q(u, w).to_laurent().bar());
                let sign = ring.from_int(g.sign(w) * g.sign(t));
                lhs13 = ring.add(&lhs13, &ring.mul(&ring.mul(&q_bar, &sign), &m_t));
            }
        }
        let mut rhs13 = ring.zero();
        for &y in &interval {
            let q_poly = q_laurent_in(&ring, &kl.kl_q(u, y).to_laurent());
            rhs13 = ring.add(&rhs13, &ring.mul(&q_poly, &engine.r(Variant::Plain, y, v)));
        }
        rhs13 = ring.mul(&ring.q_pow(-gap), &rhs13);
        if lhs13 != rhs13 {
            fails.push(fail("q-weighted-relation"));
        }
    }
    (n, fails)
}

fn oracle<R: CoeffRing + Clone>(engine: &mut CassEngine<R>, label: &str) -> Checked {
    let g = engine.group().clone();
    let hecke = HeckeAlg::new(g.clone(), engine.ring(Variant::Plain).clone());
    let mut fails = Vec::new();
    let mut n = 0;
    for (u, v) in g.comparable_pairs() {
        n += 1;
        let via_hecke = hecke.m_via_hecke(u, v).expect("comparable");
        let via_sum = engine.m(Variant::Plain, u, v).expect("comparable");
        if via_hecke != via_sum {
            fails.push(format!(
                "{label}oracle({}, {})",
                g.word_string(u),
                g.word_string(v)
            ));
        }
    }
    (n, fails)
}

fn limits_symbolic(g: &Arc<WeylGroup>) -> Checked {
    let mut engine = symbolic_engine(g.clone());
    let mut kl = KLTable::new(g.clone());
    let alt_weights: Vec<i64> = (0..g.rank()).map(|i| 2 + i as i64).collect();
    let mut fails = Vec::new();
    let mut n = 0;
    for (u, v) in g.comparable_pairs() {
        n += 1;
        let sign = g.sign(u) * g.sign(v);
        let expected = kl.classical_r(u, v).to_laurent();
        let r = engine.r(Variant::Plain, u, v);
        match r.limit_z_infinity(None) {
            Ok(lim) if lim == expected => {}
            _ => fails.push(format!("r-limit({}, {})", g.word_string(u), g.word_string(v))),
        }
        // the limit must not depend on the positive weight vector
        match r.limit_z_infinity(Some(&alt_weights)) {
            Ok(lim) if lim == expected => {}
            _ => fails.push(format!(
                "r-limit-weights({}, {})",
                g.word_string(u),
                g.word_string(v)
            )),
        }
        match engine.r_prime(Variant::Plain, u, v).limit_z_infinity(None) {
            Ok(lim) if lim == expected.scale(sign) => {}
            _ => fails.push(format!(
                "r-prime-limit({}, {})",
                g.word_string(u),
                g.word_string(v)
            )),
        }
    }
    (n, fails)
}

fn limits_modular(g: &Arc<WeylGroup>, points: &[ModCtx]) -> Checked {
    let mut kl = KLTable::new(g.clone());
    let mut fails = Vec::new();
    let mut n = 0;
    for (k, ctx) in points.iter().enumerate() {
        let fp = ctx.fp();
        let ring = FpTRing::new(fp, ctx.q());
        let mut engine = CassEngine::new(g.clone(), ring);
        for (u, v) in g.comparable_pairs() {
            n += 1;
            let expected = kl.classical_r(u, v).eval_fp(fp, ctx.q());
            let got = engine.r(Variant::Plain, u, v).limit_at_infinity();
            if got != Some(expected) {
                fails.push(format!(
                    "sample{k}:r-limit({}, {})",
                    g.word_string(u),
                    g.word_string(v)
                ));
            }
            let sign = g.sign(u) * g.sign(v);
            let expected_p = if sign == 1 { expected } else { fp.neg(expected) };
            let got_p = engine.r_prime(Variant::Plain, u, v).limit_at_infinity();
            if got_p != Some(expected_p) {
                fails.push(format!(
                    "sample{k}:r-prime-limit({}, {})",
                    g.word_string(u),
                    g.word_string(v)
                ));
            }
        }
    }
    (n, fails)
}

fn point_suite<R: CoeffRing + Clone>(
    suite: Suite,
    engine: &mut CassEngine<R>,
    kl: &mut KLTable,
    label: &str,
) -> Checked {
    match suite {
        Suite::FeQ1 => fe_q1(engine, kl, label),
        Suite::FullInversion => full_inversion(engine, kl, label),
        Suite::Duality => duality(engine, label),
        Suite::Oracle => oracle(engine, label),
        Suite::Transforms => transforms(engine, kl, label),
        Suite::Limits | Suite::HeckeLemmas => unreachable!("handled separately"),
    }
}

/// Runs one suite over one group with the chosen backend.
pub fn run_suite(g: &Arc<WeylGroup>, suite: Suite, backend: &Backend) -> SuiteOutcome {
    let mut outcome = SuiteOutcome {
        suite: suite.name().to_string(),
        group: format!("{:?}", g),
        backend: match backend {
            Backend::Symbolic => "symbolic".to_string(),
            Backend::Modular { prime, samples, seed } => {
                format!("modular(p={prime}, samples={samples}, seed={seed})")
            }
        },
        checked: 0,
        failures: Vec::new(),
    };

    match suite {
        Suite::HeckeLemmas => {
            let inner = hecke_lemma_suite(g);
            outcome.checked = inner.checked;
            outcome.failures = inner.failures;
            outcome.backend = "symbolic".to_string();
        }
        Suite::Limits => {
            let (n, fails) = match backend {
                Backend::Symbolic => limits_symbolic(g),
                Backend::Modular { prime, samples, seed } => {
                    let points = ModCtx::sample_points(
                        *prime,
                        *seed,
                        *samples,
                        g.rank(),
                        &g.root_system().positive_roots,
                    );
                    limits_modular(g, &points)
                }
            };
            outcome.checked = n;
            outcome.failures = fails;
        }
        _ => match backend {
            Backend::Symbolic => {
                let mut engine = symbolic_engine(g.clone());
                let mut kl = KLTable::new(g.clone());
                let (n, fails) = point_suite(suite, &mut engine, &mut kl, "");
                outcome.checked = n;
                outcome.failures = fails;
                if suite == Suite::Duality {
                    let (n2, fails2) = duality_c_routes(&mut kl);
                    outcome.checked += n2;
                    outcome.failures.extend(fails2);
                }
            }
            Backend::Modular { prime, samples, seed } => {
                let points = ModCtx::sample_points(
                    *prime,
                    *seed,
                    *samples,
                    g.rank(),
                    &g.root_system().positive_roots,
                );
                let mut kl = KLTable::new(g.clone());
                for (k, ctx) in points.iter().enumerate() {
                    let mut engine = CassEngine::new(g.clone(), ModRing::at_point(ctx));
                    let (n, fails) =
                        point_suite(suite, &mut engine, &mut kl, &format!("sample{k}:"));
                    outcome.checked += n;
                    outcome.failures.extend(fails);
                }
                if suite == Suite::Duality {
                    let (n2, fails2) = duality_c_routes(&mut kl);
                    outcome.checked += n2;
                    outcome.failures.extend(fails2);
                }
            }
        },
    }
    outcome
}

/// All reduced words of an element, by recursion over left descents.
fn all_reduced_words(g: &WeylGroup, w: crate::weyl::ElemIdx) -> Vec<Vec<usize>> {
    if w == g.identity() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..g.rank() {
        if g.is_left_descent(w, i) {
            for mut tail in all_reduced_words(g, g.left_mul_s(w, i)) {
                let mut word = vec![i];
                word.append(&mut tail);
                out.push(word);
            }
        }
    }
    out
}

/// The T-basis and Yang-Baxter lemmas, exact:
/// Lambda(T_u T_v) orthogonality, the two T-inverse routes, reduced-word
/// independence of mu on the longest element, and the mu bar identity.
pub fn hecke_lemma_suite(g: &Arc<WeylGroup>) -> SuiteOutcome {
    use crate::hecke::Char;
    use crate::symbolics::RatFn;

    let rank = g.rank();
    let h = HeckeAlg::new(g.clone(), SymbolicRing::new(rank));
    let mut kl = KLTable::new(g.clone());
    let mut checked = 0usize;
    let mut failures = Vec::new();

    // Lambda(T_u T_v) = q_u if u = v^{-1} else 0
    for u in 0..g.size() as u32 {
        for v in 0..g.size() as u32 {
            checked += 1;
            let got = h.lambda(&h.t_mul(&h.t_w(u), &h.t_w(v)));
            let ok = if v == g.inverse(u) {
                got == RatFn::q_pow(rank, g.length(u) as i32)
            } else {
                got.is_zero()
            };
            if !ok {
                failures.push(format!("lambda({}, {})", g.word_string(u), g.word_string(v)));
            }
        }
    }

    // T_w^{-1}: factored route vs R-polynomial route, and actual inversion
    for w in 0..g.size() as u32 {
        checked += 1;
        let inv = h.t_inverse(w);
        if h.t_mul(&h.t_w(w), &inv) != h.t_e() || inv != h.t_inverse_by_r(w, &mut kl) {
            failures.push(format!("t-inverse({})", g.word_string(w)));
        }
    }

    // mu along every reduced word of w0 gives the same element
    let words = all_reduced_words(g, g.w0());
    let reference = h.mu(g.w0());
    for word in &words {
        checked += 1;
        if h.mu_along_word(word, Char::standard(g)) != reference {
            failures.push(format!("mu-word-independence({word:?})"));
        }
    }

    // bar(mu_z(w)) = q_w mu_{z^{-1}}(w)
    for w in 0..g.size() as u32 {
        checked += 1;
        let lhs = h.bar(&h.mu(w));
        let rhs = h.scale(&h.mu_z_inverted(w), &RatFn::q_pow(rank, g.length(w) as i32));
        if lhs != rhs {
            failures.push(format!("mu-bar({})", g.word_string(w)));
        }
    }

    SuiteOutcome {
        suite: Suite::HeckeLemmas.name().to_string(),
        group: format!("{:?}", g),
        backend: "symbolic".to_string(),
        checked,
        failures,
    }
}
