//! Consistency suites. Each suite returns one verdict per checked instance
//! followed by a summary verdict named after the suite.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::conifold::{compose_conifold, conifold_theorem_check};
use crate::error::{Error, Result};
use crate::fock::{refined_p, refined_p_gamma, refined_prefactor_scalar, Kernel};
use crate::localization::{check_polarization, fixed_point_ed, fixed_point_elambda};
use crate::par;
use crate::partitions::{enumerate, enumerate_upto, z_of, Partition};
use crate::scalars::{Monomial, QSeries, RatFunc};
use crate::symfunc::{exp_hhd_check, hall, jacobi_trudi, schur, SymFunc, SymFunc2};
use crate::vertex::{
    one_leg_chain, q_polynomiality_check, two_leg, two_leg_pairing_check_with, two_leg_pairing_diagnostic, QPolyReport,
    Variant,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub check: String,
    pub params: Value,
    pub variant: Option<String>,
    pub passed: bool,
    pub prefactor: Option<String>,
}

impl Verdict {
    fn new(check: impl Into<String>, params: Value, passed: bool) -> Self {
        Verdict {
            check: check.into(),
            params,
            variant: None,
            passed,
            prefactor: None,
        }
    }

    fn summary(suite: Suite, items: &[Verdict], params: Value) -> Self {
        let passed = items.iter().all(|v| v.passed);
        Verdict::new(suite.name(), params, passed)
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", if self.passed { "PASS" } else { "FAIL" }, self.check)?;
        write!(f, " {}", self.params)?;
        if let Some(v) = &self.variant {
            write!(f, " variant={v}")?;
        }
        if let Some(p) = &self.prefactor {
            write!(f, " prefactor={p}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Hall,
    Exp,
    Localization,
    Refined,
    OneLeg,
    TwoLeg,
    Conifold,
    QPoly,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Hall,
        Suite::Exp,
        Suite::Localization,
        Suite::Refined,
        Suite::OneLeg,
        Suite::TwoLeg,
        Suite::Conifold,
        Suite::QPoly,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Hall => "hall",
            Suite::Exp => "exp",
            Suite::Localization => "localization",
            Suite::Refined => "refined",
            Suite::OneLeg => "one-leg",
            Suite::TwoLeg => "two-leg",
            Suite::Conifold => "conifold",
            Suite::QPoly => "qpoly",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite '{s}'")))
    }
}

/// Order overrides; `None` keeps each suite's own default.
#[derive(Clone, Copy, Debug, Default)]
pub struct SuiteConfig {
    pub nq: Option<u32>,
    pub nbig: Option<u32>,
    pub deg: Option<u32>,
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<Vec<Verdict>> {
    match suite {
        Suite::Hall => hall_suite(cfg.deg.unwrap_or(6)),
        Suite::Exp => exp_suite(cfg.deg.unwrap_or(3).max(1), cfg.nq.unwrap_or(3)),
        Suite::Localization => localization_suite(cfg.deg.unwrap_or(6)),
        Suite::Refined => refined_suite(cfg.deg.unwrap_or(3), cfg.nq.unwrap_or(4)),
        Suite::OneLeg => one_leg_suite(cfg.deg.unwrap_or(4), cfg.nq.unwrap_or(5)),
        Suite::TwoLeg => two_leg_suite(cfg.deg.unwrap_or(3), cfg.nq.unwrap_or(4)),
        Suite::Conifold => conifold_suite(cfg.nq.unwrap_or(4), cfg.nbig.unwrap_or(3), cfg.deg.unwrap_or(3)),
        Suite::QPoly => qpoly_suite(cfg.deg.unwrap_or(2), cfg.nq.unwrap_or(4), cfg.nbig.unwrap_or(4)),
    }
}

pub fn run_all(cfg: &SuiteConfig) -> Result<Vec<Verdict>> {
    let mut out = Vec::new();
    for s in Suite::ALL {
        out.extend(run_suite(s, cfg)?);
    }
    Ok(out)
}

fn pairs(max: u32) -> Vec<(Partition, Partition)> {
    let ps = enumerate_upto(max);
    let mut out = Vec::new();
    for a in &ps {
        for b in &ps {
            out.push((a.clone(), b.clone()));
        }
    }
    out
}

fn collect(results: Vec<Result<Verdict>>) -> Result<Vec<Verdict>> {
    results.into_iter().collect()
}

fn rational_series(c: BigRational) -> QSeries {
    QSeries::constant(RatFunc::rational(c), 0, 0)
}

pub fn hall_suite(max: u32) -> Result<Vec<Verdict>> {
    let parts = enumerate_upto(max);
    let by_size: Vec<u32> = (0..=max).collect();
    let power_ok = par::map(&by_size, |n| {
        let ps: Vec<_> = enumerate(*n)
            .iter()
            .map(|m| (m.clone(), SymFunc::power_sum(m, max, 0, 0)))
            .collect();
        parts.iter().all(|nu| {
            let pn = SymFunc::power_sum(nu, max, 0, 0);
            ps.iter().all(|(m, pm)| {
                let expect = if m == nu {
                    z_of(m)
                } else {
                    BigRational::from_integer(0.into())
                };
                hall(pm, &pn).same_as(&rational_series(expect))
            })
        })
    });
    let schurs: Vec<SymFunc> = par::map(&parts, |l| schur(l, max, 0, 0));
    let idx: Vec<usize> = (0..parts.len()).collect();
    let schur_ok = par::map(&idx, |i| {
        (0..parts.len()).all(|j| {
            let expect = if *i == j { 1 } else { 0 };
            hall(&schurs[*i], &schurs[j]).same_as(&rational_series(BigRational::from_integer(expect.into())))
        })
    });
    let jt_ok = par::map(&idx, |i| jacobi_trudi(&parts[*i], max, 0, 0).same_as(&schurs[*i]));
    let mut items = vec![
        Verdict::new(
            "hall/power-sum-orthogonality",
            json!({ "max_size": max }),
            power_ok.iter().all(|b| *b),
        ),
        Verdict::new(
            "hall/schur-orthonormality",
            json!({ "max_size": max }),
            schur_ok.iter().all(|b| *b),
        ),
        Verdict::new(
            "hall/murnaghan-nakayama-vs-jacobi-trudi",
            json!({ "max_size": max }),
            jt_ok.iter().all(|b| *b),
        ),
    ];
    items.push(Verdict::summary(Suite::Hall, &items, json!({ "max_size": max })));
    Ok(items)
}

fn random_seed(rng: &mut ChaCha8Rng, deg: u32, nq: u32) -> SymFunc {
    let weights = [
        Monomial::ONE,
        Monomial::y(),
        Monomial::xz(),
        Monomial::kappa(),
        Monomial::y().inv(),
    ];
    let shapes = enumerate_upto(deg);
    let mut f = SymFunc::zero((deg, 0), nq, 0);
    for _ in 0..rng.gen_range(1..=3) {
        let mu = shapes[rng.gen_range(0..shapes.len())].clone();
        let a = if mu.is_empty() {
            rng.gen_range(1..=2)
        } else {
            rng.gen_range(0..=2)
        };
        let mut c: i64 = rng.gen_range(-2..=2);
        if c == 0 {
            c = 1;
        }
        let m = weights[rng.gen_range(0..weights.len())];
        let coeff = QSeries::term(
            a,
            0,
            RatFunc::monomial(m).scale(&BigRational::from_integer(c.into())),
            nq,
            0,
        );
        f.add_term(mu, coeff);
    }
    f
}

pub fn exp_suite(deg: u32, nq: u32) -> Result<Vec<Verdict>> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6b76);
    let seeds: Vec<(SymFunc, SymFunc)> = (0..20)
        .map(|_| (random_seed(&mut rng, deg, nq), random_seed(&mut rng, deg, nq)))
        .collect();
    let ok = par::map(&seeds, |(f, g)| -> Result<bool> {
        let lhs = (f + g).plethystic_exp()?;
        let rhs = &f.plethystic_exp()? * &g.plethystic_exp()?;
        Ok(lhs.same_as(&rhs))
    });
    let ok: Vec<bool> = ok.into_iter().collect::<Result<_>>()?;
    let mut items = vec![Verdict::new(
        "exp/additivity",
        json!({ "seeds": seeds.len(), "max_deg": deg, "nq": nq }),
        ok.iter().all(|b| *b),
    )];
    let cauchy_deg = 4;
    let seed = SymFunc2::term(
        (Partition::single(1), Partition::single(1)),
        QSeries::one(0, 0),
        (cauchy_deg, cauchy_deg),
    );
    let cauchy = seed.plethystic_exp()?;
    items.push(Verdict::new(
        "exp/cauchy-kernel",
        json!({ "max_deg": cauchy_deg }),
        cauchy.same_as(&Kernel::identity(cauchy_deg, 0, 0).body),
    ));
    for (name, t) in [("y", Monomial::y()), ("xz", Monomial::xz())] {
        let r = exp_hhd_check(t, 4)?;
        items.push(Verdict::new("exp/hhd", json!({ "t": name, "max_deg": 4 }), r.passed()));
    }
    items.push(Verdict::summary(
        Suite::Exp,
        &items,
        json!({ "max_deg": deg, "nq": nq }),
    ));
    Ok(items)
}

pub fn localization_suite(max: u32) -> Result<Vec<Verdict>> {
    let mut items = Vec::new();
    for d in 1..=max as i64 {
        let fp = fixed_point_ed(d)?;
        let pol = check_polarization(&fp);
        let rank_ok = fp.t_half_vir.rank() == -d * d;
        let stalk_ok = fp.ohat_monomial == Monomial::from_doubled(0, -(d * d) as i32, 0)
            && fp.ohat_coeff == BigRational::from_integer(1.into());
        items.push(Verdict::new(
            "localization/E_d",
            json!({ "d": d, "rank": rank_ok, "stalk": stalk_ok, "polarization_hilb": pol.hilb, "polarization_vir": pol.vir }),
            rank_ok && stalk_ok && pol.passed(),
        ));
    }
    for n in 0..=max {
        let ls = enumerate(n);
        let ok = par::map(&ls, |l| {
            let fp = fixed_point_elambda(l);
            let rank_ok = fp.t_half_vir.rank() == -(l.size() as i64);
            let stalk_ok = fp.ohat_monomial == stalk_from_content_sums(l);
            rank_ok && stalk_ok && fp.t_hilb == fp.t_vir.scale(2) && check_polarization(&fp).passed()
        });
        items.push(Verdict::new(
            "localization/E_lambda",
            json!({ "size": n, "count": ls.len() }),
            ok.iter().all(|b| *b),
        ));
    }
    items.push(Verdict::summary(Suite::Localization, &items, json!({ "max": max })));
    Ok(items)
}

/// `κ^{−|λ|} (xz)^{−Σ binom(λ_i, 2)} y^{−Σ binom(λ'_j, 2)}`.
fn stalk_from_content_sums(l: &Partition) -> Monomial {
    let tri = |p: &Partition| -> i32 { p.parts().iter().map(|k| (k * (k.saturating_sub(1)) / 2) as i32).sum() };
    Monomial::kappa()
        .pow(-(l.size() as i32))
        .mul(Monomial::xz().pow(-tri(l)))
        .mul(Monomial::y().pow(-tri(&l.conjugate())))
}

pub fn refined_suite(max: u32, nq: u32) -> Result<Vec<Verdict>> {
    let ps = pairs(max);
    let mut items = par::map(&ps, |(l, m)| {
        let mut v = Verdict::new(
            "refined/skew-vs-gamma",
            json!({ "lambda": l.to_string(), "mu": m.to_string(), "nq": nq }),
            refined_p(l, m, nq).same_as(&refined_p_gamma(l, m, nq)),
        );
        v.prefactor = Some(refined_prefactor_scalar(l, m).to_string());
        v
    });
    items.push(Verdict::summary(
        Suite::Refined,
        &items,
        json!({ "max_size": max, "nq": nq }),
    ));
    Ok(items)
}

pub fn one_leg_suite(max: u32, nq: u32) -> Result<Vec<Verdict>> {
    let ls = enumerate_upto(max);
    let mut items = collect(par::map(&ls, |l| {
        let (lhs, rhs) = one_leg_chain(l, nq)?;
        Ok(Verdict::new(
            "one-leg/stable-envelope-pairing",
            json!({ "lambda": l.to_string(), "nq": nq }),
            lhs.same_as(&rhs),
        ))
    }))?;
    items.push(Verdict::summary(
        Suite::OneLeg,
        &items,
        json!({ "max_size": max, "nq": nq }),
    ));
    Ok(items)
}

pub fn two_leg_suite(max: u32, nq: u32) -> Result<Vec<Verdict>> {
    let ps = pairs(max);
    let deg = max.max(1);
    let mut items = Vec::new();
    let mut passing = Vec::new();
    for variant in Variant::ALL {
        let series = two_leg(nq, deg, variant)?;
        let vs = collect(par::map(&ps, |(l, m)| {
            let v = two_leg_pairing_check_with(&series, variant, l, m)?;
            let diag = two_leg_pairing_diagnostic(&v);
            let mut out = Verdict::new(
                "two-leg/pairing",
                json!({
                    "lambda": l.to_string(),
                    "mu": m.to_string(),
                    "nq": nq,
                    "positive_specialization_factor": diag.map(|f| f.to_string()),
                }),
                v.passed(),
            );
            out.variant = Some(variant.to_string());
            out.prefactor = v.factor.map(|f| f.to_string());
            Ok(out)
        }))?;
        if vs.iter().all(|v| v.passed) {
            passing.push(variant);
        }
        items.extend(vs);
    }
    let mut summary = Verdict::new(
        Suite::TwoLeg.name(),
        json!({
            "max_size": max,
            "nq": nq,
            "passing_variants": passing.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        }),
        passing.len() == 1,
    );
    summary.variant = passing.first().map(|v| v.to_string());
    items.push(summary);
    Ok(items)
}

pub fn conifold_suite(nq: u32, nbig: u32, deg: u32) -> Result<Vec<Verdict>> {
    let r = conifold_theorem_check(nq, nbig, deg)?;
    let params = json!({
        "nq": nq,
        "nQ": nbig,
        "max_deg": deg,
        "composition": r.composition.clone().err().unwrap_or_else(|| "ok".into()),
        "z_factor": r.z_factor,
        "theorem": r.theorem,
        "q_zero_slice": r.q_zero_slice,
    });
    let mut items = vec![Verdict::new("conifold/theorem", params, r.passed())];
    items.push(Verdict::summary(
        Suite::Conifold,
        &items,
        json!({ "nq": nq, "nQ": nbig, "max_deg": deg }),
    ));
    Ok(items)
}

/// Q-polynomiality at `nbig − 1` and `nbig`, plus agreement of the two ratios.
pub fn qpoly_suite(max: u32, nq: u32, nbig: u32) -> Result<Vec<Verdict>> {
    let lo = nbig.saturating_sub(1).max(1);
    let k_lo = compose_conifold(nq, lo, max)?.kernel();
    let k_hi = compose_conifold(nq, nbig, max)?.kernel();
    let ps = pairs(max);
    let mut items = collect(par::map(&ps, |(l, m)| {
        let a: QPolyReport = q_polynomiality_check(&k_lo, l, m)?;
        let b = q_polynomiality_check(&k_hi, l, m)?;
        let stable = a.ratio.coeffs_eq(&b.ratio.truncate(nq, lo));
        Ok(Verdict::new(
            "qpoly/ratio-to-vacuum",
            json!({
                "lambda": l.to_string(),
                "mu": m.to_string(),
                "nQ": [lo, nbig],
                "degree_bound": b.degree_bound,
                "observed_degree": b.observed_degree,
                "stable": stable,
            }),
            a.passed() && b.passed() && stable,
        ))
    }))?;
    items.push(Verdict::summary(
        Suite::QPoly,
        &items,
        json!({ "max_size": max, "nq": nq, "nQ": [lo, nbig] }),
    ));
    Ok(items)
}
