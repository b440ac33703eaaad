//! Exhaustive verification suites.
//!
//! Each suite counts individual checks and records the first few failures.
//! Pair sweeps run in parallel but collect in pair order, so reports are
//! identical across runs.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::bialgebra::{rank_pi, rank_pi_general, v_battery, Double};
use crate::chevalley::ChevalleyAlgebra;
use crate::error::Result;
use crate::linalg::{rat, Subspace};
use crate::rootsys::RootSystem;
use crate::weyl::{ElementId, WeylGroup, DEFAULT_WEYL_CAP};
use crate::zambon::zambon_report;

const MAX_RECORDED: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Passed,
    Failed,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub status: Status,
    pub checks: usize,
    pub failures: usize,
    /// Up to a handful of failure descriptions.
    pub failed: Vec<String>,
    pub note: Option<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.status != Status::Failed
    }

    fn skipped(name: &str, note: String) -> Self {
        SuiteResult {
            name: name.to_string(),
            status: Status::Skipped,
            checks: 0,
            failures: 0,
            failed: Vec::new(),
            note: Some(note),
        }
    }
}

/// Accumulates check outcomes for one suite.
#[derive(Debug, Default, Clone)]
struct Tally {
    checks: usize,
    failures: usize,
    failed: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.failed.len() < MAX_RECORDED {
                self.failed.push(what());
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checks += other.checks;
        self.failures += other.failures;
        for f in other.failed {
            if self.failed.len() < MAX_RECORDED {
                self.failed.push(f);
            }
        }
        self
    }

    fn finish(self, name: &str, note: Option<String>) -> SuiteResult {
        SuiteResult {
            name: name.to_string(),
            status: if self.failures == 0 {
                Status::Passed
            } else {
                Status::Failed
            },
            checks: self.checks,
            failures: self.failures,
            failed: self.failed,
            note,
        }
    }
}

/// Every ordered pair `(u, v)`, in element order.
fn pairs(group: &WeylGroup) -> Vec<(ElementId, ElementId)> {
    group
        .ids()
        .flat_map(|u| group.ids().map(move |v| (u, v)))
        .collect()
}

fn sweep<F>(group: &WeylGroup, f: F) -> Tally
where
    F: Fn(ElementId, ElementId, &mut Tally) + Sync,
{
    pairs(group)
        .into_par_iter()
        .map(|(u, v)| {
            let mut t = Tally::default();
            f(u, v, &mut t);
            t
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Tally::default(), Tally::merge)
}

/// Jacobi identity on all basis triples.
pub fn suite_jacobi(g: &ChevalleyAlgebra) -> SuiteResult {
    let d = g.dim();
    let triples = d * (d - 1) * (d - 2) / 6;
    let bad = g.jacobi_violations();
    let mut t = Tally {
        checks: triples,
        failures: bad.len(),
        failed: Vec::new(),
    };
    t.failed = bad
        .iter()
        .take(MAX_RECORDED)
        .map(|x| format!("{x:?}"))
        .collect();
    t.finish("jacobi", Some(format!("dim {d}, {triples} triples")))
}

/// `|c_{α,β}| = p + 1`, antisymmetry, `c_{−α,−β} = −c_{α,β}`, and the
/// long-root identities `c_{β,α} = −c_{β,−α−β}`, `c_{β,−α} = −c_{β,α−β}`.
pub fn suite_structure_constants(g: &ChevalleyAlgebra) -> SuiteResult {
    let rs = g.root_system();
    let n = rs.num_roots();
    let mut t = Tally::default();
    let c = |a: usize, b: usize| g.structure_constant_index(a, b).expect("non-proportional");
    let mut max_abs = 0;
    for a in 0..n {
        for b in 0..n {
            if a == b || a == rs.neg_index(b) {
                continue;
            }
            let cab = c(a, b);
            max_abs = max_abs.max(cab.abs());
            let (p, q) = rs.root_string_index(b, a).expect("non-proportional");
            let expect = if q == 0 { 0 } else { p as i64 + 1 };
            t.check(cab.abs() == expect, || {
                format!("|c({a},{b})| = {cab}, p+1 = {expect}")
            });
            t.check(cab == -c(b, a), || format!("antisymmetry at ({a},{b})"));
            t.check(c(rs.neg_index(a), rs.neg_index(b)) == -cab, || {
                format!("c(-a,-b) at ({a},{b})")
            });
        }
    }
    for beta in (0..n).filter(|&b| rs.is_long_index(b)) {
        for a in 0..n {
            if a == beta || a == rs.neg_index(beta) {
                continue;
            }
            let sum = rs.root(a).plus_multiple(1, rs.root(beta));
            if let Some(s) = rs.index_of(&sum) {
                let lhs = c(beta, a);
                let rhs = c(beta, rs.neg_index(s));
                t.check(lhs == -rhs, || {
                    format!("c(b,a) = -c(b,-a-b) for b={beta}, a={a}")
                });
                t.check(lhs * rhs == -1, || {
                    format!("c(b,a) c(b,-a-b) = -1 for b={beta}, a={a}")
                });
            }
            let diff = rs.root(a).plus_multiple(-1, rs.root(beta));
            if let Some(dd) = rs.index_of(&diff) {
                t.check(c(beta, rs.neg_index(a)) == -c(beta, dd), || {
                    format!("c(b,-a) = -c(b,a-b) for b={beta}, a={a}")
                });
            }
        }
    }
    t.finish("structure-constants", Some(format!("max |c| = {max_abs}")))
}

/// `1/K(E_α,E_{−α}) = (α,α)/2`, `λ_α = λ_{−α}`, and `λ_α = λ_{s_β(α)}` for long `β`.
pub fn suite_lambda(g: &ChevalleyAlgebra) -> SuiteResult {
    let rs = g.root_system();
    let n = rs.num_roots();
    let mut t = Tally::default();
    for a in 0..n {
        t.check(g.lambda_index(a) == rs.norm(a) / rat(2), || {
            format!("lambda at {a}")
        });
        t.check(g.lambda_index(a) == g.lambda_index(rs.neg_index(a)), || {
            format!("lambda(-a) at {a}")
        });
    }
    for beta in (0..n).filter(|&b| rs.is_long_index(b)) {
        for a in 0..n {
            let r = rs.reflect(beta, a);
            t.check(g.lambda_index(a) == g.lambda_index(r), || {
                format!("lambda(s_b a) for b={beta}, a={a}")
            });
            if let Some(s) = rs.index_of(&rs.root(a).plus_multiple(1, rs.root(beta))) {
                t.check(g.lambda_index(a) == g.lambda_index(s), || {
                    format!("lambda(a+b) for b={beta}, a={a}")
                });
            }
        }
    }
    t.finish("lambda", None)
}

pub fn suite_manin(d: &Double) -> SuiteResult {
    let m = d.manin_check();
    let mut t = Tally::default();
    t.check(m.form_nondegenerate, || "form degenerate".into());
    t.check(m.g_delta_lagrangian, || "g_delta not Lagrangian".into());
    t.check(m.g_star_lagrangian, || "g_star not Lagrangian".into());
    t.check(m.complementary, || {
        "g_delta and g_star not complementary".into()
    });
    t.finish("manin-triple", None)
}

/// Four-way equivalence on inversion sets and the weak-order criterion
/// `u ≤ v·w₀ ⇔ Φ_u ∩ Φ_v = ∅`.
pub fn suite_weyl(group: &WeylGroup) -> SuiteResult {
    let w0 = group.long_element();
    let full: u128 = if group.root_system().num_positive() == 128 {
        u128::MAX
    } else {
        (1u128 << group.root_system().num_positive()) - 1
    };
    let disjoint = std::sync::atomic::AtomicUsize::new(0);
    let t = sweep(group, |u, v, t| {
        let (iu, iv) = (group.inversion_mask(u), group.inversion_mask(v));
        let c1 = iu & iv == 0;
        let c2 = iu & !(!iv & full) == 0;
        let c3 = iv & !(!iu & full) == 0;
        let c4 = group.lengths_add(u, v);
        if c1 {
            disjoint.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
        }
        t.check(c1 == c2 && c2 == c3 && c3 == c4, || {
            format!("equivalence at ({}, {})", u.0, v.0)
        });
        let weak = group.weak_leq(u, group.multiply(v, w0));
        t.check(weak == c1, || format!("weak order at ({}, {})", u.0, v.0));
    });
    let n = group.order();
    let note = format!(
        "{} of {} pairs disjoint",
        disjoint.load(std::sync::atomic::Ordering::Relaxed),
        n * n
    );
    t.finish("weyl-equivalences", Some(note))
}

/// `rank_pi` is even, vanishes exactly on disjoint pairs, and agrees with
/// the general formula at `(u⁻¹v, u, v)`.
pub fn suite_rank_pi(group: &WeylGroup) -> SuiteResult {
    sweep(group, |u, v, t| {
        let r = rank_pi(group, u, v);
        t.check(r.is_multiple_of(2), || {
            format!("odd rank at ({}, {})", u.0, v.0)
        });
        t.check((r == 0) == group.disjoint_inversions(u, v), || {
            format!("zero iff disjoint at ({}, {})", u.0, v.0)
        });
        let w = group.multiply(group.inverse(u), v);
        t.check(rank_pi_general(group, w, u, v) == r as i64, || {
            format!("general formula at ({}, {})", u.0, v.0)
        });
    })
    .finish("rank-pi", None)
}

/// For every `(u, v)` and `V` in the battery: `l_{V,u,v}` is Lagrangian, is
/// coisotropic exactly when `Φ_u ∩ Φ_v = ∅`, and when it is, the extracted
/// `(m, m^⊥)` equal their closed forms and are subalgebras.
pub fn suite_main_theorem(
    d: &Double,
    group: &WeylGroup,
    battery: &[(String, Subspace)],
) -> SuiteResult {
    sweep(group, |u, v, t| {
        let disjoint = group.disjoint_inversions(u, v);
        let mut verdicts = Vec::new();
        for (name, vs) in battery {
            let here = || {
                format!(
                    "V={name}, u={}, v={}",
                    group.word_string(u),
                    group.word_string(v)
                )
            };
            let l = d.build_l(group, vs, u, v).expect("V inside h");
            let lag = d.is_lagrangian(&l.space).expect("ambient");
            t.check(lag, || format!("not Lagrangian: {}", here()));
            if !lag {
                continue;
            }
            let co = match d.is_coisotropic(&l.space) {
                Ok(c) => c,
                Err(e) => {
                    t.check(false, || format!("{e}: {}", here()));
                    continue;
                }
            };
            verdicts.push(co);
            t.check(co == disjoint, || {
                format!("verdict {co} vs disjoint {disjoint}: {}", here())
            });
            if co {
                let c = d.extract_coisotropic(&l.space).expect("coisotropic");
                let m = d.closed_form_m(group, vs, u, v).expect("V inside h");
                let mp = d.closed_form_m_perp(group, vs, u, v).expect("V inside h");
                t.check(c.m == m, || format!("m closed form: {}", here()));
                t.check(c.m_perp == mp, || format!("m_perp closed form: {}", here()));
                let md = d.diagonal(&c.m).expect("ambient");
                t.check(d.is_subalgebra(&md).expect("ambient"), || {
                    format!("m not a subalgebra: {}", here())
                });
                t.check(d.is_subalgebra(&c.m_perp).expect("ambient"), || {
                    format!("m_perp not a subalgebra: {}", here())
                });
            }
        }
        t.check(verdicts.windows(2).all(|w| w[0] == w[1]), || {
            format!(
                "verdict depends on V at ({}, {})",
                group.word_string(u),
                group.word_string(v)
            )
        });
    })
    .finish(
        "main-theorem",
        Some(format!("{} subspaces V per pair", battery.len())),
    )
}

/// `z_{u,v}` is Lagrangian, and coisotropic exactly when `Φ_u ∩ Φ_v = ∅` and
/// `(v⁻¹u)² = e`.
pub fn suite_z(d: &Double, group: &WeylGroup) -> SuiteResult {
    sweep(group, |u, v, t| {
        let here = || format!("u={}, v={}", group.word_string(u), group.word_string(v));
        let z = d.build_z(group, u, v).expect("same group");
        let lag = d.is_lagrangian(&z.space).expect("ambient");
        t.check(lag, || format!("z not Lagrangian: {}", here()));
        if !lag {
            return;
        }
        let expect = group.disjoint_inversions(u, v)
            && group.is_involution(group.multiply(group.inverse(v), u));
        match d.is_coisotropic(&z.space) {
            Ok(co) => t.check(co == expect, || {
                format!("z verdict {co}, predicted {expect}: {}", here())
            }),
            Err(e) => t.check(false, || format!("{e}: {}", here())),
        }
    })
    .finish("z-criterion", None)
}

/// Some `u` with `u² ≠ e` has `rank_pi(u, e) = 0` while `z_{u,e}` is not
/// coisotropic. Skipped when every element is an involution.
pub fn suite_z_counterexample(d: &Double, group: &WeylGroup) -> SuiteResult {
    let e = group.identity();
    let Some(u) = group.ids().find(|&u| !group.is_involution(u)) else {
        return SuiteResult::skipped("z-counterexample", "every element is an involution".into());
    };
    let mut t = Tally::default();
    t.check(rank_pi(group, u, e) == 0, || "rank_pi(u, e) nonzero".into());
    let z = d.build_z(group, u, e).expect("same group");
    t.check(d.is_lagrangian(&z.space).expect("ambient"), || {
        "z not Lagrangian".into()
    });
    t.check(!d.is_coisotropic(&z.space).unwrap_or(true), || {
        "z_{u,e} coisotropic".into()
    });
    t.finish(
        "z-counterexample",
        Some(format!("u = {}", group.word_string(u))),
    )
}

/// `s_{V,u,v}` is coisotropic exactly when `u ≤ v` in the weak order.
pub fn suite_s(d: &Double, group: &WeylGroup, battery: &[(String, Subspace)]) -> SuiteResult {
    sweep(group, |u, v, t| {
        let weak = group.weak_leq(u, v);
        for (name, vs) in battery {
            let here = || {
                format!(
                    "V={name}, u={}, v={}",
                    group.word_string(u),
                    group.word_string(v)
                )
            };
            let s = d.build_s(group, vs, u, v).expect("V inside h");
            match d.is_coisotropic(&s.space) {
                Ok(co) => t.check(co == weak, || {
                    format!("s verdict {co}, weak order {weak}: {}", here())
                }),
                Err(e) => t.check(false, || format!("{e}: {}", here())),
            }
        }
    })
    .finish("s-criterion", None)
}

/// For every positive long `β` and both signs: `u_{±β}` matches its closed
/// form, assembles to the expected `l`, is coisotropic, a subalgebra, and
/// even-dimensional.
pub fn suite_zambon(d: &Double, group: &WeylGroup) -> SuiteResult {
    let rs = d.root_system();
    let jobs: Vec<(usize, i8)> = (0..rs.num_positive())
        .filter(|&b| rs.is_long_index(b))
        .flat_map(|b| [(b, 1i8), (b, -1i8)])
        .collect();
    let count = jobs.len() / 2;
    jobs.into_par_iter()
        .map(|(b, sign)| {
            let mut t = Tally::default();
            let here = || format!("beta={}, sign={sign}", rs.root_label(b));
            match zambon_report(d, group, b, sign) {
                Ok(r) => {
                    t.check(r.closed_form_match, || format!("closed form: {}", here()));
                    t.check(r.as_l_match, || format!("as l: {}", here()));
                    t.check(r.coisotropic, || format!("not coisotropic: {}", here()));
                    t.check(r.subalgebra, || format!("not a subalgebra: {}", here()));
                    t.check(r.dim % 2 == 0, || {
                        format!("odd dimension {}: {}", r.dim, here())
                    });
                    if let Some(m) = r.lambda_bivector_match {
                        t.check(m, || format!("bivector closed form: {}", here()));
                    }
                }
                Err(e) => t.check(false, || format!("{e}: {}", here())),
            }
            t
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Tally::default(), Tally::merge)
        .finish("zambon", Some(format!("{count} positive long roots")))
}

/// Knobs for [`verify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VerifyOptions {
    pub seed: u64,
    pub weyl_cap: usize,
    /// Pair sweeps that build subspaces of `d` are skipped above this `|W|`.
    pub sweep_limit: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 0,
            weyl_cap: DEFAULT_WEYL_CAP,
            sweep_limit: DEFAULT_SWEEP_LIMIT,
        }
    }
}

/// Largest `|W|` for which candidate sweeps run by default.
pub const DEFAULT_SWEEP_LIMIT: usize = 200;

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub seed: u64,
    pub dim: usize,
    pub weyl_order: usize,
    pub passed: bool,
    pub suites: Vec<SuiteResult>,
}

/// Runs every suite for one Cartan type.
pub fn verify(rs: RootSystem, opts: VerifyOptions) -> Result<VerifyReport> {
    let rs = Arc::new(rs);
    let group = WeylGroup::enumerate(rs.clone(), opts.weyl_cap)?;
    let g = Arc::new(ChevalleyAlgebra::new(rs.clone()));
    let d = Double::new(g.clone());
    let battery = v_battery(&rs, opts.seed);
    let sweeps_ok = group.order() <= opts.sweep_limit;
    let skip = |name: &str| {
        SuiteResult::skipped(
            name,
            format!(
                "|W| = {} exceeds sweep limit {}",
                group.order(),
                opts.sweep_limit
            ),
        )
    };
    let suites = vec![
        suite_jacobi(&g),
        suite_structure_constants(&g),
        suite_lambda(&g),
        suite_manin(&d),
        suite_weyl(&group),
        suite_rank_pi(&group),
        if sweeps_ok {
            suite_main_theorem(&d, &group, &battery)
        } else {
            skip("main-theorem")
        },
        if sweeps_ok {
            suite_z(&d, &group)
        } else {
            skip("z-criterion")
        },
        suite_z_counterexample(&d, &group),
        if sweeps_ok {
            suite_s(&d, &group, &battery)
        } else {
            skip("s-criterion")
        },
        suite_zambon(&d, &group),
    ];
    Ok(VerifyReport {
        cartan_type: rs.cartan_type().to_string(),
        seed: opts.seed,
        dim: g.dim(),
        weyl_order: group.order(),
        passed: suites.iter().all(SuiteResult::passed),
        suites,
    })
}
