//! Acceptance suite: ten criteria, each checked exactly and reported on one
//! line. Exits nonzero if any criterion fails.

mod oracle;

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::time::Instant;

use coisotropy::bialgebra::{rank_pi, v_battery, Double};
use coisotropy::chevalley::ChevalleyAlgebra;
use coisotropy::linalg::{ratio, Subspace};
use coisotropy::rootsys::RootSystem;
use coisotropy::verify::{
    suite_jacobi, suite_lambda, suite_main_theorem, suite_manin, suite_rank_pi, suite_s,
    suite_structure_constants, suite_weyl, suite_z, suite_z_counterexample, suite_zambon, Status,
    SuiteResult,
};
use coisotropy::weyl::WeylGroup;
use coisotropy::zambon::zambon_subalgebra;

const CHEVALLEY_TYPES: [&str; 6] = ["A1", "A2", "A3", "B2", "C3", "G2"];

struct Setup {
    algebra: Arc<ChevalleyAlgebra>,
    group: WeylGroup,
    double: Double,
}

fn setup(t: &str) -> Setup {
    let rs = Arc::new(RootSystem::parse(t).expect("valid type"));
    let algebra = Arc::new(ChevalleyAlgebra::new(rs.clone()));
    let group = WeylGroup::new(rs).expect("under cap");
    let double = Double::new(algebra.clone());
    Setup {
        algebra,
        group,
        double,
    }
}

/// Collects failures for one criterion.
#[derive(Default)]
struct Outcome {
    problems: Vec<String>,
    details: Vec<String>,
}

impl Outcome {
    fn require(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.problems.push(msg());
        }
    }

    fn suite(&mut self, t: &str, s: &SuiteResult) {
        self.require(s.status == Status::Passed, || {
            format!(
                "{t} {}: {:?} {}/{} failed {:?}",
                s.name, s.status, s.failures, s.checks, s.failed
            )
        });
    }

    fn note(&mut self, s: impl Into<String>) {
        self.details.push(s.into());
    }
}

fn c1_jacobi() -> Outcome {
    let mut o = Outcome::default();
    for t in CHEVALLEY_TYPES {
        let s = setup(t);
        let r = suite_jacobi(&s.algebra);
        o.suite(t, &r);
        let d = s.algebra.dim();
        o.require(r.checks == d * (d - 1) * (d - 2) / 6, || {
            format!("{t}: triple count {}", r.checks)
        });
    }
    let c3 = setup("C3");
    o.require(
        c3.algebra.dim() == 21 && suite_jacobi(&c3.algebra).checks == 1330,
        || "C3 size".into(),
    );
    o.note("C3 1330 triples, G2 364 triples");
    o
}

fn c2_structure_constants() -> Outcome {
    let mut o = Outcome::default();
    for t in CHEVALLEY_TYPES {
        let s = setup(t);
        o.suite(t, &suite_structure_constants(&s.algebra));
    }
    // G2 realizes every |c| ∈ {1, 2, 3}
    let g2 = setup("G2");
    let rs = g2.algebra.root_system().clone();
    let mut seen = BTreeSet::new();
    for a in 0..rs.num_roots() {
        for b in 0..rs.num_roots() {
            if a != b && a != rs.neg_index(b) {
                let c = g2
                    .algebra
                    .structure_constant_index(a, b)
                    .expect("non-proportional");
                if c != 0 {
                    seen.insert(c.abs());
                }
            }
        }
    }
    o.require(seen == BTreeSet::from([1, 2, 3]), || {
        format!("G2 |c| values {seen:?}")
    });
    o
}

fn c3_lambda() -> Outcome {
    let mut o = Outcome::default();
    for t in CHEVALLEY_TYPES.iter().chain(&["F4"]) {
        let s = setup(t);
        o.suite(t, &suite_lambda(&s.algebra));
    }
    // sl₂ by hand: K(E, F) = tr(ad E ad F) = 4
    let a1 = setup("A1");
    o.require(a1.algebra.lambda_index(0) == ratio(1, 4), || {
        "A1 lambda".into()
    });
    o
}

fn c4_manin() -> Outcome {
    let mut o = Outcome::default();
    for t in CHEVALLEY_TYPES.iter().chain(&["F4", "A1xB2"]) {
        let s = setup(t);
        o.suite(t, &suite_manin(&s.double));
        let n = s.algebra.dim();
        o.require(
            s.double.g_delta().dim() == n && s.double.g_star().dim() == n,
            || format!("{t}: dims"),
        );
    }
    o
}

fn c5_weyl() -> Outcome {
    let mut o = Outcome::default();
    for t in ["A1", "A2", "A3", "B2", "G2", "B3", "C3"] {
        let s = setup(t);
        let r = suite_weyl(&s.group);
        o.suite(t, &r);
        let rs = s.group.root_system();
        let cartan = rs.cartan_matrix().to_vec();
        let oracle_w = oracle::weyl_group(&cartan);
        let phi = oracle::roots(&cartan, &oracle_w);
        o.require(oracle_w.len() == s.group.order(), || {
            format!("{t}: |W| oracle")
        });
        // each element's inversion set against the matrix oracle
        for w in s.group.ids() {
            let el = s.group.element(w);
            let r = rs.rank();
            let mut m = vec![vec![0i64; r]; r];
            for j in 0..r {
                let img = rs.root(el.apply_index(rs.simple_index(j))).coords();
                for (row, &x) in m.iter_mut().zip(img) {
                    row[j] = x;
                }
            }
            let expect = oracle::inversion_set(&m, &phi);
            let got: BTreeSet<Vec<i64>> = s
                .group
                .inversion_set(w)
                .iter()
                .map(|a| a.coords().to_vec())
                .collect();
            o.require(expect == got, || {
                format!("{t}: inversion set of {}", s.group.word_string(w))
            });
            o.require(expect.len() == s.group.length(w), || format!("{t}: length"));
        }
        let n = s.group.order();
        let disjoint = oracle::disjoint_pairs(&cartan);
        o.require(
            r.note.as_deref() == Some(&format!("{disjoint} of {} pairs disjoint", n * n)),
            || format!("{t}: disjoint count {:?} vs oracle {disjoint}", r.note),
        );
        if t == "A2" {
            o.require(disjoint == 17, || format!("A2 oracle count {disjoint}"));
            o.note(format!("A2 {disjoint}/36"));
        }
        if t == "G2" || t == "B3" {
            o.note(format!("{t} {} pairs", n * n));
        }
    }
    o
}

fn c6_main_theorem() -> Outcome {
    let mut o = Outcome::default();
    let mut total = 0;
    for t in ["A1", "A2", "B2", "G2"] {
        let s = setup(t);
        let battery = v_battery(s.algebra.root_system(), 0);
        o.require(battery.len() >= 6, || {
            format!("{t}: battery size {}", battery.len())
        });
        let r = suite_main_theorem(&s.double, &s.group, &battery);
        o.suite(t, &r);
        total += s.group.order() * s.group.order() * battery.len();
    }
    o.note(format!("{total} candidates"));
    o
}

fn c7_zambon() -> Outcome {
    let mut o = Outcome::default();
    for t in ["A1", "A2", "A3", "B2", "C3", "G2", "F4"] {
        let s = setup(t);
        let rs = s.algebra.root_system().clone();
        let long: Vec<usize> = (0..rs.num_positive())
            .filter(|&b| rs.is_long_index(b))
            .collect();
        let r = suite_zambon(&s.double, &s.group);
        o.suite(t, &r);
        o.require(r.checks >= 2 * 5 * long.len(), || {
            format!("{t}: {} checks", r.checks)
        });
        for &b in &long {
            for sign in [1, -1] {
                let u = zambon_subalgebra(&s.algebra, b, sign).expect("long positive");
                // 1 + |Φ_{s_β}|, counted on the reflection's inversion set
                let expect = 1 + s.group.length(s.group.reflection(b));
                o.require(u.dim() == expect && u.dim().is_multiple_of(2), || {
                    format!("{t}: dim u at {b}")
                });
            }
        }
        if t == "F4" {
            o.note(format!("F4 {} positive long roots", long.len()));
        }
    }
    o
}

fn c8_z_remark() -> Outcome {
    let mut o = Outcome::default();
    for t in ["A1", "A2", "B2"] {
        let s = setup(t);
        o.suite(t, &suite_z(&s.double, &s.group));
    }
    for t in ["A2", "B2"] {
        let s = setup(t);
        let r = suite_z_counterexample(&s.double, &s.group);
        o.suite(t, &r);
        // cross-check by hand on one element
        let e = s.group.identity();
        let u = s.group.parse_word("s1*s2").expect("word");
        o.require(s.group.multiply(u, u) != e, || {
            "s1*s2 is an involution".into()
        });
        o.require(rank_pi(&s.group, u, e) == 0, || "rank_pi(u,e) != 0".into());
        let z = s.double.build_z(&s.group, u, e).expect("build");
        o.require(
            !s.double.is_coisotropic(&z.space).expect("Lagrangian"),
            || "z_{u,e} coisotropic".into(),
        );
        o.note(format!("{t} {}", r.note.unwrap_or_default()));
    }
    o
}

fn c9_rank_pi() -> Outcome {
    let mut o = Outcome::default();
    for t in ["A1", "A2", "A3", "B2", "G2", "B3"] {
        let s = setup(t);
        o.suite(t, &suite_rank_pi(&s.group));
    }
    // s-criterion rides along: coisotropic s_{V,u,v} exactly when u ≤ v
    for t in ["A1", "A2", "B2"] {
        let s = setup(t);
        let battery: Vec<(String, Subspace)> = v_battery(s.algebra.root_system(), 0);
        o.suite(t, &suite_s(&s.double, &s.group, &battery));
    }
    o
}

fn c10_determinism() -> Outcome {
    let mut o = Outcome::default();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_coiso"))
            .args(["verify", "A2", "--format", "json", "--seed", "0"])
            .output()
            .expect("binary runs")
    };
    let (a, b) = (run(), run());
    o.require(a.status.success() && b.status.success(), || {
        format!("exit {:?} {:?}", a.status, b.status)
    });
    o.require(!a.stdout.is_empty() && a.stdout == b.stdout, || {
        "outputs differ".into()
    });
    o.note(format!("{} bytes", a.stdout.len()));
    o
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("chevalley validity (Jacobi)", c1_jacobi),
        ("structure-constant laws", c2_structure_constants),
        ("lambda law", c3_lambda),
        ("Manin triple", c4_manin),
        ("Weyl equivalences", c5_weyl),
        ("main theorem sweep", c6_main_theorem),
        ("Zambon equivalence", c7_zambon),
        ("z criterion sweep", c8_z_remark),
        ("rank_pi properties", c9_rank_pi),
        ("determinism", c10_determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = f();
        let secs = start.elapsed().as_secs_f64();
        let verdict = if o.problems.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        let extra = if o.details.is_empty() {
            String::new()
        } else {
            format!(" [{}]", o.details.join("; "))
        };
        println!(
            "criterion {:>2} {verdict}: {name} ({secs:.1}s){extra}",
            i + 1
        );
        for p in &o.problems {
            println!("    {p}");
        }
        if !o.problems.is_empty() {
            failed += 1;
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
