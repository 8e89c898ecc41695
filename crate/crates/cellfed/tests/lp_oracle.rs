//! Cross-checks the revised simplex against an independent dense tableau
//! implementation on random bounded LPs, and branch-and-bound against
//! exhaustive enumeration on small random binary programs.

mod common;

use cellfed::mipsolve::{
    solve_lp, solve_milp, LpInstance, LpStatus, MilpInstance, MilpOptions, MilpStatus, Sense,
};
use common::{enumerate_milp, oracle_solve_instance, random_bounded_lp, OracleLp};
use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

#[test]
fn random_lps_match_tableau_oracle() {
    let mut rng = ChaCha12Rng::seed_from_u64(0x5ead_0001);
    let mut optimal = 0;
    for trial in 0..60 {
        let lp = random_bounded_lp(&mut rng, 40, 20);
        let sol = solve_lp(&lp).expect("simplex must not error on these");
        let oracle = oracle_solve_instance(&lp);
        match (sol.status, oracle) {
            (LpStatus::Optimal, OracleLp::Optimal(obj)) => {
                optimal += 1;
                let scale = 1.0 + obj.abs();
                assert!(
                    (sol.objective - obj).abs() <= 1e-8 * scale,
                    "trial {trial}: simplex {} vs oracle {obj}",
                    sol.objective
                );
            }
            (LpStatus::Infeasible, OracleLp::Infeasible) => {}
            (a, b) => panic!("trial {trial}: status mismatch {a:?} vs {b:?}"),
        }
    }
    // construction guarantees feasibility, so every trial must be optimal
    assert_eq!(optimal, 60);
}

fn random_small_milp(rng: &mut impl Rng, n_bin: usize, n_cont: usize, m: usize) -> MilpInstance {
    let n = n_bin + n_cont;
    let c = DVector::from_fn(n, |_, _| rng.gen_range(-2.0..2.0));
    let mut lower = DVector::zeros(n);
    let mut upper = DVector::from_element(n, 1.0);
    for j in n_bin..n {
        lower[j] = 0.0;
        upper[j] = rng.gen_range(0.5..2.0);
    }
    let a = DMatrix::from_fn(m, n, |_, _, | rng.gen_range(-1.0..1.0));
    let mut senses = Vec::with_capacity(m);
    let mut b = DVector::zeros(m);
    for i in 0..m {
        // keep rows satisfiable at the origin so every instance is feasible
        senses.push(Sense::Le);
        b[i] = rng.gen_range(0.2..2.0);
    }
    MilpInstance {
        lp: LpInstance {
            c,
            a,
            senses,
            b,
            lower,
            upper,
        },
        integer_vars: (0..n_bin).collect(),
    }
}

#[test]
fn random_milps_match_enumeration() {
    let mut rng = ChaCha12Rng::seed_from_u64(0x5ead_0002);
    for trial in 0..50 {
        let inst = random_small_milp(&mut rng, 10, 4, 8);
        let sol = solve_milp(&inst, &MilpOptions::default()).unwrap();
        let oracle = enumerate_milp(&inst);
        match (sol.status, oracle) {
            (MilpStatus::Optimal, Some(best)) => {
                assert!(
                    (sol.objective - best).abs() <= 1e-7 * (1.0 + best.abs()),
                    "trial {trial}: bb {} vs enumeration {best}",
                    sol.objective
                );
            }
            (MilpStatus::Infeasible, None) => {}
            (a, b) => panic!("trial {trial}: status mismatch {a:?} vs {b:?}"),
        }
    }
}
