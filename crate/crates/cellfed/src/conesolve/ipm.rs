//! Primal-dual interior-point method for cone programs
//!
//! ```text
//! minimize    c'x
//! subject to  G x + s = h,   s in K,
//! ```
//!
//! where K is a product of a nonnegative orthant and second-order cones.
//! Mehrotra-style predictor-corrector with Nesterov-Todd scaling; dense
//! linear algebra sized for instances with at most a few hundred variables.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// Cone layout: first `nonneg` scalar rows, then one block per entry of
/// `socs` (each block dimension >= 1, first coordinate is the cone "radius").
#[derive(Debug, Clone)]
pub struct ConeLayout {
    pub nonneg: usize,
    pub socs: Vec<usize>,
}

impl ConeLayout {
    pub fn dim(&self) -> usize {
        self.nonneg + self.socs.iter().sum::<usize>()
    }

    /// Barrier degree: one per scalar row plus one per second-order cone.
    pub fn degree(&self) -> usize {
        self.nonneg + self.socs.len()
    }

    fn identity(&self) -> DVector<f64> {
        let mut e = DVector::zeros(self.dim());
        for i in 0..self.nonneg {
            e[i] = 1.0;
        }
        let mut at = self.nonneg;
        for &p in &self.socs {
            e[at] = 1.0;
            at += p;
        }
        e
    }

    /// Smallest "eigenvalue": min coordinate on the orthant, `u0 - |u1|` on
    /// each second-order cone.
    fn min_eig(&self, u: &DVector<f64>) -> f64 {
        let mut m = f64::INFINITY;
        for i in 0..self.nonneg {
            m = m.min(u[i]);
        }
        let mut at = self.nonneg;
        for &p in &self.socs {
            let u1 = u.rows(at + 1, p - 1);
            m = m.min(u[at] - u1.norm());
            at += p;
        }
        m
    }

    /// Smallest per-block complementarity product: `s_i z_i` on the orthant,
    /// the smaller Jordan eigenvalue of the block product on each SOC.
    fn min_product(&self, s: &DVector<f64>, z: &DVector<f64>) -> f64 {
        let mut m = f64::INFINITY;
        for i in 0..self.nonneg {
            m = m.min(s[i] * z[i]);
        }
        let mut at = self.nonneg;
        for &p in &self.socs {
            let sb = s.rows(at, p);
            let zb = z.rows(at, p);
            let w0 = sb.dot(&zb);
            let mut w1 = DVector::zeros(p - 1);
            for i in 0..p - 1 {
                w1[i] = sb[0] * zb[i + 1] + zb[0] * sb[i + 1];
            }
            m = m.min(w0 - w1.norm());
            at += p;
        }
        m
    }

    /// Largest step t such that u + a*du stays in K for all a in [0, t].
    fn max_step(&self, u: &DVector<f64>, du: &DVector<f64>) -> f64 {
        let mut t = f64::INFINITY;
        for i in 0..self.nonneg {
            if du[i] < 0.0 {
                t = t.min(-u[i] / du[i]);
            }
        }
        let mut at = self.nonneg;
        for &p in &self.socs {
            let u0 = u[at];
            let d0 = du[at];
            let u1 = u.rows(at + 1, p - 1);
            let d1 = du.rows(at + 1, p - 1);
            // roots of (u0 + t d0)^2 - |u1 + t d1|^2 = 0
            let a = d0 * d0 - d1.norm_squared();
            let b = 2.0 * (u0 * d0 - u1.dot(&d1));
            let c = u0 * u0 - u1.norm_squared();
            t = t.min(smallest_positive_root(a, b, c));
            at += p;
        }
        t
    }
}

fn smallest_positive_root(a: f64, b: f64, c: f64) -> f64 {
    // c > 0 for an interior point; the boundary is hit at the smallest
    // positive root, if any.
    let eps = 1e-300;
    if a.abs() < eps {
        if b < -eps {
            return (-c / b).max(0.0);
        }
        return f64::INFINITY;
    }
    let disc = b * b - 4.0 * a * c;
    if disc < 0.0 {
        if a > 0.0 {
            return f64::INFINITY;
        }
        // a < 0 with no real roots cannot happen for c > 0
        return f64::INFINITY;
    }
    let sq = disc.sqrt();
    // numerically stable pair
    let q = -0.5 * (b + b.signum() * sq);
    let mut roots = [f64::INFINITY; 2];
    if q.abs() > eps {
        roots[0] = c / q;
    }
    roots[1] = q / a;
    let mut best = f64::INFINITY;
    for r in roots {
        if r > 0.0 && r < best {
            best = r;
        }
    }
    best
}

/// Nesterov-Todd scaling state. The orthant part is a diagonal; each SOC
/// block is W = eta * (2 v v' - J) with J(v) = 1.
struct NtScaling {
    diag: Vec<f64>,
    soc_eta: Vec<f64>,
    soc_v: Vec<DVector<f64>>,
    lambda: DVector<f64>,
}

fn jnorm(u: &DVector<f64>) -> f64 {
    let u1 = u.rows(1, u.len() - 1);
    (u[0] * u[0] - u1.norm_squared()).max(0.0).sqrt()
}

fn compute_scaling(cone: &ConeLayout, s: &DVector<f64>, z: &DVector<f64>) -> Result<NtScaling> {
    let mut diag = Vec::with_capacity(cone.nonneg);
    let mut lambda = DVector::zeros(cone.dim());
    for i in 0..cone.nonneg {
        if s[i] <= 0.0 || z[i] <= 0.0 {
            return Err(Error::Numerical {
                context: "nt-scaling".into(),
                detail: "iterate left the cone interior".into(),
            });
        }
        diag.push((s[i] / z[i]).sqrt());
        lambda[i] = (s[i] * z[i]).sqrt();
    }
    let mut soc_eta = Vec::with_capacity(cone.socs.len());
    let mut soc_v = Vec::with_capacity(cone.socs.len());
    let mut at = cone.nonneg;
    for &p in &cone.socs {
        let sb = s.rows(at, p).into_owned();
        let zb = z.rows(at, p).into_owned();
        let a = jnorm(&sb);
        let b = jnorm(&zb);
        if a <= 0.0 || b <= 0.0 {
            return Err(Error::Numerical {
                context: "nt-scaling".into(),
                detail: "soc iterate left the cone interior".into(),
            });
        }
        let sbar = &sb / a;
        let zbar = &zb / b;
        let gamma = ((1.0 + sbar.dot(&zbar)) / 2.0).sqrt();
        // w = (sbar + J zbar) / (2 gamma), then v = Jordan square root of w
        let mut w = sbar.clone();
        w[0] += zbar[0];
        for i in 1..p {
            w[i] -= zbar[i];
        }
        w /= 2.0 * gamma;
        let mut v = w.clone();
        v[0] += 1.0;
        v /= (2.0 * v[0]).sqrt();
        let eta = (a / b).sqrt();

        // lambda block = W z
        let lam = apply_soc(&v, eta, &zb);
        lambda.rows_mut(at, p).copy_from(&lam);
        soc_eta.push(eta);
        soc_v.push(v);
        at += p;
    }
    Ok(NtScaling {
        diag,
        soc_eta,
        soc_v,
        lambda,
    })
}

/// Applies eta * (2 v v' - J) to a block vector.
fn apply_soc(v: &DVector<f64>, eta: f64, u: &DVector<f64>) -> DVector<f64> {
    let vu = v.dot(u);
    let mut out = v * (2.0 * vu);
    out[0] -= u[0];
    for i in 1..u.len() {
        out[i] += u[i];
    }
    out * eta
}

/// Applies the inverse scaling (1/eta) * (2 (Jv)(Jv)' - J).
fn apply_soc_inv(v: &DVector<f64>, eta: f64, u: &DVector<f64>) -> DVector<f64> {
    let mut jv = v.clone();
    for i in 1..jv.len() {
        jv[i] = -jv[i];
    }
    let vu = jv.dot(u);
    let mut out = jv * (2.0 * vu);
    out[0] -= u[0];
    for i in 1..u.len() {
        out[i] += u[i];
    }
    out / eta
}

impl NtScaling {
    fn apply(&self, cone: &ConeLayout, u: &DVector<f64>) -> DVector<f64> {
        let mut out = DVector::zeros(u.len());
        for i in 0..cone.nonneg {
            out[i] = self.diag[i] * u[i];
        }
        let mut at = cone.nonneg;
        for (k, &p) in cone.socs.iter().enumerate() {
            let ub = u.rows(at, p).into_owned();
            out.rows_mut(at, p)
                .copy_from(&apply_soc(&self.soc_v[k], self.soc_eta[k], &ub));
            at += p;
        }
        out
    }

    fn apply_inv(&self, cone: &ConeLayout, u: &DVector<f64>) -> DVector<f64> {
        let mut out = DVector::zeros(u.len());
        for i in 0..cone.nonneg {
            out[i] = u[i] / self.diag[i];
        }
        let mut at = cone.nonneg;
        for (k, &p) in cone.socs.iter().enumerate() {
            let ub = u.rows(at, p).into_owned();
            out.rows_mut(at, p)
                .copy_from(&apply_soc_inv(&self.soc_v[k], self.soc_eta[k], &ub));
            at += p;
        }
        out
    }

    /// Dense W^2 (symmetric positive definite), block diagonal.
    fn w2_dense(&self, cone: &ConeLayout) -> DMatrix<f64> {
        let m = cone.dim();
        let mut out = DMatrix::zeros(m, m);
        for i in 0..cone.nonneg {
            out[(i, i)] = self.diag[i] * self.diag[i];
        }
        let mut at = cone.nonneg;
        for (k, &p) in cone.socs.iter().enumerate() {
            let v = &self.soc_v[k];
            let eta = self.soc_eta[k];
            let mut w = DMatrix::zeros(p, p);
            for i in 0..p {
                for j in 0..p {
                    let jj = if i == j {
                        if i == 0 {
                            1.0
                        } else {
                            -1.0
                        }
                    } else {
                        0.0
                    };
                    w[(i, j)] = eta * (2.0 * v[i] * v[j] - jj);
                }
            }
            let w2 = &w * &w;
            out.view_mut((at, at), (p, p)).copy_from(&w2);
            at += p;
        }
        out
    }
}

/// Jordan product u o w per cone block.
fn jordan_mul(cone: &ConeLayout, u: &DVector<f64>, w: &DVector<f64>) -> DVector<f64> {
    let mut out = DVector::zeros(u.len());
    for i in 0..cone.nonneg {
        out[i] = u[i] * w[i];
    }
    let mut at = cone.nonneg;
    for &p in &cone.socs {
        let ub = u.rows(at, p);
        let wb = w.rows(at, p);
        out[at] = ub.dot(&wb);
        for i in 1..p {
            out[at + i] = ub[0] * wb[i] + wb[0] * ub[i];
        }
        at += p;
    }
    out
}

/// Solves lambda o u = d for u (arrow-matrix inverse on SOC blocks).
fn jordan_div(cone: &ConeLayout, lambda: &DVector<f64>, d: &DVector<f64>) -> DVector<f64> {
    let mut out = DVector::zeros(d.len());
    for i in 0..cone.nonneg {
        out[i] = d[i] / lambda[i];
    }
    let mut at = cone.nonneg;
    for &p in &cone.socs {
        let l0 = lambda[at];
        let l1 = lambda.rows(at + 1, p - 1);
        let d0 = d[at];
        let d1 = d.rows(at + 1, p - 1);
        let det = l0 * l0 - l1.norm_squared();
        let u0 = (l0 * d0 - l1.dot(&d1)) / det;
        out[at] = u0;
        for i in 0..p - 1 {
            out[at + 1 + i] = (d1[i] - u0 * l1[i]) / l0;
        }
        at += p;
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum ConeStatus {
    Optimal,
    MaxIter,
    NumericalFailure,
}

#[derive(Debug, Clone)]
pub struct ConeSolution {
    pub x: DVector<f64>,
    pub z: DVector<f64>,
    pub s: DVector<f64>,
    pub objective: f64,
    pub status: ConeStatus,
    pub iterations: usize,
    /// Worst of the primal and dual residual norms at exit.
    pub kkt_residual: f64,
    /// Relative duality gap at exit.
    pub rel_gap: f64,
}

#[derive(Debug, Clone, Copy)]
pub struct ConeOptions {
    pub max_iter: usize,
    pub tol_feas: f64,
    pub tol_rel_gap: f64,
    pub step_frac: f64,
}

impl Default for ConeOptions {
    fn default() -> Self {
        Self {
            max_iter: 100,
            tol_feas: 1e-9,
            tol_rel_gap: 1e-8,
            step_frac: 0.99,
        }
    }
}

/// Solves min c'x s.t. Gx + s = h, s in K.
pub fn solve_cone(
    c: &DVector<f64>,
    g: &DMatrix<f64>,
    h: &DVector<f64>,
    cone: &ConeLayout,
    opts: &ConeOptions,
) -> Result<ConeSolution> {
    let n = c.len();
    let m = cone.dim();
    assert_eq!(g.nrows(), m);
    assert_eq!(g.ncols(), n);
    if n == 0 {
        return Ok(ConeSolution {
            x: DVector::zeros(0),
            z: DVector::zeros(m),
            s: h.clone(),
            objective: 0.0,
            status: if cone.min_eig(h) >= 0.0 {
                ConeStatus::Optimal
            } else {
                ConeStatus::NumericalFailure
            },
            iterations: 0,
            kkt_residual: 0.0,
            rel_gap: 0.0,
        });
    }

    // least-squares initialization, pushed strictly inside the cone
    let gtg = g.transpose() * g;
    let lu = gtg.clone().lu();
    let x0 = lu
        .solve(&(g.transpose() * h))
        .ok_or_else(|| num_err("init", "G'G singular"))?;
    let mut s = h - g * &x0;
    let alpha_p = -cone.min_eig(&s);
    if alpha_p >= -1e-8 {
        s += cone.identity() * (1.0 + alpha_p);
    }
    let mut z = -lu
        .solve(&c)
        .map(|t| g * t)
        .ok_or_else(|| num_err("init", "G'G singular"))?;
    let alpha_d = -cone.min_eig(&z);
    if alpha_d >= -1e-8 {
        z += cone.identity() * (1.0 + alpha_d);
    }
    let mut x = x0;

    let e = cone.identity();
    let deg = cone.degree() as f64;
    let norm_c = c.norm().max(1.0);
    let norm_h = h.norm().max(1.0);

    let mut best: Option<ConeSolution> = None;
    for iter in 0..opts.max_iter {
        let res_x = g.transpose() * &z + c;
        let res_z = g * &x + &s - h;
        let gap = s.dot(&z);
        let obj = c.dot(&x);
        let pres = res_z.norm() / norm_h;
        let dres = res_x.norm() / norm_c;
        let rel_gap = gap / obj.abs().max(1.0);
        if !gap.is_finite() || !pres.is_finite() || !dres.is_finite() {
            return Err(num_err("ipm", "non-finite iterate"));
        }

        let snapshot = ConeSolution {
            x: x.clone(),
            z: z.clone(),
            s: s.clone(),
            objective: obj,
            status: ConeStatus::MaxIter,
            iterations: iter,
            kkt_residual: pres.max(dres),
            rel_gap,
        };
        if best
            .as_ref()
            .map(|b| snapshot.kkt_residual.max(snapshot.rel_gap) < b.kkt_residual.max(b.rel_gap))
            .unwrap_or(true)
        {
            best = Some(snapshot);
        }

        if pres < opts.tol_feas && dres < opts.tol_feas && rel_gap < opts.tol_rel_gap {
            let mut out = best.expect("snapshot stored");
            out.status = ConeStatus::Optimal;
            return Ok(out);
        }

        let scaling = match compute_scaling(cone, &s, &z) {
            Ok(sc) => sc,
            // boundary breakdown: fall back to the best iterate so far
            Err(_) => break,
        };
        let mu = gap / deg;

        // augmented KKT matrix [0 G'; G -W^2], factored once per iteration.
        // Partial-pivot LU tolerates the near-singular scaling blocks that
        // arise close to the optimum far better than normal equations.
        let w2 = scaling.w2_dense(cone);
        let mut aug = DMatrix::zeros(n + m, n + m);
        aug.view_mut((0, n), (n, m)).copy_from(&g.transpose());
        aug.view_mut((n, 0), (m, n)).copy_from(g);
        aug.view_mut((n, n), (m, m)).copy_from(&(-&w2));
        let lu = aug.lu();

        let solve_once = |bx: &DVector<f64>, bs: &DVector<f64>, d: &DVector<f64>| {
            let w_ld = scaling.apply(cone, &jordan_div(cone, &scaling.lambda, d));
            let bz_tilde = bs - &w_ld;
            let mut rhs = DVector::zeros(n + m);
            rhs.rows_mut(0, n).copy_from(bx);
            rhs.rows_mut(n, m).copy_from(&bz_tilde);
            let sol = lu.solve(&rhs);
            match sol {
                Some(sol) => {
                    let dx = sol.rows(0, n).into_owned();
                    let dz = sol.rows(n, m).into_owned();
                    let ds = bs - g * &dx;
                    Some((dx, dz, ds))
                }
                None => None,
            }
        };
        let kkt_res = |bx: &DVector<f64>,
                       bs: &DVector<f64>,
                       d: &DVector<f64>,
                       dx: &DVector<f64>,
                       dz: &DVector<f64>,
                       ds: &DVector<f64>| {
            let r1 = bx - g.transpose() * dz;
            let r2 = bs - (g * dx + ds);
            let r3 = d - jordan_mul(
                cone,
                &scaling.lambda,
                &(scaling.apply(cone, dz) + scaling.apply_inv(cone, ds)),
            );
            (r1.clone(), r2.clone(), r3.clone(), r1.norm() + r2.norm() + r3.norm())
        };
        // guarded iterative refinement: keep a correction only if it
        // actually shrinks the residual of the full three-block system
        let solve_kkt = |bx: &DVector<f64>, bs: &DVector<f64>, d: &DVector<f64>| {
            let (mut dx, mut dz, mut ds) = solve_once(bx, bs, d)?;
            let (mut r1, mut r2, mut r3, mut res) = kkt_res(bx, bs, d, &dx, &dz, &ds);
            for _ in 0..2 {
                let Some((cx, cz, cs)) = solve_once(&r1, &r2, &r3) else {
                    break;
                };
                let nx = &dx + &cx;
                let nz = &dz + &cz;
                let ns = &ds + &cs;
                let (nr1, nr2, nr3, nres) = kkt_res(bx, bs, d, &nx, &nz, &ns);
                if nres < res {
                    dx = nx;
                    dz = nz;
                    ds = ns;
                    r1 = nr1;
                    r2 = nr2;
                    r3 = nr3;
                    res = nres;
                } else {
                    break;
                }
            }
            Some((dx, dz, ds))
        };

        // step limits are computed on the scaled iterate lambda, which is
        // balanced even when s or z sit near the cone boundary
        let step_limit = |ds: &DVector<f64>, dz: &DVector<f64>| {
            let ds_scaled = scaling.apply_inv(cone, ds);
            let dz_scaled = scaling.apply(cone, dz);
            cone.max_step(&scaling.lambda, &ds_scaled)
                .min(cone.max_step(&scaling.lambda, &dz_scaled))
        };

        // predictor
        let bx = -&res_x;
        let bs = -&res_z;
        let d_aff = -jordan_mul(cone, &scaling.lambda, &scaling.lambda);
        let Some((_dx_a, dz_a, ds_a)) = solve_kkt(&bx, &bs, &d_aff) else {
            break;
        };
        let alpha_aff = step_limit(&ds_a, &dz_a).min(1.0);
        let gap_aff = (&s + &ds_a * alpha_aff).dot(&(&z + &dz_a * alpha_aff));
        let sigma = (gap_aff / gap).clamp(0.0, 1.0).powi(3);

        // corrector
        let wi_ds = scaling.apply_inv(cone, &ds_a);
        let w_dz = scaling.apply(cone, &dz_a);
        let d = &d_aff - jordan_mul(cone, &wi_ds, &w_dz) + &e * (sigma * mu);
        let Some((dx, dz, ds)) = solve_kkt(&bx, &bs, &d) else {
            break;
        };

        let alpha0 = (opts.step_frac * step_limit(&ds, &dz)).min(1.0);
        if !alpha0.is_finite() || alpha0 <= 0.0 {
            break;
        }
        // advisory centrality safeguard: prefer a shorter step if it keeps
        // the smallest complementarity pair from collapsing relative to the
        // average, which would make the next scaling matrix near-singular
        const NEIGHBORHOOD: f64 = 1e-6;
        let mut alpha = alpha0;
        for attempt in 0..12 {
            let s_try = &s + &ds * alpha;
            let z_try = &z + &dz * alpha;
            let mu_try = s_try.dot(&z_try) / deg;
            if cone.min_product(&s_try, &z_try) >= NEIGHBORHOOD * mu_try {
                break;
            }
            if attempt == 11 {
                alpha = alpha0; // neighborhood unreachable; take the full step
            } else {
                alpha *= 0.7;
            }
        }
        x += &dx * alpha;
        s += &ds * alpha;
        z += &dz * alpha;
        if std::env::var("IPM_TRACE").is_ok() {
            let r1 = (&bx - g.transpose() * &dz).norm();
            let r2 = (&bs - (g * &dx + &ds)).norm();
            let r3 = (&d - jordan_mul(
                cone,
                &scaling.lambda,
                &(scaling.apply(cone, &dz) + scaling.apply_inv(cone, &ds)),
            ))
            .norm();
            eprintln!(
                "it {iter} pres {pres:.2e} dres {dres:.2e} gap {gap:.2e} sigma {sigma:.2e} alpha {alpha:.3} mineig s {:.2e} z {:.2e} | dir res {r1:.1e} {r2:.1e} {r3:.1e} minprod {:.1e} mu {mu:.1e}",
                cone.min_eig(&s),
                cone.min_eig(&z),
                cone.min_product(&s, &z),
            );
        }
    }

    // iteration cap or breakdown: grade the best iterate against the
    // looser acceptance thresholds before calling it optimal
    let mut out = best.ok_or_else(|| num_err("ipm", "no iterate produced"))?;
    if out.kkt_residual < 1e-8 && out.rel_gap < 1e-7 {
        out.status = ConeStatus::Optimal;
    }
    Ok(out)
}

fn num_err(context: &str, detail: &str) -> Error {
    Error::Numerical {
        context: context.into(),
        detail: detail.into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vec(v: &[f64]) -> DVector<f64> {
        DVector::from_column_slice(v)
    }

    #[test]
    fn scaling_satisfies_nt_identity() {
        // W z == W^{-1} s on a random-ish interior pair
        let cone = ConeLayout {
            nonneg: 2,
            socs: vec![3],
        };
        let s = vec(&[0.7, 2.1, 2.0, 0.3, -0.9]);
        let z = vec(&[1.3, 0.4, 1.5, -0.2, 0.8]);
        let sc = compute_scaling(&cone, &s, &z).unwrap();
        let wz = sc.apply(&cone, &z);
        let wis = sc.apply_inv(&cone, &s);
        assert!((&wz - &wis).norm() < 1e-12, "{wz:?} vs {wis:?}");
        assert!((&wz - &sc.lambda).norm() < 1e-12);
    }

    #[test]
    fn inverse_scaling_roundtrips() {
        let cone = ConeLayout {
            nonneg: 1,
            socs: vec![4],
        };
        let s = vec(&[0.5, 3.0, 1.0, -0.5, 0.2]);
        let z = vec(&[2.0, 1.1, 0.3, 0.3, -0.1]);
        let sc = compute_scaling(&cone, &s, &z).unwrap();
        let u = vec(&[0.3, -1.0, 0.2, 0.5, 1.7]);
        let back = sc.apply_inv(&cone, &sc.apply(&cone, &u));
        assert!((&back - &u).norm() < 1e-12);
    }

    #[test]
    fn simple_lp_in_cone_form() {
        // min x0 + x1 s.t. x0 >= 1, x1 >= 2 (as -x <= -bound)
        let c = vec(&[1.0, 1.0]);
        let g = DMatrix::from_row_slice(2, 2, &[-1.0, 0.0, 0.0, -1.0]);
        let h = vec(&[-1.0, -2.0]);
        let cone = ConeLayout {
            nonneg: 2,
            socs: vec![],
        };
        let sol = solve_cone(&c, &g, &h, &cone, &ConeOptions::default()).unwrap();
        assert_eq!(sol.status, ConeStatus::Optimal);
        assert!((sol.x[0] - 1.0).abs() < 1e-7);
        assert!((sol.x[1] - 2.0).abs() < 1e-7);
        assert!((sol.objective - 3.0).abs() < 1e-7);
    }

    #[test]
    fn norm_constraint_projection() {
        // min -x0 s.t. ||x|| <= 1 (soc rows), plus box |x_i| <= 2
        // optimum x = (1, 0)
        let c = vec(&[-1.0, 0.0]);
        // rows: nonneg: x0 <= 2, x1 <= 2, -x0 <= 2, -x1 <= 2
        // soc block dim 3: s = (1, x0, x1) must satisfy ||(x0,x1)|| <= 1
        let mut g = DMatrix::zeros(7, 2);
        let mut h = DVector::zeros(7);
        g[(0, 0)] = 1.0;
        h[0] = 2.0;
        g[(1, 1)] = 1.0;
        h[1] = 2.0;
        g[(2, 0)] = -1.0;
        h[2] = 2.0;
        g[(3, 1)] = -1.0;
        h[3] = 2.0;
        h[4] = 1.0; // radius row: s0 = 1
        g[(5, 0)] = -1.0; // s1 = x0
        g[(6, 1)] = -1.0; // s2 = x1
        let cone = ConeLayout {
            nonneg: 4,
            socs: vec![3],
        };
        let sol = solve_cone(&c, &g, &h, &cone, &ConeOptions::default()).unwrap();
        assert_eq!(sol.status, ConeStatus::Optimal);
        assert!((sol.x[0] - 1.0).abs() < 1e-6, "x = {:?}", sol.x);
        assert!(sol.x[1].abs() < 1e-6);
    }

    #[test]
    fn soc_tilted_objective() {
        // min -x0 - x1 s.t. ||(x0, x1)|| <= sqrt(2); optimum (1, 1)
        let c = vec(&[-1.0, -1.0]);
        let mut g = DMatrix::zeros(3, 2);
        let mut h = DVector::zeros(3);
        h[0] = 2f64.sqrt();
        g[(1, 0)] = -1.0;
        g[(2, 1)] = -1.0;
        let cone = ConeLayout {
            nonneg: 0,
            socs: vec![3],
        };
        let sol = solve_cone(&c, &g, &h, &cone, &ConeOptions::default()).unwrap();
        assert_eq!(sol.status, ConeStatus::Optimal);
        assert!((sol.x[0] - 1.0).abs() < 1e-6);
        assert!((sol.x[1] - 1.0).abs() < 1e-6);
    }

    #[test]
    fn max_step_hits_boundary() {
        let cone = ConeLayout {
            nonneg: 0,
            socs: vec![3],
        };
        let u = vec(&[1.0, 0.0, 0.0]);
        let du = vec(&[0.0, 1.0, 0.0]);
        let t = cone.max_step(&u, &du);
        assert!((t - 1.0).abs() < 1e-12);
    }
}
