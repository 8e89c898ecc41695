//! Large-scale fading via the 3GPP indoor-factory (sparse clutter, high base
//! station) model, and the MMSE channel-estimate variance.

use nalgebra::DMatrix;
use rand::Rng;
use rand_distr::{Bernoulli, Distribution, Normal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scenario::{HallGeometry, Scenario};

/// Clutter description of the factory hall.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(default)]
pub struct ClutterParams {
    /// Clutter density r, fraction of the floor area.
    pub density: f64,
    /// Typical clutter element size (m).
    pub size_m: f64,
    /// Clutter height (m).
    pub height_m: f64,
}

impl Default for ClutterParams {
    fn default() -> Self {
        // sparse-clutter parameterization
        Self {
            density: 0.2,
            size_m: 10.0,
            height_m: 2.0,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct ChannelParams {
    /// Normalized per-symbol pilot SNR (linear).
    pub pilot_snr: f64,
    /// Receiver noise power (W).
    pub noise_w: f64,
    pub shadowing_enabled: bool,
    /// Lognormal shadowing std dev in dB for LOS links.
    pub shadow_sigma_los_db: f64,
    /// Lognormal shadowing std dev in dB for NLOS links.
    pub shadow_sigma_nlos_db: f64,
    pub clutter: ClutterParams,
}

impl Default for ChannelParams {
    fn default() -> Self {
        // noise: thermal over 20 MHz plus 7 dB noise figure; pilots at 100 mW
        let noise_w = default_noise_w(20e6, 7.0);
        Self {
            pilot_snr: 0.1 / noise_w,
            noise_w,
            shadowing_enabled: true,
            shadow_sigma_los_db: 4.3,
            shadow_sigma_nlos_db: 5.9,
            clutter: ClutterParams::default(),
        }
    }
}

/// Thermal noise power over `bandwidth_hz` with the given noise figure (dB).
pub fn default_noise_w(bandwidth_hz: f64, noise_figure_db: f64) -> f64 {
    let dbm = -174.0 + 10.0 * bandwidth_hz.log10() + noise_figure_db;
    10f64.powf(dbm / 10.0) * 1e-3
}

impl ChannelParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.pilot_snr > 0.0) || !(self.noise_w > 0.0) {
            return Err(Error::Config("pilot_snr and noise_w must be positive".into()));
        }
        if !(self.clutter.density > 0.0 && self.clutter.density < 1.0) {
            return Err(Error::Config("clutter density must lie in (0,1)".into()));
        }
        Ok(())
    }
}

/// Large-scale gains and estimate variances for one snapshot.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChannelRealization {
    /// Linear power gains, K x S.
    pub beta: DMatrix<f64>,
    /// MMSE estimate variances, K x S.
    pub gamma: DMatrix<f64>,
    /// LOS state per link, K x S.
    pub los: DMatrix<bool>,
}

/// LOS probability of the InF-SH subscenario: `exp(-d_2d / k_subsce)` with
/// `k_subsce = -d_clutter/ln(1-r) * (h_bs - h_ut)/(h_c - h_ut)`.
///
/// ```
/// use cellfed::channel::{los_probability, ClutterParams};
/// use cellfed::scenario::HallGeometry;
/// let p = los_probability(0.0, &HallGeometry::default(), &ClutterParams::default()).unwrap();
/// assert_eq!(p, 1.0);
/// ```
pub fn los_probability(d_2d: f64, heights: &HallGeometry, clutter: &ClutterParams) -> Result<f64> {
    assert!(d_2d >= 0.0);
    if clutter.height_m <= heights.ue_height_m {
        return Err(Error::Config(
            "clutter height must exceed UE height for the InF-SH LOS model".into(),
        ));
    }
    let k_subsce = -clutter.size_m / (1.0 - clutter.density).ln()
        * (heights.csp_height_m - heights.ue_height_m)
        / (clutter.height_m - heights.ue_height_m);
    Ok((-d_2d / k_subsce).exp())
}

/// InF path loss in dB. The NLOS branch is lower-bounded by the LOS one, and
/// distances below 1 m are clamped to the model validity floor.
pub fn path_loss_db(d_3d: f64, carrier_hz: f64, los: bool, shadow_db: f64) -> f64 {
    let d = d_3d.max(1.0);
    let f_ghz = carrier_hz / 1e9;
    let pl_los = 31.84 + 21.5 * d.log10() + 19.0 * f_ghz.log10();
    let pl = if los {
        pl_los
    } else {
        pl_los.max(32.4 + 23.0 * d.log10() + 20.0 * f_ghz.log10())
    };
    pl + shadow_db
}

/// MMSE estimate variance `gamma = tau_p*rho_p*beta^2 / (tau_p*rho_p*beta + 1)`.
///
/// ```
/// // tau_p * rho_p * beta = 1 gives gamma = beta / 2
/// let g = cellfed::channel::mmse_variance(1e-6, 10, 1e5);
/// assert!((g - 0.5e-6).abs() < 1e-18);
/// ```
pub fn mmse_variance(beta: f64, tau_p: u32, pilot_snr: f64) -> f64 {
    assert!(beta > 0.0);
    let t = tau_p as f64 * pilot_snr * beta;
    t * beta / (t + 1.0)
}

/// Materializes large-scale gains and estimate variances for every UE-CSP
/// link. LOS states are Bernoulli draws from the LOS probability; shadowing is
/// lognormal in dB when enabled.
pub fn realize_channel(
    scenario: &Scenario,
    params: &ChannelParams,
    rng: &mut impl Rng,
) -> Result<ChannelRealization> {
    params.validate()?;
    let k = scenario.ue_positions.len();
    let s = scenario.csp_positions.len();
    let hall = &scenario.config.hall;
    let mut beta = DMatrix::zeros(k, s);
    let mut gamma = DMatrix::zeros(k, s);
    let mut los = DMatrix::from_element(k, s, false);
    for ki in 0..k {
        for si in 0..s {
            let ue = &scenario.ue_positions[ki];
            let csp = &scenario.csp_positions[si];
            let p_los = los_probability(ue.dist_2d(csp), hall, &params.clutter)?;
            let is_los = Bernoulli::new(p_los)
                .expect("probability in (0,1]")
                .sample(rng);
            let shadow_db = if params.shadowing_enabled {
                let sigma = if is_los {
                    params.shadow_sigma_los_db
                } else {
                    params.shadow_sigma_nlos_db
                };
                Normal::new(0.0, sigma).expect("finite sigma").sample(rng)
            } else {
                0.0
            };
            let pl = path_loss_db(ue.dist_3d(csp), scenario.config.carrier_hz, is_los, shadow_db);
            let b = 10f64.powf(-pl / 10.0);
            beta[(ki, si)] = b;
            gamma[(ki, si)] = mmse_variance(b, scenario.config.pilot_len, params.pilot_snr);
            los[(ki, si)] = is_los;
        }
    }
    Ok(ChannelRealization { beta, gamma, los })
}

impl ChannelRealization {
    /// Dense CSV (row = UE, column = CSP) of one matrix, used for regression
    /// fixtures.
    pub fn matrix_to_csv(m: &DMatrix<f64>) -> String {
        let mut out = String::new();
        for r in 0..m.nrows() {
            let row: Vec<String> = (0..m.ncols()).map(|c| format!("{:e}", m[(r, c)])).collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    pub fn matrix_from_csv(text: &str) -> Result<DMatrix<f64>> {
        let rows: Vec<Vec<f64>> = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                l.split(',')
                    .map(|v| v.trim().parse::<f64>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|e| Error::Config(format!("bad csv number: {e}")))
            })
            .collect::<Result<_>>()?;
        if rows.is_empty() {
            return Err(Error::Config("empty csv matrix".into()));
        }
        let ncols = rows[0].len();
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::ShapeMismatch("ragged csv matrix".into()));
        }
        Ok(DMatrix::from_fn(rows.len(), ncols, |r, c| rows[r][c]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SeedTree;
    use crate::scenario::{build_scenario, ScenarioConfig};
    use proptest::prelude::*;

    fn hall() -> HallGeometry {
        HallGeometry::default()
    }

    #[test]
    fn los_probability_goldens() {
        let cl = ClutterParams::default();
        assert_eq!(los_probability(0.0, &hall(), &cl).unwrap(), 1.0);
        let p5 = los_probability(5.0, &hall(), &cl).unwrap();
        let p15 = los_probability(15.0, &hall(), &cl).unwrap();
        assert!(p5 > p15);
        // k_subsce = (-10/ln 0.8) * (8.5/0.5)
        let k = -10.0 / 0.8f64.ln() * 17.0;
        assert!((k - 761.84).abs() < 0.01);
        let p20 = los_probability(20.0, &hall(), &cl).unwrap();
        assert!((p20 - (-20.0 / k).exp()).abs() < 1e-15);
        assert!((p20 - 0.974).abs() < 1e-3);
    }

    #[test]
    fn los_probability_rejects_low_clutter() {
        let cl = ClutterParams {
            height_m: 1.0,
            ..ClutterParams::default()
        };
        assert!(los_probability(1.0, &hall(), &cl).is_err());
    }

    #[test]
    fn path_loss_goldens() {
        let pl10 = path_loss_db(10.0, 3e9, true, 0.0);
        assert!((pl10 - (31.84 + 21.5 + 19.0 * 3f64.log10())).abs() < 1e-12);
        assert!((pl10 - 62.41).abs() < 0.01);
        let pl1 = path_loss_db(1.0, 3e9, true, 0.0);
        assert!((pl1 - 40.91).abs() < 0.01);
        // clamped below 1 m
        assert_eq!(path_loss_db(0.2, 3e9, true, 0.0), pl1);
        // NLOS dominates LOS
        for d in [1.0, 5.0, 30.0] {
            assert!(path_loss_db(d, 3e9, false, 0.0) >= path_loss_db(d, 3e9, true, 0.0));
        }
    }

    #[test]
    fn path_loss_monotone_in_distance() {
        let mut prev_l = f64::MIN;
        let mut prev_n = f64::MIN;
        for i in 1..200 {
            let d = i as f64 * 0.5;
            let l = path_loss_db(d, 3e9, true, 0.0);
            let n = path_loss_db(d, 3e9, false, 0.0);
            assert!(l >= prev_l && n >= prev_n);
            prev_l = l;
            prev_n = n;
        }
    }

    #[test]
    fn mmse_variance_identities() {
        // tau_p*rho_p*beta = 1 -> gamma = beta/2
        let beta = 1e-7;
        let g = mmse_variance(beta, 10, 1.0 / (10.0 * beta));
        assert!((g - beta / 2.0).abs() / beta < 1e-12);
        // perfect estimation limit
        let g_inf = mmse_variance(beta, 10, 1e30);
        assert!((g_inf - beta).abs() / beta < 1e-9);
        // exact arithmetic oracle for the spec fixture
        let g3 = mmse_variance(1e-8, 12, 1e4);
        let expect = 12.0 * 1e4 * 1e-16 / (12.0 * 1e4 * 1e-8 + 1.0);
        assert!((g3 - expect).abs() / expect < 1e-14);
    }

    #[test]
    fn default_noise_matches_minus_94_dbm() {
        let n = default_noise_w(20e6, 7.0);
        assert!((10.0 * (n * 1e3).log10() - (-93.99)).abs() < 0.01);
        assert!((n - 3.99e-13).abs() < 0.01e-13);
    }

    #[test]
    fn realization_invariants_hold() {
        let sc = build_scenario(&ScenarioConfig {
            num_csps: 8,
            num_ecsps: 2,
            num_ues: 6,
            pilot_len: 4,
            ..ScenarioConfig::default()
        })
        .unwrap();
        let params = ChannelParams::default();
        let tree = SeedTree::new(3);
        for drop in 0..100 {
            let mut rng = tree.indexed_stream("channel", drop);
            let ch = realize_channel(&sc, &params, &mut rng).unwrap();
            for ki in 0..6 {
                for si in 0..8 {
                    let b = ch.beta[(ki, si)];
                    let g = ch.gamma[(ki, si)];
                    assert!(b > 0.0 && g > 0.0 && g <= b);
                }
            }
        }
    }

    #[test]
    fn deterministic_without_shadowing() {
        let sc = build_scenario(&ScenarioConfig {
            num_csps: 6,
            num_ecsps: 2,
            num_ues: 4,
            pilot_len: 2,
            ..ScenarioConfig::default()
        })
        .unwrap();
        let params = ChannelParams {
            shadowing_enabled: false,
            ..ChannelParams::default()
        };
        let tree = SeedTree::new(5);
        let a = realize_channel(&sc, &params, &mut tree.stream("channel")).unwrap();
        let b = realize_channel(&sc, &params, &mut tree.stream("channel")).unwrap();
        assert_eq!(a.beta, b.beta);
        // given identical LOS flags, beta is a pure function of geometry
        for ki in 0..4 {
            for si in 0..6 {
                if a.los[(ki, si)] == b.los[(ki, si)] {
                    assert_eq!(a.beta[(ki, si)], b.beta[(ki, si)]);
                }
            }
        }
    }

    #[test]
    fn nearest_csp_has_largest_gain_when_all_los() {
        let sc = build_scenario(&ScenarioConfig {
            num_csps: 6,
            num_ecsps: 2,
            num_ues: 4,
            pilot_len: 2,
            ..ScenarioConfig::default()
        })
        .unwrap();
        let params = ChannelParams {
            shadowing_enabled: false,
            ..ChannelParams::default()
        };
        let tree = SeedTree::new(11);
        let ch = realize_channel(&sc, &params, &mut tree.stream("channel")).unwrap();
        for ki in 0..4 {
            if !(0..6).all(|si| ch.los[(ki, si)]) {
                continue;
            }
            let nearest = (0..6)
                .min_by(|&a, &b| {
                    sc.ue_positions[ki]
                        .dist_3d(&sc.csp_positions[a])
                        .partial_cmp(&sc.ue_positions[ki].dist_3d(&sc.csp_positions[b]))
                        .unwrap()
                })
                .unwrap();
            let best = (0..6)
                .max_by(|&a, &b| ch.beta[(ki, a)].partial_cmp(&ch.beta[(ki, b)]).unwrap())
                .unwrap();
            assert_eq!(nearest, best);
        }
    }

    #[test]
    fn matrix_csv_roundtrip() {
        let m = DMatrix::from_fn(3, 4, |r, c| (r * 4 + c) as f64 * 1.5e-9);
        let text = ChannelRealization::matrix_to_csv(&m);
        let back = ChannelRealization::matrix_from_csv(&text).unwrap();
        assert_eq!(m, back);
    }

    proptest! {
        #[test]
        fn gamma_monotone_in_pilot_snr(beta in 1e-12f64..1e-3, snr in 1e2f64..1e10) {
            let g1 = mmse_variance(beta, 12, snr);
            let g2 = mmse_variance(beta, 12, snr * 2.0);
            prop_assert!(g2 > g1);
            prop_assert!(g2 <= beta);
        }

        #[test]
        fn los_probability_in_unit_interval(d in 0.0f64..500.0) {
            let p = los_probability(d, &hall(), &ClutterParams::default()).unwrap();
            prop_assert!(p > 0.0 && p <= 1.0);
        }
    }
}
