//! Reproducible indoor-factory deployments: CSP grid on the ceiling, a
//! disjoint ECSP partition, and uniform random UE drops.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::SeedTree;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Point3 {
    pub fn dist_2d(&self, other: &Point3) -> f64 {
        ((self.x - other.x).powi(2) + (self.y - other.y).powi(2)).sqrt()
    }

    pub fn dist_3d(&self, other: &Point3) -> f64 {
        ((self.x - other.x).powi(2) + (self.y - other.y).powi(2) + (self.z - other.z).powi(2))
            .sqrt()
    }
}

/// Rectangular hall with ceiling-mounted CSPs.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(default)]
pub struct HallGeometry {
    pub width_m: f64,
    pub length_m: f64,
    pub height_m: f64,
    pub csp_height_m: f64,
    pub ue_height_m: f64,
}

impl Default for HallGeometry {
    fn default() -> Self {
        Self {
            width_m: 12.0,
            length_m: 20.0,
            height_m: 10.0,
            csp_height_m: 10.0,
            ue_height_m: 1.5,
        }
    }
}

impl HallGeometry {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("width_m", self.width_m),
            ("length_m", self.length_m),
            ("height_m", self.height_m),
            ("csp_height_m", self.csp_height_m),
            ("ue_height_m", self.ue_height_m),
        ] {
            if !(v > 0.0) {
                return Err(Error::Config(format!("hall.{name} must be positive")));
            }
        }
        if self.csp_height_m > self.height_m {
            return Err(Error::Config("csp_height_m exceeds hall height".into()));
        }
        if self.ue_height_m >= self.csp_height_m {
            return Err(Error::Config("ue_height_m must be below csp_height_m".into()));
        }
        Ok(())
    }

    pub fn contains(&self, p: &Point3) -> bool {
        (0.0..=self.width_m).contains(&p.x)
            && (0.0..=self.length_m).contains(&p.y)
            && (0.0..=self.height_m).contains(&p.z)
    }
}

/// Full deployment configuration for one snapshot.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct ScenarioConfig {
    pub hall: HallGeometry,
    /// Number of CSPs, S.
    pub num_csps: u32,
    /// Number of ECSPs, S-bar.
    pub num_ecsps: u32,
    /// Antennas per CSP, M.
    pub antennas_per_csp: u32,
    /// Number of UEs, K.
    pub num_ues: u32,
    /// Maximum number of federations, F.
    pub num_federations: u32,
    /// Pilot symbols per coherence block.
    pub pilot_len: u32,
    /// Channel uses per coherence block.
    pub coherence_len: u32,
    /// Carrier frequency (Hz).
    pub carrier_hz: f64,
    /// Requested downlink rate per UE (bit/s).
    pub rate_thr_bps: f64,
    /// Master seed for all randomness consumed while building and solving.
    pub seed: u64,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        Self {
            hall: HallGeometry::default(),
            num_csps: 30,
            num_ecsps: 5,
            antennas_per_csp: 16,
            num_ues: 24,
            num_federations: 2,
            pilot_len: 12,
            coherence_len: 200,
            carrier_hz: 3e9,
            rate_thr_bps: 20e6,
            seed: 1,
        }
    }
}

impl ScenarioConfig {
    pub fn validate(&self) -> Result<()> {
        self.hall.validate()?;
        if self.num_csps == 0 || self.num_ues == 0 || self.num_federations == 0 {
            return Err(Error::Config("counts must be >= 1".into()));
        }
        if self.num_ecsps == 0 || self.num_ecsps > self.num_csps {
            return Err(Error::Config(
                "num_ecsps must be in [1, num_csps] so each ECSP gets at least one CSP".into(),
            ));
        }
        if self.antennas_per_csp == 0 {
            return Err(Error::Config("antennas_per_csp must be >= 1".into()));
        }
        if self.pilot_len >= self.coherence_len {
            return Err(Error::Config("pilot_len must be < coherence_len".into()));
        }
        if !(self.carrier_hz > 0.0) || self.rate_thr_bps < 0.0 {
            return Err(Error::Config("carrier/rate out of range".into()));
        }
        if self.num_ues as u64 > self.num_federations as u64 * self.pilot_len as u64 {
            return Err(Error::StructuralInfeasibility(format!(
                "K={} exceeds F*tau_p={}: per-federation pilot capacity cannot host all UEs",
                self.num_ues,
                self.num_federations * self.pilot_len
            )));
        }
        Ok(())
    }
}

/// Immutable deployment snapshot.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Scenario {
    pub config: ScenarioConfig,
    pub csp_positions: Vec<Point3>,
    pub ue_positions: Vec<Point3>,
    /// Disjoint CSP index sets, one per ECSP.
    pub ecsp_partition: Vec<Vec<usize>>,
}

impl Scenario {
    /// ECSP index owning CSP `s`.
    pub fn ecsp_of(&self, s: usize) -> usize {
        self.ecsp_partition
            .iter()
            .position(|set| set.contains(&s))
            .expect("partition covers all CSPs")
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

/// Ceiling grid of `count` CSPs. Rows run along the hall length; the
/// (rows, cols) pair with `rows = ceil(count/cols)` whose aspect ratio is
/// closest to length/width wins, and surplus slots are dropped from the last
/// row.
pub fn place_csps(count: u32, hall: &HallGeometry) -> Vec<Point3> {
    assert!(count >= 1, "count must be >= 1");
    let target = hall.length_m / hall.width_m;
    let mut best = (1u32, count, f64::INFINITY);
    for cols in 1..=count {
        let rows = count.div_ceil(cols);
        let diff = (rows as f64 / cols as f64 - target).abs();
        if diff < best.2 {
            best = (cols, rows, diff);
        }
    }
    let (cols, rows, _) = best;
    let mut pts = Vec::with_capacity(count as usize);
    'outer: for r in 0..rows {
        for c in 0..cols {
            if pts.len() == count as usize {
                break 'outer;
            }
            pts.push(Point3 {
                x: (c as f64 + 0.5) * hall.width_m / cols as f64,
                y: (r as f64 + 0.5) * hall.length_m / rows as f64,
                z: hall.csp_height_m,
            });
        }
    }
    pts
}

/// Splits the CSPs into `num_ecsps` spatially contiguous strips: sort by
/// (y, x) and chunk with sizes differing by at most one (larger chunks first).
pub fn partition_ecsps(csp_positions: &[Point3], num_ecsps: u32) -> Vec<Vec<usize>> {
    let n = csp_positions.len();
    assert!(num_ecsps as usize <= n && num_ecsps >= 1);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        let (pa, pb) = (&csp_positions[a], &csp_positions[b]);
        (pa.y, pa.x, a)
            .partial_cmp(&(pb.y, pb.x, b))
            .expect("finite coordinates")
    });
    let g = num_ecsps as usize;
    let base = n / g;
    let extra = n % g;
    let mut sets = Vec::with_capacity(g);
    let mut at = 0;
    for i in 0..g {
        let size = base + usize::from(i < extra);
        sets.push(order[at..at + size].to_vec());
        at += size;
    }
    sets
}

/// Uniform i.i.d. UE drops over the floor rectangle at device height.
pub fn drop_ues(count: u32, hall: &HallGeometry, rng: &mut impl Rng) -> Vec<Point3> {
    assert!(count >= 1, "count must be >= 1");
    (0..count)
        .map(|_| Point3 {
            x: rng.gen_range(0.0..hall.width_m),
            y: rng.gen_range(0.0..hall.length_m),
            z: hall.ue_height_m,
        })
        .collect()
}

/// Composes CSP placement, ECSP partition, and UE drops, validating every
/// scenario invariant up front.
pub fn build_scenario(config: &ScenarioConfig) -> Result<Scenario> {
    config.validate()?;
    let csp_positions = place_csps(config.num_csps, &config.hall);
    let ecsp_partition = partition_ecsps(&csp_positions, config.num_ecsps);
    let seeds = SeedTree::new(config.seed);
    let mut rng = seeds.stream("ue-drop");
    let ue_positions = drop_ues(config.num_ues, &config.hall, &mut rng);

    for p in csp_positions.iter().chain(ue_positions.iter()) {
        if !config.hall.contains(p) {
            return Err(Error::Config(format!("position {p:?} outside hall")));
        }
    }
    Ok(Scenario {
        config: config.clone(),
        csp_positions,
        ue_positions,
        ecsp_partition,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn hall() -> HallGeometry {
        HallGeometry::default()
    }

    #[test]
    fn grid_15_in_12x20() {
        let pts = place_csps(15, &hall());
        assert_eq!(pts.len(), 15);
        let mut xs: Vec<f64> = pts.iter().map(|p| p.x).collect();
        let mut ys: Vec<f64> = pts.iter().map(|p| p.y).collect();
        xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
        xs.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
        ys.sort_by(|a, b| a.partial_cmp(b).unwrap());
        ys.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
        assert_eq!(xs, vec![2.0, 6.0, 10.0]);
        assert_eq!(ys, vec![2.0, 6.0, 10.0, 14.0, 18.0]);
        assert!(pts.iter().all(|p| p.z == 10.0));
    }

    #[test]
    fn grid_single_point_at_center() {
        let pts = place_csps(1, &hall());
        assert_eq!(pts.len(), 1);
        assert!((pts[0].x - 6.0).abs() < 1e-12);
        assert!((pts[0].y - 10.0).abs() < 1e-12);
        assert_eq!(pts[0].z, 10.0);
    }

    #[test]
    fn grid_30_drops_surplus_in_bounds() {
        let pts = place_csps(30, &hall());
        assert_eq!(pts.len(), 30);
        let h = hall();
        assert!(pts.iter().all(|p| h.contains(p)));
        // 4 columns by 8 rows with 2 surplus slots dropped
        let mut xs: Vec<f64> = pts.iter().map(|p| p.x).collect();
        xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
        xs.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
        assert_eq!(xs.len(), 4);
    }

    #[test]
    fn partition_15_into_5() {
        let pts = place_csps(15, &hall());
        let sets = partition_ecsps(&pts, 5);
        assert_eq!(sets.len(), 5);
        assert!(sets.iter().all(|s| s.len() == 3));
        let mut all: Vec<usize> = sets.iter().flatten().copied().collect();
        all.sort_unstable();
        assert_eq!(all, (0..15).collect::<Vec<_>>());
    }

    #[test]
    fn partition_sizes_balanced() {
        let pts = place_csps(7, &hall());
        let sets = partition_ecsps(&pts, 3);
        let mut sizes: Vec<usize> = sets.iter().map(|s| s.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 2, 3]);
    }

    #[test]
    fn partition_single_ecsp_takes_all() {
        let pts = place_csps(9, &hall());
        let sets = partition_ecsps(&pts, 1);
        assert_eq!(sets.len(), 1);
        assert_eq!(sets[0].len(), 9);
    }

    #[test]
    fn ue_drop_deterministic_and_in_bounds() {
        let tree = SeedTree::new(42);
        let a = drop_ues(24, &hall(), &mut tree.stream("ue-drop"));
        let b = drop_ues(24, &hall(), &mut tree.stream("ue-drop"));
        assert_eq!(a, b);
        assert!(a.iter().all(|p| p.x >= 0.0 && p.x <= 12.0 && p.y >= 0.0 && p.y <= 20.0));
        assert!(a.iter().all(|p| p.z == 1.5));
    }

    #[test]
    fn ue_drop_law_of_large_numbers() {
        let tree = SeedTree::new(9);
        let mut rng = tree.stream("ue-drop");
        let n = 100_000u32;
        let pts = drop_ues(n, &hall(), &mut rng);
        let mx = pts.iter().map(|p| p.x).sum::<f64>() / n as f64;
        let my = pts.iter().map(|p| p.y).sum::<f64>() / n as f64;
        assert!((mx - 6.0).abs() / 6.0 < 0.01, "mean x {mx}");
        assert!((my - 10.0).abs() / 10.0 < 0.01, "mean y {my}");
    }

    #[test]
    fn build_scenario_fig3_config() {
        let sc = build_scenario(&ScenarioConfig::default()).unwrap();
        assert_eq!(sc.csp_positions.len(), 30);
        assert_eq!(sc.ue_positions.len(), 24);
        assert_eq!(sc.ecsp_partition.len(), 5);
    }

    #[test]
    fn build_scenario_rejects_structural_infeasibility() {
        let cfg = ScenarioConfig {
            num_federations: 1,
            pilot_len: 12,
            num_ues: 24,
            ..ScenarioConfig::default()
        };
        assert!(matches!(
            build_scenario(&cfg),
            Err(Error::StructuralInfeasibility(_))
        ));
    }

    #[test]
    fn scenario_json_roundtrip() {
        let sc = build_scenario(&ScenarioConfig::default()).unwrap();
        let s = sc.to_json().unwrap();
        let back = Scenario::from_json(&s).unwrap();
        assert_eq!(back.csp_positions, sc.csp_positions);
        assert_eq!(back.ue_positions, sc.ue_positions);
        assert_eq!(back.ecsp_partition, sc.ecsp_partition);
    }

    #[test]
    fn full_grid_reflection_symmetry() {
        // reflecting about the hall center maps a full grid onto itself
        let h = hall();
        let pts = place_csps(15, &h);
        for p in &pts {
            let q = Point3 {
                x: h.width_m - p.x,
                y: h.length_m - p.y,
                z: p.z,
            };
            assert!(
                pts.iter()
                    .any(|r| (r.x - q.x).abs() < 1e-9 && (r.y - q.y).abs() < 1e-9),
                "no mirror image for {p:?}"
            );
        }
    }

    proptest! {
        #[test]
        fn partition_is_disjoint_cover(n in 1u32..40, g in 1u32..10) {
            prop_assume!(g <= n);
            let pts = place_csps(n, &hall());
            let sets = partition_ecsps(&pts, g);
            let mut all: Vec<usize> = sets.iter().flatten().copied().collect();
            all.sort_unstable();
            prop_assert_eq!(all, (0..n as usize).collect::<Vec<_>>());
            let (min, max) = sets.iter().map(|s| s.len())
                .fold((usize::MAX, 0), |(lo, hi), l| (lo.min(l), hi.max(l)));
            prop_assert!(max - min <= 1);
        }

        #[test]
        fn grid_points_inside_hall(n in 1u32..120) {
            let h = hall();
            let pts = place_csps(n, &h);
            prop_assert_eq!(pts.len(), n as usize);
            prop_assert!(pts.iter().all(|p| h.contains(p)));
        }

        #[test]
        fn scenario_deterministic(seed in 0u64..1000) {
            let cfg = ScenarioConfig { seed, num_csps: 8, num_ecsps: 2, num_ues: 6,
                pilot_len: 4, ..ScenarioConfig::default() };
            let a = build_scenario(&cfg).unwrap();
            let b = build_scenario(&cfg).unwrap();
            prop_assert_eq!(a.ue_positions, b.ue_positions);
        }
    }
}
