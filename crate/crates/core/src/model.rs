//! Closed-form energy and cost model for cloud-only versus hybrid edge-cloud
//! processing of a device's annual data volume.
//!
//! Everything here is pure and deterministic. Per-GB rates are plain `f64`
//! fields; volumes, energies and costs are carried as [`Gb`], [`Kwh`] and
//! [`Usd`].

use serde::{Deserialize, Serialize};

use crate::error::{check_non_negative, invalid, HecError, Result};
use crate::units::{Fraction, Gb, Kwh, Usd};

/// Days per year used for annualization. No leap-year adjustment.
pub const DAYS_PER_YEAR: f64 = 365.0;

/// Absolute tolerance used when cross-checking the two savings routes.
const SAVINGS_ROUTE_TOLERANCE: f64 = 1e-12;

/// Per-GB energy rates in kWh/GB.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct EnergyParams {
    /// Transmission of data to the cloud.
    pub e_transmit: f64,
    /// Processing in the cloud.
    pub e_cloud: f64,
    /// Processing on the end device.
    pub e_local: f64,
}

impl Default for EnergyParams {
    fn default() -> Self {
        Self {
            e_transmit: 0.7,
            e_cloud: 1.5,
            e_local: 0.5,
        }
    }
}

impl EnergyParams {
    pub fn new(e_transmit: f64, e_cloud: f64, e_local: f64) -> Result<Self> {
        let params = Self {
            e_transmit,
            e_cloud,
            e_local,
        };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        check_non_negative("energy.e_transmit", self.e_transmit)?;
        check_non_negative("energy.e_cloud", self.e_cloud)?;
        check_non_negative("energy.e_local", self.e_local)
    }

    /// Combined rate of shipping one GB to the cloud and processing it there.
    pub fn cloud_path(&self) -> f64 {
        self.e_transmit + self.e_cloud
    }
}

/// Per-GB monetary rates in USD/GB.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct CostParams {
    pub c_bandwidth: f64,
    pub c_hosting: f64,
    /// License charge for software running on the end device.
    pub c_software: f64,
}

impl Default for CostParams {
    fn default() -> Self {
        Self {
            c_bandwidth: 0.10,
            c_hosting: 0.20,
            c_software: 0.02,
        }
    }
}

impl CostParams {
    pub fn new(c_bandwidth: f64, c_hosting: f64, c_software: f64) -> Result<Self> {
        let params = Self {
            c_bandwidth,
            c_hosting,
            c_software,
        };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        check_non_negative("cost.c_bandwidth", self.c_bandwidth)?;
        check_non_negative("cost.c_hosting", self.c_hosting)?;
        check_non_negative("cost.c_software", self.c_software)
    }

    pub fn cloud_path(&self) -> f64 {
        self.c_bandwidth + self.c_hosting
    }
}

/// Data generated by one device.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WorkloadProfile {
    pub label: String,
    pub daily_gb: f64,
}

impl WorkloadProfile {
    pub const TRADITIONAL_DAILY_GB: f64 = 2.4;
    pub const AGENTIC_DAILY_GB: f64 = 20.0;

    pub fn new(label: impl Into<String>, daily_gb: f64) -> Result<Self> {
        let profile = Self {
            label: label.into(),
            daily_gb,
        };
        profile.validate()?;
        Ok(profile)
    }

    /// Smart-device / IoT baseline.
    pub fn traditional() -> Self {
        Self {
            label: "traditional".to_string(),
            daily_gb: Self::TRADITIONAL_DAILY_GB,
        }
    }

    /// AI-agent, robotics and autonomous-system devices.
    pub fn agentic() -> Self {
        Self {
            label: "agentic".to_string(),
            daily_gb: Self::AGENTIC_DAILY_GB,
        }
    }

    /// Looks up a built-in profile by name.
    pub fn named(name: &str) -> Result<Self> {
        match name {
            "traditional" => Ok(Self::traditional()),
            "agentic" => Ok(Self::agentic()),
            other => Err(invalid(format!(
                "unknown profile '{other}' (expected 'traditional' or 'agentic')"
            ))),
        }
    }

    pub fn validate(&self) -> Result<()> {
        check_non_negative("profile.daily_gb", self.daily_gb)?;
        if self.daily_gb == 0.0 {
            return Err(invalid("profile.daily_gb must be > 0"));
        }
        Ok(())
    }

    /// Annual volume per device, the total that both architectures process.
    pub fn annual_gb(&self) -> Gb {
        Gb(self.daily_gb * DAYS_PER_YEAR)
    }
}

/// Probability that a task is processed on the device.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "SplitRepr", into = "SplitRepr")]
pub struct SplitPolicy {
    p_edge: f64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SplitRepr {
    p_edge: f64,
}

impl TryFrom<SplitRepr> for SplitPolicy {
    type Error = HecError;
    fn try_from(repr: SplitRepr) -> Result<Self> {
        Self::new(repr.p_edge)
    }
}

impl From<SplitPolicy> for SplitRepr {
    fn from(split: SplitPolicy) -> Self {
        Self {
            p_edge: split.p_edge,
        }
    }
}

impl SplitPolicy {
    pub fn new(p_edge: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p_edge) {
            return Err(invalid(format!("p_edge must lie in [0, 1], got {p_edge}")));
        }
        Ok(Self { p_edge })
    }

    pub fn p_edge(&self) -> f64 {
        self.p_edge
    }

    pub fn p_cloud(&self) -> f64 {
        1.0 - self.p_edge
    }
}

impl Default for SplitPolicy {
    fn default() -> Self {
        Self { p_edge: 0.8 }
    }
}

/// Every closed-form quantity for one device and one split.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AnalyticResult {
    pub d_edge: Gb,
    pub d_cloud: Gb,
    pub energy_cloud_only: Kwh,
    pub energy_hec: Kwh,
    pub cost_cloud_only: Usd,
    pub cost_hec: Usd,
    pub savings_energy_fraction: Fraction,
    pub savings_cost_fraction: Fraction,
}

impl AnalyticResult {
    pub fn d_total(&self) -> Gb {
        self.d_edge + self.d_cloud
    }

    pub fn energy_saved(&self) -> Kwh {
        self.energy_cloud_only - self.energy_hec
    }

    pub fn cost_saved(&self) -> Usd {
        self.cost_cloud_only - self.cost_hec
    }
}

fn check_volume(name: &str, v: Gb) -> Result<()> {
    check_non_negative(name, v.0)
}

/// GB/day to GB/year.
pub fn annualize(daily_gb: f64) -> Result<Gb> {
    check_non_negative("daily_gb", daily_gb)?;
    Ok(Gb(daily_gb * DAYS_PER_YEAR))
}

/// Energy when every GB is shipped to and processed in the cloud.
pub fn energy_cloud(d_total: Gb, ep: &EnergyParams) -> Result<Kwh> {
    check_volume("d_total", d_total)?;
    Ok(Kwh(d_total.0 * ep.cloud_path()))
}

/// Energy when `d_edge` stays on the device and `d_cloud` is offloaded.
pub fn energy_hec(d_edge: Gb, d_cloud: Gb, ep: &EnergyParams) -> Result<Kwh> {
    check_volume("d_edge", d_edge)?;
    check_volume("d_cloud", d_cloud)?;
    Ok(Kwh(d_edge.0 * ep.e_local + d_cloud.0 * ep.cloud_path()))
}

pub fn cost_cloud(d_total: Gb, cp: &CostParams) -> Result<Usd> {
    check_volume("d_total", d_total)?;
    Ok(Usd(d_total.0 * cp.cloud_path()))
}

pub fn cost_hec(d_edge: Gb, d_cloud: Gb, cp: &CostParams) -> Result<Usd> {
    check_volume("d_edge", d_edge)?;
    check_volume("d_cloud", d_cloud)?;
    Ok(Usd(d_cloud.0 * cp.cloud_path() + d_edge.0 * cp.c_software))
}

fn check_probability(p_edge: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p_edge) {
        return Err(invalid(format!("p_edge must lie in [0, 1], got {p_edge}")));
    }
    Ok(())
}

/// Fraction of cloud-only energy saved at edge probability `p_edge`.
///
/// Negative when local processing costs more per GB than the cloud path.
pub fn savings_energy_fraction(ep: &EnergyParams, p_edge: f64) -> Result<Fraction> {
    check_probability(p_edge)?;
    let path = ep.cloud_path();
    if path == 0.0 {
        return Err(HecError::DivisionByZero(
            "energy savings undefined: e_transmit + e_cloud is zero".into(),
        ));
    }
    Ok(Fraction((path - ep.e_local) / path * p_edge))
}

/// Fraction of cloud-only cost saved at edge probability `p_edge`.
pub fn savings_cost_fraction(cp: &CostParams, p_edge: f64) -> Result<Fraction> {
    check_probability(p_edge)?;
    let path = cp.cloud_path();
    if path == 0.0 {
        return Err(HecError::DivisionByZero(
            "cost savings undefined: c_bandwidth + c_hosting is zero".into(),
        ));
    }
    Ok(Fraction((path - cp.c_software) / path * p_edge))
}

/// Composes the model for one profile and split.
///
/// The savings fields come from the closed-form savings formulas; they are
/// cross-checked against `1 - hec / cloud_only` whenever the baseline is
/// non-zero.
pub fn analytic_scenario(
    profile: &WorkloadProfile,
    ep: &EnergyParams,
    cp: &CostParams,
    split: &SplitPolicy,
) -> Result<AnalyticResult> {
    profile.validate()?;
    ep.validate()?;
    cp.validate()?;

    let d_total = profile.annual_gb();
    let d_edge = d_total * split.p_edge();
    let d_cloud = d_total * split.p_cloud();

    let energy_cloud_only = energy_cloud(d_total, ep)?;
    let energy_hec = energy_hec(d_edge, d_cloud, ep)?;
    let cost_cloud_only = cost_cloud(d_total, cp)?;
    let cost_hec = cost_hec(d_edge, d_cloud, cp)?;

    let savings_energy = savings_energy_fraction(ep, split.p_edge())?;
    let savings_cost = savings_cost_fraction(cp, split.p_edge())?;

    cross_check("energy", savings_energy, energy_hec / energy_cloud_only, energy_cloud_only.0)?;
    cross_check("cost", savings_cost, cost_hec / cost_cloud_only, cost_cloud_only.0)?;

    Ok(AnalyticResult {
        d_edge,
        d_cloud,
        energy_cloud_only,
        energy_hec,
        cost_cloud_only,
        cost_hec,
        savings_energy_fraction: savings_energy,
        savings_cost_fraction: savings_cost,
    })
}

fn cross_check(what: &str, closed_form: Fraction, ratio: f64, baseline: f64) -> Result<()> {
    if baseline <= 0.0 {
        return Ok(());
    }
    let from_ratio = 1.0 - ratio;
    if (closed_form.0 - from_ratio).abs() > SAVINGS_ROUTE_TOLERANCE {
        return Err(HecError::Inconsistent(format!(
            "{what} savings routes disagree: closed form {} vs 1 - hec/cloud {from_ratio}",
            closed_form.0
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    const REL: f64 = 1e-12;

    fn ep() -> EnergyParams {
        EnergyParams::default()
    }

    fn cp() -> CostParams {
        CostParams::default()
    }

    #[test]
    fn annualize_examples() {
        assert_relative_eq!(annualize(2.4).unwrap().0, 876.0, max_relative = REL);
        assert_relative_eq!(annualize(20.0).unwrap().0, 7300.0, max_relative = REL);
        assert_eq!(annualize(0.0).unwrap(), Gb(0.0));
        assert!(annualize(-1.0).is_err());
        assert!(annualize(f64::NAN).is_err());
        assert!(annualize(f64::INFINITY).is_err());
    }

    #[test]
    fn profiles_annualize_to_published_totals() {
        assert_relative_eq!(WorkloadProfile::traditional().annual_gb().0, 876.0, max_relative = REL);
        assert_eq!(WorkloadProfile::agentic().annual_gb(), Gb(7300.0));
        assert!(WorkloadProfile::new("x", 0.0).is_err());
        assert!(WorkloadProfile::named("nope").is_err());
    }

    #[test]
    fn energy_cloud_examples() {
        assert_relative_eq!(energy_cloud(Gb(876.0), &ep()).unwrap().0, 1927.2, max_relative = REL);
        assert_relative_eq!(energy_cloud(Gb(7300.0), &ep()).unwrap().0, 16060.0, max_relative = REL);
        assert_eq!(energy_cloud(Gb(0.0), &ep()).unwrap(), Kwh(0.0));
        assert!(energy_cloud(Gb(-1.0), &ep()).is_err());
    }

    #[test]
    fn energy_hec_examples() {
        assert_relative_eq!(
            energy_hec(Gb(700.8), Gb(175.2), &ep()).unwrap().0,
            735.84,
            max_relative = REL
        );
        assert_relative_eq!(energy_hec(Gb(0.0), Gb(876.0), &ep()).unwrap().0, 1927.2, max_relative = REL);
        assert_eq!(energy_hec(Gb(876.0), Gb(0.0), &ep()).unwrap(), Kwh(438.0));
        assert!(energy_hec(Gb(-1.0), Gb(1.0), &ep()).is_err());
        assert!(energy_hec(Gb(1.0), Gb(-1.0), &ep()).is_err());
    }

    #[test]
    fn cost_examples() {
        assert_relative_eq!(cost_cloud(Gb(876.0), &cp()).unwrap().0, 262.8, max_relative = REL);
        assert_relative_eq!(cost_cloud(Gb(7300.0), &cp()).unwrap().0, 2190.0, max_relative = REL);
        assert_eq!(cost_cloud(Gb(0.0), &cp()).unwrap(), Usd(0.0));
        assert!(cost_cloud(Gb(-0.5), &cp()).is_err());

        assert_relative_eq!(cost_hec(Gb(700.8), Gb(175.2), &cp()).unwrap().0, 66.576, max_relative = REL);
        assert_relative_eq!(cost_hec(Gb(5840.0), Gb(1460.0), &cp()).unwrap().0, 554.8, max_relative = REL);
        assert_relative_eq!(cost_hec(Gb(0.0), Gb(876.0), &cp()).unwrap().0, 262.8, max_relative = REL);
    }

    #[test]
    fn savings_examples() {
        assert_relative_eq!(savings_energy_fraction(&ep(), 0.8).unwrap().0, 0.8 * 1.7 / 2.2, max_relative = REL);
        assert_relative_eq!(savings_energy_fraction(&ep(), 0.8).unwrap().0, 0.618_181_818_181_818, max_relative = REL);
        assert_eq!(savings_energy_fraction(&ep(), 0.0).unwrap().0, 0.0);
        assert_relative_eq!(savings_energy_fraction(&ep(), 1.0).unwrap().0, 0.772_727_272_727_272_7, max_relative = REL);

        assert_relative_eq!(savings_cost_fraction(&cp(), 0.8).unwrap().0, 0.746_666_666_666_666_7, max_relative = REL);
        assert_eq!(savings_cost_fraction(&cp(), 0.0).unwrap().0, 0.0);
        assert_relative_eq!(savings_cost_fraction(&cp(), 0.3).unwrap().0, 0.28, max_relative = REL);
    }

    #[test]
    fn savings_zero_cloud_path_is_division_by_zero() {
        let ep = EnergyParams::new(0.0, 0.0, 0.5).unwrap();
        let err = savings_energy_fraction(&ep, 0.5).unwrap_err();
        assert!(matches!(err, HecError::DivisionByZero(_)));
        assert!(err.to_string().contains("e_transmit + e_cloud"));

        let cp = CostParams::new(0.0, 0.0, 0.02).unwrap();
        assert!(matches!(
            savings_cost_fraction(&cp, 0.5),
            Err(HecError::DivisionByZero(_))
        ));
    }

    #[test]
    fn savings_can_be_negative() {
        let ep = EnergyParams::new(0.1, 0.1, 1.0).unwrap();
        let s = savings_energy_fraction(&ep, 0.5).unwrap();
        assert!(s.0 < 0.0);
        assert_relative_eq!(s.0, -2.0, max_relative = REL);
    }

    #[test]
    fn invalid_rates_rejected() {
        assert!(EnergyParams::new(-0.1, 1.0, 1.0).is_err());
        assert!(EnergyParams::new(f64::NAN, 1.0, 1.0).is_err());
        assert!(CostParams::new(0.1, f64::INFINITY, 0.0).is_err());
        assert!(SplitPolicy::new(1.01).is_err());
        assert!(SplitPolicy::new(-0.01).is_err());
        assert!(SplitPolicy::new(f64::NAN).is_err());
    }

    #[test]
    fn energy_defaults_round_trip_through_toml() {
        let text = toml::to_string(&EnergyParams::default()).unwrap();
        let back: EnergyParams = toml::from_str(&text).unwrap();
        assert_eq!(back, EnergyParams::default());
        assert_eq!(back.e_transmit, 0.7);
        assert_eq!(back.e_cloud, 1.5);
        assert_eq!(back.e_local, 0.5);
    }

    #[test]
    fn analytic_traditional_at_80() {
        let r = analytic_scenario(
            &WorkloadProfile::traditional(),
            &ep(),
            &cp(),
            &SplitPolicy::new(0.8).unwrap(),
        )
        .unwrap();
        assert_relative_eq!(r.energy_hec.0, 735.84, max_relative = 1e-12);
        assert_relative_eq!(r.cost_hec.0, 66.576, max_relative = 1e-12);
        assert_relative_eq!(r.savings_cost_fraction.0, 0.746_666_666_666_666_7, max_relative = REL);
        assert_relative_eq!(r.d_total().0, 876.0, max_relative = REL);
    }

    #[test]
    fn analytic_agentic_at_80() {
        let r = analytic_scenario(
            &WorkloadProfile::agentic(),
            &ep(),
            &cp(),
            &SplitPolicy::new(0.8).unwrap(),
        )
        .unwrap();
        assert_relative_eq!(r.energy_saved().0, 9928.0, max_relative = 1e-12);
        assert_relative_eq!(r.cost_saved().0, 1635.2, max_relative = 1e-12);
    }

    #[test]
    fn analytic_zero_split_matches_cloud_only() {
        for profile in [WorkloadProfile::traditional(), WorkloadProfile::agentic()] {
            let r = analytic_scenario(&profile, &ep(), &cp(), &SplitPolicy::new(0.0).unwrap()).unwrap();
            assert_eq!(r.energy_hec, r.energy_cloud_only);
            assert_eq!(r.cost_hec, r.cost_cloud_only);
            assert_eq!(r.savings_energy_fraction.0, 0.0);
        }
    }

    fn rate() -> impl Strategy<Value = f64> {
        0.001f64..10.0
    }

    fn energy_params() -> impl Strategy<Value = EnergyParams> {
        (rate(), rate(), rate()).prop_map(|(t, c, l)| EnergyParams::new(t, c, l).unwrap())
    }

    fn cost_params() -> impl Strategy<Value = CostParams> {
        (rate(), rate(), rate()).prop_map(|(b, h, s)| CostParams::new(b, h, s).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn degenerate_splits_are_exact(daily in 0.01f64..100.0, ep in energy_params(), cp in cost_params()) {
            let profile = WorkloadProfile::new("p", daily).unwrap();
            let d = profile.annual_gb();
            let none = analytic_scenario(&profile, &ep, &cp, &SplitPolicy::new(0.0).unwrap()).unwrap();
            prop_assert_eq!(none.energy_hec, none.energy_cloud_only);
            prop_assert_eq!(none.cost_hec, none.cost_cloud_only);
            let all = analytic_scenario(&profile, &ep, &cp, &SplitPolicy::new(1.0).unwrap()).unwrap();
            prop_assert_eq!(all.energy_hec, Kwh(d.0 * ep.e_local));
            prop_assert_eq!(all.cost_hec, Usd(d.0 * cp.c_software));
        }

        #[test]
        fn totals_are_linear_in_volume(d in 0.0f64..1e5, k in 0.0f64..100.0, e in 0.0f64..1e5,
                                       ep in energy_params(), cp in cost_params()) {
            let close = |a: f64, b: f64| (a - b).abs() <= 1e-12 * a.abs().max(b.abs()).max(1e-300);
            prop_assert!(close(energy_cloud(Gb(k * d), &ep).unwrap().0, k * energy_cloud(Gb(d), &ep).unwrap().0));
            prop_assert!(close(cost_cloud(Gb(k * d), &cp).unwrap().0, k * cost_cloud(Gb(d), &cp).unwrap().0));
            prop_assert!(close(energy_hec(Gb(k * e), Gb(k * d), &ep).unwrap().0, k * energy_hec(Gb(e), Gb(d), &ep).unwrap().0));
            prop_assert!(close(cost_hec(Gb(k * e), Gb(k * d), &cp).unwrap().0, k * cost_hec(Gb(e), Gb(d), &cp).unwrap().0));
        }

        #[test]
        fn savings_are_scale_free(d1 in 0.01f64..100.0, d2 in 0.01f64..100.0, p in 0.0f64..=1.0,
                                  ep in energy_params(), cp in cost_params()) {
            let split = SplitPolicy::new(p).unwrap();
            let a = analytic_scenario(&WorkloadProfile::new("a", d1).unwrap(), &ep, &cp, &split).unwrap();
            let b = analytic_scenario(&WorkloadProfile::new("b", d2).unwrap(), &ep, &cp, &split).unwrap();
            let ra = 1.0 - a.energy_hec / a.energy_cloud_only;
            let rb = 1.0 - b.energy_hec / b.energy_cloud_only;
            prop_assert!((ra - rb).abs() <= 1e-12 * ra.abs().max(1.0));
            let ca = 1.0 - a.cost_hec / a.cost_cloud_only;
            let cb = 1.0 - b.cost_hec / b.cost_cloud_only;
            prop_assert!((ca - cb).abs() <= 1e-12 * ca.abs().max(1.0));
        }

        #[test]
        fn closed_form_savings_match_ratio(d in 0.01f64..1e5, p in 0.0f64..=1.0, ep in energy_params(), cp in cost_params()) {
            let s = savings_energy_fraction(&ep, p).unwrap().0;
            let ratio = energy_hec(Gb(p * d), Gb((1.0 - p) * d), &ep).unwrap() / energy_cloud(Gb(d), &ep).unwrap();
            prop_assert!((s - (1.0 - ratio)).abs() <= 1e-12 * s.abs().max(1.0));
            let s = savings_cost_fraction(&cp, p).unwrap().0;
            let ratio = cost_hec(Gb(p * d), Gb((1.0 - p) * d), &cp).unwrap() / cost_cloud(Gb(d), &cp).unwrap();
            prop_assert!((s - (1.0 - ratio)).abs() <= 1e-12 * s.abs().max(1.0));
        }

        #[test]
        fn volumes_conserve_total(daily in 0.01f64..100.0, p in 0.0f64..=1.0) {
            let profile = WorkloadProfile::new("p", daily).unwrap();
            let r = analytic_scenario(&profile, &ep(), &cp(), &SplitPolicy::new(p).unwrap()).unwrap();
            let total = profile.annual_gb().0;
            prop_assert!((r.d_total().0 - total).abs() <= 1e-12 * total);
        }

        #[test]
        fn hec_decreases_with_edge_share(d in 1.0f64..1e4, p1 in 0.0f64..0.99, gap in 1e-3f64..0.5,
                                         ep in energy_params(), cp in cost_params()) {
            let p2 = (p1 + gap).min(1.0);
            let vol = |p: f64| (Gb(p * d), Gb((1.0 - p) * d));
            let (e1, c1) = vol(p1);
            let (e2, c2) = vol(p2);
            if ep.e_local < ep.cloud_path() {
                prop_assert!(energy_hec(e2, c2, &ep).unwrap() < energy_hec(e1, c1, &ep).unwrap());
            }
            if cp.c_software < cp.cloud_path() {
                prop_assert!(cost_hec(e2, c2, &cp).unwrap() < cost_hec(e1, c1, &cp).unwrap());
            }
        }
    }
}
