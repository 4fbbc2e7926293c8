//! Core sequence types and validation: curve profiles, gap windows, the
//! integer e-sequence / rational r-sequence pair, and the piecewise
//! f-sequence generator.
//!
//! Sequences are indexed 1..=N in all formulas and documentation; the
//! backing vectors are 0-based and the `at1` accessors translate.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::Error;
use crate::rat::Rat;

/// Arithmetic shape parameters: degree `d`, genus `g`, rank `N = d + 1 - g`.
///
/// Only constructible through [`CurveProfile::new`], so a value of this type
/// always satisfies `d >= 2g + 1` and `g >= 0`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CurveProfile {
    d: i64,
    g: i64,
}

impl CurveProfile {
    pub fn new(d: i64, g: i64) -> Result<Self, Error> {
        if g < 0 {
            return Err(Error::InvalidProfile { d, g, constraint: "g >= 0" });
        }
        if d < 2 * g + 1 {
            return Err(Error::InvalidProfile { d, g, constraint: "d >= 2g + 1" });
        }
        Ok(CurveProfile { d, g })
    }

    pub fn degree(&self) -> i64 {
        self.d
    }

    pub fn genus(&self) -> i64 {
        self.g
    }

    /// Rank `N = d + 1 - g`, always recomputed.
    pub fn rank(&self) -> usize {
        (self.d + 1 - self.g) as usize
    }
}

/// The window pair `(s, t)` delimiting the plateau / projection range.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GapWindow {
    pub s: usize,
    pub t: usize,
}

impl GapWindow {
    pub fn new(s: usize, t: usize) -> Self {
        GapWindow { s, t }
    }
}

/// Upper-bound regime for window validation: `Strict` demands `t <= N - 2`,
/// `Relaxed` only `t <= N`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WindowRegime {
    Strict,
    Relaxed,
}

impl WindowRegime {
    fn max_t(&self, n: usize) -> usize {
        match self {
            WindowRegime::Strict => n.saturating_sub(2),
            WindowRegime::Relaxed => n,
        }
    }
}

/// Structured rejection carrying the failed bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum WindowReject {
    #[error("sequence length {n} is below the minimum 3")]
    SequenceTooShort { n: usize },
    #[error("s = {s} violates s >= 1")]
    LowerBound { s: usize },
    #[error("(s, t) = ({s}, {t}) violates s < t")]
    Order { s: usize, t: usize },
    #[error("t = {t} exceeds the regime bound {max}")]
    UpperBound { t: usize, max: usize },
}

/// Accepts iff `1 <= s < t <= N-2` (strict) or `1 <= s < t <= N` (relaxed).
pub fn validate_window(n: usize, window: GapWindow, regime: WindowRegime) -> Result<(), WindowReject> {
    if n < 3 {
        return Err(WindowReject::SequenceTooShort { n });
    }
    if window.s < 1 {
        return Err(WindowReject::LowerBound { s: window.s });
    }
    if window.s >= window.t {
        return Err(WindowReject::Order { s: window.s, t: window.t });
    }
    let max = regime.max_t(n);
    if window.t > max {
        return Err(WindowReject::UpperBound { t: window.t, max });
    }
    Ok(())
}

/// Nondecreasing integer sequence `0 = e_1 <= e_2 <= ... <= e_N`.
///
/// Construction does not validate; [`ESequence::check`] and
/// [`validate_instance`] report structured rejections instead, so arbitrary
/// input can be examined without panicking.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ESequence(pub Vec<i64>);

impl ESequence {
    pub fn new(values: Vec<i64>) -> Self {
        ESequence(values)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    /// 1-based access, `1 <= i <= N`.
    pub fn at1(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    /// Verifies `e_1 = 0` and monotonicity.
    pub fn check(&self) -> Result<(), InstanceReject> {
        if self.0.is_empty() {
            return Err(InstanceReject::Empty);
        }
        if self.0[0] != 0 {
            return Err(InstanceReject::LeadingNonzero { value: self.0[0] });
        }
        for i in 1..self.0.len() {
            if self.0[i] < self.0[i - 1] {
                return Err(InstanceReject::ENotNondecreasing { index: i + 1 });
            }
        }
        Ok(())
    }

    /// Plateau condition `e_s = e_{s+1} = ... = e_{t-1}`. Vacuous when
    /// `t = s + 1`.
    pub fn plateau_check(&self, window: GapWindow) -> Result<(), InstanceReject> {
        let base = self.at1(window.s);
        for i in window.s..window.t {
            if self.at1(i) != base {
                return Err(InstanceReject::PlateauViolated { index: i, s: window.s, t: window.t });
            }
        }
        Ok(())
    }
}

/// Nonincreasing exact-rational sequence `r_1 >= r_2 >= ... >= r_N`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RSequence(pub Vec<Rat>);

impl RSequence {
    pub fn new(values: Vec<Rat>) -> Self {
        RSequence(values)
    }

    pub fn from_ints(values: &[i64]) -> Self {
        RSequence(values.iter().map(|&v| Rat::from_int(v)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[Rat] {
        &self.0
    }

    /// 1-based access, `1 <= i <= N`.
    pub fn at1(&self, i: usize) -> &Rat {
        &self.0[i - 1]
    }

    pub fn check(&self) -> Result<(), InstanceReject> {
        if self.0.is_empty() {
            return Err(InstanceReject::Empty);
        }
        for i in 1..self.0.len() {
            if self.0[i] > self.0[i - 1] {
                return Err(InstanceReject::RNotNonincreasing { index: i + 1 });
            }
        }
        Ok(())
    }

    /// Shifts every entry by `-r_N`, so the last entry becomes 0.
    pub fn normalized(&self) -> RSequence {
        match self.0.last() {
            None => RSequence(vec![]),
            Some(last) => RSequence(self.0.iter().map(|r| r - last).collect()),
        }
    }
}

/// Structured rejection for instance validation, carrying the first
/// offending 1-based index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum InstanceReject {
    #[error("sequence is empty")]
    Empty,
    #[error("e_1 = {value}, expected 0")]
    LeadingNonzero { value: i64 },
    #[error("e is decreasing at index {index}")]
    ENotNondecreasing { index: usize },
    #[error("r is increasing at index {index}")]
    RNotNonincreasing { index: usize },
    #[error("plateau over [{s}, {t}) broken at index {index}")]
    PlateauViolated { index: usize, s: usize, t: usize },
    #[error("e has {e_len} entries but r has {r_len}")]
    LengthMismatch { e_len: usize, r_len: usize },
    #[error("{0}")]
    Window(WindowReject),
}

/// Full instance validation: equal lengths, both monotonicity invariants,
/// relaxed window validity, and the plateau condition.
pub fn validate_instance(e: &ESequence, r: &RSequence, window: GapWindow) -> Result<(), InstanceReject> {
    if e.len() != r.len() {
        return Err(InstanceReject::LengthMismatch { e_len: e.len(), r_len: r.len() });
    }
    e.check()?;
    r.check()?;
    validate_window(e.len(), window, WindowRegime::Relaxed).map_err(InstanceReject::Window)?;
    e.plateau_check(window)?;
    Ok(())
}

/// The piecewise degree-drop generator: `f_i = i - 1` while
/// `i - 1 <= d - 2g`, then `f_i = i - 1 + a` where `i - 1 = d - 2g + a`.
///
/// The output always satisfies `f_1 = 0`, `f_N = d`, consecutive gaps in
/// `{1, 2}` with exactly `g` gaps of size 2.
pub fn f_sequence(profile: &CurveProfile) -> ESequence {
    let d = profile.degree();
    let g = profile.genus();
    let n = profile.rank() as i64;
    let split = d - 2 * g;
    let values = (1..=n)
        .map(|i| {
            let k = i - 1;
            if k <= split {
                k
            } else {
                k + (k - split)
            }
        })
        .collect();
    ESequence(values)
}

/// On-disk instance document: `{"e": [int...], "r": ["p/q"...], "s": int, "t": int}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Instance {
    pub e: ESequence,
    pub r: RSequence,
    #[serde(flatten)]
    pub window: GapWindow,
}

impl Instance {
    pub fn new(e: ESequence, r: RSequence, window: GapWindow) -> Self {
        Instance { e, r, window }
    }

    pub fn validate(&self) -> Result<(), InstanceReject> {
        validate_instance(&self.e, &self.r, self.window)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rats(values: &[i64]) -> RSequence {
        RSequence::from_ints(values)
    }

    #[test]
    fn f_sequence_genus_zero() {
        let p = CurveProfile::new(5, 0).unwrap();
        assert_eq!(f_sequence(&p).values(), &[0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn f_sequence_piecewise() {
        // i-1 <= 3 gives 0..3, then a=1 -> 5, a=2 -> 7
        let p = CurveProfile::new(7, 2).unwrap();
        assert_eq!(f_sequence(&p).values(), &[0, 1, 2, 3, 5, 7]);

        // N=3, d-2g=1, f_3 = 2+1 = 3 = d
        let p = CurveProfile::new(3, 1).unwrap();
        assert_eq!(f_sequence(&p).values(), &[0, 1, 3]);
    }

    #[test]
    fn f_sequence_invariants_over_grid() {
        for d in 1..=30 {
            for g in 0..=(d - 1) / 2 {
                let p = CurveProfile::new(d, g).unwrap();
                let f = f_sequence(&p);
                assert_eq!(f.len(), p.rank());
                assert_eq!(f.at1(1), 0);
                assert_eq!(f.at1(f.len()), d);
                let mut big_gaps = 0;
                for i in 2..=f.len() {
                    let gap = f.at1(i) - f.at1(i - 1);
                    assert!(gap == 1 || gap == 2, "(d={d}, g={g}) gap {gap} at {i}");
                    if gap == 2 {
                        big_gaps += 1;
                    }
                }
                assert_eq!(big_gaps, g, "(d={d}, g={g})");
            }
        }
    }

    #[test]
    fn invalid_profile_names_constraint() {
        let err = CurveProfile::new(4, 2).unwrap_err();
        assert!(matches!(err, Error::InvalidProfile { constraint: "d >= 2g + 1", .. }));
        let err = CurveProfile::new(4, -1).unwrap_err();
        assert!(matches!(err, Error::InvalidProfile { constraint: "g >= 0", .. }));
    }

    #[test]
    fn window_regimes() {
        let w = GapWindow::new(1, 3);
        assert!(validate_window(6, w, WindowRegime::Strict).is_ok());
        assert_eq!(
            validate_window(4, w, WindowRegime::Strict),
            Err(WindowReject::UpperBound { t: 3, max: 2 })
        );
        assert!(validate_window(4, w, WindowRegime::Relaxed).is_ok());
    }

    #[test]
    fn window_rejections_carry_bound() {
        assert_eq!(
            validate_window(2, GapWindow::new(1, 2), WindowRegime::Relaxed),
            Err(WindowReject::SequenceTooShort { n: 2 })
        );
        assert_eq!(
            validate_window(5, GapWindow::new(0, 2), WindowRegime::Relaxed),
            Err(WindowReject::LowerBound { s: 0 })
        );
        assert_eq!(
            validate_window(5, GapWindow::new(3, 3), WindowRegime::Relaxed),
            Err(WindowReject::Order { s: 3, t: 3 })
        );
    }

    #[test]
    fn validate_instance_accepts() {
        let e = ESequence::new(vec![0, 0, 1, 2, 4]);
        let r = rats(&[3, 2, 1, 1, 0]);
        assert!(validate_instance(&e, &r, GapWindow::new(1, 3)).is_ok());
    }

    #[test]
    fn validate_instance_normalization() {
        let e = ESequence::new(vec![0, 1, 1, 2]);
        let r = rats(&[1, 1, 1, 1]);
        assert!(validate_instance(&e, &r, GapWindow::new(2, 3)).is_ok());
        assert_eq!(r.normalized().values(), rats(&[0, 0, 0, 0]).values());
    }

    #[test]
    fn validate_instance_rejects_decreasing_e() {
        let e = ESequence::new(vec![0, 2, 1]);
        let r = rats(&[1, 1, 1]);
        assert_eq!(
            validate_instance(&e, &r, GapWindow::new(1, 2)),
            Err(InstanceReject::ENotNondecreasing { index: 3 })
        );
    }

    #[test]
    fn validate_instance_rejects_mismatch_and_plateau() {
        let e = ESequence::new(vec![0, 1, 2]);
        let r = rats(&[1, 0]);
        assert_eq!(
            validate_instance(&e, &r, GapWindow::new(1, 2)),
            Err(InstanceReject::LengthMismatch { e_len: 3, r_len: 2 })
        );
        let e = ESequence::new(vec![0, 1, 2, 3]);
        let r = rats(&[3, 2, 1, 0]);
        assert_eq!(
            validate_instance(&e, &r, GapWindow::new(1, 3)),
            Err(InstanceReject::PlateauViolated { index: 2, s: 1, t: 3 })
        );
    }

    #[test]
    fn instance_json_round_trip() {
        let inst = Instance::new(
            ESequence::new(vec![0, 0, 1, 2, 4]),
            RSequence::new(vec![
                "3".parse().unwrap(),
                "2".parse().unwrap(),
                "1".parse().unwrap(),
                "1".parse().unwrap(),
                "0".parse().unwrap(),
            ]),
            GapWindow::new(1, 3),
        );
        let json = serde_json::to_string(&inst).unwrap();
        let back: Instance = serde_json::from_str(&json).unwrap();
        assert_eq!(back, inst);
        // the documented field layout
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["s"], 1);
        assert_eq!(v["t"], 3);
        assert_eq!(v["e"][4], 4);
        assert_eq!(v["r"][0], "3");
    }
}
