//! Closed forms for `γ(W(3,n))` and `γ(W(4,n))` and the matching
//! criticality / stability characterizations.

use crate::error::{Error, Result};
use crate::solver::Verdict;

/// Smallest order for which a closed form is available.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FormulaDomain {
    pub delta: usize,
    pub min_n: usize,
}

impl FormulaDomain {
    pub const W3: FormulaDomain = FormulaDomain { delta: 3, min_n: 8 };
    pub const W4: FormulaDomain = FormulaDomain { delta: 4, min_n: 16 };

    pub fn for_delta(delta: usize) -> Option<FormulaDomain> {
        match delta {
            3 => Some(Self::W3),
            4 => Some(Self::W4),
            _ => None,
        }
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if n < self.min_n || n % 2 != 0 {
            return Err(Error::FormulaDomain { delta: self.delta, min_n: self.min_n, n });
        }
        Ok(())
    }

    pub fn contains(&self, n: usize) -> bool {
        self.check(n).is_ok()
    }
}

pub fn gamma_w3_formula(n: usize) -> Result<usize> {
    FormulaDomain::W3.check(n)?;
    let extra = match n % 8 {
        0 => 0,
        2 => 1,
        _ => 2,
    };
    Ok(2 * (n / 8) + extra)
}

pub fn gamma_w4_formula(n: usize) -> Result<usize> {
    FormulaDomain::W4.check(n)?;
    // the exceptional orders override their residue class
    let extra = match n {
        16 | 18 | 36 => 2,
        28 => 3,
        _ => match n % 10 {
            0 => 0,
            2 | 4 => 2,
            6 => 3,
            _ => 4,
        },
    };
    Ok(2 * (n / 10) + extra)
}

pub fn w3_is_critical(n: usize) -> Result<bool> {
    FormulaDomain::W3.check(n)?;
    Ok(n % 8 == 4)
}

pub fn w3_is_stable(n: usize) -> Result<bool> {
    FormulaDomain::W3.check(n)?;
    Ok(n % 8 != 4)
}

pub fn w4_is_critical(n: usize) -> Result<bool> {
    FormulaDomain::W4.check(n)?;
    Ok(n == 26 || (n >= 22 && n % 10 == 2) || (n >= 38 && n % 10 == 8))
}

pub fn w4_is_stable(n: usize) -> Result<bool> {
    FormulaDomain::W4.check(n)?;
    Ok(n == 18 || n == 28 || n % 10 == 0 || n % 10 == 4 || (n % 10 == 6 && n != 26))
}

/// Closed-form γ for `Δ ∈ {3, 4}`; `None` when no formula covers `(Δ, n)`.
pub fn predicted_gamma(delta: usize, n: usize) -> Option<usize> {
    match delta {
        3 => gamma_w3_formula(n).ok(),
        4 => gamma_w4_formula(n).ok(),
        _ => None,
    }
}

/// Predicted verdict for `Δ ∈ {3, 4}`; `None` outside the characterized range.
pub fn predicted_verdict(delta: usize, n: usize) -> Option<Verdict> {
    let critical = match delta {
        3 => w3_is_critical(n).ok()?,
        4 => w4_is_critical(n).ok()?,
        _ => return None,
    };
    Some(if critical { Verdict::Critical } else { Verdict::Stable })
}

/// `⌈n / (Δ + 1)⌉`, the counting lower bound for any graph of maximum degree Δ.
pub fn degree_lower_bound(n: usize, delta: usize) -> usize {
    n.div_ceil(delta + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn w3_values() {
        assert_eq!(gamma_w3_formula(8), Ok(2));
        assert_eq!(gamma_w3_formula(10), Ok(3));
        assert_eq!(gamma_w3_formula(12), Ok(4));
        assert_eq!(gamma_w3_formula(14), Ok(4));
        assert!(gamma_w3_formula(6).is_err());
        assert!(gamma_w3_formula(9).is_err());
    }

    #[test]
    fn w4_values() {
        assert_eq!(gamma_w4_formula(16), Ok(4));
        assert_eq!(gamma_w4_formula(18), Ok(4));
        assert_eq!(gamma_w4_formula(26), Ok(7));
        assert_eq!(gamma_w4_formula(28), Ok(7));
        assert_eq!(gamma_w4_formula(30), Ok(6));
        assert_eq!(gamma_w4_formula(36), Ok(8));
        assert_eq!(gamma_w4_formula(38), Ok(10));
        assert_eq!(gamma_w4_formula(46), Ok(11));
        assert_eq!(
            gamma_w4_formula(14),
            Err(Error::FormulaDomain { delta: 4, min_n: 16, n: 14 })
        );
    }

    #[test]
    fn verdict_predicates() {
        assert_eq!(w3_is_critical(12), Ok(true));
        assert_eq!(w3_is_stable(16), Ok(true));
        assert_eq!(w4_is_critical(26), Ok(true));
        assert_eq!(w4_is_stable(28), Ok(true));
        assert_eq!(w4_is_critical(42), Ok(true));
        assert_eq!(w4_is_critical(18), Ok(false));
        assert!(w4_is_critical(15).is_err());
        let critical: Vec<usize> = (16..=46).step_by(2).filter(|&n| w4_is_critical(n).unwrap()).collect();
        assert_eq!(critical, vec![22, 26, 32, 38, 42]);
        assert_eq!(predicted_verdict(2, 12), None);
        assert_eq!(predicted_verdict(3, 20), Some(Verdict::Critical));
    }

    #[test]
    fn predicates_are_complementary() {
        for n in (8..=10_000).step_by(2) {
            assert!(w3_is_critical(n).unwrap() ^ w3_is_stable(n).unwrap(), "n = {n}");
        }
        for n in (16..=1_000_000).step_by(2) {
            assert!(w4_is_critical(n).unwrap() ^ w4_is_stable(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn lower_bound() {
        assert_eq!(degree_lower_bound(8, 3), 2);
        assert_eq!(degree_lower_bound(1, 1), 1);
        for t in 1..20 {
            assert_eq!(degree_lower_bound(10 * t, 4), 2 * t);
            assert_eq!(degree_lower_bound(10 * t - 1, 4), 2 * t);
        }
    }
}
