//! The individual numerical criteria the decision engine fires.

use crate::error::Error;

/// Fujita's two thresholds for a polarized surface with a ladder.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FujitaCheck {
    pub ladder_regular: bool,
    pub normally_generated: bool,
}

/// `ladder_regular` when `g >= Delta` and `d >= 2 Delta - 1`;
/// `normally_generated` when `g >= Delta` and `d >= 2 Delta + 1`.
#[allow(clippy::int_plus_one)] // the thresholds are stated this way
pub fn fujita_check(d: i64, g: i64, delta: i64) -> FujitaCheck {
    let dominates = g >= delta;
    FujitaCheck {
        ladder_regular: dominates && d >= 2 * delta - 1,
        normally_generated: dominates && d >= 2 * delta + 1,
    }
}

/// Green-Lazarsfeld: normal generation once
/// `d >= 2g + 1 - 2 h1(L) - cl(C)`.
pub fn gl_check(d: i64, g: i64, h1_l: i64, cl_c: i64) -> bool {
    d >= 2 * g + 1 - 2 * h1_l - cl_c
}

/// On a hyperelliptic curve of genus `g >= 2`, bundles of degree `<= 2g`
/// are never normally generated. Returns `true` when the block applies.
pub fn hyperelliptic_block(d: i64, g: i64) -> bool {
    debug_assert!(g >= 2);
    d <= 2 * g
}

/// Normal generation reduces to surjectivity in degree two once
/// `d >= g + 1` (base-point-free bundle).
#[allow(clippy::int_plus_one)]
pub fn two_normal_suffices(d: i64, g: i64) -> bool {
    d >= g + 1
}

/// `h0(O_PN(2)) - h0(2L)` for `N` in `{4, 5}`. Negative means 2-normality
/// is impossible; zero means 2-normal exactly when no quadric contains the
/// surface.
pub fn quadric_deficit(n: i64, h0_2l: i64) -> Result<i64, Error> {
    let ambient_quadrics = match n {
        4 => 15,
        5 => 21,
        _ => {
            return Err(Error::InvalidInput(format!(
                "ambient dimension {n} not in {{4, 5}}"
            )))
        }
    };
    if h0_2l < 0 {
        return Err(Error::InvalidInput(format!("h0(2L) = {h0_2l} negative")));
    }
    Ok(ambient_quadrics - h0_2l)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fujita_thresholds() {
        assert_eq!(
            fujita_check(9, 2, 2),
            FujitaCheck {
                ladder_regular: true,
                normally_generated: true
            }
        );
        assert_eq!(
            fujita_check(9, 5, 5),
            FujitaCheck {
                ladder_regular: true,
                normally_generated: false
            }
        );
        assert_eq!(
            fujita_check(9, 4, 5),
            FujitaCheck {
                ladder_regular: false,
                normally_generated: false
            }
        );
    }

    #[test]
    fn green_lazarsfeld_inequality() {
        assert!(gl_check(9, 5, 0, 2));
        assert!(!gl_check(9, 5, 0, 1));
        assert!(!gl_check(9, 6, 1, 1));
    }

    #[test]
    fn hyperelliptic_degree_threshold() {
        assert!(hyperelliptic_block(9, 5));
        assert!(!hyperelliptic_block(9, 4));
        assert!(hyperelliptic_block(10, 5));
    }

    #[test]
    fn degree_two_reduction_threshold() {
        assert!(two_normal_suffices(9, 5));
        assert!(two_normal_suffices(9, 8));
        assert!(!two_normal_suffices(9, 9));
    }

    #[test]
    fn quadric_deficits() {
        assert_eq!(quadric_deficit(4, 18).unwrap(), -3);
        assert_eq!(quadric_deficit(5, 21).unwrap(), 0);
        assert_eq!(quadric_deficit(4, 13).unwrap(), 2);
        assert!(quadric_deficit(3, 10).is_err());
    }
}
