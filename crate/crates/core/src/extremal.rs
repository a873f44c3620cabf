//! Constructors for the lower-bound colorings and the parity coloring.
//!
//! Discrete, low branch (`k <= 2c`): red on `[1, c+1] ∪ [k+2c+4, k+3c+4]`,
//! blue on `[c+2, k+2c+3]`. Discrete, high branch (`k > 2c`): blue on
//! `[1, k+1]`, red on `[k+2, 2k+c+3]`. Both color `[1, N-1]` where N is the
//! formula value.
//!
//! The continuous constructions substitute `r -> r*alpha` into the additive
//! constants and use half-open pieces so they partition `[alpha, N)` with no
//! gaps. The printed sources of these sets leave slivers uncovered (and the
//! high-branch one as printed even admits a red solution), so the constructor
//! never trusts the shape: every coloring it returns has been checked by
//! `validate_interval`.

use crate::coloring::{validate_discrete, DiscreteColoring};
use crate::equation::Color;
use crate::error::RadoError;
use crate::formulas::{branch_of, finite_value, Branch};
use crate::intervals::{validate_interval, BoundedInterval, IntervalColoring};
use crate::rational::{positive, rat, Rational};

/// Which lower-bound construction applies at the given parameters: the two
/// block colorings for the finite branches, the parity coloring otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerBoundRecipe {
    pub branch: Branch,
    pub c: Rational,
    pub k: Rational,
    pub alpha: Option<Rational>,
}

impl LowerBoundRecipe {
    pub fn new(c: Rational, k: Rational, alpha: Option<Rational>) -> Result<Self, RadoError> {
        if let Some(a) = &alpha {
            if !positive(a) {
                return Err(RadoError::params(format!("alpha = {a} must be > 0")));
            }
        }
        let branch = branch_of(&c, &k)?;
        Ok(LowerBoundRecipe { branch, c, k, alpha })
    }
}

fn require_same_parity(c: u32, k: u32) -> Result<(), RadoError> {
    if c < 1 || k < c {
        return Err(RadoError::params(format!("need 1 <= c <= k, got c={c} k={k}")));
    }
    if c % 2 != k % 2 {
        return Err(RadoError::params(format!(
            "c={c} and k={k} differ in parity; the Rado number is infinite and no finite extremal coloring exists"
        )));
    }
    Ok(())
}

/// The valid coloring of `[1, N-1]` witnessing the lower bound `R2(c,k) >= N`.
pub fn lower_bound_coloring_discrete(c: u32, k: u32) -> Result<DiscreteColoring, RadoError> {
    require_same_parity(c, k)?;
    let size = |v: u64| {
        u32::try_from(v).map_err(|_| {
            RadoError::params(format!("coloring of size {v} cannot be materialized"))
        })
    };
    let coloring = if k <= 2 * c {
        let n = size(k as u64 + 3 * c as u64 + 4)?;
        DiscreteColoring::from_fn(n, |i| {
            if i <= c + 1 || i >= k + 2 * c + 4 {
                Color::Red
            } else {
                Color::Blue
            }
        })
    } else {
        let n = size(2 * k as u64 + c as u64 + 3)?;
        DiscreteColoring::from_fn(n, |i| if i <= k + 1 { Color::Blue } else { Color::Red })
    };
    debug_assert_eq!(validate_discrete(&coloring, c, k), None);
    Ok(coloring)
}

/// The parity coloring of `[1, n]` for shifts of different parity: odds red
/// when c is even and k odd, the reverse otherwise.
pub fn parity_coloring(c: u32, k: u32, n: u32) -> Result<DiscreteColoring, RadoError> {
    if c < 1 || k < 1 {
        return Err(RadoError::params("c and k must be >= 1"));
    }
    if c % 2 == k % 2 {
        return Err(RadoError::params(format!(
            "c={c} and k={k} have the same parity; the parity coloring does not apply"
        )));
    }
    let odd_color = if c.is_multiple_of(2) { Color::Red } else { Color::Blue };
    Ok(DiscreteColoring::from_fn(n, |i| {
        if i.is_multiple_of(2) {
            odd_color.opposite()
        } else {
            odd_color
        }
    }))
}

/// The interval coloring of `[alpha, N)` witnessing the continuous lower
/// bound, with N the continuous formula value. Machine-validated before it
/// is returned.
pub fn lower_bound_coloring_continuous(
    c: &Rational,
    k: &Rational,
    alpha: &Rational,
) -> Result<IntervalColoring, RadoError> {
    if !positive(alpha) {
        return Err(RadoError::params(format!("alpha = {alpha} must be > 0")));
    }
    let branch = branch_of(c, k)?;
    if branch == Branch::ParityInfinite {
        return Err(RadoError::params(format!(
            "c={c} and k={k} are integers of different parity; no finite extremal coloring exists"
        )));
    }
    let n = finite_value(branch, c, k, alpha).expect("finite branch");
    let pieces = match branch {
        Branch::LowBranch => {
            let a = alpha.clone();
            let cut1 = c + rat(2) * alpha;
            let cut2 = k + rat(2) * c + rat(4) * alpha;
            vec![
                (BoundedInterval::half_open(a, cut1.clone())?, Color::Red),
                (BoundedInterval::half_open(cut1, cut2.clone())?, Color::Blue),
                (BoundedInterval::half_open(cut2, n.clone())?, Color::Red),
            ]
        }
        Branch::HighBranch => {
            let cut = k + rat(2) * alpha;
            vec![
                (BoundedInterval::half_open(alpha.clone(), cut.clone())?, Color::Blue),
                (BoundedInterval::half_open(cut, n.clone())?, Color::Red),
            ]
        }
        Branch::ParityInfinite => unreachable!(),
    };
    let coloring = IntervalColoring::new(alpha.clone(), n, false, pieces)?;
    if let Some(violation) = validate_interval(&coloring, c, k) {
        return Err(RadoError::ConstructionInvalid(format!(
            "continuous lower-bound coloring for c={c} k={k} alpha={alpha} admits ({}, {}, {}) in {}",
            violation.x, violation.y, violation.z, violation.color
        )));
    }
    Ok(coloring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat_u32, ratio};

    #[test]
    fn recipe_branch_matches_the_classifier() {
        let recipe = LowerBoundRecipe::new(rat(2), rat(4), None).unwrap();
        assert_eq!(recipe.branch, Branch::LowBranch);
        let recipe = LowerBoundRecipe::new(rat(1), rat(3), Some(ratio(1, 2))).unwrap();
        assert_eq!(recipe.branch, Branch::HighBranch);
        let recipe = LowerBoundRecipe::new(rat(1), rat(2), None).unwrap();
        assert_eq!(recipe.branch, Branch::ParityInfinite);
        assert!(LowerBoundRecipe::new(rat(1), rat(1), Some(rat(0))).is_err());
        assert!(LowerBoundRecipe::new(rat(2), rat(1), None).is_err());
    }

    #[test]
    fn low_branch_sets_match_known_instances() {
        let coloring = lower_bound_coloring_discrete(1, 1).unwrap();
        assert_eq!(coloring.n(), 8);
        assert_eq!(coloring.elements_of(Color::Red), vec![1, 2, 7, 8]);

        let coloring = lower_bound_coloring_discrete(2, 2).unwrap();
        assert_eq!(coloring.n(), 12);
        assert_eq!(coloring.elements_of(Color::Red), vec![1, 2, 3, 10, 11, 12]);
    }

    #[test]
    fn high_branch_sets_match_known_instances() {
        let coloring = lower_bound_coloring_discrete(1, 3).unwrap();
        assert_eq!(coloring.n(), 10);
        assert_eq!(coloring.elements_of(Color::Red), (5..=10).collect::<Vec<_>>());
        assert_eq!(coloring.elements_of(Color::Blue), (1..=4).collect::<Vec<_>>());
    }

    #[test]
    fn parity_mismatch_is_rejected_and_required() {
        assert!(lower_bound_coloring_discrete(1, 2).is_err());
        assert!(parity_coloring(1, 1, 10).is_err());
    }

    #[test]
    fn parity_coloring_orientation() {
        let coloring = parity_coloring(2, 1, 10).unwrap();
        assert_eq!(coloring.color(1), Color::Red);
        assert_eq!(coloring.color(2), Color::Blue);
        let reversed = parity_coloring(1, 2, 10).unwrap();
        assert_eq!(reversed.color(1), Color::Blue);
        assert_eq!(reversed.color(2), Color::Red);
        let single = parity_coloring(2, 1, 1).unwrap();
        assert_eq!(single.n(), 1);
        assert_eq!(single.color(1), Color::Red);
    }

    #[test]
    fn parity_colorings_validate_far_out() {
        for (c, k) in [(1, 2), (2, 3), (2, 1), (3, 4)] {
            let coloring = parity_coloring(c, k, 500).unwrap();
            assert_eq!(validate_discrete(&coloring, c, k), None, "c={c} k={k}");
        }
    }

    #[test]
    fn continuous_low_branch_at_unit_alpha() {
        let coloring = lower_bound_coloring_continuous(&rat(1), &rat(1), &rat(1)).unwrap();
        let red = coloring.pieces_of(Color::Red);
        assert_eq!(red.len(), 2);
        assert_eq!((red[0].lo.clone(), red[0].hi.clone()), (rat(1), rat(3)));
        assert_eq!((red[1].lo.clone(), red[1].hi.clone()), (rat(7), rat(9)));
        let blue = coloring.pieces_of(Color::Blue);
        assert_eq!((blue[0].lo.clone(), blue[0].hi.clone()), (rat(3), rat(7)));
    }

    #[test]
    fn continuous_constructions_validate_on_a_grid() {
        for (c, k) in [(1i64, 1i64), (2, 2), (1, 3), (2, 6), (3, 5), (2, 4)] {
            for alpha in [ratio(1, 2), rat(1), ratio(3, 2), ratio(7, 3)] {
                let coloring =
                    lower_bound_coloring_continuous(&rat(c), &rat(k), &alpha).unwrap();
                assert_eq!(validate_interval(&coloring, &rat(c), &rat(k)), None);
            }
        }
        // non-integer parameters are fine for the construction itself
        let coloring =
            lower_bound_coloring_continuous(&ratio(3, 2), &ratio(5, 2), &ratio(2, 3)).unwrap();
        assert_eq!(validate_interval(&coloring, &ratio(3, 2), &ratio(5, 2)), None);
    }

    #[test]
    fn continuous_matches_discrete_at_unit_alpha() {
        for (c, k) in [(1u32, 1u32), (2, 2), (1, 3), (2, 6)] {
            let continuous =
                lower_bound_coloring_continuous(&rat_u32(c), &rat_u32(k), &rat(1)).unwrap();
            let induced = continuous.induced_discrete().unwrap();
            assert_eq!(induced, lower_bound_coloring_discrete(c, k).unwrap());
        }
    }

    #[test]
    fn pieces_partition_the_domain_exactly() {
        let coloring =
            lower_bound_coloring_continuous(&rat(2), &rat(2), &ratio(1, 2)).unwrap();
        let pieces = coloring.pieces();
        assert_eq!(pieces[0].0.lo, ratio(1, 2));
        for w in pieces.windows(2) {
            assert_eq!(w[0].0.hi, w[1].0.lo);
            assert!(w[0].0.hi_closed != w[1].0.lo_closed);
        }
        assert_eq!(pieces.last().unwrap().0.hi, coloring.n);
        // N = k + 3c + 5*alpha = 2 + 6 + 5/2
        assert_eq!(coloring.n, ratio(21, 2));
    }
}
