//! Formula-independent computation of discrete off-diagonal Rado numbers.
//!
//! `exists_valid_coloring` runs a deterministic backtracking search with
//! forced-color propagation; `min_rado_discrete` scans n upward until the
//! first unsatisfiable instance. `brute_force_rado` enumerates all 2^n total
//! colorings and exists solely to cross-check the solver.

use crate::coloring::{validate_discrete, DiscreteColoring};
use crate::equation::{Color, RadoResult};
use crate::error::RadoError;

/// Default node budget for the backtracking search.
pub const DEFAULT_NODE_CAP: u64 = 10_000_000;

/// `brute_force_rado` refuses caps above this; 2^n enumeration beyond it is
/// not a useful oracle.
pub const BRUTE_FORCE_LIMIT: u32 = 22;

/// A partial red/blue assignment on `{1, ..., n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialColoring {
    cells: Vec<Option<Color>>,
}

impl PartialColoring {
    pub fn empty(n: u32) -> Self {
        PartialColoring { cells: vec![None; n as usize] }
    }

    pub fn n(&self) -> u32 {
        self.cells.len() as u32
    }

    pub fn get(&self, element: u32) -> Option<Color> {
        self.cells[(element - 1) as usize]
    }

    pub fn set(&mut self, element: u32, color: Color) {
        self.cells[(element - 1) as usize] = Some(color);
    }

    pub fn first_uncolored(&self) -> Option<u32> {
        self.cells.iter().position(Option::is_none).map(|i| i as u32 + 1)
    }

    /// Total coloring, if every element is colored.
    pub fn complete(&self) -> Option<DiscreteColoring> {
        let cells: Option<Vec<Color>> = self.cells.iter().copied().collect();
        cells.map(DiscreteColoring::new)
    }

    pub fn colored_count(&self) -> u32 {
        self.cells.iter().filter(|c| c.is_some()).count() as u32
    }
}

/// Result of running the forcing rules to fixpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Propagation {
    Fixpoint(PartialColoring),
    /// A triple monochromatic in `color` is unavoidable in this state.
    Conflict { triple: (u32, u32, u32), color: Color },
}

fn check_params(c: u32, k: u32) -> Result<(), RadoError> {
    if c < 1 {
        return Err(RadoError::params("c must be >= 1"));
    }
    if k < c {
        return Err(RadoError::params(format!("k = {k} must be >= c = {c}")));
    }
    Ok(())
}

/// Applies the forcing rules until no rule fires or a conflict arises.
///
/// For the c-equation (red; symmetric for k with blue): if x and y are red
/// and z = x+y+c <= n, z is forced blue; if x and z are red and
/// y = z-x-c >= 1, y is forced blue. A conflict is a triple already
/// monochromatic or an element forced both ways, reported as the triple that
/// became monochromatic.
pub fn propagate(state: &PartialColoring, c: u32, k: u32) -> Propagation {
    let mut cells = state.clone();
    let n = cells.n();
    loop {
        let mut changed = false;
        for (shift, color) in [(c, Color::Red), (k, Color::Blue)] {
            for x in 1..=n {
                if cells.get(x) != Some(color) {
                    continue;
                }
                // pair rule: x, y colored -> z forced opposite
                for y in x..=n {
                    if cells.get(y) != Some(color) {
                        continue;
                    }
                    let z = x as u64 + y as u64 + shift as u64;
                    if z > n as u64 {
                        break;
                    }
                    let z = z as u32;
                    match cells.get(z) {
                        None => {
                            cells.set(z, color.opposite());
                            changed = true;
                        }
                        Some(col) if col == color => {
                            return Propagation::Conflict { triple: (x, y, z), color };
                        }
                        Some(_) => {}
                    }
                }
                // difference rule: x, z colored -> y forced opposite
                for z in 1..=n {
                    if cells.get(z) != Some(color) {
                        continue;
                    }
                    let needed = z as i64 - x as i64 - shift as i64;
                    if needed < 1 {
                        continue;
                    }
                    let y = needed as u32;
                    match cells.get(y) {
                        None => {
                            cells.set(y, color.opposite());
                            changed = true;
                        }
                        Some(col) if col == color => {
                            let (a, b) = (x.min(y), x.max(y));
                            return Propagation::Conflict { triple: (a, b, z), color };
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        if !changed {
            return Propagation::Fixpoint(cells);
        }
    }
}

/// Outcome of the backtracking search on a single `(c, k, n)` instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Satisfiable(DiscreteColoring),
    Unsatisfiable,
    CapExceeded,
}

/// Searches for a total coloring of `[1, n]` avoiding red c-solutions and
/// blue k-solutions. Deterministic: branches on the smallest uncolored
/// element, red before blue, propagating to fixpoint after each decision.
pub fn exists_valid_coloring(
    c: u32,
    k: u32,
    n: u32,
    cap_nodes: u64,
) -> Result<SearchOutcome, RadoError> {
    check_params(c, k)?;
    let root = match propagate(&PartialColoring::empty(n), c, k) {
        Propagation::Fixpoint(state) => state,
        Propagation::Conflict { .. } => return Ok(SearchOutcome::Unsatisfiable),
    };
    let mut nodes = 0u64;
    let outcome = search(&root, c, k, cap_nodes, &mut nodes);
    if let SearchOutcome::Satisfiable(witness) = &outcome {
        debug_assert_eq!(validate_discrete(witness, c, k), None);
    }
    Ok(outcome)
}

fn search(state: &PartialColoring, c: u32, k: u32, cap: u64, nodes: &mut u64) -> SearchOutcome {
    let element = match state.first_uncolored() {
        Some(element) => element,
        None => {
            let witness = state.complete().expect("no uncolored element left");
            return SearchOutcome::Satisfiable(witness);
        }
    };
    for color in [Color::Red, Color::Blue] {
        *nodes += 1;
        if *nodes > cap {
            return SearchOutcome::CapExceeded;
        }
        let mut next = state.clone();
        next.set(element, color);
        if let Propagation::Fixpoint(closed) = propagate(&next, c, k) {
            match search(&closed, c, k, cap, nodes) {
                SearchOutcome::Unsatisfiable => {}
                other => return other,
            }
        }
    }
    SearchOutcome::Unsatisfiable
}

/// Smallest `n <= n_cap` with no valid coloring, found by scanning n upward;
/// `ExceededCap(n_cap)` when every n up to the cap is satisfiable.
///
/// The scan starts at 1 and never consults the closed-form value, keeping the
/// computation independent of the claim it verifies. Downward closure of
/// validity makes the first unsatisfiable n the answer.
pub fn min_rado_discrete(c: u32, k: u32, n_cap: u32) -> Result<RadoResult, RadoError> {
    check_params(c, k)?;
    for n in 1..=n_cap {
        match exists_valid_coloring(c, k, n, DEFAULT_NODE_CAP)? {
            SearchOutcome::Satisfiable(_) => {}
            SearchOutcome::Unsatisfiable => return Ok(RadoResult::finite_u32(n)),
            SearchOutcome::CapExceeded => return Err(RadoError::NodeBudget),
        }
    }
    Ok(RadoResult::ExceededCap(n_cap))
}

/// Precomputed bitmasks of all solution triples within `[1, n]` for one shift.
fn triple_masks(shift: u32, n: u32) -> Vec<u32> {
    let mut masks = Vec::new();
    for x in 1..=n {
        for y in x..=n {
            let z = x as u64 + y as u64 + shift as u64;
            if z > n as u64 {
                break;
            }
            masks.push((1 << (x - 1)) | (1 << (y - 1)) | (1 << (z as u32 - 1)));
        }
    }
    masks
}

fn some_mask_valid(c_masks: &[u32], k_masks: &[u32], n: u32) -> bool {
    let full: u32 = if n >= 32 { u32::MAX } else { (1 << n) - 1 };
    'mask: for red in 0..=full {
        let blue = !red & full;
        for &m in c_masks {
            if red & m == m {
                continue 'mask;
            }
        }
        for &m in k_masks {
            if blue & m == m {
                continue 'mask;
            }
        }
        return true;
    }
    false
}

/// Independent oracle: same contract as [`min_rado_discrete`] but decided by
/// enumerating every total coloring of `[1, n]`. Refuses caps above
/// [`BRUTE_FORCE_LIMIT`].
pub fn brute_force_rado(c: u32, k: u32, n_cap: u32) -> Result<RadoResult, RadoError> {
    check_params(c, k)?;
    if n_cap > BRUTE_FORCE_LIMIT {
        return Err(RadoError::EnumerationLimit { requested: n_cap, limit: BRUTE_FORCE_LIMIT });
    }
    for n in 1..=n_cap {
        if !some_mask_valid(&triple_masks(c, n), &triple_masks(k, n), n) {
            return Ok(RadoResult::finite_u32(n));
        }
    }
    Ok(RadoResult::ExceededCap(n_cap))
}

/// Exhaustive satisfiability of a single instance; test oracle for
/// [`exists_valid_coloring`].
pub fn brute_force_exists(c: u32, k: u32, n: u32) -> Result<bool, RadoError> {
    check_params(c, k)?;
    if n > BRUTE_FORCE_LIMIT {
        return Err(RadoError::EnumerationLimit { requested: n, limit: BRUTE_FORCE_LIMIT });
    }
    Ok(some_mask_valid(&triple_masks(c, n), &triple_masks(k, n), n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::write_discrete;

    #[test]
    fn first_forcing_steps() {
        // 1 red forces 3 blue via (1,1,3)_c; at n = 3 nothing else fires
        let mut state = PartialColoring::empty(3);
        state.set(1, Color::Red);
        match propagate(&state, 1, 1) {
            Propagation::Fixpoint(s) => {
                assert_eq!(s.get(3), Some(Color::Blue));
                assert_eq!(s.get(2), None);
            }
            other => panic!("expected fixpoint, got {other:?}"),
        }
        // 1 blue forces 3 red via (1,1,3)_k
        let mut state = PartialColoring::empty(3);
        state.set(1, Color::Blue);
        match propagate(&state, 1, 1) {
            Propagation::Fixpoint(s) => assert_eq!(s.get(3), Some(Color::Red)),
            other => panic!("expected fixpoint, got {other:?}"),
        }
    }

    #[test]
    fn existing_monochromatic_triple_is_a_conflict() {
        let mut state = PartialColoring::empty(3);
        state.set(1, Color::Red);
        state.set(3, Color::Red);
        assert_eq!(
            propagate(&state, 1, 1),
            Propagation::Conflict { triple: (1, 1, 3), color: Color::Red }
        );
    }

    #[test]
    fn propagation_alone_refutes_both_roots_at_the_threshold() {
        // at n = 9, c = k = 1 the forcings from either color of 1 collide:
        // (1,7,9)_c wants 9 blue while (3,5,9)_k wants 9 red
        for color in [Color::Red, Color::Blue] {
            let mut state = PartialColoring::empty(9);
            state.set(1, color);
            assert!(matches!(propagate(&state, 1, 1), Propagation::Conflict { .. }));
        }
        // one element below the threshold both roots still extend
        for color in [Color::Red, Color::Blue] {
            let mut state = PartialColoring::empty(8);
            state.set(1, color);
            assert!(matches!(propagate(&state, 1, 1), Propagation::Fixpoint(_)));
        }
    }

    #[test]
    fn forced_elements_cannot_be_flipped() {
        // propagation soundness: flipping a forced element creates a
        // monochromatic solution in every total extension
        let mut state = PartialColoring::empty(6);
        state.set(1, Color::Red);
        let closed = match propagate(&state, 1, 1) {
            Propagation::Fixpoint(s) => s,
            other => panic!("expected fixpoint, got {other:?}"),
        };
        for e in 1..=6 {
            let Some(forced) = closed.get(e) else { continue };
            if e == 1 {
                continue;
            }
            let mut flipped = state.clone();
            flipped.set(e, forced.opposite());
            // every total extension of the flipped state violates validity
            let n = 6u32;
            let mut any_valid = false;
            for mask in 0..(1u32 << n) {
                let total = DiscreteColoring::from_fn(n, |i| {
                    if let Some(col) = flipped.get(i) {
                        col
                    } else if mask & (1 << (i - 1)) != 0 {
                        Color::Red
                    } else {
                        Color::Blue
                    }
                });
                if validate_discrete(&total, 1, 1).is_none() {
                    any_valid = true;
                    break;
                }
            }
            assert!(!any_valid, "element {e} forced {forced:?} but flip admits a valid extension");
        }
    }

    #[test]
    fn known_satisfiability_boundaries() {
        match exists_valid_coloring(1, 1, 8, DEFAULT_NODE_CAP).unwrap() {
            SearchOutcome::Satisfiable(witness) => {
                assert_eq!(validate_discrete(&witness, 1, 1), None);
            }
            other => panic!("expected satisfiable, got {other:?}"),
        }
        assert_eq!(
            exists_valid_coloring(1, 1, 9, DEFAULT_NODE_CAP).unwrap(),
            SearchOutcome::Unsatisfiable
        );
        assert!(matches!(
            exists_valid_coloring(1, 2, 50, DEFAULT_NODE_CAP).unwrap(),
            SearchOutcome::Satisfiable(_)
        ));
    }

    #[test]
    fn min_rado_values() {
        assert_eq!(min_rado_discrete(1, 1, 20).unwrap(), RadoResult::finite_u32(9));
        assert_eq!(min_rado_discrete(1, 3, 20).unwrap(), RadoResult::finite_u32(11));
        assert_eq!(min_rado_discrete(1, 2, 40).unwrap(), RadoResult::ExceededCap(40));
        assert!(min_rado_discrete(2, 1, 10).is_err());
    }

    #[test]
    fn brute_force_agrees_and_respects_its_limit() {
        assert_eq!(brute_force_rado(1, 1, 20).unwrap(), RadoResult::finite_u32(9));
        assert_eq!(brute_force_rado(2, 2, 20).unwrap(), RadoResult::finite_u32(13));
        assert_eq!(brute_force_rado(1, 2, 20).unwrap(), RadoResult::ExceededCap(20));
        assert!(matches!(
            brute_force_rado(1, 1, 23),
            Err(RadoError::EnumerationLimit { .. })
        ));
    }

    #[test]
    fn solver_matches_enumeration_on_small_instances() {
        for (c, k) in [(1, 1), (1, 3), (2, 2)] {
            for n in 1..=12 {
                let solver = matches!(
                    exists_valid_coloring(c, k, n, DEFAULT_NODE_CAP).unwrap(),
                    SearchOutcome::Satisfiable(_)
                );
                assert_eq!(
                    solver,
                    brute_force_exists(c, k, n).unwrap(),
                    "disagreement at c={c} k={k} n={n}"
                );
            }
        }
    }

    #[test]
    fn unsatisfiability_is_upward_closed() {
        for (c, k) in [(1, 1), (2, 2)] {
            let mut seen_unsat = false;
            for n in 1..=16 {
                let sat = matches!(
                    exists_valid_coloring(c, k, n, DEFAULT_NODE_CAP).unwrap(),
                    SearchOutcome::Satisfiable(_)
                );
                if seen_unsat {
                    assert!(!sat, "satisfiable n={n} above an unsatisfiable instance");
                }
                if !sat {
                    seen_unsat = true;
                }
            }
            assert!(seen_unsat);
        }
    }

    #[test]
    fn witnesses_are_deterministic() {
        let run = || match exists_valid_coloring(2, 4, 14, DEFAULT_NODE_CAP).unwrap() {
            SearchOutcome::Satisfiable(w) => write_discrete(&w, 2, 4),
            other => panic!("expected satisfiable, got {other:?}"),
        };
        assert_eq!(run(), run());
    }
}
