//! Brute-force reference checks, kept independent of the search code: a
//! direct colon-ideal test of one order, and an exhaustive pass over all
//! orders of a small generator set.

use itertools::Itertools;

use crate::power::PowerGenerators;

/// Largest generator count [`exhaustive_lq_exists`] accepts.
pub const ORACLE_MAX_GENS: usize = 8;

fn colon(a: &[u16], b: &[u16]) -> Vec<u16> {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| x.saturating_sub(y))
        .collect()
}

fn divides(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Whether `(u_1, ..., u_{t-1}) : u_t` is generated by variables for every
/// `t`, computed from the minimal generators of each colon ideal.
pub fn order_has_linear_quotients(gens: &[Vec<u16>]) -> bool {
    (1..gens.len()).all(|t| {
        let colons: Vec<Vec<u16>> = gens[..t].iter().map(|g| colon(g, &gens[t])).collect();
        colons.iter().enumerate().all(|(i, c)| {
            let minimal = !colons
                .iter()
                .enumerate()
                .any(|(j, d)| j != i && divides(d, c) && (d != c || j < i));
            !minimal || c.iter().map(|&e| e as u32).sum::<u32>() == 1
        })
    })
}

/// Whether any of the `r!` orders of the generators has linear quotients.
/// `None` when there are more than [`ORACLE_MAX_GENS`] generators.
pub fn exhaustive_lq_exists(pg: &PowerGenerators) -> Option<bool> {
    let r = pg.len();
    if r > ORACLE_MAX_GENS {
        return None;
    }
    let gens: Vec<Vec<u16>> = pg.gens().iter().map(|m| m.exponents().to_vec()).collect();
    Some((0..r).permutations(r).any(|perm| {
        let ordered: Vec<Vec<u16>> = perm.iter().map(|&i| gens[i].clone()).collect();
        order_has_linear_quotients(&ordered)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::power::EdgeIdeal;

    #[test]
    fn direct_check_on_small_cases() {
        // (ab, cd): colon ab is not linear.
        assert!(!order_has_linear_quotients(&[
            vec![1, 1, 0, 0],
            vec![0, 0, 1, 1]
        ]));
        // (ab, bc): colon a.
        assert!(order_has_linear_quotients(&[vec![1, 1, 0], vec![0, 1, 1]]));
        // (ab, bc, cd): at cd the colon ab is not minimal, b is.
        assert!(order_has_linear_quotients(&[
            vec![1, 1, 0, 0],
            vec![0, 1, 1, 0],
            vec![0, 0, 1, 1]
        ]));
        // (a^2, ab, b^2) passes; (a^2, b^2, ab) fails at b^2 with colon a^2.
        assert!(order_has_linear_quotients(&[
            vec![2, 0],
            vec![1, 1],
            vec![0, 2]
        ]));
        assert!(!order_has_linear_quotients(&[
            vec![2, 0],
            vec![0, 2],
            vec![1, 1]
        ]));
    }

    #[test]
    fn exhaustive_on_fixtures() {
        let p = |g, q| EdgeIdeal::new(g).power(q).unwrap();
        assert_eq!(exhaustive_lq_exists(&p(fixtures::two_k2(), 1)), Some(false));
        assert_eq!(exhaustive_lq_exists(&p(fixtures::two_k2(), 2)), Some(false));
        assert_eq!(exhaustive_lq_exists(&p(fixtures::p3(), 2)), Some(true));
        assert_eq!(exhaustive_lq_exists(&p(fixtures::c5(), 1)), Some(false));
        assert_eq!(exhaustive_lq_exists(&p(fixtures::c5(), 2)), None);
    }
}
