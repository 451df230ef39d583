//! Published reference values for `n_{1,3}`, `β_{1,3}` and `ρ_{2,3}`.
//!
//! Cells whose parameters fall outside the admissible range (`s + t > n`,
//! or `n <= s + 1` for `ρ`) are listed with value zero.

/// One reference cell: the arguments and the expected count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GoldenCell {
    pub s: i64,
    /// `t` for three-species tables, unused (zero) for `ρ`.
    pub t: i64,
    pub n: i64,
    pub value: u64,
}

const fn cell(s: i64, t: i64, n: i64, value: u64) -> GoldenCell {
    GoldenCell { s, t, n, value }
}

/// `n_{1,3}(s,t,n)` for `n = 5`, `t = 1..=3` and `n = 6`, `t = 1..=4`.
pub const N13: &[GoldenCell] = &[
    cell(1, 1, 5, 9),
    cell(1, 2, 5, 14),
    cell(1, 3, 5, 14),
    cell(2, 1, 5, 126),
    cell(2, 2, 5, 140),
    cell(2, 3, 5, 0),
    cell(3, 1, 5, 770),
    cell(3, 2, 5, 0),
    cell(3, 3, 5, 0),
    cell(1, 1, 6, 14),
    cell(1, 2, 6, 28),
    cell(1, 3, 6, 42),
    cell(1, 4, 6, 42),
    cell(2, 1, 6, 280),
    cell(2, 2, 6, 462),
    cell(2, 3, 6, 504),
    cell(2, 4, 6, 0),
    cell(3, 1, 6, 2772),
    cell(3, 2, 6, 3276),
    cell(3, 3, 6, 0),
    cell(3, 4, 6, 0),
    cell(4, 1, 6, 15288),
    cell(4, 2, 6, 0),
    cell(4, 3, 6, 0),
    cell(4, 4, 6, 0),
];

/// `β_{1,3}(s,t,n)` for `n = 5`, `t = 0..=2` and `n = 6`, `t = 0..=3`.
pub const BETA13: &[GoldenCell] = &[
    cell(2, 0, 5, 9),
    cell(2, 1, 5, 14),
    cell(2, 2, 5, 14),
    cell(3, 0, 5, 140),
    cell(3, 1, 5, 154),
    cell(3, 2, 5, 0),
    cell(4, 0, 5, 924),
    cell(4, 1, 5, 0),
    cell(4, 2, 5, 0),
    cell(2, 0, 6, 14),
    cell(2, 1, 6, 28),
    cell(2, 2, 6, 42),
    cell(2, 3, 6, 42),
    cell(3, 0, 6, 280),
    cell(3, 1, 6, 504),
    cell(3, 2, 6, 546),
    cell(3, 3, 6, 0),
    cell(4, 0, 6, 3276),
    cell(4, 1, 6, 3822),
    cell(4, 2, 6, 0),
    cell(4, 3, 6, 0),
    cell(5, 0, 6, 19110),
    cell(5, 1, 6, 0),
    cell(5, 2, 6, 0),
    cell(5, 3, 6, 0),
];

/// `ρ_{2,3}(s,n)` for `s = 1..=4`, `n = 3..=6`.
pub const RHO23: &[GoldenCell] = &[
    cell(1, 0, 3, 3),
    cell(1, 0, 4, 4),
    cell(1, 0, 5, 5),
    cell(1, 0, 6, 6),
    cell(2, 0, 3, 0),
    cell(2, 0, 4, 40),
    cell(2, 0, 5, 70),
    cell(2, 0, 6, 112),
    cell(3, 0, 3, 0),
    cell(3, 0, 4, 0),
    cell(3, 0, 5, 630),
    cell(3, 0, 6, 1260),
    cell(4, 0, 3, 0),
    cell(4, 0, 4, 0),
    cell(4, 0, 5, 0),
    cell(4, 0, 6, 11088),
];

/// A continuous multiline queue of type `(1,3,1,2)` and its projection.
pub const EXAMPLE_CONTINUOUS: (&[&[u32]], &str) = (
    &[&[5], &[1, 3, 7, 9], &[8, 10, 13, 15, 16], &[2, 4, 6, 11, 12, 14, 17]],
    "3441222",
);

/// Last-row word of the discrete worked example, type `(2,1,2,2)` on 13 sites.
pub const EXAMPLE_DISCRETE_WORD: &str = "3345515525145";

/// Occupied sites of a discrete queue projecting to [`EXAMPLE_DISCRETE_WORD`].
pub const EXAMPLE_DISCRETE: (usize, &[&[u32]]) = (
    13,
    &[&[1, 4], &[2, 3, 6], &[1, 4, 5, 10, 13], &[1, 2, 3, 6, 9, 11, 12]],
);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_shapes() {
        assert_eq!(N13.len(), 25);
        assert_eq!(BETA13.len(), 25);
        assert_eq!(RHO23.len(), 16);
        for c in N13.iter().chain(BETA13) {
            assert_eq!(c.value == 0, c.s + c.t >= c.n, "{c:?}");
        }
        for c in RHO23 {
            assert_eq!(c.value == 0, c.n <= c.s + 1, "{c:?}");
        }
    }

    #[test]
    fn examples_project() {
        use crate::queue::{bully_project, bully_project_discrete, DiscreteMlq, Placement};
        let rows: Vec<Vec<u32>> = EXAMPLE_CONTINUOUS.0.iter().map(|r| r.to_vec()).collect();
        let p = Placement::from_rows(&rows).unwrap();
        assert_eq!(bully_project(&p).word_string(), EXAMPLE_CONTINUOUS.1);

        let rows: Vec<Vec<u32>> = EXAMPLE_DISCRETE.1.iter().map(|r| r.to_vec()).collect();
        let q = DiscreteMlq::new(EXAMPLE_DISCRETE.0, &rows).unwrap();
        assert_eq!(q.type_vector().m(), &[2, 1, 2, 2]);
        assert_eq!(bully_project_discrete(&q).word_string(), EXAMPLE_DISCRETE_WORD);
    }
}
