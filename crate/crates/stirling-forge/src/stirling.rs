//! Stirling numbers of both kinds, by three independent routes: the triangle
//! recurrences (ground truth), the explicit alternating binomial sum, and
//! brute-force enumeration of set partitions. S(m, n) counts partitions of an
//! m-set into n nonempty blocks; the unsigned first kind counts permutations
//! of m elements with k cycles.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{binomial, exact_div, factorial, Integer};

/// Tables above this size are rejected.
pub const TABLE_LIMIT: usize = 200;
/// Set partition enumeration above this size is rejected (Bell(12) is the
/// largest count worth walking exhaustively).
pub const ENUMERATION_LIMIT: usize = 12;

/// S(m, n) by the recurrence S(m, n) = n S(m−1, n) + S(m−1, n−1).
/// Only the columns up to n are carried.
pub fn stirling2(m: usize, n: usize) -> Integer {
    if n > m {
        return Integer::zero();
    }
    let mut prev: Vec<Integer> = vec![Integer::zero(); n + 1];
    prev[0] = Integer::one();
    for i in 1..=m {
        let mut curr = vec![Integer::zero(); n + 1];
        for j in 1..=i.min(n) {
            curr[j] = Integer::from(j) * &prev[j] + &prev[j - 1];
        }
        prev = curr;
    }
    prev.pop().unwrap()
}

/// S(m, n) by the explicit sum (1/n!) Σ_k C(n, k) (−1)^{n−k} k^m, with the
/// convention 0^0 = 1. The division by n! must be exact; anything else is an
/// internal fault and panics.
pub fn stirling2_explicit(m: usize, n: usize) -> Integer {
    let mut acc = Integer::zero();
    for k in 0..=n {
        let term = binomial(n, k as i64) * num_traits::pow(Integer::from(k), m);
        if (n - k) % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    exact_div(acc, &factorial(n))
}

/// Counts of set partitions of {1, …, m} grouped by block count, found by
/// walking every restricted growth string. Entry n is the number of
/// partitions into exactly n blocks.
pub fn set_partition_block_counts(m: usize) -> Result<Vec<Integer>> {
    if m > ENUMERATION_LIMIT {
        return Err(Error::EnumerationLimit {
            m,
            limit: ENUMERATION_LIMIT,
        });
    }
    let mut counts = vec![0u64; m + 1];
    if m == 0 {
        counts[0] = 1;
    } else {
        walk_growth_strings(1, 0, m, &mut counts);
    }
    Ok(counts.into_iter().map(Integer::from).collect())
}

// Position 0 is pinned to block 0; each later element may join an existing
// block or open the next one. Leaves are counted by their block totals.
fn walk_growth_strings(pos: usize, max_block: usize, m: usize, counts: &mut [u64]) {
    if pos == m {
        counts[max_block + 1] += 1;
        return;
    }
    for block in 0..=max_block + 1 {
        walk_growth_strings(pos + 1, max_block.max(block), m, counts);
    }
}

/// Number of set partitions of an m-set into exactly n blocks, by exhaustive
/// enumeration. Independent of both `stirling2` routes; capped at m ≤ 12.
pub fn count_set_partitions(m: usize, n: usize) -> Result<Integer> {
    let counts = set_partition_block_counts(m)?;
    Ok(counts.get(n).cloned().unwrap_or_else(Integer::zero))
}

/// Unsigned first kind σ(m, k) by the recurrence
/// σ(m, k) = σ(m−1, k−1) + (m−1) σ(m−1, k).
pub fn stirling1_unsigned(m: usize, k: usize) -> Integer {
    if k > m {
        return Integer::zero();
    }
    let mut prev: Vec<Integer> = vec![Integer::zero(); k + 1];
    prev[0] = Integer::one();
    for i in 1..=m {
        let mut curr = vec![Integer::zero(); k + 1];
        for j in 1..=i.min(k) {
            curr[j] = &prev[j - 1] + Integer::from(i - 1) * &prev[j];
        }
        prev = curr;
    }
    prev.pop().unwrap()
}

/// Signed first kind s(m, k) = (−1)^{m−k} σ(m, k); the coefficients of the
/// falling factorial in the power basis.
pub fn stirling1_signed(m: usize, k: usize) -> Integer {
    let unsigned = stirling1_unsigned(m, k);
    if (m.wrapping_sub(k)) % 2 == 1 {
        -unsigned
    } else {
        unsigned
    }
}

/// Σ_k S(m, k) s(k, n): 1 when m = n, 0 otherwise. The two triangles are
/// inverse matrices.
pub fn orthogonality_sum(m: usize, n: usize) -> Integer {
    let second = second_kind_rows(m);
    let first = first_kind_rows(m);
    let mut acc = Integer::zero();
    for k in n..=m {
        let signed = if (k - n) % 2 == 1 {
            -&first[k][n]
        } else {
            first[k][n].clone()
        };
        acc += &second[m][k] * signed;
    }
    acc
}

/// Full second-kind rows 0..=max_m; row m holds S(m, 0..=m).
pub(crate) fn second_kind_rows(max_m: usize) -> Vec<Vec<Integer>> {
    let zero = Integer::zero();
    let mut rows: Vec<Vec<Integer>> = vec![vec![Integer::one()]];
    for m in 1..=max_m {
        let prev = &rows[m - 1];
        let mut row = vec![Integer::zero()];
        for n in 1..=m {
            let above = if n < m { &prev[n] } else { &zero } * Integer::from(n);
            row.push(above + &prev[n - 1]);
        }
        rows.push(row);
    }
    rows
}

/// Full unsigned first-kind rows 0..=max_m; row m holds σ(m, 0..=m).
pub(crate) fn first_kind_rows(max_m: usize) -> Vec<Vec<Integer>> {
    let zero = Integer::zero();
    let mut rows: Vec<Vec<Integer>> = vec![vec![Integer::one()]];
    for m in 1..=max_m {
        let prev = &rows[m - 1];
        let mut row = vec![Integer::zero()];
        for k in 1..=m {
            let keep = if k < m { &prev[k] } else { &zero } * Integer::from(m - 1);
            row.push(&prev[k - 1] + keep);
        }
        rows.push(row);
    }
    rows
}

/// A lower-triangular table of integers; row m carries columns 0..=m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    rows: Vec<Vec<Integer>>,
}

impl Triangle {
    fn new(rows: Vec<Vec<Integer>>) -> Self {
        Triangle { rows }
    }

    pub fn max_m(&self) -> usize {
        self.rows.len() - 1
    }

    /// Entry (m, n); zero outside the triangle.
    pub fn entry(&self, m: usize, n: usize) -> Integer {
        self.rows
            .get(m)
            .and_then(|row| row.get(n))
            .cloned()
            .unwrap_or_else(Integer::zero)
    }

    /// Modern layout: row m lists columns n = 0..=m.
    pub fn rows(&self) -> &[Vec<Integer>] {
        &self.rows
    }

    /// Historical layout (the 1730 arrangement): row n lists the entries for
    /// m = n..=max_m, so the triangle is transposed and zeros above the
    /// diagonal are dropped.
    pub fn transposed_rows(&self) -> Vec<Vec<Integer>> {
        let max_m = self.max_m();
        (0..=max_m)
            .map(|n| (n..=max_m).map(|m| self.rows[m][n].clone()).collect())
            .collect()
    }

    /// Row sums; for the second kind these are the Bell numbers.
    pub fn row_sums(&self) -> Vec<Integer> {
        self.rows
            .iter()
            .map(|row| row.iter().sum::<Integer>())
            .collect()
    }
}

fn guard_table(max_m: usize) -> Result<()> {
    if max_m > TABLE_LIMIT {
        return Err(Error::TableLimit {
            max_m,
            limit: TABLE_LIMIT,
        });
    }
    Ok(())
}

/// Second-kind triangle S(m, n) for m ≤ max_m, by the recurrence.
pub fn second_kind_table(max_m: usize) -> Result<Triangle> {
    guard_table(max_m)?;
    Ok(Triangle::new(second_kind_rows(max_m)))
}

/// Unsigned first-kind triangle σ(m, k) for m ≤ max_m.
pub fn first_kind_table(max_m: usize) -> Result<Triangle> {
    guard_table(max_m)?;
    Ok(Triangle::new(first_kind_rows(max_m)))
}

/// Signed first-kind triangle s(m, k) = (−1)^{m−k} σ(m, k).
pub fn first_kind_table_signed(max_m: usize) -> Result<Triangle> {
    guard_table(max_m)?;
    let rows = first_kind_rows(max_m)
        .into_iter()
        .enumerate()
        .map(|(m, row)| {
            row.into_iter()
                .enumerate()
                .map(|(k, v)| if (m - k) % 2 == 1 { -v } else { v })
                .collect()
        })
        .collect();
    Ok(Triangle::new(rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;

    #[test]
    fn second_kind_small_values() {
        assert_eq!(stirling2(0, 0), int(1));
        assert_eq!(stirling2(1, 0), int(0));
        assert_eq!(stirling2(4, 2), int(7));
        assert_eq!(stirling2(5, 2), int(15));
        assert_eq!(stirling2(6, 4), int(65));
        assert_eq!(stirling2(7, 3), int(301));
        assert_eq!(stirling2(5, 4), int(10));
        assert_eq!(stirling2(3, 5), int(0));
    }

    // The 1730 table got this entry wrong (461 in print); the recurrence
    // gives 462 and both independent routes below agree.
    #[test]
    fn second_kind_historical_misprint_entry() {
        assert_eq!(stirling2(9, 7), int(462));
        assert_eq!(stirling2_explicit(9, 7), int(462));
        assert_eq!(count_set_partitions(9, 7).unwrap(), int(462));
    }

    #[test]
    fn explicit_sum_small_values() {
        assert_eq!(stirling2_explicit(4, 2), int(7));
        assert_eq!(stirling2_explicit(0, 0), int(1));
        assert_eq!(stirling2_explicit(3, 5), int(0));
        assert_eq!(stirling2_explicit(10, 1), int(1));
    }

    #[test]
    fn explicit_sum_agrees_with_recurrence() {
        for m in 0..=25usize {
            for n in 0..=m + 2 {
                assert_eq!(stirling2_explicit(m, n), stirling2(m, n), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn enumeration_small_values() {
        assert_eq!(count_set_partitions(4, 2).unwrap(), int(7));
        assert_eq!(count_set_partitions(0, 0).unwrap(), int(1));
        assert_eq!(count_set_partitions(3, 0).unwrap(), int(0));
        assert_eq!(count_set_partitions(5, 5).unwrap(), int(1));
        assert_eq!(count_set_partitions(3, 7).unwrap(), int(0));
    }

    #[test]
    fn enumeration_matches_recurrence_up_to_ten() {
        for m in 0..=10usize {
            let counts = set_partition_block_counts(m).unwrap();
            for (n, count) in counts.iter().enumerate() {
                assert_eq!(count, &stirling2(m, n), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn enumeration_rejects_large_sets() {
        assert_eq!(
            count_set_partitions(13, 3),
            Err(Error::EnumerationLimit { m: 13, limit: 12 })
        );
    }

    #[test]
    fn first_kind_small_values() {
        assert_eq!(stirling1_unsigned(0, 0), int(1));
        assert_eq!(stirling1_unsigned(4, 3), int(6));
        assert_eq!(stirling1_unsigned(5, 2), int(50));
        assert_eq!(stirling1_unsigned(9, 2), int(109_584));
        assert_eq!(stirling1_unsigned(2, 5), int(0));
        assert_eq!(stirling1_signed(4, 2), int(11));
        assert_eq!(stirling1_signed(3, 2), int(-3));
        assert_eq!(stirling1_signed(4, 1), int(-6));
    }

    // Another 1730 misprint: the printed table shows 105056 where the
    // recurrence gives 13068 + 8 * 13132 = 118124.
    #[test]
    fn first_kind_historical_misprint_entry() {
        assert_eq!(stirling1_unsigned(9, 3), int(118_124));
        assert_eq!(
            stirling1_unsigned(8, 2) + int(8) * stirling1_unsigned(8, 3),
            int(118_124)
        );
    }

    #[test]
    fn first_column_is_factorial_of_m_minus_one() {
        for m in 1..=20usize {
            assert_eq!(stirling1_unsigned(m, 1), factorial(m - 1), "m={m}");
        }
    }

    #[test]
    fn first_kind_row_sums_are_factorials() {
        let table = first_kind_table(15).unwrap();
        for (m, sum) in table.row_sums().iter().enumerate() {
            assert_eq!(sum, &factorial(m), "m={m}");
        }
    }

    #[test]
    fn superdiagonal_is_triangular_number() {
        for n in 0..=50usize {
            assert_eq!(
                stirling2(n + 1, n),
                binomial(n + 1, 2),
                "S(n+1, n) at n={n}"
            );
        }
    }

    #[test]
    fn orthogonality_small_grid() {
        for m in 0..=12usize {
            for n in 0..=12usize {
                let expected = if m == n { int(1) } else { int(0) };
                assert_eq!(orthogonality_sum(m, n), expected, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn orthogonality_examples() {
        assert_eq!(orthogonality_sum(3, 2), int(0));
        assert_eq!(orthogonality_sum(4, 4), int(1));
        assert_eq!(orthogonality_sum(5, 0), int(0));
    }

    #[test]
    fn second_kind_table_rows() {
        let table = second_kind_table(4).unwrap();
        assert_eq!(table.rows()[4], vec![int(0), int(1), int(7), int(6), int(1)]);
        assert_eq!(table.entry(3, 2), int(3));
        assert_eq!(table.entry(2, 9), int(0));
        assert_eq!(table.max_m(), 4);
    }

    #[test]
    fn first_kind_table_rows() {
        let table = first_kind_table(4).unwrap();
        assert_eq!(
            table.rows()[4],
            vec![int(0), int(6), int(11), int(6), int(1)]
        );
        let signed = first_kind_table_signed(4).unwrap();
        assert_eq!(
            signed.rows()[4],
            vec![int(0), int(-6), int(11), int(-6), int(1)]
        );
    }

    #[test]
    fn transposed_layout_starts_each_row_at_the_diagonal() {
        let table = second_kind_table(9).unwrap();
        let rows = table.transposed_rows();
        assert_eq!(rows[1], vec![int(1); 9]);
        assert_eq!(
            rows[2],
            vec![
                int(1),
                int(3),
                int(7),
                int(15),
                int(31),
                int(63),
                int(127),
                int(255)
            ]
        );
        assert_eq!(rows[7], vec![int(1), int(28), int(462)]);
        assert_eq!(rows[9], vec![int(1)]);
    }

    #[test]
    fn tables_reject_oversized_requests() {
        assert!(second_kind_table(200).is_ok());
        assert_eq!(
            second_kind_table(201),
            Err(Error::TableLimit {
                max_m: 201,
                limit: 200
            })
        );
        assert!(first_kind_table(201).is_err());
        assert!(first_kind_table_signed(201).is_err());
    }

    #[test]
    fn diagonal_entries_are_one() {
        let table = second_kind_table(30).unwrap();
        for m in 0..=30usize {
            assert_eq!(table.entry(m, m), int(1));
        }
    }

    #[test]
    fn table_agrees_with_single_entry_queries() {
        let second = second_kind_table(16).unwrap();
        let first = first_kind_table(16).unwrap();
        for m in 0..=16usize {
            for n in 0..=m {
                assert_eq!(second.entry(m, n), stirling2(m, n));
                assert_eq!(first.entry(m, n), stirling1_unsigned(m, n));
            }
        }
    }
}
