use crate::AggregationError;
use fvn_assr::{Assr, Trans};
use fvn_stp::{BooleanMatrix, CountMatrix, LogicalMatrix, StochasticMatrix};
use num::{BigInt, BigRational, One};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Quotient of a block system in all three guises: transition counts, their
/// boolean sign, and their column-normalized probabilities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockQuotient {
    pub count: CountMatrix,
    /// `booleanize(count)`; the boolean simulation of the block.
    pub boolean_sim: BooleanMatrix,
    /// `count` with every column divided by its sum.
    pub prob: StochasticMatrix,
    /// Every column keeps exactly one successor class, so the quotient
    /// replaces the block without losing behaviour.
    pub deterministic: bool,
}

/// `H * L * (I ⊗ H^T)` as a plain integer product: entry (i, j) counts the
/// states in the class behind column j that move into class i under the
/// column's input. Column index runs input-major over input, then class.
pub fn block_count_matrix(assr: &Assr) -> CountMatrix {
    let h = assr.h.to_count();
    let l = match &assr.l {
        Trans::Logical(m) => m.to_count(),
        Trans::Boolean(m) => m.to_count(),
    };
    let lift = CountMatrix::identity(assr.m_inputs).kron(&assr.h.transpose().to_count());
    h.mul(&l)
        .and_then(|hl| hl.mul(&lift))
        .expect("quotient factor dimensions agree by construction")
}

/// Count, booleanize and column-normalize the quotient of a block system.
pub fn block_simulation(assr: &Assr) -> BlockQuotient {
    let count = block_count_matrix(assr);
    let boolean_sim = count.booleanize();
    let prob = count.column_normalize();
    let deterministic = (0..boolean_sim.ncols()).all(|j| boolean_sim.col_count(j) == 1);
    BlockQuotient { count, boolean_sim, prob, deterministic }
}

/// Probability that independent per-column draws from the counting quotient
/// pick exactly `selection`: the product over columns j of
/// `count(selection[j], j) / colsum(j)`. `selection` holds one 1-based row
/// per column.
pub fn realization_probability(
    count: &CountMatrix,
    selection: &[usize],
) -> Result<BigRational, AggregationError> {
    assert_eq!(selection.len(), count.ncols(), "one selected row per column");
    let mut p = BigRational::one();
    for (j, &row) in selection.iter().enumerate() {
        assert!((1..=count.rows()).contains(&row), "selected row {row} out of range");
        let sum = count.col_sum(j);
        if sum == 0 {
            return Err(AggregationError::DeadColumn { col: j });
        }
        p *= BigRational::new(BigInt::from(count.get(row - 1, j)), BigInt::from(sum));
    }
    Ok(p)
}

/// Draw one logical matrix from the counting quotient: column j picks row i
/// with probability `count(i, j) / colsum(j)`, independently per column. The
/// generator is ChaCha8 seeded from `seed`, so equal seeds reproduce the
/// draw on every platform.
pub fn sample_realization(
    bq: &BlockQuotient,
    seed: u64,
) -> Result<LogicalMatrix, AggregationError> {
    let count = &bq.count;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cols = Vec::with_capacity(count.ncols());
    for j in 0..count.ncols() {
        cols.push(sample_column(count, j, &mut rng)?);
    }
    Ok(LogicalMatrix::new(count.rows(), cols).expect("sampled rows are in range"))
}

/// One draw from column j's distribution, as a 1-based row index.
pub(crate) fn sample_column(
    count: &CountMatrix,
    j: usize,
    rng: &mut ChaCha8Rng,
) -> Result<usize, AggregationError> {
    let sum = count.col_sum(j);
    if sum == 0 {
        return Err(AggregationError::DeadColumn { col: j });
    }
    let mut draw = rng.gen_range(0..sum);
    for i in 0..count.rows() {
        let c = count.get(i, j);
        if draw < c {
            return Ok(i + 1);
        }
        draw -= c;
    }
    unreachable!("draw below the column sum lands on a row")
}
