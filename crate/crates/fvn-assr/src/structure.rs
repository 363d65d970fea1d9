use fvn_netdsl::BinOp;
use fvn_stp::LogicalMatrix;

/// The connectives with a fixed structure matrix at every k.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Connective {
    Not,
    And,
    Or,
    Implies,
    Iff,
    Xor,
}

impl From<BinOp> for Connective {
    fn from(op: BinOp) -> Self {
        match op {
            BinOp::And => Connective::And,
            BinOp::Or => Connective::Or,
            BinOp::Implies => Connective::Implies,
            BinOp::Iff => Connective::Iff,
            BinOp::Xor => Connective::Xor,
        }
    }
}

/// Structure matrix of a connective on truth levels `1..=k`: the k x k
/// (negation) or k x k^2 (binary) logical matrix whose column at a composite
/// argument index holds the connective's value.
///
/// For k = 2 these are the familiar delta patterns: negation `[2 1]`,
/// conjunction `[1 2 2 2]`, disjunction `[1 1 1 2]`, implication
/// `[1 2 1 1]`, equivalence `[1 2 2 1]`, exclusive or `[2 1 1 2]`.
pub fn operator_structure_matrix(op: Connective, k: usize) -> LogicalMatrix {
    let cols = match op {
        Connective::Not => (1..=k).map(|a| k + 1 - a).collect(),
        _ => {
            let mut cols = Vec::with_capacity(k * k);
            for a in 1..=k {
                for b in 1..=k {
                    cols.push(match op {
                        Connective::And => a.max(b),
                        Connective::Or => a.min(b),
                        Connective::Implies => (k + 1 - a).min(b),
                        Connective::Iff => 1 + a.abs_diff(b),
                        Connective::Xor => k - a.abs_diff(b),
                        Connective::Not => unreachable!(),
                    });
                }
            }
            cols
        }
    };
    LogicalMatrix::new(k, cols).expect("connective values stay in 1..=k")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_structure_matrices() {
        let m = |op| operator_structure_matrix(op, 2).entries().to_vec();
        assert_eq!(m(Connective::Not), vec![2, 1]);
        assert_eq!(m(Connective::And), vec![1, 2, 2, 2]);
        assert_eq!(m(Connective::Or), vec![1, 1, 1, 2]);
        assert_eq!(m(Connective::Implies), vec![1, 2, 1, 1]);
        assert_eq!(m(Connective::Iff), vec![1, 2, 2, 1]);
        assert_eq!(m(Connective::Xor), vec![2, 1, 1, 2]);
    }

    #[test]
    fn three_level_negation_mirrors() {
        assert_eq!(operator_structure_matrix(Connective::Not, 3).entries(), &[3, 2, 1]);
    }
}
