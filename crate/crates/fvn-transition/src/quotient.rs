use fvn_assr::{Assr, Trans};
use fvn_stp::{BooleanMatrix, LogicalMatrix};

/// The partition of states induced by an observation matrix: state `i` and
/// `i'` share a class iff `H` observes them identically. Classes are the
/// rows of `H`, so a class can be uninhabited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputPartition {
    class_of: Vec<usize>,
    members: Vec<Vec<usize>>,
}

impl OutputPartition {
    pub fn from_h(h: &LogicalMatrix) -> Self {
        let mut class_of = Vec::with_capacity(h.ncols());
        let mut members = vec![Vec::new(); h.rows()];
        for state0 in 0..h.ncols() {
            let class = h.col(state0) - 1;
            class_of.push(class);
            members[class].push(state0 + 1);
        }
        Self { class_of, members }
    }

    pub fn n_classes(&self) -> usize {
        self.members.len()
    }

    /// 1-based class of a 1-based state.
    pub fn class_of(&self, state: usize) -> usize {
        self.class_of[state - 1] + 1
    }

    /// 1-based states of a 1-based class, ascending.
    pub fn members(&self, class: usize) -> &[usize] {
        &self.members[class - 1]
    }

    pub fn inhabited(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.n_classes()).filter(|&c| !self.members(c).is_empty())
    }
}

/// Quotient by the observation partition, built from the closed-form matrix
/// expression: `L_q = H *B L *B (I_m (x) H^T)` with boolean products, and
/// `H_q = I`. Promoted back to logical form when every column keeps exactly
/// one successor.
pub fn quotient(assr: &Assr) -> Assr {
    let h = assr.h.to_boolean();
    let l = assr.l.to_boolean();
    let lift = BooleanMatrix::identity(assr.m_inputs).kron(&h.transpose());
    let lq = h
        .bool_mul(&l)
        .and_then(|hl| hl.bool_mul(&lift))
        .expect("quotient factor dimensions agree by construction");
    package_quotient(assr, lq)
}

/// Quotient computed directly from the definition: the successor classes of
/// a class under an input are the classes of every successor of every
/// member. Serves as an independent reference for [`quotient`].
pub fn quotient_by_definition(assr: &Assr) -> Assr {
    let part = OutputPartition::from_h(&assr.h);
    let p = part.n_classes();
    let mut lq = BooleanMatrix::zeros(p, assr.m_inputs * p);
    for input in 1..=assr.m_inputs {
        for class in 1..=p {
            let col = (input - 1) * p + class - 1;
            for &s in part.members(class) {
                for succ in assr.successors(s, input) {
                    lq.set(part.class_of(succ) - 1, col, true);
                }
            }
        }
    }
    package_quotient(assr, lq)
}

fn package_quotient(assr: &Assr, lq: BooleanMatrix) -> Assr {
    let p = assr.p_obs;
    let l = match lq.to_logical() {
        Some(lm) => Trans::Logical(lm),
        None => Trans::Boolean(lq),
    };
    Assr::new(p, assr.m_inputs, p, l, LogicalMatrix::identity(p))
        .expect("quotient dimensions agree by construction")
}

/// Every (state, input) pair has exactly one successor.
pub fn is_deterministic(assr: &Assr) -> bool {
    assr.is_deterministic()
}
