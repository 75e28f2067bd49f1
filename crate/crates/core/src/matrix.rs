use alloc::vec;
use alloc::vec::Vec;

/// Dense square matrix with entries in `{-1, 0, 1}`, row-major.
///
/// Built from a signed graph it is symmetric with zero diagonal; the
/// general constructors only enforce the entry range so the rank routines
/// can also be exercised on arbitrary symmetric sign matrices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    order: usize,
    entries: Vec<i8>,
}

impl IntMatrix {
    pub fn zero(order: usize) -> Self {
        IntMatrix {
            order,
            entries: vec![0; order * order],
        }
    }

    /// Builds a matrix from `entry(i, j)`; returns `None` if any entry is
    /// outside `{-1, 0, 1}`.
    pub fn from_fn<F: FnMut(usize, usize) -> i64>(order: usize, mut entry: F) -> Option<Self> {
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                let x = entry(i, j);
                if !(-1..=1).contains(&x) {
                    return None;
                }
                entries.push(x as i8);
            }
        }
        Some(IntMatrix { order, entries })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.order + j]
    }

    pub(crate) fn set_symmetric(&mut self, i: usize, j: usize, value: i8) {
        self.entries[i * self.order + j] = value;
        self.entries[j * self.order + i] = value;
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn has_zero_diagonal(&self) -> bool {
        (0..self.order).all(|i| self.get(i, i) == 0)
    }
}
