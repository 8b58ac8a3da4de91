use num_integer::Integer;

use super::matrix::Matrix;

/// Left semitensor product `a ⋉ b`.
///
/// With `t = lcm(cols(a), rows(b))` this is `(a ⊗ I_{t/cols(a)}) (b ⊗ I_{t/rows(b)})`,
/// which is defined for every pair of shapes and coincides with the ordinary
/// product when the inner dimensions agree.
pub fn stp(a: &Matrix, b: &Matrix) -> Matrix {
    let t = a.cols().lcm(&b.rows());
    let left = inflate(a, t / a.cols());
    let right = inflate(b, t / b.rows());
    &left * &right
}

fn inflate(m: &Matrix, factor: usize) -> Matrix {
    if factor == 1 {
        m.clone()
    } else {
        m.kron(&Matrix::identity(factor))
    }
}

/// Left-to-right semitensor product of a nonempty sequence.
pub fn stp_chain<'a>(factors: impl IntoIterator<Item = &'a Matrix>) -> Option<Matrix> {
    let mut it = factors.into_iter();
    let first = it.next()?.clone();
    Some(it.fold(first, |acc, m| stp(&acc, m)))
}
