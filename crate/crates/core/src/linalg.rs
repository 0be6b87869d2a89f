//! Exact rank of integer matrices by fraction-free Gaussian elimination.

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Rank over the rationals of the row space spanned by `rows`.
///
/// Each elimination step cross-multiplies two rows and divides out the row
/// content, so entries stay small for the 0/±1 matrices used here.
pub fn integer_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .filter(|r: &Vec<i128>| r.iter().any(|&v| v != 0))
        .collect();
    let width = m.iter().map(Vec::len).max().unwrap_or(0);
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..m.len()).find(|&i| m[i].get(col).copied().unwrap_or(0) != 0)
        else {
            continue;
        };
        m.swap(rank, pivot);
        let prow = m[rank].clone();
        let p = prow[col];
        for row in m.iter_mut().skip(rank + 1) {
            let f = row.get(col).copied().unwrap_or(0);
            if f == 0 {
                continue;
            }
            let mut content = 0;
            for (j, v) in row.iter_mut().enumerate() {
                *v = *v * p - f * prow.get(j).copied().unwrap_or(0);
                content = gcd(content, *v);
            }
            if content > 1 {
                row.iter_mut().for_each(|v| *v /= content);
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}
