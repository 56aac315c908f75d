use crate::cyclotomic::CycloNum;

/// Rank over Q(ζ_N) by Gaussian elimination with exact field inverses.
pub fn exact_rank(rows: &[Vec<CycloNum>]) -> usize {
    let mut a: Vec<Vec<CycloNum>> = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = a[rank][c].inv().expect("nonzero pivot");
        let pivot: Vec<CycloNum> = a[rank].iter().map(|x| x * &inv).collect();
        for r in rank + 1..a.len() {
            if a[r][c].is_zero() {
                continue;
            }
            let f = a[r][c].clone();
            for k in c..cols {
                if !pivot[k].is_zero() {
                    a[r][k] = &a[r][k] - &(&f * &pivot[k]);
                }
            }
        }
        a[rank] = pivot;
        rank += 1;
    }
    rank
}
