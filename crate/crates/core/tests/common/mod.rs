#![allow(dead_code)]

use tabula::TableAlgebra;

/// Group algebra of S_3 with bar = inverse: non-commutative with a nontrivial
/// involution, so it separates left/right and orientation conventions.
pub fn s3() -> TableAlgebra {
    let perms: Vec<[usize; 3]> = vec![
        [0, 1, 2],
        [1, 0, 2],
        [0, 2, 1],
        [2, 1, 0],
        [1, 2, 0],
        [2, 0, 1],
    ];
    let idx = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
    let table: Vec<Vec<usize>> = perms
        .iter()
        .map(|&a| {
            perms
                .iter()
                .map(|&b| idx([a[b[0]], a[b[1]], a[b[2]]]))
                .collect()
        })
        .collect();
    TableAlgebra::group_algebra(&table, 0).unwrap()
}

pub fn z3() -> TableAlgebra {
    TableAlgebra::cyclic_group(3).unwrap()
}
