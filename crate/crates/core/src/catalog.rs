//! Builtin quivers: the families `K_r`, `L_r`, `U_r`, Dynkin and extended
//! Dynkin diagrams, and the eighteen minimal wild graphs.
//!
//! Orientations are fixed but arbitrary; nothing computed in this crate
//! except the representations in [`crate::linrep`] depends on them. Stars
//! point every ray at the center so that [`star`]`(4)` carries the
//! four-subspace representations of [`crate::linrep::d4_family`].
//!
//! Catalog names, as accepted by [`lookup`]:
//!
//! | name | quiver |
//! |------|--------|
//! | `K_r` | Kronecker quiver, `r` parallel arrows `1 → 2` |
//! | `L_r` | one vertex with `r` loops |
//! | `U_r` | star with center `0` and rays `1..r` |
//! | `A_n`, `D_n`, `E_6`..`E_8` | Dynkin diagrams |
//! | `At_n`, `Dt_n`, `Et_6`..`Et_8` | extended Dynkin diagrams (`At_0 = L_1`, `At_1 = K_2`) |
//! | `Att_0`..`Att_6`, `Dtt_4`..`Dtt_8`, `Ett_6`, `Ett_7`, `E8tt` | minimal wild graphs |
//! | `K3K3` | two disjoint copies of `K_3` on vertices `1..4` |
//! | `E8tt+j` | `E8tt` with a new vertex `11` joined to vertex `j` |

use crate::error::{Error, Result};
use crate::quiver::Quiver;

fn numbered(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// Builds a quiver on vertices named `1..=n` from 1-based edges.
fn graph(n: usize, edges: &[(usize, usize)]) -> Quiver {
    Quiver::from_indices(numbered(n), edges.iter().map(|&(a, b)| (a - 1, b - 1)))
        .expect("catalog quivers are well formed")
}

fn path_edges(vertices: &[usize]) -> Vec<(usize, usize)> {
    vertices.windows(2).map(|w| (w[0], w[1])).collect()
}

/// A tree with a center `1` and arms of the given lengths, numbered
/// consecutively arm by arm, arrows pointing away from the center.
fn arms(lengths: &[usize]) -> Quiver {
    let mut edges = Vec::new();
    let mut next = 2;
    for &len in lengths {
        let mut prev = 1;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    graph(next - 1, &edges)
}

/// `K_r`: two vertices and `r` arrows `1 → 2`.
pub fn kronecker(r: usize) -> Quiver {
    graph(2, &vec![(1, 2); r])
}

/// `L_r`: one vertex `1` with `r` loops.
pub fn loops(r: usize) -> Quiver {
    graph(1, &vec![(1, 1); r])
}

/// `U_r`: center `0`, rays `1..=r`, arrows `i → 0`.
pub fn star(r: usize) -> Quiver {
    Quiver::from_indices((0..=r).map(|i| i.to_string()), (1..=r).map(|i| (i, 0)))
        .expect("star is well formed")
}

/// The path `1 → 2 → ... → n`.
pub fn dynkin_a(n: usize) -> Quiver {
    graph(n, &path_edges(&(1..=n).collect::<Vec<_>>()))
}

/// `D_n` (`n ≥ 4`): the path `1..n-1` with `n` attached to `n-2`.
pub fn dynkin_d(n: usize) -> Quiver {
    assert!(n >= 4, "D_n needs n >= 4");
    let mut edges = path_edges(&(1..n).collect::<Vec<_>>());
    edges.push((n - 2, n));
    graph(n, &edges)
}

/// `E_n` (`6 ≤ n ≤ 8`) in Bourbaki numbering: the path `1,3,4,...,n` with
/// `2` attached to `4`.
pub fn dynkin_e(n: usize) -> Quiver {
    assert!((6..=8).contains(&n), "E_n needs 6 <= n <= 8");
    let mut spine = vec![1];
    spine.extend(3..=n);
    let mut edges = path_edges(&spine);
    edges.push((2, 4));
    graph(n, &edges)
}

/// `Ã_n`: the loop `L_1` for `n = 0`, `K_2` for `n = 1`, and the oriented
/// cycle `1 → 2 → ... → n+1 → 1` otherwise.
pub fn affine_a(n: usize) -> Quiver {
    match n {
        0 => loops(1),
        1 => kronecker(2),
        _ => {
            let mut edges = path_edges(&(1..=n + 1).collect::<Vec<_>>());
            edges.push((n + 1, 1));
            graph(n + 1, &edges)
        }
    }
}

/// `D̃_n` (`n ≥ 4`): `U_4` for `n = 4`; otherwise leaves `1, 2` on `3`, the
/// chain `3..n-1`, and leaves `n, n+1` on `n-1`.
pub fn affine_d(n: usize) -> Quiver {
    assert!(n >= 4, "D̃_n needs n >= 4");
    if n == 4 {
        return star(4);
    }
    let mut edges = vec![(1, 3), (2, 3)];
    edges.extend(path_edges(&(3..n).collect::<Vec<_>>()));
    edges.extend([(n - 1, n), (n - 1, n + 1)]);
    graph(n + 1, &edges)
}

/// `Ẽ_n` (`6 ≤ n ≤ 8`). `Ẽ_8` uses the numbering of [`e8tt`] restricted
/// to vertices `1..9`; the others are centered at `1`.
pub fn affine_e(n: usize) -> Quiver {
    match n {
        6 => arms(&[2, 2, 2]),
        7 => arms(&[1, 3, 3]),
        8 => {
            let mut edges = path_edges(&[1, 2, 3, 5, 6, 7, 8, 9]);
            edges.push((3, 4));
            graph(9, &edges)
        }
        _ => panic!("Ẽ_n needs 6 <= n <= 8"),
    }
}

/// `Ã̃_n` (`0 ≤ n`): a pendant vertex `0` attached to vertex `1` of `Ã_n`
/// on vertices `1..n+1` (for `n = 0`, vertex `1` carries a loop).
pub fn att(n: usize) -> Quiver {
    let names = (0..=n + 1).map(|i| i.to_string());
    let mut edges = vec![(0, 1)];
    match n {
        0 => edges.push((1, 1)),
        _ => {
            edges.extend((1..=n).map(|i| (i, i + 1)));
            edges.push((n + 1, 1));
        }
    }
    Quiver::from_indices(names, edges).expect("well formed")
}

/// `D̃̃_n` (`n ≥ 4`): `D̃_n` with one leaf extended by a new vertex `n+2`.
pub fn dtt(n: usize) -> Quiver {
    assert!(n >= 4, "D̃̃_n needs n >= 4");
    if n == 4 {
        let names = (0..=5).map(|i| i.to_string());
        let edges = vec![(1, 0), (2, 0), (3, 0), (4, 0), (5, 1)];
        return Quiver::from_indices(names, edges).expect("well formed");
    }
    let base = affine_d(n);
    let mut edges: Vec<(usize, usize)> = base.arrows().iter().map(|a| (a.source + 1, a.target + 1)).collect();
    edges.push((n + 2, 1));
    graph(n + 2, &edges)
}

/// `Ẽ̃_6` and `Ẽ̃_7`: the trees with arms `(2,2,3)` and `(1,3,4)`.
pub fn ett(n: usize) -> Quiver {
    match n {
        6 => arms(&[2, 2, 3]),
        7 => arms(&[1, 3, 4]),
        8 => e8tt(),
        _ => panic!("Ẽ̃_n needs 6 <= n <= 8"),
    }
}

/// `Ẽ̃_8`: the path `1-2-3-5-6-7-8-9-10` with `4` attached to `3`.
pub fn e8tt() -> Quiver {
    let mut edges = path_edges(&[1, 2, 3, 5, 6, 7, 8, 9, 10]);
    edges.push((3, 4));
    graph(10, &edges)
}

/// [`e8tt`] plus a vertex `11` joined by one edge to vertex `j`.
pub fn e8tt_extended(j: usize) -> Quiver {
    assert!((1..=10).contains(&j), "attachment vertex must be in 1..=10");
    let mut edges = path_edges(&[1, 2, 3, 5, 6, 7, 8, 9, 10]);
    edges.push((3, 4));
    edges.push((j, 11));
    graph(11, &edges)
}

/// Two disjoint copies of `K_3` on vertices `1..4`.
pub fn k3k3() -> Quiver {
    graph(4, &[(1, 2), (1, 2), (1, 2), (3, 4), (3, 4), (3, 4)])
}

/// One row of the minimal wild graph table.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    /// Row label, e.g. `E8-tilde-tilde`.
    pub label: &'static str,
    /// Catalog name accepted by [`lookup`].
    pub name: String,
    pub quiver: Quiver,
}

/// The eighteen minimal wild graphs, in the order `L2, K3, U5, Ã̃_0..Ã̃_6,
/// D̃̃_4..D̃̃_8, Ẽ̃_6, Ẽ̃_7, Ẽ̃_8`.
pub fn minimal_wild_graphs() -> Vec<CatalogEntry> {
    const ATT: [&str; 7] = [
        "A0-tilde-tilde",
        "A1-tilde-tilde",
        "A2-tilde-tilde",
        "A3-tilde-tilde",
        "A4-tilde-tilde",
        "A5-tilde-tilde",
        "A6-tilde-tilde",
    ];
    const DTT: [&str; 5] = [
        "D4-tilde-tilde",
        "D5-tilde-tilde",
        "D6-tilde-tilde",
        "D7-tilde-tilde",
        "D8-tilde-tilde",
    ];
    let mut rows = vec![
        CatalogEntry { label: "L2", name: "L_2".into(), quiver: loops(2) },
        CatalogEntry { label: "K3", name: "K_3".into(), quiver: kronecker(3) },
        CatalogEntry { label: "U5", name: "U_5".into(), quiver: star(5) },
    ];
    rows.extend((0..=6).map(|n| CatalogEntry {
        label: ATT[n],
        name: format!("Att_{n}"),
        quiver: att(n),
    }));
    rows.extend((4..=8).map(|n| CatalogEntry {
        label: DTT[n - 4],
        name: format!("Dtt_{n}"),
        quiver: dtt(n),
    }));
    rows.push(CatalogEntry { label: "E6-tilde-tilde", name: "Ett_6".into(), quiver: ett(6) });
    rows.push(CatalogEntry { label: "E7-tilde-tilde", name: "Ett_7".into(), quiver: ett(7) });
    rows.push(CatalogEntry { label: "E8-tilde-tilde", name: "E8tt".into(), quiver: e8tt() });
    rows
}

/// Resolves a catalog name (with or without a leading `@`).
pub fn lookup(name: &str) -> Result<Quiver> {
    let name = name.strip_prefix('@').unwrap_or(name);
    let unknown = || Error::InvalidArgument(format!("unknown catalog quiver {name:?}"));
    match name {
        "K3K3" => return Ok(k3k3()),
        "E8tt" | "Ett_8" => return Ok(e8tt()),
        _ => {}
    }
    if let Some(j) = name.strip_prefix("E8tt+") {
        let j: usize = j.parse().map_err(|_| unknown())?;
        if !(1..=10).contains(&j) {
            return Err(unknown());
        }
        return Ok(e8tt_extended(j));
    }
    let (family, param) = name.split_once('_').ok_or_else(unknown)?;
    let n: usize = param.parse().map_err(|_| unknown())?;
    let q = match family {
        "K" => kronecker(n),
        "L" => loops(n),
        "U" => star(n),
        "A" if n >= 1 => dynkin_a(n),
        "D" if n >= 4 => dynkin_d(n),
        "E" if (6..=8).contains(&n) => dynkin_e(n),
        "At" => affine_a(n),
        "Dt" if n >= 4 => affine_d(n),
        "Et" if (6..=8).contains(&n) => affine_e(n),
        "Att" => att(n),
        "Dtt" if n >= 4 => dtt(n),
        "Ett" if (6..=8).contains(&n) => ett(n),
        _ => return Err(unknown()),
    };
    Ok(q)
}

/// Names and short descriptions for `qed catalog --list`.
pub fn listing() -> Vec<(&'static str, &'static str)> {
    vec![
        ("K_r", "Kronecker quiver with r parallel arrows"),
        ("L_r", "one vertex with r loops"),
        ("U_r", "star with r rays pointing at center 0"),
        ("A_n", "Dynkin path, n >= 1"),
        ("D_n", "Dynkin D, n >= 4"),
        ("E_n", "Dynkin E, n = 6, 7, 8"),
        ("At_n", "extended Dynkin A (At_0 = L_1, At_1 = K_2, cycles otherwise)"),
        ("Dt_n", "extended Dynkin D, n >= 4 (Dt_4 = U_4)"),
        ("Et_n", "extended Dynkin E, n = 6, 7, 8"),
        ("Att_n", "minimal wild graph A-tilde-tilde, minimal for n <= 6"),
        ("Dtt_n", "minimal wild graph D-tilde-tilde, minimal for 4 <= n <= 8"),
        ("Ett_6, Ett_7, E8tt", "minimal wild graphs of type E-tilde-tilde"),
        ("K3K3", "disjoint union of two K_3"),
        ("E8tt+j", "E8tt with a new vertex 11 joined to vertex j"),
    ]
}
