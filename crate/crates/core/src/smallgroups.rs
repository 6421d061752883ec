//! Constructions of concrete finite groups and a registry of all groups of a
//! given small order.
//!
//! The registry builds candidate tables from cyclic, dihedral and dicyclic
//! series plus all direct and semidirect products of smaller registry groups,
//! then deduplicates by canonical form. That candidate set is exhaustive for
//! every order up to 24, which is as far as [`groups_of_order`] goes.

use crate::group::{
    canonical_tables, Elem, FiniteGroup, GroupError,
};
use std::collections::HashSet;

/// Z_n under addition.
pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let mut table = vec![0 as Elem; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = ((a + b) % n) as Elem;
        }
    }
    FiniteGroup::from_flat(n, table).expect("cyclic table is a group")
}

/// Dihedral group of order `2m`: rotations and reflections of an m-gon.
/// `m = 1` gives Z_2 and `m = 2` the Klein four-group.
pub fn dihedral(m: usize) -> FiniteGroup {
    assert!(m >= 1);
    let n = 2 * m;
    // (i, j) = r^i s^j encoded as i*2 + j; s r s = r^{-1}.
    let enc = |i: usize, j: usize| (i * 2 + j) as Elem;
    let mut table = vec![0 as Elem; n * n];
    for i in 0..m {
        for j in 0..2 {
            for k in 0..m {
                for l in 0..2 {
                    let v = if j == 0 {
                        enc((i + k) % m, l)
                    } else {
                        enc((i + m - k) % m, 1 - l)
                    };
                    table[enc(i, j) as usize * n + enc(k, l) as usize] = v;
                }
            }
        }
    }
    FiniteGroup::from_flat(n, table).expect("dihedral table is a group")
}

/// Dicyclic group of order `4m`: generators a of order 2m and b with
/// b^2 = a^m and b a b^{-1} = a^{-1}. `m = 1` gives Z_4, `m = 2` the
/// quaternion group.
pub fn dicyclic(m: usize) -> FiniteGroup {
    assert!(m >= 1);
    let n = 4 * m;
    let mm = 2 * m;
    let enc = |i: usize, j: usize| (i * 2 + j) as Elem;
    let mut table = vec![0 as Elem; n * n];
    for i in 0..mm {
        for j in 0..2 {
            for k in 0..mm {
                for l in 0..2 {
                    let v = if j == 0 {
                        enc((i + k) % mm, l)
                    } else if l == 0 {
                        enc((i + mm - k) % mm, 1)
                    } else {
                        enc((i + mm - k + m) % mm, 0)
                    };
                    table[enc(i, j) as usize * n + enc(k, l) as usize] = v;
                }
            }
        }
    }
    FiniteGroup::from_flat(n, table).expect("dicyclic table is a group")
}

fn permutations(degree: usize) -> Vec<Vec<usize>> {
    // Lexicographic order, so the identity permutation comes first.
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    fn rec(degree: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == degree {
            out.push(cur.clone());
            return;
        }
        for x in 0..degree {
            if !cur.contains(&x) {
                cur.push(x);
                rec(degree, cur, out);
                cur.pop();
            }
        }
    }
    rec(degree, &mut cur, &mut out);
    out
}

fn is_even(p: &[usize]) -> bool {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

fn permutation_table(perms: &[Vec<usize>]) -> FiniteGroup {
    let n = perms.len();
    let index = |p: &[usize]| perms.iter().position(|q| q == p).unwrap() as Elem;
    let mut table = vec![0 as Elem; n * n];
    for (a, p) in perms.iter().enumerate() {
        for (b, q) in perms.iter().enumerate() {
            let composed: Vec<usize> = (0..p.len()).map(|x| p[q[x]]).collect();
            table[a * n + b] = index(&composed);
        }
    }
    FiniteGroup::from_flat(n, table).expect("permutation composition is a group")
}

/// The symmetric group on `degree` points, built from actual permutation
/// composition. Bounded at degree 4 (order 24).
pub fn symmetric(degree: usize) -> Result<FiniteGroup, GroupError> {
    if degree > 4 {
        return Err(GroupError::OrderTooLarge { n: factorial(degree), cap: 24 });
    }
    Ok(permutation_table(&permutations(degree.max(1))))
}

/// The alternating group on `degree` points. Bounded at degree 5 (order 60).
pub fn alternating(degree: usize) -> Result<FiniteGroup, GroupError> {
    if degree > 5 {
        return Err(GroupError::OrderTooLarge { n: factorial(degree) / 2, cap: 60 });
    }
    let perms: Vec<Vec<usize>> =
        permutations(degree.max(1)).into_iter().filter(|p| is_even(p)).collect();
    Ok(permutation_table(&perms))
}

fn factorial(k: usize) -> usize {
    (1..=k).product::<usize>().max(1)
}

/// A x B with the pair (a, b) encoded as `a * |B| + b`.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let mut table = vec![0 as Elem; n * n];
    for a1 in 0..na {
        for b1 in 0..nb {
            for a2 in 0..na {
                for b2 in 0..nb {
                    let v = a.op(a1 as Elem, a2 as Elem) as usize * nb
                        + b.op(b1 as Elem, b2 as Elem) as usize;
                    table[(a1 * nb + b1) * n + (a2 * nb + b2)] = v as Elem;
                }
            }
        }
    }
    FiniteGroup::from_flat(n, table).expect("direct product is a group")
}

/// The automorphism group of `g` as a composition table, together with the
/// automorphisms themselves in the matching index order (index 0 is the
/// identity map).
pub fn automorphism_group(g: &FiniteGroup) -> (FiniteGroup, Vec<Vec<Elem>>) {
    let autos = g.automorphisms();
    let m = autos.len();
    let index: std::collections::HashMap<&[Elem], Elem> =
        autos.iter().enumerate().map(|(i, a)| (a.as_slice(), i as Elem)).collect();
    let mut table = vec![0 as Elem; m * m];
    for (i, p) in autos.iter().enumerate() {
        for (j, q) in autos.iter().enumerate() {
            let composed: Vec<Elem> = (0..g.order()).map(|x| p[q[x] as usize]).collect();
            table[i * m + j] = index[composed.as_slice()];
        }
    }
    let group = FiniteGroup::from_flat(m, table).expect("automorphism composition is a group");
    (group, autos)
}

/// N x| H for a given action: `theta[h]` must be the automorphism of N by
/// which `h` acts, with `theta` a homomorphism from H to Aut(N). The pair
/// (x, h) is encoded as `x * |H| + h`. The result is fully re-validated, so a
/// `theta` that is not an action fails loudly rather than yielding junk.
pub fn semidirect_product(
    n_grp: &FiniteGroup,
    h_grp: &FiniteGroup,
    theta: &[Vec<Elem>],
) -> Result<FiniteGroup, GroupError> {
    assert_eq!(theta.len(), h_grp.order());
    let (nn, nh) = (n_grp.order(), h_grp.order());
    let n = nn * nh;
    let mut table = vec![0 as Elem; n * n];
    for x1 in 0..nn {
        for h1 in 0..nh {
            for x2 in 0..nn {
                for h2 in 0..nh {
                    let x = n_grp.op(x1 as Elem, theta[h1][x2]) as usize;
                    let h = h_grp.op(h1 as Elem, h2 as Elem) as usize;
                    table[(x1 * nh + h1) * n + (x2 * nh + h2)] = (x * nh + h) as Elem;
                }
            }
        }
    }
    FiniteGroup::from_flat(n, table)
}

/// One representative per isomorphism class of groups of order `n`, in
/// canonical form, sorted by table. Supported for `n <= 24`.
///
///// Candidates: the cyclic group, dihedral and dicyclic groups of matching
/// order, and every direct or semidirect product of registry groups of
/// complementary smaller orders (actions ranging over all homomorphisms into
/// the automorphism group). For orders up to 24 every group splits this way,
/// so the sweep is exhaustive.
pub fn groups_of_order(n: usize) -> Result<Vec<FiniteGroup>, GroupError> {
    const CAP: usize = 24;
    if n == 0 || n > CAP {
        return Err(GroupError::OrderTooLarge { n, cap: CAP });
    }
    let mut candidates: Vec<FiniteGroup> = vec![cyclic(n)];
    if n % 2 == 0 && n >= 4 {
        candidates.push(dihedral(n / 2));
    }
    if n % 4 == 0 {
        candidates.push(dicyclic(n / 4));
    }
    for d in 2..n {
        if n % d != 0 || n / d < 2 {
            continue;
        }
        let e = n / d;
        let ns = groups_of_order(d)?;
        let hs = groups_of_order(e)?;
        for ng in &ns {
            let (aut, maps) = automorphism_group(ng);
            for hg in &hs {
                if d <= e {
                    candidates.push(direct_product(ng, hg));
                }
                for hom in hg.homomorphisms_to(&aut) {
                    let theta: Vec<Vec<Elem>> =
                        hom.iter().map(|&i| maps[i as usize].clone()).collect();
                    candidates
                        .push(semidirect_product(ng, hg, &theta).expect("action gives a group"));
                }
            }
        }
    }
    let mut seen: HashSet<Vec<Elem>> = HashSet::new();
    let mut out: Vec<FiniteGroup> = Vec::new();
    for g in candidates {
        let canon = canonical_tables(n, &[g.table()]).pop().unwrap();
        if seen.insert(canon.clone()) {
            out.push(FiniteGroup::from_flat(n, canon).expect("canonical relabeling is a group"));
        }
    }
    out.sort_unstable_by(|a, b| a.table().cmp(b.table()));
    Ok(out)
}

/// Convenience: the subgroup lattice size, a common fingerprint in tests.
pub fn subgroup_count(g: &FiniteGroup) -> usize {
    g.all_subgroups().len()
}

/// Membership set of the derived subgroup of a registry group, as a plain
/// helper for callers that only need the order.
pub fn derived_order(g: &FiniteGroup) -> usize {
    g.derived_subgroup().len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_groups_have_a_full_order_generator() {
        for n in 1..=12 {
            let g = cyclic(n);
            assert_eq!(g.order(), n);
            assert!(g.is_abelian());
            if n > 1 {
                assert_eq!(g.element_order(1), n);
            }
        }
    }

    #[test]
    fn dihedral_three_is_the_symmetric_group() {
        let d3 = dihedral(3);
        let s3 = symmetric(3).unwrap();
        assert_eq!(d3.order(), 6);
        assert!(!d3.is_abelian());
        assert!(d3.is_isomorphic_to(&s3));
    }

    #[test]
    fn dihedral_small_cases() {
        assert!(dihedral(1).is_isomorphic_to(&cyclic(2)));
        // Klein four-group: abelian, exponent 2.
        let v4 = dihedral(2);
        assert!(v4.is_abelian());
        assert!((1..4).all(|x| v4.element_order(x) == 2));
        // D4: center of size 2, two elements of order 4.
        let d4 = dihedral(4);
        assert_eq!(d4.center().len(), 2);
        assert_eq!(d4.elements().filter(|&x| d4.element_order(x) == 4).count(), 2);
    }

    #[test]
    fn dicyclic_two_is_the_quaternion_group() {
        assert!(dicyclic(1).is_isomorphic_to(&cyclic(4)));
        let q8 = dicyclic(2);
        assert_eq!(q8.order(), 8);
        assert!(!q8.is_abelian());
        // The quaternion signature: a unique involution.
        assert_eq!(q8.elements().filter(|&x| q8.element_order(x) == 2).count(), 1);
        assert!(!q8.is_isomorphic_to(&dihedral(4)));
        let dic3 = dicyclic(3);
        assert_eq!(dic3.order(), 12);
        assert_eq!(dic3.elements().filter(|&x| dic3.element_order(x) == 2).count(), 1);
    }

    #[test]
    fn symmetric_and_alternating_structure() {
        let s4 = symmetric(4).unwrap();
        assert_eq!(s4.order(), 24);
        assert_eq!(s4.center().len(), 1);
        let derived = s4.derived_subgroup();
        assert_eq!(derived.len(), 12);
        let a4 = alternating(4).unwrap();
        assert_eq!(a4.order(), 12);
        // A4's famous subgroup lattice: no subgroup of order 6.
        let sizes: Vec<usize> = a4.all_subgroups().iter().map(|s| s.len()).collect();
        assert_eq!(sizes, vec![1, 2, 2, 2, 3, 3, 3, 3, 4, 12]);
        assert_eq!(s4.automorphisms().len(), 24);
        assert_eq!(a4.automorphisms().len(), 24);
    }

    #[test]
    fn products_compose_as_expected() {
        let c6 = direct_product(&cyclic(2), &cyclic(3));
        assert!(c6.is_isomorphic_to(&cyclic(6)));
        let c2sq = direct_product(&cyclic(2), &cyclic(2));
        assert!(c2sq.is_isomorphic_to(&dihedral(2)));
        assert!(!direct_product(&cyclic(2), &cyclic(4)).is_isomorphic_to(&cyclic(8)));
    }

    #[test]
    fn semidirect_with_inversion_gives_dihedral() {
        let c3 = cyclic(3);
        let c2 = cyclic(2);
        // Act by inversion: 0 -> identity map, 1 -> x -> -x.
        let theta = vec![vec![0, 1, 2], vec![0, 2, 1]];
        let g = semidirect_product(&c3, &c2, &theta).unwrap();
        assert!(g.is_isomorphic_to(&symmetric(3).unwrap()));
        // A non-action is rejected rather than silently accepted: acting by a
        // transposition-like non-automorphism breaks associativity.
        let bogus = vec![vec![0, 1, 2], vec![1, 0, 2]];
        assert!(semidirect_product(&c3, &c2, &bogus).is_err());
    }

    #[test]
    fn automorphism_group_of_c5_is_c4() {
        let (aut, maps) = automorphism_group(&cyclic(5));
        assert_eq!(aut.order(), 4);
        assert!(aut.is_isomorphic_to(&cyclic(4)));
        assert_eq!(maps.len(), 4);
        assert_eq!(maps[0], vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn automorphism_group_of_elementary_abelian_eight() {
        // GL(3, 2) has order 168.
        let c2cube = direct_product(&direct_product(&cyclic(2), &cyclic(2)), &cyclic(2));
        let (aut, _) = automorphism_group(&c2cube);
        assert_eq!(aut.order(), 168);
        assert_eq!(aut.center().len(), 1);
    }

    #[test]
    fn registry_counts_match_the_classification() {
        let expected = [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 1;
            let got = groups_of_order(n).unwrap().len();
            assert_eq!(got, want, "group count at order {n}");
        }
        assert!(groups_of_order(25).is_err());
    }

    #[test]
    fn registry_counts_larger_orders() {
        assert_eq!(groups_of_order(18).unwrap().len(), 5);
        assert_eq!(groups_of_order(20).unwrap().len(), 5);
        assert_eq!(groups_of_order(21).unwrap().len(), 2);
        assert_eq!(groups_of_order(24).unwrap().len(), 15);
    }

    #[test]
    fn registry_entries_are_canonical_and_pairwise_distinct() {
        for n in [8, 12, 16] {
            let groups = groups_of_order(n).unwrap();
            for g in &groups {
                assert_eq!(g.canonical_form().table(), g.table(), "entry not canonical at {n}");
            }
            for i in 0..groups.len() {
                for j in 0..i {
                    assert!(
                        !groups[i].is_isomorphic_to(&groups[j]),
                        "duplicate iso class at order {n}: {i} vs {j}"
                    );
                }
            }
        }
    }

    #[test]
    fn registry_finds_known_landmarks() {
        // Order 8 contains the quaternion group.
        let eights = groups_of_order(8).unwrap();
        assert!(eights.iter().any(|g| g.is_isomorphic_to(&dicyclic(2))));
        // Order 12 contains A4.
        let twelves = groups_of_order(12).unwrap();
        assert!(twelves.iter().any(|g| g.is_isomorphic_to(&alternating(4).unwrap())));
        // Order 24 contains S4 and a group with a unique involution whose
        // derived subgroup is Q8 (the binary tetrahedral group).
        let big = groups_of_order(24).unwrap();
        assert!(big.iter().any(|g| g.is_isomorphic_to(&symmetric(4).unwrap())));
        assert!(big.iter().any(|g| {
            let derived = g.derived_subgroup();
            derived.len() == 8
                && g.elements().filter(|&x| g.element_order(x) == 2).count() == 1
        }));
    }

    #[test]
    fn subgroup_count_fingerprints() {
        assert_eq!(subgroup_count(&direct_product(&cyclic(4), &cyclic(4))), 15);
        assert_eq!(subgroup_count(&direct_product(&cyclic(3), &cyclic(3))), 6);
        assert_eq!(subgroup_count(&symmetric(4).unwrap()), 30);
        assert_eq!(derived_order(&symmetric(4).unwrap()), 12);
    }
}
