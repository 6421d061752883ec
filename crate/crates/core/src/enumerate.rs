//! Enumeration of skew braces of a given order, up to isomorphism.
//!
//! The production route goes through holomorphs: braces with additive group
//! `A` correspond to regular subgroups of `Hol(A)`, and isomorphism classes
//! to orbits under `Aut(A)`. Each regular subgroup is decoded into a
//! multiplication table and classes are separated by canonical form. A
//! completely independent brute-force route (try every pair of small group
//! tables) guards the small orders.

use crate::brace::SkewBrace;
use crate::group::{enumerate_groups_bruteforce, holomorph, Elem, ElementSet, FiniteGroup, GroupError, Holomorph};
use crate::smallgroups::groups_of_order;
use std::collections::BTreeMap;

/// Largest order `enumerate_braces` accepts; beyond it the holomorph search
/// is expensive enough that callers must opt in explicitly.
pub const ENUMERATION_CAP: usize = 16;

/// One brace per isomorphism class of the given order, sorted by canonical
/// key. Orders above [`ENUMERATION_CAP`] are refused.
pub fn enumerate_braces(n: usize) -> Result<Vec<SkewBrace>, GroupError> {
    if n > ENUMERATION_CAP {
        return Err(GroupError::OrderTooLarge { n, cap: ENUMERATION_CAP });
    }
    enumerate_braces_uncapped(n)
}

/// Same as [`enumerate_braces`] without the size guard. Still bounded by the
/// reach of the group registry supplying the additive groups.
pub fn enumerate_braces_uncapped(n: usize) -> Result<Vec<SkewBrace>, GroupError> {
    let groups = groups_of_order(n)?;
    let mut classes: BTreeMap<Vec<Elem>, SkewBrace> = BTreeMap::new();
    for a in &groups {
        for b in braces_with_additive_group(a) {
            classes.entry(b.canonical_key()).or_insert(b);
        }
    }
    Ok(classes.into_values().collect())
}

/// One brace per isomorphism class among those whose additive group is the
/// given one, sorted by canonical key.
pub fn braces_with_additive_group(add: &FiniteGroup) -> Vec<SkewBrace> {
    let h = holomorph(add);
    let mut classes: BTreeMap<Vec<Elem>, SkewBrace> = BTreeMap::new();
    for r in h.regular_subgroups() {
        let b = brace_from_regular_subgroup(&h, &r);
        classes.entry(b.canonical_key()).or_insert(b);
    }
    classes.into_values().collect()
}

/// Decodes a regular subgroup of a holomorph into the brace it represents:
/// the subgroup meets the translation coset of each base element exactly
/// once, and the automorphism paired with `x` is the lambda map of `x`.
pub fn brace_from_regular_subgroup(h: &Holomorph, r: &ElementSet) -> SkewBrace {
    let n = h.base().order();
    let mut lam: Vec<Option<usize>> = vec![None; n];
    for e in r.iter() {
        let (g, phi) = h.decode(e);
        let previous = lam[g as usize].replace(phi);
        assert!(previous.is_none(), "subgroup is not a transversal of the translations");
    }
    let autos = h.automorphisms();
    let mut mul = vec![0 as Elem; n * n];
    for x in 0..n {
        let phi = &autos[lam[x].expect("transversal covers every element")];
        for y in 0..n {
            mul[x * n + y] = h.base().op(x as Elem, phi[y]);
        }
    }
    let mul_group = FiniteGroup::from_flat(n, mul).expect("regular subgroup induces a group");
    SkewBrace::from_groups(h.base().clone(), mul_group).expect("regular subgroup induces a brace")
}

/// Independent enumeration for very small orders: every pair of group tables
/// on `{0..n}` with identity 0 is tested against the brace law directly, and
/// the survivors are reduced to one representative per isomorphism class.
pub fn brute_force_enumerate(n: usize) -> Result<Vec<SkewBrace>, GroupError> {
    let tables = enumerate_groups_bruteforce(n)?;
    let mut classes: BTreeMap<Vec<Elem>, SkewBrace> = BTreeMap::new();
    for add in &tables {
        for mul in &tables {
            if let Ok(b) = SkewBrace::from_groups(add.clone(), mul.clone()) {
                classes.entry(b.canonical_key()).or_insert(b);
            }
        }
    }
    Ok(classes.into_values().collect())
}

/// An ordered, identified collection of all braces of one order.
#[derive(Debug, Clone)]
pub struct BraceCatalog {
    order: usize,
    braces: Vec<SkewBrace>,
}

impl BraceCatalog {
    /// Enumerates the order (subject to the cap) and freezes the result.
    pub fn build(order: usize) -> Result<Self, GroupError> {
        Ok(BraceCatalog { order, braces: enumerate_braces(order)? })
    }

    /// Builds without the size guard.
    pub fn build_uncapped(order: usize) -> Result<Self, GroupError> {
        Ok(BraceCatalog { order, braces: enumerate_braces_uncapped(order)? })
    }

    /// Wraps an existing list (for catalogs loaded from disk). The braces
    /// keep the order they were given in.
    pub fn from_braces(order: usize, braces: Vec<SkewBrace>) -> Self {
        assert!(braces.iter().all(|b| b.order() == order));
        BraceCatalog { order, braces }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.braces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.braces.is_empty()
    }

    pub fn braces(&self) -> &[SkewBrace] {
        &self.braces
    }

    pub fn get(&self, index: usize) -> Option<&SkewBrace> {
        self.braces.get(index)
    }

    /// Catalog identifier of the brace at `index`: `<order>.<index + 1>`.
    pub fn id(&self, index: usize) -> String {
        format!("{}.{}", self.order, index + 1)
    }

    /// Pairs of identifier and brace, in catalog order.
    pub fn entries(&self) -> impl Iterator<Item = (String, &SkewBrace)> {
        self.braces.iter().enumerate().map(|(i, b)| (self.id(i), b))
    }
}
