//! Skew braces as a pair of group tables on one carrier.
//!
//! A skew brace is a set with two group operations, written additively and
//! multiplicatively, sharing the identity 0 and compatible through
//! `a(b + c) = ab - a + ac`. Everything downstream — the lambda action
//! `lambda_a(b) = -a + ab`, the star product `a * b = lambda_a(b) - b`, the
//! ideal hierarchy, socle and centre — is computed directly from the two
//! tables.

use crate::group::{canonical_tables, tables_isomorphism, Elem, ElementSet, FiniteGroup, GroupError};
use thiserror::Error;

/// Validation failures for a would-be skew brace.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraceError {
    /// Mismatched or non-square input tables.
    #[error("bad table shape: {0}")]
    TableShape(String),
    /// The additive table is not a group.
    #[error("additive table is not a group: {0}")]
    AddNotGroup(GroupError),
    /// The multiplicative table is not a group.
    #[error("multiplicative table is not a group: {0}")]
    MulNotGroup(GroupError),
    /// Both tables are groups but their identities differ.
    #[error("operations have different identities: additive {add_identity}, multiplicative {mul_identity}")]
    SharedIdentityViolated { add_identity: Elem, mul_identity: Elem },
    /// The compatibility law fails; reports the first violating triple.
    #[error("brace law fails at ({a}, {b}, {c}): a(b+c) != ab - a + ac")]
    BraceLawViolated { a: Elem, b: Elem, c: Elem },
    /// An operation that requires a subbrace was given something else.
    #[error("the given set is not a subbrace")]
    NotASubbrace,
    /// An operation that requires an ideal was given something else.
    #[error("the given set is not an ideal")]
    NotAnIdeal,
}

/// A finite skew brace: two validated group tables with common identity 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewBrace {
    add: FiniteGroup,
    mul: FiniteGroup,
}

/// Everything the analyzer can say about one subset of a brace.
///
/// `subbrace` means closed under both operations; the remaining flags refine
/// it. A left ideal is invariant under every lambda map, a strong left ideal
/// is additionally an additive normal subgroup, a right ideal absorbs star
/// products from the right, and an ideal is both strong left and right (and
/// then automatically normal in the multiplicative group too).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubbraceFlags {
    pub elements: ElementSet,
    pub subbrace: bool,
    pub trivial: bool,
    pub abelian: bool,
    pub left_ideal: bool,
    pub right_ideal: bool,
    pub strong_left_ideal: bool,
    pub ideal: bool,
}

impl SkewBrace {
    /// Full validation of a pair of tables: shape, both group axioms, the
    /// shared identity, and the brace law. If the common identity is not 0
    /// both tables are relabeled together; reported cells and triples are
    /// always in the caller's original labels.
    pub fn validate(add_rows: &[Vec<Elem>], mul_rows: &[Vec<Elem>]) -> Result<Self, BraceError> {
        let n = add_rows.len();
        if mul_rows.len() != n {
            return Err(BraceError::TableShape(format!(
                "additive table has {n} rows, multiplicative has {}",
                mul_rows.len()
            )));
        }
        for (name, rows) in [("additive", add_rows), ("multiplicative", mul_rows)] {
            if let Some(r) = rows.iter().position(|row| row.len() != n) {
                return Err(BraceError::TableShape(format!(
                    "{name} table row {r} has {} entries, expected {n}",
                    rows[r].len()
                )));
            }
        }
        if n == 0 {
            return Err(BraceError::TableShape("empty table".into()));
        }
        let add_flat: Vec<Elem> = add_rows.iter().flatten().copied().collect();
        let mul_flat: Vec<Elem> = mul_rows.iter().flatten().copied().collect();
        // Locate the identities on the raw tables before any relabeling so
        // that a mismatch is reported in the input's own labels. A completely
        // broken table will fail the group checks below instead.
        let add_id = crate::group::find_identity(n, &add_flat);
        let mul_id = crate::group::find_identity(n, &mul_flat);
        if let (Some(ea), Some(em)) = (add_id, mul_id) {
            if ea != em {
                return Err(BraceError::SharedIdentityViolated {
                    add_identity: ea,
                    mul_identity: em,
                });
            }
        }
        let e = add_id.or(mul_id).unwrap_or(0);
        // The shared swap 0 <-> e; it is its own inverse, which keeps error
        // translation below trivial.
        let back = |x: Elem| -> Elem {
            if x == 0 {
                e
            } else if x == e {
                0
            } else {
                x
            }
        };
        let translate = |err: GroupError| -> GroupError {
            match err {
                GroupError::NotAssociative { a, b, c } => {
                    GroupError::NotAssociative { a: back(a), b: back(b), c: back(c) }
                }
                GroupError::NoInverse { element } => GroupError::NoInverse { element: back(element) },
                other => other,
            }
        };
        let relabel = |flat: &[Elem]| -> Vec<Elem> {
            if e == 0 {
                flat.to_vec()
            } else {
                let mut sigma: Vec<Elem> = (0..n as Elem).collect();
                sigma.swap(0, e as usize);
                crate::group::relabel_table(n, flat, &sigma)
            }
        };
        // Validate the additive table first on the raw layout so Latin-square
        // errors carry original coordinates, then build the relabeled groups.
        let add = match FiniteGroup::from_flat(n, relabel(&add_flat)) {
            Ok(g) => g,
            Err(err) => {
                // Re-derive the error on the raw table when possible so rows
                // and columns match the input.
                let raw = FiniteGroup::from_flat(n, add_flat.clone());
                let e0 = raw.err().unwrap_or(err);
                return Err(BraceError::AddNotGroup(match e0 {
                    GroupError::NotLatinSquare { .. } | GroupError::NoIdentity => e0,
                    other => translate(other),
                }));
            }
        };
        let mul = match FiniteGroup::from_flat(n, relabel(&mul_flat)) {
            Ok(g) => g,
            Err(err) => {
                let raw = FiniteGroup::from_flat(n, mul_flat.clone());
                let e0 = raw.err().unwrap_or(err);
                return Err(BraceError::MulNotGroup(match e0 {
                    GroupError::NotLatinSquare { .. } | GroupError::NoIdentity => e0,
                    other => translate(other),
                }));
            }
        };
        match Self::from_groups(add, mul) {
            Ok(b) => Ok(b),
            Err(BraceError::BraceLawViolated { a, b, c }) => {
                Err(BraceError::BraceLawViolated { a: back(a), b: back(b), c: back(c) })
            }
            Err(other) => Err(other),
        }
    }

    /// Builds a brace from two already validated groups on the same carrier
    /// (identity 0 each), checking only the brace law.
    pub fn from_groups(add: FiniteGroup, mul: FiniteGroup) -> Result<Self, BraceError> {
        assert_eq!(add.order(), mul.order(), "operations must share a carrier");
        let n = add.order();
        for a in 0..n as Elem {
            for b in 0..n as Elem {
                for c in 0..n as Elem {
                    let lhs = mul.op(a, add.op(b, c));
                    let rhs = add.op(add.op(mul.op(a, b), add.inv(a)), mul.op(a, c));
                    if lhs != rhs {
                        return Err(BraceError::BraceLawViolated { a, b, c });
                    }
                }
            }
        }
        Ok(SkewBrace { add, mul })
    }

    /// Wraps two groups known to satisfy the brace law (relabelings of a
    /// validated brace, enumeration output); debug builds re-verify.
    pub(crate) fn from_valid(add: FiniteGroup, mul: FiniteGroup) -> Self {
        debug_assert!(Self::from_groups(add.clone(), mul.clone()).is_ok());
        SkewBrace { add, mul }
    }

    pub fn order(&self) -> usize {
        self.add.order()
    }

    pub fn add(&self) -> &FiniteGroup {
        &self.add
    }

    pub fn mul(&self) -> &FiniteGroup {
        &self.mul
    }

    #[inline]
    pub fn add_op(&self, a: Elem, b: Elem) -> Elem {
        self.add.op(a, b)
    }

    #[inline]
    pub fn mul_op(&self, a: Elem, b: Elem) -> Elem {
        self.mul.op(a, b)
    }

    #[inline]
    pub fn add_inv(&self, a: Elem) -> Elem {
        self.add.inv(a)
    }

    #[inline]
    pub fn mul_inv(&self, a: Elem) -> Elem {
        self.mul.inv(a)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        self.add.elements()
    }

    pub fn carrier(&self) -> ElementSet {
        self.add.carrier()
    }

    /// `lambda_a(b) = -a + ab`; for each fixed `a` this is an automorphism of
    /// the additive group.
    #[inline]
    pub fn lambda(&self, a: Elem, b: Elem) -> Elem {
        self.add.op(self.add.inv(a), self.mul.op(a, b))
    }

    /// The permutation `lambda_a` as an image table.
    pub fn lambda_map(&self, a: Elem) -> Vec<Elem> {
        self.elements().map(|b| self.lambda(a, b)).collect()
    }

    /// `a * b = lambda_a(b) - b`, the defect of the two operations; `a * b`
    /// vanishes for all pairs exactly when the brace is trivial.
    #[inline]
    pub fn star(&self, a: Elem, b: Elem) -> Elem {
        self.add.op(self.lambda(a, b), self.add.inv(b))
    }

    /// The opposite brace: the additive table transposed, the multiplicative
    /// one kept. Applying it twice returns the original brace.
    pub fn opposite(&self) -> SkewBrace {
        let n = self.order();
        let mut t = vec![0 as Elem; n * n];
        for a in 0..n {
            for b in 0..n {
                t[a * n + b] = self.add.op(b as Elem, a as Elem);
            }
        }
        let add_op = FiniteGroup::from_flat(n, t).expect("transpose of a group is a group");
        Self::from_groups(add_op, self.mul.clone()).expect("opposite of a brace is a brace")
    }

    /// Both operations coincide.
    pub fn is_trivial_brace(&self) -> bool {
        self.add == self.mul
    }

    /// Both operations coincide and are commutative.
    pub fn is_abelian_brace(&self) -> bool {
        self.is_trivial_brace() && self.add.is_abelian()
    }

    /// Closed under both operations (inverses follow by finiteness, but are
    /// checked anyway).
    pub fn is_subbrace(&self, s: &ElementSet) -> bool {
        self.add.is_subgroup(s) && self.mul.is_subgroup(s)
    }

    /// A subbrace on which the two operations agree.
    pub fn is_trivial_subbrace(&self, s: &ElementSet) -> bool {
        self.is_subbrace(s)
            && s.iter().all(|a| s.iter().all(|b| self.add.op(a, b) == self.mul.op(a, b)))
    }

    /// A subbrace on which the operations agree and commute.
    pub fn is_abelian_subbrace(&self, s: &ElementSet) -> bool {
        self.is_trivial_subbrace(s)
            && s.iter().all(|a| s.iter().all(|b| self.add.op(a, b) == self.add.op(b, a)))
    }

    /// Additive subgroup invariant under every lambda map. Such a set is
    /// automatically a subbrace.
    pub fn is_left_ideal(&self, s: &ElementSet) -> bool {
        self.add.is_subgroup(s)
            && self.elements().all(|a| s.iter().all(|x| s.contains(self.lambda(a, x))))
    }

    /// A left ideal that is also normal in the additive group.
    pub fn is_strong_left_ideal(&self, s: &ElementSet) -> bool {
        self.is_left_ideal(s) && self.add.is_normal_subgroup(s).unwrap_or(false)
    }

    /// Subbrace absorbing star products from the right: `s * b` stays inside
    /// for every brace element b.
    pub fn is_right_ideal(&self, s: &ElementSet) -> bool {
        self.is_subbrace(s)
            && s.iter().all(|x| self.elements().all(|b| s.contains(self.star(x, b))))
    }

    /// Strong left and right; equivalently invariant under lambda and normal
    /// in both groups.
    pub fn is_ideal(&self, s: &ElementSet) -> bool {
        self.is_strong_left_ideal(s) && self.is_right_ideal(s)
    }

    /// All the predicate answers for one subset, computed eagerly.
    pub fn analyze_subbrace(&self, s: &ElementSet) -> SubbraceFlags {
        SubbraceFlags {
            elements: s.clone(),
            subbrace: self.is_subbrace(s),
            trivial: self.is_trivial_subbrace(s),
            abelian: self.is_abelian_subbrace(s),
            left_ideal: self.is_left_ideal(s),
            right_ideal: self.is_right_ideal(s),
            strong_left_ideal: self.is_strong_left_ideal(s),
            ideal: self.is_ideal(s),
        }
    }

    /// `{a : lambda_b(a) = a for every b}` — the fixed set, a left ideal.
    pub fn fix_set(&self) -> ElementSet {
        ElementSet::new(
            self.elements().filter(|&a| self.elements().all(|b| self.lambda(b, a) == a)),
            self.order(),
        )
    }

    /// `{a : lambda_a = id}` — the kernel of the lambda action, a left ideal.
    pub fn lambda_kernel(&self) -> ElementSet {
        ElementSet::new(
            self.elements().filter(|&a| self.elements().all(|b| self.lambda(a, b) == b)),
            self.order(),
        )
    }

    /// Socle: the lambda kernel cut with the additive centre; an ideal.
    pub fn socle(&self) -> ElementSet {
        self.lambda_kernel().intersection(&self.add.center())
    }

    /// Brace centre: the socle cut with the multiplicative centre; an ideal.
    pub fn centre(&self) -> ElementSet {
        self.socle().intersection(&self.mul.center())
    }

    /// Additive subgroup generated by all `x * y` with x in xs, y in ys.
    pub fn star_span(&self, xs: &ElementSet, ys: &ElementSet) -> ElementSet {
        let mut gens = Vec::with_capacity(xs.len() * ys.len());
        for x in xs.iter() {
            for y in ys.iter() {
                gens.push(self.star(x, y));
            }
        }
        self.add.subgroup_generated(&ElementSet::new(gens, self.order()))
    }

    /// The commutator ideal: the additive subgroup generated by all star
    /// products together with all additive commutators. The quotient by it is
    /// the largest abelian quotient of the brace.
    pub fn commutator_ideal(&self) -> ElementSet {
        let all = self.carrier();
        let stars = self.star_span(&all, &all);
        let addc = self.add.commutator_subgroup(&all, &all);
        self.add.subgroup_generated(&stars.union(&addc))
    }

    /// Smallest ideal containing `xs`: iterate lambda images, additive
    /// conjugates and right stars, regenerating the additive subgroup until
    /// stable.
    pub fn ideal_closure(&self, xs: &ElementSet) -> ElementSet {
        self.closure_under(xs, true)
    }

    /// Smallest strong left ideal containing `xs`: like [`ideal_closure`]
    /// but without the right-star absorption.
    ///
    /// [`ideal_closure`]: Self::ideal_closure
    pub fn strong_left_ideal_closure(&self, xs: &ElementSet) -> ElementSet {
        self.closure_under(xs, false)
    }

    fn closure_under(&self, xs: &ElementSet, right_stars: bool) -> ElementSet {
        let mut s = self.add.subgroup_generated(xs);
        loop {
            let mut next: Vec<Elem> = s.iter().collect();
            for x in s.iter() {
                for b in self.elements() {
                    next.push(self.lambda(b, x));
                    next.push(self.add.conj(b, x));
                    if right_stars {
                        next.push(self.star(x, b));
                    }
                }
            }
            let closed = self.add.subgroup_generated(&ElementSet::new(next, self.order()));
            if closed.len() == s.len() {
                return closed;
            }
            s = closed;
        }
    }

    /// The brace structure induced on a subbrace, with elements relabeled in
    /// ascending order.
    pub fn sub_brace(&self, s: &ElementSet) -> Result<SkewBrace, BraceError> {
        if !self.is_subbrace(s) {
            return Err(BraceError::NotASubbrace);
        }
        let members = s.members();
        let index = |x: Elem| members.binary_search(&x).unwrap() as Elem;
        let m = members.len();
        let mut add_t = vec![0 as Elem; m * m];
        let mut mul_t = vec![0 as Elem; m * m];
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate() {
                add_t[i * m + j] = index(self.add.op(a, b));
                mul_t[i * m + j] = index(self.mul.op(a, b));
            }
        }
        let add = FiniteGroup::from_flat(m, add_t).expect("subbrace tables are groups");
        let mul = FiniteGroup::from_flat(m, mul_t).expect("subbrace tables are groups");
        Self::from_groups(add, mul)
    }

    /// The quotient brace modulo an ideal, cosets labeled by their least
    /// member in ascending order.
    pub fn quotient(&self, ideal: &ElementSet) -> Result<SkewBrace, BraceError> {
        if !self.is_ideal(ideal) {
            return Err(BraceError::NotAnIdeal);
        }
        let n = self.order();
        let mut rep = vec![Elem::MAX; n];
        for x in self.elements() {
            let r = ideal.iter().map(|i| self.add.op(x, i)).min().unwrap();
            rep[x as usize] = r;
        }
        // For an ideal, multiplicative and additive cosets agree.
        debug_assert!(self.elements().all(|x| {
            let m = ideal.iter().map(|i| self.mul.op(x, i)).min().unwrap();
            m == rep[x as usize]
        }));
        let mut reps: Vec<Elem> = rep.clone();
        reps.sort_unstable();
        reps.dedup();
        let index = |x: Elem| reps.binary_search(&rep[x as usize]).unwrap() as Elem;
        let m = reps.len();
        let mut add_t = vec![0 as Elem; m * m];
        let mut mul_t = vec![0 as Elem; m * m];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                add_t[i * m + j] = index(self.add.op(a, b));
                mul_t[i * m + j] = index(self.mul.op(a, b));
            }
        }
        let add = FiniteGroup::from_flat(m, add_t).expect("quotient additive table is a group");
        let mul = FiniteGroup::from_flat(m, mul_t).expect("quotient multiplicative table is a group");
        Self::from_groups(add, mul)
    }

    /// Brace isomorphism: one bijection carrying both tables at once.
    pub fn is_isomorphic_to(&self, other: &SkewBrace) -> bool {
        self.order() == other.order()
            && tables_isomorphism(
                self.order(),
                &[self.add.table(), self.mul.table()],
                &[other.add.table(), other.mul.table()],
            )
            .is_some()
    }

    /// The canonical relabeling of the brace, identical for isomorphic
    /// braces.
    pub fn canonical_form(&self) -> SkewBrace {
        let n = self.order();
        let mut tables = canonical_tables(n, &[self.add.table(), self.mul.table()]);
        let mul = FiniteGroup::from_valid_table(n, tables.pop().unwrap());
        let add = FiniteGroup::from_valid_table(n, tables.pop().unwrap());
        Self::from_valid(add, mul)
    }

    /// Flattened canonical tables (additive then multiplicative): a total
    /// order on isomorphism classes, used for catalog identifiers.
    pub fn canonical_key(&self) -> Vec<Elem> {
        let c = self.canonical_form();
        let mut key = c.add.table().to_vec();
        key.extend_from_slice(c.mul.table());
        key
    }
}
