//! Finite groups as dense multiplication tables.
//!
//! Elements are the indices `0..n`; after validation the identity is always
//! `0` (tables whose identity sits elsewhere are relabeled on ingestion).
//! All subgroup-level machinery (generated subgroups, commutators,
//! centralizers, normal closures) works on [`ElementSet`] values, which are
//! sorted member lists tagged with the carrier size.

use std::collections::{HashMap, HashSet};
use std::fmt;

use thiserror::Error;

/// Index of a group element. Tables up to a few hundred thousand elements
/// (holomorph carriers) fit comfortably.
pub type Elem = u32;

/// Validation failures for a would-be group table.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    /// A row or column is not a permutation of the carrier. Reports the first
    /// offending cell in row-major scan order.
    #[error("not a Latin square: duplicate or out-of-range value {value} at row {row}, column {col}")]
    NotLatinSquare { row: usize, col: usize, value: Elem },
    /// No two-sided identity element exists.
    #[error("no identity element")]
    NoIdentity,
    /// The first associativity failure, as a triple.
    #[error("not associative at ({a}, {b}, {c})")]
    NotAssociative { a: Elem, b: Elem, c: Elem },
    /// An element without a two-sided inverse (unreachable for tables that
    /// pass the Latin and associativity checks, but reported for completeness).
    #[error("element {element} has no inverse")]
    NoInverse { element: Elem },
    /// A brute-force or materialisation request beyond the supported size.
    #[error("order {n} exceeds the supported bound {cap} for this operation")]
    OrderTooLarge { n: usize, cap: usize },
    /// An operation that requires a subgroup was handed a set that is not one.
    #[error("the given set is not a subgroup")]
    NotASubgroup,
}

/// A sorted, duplicate-free set of elements of a fixed carrier `0..universe`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    members: Vec<Elem>,
    universe: usize,
}

impl ElementSet {
    /// Builds a set from arbitrary members, sorting and deduplicating.
    ///
    /// Panics if a member is outside `0..universe`; callers are expected to
    /// produce in-range elements.
    pub fn new(members: impl IntoIterator<Item = Elem>, universe: usize) -> Self {
        let mut members: Vec<Elem> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if let Some(&last) = members.last() {
            assert!(
                (last as usize) < universe,
                "element {last} out of range for universe {universe}"
            );
        }
        ElementSet { members, universe }
    }

    /// The empty set over the given carrier.
    pub fn empty(universe: usize) -> Self {
        ElementSet { members: Vec::new(), universe }
    }

    /// The singleton `{e}`.
    pub fn singleton(e: Elem, universe: usize) -> Self {
        Self::new([e], universe)
    }

    /// The whole carrier `{0, .., universe-1}`.
    pub fn full(universe: usize) -> Self {
        ElementSet { members: (0..universe as Elem).collect(), universe }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.members.binary_search(&e).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.iter().copied()
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    /// Membership bitmap over the carrier, for hot loops.
    pub fn mask(&self) -> Vec<bool> {
        let mut m = vec![false; self.universe];
        for &e in &self.members {
            m[e as usize] = true;
        }
        m
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        assert_eq!(self.universe, other.universe);
        Self::new(self.iter().chain(other.iter()), self.universe)
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        assert_eq!(self.universe, other.universe);
        Self::new(self.iter().filter(|&e| other.contains(e)), self.universe)
    }

    pub fn is_subset_of(&self, other: &ElementSet) -> bool {
        self.iter().all(|e| other.contains(e))
    }

    /// `{0}` — the trivial subgroup of any carrier with identity 0.
    pub fn trivial(universe: usize) -> Self {
        Self::singleton(0, universe)
    }

    /// True when the set is exactly `{0}`.
    pub fn is_trivial_subgroup(&self) -> bool {
        self.members == [0]
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// A finite group given by its full multiplication table, with identity `0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    n: usize,
    table: Vec<Elem>,
    inv: Vec<Elem>,
}

impl FiniteGroup {
    /// Validates `rows` as a group table and relabels so the identity is `0`.
    ///
    /// Checks, in order: shape, the Latin-square property, existence of a
    /// two-sided identity, associativity, and two-sided inverses. Errors name
    /// the first violating cell or triple in the original labeling.
    pub fn from_rows(rows: &[Vec<Elem>]) -> Result<Self, GroupError> {
        let n = rows.len();
        let mut flat = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                // A short or long row can never be a permutation of 0..n.
                return Err(GroupError::NotLatinSquare {
                    row: r,
                    col: row.len().min(n),
                    value: row.get(n).copied().unwrap_or(0),
                });
            }
            flat.extend_from_slice(row);
        }
        Self::from_flat(n, flat)
    }

    /// As [`FiniteGroup::from_rows`], for a row-major flattened table.
    pub fn from_flat(n: usize, table: Vec<Elem>) -> Result<Self, GroupError> {
        assert_eq!(table.len(), n * n, "flattened table must be n*n");
        if n == 0 {
            return Err(GroupError::NoIdentity);
        }
        check_latin(n, &table)?;
        let e = find_identity(n, &table).ok_or(GroupError::NoIdentity)?;
        check_associative(n, &table)?;
        check_inverses(n, &table, e)?;
        let table = if e == 0 {
            table
        } else {
            relabel_table(n, &table, &swap_permutation(n, e))
        };
        Ok(Self::from_valid_table(n, table))
    }

    /// Wraps a table already known to be a valid group table with identity 0.
    /// Used by constructions that are correct by design (products, holomorphs);
    /// debug builds re-verify.
    pub(crate) fn from_valid_table(n: usize, table: Vec<Elem>) -> Self {
        debug_assert!(n <= 64 || check_latin(n, &table).is_ok());
        debug_assert!(n > 64 || check_associative(n, &table).is_ok());
        let mut inv = vec![0 as Elem; n];
        for a in 0..n {
            let row = &table[a * n..(a + 1) * n];
            let b = row.iter().position(|&v| v == 0).expect("row must contain identity");
            inv[a] = b as Elem;
        }
        FiniteGroup { n, table, inv }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// The identity element; always `0` after validation.
    pub fn id(&self) -> Elem {
        0
    }

    #[inline]
    pub fn op(&self, a: Elem, b: Elem) -> Elem {
        self.table[a as usize * self.n + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a as usize]
    }

    /// `a b a^{-1}`.
    #[inline]
    pub fn conj(&self, a: Elem, b: Elem) -> Elem {
        self.op(self.op(a, b), self.inv(a))
    }

    /// `[a, b] = a b a^{-1} b^{-1}`.
    #[inline]
    pub fn comm(&self, a: Elem, b: Elem) -> Elem {
        self.op(self.conj(a, b), self.inv(b))
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.n as Elem
    }

    pub fn carrier(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        (0..self.n).map(|r| self.table[r * self.n..(r + 1) * self.n].to_vec()).collect()
    }

    /// Multiplicative order of `x`.
    pub fn element_order(&self, x: Elem) -> usize {
        let mut k = 1;
        let mut acc = x;
        while acc != 0 {
            acc = self.op(acc, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        for a in self.elements() {
            for b in 0..a {
                if self.op(a, b) != self.op(b, a) {
                    return false;
                }
            }
        }
        true
    }

    /// All pairs from `xs` commute with all pairs from `ys`.
    pub fn commute(&self, xs: &ElementSet, ys: &ElementSet) -> bool {
        xs.iter().all(|x| ys.iter().all(|y| self.op(x, y) == self.op(y, x)))
    }

    /// Subgroup generated by `xs`: closure under the operation and inverses,
    /// grown with a worklist in ascending element order.
    pub fn subgroup_generated(&self, xs: &ElementSet) -> ElementSet {
        assert_eq!(xs.universe(), self.n);
        let mut member = vec![false; self.n];
        let mut list: Vec<Elem> = Vec::new();
        let push = |member: &mut Vec<bool>, list: &mut Vec<Elem>, e: Elem| {
            if !member[e as usize] {
                member[e as usize] = true;
                list.push(e);
            }
        };
        push(&mut member, &mut list, 0);
        for x in xs.iter() {
            push(&mut member, &mut list, x);
        }
        let mut i = 0;
        while i < list.len() {
            let a = list[i];
            push(&mut member, &mut list, self.inv(a));
            let mut j = 0;
            while j <= i {
                let b = list[j];
                push(&mut member, &mut list, self.op(a, b));
                push(&mut member, &mut list, self.op(b, a));
                j += 1;
            }
            i += 1;
        }
        ElementSet::new(list, self.n)
    }

    /// The literal set `{x y : x in xs, y in ys}` (no closure taken).
    pub fn set_product(&self, xs: &ElementSet, ys: &ElementSet) -> ElementSet {
        let mut out = Vec::with_capacity(xs.len() * ys.len());
        for x in xs.iter() {
            for y in ys.iter() {
                out.push(self.op(x, y));
            }
        }
        ElementSet::new(out, self.n)
    }

    /// Subgroup generated by all commutators `[x, y]`, `x in xs`, `y in ys`.
    pub fn commutator_subgroup(&self, xs: &ElementSet, ys: &ElementSet) -> ElementSet {
        let mut gens = Vec::with_capacity(xs.len() * ys.len());
        for x in xs.iter() {
            for y in ys.iter() {
                gens.push(self.comm(x, y));
            }
        }
        self.subgroup_generated(&ElementSet::new(gens, self.n))
    }

    /// Derived subgroup `[G, G]`.
    pub fn derived_subgroup(&self) -> ElementSet {
        let all = self.carrier();
        self.commutator_subgroup(&all, &all)
    }

    /// Smallest normal subgroup containing `xs`: alternate conjugation and
    /// subgroup closure until stable.
    pub fn normal_closure(&self, xs: &ElementSet) -> ElementSet {
        let mut s = self.subgroup_generated(xs);
        loop {
            let mut extended: Vec<Elem> = s.iter().collect();
            for g in self.elements() {
                for x in s.iter() {
                    extended.push(self.conj(g, x));
                }
            }
            let next = self.subgroup_generated(&ElementSet::new(extended, self.n));
            if next.len() == s.len() {
                return next;
            }
            s = next;
        }
    }

    /// `{g : g x = x g for all x in xs}`.
    pub fn centralizer(&self, xs: &ElementSet) -> ElementSet {
        let members =
            self.elements().filter(|&g| xs.iter().all(|x| self.op(g, x) == self.op(x, g)));
        ElementSet::new(members, self.n)
    }

    pub fn center(&self) -> ElementSet {
        self.centralizer(&self.carrier())
    }

    pub fn is_subgroup(&self, s: &ElementSet) -> bool {
        if s.universe() != self.n || !s.contains(0) {
            return false;
        }
        s.iter().all(|a| s.contains(self.inv(a)) && s.iter().all(|b| s.contains(self.op(a, b))))
    }

    /// Whether the subgroup `s` is normal. Errors if `s` is not a subgroup.
    pub fn is_normal_subgroup(&self, s: &ElementSet) -> Result<bool, GroupError> {
        if !self.is_subgroup(s) {
            return Err(GroupError::NotASubgroup);
        }
        Ok(self.elements().all(|g| s.iter().all(|x| s.contains(self.conj(g, x)))))
    }

    /// Every subgroup, grown breadth-first from the trivial subgroup by
    /// adjoining single elements. Sorted by (order, members).
    pub fn all_subgroups(&self) -> Vec<ElementSet> {
        let mut seen: HashSet<Vec<Elem>> = HashSet::new();
        let trivial = ElementSet::trivial(self.n);
        seen.insert(trivial.members().to_vec());
        let mut queue = vec![trivial];
        let mut out = Vec::new();
        while let Some(s) = queue.pop() {
            for x in self.elements() {
                if s.contains(x) {
                    continue;
                }
                let bigger = self.subgroup_generated(&s.union(&ElementSet::singleton(x, self.n)));
                if seen.insert(bigger.members().to_vec()) {
                    queue.push(bigger);
                }
            }
            out.push(s);
        }
        out.sort_unstable_by(|a, b| (a.len(), a.members()).cmp(&(b.len(), b.members())));
        out
    }

    /// Every normal subgroup: normal closures of cyclic subgroups, closed
    /// under joins.
    pub fn normal_subgroups(&self) -> Vec<ElementSet> {
        let mut seen: HashSet<Vec<Elem>> = HashSet::new();
        let mut list: Vec<ElementSet> = Vec::new();
        let add = |seen: &mut HashSet<Vec<Elem>>, list: &mut Vec<ElementSet>, s: ElementSet| {
            if seen.insert(s.members().to_vec()) {
                list.push(s);
            }
        };
        add(&mut seen, &mut list, ElementSet::trivial(self.n));
        for x in self.elements() {
            let ncl = self.normal_closure(&ElementSet::singleton(x, self.n));
            add(&mut seen, &mut list, ncl);
        }
        // Join closure: the join of two normal subgroups is normal.
        let mut i = 0;
        while i < list.len() {
            let mut j = 0;
            while j < i {
                let join = self.subgroup_generated(&list[i].union(&list[j]));
                add(&mut seen, &mut list, join);
                j += 1;
            }
            i += 1;
        }
        list.sort_unstable_by(|a, b| (a.len(), a.members()).cmp(&(b.len(), b.members())));
        list
    }

    /// Greedy generating set: repeatedly adjoin the smallest element outside
    /// the subgroup generated so far.
    pub fn generating_set(&self) -> Vec<Elem> {
        let mut gens: Vec<Elem> = Vec::new();
        let mut span = ElementSet::trivial(self.n);
        for x in self.elements() {
            if !span.contains(x) {
                gens.push(x);
                span = self.subgroup_generated(&ElementSet::new(gens.iter().copied(), self.n));
                if span.len() == self.n {
                    break;
                }
            }
        }
        gens
    }

    /// All automorphisms, as image tables, sorted lexicographically.
    pub fn automorphisms(&self) -> Vec<Vec<Elem>> {
        map_search(self.n, &[&self.table], self.n, &[&self.table], true, None)
    }

    /// All homomorphisms from `self` to `target`, as image tables, sorted.
    /// Includes non-injective maps; the trivial map comes first.
    pub fn homomorphisms_to(&self, target: &FiniteGroup) -> Vec<Vec<Elem>> {
        map_search(self.n, &[&self.table], target.n, &[&target.table], false, None)
    }

    /// Searches for a single bijection carrying this table to `other`'s.
    pub fn is_isomorphic_to(&self, other: &FiniteGroup) -> bool {
        if self.n != other.n {
            return false;
        }
        tables_isomorphism(self.n, &[self.table()], &[other.table()]).is_some()
    }

    /// The lexicographically least relabeling of the table over bijections
    /// fixing 0.
    pub fn canonical_form(&self) -> FiniteGroup {
        let canon = canonical_tables(self.n, &[self.table()]);
        FiniteGroup::from_valid_table(self.n, canon.into_iter().next().unwrap())
    }

    /// Applies a relabeling `sigma` (old label -> new label).
    pub fn relabel(&self, sigma: &[Elem]) -> FiniteGroup {
        FiniteGroup::from_valid_table(self.n, relabel_table(self.n, &self.table, sigma))
    }
}

fn check_latin(n: usize, table: &[Elem]) -> Result<(), GroupError> {
    for r in 0..n {
        let mut seen = vec![false; n];
        for c in 0..n {
            let v = table[r * n + c];
            if (v as usize) >= n || seen[v as usize] {
                return Err(GroupError::NotLatinSquare { row: r, col: c, value: v });
            }
            seen[v as usize] = true;
        }
    }
    for c in 0..n {
        let mut seen = vec![false; n];
        for r in 0..n {
            let v = table[r * n + c];
            if seen[v as usize] {
                return Err(GroupError::NotLatinSquare { row: r, col: c, value: v });
            }
            seen[v as usize] = true;
        }
    }
    Ok(())
}

pub(crate) fn find_identity(n: usize, table: &[Elem]) -> Option<Elem> {
    (0..n as Elem).find(|&e| {
        (0..n as Elem)
            .all(|x| table[e as usize * n + x as usize] == x && table[x as usize * n + e as usize] == x)
    })
}

fn check_associative(n: usize, table: &[Elem]) -> Result<(), GroupError> {
    for a in 0..n {
        for b in 0..n {
            let ab = table[a * n + b] as usize;
            for c in 0..n {
                let bc = table[b * n + c] as usize;
                if table[ab * n + c] != table[a * n + bc] {
                    return Err(GroupError::NotAssociative {
                        a: a as Elem,
                        b: b as Elem,
                        c: c as Elem,
                    });
                }
            }
        }
    }
    Ok(())
}

fn check_inverses(n: usize, table: &[Elem], e: Elem) -> Result<(), GroupError> {
    for a in 0..n {
        let has = (0..n).any(|b| table[a * n + b] == e && table[b * n + a] == e);
        if !has {
            return Err(GroupError::NoInverse { element: a as Elem });
        }
    }
    Ok(())
}

fn swap_permutation(n: usize, e: Elem) -> Vec<Elem> {
    let mut sigma: Vec<Elem> = (0..n as Elem).collect();
    sigma.swap(0, e as usize);
    sigma
}

pub(crate) fn relabel_table(n: usize, table: &[Elem], sigma: &[Elem]) -> Vec<Elem> {
    let mut out = vec![0 as Elem; n * n];
    for a in 0..n {
        for b in 0..n {
            let sa = sigma[a] as usize;
            let sb = sigma[b] as usize;
            out[sa * n + sb] = sigma[table[a * n + b] as usize];
        }
    }
    out
}

/// Searches for a bijection of `0..n` fixing 0 that simultaneously carries
/// each table in `ts1` to the corresponding table in `ts2`. Tables must all
/// have identity 0. Returns the bijection (old -> new) if one exists.
pub(crate) fn tables_isomorphism(n: usize, ts1: &[&[Elem]], ts2: &[&[Elem]]) -> Option<Vec<Elem>> {
    map_search(n, ts1, n, ts2, true, Some(1)).into_iter().next()
}

/// Backtracking engine behind isomorphism tests, automorphism groups and
/// homomorphism enumeration: finds maps `f` of the carriers (always with
/// `f(0) = 0`) satisfying `f(t1[a][b]) = t2[f(a)][f(b)]` for every pair of
/// corresponding tables.
///
/// `injective` restricts to bijections (carriers must then have equal size);
/// otherwise all homomorphic maps are found. Candidates are filtered by
/// element order — equality for bijections, divisibility otherwise — and each
/// assignment is propagated through products, so branching effectively runs
/// over images of a generating set. `cap` stops the search after that many
/// solutions. Results are total image tables, sorted.
fn map_search(
    n1: usize,
    ts1: &[&[Elem]],
    n2: usize,
    ts2: &[&[Elem]],
    injective: bool,
    cap: Option<usize>,
) -> Vec<Vec<Elem>> {
    assert_eq!(ts1.len(), ts2.len());
    if injective && n1 != n2 {
        return Vec::new();
    }
    let order_in = |t: &[Elem], n: usize, x: Elem| -> usize {
        let mut k = 1;
        let mut acc = x;
        while acc != 0 {
            acc = t[acc as usize * n + x as usize];
            k += 1;
        }
        k
    };
    let p1: Vec<Vec<usize>> =
        (0..n1 as Elem).map(|x| ts1.iter().map(|t| order_in(t, n1, x)).collect()).collect();
    let p2: Vec<Vec<usize>> =
        (0..n2 as Elem).map(|y| ts2.iter().map(|t| order_in(t, n2, y)).collect()).collect();
    if injective {
        let mut s1 = p1.clone();
        let mut s2 = p2.clone();
        s1.sort_unstable();
        s2.sort_unstable();
        if s1 != s2 {
            return Vec::new();
        }
    }

    struct Search<'a> {
        n1: usize,
        n2: usize,
        ts1: &'a [&'a [Elem]],
        ts2: &'a [&'a [Elem]],
        p1: &'a [Vec<usize>],
        p2: &'a [Vec<usize>],
        injective: bool,
        f: Vec<Option<Elem>>,
        used: Vec<bool>,
        known: Vec<Elem>,
        out: Vec<Vec<Elem>>,
        cap: Option<usize>,
    }

    impl Search<'_> {
        fn admissible(&self, x: Elem, y: Elem) -> bool {
            if self.injective {
                self.p1[x as usize] == self.p2[y as usize]
            } else {
                // The image's order must divide the source's, table by table.
                self.p1[x as usize]
                    .iter()
                    .zip(&self.p2[y as usize])
                    .all(|(&ox, &oy)| ox % oy == 0)
            }
        }

        /// Assigns `f[x] = y` and propagates forced products. Fresh
        /// assignments land on `known`; the caller rolls back to its mark on
        /// failure.
        fn assign(&mut self, x: Elem, y: Elem) -> bool {
            if let Some(cur) = self.f[x as usize] {
                return cur == y;
            }
            if (self.injective && self.used[y as usize]) || !self.admissible(x, y) {
                return false;
            }
            self.f[x as usize] = Some(y);
            if self.injective {
                self.used[y as usize] = true;
            }
            self.known.push(x);
            // Propagate x against everything assigned so far, x included.
            for i in 0..self.known.len() {
                let a = self.known[i];
                let fa = self.f[a as usize].unwrap();
                let fx = y;
                for k in 0..self.ts1.len() {
                    let t1 = self.ts1[k];
                    let t2 = self.ts2[k];
                    let ax = t1[a as usize * self.n1 + x as usize];
                    let fa_fx = t2[fa as usize * self.n2 + fx as usize];
                    if !self.assign(ax, fa_fx) {
                        return false;
                    }
                    let xa = t1[x as usize * self.n1 + a as usize];
                    let fx_fa = t2[fx as usize * self.n2 + fa as usize];
                    if !self.assign(xa, fx_fa) {
                        return false;
                    }
                }
            }
            true
        }

        fn rollback(&mut self, mark: usize) {
            while self.known.len() > mark {
                let x = self.known.pop().unwrap();
                let y = self.f[x as usize].take().unwrap();
                if self.injective {
                    self.used[y as usize] = false;
                }
            }
        }

        fn done(&self) -> bool {
            self.cap.map_or(false, |c| self.out.len() >= c)
        }

        fn dfs(&mut self) {
            if self.done() {
                return;
            }
            let x = match (0..self.n1 as Elem).find(|&x| self.f[x as usize].is_none()) {
                None => {
                    let total: Vec<Elem> = self.f.iter().map(|v| v.unwrap()).collect();
                    // The propagation already guarantees the full check; this
                    // is cheap insurance against search bugs.
                    if self.verify(&total) {
                        self.out.push(total);
                    }
                    return;
                }
                Some(x) => x,
            };
            for y in 0..self.n2 as Elem {
                let mark = self.known.len();
                if self.assign(x, y) {
                    self.dfs();
                }
                self.rollback(mark);
                if self.done() {
                    return;
                }
            }
        }

        fn verify(&self, f: &[Elem]) -> bool {
            for k in 0..self.ts1.len() {
                let t1 = self.ts1[k];
                let t2 = self.ts2[k];
                for a in 0..self.n1 {
                    for b in 0..self.n1 {
                        let lhs = f[t1[a * self.n1 + b] as usize];
                        let rhs = t2[f[a] as usize * self.n2 + f[b] as usize];
                        if lhs != rhs {
                            return false;
                        }
                    }
                }
            }
            true
        }
    }

    let mut search = Search {
        n1,
        n2,
        ts1,
        ts2,
        p1: &p1,
        p2: &p2,
        injective,
        f: vec![None; n1],
        used: vec![false; n2],
        known: Vec::new(),
        out: Vec::new(),
        cap,
    };
    if !search.assign(0, 0) {
        return Vec::new();
    }
    search.dfs();
    let mut out = search.out;
    out.sort_unstable();
    out
}

/// Lexicographically least simultaneous relabeling of `tables` over
/// bijections of the carrier fixing 0 — the canonical form used for
/// deduplication and stable catalog identifiers.
///
/// Tables must share the carrier and have identity 0, so row 0 and column 0
/// are the identity pattern and only cells with both indices nonzero matter.
/// Cells are compared in expanding-square order: stage k covers the cells
/// whose larger index is k, table by table. Minimisation is branch and bound
/// over "scan-consistent" relabelings: fresh labels are handed out in first-
/// appearance order along the scan (any other assignment is lexicographically
/// worse), so true branching only happens at a stage whose index label is
/// still free — essentially a choice of the next generator. The square order
/// matters for speed: it forces labels through earlier rows and columns
/// before they are needed as indices, which keeps the branch count near the
/// automorphism count even for elementary abelian tables.
pub(crate) fn canonical_tables(n: usize, tables: &[&[Elem]]) -> Vec<Vec<Elem>> {
    for t in tables {
        debug_assert!((0..n as Elem).all(|x| t[x as usize] == x && t[x as usize * n] == x));
    }
    if n <= 1 {
        return tables.iter().map(|t| t.to_vec()).collect();
    }

    struct Canon<'a> {
        n: usize,
        tables: &'a [&'a [Elem]],
        /// old element -> new label
        sigma: Vec<Elem>,
        assigned: Vec<bool>,
        /// new label -> old element
        pre: Vec<Elem>,
        next_label: Elem,
        /// emissions so far along the scan
        cur: Vec<Elem>,
        best: Option<Vec<Elem>>,
        best_sigma: Vec<Elem>,
        /// true while `cur` is strictly below `best` at some earlier position
        diverged: bool,
        /// fresh-label trail for rollback (old elements in assignment order)
        trail: Vec<Elem>,
    }

    impl Canon<'_> {
        fn give_label(&mut self, x: Elem) -> Elem {
            let label = self.next_label;
            self.sigma[x as usize] = label;
            self.assigned[x as usize] = true;
            self.pre[label as usize] = x;
            self.next_label += 1;
            self.trail.push(x);
            label
        }

        fn rollback(&mut self, trail_mark: usize, cur_mark: usize) {
            while self.trail.len() > trail_mark {
                let x = self.trail.pop().unwrap();
                self.assigned[x as usize] = false;
                self.next_label -= 1;
            }
            self.cur.truncate(cur_mark);
        }

        /// Emits one cell value; false means the run is beaten by `best` and
        /// the caller must roll back.
        fn emit(&mut self, x: Elem) -> bool {
            let label = if self.assigned[x as usize] { self.sigma[x as usize] } else { self.give_label(x) };
            if !self.diverged {
                if let Some(best) = &self.best {
                    match label.cmp(&best[self.cur.len()]) {
                        std::cmp::Ordering::Greater => return false,
                        std::cmp::Ordering::Less => self.diverged = true,
                        std::cmp::Ordering::Equal => {}
                    }
                }
            }
            self.cur.push(label);
            true
        }

        /// Runs the forced emissions of stage `k` (all labels through k have
        /// preimages). False = pruned.
        fn run_stage(&mut self, k: usize) -> bool {
            let n = self.n;
            for t in self.tables {
                let pk = self.pre[k] as usize;
                for j in 1..=k {
                    let v = t[pk * n + self.pre[j] as usize];
                    if !self.emit(v) {
                        return false;
                    }
                }
                for i in 1..k {
                    let v = t[self.pre[i] as usize * n + pk];
                    if !self.emit(v) {
                        return false;
                    }
                }
            }
            true
        }

        fn dfs(&mut self, k: usize) {
            if k == self.n {
                if self.best.is_none() || self.diverged {
                    self.best = Some(self.cur.clone());
                    self.best_sigma = self.sigma.clone();
                    self.diverged = false;
                }
                return;
            }
            let trail_mark = self.trail.len();
            let cur_mark = self.cur.len();
            if (self.next_label as usize) > k {
                // Label k already has a preimage: the stage is fully forced.
                if self.run_stage(k) {
                    self.dfs(k + 1);
                }
                self.rollback(trail_mark, cur_mark);
                return;
            }
            // Branch over every free element as the preimage of label k,
            // cheapest first estimate: the label its first stage cell emits.
            let mut cands: Vec<(Elem, Elem)> = Vec::new();
            for x in 0..self.n as Elem {
                if self.assigned[x as usize] {
                    continue;
                }
                let first = if k == 1 {
                    self.tables[0][x as usize * self.n + x as usize]
                } else {
                    self.tables[0][x as usize * self.n + self.pre[1] as usize]
                };
                let est = if self.assigned[first as usize] {
                    self.sigma[first as usize]
                } else {
                    self.next_label + 1
                };
                cands.push((est, x));
            }
            cands.sort_unstable();
            for (_, x) in cands {
                debug_assert_eq!(self.next_label as usize, k);
                self.give_label(x);
                if self.run_stage(k) {
                    self.dfs(k + 1);
                }
                self.rollback(trail_mark, cur_mark);
            }
        }

    }

    let t_count = tables.len();
    let mut canon = Canon {
        n,
        tables,
        sigma: vec![0; n],
        assigned: vec![false; n],
        pre: vec![0; n],
        next_label: 1,
        cur: Vec::with_capacity(t_count * (n - 1) * (n - 1)),
        best: None,
        best_sigma: Vec::new(),
        diverged: false,
        trail: Vec::new(),
    };
    canon.assigned[0] = true;
    canon.dfs(1);
    debug_assert!(!canon.diverged);
    let sigma = canon.best_sigma;
    debug_assert_eq!(sigma.len(), n);
    tables.iter().map(|t| relabel_table(n, t, &sigma)).collect()
}


/// The holomorph of `G`: pairs `(g, phi)` with `phi` an automorphism,
/// composing by `(g1, p1)(g2, p2) = (g1 p1(g2), p1 p2)`. The pair `(g, phi)`
/// is encoded as `g * |Aut| + phi`, so the identity pair is 0.
pub struct Holomorph {
    base: FiniteGroup,
    autos: Vec<Vec<Elem>>,
    index: HashMap<Vec<Elem>, usize>,
}

/// Builds the holomorph scaffolding of `g` (automorphisms plus composition).
pub fn holomorph(g: &FiniteGroup) -> Holomorph {
    let autos = g.automorphisms();
    debug_assert!(autos[0].iter().enumerate().all(|(i, &v)| v == i as Elem));
    let index = autos.iter().enumerate().map(|(i, a)| (a.clone(), i)).collect();
    Holomorph { base: g.clone(), autos, index }
}

impl Holomorph {
    pub fn base(&self) -> &FiniteGroup {
        &self.base
    }

    pub fn automorphism_count(&self) -> usize {
        self.autos.len()
    }

    pub fn automorphisms(&self) -> &[Vec<Elem>] {
        &self.autos
    }

    /// Number of pairs `(g, phi)`.
    pub fn order(&self) -> usize {
        self.base.order() * self.autos.len()
    }

    pub fn encode(&self, g: Elem, phi: usize) -> Elem {
        g * self.autos.len() as Elem + phi as Elem
    }

    pub fn decode(&self, e: Elem) -> (Elem, usize) {
        let na = self.autos.len() as Elem;
        (e / na, (e % na) as usize)
    }

    /// Index of the composite `autos[a] . autos[b]` (apply `b` first).
    pub fn compose(&self, a: usize, b: usize) -> usize {
        let n = self.base.order();
        let mut c = vec![0 as Elem; n];
        for x in 0..n {
            c[x] = self.autos[a][self.autos[b][x] as usize];
        }
        *self.index.get(&c).expect("automorphisms are closed under composition")
    }

    /// The pair `(g, phi)` acting on the carrier: `x -> g phi(x)`.
    pub fn act(&self, e: Elem, x: Elem) -> Elem {
        let (g, phi) = self.decode(e);
        self.base.op(g, self.autos[phi][x as usize])
    }

    /// Materialises the holomorph as a plain table group. Bounded because the
    /// table is quadratic in `|G| * |Aut G|`.
    pub fn to_group(&self) -> Result<FiniteGroup, GroupError> {
        let m = self.order();
        const CAP: usize = 4096;
        if m > CAP {
            return Err(GroupError::OrderTooLarge { n: m, cap: CAP });
        }
        let mut table = vec![0 as Elem; m * m];
        for e1 in 0..m as Elem {
            let (g1, p1) = self.decode(e1);
            for e2 in 0..m as Elem {
                let (g2, p2) = self.decode(e2);
                let g = self.base.op(g1, self.autos[p1][g2 as usize]);
                table[e1 as usize * m + e2 as usize] = self.encode(g, self.compose(p1, p2));
            }
        }
        Ok(FiniteGroup::from_valid_table(m, table))
    }

    /// All subgroups of the holomorph whose natural action on the carrier is
    /// regular (transitive with trivial stabilizers), as sets of encoded
    /// pairs.
    ///
    /// A regular subgroup contains exactly one pair `(x, phi_x)` per carrier
    /// element `x`, and closure forces `phi_x phi_y = phi_{x phi_x(y)}`; the
    /// search assigns the `phi_x` with that propagation rule and backtracks,
    /// which prunes the order-n subgroup search to the transversal shape.
    pub fn regular_subgroups(&self) -> Vec<ElementSet> {
        let n = self.base.order();
        let na = self.autos.len();
        // Small-enough automorphism groups get a dense composition table.
        let compose_table: Option<Vec<usize>> = if na <= 1024 {
            let mut t = vec![0usize; na * na];
            for a in 0..na {
                for b in 0..na {
                    t[a * na + b] = self.compose(a, b);
                }
            }
            Some(t)
        } else {
            None
        };
        let compose = |a: usize, b: usize| -> usize {
            match &compose_table {
                Some(t) => t[a * na + b],
                None => self.compose(a, b),
            }
        };

        struct State {
            lam: Vec<Option<usize>>,
            assigned: Vec<Elem>,
        }
        let mut st = State { lam: vec![None; n], assigned: vec![0] };
        st.lam[0] = Some(0);

        let mut results: Vec<ElementSet> = Vec::new();
        // Propagate the closure rule from `start` onward; returns false on
        // conflict. Each trail entry is an element whose lambda was set.
        fn close(
            h: &Holomorph,
            compose: &dyn Fn(usize, usize) -> usize,
            st: &mut State,
            start: usize,
            trail: &mut Vec<Elem>,
        ) -> bool {
            let n = h.base.order();
            let mut qi = start;
            while qi < st.assigned.len() {
                let x = st.assigned[qi];
                let lx = st.lam[x as usize].unwrap();
                let mut k = 0;
                while k < st.assigned.len() {
                    let y = st.assigned[k];
                    let ly = st.lam[y as usize].unwrap();
                    for (p, lp, q, lq) in [(x, lx, y, ly), (y, ly, x, lx)] {
                        let w = h.base.op(p, h.autos[lp][q as usize]);
                        let need = compose(lp, lq);
                        match st.lam[w as usize] {
                            Some(have) => {
                                if have != need {
                                    return false;
                                }
                            }
                            None => {
                                st.lam[w as usize] = Some(need);
                                st.assigned.push(w);
                                trail.push(w);
                            }
                        }
                    }
                    k += 1;
                }
                qi += 1;
                let _ = n;
            }
            true
        }

        fn dfs(
            h: &Holomorph,
            compose: &dyn Fn(usize, usize) -> usize,
            st: &mut State,
            results: &mut Vec<ElementSet>,
        ) {
            let n = h.base.order();
            let x = match (0..n).find(|&x| st.lam[x].is_none()) {
                None => {
                    let members =
                        (0..n as Elem).map(|x| h.encode(x, st.lam[x as usize].unwrap()));
                    results.push(ElementSet::new(members, h.order()));
                    return;
                }
                Some(x) => x,
            };
            for phi in 0..h.autos.len() {
                let mut trail = vec![x as Elem];
                st.lam[x] = Some(phi);
                st.assigned.push(x as Elem);
                let start = st.assigned.len() - 1;
                if close(h, compose, st, start, &mut trail) {
                    dfs(h, compose, st, results);
                }
                for w in trail {
                    st.lam[w as usize] = None;
                }
                st.assigned.truncate(start);
            }
        }

        dfs(self, &compose, &mut st, &mut results);
        results.sort_unstable();
        results
    }
}

/// Every group table on `{0..n}` with identity 0, by backtracking over the
/// remaining cells: Latin-property pruning, associativity checked on the
/// completed table. No isomorphism reduction is applied.
pub fn enumerate_groups_bruteforce(n: usize) -> Result<Vec<FiniteGroup>, GroupError> {
    const CAP: usize = 6;
    if n > CAP {
        return Err(GroupError::OrderTooLarge { n, cap: CAP });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut table = vec![0 as Elem; n * n];
    for x in 0..n {
        table[x] = x as Elem;
        table[x * n] = x as Elem;
    }
    // Row 0 and column 0 are fixed to the identity pattern, so they consume
    // every value; row x and column x additionally carry value x at index 0.
    let mut row_used = vec![vec![false; n]; n];
    let mut col_used = vec![vec![false; n]; n];
    for x in 0..n {
        row_used[0][x] = true;
        col_used[0][x] = true;
        if x > 0 {
            row_used[x][x] = true;
            col_used[x][x] = true;
        }
    }
    let mut out = Vec::new();
    fn fill(
        n: usize,
        cell: usize,
        table: &mut Vec<Elem>,
        row_used: &mut Vec<Vec<bool>>,
        col_used: &mut Vec<Vec<bool>>,
        out: &mut Vec<FiniteGroup>,
    ) {
        let cells = (n - 1) * (n - 1);
        if cell == cells {
            if let Ok(g) = FiniteGroup::from_flat(n, table.clone()) {
                out.push(g);
            }
            return;
        }
        let i = 1 + cell / (n - 1);
        let j = 1 + cell % (n - 1);
        for v in 0..n {
            if row_used[i][v] || col_used[j][v] {
                continue;
            }
            table[i * n + j] = v as Elem;
            row_used[i][v] = true;
            col_used[j][v] = true;
            fill(n, cell + 1, table, row_used, col_used, out);
            row_used[i][v] = false;
            col_used[j][v] = false;
        }
    }
    fill(n, 0, &mut table, &mut row_used, &mut col_used, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Cyclic group table, built inline so these tests do not depend on the
    /// construction helpers they are meant to cross-check.
    fn zmod(n: usize) -> Vec<Vec<Elem>> {
        (0..n).map(|a| (0..n).map(|b| ((a + b) % n) as Elem).collect()).collect()
    }

    /// S3 built from actual permutation composition: the oracle for all the
    /// nonabelian fixtures. Elements are the 6 permutations of {0,1,2} in
    /// lexicographic order, so the identity permutation gets index 0.
    fn s3_from_permutations() -> FiniteGroup {
        let perms: Vec<[usize; 3]> =
            vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let compose = |p: &[usize; 3], q: &[usize; 3]| -> [usize; 3] {
            [p[q[0]], p[q[1]], p[q[2]]]
        };
        let idx = |p: &[usize; 3]| perms.iter().position(|q| q == p).unwrap() as Elem;
        let rows: Vec<Vec<Elem>> = perms
            .iter()
            .map(|p| perms.iter().map(|q| idx(&compose(p, q))).collect())
            .collect();
        FiniteGroup::from_rows(&rows).unwrap()
    }

    #[test]
    fn z4_is_a_group_with_expected_inverses() {
        let g = FiniteGroup::from_rows(&zmod(4)).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.id(), 0);
        assert_eq!(g.inv(1), 3);
        assert_eq!(g.inv(2), 2);
        assert_eq!(g.element_order(1), 4);
        assert!(g.is_abelian());
    }

    #[test]
    fn broken_cell_reports_latin_failure() {
        let mut rows = zmod(4);
        rows[1][1] = 1; // duplicates the 1 already present at (1, 0)
        let err = FiniteGroup::from_rows(&rows).unwrap_err();
        assert_eq!(err, GroupError::NotLatinSquare { row: 1, col: 1, value: 1 });
    }

    #[test]
    fn rotated_identity_gets_relabeled_to_zero() {
        // Z3 with labels shifted so the identity is element 2.
        let rows: Vec<Vec<Elem>> = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        let g = FiniteGroup::from_rows(&rows).unwrap();
        assert_eq!(g.id(), 0);
        assert_eq!(g.op(0, 1), 1);
        assert!(g.is_isomorphic_to(&FiniteGroup::from_rows(&zmod(3)).unwrap()));
    }

    #[test]
    fn nonassociative_latin_square_is_rejected() {
        // A quasigroup with identity that fails associativity (order 5).
        let rows: Vec<Vec<Elem>> = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        match FiniteGroup::from_rows(&rows) {
            Err(GroupError::NotAssociative { .. }) => {}
            other => panic!("expected NotAssociative, got {other:?}"),
        }
    }

    #[test]
    fn s3_subgroup_machinery_matches_hand_computation() {
        let g = s3_from_permutations();
        assert!(!g.is_abelian());
        // The 3-cycles sit at indices 3 and 4; they generate A3.
        let a3 = g.subgroup_generated(&ElementSet::singleton(3, 6));
        assert_eq!(a3.len(), 3);
        assert!(a3.contains(0) && a3.contains(3) && a3.contains(4));
        // Derived subgroup of S3 is A3; center is trivial.
        assert_eq!(g.derived_subgroup(), a3);
        assert_eq!(g.center(), ElementSet::trivial(6));
        // A transposition normally closes to the whole group.
        assert_eq!(g.normal_closure(&ElementSet::singleton(1, 6)).len(), 6);
        // A3 is normal, a transposition's subgroup is not.
        assert!(g.is_normal_subgroup(&a3).unwrap());
        let c2 = g.subgroup_generated(&ElementSet::singleton(1, 6));
        assert!(!g.is_normal_subgroup(&c2).unwrap());
        assert_eq!(g.is_normal_subgroup(&ElementSet::new([0, 1, 3], 6)), Err(GroupError::NotASubgroup));
    }

    #[test]
    fn s3_has_six_subgroups() {
        let g = s3_from_permutations();
        let subs = g.all_subgroups();
        assert_eq!(subs.len(), 6);
        let sizes: Vec<usize> = subs.iter().map(|s| s.len()).collect();
        assert_eq!(sizes, vec![1, 2, 2, 2, 3, 6]);
        // Normal subgroups: 1, A3, S3.
        let normals = g.normal_subgroups();
        assert_eq!(normals.iter().map(|s| s.len()).collect::<Vec<_>>(), vec![1, 3, 6]);
    }

    #[test]
    fn automorphism_counts_against_brute_force() {
        // Independent oracle: try all bijections fixing 0 on the full table.
        fn brute_autos(g: &FiniteGroup) -> usize {
            let n = g.order();
            let mut perm: Vec<Elem> = (0..n as Elem).collect();
            let mut count = 0;
            permute(&mut perm, 1, g, &mut count);
            fn permute(perm: &mut Vec<Elem>, k: usize, g: &FiniteGroup, count: &mut usize) {
                let n = g.order();
                if k == n {
                    let ok = (0..n as Elem).all(|a| {
                        (0..n as Elem).all(|b| {
                            perm[g.op(a, b) as usize] == g.op(perm[a as usize], perm[b as usize])
                        })
                    });
                    if ok {
                        *count += 1;
                    }
                    return;
                }
                for i in k..n {
                    perm.swap(k, i);
                    permute(perm, k + 1, g, count);
                    perm.swap(k, i);
                }
            }
            count
        }
        let z4 = FiniteGroup::from_rows(&zmod(4)).unwrap();
        let v4 = FiniteGroup::from_rows(&[
            vec![0, 1, 2, 3],
            vec![1, 0, 3, 2],
            vec![2, 3, 0, 1],
            vec![3, 2, 1, 0],
        ])
        .unwrap();
        let z1 = FiniteGroup::from_rows(&zmod(1)).unwrap();
        assert_eq!(z4.automorphisms().len(), 2);
        assert_eq!(v4.automorphisms().len(), 6);
        assert_eq!(z1.automorphisms().len(), 1);
        assert_eq!(brute_autos(&z4), 2);
        assert_eq!(brute_autos(&v4), 6);
        let s3 = s3_from_permutations();
        assert_eq!(s3.automorphisms().len(), 6);
        assert_eq!(brute_autos(&s3), 6);
        // Every returned permutation preserves the table.
        for a in s3.automorphisms() {
            for x in s3.elements() {
                for y in s3.elements() {
                    assert_eq!(a[s3.op(x, y) as usize], s3.op(a[x as usize], a[y as usize]));
                }
            }
        }
    }

    #[test]
    fn holomorph_sizes_and_structure() {
        let z3 = FiniteGroup::from_rows(&zmod(3)).unwrap();
        let h3 = holomorph(&z3);
        assert_eq!(h3.order(), 6);
        let hg = h3.to_group().unwrap();
        assert!(hg.is_isomorphic_to(&s3_from_permutations()));

        let z4 = FiniteGroup::from_rows(&zmod(4)).unwrap();
        let h4 = holomorph(&z4);
        assert_eq!(h4.order(), 8);
        assert!(!h4.to_group().unwrap().is_abelian());
    }

    #[test]
    fn regular_subgroups_of_small_holomorphs() {
        let z1 = FiniteGroup::from_rows(&zmod(1)).unwrap();
        assert_eq!(holomorph(&z1).regular_subgroups().len(), 1);
        let z2 = FiniteGroup::from_rows(&zmod(2)).unwrap();
        assert_eq!(holomorph(&z2).regular_subgroups().len(), 1);
        let z3 = FiniteGroup::from_rows(&zmod(3)).unwrap();
        assert_eq!(holomorph(&z3).regular_subgroups().len(), 1);

        let z4 = FiniteGroup::from_rows(&zmod(4)).unwrap();
        let h = holomorph(&z4);
        let regs = h.regular_subgroups();
        assert_eq!(regs.len(), 2);
        let hg = h.to_group().unwrap();
        for r in &regs {
            assert_eq!(r.len(), 4);
            assert!(hg.is_subgroup(r));
            // Regular action: the orbit of 0 is everything, stabilizers trivial.
            let orbit: ElementSet = ElementSet::new(r.iter().map(|e| h.act(e, 0)), 4);
            assert_eq!(orbit.len(), 4);
            for e in r.iter() {
                if e != 0 {
                    assert!(h.act(e, 0) != 0, "nontrivial element fixes 0");
                }
            }
        }

        let v4 = FiniteGroup::from_rows(&[
            vec![0, 1, 2, 3],
            vec![1, 0, 3, 2],
            vec![2, 3, 0, 1],
            vec![3, 2, 1, 0],
        ])
        .unwrap();
        assert_eq!(holomorph(&v4).regular_subgroups().len(), 4);
    }

    #[test]
    fn bruteforce_group_tables_small_orders() {
        assert_eq!(enumerate_groups_bruteforce(1).unwrap().len(), 1);
        assert_eq!(enumerate_groups_bruteforce(2).unwrap().len(), 1);
        assert_eq!(enumerate_groups_bruteforce(3).unwrap().len(), 1);
        // 3 labelings of Z4 plus 1 of the Klein group.
        assert_eq!(enumerate_groups_bruteforce(4).unwrap().len(), 4);
        assert_eq!(enumerate_groups_bruteforce(5).unwrap().len(), 6);
        // 60 labelings of Z6 plus 20 of S3.
        let six = enumerate_groups_bruteforce(6).unwrap();
        assert_eq!(six.len(), 80);
        assert_eq!(six.iter().filter(|g| g.is_abelian()).count(), 60);
        assert!(matches!(
            enumerate_groups_bruteforce(7),
            Err(GroupError::OrderTooLarge { n: 7, cap: 6 })
        ));
    }

    #[test]
    fn canonical_form_is_a_relabeling_invariant() {
        let s3 = s3_from_permutations();
        let canon = s3.canonical_form();
        // Relabel by a few permutations fixing nothing in particular; all
        // canonical forms must coincide.
        for sigma in [
            vec![0, 2, 1, 4, 3, 5],
            vec![0, 5, 4, 3, 2, 1],
            vec![0, 3, 1, 5, 2, 4],
        ] {
            // sigma must send 0 to 0 for the relabeled table to keep id 0.
            let relabeled = s3.relabel(&sigma.iter().map(|&x| x as Elem).collect::<Vec<_>>());
            assert_eq!(relabeled.canonical_form(), canon);
        }
        // And the canonical form is itself a valid, isomorphic group.
        assert!(canon.is_isomorphic_to(&s3));
    }

    #[test]
    fn isomorphism_search_distinguishes_z4_from_v4() {
        let z4 = FiniteGroup::from_rows(&zmod(4)).unwrap();
        let v4 = FiniteGroup::from_rows(&[
            vec![0, 1, 2, 3],
            vec![1, 0, 3, 2],
            vec![2, 3, 0, 1],
            vec![3, 2, 1, 0],
        ])
        .unwrap();
        assert!(!z4.is_isomorphic_to(&v4));
        assert!(z4.is_isomorphic_to(&z4.relabel(&[0, 3, 2, 1])));
    }

    #[test]
    fn subgroup_generated_is_idempotent_and_monotone() {
        let s3 = s3_from_permutations();
        let sets = [
            ElementSet::empty(6),
            ElementSet::singleton(1, 6),
            ElementSet::new([1, 3], 6),
            ElementSet::new([2, 5], 6),
        ];
        for xs in &sets {
            let once = s3.subgroup_generated(xs);
            assert_eq!(s3.subgroup_generated(&once), once, "idempotent");
            assert!(xs.is_subset_of(&once));
            for ys in &sets {
                if xs.is_subset_of(ys) {
                    assert!(once.is_subset_of(&s3.subgroup_generated(ys)), "monotone");
                }
            }
        }
    }

    #[test]
    fn normal_closure_contains_generated_subgroup() {
        let s3 = s3_from_permutations();
        for x in s3.elements() {
            let xs = ElementSet::singleton(x, 6);
            assert!(s3.subgroup_generated(&xs).is_subset_of(&s3.normal_closure(&xs)));
        }
        // In an abelian group the two coincide.
        let z4 = FiniteGroup::from_rows(&zmod(4)).unwrap();
        for x in z4.elements() {
            let xs = ElementSet::singleton(x, 4);
            assert_eq!(z4.subgroup_generated(&xs), z4.normal_closure(&xs));
        }
    }

    #[test]
    fn homomorphism_enumeration_counts() {
        let z4 = FiniteGroup::from_rows(&zmod(4)).unwrap();
        let z2 = FiniteGroup::from_rows(&zmod(2)).unwrap();
        // Z4 -> Z2: generator maps to 0 or 1.
        assert_eq!(z4.homomorphisms_to(&z2).len(), 2);
        // Z2 -> Z4: image must have order dividing 2.
        assert_eq!(z2.homomorphisms_to(&z4).len(), 2);
        let s3 = s3_from_permutations();
        // S3 -> Z2: trivial plus sign.
        assert_eq!(s3.homomorphisms_to(&z2).len(), 2);
        // Z2 -> S3: identity plus the three transpositions.
        assert_eq!(z2.homomorphisms_to(&s3).len(), 4);
        // Hom(S3, Z3) is trivial.
        let z3 = FiniteGroup::from_rows(&zmod(3)).unwrap();
        assert_eq!(s3.homomorphisms_to(&z3).len(), 1);
    }

    #[test]
    fn set_product_is_literal() {
        let z4 = FiniteGroup::from_rows(&zmod(4)).unwrap();
        let a = ElementSet::new([0, 2], 4);
        let b = ElementSet::new([1], 4);
        assert_eq!(z4.set_product(&a, &b), ElementSet::new([1, 3], 4));
    }
}
