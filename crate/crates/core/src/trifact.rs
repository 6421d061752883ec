//! The large group attached to a brace and the engines that run inside it.
//!
//! A brace `B` of order `n` yields a group `G` of order `n^2`: the semidirect
//! product of `(B,+)` by `(B,·)` acting through lambda. Inside `G` live three
//! distinguished copies of the carrier — the normal subgroup `K` of pairs
//! `(k, 0)`, the acting copy `C` of pairs `(0, c)`, and the diagonal
//! `D = {(c, c)}` — and `G = KC = KD = CD` with pairwise trivial
//! intersections. Brace-theoretic properties of a subbrace translate into
//! commutator and normality statements about its three shadows in `G`; the
//! engines in this module work purely on the group side of that dictionary,
//! so their verdicts can be compared against the direct brace computations.

use crate::brace::SkewBrace;
use crate::group::{Elem, ElementSet, FiniteGroup};
use crate::smallgroups::semidirect_product;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TrifactError {
    /// A construction that needs a subbrace was given something else.
    #[error("the given set is not a subbrace")]
    NotASubbrace,
    /// An engine was invoked on input that fails one of its premises.
    #[error("premise violated: {name}")]
    PremiseViolated { name: String },
    /// A would-be group triple fails one of the defining invariants.
    #[error("tuple invariant failed: {0}")]
    TupleInvariant(String),
    /// The ambient group would be too large to materialise.
    #[error("order {n} exceeds the supported bound {cap}")]
    OrderTooLarge { n: usize, cap: usize },
}

fn premise(cond: bool, name: &str) -> Result<(), TrifactError> {
    if cond {
        Ok(())
    } else {
        Err(TrifactError::PremiseViolated { name: name.into() })
    }
}

/// The group `G = [K]C` of a brace, with its three distinguished subgroups.
#[derive(Debug, Clone)]
pub struct TrifactorisedGroup {
    brace: SkewBrace,
    group: FiniteGroup,
    k: ElementSet,
    c: ElementSet,
    d: ElementSet,
}

/// The three shadows of a subbrace `L` inside `G`, each computed literally
/// from set products and intersections:
///
/// * `k_part` — the copy `{(l, 0)}` of `L` inside `K`;
/// * `c_part` — `LD ∩ C`, which comes out as `{(0, l)}`;
/// * `d_part` — `LC ∩ D`, which comes out as `{(l, l)}`;
/// * `square` — `LD ∩ LC`, which comes out as the full block `L × L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubbraceEmbedding {
    pub k_part: ElementSet,
    pub c_part: ElementSet,
    pub d_part: ElementSet,
    pub square: ElementSet,
}

impl TrifactorisedGroup {
    /// Builds the semidirect product of the two operations of `b` through
    /// the lambda action.
    pub fn build(b: &SkewBrace) -> Result<Self, TrifactError> {
        let n = b.order();
        const CAP: usize = 64;
        if n > CAP {
            return Err(TrifactError::OrderTooLarge { n, cap: CAP });
        }
        let theta: Vec<Vec<Elem>> = (0..n as Elem).map(|c| b.lambda_map(c)).collect();
        let group = semidirect_product(b.add(), b.mul(), &theta)
            .expect("the lambda action of a brace defines a group");
        let m = n * n;
        let en = n as Elem;
        let k = ElementSet::new((0..en).map(|x| x * en), m);
        let c = ElementSet::new(0..en, m);
        let d = ElementSet::new((0..en).map(|x| x * en + x), m);
        Ok(TrifactorisedGroup { brace: b.clone(), group, k, c, d })
    }

    pub fn brace(&self) -> &SkewBrace {
        &self.brace
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn k(&self) -> &ElementSet {
        &self.k
    }

    pub fn c(&self) -> &ElementSet {
        &self.c
    }

    pub fn d(&self) -> &ElementSet {
        &self.d
    }

    /// Pair encoding: the element `(k, c)` of `G`.
    pub fn encode(&self, k: Elem, c: Elem) -> Elem {
        k * self.brace.order() as Elem + c
    }

    /// Inverse of [`encode`](Self::encode).
    pub fn decode(&self, e: Elem) -> (Elem, Elem) {
        let n = self.brace.order() as Elem;
        (e / n, e % n)
    }

    /// The copy of a carrier subset inside `K`.
    pub fn embed_k(&self, s: &ElementSet) -> ElementSet {
        ElementSet::new(s.iter().map(|x| self.encode(x, 0)), self.group.order())
    }

    /// The carrier subset a subset of `K` projects to; `None` when the set
    /// strays outside `K`.
    pub fn decode_k(&self, s: &ElementSet) -> Option<ElementSet> {
        let mut out = Vec::with_capacity(s.len());
        for e in s.iter() {
            let (k, c) = self.decode(e);
            if c != 0 {
                return None;
            }
            out.push(k);
        }
        Some(ElementSet::new(out, self.brace.order()))
    }

    /// The carrier subset a subset of `C` projects to.
    pub fn decode_c(&self, s: &ElementSet) -> Option<ElementSet> {
        let mut out = Vec::with_capacity(s.len());
        for e in s.iter() {
            let (k, c) = self.decode(e);
            if k != 0 {
                return None;
            }
            out.push(c);
        }
        Some(ElementSet::new(out, self.brace.order()))
    }

    /// The three shadows of a subbrace, all computed literally in `G`.
    pub fn embed_subbrace(&self, l: &ElementSet) -> Result<SubbraceEmbedding, TrifactError> {
        if !self.brace.is_subbrace(l) {
            return Err(TrifactError::NotASubbrace);
        }
        let k_part = self.embed_k(l);
        let ld = self.group.set_product(&k_part, &self.d);
        let lc = self.group.set_product(&k_part, &self.c);
        Ok(SubbraceEmbedding {
            k_part,
            c_part: ld.intersection(&self.c),
            d_part: lc.intersection(&self.d),
            square: ld.intersection(&lc),
        })
    }

    /// Group-side test for a trivial subbrace: its `C`-shadow commutes with
    /// its `K`-shadow.
    pub fn trivial_by_commutators(&self, l: &ElementSet) -> Result<bool, TrifactError> {
        let emb = self.embed_subbrace(l)?;
        Ok(self.group.commute(&emb.c_part, &emb.k_part))
    }

    /// Group-side test for an abelian subbrace: trivial with abelian
    /// `K`-shadow.
    pub fn abelian_by_commutators(&self, l: &ElementSet) -> Result<bool, TrifactError> {
        let emb = self.embed_subbrace(l)?;
        Ok(self.group.commute(&emb.c_part, &emb.k_part) && self.group.commute(&emb.k_part, &emb.k_part))
    }

    /// Group-side test for a left ideal: `[C, L]` stays inside the
    /// `K`-shadow of `L`.
    pub fn left_ideal_by_commutators(&self, l: &ElementSet) -> Result<bool, TrifactError> {
        let emb = self.embed_subbrace(l)?;
        Ok(self.group.commutator_subgroup(&self.c, &emb.k_part).is_subset_of(&emb.k_part))
    }

    /// Group-side test for a right ideal: the `C`-shadow of `L` moves `K`
    /// only inside the `K`-shadow of `L`.
    pub fn right_ideal_by_commutators(&self, l: &ElementSet) -> Result<bool, TrifactError> {
        let emb = self.embed_subbrace(l)?;
        Ok(self.group.commutator_subgroup(&emb.c_part, &self.k).is_subset_of(&emb.k_part))
    }

    /// Group-side test for a strong left ideal: the `K`-shadow is normal in
    /// all of `G`.
    pub fn strong_left_ideal_by_normality(&self, l: &ElementSet) -> Result<bool, TrifactError> {
        let emb = self.embed_subbrace(l)?;
        Ok(self.group.is_normal_subgroup(&emb.k_part).unwrap_or(false))
    }

    /// The star span of two subbraces read off on the group side:
    /// `[XD ∩ C, Y]` is a subgroup of `K`, and its projection is the
    /// additive span of all `x * y`.
    pub fn star_span_groupside(
        &self,
        x: &ElementSet,
        y: &ElementSet,
    ) -> Result<ElementSet, TrifactError> {
        let ex = self.embed_subbrace(x)?;
        let ey = self.embed_subbrace(y)?;
        let comm = self.group.commutator_subgroup(&ex.c_part, &ey.k_part);
        Ok(self.decode_k(&comm).expect("commutators against K land in K"))
    }

    /// The three faces of abelianness: the brace itself, the whole group
    /// `G`, and the pair "K abelian + trivial action". All three agree.
    pub fn abelian_equivalence(&self) -> (bool, bool, bool) {
        let brace_side = self.brace.is_abelian_brace();
        let group_side = self.group.is_abelian();
        let split = self.group.commute(&self.k, &self.k)
            && self.group.commutator_subgroup(&self.c, &self.k).is_trivial_subgroup();
        (brace_side, group_side, split)
    }

    /// The two factorisation statements, each computed on both sides:
    /// `B = A1 + A2` against `K = L1 L2`, and `B = A1 A2` against
    /// `C = (L1 D ∩ C)(L2 D ∩ C)`.
    pub fn factorisation_equivalence(
        &self,
        a1: &ElementSet,
        a2: &ElementSet,
    ) -> Result<FactorisationEquivalence, TrifactError> {
        let e1 = self.embed_subbrace(a1)?;
        let e2 = self.embed_subbrace(a2)?;
        let carrier = self.brace.carrier();
        let sum_brace = self.brace.add().set_product(a1, a2) == carrier;
        let product_brace = self.brace.mul().set_product(a1, a2) == carrier;
        let sum_group = self.group.set_product(&e1.k_part, &e2.k_part) == self.k;
        let product_group = self.group.set_product(&e1.c_part, &e2.c_part) == self.c;
        Ok(FactorisationEquivalence { sum_brace, sum_group, product_brace, product_group })
    }

    /// The validated abstract triple `(G, K, H, E)` with `H` the diagonal
    /// and `E` the acting copy.
    pub fn tuple(&self) -> TrifactTuple {
        TrifactTuple::new(self.group.clone(), self.k.clone(), self.d.clone(), self.c.clone())
            .expect("the built group satisfies the triple invariants")
    }
}

/// Both factorisation statements on both sides of the dictionary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorisationEquivalence {
    pub sum_brace: bool,
    pub sum_group: bool,
    pub product_brace: bool,
    pub product_group: bool,
}

/// An abstract trifactorised group: `K` normal, `G = KE = KH = HE`, and both
/// `K` and `H` meeting `E` trivially. No normality is required of `H`.
#[derive(Debug, Clone)]
pub struct TrifactTuple {
    group: FiniteGroup,
    k: ElementSet,
    h: ElementSet,
    e: ElementSet,
}

impl TrifactTuple {
    pub fn new(
        group: FiniteGroup,
        k: ElementSet,
        h: ElementSet,
        e: ElementSet,
    ) -> Result<Self, TrifactError> {
        let fail = |msg: &str| Err(TrifactError::TupleInvariant(msg.into()));
        for (name, s) in [("K", &k), ("H", &h), ("E", &e)] {
            if !group.is_subgroup(s) {
                return fail(&format!("{name} is not a subgroup"));
            }
        }
        if !group.is_normal_subgroup(&k).unwrap_or(false) {
            return fail("K is not normal");
        }
        let carrier = group.carrier();
        for (name, a, b) in [("KE", &k, &e), ("KH", &k, &h), ("HE", &h, &e)] {
            if group.set_product(a, b) != carrier {
                return fail(&format!("G != {name}"));
            }
        }
        for (name, a, b) in [("K ∩ E", &k, &e), ("H ∩ E", &h, &e)] {
            if !a.intersection(b).is_trivial_subgroup() {
                return fail(&format!("{name} is not trivial"));
            }
        }
        Ok(TrifactTuple { group, k, h, e })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn k(&self) -> &ElementSet {
        &self.k
    }

    pub fn h(&self) -> &ElementSet {
        &self.h
    }

    pub fn e(&self) -> &ElementSet {
        &self.e
    }

    /// `L H ∩ E`, the `E`-shadow of a subgroup `L` of `K`.
    pub fn e_shadow(&self, l: &ElementSet) -> ElementSet {
        self.group.set_product(l, &self.h).intersection(&self.e)
    }

    /// `L H ∩ L E`, the abelian block of `L` when the engines' premises
    /// hold.
    pub fn t_block(&self, l: &ElementSet) -> ElementSet {
        self.group
            .set_product(l, &self.h)
            .intersection(&self.group.set_product(l, &self.e))
    }

    fn check_l_pair(&self, l1: &ElementSet, l2: &ElementSet) -> Result<(), TrifactError> {
        premise(self.group.is_subgroup(l1) && l1.is_subset_of(&self.k), "l1-subgroup-of-k")?;
        premise(self.group.is_subgroup(l2) && l2.is_subset_of(&self.k), "l2-subgroup-of-k")
    }
}

/// What the two-sided engine concludes about an admissible pair.
#[derive(Debug, Clone)]
pub struct ItoReport {
    /// `K'[E, K]`, the subgroup the conclusions are about.
    pub core: ElementSet,
    /// The core is abelian.
    pub core_abelian: bool,
    /// `[K'[E,K]H ∩ E, K'[E,K]] = 1`: the `E`-shadow of the core
    /// centralises it.
    pub core_action_trivial: bool,
    /// The two abelian blocks cover the group: `T2 T1 = G`.
    pub blocks_cover: bool,
    /// The derived subgroup of `G` is abelian.
    pub derived_abelian: bool,
}

/// The main group engine. Premises, all checked literally:
///
/// 1. `L1`, `L2` are subgroups of `K` with `K = L1 L2`, and the shadows
///    satisfy `E = E1 E2`;
/// 2. `[E, L1] <= L1` and `[E1, K] <= L1`;
/// 3. the blocks `T1`, `T2` are abelian;
/// 4. `K'H ∩ E` is contained in `E' ([E,K]H ∩ E)`.
///
/// The report carries the conclusions; under the premises all four flags
/// come out true.
pub fn ito_engine(
    t: &TrifactTuple,
    l1: &ElementSet,
    l2: &ElementSet,
) -> Result<ItoReport, TrifactError> {
    t.check_l_pair(l1, l2)?;
    let g = &t.group;
    premise(g.set_product(l1, l2) == t.k, "k-from-l1-l2")?;
    let e1 = t.e_shadow(l1);
    let e2 = t.e_shadow(l2);
    premise(g.set_product(&e1, &e2) == t.e, "e-from-e1-e2")?;
    premise(g.commutator_subgroup(&t.e, l1).is_subset_of(l1), "e-normalises-l1")?;
    premise(g.commutator_subgroup(&e1, &t.k).is_subset_of(l1), "e1-k-inside-l1")?;
    let t1 = t.t_block(l1);
    let t2 = t.t_block(l2);
    premise(g.commute(&t1, &t1), "t1-abelian")?;
    premise(g.commute(&t2, &t2), "t2-abelian")?;
    let k_derived = g.commutator_subgroup(&t.k, &t.k);
    let e_derived = g.commutator_subgroup(&t.e, &t.e);
    let ek = g.commutator_subgroup(&t.e, &t.k);
    let lhs = g.set_product(&k_derived, &t.h).intersection(&t.e);
    let rhs = g.set_product(&e_derived, &g.set_product(&ek, &t.h).intersection(&t.e));
    premise(lhs.is_subset_of(&rhs), "derived-k-shadow-condition")?;

    // K' and [E, K] are both normal in G, so their product is a subgroup.
    debug_assert!(g.is_normal_subgroup(&k_derived).unwrap_or(false));
    debug_assert!(g.is_normal_subgroup(&ek).unwrap_or(false));
    let core = g.set_product(&k_derived, &ek);
    assert!(g.is_subgroup(&core), "product of normal subgroups must be a subgroup");

    let core_shadow = g.set_product(&core, &t.h).intersection(&t.e);
    Ok(ItoReport {
        core_abelian: g.commute(&core, &core),
        core_action_trivial: g.commute(&core_shadow, &core),
        blocks_cover: g.set_product(&t2, &t1) == g.carrier(),
        derived_abelian: {
            let gd = g.derived_subgroup();
            g.commute(&gd, &gd)
        },
        core,
    })
}

/// Decomposition of `[E, K]` along a factorised pair.
#[derive(Debug, Clone)]
pub struct EkReport {
    /// `[E, K]`.
    pub commutator: ElementSet,
    /// `[E1, L2]`.
    pub first_part: ElementSet,
    /// `[E2, L1]`.
    pub second_part: ElementSet,
    /// Both parts are normal in `G`.
    pub parts_normal: (bool, bool),
    /// `[E, K] = [E1, L2] [E2, L1]` as literal sets.
    pub product_matches: bool,
}

/// Premises: `K = L1 L2`, `E = E1 E2`, and each shadow centralises its own
/// factor (`[E1, L1] = [E2, L2] = 1`). Conclusion: `[E, K]` splits as the
/// product of the two crossed commutators, both normal in `G`.
pub fn ek_decomposition(
    t: &TrifactTuple,
    l1: &ElementSet,
    l2: &ElementSet,
) -> Result<EkReport, TrifactError> {
    t.check_l_pair(l1, l2)?;
    let g = &t.group;
    premise(g.set_product(l1, l2) == t.k, "k-from-l1-l2")?;
    let e1 = t.e_shadow(l1);
    let e2 = t.e_shadow(l2);
    premise(g.set_product(&e1, &e2) == t.e, "e-from-e1-e2")?;
    premise(g.commute(&e1, l1), "e1-centralises-l1")?;
    premise(g.commute(&e2, l2), "e2-centralises-l2")?;
    let commutator = g.commutator_subgroup(&t.e, &t.k);
    let first_part = g.commutator_subgroup(&e1, l2);
    let second_part = g.commutator_subgroup(&e2, l1);
    let product = g.set_product(&first_part, &second_part);
    Ok(EkReport {
        parts_normal: (
            g.is_normal_subgroup(&first_part).unwrap_or(false),
            g.is_normal_subgroup(&second_part).unwrap_or(false),
        ),
        product_matches: product == commutator,
        commutator,
        first_part,
        second_part,
    })
}

/// One tested instance of the centraliser splitting.
#[derive(Debug, Clone)]
pub struct CentraliserCase {
    pub label: String,
    /// The subgroup `X` splits along the blocks: `X = (X ∩ T1)(X ∩ T2)`.
    pub splits_along_blocks: bool,
    /// `C_K(X) = (C_K(X) ∩ L1)(C_K(X) ∩ L2)`.
    pub centraliser_splits: bool,
}

#[derive(Debug, Clone)]
pub struct CentraliserReport {
    pub cases: Vec<CentraliserCase>,
}

/// Premises: both blocks abelian, `K = L1 L2`, and `G = T1 T2`. For every
/// harvested subgroup `X` that splits along the blocks, the centraliser of
/// `X` in `K` splits along the factors. Tested on `X` trivial, `X = G`, and
/// `X = G'T1 ∩ G'T2`.
pub fn centraliser_factorisation(
    t: &TrifactTuple,
    l1: &ElementSet,
    l2: &ElementSet,
) -> Result<CentraliserReport, TrifactError> {
    t.check_l_pair(l1, l2)?;
    let g = &t.group;
    premise(g.set_product(l1, l2) == t.k, "k-from-l1-l2")?;
    let t1 = t.t_block(l1);
    let t2 = t.t_block(l2);
    premise(g.commute(&t1, &t1), "t1-abelian")?;
    premise(g.commute(&t2, &t2), "t2-abelian")?;
    premise(g.set_product(&t1, &t2) == g.carrier(), "g-from-t1-t2")?;

    let gd = g.derived_subgroup();
    let harvest = g.set_product(&gd, &t1).intersection(&g.set_product(&gd, &t2));
    let mut cases = Vec::new();
    for (label, x) in [
        ("trivial", ElementSet::trivial(g.order())),
        ("whole-group", g.carrier()),
        ("derived-blocks-intersection", harvest),
    ] {
        let split_x = g.set_product(&x.intersection(&t1), &x.intersection(&t2)) == x;
        let ck = g.centralizer(&x).intersection(&t.k);
        let split_ck = g.set_product(&ck.intersection(l1), &ck.intersection(l2)) == ck;
        cases.push(CentraliserCase {
            label: label.into(),
            splits_along_blocks: split_x,
            centraliser_splits: split_ck,
        });
    }
    Ok(CentraliserReport { cases })
}

/// A nontrivial normal subgroup of `G` inside one of the factors.
#[derive(Debug, Clone)]
pub struct SliWitness {
    /// True when the witness lies in `L1`, false for `L2`.
    pub in_first: bool,
    /// The element whose normal closure stays inside the factor.
    pub generator: Elem,
    /// That normal closure.
    pub subgroup: ElementSet,
}

#[derive(Debug, Clone)]
pub struct SliReport {
    pub witness: Option<SliWitness>,
}

/// Premises: `K = L1 L2`, `E = E1 E2`, both blocks abelian, `[E, L1] <= L1`,
/// and `G` nontrivial. Conclusion: some nontrivial normal subgroup of `G`
/// lies inside `L1` or `L2`. A subgroup of `L` contains a nontrivial normal
/// subgroup of `G` exactly when some nonidentity element of `L` has its
/// whole normal closure inside `L`, so the search scans elements directly.
pub fn sli_engine(
    t: &TrifactTuple,
    l1: &ElementSet,
    l2: &ElementSet,
) -> Result<SliReport, TrifactError> {
    t.check_l_pair(l1, l2)?;
    let g = &t.group;
    premise(g.order() > 1, "g-nontrivial")?;
    premise(g.set_product(l1, l2) == t.k, "k-from-l1-l2")?;
    let e1 = t.e_shadow(l1);
    let e2 = t.e_shadow(l2);
    premise(g.set_product(&e1, &e2) == t.e, "e-from-e1-e2")?;
    let t1 = t.t_block(l1);
    let t2 = t.t_block(l2);
    premise(g.commute(&t1, &t1), "t1-abelian")?;
    premise(g.commute(&t2, &t2), "t2-abelian")?;
    premise(g.commutator_subgroup(&t.e, l1).is_subset_of(l1), "e-normalises-l1")?;

    let witness = [(true, l1), (false, l2)].into_iter().find_map(|(in_first, l)| {
        l.iter().filter(|&x| x != 0).find_map(|x| {
            let closure = g.normal_closure(&ElementSet::singleton(x, g.order()));
            closure
                .is_subset_of(l)
                .then(|| SliWitness { in_first, generator: x, subgroup: closure })
        })
    });
    Ok(SliReport { witness })
}
