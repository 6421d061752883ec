//! Premise-checked verifiers for the structure theorems on factorised
//! braces.
//!
//! Every function first validates the premises it needs and refuses to run
//! otherwise, so a passing verdict always refers to an instance the claim is
//! actually about. Where a statement has both a brace-side and a group-side
//! reading, both are computed independently and reported side by side.

use crate::brace::{SkewBrace, SubbraceFlags};
use crate::group::ElementSet;
use crate::smallgroups::{alternating, cyclic, direct_product, symmetric};
use crate::trifact::{ito_engine, sli_engine, TrifactError, TrifactorisedGroup};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TheoremError {
    /// A set handed in as a factor is not a subbrace.
    #[error("the given set is not a subbrace")]
    NotASubbrace,
    /// The pair does not cover the brace the way the statement needs.
    #[error("the pair does not factorise the brace")]
    NotAFactorisation,
    /// A named premise fails on this input.
    #[error("premise violated: {name}")]
    PremiseViolated { name: String },
}

impl From<TrifactError> for TheoremError {
    fn from(e: TrifactError) -> Self {
        match e {
            TrifactError::NotASubbrace => TheoremError::NotASubbrace,
            TrifactError::PremiseViolated { name } => {
                TheoremError::PremiseViolated { name: format!("group-side {name}") }
            }
            TrifactError::TupleInvariant(m) => {
                TheoremError::PremiseViolated { name: format!("group-side tuple: {m}") }
            }
            TrifactError::OrderTooLarge { n, cap } => TheoremError::PremiseViolated {
                name: format!("group-side order {n} over cap {cap}"),
            },
        }
    }
}

fn premise(cond: bool, name: &str) -> Result<(), TheoremError> {
    if cond {
        Ok(())
    } else {
        Err(TheoremError::PremiseViolated { name: name.into() })
    }
}

fn require_subbrace(b: &SkewBrace, s: &ElementSet) -> Result<(), TheoremError> {
    if b.is_subbrace(s) {
        Ok(())
    } else {
        Err(TheoremError::NotASubbrace)
    }
}

/// All subbraces of `b`: multiplicative subgroups that are additively
/// closed.
pub fn enumerate_subbraces(b: &SkewBrace) -> Vec<ElementSet> {
    b.mul().all_subgroups().into_iter().filter(|s| b.add().is_subgroup(s)).collect()
}

/// One ordered pair of subbraces covering the brace, with the full analysis
/// of both factors.
#[derive(Debug, Clone)]
pub struct PairRecord {
    pub a1: SubbraceFlags,
    pub a2: SubbraceFlags,
    /// `B = A1 + A2` literally.
    pub covers_sum: bool,
    /// `B = A1 A2` literally.
    pub covers_product: bool,
}

/// Every ordered pair of subbraces that covers `b` additively or
/// multiplicatively.
pub fn find_factorisations(b: &SkewBrace) -> Vec<PairRecord> {
    let subs = enumerate_subbraces(b);
    let carrier = b.carrier();
    let mut out = Vec::new();
    for x in &subs {
        for y in &subs {
            let covers_sum = b.add().set_product(x, y) == carrier;
            let covers_product = b.mul().set_product(x, y) == carrier;
            if covers_sum || covers_product {
                out.push(PairRecord {
                    a1: b.analyze_subbrace(x),
                    a2: b.analyze_subbrace(y),
                    covers_sum,
                    covers_product,
                });
            }
        }
    }
    out
}

/// Whether `s` inherits the factorisation `B = A1 + A2`: it must be rebuilt
/// by its traces on the factors, and contain the factors' intersection.
pub fn is_factorised_subbrace(
    b: &SkewBrace,
    a1: &ElementSet,
    a2: &ElementSet,
    s: &ElementSet,
) -> Result<bool, TheoremError> {
    require_subbrace(b, a1)?;
    require_subbrace(b, a2)?;
    require_subbrace(b, s)?;
    if b.add().set_product(a1, a2) != b.carrier() {
        return Err(TheoremError::NotAFactorisation);
    }
    let rebuilt = b.add().set_product(&a1.intersection(s), &a2.intersection(s));
    Ok(rebuilt == *s && a1.intersection(a2).is_subset_of(s))
}

/// The two halves of the sum-versus-product comparison; each is reported
/// only when its hypothesis applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lemma31Report {
    /// When `A2` is a left ideal: the literal sets `A1 + A2` and `A1 A2`
    /// coincide.
    pub sets_equal: Option<bool>,
    /// When `A1` is a left ideal and the pair covers one way: it covers both
    /// ways.
    pub covers_both: Option<bool>,
}

pub fn lemma_sum_product_check(
    b: &SkewBrace,
    a1: &ElementSet,
    a2: &ElementSet,
) -> Result<Lemma31Report, TheoremError> {
    require_subbrace(b, a1)?;
    require_subbrace(b, a2)?;
    let sum = b.add().set_product(a1, a2);
    let prod = b.mul().set_product(a1, a2);
    let carrier = b.carrier();
    let sets_equal = b.is_left_ideal(a2).then(|| sum == prod);
    let covers_any = sum == carrier || prod == carrier;
    let covers_both =
        (b.is_left_ideal(a1) && covers_any).then(|| sum == carrier && prod == carrier);
    Ok(Lemma31Report { sets_equal, covers_both })
}

/// Outcome of the main structure theorem on one admissible pair.
#[derive(Debug, Clone)]
pub struct TheoremAReport {
    /// The commutator ideal of the brace.
    pub commutator_ideal: ElementSet,
    /// The commutator ideal is an abelian subbrace (direct computation).
    pub ideal_is_abelian: bool,
    /// The group engine's core is abelian and centralised by its shadow.
    pub engine_core_abelian: bool,
    /// The engine's core projects exactly onto the commutator ideal.
    pub core_matches_ideal: bool,
    /// The ambient group has abelian derived subgroup.
    pub group_metabelian: bool,
    /// The two abelian blocks cover the ambient group.
    pub blocks_cover: bool,
}

impl TheoremAReport {
    /// Both routes succeed and agree.
    pub fn holds(&self) -> bool {
        self.ideal_is_abelian
            && self.engine_core_abelian
            && self.core_matches_ideal
            && self.group_metabelian
            && self.blocks_cover
    }
}

/// Premises: `A1`, `A2` abelian subbraces covering `B` one way or the
/// other, with `A1` both a left and a right ideal. Conclusion, computed on
/// both sides of the dictionary: the commutator ideal is abelian.
pub fn theorem_a_check(
    b: &SkewBrace,
    a1: &ElementSet,
    a2: &ElementSet,
) -> Result<TheoremAReport, TheoremError> {
    let tf = TrifactorisedGroup::build(b)?;
    theorem_a_check_with(&tf, a1, a2)
}

/// [`theorem_a_check`] against a prebuilt ambient group.
pub fn theorem_a_check_with(
    tf: &TrifactorisedGroup,
    a1: &ElementSet,
    a2: &ElementSet,
) -> Result<TheoremAReport, TheoremError> {
    let b = tf.brace();
    require_subbrace(b, a1)?;
    require_subbrace(b, a2)?;
    premise(b.is_abelian_subbrace(a1), "a1-abelian")?;
    premise(b.is_abelian_subbrace(a2), "a2-abelian")?;
    let carrier = b.carrier();
    if b.add().set_product(a1, a2) != carrier && b.mul().set_product(a1, a2) != carrier {
        return Err(TheoremError::NotAFactorisation);
    }
    premise(b.is_left_ideal(a1), "a1-left-ideal")?;
    premise(b.is_right_ideal(a1), "a1-right-ideal")?;

    let ci = b.commutator_ideal();
    let tuple = tf.tuple();
    let l1 = tf.embed_subbrace(a1)?.k_part;
    let l2 = tf.embed_subbrace(a2)?.k_part;
    let ito = ito_engine(&tuple, &l1, &l2)?;
    let core = tf.decode_k(&ito.core).expect("the engine core lies inside K");
    Ok(TheoremAReport {
        ideal_is_abelian: b.is_abelian_subbrace(&ci),
        engine_core_abelian: ito.core_abelian && ito.core_action_trivial,
        core_matches_ideal: core == ci,
        group_metabelian: ito.derived_abelian,
        blocks_cover: ito.blocks_cover,
        commutator_ideal: ci,
    })
}

/// Outcome of the trivial-factors statement.
#[derive(Debug, Clone)]
pub struct TsangReport {
    /// The star ideal `B * B`.
    pub star_ideal: ElementSet,
    /// It carries a trivial brace structure.
    pub star_ideal_trivial: bool,
    /// The group-side star span projects onto the same set.
    pub groupside_star_matches: bool,
}

/// Premises: `A1`, `A2` trivial subbraces covering `B`, each of them a left
/// and right ideal of the opposite brace. Conclusion: `B * B` is a trivial
/// subbrace.
pub fn tsang_check(
    b: &SkewBrace,
    a1: &ElementSet,
    a2: &ElementSet,
) -> Result<TsangReport, TheoremError> {
    let tf = TrifactorisedGroup::build(b)?;
    tsang_check_with(&tf, a1, a2)
}

/// [`tsang_check`] against a prebuilt ambient group.
pub fn tsang_check_with(
    tf: &TrifactorisedGroup,
    a1: &ElementSet,
    a2: &ElementSet,
) -> Result<TsangReport, TheoremError> {
    let b = tf.brace();
    require_subbrace(b, a1)?;
    require_subbrace(b, a2)?;
    premise(b.is_trivial_subbrace(a1), "a1-trivial")?;
    premise(b.is_trivial_subbrace(a2), "a2-trivial")?;
    let carrier = b.carrier();
    if b.add().set_product(a1, a2) != carrier && b.mul().set_product(a1, a2) != carrier {
        return Err(TheoremError::NotAFactorisation);
    }
    let op = b.opposite();
    premise(op.is_left_ideal(a1) && op.is_right_ideal(a1), "a1-ideal-of-opposite")?;
    premise(op.is_left_ideal(a2) && op.is_right_ideal(a2), "a2-ideal-of-opposite")?;

    let star = b.star_span(&carrier, &carrier);
    let groupside = tf.star_span_groupside(&carrier, &carrier)?;
    Ok(TsangReport {
        star_ideal_trivial: b.is_trivial_subbrace(&star),
        groupside_star_matches: groupside == star,
        star_ideal: star,
    })
}

/// Outcomes of the two-sided covering statement; each field is `Some` only
/// when its branch hypothesis applies to the pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Theorem2Report {
    /// Trivial factors: the fixed set inherits the factorisation.
    pub fix_factorised: Option<bool>,
    /// Trivial factors: the lambda kernel inherits the factorisation.
    pub kernel_factorised: Option<bool>,
    /// Abelian factors: the socle inherits it and is an ideal.
    pub socle_factorised_ideal: Option<bool>,
    /// Abelian factors: the centre inherits it and is an ideal.
    pub centre_factorised_ideal: Option<bool>,
    /// Abelian factors: `A1 ∩ A2` is central.
    pub intersection_central: Option<bool>,
}

impl Theorem2Report {
    /// No reported conclusion failed.
    pub fn holds(&self) -> bool {
        [
            self.fix_factorised,
            self.kernel_factorised,
            self.socle_factorised_ideal,
            self.centre_factorised_ideal,
            self.intersection_central,
        ]
        .iter()
        .all(|f| f.unwrap_or(true))
    }

    /// At least one branch applied.
    pub fn applicable(&self) -> bool {
        self.fix_factorised.is_some() || self.socle_factorised_ideal.is_some()
    }
}

/// Premises: `B` nonzero and `B = A1 + A2 = A1 A2`, both coverings at once.
/// The trivial-factor conclusions are reported when both factors are
/// trivial subbraces, the abelian-factor conclusions when both are abelian.
pub fn theorem_2_check(
    b: &SkewBrace,
    a1: &ElementSet,
    a2: &ElementSet,
) -> Result<Theorem2Report, TheoremError> {
    premise(b.order() > 1, "b-nonzero")?;
    require_subbrace(b, a1)?;
    require_subbrace(b, a2)?;
    let carrier = b.carrier();
    if b.add().set_product(a1, a2) != carrier || b.mul().set_product(a1, a2) != carrier {
        return Err(TheoremError::NotAFactorisation);
    }
    let both_trivial = b.is_trivial_subbrace(a1) && b.is_trivial_subbrace(a2);
    let both_abelian = b.is_abelian_subbrace(a1) && b.is_abelian_subbrace(a2);
    let factorised = |s: &ElementSet| {
        let rebuilt = b.add().set_product(&a1.intersection(s), &a2.intersection(s));
        rebuilt == *s && a1.intersection(a2).is_subset_of(s)
    };
    Ok(Theorem2Report {
        fix_factorised: both_trivial.then(|| factorised(&b.fix_set())),
        kernel_factorised: both_trivial.then(|| factorised(&b.lambda_kernel())),
        socle_factorised_ideal: both_abelian.then(|| {
            let s = b.socle();
            factorised(&s) && b.is_ideal(&s)
        }),
        centre_factorised_ideal: both_abelian.then(|| {
            let z = b.centre();
            factorised(&z) && b.is_ideal(&z)
        }),
        intersection_central: both_abelian
            .then(|| a1.intersection(a2).is_subset_of(&b.centre())),
    })
}

/// A nonzero strong left ideal found inside one of the factors.
#[derive(Debug, Clone)]
pub struct IdealWitness {
    /// True when the ideal sits inside `A1`.
    pub in_first: bool,
    pub ideal: ElementSet,
    /// The set re-checked against the strong left ideal predicate.
    pub strong_left_verified: bool,
}

/// Outcome of the strong-left-ideal existence statement, with the direct
/// search and the group-engine pullback reported separately.
#[derive(Debug, Clone)]
pub struct Theorem3Report {
    pub direct_witness: Option<IdealWitness>,
    pub engine_witness: Option<IdealWitness>,
}

impl Theorem3Report {
    pub fn holds(&self) -> bool {
        let good = |w: &Option<IdealWitness>| {
            w.as_ref().is_some_and(|w| w.strong_left_verified && w.ideal.len() > 1)
        };
        good(&self.direct_witness) && good(&self.engine_witness)
    }
}

/// Premises: `B` nonzero, `B = A1 + A2` with both factors abelian
/// subbraces, and `A1` a left ideal. Conclusion: a nonzero strong left
/// ideal of `B` lies inside `A1` or `A2`, found independently by a direct
/// closure scan and by the group engine.
pub fn theorem_3_check(
    b: &SkewBrace,
    a1: &ElementSet,
    a2: &ElementSet,
) -> Result<Theorem3Report, TheoremError> {
    let tf = TrifactorisedGroup::build(b)?;
    theorem_3_check_with(&tf, a1, a2)
}

/// [`theorem_3_check`] against a prebuilt ambient group.
pub fn theorem_3_check_with(
    tf: &TrifactorisedGroup,
    a1: &ElementSet,
    a2: &ElementSet,
) -> Result<Theorem3Report, TheoremError> {
    let b = tf.brace();
    premise(b.order() > 1, "b-nonzero")?;
    require_subbrace(b, a1)?;
    require_subbrace(b, a2)?;
    premise(b.is_abelian_subbrace(a1), "a1-abelian")?;
    premise(b.is_abelian_subbrace(a2), "a2-abelian")?;
    if b.add().set_product(a1, a2) != b.carrier() {
        return Err(TheoremError::NotAFactorisation);
    }
    premise(b.is_left_ideal(a1), "a1-left-ideal")?;

    // Direct route: the smallest strong left ideal through each element of
    // a factor, factors scanned in order, elements ascending.
    let direct_witness = [(true, a1), (false, a2)].into_iter().find_map(|(in_first, a)| {
        a.iter().filter(|&x| x != 0).find_map(|x| {
            let closure = b.strong_left_ideal_closure(&ElementSet::singleton(x, b.order()));
            closure.is_subset_of(a).then(|| IdealWitness {
                in_first,
                strong_left_verified: b.is_strong_left_ideal(&closure),
                ideal: closure,
            })
        })
    });

    // Group route: the engine's normal subgroup, pulled back to the brace.
    let tuple = tf.tuple();
    let l1 = tf.embed_subbrace(a1)?.k_part;
    let l2 = tf.embed_subbrace(a2)?.k_part;
    let sli = sli_engine(&tuple, &l1, &l2)?;
    let engine_witness = sli.witness.map(|w| {
        let ideal = tf.decode_k(&w.subgroup).expect("the witness lies inside K");
        IdealWitness {
            in_first: w.in_first,
            strong_left_verified: b.is_strong_left_ideal(&ideal),
            ideal,
        }
    });
    Ok(Theorem3Report { direct_witness, engine_witness })
}

/// Structural audit of the boundary example of order 24: additive group
/// `C2 x C2 x S3`, multiplicative group `C2 x A4`, a covering pair made of
/// an order-3 strong left ideal and an order-8 elementary abelian right
/// ideal, and a nontrivial star ideal.
#[derive(Debug, Clone)]
pub struct CounterexampleReport {
    pub additive_matches: bool,
    pub multiplicative_matches: bool,
    /// All pairs realising the covering profile.
    pub pairs: Vec<(ElementSet, ElementSet)>,
    pub star_ideal_not_trivial: bool,
}

impl CounterexampleReport {
    pub fn confirmed(&self) -> bool {
        self.additive_matches
            && self.multiplicative_matches
            && !self.pairs.is_empty()
            && self.star_ideal_not_trivial
    }
}

/// Checks one brace against the full boundary profile.
pub fn counterexample_audit(b: &SkewBrace) -> CounterexampleReport {
    let add_ref = direct_product(
        &direct_product(&cyclic(2), &cyclic(2)),
        &symmetric(3).expect("symmetric(3) is supported"),
    );
    let mul_ref = direct_product(&cyclic(2), &alternating(4).expect("alternating(4) is supported"));
    let additive_matches = b.order() == 24 && b.add().is_isomorphic_to(&add_ref);
    let multiplicative_matches = b.order() == 24 && b.mul().is_isomorphic_to(&mul_ref);
    let carrier = b.carrier();
    let mut pairs = Vec::new();
    if b.order() == 24 {
        let subs = enumerate_subbraces(b);
        for x in subs.iter().filter(|s| s.len() == 3) {
            if !b.is_strong_left_ideal(x) {
                continue;
            }
            for y in subs.iter().filter(|s| s.len() == 8) {
                let elementary = y.iter().all(|e| b.add_op(e, e) == 0);
                if !elementary || !b.is_right_ideal(y) {
                    continue;
                }
                if b.add().set_product(x, y) == carrier && b.mul().set_product(x, y) == carrier {
                    pairs.push((x.clone(), y.clone()));
                }
            }
        }
    }
    let star = b.star_span(&carrier, &carrier);
    CounterexampleReport {
        additive_matches,
        multiplicative_matches,
        pairs,
        star_ideal_not_trivial: !b.is_trivial_subbrace(&star),
    }
}

/// Scans every brace over the fixed additive group `C2 x C2 x S3` and
/// returns the ones whose audit confirms the whole profile.
pub fn counterexample_search() -> Vec<SkewBrace> {
    let add = direct_product(
        &direct_product(&cyclic(2), &cyclic(2)),
        &symmetric(3).expect("symmetric(3) is supported"),
    );
    crate::enumerate::braces_with_additive_group(&add)
        .into_iter()
        .filter(|b| counterexample_audit(b).confirmed())
        .collect()
}
