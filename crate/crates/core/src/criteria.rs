//! Two-sided checks of the character-degree and class-size criteria.
//!
//! Each verdict evaluates an arithmetic condition on `m_G` / `w_G` and,
//! separately, the structural property it is claimed to detect. The
//! arithmetic side only reads the degree and class-size frequencies plus
//! |G|; in particular |G:G'| is taken as the number of linear characters and
//! |Z(G)| as the number of classes of size 1. The structural side only uses
//! the subgroup oracles.
//!
//! Verdict sides by kind:
//! - equivalence: the two sides are the two conditions, which must match;
//! - implication: `invariant_side` carries the hypothesis and
//!   `structure_side` the conclusion;
//! - identity / divisibility: `invariant_side.holds` is the relation itself
//!   and `structure_side` records the structural numbers involved.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Mutex;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arith::{divides, p_part, p_prime_part, pi_part, PrimeSet};
use crate::chardeg::{character_degrees, DegreeFrequency};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::metrics::{class_size_frequency, u_pi, ClassSizeFrequency};
use crate::structure::{
    self, centralizer_of_indices, conjugacy_classes, core_subgroup_op, core_subgroup_op_prime,
    derived_subgroup_of, is_direct_product_p, pi_elements_form_subgroup, q_r_elements_commute,
    sylow_subgroup, Subgroup,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Equivalence,
    Implication,
    Identity,
    Divisibility,
    Inequality,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CriterionId {
    /// Normal abelian Hall π-subgroup iff `u_{π'}(G) = |G|`.
    ItoMichler,
    /// `|G:G'|_p` divides `u_{p'}(G)`.
    IsaacsDivisibility,
    /// `u_{p'}(G)_p = |G:G'|_p` iff normal p-complement.
    IsaacsEquivalence,
    /// `u_p(G)_p = |G:O^p(G)|`.
    CosseyHawkesIdentity,
    /// `u_p(G)_p = |G|_p` iff normal p-complement.
    CosseyHawkesEquivalence,
    /// `|G:K_∞(G)| = prod_p u_p(G)_p`.
    KInfinityProduct,
    /// `u_{p'}(G) = |G|_{p'} |G:G'|_p` iff G is a p-group times a p'-group.
    DirectProductByDegrees,
    /// `u_p(G) = |G|_p |G:G'|_{p'}` iff normal p-complement N with `[N,G] = N'`.
    ComplementCommutatorByDegrees,
    /// The previous condition plus commuting q- and r-elements (q, r != p)
    /// forces a direct product.
    DirectProductCommutingPrimes,
    /// `u_{p'}(G)_p = |G:G'|_p` implies `u_{p'}(G)_{p'} <= |G|_{p'}`.
    DegreePartBound,
    /// `u_p(G)_p = |G|_p` implies `|G:G'|_{p'}` divides `u_p(G)_{p'}`.
    DegreeQuotientDivisibility,
    /// Central Hall π-subgroup iff all class sizes are π'-numbers.
    HuppertCentralHall,
    /// `|Z_∞(G)|_p = |S_p(G)|_p`.
    HypercentreClassIdentity,
    /// `|S_p(G)|_p = |G|_p` iff direct product.
    ClassSylowPartDirectProduct,
    /// `|S_p(G)| = |G|_p |Z(G)|_{p'}` iff direct product.
    ClassSizeDirectProduct,
    /// `|Z(G)|` divides `|S_{p'}(G)|`.
    CentreDividesClassUnion,
    /// `|C_G(O^{p'}(G))|` divides `|S_{p'}(G)|`.
    CentralizerDividesClassUnion,
    /// `|S_{p'}(G)|_p = |Z(G)|_p` iff `Z(P)` is central for a Sylow `P`.
    SylowCentreCentral,
    /// `|S_{p'}(G)| = |G|_{p'} |Z(G)|_p` iff direct product.
    DirectProductByClassSizes,
    /// `|S_{p'}(G)|_p = |Z(G)|_p` implies `|S_{p'}(G)| <= |G|_{p'} |Z(G)|_p`.
    ClassUnionBound,
    /// Hall π times Hall π' implies `u_{π'}(G) = |G|_{π'} |G:G'|_π`.
    HallDirectProductDegrees,
    /// Hall π times Hall π' implies `|S_{π'}(G)| = |G|_{π'} |Z(G)|_π`.
    HallDirectProductClassSizes,
    /// `|G:G'|_π` divides `u_{π'}(G)`.
    AbelianizationDividesDegreeSum,
    /// `|Z(G)|` divides `|S_{π'}(G)|`.
    CentreDividesPiClassUnion,
    /// Experimental: `u_{π'}(G)_π = |G:G'|_π` iff normal π-complement.
    IsaacsPiEquivalence,
    /// Experimental: `|S_{π'}(G)|_π = |Z(G)|_π` iff every Sylow centre for
    /// p in π is central.
    SylowCentreCentralPi,
}

impl CriterionId {
    pub fn kind(self) -> Kind {
        use CriterionId::*;
        match self {
            ItoMichler
            | IsaacsEquivalence
            | CosseyHawkesEquivalence
            | DirectProductByDegrees
            | ComplementCommutatorByDegrees
            | HuppertCentralHall
            | ClassSylowPartDirectProduct
            | ClassSizeDirectProduct
            | SylowCentreCentral
            | DirectProductByClassSizes
            | IsaacsPiEquivalence
            | SylowCentreCentralPi => Kind::Equivalence,
            DirectProductCommutingPrimes
            | DegreePartBound
            | DegreeQuotientDivisibility
            | ClassUnionBound
            | HallDirectProductDegrees
            | HallDirectProductClassSizes => Kind::Implication,
            CosseyHawkesIdentity | KInfinityProduct | HypercentreClassIdentity => Kind::Identity,
            IsaacsDivisibility
            | CentreDividesClassUnion
            | CentralizerDividesClassUnion
            | AbelianizationDividesDegreeSum
            | CentreDividesPiClassUnion => Kind::Divisibility,
        }
    }

    pub fn name(self) -> String {
        serde_json::to_value(self)
            .ok()
            .and_then(|v| v.as_str().map(str::to_string))
            .expect("unit variants serialize to strings")
    }
}

impl fmt::Display for CriterionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parameter {
    Group,
    Prime(u64),
    Primes(PrimeSet),
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parameter::Group => f.write_str("-"),
            Parameter::Prime(p) => write!(f, "p={p}"),
            Parameter::Primes(pi) => write!(f, "pi={pi}"),
        }
    }
}

/// One side of a verdict: its truth value and the numbers behind it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Side {
    pub holds: bool,
    pub values: Vec<(&'static str, BigUint)>,
}

impl Side {
    fn new(holds: bool) -> Self {
        Side {
            holds,
            values: Vec::new(),
        }
    }

    fn with(mut self, name: &'static str, value: impl Into<BigUint>) -> Self {
        self.values.push((name, value.into()));
        self
    }

    pub fn value(&self, name: &str) -> Option<&BigUint> {
        self.values.iter().find(|(n, _)| *n == name).map(|(_, v)| v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionVerdict {
    pub criterion: CriterionId,
    pub group: String,
    pub parameter: Parameter,
    pub kind: Kind,
    pub invariant_side: Side,
    pub structure_side: Side,
    pub agrees: bool,
    pub experimental: bool,
}

impl CriterionVerdict {
    fn new(
        ctx: &GroupContext<'_>,
        criterion: CriterionId,
        parameter: Parameter,
        invariant_side: Side,
        structure_side: Side,
    ) -> Self {
        let kind = criterion.kind();
        let agrees = match kind {
            Kind::Equivalence => invariant_side.holds == structure_side.holds,
            Kind::Implication => !invariant_side.holds || structure_side.holds,
            Kind::Identity | Kind::Divisibility | Kind::Inequality => invariant_side.holds,
        };
        CriterionVerdict {
            criterion,
            group: ctx.name.clone(),
            parameter,
            kind,
            invariant_side,
            structure_side,
            agrees,
            experimental: false,
        }
    }

    fn experimental(mut self, flag: bool) -> Self {
        self.experimental = flag;
        self
    }

    /// Both sides true (for equivalences: the positive case is witnessed).
    pub fn both_true(&self) -> bool {
        self.invariant_side.holds && self.structure_side.holds
    }

    pub fn both_false(&self) -> bool {
        !self.invariant_side.holds && !self.structure_side.holds
    }
}

/// Everything the checks need about one group, computed once.
pub struct GroupContext<'g> {
    name: String,
    group: &'g Group,
    order: BigUint,
    primes: PrimeSet,
    degrees: DegreeFrequency,
    class_sizes: ClassSizeFrequency,
    derived: Subgroup,
    centre: Subgroup,
    hypercentre: Subgroup,
    lower_central_last: Subgroup,
    halls: Mutex<BTreeMap<PrimeSet, Option<Subgroup>>>,
}

impl<'g> GroupContext<'g> {
    pub fn new(name: impl Into<String>, group: &'g Group) -> Result<Self> {
        let n = group.size()?;
        let classes = conjugacy_classes(group)?;
        Ok(GroupContext {
            name: name.into(),
            group,
            order: BigUint::from(n),
            primes: PrimeSet::of(&n)?,
            degrees: character_degrees(group)?,
            class_sizes: class_size_frequency(&classes),
            derived: structure::derived_subgroup(group)?,
            centre: structure::centre(group)?,
            hypercentre: structure::hypercentre(group)?,
            lower_central_last: structure::lower_central_last(group)?,
            halls: Mutex::new(BTreeMap::new()),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn group(&self) -> &Group {
        self.group
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn primes(&self) -> &PrimeSet {
        &self.primes
    }

    pub fn degrees(&self) -> &DegreeFrequency {
        &self.degrees
    }

    pub fn class_sizes(&self) -> &ClassSizeFrequency {
        &self.class_sizes
    }

    pub fn u(&self, pi: &PrimeSet) -> BigUint {
        u_pi(&self.degrees, pi)
    }

    pub fn s(&self, pi: &PrimeSet) -> BigUint {
        self.class_sizes.s_pi(pi)
    }

    /// Complement of π within the primes of |G|.
    pub fn complement(&self, pi: &PrimeSet) -> PrimeSet {
        pi.complement_in(&self.primes)
    }

    /// |G:G'| read from the degrees.
    fn abelianization_from_degrees(&self) -> BigUint {
        BigUint::from(self.degrees.linear_count())
    }

    /// |Z(G)| read from the class sizes.
    fn centre_from_class_sizes(&self) -> BigUint {
        BigUint::from(self.class_sizes.central_count())
    }

    fn hall(&self, pi: &PrimeSet) -> Result<Option<Subgroup>> {
        if let Some(h) = self.halls.lock().unwrap().get(pi) {
            return Ok(h.clone());
        }
        let h = pi_elements_form_subgroup(self.group, pi)?;
        self.halls.lock().unwrap().insert(pi.clone(), h.clone());
        Ok(h)
    }

    fn normal_complement(&self, p: u64) -> Result<Option<Subgroup>> {
        self.hall(&self.complement(&PrimeSet::singleton(p)?))
    }

    fn direct_product(&self, p: u64) -> Result<bool> {
        Ok(is_direct_product_p(self.group, p)?.0)
    }

    fn require_prime(&self, p: u64) -> Result<()> {
        if !self.primes.contains(p) {
            return Err(Error::ParameterOutOfRange(format!("p={p}")));
        }
        Ok(())
    }

    fn require_subset(&self, pi: &PrimeSet) -> Result<()> {
        if !pi.is_subset(&self.primes) {
            return Err(Error::ParameterOutOfRange(format!("pi={pi}")));
        }
        Ok(())
    }
}

fn pp(n: &BigUint, p: u64) -> BigUint {
    p_part(n, p).expect("positive")
}

fn pq(n: &BigUint, p: u64) -> BigUint {
    p_prime_part(n, p).expect("positive")
}

fn part(n: &BigUint, pi: &PrimeSet) -> BigUint {
    pi_part(n, pi).expect("positive")
}

fn order_of(s: &Option<Subgroup>) -> BigUint {
    BigUint::from(s.as_ref().map_or(0, Subgroup::order))
}

pub fn check_ito_michler(ctx: &GroupContext<'_>, pi: &PrimeSet) -> Result<CriterionVerdict> {
    ctx.require_subset(pi)?;
    let u = ctx.u(&ctx.complement(pi));
    let inv = Side::new(u == ctx.order)
        .with("u_pi'", u)
        .with("|G|", ctx.order.clone());
    let hall = ctx.hall(pi)?;
    let abelian = hall.as_ref().is_some_and(|h| h.is_abelian(ctx.group));
    let st = Side::new(abelian).with("|hall|", order_of(&hall));
    Ok(CriterionVerdict::new(
        ctx,
        CriterionId::ItoMichler,
        Parameter::Primes(pi.clone()),
        inv,
        st,
    ))
}

pub fn check_isaacs(ctx: &GroupContext<'_>, p: u64) -> Result<Vec<CriterionVerdict>> {
    ctx.require_prime(p)?;
    let single = PrimeSet::singleton(p)?;
    let u = ctx.u(&ctx.complement(&single));
    let ab_p = pp(&ctx.abelianization_from_degrees(), p);
    let complement = ctx.normal_complement(p)?;

    let div = CriterionVerdict::new(
        ctx,
        CriterionId::IsaacsDivisibility,
        Parameter::Prime(p),
        Side::new(divides(&ab_p, &u))
            .with("|G:G'|_p", ab_p.clone())
            .with("u_p'", u.clone()),
        Side::new(true),
    );
    let up = pp(&u, p);
    let eq = CriterionVerdict::new(
        ctx,
        CriterionId::IsaacsEquivalence,
        Parameter::Prime(p),
        Side::new(up == ab_p)
            .with("u_p'(G)_p", up)
            .with("|G:G'|_p", ab_p),
        Side::new(complement.is_some()).with("|complement|", order_of(&complement)),
    );
    Ok(vec![div, eq])
}

pub fn check_cossey_hawkes(ctx: &GroupContext<'_>, p: u64) -> Result<Vec<CriterionVerdict>> {
    ctx.require_prime(p)?;
    let single = PrimeSet::singleton(p)?;
    let up = pp(&ctx.u(&single), p);
    let op = core_subgroup_op(ctx.group, p)?;
    let index = &ctx.order / op.order_big();
    let identity = CriterionVerdict::new(
        ctx,
        CriterionId::CosseyHawkesIdentity,
        Parameter::Prime(p),
        Side::new(up == index).with("u_p(G)_p", up.clone()),
        Side::new(true).with("|G:O^p(G)|", index),
    );
    let g_p = pp(&ctx.order, p);
    let complement = ctx.normal_complement(p)?;
    let eq = CriterionVerdict::new(
        ctx,
        CriterionId::CosseyHawkesEquivalence,
        Parameter::Prime(p),
        Side::new(up == g_p).with("u_p(G)_p", up).with("|G|_p", g_p),
        Side::new(complement.is_some()).with("|complement|", order_of(&complement)),
    );
    Ok(vec![identity, eq])
}

pub fn check_k_infty_product(ctx: &GroupContext<'_>) -> Result<CriterionVerdict> {
    let product = ctx
        .primes
        .iter()
        .map(|&p| Ok(pp(&ctx.u(&PrimeSet::singleton(p)?), p)))
        .product::<Result<BigUint>>()?;
    let index = &ctx.order / ctx.lower_central_last.order_big();
    Ok(CriterionVerdict::new(
        ctx,
        CriterionId::KInfinityProduct,
        Parameter::Group,
        Side::new(product == index).with("prod u_p(G)_p", product),
        Side::new(true).with("|G:K_inf(G)|", index),
    ))
}

pub fn check_direct_product_by_degrees(ctx: &GroupContext<'_>, p: u64) -> Result<CriterionVerdict> {
    ctx.require_prime(p)?;
    let u = ctx.u(&ctx.complement(&PrimeSet::singleton(p)?));
    let target = pq(&ctx.order, p) * pp(&ctx.abelianization_from_degrees(), p);
    let direct = ctx.direct_product(p)?;
    Ok(CriterionVerdict::new(
        ctx,
        CriterionId::DirectProductByDegrees,
        Parameter::Prime(p),
        Side::new(u == target)
            .with("u_p'", u)
            .with("|G|_p' |G:G'|_p", target),
        Side::new(direct),
    ))
}

/// `(u_p(G) = |G|_p |G:G'|_{p'}, u_p(G), target)`
fn complement_commutator_condition(
    ctx: &GroupContext<'_>,
    p: u64,
) -> Result<(bool, BigUint, BigUint)> {
    let u = ctx.u(&PrimeSet::singleton(p)?);
    let target = pp(&ctx.order, p) * pq(&ctx.abelianization_from_degrees(), p);
    Ok((u == target, u, target))
}

pub fn check_complement_commutator(ctx: &GroupContext<'_>, p: u64) -> Result<CriterionVerdict> {
    ctx.require_prime(p)?;
    let (holds, u, target) = complement_commutator_condition(ctx, p)?;
    let complement = ctx.normal_complement(p)?;
    let st = match &complement {
        Some(n) => {
            let bracket = structure::commutator_subgroup_of(n, ctx.group)?;
            let derived = derived_subgroup_of(ctx.group, n)?;
            Side::new(bracket == derived)
                .with("|N|", n.order_big())
                .with("|[N,G]|", bracket.order_big())
                .with("|N'|", derived.order_big())
        }
        None => Side::new(false).with("|N|", 0u32),
    };
    Ok(CriterionVerdict::new(
        ctx,
        CriterionId::ComplementCommutatorByDegrees,
        Parameter::Prime(p),
        Side::new(holds)
            .with("u_p", u)
            .with("|G|_p |G:G'|_p'", target),
        st,
    ))
}

pub fn check_commuting_primes(ctx: &GroupContext<'_>, p: u64) -> Result<CriterionVerdict> {
    ctx.require_prime(p)?;
    let (degree_condition, u, target) = complement_commutator_condition(ctx, p)?;
    let commute = q_r_elements_commute(ctx.group, p)?;
    let direct = ctx.direct_product(p)?;
    Ok(CriterionVerdict::new(
        ctx,
        CriterionId::DirectProductCommutingPrimes,
        Parameter::Prime(p),
        Side::new(degree_condition && commute)
            .with("u_p", u)
            .with("|G|_p |G:G'|_p'", target)
            .with("q_r_commute", u32::from(commute)),
        Side::new(direct),
    ))
}

pub fn check_degree_part_bounds(ctx: &GroupContext<'_>, p: u64) -> Result<Vec<CriterionVerdict>> {
    ctx.require_prime(p)?;
    let single = PrimeSet::singleton(p)?;
    let ab = ctx.abelianization_from_degrees();
    let u_q = ctx.u(&ctx.complement(&single));
    let bound = CriterionVerdict::new(
        ctx,
        CriterionId::DegreePartBound,
        Parameter::Prime(p),
        Side::new(pp(&u_q, p) == pp(&ab, p))
            .with("u_p'(G)_p", pp(&u_q, p))
            .with("|G:G'|_p", pp(&ab, p)),
        Side::new(pq(&u_q, p) <= pq(&ctx.order, p))
            .with("u_p'(G)_p'", pq(&u_q, p))
            .with("|G|_p'", pq(&ctx.order, p)),
    );
    let u_p = ctx.u(&single);
    let quotient = CriterionVerdict::new(
        ctx,
        CriterionId::DegreeQuotientDivisibility,
        Parameter::Prime(p),
        Side::new(pp(&u_p, p) == pp(&ctx.order, p))
            .with("u_p(G)_p", pp(&u_p, p))
            .with("|G|_p", pp(&ctx.order, p)),
        Side::new(divides(&pq(&ab, p), &pq(&u_p, p)))
            .with("|G:G'|_p'", pq(&ab, p))
            .with("u_p(G)_p'", pq(&u_p, p)),
    );
    Ok(vec![bound, quotient])
}

pub fn check_huppert(ctx: &GroupContext<'_>, pi: &PrimeSet) -> Result<CriterionVerdict> {
    ctx.require_subset(pi)?;
    let s = ctx.s(&ctx.complement(pi));
    let central = structure::has_central_hall(ctx.group, pi)?;
    Ok(CriterionVerdict::new(
        ctx,
        CriterionId::HuppertCentralHall,
        Parameter::Primes(pi.clone()),
        Side::new(s == ctx.order)
            .with("|S_pi'|", s)
            .with("|G|", ctx.order.clone()),
        Side::new(central).with("|hall|", order_of(&ctx.hall(pi)?)),
    )
    .experimental(pi.len() != 1))
}

pub fn check_chm(ctx: &GroupContext<'_>, p: u64) -> Result<Vec<CriterionVerdict>> {
    ctx.require_prime(p)?;
    let s = ctx.s(&PrimeSet::singleton(p)?);
    let s_p = pp(&s, p);
    let z_inf = pp(&ctx.hypercentre.order_big(), p);
    let identity = CriterionVerdict::new(
        ctx,
        CriterionId::HypercentreClassIdentity,
        Parameter::Prime(p),
        Side::new(s_p == z_inf).with("|S_p|_p", s_p.clone()),
        Side::new(true).with("|Z_inf|_p", z_inf),
    );
    let direct = ctx.direct_product(p)?;
    let g_p = pp(&ctx.order, p);
    let sylow_form = CriterionVerdict::new(
        ctx,
        CriterionId::ClassSylowPartDirectProduct,
        Parameter::Prime(p),
        Side::new(s_p == g_p)
            .with("|S_p|_p", s_p)
            .with("|G|_p", g_p.clone()),
        Side::new(direct),
    );
    let target = g_p * pq(&ctx.centre_from_class_sizes(), p);
    let size_form = CriterionVerdict::new(
        ctx,
        CriterionId::ClassSizeDirectProduct,
        Parameter::Prime(p),
        Side::new(s == target)
            .with("|S_p|", s)
            .with("|G|_p |Z|_p'", target),
        Side::new(direct),
    );
    Ok(vec![identity, sylow_form, size_form])
}

/// `Z(P)` is contained in `Z(G)`.
fn sylow_centre_is_central(ctx: &GroupContext<'_>, p: u64) -> Result<(bool, Subgroup)> {
    let sylow = sylow_subgroup(ctx.group, p)?;
    let centre_of_sylow: Vec<usize> = sylow
        .members()
        .iter()
        .copied()
        .filter(|&x| {
            sylow
                .generators()
                .iter()
                .all(|&y| ctx.group.mul(x, y) == ctx.group.mul(y, x))
        })
        .collect();
    let zp = structure::generate(ctx.group, &centre_of_sylow)?;
    Ok((zp.is_subset(&ctx.centre), zp))
}

pub fn check_class_union_divisors(ctx: &GroupContext<'_>, p: u64) -> Result<Vec<CriterionVerdict>> {
    ctx.require_prime(p)?;
    let s = ctx.s(&ctx.complement(&PrimeSet::singleton(p)?));
    let z = ctx.centre.order_big();
    let centre_div = CriterionVerdict::new(
        ctx,
        CriterionId::CentreDividesClassUnion,
        Parameter::Prime(p),
        Side::new(divides(&z, &s)).with("|S_p'|", s.clone()),
        Side::new(true).with("|Z(G)|", z),
    );
    let opp = core_subgroup_op_prime(ctx.group, p)?;
    let cent = centralizer_of_indices(ctx.group, opp.generators())?;
    let cent_div = CriterionVerdict::new(
        ctx,
        CriterionId::CentralizerDividesClassUnion,
        Parameter::Prime(p),
        Side::new(divides(&cent.order_big(), &s)).with("|S_p'|", s.clone()),
        Side::new(true)
            .with("|C_G(O^p'(G))|", cent.order_big())
            .with("|O^p'(G)|", opp.order_big()),
    );
    let z_from_classes = ctx.centre_from_class_sizes();
    let (central, zp) = sylow_centre_is_central(ctx, p)?;
    let sylow_centre = CriterionVerdict::new(
        ctx,
        CriterionId::SylowCentreCentral,
        Parameter::Prime(p),
        Side::new(pp(&s, p) == pp(&z_from_classes, p))
            .with("|S_p'|_p", pp(&s, p))
            .with("|Z|_p", pp(&z_from_classes, p)),
        Side::new(central).with("|Z(P)|", zp.order_big()),
    );
    Ok(vec![centre_div, cent_div, sylow_centre])
}

pub fn check_direct_product_by_class_sizes(
    ctx: &GroupContext<'_>,
    p: u64,
) -> Result<CriterionVerdict> {
    ctx.require_prime(p)?;
    let s = ctx.s(&ctx.complement(&PrimeSet::singleton(p)?));
    let target = pq(&ctx.order, p) * pp(&ctx.centre_from_class_sizes(), p);
    let direct = ctx.direct_product(p)?;
    Ok(CriterionVerdict::new(
        ctx,
        CriterionId::DirectProductByClassSizes,
        Parameter::Prime(p),
        Side::new(s == target)
            .with("|S_p'|", s)
            .with("|G|_p' |Z|_p", target),
        Side::new(direct),
    ))
}

pub fn check_class_union_bound(ctx: &GroupContext<'_>, p: u64) -> Result<CriterionVerdict> {
    ctx.require_prime(p)?;
    let s = ctx.s(&ctx.complement(&PrimeSet::singleton(p)?));
    let z = ctx.centre_from_class_sizes();
    let bound = pq(&ctx.order, p) * pp(&z, p);
    Ok(CriterionVerdict::new(
        ctx,
        CriterionId::ClassUnionBound,
        Parameter::Prime(p),
        Side::new(pp(&s, p) == pp(&z, p))
            .with("|S_p'|_p", pp(&s, p))
            .with("|Z|_p", pp(&z, p)),
        Side::new(s <= bound)
            .with("|S_p'|", s)
            .with("|G|_p' |Z|_p", bound),
    ))
}

pub fn check_pi_necessity(ctx: &GroupContext<'_>, pi: &PrimeSet) -> Result<Vec<CriterionVerdict>> {
    ctx.require_subset(pi)?;
    let rest = ctx.complement(pi);
    let hall = ctx.hall(pi)?;
    let hall_complement = ctx.hall(&rest)?;
    let hypothesis = || {
        Side::new(hall.is_some() && hall_complement.is_some())
            .with("|hall_pi|", order_of(&hall))
            .with("|hall_pi'|", order_of(&hall_complement))
    };
    let u = ctx.u(&rest);
    let u_target = part(&ctx.order, &rest) * part(&ctx.abelianization_from_degrees(), pi);
    let degrees = CriterionVerdict::new(
        ctx,
        CriterionId::HallDirectProductDegrees,
        Parameter::Primes(pi.clone()),
        hypothesis(),
        Side::new(u == u_target)
            .with("u_pi'", u)
            .with("|G|_pi' |G:G'|_pi", u_target),
    );
    let s = ctx.s(&rest);
    let s_target = part(&ctx.order, &rest) * part(&ctx.centre_from_class_sizes(), pi);
    let sizes = CriterionVerdict::new(
        ctx,
        CriterionId::HallDirectProductClassSizes,
        Parameter::Primes(pi.clone()),
        hypothesis(),
        Side::new(s == s_target)
            .with("|S_pi'|", s)
            .with("|G|_pi' |Z|_pi", s_target),
    );
    Ok(vec![degrees, sizes])
}

pub fn check_pi_divisibility(
    ctx: &GroupContext<'_>,
    pi: &PrimeSet,
) -> Result<Vec<CriterionVerdict>> {
    ctx.require_subset(pi)?;
    let rest = ctx.complement(pi);
    let ab_pi = part(&ctx.abelianization_from_degrees(), pi);
    let u = ctx.u(&rest);
    let degrees = CriterionVerdict::new(
        ctx,
        CriterionId::AbelianizationDividesDegreeSum,
        Parameter::Primes(pi.clone()),
        Side::new(divides(&ab_pi, &u))
            .with("|G:G'|_pi", ab_pi)
            .with("u_pi'", u),
        Side::new(true),
    );
    let s = ctx.s(&rest);
    let z = ctx.centre.order_big();
    let sizes = CriterionVerdict::new(
        ctx,
        CriterionId::CentreDividesPiClassUnion,
        Parameter::Primes(pi.clone()),
        Side::new(divides(&z, &s)).with("|S_pi'|", s),
        Side::new(true).with("|Z(G)|", z),
    );
    Ok(vec![degrees, sizes])
}

/// π-versions of the Isaacs equivalence and the Sylow-centre criterion. No
/// proof backs these; disagreements are reported, not fatal.
pub fn check_pi_experiments(
    ctx: &GroupContext<'_>,
    pi: &PrimeSet,
) -> Result<Vec<CriterionVerdict>> {
    ctx.require_subset(pi)?;
    let rest = ctx.complement(pi);
    let u = ctx.u(&rest);
    let ab_pi = part(&ctx.abelianization_from_degrees(), pi);
    let complement = ctx.hall(&rest)?;
    let isaacs = CriterionVerdict::new(
        ctx,
        CriterionId::IsaacsPiEquivalence,
        Parameter::Primes(pi.clone()),
        Side::new(part(&u, pi) == ab_pi)
            .with("u_pi'(G)_pi", part(&u, pi))
            .with("|G:G'|_pi", ab_pi),
        Side::new(complement.is_some()).with("|complement|", order_of(&complement)),
    )
    .experimental(true);

    let s = ctx.s(&rest);
    let z = ctx.centre_from_class_sizes();
    let mut all_central = true;
    for &p in pi.iter() {
        all_central &= sylow_centre_is_central(ctx, p)?.0;
    }
    let sylow = CriterionVerdict::new(
        ctx,
        CriterionId::SylowCentreCentralPi,
        Parameter::Primes(pi.clone()),
        Side::new(part(&s, pi) == part(&z, pi))
            .with("|S_pi'|_pi", part(&s, pi))
            .with("|Z|_pi", part(&z, pi)),
        Side::new(all_central),
    )
    .experimental(true);
    Ok(vec![isaacs, sylow])
}

/// Every criterion at every prime of |G| and every prime set of size at most
/// `pi_bound`, in a fixed order: group-level first, then per prime, then per
/// prime set.
pub fn run_all_criteria(ctx: &GroupContext<'_>, pi_bound: usize) -> Result<Vec<CriterionVerdict>> {
    let mut out = vec![check_k_infty_product(ctx)?];
    for &p in ctx.primes.iter() {
        out.extend(check_isaacs(ctx, p)?);
        out.extend(check_cossey_hawkes(ctx, p)?);
        out.push(check_direct_product_by_degrees(ctx, p)?);
        out.push(check_complement_commutator(ctx, p)?);
        out.push(check_commuting_primes(ctx, p)?);
        out.extend(check_degree_part_bounds(ctx, p)?);
        out.extend(check_chm(ctx, p)?);
        out.extend(check_class_union_divisors(ctx, p)?);
        out.push(check_direct_product_by_class_sizes(ctx, p)?);
        out.push(check_class_union_bound(ctx, p)?);
    }
    for pi in ctx.primes.subsets_up_to(pi_bound) {
        out.push(check_ito_michler(ctx, &pi)?);
        out.push(check_huppert(ctx, &pi)?);
        out.extend(check_pi_necessity(ctx, &pi)?);
        out.extend(check_pi_divisibility(ctx, &pi)?);
        if pi.len() >= 2 {
            out.extend(check_pi_experiments(ctx, &pi)?);
        }
    }
    Ok(out)
}

/// Cached subgroups.
impl GroupContext<'_> {
    pub fn derived(&self) -> &Subgroup {
        &self.derived
    }

    pub fn centre(&self) -> &Subgroup {
        &self.centre
    }

    pub fn hypercentre(&self) -> &Subgroup {
        &self.hypercentre
    }

    pub fn lower_central_last(&self) -> &Subgroup {
        &self.lower_central_last
    }

    pub fn is_trivial(&self) -> bool {
        self.order.is_one()
    }
}
