//! The claim registry. Each entry names its bound variables, the domain
//! they range over, and a check for one instantiation.
//!
//! Notation in statements: `cl` is z-closure, `rad` the radical, `zrad` the
//! z-radical, `Z` the family of z-ideals (including `S`), `Spec_z` the
//! z-primes and `J` the Jacobson radical.

use std::iter;

use crate::elemset::ElemSet;
use crate::ideal::{
    colon, generated_ideal, ideal_power, ideal_product, ideal_sum, is_multiplicatively_closed,
    mult_closure, radical,
};

use super::{
    ClaimClass, ClaimSpec, Domain, HarnessError, Hypothesis, Kind, Param, Subject, Value,
};

use ClaimClass::{Assert, Survey};

const fn param(name: &'static str, kind: Kind) -> Param {
    Param { name, kind }
}

const NONE: &[Param] = &[];
const A: &[Param] = &[param("a", Kind::Ideal)];
const AB: &[Param] = &[param("a", Kind::Ideal), param("b", Kind::Ideal)];
const P: &[Param] = &[param("p", Kind::Ideal)];
const FAMILY: &[Param] = &[param("family", Kind::Family)];

/// Largest order for which the stable-subset scan runs.
const AVOIDANCE_MAX_ORDER: usize = 8;

// Domains.

fn unit(_: &Subject) -> Domain<'_> {
    Box::new(iter::once(Vec::new()))
}

fn singles<'a>(xs: Vec<ElemSet>) -> Domain<'a> {
    Box::new(xs.into_iter().map(|a| vec![Value::Ideal(a)]))
}

fn pairs<'a>(xs: Vec<ElemSet>, ys: Vec<ElemSet>) -> Domain<'a> {
    Box::new(
        xs.into_iter()
            .flat_map(move |a| ys.clone().into_iter().map(move |b| vec![Value::Ideal(a), Value::Ideal(b)])),
    )
}

fn all_ideals(s: &Subject) -> Vec<ElemSet> {
    s.lattice().ideals().to_vec()
}

fn z_ideals(s: &Subject) -> Vec<ElemSet> {
    s.ctx().z_ideals().to_vec()
}

fn proper_z(s: &Subject) -> Vec<ElemSet> {
    let whole = s.lattice().whole();
    s.ctx().z_ideals().iter().copied().filter(|&a| a != whole).collect()
}

fn each_ideal(s: &Subject) -> Domain<'_> {
    singles(all_ideals(s))
}

fn each_proper_ideal(s: &Subject) -> Domain<'_> {
    let whole = s.lattice().whole();
    singles(all_ideals(s).into_iter().filter(|&a| a != whole).collect())
}

fn each_z(s: &Subject) -> Domain<'_> {
    singles(z_ideals(s))
}

fn each_proper_z(s: &Subject) -> Domain<'_> {
    singles(proper_z(s))
}

fn each_maximal(s: &Subject) -> Domain<'_> {
    singles(s.lattice().maximal_ideals())
}

fn each_minimal_prime(s: &Subject) -> Domain<'_> {
    singles(s.lattice().minimal_primes())
}

fn ideal_pairs(s: &Subject) -> Domain<'_> {
    pairs(all_ideals(s), all_ideals(s))
}

fn z_pairs(s: &Subject) -> Domain<'_> {
    pairs(z_ideals(s), z_ideals(s))
}

fn z_ideal_pairs(s: &Subject) -> Domain<'_> {
    pairs(z_ideals(s), all_ideals(s))
}

/// Nonempty subfamilies of size at most 3, then the whole family.
fn subfamilies(xs: &[ElemSet]) -> Vec<Vec<ElemSet>> {
    let n = xs.len();
    let mut out = Vec::new();
    for i in 0..n {
        out.push(vec![xs[i]]);
        for j in i + 1..n {
            out.push(vec![xs[i], xs[j]]);
            for k in j + 1..n {
                out.push(vec![xs[i], xs[j], xs[k]]);
            }
        }
    }
    if n > 3 {
        out.push(xs.to_vec());
    }
    out
}

fn z_subfamilies(s: &Subject) -> Domain<'_> {
    Box::new(
        subfamilies(s.ctx().z_ideals())
            .into_iter()
            .map(|f| vec![Value::Family(f)]),
    )
}

// Shared helpers.

fn meet(s: &Subject, family: impl IntoIterator<Item = ElemSet>) -> ElemSet {
    family.into_iter().fold(s.lattice().whole(), |acc, a| acc & a)
}

fn cl(s: &Subject, a: ElemSet) -> ElemSet {
    s.ctx().z_closure(a)
}

fn rad(s: &Subject, a: ElemSet) -> ElemSet {
    radical(s.table(), a)
}

fn mul(s: &Subject, a: ElemSet, b: ElemSet) -> ElemSet {
    ideal_product(s.table(), a, b)
}

fn add(s: &Subject, a: ElemSet, b: ElemSet) -> ElemSet {
    ideal_sum(s.table(), a, b)
}

fn is_z(s: &Subject, a: ElemSet) -> bool {
    s.ctx().is_z_ideal(a)
}

fn z_products_closed(s: &Subject) -> bool {
    let zs = s.ctx().z_ideals();
    zs.iter().all(|&a| zs.iter().all(|&b| is_z(s, mul(s, a, b))))
}

fn is_chain(family: &[ElemSet]) -> bool {
    family
        .iter()
        .all(|&a| family.iter().all(|&b| a.is_subset(b) || b.is_subset(a)))
}

// Checks.

fn psi(s: &Subject, v: &[Value]) -> bool {
    let (a, b) = (v[0].set(), v[1].set());
    mul(s, a, b).is_subset(a & b)
}

fn radical_representation(s: &Subject, v: &[Value]) -> bool {
    let a = v[0].set();
    let primes = s.lattice().prime_ideals();
    rad(s, a) == meet(s, primes.into_iter().filter(|p| a.is_subset(*p)))
}

fn epzi_1(s: &Subject, v: &[Value]) -> bool {
    is_z(s, meet(s, v[0].family().iter().copied()))
}

fn epzi_2(s: &Subject, _: &[Value]) -> bool {
    is_z(s, s.lattice().jacobson_radical())
}

fn epzi_3(s: &Subject, v: &[Value]) -> bool {
    let a = v[0].set();
    match s.lattice().maximal_ideals().as_slice() {
        [m] if a != *m && a.is_subset(*m) => !is_z(s, a),
        _ => true,
    }
}

/// The element criterion with `M_x = M_y`, and its relaxation with
/// `M_x ⊇ M_y`, both agree with the definition.
fn ald(s: &Subject, v: &[Value]) -> bool {
    let a = v[0].set();
    let ctx = s.ctx();
    let t = s.table();
    let m: Vec<Vec<ElemSet>> = t.elements().map(|x| ctx.maximal_ideals_containing(x)).collect();
    let by_equality = a.iter().all(|y| t.elements().all(|x| a.contains(x) || m[x] != m[y]));
    let z = is_z(s, a);
    z == by_equality && z == ctx.is_z_ideal_via_ma(a)
}

fn exm_1(s: &Subject, v: &[Value]) -> bool {
    is_z(s, v[0].set())
}

fn exm_3(s: &Subject, _: &[Value]) -> bool {
    !s.lattice().is_semisimple() || is_z(s, ElemSet::singleton(0))
}

fn exm_4(s: &Subject, v: &[Value]) -> bool {
    is_z(s, v[0].set())
}

fn each_disjoint_mc(s: &Subject) -> Domain<'_> {
    Box::new(s.lattice().ideals().iter().flat_map(move |&a| {
        s.multiplicatively_closed_sets()
            .iter()
            .filter(move |t| a.is_disjoint(**t))
            .map(move |&t| vec![Value::Ideal(a), Value::Subset(t)])
    }))
}

fn mds(s: &Subject, v: &[Value]) -> bool {
    let (a, t) = (v[0].set(), v[1].set());
    let l = s.lattice();
    if !a.is_disjoint(t) || !is_multiplicatively_closed(s.table(), t) {
        return true;
    }
    let candidates: Vec<ElemSet> = l
        .ideals()
        .iter()
        .copied()
        .filter(|&b| a.is_subset(b) && b.is_disjoint(t))
        .collect();
    let maximal: Vec<ElemSet> = candidates
        .iter()
        .copied()
        .filter(|&b| !candidates.iter().any(|&c| c != b && b.is_subset(c)))
        .collect();
    !maximal.is_empty() && maximal.iter().all(|&b| l.is_prime(b))
}

fn each_z_and_minimal_prime(s: &Subject) -> Domain<'_> {
    Box::new(s.ctx().z_ideals().iter().flat_map(move |&a| {
        s.lattice()
            .minimal_primes_over(a)
            .into_iter()
            .map(move |p| vec![Value::Ideal(a), Value::Ideal(p)])
    }))
}

fn mpz(s: &Subject, v: &[Value]) -> bool {
    let (a, p) = (v[0].set(), v[1].set());
    !is_z(s, a) || !s.lattice().minimal_primes_over(a).contains(&p) || is_z(s, p)
}

fn prdz_forward(s: &Subject, _: &[Value]) -> bool {
    !z_products_closed(s) || s.ctx().is_bzi()
}

fn prdz_converse(s: &Subject, v: &[Value]) -> bool {
    !s.ctx().is_bzi() || is_z(s, mul(s, v[0].set(), v[1].set()))
}

fn icj(s: &Subject, v: &[Value]) -> bool {
    let (a, b) = (v[0].set(), v[1].set());
    !is_z(s, a) || is_z(s, colon(s.table(), a, b))
}

const ICJ_COR: &[Param] = &[
    param("a", Kind::Ideal),
    param("a2", Kind::Ideal),
    param("b", Kind::Ideal),
    param("c", Kind::Ideal),
];

fn each_icj_cor(s: &Subject) -> Domain<'_> {
    let zs = z_ideals(s);
    let ids = all_ideals(s);
    Box::new(zs.clone().into_iter().flat_map(move |a| {
        let ids = ids.clone();
        zs.clone().into_iter().flat_map(move |a2| {
            let ids2 = ids.clone();
            ids.clone().into_iter().flat_map(move |b| {
                ids2.clone().into_iter().map(move |c| {
                    vec![Value::Ideal(a), Value::Ideal(a2), Value::Ideal(b), Value::Ideal(c)]
                })
            })
        })
    }))
}

/// The eight colon forms, with the families `{a, a2}` and `{b, c}`.
fn icj_cor(s: &Subject, v: &[Value]) -> bool {
    let (a, a2, b, c) = (v[0].set(), v[1].set(), v[2].set(), v[3].set());
    if !is_z(s, a) || !is_z(s, a2) {
        return true;
    }
    let t = s.table();
    let q = |x, y| colon(t, x, y);
    [
        q(a, b),
        q(q(a, b), c),
        q(a, mul(s, b, c)),
        q(q(a, c), b),
        q(a & a2, b),
        q(a, b) & q(a2, b),
        q(a, add(s, b, c)),
        q(a, b) & q(a, c),
    ]
    .into_iter()
    .all(|x| is_z(s, x))
}

fn lclk_1(s: &Subject, v: &[Value]) -> bool {
    let a = v[0].set();
    let k = cl(s, a);
    is_z(s, k)
        && a.is_subset(k)
        && s.ctx()
            .z_ideals()
            .iter()
            .all(|&z| !a.is_subset(z) || k.is_subset(z))
}

fn lclk_2(s: &Subject, _: &[Value]) -> bool {
    let whole = s.lattice().whole();
    cl(s, whole) == whole
}

fn lclk_3(s: &Subject, _: &[Value]) -> bool {
    let zero = ElemSet::singleton(0);
    !s.lattice().is_semisimple() || cl(s, zero) == zero
}

fn lclk_4(s: &Subject, v: &[Value]) -> bool {
    let k = cl(s, v[0].set());
    cl(s, k) == k
}

fn lclk_5(s: &Subject, v: &[Value]) -> bool {
    let (a, b) = (v[0].set(), v[1].set());
    !a.is_subset(b) || cl(s, a).is_subset(cl(s, b))
}

fn lclk_6(s: &Subject, v: &[Value]) -> bool {
    let (a, b) = (v[0].set(), v[1].set());
    (cl(s, a) | cl(s, b)).is_subset(cl(s, generated_ideal(s.table(), a | b)))
}

fn lclk_7(s: &Subject, v: &[Value]) -> bool {
    let (a, b) = (v[0].set(), v[1].set());
    cl(s, add(s, a, b)) == cl(s, add(s, cl(s, a), cl(s, b)))
}

fn lclk_8(s: &Subject, v: &[Value]) -> bool {
    let a = v[0].set();
    is_z(s, a) == (a == cl(s, a))
}

fn lclk_9(s: &Subject, v: &[Value]) -> bool {
    let a = v[0].set();
    rad(s, a).is_subset(cl(s, a))
}

fn lclk_10(s: &Subject, v: &[Value]) -> bool {
    let a = v[0].set();
    cl(s, rad(s, a)) == cl(s, a)
}

fn lclk_11(s: &Subject, v: &[Value]) -> bool {
    let a = v[0].set();
    !is_z(s, a) || cl(s, rad(s, a)) == a
}

fn lclk_12(s: &Subject, v: &[Value]) -> bool {
    let a = v[0].set();
    rad(s, cl(s, a)) == cl(s, rad(s, a))
}

fn lclk_13(s: &Subject, v: &[Value]) -> bool {
    let (a, b) = (v[0].set(), v[1].set());
    let meet_cl = cl(s, a & b);
    cl(s, mul(s, a, b)) == meet_cl && meet_cl == cl(s, a) & cl(s, b)
}

fn lclk_14(s: &Subject, v: &[Value]) -> bool {
    let (a, b) = (v[0].set(), v[1].set());
    let lhs = cl(s, mul(s, a, b));
    lhs == cl(s, mul(s, a, cl(s, b))) && lhs == cl(s, mul(s, cl(s, a), cl(s, b)))
}

const A_K: &[Param] = &[param("a", Kind::Ideal), param("k", Kind::Exponent)];

fn each_ideal_and_exponent(s: &Subject) -> Domain<'_> {
    let n = s.table().order();
    Box::new(
        all_ideals(s)
            .into_iter()
            .flat_map(move |a| (1..=n).map(move |k| vec![Value::Ideal(a), Value::Exponent(k)])),
    )
}

fn lclk_15(s: &Subject, v: &[Value]) -> bool {
    let (a, k) = (v[0].set(), v[1].element());
    cl(s, ideal_power(s.table(), a, k)) == cl(s, a)
}

fn lclk_16(s: &Subject, v: &[Value]) -> bool {
    let (a, b) = (v[0].set(), v[1].set());
    cl(s, mul(s, a, b)) == mul(s, cl(s, a), cl(s, b))
}

/// The four sum conditions evaluate to the same truth value.
fn cujo(s: &Subject, _: &[Value]) -> bool {
    let zs = s.ctx().z_ideals();
    let ids = s.lattice().ideals();
    let sum = |f: &[ElemSet]| f.iter().fold(ElemSet::singleton(0), |acc, &a| add(s, acc, a));
    let c1 = zs.iter().all(|&a| zs.iter().all(|&b| is_z(s, add(s, a, b))));
    let c2 = ids
        .iter()
        .all(|&a| ids.iter().all(|&b| cl(s, add(s, a, b)) == add(s, cl(s, a), cl(s, b))));
    let c3 = subfamilies(zs).iter().all(|f| is_z(s, sum(f)));
    let c4 = subfamilies(ids).iter().all(|f| {
        let closed: Vec<ElemSet> = f.iter().map(|&a| cl(s, a)).collect();
        cl(s, sum(f)) == sum(&closed)
    });
    c1 == c2 && c2 == c3 && c3 == c4
}

fn exma(s: &Subject, v: &[Value]) -> bool {
    let a = v[0].set();
    s.ctx()
        .z_ideals()
        .iter()
        .any(|&m| a.is_subset(m) && s.ctx().is_z_maximal(m))
}

fn eqsm(s: &Subject, v: &[Value]) -> bool {
    let a = v[0].set();
    s.ctx().is_z_maximal(a) == (s.lattice().is_maximal(a) && is_z(s, a))
}

fn eqp(s: &Subject, v: &[Value]) -> bool {
    let a = v[0].set();
    s.ctx().is_z_prime(a) == (s.lattice().is_prime(a) && is_z(s, a))
}

fn eqpp(s: &Subject, v: &[Value]) -> bool {
    let a = v[0].set();
    s.ctx().is_z_semiprime(a) == (is_z(s, a) && s.lattice().is_semiprime(a))
}

fn kmkp(s: &Subject, _: &[Value]) -> bool {
    !s.ctx().min_z_primes_over(ElemSet::singleton(0)).is_empty()
}

const AVOIDANCE: &[Param] = &[param("set", Kind::Subset), param("ideals", Kind::Family)];

/// Families `p1`, `p1,p2`, `p1,p2,p3` with `p1, p2` z-ideals and `p3`
/// z-prime, none containing the set.
fn each_avoidance_instance(s: &Subject) -> Domain<'_> {
    let zs = z_ideals(s);
    let primes = s.ctx().spec_z().to_vec();
    Box::new(s.stable_sets().iter().flat_map(move |&set| {
        let zs: Vec<ElemSet> = zs.iter().copied().filter(|&p| !set.is_subset(p)).collect();
        let primes: Vec<ElemSet> = primes.iter().copied().filter(|&p| !set.is_subset(p)).collect();
        let mut families = Vec::new();
        for (i, &p1) in zs.iter().enumerate() {
            families.push(vec![p1]);
            for &p2 in &zs[i..] {
                families.push(vec![p1, p2]);
                for &p3 in &primes {
                    families.push(vec![p1, p2, p3]);
                }
            }
        }
        families
            .into_iter()
            .map(move |f| vec![Value::Subset(set), Value::Family(f)])
    }))
}

fn prime_avoidance(_: &Subject, v: &[Value]) -> bool {
    let (set, ps) = (v[0].set(), v[1].family());
    if ps.iter().any(|&p| set.is_subset(p)) {
        return true;
    }
    let union = ps.iter().fold(ElemSet::EMPTY, |acc, &p| acc | p);
    !set.is_subset(union)
}

fn eqsi(s: &Subject, v: &[Value]) -> bool {
    let a = v[0].set();
    let (ctx, l) = (s.ctx(), s.lattice());
    let z = is_z(s, a);
    ctx.is_z_irreducible(a) == (l.is_irreducible(a) && z)
        && ctx.is_z_strongly_irreducible(a) == (l.is_strongly_irreducible(a) && z)
}

fn abi(s: &Subject, v: &[Value]) -> bool {
    let a = v[0].set();
    let ctx = s.ctx();
    ctx.abi_criterion(a).ok() == Some(ctx.is_z_strongly_irreducible(a))
}

fn zrad(s: &Subject, a: ElemSet) -> ElemSet {
    s.ctx().z_prime_hull(a)
}

fn radpr_1(s: &Subject, v: &[Value]) -> bool {
    let a = v[0].set();
    let r = zrad(s, a);
    is_z(s, r) && a.is_subset(r)
}

fn radpr_2(s: &Subject, v: &[Value]) -> bool {
    let r = zrad(s, v[0].set());
    zrad(s, r) == r
}

fn radpr_3(s: &Subject, v: &[Value]) -> bool {
    let (a, b) = (v[0].set(), v[1].set());
    let mid = zrad(s, a & b);
    mid.is_subset(zrad(s, mul(s, a, b))) && (zrad(s, a) & zrad(s, b)).is_subset(mid)
}

fn rpms(s: &Subject, v: &[Value]) -> bool {
    let a = v[0].set();
    let complement = a.complement(s.table().order());
    s.ctx().is_z_prime(a) == is_multiplicatively_closed(s.table(), complement)
}

const T_P: &[Param] = &[param("t", Kind::Subset), param("p", Kind::Ideal)];

/// z-ideals maximal among those disjoint from `t`.
fn maximal_z_avoiding(s: &Subject, t: ElemSet) -> Vec<ElemSet> {
    let avoiding: Vec<ElemSet> = s
        .ctx()
        .z_ideals()
        .iter()
        .copied()
        .filter(|z| z.is_disjoint(t))
        .collect();
    avoiding
        .iter()
        .copied()
        .filter(|&p| !avoiding.iter().any(|&q| q != p && p.is_subset(q)))
        .collect()
}

fn each_mc_and_maximal_avoider(s: &Subject) -> Domain<'_> {
    Box::new(s.multiplicatively_closed_sets().iter().flat_map(move |&t| {
        maximal_z_avoiding(s, t)
            .into_iter()
            .map(move |p| vec![Value::Subset(t), Value::Ideal(p)])
    }))
}

fn mxkp(s: &Subject, v: &[Value]) -> bool {
    let (t, p) = (v[0].set(), v[1].set());
    !is_multiplicatively_closed(s.table(), t)
        || !maximal_z_avoiding(s, t).contains(&p)
        || s.ctx().is_z_prime(p)
}

fn rkt(s: &Subject, v: &[Value]) -> bool {
    let a = v[0].set();
    let mcs = s.multiplicatively_closed_sets();
    let t: ElemSet = s
        .table()
        .elements()
        .filter(|&r| mcs.iter().all(|x| !x.contains(r) || !x.is_disjoint(a)))
        .collect();
    zrad(s, a) == t
}

const A_X: &[Param] = &[param("a", Kind::Ideal), param("x", Kind::Element)];

fn each_z_semiprime_and_outsider(s: &Subject) -> Domain<'_> {
    let n = s.table().order();
    Box::new(
        z_ideals(s)
            .into_iter()
            .filter(move |&a| s.ctx().is_z_semiprime(a))
            .flat_map(move |a| {
                (0..n)
                    .filter(move |&x| !a.contains(x))
                    .map(move |x| vec![Value::Ideal(a), Value::Element(x)])
            }),
    )
}

/// `{1} ∪ {x, x², ..}` is multiplicatively closed and misses `a`.
fn mms(s: &Subject, v: &[Value]) -> bool {
    let (a, x) = (v[0].set(), v[1].element());
    let t = s.table();
    if !s.ctx().is_z_semiprime(a) || a.contains(x) {
        return true;
    }
    let set = mult_closure(t, x).with(t.one());
    is_multiplicatively_closed(t, set) && set.is_disjoint(a)
}

/// z-semiprime, intersection of z-primes, and z-radical coincide.
fn spkr(s: &Subject, v: &[Value]) -> bool {
    let a = v[0].set();
    let ctx = s.ctx();
    let semiprime = ctx.is_z_semiprime(a);
    let minimal = ctx.min_z_primes_over(a);
    let intersection = !minimal.is_empty() && meet(s, minimal) == a;
    let radical = ctx.z_radical(a).ok() == Some(a);
    semiprime == intersection && intersection == radical
}

fn spkr_cor(s: &Subject, v: &[Value]) -> bool {
    let a = v[0].set();
    let ctx = s.ctx();
    let r = zrad(s, a);
    ctx.is_z_semiprime(r)
        && a.is_subset(r)
        && ctx
            .z_ideals()
            .iter()
            .all(|&q| !(a.is_subset(q) && ctx.is_z_semiprime(q)) || r.is_subset(q))
}

fn vpss(s: &Subject, v: &[Value]) -> bool {
    let a = v[0].set();
    let ctx = s.ctx();
    ctx.is_z_prime(a) == (ctx.is_z_semiprime(a) && ctx.is_z_strongly_irreducible(a))
}

fn each_proper_z_and_outsider(s: &Subject) -> Domain<'_> {
    let n = s.table().order();
    Box::new(proper_z(s).into_iter().flat_map(move |a| {
        (1..n)
            .filter(move |&x| !a.contains(x))
            .map(move |x| vec![Value::Ideal(a), Value::Element(x)])
    }))
}

fn lir(s: &Subject, v: &[Value]) -> bool {
    let (a, x) = (v[0].set(), v[1].element());
    let ctx = s.ctx();
    ctx.z_ideals()
        .iter()
        .any(|&b| a.is_subset(b) && !b.contains(x) && ctx.is_z_irreducible(b))
}

fn meet_of_z_irreducibles_over(s: &Subject, a: ElemSet) -> ElemSet {
    let ctx = s.ctx();
    meet(
        s,
        ctx.z_ideals()
            .iter()
            .copied()
            .filter(|&b| a.is_subset(b) && ctx.is_z_irreducible(b)),
    )
}

fn rpir(s: &Subject, v: &[Value]) -> bool {
    let a = v[0].set();
    meet_of_z_irreducibles_over(s, a) == a
}

fn min_zsi(s: &Subject, v: &[Value]) -> bool {
    let a = v[0].set();
    let ctx = s.ctx();
    ctx.z_ideals()
        .iter()
        .any(|&b| a.is_subset(b) && ctx.is_z_strongly_irreducible(b))
}

fn total_order(s: &Subject, _: &[Value]) -> bool {
    let ctx = s.ctx();
    let all_si = ctx.z_ideals().iter().all(|&a| ctx.is_z_strongly_irreducible(a));
    all_si == is_chain(ctx.z_ideals())
}

fn pcas_forward(s: &Subject, v: &[Value]) -> bool {
    let a = v[0].set();
    let ctx = s.ctx();
    ctx.is_z_irreducible(a) == ctx.is_z_strongly_irreducible(a)
}

fn pcas_converse(s: &Subject, _: &[Value]) -> bool {
    let ctx = s.ctx();
    let irreducible_is_strong = ctx
        .z_ideals()
        .iter()
        .all(|&a| !ctx.is_z_irreducible(a) || ctx.is_z_strongly_irreducible(a));
    !irreducible_is_strong || s.lattice().is_arithmetical()
}

fn pcas_cor(s: &Subject, v: &[Value]) -> bool {
    let a = v[0].set();
    let ctx = s.ctx();
    let over = ctx
        .z_ideals()
        .iter()
        .copied()
        .filter(|&b| a.is_subset(b) && ctx.is_z_strongly_irreducible(b));
    meet(s, over) == a
}

fn si_z_transfer(s: &Subject, _: &[Value]) -> bool {
    let l = s.lattice();
    let si_are_z = l
        .ideals()
        .iter()
        .all(|&a| !l.is_strongly_irreducible(a) || is_z(s, a));
    let all_z = l.ideals().iter().all(|&a| is_z(s, a));
    si_are_z == all_z
}

/// Splits `a` into z-irreducible components by repeatedly writing a
/// reducible z-ideal as the meet of two strictly larger z-ideals.
fn z_irreducible_decomposition(s: &Subject, a: ElemSet) -> Vec<ElemSet> {
    let ctx = s.ctx();
    if ctx.is_z_irreducible(a) {
        return vec![a];
    }
    let zs = ctx.z_ideals();
    let split = zs.iter().find_map(|&b| {
        zs.iter()
            .find(|&&c| b != a && c != a && b & c == a)
            .map(|&c| (b, c))
    });
    match split {
        Some((b, c)) => {
            let mut out = z_irreducible_decomposition(s, b);
            out.extend(z_irreducible_decomposition(s, c));
            out.sort();
            out.dedup();
            out
        }
        None => vec![a],
    }
}

fn nssi(s: &Subject, v: &[Value]) -> bool {
    let a = v[0].set();
    let parts = z_irreducible_decomposition(s, a);
    parts.iter().all(|&b| s.ctx().is_z_irreducible(b)) && meet(s, parts) == a
}

fn wnknp(s: &Subject, _: &[Value]) -> bool {
    let ctx = s.ctx();
    let minimal = ctx.min_z_primes_over(ElemSet::singleton(0));
    minimal.iter().all(|p| ctx.spec_z().contains(p))
        && ctx
            .spec_z()
            .iter()
            .all(|&q| minimal.iter().any(|&p| p.is_subset(q)))
}

macro_rules! claim {
    ($id:literal, $class:expr, $hyp:expr, $stmt:literal, $params:expr, $domain:expr, $check:expr) => {
        ClaimSpec {
            id: $id,
            class: $class,
            hypothesis: $hyp,
            statement: $stmt,
            params: $params,
            domain: $domain,
            check: $check,
        }
    };
}

use Hypothesis::{Arithmetical, Bzi, BziNonzero, MaxOrder};
const ANY: Hypothesis = Hypothesis::None;

static REGISTRY: &[ClaimSpec] = &[
    claim!("psi", Assert, ANY, "ab ⊆ a ∩ b for all ideals a, b", AB, ideal_pairs, psi),
    claim!(
        "radical-representation", Assert, ANY,
        "rad(a) is the intersection of the primes containing a",
        A, each_ideal, radical_representation
    ),
    claim!(
        "epzi.1", Assert, ANY,
        "intersections of z-ideals are z-ideals (subfamilies of size <= 3 and the whole family)",
        FAMILY, z_subfamilies, epzi_1
    ),
    claim!("epzi.2", Assert, ANY, "J is a z-ideal", NONE, unit, epzi_2),
    claim!(
        "epzi.3", Assert, ANY,
        "with a unique maximal ideal m, no ideal strictly inside m is a z-ideal",
        A, each_ideal, epzi_3
    ),
    claim!(
        "ald", Assert, ANY,
        "a is a z-ideal iff (M_x = M_y and y in a imply x in a), and iff the same with M_x ⊇ M_y",
        A, each_ideal, ald
    ),
    claim!("exm.1", Assert, ANY, "every maximal ideal is a z-ideal", P, each_maximal, exm_1),
    claim!("exm.3", Assert, ANY, "if S is semisimple then {0} is a z-ideal", NONE, unit, exm_3),
    claim!(
        "exm.4", Survey, ANY,
        "every minimal prime ideal is a z-ideal",
        P, each_minimal_prime, exm_4
    ),
    claim!(
        "mds", Assert, ANY,
        "for an ideal a disjoint from a multiplicatively closed T, ideals maximal over a and disjoint from T exist and are prime",
        &[param("a", Kind::Ideal), param("t", Kind::Subset)], each_disjoint_mc, mds
    ),
    claim!(
        "mpz", Assert, ANY,
        "a prime minimal over a z-ideal is a z-ideal",
        &[param("a", Kind::Ideal), param("p", Kind::Ideal)], each_z_and_minimal_prime, mpz
    ),
    claim!(
        "prdz-forward", Assert, ANY,
        "if products of z-ideals are z-ideals then S is bzi",
        NONE, unit, prdz_forward
    ),
    claim!(
        "prdz-converse", Assert, ANY,
        "if S is bzi then ab is a z-ideal for all z-ideals a, b",
        AB, z_pairs, prdz_converse
    ),
    claim!(
        "icj", Assert, ANY,
        "(a : b) is a z-ideal for a z-ideal a and any ideal b",
        AB, z_ideal_pairs, icj
    ),
    claim!(
        "icj.cor", Assert, ANY,
        "(a:b), ((a:b):c), (a:bc), ((a:c):b), (a∩a2 : b), (a:b)∩(a2:b), (a : b+c), (a:b)∩(a:c) are z-ideals for z-ideals a, a2",
        ICJ_COR, each_icj_cor, icj_cor
    ),
    claim!(
        "lclk.1", Assert, ANY,
        "cl(a) is the smallest z-ideal containing a",
        A, each_ideal, lclk_1
    ),
    claim!("lclk.2", Assert, ANY, "cl(S) = S", NONE, unit, lclk_2),
    claim!("lclk.3", Assert, ANY, "if S is semisimple then cl(0) = 0", NONE, unit, lclk_3),
    claim!("lclk.4", Assert, ANY, "cl(cl(a)) = cl(a)", A, each_ideal, lclk_4),
    claim!("lclk.5", Assert, ANY, "a ⊆ b implies cl(a) ⊆ cl(b)", AB, ideal_pairs, lclk_5),
    claim!(
        "lclk.6", Assert, ANY,
        "cl(<a ∪ b>) ⊇ cl(a) ∪ cl(b)",
        AB, ideal_pairs, lclk_6
    ),
    claim!(
        "lclk.7", Assert, ANY,
        "cl(a + b) = cl(cl(a) + cl(b))",
        AB, ideal_pairs, lclk_7
    ),
    claim!("lclk.8", Assert, ANY, "a is a z-ideal iff a = cl(a)", A, each_ideal, lclk_8),
    claim!("lclk.9", Assert, ANY, "rad(a) ⊆ cl(a)", A, each_ideal, lclk_9),
    claim!("lclk.10", Assert, ANY, "cl(rad(a)) = cl(a)", A, each_ideal, lclk_10),
    claim!("lclk.11", Assert, ANY, "cl(rad(a)) = a for a z-ideal a", A, each_z, lclk_11),
    claim!("lclk.12", Assert, ANY, "rad(cl(a)) = cl(rad(a))", A, each_ideal, lclk_12),
    claim!(
        "lclk.13", Assert, ANY,
        "cl(ab) = cl(a ∩ b) = cl(a) ∩ cl(b)",
        AB, ideal_pairs, lclk_13
    ),
    claim!(
        "lclk.14", Assert, ANY,
        "cl(ab) = cl(a cl(b)) = cl(cl(a) cl(b))",
        AB, ideal_pairs, lclk_14
    ),
    claim!(
        "lclk.15", Assert, ANY,
        "cl(a^k) = cl(a) for 1 <= k <= |S|",
        A_K, each_ideal_and_exponent, lclk_15
    ),
    claim!("lclk.16", Assert, Bzi, "cl(ab) = cl(a) cl(b)", AB, ideal_pairs, lclk_16),
    claim!(
        "cujo", Assert, ANY,
        "sums of two z-ideals are z; cl(a+b) = cl(a)+cl(b); sums of z-families are z; cl of a family sum is the sum of closures: all four agree",
        NONE, unit, cujo
    ),
    claim!(
        "exma", Assert, ANY,
        "every proper z-ideal lies in a z-maximal ideal",
        A, each_proper_z, exma
    ),
    claim!(
        "eqsm", Survey, ANY,
        "a is z-maximal iff a is a maximal ideal and a z-ideal",
        A, each_ideal, eqsm
    ),
    claim!(
        "eqp", Assert, Bzi,
        "a is z-prime iff a is a prime ideal and a z-ideal",
        A, each_ideal, eqp
    ),
    claim!(
        "eqpp", Assert, Bzi,
        "a is z-semiprime iff a is a semiprime ideal and a z-ideal",
        A, each_ideal, eqpp
    ),
    claim!("kmkp", Assert, BziNonzero, "a minimal z-prime exists", NONE, unit, kmkp),
    claim!(
        "prime-avoidance", Survey, MaxOrder(AVOIDANCE_MAX_ORDER),
        "a +,*-stable set contained in none of p1, .., pn (n <= 3; p1, p2 z-ideals, p3 z-prime) is not covered by their union",
        AVOIDANCE, each_avoidance_instance, prime_avoidance
    ),
    claim!(
        "eqsi", Assert, ANY,
        "a is z-irreducible (z-strongly irreducible) iff a is irreducible (strongly irreducible) and a z-ideal",
        A, each_ideal, eqsi
    ),
    claim!(
        "abi", Assert, ANY,
        "a z-ideal a is z-strongly irreducible iff cl<x> ∩ cl<y> ⊆ a forces x in a or y in a",
        A, each_z, abi
    ),
    claim!(
        "radpr.1", Assert, ANY,
        "zrad(a) is a z-ideal containing a",
        A, each_z, radpr_1
    ),
    claim!("radpr.2", Assert, ANY, "zrad(zrad(a)) = zrad(a)", A, each_z, radpr_2),
    claim!(
        "radpr.3", Assert, ANY,
        "zrad(ab) ⊇ zrad(a ∩ b) ⊇ zrad(a) ∩ zrad(b), zrad(ab) taken as the meet of z-primes over ab",
        AB, z_pairs, radpr_3
    ),
    claim!(
        "rpms", Assert, Bzi,
        "a z-ideal a is z-prime iff S \\ a is multiplicatively closed",
        A, each_z, rpms
    ),
    claim!(
        "mxkp", Assert, Bzi,
        "a z-ideal maximal among those missing a multiplicatively closed T is z-prime",
        T_P, each_mc_and_maximal_avoider, mxkp
    ),
    claim!(
        "rkt", Assert, Bzi,
        "zrad(a) is the set of r such that every multiplicatively closed set containing r meets a",
        A, each_z, rkt
    ),
    claim!(
        "mms", Assert, ANY,
        "for a z-semiprime a and x not in a, {1, x, x^2, ..} is multiplicatively closed and misses a",
        A_X, each_z_semiprime_and_outsider, mms
    ),
    claim!(
        "spkr", Assert, Bzi,
        "for a proper z-ideal a: z-semiprime, an intersection of z-primes, and z-radical are equivalent",
        A, each_proper_z, spkr
    ),
    claim!(
        "spkr.cor", Assert, Bzi,
        "the meet of z-primes over a proper ideal a is the smallest z-semiprime ideal containing a",
        A, each_proper_ideal, spkr_cor
    ),
    claim!(
        "vpss", Assert, Bzi,
        "a z-ideal is z-prime iff it is z-semiprime and z-strongly irreducible",
        A, each_z, vpss
    ),
    claim!(
        "lir", Assert, ANY,
        "for a proper z-ideal a and nonzero x not in a, some z-irreducible ideal contains a and misses x",
        A_X, each_proper_z_and_outsider, lir
    ),
    claim!(
        "rpir", Assert, ANY,
        "a proper z-ideal is the intersection of the z-irreducible ideals containing it",
        A, each_proper_z, rpir
    ),
    claim!(
        "min-zsi", Assert, ANY,
        "every proper z-ideal lies in a minimal z-strongly irreducible ideal",
        A, each_proper_z, min_zsi
    ),
    claim!(
        "total-order", Assert, ANY,
        "every z-ideal is z-strongly irreducible iff Z is a chain",
        NONE, unit, total_order
    ),
    claim!(
        "pcas-forward", Assert, Arithmetical,
        "a z-ideal is z-irreducible iff it is z-strongly irreducible",
        A, each_z, pcas_forward
    ),
    claim!(
        "pcas-converse", Survey, ANY,
        "if every z-irreducible ideal is z-strongly irreducible then S is arithmetical",
        NONE, unit, pcas_converse
    ),
    claim!(
        "pcas.cor", Assert, Arithmetical,
        "a z-ideal is the intersection of the z-strongly irreducible ideals containing it",
        A, each_z, pcas_cor
    ),
    claim!(
        "si-z-transfer", Assert, Arithmetical,
        "every strongly irreducible ideal is a z-ideal iff every ideal is a z-ideal",
        NONE, unit, si_z_transfer
    ),
    claim!(
        "nssi", Assert, ANY,
        "every z-ideal is a finite intersection of z-irreducible ideals",
        A, each_z, nssi
    ),
    claim!(
        "wnknp", Assert, ANY,
        "the minimal z-primes are finitely many z-primes, and every z-prime contains one",
        NONE, unit, wnknp
    ),
];

/// Every registered claim in a fixed order.
pub fn registry() -> &'static [ClaimSpec] {
    REGISTRY
}

pub fn find_claim(id: &str) -> Option<&'static ClaimSpec> {
    REGISTRY.iter().find(|c| c.id == id)
}

/// Looks up claims by id, keeping registry order. An empty list selects
/// everything.
pub fn select_claims(ids: &[String]) -> Result<Vec<&'static ClaimSpec>, HarnessError> {
    if ids.is_empty() {
        return Ok(REGISTRY.iter().collect());
    }
    for id in ids {
        if find_claim(id).is_none() {
            return Err(HarnessError::UnknownClaim(id.clone()));
        }
    }
    Ok(REGISTRY
        .iter()
        .filter(|c| ids.iter().any(|id| id == c.id))
        .collect())
}
