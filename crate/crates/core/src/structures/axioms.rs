//! Exhaustive checks of the bialgebra axioms on all basis elements up to a
//! total degree.

use rayon::prelude::*;

use crate::error::Result;
use crate::lincomb::{LinComb, TensorComb, TensorPower};
use crate::report::{CheckReport, VerificationReport};

use super::HopfAlgebra;

#[derive(Clone, Copy, Debug)]
pub struct AxiomOptions {
    /// Bound on the total degree of the pairs and triples checked.
    pub max_degree: usize,
}

impl Default for AxiomOptions {
    fn default() -> Self {
        AxiomOptions { max_degree: 4 }
    }
}

fn basis_by_degree<H: HopfAlgebra>(h: &H, n: usize) -> Result<Vec<Vec<H::Basis>>> {
    (0..=n).map(|d| h.basis(d)).collect()
}

fn up_to<B: Clone>(by_degree: &[Vec<B>], n: usize) -> Vec<(usize, B)> {
    by_degree
        .iter()
        .enumerate()
        .take(n + 1)
        .flat_map(|(d, v)| v.iter().map(move |b| (d, b.clone())))
        .collect()
}

fn pairs<B: Clone>(by_degree: &[Vec<B>], n: usize) -> Vec<(B, B)> {
    let all = up_to(by_degree, n);
    let mut out = Vec::new();
    for (d, x) in &all {
        for (e, y) in &all {
            if d + e <= n {
                out.push((x.clone(), y.clone()));
            }
        }
    }
    out
}

/// `(Δ ⊗ id) Δ`.
pub(crate) fn coproduct_left<H: HopfAlgebra>(h: &H, x: &H::Basis) -> TensorComb<H::Basis> {
    let mut out = LinComb::zero();
    for ((a, b), c) in h.coproduct(x).iter() {
        for ((a1, a2), d) in h.coproduct(a).iter() {
            out.add_term(TensorPower(vec![a1.clone(), a2.clone(), b.clone()]), c * d);
        }
    }
    out
}

/// `(id ⊗ Δ) Δ`.
pub(crate) fn coproduct_right<H: HopfAlgebra>(h: &H, x: &H::Basis) -> TensorComb<H::Basis> {
    let mut out = LinComb::zero();
    for ((a, b), c) in h.coproduct(x).iter() {
        for ((b1, b2), d) in h.coproduct(b).iter() {
            out.add_term(TensorPower(vec![a.clone(), b1.clone(), b2.clone()]), c * d);
        }
    }
    out
}

fn collect<T: Send, F>(items: &[T], f: F) -> Vec<Option<String>>
where
    T: Sync,
    F: Fn(&T) -> Option<String> + Sync + Send,
{
    items.par_iter().map(f).collect()
}

/// Unit, counit, associativity, coassociativity, compatibility of product
/// and coproduct, and additivity of degrees, on every basis element (pair,
/// triple) of total degree at most `opts.max_degree`.
pub fn verify_axioms<H: HopfAlgebra>(h: &H, opts: &AxiomOptions) -> Result<VerificationReport> {
    let n = opts.max_degree;
    let by_degree = basis_by_degree(h, n)?;
    let singles: Vec<H::Basis> = up_to(&by_degree, n).into_iter().map(|(_, b)| b).collect();
    let pairs = pairs(&by_degree, n);
    let mut report = VerificationReport::new(format!("{} axioms to degree {n}", h.id()));

    let one = h.one();
    let mut unit = CheckReport::new("unit");
    unit.extend(collect(&singles, |x| {
        let want = LinComb::basis(x.clone());
        let ok = h.product(&one, x) == want && h.product(x, &one) == want;
        (!ok).then(|| format!("1·{x:?} or {x:?}·1 differs from {x:?}"))
    }));
    report.push(unit);

    let mut counit = CheckReport::new("counit");
    counit.extend(collect(&singles, |x| {
        let cop = h.coproduct(x);
        let mut left = LinComb::zero();
        let mut right = LinComb::zero();
        for ((a, b), c) in cop.iter() {
            left.add_term(b.clone(), c * &h.counit(a));
            right.add_term(a.clone(), c * &h.counit(b));
        }
        let want = LinComb::basis(x.clone());
        let ok = left == want && right == want && h.counit(x) == h.counit_lin(&want);
        (!ok).then(|| format!("counit law fails on {x:?}"))
    }));
    report.push(counit);

    let mut grading = CheckReport::new("grading");
    grading.extend(collect(&pairs, |(x, y)| {
        let d = h.degree(x) + h.degree(y);
        let prod_ok = h.product(x, y).iter().all(|(t, _)| h.degree(t) == d);
        let cop_ok = h
            .coproduct(x)
            .iter()
            .all(|((a, b), _)| h.degree(a) + h.degree(b) == h.degree(x));
        (!(prod_ok && cop_ok)).then(|| format!("degrees not additive for {x:?}, {y:?}"))
    }));
    report.push(grading);

    let triples: Vec<(H::Basis, H::Basis, H::Basis)> = {
        let all = up_to(&by_degree, n);
        let mut out = Vec::new();
        for (d, x) in &all {
            for (e, y) in &all {
                for (f, z) in &all {
                    if d + e + f <= n {
                        out.push((x.clone(), y.clone(), z.clone()));
                    }
                }
            }
        }
        out
    };
    let mut assoc = CheckReport::new("associativity");
    assoc.extend(collect(&triples, |(x, y, z)| {
        let left = h.mul(&h.product(x, y), &LinComb::basis(z.clone()));
        let right = h.mul(&LinComb::basis(x.clone()), &h.product(y, z));
        (left != right).then(|| format!("({x:?}·{y:?})·{z:?} != {x:?}·({y:?}·{z:?})"))
    }));
    report.push(assoc);

    let mut coassoc = CheckReport::new("coassociativity");
    coassoc.extend(collect(&singles, |x| {
        (coproduct_left(h, x) != coproduct_right(h, x))
            .then(|| format!("(Δ⊗id)Δ != (id⊗Δ)Δ on {x:?}"))
    }));
    report.push(coassoc);

    let mut compat = CheckReport::new("compatibility");
    compat.extend(collect(&pairs, |(x, y)| {
        let left = h.comul(&h.product(x, y));
        let right = h.mul_pairs(&h.coproduct(x), &h.coproduct(y));
        (left != right).then(|| format!("Δ({x:?}·{y:?}) != Δ({x:?})Δ({y:?})"))
    }));
    report.push(compat);

    let mut mult = CheckReport::new("counit-multiplicative");
    mult.extend(collect(&pairs, |(x, y)| {
        let ok = h.counit_lin(&h.product(x, y)) == &h.counit(x) * &h.counit(y);
        (!ok).then(|| format!("ε({x:?}·{y:?}) != ε({x:?})ε({y:?})"))
    }));
    report.push(mult);

    Ok(report)
}

/// `τ ∘ Δ = Δ` on every basis element of degree at most `max_degree`.
pub fn verify_cocommutative<H: HopfAlgebra>(h: &H, max_degree: usize) -> Result<CheckReport> {
    let by_degree = basis_by_degree(h, max_degree)?;
    let singles: Vec<H::Basis> = up_to(&by_degree, max_degree)
        .into_iter()
        .map(|(_, b)| b)
        .collect();
    let mut check = CheckReport::new("cocommutativity");
    check.extend(collect(&singles, |x| {
        let cop = h.coproduct(x);
        (cop.swap() != cop).then(|| format!("Δ({x:?}) is not symmetric"))
    }));
    Ok(check)
}

/// `xy = yx` on every basis pair of total degree at most `max_degree`.
pub fn verify_commutative<H: HopfAlgebra>(h: &H, max_degree: usize) -> Result<CheckReport> {
    let by_degree = basis_by_degree(h, max_degree)?;
    let pairs = pairs(&by_degree, max_degree);
    let mut check = CheckReport::new("commutativity");
    check.extend(collect(&pairs, |(x, y)| {
        (h.product(x, y) != h.product(y, x)).then(|| format!("{x:?}·{y:?} != {y:?}·{x:?}"))
    }));
    Ok(check)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{HeapGL, IrreduciblePerms, OrderedGL, QSym, Shuffle, Tensor, Weights};

    #[test]
    fn small_algebras_pass() {
        let opts = AxiomOptions { max_degree: 3 };
        assert!(verify_axioms(&OrderedGL::default(), &opts)
            .unwrap()
            .passed());
        assert!(verify_axioms(&HeapGL::default(), &opts).unwrap().passed());
        assert!(verify_axioms(&QSym::default(), &opts).unwrap().passed());
        assert!(verify_axioms(
            &Shuffle {
                alphabet: Weights::default()
            },
            &opts
        )
        .unwrap()
        .passed());
        assert!(verify_axioms(
            &Tensor {
                alphabet: IrreduciblePerms::default()
            },
            &opts
        )
        .unwrap()
        .passed());
    }

    #[test]
    fn commutativity_flags() {
        let t = Tensor {
            alphabet: Weights::default(),
        };
        assert!(!verify_commutative(&t, 3).unwrap().passed());
        assert!(verify_cocommutative(&t, 3).unwrap().passed());
        let sh = Shuffle {
            alphabet: Weights::default(),
        };
        assert!(verify_commutative(&sh, 3).unwrap().passed());
        assert!(!verify_cocommutative(&sh, 3).unwrap().passed());
        assert!(!verify_commutative(&HeapGL::default(), 3).unwrap().passed());
    }
}
