//! Tools that work in any graded connected Hopf algebra: iterated
//! coproducts, the convolution powers of `id − 1`, the coradical
//! filtration, primitivity, the antipode and the first Eulerian idempotent.

use crate::lincomb::{LinComb, Rational, TensorComb, TensorPower};
use crate::structures::HopfAlgebra;

/// Where the next coproduct is applied when building `Δ^{(n)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bracketing {
    /// `Δ^{(n)} = (Δ ⊗ id^{n−1}) ∘ Δ^{(n−1)}`
    Left,
    /// `Δ^{(n)} = (id^{n−1} ⊗ Δ) ∘ Δ^{(n−1)}`
    Right,
}

/// `Δ^{(n)}(x)`, with `n + 1` tensor factors; `Δ^{(0)} = id`.
pub fn iterated_coproduct<H: HopfAlgebra>(
    h: &H,
    x: &H::Basis,
    n: usize,
    bracketing: Bracketing,
) -> TensorComb<H::Basis> {
    let mut cur: TensorComb<H::Basis> = LinComb::basis(TensorPower(vec![x.clone()]));
    for _ in 0..n {
        let mut next = LinComb::zero();
        for (TensorPower(factors), c) in cur.iter() {
            let at = match bracketing {
                Bracketing::Left => 0,
                Bracketing::Right => factors.len() - 1,
            };
            for ((a, b), d) in h.coproduct(&factors[at]).iter() {
                let mut f = Vec::with_capacity(factors.len() + 1);
                f.extend_from_slice(&factors[..at]);
                f.push(a.clone());
                f.push(b.clone());
                f.extend_from_slice(&factors[at + 1..]);
                next.add_term(TensorPower(f), c * d);
            }
        }
        cur = next;
    }
    cur
}

/// `(id−1)^{⊗n} ∘ Δ^{(n−1)}(a)`: the part of the iterated coproduct whose
/// `n` factors all have positive degree. Built factor by factor, so whole
/// branches drop out as soon as a degree-0 factor appears.
pub fn reduced_coproduct<H: HopfAlgebra>(
    h: &H,
    a: &LinComb<H::Basis>,
    n: usize,
) -> TensorComb<H::Basis> {
    assert!(n >= 1);
    let mut cur = positive_part(h, a);
    for _ in 1..n {
        if cur.is_zero() {
            break;
        }
        cur = split_last(h, &cur);
    }
    cur
}

fn positive_part<H: HopfAlgebra>(h: &H, a: &LinComb<H::Basis>) -> TensorComb<H::Basis> {
    let mut out = LinComb::zero();
    for (x, c) in a.iter() {
        if h.degree(x) > 0 {
            out.add_term(TensorPower(vec![x.clone()]), c.clone());
        }
    }
    out
}

/// Applies the reduced coproduct to the last factor of every term.
fn split_last<H: HopfAlgebra>(h: &H, t: &TensorComb<H::Basis>) -> TensorComb<H::Basis> {
    let mut next = LinComb::zero();
    for (TensorPower(factors), c) in t.iter() {
        let last = factors.last().expect("nonempty");
        for ((a, b), d) in h.coproduct(last).iter() {
            if h.degree(a) == 0 || h.degree(b) == 0 {
                continue;
            }
            let mut f = factors[..factors.len() - 1].to_vec();
            f.push(a.clone());
            f.push(b.clone());
            next.add_term(TensorPower(f), c * d);
        }
    }
    next
}

/// Multiplies the factors of every tensor term together, left to right.
pub fn multiply_out<H: HopfAlgebra>(h: &H, t: &TensorComb<H::Basis>) -> LinComb<H::Basis> {
    let mut out = LinComb::zero();
    for (TensorPower(factors), c) in t.iter() {
        let mut prod = LinComb::basis(factors[0].clone());
        for f in &factors[1..] {
            prod = h.mul(&prod, &LinComb::basis(f.clone()));
        }
        out.add_scaled(c, &prod);
    }
    out
}

/// `(id−1)^{*n}(a) = m^{(n−1)} ∘ (id−1)^{⊗n} ∘ Δ^{(n−1)}(a)`; for `n = 0`
/// this is `u∘ε`.
pub fn conv_power_id_minus_one<H: HopfAlgebra>(
    h: &H,
    a: &LinComb<H::Basis>,
    n: usize,
) -> LinComb<H::Basis> {
    if n == 0 {
        return h.unit().scale(&h.counit_lin(a));
    }
    multiply_out(h, &reduced_coproduct(h, a, n))
}

fn max_degree<H: HopfAlgebra>(h: &H, a: &LinComb<H::Basis>) -> usize {
    a.iter().map(|(x, _)| h.degree(x)).max().unwrap_or(0)
}

/// Smallest `k` with `a ∈ F^k`, i.e. `(id−1)^{⊗(k+1)} ∘ Δ^{(k)}(a) = 0`.
/// The zero element has level 0.
pub fn coradical_level<H: HopfAlgebra>(h: &H, a: &LinComb<H::Basis>) -> usize {
    let mut cur = positive_part(h, a);
    let mut k = 0;
    while !cur.is_zero() {
        k += 1;
        cur = split_last(h, &cur);
    }
    k
}

/// `Δ(a) = 1 ⊗ a + a ⊗ 1`.
pub fn is_primitive<H: HopfAlgebra>(h: &H, a: &LinComb<H::Basis>) -> bool {
    let one = h.unit();
    h.comul(a) == one.tensor(a).add(&a.tensor(&one))
}

/// `S = Σ_{n≥0} (−1)^n (id−1)^{*n}`, exact after `n = deg a`.
pub fn antipode<H: HopfAlgebra>(h: &H, a: &LinComb<H::Basis>) -> LinComb<H::Basis> {
    let mut out = LinComb::zero();
    for n in 0..=max_degree(h, a) {
        let sign = Rational::from_integer(if n % 2 == 0 { 1 } else { -1 });
        out.add_scaled(&sign, &conv_power_id_minus_one(h, a, n));
    }
    out
}

/// The first Eulerian idempotent `e = log(id) = Σ_{n≥1} (−1)^{n+1}/n (id−1)^{*n}`,
/// exact after `n = deg a`.
pub fn eulerian<H: HopfAlgebra>(h: &H, a: &LinComb<H::Basis>) -> LinComb<H::Basis> {
    let mut out = LinComb::zero();
    for n in 1..=max_degree(h, a) {
        let sign = if n % 2 == 1 { 1 } else { -1 };
        out.add_scaled(
            &Rational::new(sign, n as i64),
            &conv_power_id_minus_one(h, a, n),
        );
    }
    out
}

pub fn eulerian_basis<H: HopfAlgebra>(h: &H, x: &H::Basis) -> LinComb<H::Basis> {
    eulerian(h, &LinComb::basis(x.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{phi, HeapOrderedTree, OrderedTree, Permutation};
    use crate::lincomb::GradedEndo;
    use crate::structures::{HeapGL, IrreduciblePerms, OrderedGL, Shuffle};

    fn p(s: &str) -> HeapOrderedTree {
        phi(&s.parse::<Permutation>().unwrap())
    }

    fn b<T: crate::lincomb::Basis>(x: T) -> LinComb<T> {
        LinComb::basis(x)
    }

    #[test]
    fn eulerian_display() {
        let h = HeapGL::default();
        let got = eulerian_basis(&h, &p("213"));
        let half = Rational::new(-1, 2);
        let want: LinComb<HeapOrderedTree> = [
            (p("213"), Rational::one()),
            (p("312"), half.clone()),
            (p("231"), half.clone()),
            (p("132"), half),
            (p("123"), Rational::from_integer(-1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn second_power_on_two_components() {
        let h = HeapGL::default();
        let got = conv_power_id_minus_one(&h, &b(p("213")), 2);
        let want: LinComb<HeapOrderedTree> = [
            (p("312"), Rational::one()),
            (p("132"), Rational::one()),
            (p("123"), Rational::from_integer(2)),
            (p("231"), Rational::one()),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, want);
        assert!(conv_power_id_minus_one(&h, &b(p("213")), 3).is_zero());
    }

    #[test]
    fn bracketings_agree() {
        let h = HeapGL::default();
        for d in 0..=4 {
            for x in h.basis(d).unwrap() {
                for n in 0..=3 {
                    assert_eq!(
                        iterated_coproduct(&h, &x, n, Bracketing::Left),
                        iterated_coproduct(&h, &x, n, Bracketing::Right)
                    );
                }
            }
        }
        // 3^2 raw terms for two components, none of which merge here
        let t = iterated_coproduct(&h, &p("21"), 2, Bracketing::Left);
        let raw: Rational = t
            .iter()
            .fold(Rational::zero(), |acc, (_, c)| acc + c.clone());
        assert_eq!(raw, Rational::from_integer(9));
    }

    #[test]
    fn iterated_coproduct_of_unit() {
        let h = OrderedGL::default();
        let t = iterated_coproduct(&h, &h.one(), 3, Bracketing::Right);
        assert_eq!(t, b(TensorPower(vec![h.one(); 4])));
    }

    #[test]
    fn coradical_levels() {
        let h = HeapGL::default();
        assert_eq!(coradical_level(&h, &b(p("321"))), 3);
        assert_eq!(coradical_level(&h, &b(p("1"))), 1);
        assert_eq!(coradical_level(&h, &h.unit()), 0);
        assert_eq!(coradical_level(&h, &LinComb::zero()), 0);
        let e = eulerian_basis(&h, &p("321"));
        assert_eq!(coradical_level(&h, &e), 1);
        let sh = Shuffle {
            alphabet: IrreduciblePerms::default(),
        };
        for w in sh.basis(4).unwrap() {
            assert_eq!(coradical_level(&sh, &b(w.clone())), w.length());
        }
    }

    #[test]
    fn primitivity() {
        let ho = OrderedGL::default();
        for n in 1..=5 {
            for x in crate::combinatorics::planted_trees(n) {
                assert!(is_primitive(&ho, &b(x)));
            }
        }
        let o: OrderedTree = "(()())".parse().unwrap();
        assert!(!is_primitive(&ho, &b(o)));
        let h = HeapGL::default();
        assert!(!is_primitive(&h, &b(p("213"))));
        assert!(is_primitive(&h, &eulerian_basis(&h, &p("213"))));
    }

    #[test]
    fn eulerian_is_idempotent_and_fixes_primitives() {
        let h = HeapGL::default();
        for d in 1..=4 {
            for x in h.basis(d).unwrap() {
                let e = eulerian_basis(&h, &x);
                assert_eq!(eulerian(&h, &e), e, "{x:?}");
                if x.is_planted() {
                    assert_eq!(e, b(x.clone()));
                }
            }
        }
    }

    #[test]
    fn antipode_is_convolution_inverse() {
        let h = HeapGL::default();
        let s = GradedEndo::from_fn(&h, |x| antipode(&h, &b(x.clone())));
        let id = GradedEndo::identity(&h);
        let left = s.convolve(&id).unwrap();
        let right = id.convolve(&s).unwrap();
        for d in 0..=4 {
            for x in h.basis(d).unwrap() {
                let want = h.unit().scale(&h.counit(&x));
                assert_eq!(left.apply_basis(&x), want);
                assert_eq!(right.apply_basis(&x), want);
            }
        }
        assert_eq!(antipode(&h, &b(p("1"))), b(p("1")).neg());
        assert_eq!(antipode(&h, &h.unit()), h.unit());
    }

    #[test]
    fn direct_power_matches_convolution() {
        let h = OrderedGL::default();
        let q = GradedEndo::id_minus_one(&h);
        for n in 0..=4 {
            let qn = q.power(n);
            for d in 0..=4 {
                for x in h.basis(d).unwrap() {
                    assert_eq!(
                        qn.apply_basis(&x),
                        conv_power_id_minus_one(&h, &b(x.clone()), n)
                    );
                }
            }
        }
    }
}
