//! The maps Ψ from the graded dual of gr(YSym) to the ordered-tree algebra
//! and Φ from the graded dual of gr(SSym) to the heap-ordered-tree algebra,
//! with exhaustive checks that they are isomorphisms of Hopf algebras.
//!
//! Both sources are tensor algebras, so each map is fixed by its values on
//! single letters and extended multiplicatively:
//!
//! * `Ψ(t1|...|tk) = ψ(t1) ··· ψ(tk)`
//! * `Φ(w1|...|wk) = e(φ(w1)) ··· e(φ(wk))`

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::RwLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{
    heap_ordered_trees, irreducible_permutations, ordered_trees, phi, planted_trees, psi,
    DegreeCaps, HeapOrderedTree, OrderPair, OrderedTree, Permutation, PlanarBinaryTree,
};
use crate::error::{Error, Result};
use crate::lincomb::{Basis, LinComb};
use crate::machinery::{eulerian_basis, is_primitive};
use crate::report::{CheckReport, VerificationReport};
use crate::structures::{
    word_to_object, AlgebraId, Alphabet, HeapGL, HopfAlgebra, IrreduciblePbts, IrreduciblePerms,
    OrderedGL, Tensor, Word,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IsoId {
    Psi,
    Phi,
}

impl IsoId {
    pub fn name(self) -> &'static str {
        match self {
            IsoId::Psi => "psi",
            IsoId::Phi => "phi",
        }
    }

    pub fn source(self) -> AlgebraId {
        match self {
            IsoId::Psi => AlgebraId::GR_YSYM_DUAL,
            IsoId::Phi => AlgebraId::GR_SSYM_DUAL,
        }
    }

    pub fn target(self) -> AlgebraId {
        match self {
            IsoId::Psi => AlgebraId::Ho,
            IsoId::Phi => AlgebraId::Hho,
        }
    }
}

impl fmt::Display for IsoId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IsoId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "psi" => Ok(IsoId::Psi),
            "phi" => Ok(IsoId::Phi),
            _ => Err(Error::Invalid(format!(
                "unknown isomorphism '{s}' (expected psi or phi)"
            ))),
        }
    }
}

/// A multiplicative map from a tensor algebra on `\`-irreducibles to a tree
/// algebra, together with the order used to certify that it is invertible.
pub trait Isomorphism: Sync {
    type Letter: Basis;
    type Alphabet: Alphabet<Letter = Self::Letter>;
    type Target: HopfAlgebra;
    /// Orders target basis elements for the triangularity certificate.
    type Key: Ord + Copy + fmt::Display + Send + Sync;

    fn id(&self) -> IsoId;
    fn source(&self) -> &Tensor<Self::Alphabet>;
    fn target(&self) -> &Self::Target;

    /// Image of a single letter.
    fn generator(&self, letter: &Self::Letter) -> LinComb<<Self::Target as HopfAlgebra>::Basis>;

    /// The target basis element expected to lead the image of `w`.
    fn leading(&self, w: &Word<Self::Letter>) -> Result<<Self::Target as HopfAlgebra>::Basis>;

    fn order_key(&self, x: &<Self::Target as HopfAlgebra>::Basis) -> Self::Key;

    fn apply(
        &self,
        w: &Word<Self::Letter>,
    ) -> Result<LinComb<<Self::Target as HopfAlgebra>::Basis>> {
        let t = self.target();
        let mut acc = t.unit();
        for l in w.letters() {
            if !self.is_letter(l) {
                return Err(Error::ReducibleLetter(l.encode()));
            }
            acc = t.mul(&acc, &self.generator(l));
        }
        Ok(acc)
    }

    fn is_letter(&self, l: &Self::Letter) -> bool;

    fn apply_lin(
        &self,
        a: &LinComb<Word<Self::Letter>>,
    ) -> Result<LinComb<<Self::Target as HopfAlgebra>::Basis>> {
        a.extend_linearly(|w| self.apply(w).ok())
    }
}

pub struct Psi {
    pub source: Tensor<IrreduciblePbts>,
    pub target: OrderedGL,
}

impl Psi {
    pub fn new(caps: DegreeCaps) -> Self {
        Psi {
            source: Tensor {
                alphabet: IrreduciblePbts { caps },
            },
            target: OrderedGL::new(caps),
        }
    }
}

impl Default for Psi {
    fn default() -> Self {
        Psi::new(DegreeCaps::default())
    }
}

impl Isomorphism for Psi {
    type Letter = PlanarBinaryTree;
    type Alphabet = IrreduciblePbts;
    type Target = OrderedGL;
    type Key = usize;

    fn id(&self) -> IsoId {
        IsoId::Psi
    }
    fn source(&self) -> &Tensor<IrreduciblePbts> {
        &self.source
    }
    fn target(&self) -> &OrderedGL {
        &self.target
    }
    fn generator(&self, t: &PlanarBinaryTree) -> LinComb<OrderedTree> {
        LinComb::basis(psi(t))
    }
    fn leading(&self, w: &Word<PlanarBinaryTree>) -> Result<OrderedTree> {
        Ok(psi(&word_to_object(w)?))
    }
    /// Number of planted components: trees with fewer components come first.
    fn order_key(&self, x: &OrderedTree) -> usize {
        x.child_count()
    }
    fn is_letter(&self, t: &PlanarBinaryTree) -> bool {
        t.is_irreducible()
    }
}

pub struct Phi {
    pub source: Tensor<IrreduciblePerms>,
    pub target: HeapGL,
    generators: RwLock<HashMap<Permutation, LinComb<HeapOrderedTree>>>,
}

impl Phi {
    pub fn new(caps: DegreeCaps) -> Self {
        Phi {
            source: Tensor {
                alphabet: IrreduciblePerms { caps },
            },
            target: HeapGL::new(caps),
            generators: RwLock::new(HashMap::new()),
        }
    }
}

impl Default for Phi {
    fn default() -> Self {
        Phi::new(DegreeCaps::default())
    }
}

impl Isomorphism for Phi {
    type Letter = Permutation;
    type Alphabet = IrreduciblePerms;
    type Target = HeapGL;
    type Key = OrderPair;

    fn id(&self) -> IsoId {
        IsoId::Phi
    }
    fn source(&self) -> &Tensor<IrreduciblePerms> {
        &self.source
    }
    fn target(&self) -> &HeapGL {
        &self.target
    }
    fn generator(&self, w: &Permutation) -> LinComb<HeapOrderedTree> {
        if let Some(v) = self.generators.read().expect("cache lock").get(w) {
            return v.clone();
        }
        let v = eulerian_basis(&self.target, &phi(w));
        self.generators
            .write()
            .expect("cache lock")
            .insert(w.clone(), v.clone());
        v
    }
    fn leading(&self, w: &Word<Permutation>) -> Result<HeapOrderedTree> {
        Ok(phi(&word_to_object(w)?))
    }
    fn order_key(&self, x: &HeapOrderedTree) -> OrderPair {
        x.order_pair()
    }
    fn is_letter(&self, w: &Permutation) -> bool {
        w.is_irreducible()
    }
}

/// Checks, for all words up to `max_degree`, that the map is a morphism of
/// graded Hopf algebras: unit, degree, products of pairs, coproducts, and
/// primitivity of the images of letters.
pub fn verify_hopf_morphism<I: Isomorphism>(
    iso: &I,
    max_degree: usize,
) -> Result<VerificationReport> {
    let src = iso.source();
    let tgt = iso.target();
    let words: Vec<Vec<Word<I::Letter>>> = (0..=max_degree)
        .map(|d| src.basis(d))
        .collect::<Result<_>>()?;
    // the target must be enumerable to the same degree
    tgt.basis(max_degree)?;

    let images: HashMap<Word<I::Letter>, LinComb<<I::Target as HopfAlgebra>::Basis>> = words
        .par_iter()
        .flatten()
        .map(|w| iso.apply(w).map(|v| (w.clone(), v)))
        .collect::<Result<_>>()?;
    let image = |w: &Word<I::Letter>| images[w].clone();

    let mut report = VerificationReport::new(format!(
        "{}: {} -> {} to degree {max_degree}",
        iso.id(),
        iso.id().source(),
        iso.id().target()
    ));

    let mut unit = CheckReport::new("unit");
    unit.record(image(&src.one()) == tgt.unit(), || {
        "empty word does not map to the unit".into()
    });
    let cop = tgt.comul(&image(&src.one()));
    unit.record(cop == tgt.unit().tensor(&tgt.unit()), || {
        "Δ(unit) != unit ⊗ unit".into()
    });
    report.push(unit);

    let all: Vec<&Word<I::Letter>> = words.iter().flatten().collect();

    let mut degree = CheckReport::new("degree");
    degree.extend(all.iter().map(|w| {
        let d = src.degree(w);
        let ok = image(w).iter().all(|(x, _)| tgt.degree(x) == d);
        (!ok).then(|| format!("image of {w:?} is not homogeneous of degree {d}"))
    }));
    report.push(degree);

    let pairs: Vec<(&Word<I::Letter>, &Word<I::Letter>)> = all
        .iter()
        .flat_map(|u| all.iter().map(move |v| (*u, *v)))
        .filter(|(u, v)| src.degree(u) + src.degree(v) <= max_degree)
        .collect();
    let mut mult = CheckReport::new("multiplicative");
    mult.extend(
        pairs
            .par_iter()
            .map(|(u, v)| {
                let left = match iso.apply_lin(&src.product(u, v)) {
                    Ok(l) => l,
                    Err(e) => return Some(e.to_string()),
                };
                let right = tgt.mul(&image(u), &image(v));
                (left != right)
                    .then(|| format!("image of {u:?}·{v:?} differs from the product of images"))
            })
            .collect::<Vec<_>>(),
    );
    report.push(mult);

    let mut comul = CheckReport::new("coproduct");
    comul.extend(
        all.par_iter()
            .map(|w| {
                let left = tgt.comul(&image(w));
                let mut right = LinComb::zero();
                for ((a, b), c) in src.coproduct(w).iter() {
                    right.add_scaled(c, &image(a).tensor(&image(b)));
                }
                (left != right).then(|| format!("Δ(image of {w:?}) != (image ⊗ image)(Δ {w:?})"))
            })
            .collect::<Vec<_>>(),
    );
    report.push(comul);

    let mut prim = CheckReport::new("generators-primitive");
    for d in 1..=max_degree {
        for l in src.alphabet.letters(d)? {
            let v = iso.generator(&l);
            prim.record(is_primitive(tgt, &v), || {
                format!("image of letter {l:?} is not primitive")
            });
        }
    }
    report.push(prim);

    Ok(report)
}

/// The matrix of the map in one degree, with rows (target trees) and
/// columns (source words) sorted so that it is unitriangular.
#[derive(Clone, Debug, Serialize)]
pub struct TriangularityCertificate {
    pub iso: String,
    pub degree: usize,
    /// How rows are ordered: the order key, then canonical string.
    pub order: String,
    pub source_basis: Vec<String>,
    pub target_basis: Vec<String>,
    pub target_order: Vec<String>,
    /// `matrix[i][j]`: coefficient of target `i` in the image of source `j`.
    pub matrix: Vec<Vec<String>>,
    /// Row holding the leading term of each column.
    pub leading_rows: Vec<usize>,
    /// Whether each column's leading coefficient is 1 and every other entry
    /// at an order at least as high is 0.
    pub leading: Vec<bool>,
    pub square: bool,
    pub unitriangular: bool,
}

impl TriangularityCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn dimension(&self) -> usize {
        self.source_basis.len()
    }
}

pub fn triangularity_certificate<I: Isomorphism>(
    iso: &I,
    degree: usize,
) -> Result<TriangularityCertificate> {
    let src = iso.source();
    let tgt = iso.target();
    let words = src.basis(degree)?;
    let mut targets: Vec<_> = tgt.basis(degree)?;
    targets.sort_by(|a, b| {
        iso.order_key(a)
            .cmp(&iso.order_key(b))
            .then_with(|| a.encode().cmp(&b.encode()))
    });
    let row_of: HashMap<_, usize> = targets
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, t)| (t, i))
        .collect();

    let images: Vec<_> = words
        .par_iter()
        .map(|w| iso.apply(w))
        .collect::<Result<_>>()?;
    let leads: Vec<_> = words
        .iter()
        .map(|w| iso.leading(w))
        .collect::<Result<_>>()?;

    // columns in the order of their leading rows
    let mut cols: Vec<usize> = (0..words.len()).collect();
    cols.sort_by_key(|&j| row_of.get(&leads[j]).copied().unwrap_or(usize::MAX));

    let mut matrix = vec![vec!["0".to_string(); cols.len()]; targets.len()];
    let mut leading_rows = Vec::with_capacity(cols.len());
    let mut leading = Vec::with_capacity(cols.len());
    for (jj, &j) in cols.iter().enumerate() {
        for (t, c) in images[j].iter() {
            if let Some(&i) = row_of.get(t) {
                matrix[i][jj] = c.to_string();
            }
        }
        let lead_row = row_of.get(&leads[j]).copied();
        let ok = match lead_row {
            None => false,
            Some(r) => {
                let key = iso.order_key(&leads[j]);
                images[j].coeff(&leads[j]).is_one()
                    && images[j]
                        .iter()
                        .all(|(t, c)| t == &leads[j] || c.is_zero() || iso.order_key(t) < key)
                    && images[j].iter().all(|(t, _)| row_of.contains_key(t))
                    && r == jj
            }
        };
        leading_rows.push(lead_row.unwrap_or(usize::MAX));
        leading.push(ok);
    }
    let square = words.len() == targets.len();
    let unitriangular = square && leading.iter().all(|&b| b);
    Ok(TriangularityCertificate {
        iso: iso.id().to_string(),
        degree,
        order: match iso.id() {
            IsoId::Psi => "planted-component count, then canonical string".into(),
            IsoId::Phi => "order pair (k,l), then canonical string".into(),
        },
        source_basis: cols.iter().map(|&j| words[j].encode()).collect(),
        target_basis: targets.iter().map(Basis::encode).collect(),
        target_order: targets
            .iter()
            .map(|t| iso.order_key(t).to_string())
            .collect(),
        matrix,
        leading_rows,
        leading,
        square,
        unitriangular,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct FreenessRow {
    pub degree: usize,
    /// Number of basis trees of this degree.
    pub dimension: u128,
    /// Number of generators of this degree.
    pub generators: u128,
    /// Number of words in the generators of this total degree.
    pub words: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct FreenessReport {
    pub target: String,
    pub rows: Vec<FreenessRow>,
    pub holds: bool,
}

/// Compares, degree by degree, the dimension of the tree algebra with the
/// number of words in its free generators (planted trees for the ordered
/// trees, irreducible heap-ordered trees for the heap-ordered ones).
pub fn freeness_report(target: AlgebraId, max_degree: usize) -> Result<FreenessReport> {
    let (dims, gens): (Vec<u128>, Vec<u128>) = match target {
        AlgebraId::Ho => (0..=max_degree)
            .map(|n| {
                (
                    ordered_trees(n).len() as u128,
                    planted_trees(n).len() as u128,
                )
            })
            .unzip(),
        AlgebraId::Hho => (0..=max_degree)
            .map(|n| {
                (
                    heap_ordered_trees(n).len() as u128,
                    irreducible_permutations(n).len() as u128,
                )
            })
            .unzip(),
        other => return Err(Error::Invalid(format!("no freeness statement for {other}"))),
    };
    let mut words = vec![1u128];
    for n in 1..=max_degree {
        words.push((1..=n).map(|i| gens[i] * words[n - i]).sum());
    }
    let rows: Vec<FreenessRow> = (0..=max_degree)
        .map(|n| FreenessRow {
            degree: n,
            dimension: dims[n],
            generators: gens[n],
            words: words[n],
        })
        .collect();
    let holds = rows.iter().all(|r| r.dimension == r.words);
    Ok(FreenessReport {
        target: target.to_string(),
        rows,
        holds,
    })
}
