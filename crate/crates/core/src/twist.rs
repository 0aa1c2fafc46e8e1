//! The twist construction
//!
//! ```text
//! P_a(Q) = { (x, y) ∈ Q² | L(x, y) ≤ a ≤ U(x, y) }
//! (x, y) ≤ (z, v)  ⟺  x ≤ z and v ≤ y
//! (x, y)' = (y, x)
//! ```
//!
//! Set order is read vacuously, so a pair with an empty cone still
//! qualifies on that side.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::involution::InvolutivePoset;
use crate::order::{DistributivityForm, Poset, Subset};

#[derive(Clone, Debug)]
pub struct TwistPoset {
    source: Poset,
    pivot: usize,
    pairs: Vec<(usize, usize)>,
    result: InvolutivePoset,
}

/// Whether `(x, y)` belongs to `P_a(Q)`.
pub fn is_member(q: &Poset, a: usize, x: usize, y: usize) -> bool {
    let pivot = q.subset([a]).expect("pivot in range");
    let lower = q.lower_of(&[x, y]);
    let upper = q.upper_of(&[x, y]);
    q.leq_set(&lower, &pivot).expect("same poset") && q.leq_set(&pivot, &upper).expect("same poset")
}

/// Builds `P_a(Q)`; elements are ordered by `(p1, p2)` and labelled `(x,y)`.
pub fn twist(q: &Poset, a: usize) -> Result<TwistPoset> {
    let n = q.size();
    if a >= n {
        return Err(Error::IndexOutOfRange { index: a, size: n });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| is_member(q, a, x, y))
        .collect();
    let labels: Vec<String> = pairs
        .iter()
        .map(|&(x, y)| format!("({},{})", q.label(x), q.label(y)))
        .collect();
    let order = Poset::from_relation(labels, |i, j| {
        let ((x, y), (z, v)) = (pairs[i], pairs[j]);
        q.leq(x, z) && q.leq(v, y)
    })?;
    let index = |p: (usize, usize)| pairs.binary_search(&p).expect("membership is symmetric");
    let inv = pairs.iter().map(|&(x, y)| index((y, x))).collect();
    let result = InvolutivePoset::new(order, inv)?;
    Ok(TwistPoset {
        source: q.clone(),
        pivot: a,
        pairs,
        result,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum EmbeddingFailure {
    /// `(x, a)` is not an element
    NotMember(String),
    /// `x ≤ y` and `(x, a) ≤ (y, a)` disagree
    OrderMismatch(String, String),
}

/// A cone of a set of pairs that differs from the product of projected cones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductViolation {
    pub cone: &'static str,
    pub set: Vec<String>,
    pub in_twist: Vec<String>,
    pub product: Vec<String>,
}

/// A distributivity triple with both sides, labelled.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TripleWitness {
    pub triple: [String; 3],
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Agreement {
    #[serde(rename = "AGREE")]
    Agree,
    #[serde(rename = "DISAGREE")]
    Disagree,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwistAudit {
    pub source_size: usize,
    pub pivot: String,
    pub size: usize,
    /// Antitone involution, pseudo-Kleene, and `(a,a)` the only fixed point.
    pub pseudo_kleene_with_fixed_point: bool,
    pub fixed_points: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pseudo_kleene_witness: Option<[String; 2]>,
    pub embedding: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub embedding_failure: Option<EmbeddingFailure>,
    pub source_distributive: bool,
    pub twist_kleene: bool,
    pub distributivity_agreement: Agreement,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source_witness: Option<TripleWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub twist_witness: Option<TripleWitness>,
    /// Cones agree with products of projected cones intersected with the carrier.
    pub restricted_products: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unrestricted_product_failure: Option<ProductViolation>,
}

fn triple_witness(p: &Poset, (x, y, z): (usize, usize, usize)) -> TripleWitness {
    let (lhs, rhs) = p.distributivity_sides(DistributivityForm::LU, x, y, z);
    TripleWitness {
        triple: [x, y, z].map(|e| p.label(e).to_string()),
        lhs: p.subset_labels(&lhs),
        rhs: p.subset_labels(&rhs),
    }
}

impl TwistPoset {
    pub fn source(&self) -> &Poset {
        &self.source
    }

    pub fn pivot(&self) -> usize {
        self.pivot
    }

    pub fn result(&self) -> &InvolutivePoset {
        &self.result
    }

    pub fn poset(&self) -> &Poset {
        self.result.base()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn p1(&self, e: usize) -> usize {
        self.pairs[e].0
    }

    pub fn p2(&self, e: usize) -> usize {
        self.pairs[e].1
    }

    pub fn index_of_pair(&self, x: usize, y: usize) -> Option<usize> {
        self.pairs.binary_search(&(x, y)).ok()
    }

    /// Looks up `(x,y)` by source labels.
    pub fn element(&self, x: &str, y: &str) -> Option<usize> {
        self.index_of_pair(self.source.index_of(x)?, self.source.index_of(y)?)
    }

    /// `x ↦ (x, a)`, checked to be an order embedding.
    pub fn embedding(&self) -> std::result::Result<Vec<usize>, EmbeddingFailure> {
        let q = &self.source;
        let image = (0..q.size())
            .map(|x| {
                self.index_of_pair(x, self.pivot)
                    .ok_or_else(|| EmbeddingFailure::NotMember(q.label(x).to_string()))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        for x in 0..q.size() {
            for y in 0..q.size() {
                if q.leq(x, y) != self.poset().leq(image[x], image[y]) {
                    return Err(EmbeddingFailure::OrderMismatch(
                        q.label(x).to_string(),
                        q.label(y).to_string(),
                    ));
                }
            }
        }
        Ok(image)
    }

    /// Compares `L(A)` and `U(A)` in the twist against
    /// `L(p1 A) × U(p2 A)` and `U(p1 A) × L(p2 A)` for every `A` of one or
    /// two elements; `restricted` intersects the products with the carrier.
    pub fn product_formula_violation(&self, restricted: bool) -> Option<ProductViolation> {
        let q = &self.source;
        let t = self.poset();
        let n = self.len();
        for i in 0..n {
            for j in i..n {
                let set = t.subset([i, j]).expect("in range");
                let firsts: Vec<usize> = set.iter().map(|e| self.p1(e)).collect();
                let seconds: Vec<usize> = set.iter().map(|e| self.p2(e)).collect();
                let cones = [
                    (
                        "lower",
                        t.lower_cone(&set).expect("same poset"),
                        q.lower_of(&firsts),
                        q.upper_of(&seconds),
                    ),
                    (
                        "upper",
                        t.upper_cone(&set).expect("same poset"),
                        q.upper_of(&firsts),
                        q.lower_of(&seconds),
                    ),
                ];
                for (cone, in_twist, left, right) in cones {
                    let product: Vec<(usize, usize)> = left
                        .iter()
                        .flat_map(|x| right.iter().map(move |y| (x, y)))
                        .filter(|&(x, y)| !restricted || self.index_of_pair(x, y).is_some())
                        .collect();
                    let same = product.len() == in_twist.len()
                        && product.iter().all(|&(x, y)| {
                            self.index_of_pair(x, y)
                                .is_some_and(|e| in_twist.contains(e))
                        });
                    if !same {
                        return Some(ProductViolation {
                            cone,
                            set: t.subset_labels(&set),
                            in_twist: t.subset_labels(&in_twist),
                            product: product
                                .iter()
                                .map(|&(x, y)| format!("({},{})", q.label(x), q.label(y)))
                                .collect(),
                        });
                    }
                }
            }
        }
        None
    }

    /// Measures the three parts of the twist theorem; the distributivity
    /// equivalence is reported, never asserted.
    pub fn audit(&self) -> TwistAudit {
        let t = self.poset();
        let q = &self.source;
        let fixed = self.result.fixed_points();
        let centre = self.index_of_pair(self.pivot, self.pivot);
        let pk = self.result.pseudo_kleene_violation().ok();
        let pseudo_kleene = matches!(pk, Some(None));
        let pseudo_kleene_witness = pk.flatten().map(|w| {
            [
                t.label(w.elements[0]).to_string(),
                t.label(w.elements[1]).to_string(),
            ]
        });
        let embedding = self.embedding();
        let source_violation = q.distributivity_violation(DistributivityForm::LU);
        let twist_violation = t.distributivity_violation(DistributivityForm::LU);
        let source_distributive = source_violation.is_none();
        let twist_kleene = pseudo_kleene && twist_violation.is_none();
        TwistAudit {
            source_size: q.size(),
            pivot: q.label(self.pivot).to_string(),
            size: self.len(),
            pseudo_kleene_with_fixed_point: self.result.is_antitone_involution()
                && pseudo_kleene
                && centre.is_some()
                && fixed.singleton() == centre,
            fixed_points: t.subset_labels(&fixed),
            pseudo_kleene_witness,
            embedding: embedding.is_ok(),
            embedding_failure: embedding.err(),
            source_distributive,
            twist_kleene,
            distributivity_agreement: if source_distributive == twist_kleene {
                Agreement::Agree
            } else {
                Agreement::Disagree
            },
            source_witness: source_violation.map(|v| triple_witness(q, v)),
            twist_witness: twist_violation.map(|v| triple_witness(t, v)),
            restricted_products: self.product_formula_violation(true).is_none(),
            unrestricted_product_failure: self.product_formula_violation(false),
        }
    }

    /// Both sides of `L(U(x,y),z) = LU(L(x,z),L(y,z))` at pairs given by labels.
    pub fn distributivity_sides(
        &self,
        x: (&str, &str),
        y: (&str, &str),
        z: (&str, &str),
    ) -> Option<(Subset, Subset)> {
        let e = |(a, b): (&str, &str)| self.element(a, b);
        Some(
            self.poset()
                .distributivity_sides(DistributivityForm::LU, e(x)?, e(y)?, e(z)?),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_point() {
        let t = twist(&Poset::chain(1), 0).unwrap();
        assert_eq!(t.len(), 1);
        let audit = t.audit();
        assert!(audit.pseudo_kleene_with_fixed_point);
        assert_eq!(audit.distributivity_agreement, Agreement::Agree);
    }

    #[test]
    fn pivot_out_of_range() {
        assert!(twist(&Poset::chain(2), 2).is_err());
    }

    #[test]
    fn two_chain_at_bottom() {
        // L(x,y) ≤ 0 forces 0 ∈ {x,y}; 0 ≤ U(x,y) always
        let t = twist(&Poset::chain(2), 0).unwrap();
        assert_eq!(t.pairs(), &[(0, 0), (0, 1), (1, 0)]);
        assert_eq!(t.embedding().unwrap(), vec![0, 2]);
        assert!(t.result().is_antitone_involution());
        assert_eq!(t.result().prime(1), 2);
    }

    #[test]
    fn restricted_products_hold() {
        let t = twist(&Poset::antichain(2), 0).unwrap();
        assert_eq!(t.product_formula_violation(true), None);
    }
}
