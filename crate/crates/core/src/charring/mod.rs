//! Graded and classical characters: the fermionic character formula, the
//! basis-aggregated character, classical characters via pattern branching,
//! triangular decomposition into irreducible characters, and the Kostka and
//! tensor-factorization verification reports built on top.

pub mod gt;
pub mod kostka;

use crate::basisenum::{fold_basis_elements, for_each_l_array, l_array_weight};
use crate::lattice::{
    dominates, simple_reflection, transpose, weight_to_partition, DominantWeight, Partition,
    WeightVector,
};
use crate::qpoly::{qbinom, QPoly};
use kostka::{kostka_with_statistic, partitions_of_size, Statistic};
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CharError {
    #[error("maximal support weight {0:?} is not dominant; input is not a character")]
    NonDominantMaximal(Vec<i64>),
    #[error("elimination produced a negative coefficient at weight {0:?}")]
    NegativeCoefficient(Vec<i64>),
    #[error("constituent cannot be lifted into the leading size class")]
    SizeLift,
}

fn big_json(n: &BigInt) -> Value {
    Value::Number(serde_json::Number::from_str(&n.to_string()).expect("integer literal"))
}

fn ubig_json(n: &BigUint) -> Value {
    Value::Number(serde_json::Number::from_str(&n.to_string()).expect("integer literal"))
}

fn poly_json(p: &QPoly) -> Value {
    Value::Array(p.coeffs().iter().map(big_json).collect())
}

/// Graded character: finite weight table with polynomial multiplicities.
/// Zero polynomials are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedCharacter {
    rank: usize,
    table: BTreeMap<WeightVector, QPoly>,
}

impl GradedCharacter {
    pub fn new(rank: usize) -> Self {
        GradedCharacter {
            rank,
            table: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn get(&self, mu: &WeightVector) -> QPoly {
        self.table.get(mu).cloned().unwrap_or_else(QPoly::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&WeightVector, &QPoly)> {
        self.table.iter()
    }

    pub fn add(&mut self, mu: WeightVector, p: QPoly) {
        assert_eq!(mu.rank(), self.rank, "rank mismatch in character table");
        if p.is_zero() {
            return;
        }
        let entry = self.table.entry(mu).or_insert_with(QPoly::zero);
        *entry = &*entry + &p;
        if entry.is_zero() {
            // re-fetch key removal via retain to avoid borrowing issues
            self.table.retain(|_, v| !v.is_zero());
        }
    }

    /// Specializes t = 1, giving the underlying classical character.
    pub fn eval_at_one(&self) -> ClassicalCharacter {
        let mut table = BTreeMap::new();
        for (w, p) in &self.table {
            let m = p
                .eval_at_one()
                .to_biguint()
                .expect("character multiplicities are non-negative");
            if !m.is_zero() {
                table.insert(w.clone(), m);
            }
        }
        ClassicalCharacter {
            rank: self.rank,
            table,
        }
    }

    /// The coefficient slice of a fixed power of t.
    pub fn degree_slice(&self, d: usize) -> ClassicalCharacter {
        let mut table = BTreeMap::new();
        for (w, p) in &self.table {
            let c = p.coeff(d);
            if !c.is_zero() {
                table.insert(
                    w.clone(),
                    c.to_biguint().expect("slice multiplicity is non-negative"),
                );
            }
        }
        ClassicalCharacter {
            rank: self.rank,
            table,
        }
    }

    /// Largest power of t appearing, or `None` for the empty character.
    pub fn top_grade(&self) -> Option<usize> {
        self.table.values().filter_map(|p| p.degree()).max()
    }

    /// Total dimension: the character mass at t = 1.
    pub fn total_dimension(&self) -> BigUint {
        self.table
            .values()
            .map(|p| {
                p.eval_at_one()
                    .to_biguint()
                    .expect("character multiplicities are non-negative")
            })
            .sum()
    }

    /// Invariance of the whole polynomial table under every simple
    /// reflection; equivalent to invariance of each degree slice.
    pub fn is_weyl_symmetric(&self) -> bool {
        (1..=self.rank).all(|i| {
            self.table
                .iter()
                .all(|(w, p)| self.get(&simple_reflection(i, w)) == *p)
        })
    }

    /// Sorted array of `{"weight": [...], "poly": [...]}` objects; the sort
    /// is lexicographic on the weight coordinates.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.table
                .iter()
                .map(|(w, p)| json!({"weight": w.coords(), "poly": poly_json(p)}))
                .collect(),
        )
    }

    /// CSV rows `weight,degree,multiplicity`, weight coordinates separated
    /// by spaces.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("weight,degree,multiplicity\n");
        for (w, p) in &self.table {
            let ws: Vec<String> = w.coords().iter().map(|c| c.to_string()).collect();
            for (d, c) in p.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    out.push_str(&format!("{},{},{}\n", ws.join(" "), d, c));
                }
            }
        }
        out
    }
}

/// Classical character: weight table with non-negative integer
/// multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalCharacter {
    rank: usize,
    table: BTreeMap<WeightVector, BigUint>,
}

impl ClassicalCharacter {
    pub fn trivial(rank: usize) -> Self {
        let mut table = BTreeMap::new();
        table.insert(WeightVector::zero(rank), BigUint::from(1u32));
        ClassicalCharacter { rank, table }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, mu: &WeightVector) -> BigUint {
        self.table.get(mu).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&WeightVector, &BigUint)> {
        self.table.iter()
    }

    pub fn mass(&self) -> BigUint {
        self.table.values().sum()
    }

    /// Pointwise product in the group ring: convolution of weight tables.
    pub fn product(&self, rhs: &ClassicalCharacter) -> ClassicalCharacter {
        assert_eq!(self.rank, rhs.rank, "rank mismatch in character product");
        let mut table: BTreeMap<WeightVector, BigUint> = BTreeMap::new();
        for (a, ma) in &self.table {
            for (b, mb) in &rhs.table {
                let key = a.checked_add(b).expect("ranks agree");
                *table.entry(key).or_default() += ma * mb;
            }
        }
        ClassicalCharacter {
            rank: self.rank,
            table,
        }
    }

    pub fn pow(&self, e: i64) -> ClassicalCharacter {
        let mut acc = ClassicalCharacter::trivial(self.rank);
        for _ in 0..e {
            acc = acc.product(self);
        }
        acc
    }

    pub fn is_weyl_symmetric(&self) -> bool {
        (1..=self.rank).all(|i| {
            self.table
                .iter()
                .all(|(w, m)| self.get(&simple_reflection(i, w)) == *m)
        })
    }

    /// Views the classical character as a graded character concentrated in
    /// degree zero.
    pub fn at_degree_zero(&self) -> GradedCharacter {
        let mut gr = GradedCharacter::new(self.rank);
        for (w, m) in &self.table {
            gr.add(
                w.clone(),
                QPoly::from_coeffs(vec![BigInt::from(m.clone())]),
            );
        }
        gr
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.table
                .iter()
                .map(|(w, m)| json!({"weight": w.coords(), "multiplicity": ubig_json(m)}))
                .collect(),
        )
    }
}

/// Character of W(lambda) by the fermionic sum: over every multiplicity
/// array, the product of Gaussian binomials of the running bounds, attached
/// to the weight shifted by the corresponding roots. Arrays with a negative
/// bound contribute nothing.
pub fn fermionic_character(lambda: &DominantWeight) -> GradedCharacter {
    let r = lambda.rank();
    let mut ch = GradedCharacter::new(r);
    for_each_l_array(lambda, true, &mut |ell, mvals| {
        let mut prod = QPoly::one();
        for j in 0..r {
            for i in 0..=j {
                let q = qbinom(*mvals.get(i, j), *ell.get(i, j));
                if q.is_one() {
                    continue;
                }
                prod = &prod * &q;
            }
        }
        ch.add(l_array_weight(lambda, ell), prod);
    });
    ch
}

/// Character of W(lambda) aggregated directly from the basis stream:
/// each element contributes `t^grade` at its weight. Independent of the
/// fermionic route except for sharing the admissibility bounds.
pub fn character_from_basis(lambda: &DominantWeight, parallel: bool) -> GradedCharacter {
    let table = fold_basis_elements(
        lambda,
        parallel,
        BTreeMap::<WeightVector, QPoly>::new,
        |table, b| {
            table
                .entry(b.weight().clone())
                .or_insert_with(QPoly::zero)
                .add_term(b.grade() as usize, &BigInt::from(1));
        },
        |mut a, b| {
            for (w, p) in b {
                let entry = a.entry(w).or_insert_with(QPoly::zero);
                *entry = &*entry + &p;
            }
            a
        },
    );
    GradedCharacter {
        rank: lambda.rank(),
        table,
    }
}

/// Classical character of the irreducible V(lambda) via pattern branching.
pub fn classical_character(lambda: &DominantWeight) -> ClassicalCharacter {
    ClassicalCharacter {
        rank: lambda.rank(),
        table: gt::gt_weight_multiplicities(lambda),
    }
}

pub use gt::weyl_dim;

/// Result of the triangular decomposition: `ch = sum c_xi(t) ch V(lambda_xi)`
/// with the partitions lifted into the size class of the leading term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub rank: usize,
    pub box_count: i64,
    pub terms: BTreeMap<Partition, QPoly>,
}

impl Decomposition {
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(xi, c)| json!({"xi": xi.parts(), "poly": poly_json(c)}))
                .collect(),
        )
    }
}

fn lex_greatest_maximal(table: &BTreeMap<WeightVector, QPoly>) -> Option<WeightVector> {
    let keys: Vec<&WeightVector> = table.keys().collect();
    for cand in keys.iter().rev() {
        let dominated = keys
            .iter()
            .any(|other| *other != *cand && dominates(other, cand));
        if !dominated {
            return Some((*cand).clone());
        }
    }
    None
}

/// Peels off classical characters of irreducibles at dominance-maximal
/// weights (ties between incomparable maxima broken lexicographically on
/// the omega-coordinates) until the table is empty. Errors signal an input
/// that is not a genuine module character.
pub fn decompose_graded(ch: &GradedCharacter) -> Result<Decomposition, CharError> {
    let rank = ch.rank();
    let mut work = ch.table.clone();
    let mut terms: BTreeMap<Partition, QPoly> = BTreeMap::new();
    let mut box_count: Option<i64> = None;

    while let Some(mu) = lex_greatest_maximal(&work) {
        if !mu.is_dominant() {
            return Err(CharError::NonDominantMaximal(mu.coords().to_vec()));
        }
        let c = work.get(&mu).expect("maximal weight is in support").clone();
        if !c.has_nonnegative_coeffs() {
            return Err(CharError::NegativeCoefficient(mu.coords().to_vec()));
        }
        let lam = DominantWeight::new(mu.coords().to_vec()).expect("dominant by check");
        let target = *box_count.get_or_insert(lam.box_count());
        let diff = target - lam.box_count();
        if diff < 0 || diff % (rank as i64 + 1) != 0 {
            return Err(CharError::SizeLift);
        }
        let xi = weight_to_partition(&lam)
            .shifted(diff / (rank as i64 + 1), rank + 1)
            .expect("shift preserves monotonicity")
            .normalized()
            ;
        for (nu, mult) in classical_character(&lam).iter() {
            let delta = c.scaled(&BigInt::from(mult.clone()));
            let entry = work.entry(nu.clone()).or_insert_with(QPoly::zero);
            *entry = &*entry - &delta;
            if !entry.has_nonnegative_coeffs() {
                return Err(CharError::NegativeCoefficient(nu.coords().to_vec()));
            }
        }
        work.retain(|_, v| !v.is_zero());
        terms.insert(xi, c);
    }

    Ok(Decomposition {
        rank,
        box_count: box_count.unwrap_or(0),
        terms,
    })
}

/// Rebuilds `sum c_xi(t) ch V(lambda_xi)` from a decomposition; the result
/// must reproduce the decomposed character exactly.
pub fn reconstruct_decomposition(d: &Decomposition) -> GradedCharacter {
    let mut ch = GradedCharacter::new(d.rank);
    for (xi, c) in &d.terms {
        let lam = crate::lattice::partition_to_weight(xi, d.rank)
            .expect("decomposition partitions fit the rank");
        for (nu, mult) in classical_character(&lam).iter() {
            ch.add(nu.clone(), c.scaled(&BigInt::from(mult.clone())));
        }
    }
    ch
}

/// Candidate interpretations of the Kostka indexing in the graded
/// multiplicity identity. The first two read the first index as the
/// partition attached to the weight, the next two as the bare coefficient
/// vector (sorted), and the last two flip both indices by transposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KostkaReading {
    WeightPartitionCharge,
    WeightPartitionCocharge,
    CoefficientVectorCharge,
    CoefficientVectorCocharge,
    TransposedCharge,
    TransposedCocharge,
}

impl KostkaReading {
    pub const ALL: [KostkaReading; 6] = [
        KostkaReading::WeightPartitionCharge,
        KostkaReading::WeightPartitionCocharge,
        KostkaReading::CoefficientVectorCharge,
        KostkaReading::CoefficientVectorCocharge,
        KostkaReading::TransposedCharge,
        KostkaReading::TransposedCocharge,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            KostkaReading::WeightPartitionCharge => "weight-partition-charge",
            KostkaReading::WeightPartitionCocharge => "weight-partition-cocharge",
            KostkaReading::CoefficientVectorCharge => "coefficient-vector-charge",
            KostkaReading::CoefficientVectorCocharge => "coefficient-vector-cocharge",
            KostkaReading::TransposedCharge => "transposed-charge",
            KostkaReading::TransposedCocharge => "transposed-cocharge",
        }
    }

    fn statistic(&self) -> Statistic {
        match self {
            KostkaReading::WeightPartitionCharge
            | KostkaReading::CoefficientVectorCharge
            | KostkaReading::TransposedCharge => Statistic::Charge,
            _ => Statistic::Cocharge,
        }
    }

    /// The predicted coefficient of `ch V(lambda_xi)` in `ch_t W(lambda)`.
    pub fn predicted_coefficient(&self, lambda: &DominantWeight, xi: &Partition) -> QPoly {
        let a = weight_to_partition(lambda).normalized();
        let (shape, content) = match self {
            KostkaReading::WeightPartitionCharge | KostkaReading::WeightPartitionCocharge => {
                (a, transpose(xi))
            }
            KostkaReading::CoefficientVectorCharge | KostkaReading::CoefficientVectorCocharge => {
                let mut v = lambda.coeffs().to_vec();
                v.sort_unstable_by(|x, y| y.cmp(x));
                while v.last() == Some(&0) {
                    v.pop();
                }
                (
                    Partition::new(v).expect("sorted coefficients"),
                    transpose(xi),
                )
            }
            KostkaReading::TransposedCharge | KostkaReading::TransposedCocharge => {
                (transpose(xi), transpose(&a))
            }
        };
        kostka_with_statistic(&shape, &content, self.statistic())
    }
}

#[derive(Clone, Debug)]
pub struct ReadingOutcome {
    pub reading: KostkaReading,
    pub matches: bool,
    pub first_mismatch: Option<String>,
}

/// Report of the Kostka identity check for one weight.
#[derive(Clone, Debug)]
pub struct KostkaReport {
    pub rank: usize,
    pub lambda: Vec<i64>,
    pub box_count: i64,
    pub top_grade: usize,
    pub leading_coefficient_is_one: bool,
    pub decomposition: Decomposition,
    pub readings: Vec<ReadingOutcome>,
    pub selected: Option<KostkaReading>,
}

impl KostkaReport {
    pub fn pass(&self) -> bool {
        self.selected.is_some() && self.leading_coefficient_is_one
    }

    pub fn to_json(&self) -> Value {
        json!({
            "rank": self.rank,
            "lambda": self.lambda,
            "box_count": self.box_count,
            "top_grade": self.top_grade,
            "leading_coefficient_is_one": self.leading_coefficient_is_one,
            "decomposition": self.decomposition.to_json(),
            "readings": self.readings.iter().map(|o| json!({
                "reading": o.reading.name(),
                "matches": o.matches,
                "first_mismatch": o.first_mismatch,
            })).collect::<Vec<_>>(),
            "selected_reading": self.selected.map(|s| s.name()),
            "pass": self.pass(),
        })
    }
}

/// Decomposes the fermionic character and compares every coefficient with
/// the Kostka polynomials under each candidate reading, in declared order;
/// the first fully matching reading is selected. The report is the ground
/// truth for the index normalization.
pub fn verify_kostka(lambda: &DominantWeight) -> KostkaReport {
    let ch = fermionic_character(lambda);
    let decomposition =
        decompose_graded(&ch).expect("fermionic character is a genuine module character");
    let rank = lambda.rank();
    let leading = weight_to_partition(lambda).normalized();
    let leading_coefficient_is_one = decomposition
        .terms
        .get(&leading)
        .map(|c| c.is_one())
        .unwrap_or(false);

    let candidates = partitions_of_size(decomposition.box_count, rank + 1);
    let mut readings = Vec::new();
    let mut selected = None;
    for reading in KostkaReading::ALL {
        let mut first_mismatch = None;
        for xi in &candidates {
            let actual = decomposition
                .terms
                .get(&xi.normalized())
                .cloned()
                .unwrap_or_else(QPoly::zero);
            let predicted = reading.predicted_coefficient(lambda, xi);
            if actual != predicted {
                first_mismatch = Some(format!(
                    "xi = {xi}: decomposition has {actual}, reading predicts {predicted}"
                ));
                break;
            }
        }
        let matches = first_mismatch.is_none();
        if matches && selected.is_none() {
            selected = Some(reading);
        }
        readings.push(ReadingOutcome {
            reading,
            matches,
            first_mismatch,
        });
    }

    KostkaReport {
        rank,
        lambda: lambda.coeffs().to_vec(),
        box_count: decomposition.box_count,
        top_grade: ch.top_grade().unwrap_or(0),
        leading_coefficient_is_one,
        decomposition,
        readings,
        selected,
    }
}

/// Report of the tensor-factorization identity at t = 1.
#[derive(Clone, Debug)]
pub struct DemazureReport {
    pub rank: usize,
    pub lambda: Vec<i64>,
    pub pass: bool,
    pub mass: BigUint,
    pub mismatch: Option<String>,
}

impl DemazureReport {
    pub fn to_json(&self) -> Value {
        json!({
            "rank": self.rank,
            "lambda": self.lambda,
            "pass": self.pass,
            "mass": ubig_json(&self.mass),
            "mismatch": self.mismatch,
        })
    }
}

/// Checks that the t = 1 specialization of the graded character of
/// W(lambda) equals the product of the classical characters of the
/// fundamental factors, pointwise on weights.
pub fn verify_demazure_factorization(lambda: &DominantWeight) -> DemazureReport {
    let rank = lambda.rank();
    let lhs = fermionic_character(lambda).eval_at_one();
    let mut rhs = ClassicalCharacter::trivial(rank);
    for i in 1..=rank {
        let m = lambda.coeff(i);
        if m > 0 {
            let f = classical_character(&DominantWeight::fundamental(rank, i));
            rhs = rhs.product(&f.pow(m));
        }
    }
    let pass = lhs == rhs;
    let mismatch = if pass {
        None
    } else {
        let mut weights: Vec<&WeightVector> = lhs.table.keys().chain(rhs.table.keys()).collect();
        weights.sort();
        weights.dedup();
        weights
            .into_iter()
            .find(|w| lhs.get(w) != rhs.get(w))
            .map(|w| {
                format!(
                    "weight {w}: factorized {} vs graded {}",
                    rhs.get(w),
                    lhs.get(w)
                )
            })
    };
    DemazureReport {
        rank,
        lambda: lambda.coeffs().to_vec(),
        pass,
        mass: lhs.mass(),
        mismatch,
    }
}
