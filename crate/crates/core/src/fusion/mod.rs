//! Brute-force oracle: fusion products of evaluation modules at fundamental
//! weights, built as explicit exact-rational linear algebra. The grade
//! filtration of the tensor product is grown by span closure under the
//! current-algebra generators and its graded character is read off from the
//! per-grade, per-weight dimension increments.
//!
//! This path shares no code with the combinatorial character computations,
//! which is what makes the equality of the two sides a meaningful check.

pub mod linalg;

use crate::charring::GradedCharacter;
use crate::lattice::{DominantWeight, WeightVector};
use crate::qpoly::QPoly;
use linalg::{rat, Echelon, Rat, RatMatrix};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FusionError {
    #[error("fusion needs at least one factor")]
    NoFactors,
    #[error("evaluation points must be pairwise distinct")]
    DuplicatePoints,
    #[error("all factors must share one rank")]
    RankMismatch,
    #[error("closure stabilized at dimension {reached}, below the full tensor dimension {expected}")]
    ClosureStalled { reached: usize, expected: usize },
    #[error("filtration exceeded the safety grade bound {0}")]
    GradeBoundExceeded(usize),
    #[error("invalid fusion spec: {0}")]
    BadSpec(String),
}

/// Chevalley generator ids, 1-based simple index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    Raise(usize),
    Lower(usize),
    Cartan(usize),
}

impl Generator {
    pub fn all(rank: usize) -> Vec<Generator> {
        let mut out = Vec::with_capacity(3 * rank);
        for i in 1..=rank {
            out.push(Generator::Raise(i));
            out.push(Generator::Lower(i));
            out.push(Generator::Cartan(i));
        }
        out
    }
}

/// Finite-dimensional module given by a labeled basis and exact matrices
/// for the Chevalley generators.
#[derive(Clone, Debug)]
pub struct ExplicitModule {
    rank: usize,
    dim: usize,
    labels: Vec<Vec<usize>>,
    highest_index: usize,
    raise: Vec<RatMatrix>,
    lower: Vec<RatMatrix>,
    cartan: Vec<RatMatrix>,
}

impl ExplicitModule {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[Vec<usize>] {
        &self.labels
    }

    pub fn highest_index(&self) -> usize {
        self.highest_index
    }

    pub fn matrix(&self, g: Generator) -> &RatMatrix {
        match g {
            Generator::Raise(i) => &self.raise[i - 1],
            Generator::Lower(i) => &self.lower[i - 1],
            Generator::Cartan(i) => &self.cartan[i - 1],
        }
    }

    /// Weight of the basis vector `b` in the omega-basis, read off the
    /// diagonal Cartan matrices.
    pub fn weight_of(&self, b: usize) -> WeightVector {
        WeightVector::new(
            (1..=self.rank)
                .map(|i| {
                    let v = self.cartan[i - 1].get(b, b);
                    assert!(v.is_integer());
                    i64::try_from(v.to_integer()).expect("small eigenvalue")
                })
                .collect(),
        )
    }

    /// Checks the defining matrix relations: diagonal commuting Cartan
    /// matrices, `[x_i^+, x_i^-] = h_i`, `[x_i^+, x_j^-] = 0` for distinct
    /// rows, and the eigenvalue relations `[h_i, x_j^pm] = pm a_{ij} x_j^pm`.
    pub fn validate(&self) -> Result<(), String> {
        for i in 1..=self.rank {
            if !self.cartan[i - 1].is_diagonal() {
                return Err(format!("h_{i} is not diagonal"));
            }
            for j in 1..=self.rank {
                if !self.cartan[i - 1].commutator(&self.cartan[j - 1]).is_zero() {
                    return Err(format!("h_{i} and h_{j} do not commute"));
                }
            }
        }
        for i in 1..=self.rank {
            for j in 1..=self.rank {
                let com = self.raise[i - 1].commutator(&self.lower[j - 1]);
                if i == j {
                    if com != self.cartan[i - 1] {
                        return Err(format!("[x_{i}^+, x_{i}^-] != h_{i}"));
                    }
                } else if !com.is_zero() {
                    return Err(format!("[x_{i}^+, x_{j}^-] != 0"));
                }
            }
        }
        for i in 1..=self.rank {
            for j in 1..=self.rank {
                let a = if i == j {
                    2
                } else if i.abs_diff(j) == 1 {
                    -1
                } else {
                    0
                };
                let plus = self.cartan[i - 1].commutator(&self.raise[j - 1]);
                if plus != self.raise[j - 1].scaled(&rat(a)) {
                    return Err(format!("[h_{i}, x_{j}^+] != {a} x_{j}^+"));
                }
                let minus = self.cartan[i - 1].commutator(&self.lower[j - 1]);
                if minus != self.lower[j - 1].scaled(&rat(-a)) {
                    return Err(format!("[h_{i}, x_{j}^-] != {} x_{j}^-", -a));
                }
            }
        }
        Ok(())
    }
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// The fundamental module: the i-th exterior power of the defining
/// representation, with basis the size-i subsets of `{1, ..., r+1}` in
/// lexicographic order and highest weight vector `e_{1..i}`.
pub fn build_fundamental(rank: usize, i: usize) -> ExplicitModule {
    assert!((1..=rank).contains(&i), "fundamental index out of range");
    let labels = subsets_of_size(rank + 1, i);
    let dim = labels.len();
    let index_of: std::collections::HashMap<Vec<usize>, usize> = labels
        .iter()
        .cloned()
        .enumerate()
        .map(|(p, s)| (s, p))
        .collect();

    let mut raise = Vec::new();
    let mut lower = Vec::new();
    let mut cartan = Vec::new();
    for a in 1..=rank {
        let mut xp = RatMatrix::zero(dim, dim);
        let mut xm = RatMatrix::zero(dim, dim);
        let mut h = RatMatrix::zero(dim, dim);
        for (col, s) in labels.iter().enumerate() {
            let has_a = s.contains(&a);
            let has_b = s.contains(&(a + 1));
            // E_{a, a+1}: replace a+1 by a. Adjacent values keep the sorted
            // order, so the wedge sign is +1.
            if has_b && !has_a {
                let mut target = s.clone();
                for v in target.iter_mut() {
                    if *v == a + 1 {
                        *v = a;
                    }
                }
                target.sort_unstable();
                xp.set(index_of[&target], col, Rat::one());
            }
            // E_{a+1, a}: replace a by a+1.
            if has_a && !has_b {
                let mut target = s.clone();
                for v in target.iter_mut() {
                    if *v == a {
                        *v = a + 1;
                    }
                }
                target.sort_unstable();
                xm.set(index_of[&target], col, Rat::one());
            }
            let eig = i64::from(has_a) - i64::from(has_b);
            h.set(col, col, rat(eig));
        }
        raise.push(xp);
        lower.push(xm);
        cartan.push(h);
    }

    let highest: Vec<usize> = (1..=i).collect();
    ExplicitModule {
        rank,
        dim,
        highest_index: index_of[&highest],
        labels,
        raise,
        lower,
        cartan,
    }
}

/// A module together with its evaluation point.
#[derive(Clone, Debug)]
pub struct EvaluationFactor {
    pub module: ExplicitModule,
    pub point: i64,
}

/// Tensor-product bookkeeping for a list of evaluation factors.
pub struct FusionContext {
    rank: usize,
    factors: Vec<EvaluationFactor>,
    dims: Vec<usize>,
    strides: Vec<usize>,
    dim: usize,
    weights: Vec<WeightVector>,
    highest: usize,
}

impl FusionContext {
    pub fn new(factors: Vec<EvaluationFactor>) -> Result<Self, FusionError> {
        if factors.is_empty() {
            return Err(FusionError::NoFactors);
        }
        let rank = factors[0].module.rank();
        if factors.iter().any(|f| f.module.rank() != rank) {
            return Err(FusionError::RankMismatch);
        }
        for (a, fa) in factors.iter().enumerate() {
            for fb in factors.iter().skip(a + 1) {
                if fa.point == fb.point {
                    return Err(FusionError::DuplicatePoints);
                }
            }
        }
        let dims: Vec<usize> = factors.iter().map(|f| f.module.dim()).collect();
        let dim: usize = dims.iter().product();
        let mut strides = vec![1usize; dims.len()];
        for j in (0..dims.len().saturating_sub(1)).rev() {
            strides[j] = strides[j + 1] * dims[j + 1];
        }
        let mut weights = Vec::with_capacity(dim);
        for flat in 0..dim {
            let mut w = WeightVector::zero(rank);
            for (j, f) in factors.iter().enumerate() {
                let idx = flat / strides[j] % dims[j];
                w = w.checked_add(&f.module.weight_of(idx)).expect("same rank");
            }
            weights.push(w);
        }
        let highest = factors
            .iter()
            .enumerate()
            .map(|(j, f)| f.module.highest_index() * strides[j])
            .sum();
        Ok(FusionContext {
            rank,
            factors,
            dims,
            strides,
            dim,
            weights,
            highest,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    /// Highest weight of the tensor product: the sum of the factors'
    /// highest weights.
    pub fn highest_weight(&self) -> DominantWeight {
        DominantWeight::new(self.weights[self.highest].coords().to_vec())
            .expect("sum of dominant weights is dominant")
    }

    /// Matrix of `x tensor t^s` on the whole tensor product:
    /// `sum_j a_j^s (1 x ... x rho_j(x) x ... x 1)`.
    pub fn current_action(&self, g: Generator, s: u32) -> RatMatrix {
        let mut out = RatMatrix::zero(self.dim, self.dim);
        for (j, f) in self.factors.iter().enumerate() {
            let coeff = Rat::from_integer(BigInt::from(f.point).pow(s));
            if coeff.is_zero() {
                continue;
            }
            let slot = f.module.matrix(g);
            for col in 0..self.dim {
                let cj = col / self.strides[j] % self.dims[j];
                for rj in 0..self.dims[j] {
                    let v = slot.get(rj, cj);
                    if v.is_zero() {
                        continue;
                    }
                    let row = (col as i64 + (rj as i64 - cj as i64) * self.strides[j] as i64)
                        as usize;
                    out.add_to(row, col, &(v * &coeff));
                }
            }
        }
        out
    }

    fn weight_of_vector(&self, v: &[Rat]) -> WeightVector {
        let support = v
            .iter()
            .position(|x| !x.is_zero())
            .expect("zero vector has no weight");
        let w = self.weights[support].clone();
        debug_assert!(v
            .iter()
            .enumerate()
            .all(|(i, x)| x.is_zero() || self.weights[i] == w));
        w
    }
}

/// Result of one filtration run.
#[derive(Clone, Debug)]
pub struct FusionOutcome {
    pub character: GradedCharacter,
    pub top_grade: usize,
    /// Cumulative dimension of the filtration after each grade.
    pub cumulative_dims: Vec<usize>,
}

impl FusionOutcome {
    pub fn to_json(&self) -> Value {
        json!({
            "character": self.character.to_json(),
            "top_grade": self.top_grade,
            "cumulative_dims": self.cumulative_dims,
        })
    }
}

/// Computes the graded character of the fusion product by iterated span
/// closure. Grade n is grown by applying grade-s generators (s <= k-1) to
/// the vectors that first appeared at grade n-s, followed by closure under
/// the grade-0 action; the loop stops once the full tensor dimension is
/// reached. Stabilizing below full dimension is an error.
pub fn fusion_graded_character(
    factors: Vec<EvaluationFactor>,
    max_grade: usize,
) -> Result<FusionOutcome, FusionError> {
    let ctx = FusionContext::new(factors)?;
    let k = ctx.factor_count();
    let gens = Generator::all(ctx.rank());
    // generator matrices per grade 0..=k-1
    let action: Vec<Vec<RatMatrix>> = (0..k as u32)
        .map(|s| gens.iter().map(|&g| ctx.current_action(g, s)).collect())
        .collect();

    let mut echelon: BTreeMap<WeightVector, Echelon> = BTreeMap::new();
    let mut rows_at: Vec<Vec<(WeightVector, Vec<Rat>)>> = Vec::new();
    let mut total = 0usize;

    let insert = |echelon: &mut BTreeMap<WeightVector, Echelon>,
                  v: Vec<Rat>,
                  total: &mut usize|
     -> Option<(WeightVector, Vec<Rat>)> {
        if v.iter().all(|x| x.is_zero()) {
            return None;
        }
        let w = ctx.weight_of_vector(&v);
        let e = echelon
            .entry(w.clone())
            .or_insert_with(|| Echelon::new(ctx.dim()));
        let residue = e.try_insert(v)?;
        *total += 1;
        Some((w, residue))
    };

    let mut cumulative_dims = Vec::new();
    let mut empty_streak = 0usize;
    let stall_threshold = k.saturating_sub(1).max(1);

    let mut grade = 0usize;
    loop {
        let mut new_rows: Vec<(WeightVector, Vec<Rat>)> = Vec::new();
        let mut worklist: Vec<Vec<Rat>> = Vec::new();

        if grade == 0 {
            let mut v0 = vec![Rat::zero(); ctx.dim()];
            v0[ctx.highest] = Rat::one();
            if let Some((w, residue)) = insert(&mut echelon, v0, &mut total) {
                worklist.push(residue.clone());
                new_rows.push((w, residue));
            }
        } else {
            for s in 1..=(grade.min(k - 1)) {
                for (_, v) in &rows_at[grade - s] {
                    for mat in &action[s] {
                        let image = mat.mul_vec(v);
                        if let Some((w, residue)) = insert(&mut echelon, image, &mut total) {
                            worklist.push(residue.clone());
                            new_rows.push((w, residue));
                        }
                    }
                }
            }
        }

        // close the new grade level under the grade-0 action
        while let Some(v) = worklist.pop() {
            for mat in &action[0] {
                let image = mat.mul_vec(&v);
                if let Some((w, residue)) = insert(&mut echelon, image, &mut total) {
                    worklist.push(residue.clone());
                    new_rows.push((w, residue));
                }
            }
        }

        let added = new_rows.len();
        rows_at.push(new_rows);
        cumulative_dims.push(total);

        if total == ctx.dim() {
            break;
        }
        empty_streak = if added == 0 { empty_streak + 1 } else { 0 };
        if empty_streak >= stall_threshold {
            return Err(FusionError::ClosureStalled {
                reached: total,
                expected: ctx.dim(),
            });
        }
        if grade >= max_grade {
            return Err(FusionError::GradeBoundExceeded(max_grade));
        }
        grade += 1;
    }

    let mut character = GradedCharacter::new(ctx.rank());
    let mut top_grade = 0usize;
    for (n, rows) in rows_at.iter().enumerate() {
        if !rows.is_empty() && n > top_grade {
            top_grade = n;
        }
        let mut counts: BTreeMap<WeightVector, usize> = BTreeMap::new();
        for (w, _) in rows {
            *counts.entry(w.clone()).or_default() += 1;
        }
        for (w, c) in counts {
            let mut p = QPoly::zero();
            p.add_term(n, &BigInt::from(c));
            character.add(w, p);
        }
    }

    Ok(FusionOutcome {
        character,
        top_grade,
        cumulative_dims,
    })
}

/// Report of the point-independence check: the same factors fused at two
/// different point sets must give identical graded characters.
#[derive(Clone, Debug)]
pub struct PointIndependenceReport {
    pub pass: bool,
    pub points: Vec<i64>,
    pub alt_points: Vec<i64>,
    pub character: GradedCharacter,
    pub alt_character: GradedCharacter,
}

impl PointIndependenceReport {
    pub fn to_json(&self) -> Value {
        json!({
            "pass": self.pass,
            "points": self.points,
            "alt_points": self.alt_points,
            "character": self.character.to_json(),
            "alt_character": self.alt_character.to_json(),
        })
    }
}

pub fn point_independence(
    factors: Vec<EvaluationFactor>,
    alt_points: &[i64],
    max_grade: usize,
) -> Result<PointIndependenceReport, FusionError> {
    if alt_points.len() != factors.len() {
        return Err(FusionError::BadSpec(format!(
            "expected {} alternative points, found {}",
            factors.len(),
            alt_points.len()
        )));
    }
    let points: Vec<i64> = factors.iter().map(|f| f.point).collect();
    let alt_factors: Vec<EvaluationFactor> = factors
        .iter()
        .zip(alt_points)
        .map(|(f, &p)| EvaluationFactor {
            module: f.module.clone(),
            point: p,
        })
        .collect();
    let base = fusion_graded_character(factors, max_grade)?;
    let alt = fusion_graded_character(alt_factors, max_grade)?;
    Ok(PointIndependenceReport {
        pass: base.character == alt.character,
        points,
        alt_points: alt_points.to_vec(),
        character: base.character,
        alt_character: alt.character,
    })
}

/// Parsed CLI-facing fusion description, e.g. `"r=2; factors=w1@0,w1@1,w2@5"`.
/// Points may be omitted (`w1,w1,w2`), in which case `0, 1, ..., k-1` are
/// assigned.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionSpec {
    pub rank: usize,
    pub factors: Vec<(usize, i64)>,
}

impl FusionSpec {
    /// Highest weight of the fusion: the sum of the fundamental weights.
    pub fn lambda(&self) -> DominantWeight {
        let mut coeffs = vec![0i64; self.rank];
        for (i, _) in &self.factors {
            coeffs[i - 1] += 1;
        }
        DominantWeight::new(coeffs).expect("non-negative by construction")
    }

    pub fn points(&self) -> Vec<i64> {
        self.factors.iter().map(|&(_, p)| p).collect()
    }

    /// Builds the evaluation factors (constructing each fundamental module).
    pub fn build(&self) -> Result<Vec<EvaluationFactor>, FusionError> {
        if self.factors.is_empty() {
            return Err(FusionError::NoFactors);
        }
        Ok(self
            .factors
            .iter()
            .map(|&(i, p)| EvaluationFactor {
                module: build_fundamental(self.rank, i),
                point: p,
            })
            .collect())
    }

    /// Replaces the evaluation points.
    pub fn with_points(&self, points: &[i64]) -> Result<FusionSpec, FusionError> {
        if points.len() != self.factors.len() {
            return Err(FusionError::BadSpec(format!(
                "expected {} points, found {}",
                self.factors.len(),
                points.len()
            )));
        }
        Ok(FusionSpec {
            rank: self.rank,
            factors: self
                .factors
                .iter()
                .zip(points)
                .map(|(&(i, _), &p)| (i, p))
                .collect(),
        })
    }
}

impl FromStr for FusionSpec {
    type Err = FusionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut rank: Option<usize> = None;
        let mut raw_factors: Option<String> = None;
        for field in s.split(';') {
            let field = field.trim();
            if field.is_empty() {
                continue;
            }
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| FusionError::BadSpec(format!("expected key=value in {field:?}")))?;
            match key.trim() {
                "r" | "rank" => {
                    rank = Some(value.trim().parse().map_err(|_| {
                        FusionError::BadSpec(format!("bad rank {value:?}"))
                    })?);
                }
                "factors" => raw_factors = Some(value.trim().to_string()),
                other => {
                    return Err(FusionError::BadSpec(format!("unknown field {other:?}")));
                }
            }
        }
        let rank = rank.ok_or_else(|| FusionError::BadSpec("missing rank".into()))?;
        let raw = raw_factors.ok_or_else(|| FusionError::BadSpec("missing factors".into()))?;
        if rank == 0 {
            return Err(FusionError::BadSpec("rank must be positive".into()));
        }

        let mut factors = Vec::new();
        let mut omitted = 0usize;
        for (pos, piece) in raw.split(',').enumerate() {
            let piece = piece.trim();
            let rest = piece
                .strip_prefix('w')
                .ok_or_else(|| FusionError::BadSpec(format!("factor {piece:?} must be w<i>[@point]")))?;
            let (idx_str, point) = match rest.split_once('@') {
                Some((i, p)) => (
                    i,
                    Some(p.trim().parse::<i64>().map_err(|_| {
                        FusionError::BadSpec(format!("bad point in {piece:?}"))
                    })?),
                ),
                None => (rest, None),
            };
            let i: usize = idx_str
                .trim()
                .parse()
                .map_err(|_| FusionError::BadSpec(format!("bad index in {piece:?}")))?;
            if !(1..=rank).contains(&i) {
                return Err(FusionError::BadSpec(format!(
                    "fundamental index {i} out of range for rank {rank}"
                )));
            }
            let point = match point {
                Some(p) => p,
                None => {
                    omitted += 1;
                    pos as i64
                }
            };
            factors.push((i, point));
        }
        if factors.is_empty() {
            return Err(FusionError::BadSpec("empty factor list".into()));
        }
        if omitted != 0 && omitted != factors.len() {
            return Err(FusionError::BadSpec(
                "give points for all factors or for none".into(),
            ));
        }
        Ok(FusionSpec { rank, factors })
    }
}
