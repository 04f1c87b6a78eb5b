//! Semistandard tableaux, the Lascoux-Schutzenberger charge statistic, and
//! Kostka polynomials computed as charge generating functions.

use crate::lattice::Partition;
use crate::qpoly::QPoly;
use num_bigint::BigInt;
use serde::Serialize;

/// Filling of a partition shape: rows weakly increasing, columns strictly
/// increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<i64>>,
}

impl Tableau {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Multiset of entries as a count vector indexed by letter - 1.
    pub fn content(&self, letters: usize) -> Vec<i64> {
        let mut counts = vec![0i64; letters];
        for row in &self.rows {
            for &v in row {
                counts[(v - 1) as usize] += 1;
            }
        }
        counts
    }

    /// Row reading word: rows bottom to top, each left to right.
    pub fn reading_word(&self) -> Vec<i64> {
        let mut word = Vec::new();
        for row in self.rows.iter().rev() {
            word.extend_from_slice(row);
        }
        word
    }
}

/// Enumerates all semistandard tableaux of the given shape and content
/// (content entry `k` counts the letter `k+1`).
pub fn enumerate_ssyt(shape: &Partition, content: &[i64]) -> Vec<Tableau> {
    let shape = shape.normalized();
    let total: i64 = content.iter().sum();
    if shape.size() != total || content.iter().any(|&c| c < 0) {
        return Vec::new();
    }
    let nrows = shape.len();
    let letters = content.len();
    let mut rows: Vec<Vec<i64>> = (0..nrows)
        .map(|i| Vec::with_capacity(shape.part(i) as usize))
        .collect();
    let mut remaining = content.to_vec();
    let mut out = Vec::new();

    fn rec(
        shape: &Partition,
        letters: usize,
        row: usize,
        col: usize,
        rows: &mut Vec<Vec<i64>>,
        remaining: &mut Vec<i64>,
        out: &mut Vec<Tableau>,
    ) {
        let nrows = shape.len();
        if row == nrows {
            out.push(Tableau {
                shape: shape.clone(),
                rows: rows.clone(),
            });
            return;
        }
        if col == shape.part(row) as usize {
            rec(shape, letters, row + 1, 0, rows, remaining, out);
            return;
        }
        let min_left = if col > 0 { rows[row][col - 1] } else { 1 };
        let min_above = if row > 0 { rows[row - 1][col] + 1 } else { 1 };
        let lo = min_left.max(min_above);
        for v in lo..=(letters as i64) {
            if remaining[(v - 1) as usize] == 0 {
                continue;
            }
            remaining[(v - 1) as usize] -= 1;
            rows[row].push(v);
            rec(shape, letters, row, col + 1, rows, remaining, out);
            rows[row].pop();
            remaining[(v - 1) as usize] += 1;
        }
    }

    if nrows == 0 {
        if total == 0 {
            out.push(Tableau {
                shape,
                rows: Vec::new(),
            });
        }
        return out;
    }
    rec(
        &shape,
        letters,
        0,
        0,
        &mut rows,
        &mut remaining,
        &mut out,
    );
    out
}

/// Charge of a standard word (each letter exactly once): letter 1 gets
/// index 0, and letter v+1 gets the index of v, plus one when it sits to
/// the right of v.
fn charge_standard(positions: &[usize]) -> i64 {
    // positions[v] = position of letter v+1 in the ambient word
    let mut charge = 0i64;
    let mut index = 0i64;
    for v in 1..positions.len() {
        if positions[v] > positions[v - 1] {
            index += 1;
        }
        charge += index;
    }
    charge
}

/// Lascoux-Schutzenberger charge of a word with partition content:
/// repeatedly extract a standard subword (rightmost 1, then each next
/// letter scanning leftward cyclically) and sum the standard charges.
pub fn charge_of_word(word: &[i64]) -> i64 {
    let mut alive: Vec<bool> = vec![true; word.len()];
    let mut remaining = word.len();
    let mut total = 0i64;
    while remaining > 0 {
        // rightmost live 1
        let start = (0..word.len())
            .rev()
            .find(|&p| alive[p] && word[p] == 1)
            .expect("content must be a partition: letter 1 present");
        let mut positions = vec![start];
        let mut cur = start;
        let mut target = 2i64;
        loop {
            // scan left cyclically for the next letter
            let n = word.len();
            let mut found = None;
            for step in 1..=n {
                let p = (cur + n - step) % n;
                if alive[p] && word[p] == target {
                    found = Some(p);
                    break;
                }
            }
            match found {
                Some(p) => {
                    positions.push(p);
                    cur = p;
                    target += 1;
                }
                None => break,
            }
        }
        for &p in &positions {
            alive[p] = false;
        }
        remaining -= positions.len();
        total += charge_standard(&positions);
    }
    total
}

pub fn charge(tableau: &Tableau) -> i64 {
    charge_of_word(&tableau.reading_word())
}

/// Which charge normalization a Kostka polynomial uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Statistic {
    Charge,
    /// `cocharge = n(content) - charge`.
    Cocharge,
}

/// Kostka polynomial `K_{shape, content}(t)` as the charge generating
/// function over semistandard tableaux. Returns zero when the sizes differ.
pub fn kostka(shape: &Partition, content: &Partition) -> QPoly {
    kostka_with_statistic(shape, content, Statistic::Charge)
}

pub fn kostka_with_statistic(shape: &Partition, content: &Partition, stat: Statistic) -> QPoly {
    if shape.size() != content.size() {
        return QPoly::zero();
    }
    let content_counts: Vec<i64> = content.normalized().parts().to_vec();
    let n_stat = content.n_stat();
    let mut acc = QPoly::zero();
    for t in enumerate_ssyt(shape, &content_counts) {
        let c = charge(&t);
        let deg = match stat {
            Statistic::Charge => c,
            Statistic::Cocharge => n_stat - c,
        };
        assert!(deg >= 0, "statistic out of range");
        acc.add_term(deg as usize, &BigInt::from(1));
    }
    acc
}

/// All partitions of `n` with at most `max_parts` parts.
pub fn partitions_of_size(n: i64, max_parts: usize) -> Vec<Partition> {
    fn rec(n: i64, max_part: i64, slots: usize, cur: &mut Vec<i64>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition::new(cur.clone()).expect("built decreasing"));
            return;
        }
        if slots == 0 {
            return;
        }
        let hi = max_part.min(n);
        for p in (1..=hi).rev() {
            cur.push(p);
            rec(n - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n >= 0 {
        rec(n, n, max_parts, &mut Vec::new(), &mut out);
    }
    out
}
