use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::QPolynomial;

/// Semistandard Young tableau in English notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

pub(crate) fn check_partition(p: &[u32]) -> Result<()> {
    if p.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NotAPartition(p.to_vec()));
    }
    Ok(())
}

fn trim(p: &[u32]) -> Vec<u32> {
    let mut v = p.to_vec();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let rows: Vec<Vec<u32>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        let shape: Vec<u32> = rows.iter().map(|r| r.len() as u32).collect();
        check_partition(&shape)?;
        for (i, row) in rows.iter().enumerate() {
            if row.contains(&0) {
                return Err(Error::NotSemistandard(format!("row {i} has a zero entry")));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::NotSemistandard(format!("row {i} decreases")));
            }
            if i > 0 {
                let above = &rows[i - 1];
                if row.iter().zip(above).any(|(b, a)| b <= a) {
                    return Err(Error::NotSemistandard(format!(
                        "column strictness fails in row {i}"
                    )));
                }
            }
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<u32> {
        self.rows.iter().map(|r| r.len() as u32).collect()
    }

    /// Number of entries equal to `1, 2, ..., max`.
    pub fn content(&self) -> Vec<u32> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0) as usize;
        let mut c = vec![0u32; max];
        for &x in self.rows.iter().flatten() {
            c[x as usize - 1] += 1;
        }
        c
    }

    /// Rows read left to right, from the bottom row up.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().rev().flatten().copied().collect()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        f.write_str(&rows.join(" / "))
    }
}

/// Lascoux–Schützenberger charge of a word with partition content.
///
/// Standard subwords are peeled off one at a time: start at the rightmost
/// unused `1`, then look leftwards (cyclically) for `2`, `3`, ...; each wrap
/// around the end raises the index by one. The charge is the sum of the
/// indices.
pub fn charge_of_word(word: &[u32]) -> Result<u32> {
    let max = word.iter().copied().max().unwrap_or(0) as usize;
    let mut content = vec![0u32; max];
    for &x in word {
        if x == 0 {
            return Err(Error::NotAPartition(vec![0]));
        }
        content[x as usize - 1] += 1;
    }
    check_partition(&content)?;
    let n = word.len();
    let mut used = vec![false; n];
    let mut total = 0;
    let mut remaining = n;
    while remaining > 0 {
        let letters = (1..=max as u32)
            .take_while(|&v| (0..n).any(|i| !used[i] && word[i] == v))
            .count() as u32;
        let mut pos = (0..n)
            .rev()
            .find(|&i| !used[i] && word[i] == 1)
            .expect("partition content has a 1");
        used[pos] = true;
        remaining -= 1;
        let mut index = 0;
        for v in 2..=letters {
            let left = (0..pos).rev().find(|&i| !used[i] && word[i] == v);
            pos = match left {
                Some(i) => i,
                None => {
                    index += 1;
                    (pos + 1..n)
                        .rev()
                        .find(|&i| !used[i] && word[i] == v)
                        .expect("letter present")
                }
            };
            used[pos] = true;
            remaining -= 1;
            total += index;
        }
    }
    Ok(total)
}

pub fn charge(t: &Tableau) -> Result<u32> {
    check_partition(&t.content())?;
    charge_of_word(&t.reading_word())
}

/// Semistandard tableaux of the given shape and content, built by adding
/// the letters `1, 2, ...` as horizontal strips.
pub fn ssyt(shape: &[u32], content: &[u32]) -> Result<Vec<Tableau>> {
    check_partition(shape)?;
    let shape = trim(shape);
    let (s, c) = (shape.iter().sum::<u32>(), content.iter().sum::<u32>());
    if s != c {
        return Err(Error::SizeMismatch {
            shape: s,
            content: c,
        });
    }

    fn strips(
        shape: &[u32],
        cur: &[u32],
        row: usize,
        left: u32,
        next: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if row == shape.len() {
            if left == 0 {
                out.push(next.clone());
            }
            return;
        }
        let base = cur.get(row).copied().unwrap_or(0);
        let cap = if row == 0 {
            shape[0]
        } else {
            shape[row].min(cur.get(row - 1).copied().unwrap_or(0))
        };
        for extra in 0..=left.min(cap.saturating_sub(base)) {
            next.push(base + extra);
            strips(shape, cur, row + 1, left - extra, next, out);
            next.pop();
        }
    }

    fn fill(
        shape: &[u32],
        content: &[u32],
        letter: usize,
        rows: &mut [Vec<u32>],
        out: &mut Vec<Tableau>,
    ) {
        if letter == content.len() {
            out.push(Tableau {
                rows: rows.to_vec(),
            });
            return;
        }
        let cur: Vec<u32> = rows.iter().map(|r| r.len() as u32).collect();
        let mut options = Vec::new();
        strips(
            shape,
            &cur,
            0,
            content[letter],
            &mut Vec::new(),
            &mut options,
        );
        for new in options {
            let mut next_rows = rows.to_vec();
            for (i, &len) in new.iter().enumerate() {
                if i == next_rows.len() {
                    next_rows.push(Vec::new());
                }
                let r = &mut next_rows[i];
                while (r.len() as u32) < len {
                    r.push(letter as u32 + 1);
                }
            }
            while next_rows.last().is_some_and(Vec::is_empty) {
                next_rows.pop();
            }
            fill(shape, content, letter + 1, &mut next_rows, out);
        }
    }

    let mut out = Vec::new();
    fill(&shape, content, 0, &mut [], &mut out);
    out.sort();
    Ok(out)
}

/// `sum_T q^charge(T)` over semistandard tableaux of the given shape and
/// content.
pub fn kostka_charge(shape: &[u32], content: &[u32]) -> Result<QPolynomial> {
    check_partition(content)?;
    let content = trim(content);
    let mut out = QPolynomial::zero();
    for t in ssyt(shape, &content)? {
        out.add_term(charge(&t)?, BigInt::from(1));
    }
    Ok(out)
}
