//! Local-confluence checks for a presentation's rewrite rules.
//!
//! Two independent routes: reducing whole words with leftmost-first and
//! rightmost-first strategies, and resolving every critical pair (overlap or
//! inclusion of two left-hand sides). Divergence is reported, not raised.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Element, Gen, Presentation, Strategy, Word};
use crate::error::Result;

/// An overlap word with the `(position, rule index)` of both redexes.
pub type CriticalPair = (Word, (usize, usize), (usize, usize));

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divergence {
    pub word: Word,
    pub leftmost: Element,
    pub rightmost: Element,
}

#[derive(Clone, Debug)]
pub struct ConfluenceReport {
    pub presentation: String,
    pub words_checked: usize,
    pub critical_pairs_checked: usize,
    pub divergence: Option<Divergence>,
}

impl ConfluenceReport {
    pub fn is_confluent(&self) -> bool {
        self.divergence.is_none()
    }
}

impl Presentation {
    /// Compares both strategies on one word.
    pub fn strategies_agree(&self, w: &Word) -> Result<Option<Divergence>> {
        let e = Element::from_word(w.clone());
        let left = self.reduce(&e, Strategy::Leftmost)?;
        let right = self.reduce(&e, Strategy::Rightmost)?;
        Ok((left != right).then(|| Divergence {
            word: w.clone(),
            leftmost: left,
            rightmost: right,
        }))
    }

    /// All words of length `1..=max_len` under both strategies, then every
    /// critical pair. Stops at the first divergence.
    pub fn check_local_confluence(&self, max_len: usize) -> Result<ConfluenceReport> {
        let mut report = ConfluenceReport {
            presentation: self.name().to_string(),
            words_checked: 0,
            critical_pairs_checked: 0,
            divergence: None,
        };
        let n = self.generators().len() as Gen;
        let mut frontier = vec![Word::empty()];
        for _ in 0..max_len {
            let mut next = Vec::with_capacity(frontier.len() * n as usize);
            for w in &frontier {
                for g in 0..n {
                    let mut v = w.clone();
                    v.push(g);
                    report.words_checked += 1;
                    if let Some(d) = self.strategies_agree(&v)? {
                        report.divergence = Some(d);
                        return Ok(report);
                    }
                    next.push(v);
                }
            }
            frontier = next;
        }
        self.resolve_critical_pairs(&mut report)?;
        Ok(report)
    }

    /// `count` uniformly random words of length `len`, seeded.
    pub fn check_random_words(
        &self,
        len: usize,
        count: usize,
        seed: u64,
    ) -> Result<ConfluenceReport> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = self.generators().len() as Gen;
        let mut report = ConfluenceReport {
            presentation: self.name().to_string(),
            words_checked: 0,
            critical_pairs_checked: 0,
            divergence: None,
        };
        for _ in 0..count {
            let w: Word = (0..len).map(|_| rng.gen_range(0..n)).collect();
            report.words_checked += 1;
            if let Some(d) = self.strategies_agree(&w)? {
                report.divergence = Some(d);
                break;
            }
        }
        Ok(report)
    }

    /// Every ambiguity `(word, pos₁, rule₁, pos₂, rule₂)` between two rules.
    pub fn critical_pairs(&self) -> Vec<CriticalPair> {
        let rules = self.rules();
        let mut out = Vec::new();
        for (i, r1) in rules.iter().enumerate() {
            let u = r1.lhs.letters();
            for (k, r2) in rules.iter().enumerate() {
                let v = r2.lhs.letters();
                // proper overlap: suffix of u == prefix of v
                for ov in 1..u.len().min(v.len()) {
                    if u[u.len() - ov..] == v[..ov] {
                        let w = Word::from_slice(u).concat(&Word::from_slice(&v[ov..]));
                        out.push((w, (0, i), (u.len() - ov, k)));
                    }
                }
                // inclusion: v strictly inside u
                if i != k && v.len() < u.len() {
                    for p in 0..=u.len() - v.len() {
                        if u[p..p + v.len()] == *v {
                            out.push((Word::from_slice(u), (0, i), (p, k)));
                        }
                    }
                }
            }
        }
        out
    }

    fn resolve_critical_pairs(&self, report: &mut ConfluenceReport) -> Result<()> {
        for (w, (p1, r1), (p2, r2)) in self.critical_pairs() {
            report.critical_pairs_checked += 1;
            let a = self.normal_form(&self.rewrite_at(&w, p1, &self.rules()[r1]))?;
            let b = self.normal_form(&self.rewrite_at(&w, p2, &self.rules()[r2]))?;
            if a != b {
                report.divergence = Some(Divergence {
                    word: w,
                    leftmost: a,
                    rightmost: b,
                });
                return Ok(());
            }
        }
        Ok(())
    }
}
