use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::{Element, Gen, Grade, Word};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub const DEFAULT_STEP_BUDGET: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub symbol: String,
    /// Z₃ grade in `{0, 1, 2}`.
    pub grade: u8,
    /// Weight in the reduction ordering. Words compare by total weight first,
    /// then lexicographically by generator id.
    pub weight: u32,
}

/// A defining relation `lhs = rhs` as stated, before orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub label: String,
    pub lhs: Element,
    pub rhs: Element,
}

impl Relation {
    /// `lhs - rhs`, the element the relation sets to zero.
    pub fn difference(&self) -> Element {
        &self.lhs - &self.rhs
    }
}

/// An oriented rule `lhs → rhs`; every word of `rhs` is strictly smaller
/// than `lhs` in the presentation's ordering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: Element,
    pub label: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// Generators, their order, and the oriented rules of one algebra.
#[derive(Clone, Debug)]
pub struct Presentation {
    name: String,
    generators: Vec<Generator>,
    relations: Vec<Relation>,
    rules: Vec<RewriteRule>,
    pair_table: Vec<Option<u32>>,
    long_rules: Vec<u32>,
    step_budget: usize,
}

pub struct PresentationBuilder {
    name: String,
    generators: Vec<Generator>,
    relations: Vec<Relation>,
    extra_rules: Vec<RewriteRule>,
    step_budget: usize,
}

impl PresentationBuilder {
    pub fn new(name: impl Into<String>) -> Self {
        PresentationBuilder {
            name: name.into(),
            generators: Vec::new(),
            relations: Vec::new(),
            extra_rules: Vec::new(),
            step_budget: DEFAULT_STEP_BUDGET,
        }
    }

    /// Generators must be added in increasing order.
    pub fn generator(mut self, symbol: &str, grade: u8, weight: u32) -> Self {
        assert!(grade < 3, "grade must be reduced mod 3");
        assert!(self.generators.len() < Gen::MAX as usize);
        self.generators.push(Generator {
            symbol: symbol.to_string(),
            grade,
            weight,
        });
        self
    }

    pub fn relation(mut self, label: impl Into<String>, lhs: Element, rhs: Element) -> Self {
        self.relations.push(Relation {
            label: label.into(),
            lhs,
            rhs,
        });
        self
    }

    /// Parses `lhs = rhs` in expression syntax over the generators added so far.
    pub fn relation_str(self, text: &str) -> Result<Self> {
        let symbols: Vec<&str> = self.generators.iter().map(|g| g.symbol.as_str()).collect();
        let (lhs, rhs) = crate::syntax::parse_relation(text, &symbols)?;
        Ok(self.relation(text, lhs, rhs))
    }

    pub fn relations_str(mut self, texts: &[&str]) -> Result<Self> {
        for t in texts {
            self = self.relation_str(t)?;
        }
        Ok(self)
    }

    /// Installs an already oriented rule, bypassing orientation.
    pub fn rule(mut self, label: impl Into<String>, lhs: Word, rhs: Element) -> Self {
        self.extra_rules.push(RewriteRule {
            lhs,
            rhs,
            label: label.into(),
        });
        self
    }

    pub fn step_budget(mut self, budget: usize) -> Self {
        self.step_budget = budget;
        self
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn build(self) -> Result<Presentation> {
        let mut p = Presentation {
            name: self.name,
            generators: self.generators,
            relations: Vec::new(),
            rules: Vec::new(),
            pair_table: Vec::new(),
            long_rules: Vec::new(),
            step_budget: self.step_budget,
        };
        let mut rules = Vec::new();
        for rel in &self.relations {
            p.validate(&rel.lhs)?;
            p.validate(&rel.rhs)?;
            rules.push(p.orient(rel)?);
        }
        rules.extend(self.extra_rules);
        p.relations = self.relations;
        p.install(rules)?;
        Ok(p)
    }
}

impl Presentation {
    pub fn builder(name: impl Into<String>) -> PresentationBuilder {
        PresentationBuilder::new(name)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn step_budget(&self) -> usize {
        self.step_budget
    }

    pub fn symbol(&self, g: Gen) -> &str {
        &self.generators[g as usize].symbol
    }

    pub fn generator_id(&self, symbol: &str) -> Option<Gen> {
        self.generators
            .iter()
            .position(|g| g.symbol == symbol)
            .map(|i| i as Gen)
    }

    pub fn gen(&self, symbol: &str) -> Element {
        let g = self
            .generator_id(symbol)
            .unwrap_or_else(|| panic!("`{symbol}` is not a generator of `{}`", self.name));
        Element::generator(g)
    }

    pub fn rule_for(&self, lhs: &[Gen]) -> Option<&RewriteRule> {
        self.rules.iter().find(|r| r.lhs.letters() == lhs)
    }

    /// Same presentation with the rule for `lhs` replaced (or added).
    pub fn with_rule(&self, lhs: Word, rhs: Element) -> Result<Presentation> {
        let mut rules: Vec<RewriteRule> = self
            .rules
            .iter()
            .filter(|r| r.lhs != lhs)
            .cloned()
            .collect();
        rules.push(RewriteRule {
            label: format!("replaced {}", self.display_word(&lhs)),
            lhs,
            rhs,
        });
        let mut p = self.clone();
        p.name = format!("{}*", self.name);
        p.install(rules)?;
        Ok(p)
    }

    /// Same presentation without the rule for `lhs`.
    pub fn without_rule(&self, lhs: &[Gen]) -> Result<Presentation> {
        let rules = self
            .rules
            .iter()
            .filter(|r| r.lhs.letters() != lhs)
            .cloned()
            .collect();
        let mut p = self.clone();
        p.name = format!("{}-", self.name);
        p.install(rules)?;
        Ok(p)
    }

    pub fn weight(&self, w: &Word) -> u32 {
        w.letters()
            .iter()
            .map(|&g| self.generators[g as usize].weight)
            .sum()
    }

    fn key(&self, w: &Word) -> (u32, Word) {
        (self.weight(w), w.clone())
    }

    pub fn word_grade(&self, w: &Word) -> u8 {
        let s: u32 = w
            .letters()
            .iter()
            .map(|&g| self.generators[g as usize].grade as u32)
            .sum();
        (s % 3) as u8
    }

    pub fn grade_of(&self, e: &Element) -> Grade {
        let mut grades = e.terms().map(|(w, _)| self.word_grade(w));
        match grades.next() {
            None => Grade::Homogeneous(0),
            Some(g) if grades.all(|h| h == g) => Grade::Homogeneous(g),
            Some(_) => Grade::Mixed,
        }
    }

    pub fn homogeneous_grade(&self, e: &Element) -> Result<u8> {
        match self.grade_of(e) {
            Grade::Homogeneous(g) => Ok(g),
            Grade::Mixed => Err(Error::NonHomogeneous(self.display(e))),
        }
    }

    /// Checks that every letter of `e` belongs to this presentation.
    pub fn validate(&self, e: &Element) -> Result<()> {
        match e.max_generator() {
            Some(g) if g as usize >= self.generators.len() => Err(Error::ForeignGenerator {
                id: g,
                presentation: self.name.clone(),
            }),
            _ => Ok(()),
        }
    }

    /// Solves a relation for its largest word.
    fn orient(&self, rel: &Relation) -> Result<RewriteRule> {
        let diff = rel.difference();
        let lead = diff
            .terms()
            .map(|(w, _)| self.key(w))
            .max()
            .map(|(_, w)| w)
            .ok_or_else(|| Error::InvalidRule {
                rule: rel.label.clone(),
                reason: "relation is trivially satisfied".into(),
            })?;
        let c = diff.coefficient(&lead);
        let c_inv = c.inv().map_err(|e| Error::InvalidRule {
            rule: rel.label.clone(),
            reason: format!("leading coefficient is not a unit: {e}"),
        })?;
        let rhs = &Element::from_word(lead.clone()) - &diff.scale(&c_inv);
        Ok(RewriteRule {
            lhs: lead,
            rhs,
            label: rel.label.clone(),
        })
    }

    fn install(&mut self, rules: Vec<RewriteRule>) -> Result<()> {
        let n = self.generators.len();
        let mut pair_table = vec![None; n * n];
        let mut long_rules = Vec::new();
        for (i, r) in rules.iter().enumerate() {
            self.check_rule(r)?;
            if rules[..i].iter().any(|o| o.lhs == r.lhs) {
                return Err(self.rule_error(r, "duplicate left-hand side"));
            }
            let l = r.lhs.letters();
            if l.len() == 2 {
                pair_table[l[0] as usize * n + l[1] as usize] = Some(i as u32);
            } else {
                long_rules.push(i as u32);
            }
        }
        self.rules = rules;
        self.pair_table = pair_table;
        self.long_rules = long_rules;
        Ok(())
    }

    fn rule_error(&self, r: &RewriteRule, reason: &str) -> Error {
        Error::InvalidRule {
            rule: format!("{} -> {}", self.display_word(&r.lhs), self.display(&r.rhs)),
            reason: reason.to_string(),
        }
    }

    /// Termination: each right-hand word must be smaller and the decrease must
    /// survive multiplication on both sides, i.e. either the weight drops or
    /// the first letter does.
    fn check_rule(&self, r: &RewriteRule) -> Result<()> {
        if r.lhs.len() < 2 {
            return Err(self.rule_error(r, "left-hand side must have length >= 2"));
        }
        self.validate(&Element::from_word(r.lhs.clone()))?;
        self.validate(&r.rhs)?;
        let lw = self.weight(&r.lhs);
        let lg = self.word_grade(&r.lhs);
        for (w, _) in r.rhs.terms() {
            let ww = self.weight(w);
            let first_drops = w.letters().first().is_some_and(|&f| f < r.lhs.letters()[0]);
            if !(ww < lw || (ww == lw && first_drops)) {
                return Err(
                    self.rule_error(r, "right-hand word is not smaller than the left-hand side")
                );
            }
            if self.word_grade(w) != lg {
                return Err(self.rule_error(r, "rule is not grade-homogeneous"));
            }
        }
        Ok(())
    }

    fn rule_at(&self, w: &[Gen], i: usize) -> Option<&RewriteRule> {
        let n = self.generators.len();
        if i + 1 < w.len() {
            if let Some(r) = self.pair_table[w[i] as usize * n + w[i + 1] as usize] {
                return Some(&self.rules[r as usize]);
            }
        }
        self.long_rules
            .iter()
            .map(|&r| &self.rules[r as usize])
            .find(|r| w[i..].starts_with(r.lhs.letters()))
    }

    /// Position and rule of the redex picked by `strategy`.
    pub fn find_redex(&self, w: &Word, strategy: Strategy) -> Option<(usize, &RewriteRule)> {
        let l = w.letters();
        match strategy {
            Strategy::Leftmost => (0..l.len()).find_map(|i| self.rule_at(l, i).map(|r| (i, r))),
            Strategy::Rightmost => (0..l.len())
                .rev()
                .find_map(|i| self.rule_at(l, i).map(|r| (i, r))),
        }
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        self.find_redex(w, Strategy::Leftmost).is_none()
    }

    /// One rewrite step of `rule` applied at `pos` in `w`.
    pub fn rewrite_at(&self, w: &Word, pos: usize, rule: &RewriteRule) -> Element {
        let end = pos + rule.lhs.len();
        let mut out = Element::zero();
        for (rw, rc) in rule.rhs.terms() {
            out.add_term(w.splice(pos, end, rw.letters()), rc.clone());
        }
        out
    }

    pub fn normal_form(&self, e: &Element) -> Result<Element> {
        self.reduce(e, Strategy::Leftmost)
    }

    /// Rewrites until no redex remains. Words are processed from the largest
    /// down; every rewrite produces strictly smaller words, so each word is
    /// visited once and like terms merge before they branch.
    pub fn reduce(&self, e: &Element, strategy: Strategy) -> Result<Element> {
        let mut queue: BTreeMap<(u32, Word), Scalar> = BTreeMap::new();
        for (w, c) in e.terms() {
            queue_add(&mut queue, self.key(w), c.clone());
        }
        let mut out = Element::zero();
        let mut steps = 0usize;
        while let Some(((_, w), c)) = queue.pop_last() {
            match self.find_redex(&w, strategy) {
                None => out.add_term(w, c),
                Some((pos, rule)) => {
                    steps += 1;
                    if steps > self.step_budget {
                        return Err(Error::StepBudgetExceeded(self.step_budget));
                    }
                    let end = pos + rule.lhs.len();
                    for (rw, rc) in rule.rhs.terms() {
                        let nw = w.splice(pos, end, rw.letters());
                        queue_add(&mut queue, self.key(&nw), &c * rc);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Free product of two elements of this presentation; not reduced.
    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element> {
        self.validate(a)?;
        self.validate(b)?;
        Ok(a * b)
    }

    /// `[a, b] = ab - j^{|a||b|} ba`, normal-formed.
    pub fn graded_commutator(&self, a: &Element, b: &Element) -> Result<Element> {
        let ga = self.homogeneous_grade(a)? as i64;
        let gb = self.homogeneous_grade(b)? as i64;
        let e = &(a * b) - &(b * a).scale(&Scalar::j_pow(ga * gb));
        self.normal_form(&e)
    }

    pub fn display_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let mut s = String::new();
        let l = w.letters();
        let mut i = 0;
        while i < l.len() {
            let mut k = 1;
            while i + k < l.len() && l[i + k] == l[i] {
                k += 1;
            }
            if !s.is_empty() {
                s.push('*');
            }
            s.push_str(self.symbol(l[i]));
            if k > 1 {
                let _ = write!(s, "^{k}");
            }
            i += k;
        }
        s
    }

    /// Renders `e` in expression syntax; the output parses back to `e`.
    pub fn display(&self, e: &Element) -> String {
        let mut terms = e
            .terms()
            .map(|(w, c)| format_term(c, &self.display_word(w), w.is_empty()));
        let Some(first) = terms.next() else {
            return "0".into();
        };
        join_signed(first, terms)
    }
}

fn queue_add(queue: &mut BTreeMap<(u32, Word), Scalar>, key: (u32, Word), c: Scalar) {
    if c.is_zero() {
        return;
    }
    match queue.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let s = o.get() + &c;
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

/// `c*word` with the sign pulled out when the coefficient is a plain
/// signed monomial.
pub(crate) fn format_term(c: &Scalar, word: &str, empty_word: bool) -> String {
    if empty_word {
        return c.to_string();
    }
    if c.is_one() {
        return word.to_string();
    }
    if (-c).is_one() {
        return format!("-{word}");
    }
    let simple = c
        .as_monomial()
        .is_some_and(|(cy, _)| cy.jm.is_zero() || cy.re.is_zero());
    if simple {
        format!("{c}*{word}")
    } else {
        format!("({c})*{word}")
    }
}

pub(crate) fn join_signed(first: String, rest: impl Iterator<Item = String>) -> String {
    let mut s = first;
    for t in rest {
        match t.strip_prefix('-') {
            Some(r) => {
                s.push_str(" - ");
                s.push_str(r);
            }
            None => {
                s.push_str(" + ");
                s.push_str(&t);
            }
        }
    }
    s
}
