//! Presentations and their closure to structure constants by a
//! degree-bounded noncommutative completion (deglex order).

use std::collections::{BTreeMap, HashMap, HashSet};

use super::ncpoly::{NcPoly, Word};
use super::table::{AlgebraTable, Generator, TableParts};
use super::AlgebraError;
use crate::linalg::{Field, FieldElem};

/// `k⟨generators⟩ / (relations, [c, g] for c central)`.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub name: String,
    pub field: Field,
    pub generators: Vec<String>,
    pub relations: Vec<NcPoly>,
    /// Elements declared central; expanded to commutators with every generator.
    pub central: Vec<NcPoly>,
    pub degree_bound: usize,
}

impl Presentation {
    /// Explicit relation list with centrality expanded.
    pub fn expanded_relations(&self) -> Vec<NcPoly> {
        let f = &self.field;
        let mut out = self.relations.clone();
        for c in &self.central {
            for g in 0..self.generators.len() {
                let r = c.commutator(f, &NcPoly::generator(f, g));
                if !r.is_zero() {
                    out.push(r);
                }
            }
        }
        out
    }

    pub fn validate(&self) -> Result<(), AlgebraError> {
        let n = self.generators.len();
        let mut seen = HashSet::new();
        for g in &self.generators {
            if g.is_empty() || !seen.insert(g) {
                return Err(AlgebraError::Shape(format!("bad or duplicate generator name {g:?}")));
            }
        }
        for r in self.relations.iter().chain(&self.central) {
            if r.max_generator().is_some_and(|g| g >= n) {
                return Err(AlgebraError::Shape("relation uses an unknown generator".into()));
            }
        }
        let maxdeg = self.expanded_relations().iter().map(NcPoly::max_degree).max().unwrap_or(0);
        if self.degree_bound < maxdeg {
            return Err(AlgebraError::Shape(format!(
                "degree bound {} is below the relation degree {maxdeg}",
                self.degree_bound
            )));
        }
        Ok(())
    }

    /// Same presentation over a larger field of the same characteristic.
    pub fn over(&self, field: &Field) -> Result<Presentation, AlgebraError> {
        if field.p() != self.field.p() || !self.expanded_relations().iter().all(|r| r.in_prime_subfield(&self.field)) {
            return Err(AlgebraError::FieldMismatch(format!(
                "cannot move {} from {} to {}",
                self.name,
                self.field.spec(),
                field.spec()
            )));
        }
        let mut p = self.clone();
        p.field = field.clone();
        Ok(p)
    }

    pub fn word_label(&self, w: &[usize]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let sep = if self.generators.iter().any(|g| g.chars().count() > 1) { "·" } else { "" };
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < w.len() {
            let mut j = i;
            while j < w.len() && w[j] == w[i] {
                j += 1;
            }
            let name = &self.generators[w[i]];
            parts.push(if j - i == 1 { name.clone() } else { format!("{name}^{}", j - i) });
            i = j;
        }
        parts.join(sep)
    }
}

type Key = (usize, Word);

/// Polynomial keyed by deglex order: the last entry is the leading term.
#[derive(Clone, Debug, Default)]
struct DPoly(BTreeMap<Key, FieldElem>);

impl DPoly {
    fn from_nc(p: &NcPoly) -> DPoly {
        DPoly(p.terms().map(|(w, c)| ((w.len(), w.clone()), c)).collect())
    }

    fn lead(&self) -> Option<(&Word, FieldElem)> {
        self.0.iter().next_back().map(|((_, w), &c)| (w, c))
    }

    fn add_scaled(&mut self, f: &Field, c: FieldElem, other: &DPoly, left: &[usize], right: &[usize]) {
        for ((_, w), &d) in &other.0 {
            let mut word = left.to_vec();
            word.extend_from_slice(w);
            word.extend_from_slice(right);
            let key = (word.len(), word);
            let v = f.add(self.0.get(&key).copied().unwrap_or(FieldElem::ZERO), f.mul(c, d));
            if v.is_zero() {
                self.0.remove(&key);
            } else {
                self.0.insert(key, v);
            }
        }
    }

    fn monic(&mut self, f: &Field) {
        if let Some((_, c)) = self.lead() {
            let inv = f.inv(c).expect("nonzero lead");
            for v in self.0.values_mut() {
                *v = f.mul(*v, inv);
            }
        }
    }
}

struct Rules {
    polys: Vec<Option<DPoly>>,
    leads: HashMap<Word, usize>,
    lengths: Vec<usize>,
}

impl Rules {
    fn new() -> Rules {
        Rules { polys: Vec::new(), leads: HashMap::new(), lengths: Vec::new() }
    }

    /// First occurrence of a lead word inside `w`: (rule, start).
    fn find(&self, w: &[usize]) -> Option<(usize, usize)> {
        for start in 0..w.len() {
            for &len in &self.lengths {
                if start + len <= w.len() {
                    if let Some(&r) = self.leads.get(&w[start..start + len]) {
                        return Some((r, start));
                    }
                }
            }
        }
        None
    }

    fn reduce(&self, f: &Field, mut p: DPoly) -> DPoly {
        let mut done: BTreeMap<Key, FieldElem> = BTreeMap::new();
        // Pop the largest term; either rewrite it or move it to the normal part.
        while let Some((key, c)) = p.0.pop_last() {
            match self.find(&key.1) {
                None => {
                    done.insert(key, c);
                }
                Some((r, start)) => {
                    let rule = self.polys[r].as_ref().expect("active rule");
                    let len = rule.lead().unwrap().0.len();
                    let w = &key.1;
                    let mut tail = rule.clone();
                    tail.0.pop_last();
                    p.add_scaled(f, f.neg(c), &tail, &w[..start], &w[start + len..]);
                }
            }
        }
        DPoly(done)
    }

    fn insert(&mut self, p: DPoly) -> usize {
        let lead = p.lead().unwrap().0.clone();
        let idx = self.polys.len();
        if !self.lengths.contains(&lead.len()) {
            self.lengths.push(lead.len());
            self.lengths.sort_unstable();
        }
        self.leads.insert(lead, idx);
        self.polys.push(Some(p));
        idx
    }

    fn remove(&mut self, idx: usize) -> DPoly {
        let p = self.polys[idx].take().expect("active rule");
        self.leads.remove(p.lead().unwrap().0);
        p
    }

    fn active(&self) -> impl Iterator<Item = (usize, &DPoly)> {
        self.polys.iter().enumerate().filter_map(|(i, p)| p.as_ref().map(|p| (i, p)))
    }
}

/// Overlap S-polynomials `a·v' − u'·b` where `lead(a) = u'w`, `lead(b) = w v'`.
fn overlaps(f: &Field, a: &DPoly, b: &DPoly, bound: usize, out: &mut Vec<DPoly>) {
    let u = a.lead().unwrap().0;
    let v = b.lead().unwrap().0;
    for k in 1..u.len().min(v.len()) {
        if u[u.len() - k..] == v[..k] && u.len() + v.len() - k <= bound {
            let mut s = DPoly::default();
            s.add_scaled(f, f.one(), a, &[], &v[k..]);
            s.add_scaled(f, f.neg(f.one()), b, &u[..u.len() - k], &[]);
            out.push(s);
        }
    }
}

const MAX_STEPS: usize = 200_000;

/// Closes a presentation to an [`AlgebraTable`] whose basis is the set of
/// normal words.
///
/// The completion only resolves overlaps up to the degree bound. The
/// resulting table is accepted only if it is associative and satisfies every
/// relation; since normal words always span the quotient, that makes the
/// table isomorphic to the presented algebra.
pub fn close_presentation(p: &Presentation) -> Result<AlgebraTable, AlgebraError> {
    p.validate()?;
    let f = &p.field;
    let bound = p.degree_bound;
    let relations = p.expanded_relations();
    let mut rules = Rules::new();
    let mut queue: Vec<DPoly> = relations.iter().map(DPoly::from_nc).collect();
    queue.reverse();
    let mut steps = 0;
    while let Some(next) = queue.pop() {
        steps += 1;
        if steps > MAX_STEPS {
            return Err(AlgebraError::NonTerminating { bound, detail: "completion exceeded its step budget".into() });
        }
        let mut r = rules.reduce(f, next);
        let Some(lead) = r.lead().map(|(w, _)| w.clone()) else { continue };
        if lead.is_empty() {
            return Err(AlgebraError::InconsistentRelations);
        }
        if lead.len() > bound {
            continue;
        }
        r.monic(f);
        // rules whose lead contains the new lead become reducible; requeue them
        let stale: Vec<usize> = rules
            .active()
            .filter(|(_, q)| {
                let w = q.lead().unwrap().0;
                w.windows(lead.len()).any(|s| s == lead.as_slice())
            })
            .map(|(i, _)| i)
            .collect();
        for i in stale {
            queue.push(rules.remove(i));
        }
        let idx = rules.insert(r);
        let new = rules.polys[idx].clone().unwrap();
        let mut fresh = Vec::new();
        for (i, q) in rules.active() {
            overlaps(f, &new, q, bound, &mut fresh);
            if i != idx {
                overlaps(f, q, &new, bound, &mut fresh);
            }
        }
        queue.extend(fresh);
    }

    // Normal words by length; finite dimension needs none of length `bound`.
    let n = p.generators.len();
    let mut basis: Vec<Word> = vec![Vec::new()];
    let mut layer: Vec<Word> = vec![Vec::new()];
    for len in 1..=bound {
        let mut next = Vec::new();
        for w in &layer {
            for g in 0..n {
                let mut x = w.clone();
                x.push(g);
                // w is normal, so only suffixes can match a lead
                let hit = rules.lengths.iter().any(|&l| l <= x.len() && rules.leads.contains_key(&x[x.len() - l..]));
                if !hit {
                    next.push(x);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        if len == bound {
            return Err(AlgebraError::NonTerminating {
                bound,
                detail: format!("{} normal words of length {bound} remain", next.len()),
            });
        }
        basis.extend(next.iter().cloned());
        layer = next;
    }

    let d = basis.len();
    let index: HashMap<&Word, usize> = basis.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut cache: HashMap<Word, Vec<FieldElem>> = HashMap::new();
    let mut normal_form = |w: Word| -> Vec<FieldElem> {
        if let Some(v) = cache.get(&w) {
            return v.clone();
        }
        let mut dp = DPoly::default();
        dp.0.insert((w.len(), w.clone()), f.one());
        let r = rules.reduce(f, dp);
        let mut v = vec![f.zero(); d];
        for ((_, word), c) in r.0 {
            v[index[&word]] = c;
        }
        cache.insert(w, v.clone());
        v
    };
    let mut structure = Vec::with_capacity(d * d * d);
    for a in &basis {
        for b in &basis {
            let mut w = a.clone();
            w.extend_from_slice(b);
            structure.extend(normal_form(w));
        }
    }
    let generators =
        (0..n).map(|g| Generator { name: p.generators[g].clone(), element: normal_form(vec![g]) }).collect();
    let mut unit = vec![f.zero(); d];
    unit[0] = f.one();
    let parts = TableParts {
        name: p.name.clone(),
        field: f.clone(),
        labels: basis.iter().map(|w| p.word_label(w)).collect(),
        structure,
        unit,
        generators,
        relations,
        group_algebra: false,
    };
    AlgebraTable::from_parts(parts).map_err(|e| match e {
        AlgebraError::NotAssociative { .. } | AlgebraError::RelationViolated(_) => {
            AlgebraError::NonTerminating { bound, detail: format!("completion incomplete at this bound: {e}") }
        }
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ncpoly::parse_poly;

    fn pres(p: u32, gens: &[&str], rels: &[&str], central: &[&str], bound: usize) -> Presentation {
        let f = Field::prime(p).unwrap();
        let g: Vec<String> = gens.iter().map(|s| s.to_string()).collect();
        Presentation {
            name: "t".into(),
            relations: rels.iter().map(|r| parse_poly(r, &g, &f).unwrap()).collect(),
            central: central.iter().map(|r| parse_poly(r, &g, &f).unwrap()).collect(),
            generators: g,
            field: f,
            degree_bound: bound,
        }
    }

    #[test]
    fn radical_square_zero() {
        let a = close_presentation(&pres(2, &["x", "y"], &["x^2", "y^2", "xy", "yx"], &[], 4)).unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.labels(), &["1", "x", "y"]);
    }

    #[test]
    fn truncated_polynomial() {
        let a = close_presentation(&pres(2, &["x"], &["x^2"], &[], 3)).unwrap();
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn dihedral_closes_to_eight() {
        let a = close_presentation(&pres(2, &["x", "y"], &["x^2", "y^2", "xyxy-yxyx"], &[], 8)).unwrap();
        assert_eq!(a.dim(), 8);
        assert_eq!(a.radical().unwrap().dim(), 7);
    }

    #[test]
    fn c5_at_three_has_dim_27() {
        let a = close_presentation(&pres(3, &["x", "y"], &["x^3", "y^3", "(xy-yx)^3"], &["xy-yx"], 12)).unwrap();
        assert_eq!(a.dim(), 27);
    }

    #[test]
    fn free_algebra_does_not_terminate() {
        let e = close_presentation(&pres(2, &["x", "y"], &["xy-yx"], &[], 5)).unwrap_err();
        assert!(matches!(e, AlgebraError::NonTerminating { .. }));
    }

    #[test]
    fn inconsistent_relations() {
        let e = close_presentation(&pres(3, &["x"], &["x^2", "x-1"], &[], 4)).unwrap_err();
        assert!(matches!(e, AlgebraError::InconsistentRelations));
    }

    #[test]
    fn closure_is_deterministic() {
        let p = pres(2, &["x", "y"], &["x^2", "y^2", "xyxy-yxyx"], &[], 8);
        let a = close_presentation(&p).unwrap();
        let b = close_presentation(&p).unwrap();
        assert_eq!(a.labels(), b.labels());
        assert_eq!(a.content_hash(), b.content_hash());
    }
}
