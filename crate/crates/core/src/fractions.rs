//! Categories of fractions by bounded word rewriting.
//!
//! Zig-zags are words of forward letters (non-identity morphisms) and
//! backward letters (non-identity weak equivalences), read left to right.
//! Equality of fractions is decided by congruence closure over all words up
//! to a length bound; when composing class representatives leaves the
//! bound, the result is reported as truncated instead of guessed.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::fincat::{FinCategory, Functor, Morphism, WeakEquivalences};
use crate::sset::UnionFind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub morphism: usize,
    pub backward: bool,
}

impl Letter {
    pub fn forward(morphism: usize) -> Letter {
        Letter {
            morphism,
            backward: false,
        }
    }

    pub fn backward(morphism: usize) -> Letter {
        Letter {
            morphism,
            backward: true,
        }
    }

    /// Start and end object when traversed.
    pub fn ends(&self, c: &FinCategory) -> (usize, usize) {
        let m = c.morphism(self.morphism);
        if self.backward {
            (m.tgt, m.src)
        } else {
            (m.src, m.tgt)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZigZag {
    pub src: usize,
    pub tgt: usize,
    pub word: Vec<Letter>,
}

impl ZigZag {
    pub fn empty(x: usize) -> ZigZag {
        ZigZag {
            src: x,
            tgt: x,
            word: Vec::new(),
        }
    }

    /// Checks composability and that backward letters lie in `w`.
    pub fn new(c: &FinCategory, w: &WeakEquivalences, src: usize, word: Vec<Letter>) -> Result<ZigZag> {
        let mut at = src;
        for l in &word {
            if l.morphism >= c.num_morphisms() {
                return Err(Error::UnknownId(format!("morphism #{}", l.morphism)));
            }
            if l.backward && !w.contains(l.morphism) {
                return Err(Error::Input(format!(
                    "backward letter {} is not a weak equivalence",
                    c.morphism_id(l.morphism)
                )));
            }
            let (s, t) = l.ends(c);
            if s != at {
                return Err(Error::Input(format!(
                    "letter {} does not start at {}",
                    c.morphism_id(l.morphism),
                    c.object_id(at)
                )));
            }
            at = t;
        }
        Ok(ZigZag { src, tgt: at, word })
    }

    /// Parses `id_x` or letters joined by `;`, backward ones suffixed `^-1`.
    pub fn parse(c: &FinCategory, w: &WeakEquivalences, text: &str) -> Result<ZigZag> {
        let text = text.trim();
        if let Some(o) = text.strip_prefix("id_") {
            if let Ok(x) = c.object_index(o) {
                return Ok(ZigZag::empty(x));
            }
        }
        let mut word = Vec::new();
        for part in text.split(';') {
            let part = part.trim();
            let (id, backward) = match part.strip_suffix("^-1") {
                Some(id) => (id, true),
                None => (part, false),
            };
            let m = c.morphism_index(id)?;
            word.push(Letter {
                morphism: m,
                backward,
            });
        }
        let src = word
            .first()
            .map(|l| l.ends(c).0)
            .ok_or_else(|| Error::Input("empty zig-zag".into()))?;
        ZigZag::new(c, w, src, word)
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn then(&self, other: &ZigZag) -> ZigZag {
        assert_eq!(self.tgt, other.src, "zig-zags not composable");
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        ZigZag {
            src: self.src,
            tgt: other.tgt,
            word,
        }
    }

    pub fn display<'a>(&'a self, c: &'a FinCategory) -> impl fmt::Display + 'a {
        DisplayZigZag { z: self, c }
    }
}

struct DisplayZigZag<'a> {
    z: &'a ZigZag,
    c: &'a FinCategory,
}

impl fmt::Display for DisplayZigZag<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.z.word.is_empty() {
            return write!(f, "id_{}", self.c.object_id(self.z.src));
        }
        for (i, l) in self.z.word.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{}", self.c.morphism_id(l.morphism))?;
            if l.backward {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

/// Result of reducing a pair of adjacent letters.
enum Pair {
    Keep,
    Vanish,
    Compose(usize),
}

fn reduce_pair(c: &FinCategory, a: Letter, b: Letter) -> Pair {
    match (a.backward, b.backward) {
        (false, false) => {
            let gf = c.compose(b.morphism, a.morphism).expect("composable letters");
            if c.is_identity(gf) {
                Pair::Vanish
            } else {
                Pair::Compose(gf)
            }
        }
        (false, true) | (true, false) if a.morphism == b.morphism => Pair::Vanish,
        _ => Pair::Keep,
    }
}

/// Left-to-right stack normalization: composes forward neighbours, drops
/// identity letters and cancels `s s⁻¹`, `s⁻¹ s`.
pub fn normalize(c: &FinCategory, z: &ZigZag) -> ZigZag {
    let mut stack: Vec<Letter> = Vec::with_capacity(z.word.len());
    for &l in &z.word {
        if c.is_identity(l.morphism) {
            continue;
        }
        let mut cur = l;
        loop {
            let Some(&top) = stack.last() else {
                stack.push(cur);
                break;
            };
            match reduce_pair(c, top, cur) {
                Pair::Keep => {
                    stack.push(cur);
                    break;
                }
                Pair::Vanish => {
                    stack.pop();
                    break;
                }
                Pair::Compose(gf) => {
                    stack.pop();
                    cur = Letter::forward(gf);
                }
            }
        }
    }
    ZigZag {
        src: z.src,
        tgt: z.tgt,
        word: stack,
    }
}

/// Every result of applying one rewrite at one position.
pub fn single_steps(c: &FinCategory, z: &ZigZag) -> Vec<ZigZag> {
    let mut out = Vec::new();
    for i in 0..z.word.len() {
        if c.is_identity(z.word[i].morphism) {
            let mut w = z.word.clone();
            w.remove(i);
            out.push(ZigZag { word: w, ..*z });
        }
    }
    for i in 0..z.word.len().saturating_sub(1) {
        let (a, b) = (z.word[i], z.word[i + 1]);
        if c.is_identity(a.morphism) || c.is_identity(b.morphism) {
            continue;
        }
        let mut w = z.word.clone();
        match reduce_pair(c, a, b) {
            Pair::Keep => continue,
            Pair::Vanish => {
                w.drain(i..=i + 1);
            }
            Pair::Compose(gf) => {
                w.splice(i..=i + 1, [Letter::forward(gf)]);
            }
        }
        out.push(ZigZag { word: w, ..*z });
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Complete,
    Truncated { bound: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionClass {
    pub src: usize,
    pub tgt: usize,
    /// Shortest, then lexicographically least, member.
    pub representative: ZigZag,
    /// Number of words of length at most the bound in the class.
    pub members: usize,
}

#[derive(Clone, Debug)]
pub struct FractionsCategory {
    parent: FinCategory,
    weq: WeakEquivalences,
    bound: usize,
    classes: Vec<FractionClass>,
    class_of: HashMap<ZigZag, usize>,
    identities: Vec<usize>,
    status: Status,
    words: usize,
}

/// Default cap on the number of enumerated words.
pub const DEFAULT_WORD_LIMIT: usize = 2_000_000;

impl FractionsCategory {
    pub fn parent(&self) -> &FinCategory {
        &self.parent
    }

    pub fn weak_equivalences(&self) -> &WeakEquivalences {
        &self.weq
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn is_complete(&self) -> bool {
        self.status == Status::Complete
    }

    pub fn classes(&self) -> &[FractionClass] {
        &self.classes
    }

    pub fn words_enumerated(&self) -> usize {
        self.words
    }

    pub fn identity(&self, x: usize) -> usize {
        self.identities[x]
    }

    /// Classes from `x` to `y`, by representative order.
    pub fn hom(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&k| self.classes[k].src == x && self.classes[k].tgt == y)
            .collect()
    }

    /// Class of a zig-zag; it is normalized first, so longer words whose
    /// normal form fits the bound are accepted.
    pub fn class_of(&self, z: &ZigZag) -> Option<usize> {
        self.class_of
            .get(z)
            .or_else(|| self.class_of.get(&normalize(&self.parent, z)))
            .copied()
    }

    /// Class of `b ∘ a` (first `a`, then `b`).
    pub fn compose(&self, a: usize, b: usize) -> Option<usize> {
        let (ca, cb) = (&self.classes[a], &self.classes[b]);
        if ca.tgt != cb.src {
            return None;
        }
        self.class_of(&ca.representative.then(&cb.representative))
    }

    /// The class of the forward unary word of a morphism.
    pub fn forward_class(&self, m: usize) -> Option<usize> {
        let mor = self.parent.morphism(m);
        if self.parent.is_identity(m) {
            return Some(self.identities[mor.src]);
        }
        self.class_of(&ZigZag {
            src: mor.src,
            tgt: mor.tgt,
            word: vec![Letter::forward(m)],
        })
    }

    pub fn backward_class(&self, s: usize) -> Option<usize> {
        let mor = self.parent.morphism(s);
        if self.parent.is_identity(s) {
            return Some(self.identities[mor.src]);
        }
        self.class_of(&ZigZag {
            src: mor.tgt,
            tgt: mor.src,
            word: vec![Letter::backward(s)],
        })
    }

    pub fn class_name(&self, k: usize) -> String {
        self.classes[k].representative.display(&self.parent).to_string()
    }

    /// The fractions category as a finite category; morphisms are named by
    /// their representatives.
    pub fn as_category(&self) -> Result<FinCategory> {
        if !self.is_complete() {
            return Err(Error::Incomplete(format!(
                "fractions category truncated at bound {}",
                self.bound
            )));
        }
        let morphisms = (0..self.classes.len())
            .map(|k| Morphism {
                id: self.class_name(k),
                src: self.classes[k].src,
                tgt: self.classes[k].tgt,
            })
            .collect();
        Ok(FinCategory::from_parts(
            self.parent.objects().to_vec(),
            morphisms,
            self.identities.clone(),
            |g, f| self.compose(f, g),
        ))
    }

    /// `ι: C → C[W⁻¹]`, targeting [`FractionsCategory::as_category`].
    pub fn localization_functor(&self) -> Result<Functor> {
        self.as_category()?;
        let morphism_map = (0..self.parent.num_morphisms())
            .map(|m| self.forward_class(m).expect("unary words are classified"))
            .collect();
        Ok(Functor {
            object_map: (0..self.parent.num_objects()).collect(),
            morphism_map,
        })
    }

    /// Extends `g: C → M` along `ι` when `g` inverts the weak equivalences.
    pub fn extend(&self, g: &Functor, m: &FinCategory) -> Result<Extension> {
        let problems = g.validate(&self.parent, m);
        if !problems.is_empty() {
            return Err(Error::Input(format!("not a functor: {}", problems[0])));
        }
        let frac = self.as_category()?;
        if let Some(w) = g.inverts(m, &self.weq) {
            return Ok(Extension::NotInverting { morphism: w });
        }
        let mut morphism_map = Vec::with_capacity(self.classes.len());
        for cls in &self.classes {
            let mut acc = m.identity(g.object_map[cls.src]);
            for l in &cls.representative.word {
                let image = g.morphism_map[l.morphism];
                let step = if l.backward {
                    m.inverse(image).expect("inverted above")
                } else {
                    image
                };
                acc = m.compose(step, acc).expect("functor images compose");
            }
            morphism_map.push(acc);
        }
        let ext = Functor {
            object_map: g.object_map.clone(),
            morphism_map,
        };
        let mut problems = ext.validate(&frac, m);
        let iota = self.localization_functor()?;
        if iota.then(&ext) != *g {
            problems.push("extension does not restrict to the given functor".into());
        }
        Ok(Extension::Extends {
            functor: ext,
            problems,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Extension {
    /// `problems` is empty when functoriality and `Ḡ ∘ ι = G` were verified.
    Extends { functor: Functor, problems: Vec<String> },
    /// A weak equivalence sent to a non-invertible morphism.
    NotInverting { morphism: usize },
}

/// The universal property at `g`: the verified extension along `ι`, or the
/// weak equivalence `g` fails to invert.
pub fn check_universal_property(f: &FractionsCategory, g: &Functor, m: &FinCategory) -> Result<Extension> {
    let ext = f.extend(g, m)?;
    if let Extension::Extends { problems, .. } = &ext {
        if let Some(p) = problems.first() {
            return Err(Error::Incomplete(format!("extension failed verification: {p}")));
        }
    }
    Ok(ext)
}

fn letters_from(c: &FinCategory, w: &WeakEquivalences) -> Vec<Vec<Letter>> {
    let mut out = vec![Vec::new(); c.num_objects()];
    for m in c.non_identity_morphisms() {
        out[c.src(m)].push(Letter::forward(m));
    }
    for m in c.non_identity_morphisms() {
        if w.contains(m) {
            out[c.tgt(m)].push(Letter::backward(m));
        }
    }
    out
}

/// Builds `C[W⁻¹]` from every zig-zag of length at most `bound`.
pub fn build_fractions(c: &FinCategory, w: &WeakEquivalences, bound: usize) -> Result<FractionsCategory> {
    build_fractions_with_limit(c, w, bound, DEFAULT_WORD_LIMIT)
}

pub fn build_fractions_with_limit(
    c: &FinCategory,
    w: &WeakEquivalences,
    bound: usize,
    word_limit: usize,
) -> Result<FractionsCategory> {
    if !w.is_subcategory(c) {
        return Err(Error::Input("weak equivalences must contain identities and compose".into()));
    }
    let out_letters = letters_from(c, w);
    let mut words: Vec<ZigZag> = (0..c.num_objects()).map(ZigZag::empty).collect();
    let mut start = 0;
    for _ in 0..bound {
        let end = words.len();
        for k in start..end {
            for &l in &out_letters[words[k].tgt] {
                let mut word = words[k].word.clone();
                word.push(l);
                words.push(ZigZag {
                    src: words[k].src,
                    tgt: l.ends(c).1,
                    word,
                });
                if words.len() > word_limit {
                    return Err(Error::budget(
                        "word_limit",
                        word_limit,
                        format!("enumerating words of length {}", words[k].len() + 1),
                    ));
                }
            }
        }
        start = end;
    }
    let index: HashMap<ZigZag, usize> = words.iter().enumerate().map(|(i, z)| (z.clone(), i)).collect();
    let mut uf = UnionFind::new(words.len());
    for (i, z) in words.iter().enumerate() {
        for r in single_steps(c, z) {
            uf.union(i, index[&r]);
        }
    }
    // one-letter extensions on either side, for the congruence
    let mut right: Vec<Vec<(Letter, usize)>> = vec![Vec::new(); words.len()];
    let mut left: Vec<Vec<(Letter, usize)>> = vec![Vec::new(); words.len()];
    for (i, z) in words.iter().enumerate() {
        if let Some((&last, init)) = z.word.split_last() {
            let base = ZigZag {
                src: z.src,
                tgt: last.ends(c).0,
                word: init.to_vec(),
            };
            right[index[&base]].push((last, i));
        }
        if let Some((&first, rest)) = z.word.split_first() {
            let base = ZigZag {
                src: first.ends(c).1,
                tgt: z.tgt,
                word: rest.to_vec(),
            };
            left[index[&base]].push((first, i));
        }
    }
    loop {
        let mut changed = false;
        for (ext, side) in [(&right, 0u8), (&left, 1u8)] {
            let mut seen: HashMap<(usize, Letter, u8), usize> = HashMap::new();
            for (i, exts) in ext.iter().enumerate() {
                let ri = uf.find(i);
                for &(l, j) in exts {
                    let rj = uf.find(j);
                    match seen.get(&(ri, l, side)) {
                        Some(&prev) => {
                            if uf.union(prev, rj) {
                                changed = true;
                            }
                        }
                        None => {
                            seen.insert((ri, l, side), rj);
                        }
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    // classes, representatives: words are already ordered by length; pick
    // the least within each length
    let mut best: BTreeMap<usize, usize> = BTreeMap::new();
    let mut count: HashMap<usize, usize> = HashMap::new();
    for i in 0..words.len() {
        let r = uf.find(i);
        *count.entry(r).or_default() += 1;
        best.entry(r)
            .and_modify(|b| {
                let (cur, cand) = (&words[*b], &words[i]);
                if (cand.len(), &cand.word) < (cur.len(), &cur.word) {
                    *b = i;
                }
            })
            .or_insert(i);
    }
    let mut reps: Vec<(usize, usize)> = best.into_iter().collect();
    reps.sort_by(|a, b| {
        let (za, zb) = (&words[a.1], &words[b.1]);
        (za.src, za.tgt, za.len(), &za.word).cmp(&(zb.src, zb.tgt, zb.len(), &zb.word))
    });
    let root_class: HashMap<usize, usize> = reps.iter().enumerate().map(|(k, &(r, _))| (r, k)).collect();
    let classes: Vec<FractionClass> = reps
        .iter()
        .map(|&(r, i)| FractionClass {
            src: words[i].src,
            tgt: words[i].tgt,
            representative: words[i].clone(),
            members: count[&r],
        })
        .collect();
    let identities = (0..c.num_objects()).map(|x| root_class[&uf.find(x)]).collect();
    let class_of: HashMap<ZigZag, usize> = words
        .iter()
        .enumerate()
        .map(|(i, z)| (z.clone(), root_class[&uf.find(i)]))
        .collect();
    let mut status = Status::Complete;
    'outer: for a in &classes {
        for b in &classes {
            if a.tgt == b.src {
                let nf = normalize(c, &a.representative.then(&b.representative));
                if nf.len() > bound || !class_of.contains_key(&nf) {
                    status = Status::Truncated { bound };
                    break 'outer;
                }
            }
        }
    }
    Ok(FractionsCategory {
        parent: c.clone(),
        weq: w.clone(),
        bound,
        classes,
        class_of,
        identities,
        status,
        words: words.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::enumerate_functors;
    use crate::fixtures;

    fn zz(fx: &fixtures::Fixture, s: &str) -> ZigZag {
        ZigZag::parse(&fx.category, &fx.weq, s).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let sq = fixtures::commutative_square();
        let c = &sq.category;
        let show = |s: &str| normalize(c, &zz(&sq, s)).display(c).to_string();
        assert_eq!(show("a->b;b->d"), "a->d");
        assert_eq!(show("a->b;a->b^-1"), "id_a");
        assert_eq!(show("a->b^-1;a->b;b->d"), "b->d");
        assert_eq!(show("id_a;a->b"), "a->b");
    }

    #[test]
    fn normalize_is_not_confluent_on_the_square() {
        let sq = fixtures::commutative_square();
        let c = &sq.category;
        let z = zz(&sq, "a->b^-1;a->b;b->d");
        let outs: Vec<String> = single_steps(c, &z)
            .iter()
            .map(|r| normalize(c, r).display(c).to_string())
            .collect();
        assert!(outs.contains(&"b->d".to_string()));
        assert!(outs.contains(&"a->b^-1;a->d".to_string()));
        // the two normal forms are identified by the closure
        let f = build_fractions(c, &sq.weq, 4).unwrap();
        assert!(f.is_complete());
        let a = f.class_of(&zz(&sq, "b->d")).unwrap();
        let b = f.class_of(&zz(&sq, "a->b^-1;a->d")).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn identity_weq_reproduces_the_category() {
        for fx in [fixtures::ordinal(2), fixtures::discrete2()] {
            let w = WeakEquivalences::identities(&fx.category);
            let f = build_fractions(&fx.category, &w, 3).unwrap();
            assert!(f.is_complete());
            assert_eq!(f.classes().len(), fx.category.num_morphisms());
            let iota = f.localization_functor().unwrap();
            let frac = f.as_category().unwrap();
            assert!(iota.validate(&fx.category, &frac).is_empty());
            let mut seen: Vec<usize> = iota.morphism_map.clone();
            seen.sort();
            seen.dedup();
            assert_eq!(seen.len(), fx.category.num_morphisms());
        }
    }

    #[test]
    fn walking_arrow_becomes_free_isomorphism() {
        let fx = fixtures::walking_arrow();
        let f = build_fractions(&fx.category, &fx.weq, 4).unwrap();
        assert!(f.is_complete());
        for x in 0..2 {
            for y in 0..2 {
                assert_eq!(f.hom(x, y).len(), 1);
            }
        }
        let frac = f.as_category().unwrap();
        assert!(frac.is_valid());
        assert!(frac.is_groupoid());
        let iota = f.localization_functor().unwrap();
        let arrow = fx.category.morphism_index("0->1").unwrap();
        assert!(frac.is_isomorphism(iota.morphism_map[arrow]));
    }

    #[test]
    fn span_hom_is_a_single_fraction() {
        let fx = fixtures::span();
        let c = &fx.category;
        let f = build_fractions(c, &fx.weq, 4).unwrap();
        assert!(f.is_complete());
        let (b, cc) = (c.object_index("b").unwrap(), c.object_index("c").unwrap());
        let h = f.hom(b, cc);
        assert_eq!(h.len(), 1);
        assert_eq!(f.class_name(h[0]), "s^-1;f");
        let s = c.morphism_index("s").unwrap();
        let fwd = f.forward_class(s).unwrap();
        let bwd = f.backward_class(s).unwrap();
        let a = c.object_index("a").unwrap();
        assert_eq!(f.compose(fwd, bwd), Some(f.identity(a)));
        assert_eq!(f.compose(bwd, fwd), Some(f.identity(b)));
    }

    #[test]
    fn parallel_pair_truncates() {
        let fx = fixtures::parallel_pair();
        for bound in [2, 4, 6] {
            let f = build_fractions(&fx.category, &fx.weq, bound).unwrap();
            assert_eq!(f.status(), Status::Truncated { bound });
            assert!(f.as_category().is_err());
        }
    }

    #[test]
    fn word_budget_is_enforced() {
        let fx = fixtures::parallel_pair();
        let err = build_fractions_with_limit(&fx.category, &fx.weq, 12, 100).unwrap_err();
        assert!(matches!(err, Error::Budget { .. }));
    }

    /// Every functor out of the fractions category that restricts to `g`.
    fn extensions_by_search(f: &FractionsCategory, g: &Functor, m: &FinCategory) -> Vec<Functor> {
        let frac = f.as_category().unwrap();
        let iota = f.localization_functor().unwrap();
        enumerate_functors(&frac, m, 100_000)
            .unwrap()
            .into_iter()
            .filter(|h| iota.then(h) == *g)
            .collect()
    }

    #[test]
    fn universal_property_on_fixtures() {
        for fx in [fixtures::span(), fixtures::walking_arrow(), fixtures::cospan()] {
            let f = build_fractions(&fx.category, &fx.weq, 4).unwrap();
            assert!(f.is_complete(), "{}", fx.name);
            // G = ι extends by the identity
            let frac = f.as_category().unwrap();
            let iota = f.localization_functor().unwrap();
            match f.extend(&iota, &frac).unwrap() {
                Extension::Extends { functor, problems } => {
                    assert!(problems.is_empty());
                    assert_eq!(functor, Functor::identity(&frac));
                }
                other => panic!("{other:?}"),
            }
            // all functors into [1] and the free isomorphism
            for m in [FinCategory::ordinal(1), fixtures::free_iso().category] {
                for g in enumerate_functors(&fx.category, &m, 10_000).unwrap() {
                    let found = extensions_by_search(&f, &g, &m);
                    match f.extend(&g, &m).unwrap() {
                        Extension::Extends { functor, problems } => {
                            assert!(problems.is_empty(), "{problems:?}");
                            assert_eq!(found, vec![functor]);
                        }
                        Extension::NotInverting { morphism } => {
                            assert!(fx.weq.contains(morphism));
                            assert!(!m.is_isomorphism(g.morphism_map[morphism]));
                            assert!(found.is_empty());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn span_collapsing_s_extends_uniquely() {
        let fx = fixtures::span();
        let c = &fx.category;
        let m = FinCategory::ordinal(1);
        // a, b ↦ 0, c ↦ 1
        let g = enumerate_functors(c, &m, 100)
            .unwrap()
            .into_iter()
            .find(|g| g.object_map == vec![0, 0, 1])
            .unwrap();
        let f = build_fractions(c, &fx.weq, 4).unwrap();
        assert!(matches!(f.extend(&g, &m).unwrap(), Extension::Extends { ref problems, .. } if problems.is_empty()));
        let bad = enumerate_functors(c, &m, 100)
            .unwrap()
            .into_iter()
            .find(|g| g.object_map == vec![0, 1, 1])
            .unwrap();
        let s = c.morphism_index("s").unwrap();
        assert_eq!(f.extend(&bad, &m).unwrap(), Extension::NotInverting { morphism: s });
    }
}
