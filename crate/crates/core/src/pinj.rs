//! The category of finite sets and partial injections.
//!
//! Objects are [`FiniteSet`]s (ordered label alphabets), morphisms are
//! [`PartialInjection`]s (graphs injective in both coordinates). Everything in
//! this module is exact: composition, dagger, both monoidal products,
//! equalizers, the hom-set order, and colimits of finite chains.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An ordered alphabet of distinct text labels. The ordering is part of the
/// value: it fixes the basis indexing when the set is sent through the
/// `ltwo` functor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct FiniteSet {
    labels: Vec<String>,
}

impl FiniteSet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.clone()) {
                return Err(Error::Validation {
                    code: "duplicate-label",
                    message: format!("label {l:?} appears twice"),
                });
            }
        }
        Ok(FiniteSet { labels })
    }

    pub fn empty() -> Self {
        FiniteSet { labels: Vec::new() }
    }

    /// The set `{"0", "1", ..., "n-1"}` in index order.
    pub fn indices(n: usize) -> Self {
        FiniteSet {
            labels: (0..n).map(|i| i.to_string()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn contains(&self, label: &str) -> bool {
        self.labels.iter().any(|l| l == label)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Cartesian product, lexicographic by the operand orderings; pair labels
    /// are `(x,y)` composites.
    pub fn tensor(&self, other: &FiniteSet) -> FiniteSet {
        let mut labels = Vec::with_capacity(self.len() * other.len());
        for x in &self.labels {
            for y in &other.labels {
                labels.push(format!("({x},{y})"));
            }
        }
        FiniteSet { labels }
    }

    /// Tagged disjoint union: left labels (prefixed `L:`) then right labels
    /// (prefixed `R:`).
    pub fn oplus(&self, other: &FiniteSet) -> FiniteSet {
        let mut labels = Vec::with_capacity(self.len() + other.len());
        labels.extend(self.labels.iter().map(|x| format!("L:{x}")));
        labels.extend(other.labels.iter().map(|y| format!("R:{y}")));
        FiniteSet { labels }
    }
}

impl fmt::Display for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels.join(","))
    }
}

impl<'de> Deserialize<'de> for FiniteSet {
    fn deserialize<D>(deserializer: D) -> std::result::Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        let labels = Vec::<String>::deserialize(deserializer)?;
        FiniteSet::new(labels).map_err(serde::de::Error::custom)
    }
}

/// A morphism of the category: a relation between `dom` and `cod` that is
/// single-valued and injective. The graph is kept sorted by domain position,
/// so derived equality is equality of morphisms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(into = "PInjRepr")]
pub struct PartialInjection {
    dom: FiniteSet,
    cod: FiniteSet,
    graph: Vec<(String, String)>,
}

#[derive(Serialize, Deserialize)]
struct PInjRepr {
    dom: FiniteSet,
    cod: FiniteSet,
    pairs: Vec<(String, String)>,
}

impl From<PartialInjection> for PInjRepr {
    fn from(f: PartialInjection) -> Self {
        PInjRepr {
            dom: f.dom,
            cod: f.cod,
            pairs: f.graph,
        }
    }
}

impl<'de> Deserialize<'de> for PartialInjection {
    fn deserialize<D>(deserializer: D) -> std::result::Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        let repr = PInjRepr::deserialize(deserializer)?;
        PartialInjection::new(repr.dom, repr.cod, repr.pairs).map_err(serde::de::Error::custom)
    }
}

impl PartialInjection {
    pub fn new<I, S, T>(dom: FiniteSet, cod: FiniteSet, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, T)>,
        S: Into<String>,
        T: Into<String>,
    {
        let mut graph: Vec<(String, String)> = pairs
            .into_iter()
            .map(|(x, y)| (x.into(), y.into()))
            .collect();
        let mut firsts = BTreeSet::new();
        let mut seconds = BTreeSet::new();
        for (x, y) in &graph {
            if !dom.contains(x) {
                return Err(Error::Validation {
                    code: "unknown-label",
                    message: format!("pair first component {x:?} is not in dom {}", dom),
                });
            }
            if !cod.contains(y) {
                return Err(Error::Validation {
                    code: "unknown-label",
                    message: format!("pair second component {y:?} is not in cod {}", cod),
                });
            }
            if !firsts.insert(x.clone()) {
                return Err(Error::Validation {
                    code: "non-injective",
                    message: format!("domain label {x:?} appears twice in the graph"),
                });
            }
            if !seconds.insert(y.clone()) {
                return Err(Error::Validation {
                    code: "non-injective",
                    message: format!("codomain label {y:?} appears twice in the graph"),
                });
            }
        }
        graph.sort_by_key(|(x, _)| dom.index_of(x).expect("validated above"));
        Ok(PartialInjection { dom, cod, graph })
    }

    pub fn identity(x: &FiniteSet) -> Self {
        PartialInjection {
            dom: x.clone(),
            cod: x.clone(),
            graph: x.labels().iter().map(|l| (l.clone(), l.clone())).collect(),
        }
    }

    /// The nowhere-defined morphism between two objects.
    pub fn empty(dom: &FiniteSet, cod: &FiniteSet) -> Self {
        PartialInjection {
            dom: dom.clone(),
            cod: cod.clone(),
            graph: Vec::new(),
        }
    }

    pub fn dom(&self) -> &FiniteSet {
        &self.dom
    }

    pub fn cod(&self) -> &FiniteSet {
        &self.cod
    }

    pub fn graph(&self) -> &[(String, String)] {
        &self.graph
    }

    /// `Dom(f)`: the set of first components, in dom order.
    pub fn domain_of_definition(&self) -> Vec<&str> {
        self.graph.iter().map(|(x, _)| x.as_str()).collect()
    }

    /// `Im(f)`: the set of second components, in dom order of their preimages.
    pub fn image(&self) -> Vec<&str> {
        self.graph.iter().map(|(_, y)| y.as_str()).collect()
    }

    pub fn apply(&self, x: &str) -> Option<&str> {
        self.graph
            .iter()
            .find(|(a, _)| a == x)
            .map(|(_, b)| b.as_str())
    }

    pub fn preimage(&self, y: &str) -> Option<&str> {
        self.graph
            .iter()
            .find(|(_, b)| b == y)
            .map(|(a, _)| a.as_str())
    }

    pub fn is_total(&self) -> bool {
        self.graph.len() == self.dom.len()
    }

    pub fn is_total_bijection(&self) -> bool {
        self.is_total() && self.graph.len() == self.cod.len()
    }
}

impl fmt::Display for PartialInjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self
            .graph
            .iter()
            .map(|(x, y)| format!("({x},{y})"))
            .collect();
        write!(f, "{{{}}}: {} -> {}", pairs.join(","), self.dom, self.cod)
    }
}

/// Relational composite `g . f` (first `f`, then `g`).
pub fn compose(g: &PartialInjection, f: &PartialInjection) -> Result<PartialInjection> {
    if f.cod != g.dom {
        return Err(Error::BoundaryMismatch {
            context: "compose".into(),
            expected: format!("middle object {}", f.cod),
            found: format!("{}", g.dom),
        });
    }
    let pairs: Vec<(String, String)> = f
        .graph
        .iter()
        .filter_map(|(x, y)| g.apply(y).map(|z| (x.clone(), z.to_string())))
        .collect();
    // composites of partial injections are partial injections
    PartialInjection::new(f.dom.clone(), g.cod.clone(), pairs)
}

/// Relational transpose; swaps dom and cod.
pub fn dagger(f: &PartialInjection) -> PartialInjection {
    let pairs: Vec<(String, String)> = f.graph.iter().map(|(x, y)| (y.clone(), x.clone())).collect();
    PartialInjection::new(f.cod.clone(), f.dom.clone(), pairs)
        .expect("transpose of a partial injection is a partial injection")
}

/// Monoidal product on the Cartesian product of objects.
pub fn tensor(f: &PartialInjection, g: &PartialInjection) -> PartialInjection {
    let dom = f.dom.tensor(&g.dom);
    let cod = f.cod.tensor(&g.cod);
    let mut pairs = Vec::with_capacity(f.graph.len() * g.graph.len());
    for (x, y) in &f.graph {
        for (x2, y2) in &g.graph {
            pairs.push((format!("({x},{x2})"), format!("({y},{y2})")));
        }
    }
    PartialInjection::new(dom, cod, pairs).expect("product of injections is injective")
}

/// Monoidal product on the disjoint union of objects.
pub fn oplus(f: &PartialInjection, g: &PartialInjection) -> PartialInjection {
    let dom = f.dom.oplus(&g.dom);
    let cod = f.cod.oplus(&g.cod);
    let mut pairs = Vec::with_capacity(f.graph.len() + g.graph.len());
    for (x, y) in &f.graph {
        pairs.push((format!("L:{x}"), format!("L:{y}")));
    }
    for (x, y) in &g.graph {
        pairs.push((format!("R:{x}"), format!("R:{y}")));
    }
    PartialInjection::new(dom, cod, pairs).expect("disjoint union of injections is injective")
}

fn require_parallel(f: &PartialInjection, g: &PartialInjection, context: &str) -> Result<()> {
    if f.dom != g.dom || f.cod != g.cod {
        return Err(Error::NotParallel(format!(
            "{context}: {} -> {} vs {} -> {}",
            f.dom, f.cod, g.dom, g.cod
        )));
    }
    Ok(())
}

/// Equalizer of a parallel pair: the subset of the common domain where `f`
/// and `g` are either both undefined or defined and agree, together with its
/// inclusion.
pub fn equalizer(
    f: &PartialInjection,
    g: &PartialInjection,
) -> Result<(FiniteSet, PartialInjection)> {
    require_parallel(f, g, "equalizer")?;
    let kept: Vec<String> = f
        .dom
        .labels()
        .iter()
        .filter(|x| {
            let fx = f.apply(x);
            let gx = g.apply(x);
            match (fx, gx) {
                (None, None) => true,
                (Some(a), Some(b)) => a == b,
                _ => false,
            }
        })
        .cloned()
        .collect();
    let obj = FiniteSet::new(kept.clone())?;
    let incl = PartialInjection::new(
        obj.clone(),
        f.dom.clone(),
        kept.into_iter().map(|x| (x.clone(), x)),
    )?;
    Ok((obj, incl))
}

/// The hom-set order: `f <= g` iff `f = g f^dag f`, i.e. graph inclusion.
pub fn leq(f: &PartialInjection, g: &PartialInjection) -> Result<bool> {
    require_parallel(f, g, "leq")?;
    Ok(f.graph.iter().all(|(x, y)| g.apply(x) == Some(y.as_str())))
}

/// Supremum of a directed family of parallel morphisms: the union of graphs.
///
/// A nonempty family is accepted when the graph union is itself a partial
/// injection; otherwise the family had no upper bound and a directedness
/// error is returned.
pub fn sup(family: &[PartialInjection]) -> Result<PartialInjection> {
    let first = family
        .first()
        .ok_or_else(|| Error::Directedness("empty family has no supremum here".into()))?;
    let mut union: BTreeMap<String, String> = BTreeMap::new();
    for f in family {
        require_parallel(first, f, "sup")?;
        for (x, y) in &f.graph {
            if let Some(prev) = union.get(x) {
                if prev != y {
                    return Err(Error::Directedness(format!(
                        "labels {x:?} -> {prev:?} and {x:?} -> {y:?} have no common upper bound"
                    )));
                }
            } else {
                union.insert(x.clone(), y.clone());
            }
        }
    }
    PartialInjection::new(first.dom.clone(), first.cod.clone(), union).map_err(|e| match e {
        Error::Validation { message, .. } => Error::Directedness(message),
        other => other,
    })
}

/// Every partial injection from `x` to `y`, in a deterministic order:
/// domain elements are considered in label order, and for each the map is
/// first left undefined, then sent to each still-free codomain label in
/// order. Exponential in the set sizes; intended for small exhaustive
/// searches and brute-force oracles.
pub fn all_partial_injections(x: &FiniteSet, y: &FiniteSet) -> Vec<PartialInjection> {
    fn go(
        x: &FiniteSet,
        y: &FiniteSet,
        remaining: &[String],
        used: &mut Vec<String>,
        pairs: &mut Vec<(String, String)>,
        out: &mut Vec<PartialInjection>,
    ) {
        match remaining.split_first() {
            None => out.push(
                PartialInjection::new(x.clone(), y.clone(), pairs.clone())
                    .expect("constructed injectively"),
            ),
            Some((first, rest)) => {
                go(x, y, rest, used, pairs, out);
                for target in y.labels() {
                    if used.contains(target) {
                        continue;
                    }
                    used.push(target.clone());
                    pairs.push((first.clone(), target.clone()));
                    go(x, y, rest, used, pairs, out);
                    pairs.pop();
                    used.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    go(
        x,
        y,
        x.labels().to_vec().as_slice(),
        &mut Vec::new(),
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// A finite chain diagram: stages linked by partial injections.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainDiagram {
    stages: Vec<FiniteSet>,
    links: Vec<PartialInjection>,
}

#[derive(Deserialize)]
struct ChainRepr {
    stages: Vec<FiniteSet>,
    links: Vec<PartialInjection>,
}

impl<'de> Deserialize<'de> for ChainDiagram {
    fn deserialize<D>(deserializer: D) -> std::result::Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        let repr = ChainRepr::deserialize(deserializer)?;
        ChainDiagram::new(repr.stages, repr.links).map_err(serde::de::Error::custom)
    }
}

impl ChainDiagram {
    pub fn new(stages: Vec<FiniteSet>, links: Vec<PartialInjection>) -> Result<Self> {
        if stages.is_empty() {
            return Err(Error::Validation {
                code: "empty-chain",
                message: "a chain needs at least one stage".into(),
            });
        }
        if links.len() + 1 != stages.len() {
            return Err(Error::Validation {
                code: "link-count",
                message: format!(
                    "{} stages need {} links, got {}",
                    stages.len(),
                    stages.len() - 1,
                    links.len()
                ),
            });
        }
        for (i, link) in links.iter().enumerate() {
            if link.dom() != &stages[i] || link.cod() != &stages[i + 1] {
                return Err(Error::Validation {
                    code: "link-boundary",
                    message: format!(
                        "link {i} is {} -> {}, expected {} -> {}",
                        link.dom(),
                        link.cod(),
                        stages[i],
                        stages[i + 1]
                    ),
                });
            }
        }
        Ok(ChainDiagram { stages, links })
    }

    pub fn stages(&self) -> &[FiniteSet] {
        &self.stages
    }

    pub fn links(&self) -> &[PartialInjection] {
        &self.links
    }

    pub fn len(&self) -> usize {
        self.stages.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The composite `D(i <= j)` of the links from stage `i` to stage `j`.
    pub fn transition(&self, i: usize, j: usize) -> Result<PartialInjection> {
        if i > j || j >= self.stages.len() {
            return Err(Error::IndexOutOfRange {
                index: j,
                bound: self.stages.len(),
            });
        }
        let mut acc = PartialInjection::identity(&self.stages[i]);
        for k in i..j {
            acc = compose(&self.links[k], &acc)?;
        }
        Ok(acc)
    }
}

/// Colimit of a finite chain: the set of never-dropped elements modulo the
/// connection relation, with the colimit cocone.
///
/// Class labels canonicalize to the earliest `(stage, element)`
/// representative; the bare element label is used unless two class
/// representatives share it, in which case `label@stage` disambiguates.
pub fn chain_colimit(d: &ChainDiagram) -> Result<(FiniteSet, Vec<PartialInjection>)> {
    let last = d.len() - 1;
    // survivor (i, x): x stays defined along every later transition. For a
    // finite chain that is equivalent to surviving to the last stage.
    // final_elem(i, x) identifies the equivalence class.
    let mut class_rep: BTreeMap<String, (usize, usize)> = BTreeMap::new(); // final label -> earliest (stage, pos)
    let mut survivors: Vec<Vec<Option<String>>> = Vec::with_capacity(d.len()); // per stage, per element: final label
    for i in 0..d.len() {
        let to_last = d.transition(i, last)?;
        let stage = &d.stages()[i];
        let mut row = Vec::with_capacity(stage.len());
        for (pos, x) in stage.labels().iter().enumerate() {
            match to_last.apply(x) {
                Some(fin) => {
                    row.push(Some(fin.to_string()));
                    class_rep.entry(fin.to_string()).or_insert((i, pos));
                }
                None => row.push(None),
            }
        }
        survivors.push(row);
    }

    // order classes by earliest representative
    let mut classes: Vec<(String, (usize, usize))> = class_rep.into_iter().collect();
    classes.sort_by_key(|(_, rep)| *rep);

    // representative labels, disambiguated on clash
    let mut label_count: BTreeMap<&str, usize> = BTreeMap::new();
    for (_, (i, pos)) in &classes {
        let l = &d.stages()[*i].labels()[*pos];
        *label_count.entry(l.as_str()).or_insert(0) += 1;
    }
    let mut final_to_class: BTreeMap<String, String> = BTreeMap::new();
    let mut class_labels = Vec::with_capacity(classes.len());
    for (fin, (i, pos)) in &classes {
        let l = &d.stages()[*i].labels()[*pos];
        let name = if label_count[l.as_str()] > 1 {
            format!("{l}@{i}")
        } else {
            l.clone()
        };
        final_to_class.insert(fin.clone(), name.clone());
        class_labels.push(name);
    }
    let colimit = FiniteSet::new(class_labels)?;

    let mut cocone = Vec::with_capacity(d.len());
    for i in 0..d.len() {
        let stage = &d.stages()[i];
        let pairs: Vec<(String, String)> = stage
            .labels()
            .iter()
            .enumerate()
            .filter_map(|(pos, x)| {
                survivors[i][pos]
                    .as_ref()
                    .map(|fin| (x.clone(), final_to_class[fin].clone()))
            })
            .collect();
        cocone.push(
            PartialInjection::new(stage.clone(), colimit.clone(), pairs)
                .expect("cocone leg is a partial injection"),
        );
    }
    Ok((colimit, cocone))
}

/// Factor a morphism into the colimit through a finite stage: the minimal
/// stage index `j` and the unique `g` with `Dom(g) = Dom(f)` such that
/// `cocone[j] . g = f`.
pub fn factor_through_stage(
    d: &ChainDiagram,
    cocone: &[PartialInjection],
    f: &PartialInjection,
) -> Result<(usize, PartialInjection)> {
    if cocone.len() != d.len() {
        return Err(Error::Consistency(format!(
            "cocone has {} legs for a {}-stage chain",
            cocone.len(),
            d.len()
        )));
    }
    let colimit = cocone
        .first()
        .map(|c| c.cod().clone())
        .ok_or_else(|| Error::Consistency("empty cocone".into()))?;
    if f.cod() != &colimit {
        return Err(Error::BoundaryMismatch {
            context: "factor_through_stage".into(),
            expected: format!("{colimit}"),
            found: format!("{}", f.cod()),
        });
    }
    // minimal stage at which every class hit by f has a preimage
    let mut j = 0usize;
    for (_, cls) in f.graph() {
        let earliest = (0..d.len())
            .find(|&i| cocone[i].preimage(cls).is_some())
            .ok_or_else(|| {
                Error::Consistency(format!(
                    "class {cls:?} has no preimage in any stage; malformed cocone"
                ))
            })?;
        j = j.max(earliest);
    }
    let pairs: Vec<(String, String)> = f
        .graph()
        .iter()
        .map(|(x, cls)| {
            let y = cocone[j]
                .preimage(cls)
                .expect("j chosen so that every class is present");
            (x.clone(), y.to_string())
        })
        .collect();
    let g = PartialInjection::new(f.dom().clone(), d.stages()[j].clone(), pairs)?;
    Ok((j, g))
}

/// The unique mediating morphism from the colimit of `d` to the tip of a
/// test cocone: `m . c_i = d_i` for all stages.
pub fn mediating_morphism(
    d: &ChainDiagram,
    colimit: &FiniteSet,
    cocone: &[PartialInjection],
    test: &[PartialInjection],
) -> Result<PartialInjection> {
    if test.len() != d.len() || cocone.len() != d.len() {
        return Err(Error::Consistency(
            "test cocone and colimit cocone must have one leg per stage".into(),
        ));
    }
    let tip = test[0].cod().clone();
    let mut pairs: BTreeMap<String, String> = BTreeMap::new();
    for i in 0..d.len() {
        for (x, y) in test[i].graph() {
            if let Some(cls) = cocone[i].apply(x) {
                if let Some(prev) = pairs.get(cls) {
                    if prev != y {
                        return Err(Error::Consistency(format!(
                            "test legs disagree on class {cls:?}"
                        )));
                    }
                } else {
                    pairs.insert(cls.to_string(), y.clone());
                }
            }
        }
    }
    PartialInjection::new(colimit.clone(), tip, pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fs(labels: &[&str]) -> FiniteSet {
        FiniteSet::new(labels.iter().copied()).unwrap()
    }

    fn pi(dom: &[&str], cod: &[&str], pairs: &[(&str, &str)]) -> PartialInjection {
        PartialInjection::new(fs(dom), fs(cod), pairs.iter().map(|&(a, b)| (a, b))).unwrap()
    }

    #[test]
    fn compose_single_chain() {
        let f = pi(&["0", "1"], &["a"], &[("0", "a")]);
        let g = pi(&["a"], &["q", "r"], &[("a", "q")]);
        let gf = compose(&g, &f).unwrap();
        assert_eq!(gf, pi(&["0", "1"], &["q", "r"], &[("0", "q")]));
    }

    #[test]
    fn compose_identity_law() {
        let g = pi(&["x", "y"], &["p"], &[("y", "p")]);
        let id = PartialInjection::identity(&fs(&["x", "y"]));
        assert_eq!(compose(&g, &id).unwrap(), g);
    }

    #[test]
    fn compose_disjoint_domains_gives_zero() {
        let f = pi(&["0"], &["a", "b"], &[("0", "a")]);
        let g = pi(&["a", "b"], &["q"], &[("b", "q")]);
        let gf = compose(&g, &f).unwrap();
        assert!(gf.graph().is_empty());
    }

    #[test]
    fn compose_boundary_mismatch() {
        let f = pi(&["0"], &["a"], &[("0", "a")]);
        let g = pi(&["b"], &["q"], &[("b", "q")]);
        assert!(matches!(
            compose(&g, &f),
            Err(Error::BoundaryMismatch { .. })
        ));
    }

    #[test]
    fn dagger_transposes_and_involutes() {
        let f = pi(&["0", "1"], &["a"], &[("0", "a")]);
        let fd = dagger(&f);
        assert_eq!(fd, pi(&["a"], &["0", "1"], &[("a", "0")]));
        assert_eq!(dagger(&fd), f);
        let id = PartialInjection::identity(&fs(&["x", "y"]));
        assert_eq!(dagger(&id), id);
    }

    #[test]
    fn tensor_of_identities() {
        let id_ab = PartialInjection::identity(&fs(&["a", "b"]));
        let id_c = PartialInjection::identity(&fs(&["c"]));
        let t = tensor(&id_ab, &id_c);
        assert_eq!(t, PartialInjection::identity(&fs(&["(a,c)", "(b,c)"])));
    }

    #[test]
    fn tensor_expands_product() {
        let f = pi(&["0", "1"], &["a"], &[("0", "a")]);
        let t = tensor(&f, &f);
        assert_eq!(t.dom().len(), 4);
        assert_eq!(t.graph(), &[("(0,0)".to_string(), "(a,a)".to_string())]);
    }

    #[test]
    fn oplus_tags_disjointly() {
        let f = pi(&["0"], &["a"], &[("0", "a")]);
        let g = pi(&["1"], &["b"], &[("1", "b")]);
        let s = oplus(&f, &g);
        assert_eq!(s.dom(), &fs(&["L:0", "R:1"]));
        assert_eq!(
            s.graph(),
            &[
                ("L:0".to_string(), "L:a".to_string()),
                ("R:1".to_string(), "R:b".to_string())
            ]
        );
    }

    #[test]
    fn equalizer_of_overlapping_pair_is_empty() {
        // the Note-4 counterexample pair
        let f = pi(&["0", "1"], &["a"], &[("0", "a")]);
        let g = pi(&["0", "1"], &["a"], &[("1", "a")]);
        let (obj, incl) = equalizer(&f, &g).unwrap();
        assert!(obj.is_empty());
        assert!(incl.graph().is_empty());
    }

    #[test]
    fn equalizer_of_equal_pair_is_identity() {
        let f = pi(&["0", "1"], &["a", "b"], &[("0", "a")]);
        let (obj, incl) = equalizer(&f, &f).unwrap();
        assert_eq!(&obj, f.dom());
        assert_eq!(incl, PartialInjection::identity(f.dom()));
    }

    #[test]
    fn equalizer_set_formula() {
        let f = pi(&["0", "1", "2"], &["a", "b"], &[("0", "a"), ("1", "b")]);
        let g = pi(&["0", "1", "2"], &["a", "b"], &[("0", "a")]);
        let (obj, _) = equalizer(&f, &g).unwrap();
        assert_eq!(obj, fs(&["0", "2"]));
    }

    #[test]
    fn leq_is_graph_inclusion() {
        let f = pi(&["0", "1"], &["a", "b"], &[("0", "a")]);
        let g = pi(&["0", "1"], &["a", "b"], &[("0", "a"), ("1", "b")]);
        assert!(leq(&f, &g).unwrap());
        assert!(!leq(&g, &f).unwrap());
    }

    #[test]
    fn sup_of_chain() {
        let bot = PartialInjection::empty(&fs(&["0", "1"]), &fs(&["a", "b"]));
        let f = pi(&["0", "1"], &["a", "b"], &[("0", "a")]);
        let g = pi(&["0", "1"], &["a", "b"], &[("0", "a"), ("1", "b")]);
        assert_eq!(sup(&[bot, f, g.clone()]).unwrap(), g);
    }

    #[test]
    fn sup_of_nondirected_family_errors() {
        let f = pi(&["0"], &["a", "b"], &[("0", "a")]);
        let g = pi(&["0"], &["a", "b"], &[("0", "b")]);
        assert!(matches!(sup(&[f, g]), Err(Error::Directedness(_))));
    }

    #[test]
    fn inverse_law_holds() {
        let f = pi(&["0", "1", "2"], &["a", "b"], &[("0", "b"), ("2", "a")]);
        let fdf = compose(&f, &compose(&dagger(&f), &f).unwrap()).unwrap();
        assert_eq!(fdf, f);
    }

    #[test]
    fn colimit_of_inclusion_chain() {
        let d = ChainDiagram::new(
            vec![fs(&["0"]), fs(&["0", "1"]), fs(&["0", "1", "2"])],
            vec![
                pi(&["0"], &["0", "1"], &[("0", "0")]),
                pi(&["0", "1"], &["0", "1", "2"], &[("0", "0"), ("1", "1")]),
            ],
        )
        .unwrap();
        let (obj, cocone) = chain_colimit(&d).unwrap();
        assert_eq!(obj.len(), 3);
        for (i, c) in cocone.iter().enumerate() {
            assert!(c.is_total(), "leg {i} should be total");
        }
    }

    #[test]
    fn colimit_dropping_chain() {
        // stages {a,b0},{a,b1},{a,b2}, links keep only a
        let d = ChainDiagram::new(
            vec![fs(&["a", "b0"]), fs(&["a", "b1"]), fs(&["a", "b2"])],
            vec![
                pi(&["a", "b0"], &["a", "b1"], &[("a", "a")]),
                pi(&["a", "b1"], &["a", "b2"], &[("a", "a")]),
            ],
        )
        .unwrap();
        let (obj, cocone) = chain_colimit(&d).unwrap();
        // b2 also survives (nothing after the last stage drops it), plus the class of a
        assert_eq!(obj.labels().to_vec(), vec!["a", "b2"]);
        assert_eq!(cocone[0].domain_of_definition(), vec!["a"]);
    }

    #[test]
    fn colimit_of_single_stage_is_identity() {
        let d = ChainDiagram::new(vec![fs(&["x", "y"])], vec![]).unwrap();
        let (obj, cocone) = chain_colimit(&d).unwrap();
        assert_eq!(obj, fs(&["x", "y"]));
        assert_eq!(cocone[0], PartialInjection::identity(&obj));
    }

    #[test]
    fn colimit_cocone_commutes() {
        let d = ChainDiagram::new(
            vec![fs(&["a", "b0"]), fs(&["a", "b1"]), fs(&["a", "b2"])],
            vec![
                pi(&["a", "b0"], &["a", "b1"], &[("a", "a")]),
                pi(&["a", "b1"], &["a", "b2"], &[("a", "a"), ("b1", "b2")]),
            ],
        )
        .unwrap();
        let (_, cocone) = chain_colimit(&d).unwrap();
        for i in 0..d.len() {
            for j in i..d.len() {
                let lhs = compose(&cocone[j], &d.transition(i, j).unwrap()).unwrap();
                assert_eq!(lhs, cocone[i]);
            }
        }
    }

    #[test]
    fn factor_identity_through_last_stage() {
        let d = ChainDiagram::new(
            vec![fs(&["0"]), fs(&["0", "1"])],
            vec![pi(&["0"], &["0", "1"], &[("0", "0")])],
        )
        .unwrap();
        let (obj, cocone) = chain_colimit(&d).unwrap();
        let f = PartialInjection::identity(&obj);
        let (j, g) = factor_through_stage(&d, &cocone, &f).unwrap();
        assert_eq!(j, 1);
        assert_eq!(compose(&cocone[j], &g).unwrap(), f);
    }

    #[test]
    fn factor_empty_morphism_through_first_stage() {
        let d = ChainDiagram::new(
            vec![fs(&["0"]), fs(&["0", "1"])],
            vec![pi(&["0"], &["0", "1"], &[("0", "0")])],
        )
        .unwrap();
        let (obj, cocone) = chain_colimit(&d).unwrap();
        let f = PartialInjection::empty(&fs(&["z"]), &obj);
        let (j, g) = factor_through_stage(&d, &cocone, &f).unwrap();
        assert_eq!(j, 0);
        assert!(g.graph().is_empty());
    }

    #[test]
    fn factor_class_through_earliest_stage() {
        let d = ChainDiagram::new(
            vec![fs(&["a", "b0"]), fs(&["a", "b1"]), fs(&["a", "b2"])],
            vec![
                pi(&["a", "b0"], &["a", "b1"], &[("a", "a")]),
                pi(&["a", "b1"], &["a", "b2"], &[("a", "a")]),
            ],
        )
        .unwrap();
        let (obj, cocone) = chain_colimit(&d).unwrap();
        let f = PartialInjection::new(fs(&["p"]), obj, [("p", "a")]).unwrap();
        let (j, g) = factor_through_stage(&d, &cocone, &f).unwrap();
        assert_eq!(j, 0);
        assert_eq!(g.apply("p"), Some("a"));
    }

    #[test]
    fn empty_set_is_zero_object() {
        // exactly one morphism to and from the empty set
        let x = fs(&["a", "b"]);
        let e = FiniteSet::empty();
        let to = PartialInjection::empty(&x, &e);
        let from = PartialInjection::empty(&e, &x);
        assert!(to.graph().is_empty() && from.graph().is_empty());
        // any partial injection with empty dom or cod has an empty graph by the invariants
    }

    #[test]
    fn json_round_trip_and_rejection() {
        let f = pi(&["0", "1"], &["a"], &[("0", "a")]);
        let s = serde_json::to_string(&f).unwrap();
        let back: PartialInjection = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);

        let bad = r#"{"dom":["0","0"],"cod":["a"],"pairs":[]}"#;
        assert!(serde_json::from_str::<PartialInjection>(bad)
            .unwrap_err()
            .to_string()
            .contains("duplicate-label"));
        let bad2 = r#"{"dom":["0","1"],"cod":["a"],"pairs":[["0","a"],["1","a"]]}"#;
        assert!(serde_json::from_str::<PartialInjection>(bad2)
            .unwrap_err()
            .to_string()
            .contains("non-injective"));
    }
}
