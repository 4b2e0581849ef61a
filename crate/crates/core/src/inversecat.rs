//! Finite inverse categories by explicit presentation: law validation, the
//! Wagner-Preston embedding into partial injections, and verification that
//! the embedding is functorial, dagger-preserving, and faithful.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pinj::{self, FiniteSet, PartialInjection};

/// One declared morphism of a presentation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismDecl {
    pub id: String,
    pub src: String,
    pub dst: String,
}

/// A finite category presented by explicit composition and dagger tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(into = "PresentationRepr")]
pub struct Presentation {
    objects: Vec<String>,
    morphisms: Vec<MorphismDecl>,
    compose: BTreeMap<(String, String), String>,
    dagger: BTreeMap<String, String>,
    identities: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize)]
struct PresentationRepr {
    objects: Vec<String>,
    morphisms: Vec<MorphismDecl>,
    compose: Vec<(String, String, String)>,
    dagger: Vec<(String, String)>,
    identities: BTreeMap<String, String>,
}

impl From<Presentation> for PresentationRepr {
    fn from(p: Presentation) -> Self {
        PresentationRepr {
            objects: p.objects,
            morphisms: p.morphisms,
            compose: p
                .compose
                .into_iter()
                .map(|((g, f), gf)| (g, f, gf))
                .collect(),
            dagger: p.dagger.into_iter().collect(),
            identities: p.identities,
        }
    }
}

impl<'de> Deserialize<'de> for Presentation {
    fn deserialize<D>(deserializer: D) -> std::result::Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        let repr = PresentationRepr::deserialize(deserializer)?;
        Presentation::new(
            repr.objects,
            repr.morphisms,
            repr.compose,
            repr.dagger,
            repr.identities,
        )
        .map_err(serde::de::Error::custom)
    }
}

impl Presentation {
    /// Build a presentation, rejecting structurally malformed tables
    /// (duplicate or dangling ids).
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<MorphismDecl>,
        compose: Vec<(String, String, String)>,
        dagger: Vec<(String, String)>,
        identities: BTreeMap<String, String>,
    ) -> Result<Self> {
        let structural = |message: String| Error::Validation {
            code: "structural",
            message,
        };
        let mut object_set = BTreeSet::new();
        for o in &objects {
            if !object_set.insert(o.clone()) {
                return Err(structural(format!("object {o:?} declared twice")));
            }
        }
        let mut ids = BTreeSet::new();
        for m in &morphisms {
            if !ids.insert(m.id.clone()) {
                return Err(structural(format!("morphism {:?} declared twice", m.id)));
            }
            if !object_set.contains(&m.src) || !object_set.contains(&m.dst) {
                return Err(structural(format!(
                    "morphism {:?} references unknown object {:?} or {:?}",
                    m.id, m.src, m.dst
                )));
            }
        }
        let known = |id: &String| ids.contains(id);
        let mut compose_map = BTreeMap::new();
        for (g, f, gf) in compose {
            if !known(&g) || !known(&f) || !known(&gf) {
                return Err(structural(format!(
                    "compose entry ({g:?},{f:?}) -> {gf:?} references an unknown morphism"
                )));
            }
            if compose_map.insert((g.clone(), f.clone()), gf).is_some() {
                return Err(structural(format!(
                    "compose entry ({g:?},{f:?}) declared twice"
                )));
            }
        }
        let mut dagger_map = BTreeMap::new();
        for (f, fd) in dagger {
            if !known(&f) || !known(&fd) {
                return Err(structural(format!(
                    "dagger entry {f:?} -> {fd:?} references an unknown morphism"
                )));
            }
            if dagger_map.insert(f.clone(), fd).is_some() {
                return Err(structural(format!("dagger entry {f:?} declared twice")));
            }
        }
        for (obj, id) in &identities {
            if !object_set.contains(obj) || !known(id) {
                return Err(structural(format!(
                    "identity entry {obj:?} -> {id:?} references an unknown name"
                )));
            }
        }
        Ok(Presentation {
            objects,
            morphisms,
            compose: compose_map,
            dagger: dagger_map,
            identities,
        })
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[MorphismDecl] {
        &self.morphisms
    }

    pub fn decl(&self, id: &str) -> Option<&MorphismDecl> {
        self.morphisms.iter().find(|m| m.id == id)
    }

    /// `g . f` from the table, if present.
    pub fn compose(&self, g: &str, f: &str) -> Option<&str> {
        self.compose
            .get(&(g.to_string(), f.to_string()))
            .map(String::as_str)
    }

    pub fn dagger_of(&self, f: &str) -> Option<&str> {
        self.dagger.get(f).map(String::as_str)
    }

    pub fn identity_of(&self, obj: &str) -> Option<&str> {
        self.identities.get(obj).map(String::as_str)
    }
}

/// Outcome of checking one law.
#[derive(Debug, Clone, Serialize)]
pub struct LawCheck {
    pub law: String,
    pub pass: bool,
    pub witness: Option<String>,
}

impl LawCheck {
    fn pass(law: &str) -> Self {
        LawCheck {
            law: law.to_string(),
            pass: true,
            witness: None,
        }
    }

    fn fail(law: &str, witness: String) -> Self {
        LawCheck {
            law: law.to_string(),
            pass: false,
            witness: Some(witness),
        }
    }
}

/// Per-law pass/fail listing with a witness for each failure.
#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<LawCheck>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Check the inverse-category laws of a presentation.
pub fn validate(c: &Presentation) -> ValidationReport {
    let mut checks = Vec::new();

    // composition defined exactly when boundaries match, with the right boundaries
    let mut totality = LawCheck::pass("composition-totality");
    'tot: for g in c.morphisms() {
        for f in c.morphisms() {
            let composable = f.dst == g.src;
            match c.compose(&g.id, &f.id) {
                Some(gf) if composable => {
                    let d = c.decl(gf).expect("validated structurally");
                    if d.src != f.src || d.dst != g.dst {
                        totality = LawCheck::fail(
                            "composition-totality",
                            format!("{}.{} = {} has wrong boundaries", g.id, f.id, gf),
                        );
                        break 'tot;
                    }
                }
                Some(_) => {
                    totality = LawCheck::fail(
                        "composition-totality",
                        format!("{}.{} defined but not composable", g.id, f.id),
                    );
                    break 'tot;
                }
                None if composable => {
                    totality = LawCheck::fail(
                        "composition-totality",
                        format!("{}.{} composable but undefined", g.id, f.id),
                    );
                    break 'tot;
                }
                None => {}
            }
        }
    }
    let total_ok = totality.pass;
    checks.push(totality);

    // identity laws
    let mut identity = LawCheck::pass("identity");
    'idl: for obj in c.objects() {
        let Some(id) = c.identity_of(obj) else {
            identity = LawCheck::fail("identity", format!("object {obj} has no identity"));
            break;
        };
        let d = c.decl(id).expect("validated structurally");
        if d.src != *obj || d.dst != *obj {
            identity = LawCheck::fail("identity", format!("identity {id} of {obj} is not an endo"));
            break;
        }
        for f in c.morphisms() {
            if f.src == *obj && c.compose(&f.id, id) != Some(&f.id) {
                identity = LawCheck::fail("identity", format!("{}.{} != {}", f.id, id, f.id));
                break 'idl;
            }
            if f.dst == *obj && c.compose(id, &f.id) != Some(&f.id) {
                identity = LawCheck::fail("identity", format!("{}.{} != {}", id, f.id, f.id));
                break 'idl;
            }
        }
    }
    checks.push(identity);

    // the remaining laws presuppose a total, well-bounded composition table
    if !total_ok {
        checks.push(LawCheck::fail(
            "associativity",
            "skipped: composition table malformed".into(),
        ));
        return ValidationReport { checks };
    }

    let mut assoc = LawCheck::pass("associativity");
    'assoc: for h in c.morphisms() {
        for g in c.morphisms() {
            if g.dst != h.src {
                continue;
            }
            for f in c.morphisms() {
                if f.dst != g.src {
                    continue;
                }
                let hg = c.compose(&h.id, &g.id).expect("total");
                let gf = c.compose(&g.id, &f.id).expect("total");
                if c.compose(hg, &f.id) != c.compose(&h.id, gf) {
                    assoc = LawCheck::fail(
                        "associativity",
                        format!("({},{},{})", h.id, g.id, f.id),
                    );
                    break 'assoc;
                }
            }
        }
    }
    checks.push(assoc);

    // dagger: involutive, contravariant
    let mut dag = LawCheck::pass("dagger-involution");
    for f in c.morphisms() {
        let Some(fd) = c.dagger_of(&f.id) else {
            dag = LawCheck::fail("dagger-involution", format!("{} has no dagger", f.id));
            break;
        };
        let d = c.decl(fd).expect("validated structurally");
        if d.src != f.dst || d.dst != f.src {
            dag = LawCheck::fail(
                "dagger-involution",
                format!("dagger of {} has wrong boundaries", f.id),
            );
            break;
        }
        if c.dagger_of(fd) != Some(&f.id) {
            dag = LawCheck::fail("dagger-involution", format!("{}^dag^dag != {}", f.id, f.id));
            break;
        }
    }
    let dagger_ok = dag.pass;
    checks.push(dag);

    if !dagger_ok {
        checks.push(LawCheck::fail(
            "dagger-contravariance",
            "skipped: dagger table malformed".into(),
        ));
        return ValidationReport { checks };
    }

    let mut contra = LawCheck::pass("dagger-contravariance");
    'contra: for g in c.morphisms() {
        for f in c.morphisms() {
            if f.dst != g.src {
                continue;
            }
            let gf = c.compose(&g.id, &f.id).expect("total");
            let lhs = c.dagger_of(gf).expect("dagger total");
            let rhs = c
                .compose(
                    c.dagger_of(&f.id).expect("dagger total"),
                    c.dagger_of(&g.id).expect("dagger total"),
                )
                .expect("total");
            if lhs != rhs {
                contra = LawCheck::fail("dagger-contravariance", format!("({},{})", g.id, f.id));
                break 'contra;
            }
        }
    }
    checks.push(contra);

    // f = f f^dag f
    let mut inverse = LawCheck::pass("inverse");
    for f in c.morphisms() {
        let fd = c.dagger_of(&f.id).expect("dagger total");
        let fdf = c.compose(fd, &f.id).expect("total");
        let fdff = c.compose(&f.id, fdf).expect("total");
        if fdff != f.id {
            inverse = LawCheck::fail("inverse", format!("{} != {}.{}.{}", f.id, f.id, fd, f.id));
            break;
        }
    }
    checks.push(inverse);

    // endo-idempotents commute pairwise
    let mut idem = LawCheck::pass("idempotents-commute");
    'idem: for obj in c.objects() {
        let idempotents: Vec<&MorphismDecl> = c
            .morphisms()
            .iter()
            .filter(|m| {
                m.src == *obj && m.dst == *obj && c.compose(&m.id, &m.id) == Some(&m.id)
            })
            .collect();
        for p in &idempotents {
            for q in &idempotents {
                if c.compose(&p.id, &q.id) != c.compose(&q.id, &p.id) {
                    idem = LawCheck::fail(
                        "idempotents-commute",
                        format!("({},{}) on {obj}", p.id, q.id),
                    );
                    break 'idem;
                }
            }
        }
    }
    checks.push(idem);

    ValidationReport { checks }
}

/// The Wagner-Preston embedding: objects go to their out-hom-sets, a
/// morphism acts by precomposition with its dagger on the morphisms it
/// restricts.
#[derive(Debug, Clone, Serialize)]
pub struct WagnerPreston {
    pub objects: BTreeMap<String, FiniteSet>,
    pub morphisms: BTreeMap<String, PartialInjection>,
}

pub fn wagner_preston(c: &Presentation) -> Result<WagnerPreston> {
    let report = validate(c);
    if !report.passed() {
        let failed: Vec<&str> = report
            .checks
            .iter()
            .filter(|ch| !ch.pass)
            .map(|ch| ch.law.as_str())
            .collect();
        return Err(Error::Precondition(format!(
            "wagner_preston needs a valid inverse category; failing laws: {}",
            failed.join(", ")
        )));
    }

    let mut objects = BTreeMap::new();
    for obj in c.objects() {
        let labels: Vec<String> = c
            .morphisms()
            .iter()
            .filter(|m| m.src == *obj)
            .map(|m| m.id.clone())
            .collect();
        objects.insert(obj.clone(), FiniteSet::new(labels)?);
    }

    let mut morphisms = BTreeMap::new();
    for f in c.morphisms() {
        let fd = c.dagger_of(&f.id).expect("validated");
        let fdf = c.compose(fd, &f.id).expect("validated");
        let mut pairs = Vec::new();
        for g in c.morphisms() {
            if g.src != f.src {
                continue;
            }
            // domain: g with g = g f^dag f; action: g -> g f^dag
            if c.compose(&g.id, fdf) == Some(&g.id) {
                let image = c.compose(&g.id, fd).expect("validated");
                pairs.push((g.id.clone(), image.to_string()));
            }
        }
        morphisms.insert(
            f.id.clone(),
            PartialInjection::new(objects[&f.src].clone(), objects[&f.dst].clone(), pairs)?,
        );
    }
    Ok(WagnerPreston { objects, morphisms })
}

/// Verification that a Wagner-Preston embedding is an embedding: exact
/// functoriality, dagger preservation, and hom-set injectivity.
#[derive(Debug, Clone, Serialize)]
pub struct EmbeddingReport {
    pub checks: Vec<LawCheck>,
}

impl EmbeddingReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

pub fn check_embedding(c: &Presentation, emb: &WagnerPreston) -> Result<EmbeddingReport> {
    let mut checks = Vec::new();

    let mut identities = LawCheck::pass("identities");
    for obj in c.objects() {
        let id = c
            .identity_of(obj)
            .ok_or_else(|| Error::Consistency(format!("object {obj} has no identity")))?;
        if emb.morphisms[id] != PartialInjection::identity(&emb.objects[obj]) {
            identities = LawCheck::fail("identities", format!("F({id}) is not an identity"));
            break;
        }
    }
    checks.push(identities);

    let mut functorial = LawCheck::pass("functorial");
    'fun: for g in c.morphisms() {
        for f in c.morphisms() {
            if f.dst != g.src {
                continue;
            }
            let gf = c
                .compose(&g.id, &f.id)
                .ok_or_else(|| Error::Consistency(format!("missing composite {}.{}", g.id, f.id)))?;
            let composed = pinj::compose(&emb.morphisms[&g.id], &emb.morphisms[&f.id])?;
            if emb.morphisms[gf] != composed {
                functorial = LawCheck::fail(
                    "functorial",
                    format!("F({}.{}) != F({}) . F({})", g.id, f.id, g.id, f.id),
                );
                break 'fun;
            }
        }
    }
    checks.push(functorial);

    let mut dagger = LawCheck::pass("dagger");
    for f in c.morphisms() {
        let fd = c
            .dagger_of(&f.id)
            .ok_or_else(|| Error::Consistency(format!("missing dagger of {}", f.id)))?;
        if emb.morphisms[fd] != pinj::dagger(&emb.morphisms[&f.id]) {
            dagger = LawCheck::fail("dagger", format!("F({}^dag) != F({})^dag", f.id, f.id));
            break;
        }
    }
    checks.push(dagger);

    let mut faithful = LawCheck::pass("faithful");
    'faith: for f in c.morphisms() {
        for g in c.morphisms() {
            if f.id != g.id
                && f.src == g.src
                && f.dst == g.dst
                && emb.morphisms[&f.id] == emb.morphisms[&g.id]
            {
                faithful = LawCheck::fail("faithful", format!("F({}) = F({})", f.id, g.id));
                break 'faith;
            }
        }
    }
    checks.push(faithful);

    Ok(EmbeddingReport { checks })
}

/// `Z/2` as a one-object inverse category: identity `e`, involution `s`.
pub fn cyclic_group_z2() -> Presentation {
    Presentation::new(
        vec!["*".into()],
        vec![
            MorphismDecl {
                id: "e".into(),
                src: "*".into(),
                dst: "*".into(),
            },
            MorphismDecl {
                id: "s".into(),
                src: "*".into(),
                dst: "*".into(),
            },
        ],
        vec![
            ("e".into(), "e".into(), "e".into()),
            ("e".into(), "s".into(), "s".into()),
            ("s".into(), "e".into(), "s".into()),
            ("s".into(), "s".into(), "e".into()),
        ],
        vec![("e".into(), "e".into()), ("s".into(), "s".into())],
        BTreeMap::from([("*".to_string(), "e".to_string())]),
    )
    .expect("Z/2 is well-formed")
}

fn morphism_name(f: &PartialInjection) -> String {
    if f.graph().is_empty() {
        return "[]".into();
    }
    let pairs: Vec<String> = f
        .graph()
        .iter()
        .map(|(a, b)| format!("{a}>{b}"))
        .collect();
    format!("[{}]", pairs.join(","))
}

/// The symmetric inverse monoid on an `n`-element set, presented as a
/// one-object inverse category whose morphisms are all partial injections
/// of the set. `n = 2` has 7 morphisms.
pub fn symmetric_inverse_monoid(n: usize) -> Presentation {
    let set = FiniteSet::new((1..=n).map(|k| k.to_string())).expect("distinct labels");
    let all = pinj::all_partial_injections(&set, &set);
    let obj = "*".to_string();
    let name_of = |f: &PartialInjection| morphism_name(f);
    let morphisms: Vec<MorphismDecl> = all
        .iter()
        .map(|f| MorphismDecl {
            id: name_of(f),
            src: obj.clone(),
            dst: obj.clone(),
        })
        .collect();
    let mut compose = Vec::new();
    for g in &all {
        for f in &all {
            let gf = pinj::compose(g, f).expect("endo-composable");
            compose.push((name_of(g), name_of(f), name_of(&gf)));
        }
    }
    let dagger = all
        .iter()
        .map(|f| (name_of(f), name_of(&pinj::dagger(f))))
        .collect();
    let identities = BTreeMap::from([(
        obj.clone(),
        name_of(&PartialInjection::identity(&set)),
    )]);
    Presentation::new(vec![obj], morphisms, compose, dagger, identities)
        .expect("symmetric inverse monoid is well-formed")
}

/// The smallest sub-presentation containing the given morphisms: closed
/// under composition and dagger, with all touched identities added.
pub fn closed_subpresentation(p: &Presentation, generators: &[String]) -> Result<Presentation> {
    let mut keep: BTreeSet<String> = BTreeSet::new();
    let mut queue: Vec<String> = Vec::new();
    let push = |id: &str, keep: &mut BTreeSet<String>, queue: &mut Vec<String>| {
        if keep.insert(id.to_string()) {
            queue.push(id.to_string());
        }
    };
    for g in generators {
        if p.decl(g).is_none() {
            return Err(Error::Validation {
                code: "unknown-label",
                message: format!("generator {g:?} is not a morphism of the presentation"),
            });
        }
        push(g, &mut keep, &mut queue);
    }
    while let Some(id) = queue.pop() {
        let decl = p.decl(&id).expect("known");
        if let Some(fd) = p.dagger_of(&id) {
            push(fd, &mut keep, &mut queue);
        }
        for obj in [&decl.src, &decl.dst] {
            if let Some(e) = p.identity_of(obj) {
                push(e, &mut keep, &mut queue);
            }
        }
        for other in keep.clone() {
            for (g, f) in [(&id, &other), (&other, &id)] {
                if let Some(gf) = p.compose(g, f) {
                    push(gf, &mut keep, &mut queue);
                }
            }
        }
    }
    let objects: Vec<String> = p
        .objects()
        .iter()
        .filter(|o| {
            keep.iter()
                .any(|id| {
                    let d = p.decl(id).expect("known");
                    d.src == **o || d.dst == **o
                })
        })
        .cloned()
        .collect();
    let morphisms: Vec<MorphismDecl> = p
        .morphisms()
        .iter()
        .filter(|m| keep.contains(&m.id))
        .cloned()
        .collect();
    let compose: Vec<(String, String, String)> = morphisms
        .iter()
        .flat_map(|g| {
            morphisms.iter().filter_map(|f| {
                p.compose(&g.id, &f.id)
                    .map(|gf| (g.id.clone(), f.id.clone(), gf.to_string()))
            })
        })
        .collect();
    let dagger: Vec<(String, String)> = morphisms
        .iter()
        .filter_map(|m| p.dagger_of(&m.id).map(|d| (m.id.clone(), d.to_string())))
        .collect();
    let identities: BTreeMap<String, String> = objects
        .iter()
        .filter_map(|o| p.identity_of(o).map(|e| (o.clone(), e.to_string())))
        .collect();
    Presentation::new(objects, morphisms, compose, dagger, identities)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_validates_and_embeds() {
        let c = cyclic_group_z2();
        assert!(validate(&c).passed());
        let emb = wagner_preston(&c).unwrap();
        // F(*) = {e, s}; F(s) is the swap
        assert_eq!(emb.objects["*"].labels(), &["e".to_string(), "s".to_string()]);
        let fs = &emb.morphisms["s"];
        assert_eq!(fs.apply("e"), Some("s"));
        assert_eq!(fs.apply("s"), Some("e"));
        // F(id) = id
        assert_eq!(
            emb.morphisms["e"],
            PartialInjection::identity(&emb.objects["*"])
        );
        assert!(check_embedding(&c, &emb).unwrap().passed());
    }

    #[test]
    fn i2_has_seven_morphisms_and_embeds() {
        let c = symmetric_inverse_monoid(2);
        assert_eq!(c.morphisms().len(), 7);
        assert!(validate(&c).passed());
        let emb = wagner_preston(&c).unwrap();
        assert_eq!(emb.morphisms.len(), 7);
        assert!(check_embedding(&c, &emb).unwrap().passed());
    }

    #[test]
    fn broken_dagger_fails_with_witness() {
        // Z/2 with the dagger of s redirected to e: the involution law fails
        let c = Presentation::new(
            vec!["*".into()],
            vec![
                MorphismDecl {
                    id: "e".into(),
                    src: "*".into(),
                    dst: "*".into(),
                },
                MorphismDecl {
                    id: "s".into(),
                    src: "*".into(),
                    dst: "*".into(),
                },
            ],
            vec![
                ("e".into(), "e".into(), "e".into()),
                ("e".into(), "s".into(), "s".into()),
                ("s".into(), "e".into(), "s".into()),
                ("s".into(), "s".into(), "e".into()),
            ],
            vec![("e".into(), "e".into()), ("s".into(), "e".into())],
            BTreeMap::from([("*".to_string(), "e".to_string())]),
        )
        .unwrap();
        let report = validate(&c);
        assert!(!report.passed());
        assert!(report
            .checks
            .iter()
            .any(|ch| !ch.pass && ch.witness.is_some()));
        assert!(matches!(
            wagner_preston(&c),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn dangling_table_entry_is_structural() {
        let r = Presentation::new(
            vec!["*".into()],
            vec![MorphismDecl {
                id: "e".into(),
                src: "*".into(),
                dst: "*".into(),
            }],
            vec![("e".into(), "e".into(), "ghost".into())],
            vec![("e".into(), "e".into())],
            BTreeMap::from([("*".to_string(), "e".to_string())]),
        );
        assert!(matches!(r, Err(Error::Validation { .. })));
    }

    #[test]
    fn corrupted_embedding_loses_faithfulness() {
        let c = cyclic_group_z2();
        let mut emb = wagner_preston(&c).unwrap();
        let id = emb.morphisms["e"].clone();
        emb.morphisms.insert("s".into(), id);
        let report = check_embedding(&c, &emb).unwrap();
        let faithful = report.checks.iter().find(|ch| ch.law == "faithful").unwrap();
        assert!(!faithful.pass);
        assert!(faithful.witness.is_some());
    }

    #[test]
    fn closure_of_a_generator_in_i2() {
        let c = symmetric_inverse_monoid(2);
        let sub = closed_subpresentation(&c, &["[1>2]".to_string()]).unwrap();
        assert!(validate(&sub).passed());
        let emb = wagner_preston(&sub).unwrap();
        assert!(check_embedding(&sub, &emb).unwrap().passed());
    }

    #[test]
    fn i3_validates() {
        let c = symmetric_inverse_monoid(3);
        assert_eq!(c.morphisms().len(), 34);
        assert!(validate(&c).passed());
    }

    #[test]
    fn presentation_json_round_trip() {
        let c = cyclic_group_z2();
        let s = serde_json::to_string(&c).unwrap();
        let back: Presentation = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
    }
}
