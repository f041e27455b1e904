//! Finitely presented categories and functors between them.
//!
//! A category here is a finite object list, a finite morphism list, and a
//! total composition table. Identities are explicit morphisms in the
//! in-memory model; the JSON format omits them and they are inserted at
//! load time, in object order, ahead of the declared morphisms.
//!
//! Construction is deliberately permissive: a [`FinCategory`] can hold a
//! table that violates the category axioms, and [`FinCategory::validate`]
//! reports the first violation with a witness. Validators never panic on
//! lawless input.

use crate::error::{Error, Result};
use serde::Deserialize;
use std::collections::BTreeMap;
use std::fmt;

/// Finite category presented by a total composition table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinCategory {
    objects: Vec<String>,
    /// `(name, dom, cod)` per morphism.
    morphisms: Vec<(String, usize, usize)>,
    /// Identity morphism index per object.
    identities: Vec<usize>,
    /// `table[g * num_morphisms + f]` is `g . f` when defined.
    table: Vec<Option<usize>>,
}

/// First witness of a category-axiom violation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CategoryViolation {
    /// Identity of `object` is not an endomorphism of it.
    BadIdentity { object: String },
    /// `then . first` is undefined although `cod(first) = dom(then)`.
    MissingComposite { then: String, first: String },
    /// `then . first` is defined although `cod(first) != dom(then)`.
    SpuriousComposite { then: String, first: String },
    /// `then . first = got`, but `got` is not a morphism `dom(first) -> cod(then)`.
    IllTypedComposite {
        then: String,
        first: String,
        got: String,
    },
    /// `id . f != f`.
    LeftUnit { id: String, f: String },
    /// `f . id != f`.
    RightUnit { f: String, id: String },
    /// `(h . g) . f != h . (g . f)`.
    Associativity { h: String, g: String, f: String },
}

impl fmt::Display for CategoryViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CategoryViolation::BadIdentity { object } => {
                write!(f, "identity of {object} is not an endomorphism of {object}")
            }
            CategoryViolation::MissingComposite { then, first } => {
                write!(f, "no composite declared for {then} . {first}")
            }
            CategoryViolation::SpuriousComposite { then, first } => {
                write!(f, "composite declared for non-composable {then} . {first}")
            }
            CategoryViolation::IllTypedComposite { then, first, got } => {
                write!(f, "composite {then} . {first} = {got} is ill-typed")
            }
            CategoryViolation::LeftUnit { id, f: m } => write!(f, "unit law fails: {id} . {m} != {m}"),
            CategoryViolation::RightUnit { f: m, id } => write!(f, "unit law fails: {m} . {id} != {m}"),
            CategoryViolation::Associativity { h, g, f: m } => {
                write!(f, "associativity fails on ({h}, {g}, {m})")
            }
        }
    }
}

impl FinCategory {
    /// Raw constructor. `morphisms` are `(name, dom, cod)`;
    /// `identities[x]` names the identity of object `x`; `entries` are
    /// `(then, first, composite)` by morphism index. Identity
    /// compositions are filled in automatically, then explicit entries
    /// are applied on top, so a deliberately lawless table can be built
    /// and handed to [`FinCategory::validate`].
    pub fn from_raw(
        objects: Vec<String>,
        morphisms: Vec<(String, usize, usize)>,
        identities: Vec<usize>,
        entries: &[(usize, usize, usize)],
    ) -> Result<Self> {
        let m = morphisms.len();
        if identities.len() != objects.len() {
            return Err(Error::schema("one identity per object required"));
        }
        let mut seen = std::collections::BTreeSet::new();
        for (name, dom, cod) in &morphisms {
            if *dom >= objects.len() || *cod >= objects.len() {
                return Err(Error::schema(format!("morphism {name} out of range")));
            }
            if !seen.insert(name.clone()) {
                return Err(Error::schema(format!("duplicate morphism name {name}")));
            }
        }
        let mut seen_obj = std::collections::BTreeSet::new();
        for o in &objects {
            if !seen_obj.insert(o.clone()) {
                return Err(Error::schema(format!("duplicate object name {o}")));
            }
        }
        for &i in &identities {
            if i >= m {
                return Err(Error::schema("identity index out of range"));
            }
        }
        let mut table = vec![None; m * m];
        // g . id_dom(g) = g and id_cod(g) . g = g
        for g in 0..m {
            let (_, dom, cod) = morphisms[g];
            if let (Some(&idd), Some(&idc)) = (identities.get(dom), identities.get(cod)) {
                table[g * m + idd] = Some(g);
                table[idc * m + g] = Some(g);
            }
        }
        for &(g, f, gf) in entries {
            if g >= m || f >= m || gf >= m {
                return Err(Error::schema("composition entry out of range"));
            }
            table[g * m + f] = Some(gf);
        }
        Ok(FinCategory {
            objects,
            morphisms,
            identities,
            table,
        })
    }

    /// Named-based constructor: identities are created automatically as
    /// `id_<object>`, placed before the declared morphisms in object
    /// order. `compositions` entries read `(first, then, equals)`:
    /// "first do `first`, then `then`, and the composite is `equals`".
    pub fn build(
        objects: &[&str],
        morphisms: &[(&str, &str, &str)],
        compositions: &[(&str, &str, &str)],
    ) -> Result<Self> {
        let object_names: Vec<String> = objects.iter().map(|s| s.to_string()).collect();
        let mut morphism_list: Vec<(String, usize, usize)> = Vec::new();
        let obj_index = |name: &str| {
            object_names
                .iter()
                .position(|o| o == name)
                .ok_or_else(|| Error::schema(format!("unknown object {name}")))
        };
        let mut identities = Vec::new();
        for (x, o) in object_names.iter().enumerate() {
            identities.push(morphism_list.len());
            morphism_list.push((format!("id_{o}"), x, x));
        }
        for (name, dom, cod) in morphisms {
            if morphism_list.iter().any(|(n, _, _)| n == name) {
                return Err(Error::schema(format!("duplicate morphism name {name}")));
            }
            morphism_list.push((name.to_string(), obj_index(dom)?, obj_index(cod)?));
        }
        let mor_index = |name: &str| {
            morphism_list
                .iter()
                .position(|(n, _, _)| n == name)
                .ok_or_else(|| Error::schema(format!("unknown morphism {name}")))
        };
        let mut entries = Vec::new();
        for (first, then, equals) in compositions {
            entries.push((mor_index(then)?, mor_index(first)?, mor_index(equals)?));
        }
        FinCategory::from_raw(object_names, morphism_list, identities, &entries)
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn object_name(&self, x: usize) -> &str {
        &self.objects[x]
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn morphism_name(&self, f: usize) -> &str {
        &self.morphisms[f].0
    }

    pub fn morphism_index(&self, name: &str) -> Option<usize> {
        self.morphisms.iter().position(|(n, _, _)| n == name)
    }

    pub fn dom(&self, f: usize) -> usize {
        self.morphisms[f].1
    }

    pub fn cod(&self, f: usize) -> usize {
        self.morphisms[f].2
    }

    pub fn identity(&self, x: usize) -> usize {
        self.identities[x]
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identities.contains(&f)
    }

    /// `g . f`, defined when `cod(f) = dom(g)` and the table has the entry.
    pub fn compose(&self, g: usize, f: usize) -> Result<usize> {
        self.table[g * self.num_morphisms() + f].ok_or_else(|| {
            Error::invalid(format!(
                "composite {} . {} is not defined",
                self.morphism_name(g),
                self.morphism_name(f)
            ))
        })
    }

    /// All `(dom, cod, morphism)` triples in morphism order. This is the
    /// enumeration the end formula ranges over.
    pub fn morphism_pairs(&self) -> Vec<(usize, usize, usize)> {
        (0..self.num_morphisms())
            .map(|f| (self.dom(f), self.cod(f), f))
            .collect()
    }

    /// Checks the category axioms exhaustively and reports the first
    /// violation found: identity typing, then table shape, then composite
    /// typing, then unit laws, then associativity.
    pub fn validate(&self) -> std::result::Result<(), CategoryViolation> {
        let m = self.num_morphisms();
        for (x, &i) in self.identities.iter().enumerate() {
            if self.dom(i) != x || self.cod(i) != x {
                return Err(CategoryViolation::BadIdentity {
                    object: self.objects[x].clone(),
                });
            }
        }
        for g in 0..m {
            for f in 0..m {
                let composable = self.cod(f) == self.dom(g);
                match self.table[g * m + f] {
                    None if composable => {
                        return Err(CategoryViolation::MissingComposite {
                            then: self.morphism_name(g).into(),
                            first: self.morphism_name(f).into(),
                        })
                    }
                    Some(_) if !composable => {
                        return Err(CategoryViolation::SpuriousComposite {
                            then: self.morphism_name(g).into(),
                            first: self.morphism_name(f).into(),
                        })
                    }
                    Some(gf) if self.dom(gf) != self.dom(f) || self.cod(gf) != self.cod(g) => {
                        return Err(CategoryViolation::IllTypedComposite {
                            then: self.morphism_name(g).into(),
                            first: self.morphism_name(f).into(),
                            got: self.morphism_name(gf).into(),
                        })
                    }
                    _ => {}
                }
            }
        }
        for f in 0..m {
            let idc = self.identities[self.cod(f)];
            if self.table[idc * m + f] != Some(f) {
                return Err(CategoryViolation::LeftUnit {
                    id: self.morphism_name(idc).into(),
                    f: self.morphism_name(f).into(),
                });
            }
            let idd = self.identities[self.dom(f)];
            if self.table[f * m + idd] != Some(f) {
                return Err(CategoryViolation::RightUnit {
                    f: self.morphism_name(f).into(),
                    id: self.morphism_name(idd).into(),
                });
            }
        }
        for f in 0..m {
            for g in 0..m {
                if self.cod(f) != self.dom(g) {
                    continue;
                }
                for h in 0..m {
                    if self.cod(g) != self.dom(h) {
                        continue;
                    }
                    let gf = self.table[g * m + f].unwrap();
                    let hg = self.table[h * m + g].unwrap();
                    if self.table[h * m + gf] != self.table[hg * m + f] {
                        return Err(CategoryViolation::Associativity {
                            h: self.morphism_name(h).into(),
                            g: self.morphism_name(g).into(),
                            f: self.morphism_name(f).into(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    // ----- stock categories ---------------------------------------------

    pub fn empty() -> Self {
        FinCategory::build(&[], &[], &[]).unwrap()
    }

    pub fn terminal() -> Self {
        FinCategory::build(&["*"], &[], &[]).unwrap()
    }

    pub fn discrete(names: &[&str]) -> Self {
        FinCategory::build(names, &[], &[]).unwrap()
    }

    /// Two objects, one non-identity arrow `u : a -> b`.
    pub fn walking_arrow() -> Self {
        FinCategory::build(&["a", "b"], &[("u", "a", "b")], &[]).unwrap()
    }

    /// Two parallel arrows `u, v : a -> b`.
    pub fn parallel_pair() -> Self {
        FinCategory::build(&["a", "b"], &[("u", "a", "b"), ("v", "a", "b")], &[]).unwrap()
    }

    /// `u : a -> b`, `v : b -> c`, and their composite `vu`.
    pub fn composable_pair() -> Self {
        FinCategory::build(
            &["a", "b", "c"],
            &[("u", "a", "b"), ("v", "b", "c"), ("vu", "a", "c")],
            &[("u", "v", "vu")],
        )
        .unwrap()
    }

    /// `b <- a -> c`.
    pub fn span() -> Self {
        FinCategory::build(&["a", "b", "c"], &[("l", "a", "b"), ("r", "a", "c")], &[]).unwrap()
    }

    /// `a -> c <- b`.
    pub fn cospan() -> Self {
        FinCategory::build(&["a", "b", "c"], &[("l", "a", "c"), ("r", "b", "c")], &[]).unwrap()
    }

    /// One object, one non-identity idempotent `e`.
    pub fn walking_idempotent() -> Self {
        FinCategory::build(&["x"], &[("e", "x", "x")], &[("e", "e", "e")]).unwrap()
    }

    /// `u : a -> b` and `v : b -> a`, inverse to each other.
    pub fn walking_iso() -> Self {
        FinCategory::build(
            &["a", "b"],
            &[("u", "a", "b"), ("v", "b", "a")],
            &[("u", "v", "id_a"), ("v", "u", "id_b")],
        )
        .unwrap()
    }

    /// One-object category from a monoid multiplication table:
    /// `table[i][j]` is the product `e_i * e_j`, and the composite of
    /// "first `e_j`, then `e_i`" is `e_i * e_j`.
    pub fn from_monoid_table(elements: &[&str], table: &[Vec<usize>], unit: usize) -> Result<Self> {
        let n = elements.len();
        if table.len() != n || table.iter().any(|r| r.len() != n) || unit >= n {
            return Err(Error::schema("monoid table shape mismatch"));
        }
        let morphisms: Vec<(String, usize, usize)> =
            elements.iter().map(|e| (e.to_string(), 0, 0)).collect();
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if table[i][j] >= n {
                    return Err(Error::schema("monoid table value out of range"));
                }
                entries.push((i, j, table[i][j]));
            }
        }
        FinCategory::from_raw(
            vec!["*".to_string()],
            morphisms,
            vec![unit],
            &entries,
        )
    }

    /// Cyclic group of order `n` as a one-object category.
    pub fn cyclic(n: usize) -> Self {
        let names: Vec<String> = (0..n)
            .map(|k| if k == 0 { "e".into() } else { format!("g{k}") })
            .collect();
        let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        FinCategory::from_monoid_table(&name_refs, &table, 0).unwrap()
    }

    /// Linear order on `n` objects: one arrow `a_i_j : o_i -> o_j` per
    /// `i < j`, composites forced.
    pub fn chain(n: usize) -> Self {
        let objects: Vec<String> = (0..n).map(|i| format!("o{i}")).collect();
        let object_refs: Vec<&str> = objects.iter().map(String::as_str).collect();
        let mut morphisms = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                morphisms.push((format!("a{i}_{j}"), objects[i].clone(), objects[j].clone()));
            }
        }
        let morphism_refs: Vec<(&str, &str, &str)> = morphisms
            .iter()
            .map(|(n, d, c)| (n.as_str(), d.as_str(), c.as_str()))
            .collect();
        let mut compositions = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    compositions.push((
                        format!("a{i}_{j}"),
                        format!("a{j}_{k}"),
                        format!("a{i}_{k}"),
                    ));
                }
            }
        }
        let composition_refs: Vec<(&str, &str, &str)> = compositions
            .iter()
            .map(|(f, g, h)| (f.as_str(), g.as_str(), h.as_str()))
            .collect();
        FinCategory::build(&object_refs, &morphism_refs, &composition_refs).unwrap()
    }

    // ----- JSON ----------------------------------------------------------

    /// Loads a category document.
    ///
    /// Format: `{"objects": [..], "morphisms": [{"name", "dom", "cod"}..],
    /// "composition": [{"first", "then", "equals"}..]}`. Identities are
    /// omitted from the document and inserted as `id_<object>`; the
    /// composition list must cover exactly the composable pairs of
    /// non-identity morphisms. `equals` may name any morphism, including
    /// an inserted identity.
    pub fn from_json_str(s: &str) -> Result<Self> {
        let doc: CatDoc = serde_json::from_str(s)?;
        let objects = doc.objects;
        let mut morphism_list: Vec<(String, usize, usize)> = Vec::new();
        let mut identities = Vec::new();
        for (x, o) in objects.iter().enumerate() {
            identities.push(morphism_list.len());
            morphism_list.push((format!("id_{o}"), x, x));
        }
        let num_ids = morphism_list.len();
        for m in &doc.morphisms {
            if morphism_list.iter().any(|(n, _, _)| n == &m.name) {
                return Err(Error::schema(format!(
                    "morphism name {} collides with an existing morphism",
                    m.name
                )));
            }
            let dom = objects
                .iter()
                .position(|o| o == &m.dom)
                .ok_or_else(|| Error::schema(format!("unknown object {}", m.dom)))?;
            let cod = objects
                .iter()
                .position(|o| o == &m.cod)
                .ok_or_else(|| Error::schema(format!("unknown object {}", m.cod)))?;
            morphism_list.push((m.name.clone(), dom, cod));
        }
        let mor_index = |name: &str| {
            morphism_list
                .iter()
                .position(|(n, _, _)| n == name)
                .ok_or_else(|| Error::schema(format!("unknown morphism {name}")))
        };
        let mut declared: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for c in &doc.composition {
            let first = mor_index(&c.first)?;
            let then = mor_index(&c.then)?;
            let equals = mor_index(&c.equals)?;
            if first < num_ids || then < num_ids {
                return Err(Error::schema(format!(
                    "composition entry ({}, {}) involves an identity; identity composites are implicit",
                    c.first, c.then
                )));
            }
            if declared.insert((then, first), equals).is_some() {
                return Err(Error::schema(format!(
                    "duplicate composition entry ({}, {})",
                    c.first, c.then
                )));
            }
        }
        for f in num_ids..morphism_list.len() {
            for g in num_ids..morphism_list.len() {
                let composable = morphism_list[f].2 == morphism_list[g].1;
                let present = declared.contains_key(&(g, f));
                if composable && !present {
                    return Err(Error::schema(format!(
                        "missing composition entry for first {} then {}",
                        morphism_list[f].0, morphism_list[g].0
                    )));
                }
                if !composable && present {
                    return Err(Error::schema(format!(
                        "composition entry for non-composable first {} then {}",
                        morphism_list[f].0, morphism_list[g].0
                    )));
                }
            }
        }
        let entries: Vec<(usize, usize, usize)> = declared
            .into_iter()
            .map(|((g, f), gf)| (g, f, gf))
            .collect();
        FinCategory::from_raw(objects, morphism_list, identities, &entries)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CatDoc {
    objects: Vec<String>,
    #[serde(default)]
    morphisms: Vec<MorDoc>,
    #[serde(default)]
    composition: Vec<CompDoc>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MorDoc {
    name: String,
    dom: String,
    cod: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CompDoc {
    first: String,
    then: String,
    equals: String,
}

/// Functor between finitely presented categories, given on objects and
/// morphisms by index maps.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CatFunctor {
    source: FinCategory,
    target: FinCategory,
    object_map: Vec<usize>,
    morphism_map: Vec<usize>,
}

/// First witness of a functoriality violation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FunctorViolation {
    /// Image of `f` does not have the image dom/cod.
    IllTypedImage { f: String },
    /// Image of `id_object` is not the identity of the image object.
    IdentityNotPreserved { object: String },
    /// `F(then . first) != F(then) . F(first)`.
    CompositionNotPreserved { then: String, first: String },
}

impl fmt::Display for FunctorViolation {
    fn fmt(&self, fmt: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctorViolation::IllTypedImage { f } => write!(fmt, "image of {f} is ill-typed"),
            FunctorViolation::IdentityNotPreserved { object } => {
                write!(fmt, "identity of {object} is not sent to an identity")
            }
            FunctorViolation::CompositionNotPreserved { then, first } => {
                write!(fmt, "functor breaks composition on {then} . {first}")
            }
        }
    }
}

impl CatFunctor {
    pub fn new(
        source: FinCategory,
        target: FinCategory,
        object_map: Vec<usize>,
        morphism_map: Vec<usize>,
    ) -> Result<Self> {
        if object_map.len() != source.num_objects()
            || morphism_map.len() != source.num_morphisms()
        {
            return Err(Error::shape("functor map lengths must match the source"));
        }
        if object_map.iter().any(|&x| x >= target.num_objects())
            || morphism_map.iter().any(|&f| f >= target.num_morphisms())
        {
            return Err(Error::shape("functor map hits a missing target index"));
        }
        Ok(CatFunctor {
            source,
            target,
            object_map,
            morphism_map,
        })
    }

    pub fn identity(c: &FinCategory) -> Self {
        CatFunctor {
            source: c.clone(),
            target: c.clone(),
            object_map: (0..c.num_objects()).collect(),
            morphism_map: (0..c.num_morphisms()).collect(),
        }
    }

    pub fn source(&self) -> &FinCategory {
        &self.source
    }

    pub fn target(&self) -> &FinCategory {
        &self.target
    }

    pub fn on_object(&self, x: usize) -> usize {
        self.object_map[x]
    }

    pub fn on_morphism(&self, f: usize) -> usize {
        self.morphism_map[f]
    }

    pub fn validate(&self) -> std::result::Result<(), FunctorViolation> {
        let src = &self.source;
        let tgt = &self.target;
        for f in 0..src.num_morphisms() {
            let ff = self.morphism_map[f];
            if tgt.dom(ff) != self.object_map[src.dom(f)]
                || tgt.cod(ff) != self.object_map[src.cod(f)]
            {
                return Err(FunctorViolation::IllTypedImage {
                    f: src.morphism_name(f).into(),
                });
            }
        }
        for x in 0..src.num_objects() {
            if self.morphism_map[src.identity(x)] != tgt.identity(self.object_map[x]) {
                return Err(FunctorViolation::IdentityNotPreserved {
                    object: src.object_name(x).into(),
                });
            }
        }
        for f in 0..src.num_morphisms() {
            for g in 0..src.num_morphisms() {
                if src.cod(f) != src.dom(g) {
                    continue;
                }
                let Ok(gf) = src.compose(g, f) else { continue };
                let Ok(image) = tgt.compose(self.morphism_map[g], self.morphism_map[f]) else {
                    return Err(FunctorViolation::CompositionNotPreserved {
                        then: src.morphism_name(g).into(),
                        first: src.morphism_name(f).into(),
                    });
                };
                if self.morphism_map[gf] != image {
                    return Err(FunctorViolation::CompositionNotPreserved {
                        then: src.morphism_name(g).into(),
                        first: src.morphism_name(f).into(),
                    });
                }
            }
        }
        Ok(())
    }

    /// `outer . inner`; the target of `inner` must equal the source of
    /// `outer` structurally.
    pub fn compose(outer: &CatFunctor, inner: &CatFunctor) -> Result<CatFunctor> {
        if inner.target != outer.source {
            return Err(Error::SourceMismatch(
                "target of the inner functor differs from the source of the outer".into(),
            ));
        }
        Ok(CatFunctor {
            source: inner.source.clone(),
            target: outer.target.clone(),
            object_map: inner
                .object_map
                .iter()
                .map(|&x| outer.object_map[x])
                .collect(),
            morphism_map: inner
                .morphism_map
                .iter()
                .map(|&f| outer.morphism_map[f])
                .collect(),
        })
    }

    /// The full subcategory of `c` on the given objects, with its
    /// inclusion functor.
    pub fn full_subcategory(c: &FinCategory, objects: &[usize]) -> Result<(FinCategory, CatFunctor)> {
        for &x in objects {
            if x >= c.num_objects() {
                return Err(Error::schema("subcategory object out of range"));
            }
        }
        let mut object_names = Vec::new();
        for &x in objects {
            object_names.push(c.object_name(x).to_string());
        }
        let kept: Vec<usize> = (0..c.num_morphisms())
            .filter(|&f| objects.contains(&c.dom(f)) && objects.contains(&c.cod(f)))
            .collect();
        let reindex_obj = |x: usize| objects.iter().position(|&o| o == x).unwrap();
        let reindex_mor =
            |f: usize| kept.iter().position(|&k| k == f).expect("kept morphism");
        let morphisms: Vec<(String, usize, usize)> = kept
            .iter()
            .map(|&f| {
                (
                    c.morphism_name(f).to_string(),
                    reindex_obj(c.dom(f)),
                    reindex_obj(c.cod(f)),
                )
            })
            .collect();
        let identities: Vec<usize> = objects.iter().map(|&x| reindex_mor(c.identity(x))).collect();
        let mut entries = Vec::new();
        for &g in &kept {
            for &f in &kept {
                if c.cod(f) == c.dom(g) {
                    let gf = c.compose(g, f)?;
                    entries.push((reindex_mor(g), reindex_mor(f), reindex_mor(gf)));
                }
            }
        }
        let sub = FinCategory::from_raw(object_names, morphisms, identities, &entries)?;
        let inclusion = CatFunctor::new(sub.clone(), c.clone(), objects.to_vec(), kept)?;
        Ok((sub, inclusion))
    }
}
