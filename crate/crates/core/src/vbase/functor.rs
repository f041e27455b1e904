use crate::error::{Error, Result};
use crate::fincat::{CatFunctor, FinCategory};
use crate::vbase::monoid::rat_matrix_from_value;
use crate::vbase::{internal_compose, BaseMap, BaseObject, BaseTag, FinFunction};
use serde_json::Value;
use std::fmt;

/// Functor from a finitely presented category into a concrete base,
/// tabulated on objects and morphisms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BaseFunctor {
    source: FinCategory,
    tag: BaseTag,
    objects: Vec<BaseObject>,
    morphisms: Vec<BaseMap>,
}

/// First witness of a violation of functoriality into the base.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BaseFunctorViolation {
    /// An object or morphism image lives in the wrong base.
    BaseInconsistent { item: String },
    /// Image of `f` does not map between the images of its endpoints.
    IllTypedImage { f: String },
    IdentityNotPreserved { object: String },
    CompositionNotPreserved { then: String, first: String },
}

impl fmt::Display for BaseFunctorViolation {
    fn fmt(&self, fmt: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseFunctorViolation::BaseInconsistent { item } => {
                write!(fmt, "{item} lives in the wrong base")
            }
            BaseFunctorViolation::IllTypedImage { f } => {
                write!(fmt, "image of {f} does not match its endpoint images")
            }
            BaseFunctorViolation::IdentityNotPreserved { object } => {
                write!(fmt, "image of id_{object} is not the identity")
            }
            BaseFunctorViolation::CompositionNotPreserved { then, first } => {
                write!(fmt, "image of {then} . {first} differs from the composite of images")
            }
        }
    }
}

impl BaseFunctor {
    pub fn new(
        source: FinCategory,
        tag: BaseTag,
        objects: Vec<BaseObject>,
        morphisms: Vec<BaseMap>,
    ) -> Result<Self> {
        if objects.len() != source.num_objects() || morphisms.len() != source.num_morphisms() {
            return Err(Error::shape(
                "functor tables must cover the source objects and morphisms",
            ));
        }
        Ok(BaseFunctor {
            source,
            tag,
            objects,
            morphisms,
        })
    }

    pub fn source(&self) -> &FinCategory {
        &self.source
    }

    pub fn tag(&self) -> BaseTag {
        self.tag
    }

    pub fn object(&self, x: usize) -> &BaseObject {
        &self.objects[x]
    }

    pub fn map(&self, f: usize) -> &BaseMap {
        &self.morphisms[f]
    }

    /// Checks that the tables define a functor: consistent base, image
    /// typing, identities to identities, composites to composites.
    /// Composable pairs missing from the source table are skipped; they
    /// belong to [`FinCategory::validate`].
    pub fn validate(&self) -> std::result::Result<(), BaseFunctorViolation> {
        let src = &self.source;
        for (x, o) in self.objects.iter().enumerate() {
            if o.tag() != self.tag {
                return Err(BaseFunctorViolation::BaseInconsistent {
                    item: format!("object {}", src.object_name(x)),
                });
            }
        }
        for f in 0..src.num_morphisms() {
            if self.morphisms[f].tag() != self.tag {
                return Err(BaseFunctorViolation::BaseInconsistent {
                    item: format!("morphism {}", src.morphism_name(f)),
                });
            }
            let dom = self.objects[src.dom(f)].size();
            let cod = self.objects[src.cod(f)].size();
            if self.morphisms[f].dom_size() != dom || self.morphisms[f].cod_size() != cod {
                return Err(BaseFunctorViolation::IllTypedImage {
                    f: src.morphism_name(f).into(),
                });
            }
        }
        for x in 0..src.num_objects() {
            if !self.morphisms[src.identity(x)].is_identity() {
                return Err(BaseFunctorViolation::IdentityNotPreserved {
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
                let Ok(composite) = internal_compose(&self.morphisms[g], &self.morphisms[f])
                else {
                    return Err(BaseFunctorViolation::CompositionNotPreserved {
                        then: src.morphism_name(g).into(),
                        first: src.morphism_name(f).into(),
                    });
                };
                if composite != self.morphisms[gf] {
                    return Err(BaseFunctorViolation::CompositionNotPreserved {
                        then: src.morphism_name(g).into(),
                        first: src.morphism_name(f).into(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Precomposition with a category functor: the functor
    /// `X' |-> F(Phi X')` on the source of `Phi`. The target of `Phi`
    /// must be the source category of `self`.
    pub fn restrict(&self, phi: &CatFunctor) -> Result<BaseFunctor> {
        if phi.target() != &self.source {
            return Err(Error::SourceMismatch(
                "functor restriction needs the target of Phi to be the functor's source".into(),
            ));
        }
        let src = phi.source().clone();
        let objects = (0..src.num_objects())
            .map(|x| self.objects[phi.on_object(x)].clone())
            .collect();
        let morphisms = (0..src.num_morphisms())
            .map(|f| self.morphisms[phi.on_morphism(f)].clone())
            .collect();
        BaseFunctor::new(src, self.tag, objects, morphisms)
    }

    /// Loads a functor document against a category.
    ///
    /// Format: `{"base": "finset" | "qvect", "objects": {..}, "morphisms":
    /// {..}}`. Objects map every source object to an element-name list
    /// (finite sets) or a dimension (vector spaces). Morphisms cover
    /// exactly the non-identity morphisms: a list of codomain element
    /// names per domain element, or a `cod x dom` matrix of rationals.
    pub fn from_json_str(source: &FinCategory, s: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(s)?;
        let doc = v
            .as_object()
            .ok_or_else(|| Error::schema("functor document must be an object"))?;
        for key in doc.keys() {
            if !matches!(key.as_str(), "base" | "objects" | "morphisms") {
                return Err(Error::schema(format!("unknown field {key:?}")));
            }
        }
        let tag = match doc.get("base").and_then(Value::as_str) {
            Some("finset") => BaseTag::FinSet,
            Some("qvect") => BaseTag::QVect,
            Some(other) => return Err(Error::schema(format!("unknown base {other:?}"))),
            None => return Err(Error::schema("functor document needs a \"base\" field")),
        };
        let objects_doc = doc
            .get("objects")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::schema("functor document needs an \"objects\" map"))?;
        for name in objects_doc.keys() {
            if source.object_index(name).is_none() {
                return Err(Error::schema(format!("unknown object {name}")));
            }
        }
        let mut objects = Vec::with_capacity(source.num_objects());
        for x in 0..source.num_objects() {
            let name = source.object_name(x);
            let spec = objects_doc
                .get(name)
                .ok_or_else(|| Error::schema(format!("no image given for object {name}")))?;
            objects.push(match tag {
                BaseTag::FinSet => {
                    let elems = spec
                        .as_array()
                        .ok_or_else(|| Error::schema(format!("object {name} needs an element list")))?
                        .iter()
                        .map(|e| {
                            e.as_str()
                                .map(String::from)
                                .ok_or_else(|| Error::schema("element names must be strings"))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    let mut seen = std::collections::BTreeSet::new();
                    for e in &elems {
                        if !seen.insert(e.clone()) {
                            return Err(Error::schema(format!(
                                "duplicate element {e} in object {name}"
                            )));
                        }
                    }
                    BaseObject::FinSet { elements: elems }
                }
                BaseTag::QVect => {
                    let dim = spec
                        .as_u64()
                        .ok_or_else(|| Error::schema(format!("object {name} needs a dimension")))?;
                    BaseObject::Vect { dim: dim as usize }
                }
            });
        }
        let empty = serde_json::Map::new();
        let morphisms_doc = match doc.get("morphisms") {
            None => &empty,
            Some(m) => m
                .as_object()
                .ok_or_else(|| Error::schema("\"morphisms\" must be a map"))?,
        };
        for name in morphisms_doc.keys() {
            match source.morphism_index(name) {
                None => return Err(Error::schema(format!("unknown morphism {name}"))),
                Some(f) if source.is_identity(f) => {
                    return Err(Error::schema(format!(
                        "morphism {name} is an identity; identity images are implicit"
                    )))
                }
                Some(_) => {}
            }
        }
        let mut morphisms = Vec::with_capacity(source.num_morphisms());
        for f in 0..source.num_morphisms() {
            if source.is_identity(f) {
                morphisms.push(BaseMap::identity_of(&objects[source.dom(f)]));
                continue;
            }
            let name = source.morphism_name(f);
            let spec = morphisms_doc
                .get(name)
                .ok_or_else(|| Error::schema(format!("no image given for morphism {name}")))?;
            let dom_obj = &objects[source.dom(f)];
            let cod_obj = &objects[source.cod(f)];
            morphisms.push(match tag {
                BaseTag::FinSet => {
                    let BaseObject::FinSet { elements: cod_elems } = cod_obj else {
                        unreachable!()
                    };
                    let values = spec
                        .as_array()
                        .ok_or_else(|| Error::schema(format!("morphism {name} needs a value list")))?;
                    if values.len() != dom_obj.size() {
                        return Err(Error::schema(format!(
                            "morphism {name} needs one value per domain element"
                        )));
                    }
                    let table = values
                        .iter()
                        .map(|e| {
                            let target = e
                                .as_str()
                                .ok_or_else(|| Error::schema("values must be element names"))?;
                            cod_elems.iter().position(|c| c == target).ok_or_else(|| {
                                Error::schema(format!(
                                    "morphism {name} hits unknown element {target}"
                                ))
                            })
                        })
                        .collect::<Result<Vec<_>>>()?;
                    BaseMap::Function(FinFunction {
                        dom: dom_obj.size(),
                        cod: cod_obj.size(),
                        table,
                    })
                }
                BaseTag::QVect => BaseMap::Linear(rat_matrix_from_value(
                    spec,
                    cod_obj.size(),
                    dom_obj.size(),
                )?),
            });
        }
        BaseFunctor::new(source.clone(), tag, objects, morphisms)
    }
}
