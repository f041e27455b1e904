use crate::error::{Error, Result};
use crate::linalg::{parse_rat, Rat, RatMatrix};
use num::{One, Zero};
use serde_json::Value;

/// Monoid object in a base: a finite monoid by multiplication table, or a
/// finite-dimensional unital associative algebra over `Q` by structure
/// constants.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MonoidObject {
    FinSet {
        elements: Vec<String>,
        /// `table[i][j]` is the product `e_i * e_j`.
        table: Vec<Vec<usize>>,
        unit: usize,
    },
    Algebra {
        dim: usize,
        /// `dim x dim^2`; column `i * dim + j` holds the coordinates of
        /// `e_i * e_j`.
        mult: RatMatrix,
        unit: Vec<Rat>,
    },
}

/// First witness of a monoid-axiom violation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MonoidViolation {
    Shape(String),
    LeftUnit { element: String },
    RightUnit { element: String },
    Associativity { a: String, b: String, c: String },
}

impl std::fmt::Display for MonoidViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MonoidViolation::Shape(s) => write!(f, "shape: {s}"),
            MonoidViolation::LeftUnit { element } => write!(f, "unit * {element} != {element}"),
            MonoidViolation::RightUnit { element } => write!(f, "{element} * unit != {element}"),
            MonoidViolation::Associativity { a, b, c } => {
                write!(f, "associativity fails on ({a}, {b}, {c})")
            }
        }
    }
}

impl MonoidObject {
    pub fn size(&self) -> usize {
        match self {
            MonoidObject::FinSet { elements, .. } => elements.len(),
            MonoidObject::Algebra { dim, .. } => *dim,
        }
    }

    /// Product of basis elements / monoid elements `i * j`, as an index
    /// (finite sets) or a coordinate vector (algebras).
    pub fn finset_product(&self, i: usize, j: usize) -> Result<usize> {
        match self {
            MonoidObject::FinSet { table, .. } => Ok(table[i][j]),
            _ => Err(Error::BaseMismatch("finset_product on an algebra".into())),
        }
    }

    pub fn algebra_product(&self, i: usize, j: usize) -> Result<Vec<Rat>> {
        match self {
            MonoidObject::Algebra { dim, mult, .. } => Ok(mult.col(i * dim + j)),
            _ => Err(Error::BaseMismatch("algebra_product on a finite monoid".into())),
        }
    }

    /// Multiplies two coordinate vectors through the structure constants.
    pub fn algebra_mul(&self, x: &[Rat], y: &[Rat]) -> Result<Vec<Rat>> {
        let MonoidObject::Algebra { dim, mult, .. } = self else {
            return Err(Error::BaseMismatch("algebra_mul on a finite monoid".into()));
        };
        if x.len() != *dim || y.len() != *dim {
            return Err(Error::shape("algebra element of wrong dimension"));
        }
        let mut xy = vec![Rat::zero(); *dim * *dim];
        for i in 0..*dim {
            for j in 0..*dim {
                xy[i * *dim + j] = &x[i] * &y[j];
            }
        }
        mult.mul_vec(&xy)
    }

    /// Checks the monoid axioms exhaustively; first witness wins.
    pub fn validate(&self) -> std::result::Result<(), MonoidViolation> {
        match self {
            MonoidObject::FinSet {
                elements,
                table,
                unit,
            } => {
                let n = elements.len();
                if table.len() != n
                    || table.iter().any(|r| r.len() != n)
                    || table.iter().flatten().any(|&v| v >= n)
                    || *unit >= n
                {
                    return Err(MonoidViolation::Shape(
                        "multiplication table does not match the element list".into(),
                    ));
                }
                for i in 0..n {
                    if table[*unit][i] != i {
                        return Err(MonoidViolation::LeftUnit {
                            element: elements[i].clone(),
                        });
                    }
                    if table[i][*unit] != i {
                        return Err(MonoidViolation::RightUnit {
                            element: elements[i].clone(),
                        });
                    }
                }
                for a in 0..n {
                    for b in 0..n {
                        for c in 0..n {
                            if table[table[a][b]][c] != table[a][table[b][c]] {
                                return Err(MonoidViolation::Associativity {
                                    a: elements[a].clone(),
                                    b: elements[b].clone(),
                                    c: elements[c].clone(),
                                });
                            }
                        }
                    }
                }
                Ok(())
            }
            MonoidObject::Algebra { dim, mult, unit } => {
                let d = *dim;
                if mult.rows() != d || mult.cols() != d * d || unit.len() != d {
                    return Err(MonoidViolation::Shape(format!(
                        "structure constants must be {d} x {}",
                        d * d
                    )));
                }
                for i in 0..d {
                    let e_i: Vec<Rat> =
                        (0..d).map(|k| if k == i { Rat::one() } else { Rat::zero() }).collect();
                    let left = self.algebra_mul(unit, &e_i).expect("shape checked");
                    if left != e_i {
                        return Err(MonoidViolation::LeftUnit {
                            element: format!("e{i}"),
                        });
                    }
                    let right = self.algebra_mul(&e_i, unit).expect("shape checked");
                    if right != e_i {
                        return Err(MonoidViolation::RightUnit {
                            element: format!("e{i}"),
                        });
                    }
                }
                for a in 0..d {
                    for b in 0..d {
                        let ab = mult.col(a * d + b);
                        for c in 0..d {
                            let e_c: Vec<Rat> = (0..d)
                                .map(|k| if k == c { Rat::one() } else { Rat::zero() })
                                .collect();
                            let bc = mult.col(b * d + c);
                            let e_a: Vec<Rat> = (0..d)
                                .map(|k| if k == a { Rat::one() } else { Rat::zero() })
                                .collect();
                            let left = self.algebra_mul(&ab, &e_c).expect("shape checked");
                            let right = self.algebra_mul(&e_a, &bc).expect("shape checked");
                            if left != right {
                                return Err(MonoidViolation::Associativity {
                                    a: format!("e{a}"),
                                    b: format!("e{b}"),
                                    c: format!("e{c}"),
                                });
                            }
                        }
                    }
                }
                Ok(())
            }
        }
    }

    // ----- stock monoids -------------------------------------------------

    pub fn trivial_finset() -> Self {
        MonoidObject::FinSet {
            elements: vec!["e".into()],
            table: vec![vec![0]],
            unit: 0,
        }
    }

    /// `{e, z}` with `z * z = z`.
    pub fn idempotent_pair() -> Self {
        MonoidObject::FinSet {
            elements: vec!["e".into(), "z".into()],
            table: vec![vec![0, 1], vec![1, 1]],
            unit: 0,
        }
    }

    /// Cyclic group of order `n`.
    pub fn cyclic_finset(n: usize) -> Self {
        MonoidObject::FinSet {
            elements: (0..n)
                .map(|k| if k == 0 { "e".into() } else { format!("g{k}") })
                .collect(),
            table: (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect(),
            unit: 0,
        }
    }

    /// Full transformation monoid on `n` points: all functions
    /// `{0..n-1} -> {0..n-1}` in lexicographic table order, composed as
    /// `(f * g)(x) = f(g(x))`.
    pub fn full_transformations(n: usize) -> Self {
        let count = (n as u128).pow(n as u32) as usize;
        let decode = |idx: usize| {
            let mut t = vec![0usize; n];
            let mut rest = idx;
            for k in (0..n).rev() {
                t[k] = rest % n;
                rest /= n;
            }
            t
        };
        let encode = |t: &[usize]| t.iter().fold(0usize, |acc, &v| acc * n + v);
        let tables: Vec<Vec<usize>> = (0..count).map(decode).collect();
        let elements: Vec<String> = tables
            .iter()
            .map(|t| {
                let digits: Vec<String> = t.iter().map(|v| v.to_string()).collect();
                format!("m{}", digits.join(""))
            })
            .collect();
        let unit = encode(&(0..n).collect::<Vec<_>>());
        let table: Vec<Vec<usize>> = (0..count)
            .map(|i| {
                (0..count)
                    .map(|j| {
                        let composed: Vec<usize> =
                            tables[j].iter().map(|&x| tables[i][x]).collect();
                        encode(&composed)
                    })
                    .collect()
            })
            .collect();
        MonoidObject::FinSet {
            elements,
            table,
            unit,
        }
    }

    /// The base field as an algebra.
    pub fn rationals() -> Self {
        MonoidObject::Algebra {
            dim: 1,
            mult: RatMatrix::identity(1),
            unit: vec![Rat::one()],
        }
    }

    /// `Q x Q` with componentwise multiplication.
    pub fn split_pair() -> Self {
        let mut mult = RatMatrix::zeros(2, 4);
        mult.set(0, 0, Rat::one());
        mult.set(1, 3, Rat::one());
        MonoidObject::Algebra {
            dim: 2,
            mult,
            unit: vec![Rat::one(), Rat::one()],
        }
    }

    /// `Q[t] / (t^2)`, basis `{1, t}`.
    pub fn dual_numbers() -> Self {
        let mut mult = RatMatrix::zeros(2, 4);
        mult.set(0, 0, Rat::one()); // 1 * 1
        mult.set(1, 1, Rat::one()); // 1 * t
        mult.set(1, 2, Rat::one()); // t * 1
        MonoidObject::Algebra {
            dim: 2,
            mult,
            unit: vec![Rat::one(), Rat::zero()],
        }
    }

    /// `2 x 2` matrices over `Q`, basis `e11, e12, e21, e22` row-major.
    pub fn matrix_algebra_2() -> Self {
        let d = 4;
        let mut mult = RatMatrix::zeros(d, d * d);
        let idx = |a: usize, b: usize| a * 2 + b; // e_{a b}
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    for e in 0..2 {
                        if b == c {
                            mult.set(idx(a, e), idx(a, b) * d + idx(c, e), Rat::one());
                        }
                    }
                }
            }
        }
        MonoidObject::Algebra {
            dim: d,
            mult,
            unit: vec![Rat::one(), Rat::zero(), Rat::zero(), Rat::one()],
        }
    }

    /// Group algebra `Q[C2]`, basis `{1, g}` with `g^2 = 1`.
    pub fn group_algebra_c2() -> Self {
        let mut mult = RatMatrix::zeros(2, 4);
        mult.set(0, 0, Rat::one()); // 1 * 1 = 1
        mult.set(1, 1, Rat::one()); // 1 * g = g
        mult.set(1, 2, Rat::one()); // g * 1 = g
        mult.set(0, 3, Rat::one()); // g * g = 1
        MonoidObject::Algebra {
            dim: 2,
            mult,
            unit: vec![Rat::one(), Rat::zero()],
        }
    }

    // ----- JSON ----------------------------------------------------------

    /// Loads a monoid document.
    ///
    /// Finite: `{"base": "finset", "elements": [..], "table": [[..]..]}`;
    /// the unit is located from the table. Algebra: `{"base": "qvect",
    /// "dim": d, "unit": [..], "structure": [[[..]..]..]}` with
    /// `structure[i][j]` the coordinates of `e_i * e_j`; rationals are
    /// strings `"p/q"` or integers.
    pub fn from_json_str(s: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(s)?;
        let obj = v
            .as_object()
            .ok_or_else(|| Error::schema("monoid document must be an object"))?;
        let base = obj
            .get("base")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::schema("monoid document needs a \"base\" field"))?;
        match base {
            "finset" => {
                let elements: Vec<String> = obj
                    .get("elements")
                    .and_then(Value::as_array)
                    .ok_or_else(|| Error::schema("finset monoid needs \"elements\""))?
                    .iter()
                    .map(|e| {
                        e.as_str()
                            .map(String::from)
                            .ok_or_else(|| Error::schema("element names must be strings"))
                    })
                    .collect::<Result<_>>()?;
                let n = elements.len();
                let table: Vec<Vec<usize>> = obj
                    .get("table")
                    .and_then(Value::as_array)
                    .ok_or_else(|| Error::schema("finset monoid needs \"table\""))?
                    .iter()
                    .map(|row| {
                        row.as_array()
                            .ok_or_else(|| Error::schema("table rows must be arrays"))?
                            .iter()
                            .map(|x| {
                                let i = x
                                    .as_u64()
                                    .ok_or_else(|| Error::schema("table entries are indices"))?
                                    as usize;
                                if i >= n {
                                    return Err(Error::schema("table index out of range"));
                                }
                                Ok(i)
                            })
                            .collect()
                    })
                    .collect::<Result<_>>()?;
                if table.len() != n {
                    return Err(Error::schema("table must be square over the elements"));
                }
                let unit = (0..n)
                    .find(|&u| (0..n).all(|i| table[u][i] == i && table[i][u] == i))
                    .ok_or_else(|| Error::invalid("multiplication table has no unit"))?;
                Ok(MonoidObject::FinSet {
                    elements,
                    table,
                    unit,
                })
            }
            "qvect" => {
                let dim = obj
                    .get("dim")
                    .and_then(Value::as_u64)
                    .ok_or_else(|| Error::schema("algebra needs \"dim\""))? as usize;
                let unit = rat_vec_from_value(
                    obj.get("unit")
                        .ok_or_else(|| Error::schema("algebra needs \"unit\""))?,
                    dim,
                )?;
                let structure = obj
                    .get("structure")
                    .and_then(Value::as_array)
                    .ok_or_else(|| Error::schema("algebra needs \"structure\""))?;
                if structure.len() != dim {
                    return Err(Error::schema("structure tensor must have dim rows"));
                }
                let mut mult = RatMatrix::zeros(dim, dim * dim);
                for (i, row) in structure.iter().enumerate() {
                    let row = row
                        .as_array()
                        .ok_or_else(|| Error::schema("structure rows must be arrays"))?;
                    if row.len() != dim {
                        return Err(Error::schema("structure tensor must be dim x dim"));
                    }
                    for (j, cell) in row.iter().enumerate() {
                        let prod = rat_vec_from_value(cell, dim)?;
                        for (k, c) in prod.into_iter().enumerate() {
                            mult.set(k, i * dim + j, c);
                        }
                    }
                }
                Ok(MonoidObject::Algebra { dim, mult, unit })
            }
            other => Err(Error::schema(format!("unknown base {other:?}"))),
        }
    }
}

/// Rational scalar from a JSON value: string `"p/q"`, `"p"`, or integer.
pub(crate) fn rat_from_value(v: &Value) -> Result<Rat> {
    match v {
        Value::String(s) => parse_rat(s),
        Value::Number(n) => n
            .as_i64()
            .map(|i| Rat::from(num::BigInt::from(i)))
            .ok_or_else(|| Error::schema(format!("non-integer numeric literal {n}"))),
        _ => Err(Error::schema(format!("expected a rational, got {v}"))),
    }
}

pub(crate) fn rat_vec_from_value(v: &Value, len: usize) -> Result<Vec<Rat>> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::schema(format!("expected a vector of length {len}")))?;
    if arr.len() != len {
        return Err(Error::schema(format!(
            "expected a vector of length {len}, got {}",
            arr.len()
        )));
    }
    arr.iter().map(rat_from_value).collect()
}

pub(crate) fn rat_matrix_from_value(v: &Value, rows: usize, cols: usize) -> Result<RatMatrix> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::schema(format!("expected a {rows} x {cols} matrix")))?;
    if arr.len() != rows {
        return Err(Error::schema(format!(
            "expected {rows} matrix rows, got {}",
            arr.len()
        )));
    }
    let mut out = Vec::with_capacity(rows);
    for row in arr {
        out.push(rat_vec_from_value(row, cols)?);
    }
    RatMatrix::from_rows(out, cols)
}

/// Free representation data: the carrier `M (x) X` and the action map.
#[derive(Clone, Debug)]
pub struct FreeAction {
    pub carrier_dim: usize,
    /// `carrier_dim^2 x dim(M)`; column `j` is the vectorized matrix by
    /// which basis element `e_j` acts.
    pub alpha: RatMatrix,
}

/// The free representation of an algebra on `M (x) X`: basis element
/// `e_j` acts as `L_j (x) id_X`, where `L_j` is left multiplication.
/// Only the vector-space base carries this construction.
pub fn tensor_monoid_action(m: &MonoidObject, x: &crate::vbase::BaseObject) -> Result<FreeAction> {
    let MonoidObject::Algebra { dim, mult, .. } = m else {
        return Err(Error::Unsupported(
            "free representations require the vector-space base".into(),
        ));
    };
    let crate::vbase::BaseObject::Vect { dim: xdim } = x else {
        return Err(Error::BaseMismatch(
            "tensor_monoid_action carrier must be a vector space".into(),
        ));
    };
    let d = *dim;
    let carrier_dim = d * xdim;
    let id_x = RatMatrix::identity(*xdim);
    let mut alpha = RatMatrix::zeros(carrier_dim * carrier_dim, d);
    for j in 0..d {
        // L_j[k][i] = coordinate k of e_j * e_i
        let l_j = RatMatrix::from_fn(d, d, |k, i| mult.at(k, j * d + i).clone());
        let act = l_j.kron(&id_x);
        for (pos, e) in act.vectorize().into_iter().enumerate() {
            alpha.set(pos, j, e);
        }
    }
    Ok(FreeAction { carrier_dim, alpha })
}
