//! The JSON algebra document: parsing with located diagnostics and a
//! canonical, byte-stable serializer.
//!
//! ```json
//! {
//!   "alpha": [["1", "0"], ["0", "-1"]],
//!   "degrees": [[0], [1]],
//!   "epsilon": {"exponents": [[1]]},
//!   "group": {"moduli": [2]},
//!   "metadata": {},
//!   "multipliers": {},
//!   "name": "example",
//!   "operators": {"R": [["-1", "0"], ["0", "-1"]]},
//!   "products": {"mu": [[1, 1, 1, "-1"], [1, 2, 2, "1"]]}
//! }
//! ```
//!
//! Structure constants are `[i, j, k, c]` with 1-based indices, meaning
//! `e_i · e_j` has coefficient `c` on `e_k`. Scalars are strings `"p/q"` or
//! `"p"`; JSON integers are accepted on input. Matrices are lists of rows.
//! `epsilon` is either a mod-2 exponent matrix or an explicit table over the
//! group elements in lexicographic order.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::de::{self, DeserializeSeed, IgnoredAny, MapAccess, SeqAccess, Visitor};
use serde_json::{Map, Value};

use crate::algebra::{BilinearProduct, EvenLinearMap, GradedAlgebra, GradedBasis};
use crate::error::Error;
use crate::grading::{
    group_add, CommutationFactor, GroupElement, GroupSpec, MultiplierTable, SignBicharacter,
    DEFAULT_GROUP_BOUND,
};
use crate::linalg::Matrix;
use crate::scalar::{format_scalar, parse_scalar, Scalar, ScalarParseError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DiagnosticCode {
    MalformedJson,
    MissingField,
    WrongType,
    BadScalar,
    ZeroDenominator,
    DegreeOutOfRange,
    NotEven,
    ProductNotEven,
    Shape,
    DuplicateEntry,
    InvalidGroup,
    InvalidEpsilon,
    UnknownField,
}

impl DiagnosticCode {
    pub fn code(self) -> &'static str {
        use DiagnosticCode::*;
        match self {
            MalformedJson => "E001",
            MissingField => "E002",
            WrongType => "E003",
            BadScalar => "E004",
            ZeroDenominator => "E005",
            DegreeOutOfRange => "E006",
            NotEven => "E007",
            ProductNotEven => "E008",
            Shape => "E009",
            DuplicateEntry => "E010",
            InvalidGroup => "E011",
            InvalidEpsilon => "E012",
            UnknownField => "E013",
        }
    }

    pub fn name(self) -> &'static str {
        use DiagnosticCode::*;
        match self {
            MalformedJson => "malformed-json",
            MissingField => "missing-field",
            WrongType => "wrong-type",
            BadScalar => "bad-scalar",
            ZeroDenominator => "zero-denominator",
            DegreeOutOfRange => "degree-out-of-range",
            NotEven => "not-even",
            ProductNotEven => "product-not-even",
            Shape => "shape",
            DuplicateEntry => "duplicate-entry",
            InvalidGroup => "invalid-group",
            InvalidEpsilon => "invalid-epsilon",
            UnknownField => "unknown-field",
        }
    }
}

/// A parse failure with its JSON path and 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub code: DiagnosticCode,
    pub field: String,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "error[{} {}] line {}, column {}",
            self.code.code(),
            self.code.name(),
            self.line,
            self.column
        )?;
        if !self.field.is_empty() {
            write!(f, ", field {}", self.field)?;
        }
        write!(f, ": {}", self.message)
    }
}

impl std::error::Error for Diagnostic {}

/// An algebra with its named operators, multipliers and free-form metadata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraDocument {
    pub name: String,
    pub algebra: GradedAlgebra,
    pub operators: BTreeMap<String, EvenLinearMap>,
    pub multipliers: BTreeMap<String, MultiplierTable>,
    pub metadata: BTreeMap<String, String>,
}

impl AlgebraDocument {
    pub fn new(name: impl Into<String>, algebra: GradedAlgebra) -> Self {
        AlgebraDocument {
            name: name.into(),
            algebra,
            operators: BTreeMap::new(),
            multipliers: BTreeMap::new(),
            metadata: BTreeMap::new(),
        }
    }

    pub fn with_operator(mut self, name: &str, m: Matrix) -> crate::error::Result<Self> {
        let map = self.algebra.even_map(m)?;
        self.operators.insert(name.to_string(), map);
        Ok(self)
    }

    pub fn with_multiplier(mut self, name: &str, s: MultiplierTable) -> crate::error::Result<Self> {
        if s.order() != self.algebra.group().order() {
            return Err(Error::Incompatible(format!(
                "multiplier {name} has order {}, the group has order {}",
                s.order(),
                self.algebra.group().order()
            )));
        }
        self.multipliers.insert(name.to_string(), s);
        Ok(self)
    }

    pub fn with_metadata(mut self, key: &str, value: impl Into<String>) -> Self {
        self.metadata.insert(key.to_string(), value.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Seg {
    Key(String),
    Index(usize),
}

type Path = Vec<Seg>;

fn path_string(path: &[Seg]) -> String {
    let mut out = String::new();
    for s in path {
        match s {
            Seg::Key(k) => {
                if !out.is_empty() {
                    out.push('.');
                }
                out.push_str(k);
            }
            Seg::Index(i) => out.push_str(&format!("[{i}]")),
        }
    }
    out
}

struct Failure {
    code: DiagnosticCode,
    path: Path,
    message: String,
}

type Res<T> = std::result::Result<T, Failure>;

fn fail<T>(code: DiagnosticCode, path: &[Seg], message: impl Into<String>) -> Res<T> {
    Err(Failure {
        code,
        path: path.to_vec(),
        message: message.into(),
    })
}

fn child(path: &[Seg], seg: Seg) -> Path {
    let mut p = path.to_vec();
    p.push(seg);
    p
}

// Position lookup: walk the text again with serde_json and raise an error
// at the target value; serde_json stamps its line and column on the error.

struct Locate<'p>(&'p [Seg]);

const FOUND: &str = "\u{0}found";

impl<'de> DeserializeSeed<'de> for Locate<'_> {
    type Value = ();

    fn deserialize<D: de::Deserializer<'de>>(self, d: D) -> Result<(), D::Error> {
        d.deserialize_any(self)
    }
}

impl<'de> Visitor<'de> for Locate<'_> {
    type Value = ();

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("any value")
    }

    fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<(), A::Error> {
        let Some((head, rest)) = self.0.split_first() else {
            return Err(de::Error::custom(FOUND));
        };
        while let Some(key) = map.next_key::<String>()? {
            if matches!(head, Seg::Key(k) if *k == key) {
                return map.next_value_seed(Locate(rest));
            }
            map.next_value::<IgnoredAny>()?;
        }
        Err(de::Error::custom(FOUND))
    }

    fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<(), A::Error> {
        let Some((head, rest)) = self.0.split_first() else {
            return Err(de::Error::custom(FOUND));
        };
        let mut i = 0;
        loop {
            if matches!(head, Seg::Index(t) if *t == i) {
                return match seq.next_element_seed(Locate(rest))? {
                    Some(()) => Ok(()),
                    None => Err(de::Error::custom(FOUND)),
                };
            }
            if seq.next_element::<IgnoredAny>()?.is_none() {
                return Err(de::Error::custom(FOUND));
            }
            i += 1;
        }
    }

    fn visit_bool<E: de::Error>(self, _: bool) -> Result<(), E> {
        Err(E::custom(FOUND))
    }

    fn visit_i64<E: de::Error>(self, _: i64) -> Result<(), E> {
        Err(E::custom(FOUND))
    }

    fn visit_u64<E: de::Error>(self, _: u64) -> Result<(), E> {
        Err(E::custom(FOUND))
    }

    fn visit_f64<E: de::Error>(self, _: f64) -> Result<(), E> {
        Err(E::custom(FOUND))
    }

    fn visit_str<E: de::Error>(self, _: &str) -> Result<(), E> {
        Err(E::custom(FOUND))
    }

    fn visit_unit<E: de::Error>(self) -> Result<(), E> {
        Err(E::custom(FOUND))
    }
}

fn locate(text: &str, path: &[Seg]) -> (usize, usize) {
    let mut de = serde_json::Deserializer::from_str(text);
    match Locate(path).deserialize(&mut de) {
        Err(e) => (e.line(), e.column()),
        Ok(()) => (1, 1),
    }
}

fn object<'v>(v: &'v Value, path: &[Seg], allowed: &[&str]) -> Res<&'v Map<String, Value>> {
    let Some(m) = v.as_object() else {
        return fail(DiagnosticCode::WrongType, path, "expected an object");
    };
    if let Some(k) = m.keys().find(|k| !allowed.contains(&k.as_str())) {
        return fail(
            DiagnosticCode::UnknownField,
            &child(path, Seg::Key(k.clone())),
            format!(
                "unknown field {k:?}; expected one of {}",
                allowed.join(", ")
            ),
        );
    }
    Ok(m)
}

fn field<'v>(m: &'v Map<String, Value>, path: &[Seg], key: &str) -> Res<&'v Value> {
    m.get(key).ok_or(()).or_else(|_| {
        fail(
            DiagnosticCode::MissingField,
            path,
            format!("missing field {key:?}"),
        )
    })
}

fn array<'v>(v: &'v Value, path: &[Seg]) -> Res<&'v Vec<Value>> {
    v.as_array()
        .ok_or(())
        .or_else(|_| fail(DiagnosticCode::WrongType, path, "expected an array"))
}

fn integer(v: &Value, path: &[Seg]) -> Res<i64> {
    v.as_i64()
        .ok_or(())
        .or_else(|_| fail(DiagnosticCode::WrongType, path, "expected an integer"))
}

fn scalar(v: &Value, path: &[Seg]) -> Res<Scalar> {
    match v {
        Value::String(s) => parse_scalar(s).or_else(|e| match e {
            ScalarParseError::ZeroDenominator(_) => fail(
                DiagnosticCode::ZeroDenominator,
                path,
                format!("zero denominator in {s:?}"),
            ),
            ScalarParseError::Malformed(_) => fail(
                DiagnosticCode::BadScalar,
                path,
                format!("{s:?} is not a rational of the form \"p/q\""),
            ),
        }),
        Value::Number(n) if n.is_i64() || n.is_u64() => {
            Ok(parse_scalar(&n.to_string()).expect("integer"))
        }
        Value::Number(n) => fail(
            DiagnosticCode::BadScalar,
            path,
            format!("{n} is a float; write rationals as \"p/q\" strings"),
        ),
        _ => fail(
            DiagnosticCode::WrongType,
            path,
            "expected a rational string",
        ),
    }
}

fn matrix(v: &Value, path: &[Seg], n: usize) -> Res<Vec<Vec<Scalar>>> {
    let rows = array(v, path)?;
    if rows.len() != n {
        return fail(
            DiagnosticCode::Shape,
            path,
            format!("expected {n} rows, found {}", rows.len()),
        );
    }
    let mut out = Vec::with_capacity(n);
    for (i, row) in rows.iter().enumerate() {
        let rp = child(path, Seg::Index(i));
        let cells = array(row, &rp)?;
        if cells.len() != n {
            return fail(
                DiagnosticCode::Shape,
                &rp,
                format!("expected {n} entries, found {}", cells.len()),
            );
        }
        let mut r = Vec::with_capacity(n);
        for (j, c) in cells.iter().enumerate() {
            r.push(scalar(c, &child(&rp, Seg::Index(j)))?);
        }
        out.push(r);
    }
    Ok(out)
}

fn even_map(rows: Vec<Vec<Scalar>>, basis: &GradedBasis, path: &[Seg]) -> Res<EvenLinearMap> {
    for (i, row) in rows.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            if !c.is_zero() && basis.degree(i) != basis.degree(j) {
                return fail(
                    DiagnosticCode::NotEven,
                    &child(&child(path, Seg::Index(i)), Seg::Index(j)),
                    format!(
                        "entry links e{} of degree {} and e{} of degree {}",
                        j + 1,
                        basis.degree(j),
                        i + 1,
                        basis.degree(i)
                    ),
                );
            }
        }
    }
    let m = Matrix::from_rows(rows).expect("square by construction");
    Ok(EvenLinearMap::new(m, basis).expect("evenness checked"))
}

fn parse_group(v: &Value, path: &[Seg], bound: u64) -> Res<GroupSpec> {
    let m = object(v, path, &["moduli"])?;
    let mp = child(path, Seg::Key("moduli".into()));
    let mut moduli = Vec::new();
    for (i, x) in array(field(m, path, "moduli")?, &mp)?.iter().enumerate() {
        let ip = child(&mp, Seg::Index(i));
        let k = integer(x, &ip)?;
        if k < 1 || k > u32::MAX as i64 {
            return fail(
                DiagnosticCode::InvalidGroup,
                &ip,
                format!("modulus {k} must be a positive integer"),
            );
        }
        moduli.push(k as u32);
    }
    GroupSpec::with_bound(moduli, bound)
        .or_else(|e| fail(DiagnosticCode::InvalidGroup, &mp, e.to_string()))
}

fn parse_table(
    v: &Value,
    path: &[Seg],
    g: &GroupSpec,
    code: DiagnosticCode,
) -> Res<MultiplierTable> {
    let rows = matrix(v, path, g.order())?;
    for (i, row) in rows.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            if c.is_zero() {
                return fail(
                    code,
                    &child(&child(path, Seg::Index(i)), Seg::Index(j)),
                    "table entries must be nonzero",
                );
            }
        }
    }
    Ok(MultiplierTable::new(g, rows).expect("checked table"))
}

fn parse_epsilon(v: &Value, path: &[Seg], g: &GroupSpec) -> Res<CommutationFactor> {
    let m = object(v, path, &["exponents", "table"])?;
    match (m.get("exponents"), m.get("table")) {
        (Some(e), None) => {
            let ep = child(path, Seg::Key("exponents".into()));
            let rows = array(e, &ep)?;
            let r = g.rank();
            if rows.len() != r {
                return fail(
                    DiagnosticCode::Shape,
                    &ep,
                    format!("expected {r} rows for a group of rank {r}"),
                );
            }
            let mut out = Vec::with_capacity(r);
            for (i, row) in rows.iter().enumerate() {
                let rp = child(&ep, Seg::Index(i));
                let cells = array(row, &rp)?;
                if cells.len() != r {
                    return fail(DiagnosticCode::Shape, &rp, format!("expected {r} entries"));
                }
                let mut line = Vec::with_capacity(r);
                for (j, c) in cells.iter().enumerate() {
                    line.push(integer(c, &child(&rp, Seg::Index(j)))?);
                }
                out.push(line);
            }
            let s = SignBicharacter::new(out)
                .or_else(|e| fail(DiagnosticCode::InvalidEpsilon, &ep, e.to_string()))?;
            s.check_well_defined(g)
                .or_else(|e| fail(DiagnosticCode::InvalidEpsilon, &ep, e.to_string()))?;
            Ok(CommutationFactor::Sign(s))
        }
        (None, Some(t)) => Ok(CommutationFactor::Table(parse_table(
            t,
            &child(path, Seg::Key("table".into())),
            g,
            DiagnosticCode::InvalidEpsilon,
        )?)),
        _ => fail(
            DiagnosticCode::InvalidEpsilon,
            path,
            "epsilon needs exactly one of \"exponents\" and \"table\"",
        ),
    }
}

fn parse_degrees(v: &Value, path: &[Seg], g: &GroupSpec) -> Res<GradedBasis> {
    let items = array(v, path)?;
    if items.is_empty() {
        return fail(DiagnosticCode::Shape, path, "the basis is empty");
    }
    let mut degrees = Vec::with_capacity(items.len());
    for (i, d) in items.iter().enumerate() {
        let dp = child(path, Seg::Index(i));
        let coords = array(d, &dp)?;
        if coords.len() != g.rank() {
            return fail(
                DiagnosticCode::Shape,
                &dp,
                format!(
                    "degree has {} coordinates, the group has rank {}",
                    coords.len(),
                    g.rank()
                ),
            );
        }
        let mut raw = Vec::with_capacity(coords.len());
        for (j, c) in coords.iter().enumerate() {
            let cp = child(&dp, Seg::Index(j));
            let x = integer(c, &cp)?;
            let m = g.moduli()[j] as i64;
            if !(0..m).contains(&x) {
                return fail(
                    DiagnosticCode::DegreeOutOfRange,
                    &cp,
                    format!("coordinate {x} is outside [0, {m})"),
                );
            }
            raw.push(x);
        }
        degrees.push(g.reduce(&raw).expect("in range"));
    }
    Ok(GradedBasis::new(g, degrees).expect("validated degrees"))
}

fn parse_product(
    v: &Value,
    path: &[Seg],
    g: &GroupSpec,
    basis: &GradedBasis,
) -> Res<BilinearProduct> {
    let n = basis.dim();
    let mut seen: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
    let mut triples = Vec::new();
    for (t, item) in array(v, path)?.iter().enumerate() {
        let tp = child(path, Seg::Index(t));
        let parts = array(item, &tp)?;
        if parts.len() != 4 {
            return fail(
                DiagnosticCode::Shape,
                &tp,
                "a structure constant is [i, j, k, \"c\"]",
            );
        }
        let mut idx = [0usize; 3];
        for s in 0..3 {
            let sp = child(&tp, Seg::Index(s));
            let x = integer(&parts[s], &sp)?;
            if x < 1 || x as u64 > n as u64 {
                return fail(
                    DiagnosticCode::Shape,
                    &sp,
                    format!("index {x} is outside 1..={n}"),
                );
            }
            idx[s] = x as usize - 1;
        }
        let c = scalar(&parts[3], &child(&tp, Seg::Index(3)))?;
        let [i, j, k] = idx;
        if let Some(first) = seen.insert((i, j, k), t) {
            return fail(
                DiagnosticCode::DuplicateEntry,
                &tp,
                format!(
                    "e{}·e{} on e{} is already given by entry {first}",
                    i + 1,
                    j + 1,
                    k + 1
                ),
            );
        }
        let expected: GroupElement =
            group_add(g, basis.degree(i), basis.degree(j)).expect("same group");
        if !c.is_zero() && basis.degree(k) != &expected {
            return fail(
                DiagnosticCode::ProductNotEven,
                &tp,
                format!(
                    "e{}·e{} has degree {expected}, but e{} has degree {}",
                    i + 1,
                    j + 1,
                    k + 1,
                    basis.degree(k)
                ),
            );
        }
        triples.push((i, j, k, c));
    }
    Ok(BilinearProduct::from_triples(n, triples).expect("validated triples"))
}

fn parse_value(v: &Value, bound: u64) -> Res<AlgebraDocument> {
    let root: Path = Vec::new();
    let keys = [
        "alpha",
        "degrees",
        "epsilon",
        "group",
        "metadata",
        "multipliers",
        "name",
        "operators",
        "products",
    ];
    let m = object(v, &root, &keys)?;
    let key = |k: &str| child(&root, Seg::Key(k.into()));

    let name = match field(m, &root, "name")? {
        Value::String(s) => s.clone(),
        _ => return fail(DiagnosticCode::WrongType, &key("name"), "expected a string"),
    };
    let group = parse_group(field(m, &root, "group")?, &key("group"), bound)?;
    let factor = parse_epsilon(field(m, &root, "epsilon")?, &key("epsilon"), &group)?;
    let basis = parse_degrees(field(m, &root, "degrees")?, &key("degrees"), &group)?;
    let n = basis.dim();

    let pp = key("products");
    let pm = object(field(m, &root, "products")?, &pp, &["mu", "bracket"])?;
    let mut prods = [None, None];
    for (slot, name) in ["mu", "bracket"].iter().enumerate() {
        if let Some(p) = pm.get(*name) {
            prods[slot] = Some(parse_product(
                p,
                &child(&pp, Seg::Key(name.to_string())),
                &group,
                &basis,
            )?);
        }
    }
    let [mu, bracket] = prods;
    if mu.is_none() && bracket.is_none() {
        return fail(
            DiagnosticCode::MissingField,
            &pp,
            "at least one of \"mu\" and \"bracket\" is required",
        );
    }

    let ap = key("alpha");
    let alpha = even_map(matrix(field(m, &root, "alpha")?, &ap, n)?, &basis, &ap)?;

    let mut operators = BTreeMap::new();
    if let Some(ops) = m.get("operators") {
        let op = key("operators");
        let Some(ops) = ops.as_object() else {
            return fail(DiagnosticCode::WrongType, &op, "expected an object");
        };
        for (name, rows) in ops {
            let rp = child(&op, Seg::Key(name.clone()));
            operators.insert(name.clone(), even_map(matrix(rows, &rp, n)?, &basis, &rp)?);
        }
    }

    let mut multipliers = BTreeMap::new();
    if let Some(ms) = m.get("multipliers") {
        let mp = key("multipliers");
        let Some(ms) = ms.as_object() else {
            return fail(DiagnosticCode::WrongType, &mp, "expected an object");
        };
        for (name, rows) in ms {
            let rp = child(&mp, Seg::Key(name.clone()));
            multipliers.insert(
                name.clone(),
                parse_table(rows, &rp, &group, DiagnosticCode::InvalidGroup)?,
            );
        }
    }

    let mut metadata = BTreeMap::new();
    if let Some(md) = m.get("metadata") {
        let mp = key("metadata");
        let Some(md) = md.as_object() else {
            return fail(DiagnosticCode::WrongType, &mp, "expected an object");
        };
        for (k, v) in md {
            match v {
                Value::String(s) => {
                    metadata.insert(k.clone(), s.clone());
                }
                _ => {
                    return fail(
                        DiagnosticCode::WrongType,
                        &child(&mp, Seg::Key(k.clone())),
                        "expected a string",
                    )
                }
            }
        }
    }

    let algebra = GradedAlgebra::new(group, factor, basis, mu, bracket, alpha)
        .or_else(|e| fail(DiagnosticCode::Shape, &root, e.to_string()))?;
    Ok(AlgebraDocument {
        name,
        algebra,
        operators,
        multipliers,
        metadata,
    })
}

pub fn parse_document(text: &str) -> Result<AlgebraDocument, Diagnostic> {
    parse_document_with_bound(text, DEFAULT_GROUP_BOUND)
}

/// Parses with an explicit bound on the group order.
pub fn parse_document_with_bound(text: &str, bound: u64) -> Result<AlgebraDocument, Diagnostic> {
    let value: Value = serde_json::from_str(text).map_err(|e| Diagnostic {
        code: DiagnosticCode::MalformedJson,
        field: String::new(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    parse_value(&value, bound).map_err(|f| {
        let (line, column) = locate(text, &f.path);
        Diagnostic {
            code: f.code,
            field: path_string(&f.path),
            line,
            column,
            message: f.message,
        }
    })
}

fn scalar_value(x: &Scalar) -> Value {
    Value::String(format_scalar(x))
}

fn matrix_value(rows: Vec<Vec<Scalar>>) -> Value {
    Value::Array(
        rows.iter()
            .map(|r| Value::Array(r.iter().map(scalar_value).collect()))
            .collect(),
    )
}

fn product_value(p: &BilinearProduct) -> Value {
    Value::Array(
        p.triples()
            .map(|(i, j, k, c)| {
                Value::Array(vec![
                    Value::from(i + 1),
                    Value::from(j + 1),
                    Value::from(k + 1),
                    scalar_value(c),
                ])
            })
            .collect(),
    )
}

/// The document as a JSON value with sorted keys.
pub fn document_value(doc: &AlgebraDocument) -> Value {
    let a = &doc.algebra;
    let g = a.group();
    let mut root = Map::new();
    root.insert("alpha".into(), matrix_value(a.alpha().matrix().rows()));
    root.insert(
        "degrees".into(),
        Value::Array(
            a.basis()
                .degrees()
                .iter()
                .map(|d| Value::Array(d.coords().iter().map(|&c| Value::from(c)).collect()))
                .collect(),
        ),
    );
    let mut eps = Map::new();
    match a.factor() {
        CommutationFactor::Sign(s) => {
            let rows = s
                .exponents()
                .iter()
                .map(|r| Value::Array(r.iter().map(|&e| Value::from(e)).collect()))
                .collect();
            eps.insert("exponents".into(), Value::Array(rows));
        }
        CommutationFactor::Table(t) => {
            eps.insert(
                "table".into(),
                matrix_value(t.rows().map(<[Scalar]>::to_vec).collect()),
            );
        }
    }
    root.insert("epsilon".into(), Value::Object(eps));
    let mut group = Map::new();
    group.insert(
        "moduli".into(),
        Value::Array(g.moduli().iter().map(|&m| Value::from(m)).collect()),
    );
    root.insert("group".into(), Value::Object(group));
    root.insert(
        "metadata".into(),
        Value::Object(
            doc.metadata
                .iter()
                .map(|(k, v)| (k.clone(), Value::String(v.clone())))
                .collect(),
        ),
    );
    root.insert(
        "multipliers".into(),
        Value::Object(
            doc.multipliers
                .iter()
                .map(|(k, t)| {
                    (
                        k.clone(),
                        matrix_value(t.rows().map(<[Scalar]>::to_vec).collect()),
                    )
                })
                .collect(),
        ),
    );
    root.insert("name".into(), Value::String(doc.name.clone()));
    root.insert(
        "operators".into(),
        Value::Object(
            doc.operators
                .iter()
                .map(|(k, m)| (k.clone(), matrix_value(m.matrix().rows())))
                .collect(),
        ),
    );
    let mut prods = Map::new();
    if let Some(p) = a.mu() {
        prods.insert("mu".into(), product_value(p));
    }
    if let Some(p) = a.bracket() {
        prods.insert("bracket".into(), product_value(p));
    }
    root.insert("products".into(), Value::Object(prods));
    Value::Object(root)
}

fn is_leaf(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

// Arrays of leaves go on one line, everything else is indented by two.
fn write_value(out: &mut String, v: &Value, indent: usize) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Object(m) if m.is_empty() => out.push_str("{}"),
        Value::Array(items) if items.iter().all(is_leaf) => {
            out.push('[');
            for (i, x) in items.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                out.push_str(&x.to_string());
            }
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(out, x, indent + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(m) => {
            out.push_str("{\n");
            for (i, (k, x)) in m.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(out, x, indent + 1);
                out.push_str(if i + 1 < m.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        leaf => out.push_str(&leaf.to_string()),
    }
}

/// Canonical text: sorted keys, sorted structure constants, reduced
/// rationals, two-space indentation and a trailing newline.
pub fn serialize_document(doc: &AlgebraDocument) -> String {
    let mut out = String::new();
    write_value(&mut out, &document_value(doc), 0);
    out.push('\n');
    out
}
