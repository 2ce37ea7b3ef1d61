use std::fmt;
use std::hash::{DefaultHasher, Hash, Hasher};
use std::sync::Arc;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Map, Value};

use super::operator::{OperatorDesc, OperatorKind};
use crate::error::{Error, Result};
use crate::seifert::{arf, SeifertMatrix};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct BaseFlags {
    /// Declared Arf invariant; checked against the Seifert matrix.
    pub arf_known: Option<u8>,
    pub negative_amphichiral: bool,
}

#[derive(Debug, PartialEq, Eq)]
pub enum Node {
    Base { seifert: SeifertMatrix, flags: BaseFlags },
    Infect { op: Arc<OperatorDesc>, inputs: Vec<KnotExpr> },
    Sum(KnotExpr, KnotExpr),
    Mirror(KnotExpr),
    Reverse(KnotExpr),
}

#[derive(Debug)]
struct Inner {
    node: Node,
    hash: u64,
}

/// Immutable, structurally hashed knot expression. Cloning shares the tree.
#[derive(Clone, Debug)]
pub struct KnotExpr(Arc<Inner>);

impl KnotExpr {
    fn make(node: Node) -> Self {
        let mut h = DefaultHasher::new();
        match &node {
            Node::Base { seifert, flags } => {
                0u8.hash(&mut h);
                seifert.hash(&mut h);
                flags.hash(&mut h);
            }
            Node::Infect { op, inputs } => {
                1u8.hash(&mut h);
                op.hash(&mut h);
                for i in inputs {
                    i.structural_hash().hash(&mut h);
                }
            }
            Node::Sum(a, b) => (2u8, a.structural_hash(), b.structural_hash()).hash(&mut h),
            Node::Mirror(a) => (3u8, a.structural_hash()).hash(&mut h),
            Node::Reverse(a) => (4u8, a.structural_hash()).hash(&mut h),
        }
        KnotExpr(Arc::new(Inner { hash: h.finish(), node }))
    }

    pub fn base(seifert: SeifertMatrix, flags: BaseFlags) -> Result<Self> {
        if let Some(a) = flags.arf_known {
            let actual = arf(&seifert);
            if a != actual {
                return Err(Error::InvalidInput(format!("declared arf_known = {a} but the Seifert matrix has Arf {actual}")));
            }
        }
        Ok(KnotExpr::make(Node::Base { seifert, flags }))
    }

    /// Base node without flags.
    pub fn knot(seifert: SeifertMatrix) -> Self {
        KnotExpr::make(Node::Base { seifert, flags: BaseFlags::default() })
    }

    pub fn infect(op: OperatorDesc, inputs: Vec<KnotExpr>) -> Result<Self> {
        KnotExpr::infect_shared(Arc::new(op), inputs)
    }

    pub fn infect_shared(op: Arc<OperatorDesc>, inputs: Vec<KnotExpr>) -> Result<Self> {
        if inputs.len() != op.curve_count {
            return Err(Error::ArityMismatch { name: op.name.clone(), expected: op.curve_count, got: inputs.len() });
        }
        Ok(KnotExpr::make(Node::Infect { op, inputs }))
    }

    pub fn sum(a: &KnotExpr, b: &KnotExpr) -> Self {
        KnotExpr::make(Node::Sum(a.clone(), b.clone()))
    }

    pub fn mirror(a: &KnotExpr) -> Self {
        KnotExpr::make(Node::Mirror(a.clone()))
    }

    pub fn reverse(a: &KnotExpr) -> Self {
        KnotExpr::make(Node::Reverse(a.clone()))
    }

    /// `Mirror(Reverse(a))`, the concordance inverse.
    pub fn inverse(a: &KnotExpr) -> Self {
        KnotExpr::mirror(&KnotExpr::reverse(a))
    }

    /// Left-nested connected sum of `k ≥ 1` copies.
    pub fn sum_of_copies(a: &KnotExpr, k: usize) -> Self {
        assert!(k >= 1);
        let mut acc = a.clone();
        for _ in 1..k {
            acc = KnotExpr::sum(&acc, a);
        }
        acc
    }

    pub fn node(&self) -> &Node {
        &self.0.node
    }

    pub fn structural_hash(&self) -> u64 {
        self.0.hash
    }

    pub fn is_frak_r_infection(&self) -> Option<i64> {
        match self.node() {
            Node::Infect { op, .. } => match op.kind {
                OperatorKind::FrakR(m) => Some(m),
                _ => None,
            },
            _ => None,
        }
    }

    pub fn to_json(&self) -> Value {
        match self.node() {
            Node::Base { seifert, flags } => {
                let mut f = Map::new();
                if let Some(a) = flags.arf_known {
                    f.insert("arf_known".into(), json!(a));
                }
                f.insert("negative_amphichiral".into(), json!(flags.negative_amphichiral));
                json!({"node": "base", "seifert": seifert.to_json(), "flags": f})
            }
            Node::Infect { op, inputs } => {
                let inputs: Vec<Value> = inputs.iter().map(KnotExpr::to_json).collect();
                match op.kind {
                    OperatorKind::FrakR(m) => json!({"node": "infect", "op": "FrakR", "m": m, "inputs": inputs}),
                    OperatorKind::RibbonR(m) => json!({"node": "infect", "op": "RibbonR", "m": m, "inputs": inputs}),
                    OperatorKind::Custom => json!({"node": "infect", "op": "custom", "operator": op.to_json(), "inputs": inputs}),
                }
            }
            Node::Sum(a, b) => json!({"node": "sum", "left": a.to_json(), "right": b.to_json()}),
            Node::Mirror(a) => json!({"node": "mirror", "child": a.to_json()}),
            Node::Reverse(a) => json!({"node": "reverse", "child": a.to_json()}),
        }
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        from_json_at(v, "$")
    }
}

fn from_json_at(v: &Value, path: &str) -> Result<KnotExpr> {
    let bad = |m: String| Error::InvalidInput(format!("{path}: {m}"));
    let field = |k: &str| v.get(k).ok_or_else(|| bad(format!("missing field \"{k}\"")));
    let kind = v.get("node").and_then(Value::as_str).ok_or_else(|| bad("missing string field \"node\"".into()))?;
    match kind {
        "base" => {
            let seifert = SeifertMatrix::from_json(field("seifert")?)?;
            let mut flags = BaseFlags::default();
            if let Some(f) = v.get("flags") {
                let f = f.as_object().ok_or_else(|| bad("\"flags\" is not an object".into()))?;
                flags.arf_known = match f.get("arf_known") {
                    None | Some(Value::Null) => None,
                    Some(Value::Number(n)) if n.as_u64() == Some(0) || n.as_u64() == Some(1) => n.as_u64().map(|a| a as u8),
                    Some(_) => return Err(bad("\"flags.arf_known\" must be 0 or 1".into())),
                };
                flags.negative_amphichiral = match f.get("negative_amphichiral") {
                    None => false,
                    Some(b) => b.as_bool().ok_or_else(|| bad("\"flags.negative_amphichiral\" is not a boolean".into()))?,
                };
            }
            KnotExpr::base(seifert, flags)
        }
        "infect" => {
            let inputs = field("inputs")?.as_array().ok_or_else(|| bad("\"inputs\" is not an array".into()))?;
            let inputs = inputs
                .iter()
                .enumerate()
                .map(|(i, x)| from_json_at(x, &format!("{path}.inputs[{i}]")))
                .collect::<Result<Vec<_>>>()?;
            let op_name = field("op")?.as_str().ok_or_else(|| bad("\"op\" is not a string".into()))?;
            let m = || field("m")?.as_i64().ok_or_else(|| bad("\"m\" is not an integer".into()));
            let op = match op_name {
                "FrakR" => OperatorDesc::frak_r(m()?),
                "RibbonR" => OperatorDesc::ribbon_r(m()?),
                "custom" => OperatorDesc::from_json(field("operator")?)?,
                other => return Err(bad(format!("unknown operator \"{other}\""))),
            };
            KnotExpr::infect(op, inputs)
        }
        "sum" => Ok(KnotExpr::sum(
            &from_json_at(field("left")?, &format!("{path}.left"))?,
            &from_json_at(field("right")?, &format!("{path}.right"))?,
        )),
        "mirror" => Ok(KnotExpr::mirror(&from_json_at(field("child")?, &format!("{path}.child"))?)),
        "reverse" => Ok(KnotExpr::reverse(&from_json_at(field("child")?, &format!("{path}.child"))?)),
        other => Err(bad(format!("unknown node kind \"{other}\""))),
    }
}

impl PartialEq for KnotExpr {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.hash == other.0.hash && self.0.node == other.0.node)
    }
}

impl Eq for KnotExpr {}

impl Hash for KnotExpr {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.0.hash.hash(h)
    }
}

impl fmt::Display for KnotExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.node() {
            Node::Base { seifert, .. } => write!(f, "Base({}x{})", seifert.size(), seifert.size()),
            Node::Infect { op, inputs } => {
                write!(f, "{}(", op.name)?;
                for (i, x) in inputs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
            Node::Sum(a, b) => write!(f, "({a} # {b})"),
            Node::Mirror(a) => write!(f, "Mirror({a})"),
            Node::Reverse(a) => write!(f, "Reverse({a})"),
        }
    }
}

impl Serialize for KnotExpr {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for KnotExpr {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        KnotExpr::from_json(&v).map_err(D::Error::custom)
    }
}
