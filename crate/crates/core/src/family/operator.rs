use std::hash::{Hash, Hasher};

use serde_json::{json, Value};

use crate::algebra::laurent::LaurentPolynomial;
use crate::error::{Error, Result};
use crate::seifert::{alexander, connected_sum, SeifertMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OperatorKind {
    FrakR(i64),
    RibbonR(i64),
    Custom,
}

/// A doubling operator: infection of a ribbon pattern along `curve_count` curves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorDesc {
    pub kind: OperatorKind,
    pub name: String,
    pub pattern_seifert: SeifertMatrix,
    pub alexander_poly: LaurentPolynomial,
    pub curve_count: usize,
    pub curves_null_homologous: bool,
    pub curves_generate_module: bool,
    pub is_ribbon: bool,
    /// Entry contributed to the operator polynomial sequence.
    pub sequence_poly: LaurentPolynomial,
}

impl Hash for OperatorDesc {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.kind.hash(h);
        self.name.hash(h);
        self.pattern_seifert.hash(h);
        self.alexander_poly.hash(h);
        self.curve_count.hash(h);
        (self.curves_null_homologous, self.curves_generate_module, self.is_ribbon).hash(h);
    }
}

/// `[[m, 0], [−1, −m]]` for any `m`, including 0.
fn e_pattern(m: i64) -> SeifertMatrix {
    SeifertMatrix::from_rows(&[vec![m, 0], vec![-1, -m]]).expect("det(V - V^T) = 1")
}

/// `q_m(t) = (mt − (m+1))((m+1)t − m)`, normalized.
pub fn q_poly(m: i64) -> LaurentPolynomial {
    let a = LaurentPolynomial::from_i64s(&[-(m + 1), m]);
    let b = LaurentPolynomial::from_i64s(&[-m, m + 1]);
    (&a * &b).normalize().unwrap_or_else(|_| LaurentPolynomial::one())
}

/// `Δ_m(t) = m²t² − (2m²+1)t + m²`, normalized.
pub fn delta_poly(m: i64) -> LaurentPolynomial {
    alexander(&e_pattern(m))
}

impl OperatorDesc {
    /// The operator with pattern `E^m # E^m` and two infection curves.
    pub fn frak_r(m: i64) -> Self {
        let e = e_pattern(m);
        let pattern = connected_sum(&e, &e);
        let delta = alexander(&e);
        OperatorDesc {
            kind: OperatorKind::FrakR(m),
            name: format!("FrakR({m})"),
            alexander_poly: alexander(&pattern),
            pattern_seifert: pattern,
            curve_count: 2,
            curves_null_homologous: true,
            curves_generate_module: true,
            is_ribbon: true,
            sequence_poly: delta,
        }
    }

    /// The ribbon operator with one curve and Alexander polynomial `q_m`.
    pub fn ribbon_r(m: i64) -> Self {
        let pattern = SeifertMatrix::from_rows(&[vec![0, m + 1], vec![m, 0]]).expect("det(V - V^T) = 1");
        let q = q_poly(m);
        let delta = alexander(&pattern);
        assert_eq!(delta, q, "RibbonR({m}) pattern must realise q_m");
        OperatorDesc {
            kind: OperatorKind::RibbonR(m),
            name: format!("RibbonR({m})"),
            pattern_seifert: pattern,
            alexander_poly: delta,
            curve_count: 1,
            curves_null_homologous: true,
            curves_generate_module: true,
            is_ribbon: true,
            sequence_poly: q,
        }
    }

    #[allow(clippy::too_many_arguments)]
    pub fn custom(
        name: &str,
        pattern_seifert: SeifertMatrix,
        alexander_poly: LaurentPolynomial,
        curve_count: usize,
        curves_null_homologous: bool,
        curves_generate_module: bool,
        is_ribbon: bool,
    ) -> Result<Self> {
        if curve_count == 0 {
            return Err(Error::InvalidOperator(format!("{name}: curve_count must be positive")));
        }
        let computed = alexander(&pattern_seifert);
        if !computed.unit_equivalent(&alexander_poly) {
            return Err(Error::InvalidOperator(format!(
                "{name}: alexander_poly {alexander_poly} differs from the pattern's {computed}"
            )));
        }
        Ok(OperatorDesc {
            kind: OperatorKind::Custom,
            name: name.to_string(),
            pattern_seifert,
            alexander_poly: computed.clone(),
            curve_count,
            curves_null_homologous,
            curves_generate_module,
            is_ribbon,
            sequence_poly: computed,
        })
    }

    pub fn twist(&self) -> Option<i64> {
        match self.kind {
            OperatorKind::FrakR(m) | OperatorKind::RibbonR(m) => Some(m),
            OperatorKind::Custom => None,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "pattern_seifert": self.pattern_seifert.to_json(),
            "alexander_poly": self.alexander_poly.to_string(),
            "curve_count": self.curve_count,
            "curves_null_homologous": self.curves_null_homologous,
            "curves_generate_module": self.curves_generate_module,
            "is_ribbon": self.is_ribbon,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::InvalidInput(format!("operator: {m}"));
        let name = v.get("name").and_then(Value::as_str).ok_or_else(|| bad("missing string field \"name\""))?;
        let pattern = SeifertMatrix::from_json(v.get("pattern_seifert").ok_or_else(|| bad("missing field \"pattern_seifert\""))?)?;
        let poly: LaurentPolynomial = v
            .get("alexander_poly")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("missing string field \"alexander_poly\""))?
            .parse()?;
        let count = v.get("curve_count").and_then(Value::as_u64).ok_or_else(|| bad("missing integer field \"curve_count\""))?;
        let flag = |k: &str| v.get(k).and_then(Value::as_bool).ok_or_else(|| bad(&format!("missing boolean field \"{k}\"")));
        OperatorDesc::custom(
            name,
            pattern,
            poly,
            count as usize,
            flag("curves_null_homologous")?,
            flag("curves_generate_module")?,
            flag("is_ribbon")?,
        )
    }
}
