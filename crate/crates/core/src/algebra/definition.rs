use serde::{Deserialize, Serialize};

use super::{
    direct_sum, field_algebra_default, matrix_algebra, strict_triangular_algebra, tensor_product,
    triangular_algebra, Algebra,
};
use crate::error::{Error, Result};
use crate::linalg::PrimeField;

/// JSON algebra definition:
/// `{"name": str, "prime": int, "dim": int, "table": [[i, j, k, c], ...]}`
/// with 0-based indices; omitted entries are zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDefinition {
    pub name: String,
    pub prime: u32,
    pub dim: usize,
    pub table: Vec<[i64; 4]>,
}

impl AlgebraDefinition {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("definition serializes")
    }

    /// Canonical definition: nonzero constants in `(i, j, k)` order.
    pub fn from_algebra(alg: &Algebra) -> Self {
        AlgebraDefinition {
            name: alg.name().to_string(),
            prime: alg.p(),
            dim: alg.dim(),
            table: alg
                .entries()
                .into_iter()
                .map(|(i, j, k, c)| [i as i64, j as i64, k as i64, c as i64])
                .collect(),
        }
    }

    pub fn to_algebra(&self) -> Result<Algebra> {
        let field = PrimeField::new(self.prime)?;
        let mut entries = Vec::with_capacity(self.table.len());
        for &[i, j, k, c] in &self.table {
            let idx = |x: i64| -> Result<usize> {
                usize::try_from(x).map_err(|_| Error::Parse(format!("negative index {x}")))
            };
            entries.push((idx(i)?, idx(j)?, idx(k)?, c));
        }
        Algebra::from_entries(self.name.clone(), field, self.dim, &entries)
    }
}

/// Parses builtin specifiers: `matrix:n:p`, `field:p:k`, `triangular:n:p`,
/// `strict:n:p`, `tensor:<spec>:<spec>`, `sum:<spec>:<spec>`.
pub fn parse_builtin(spec: &str) -> Result<Algebra> {
    let tokens: Vec<&str> = spec.split(':').collect();
    let (alg, used) = parse_tokens(&tokens)?;
    if used != tokens.len() {
        return Err(Error::Parse(format!(
            "trailing tokens in builtin specifier {spec:?}: {:?}",
            &tokens[used..]
        )));
    }
    Ok(alg)
}

fn parse_tokens(tokens: &[&str]) -> Result<(Algebra, usize)> {
    let num = |at: usize| -> Result<u32> {
        let t = tokens
            .get(at)
            .ok_or_else(|| Error::Parse("builtin specifier ended early".into()))?;
        t.parse::<u32>()
            .map_err(|_| Error::Parse(format!("expected a number, found {t:?}")))
    };
    let head = *tokens
        .first()
        .ok_or_else(|| Error::Parse("empty builtin specifier".into()))?;
    match head {
        "matrix" => Ok((matrix_algebra(num(1)? as usize, num(2)?)?, 3)),
        "triangular" => Ok((triangular_algebra(num(1)? as usize, num(2)?)?, 3)),
        "strict" => Ok((strict_triangular_algebra(num(1)? as usize, num(2)?)?, 3)),
        "field" => Ok((field_algebra_default(num(1)?, num(2)? as usize)?, 3)),
        "tensor" | "sum" => {
            let (a, used_a) = parse_tokens(&tokens[1..])?;
            let (b, used_b) = parse_tokens(&tokens[1 + used_a..])?;
            let alg = if head == "tensor" {
                tensor_product(&a, &b)?
            } else {
                direct_sum(&a, &b)?
            };
            Ok((alg, 1 + used_a + used_b))
        }
        other => Err(Error::Parse(format!("unknown builtin algebra {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_specifiers() {
        assert_eq!(parse_builtin("matrix:2:2").unwrap().dim(), 4);
        assert_eq!(parse_builtin("field:2:2").unwrap().dim(), 2);
        assert_eq!(parse_builtin("triangular:3:2").unwrap().dim(), 6);
        let t = parse_builtin("tensor:matrix:2:2:field:2:2").unwrap();
        assert_eq!(t.dim(), 8);
        let s = parse_builtin("sum:matrix:2:2:matrix:3:2").unwrap();
        assert_eq!(s.dim(), 13);
        let nested = parse_builtin("sum:tensor:matrix:1:2:field:2:2:triangular:2:2").unwrap();
        assert_eq!(nested.dim(), 5);
        assert!(parse_builtin("matrix:2").is_err());
        assert!(parse_builtin("matrix:2:2:2").is_err());
        assert!(parse_builtin("cube:2:2").is_err());
        assert!(matches!(
            parse_builtin("matrix:2:4"),
            Err(Error::NotPrime(4))
        ));
    }

    #[test]
    fn json_definition() {
        let text = r#"{"name": "gf2", "prime": 2, "dim": 1, "table": [[0,0,0,1]]}"#;
        let alg = AlgebraDefinition::from_json(text)
            .unwrap()
            .to_algebra()
            .unwrap();
        assert_eq!(alg.name(), "gf2");
        assert!(alg.is_unital());

        let dup = r#"{"name": "x", "prime": 2, "dim": 1, "table": [[0,0,0,1],[0,0,0,1]]}"#;
        assert!(matches!(
            AlgebraDefinition::from_json(dup).unwrap().to_algebra(),
            Err(Error::DuplicateEntry { .. })
        ));
        assert!(AlgebraDefinition::from_json("{not json").is_err());
        let neg = r#"{"name": "x", "prime": 2, "dim": 1, "table": [[-1,0,0,1]]}"#;
        assert!(AlgebraDefinition::from_json(neg)
            .unwrap()
            .to_algebra()
            .is_err());
    }

    #[test]
    fn definition_round_trip() {
        for spec in [
            "matrix:2:3",
            "tensor:matrix:2:2:field:2:2",
            "triangular:3:2",
        ] {
            let alg = parse_builtin(spec).unwrap();
            let def = AlgebraDefinition::from_algebra(&alg);
            let back = AlgebraDefinition::from_json(&def.to_json()).unwrap();
            assert_eq!(back, def);
            assert_eq!(back.to_algebra().unwrap(), alg);
        }
    }
}
