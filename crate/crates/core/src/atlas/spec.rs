//! Group-spec documents: explicit generators or an atlas id.
//!
//! ```json
//! {"name": "S4", "degree": 4, "generators": ["(1 2)", "(1 2 3 4)"]}
//! {"atlas": "psl2", "params": [17]}
//! {"atlas": "extraspecial", "params": [3, "+"], "name": "3^(1+2)+"}
//! {"atlas": "direct_product", "factors": [{"atlas": "sym", "params": [3]}, {"atlas": "q8"}]}
//! ```
//!
//! A corpus is a JSON list of such documents.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm::Permutation;

use super::catalog::{build, AtlasId, AtlasParam};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSource {
    Explicit { degree: usize, generators: Vec<String> },
    Atlas(AtlasId),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub name: String,
    pub source: GroupSource,
}

/// A group with the name it carries into reports.
#[derive(Clone, Debug)]
pub struct NamedGroup {
    pub name: String,
    pub group: FiniteGroup,
}

fn spec_err(msg: impl Into<String>) -> Error {
    Error::Spec(msg.into())
}

fn atlas_from_value(obj: &Map<String, Value>) -> Result<AtlasId> {
    let name = obj
        .get("atlas")
        .and_then(Value::as_str)
        .ok_or_else(|| spec_err("`atlas` must be a string"))?;
    let mut params = Vec::new();
    if let Some(ps) = obj.get("params") {
        let ps = ps.as_array().ok_or_else(|| spec_err("`params` must be a list"))?;
        for p in ps {
            params.push(param_from_value(p)?);
        }
    }
    if let Some(fs) = obj.get("factors") {
        let fs = fs.as_array().ok_or_else(|| spec_err("`factors` must be a list"))?;
        for f in fs {
            params.push(param_from_value(f)?);
        }
    }
    Ok(AtlasId::new(&name.to_ascii_lowercase(), params))
}

fn param_from_value(v: &Value) -> Result<AtlasParam> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(AtlasParam::Int)
            .ok_or_else(|| spec_err("atlas parameters must be integers")),
        Value::String(s) if s == "+" => Ok(AtlasParam::Sign(true)),
        Value::String(s) if s == "-" => Ok(AtlasParam::Sign(false)),
        Value::String(s) => Ok(AtlasParam::Id(AtlasId::parse(s)?)),
        Value::Object(o) => Ok(AtlasParam::Id(atlas_from_value(o)?)),
        _ => Err(spec_err("unsupported atlas parameter")),
    }
}

fn param_to_value(p: &AtlasParam) -> Value {
    match p {
        AtlasParam::Int(n) => json!(n),
        AtlasParam::Sign(true) => json!("+"),
        AtlasParam::Sign(false) => json!("-"),
        AtlasParam::Id(id) => atlas_to_value(id),
    }
}

fn atlas_to_value(id: &AtlasId) -> Value {
    let mut m = Map::new();
    m.insert("atlas".into(), json!(id.name));
    if !id.params.is_empty() {
        let key = if id.name == "direct_product" { "factors" } else { "params" };
        m.insert(key.into(), Value::Array(id.params.iter().map(param_to_value).collect()));
    }
    Value::Object(m)
}

impl GroupSpec {
    pub fn from_value(v: &Value) -> Result<Self> {
        let obj = v.as_object().ok_or_else(|| spec_err("a group spec must be an object"))?;
        let name = match obj.get("name") {
            None => None,
            Some(Value::String(s)) => Some(s.clone()),
            Some(_) => return Err(spec_err("`name` must be a string")),
        };
        if obj.contains_key("atlas") {
            let id = atlas_from_value(obj)?;
            return Ok(GroupSpec {
                name: name.unwrap_or_else(|| id.to_string()),
                source: GroupSource::Atlas(id),
            });
        }
        let degree = obj
            .get("degree")
            .and_then(Value::as_u64)
            .filter(|&d| d >= 1)
            .ok_or_else(|| spec_err("`degree` must be a positive integer"))? as usize;
        let generators = obj
            .get("generators")
            .and_then(Value::as_array)
            .ok_or_else(|| spec_err("`generators` must be a list of cycle strings"))?
            .iter()
            .map(|g| g.as_str().map(str::to_string).ok_or_else(|| spec_err("generators must be strings")))
            .collect::<Result<Vec<_>>>()?;
        if generators.is_empty() {
            return Err(Error::NoGenerators);
        }
        Ok(GroupSpec {
            name: name.ok_or_else(|| spec_err("explicit specs need a `name`"))?,
            source: GroupSource::Explicit { degree, generators },
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::from_value(&serde_json::from_str(text)?)
    }

    /// `atlas:<id>` shorthand used on the command line.
    pub fn atlas(text: &str) -> Result<Self> {
        let id = AtlasId::parse(text)?;
        Ok(GroupSpec {
            name: id.to_string(),
            source: GroupSource::Atlas(id),
        })
    }

    pub fn to_value(&self) -> Value {
        match &self.source {
            GroupSource::Explicit { degree, generators } => {
                json!({"name": self.name, "degree": degree, "generators": generators})
            }
            GroupSource::Atlas(id) => {
                let mut v = atlas_to_value(id);
                v["name"] = json!(self.name);
                v
            }
        }
    }

    pub fn build(&self) -> Result<NamedGroup> {
        let group = match &self.source {
            GroupSource::Explicit { degree, generators } => {
                let gens = generators
                    .iter()
                    .map(|g| Permutation::parse(g, *degree))
                    .collect::<Result<Vec<_>>>()?;
                FiniteGroup::new(gens)?
            }
            GroupSource::Atlas(id) => build(id)?.group,
        };
        Ok(NamedGroup {
            name: self.name.clone(),
            group,
        })
    }
}

pub fn load_group_spec(v: &Value) -> Result<NamedGroup> {
    GroupSpec::from_value(v)?.build()
}

/// Parses a corpus document (a list of specs).
pub fn parse_corpus(text: &str) -> Result<Vec<GroupSpec>> {
    let v: Value = serde_json::from_str(text)?;
    v.as_array()
        .ok_or_else(|| spec_err("a corpus must be a list"))?
        .iter()
        .map(GroupSpec::from_value)
        .collect()
}

pub fn load_corpus(path: &std::path::Path) -> Result<Vec<GroupSpec>> {
    parse_corpus(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_examples() {
        let s4 = load_group_spec(&json!({"name":"S4","degree":4,"generators":["(1 2)","(1 2 3 4)"]})).unwrap();
        assert_eq!((s4.name.as_str(), s4.group.order()), ("S4", 24));
        let p = load_group_spec(&json!({"atlas":"psl2","params":[17]})).unwrap();
        assert_eq!((p.name.as_str(), p.group.order()), ("psl2(17)", 2448));
        assert_eq!(load_group_spec(&json!({"atlas":"asl2_4"})).unwrap().group.order(), 960);
        let d = load_group_spec(&json!({"atlas":"direct_product","factors":[{"atlas":"sym","params":[3]},{"atlas":"q8"}]})).unwrap();
        assert_eq!(d.group.order(), 48);
        let e = load_group_spec(&json!({"atlas":"extraspecial","params":[2,"+",2]})).unwrap();
        assert_eq!(e.group.order(), 32);
    }

    #[test]
    fn schema_errors() {
        assert!(load_group_spec(&json!({"degree":4,"generators":["(1 2)"]})).is_err());
        assert!(load_group_spec(&json!({"name":"x","degree":4,"generators":[]})).is_err());
        assert!(load_group_spec(&json!({"name":"x","degree":3,"generators":["(1 4)"]})).is_err());
        assert!(load_group_spec(&json!({"atlas":7})).is_err());
        assert!(parse_corpus("{}").is_err());
    }

    #[test]
    fn round_trip() {
        for v in [
            json!({"name":"S4","degree":4,"generators":["(1 2)","(1 2 3 4)"]}),
            json!({"atlas":"extraspecial","params":[3,"+"],"name":"E27"}),
            json!({"atlas":"direct_product","factors":[{"atlas":"sym","params":[3]},{"atlas":"q8"}],"name":"d"}),
        ] {
            let s = GroupSpec::from_value(&v).unwrap();
            assert_eq!(GroupSpec::from_value(&s.to_value()).unwrap(), s);
        }
    }
}
