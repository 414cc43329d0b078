//! JSON schemas for every object the CLI reads or writes.  Parsing is
//! schema-level only: shape, types, and literal syntax are checked here,
//! while domain validation (exchange axioms, group laws, cone geometry)
//! stays with the owning module.  All numbers travel as lowest-term
//! rational strings, never floats.

use crate::groups::MonomialMap;
use crate::linsub::{Partition, TropLinearEquation};
use crate::matroid::Matroid;
use crate::perm::Perm;
use crate::scalar::{rat_parse, Rat, TropScalar};
use crate::sets;
use crate::tropspace::GeneratorSet;
use crate::valuated::ValuatedMatroid;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0}")]
pub struct JsonError(pub String);

fn err<T>(msg: impl Into<String>) -> Result<T, JsonError> {
    Err(JsonError(msg.into()))
}

pub fn parse_value(text: &str) -> Result<Value, JsonError> {
    serde_json::from_str(text).map_err(|e| JsonError(format!("malformed JSON: {e}")))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value, JsonError> {
    v.get(key)
        .ok_or_else(|| JsonError(format!("missing field \"{key}\"")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize, JsonError> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| JsonError(format!("{what} must be a nonnegative integer")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>, JsonError> {
    v.as_array().ok_or_else(|| JsonError(format!("{what} must be an array")))
}

fn as_str<'a>(v: &'a Value, what: &str) -> Result<&'a str, JsonError> {
    v.as_str().ok_or_else(|| JsonError(format!("{what} must be a string")))
}

fn usize_list(v: &Value, what: &str) -> Result<Vec<usize>, JsonError> {
    as_array(v, what)?
        .iter()
        .map(|x| as_usize(x, &format!("entry of {what}")))
        .collect()
}

// ---------------------------------------------------------------------
// Matroids and valuated matroids.

/// {"n": int, "rank": int, "bases": [[1-based ints],...]}
pub fn matroid_parts(v: &Value) -> Result<(usize, usize, Vec<Vec<usize>>), JsonError> {
    let n = as_usize(field(v, "n")?, "\"n\"")?;
    let rank = as_usize(field(v, "rank")?, "\"rank\"")?;
    let bases = as_array(field(v, "bases")?, "\"bases\"")?
        .iter()
        .map(|b| usize_list(b, "basis"))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((n, rank, bases))
}

/// Matroid JSON plus "weights": tropical literals aligned with "bases".
pub fn vm_parts(
    v: &Value,
) -> Result<(usize, usize, Vec<Vec<usize>>, Vec<TropScalar>), JsonError> {
    let (n, rank, bases) = matroid_parts(v)?;
    let weights = as_array(field(v, "weights")?, "\"weights\"")?
        .iter()
        .map(|w| {
            let s = as_str(w, "weight")?;
            TropScalar::parse(s).map_err(|e| JsonError(format!("bad weight \"{s}\": {e}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((n, rank, bases, weights))
}

pub fn matroid_value(m: &Matroid) -> Value {
    json!({
        "n": m.n(),
        "rank": m.rank(),
        "bases": m.bases().iter().map(|&b| mask_value(b)).collect::<Vec<_>>(),
    })
}

pub fn vm_value(vm: &ValuatedMatroid) -> Value {
    let mut obj = matroid_value(vm.matroid()).as_object().unwrap().clone();
    obj.insert(
        "weights".to_string(),
        Value::Array(vm.weights().iter().map(|w| Value::String(w.to_string())).collect()),
    );
    Value::Object(obj)
}

pub fn mask_value(mask: u32) -> Value {
    Value::Array(sets::elems_1based(mask).into_iter().map(|e| json!(e)).collect())
}

// ---------------------------------------------------------------------
// Vectors, permutations, monomial maps.

/// ["0", "-inf", "3/2", ...]
pub fn vector(v: &Value) -> Result<Vec<TropScalar>, JsonError> {
    as_array(v, "vector")?
        .iter()
        .map(|x| {
            let s = as_str(x, "vector entry")?;
            TropScalar::parse(s).map_err(|e| JsonError(format!("bad entry \"{s}\": {e}")))
        })
        .collect()
}

pub fn vector_value(x: &[TropScalar]) -> Value {
    Value::Array(x.iter().map(|e| Value::String(e.to_string())).collect())
}

pub fn rational_vector(v: &Value, what: &str) -> Result<Vec<Rat>, JsonError> {
    as_array(v, what)?
        .iter()
        .map(|x| {
            let s = as_str(x, &format!("entry of {what}"))?;
            rat_parse(s).map_err(|e| JsonError(format!("bad rational \"{s}\": {e}")))
        })
        .collect()
}

pub fn rational_vector_value(x: &[Rat]) -> Value {
    Value::Array(x.iter().map(|r| Value::String(r.to_string())).collect())
}

/// A permutation as a 1-based image array [2,3,4,1] or a cycle string
/// "(1 2 3 4)"; `degree` disambiguates the cycle form.
pub fn perm(v: &Value, degree: usize) -> Result<Perm, JsonError> {
    match v {
        Value::String(s) => {
            Perm::from_cycles(degree, s).map_err(|e| JsonError(format!("bad permutation: {e}")))
        }
        Value::Array(_) => {
            let images = usize_list(v, "permutation")?;
            if images.len() != degree {
                return err(format!(
                    "permutation has {} images, expected {degree}",
                    images.len()
                ));
            }
            Perm::from_images_1based(&images)
                .map_err(|e| JsonError(format!("bad permutation: {e}")))
        }
        _ => err("permutation must be a cycle string or a 1-based image array"),
    }
}

pub fn perm_value(p: &Perm) -> Value {
    Value::Array(p.images_1based().into_iter().map(|i| json!(i)).collect())
}

/// {"sigma": perm, "c": ["3", "-3"]}
pub fn monomial_map(v: &Value) -> Result<MonomialMap, JsonError> {
    let c = rational_vector(field(v, "c")?, "\"c\"")?;
    let sigma = perm(field(v, "sigma")?, c.len())?;
    Ok(MonomialMap::new(sigma, c))
}

pub fn monomial_maps(v: &Value) -> Result<Vec<MonomialMap>, JsonError> {
    let list = as_array(v, "monomial map list")?
        .iter()
        .map(monomial_map)
        .collect::<Result<Vec<_>, _>>()?;
    if list.is_empty() {
        return err("monomial map list must be nonempty");
    }
    if list.iter().any(|m| m.degree() != list[0].degree()) {
        return err("monomial maps must share one degree");
    }
    Ok(list)
}

pub fn monomial_value(m: &MonomialMap) -> Value {
    json!({
        "sigma": perm_value(&m.sigma),
        "c": rational_vector_value(&m.c),
    })
}

// ---------------------------------------------------------------------
// Tropical linear equations.

/// [{"a": vector, "b": vector}, ...]
pub fn equations(v: &Value) -> Result<Vec<TropLinearEquation>, JsonError> {
    as_array(v, "equation list")?
        .iter()
        .map(|e| {
            Ok(TropLinearEquation {
                a: vector(field(e, "a")?)?,
                b: vector(field(e, "b")?)?,
            })
        })
        .collect()
}

// ---------------------------------------------------------------------
// Partitions.

/// [[1-based ints],...] — blocks covering 1..=n exactly once.
pub fn partition(v: &Value, what: &str) -> Result<Partition, JsonError> {
    let blocks_1: Vec<Vec<usize>> = as_array(v, what)?
        .iter()
        .map(|b| usize_list(b, "block"))
        .collect::<Result<Vec<_>, _>>()?;
    let n = blocks_1.iter().flatten().count();
    let mut seen = vec![false; n];
    let mut blocks = Vec::with_capacity(blocks_1.len());
    for b in &blocks_1 {
        let mut block = Vec::with_capacity(b.len());
        for &e in b {
            if e == 0 || e > n || seen[e - 1] {
                return err(format!("{what} must list each of 1..={n} exactly once"));
            }
            seen[e - 1] = true;
            block.push(e - 1);
        }
        blocks.push(block);
    }
    Ok(Partition::new(n, blocks))
}

pub fn partition_value(p: &Partition) -> Value {
    Value::Array(
        p.blocks_1based()
            .into_iter()
            .map(|b| Value::Array(b.into_iter().map(|e| json!(e)).collect()))
            .collect(),
    )
}

// ---------------------------------------------------------------------
// Boolean-module presentations.

/// {"n": int, "relations": [[[1-based gens],[1-based gens]],...]}
pub fn presentation_parts(v: &Value) -> Result<(usize, Vec<(Vec<usize>, Vec<usize>)>), JsonError> {
    let n = as_usize(field(v, "n")?, "\"n\"")?;
    let relations = as_array(field(v, "relations")?, "\"relations\"")?
        .iter()
        .map(|r| {
            let pair = as_array(r, "relation")?;
            if pair.len() != 2 {
                return err("relation must be a pair of generator lists");
            }
            Ok((usize_list(&pair[0], "relation side")?, usize_list(&pair[1], "relation side")?))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((n, relations))
}

// ---------------------------------------------------------------------
// Finite groups.

/// Either a Cayley table or permutation generators.
pub enum GroupInput {
    Table { table: Vec<Vec<usize>>, generators: Vec<usize> },
    PermGenerators(Vec<Perm>),
}

/// {"order": k, "table": [[0-based ints],...], "generators": [0-based ints]}
/// or {"perm_generators": [perm,...]} with 1-based image arrays or cycle
/// strings (a cycle string needs at least one image array to fix the degree).
pub fn group_input(v: &Value) -> Result<GroupInput, JsonError> {
    if let Some(pg) = v.get("perm_generators") {
        let raw = as_array(pg, "\"perm_generators\"")?;
        if raw.is_empty() {
            return err("\"perm_generators\" must be nonempty");
        }
        let degree = raw
            .iter()
            .find_map(|p| p.as_array().map(|a| a.len()))
            .ok_or_else(|| {
                JsonError("at least one generator must be an image array".to_string())
            })?;
        let gens = raw
            .iter()
            .map(|p| perm(p, degree))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(GroupInput::PermGenerators(gens));
    }
    let order = as_usize(field(v, "order")?, "\"order\"")?;
    let table = as_array(field(v, "table")?, "\"table\"")?
        .iter()
        .map(|row| usize_list(row, "table row"))
        .collect::<Result<Vec<_>, _>>()?;
    if table.len() != order {
        return err(format!("\"table\" has {} rows, expected {order}", table.len()));
    }
    let generators = usize_list(field(v, "generators")?, "\"generators\"")?;
    Ok(GroupInput::Table { table, generators })
}

// ---------------------------------------------------------------------
// Cones.

/// {"dim": m, "rays": [["1","1","1"],...]}
pub fn cone_parts(v: &Value) -> Result<(usize, Vec<Vec<Rat>>), JsonError> {
    let dim = as_usize(field(v, "dim")?, "\"dim\"")?;
    let rays = as_array(field(v, "rays")?, "\"rays\"")?
        .iter()
        .map(|r| rational_vector(r, "ray"))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((dim, rays))
}

// ---------------------------------------------------------------------
// Conjugator problems.

/// {"classes": partition, "alpha": [monomial map,...], "beta": [...]}
pub fn conjugator_parts(
    v: &Value,
) -> Result<(Partition, Vec<MonomialMap>, Vec<MonomialMap>), JsonError> {
    let classes = partition(field(v, "classes")?, "\"classes\"")?;
    let alpha = monomial_maps(field(v, "alpha")?)?;
    let beta = monomial_maps(field(v, "beta")?)?;
    Ok((classes, alpha, beta))
}

// ---------------------------------------------------------------------
// Composite outputs.

pub fn generator_set_value(g: &GeneratorSet) -> Value {
    Value::Array(
        g.generators
            .iter()
            .map(|gen| {
                json!({
                    "independent_set": mask_value(gen.independent_set),
                    "hyperplane": mask_value(gen.hyperplane),
                    "vector": vector_value(&gen.vector),
                })
            })
            .collect(),
    )
}

/// Render any value with sorted keys, two-space indentation, and a trailing
/// newline — the byte-deterministic output format.
pub fn to_canonical_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serialization cannot fail");
    s.push('\n');
    s
}

/// Build an object from key/value pairs (keys sort on output regardless).
pub fn object(pairs: Vec<(&str, Value)>) -> Value {
    let mut map = Map::new();
    for (k, val) in pairs {
        map.insert(k.to_string(), val);
    }
    Value::Object(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn matroid_round_trip() {
        let text = r#"{"n": 4, "rank": 2, "bases": [[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]}"#;
        let v = parse_value(text).unwrap();
        let (n, rank, bases) = matroid_parts(&v).unwrap();
        let m = Matroid::validate_1based(n, rank, &bases).unwrap();
        let back = matroid_value(&m);
        let (n2, rank2, bases2) = matroid_parts(&back).unwrap();
        assert_eq!((n, rank, bases), (n2, rank2, bases2));
    }

    #[test]
    fn vm_round_trip_preserves_weights() {
        let text = r#"{"n": 4, "rank": 2,
                       "bases": [[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]],
                       "weights": ["-2","0","0","0","0","-1"]}"#;
        let v = parse_value(text).unwrap();
        let (n, rank, bases, weights) = vm_parts(&v).unwrap();
        let m = Matroid::validate_1based(n, rank, &bases).unwrap();
        let vm = ValuatedMatroid::validate(m, weights).unwrap();
        let back = vm_value(&vm);
        assert_eq!(back["weights"][0], json!("-2"));
        assert_eq!(back["weights"][5], json!("-1"));
    }

    #[test]
    fn vectors_and_rationals() {
        let v = parse_value(r#"["0","-inf","3/2"]"#).unwrap();
        let x = vector(&v).unwrap();
        assert_eq!(x[1], TropScalar::Bottom);
        assert_eq!(vector_value(&x), v);
        assert!(vector(&parse_value(r#"["1.5"]"#).unwrap()).is_err());
        let r = rational_vector(&parse_value(r#"["4/6"]"#).unwrap(), "x").unwrap();
        assert_eq!(r[0], ratq(2, 3));
    }

    fn ratq(p: i64, q: i64) -> Rat {
        crate::scalar::ratq(p, q)
    }

    #[test]
    fn perms_both_forms() {
        let cyc = parse_value(r#""(1 3)(2 4)""#).unwrap();
        let arr = parse_value("[3,4,1,2]").unwrap();
        assert_eq!(perm(&cyc, 4).unwrap(), perm(&arr, 4).unwrap());
        assert!(perm(&parse_value("[1,1]").unwrap(), 2).is_err());
        assert!(perm(&parse_value("[2,3,1]").unwrap(), 4).is_err());
    }

    #[test]
    fn monomial_maps_parse_and_print() {
        let v = parse_value(r#"[{"sigma": "(1 2)", "c": ["3","-3"]}]"#).unwrap();
        let maps = monomial_maps(&v).unwrap();
        assert_eq!(maps[0].c, vec![rat(3), rat(-3)]);
        let printed = monomial_value(&maps[0]);
        assert_eq!(printed["sigma"], json!([2, 1]));
        assert!(monomial_maps(&parse_value("[]").unwrap()).is_err());
    }

    #[test]
    fn partitions_validate_coverage() {
        let good = parse_value("[[1,3],[2]]").unwrap();
        let p = partition(&good, "classes").unwrap();
        assert_eq!(p.blocks_1based(), vec![vec![1, 3], vec![2]]);
        assert_eq!(partition_value(&p), good);
        assert!(partition(&parse_value("[[1,1],[2]]").unwrap(), "classes").is_err());
        assert!(partition(&parse_value("[[1],[3]]").unwrap(), "classes").is_err());
    }

    #[test]
    fn group_inputs_both_forms() {
        let table = parse_value(
            r#"{"order": 2, "table": [[0,1],[1,0]], "generators": [1]}"#,
        )
        .unwrap();
        assert!(matches!(group_input(&table).unwrap(), GroupInput::Table { .. }));
        let perms = parse_value(r#"{"perm_generators": [[2,1,3]]}"#).unwrap();
        match group_input(&perms).unwrap() {
            GroupInput::PermGenerators(g) => assert_eq!(g[0].images_1based(), vec![2, 1, 3]),
            _ => panic!("expected generators"),
        }
    }

    #[test]
    fn canonical_output_sorts_keys_and_ends_with_newline() {
        let v = object(vec![("zeta", json!(1)), ("alpha", json!(2))]);
        let s = to_canonical_string(&v);
        assert!(s.ends_with('\n'));
        assert!(s.find("alpha").unwrap() < s.find("zeta").unwrap());
    }
}
