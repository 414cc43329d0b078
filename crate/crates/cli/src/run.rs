//! One handler per subcommand.  Each handler reads its input files through
//! the digesting context, calls the library, and returns the result payload
//! as JSON; all error paths funnel through `Failure`.

use crate::failure::Failure;
use crate::{BmodOp, Cmd, ConeOp, GroupOp, LinsubOp, MatroidOp, SpaceOp, VmOp};
use serde_json::{json, Value};
use std::path::Path;
use tropmat_core::bmod::{congruence_closure, qm_boolean, BPresentation, FiniteBModule};
use tropmat_core::cone::{cone_diagonal_stabilizer, realizable_permutations, Cone};
use tropmat_core::groups::{
    classify_weak_isomorphism, diagonal_conjugator, enumerate_homs, monomialize_torsion,
    FiniteGroup, MonomialHom, TORSION_CLOSURE_CAP,
};
use tropmat_core::json::{self, GroupInput};
use tropmat_core::linsub::partition_of_group;
use tropmat_core::matroid::Matroid;
use tropmat_core::perm::{Perm, PermGroup};
use tropmat_core::tropspace::{
    aut_structure, contains, diagonal_stabilizer, generators, in_span, PartitionSubspace,
};
use tropmat_core::valuated::ValuatedMatroid;

/// Default cap for the Bell-number partition enumeration (`--max-n`).
const PARTITION_DEFAULT_CAP: usize = 10;

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

/// Reads input files and folds their raw bytes, in read order, into one
/// FNV-1a digest so reports can echo what they were computed from.
pub struct Ctx {
    digest: u64,
}

impl Ctx {
    pub fn new() -> Ctx {
        Ctx { digest: FNV_OFFSET }
    }

    pub fn digest(&self) -> String {
        format!("fnv1a64:{:016x}", self.digest)
    }

    fn read(&mut self, path: &Path) -> Result<Value, Failure> {
        let bytes = std::fs::read(path).map_err(|e| Failure::io(path, &e))?;
        for &b in &bytes {
            self.digest = (self.digest ^ u64::from(b)).wrapping_mul(FNV_PRIME);
        }
        let text = std::str::from_utf8(&bytes).map_err(|_| {
            Failure::validation("bad-input", format!("{} is not UTF-8", path.display()))
        })?;
        Ok(json::parse_value(text)?)
    }
}

pub fn dispatch(cmd: Cmd, ctx: &mut Ctx) -> Result<Value, Failure> {
    match cmd {
        Cmd::Matroid(op) => matroid(op, ctx),
        Cmd::Vm(op) => vm(op, ctx),
        Cmd::Space(op) => space(op, ctx),
        Cmd::Linsub(op) => linsub(op, ctx),
        Cmd::Bmod(op) => bmod(op, ctx),
        Cmd::Group(op) => group(op, ctx),
        Cmd::Cone(op) => cone(op, ctx),
        Cmd::Selftest => crate::selftest::run(),
    }
}

// ---------------------------------------------------------------------
// Shared loaders.

fn load_matroid(ctx: &mut Ctx, path: &Path) -> Result<Matroid, Failure> {
    let v = ctx.read(path)?;
    let (n, rank, bases) = json::matroid_parts(&v)?;
    Ok(Matroid::validate_1based(n, rank, &bases)?)
}

fn load_vm(ctx: &mut Ctx, path: &Path, skip_exchange: bool) -> Result<ValuatedMatroid, Failure> {
    let v = ctx.read(path)?;
    let (n, rank, bases, weights) = json::vm_parts(&v)?;
    let m = Matroid::validate_1based(n, rank, &bases)?;
    let vm = if skip_exchange {
        ValuatedMatroid::validate_skip_exchange(m, weights)?
    } else {
        ValuatedMatroid::validate(m, weights)?
    };
    Ok(vm)
}

fn parse_perm_arg(s: &str, degree: usize) -> Result<Perm, Failure> {
    let t = s.trim();
    if t.starts_with('[') {
        let v = json::parse_value(t)?;
        Ok(json::perm(&v, degree)?)
    } else {
        Ok(Perm::from_cycles(degree, t)?)
    }
}

fn perm_group_value(g: &PermGroup) -> Value {
    json::object(vec![
        ("order", json!(g.order())),
        ("generators", Value::Array(g.generators().iter().map(json::perm_value).collect())),
        ("elements", Value::Array(g.elements().iter().map(json::perm_value).collect())),
    ])
}

fn subspace_value(v: &PartitionSubspace) -> Value {
    json::object(vec![
        ("classes", json::partition_value(&v.partition)),
        ("dim", json!(v.dim())),
    ])
}

fn module_value(m: &FiniteBModule) -> Value {
    json::object(vec![
        ("n_classes", json!(m.size())),
        (
            "representatives",
            Value::Array(m.elements().iter().map(|&s| json::mask_value(s)).collect()),
        ),
    ])
}

// ---------------------------------------------------------------------
// Handlers.

fn matroid(op: MatroidOp, ctx: &mut Ctx) -> Result<Value, Failure> {
    match op {
        MatroidOp::Validate { input } => {
            let m = load_matroid(ctx, &input)?;
            Ok(json::object(vec![
                ("valid", json!(true)),
                ("n", json!(m.n())),
                ("rank", json!(m.rank())),
                ("n_bases", json!(m.bases().len())),
                ("simple", json!(m.is_simple())),
            ]))
        }
        MatroidOp::Aut { input } => {
            let m = load_matroid(ctx, &input)?;
            let g = m.automorphisms();
            Ok(json::object(vec![
                ("order", json!(g.order())),
                (
                    "generators",
                    Value::Array(g.generators().iter().map(json::perm_value).collect()),
                ),
            ]))
        }
        MatroidOp::Hyperplanes { input } => {
            let m = load_matroid(ctx, &input)?;
            let hs = m.hyperplanes();
            Ok(json::object(vec![
                ("count", json!(hs.len())),
                ("hyperplanes", Value::Array(hs.iter().map(|&h| json::mask_value(h)).collect())),
            ]))
        }
        MatroidOp::Circuits { input } => {
            let m = load_matroid(ctx, &input)?;
            let cs = m.circuits();
            Ok(json::object(vec![
                ("count", json!(cs.len())),
                ("circuits", Value::Array(cs.iter().map(|&c| json::mask_value(c)).collect())),
            ]))
        }
    }
}

fn vm(op: VmOp, ctx: &mut Ctx) -> Result<Value, Failure> {
    match op {
        VmOp::Validate { input, skip_dw } => {
            let vm = load_vm(ctx, &input, skip_dw)?;
            Ok(json::object(vec![
                ("valid", json!(true)),
                ("n", json!(vm.matroid().n())),
                ("rank", json!(vm.matroid().rank())),
                ("n_bases", json!(vm.matroid().bases().len())),
                ("exchange_checked", json!(!skip_dw)),
            ]))
        }
        VmOp::Waut { input, sigma } => {
            let vm = load_vm(ctx, &input, false)?;
            let perm = parse_perm_arg(&sigma, vm.matroid().n())?;
            match vm.is_weak_automorphism(&perm)? {
                Some(witness) => Ok(json::object(vec![
                    ("weak_automorphism", json!(true)),
                    ("tau", json::rational_vector_value(&witness.tau)),
                ])),
                None => Ok(json::object(vec![("weak_automorphism", json!(false))])),
            }
        }
        VmOp::Wautgroup { input } => {
            let vm = load_vm(ctx, &input, false)?;
            let g = vm.weak_automorphism_group()?;
            Ok(perm_group_value(&g))
        }
        VmOp::Projeq { input } => {
            if input.len() != 2 {
                return Err(Failure::usage(format!(
                    "projeq compares exactly two valuated matroids; got {} --input files",
                    input.len()
                )));
            }
            let a = load_vm(ctx, &input[0], false)?;
            let b = load_vm(ctx, &input[1], false)?;
            match a.projectively_equivalent(&b) {
                Some((alpha, tau)) => Ok(json::object(vec![
                    ("projectively_equivalent", json!(true)),
                    ("alpha", json!(alpha.to_string())),
                    ("tau", json::rational_vector_value(&tau)),
                ])),
                None => Ok(json::object(vec![("projectively_equivalent", json!(false))])),
            }
        }
    }
}

fn space(op: SpaceOp, ctx: &mut Ctx) -> Result<Value, Failure> {
    match op {
        SpaceOp::Gens { input } => {
            let vm = load_vm(ctx, &input, false)?;
            let gens = generators(&vm)?;
            Ok(json::object(vec![
                ("n", json!(gens.n)),
                ("generators", json::generator_set_value(&gens)),
            ]))
        }
        SpaceOp::Member { input, vector } => {
            let vm = load_vm(ctx, &input, false)?;
            let raw = ctx.read(&vector)?;
            let x = json::vector(&raw)?;
            let member = contains(&vm, &x)?;
            // On simple matroids the residuation route must agree with the
            // bend relations; run both and keep the combination witness.
            let combination = if vm.matroid().is_simple() {
                let gens = generators(&vm)?;
                let span = in_span(&x, &gens);
                assert_eq!(
                    span.is_some(),
                    member,
                    "bend-relation and residuation membership disagree (theory violation)"
                );
                span
            } else {
                None
            };
            let mut pairs = vec![("member", json!(member))];
            if let Some(coeffs) = combination {
                pairs.push(("combination", json::vector_value(&coeffs)));
            }
            Ok(json::object(pairs))
        }
        SpaceOp::Stab { input } => {
            let vm = load_vm(ctx, &input, false)?;
            let v = diagonal_stabilizer(&vm)?;
            Ok(subspace_value(&v))
        }
        SpaceOp::Autstructure { input } => {
            let vm = load_vm(ctx, &input, false)?;
            let s = aut_structure(&vm)?;
            let section: Vec<Value> = s.section.values().map(json::monomial_value).collect();
            Ok(json::object(vec![
                ("h", perm_group_value(&s.h)),
                ("v", subspace_value(&s.v)),
                ("section", Value::Array(section)),
            ]))
        }
    }
}

fn linsub(op: LinsubOp, ctx: &mut Ctx) -> Result<Value, Failure> {
    match op {
        LinsubOp::Partition { input, max_n } => {
            let raw = ctx.read(&input)?;
            let eqs = json::equations(&raw)?;
            let Some(first) = eqs.first() else {
                return Err(Failure::validation(
                    "bad-input",
                    "at least one equation is required to fix the ambient dimension",
                ));
            };
            let n = first.a.len();
            let p = partition_of_group(n, &eqs, max_n.unwrap_or(PARTITION_DEFAULT_CAP))?;
            Ok(json::object(vec![("classes", json::partition_value(&p))]))
        }
    }
}

fn bmod(op: BmodOp, ctx: &mut Ctx) -> Result<Value, Failure> {
    match op {
        BmodOp::Closure { input } => {
            let raw = ctx.read(&input)?;
            let (n, relations) = json::presentation_parts(&raw)?;
            let p = BPresentation::from_1based(n, &relations)?;
            let m = congruence_closure(&p)?;
            Ok(module_value(&m))
        }
        BmodOp::Qm { input } => {
            let vm = load_vm(ctx, &input, false)?;
            let p = qm_boolean(&vm)?;
            let m = congruence_closure(&p)?;
            let mut pairs = match module_value(&m) {
                Value::Object(map) => map.into_iter().collect::<Vec<_>>(),
                _ => unreachable!("module_value builds an object"),
            };
            pairs.push(("n_relations".to_string(), json!(p.relations.len())));
            Ok(Value::Object(pairs.into_iter().collect()))
        }
        BmodOp::Quasifree { input } => {
            let raw = ctx.read(&input)?;
            let (n, relations) = json::presentation_parts(&raw)?;
            let p = BPresentation::from_1based(n, &relations)?;
            let m = congruence_closure(&p)?;
            let irr: Vec<Value> =
                m.join_irreducibles().iter().map(|&s| json::mask_value(s)).collect();
            Ok(json::object(vec![
                ("quasi_free", json!(m.is_quasi_free())),
                ("n_classes", json!(m.size())),
                ("join_irreducibles", Value::Array(irr)),
            ]))
        }
    }
}

fn group(op: GroupOp, ctx: &mut Ctx) -> Result<Value, Failure> {
    match op {
        GroupOp::Subreps { group, input } => {
            let gv = ctx.read(&group)?;
            let (source, source_perms) = match json::group_input(&gv)? {
                GroupInput::Table { table, generators } => {
                    (FiniteGroup::from_table(table, generators)?, None)
                }
                GroupInput::PermGenerators(gens) => {
                    let (g, elements) = FiniteGroup::from_perms(gens[0].degree(), &gens)?;
                    (g, Some(elements))
                }
            };
            let vm = load_vm(ctx, &input, false)?;
            let h = vm.weak_automorphism_group()?;
            let homs = enumerate_homs(&source, &h);
            let classes = classify_weak_isomorphism(&homs, &h);
            let class_values: Vec<Value> = classes
                .iter()
                .map(|hom| Value::Array(hom.images.iter().map(json::perm_value).collect()))
                .collect();
            let mut pairs = vec![
                ("source_order", json!(source.order())),
                ("target_order", json!(h.order())),
                ("n_homs", json!(homs.len())),
                ("n_classes", json!(classes.len())),
                ("classes", Value::Array(class_values)),
            ];
            if let Some(elements) = source_perms {
                // Echo which abstract index is which permutation, so the
                // image lists above are interpretable.
                pairs.push((
                    "source_elements",
                    Value::Array(elements.iter().map(json::perm_value).collect()),
                ));
            }
            Ok(json::object(pairs))
        }
        GroupOp::Monomialize { input } => {
            let raw = ctx.read(&input)?;
            let maps = json::monomial_maps(&raw)?;
            let lambda = monomialize_torsion(&maps, TORSION_CLOSURE_CAP)?;
            Ok(json::object(vec![("lambda", json::rational_vector_value(&lambda))]))
        }
        GroupOp::Conjugator { input } => {
            let raw = ctx.read(&input)?;
            let (classes, alpha, beta) = json::conjugator_parts(&raw)?;
            let v = PartitionSubspace::from_partition(classes);
            let alpha = MonomialHom { images: alpha };
            let beta = MonomialHom { images: beta };
            match diagonal_conjugator(&alpha, &beta, &v)? {
                Some(sol) => Ok(json::object(vec![
                    ("conjugate", json!(true)),
                    ("d", json::rational_vector_value(&sol.d)),
                    (
                        "kernel",
                        Value::Array(
                            sol.kernel.iter().map(|k| json::rational_vector_value(k)).collect(),
                        ),
                    ),
                ])),
                None => Ok(json::object(vec![("conjugate", json!(false))])),
            }
        }
    }
}

fn cone(op: ConeOp, ctx: &mut Ctx) -> Result<Value, Failure> {
    match op {
        ConeOp::Perms { input } => {
            let raw = ctx.read(&input)?;
            let (dim, rays) = json::cone_parts(&raw)?;
            let cone = Cone::validate(dim, rays)?;
            let g = realizable_permutations(&cone)?;
            Ok(perm_group_value(&g))
        }
        ConeOp::Stab { input } => {
            let raw = ctx.read(&input)?;
            let (dim, rays) = json::cone_parts(&raw)?;
            let cone = Cone::validate(dim, rays)?;
            let v = cone_diagonal_stabilizer(&cone)?;
            Ok(subspace_value(&v))
        }
    }
}
