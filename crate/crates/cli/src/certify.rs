//! Certificates run by `verify-all`.

use std::collections::BTreeMap;
use std::time::Instant;

use fano_core::embed::{
    classical_rotation, color_automorphism_group, euler_characteristic, isomorphism_kind, trace_faces,
    triangular_completions, two_coloring, ColoredFaceSet, IsoKind,
};
use fano_core::group::{all_permutations, PermGroup};
use fano_core::kirkman15::{
    fano_subplanes, kts_automorphism_group, lifted_automorphism_group, parallel_classes, resolution_61,
    restriction_to_p, sts15_61, sts_automorphism_group15,
};
use fano_core::octonion::{
    cartan_table, is_algebra_automorphism, multiply, norm, random_octonions, unit_permutation, DEFAULT_SEED,
};
use fano_core::orient::{
    all_circuits, all_orientations, circuit_to_orientation, derived_plane, orientation_from_mate,
    oriented_automorphism_group, qr_orientation, reverse,
};
use fano_core::steiner::{
    all_fano_planes, are_orthogonal, automorphism_group, common_automorphism_group, cyclic_sts, isomorphisms,
    isomorphisms_by_sweep, orthogonal_mates, triple,
};
use fano_core::Permutation;
use serde::Serialize;
use serde_json::{json, Value};

use crate::input::{b1, b2};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct CertificateReport {
    pub check: &'static str,
    pub status: Status,
    /// Observed values; on failure these are the counterexample.
    pub witness: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<f64>,
}

/// A check returns its witness and whether it holds. Library errors count as failures.
type Check = fn() -> Result<(bool, Value), String>;

const CHECKS: &[(&str, Check)] = &[
    ("fano-mates-8", mates),
    ("orthogonal-aut-order-21", orthogonal_aut),
    ("fano-aut-order-168", fano_aut),
    ("orientations-match-mates", orientations),
    ("oriented-aut-equals-common", oriented_aut),
    ("reversal-involution", reversal),
    ("fano-circuits-24", circuits),
    ("classical-embedding-faces", classical_faces),
    ("triangular-completions-2", completions),
    ("affine-maps-preserve-rotation", affine_rotation),
    ("sts61-aut-order-21", sts61),
    ("sts13-common-aut-order-39", sts13),
    ("octonion-automorphisms-21", octonions),
    ("search-matches-sweep", search_vs_sweep),
];

pub fn run_all(timings: bool) -> Vec<CertificateReport> {
    CHECKS
        .iter()
        .map(|&(check, f)| {
            let start = Instant::now();
            let (ok, witness) = f().unwrap_or_else(|e| (false, json!({ "error": e })));
            CertificateReport {
                check,
                status: if ok { Status::Pass } else { Status::Fail },
                witness,
                millis: timings.then(|| start.elapsed().as_secs_f64() * 1e3),
            }
        })
        .collect()
}

fn s<E: ToString>(e: E) -> String {
    e.to_string()
}

fn cycles(g: &[Permutation]) -> Vec<String> {
    g.iter().map(Permutation::to_string).collect()
}

fn mates() -> Result<(bool, Value), String> {
    let counts: Vec<usize> = all_fano_planes()
        .iter()
        .map(|f| orthogonal_mates(f).map(|m| m.len()))
        .collect::<Result<_, _>>()
        .map_err(s)?;
    let bad: Vec<usize> = counts.iter().copied().filter(|&n| n != 8).collect();
    Ok((
        counts.len() == 30 && bad.is_empty(),
        json!({ "planes": counts.len(), "mates_of_b1": orthogonal_mates(&b1()).map_err(s)?.len(), "bad_counts": bad }),
    ))
}

fn orthogonal_aut() -> Result<(bool, Value), String> {
    let g = common_automorphism_group(&b1(), &b2()).map_err(s)?;
    let affine = PermGroup::affine(7, &[1, 2, 4]).map_err(s)?;
    let kind = g.classify_order21().ok();
    let extra: Vec<_> = g.iter().filter(|p| !affine.contains(p)).cloned().collect();
    Ok((
        g.order() == 21 && g == affine && !g.is_abelian(),
        json!({ "order": g.order(), "kind": kind, "abelian": g.is_abelian(), "non_affine": cycles(&extra) }),
    ))
}

fn fano_aut() -> Result<(bool, Value), String> {
    let orders: Vec<usize> = all_fano_planes()
        .iter()
        .map(|f| automorphism_group(f).map(|g| g.order()))
        .collect::<Result<_, _>>()
        .map_err(s)?;
    let total: usize = orders.iter().sum();
    Ok((
        orders.iter().all(|&o| o == 168) && total == 5040,
        json!({ "planes": orders.len(), "orders": orders.iter().collect::<std::collections::BTreeSet<_>>(), "sum": total }),
    ))
}

fn orientations() -> Result<(bool, Value), String> {
    let f = b1();
    let all = all_orientations(&f).map_err(s)?;
    let mut derived: Vec<_> = all.iter().map(derived_plane).collect();
    derived.sort();
    let mut mates = orthogonal_mates(&f).map_err(s)?;
    mates.sort();
    let mut round_trips = true;
    for o in &all {
        round_trips &= orientation_from_mate(&f, &derived_plane(o)).map_err(s)? == *o;
    }
    for m in &mates {
        round_trips &= derived_plane(&orientation_from_mate(&f, m).map_err(s)?) == *m;
    }
    Ok((
        all.len() == 8 && derived == mates && round_trips,
        json!({ "orientations": all.len(), "derived_equals_mates": derived == mates, "round_trips": round_trips }),
    ))
}

fn oriented_aut() -> Result<(bool, Value), String> {
    let mut orders = Vec::new();
    let mut equal = true;
    for o in all_orientations(&b1()).map_err(s)? {
        let g = oriented_automorphism_group(&o);
        equal &= g == common_automorphism_group(o.plane(), &derived_plane(&o)).map_err(s)?;
        orders.push(g.order());
    }
    Ok((
        equal && orders.iter().all(|&n| n == 21),
        json!({ "orders": orders, "equal_to_common": equal }),
    ))
}

fn reversal() -> Result<(bool, Value), String> {
    let all = all_orientations(&b1()).map_err(s)?;
    let failures = all.iter().filter(|o| reverse(&reverse(o)) != **o).count();
    Ok((failures == 0, json!({ "orientations": all.len(), "failures": failures })))
}

fn circuits() -> Result<(bool, Value), String> {
    let f = b1();
    let all = all_circuits(&f).map_err(s)?;
    let mut fibers: BTreeMap<_, usize> = BTreeMap::new();
    for c in &all {
        *fibers.entry(circuit_to_orientation(&f, c).map_err(s)?).or_default() += 1;
    }
    let sizes: Vec<usize> = fibers.values().copied().collect();
    Ok((
        all.len() == 24 && sizes == [3; 8],
        json!({ "circuits": all.len(), "fiber_sizes": sizes }),
    ))
}

fn classical_faces() -> Result<(bool, Value), String> {
    let r = classical_rotation();
    let faces = trace_faces(&r);
    let chi = euler_characteristic(&r);
    let coloring = two_coloring(&r).map_err(s)?;
    let a = ColoredFaceSet::class_as_design(&coloring.class_a, 7).map_err(s)?;
    let b = ColoredFaceSet::class_as_design(&coloring.class_b, 7).map_err(s)?;
    let g = color_automorphism_group(&r).map_err(s)?;
    let kind = g.classify_order21().ok();
    Ok((
        faces.len() == 14 && chi == 0 && a == b1() && b == b2() && g.order() == 21 && !g.is_abelian(),
        json!({
            "faces": faces.len(),
            "euler_characteristic": chi,
            "classes_are_b1_b2": a == b1() && b == b2(),
            "color_group_order": g.order(),
            "color_group_kind": kind,
        }),
    ))
}

fn completions() -> Result<(bool, Value), String> {
    let classical = classical_rotation();
    let found = triangular_completions(&[1, 5, 4, 6, 2, 3]).map_err(s)?;
    let sigma = Permutation::parse_cycles(7, "(2 4)(3 5)").map_err(s)?;
    let kinds: Vec<Option<IsoKind>> = found
        .iter()
        .map(|r| if *r == classical { Some(IsoKind::Preserving) } else { isomorphism_kind(r, &classical, &sigma) })
        .collect();
    let ok = found.len() == 2
        && found.contains(&classical)
        && kinds.contains(&Some(IsoKind::Reversing));
    Ok((ok, json!({ "count": found.len(), "witness": sigma.to_string(), "kinds": kinds })))
}

fn affine_rotation() -> Result<(bool, Value), String> {
    let r = classical_rotation();
    let affine = PermGroup::affine(7, &[1, 2, 4]).map_err(s)?;
    let failing: Vec<_> = affine
        .iter()
        .filter(|p| isomorphism_kind(&r, &r, p) != Some(IsoKind::Preserving))
        .cloned()
        .collect();
    Ok((failing.is_empty(), json!({ "maps": affine.order(), "failing": cycles(&failing) })))
}

fn sts61() -> Result<(bool, Value), String> {
    let sts = sts15_61();
    let subplanes = fano_subplanes(&sts).map_err(s)?.len();
    let mut classes = parallel_classes(&sts).map_err(s)?;
    classes.sort();
    let resolution = resolution_61();
    let mut translated = resolution.classes().to_vec();
    translated.sort();
    let g = sts_automorphism_group15(&sts).map_err(s)?;
    let structured = lifted_automorphism_group(&sts).map_err(s)? == g;
    let restricted = restriction_to_p(&g).map_err(s)?;
    let matches_common = restricted == common_automorphism_group(&b1(), &b2()).map_err(s)?;
    let kts = kts_automorphism_group(&resolution).map_err(s)? == g;
    let ok = sts.blocks().len() == 35
        && subplanes == 1
        && classes == translated
        && g.order() == 21
        && !g.is_abelian()
        && structured
        && matches_common
        && kts;
    Ok((
        ok,
        json!({
            "blocks": sts.blocks().len(),
            "fano_subplanes": subplanes,
            "parallel_classes": classes.len(),
            "aut_order": g.order(),
            "aut_kind": g.classify_order21().ok(),
            "structured_search_agrees": structured,
            "restriction_is_common_group": matches_common,
            "kts_group_agrees": kts,
        }),
    ))
}

fn sts13() -> Result<(bool, Value), String> {
    let sts = cyclic_sts(13, &[triple(1, 3, 9), triple(2, 5, 6)]).map_err(s)?;
    let neg = sts.negate();
    let orth = are_orthogonal(&sts, &neg).map_err(s)?;
    let g = common_automorphism_group(&sts, &neg).map_err(s)?;
    let affine = g == PermGroup::affine(13, &[1, 3, 9]).map_err(s)?;
    Ok((
        orth.orthogonal && g.order() == 39 && affine,
        json!({ "orthogonal": orth.orthogonal, "order": g.order(), "equals_affine": affine }),
    ))
}

fn octonions() -> Result<(bool, Value), String> {
    let o = qr_orientation();
    let table = cartan_table(&o);
    let mut found = Vec::new();
    for p in all_permutations(7) {
        let sigma = Permutation::from_fn(8, |u| if u == 0 { 0 } else { p.apply(u - 1) + 1 });
        if is_algebra_automorphism(&sigma, &table).map_err(s)? {
            found.push(sigma);
        }
    }
    let mut lifted: Vec<_> = oriented_automorphism_group(&o).iter().map(unit_permutation).collect();
    lifted.sort();
    let left = random_octonions(1000, 9, DEFAULT_SEED);
    let right = random_octonions(1000, 9, DEFAULT_SEED + 1);
    let counterexample = left.iter().zip(&right).find(|(a, b)| {
        let ab = multiply(a, b, &table);
        multiply(&multiply(a, a, &table), b, &table) != multiply(a, &ab, &table)
            || multiply(&ab, b, &table) != multiply(a, &multiply(b, b, &table), &table)
            || norm(&ab) != norm(a) * norm(b)
    });
    Ok((
        found.len() == 21 && found == lifted && counterexample.is_none(),
        json!({
            "e1e2": table.get(1, 2).to_string(),
            "automorphisms": found.len(),
            "match_oriented_group": found == lifted,
            "samples": left.len(),
            "counterexample": counterexample.map(|(a, b)| [a.to_string(), b.to_string()]),
        }),
    ))
}

fn search_vs_sweep() -> Result<(bool, Value), String> {
    let mut pairs = vec![(b1(), b1()), (b1(), b2()), (b2(), b2())];
    for f in all_fano_planes() {
        pairs.push((b1(), f));
    }
    let mut disagreements = Vec::new();
    for (x, y) in &pairs {
        if isomorphisms(x, y).map_err(s)? != isomorphisms_by_sweep(x, y).map_err(s)? {
            disagreements.push(y.blocks().iter().map(|t| t.to_string()).collect::<Vec<_>>());
        }
    }
    Ok((disagreements.is_empty(), json!({ "queries": pairs.len(), "disagreements": disagreements })))
}
