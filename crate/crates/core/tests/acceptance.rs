//! Acceptance criteria, run in order with one PASS/FAIL line each.

mod common;

use std::collections::BTreeMap;

use num_traits::Zero;
use toric_contact::cli::{self, EXIT_GENERICITY, EXIT_OK, EXIT_PARSE, EXIT_VALIDATION};
use toric_contact::contact::{
    contact_betti_direct, contact_betti_from_delta, orbit_families, validate_diagram, ContactError, OrbitFamily, ReebVector,
    ToricDiagram,
};
use toric_contact::corpus;
use toric_contact::document::Shape;
use toric_contact::ehrhart::{check_reciprocity, counts, delta_vector, quasipolynomial, reflexivity};
use toric_contact::exactlat::{rat, rat_vector, Int, Rat};
use toric_contact::graded::{GradedDimension, Window};
use toric_contact::polytope::{polygon_normal_form, reflexive_polygons, Region};
use toric_contact::prequant::{
    hc_by_period, hc_from_quotient, hc_smooth_base, orbifold_cohomology_of_base, prequantization, quotient_polytope,
};
use toric_contact::resolution::{
    fan_over, hc_contributions, orbifold_poincare, stapledon_check, star_triangulation, trivial_triangulation, Triangulation,
};

use common::*;

type Check = Result<(), Vec<String>>;

/// Collects failed expectations instead of stopping at the first.
#[derive(Default)]
struct Failures(Vec<String>);

impl Failures {
    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.0.push(what());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, label: &str, got: T, want: T) {
        if got != want {
            self.0.push(format!("{label}: got {got:?}, expected {want:?}"));
        }
    }

    fn done(self) -> Check {
        if self.0.is_empty() {
            Ok(())
        } else {
            Err(self.0)
        }
    }
}

fn even_row(g: &GradedDimension, len: usize) -> Vec<u64> {
    (0..len).map(|j| g.get(&rat(2 * j as i64, 1))).collect()
}

fn criterion_1() -> Check {
    let mut f = Failures::default();
    let d = delta_vector(&polygon(&[(1, 0), (0, 1), (-1, -1)], 1)).unwrap();
    f.eq("δ", d.coeffs().to_vec(), vec![1, 1, 1]);
    let q = quasipolynomial(&d);
    f.eq("period", q.period(), 1);
    f.eq("L(t)", q.branch(0).coeffs().to_vec(), vec![rat(2, 2), rat(3, 2), rat(3, 2)]);
    for t in 0..8i64 {
        f.eq(&format!("L({t})"), q.eval(&Int::from(t)), rat(3 * t * t + 3 * t + 2, 2));
    }
    f.done()
}

fn criterion_2() -> Check {
    let mut f = Failures::default();
    let p = order_three().polytope().clone();
    let d = delta_vector(&p).unwrap();
    let expect: Vec<u64> = (0..9).map(|j| u64::from([0, 2, 3, 4, 5, 7].contains(&j))).collect();
    f.eq("δ", d.coeffs().to_vec(), expect);
    let q = quasipolynomial(&d);
    // (t + a)²/9 has coefficients a²/9, 2a/9, 1/9.
    for (residue, a) in [(1usize, -1i64), (2, 1), (0, 3)] {
        f.eq(&format!("branch {residue}"), q.branch(residue).coeffs().to_vec(), vec![rat(a * a, 9), rat(2 * a, 9), rat(1, 9)]);
    }
    let ts: Vec<u64> = (1..=12).collect();
    let direct = counts(&p, &ts, Region::Closed);
    for (t, c) in ts.iter().zip(direct) {
        f.eq(&format!("L({t}) against a direct count"), q.eval(&Int::from(*t)), Rat::from_integer(Int::from(c)));
    }
    f.done()
}

fn criterion_3() -> Check {
    let mut f = Failures::default();
    let diagrams = corpus_diagrams();
    f.expect(diagrams.len() >= 9, || format!("only {} corpus diagrams", diagrams.len()));
    for (name, d) in &diagrams {
        let closed = d.default_window();
        // (−2 + 2/m, 2n + 6] on the grid (2/m)Z.
        let half_open = Window::new(&closed.lo + d.degree_step(), closed.hi.clone());
        for window in [half_open, closed] {
            let from_delta = contact_betti_from_delta(d, &window).unwrap();
            for t in [rat(1, 11), rat(1, 7), rat(-2, 13)] {
                let reeb = ReebVector::generic(d, &t).unwrap();
                let direct = contact_betti_direct(d, &reeb, &window).unwrap();
                f.expect(direct == from_delta, || format!("{name}, t = {t}: direct {direct:?} vs δ {from_delta:?}"));
            }
        }
    }
    f.done()
}

/// Degrees of the iterates of one family, up to `bound`, as a multiset.
fn degree_multiset(fam: &OrbitFamily, bound: &Rat) -> BTreeMap<Rat, usize> {
    let mut out = BTreeMap::new();
    for (_, d) in fam.degrees_up_to(bound).unwrap() {
        if d <= *bound {
            *out.entry(d).or_insert(0) += 1;
        }
    }
    out
}

fn criterion_4() -> Check {
    let mut f = Failures::default();
    let d = order_three();
    let bound = rat(20, 1);
    let tail = |extra: &[Rat]| -> BTreeMap<Rat, usize> {
        let mut m: BTreeMap<Rat, usize> = extra.iter().map(|x| (x.clone(), 1)).collect();
        for k in 0.. {
            let x = rat(8 + 2 * k, 3);
            if x > bound {
                break;
            }
            *m.entry(x).or_insert(0) += 1;
        }
        m
    };
    let gamma2 = tail(&[rat(4, 3)]);
    let gamma3 = tail(&[rat(-2, 3), rat(2, 3), rat(4, 3), rat(2, 1)]);
    let facet = |a: (i64, i64), b: (i64, i64)| {
        let ia = d.polytope().vertex_index(&rat_vector(&[(a.0, 3), (a.1, 3)])).unwrap();
        let ib = d.polytope().vertex_index(&rat_vector(&[(b.0, 3), (b.1, 3)])).unwrap();
        d.polytope().facet_index(&[ia, ib]).unwrap()
    };
    let (f1, f2, f3, f4) = (facet((1, 1), (1, 2)), facet((1, 2), (2, 2)), facet((2, 2), (2, 1)), facet((2, 1), (1, 1)));
    // R = (1 + ε₁, 1 + ε₂, 3) with ε₂ = s·ε₁ for several s > 1.
    for s in [rat(2, 1), rat(3, 2), rat(7, 1)] {
        let reeb = ReebVector::new(&d, rat_vector(&[(1, 3), (1, 3)]), vec![rat(1, 3), s.clone() / rat(3, 1)]).unwrap();
        let families = orbit_families(&d, &reeb).unwrap();
        let by_facet = |i: usize| families.iter().find(|x| x.facet == i).unwrap();
        f.expect(by_facet(f1).is_at_infinity() && by_facet(f4).is_at_infinity(), || format!("s = {s}: γ₁, γ₄ not at infinity"));
        f.eq(&format!("s = {s}: γ₂ degrees"), degree_multiset(by_facet(f2), &bound), gamma2.clone());
        f.eq(&format!("s = {s}: γ₃ degrees"), degree_multiset(by_facet(f3), &bound), gamma3.clone());
    }
    f.done()
}

fn quadrilateral_triangulations(d: &ToricDiagram) -> Vec<Triangulation> {
    let index = |x: i64, y: i64| d.polytope().vertex_index(&rat_vector(&[(x, 1), (y, 1)])).unwrap();
    let (a, b, c, e) = (index(0, 0), index(1, 0), index(0, 1), index(2, 2));
    let extra = vec![rat_vector(&[(1, 1), (1, 1)])];
    vec![
        Triangulation::from_cells(d, extra.clone(), vec![vec![a, b, 4], vec![b, e, 4], vec![e, c, 4], vec![c, a, 4]]),
        Triangulation::from_cells(d, extra, vec![vec![a, b, c], vec![b, e, 4], vec![e, c, 4], vec![b, c, 4]]),
    ]
}

fn criterion_5() -> Check {
    let mut f = Failures::default();
    let lens = lens();
    let quad = quadrilateral();
    let order3 = order_three();
    let mut cases: Vec<(&str, &ToricDiagram, Triangulation, bool)> = vec![
        ("lens, trivial", &lens, trivial_triangulation(&lens), false),
        ("lens, star", &lens, star_triangulation(&lens, rat_vector(&[(0, 1), (0, 1)])).unwrap(), true),
        ("order 3, trivial", &order3, trivial_triangulation(&order3), false),
    ];
    for (i, t) in quadrilateral_triangulations(&quad).into_iter().enumerate() {
        cases.push((if i == 0 { "quadrilateral, star" } else { "quadrilateral, flop" }, &quad, t, true));
    }
    for (label, d, t, unimodular) in cases {
        match stapledon_check(d, &t) {
            Ok(report) => {
                f.eq(&format!("{label}: unimodular"), report.unimodular, unimodular);
                f.expect(report.crepant, || format!("{label}: not crepant"));
                let delta = delta_vector(d.polytope()).unwrap();
                let m = delta.order() as i64;
                let h = orbifold_poincare(&fan_over(&t));
                for (k, &dk) in delta.coeffs().iter().enumerate() {
                    f.eq(&format!("{label}: H_orb degree 2·{k}/{m}"), h.get(&rat(2 * k as i64, m)), dk);
                }
                f.eq(&format!("{label}: H_orb total"), h.total(), delta.sum());
            }
            Err(e) => f.0.push(format!("{label}: {e}")),
        }
    }
    f.done()
}

fn criterion_6() -> Check {
    let mut f = Failures::default();
    let d = lens();
    let t = trivial_triangulation(&d);
    let window = Window::new(rat(0, 1), rat(8, 1));
    let fan = fan_over(&t);
    let mut rows: BTreeMap<String, Vec<u64>> = BTreeMap::new();
    for (sector, g) in hc_contributions(&d, &t, &window).unwrap() {
        let e = &sector.element;
        let label = if fan.cones()[e.cone].is_empty() {
            "F_1".to_string()
        } else if e.coeffs.iter().all(|c| *c == e.coeffs[0]) {
            format!("F_{}", e.coeffs[0])
        } else {
            format!("unexpected {:?}", e.coeffs)
        };
        rows.insert(label, even_row(&g, 5));
    }
    let expect: BTreeMap<String, Vec<u64>> = [
        ("F_1", vec![0, 0, 1, 1, 1]),
        ("F_1/3", vec![0, 1, 1, 1, 1]),
        ("F_2/3", vec![1, 1, 1, 1, 1]),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), v))
    .collect();
    f.eq("rows", rows, expect);
    let total = toric_contact::resolution::hc_from_resolution(&d, &t, &window).unwrap();
    f.eq("totals", even_row(&total, 5), vec![1, 2, 3, 3, 3]);
    f.done()
}

/// Stated totals for the four prequantizations, and the stated rows: copies
/// of the base homology starting in the given columns (the trailing ⋱
/// continues the same shift).
struct PrequantTable {
    document: &'static str,
    manifold: &'static str,
    base: Vec<u64>,
    first_columns: Vec<usize>,
    totals: Vec<u64>,
}

fn criterion_7() -> Check {
    let mut f = Failures::default();
    let tables = [
        PrequantTable { document: "cp2", manifold: "S⁵", base: vec![1, 1, 1], first_columns: vec![2, 5], totals: vec![0, 0, 1, 1, 1] },
        PrequantTable { document: "cp2-3", manifold: "L⁵₃", base: vec![1, 1, 1], first_columns: vec![0, 1, 2, 3], totals: vec![1, 2, 3, 3] },
        PrequantTable { document: "s2xs2", manifold: "S*S³", base: vec![1, 2, 1], first_columns: vec![1, 3, 5], totals: vec![0, 1, 2, 3, 3, 3] },
        PrequantTable { document: "s2xs2-2", manifold: "S*RP³", base: vec![1, 2, 1], first_columns: vec![0, 1, 2, 3, 4], totals: vec![1, 3, 4, 4, 4] },
    ];
    let window = Window::new(rat(0, 1), rat(12, 1));
    for table in &tables {
        let Some(Shape::Labelled(delta)) = corpus::document(table.document).map(|d| d.shape) else {
            f.0.push(format!("{}: missing labelled document", table.document));
            continue;
        };
        let q = prequantization(&delta).unwrap();
        let twisted = hc_from_quotient(&q, &window).unwrap();
        let smooth = hc_smooth_base(&q, &window).unwrap();
        let len = table.totals.len();
        f.expect(twisted == smooth, || format!("{}: the two formulas disagree: {twisted:?} vs {smooth:?}", table.manifold));
        f.eq(&format!("{} totals", table.manifold), even_row(&twisted, len), table.totals.clone());
        // The stated rows, summed by column, must also be what is computed.
        let mut column_sums = vec![0u64; len];
        for &c in &table.first_columns {
            for (i, b) in table.base.iter().enumerate() {
                if c + i < len {
                    column_sums[c + i] += b;
                }
            }
        }
        f.eq(&format!("{} column sums of the stated rows", table.manifold), even_row(&twisted, len), column_sums);
    }
    f.done()
}

fn criterion_8() -> Check {
    let mut f = Failures::default();
    let Some(Shape::Polytope { polytope, .. }) = corpus::document("lens-skew").map(|d| d.shape) else {
        return Err(vec!["lens-skew document missing".into()]);
    };
    let d = validate_diagram(&polytope).unwrap();
    f.eq("vertices", d.polytope().vertices().len(), 3);
    for v in [[(0, 1), (0, 1)], [(1, 1), (0, 1)], [(2, 1), (3, 1)]] {
        f.expect(d.polytope().vertex_index(&rat_vector(&v)).is_some(), || format!("missing vertex {v:?}"));
    }
    let q = quotient_polytope(&d, &[Int::from(1), Int::from(1), Int::from(2)]).unwrap();
    f.eq("r", q.r().cloned(), Some(Int::from(2)));
    let periods: Vec<Rat> = q.sectors().iter().map(|s| s.period.clone()).collect();
    f.eq("periods", periods, vec![rat(1, 4), rat(2, 4), rat(3, 4), rat(1, 1)]);
    for s in q.sectors() {
        let k = (&s.period * rat(4, 1)).to_integer();
        let expected = if s.period == rat(1, 1) { Rat::zero() } else { Rat::from_integer(k) };
        for c in &s.components {
            f.eq(&format!("c_T at T = {}", s.period), c.shift.clone(), expected.clone());
        }
    }
    let h = orbifold_cohomology_of_base(&q);
    f.eq("H_orb", (0..=4).map(|i| h.get(&rat(i, 1))).collect::<Vec<_>>(), vec![1, 1, 2, 1, 1]);
    let window = Window::new(rat(0, 1), rat(12, 1));
    let rows: Vec<(Rat, Vec<u64>)> = hc_by_period(&q, &window).unwrap().iter().map(|(t, g)| (t.clone(), even_row(g, 7))).collect();
    f.eq(
        "rows",
        rows,
        vec![
            (rat(1, 4), vec![1, 0, 1, 0, 1, 0, 1]),
            (rat(1, 2), vec![0, 1, 0, 1, 0, 1, 0]),
            (rat(3, 4), vec![0, 0, 1, 0, 1, 0, 1]),
            (rat(1, 1), vec![0, 1, 1, 2, 1, 2, 1]),
        ],
    );
    f.eq("totals", even_row(&hc_from_quotient(&q, &window).unwrap(), 7), vec![1, 2, 3, 3, 3, 3, 3]);
    f.done()
}

fn criterion_9() -> Check {
    let mut f = Failures::default();
    let mut sample: Vec<(String, ToricDiagram)> = corpus_diagrams();
    for m in 1..=3 {
        let drawn = sample_diagrams(m, 4, 17 + m as u64);
        f.eq(&format!("sampled diagrams of order {m}"), drawn.len(), 4);
        for (i, d) in drawn.into_iter().enumerate() {
            sample.push((format!("sample m={m} #{i}"), d));
        }
    }
    for (name, d) in &sample {
        let p = d.polytope();
        let delta = delta_vector(p).unwrap();
        let m = delta.order() as u64;
        let n = d.dim();
        f.expect(check_reciprocity(p, &quasipolynomial(&delta), 3 * m).is_ok(), || format!("{name}: reciprocity"));
        f.eq(&format!("{name}: δ₀"), delta.coeffs()[0], 1);
        // Σδ = m·n!·vol(mD) = m^{n+1}·(2·area(D)) for n = 2.
        let scaled_volume = twice_area(p) * Rat::from_integer(Int::from(m * m));
        f.eq(&format!("{name}: Σδ"), Rat::from_integer(Int::from(delta.sum())), scaled_volume.clone() * Rat::from_integer(Int::from(m)));
        let window = d.default_window();
        let cb = contact_betti_from_delta(d, &window).unwrap();
        let stable = scaled_volume.to_integer();
        for (deg, k) in cb.on_grid(&d.degree_step()) {
            if deg > rat(2 * n as i64 - 2, 1) {
                f.eq(&format!("{name}: cb at {deg}"), Int::from(k), stable.clone());
            }
        }
        f.eq(&format!("{name}: cb₀"), cb.get(&rat(0, 1)), interior_points(&p.scale(&rat(m as i64, 1))));
        f.eq(&format!("{name}: cb_{{2(n-1)}}"), Int::from(cb.get(&rat(2 * n as i64 - 2, 1))), &stable - 1);
        // η choice: shifting η by facet normals leaves every degree unchanged.
        let reeb = ReebVector::generic(d, &rat(1, 11)).unwrap();
        for fam in orbit_families(d, &reeb).unwrap() {
            let shifted: Vec<Int> = (0..=n).map(|i| &fam.eta[i] + &d.normals()[fam.vertices[0]][i] * 2 - &d.normals()[fam.vertices[1]][i]).collect();
            let other = OrbitFamily::with_eta(d, fam.facet, &reeb, shifted).unwrap();
            let a: Vec<_> = (1..=12).map(|k| fam.degree(k).ok()).collect();
            let b: Vec<_> = (1..=12).map(|k| other.degree(k).ok()).collect();
            f.eq(&format!("{name}: η choice on facet {}", fam.facet), a, b);
        }
        // Reeb choice: generic vectors at different interior points.
        let base = contact_betti_direct(d, &reeb, &window).unwrap();
        for t in [rat(3, 17), rat(-1, 5)] {
            let other = contact_betti_direct(d, &ReebVector::generic(d, &t).unwrap(), &window).unwrap();
            f.expect(other == base, || format!("{name}: Reeb choice t = {t}"));
        }
    }
    let polygons = reflexive_polygons();
    f.eq("reflexive polygon classes", polygons.len(), 16);
    let forms: Vec<_> = polygons.iter().map(|p| polygon_normal_form(&integral_vertices(p))).collect();
    for (i, p) in polygons.iter().enumerate() {
        let r = reflexivity(p).unwrap();
        f.expect(r.is_reflexive(), || format!("polygon {i} is not reflexive"));
        f.expect(delta_vector(p).unwrap().is_palindromic(), || format!("polygon {i}: δ not palindromic"));
        let dual = p.dual().unwrap();
        let sorted = |q: &toric_contact::polytope::RationalPolytope| {
            let mut v = q.vertices().to_vec();
            v.sort();
            v
        };
        f.eq(&format!("polygon {i}: dual of dual"), sorted(&dual.dual().unwrap()), sorted(p));
        f.expect(forms.contains(&polygon_normal_form(&integral_vertices(&dual))), || format!("polygon {i}: dual not in the list"));
    }
    // Palindromicity against reflexivity beyond the reflexive ones.
    let mut rng = Lcg::new(5);
    let mut seen = 0;
    while seen < 60 {
        let pts: Vec<(i64, i64)> = (0..3 + rng.below(3)).map(|_| (rng.below(6) as i64 - 2, rng.below(6) as i64 - 2)).collect();
        let Ok(p) = toric_contact::polytope::convex_hull(&pts.iter().map(|&(x, y)| vec![rat(x, 1), rat(y, 1)]).collect::<Vec<_>>()) else {
            continue;
        };
        seen += 1;
        let r = reflexivity(&p).unwrap();
        f.expect(r.consistent(), || format!("{pts:?}: {r:?}"));
        let reflexive_by_list = match single_interior_point(&p) {
            Some(c) => {
                let centred: Vec<Vec<Int>> = integral_vertices(&p).iter().map(|v| vec![&v[0] - &c[0], &v[1] - &c[1]]).collect();
                forms.contains(&polygon_normal_form(&centred))
            }
            None => false,
        };
        f.eq(&format!("{pts:?}: listed iff reflexive"), reflexive_by_list, r.is_reflexive());
    }
    f.done()
}

fn single_interior_point(p: &toric_contact::polytope::RationalPolytope) -> Option<Vec<Int>> {
    if interior_points(p) != 1 {
        return None;
    }
    p.lattice_points(&Int::from(1), Region::Interior).pop()
}

fn integral_vertices(p: &toric_contact::polytope::RationalPolytope) -> Vec<Vec<Int>> {
    p.vertices().iter().map(|v| v.iter().map(|x| x.to_integer()).collect()).collect()
}

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn criterion_10() -> Check {
    let mut f = Failures::default();
    let big = polygon(&[(0, 0), (2, 0), (0, 2)], 1);
    f.expect(matches!(validate_diagram(&big), Err(ContactError::FacetNotUnimodular { .. })), || "FacetNotUnimodular not raised".into());
    let d = lens();
    let degenerate = ReebVector::new(&d, rat_vector(&[(0, 1), (0, 1)]), rat_vector(&[(0, 1), (0, 1)])).unwrap();
    f.expect(
        matches!(contact_betti_direct(&d, &degenerate, &d.default_window()), Err(ContactError::GenericityFailure { .. })),
        || "GenericityFailure not raised".into(),
    );
    let code = |args: &[&str]| cli::run(std::iter::once("toric-contact").chain(args.iter().copied())).code;
    let bad_syntax = data("malformed.json");
    let cube = data("cube.json");
    let not_unimodular = data("not-unimodular.json");
    for (args, want) in [
        (vec!["cb", "@lens", "--pipeline", "both"], EXIT_OK),
        (vec!["crosscheck", "@order3"], EXIT_OK),
        (vec!["validate", bad_syntax.as_str()], EXIT_PARSE),
        (vec!["validate", "/nonexistent/document.json"], EXIT_PARSE),
        (vec!["cb", "@lens", "--window", "x:1"], EXIT_PARSE),
        (vec!["validate", cube.as_str()], EXIT_VALIDATION),
        (vec!["validate", not_unimodular.as_str()], EXIT_VALIDATION),
        (vec!["cb", "@lens", "--reeb", "0,0", "--perturb", "0"], EXIT_GENERICITY),
    ] {
        f.eq(&format!("exit code of {args:?}"), code(&args), want);
    }
    let out = cli::run(["toric-contact", "validate", cube.as_str()]);
    f.expect(out.stderr.contains("not simplicial"), || format!("cube message: {}", out.stderr));
    let out = cli::run(["toric-contact", "cb", "@lens", "--reeb", "0,0", "--perturb", "0"]);
    f.expect(out.stderr.contains("facet") && out.stderr.contains("iterate"), || format!("genericity message: {}", out.stderr));
    f.done()
}

/// Criteria that cannot hold as stated. The prequantization totals given
/// for S*S³ are (0,1,2,3,3,3), but the rows given with them sum to
/// (0,1,2,2,2,2), which is also what every pipeline computes.
const KNOWN_UNATTAINABLE: &[usize] = &[7];

#[test]
fn acceptance() {
    let criteria: [(usize, &str, fn() -> Check); 10] = [
        (1, "δ-vector and Ehrhart polynomial of the lens triangle", criterion_1),
        (2, "order-3 δ-vector and quasi-polynomial branches", criterion_2),
        (3, "direct orbit count equals δ pipeline on the corpus", criterion_3),
        (4, "γ₂ and γ₃ degrees for the order-3 Reeb vector", criterion_4),
        (5, "orbifold Poincaré coefficients equal δ_mj", criterion_5),
        (6, "sector contribution table of the lens space", criterion_6),
        (7, "prequantization tables by both formulas", criterion_7),
        (8, "CP²(4,1,1) sectors and contribution table", criterion_8),
        (9, "property suites", criterion_9),
        (10, "negative tests and exit codes", criterion_10),
    ];
    let mut failing = Vec::new();
    let mut details = BTreeMap::new();
    for (n, label, check) in criteria {
        match check() {
            Ok(()) => println!("criterion {n:>2}: PASS  {label}"),
            Err(problems) => {
                println!("criterion {n:>2}: FAIL  {label}");
                for p in &problems {
                    println!("              {p}");
                }
                failing.push(n);
                details.insert(n, problems);
            }
        }
    }
    assert_eq!(failing, KNOWN_UNATTAINABLE, "failing criteria: {details:#?}");
    // Criterion 7 fails only on the S*S³ stated totals.
    assert_eq!(details[&7].len(), 1, "{:#?}", details[&7]);
    assert!(details[&7][0].starts_with("S*S³ totals: got [0, 1, 2, 2, 2, 2]"), "{}", details[&7][0]);
}
