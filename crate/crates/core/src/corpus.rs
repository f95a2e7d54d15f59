//! Built-in worked cases with frozen expected outputs, used by the
//! regression command and the acceptance suite. Case ids follow the
//! internal numbering of the worked-example collection.

use crate::algebra::scalar::{int, rat, Real, Scalar};
use crate::algebra::{LinearSolutionSet, SplitQuaternion};
use crate::companion::{self, CompanionOutcome};
use crate::solver::{
    self, AffineFamily, Family, QuadEquation, SolutionPoint, SolutionSet, UniQuad,
};
use crate::verify;

fn q(c: [(i64, i64); 4]) -> SplitQuaternion {
    SplitQuaternion::new(
        rat(c[0].0, c[0].1),
        rat(c[1].0, c[1].1),
        rat(c[2].0, c[2].1),
        rat(c[3].0, c[3].1),
    )
}

fn qi(c: [i64; 4]) -> SplitQuaternion {
    SplitQuaternion::new(int(c[0]), int(c[1]), int(c[2]), int(c[3]))
}

fn affine(
    names: Vec<&'static str>,
    coords: Vec<usize>,
    base: [Scalar; 4],
    dirs: Vec<[Scalar; 4]>,
    excluded: Vec<(usize, Scalar)>,
) -> Family {
    Family::Affine(AffineFamily {
        param_names: names,
        param_coords: coords,
        base: base.map(Real::Exact),
        dirs,
        excluded,
    })
}

/// All distinct equations of the corpus, keyed by the case that introduces
/// them.
pub fn equations() -> Vec<(&'static str, QuadEquation)> {
    vec![
        ("2.1", eq_2_1()),
        ("3.1", eq_3_1()),
        ("3.2", eq_3_2()),
        ("3.3", eq_3_3()),
        ("3.4", eq_3_4()),
        ("3.5", eq_3_5()),
        ("3.6", eq_3_6()),
        ("4.2", eq_4_2()),
        ("4.3", eq_4_3()),
    ]
}

fn eq_2_1() -> QuadEquation {
    QuadEquation::new(
        qi([1, 0, 1, 0]),
        SplitQuaternion::zero(),
        qi([-1, 0, -1, 0]),
    )
}

fn eq_3_1() -> QuadEquation {
    QuadEquation::new(
        qi([1, 0, 1, 0]),
        qi([0, 1, 2, 1]),
        q([(-1, 4), (5, 2), (3, 4), (5, 2)]),
    )
}

fn eq_3_2() -> QuadEquation {
    QuadEquation::new(qi([1, 0, 1, 0]), qi([0, 1, 1, 0]), qi([-1, 1, 0, 0]))
}

fn eq_3_3() -> QuadEquation {
    QuadEquation::new(qi([1, 0, 1, 0]), qi([0, 1, 0, 1]), qi([1, -1, 0, 0]))
}

fn eq_3_4() -> QuadEquation {
    QuadEquation::new(qi([1, 0, 1, 0]), qi([0, 1, 0, 1]), qi([-1, 1, -1, 1]))
}

fn eq_3_5() -> QuadEquation {
    QuadEquation::new(qi([1, 0, 0, 1]), qi([0, 1, 1, 0]), qi([1, 2, 2, 1]))
}

fn eq_3_6() -> QuadEquation {
    QuadEquation::new(qi([1, 0, 1, 0]), qi([0, -1, 0, 1]), qi([-1, 1, -1, -1]))
}

fn eq_4_2() -> QuadEquation {
    QuadEquation::new(qi([1, 0, 1, 0]), qi([0, 2, 0, 1]), qi([1, 1, 2, 1]))
}

fn eq_4_3() -> QuadEquation {
    QuadEquation::new(
        qi([1, 0, 1, 0]),
        qi([0, 2, 0, 1]),
        q([(-3, 4), (0, 1), (3, 4), (0, 1)]),
    )
}

/// Expected full solution sets, where the case output is exact.
fn expected_2_1() -> SolutionSet {
    let mut set = SolutionSet::empty();
    set.push_family(crate::solver::squareroot::pure_imaginary_quadric(&int(-1)));
    for s in [1i64, -1] {
        set.push_family(affine(
            vec!["x0", "x1"],
            vec![0, 1],
            [int(0), int(0), int(s), int(0)],
            vec![
                [int(1), int(0), int(-1), int(0)],
                [int(0), int(1), int(0), int(1)],
            ],
            vec![(0, int(0))],
        ));
    }
    set
}

fn line_3_2() -> Family {
    affine(
        vec!["x1"],
        vec![1],
        [int(0), int(0), int(0), int(1)],
        vec![[int(0), int(1), int(1), int(0)]],
        vec![],
    )
}

fn expected_3_2_full() -> SolutionSet {
    let mut set = SolutionSet::empty();
    set.push_point(SolutionPoint::Exact(qi([-1, 0, 0, 0])));
    set.push_family(line_3_2());
    set
}

fn expected_3_4() -> SolutionSet {
    let mut set = SolutionSet::empty();
    set.push_family(affine(
        vec!["x0", "x1"],
        vec![0, 1],
        [int(0), int(0), int(-1), int(0)],
        vec![
            [int(1), int(0), int(-1), int(0)],
            [int(0), int(1), int(0), int(1)],
        ],
        vec![],
    ));
    set
}

fn expected_4_3() -> SolutionSet {
    let mut set = SolutionSet::empty();
    set.push_family(affine(
        vec!["x0", "x1"],
        vec![0, 1],
        [int(0), int(0), int(0), rat(1, 2)],
        vec![
            [int(1), int(0), int(-1), int(0)],
            [int(0), int(1), int(0), int(1)],
        ],
        vec![],
    ));
    set
}

/// A pass/fail accumulator with per-check detail lines.
#[derive(Debug, Clone)]
pub struct CaseReport {
    pub id: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub details: Vec<String>,
}

struct Checker {
    passed: bool,
    details: Vec<String>,
}

impl Checker {
    fn new() -> Self {
        Self {
            passed: true,
            details: Vec::new(),
        }
    }

    fn check(&mut self, name: &str, ok: bool) {
        if ok {
            self.details.push(format!("ok   {}", name));
        } else {
            self.passed = false;
            self.details.push(format!("FAIL {}", name));
        }
    }

    fn check_eq<T: PartialEq + std::fmt::Debug>(&mut self, name: &str, got: T, want: T) {
        if got == want {
            self.details.push(format!("ok   {}", name));
        } else {
            self.passed = false;
            self.details
                .push(format!("FAIL {}: got {:?}, want {:?}", name, got, want));
        }
    }

    fn close(&mut self, name: &str, got: f64, want: f64, tol: f64) {
        self.check(
            &format!("{} ({} ~ {})", name, got, want),
            (got - want).abs() <= tol,
        );
    }
}

pub fn case_ids() -> Vec<&'static str> {
    vec![
        "1.1", "2.1", "3.1", "3.2", "3.3", "3.4", "3.5", "3.6", "4.1", "4.2", "4.3", "5.1", "5.2",
        "5.3", "5.4",
    ]
}

pub fn run_case(id: &str) -> Option<CaseReport> {
    let (title, f): (&'static str, fn(&mut Checker)) = match id {
        "1.1" => ("vanishing companion polynomial", case_1_1),
        "2.1" => ("no linear term: quadric and affine families", case_2_1),
        "3.1" => ("pinned real part, single point", case_3_1),
        "3.2" => ("pinned real part, line of solutions", case_3_2),
        "3.3" => ("b along i·a, single point", case_3_3),
        "3.4" => ("b along i·a, two-parameter plane", case_3_4),
        "3.5" => ("b along a·i, quartic branch (numeric)", case_3_5),
        "3.6" => ("b along a·i, all three case outputs", case_3_6),
        "4.1" => ("invertible pivot via trace cubic", case_4_1),
        "4.2" => ("invertible pivot, closed-form pair", case_4_2),
        "4.3" => ("invertible pivot, degenerate plane", case_4_3),
        "5.1" => ("companion route: triple-root cube", case_5_1),
        "5.2" => ("companion route: two divisors", case_5_2),
        "5.3" => ("companion route: complex pair", case_5_3),
        "5.4" => ("companion route: invertible pivot", case_5_4),
        _ => return None,
    };
    let mut ck = Checker::new();
    f(&mut ck);
    Some(CaseReport {
        id: case_ids().into_iter().find(|&c| c == id).expect("known id"),
        title,
        passed: ck.passed,
        details: ck.details,
    })
}

pub fn run_all() -> Vec<CaseReport> {
    case_ids()
        .into_iter()
        .map(|id| run_case(id).expect("known id"))
        .collect()
}

fn case_1_1(ck: &mut Checker) {
    let eq = eq_3_6();
    ck.check("companion polynomial is identically zero", {
        companion::companion_poly(&eq).is_zero()
    });
    ck.check(
        "companion route is inapplicable",
        matches!(
            companion::solve_via_companion(&eq),
            CompanionOutcome::Inapplicable
        ),
    );
}

fn residual_sound(ck: &mut Checker, name: &str, eq: &QuadEquation, set: &SolutionSet, n: usize) {
    let ok = set.sample_members(n).iter().all(|p| {
        let r = verify::residual(eq, p);
        if p.is_exact() {
            r.exact_zero
        } else {
            r.max_abs < 1e-9
        }
    });
    ck.check(name, ok);
}

fn case_2_1(ck: &mut Checker) {
    let eq = eq_2_1();
    let got = solver::solve(&eq).unwrap();
    let want = expected_2_1();
    ck.check("solution set matches (quadric + two affine families)", {
        verify::sets_equivalent(&got, &want, 50, 1e-9)
    });
    ck.check(
        "family data exact",
        got.families.len() == 3 && got.points.is_empty(),
    );
    residual_sound(ck, "residuals sound over samples", &eq, &got, 50);
}

fn case_3_1(ck: &mut Checker) {
    let eq = eq_3_1();
    let norm = solver::normalize(&eq.a, &eq.b, &eq.c).unwrap();
    let bd = solver::BranchData::new(&norm);
    let data = solver::PabNonzeroData::new(&norm, &bd);
    ck.check_eq("x0", data.x0.clone(), rat(-1, 2));
    ck.check_eq("k1", data.k1.clone(), int(8));
    ck.check_eq("k2", data.k2.clone(), int(0));
    ck.check_eq("d1", data.d1.clone(), int(-1));
    ck.check_eq("d2", data.d2.clone(), rat(3, 2));
    ck.check_eq("m", data.m.clone(), int(8));
    ck.check_eq("r", data.r.clone(), int(-2));
    ck.check_eq("l", data.l.clone(), int(2));
    ck.check_eq("f", data.f.clone(), int(0));
    let got = solver::solve(&eq).unwrap();
    ck.check_eq(
        "single point -1/2 + i + k",
        got.points.clone(),
        vec![SolutionPoint::Exact(q([(-1, 2), (1, 1), (0, 1), (1, 1)]))],
    );
    ck.check("no families", got.families.is_empty());
}

fn case_3_2(ck: &mut Checker) {
    let eq = eq_3_2();
    let norm = solver::normalize(&eq.a, &eq.b, &eq.c).unwrap();
    let sz = solver::sz::solve_pab_nonzero(&norm).unwrap();
    let mut want = SolutionSet::empty();
    want.push_family(line_3_2());
    ck.check(
        "zero-divisor branch is the line x1 (i+j) + k",
        verify::sets_equivalent(&sz, &want, 50, 0.0),
    );
    ck.check_eq("line residual", verify::max_residual(&eq, &sz, 50), 0.0);
}

fn case_3_3(ck: &mut Checker) {
    let eq = eq_3_3();
    let got = solver::solve(&eq).unwrap();
    ck.check_eq(
        "single point 1/2 + i + 1/2 k",
        got.points.clone(),
        vec![SolutionPoint::Exact(q([(1, 2), (1, 1), (0, 1), (1, 2)]))],
    );
    ck.check("no families", got.families.is_empty());
}

fn case_3_4(ck: &mut Checker) {
    let eq = eq_3_4();
    let got = solver::solve(&eq).unwrap();
    ck.check(
        "the two-parameter plane x0 + x1 i - (1+x0) j + x1 k",
        verify::sets_equivalent(&got, &expected_3_4(), 60, 0.0),
    );
    ck.check_eq("plane residual", verify::max_residual(&eq, &got, 60), 0.0);
    ck.check(
        "companion route inapplicable",
        matches!(
            companion::solve_via_companion(&eq),
            CompanionOutcome::Inapplicable
        ),
    );
}

fn case_3_5(ck: &mut Checker) {
    let eq = eq_3_5();
    let got = solver::solve(&eq).unwrap();
    ck.check("no isolated points", got.points.is_empty());
    // shape: one sqrt branch (x0 = 0), one semi-explicit, one polynomial
    let shapes: Vec<&str> = got.families.iter().map(|f| f.shape_name()).collect();
    ck.check(
        "family shapes",
        shapes.contains(&"sqrt-branch")
            && shapes.contains(&"semi-explicit")
            && shapes.contains(&"poly-in-params"),
    );
    // the guard-line family: x3 = 2, x1 = x0² + 4 x0 + 19/4, x2 = -x1 - 1/2
    let poly = got
        .families
        .iter()
        .find_map(|f| match f {
            Family::PolyInParams(p) => Some(p.clone()),
            _ => None,
        })
        .expect("poly family");
    ck.check_eq(
        "x1(x0) on the guard line",
        poly.comps[1].clone(),
        UniQuad::new(rat(19, 4), int(4), int(1)),
    );
    ck.check_eq(
        "x3 constant on the guard line",
        poly.comps[3].clone(),
        UniQuad::new(int(2), int(0), int(0)),
    );
    // numeric: at (x2, x3) = (1, 1) the quartic has the two printed roots
    let semi = got
        .families
        .iter()
        .find_map(|f| match f {
            Family::SemiExplicit(s) => Some(s.clone()),
            _ => None,
        })
        .expect("semi-explicit family");
    let pts = semi.evaluate(&int(1), &int(1)).unwrap();
    ck.check_eq("two roots at (1,1)", pts.len(), 2);
    let mut traces: Vec<f64> = pts.iter().map(|p| p.to_f64()[0]).collect();
    traces.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ck.close("T1", traces[1], 0.3914, 5e-4);
    ck.close("T2", traces[0], -0.1675, 5e-4);
    for p in &pts {
        let v = p.to_f64();
        if (v[0] - 0.3914).abs() < 5e-4 {
            ck.close("x1 at T1", v[1], -2.7773, 5e-4);
        } else {
            ck.close("x1 at T2", v[1], 1.4857, 5e-4);
        }
        ck.close("x2 at root", v[2], 1.0, 5e-4);
        ck.close("x3 at root", v[3], 1.0, 5e-4);
    }
    ck.check(
        "residuals within 1e-9",
        verify::max_residual(&eq, &got, 40) < 1e-9,
    );
    ck.check(
        "companion route inapplicable",
        matches!(
            companion::solve_via_companion(&eq),
            CompanionOutcome::Inapplicable
        ),
    );
}

fn case_3_6(ck: &mut Checker) {
    let eq = eq_3_6();
    let got = solver::solve(&eq).unwrap();
    // (x0 = 0) two exact affine lines
    let mut want_lines = SolutionSet::empty();
    want_lines.push_family(affine(
        vec!["x3"],
        vec![3],
        [int(0), int(1), int(-1), int(0)],
        vec![[int(0), int(1), int(0), int(1)]],
        vec![],
    ));
    want_lines.push_family(affine(
        vec!["x3"],
        vec![3],
        [int(0), int(0), int(-1), int(0)],
        vec![[int(0), int(-1), int(0), int(1)]],
        vec![],
    ));
    let lines: Vec<Family> = got
        .families
        .iter()
        .filter(|f| f.shape_name() == "affine")
        .cloned()
        .collect();
    let got_lines = SolutionSet {
        points: vec![],
        families: lines,
    };
    ck.check(
        "x0 = 0 collapses to the two affine lines",
        verify::sets_equivalent(&got_lines, &want_lines, 40, 0.0),
    );
    // (2.2) x1 = -x0² + 2 x0 + 1/4 on the guard line x2 = -1
    let poly = got
        .families
        .iter()
        .find_map(|f| match f {
            Family::PolyInParams(p) => Some(p.clone()),
            _ => None,
        })
        .expect("poly family");
    ck.check_eq(
        "x1(x0) on the guard line",
        poly.comps[1].clone(),
        UniQuad::new(rat(1, 4), int(2), int(-1)),
    );
    ck.check_eq(
        "x2 constant on the guard line",
        poly.comps[2].clone(),
        UniQuad::new(int(-1), int(0), int(0)),
    );
    // (2.1) at (1, 1): one exact root -2 + 2i + j + k, one numeric
    let semi = got
        .families
        .iter()
        .find_map(|f| match f {
            Family::SemiExplicit(s) => Some(s.clone()),
            _ => None,
        })
        .expect("semi-explicit family");
    let pts = semi.evaluate(&int(1), &int(1)).unwrap();
    ck.check_eq("two roots at (1,1)", pts.len(), 2);
    ck.check(
        "exact root -2 + 2i + j + k",
        pts.contains(&SolutionPoint::Exact(qi([-2, 2, 1, 1]))),
    );
    let numeric = pts.iter().find(|p| !p.is_exact()).expect("numeric root");
    let v = numeric.to_f64();
    ck.close("numeric T", v[0], 0.3620, 5e-4);
    ck.close("numeric x1", v[1], -1.2621, 5e-4);
    ck.check(
        "residuals within 1e-9",
        verify::max_residual(&eq, &got, 40) < 1e-9,
    );
    ck.check(
        "companion route inapplicable",
        matches!(
            companion::solve_via_companion(&eq),
            CompanionOutcome::Inapplicable
        ),
    );
}

fn case_4_1(ck: &mut Checker) {
    let eq = eq_3_2();
    let norm = solver::normalize(&eq.a, &eq.b, &eq.c).unwrap();
    let si = solver::si::solve_pab_nonzero(&norm).unwrap();
    ck.check_eq(
        "invertible-pivot point -1",
        si.points.clone(),
        vec![SolutionPoint::Exact(qi([-1, 0, 0, 0]))],
    );
    let full = solver::solve(&eq).unwrap();
    ck.check(
        "full set is {-1} union the line",
        verify::sets_equivalent(&full, &expected_3_2_full(), 50, 0.0),
    );
}

fn case_4_2(ck: &mut Checker) {
    let eq = eq_4_2();
    let got = solver::solve(&eq).unwrap();
    ck.check_eq(
        "single point -1 + 17/3 i + 1/3 j + 6 k",
        got.points.clone(),
        vec![SolutionPoint::Exact(q([(-1, 1), (17, 3), (1, 3), (6, 1)]))],
    );
    ck.check("no families", got.families.is_empty());
}

fn case_4_3(ck: &mut Checker) {
    let eq = eq_4_3();
    let got = solver::solve(&eq).unwrap();
    ck.check(
        "the plane x0 + x1 i - x0 j + (x1 + 1/2) k",
        verify::sets_equivalent(&got, &expected_4_3(), 60, 0.0),
    );
    ck.check_eq("plane residual", verify::max_residual(&eq, &got, 60), 0.0);
    ck.check(
        "companion route inapplicable",
        matches!(
            companion::solve_via_companion(&eq),
            CompanionOutcome::Inapplicable
        ),
    );
}

fn expect_companion(
    ck: &mut Checker,
    eq: &QuadEquation,
    want_poly: &[Scalar],
    want_divisors: Vec<(Scalar, Scalar)>,
) -> Option<companion::CompanionReport> {
    let poly = companion::companion_poly(eq);
    ck.check_eq(
        "companion polynomial",
        poly.coeffs().to_vec(),
        want_poly.to_vec(),
    );
    let CompanionOutcome::Solved(report) = companion::solve_via_companion(eq) else {
        ck.check("companion route applicable", false);
        return None;
    };
    let got: Vec<(Real, Real)> = report
        .steps
        .iter()
        .map(|s| (s.trace.clone(), s.norm.clone()))
        .collect();
    let want: Vec<(Real, Real)> = want_divisors
        .into_iter()
        .map(|(t, n)| (Real::Exact(t), Real::Exact(n)))
        .collect();
    ck.check_eq("divisor pairs", got, want);
    let direct = solver::solve(eq).unwrap();
    ck.check(
        "companion union equals the direct solution set",
        verify::sets_equivalent(&report.union, &direct, 50, 0.0),
    );
    Some(report)
}

fn case_5_1(ck: &mut Checker) {
    let eq = eq_3_1();
    let report = expect_companion(
        ck,
        &eq,
        &[rat(-1, 2), int(-3), int(-6), int(-4)],
        vec![(int(-1), rat(1, 4))],
    );
    let Some(report) = report else { return };
    // the linear set under the unique divisor
    let Some(LinearSolutionSet::Affine { base, rank, .. }) = &report.steps[0].linear else {
        ck.check("linear set is affine", false);
        return;
    };
    ck.check_eq("rank", *rank, 2);
    ck.check_eq(
        "affine base",
        base.clone(),
        q([(-3, 4), (1, 2), (-1, 2), (3, 4)]),
    );
    ck.check_eq(
        "intersection point",
        report.steps[0].contribution.points.clone(),
        vec![SolutionPoint::Exact(q([(-1, 2), (1, 1), (0, 1), (1, 1)]))],
    );
}

fn case_5_2(ck: &mut Checker) {
    let eq = eq_3_2();
    let report = expect_companion(
        ck,
        &eq,
        &[int(2), int(2), int(-2), int(-2)],
        vec![(int(-2), int(1)), (int(0), int(-1))],
    );
    let Some(report) = report else { return };
    ck.check(
        "first divisor keeps the point -1",
        report.steps[0]
            .contribution
            .points
            .contains(&SolutionPoint::Exact(qi([-1, 0, 0, 0]))),
    );
    ck.check_eq(
        "second divisor yields a line",
        report.steps[1].contribution.families.len(),
        1,
    );
}

fn case_5_3(ck: &mut Checker) {
    let eq = eq_3_3();
    let report = expect_companion(ck, &eq, &[int(2), int(-2), int(2)], vec![(int(1), int(1))]);
    let Some(report) = report else { return };
    ck.check_eq(
        "intersection point",
        report.steps[0].contribution.points.clone(),
        vec![SolutionPoint::Exact(q([(1, 2), (1, 1), (0, 1), (1, 2)]))],
    );
}

fn case_5_4(ck: &mut Checker) {
    let eq = eq_4_2();
    let report = expect_companion(
        ck,
        &eq,
        &[int(-3), int(2), int(1)],
        vec![(int(-2), int(-3))],
    );
    let Some(report) = report else { return };
    ck.check(
        "pivot is invertible so the linear set is a point",
        matches!(report.steps[0].linear, Some(LinearSolutionSet::Point(_))),
    );
}
