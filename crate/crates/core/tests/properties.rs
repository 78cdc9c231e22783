mod common;

use proptest::prelude::*;

use slackmat::cone::canonical_ray;
use slackmat::io::{parse, serialize, Document};
use slackmat::lp::{lp_solve, verify_farkas, Constraint, LpOutcome, Sense};
use slackmat::rational::{dot, frac, is_zero};
use slackmat::recognition::{
    is_cone_slack, is_polytope_slack, verify_no_certificate, verify_yes_certificate, Convention,
    NoCertificate,
};
use slackmat::{
    dd, linalg, Certificate, ConeH, ConeV, Inequality, Matrix, PolytopeH, PolytopeV, Rational,
    Vector,
};

fn rational(lo: i64, hi: i64) -> impl Strategy<Value = Rational> {
    (lo..=hi, 1i64..=4).prop_map(|(n, d)| frac(n, d))
}

fn vector_of(len: usize, lo: i64, hi: i64) -> impl Strategy<Value = Vector> {
    prop::collection::vec(rational(lo, hi), len)
}

fn matrix(max_rows: usize, max_cols: usize, lo: i64, hi: i64) -> impl Strategy<Value = Matrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(move |(r, c)| {
        prop::collection::vec(rational(lo, hi), r * c)
            .prop_map(move |data| Matrix::new(r, c, data).unwrap())
    })
}

fn sparse_nonnegative(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop_oneof![Just(frac(0, 1)), rational(1, 3)], r * c)
            .prop_map(move |data| Matrix::new(r, c, data).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent(m in matrix(5, 6, -4, 4)) {
        let once = linalg::rref(&m);
        let twice = linalg::rref(&once.reduced);
        prop_assert_eq!(&twice.reduced, &once.reduced);
        prop_assert_eq!(once.rank(), linalg::rank(&m.transpose()));
    }

    #[test]
    fn kernel_basis_spans_the_kernel(m in matrix(5, 6, -4, 4)) {
        let kernel = linalg::kernel_basis(&m);
        prop_assert_eq!(kernel.len(), m.cols() - linalg::rank(&m));
        for v in &kernel {
            prop_assert!(is_zero(&m.mul_vec(v).unwrap()));
        }
        prop_assert_eq!(linalg::vectors_rank(&kernel, m.cols()), kernel.len());
        for y in linalg::left_kernel_basis(&m) {
            prop_assert!(is_zero(&m.left_mul_vec(&y).unwrap()));
        }
    }

    #[test]
    fn rank_factorization_reproduces(m in matrix(5, 5, -3, 3)) {
        let (a, b) = linalg::rank_factorization(&m);
        let k = linalg::rank(&m);
        prop_assert_eq!(a.cols(), k);
        prop_assert_eq!(b.rows(), k);
        prop_assert_eq!(a.mul(&b).unwrap(), m);
    }

    #[test]
    fn solve_linear_is_exact(m in matrix(5, 5, -3, 3), x in vector_of(5, -3, 3)) {
        let x = &x[..m.cols()];
        let b = m.mul_vec(x).unwrap();
        let y = linalg::solve_linear(&m, &b).unwrap().expect("b is in the column span");
        prop_assert_eq!(m.mul_vec(&y).unwrap(), b);
        if let Some(inv) = linalg::inverse(&m) {
            prop_assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(m.rows()));
        }
    }

    #[test]
    fn double_description_round_trip(raw in prop::collection::vec(vector_of(3, -3, 3), 1..7)) {
        let rays: Vec<Vector> = raw.into_iter().filter(|r| !is_zero(r)).collect();
        prop_assume!(!rays.is_empty());
        let v = ConeV::new(3, rays.clone(), Vec::new()).unwrap();
        let h = dd::dd_v_to_h(&v);
        for r in &rays {
            prop_assert!(h.contains(r));
        }
        let back = dd::dd_h_to_v(&h);
        for g in back.rays.iter().chain(&back.lineality) {
            prop_assert!(h.contains(g));
        }
        let mut again = dd::dd_v_to_h(&back).normals;
        let mut first = h.normals.clone();
        again.sort();
        first.sort();
        prop_assert_eq!(again, first);
        // Minimal generators are a subset of the canonicalized input rays.
        let canon: Vec<Vector> = rays.iter().map(|r| canonical_ray(r).unwrap()).collect();
        let minimal = dd::minimal_vrep(&v);
        if minimal.lineality.is_empty() {
            for r in &minimal.rays {
                prop_assert!(canon.contains(r));
            }
        }
        prop_assert_eq!(dd::dd_v_to_h(&minimal).normals.len(), h.normals.len());
    }

    #[test]
    fn recognition_certificates_check_out(m in sparse_nonnegative(5)) {
        for r in [is_cone_slack(&m).unwrap(), is_polytope_slack(&m).unwrap()] {
            match &r.certificate {
                Certificate::Yes(y) => prop_assert!(verify_yes_certificate(&m, y)),
                Certificate::No(n) => prop_assert!(verify_no_certificate(&m, n)),
            }
        }
    }

    #[test]
    fn transpose_and_zero_rows_preserve_cone_verdict(m in sparse_nonnegative(4)) {
        let k = is_cone_slack(&m).unwrap().verdict();
        prop_assert_eq!(is_cone_slack(&m.transpose()).unwrap().verdict(), k);
        prop_assert_eq!(is_cone_slack(&common::with_zero_row(&m, 0)).unwrap().verdict(), k);
    }

    #[test]
    fn lp_outcomes_are_consistent(
        rows in prop::collection::vec((vector_of(3, -3, 3), rational(-3, 3)), 1..6),
        objective in vector_of(3, -3, 3),
    ) {
        let constraints: Vec<Constraint> =
            rows.into_iter().map(|(a, b)| Constraint::le(a, b)).collect();
        match lp_solve(&objective, &constraints, Sense::Maximize).unwrap() {
            LpOutcome::Optimal { point, value } => {
                prop_assert!(constraints.iter().all(|c| c.is_satisfied_by(&point)));
                prop_assert_eq!(dot(&objective, &point), value);
            }
            LpOutcome::Infeasible { farkas } => {
                prop_assert!(verify_farkas(&constraints, 3, &farkas));
            }
            LpOutcome::Unbounded => {}
        }
    }

    #[test]
    fn documents_round_trip(m in matrix(4, 4, -20, 20), pts in prop::collection::vec(vector_of(2, -9, 9), 0..4)) {
        let docs = vec![
            Document::Matrix(m.clone()),
            Document::PolytopeV(PolytopeV::new(2, pts.clone()).unwrap()),
            Document::PolytopeH(PolytopeH::new(
                2,
                pts.iter().map(|p| Inequality::new(p[0].clone(), p.clone())).collect(),
            ).unwrap()),
            Document::ConeV(ConeV::new(2, pts.clone(), pts.iter().take(1).cloned().collect()).unwrap()),
            Document::ConeH(ConeH::new(2, pts.clone()).unwrap()),
            Document::Certificate(Certificate::No(NoCertificate::ConeGenerating {
                convention: Convention::Row,
                witness: m.row(0).to_vec(),
                separator: m.column(0),
            })),
            Document::Certificate(Certificate::No(NoCertificate::OnesNotInColumnSpan {
                left_kernel_vector: m.row(0).to_vec(),
            })),
        ];
        for doc in docs {
            let text = serialize(&doc);
            let parsed = parse(&text).unwrap();
            prop_assert_eq!(&parsed, &doc);
            prop_assert_eq!(serialize(&parsed), text);
        }
    }
}

#[test]
fn yes_certificate_document_round_trips() {
    let m = common::prism();
    let result = is_polytope_slack(&m).unwrap();
    let doc = Document::Certificate(result.certificate);
    let text = serialize(&doc);
    assert_eq!(parse(&text).unwrap(), doc);
    assert_eq!(
        parse(&serialize(&Document::Matrix(m.clone()))).unwrap(),
        Document::Matrix(m)
    );
}
