use eulersum::verify::{verify_grid, verify_one, weight_report, Bucket, Grid, RecordKind};
use eulersum::{EvalContext, IdentityId, Params};

#[test]
fn sym_ts_113_against_closed_form() {
    let mut ctx = EvalContext::new(50);
    let params = Params::for_id(IdentityId::SymTs, &[1, 1, 3]).unwrap();
    let r = verify_one(IdentityId::SymTs, &params, &mut ctx).unwrap();
    assert!(r.passed);
    assert_eq!(r.label.as_deref(), Some("T[1,3] + S[1,3] = 14*z(3)*ln2 - 1/12*pi^4"));
}

#[test]
fn conv_bgg_base_case_is_exact() {
    let mut ctx = EvalContext::new(50);
    let params = Params::for_id(IdentityId::ConvBgg, &[0, 2]).unwrap();
    let r = verify_one(IdentityId::ConvBgg, &params, &mut ctx).unwrap();
    assert_eq!(r.kind, RecordKind::Exact);
    assert_eq!(r.residual.as_deref(), Some("0"));
    assert!(r.passed && r.precision_bits.is_none());
}

#[test]
fn sym_ts_grid_to_ten_passes_in_both_parities() {
    let records = verify_grid(&Grid::new(IdentityId::SymTs).with_max_weight(10), &EvalContext::new(50));
    assert!(records.iter().all(|r| r.passed));
    let s = weight_report(&records);
    let buckets: Vec<Bucket> = s.groups.iter().map(|g| g.bucket).collect();
    assert_eq!(buckets, vec![Bucket::Odd, Bucket::Even]);
    assert!(s.groups.iter().all(|g| g.passed == g.total));
}

#[test]
fn conv_egg_corner_of_grid() {
    let grid = Grid::new(IdentityId::ConvEgg)
        .with_range("n", 0..=6)
        .unwrap()
        .with_range("alpha", 0..=3)
        .unwrap()
        .with_range("gamma", 0..=3)
        .unwrap();
    let records = verify_grid(&grid, &EvalContext::new(50));
    assert_eq!(records.len(), 7 * 4 * 4 * 4);
    assert!(records.iter().all(|r| r.passed && r.residual.as_deref() == Some("0")));
}

#[test]
fn lambda_corollaries_pass() {
    let template = EvalContext::new(40);
    for id in [
        IdentityId::LaR,
        IdentityId::LaT,
        IdentityId::TsQeqEven,
        IdentityId::TsQ345,
    ] {
        let records = verify_grid(&Grid::new(id).with_max_weight(10), &template);
        assert!(!records.is_empty(), "{id}");
        assert!(records.iter().all(|r| r.passed), "{id}");
    }
}
