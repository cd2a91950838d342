use super::*;
use crate::ring::{Atom, ConstExpr, SumFamily, SumIndex};

// Reference values to 70 digits from an independent arbitrary-precision
// evaluation (nested Hurwitz-zeta sums).
const ZETA3: &str = "1.202056903159594285399738161511449990764986292340498881792271555341838";
const LI4_HALF: &str = "0.5174790616738993863307581618988629456223774751413792582443193479770083";
const T12: &str = "2.633889302798536545948395588664021103622327024996167429051181404820684";
const S12: &str = "4.207199161058579998899083565290074967677452023191746086272950443696434";
const T22: &str = "4.058712126416768218185013862029379635405316069695225903811160807915452";
const S22: &str = "6.983434316162836151663535928229860299063956164274595655149729689736382";
const R24: &str = "0.2459880650225823126246720911252568395123998968485150401797609028193528";
const R33: &str = "0.4319364834742738777110693054684414907524555374177751960009894217505074";
const ZETA62: &str = "0.01781974041683598836265953024872461216871313711029118841882136191761348";
const ALT51: &str = "0.02639914879311694693301810700294852646786596247056615151827473225734581";
const ALT71: &str = "0.007217895875394201570614388318929150047942409826722583714817226003974242";

fn parse(s: &str, bits: usize) -> MpFloat {
    let v: dashu_float::DBig = s.parse().unwrap();
    MpFloat(v.with_base_and_precision::<2>(bits).value().with_rounding())
}

fn assert_close(a: &MpFloat, b: &MpFloat, digits: u32) {
    let d = a - b;
    assert!(d.below_ten_pow(digits), "{a} vs {b}: diff {}", d.to_decimal_string(5));
}

fn sum(f: SumFamily, p: u32, q: u32) -> SumIndex {
    SumIndex::new(f, p, q)
}

#[test]
fn atoms_match_reference() {
    let mut ctx = EvalContext::new(50);
    let bits = ctx.bits();
    assert_close(&ctx.atom(Atom::Zeta(3)).unwrap(), &parse(ZETA3, bits), 60);
    assert_close(&ctx.atom(Atom::Li4Half).unwrap(), &parse(LI4_HALF, bits), 60);
    assert_close(&ctx.atom(Atom::Zeta62).unwrap(), &parse(ZETA62, bits), 60);
    assert_close(&ctx.atom(Atom::AltZeta51).unwrap(), &parse(ALT51, bits), 60);
    assert_close(&ctx.atom(Atom::AltZeta71).unwrap(), &parse(ALT71, bits), 60);
    let pi = ctx.atom(Atom::Pi).unwrap();
    assert_close(&ctx.atom(Atom::Zeta(2)).unwrap(), &(&pi * &pi).div_i64(6), 60);
    let z4 = ctx.atom(Atom::Zeta(4)).unwrap();
    assert_close(&ctx.atom(Atom::TBar(4)).unwrap(), &z4.mul_i64(15), 60);
    assert_eq!(pi.to_decimal_string(20), "3.1415926535897932385");
    assert_eq!(
        ctx.atom(Atom::Ln2).unwrap().to_decimal_string(20),
        "0.69314718055994530942"
    );
}

#[test]
fn linear_sums_match_reference() {
    let mut ctx = EvalContext::new(50);
    let bits = ctx.bits();
    for (idx, r) in [
        (sum(SumFamily::T, 1, 2), T12),
        (sum(SumFamily::SBar, 1, 2), S12),
        (sum(SumFamily::T, 2, 2), T22),
        (sum(SumFamily::SBar, 2, 2), S22),
        (sum(SumFamily::R, 2, 4), R24),
        (sum(SumFamily::R, 3, 3), R33),
    ] {
        let e = eval_euler_sum(idx, &mut ctx).unwrap();
        assert_close(&e.value, &parse(r, bits), 60);
        assert!(e.error_bound < 1e-60, "{idx}: {}", e.error_bound);
    }
}

#[test]
fn closed_forms_at_full_precision() {
    let mut ctx = EvalContext::new(50);
    let t = ctx.euler_sum(sum(SumFamily::T, 1, 2)).unwrap().value;
    let s = ctx.euler_sum(sum(SumFamily::SBar, 1, 2)).unwrap().value;
    let rhs = ctx.eval_const(&"pi^2*ln2".parse::<ConstExpr>().unwrap()).unwrap();
    assert_close(&(t + s), &rhs, 60);
    let r13 = ctx.euler_sum(sum(SumFamily::R, 1, 3)).unwrap().value;
    let rhs = ctx
        .eval_const(&"-14*ln2*z(3) + 1/8*pi^4".parse::<ConstExpr>().unwrap())
        .unwrap();
    assert_close(&r13, &rhs, 60);
}

#[test]
fn bridges_and_relation_r() {
    let mut ctx = EvalContext::new(50);
    let t21 = eval_double_value(sum(SumFamily::SmallT, 2, 1), &mut ctx).unwrap().value;
    let t12 = ctx.euler_sum(sum(SumFamily::T, 1, 2)).unwrap().value;
    assert_eq!(t21, t12.mul_pow2(-3));
    assert!(eval_double_value(sum(SumFamily::T, 1, 2), &mut ctx).is_err());
    for p in 2..=5 {
        for q in 2..=5 {
            let r = ctx.euler_sum(sum(SumFamily::R, p, q)).unwrap().value;
            let s = ctx.euler_sum(sum(SumFamily::SBar, q, p)).unwrap().value;
            let rhs = ctx.atom(Atom::Zeta(p)).unwrap() * ctx.atom(Atom::TBar(q)).unwrap() - s;
            assert_close(&r, &rhs, 58);
        }
    }
}

#[test]
fn precision_monotone() {
    let mut lo = EvalContext::new(30);
    let mut hi = EvalContext::new(80);
    for idx in [
        sum(SumFamily::T, 3, 2),
        sum(SumFamily::SBar, 1, 7),
        sum(SumFamily::BigT, 5, 5),
    ] {
        let a = lo.euler_sum(idx).unwrap();
        let b = hi.euler_sum(idx).unwrap();
        let d = (&a.value - &b.value.with_bits(lo.bits())).abs().to_f64();
        assert!(d <= a.error_bound + 1e-40, "{idx}: {d}");
    }
    let z = hi.atom(Atom::Zeta(3)).unwrap();
    assert_close(&z, &parse(ZETA3, hi.bits()), 68);
}

#[test]
fn contexts_are_deterministic() {
    let idx = sum(SumFamily::R, 2, 3);
    let a = EvalContext::new(50).euler_sum(idx).unwrap();
    let b = std::thread::spawn(move || EvalContext::new(50).euler_sum(idx).unwrap())
        .join()
        .unwrap();
    assert_eq!(a, b);
}

#[test]
fn oracle_agrees_with_bridge() {
    let mut ctx = EvalContext::new(30);
    let t = eval_double_value(sum(SumFamily::BigT, 3, 2), &mut ctx)
        .unwrap()
        .value
        .to_f64();
    let o = eval_double_oracle(OracleKind::BigT, 3, 2, 200_000).unwrap();
    assert!((t - o.value.to_f64()).abs() <= o.bound && o.bound < 1e-9, "{t} {:?}", o);
}
