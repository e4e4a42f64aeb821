use std::ffi::CStr;
use std::ptr;

use riemann_bounds_ffi::*;

fn euler(left: (f64, f64, f64), right: (f64, f64, f64)) -> (RbStatus, *mut RbProblem) {
    let mut h = ptr::null_mut();
    let l = RbEulerState {
        rho: left.0,
        u: left.1,
        p: left.2,
    };
    let r = RbEulerState {
        rho: right.0,
        u: right.1,
        p: right.2,
    };
    let s = unsafe { rb_euler_problem_new(l, r, 1.4, &mut h) };
    (s, h)
}

#[test]
fn sod_round_trip() {
    let (s, h) = euler((1.0, 0.0, 1.0), (0.125, 0.0, 0.1));
    assert_eq!(s, RbStatus::Ok);
    unsafe {
        let mut sys = RbSystem::Bfe;
        assert_eq!(rb_problem_system(h, &mut sys), RbStatus::Ok);
        assert_eq!(sys, RbSystem::Euler);

        let mut pat = RbPattern::Unknown;
        assert_eq!(rb_problem_classify(h, &mut pat), RbStatus::Ok);
        assert_eq!(pat, RbPattern::Rs);

        let mut sol = std::mem::zeroed::<RbExactSolution>();
        assert_eq!(rb_problem_solve_exact(h, &mut sol), RbStatus::Ok);
        assert!((sol.star - 0.30313).abs() < 1e-5);
        assert!((sol.u_star - 0.92745).abs() < 1e-5);

        let mut f = f64::NAN;
        assert_eq!(rb_problem_star_function(h, sol.star, &mut f), RbStatus::Ok);
        assert!(f.abs() < 1e-10);

        let mut prr = 0.0;
        assert_eq!(rb_problem_two_rarefaction(h, &mut prr), RbStatus::Ok);
        assert!(prr >= sol.star);

        let mut b = std::mem::zeroed::<RbSpeedBounds>();
        assert_eq!(
            rb_problem_estimate(h, RbEstimator::TmsB as i32, &mut b),
            RbStatus::Ok
        );
        assert_eq!(b.estimator, RbEstimator::TmsB);
        assert!(b.s_left <= sol.s_left + 1e-12);
        assert!(b.s_right >= sol.s_right - 1e-12);

        rb_problem_free(h);
    }
}

#[test]
fn vacuum_reported_by_solve() {
    let (s, h) = euler((1.0, -10.0, 1.0), (1.0, 10.0, 1.0));
    assert_eq!(s, RbStatus::Ok);
    unsafe {
        let mut sol = std::mem::zeroed::<RbExactSolution>();
        assert_eq!(rb_problem_solve_exact(h, &mut sol), RbStatus::Vacuum);
        let mut pat = RbPattern::Unknown;
        assert_eq!(rb_problem_classify(h, &mut pat), RbStatus::Ok);
        assert_eq!(pat, RbPattern::Vacuum);
        rb_problem_free(h);
    }
}

#[test]
fn invalid_inputs() {
    let (s, h) = euler((-1.0, 0.0, 1.0), (1.0, 0.0, 1.0));
    assert_eq!(s, RbStatus::InvalidState);
    assert!(h.is_null());

    let mut h = ptr::null_mut();
    let st = RbSweState { h: 1.0, u: 0.0 };
    assert_eq!(
        unsafe { rb_swe_problem_new(st, st, -9.8, &mut h) },
        RbStatus::InvalidParams
    );

    let (_, h) = euler((1.0, 0.0, 1.0), (0.125, 0.0, 0.1));
    unsafe {
        let mut b = std::mem::zeroed::<RbSpeedBounds>();
        assert_eq!(
            rb_problem_estimate(h, 99, &mut b),
            RbStatus::InvalidArgument
        );
        assert_eq!(
            rb_problem_estimate(h, -1, &mut b),
            RbStatus::InvalidArgument
        );
        assert_eq!(
            rb_problem_estimate(h, RbEstimator::TmsD as i32, &mut b),
            RbStatus::UnsupportedEstimator
        );
        assert_eq!(
            rb_problem_estimate(h, 0, ptr::null_mut()),
            RbStatus::NullPointer
        );
        let mut f = 0.0;
        assert_eq!(
            rb_problem_star_function(h, -1.0, &mut f),
            RbStatus::InvalidArgument
        );
        assert_eq!(
            rb_problem_star_function(h, f64::NAN, &mut f),
            RbStatus::InvalidArgument
        );
        rb_problem_free(h);

        assert_eq!(
            rb_problem_solve_exact(ptr::null(), &mut std::mem::zeroed()),
            RbStatus::NullPointer
        );
        rb_problem_free(ptr::null_mut());
        assert_eq!(
            rb_euler_problem_new(
                RbEulerState {
                    rho: 1.0,
                    u: 0.0,
                    p: 1.0
                },
                RbEulerState {
                    rho: 1.0,
                    u: 0.0,
                    p: 1.0
                },
                1.4,
                ptr::null_mut()
            ),
            RbStatus::NullPointer
        );
    }
}

#[test]
fn shallow_and_blood_flow() {
    unsafe {
        let mut h = ptr::null_mut();
        let s = rb_swe_problem_new(
            RbSweState { h: 1.0, u: 2.5 },
            RbSweState { h: 0.1, u: 0.0 },
            9.8,
            &mut h,
        );
        assert_eq!(s, RbStatus::Ok);
        let mut b = std::mem::zeroed::<RbSpeedBounds>();
        assert_eq!(
            rb_problem_estimate(h, RbEstimator::TmsD as i32, &mut b),
            RbStatus::Ok
        );
        assert_eq!(
            rb_problem_estimate(h, RbEstimator::Batten as i32, &mut b),
            RbStatus::UnsupportedEstimator
        );
        rb_problem_free(h);

        let mut h = ptr::null_mut();
        let a = std::f64::consts::PI;
        let s = rb_bfe_problem_new(
            RbBfeState { area: a, u: 0.0 },
            RbBfeState { area: a, u: 2000.0 },
            28209.4792,
            1.05,
            &mut h,
        );
        assert_eq!(s, RbStatus::Ok);
        let mut sol = std::mem::zeroed::<RbExactSolution>();
        assert_eq!(rb_problem_solve_exact(h, &mut sol), RbStatus::Collapse);
        rb_problem_free(h);
    }
}

#[test]
fn courant() {
    let speeds = [
        RbSpeedBounds {
            s_left: -1.0,
            s_right: 2.0,
            estimator: RbEstimator::Exact,
            pattern: RbPattern::Unknown,
        },
        RbSpeedBounds {
            s_left: -4.0,
            s_right: 0.5,
            estimator: RbEstimator::Exact,
            pattern: RbPattern::Unknown,
        },
    ];
    let mut dt = 0.0;
    let s = unsafe { rb_courant_dt(speeds.as_ptr(), speeds.len(), 0.1, 0.8, &mut dt) };
    assert_eq!(s, RbStatus::Ok);
    assert!((dt - 0.02).abs() < 1e-15);

    let zero = [RbSpeedBounds {
        s_left: 0.0,
        s_right: 0.0,
        estimator: RbEstimator::Exact,
        pattern: RbPattern::Unknown,
    }];
    assert_eq!(
        unsafe { rb_courant_dt(zero.as_ptr(), 1, 0.1, 0.8, &mut dt) },
        RbStatus::ZeroMaxSpeed
    );
    assert_eq!(
        unsafe { rb_courant_dt(ptr::null(), 3, 0.1, 0.8, &mut dt) },
        RbStatus::NullPointer
    );
    assert_eq!(
        unsafe { rb_courant_dt(ptr::null(), 0, 0.1, 0.8, &mut dt) },
        RbStatus::InvalidArgument
    );
}

#[test]
fn messages() {
    for code in 0..14 {
        let m = unsafe { CStr::from_ptr(rb_status_message(code)) };
        assert!(!m.to_str().unwrap().is_empty());
    }
    let m = unsafe { CStr::from_ptr(rb_status_message(1234)) };
    assert_eq!(m.to_str().unwrap(), "unknown status");
    let v = unsafe { CStr::from_ptr(rb_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_is_valid_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/riemann_bounds.h");
    assert!(std::path::Path::new(header).exists());
    let Ok(out) = std::process::Command::new("cc")
        .args([
            "-std=c99",
            "-Wall",
            "-Werror",
            "-fsyntax-only",
            "-x",
            "c",
            header,
        ])
        .output()
    else {
        eprintln!("no C compiler on PATH, header syntax not checked");
        return;
    };
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}
