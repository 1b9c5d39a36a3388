use std::ffi::{CStr, CString};
use std::ptr;

use heptagon_ffi::*;

fn take_string(p: *mut std::ffi::c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { hept_string_free(p) };
    s
}

#[test]
fn spectrum_handle() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(hept_spectrum_new(&mut s), HeptStatus::Ok);
        let mut n = 0;
        assert_eq!(hept_spectrum_len(s, &mut n), HeptStatus::Ok);
        assert_eq!(n, 35);
        let mut total = 0;
        assert_eq!(hept_spectrum_total(s, &mut total), HeptStatus::Ok);
        assert_eq!(total, 128);
        let mut level = std::mem::zeroed::<HeptLevel>();
        let zero_two = (0..n)
            .find(|&i| {
                assert_eq!(hept_spectrum_level(s, i, &mut level), HeptStatus::Ok);
                level.k == 0 && level.r_prime == 2 && level.nu == 1
            })
            .unwrap();
        assert_eq!((level.multiplicity, level.r_min, level.r_max), (4, 2, 5));
        assert_eq!(level.energy, -2.0);
        let mut text = ptr::null_mut();
        assert_eq!(hept_spectrum_energy_string(s, zero_two, &mut text), HeptStatus::Ok);
        assert_eq!(take_string(text), "-2");
        assert_eq!(hept_spectrum_to_json(s, &mut text), HeptStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(text)).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 35);

        assert_eq!(hept_spectrum_level(s, 35, &mut level), HeptStatus::OutOfRange);
        assert!(take_string(hept_last_error()).contains("out of range"));
        hept_spectrum_free(s);
        hept_spectrum_free(ptr::null_mut());
    }
}

#[test]
fn null_arguments_are_reported() {
    unsafe {
        let mut n = 0;
        assert_eq!(hept_spectrum_len(ptr::null(), &mut n), HeptStatus::NullPointer);
        assert_eq!(hept_spectrum_new(ptr::null_mut()), HeptStatus::NullPointer);
        assert_eq!(hept_report_len(ptr::null(), &mut n), HeptStatus::NullPointer);
        assert_eq!(hept_galois_apply(ptr::null(), ptr::null_mut(), 0, &mut n), HeptStatus::NullPointer);
        hept_string_free(ptr::null_mut());
    }
}

#[test]
fn verify_report_handle() {
    unsafe {
        let mut r = ptr::null_mut();
        assert_eq!(hept_verify_run(5, &mut r), HeptStatus::Ok);
        let mut n = 0;
        let mut passed = false;
        assert_eq!(hept_report_len(r, &mut n), HeptStatus::Ok);
        assert_eq!(hept_report_passed(r, &mut passed), HeptStatus::Ok);
        assert!(n > 20 && passed);
        let mut c = HeptCheck { section: 0, passed: false };
        assert_eq!(hept_report_check(r, 0, &mut c), HeptStatus::Ok);
        assert_eq!(c, HeptCheck { section: 5, passed: true });
        let mut json = ptr::null_mut();
        assert_eq!(hept_report_to_json(r, &mut json), HeptStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(v["checks"].as_array().unwrap().len(), n);
        hept_report_free(r);

        assert_eq!(hept_verify_run(9, &mut r), HeptStatus::InvalidArgument);
    }
}

#[test]
fn galois_permutation() {
    let mut perm = [usize::MAX; 64];
    let mut written = 0;
    unsafe {
        let id = CString::new(r#"{"eps":[[1,1,1],[1,1,1]],"l":1}"#).unwrap();
        assert_eq!(hept_galois_apply(id.as_ptr(), perm.as_mut_ptr(), perm.len(), &mut written), HeptStatus::Ok);
        assert_eq!(written, 35);
        assert!((0..35).all(|i| perm[i] == i));

        let g = CString::new(r#"{"eps":[[-1,1,1],[1,1,1]],"l":1}"#).unwrap();
        assert_eq!(hept_galois_apply(g.as_ptr(), perm.as_mut_ptr(), perm.len(), &mut written), HeptStatus::Ok);
        assert_eq!((0..35).filter(|&i| perm[i] != i).count(), 4);

        let bad = CString::new(r#"{"eps":[[1,1,1]],"l":1}"#).unwrap();
        assert_eq!(hept_galois_apply(bad.as_ptr(), perm.as_mut_ptr(), perm.len(), &mut written), HeptStatus::Parse);
        let bad_l = CString::new(r#"{"eps":[[1,1,1],[1,1,1]],"l":7}"#).unwrap();
        assert_ne!(hept_galois_apply(bad_l.as_ptr(), perm.as_mut_ptr(), perm.len(), &mut written), HeptStatus::Ok);
        assert_eq!(hept_galois_apply(id.as_ptr(), perm.as_mut_ptr(), 10, &mut written), HeptStatus::OutOfRange);
    }
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/heptagon.h")).unwrap();
    let source = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/src/lib.rs")).unwrap();
    let exports: Vec<&str> = source
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert_eq!(exports.len(), 16);
    for name in exports {
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
    for ty in ["typedef struct HeptSpectrum HeptSpectrum;", "typedef struct HeptReport HeptReport;", "HEPT_STATUS_OK = 0"] {
        assert!(header.contains(ty), "{ty}");
    }
}

#[test]
fn c_client_links_against_the_static_library() {
    let dir = env!("CARGO_MANIFEST_DIR");
    let target = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = target.join("libheptagon_ffi.a");
    assert!(lib.exists(), "{} not built", lib.display());
    let exe = std::env::temp_dir().join(format!("heptagon-c-client-{}", std::process::id()));
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let status = std::process::Command::new(cc)
        .args(["-std=c11", "-Wall", "-Werror", "-I"])
        .arg(format!("{dir}/include"))
        .arg(format!("{dir}/tests/c_client.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("C compiler available");
    assert!(status.success());
    let out = std::process::Command::new(&exe).output().unwrap();
    std::fs::remove_file(&exe).ok();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}
