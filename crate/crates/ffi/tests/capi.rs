use std::ffi::{c_char, CStr, CString};
use std::process::Command;
use std::ptr;

use gqs_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { gqs_string_free(s) };
    out
}

fn last_error() -> String {
    let p = gqs_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

#[test]
fn root_system_counts() {
    for (name, rank, even, odd) in [("E8", 8, 240, 0), ("F4S", 4, 20, 16), ("G3", 3, 14, 14)] {
        let n = CString::new(name).unwrap();
        let mut h = ptr::null_mut();
        assert_eq!(unsafe { gqs_root_system_new(n.as_ptr(), &mut h) }, GqsStatus::Ok);
        let (mut r, mut e, mut o) = (0, 0, 0);
        assert_eq!(unsafe { gqs_root_system_counts(h, &mut r, &mut e, &mut o) }, GqsStatus::Ok);
        assert_eq!((r, e, o), (rank, even, odd));
        let mut s = ptr::null_mut();
        assert_eq!(unsafe { gqs_root_system_json(h, &mut s) }, GqsStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(v["roots"].as_array().unwrap().len(), even + odd);
        unsafe { gqs_root_system_free(h) };
    }
}

#[test]
fn unknown_system_sets_error() {
    let n = CString::new("E9").unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { gqs_root_system_new(n.as_ptr(), &mut h) }, GqsStatus::UnknownSystem);
    assert!(h.is_null());
    assert!(last_error().contains("E9"));
}

#[test]
fn null_arguments_are_reported() {
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { gqs_root_system_new(ptr::null(), &mut h) }, GqsStatus::NullPointer);
    let n = CString::new("G2").unwrap();
    assert_eq!(unsafe { gqs_root_system_new(n.as_ptr(), ptr::null_mut()) }, GqsStatus::NullPointer);
    let (mut r, mut e, mut o) = (0, 0, 0);
    assert_eq!(
        unsafe { gqs_root_system_counts(ptr::null(), &mut r, &mut e, &mut o) },
        GqsStatus::NullPointer
    );
    unsafe {
        gqs_string_free(ptr::null_mut());
        gqs_root_system_free(ptr::null_mut());
        gqs_grading_free(ptr::null_mut());
        gqs_d21a_free(ptr::null_mut());
    }
}

#[test]
fn invalid_utf8_is_reported() {
    let bad = [0xffu8, 0xfe, 0];
    let mut h = ptr::null_mut();
    assert_eq!(
        unsafe { gqs_root_system_new(bad.as_ptr().cast(), &mut h) },
        GqsStatus::InvalidUtf8
    );
}

#[test]
fn classify_through_c_abi() {
    for (name, classes) in [("G2", 1), ("E6", 4), ("D21A", 3), ("F4S", 6)] {
        let n = CString::new(name).unwrap();
        let mut count = 0;
        let mut s = ptr::null_mut();
        assert_eq!(unsafe { gqs_classify_json(n.as_ptr(), &mut count, &mut s) }, GqsStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(count, classes);
        assert_eq!(v.as_array().unwrap().len(), classes);
    }
}

#[test]
fn grading_handle() {
    let n = CString::new("F4S").unwrap();
    let marks = [1, 0, 0, 0];
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { gqs_grading_new(n.as_ptr(), marks.as_ptr(), 4, &mut g) }, GqsStatus::Ok);
    let (mut adm, mut len, mut cons) = (false, 0u8, false);
    assert_eq!(unsafe { gqs_grading_info(g, &mut adm, &mut len, &mut cons) }, GqsStatus::Ok);
    assert!(adm && cons);
    assert_eq!(len, 5);
    let dims = |k| {
        let (mut e, mut o) = (0, 0);
        assert_eq!(unsafe { gqs_grading_level_dims(g, k, &mut e, &mut o) }, GqsStatus::Ok);
        (e, o)
    };
    assert_eq!(dims(1), (0, 8));
    assert_eq!(dims(-2), (1, 0));
    let (mut e, mut o) = (0, 0);
    assert_eq!(unsafe { gqs_grading_level_dims(g, 3, &mut e, &mut o) }, GqsStatus::OutOfRange);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { gqs_grading_json(g, &mut s) }, GqsStatus::Ok);
    assert!(take(s).contains("\"consistent\": true"));
    unsafe { gqs_grading_free(g) };
}

#[test]
fn bad_marks() {
    let n = CString::new("G2").unwrap();
    let mut g = ptr::null_mut();
    let three = [1, 0, 0];
    assert_eq!(unsafe { gqs_grading_new(n.as_ptr(), three.as_ptr(), 3, &mut g) }, GqsStatus::InvalidMarks);
    let big = [3, 0];
    assert_eq!(unsafe { gqs_grading_new(n.as_ptr(), big.as_ptr(), 2, &mut g) }, GqsStatus::InvalidMarks);
    assert_eq!(unsafe { gqs_grading_new(n.as_ptr(), ptr::null(), 2, &mut g) }, GqsStatus::NullPointer);
}

#[test]
fn d21a_table() {
    let a = CString::new("2/3").unwrap();
    let mut t = ptr::null_mut();
    assert_eq!(unsafe { gqs_d21a_new(a.as_ptr(), &mut t) }, GqsStatus::Ok);
    let mut dim = 0;
    assert_eq!(unsafe { gqs_d21a_dim(t, &mut dim) }, GqsStatus::Ok);
    assert_eq!(dim, 17);
    let (mut jac, mut rel) = (1, 1);
    assert_eq!(unsafe { gqs_d21a_check(t, &mut jac, &mut rel) }, GqsStatus::Ok);
    assert_eq!((jac, rel), (0, 0));
    // [h1, e1] = 2 e1 with h1 = 0 and e1 = 3
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { gqs_d21a_structure_constant(t, 0, 3, 3, &mut s) }, GqsStatus::Ok);
    assert_eq!(take(s), "2");
    assert_eq!(unsafe { gqs_d21a_structure_constant(t, 0, 3, 4, &mut s) }, GqsStatus::Ok);
    assert_eq!(take(s), "0");
    assert_eq!(unsafe { gqs_d21a_structure_constant(t, 0, 17, 0, &mut s) }, GqsStatus::OutOfRange);
    assert_eq!(unsafe { gqs_d21a_json(t, &mut s) }, GqsStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
    assert_eq!(v["alpha"], "2/3");
    unsafe { gqs_d21a_free(t) };
}

#[test]
fn invalid_alpha() {
    for bad in ["-1", "0", "1/0", "x"] {
        let a = CString::new(bad).unwrap();
        let mut t = ptr::null_mut();
        assert_eq!(unsafe { gqs_d21a_new(a.as_ptr(), &mut t) }, GqsStatus::InvalidAlpha, "{bad}");
        assert!(t.is_null());
    }
}

#[test]
fn verify_reports_failures() {
    let mut s = ptr::null_mut();
    let status = unsafe { gqs_verify_json(&mut s) };
    let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
    let failed = v["checks"].as_array().unwrap().iter().filter(|c| c["passed"] == false).count();
    assert_eq!(status == GqsStatus::Ok, failed == 0);
    if failed > 0 {
        assert_eq!(status, GqsStatus::VerificationFailed);
    }
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(gqs_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_compiles_as_c() {
    let include = concat!(env!("CARGO_MANIFEST_DIR"), "/include");
    let dir = std::env::temp_dir().join(format!("gqs-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("check.c");
    std::fs::write(
        &src,
        "#include \"gqs.h\"\n\
         int main(void) {\n\
           GqsRootSystem *h = 0;\n\
           size_t r, e, o;\n\
           if (gqs_root_system_new(\"E8\", &h) != GQS_STATUS_OK) return 1;\n\
           gqs_root_system_counts(h, &r, &e, &o);\n\
           gqs_root_system_free(h);\n\
           return r == 8 ? 0 : 1;\n\
         }\n",
    )
    .unwrap();
    let out = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I", include])
        .arg(&src)
        .output()
        .expect("run cc");
    std::fs::remove_dir_all(&dir).unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}
