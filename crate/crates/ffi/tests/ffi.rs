use std::ffi::{c_char, CStr, CString};
use std::process::Command;
use std::ptr;

use qtet_ffi::*;

fn take_string(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { qtet_string_free(p) };
    s
}

fn last_error() -> String {
    let p = qtet_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn generate(d: usize, c: Option<&str>) -> *mut QtetPair {
    let c = c.map(|s| CString::new(s).unwrap());
    let mut pair = ptr::null_mut();
    let status = unsafe { qtet_pair_generate(d, c.as_ref().map_or(ptr::null(), |c| c.as_ptr()), ptr::null(), &mut pair) };
    assert_eq!(status, QtetStatus::Ok);
    pair
}

#[test]
fn decide_through_handles() {
    let pair = generate(1, Some("2"));
    assert_eq!(unsafe { qtet_pair_dimension(pair) }, 2);
    let mut decision = ptr::null_mut();
    assert_eq!(unsafe { qtet_decide(pair, &mut decision) }, QtetStatus::Ok);
    let (mut exists, mut consistent) = (false, false);
    assert_eq!(unsafe { qtet_decision_exists(decision, &mut exists) }, QtetStatus::Ok);
    assert_eq!(unsafe { qtet_decision_consistent(decision, &mut consistent) }, QtetStatus::Ok);
    assert!(exists && consistent);

    let mut json = ptr::null_mut();
    assert_eq!(unsafe { qtet_decision_to_json(decision, &mut json) }, QtetStatus::Ok);
    let record: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
    assert_eq!(record["exists"], true);

    let mut action = ptr::null_mut();
    assert_eq!(unsafe { qtet_decision_action_json(decision, &mut action) }, QtetStatus::Ok);
    let action: serde_json::Value = serde_json::from_str(&take_string(action)).unwrap();
    assert_eq!(action["generators"].as_object().unwrap().len(), 8);

    unsafe {
        qtet_decision_free(decision);
        qtet_pair_free(pair);
    }
}

#[test]
fn pair_json_round_trips() {
    let pair = generate(2, None);
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { qtet_pair_to_json(pair, &mut json) }, QtetStatus::Ok);
    let text = CString::new(take_string(json)).unwrap();
    let mut back = ptr::null_mut();
    assert_eq!(unsafe { qtet_pair_from_json(text.as_ptr(), &mut back) }, QtetStatus::Ok);
    assert_eq!(unsafe { qtet_pair_dimension(back) }, 3);
    unsafe {
        qtet_pair_free(back);
        qtet_pair_free(pair);
    }
}

#[test]
fn geometric_pair_is_a_precondition_failure() {
    let pair = generate(1, None);
    let mut decision = ptr::null_mut();
    assert_eq!(unsafe { qtet_decide(pair, &mut decision) }, QtetStatus::Precondition);
    assert!(decision.is_null());
    assert!(!last_error().is_empty());
    unsafe { qtet_pair_free(pair) };
}

#[test]
fn errors_map_to_statuses() {
    let mut pair = ptr::null_mut();
    assert_eq!(unsafe { qtet_pair_from_json(ptr::null(), &mut pair) }, QtetStatus::NullArgument);
    let bad = CString::new("{not json").unwrap();
    assert_eq!(unsafe { qtet_pair_from_json(bad.as_ptr(), &mut pair) }, QtetStatus::PairFile);
    let ragged = CString::new(r#"{"field":{"mode":"symbolic"},"dimension":2,"A":[["1"]],"Astar":[["1"]]}"#).unwrap();
    assert_eq!(unsafe { qtet_pair_from_json(ragged.as_ptr(), &mut pair) }, QtetStatus::PairFile);
    assert!(last_error().contains("rows"));
    let valid = generate(1, Some("2"));
    assert_eq!(unsafe { qtet_decide(valid, ptr::null_mut()) }, QtetStatus::NullArgument);
    assert_eq!(unsafe { qtet_pair_dimension(ptr::null()) }, 0);
    unsafe {
        qtet_pair_free(valid);
        qtet_pair_free(ptr::null_mut());
        qtet_decision_free(ptr::null_mut());
        qtet_string_free(ptr::null_mut());
    }
}

#[test]
fn reduces_words() {
    let element = CString::new("xyx^2").unwrap();
    let q = CString::new("2").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { qtet_words_reduce(element.as_ptr(), ptr::null(), ptr::null(), &mut out) }, QtetStatus::Ok);
    let symbolic = take_string(out);
    assert!(!symbolic.contains("xyx^2") && symbolic.contains("x^2"), "{symbolic}");
    assert_eq!(unsafe { qtet_words_reduce(element.as_ptr(), ptr::null(), q.as_ptr(), &mut out) }, QtetStatus::Ok);
    take_string(out);
    let garbage = CString::new("x*+").unwrap();
    assert_eq!(unsafe { qtet_words_reduce(garbage.as_ptr(), ptr::null(), ptr::null(), &mut out) }, QtetStatus::Parse);
}

#[test]
fn header_compiles_as_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/qtet.h");
    let Ok(out) = Command::new("cc").args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-x", "c", header]).output() else {
        eprintln!("no C compiler; skipping");
        return;
    };
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(header).unwrap();
    for symbol in ["qtet_pair_generate", "qtet_decide", "qtet_words_reduce", "QTET_STATUS_PRECONDITION"] {
        assert!(text.contains(symbol), "{symbol} missing from header");
    }
}
