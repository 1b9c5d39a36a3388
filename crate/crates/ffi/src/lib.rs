//! C ABI over the `heptagon` crate.
//!
//! Every function returns a [`HeptStatus`]; outputs go through pointer arguments.
//! Handles are opaque and must be released with their `_free` function. Strings
//! returned to the caller are owned by the caller and released with
//! [`hept_string_free`]. After a non-`OK` status, [`hept_last_error`] describes it.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use heptagon::galois::wreath::ElementSpec;
use heptagon::galois::{act_on_spectrum, WreathElement};
use heptagon::model::{full_spectrum, SpectrumRecord};
use heptagon::verify::{run, Section, VerifyReport};
use heptagon::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HeptStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    OutOfRange = 4,
    Arithmetic = 5,
    Io = 6,
    Panic = 7,
}

/// One spectrum record; `nu` is 0 for levels without a qubit sign.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HeptLevel {
    pub k: i32,
    pub r_prime: u8,
    pub nu: i8,
    pub r_min: u8,
    pub r_max: u8,
    pub multiplicity: u32,
    pub energy: f64,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HeptCheck {
    pub section: u8,
    pub passed: bool,
}

pub struct HeptSpectrum {
    records: Vec<SpectrumRecord>,
}

pub struct HeptReport {
    report: VerifyReport,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<String>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> HeptStatus {
    match e {
        Error::Parse(_) | Error::Json(_) => HeptStatus::Parse,
        Error::InvalidArgument(_) | Error::VariantMismatch(..) => HeptStatus::InvalidArgument,
        Error::Io(_) => HeptStatus::Io,
        _ => HeptStatus::Arithmetic,
    }
}

struct Failure(HeptStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(HeptStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, converting errors and panics into a status and the thread's last error.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> HeptStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HeptStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("panic: {msg}"));
            HeptStatus::Panic
        }
    }
}

/// # Safety
/// `ptr` must be null or valid for writes of `T`.
unsafe fn write<T>(ptr: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if ptr.is_null() {
        return Err(null(what));
    }
    ptr.write(value);
    Ok(())
}

/// # Safety
/// `ptr` must be null or point to a live `T` created by this library.
unsafe fn handle<'a, T>(ptr: *const T, what: &str) -> Result<&'a T, Failure> {
    ptr.as_ref().ok_or_else(|| null(what))
}

fn owned_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Failure(HeptStatus::InvalidArgument, "string contains NUL".into()))
}

/// Message for the last non-`OK` status on this thread, or null if none.
/// The caller owns the result.
#[no_mangle]
pub extern "C" fn hept_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| {
        e.borrow()
            .as_ref()
            .and_then(|m| CString::new(m.as_str()).ok())
            .map_or(std::ptr::null_mut(), CString::into_raw)
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hept_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds the 35-record spectrum.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hept_spectrum_new(out: *mut *mut HeptSpectrum) -> HeptStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let records = full_spectrum()?;
        write(out, Box::into_raw(Box::new(HeptSpectrum { records })), "out")
    })
}

/// # Safety
/// `s` must come from [`hept_spectrum_new`]; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hept_spectrum_len(s: *const HeptSpectrum, out: *mut usize) -> HeptStatus {
    guard(|| write(out, handle(s, "spectrum")?.records.len(), "out"))
}

/// Sum of multiplicities: 128.
///
/// # Safety
/// As for [`hept_spectrum_len`].
#[no_mangle]
pub unsafe extern "C" fn hept_spectrum_total(s: *const HeptSpectrum, out: *mut usize) -> HeptStatus {
    guard(|| {
        let total = handle(s, "spectrum")?.records.iter().map(|r| r.multiplicity).sum();
        write(out, total, "out")
    })
}

fn record<'a>(s: &'a HeptSpectrum, index: usize) -> Result<&'a SpectrumRecord, Failure> {
    s.records.get(index).ok_or_else(|| {
        Failure(HeptStatus::OutOfRange, format!("index {index} out of range 0..{}", s.records.len()))
    })
}

/// # Safety
/// As for [`hept_spectrum_len`].
#[no_mangle]
pub unsafe extern "C" fn hept_spectrum_level(
    s: *const HeptSpectrum,
    index: usize,
    out: *mut HeptLevel,
) -> HeptStatus {
    guard(|| {
        let r = record(handle(s, "spectrum")?, index)?;
        let level = HeptLevel {
            k: r.k.value() as i32,
            r_prime: r.r_prime,
            nu: r.nu.unwrap_or(0),
            r_min: r.r_values[0],
            r_max: r.r_values[r.r_values.len() - 1],
            multiplicity: r.multiplicity as u32,
            energy: r.energy_float,
        };
        write(out, level, "out")
    })
}

/// Exact energy of one record, e.g. `(-7/2 - 1·ρ - 1/2·ρ²) + (1/2)·√Δ2^1`.
///
/// # Safety
/// As for [`hept_spectrum_len`]; release the string with [`hept_string_free`].
#[no_mangle]
pub unsafe extern "C" fn hept_spectrum_energy_string(
    s: *const HeptSpectrum,
    index: usize,
    out: *mut *mut c_char,
) -> HeptStatus {
    guard(|| {
        let r = record(handle(s, "spectrum")?, index)?;
        if out.is_null() {
            return Err(null("out"));
        }
        write(out, owned_string(r.energy_exact.to_string())?, "out")
    })
}

/// # Safety
/// As for [`hept_spectrum_energy_string`].
#[no_mangle]
pub unsafe extern "C" fn hept_spectrum_to_json(s: *const HeptSpectrum, out: *mut *mut c_char) -> HeptStatus {
    guard(|| {
        let json = serde_json::to_string(&handle(s, "spectrum")?.records).map_err(Error::from)?;
        if out.is_null() {
            return Err(null("out"));
        }
        write(out, owned_string(json)?, "out")
    })
}

/// # Safety
/// `s` must be null or come from [`hept_spectrum_new`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hept_spectrum_free(s: *mut HeptSpectrum) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Runs one section (2..=7) of the check suite, or all of them for `section = 0`.
/// A failing check is not an error: inspect the report.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hept_verify_run(section: u8, out: *mut *mut HeptReport) -> HeptStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let sections = if section == 0 { Section::ALL.to_vec() } else { vec![Section::from_number(section)?] };
        let report = run(&sections);
        write(out, Box::into_raw(Box::new(HeptReport { report })), "out")
    })
}

/// # Safety
/// `r` must come from [`hept_verify_run`]; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hept_report_len(r: *const HeptReport, out: *mut usize) -> HeptStatus {
    guard(|| write(out, handle(r, "report")?.report.len(), "out"))
}

/// # Safety
/// As for [`hept_report_len`].
#[no_mangle]
pub unsafe extern "C" fn hept_report_passed(r: *const HeptReport, out: *mut bool) -> HeptStatus {
    guard(|| write(out, handle(r, "report")?.report.passed(), "out"))
}

/// # Safety
/// As for [`hept_report_len`].
#[no_mangle]
pub unsafe extern "C" fn hept_report_check(r: *const HeptReport, index: usize, out: *mut HeptCheck) -> HeptStatus {
    guard(|| {
        let checks = &handle(r, "report")?.report.checks;
        let c = checks.get(index).ok_or_else(|| {
            Failure(HeptStatus::OutOfRange, format!("index {index} out of range 0..{}", checks.len()))
        })?;
        write(out, HeptCheck { section: c.section, passed: c.passed }, "out")
    })
}

/// # Safety
/// As for [`hept_report_len`]; release the string with [`hept_string_free`].
#[no_mangle]
pub unsafe extern "C" fn hept_report_to_json(r: *const HeptReport, out: *mut *mut c_char) -> HeptStatus {
    guard(|| {
        let json = serde_json::to_string(&handle(r, "report")?.report).map_err(Error::from)?;
        if out.is_null() {
            return Err(null("out"));
        }
        write(out, owned_string(json)?, "out")
    })
}

/// # Safety
/// `r` must be null or come from [`hept_verify_run`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hept_report_free(r: *mut HeptReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Permutation of spectrum records induced by a group element given as
/// `{"eps": [[±1,±1,±1],[±1,±1,±1]], "l": 1..6}`: `perm[i] = j` when record `i`
/// is sent to record `j`. `perm` must hold at least `capacity` entries;
/// `written` receives the record count.
///
/// # Safety
/// `element` must be a NUL-terminated string; `perm` valid for `capacity` writes.
#[no_mangle]
pub unsafe extern "C" fn hept_galois_apply(
    element: *const c_char,
    perm: *mut usize,
    capacity: usize,
    written: *mut usize,
) -> HeptStatus {
    guard(|| {
        if element.is_null() {
            return Err(null("element"));
        }
        let text = CStr::from_ptr(element)
            .to_str()
            .map_err(|_| Failure(HeptStatus::Parse, "element is not UTF-8".into()))?;
        let spec: ElementSpec = serde_json::from_str(text).map_err(Error::from)?;
        let g = WreathElement::try_from(spec)?;
        let p = act_on_spectrum(&g, &full_spectrum()?);
        if perm.is_null() {
            return Err(null("perm"));
        }
        if capacity < p.len() {
            return Err(Failure(HeptStatus::OutOfRange, format!("capacity {capacity} below {}", p.len())));
        }
        std::slice::from_raw_parts_mut(perm, p.len()).copy_from_slice(&p);
        write(written, p.len(), "written")
    })
}
