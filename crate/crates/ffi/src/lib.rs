//! C ABI over `tilegb`.
//!
//! Objects cross the boundary as opaque handles that the caller releases with
//! the matching `*_free` function. Every call returns a `TgStatus`; on
//! failure `tg_last_error` describes the problem. Strings returned by the
//! library are freed with `tg_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use tilegb::bones::{bone_system_with, decide_nbone, triangle};
use tilegb::groebner::{ideal_member, reduce};
use tilegb::homology::nbone_homology;
use tilegb::tiling::{certificate_nbone, verify_certificate};
use tilegb::{CoeffConvention, Error, GroebnerBasis, Polynomial};

/// Result code of every exported function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    ArityMismatch = 5,
    Unverified = 6,
    Internal = 7,
    Panic = 8,
}

/// Coefficient representative used by reduction.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TgConvention {
    /// Remainders in `[0, |d|)`.
    NonNeg = 0,
    /// Remainders of least absolute value, ties towards the positive one.
    MinAbs = 1,
}

impl From<TgConvention> for CoeffConvention {
    fn from(c: TgConvention) -> Self {
        match c {
            TgConvention::NonNeg => CoeffConvention::NonNeg,
            TgConvention::MinAbs => CoeffConvention::MinAbs,
        }
    }
}

/// Opaque polynomial in `x, y` with integer coefficients.
pub struct TgPolynomial(Polynomial);

/// Opaque strong Groebner basis.
pub struct TgBasis(GroebnerBasis);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> TgStatus {
    match e {
        Error::Parse { .. } | Error::Syntax { .. } => TgStatus::Parse,
        Error::ArityMismatch { .. } => TgStatus::ArityMismatch,
        Error::UnverifiedBasis => TgStatus::Unverified,
        Error::Internal(_) => TgStatus::Internal,
        _ => TgStatus::InvalidArgument,
    }
}

struct Fail(TgStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> TgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => TgStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside tilegb".into());
            TgStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref()
        .ok_or_else(|| Fail(TgStatus::NullPointer, format!("{what} is null")))
}

unsafe fn store<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(TgStatus::NullPointer, "output pointer is null".into()));
    }
    out.write(value);
    Ok(())
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message for the last failed call on this thread. Valid until the next
/// failing call; never null.
#[no_mangle]
pub extern "C" fn tg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn tg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses text such as `"1 + x + 2*x*y^3"`.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tg_poly_parse(
    text: *const c_char,
    out: *mut *mut TgPolynomial,
) -> TgStatus {
    guard(|| {
        if text.is_null() {
            return Err(Fail(TgStatus::NullPointer, "text is null".into()));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| Fail(TgStatus::InvalidUtf8, e.to_string()))?;
        let p = tilegb::polyring::parse_poly(s)?;
        store(out, Box::into_raw(Box::new(TgPolynomial(p))))
    })
}

/// Newton polynomial of the triangle with side `m`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tg_triangle(m: u32, out: *mut *mut TgPolynomial) -> TgStatus {
    guard(|| store(out, Box::into_raw(Box::new(TgPolynomial(triangle(m))))))
}

/// Writes a newly allocated string; release it with `tg_string_free`.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tg_poly_format(p: *const TgPolynomial, out: *mut *mut c_char) -> TgStatus {
    guard(|| {
        let p = deref(p, "polynomial")?;
        store(out, c_string(tilegb::polyring::format_poly(&p.0)))
    })
}

/// # Safety
/// `p` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tg_poly_free(p: *mut TgPolynomial) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// The explicit, verified four-element basis for n-bones.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tg_nbone_basis(
    n: u32,
    conv: TgConvention,
    out: *mut *mut TgBasis,
) -> TgStatus {
    guard(|| {
        let b = bone_system_with(n, conv.into())?.into_gbi();
        store(out, Box::into_raw(Box::new(TgBasis(b))))
    })
}

/// Basis in its text form; release with `tg_string_free`.
///
/// # Safety
/// `b` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tg_basis_to_text(b: *const TgBasis, out: *mut *mut c_char) -> TgStatus {
    guard(|| {
        let b = deref(b, "basis")?;
        store(out, c_string(b.0.to_text()))
    })
}

/// # Safety
/// `b` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tg_basis_free(b: *mut TgBasis) {
    if !b.is_null() {
        drop(Box::from_raw(b));
    }
}

/// Runs the strong-basis check.
///
/// # Safety
/// `b` must be a live handle and `pass` writable.
#[no_mangle]
pub unsafe extern "C" fn tg_basis_verify(b: *mut TgBasis, pass: *mut bool) -> TgStatus {
    guard(|| {
        let b = b
            .as_mut()
            .ok_or_else(|| Fail(TgStatus::NullPointer, "basis is null".into()))?;
        store(pass, b.0.verify().is_pass())
    })
}

/// Remainder of `p` on strong reduction by `b`.
///
/// # Safety
/// `p`, `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tg_reduce(
    p: *const TgPolynomial,
    b: *const TgBasis,
    out: *mut *mut TgPolynomial,
) -> TgStatus {
    guard(|| {
        let (p, b) = (deref(p, "polynomial")?, deref(b, "basis")?);
        let r = reduce(&p.0, &b.0)?.remainder;
        store(out, Box::into_raw(Box::new(TgPolynomial(r))))
    })
}

/// Ideal membership; the basis must be verified.
///
/// # Safety
/// `p`, `b` must be live handles and `member` writable.
#[no_mangle]
pub unsafe extern "C" fn tg_ideal_member(
    p: *const TgPolynomial,
    b: *const TgBasis,
    member: *mut bool,
) -> TgStatus {
    guard(|| {
        let (p, b) = (deref(p, "polynomial")?, deref(b, "basis")?);
        store(member, ideal_member(&p.0, &b.0)?.is_some())
    })
}

/// Whether the side-`m` triangle has a signed tiling by n-bones.
///
/// # Safety
/// `yes` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tg_decide_nbone(m: u64, n: u32, yes: *mut bool) -> TgStatus {
    guard(|| store(yes, decide_nbone(m, n)?))
}

/// Builds and checks a signed tiling of the side-`m` triangle by n-bones and
/// reports its number of placements.
///
/// # Safety
/// `placements` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tg_certificate_nbone(m: u32, n: u32, placements: *mut usize) -> TgStatus {
    guard(|| {
        let c = certificate_nbone(m, n)?;
        if !verify_certificate(&c) {
            return Err(Fail(
                TgStatus::Internal,
                "certificate does not verify".into(),
            ));
        }
        store(placements, c.placements.len())
    })
}

/// Tile homology group of n-bones as text such as `"Z^2 + Z/3"`; release
/// with `tg_string_free`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tg_nbone_homology(n: u32, out: *mut *mut c_char) -> TgStatus {
    guard(|| store(out, c_string(nbone_homology(n)?.to_string())))
}
