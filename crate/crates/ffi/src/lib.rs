//! C ABI over `singmap`.
//!
//! Conventions:
//! * every fallible call returns a [`SingmapStatus`]; on failure the message
//!   is available from [`singmap_last_error`] on the same thread;
//! * strings handed out by the library are owned by the caller and released
//!   with [`singmap_string_free`];
//! * a [`SingmapClassification`] is released with
//!   [`singmap_classification_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use singmap::exactmath::{BivariatePoly, MultiPoly};
use singmap::linkdata::{hj_expand, parse_lens_shorthand, parse_seifert_shorthand, LinkDescriptor};
use singmap::pipeline::{classify, map, ClassificationOutput, MapOptions};
use singmap::relations::verify_relation;
use singmap::Error;

/// Result codes. Values 1 to 5 match the exit codes of the `singmap` tool.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SingmapStatus {
    Ok = 0,
    Failure = 1,
    ParseError = 2,
    NotSingularityLink = 3,
    InfiniteFundamentalGroup = 4,
    UnsupportedFamily = 5,
    NullArgument = 6,
    BufferTooSmall = 7,
    Panic = 8,
}

/// How the `link` string passed to [`singmap_classify`] and [`singmap_map`]
/// is written.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SingmapInputKind {
    /// `{"seifert":{...}}`, `{"lens":[p,q]}` or `{"graph":{...}}`
    Json = 0,
    /// `b;(p1,q1)(p2,q2)...`
    SeifertShorthand = 1,
    /// `p,q`
    LensShorthand = 2,
}

/// Opaque classification result.
pub struct SingmapClassification {
    inner: ClassificationOutput,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn clear_last_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> SingmapStatus {
    match e.exit_code() {
        2 => SingmapStatus::ParseError,
        3 => SingmapStatus::NotSingularityLink,
        4 => SingmapStatus::InfiniteFundamentalGroup,
        5 => SingmapStatus::UnsupportedFamily,
        _ => SingmapStatus::Failure,
    }
}

/// Runs `f`, recording any error or panic as the thread's last error.
fn guarded(f: impl FnOnce() -> Result<(), (SingmapStatus, String)>) -> SingmapStatus {
    clear_last_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SingmapStatus::Ok,
        Ok(Err((status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_last_error(format!("internal panic: {msg}"));
            SingmapStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (SingmapStatus, String) {
    (status_of(&e), e.to_string())
}

fn null_arg(name: &str) -> (SingmapStatus, String) {
    (SingmapStatus::NullArgument, format!("{name} is null"))
}

/// # Safety
/// `s` is null or a valid nul-terminated string.
unsafe fn read_str<'a>(s: *const c_char, name: &str) -> Result<&'a str, (SingmapStatus, String)> {
    if s.is_null() {
        return Err(null_arg(name));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| (SingmapStatus::ParseError, format!("{name} is not valid UTF-8")))
}

fn descriptor(link: &str, kind: SingmapInputKind) -> Result<LinkDescriptor, (SingmapStatus, String)> {
    match kind {
        SingmapInputKind::Json => LinkDescriptor::from_json(link),
        SingmapInputKind::SeifertShorthand => parse_seifert_shorthand(link),
        SingmapInputKind::LensShorthand => parse_lens_shorthand(link),
    }
    .map_err(lib_err)
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

/// Message for the most recent failure on this thread, or null. The pointer
/// stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn singmap_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. Null is accepted.
///
/// # Safety
/// `s` is null or was returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn singmap_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

unsafe fn store(out: *mut *mut SingmapClassification, inner: ClassificationOutput) -> SingmapStatus {
    let status = if inner.is_image_of_finite_map {
        SingmapStatus::Ok
    } else {
        SingmapStatus::InfiniteFundamentalGroup
    };
    *out = Box::into_raw(Box::new(SingmapClassification { inner }));
    status
}

/// Classifies a link. On `Ok`, and on `InfiniteFundamentalGroup` (where the
/// report is still produced), `*out` receives a handle; otherwise it is set
/// to null.
///
/// # Safety
/// `link` is a valid nul-terminated string and `out` is a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn singmap_classify(
    link: *const c_char,
    kind: SingmapInputKind,
    out: *mut *mut SingmapClassification,
) -> SingmapStatus {
    run_pipeline(link, kind, out, classify)
}

/// Like [`singmap_classify`], and also builds the invariant map and its
/// relations. `max_degree = 0` selects the default relation search bound.
///
/// # Safety
/// `link` is a valid nul-terminated string and `out` is a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn singmap_map(
    link: *const c_char,
    kind: SingmapInputKind,
    max_degree: u32,
    out: *mut *mut SingmapClassification,
) -> SingmapStatus {
    let opts = MapOptions {
        max_degree: (max_degree > 0).then_some(max_degree),
        ..MapOptions::default()
    };
    run_pipeline(link, kind, out, move |d| map(d, &opts))
}

unsafe fn run_pipeline(
    link: *const c_char,
    kind: SingmapInputKind,
    out: *mut *mut SingmapClassification,
    f: impl FnOnce(&LinkDescriptor) -> singmap::Result<ClassificationOutput>,
) -> SingmapStatus {
    if out.is_null() {
        set_last_error("out is null");
        return SingmapStatus::NullArgument;
    }
    *out = ptr::null_mut();
    let mut result = None;
    let status = guarded(|| {
        let d = descriptor(read_str(link, "link")?, kind)?;
        result = Some(f(&d).map_err(lib_err)?);
        Ok(())
    });
    match result {
        Some(r) if status == SingmapStatus::Ok => store(out, r),
        _ => status,
    }
}

/// # Safety
/// `handle` is null or was returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn singmap_classification_free(handle: *mut SingmapClassification) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

unsafe fn with<T>(handle: *const SingmapClassification, default: T, f: impl FnOnce(&ClassificationOutput) -> T) -> T {
    handle.as_ref().map_or(default, |h| f(&h.inner))
}

/// 1 when the link bounds a quotient singularity, 0 otherwise or for null.
///
/// # Safety
/// `handle` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn singmap_classification_is_quotient(handle: *const SingmapClassification) -> i32 {
    with(handle, 0, |c| i32::from(c.is_image_of_finite_map))
}

/// Order of the finite group, or 0 when there is none.
///
/// # Safety
/// `handle` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn singmap_classification_group_order(handle: *const SingmapClassification) -> u64 {
    with(handle, 0, |c| c.group.as_ref().map_or(0, |g| g.order()))
}

/// Multiplicity of the singularity, or -1 when not computed.
///
/// # Safety
/// `handle` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn singmap_classification_multiplicity(handle: *const SingmapClassification) -> i64 {
    with(handle, -1, |c| c.singularity.as_ref().map_or(-1, |s| s.multiplicity))
}

/// Embedding dimension of the singularity, or -1 when not computed.
///
/// # Safety
/// `handle` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn singmap_classification_embedding_dimension(handle: *const SingmapClassification) -> i64 {
    with(handle, -1, |c| c.singularity.as_ref().map_or(-1, |s| s.embedding_dimension))
}

/// Number of map components, or 0 when no map was built.
///
/// # Safety
/// `handle` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn singmap_classification_generator_count(handle: *const SingmapClassification) -> usize {
    with(handle, 0, |c| c.map.as_ref().map_or(0, |m| m.generators.len()))
}

/// Number of relations found, or 0 when no map was built.
///
/// # Safety
/// `handle` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn singmap_classification_relation_count(handle: *const SingmapClassification) -> usize {
    with(handle, 0, |c| c.relations.as_ref().map_or(0, |r| r.relations.len()))
}

/// The `index`-th map component as a polynomial in `u, v`, or null.
///
/// # Safety
/// `handle` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn singmap_classification_generator(
    handle: *const SingmapClassification,
    index: usize,
) -> *mut c_char {
    with(handle, ptr::null_mut(), |c| {
        c.map
            .as_ref()
            .and_then(|m| m.generators.get(index))
            .map_or(ptr::null_mut(), |g| into_c_string(g.to_string()))
    })
}

/// The `index`-th relation in `x1, x2, ...`, or null.
///
/// # Safety
/// `handle` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn singmap_classification_relation(
    handle: *const SingmapClassification,
    index: usize,
) -> *mut c_char {
    with(handle, ptr::null_mut(), |c| {
        c.relations
            .as_ref()
            .and_then(|r| r.relations.get(index))
            .map_or(ptr::null_mut(), |r| into_c_string(r.to_string()))
    })
}

/// The full report as JSON, identical to the command-line output.
///
/// # Safety
/// `handle` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn singmap_classification_to_json(handle: *const SingmapClassification) -> *mut c_char {
    with(handle, ptr::null_mut(), |c| into_c_string(c.to_json()))
}

/// The human-readable report.
///
/// # Safety
/// `handle` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn singmap_classification_to_text(handle: *const SingmapClassification) -> *mut c_char {
    with(handle, ptr::null_mut(), |c| into_c_string(c.to_text()))
}

/// Hirzebruch–Jung continued fraction of `p/q`. Writes up to `capacity`
/// entries to `out` and the full length to `*len`; returns
/// `BufferTooSmall` when `capacity < *len`. `out` may be null when
/// `capacity` is 0, to query the length.
///
/// # Safety
/// `out` points to `capacity` writable `int64_t` and `len` is valid.
#[no_mangle]
pub unsafe extern "C" fn singmap_hj_expand(
    p: i64,
    q: i64,
    out: *mut i64,
    capacity: usize,
    len: *mut usize,
) -> SingmapStatus {
    guarded(|| {
        if len.is_null() {
            return Err(null_arg("len"));
        }
        let bs = hj_expand(p, q).map_err(lib_err)?;
        *len = bs.len();
        if capacity < bs.len() {
            return Err((
                SingmapStatus::BufferTooSmall,
                format!("need {} entries, have {capacity}", bs.len()),
            ));
        }
        if out.is_null() {
            return Err(null_arg("out"));
        }
        ptr::copy_nonoverlapping(bs.as_ptr(), out, bs.len());
        Ok(())
    })
}

/// Checks exactly whether `relation` (in `x1..xn`) vanishes on the `n`
/// homogeneous polynomials `generators` (in `u, v`). Sets `*holds` to 1 or 0.
///
/// # Safety
/// `relation` and each of the `n` entries of `generators` are valid
/// nul-terminated strings; `holds` is valid.
#[no_mangle]
pub unsafe extern "C" fn singmap_verify_relation(
    relation: *const c_char,
    generators: *const *const c_char,
    n: usize,
    holds: *mut i32,
) -> SingmapStatus {
    guarded(|| {
        if holds.is_null() {
            return Err(null_arg("holds"));
        }
        if generators.is_null() && n > 0 {
            return Err(null_arg("generators"));
        }
        let mut gens = Vec::with_capacity(n);
        for k in 0..n {
            let s = read_str(*generators.add(k), "generator")?;
            gens.push(s.parse::<BivariatePoly>().map_err(lib_err)?);
        }
        let weights = gens
            .iter()
            .map(|g| {
                g.homogeneous_degree()
                    .ok_or_else(|| (SingmapStatus::ParseError, format!("{g} is not homogeneous")))
            })
            .collect::<Result<Vec<u32>, _>>()?;
        let r = MultiPoly::parse(read_str(relation, "relation")?, weights).map_err(lib_err)?;
        *holds = i32::from(verify_relation(&r, &gens));
        Ok(())
    })
}
