//! C ABI for the mahonian library: opaque handles, status codes, and
//! malloc'd strings the caller releases with [`mh_string_free`].
//!
//! Every function is panic-safe (panics become `MH_STATUS_INTERNAL`) and
//! null-safe. The header is generated by cbindgen into `include/mahonian.h`.

use mahonian::digraphs::LaguerreDigraph;
use mahonian::permstats::{distribution, full_stats, LaguerreWord, QWeight, WordFilter};
use mahonian::polyring::Poly;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MhStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    BoundExceeded = 5,
    UnknownName = 6,
    /// The verification task ran to completion and found a counterexample.
    VerifyFailed = 7,
    Internal = 8,
}

/// Opaque exact multivariate polynomial.
pub struct MhPoly(Poly);
/// Opaque partial permutation in word form.
pub struct MhWord(LaguerreWord);
/// Opaque Laguerre digraph.
pub struct MhDigraph(LaguerreDigraph);

fn status_of(err: &mahonian::Error) -> MhStatus {
    match err {
        mahonian::Error::Parse(_) => MhStatus::ParseError,
        mahonian::Error::InvalidArgument(_) => MhStatus::InvalidArgument,
        mahonian::Error::BoundExceeded(_) => MhStatus::BoundExceeded,
        mahonian::Error::Unknown(_) => MhStatus::UnknownName,
    }
}

fn guarded(body: impl FnOnce() -> MhStatus) -> MhStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => MhStatus::Internal,
    }
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, MhStatus> {
    if ptr.is_null() {
        return Err(MhStatus::NullPointer);
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| MhStatus::InvalidUtf8)
}

fn give_string(out: *mut *mut c_char, s: String) -> MhStatus {
    if out.is_null() {
        return MhStatus::NullPointer;
    }
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            MhStatus::Ok
        }
        Err(_) => MhStatus::Internal,
    }
}

/// Frees a string returned by this library. Passing null is a no-op.
///
/// # Safety
/// `s` must have been returned by a `mh_*` function and not freed before.
#[no_mangle]
pub unsafe extern "C" fn mh_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version as a malloc'd string.
#[no_mangle]
pub extern "C" fn mh_version(out: *mut *mut c_char) -> MhStatus {
    give_string(out, env!("CARGO_PKG_VERSION").to_string())
}

/// Parses the space-separated word form (`*` for the hole symbol).
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mh_word_parse(text: *const c_char, out: *mut *mut MhWord) -> MhStatus {
    guarded(|| {
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        if out.is_null() {
            return MhStatus::NullPointer;
        }
        match LaguerreWord::parse(text) {
            Ok(w) => {
                *out = Box::into_raw(Box::new(MhWord(w)));
                MhStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Builds a word from values, 0 encoding the hole.
///
/// # Safety
/// `vals` must point to `len` readable i64 values; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn mh_word_from_values(
    vals: *const i64,
    len: usize,
    out: *mut *mut MhWord,
) -> MhStatus {
    guarded(|| {
        if vals.is_null() || out.is_null() {
            return MhStatus::NullPointer;
        }
        let slice = std::slice::from_raw_parts(vals, len);
        match LaguerreWord::from_values(slice) {
            Ok(w) => {
                *out = Box::into_raw(Box::new(MhWord(w)));
                MhStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// # Safety
/// `w` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn mh_word_free(w: *mut MhWord) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

/// Renders the word in its text form.
///
/// # Safety
/// `w` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mh_word_render(w: *const MhWord, out: *mut *mut c_char) -> MhStatus {
    guarded(|| match w.as_ref() {
        Some(w) => give_string(out, w.0.to_string()),
        None => MhStatus::NullPointer,
    })
}

/// Every word statistic as a JSON object.
///
/// # Safety
/// `w` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mh_word_stats_json(w: *const MhWord, out: *mut *mut c_char) -> MhStatus {
    guarded(|| match w.as_ref() {
        Some(w) => {
            let record = full_stats(&w.0);
            let mut value = serde_json::to_value(&record).expect("stat record serializes");
            value["tilde_inv_filled"] = record.tilde_inv_filled().into();
            value["rlmin"] = record.rlmin().into();
            give_string(out, value.to_string())
        }
        None => MhStatus::NullPointer,
    })
}

/// The Laguerre digraph of a word.
///
/// # Safety
/// `w` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mh_word_to_digraph(
    w: *const MhWord,
    out: *mut *mut MhDigraph,
) -> MhStatus {
    guarded(|| match w.as_ref() {
        Some(w) => {
            if out.is_null() {
                return MhStatus::NullPointer;
            }
            *out = Box::into_raw(Box::new(MhDigraph(LaguerreDigraph::from_word(&w.0))));
            MhStatus::Ok
        }
        None => MhStatus::NullPointer,
    })
}

/// Parses the digraph JSON form {"n":8,"succ":{"1":3,...}}.
///
/// # Safety
/// `json` must be a valid NUL-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mh_digraph_parse_json(
    json: *const c_char,
    out: *mut *mut MhDigraph,
) -> MhStatus {
    guarded(|| {
        let json = match read_str(json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        if out.is_null() {
            return MhStatus::NullPointer;
        }
        match serde_json::from_str::<LaguerreDigraph>(json) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(MhDigraph(g)));
                MhStatus::Ok
            }
            Err(_) => MhStatus::ParseError,
        }
    })
}

/// # Safety
/// `g` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn mh_digraph_free(g: *mut MhDigraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex classification and aggregate statistics as JSON.
///
/// # Safety
/// `g` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mh_digraph_stats_json(
    g: *const MhDigraph,
    out: *mut *mut c_char,
) -> MhStatus {
    guarded(|| match g.as_ref() {
        Some(g) => {
            let (classes, stats) = g.0.classify();
            let classes: Vec<&str> = classes.iter().map(|c| c.abbrev()).collect();
            let value = serde_json::json!({
                "n": g.0.n(),
                "stats": stats,
                "classes": classes,
            });
            give_string(out, value.to_string())
        }
        None => MhStatus::NullPointer,
    })
}

/// DOT rendering with class-labeled nodes.
///
/// # Safety
/// `g` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mh_digraph_to_dot(g: *const MhDigraph, out: *mut *mut c_char) -> MhStatus {
    guarded(|| match g.as_ref() {
        Some(g) => give_string(out, g.0.to_dot()),
        None => MhStatus::NullPointer,
    })
}

/// Σ b^rlmin q^stat over S_n^k; weight is one of
/// "maj", "inv", "tilde-inv-filled", "rlmin".
///
/// # Safety
/// `weight` must be a valid NUL-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mh_distribution(
    n: usize,
    k: usize,
    weight: *const c_char,
    out: *mut *mut MhPoly,
) -> MhStatus {
    guarded(|| {
        let weight = match read_str(weight) {
            Ok(t) => t,
            Err(s) => return s,
        };
        if out.is_null() {
            return MhStatus::NullPointer;
        }
        let weight = match QWeight::parse(weight) {
            Ok(w) => w,
            Err(e) => return status_of(&e),
        };
        match distribution(n, k, weight, &WordFilter::All) {
            Ok(p) => {
                *out = Box::into_raw(Box::new(MhPoly(p)));
                MhStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Laguerre digraph enumerator over LD_{n,k}.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mh_ld_enumerator(n: usize, k: usize, out: *mut *mut MhPoly) -> MhStatus {
    guarded(|| {
        if out.is_null() {
            return MhStatus::NullPointer;
        }
        match mahonian::digraphs::ld_enumerator(n, k) {
            Ok(p) => {
                *out = Box::into_raw(Box::new(MhPoly(p)));
                MhStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// μ_{n,k} of a named preset ("euler", "beta_q", "digraph", "cyc",
/// "alternating", "zhu").
///
/// # Safety
/// `preset` must be a valid NUL-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mh_mu_entry(
    preset: *const c_char,
    n: usize,
    k: usize,
    out: *mut *mut MhPoly,
) -> MhStatus {
    guarded(|| {
        let name = match read_str(preset) {
            Ok(t) => t,
            Err(s) => return s,
        };
        if out.is_null() {
            return MhStatus::NullPointer;
        }
        match mahonian::jacobi_rogers::preset(name) {
            Ok(params) => {
                let table = mahonian::jacobi_rogers::mu_table(&params, n);
                *out = Box::into_raw(Box::new(MhPoly(table.entry(n, k).clone())));
                MhStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// # Safety
/// `p` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn mh_poly_free(p: *mut MhPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Exact equality of two polynomials; null handles compare unequal.
///
/// # Safety
/// `a` and `b` must be live handles or null.
#[no_mangle]
pub unsafe extern "C" fn mh_poly_eq(a: *const MhPoly, b: *const MhPoly) -> bool {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => a.0 == b.0,
        _ => false,
    }
}

unsafe fn poly_binop(
    a: *const MhPoly,
    b: *const MhPoly,
    out: *mut *mut MhPoly,
    op: impl Fn(&Poly, &Poly) -> Poly,
) -> MhStatus {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => {
            if out.is_null() {
                return MhStatus::NullPointer;
            }
            *out = Box::into_raw(Box::new(MhPoly(op(&a.0, &b.0))));
            MhStatus::Ok
        }
        _ => MhStatus::NullPointer,
    }
}

/// # Safety
/// `a` and `b` must be live handles; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mh_poly_add(
    a: *const MhPoly,
    b: *const MhPoly,
    out: *mut *mut MhPoly,
) -> MhStatus {
    guarded(|| poly_binop(a, b, out, |x, y| x.add(y)))
}

/// # Safety
/// `a` and `b` must be live handles; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mh_poly_mul(
    a: *const MhPoly,
    b: *const MhPoly,
    out: *mut *mut MhPoly,
) -> MhStatus {
    guarded(|| poly_binop(a, b, out, |x, y| x.mul(y)))
}

/// Canonical text rendering, e.g. "b^2+2bq".
///
/// # Safety
/// `p` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mh_poly_render_text(p: *const MhPoly, out: *mut *mut c_char) -> MhStatus {
    guarded(|| match p.as_ref() {
        Some(p) => give_string(out, p.0.render_text()),
        None => MhStatus::NullPointer,
    })
}

/// JSON rendering with decimal-string coefficients.
///
/// # Safety
/// `p` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mh_poly_render_json(p: *const MhPoly, out: *mut *mut c_char) -> MhStatus {
    guarded(|| match p.as_ref() {
        Some(p) => give_string(out, serde_json::to_string(&p.0).expect("poly serializes")),
        None => MhStatus::NullPointer,
    })
}

/// Runs one verification task (`n_max` of 0 means the task default); the
/// report lands in `out_report_json` whenever the task ran.
///
/// # Safety
/// `id` must be a valid NUL-terminated string; `out_report_json` may be null
/// when the report is not wanted.
#[no_mangle]
pub unsafe extern "C" fn mh_verify_run(
    id: *const c_char,
    n_max: usize,
    out_report_json: *mut *mut c_char,
) -> MhStatus {
    guarded(|| {
        let id = match read_str(id) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let bound = if n_max == 0 { None } else { Some(n_max) };
        match mahonian::verify::run_task(id, bound) {
            Ok(report) => {
                let passed = report.passed();
                if !out_report_json.is_null() {
                    let json = serde_json::to_string(&report).expect("report serializes");
                    let status = give_string(out_report_json, json);
                    if status != MhStatus::Ok {
                        return status;
                    }
                }
                if passed {
                    MhStatus::Ok
                } else {
                    MhStatus::VerifyFailed
                }
            }
            Err(e) => status_of(&e),
        }
    })
}
