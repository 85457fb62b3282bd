//! C ABI for the cohomology engine.
//!
//! All functions return an error code (`LIECOH_OK` on success) and hand
//! results back as NUL-terminated JSON strings allocated by this library;
//! release them with [`liecoh_string_free`].  Group handles are opaque and
//! released with [`liecoh_group_free`].  The matching header lives in
//! `include/liecoh.h`.

use std::ffi::{c_char, c_int, c_uint, CStr, CString};

use liecoh::liedata::{self, LieGroup};
use liecoh::{integral, modp, weyl, Error};

/// Success.
pub const LIECOH_OK: c_int = 0;
/// Malformed input (bad group name, bad flag combination, null pointer).
pub const LIECOH_ERR_INVALID: c_int = 1;
/// The requested group or prime is not supported.
pub const LIECOH_ERR_UNSUPPORTED: c_int = 2;
/// A mathematical self-check failed.
pub const LIECOH_ERR_INVARIANT: c_int = 3;

/// Opaque handle to a group of the catalogue.
#[allow(non_camel_case_types)]
pub struct liecoh_group {
    data: liedata::LieGroupData,
}

fn code_of(e: &Error) -> c_int {
    match e {
        Error::InvalidInput(_) => LIECOH_ERR_INVALID,
        Error::Unsupported(_) => LIECOH_ERR_UNSUPPORTED,
        Error::InvariantViolation { .. } => LIECOH_ERR_INVARIANT,
    }
}

/// Hand a Rust string to the caller as a freshly allocated C string.
fn to_c_string(s: String, out: *mut *mut c_char) -> c_int {
    if out.is_null() {
        return LIECOH_ERR_INVALID;
    }
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            LIECOH_OK
        }
        Err(_) => LIECOH_ERR_INVALID,
    }
}

fn emit_json<T: serde::Serialize>(value: &T, out: *mut *mut c_char) -> c_int {
    match serde_json::to_string(value) {
        Ok(s) => to_c_string(s, out),
        Err(_) => LIECOH_ERR_INVALID,
    }
}

/// Create a group handle from its name ("G2", "E8", "SU(4)", "Spin(9)", ...).
///
/// `assume_spin_log2` must be nonzero to accept the base-2 logarithm
/// reading of the Spin cup lengths; Spin groups are rejected otherwise.
///
/// # Safety
/// `name` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn liecoh_group_new(
    name: *const c_char,
    assume_spin_log2: c_int,
    out: *mut *mut liecoh_group,
) -> c_int {
    if name.is_null() || out.is_null() {
        return LIECOH_ERR_INVALID;
    }
    let Ok(name) = CStr::from_ptr(name).to_str() else {
        return LIECOH_ERR_INVALID;
    };
    let group: LieGroup = match name.parse() {
        Ok(g) => g,
        Err(e) => return code_of(&e),
    };
    let data = match liedata::group_data(group) {
        Ok(d) => d,
        Err(e) => return code_of(&e),
    };
    if data.spin_log2 && assume_spin_log2 == 0 {
        return LIECOH_ERR_INVALID;
    }
    *out = Box::into_raw(Box::new(liecoh_group { data }));
    LIECOH_OK
}

/// Release a group handle.  Accepts NULL.
///
/// # Safety
/// `g` must be a pointer returned by [`liecoh_group_new`] or NULL.
#[no_mangle]
pub unsafe extern "C" fn liecoh_group_free(g: *mut liecoh_group) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Rank of the group.
///
/// # Safety
/// `g` must be a valid handle.
#[no_mangle]
pub unsafe extern "C" fn liecoh_group_rank(g: *const liecoh_group) -> c_uint {
    if g.is_null() {
        return 0;
    }
    (*g).data.rank
}

/// Dimension of the group as a manifold.
///
/// # Safety
/// `g` must be a valid handle.
#[no_mangle]
pub unsafe extern "C" fn liecoh_group_dim(g: *const liecoh_group) -> c_uint {
    if g.is_null() {
        return 0;
    }
    (*g).data.dim
}

/// Degreewise integral cohomology groups as JSON.
///
/// # Safety
/// `g` must be a valid handle and `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn liecoh_table_json(
    g: *const liecoh_group,
    out_json: *mut *mut c_char,
) -> c_int {
    if g.is_null() {
        return LIECOH_ERR_INVALID;
    }
    match integral::assemble(&(*g).data) {
        Ok(table) => emit_json(&table, out_json),
        Err(e) => code_of(&e),
    }
}

/// Graded dimensions of the mod `p` cohomology as JSON.
/// `which`: 0 = the ring, 1 = Bockstein cohomology, 2 = Bockstein image.
///
/// # Safety
/// `g` must be a valid handle and `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn liecoh_dims_json(
    g: *const liecoh_group,
    prime: c_uint,
    which: c_int,
    out_json: *mut *mut c_char,
) -> c_int {
    if g.is_null() {
        return LIECOH_ERR_INVALID;
    }
    let model = match modp::build_model((*g).data.group, prime) {
        Ok(m) => m,
        Err(e) => return code_of(&e),
    };
    let dims = match which {
        0 => Ok(model.dims()),
        1 => model.bockstein_cohomology_dims(),
        2 => model.im_delta_dims(),
        _ => return LIECOH_ERR_INVALID,
    };
    match dims {
        Ok(d) => emit_json(&d.to_pairs(), out_json),
        Err(e) => code_of(&e),
    }
}

/// A ring presentation as JSON.
/// `kind`: 0 = the mod `prime` ring, 1 = the integral image of the
/// flag-variety map (prime ignored), 2 = the `prime`-torsion ideal.
///
/// # Safety
/// `g` must be a valid handle and `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn liecoh_presentation_json(
    g: *const liecoh_group,
    prime: c_uint,
    kind: c_int,
    out_json: *mut *mut c_char,
) -> c_int {
    if g.is_null() {
        return LIECOH_ERR_INVALID;
    }
    let data = &(*g).data;
    let pres = match kind {
        0 => modp::build_model(data.group, prime).and_then(|m| m.ring_presentation()),
        1 => integral::chow_ring(data),
        2 => integral::torsion_presentation(data, prime),
        _ => return LIECOH_ERR_INVALID,
    };
    match pres {
        Ok(p) => emit_json(&p, out_json),
        Err(e) => code_of(&e),
    }
}

/// Weyl group report (order, length histogram, flag polynomial) as JSON.
///
/// # Safety
/// `cartan_type` must be a valid NUL-terminated string and `out_json` a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn liecoh_weyl_json(
    cartan_type: *const c_char,
    cap: u64,
    out_json: *mut *mut c_char,
) -> c_int {
    if cartan_type.is_null() {
        return LIECOH_ERR_INVALID;
    }
    let Ok(name) = CStr::from_ptr(cartan_type).to_str() else {
        return LIECOH_ERR_INVALID;
    };
    let ty: weyl::CartanType = match name.parse() {
        Ok(t) => t,
        Err(e) => return code_of(&e),
    };
    match weyl::enumerate(ty, cap) {
        Ok(rep) => emit_json(&rep, out_json),
        Err(e) => code_of(&e),
    }
}

/// Release a string returned by this library.  Accepts NULL.
///
/// # Safety
/// `s` must be a pointer returned by one of the `*_json` functions or NULL.
#[no_mangle]
pub unsafe extern "C" fn liecoh_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CString;
    use std::ptr;

    unsafe fn take_string(p: *mut c_char) -> String {
        let s = CStr::from_ptr(p).to_str().unwrap().to_string();
        liecoh_string_free(p);
        s
    }

    #[test]
    fn group_lifecycle_and_table() {
        unsafe {
            let name = CString::new("G2").unwrap();
            let mut g: *mut liecoh_group = ptr::null_mut();
            assert_eq!(liecoh_group_new(name.as_ptr(), 0, &mut g), LIECOH_OK);
            assert_eq!(liecoh_group_rank(g), 2);
            assert_eq!(liecoh_group_dim(g), 14);

            let mut out: *mut c_char = ptr::null_mut();
            assert_eq!(liecoh_table_json(g, &mut out), LIECOH_OK);
            let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
            assert_eq!(v["entries"].as_array().unwrap().len(), 15);

            liecoh_group_free(g);
        }
    }

    #[test]
    fn spin_requires_flag() {
        unsafe {
            let name = CString::new("Spin(9)").unwrap();
            let mut g: *mut liecoh_group = ptr::null_mut();
            assert_eq!(
                liecoh_group_new(name.as_ptr(), 0, &mut g),
                LIECOH_ERR_INVALID
            );
            assert_eq!(liecoh_group_new(name.as_ptr(), 1, &mut g), LIECOH_OK);
            liecoh_group_free(g);
        }
    }

    #[test]
    fn dims_and_presentations() {
        unsafe {
            let name = CString::new("F4").unwrap();
            let mut g: *mut liecoh_group = ptr::null_mut();
            assert_eq!(liecoh_group_new(name.as_ptr(), 0, &mut g), LIECOH_OK);

            let mut out: *mut c_char = ptr::null_mut();
            assert_eq!(liecoh_dims_json(g, 2, 2, &mut out), LIECOH_OK);
            let s = take_string(out);
            assert!(s.contains("[6,1]"), "{s}");

            assert_eq!(liecoh_presentation_json(g, 2, 2, &mut out), LIECOH_OK);
            let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
            assert_eq!(v["coefficient"], 2);

            assert_eq!(liecoh_presentation_json(g, 0, 1, &mut out), LIECOH_OK);
            let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
            assert_eq!(v["relations"][0], "2*x6");

            // Unknown selector and unsupported prime are reported as codes.
            assert_eq!(liecoh_presentation_json(g, 2, 9, &mut out), LIECOH_ERR_INVALID);
            assert_eq!(liecoh_dims_json(g, 6, 0, &mut out), LIECOH_ERR_INVALID);

            liecoh_group_free(g);
        }
    }

    #[test]
    fn weyl_and_bad_input() {
        unsafe {
            let ty = CString::new("F4").unwrap();
            let mut out: *mut c_char = ptr::null_mut();
            assert_eq!(liecoh_weyl_json(ty.as_ptr(), 1_000_000, &mut out), LIECOH_OK);
            let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
            assert_eq!(v["order"], 1152);

            let bad = CString::new("Q1").unwrap();
            assert_eq!(
                liecoh_weyl_json(bad.as_ptr(), 1_000_000, &mut out),
                LIECOH_ERR_INVALID
            );
            assert_eq!(liecoh_group_new(ptr::null(), 0, ptr::null_mut()), LIECOH_ERR_INVALID);
        }
    }
}
