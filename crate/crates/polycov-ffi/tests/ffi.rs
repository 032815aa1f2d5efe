//! Drive the C ABI the way a foreign binding would: everything goes through
//! the extern "C" surface, handles and strings are freed explicitly.

use polycov_ffi::*;
use std::ffi::{CStr, CString};
use std::ptr;

unsafe fn take_string(p: *mut libc::c_char) -> String {
    assert!(!p.is_null());
    let s = CStr::from_ptr(p).to_str().unwrap().to_string();
    polycov_string_free(p);
    s
}

fn last_error() -> String {
    let p = polycov_last_error_message();
    if p.is_null() {
        String::new()
    } else {
        unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
    }
}

#[test]
fn example_through_the_c_abi() {
    unsafe {
        let expr = CString::new("pyramid(toroid44(3))").unwrap();
        let mut poly: *mut PolycovPolytope = ptr::null_mut();
        assert_eq!(polycov_polytope_make(expr.as_ptr(), &mut poly), POLYCOV_OK);

        let mut passed = 0;
        assert_eq!(
            polycov_polytope_validate(poly, &mut passed, ptr::null_mut()),
            POLYCOV_OK
        );
        assert_eq!(passed, 1);

        let mut flags = 0u64;
        assert_eq!(polycov_polytope_flag_count(poly, &mut flags), POLYCOV_OK);
        assert_eq!(flags, 360);

        let mut mon: *mut PolycovSggi = ptr::null_mut();
        assert_eq!(polycov_monodromy(poly, &mut mon), POLYCOV_OK);

        let mut order: *mut libc::c_char = ptr::null_mut();
        assert_eq!(polycov_sggi_order_string(mon, &mut order), POLYCOV_OK);
        assert_eq!(take_string(order), "2^12 * 3^11 * 5");

        let mut schlafli: *mut libc::c_char = ptr::null_mut();
        assert_eq!(polycov_sggi_schlafli_string(mon, &mut schlafli), POLYCOV_OK);
        assert_eq!(take_string(schlafli), "{12,12,12}");

        let mut is_c = -1;
        assert_eq!(
            polycov_sggi_is_string_c_group(mon, 10_000_000, &mut is_c),
            POLYCOV_OK
        );
        assert_eq!(is_c, 0);

        let mut report: *mut libc::c_char = ptr::null_mut();
        assert_eq!(
            polycov_regular_cover_json(mon, 0, 0, &mut report),
            POLYCOV_OK
        );
        let report = take_string(report);
        let v: serde_json::Value = serde_json::from_str(&report).unwrap();
        assert_eq!(v["final_order"], "2^4632 * 3^14 * 5");
        assert_eq!(v["start_prefix_rank"], 3);

        polycov_sggi_free(mon);
        polycov_polytope_free(poly);
    }
}

#[test]
fn round_trips_and_reconstruction() {
    unsafe {
        let expr = CString::new("polygon(4)").unwrap();
        let mut poly: *mut PolycovPolytope = ptr::null_mut();
        assert_eq!(polycov_polytope_make(expr.as_ptr(), &mut poly), POLYCOV_OK);

        let mut json: *mut libc::c_char = ptr::null_mut();
        assert_eq!(polycov_polytope_to_json(poly, &mut json), POLYCOV_OK);
        let json = take_string(json);
        let mut poly2: *mut PolycovPolytope = ptr::null_mut();
        let cjson = CString::new(json).unwrap();
        assert_eq!(
            polycov_polytope_from_json(cjson.as_ptr(), &mut poly2),
            POLYCOV_OK
        );

        let mut mon: *mut PolycovSggi = ptr::null_mut();
        assert_eq!(polycov_monodromy(poly2, &mut mon), POLYCOV_OK);

        let mut sggi_json: *mut libc::c_char = ptr::null_mut();
        assert_eq!(polycov_sggi_to_json(mon, &mut sggi_json), POLYCOV_OK);
        let sggi_json = take_string(sggi_json);
        let c = CString::new(sggi_json).unwrap();
        let mut mon2: *mut PolycovSggi = ptr::null_mut();
        assert_eq!(polycov_sggi_from_json(c.as_ptr(), &mut mon2), POLYCOV_OK);
        let mut rank = 0u64;
        assert_eq!(polycov_sggi_rank(mon2, &mut rank), POLYCOV_OK);
        assert_eq!(rank, 2);

        // extension of the square: explicit, order 128
        let mut ext: *mut PolycovSggi = ptr::null_mut();
        let mut report: *mut libc::c_char = ptr::null_mut();
        assert_eq!(
            polycov_extend_2k(mon2, 0, 0, &mut ext, &mut report),
            POLYCOV_OK
        );
        assert!(!ext.is_null());
        let _ = take_string(report);
        let mut order: *mut libc::c_char = ptr::null_mut();
        assert_eq!(polycov_sggi_order_string(ext, &mut order), POLYCOV_OK);
        assert_eq!(take_string(order), "2^7");

        // the coset geometry of the dihedral group is the square again
        let mut recon: *mut PolycovPolytope = ptr::null_mut();
        assert_eq!(polycov_reconstruct(mon, 0, &mut recon), POLYCOV_OK);
        let mut flags = 0u64;
        assert_eq!(polycov_polytope_flag_count(recon, &mut flags), POLYCOV_OK);
        assert_eq!(flags, 8);

        let mut dual: *mut PolycovPolytope = ptr::null_mut();
        assert_eq!(polycov_polytope_dual(recon, &mut dual), POLYCOV_OK);

        polycov_polytope_free(dual);
        polycov_polytope_free(recon);
        polycov_sggi_free(ext);
        polycov_sggi_free(mon2);
        polycov_sggi_free(mon);
        polycov_polytope_free(poly2);
        polycov_polytope_free(poly);
    }
}

#[test]
fn error_paths_set_codes_and_messages() {
    unsafe {
        let mut poly: *mut PolycovPolytope = ptr::null_mut();
        let bad = CString::new("prism(3)").unwrap();
        assert_eq!(
            polycov_polytope_make(bad.as_ptr(), &mut poly),
            POLYCOV_ERR_PARSE
        );
        assert!(last_error().contains("unknown constructor"));

        assert_eq!(
            polycov_polytope_make(ptr::null(), &mut poly),
            POLYCOV_ERR_NULL_ARGUMENT
        );

        let bad_json = CString::new("{}").unwrap();
        let mut sggi: *mut PolycovSggi = ptr::null_mut();
        assert_eq!(
            polycov_sggi_from_json(bad_json.as_ptr(), &mut sggi),
            POLYCOV_ERR_PARSE
        );

        // cap exceeded surfaces as its own code
        let expr = CString::new("pyramid(polygon(4))").unwrap();
        assert_eq!(polycov_polytope_make(expr.as_ptr(), &mut poly), POLYCOV_OK);
        let mut mon: *mut PolycovSggi = ptr::null_mut();
        assert_eq!(polycov_monodromy(poly, &mut mon), POLYCOV_OK);
        let mut recon: *mut PolycovPolytope = ptr::null_mut();
        assert_eq!(
            polycov_reconstruct(mon, 100, &mut recon),
            POLYCOV_ERR_CAP_EXCEEDED
        );
        assert!(last_error().contains("cap exceeded"));
        polycov_sggi_free(mon);
        polycov_polytope_free(poly);
    }
}

/// The hand-maintained header must stay syntactically valid C; checked with
/// clang when one is on the PATH.
#[test]
fn header_compiles_as_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/polycov.h");
    let clang = ["clang", "cc", "gcc"]
        .iter()
        .find(|c| {
            std::process::Command::new(c)
                .arg("--version")
                .output()
                .is_ok()
        })
        .copied();
    let Some(cc) = clang else {
        eprintln!("no C compiler found; skipping header syntax check");
        return;
    };
    let out = std::process::Command::new(cc)
        .args(["-fsyntax-only", "-x", "c", "-std=c99", header])
        .output()
        .expect("run C compiler");
    assert!(
        out.status.success(),
        "header does not compile: {}",
        String::from_utf8_lossy(&out.stderr)
    );
}
