//! Closed-form minimum orders.
//!
//! `minimum_order(k, a)` is the least number of vertices of a polyhedral
//! graph containing a set of `a` vertices that are pairwise at distance
//! greater than `k`:
//!
//! - a = 1: 4 (the tetrahedron), for every k;
//! - k even, a >= 2: (3k/2 + 1) * a;
//! - k odd: ceil(3a/2 + 2) + 3a(k-1)/2, which for k = 1 is ceil(3a/2) + 2.

use crate::error::{Error, Result};

pub fn minimum_order(k: usize, a: usize) -> Result<usize> {
    if k == 0 || a == 0 {
        return Err(Error::InvalidParameter(format!(
            "minimum order needs k >= 1 and a >= 1, got k = {k}, a = {a}"
        )));
    }
    Ok(if a == 1 {
        4
    } else if k % 2 == 0 {
        (3 * k / 2 + 1) * a
    } else {
        (3 * a).div_ceil(2) + 2 + 3 * a * (k - 1) / 2
    })
}
