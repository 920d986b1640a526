//! Checked integer helpers. Classes are tiny; an overflow means a caller bug and
//! must never silently wrap.

#[cold]
#[track_caller]
fn overflow(op: &str) -> ! {
    panic!("integer overflow in {op}")
}

#[inline]
#[track_caller]
pub(crate) fn add(a: i64, b: i64) -> i64 {
    a.checked_add(b).unwrap_or_else(|| overflow("add"))
}

#[inline]
#[track_caller]
pub(crate) fn sub(a: i64, b: i64) -> i64 {
    a.checked_sub(b).unwrap_or_else(|| overflow("sub"))
}

#[inline]
#[track_caller]
pub(crate) fn mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).unwrap_or_else(|| overflow("mul"))
}

#[inline]
#[track_caller]
pub(crate) fn neg(a: i64) -> i64 {
    a.checked_neg().unwrap_or_else(|| overflow("neg"))
}
