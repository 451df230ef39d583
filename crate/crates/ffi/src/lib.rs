//! C ABI over the `mlq` library.
//!
//! Every function returns an [`MlqStatus`]. On failure the message is kept
//! per thread and can be read with [`mlq_last_error_message`]. Strings
//! handed out by this library must be released with [`mlq_string_free`];
//! handles have their own `_free` functions. Panics never cross the
//! boundary and are reported as `MLQ_STATUS_PANIC`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use mlq::combinatorics::ratio_string;
use mlq::engine::guard_from_env;
use mlq::formulas::Registry;
use mlq::verify::{self, Suite, VerifyConfig};
use mlq::{CorrelationTable, DiscreteMlq, Engine, Error, Placement};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MlqStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    GuardExceeded = 4,
    Domain = 5,
    UnknownFormula = 6,
    BufferTooSmall = 7,
    Io = 8,
    Panic = 9,
}

pub const MLQ_METHOD_DIRECT: u32 = 0;
pub const MLQ_METHOD_PROJECTION: u32 = 1;
pub const MLQ_METHOD_CLOSED: u32 = 2;

/// Enumeration engine: worker pool and size guard.
pub struct MlqEngine(Engine);

/// A continuous multiline queue.
pub struct MlqPlacement(Placement);

/// A discrete multiline queue on a ring of sites.
pub struct MlqDiscrete(DiscreteMlq);

/// Exact correlation table `c_{i,j}`.
pub struct MlqCorrelations(CorrelationTable);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(MlqStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse { .. } => MlqStatus::Parse,
            Error::GuardExceeded { .. } => MlqStatus::GuardExceeded,
            Error::Domain { .. } => MlqStatus::Domain,
            Error::UnknownFormula(_) => MlqStatus::UnknownFormula,
            Error::Io(_) => MlqStatus::Io,
            _ => MlqStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(MlqStatus::NullPointer, format!("{what} is null"))
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn call(f: impl FnOnce() -> Result<(), Failure>) -> MlqStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            MlqStatus::Ok
        }
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
            set_error(format!("internal panic: {msg}"));
            MlqStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(MlqStatus::InvalidArgument, format!("{what} is not valid UTF-8")))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).unwrap_or_default().into_raw()
}

unsafe fn write_word(word: &[u32], buf: *mut u32, cap: usize, out_len: *mut usize) -> Result<(), Failure> {
    write_out(out_len, word.len(), "out_len")?;
    if cap < word.len() {
        return Err(Failure(
            MlqStatus::BufferTooSmall,
            format!("word has {} letters, buffer holds {cap}", word.len()),
        ));
    }
    if !word.is_empty() {
        if buf.is_null() {
            return Err(null("buf"));
        }
        ptr::copy_nonoverlapping(word.as_ptr(), buf, word.len());
    }
    Ok(())
}

/// Message of the last failed call on this thread, or null. The pointer is
/// valid until the next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn mlq_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn mlq_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn mlq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Creates an engine. `workers == 0` uses the available parallelism and
/// `guard == 0` reads the guard from the environment.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mlq_engine_new(workers: usize, guard: usize, out: *mut *mut MlqEngine) -> MlqStatus {
    call(|| {
        let workers = if workers == 0 { mlq::engine::default_workers() } else { workers };
        let guard = if guard == 0 { guard_from_env() } else { guard };
        let engine = Box::new(MlqEngine(Engine::new(workers, guard)));
        write_out(out, Box::into_raw(engine), "out")
    })
}

/// # Safety
/// `engine` must come from [`mlq_engine_new`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn mlq_engine_free(engine: *mut MlqEngine) {
    if !engine.is_null() {
        drop(Box::from_raw(engine));
    }
}

/// Parses a continuous queue: one row per line, entries separated by spaces.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mlq_placement_parse(text: *const c_char, out: *mut *mut MlqPlacement) -> MlqStatus {
    call(|| {
        let p = Placement::parse(read_str(text, "text")?)?;
        write_out(out, Box::into_raw(Box::new(MlqPlacement(p))), "out")
    })
}

/// Builds a continuous queue from `rows` row lengths and the concatenated
/// row entries.
///
/// # Safety
/// `lengths` must point to `rows` values and `entries` to their sum.
#[no_mangle]
pub unsafe extern "C" fn mlq_placement_from_rows(
    entries: *const u32,
    lengths: *const usize,
    rows: usize,
    out: *mut *mut MlqPlacement,
) -> MlqStatus {
    call(|| {
        if lengths.is_null() && rows > 0 {
            return Err(null("lengths"));
        }
        let lengths = if rows == 0 { &[][..] } else { std::slice::from_raw_parts(lengths, rows) };
        let total: usize = lengths.iter().sum();
        if entries.is_null() && total > 0 {
            return Err(null("entries"));
        }
        let flat = if total == 0 { &[][..] } else { std::slice::from_raw_parts(entries, total) };
        let mut split = Vec::with_capacity(rows);
        let mut at = 0;
        for &len in lengths {
            split.push(flat[at..at + len].to_vec());
            at += len;
        }
        let p = Placement::from_rows(&split)?;
        write_out(out, Box::into_raw(Box::new(MlqPlacement(p))), "out")
    })
}

/// # Safety
/// `p` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn mlq_placement_free(p: *mut MlqPlacement) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Projects a continuous queue. The word length is always stored in
/// `out_len`; if `cap` is too small nothing is copied and
/// `MLQ_STATUS_BUFFER_TOO_SMALL` is returned.
///
/// # Safety
/// `p` must be a live handle, `buf` must hold `cap` values.
#[no_mangle]
pub unsafe extern "C" fn mlq_project(
    p: *const MlqPlacement,
    buf: *mut u32,
    cap: usize,
    out_len: *mut usize,
) -> MlqStatus {
    call(|| {
        let p = p.as_ref().ok_or_else(|| null("placement"))?;
        let word = mlq::queue::project_word(&p.0);
        write_word(&word, buf, cap, out_len)
    })
}

/// Parses a discrete queue: one row per line, `x` occupied, `.` empty.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mlq_discrete_parse(text: *const c_char, out: *mut *mut MlqDiscrete) -> MlqStatus {
    call(|| {
        let q = DiscreteMlq::parse(read_str(text, "text")?)?;
        write_out(out, Box::into_raw(Box::new(MlqDiscrete(q))), "out")
    })
}

/// # Safety
/// `q` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn mlq_discrete_free(q: *mut MlqDiscrete) {
    if !q.is_null() {
        drop(Box::from_raw(q));
    }
}

/// Projects a discrete queue; empty sites get label `species + 1`.
///
/// # Safety
/// As for [`mlq_project`].
#[no_mangle]
pub unsafe extern "C" fn mlq_project_discrete(
    q: *const MlqDiscrete,
    buf: *mut u32,
    cap: usize,
    out_len: *mut usize,
) -> MlqStatus {
    call(|| {
        let q = q.as_ref().ok_or_else(|| null("queue"))?;
        let word = mlq::bully_project_discrete(&q.0).word;
        write_word(&word, buf, cap, out_len)
    })
}

/// Evaluates a registered formula. The value is written as `"p/q"`.
///
/// # Safety
/// `id` must be a NUL-terminated string, `args` must hold `nargs` values.
#[no_mangle]
pub unsafe extern "C" fn mlq_formula_evaluate(
    id: *const c_char,
    args: *const i64,
    nargs: usize,
    out_value: *mut *mut c_char,
) -> MlqStatus {
    call(|| {
        let id = read_str(id, "id")?;
        if args.is_null() && nargs > 0 {
            return Err(null("args"));
        }
        let args = if nargs == 0 { &[][..] } else { std::slice::from_raw_parts(args, nargs) };
        let res = Registry::new().evaluate(id, args)?;
        if out_value.is_null() {
            return Err(null("out_value"));
        }
        out_value.write(into_c_string(ratio_string(&res.value)));
        Ok(())
    })
}

/// Computes `c_{i,j}` for labels `1..=n` with one of the `MLQ_METHOD_*`
/// methods.
///
/// # Safety
/// `engine` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mlq_correlations(
    engine: *const MlqEngine,
    n: usize,
    method: u32,
    out: *mut *mut MlqCorrelations,
) -> MlqStatus {
    call(|| {
        let engine = engine.as_ref().ok_or_else(|| null("engine"))?;
        let table = match method {
            MLQ_METHOD_DIRECT => engine.0.correlations_direct(n)?,
            MLQ_METHOD_PROJECTION => engine.0.correlations_via_projection(n)?,
            MLQ_METHOD_CLOSED => verify::correlations_closed(n)?,
            other => {
                return Err(Failure(
                    MlqStatus::InvalidArgument,
                    format!("unknown method {other}"),
                ))
            }
        };
        write_out(out, Box::into_raw(Box::new(MlqCorrelations(table))), "out")
    })
}

/// Reads `c_{i,j}` from a table as `"p/q"`.
///
/// # Safety
/// `table` must be a live handle and `out_value` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mlq_correlations_get(
    table: *const MlqCorrelations,
    i: usize,
    j: usize,
    out_value: *mut *mut c_char,
) -> MlqStatus {
    call(|| {
        let table = table.as_ref().ok_or_else(|| null("table"))?;
        let v = table.0.get(i, j).ok_or_else(|| {
            Failure(
                MlqStatus::InvalidArgument,
                format!("({i},{j}) is outside 1..={}", table.0.n),
            )
        })?;
        if out_value.is_null() {
            return Err(null("out_value"));
        }
        out_value.write(into_c_string(ratio_string(v)));
        Ok(())
    })
}

/// # Safety
/// `table` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn mlq_correlations_free(table: *mut MlqCorrelations) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// Runs a verification suite (`theorems`, `lemmas`, `conjectures` or
/// `all`) up to `max_total` entries. `out_passed` receives 1 if every gate
/// check agreed; `out_report`, if not null, receives the JSON report.
///
/// # Safety
/// `engine` must be a live handle, `suite` a NUL-terminated string and
/// `out_passed` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mlq_verify(
    engine: *const MlqEngine,
    suite: *const c_char,
    max_total: usize,
    out_passed: *mut i32,
    out_report: *mut *mut c_char,
) -> MlqStatus {
    call(|| {
        let engine = engine.as_ref().ok_or_else(|| null("engine"))?;
        let suite: Suite = read_str(suite, "suite")?.parse()?;
        let config = VerifyConfig {
            suite,
            max_total,
            registry: Registry::new(),
        };
        let report = verify::run(&engine.0, &config)?;
        write_out(out_passed, report.passed() as i32, "out_passed")?;
        if !out_report.is_null() {
            out_report.write(into_c_string(report.to_json().to_string()));
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn last_error() -> String {
        let p = mlq_last_error_message();
        assert!(!p.is_null());
        unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
    }

    unsafe fn take(s: *mut c_char) -> String {
        let out = CStr::from_ptr(s).to_string_lossy().into_owned();
        mlq_string_free(s);
        out
    }

    #[test]
    fn project_roundtrip() {
        let text = CString::new("5\n1 3 7 9\n8 10 13 15 16\n2 4 6 11 12 14 17\n").unwrap();
        let mut p = ptr::null_mut();
        unsafe {
            assert_eq!(mlq_placement_parse(text.as_ptr(), &mut p), MlqStatus::Ok);
            let mut len = 0;
            assert_eq!(mlq_project(p, ptr::null_mut(), 0, &mut len), MlqStatus::BufferTooSmall);
            assert_eq!(len, 7);
            let mut buf = [0u32; 7];
            assert_eq!(mlq_project(p, buf.as_mut_ptr(), buf.len(), &mut len), MlqStatus::Ok);
            assert_eq!(buf, [3, 4, 4, 1, 2, 2, 2]);
            mlq_placement_free(p);
        }
    }

    #[test]
    fn from_rows_matches_parse() {
        let entries = [2u32, 1, 3];
        let lengths = [1usize, 2];
        let mut p = ptr::null_mut();
        unsafe {
            assert_eq!(
                mlq_placement_from_rows(entries.as_ptr(), lengths.as_ptr(), 2, &mut p),
                MlqStatus::Ok
            );
            assert_eq!((*p).0.rows(), vec![vec![2], vec![1, 3]]);
            mlq_placement_free(p);
        }
    }

    #[test]
    fn parse_error_is_reported() {
        let text = CString::new("1 2\n3 x\n").unwrap();
        let mut p = ptr::null_mut();
        let status = unsafe { mlq_placement_parse(text.as_ptr(), &mut p) };
        assert_eq!(status, MlqStatus::Parse);
        assert!(p.is_null());
        assert!(last_error().contains("line 2"));
    }

    #[test]
    fn null_pointers_are_rejected() {
        let status = unsafe { mlq_placement_parse(ptr::null(), ptr::null_mut()) };
        assert_eq!(status, MlqStatus::NullPointer);
        let status = unsafe { mlq_project(ptr::null(), ptr::null_mut(), 0, ptr::null_mut()) };
        assert_eq!(status, MlqStatus::NullPointer);
    }

    #[test]
    fn discrete_projection() {
        let text = CString::new("x..x.........\n.xx..x.......\nx..xx....x..x\nxxx..x..x.xx.\n").unwrap();
        let mut q = ptr::null_mut();
        unsafe {
            assert_eq!(mlq_discrete_parse(text.as_ptr(), &mut q), MlqStatus::Ok);
            let mut buf = [0u32; 13];
            let mut len = 0;
            assert_eq!(mlq_project_discrete(q, buf.as_mut_ptr(), 13, &mut len), MlqStatus::Ok);
            let word: String = buf.iter().map(|d| d.to_string()).collect();
            assert_eq!(word, "3345515525145");
            mlq_discrete_free(q);
        }
    }

    #[test]
    fn formulas_and_errors() {
        let id = CString::new("thm:n13").unwrap();
        let args = [2i64, 1, 6];
        let mut out = ptr::null_mut();
        unsafe {
            assert_eq!(mlq_formula_evaluate(id.as_ptr(), args.as_ptr(), 3, &mut out), MlqStatus::Ok);
            assert_eq!(take(out), "280/1");
        }
        let bad = CString::new("thm:nope").unwrap();
        let status = unsafe { mlq_formula_evaluate(bad.as_ptr(), args.as_ptr(), 3, &mut out) };
        assert_eq!(status, MlqStatus::UnknownFormula);
        assert!(last_error().contains("thm:nope"));
    }

    #[test]
    fn correlations_agree() {
        let mut engine = ptr::null_mut();
        unsafe {
            assert_eq!(mlq_engine_new(2, 0, &mut engine), MlqStatus::Ok);
            let mut a = ptr::null_mut();
            let mut b = ptr::null_mut();
            assert_eq!(mlq_correlations(engine, 4, MLQ_METHOD_DIRECT, &mut a), MlqStatus::Ok);
            assert_eq!(mlq_correlations(engine, 4, MLQ_METHOD_CLOSED, &mut b), MlqStatus::Ok);
            for i in 1..=4 {
                for j in 1..=4 {
                    let (mut x, mut y) = (ptr::null_mut(), ptr::null_mut());
                    assert_eq!(mlq_correlations_get(a, i, j, &mut x), MlqStatus::Ok);
                    assert_eq!(mlq_correlations_get(b, i, j, &mut y), MlqStatus::Ok);
                    assert_eq!(take(x), take(y));
                }
            }
            let mut x = ptr::null_mut();
            assert_eq!(mlq_correlations_get(a, 5, 1, &mut x), MlqStatus::InvalidArgument);
            assert_eq!(mlq_correlations(engine, 4, 9, &mut a), MlqStatus::InvalidArgument);
            mlq_correlations_free(a);
            mlq_correlations_free(b);
            mlq_engine_free(engine);
        }
    }

    #[test]
    fn verify_and_guard() {
        let mut engine = ptr::null_mut();
        let suite = CString::new("conjectures").unwrap();
        unsafe {
            assert_eq!(mlq_engine_new(1, 8, &mut engine), MlqStatus::Ok);
            let mut passed = 0;
            let mut report = ptr::null_mut();
            assert_eq!(mlq_verify(engine, suite.as_ptr(), 7, &mut passed, &mut report), MlqStatus::Ok);
            assert_eq!(passed, 1);
            assert!(take(report).starts_with('{'));
            let status = mlq_verify(engine, suite.as_ptr(), 9, &mut passed, ptr::null_mut());
            assert_eq!(status, MlqStatus::GuardExceeded);
            mlq_engine_free(engine);
        }
    }
}
