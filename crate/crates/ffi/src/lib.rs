//! C ABI for the fibcomp library.
//!
//! Compositions and enumeration streams are opaque heap handles owned by the
//! caller and released with the matching `*_free` function. Big integers
//! cross the boundary as decimal strings. Every fallible call returns a
//! [`FibcompStatus`]; the message for the last failure on the calling thread
//! is available from [`fibcomp_last_error`].

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

use num_bigint::BigUint;

use fibcomp::{
    BijectionMap, ClassSpec, Composition, Compositions, CountTable, CutJoinSeq, IdentityConfig,
    IdentityId, Origin, RenderSpec, TaggedSource, VerifyConfig,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FibcompStatus {
    Ok = 0,
    NullPointer = 1,
    ParseError = 2,
    DomainError = 3,
    VerificationFailed = 4,
    EndOfStream = 5,
    InvalidArgument = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FibcompClass {
    All = 0,
    Parts12 = 1,
    Odd = 2,
    Min2 = 3,
}

impl From<FibcompClass> for ClassSpec {
    fn from(c: FibcompClass) -> Self {
        match c {
            FibcompClass::All => ClassSpec::All,
            FibcompClass::Parts12 => ClassSpec::Parts12,
            FibcompClass::Odd => ClassSpec::Odd,
            FibcompClass::Min2 => ClassSpec::Min2,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FibcompMap {
    Prop1 = 0,
    Prop2 = 1,
    Prop3 = 2,
    Thm4 = 3,
}

impl From<FibcompMap> for BijectionMap {
    fn from(m: FibcompMap) -> Self {
        match m {
            FibcompMap::Prop1 => BijectionMap::Prop1,
            FibcompMap::Prop2 => BijectionMap::Prop2,
            FibcompMap::Prop3 => BijectionMap::Prop3,
            FibcompMap::Thm4 => BijectionMap::Thm4,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FibcompOrigin {
    FromNMinus1 = 0,
    FromNMinus2 = 1,
    FromMin2 = 2,
    FromOdd = 3,
}

impl From<FibcompOrigin> for Origin {
    fn from(o: FibcompOrigin) -> Self {
        match o {
            FibcompOrigin::FromNMinus1 => Origin::FromNMinus1,
            FibcompOrigin::FromNMinus2 => Origin::FromNMinus2,
            FibcompOrigin::FromMin2 => Origin::FromMin2,
            FibcompOrigin::FromOdd => Origin::FromOdd,
        }
    }
}

impl From<Origin> for FibcompOrigin {
    fn from(o: Origin) -> Self {
        match o {
            Origin::FromNMinus1 => FibcompOrigin::FromNMinus1,
            Origin::FromNMinus2 => FibcompOrigin::FromNMinus2,
            Origin::FromMin2 => FibcompOrigin::FromMin2,
            Origin::FromOdd => FibcompOrigin::FromOdd,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FibcompIdentity {
    Eq1 = 0,
    Eq2 = 1,
    Eq3 = 2,
    Eq4 = 3,
    Pow2 = 4,
}

impl From<FibcompIdentity> for IdentityId {
    fn from(i: FibcompIdentity) -> Self {
        match i {
            FibcompIdentity::Eq1 => IdentityId::Eq1,
            FibcompIdentity::Eq2 => IdentityId::Eq2,
            FibcompIdentity::Eq3 => IdentityId::Eq3,
            FibcompIdentity::Eq4 => IdentityId::Eq4,
            FibcompIdentity::Pow2 => IdentityId::Pow2,
        }
    }
}

/// Bit flags for [`fibcomp_render`].
pub const FIBCOMP_RENDER_SVG: u32 = 1;
pub const FIBCOMP_RENDER_EVEN_GRAY: u32 = 2;
pub const FIBCOMP_RENDER_CUTJOIN: u32 = 4;
pub const FIBCOMP_RENDER_LENGTHS: u32 = 8;

/// Opaque composition handle.
pub struct FibcompComposition(Composition);

/// Opaque lazy enumeration stream.
pub struct FibcompStream(Compositions);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn fail(status: FibcompStatus, message: impl Into<String>) -> FibcompStatus {
    let text = CString::new(message.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
    status
}

fn fail_lib(e: fibcomp::Error) -> FibcompStatus {
    match e {
        fibcomp::Error::Parse(p) => fail(FibcompStatus::ParseError, p.to_string()),
        other => fail(FibcompStatus::DomainError, other.to_string()),
    }
}

fn clear_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, FibcompStatus> {
    if text.is_null() {
        return Err(fail(FibcompStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|_| fail(FibcompStatus::ParseError, "string is not valid UTF-8"))
}

unsafe fn read_comp<'a>(c: *const FibcompComposition) -> Result<&'a Composition, FibcompStatus> {
    c.as_ref()
        .map(|h| &h.0)
        .ok_or_else(|| fail(FibcompStatus::NullPointer, "null composition handle"))
}

unsafe fn write_string(out: *mut *mut c_char, value: String) -> FibcompStatus {
    if out.is_null() {
        return fail(FibcompStatus::NullPointer, "null output pointer");
    }
    match CString::new(value) {
        Ok(s) => {
            *out = s.into_raw();
            clear_error();
            FibcompStatus::Ok
        }
        Err(_) => fail(FibcompStatus::DomainError, "string contains NUL"),
    }
}

unsafe fn write_comp(out: *mut *mut FibcompComposition, value: Composition) -> FibcompStatus {
    if out.is_null() {
        return fail(FibcompStatus::NullPointer, "null output pointer");
    }
    *out = Box::into_raw(Box::new(FibcompComposition(value)));
    clear_error();
    FibcompStatus::Ok
}

macro_rules! try_ffi {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(status) => return status,
        }
    };
}

/// Library version; static storage, do not free.
#[no_mangle]
pub extern "C" fn fibcomp_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the most recent failure on this thread, or NULL. Valid until
/// the next fibcomp call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn fibcomp_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Frees a string returned through an `out` parameter. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn fibcomp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses the text form (`3,1,1`, or `-` for the empty composition).
#[no_mangle]
pub unsafe extern "C" fn fibcomp_composition_parse(
    text: *const c_char,
    out: *mut *mut FibcompComposition,
) -> FibcompStatus {
    let text = try_ffi!(read_str(text));
    match text.parse::<Composition>() {
        Ok(c) => write_comp(out, c),
        Err(e) => fail(FibcompStatus::ParseError, e.to_string()),
    }
}

/// Builds a composition from `len` parts; `parts` may be NULL when `len` is 0.
#[no_mangle]
pub unsafe extern "C" fn fibcomp_composition_from_parts(
    parts: *const u32,
    len: usize,
    out: *mut *mut FibcompComposition,
) -> FibcompStatus {
    let slice = if len == 0 {
        &[][..]
    } else if parts.is_null() {
        return fail(FibcompStatus::NullPointer, "null parts array");
    } else {
        std::slice::from_raw_parts(parts, len)
    };
    match Composition::new(slice.to_vec()) {
        Ok(c) => write_comp(out, c),
        Err(e) => fail(FibcompStatus::InvalidArgument, e.to_string()),
    }
}

#[no_mangle]
pub unsafe extern "C" fn fibcomp_composition_free(c: *mut FibcompComposition) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Number of parts; 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn fibcomp_composition_len(c: *const FibcompComposition) -> usize {
    c.as_ref().map_or(0, |h| h.0.len())
}

/// Sum of the parts; 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn fibcomp_composition_total(c: *const FibcompComposition) -> u32 {
    c.as_ref().map_or(0, |h| h.0.total())
}

/// Borrowed pointer to the parts array, valid while the handle lives.
#[no_mangle]
pub unsafe extern "C" fn fibcomp_composition_parts(c: *const FibcompComposition) -> *const u32 {
    c.as_ref().map_or(ptr::null(), |h| h.0.parts().as_ptr())
}

/// Class membership bit set: bit `k` set for class value `k` of [`FibcompClass`].
#[no_mangle]
pub unsafe extern "C" fn fibcomp_composition_classify(c: *const FibcompComposition) -> u8 {
    c.as_ref().map_or(0, |h| h.0.classify().bits())
}

#[no_mangle]
pub unsafe extern "C" fn fibcomp_composition_to_string(
    c: *const FibcompComposition,
    out: *mut *mut c_char,
) -> FibcompStatus {
    let c = try_ffi!(read_comp(c));
    write_string(out, c.to_string())
}

/// Cut/join word (`JJCC`) of a nonempty composition.
#[no_mangle]
pub unsafe extern "C" fn fibcomp_encode(
    c: *const FibcompComposition,
    out: *mut *mut c_char,
) -> FibcompStatus {
    let c = try_ffi!(read_comp(c));
    match fibcomp::encode(c) {
        Ok(w) => write_string(out, w.to_string()),
        Err(e) => fail_lib(e),
    }
}

/// Decodes a cut/join word. `board` 0 infers the board length from the word.
#[no_mangle]
pub unsafe extern "C" fn fibcomp_decode(
    word: *const c_char,
    board: u32,
    out: *mut *mut FibcompComposition,
) -> FibcompStatus {
    let word = try_ffi!(read_str(word));
    let board = (board != 0).then_some(board);
    match CutJoinSeq::parse(word, board) {
        Ok(w) => write_comp(out, fibcomp::decode(&w)),
        Err(e) => fail(FibcompStatus::ParseError, e.to_string()),
    }
}

#[no_mangle]
pub unsafe extern "C" fn fibcomp_conjugate(
    c: *const FibcompComposition,
    out: *mut *mut FibcompComposition,
) -> FibcompStatus {
    let c = try_ffi!(read_comp(c));
    match fibcomp::conjugate(c) {
        Ok(conj) => write_comp(out, conj),
        Err(e) => fail_lib(e),
    }
}

#[no_mangle]
pub unsafe extern "C" fn fibcomp_reverse(
    c: *const FibcompComposition,
    out: *mut *mut FibcompComposition,
) -> FibcompStatus {
    let c = try_ffi!(read_comp(c));
    write_comp(out, fibcomp::reverse(c))
}

/// `F_m` as a decimal string.
#[no_mangle]
pub unsafe extern "C" fn fibcomp_fib(m: u32, out: *mut *mut c_char) -> FibcompStatus {
    write_string(out, fibcomp::fib(m as usize).to_string())
}

/// Number of class compositions of `n`, as a decimal string.
#[no_mangle]
pub unsafe extern "C" fn fibcomp_count(
    class: FibcompClass,
    n: u32,
    out: *mut *mut c_char,
) -> FibcompStatus {
    write_string(out, fibcomp::count(class.into(), n).to_string())
}

/// 0-based canonical rank, as a decimal string.
#[no_mangle]
pub unsafe extern "C" fn fibcomp_rank(
    class: FibcompClass,
    c: *const FibcompComposition,
    out: *mut *mut c_char,
) -> FibcompStatus {
    let c = try_ffi!(read_comp(c));
    match fibcomp::rank(class.into(), c) {
        Ok(r) => write_string(out, r.to_string()),
        Err(e) => fail_lib(e),
    }
}

unsafe fn read_rank(rank: *const c_char) -> Result<BigUint, FibcompStatus> {
    let text = read_str(rank)?;
    text.parse::<BigUint>()
        .map_err(|_| fail(FibcompStatus::ParseError, format!("bad rank `{text}`")))
}

/// Composition at a decimal rank.
#[no_mangle]
pub unsafe extern "C" fn fibcomp_unrank(
    class: FibcompClass,
    n: u32,
    rank: *const c_char,
    out: *mut *mut FibcompComposition,
) -> FibcompStatus {
    let rank = try_ffi!(read_rank(rank));
    match CountTable::build(class.into(), n).unrank(n, &rank) {
        Ok(c) => write_comp(out, c),
        Err(e) => fail_lib(e),
    }
}

/// Canonical-order stream over the class compositions of `n`.
#[no_mangle]
pub unsafe extern "C" fn fibcomp_stream_new(
    class: FibcompClass,
    n: u32,
    out: *mut *mut FibcompStream,
) -> FibcompStatus {
    if out.is_null() {
        return fail(FibcompStatus::NullPointer, "null output pointer");
    }
    *out = Box::into_raw(Box::new(FibcompStream(Compositions::new(class.into(), n))));
    clear_error();
    FibcompStatus::Ok
}

/// Stream positioned at a decimal rank, for sharded enumeration.
#[no_mangle]
pub unsafe extern "C" fn fibcomp_stream_from_rank(
    class: FibcompClass,
    n: u32,
    rank: *const c_char,
    out: *mut *mut FibcompStream,
) -> FibcompStatus {
    if out.is_null() {
        return fail(FibcompStatus::NullPointer, "null output pointer");
    }
    let rank = try_ffi!(read_rank(rank));
    match Compositions::from_rank(class.into(), n, &rank) {
        Ok(stream) => {
            *out = Box::into_raw(Box::new(FibcompStream(stream)));
            clear_error();
            FibcompStatus::Ok
        }
        Err(e) => fail_lib(e),
    }
}

/// Writes the next composition to `out`, or returns `EndOfStream`.
#[no_mangle]
pub unsafe extern "C" fn fibcomp_stream_next(
    stream: *mut FibcompStream,
    out: *mut *mut FibcompComposition,
) -> FibcompStatus {
    let Some(stream) = stream.as_mut() else {
        return fail(FibcompStatus::NullPointer, "null stream handle");
    };
    match stream.0.next() {
        Some(c) => write_comp(out, c),
        None => FibcompStatus::EndOfStream,
    }
}

#[no_mangle]
pub unsafe extern "C" fn fibcomp_stream_free(stream: *mut FibcompStream) {
    if !stream.is_null() {
        drop(Box::from_raw(stream));
    }
}

/// Applies a bijection to a tagged source composition.
#[no_mangle]
pub unsafe extern "C" fn fibcomp_map_forward(
    map: FibcompMap,
    origin: FibcompOrigin,
    payload: *const FibcompComposition,
    n: u32,
    out: *mut *mut FibcompComposition,
) -> FibcompStatus {
    let payload = try_ffi!(read_comp(payload));
    let source = TaggedSource::new(origin.into(), payload.clone());
    match BijectionMap::from(map).forward(&source, n) {
        Ok(image) => write_comp(out, image),
        Err(e) => fail_lib(e),
    }
}

/// Inverts a bijection, reporting the origin tag and the source composition.
#[no_mangle]
pub unsafe extern "C" fn fibcomp_map_backward(
    map: FibcompMap,
    c: *const FibcompComposition,
    n: u32,
    out_origin: *mut FibcompOrigin,
    out: *mut *mut FibcompComposition,
) -> FibcompStatus {
    let c = try_ffi!(read_comp(c));
    if out_origin.is_null() {
        return fail(FibcompStatus::NullPointer, "null origin output");
    }
    match BijectionMap::from(map).backward(c, n) {
        Ok(source) => {
            *out_origin = source.origin.into();
            write_comp(out, source.payload)
        }
        Err(e) => fail_lib(e),
    }
}

/// Exhaustive bijection check at size `n`. `bound` 0 uses the default
/// materialization bound. Returns `VerificationFailed` with the first
/// counterexample in the error message.
#[no_mangle]
pub extern "C" fn fibcomp_verify(map: FibcompMap, n: u32, bound: u32) -> FibcompStatus {
    let config = if bound == 0 {
        VerifyConfig::default()
    } else {
        VerifyConfig { bound }
    };
    match fibcomp::verify_bijection(map.into(), n, &config) {
        Ok(report) if report.passed() => {
            clear_error();
            FibcompStatus::Ok
        }
        Ok(report) => fail(
            FibcompStatus::VerificationFailed,
            report.failures[0].to_string(),
        ),
        Err(e) => fail_lib(e),
    }
}

/// Checks an identity for every `n` up to `n_max` with the default
/// cross-check limits.
#[no_mangle]
pub extern "C" fn fibcomp_identity_check(id: FibcompIdentity, n_max: u32) -> FibcompStatus {
    if n_max == 0 {
        return fail(FibcompStatus::InvalidArgument, "n_max must be at least 1");
    }
    let report = fibcomp::check_identity(id.into(), n_max, &IdentityConfig::default());
    match report.first_failure() {
        None => {
            clear_error();
            FibcompStatus::Ok
        }
        Some(row) => fail(
            FibcompStatus::VerificationFailed,
            format!("{}: {row}", report.id),
        ),
    }
}

/// Renders a tiling. `flags` combines the `FIBCOMP_RENDER_*` bits; ASCII
/// is the default format and `LENGTHS` wins over `CUTJOIN`.
#[no_mangle]
pub unsafe extern "C" fn fibcomp_render(
    c: *const FibcompComposition,
    flags: u32,
    out: *mut *mut c_char,
) -> FibcompStatus {
    use fibcomp::{Annotation, Format, Shading};
    let c = try_ffi!(read_comp(c));
    let spec = RenderSpec {
        format: if flags & FIBCOMP_RENDER_SVG != 0 {
            Format::Svg
        } else {
            Format::Ascii
        },
        shading: if flags & FIBCOMP_RENDER_EVEN_GRAY != 0 {
            Shading::EvenGray
        } else {
            Shading::None
        },
        annotation: if flags & FIBCOMP_RENDER_LENGTHS != 0 {
            Annotation::Lengths
        } else if flags & FIBCOMP_RENDER_CUTJOIN != 0 {
            Annotation::CutJoin
        } else {
            Annotation::None
        },
    };
    match fibcomp::render(c, &spec) {
        Ok(text) => write_string(out, text),
        Err(e) => fail_lib(e),
    }
}
