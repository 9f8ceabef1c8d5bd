//! Offline OEIS fixture store, prefix matching under aeration and sign
//! changes, and an opt-in b-file fetcher with a local cache.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Mutex;
use std::time::{Duration, SystemTime, UNIX_EPOCH};

use num::{BigInt, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::classf::SeriesPrefix;
use crate::error::{FclError, Result};
use crate::exactalg::Rat;

include!(concat!(env!("OUT_DIR"), "/bundled.rs"));

pub const MIN_OVERLAP: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Bundled,
    /// Seconds since the Unix epoch.
    Fetched(u64),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Alignment {
    /// Moment `s_n` sits at `terms[n + skip]`.
    #[serde(default)]
    pub skip: usize,
    #[serde(default)]
    pub note: String,
}

#[derive(Serialize, Deserialize)]
struct RawFixture {
    a_number: String,
    offset: i64,
    terms: Vec<String>,
    #[serde(default)]
    alignment: Alignment,
    #[serde(default = "bundled")]
    source: Source,
}

fn bundled() -> Source {
    Source::Bundled
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub a_number: String,
    pub offset: i64,
    pub terms: Vec<BigInt>,
    pub alignment: Alignment,
    pub source: Source,
}

/// Checks `^A\d{6}$`, reporting the first bad byte.
pub fn validate_a_number(s: &str) -> Result<()> {
    let b = s.as_bytes();
    if b.first() != Some(&b'A') {
        return Err(FclError::Parse { offset: 0, message: format!("A-number must start with 'A': {s:?}") });
    }
    for (i, c) in b.iter().enumerate().skip(1) {
        if i > 6 || !c.is_ascii_digit() {
            return Err(FclError::Parse { offset: i, message: format!("bad A-number {s:?}") });
        }
    }
    if b.len() != 7 {
        return Err(FclError::Parse { offset: b.len(), message: format!("A-number needs six digits: {s:?}") });
    }
    Ok(())
}

impl Fixture {
    pub fn from_json(text: &str) -> Result<Fixture> {
        let raw: RawFixture = serde_json::from_str(text).map_err(|e| FclError::Parse {
            offset: line_col_offset(text, e.line(), e.column()),
            message: e.to_string(),
        })?;
        validate_a_number(&raw.a_number)?;
        if raw.terms.is_empty() {
            return Err(FclError::Parse { offset: 0, message: format!("{}: no terms", raw.a_number) });
        }
        let terms = raw
            .terms
            .iter()
            .map(|t| {
                t.trim().parse::<BigInt>().map_err(|_| FclError::Parse {
                    offset: text.find(&format!("\"{t}\"")).unwrap_or(0),
                    message: format!("bad term {t:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Fixture { a_number: raw.a_number, offset: raw.offset, terms, alignment: raw.alignment, source: raw.source })
    }

    pub fn to_json(&self) -> String {
        let raw = RawFixture {
            a_number: self.a_number.clone(),
            offset: self.offset,
            terms: self.terms.iter().map(|t| t.to_string()).collect(),
            alignment: self.alignment.clone(),
            source: self.source.clone(),
        };
        serde_json::to_string_pretty(&raw).expect("fixture serializes")
    }

    /// Terms from index `skip`, as rationals.
    pub fn aligned(&self, skip: usize) -> Vec<Rat> {
        self.terms.iter().skip(skip).map(|t| Rat::from_integer(t.clone())).collect()
    }
}

fn line_col_offset(text: &str, line: usize, col: usize) -> usize {
    let mut off = 0;
    for (i, l) in text.split_inclusive('\n').enumerate() {
        if i + 1 == line {
            return off + col.saturating_sub(1);
        }
        off += l.len();
    }
    off
}

#[derive(Clone, Debug, Default)]
pub struct FixtureStore {
    fixtures: BTreeMap<String, Fixture>,
}

impl FixtureStore {
    pub fn bundled() -> FixtureStore {
        let mut store = FixtureStore::default();
        for (name, text) in BUNDLED {
            let f = Fixture::from_json(text).unwrap_or_else(|e| panic!("bundled fixture {name}: {e}"));
            store.fixtures.insert(f.a_number.clone(), f);
        }
        store
    }

    /// Adds every `A??????.json` in `dir`; bundled entries win on conflict.
    pub fn load_dir(&mut self, dir: &Path) -> Result<usize> {
        let mut n = 0;
        let mut paths: Vec<PathBuf> = fs::read_dir(dir)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect();
        paths.sort();
        for p in paths {
            let f = Fixture::from_json(&fs::read_to_string(&p)?)?;
            if self.insert(f) {
                n += 1;
            }
        }
        Ok(n)
    }

    /// Returns false if a bundled fixture already holds the A-number.
    pub fn insert(&mut self, f: Fixture) -> bool {
        if let Some(old) = self.fixtures.get(&f.a_number) {
            if old.source == Source::Bundled {
                return false;
            }
        }
        self.fixtures.insert(f.a_number.clone(), f);
        true
    }

    pub fn get(&self, a_number: &str) -> Option<&Fixture> {
        self.fixtures.get(a_number)
    }

    pub fn len(&self) -> usize {
        self.fixtures.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fixtures.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Fixture> {
        self.fixtures.values()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Transform {
    Identity,
    Aerated,
    Signed,
}

impl fmt::Display for Transform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Transform::Identity => "identity",
            Transform::Aerated => "aerated",
            Transform::Signed => "signed",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeqMatch {
    pub a_number: String,
    pub transform: Transform,
    pub skip: usize,
    pub overlap: usize,
}

/// Number of terms compared, or `None` on a mismatch or short overlap.
fn compare(s: &[Rat], t: &[Rat], transform: Transform, min_overlap: usize) -> Option<usize> {
    let mut used = 0;
    match transform {
        Transform::Identity | Transform::Signed => {
            for (n, (a, b)) in s.iter().zip(t).enumerate() {
                let b = if transform == Transform::Signed && n % 2 == 1 { -b.clone() } else { b.clone() };
                if *a != b {
                    return None;
                }
                used += 1;
            }
        }
        Transform::Aerated => {
            for (n, a) in s.iter().enumerate() {
                if n % 2 == 1 {
                    if !a.is_zero() {
                        return None;
                    }
                    continue;
                }
                let Some(b) = t.get(n / 2) else { break };
                if a != b {
                    return None;
                }
                used += 1;
            }
        }
    }
    (used >= min_overlap).then_some(used)
}

/// Signs only apply to fixtures with nonnegative terms.
fn excluded(f: &Fixture, transform: Transform) -> bool {
    transform == Transform::Signed && f.terms.iter().any(|x| x.is_negative())
}

/// Fixtures matching `s` under each transform, sorted by A-number.
pub fn match_series(store: &FixtureStore, s: &SeriesPrefix, min_overlap: usize) -> Result<Vec<SeqMatch>> {
    if min_overlap < MIN_OVERLAP {
        return Err(FclError::Domain(format!("min_overlap must be at least {MIN_OVERLAP}")));
    }
    let mut out = Vec::new();
    for f in store.iter() {
        let mut skips = vec![0];
        if f.alignment.skip != 0 {
            skips.push(f.alignment.skip);
        }
        for transform in [Transform::Identity, Transform::Aerated, Transform::Signed] {
            if excluded(f, transform) {
                continue;
            }
            for &skip in &skips {
                let t = f.aligned(skip);
                if let Some(overlap) = compare(&s.terms, &t, transform, min_overlap) {
                    out.push(SeqMatch { a_number: f.a_number.clone(), transform, skip, overlap });
                    break;
                }
            }
        }
    }
    out.sort_by(|a, b| (&a.a_number, a.transform).cmp(&(&b.a_number, b.transform)));
    Ok(out)
}

/// Parses a b-file: lines `n a(n)`, `#` comments and blank lines ignored.
pub fn parse_bfile(a_number: &str, text: &str) -> Result<Fixture> {
    let mut offset = None;
    let mut terms = Vec::new();
    let mut pos = 0;
    for line in text.split_inclusive('\n') {
        let start = pos;
        pos += line.len();
        let body = line.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let mut it = body.split_whitespace();
        let (Some(idx), Some(val)) = (it.next(), it.next()) else {
            return Err(FclError::Parse { offset: start, message: "expected `n a(n)`".into() });
        };
        let lead = line.len() - line.trim_start().len();
        let idx: i64 = idx
            .parse()
            .map_err(|_| FclError::Parse { offset: start + lead, message: format!("bad index {idx:?}") })?;
        let val_at = start + line.find(val).unwrap_or(lead);
        let val: BigInt =
            val.parse().map_err(|_| FclError::Parse { offset: val_at, message: format!("bad term {val:?}") })?;
        match offset {
            None => offset = Some(idx),
            Some(o) if idx != o + terms.len() as i64 => {
                return Err(FclError::Parse { offset: start + lead, message: format!("index {idx} out of sequence") })
            }
            _ => {}
        }
        terms.push(val);
    }
    let Some(offset) = offset else {
        return Err(FclError::Parse { offset: 0, message: "no terms".into() });
    };
    let now = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
    Ok(Fixture {
        a_number: a_number.to_string(),
        offset,
        terms,
        alignment: Alignment { skip: 0, note: "fetched b-file".into() },
        source: Source::Fetched(now),
    })
}

#[derive(Debug)]
pub struct Fetcher {
    pub cache_dir: Option<PathBuf>,
    pub network: bool,
    pub base_url: String,
    write_lock: Mutex<()>,
}

impl Default for Fetcher {
    fn default() -> Self {
        Fetcher::new(None, false)
    }
}

impl Fetcher {
    pub fn new(cache_dir: Option<PathBuf>, network: bool) -> Fetcher {
        Fetcher { cache_dir, network, base_url: "https://oeis.org".into(), write_lock: Mutex::new(()) }
    }

    fn cache_path(&self, a_number: &str) -> Option<PathBuf> {
        self.cache_dir.as_ref().map(|d| d.join(format!("{a_number}.json")))
    }

    /// Bundled fixture, else cache, else network.
    pub fn fetch(&self, store: &FixtureStore, a_number: &str) -> Result<Fixture> {
        validate_a_number(a_number)?;
        if let Some(f) = store.get(a_number) {
            if f.source == Source::Bundled {
                return Ok(f.clone());
            }
        }
        if let Some(p) = self.cache_path(a_number) {
            if p.exists() {
                return Fixture::from_json(&fs::read_to_string(p)?);
            }
        }
        if let Some(f) = store.get(a_number) {
            return Ok(f.clone());
        }
        if !self.network {
            return Err(FclError::NetworkDisabled);
        }
        let f = parse_bfile(a_number, &self.download(a_number)?)?;
        self.write_cache(&f)?;
        Ok(f)
    }

    fn download(&self, a_number: &str) -> Result<String> {
        let url = format!("{}/{a_number}/b{}.txt", self.base_url.trim_end_matches('/'), &a_number[1..]);
        let agent: ureq::Agent =
            ureq::Agent::config_builder().timeout_global(Some(Duration::from_secs(30))).build().into();
        match agent.get(&url).call() {
            Ok(mut resp) => resp.body_mut().read_to_string().map_err(|e| FclError::Io(e.to_string())),
            Err(ureq::Error::StatusCode(404)) => Err(FclError::NotFound(a_number.to_string())),
            Err(e) => Err(FclError::Io(format!("{url}: {e}"))),
        }
    }

    fn write_cache(&self, f: &Fixture) -> Result<()> {
        let Some(path) = self.cache_path(&f.a_number) else { return Ok(()) };
        let _guard = self.write_lock.lock().unwrap_or_else(|e| e.into_inner());
        if let Some(dir) = path.parent() {
            fs::create_dir_all(dir)?;
        }
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, f.to_json())?;
        fs::rename(&tmp, &path)?;
        Ok(())
    }
}

/// Sign of the first nonzero term, for reporting.
pub fn leading_sign(t: &[BigInt]) -> i32 {
    t.iter().find(|x| !x.is_zero()).map_or(0, |x| if x.is_positive() { 1 } else { -1 })
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::distlib::dirac;
    use crate::exactalg::{rat, Poly};
    use crate::ClassF;

    fn names(m: &[SeqMatch]) -> Vec<(String, Transform)> {
        m.iter().map(|x| (x.a_number.clone(), x.transform)).collect()
    }

    #[test]
    fn bundled_store_is_complete() {
        let s = FixtureStore::bundled();
        assert!(s.len() >= 25);
        assert!(s.iter().all(|f| f.terms.len() >= 12 && f.source == Source::Bundled));
        assert_eq!(s.get("A000108").unwrap().terms[5], BigInt::from(42));
    }

    #[test]
    fn catalan_matches() {
        let f = ClassF::new(Poly::from_ints(&[1, -1]), Poly::one()).unwrap();
        let m = match_series(&FixtureStore::bundled(), &f.moments(10).unwrap(), 6).unwrap();
        assert_eq!(names(&m), vec![("A000108".into(), Transform::Identity)]);
    }

    #[test]
    fn darkmatter_is_aerated_ternary() {
        let f = ClassF::new(Poly::from_ints(&[1, 0, -1]), Poly::one()).unwrap();
        let m = match_series(&FixtureStore::bundled(), &f.moments(12).unwrap(), 6).unwrap();
        assert_eq!(names(&m), vec![("A001764".into(), Transform::Aerated)]);
    }

    #[test]
    fn dirac_minus_one_is_signed_ones() {
        let m = match_series(&FixtureStore::bundled(), &dirac(&rat(-1)).moments(12).unwrap(), 6).unwrap();
        assert!(names(&m).contains(&("A000012".into(), Transform::Signed)));
        assert!(names(&m).contains(&("A033999".into(), Transform::Identity)));
        assert!(m.windows(2).all(|w| w[0].a_number <= w[1].a_number));
    }

    #[test]
    fn skip_alignment_is_used() {
        // W(1) translated by 3
        let f = crate::distlib::wigner(&rat(1)).unwrap().translate(&rat(3));
        let m = match_series(&FixtureStore::bundled(), &f.moments(12).unwrap(), 6).unwrap();
        let hit = m.iter().find(|x| x.a_number == "A002212").unwrap();
        assert_eq!(hit.skip, 1);
    }

    #[test]
    fn small_overlap_is_rejected() {
        let f = ClassF::identity();
        assert!(matches!(match_series(&FixtureStore::bundled(), &f.moments(10).unwrap(), 5), Err(FclError::Domain(_))));
    }

    #[test]
    fn validation() {
        assert!(validate_a_number("A000108").is_ok());
        assert!(matches!(validate_a_number("A0"), Err(FclError::Parse { offset: 2, .. })));
        assert!(matches!(validate_a_number("B000108"), Err(FclError::Parse { offset: 0, .. })));
        assert!(matches!(validate_a_number("A00010x"), Err(FclError::Parse { offset: 6, .. })));
        assert!(matches!(validate_a_number("A0001081"), Err(FclError::Parse { offset: 7, .. })));
    }

    #[test]
    fn fetch_precedence() {
        let store = FixtureStore::bundled();
        let fetcher = Fetcher::default();
        assert_eq!(fetcher.fetch(&store, "A000108").unwrap().source, Source::Bundled);
        assert!(matches!(fetcher.fetch(&store, "A0"), Err(FclError::Parse { .. })));
        assert!(matches!(fetcher.fetch(&store, "A999999"), Err(FclError::NetworkDisabled)));
    }

    #[test]
    fn cache_round_trip() {
        let dir = std::env::temp_dir().join(format!("fcl-oeis-test-{}", std::process::id()));
        let fetcher = Fetcher::new(Some(dir.clone()), false);
        let f = parse_bfile("A999998", "# comment\n0 1\n1 2\n\n2 4\n").unwrap();
        fetcher.write_cache(&f).unwrap();
        let got = fetcher.fetch(&FixtureStore::bundled(), "A999998").unwrap();
        assert_eq!(got, f);
        // bundled fixtures are never overwritten
        let mut store = FixtureStore::bundled();
        let mut fake = f.clone();
        fake.a_number = "A000108".into();
        assert!(!store.insert(fake));
        fs::remove_dir_all(dir).unwrap();
    }

    #[test]
    fn bfile_errors() {
        assert!(matches!(parse_bfile("A000001", "0 1\n1 x\n"), Err(FclError::Parse { offset: 6, .. })));
        assert!(matches!(parse_bfile("A000001", "0 1\n2 1\n"), Err(FclError::Parse { offset: 4, .. })));
        assert!(matches!(parse_bfile("A000001", "# only\n"), Err(FclError::Parse { offset: 0, .. })));
        let f = parse_bfile("A000001", "1 5\n2 -7\n").unwrap();
        assert_eq!(f.offset, 1);
        assert_eq!(leading_sign(&f.terms), 1);
    }

    #[test]
    fn json_errors_carry_offsets() {
        let e = Fixture::from_json("{\"a_number\": \"A000001\", \"offset\": 0, \"terms\": [\"1\", \"q\"]}").unwrap_err();
        assert!(matches!(e, FclError::Parse { offset, .. } if offset > 0));
        assert!(Fixture::from_json("{\"a_number\": \"A000001\", \"offset\": 0, \"terms\": []}").is_err());
    }
}
