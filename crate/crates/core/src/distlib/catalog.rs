//! Translated Marchenko-Pastur and Wigner laws with integer moment sequences.
use crate::classf::ClassF;
use crate::exactalg::{ratio, Rat};

use super::{mp_unchecked, wigner_unchecked};
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogFamily {
    /// `MP(u, s)` translated by `v`.
    Mp { s: Rat, u: Rat, v: Rat },
    /// `W(s)` translated by `u`.
    Wigner { s: Rat, u: Rat },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub a_number: &'static str,
    pub family: CatalogFamily,
    /// Leading sequence terms to drop before `s_0`.
    pub skip: usize,
    /// The sequence lists only the even moments.
    pub aerated: bool,
}

impl CatalogEntry {
    pub fn classf(&self) -> ClassF {
        match &self.family {
            CatalogFamily::Mp { s, u, v } => mp_unchecked(u, s).translate(v),
            CatalogFamily::Wigner { s, u } => wigner_unchecked(s).translate(u),
        }
    }
}

type Q = (i64, i64);

const MP: &[(&str, Q, Q, Q, usize)] = &[
    ("A000108", (1, 1), (1, 1), (0, 1), 0),
    ("A007317", (1, 1), (1, 1), (1, 1), 0),
    ("A064613", (1, 1), (1, 1), (2, 1), 0),
    ("A104455", (1, 1), (1, 1), (3, 1), 0),
    ("A104498", (1, 1), (1, 1), (4, 1), 0),
    ("A154623", (1, 1), (1, 1), (5, 1), 0),
    ("A005043", (1, 1), (1, 1), (-1, 1), 0),
    ("A126930", (1, 1), (1, 1), (-2, 1), 0),
    ("A168491", (1, 1), (-1, 1), (0, 1), 0),
    ("A099323", (1, 1), (-1, 1), (1, 1), 0),
    ("A001405", (1, 1), (-1, 1), (2, 1), 0),
    ("A005773", (1, 1), (-1, 1), (3, 1), 1),
    ("A001700", (1, 1), (-1, 1), (4, 1), 0),
    ("A026378", (1, 1), (-1, 1), (5, 1), 0),
    ("A005573", (1, 1), (-1, 1), (6, 1), 0),
    ("A122898", (1, 1), (-1, 1), (7, 1), 0),
    ("A151374", (1, 1), (2, 1), (0, 1), 0),
    ("A162326", (1, 1), (2, 1), (1, 1), 0),
    ("A337168", (1, 1), (2, 1), (-1, 1), 0),
    ("A060899", (1, 1), (-2, 1), (4, 1), 0),
    ("A151318", (1, 1), (-2, 1), (5, 1), 0),
    ("A005159", (1, 1), (3, 1), (0, 1), 0),
    ("A337167", (1, 1), (3, 1), (1, 1), 0),
    ("A337169", (1, 1), (3, 1), (-1, 1), 0),
    ("A151403", (1, 1), (4, 1), (0, 1), 0),
    ("A156058", (1, 1), (5, 1), (0, 1), 0),
    ("A006318", (2, 1), (1, 1), (0, 1), 0),
    ("A174347", (2, 1), (1, 1), (1, 1), 0),
    ("A052709", (2, 1), (1, 1), (-1, 1), 1),
    ("A126087", (2, 1), (-1, 1), (3, 1), 0),
    ("A151282", (2, 1), (-1, 1), (4, 1), 0),
    ("A151090", (2, 1), (-1, 1), (5, 1), 0),
    ("A225887", (2, 1), (-1, 1), (6, 1), 0),
    ("A156017", (2, 1), (2, 1), (0, 1), 0),
    ("A047891", (3, 1), (1, 1), (0, 1), 0),
    ("A064641", (3, 1), (1, 1), (-1, 1), 0),
    ("A129147", (3, 1), (1, 1), (-2, 1), 0),
    ("A128386", (3, 1), (-1, 1), (4, 1), 0),
    ("A151292", (3, 1), (-1, 1), (5, 1), 0),
    ("A082298", (4, 1), (1, 1), (0, 1), 0),
    ("A062992", (4, 1), (1, 1), (-1, 1), 0),
    ("A129148", (4, 1), (1, 1), (-2, 1), 0),
    ("A330800", (4, 1), (-1, 1), (3, 1), 0),
    ("A121724", (4, 1), (-1, 1), (5, 1), 0),
    ("A344558", (4, 1), (-1, 1), (6, 1), 0),
    ("A330799", (4, 1), (-1, 1), (7, 1), 0),
    ("A194723", (4, 1), (-1, 1), (9, 1), 0),
    ("A082301", (5, 1), (1, 1), (0, 1), 0),
    ("A128387", (5, 1), (-1, 1), (6, 1), 0),
    ("A118376", (1, 2), (2, 1), (1, 1), 0),
    ("A103210", (3, 2), (2, 1), (0, 1), 0),
    ("A306519", (1, 2), (2, 1), (-1, 1), 0),
    ("A151281", (1, 2), (-2, 1), (3, 1), 0),
    ("A129637", (1, 2), (-2, 1), (4, 1), 0),
    ("A151251", (1, 2), (-2, 1), (5, 1), 0),
    ("A134425", (1, 2), (-2, 1), (6, 1), 0),
    ("A103211", (4, 3), (3, 1), (0, 1), 0),
    ("A000957", (1, 4), (2, 1), (-1, 2), 0),
    ("A133305", (5, 4), (4, 1), (0, 1), 0),
    ("A033321", (1, 4), (2, 1), (1, 2), 0),
    ("A344507", (1, 4), (2, 1), (-3, 2), 0),
    ("A033543", (1, 4), (2, 1), (3, 2), 0),
    ("A054341", (1, 4), (-2, 1), (5, 2), 0),
    ("A059738", (1, 4), (-2, 1), (7, 2), 0),
    ("A049027", (1, 4), (-2, 1), (9, 2), 0),
    ("A133306", (6, 5), (5, 1), (0, 1), 0),
    ("A133307", (7, 6), (6, 1), (0, 1), 0),
    ("A133308", (8, 7), (7, 1), (0, 1), 0),
    ("A133309", (9, 8), (8, 1), (0, 1), 0),
    ("A001003", (1, 2), (2, 1), (0, 1), 0),
    ("A007564", (1, 3), (3, 1), (0, 1), 0),
    ("A059231", (1, 4), (4, 1), (0, 1), 0),
    ("A078009", (1, 5), (5, 1), (0, 1), 0),
    ("A078018", (1, 6), (6, 1), (0, 1), 0),
    ("A081178", (1, 7), (7, 1), (0, 1), 0),
    ("A082147", (1, 8), (8, 1), (0, 1), 0),
    ("A082181", (1, 9), (9, 1), (0, 1), 0),
    ("A082148", (1, 10), (10, 1), (0, 1), 0),
    ("A082173", (1, 11), (11, 1), (0, 1), 0),
];

const WIGNER: &[(&str, Q, Q, usize)] = &[
    ("A001006", (1, 1), (1, 1), 0),
    ("A000108", (1, 1), (2, 1), 1),
    ("A002212", (1, 1), (3, 1), 1),
    ("A005572", (1, 1), (4, 1), 0),
    ("A182401", (1, 1), (5, 1), 0),
    ("A025230", (1, 1), (6, 1), 0),
    ("A025235", (2, 1), (1, 1), 0),
    ("A071356", (2, 1), (2, 1), 0),
    ("A001003", (2, 1), (3, 1), 1),
    ("A068764", (2, 1), (4, 1), 0),
    ("A025237", (3, 1), (1, 1), 0),
    ("A122871", (3, 1), (2, 1), 0),
    ("A107264", (3, 1), (3, 1), 0),
    ("A007564", (3, 1), (4, 1), 1),
    ("A068765", (3, 1), (6, 1), 0),
    ("A091147", (4, 1), (1, 1), 0),
    ("A129400", (4, 1), (2, 1), 0),
    ("A003645", (4, 1), (4, 1), 0),
    ("A059231", (4, 1), (5, 1), 1),
    ("A068766", (4, 1), (8, 1), 0),
    ("A091148", (5, 1), (1, 1), 0),
    ("A249925", (5, 1), (2, 1), 0),
    ("A107265", (5, 1), (5, 1), 0),
    ("A078009", (5, 1), (6, 1), 1),
    ("A127848", (5, 1), (6, 1), 0),
    ("A068767", (5, 1), (10, 1), 0),
    ("A091149", (6, 1), (1, 1), 0),
    ("A269730", (6, 1), (5, 1), 0),
    ("A107266", (6, 1), (6, 1), 0),
    ("A078018", (6, 1), (7, 1), 1),
    ("A068768", (6, 1), (12, 1), 0),
    ("A217275", (7, 1), (1, 1), 0),
    ("A081178", (7, 1), (8, 1), 1),
    ("A068769", (7, 1), (14, 1), 0),
    ("A090442", (8, 1), (6, 1), 0),
    ("A082147", (8, 1), (9, 1), 1),
    ("A068770", (8, 1), (16, 1), 0),
    ("A132900", (9, 1), (3, 1), 0),
    ("A101600", (9, 1), (6, 1), 0),
    ("A082181", (9, 1), (10, 1), 1),
    ("A068771", (9, 1), (18, 1), 0),
    ("A068772", (10, 1), (20, 1), 0),
];

const AERATED: &[&str] = &["A000108", "A151374", "A005159", "A151403", "A156058", "A156128", "A156266", "A156270", "A156273", "A156275"];

fn q((n, d): Q) -> Rat {
    ratio(n, d)
}

/// Every catalogued family member, Marchenko-Pastur first.
pub fn catalog() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for &(a, s, u, v, skip) in MP {
        out.push(CatalogEntry { a_number: a, family: CatalogFamily::Mp { s: q(s), u: q(u), v: q(v) }, skip, aerated: false });
    }
    for &(a, s, u, skip) in WIGNER {
        out.push(CatalogEntry { a_number: a, family: CatalogFamily::Wigner { s: q(s), u: q(u) }, skip, aerated: false });
    }
    for (k, a) in AERATED.iter().enumerate() {
        out.push(CatalogEntry {
            a_number: a,
            family: CatalogFamily::Wigner { s: q((k as i64 + 1, 1)), u: q((0, 1)) },
            skip: 0,
            aerated: true,
        });
    }
    out
}
