use crate::series::{IntSeries, QInt};

use super::{delta, j_paper};

/// One of the 24 even unimodular lattices in dimension 24.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NiemeierRecord {
    /// Root-system label, e.g. `"A7^2D5^2"`.
    pub name: &'static str,
    pub coxeter_h: u32,
    /// Massless-state count `24(h + 1)`.
    pub massless: u32,
}

const fn rec(name: &'static str, coxeter_h: u32) -> NiemeierRecord {
    NiemeierRecord { name, coxeter_h, massless: 24 * (coxeter_h + 1) }
}

static CATALOG: [NiemeierRecord; 24] = [
    rec("Leech", 0),
    rec("A1^24", 2),
    rec("A2^12", 3),
    rec("A3^8", 4),
    rec("A4^6", 5),
    rec("D4^6", 6),
    rec("A5^4D4", 6),
    rec("A6^4", 7),
    rec("A7^2D5^2", 8),
    rec("A8^3", 9),
    rec("D6^4", 10),
    rec("A9^2D6", 10),
    rec("E6^4", 12),
    rec("A11D7E6", 12),
    rec("A12^2", 13),
    rec("D8^3", 14),
    rec("A15D9", 16),
    rec("E7^2D10", 18),
    rec("A17E7", 18),
    rec("D12^2", 22),
    rec("A24", 25),
    rec("D16E8", 30),
    rec("E8^3", 30),
    rec("D24", 46),
];

/// All 24 Niemeier lattices, ordered by Coxeter number.
pub fn catalog() -> &'static [NiemeierRecord] {
    &CATALOG
}

pub fn lookup(name: &str) -> Option<&'static NiemeierRecord> {
    CATALOG.iter().find(|r| r.name == name)
}

/// `Θ_Λ = [J + 24(h + 1)]·Δ`.
pub fn niemeier_theta(record: &NiemeierRecord, order: i64) -> IntSeries {
    let j = j_paper(order + 1);
    let shift = IntSeries::monomial(0, QInt::from(record.massless), order + 1);
    j.add(&shift).mul(&delta(order + 1)).truncate(order)
}

/// The catalog as CSV with header `name,coxeter_h,massless`.
pub fn catalog_csv() -> String {
    let mut out = String::from("name,coxeter_h,massless\n");
    for r in catalog() {
        out.push_str(&format!("{},{},{}\n", r.name, r.coxeter_h, r.massless));
    }
    out
}
