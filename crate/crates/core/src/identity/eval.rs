use std::collections::BTreeMap;
use std::fmt::Write;

use serde_json::{json, Value};

use super::{builtin_table1, Affine, DslError, IdentityAst, Symbol};
use crate::extremal::{build_family_with, ExtremalError, ExtremalFamily};
use crate::forms::FormCatalog;
use crate::series::json::int_to_json;
use crate::series::{IntSeries, QInt};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityRow {
    pub i: i64,
    pub lhs: QInt,
    pub rhs: QInt,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: IdentityAst,
    pub rows: Vec<IdentityRow>,
    pub all_pass: bool,
}

impl IdentityReport {
    pub fn failures(&self) -> impl Iterator<Item = &IdentityRow> {
        self.rows.iter().filter(|r| !r.pass)
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| json!({"i": r.i, "lhs": int_to_json(&r.lhs), "rhs": int_to_json(&r.rhs), "pass": r.pass}))
            .collect();
        json!({
            "identity": self.identity.to_string(),
            "k": self.identity.k,
            "all_pass": self.all_pass,
            "results": rows,
        })
    }
}

/// Aligned plain-text table for a batch of reports.
pub fn reports_to_text(reports: &[IdentityReport]) -> String {
    let mut out = String::new();
    for rep in reports {
        let status = if rep.all_pass { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "[{status}] {}", rep.identity);
        let lw = rep.rows.iter().map(|r| r.lhs.to_string().len()).max().unwrap_or(0).max(3);
        let rw = rep.rows.iter().map(|r| r.rhs.to_string().len()).max().unwrap_or(0).max(3);
        let _ = writeln!(out, "  {:>4}  {:>lw$}  {:>rw$}  ok", "i", "lhs", "rhs");
        for r in &rep.rows {
            let mark = if r.pass { "yes" } else { "NO" };
            let _ = writeln!(out, "  {:>4}  {:>lw$}  {:>rw$}  {mark}", r.i, r.lhs.to_string(), r.rhs.to_string());
        }
    }
    out
}

/// Largest internal exponents needed from the family and from `J`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Requirements {
    pub family: i64,
    pub j: i64,
}

fn max_over(index: &Affine, i_from: i64, i_to: i64) -> i64 {
    index.at(i_from).max(index.at(i_to))
}

pub fn required_orders(ast: &IdentityAst, i_from: i64, i_to: i64) -> Requirements {
    let half = |p: i64| p.div_euclid(2);
    let mut req = Requirements { family: half(max_over(&ast.lhs, i_from, i_to)), j: 0 };
    for t in &ast.rhs {
        let n = half(max_over(&t.index, i_from, i_to));
        match t.symbol {
            Symbol::G => req.family = req.family.max(n),
            Symbol::J => req.j = req.j.max(n),
        }
    }
    req
}

fn internal_exponent(subscript: i64) -> Result<i64, DslError> {
    if subscript > 0 && subscript % 2 == 0 {
        Ok(subscript / 2)
    } else {
        Err(DslError::InvalidSubscript { subscript })
    }
}

fn g_value(family: &ExtremalFamily, subscript: i64) -> Result<QInt, DslError> {
    let n = internal_exponent(subscript)?;
    if n > family.order() {
        return Err(DslError::BeyondTruncation { symbol: Symbol::G, subscript, available: 2 * family.order() });
    }
    family.constant_coefficient(n).map_err(|e| match e {
        ExtremalError::XDependentCoefficient { .. } => DslError::XDependentCoefficient { subscript },
        other => other.into(),
    })
}

fn j_value(j: &IntSeries, subscript: i64) -> Result<QInt, DslError> {
    let n = internal_exponent(subscript)?;
    j.coefficient(n).map_err(|_| DslError::BeyondTruncation { symbol: Symbol::J, subscript, available: 2 * j.order() })
}

/// Check `ast` for `i_from ≤ i ≤ i_to` against a family and `J`. Exact
/// integer comparison; insufficient orders are an error.
pub fn evaluate(
    ast: &IdentityAst,
    family: &ExtremalFamily,
    j: &IntSeries,
    i_from: i64,
    i_to: i64,
) -> Result<IdentityReport, DslError> {
    if family.k() != ast.k {
        return Err(DslError::KMismatch { identity: ast.k, family: family.k() });
    }
    let mut rows = Vec::new();
    for i in i_from..=i_to {
        let lhs = g_value(family, ast.lhs.at(i))?;
        let mut rhs = QInt::from(0);
        for t in &ast.rhs {
            let sub = t.index.at(i);
            let v = match t.symbol {
                Symbol::J => j_value(j, sub)?,
                Symbol::G => g_value(family, sub)?,
            };
            rhs += v * t.coeff;
        }
        let pass = lhs == rhs;
        rows.push(IdentityRow { i, lhs, rhs, pass });
    }
    let all_pass = rows.iter().all(|r| r.pass);
    Ok(IdentityReport { identity: ast.clone(), rows, all_pass })
}

/// Evaluate a batch, building each family and `J` at the orders the batch
/// needs.
pub fn run_identities(
    catalog: &FormCatalog,
    identities: &[IdentityAst],
    i_from: i64,
    i_to: i64,
) -> Result<Vec<IdentityReport>, DslError> {
    let mut family_orders: BTreeMap<u32, i64> = BTreeMap::new();
    let mut j_order = 1;
    for ast in identities {
        let req = required_orders(ast, i_from, i_to);
        let slot = family_orders.entry(ast.k).or_insert(1);
        *slot = (*slot).max(req.family);
        j_order = j_order.max(req.j);
    }
    let j = catalog.j_paper(j_order);
    let families: BTreeMap<u32, ExtremalFamily> = std::thread::scope(|scope| {
        let handles: Vec<_> = family_orders
            .iter()
            .map(|(&k, &order)| scope.spawn(move || build_family_with(catalog, k, order).map(|f| (k, f))))
            .collect();
        handles.into_iter().map(|h| h.join().expect("family builder panicked")).collect::<Result<_, _>>()
    })?;
    identities.iter().map(|ast| evaluate(ast, &families[&ast.k], &j, i_from, i_to)).collect()
}

/// All built-in identities for `0 ≤ i ≤ i_max`.
pub fn run_suite(i_max: i64) -> Result<Vec<IdentityReport>, DslError> {
    run_identities(&FormCatalog::new(), &builtin_table1(), 0, i_max)
}

/// Number of identities for `k` whose left-hand subscript equals
/// `subscript` for some `0 ≤ i ≤ i_max`.
pub fn coverage(identities: &[IdentityAst], k: u32, subscript: i64, i_max: i64) -> usize {
    identities.iter().filter(|a| a.k == k && (0..=i_max).any(|i| a.lhs.at(i) == subscript)).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::build_family;
    use crate::forms::j_paper;
    use crate::identity::parse;

    #[test]
    fn k2_anchor_rows() {
        let fam = build_family(2, 4).unwrap();
        let j = j_paper(8);
        let r1 = evaluate(&parse("k=2: g[4i+2] = 2*j[2*(4i+2)]").unwrap(), &fam, &j, 0, 0).unwrap();
        assert_eq!(r1.rows[0].lhs, QInt::from(42987520));
        assert!(r1.all_pass);
        let r2 = evaluate(&parse("k=2: g[4i+4] = 2*j[2*(4i+4)] + j[2i+2]").unwrap(), &fam, &j, 0, 0).unwrap();
        assert_eq!(r2.rows[0].rhs, QInt::from(40491909396i64));
        assert!(r2.all_pass);
    }

    #[test]
    fn k1_base_case() {
        let fam = build_family(1, 12).unwrap();
        let j = j_paper(12);
        let rep = evaluate(&parse("k=1: g[2*i+2] = j[2*i+2]").unwrap(), &fam, &j, 0, 11).unwrap();
        assert!(rep.all_pass);
        assert_eq!(rep.rows.len(), 12);
    }

    #[test]
    fn failing_row_keeps_both_values() {
        let fam = build_family(2, 4).unwrap();
        let j = j_paper(8);
        let rep = evaluate(&parse("k=2: g[4i+4] = 2*j[2*(4i+4)] + j[2*(2i+2)]").unwrap(), &fam, &j, 0, 0).unwrap();
        assert!(!rep.all_pass);
        let row = &rep.rows[0];
        assert_eq!(row.lhs, QInt::from(40491909396i64));
        assert_eq!(row.rhs, QInt::from(2 * 20245856256i64 + 21493760));
    }

    #[test]
    fn errors() {
        let fam = build_family(2, 2).unwrap();
        let j = j_paper(4);
        let ast = parse("k=3: g[2] = j[2]").unwrap();
        assert_eq!(evaluate(&ast, &fam, &j, 0, 0), Err(DslError::KMismatch { identity: 3, family: 2 }));
        let ast = parse("k=2: g[4i+2] = 2*j[2*(4i+2)]").unwrap();
        assert!(matches!(evaluate(&ast, &fam, &j, 0, 1), Err(DslError::BeyondTruncation { symbol: Symbol::G, .. })));
        let ast = parse("k=2: g[2] = j[10]").unwrap();
        assert!(matches!(evaluate(&ast, &fam, &j, 0, 0), Err(DslError::BeyondTruncation { symbol: Symbol::J, .. })));
        let ast = parse("k=2: g[3] = j[2]").unwrap();
        assert_eq!(evaluate(&ast, &fam, &j, 0, 0), Err(DslError::InvalidSubscript { subscript: 3 }));
        let ast = parse("k=2: g[2] = g[0]").unwrap();
        assert_eq!(evaluate(&ast, &fam, &j, 0, 0), Err(DslError::InvalidSubscript { subscript: 0 }));
    }

    #[test]
    fn requirements() {
        let ast = parse("k=4: g[8i+8] = 4*j[4*(8i+8)] + 2*j[(8i+8)] + j[2i+2]").unwrap();
        assert_eq!(required_orders(&ast, 0, 10), Requirements { family: 44, j: 176 });
    }

    #[test]
    fn run_identities_extends_orders() {
        let ids = vec![parse("k=2: g[4i+2] = 2*j[2*(4i+2)]").unwrap()];
        let reps = run_identities(&FormCatalog::new(), &ids, 0, 6).unwrap();
        assert!(reps[0].all_pass);
        assert_eq!(reps[0].rows.len(), 7);
    }

    #[test]
    fn text_table_mentions_status() {
        let ids = vec![parse("k=2: g[4i+2] = 2*j[2*(4i+2)]").unwrap()];
        let reps = run_identities(&FormCatalog::new(), &ids, 0, 1).unwrap();
        let text = reports_to_text(&reps);
        assert!(text.starts_with("[PASS] k=2: g[4*i+2] = 2*j[8*i+4]\n"));
        assert!(text.contains("42987520"));
    }
}
