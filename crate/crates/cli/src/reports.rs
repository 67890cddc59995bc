//! Builders for the reproduction reports: the A4 correction-coefficient
//! table (figure1) and the A3 reflection-recursion failure table
//! (a3-adtable). Each report carries the computed rows in canonical order,
//! a source-ordered view, and a diff against the frozen reference rows.

use std::collections::BTreeMap;

use casselman::casselman::{ad_recursion_check, symbolic_engine, AdFailure};
use casselman::klpoly::KLTable;
use casselman::symbolics::QLaurent;
use casselman::weyl::{parse_word, CartanType, ElemIdx, RootSystem, WeylGroup};
use serde::Serialize;

use crate::reference;

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Figure1Row {
    pub u: String,
    pub v: String,
    pub c: QLaurent,
    pub c_text: String,
    pub precedes: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Figure1Report {
    pub group: String,
    /// Rows with c != 0, ordered by (l(u), l(v), canonical forms).
    pub rows: Vec<Figure1Row>,
    pub nonzero_pairs: usize,
    pub precedes_pairs: usize,
    /// Covering pairs among the nonzero-c rows. Zero in practice: covers
    /// never carry a nonzero coefficient, so including them in the
    /// precedence relation would not change the table.
    pub cover_pairs_with_nonzero_c: usize,
    /// Precedes-pairs whose c is not q^-1 - q^-2.
    pub precedes_regularity_exceptions: Vec<Figure1Row>,
    /// The same rows in the source table's reading order.
    pub source_order_view: Vec<Figure1Row>,
    /// Multiset differences against the frozen reference rows.
    pub reference_diffs: Vec<String>,
    pub notes: Vec<String>,
}

/// Scans all of A4 for pairs with nonzero correction coefficient and
/// classifies them by the precedence criterion.
pub fn figure1_report() -> Figure1Report {
    let g = WeylGroup::build(RootSystem::new(CartanType::A, 4).unwrap());
    let mut kl = KLTable::new(g.clone());
    let regular = QLaurent::monomial(1, -1).add(&QLaurent::monomial(-1, -2));

    let mut keyed: BTreeMap<(u32, u32, ElemIdx, ElemIdx), Figure1Row> = BTreeMap::new();
    for (u, v) in g.strict_pairs() {
        let c = kl.c_coeff(u, v);
        if c.is_zero() {
            continue;
        }
        let row = Figure1Row {
            u: g.word_string(u),
            v: g.word_string(v),
            c_text: c.to_string(),
            c,
            precedes: kl.precedes(u, v),
        };
        keyed.insert((g.length(u), g.length(v), u, v), row);
    }
    let rows: Vec<Figure1Row> = keyed.into_values().collect();
    let precedes_pairs = rows.iter().filter(|r| r.precedes).count();
    let cover_pairs_with_nonzero_c = rows
        .iter()
        .filter(|r| {
            let u = g.from_word(&parse_word(&r.u).unwrap()).unwrap();
            let v = g.from_word(&parse_word(&r.v).unwrap()).unwrap();
            g.length(v) == g.length(u) + 1
        })
        .count();
    let exceptions: Vec<Figure1Row> = rows
        .iter()
        .filter(|r| r.precedes && r.c != regular)
        .cloned()
        .collect();

    // Source-order view and reference diff, comparing by element (the
    // reference words are not canonical).
    let mut source_view = Vec::new();
    let mut diffs = Vec::new();
    let mut seen_pairs = Vec::new();
    for (i, &(uw, vw, c_text, prec)) in reference::FIGURE1_ROWS.iter().enumerate() {
        let u = g.from_word(&parse_word(uw).unwrap()).unwrap();
        let v = g.from_word(&parse_word(vw).unwrap()).unwrap();
        seen_pairs.push((u, v));
        let computed_c = kl.c_coeff(u, v);
        let computed = Figure1Row {
            u: g.word_string(u),
            v: g.word_string(v),
            c_text: computed_c.to_string(),
            c: computed_c,
            precedes: kl.precedes(u, v),
        };
        if computed.c_text != c_text {
            diffs.push(format!(
                "row {i}: ({uw}, {vw}) has c = {} but the source prints {c_text}",
                computed.c_text
            ));
        }
        if computed.precedes != prec {
            diffs.push(format!(
                "row {i}: ({uw}, {vw}) precedes = {} but the source marks {prec}",
                computed.precedes
            ));
        }
        source_view.push(computed);
    }
    seen_pairs.sort_unstable();
    let mut computed_pairs: Vec<(ElemIdx, ElemIdx)> = rows
        .iter()
        .map(|r| {
            (
                g.from_word(&parse_word(&r.u).unwrap()).unwrap(),
                g.from_word(&parse_word(&r.v).unwrap()).unwrap(),
            )
        })
        .collect();
    computed_pairs.sort_unstable();
    if computed_pairs != seen_pairs {
        diffs.push("computed nonzero-c pair set differs from the reference rows".to_string());
    }

    let mut notes = vec![format!(
        "source row {} prints a stray token after its v entry; v is read as {}",
        reference::FIGURE1_STRAY_TOKEN_ROW,
        reference::FIGURE1_ROWS[reference::FIGURE1_STRAY_TOKEN_ROW].1
    )];
    if !exceptions.is_empty() {
        notes.push(format!(
            "{} of {} precedes-pairs have c != q^-1 - q^-2; the source table prints the same \
             values, against the regularity claim stated alongside it",
            exceptions.len(),
            precedes_pairs
        ));
    }

    Figure1Report {
        group: "A4".to_string(),
        nonzero_pairs: rows.len(),
        precedes_pairs,
        cover_pairs_with_nonzero_c,
        precedes_regularity_exceptions: exceptions,
        rows,
        source_order_view: source_view,
        reference_diffs: diffs,
        notes,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AdTableReport {
    pub group: String,
    pub triples_checked: usize,
    /// Failing triples in canonical order: (u, v, t, P, Q).
    pub rows: Vec<AdFailure>,
    pub reference_diffs: Vec<String>,
}

/// Runs the reflection-recursion check on A3 symbolically and compares the
/// failing triples against the frozen table.
pub fn a3_adtable_report() -> AdTableReport {
    let g = WeylGroup::build(RootSystem::new(CartanType::A, 3).unwrap());
    let mut engine = symbolic_engine(g.clone());
    let mut kl = KLTable::new(g.clone());
    let scan = ad_recursion_check(&mut engine, &mut kl, false).expect("A3 is simply laced");

    let key = |row: &AdFailure| {
        let u = g.from_word(&parse_word(&row.u).unwrap()).unwrap();
        let v = g.from_word(&parse_word(&row.v).unwrap()).unwrap();
        let t = g.from_word(&parse_word(&row.t).unwrap()).unwrap();
        (g.length(u), g.length(v), u, v, t)
    };
    let mut rows = scan.failures.clone();
    rows.sort_by_key(&key);

    let mut diffs = Vec::new();
    let mut expected: Vec<((u32, u32, ElemIdx, ElemIdx, ElemIdx), (String, String))> =
        reference::A3_AD_FAILURE_ROWS
            .iter()
            .map(|&(u, v, t, p, q)| {
                let fake = AdFailure {
                    u: u.to_string(),
                    v: v.to_string(),
                    t: t.to_string(),
                    p: String::new(),
                    q: String::new(),
                    r_recursion_holds: false,
                    m_factor_holds: false,
                };
                (key(&fake), (p.to_string(), q.to_string()))
            })
            .collect();
    expected.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    let computed: Vec<((u32, u32, ElemIdx, ElemIdx, ElemIdx), (String, String))> = rows
        .iter()
        .map(|row| (key(row), (row.p.clone(), row.q.clone())))
        .collect();
    if computed != expected {
        diffs.push(format!(
            "failing-triple table differs from the reference ({} computed vs {} reference rows)",
            computed.len(),
            expected.len()
        ));
    }

    AdTableReport {
        group: "A3".to_string(),
        triples_checked: scan.triples_checked,
        rows,
        reference_diffs: diffs,
    }
}
