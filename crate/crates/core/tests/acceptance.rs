//! Acceptance criteria 1 to 9. One PASS/FAIL line per criterion; all comparisons are exact
//! polynomial identities (tolerance zero). Exits nonzero on any failure other than the
//! pinned misprint below.

use std::process::ExitCode;
use std::time::Instant;

use knotpoly::invariants::rewrite::{expand_uq, uq_ring, uv_ring};
use knotpoly::invariants::suite::{self, Context, Section};
use knotpoly::invariants::checks::v_at_q;
use knotpoly::invariants::Family;
use knotpoly::polyring::LaurentPoly;

/// Exact comparison: computed minus expected must be the zero polynomial.
const TOLERANCE: &str = "exact (difference must be 0)";

/// Λ̃(u, v) at ω = −1 as published, by table name.
const LAMBDA_UV: [(&str, &str); 18] = [
    ("3_1", "1 + 4 u + u^2 + v"),
    ("4_1", "1 - 6 u + u^2 - v"),
    ("5_1", "1 + 12 u + 19 u^2 + 8 u^3 + u^4 + (3 + 7 u + 3 u^2) v + v^2"),
    ("5_2", "1 + 10 u + 6 u^2 + 2 v"),
    ("6_1", "1 - 10 u + 6 u^2 - 2 v"),
    ("6_2", "1 - 8 u - 15 u^2 + 2 u^3 + u^4 + (-1 - 9 u + u^2) v - v^2"),
    ("6_3", "1 + 2 u + 15 u^2 + 6 u^3 + u^4 + (1 + 9 u + u^2) v + v^2"),
    ("7_1", "1 + 24 u + 86 u^2 + 104 u^3 + 53 u^4 + 12 u^5 + u^6 + (6 + 35 u + 60 u^2 + 33 u^3 + 5 u^4) v + (5 + 10 u + 6 u^2) v^2 + v^3"),
    ("7_4", "(1 + 2 u) (1 + 18 u) + 4 v"),
    ("8_8", "1 + 10 u + 36 u^2 + 28 u^3 + 6 u^4 + 2 (1 + 9 u + 3 u^2) v + 2 v^2"),
    ("8_17", "1 - 14 u - 23 u^2 - 38 u^3 + 10 u^4 + 8 u^5 + u^6 + (-1 - 17 u - 44 u^2 + 5 u^3 + 2 u^4) v + (-2 - 13 u + u^2) v^2 - v^3"),
    ("9_2", "1 + 20 u + 24 u^2 + 4 v"),
    ("10_2", "1 - 150 u^2 - 380 u^3 - 279 u^4 - 44 u^5 + 25 u^6 + 10 u^7 + u^8 + (2 - 55 u - 260 u^2 - 274 u^3 - 58 u^4 + 19 u^5 + 5 u^6) v + (-5 - 62 u - 91 u^2 - 24 u^3 + 5 u^4) v^2 + (-5 - 15 u - 2 u^2) v^3 - v^4"),
    ("10_129", "1 + 10 u + 32 u^2 + 36 u^3 + 6 u^4 + 2 (1 + 8 u + 2 u^2) v + 2 v^2"),
    ("11n34", "1 + 12 u + 8 u^2 + 60 u^3 + 48 u^4 + 8 u^5 + 2 u (1 + 2 u) (-1 + 6 u) v + 2 u^2 v^2"),
    ("11n42", "1 + 12 u + 8 u^2 - 12 u^3 - 2 u v"),
    ("11n73", "1 + 20 u + 10 u^2 + 4 u^3 + u^4 + 2 (1 + 4 u + u^2) v + v^2"),
    ("11n74", "1 + 20 u + 10 u^2 + 4 u^3 + u^4 + 2 (1 + 4 u + u^2) v + v^2"),
];

/// Ṽ₂(u, q) as published: (published name, table name computed, value).
const V2_UQ: [(&str, &str, &str); 12] = [
    ("3_1 mirror", "m3_1", "1 + (q + 2 q^3 - q^4 + q^5 - q^6) u + (q^2 + q^4 - q^5) u^2"),
    ("4_1", "4_1", "1 + (- q^{-3} + q^{-2} - 2 q^{-1} +2 - 2 q + q^2 - q^3) u + (q^{-2} - q^{-1} +1 - q + q^2) u^2"),
    ("5_1 mirror", "m5_1", "1 + (2 q + 3 q^3 - q^4 + 3 q^5 - q^6 + 2 q^7 - q^8 + q^9 - 2 q^{10} + q^{11} - q^{12}) u + (4 q^2 + 7 q^4 - 3 q^5 + 10 q^6 - 6 q^7 + 6 q^8 - 7 q^9 + 3 q^{10} - 3 q^{11}) u^2 + (3 q^3 + 6 q^5 - 3 q^6 + 6 q^7 - 6 q^8 + 3 q^9 - 3 q^{10}) u^3 + (q^4 + q^6 - q^7 + q^8 - q^9) u^4"),
    ("5_2 mirror", "m5_2", "1 + (q + 3 q^3 - q^4 + 3 q^5 - 2 q^6 + 2 q^7 - 2 q^8 + q^9 - q^{10}) u + (3 q^2 - 2 q^3 + 6 q^4 - 3 q^5 + 3 q^6 - 3 q^7 + q^8 - q^9) u^2"),
    ("7_4 mirror", "m7_4", "1 + ( q+ 3 q^{3}+ 4 q^{5}- q^{6} + 5q^{7} - 3 q^{8}+ 4 q^{9} - 4 q^{10} + 2 q^{11} - 3 q^{12} + q^{13} -q^{14} ) u + ( 9 q^{2} - 12 q^{3}+ 22 q^{4} - 12 q^{5} + 26 q^{6}- 17 q^{7} + 15 q^{8} - 14 q^{9} + 5 q^{10}- 6 q^{11} + q^{12} -q^{13}) u^2"),
    ("9_2", "m9_2", "1 + ( q + 3q^{3}+ 4 q^{5}- q^{6}+ 3 q^{7} - 2 q^{8}+ 2 q^{9} - 2 q^{10} + 2 q^{11} - 2 q^{12}+ 2 q^{13} - 2 q^{14} + 2 q^{15} - 2 q^{16}+ q^{17} -q^{18} ) u + (7 q^{2}- 2 q^{3}+ 12 q^{4} - 6 q^{5} + 10 q^{6} - 7 q^{7}+ 9 q^{8}- 7 q^{9} + 7 q^{10} - 7 q^{11}+ 5 q^{12} - 5 q^{13}+ 3 q^{14} - 3 q^{15} + q^{16} -q^{17}) u^2"),
    ("8_8", "8_8", "1 + (- q^{-6} + q^{-5} + 2 q^{-3} - q^{-2} + 2 q^{-1} -2 + q + q^3 + q^4 + q^7 - 2 q^8 + 2 q^9 - q^{10}) u + (- q^{-5} + q^{-4} - q^{-3} + 3 q^{-2} - 4 q^{-1} +7 - 4 q + 12 q^2 - 10 q^3 + 11 q^4 - 9 q^5 + 7 q^6 - 5 q^7 + 2 q^8 - q^9) u^2 + (- 3 q^{-4} + 5 q^{-3} - 10 q^{-2} + 18 q^{-1} -17 + 25 q - 19 q^2 + 19 q^3 - 14 q^4 + 9 q^5 - 6 q^6 + 2 q^7 - q^8) u^3 + (- 3 q^{-3} + 5 q^{-2} - 7 q^{-1} + 13 - 10 q + 12 q^2 - 9 q^3 + 7 q^4 - 5 q^5 + 2 q^6 - q^7) u^4"),
    ("10_129", "10_129", "1 + (- q^{-10} + q^{-9} - q^{-8} + q^{-7} + 2 q^{-4} + q^{-1} -2 + 3 q - 2 q^2 + 3 q^3 - 2 q^4 + q^5) u + (q^{-9} - 3 q^{-8} + q^{-7} + q^{-6} - 4 q^{-5} + 8 q^{-4} - 9 q^{-3} + 11 q^{-2} - 8 q^{-1} + 11 - 5 q + 6 q^2 - 3 q^3 + 3 q^4 - 3 q^5 + 2 q^6 - q^7) u^2 + (2 q^{-8} - 4 q^{-7} + 2 q^{-6} - 10 q^{-4} + 20 q^{-3} - 30 q^{-2} + 42 q^{-1} -38 + 40 q - 26 q^2 + 18 q^3 - 10 q^4 + 4 q^5 - 2 q^6) u^3 + (- 3 q^{-5} + 5 q^{-4} - 8 q^{-3} + 12 q^{-2} - 12 q^{-1} + 16 - 10 q + 8 q^2 - 5 q^3 + 2 q^4 - q^5) u^4"),
    ("11n34", "11n34", "1 + (- q^{-10} + 2 q^{-9} - 2 q^{-7} + 4 q^{-5} - 2 q^{-4} - 4 q^{-3} + 6 q^{-2} - 2 q^{-1} -4 + 6 q - 6 q^2 + 6 q^3 - 7 q^4 + 8 q^5 - 3 q^6 - 4 q^7 + 5 q^8 - q^9 - 2 q^{10} + 2 q^{12} - q^{13}) u + (- 2 q^{-7} + 5 q^{-6} - 5 q^{-5} + 4 q^{-4} - 5 q^{-3} + 11 q^{-2} - 13 q^{-1} + 9 - 4 q + 2 q^2 - q^3 - 2 q^4 + 5 q^5 - 7 q^6 + 2 q^7 + 2 q^8 - q^9 - 2 q^{10} + 4 q^{11} - 2 q^{12}) u^2 + (2 q^{-8} - 5 q^{-7} + 3 q^{-6} + 4 q^{-5} - 15 q^{-4} + 26 q^{-3} - 33 q^{-2} + 41 q^{-1} -48 + 53 q - 53 q^2 + 49 q^3 - 44 q^4 + 36 q^5 - 27 q^6 + 13 q^7 - 5 q^9 + 5 q^{10} - 2 q^{11}) u^3 + (3 q^{-7} - 9 q^{-6} + 12 q^{-5} - 9 q^{-4} - 4 q^{-3} + 23 q^{-2} - 44 q^{-1} + 69 - 85 q + 85 q^2 - 69 q^3 + 44 q^4 - 23 q^5 + 4 q^6 + 9 q^7 - 12 q^8 + 9 q^9 - 3 q^{10}) u^4 + (3 q^{-6} - 9 q^{-5} + 12 q^{-4} - 11 q^{-3} + 17 q^{-1} -28 + 38 q - 38 q^2 + 28 q^3 - 17 q^4 + 11 q^6 - 12 q^7 + 9 q^8 - 3 q^9) u^5 + (q^{-5} - 3 q^{-4} + 3 q^{-3} - 1 q^{-2} - 2 q^{-1} + 5 - 5 q + 5 q^2 - 5 q^3 + 2 q^4 + q^5 - 3 q^6 + 3 q^7 - q^8) u^6"),
    ("11n42", "11n42", "1 + (q^{-10} + 2 q^{-9} - 2 q^{-7} + 4 q^{-5} - 2 q^{-4} - 4 q^{-3} + 6 q^{-2} - 2 q^{-1} -4 + 6 q - 6 q^2 + 6 q^3 - 7 q^4 + 8 q^5 - 3 q^6 - 4 q^7 + 5 q^8 - q^9 - 2 q^{10} + 2 q^{12} - q^{13}) u + (- 2 q^{-7} + 4 q^{-6} - q^{-5} - 2 q^{-4} + 8 q^{-2} - 15 q^{-1} + 17 - 13 q + 11 q^2 - 9 q^3 + 8 q^5 - 12 q^6 + 8 q^7 - 2 q^8 - 2 q^{10} + 4 q^{11} - 2 q^{12}) u^2 + (q^{-8} - 2 q^{-7} + q^{-6} - q^{-5} + 2 q^{-4} - 4 q^{-3} + 7 q^{-2} - 8 q^{-1} + 10 - 10 q + 10 q^2 - 9 q^3 + 5 q^4 - 4 q^5 + 3 q^6 - 4 q^7 + 5 q^8 - 3 q^9 + 2 q^{10} - q^{11}) u^3 + (q^{-5} - 3 q^{-4} + 3 q^{-3} - q^{-2} - q^{-1} + 3 - 4 q + 4 q^2 - 3 q^3 + q^4 + q^5 - 3 q^6 + 3 q^7 - q^8) u^4"),
    ("11n73", "11n73", "1 + (- q^{-13} + 2 q^{-12} - 2 q^{-10} + q^{-9} + 2 q^{-8} - 4 q^{-7} + 4 q^{-5} - 5 q^{-4} + 6 q^{-3} - 6 q^{-2} + 8 q^{-1} -6 + 3 q + 3 q^2 - 2 q^3 - q^4 + 4 q^5 - 2 q^6 + q^9 - q^{10}) u + (- 3 q^{-12} + 7 q^{-11} - 5 q^{-10} + 2 q^{-9} + q^{-8} - 2 q^{-7} - 2 q^{-6} + 2 q^{-5} - 4 q^{-4} + 5 q^{-3} - 5 q^{-2} + 5 q^{-1} + 2 - 5 q + 13 q^2 - 8 q^3 + 6 q^4 - 4 q^5 + 4 q^6 - 3 q^7 + q^8 - q^9) u^2 + (- 5 q^{-11} + 14 q^{-10} - 18 q^{-9} + 22 q^{-8} - 21 q^{-7} + 14 q^{-6} - 12 q^{-5} + 6 q^{-4} - 8 q^{-2} + 14 q^{-1} - 15 + 22 q - 18 q^2 + 20 q^3 - 14 q^4 + 6 q^5 - 2 q^6 - 2 q^7 + q^8) u^3 + (- 6 q^{-10} + 18 q^{-9} - 26 q^{-8} + 36 q^{-7} - 38 q^{-6} + 26 q^{-5} - 15 q^{-4} - 10 q^{-3} + 32 q^{-2} - 40 q^{-1} + 46 - 33 q + 20 q^2 - 9 q^3 - 2 q^4 + 5 q^5 - 6 q^6 + 3 q^7) u^4 + (- 4 q^{-9} + 12 q^{-8} - 16 q^{-7} + 20 q^{-6} - 17 q^{-5} + 2 q^{-4} + 6 q^{-3} - 17 q^{-2} + 26 q^{-1} - 20 + 16 q - 6 q^2 - 5 q^3 + 6 q^4 - 6 q^5 + 3 q^6) u^5 + (- q^{-8} + 3 q^{-7} - 3 q^{-6} + 2 q^{-5} - q^{-4} - 2 q^{-3} + 3 q^{-2} - 3 q^{-1} + 4 - 2 q + q^3 - 2 q^4 + q^5) u^6"),
    ("11n74", "11n74", "1 + (- q^{-13} + 2 q^{-12} - 2 q^{-10} + q^{-9} + 2 q^{-8} - 4 q^{-7} + 4 q^{-5} - 5 q^{-4} + 6 q^{-3} - 6 q^{-2} + 8 q^{-1} - 6 + 3 q + 3 q^2 - 2 q^3 - q^4 + 4 q^5 - 2 q^6 + q^9 - q^{10}) u + (- 2 q^{-12} + 4 q^{-11} - 2 q^{-10} + q^{-8} + 4 q^{-7} - 10 q^{-6} + 8 q^{-5} - 10 q^{-4} + 5 q^{-3} + q^{-2} - q^{-1} + 10 - 11 q + 13 q^2 - 6 q^3 + 3 q^4 - q^5 + 3 q^6 - 3 q^7 + q^8 - q^9) u^2 + (- q^{-11} + 2 q^{-10} - 2 q^{-9} + 2 q^{-8} + 2 q^{-7} - 4 q^{-6} + 4 q^{-5} - 7 q^{-4} + q^{-3} + 6 - q + 4 q^2 - q^4 + q^5 - 2 q^6) u^3 + (q^{-6} - 2 q^{-5} + 2 q^{-4} - 3 q^{-3} + 2 q^{-2} - q^{-1} + 2 + q - q^2 + q^3 - q^4) u^4"),
];

/// The published 11n42 value differs from the computed one by this amount.
const MISPRINT_11N42: &str = "-2 q^-10 u";

struct Line {
    ok: bool,
    known: bool,
    text: String,
}

fn from_section(s: &Section) -> Line {
    let failures: Vec<String> = s.report.failures().map(|c| format!("{} ({})", c.name, c.detail)).collect();
    let text = if failures.is_empty() {
        format!("{} checks", s.report.checks.len())
    } else {
        format!("{} of {} checks failed: {}", failures.len(), s.report.checks.len(), failures.join("; "))
    };
    Line { ok: failures.is_empty(), known: false, text }
}

fn criterion1(ctx: &mut Context) -> Line {
    let ring = uv_ring();
    let mut bad = Vec::new();
    for (knot, value) in LAMBDA_UV {
        let want = LaurentPoly::parse(&ring, value).expect("published value parses");
        match ctx.get(knot, Family::Lambda(2)) {
            Ok(r) if r.form.as_ref() == Some(&want) => {}
            Ok(r) => bad.push(format!("{}: got {:?}", knot, r.form.as_ref().map(|f| f.to_string()))),
            Err(e) => bad.push(format!("{}: {}", knot, e)),
        }
    }
    Line { ok: bad.is_empty(), known: false, text: if bad.is_empty() { "18 of 18 rows".into() } else { bad.join("; ") } }
}

fn criterion4(ctx: &mut Context) -> Line {
    let ring = uq_ring();
    let misprint = LaurentPoly::parse(&ring, MISPRINT_11N42).expect("fixed expression");
    let (mut matched, mut bad, mut known) = (0, Vec::new(), Vec::new());
    for (label, knot, value) in V2_UQ {
        let want = LaurentPoly::parse(&ring, value).expect("published value parses");
        let got = match ctx.get(knot, Family::Vn(2)) {
            Ok(r) => r.form.clone().expect("V_2 has a (u, q) form"),
            Err(e) => {
                bad.push(format!("{}: {}", label, e));
                continue;
            }
        };
        if got == want {
            matched += 1;
            continue;
        }
        let diff = &got - &want;
        // The published value must then break V_2(t, 1) = Delta^2 = 1 while the computed one holds it.
        let breaks = |p: &LaurentPoly| v_at_q(&expand_uq(p).expect("expands"), 1).map(|v| v.is_one()).unwrap_or(false);
        if label == "11n42" && diff == misprint && !breaks(&want) && breaks(&got) {
            known.push(format!("{}: computed - published = {}; the published value gives V_2(t, 1) != 1 although Delta = 1", label, diff));
        } else {
            bad.push(format!("{}: computed - published = {}", label, diff));
        }
    }
    let mut text = format!("{} of 12 listings match", matched);
    for k in known.iter().chain(&bad) {
        text.push_str("; ");
        text.push_str(k);
    }
    Line { ok: bad.is_empty() && known.is_empty(), known: bad.is_empty() && !known.is_empty(), text }
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut ctx = Context::new();
    let titles = [
        "knot table Lambda~(u, v) for 18 knots",
        "rank-2 N = 2 R-matrix sparsity, sample entries (read with t1 <-> t2) and determinants",
        "Lambda_1 = Delta(t1) Delta(t2) up to 7 crossings",
        "V~_2 golden values",
        "V~_2(0, q) = 1 and V_2(t, 1) = Delta(t)^2",
        "duality Lambda_-1 / V_2 and ADO / colored Jones",
        "deg_t V_2 = 4 g",
        "mutation and chirality separations",
        "axioms, closed forms, brute force, diagram independence, gauge and unknot",
    ];
    let mut unexpected = 0;
    for (i, title) in titles.iter().enumerate() {
        let t = Instant::now();
        let line = match i + 1 {
            1 => criterion1(&mut ctx),
            4 => criterion4(&mut ctx),
            9 => from_section(&suite::axioms(&mut ctx)),
            n => from_section(&suite::GOLDEN_SECTIONS[n - 1](&mut ctx)),
        };
        if !line.ok && !line.known {
            unexpected += 1;
        }
        let tag = if line.ok { "PASS" } else { "FAIL" };
        let note = if line.known { " [known misprint in the published listing]" } else { "" };
        println!("{} criterion {}: {}{} | tolerance {} | {} | {:.1}s", tag, i + 1, title, note, TOLERANCE, line.text, t.elapsed().as_secs_f64());
    }
    println!("acceptance finished in {:.1}s, {} unexpected failure(s)", start.elapsed().as_secs_f64(), unexpected);
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
