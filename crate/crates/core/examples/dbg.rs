use skein_core::rational::RationalFunction;
use skein_core::trace::*;
use std::collections::BTreeSet;

fn rf(e: i64) -> RationalFunction { RationalFunction::t_pow(e) }

fn reduce_y(p: &TracePoly, a: &TracePoly, b: &TracePoly) -> TracePoly {
    let y = y_gen();
    let mut cur = p.clone();
    while cur.degree_of(&y) > 1 {
        let parts = cur.by_degree_of(&y);
        let mut next = TracePoly::zero();
        for (d, cof) in parts {
            if d < 2 {
                let mut m = cof;
                for _ in 0..d { m = &m * &TracePoly::gen(y.clone()); }
                next = &next + &m;
            } else {
                let mut m = cof;
                for _ in 0..(d - 2) { m = &m * &TracePoly::gen(y.clone()); }
                next = &next + &(&(&m * a) * &TracePoly::gen(y.clone()));
                next = &next + &(&m * b);
            }
        }
        cur = next;
    }
    cur
}

fn solve(ws: &[TracePoly], target: &TracePoly) -> Option<Vec<RationalFunction>> {
    let mut monos: BTreeSet<TraceMonomial> = BTreeSet::new();
    for w in ws { for (m, _) in w.terms() { monos.insert(m.clone()); } }
    for (m, _) in target.terms() { monos.insert(m.clone()); }
    let monos: Vec<_> = monos.into_iter().collect();
    let n = ws.len();
    let mut rows: Vec<Vec<RationalFunction>> = monos.iter().map(|m| {
        let mut row: Vec<RationalFunction> = ws.iter().map(|w| w.coeff(m)).collect();
        row.push(target.coeff(m));
        row
    }).collect();
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for c in 0..n {
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, pr);
        let inv = rows[r][c].inverse().unwrap();
        for v in rows[r].iter_mut() { *v = &*v * &inv; }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for cc in 0..=n {
                    let sub = &rows[r][cc] * &f;
                    rows[i][cc] = &rows[i][cc] - &sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    for row in &rows {
        if row[..n].iter().all(|v| v.is_zero()) && !row[n].is_zero() { return None; }
    }
    let mut sol = vec![RationalFunction::zero(); n];
    for (ri, &c) in pivots.iter().enumerate() { sol[c] = rows[ri][n].clone(); }
    Some(sol)
}

fn main() {
    let x = TracePoly::x(1);
    let x2sq = &x * &x;
    let e_a = &TracePoly::scalar(rf(2)) - &x2sq.scale(&rf(2));
    let e_b = &(&TracePoly::scalar(rf(4)) + &TracePoly::one()) - &x2sq.scale(&rf(4));
    let red = |p: &TracePoly| reduce_y(p, &e_a, &e_b);
    let trw = |w: &str| red(&skein_core::skein::trace_word(&skein_core::skein::AlphaWord::parse(w).unwrap(), 2).unwrap().merge_knot_variables());
    let c = |v: i64, e: i64| RationalFunction::from_laurent(skein_core::laurent::LaurentPoly::term(v, e));
    let yv = TracePoly::gen(y_gen());
    let x2 = &x * &x;
    let x4 = &x2 * &x2;
    let x6 = &x4 * &x2;

    let mut lam0 = TracePoly::scalar(c(-1, 0));
    lam0 = &lam0 + &TracePoly::scalar(c(1, 8));
    lam0 = &lam0 + &x2.scale(&c(-6, 8));
    lam0 = &lam0 + &x4.scale(&c(5, 8));
    lam0 = &lam0 + &x6.scale(&c(-1, 8));
    lam0 = &lam0 + &yv.scale(&c(-1, -2));
    lam0 = &lam0 + &yv.scale(&c(-1, 6));
    lam0 = &lam0 + &(&x2 * &yv).scale(&c(3, 6));
    lam0 = &lam0 + &(&x4 * &yv).scale(&c(-1, 6));

    // strategy: Lambda_0 = L . y should relate to the L-words with an extra
    // a1 a2 / loop inserted; try dictionary of core words with various tails
    let dict: Vec<String> = {
        let mut d = Vec::new();
        for p in 2..=6 {
            let core = format!("a2^-1 a1^-1{}", " a2".repeat(p));
            for tail in ["", " a1", " a1 a2 a1", " a1 a2", " a1^-1 a2^-1",
                         " a1^-1 a2^-1 a1^-1 a2^-1", " a1^-1 a2^-1 a1^-1",
                         " a1^-1", " a2 a1", " a1 a1"] {
                d.push(format!("{core}{tail}"));
            }
        }
        d
    };
    let ws: Vec<TracePoly> = dict.iter().map(|w| trw(w)).collect();
    match solve(&ws, &lam0) {
        Some(sol) => {
            println!("Lambda0 combination:");
            for (i, s) in sol.iter().enumerate() {
                if !s.is_zero() { println!("   [{}] * {}", s, dict[i]); }
            }
        }
        None => println!("Lambda0: still no combination"),
    }
}
