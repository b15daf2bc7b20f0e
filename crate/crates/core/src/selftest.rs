//! Built-in checks: the acceptance criteria plus a few further invariants.
//! Each check returns a one-line summary on success.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::Rng;

use crate::abp::{flattening_ranks, ncw, x2y_width_two, NcAbp};
use crate::algebra::{waring_expand, DensePoly, Field, LinearForm, Matrix, WaringPoint, Zeta6, Q};
use crate::eval::symbolic::expand_tableau;
use crate::eval::{
    eval_abp, eval_naive, eval_treewidth, eval_treewidth_minfill, gl_transform_point,
    hwv_unipotent_check, hwv_weight_check, multiplicity, multiplicity_symbolic, weight_factor,
};
use crate::io;
use crate::random::{self, diagonal};
use crate::reductions::{
    count_colorings_bruteforce, gen_3col_counting, gen_3col_decision, nonisomorphic_graphs,
    DEFAULT_COUNTING_DEGREE, DEFAULT_DECISION_DEGREE,
};
use crate::tableau::{grid_family, Partition, Tableau};
use crate::treedec::{build_computation_tree, minfill_decomposition};

pub type Outcome = Result<String, String>;

pub struct Check {
    pub name: &'static str,
    pub run: fn() -> Outcome,
}

/// The nine acceptance criteria, in order.
pub fn criteria() -> Vec<Check> {
    vec![
        Check {
            name: "evaluator agreement",
            run: evaluator_agreement,
        },
        Check {
            name: "width certificates",
            run: width_certificates,
        },
        Check {
            name: "border rank bound",
            run: border_bound,
        },
        Check {
            name: "highest weight properties",
            run: hwv_properties,
        },
        Check {
            name: "discriminant regression",
            run: discriminant,
        },
        Check {
            name: "coloring oracles",
            run: coloring_oracles,
        },
        Check {
            name: "chow layers",
            run: chow,
        },
        Check {
            name: "treewidth advantage",
            run: treewidth_advantage,
        },
        Check {
            name: "multiplicity pins",
            run: multiplicity_pins,
        },
    ]
}

/// Further invariants not covered by the criteria.
pub fn invariants() -> Vec<Check> {
    vec![
        Check {
            name: "column permutation invariance",
            run: column_permutations,
        },
        Check {
            name: "homogeneity",
            run: homogeneity,
        },
        Check {
            name: "representation independence",
            run: representation_independence,
        },
        Check {
            name: "repeated columns vanish",
            run: zero_law,
        },
        Check {
            name: "file round trips",
            run: round_trips,
        },
    ]
}

fn q(v: i64) -> Q {
    Q::from_i64(v)
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn x_pow(d: u32, y: u32) -> DensePoly<Q> {
    DensePoly::monomial(vec![d - y, y])
}

fn evaluator_agreement() -> Outcome {
    let mut rng = random::rng(0xA11);
    let cases = 240;
    let mut nonzero = 0;
    for case in 0..cases {
        let n = rng.gen_range(1..=6);
        let d = rng.gen_range(1..=5);
        let m = rng.gen_range(1..=4);
        let r = rng.gen_range(1..=3);
        let attempts = if case % 5 == 0 { 1 } else { 20 };
        let t = random::tableau(&mut rng, n, d, m, attempts);
        let p = random::waring_point(&mut rng, d as u32, m, r, -5, 5);
        let a = NcAbp::from_waring(&p).map_err(err)?;
        let naive = eval_naive(&t, &p).map_err(err)?;
        let abp = eval_abp(&t, &a).map_err(err)?;
        let tw = eval_treewidth_minfill(&t, &a, case % 2 == 0).map_err(err)?;
        check(naive == abp && abp == tw, || {
            format!("case {case}: {t} gives {naive} / {abp} / {tw}")
        })?;
        nonzero += usize::from(!naive.is_zero());
    }
    Ok(format!("{cases} instances, {nonzero} nonzero"))
}

fn width_certificates() -> Outcome {
    let x2y = x_pow(3, 1);
    check(ncw(&x2y).map_err(err)? == 2, || "ncw(x²y) != 2".into())?;
    check(x2y_width_two::<Q>().eval_dense() == x2y, || {
        "width-two ABP does not compute x²y".into()
    })?;
    let mm = DensePoly::from_terms(
        3,
        4,
        [
            (vec![3, 0, 0, 0], q(1)),
            (vec![1, 1, 1, 0], q(3)),
            (vec![0, 1, 1, 1], q(3)),
            (vec![0, 0, 0, 3], q(1)),
        ],
    )
    .map_err(err)?;
    check(ncw(&mm).map_err(err)? == 4, || {
        "ncw of the matrix multiplication polynomial != 4".into()
    })?;
    for d in 1..=8 {
        check(ncw(&x_pow(d, 0)).map_err(err)? == 1, || {
            format!("ncw(x^{d}) != 1")
        })?;
    }
    let mut rng = random::rng(0xB22);
    let mut done = 0;
    while done < 60 {
        let d = rng.gen_range(1..=5);
        let m = rng.gen_range(1..=4);
        let p = random::dense_poly(&mut rng, d, m, -4, 4, 0.5);
        if p.is_zero() {
            continue;
        }
        let a = NcAbp::minimize(&p).map_err(err)?;
        let ranks = flattening_ranks(&p).map_err(err)?;
        check(a.layers() == ranks.as_slice(), || {
            format!("layers {:?} vs ranks {ranks:?}", a.layers())
        })?;
        check(a.eval_dense() == p, || {
            format!("round trip failed for d={d}, m={m}")
        })?;
        done += 1;
    }
    Ok(format!("pins hold, {done} minimized round trips"))
}

fn border_bound() -> Outcome {
    let mut rng = random::rng(0xC33);
    let mut done = 0;
    while done < 120 {
        let d = rng.gen_range(1..=6);
        let m = rng.gen_range(1..=4);
        let r = rng.gen_range(1..=4);
        let p = random::waring_point(&mut rng, d, m, r, -5, 5);
        let f = waring_expand(&p);
        if f.is_zero() {
            continue;
        }
        let w = ncw(&f).map_err(err)?;
        check(w <= r, || format!("ncw {w} exceeds rank {r}"))?;
        done += 1;
    }
    for d in 3..=8 {
        check(ncw(&x_pow(d, 1)).map_err(err)? == 2, || {
            format!("ncw(x^{}y) != 2", d - 1)
        })?;
    }
    Ok(format!("{done} random points, x^(d-1)y for d = 3..8"))
}

fn hwv_properties() -> Outcome {
    let disc = Tableau::from_rows(vec![vec![1, 1], vec![2, 2]]).map_err(err)?;
    let p_sq = WaringPoint::from_forms(
        2,
        vec![LinearForm::from_i64(&[1, 0]), LinearForm::from_i64(&[0, 1])],
    )
    .map_err(err)?;
    let alpha = [q(2), q(1)];
    let scaled = gl_transform_point(&diagonal(&alpha), &p_sq).map_err(err)?;
    check(weight_factor(&disc, &alpha) == q(4), || {
        "weight factor != 4".into()
    })?;
    check(eval_naive(&disc, &scaled).map_err(err)? == q(8), || {
        "scaled value != 8".into()
    })?;
    check(eval_naive(&disc, &p_sq).map_err(err)? == q(2), || {
        "base value != 2".into()
    })?;

    let mut rng = random::rng(0xD44);
    let cases = 60;
    for case in 0..cases {
        let n = rng.gen_range(1..=4);
        let d = rng.gen_range(1..=4);
        let m = rng.gen_range(2..=4);
        let r = rng.gen_range(1..=3);
        let t = random::tableau(&mut rng, n, d, m, 20);
        let p = random::waring_point(&mut rng, d as u32, m, r, -5, 5);
        let alpha = random::nonzero_vector(&mut rng, m, -3, 3);
        let u = random::unit_upper_triangular(&mut rng, m, -3, 3);
        check(hwv_weight_check(&t, &p, &alpha).map_err(err)?, || {
            format!("case {case}: weight check fails on {t}")
        })?;
        check(hwv_unipotent_check(&t, &p, &u).map_err(err)?, || {
            format!("case {case}: unipotent check fails on {t}")
        })?;
    }
    Ok(format!("{cases} random cases, 8 = 4·2 pinned"))
}

fn discriminant() -> Outcome {
    let disc = Tableau::from_rows(vec![vec![1, 1], vec![2, 2]]).map_err(err)?;
    // Symbolic variables are indexed along exponents(2, 2) = [x², xy, y²].
    let sym = expand_tableau(&disc, 2).map_err(err)?;
    let constant = sym.terms.get(&vec![1, 1]).cloned().unwrap_or_default();
    let expected: BTreeMap<Vec<usize>, Q> = [
        (vec![1, 1], constant.clone()),
        (vec![0, 2], constant.clone() * q(-4)),
    ]
    .into();
    check(sym.terms == expected, || {
        format!("expansion {:?} is not a multiple of b²−4ac", sym.terms)
    })?;
    check(
        constant == Q::new(q(-1).to_integer(), q(2).to_integer()),
        || format!("constant {constant}"),
    )?;

    let mut rng = random::rng(0xE55);
    let points = 25;
    for _ in 0..points {
        let r = rng.gen_range(1..=3);
        let p = random::waring_point(&mut rng, 2, 2, r, -5, 5);
        let f = waring_expand(&p);
        let (a, b, c) = (f.coeff(&[2, 0]), f.coeff(&[1, 1]), f.coeff(&[0, 2]));
        let want = constant.clone() * (b.clone() * &b - q(4) * a * c);
        let got = eval_naive(&disc, &p).map_err(err)?;
        check(got == want, || format!("{got} != {want}"))?;
    }
    Ok(format!("constant {constant}, {points} points"))
}

fn coloring_oracles() -> Outcome {
    let graphs = nonisomorphic_graphs(5);
    check(graphs.len() == 34, || {
        format!("{} graph classes", graphs.len())
    })?;
    let mut counted = 0;
    for g in &graphs {
        let count = count_colorings_bruteforce(g).map_err(err)?;
        let (t, p) = gen_3col_decision(g, DEFAULT_DECISION_DEGREE).map_err(err)?;
        let v = eval_naive(&t, &p).map_err(err)?;
        check(v >= Q::from_i64(0), || {
            format!("negative decision value on {g:?}")
        })?;
        check(v.is_zero() == (count == 0), || {
            format!("decision value {v} but {count} colorings on {g:?}")
        })?;
        if g.max_degree() <= 3 {
            let (t, p) = gen_3col_counting(g, DEFAULT_COUNTING_DEGREE).map_err(err)?;
            let v = eval_naive(&t, &p).map_err(err)?;
            let want = Zeta6::from(Q::from_integer((count as i64).into()));
            check(v.is_rational() && v == want, || {
                format!("counting value {v} but {count} colorings on {g:?}")
            })?;
            counted += 1;
        }
    }
    Ok(format!(
        "34 decision instances, {counted} counting instances"
    ))
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn chow() -> Outcome {
    let mut rng = random::rng(0xF66);
    let mut cases = 0;
    for d in 1..=6 {
        for m in 1..=3 {
            let forms: Vec<LinearForm<Q>> = (0..d)
                .map(|_| random::linear_form(&mut rng, m, -4, 4))
                .collect();
            let a = NcAbp::chow(&forms).map_err(err)?;
            let sizes: Vec<usize> = (0..=d).map(|k| binomial(d, k)).collect();
            check(a.layers() == sizes.as_slice(), || {
                format!("layers {:?} for d={d}", a.layers())
            })?;
            let product = forms
                .iter()
                .fold(DensePoly::constant(q(1), m), |acc, l| acc.mul_linear(l));
            check(a.eval_dense() == product, || {
                format!("product mismatch for d={d}, m={m}")
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} products, d ≤ 6"))
}

fn grid_point(rng: &mut random::Rng64) -> WaringPoint<Q> {
    loop {
        let p = random::waring_point(rng, 4, 2, 2, -3, 3);
        let det = Matrix::from_rows(p.terms.iter().map(|(_, l)| l.coeffs.clone()).collect()).det();
        if !det.is_zero() {
            return p;
        }
    }
}

fn treewidth_advantage() -> Outcome {
    let mut rng = random::rng(0x177);
    for k in 1..=2 {
        let t = grid_family(k).map_err(err)?;
        let p = grid_point(&mut rng);
        let a = NcAbp::from_waring(&p).map_err(err)?;
        let ct = build_computation_tree(
            &t,
            &minfill_decomposition(&t.graph().map_err(err)?.simple()),
            false,
        )
        .map_err(err)?;
        let tw = eval_treewidth(&t, &a, &ct).map_err(err)?;
        let naive = eval_naive(&t, &p).map_err(err)?;
        check(tw == naive, || format!("k={k}: {tw} != {naive}"))?;
    }
    let t = grid_family(3).map_err(err)?;
    let p = grid_point(&mut rng);
    let a = NcAbp::from_waring(&p).map_err(err)?;
    let start = Instant::now();
    let td = minfill_decomposition(&t.graph().map_err(err)?.simple());
    let ct = build_computation_tree(&t, &td, false).map_err(err)?;
    let v = eval_treewidth(&t, &a, &ct).map_err(err)?;
    let elapsed = start.elapsed();
    check(elapsed < Duration::from_secs(600), || {
        format!("k=3 took {elapsed:?}")
    })?;
    Ok(format!(
        "k ≤ 2 agree with naive; k=3 (n={}, width {}) in {:.2?}, value has {} digits",
        t.n(),
        td.width(),
        elapsed,
        v.numer().to_string().len()
    ))
}

fn multiplicity_pins() -> Outcome {
    let mut out = Vec::new();
    for (parts, want) in [(vec![2, 2], 1), (vec![3, 1], 0), (vec![4], 1)] {
        let shape = Partition::new(parts).map_err(err)?;
        let sampled = multiplicity(&shape, 2, 2, 2, 8, 1).map_err(err)?.value;
        let exact = multiplicity_symbolic(&shape, 2, 2, 2).map_err(err)?;
        check(sampled == want && exact == want, || {
            format!("{shape}: sampled {sampled}, symbolic {exact}, expected {want}")
        })?;
        out.push(format!("{shape}→{want}"));
    }
    Ok(out.join(" "))
}

fn random_case(rng: &mut random::Rng64, attempts: usize) -> (Tableau, WaringPoint<Q>) {
    let n = rng.gen_range(1..=6);
    let d = rng.gen_range(1..=5);
    let m = rng.gen_range(1..=4);
    let r = rng.gen_range(1..=3);
    let t = random::tableau(rng, n, d, m, attempts);
    let p = random::waring_point(rng, d as u32, m, r, -5, 5);
    (t, p)
}

fn column_permutations() -> Outcome {
    let mut rng = random::rng(0x288);
    let cases = 60;
    for case in 0..cases {
        let (t, p) = random_case(&mut rng, 20);
        let mut cols = t.columns();
        cols.reverse();
        cols.sort_by_key(|c| std::cmp::Reverse(c.len()));
        let height = cols.first().map_or(0, Vec::len);
        let rows = (0..height)
            .map(|i| cols.iter().filter_map(|c| c.get(i).copied()).collect())
            .collect();
        let s = Tableau::new(rows, t.n(), t.d()).map_err(err)?;
        let a = NcAbp::from_waring(&p).map_err(err)?;
        let v = eval_naive(&t, &p).map_err(err)?;
        let w = eval_abp(&s, &a).map_err(err)?;
        let x = eval_treewidth_minfill(&s, &a, false).map_err(err)?;
        check(v == w && w == x, || format!("case {case}: {t} vs {s}"))?;
    }
    Ok(format!("{cases} cases"))
}

fn homogeneity() -> Outcome {
    let mut rng = random::rng(0x399);
    let cases = 60;
    for case in 0..cases {
        let (t, p) = random_case(&mut rng, 20);
        let c = random::int(&mut rng, -4, 4);
        let lhs = eval_naive(&t, &p.scale(&c)).map_err(err)?;
        let rhs = Field::pow(&c, t.n() as u32) * eval_naive(&t, &p).map_err(err)?;
        check(lhs == rhs, || format!("case {case}: {t}"))?;
    }
    Ok(format!("{cases} cases"))
}

fn representation_independence() -> Outcome {
    let mut rng = random::rng(0x4AA);
    let mut done = 0;
    while done < 60 {
        let (t, p) = random_case(&mut rng, 20);
        let f = waring_expand(&p);
        if f.is_zero() {
            continue;
        }
        let minimal = NcAbp::minimize(&f).map_err(err)?;
        let a = NcAbp::from_waring(&p).map_err(err)?;
        let (u, v) = (
            eval_abp(&t, &minimal).map_err(err)?,
            eval_abp(&t, &a).map_err(err)?,
        );
        check(u == v, || format!("{t}: {u} != {v}"))?;
        done += 1;
    }
    Ok(format!("{done} cases"))
}

fn zero_law() -> Outcome {
    let mut rng = random::rng(0x5BB);
    let mut done = 0;
    while done < 40 {
        let (t, p) = random_case(&mut rng, 1);
        if !t.has_column_repeat() {
            continue;
        }
        let a = NcAbp::from_waring(&p).map_err(err)?;
        let zero = eval_naive(&t, &p).map_err(err)?.is_zero()
            && eval_abp(&t, &a).map_err(err)?.is_zero()
            && eval_treewidth_minfill(&t, &a, false)
                .map_err(err)?
                .is_zero();
        check(zero, || format!("{t} does not vanish"))?;
        done += 1;
    }
    Ok(format!("{done} cases"))
}

fn round_trips() -> Outcome {
    let mut rng = random::rng(0x6CC);
    let cases = 40;
    for _ in 0..cases {
        let (t, p) = random_case(&mut rng, 20);
        check(
            io::tableau_from_json(&io::tableau_to_json(&t)).map_err(err)? == t,
            || "tableau".into(),
        )?;
        let back = io::point_from_json(&io::point_to_json(&p)).map_err(err)?;
        check(back == io::Dual::Rational(p.clone()), || "point".into())?;
        let a = NcAbp::from_waring(&p).map_err(err)?;
        check(
            io::abp_from_json(&io::abp_to_json(&a)).map_err(err)? == io::Dual::Rational(a),
            || "abp".into(),
        )?;
        let f = waring_expand(&p);
        check(
            io::poly_from_json(&io::poly_to_json(&f)).map_err(err)? == io::Dual::Rational(f),
            || "poly".into(),
        )?;
    }
    Ok(format!("{cases} cases"))
}
