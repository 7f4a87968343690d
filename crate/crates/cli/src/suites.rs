//! The verification suites behind `cumulant verify`.

use std::collections::BTreeSet;

use serde_json::{json, Value};

use cumulant_core::cube::{
    cell_boundary, cells, census, cumulant_graph, euler_characteristic, hypercube_isomorphism,
    vertex_sum, SquareType,
};
use cumulant_core::cumulants::{
    compositions, cumulant, cumulant_recursive, cumulant_terms, CumulantContext,
};
use cumulant_core::formal::enumerate::{catalan, painted_count_formula};
use cumulant_core::formal::interpret::{
    associative_specialization_matches, cross_layer_check, perturbed_defect_support, IntervalModel,
};
use cumulant_core::formal::{
    binary_trees, check_d_squared, contractibility, cumulant_polytope_graph, painted_trees,
    polytope_faces, tree_boundary, FormalTree, Generator, PolytopeKind,
};
use cumulant_core::hom::{
    ainfty_relation_defect, alternate_witness_k3, cumulant_map, hom_boundary, homotopy_witness,
    is_zero_on_truncation, iterated, maps_equal_on_truncation, morphism_component, square_cycle,
    K3Variant, SignConvention, TruncationGrid, Verdict,
};
use cumulant_core::interval::{cup, d_form, delta, integrate, iterated_integral, wedge};
use cumulant_core::rational::{int, rat};
use cumulant_core::{Cochain, PolyForm};

use crate::report::{Outcome, Recorder};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Dga,
    ChainMap,
    Cumulants,
    Ainfty,
    Cube,
    Formal,
    All,
}

impl Suite {
    /// Largest `n_max` the suite accepts.
    pub fn n_max_limit(self) -> usize {
        match self {
            Suite::Cube | Suite::Cumulants | Suite::Dga | Suite::ChainMap => 6,
            Suite::Ainfty | Suite::Formal | Suite::All => 4,
        }
    }
}

pub const DEGREE_LIMIT: usize = 12;

pub struct Params {
    pub n_max: usize,
    pub degree: usize,
    pub conv: SignConvention,
}

pub fn run(suite: Suite, p: &Params, rec: &mut Recorder) {
    match suite {
        Suite::Dga => dga(p, rec),
        Suite::ChainMap => chain_map(p, rec),
        Suite::Cumulants => cumulants(p, rec),
        Suite::Ainfty => ainfty(p, rec),
        Suite::Cube => cube(p, rec),
        Suite::Formal => formal(p, rec),
        Suite::All => {
            for s in [
                Suite::Dga,
                Suite::ChainMap,
                Suite::Cumulants,
                Suite::Ainfty,
                Suite::Cube,
                Suite::Formal,
            ] {
                run(s, p, rec);
            }
        }
    }
}

fn verdict(v: &Verdict) -> Outcome {
    Outcome::with_witness(v.passed(), || {
        serde_json::to_value(v).expect("serializable")
    })
}

fn monomials(max: usize) -> Vec<PolyForm> {
    TruncationGrid::new(max).basis()
}

fn parity_sign(odd: bool) -> cumulant_core::Rational {
    if odd {
        int(-1)
    } else {
        int(1)
    }
}

fn first_failure<T>(
    items: impl IntoIterator<Item = T>,
    ok: impl Fn(&T) -> bool,
    show: impl Fn(&T) -> Value,
) -> Outcome {
    match items.into_iter().find(|x| !ok(x)) {
        None => Outcome::pass(),
        Some(bad) => Outcome {
            passed: false,
            witness: Some(show(&bad)),
        },
    }
}

fn pair(a: &PolyForm, b: &PolyForm) -> Value {
    json!([a.to_string(), b.to_string()])
}

fn dga(p: &Params, rec: &mut Recorder) {
    let d = p.degree;
    let params = [("degree", d.to_string())];
    let basis = monomials(d);
    let pairs: Vec<(PolyForm, PolyForm)> = basis
        .iter()
        .flat_map(|a| basis.iter().map(move |b| (a.clone(), b.clone())))
        .collect();
    rec.run("dga.forms.d_squared", &params, || {
        first_failure(
            &basis,
            |a| d_form(&d_form(a)).is_zero(),
            |a| json!(a.to_string()),
        )
    });
    rec.run("dga.forms.leibniz", &params, || {
        first_failure(
            &pairs,
            |(a, b)| {
                let s = parity_sign(a.degree() == Some(1));
                d_form(&wedge(a, b)) == wedge(&d_form(a), b).add(&wedge(a, &d_form(b)).scale(&s))
            },
            |(a, b)| pair(a, b),
        )
    });
    rec.run("dga.forms.graded_commutativity", &params, || {
        first_failure(
            &pairs,
            |(a, b)| {
                let s = parity_sign(a.degree() == Some(1) && b.degree() == Some(1));
                wedge(a, b) == wedge(b, a).scale(&s)
            },
            |(a, b)| pair(a, b),
        )
    });
    let cochains = [
        (Cochain::vertices(int(1), int(0)), false),
        (Cochain::vertices(int(0), int(1)), false),
        (Cochain::edge(int(1)), true),
    ];
    rec.run("dga.cochains.delta_squared", &[], || {
        Outcome::from_bool(cochains.iter().all(|(c, _)| delta(&delta(c)).is_zero()))
    });
    rec.run("dga.cochains.cup_associativity", &[], || {
        Outcome::from_bool(cochains.iter().all(|(a, _)| {
            cochains.iter().all(|(b, _)| {
                cochains
                    .iter()
                    .all(|(c, _)| cup(&cup(a, b), c) == cup(a, &cup(b, c)))
            })
        }))
    });
    rec.run("dga.cochains.leibniz", &[], || {
        Outcome::from_bool(cochains.iter().all(|(a, odd)| {
            cochains.iter().all(|(b, _)| {
                delta(&cup(a, b))
                    == cup(&delta(a), b).add(&cup(a, &delta(b)).scale(&parity_sign(*odd)))
            })
        }))
    });
}

fn chain_map(p: &Params, rec: &mut Recorder) {
    rec.run(
        "chain_map.stokes",
        &[("degree", p.degree.to_string())],
        || {
            first_failure(
                0..=p.degree,
                |&k| {
                    let a = PolyForm::t_pow(k);
                    integrate(&d_form(&a)) == delta(&integrate(&a))
                },
                |k| json!(format!("t^{k}")),
            )
        },
    );
    let mut factorial = 1i64;
    for n in 1..=p.n_max {
        factorial *= n as i64;
        let f = factorial;
        rec.run("chain_map.simplex_volume", &[("n", n.to_string())], || {
            let v = iterated_integral(&vec![PolyForm::dt(); n]).expect("n >= 1");
            Outcome::with_witness(v == Cochain::edge(rat(1, f)), || json!(v.to_string()))
        });
        rec.run(
            "chain_map.iterated_multilinear",
            &[("n", n.to_string())],
            || Outcome::from_bool(iterated(n).probe_multilinear(n as u64, 24, p.degree.min(4))),
        );
    }
}

fn tuples(basis: &[PolyForm], n: usize) -> impl Iterator<Item = Vec<PolyForm>> + '_ {
    let b = basis.len();
    (0..b.pow(n as u32)).map(move |mut i| {
        let mut out = vec![PolyForm::zero(); n];
        for slot in (0..n).rev() {
            out[slot] = basis[i % b].clone();
            i /= b;
        }
        out
    })
}

fn show_tuple(x: &[PolyForm]) -> Value {
    json!(x.iter().map(ToString::to_string).collect::<Vec<_>>())
}

fn cumulants(p: &Params, rec: &mut Recorder) {
    let ctx = CumulantContext::integration();
    let eval0 = CumulantContext::evaluation_at_zero();
    let basis = monomials(p.degree);
    for n in 1..=p.n_max {
        let params = [("n", n.to_string()), ("degree", p.degree.to_string())];
        rec.run("cumulants.direct_vs_recursive", &params, || {
            first_failure(
                tuples(&basis, n),
                |x| cumulant(&ctx, x).ok() == cumulant_recursive(&ctx, x).ok(),
                |x| show_tuple(x),
            )
        });
        rec.run("cumulants.term_count", &[("n", n.to_string())], || {
            let x = vec![PolyForm::t_pow(1); n];
            let terms = cumulant_terms(&ctx, &x).map(|t| t.len()).unwrap_or(0);
            Outcome::from_bool(
                terms == 1 << (n - 1) && compositions(n).map(|c| c.len()) == Ok(terms),
            )
        });
        if n >= 2 {
            rec.run("cumulants.algebra_morphism_vanishes", &params, || {
                first_failure(
                    tuples(&basis, n),
                    |x| cumulant(&eval0, x).map(|c| c.is_zero()).unwrap_or(false),
                    |x| show_tuple(x),
                )
            });
        }
    }
    if p.n_max >= 2 {
        rec.run(
            "cumulants.k2_formula",
            &[("degree", p.degree.to_string())],
            || {
                first_failure(
                    tuples(&basis, 2),
                    |x| {
                        let expected = integrate(&wedge(&x[0], &x[1]))
                            .sub(&cup(&integrate(&x[0]), &integrate(&x[1])));
                        cumulant(&ctx, x).ok() == Some(expected)
                    },
                    |x| show_tuple(x),
                )
            },
        );
    }
}

fn ainfty(p: &Params, rec: &mut Recorder) {
    let grid = TruncationGrid::new(p.degree);
    let ctx = CumulantContext::integration();
    let conv = p.conv;
    for n in 1..=p.n_max {
        let params = [("n", n.to_string()), ("degree", p.degree.to_string())];
        rec.run("ainfty.relation", &params, || {
            verdict(
                &ainfty_relation_defect(n, p.degree, conv)
                    .expect("n >= 1")
                    .verdict,
            )
        });
        rec.run("ainfty.d_squared", &params, || {
            verdict(&is_zero_on_truncation(
                &hom_boundary(&hom_boundary(&iterated(n), conv), conv),
                grid,
            ))
        });
        if n >= 2 {
            rec.run("ainfty.homotopy_witness", &params, || {
                let h = homotopy_witness(n, conv).expect("n >= 2");
                verdict(
                    &maps_equal_on_truncation(
                        &hom_boundary(&h, conv),
                        &cumulant_map(&ctx, n),
                        grid,
                    )
                    .expect("same arity"),
                )
            });
        }
    }
    if p.n_max >= 2 {
        rec.run(
            "ainfty.boundary_of_i2",
            &[("degree", p.degree.to_string())],
            || {
                verdict(
                    &maps_equal_on_truncation(
                        &hom_boundary(&iterated(2), conv),
                        &cumulant_map(&ctx, 2),
                        grid,
                    )
                    .expect("same arity"),
                )
            },
        );
    }
    if p.n_max >= 3 {
        for (name, variant) in [("left", K3Variant::Left), ("right", K3Variant::Right)] {
            rec.run(
                "ainfty.k3_witness",
                &[
                    ("variant", name.to_string()),
                    ("degree", p.degree.to_string()),
                ],
                || {
                    let w = alternate_witness_k3(variant, conv);
                    verdict(
                        &maps_equal_on_truncation(
                            &hom_boundary(&w, conv),
                            &cumulant_map(&ctx, 3),
                            grid,
                        )
                        .expect("same arity"),
                    )
                },
            );
        }
        rec.run(
            "ainfty.square_cycle",
            &[("degree", p.degree.to_string())],
            || {
                verdict(
                    &maps_equal_on_truncation(
                        &hom_boundary(&morphism_component(3), conv),
                        &square_cycle(conv),
                        grid,
                    )
                    .expect("same arity"),
                )
            },
        );
    }
}

fn cube(p: &Params, rec: &mut Recorder) {
    let ctx = CumulantContext::integration();
    for n in 2..=p.n_max {
        let np = [("n", n.to_string())];
        rec.run("cube.hypercube", &np, || {
            let g = cumulant_graph(n).expect("n in range");
            let iso = hypercube_isomorphism(n).expect("n in range");
            Outcome::with_witness(
                g.vertices.len() == 1 << (n - 1)
                    && g.edges.len() == (n - 1) << (n - 2)
                    && g.is_regular(n - 1)
                    && g.is_connected()
                    && g.signs_alternate()
                    && iso.verify(&g),
                || json!({"vertices": g.vertices.len(), "edges": g.edges.len()}),
            )
        });
        rec.run("cube.euler_characteristic", &np, || {
            let chi = euler_characteristic(n).expect("n in range");
            Outcome::with_witness(chi == 1, || json!(chi))
        });
        rec.run("cube.boundary_squared", &np, || {
            let all = cells(n).expect("n in range");
            first_failure(
                all.iter().filter(|c| c.dimension() >= 2),
                |c| {
                    let mut total = std::collections::BTreeMap::new();
                    for (s, f) in cell_boundary(c).expect("positive dimension") {
                        for (t, g) in cell_boundary(&f).expect("positive dimension") {
                            *total.entry(g).or_insert(0i64) += (s * t) as i64;
                        }
                    }
                    total.values().all(|&v| v == 0)
                },
                |c| json!(c.to_string()),
            )
        });
        let grid_params = [("n", n.to_string()), ("degree", p.degree.to_string())];
        rec.run("cube.vertex_sum", &grid_params, || {
            verdict(
                &maps_equal_on_truncation(
                    &vertex_sum(n, p.conv).expect("n in range"),
                    &cumulant_map(&ctx, n),
                    TruncationGrid::new(p.degree),
                )
                .expect("same arity"),
            )
        });
        let (summary, verdicts) = census(n, p.degree, p.conv).expect("n in range");
        for v in &verdicts {
            let cell = v.check.trim_start_matches("cube cell ").to_string();
            rec.run(
                "cube.cell",
                &[
                    ("n", n.to_string()),
                    ("cell", cell),
                    ("degree", p.degree.to_string()),
                ],
                || verdict(v),
            );
        }
        if n >= 4 {
            rec.run("cube.square_types", &np, || {
                let both = summary
                    .square_types
                    .get(&SquareType::SingleBlock)
                    .is_some_and(|&c| c > 0)
                    && summary
                        .square_types
                        .get(&SquareType::TwoBlocks)
                        .is_some_and(|&c| c > 0);
                Outcome::with_witness(both, || {
                    serde_json::to_value(&summary).expect("serializable")
                })
            });
        }
    }
}

fn formal(p: &Params, rec: &mut Recorder) {
    let conv = p.conv;
    let model = IntervalModel::default();
    for n in 1..=p.n_max {
        let np = [("n", n.to_string())];
        rec.run("formal.d_squared", &np, || {
            let c = check_d_squared(n, conv).expect("n in range");
            Outcome::with_witness(c.residual.is_zero(), || {
                serde_json::to_value(&c.residual).expect("serializable")
            })
        });
        rec.run("formal.binary_trees", &np, || {
            let got = binary_trees(n).expect("n in range").len() as u64;
            Outcome::with_witness(got == catalan(n - 1), || json!(got))
        });
        rec.run("formal.painted_trees", &np, || {
            let direct: BTreeSet<FormalTree> =
                painted_trees(n).expect("n in range").into_iter().collect();
            let filtered: BTreeSet<FormalTree> = polytope_faces(n)
                .expect("n in range")
                .into_iter()
                .filter(|t| t.dimension() == 0)
                .collect();
            let formula = painted_count_formula(n).expect("n in range");
            Outcome::with_witness(
                direct == filtered && direct.len() as u64 == formula,
                || json!({"direct": direct.len(), "filtered": filtered.len(), "formula": formula}),
            )
        });
        for kind in [PolytopeKind::Cumulant, PolytopeKind::Associahedron] {
            let name = match kind {
                PolytopeKind::Cumulant => "formal.contractibility.cumulant",
                PolytopeKind::Associahedron => "formal.contractibility.associahedron",
            };
            rec.run(name, &np, || {
                let r = contractibility(kind, n, conv).expect("n in range");
                Outcome::with_witness(r.contractible(), || {
                    serde_json::to_value(&r).expect("serializable")
                })
            });
        }
        if n >= 2 {
            rec.run(
                "formal.polytope_graph",
                &np,
                || match cumulant_polytope_graph(n, conv) {
                    Err(e) => Outcome {
                        passed: false,
                        witness: Some(json!(e.to_string())),
                    },
                    Ok(g) => {
                        let mut ok = g.is_connected()
                            && g.vertices.len() as u64
                                == painted_count_formula(n).expect("n in range");
                        if n == 3 {
                            let faces: BTreeSet<&str> =
                                g.edges.iter().map(|e| e.face.as_str()).collect();
                            let terms: BTreeSet<String> =
                                tree_boundary(&FormalTree::corolla(Generator::p(3)), conv)
                                    .expect("well typed")
                                    .terms()
                                    .map(|(t, _)| t.point_free())
                                    .collect();
                            ok &= g.is_cycle()
                                && g.edges.len() == 6
                                && faces == terms.iter().map(String::as_str).collect();
                        }
                        Outcome::with_witness(
                            ok,
                            || json!({"vertices": g.vertices.len(), "edges": g.edges.len()}),
                        )
                    }
                },
            );
            rec.run("formal.associative_specialization", &np, || {
                first_failure(
                    cells(n).expect("n in range"),
                    |c| associative_specialization_matches(c, conv).unwrap_or(false),
                    |c| json!(c.to_string()),
                )
            });
        }
        rec.run(
            "formal.cross_layer",
            &[("n", n.to_string()), ("degree", p.degree.to_string())],
            || {
                let faces = polytope_faces(n).expect("n in range");
                for t in faces.iter().filter(|t| t.dimension() >= 1) {
                    let v = cross_layer_check(t, p.degree, &model, conv).expect("well typed");
                    if !v.passed() {
                        return verdict(&v);
                    }
                }
                Outcome::pass()
            },
        );
    }
    rec.run(
        "formal.perturbed_support",
        &[
            ("n_max", p.n_max.to_string()),
            ("degree", p.degree.min(3).to_string()),
        ],
        || {
            let scalings = [
                vec![int(1), int(2)],
                vec![int(1), int(1), int(3)],
                vec![int(1), int(1), int(1), int(-1)],
            ];
            first_failure(
                scalings,
                |s| {
                    let r = perturbed_defect_support(
                        &IntervalModel::with_scales(s.clone()),
                        p.n_max,
                        p.degree.min(3),
                        conv,
                    )
                    .expect("n in range");
                    r.formal == r.hom
                },
                |s| json!(s.iter().map(|c| c.to_string()).collect::<Vec<_>>()),
            )
        },
    );
}
