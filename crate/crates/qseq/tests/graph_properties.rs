//! Enumerated properties of the functional graph and the trace/
//! coefficient identities that link it to minimal polynomials.

use qseq::gf2poly::BitPoly;
use qseq::qtransform::q_transform;
use qseq::thetagraph::{build_graph, Field, Membership, ProjPoint};

#[test]
fn partition_and_fixed_members_to_degree_12() {
    for n in 1..=12usize {
        let g = build_graph(n, None).unwrap();
        assert_eq!(g.point_count(), (1 << n) + 1);
        assert_eq!(g.membership(0), Membership::A);
        assert_eq!(g.membership(g.infinity_index()), Membership::A);
    }
}

#[test]
fn preimage_sets_to_degree_12() {
    for n in 1..=12usize {
        let g = build_graph(n, None).unwrap();
        let field = g.field();
        let inf = g.infinity_index();
        let mut preimages: Vec<Vec<usize>> = vec![Vec::new(); g.point_count()];
        for u in 0..g.point_count() {
            preimages[g.successor_index(u)].push(u);
        }
        // The preimage of 0 is exactly {1}; of infinity, {0, inf}.
        assert_eq!(preimages[0], vec![1]);
        assert_eq!(preimages[inf], vec![0, inf]);
        // Everything else: empty or an inverse pair {c, 1/c}, c != 1/c.
        for (v, pre) in preimages.iter().enumerate().take(inf).skip(1) {
            if pre.is_empty() {
                continue;
            }
            assert_eq!(pre.len(), 2, "n={n} vertex {}", g.label(v));
            let gamma = field.elem_from_bits(pre[0] as u64);
            let inv = field.inv(&gamma).unwrap();
            assert_eq!(pre[1] as u64, inv.to_bits());
            assert_ne!(pre[0], pre[1]);
        }
    }
}

#[test]
fn trace_reads_off_minimal_polynomial_coefficients_to_degree_12() {
    for n in 1..=12usize {
        let field = Field::new(n).unwrap();
        let mut full_degree_elements = 0usize;
        for alpha in field.elements() {
            let mp = field.min_poly(&alpha);
            if mp.degree() != Some(n) {
                continue; // element of a proper subfield
            }
            full_degree_elements += 1;
            assert_eq!(
                mp.coeff(n - 1),
                field.trace(&alpha),
                "n={n} alpha={:?}",
                alpha.residue()
            );
            if n > 1 {
                // Full-degree elements at n >= 2 are never zero.
                let inv = field.inv(&alpha).unwrap();
                assert_eq!(
                    mp.coeff(1),
                    field.trace(&inv),
                    "n={n} alpha={:?}",
                    alpha.residue()
                );
            }
        }
        // Each irreducible of degree n has exactly n roots here.
        assert_eq!(
            full_degree_elements,
            n * qseq::irreducibility::irreducibles_of_degree(n).len()
        );
    }
}

/// Roots of the transform are the theta-preimages of roots: whenever
/// theta(beta) = alpha with f(alpha) = 0 in the double-degree field,
/// beta is a root of the transform of f.
#[test]
fn transform_roots_are_theta_preimages_of_roots_to_degree_8() {
    for n in 1..=8usize {
        let polys = qseq::irreducibility::irreducibles_of_degree(n);
        // A few representatives per degree keep this quick.
        let sample: Vec<&BitPoly> = if polys.len() <= 4 {
            polys.iter().collect()
        } else {
            vec![
                &polys[0],
                &polys[1],
                &polys[polys.len() / 2],
                &polys[polys.len() - 1],
            ]
        };
        let big = Field::new(2 * n).unwrap();
        for f in sample {
            let fq = q_transform(f).unwrap();
            let mut hits = 0usize;
            for beta in big.elements() {
                let ProjPoint::Finite(alpha) = big.theta(&ProjPoint::Finite(beta.clone())) else {
                    continue;
                };
                if big.eval(f, &alpha).is_zero() {
                    assert!(
                        big.eval(&fq, &beta).is_zero(),
                        "n={n} f={} beta={:?}",
                        f.to_hex_string(),
                        beta.residue()
                    );
                    hits += 1;
                }
            }
            // Every nonzero root of f has exactly two theta-preimages
            // in the double-degree field; the root 0 of f = x has only
            // the double preimage 1.
            let expected = if *f == BitPoly::x() { 1 } else { 2 * n };
            assert_eq!(hits, expected, "f = {}", f.to_hex_string());
        }
    }
}

#[test]
fn structure_report_names_are_stable() {
    let report = build_graph(6, None).unwrap().verify_structure();
    let names: Vec<&str> = report.checks.iter().map(|c| c.name).collect();
    assert_eq!(
        names,
        vec![
            "in_degree_multiplicity",
            "in_degree_setwise",
            "component_homogeneity",
            "tree_depth",
            "two_children",
        ]
    );
    assert!(report.passed());
}
