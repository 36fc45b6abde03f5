//! Fixed-size structural facts about the tetrahedral algebras, the modules
//! over them, and the related algebras `Ω`, `Σ` and `Γ`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tetra::algebra::{cartan_matrix, idempotent_subalgebra, tetrahedral_form, tetrahedral_rotation};
use tetra::families::{build_sigma, special_biserial_check, GAMMA_RELATIONS};
use tetra::modules::{is_isomorphic, periodicity_report, projective_module, simple_module, syzygy, syzygy_with_cover};
use tetra::path_algebra::{canonical_x, quotient_basis, tetrahedral_relations, BasisAlgebra, FreeElement, Presentation};
use tetra::quiver::{tetrahedral_quiver, Path, Quiver};
use tetra::scalars::{Field, Fp, DEFAULT_PRIME};

fn fp() -> Fp {
    Fp::new(DEFAULT_PRIME).unwrap()
}

fn algebra(m: usize, lambda: u64) -> BasisAlgebra<Fp> {
    quotient_basis(&tetrahedral_relations(&fp(), m, lambda).unwrap(), 2).unwrap()
}

fn word(q: &Quiver, text: &str) -> Path {
    let names: Vec<&str> = text.split_whitespace().collect();
    q.path_by_names(&names).unwrap()
}

#[test]
fn rotation_sends_x4_to_x2_and_moves_tilde_identities() {
    for lambda in [0, 1, 9] {
        let alg = algebra(2, lambda);
        let q = &alg.quiver;
        let map = tetrahedral_rotation(&alg);
        let xs = canonical_x(&tetrahedral_quiver());
        let x = |i: usize| q.path(&xs[i]).unwrap();
        assert_eq!(map.apply_path(&alg, &word(q, "gamma delta eta")), alg.eval_path(&x(1)));
        // X_i - X̃_i at vertex 2 maps to the same difference at 5, and the one at 4 to vertex 2.
        let diff = |xi: &Path, tilde: &str| alg.sub(&alg.eval_path(xi), &alg.eval_path(&word(q, tilde)));
        let d2 = FreeElement::from_terms(&fp(), [(x(1), 1), (word(q, "epsilon eta beta"), DEFAULT_PRIME - 1)]);
        let image = map.apply_free(&alg, &d2);
        assert_eq!(image, diff(&x(4), "eta beta epsilon"));
        let d4 = FreeElement::from_terms(&fp(), [(x(3), 1), (word(q, "beta epsilon eta"), DEFAULT_PRIME - 1)]);
        assert_eq!(map.apply_free(&alg, &d4), diff(&x(1), "epsilon eta beta"));
    }
}

#[test]
fn complementary_basis_pairs_to_one() {
    for m in [2, 3] {
        let (alg, gram) = tetrahedral_form(&algebra(m, 1)).unwrap();
        for i in 0..6 {
            let e = alg.index_of(&Path::trivial(i)).unwrap();
            assert_eq!(*gram.pair(e, gram.socle[i]), 1);
        }
        for b in 0..alg.dim() {
            let partners: Vec<usize> = (0..alg.dim())
                .filter(|&c| alg.degree(b) + alg.degree(c) == 3 * m && *gram.pair(b, c) == 1)
                .collect();
            assert!(!partners.is_empty(), "{} has no complement", alg.quiver.format_path(&alg.labels[b]));
        }
    }
}

#[test]
fn cartan_data() {
    let alg = algebra(2, 1);
    let c = cartan_matrix(&alg);
    assert!(c.iter().all(|row| row.iter().sum::<usize>() == 12));
    assert_eq!(cartan_matrix(&algebra(2, 0)), c);
    let local = idempotent_subalgebra(&alg, &[0]).unwrap();
    assert_eq!(local.dim(), c[0][0]);
}

#[test]
fn projectives_have_zero_syzygy_and_rank_nullity_holds() {
    for lambda in [0, 1] {
        let alg = algebra(2, lambda);
        for i in 0..6 {
            assert!(syzygy(&alg, &projective_module(&alg, i).unwrap()).unwrap().is_zero());
            let s = simple_module(&alg, i).unwrap();
            let (omega, cover) = syzygy_with_cover(&alg, &s).unwrap();
            assert_eq!(omega.dim() + s.dim(), cover.projective.dim());
        }
    }
}

#[test]
fn periodicity_is_constant_on_rotation_orbits() {
    for lambda in [0, 1] {
        let alg = algebra(2, lambda);
        let reports: Vec<_> = (0..6).map(|v| periodicity_report(&alg, v, 6, 3).unwrap()).collect();
        for orbit in [[0, 5, 2], [4, 3, 1]] {
            for &v in &orbit[1..] {
                assert_eq!(reports[v].period_found, reports[orbit[0]].period_found);
                assert_eq!(reports[v].syzygy_dims, reports[orbit[0]].syzygy_dims);
            }
        }
    }
}

#[test]
fn syzygies_of_distinct_simples_are_not_isomorphic() {
    let alg = algebra(2, 1);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let a = syzygy(&alg, &simple_module(&alg, 0).unwrap()).unwrap();
    let b = syzygy(&alg, &simple_module(&alg, 1).unwrap()).unwrap();
    assert!(!is_isomorphic(&a, &b, &mut rng).is_yes());
    assert!(is_isomorphic(&a, &a, &mut rng).is_yes());
}

#[test]
fn omega_to_sigma_sample_relation() {
    // φ(β₁)φ(α₁) = φ(β₂)φ(α₂) reads βε²α = (−β + βε)(α − εα) in Σ(2, 1).
    let f = fp();
    let sigma = quotient_basis(&build_sigma(&f, 2, 1).unwrap(), 2).unwrap();
    let q = &sigma.quiver;
    let minus = f.neg(&1);
    let lhs = sigma.eval_path(&word(q, "beta epsilon epsilon alpha"));
    let left = FreeElement::from_terms(&f, [(word(q, "beta"), minus), (word(q, "beta epsilon"), 1)]);
    let right = FreeElement::from_terms(&f, [(word(q, "alpha"), 1), (word(q, "epsilon alpha"), minus)]);
    let rhs = sigma.mul(&sigma.normal_form(&left), &sigma.normal_form(&right));
    assert_eq!(lhs, rhs);
    let eps = sigma.eval_path(&word(q, "epsilon"));
    assert_eq!(sigma.mul(&eps, &eps), eps);
}

#[test]
fn single_loop_with_square_zero_is_special_biserial() {
    let f = fp();
    let q = Quiver::new(&["v"], &[("x", "v", "v")]).unwrap();
    let square = FreeElement::from_path(&f, word(&q, "x x"));
    let pres = Presentation::new(&f, q, vec![square], 0, 2, 2).unwrap();
    let alg = quotient_basis(&pres, 2).unwrap();
    assert_eq!(alg.dim(), 2);
    assert!(special_biserial_check(&pres, &alg).passed);
}

#[test]
fn gamma_relations_are_the_displayed_ones() {
    let f = fp();
    for lambda in [0, 1] {
        let report = tetra::families::gamma_quotient_check(&f, 2, lambda, 2).unwrap();
        assert_eq!(report.presentation.quiver.num_vertices(), 6);
        assert_eq!(report.presentation.relations.len(), GAMMA_RELATIONS.len());
        assert!(report.matches_display);
    }
}
