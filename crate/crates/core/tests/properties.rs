mod common;

use std::f64::consts::PI;

use checkerboard::classify::{canonical_code, canonical_code_of_graph, classify};
use checkerboard::diagram::{
    alternating_from_graph, analyze, checkerboard_color, emit_pd, parse_pd,
    random_alternating_diagram, random_bigon_free_diagram, trace_faces, RotationSystem,
};
use checkerboard::hypgeom::{
    cross_ratio, ideal_tet_volume, is_regular_polygon, lobachevsky, Complex64, ExtendedComplex,
    IdealPolygon, MobiusMap, TetShape,
};
use proptest::prelude::*;

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 256,
        ..ProptestConfig::default()
    }
}

fn complex(range: f64) -> impl Strategy<Value = Complex64> {
    (-range..range, -range..range).prop_map(|(re, im)| Complex64::new(re, im))
}

fn mobius() -> impl Strategy<Value = MobiusMap> {
    [complex(2.0), complex(2.0), complex(2.0), complex(2.0)]
        .prop_filter_map("singular matrix", |[a, b, c, d]| {
            MobiusMap::new([[a, b], [c, d]]).ok()
        })
}

/// A vertex permutation and slot rotation for every vertex.
fn relabelling(n: usize, seed: u64) -> (Vec<usize>, Vec<usize>) {
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let shift = (0..n).map(|_| rng.random_range(0..4)).collect();
    (perm, shift)
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn generated_diagrams_are_sound(n in 3usize..40, seed in any::<u64>()) {
        let d = random_alternating_diagram(n, seed).unwrap();
        let g = d.projection();
        let faces = trace_faces(&d);
        // Euler on the sphere.
        prop_assert_eq!(n as i64 - 2 * n as i64 + faces.len() as i64, 2);
        // Face sizes count every dart once.
        prop_assert_eq!(faces.iter().map(|f| f.size()).sum::<usize>(), 4 * n);
        let coloring = checkerboard_color(&d);
        let face_of = g.face_index();
        for dart in g.darts() {
            // The faces left of a dart and of its partner lie on the two
            // sides of one edge.
            let across = g.partner(dart);
            prop_assert_ne!(
                coloring.color(face_of[dart.index()]),
                coloring.color(face_of[across.index()])
            );
        }
        let r = analyze(&d);
        prop_assert!(r.alternating && r.reduced && !r.split);
    }

    #[test]
    fn bigon_free_diagrams_have_triangles(n in 8usize..48, seed in any::<u64>()) {
        let d = random_bigon_free_diagram(n, seed).unwrap();
        let r = analyze(&d);
        prop_assert!(!r.has_bigon);
        prop_assert!(r.has_triangle);
    }

    #[test]
    fn pd_round_trip(n in 3usize..30, seed in any::<u64>()) {
        let d = random_alternating_diagram(n, seed).unwrap();
        let back = parse_pd(&emit_pd(&d)).unwrap();
        prop_assert_eq!(back.crossings(), d.crossings());
    }

    #[test]
    fn canonical_code_is_stable(n in 3usize..25, seed in any::<u64>(), relabel in any::<u64>()) {
        let d = random_alternating_diagram(n, seed).unwrap();
        let code = canonical_code(&d).unwrap();
        let (perm, shift) = relabelling(n, relabel);
        let h = d.projection().relabeled(&perm, &shift);
        prop_assert_eq!(&canonical_code_of_graph(&h).unwrap(), &code);
        prop_assert_eq!(&canonical_code_of_graph(&h.mirrored()).unwrap(), &code);
        // Realternating the relabelled projection gives the same verdict.
        let e = alternating_from_graph(&h).unwrap();
        prop_assert_eq!(classify(&e), classify(&d));
    }

    #[test]
    fn alternating_from_graph_keeps_faces(n in 3usize..30, seed in any::<u64>()) {
        let d = random_alternating_diagram(n, seed).unwrap();
        let g: &RotationSystem = d.projection();
        let e = alternating_from_graph(g).unwrap();
        let sizes = |faces: Vec<Vec<_>>| {
            let mut s: Vec<usize> = faces.iter().map(Vec::len).collect();
            s.sort();
            s
        };
        prop_assert_eq!(sizes(g.faces()), sizes(e.projection().faces()));
        prop_assert!(analyze(&e).alternating);
    }

    #[test]
    fn cross_ratio_is_mobius_invariant(
        m in mobius(),
        p in complex(3.0), q in complex(3.0), r in complex(3.0), s in complex(3.0),
    ) {
        let pts = [p, q, r, s].map(ExtendedComplex::finite);
        prop_assume!((0..4).all(|i| (i + 1..4).all(|j| (pts[i].value().unwrap() - pts[j].value().unwrap()).norm() > 1e-3)));
        let before = cross_ratio(pts[0], pts[1], pts[2], pts[3]).unwrap().value().unwrap();
        let img = pts.map(|x| m.apply(x));
        let after = cross_ratio(img[0], img[1], img[2], img[3]).unwrap().value().unwrap();
        prop_assert!((after - before).norm() <= 1e-10 * before.norm().max(1.0));
    }

    #[test]
    fn mobius_images_of_regular_polygons(m in mobius(), n in 3usize..13) {
        let p = IdealPolygon::roots_of_unity(n).unwrap();
        let q = IdealPolygon::new(p.vertices().iter().map(|&v| m.apply(v)).collect()).unwrap();
        prop_assert!(is_regular_polygon(&q, 1e-9));
    }

    #[test]
    fn tetrahedron_volume_symmetries(z in complex(4.0)) {
        prop_assume!(z.im.abs() > 1e-3);
        let s = TetShape::new(z).unwrap();
        let v = ideal_tet_volume(&s);
        prop_assert!((ideal_tet_volume(&s.rotated()) - v).abs() <= 1e-12);
        prop_assert!((ideal_tet_volume(&s.rotated().rotated()) - v).abs() <= 1e-12);
        prop_assert_eq!(v > 0.0, z.im > 0.0);
        let conj = TetShape::new(z.conj()).unwrap();
        prop_assert!((ideal_tet_volume(&conj) + v).abs() <= 1e-12);
    }

    #[test]
    fn lobachevsky_matches_quadrature(theta in -10.0f64..10.0) {
        let oracle = common::lobachevsky_quadrature(theta);
        prop_assert!((lobachevsky(theta) - oracle).abs() <= 1e-10);
        prop_assert!((lobachevsky(theta + PI) - lobachevsky(theta)).abs() <= 1e-12);
        prop_assert!((lobachevsky(-theta) + lobachevsky(theta)).abs() <= 1e-14);
    }
}
