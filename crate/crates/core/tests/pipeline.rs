use octa_core::geom::{int, rat, Point, Rat};
use octa_core::io::write_xpc;
use octa_core::subdivide::{schlegel_24cell_reference, subdivide_tetrahedron, tetrahedron_frame, TetraFlag};
use octa_core::{
    fixtures, octahedralize, octahedralize_with, verify_complex, Error, SearchConfig, SimplicialPolytope,
    ValidationLevel,
};

#[test]
fn schlegel_reference_parameters() {
    let r = schlegel_24cell_reference().unwrap();
    assert_eq!(r.lambda, rat(1, 4));
    assert_eq!(r.mu, rat(1, 8));
    let c = r.block.complex().unwrap();
    assert_eq!(c.type_census(), [8, 8, 6, 1]);
    assert_eq!(c.total_volume(), rat(4, 3));
    // edge points form the cuboctahedron λ(±e_i ± e_j)
    for p in &c.vertices()[12..] {
        let mut coords: Vec<Rat> = p.coords().into_iter().cloned().collect();
        coords.sort();
        assert!(
            coords == [rat(-1, 4), int(0), rat(1, 4)]
                || coords == [int(0), rat(1, 4), rat(1, 4)]
                || coords == [rat(-1, 4), rat(-1, 4), int(0)]
        );
    }
}

#[test]
fn schlegel_interior_edges_lie_in_three_cells() {
    // the reference block is a Schlegel diagram of the 24-cell, where every
    // edge lies in three octahedra; even_links sees 6-cycles there
    let c = schlegel_24cell_reference().unwrap().block.complex().unwrap();
    let report = verify_complex(&c, None, ValidationLevel::Full);
    assert!(report.passed(), "{report}");
}

#[test]
fn unit_tetrahedron_block() {
    let pts = fixtures::unit_tetrahedron_points();
    let frame = tetrahedron_frame(&pts, TetraFlag::default()).unwrap();
    assert_eq!(frame.center, Point::new(rat(1, 4), rat(1, 4), rat(1, 4)));
    // O = D + (3/4)(G - D)
    let d = &pts[3];
    assert_eq!(
        frame.center,
        d.lerp(&Point::new(rat(1, 3), rat(1, 3), int(0)), &rat(3, 4))
    );
    let c = subdivide_tetrahedron(&pts, TetraFlag::default()).unwrap();
    assert_eq!(c.cells().len(), 23);
    assert_eq!(c.total_volume(), rat(1, 6));
    assert_eq!(c.boundary().len(), 8);
}

#[test]
fn tetrahedron_rejects_bad_flags() {
    let pts = fixtures::unit_tetrahedron_points();
    let flag = TetraFlag {
        vertex: 0,
        edge: 0,
        triangle: 2,
    };
    assert!(matches!(subdivide_tetrahedron(&pts, flag), Err(Error::Precondition(_))));
    let flat = [
        Point::origin(),
        Point::from_ints(1, 0, 0),
        Point::from_ints(0, 1, 0),
        Point::from_ints(1, 1, 0),
    ];
    assert!(matches!(
        subdivide_tetrahedron(&flat, TetraFlag::default()),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn every_flag_of_a_skew_tetrahedron_works() {
    let pts = [
        Point::from_ints(0, 0, 0),
        Point::from_ints(5, 1, 0),
        Point::from_ints(2, 7, 1),
        Point::from_ints(1, 2, 9),
    ];
    for vertex in 0..4 {
        for edge in 0..4 {
            for triangle in 0..4 {
                if vertex == edge || edge == triangle || vertex == triangle {
                    continue;
                }
                let c = subdivide_tetrahedron(&pts, TetraFlag { vertex, edge, triangle }).unwrap();
                assert_eq!(
                    c.total_volume(),
                    octa_core::geom::tetra_volume(&pts[0], &pts[1], &pts[2], &pts[3])
                );
            }
        }
    }
}

#[test]
fn octahedron_pipeline() {
    let p = fixtures::octahedron();
    let c = octahedralize(&p).unwrap();
    assert_eq!(c.cells().len(), 92);
    assert_eq!(c.type_census(), [32, 32, 24, 4]);
    assert_eq!(c.total_volume(), int(4) / int(3));
    let report = verify_complex(&c, Some(&p), ValidationLevel::Full);
    assert!(report.passed(), "{report}");
}

#[test]
fn hexagonal_bipyramid_counts() {
    let p = fixtures::bipyramid(3);
    let c = octahedralize(&p).unwrap();
    assert_eq!(c.cells().len(), 138);
    let report = verify_complex(&c, Some(&p), ValidationLevel::Fast);
    assert!(report.passed(), "{report}");
}

#[test]
fn unbalanced_inputs_are_rejected() {
    for p in [fixtures::tetrahedron(), fixtures::icosahedron()] {
        assert!(matches!(octahedralize(&p), Err(Error::NotBalanced(_))));
    }
}

#[test]
fn exhausted_search_names_the_bipyramid() {
    let cfg = SearchConfig { cap: 0, retries: 0 };
    match octahedralize_with(&fixtures::bipyramid(3), &cfg) {
        Err(Error::SearchExhausted { bipyramid, .. }) => assert_eq!(bipyramid, Some(0)),
        other => panic!("expected SearchExhausted, got {other:?}"),
    }
}

#[test]
fn output_is_deterministic() {
    let p = fixtures::bipyramid(2);
    let a = write_xpc(&octahedralize(&p).unwrap());
    let b = write_xpc(&octahedralize(&p).unwrap());
    assert_eq!(a, b);
}

fn affine(p: &Point) -> Point {
    // x -> (2x + y + 1, y - z, 3z - 2); determinant 6
    Point::new(int(2) * &p.x + &p.y + int(1), &p.y - &p.z, int(3) * &p.z - int(2))
}

#[test]
fn construction_commutes_with_affine_maps() {
    let p = fixtures::octahedron();
    let q = SimplicialPolytope::new(p.vertices().iter().map(affine).collect(), p.facets().to_vec()).unwrap();
    let a = octahedralize(&p).unwrap();
    let b = octahedralize(&q).unwrap();
    let mapped: Vec<Point> = a.vertices().iter().map(affine).collect();
    assert_eq!(mapped, b.vertices());
    assert_eq!(a.cells(), b.cells());
    assert_eq!(b.total_volume(), a.total_volume() * int(6));
}
