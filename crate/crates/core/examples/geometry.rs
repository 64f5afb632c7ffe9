//! Panel layout: element indexing, positions and angles to a far point.

use double_irs::geometry::{boresight_angles, element_position, grid_index, index_map, GridIndex, PanelGeometry, Point3};

fn main() -> Result<(), double_irs::error::Error> {
    let h = 3f64.sqrt() / 2.0;
    let panel = PanelGeometry::new(
        Point3::new(0.0, 100.0, 0.0),
        Point3::new(h, 0.5, 0.0),
        Point3::new(0.0, 0.0, 1.0),
        4,
        3,
        0.03,
    )?;
    println!("{} elements, normal {}", panel.len(), panel.normal());

    for k in [1, 2, 5, panel.len()] {
        let g = grid_index(&panel, k)?;
        assert_eq!(index_map(&panel, g)?, k);
        println!("k = {k:2} -> (ka, kb) = ({}, {}) at {}", g.ka, g.kb, element_position(&panel, g)?);
    }

    let to_irs1 = Point3::ORIGIN - panel.anchor();
    let a = boresight_angles(&panel, to_irs1)?;
    println!(
        "towards IRS 1: omega_a = {:.2} deg, omega_b = {:.2} deg",
        a.omega_a.to_degrees(),
        a.omega_b.to_degrees()
    );

    // out-of-range indices are errors, not panics
    assert!(element_position(&panel, GridIndex::new(4, 0)).is_err());
    Ok(())
}
