use arthur_wasm::{classify_impl, orbits_impl, scan_impl};

#[test]
fn orbit_listing_is_json() {
    let s = orbits_impl("A", 2).unwrap();
    assert!(s.starts_with('['));
    assert_eq!(s.matches("\"partition\"").count(), 3);
    assert!(orbits_impl("G", 2).is_err());
}

#[test]
fn classify_reports_the_witness() {
    let text = classify_impl("group = \"A1\"\nphi_units = [\"0\"]\nrho = { partition = [2] }\n", "text", false).unwrap();
    assert!(text.contains("witness        a1"), "{text}");
    let err = classify_impl("group = \"A1\"\nphi_units = []\n", "text", false).unwrap_err();
    assert!(err.starts_with("phi_units"), "{err}");
    assert!(classify_impl("group = \"A1\"\nphi_units = [\"0\"]\n", "yaml", false).is_err());
}

#[test]
fn trivial_unit_reduces_only_at_one_half() {
    let pts = scan_impl("0", 6).unwrap();
    assert_eq!(pts.len(), 12);
    let reducible: Vec<&str> = pts.iter().filter(|p| !p.irreducible).map(|p| p.nu.as_str()).collect();
    assert_eq!(reducible, vec!["1/2"]);
    assert_eq!(pts.iter().find(|p| p.nu == "1/2").unwrap().vanishing, vec!["q^1".to_string()]);
}

#[test]
fn quadratic_unit_never_reduces() {
    assert!(scan_impl("1/2", 8).unwrap().iter().all(|p| p.irreducible));
    assert!(scan_impl("0", 0).is_err());
}
