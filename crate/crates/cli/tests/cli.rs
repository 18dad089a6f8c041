use std::path::PathBuf;
use std::process::Command;

use arthur_cli::global::{parse_family, ramanujan_report};
use arthur_cli::report::{build_report, parse_machine, to_machine};
use arthur_cli::scenario::parse_scenario;
use arthur_cli::CliError;
use arthur_core::lfactors::{grade_nilradical, inverse_vanishes_at, l_factor, Orientation};
use arthur_core::parameters::UnramifiedParameter;
use arthur_core::root_datum::{CartanSpec, LeviSubset, RootDatum};
use arthur_core::Rational;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn scenario_paths() -> Vec<PathBuf> {
    let mut v: Vec<PathBuf> = std::fs::read_dir(root().join("examples/scenarios"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    v.sort();
    v
}

fn report_for(text: &str, certify: bool) -> arthur_cli::report::Report {
    let c = parse_scenario(text).unwrap().validate().unwrap();
    build_report(&c, certify).unwrap()
}

fn arthur(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_arthur")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn machine_reports_round_trip() {
    for path in scenario_paths() {
        let text = std::fs::read_to_string(&path).unwrap();
        for certify in [false, true] {
            let r = report_for(&text, certify);
            let emitted = to_machine(&r);
            assert_eq!(parse_machine(&emitted).unwrap(), r, "{}", path.display());
            assert_eq!(to_machine(&parse_machine(&emitted).unwrap()), emitted);
        }
    }
}

#[test]
fn report_certificate_reverifies_with_lfactors_alone() {
    for path in scenario_paths() {
        let r = report_for(&std::fs::read_to_string(&path).unwrap(), false);
        let d = std::sync::Arc::new(RootDatum::new(r.dual_group.parse::<CartanSpec>().unwrap()));
        let coords = r.langlands.iter().map(|m| m.to_monomial().unwrap()).collect();
        let p = UnramifiedParameter::new(d.clone(), coords).unwrap();
        let theta = LeviSubset::new(d.rank(), r.theta.iter().map(|i| i - 1)).unwrap();
        let l = l_factor(&grade_nilradical(&d, &theta).unwrap(), &p, Orientation::RTilde).unwrap();
        let vanishes = inverse_vanishes_at(&l, Rational::from_integer(1)).vanishes;
        assert_eq!(vanishes, r.verdict.kind == "non-tempered", "{}", path.display());
        assert_eq!(r.verdict.certificate.is_some(), vanishes);
    }
}

#[test]
fn tempered_scenario_has_zero_nu() {
    let r = report_for("group = \"A2\"\nphi_units = [\"1/4\", \"3/4\"]\n", false);
    assert_eq!(r.verdict.kind, "tempered");
    assert!(r.tempered);
    assert!(r.nu.iter().all(|x| x == "0/1"));
}

#[test]
fn certify_adds_per_root_factors() {
    let text = std::fs::read_to_string(root().join("examples/scenarios/a2_subregular.toml")).unwrap();
    let r = report_for(&text, true);
    let x = r.expanded.unwrap();
    assert_eq!(x.factors.r_tilde.len(), 3);
    assert_eq!(x.dominant_s.len(), 1);
    assert_eq!(x.dominant_s[0].name, "a1+a2");
}

fn validation_path(text: &str) -> String {
    match parse_scenario(text).and_then(|s| s.validate()) {
        Err(CliError::Validation { path, message }) => format!("{path}: {message}"),
        other => panic!("expected a validation error, got {other:?}"),
    }
}

#[test]
fn validation_errors_name_the_field() {
    let parity = validation_path("group = \"B2\"\nphi_units = [\"0\", \"0\"]\nrho = { partition = [3, 1] }\n");
    assert!(parity.starts_with("rho.partition:"), "{parity}");
    assert!(parity.contains("part 3"), "{parity}");

    let angle = validation_path("group = \"A2\"\nphi_units = [\"0\", \"5/4\"]\n");
    assert!(angle.starts_with("phi_units[1]:"), "{angle}");

    let len = validation_path("group = \"A2\"\nphi_units = [\"0\"]\n");
    assert!(len.starts_with("phi_units:"), "{len}");

    let group = validation_path("group = \"E8\"\nphi_units = []\n");
    assert!(group.starts_with("group:"), "{group}");

    let rho = validation_path("group = \"A1\"\nphi_units = [\"0\"]\nrho = \"regular\"\n");
    assert!(rho.starts_with("rho:"), "{rho}");

    // the unit 1/2 on a1 is not fixed by the regular SL2
    let centralizer = validation_path("group = \"A1\"\nphi_units = [\"1/2\"]\nrho = { partition = [2] }\n");
    assert!(centralizer.contains("centralizer"), "{centralizer}");
}

#[test]
fn family_errors_and_modes() {
    let empty = ramanujan_report(&parse_family("assumptions = []\n").unwrap());
    assert!(matches!(empty, Err(CliError::Validation { ref path, .. }) if path == "places"));

    let bad = parse_family(
        "[[places]]\nlabel = \"v\"\n[places.scenario]\ngroup = \"A1\"\nphi_units = [\"3/2\"]\n",
    )
    .unwrap();
    match ramanujan_report(&bad) {
        Err(CliError::Validation { path, .. }) => assert_eq!(path, "places[0].scenario.phi_units[0]"),
        other => panic!("{other:?}"),
    }

    let descriptive = parse_family(
        "[[places]]\nlabel = \"v=3\"\n[places.scenario]\ngroup = \"A1\"\nphi_units = [\"0\"]\n\
         rho = { partition = [2] }\ngeneric_assumption = false\n",
    )
    .unwrap();
    let g = ramanujan_report(&descriptive).unwrap();
    assert_eq!(g.mode, "descriptive");
    assert_eq!(g.non_tempered, vec!["v=3".to_string()]);
    assert!(g.assumptions.iter().all(|a| !a.invoked));
}

#[test]
fn exit_codes() {
    let good = root().join("examples/scenarios/a1_principal.toml");
    let (code, out, _) = arthur(&["check", good.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("non-tempered"));

    let dir = std::env::temp_dir().join(format!("arthur-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.toml");
    std::fs::write(&bad, "group = \"B2\"\nphi_units = [\"0\", \"0\"]\nrho = { partition = [3, 1] }\n").unwrap();
    let (code, _, err) = arthur(&["check", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("rho.partition"), "{err}");

    let (code, out, _) = arthur(&["batch", root().join("examples/scenarios").to_str().unwrap(), "--format", "machine"]);
    assert_eq!(code, 0);
    assert_eq!(out.matches("\"dual_group\"").count(), scenario_paths().len());

    let (code, _, _) = arthur(&["batch", dir.to_str().unwrap()]);
    assert_eq!(code, 1);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn orbits_verb_lists_every_partition() {
    let (code, out, _) = arthur(&["orbits", "D", "4"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 10);
    assert_eq!(out.lines().filter(|l| l.ends_with("very even")).count(), 2);
    let (code, _, _) = arthur(&["orbits", "G", "2"]);
    assert_eq!(code, 1);
}
