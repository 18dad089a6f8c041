//! Per-scenario reports. The machine form is JSON with sorted keys; the text
//! form is for reading.

use std::fmt::Write as _;

use arthur_core::classifier::{analyze, PacketAnalysis, VerdictKind};
use arthur_core::lfactors::{pole_locations, EulerFactor, LocalLFactor};
use arthur_core::monomial::fmt_ratio;
use arthur_core::parameters::{decompose_phi0_phiplus, is_tempered, phi_psi};
use arthur_core::root_datum::Root;
use arthur_core::QMonomial;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};
use crate::scenario::Checked;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Machine,
}

/// `ζ·q^a` as `{unit: "k/m", exponent: "num/den"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mono {
    pub unit: String,
    pub exponent: String,
}

impl From<&QMonomial> for Mono {
    fn from(m: &QMonomial) -> Self {
        Mono {
            unit: fmt_ratio(&m.unit()),
            exponent: fmt_ratio(&m.exponent()),
        }
    }
}

impl Mono {
    pub fn to_monomial(&self) -> Option<QMonomial> {
        let unit = arthur_core::monomial::parse_ratio(&self.unit)?;
        let exponent = arthur_core::monomial::parse_ratio(&self.exponent)?;
        Some(QMonomial::new(unit, exponent))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootEntry {
    pub name: String,
    pub coeffs: Vec<i32>,
}

impl From<&Root> for RootEntry {
    fn from(r: &Root) -> Self {
        RootEntry {
            name: r.to_string(),
            coeffs: r.coeffs().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factor {
    pub level: u32,
    pub root: RootEntry,
    pub eigenvalue: Mono,
}

impl From<&EulerFactor> for Factor {
    fn from(f: &EulerFactor) -> Self {
        Factor {
            level: f.level,
            root: (&f.root).into(),
            eigenvalue: (&f.eigenvalue).into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Level {
    pub level: u32,
    pub eigenvalues: Vec<Mono>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rho {
    pub partition: Option<Vec<usize>>,
    pub h: Vec<i64>,
    pub s: Vec<RootEntry>,
    pub very_even: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub phi0_units: Vec<String>,
    pub phi_plus: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub eigenvalue: Mono,
    pub s: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub kind: String,
    pub witness: Option<RootEntry>,
    pub certificate: Option<Certificate>,
    pub conclusion: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Irreducibility {
    pub irreducible: bool,
    /// Factors of `L(s, r~)` vanishing at `s = 1`.
    pub vanishing_factors: Vec<Factor>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Oriented<T> {
    pub r: T,
    pub r_tilde: T,
}

/// Full per-root factor lists, emitted with `--certify`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expanded {
    pub dominant_s: Vec<RootEntry>,
    pub factors: Oriented<Vec<Factor>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub label: String,
    pub group: String,
    pub dual_group: String,
    pub generic_assumption: bool,
    pub phi_units: Vec<String>,
    pub rho: Rho,
    /// `φ_ψ` evaluated on the dual simple roots.
    pub phi_psi: Vec<Mono>,
    pub decomposition: Decomposition,
    /// 1-based simple reflections taking the exponents to the dominant chamber.
    pub weyl_word: Vec<usize>,
    /// 1-based simple roots of the defining Levi.
    pub theta: Vec<usize>,
    /// In the simple roots of `G`.
    pub nu: Vec<String>,
    /// Dominant Langlands parameter on the dual simple roots; together with
    /// `theta` this is all the L-factor computation needs.
    pub langlands: Vec<Mono>,
    pub tempered: bool,
    pub verdict: Verdict,
    pub irreducibility: Irreducibility,
    pub genericity: String,
    pub l_factors: Oriented<Vec<Level>>,
    pub poles: Oriented<Vec<String>>,
    pub expanded: Option<Expanded>,
}

fn levels(l: &LocalLFactor) -> Vec<Level> {
    let mut out: Vec<Level> = Vec::new();
    for f in &l.factors {
        match out.iter_mut().find(|x| x.level == f.level) {
            Some(x) => x.eigenvalues.push((&f.eigenvalue).into()),
            None => out.push(Level {
                level: f.level,
                eigenvalues: vec![(&f.eigenvalue).into()],
            }),
        }
    }
    out.sort_by_key(|x| x.level);
    for x in &mut out {
        x.eigenvalues.sort_by(|a, b| (&a.exponent, &a.unit).cmp(&(&b.exponent, &b.unit)));
    }
    out
}

fn poles(l: &LocalLFactor) -> Vec<String> {
    pole_locations(l).iter().map(fmt_ratio).collect()
}

fn one_based(it: impl IntoIterator<Item = usize>) -> Vec<usize> {
    it.into_iter().map(|i| i + 1).collect()
}

pub fn build_report(c: &Checked, certify: bool) -> CliResult<Report> {
    let psi = &c.psi;
    let a: PacketAnalysis = analyze(psi, c.scenario.generic_assumption).map_err(|e| CliError::from_core("scenario", e))?;
    let p = phi_psi(psi);
    let (phi0, plus) = decompose_phi0_phiplus(&p);
    let sm = &a.standard_module;
    let v = &a.verdict;
    let conclusion = match v.kind {
        VerdictKind::Tempered => "tempered parameter; a generic member is not excluded",
        VerdictKind::NonTempered => "the packet of phi_psi contains no generic member",
    };
    let expanded = certify.then(|| Expanded {
        dominant_s: a.dominant_s.iter().map(Into::into).collect(),
        factors: Oriented {
            r: a.r.factors.iter().map(Into::into).collect(),
            r_tilde: a.r_tilde.factors.iter().map(Into::into).collect(),
        },
    });
    Ok(Report {
        label: c.scenario.label.clone(),
        group: c.group.to_string(),
        dual_group: c.datum.spec().to_string(),
        generic_assumption: c.scenario.generic_assumption,
        phi_units: psi.phi().unit_angles().iter().map(fmt_ratio).collect(),
        rho: Rho {
            partition: c.partition.as_ref().map(|p| p.parts().to_vec()),
            h: psi.rho().h().values(),
            s: psi.rho().s().iter().map(Into::into).collect(),
            very_even: c.very_even,
        },
        phi_psi: p.coords().iter().map(Into::into).collect(),
        decomposition: Decomposition {
            phi0_units: phi0.unit_angles().iter().map(fmt_ratio).collect(),
            phi_plus: plus.entries().iter().map(fmt_ratio).collect(),
        },
        weyl_word: one_based(sm.weyl_word().iter().copied()),
        theta: one_based(sm.theta().indices()),
        nu: sm.nu_root_coordinates().iter().map(fmt_ratio).collect(),
        langlands: sm.langlands_parameter().coords().iter().map(Into::into).collect(),
        tempered: is_tempered(&p),
        verdict: Verdict {
            kind: match v.kind {
                VerdictKind::Tempered => "tempered",
                VerdictKind::NonTempered => "non-tempered",
            }
            .into(),
            witness: v.witness.as_ref().map(Into::into),
            certificate: v.certificate.as_ref().map(|c| Certificate {
                eigenvalue: (&c.eigenvalue).into(),
                s: fmt_ratio(&c.s),
            }),
            conclusion: conclusion.into(),
        },
        irreducibility: Irreducibility {
            irreducible: a.irreducibility.irreducible,
            vanishing_factors: a.irreducibility.witnesses.iter().map(Into::into).collect(),
        },
        genericity: a.genericity.to_string(),
        l_factors: Oriented {
            r: levels(&a.r),
            r_tilde: levels(&a.r_tilde),
        },
        poles: Oriented {
            r: poles(&a.r),
            r_tilde: poles(&a.r_tilde),
        },
        expanded,
    })
}

/// Canonical JSON: keys sorted, two-space indent, trailing newline.
pub fn to_machine<T: Serialize>(value: &T) -> String {
    // serde_json's map is a BTreeMap unless preserve_order is enabled
    let v = serde_json::to_value(value).expect("report types serialize");
    let mut s = serde_json::to_string_pretty(&v).expect("value serializes");
    s.push('\n');
    s
}

pub fn parse_machine(text: &str) -> CliResult<Report> {
    serde_json::from_str(text).map_err(|e| CliError::validation("report", e))
}

fn mono_text(m: &Mono) -> String {
    m.to_monomial().map_or_else(|| format!("{m:?}"), |x| x.to_string())
}

fn list<T>(items: &[T], f: impl Fn(&T) -> String) -> String {
    let v: Vec<String> = items.iter().map(f).collect();
    format!("[{}]", v.join(", "))
}

pub fn to_text(r: &Report) -> String {
    let mut s = String::new();
    let label = if r.label.is_empty() { "(unlabelled)" } else { &r.label };
    let _ = writeln!(s, "scenario {label}: G = {}, dual {}", r.group, r.dual_group);
    let rho = match &r.rho.partition {
        Some(p) => format!("partition {}", list(p, |x| x.to_string())),
        None if r.rho.s.is_empty() => "trivial".into(),
        None => "expert".into(),
    };
    let _ = writeln!(s, "  phi units      {}", list(&r.phi_units, String::clone));
    let _ = writeln!(
        s,
        "  rho            {rho}, H = {}, S = {}{}",
        list(&r.rho.h, |x| x.to_string()),
        list(&r.rho.s, |x| x.name.clone()),
        if r.rho.very_even { " (very even)" } else { "" }
    );
    let _ = writeln!(s, "  phi_psi        {}", list(&r.phi_psi, mono_text));
    let _ = writeln!(
        s,
        "  phi0 / phi+    {} / {}",
        list(&r.decomposition.phi0_units, String::clone),
        list(&r.decomposition.phi_plus, String::clone)
    );
    let _ = writeln!(s, "  weyl word      {}", list(&r.weyl_word, |x| format!("s{x}")));
    let _ = writeln!(s, "  theta          {}", list(&r.theta, |x| format!("a{x}")));
    let _ = writeln!(s, "  nu             {}", list(&r.nu, String::clone));
    let _ = writeln!(s, "  langlands      {}", list(&r.langlands, mono_text));
    let _ = writeln!(s, "  tempered       {}", r.tempered);
    let _ = writeln!(s, "  verdict        {}", r.verdict.kind);
    if let Some(w) = &r.verdict.witness {
        let _ = writeln!(s, "  witness        {}", w.name);
    }
    if let Some(c) = &r.verdict.certificate {
        let _ = writeln!(
            s,
            "  certificate    eigenvalue {}, L(s, r~)^-1 vanishes at s = {}",
            mono_text(&c.eigenvalue),
            c.s
        );
    }
    let _ = writeln!(s, "  conclusion     {}", r.verdict.conclusion);
    let _ = writeln!(s, "  irreducible    {}", r.irreducibility.irreducible);
    let _ = writeln!(s, "  genericity     {}", r.genericity);
    for (name, lv, pl) in [
        ("r~", &r.l_factors.r_tilde, &r.poles.r_tilde),
        ("r", &r.l_factors.r, &r.poles.r),
    ] {
        for l in lv {
            let _ = writeln!(s, "  L(s, {name}_{})  {}", l.level, list(&l.eigenvalues, mono_text));
        }
        let _ = writeln!(s, "  poles {name:<8} {}", list(pl, String::clone));
    }
    if let Some(x) = &r.expanded {
        let _ = writeln!(s, "  dominant S     {}", list(&x.dominant_s, |r| r.name.clone()));
        for (name, fs) in [("r~", &x.factors.r_tilde), ("r", &x.factors.r)] {
            for f in fs {
                let _ = writeln!(
                    s,
                    "    {name} level {} root {:<10} {}",
                    f.level,
                    f.root.name,
                    mono_text(&f.eigenvalue)
                );
            }
        }
    }
    s
}

pub fn render(r: &Report, format: Format) -> String {
    match format {
        Format::Text => to_text(r),
        Format::Machine => to_machine(r),
    }
}
