//! Published reference values, transcribed as printed (typos included).

use cyclo::CycloNumber;

use crate::braid::EigenvalueMultiset;
use crate::fusion::FusionRing;
use crate::Error;

/// Z(E) fusion products (a, b, a⊗b) from the three printed tables.
pub const ZE_PRODUCTS: &[(&str, &str, &str)] = &[
    // F ⊗ F
    ("Y", "Y", "1"),
    ("Y", "X4", "X5"),
    ("Y", "X5", "X4"),
    ("Y", "U", "V"),
    ("Y", "V", "U"),
    ("X4", "Y", "X5"),
    ("X4", "X4", "1+X4+V"),
    ("X4", "X5", "Y+X5+U"),
    ("X4", "U", "X5+U+V"),
    ("X4", "V", "X4+U+V"),
    ("X5", "Y", "X4"),
    ("X5", "X4", "Y+X5+U"),
    ("X5", "X5", "1+X4+V"),
    ("X5", "U", "X4+U+V"),
    ("X5", "V", "X5+U+V"),
    ("U", "Y", "V"),
    ("U", "X4", "X5+U+V"),
    ("U", "X5", "X4+U+V"),
    ("U", "U", "1+X4+X5+U+V"),
    ("U", "V", "Y+X4+X5+U+V"),
    ("V", "Y", "U"),
    ("V", "X4", "X4+U+V"),
    ("V", "X5", "X5+U+V"),
    ("V", "U", "Y+X4+X5+U+V"),
    ("V", "V", "1+X4+X5+U+V"),
    // F ⊗ M
    ("Y", "X1", "X1"),
    ("Y", "X2", "X3"),
    ("Y", "X3", "X2"),
    ("Y", "W", "W"),
    ("X4", "X1", "X1+W"),
    ("X4", "X2", "X3+W"),
    ("X4", "X3", "X2+W"),
    ("X4", "W", "X1+X2+X3+W"),
    ("X5", "X1", "X1+W"),
    ("X5", "X2", "X2+W"),
    ("X5", "X3", "X3+W"),
    ("X5", "W", "X1+X2+X3+W"),
    ("U", "X1", "X2+X3+W"),
    ("U", "X2", "X1+X3+W"),
    ("U", "X3", "X1+X2+W"),
    ("U", "W", "X1+X2+X3+2W"),
    ("V", "X1", "X2+X3+W"),
    ("V", "X2", "X1+X3+W"),
    ("V", "X3", "X1+X3+W"),
    ("V", "W", "X1+X2+X3+2W"),
    // M ⊗ M
    ("X1", "X1", "1+Y+X4+X5"),
    ("X1", "X2", "U+V"),
    ("X1", "X3", "U+V"),
    ("X1", "W", "X4+X5+U+V"),
    ("X2", "X1", "U+V"),
    ("X2", "X2", "Y+X4+U"),
    ("X2", "X3", "1+X5+V"),
    ("X2", "W", "X4+X5+U+V"),
    ("X3", "X1", "U+V"),
    ("X3", "X2", "1+X5+V"),
    ("X3", "X3", "Y+X4+U"),
    ("X3", "W", "X4+X5+U+V"),
    ("W", "X1", "X4+X5+U+V"),
    ("W", "X2", "X4+X5+U+V"),
    ("W", "X3", "X4+X5+U+V"),
    ("W", "W", "1+Y+X4+X5+2U+2V"),
];

/// The one printed entry that is inconsistent, with its corrected value.
pub const ZE_TYPO: (&str, &str, &str, &str) = ("V", "X2", "X1+X3+W", "X1+X2+W");

/// F and M as printed.
pub const ZE_F: &[&str] = &["1", "Y", "X4", "X5", "U", "V"];
pub const ZE_M: &[&str] = &["X1", "X2", "X3", "W"];

/// Parse a sum such as `1+X4+2V` into a multiplicity vector.
pub fn parse_sum(fr: &FusionRing, s: &str) -> Result<Vec<u32>, Error> {
    let mut v = vec![0; fr.rank()];
    for term in s.split('+') {
        let term = term.trim();
        let digits = term.chars().take_while(char::is_ascii_digit).count();
        let (mult, label) = if digits > 0 && digits < term.len() {
            (term[..digits].parse::<u32>().unwrap(), &term[digits..])
        } else {
            (1, term)
        };
        let k = fr.index(label).ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
        v[k] += mult;
    }
    Ok(v)
}

fn rows(s: &[&str]) -> Vec<Vec<u32>> {
    s.iter().map(|r| r.split_whitespace().map(|x| x.parse().unwrap()).collect()).collect()
}

/// Printed N_{π1}, label order 1, π1, π2, σ1–σ3, μ1–μ6.
pub fn haagerup_n_pi1() -> Vec<Vec<u32>> {
    rows(&[
        "0 1 0 0 0 0 0 0 0 0 0 0",
        "1 1 1 1 1 1 1 1 1 1 1 1",
        "0 1 2 1 1 1 1 1 1 1 1 1",
        "0 1 1 2 1 1 1 1 1 1 1 1",
        "0 1 1 1 2 1 1 1 1 1 1 1",
        "0 1 1 1 1 2 1 1 1 1 1 1",
        "0 1 1 1 1 1 0 1 1 1 1 1",
        "0 1 1 1 1 1 1 0 1 1 1 1",
        "0 1 1 1 1 1 1 1 0 1 1 1",
        "0 1 1 1 1 1 1 1 1 0 1 1",
        "0 1 1 1 1 1 1 1 1 1 0 1",
        "0 1 1 1 1 1 1 1 1 1 1 0",
    ])
}

pub fn haagerup_n_pi2() -> Vec<Vec<u32>> {
    rows(&[
        "0 0 1 0 0 0 0 0 0 0 0 0",
        "0 1 2 1 1 1 1 1 1 1 1 1",
        "1 2 2 1 1 1 1 1 1 1 1 1",
        "0 1 1 1 2 2 1 1 1 1 1 1",
        "0 1 1 2 1 2 1 1 1 1 1 1",
        "0 1 1 2 2 1 1 1 1 1 1 1",
        "0 1 1 1 1 1 1 1 1 1 1 1",
        "0 1 1 1 1 1 1 1 1 1 1 1",
        "0 1 1 1 1 1 1 1 1 1 1 1",
        "0 1 1 1 1 1 1 1 1 1 1 1",
        "0 1 1 1 1 1 1 1 1 1 1 1",
        "0 1 1 1 1 1 1 1 1 1 1 1",
    ])
}

/// Printed as N_{μ1}; it is the fusion matrix of μ2 in the bundled labeling.
pub fn haagerup_n_mu1() -> Vec<Vec<u32>> {
    rows(&[
        "0 0 0 0 0 0 0 1 0 0 0 0",
        "0 1 1 1 1 1 1 0 1 1 1 1",
        "0 1 1 1 1 1 1 1 1 1 1 1",
        "0 1 1 1 1 1 1 1 1 1 1 1",
        "0 1 1 1 1 1 1 1 1 1 1 1",
        "0 1 1 1 1 1 1 1 1 1 1 1",
        "0 1 1 1 1 1 1 1 1 1 0 0",
        "1 0 1 1 1 1 1 1 0 1 1 1",
        "0 1 1 1 1 1 1 0 1 0 1 1",
        "0 1 1 1 1 1 1 1 0 1 1 0",
        "0 1 1 1 1 1 0 1 1 1 0 1",
        "0 1 1 1 1 1 0 1 1 0 1 1",
    ])
}

/// The relabeling (μ1 μ2)(μ3 μ4)(μ5 μ6).
pub const HAAGERUP_MU_SWAP: &[(&str, &str)] = &[("mu1", "mu2"), ("mu3", "mu4"), ("mu5", "mu6")];

/// Entries γ^a·ω^b with γ = e^{2πi/13}, ω = e^{2πi/3}, times the common γ⁴.
fn gamma_list(exps: &[(i64, i64)]) -> EigenvalueMultiset {
    EigenvalueMultiset::new(
        exps.iter().map(|&(a, b)| &CycloNumber::root_of_unity(13, 4 + a) * &CycloNumber::root_of_unity(3, b)).collect(),
    )
}

/// Printed squared eigenvalues on Hom(μ2, μ1^{⊗3}).
pub fn haagerup_eigs_7() -> EigenvalueMultiset {
    gamma_list(&[(0, 0), (0, 0), (0, 1), (0, -1), (2, 0), (-2, 0), (-5, 0)])
}

/// Printed squared eigenvalues on Hom(μ1, μ1^{⊗3}).
pub fn haagerup_eigs_10() -> EigenvalueMultiset {
    gamma_list(&[(0, 0), (0, 0), (0, 0), (0, 1), (0, -1), (2, 0), (-2, 0), (-5, 0), (6, 0), (-6, 0)])
}

/// Eigenvalues of the X4 braiding, {q⁻², −q⁻¹, q} with q = e^{πi/6}.
pub fn x4_eigs() -> EigenvalueMultiset {
    let q = |k| CycloNumber::root_of_unity(12, k);
    EigenvalueMultiset::new(vec![q(-2), -q(-1), q(1)])
}

/// D(Z(H)) as printed in the section on Z(H): (39+3√13)/2.
pub fn haagerup_d_as_printed_early() -> CycloNumber {
    (CycloNumber::from_int(1, 39) + CycloNumber::sqrt_int(13) * CycloNumber::from_int(1, 3)).scale(&cyclo::ratio(1, 2))
}
