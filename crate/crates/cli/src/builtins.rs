//! Named algebras, maps, generators and presentations, so every command
//! runs without hand-written input files.

use std::path::Path;
use std::sync::Arc;

use jordan_core::counterex::build_examb;
use jordan_core::freealg::{parse_poly, TIdealGenerator};
use jordan_core::jordanmaps::LinearMap;
use jordan_core::linalg::Vector;
use jordan_core::rational::Rational;
use jordan_core::semigroup::{build_pe1, build_pe2, Pe2Instance, Presentation};
use jordan_core::strucalg::{
    algebra_from_json, direct_sum, grassmann_algebra, involution_symplectic, involution_transpose, matrix_algebra,
    scalars, upper_triangular, InvolutionMap, StructureAlgebra,
};

use crate::error::{CliError, Result};

pub const ALGEBRAS: &str = "m2, m3, mN, ut2, ut3, utN, g4, gN, grassmann-N, m2xm2, scalars, pe2-default, or a JSON file";
pub const MAPS: &str =
    "identity, involution, transpose, symplectic, swap-transpose, reversion, examb, pe2, or a JSON file";
pub const GENERATORS: &str = "hall, comm, or an expression such as \"comm(x1,x2)*x3\"";
pub const PRESENTATIONS: &str = "default, commutative, free-N, or a presentation file";

pub const HALL: &str = "comm(comm(x1,x2)*comm(x1,x2),x3)";
pub const COMMUTATOR: &str = "comm(x1,x2)";

#[derive(Clone, Debug)]
enum Kind {
    Matrix(usize),
    Grassmann(usize),
    MatrixPair,
    Pe2(Box<Pe2Instance>),
    Other,
}

/// A resolved algebra with its distinguished involution, if any.
#[derive(Clone, Debug)]
pub struct NamedAlgebra {
    pub name: String,
    pub algebra: Arc<StructureAlgebra>,
    pub involution: Option<InvolutionMap>,
    kind: Kind,
}

impl NamedAlgebra {
    fn plain(name: &str, a: StructureAlgebra, involution: Option<InvolutionMap>, kind: Kind) -> Self {
        NamedAlgebra {
            name: name.into(),
            algebra: Arc::new(a),
            involution,
            kind,
        }
    }

    /// The pe2 instance behind `pe2-default`.
    pub fn pe2(&self) -> Option<&Pe2Instance> {
        match &self.kind {
            Kind::Pe2(p) => Some(p),
            _ => None,
        }
    }
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.into(),
        source,
    })
}

fn looks_like_file(name: &str) -> bool {
    name.contains('/') || name.contains('.') || Path::new(name).exists()
}

fn size_after(name: &str, prefix: &str) -> Option<usize> {
    name.strip_prefix(prefix)?.parse().ok().filter(|&n| n >= 1)
}

/// `(e_S)^* = (-1)^{k(k-1)/2} e_S` on the Grassmann algebra, `k = |S|`.
pub fn grassmann_reversion(a: &StructureAlgebra) -> Result<InvolutionMap> {
    let images = (0..a.dim())
        .map(|s| {
            let k = (s as u32).count_ones();
            let c = if (k * k.saturating_sub(1) / 2) % 2 == 0 { Rational::ONE } else { -Rational::ONE };
            Vector::single(s, c)
        })
        .collect();
    Ok(InvolutionMap::new(a, images)?)
}

/// `(x, y) -> (y^T, x^T)` on `M2 ⊕ M2`.
fn pair_exchange(a: &StructureAlgebra) -> Result<InvolutionMap> {
    let t = |k: usize| (k % 2) * 2 + k / 2;
    let images = (0..8)
        .map(|k| Vector::unit(if k < 4 { t(k) + 4 } else { t(k - 4) }))
        .collect();
    Ok(InvolutionMap::new(a, images)?)
}

pub fn pe2_default(max_len: usize, seed: u64) -> Result<Pe2Instance> {
    let gen = TIdealGenerator::new(parse_poly(COMMUTATOR)?)?;
    Ok(build_pe2(build_pe1(&Presentation::default_family(), &gen, max_len, seed)?)?)
}

/// Resolves a builtin name or reads a JSON algebra file.
pub fn algebra(name: &str, max_len: usize, seed: u64) -> Result<NamedAlgebra> {
    if let Some(n) = size_after(name, "m").filter(|&n| n <= 12) {
        let a = matrix_algebra(n);
        let t = involution_transpose(&a, n)?;
        return Ok(NamedAlgebra::plain(name, a, Some(t), Kind::Matrix(n)));
    }
    if let Some(n) = size_after(name, "ut").filter(|&n| n <= 12) {
        return Ok(NamedAlgebra::plain(name, upper_triangular(n, false), None, Kind::Other));
    }
    let grassmann = size_after(name, "g").or_else(|| size_after(name, "grassmann-"));
    if let Some(n) = grassmann.filter(|&n| n <= 10) {
        let a = grassmann_algebra(n);
        let r = grassmann_reversion(&a)?;
        return Ok(NamedAlgebra::plain(name, a, Some(r), Kind::Grassmann(n)));
    }
    match name {
        "m2xm2" => {
            let m2 = matrix_algebra(2);
            let a = direct_sum(&m2, &m2);
            let x = pair_exchange(&a)?;
            Ok(NamedAlgebra::plain(name, a, Some(x), Kind::MatrixPair))
        }
        "scalars" => Ok(NamedAlgebra::plain(name, scalars(), None, Kind::Other)),
        "pe2-default" => {
            let p = pe2_default(max_len, seed)?;
            Ok(NamedAlgebra {
                name: name.into(),
                algebra: p.algebra.clone(),
                involution: Some(p.star.clone()),
                kind: Kind::Pe2(Box::new(p)),
            })
        }
        _ if looks_like_file(name) => {
            let (a, inv) = algebra_from_json(&read(name)?)?;
            Ok(NamedAlgebra::plain(name, a, inv, Kind::Other))
        }
        _ => Err(CliError::usage(format!("unknown algebra `{name}`; expected {ALGEBRAS}"))),
    }
}

fn from_involution(a: &NamedAlgebra, inv: &InvolutionMap) -> Result<LinearMap> {
    Ok(LinearMap::new(a.algebra.clone(), a.algebra.clone(), inv.images().to_vec())?)
}

/// Resolves a builtin map on `a` or reads a JSON map file from `a` to `a`.
pub fn map(a: &NamedAlgebra, name: &str, seed: u64) -> Result<LinearMap> {
    let wrong = || CliError::usage(format!("map `{name}` is not defined on `{}`", a.name));
    match (name, &a.kind) {
        ("identity", _) => Ok(LinearMap::identity(a.algebra.clone())),
        ("involution", _) => from_involution(a, a.involution.as_ref().ok_or_else(wrong)?),
        ("transpose", Kind::Matrix(n)) => from_involution(a, &involution_transpose(&a.algebra, *n)?),
        ("symplectic", Kind::Matrix(2)) => from_involution(a, &involution_symplectic(&a.algebra)?),
        ("reversion", Kind::Grassmann(_)) => from_involution(a, &grassmann_reversion(&a.algebra)?),
        ("swap-transpose", Kind::MatrixPair) => {
            let t = |k: usize| (k % 2) * 2 + k / 2;
            Ok(LinearMap::from_fn(a.algebra.clone(), a.algebra.clone(), |k| {
                Vector::unit(if k < 4 { k } else { t(k - 4) + 4 })
            })?)
        }
        ("examb", Kind::Grassmann(n)) => Ok(build_examb(*n, 1, seed)?.lapp.phi),
        ("pe2", Kind::Pe2(p)) => Ok(p.phi.clone()),
        (_, _) if looks_like_file(name) => {
            Ok(LinearMap::from_json(&read(name)?, a.algebra.clone(), a.algebra.clone())?)
        }
        ("transpose" | "symplectic" | "reversion" | "swap-transpose" | "examb" | "pe2", _) => Err(wrong()),
        _ => Err(CliError::usage(format!("unknown map `{name}`; expected {MAPS}"))),
    }
}

/// `hall`, `comm`, or a polynomial expression.
pub fn generator(name: &str) -> Result<TIdealGenerator> {
    let text = match name {
        "hall" => HALL,
        "comm" => COMMUTATOR,
        other => other,
    };
    Ok(TIdealGenerator::new(parse_poly(text)?)?)
}

/// `default`, `commutative`, `free-N`, or a presentation file.
pub fn presentation(name: &str) -> Result<Presentation> {
    const LETTERS: [&str; 8] = ["a", "b", "c", "d", "e", "f", "g", "h"];
    if let Some(n) = size_after(name, "free-").filter(|&n| n <= LETTERS.len()) {
        return Ok(Presentation::free(&LETTERS[..n]));
    }
    match name {
        "default" => Ok(Presentation::default_family()),
        "commutative" => Ok(Presentation::commutative_pair()),
        _ if looks_like_file(name) => Ok(read(name)?.parse()?),
        _ => Err(CliError::usage(format!("unknown presentation `{name}`; expected {PRESENTATIONS}"))),
    }
}

/// Every builtin algebra exercised by the structural suite.
pub fn structural_names() -> &'static [&'static str] {
    &["m2", "m3", "ut2", "ut3", "g4", "m2xm2", "scalars"]
}
