use std::collections::BTreeMap;
use std::sync::Arc;

use super::cocycle::{build_cocycle, split_half, SemigroupCocycle};
use super::congruence::find_leff1_witness;
use super::presentation::{Presentation, Word};
use crate::error::{Error, Result};
use crate::freealg::TIdealGenerator;
use crate::jordanmaps::{is_jordan_hom, JordanWitness, LinearMap};
use crate::linalg::{rank, Vector};
use crate::rational::Rational;
use crate::strucalg::{
    cocycle_extension, direct_sum, evaluate, opposite, BilinearForm, InvolutionMap,
    StructureAlgebra,
};

/// The `∼`-classes of words of length `<= L`, numbered by length and then
/// class id, with their truncated products.
#[derive(Clone, Debug)]
struct ClassWindow {
    // offsets[l - 1] = first index of length l; offsets[L] = total
    offsets: Vec<usize>,
    reps: Vec<Word>,
    // product[g] lists the class of rep(g)·rep(h) for every h short enough
    product: Vec<Vec<u32>>,
}

impl ClassWindow {
    fn new(cocycle: &SemigroupCocycle) -> Self {
        let full = cocycle.full();
        let max_len = full.max_len();
        let mut offsets = vec![0];
        let mut reps = Vec::new();
        for l in 1..=max_len {
            reps.extend((0..full.num_classes(l) as u32).map(|c| full.representative(l, c)));
            offsets.push(reps.len());
        }
        let product = reps
            .iter()
            .map(|r| {
                let room = max_len - r.len();
                reps[..offsets[room]]
                    .iter()
                    .map(|s| {
                        let w = [r.as_slice(), s].concat();
                        (offsets[w.len() - 1] + full.class_of(&w) as usize) as u32
                    })
                    .collect()
            })
            .collect();
        ClassWindow {
            offsets,
            reps,
            product,
        }
    }

    fn len(&self) -> usize {
        self.reps.len()
    }

    fn index_of(&self, cocycle: &SemigroupCocycle, w: &[u8]) -> usize {
        self.offsets[w.len() - 1] + cocycle.full().class_of(w) as usize
    }
}

/// `a = e_{r,r+m}(w)` as a value of the generator: the staircase
/// substitution `x_{σ(k)} -> e_{r+k-1,r+k}(s_k)` with `w = s_1⋯s_m`.
#[derive(Clone, Debug)]
pub struct StaircaseCertificate {
    pub element: Vector,
    pub parts: Vec<Word>,
    pub coefficient: Rational,
    pub value: Vector,
}

impl StaircaseCertificate {
    pub fn holds(&self) -> bool {
        !self.coefficient.is_zero() && self.value == self.element.scale(&self.coefficient)
    }
}

/// The outcome of every check performed on the first stage.
#[derive(Clone, Debug, serde::Serialize)]
pub struct Pe1Checks {
    pub staircase: bool,
    /// `a₁b₁ = a₂b₂`
    pub products_agree: bool,
    /// `b₁a₁ = b₂a₂`
    pub reversed_products_agree: bool,
    /// `f(b₁,a₁) = f(b₂,a₂) = 0`
    pub reversed_form_vanishes: bool,
    /// `f(a₁,b₁) ≠ f(a₂,b₂)`
    pub form_differs: bool,
}

impl Pe1Checks {
    pub fn all(&self) -> bool {
        self.staircase
            && self.products_agree
            && self.reversed_products_agree
            && self.reversed_form_vanishes
            && self.form_differs
    }
}

/// Strictly upper triangular `(2m+1)×(2m+1)` matrices over the truncated
/// semigroup algebra, its cocycle `f` and the four witnesses.
#[derive(Clone, Debug)]
pub struct Pe1Instance {
    pub presentation: Presentation,
    pub cocycle: SemigroupCocycle,
    pub m: usize,
    pub size: usize,
    pub algebra: Arc<StructureAlgebra>,
    pub form: BilinearForm,
    /// `(u, v)` with `u ∼ v` and `u ≁_in v`.
    pub witness: (Word, Word),
    /// `(u', u'', v', v'')`
    pub split: (Word, Word, Word, Word),
    pub a1: Vector,
    pub b1: Vector,
    pub a2: Vector,
    pub b2: Vector,
    pub certificates: Vec<StaircaseCertificate>,
    pub checks: Pe1Checks,
    window: ClassWindow,
    pairs: Vec<Vec<usize>>,
}

impl Pe1Instance {
    /// Basis index of `e_{ij}(class of w)`, zero-based positions.
    pub fn unit_index(&self, i: usize, j: usize, w: &[u8]) -> usize {
        self.pairs[i][j] * self.window.len() + self.window.index_of(&self.cocycle, w)
    }

    pub fn matrix_unit(&self, i: usize, j: usize, w: &[u8]) -> Vector {
        Vector::unit(self.unit_index(i, j, w))
    }

    pub fn form_value(&self, x: &Vector, y: &Vector) -> Rational {
        self.form.eval(x, y)
    }

    fn staircase(
        &self,
        gen: &TIdealGenerator,
        row: usize,
        w: &[u8],
    ) -> Result<StaircaseCertificate> {
        let m = self.m;
        let (mono, coefficient) = gen
            .generator()
            .terms()
            .find(|(_, c)| !c.is_zero())
            .map(|(w, c)| (w.letters().to_vec(), c.clone()))
            .ok_or_else(|| Error::Hypothesis("the generator is zero".into()))?;
        let mut parts: Vec<Word> = w[..m - 1].iter().map(|&x| vec![x]).collect();
        parts.push(w[m - 1..].to_vec());
        let assignment: BTreeMap<u32, Vector> = mono
            .iter()
            .zip(&parts)
            .enumerate()
            .map(|(k, (&var, s))| (var, self.matrix_unit(row + k, row + k + 1, s)))
            .collect();
        let value = evaluate(&self.algebra, gen.generator(), &assignment)?;
        Ok(StaircaseCertificate {
            element: self.matrix_unit(row, row + m, w),
            parts,
            coefficient,
            value,
        })
    }
}

/// Builds the truncated algebra `A`, the cocycle `f(e_ij(u), e_jq(v)) =
/// h(u,v)`, and the witnesses `a₁ = e_{1,1+m}(u')`, `b₁ = e_{1+m,1+2m}(u'')`,
/// `a₂`, `b₂` from the first word pair `u ∼ v`, `u ≁_in v` of length
/// `>= 2m`, then runs the staircase and product checks.
pub fn build_pe1(
    pres: &Presentation,
    gen: &TIdealGenerator,
    max_len: usize,
    seed: u64,
) -> Result<Pe1Instance> {
    let m = gen
        .multilinear_degree()
        .ok_or_else(|| Error::Hypothesis("the generator must be multilinear".into()))?;
    if m == 0 {
        return Err(Error::Hypothesis(
            "the generator must have positive degree".into(),
        ));
    }
    if max_len < 2 * m {
        return Err(Error::Hypothesis(format!(
            "the word length bound must be at least {}",
            2 * m
        )));
    }
    let cocycle = build_cocycle(pres, max_len, seed)?;
    let (u, v) = find_leff1_witness(cocycle.full(), cocycle.inner(), 2 * m).ok_or_else(|| {
        Error::Hypothesis(format!(
            "no words u ∼ v with u ≁_in v of length between {} and {max_len}",
            2 * m
        ))
    })?;
    let window = ClassWindow::new(&cocycle);
    let size = 2 * m + 1;
    let g = window.len();
    let mut pairs = vec![vec![usize::MAX; size]; size];
    let mut positions = Vec::new();
    for i in 0..size {
        for j in i + 1..size {
            pairs[i][j] = positions.len();
            positions.push((i, j));
        }
    }
    let dim = positions.len() * g;
    let mut labels = Vec::with_capacity(dim);
    for &(i, j) in &positions {
        for r in &window.reps {
            labels.push(format!("e{}_{}({})", i + 1, j + 1, pres.format_word(r)));
        }
    }
    let mut rows: Vec<Vec<(usize, Vector)>> = vec![Vec::new(); dim];
    let mut form = BilinearForm::new();
    for (p, &(i, j)) in positions.iter().enumerate() {
        for g1 in 0..g {
            let x = p * g + g1;
            for q in j + 1..size {
                let (right, out) = (pairs[j][q], pairs[i][q]);
                for (g2, &k) in window.product[g1].iter().enumerate() {
                    let y = right * g + g2;
                    rows[x].push((y, Vector::unit(out * g + k as usize)));
                    form.set(x, y, cocycle.h(&window.reps[g1], &window.reps[g2]));
                }
            }
        }
    }
    let algebra = Arc::new(StructureAlgebra::from_rows_unchecked(
        format!("SUT{size}[{max_len}]"),
        labels,
        rows,
        None,
    )?);
    let (u1, u2) = split_half(&u);
    let (v1, v2) = split_half(&v);
    if u2.len() < m {
        return Err(Error::Hypothesis(format!(
            "the witness halves are shorter than {m}"
        )));
    }
    let mut inst = Pe1Instance {
        presentation: pres.clone(),
        cocycle,
        m,
        size,
        algebra,
        form,
        witness: (u, v),
        split: (u1, u2, v1, v2),
        a1: Vector::zero(),
        b1: Vector::zero(),
        a2: Vector::zero(),
        b2: Vector::zero(),
        certificates: Vec::new(),
        checks: Pe1Checks {
            staircase: false,
            products_agree: false,
            reversed_products_agree: false,
            reversed_form_vanishes: false,
            form_differs: false,
        },
        window,
        pairs,
    };
    let (u1, u2, v1, v2) = inst.split.clone();
    inst.a1 = inst.matrix_unit(0, m, &u1);
    inst.b1 = inst.matrix_unit(m, 2 * m, &u2);
    inst.a2 = inst.matrix_unit(0, m, &v1);
    inst.b2 = inst.matrix_unit(m, 2 * m, &v2);
    inst.certificates = vec![
        inst.staircase(gen, 0, &u1)?,
        inst.staircase(gen, m, &u2)?,
        inst.staircase(gen, 0, &v1)?,
        inst.staircase(gen, m, &v2)?,
    ];
    let a = &inst.algebra;
    let f = |x: &Vector, y: &Vector| inst.form.eval(x, y);
    inst.checks = Pe1Checks {
        staircase: inst.certificates.iter().all(StaircaseCertificate::holds),
        products_agree: a.mul(&inst.a1, &inst.b1) == a.mul(&inst.a2, &inst.b2),
        reversed_products_agree: a.mul(&inst.b1, &inst.a1) == a.mul(&inst.b2, &inst.a2),
        reversed_form_vanishes: f(&inst.b1, &inst.a1).is_zero() && f(&inst.b2, &inst.a2).is_zero(),
        form_differs: f(&inst.a1, &inst.b1) != f(&inst.a2, &inst.b2),
    };
    Ok(inst)
}

/// The outcome of every check performed on the second stage.
#[derive(Clone, Debug, serde::Serialize)]
pub struct Pe2Checks {
    /// `f̃(A, A^op) = f̃(A^op, A) = 0` and `f̃(x^op, y^op) = −f(y, x)`.
    pub extended_form: bool,
    pub jordan: bool,
    pub injective: bool,
    /// Every `φ(e_i)` is fixed by `*`.
    pub image_symmetric: bool,
    /// `dim H(B,*) = dim A`.
    pub onto_symmetric: bool,
    /// `φ(a₁)φ(b₁) − φ(a₂)φ(b₂) = (f(a₁,b₁) − f(a₂,b₂)) z`
    pub obstruction_matches: bool,
    pub obstruction_nonzero: bool,
}

impl Pe2Checks {
    pub fn all(&self) -> bool {
        self.extended_form
            && self.jordan
            && self.injective
            && self.image_symmetric
            && self.onto_symmetric
            && self.obstruction_matches
            && self.obstruction_nonzero
    }
}

/// `B = (A ⊕ A^op) ⊕ Fz` with the exchange involution and the Jordan
/// isomorphism `φ(a) = a + a^op` onto `H(B,*)`.
#[derive(Clone, Debug)]
pub struct Pe2Instance {
    pub pe1: Pe1Instance,
    pub extended_form: BilinearForm,
    pub algebra: Arc<StructureAlgebra>,
    pub star: InvolutionMap,
    pub phi: LinearMap,
    pub jordan: JordanWitness,
    pub symmetric_dim: usize,
    pub obstruction: Vector,
    pub obstruction_coefficient: Rational,
    pub checks: Pe2Checks,
}

impl Pe2Instance {
    pub fn z(&self) -> Vector {
        Vector::unit(2 * self.pe1.algebra.dim())
    }

    pub fn verified(&self) -> bool {
        self.pe1.checks.all() && self.checks.all()
    }
}

fn extended_form_laws(f: &BilinearForm, ext: &BilinearForm, n: usize) -> bool {
    let mixed = ext.entries().any(|(i, j, _)| (i < n) != (j < n));
    let transfer = ext.entries().all(|(i, j, c)| {
        let (x, y) = if i < n {
            (j + n, i + n)
        } else {
            (j - n, i - n)
        };
        ext.get(x, y) == -c.clone()
    });
    let restricted = f.entries().all(|(i, j, c)| ext.get(i, j) == *c) && ext.len() == 2 * f.len();
    !mixed && transfer && restricted
}

/// Extends the cocycle to `A ⊕ A^op`, builds `B`, its involution and `φ`,
/// and computes the obstruction `φ(a₁)φ(b₁) − φ(a₂)φ(b₂)`.
pub fn build_pe2(pe1: Pe1Instance) -> Result<Pe2Instance> {
    if !pe1.checks.all() {
        return Err(Error::Hypothesis("the first stage did not verify".into()));
    }
    let a = &pe1.algebra;
    let n = a.dim();
    let tilde = direct_sum(a, &opposite(a));
    let mut ext = BilinearForm::new();
    for (i, j, c) in pe1.form.entries() {
        ext.set(i, j, c.clone());
        ext.set(j + n, i + n, -c.clone());
    }
    let extended_form = extended_form_laws(&pe1.form, &ext, n);
    let algebra = Arc::new(cocycle_extension(&tilde, &ext)?);
    let z = 2 * n;
    let images = (0..=z)
        .map(|i| match i {
            _ if i < n => Vector::unit(i + n),
            _ if i < z => Vector::unit(i - n),
            _ => Vector::single(z, -Rational::ONE),
        })
        .collect();
    let star = InvolutionMap::new(&algebra, images)?;
    let phi = LinearMap::from_fn(a.clone(), algebra.clone(), |i| {
        Vector::unit(i).add(&Vector::unit(i + n))
    })?;
    let jordan = is_jordan_hom(&phi)?;
    let skew_images: Vec<Vector> = star
        .images()
        .iter()
        .enumerate()
        .map(|(i, v)| v.sub(&Vector::unit(i)))
        .collect();
    let symmetric_dim = algebra.dim() - rank(skew_images.iter());
    let b = &algebra;
    let obstruction = b
        .mul(&phi.apply(&pe1.a1), &phi.apply(&pe1.b1))
        .sub(&b.mul(&phi.apply(&pe1.a2), &phi.apply(&pe1.b2)));
    let obstruction_coefficient = pe1.form.eval(&pe1.a1, &pe1.b1) - pe1.form.eval(&pe1.a2, &pe1.b2);
    let checks = Pe2Checks {
        extended_form,
        jordan: jordan.classification.jordan,
        injective: phi.is_injective(),
        image_symmetric: phi.columns().iter().all(|c| star.apply(c) == *c),
        onto_symmetric: symmetric_dim == n,
        obstruction_matches: obstruction == Vector::single(z, obstruction_coefficient.clone()),
        obstruction_nonzero: !obstruction.is_zero(),
    };
    Ok(Pe2Instance {
        pe1,
        extended_form: ext,
        algebra,
        star,
        phi,
        jordan,
        symmetric_dim,
        obstruction,
        obstruction_coefficient,
        checks,
    })
}
