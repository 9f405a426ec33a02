//! The canonical rank `k|l` bundle: row-change matrices `η` between chart
//! labels and the twisted cocycle `h`.
//!
//! Over the overlap of `a` and `b` the pasting equation reads
//! `A_b = T_{a,b} A_a` with `T_{a,b} = M'_b(A_a)^{-1}` over chart `a`. Going
//! around `a -> b -> c` therefore gives `T_{a,c} = g*_{a,b}(T_{b,c}) T_{a,b}`,
//! which is the triple condition checked here.

use crate::atlas::{ChartIndex, GrassSpec};
use crate::error::Result;
use crate::grassmann::NuStructure;
use crate::supermatrix::{Alg, Entry, SMatrix};
use crate::transitions::{mprime_inverse, Substituter, TransitionMap};

/// `η_{source,target}` in the row bases of the two labels.
#[derive(Clone, Debug)]
pub struct BundleTransition {
    pub source: ChartIndex,
    pub target: ChartIndex,
    /// `M'_{target}(A_{source})^{-1}`, over the source chart.
    pub matrix: SMatrix<Entry>,
}

pub fn eta_matrix(space: &GrassSpec, source: &ChartIndex, target: &ChartIndex, nu: &NuStructure) -> Result<BundleTransition> {
    let (matrix, _, _) = mprime_inverse(space, source, target, nu)?;
    Ok(BundleTransition { source: source.clone(), target: target.clone(), matrix })
}

/// `h_{I|R,J|S} = ν^{p(I|R)+p(J|S)} (M'_{I|R}(A_{J|S}))^{-1}`, a matrix over
/// the chart `J|S`.
#[derive(Clone, Debug)]
pub struct HCocycle {
    pub first: ChartIndex,
    pub second: ChartIndex,
    pub twisted: bool,
    pub matrix: SMatrix<Entry>,
}

pub fn h_matrix(space: &GrassSpec, first: &ChartIndex, second: &ChartIndex, nu: &NuStructure) -> Result<HCocycle> {
    let (inv, _, _) = mprime_inverse(space, second, first, nu)?;
    let twisted = (first.parity(space) + second.parity(space)) % 2 == 1;
    let matrix = if twisted { Alg::new(space.alpha(), nu).nu_matrix(&inv)? } else { inv };
    Ok(HCocycle { first: first.clone(), second: second.clone(), twisted, matrix })
}

/// Outcome of a matrix identity check: `None` on success, otherwise the
/// two sides that differ.
pub type MatrixDefect = Option<(SMatrix<Entry>, SMatrix<Entry>)>;

fn compare(lhs: SMatrix<Entry>, rhs: SMatrix<Entry>) -> MatrixDefect {
    if lhs == rhs {
        None
    } else {
        Some((lhs, rhs))
    }
}

/// `T_{a,b} · g*_{a,b}(T_{b,a}) = 1` over chart `a`.
pub fn check_eta_pair(
    alg: &Alg,
    t_ab: &SMatrix<Entry>,
    t_ba: &SMatrix<Entry>,
    g_ab: &TransitionMap,
) -> Result<MatrixDefect> {
    let pulled = Substituter::new(g_ab).matrix(t_ba)?;
    let lhs = alg.smat_mul(t_ab, &pulled)?;
    let id = alg.identity(lhs.row_split());
    Ok(compare(lhs, id))
}

/// `g*_{a,b}(T_{b,c}) · T_{a,b} = T_{a,c}` over chart `a`.
pub fn check_eta_triple(
    alg: &Alg,
    t_ab: &SMatrix<Entry>,
    t_bc: &SMatrix<Entry>,
    t_ac: &SMatrix<Entry>,
    g_ab: &TransitionMap,
) -> Result<MatrixDefect> {
    let pulled = Substituter::new(g_ab).matrix(t_bc)?;
    let lhs = alg.smat_mul(&pulled, t_ab)?;
    Ok(compare(lhs, t_ac.clone()))
}

/// `h_{b,a} · g*_{a,b}(h_{a,b}) = 1` over chart `a` (`h_{a,b}` lives over
/// `b`, `h_{b,a}` over `a`).
pub fn check_h_pair(alg: &Alg, h_ab: &HCocycle, h_ba: &HCocycle, g_ab: &TransitionMap) -> Result<MatrixDefect> {
    let pulled = Substituter::new(g_ab).matrix(&h_ab.matrix)?;
    let lhs = alg.smat_mul(&h_ba.matrix, &pulled)?;
    let id = alg.identity(lhs.row_split());
    Ok(compare(lhs, id))
}

/// `g*_{c,b}(h_{a,b}) · h_{b,c} = h_{a,c}` over chart `c`: the triple
/// condition of `η` rewritten through `h_{x,y} = T_{y,x}`.
pub fn check_h_triple(
    alg: &Alg,
    h_ab: &HCocycle,
    h_bc: &HCocycle,
    h_ac: &HCocycle,
    g_cb: &TransitionMap,
) -> Result<MatrixDefect> {
    let pulled = Substituter::new(g_cb).matrix(&h_ab.matrix)?;
    let lhs = alg.smat_mul(&pulled, &h_bc.matrix)?;
    Ok(compare(lhs, h_ac.matrix.clone()))
}
