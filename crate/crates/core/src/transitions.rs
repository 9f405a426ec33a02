//! Transition morphisms between charts, solved from the pasting equation
//! `D_{J|S}(M'_{J|S}(A_{I|R})^{-1} A_{I|R}) = D_{J|S} A_{J|S}`.

use serde::Serialize;

use crate::arith::{Poly, RatFunc};
use crate::atlas::{build_label, ChartIndex, Gen, GenKind, GrassSpec};
use crate::error::{Error, Result};
use crate::grassmann::{NuStructure, SuperElem};
use crate::supermatrix::{d_omit, m_prime, Alg, Entry, SMatrix};

/// `g*_{source,target}` as a substitution table: every coordinate of the
/// target chart written in the coordinates of the source chart.
#[derive(Clone, Debug)]
pub struct TransitionMap {
    pub space: GrassSpec,
    pub source: ChartIndex,
    pub target: ChartIndex,
    /// Images of `x1..x_alpha` of the target.
    pub even: Vec<SuperElem>,
    /// Images of `e1..e_beta` of the target.
    pub odd: Vec<SuperElem>,
    /// Determinant of the body of `M'`; the overlap is where it is nonzero.
    pub domain_certificate: RatFunc,
    /// `M'^{-1}` for maps solved directly (not for composites).
    pub frame: Option<SMatrix<Entry>>,
}

impl TransitionMap {
    pub fn identity(space: &GrassSpec, chart: &ChartIndex) -> TransitionMap {
        let (a, b) = (space.alpha(), space.beta());
        TransitionMap {
            space: *space,
            source: chart.clone(),
            target: chart.clone(),
            even: (0..a).map(|i| SuperElem::even_var(a, b, i)).collect(),
            odd: (0..b).map(|j| SuperElem::odd_gen(a, b, j)).collect(),
            domain_certificate: RatFunc::one(a),
            frame: None,
        }
    }

    pub fn image(&self, g: Gen) -> &SuperElem {
        match g.kind {
            GenKind::X => &self.even[g.index],
            GenKind::E => &self.odd[g.index],
        }
    }

    /// Target generators with their images, `x` first.
    pub fn table(&self) -> impl Iterator<Item = (Gen, &SuperElem)> {
        let xs = self.even.iter().enumerate().map(|(i, v)| (Gen::x(i), v));
        let es = self.odd.iter().enumerate().map(|(j, v)| (Gen::e(j), v));
        xs.chain(es)
    }

    /// First generator whose image is not the generator itself.
    pub fn identity_defect(&self) -> Option<(Gen, SuperElem)> {
        let id = TransitionMap::identity(&self.space, &self.source);
        self.first_difference(&id)
    }

    pub fn first_difference(&self, other: &TransitionMap) -> Option<(Gen, SuperElem)> {
        self.table()
            .zip(other.table())
            .find(|((_, a), (_, b))| !a.equals(b))
            .map(|((g, a), _)| (g, a.clone()))
    }

    pub fn is_identity(&self) -> bool {
        self.identity_defect().is_none()
    }

    pub fn to_json(&self) -> TransitionJson {
        TransitionJson {
            source: self.source.compact(),
            target: self.target.compact(),
            status: "ok".into(),
            table: self
                .table()
                .map(|(g, v)| TableEntry { generator: g.to_string(), image: v.to_string() })
                .collect(),
            domain_certificate: Some(self.domain_certificate.to_string()),
        }
    }

    /// Human-readable table.
    pub fn render(&self) -> String {
        let mut out = format!("transition {} -> {}\n", self.source, self.target);
        for (g, v) in self.table() {
            out.push_str(&format!("  {g}' = {v}\n"));
        }
        out.push_str(&format!("domain: {} != 0\n", self.domain_certificate));
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TableEntry {
    pub generator: String,
    pub image: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct TransitionJson {
    pub source: String,
    pub target: String,
    pub status: String,
    pub table: Vec<TableEntry>,
    pub domain_certificate: Option<String>,
}

impl TransitionJson {
    pub fn empty_overlap(source: &ChartIndex, target: &ChartIndex) -> TransitionJson {
        TransitionJson {
            source: source.compact(),
            target: target.compact(),
            status: "empty-overlap".into(),
            table: Vec::new(),
            domain_certificate: None,
        }
    }
}

fn empty_overlap(source: &ChartIndex, target: &ChartIndex) -> Error {
    Error::EmptyOverlap { source_chart: source.to_string(), target_chart: target.to_string() }
}

/// `M'_{target}(A_{source})^{-1}`, the matrix both the transition and the
/// bundle are built from, with the determinant of its body.
pub fn mprime_inverse(
    space: &GrassSpec,
    source: &ChartIndex,
    target: &ChartIndex,
    nu: &NuStructure,
) -> Result<(SMatrix<Entry>, RatFunc, SMatrix<Entry>)> {
    target.validate(space)?;
    let alg = Alg::new(space.alpha(), nu);
    let a = build_label(space, source)?.concrete(&alg)?;
    let mp = m_prime(&a, space, target, |x| alg.nu_entry(x))?;
    let certificate = if mp.nrows() == 0 { RatFunc::one(space.alpha()) } else { alg.body_matrix(&mp).det() };
    let inv = match alg.smat_inv(&mp) {
        Ok(inv) => inv,
        Err(Error::Singular { .. }) | Err(Error::NotInvertible) => return Err(empty_overlap(source, target)),
        Err(e) => return Err(e),
    };
    inv.check_well_formed()?;
    Ok((inv, certificate, a))
}

/// Solves the pasting equation for `g*_{source,target}`.
///
/// Unwrapped target slots read their image straight off
/// `D(M'^{-1} A_source)`; slots the target label stores under `ν` get `ν`
/// of that entry.
pub fn compute_transition(
    space: &GrassSpec,
    source: &ChartIndex,
    target: &ChartIndex,
    nu: &NuStructure,
) -> Result<TransitionMap> {
    let alg = Alg::new(space.alpha(), nu);
    let (inv, certificate, a) = mprime_inverse(space, source, target, nu)?;
    let solved = alg.smat_mul(&inv, &a)?;
    let e = d_omit(&solved, space, target)?;
    let target_label = build_label(space, target)?;
    let target_cols = target.columns(space);
    let free: Vec<usize> = (0..space.m + space.n).filter(|c| !target_cols.contains(c)).collect();
    let (alpha, beta) = (space.alpha(), space.beta());
    let mut even = vec![SuperElem::zero(alpha, beta); alpha];
    let mut odd = vec![SuperElem::zero(alpha, beta); beta];
    for slot in &target_label.slots {
        let col = free.iter().position(|&c| c == slot.col).expect("slot lies outside the minor");
        let value = match e.get(slot.row, col) {
            Entry::El(v) => v.clone(),
            Entry::NuOne => return Err(Error::IllFormed("1v left in a coordinate slot".into())),
        };
        let value = if slot.wrapped { alg.nu(&value)? } else { value };
        if !value.has_parity(slot.gen.is_odd()) {
            return Err(Error::IllFormed(format!("image of {} has the wrong parity: {value}", slot.gen)));
        }
        match slot.gen.kind {
            GenKind::X => even[slot.gen.index] = value,
            GenKind::E => odd[slot.gen.index] = value,
        }
    }
    Ok(TransitionMap {
        space: *space,
        source: source.clone(),
        target: target.clone(),
        even,
        odd,
        domain_certificate: certificate,
        frame: Some(inv),
    })
}

/// Evaluates a polynomial given a way to produce powers of its variables.
fn eval_poly<T>(
    p: &Poly,
    zero: T,
    mut power: impl FnMut(usize, u16) -> Result<T>,
    scale: impl Fn(&T, &crate::arith::Rat) -> T,
    mul: impl Fn(&T, &T) -> T,
    add: impl Fn(&T, &T) -> T,
    one: impl Fn() -> T,
) -> Result<T> {
    let mut acc = zero;
    for (mono, c) in p.terms() {
        let mut term: Option<T> = None;
        for (v, &e) in mono.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let pw = power(v, e)?;
            term = Some(match term {
                None => pw,
                Some(t) => mul(&t, &pw),
            });
        }
        let term = term.unwrap_or_else(&one);
        acc = add(&acc, &scale(&term, c));
    }
    Ok(acc)
}

/// Pulls expressions over a map's target chart back to its source chart,
/// caching powers of the even images.
pub struct Substituter<'a> {
    map: &'a TransitionMap,
    powers: Vec<Vec<SuperElem>>,
}

impl<'a> Substituter<'a> {
    pub fn new(map: &'a TransitionMap) -> Substituter<'a> {
        Substituter { map, powers: vec![Vec::new(); map.even.len()] }
    }

    fn power(&mut self, var: usize, exp: u16) -> SuperElem {
        let cache = &mut self.powers[var];
        if cache.is_empty() {
            cache.push(self.map.even[var].clone());
        }
        while cache.len() < exp as usize {
            let next = cache.last().unwrap().mul(&self.map.even[var]);
            cache.push(next);
        }
        cache[exp as usize - 1].clone()
    }

    fn poly(&mut self, p: &Poly) -> Result<SuperElem> {
        let (a, b) = (self.map.space.alpha(), self.map.space.beta());
        if p.is_constant() {
            return Ok(SuperElem::constant(a, b, p.constant_term()));
        }
        eval_poly(
            p,
            SuperElem::zero(a, b),
            |v, e| Ok(self.power(v, e)),
            |t, c| t.scale(&RatFunc::constant(a, c.clone())),
            |x, y| x.mul(y),
            |x, y| x.add(y),
            || SuperElem::one(a, b),
        )
    }

    /// `g*(f)` for a rational function of the target's even coordinates.
    pub fn ratfunc(&mut self, f: &RatFunc) -> Result<SuperElem> {
        let num = self.poly(f.num())?;
        if f.den().is_one() {
            return Ok(num);
        }
        let den = self.poly(f.den())?;
        let inv = den.invert_even().map_err(|_| Error::NonInvertibleDenominator)?;
        Ok(num.mul(&inv))
    }

    /// `g*(expr)` for an element over the target chart.
    pub fn elem(&mut self, expr: &SuperElem) -> Result<SuperElem> {
        let (a, b) = (self.map.space.alpha(), self.map.space.beta());
        if expr.alpha() != a || expr.beta() != b {
            return Err(Error::ContextMismatch("expression is not over the map's target chart".into()));
        }
        let mut out = SuperElem::zero(a, b);
        for (mask, f) in expr.terms() {
            let mut term = self.ratfunc(f)?;
            for j in mask.indices() {
                term = term.mul(&self.map.odd[j]);
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Entrywise pullback of a matrix.
    pub fn matrix(&mut self, m: &SMatrix<Entry>) -> Result<SMatrix<Entry>> {
        m.try_map(|e| match e {
            Entry::El(v) => Ok(Entry::El(self.elem(v)?)),
            Entry::NuOne => Ok(Entry::NuOne),
        })
    }
}

/// `g*(expr)`: substitutes the map's table into an expression over its
/// target chart.
pub fn substitute(expr: &SuperElem, map: &TransitionMap) -> Result<SuperElem> {
    Substituter::new(map).elem(expr)
}

/// Substitutes rational functions for the variables of a rational function.
pub fn substitute_ratfunc(f: &RatFunc, images: &[RatFunc]) -> Result<RatFunc> {
    let nvars = images.first().map(|r| r.nvars()).unwrap_or(0);
    let mut cache: Vec<Vec<RatFunc>> = vec![Vec::new(); images.len()];
    let mut eval = |p: &Poly| {
        eval_poly(
            p,
            RatFunc::zero(nvars),
            |v, e| {
                let c = &mut cache[v];
                if c.is_empty() {
                    c.push(images[v].clone());
                }
                while c.len() < e as usize {
                    let next = c.last().unwrap().mul(&images[v]);
                    c.push(next);
                }
                Ok(c[e as usize - 1].clone())
            },
            |t, c| t.scale(c),
            |x, y| x.mul(y),
            |x, y| x.add(y),
            || RatFunc::one(nvars),
        )
    };
    let num = eval(f.num())?;
    let den = eval(f.den())?;
    num.div(&den).map_err(|_| Error::NonInvertibleDenominator)
}

/// `outer ∘ inner` in the pullback sense: the map from `inner.source` to
/// `outer.target` whose table is `inner*(outer table)`.
pub fn compose(outer: &TransitionMap, inner: &TransitionMap) -> Result<TransitionMap> {
    if outer.source != inner.target {
        return Err(Error::ContextMismatch(format!(
            "cannot compose: outer starts at {}, inner ends at {}",
            outer.source, inner.target
        )));
    }
    let mut sub = Substituter::new(inner);
    let even = outer.even.iter().map(|v| sub.elem(v)).collect::<Result<Vec<_>>>()?;
    let odd = outer.odd.iter().map(|v| sub.elem(v)).collect::<Result<Vec<_>>>()?;
    let bodies: Vec<RatFunc> = inner.even.iter().map(|v| v.body()).collect();
    let pulled = if outer.domain_certificate.is_constant() {
        outer.domain_certificate.clone()
    } else {
        substitute_ratfunc(&outer.domain_certificate, &bodies)?
    };
    Ok(TransitionMap {
        space: outer.space,
        source: inner.source.clone(),
        target: outer.target.clone(),
        even,
        odd,
        domain_certificate: inner.domain_certificate.mul(&pulled),
        frame: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> GrassSpec {
        GrassSpec::new(1, 1, 2, 2).unwrap()
    }

    fn idx(s: &str) -> ChartIndex {
        s.parse().unwrap()
    }

    #[test]
    fn identity_on_same_chart() {
        let nu = NuStructure::identity(2);
        for c in crate::atlas::enumerate_charts(&small()) {
            let g = compute_transition(&small(), &c, &c, &nu).unwrap();
            assert!(g.is_identity(), "{c}");
        }
    }

    #[test]
    fn classical_bodies() {
        // A = [[1, x1 | 0, e2], [0, e1 | 1, x2]]; M at {2}|{2} has body diag(x1, x2).
        let nu = NuStructure::identity(2);
        let g = compute_transition(&small(), &idx("1|1"), &idx("2|2"), &nu).unwrap();
        assert_eq!(g.even[0].body().to_string(), "1/x1");
        assert_eq!(g.even[1].body().to_string(), "1/x2");
        let back = compute_transition(&small(), &idx("2|2"), &idx("1|1"), &nu).unwrap();
        assert!(compose(&back, &g).unwrap().is_identity());
        assert!(compose(&g, &back).unwrap().is_identity());
    }

    #[test]
    fn hand_solved_nonstandard_target() {
        // {1}|{1} -> {1,2}|{}: M' = [[1, x1], [0, v(e1)]] with v(e1) = 1.
        let nu = NuStructure::identity(2);
        let g = compute_transition(&small(), &idx("1|1"), &idx("1,2|"), &nu).unwrap();
        let table: Vec<String> = g.table().map(|(_, v)| v.to_string()).collect();
        assert_eq!(table, ["-x1", "x2", "e1", "-x1*x2*e1 + e2"]);
    }

    #[test]
    fn compose_requires_matching_charts() {
        let nu = NuStructure::identity(2);
        let g = compute_transition(&small(), &idx("1|1"), &idx("2|2"), &nu).unwrap();
        assert!(matches!(compose(&g, &g), Err(Error::ContextMismatch(_))));
    }

    #[test]
    fn substitution_rules() {
        let nu = NuStructure::identity(2);
        let g = compute_transition(&small(), &idx("1|1"), &idx("2|2"), &nu).unwrap();
        let (a, b) = (2, 2);
        let x = SuperElem::even_var(a, b, 0);
        let e = SuperElem::odd_gen(a, b, 1);
        assert_eq!(substitute(&e.mul(&x), &g).unwrap(), g.odd[1].mul(&g.even[0]));
        let inv_x = SuperElem::scalar(b, RatFunc::var(a, 0).inv().unwrap());
        assert_eq!(substitute(&inv_x, &g).unwrap(), g.even[0].invert_even().unwrap());
    }
}
