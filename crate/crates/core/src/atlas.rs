//! Chart indices of `G_{k|l}(m|n)` and their label matrices.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grassmann::SuperElem;
use crate::supermatrix::{Alg, Entry, SMatrix, SlotParity};

/// Dimensions of the ν-Grassmannian `G_{k|l}(m|n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GrassSpec {
    pub k: usize,
    pub l: usize,
    pub m: usize,
    pub n: usize,
}

impl GrassSpec {
    pub fn new(k: usize, l: usize, m: usize, n: usize) -> Result<GrassSpec> {
        if k > m {
            return Err(Error::InvalidSpace(format!("k = {k} exceeds m = {m}")));
        }
        if l > n {
            return Err(Error::InvalidSpace(format!("l = {l} exceeds n = {n}")));
        }
        if n == 0 {
            return Err(Error::InvalidSpace("n must be at least 1".into()));
        }
        let spec = GrassSpec { k, l, m, n };
        if spec.beta() > 24 {
            return Err(Error::InvalidSpace(format!("{} odd generators is beyond this engine", spec.beta())));
        }
        Ok(spec)
    }

    /// Number of even coordinates per chart.
    pub fn alpha(&self) -> usize {
        self.k * (self.m - self.k) + self.l * (self.n - self.l)
    }

    /// Number of odd coordinates per chart.
    pub fn beta(&self) -> usize {
        self.l * (self.m - self.k) + self.k * (self.n - self.l)
    }

    pub fn rank(&self) -> usize {
        self.k + self.l
    }
}

impl fmt::Display for GrassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G_{{{}|{}}}({}|{})", self.k, self.l, self.m, self.n)
    }
}

/// A `p|q`-index `I|R`: ascending 1-based subsets of the even and odd
/// column ranges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChartIndex {
    pub i: Vec<usize>,
    pub r: Vec<usize>,
}

impl ChartIndex {
    pub fn new(i: Vec<usize>, r: Vec<usize>) -> ChartIndex {
        ChartIndex { i, r }
    }

    pub fn p(&self) -> usize {
        self.i.len()
    }

    pub fn q(&self) -> usize {
        self.r.len()
    }

    pub fn is_standard(&self, space: &GrassSpec) -> bool {
        self.p() == space.k
    }

    /// 0 for standard indices, 1 otherwise.
    pub fn parity(&self, space: &GrassSpec) -> usize {
        usize::from(!self.is_standard(space))
    }

    pub fn validate(&self, space: &GrassSpec) -> Result<()> {
        let ascending = |v: &[usize], max: usize| v.windows(2).all(|w| w[0] < w[1]) && v.iter().all(|&x| x >= 1 && x <= max);
        if !ascending(&self.i, space.m) || !ascending(&self.r, space.n) {
            return Err(Error::BadIndex(format!("{self} is not a pair of ascending subsets of 1..{} and 1..{}", space.m, space.n)));
        }
        if self.p() + self.q() != space.rank() {
            return Err(Error::BadIndex(format!("{self} has {} elements, expected {}", self.p() + self.q(), space.rank())));
        }
        Ok(())
    }

    /// Absolute 0-based label columns of the index, even side first.
    pub fn columns(&self, space: &GrassSpec) -> Vec<usize> {
        self.i.iter().map(|&c| c - 1).chain(self.r.iter().map(|&c| space.m + c - 1)).collect()
    }

    /// For each minor column, whether the non-standard identity has `1v`
    /// there (its diagonal slot is odd).
    pub fn nu_columns(&self, space: &GrassSpec) -> Vec<bool> {
        (0..space.rank()).map(|t| (t >= space.k) != (t >= self.p())).collect()
    }

    fn fmt_set(v: &[usize]) -> String {
        v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }

    /// Compact form `2|1,3` as accepted by the parser.
    pub fn compact(&self) -> String {
        format!("{}|{}", Self::fmt_set(&self.i), Self::fmt_set(&self.r))
    }
}

impl fmt::Display for ChartIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}|{{{}}}", Self::fmt_set(&self.i), Self::fmt_set(&self.r))
    }
}

fn parse_set(s: &str) -> Result<Vec<usize>> {
    let s = s.trim().trim_start_matches('{').trim_end_matches('}').trim();
    if s.is_empty() || s == "∅" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::BadIndex(format!("'{t}' is not a positive integer"))))
        .collect()
}

impl FromStr for ChartIndex {
    type Err = Error;

    /// Accepts `2|1,3`, `{2}|{1,3}` and `|1,2,3`.
    fn from_str(s: &str) -> Result<ChartIndex> {
        let (i, r) = s.split_once('|').ok_or_else(|| Error::BadIndex(format!("'{s}' has no '|'")))?;
        Ok(ChartIndex { i: parse_set(i)?, r: parse_set(r)? })
    }
}

fn combinations(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            if n - x + 1 < size - cur.len() {
                break;
            }
            cur.push(x);
            go(x + 1, n, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, size, &mut Vec::new(), &mut out);
    out
}

/// All chart indices, by `p` descending, then lexicographically.
pub fn enumerate_charts(space: &GrassSpec) -> Vec<ChartIndex> {
    let total = space.rank();
    let lo = total.saturating_sub(space.n);
    let hi = total.min(space.m);
    let mut out = Vec::new();
    for p in (lo..=hi).rev() {
        for i in combinations(space.m, p) {
            for r in combinations(space.n, total - p) {
                out.push(ChartIndex { i: i.clone(), r });
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GenKind {
    X,
    E,
}

/// A chart coordinate: `x_{index+1}` (even) or `e_{index+1}` (odd).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gen {
    pub kind: GenKind,
    pub index: usize,
}

impl Gen {
    pub fn x(index: usize) -> Gen {
        Gen { kind: GenKind::X, index }
    }

    pub fn e(index: usize) -> Gen {
        Gen { kind: GenKind::E, index }
    }

    pub fn is_odd(&self) -> bool {
        self.kind == GenKind::E
    }

    pub fn elem(&self, alpha: usize, beta: usize) -> SuperElem {
        match self.kind {
            GenKind::X => SuperElem::even_var(alpha, beta, self.index),
            GenKind::E => SuperElem::odd_gen(alpha, beta, self.index),
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GenKind::X => write!(f, "x{}", self.index + 1),
            GenKind::E => write!(f, "e{}", self.index + 1),
        }
    }
}

/// Symbolic label entry, before any arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sym {
    Zero,
    One,
    NuOne,
    /// `ν(1)`, produced when a column holding a plain 1 is moved.
    NuOfOne,
    Gen(Gen),
    NuGen(Gen),
}

impl Sym {
    /// Formal `ν`: wraps or unwraps, with `ν(1v) = 1`.
    pub fn nu(&self) -> Sym {
        match *self {
            Sym::Zero => Sym::Zero,
            Sym::One => Sym::NuOfOne,
            Sym::NuOfOne | Sym::NuOne => Sym::One,
            Sym::Gen(g) => Sym::NuGen(g),
            Sym::NuGen(g) => Sym::Gen(g),
        }
    }

    /// The superalgebra value (or `1v`) of the entry.
    pub fn to_entry(&self, alg: &Alg) -> Result<Entry> {
        let (a, b) = (alg.alpha, alg.beta());
        Ok(match *self {
            Sym::Zero => Entry::El(SuperElem::zero(a, b)),
            Sym::One => Entry::El(SuperElem::one(a, b)),
            Sym::NuOne => Entry::NuOne,
            Sym::NuOfOne => Entry::El(alg.nu(&SuperElem::one(a, b))?),
            Sym::Gen(g) => Entry::El(g.elem(a, b)),
            Sym::NuGen(g) => Entry::El(alg.nu(&g.elem(a, b))?),
        })
    }
}

impl SlotParity for Sym {
    fn fits(&self, odd_slot: bool) -> bool {
        match self {
            Sym::Zero => true,
            Sym::One => !odd_slot,
            Sym::NuOne | Sym::NuOfOne => odd_slot,
            Sym::Gen(g) => g.is_odd() == odd_slot,
            Sym::NuGen(g) => g.is_odd() != odd_slot,
        }
    }
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sym::Zero => f.write_str("0"),
            Sym::One => f.write_str("1"),
            Sym::NuOne => f.write_str("1v"),
            Sym::NuOfOne => f.write_str("v(1)"),
            Sym::Gen(g) => write!(f, "{g}"),
            Sym::NuGen(g) => write!(f, "v({g})"),
        }
    }
}

/// Position of a coordinate inside a label.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Slot {
    pub row: usize,
    pub col: usize,
    pub gen: Gen,
    /// The slot holds `ν(gen)` because the column sits on the other side
    /// of the divider from its fill pattern.
    pub wrapped: bool,
}

/// The label `A_{I|R}` of a chart.
#[derive(Clone, Debug)]
pub struct ChartLabel {
    pub space: GrassSpec,
    pub index: ChartIndex,
    pub matrix: SMatrix<Sym>,
    pub slots: Vec<Slot>,
    /// Coordinates in fill order.
    pub order: Vec<Gen>,
}

/// The `k|l x p|q` non-standard identity of an index (ordinary identity for
/// standard indices).
pub fn nonstd_identity(space: &GrassSpec, index: &ChartIndex) -> Result<SMatrix<Sym>> {
    if index.p() + index.q() != space.rank() {
        return Err(Error::BadIndex(format!("{index} has size {}, expected {}", index.p() + index.q(), space.rank())));
    }
    let flags = index.nu_columns(space);
    Ok(SMatrix::from_fn((space.k, space.l), (index.p(), index.q()), |i, j| {
        if i != j {
            Sym::Zero
        } else if flags[i] {
            Sym::NuOne
        } else {
            Sym::One
        }
    }))
}

/// Builds `A_{I|R}`. Minor columns hold the non-standard identity; the
/// other columns, left to right, take the even fill pattern (`x` over `e`)
/// for the first `m-k` of them and the odd pattern (`e` over `x`) for the
/// rest, numbering each kind top to bottom and left to right. A pattern on
/// the wrong side of the divider is stored under `ν`.
pub fn build_label(space: &GrassSpec, index: &ChartIndex) -> Result<ChartLabel> {
    index.validate(space)?;
    let (k, l) = (space.k, space.l);
    let rows = k + l;
    let cols = space.m + space.n;
    let minor_cols = index.columns(space);
    let identity = nonstd_identity(space, index)?;
    let mut matrix = SMatrix::from_fn((k, l), (space.m, space.n), |_, _| Sym::Zero);
    for (t, &c) in minor_cols.iter().enumerate() {
        for i in 0..rows {
            matrix.set(i, c, *identity.get(i, t));
        }
    }
    let mut slots = Vec::with_capacity(rows * (cols - rows));
    let mut order = Vec::with_capacity(space.alpha() + space.beta());
    let (mut nx, mut ne) = (0, 0);
    let free: Vec<usize> = (0..cols).filter(|c| !minor_cols.contains(c)).collect();
    for (pos, &c) in free.iter().enumerate() {
        let odd_pattern = pos >= space.m - k;
        let wrapped = odd_pattern != (c >= space.m);
        for i in 0..rows {
            let odd_gen = odd_pattern != (i >= k);
            let gen = if odd_gen {
                ne += 1;
                Gen::e(ne - 1)
            } else {
                nx += 1;
                Gen::x(nx - 1)
            };
            matrix.set(i, c, if wrapped { Sym::NuGen(gen) } else { Sym::Gen(gen) });
            slots.push(Slot { row: i, col: c, gen, wrapped });
            order.push(gen);
        }
    }
    debug_assert_eq!((nx, ne), (space.alpha(), space.beta()));
    matrix.check_well_formed()?;
    Ok(ChartLabel { space: *space, index: index.clone(), matrix, slots, order })
}

impl ChartLabel {
    /// The label as a matrix over the chart's superalgebra.
    pub fn concrete(&self, alg: &Alg) -> Result<SMatrix<Entry>> {
        self.matrix.try_map(|s| s.to_entry(alg))
    }

    /// Block layout plus the coordinate order line.
    pub fn render(&self) -> String {
        let order: Vec<String> = self.order.iter().map(|g| g.to_string()).collect();
        format!("{}order: {}\n", self.matrix.render(), order.join(" "))
    }

    pub fn to_json(&self) -> ChartJson {
        let matrix = (0..self.matrix.nrows())
            .map(|i| (0..self.matrix.ncols()).map(|j| self.matrix.get(i, j).to_string()).collect())
            .collect();
        ChartJson {
            i: self.index.i.clone(),
            r: self.index.r.clone(),
            standard: self.index.is_standard(&self.space),
            p: self.index.p(),
            q: self.index.q(),
            matrix,
            generator_order: self.order.iter().map(|g| g.to_string()).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ChartJson {
    #[serde(rename = "I")]
    pub i: Vec<usize>,
    #[serde(rename = "R")]
    pub r: Vec<usize>,
    pub standard: bool,
    pub p: usize,
    pub q: usize,
    pub matrix: Vec<Vec<String>>,
    pub generator_order: Vec<String>,
}
