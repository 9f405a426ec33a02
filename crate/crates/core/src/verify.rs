//! Verification suites over a whole atlas, with deterministic reports.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{Rat, RatFunc};
use crate::atlas::{build_label, enumerate_charts, ChartIndex, ChartLabel, GrassSpec};
use crate::bundle::{check_eta_pair, check_eta_triple, check_h_pair, check_h_triple, HCocycle, MatrixDefect};
use crate::error::{Error, Result};
use crate::grassmann::NuStructure;
use crate::linalg::Mat;
use crate::reduced::{
    chi, classical_transition, complete, diagram_at, in_lambda_image, nu_double_prime, psi_at, psi_symbolic,
    reduced_transition, sample_points, BigChartIndex, PointOutcome,
};
use crate::supermatrix::{Alg, Entry, SMatrix};
use crate::transitions::{compose, compute_transition, TransitionMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedEmptyOverlap,
    /// Every sampled point hit a pole or a singular minor.
    SkippedNoPoints,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    /// What disagrees: a generator, a matrix entry or a point.
    pub at: String,
    pub got: String,
    pub expected: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Item {
    pub check: String,
    pub charts: Vec<String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Item {
    fn new(check: &str, charts: &[&ChartIndex], status: Status) -> Item {
        Item {
            check: check.into(),
            charts: charts.iter().map(|c| c.compact()).collect(),
            status,
            detail: None,
            witness: None,
        }
    }

    fn with_detail(mut self, detail: impl Into<String>) -> Item {
        self.detail = Some(detail.into());
        self
    }

    fn with_witness(mut self, witness: Witness) -> Item {
        self.witness = Some(witness);
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Totals {
    fn of(items: &[Item]) -> Totals {
        let mut t = Totals::default();
        for item in items {
            match item.status {
                Status::Pass => t.pass += 1,
                Status::Fail => t.fail += 1,
                Status::SkippedEmptyOverlap | Status::SkippedNoPoints => t.skipped += 1,
            }
        }
        t
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct NuSummary {
    pub name: String,
    pub beta: usize,
}

impl NuSummary {
    pub fn of(nu: &NuStructure) -> NuSummary {
        NuSummary { name: nu.name().to_string(), beta: nu.beta() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub space: GrassSpec,
    pub nu: NuSummary,
    pub items: Vec<Item>,
    pub totals: Totals,
}

impl SuiteReport {
    fn new(suite: &str, atlas: &Atlas, items: Vec<Item>) -> SuiteReport {
        let totals = Totals::of(&items);
        SuiteReport { suite: suite.into(), space: atlas.space, nu: NuSummary::of(&atlas.nu), items, totals }
    }

    pub fn items_for<'a>(&'a self, check: &'a str) -> impl Iterator<Item = &'a Item> + 'a {
        self.items.iter().filter(move |i| i.check == check)
    }

    pub fn passed(&self) -> bool {
        self.totals.fail == 0
    }

    /// Text summary, one line per check kind plus the failing items.
    pub fn render(&self) -> String {
        let mut kinds: Vec<&str> = Vec::new();
        for item in &self.items {
            if !kinds.contains(&item.check.as_str()) {
                kinds.push(&item.check);
            }
        }
        let mut out = format!("suite {} on {} (nu: {})\n", self.suite, self.space, self.nu.name);
        for kind in kinds {
            let items: Vec<Item> = self.items_for(kind).cloned().collect();
            let t = Totals::of(&items);
            out.push_str(&format!("  {kind:<24} pass {:>5}  fail {:>5}  skipped {:>5}\n", t.pass, t.fail, t.skipped));
        }
        for item in self.items.iter().filter(|i| i.status == Status::Fail) {
            out.push_str(&format!("  FAIL {} [{}]", item.check, item.charts.join(" ; ")));
            if let Some(d) = &item.detail {
                out.push_str(&format!(" {d}"));
            }
            out.push('\n');
            if let Some(w) = &item.witness {
                out.push_str(&format!("       at {}: got {} expected {}\n", w.at, w.got, w.expected));
            }
        }
        out.push_str(&format!(
            "  total: pass {} fail {} skipped {}\n",
            self.totals.pass, self.totals.fail, self.totals.skipped
        ));
        out
    }
}

/// Which ordered triples of distinct charts the triple checks visit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriplePolicy {
    All,
    StandardOnly,
    /// All standard triples plus this many seeded mixed ones.
    Sample(usize),
}

impl FromStr for TriplePolicy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<TriplePolicy, String> {
        match s {
            "all" => Ok(TriplePolicy::All),
            "standard-only" => Ok(TriplePolicy::StandardOnly),
            _ => s
                .strip_prefix("sample:")
                .and_then(|n| n.parse().ok())
                .map(TriplePolicy::Sample)
                .ok_or_else(|| format!("unknown triple policy '{s}' (all, standard-only, sample:N)")),
        }
    }
}

impl fmt::Display for TriplePolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TriplePolicy::All => f.write_str("all"),
            TriplePolicy::StandardOnly => f.write_str("standard-only"),
            TriplePolicy::Sample(n) => write!(f, "sample:{n}"),
        }
    }
}

/// Labels and every pairwise transition of a space, computed once.
pub struct Atlas {
    pub space: GrassSpec,
    pub nu: NuStructure,
    pub charts: Vec<ChartIndex>,
    pub labels: Vec<ChartLabel>,
    maps: HashMap<(usize, usize), Result<TransitionMap>>,
}

impl Atlas {
    pub fn build(space: &GrassSpec, nu: &NuStructure) -> Result<Atlas> {
        if nu.beta() != space.beta() {
            return Err(Error::InvalidNu(format!("nu has beta = {}, the space needs {}", nu.beta(), space.beta())));
        }
        let charts = enumerate_charts(space);
        let labels = charts.iter().map(|c| build_label(space, c)).collect::<Result<Vec<_>>>()?;
        let pairs: Vec<(usize, usize)> = (0..charts.len()).flat_map(|a| (0..charts.len()).map(move |b| (a, b))).collect();
        let maps = pairs
            .par_iter()
            .map(|&(a, b)| ((a, b), compute_transition(space, &charts[a], &charts[b], nu)))
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        Ok(Atlas { space: *space, nu: nu.clone(), charts, labels, maps })
    }

    pub fn alg(&self) -> Alg<'_> {
        Alg::new(self.space.alpha(), &self.nu)
    }

    pub fn map(&self, a: usize, b: usize) -> &Result<TransitionMap> {
        &self.maps[&(a, b)]
    }

    pub fn is_standard(&self, a: usize) -> bool {
        self.charts[a].is_standard(&self.space)
    }

    /// Both transitions between `a` and `b` exist generically.
    pub fn overlaps(&self, a: usize, b: usize) -> bool {
        self.map(a, b).is_ok() && self.map(b, a).is_ok()
    }

    /// `T_{a,b} = M'_b(A_a)^{-1}`.
    pub fn eta(&self, a: usize, b: usize) -> Option<&SMatrix<Entry>> {
        self.map(a, b).as_ref().ok().and_then(|g| g.frame.as_ref())
    }

    /// `h_{a,b}`: `T_{b,a}` twisted by `ν` when the parities differ.
    pub fn h(&self, a: usize, b: usize) -> Result<Option<HCocycle>> {
        let Some(t) = self.eta(b, a) else { return Ok(None) };
        let twisted = self.is_standard(a) != self.is_standard(b);
        let matrix = if twisted { self.alg().nu_matrix(t)? } else { t.clone() };
        Ok(Some(HCocycle { first: self.charts[a].clone(), second: self.charts[b].clone(), twisted, matrix }))
    }

    fn ordered_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.charts.len();
        (0..n).flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b))).collect()
    }

    /// Ordered triples of distinct charts selected by the policy.
    pub fn triples(&self, policy: TriplePolicy, seed: u64) -> Vec<(usize, usize, usize)> {
        let n = self.charts.len();
        let mut standard = Vec::new();
        let mut mixed = Vec::new();
        for a in 0..n {
            for b in (0..n).filter(|&b| b != a) {
                for c in (0..n).filter(|&c| c != a && c != b) {
                    if self.is_standard(a) && self.is_standard(b) && self.is_standard(c) {
                        standard.push((a, b, c));
                    } else {
                        mixed.push((a, b, c));
                    }
                }
            }
        }
        match policy {
            TriplePolicy::All => {
                let mut all: Vec<_> = standard.into_iter().chain(mixed).collect();
                all.sort();
                all
            }
            TriplePolicy::StandardOnly => standard,
            TriplePolicy::Sample(count) => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut picked: Vec<usize> = sample(&mut rng, mixed.len(), count.min(mixed.len())).into_vec();
                picked.sort_unstable();
                let mut all: Vec<_> = standard.into_iter().chain(picked.into_iter().map(|i| mixed[i])).collect();
                all.sort();
                all
            }
        }
    }
}

fn identity_item(check: &str, charts: &[&ChartIndex], composite: Result<TransitionMap>) -> Item {
    match composite {
        Ok(g) => match g.identity_defect() {
            None => Item::new(check, charts, Status::Pass),
            Some((gen, got)) => Item::new(check, charts, Status::Fail).with_witness(Witness {
                at: gen.to_string(),
                got: got.to_string(),
                expected: gen.to_string(),
            }),
        },
        Err(Error::NonInvertibleDenominator) | Err(Error::EmptyOverlap { .. }) => {
            Item::new(check, charts, Status::SkippedEmptyOverlap)
        }
        Err(e) => Item::new(check, charts, Status::Fail).with_detail(format!("error: {e}")),
    }
}

fn matrix_item(check: &str, charts: &[&ChartIndex], outcome: Result<MatrixDefect>) -> Item {
    match outcome {
        Ok(None) => Item::new(check, charts, Status::Pass),
        Ok(Some((lhs, rhs))) => {
            let mut witness = Witness { at: "matrix".into(), got: lhs.render(), expected: rhs.render() };
            if lhs.row_split() == rhs.row_split() && lhs.col_split() == rhs.col_split() {
                if let Some((i, j, v)) = lhs.entries().find(|(i, j, v)| *v != rhs.get(*i, *j)) {
                    witness = Witness {
                        at: format!("entry ({}, {})", i + 1, j + 1),
                        got: v.to_string(),
                        expected: rhs.get(i, j).to_string(),
                    };
                }
            }
            Item::new(check, charts, Status::Fail).with_witness(witness)
        }
        Err(Error::NonInvertibleDenominator) | Err(Error::EmptyOverlap { .. }) => {
            Item::new(check, charts, Status::SkippedEmptyOverlap)
        }
        Err(e) => Item::new(check, charts, Status::Fail).with_detail(format!("error: {e}")),
    }
}

/// The three identities of the chart changes: `g_{a,a} = id`,
/// `g_{b,a} ∘ g_{a,b} = id` and `g_{c,a} ∘ g_{b,c} ∘ g_{a,b} = id`.
pub fn run_cocycle_suite(atlas: &Atlas, policy: TriplePolicy, seed: u64) -> SuiteReport {
    let ch = &atlas.charts;
    let mut items: Vec<Item> = (0..ch.len())
        .into_par_iter()
        .map(|a| identity_item("cocycle.identity", &[&ch[a]], atlas.map(a, a).clone()))
        .collect();
    items.extend(atlas.ordered_pairs().par_iter().map(|&(a, b)| {
        let charts = [&ch[a], &ch[b]];
        if !atlas.overlaps(a, b) {
            return Item::new("cocycle.pair", &charts, Status::SkippedEmptyOverlap);
        }
        let (g_ab, g_ba) = (atlas.map(a, b).as_ref().unwrap(), atlas.map(b, a).as_ref().unwrap());
        identity_item("cocycle.pair", &charts, compose(g_ba, g_ab))
    }).collect::<Vec<_>>());
    items.extend(atlas.triples(policy, seed).par_iter().map(|&(a, b, c)| {
        let charts = [&ch[a], &ch[b], &ch[c]];
        if !(atlas.overlaps(a, b) && atlas.overlaps(b, c) && atlas.overlaps(a, c)) {
            return Item::new("cocycle.triple", &charts, Status::SkippedEmptyOverlap);
        }
        let (g_ab, g_bc, g_ca) =
            (atlas.map(a, b).as_ref().unwrap(), atlas.map(b, c).as_ref().unwrap(), atlas.map(c, a).as_ref().unwrap());
        identity_item("cocycle.triple", &charts, compose(g_ca, g_bc).and_then(|g| compose(&g, g_ab)))
    }).collect::<Vec<_>>());
    SuiteReport::new("cocycle", atlas, items)
}

/// `η` and `h` pair and triple conditions.
pub fn run_bundle_suite(atlas: &Atlas, policy: TriplePolicy, seed: u64) -> SuiteReport {
    let ch = &atlas.charts;
    let alg = atlas.alg();
    let pairs = atlas.ordered_pairs();
    let triples = atlas.triples(policy, seed);
    let mut items: Vec<Item> = pairs
        .par_iter()
        .map(|&(a, b)| {
            let charts = [&ch[a], &ch[b]];
            if !atlas.overlaps(a, b) {
                return Item::new("eta.pair", &charts, Status::SkippedEmptyOverlap);
            }
            let g_ab = atlas.map(a, b).as_ref().unwrap();
            let outcome = check_eta_pair(&alg, atlas.eta(a, b).unwrap(), atlas.eta(b, a).unwrap(), g_ab);
            matrix_item("eta.pair", &charts, outcome)
        })
        .collect();
    items.extend(triples.par_iter().map(|&(a, b, c)| {
        let charts = [&ch[a], &ch[b], &ch[c]];
        if !(atlas.overlaps(a, b) && atlas.overlaps(b, c) && atlas.overlaps(a, c)) {
            return Item::new("eta.triple", &charts, Status::SkippedEmptyOverlap);
        }
        let g_ab = atlas.map(a, b).as_ref().unwrap();
        let outcome =
            check_eta_triple(&alg, atlas.eta(a, b).unwrap(), atlas.eta(b, c).unwrap(), atlas.eta(a, c).unwrap(), g_ab);
        matrix_item("eta.triple", &charts, outcome)
    }).collect::<Vec<_>>());
    items.extend(pairs.par_iter().map(|&(a, b)| {
        let charts = [&ch[a], &ch[b]];
        if !atlas.overlaps(a, b) {
            return Item::new("h.pair", &charts, Status::SkippedEmptyOverlap);
        }
        let g_ab = atlas.map(a, b).as_ref().unwrap();
        let outcome = (|| {
            let (h_ab, h_ba) = (atlas.h(a, b)?.unwrap(), atlas.h(b, a)?.unwrap());
            check_h_pair(&alg, &h_ab, &h_ba, g_ab)
        })();
        matrix_item("h.pair", &charts, outcome)
    }).collect::<Vec<_>>());
    items.extend(triples.par_iter().map(|&(a, b, c)| {
        let charts = [&ch[a], &ch[b], &ch[c]];
        if !(atlas.overlaps(a, b) && atlas.overlaps(b, c) && atlas.overlaps(a, c)) {
            return Item::new("h.triple", &charts, Status::SkippedEmptyOverlap);
        }
        let g_cb = atlas.map(c, b).as_ref().unwrap();
        let outcome = (|| {
            let (h_ab, h_bc, h_ac) = (atlas.h(a, b)?.unwrap(), atlas.h(b, c)?.unwrap(), atlas.h(a, c)?.unwrap());
            check_h_triple(&alg, &h_ab, &h_bc, &h_ac, g_cb)
        })();
        matrix_item("h.triple", &charts, outcome)
    }).collect::<Vec<_>>());
    SuiteReport::new("bundle", atlas, items)
}

fn show_point(p: &[Rat]) -> String {
    format!("({})", p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
}

fn show_mat(m: &Mat<Rat>) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| format!("[{}]", m.row(i).iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")))
        .collect();
    format!("[{}]", rows.join(", "))
}

/// Body-level checks: `g~` against the classical chart change, `χ∘ψ = id`,
/// the Lemma 2.4 square at sampled points and the `Λ`-image condition.
pub fn run_reduced_suite(atlas: &Atlas, samples: usize, seed: u64) -> SuiteReport {
    let space = atlas.space;
    let ch = &atlas.charts;
    let alg = atlas.alg();
    let points = sample_points(space.alpha(), samples, seed);
    let nupp: Vec<Result<Mat<RatFunc>>> = atlas
        .labels
        .iter()
        .map(|l| l.concrete(&alg).and_then(|a| nu_double_prime(&a, &alg)))
        .collect();
    let bigs: Vec<BigChartIndex> = ch.iter().map(|c| BigChartIndex::of_chart(&space, c)).collect();
    let pairs = atlas.ordered_pairs();

    let mut items: Vec<Item> = pairs
        .par_iter()
        .filter(|&&(a, b)| atlas.is_standard(a) && atlas.is_standard(b))
        .map(|&(a, b)| {
            let charts = [&ch[a], &ch[b]];
            let Ok(g) = atlas.map(a, b) else {
                return Item::new("reduced.gtilde-classical", &charts, Status::SkippedEmptyOverlap);
            };
            let got = reduced_transition(g);
            match classical_transition(&atlas.labels[a], &atlas.labels[b]) {
                Ok(expected) => match got.iter().zip(&expected).position(|(x, y)| x != y) {
                    None => Item::new("reduced.gtilde-classical", &charts, Status::Pass),
                    Some(i) => Item::new("reduced.gtilde-classical", &charts, Status::Fail).with_witness(Witness {
                        at: format!("x{}", i + 1),
                        got: got[i].to_string(),
                        expected: expected[i].to_string(),
                    }),
                },
                Err(e) => Item::new("reduced.gtilde-classical", &charts, Status::Fail).with_detail(format!("error: {e}")),
            }
        })
        .collect();

    let all_bigs = BigChartIndex::all(&space);
    items.extend((0..ch.len()).into_par_iter().map(|a| {
        let charts = [&ch[a]];
        let m = match &nupp[a] {
            Ok(m) => m,
            Err(e) => return Item::new("reduced.chi-psi", &charts, Status::Fail).with_detail(format!("error: {e}")),
        };
        let vars: Vec<RatFunc> = (0..space.alpha()).map(|i| RatFunc::var(space.alpha(), i)).collect();
        let one = RatFunc::one(space.alpha());
        let mut tried = 0;
        for big in &all_bigs {
            let Ok(y) = psi_symbolic(m, big) else { continue };
            tried += 1;
            match chi(&y, big, &atlas.labels[a], &one) {
                Ok(back) if back == vars => {}
                Ok(back) => {
                    let i = back.iter().zip(&vars).position(|(x, y)| x != y).unwrap();
                    return Item::new("reduced.chi-psi", &charts, Status::Fail)
                        .with_detail(format!("big chart {:?}", big.cols))
                        .with_witness(Witness { at: format!("x{}", i + 1), got: back[i].to_string(), expected: vars[i].to_string() });
                }
                Err(e) => {
                    return Item::new("reduced.chi-psi", &charts, Status::Fail)
                        .with_detail(format!("big chart {:?}: {e}", big.cols))
                }
            }
        }
        Item::new("reduced.chi-psi", &charts, Status::Pass).with_detail(format!("{tried} big charts"))
    }).collect::<Vec<_>>());

    items.extend(pairs.par_iter().map(|&(a, b)| {
        let charts = [&ch[a], &ch[b]];
        let Ok(g) = atlas.map(a, b) else {
            return Item::new("reduced.diagram", &charts, Status::SkippedEmptyOverlap);
        };
        let (Ok(ma), Ok(mb)) = (&nupp[a], &nupp[b]) else {
            return Item::new("reduced.diagram", &charts, Status::Fail).with_detail("error: mixed-parity label entry");
        };
        let g_tilde = reduced_transition(g);
        let (mut passed, mut skipped, mut failed) = (0, 0, 0);
        let mut witness = None;
        for p in &points {
            match diagram_at(ma, mb, &bigs[a], &bigs[b], &g_tilde, p) {
                Ok(PointOutcome::Pass) => passed += 1,
                Ok(PointOutcome::Skip) => skipped += 1,
                Ok(PointOutcome::Fail { lhs, rhs }) => {
                    failed += 1;
                    if witness.is_none() {
                        witness = Some(Witness { at: show_point(p), got: show_mat(&lhs), expected: show_mat(&rhs) });
                    }
                }
                Err(e) => {
                    return Item::new("reduced.diagram", &charts, Status::Fail).with_detail(format!("error: {e}"));
                }
            }
        }
        let detail = format!("tested {}, passed {passed}, skipped {skipped}", passed + failed);
        let status = if failed > 0 {
            Status::Fail
        } else if passed == 0 {
            Status::SkippedNoPoints
        } else {
            Status::Pass
        };
        let item = Item::new("reduced.diagram", &charts, status).with_detail(detail);
        match witness {
            Some(w) => item.with_witness(w),
            None => item,
        }
    }).collect::<Vec<_>>());

    items.extend((0..ch.len()).into_par_iter().map(|a| {
        let charts = [&ch[a]];
        let Ok(m) = &nupp[a] else {
            return Item::new("reduced.lambda-image", &charts, Status::Fail).with_detail("error: mixed-parity label entry");
        };
        let cols: Vec<usize> = bigs[a].cols.iter().map(|c| c - 1).collect();
        let (mut passed, mut skipped, mut failed) = (0, 0, 0);
        let mut witness = None;
        for p in &points {
            match psi_at(m, &bigs[a], p) {
                Ok(y) => {
                    let w = complete(&y, &cols, &Rat::one());
                    if in_lambda_image(&w, &space) {
                        passed += 1;
                    } else {
                        failed += 1;
                        if witness.is_none() {
                            witness = Some(Witness {
                                at: show_point(p),
                                got: show_mat(&w),
                                expected: format!("row space splitting as {}-plane + {}-plane", space.k, space.l),
                            });
                        }
                    }
                }
                Err(Error::SingularMinor) | Err(Error::PoleAtPoint) => skipped += 1,
                Err(e) => {
                    return Item::new("reduced.lambda-image", &charts, Status::Fail).with_detail(format!("error: {e}"))
                }
            }
        }
        let detail = format!("tested {}, passed {passed}, skipped {skipped}", passed + failed);
        let status = if failed > 0 {
            Status::Fail
        } else if passed == 0 {
            Status::SkippedNoPoints
        } else {
            Status::Pass
        };
        let item = Item::new("reduced.lambda-image", &charts, status).with_detail(detail);
        match witness {
            Some(w) => item.with_witness(w),
            None => item,
        }
    }).collect::<Vec<_>>());
    SuiteReport::new("reduced", atlas, items)
}

/// Several suites over one space, as emitted by `verify all`.
#[derive(Clone, Debug, Serialize)]
pub struct FullReport {
    pub space: GrassSpec,
    pub nu: NuSummary,
    pub triples: String,
    pub samples: usize,
    pub seed: u64,
    pub suites: Vec<SuiteReport>,
    pub totals: Totals,
}

impl FullReport {
    pub fn new(atlas: &Atlas, policy: TriplePolicy, samples: usize, seed: u64, suites: Vec<SuiteReport>) -> FullReport {
        let totals = Totals {
            pass: suites.iter().map(|s| s.totals.pass).sum(),
            fail: suites.iter().map(|s| s.totals.fail).sum(),
            skipped: suites.iter().map(|s| s.totals.skipped).sum(),
        };
        FullReport {
            space: atlas.space,
            nu: NuSummary::of(&atlas.nu),
            triples: policy.to_string(),
            samples,
            seed,
            suites,
            totals,
        }
    }

    pub fn passed(&self) -> bool {
        self.totals.fail == 0
    }
}
