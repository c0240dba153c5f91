//! Theorem-check suites over exhaustive and seeded random graph corpora.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{binom_u64, cycle_polynomial_class, extremal_coefficients, same_poly_threshold_family, to_u64s};
use crate::closed_forms::{
    count_consecutive_selections, poly_complete, poly_cycle, poly_multipartite, poly_path, poly_threshold, poly_wheel,
};
use crate::error::{Error, Result};
use crate::forts::{fort_masks, min_hitting_size, minimal_masks};
use crate::graph::{self, has_hamiltonian_path, is_isomorphic, to_graph6, Graph, VertexSet, LABELED_CAP};
use crate::poly::{for_each_k_subset, unimodal_slice, ForcingTable, DEFAULT_ENUMERATION_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Extremal,
    Multiplicativity,
    Hall,
    Forts,
    Ip,
    Recognizability,
    ClosedForms,
    Conjectures,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Extremal,
        Suite::Multiplicativity,
        Suite::Hall,
        Suite::Forts,
        Suite::Ip,
        Suite::Recognizability,
        Suite::ClosedForms,
        Suite::Conjectures,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Extremal => "extremal",
            Suite::Multiplicativity => "multiplicativity",
            Suite::Hall => "hall",
            Suite::Forts => "forts",
            Suite::Ip => "ip",
            Suite::Recognizability => "recognizability",
            Suite::ClosedForms => "closed-forms",
            Suite::Conjectures => "conjectures",
        }
    }

    /// Conjecture suites report counterexamples as warnings.
    pub fn is_conjecture(self) -> bool {
        self == Suite::Conjectures
    }

    fn index(self) -> usize {
        self as usize
    }

    fn severity(self) -> Severity {
        if self.is_conjecture() {
            Severity::Warning
        } else {
            Severity::Failure
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

/// `all` or a single suite name.
pub fn parse_suites(name: &str) -> Result<Vec<Suite>> {
    if name == "all" {
        Ok(Suite::ALL.to_vec())
    } else {
        Ok(vec![name.parse()?])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    /// Exhaustive corpora run up to `min(max_n, 7)`; family checks up to `max_n`.
    pub max_n: usize,
    pub seed: u64,
    pub jobs: usize,
    /// Largest order for which a brute-force polynomial is computed.
    pub cap: usize,
    /// Include the seeded random corpora.
    pub random: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { max_n: 7, seed: 0, jobs: 1, cap: DEFAULT_ENUMERATION_CAP, random: true }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Failure,
    Warning,
}

/// One checked object that failed at least one check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub record: Severity,
    pub suite: Suite,
    pub subject: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
    pub checks: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub suite: Suite,
    pub checked: u64,
    pub failures: u64,
    pub warnings: u64,
    pub passed: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub records: Vec<Record>,
    pub summaries: Vec<SuiteSummary>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.summaries.iter().all(|s| s.passed)
    }

    pub fn warnings(&self) -> u64 {
        self.summaries.iter().map(|s| s.warnings).sum()
    }

    pub fn summary(&self, suite: Suite) -> Option<&SuiteSummary> {
        self.summaries.iter().find(|s| s.suite == suite)
    }

    /// Failure and warning records followed by one summary line per suite.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).expect("record serializes"));
            out.push('\n');
        }
        #[derive(Serialize)]
        struct Line<'a> {
            record: &'static str,
            #[serde(flatten)]
            summary: &'a SuiteSummary,
        }
        for s in &self.summaries {
            out.push_str(&serde_json::to_string(&Line { record: "summary", summary: s }).expect("summary serializes"));
            out.push('\n');
        }
        out
    }
}

/// Records kept per suite; counts continue past it.
const RECORD_LIMIT: usize = 100;

#[derive(Clone, Debug, Default)]
struct Tally {
    checked: u64,
    flagged: u64,
    records: Vec<Record>,
}

#[derive(Clone, Debug, Default)]
struct Tallies([Tally; 8]);

impl Tallies {
    fn note(&mut self, suite: Suite, subject: impl FnOnce() -> String, g: Option<&Graph>, checks: Vec<String>) {
        let t = &mut self.0[suite.index()];
        t.checked += 1;
        if checks.is_empty() {
            return;
        }
        t.flagged += 1;
        if t.records.len() < RECORD_LIMIT {
            t.records.push(Record {
                record: suite.severity(),
                suite,
                subject: subject(),
                graph6: g.map(to_graph6),
                checks,
            });
        }
    }

    fn merge(&mut self, other: Tallies) {
        for (a, b) in self.0.iter_mut().zip(other.0) {
            a.checked += b.checked;
            a.flagged += b.flagged;
            let room = RECORD_LIMIT.saturating_sub(a.records.len());
            a.records.extend(b.records.into_iter().take(room));
        }
    }
}

/// Runs the selected suites. Output is identical for every `jobs` value.
pub fn run_suites(suites: &[Suite], cfg: &SweepConfig) -> Result<Report> {
    if cfg.max_n == 0 {
        return Err(Error::InvalidArgument("max_n must be at least 1".into()));
    }
    let cap = cfg.cap.min(39);
    if suites.contains(&Suite::ClosedForms) && cfg.max_n > cap {
        return Err(Error::EnumerationCap { n: cfg.max_n, cap });
    }
    let mut on = [false; 8];
    for s in suites {
        on[s.index()] = true;
    }
    let mut tallies = Tallies::default();
    if Suite::ALL.iter().any(|s| on[s.index()] && *s != Suite::ClosedForms) {
        for n in 1..=cfg.max_n.min(LABELED_CAP) {
            tallies.merge(corpus(n, &on, cfg.jobs)?);
        }
    }
    if on[Suite::Multiplicativity.index()] && cfg.random {
        random_unions(cfg.seed, &mut tallies)?;
    }
    if on[Suite::Ip.index()] && cfg.random {
        random_ip(cfg.seed, &mut tallies)?;
    }
    if on[Suite::Conjectures.index()] && cfg.random {
        random_conjectures(cfg.seed, &mut tallies)?;
    }
    if on[Suite::Recognizability.index()] {
        recognizability_extras(cfg.max_n, &mut tallies)?;
    }
    if on[Suite::ClosedForms.index()] {
        closed_forms(cfg.max_n, &mut tallies)?;
    }
    let mut report = Report::default();
    for s in Suite::ALL {
        if !on[s.index()] {
            continue;
        }
        let t = std::mem::take(&mut tallies.0[s.index()]);
        let (failures, warnings) = if s.is_conjecture() { (0, t.flagged) } else { (t.flagged, 0) };
        report.records.extend(t.records);
        report.summaries.push(SuiteSummary { suite: s, checked: t.checked, failures, warnings, passed: failures == 0 });
    }
    Ok(report)
}

/// Per-order constants shared by every graph of that order.
struct Order {
    n: usize,
    path: Vec<u64>,
    complete: Vec<u64>,
    choose: Vec<u64>,
}

impl Order {
    fn new(n: usize) -> Result<Self> {
        Ok(Order {
            n,
            path: to_u64s(&poly_path(n)?),
            complete: to_u64s(&poly_complete(n)?),
            choose: (0..=n as i64).map(|i| binom_u64(n as i64, i)).collect(),
        })
    }
}

const CHUNK: u64 = 1 << 12;

fn corpus(n: usize, on: &[bool; 8], jobs: usize) -> Result<Tallies> {
    let gen = graph::all_labeled_graphs(n)?;
    let order = Order::new(n)?;
    let ranges: Vec<Range<u64>> =
        (0..gen.total().div_ceil(CHUNK)).map(|k| k * CHUNK..((k + 1) * CHUNK).min(gen.total())).collect();
    let run = |r: &Range<u64>| -> Tallies {
        let mut t = Tallies::default();
        for code in r.clone() {
            check_graph(&gen.graph(code), code, &order, on, &mut t);
        }
        t
    };
    let parts: Vec<Tallies> = if jobs <= 1 {
        ranges.iter().map(run).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool");
        pool.install(|| ranges.par_iter().map(run).collect())
    };
    let mut total = Tallies::default();
    for p in parts {
        total.merge(p);
    }
    Ok(total)
}

fn check_graph(g: &Graph, code: u64, o: &Order, on: &[bool; 8], t: &mut Tallies) {
    let n = o.n;
    let table = ForcingTable::build(g).expect("n <= 7");
    let c = table.counts();
    let z = c.iter().position(|&x| x != 0).expect("V is forcing");
    let subject = || format!("labeled n={n} code={code}");
    let is_path = g.is_path();

    if on[Suite::Extremal.index()] {
        let mut fails = Vec::new();
        let e = extremal_coefficients(g).expect("n >= 1");
        let mut expect = |what: &str, formula: u64, brute: u64| {
            if formula != brute {
                fails.push(format!("{what}: formula {formula}, enumeration {brute}"));
            }
        };
        expect("z(G;n)", e.top, c[n]);
        expect("z(G;n-1)", e.second, c[n - 1]);
        if n >= 2 {
            expect("z(G;n-2)", e.third, c[n - 2]);
        }
        expect("z(G;1)", e.bottom, c[1]);
        if let Some(i) = (0..=n).find(|&i| (c[i] == 0) != (i < z)) {
            fails.push(format!("z(G;{i}) = {} but Z(G) = {z}", c[i]));
        }
        let all_min = c[z] == o.choose[z];
        if all_min != (g.is_complete() || g.is_edgeless()) {
            fails.push(format!("every minimum set forcing is {all_min}, graph complete or empty is {}", !all_min));
        }
        t.note(Suite::Extremal, subject, Some(g), fails);
    }

    if on[Suite::Hall.index()] {
        let fails = (1..)
            .take_while(|&i| 2 * i < n)
            .filter(|&i| c[i] > c[i + 1])
            .map(|i| format!("z(G;{i}) = {} > z(G;{}) = {}", c[i], i + 1, c[i + 1]))
            .collect();
        t.note(Suite::Hall, subject, Some(g), fails);
    }

    if on[Suite::Multiplicativity.index()] && !g.is_connected() {
        let product = g.connected_components().into_iter().fold(vec![1u64], |acc, comp| {
            let part = ForcingTable::build(&g.induced_subgraph(comp)).expect("small").counts();
            multiply(&acc, &part)
        });
        let fails = if product != c { vec![format!("product of components {product:?}, enumeration {c:?}")] } else { vec![] };
        t.note(Suite::Multiplicativity, subject, Some(g), fails);
    }

    if on[Suite::Forts.index()] || on[Suite::Ip.index()] {
        let forts = fort_masks(g);
        let full = g.vertices().bits();
        if on[Suite::Forts.index()] {
            let mut fails = Vec::new();
            let mut holds_fort = vec![false; 1 << n];
            for &f in &forts {
                holds_fort[f as usize] = true;
            }
            for m in 1..=full {
                if !holds_fort[m as usize] {
                    holds_fort[m as usize] = VertexSet(m).iter().any(|v| holds_fort[(m & !(1 << v)) as usize]);
                }
            }
            if let Some(s) = (0..=full).find(|&s| table.is_forcing(VertexSet(s)) && holds_fort[(full & !s) as usize]) {
                fails.push(format!("zero forcing set {} misses a fort", VertexSet(s)));
            }
            let total: u64 = c.iter().sum();
            if forts.len() as u64 > (1u64 << n) - total {
                fails.push(format!("{} forts exceed 2^n - Z(G;1) = {}", forts.len(), (1u64 << n) - total));
            }
            if has_hamiltonian_path(g).expect("n <= 7") {
                if let Some(i) = (0..=n).find(|&i| c[i] > o.path[i]) {
                    fails.push(format!("Hamiltonian bound fails at i = {i}: {} > {}", c[i], o.path[i]));
                }
                if (c == o.path) != is_path {
                    fails.push("Hamiltonian bound equality does not single out the path".into());
                }
            }
            let smallest = forts.first().map_or(usize::MAX, |f| f.count_ones() as usize);
            if smallest <= z + 1 {
                if let Some(i) = (1..=n).find(|&i| c[i] > o.path[i]) {
                    fails.push(format!("small-fort bound fails at i = {i}: {} > {}", c[i], o.path[i]));
                }
            }
            t.note(Suite::Forts, subject, Some(g), fails);
        }
        if on[Suite::Ip.index()] {
            let size = min_hitting_size(&minimal_masks(&forts), full);
            let fails = if size != z { vec![format!("fort cover {size}, Z(G) = {z}")] } else { vec![] };
            t.note(Suite::Ip, subject, Some(g), fails);
        }
    }

    if on[Suite::Recognizability.index()] {
        let mut fails = Vec::new();
        if (c == o.path) != is_path {
            fails.push(format!("path polynomial match {}, graph is path {is_path}", c == o.path));
        }
        if (c == o.complete) != g.is_complete() {
            fails.push(format!("complete polynomial match {}, graph is complete {}", c == o.complete, g.is_complete()));
        }
        t.note(Suite::Recognizability, subject, Some(g), fails);
    }

    if on[Suite::Conjectures.index()] {
        t.note(Suite::Conjectures, subject, Some(g), conjecture_checks(&c, &o.path));
    }
}

fn conjecture_checks(c: &[u64], path: &[u64]) -> Vec<String> {
    let mut fails = Vec::new();
    if !unimodal_slice(c) {
        fails.push(format!("not unimodal: {c:?}"));
    }
    if let Some(i) = (0..c.len()).find(|&i| c[i] > path[i]) {
        fails.push(format!("z(G;{i}) = {} exceeds z(P_n;{i}) = {}", c[i], path[i]));
    }
    fails
}

fn multiply(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn counts(g: &Graph) -> Result<Vec<u64>> {
    Ok(ForcingTable::build(g)?.counts())
}

fn rng_for(seed: u64, suite: Suite) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (suite.index() as u64 + 1).wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// Random graph with a uniformly drawn edge probability in `[0.1, 0.9]`.
pub(crate) fn random_sample(n: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    let p = rng.gen_range(0.1..=0.9);
    graph::random_graph(n, p, rng)
}

fn random_unions(seed: u64, t: &mut Tallies) -> Result<()> {
    let mut rng = rng_for(seed, Suite::Multiplicativity);
    for k in 0..200 {
        let a = random_sample(rng.gen_range(1..=6), &mut rng)?;
        let b = random_sample(rng.gen_range(1..=6), &mut rng)?;
        let g = a.disjoint_union(&b)?;
        let (whole, left, right) = (counts(&g)?, counts(&a)?, counts(&b)?);
        let product = multiply(&left, &right);
        let fails = if whole != product { vec![format!("union {whole:?}, product {product:?}")] } else { vec![] };
        t.note(Suite::Multiplicativity, || format!("random union #{k}"), Some(&g), fails);
    }
    Ok(())
}

fn random_ip(seed: u64, t: &mut Tallies) -> Result<()> {
    let mut rng = rng_for(seed, Suite::Ip);
    for k in 0..100 {
        let g = random_sample(rng.gen_range(2..=14), &mut rng)?;
        let c = counts(&g)?;
        let z = c.iter().position(|&x| x != 0).expect("V is forcing");
        let size = min_hitting_size(&minimal_masks(&fort_masks(&g)), g.vertices().bits());
        let fails = if size != z { vec![format!("fort cover {size}, Z(G) = {z}")] } else { vec![] };
        t.note(Suite::Ip, || format!("random #{k}"), Some(&g), fails);
    }
    Ok(())
}

fn random_conjectures(seed: u64, t: &mut Tallies) -> Result<()> {
    let mut rng = rng_for(seed, Suite::Conjectures);
    for k in 0..500 {
        let n = rng.gen_range(8..=14);
        let g = random_sample(n, &mut rng)?;
        let path = to_u64s(&poly_path(n)?);
        t.note(Suite::Conjectures, || format!("random #{k}"), Some(&g), conjecture_checks(&counts(&g)?, &path));
    }
    Ok(())
}

/// The graphs expected to share the polynomial of `C_n`: the cycle, one
/// graph per chord class, and the exceptional graphs at `n = 4` and `n = 6`.
pub(crate) fn expected_cycle_class(n: usize) -> Result<Vec<Graph>> {
    let mut out = vec![graph::cycle(n)?];
    for j in 2..n.saturating_sub(1) {
        let g = graph::cycle_plus_chord(n, 0, j)?;
        if !out.iter().try_fold(false, |seen, r| Ok::<_, Error>(seen || is_isomorphic(r, &g)?))? {
            out.push(g);
        }
    }
    match n {
        4 => out.push(Graph::from_edge_list(4, &[(0, 1), (2, 3)])?),
        6 => out.push(graph::path(4)?.disjoint_union(&graph::empty(1)?)?.join(&graph::complete(1)?)?),
        _ => {}
    }
    Ok(out)
}

fn recognizability_extras(max_n: usize, t: &mut Tallies) -> Result<()> {
    let s = Suite::Recognizability;
    for n in 3..=max_n.min(LABELED_CAP) {
        let found = cycle_polynomial_class(n)?;
        let expected = expected_cycle_class(n)?;
        let mut fails = Vec::new();
        if found.len() != expected.len() {
            fails.push(format!("{} classes found, {} expected", found.len(), expected.len()));
        }
        for e in &expected {
            let hits = found.iter().try_fold(0, |k, r| Ok::<_, Error>(k + is_isomorphic(r, e)? as usize))?;
            if hits != 1 {
                fails.push(format!("expected class {} matched {hits} times", to_graph6(e)));
            }
        }
        t.note(s, || format!("cycle class n={n}"), None, fails);
    }

    let sub = graph::subdivided_k4();
    let fails = if counts(&sub)? != to_u64s(&poly_wheel(5)?) { vec!["differs from W_5".to_string()] } else { vec![] };
    t.note(s, || "subdivided K_4".into(), Some(&sub), fails);

    for a in 2..=5 {
        for b in 2..=5 {
            let union = graph::complete(a)?.disjoint_union(&graph::complete(b)?)?;
            let bi = graph::complete_multipartite(&[a, b])?;
            let fails = if counts(&union)? != counts(&bi)? { vec!["polynomials differ".to_string()] } else { vec![] };
            t.note(s, || format!("K_{a} + K_{b} against K_{{{a},{b}}}"), None, fails);
        }
    }

    for k in 3..=5 {
        let family = same_poly_threshold_family(k)?;
        let mut fails = Vec::new();
        if family.iter().any(|(_, p)| p != &family[0].1) {
            fails.push("threshold polynomials differ".into());
        }
        if k <= 4 {
            let graphs = family.iter().map(|(s, _)| graph::threshold_from_string(s)).collect::<Result<Vec<_>>>()?;
            let first = to_u64s(&family[0].1);
            if graphs.iter().any(|g| counts(g).map_or(true, |c| c != first)) {
                fails.push("enumeration differs from the threshold formula".into());
            }
            for i in 0..graphs.len() {
                for j in i + 1..graphs.len() {
                    if is_isomorphic(&graphs[i], &graphs[j])? {
                        fails.push(format!("{} and {} are isomorphic", family[i].0, family[j].0));
                    }
                }
            }
        }
        t.note(s, || format!("threshold family k={k}"), None, fails);
    }
    Ok(())
}

/// Canonical connected threshold strings of length `len`.
pub(crate) fn canonical_threshold_strings(len: usize) -> Vec<String> {
    if len == 1 {
        return vec!["1".into()];
    }
    (0..1u64 << (len - 2))
        .map(|bits| {
            let mut s = String::with_capacity(len);
            s.push('1');
            for i in (0..len - 2).rev() {
                s.push(if bits >> i & 1 == 1 { '1' } else { '0' });
            }
            s.push('1');
            // the first symbol is free; make it match the second
            let second = s.as_bytes()[1] as char;
            s.replace_range(0..1, &second.to_string());
            s
        })
        .collect()
}

/// Integer partitions of `n` into parts of size at least 2, non-increasing.
fn partitions(n: usize, max_part: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in (2..=max_part.min(n)).rev() {
        for mut rest in partitions(n - p, p) {
            rest.insert(0, p);
            out.push(rest);
        }
    }
    out
}

fn closed_forms(max_n: usize, t: &mut Tallies) -> Result<()> {
    let s = Suite::ClosedForms;
    let compare = |t: &mut Tallies, name: String, formula: Result<Vec<u64>>, g: &Graph| -> Result<()> {
        let brute = counts(g)?;
        let fails = match formula {
            Ok(f) if f == brute => vec![],
            Ok(f) => vec![format!("formula {f:?}, enumeration {brute:?}")],
            Err(e) => vec![format!("formula failed: {e}")],
        };
        t.note(s, || name, Some(g), fails);
        Ok(())
    };
    for n in 1..=max_n {
        compare(t, format!("path {n}"), poly_path(n).map(|p| to_u64s(&p)), &graph::path(n)?)?;
        compare(t, format!("complete {n}"), poly_complete(n).map(|p| to_u64s(&p)), &graph::complete(n)?)?;
        if n >= 3 {
            compare(t, format!("cycle {n}"), poly_cycle(n).map(|p| to_u64s(&p)), &graph::cycle(n)?)?;
        }
        if n >= 5 {
            compare(t, format!("wheel {n}"), poly_wheel(n).map(|p| to_u64s(&p)), &graph::wheel(n)?)?;
        }
        for parts in partitions(n, n).into_iter().filter(|p| p.len() >= 2) {
            let g = graph::complete_multipartite(&parts)?;
            compare(t, format!("multipartite {parts:?}"), poly_multipartite(&parts).map(|p| to_u64s(&p)), &g)?;
        }
        for st in canonical_threshold_strings(n) {
            let g = graph::threshold_from_string(&st)?;
            compare(t, format!("threshold {st}"), poly_threshold(&st).map(|p| to_u64s(&p)), &g)?;
        }
        if n >= 4 {
            let cyc = to_u64s(&poly_cycle(n)?);
            for j in 2..n - 1 {
                compare(t, format!("cycle {n} with chord (0, {j})"), Ok(cyc.clone()), &graph::cycle_plus_chord(n, 0, j)?)?;
            }
        }
        if n >= 3 {
            for m in [3, 4] {
                let mut fails = Vec::new();
                for k in 0..=n {
                    let formula = count_consecutive_selections(n, k, m)?;
                    let direct = consecutive_direct(n, k, m);
                    if formula != direct.into() {
                        fails.push(format!("R_{m}({n}, {k}) = {formula}, direct count {direct}"));
                    }
                }
                t.note(s, || format!("R_{m}({n}, k)"), None, fails);
            }
        }
    }
    Ok(())
}

/// `k`-subsets of the cycle `0..n` containing `m` cyclically consecutive vertices.
pub(crate) fn consecutive_direct(n: usize, k: usize, m: usize) -> u64 {
    if m > n {
        return 0;
    }
    let runs: Vec<u64> = (0..n).map(|start| (0..m).fold(0u64, |acc, d| acc | 1 << ((start + d) % n))).collect();
    let mut count = 0;
    for_each_k_subset(n, k, |set| {
        count += runs.iter().any(|&r| set.bits() & r == r) as u64;
    });
    count
}
