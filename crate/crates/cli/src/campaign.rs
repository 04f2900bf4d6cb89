//! Campaigns: every qualifying instance of one statement, checked against
//! the matching algorithm on each catalogue graph.

use std::collections::{BTreeMap, HashMap};
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use pmavoid_core::connectivity::{cyclic_edge_connectivity, edge_connectivity};
use pmavoid_core::construction::{build_counterexample, ConstructionParams};
use pmavoid_core::independent::is_independent;
use pmavoid_core::lm::{lm_reduce_exhaustive_avoiding, lm_reduce_greedy_avoiding, LmValidator};
use pmavoid_core::matching::perfect_matching_avoiding;
use pmavoid_core::preclusion::{
    check_obstructions, classify_with, independent_witness_exact, verify_moreover_bound, ClassifyOptions,
    ObstructionVerdict,
};
use pmavoid_core::twofactor::{build_path_witness_with_cap, detect_position_p1, extends_to_two_factor, P1Witness, SevenCircuitChecker};
use pmavoid_core::{io, Connectivity, EdgeSet, Error, Multigraph, PathSpec, PreclusionVerdict};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalogue::{read_catalogue_file, CatalogueEntry};
use crate::CliError;

/// Which statement a campaign replays.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    /// Deleting `d - 1` edges never destroys every perfect matching.
    T1,
    /// No perfect matching iff an LM certificate or a large independent set.
    T2,
    /// For `|X| = d`: no perfect matching iff a common vertex or a same-side bipartition.
    T3,
    /// Two 3-paths both fail to extend iff they are in position P1.
    T5,
    /// Greedy and exhaustive LM reduction agree.
    Lm,
    /// Every vertex avoids a 7-circuit in some 2-factor.
    Cor7,
    /// The two-path construction with no extendable path.
    Counterexample,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Caps {
    pub max_n: usize,
    pub max_x_size: usize,
    pub max_paths: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            max_n: 20,
            max_x_size: 4,
            max_paths: 100_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CampaignConfig {
    pub theorem: Theorem,
    pub input_files: Vec<PathBuf>,
    pub caps: Caps,
    /// Worker threads; 0 uses one per core.
    pub jobs: usize,
    /// Values of `k` for the T2 campaign.
    pub ks: Vec<usize>,
    /// Regularity the statements are instantiated with.
    pub degree: usize,
}

impl CampaignConfig {
    pub fn new(theorem: Theorem) -> Self {
        Self {
            theorem,
            input_files: Vec::new(),
            caps: Caps::default(),
            jobs: 0,
            ks: vec![1, 2],
            degree: 3,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let bad = |msg: &str| Err(CliError::Config(msg.into()));
        if self.caps.max_n == 0 || self.caps.max_x_size == 0 || self.caps.max_paths == 0 {
            return bad("caps must be positive");
        }
        if self.degree < 2 {
            return bad("degree must be at least 2");
        }
        if self.theorem == Theorem::T2 && self.ks.is_empty() {
            return bad("the T2 campaign needs at least one value of k");
        }
        if self.theorem != Theorem::Counterexample && self.input_files.is_empty() {
            return bad("no input files given");
        }
        Ok(())
    }
}

/// A single checked case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum Instance {
    Edges { x: EdgeSet, k: usize },
    PathPair { p: PathSpec, q: PathSpec },
    Vertex { v: usize },
    ConstructionPath { index: usize },
}

/// A disagreement, with everything needed to replay it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub instance: Instance,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GraphRecord {
    pub file: String,
    pub line: usize,
    pub graph: String,
    pub n: usize,
    pub hypotheses_met: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cyclic: Option<Connectivity>,
    pub instances: u64,
    pub violations: Vec<Violation>,
    /// Why the graph was not examined (cap exhaustion).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
    /// Counts of the verdicts met, keyed by verdict name.
    pub stats: BTreeMap<String, u64>,
    pub wall_ms: f64,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CampaignSummary {
    pub graphs: usize,
    pub hypotheses_met: usize,
    pub skipped: usize,
    pub instances: u64,
    pub violations: usize,
    pub stats: BTreeMap<String, u64>,
    pub wall_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub theorem: Theorem,
    pub records: Vec<GraphRecord>,
    pub summary: CampaignSummary,
}

impl CampaignReport {
    pub fn violation_count(&self) -> usize {
        self.summary.violations
    }

    /// Writes one JSON line per graph, then a summary line.
    pub fn write_jsonl(&self, mut out: impl Write) -> std::io::Result<()> {
        for r in &self.records {
            serde_json::to_writer(&mut out, r)?;
            writeln!(out)?;
        }
        serde_json::to_writer(&mut out, &serde_json::json!({ "theorem": self.theorem, "summary": self.summary }))?;
        writeln!(out)
    }
}

/// Outcome of one instance: a violation message and the verdict names seen.
#[derive(Default)]
struct Check {
    violation: Option<String>,
    tags: Vec<&'static str>,
}

impl Check {
    fn tag(mut self, t: &'static str) -> Self {
        self.tags.push(t);
        self
    }

    fn fail(mut self, msg: String) -> Self {
        self.violation.get_or_insert(msg);
        self
    }
}

/// Per-graph data shared by all instances.
struct Context<'g> {
    g: &'g Multigraph,
    d: usize,
    lm: LmValidator<'g>,
    /// Extension verdicts of 3-paths, keyed by sorted edge ids.
    extends: HashMap<Vec<usize>, bool>,
    seven: Option<SevenCircuitChecker<'g>>,
}

impl<'g> Context<'g> {
    fn new(g: &'g Multigraph, d: usize) -> Self {
        Self {
            g,
            d,
            lm: LmValidator::new(g, d),
            extends: HashMap::new(),
            seven: None,
        }
    }

    fn path_extends(&self, p: &PathSpec) -> Result<bool, Error> {
        let mut key = p.edges().to_vec();
        key.sort_unstable();
        match self.extends.get(&key) {
            Some(&b) => Ok(b),
            None => Ok(extends_to_two_factor(self.g, p)?.is_some()),
        }
    }
}

fn subsets(m: usize, size: usize) -> Vec<EdgeSet> {
    fn rec(m: usize, size: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<EdgeSet>) {
        if cur.len() == size {
            out.push(cur.iter().copied().collect());
            return;
        }
        for e in start..m {
            if m - e < size - cur.len() {
                break;
            }
            cur.push(e);
            rec(m, size, e + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, size, 0, &mut Vec::new(), &mut out);
    out
}

/// Every path with three edges, listed once.
pub fn three_paths(g: &Multigraph) -> Vec<PathSpec> {
    let mut out = Vec::new();
    for (e, a, b) in g.edges() {
        for &(u, e1) in g.incident(a) {
            for &(w, e3) in g.incident(b) {
                if e1 == e || e3 == e || u == b || w == a || u == w {
                    continue;
                }
                out.push(PathSpec::new(g, vec![u, a, b, w], vec![e1, e, e3]).expect("walk on distinct vertices"));
            }
        }
    }
    // Each path was produced in both orientations.
    out.retain(|p| p.vertices()[0] < p.vertices()[3]);
    out
}

fn p1_witness_is_valid(g: &Multigraph, p: &PathSpec, q: &PathSpec, w: &P1Witness) -> bool {
    let (v2, v3) = w.shared_edge;
    let side = &w.colouring.side1;
    let proper = g
        .edges()
        .filter(|&(_, a, b)| ![a, b].iter().any(|&x| x == v2 || x == v3))
        .all(|(_, a, b)| side.contains(a) != side.contains(b));
    let (pv, qv) = (p.vertices(), q.vertices());
    proper && side.contains(pv[0]) && side.contains(pv[3]) && !side.contains(qv[0]) && !side.contains(qv[3])
}

fn check_instance(theorem: Theorem, ctx: &Context<'_>, instance: &Instance) -> Result<Check, Error> {
    let g = ctx.g;
    let d = ctx.d;
    let c = Check::default();
    Ok(match (theorem, instance) {
        (Theorem::T1, Instance::Edges { x, .. }) => match perfect_matching_avoiding(g, x)? {
            Some(m) if m.is_perfect_in(g) && m.edges.is_disjoint(x) => c.tag("hasMatching"),
            _ => c.fail("no perfect matching avoids X".into()),
        },
        (Theorem::T2, Instance::Edges { x, k }) => check_t2(ctx, x, *k)?,
        (Theorem::T3, Instance::Edges { x, .. }) => {
            let verdict = check_obstructions(g, x, d)?.verdict;
            let has = perfect_matching_avoiding(g, x)?.is_some();
            let mut c = match &verdict {
                ObstructionVerdict::HasMatching => c.tag("hasMatching"),
                ObstructionVerdict::CommonVertex { vertex } => {
                    let ok = x.iter().all(|e| {
                        let (a, b) = g.endpoints(e);
                        a == *vertex || b == *vertex
                    });
                    let c = c.tag("commonVertex");
                    if ok { c } else { c.fail(format!("vertex {vertex} misses an edge of X")) }
                }
                ObstructionVerdict::BipartiteSamePartition { partition } => {
                    let s = &partition.side1;
                    let ok = g.edges().all(|(e, a, b)| {
                        if x.contains(e) {
                            s.contains(a) && s.contains(b)
                        } else {
                            s.contains(a) != s.contains(b)
                        }
                    });
                    let c = c.tag("bipartiteSamePartition");
                    if ok { c } else { c.fail("partition does not certify the obstruction".into()) }
                }
            };
            if verdict.has_matching() != has {
                c = c.fail(format!("structural verdict {verdict:?} but perfect matching exists: {has}"));
            }
            c
        }
        (Theorem::T5, Instance::PathPair { p, q }) => {
            let both = !ctx.path_extends(p)? && !ctx.path_extends(q)?;
            let w = detect_position_p1(g, p, q)?;
            let mut c = if both { c.tag("bothNonExtendable") } else { c };
            if let Some(w) = &w {
                c = c.tag("positionP1");
                if !p1_witness_is_valid(g, p, q, w) {
                    c = c.fail("P1 colouring is not valid".into());
                }
            }
            if both != w.is_some() {
                c = c.fail(format!("both non-extendable: {both}, position P1 found: {}", w.is_some()));
            }
            c
        }
        (Theorem::Lm, Instance::Edges { x, .. }) => {
            let greedy = lm_reduce_greedy_avoiding(g, x)?;
            let exhaustive = lm_reduce_exhaustive_avoiding(g, x)?;
            let mut c = if exhaustive.is_some() { c.tag("lmCertificate") } else { c };
            if greedy.is_some() != exhaustive.is_some() {
                c = c.fail(format!(
                    "greedy found a certificate: {}, exhaustive: {}",
                    greedy.is_some(),
                    exhaustive.is_some()
                ));
            }
            for cert in greedy.iter().chain(&exhaustive) {
                if let Err(e) = ctx.lm.validate(cert, x) {
                    c = c.fail(format!("certificate does not replay: {e}"));
                }
            }
            if exhaustive.is_some() && perfect_matching_avoiding(g, x)?.is_some() {
                c = c.fail("LM certificate exists but G - X has a perfect matching".into());
            }
            c
        }
        (Theorem::Cor7, Instance::Vertex { v }) => {
            let checker = match &ctx.seven {
                Some(s) => s,
                None => return Err(Error::Hypothesis("graph is not cyclically 7-edge-connected".into())),
            };
            match checker.check(*v) {
                Ok(tf) if tf.is_two_factor_of(g) && tf.circuit_length_through(g, *v) != 7 => c.tag("twoFactor"),
                Ok(_) => c.fail("returned 2-factor is invalid".into()),
                Err(Error::NotFound(msg)) => c.fail(msg),
                Err(e) => return Err(e),
            }
        }
        (Theorem::Counterexample, Instance::ConstructionPath { index }) => check_construction_path(g, *index)?,
        (t, i) => return Err(Error::Precondition(format!("instance {i:?} does not belong to campaign {t:?}"))),
    })
}

fn check_t2(ctx: &Context<'_>, x: &EdgeSet, k: usize) -> Result<Check, Error> {
    let g = ctx.g;
    let n = g.vertex_count();
    let opts = ClassifyOptions { mis_cap: n.max(1) };
    let verdict = classify_with(g, x, ctx.d, k, opts)?.verdict;
    let mut c = Check::default().tag(verdict.tag());
    let moreover = |c: Check, w| -> Result<Check, Error> {
        Ok(if verify_moreover_bound(g, x, w, k)? {
            c
        } else {
            c.fail(format!("complement of I induces {} edges, above k - 1", w.complement_induced_edges.len()))
        })
    };
    let exact = independent_witness_exact(g, x, opts.mis_cap)?;
    match &verdict {
        PreclusionVerdict::HasMatching { .. } => {
            if lm_reduce_exhaustive_avoiding(g, x)?.is_some() {
                c = c.fail("perfect matching exists but an LM certificate was found".into());
            }
            if exact.is_some() {
                c = c.fail("perfect matching exists but a large independent set was found".into());
            }
        }
        PreclusionVerdict::LmIsolated { certificate } => match ctx.lm.validate(certificate, x) {
            Ok(report) => {
                if let Some(s) = report.structure {
                    c = c.tag("structureChecked");
                    if !s.all_hold() {
                        c = c.fail(format!("LM structure clauses fail: {s:?}"));
                    }
                }
            }
            Err(e) => c = c.fail(format!("LM certificate does not replay: {e}")),
        },
        PreclusionVerdict::LargeIndependent { witness } => {
            c = moreover(c, witness)?;
        }
        PreclusionVerdict::TutteBarrier { .. } => {
            c = c.fail("no perfect matching, yet neither an LM certificate nor a large independent set".into());
        }
    }
    if let Some(w) = &exact {
        c = moreover(c, w)?;
    }
    Ok(c)
}

fn check_construction_path(g: &Multigraph, index: usize) -> Result<Check, Error> {
    let built = build_counterexample(&ConstructionParams::canonical())?;
    let (p, set) = match index {
        1 => (&built.p1, built.witness_for_p1()),
        2 => (&built.p2, built.witness_for_p2()),
        _ => return Err(Error::Precondition(format!("construction has paths 1 and 2, not {index}"))),
    };
    let mut c = Check::default();
    if g != &built.graph || !g.is_cubic() || g.vertex_count() != 44 {
        c = c.fail("constructed graph is not the 44-vertex cubic graph".into());
    }
    if extends_to_two_factor(g, p)?.is_some() {
        c = c.fail(format!("path {index} extends to a 2-factor"));
    }
    if !is_independent(g, &p.edge_set(), &set) || 2 * set.len() <= g.vertex_count() {
        c = c.fail(format!("quoted set for path {index} is not a large independent set"));
    }
    let w = build_path_witness_with_cap(g, p, g.vertex_count())?;
    w.validate(g)?;
    Ok(c.tag("witnessVerified"))
}

/// Hypotheses of the campaign's statement, computed from the graph. Returns
/// whether they hold (for T2, the values of `k` they hold for) and the
/// cyclic edge-connectivity when it was needed.
fn hypotheses(cfg: &CampaignConfig, g: &Multigraph) -> (Vec<usize>, Option<Connectivity>) {
    let d = cfg.degree;
    let n = g.vertex_count();
    let base = g.is_regular(d) && n.is_multiple_of(2) && n > 0;
    let cyclic = || cyclic_edge_connectivity(g).value;
    match cfg.theorem {
        Theorem::T1 => {
            let ok = base && edge_connectivity(g).is_ok_and(|c| c + 1 >= d);
            (if ok { vec![0] } else { vec![] }, None)
        }
        Theorem::T2 => {
            if !base {
                return (vec![], None);
            }
            let c = cyclic();
            (cfg.ks.iter().copied().filter(|&k| c.at_least(d - 1 + 2 * k)).collect(), Some(c))
        }
        Theorem::T3 | Theorem::T5 | Theorem::Cor7 => {
            if !base || (cfg.theorem != Theorem::T3 && d != 3) {
                return (vec![], None);
            }
            let c = cyclic();
            let need = match cfg.theorem {
                Theorem::T3 => d + 1,
                Theorem::T5 => 5,
                _ => 7,
            };
            (if c.at_least(need) && d >= 3 { vec![1] } else { vec![] }, Some(c))
        }
        Theorem::Lm | Theorem::Counterexample => (vec![0], None),
    }
}

fn instances(cfg: &CampaignConfig, g: &Multigraph, ks: &[usize]) -> Result<Vec<Instance>, String> {
    let d = cfg.degree;
    let m = g.edge_count();
    let edges_of = |size: usize, k: usize| -> Result<Vec<Instance>, String> {
        if size > cfg.caps.max_x_size {
            return Err(format!("|X| = {size} above --max-x {}", cfg.caps.max_x_size));
        }
        Ok(subsets(m, size).into_iter().map(|x| Instance::Edges { x, k }).collect())
    };
    match cfg.theorem {
        Theorem::T1 => edges_of(d - 1, 0),
        Theorem::T2 => {
            let mut out = Vec::new();
            for &k in ks {
                out.extend(edges_of(d - 1 + k, k)?);
            }
            Ok(out)
        }
        Theorem::T3 => edges_of(d, 1),
        Theorem::Lm => {
            let mut out = Vec::new();
            for size in 0..=cfg.caps.max_x_size.min(m) {
                out.extend(edges_of(size, 0)?);
            }
            Ok(out)
        }
        Theorem::T5 => {
            let paths = three_paths(g);
            if paths.len() > cfg.caps.max_paths {
                return Err(format!("{} paths above --max-paths {}", paths.len(), cfg.caps.max_paths));
            }
            let mut out = Vec::new();
            for i in 0..paths.len() {
                for j in i + 1..paths.len() {
                    out.push(Instance::PathPair {
                        p: paths[i].clone(),
                        q: paths[j].clone(),
                    });
                }
            }
            Ok(out)
        }
        Theorem::Cor7 => Ok(g.vertices().map(|v| Instance::Vertex { v }).collect()),
        Theorem::Counterexample => Ok(vec![
            Instance::ConstructionPath { index: 1 },
            Instance::ConstructionPath { index: 2 },
        ]),
    }
}

fn run_graph(cfg: &CampaignConfig, entry: &CatalogueEntry) -> GraphRecord {
    let clock = Instant::now();
    let g = &entry.graph;
    let mut record = GraphRecord {
        file: entry.path.display().to_string(),
        line: entry.line,
        graph: io::emit(g),
        n: g.vertex_count(),
        hypotheses_met: false,
        cyclic: None,
        instances: 0,
        violations: Vec::new(),
        skipped: None,
        stats: BTreeMap::new(),
        wall_ms: 0.0,
    };
    if g.vertex_count() > cfg.caps.max_n {
        record.skipped = Some(format!("n = {} above --max-n {}", g.vertex_count(), cfg.caps.max_n));
        return record;
    }
    let (ks, cyclic) = hypotheses(cfg, g);
    record.cyclic = cyclic;
    record.hypotheses_met = !ks.is_empty();
    if ks.is_empty() {
        record.wall_ms = clock.elapsed().as_secs_f64() * 1e3;
        return record;
    }
    let list = match instances(cfg, g, &ks) {
        Ok(list) => list,
        Err(reason) => {
            record.skipped = Some(reason);
            return record;
        }
    };
    let mut ctx = Context::new(g, cfg.degree);
    match cfg.theorem {
        Theorem::T5 => {
            for p in three_paths(g) {
                let mut key = p.edges().to_vec();
                key.sort_unstable();
                let ext = extends_to_two_factor(g, &p).map(|t| t.is_some()).unwrap_or(false);
                ctx.extends.insert(key, ext);
            }
        }
        Theorem::Cor7 => ctx.seven = SevenCircuitChecker::new(g).ok(),
        _ => {}
    }
    let outcomes: Vec<(usize, Result<Check, Error>)> = list
        .par_iter()
        .enumerate()
        .map(|(i, inst)| (i, check_instance(cfg.theorem, &ctx, inst)))
        .collect();
    record.instances = list.len() as u64;
    for (i, outcome) in outcomes {
        match outcome {
            Ok(check) => {
                for t in check.tags {
                    *record.stats.entry(t.to_string()).or_default() += 1;
                }
                if let Some(detail) = check.violation {
                    record.violations.push(Violation {
                        instance: list[i].clone(),
                        detail,
                    });
                }
            }
            Err(e) => record.violations.push(Violation {
                instance: list[i].clone(),
                detail: format!("error: {e}"),
            }),
        }
    }
    record.wall_ms = clock.elapsed().as_secs_f64() * 1e3;
    record
}

/// Re-runs the check behind a violation; true when it still disagrees.
pub fn replay_violation(cfg: &CampaignConfig, g: &Multigraph, violation: &Violation) -> Result<bool, Error> {
    let mut ctx = Context::new(g, cfg.degree);
    if cfg.theorem == Theorem::Cor7 {
        ctx.seven = Some(SevenCircuitChecker::new(g)?);
    }
    match check_instance(cfg.theorem, &ctx, &violation.instance) {
        Ok(c) => Ok(c.violation.is_some()),
        Err(_) => Ok(true),
    }
}

pub fn run_campaign(cfg: &CampaignConfig) -> Result<CampaignReport, CliError> {
    cfg.validate()?;
    let clock = Instant::now();
    let entries: Vec<CatalogueEntry> = if cfg.theorem == Theorem::Counterexample {
        let built = build_counterexample(&ConstructionParams::canonical()).map_err(CliError::Core)?;
        vec![CatalogueEntry {
            path: PathBuf::from("<construction>"),
            line: 1,
            graph: built.graph,
        }]
    } else {
        let mut all = Vec::new();
        for f in &cfg.input_files {
            all.extend(read_catalogue_file(f)?);
        }
        all
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| CliError::Config(e.to_string()))?;
    let mut cfg = cfg.clone();
    if cfg.theorem == Theorem::Counterexample {
        cfg.caps.max_n = cfg.caps.max_n.max(44);
    }
    let records: Vec<GraphRecord> = pool.install(|| entries.par_iter().map(|e| run_graph(&cfg, e)).collect());
    let mut summary = CampaignSummary {
        graphs: records.len(),
        ..Default::default()
    };
    for r in &records {
        summary.hypotheses_met += r.hypotheses_met as usize;
        summary.skipped += r.skipped.is_some() as usize;
        summary.instances += r.instances;
        summary.violations += r.violations.len();
        for (k, v) in &r.stats {
            *summary.stats.entry(k.clone()).or_default() += v;
        }
    }
    summary.wall_ms = clock.elapsed().as_secs_f64() * 1e3;
    Ok(CampaignReport {
        theorem: cfg.theorem,
        records,
        summary,
    })
}
