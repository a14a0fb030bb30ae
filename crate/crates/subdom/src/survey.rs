//! Batch driver over graph streams: per-graph invariant reports, law
//! assertions, tightness filtering, and disjoint-union checks.
//!
//! Surveys are deterministic: the same input and options produce
//! byte-identical report sequences. A law violation is never an abort;
//! it is recorded in the summary with the offending graph6 record,
//! because on valid input the expected violation count is zero.

use std::collections::BTreeMap;
use std::io::{self, BufRead, Write};

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::invariants::{bound_chain, sub_total_domination, Rational};
use crate::solver::{gamma_t_exact, SolverConfig, SolverError, MAX_CAP};
use crate::stream::{GraphStream, RecordError, StreamError};

#[derive(Debug, Error)]
pub enum SurveyError {
    #[error(transparent)]
    Stream(#[from] StreamError),
    #[error("solver cap {cap} exceeds the supported maximum {MAX_CAP}")]
    CapTooLarge { cap: usize },
    #[error("record {record}: {source}")]
    Record { record: usize, source: SolverError },
    #[error("record {record}: node budget exhausted; result undecidable")]
    BudgetExhausted { record: usize },
    #[error(transparent)]
    Io(#[from] io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolverStatus {
    Solved,
    BudgetExhausted,
    SkippedIsolates,
    SkippedTooLarge,
}

/// Everything the survey knows about one record.
///
/// `sub_t` and the ceiling bound are absent exactly when the graph has
/// an isolated vertex (or fewer than two vertices), where the theory
/// does not apply. `gamma_t` and `tight` are present exactly when the
/// solver finished.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub record_index: usize,
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub sub_t: Option<usize>,
    pub ceil_n_over_delta: Option<usize>,
    pub gamma_t: Option<usize>,
    pub tight: Option<bool>,
    pub solver_status: SolverStatus,
}

impl InvariantReport {
    pub fn csv_header() -> &'static str {
        "record_index,n,m,max_degree,min_degree,sub_t,ceil_n_over_delta,gamma_t,tight,solver_status"
    }

    pub fn to_csv_row(&self) -> String {
        fn opt<T: ToString>(v: &Option<T>) -> String {
            v.as_ref().map(T::to_string).unwrap_or_default()
        }
        let status = match self.solver_status {
            SolverStatus::Solved => "solved",
            SolverStatus::BudgetExhausted => "budget_exhausted",
            SolverStatus::SkippedIsolates => "skipped_isolates",
            SolverStatus::SkippedTooLarge => "skipped_too_large",
        };
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.record_index,
            self.n,
            self.m,
            self.max_degree,
            self.min_degree,
            opt(&self.sub_t),
            opt(&self.ceil_n_over_delta),
            opt(&self.gamma_t),
            opt(&self.tight),
            status,
        )
    }
}

/// The laws asserted per solved graph or pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    /// gamma_t >= sub_t.
    GammaAtLeastSub,
    /// sub_t >= n / max_degree, compared as exact rationals.
    SubAtLeastOrderOverMaxDegree,
    /// gamma_t = 2 forces sub_t = 2.
    GammaTwoForcesSubTwo,
    /// A vertex adjacent to all others forces gamma_t = sub_t = 2.
    DominatingVertexForcesTwo,
    /// gamma_t(G ∪ H) = gamma_t(G) + gamma_t(H).
    UnionAdditivity,
    /// gamma_t(G ∪ H) >= sub_t(G) + sub_t(H).
    UnionGammaAtLeastSubSum,
    /// sub_t(G) + sub_t(H) >= sub_t(G ∪ H).
    UnionSubadditivity,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub record_index: usize,
    pub rule: Rule,
    pub detail: String,
    /// graph6 encoding of the offending graph (the union, for pair rules).
    pub graph6: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SurveySummary {
    pub total: u64,
    pub solved: u64,
    pub tight_count: u64,
    /// Count of solved graphs per gap `gamma_t - sub_t`.
    pub gap_histogram: BTreeMap<usize, u64>,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone, Copy)]
pub struct SurveyOptions {
    /// Largest order handed to the exact solver; `0` disables solving,
    /// which is how invariant-only reports are produced.
    pub cap: usize,
    pub budget: Option<u64>,
    /// Assert the per-graph laws on every solved record.
    pub assertions: bool,
    /// Skip undecodable records instead of aborting the survey.
    pub skip_malformed: bool,
}

impl Default for SurveyOptions {
    fn default() -> Self {
        SurveyOptions {
            cap: crate::solver::DEFAULT_CAP,
            budget: None,
            assertions: true,
            skip_malformed: false,
        }
    }
}

impl SurveyOptions {
    fn validate(&self) -> Result<(), SurveyError> {
        if self.cap > MAX_CAP {
            return Err(SurveyError::CapTooLarge { cap: self.cap });
        }
        Ok(())
    }

    fn solver_config(&self) -> SolverConfig {
        SolverConfig { cap: self.cap, budget: self.budget }
    }
}

fn graph6_of(g: &Graph) -> String {
    crate::graph6::write_graph6_record(g).unwrap_or_else(|_| String::from("<unencodable>"))
}

/// Analyzes one decoded graph: the report, plus any law violations when
/// assertions are on and the graph was solved.
fn analyze(
    record_index: usize,
    g: &Graph,
    options: &SurveyOptions,
) -> (InvariantReport, Vec<Violation>) {
    let n = g.order();
    let ds = g.degree_sequence();
    let mut report = InvariantReport {
        record_index,
        n,
        m: g.size(),
        max_degree: ds.max_degree(),
        min_degree: ds.min_degree(),
        sub_t: None,
        ceil_n_over_delta: None,
        gamma_t: None,
        tight: None,
        solver_status: SolverStatus::SkippedIsolates,
    };
    if n < 2 || !ds.is_isolate_free() {
        return (report, Vec::new());
    }
    let sub = sub_total_domination(&ds).expect("isolate-free with n >= 2");
    report.sub_t = Some(sub);
    report.ceil_n_over_delta = Some(n.div_ceil(ds.max_degree()));

    if n > options.cap {
        report.solver_status = SolverStatus::SkippedTooLarge;
        return (report, Vec::new());
    }
    let solution = gamma_t_exact(g, &options.solver_config())
        .expect("preconditions checked before solving");
    if !solution.optimal {
        report.solver_status = SolverStatus::BudgetExhausted;
        return (report, Vec::new());
    }
    let gamma = solution.gamma_t;
    report.gamma_t = Some(gamma);
    report.tight = Some(gamma == sub);
    report.solver_status = SolverStatus::Solved;

    let mut violations = Vec::new();
    if options.assertions {
        let chain = bound_chain(g, Some(gamma)).expect("preconditions already hold");
        if gamma < sub {
            violations.push(Violation {
                record_index,
                rule: Rule::GammaAtLeastSub,
                detail: format!("gamma_t = {gamma} below sub_t = {sub}"),
                graph6: graph6_of(g),
            });
        }
        if Rational::integer(sub as u64) < chain.floor_bound {
            violations.push(Violation {
                record_index,
                rule: Rule::SubAtLeastOrderOverMaxDegree,
                detail: format!("sub_t = {sub} below n/max_degree = {}", chain.floor_bound),
                graph6: graph6_of(g),
            });
        }
        if gamma == 2 && sub != 2 {
            violations.push(Violation {
                record_index,
                rule: Rule::GammaTwoForcesSubTwo,
                detail: format!("gamma_t = 2 but sub_t = {sub}"),
                graph6: graph6_of(g),
            });
        }
        if ds.max_degree() == n - 1 && (gamma != 2 || sub != 2) {
            violations.push(Violation {
                record_index,
                rule: Rule::DominatingVertexForcesTwo,
                detail: format!(
                    "max_degree = n - 1 = {} but gamma_t = {gamma}, sub_t = {sub}",
                    n - 1
                ),
                graph6: graph6_of(g),
            });
        }
    }
    (report, violations)
}

fn absorb(summary: &mut SurveySummary, report: &InvariantReport, violations: Vec<Violation>) {
    summary.total += 1;
    if report.solver_status == SolverStatus::Solved {
        summary.solved += 1;
        let (gamma, sub) = (
            report.gamma_t.expect("solved reports carry gamma_t"),
            report.sub_t.expect("solved reports carry sub_t"),
        );
        *summary.gap_histogram.entry(gamma - sub).or_insert(0) += 1;
        if report.tight == Some(true) {
            summary.tight_count += 1;
        }
    }
    summary.violations.extend(violations);
}

/// Surveys every record of the stream, handing each report to the sink
/// in input order. Decode failures abort with the record index unless
/// `skip_malformed` is set; I/O failures always abort.
pub fn survey_stream<R: BufRead>(
    stream: GraphStream<R>,
    options: &SurveyOptions,
    mut on_report: impl FnMut(&InvariantReport),
) -> Result<SurveySummary, SurveyError> {
    options.validate()?;
    let mut summary = SurveySummary::default();
    let mut emitted = 0usize;
    for item in stream {
        match item {
            Ok(record) => {
                emitted += 1;
                let (report, violations) = analyze(emitted, &record.graph, options);
                on_report(&report);
                absorb(&mut summary, &report, violations);
            }
            Err(e) => {
                let record_level = !matches!(e.source, RecordError::Io(_));
                if !(options.skip_malformed && record_level) {
                    return Err(e.into());
                }
            }
        }
    }
    Ok(summary)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FilterStats {
    /// Records examined.
    pub total: usize,
    /// Records written out.
    pub emitted: usize,
}

/// Re-emits exactly the records whose graph satisfies
/// `gamma_t = sub_t`, byte-for-byte as they appeared in the input.
///
/// Records where the number is undefined (isolated vertices) are never
/// tight and are not emitted. Records the solver cannot decide (over
/// the cap, or out of budget) abort with an error rather than guess.
pub fn tightness_filter<R: BufRead, W: Write>(
    stream: GraphStream<R>,
    options: &SurveyOptions,
    out: &mut W,
) -> Result<FilterStats, SurveyError> {
    options.validate()?;
    let mut stats = FilterStats::default();
    for item in stream {
        let record = match item {
            Ok(r) => r,
            Err(e) => {
                let record_level = !matches!(e.source, RecordError::Io(_));
                if options.skip_malformed && record_level {
                    continue;
                }
                return Err(e.into());
            }
        };
        stats.total += 1;
        let g = &record.graph;
        if g.order() < 2 || !g.is_isolate_free() {
            continue;
        }
        if g.order() > options.cap {
            return Err(SurveyError::Record {
                record: record.index,
                source: SolverError::ExceedsCap { order: g.order(), cap: options.cap },
            });
        }
        let solution = gamma_t_exact(g, &options.solver_config())
            .map_err(|source| SurveyError::Record { record: record.index, source })?;
        if !solution.optimal {
            return Err(SurveyError::BudgetExhausted { record: record.index });
        }
        let sub = sub_total_domination(&g.degree_sequence()).expect("isolate-free with n >= 2");
        if solution.gamma_t == sub {
            out.write_all(&record.raw)?;
            stats.emitted += 1;
        }
    }
    Ok(stats)
}

/// Zips two streams and, for each pair, asserts union additivity of
/// gamma_t and the chain
/// `gamma_t(G ∪ H) >= sub_t(G) + sub_t(H) >= sub_t(G ∪ H)`.
///
/// The zip stops at the shorter stream. Pair indices are 1-based. The
/// summary counts pairs; its gap histogram is over the union graphs.
pub fn pair_union_check<A: BufRead, B: BufRead>(
    stream_a: GraphStream<A>,
    stream_b: GraphStream<B>,
    options: &SurveyOptions,
) -> Result<SurveySummary, SurveyError> {
    options.validate()?;
    let mut summary = SurveySummary::default();
    let mut pairs = stream_a.zip(stream_b);
    let mut index = 0usize;
    loop {
        let (ra, rb) = match pairs.next() {
            None => break,
            Some((ra, rb)) => (ra?, rb?),
        };
        index += 1;
        summary.total += 1;

        let solve = |g: &Graph| -> Result<usize, SurveyError> {
            let s = gamma_t_exact(g, &options.solver_config())
                .map_err(|source| SurveyError::Record { record: index, source })?;
            if !s.optimal {
                return Err(SurveyError::BudgetExhausted { record: index });
            }
            Ok(s.gamma_t)
        };
        let sub = |g: &Graph| -> Result<usize, SurveyError> {
            sub_total_domination(&g.degree_sequence()).map_err(|_| SurveyError::Record {
                record: index,
                source: SolverError::IsolatePresent,
            })
        };

        let (g, h) = (&ra.graph, &rb.graph);
        let union = g.disjoint_union(h);
        let (sub_g, sub_h) = (sub(g)?, sub(h)?);
        let sub_union = sub(&union)?;
        let (gamma_g, gamma_h) = (solve(g)?, solve(h)?);
        let gamma_union = solve(&union)?;
        summary.solved += 1;

        let mut violate = |rule: Rule, detail: String| {
            summary.violations.push(Violation {
                record_index: index,
                rule,
                detail,
                graph6: graph6_of(&union),
            });
        };
        if gamma_union != gamma_g + gamma_h {
            violate(
                Rule::UnionAdditivity,
                format!("gamma_t(union) = {gamma_union}, parts sum to {}", gamma_g + gamma_h),
            );
        }
        if gamma_union < sub_g + sub_h {
            violate(
                Rule::UnionGammaAtLeastSubSum,
                format!("gamma_t(union) = {gamma_union} below sub_t sum {}", sub_g + sub_h),
            );
        }
        if sub_g + sub_h < sub_union {
            violate(
                Rule::UnionSubadditivity,
                format!("sub_t sum {} below sub_t(union) = {sub_union}", sub_g + sub_h),
            );
        }

        *summary.gap_histogram.entry(gamma_union - sub_union).or_insert(0) += 1;
        if gamma_union == sub_union {
            summary.tight_count += 1;
        }
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph6::write_graph6_record;
    use crate::stream::StreamFormat;
    use crate::testutil::petersen;

    fn g6_lines(graphs: &[Graph]) -> String {
        graphs
            .iter()
            .map(|g| write_graph6_record(g).unwrap() + "\n")
            .collect()
    }

    fn stream_of(input: &str) -> GraphStream<&[u8]> {
        GraphStream::new(input.as_bytes(), StreamFormat::Graph6)
    }

    fn run(input: &str, options: &SurveyOptions) -> (SurveySummary, Vec<InvariantReport>) {
        let mut reports = Vec::new();
        let summary = survey_stream(stream_of(input), options, |r| reports.push(r.clone())).unwrap();
        (summary, reports)
    }

    /// One representative of each of the eleven graphs on four vertices.
    fn all_graphs_on_four() -> Vec<Graph> {
        let e = |edges: &[(usize, usize)]| Graph::from_edges(4, edges.iter().copied()).unwrap();
        vec![
            e(&[]),
            e(&[(0, 1)]),
            e(&[(0, 1), (2, 3)]),
            e(&[(0, 1), (1, 2)]),
            e(&[(0, 1), (1, 2), (2, 3)]),
            e(&[(0, 1), (1, 2), (2, 0)]),
            e(&[(0, 1), (0, 2), (0, 3)]),
            e(&[(0, 1), (1, 2), (2, 3), (3, 0)]),
            e(&[(0, 1), (1, 2), (2, 0), (0, 3)]),
            e(&[(0, 1), (1, 2), (2, 0), (0, 3), (1, 3)]),
            e(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        ]
    }

    #[test]
    fn surveys_the_four_vertex_catalog() {
        let input = g6_lines(&all_graphs_on_four());
        let (summary, reports) = run(&input, &SurveyOptions::default());
        assert_eq!(summary.total, 11);
        assert_eq!(reports.len(), 11);
        // Seven of the eleven are isolate-free; those all get solved.
        assert_eq!(summary.solved, 7);
        assert!(summary.violations.is_empty());
        for r in &reports {
            match r.solver_status {
                SolverStatus::Solved => {
                    let (gamma, sub, ceil) =
                        (r.gamma_t.unwrap(), r.sub_t.unwrap(), r.ceil_n_over_delta.unwrap());
                    assert!(gamma >= sub && sub >= ceil, "chain broken on record {}", r.record_index);
                }
                SolverStatus::SkippedIsolates => {
                    assert!(r.sub_t.is_none() && r.gamma_t.is_none() && r.tight.is_none());
                }
                other => panic!("unexpected status {other:?}"),
            }
        }
    }

    #[test]
    fn single_star_is_tight() {
        let input = g6_lines(&[families::star(5).unwrap()]);
        let (summary, _) = run(&input, &SurveyOptions::default());
        assert_eq!(summary.total, 1);
        assert_eq!(summary.tight_count, 1);
        assert_eq!(summary.gap_histogram, BTreeMap::from([(0, 1)]));
        assert!(summary.violations.is_empty());
    }

    #[test]
    fn empty_stream_is_a_clean_summary() {
        let (summary, reports) = run("", &SurveyOptions::default());
        assert_eq!(summary, SurveySummary::default());
        assert!(reports.is_empty());
    }

    #[test]
    fn cap_zero_gives_invariant_only_reports() {
        let input = g6_lines(&[families::cycle(6).unwrap()]);
        let options = SurveyOptions { cap: 0, ..Default::default() };
        let (summary, reports) = run(&input, &options);
        assert_eq!(summary.solved, 0);
        assert_eq!(reports[0].solver_status, SolverStatus::SkippedTooLarge);
        assert_eq!(reports[0].sub_t, Some(3));
        assert_eq!(reports[0].ceil_n_over_delta, Some(3));
        assert_eq!(reports[0].gamma_t, None);
    }

    #[test]
    fn budget_exhaustion_leaves_gamma_unset() {
        let input = g6_lines(&[families::cycle(6).unwrap()]);
        let options = SurveyOptions { budget: Some(1), ..Default::default() };
        let (summary, reports) = run(&input, &options);
        assert_eq!(reports[0].solver_status, SolverStatus::BudgetExhausted);
        assert_eq!(reports[0].gamma_t, None);
        assert_eq!(reports[0].tight, None);
        assert_eq!(summary.solved, 0);
    }

    #[test]
    fn malformed_records_abort_or_skip() {
        let star = write_graph6_record(&families::star(5).unwrap()).unwrap();
        let input = format!("{star}\nA!\n{star}\n");
        let err = survey_stream(stream_of(&input), &SurveyOptions::default(), |_| {}).unwrap_err();
        match err {
            SurveyError::Stream(e) => assert_eq!(e.record, 2),
            other => panic!("unexpected error {other}"),
        }
        let options = SurveyOptions { skip_malformed: true, ..Default::default() };
        let (summary, _) = run(&input, &options);
        assert_eq!(summary.total, 2);
    }

    #[test]
    fn report_json_schema_is_stable() {
        let (_, reports) = run(&g6_lines(&[families::star(5).unwrap()]), &SurveyOptions::default());
        let json = serde_json::to_string(&reports[0]).unwrap();
        assert_eq!(
            json,
            "{\"record_index\":1,\"n\":5,\"m\":4,\"max_degree\":4,\"min_degree\":1,\
             \"sub_t\":2,\"ceil_n_over_delta\":2,\"gamma_t\":2,\"tight\":true,\
             \"solver_status\":\"solved\"}"
        );
        assert_eq!(
            reports[0].to_csv_row(),
            "1,5,4,4,1,2,2,2,true,solved"
        );
    }

    #[test]
    fn tightness_filter_keeps_only_tight_records() {
        let star = families::star(5).unwrap();
        let c6 = families::cycle(6).unwrap();
        let input = g6_lines(&[star.clone(), c6]);
        let mut out = Vec::new();
        let stats = tightness_filter(stream_of(&input), &SurveyOptions::default(), &mut out).unwrap();
        assert_eq!((stats.total, stats.emitted), (2, 1));
        assert_eq!(out, (write_graph6_record(&star).unwrap() + "\n").into_bytes());

        let mut out2 = Vec::new();
        let pet = g6_lines(&[petersen()]);
        let stats2 = tightness_filter(stream_of(&pet), &SurveyOptions::default(), &mut out2).unwrap();
        assert_eq!(stats2.emitted, 1);
        assert_eq!(out2, pet.as_bytes());

        let mut out3 = Vec::new();
        let stats3 = tightness_filter(stream_of(""), &SurveyOptions::default(), &mut out3).unwrap();
        assert_eq!(stats3, FilterStats::default());
        assert!(out3.is_empty());
    }

    #[test]
    fn tightness_filter_preserves_input_bytes() {
        // A non-canonical but valid spelling: header glued to the record.
        let input = ">>graph6<<Ds_\n";
        let mut out = Vec::new();
        tightness_filter(stream_of(input), &SurveyOptions::default(), &mut out).unwrap();
        assert_eq!(out, input.as_bytes());
    }

    #[test]
    fn tightness_filter_refuses_to_guess() {
        let input = g6_lines(&[families::cycle(6).unwrap()]);
        let options = SurveyOptions { budget: Some(1), ..Default::default() };
        let err = tightness_filter(stream_of(&input), &options, &mut Vec::new()).unwrap_err();
        assert!(matches!(err, SurveyError::BudgetExhausted { record: 1 }));

        let big = g6_lines(&[families::cycle(33).unwrap()]);
        let err2 =
            tightness_filter(stream_of(&big), &SurveyOptions::default(), &mut Vec::new()).unwrap_err();
        assert!(matches!(
            err2,
            SurveyError::Record { record: 1, source: SolverError::ExceedsCap { order: 33, cap: 32 } }
        ));
    }

    #[test]
    fn pair_union_worked_examples() {
        let star = families::star(5).unwrap();
        let c6 = families::cycle(6).unwrap();
        let k2 = families::complete(2).unwrap();

        // Two stars: 4 >= 4 >= 4, tight union.
        let a = g6_lines(&[star.clone()]);
        let summary =
            pair_union_check(stream_of(&a), stream_of(&a), &SurveyOptions::default()).unwrap();
        assert_eq!((summary.total, summary.solved, summary.tight_count), (1, 1, 1));
        assert!(summary.violations.is_empty());

        // Two hexagons: 8 >= 6 >= 6, gap 2.
        let b = g6_lines(&[c6.clone()]);
        let summary =
            pair_union_check(stream_of(&b), stream_of(&b), &SurveyOptions::default()).unwrap();
        assert!(summary.violations.is_empty());
        assert_eq!(summary.gap_histogram, BTreeMap::from([(2, 1)]));

        // Two single edges: 4 >= 4 >= 4.
        let c = g6_lines(&[k2.clone()]);
        let summary =
            pair_union_check(stream_of(&c), stream_of(&c), &SurveyOptions::default()).unwrap();
        assert_eq!(summary.tight_count, 1);
        assert!(summary.violations.is_empty());

        // Zip stops at the shorter stream.
        let left = g6_lines(&[star.clone(), c6.clone(), k2.clone()]);
        let right = g6_lines(&[c6, star, k2]);
        let summary = pair_union_check(
            stream_of(&left),
            stream_of(&right[..right.len() - 3]),
            &SurveyOptions::default(),
        )
        .unwrap();
        assert_eq!(summary.total, 2);
        assert!(summary.violations.is_empty());
    }

    #[test]
    fn pair_union_rejects_isolates() {
        let bad = g6_lines(&[Graph::edgeless(2)]);
        let good = g6_lines(&[families::star(5).unwrap()]);
        let err = pair_union_check(stream_of(&bad), stream_of(&good), &SurveyOptions::default())
            .unwrap_err();
        assert!(matches!(
            err,
            SurveyError::Record { record: 1, source: SolverError::IsolatePresent }
        ));
    }

    #[test]
    fn surveys_are_deterministic() {
        let input = g6_lines(&[
            families::star(7).unwrap(),
            families::cycle(9).unwrap(),
            families::circulant(10, &[1, 2]).unwrap(),
        ]);
        let render = || {
            let mut buf = String::new();
            let summary = survey_stream(stream_of(&input), &SurveyOptions::default(), |r| {
                buf.push_str(&serde_json::to_string(r).unwrap());
                buf.push('\n');
            })
            .unwrap();
            buf.push_str(&serde_json::to_string(&summary).unwrap());
            buf
        };
        assert_eq!(render(), render());
    }

    #[test]
    fn rejects_oversized_cap() {
        let options = SurveyOptions { cap: 200, ..Default::default() };
        let err = survey_stream(stream_of(""), &options, |_| {}).unwrap_err();
        assert!(matches!(err, SurveyError::CapTooLarge { cap: 200 }));
    }
}
