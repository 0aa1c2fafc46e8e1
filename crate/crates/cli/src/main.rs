use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use kleene_core::audit::{self, AuditOptions, Verdict};
use kleene_core::completion::{dedekind_macneille, dedekind_macneille_plain};
use kleene_core::directoid::{assign_directoid, characterizations, AssignmentSpace, LowestIndex};
use kleene_core::io::{to_dot, PosetDocument};
use kleene_core::residuation::ResiduatedStructure;
use kleene_core::twist::{twist, Agreement};
use kleene_core::{DistributivityForm, InvolutivePoset, Poset};

#[derive(Parser)]
#[command(
    name = "kleene",
    version,
    about = "Classify, complete and audit finite posets with an antitone involution"
)]
struct Cli {
    /// Print reports as JSON
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classification report for a poset file
    Check { file: PathBuf },
    /// Dedekind-MacNeille completion and its classification
    Complete {
        file: PathBuf,
        /// Print the completion as a Graphviz graph instead of a report
        #[arg(long)]
        dot: bool,
    },
    /// Twist construction at a pivot element
    Twist {
        file: PathBuf,
        #[arg(long = "at", value_name = "NAME")]
        pivot: String,
        #[arg(long)]
        dot: bool,
    },
    /// Conjunction and implication tables and the residuation axioms
    Residuate { file: PathBuf },
    /// Directoid laws against the order-side classes
    Directoid {
        file: PathBuf,
        /// Check every assignment, up to CAP of them (default: one assignment)
        #[arg(long, value_name = "CAP")]
        all_assignments: Option<u128>,
    },
    /// Exhaustive audit of a claim over small posets
    Audit {
        /// Claim identifier, see `kleene claims`
        claim: String,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Assignments per poset and map
        #[arg(long, default_value_t = audit::DEFAULT_ASSIGNMENT_CAP)]
        cap: u128,
        /// Worker threads
        #[arg(long)]
        jobs: Option<usize>,
        /// Report every failure instead of stopping at the first
        #[arg(long)]
        collect_all: bool,
    },
    /// List audit claims
    Claims,
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

/// Report text or JSON, and whether every asserted check passed.
struct Report {
    text: String,
    json: Value,
    ok: bool,
}

fn load(path: &Path) -> Result<PosetDocument, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    PosetDocument::parse(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn load_involutive(path: &Path) -> Result<InvolutivePoset, Failure> {
    load(path)?
        .to_involutive()?
        .ok_or_else(|| Failure(format!("{}: no involution given", path.display())))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn set(items: &[String]) -> String {
    format!("{{{}}}", items.join(", "))
}

fn plain_summary(p: &Poset) -> String {
    let mut parts = vec![if p.is_distributive(DistributivityForm::LU) {
        "distributive poset"
    } else {
        "poset"
    }
    .to_string()];
    if !p.is_lattice() {
        parts.push("not a lattice".into());
    }
    parts.join("; ")
}

fn check(path: &Path) -> Result<Report, Failure> {
    let doc = load(path)?;
    let p = doc.to_poset()?;
    let Some(ip) = doc.to_involutive()? else {
        let forms: Vec<Value> = DistributivityForm::ALL
            .iter()
            .map(|&f| json!({ "form": f, "holds": p.is_distributive(f) }))
            .collect();
        let mut text = String::new();
        writeln!(text, "elements: {}", p.size()).unwrap();
        writeln!(text, "lattice: {}", yes(p.is_lattice())).unwrap();
        for &f in &DistributivityForm::ALL {
            writeln!(
                text,
                "distributive ({}): {}",
                f.name(),
                yes(p.is_distributive(f))
            )
            .unwrap();
        }
        writeln!(text, "summary: {}", plain_summary(&p)).unwrap();
        return Ok(Report {
            json: json!({ "elements": p.labels(), "lattice": p.is_lattice(), "distributive": forms, "summary": plain_summary(&p) }),
            text,
            ok: true,
        });
    };
    let c = ip.classify();
    let mut text = String::new();
    writeln!(text, "elements: {}", c.elements.len()).unwrap();
    let witness = |w: &Option<kleene_core::involution::Witness>| match w {
        None => String::new(),
        Some(w) if w.left.is_empty() => format!(" at ({})", w.elements.join(", ")),
        Some(w) => format!(
            " at ({}): {} vs {}",
            w.elements.join(", "),
            set(&w.left),
            set(&w.right)
        ),
    };
    writeln!(
        text,
        "antitone involution: {}{}",
        yes(c.involution.holds),
        witness(&c.involution.witness)
    )
    .unwrap();
    writeln!(
        text,
        "bounds: {}",
        match (&c.bottom, &c.top) {
            (Some(b), Some(t)) => format!("{b}, {t}"),
            _ => "none".into(),
        }
    )
    .unwrap();
    writeln!(
        text,
        "lattice: {}{}",
        yes(c.lattice.holds),
        witness(&c.lattice.witness)
    )
    .unwrap();
    for f in &c.distributive {
        writeln!(
            text,
            "distributive ({}): {}{}",
            f.form.name(),
            yes(f.check.holds),
            witness(&f.check.witness)
        )
        .unwrap();
    }
    for (name, check) in [
        ("pseudo-Kleene", &c.pseudo_kleene),
        ("Kleene", &c.kleene),
        ("strong", &c.strong),
        ("strict", &c.strict),
    ] {
        match check {
            Some(k) => writeln!(text, "{name}: {}{}", yes(k.holds), witness(&k.witness)).unwrap(),
            None => writeln!(text, "{name}: n/a").unwrap(),
        }
    }
    if let Some(b) = c.boolean {
        writeln!(text, "Boolean: {}", yes(b)).unwrap();
    }
    writeln!(text, "fixed points: {}", set(&c.fixed_points)).unwrap();
    writeln!(text, "summary: {}", c.summary()).unwrap();
    Ok(Report {
        json: json!({ "summary": c.summary(), "classification": c }),
        ok: c.involution.holds,
        text,
    })
}

fn complete(path: &Path, dot: bool) -> Result<Report, Failure> {
    let doc = load(path)?;
    let p = doc.to_poset()?;
    let ip = doc.to_involutive()?;
    let (c, ok) = match &ip {
        Some(ip) => {
            if !ip.is_antitone_involution() {
                return Ok(Report {
                    text: "not an antitone involution\n".into(),
                    json: json!({ "error": "not an antitone involution" }),
                    ok: false,
                });
            }
            let c = dedekind_macneille(ip)?;
            let star = c.star().expect("involutive");
            let routes = (0..c.len()).all(|i| c.star_via_upper_cone(i) == Some(star[i]));
            (c, routes)
        }
        None => (dedekind_macneille_plain(&p), true),
    };
    let embedding: Vec<(String, String)> = c
        .embedding()
        .iter()
        .enumerate()
        .map(|(x, &i)| (p.label(x).to_string(), c.order().label(i).to_string()))
        .collect();
    let ideals: Vec<Value> = c
        .ideals()
        .iter()
        .enumerate()
        .map(|(i, ideal)| json!({ "name": c.order().label(i), "members": p.subset_labels(ideal) }))
        .collect();
    let involutive = c.as_involutive();
    if dot {
        let text = to_dot(
            c.order(),
            involutive.as_ref().map(|i| i.inv()),
            "completion",
        );
        return Ok(Report {
            json: json!({ "dot": text }),
            text,
            ok,
        });
    }
    let mut text = String::new();
    writeln!(text, "elements: {}", c.len()).unwrap();
    for (i, ideal) in c.ideals().iter().enumerate() {
        writeln!(
            text,
            "  {} = {}",
            c.order().label(i),
            set(&p.subset_labels(ideal))
        )
        .unwrap();
    }
    let classification = involutive.as_ref().map(|i| i.classify());
    match &classification {
        Some(cl) => {
            writeln!(text, "fixed points: {}", set(&cl.fixed_points)).unwrap();
            writeln!(text, "summary: {}", cl.summary()).unwrap();
        }
        None => writeln!(text, "summary: {}", plain_summary(c.order())).unwrap(),
    }
    if !ok {
        writeln!(text, "star routes disagree").unwrap();
    }
    Ok(Report {
        json: json!({
            "elements": c.len(),
            "ideals": ideals,
            "embedding": embedding,
            "classification": classification,
            "summary": classification.as_ref().map(|cl| cl.summary()).unwrap_or_else(|| plain_summary(c.order())),
            "star_routes_agree": ok,
        }),
        text,
        ok,
    })
}

fn twist_report(path: &Path, pivot: &str, dot: bool) -> Result<Report, Failure> {
    let q = load(path)?.to_poset()?;
    let a = q
        .index_of(pivot)
        .ok_or_else(|| Failure(format!("unknown element `{pivot}`")))?;
    let t = twist(&q, a)?;
    let audit = t.audit();
    let ok = audit.pseudo_kleene_with_fixed_point && audit.embedding;
    let tp = t.poset();
    if dot {
        let text = to_dot(tp, Some(t.result().inv()), "twist");
        return Ok(Report {
            json: json!({ "dot": text }),
            text,
            ok,
        });
    }
    let doc = PosetDocument::from_poset(tp, Some(t.result().inv()));
    let mut text = String::new();
    writeln!(text, "elements: {}", t.len()).unwrap();
    writeln!(text, "  {}", tp.labels().join(" ")).unwrap();
    writeln!(
        text,
        "pseudo-Kleene with fixed point ({pivot},{pivot}): {}",
        yes(audit.pseudo_kleene_with_fixed_point)
    )
    .unwrap();
    writeln!(
        text,
        "x -> (x,{pivot}) is an embedding: {}",
        yes(audit.embedding)
    )
    .unwrap();
    writeln!(
        text,
        "source distributive: {}",
        yes(audit.source_distributive)
    )
    .unwrap();
    writeln!(text, "twist Kleene: {}", yes(audit.twist_kleene)).unwrap();
    let agreement = match audit.distributivity_agreement {
        Agreement::Agree => "AGREE",
        Agreement::Disagree => "DISAGREE",
    };
    writeln!(text, "distributivity equivalence: {agreement}").unwrap();
    if let Some(w) = &audit.twist_witness {
        writeln!(
            text,
            "  twist fails at x={}, y={}, z={}: {} vs {}",
            w.triple[0],
            w.triple[1],
            w.triple[2],
            set(&w.lhs),
            set(&w.rhs)
        )
        .unwrap();
    }
    if let Some(w) = &audit.source_witness {
        writeln!(
            text,
            "  source fails at ({}): {} vs {}",
            w.triple.join(", "),
            set(&w.lhs),
            set(&w.rhs)
        )
        .unwrap();
    }
    Ok(Report {
        json: json!({
            "pivot": pivot,
            "elements": tp.labels(),
            "covers": doc.covers,
            "involution": doc.involution,
            "audit": audit,
        }),
        text,
        ok,
    })
}

fn residuate(path: &Path) -> Result<Report, Failure> {
    let ip = load_involutive(path)?;
    let r = ResiduatedStructure::new(ip)?;
    let p = r.involutive().base().clone();
    let n = p.size();
    let report = r.verify_kleene_residuated();
    let tiers = r.derived_properties();
    let ok = report.all_hold() && tiers.iter().all(|t| t.holds());
    let mut text = String::new();
    let mut table = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let odot = p.subset_labels(r.odot(x, y));
            let arrow = p.subset_labels(r.arrow(x, y));
            writeln!(
                text,
                "{} ⊙ {} = {}    {} → {} = {}",
                p.label(x),
                p.label(y),
                set(&odot),
                p.label(x),
                p.label(y),
                set(&arrow)
            )
            .unwrap();
            table.push(json!({ "x": p.label(x), "y": p.label(y), "odot": odot, "arrow": arrow }));
        }
    }
    for a in [
        &report.commutativity,
        &report.unit,
        &report.associativity,
        &report.adjointness,
    ] {
        write!(
            text,
            "{}: {} ({} checked",
            a.name,
            if a.holds() { "holds" } else { "fails" },
            a.checked
        )
        .unwrap();
        match &a.first_failure {
            Some(w) => writeln!(
                text,
                ", {} failures, first at ({}))",
                a.failures,
                w.join(", ")
            )
            .unwrap(),
            None => writeln!(text, ")").unwrap(),
        }
    }
    for t in &tiers {
        let verdict = match (t.active, t.tally.holds()) {
            (false, _) => "skipped",
            (true, true) => "holds",
            (true, false) => "fails",
        };
        writeln!(text, "{} [{:?}]: {verdict}", t.property, t.tier).unwrap();
    }
    writeln!(
        text,
        "hypotheses for residuation hold: {}",
        yes(report.hypotheses_hold)
    )
    .unwrap();
    Ok(Report {
        json: json!({ "tables": table, "axioms": report, "derived": tiers }),
        text,
        ok,
    })
}

fn directoid(path: &Path, cap: Option<u128>) -> Result<Report, Failure> {
    let ip = load_involutive(path)?;
    let p = ip.base();
    let (assignments, total) = match cap {
        None => (vec![assign_directoid(p, Some(ip.inv()), &LowestIndex)?], 1),
        Some(cap) => {
            let space = AssignmentSpace::new(p, Some(ip.inv()))?;
            let limit = usize::try_from(cap).unwrap_or(usize::MAX);
            (space.iter().take(limit).collect::<Vec<_>>(), space.count())
        }
    };
    let mut rows: Vec<(kleene_core::directoid::Characterization, usize, usize)> = Vec::new();
    let mut mismatches = 0usize;
    for d in &assignments {
        for (k, c) in characterizations(d, &ip).into_iter().enumerate() {
            if !c.agrees() {
                mismatches += 1;
            }
            if k == rows.len() {
                rows.push((c.clone(), 0, 0));
            }
            let row = &mut rows[k];
            if c.law_side {
                row.1 += 1;
            } else {
                row.2 += 1;
                if row.0.law_failure.is_none() {
                    row.0.law_failure = c.law_failure.clone();
                }
            }
            if !c.agrees() && row.0.agrees() {
                row.0 = c;
            }
        }
    }
    let sampled = (assignments.len() as u128) < total;
    let mut text = String::new();
    writeln!(
        text,
        "assignments: {} of {}{}",
        assignments.len(),
        total,
        if sampled { " (sampled)" } else { "" }
    )
    .unwrap();
    let mut laws = Vec::new();
    for (c, holds, fails) in &rows {
        writeln!(
            text,
            "{} (laws {}): order {}, laws hold in {holds}, fail in {fails}",
            c.class,
            c.laws,
            yes(c.order_side)
        )
        .unwrap();
        if let Some(f) = &c.law_failure {
            writeln!(text, "  {f}").unwrap();
        }
        laws.push(json!({
            "class": c.class,
            "laws": c.laws,
            "order_side": c.order_side,
            "holds_in": holds,
            "fails_in": fails,
            "first_failure": c.law_failure,
        }));
    }
    writeln!(text, "mismatches: {mismatches}").unwrap();
    Ok(Report {
        json: json!({
            "assignments": assignments.len(),
            "total_assignments": total.to_string(),
            "sampled": sampled,
            "characterizations": laws,
            "mismatches": mismatches,
        }),
        text,
        ok: mismatches == 0,
    })
}

fn audit_report(claim: &str, options: AuditOptions) -> Result<Report, Failure> {
    let report = audit::audit(claim, options)?;
    let mut text = String::new();
    writeln!(text, "{}: {}", report.claim, report.statement).unwrap();
    writeln!(
        text,
        "posets up to {} elements: {}, instances: {}, applicable: {}",
        report.max_n, report.posets, report.instances, report.applicable
    )
    .unwrap();
    if report.sampled_posets > 0 {
        writeln!(
            text,
            "sampled: {} posets exceeded the assignment cap",
            report.sampled_posets
        )
        .unwrap();
    }
    let ok = match &report.verdict {
        Verdict::Confirmed { instances } => {
            writeln!(text, "Confirmed ({instances} instances)").unwrap();
            true
        }
        Verdict::Refuted { witness } => {
            writeln!(text, "Refuted").unwrap();
            let i = &witness.instance;
            writeln!(text, "  elements: {}", i.elements.join(" ")).unwrap();
            let covers: Vec<String> = i
                .covers
                .iter()
                .map(|&(x, y)| format!("{}<{}", i.elements[x], i.elements[y]))
                .collect();
            writeln!(text, "  covers: {}", covers.join(" ")).unwrap();
            if let Some(m) = &i.map {
                let pairs: Vec<String> = (0..m.len())
                    .map(|x| format!("{}:{}", i.elements[x], i.elements[m[x]]))
                    .collect();
                writeln!(text, "  map: {}", pairs.join(" ")).unwrap();
            }
            if let Some(a) = i.pivot {
                writeln!(text, "  pivot: {}", i.elements[a]).unwrap();
            }
            writeln!(text, "  {}", witness.detail).unwrap();
            if !report.further_witnesses.is_empty() {
                writeln!(text, "further failures: {}", report.further_witnesses.len()).unwrap();
            }
            false
        }
    };
    Ok(Report {
        json: serde_json::to_value(&report)?,
        text,
        ok,
    })
}

fn claims() -> Report {
    let registry = audit::registry();
    let text = registry
        .iter()
        .map(|c| format!("{:<34} {}\n", c.id, c.statement))
        .collect();
    let json = registry
        .iter()
        .map(|c| json!({ "id": c.id, "statement": c.statement, "space": c.space }))
        .collect();
    Report {
        text,
        json: Value::Array(json),
        ok: true,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check { file } => check(&file),
        Command::Complete { file, dot } => complete(&file, dot),
        Command::Twist { file, pivot, dot } => twist_report(&file, &pivot, dot),
        Command::Residuate { file } => residuate(&file),
        Command::Directoid {
            file,
            all_assignments,
        } => directoid(&file, all_assignments),
        Command::Audit {
            claim,
            max_n,
            cap,
            jobs,
            collect_all,
        } => audit_report(
            &claim,
            AuditOptions {
                max_n,
                assignment_cap: cap,
                jobs,
                collect_all,
            },
        ),
        Command::Claims => Ok(claims()),
    };
    match result {
        Ok(report) => {
            let out = if cli.json {
                format!(
                    "{}\n",
                    serde_json::to_string_pretty(&report.json).expect("serializable")
                )
            } else {
                report.text
            };
            let _ = std::io::stdout().lock().write_all(out.as_bytes());
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
