//! Named identity checks and the catalog-wide sweep behind `verify all`.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::thread;

use crate::coxeter::{coxeter_number, ebeling_quotient};
use crate::diagram::{build, extended_catalog, finite_catalog, kostant_numbers, DiagramId, Family};
use crate::error::{Error, Result};
use crate::kostant::{closed_form_component0, verify_ebeling, verify_kostant_relation};
use crate::mckay::{verify_observation, verify_z_recurrence};
use crate::molien::{crosscheck, BpgId};
use crate::orbit::verify_kostant_form;
use crate::report::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckName {
    Ebeling,
    KostantClosedForm,
    KostantRelation,
    KostantForm,
    ZRecurrence,
    McKayObservation,
    Molien,
    QuotientCoincidence,
    All,
}

impl CheckName {
    pub const ALL: [CheckName; 9] = [
        CheckName::Ebeling,
        CheckName::KostantClosedForm,
        CheckName::KostantRelation,
        CheckName::KostantForm,
        CheckName::ZRecurrence,
        CheckName::McKayObservation,
        CheckName::Molien,
        CheckName::QuotientCoincidence,
        CheckName::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckName::Ebeling => "ebeling",
            CheckName::KostantClosedForm => "kostant-closed-form",
            CheckName::KostantRelation => "kostant-relation",
            CheckName::KostantForm => "kostant-form",
            CheckName::ZRecurrence => "z-recurrence",
            CheckName::McKayObservation => "mckay-observation",
            CheckName::Molien => "molien",
            CheckName::QuotientCoincidence => "quotient-coincidence",
            CheckName::All => "all",
        }
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CheckName::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check {s:?}")))
    }
}

/// Runs one diagram check. Extended-diagram checks accept a finite id and
/// use its extension; finite checks accept an extended id and use its
/// finite form.
pub fn run_diagram_check(check: CheckName, id: DiagramId, order: usize) -> Result<Report> {
    match check {
        CheckName::Ebeling => verify_ebeling(&build(id.to_extended())?),
        CheckName::KostantRelation => verify_kostant_relation(&build(id.to_extended())?, order),
        CheckName::KostantClosedForm => closed_form_report(id.to_finite()?),
        CheckName::KostantForm => verify_kostant_form(&build(id.to_finite()?)?),
        CheckName::ZRecurrence => verify_z_recurrence(&build(id.to_finite()?)?),
        CheckName::McKayObservation => verify_observation(&build(id.to_finite()?)?),
        other => Err(Error::Domain(format!("{other} does not take a diagram"))),
    }
}

fn closed_form_report(id: DiagramId) -> Result<Report> {
    let k = kostant_numbers(id)?;
    let mut report = Report::new("kostant-closed-form", id.to_string());
    report.check("a b = 2 |G|", k.a * k.b == 2 * k.group_order, format!("a = {}, b = {}, |G| = {}", k.a, k.b, k.group_order));
    report.check("b = h + 2 - a", k.b + k.a == k.h + 2, format!("h = {}", k.h));
    match closed_form_component0(id) {
        Ok(f) => report.check("P_0 = (1 + t^h) / ((1 - t^a)(1 - t^b))", true, f.render('t')),
        Err(Error::IdentityViolation(msg)) => report.check("P_0 = (1 + t^h) / ((1 - t^a)(1 - t^b))", false, msg),
        Err(e) => return Err(e),
    }
    Ok(report)
}

/// Pairs of finite ids whose Ebeling quotients coincide, with the
/// conjugacy index for family A.
pub fn coincidence_pairs() -> Vec<((DiagramId, Option<usize>), DiagramId)> {
    let f = |family, rank| DiagramId { family, rank, extended: false };
    let mut pairs = vec![
        ((f(Family::D, 4), None), f(Family::G2, 2)),
        ((f(Family::E6, 6), None), f(Family::F4, 4)),
    ];
    pairs.extend((3..=8).map(|n| ((f(Family::D, n + 1), None), f(Family::B, n))));
    pairs.extend((2..=5).map(|n| ((f(Family::A, 2 * n - 1), Some(n)), f(Family::C, n))));
    pairs
}

pub fn verify_quotient_coincidences() -> Result<Report> {
    let mut report = Report::new("quotient-coincidence", "catalog");
    for ((a, k), b) in coincidence_pairs() {
        let label = match k {
            Some(k) => format!("p({a}, k = {k}) = p({b})"),
            None => format!("p({a}) = p({b})"),
        };
        report.check_eq(label, &ebeling_quotient(a, k)?, &ebeling_quotient(b, None)?);
    }
    Ok(report)
}

/// Groups swept by the Molien check.
pub fn bpg_catalog() -> Vec<BpgId> {
    let mut ids: Vec<BpgId> = (2..=8).map(BpgId::Cyclic).collect();
    ids.extend((2..=6).map(BpgId::BinaryDihedral));
    ids.extend([BpgId::Tetrahedral, BpgId::Octahedral, BpgId::Icosahedral]);
    ids
}

fn bicolored(id: DiagramId) -> bool {
    !(id.family == Family::A && id.rank.is_multiple_of(2))
}

enum Task {
    Extended(DiagramId),
    Finite(DiagramId),
    Molien(BpgId),
    Coincidences,
}

fn run_task(task: &Task, order: usize) -> Result<Vec<Report>> {
    match *task {
        Task::Extended(id) => {
            let d = build(id)?;
            let mut out = Vec::new();
            if bicolored(id) {
                out.push(verify_ebeling(&d)?);
            }
            out.push(verify_kostant_relation(&d, order)?);
            Ok(out)
        }
        Task::Finite(id) => {
            let d = build(id)?;
            let mut out = vec![closed_form_report(id)?];
            if coxeter_number(&d)? % 2 == 0 {
                out.push(verify_kostant_form(&d)?);
                out.push(verify_z_recurrence(&d)?);
                out.push(verify_observation(&d)?);
            }
            Ok(out)
        }
        Task::Molien(id) => Ok(vec![molien_report(id, order)?]),
        Task::Coincidences => Ok(vec![verify_quotient_coincidences()?]),
    }
}

/// Applies `f` to every item on a small thread pool, keeping input order.
fn par_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let workers = thread::available_parallelism().map_or(1, |n| n.get()).min(items.len()).max(1);
    let next = AtomicUsize::new(0);
    let mut done: Vec<(usize, R)> = thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                s.spawn(|| {
                    let mut local = Vec::new();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        let Some(item) = items.get(i) else { break };
                        local.push((i, f(item)));
                    }
                    local
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    });
    done.sort_by_key(|(i, _)| *i);
    done.into_iter().map(|(_, r)| r).collect()
}

/// Every identity over the whole catalog. Work runs in parallel; reports
/// come back in catalog order.
pub fn verify_all(order: usize) -> Result<Vec<Report>> {
    let mut tasks: Vec<Task> = extended_catalog().into_iter().map(Task::Extended).collect();
    tasks.extend(finite_catalog().into_iter().filter(|i| i.is_ade()).map(Task::Finite));
    tasks.extend(bpg_catalog().into_iter().map(Task::Molien));
    tasks.push(Task::Coincidences);
    let mut reports = Vec::new();
    for r in par_map(&tasks, |t| run_task(t, order)) {
        reports.extend(r?);
    }
    Ok(reports)
}

/// Molien crosscheck as a report; a mismatch becomes a failed check.
pub fn molien_report(id: BpgId, order: usize) -> Result<Report> {
    match crosscheck(id, order) {
        Ok(r) => Ok(r),
        Err(Error::IdentityViolation(msg)) => {
            let mut r = Report::new("molien", id.to_string());
            r.check("Molien series = component 0", false, msg);
            Ok(r)
        }
        Err(e) => Err(e),
    }
}
