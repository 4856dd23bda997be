//! Labelled classification and the cross-check of the published tables
//! against the census.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::tables::{chains_for, closed_weight_enumerator, listing_row, theorem_claim, Chain};
use super::{census, CensusFilter, EquivClass, MultVector, PointGroup};
use crate::family::{
    enumerate_optimal_b, family, label, split_length, table1_members, table1_tuples, ATuple,
    FamilyEntry,
};
use crate::Error;

/// Smallest `n_max` accepted by [`verify_tables`].
pub const MIN_N_MAX: usize = 7;

/// Attaches family names to classes of optimal codes of length `n`.
///
/// A class gets the name of the family member in its orbit that comes first
/// in its equivalence chain, so the tabulated representative wins whenever
/// it is defined at this length. Classes with `m0` zero columns are matched
/// against the families of length `n - m0` and named with a trailing `*`.
pub fn label_classes(n: usize, classes: &mut [EquivClass]) {
    let group = PointGroup::new();
    for class in classes.iter_mut() {
        let m0 = class.canon.m0;
        let inner_n = n - m0 as usize;
        if inner_n < 2 {
            continue;
        }
        let (_, residue) = split_length(inner_n);
        let chain_rank = |index: u8| {
            chains_for(residue)
                .find_map(|c| c.members.iter().position(|&i| i == index))
                .unwrap_or(usize::MAX)
        };
        let mut best: Option<(&FamilyEntry, ATuple)> = None;
        for (f, a) in table1_members(inner_n) {
            if MultVector::from_atuple(&a).canonical(&group).mp != class.canon.mp {
                continue;
            }
            if best.is_none_or(|(b, _)| chain_rank(f.index) < chain_rank(b.index)) {
                best = Some((f, a));
            }
        }
        if let Some((f, a)) = best {
            let mut label = f.label();
            if m0 > 0 {
                label.push('*');
            }
            class.label = Some(label);
            class.representative = Some(ATuple { a0: m0, a: a.a });
        }
    }
}

/// Optimal classification driven by an arbitrary census implementation.
pub fn classify_with<F>(
    n: usize,
    include_zero_columns: bool,
    run: &mut F,
) -> Result<Vec<EquivClass>, Error>
where
    F: FnMut(usize, CensusFilter, bool) -> Result<Vec<EquivClass>, Error>,
{
    let mut classes = run(n, CensusFilter::OptimalLcd, include_zero_columns)?;
    label_classes(n, &mut classes);
    Ok(classes)
}

/// Classes of optimal Hermitian LCD `[n, 2]` codes with family names.
pub fn classify_optimal(n: usize, include_zero_columns: bool) -> Result<Vec<EquivClass>, Error> {
    classify_with(n, include_zero_columns, &mut census)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    /// Enumeration equals the family table.
    T1,
    /// Chains collapse to single classes matching the class listing.
    T2,
    /// Representative weight enumerators match their closed forms.
    T3,
    /// Class counts match the listing.
    T4,
    /// Counts claimed by the closing theorem.
    Thm,
}

impl CheckId {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::T1 => "T1",
            CheckId::T2 => "T2",
            CheckId::T3 => "T3",
            CheckId::T4 => "T4",
            CheckId::Thm => "THM",
        }
    }

    pub fn parse(s: &str) -> Option<CheckId> {
        Some(match s {
            "T1" => CheckId::T1,
            "T2" => CheckId::T2,
            "T3" => CheckId::T3,
            "T4" => CheckId::T4,
            "THM" => CheckId::Thm,
            _ => return None,
        })
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub id: CheckId,
    pub n: usize,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub n_max: usize,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// Checks every table for `2 ≤ n ≤ n_max` using the sequential census.
pub fn verify_tables(n_max: usize) -> Result<VerificationReport, Error> {
    verify_tables_with(n_max, &mut census)
}

pub fn verify_tables_with<F>(n_max: usize, run: &mut F) -> Result<VerificationReport, Error>
where
    F: FnMut(usize, CensusFilter, bool) -> Result<Vec<EquivClass>, Error>,
{
    if n_max < MIN_N_MAX {
        return Err(Error::RangeTooSmall { n_max, min: MIN_N_MAX });
    }
    let group = PointGroup::new();
    let mut checks = Vec::new();
    for n in 2..=n_max {
        let plain = classify_with(n, false, run)?;
        let with_zero = classify_with(n, true, run)?;
        checks.push(check_enumeration(n)?);
        checks.push(check_chains(n, &plain, &group));
        checks.push(check_weight_enumerators(n));
        checks.push(check_listing(n, &plain, &with_zero));
        if let Some(c) = check_theorem(n, &plain, &with_zero) {
            checks.push(c);
        }
    }
    Ok(VerificationReport { n_max, checks })
}

fn check_enumeration(n: usize) -> Result<Check, Error> {
    let derived = enumerate_optimal_b(n)?;
    let table = table1_tuples(n);
    let pass = derived == table;
    let detail = if pass {
        format!("{} tuples agree", derived.len())
    } else {
        let only_derived: Vec<_> =
            derived.iter().filter(|a| !table.contains(a)).map(|a| a.a).collect();
        let only_table: Vec<_> =
            table.iter().filter(|a| !derived.contains(a)).map(|a| a.a).collect();
        format!("enumeration only: {only_derived:?}; table only: {only_table:?}")
    };
    Ok(Check { id: CheckId::T1, n, pass, detail })
}

fn chain_canon(chain: &Chain, m: u32, group: &PointGroup) -> Option<BTreeSet<MultVector>> {
    let active = chain.active(m);
    if active.is_empty() {
        return None;
    }
    Some(active.iter().map(|(_, a)| MultVector::from_atuple(a).canonical(group)).collect())
}

fn check_chains(n: usize, plain: &[EquivClass], group: &PointGroup) -> Check {
    let (m, residue) = split_length(n);
    let mut problems = Vec::new();
    let mut forms = Vec::new();
    for chain in chains_for(residue) {
        let Some(canon) = chain_canon(chain, m, group) else { continue };
        if canon.len() != 1 {
            problems.push(format!(
                "chain of {} splits into {} classes",
                chain.representative_entry().label(),
                canon.len()
            ));
        }
        forms.extend(canon);
    }
    let distinct: BTreeSet<MultVector> = forms.iter().copied().collect();
    if distinct.len() != forms.len() {
        problems.push(String::from("two chains share a canonical form"));
    }
    let census_forms: BTreeSet<MultVector> = plain.iter().map(|c| c.canon).collect();
    if distinct != census_forms {
        problems.push(format!(
            "chains give {} classes, census gives {}",
            distinct.len(),
            census_forms.len()
        ));
    }
    if let Some(row) = listing_row(n) {
        if row.codes.len() != distinct.len() {
            problems.push(format!(
                "listing names {} classes, chains give {}",
                row.codes.len(),
                distinct.len()
            ));
        }
    }
    let pass = problems.is_empty();
    let detail = if pass {
        format!("{} chain(s), one canonical form each, matching the census", distinct.len())
    } else {
        problems.join("; ")
    };
    Check { id: CheckId::T2, n, pass, detail }
}

fn check_weight_enumerators(n: usize) -> Check {
    let (m, residue) = split_length(n);
    let mut problems = Vec::new();
    let mut seen = Vec::new();
    for chain in chains_for(residue) {
        let active = chain.active(m);
        let Some(closed) = closed_weight_enumerator(residue, chain.representative) else {
            continue;
        };
        let rep = chain.representative_entry();
        // the tabulated member if defined, otherwise any equivalent member
        let Some((f, a)) = active.iter().find(|(f, _)| f.index == rep.index).or(active.first())
        else {
            continue;
        };
        let actual = a.code().weight_enumerator();
        match closed.at(m) {
            Some(expected) if expected == actual => {}
            Some(expected) => {
                // Σ w·A_w = 12(n - m0) for every [n, 2] code
                let moment: u64 = expected.terms().map(|(w, a)| w as u64 * a).sum();
                problems.push(format!(
                    "{} via {}: tabulated {expected}, computed {actual}; tabulated total weight {moment}, any [{n}, 2] code without zero columns has {}",
                    rep.label(),
                    f.label(),
                    12 * n
                ))
            }
            None => problems.push(format!("{}: closed form undefined at m = {m}", rep.label())),
        }
        seen.push((rep.label(), actual));
    }
    for i in 0..seen.len() {
        for j in i + 1..seen.len() {
            if seen[i].1 == seen[j].1 {
                problems.push(format!("{} and {} share {}", seen[i].0, seen[j].0, seen[i].1));
            }
        }
    }
    let pass = problems.is_empty();
    let detail = if pass {
        let list: Vec<String> = seen.iter().map(|(l, we)| format!("{l}: {we}")).collect();
        list.join(", ")
    } else {
        problems.join("; ")
    };
    Check { id: CheckId::T3, n, pass, detail }
}

fn zero_column_count(classes: &[EquivClass]) -> usize {
    classes.iter().filter(|c| c.zero_col).count()
}

fn check_listing(n: usize, plain: &[EquivClass], with_zero: &[EquivClass]) -> Check {
    let (m, residue) = split_length(n);
    let Some(row) = listing_row(n) else {
        return Check {
            id: CheckId::T4,
            n,
            pass: false,
            detail: String::from("no listing row for this length"),
        };
    };
    let listed = row.codes.len();
    let extra = usize::from(residue == 4);
    let pass = plain.len() == listed
        && with_zero.len() == listed + extra
        && zero_column_count(with_zero) == extra;
    let mut detail = format!(
        "listed {listed}; census {} without zero columns, {} with ({} zero-column)",
        plain.len(),
        with_zero.len(),
        zero_column_count(with_zero)
    );
    for &(r, i) in row.codes {
        if r != residue {
            detail.push_str(&format!(
                "; listing prints {} in the n = 5m+{residue} row, read as {}",
                label(r, i),
                label(residue, i)
            ));
        }
        if let Some(f) = family(residue, i) {
            if f.m_min > m && r == residue {
                detail.push_str(&format!(
                    "; {} is undefined at m = {m}, class named by an equivalent member",
                    f.label()
                ));
            }
        }
    }
    Check { id: CheckId::T4, n, pass, detail }
}

fn check_theorem(n: usize, plain: &[EquivClass], with_zero: &[EquivClass]) -> Option<Check> {
    let claim = theorem_claim(n)?;
    let classes = if claim.include_zero_columns { with_zero } else { plain };
    let zero = zero_column_count(classes);
    let pass =
        classes.len() == claim.classes && claim.zero_column_classes.is_none_or(|z| z == zero);
    let detail = format!(
        "item ({}): claimed {}, found {} ({} zero-column)",
        claim.item,
        claim.classes,
        classes.len(),
        zero
    );
    Some(Check { id: CheckId::Thm, n, pass, detail })
}
