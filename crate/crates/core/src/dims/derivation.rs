//! Derivation trees: every node names the rule that produced its bound, so
//! the whole tree can be re-evaluated bottom-up.

use std::fmt::Write as _;

use super::{
    citations, lw_pushout_bound, nested_families_bound, sub_family_gd, union_families_bound,
    union_families_bound_via_cylinder, DimBound, DimsError, FamilyTag,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    /// Leaf: `gd_{F_0}(Z^n) = n`.
    BaseCase { n: u64 },
    /// Leaf: the family generated by a commensurability class of saturated
    /// rank-`t` subgroups of `Z^n` has gd at most `n - t`.
    QuotientModel { n: u64, t: u64 },
    /// Leaf: `gd_{F_{m-1}}` of a virtually `Z^m` group is at most `2m - 1`.
    FiberBound { m: u64 },
    /// Premises `[outer, fiber]`.
    Nested,
    /// Premises `[a, b, a ∩ b]`.
    UnionMax,
    /// Premises `[a, b, a ∩ b]`.
    UnionCylinder,
    /// Premises `[smaller family, class_1, class_2, ...]`.
    LwPushout,
}

impl Rule {
    pub fn id(&self) -> &'static str {
        match self {
            Rule::BaseCase { .. } => "base-case",
            Rule::QuotientModel { .. } => "quotient-model",
            Rule::FiberBound { .. } => "fiber-bound",
            Rule::Nested => "nested-families",
            Rule::UnionMax => "union-max",
            Rule::UnionCylinder => "union-cylinder",
            Rule::LwPushout => "lw-pushout",
        }
    }

    pub fn citation(&self) -> &'static str {
        match self {
            Rule::BaseCase { .. } => citations::BASE_CASE,
            Rule::QuotientModel { .. } => citations::SUB_FAMILY,
            Rule::FiberBound { .. } => citations::FIBER,
            Rule::Nested => citations::NESTED,
            Rule::UnionMax => citations::UNION_MAX,
            Rule::UnionCylinder => citations::UNION_CYLINDER,
            Rule::LwPushout => citations::LW_PUSHOUT,
        }
    }

    /// Recomputes the bound this rule yields from the premise bounds.
    pub fn apply(&self, premises: &[DimBound]) -> Result<DimBound, DimsError> {
        let arity = |want: usize| {
            if premises.len() == want {
                Ok(())
            } else {
                Err(DimsError::OutOfRange(format!(
                    "rule {} takes {want} premises, got {}",
                    self.id(),
                    premises.len()
                )))
            }
        };
        match *self {
            Rule::BaseCase { n } => arity(0).map(|_| DimBound::exact(n)),
            Rule::QuotientModel { n, t } => {
                arity(0)?;
                Ok(sub_family_gd(n, t)?.bound)
            }
            Rule::FiberBound { m } => {
                arity(0)?;
                if m == 0 {
                    return Err(DimsError::OutOfRange("fiber bound needs m >= 1".into()));
                }
                Ok(DimBound::at_most(2 * m - 1))
            }
            Rule::Nested => {
                arity(2)?;
                let d = premises[1].upper().ok_or_else(|| {
                    DimsError::OutOfRange("nested families need a finite fiber bound".into())
                })?;
                Ok(nested_families_bound(premises[0], d))
            }
            Rule::UnionMax => {
                arity(3)?;
                Ok(union_families_bound(premises[0], premises[1], premises[2]))
            }
            Rule::UnionCylinder => {
                arity(3)?;
                Ok(union_families_bound_via_cylinder(
                    premises[0],
                    premises[1],
                    premises[2],
                ))
            }
            Rule::LwPushout => {
                let (base, classes) = premises.split_first().ok_or_else(|| {
                    DimsError::OutOfRange("lw-pushout needs the smaller family".into())
                })?;
                Ok(lw_pushout_bound(*base, classes))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conclusion {
    pub subject: String,
    pub family: FamilyTag,
    pub bound: DimBound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    pub rule: Rule,
    pub premises: Vec<Derivation>,
    pub conclusion: Conclusion,
    pub citation: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unsound {
    /// Child indices from the root to the failing node.
    pub path: Vec<usize>,
    pub rule: &'static str,
    pub stored: DimBound,
    pub recomputed: Option<DimBound>,
}

impl Derivation {
    /// Applies `rule` to the premises and records the result.
    pub fn build(
        rule: Rule,
        premises: Vec<Derivation>,
        subject: impl Into<String>,
        family: FamilyTag,
    ) -> Result<Self, DimsError> {
        let bounds: Vec<DimBound> = premises.iter().map(|p| p.conclusion.bound).collect();
        let bound = rule.apply(&bounds)?;
        Ok(Derivation {
            rule,
            premises,
            conclusion: Conclusion {
                subject: subject.into(),
                family,
                bound,
            },
            citation: rule.citation(),
        })
    }

    pub fn bound(&self) -> DimBound {
        self.conclusion.bound
    }

    pub fn is_leaf(&self) -> bool {
        self.premises.is_empty()
    }

    /// Re-evaluates every node from its premises and compares with the
    /// stored bound. Returns the first mismatch in preorder.
    pub fn recheck(&self) -> Result<(), Unsound> {
        self.recheck_at(&mut Vec::new())
    }

    fn recheck_at(&self, path: &mut Vec<usize>) -> Result<(), Unsound> {
        for (i, p) in self.premises.iter().enumerate() {
            path.push(i);
            p.recheck_at(path)?;
            path.pop();
        }
        let bounds: Vec<DimBound> = self.premises.iter().map(|p| p.conclusion.bound).collect();
        let recomputed = self.rule.apply(&bounds).ok();
        if recomputed != Some(self.conclusion.bound) || self.citation != self.rule.citation() {
            return Err(Unsound {
                path: path.clone(),
                rule: self.rule.id(),
                stored: self.conclusion.bound,
                recomputed,
            });
        }
        Ok(())
    }

    pub fn node_count(&self) -> usize {
        1 + self
            .premises
            .iter()
            .map(Derivation::node_count)
            .sum::<usize>()
    }

    /// Longest root-to-leaf path, counted in nodes.
    pub fn height(&self) -> usize {
        1 + self
            .premises
            .iter()
            .map(Derivation::height)
            .max()
            .unwrap_or(0)
    }

    /// Number of induction levels: pushout steps along the first-premise
    /// spine, plus the base.
    pub fn induction_depth(&self) -> usize {
        match (self.rule, self.premises.first()) {
            (Rule::LwPushout, Some(prev)) => 1 + prev.induction_depth(),
            _ => 1,
        }
    }

    /// Indented text, one node per line.
    pub fn render_tree(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out, 0);
        out
    }

    fn render_into(&self, out: &mut String, depth: usize) {
        let c = &self.conclusion;
        let _ = writeln!(
            out,
            "{:indent$}[{}] gd_{{{}}}({}) {}",
            "",
            self.rule.id(),
            c.family,
            c.subject,
            c.bound.relation(),
            indent = depth * 2
        );
        for p in &self.premises {
            p.render_into(out, depth + 1);
        }
    }

    /// `key=value` lines, keys prefixed by the node path (`tree`, `tree.0`, ...).
    pub fn render_structured(&self) -> String {
        let mut out = String::new();
        self.structured_into(&mut out, "tree".to_string());
        out
    }

    fn structured_into(&self, out: &mut String, key: String) {
        let c = &self.conclusion;
        let _ = writeln!(out, "{key}.rule={}", self.rule.id());
        let _ = writeln!(out, "{key}.subject={}", c.subject);
        let _ = writeln!(out, "{key}.family={}", c.family);
        let _ = writeln!(out, "{key}.bound={}", c.bound);
        let _ = writeln!(out, "{key}.citation={}", self.citation);
        for (i, p) in self.premises.iter().enumerate() {
            p.structured_into(out, format!("{key}.{i}"));
        }
    }
}

fn restricted(k: u64) -> FamilyTag {
    FamilyTag::Restricted {
        k,
        subgroup: "H".into(),
    }
}

fn class_family() -> FamilyTag {
    FamilyTag::Generated("K : K ~ L".into())
}

/// Replays the induction on `k` that bounds `gd_{F_k ∩ H}(Z^n)` by `n + k`,
/// with `H = Z^n`.
///
/// Step `m` bounds the commensurator family of one class representative
/// `L` (saturated, rank `m`); every class gives the same tree, so one
/// representative stands for all of them.
pub fn derive_zn_upper(n: u64, k: u64) -> Result<(DimBound, Derivation), DimsError> {
    if k >= n {
        return Err(DimsError::OutOfRange(format!(
            "derivation for Z^{n} needs 0 <= k < n, got k = {k}"
        )));
    }
    let subject = format!("Z^{n}");
    let mut tree = Derivation::build(Rule::BaseCase { n }, vec![], &subject, restricted(0))?;
    for m in 1..=k {
        let outer = Derivation::build(
            Rule::QuotientModel { n, t: m },
            vec![],
            &subject,
            class_family(),
        )?;
        let fiber = Derivation::build(
            Rule::FiberBound { m },
            vec![],
            format!("K virtually Z^{m}"),
            FamilyTag::Fk(m - 1),
        )?;
        let nested = Derivation::build(
            Rule::Nested,
            vec![outer.clone(), fiber],
            &subject,
            FamilyTag::intersection(class_family(), restricted(m - 1)),
        )?;
        let union = Derivation::build(
            Rule::UnionCylinder,
            vec![tree.clone(), outer, nested],
            &subject,
            FamilyTag::union(class_family(), restricted(m - 1)),
        )?;
        tree = Derivation::build(Rule::LwPushout, vec![tree, union], &subject, restricted(m))?;
    }
    Ok((tree.bound(), tree))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_case_is_a_leaf() {
        let (b, t) = derive_zn_upper(4, 0).unwrap();
        assert_eq!(b.upper(), Some(4));
        assert!(t.is_leaf());
        assert_eq!(t.induction_depth(), 1);
    }

    #[test]
    fn one_step() {
        let (b, t) = derive_zn_upper(3, 1).unwrap();
        assert_eq!(b, DimBound::at_most(4));
        assert_eq!(t.induction_depth(), 2);
        assert_eq!(t.recheck(), Ok(()));
        let text = t.render_tree();
        assert!(text.starts_with("[lw-pushout] gd_{F_1 ∩ H}(Z^3) <= 4\n"));
        assert!(text.contains("    [nested-families]"));
    }

    #[test]
    fn agrees_with_closed_form() {
        let (b, t) = derive_zn_upper(6, 5).unwrap();
        assert_eq!(b.upper(), Some(11));
        assert_eq!(t.recheck(), Ok(()));
        assert!(derive_zn_upper(3, 3).is_err());
    }

    #[test]
    fn tampering_is_detected() {
        let (_, mut t) = derive_zn_upper(4, 2).unwrap();
        t.premises[1].premises[2].conclusion.bound = DimBound::at_most(3);
        let err = t.recheck().unwrap_err();
        assert_eq!(err.path, vec![1, 2]);
        assert_eq!(err.rule, "nested-families");
    }

    #[test]
    fn structured_keys() {
        let (_, t) = derive_zn_upper(2, 1).unwrap();
        let s = t.render_structured();
        assert!(s.contains("tree.rule=lw-pushout\n"));
        assert!(s.contains("tree.1.2.1.rule=fiber-bound\n"));
        assert_eq!(s.lines().count(), 5 * t.node_count());
    }
}
