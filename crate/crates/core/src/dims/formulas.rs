//! Closed-form dimension values, each valid only on its stated parameter
//! range. Requests outside the range return [`DimsError::OutOfRange`].

use super::{citations, DimBound, DimFact, DimsError};

fn out_of_range(msg: String) -> DimsError {
    DimsError::OutOfRange(msg)
}

/// `gd = cd = n + k` for `F_k` of a virtually `Z^n` group, `0 <= k < n`.
pub fn virtually_abelian_gd(n: u64, k: u64) -> Result<DimFact, DimsError> {
    if k >= n {
        return Err(out_of_range(format!(
            "virtually Z^{n} with k = {k}: the formula needs 0 <= k < n"
        )));
    }
    Ok(DimFact::new(
        format!("gd_F{k}(virtually Z^{n})"),
        DimBound::exact(n + k),
        citations::VIRTUALLY_ABELIAN,
    )
    .with_note("gd = cd"))
}

/// Like [`virtually_abelian_gd`] but total: `k >= n` yields the degenerate
/// value 0, flagged as such.
pub fn virtually_abelian_fact(n: u64, k: u64) -> DimFact {
    virtually_abelian_gd(n, k).unwrap_or_else(|_| {
        let mut fact = DimFact::new(
            format!("gd_F{k}(virtually Z^{n})"),
            DimBound::exact(0),
            citations::VIRTUALLY_ABELIAN_DEGENERATE,
        )
        .with_note("F_k contains the group itself; a point is a model");
        fact.degenerate = true;
        fact
    })
}

/// `gd_{F_2}(Z^k) = k + 2` for `k >= 3`.
pub fn zk_f2_special(k: u64) -> Result<DimFact, DimsError> {
    if k < 3 {
        return Err(out_of_range(format!("Z^{k} with F_2 needs k >= 3")));
    }
    Ok(DimFact::new(
        format!("gd_F2(Z^{k})"),
        DimBound::exact(k + 2),
        citations::ZK_F2,
    ))
}

/// A virtually `Z^n` subgroup forces `gd_{F_k} >= n + k`.
pub fn subgroup_lower_bound(n: u64, k: u64) -> Result<DimFact, DimsError> {
    if k >= n {
        return Err(out_of_range(format!(
            "subgroup lower bound for Z^{n} with k = {k} needs 0 <= k < n"
        )));
    }
    Ok(DimFact::new(
        format!("gd_F{k}(G ⊇ virtually Z^{n})"),
        DimBound::at_least(n + k),
        citations::SUBGROUP_LOWER,
    ))
}

/// Braid or pure braid group on `n` strands: `n + k - 1` for `0 <= k < n - 1`.
pub fn braid_gd(n: u64, k: u64, pure: bool) -> Result<DimFact, DimsError> {
    if n < 2 {
        return Err(out_of_range(format!("braid group needs n >= 2, got {n}")));
    }
    if k >= n - 1 {
        return Err(out_of_range(format!(
            "braid group on {n} strands with k = {k}: the formula needs 0 <= k < n - 1"
        )));
    }
    let name = if pure { "P" } else { "B" };
    Ok(DimFact::new(
        format!("gd_F{k}({name}_{n})"),
        DimBound::exact(n + k - 1),
        citations::BRAID,
    )
    .with_note(format!("gd = cd; vcd({name}_{n}) = {}", n - 1)))
}

/// `gd_{F_k}(Out(F_n)) >= 2n + k - 3` for `n >= 2`, `0 <= k < 2n - 3`.
pub fn out_fn_lower(n: u64, k: u64) -> Result<DimFact, DimsError> {
    if n < 2 {
        return Err(out_of_range(format!(
            "Out(F_n) bound needs n >= 2, got {n}"
        )));
    }
    if k >= 2 * n - 3 {
        return Err(out_of_range(format!(
            "Out(F_{n}) with k = {k}: the bound needs 0 <= k < 2n - 3 = {}",
            2 * n - 3
        )));
    }
    Ok(DimFact::new(
        format!("gd_F{k}(Out(F_{n}))"),
        DimBound::at_least(2 * n + k - 3),
        citations::OUT_FN,
    )
    .with_note("no upper bound is known from this rule"))
}

/// `gd_{F_k}(Out(A_d)) >= 4d + k - 1` for the string of `d` diamonds.
pub fn out_diamonds_lower(d: u64, k: u64) -> Result<DimFact, DimsError> {
    if d < 1 {
        return Err(out_of_range("string of diamonds needs d >= 1".to_string()));
    }
    if k >= 4 * d - 1 {
        return Err(out_of_range(format!(
            "{d} diamonds with k = {k}: the bound needs 0 <= k < 4d - 1 = {}",
            4 * d - 1
        )));
    }
    Ok(DimFact::new(
        format!("gd_F{k}(Out(A_{d}))"),
        DimBound::at_least(4 * d + k - 1),
        citations::OUT_DIAMONDS,
    )
    .with_note("no upper bound is known from this rule"))
}

/// `gd_{SUB(L)}(Z^n) <= n - t` for a saturated rank-`t` sublattice `L`.
pub fn sub_family_gd(n: u64, t: u64) -> Result<DimFact, DimsError> {
    if t >= n {
        return Err(out_of_range(format!(
            "SUB(L) bound needs rank t < n, got t = {t}, n = {n}"
        )));
    }
    Ok(DimFact::new(
        format!("gd_SUB(L)(Z^{n}), rank L = {t}"),
        DimBound::at_most(n - t),
        citations::SUB_FAMILY,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn value(f: Result<DimFact, DimsError>) -> u64 {
        f.unwrap().bound.exact_value().unwrap()
    }

    #[test]
    fn virtually_abelian() {
        assert_eq!(value(virtually_abelian_gd(3, 1)), 4);
        assert_eq!(value(virtually_abelian_gd(2, 1)), 3);
        assert_eq!(value(virtually_abelian_gd(5, 0)), 5);
        assert!(matches!(
            virtually_abelian_gd(2, 2),
            Err(DimsError::OutOfRange(_))
        ));
        let d = virtually_abelian_fact(2, 5);
        assert!(d.degenerate);
        assert_eq!(d.bound, DimBound::exact(0));
        assert_ne!(d.citation, citations::VIRTUALLY_ABELIAN);
    }

    #[test]
    fn special_cases() {
        assert_eq!(value(zk_f2_special(3)), 5);
        assert_eq!(value(zk_f2_special(4)), 6);
        for k in 3..=10 {
            assert_eq!(
                zk_f2_special(k).unwrap().bound,
                virtually_abelian_gd(k, 2).unwrap().bound
            );
        }
        assert!(zk_f2_special(2).is_err());
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(
            subgroup_lower_bound(4, 2).unwrap().bound,
            DimBound::at_least(6)
        );
        assert_eq!(
            subgroup_lower_bound(1, 0).unwrap().bound,
            DimBound::at_least(1)
        );
        assert_eq!(out_fn_lower(3, 1).unwrap().bound, DimBound::at_least(4));
        assert_eq!(out_fn_lower(2, 0).unwrap().bound, DimBound::at_least(1));
        assert!(out_fn_lower(2, 1).is_err());
        assert_eq!(
            out_diamonds_lower(1, 0).unwrap().bound,
            DimBound::at_least(3)
        );
        assert_eq!(
            out_diamonds_lower(2, 1).unwrap().bound,
            DimBound::at_least(8)
        );
        assert_eq!(out_diamonds_lower(2, 1).unwrap().bound.upper(), None);
        assert!(out_diamonds_lower(0, 0).is_err());
    }

    #[test]
    fn lower_bound_meets_exact_value() {
        let upper = virtually_abelian_gd(4, 2).unwrap().bound;
        let lower = subgroup_lower_bound(4, 2).unwrap().bound;
        assert_eq!(lower.intersect(&upper).unwrap(), DimBound::exact(6));
    }

    #[test]
    fn braids() {
        assert_eq!(value(braid_gd(4, 1, false)), 4);
        assert_eq!(value(braid_gd(5, 0, true)), 4);
        assert!(braid_gd(3, 2, false).is_err());
        assert!(braid_gd(1, 0, false).is_err());
        assert!(braid_gd(4, 1, true).unwrap().notes[0].contains("vcd(P_4) = 3"));
    }

    #[test]
    fn sub_family() {
        assert_eq!(sub_family_gd(3, 1).unwrap().bound, DimBound::at_most(2));
        assert_eq!(sub_family_gd(4, 0).unwrap().bound, DimBound::at_most(4));
        assert_eq!(sub_family_gd(5, 4).unwrap().bound, DimBound::at_most(1));
        assert!(sub_family_gd(3, 3).is_err());
    }
}
