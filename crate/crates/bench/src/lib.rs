//! Shared inputs for the criterion benches in `benches/`.

use wigner_sumrules::sumrule::SumRuleQuery;
use wigner_sumrules::HalfInt;

/// A generic (non-stretched) sum-rule query with `j1 = j2 = j`, `m1 = 1/2`
/// or 1 and `m2 = 0` or -1/2.
pub fn query(k: u32, twice_j: i64) -> SumRuleQuery {
    let j = HalfInt::from_twice(twice_j);
    let (m1, m2) = if twice_j % 2 == 0 { (2, 0) } else { (1, -1) };
    SumRuleQuery::new(k, j, HalfInt::from_twice(m1), j, HalfInt::from_twice(m2)).expect("valid query")
}
