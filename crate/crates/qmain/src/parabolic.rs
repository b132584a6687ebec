//! The 2-walk parabolic decision procedure.
//!
//! A connected irregular graph has exactly two main signless Laplacian
//! eigenvalues precisely when there is a unique positive integer `a` and
//! nonnegative integer `b` with `a^2 - 8b > 0` such that
//! `s(v) = -d(v)^2 + a*d(v) - b` at every vertex. Regular graphs have one
//! main eigenvalue and no unique pair, so they get their own verdict.

use std::fmt;

use num_rational::Rational64;

use crate::graph::{degree_profile, is_connected, Graph, TwoWalkProfile};

/// The integer pair of a parabolic graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParabolicParams {
    pub a: i64,
    pub b: i64,
}

impl ParabolicParams {
    pub fn discriminant(&self) -> i64 {
        self.a * self.a - 8 * self.b
    }

    /// The two main eigenvalues a parabolic graph must have:
    /// roots of `x^2 - a x + 2b`.
    pub fn main_eigenvalues(&self) -> (f64, f64) {
        let disc = (self.discriminant() as f64).sqrt();
        let a = self.a as f64;
        ((a - disc) / 2.0, (a + disc) / 2.0)
    }
}

impl fmt::Display for ParabolicParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Why a graph fails the parabolic check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NotParabolicReason {
    Disconnected,
    /// The derived pair is rational but not integral.
    NonIntegerParams,
    NonPositiveA,
    NegativeB,
    /// `a^2 - 8b <= 0`.
    DiscriminantFail,
    /// The equation fails at this vertex.
    EquationFails {
        vertex: usize,
    },
}

impl NotParabolicReason {
    pub fn label(&self) -> &'static str {
        match self {
            NotParabolicReason::Disconnected => "disconnected",
            NotParabolicReason::NonIntegerParams => "non_integer_params",
            NotParabolicReason::NonPositiveA => "non_positive_a",
            NotParabolicReason::NegativeB => "negative_b",
            NotParabolicReason::DiscriminantFail => "discriminant_fail",
            NotParabolicReason::EquationFails { .. } => "equation_fails",
        }
    }
}

/// Outcome of the parabolic decision.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParabolicVerdict {
    Parabolic(ParabolicParams),
    /// All degrees equal `k`; the pair would not be unique.
    Regular {
        degree: usize,
    },
    NotParabolic(NotParabolicReason),
}

impl ParabolicVerdict {
    pub fn params(&self) -> Option<ParabolicParams> {
        match self {
            ParabolicVerdict::Parabolic(p) => Some(*p),
            _ => None,
        }
    }

    pub fn is_parabolic(&self) -> bool {
        matches!(self, ParabolicVerdict::Parabolic(_))
    }

    pub fn is_regular(&self) -> bool {
        matches!(self, ParabolicVerdict::Regular { .. })
    }
}

impl fmt::Display for ParabolicVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParabolicVerdict::Parabolic(p) => write!(f, "parabolic{p}"),
            ParabolicVerdict::Regular { degree } => write!(f, "regular({degree})"),
            ParabolicVerdict::NotParabolic(r) => write!(f, "not_parabolic({})", r.label()),
        }
    }
}

/// Solves the two-equation system for (a, b) from the first vertex pair
/// with distinct degrees, exactly. Returns `None` for regular profiles.
///
/// With `r = (s(u)-s(v))/(d(u)-d(v))`:
/// `a = r + d(u) + d(v)` and `b = r*d(v) + d(u)*d(v) - s(v)`.
pub fn derive_params(profile: &TwoWalkProfile) -> Option<(Rational64, Rational64)> {
    let n = profile.degrees.len();
    let mut pair = None;
    'outer: for u in 0..n {
        for v in u + 1..n {
            if profile.degrees[u] != profile.degrees[v] {
                pair = Some((u, v));
                break 'outer;
            }
        }
    }
    let (u, v) = pair?;
    let du = Rational64::from_integer(profile.degrees[u] as i64);
    let dv = Rational64::from_integer(profile.degrees[v] as i64);
    let su = Rational64::from_integer(profile.two_walk_sums[u] as i64);
    let sv = Rational64::from_integer(profile.two_walk_sums[v] as i64);
    let ratio = (su - sv) / (du - dv);
    let a = ratio + du + dv;
    let b = ratio * dv + du * dv - sv;
    Some((a, b))
}

/// Evaluates the parabolic equation `s(v) = -d(v)^2 + a d(v) - b` at every
/// vertex, returning the first failing vertex.
fn first_equation_failure(profile: &TwoWalkProfile, a: i64, b: i64) -> Option<usize> {
    profile.degrees.iter().enumerate().find_map(|(v, &d)| {
        let d = d as i64;
        let expected = -d * d + a * d - b;
        if profile.two_walk_sums[v] as i64 != expected {
            Some(v)
        } else {
            None
        }
    })
}

/// Full decision: Regular for regular graphs, Parabolic(a, b) when the
/// equation holds at every vertex with an admissible integer pair, and a
/// refusal reason otherwise. The pair is evaluated in exact rational
/// arithmetic; integrality is never decided by rounding.
pub fn check_parabolic(g: &Graph) -> ParabolicVerdict {
    if !is_connected(g) {
        return ParabolicVerdict::NotParabolic(NotParabolicReason::Disconnected);
    }
    let profile = degree_profile(g);
    let Some((a, b)) = derive_params(&profile) else {
        return ParabolicVerdict::Regular {
            degree: profile.degrees[0],
        };
    };
    if !a.is_integer() || !b.is_integer() {
        return ParabolicVerdict::NotParabolic(NotParabolicReason::NonIntegerParams);
    }
    let (a, b) = (a.to_integer(), b.to_integer());
    if a <= 0 {
        return ParabolicVerdict::NotParabolic(NotParabolicReason::NonPositiveA);
    }
    if b < 0 {
        return ParabolicVerdict::NotParabolic(NotParabolicReason::NegativeB);
    }
    let params = ParabolicParams { a, b };
    if params.discriminant() <= 0 {
        return ParabolicVerdict::NotParabolic(NotParabolicReason::DiscriminantFail);
    }
    if let Some(vertex) = first_equation_failure(&profile, a, b) {
        return ParabolicVerdict::NotParabolic(NotParabolicReason::EquationFails { vertex });
    }
    ParabolicVerdict::Parabolic(params)
}

/// Exact witness that a parabolic graph's walk columns satisfy
/// `(L+)^2 j = a (L+) j - 2b j`; used by tests and the sweep.
pub fn walk_identity_holds(g: &Graph, params: &ParabolicParams) -> bool {
    use num_bigint::BigInt;
    let wm = crate::spectra::walk_matrix(g);
    if wm.columns.len() < 3 {
        // One or two vertices: the identity is about columns 0..2, which
        // only exist for n >= 3; degenerate cases hold vacuously.
        return true;
    }
    let a = BigInt::from(params.a);
    let two_b = BigInt::from(2 * params.b);
    (0..wm.n)
        .all(|v| wm.columns[2][v].clone() == &a * &wm.columns[1][v] - &two_b * &wm.columns[0][v])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_family, FamilySpec};
    use crate::graph::Graph;

    fn family(spec: FamilySpec) -> Graph {
        make_family(&spec).unwrap()
    }

    #[test]
    fn derive_on_path4() {
        let profile = degree_profile(&family(FamilySpec::Path { n: 4 }));
        let (a, b) = derive_params(&profile).unwrap();
        assert_eq!(a, Rational64::from_integer(4));
        assert_eq!(b, Rational64::from_integer(1));
    }

    #[test]
    fn derive_on_star() {
        let profile = degree_profile(&family(FamilySpec::Star { n: 4 }));
        let (a, b) = derive_params(&profile).unwrap();
        assert_eq!(a, Rational64::from_integer(4));
        assert_eq!(b, Rational64::from_integer(0));
    }

    #[test]
    fn derive_on_regular_graph_is_none() {
        let profile = degree_profile(&family(FamilySpec::Cycle { n: 6 }));
        assert!(derive_params(&profile).is_none());
    }

    #[test]
    fn family_parameters() {
        let expected: Vec<(FamilySpec, (i64, i64))> = vec![
            (FamilySpec::G1, (7, 4)),
            (FamilySpec::G2, (7, 5)),
            (FamilySpec::G3, (6, 3)),
            (FamilySpec::G4, (6, 2)),
            (FamilySpec::G5, (7, 5)),
            (FamilySpec::G6, (5, 0)),
            (FamilySpec::G7, (6, 3)),
            (FamilySpec::H { k: 2 }, (6, 2)),
            (FamilySpec::H { k: 3 }, (6, 2)),
            (FamilySpec::H { k: 4 }, (6, 2)),
        ];
        for (spec, (a, b)) in expected {
            let verdict = check_parabolic(&family(spec));
            assert_eq!(
                verdict,
                ParabolicVerdict::Parabolic(ParabolicParams { a, b }),
                "{spec}"
            );
        }
    }

    #[test]
    fn regular_graphs_get_regular_verdict() {
        assert_eq!(
            check_parabolic(&family(FamilySpec::Cycle { n: 4 })),
            ParabolicVerdict::Regular { degree: 2 }
        );
        assert_eq!(
            check_parabolic(&family(FamilySpec::Complete { n: 4 })),
            ParabolicVerdict::Regular { degree: 3 }
        );
    }

    #[test]
    fn path5_fails_at_the_middle_vertex() {
        let verdict = check_parabolic(&family(FamilySpec::Path { n: 5 }));
        assert_eq!(
            verdict,
            ParabolicVerdict::NotParabolic(NotParabolicReason::EquationFails { vertex: 2 })
        );
    }

    #[test]
    fn triangle_with_pendant() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
        assert_eq!(
            check_parabolic(&g),
            ParabolicVerdict::Parabolic(ParabolicParams { a: 5, b: 1 })
        );
    }

    #[test]
    fn disconnected_graphs_are_refused() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            check_parabolic(&g),
            ParabolicVerdict::NotParabolic(NotParabolicReason::Disconnected)
        );
    }

    #[test]
    fn walk_identity_for_parabolic_graphs() {
        for spec in [
            FamilySpec::G1,
            FamilySpec::G6,
            FamilySpec::H { k: 3 },
            FamilySpec::Star { n: 5 },
        ] {
            let g = family(spec);
            let params = check_parabolic(&g).params().expect("parabolic");
            assert!(walk_identity_holds(&g, &params), "{spec}");
            assert_eq!(crate::spectra::main_eigenvalue_count(&g), 2, "{spec}");
        }
    }

    #[test]
    fn main_eigenvalue_formula() {
        let params = ParabolicParams { a: 7, b: 4 };
        let (lo, hi) = params.main_eigenvalues();
        assert!((lo - (7.0 - 17f64.sqrt()) / 2.0).abs() < 1e-12);
        assert!((hi - (7.0 + 17f64.sqrt()) / 2.0).abs() < 1e-12);
    }
}
