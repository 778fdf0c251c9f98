//! Registered checks and their accepted names.

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CheckId {
    TraceLemmas,
    ExtVanishingTrace,
    SyzygyRigidity,
    BoundedArc,
    ExampleFixtures,
    OracleAgreement,
}

/// Every accepted name; the first entry for each check is its canonical
/// name.
pub const CATALOG: &[(&str, CheckId)] = &[
    ("trace-lemmas", CheckId::TraceLemmas),
    ("lemma-2.3", CheckId::TraceLemmas),
    ("lemma-2.7", CheckId::TraceLemmas),
    ("lemma-3.6", CheckId::TraceLemmas),
    ("ext-vanishing-trace", CheckId::ExtVanishingTrace),
    ("prop-3.2", CheckId::ExtVanishingTrace),
    ("syzygy-rigidity", CheckId::SyzygyRigidity),
    ("thm-3.9", CheckId::SyzygyRigidity),
    ("thm-3.9-census", CheckId::SyzygyRigidity),
    ("bounded-arc", CheckId::BoundedArc),
    ("cor-3.12", CheckId::BoundedArc),
    ("example-fixtures", CheckId::ExampleFixtures),
    ("examples", CheckId::ExampleFixtures),
    ("oracle-agreement", CheckId::OracleAgreement),
    ("oracle", CheckId::OracleAgreement),
];

impl CheckId {
    pub fn parse(name: &str) -> Option<CheckId> {
        CATALOG.iter().find(|(n, _)| *n == name).map(|(_, id)| *id)
    }

    pub fn name(self) -> &'static str {
        CATALOG.iter().find(|(_, id)| *id == self).map(|(n, _)| *n).expect("every check is registered")
    }

    /// The statement under test.
    pub fn statement(self) -> &'static str {
        match self {
            CheckId::TraceLemmas => {
                "for M in X: M = T_X(M) iff every map M -> X lands in M; Hom(M, X/M) = 0 makes M a trace \
                 module, and conversely for rigid M; Hom(M, N) = 0 iff Ann M contains an N-regular element"
            }
            CheckId::ExtVanishingTrace => {
                "Ext^1(R/I, R) = 0 implies I is a trace ideal; over Artinian Gorenstein rings this always holds"
            }
            CheckId::SyzygyRigidity => {
                "over a local Artinian Gorenstein ring every nonzero syzygy or cosyzygy of a proper ideal has \
                 Ext^1(M, M) != 0"
            }
            CheckId::BoundedArc => {
                "over a local Artinian Gorenstein ring a rigid syzygy or cosyzygy of an ideal is free, and a \
                 non-free ideal has Ext^i(I, I + R) != 0 for some i up to the bound"
            }
            CheckId::ExampleFixtures => {
                "trace ideals of (x^5, xy^7) in Q[x,y]/(x^2y^2) and of ideals of the node, and traces in \
                 k[t^3,t^4,t^5] lying in {0, m, R}"
            }
            CheckId::OracleAgreement => {
                "Gröbner and linear-algebra engines agree on Hom, Ext^1, trace ideals and socles"
            }
        }
    }
}
