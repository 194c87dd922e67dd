use thiserror::Error;

/// Errors raised by constructors and searches.
///
/// The variant names are part of the command-line surface: the CLI prints
/// them verbatim when a construction fails.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("DimensionMismatch: {0}")]
    DimensionMismatch(String),
    #[error("DuplicateLabel: {0:?}")]
    DuplicateLabel(String),
    #[error("UnknownLabel: {0:?}")]
    UnknownLabel(String),
    #[error("CarrierTooLarge: {size} elements (limit {limit})")]
    CarrierTooLarge { size: usize, limit: usize },
    #[error("IdentityAxiomViolated: {0:?} is not a two-sided identity")]
    IdentityAxiomViolated(String),
    #[error("IdentityMissing: the subset does not contain the identity")]
    IdentityMissing,
    #[error("NotUnital: {0}")]
    NotUnital(String),
    #[error("NotAMosaic: {0}")]
    NotAMosaic(String),
    #[error("NotCommutativeMosaic: {0}")]
    NotCommutativeMosaic(String),
    #[error("SearchCapExceeded: more than {0} search nodes")]
    SearchCapExceeded(u64),
    #[error("CodomainNotUnital")]
    CodomainNotUnital,
    #[error("NotParallel: morphisms do not share domain and codomain")]
    NotParallel,
    #[error("NoCommonCodomain")]
    NoCommonCodomain,
    #[error("UnsupportedCategory: {0}")]
    UnsupportedCategory(String),
    #[error("NotUnitalTag: {0}")]
    NotUnitalTag(String),
    #[error("NotAMorphism: {0}")]
    NotAMorphism(String),
    #[error("NotAGroup: {0}")]
    NotAGroup(String),
    #[error("NotARing: {0}")]
    NotARing(String),
    #[error("NotASubgroup: {0}")]
    NotASubgroup(String),
    #[error("NotAbelian")]
    NotAbelian,
    #[error("NotAnAutomorphismGroup: {0}")]
    NotAnAutomorphismGroup(String),
    #[error("NotASemilattice: {0}")]
    NotASemilattice(String),
    #[error("NotUnitSubgroup: {0}")]
    NotUnitSubgroup(String),
    #[error("NotMultiring: {0}")]
    NotMultiring(String),
    #[error("AdditiveNotCanonical: {0}")]
    AdditiveNotCanonical(String),
    #[error("ZeroNotAbsorbing: {0}")]
    ZeroNotAbsorbing(String),
    #[error("CandidateDoesNotEqualize: {0}")]
    CandidateDoesNotEqualize(String),
    #[error("FlatsNotIntersectionClosed: {0}")]
    FlatsNotIntersectionClosed(String),
    #[error("ExchangeFails: S={s:?} x={x} y={y}")]
    ExchangeFails { s: Vec<String>, x: String, y: String },
    #[error("NotSimplePointed: {0}")]
    NotSimplePointed(String),
    #[error("Parse: {0}")]
    Parse(String),
}

impl Error {
    /// The bare variant name, e.g. `"NotParallel"`.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::DuplicateLabel(_) => "DuplicateLabel",
            Error::UnknownLabel(_) => "UnknownLabel",
            Error::CarrierTooLarge { .. } => "CarrierTooLarge",
            Error::IdentityAxiomViolated(_) => "IdentityAxiomViolated",
            Error::IdentityMissing => "IdentityMissing",
            Error::NotUnital(_) => "NotUnital",
            Error::NotAMosaic(_) => "NotAMosaic",
            Error::NotCommutativeMosaic(_) => "NotCommutativeMosaic",
            Error::SearchCapExceeded(_) => "SearchCapExceeded",
            Error::CodomainNotUnital => "CodomainNotUnital",
            Error::NotParallel => "NotParallel",
            Error::NoCommonCodomain => "NoCommonCodomain",
            Error::UnsupportedCategory(_) => "UnsupportedCategory",
            Error::NotUnitalTag(_) => "NotUnitalTag",
            Error::NotAMorphism(_) => "NotAMorphism",
            Error::NotAGroup(_) => "NotAGroup",
            Error::NotARing(_) => "NotARing",
            Error::NotASubgroup(_) => "NotASubgroup",
            Error::NotAbelian => "NotAbelian",
            Error::NotAnAutomorphismGroup(_) => "NotAnAutomorphismGroup",
            Error::NotASemilattice(_) => "NotASemilattice",
            Error::NotUnitSubgroup(_) => "NotUnitSubgroup",
            Error::NotMultiring(_) => "NotMultiring",
            Error::AdditiveNotCanonical(_) => "AdditiveNotCanonical",
            Error::ZeroNotAbsorbing(_) => "ZeroNotAbsorbing",
            Error::CandidateDoesNotEqualize(_) => "CandidateDoesNotEqualize",
            Error::FlatsNotIntersectionClosed(_) => "FlatsNotIntersectionClosed",
            Error::ExchangeFails { .. } => "ExchangeFails",
            Error::NotSimplePointed(_) => "NotSimplePointed",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
