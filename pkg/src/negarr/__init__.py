"""Exact negativity analysis of line arrangements in the projective plane."""

from .arrangement import (
    KEEP_ORIGINAL_POINTS,
    RESTRICT_TO_NEW_SINGULAR,
    CoordArrangement,
    IncidenceStructure,
    PointSet,
    Spectrum,
    abstract_spectrum,
    equidistribution,
    multiplicity,
    remove_lines,
    restrict_to_singular,
    singular_points,
    spectrum_of,
)
from .catalog import CATALOG, CatalogEntry, catalog_entry
from .errors import NegarrError
from .fields import (
    EQUAL,
    GREATER,
    LESS,
    ExtensionField,
    Field,
    FieldElement,
    PrimeField,
    RationalField,
    compare_with_surd_mean,
    cyclotomic_field,
    cyclotomic_polynomial,
    is_prime,
)
from .negativity import (
    CertificateReport,
    HCurveReport,
    HReport,
    MeanComparison,
    PairRemovalReport,
    finite_field_bound,
    h_at_points,
    h_curve,
    h_fattened,
    h_full,
    h_quadratic,
    hirzebruch_check,
    main_lower_bound,
    mean_multiplicity_bound,
    melchior_check,
    pair_removal_from_profile,
    real_identity_and_bound,
    subconfig_formula,
    wiman_pair_removal,
)
from .projective import ProjLine, ProjPoint, incident, join, meet

__version__ = "0.1.0"

__all__ = [
    "CATALOG",
    "CatalogEntry",
    "CertificateReport",
    "CoordArrangement",
    "EQUAL",
    "ExtensionField",
    "Field",
    "FieldElement",
    "GREATER",
    "HCurveReport",
    "HReport",
    "IncidenceStructure",
    "KEEP_ORIGINAL_POINTS",
    "LESS",
    "MeanComparison",
    "NegarrError",
    "PairRemovalReport",
    "PointSet",
    "PrimeField",
    "ProjLine",
    "ProjPoint",
    "RationalField",
    "RESTRICT_TO_NEW_SINGULAR",
    "Spectrum",
    "abstract_spectrum",
    "catalog_entry",
    "compare_with_surd_mean",
    "cyclotomic_field",
    "cyclotomic_polynomial",
    "equidistribution",
    "finite_field_bound",
    "h_at_points",
    "h_curve",
    "h_fattened",
    "h_full",
    "h_quadratic",
    "hirzebruch_check",
    "incident",
    "is_prime",
    "join",
    "main_lower_bound",
    "mean_multiplicity_bound",
    "meet",
    "melchior_check",
    "multiplicity",
    "pair_removal_from_profile",
    "real_identity_and_bound",
    "remove_lines",
    "restrict_to_singular",
    "singular_points",
    "spectrum_of",
    "subconfig_formula",
    "wiman_pair_removal",
]
