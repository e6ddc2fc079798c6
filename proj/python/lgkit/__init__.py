from ._core import (
    MalformedDiagram,
    NotScalar,
    ParseError,
    PoleAtRoot,
    RationalFunction,
    ResourceLimitExceeded,
    RootValue,
    __version__,
    alexander,
    alexander_coefficients,
    characteristic_check,
    cl_P,
    components,
    lg_closed_2braid,
    suite_names,
    tensor_invariant,
    validate_fixture,
    verify,
    xi,
)

__all__ = [
    "MalformedDiagram",
    "NotScalar",
    "ParseError",
    "PoleAtRoot",
    "RationalFunction",
    "ResourceLimitExceeded",
    "RootValue",
    "__version__",
    "alexander",
    "alexander_coefficients",
    "characteristic_check",
    "cl_P",
    "components",
    "lg_closed_2braid",
    "suite_names",
    "tensor_invariant",
    "validate_fixture",
    "verify",
    "xi",
]
