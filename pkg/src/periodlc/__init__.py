"""Linear complexity of periodic sequences over GF(q) with period q**n * p**m."""
from .errors import (
    ContractViolation,
    InternalError,
    LinearComplexityError,
    PreconditionError,
    ShapeError,
    UsageError,
)
from .fastlc import (
    AlgorithmTrace,
    BlockDecomposition,
    LinearComplexityResult,
    PeriodicSequence,
    b_sequence,
    column_sums,
    lc_general,
    lc_period_pm,
    lc_period_qn,
    phi_divisibility_holds,
    phi_part,
    prime_update,
    split_blocks,
)
from .field import FieldElement, PrimeField, add, inv, mul, neg
from .numtheory import (
    PeriodShape,
    euler_phi_prime_power,
    factor_period,
    is_prime,
    is_primitive_root_mod_p2,
    multiplicative_order,
)
from .oracle import LfsrSpec, berlekamp_massey, lfsr_regenerate, naive_minpoly
from .polynomial import (
    CyclotomicPrimePower,
    FactoredPolynomial,
    Linear,
    OneMinusXPow,
    Polynomial,
    cyclotomic_prime_power,
    expand,
    phi_frobenius_power,
    poly_add,
    poly_divmod,
    poly_gcd,
    poly_mul,
)

__version__ = "0.1.0"
