from flagdesigns.utils.errors import (
    DataIntegrityError,
    InputError,
    InternalConsistencyError,
    NotAutomorphismError,
    SubgroupAbsentError,
    VerificationError,
)
from flagdesigns.utils.arith import fraction_text, is_prime_power, prime_power, prime_powers, triple
