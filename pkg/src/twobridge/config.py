"""Range limits shared by the library and the CLI."""

# Largest c for which T(c) is fully enumerated by default.
FULL_ENUMERATION_CAP = 18
# Largest c for palindromic-only enumeration.
PALINDROMIC_CAP = 24
# Default upper bound for `twobridge verify`.
DEFAULT_VERIFY_MAX = 14
# Decay witness for the correction term is checked up to this c.
EPSILON_DECAY_MAX = 60
