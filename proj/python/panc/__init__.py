"""Power-adaptive network coding for the two-source relay channel."""

from ._panc import (  # noqa: F401
    Channel,
    DegenerateConstellation,
    InsufficientData,
    PowerPair,
    config_text,
    optimize_powers_ct,
    optimize_powers_exact,
    p_w1,
    q1,
    q2,
    q_average_coefficient,
    q_average_exact,
    relay_level_probs,
    scaling_factor,
    scheme_names,
    sper_ct,
    sper_exact,
    sweep,
)
