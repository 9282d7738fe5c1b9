#pragma once

namespace costcut {

// exp(z) / (1 + exp(z)), evaluated on the branch that never overflows.
// Saturates smoothly to 0 or 1 once exp underflows (|z| beyond ~745).
double inverse_logit(double z);

// ln(p / (1 - p)) for p in (0, 1).
double logit(double p);

// Standard normal CDF via erfc; absolute error well below 1e-7.
double normal_cdf(double x);

// Two-sided tail probability 2 * (1 - Phi(|z|)) = erfc(|z| / sqrt(2)).
double normal_two_sided_p(double z);

// P[X > x] for X ~ chi-squared with df degrees of freedom.
// Regularized upper incomplete gamma Q(df/2, x/2), series/continued-fraction
// evaluation in the usual two regimes.
double chi_squared_survival(double x, int df);

} // namespace costcut
