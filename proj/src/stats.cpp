#include "costcut/stats.hpp"

#include <cmath>
#include <limits>

#include "costcut/errors.hpp"

namespace costcut {

double inverse_logit(double z) {
    if (z >= 0.0)
        return 1.0 / (1.0 + std::exp(-z));
    const double e = std::exp(z);
    return e / (1.0 + e);
}

double logit(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw Error("logit requires a probability strictly inside (0, 1)");
    return std::log(p / (1.0 - p));
}

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

double normal_two_sided_p(double z) {
    return std::erfc(std::abs(z) / std::sqrt(2.0));
}

namespace {

// Regularized lower incomplete gamma P(a, x) by its power series.
double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    for (int n = 1; n < 500; ++n) {
        term *= x / (a + n);
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-16)
            break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Regularized upper incomplete gamma Q(a, x) by modified Lentz continued
// fraction; valid for x >= a + 1.
double gamma_q_continued_fraction(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny)
            d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny)
            c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16)
            break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

} // namespace

double chi_squared_survival(double x, int df) {
    if (df < 1)
        throw Error("chi-squared degrees of freedom must be >= 1");
    if (x <= 0.0)
        return 1.0;
    const double a = 0.5 * df;
    const double half_x = 0.5 * x;
    if (half_x < a + 1.0)
        return 1.0 - gamma_p_series(a, half_x);
    return gamma_q_continued_fraction(a, half_x);
}

} // namespace costcut
