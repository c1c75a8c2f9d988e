// SPDX-License-Identifier: Apache-2.0
//
// Test-side helpers kept independent of the library internals they check:
// plain bisection oracles, KS statistics, and small distribution CDFs.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace checks {

/// Plain 200-step bisection for log(rho) + 1/(2 rho^2) = log_target on one
/// branch of the profile; shares no code with the solver under test.
inline double oracle_invert_profile(double log_target, bool lower_branch) {
    const auto g = [](double rho) { return std::log(rho) + 0.5 / (rho * rho); };
    double lo, hi;
    if (lower_branch) {
        lo = 1e-9;
        hi = 1.0;
    } else {
        lo = 1.0;
        hi = 2.0;
        while (g(hi) < log_target) hi *= 2.0;
    }
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const bool above = g(mid) > log_target;
        // g decreases on the lower branch, increases on the upper.
        if (above == lower_branch) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

/// CDF of |N(0, scale^2)|.
inline double half_normal_cdf(double x, double scale) {
    if (x <= 0.0) return 0.0;
    return std::erf(x / (scale * std::sqrt(2.0)));
}

/// Asymptotic Kolmogorov tail: P(D* > x) for the scaled KS statistic.
inline double kolmogorov_tail(double x) {
    if (x < 1e-8) return 1.0;
    double sum = 0.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = std::exp(-2.0 * k * k * x * x);
        sum += (k % 2 == 1 ? term : -term);
        if (term < 1e-16) break;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

/// One-sample KS p-value of samples against a CDF.
inline double ks_test_pvalue(std::vector<double> samples,
                             const std::function<double(double)>& cdf) {
    if (samples.empty()) throw std::invalid_argument("ks: empty sample");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max(d, std::max((static_cast<double>(i) + 1.0) / n - f,
                                 f - static_cast<double>(i) / n));
    }
    const double sqrt_n = std::sqrt(n);
    return kolmogorov_tail(d * (sqrt_n + 0.12 + 0.11 / sqrt_n));
}

/// Two-sample KS p-value.
inline double ks_two_sample_pvalue(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j]) {
            ++i;
        } else {
            ++j;
        }
        d = std::max(d, std::fabs(static_cast<double>(i) / na -
                                  static_cast<double>(j) / nb));
    }
    const double ne = std::sqrt(na * nb / (na + nb));
    return kolmogorov_tail(d * (ne + 0.12 + 0.11 / ne));
}

inline double pearson_correlation(const std::vector<double>& a,
                                  const std::vector<double>& b) {
    if (a.size() != b.size() || a.size() < 2) {
        throw std::invalid_argument("correlation: need equal sizes >= 2");
    }
    const double n = static_cast<double>(a.size());
    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= n;
    mb /= n;
    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sab += (a[i] - ma) * (b[i] - mb);
        saa += (a[i] - ma) * (a[i] - ma);
        sbb += (b[i] - mb) * (b[i] - mb);
    }
    return sab / std::sqrt(saa * sbb);
}

inline double sample_variance(const std::vector<double>& v) {
    if (v.size() < 2) throw std::invalid_argument("variance: need >= 2 samples");
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double acc = 0.0;
    for (double x : v) acc += (x - mean) * (x - mean);
    return acc / (static_cast<double>(v.size()) - 1.0);
}

}  // namespace checks
