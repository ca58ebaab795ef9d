#include <algorithm>
#include <cmath>
#include <limits>

#include "bibnet/error.hpp"
#include "bibnet/graph_stats.hpp"

namespace bibnet {

namespace {

constexpr double kAlphaLow = 1.0 + 1e-9;
constexpr double kAlphaHigh = 20.0;
// Gaps between observed values up to this width are bridged by summing the
// skipped terms instead of a fresh zeta evaluation.
constexpr std::uint64_t kMaxBridge = 64;

/// Mean log-likelihood per tail sample of a discrete power law with
/// exponent alpha and lower cutoff xmin.
double mean_log_likelihood(double alpha, double mean_log, double xmin) {
  return -alpha * mean_log - std::log(hurwitz_zeta(alpha, xmin));
}

double max_likelihood_alpha(double mean_log, double xmin) {
  // The log-likelihood is concave in alpha, so golden-section search finds
  // the unique maximum.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = kAlphaLow, hi = kAlphaHigh;
  double a = hi - inv_phi * (hi - lo), b = lo + inv_phi * (hi - lo);
  double fa = mean_log_likelihood(a, mean_log, xmin);
  double fb = mean_log_likelihood(b, mean_log, xmin);
  while (hi - lo > 1e-10) {
    if (fa < fb) {
      lo = a;
      a = b;
      fa = fb;
      b = lo + inv_phi * (hi - lo);
      fb = mean_log_likelihood(b, mean_log, xmin);
    } else {
      hi = b;
      b = a;
      fb = fa;
      a = hi - inv_phi * (hi - lo);
      fa = mean_log_likelihood(a, mean_log, xmin);
    }
  }
  return (lo + hi) / 2.0;
}

}  // namespace

double hurwitz_zeta(double s, double q) {
  // Euler-Maclaurin: direct sum of the first terms, then the integral,
  // half-term and Bernoulli corrections at a = q + N.
  static constexpr double kBernoulli[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30,
                                          5.0 / 66, -691.0 / 2730, 7.0 / 6};
  constexpr int kDirect = 10;
  double sum = 0;
  for (int k = 0; k < kDirect; ++k) sum += std::pow(q + k, -s);
  const double a = q + kDirect;
  sum += std::pow(a, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(a, -s);
  double rising = s;                   // s (s+1) ... (s+2j-2)
  double power = std::pow(a, -s - 1);  // a^(-s-2j+1)
  double factorial = 2;                // (2j)!
  for (int j = 1; j <= 7; ++j) {
    sum += kBernoulli[j - 1] / factorial * rising * power;
    rising *= (s + 2 * j - 1) * (s + 2 * j);
    power /= a * a;
    factorial *= (2 * j + 1) * (2 * j + 2);
  }
  return sum;
}

PowerLawFit fit_power_law(std::span<const std::uint64_t> degrees, const PowerLawOptions& options) {
  if (degrees.size() < std::max<std::size_t>(options.min_samples, 2)) {
    throw DegenerateError("power-law fit needs at least " + std::to_string(options.min_samples) +
                          " samples");
  }
  std::vector<std::uint64_t> sorted(degrees.begin(), degrees.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() == 0) throw DegenerateError("power-law fit needs positive samples");
  if (sorted.front() == sorted.back()) throw DegenerateError("power-law fit of a constant sample");

  std::vector<std::uint64_t> value;
  std::vector<double> count;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    value.push_back(sorted[i]);
    count.push_back(static_cast<double>(j - i));
    i = j;
  }
  const std::size_t m = value.size();
  // Tail counts and log sums from each distinct value upward. Built from
  // per-value terms so a uniformly replicated sample scales them exactly.
  std::vector<double> tail_n(m + 1, 0.0), tail_log(m + 1, 0.0);
  for (std::size_t i = m; i-- > 0;) {
    tail_n[i] = tail_n[i + 1] + count[i];
    tail_log[i] = tail_log[i + 1] + count[i] * std::log(static_cast<double>(value[i]));
  }

  PowerLawFit best;
  best.ks_statistic = std::numeric_limits<double>::infinity();
  best.n_samples = degrees.size();
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (tail_n[i] < static_cast<double>(options.min_tail)) break;
    const double xmin = static_cast<double>(value[i]);
    const double alpha = max_likelihood_alpha(tail_log[i] / tail_n[i], xmin);
    const double norm = hurwitz_zeta(alpha, xmin);

    // Walk the observed values keeping z = zeta(alpha, value[j]). Between
    // observed values the empirical CDF is flat, so the supremum is reached
    // at x = value[j] or at x = value[j+1] - 1.
    auto advance = [&](double z, std::uint64_t from, std::uint64_t to) {
      if (to - from > kMaxBridge) return hurwitz_zeta(alpha, static_cast<double>(to));
      for (auto y = from; y < to; ++y) z -= std::pow(static_cast<double>(y), -alpha);
      return z;
    };
    double ks = 0;
    double z = norm;
    for (std::size_t j = i; j < m; ++j) {
      const double above = tail_n[j + 1] / tail_n[i];  // empirical P(X > value[j])
      const double at_value = (z - std::pow(static_cast<double>(value[j]), -alpha)) / norm;
      ks = std::max(ks, std::abs(above - at_value));
      if (j + 1 < m) {
        z = advance(z, value[j], value[j + 1]);
        ks = std::max(ks, std::abs(above - z / norm));
      }
    }
    if (ks < best.ks_statistic) {
      best.ks_statistic = ks;
      best.gamma = alpha;
      best.xmin = value[i];
      best.n_tail = static_cast<std::size_t>(tail_n[i]);
    }
  }
  if (!std::isfinite(best.ks_statistic)) {
    throw DegenerateError("power-law fit: no cutoff leaves enough tail samples");
  }
  return best;
}

}  // namespace bibnet
