#ifndef EXFILGAME_ANALYTICS_HPP
#define EXFILGAME_ANALYTICS_HPP

#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "exfilgame/errors.hpp"
#include "exfilgame/model.hpp"

namespace exfilgame {

/// Economic side of a scenario. discount is the per-round factor applied to
/// the defender's ongoing inspection costs over an infinite horizon.
struct EconomicParams {
  double data_size = 0.0;       // D, total exfiltratable data (traffic units)
  double inspection_cost = 0.0; // per alert
  double data_loss_cost = 0.0;  // per unit of expected-loss sum
  double discount = 0.99;       // delta in (0,1)

  bool operator==(const EconomicParams&) const = default;
};

inline const EconomicParams& validate_economics(const EconomicParams& e) {
  using detail::require;
  require(std::isfinite(e.data_size) && e.data_size > 0.0, "data_size must be > 0");
  require(std::isfinite(e.inspection_cost) && e.inspection_cost >= 0.0,
          "inspection_cost must be >= 0");
  require(std::isfinite(e.data_loss_cost) && e.data_loss_cost >= 0.0,
          "data_loss_cost must be >= 0");
  require(std::isfinite(e.discount) && e.discount > 0.0 && e.discount < 1.0,
          "discount must be in (0,1)");
  return e;
}

/// Probability that one exfiltration round goes unnoticed on every route link.
struct RoundProbability {
  double value = 0.0;
};

/// Standard normal CDF. erfc keeps the lower tail accurate; absolute error is
/// well under 1e-12 across the range.
inline double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

inline double distribution_cdf(const Distribution& dist, double x) {
  if (!std::isfinite(x)) throw ValidationError("cdf evaluated at non-finite x");
  switch (dist.family) {
    case DistFamily::normal:
      return normal_cdf((x - dist.mean) / dist.stddev);
  }
  throw ValidationError("unsupported distribution family");
}

namespace detail {

/// Shared core for the per-round probability so the payoff-matrix builder and
/// the public entry point produce bit-identical values.
inline double round_undetected_core(const NetworkSpec& net,
                                    std::span<const std::size_t> route_links,
                                    std::span<const double> thresholds, double rate) {
  double p = 1.0;
  for (std::size_t li : route_links) {
    const LinkSpec& l = net.links[li];
    const double t = thresholds[li];
    p *= distribution_cdf(l.distribution,
                          l.distribution.mean + t * l.distribution.stddev - rate);
  }
  return p;
}

inline std::vector<std::size_t> resolve_route(const NetworkSpec& net, const Route& route) {
  std::vector<std::size_t> idx;
  idx.reserve(route.link_ids.size());
  for (const auto& id : route.link_ids) idx.push_back(net.link_index(id));
  return idx;
}

}  // namespace detail

/// P(one round undetected) = prod over route links of
/// cdf(dist_l, mu_l + T_l*sigma_l - D/n).
inline RoundProbability per_round_undetected(const Route& route,
                                             const DefenderStrategy& thresholds,
                                             double data_size, int duration,
                                             const NetworkSpec& net) {
  detail::require(duration >= 1, "duration must be >= 1");
  const auto links = detail::resolve_route(net, route);
  const double rate = data_size / static_cast<double>(duration);
  return RoundProbability{
      detail::round_undetected_core(net, links, thresholds.thresholds, rate)};
}

/// Sum_{i=1..n} p^i, closed form. Values within 1e-15 of p = 1 take the exact
/// n branch to dodge cancellation in (1 - p^n)/(1 - p).
inline double geometric_partial_sum(double p, int n) {
  detail::require(p >= 0.0 && p <= 1.0, "probability out of [0,1]");
  detail::require(n >= 1, "n must be >= 1");
  if (1.0 - p <= 1e-15) return static_cast<double>(n);
  if (p == 0.0) return 0.0;
  return p * (1.0 - std::pow(p, static_cast<double>(n))) / (1.0 - p);
}

/// E[R_att] = (D/n) * sum_{i=1..n} p^i. Bounded by [0, D].
inline double attacker_reward(const Route& route, const DefenderStrategy& thresholds,
                              const EconomicParams& econ, int duration,
                              const NetworkSpec& net) {
  const double p = per_round_undetected(route, thresholds, econ.data_size, duration, net).value;
  return econ.data_size / static_cast<double>(duration) * geometric_partial_sum(p, duration);
}

/// E[C_base] = C_insp * sum_l |l_src||l_dest| (1 - cdf(dist_l, mu_l + T_l sigma_l))
///             / (1 - delta).
inline double defender_base_cost(const NetworkSpec& net, const DefenderStrategy& thresholds,
                                 const EconomicParams& econ) {
  detail::require(thresholds.thresholds.size() == net.links.size(),
                  "threshold assignment does not cover every link");
  double sum = 0.0;
  for (std::size_t li = 0; li < net.links.size(); ++li) {
    const LinkSpec& l = net.links[li];
    const double t = thresholds.thresholds[li];
    const double exceed =
        1.0 - distribution_cdf(l.distribution,
                               l.distribution.mean + t * l.distribution.stddev);
    sum += static_cast<double>(l.src_multiplicity) *
           static_cast<double>(l.dest_multiplicity) * exceed;
  }
  return econ.inspection_cost * sum / (1.0 - econ.discount);
}

/// E[C_total] = E[C_base] + C_data * sum_{i=1..n} p^i.
inline double defender_total_cost(const Route& route, const DefenderStrategy& thresholds,
                                  const EconomicParams& econ, int duration,
                                  const NetworkSpec& net) {
  const double p = per_round_undetected(route, thresholds, econ.data_size, duration, net).value;
  return defender_base_cost(net, thresholds, econ) +
         econ.data_loss_cost * geometric_partial_sum(p, duration);
}

}  // namespace exfilgame

#endif  // EXFILGAME_ANALYTICS_HPP
