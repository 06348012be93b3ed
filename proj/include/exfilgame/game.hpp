#ifndef EXFILGAME_GAME_HPP
#define EXFILGAME_GAME_HPP

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "exfilgame/analytics.hpp"
#include "exfilgame/errors.hpp"
#include "exfilgame/matrix.hpp"
#include "exfilgame/model.hpp"

namespace exfilgame {

/// The bimatrix game. Rows are attacker strategies, columns are defender
/// strategies. attacker_reward holds expected exfiltrated data; defender_cost
/// holds expected total cost (sign convention: costs, never negated here).
struct PayoffMatrices {
  Matrix attacker_reward;
  Matrix defender_cost;
  std::vector<AttackerStrategy> row_labels;
  std::vector<DefenderStrategy> col_labels;
  std::vector<Route> routes;
};

/// Fills both payoff matrices cell by cell from the analytics formulas.
/// Every cell equals an independent per_round_undetected / attacker_reward /
/// defender_total_cost evaluation for its strategy pair.
inline PayoffMatrices build_payoffs(const NetworkSpec& net, const EconomicParams& econ,
                                    const StrategySpaces& spaces) {
  PayoffMatrices pm;
  pm.row_labels = spaces.attacker;
  pm.col_labels = spaces.defender;
  pm.routes = spaces.routes;

  const std::size_t m = spaces.attacker.size();
  const std::size_t n = spaces.defender.size();
  pm.attacker_reward = Matrix(m, n);
  pm.defender_cost = Matrix(m, n);

  // Base cost depends only on the defender column.
  std::vector<double> base(n);
  for (std::size_t j = 0; j < n; ++j)
    base[j] = defender_base_cost(net, spaces.defender[j], econ);

  std::vector<std::vector<std::size_t>> route_links;
  route_links.reserve(spaces.routes.size());
  for (const auto& r : spaces.routes) route_links.push_back(detail::resolve_route(net, r));

  for (std::size_t i = 0; i < m; ++i) {
    const AttackerStrategy& a = spaces.attacker[i];
    const auto& links = route_links[a.route_index];
    const double dur = static_cast<double>(a.duration);
    const double rate = econ.data_size / dur;
    for (std::size_t j = 0; j < n; ++j) {
      const double p = detail::round_undetected_core(
          net, links, spaces.defender[j].thresholds, rate);
      const double gsum = geometric_partial_sum(p, a.duration);
      pm.attacker_reward(i, j) = econ.data_size / dur * gsum;
      pm.defender_cost(i, j) = base[j] + econ.data_loss_cost * gsum;
    }
  }
  return pm;
}

namespace detail {

inline void check_mixture(std::span<const double> mix, std::size_t expected,
                          const char* side) {
  if (mix.size() != expected)
    throw ValidationError(std::string(side) + " mixture has wrong dimension");
  long double sum = 0.0L;
  for (double v : mix) {
    if (v < 0.0) throw ValidationError(std::string(side) + " mixture has negative entry");
    sum += v;
  }
  if (std::fabs(static_cast<double>(sum) - 1.0) > 1e-9)
    throw ValidationError(std::string(side) + " mixture does not sum to 1");
}

}  // namespace detail

/// Best pure row against a defender mixture: (row index, expected reward).
/// Ties go to the lowest row index.
inline std::pair<std::size_t, double> best_response_attacker(
    const PayoffMatrices& pm, std::span<const double> defender_mixed) {
  detail::check_mixture(defender_mixed, pm.attacker_reward.cols, "defender");
  std::size_t best = 0;
  double best_value = 0.0;
  for (std::size_t i = 0; i < pm.attacker_reward.rows; ++i) {
    long double v = 0.0L;
    const double* row = pm.attacker_reward.row(i);
    for (std::size_t j = 0; j < pm.attacker_reward.cols; ++j) v += row[j] * defender_mixed[j];
    const double value = static_cast<double>(v);
    if (i == 0 || value > best_value) {
      best = i;
      best_value = value;
    }
  }
  return {best, best_value};
}

/// Best pure column against an attacker mixture: (column index, expected
/// cost). Ties go to the lowest column index.
inline std::pair<std::size_t, double> best_response_defender(
    const PayoffMatrices& pm, std::span<const double> attacker_mixed) {
  detail::check_mixture(attacker_mixed, pm.defender_cost.rows, "attacker");
  std::size_t best = 0;
  double best_value = 0.0;
  for (std::size_t j = 0; j < pm.defender_cost.cols; ++j) {
    long double v = 0.0L;
    for (std::size_t i = 0; i < pm.defender_cost.rows; ++i)
      v += pm.defender_cost(i, j) * attacker_mixed[i];
    const double value = static_cast<double>(v);
    if (j == 0 || value < best_value) {
      best = j;
      best_value = value;
    }
  }
  return {best, best_value};
}

}  // namespace exfilgame

#endif  // EXFILGAME_GAME_HPP
