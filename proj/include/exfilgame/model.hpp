#ifndef EXFILGAME_MODEL_HPP
#define EXFILGAME_MODEL_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "exfilgame/errors.hpp"

namespace exfilgame {

enum class NodeRole { source, internal, sink };

struct NodeSpec {
  std::string id;
  NodeRole role = NodeRole::internal;

  bool operator==(const NodeSpec&) const = default;
};

/// Traffic distribution on a link. Tagged by family so that other families
/// can be added later; only Normal is implemented and anything else is
/// rejected at load time.
enum class DistFamily { normal };

struct Distribution {
  DistFamily family = DistFamily::normal;
  double mean = 0.0;
  double stddev = 1.0;

  bool operator==(const Distribution&) const = default;
};

/// A directed link. Multiplicities count how many identical device pairs the
/// link stands for; they scale the defender's false-positive exposure but do
/// not affect the attacker's route.
struct LinkSpec {
  std::string id;
  std::string src;
  std::string dest;
  Distribution distribution;
  int src_multiplicity = 1;
  int dest_multiplicity = 1;
  std::vector<double> allowed_thresholds;

  bool operator==(const LinkSpec&) const = default;
};

struct NetworkSpec {
  std::vector<NodeSpec> nodes;
  std::vector<LinkSpec> links;

  bool operator==(const NetworkSpec&) const = default;

  const NodeSpec* find_node(std::string_view id) const {
    for (const auto& n : nodes)
      if (n.id == id) return &n;
    return nullptr;
  }

  /// Index of a link by id; throws ValidationError if absent.
  std::size_t link_index(std::string_view id) const {
    for (std::size_t i = 0; i < links.size(); ++i)
      if (links[i].id == id) return i;
    throw ValidationError("unknown link '" + std::string(id) + "'");
  }

  const LinkSpec& link(std::string_view id) const { return links[link_index(id)]; }
};

/// An exfiltration route: an ordered chain of link ids from a source node to
/// a sink node, visiting no node twice.
struct Route {
  std::vector<std::string> link_ids;

  bool operator==(const Route&) const = default;
};

struct AttackerStrategy {
  std::size_t route_index = 0;
  int duration = 1;  // rounds, >= 1

  bool operator==(const AttackerStrategy&) const = default;
};

/// One threshold multiplier per network link, in link-declaration order.
struct DefenderStrategy {
  std::vector<double> thresholds;

  bool operator==(const DefenderStrategy&) const = default;

  double threshold_for(const NetworkSpec& net, std::string_view link_id) const {
    return thresholds.at(net.link_index(link_id));
  }
};

namespace detail {

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw ValidationError(msg);
}

}  // namespace detail

std::vector<Route> enumerate_routes(const NetworkSpec& spec);

/// Checks every model invariant and that at least one source-to-sink route
/// exists. Returns its argument so call sites can chain.
inline const NetworkSpec& validate_network(const NetworkSpec& spec) {
  using detail::require;

  std::unordered_set<std::string_view> node_ids;
  bool has_source = false;
  bool has_sink = false;
  for (const auto& n : spec.nodes) {
    require(!n.id.empty(), "node with empty id");
    require(node_ids.insert(n.id).second, "duplicate node id '" + n.id + "'");
    has_source = has_source || n.role == NodeRole::source;
    has_sink = has_sink || n.role == NodeRole::sink;
  }
  require(has_source, "network has no source node");
  require(has_sink, "network has no sink node");

  std::unordered_set<std::string_view> link_ids;
  for (const auto& l : spec.links) {
    require(!l.id.empty(), "link with empty id");
    require(link_ids.insert(l.id).second, "duplicate link id '" + l.id + "'");
    require(node_ids.count(l.src) > 0, "link '" + l.id + "': unknown src node '" + l.src + "'");
    require(node_ids.count(l.dest) > 0,
            "link '" + l.id + "': unknown dest node '" + l.dest + "'");
    require(l.src != l.dest, "link '" + l.id + "': src equals dest");
    require(l.src_multiplicity >= 1, "link '" + l.id + "': src multiplicity must be >= 1");
    require(l.dest_multiplicity >= 1, "link '" + l.id + "': dest multiplicity must be >= 1");
    require(std::isfinite(l.distribution.mean), "link '" + l.id + "': non-finite mean");
    require(std::isfinite(l.distribution.stddev) && l.distribution.stddev > 0.0,
            "link '" + l.id + "': non-positive sigma");
    require(!l.allowed_thresholds.empty(), "link '" + l.id + "': empty threshold list");
    for (std::size_t i = 0; i < l.allowed_thresholds.size(); ++i) {
      require(std::isfinite(l.allowed_thresholds[i]),
              "link '" + l.id + "': non-finite threshold");
      if (i > 0)
        require(l.allowed_thresholds[i - 1] < l.allowed_thresholds[i],
                "link '" + l.id + "': thresholds not strictly increasing");
    }
  }

  require(!enumerate_routes(spec).empty(), "no route source->sink");
  return spec;
}

namespace detail {

struct RouteSearch {
  const NetworkSpec& net;
  // adjacency: outgoing link indices per node id, sorted by link id
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> node_of_src;   // per link
  std::vector<std::size_t> node_of_dest;  // per link
  std::vector<Route> found;
  std::vector<std::string> path;
  std::vector<bool> visited;  // per node index

  explicit RouteSearch(const NetworkSpec& n) : net(n) {
    auto node_index = [&](std::string_view id) {
      for (std::size_t i = 0; i < net.nodes.size(); ++i)
        if (net.nodes[i].id == id) return i;
      throw ValidationError("link endpoint names unknown node '" + std::string(id) + "'");
    };
    out.resize(net.nodes.size());
    node_of_src.resize(net.links.size());
    node_of_dest.resize(net.links.size());
    for (std::size_t li = 0; li < net.links.size(); ++li) {
      node_of_src[li] = node_index(net.links[li].src);
      node_of_dest[li] = node_index(net.links[li].dest);
      out[node_of_src[li]].push_back(li);
    }
    for (auto& adj : out)
      std::sort(adj.begin(), adj.end(), [&](std::size_t a, std::size_t b) {
        return net.links[a].id < net.links[b].id;
      });
    visited.assign(net.nodes.size(), false);
  }

  void dfs(std::size_t node) {
    visited[node] = true;
    if (!path.empty() && net.nodes[node].role == NodeRole::sink)
      found.push_back(Route{path});
    for (std::size_t li : out[node]) {
      if (visited[node_of_dest[li]]) continue;
      path.push_back(net.links[li].id);
      dfs(node_of_dest[li]);
      path.pop_back();
    }
    visited[node] = false;
  }
};

}  // namespace detail

/// All simple source-to-sink paths, ordered lexicographically by their link-id
/// sequence. Deterministic; duplicate-free by construction.
inline std::vector<Route> enumerate_routes(const NetworkSpec& spec) {
  detail::RouteSearch search(spec);
  for (std::size_t ni = 0; ni < spec.nodes.size(); ++ni)
    if (spec.nodes[ni].role == NodeRole::source) search.dfs(ni);
  std::sort(search.found.begin(), search.found.end(),
            [](const Route& a, const Route& b) { return a.link_ids < b.link_ids; });
  return search.found;
}

/// Both players' finite strategy grids plus the route list the attacker
/// strategies index into.
struct StrategySpaces {
  std::vector<Route> routes;
  std::vector<AttackerStrategy> attacker;
  std::vector<DefenderStrategy> defender;
};

inline constexpr std::size_t kDefaultDefenderSpaceCap = 100000;

/// Attacker space is routes x durations (route-major); defender space is the
/// Cartesian product of per-link threshold lists in link-declaration order,
/// odometer style with the last link cycling fastest.
inline StrategySpaces build_strategy_spaces(const NetworkSpec& spec,
                                            const std::vector<int>& durations,
                                            std::size_t defender_cap = kDefaultDefenderSpaceCap) {
  using detail::require;
  require(!durations.empty(), "duration list is empty");
  for (std::size_t i = 0; i < durations.size(); ++i) {
    require(durations[i] >= 1, "durations must be positive");
    if (i > 0) require(durations[i - 1] < durations[i], "durations not strictly increasing");
  }

  StrategySpaces spaces;
  spaces.routes = enumerate_routes(spec);
  require(!spaces.routes.empty(), "no route source->sink");

  spaces.attacker.reserve(spaces.routes.size() * durations.size());
  for (std::size_t r = 0; r < spaces.routes.size(); ++r)
    for (int n : durations) spaces.attacker.push_back(AttackerStrategy{r, n});

  std::uint64_t size = 1;
  bool overflow = false;
  for (const auto& l : spec.links) {
    size *= static_cast<std::uint64_t>(l.allowed_thresholds.size());
    if (size > (std::uint64_t{1} << 40)) {  // early out long before materializing
      overflow = true;
      break;
    }
  }
  if (overflow || size > defender_cap)
    throw CapacityError("strategy space too large: defender space has " +
                        (overflow ? std::string("more than 2^40") : std::to_string(size)) +
                        " strategies, cap is " + std::to_string(defender_cap));

  spaces.defender.reserve(size);
  std::vector<std::size_t> idx(spec.links.size(), 0);
  while (true) {
    DefenderStrategy s;
    s.thresholds.reserve(spec.links.size());
    for (std::size_t li = 0; li < spec.links.size(); ++li)
      s.thresholds.push_back(spec.links[li].allowed_thresholds[idx[li]]);
    spaces.defender.push_back(std::move(s));

    std::size_t pos = spec.links.size();
    while (pos > 0) {
      --pos;
      if (++idx[pos] < spec.links[pos].allowed_thresholds.size()) break;
      idx[pos] = 0;
      if (pos == 0) return spaces;
    }
    if (spec.links.empty()) return spaces;  // unreachable for validated networks
  }
}

}  // namespace exfilgame

#endif  // EXFILGAME_MODEL_HPP
