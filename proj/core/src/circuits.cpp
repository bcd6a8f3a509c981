#include "dualflow/circuits.hpp"

#include <algorithm>
#include <sstream>

#include "dualflow/error.hpp"
#include "dualflow/polyhedron.hpp"

namespace dualflow {

namespace {

constexpr std::size_t kMaxPartitionNodes = 24;

// Bounding edges for a move along +g (into S) or -g (out of S).
bool bounds(const Edge& edge, const std::vector<bool>& in_s, Sign sign) {
  return sign == Sign::Plus ? (!in_s[edge.tail] && in_s[edge.head])
                            : (in_s[edge.tail] && !in_s[edge.head]);
}

struct MinSlack {
  std::optional<Rational> epsilon;
  TightEdgeSet argmin;

  void offer(Rational s, EdgeIndex e) {
    if (!epsilon || s < *epsilon) {
      epsilon = std::move(s);
      argmin.assign(1, e);
    } else if (s == *epsilon) {
      argmin.push_back(e);
    }
  }
};

}  // namespace

PartitionCircuit::PartitionCircuit(std::vector<NodeId> s_set) : s_set_(std::move(s_set)) {
  std::sort(s_set_.begin(), s_set_.end());
  s_set_.erase(std::unique(s_set_.begin(), s_set_.end()), s_set_.end());
  if (s_set_.empty()) throw Error(ErrorCode::ValidationError, "circuit S side is empty");
  if (s_set_.front() == kAnchor) throw Error(ErrorCode::ValidationError, "anchor node must lie in R");
}

bool PartitionCircuit::contains(NodeId v) const {
  return std::binary_search(s_set_.begin(), s_set_.end(), v);
}

std::vector<bool> PartitionCircuit::mask(std::size_t node_count) const {
  std::vector<bool> m(node_count, false);
  for (NodeId v : s_set_) {
    if (v >= node_count) throw Error(ErrorCode::ValidationError, "circuit node out of range");
    m[v] = true;
  }
  return m;
}

std::string PartitionCircuit::str() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s_set_.size(); ++i) {
    if (i) os << ',';
    os << s_set_[i];
  }
  os << '}';
  return os.str();
}

std::strong_ordering operator<=>(const PartitionCircuit& a, const PartitionCircuit& b) {
  if (auto c = a.s_set_.size() <=> b.s_set_.size(); c != 0) return c;
  return a.s_set_ <=> b.s_set_;
}

bool is_valid_partition(const Digraph& graph, const PartitionCircuit& circuit) {
  if (circuit.s_set().back() >= graph.node_count()) return false;
  std::vector<bool> s = circuit.mask(graph.node_count());
  if (!induces_connected(graph, s)) return false;
  s.flip();
  return induces_connected(graph, s);
}

std::pair<PartitionCircuit, Sign> raise_side(const std::vector<bool>& in_s) {
  std::vector<NodeId> side;
  const bool anchor_in_s = in_s[kAnchor];
  for (NodeId v = 0; v < in_s.size(); ++v) {
    if (in_s[v] != anchor_in_s) side.push_back(v);
  }
  return {PartitionCircuit(std::move(side)), anchor_in_s ? Sign::Minus : Sign::Plus};
}

std::vector<PartitionCircuit> enumerate_partitions(const Digraph& graph) {
  const std::size_t n = graph.node_count();
  if (n > kMaxPartitionNodes) {
    throw Error(ErrorCode::InstanceTooLarge, "partition enumeration limited to " +
                                                 std::to_string(kMaxPartitionNodes) + " nodes");
  }
  std::vector<PartitionCircuit> result;
  std::vector<bool> mask(n, false);
  std::vector<NodeId> members;
  // Combinations of {1..n-1} of each size, lexicographic within a size.
  auto combine = [&](auto&& self, NodeId next, std::size_t remaining) -> void {
    if (remaining == 0) {
      std::vector<bool> complement(mask);
      complement.flip();
      if (induces_connected(graph, mask) && induces_connected(graph, complement)) {
        result.emplace_back(members);
      }
      return;
    }
    for (NodeId v = next; v + remaining <= n; ++v) {
      mask[v] = true;
      members.push_back(v);
      self(self, v + 1, remaining - 1);
      members.pop_back();
      mask[v] = false;
    }
  };
  for (std::size_t k = 1; k < n; ++k) combine(combine, 1, k);
  return result;
}

std::vector<Rational> circuit_vector(const PartitionCircuit& circuit, std::size_t node_count) {
  std::vector<Rational> g(node_count);
  for (NodeId v : circuit.s_set()) {
    if (v >= node_count) throw Error(ErrorCode::ValidationError, "circuit node out of range");
    g[v] = 1;
  }
  return g;
}

SignedStep max_step(const Network& network, const Point& u, const PartitionCircuit& circuit, Sign sign) {
  if (!is_feasible(network, u)) throw Error(ErrorCode::InfeasiblePoint, "point " + u.str() + " is infeasible");
  const std::vector<bool> in_s = circuit.mask(network.node_count());
  MinSlack best;
  for (EdgeIndex e = 0; e < network.edge_count(); ++e) {
    if (bounds(network.edge(e), in_s, sign)) best.offer(slack(network, u, e), e);
  }
  const std::string what = "circuit " + circuit.str() + " sign " + sign_char(sign);
  if (!best.epsilon) throw Error(ErrorCode::UnboundedDirection, what + " is an unbounded direction");
  if (best.epsilon->is_zero()) throw Error(ErrorCode::NotApplicable, what + " is not applicable");
  return SignedStep{circuit, sign, std::move(*best.epsilon), std::move(best.argmin)};
}

Point move_along(const Point& u, const PartitionCircuit& circuit, Sign sign, const Rational& amount) {
  std::vector<Rational> coords = u.coords();
  for (NodeId v : circuit.s_set()) {
    if (sign == Sign::Plus) {
      coords.at(v) += amount;
    } else {
      coords.at(v) -= amount;
    }
  }
  return Point(std::move(coords));
}

Point apply_circuit_step(const Network& network, const Point& u, const SignedStep& step) {
  SignedStep fresh = [&] {
    try {
      return max_step(network, u, step.circuit, step.sign);
    } catch (const Error& e) {
      throw Error(ErrorCode::StaleStep, std::string("step does not apply at ") + u.str() + ": " + e.what());
    }
  }();
  if (fresh.epsilon != step.epsilon || fresh.entering_edges != step.entering_edges) {
    throw Error(ErrorCode::StaleStep, "step length " + step.epsilon.str() + " differs from maximal " +
                                          fresh.epsilon.str() + " at " + u.str());
  }
  return move_along(u, step.circuit, step.sign, step.epsilon);
}

std::optional<Displacement> displacement(const Point& u, const Point& v) {
  if (u.size() != v.size()) return std::nullopt;
  std::vector<NodeId> support;
  std::optional<Rational> value;
  for (NodeId i = 0; i < u.size(); ++i) {
    Rational d = v[i] - u[i];
    if (d.is_zero()) continue;
    if (value && d != *value) return std::nullopt;
    value = std::move(d);
    support.push_back(i);
  }
  if (!value) return std::nullopt;
  const Sign sign = value->sign() > 0 ? Sign::Plus : Sign::Minus;
  return Displacement{PartitionCircuit(std::move(support)), sign, value->abs()};
}

CircuitTable::CircuitTable(const Digraph& graph) : circuits_(enumerate_partitions(graph)) {
  into_s_.resize(circuits_.size());
  out_of_s_.resize(circuits_.size());
  for (std::size_t i = 0; i < circuits_.size(); ++i) {
    const std::vector<bool> in_s = circuits_[i].mask(graph.node_count());
    for (EdgeIndex e = 0; e < graph.edge_count(); ++e) {
      if (bounds(graph.edge(e), in_s, Sign::Plus)) into_s_[i].push_back(e);
      if (bounds(graph.edge(e), in_s, Sign::Minus)) out_of_s_[i].push_back(e);
    }
  }
}

std::optional<SignedStep> CircuitTable::try_step(const Network& network, const Point& u, std::size_t i,
                                                 Sign sign) const {
  const auto& crossing = sign == Sign::Plus ? into_s_[i] : out_of_s_[i];
  MinSlack best;
  for (EdgeIndex e : crossing) {
    Rational s = slack(network, u, e);
    if (s.is_zero()) return std::nullopt;
    best.offer(std::move(s), e);
  }
  if (!best.epsilon) return std::nullopt;
  return SignedStep{circuits_[i], sign, std::move(*best.epsilon), std::move(best.argmin)};
}

}  // namespace dualflow
