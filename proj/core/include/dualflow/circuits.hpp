#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dualflow/network.hpp"

namespace dualflow {

enum class Sign { Plus, Minus };

inline Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

/// Circuit direction g given by a node bipartition V = R + S, stored through
/// its S side: g_i = 1 on S, 0 on R. The anchor always lies in R.
class PartitionCircuit {
 public:
  /// Sorts and deduplicates; throws ValidationError if empty or containing the anchor.
  explicit PartitionCircuit(std::vector<NodeId> s_set);

  const std::vector<NodeId>& s_set() const { return s_set_; }
  bool contains(NodeId v) const;
  std::vector<bool> mask(std::size_t node_count) const;

  /// "{1,3}"
  std::string str() const;

  /// Shortlex: smaller sets first, then lexicographic by sorted members.
  friend std::strong_ordering operator<=>(const PartitionCircuit& a, const PartitionCircuit& b);
  friend bool operator==(const PartitionCircuit&, const PartitionCircuit&) = default;

 private:
  std::vector<NodeId> s_set_;
};

/// Both sides nonempty and connected in the underlying undirected graph.
bool is_valid_partition(const Digraph& graph, const PartitionCircuit& circuit);

/// Canonical (circuit, sign) for the move that raises the nodes marked in
/// `in_s` relative to the rest: (S, Plus) if the anchor is unmarked,
/// otherwise (R, Minus).
std::pair<PartitionCircuit, Sign> raise_side(const std::vector<bool>& in_s);

struct SignedStep {
  PartitionCircuit circuit;
  Sign sign;
  Rational epsilon;
  TightEdgeSet entering_edges;
};

/// All valid partitions in shortlex order of their S sides.
std::vector<PartitionCircuit> enumerate_partitions(const Digraph& graph);

/// g with g_i = 1 for i in S, else 0.
std::vector<Rational> circuit_vector(const PartitionCircuit& circuit, std::size_t node_count);

/// Maximal feasible move from u along +g or -g. The bounding edges are those
/// leaving R into S for Plus and leaving S into R for Minus.
/// Throws NotApplicable when some bounding edge is already tight and
/// UnboundedDirection when no edge bounds the move.
SignedStep max_step(const Network& network, const Point& u, const PartitionCircuit& circuit, Sign sign);

/// u + epsilon*g (Plus) or u - epsilon*g (Minus). Throws StaleStep when the
/// step is not the maximal step at u.
Point apply_circuit_step(const Network& network, const Point& u, const SignedStep& step);

/// u + amount*g or u - amount*g with no feasibility checks.
Point move_along(const Point& u, const PartitionCircuit& circuit, Sign sign, const Rational& amount);

/// v - u written as sign * amount * g with amount > 0, when the difference
/// is constant on its support. The support is not checked for connectivity.
struct Displacement {
  PartitionCircuit circuit;
  Sign sign;
  Rational amount;
};
std::optional<Displacement> displacement(const Point& u, const Point& v);

/// Partitions of one graph with their crossing edges precomputed; used by
/// the breadth-first oracles, which call max_step many times per point.
class CircuitTable {
 public:
  explicit CircuitTable(const Digraph& graph);

  std::size_t size() const { return circuits_.size(); }
  const PartitionCircuit& circuit(std::size_t i) const { return circuits_[i]; }
  const std::vector<PartitionCircuit>& circuits() const { return circuits_; }

  /// Same contract as max_step, but returns nullopt instead of throwing
  /// NotApplicable / UnboundedDirection.
  std::optional<SignedStep> try_step(const Network& network, const Point& u, std::size_t i,
                                     Sign sign) const;

  /// Edges that limit a move along circuit i with the given sign.
  const std::vector<EdgeIndex>& bounding_edges(std::size_t i, Sign sign) const {
    return sign == Sign::Plus ? into_s_[i] : out_of_s_[i];
  }

 private:
  std::vector<PartitionCircuit> circuits_;
  std::vector<std::vector<EdgeIndex>> into_s_;
  std::vector<std::vector<EdgeIndex>> out_of_s_;
};

}  // namespace dualflow
