#include "circuit_search.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "dualflow/error.hpp"

namespace dualflow::detail {

// Maximal step lengths are slacks, so every point reachable from a point of
// the lattice (1/L)Z^V stays on it when L clears all cost denominators. The
// search runs on coordinates scaled by L: int64 first, GMP on overflow.

namespace {

struct Overflow {};

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
mpz_class checked_add(const mpz_class& a, const mpz_class& b) { return a + b; }
mpz_class checked_sub(const mpz_class& a, const mpz_class& b) { return a - b; }

template <typename C>
C narrow(const mpz_class& z);
template <>
std::int64_t narrow<std::int64_t>(const mpz_class& z) {
  if (!z.fits_slong_p()) throw Overflow{};
  return z.get_si();
}
template <>
mpz_class narrow<mpz_class>(const mpz_class& z) {
  return z;
}

std::size_t mix(std::size_t h, std::size_t v) { return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)); }
std::size_t hash_coord(std::int64_t c) { return std::hash<std::int64_t>{}(c); }
std::size_t hash_coord(const mpz_class& c) {
  return mix(static_cast<std::size_t>(mpz_size(c.get_mpz_t())), mpz_get_ui(c.get_mpz_t())) ^
         static_cast<std::size_t>(sgn(c));
}

struct Move {
  std::size_t circuit;
  Sign sign;
};

template <typename C>
class LatticeSearch {
 public:
  LatticeSearch(const Network& network, const CircuitTable& table, const SearchLimits& limits,
                const std::vector<mpz_class>& costs)
      : network_(network),
        table_(table),
        limits_(limits),
        n_(network.node_count()),
        states_(0, StateHash{this}, StateEqual{this}) {
    for (const auto& c : costs) costs_.push_back(narrow<C>(c));
  }

  /// Move sequences from source to each target; nullopt targets are skipped.
  std::vector<std::vector<Move>> run(const std::vector<mpz_class>& source,
                                     const std::vector<std::optional<std::vector<mpz_class>>>& targets,
                                     std::size_t depth_cap) {
    std::unordered_multimap<std::size_t, std::size_t> pending;  // state hash -> target
    std::vector<std::vector<C>> goal(targets.size());
    for (std::size_t t = 0; t < targets.size(); ++t) {
      if (!targets[t]) continue;
      for (const auto& z : *targets[t]) goal[t].push_back(narrow<C>(z));
      pending.emplace(hash_span(goal[t].data()), t);
    }
    std::vector<std::optional<std::size_t>> found(targets.size());
    std::size_t remaining = pending.size();

    auto resolve = [&](std::size_t id) {
      auto [first, last] = pending.equal_range(hash_span(at(id)));
      for (auto it = first; it != last;) {
        if (std::equal(goal[it->second].begin(), goal[it->second].end(), at(id))) {
          found[it->second] = id;
          --remaining;
          it = pending.erase(it);
        } else {
          ++it;
        }
      }
    };

    for (const auto& z : source) coords_.push_back(narrow<C>(z));
    meta_.push_back({kNone, 0, Sign::Plus});
    states_.insert(0);
    resolve(0);

    const auto& graph = network_.graph();
    const std::size_t m = network_.edge_count();
    std::vector<C> slack(m);
    std::vector<std::size_t> frontier{0};
    for (std::size_t depth = 0; remaining > 0 && !frontier.empty() && depth < depth_cap; ++depth) {
      std::vector<std::size_t> next;
      for (std::size_t s : frontier) {
        for (EdgeIndex e = 0; e < m; ++e) {
          const Edge& edge = graph.edge(e);
          slack[e] = checked_sub(checked_add(costs_[e], at(s)[edge.tail]), at(s)[edge.head]);
        }
        for (std::size_t i = 0; i < table_.size() && remaining > 0; ++i) {
          for (Sign sign : {Sign::Plus, Sign::Minus}) {
            const C* eps = nullptr;
            bool blocked = false;
            for (EdgeIndex e : table_.bounding_edges(i, sign)) {
              if (slack[e] == 0) {
                blocked = true;
                break;
              }
              if (!eps || slack[e] < *eps) eps = &slack[e];
            }
            if (blocked || !eps) continue;
            const std::size_t id = push_candidate(s, i, sign, *eps);
            if (!states_.insert(id).second) {
              coords_.resize(coords_.size() - n_);
              meta_.pop_back();
              continue;
            }
            next.push_back(id);
            resolve(id);
          }
        }
        if (remaining == 0) break;
      }
      frontier = std::move(next);
    }

    std::vector<std::vector<Move>> moves(targets.size());
    for (std::size_t t = 0; t < targets.size(); ++t) {
      if (!found[t]) continue;
      for (std::size_t s = *found[t]; meta_[s].parent != kNone; s = meta_[s].parent) {
        moves[t].push_back({meta_[s].circuit, meta_[s].sign});
      }
      std::reverse(moves[t].begin(), moves[t].end());
    }
    return moves;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  struct Meta {
    std::size_t parent;
    std::size_t circuit;
    Sign sign;
  };
  struct StateHash {
    const LatticeSearch* self;
    std::size_t operator()(std::size_t id) const { return self->hash_span(self->at(id)); }
  };
  struct StateEqual {
    const LatticeSearch* self;
    bool operator()(std::size_t a, std::size_t b) const {
      return std::equal(self->at(a), self->at(a) + self->n_, self->at(b));
    }
  };

  const C* at(std::size_t id) const { return coords_.data() + id * n_; }

  std::size_t hash_span(const C* p) const {
    std::size_t h = 0;
    for (std::size_t v = 0; v < n_; ++v) h = mix(h, hash_coord(p[v]));
    return h;
  }

  std::size_t push_candidate(std::size_t from, std::size_t circuit, Sign sign, const C& eps) {
    const std::size_t id = meta_.size();
    if (id >= limits_.max_states) {
      throw Error(ErrorCode::FrontierTooLarge,
                  "circuit search exceeded " + std::to_string(limits_.max_states) + " states");
    }
    // Copy before growing: `eps` and the source row live in buffers that may move.
    const C amount = eps;
    coords_.resize(coords_.size() + n_);
    std::copy(at(from), at(from) + n_, coords_.data() + id * n_);
    C* row = coords_.data() + id * n_;
    for (NodeId v : table_.circuit(circuit).s_set()) {
      row[v] = sign == Sign::Plus ? checked_add(row[v], amount) : checked_sub(row[v], amount);
    }
    meta_.push_back({from, circuit, sign});
    return id;
  }

  const Network& network_;
  const CircuitTable& table_;
  const SearchLimits& limits_;
  std::size_t n_;
  std::vector<C> costs_;
  std::vector<C> coords_;
  std::vector<Meta> meta_;
  std::unordered_set<std::size_t, StateHash, StateEqual> states_;
};

// Integer image of p under scaling by `scale`, or nullopt off the lattice.
std::optional<std::vector<mpz_class>> scaled(const Point& p, const mpz_class& scale) {
  std::vector<mpz_class> out;
  for (const Rational& x : p.coords()) {
    const mpq_class q = x.value() * scale;
    if (q.get_den() != 1) return std::nullopt;
    out.push_back(q.get_num());
  }
  return out;
}

}  // namespace

std::vector<DistanceResult> search_circuit_walks(const Network& network, const CircuitTable& table,
                                                 const SearchLimits& limits, const Point& source,
                                                 const std::vector<Point>& targets) {
  mpz_class scale = 1;
  for (const Rational& c : network.costs()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.value().get_den_mpz_t());
  for (const Rational& x : source.coords()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.value().get_den_mpz_t());

  std::vector<mpz_class> costs;
  for (const Rational& c : network.costs()) costs.push_back(mpq_class(c.value() * scale).get_num());
  const auto start = *scaled(source, scale);
  std::vector<std::optional<std::vector<mpz_class>>> goals;
  for (const Point& t : targets) goals.push_back(scaled(t, scale));

  const std::size_t cap = limits.depth_cap.value_or(circuit_bound(network.node_count()));
  std::vector<std::vector<Move>> moves;
  try {
    moves = LatticeSearch<std::int64_t>(network, table, limits, costs).run(start, goals, cap);
  } catch (const Overflow&) {
    moves = LatticeSearch<mpz_class>(network, table, limits, costs).run(start, goals, cap);
  }

  std::vector<DistanceResult> results;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    Walk walk;
    walk.mode = WalkMode::Circuit;
    walk.points.push_back(source);
    for (const Move& mv : moves[t]) {
      SignedStep step = *table.try_step(network, walk.points.back(), mv.circuit, mv.sign);
      walk.points.push_back(move_along(walk.points.back(), step.circuit, step.sign, step.epsilon));
      walk.steps.push_back(std::move(step));
    }
    if (walk.points.back() != targets[t]) {
      throw Error(ErrorCode::DepthCapExceeded, "no circuit walk from " + source.str() + " to " +
                                                   targets[t].str() + " within depth " +
                                                   std::to_string(cap));
    }
    results.push_back(DistanceResult{walk.length(), std::move(walk)});
  }
  return results;
}

}  // namespace dualflow::detail
