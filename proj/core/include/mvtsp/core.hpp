#ifndef MVTSP_CORE_HPP
#define MVTSP_CORE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mvtsp/cost.hpp"

namespace mvtsp {

// Square matrix of extended costs; entry (u, v) is the cost of traversing the
// directed edge u -> v, possibly Infinity. Loops (u == u) may be finite.
class CostMatrix {
 public:
  CostMatrix() = default;
  explicit CostMatrix(int n, Cost fill = Cost::infinity())
      : n_(n), entries_(static_cast<std::size_t>(n) * n, fill) {}

  int n() const { return n_; }
  Cost& at(int u, int v) { return entries_[static_cast<std::size_t>(u) * n_ + v]; }
  const Cost& at(int u, int v) const {
    return entries_[static_cast<std::size_t>(u) * n_ + v];
  }

  // Largest finite entry (the paper's D); 0 when no entry is finite.
  std::uint64_t max_finite() const;
  // Sorted distinct finite entry values.
  std::vector<std::uint64_t> distinct_finite() const;

 private:
  int n_ = 0;
  std::vector<Cost> entries_;
};

// Edge usage counts m(u, v); the compressed solution representation.
class Multiplicity {
 public:
  Multiplicity() = default;
  explicit Multiplicity(int n) : n_(n), m_(static_cast<std::size_t>(n) * n, 0) {}

  int n() const { return n_; }
  std::uint64_t& at(int u, int v) { return m_[static_cast<std::size_t>(u) * n_ + v]; }
  std::uint64_t at(int u, int v) const { return m_[static_cast<std::size_t>(u) * n_ + v]; }

  std::uint64_t row_sum(int u) const;  // outdegree of u
  std::uint64_t col_sum(int v) const;  // indegree of v
  std::uint64_t total() const;

  bool operator==(const Multiplicity& o) const { return n_ == o.n_ && m_ == o.m_; }

  // Lexicographic row-major comparison, used for deterministic tie-breaks.
  bool lex_less(const Multiplicity& o) const { return m_ < o.m_; }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> m_;
};

struct MvtspInstance {
  int n = 0;
  CostMatrix d;
  std::vector<std::uint64_t> visits;  // k(v), all >= 1
  std::string name;

  std::uint64_t tour_length() const;   // l = sum of k(v)
  std::uint64_t max_cost() const { return d.max_finite(); }  // D
};

enum class FdcsFamily {
  OrientedTrees,          // solution must contain a spanning oriented tree
  OutbranchingRootedAt,   // ... an outbranching rooted at `root`
};

struct FdcsInstance {
  int n = 0;
  CostMatrix d;
  std::vector<std::uint64_t> in;
  std::vector<std::uint64_t> out;
  std::optional<int> root;
  FdcsFamily family = FdcsFamily::OrientedTrees;
  std::string name;

  std::uint64_t max_demand() const;  // M
  std::uint64_t total_demand() const;  // sum of in == sum of out
};

struct Tour {
  std::vector<int> seq;  // length l; cyclic
};

// Parsed-but-unchecked instance description, mirroring the JSON file format.
// Cost entries: nullopt encodes Infinity, negative values are rejected by
// validate.
struct RawInstance {
  int n = 0;
  std::vector<std::vector<std::optional<std::int64_t>>> costs;
  std::optional<std::vector<std::int64_t>> visits;
  std::optional<std::vector<std::int64_t>> in;
  std::optional<std::vector<std::int64_t>> out;
  std::optional<int> root;
  std::optional<std::string> family;
  std::string name;
};

using Instance = std::variant<MvtspInstance, FdcsInstance>;

// Checks shapes, signs and demand balance; throws Error on rejection.
Instance validate(const RawInstance& raw);

// Observation: MVTSP is the fixed-degree connected-subgraph problem with
// in = out = k; a root may be fixed arbitrarily.
FdcsInstance mvtsp_to_fdcs(const MvtspInstance& inst, std::optional<int> root);

// Total cost sum d(u,v) * m(u,v); Infinity if any used edge is infinite.
Cost cost_of(const Multiplicity& m, const CostMatrix& d);

// True iff every vertex has in- and outdegree exactly k(v), all used edges
// are finite, and the support (loops ignored) is connected spanning V.
bool is_feasible_mvtsp(const MvtspInstance& inst, const Multiplicity& m);

// Support connectivity over all of V, loops ignored, undirected sense.
// Vacuously true for n == 1.
bool support_connected(const Multiplicity& m);

// True iff every vertex v is reachable from `root` in the support digraph.
bool reachable_from_root(const Multiplicity& m, int root);

// Eulerian circuit of the multigraph described by m, as a vertex sequence of
// length l. Requires is_feasible_mvtsp; throws Error(NotEulerian) otherwise.
Tour reconstruct_tour(const MvtspInstance& inst, const Multiplicity& m);

// An outdegree sequence is realizable by an out-tree spanning X rooted at r
// iff delta[r] >= 1 and the entries sum to |X| - 1. Requires |X| >= 2.
bool is_outtree_sequence(const std::vector<std::uint64_t>& delta, int root);

}  // namespace mvtsp

#endif  // MVTSP_CORE_HPP
