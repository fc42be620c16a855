#include "mvtsp/core.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mvtsp/errors.hpp"

namespace mvtsp {
namespace {

// Finite costs are capped below 2^62 so that flow potentials and single-path
// sums stay inside signed 128-bit arithmetic with a wide margin.
constexpr std::int64_t kMaxFiniteCost = (std::int64_t{1} << 62) - 1;

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

CostMatrix checked_costs(const RawInstance& raw) {
  const int n = raw.n;
  if (static_cast<int>(raw.costs.size()) != n)
    throw Error(Errc::BadFormat, "costs must be an n x n matrix");
  CostMatrix d(n);
  for (int u = 0; u < n; ++u) {
    if (static_cast<int>(raw.costs[u].size()) != n)
      throw Error(Errc::BadFormat, "costs must be an n x n matrix");
    for (int v = 0; v < n; ++v) {
      const auto& e = raw.costs[u][v];
      if (!e.has_value()) continue;  // Infinity
      if (*e < 0) throw Error(Errc::NegativeCost, "cost entries must be >= 0");
      if (*e > kMaxFiniteCost)
        throw Error(Errc::CostTooLarge, "finite costs must be < 2^62");
      d.at(u, v) = Cost(static_cast<std::uint64_t>(*e));
    }
  }
  return d;
}

std::vector<std::uint64_t> checked_demands(const std::vector<std::int64_t>& v,
                                           int n, const char* what,
                                           bool require_positive) {
  if (static_cast<int>(v.size()) != n)
    throw Error(Errc::BadFormat, std::string(what) + " must have length n");
  std::vector<std::uint64_t> out(n);
  for (int i = 0; i < n; ++i) {
    if (v[i] < 0)
      throw Error(Errc::BadFormat, std::string(what) + " entries must be >= 0");
    if (require_positive && v[i] == 0)
      throw Error(Errc::ZeroVisit, "every visit count must be >= 1");
    out[i] = static_cast<std::uint64_t>(v[i]);
  }
  return out;
}

}  // namespace

std::uint64_t CostMatrix::max_finite() const {
  u128 best = 0;
  for (const Cost& c : entries_)
    if (c.finite() && c.value() > best) best = c.value();
  return static_cast<std::uint64_t>(best);
}

std::vector<std::uint64_t> CostMatrix::distinct_finite() const {
  std::set<std::uint64_t> seen;
  for (const Cost& c : entries_)
    if (c.finite()) seen.insert(static_cast<std::uint64_t>(c.value()));
  return {seen.begin(), seen.end()};
}

std::uint64_t Multiplicity::row_sum(int u) const {
  std::uint64_t s = 0;
  for (int v = 0; v < n_; ++v) s += at(u, v);
  return s;
}

std::uint64_t Multiplicity::col_sum(int v) const {
  std::uint64_t s = 0;
  for (int u = 0; u < n_; ++u) s += at(u, v);
  return s;
}

std::uint64_t Multiplicity::total() const {
  std::uint64_t s = 0;
  for (std::uint64_t x : m_) s += x;
  return s;
}

std::uint64_t MvtspInstance::tour_length() const {
  return std::accumulate(visits.begin(), visits.end(), std::uint64_t{0});
}

std::uint64_t FdcsInstance::max_demand() const {
  std::uint64_t m = 0;
  for (int v = 0; v < n; ++v) m = std::max({m, in[v], out[v]});
  return m;
}

std::uint64_t FdcsInstance::total_demand() const {
  return std::accumulate(out.begin(), out.end(), std::uint64_t{0});
}

Instance validate(const RawInstance& raw) {
  if (raw.n < 1) throw Error(Errc::EmptyInstance, "n must be >= 1");
  const bool has_visits = raw.visits.has_value();
  const bool has_inout = raw.in.has_value() || raw.out.has_value();
  if (has_visits == has_inout)
    throw Error(Errc::BadFormat,
                "exactly one of visits or {in, out} must be given");

  if (has_visits) {
    if (raw.root || raw.family)
      throw Error(Errc::BadFormat, "root/family apply only to in/out instances");
    MvtspInstance inst;
    inst.n = raw.n;
    inst.d = checked_costs(raw);
    inst.visits = checked_demands(*raw.visits, raw.n, "visits", true);
    inst.name = raw.name;
    return inst;
  }

  if (!raw.in || !raw.out)
    throw Error(Errc::BadFormat, "in and out must be given together");
  FdcsInstance inst;
  inst.n = raw.n;
  inst.d = checked_costs(raw);
  inst.in = checked_demands(*raw.in, raw.n, "in", false);
  inst.out = checked_demands(*raw.out, raw.n, "out", false);
  inst.name = raw.name;
  const auto total_in =
      std::accumulate(inst.in.begin(), inst.in.end(), std::uint64_t{0});
  const auto total_out =
      std::accumulate(inst.out.begin(), inst.out.end(), std::uint64_t{0});
  if (total_in != total_out)
    throw Error(Errc::DemandMismatch, "sum of in must equal sum of out");

  if (raw.family) {
    if (*raw.family == "oriented-trees") {
      inst.family = FdcsFamily::OrientedTrees;
    } else if (*raw.family == "outbranching") {
      inst.family = FdcsFamily::OutbranchingRootedAt;
    } else {
      throw Error(Errc::BadFormat, "unknown family: " + *raw.family);
    }
  } else {
    inst.family = raw.root ? FdcsFamily::OutbranchingRootedAt
                           : FdcsFamily::OrientedTrees;
  }
  if (inst.family == FdcsFamily::OutbranchingRootedAt) {
    if (!raw.root)
      throw Error(Errc::BadFormat, "outbranching family requires a root");
  }
  if (raw.root) {
    if (*raw.root < 0 || *raw.root >= raw.n)
      throw Error(Errc::BadFormat, "root out of range");
    inst.root = *raw.root;
  }
  return inst;
}

FdcsInstance mvtsp_to_fdcs(const MvtspInstance& inst, std::optional<int> root) {
  FdcsInstance out;
  out.n = inst.n;
  out.d = inst.d;
  out.in = inst.visits;
  out.out = inst.visits;
  out.root = root;
  out.family =
      root ? FdcsFamily::OutbranchingRootedAt : FdcsFamily::OrientedTrees;
  out.name = inst.name;
  return out;
}

Cost cost_of(const Multiplicity& m, const CostMatrix& d) {
  Cost total;
  for (int u = 0; u < m.n(); ++u)
    for (int v = 0; v < m.n(); ++v)
      total += d.at(u, v).scaled(m.at(u, v));
  return total;
}

bool support_connected(const Multiplicity& m) {
  const int n = m.n();
  if (n <= 1) return true;
  UnionFind uf(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && m.at(u, v) > 0) uf.unite(u, v);
  const int head = uf.find(0);
  for (int v = 1; v < n; ++v)
    if (uf.find(v) != head) return false;
  return true;
}

bool reachable_from_root(const Multiplicity& m, int root) {
  const int n = m.n();
  std::vector<char> seen(n, 0);
  std::vector<int> stack{root};
  seen[root] = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v)
      if (!seen[v] && m.at(u, v) > 0) {
        seen[v] = 1;
        stack.push_back(v);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

bool is_feasible_mvtsp(const MvtspInstance& inst, const Multiplicity& m) {
  if (m.n() != inst.n) return false;
  for (int v = 0; v < inst.n; ++v) {
    if (m.row_sum(v) != inst.visits[v]) return false;
    if (m.col_sum(v) != inst.visits[v]) return false;
  }
  for (int u = 0; u < inst.n; ++u)
    for (int v = 0; v < inst.n; ++v)
      if (m.at(u, v) > 0 && !inst.d.at(u, v).finite()) return false;
  return support_connected(m);
}

Tour reconstruct_tour(const MvtspInstance& inst, const Multiplicity& m) {
  if (!is_feasible_mvtsp(inst, m))
    throw Error(Errc::NotEulerian, "multiplicity is not a feasible solution");
  const int n = inst.n;

  // Hierholzer on the multigraph: per-vertex stack of remaining out-edges.
  std::vector<std::vector<int>> out_edges(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (std::uint64_t i = 0; i < m.at(u, v); ++i) out_edges[u].push_back(v);

  std::vector<int> circuit;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int u = stack.back();
    if (out_edges[u].empty()) {
      circuit.push_back(u);
      stack.pop_back();
    } else {
      stack.push_back(out_edges[u].back());
      out_edges[u].pop_back();
    }
  }
  // The closing vertex equals the start; drop it to get the cyclic sequence.
  circuit.pop_back();
  std::reverse(circuit.begin(), circuit.end());
  return Tour{std::move(circuit)};
}

bool is_outtree_sequence(const std::vector<std::uint64_t>& delta, int root) {
  const std::uint64_t sum =
      std::accumulate(delta.begin(), delta.end(), std::uint64_t{0});
  return delta[root] >= 1 && sum == delta.size() - 1;
}

}  // namespace mvtsp
