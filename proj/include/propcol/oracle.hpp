#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "propcol/assignment.hpp"
#include "propcol/bounded_search.hpp"
#include "propcol/coloring.hpp"
#include "propcol/error.hpp"
#include "propcol/graph.hpp"

namespace propcol {

struct OracleOptions {
  /// Largest n*k for which k-assignments are enumerated.
  std::size_t max_nk = 16;
  /// Largest k^n explored by a single coloring search.
  double search_cap = 1e10;
  /// Worker threads for canonical enumeration; results do not depend on it.
  std::size_t threads = 1;
};

struct ExistenceResult {
  bool exists = false;
  std::optional<Labelling> coloring;
  SearchStats stats;
};

/// Decides proportional L-colorability by backtracking; returns the
/// lexicographically first proportional coloring when one exists.
inline ExistenceResult exists_proportional_coloring(const Graph& g, const ListAssignment& L,
                                                    double cap = OracleOptions{}.search_cap) {
  ExistenceResult out;
  out.coloring = find_windowed_coloring(g, L, CountWindow::Proportional, cap, &out.stats);
  out.exists = out.coloring.has_value();
  return out;
}

struct EnumerationStats {
  std::uint64_t assignments = 0;
  std::uint64_t prunes = 0;

  EnumerationStats& operator+=(const EnumerationStats& o) {
    assignments += o.assignments;
    prunes += o.prunes;
    return *this;
  }
  friend bool operator==(const EnumerationStats&, const EnumerationStats&) = default;
};

struct ChoosabilityVerdict {
  std::size_t k = 0;
  bool decision = true;
  /// Lexicographically first canonical assignment without a valid coloring.
  std::optional<ListAssignment> witness;
  EnumerationStats stats;
};

/**
 * k-assignments of n vertices up to color renaming.
 *
 * Colors are 1-based. Scanning vertices in order, a list is any k-set made
 * of previously used colors {1..u} plus the next j fresh colors
 * {u+1..u+j}. Every k-assignment is a renaming of at least one such form.
 * Candidate lists for each u are produced in lexicographic order, so full
 * assignments come out in lexicographic order too.
 */
class CanonicalAssignments {
 public:
  CanonicalAssignments(std::size_t n, std::size_t k) : n_(n), k_(k) {
    if (k == 0) throw InputError("k must be at least 1");
  }

  std::size_t vertex_count() const { return n_; }
  std::size_t k() const { return k_; }

  /// Candidate lists for a vertex when u colors are in use.
  const std::vector<std::vector<Color>>& candidates(std::size_t u) {
    if (u >= cache_.size()) cache_.resize(u + 1);
    auto& slot = cache_[u];
    if (!slot.has_value()) {
      std::vector<std::vector<Color>> out;
      for (std::size_t fresh = 0; fresh <= k_; ++fresh) {
        std::size_t old = k_ - fresh;
        if (old > u) continue;
        std::vector<Color> pick;
        combos(u, old, 1, pick, [&](const std::vector<Color>& chosen) {
          std::vector<Color> list = chosen;
          for (std::size_t j = 1; j <= fresh; ++j) list.push_back(static_cast<Color>(u + j));
          out.push_back(std::move(list));
        });
      }
      std::sort(out.begin(), out.end());
      slot = std::move(out);
    }
    return *slot;
  }

  /// Number of colors in use after `list` is added with u colors in use.
  static std::size_t next_used(std::size_t u, const std::vector<Color>& list) {
    return std::max<std::size_t>(u, list.empty() ? 0 : list.back());
  }

  /**
   * Visits canonical assignments whose first `prefix.size()` lists are fixed.
   * visit(lists, u) returns true to stop. Returns whether it stopped.
   */
  template <class Visit>
  bool for_each(std::vector<std::vector<Color>> prefix, Visit&& visit) {
    std::size_t u = 0;
    for (const auto& list : prefix) u = next_used(u, list);
    const std::size_t fixed = prefix.size();
    if (fixed > n_) throw InputError("prefix longer than the vertex count");
    std::vector<std::vector<Color>> lists = std::move(prefix);
    lists.resize(n_);
    return descend(lists, fixed, u, visit);
  }

  template <class Visit>
  bool for_each(Visit&& visit) {
    return for_each({}, std::forward<Visit>(visit));
  }

 private:
  template <class F>
  static void combos(std::size_t u, std::size_t take, Color from, std::vector<Color>& pick, F&& f) {
    if (take == 0) {
      f(pick);
      return;
    }
    for (Color c = from; c + take - 1 <= u; ++c) {
      pick.push_back(c);
      combos(u, take - 1, c + 1, pick, f);
      pick.pop_back();
    }
  }

  template <class Visit>
  bool descend(std::vector<std::vector<Color>>& lists, std::size_t i, std::size_t u, Visit& visit) {
    if (i == n_) return visit(static_cast<const std::vector<std::vector<Color>>&>(lists), u);
    // index, not reference: cache_ may reallocate during recursion
    const std::size_t count = candidates(u).size();
    for (std::size_t idx = 0; idx < count; ++idx) {
      lists[i] = candidates(u)[idx];
      if (descend(lists, i + 1, next_used(u, lists[i]), visit)) return true;
    }
    return false;
  }

  std::size_t n_;
  std::size_t k_;
  std::vector<std::optional<std::vector<std::vector<Color>>>> cache_;
};

/// Visits every canonical k-assignment of n vertices (see
/// CanonicalAssignments) until visit returns true.
template <class Visit>
void for_each_canonical_assignment(std::size_t n, std::size_t k, Visit&& visit) {
  CanonicalAssignments gen(n, k);
  gen.for_each([&](const std::vector<std::vector<Color>>& lists, std::size_t) {
    return visit(lists);
  });
}

/// Which coloring notion an assignment must admit during enumeration.
enum class ChoiceProperty { Proportional, EquitableList };

namespace detail {

/// Checks one canonical assignment with a reusable search.
class AssignmentChecker {
 public:
  AssignmentChecker(const Graph& g, std::size_t k, ChoiceProperty property)
      : g_(g), k_(k), property_(property) {}

  /// True when the assignment admits a coloring of the required kind.
  bool admits(const std::vector<std::vector<Color>>& lists, std::size_t used_colors,
              EnumerationStats& stats) {
    const std::size_t n = g_.order();
    dense_.resize(n);
    eta_.assign(used_colors, 0);
    for (Vertex v = 0; v < n; ++v) {
      dense_[v].clear();
      for (Color c : lists[v]) {
        dense_[v].push_back(c - 1);
        ++eta_[c - 1];
      }
    }
    lo_.resize(used_colors);
    hi_.resize(used_colors);
    for (std::size_t c = 0; c < used_colors; ++c) {
      if (property_ == ChoiceProperty::Proportional) {
        lo_[c] = static_cast<std::uint32_t>(eta_[c] / k_);
        hi_[c] = static_cast<std::uint32_t>((eta_[c] + k_ - 1) / k_);
      } else {
        lo_[c] = 0;
        hi_[c] = static_cast<std::uint32_t>((n + k_ - 1) / k_);
      }
    }
    search_.reset(g_, dense_, lo_, hi_);
    bool found = search_.run([](const std::vector<std::uint32_t>&) { return true; });
    ++stats.assignments;
    stats.prunes += search_.stats().prunes;
    return found;
  }

 private:
  const Graph& g_;
  std::size_t k_;
  ChoiceProperty property_;
  BoundedSearch search_;
  std::vector<std::vector<std::uint32_t>> dense_;
  std::vector<std::uint32_t> eta_, lo_, hi_;
};

struct ShardResult {
  std::optional<std::vector<std::vector<Color>>> witness;
  EnumerationStats stats;
  bool done = false;
};

}  // namespace detail

/**
 * Decides whether every k-assignment of g admits a coloring of the given
 * kind, by exhaustive canonical enumeration.
 *
 * Work is sharded by the second vertex's candidate list. Each shard stops at
 * its own first failure; the reported witness is the failure of the lowest
 * failing shard, and the statistics count exactly the assignments a
 * sequential scan checks up to that witness. Both are therefore independent
 * of the thread count.
 */
inline ChoosabilityVerdict decide_k_choosability(const Graph& g, std::size_t k,
                                                 ChoiceProperty property,
                                                 const OracleOptions& options = {}) {
  if (k == 0) throw InputError("k must be at least 1");
  const std::size_t n = g.order();
  if (n * k > options.max_nk) {
    throw ResourceError("n*k = " + std::to_string(n * k) + " exceeds the enumeration cap " +
                        std::to_string(options.max_nk));
  }
  ChoosabilityVerdict out;
  out.k = k;
  if (n == 0) return out;

  std::vector<Color> first(k);
  for (std::size_t i = 0; i < k; ++i) first[i] = static_cast<Color>(i + 1);

  // shard prefixes
  std::vector<std::vector<std::vector<Color>>> prefixes;
  {
    CanonicalAssignments gen(n, k);
    if (n == 1) {
      prefixes.push_back({first});
    } else {
      for (const auto& second : gen.candidates(k)) prefixes.push_back({first, second});
    }
  }

  std::vector<detail::ShardResult> shards(prefixes.size());
  std::atomic<std::size_t> next_shard{0};
  std::atomic<std::size_t> best{prefixes.size()};

  auto worker = [&]() {
    CanonicalAssignments gen(n, k);
    detail::AssignmentChecker checker(g, k, property);
    for (;;) {
      std::size_t s = next_shard.fetch_add(1);
      if (s >= prefixes.size()) return;
      if (s > best.load()) continue;
      auto& shard = shards[s];
      gen.for_each(prefixes[s], [&](const std::vector<std::vector<Color>>& lists,
                                                   std::size_t used) {
        if (s > best.load()) return true;  // cancelled: a lower shard already failed
        if (!checker.admits(lists, used, shard.stats)) {
          shard.witness = lists;
          return true;
        }
        return false;
      });
      if (shard.witness) {
        std::size_t current = best.load();
        while (s < current && !best.compare_exchange_weak(current, s)) {
        }
      }
      shard.done = true;
    }
  };

  const std::size_t threads = std::max<std::size_t>(1, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  const std::size_t winner = best.load();
  for (std::size_t s = 0; s < shards.size() && s <= winner; ++s) out.stats += shards[s].stats;
  if (winner < shards.size()) {
    out.decision = false;
    out.witness = ListAssignment(k, *shards[winner].witness);
    // re-verify the witness through the independent list-level search
    std::optional<Labelling> again =
        property == ChoiceProperty::Proportional
            ? find_windowed_coloring(g, *out.witness, CountWindow::Proportional, options.search_cap)
            : find_windowed_coloring(g, *out.witness, CountWindow::EquitableList,
                                     options.search_cap);
    if (again) throw InternalError("witness assignment admits a coloring on re-check");
  }
  return out;
}

inline ChoosabilityVerdict decide_proportional_k_choosability(const Graph& g, std::size_t k,
                                                              const OracleOptions& options = {}) {
  return decide_k_choosability(g, k, ChoiceProperty::Proportional, options);
}

enum class ChiPcStatus {
  Exact,          // value found
  AboveCap,       // every k <= k_max fails
  ResourceLimit,  // enumeration cap reached before a decision
};

struct ChiPcResult {
  ChiPcStatus status = ChiPcStatus::Exact;
  std::optional<std::size_t> value;
  /// Smallest k not yet ruled out.
  std::size_t lower_bound = 1;
  std::vector<ChoosabilityVerdict> verdicts;
  std::string message;
};

/// Smallest k <= k_max with a positive verdict. Monotonicity in k makes the
/// first positive verdict final.
inline ChiPcResult chi_pc(const Graph& g, std::size_t k_max, const OracleOptions& options = {}) {
  ChiPcResult out;
  for (std::size_t k = 1; k <= k_max; ++k) {
    try {
      out.verdicts.push_back(decide_proportional_k_choosability(g, k, options));
    } catch (const ResourceError& e) {
      out.status = ChiPcStatus::ResourceLimit;
      out.lower_bound = k;
      out.message = e.what();
      return out;
    }
    if (out.verdicts.back().decision) {
      out.status = ChiPcStatus::Exact;
      out.value = k;
      out.lower_bound = k;
      return out;
    }
    out.lower_bound = k + 1;
  }
  out.status = ChiPcStatus::AboveCap;
  return out;
}

enum class EquitableMode { Colorable, Choosable };

/// Brute-force equitable k-colorability, or equitable k-choosability by the
/// same canonical enumeration used for proportional choosability.
inline bool equitable_oracles(const Graph& g, std::size_t k, EquitableMode mode,
                              const OracleOptions& options = {}) {
  if (k == 0) throw InputError("k must be at least 1");
  if (mode == EquitableMode::Choosable) {
    return decide_k_choosability(g, k, ChoiceProperty::EquitableList, options).decision;
  }
  // constant {1..k}: eta = n everywhere, so the proportional window is
  // exactly [floor(n/k), ceil(n/k)] for each of the k classes
  ListAssignment constant = constant_assignment(g.order(), k);
  if (g.order() == 0) return true;
  return find_windowed_coloring(g, constant, CountWindow::Proportional, options.search_cap)
      .has_value();
}

}  // namespace propcol
