#pragma once

/// Zeuthen numbers from lattice paths: sum path multiplicities over every
/// choice of marked points on the tangency edges.

#include <algorithm>
#include <cstdint>
#include <future>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

#include "tz/real_multiplicity.hpp"

namespace tz {

struct SelectionResult {
  std::vector<MarkedPoint> marked;
  std::int64_t mu = 0;
  std::optional<std::int64_t> mu_real;
};

struct CountReport {
  int degree = 0;
  std::vector<BoundaryEdge> edges;
  std::vector<SelectionResult> per_selection;
  std::int64_t total_complex = 0;
  std::optional<std::int64_t> total_real;
  std::optional<SignSequence> sign_sequence;
};

struct CountOptions {
  bool parallel = true;
  PhaseConvention convention = kDefaultConvention;
};

/// Closed-form values: 1 for no tangency, 2(d-1) for one line and
/// 4(d-1)^2 for two. No reference value is known here for three lines.
inline std::optional<std::int64_t> known_value(int d, int l) {
  if (d < 2) throw std::invalid_argument("degree must be at least 2");
  const std::int64_t m = 2 * static_cast<std::int64_t>(d - 1);
  switch (l) {
    case 0: return 1;
    case 1: return m;
    case 2: return m * m;
    default: return std::nullopt;
  }
}

inline void validate_edges(int d, std::span<const BoundaryEdge> edges) {
  if (d < 2) throw std::invalid_argument("degree must be at least 2");
  if (edges.size() > 3) throw std::invalid_argument("at most three tangency edges");
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (edges[i] == edges[j])
        throw std::invalid_argument("tangency edges must be distinct, " + to_string(edges[i]) +
                                    " repeats");
}

/// Every element of eta_1 x ... x eta_l, in lexicographic order of the
/// per-edge interior points (each listed in lambda order).
inline std::vector<MarkedConfig> marked_selections(int d, std::span<const BoundaryEdge> edges) {
  validate_edges(d, edges);
  const NewtonTriangle t(d);
  std::vector<std::vector<LatticePoint>> choices;
  for (auto e : edges) choices.push_back(interior_edge_points(t, e));

  std::vector<MarkedConfig> out;
  std::vector<std::size_t> idx(edges.size(), 0);
  for (;;) {
    std::vector<MarkedPoint> marked;
    for (std::size_t i = 0; i < edges.size(); ++i) marked.push_back({edges[i], choices[i][idx[i]]});
    out.emplace_back(d, std::move(marked));
    std::size_t pos = edges.size();
    while (pos > 0) {
      --pos;
      if (++idx[pos] < choices[pos].size()) break;
      idx[pos] = 0;
      if (pos == 0) return out;
    }
    if (edges.empty()) return out;
  }
}

namespace detail {

/// Applies `eval` to every item, in parallel chunks when asked; results keep
/// the input order.
template <class T, class F>
auto ordered_map(const std::vector<T>& items, bool parallel, F eval) {
  using R = decltype(eval(items.front()));
  std::vector<R> out(items.size());
  const std::size_t workers =
      parallel ? std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()),
                                       items.size())
               : 1;
  if (workers <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i) out[i] = eval(items[i]);
    return out;
  }
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < items.size(); i += workers) out[i] = eval(items[i]);
    }));
  for (auto& j : jobs) j.get();
  return out;
}

}  // namespace detail

inline CountReport complex_count(int d, std::span<const BoundaryEdge> edges,
                                 const CountOptions& options = {}) {
  const auto selections = marked_selections(d, edges);
  CountReport report{d, {edges.begin(), edges.end()}, {}, 0, std::nullopt, std::nullopt};
  report.per_selection = detail::ordered_map(selections, options.parallel, [](const MarkedConfig& cfg) {
    return SelectionResult{cfg.marked(), mu(build_maximal_path(cfg)), std::nullopt};
  });
  for (const auto& s : report.per_selection) report.total_complex += s.mu;
  return report;
}

inline CountReport real_count(int d, std::span<const BoundaryEdge> edges, const SignSequence& signs,
                              const CountOptions& options = {}) {
  validate_edges(d, edges);
  const auto n = maximal_path_length(d, edges.size());
  if (signs.size() != n)
    throw std::invalid_argument("sign sequence for degree " + std::to_string(d) + " with " +
                                std::to_string(edges.size()) + " tangencies needs " +
                                std::to_string(n) + " entries, got " +
                                std::to_string(signs.size()));
  const auto selections = marked_selections(d, edges);
  CountReport report{d, {edges.begin(), edges.end()}, {}, 0, std::int64_t{0}, signs};
  report.per_selection =
      detail::ordered_map(selections, options.parallel, [&](const MarkedConfig& cfg) {
        const auto path = build_maximal_path(cfg);
        return SelectionResult{cfg.marked(), mu(path), mu_real(path, signs, options.convention)};
      });
  for (const auto& s : report.per_selection) {
    report.total_complex += s.mu;
    *report.total_real += *s.mu_real;
  }
  return report;
}

inline CountReport complex_count(int d, std::initializer_list<BoundaryEdge> edges,
                                 const CountOptions& options = {}) {
  return complex_count(d, std::span<const BoundaryEdge>(edges.begin(), edges.size()), options);
}
inline CountReport real_count(int d, std::initializer_list<BoundaryEdge> edges,
                              const SignSequence& signs, const CountOptions& options = {}) {
  return real_count(d, std::span<const BoundaryEdge>(edges.begin(), edges.size()), signs, options);
}

struct MaximalityReport {
  int degree = 0;
  CountReport complex;
  CountReport real;
  bool maximal = false;            ///< real total equals complex total
  bool every_selection_four = false;  ///< each selection has mu = mu_real = 4
};

/// Two tangencies (hypotenuse and vertical edge) with the alternating-prefix
/// sign sequence.
inline MaximalityReport maximality_report(int d, const CountOptions& options = {}) {
  MaximalityReport r;
  r.degree = d;
  r.real = real_count(d, {BoundaryEdge::Hypotenuse, BoundaryEdge::Vertical},
                      theorem_sign_sequence(d), options);
  r.complex = complex_count(d, {BoundaryEdge::Hypotenuse, BoundaryEdge::Vertical}, options);
  r.maximal = r.real.total_real == r.complex.total_complex;
  r.every_selection_four =
      std::all_of(r.real.per_selection.begin(), r.real.per_selection.end(),
                  [](const SelectionResult& s) { return s.mu == 4 && s.mu_real == 4; });
  return r;
}

enum class SearchStrategy { Exhaustive, RandomRestart };

struct SearchResult {
  SignSequence best;
  std::int64_t total_real = 0;
  std::int64_t total_complex = 0;
  std::size_t evaluations = 0;
};

/// Looks for a sign sequence maximizing the real count.
///
/// Exhaustive walks all 4^n sequences and refuses when that exceeds
/// `budget`. RandomRestart hill-climbs from seeded random starts using
/// single-entry sign changes, spending at most `budget` evaluations and
/// stopping early once the complex total is reached.
inline SearchResult sign_search(int d, std::span<const BoundaryEdge> edges, SearchStrategy strategy,
                                std::uint64_t budget, std::uint64_t seed = 0) {
  validate_edges(d, edges);
  const auto n = maximal_path_length(d, edges.size());
  const CountOptions serial{false, kDefaultConvention};

  std::vector<LatticePath> paths;
  std::int64_t complex_total = 0;
  for (const auto& cfg : marked_selections(d, edges)) {
    paths.push_back(build_maximal_path(cfg));
    complex_total += mu(paths.back());
  }
  SearchResult result{SignSequence(n, kPlusPlus), -1, complex_total, 0};
  auto evaluate = [&](const SignSequence& s) {
    ++result.evaluations;
    std::int64_t total = 0;
    for (const auto& p : paths) total += mu_real(p, s, serial.convention);
    if (total > result.total_real) {
      result.total_real = total;
      result.best = s;
    }
    return total;
  };

  if (strategy == SearchStrategy::Exhaustive) {
    if (n >= 32 || (std::uint64_t{1} << (2 * n)) > budget)
      throw std::invalid_argument("exhaustive search over 4^" + std::to_string(n) +
                                  " sign sequences exceeds the budget of " +
                                  std::to_string(budget));
    const std::uint64_t count = std::uint64_t{1} << (2 * n);
    SignSequence s(n, kPlusPlus);
    for (std::uint64_t code = 0; code < count; ++code) {
      for (std::size_t j = 0; j < n; ++j)
        s[j] = Sign::from_index(static_cast<std::uint8_t>(code >> (2 * j) & 3));
      if (evaluate(s) == complex_total) break;
    }
    return result;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, 3);
  while (result.evaluations < budget && result.total_real < complex_total) {
    SignSequence current(n, kPlusPlus);
    for (std::size_t j = 0; j < n; ++j) current[j] = Sign::from_index(static_cast<std::uint8_t>(pick(rng)));
    std::int64_t value = evaluate(current);
    bool improved = true;
    while (improved && result.evaluations < budget && value < complex_total) {
      improved = false;
      for (std::size_t j = 0; j < n && !improved && result.evaluations < budget; ++j) {
        const Sign original = current[j];
        for (std::uint8_t alt = 1; alt < 4 && result.evaluations < budget; ++alt) {
          current[j] = original + Sign::from_index(alt);
          const auto candidate = evaluate(current);
          if (candidate > value) {
            value = candidate;
            improved = true;
            break;
          }
          current[j] = original;
        }
      }
    }
  }
  return result;
}

inline SearchResult sign_search(int d, std::initializer_list<BoundaryEdge> edges,
                                SearchStrategy strategy, std::uint64_t budget,
                                std::uint64_t seed = 0) {
  return sign_search(d, std::span<const BoundaryEdge>(edges.begin(), edges.size()), strategy,
                     budget, seed);
}

}  // namespace tz
