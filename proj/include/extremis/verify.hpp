#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string_view>
#include <tuple>
#include <string>
#include <vector>

#include "extremis/canon.hpp"
#include "extremis/classify.hpp"
#include "extremis/constructions.hpp"
#include "extremis/counting.hpp"
#include "extremis/generate.hpp"
#include "extremis/graph6.hpp"

namespace extremis {

enum class Theorem { Disconnected, Connected };

inline std::string_view theorem_name(Theorem t) { return t == Theorem::Connected ? "theorem2" : "theorem1"; }

/// Outcome of one (n, alpha) stratum.
struct VerificationReport {
  Theorem theorem = Theorem::Connected;
  int n = 0;
  int alpha = 0;
  Count predicted = 0;
  Count observed_max = 0;
  std::vector<CanonicalForm> extremal_forms;
  std::vector<CanonicalForm> expected_forms;
  bool pass = false;
  std::uint64_t graphs_examined = 0;
  std::chrono::milliseconds elapsed{0};
};

/// Running maximum of the count over one stratum, with every canonical form
/// attaining it. Merging is associative and commutative.
struct StratumStats {
  Count max = 0;
  std::set<CanonicalForm> forms;
  std::uint64_t examined = 0;

  void observe(const Graph& g, Count count) {
    ++examined;
    if (count < max) return;
    if (count > max) {
      max = count;
      forms.clear();
    }
    forms.insert(canonical_form(g));
  }

  void merge(const StratumStats& other) {
    examined += other.examined;
    if (other.max > max) {
      max = other.max;
      forms = other.forms;
    } else if (other.max == max) {
      forms.insert(other.forms.begin(), other.forms.end());
    }
  }

  friend bool operator==(const StratumStats&, const StratumStats&) = default;
};

/// Stats indexed by independence number.
using StrataStats = std::vector<StratumStats>;

inline void merge_strata(StrataStats& into, const StrataStats& from) {
  if (into.size() < from.size()) into.resize(from.size());
  for (std::size_t a = 0; a < from.size(); ++a) into[a].merge(from[a]);
}

/// Where the graphs of a scan come from: the internal generator, or a trusted
/// caller-supplied catalog (no isomorphism filtering).
struct GraphSource {
  std::optional<std::span<const Graph>> catalog;

  static GraphSource generator() { return {}; }
  static GraphSource from(std::span<const Graph> graphs) { return {graphs}; }
};

namespace detail {

template <class Accumulator, class Visit>
Accumulator scan_and_merge(int n, bool connected_only, const GraphSource& source, int jobs, const Accumulator& init,
                           Visit visit) {
  std::vector<Accumulator> parts;
  if (source.catalog) {
    parts = scan_graphs(*source.catalog, jobs, init, [&](Accumulator& acc, const Graph& g) {
      if (g.order() != n || (connected_only && !is_connected(g))) return;
      visit(acc, g);
    });
  } else {
    parts = scan_generated(n, connected_only, jobs, init, visit);
  }
  Accumulator total = init;
  for (const auto& p : parts) total.merge(p);
  return total;
}

struct StrataAccumulator {
  StrataStats strata;
  void merge(const StrataAccumulator& o) { merge_strata(strata, o.strata); }
};

}  // namespace detail

/// Max count and extremal forms per independence number over all graphs of
/// order n (connected ones for the connected theorem).
inline StrataStats scan_strata(int n, Theorem theorem, const GraphSource& source, int jobs) {
  const bool connected_only = theorem == Theorem::Connected;
  detail::StrataAccumulator init;
  init.strata.resize(n + 1);
  auto total = detail::scan_and_merge(n, connected_only, source, jobs, init,
                                      [](detail::StrataAccumulator& acc, const Graph& g) {
                                        const auto r = count_mis(g);
                                        acc.strata[r.alpha].observe(g, r.num_mis);
                                      });
  return std::move(total.strata);
}

inline VerificationReport make_report(Theorem theorem, int n, int alpha, const StratumStats& stats) {
  VerificationReport r;
  r.theorem = theorem;
  r.n = n;
  r.alpha = alpha;
  if (theorem == Theorem::Connected) {
    r.predicted = f_formula(n, alpha);
    r.expected_forms = family_forms(n, alpha);
  } else {
    r.predicted = g_formula(n, alpha);
    r.expected_forms = {canonical_form(build_G(n, alpha))};
  }
  r.observed_max = stats.max;
  r.extremal_forms.assign(stats.forms.begin(), stats.forms.end());
  r.graphs_examined = stats.examined;
  r.pass = r.graphs_examined > 0 && r.observed_max == r.predicted && r.extremal_forms == r.expected_forms;
  return r;
}

/// Checks the bound and the extremal graphs for each requested alpha (all
/// 1 <= alpha < n when `alpha` is empty). One scan serves every stratum.
inline std::vector<VerificationReport> verify_theorem(Theorem theorem, int n, std::optional<int> alpha,
                                                      const GraphSource& source, int jobs) {
  if (n < 2) throw ConstructionError("verification needs order at least 2");
  if (alpha && (*alpha < 1 || *alpha >= n)) throw ConstructionError("alpha must satisfy 1 <= alpha < n");
  const auto start = std::chrono::steady_clock::now();
  const StrataStats strata = scan_strata(n, theorem, source, jobs);
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  std::vector<VerificationReport> reports;
  for (int a = 1; a < n; ++a) {
    if (alpha && a != *alpha) continue;
    reports.push_back(make_report(theorem, n, a, strata[a]));
    reports.back().elapsed = elapsed;
  }
  return reports;
}

inline VerificationReport verify_theorem2(int n, int alpha, const GraphSource& source = GraphSource::generator(),
                                          int jobs = 1) {
  return verify_theorem(Theorem::Connected, n, alpha, source, jobs).front();
}

inline VerificationReport verify_theorem1(int n, int alpha, const GraphSource& source = GraphSource::generator(),
                                          int jobs = 1) {
  return verify_theorem(Theorem::Disconnected, n, alpha, source, jobs).front();
}

struct Lemma3Violation {
  std::string graph6;
  int alpha = 0;
  Count num_mis = 0;
  Count bound = 0;
  std::string reason;

  friend bool operator==(const Lemma3Violation&, const Lemma3Violation&) = default;
  friend auto operator<=>(const Lemma3Violation& a, const Lemma3Violation& b) {
    return std::tie(a.graph6, a.reason) <=> std::tie(b.graph6, b.reason);
  }
};

struct Lemma3Result {
  int n = 0;
  std::uint64_t graphs_examined = 0;
  /// Graphs having a vertex in no maximum independent set.
  std::uint64_t graphs_applicable = 0;
  /// Applicable graphs meeting the bound with equality.
  std::uint64_t equality_cases = 0;
  std::vector<Lemma3Violation> violations;

  bool pass() const { return violations.empty(); }

  void merge(const Lemma3Result& o) {
    graphs_examined += o.graphs_examined;
    graphs_applicable += o.graphs_applicable;
    equality_cases += o.equality_cases;
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
    std::sort(violations.begin(), violations.end());
  }
};

/// Applies the bound for graphs with a vertex outside every maximum independent
/// set, and the characterization of its equality case, to every connected graph
/// of order n. Returns the counterexamples found.
inline Lemma3Result check_lemma3(int n, const GraphSource& source = GraphSource::generator(), int jobs = 1) {
  // Family forms per alpha, computed up front so workers share them read-only.
  std::vector<std::set<CanonicalForm>> families(n + 1);
  for (int a = 1; a < n; ++a) {
    auto forms = family_forms(n, a);
    families[a].insert(forms.begin(), forms.end());
  }
  Lemma3Result init;
  init.n = n;
  auto visit = [&](Lemma3Result& acc, const Graph& g) {
    ++acc.graphs_examined;
    const auto r = count_mis(g, true);
    if (r.alpha >= n) return;
    const auto& through = *r.per_vertex;
    if (std::find(through.begin(), through.end(), Count{0}) == through.end()) return;
    ++acc.graphs_applicable;
    const Count bound = f_formula(n, r.alpha);
    const bool member = families[r.alpha].contains(canonical_form(g));
    auto fail = [&](std::string reason) {
      acc.violations.push_back({encode_graph6(g), r.alpha, r.num_mis, bound, std::move(reason)});
    };
    if (r.num_mis > bound) fail("count exceeds bound");
    if (r.num_mis == bound) {
      ++acc.equality_cases;
      if (!member) fail("equality outside the extremal family");
    } else if (member) {
      fail("extremal family member below the bound");
    }
  };
  Lemma3Result total = detail::scan_and_merge(n, true, source, jobs, init, visit);
  total.n = n;
  return total;
}

struct EdgeAdditionViolation {
  int n = 0;
  int alpha = 0;
  Edge edge;
  int new_alpha = 0;
  Count new_count = 0;
};

/// Adds each non-edge of F(n, alpha) in turn. For n >= 2 alpha the independence
/// number must stay alpha and the count must fall below f(n, alpha); for
/// n < 2 alpha and endpoints other than the hub, either alpha drops or the
/// count falls below f(n, alpha).
inline std::vector<EdgeAdditionViolation> check_edge_additions(int n, int alpha) {
  const Graph f = build_F(n, alpha);
  const Count bound = f_formula(n, alpha);
  std::vector<EdgeAdditionViolation> out;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (f.has_edge(u, v)) continue;
      const bool dense = n >= 2 * alpha;
      if (!dense && (u == kHub || v == kHub)) continue;
      const auto r = count_mis(f.with_edge(u, v));
      const bool ok = dense ? (r.alpha == alpha && r.num_mis < bound)
                            : (r.alpha < alpha || (r.alpha == alpha && r.num_mis < bound));
      if (!ok) out.push_back({n, alpha, {u, v}, r.alpha, r.num_mis});
    }
  }
  return out;
}

}  // namespace extremis
