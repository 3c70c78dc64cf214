#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "extremis/canon.hpp"
#include "extremis/constructions.hpp"
#include "extremis/counting.hpp"

namespace extremis {

enum class FamilyKind { GExtremal, FExtremal, FamilyMember, C5Exception, None };

inline std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::GExtremal: return "G-extremal";
    case FamilyKind::FExtremal: return "F-extremal";
    case FamilyKind::FamilyMember: return "Family-member";
    case FamilyKind::C5Exception: return "C5-exception";
    case FamilyKind::None: return "none";
  }
  return "none";
}

/// How a graph of order n and independence number alpha relates to the
/// extremal constructions.
struct FamilyDescriptor {
  int n = 0;
  int alpha = 0;
  FamilyKind kind = FamilyKind::None;
  /// Every vertex x0 with G connected and G - x0 isomorphic to G(n-1, alpha).
  VertexSet special_cutvertices;
  /// Connected and isomorphic to a member of the extremal family for (n, alpha).
  /// Differs from kind only when alpha = 1, where K_n is reported G-extremal.
  bool in_family = false;
};

class ClassifyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sorted canonical forms of every extremal family member.
inline std::vector<CanonicalForm> family_forms(int n, int alpha) {
  std::vector<CanonicalForm> forms;
  for (const Graph& g : enumerate_family(n, alpha)) forms.push_back(canonical_form(g));
  std::sort(forms.begin(), forms.end());
  return forms;
}

inline FamilyDescriptor classify_extremal(const Graph& g, int n, int alpha) {
  if (g.order() != n)
    throw ClassifyError("graph has order " + std::to_string(g.order()) + ", expected " + std::to_string(n));
  const int actual = independence_number(g);
  if (actual != alpha)
    throw ClassifyError("graph has independence number " + std::to_string(actual) + ", expected " +
                        std::to_string(alpha));

  FamilyDescriptor d;
  d.n = n;
  d.alpha = alpha;
  const CanonicalForm form = canonical_form(g);
  const bool connected = is_connected(g);

  if (alpha < n && connected) {
    const CanonicalForm rest = canonical_form(build_G(n - 1, alpha));
    for (int x = 0; x < n; ++x)
      if (canonical_form(g.without_vertex(x)) == rest) d.special_cutvertices.insert(x);
  }

  const bool is_G = form == canonical_form(build_G(n, alpha));
  bool is_F = false;
  bool is_C5 = false;
  if (alpha < n) {
    is_F = form == canonical_form(build_F(n, alpha));
    is_C5 = n == 5 && alpha == 2 && form == canonical_form(cycle_graph(5));
    if (n >= 2 * alpha)
      d.in_family = is_F || is_C5;
    else
      d.in_family = !d.special_cutvertices.empty();
  }

  if (is_G)
    d.kind = FamilyKind::GExtremal;
  else if (n >= 2 * alpha && is_F)
    d.kind = FamilyKind::FExtremal;
  else if (is_C5)
    d.kind = FamilyKind::C5Exception;
  else if (n < 2 * alpha && d.in_family)
    d.kind = FamilyKind::FamilyMember;
  return d;
}

}  // namespace extremis
