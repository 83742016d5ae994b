#ifndef MIXEDTORI_CRITERIA_HPP
#define MIXEDTORI_CRITERIA_HPP

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mixedtori/error.hpp"
#include "mixedtori/torus_check.hpp"
#include "mixedtori/winding.hpp"

namespace mixedtori {

// ---------------------------------------------------------------------------
// Evidence records

/// A named integer from the table or profile: ms_t[i], ms_phi[i] (vertex
/// index), w[i], wprime[i] (face index).
struct Quantity {
  enum class Kind { ms_t, ms_phi, w, wprime };
  Kind kind = Kind::ms_t;
  int index = 0;

  std::string name() const {
    static constexpr std::string_view names[] = {"ms_t", "ms_phi", "w", "wprime"};
    return std::string(names[static_cast<int>(kind)]) + "[" + std::to_string(index) + "]";
  }
};

/// |quantity| > bound, with the value it had when recorded.
struct Inequality {
  Quantity quantity;
  int value = 0;
  int bound = 0;

  bool holds() const { return std::abs(value) > bound; }
  std::string str() const {
    return "|" + quantity.name() + "| = " + std::to_string(std::abs(value)) + " > " +
           std::to_string(bound);
  }
};

inline int lookup(const Quantity& q, const MultiplicityTable& tab, const WindingProfile& prof) {
  switch (q.kind) {
    case Quantity::Kind::ms_t: return tab.ms_t.at(q.index);
    case Quantity::Kind::ms_phi: return tab.ms_phi.at(q.index);
    case Quantity::Kind::w: return prof.w_at(q.index);
    case Quantity::Kind::wprime: return prof.wprime_at(q.index);
  }
  return 0;
}

/// The essential torus ∂V_i together with one sufficient set of inequalities.
/// A torus may carry several witnesses.
struct TorusWitness {
  int torus = 0;
  std::vector<Inequality> inequalities;
};

enum class CriterionId { thm1_1, thm1_2_i, thm1_2_ii, thm1_2_iii, thm1_3 };

inline std::string_view to_string(CriterionId id) {
  switch (id) {
    case CriterionId::thm1_1: return "thm1.1";
    case CriterionId::thm1_2_i: return "thm1.2(i)";
    case CriterionId::thm1_2_ii: return "thm1.2(ii)";
    case CriterionId::thm1_2_iii: return "thm1.2(iii)";
    case CriterionId::thm1_3: return "thm1.3";
  }
  return "unknown";
}

struct CriterionOutcome {
  CriterionId id = CriterionId::thm1_1;
  bool fired = false;
  std::set<int> essential_tori;
  std::vector<TorusWitness> evidence;
  std::vector<std::string> caveats;
  std::string reason;  // why nothing fired, when that is structural
};

/// Re-evaluates every recorded inequality against the table and profile.
inline bool audit(const CriterionOutcome& o, const MultiplicityTable& tab, const WindingProfile& prof) {
  if (o.fired && o.evidence.empty()) return false;
  for (const auto& wit : o.evidence) {
    for (const auto& ineq : wit.inequalities) {
      if (lookup(ineq.quantity, tab, prof) != ineq.value || !ineq.holds()) return false;
    }
  }
  return true;
}

namespace detail {

inline Inequality make_ineq(Quantity::Kind k, int index, int bound, const MultiplicityTable& tab,
                            const WindingProfile& prof) {
  Quantity q{k, index};
  return {q, lookup(q, tab, prof), bound};
}

inline void record(CriterionOutcome& o, int torus, std::vector<Inequality> ineqs) {
  o.fired = true;
  o.essential_tori.insert(torus);
  o.evidence.push_back({torus, std::move(ineqs)});
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Theorems on polynomial data

/// ∂V_i is essential when min(|ms_t[i]|, |ms_phi[i]|) > 1, i = 1 … N-1.
inline CriterionOutcome fast_criterion(const MultiplicityTable& tab) {
  using K = Quantity::Kind;
  CriterionOutcome o;
  o.id = CriterionId::thm1_1;
  const int n = tab.face_count();
  if (n < 2) {
    o.reason = "requires N >= 2";
    return o;
  }
  const WindingProfile prof = winding_profile(tab);
  for (int i = 1; i <= n - 1; ++i) {
    if (std::abs(tab.ms_t[i]) > 1 && std::abs(tab.ms_phi[i]) > 1) {
      detail::record(o, i, {detail::make_ineq(K::ms_t, i, 1, tab, prof),
                            detail::make_ineq(K::ms_phi, i, 1, tab, prof)});
    }
  }
  return o;
}

inline constexpr std::string_view kCertifiedSubsetCaveat =
    "I_f used is the certified-nonempty subset (faces with nonzero w or w')";

/// Branches (i), (ii), (iii) over an explicit ascending index set `set`.
/// Always returns the three outcomes in that order.
inline std::vector<CriterionOutcome> general_criterion(const MultiplicityTable& tab,
                                                       const WindingProfile& prof,
                                                       const std::set<int>& set) {
  using K = Quantity::Kind;
  std::vector<CriterionOutcome> out(3);
  out[0].id = CriterionId::thm1_2_i;
  out[1].id = CriterionId::thm1_2_ii;
  out[2].id = CriterionId::thm1_2_iii;
  for (auto& o : out) o.caveats.emplace_back(kCertifiedSubsetCaveat);

  const std::vector<int> idx(set.begin(), set.end());
  const int n = static_cast<int>(idx.size());
  if (n < 3) {
    for (auto& o : out) o.reason = "requires n >= 3 (n = " + std::to_string(n) + ")";
    return out;
  }

  // (i) at ∂V_{i1}
  const int i1 = idx.front();
  if (std::abs(tab.ms_t[i1]) > 1) {
    for (int j = 1; j < n; ++j) {
      if (std::abs(prof.wprime_at(idx[j])) > 0) {
        detail::record(out[0], i1, {detail::make_ineq(K::ms_t, i1, 1, tab, prof),
                                    detail::make_ineq(K::wprime, idx[j], 0, tab, prof)});
      }
    }
  }

  // (ii) at ∂V_{ik}, 1 < k < n-1 (1-based k)
  for (int k = 2; k <= n - 2; ++k) {
    const int ik = idx[k - 1];
    for (int j = 1; j <= k; ++j) {
      if (std::abs(prof.w_at(idx[j - 1])) == 0) continue;
      for (int l = k + 1; l <= n; ++l) {
        if (std::abs(prof.wprime_at(idx[l - 1])) == 0) continue;
        detail::record(out[1], ik, {detail::make_ineq(K::w, idx[j - 1], 0, tab, prof),
                                    detail::make_ineq(K::wprime, idx[l - 1], 0, tab, prof)});
      }
    }
  }

  // (iii) at ∂V_{i_{n-1}}, read through vertex i_n - 1
  const int in = idx.back();
  const int target = idx[n - 2];
  if (std::abs(tab.ms_phi[in - 1]) > 1) {
    for (int j = 0; j < n - 1; ++j) {
      if (std::abs(prof.w_at(idx[j])) > 0) {
        detail::record(out[2], target, {detail::make_ineq(K::ms_phi, in - 1, 1, tab, prof),
                                        detail::make_ineq(K::w, idx[j], 0, tab, prof)});
      }
    }
  }
  return out;
}

inline std::vector<CriterionOutcome> general_criterion(const MultiplicityTable& tab,
                                                       const WindingProfile& prof) {
  return general_criterion(tab, prof, prof.certified_nonempty);
}

/// Four or more faces with nonzero winding on some side.
inline CriterionOutcome count_criterion(const WindingProfile& prof) {
  CriterionOutcome o;
  o.id = CriterionId::thm1_3;
  const int count = static_cast<int>(prof.certified_nonempty.size());
  if (count < 4) {
    o.reason = "only " + std::to_string(count) + " certified-nonempty faces (need 4)";
    return o;
  }
  o.fired = true;
  TorusWitness wit;  // torus 0: no specific torus is named
  for (int i : prof.certified_nonempty) {
    const bool use_w = prof.w_at(i) != 0;
    Quantity q{use_w ? Quantity::Kind::w : Quantity::Kind::wprime, i};
    wit.inequalities.push_back({q, use_w ? prof.w_at(i) : prof.wprime_at(i), 0});
  }
  o.evidence.push_back(std::move(wit));
  o.caveats.emplace_back("exterior contains an essential sphere or torus; no specific torus named");
  return o;
}

// ---------------------------------------------------------------------------
// Verdict

enum class Essentiality { essential, not_essential, unknown };

inline std::string_view to_string(Essentiality e) {
  switch (e) {
    case Essentiality::essential: return "essential";
    case Essentiality::not_essential: return "not-essential";
    case Essentiality::unknown: return "unknown";
  }
  return "unknown";
}

struct Verdict {
  std::map<int, Essentiality> tori;  // i = 1 … N-1
  bool non_hyperbolic = false;       // false means "unknown"
  bool reducible_or_toroidal = false;
  HypothesisReport hypotheses;
  std::vector<CriterionOutcome> outcomes;
  std::vector<std::string> caveats;
};

/// Unions the essential tori, derives the non-hyperbolicity flags and turns
/// every hypothesis that is not certified into a caveat. Never downgrades a
/// fired criterion.
inline Verdict assemble_verdict(const MultiplicityTable& tab, const WindingProfile& prof,
                                std::vector<CriterionOutcome> outcomes,
                                const HypothesisReport& hyp) {
  (void)prof;
  Verdict v;
  for (int i = 1; i < tab.face_count(); ++i) v.tori[i] = Essentiality::unknown;
  for (const auto& o : outcomes) {
    if (!o.fired) continue;
    v.non_hyperbolic = true;
    if (o.id == CriterionId::thm1_3) v.reducible_or_toroidal = true;
    for (int i : o.essential_tori) v.tori[i] = Essentiality::essential;
  }
  if (std::any_of(v.tori.begin(), v.tori.end(),
                  [](const auto& kv) { return kv.second == Essentiality::essential; })) {
    v.reducible_or_toroidal = true;
  }
  v.outcomes = std::move(outcomes);
  v.hypotheses = hyp;

  if (!hyp.convenient) v.caveats.emplace_back("polynomial is not convenient");
  for (const auto& vc : hyp.vertices) {
    if (vc.status == VertexStatus::inconclusive) {
      v.caveats.push_back("vertex " + std::to_string(vc.index) +
                          ": nonvanishing on the unit torus inconclusive");
    } else if (vc.status == VertexStatus::violated) {
      v.caveats.push_back("vertex " + std::to_string(vc.index) +
                          ": face function vanishes on the unit torus");
    }
  }
  for (const auto& fc : hyp.faces) {
    if (fc.status == FaceStatus::violated) {
      v.caveats.push_back("face " + std::to_string(fc.index) +
                          ": spot check found a singular zero (degenerate face)");
    }
  }
  v.caveats.emplace_back("1-face non-degeneracy is spot-checked numerically, not proven");
  return v;
}

// ---------------------------------------------------------------------------
// Nested solid tori with user-supplied link data

struct NestedComponent {
  int wrap = 0;
  int winding = 0;
  bool is_knot = true;
  std::optional<bool> is_trivial_knot;
};

struct NestedLinkSpec {
  int n = 0;
  std::vector<NestedComponent> components;  // L_1 … L_n
};

enum class TriState { no, yes, unknown };

inline TriState tri_and(TriState a, TriState b) {
  if (a == TriState::no || b == TriState::no) return TriState::no;
  if (a == TriState::yes && b == TriState::yes) return TriState::yes;
  return TriState::unknown;
}

inline TriState tri(bool b) { return b ? TriState::yes : TriState::no; }

struct NestedResult {
  int torus = 0;
  Essentiality status = Essentiality::unknown;
  std::string branch;
};

inline void validate(const NestedLinkSpec& spec) {
  if (spec.n < 2) throw Error(ErrorKind::InvalidSpec, "n must be at least 2");
  if (static_cast<int>(spec.components.size()) != spec.n) {
    throw Error(ErrorKind::InvalidSpec, "expected " + std::to_string(spec.n) + " components, got " +
                                            std::to_string(spec.components.size()));
  }
  for (std::size_t k = 0; k < spec.components.size(); ++k) {
    const auto& c = spec.components[k];
    const std::string where = "component " + std::to_string(k + 1);
    if (c.wrap < 0) throw Error(ErrorKind::InvalidSpec, where + ": negative wrap");
    if (c.wrap < std::abs(c.winding)) throw Error(ErrorKind::InvalidSpec, where + ": wrap < |winding|");
    if (!c.is_knot && c.is_trivial_knot.value_or(false)) {
      throw Error(ErrorKind::InvalidSpec, where + ": a multi-component link cannot be a trivial knot");
    }
  }
}

namespace detail {

// wrap > 1, or wrap = 1 and not the trivial knot. A link with several
// components is never the trivial knot.
inline TriState wraps_nontrivially(const NestedComponent& c) {
  if (c.wrap > 1) return TriState::yes;
  if (c.wrap < 1) return TriState::no;
  if (!c.is_knot) return TriState::yes;
  if (!c.is_trivial_knot) return TriState::unknown;
  return tri(!*c.is_trivial_knot);
}

inline bool any_positive(const NestedLinkSpec& s, int from, int to) {  // 1-based, inclusive
  for (int j = from; j <= to; ++j) {
    if (s.components[j - 1].wrap > 0) return true;
  }
  return false;
}

}  // namespace detail

/// Essentiality of ∂V_1 … ∂V_{n-1} from wrapping numbers and knot types.
inline std::vector<NestedResult> nested_characterization(const NestedLinkSpec& spec) {
  validate(spec);
  const int n = spec.n;
  const auto& c = spec.components;
  std::vector<NestedResult> out;
  for (int i = 1; i <= n - 1; ++i) {
    TriState t = TriState::unknown;
    std::string branch;
    if (i == 1 && n == 2) {
      branch = "i=1,n=2";
      t = tri_and(detail::wraps_nontrivially(c[0]), detail::wraps_nontrivially(c[1]));
    } else if (i == 1) {
      branch = "i=1,n>=3";
      t = tri_and(detail::wraps_nontrivially(c[0]), tri(detail::any_positive(spec, 2, n)));
    } else if (i == n - 1) {
      branch = "i=n-1,n>2";
      t = tri_and(tri(detail::any_positive(spec, 1, n - 1)), detail::wraps_nontrivially(c[n - 1]));
    } else {
      branch = "1<i<n-1";
      t = tri_and(tri(detail::any_positive(spec, 1, i)), tri(detail::any_positive(spec, i + 1, n)));
    }
    const Essentiality e = t == TriState::yes  ? Essentiality::essential
                           : t == TriState::no ? Essentiality::not_essential
                                               : Essentiality::unknown;
    out.push_back({i, e, branch});
  }
  return out;
}

/// n >= 4 components always give an essential sphere or torus.
inline bool nested_reducible_or_toroidal(const NestedLinkSpec& spec) {
  validate(spec);
  return spec.n >= 4;
}

}  // namespace mixedtori

#endif  // MIXEDTORI_CRITERIA_HPP
