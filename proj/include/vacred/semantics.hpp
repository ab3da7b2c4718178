#pragma once

// The nine classical extension-based semantics, enumerated by depth-first
// traversal of the conflict-free subset lattice (conflict-free sets form a
// downward-closed family, so the traversal prunes exactly).
//
// Grounded is computed by fixpoint iteration of the defense operator; ideal
// follows its definition verbatim (maximal complete extension contained in
// every preferred one). stb_cog_direct and co_ub_direct are independent
// characterizations used as cross-check oracles elsewhere.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "vacred/af.hpp"

namespace vacred {

enum class Classical { Cf, Na, Adm, Co, Pr, Gr, Id, Stb, Sst };

inline constexpr std::array<Classical, 9> kAllClassical = {
    Classical::Cf, Classical::Na, Classical::Adm,
    Classical::Co, Classical::Pr, Classical::Gr,
    Classical::Id, Classical::Stb, Classical::Sst};

constexpr std::string_view to_token(Classical sem) {
  switch (sem) {
    case Classical::Cf: return "cf";
    case Classical::Na: return "na";
    case Classical::Adm: return "adm";
    case Classical::Co: return "co";
    case Classical::Pr: return "pr";
    case Classical::Gr: return "gr";
    case Classical::Id: return "id";
    case Classical::Stb: return "stb";
    case Classical::Sst: return "sst";
  }
  return "";
}

inline std::optional<Classical> classical_from_token(std::string_view token) {
  for (Classical sem : kAllClassical)
    if (to_token(sem) == token) return sem;
  return std::nullopt;
}

namespace detail {

// Visits every conflict-free set exactly once together with its E+ value.
// The visitor returns false to abort the traversal.
template <typename Visit>
bool conflict_free_dfs(const ArgumentationFramework& af, int next, ArgSet e,
                       ArgSet e_targets, Visit& visit) {
  if (!visit(e, e_targets)) return false;
  for (int a = next; a < af.arg_count(); ++a) {
    const ArgSet abit = arg_bit(a);
    if ((e_targets & abit) != 0) continue;
    if ((af.targets_of(a) & (e | abit)) != 0) continue;
    if (!conflict_free_dfs(af, a + 1, e | abit, e_targets | af.targets_of(a),
                           visit))
      return false;
  }
  return true;
}

}  // namespace detail

template <typename Visit>
void for_each_conflict_free(const ArgumentationFramework& af, Visit visit) {
  detail::conflict_free_dfs(af, 0, 0, 0, visit);
}

inline bool is_admissible_set(const ArgumentationFramework& af, ArgSet e,
                              ArgSet e_targets) {
  for (ArgSet rest = e; rest != 0; rest &= rest - 1)
    if ((af.attackers_of(std::countr_zero(rest)) & ~e_targets) != 0)
      return false;
  return true;
}

inline bool is_stable_set(const ArgumentationFramework& af, ArgSet e,
                          ArgSet e_targets) {
  return (af.universe() & ~e) == e_targets;
}

/// True when some argument outside E can be added without creating a conflict,
/// i.e. E has a conflict-free strict superset.
inline bool has_conflict_free_strict_superset(const ArgumentationFramework& af,
                                              ArgSet e, ArgSet e_targets) {
  for (int a = 0; a < af.arg_count(); ++a) {
    const ArgSet abit = arg_bit(a);
    if ((e & abit) != 0) continue;
    if ((e_targets & abit) != 0) continue;
    if ((af.targets_of(a) & (e | abit)) != 0) continue;
    return true;
  }
  return false;
}

/// Least fixpoint of the defense operator, reached from the empty set.
inline ArgSet grounded_mask(const ArgumentationFramework& af) {
  ArgSet current = 0;
  for (;;) {
    const ArgSet next = defended_given_targets(af, attacked_by(af, current));
    if (next == current) return current;
    current = next;
  }
}

inline std::vector<ArgSet> admissible_masks(const ArgumentationFramework& af) {
  std::vector<ArgSet> result;
  for_each_conflict_free(af, [&](ArgSet e, ArgSet targets) {
    if (is_admissible_set(af, e, targets)) result.push_back(e);
    return true;
  });
  return result;
}

inline std::vector<ArgSet> maximal_masks(const std::vector<ArgSet>& sets) {
  std::vector<ArgSet> result;
  for (ArgSet e : sets) {
    bool maximal = true;
    for (ArgSet d : sets)
      if (d != e && (e & ~d) == 0) {
        maximal = false;
        break;
      }
    if (maximal) result.push_back(e);
  }
  return result;
}

inline std::vector<ArgSet> preferred_masks(const ArgumentationFramework& af) {
  return maximal_masks(admissible_masks(af));
}

/// Unique maximal complete extension contained in every preferred extension.
inline ArgSet ideal_mask(const ArgumentationFramework& af) {
  const std::vector<ArgSet> preferred = preferred_masks(af);
  std::vector<ArgSet> candidates;
  for_each_conflict_free(af, [&](ArgSet e, ArgSet targets) {
    if (defended_given_targets(af, targets) != e) return true;
    for (ArgSet p : preferred)
      if ((e & ~p) != 0) return true;
    candidates.push_back(e);
    return true;
  });
  const std::vector<ArgSet> maximal = maximal_masks(candidates);
  if (maximal.size() != 1)
    throw InternalInvariantError("ideal extension is not unique");
  return maximal.front();
}

inline ExtensionSet extensions(const ArgumentationFramework& af,
                               Classical sem) {
  std::vector<ArgSet> found;
  switch (sem) {
    case Classical::Cf:
      for_each_conflict_free(af, [&](ArgSet e, ArgSet) {
        found.push_back(e);
        return true;
      });
      break;
    case Classical::Na:
      for_each_conflict_free(af, [&](ArgSet e, ArgSet targets) {
        if (!has_conflict_free_strict_superset(af, e, targets))
          found.push_back(e);
        return true;
      });
      break;
    case Classical::Adm:
      found = admissible_masks(af);
      break;
    case Classical::Co:
      for_each_conflict_free(af, [&](ArgSet e, ArgSet targets) {
        if (defended_given_targets(af, targets) == e) found.push_back(e);
        return true;
      });
      break;
    case Classical::Pr:
      found = preferred_masks(af);
      break;
    case Classical::Gr:
      found.push_back(grounded_mask(af));
      break;
    case Classical::Id:
      found.push_back(ideal_mask(af));
      break;
    case Classical::Stb:
      for_each_conflict_free(af, [&](ArgSet e, ArgSet targets) {
        if (is_stable_set(af, e, targets)) found.push_back(e);
        return true;
      });
      break;
    case Classical::Sst: {
      const std::vector<ArgSet> preferred = preferred_masks(af);
      std::vector<ArgSet> ranges;
      ranges.reserve(preferred.size());
      for (ArgSet p : preferred) ranges.push_back(p | attacked_by(af, p));
      for (std::size_t i = 0; i < preferred.size(); ++i) {
        bool maximal_range = true;
        for (std::size_t j = 0; j < preferred.size(); ++j)
          if (ranges[j] != ranges[i] && (ranges[i] & ~ranges[j]) == 0) {
            maximal_range = false;
            break;
          }
        if (maximal_range) found.push_back(preferred[i]);
      }
      break;
    }
  }
  return ExtensionSet::of(std::move(found));
}

/// Union of all extensions: the credulously accepted arguments.
inline ArgSet credulous_union(const ArgumentationFramework& af, Classical sem) {
  return extensions(af, sem).union_all();
}

/// Stable extensions of the framework with all self-attackers deleted,
/// expressed in the original argument identities.
inline ExtensionSet stb_cog_direct(const ArgumentationFramework& af) {
  const Restriction cut =
      restriction(af, af.universe() & ~self_attackers(af));
  std::vector<ArgSet> found;
  for (ArgSet e : extensions(cut.af, Classical::Stb))
    found.push_back(cut.to_parent(e));
  return ExtensionSet::of(std::move(found));
}

/// Conflict-free sets closed under the defense operator from above.
inline ExtensionSet co_ub_direct(const ArgumentationFramework& af) {
  std::vector<ArgSet> found;
  for_each_conflict_free(af, [&](ArgSet e, ArgSet targets) {
    if ((defended_given_targets(af, targets) & ~e) == 0) found.push_back(e);
    return true;
  });
  return ExtensionSet::of(std::move(found));
}

}  // namespace vacred
