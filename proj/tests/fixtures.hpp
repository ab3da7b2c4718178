#pragma once

// Shared test fixtures and an independent brute-force oracle. The oracle
// re-derives every semantics by scanning all subsets with its own set
// arithmetic (no bit-mask shortcuts, no shared enumeration code), so tests
// can cross-check the library's enumeration and early-exit paths against it.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vacred/af.hpp"
#include "vacred/semantics.hpp"
#include "vacred/vacuous.hpp"

namespace fixtures {

using vacred::ArgSet;
using vacred::ArgumentationFramework;
using vacred::ExtensionSet;

inline ArgumentationFramework f1() {
  return vacred::make_af({"a", "b", "c", "d"},
                         {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"c", "d"}});
}

inline ArgumentationFramework f2() {
  return vacred::make_af({"a", "b", "c"},
                         {{"a", "b"}, {"b", "a"}, {"b", "c"}, {"c", "c"}});
}

inline ArgumentationFramework f3() {
  return vacred::make_af({"a", "b", "c", "d", "e"},
                         {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"d", "e"}});
}

inline ArgumentationFramework f4() {
  return vacred::make_af({"a", "b", "c", "d"},
                         {{"a", "b"},
                          {"a", "c"},
                          {"b", "a"},
                          {"c", "a"},
                          {"c", "d"},
                          {"d", "d"},
                          {"d", "c"}});
}

inline ArgumentationFramework f5() {
  return vacred::make_af({"a", "b"}, {{"a", "a"}, {"a", "b"}});
}

inline ArgumentationFramework f6() {
  return vacred::make_af({"a", "b"}, {{"a", "b"}, {"b", "a"}});
}

inline ArgumentationFramework f7() {
  return vacred::make_af({"a", "b", "c"},
                         {{"a", "a"}, {"a", "b"}, {"b", "c"}});
}

inline ArgSet set(const ArgumentationFramework& af,
                  std::vector<std::string> names) {
  return vacred::set_from_names(af, names);
}

inline ExtensionSet sets(const ArgumentationFramework& af,
                         std::vector<std::vector<std::string>> collections) {
  std::vector<ArgSet> result;
  for (auto& names : collections) result.push_back(set(af, names));
  return ExtensionSet::of(std::move(result));
}

namespace oracle {

// Everything below works from ArgumentationFramework::has_attack alone.

inline std::vector<ArgSet> all_subsets(const ArgumentationFramework& af) {
  std::vector<ArgSet> subsets;
  for (ArgSet s = 0; s < (ArgSet{1} << af.arg_count()); ++s) subsets.push_back(s);
  return subsets;
}

inline bool member(ArgSet set, int arg) { return ((set >> arg) & 1) != 0; }

inline bool set_attacks(const ArgumentationFramework& af, ArgSet from,
                        ArgSet to) {
  for (int i = 0; i < af.arg_count(); ++i)
    for (int j = 0; j < af.arg_count(); ++j)
      if (member(from, i) && member(to, j) && af.has_attack(i, j)) return true;
  return false;
}

inline ArgSet plus(const ArgumentationFramework& af, ArgSet e) {
  ArgSet result = 0;
  for (int a = 0; a < af.arg_count(); ++a)
    if (set_attacks(af, e, vacred::arg_bit(a))) result |= vacred::arg_bit(a);
  return result;
}

inline ArgSet minus(const ArgumentationFramework& af, ArgSet e) {
  ArgSet result = 0;
  for (int a = 0; a < af.arg_count(); ++a)
    if (set_attacks(af, vacred::arg_bit(a), e)) result |= vacred::arg_bit(a);
  return result;
}

inline ArgSet gamma(const ArgumentationFramework& af, ArgSet e) {
  ArgSet result = 0;
  for (int a = 0; a < af.arg_count(); ++a) {
    bool defended = true;
    for (int b = 0; b < af.arg_count(); ++b)
      if (af.has_attack(b, a) && !set_attacks(af, e, vacred::arg_bit(b)))
        defended = false;
    if (defended) result |= vacred::arg_bit(a);
  }
  return result;
}

inline bool conflict_free(const ArgumentationFramework& af, ArgSet e) {
  return !set_attacks(af, e, e);
}

inline bool admissible(const ArgumentationFramework& af, ArgSet e) {
  return conflict_free(af, e) && (e & ~gamma(af, e)) == 0;
}

inline bool complete(const ArgumentationFramework& af, ArgSet e) {
  return conflict_free(af, e) && gamma(af, e) == e;
}

inline bool stable(const ArgumentationFramework& af, ArgSet e) {
  return conflict_free(af, e) && (af.universe() & ~e) == plus(af, e);
}

inline std::vector<ArgSet> filtered(const ArgumentationFramework& af,
                                    bool (*predicate)(const ArgumentationFramework&,
                                                      ArgSet)) {
  std::vector<ArgSet> result;
  for (ArgSet s : all_subsets(af))
    if (predicate(af, s)) result.push_back(s);
  return result;
}

inline std::vector<ArgSet> maximal(const std::vector<ArgSet>& family) {
  std::vector<ArgSet> result;
  for (ArgSet e : family) {
    bool is_max = true;
    for (ArgSet d : family)
      if (d != e && (e & ~d) == 0) is_max = false;
    if (is_max) result.push_back(e);
  }
  return result;
}

/// Oracle extensions for a classical token, straight from the definitions.
inline ExtensionSet extensions(const ArgumentationFramework& af,
                               const std::string& token) {
  std::vector<ArgSet> result;
  if (token == "cf") {
    result = filtered(af, conflict_free);
  } else if (token == "na") {
    result = maximal(filtered(af, conflict_free));
  } else if (token == "adm") {
    result = filtered(af, admissible);
  } else if (token == "co") {
    result = filtered(af, complete);
  } else if (token == "pr") {
    result = maximal(filtered(af, admissible));
  } else if (token == "gr") {
    // Least complete extension, found by filtering rather than iteration.
    const std::vector<ArgSet> completes = filtered(af, complete);
    for (ArgSet e : completes) {
      bool least = true;
      for (ArgSet d : completes)
        if ((e & ~d) != 0) least = false;
      if (least) result.push_back(e);
    }
  } else if (token == "id") {
    const std::vector<ArgSet> preferred = maximal(filtered(af, admissible));
    std::vector<ArgSet> candidates;
    for (ArgSet e : filtered(af, complete)) {
      bool below_all = true;
      for (ArgSet p : preferred)
        if ((e & ~p) != 0) below_all = false;
      if (below_all) candidates.push_back(e);
    }
    result = maximal(candidates);
  } else if (token == "stb") {
    result = filtered(af, stable);
  } else if (token == "sst") {
    const std::vector<ArgSet> preferred = maximal(filtered(af, admissible));
    for (ArgSet e : preferred) {
      bool max_range = true;
      for (ArgSet d : preferred) {
        const ArgSet re = e | plus(af, e);
        const ArgSet rd = d | plus(af, d);
        if (re != rd && (re & ~rd) == 0) max_range = false;
      }
      if (max_range) result.push_back(e);
    }
  } else {
    throw vacred::Error("oracle does not know semantics '" + token + "'");
  }
  return ExtensionSet::of(std::move(result));
}

/// Oracle reduct, built from scratch with its own index bookkeeping.
inline ArgumentationFramework reduct_af(const ArgumentationFramework& af,
                                        ArgSet e,
                                        std::vector<int>* kept_out = nullptr) {
  std::vector<int> kept;
  for (int a = 0; a < af.arg_count(); ++a)
    if (!member(e, a) && !set_attacks(af, e, vacred::arg_bit(a)))
      kept.push_back(a);
  std::vector<std::string> labels;
  for (int a : kept) labels.push_back(af.label(a));
  ArgumentationFramework result(static_cast<int>(kept.size()), labels);
  for (std::size_t i = 0; i < kept.size(); ++i)
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (af.has_attack(kept[i], kept[j]))
        result.add_attack(static_cast<int>(i), static_cast<int>(j));
  if (kept_out != nullptr) *kept_out = kept;
  return result;
}

/// Oracle combinator: full enumeration of the vacuity condition, no early
/// exit, mapped over its own reduct construction.
inline ExtensionSet vac(const ArgumentationFramework& af,
                        const std::string& base_token,
                        const std::string& vacuity_token) {
  std::vector<ArgSet> kept;
  for (ArgSet e : extensions(af, base_token)) {
    const ArgumentationFramework red = reduct_af(af, e);
    bool vacuous = true;
    for (ArgSet t : extensions(red, vacuity_token))
      if (t != 0) vacuous = false;
    if (vacuous) kept.push_back(e);
  }
  return ExtensionSet::of(std::move(kept));
}

}  // namespace oracle

}  // namespace fixtures
