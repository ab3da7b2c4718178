#pragma once

// Core data model: finite argumentation frameworks over at most 64 arguments,
// argument sets as fixed-width bit masks, and the graph-level operations the
// semantics are built from (restriction, reduct, E+, E-, defense operator).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vacred {

/// A subset of the argument indices 0..n-1 of one framework, one bit per index.
using ArgSet = std::uint64_t;

inline constexpr int kMaxArguments = 64;

class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A framework or enumeration request exceeds a hard size limit.
class CapacityError : public Error {
  using Error::Error;
};

/// An argument set mentions indices outside the framework it is used with.
class MalformedSetError : public Error {
  using Error::Error;
};

class UnknownSemanticsError : public Error {
  using Error::Error;
};

/// A theorem the implementation relies on failed to hold; indicates a bug.
class InternalInvariantError : public std::logic_error {
  using std::logic_error::logic_error;
};

constexpr ArgSet arg_bit(int index) { return ArgSet{1} << index; }

constexpr ArgSet full_set(int count) {
  return count >= kMaxArguments ? ~ArgSet{0} : (ArgSet{1} << count) - 1;
}

inline int set_size(ArgSet set) { return std::popcount(set); }

/// Canonical order on argument sets: ascending cardinality, ties broken
/// lexicographically by the ascending sequence of member indices.
inline bool canonical_less(ArgSet a, ArgSet b) {
  const int ca = std::popcount(a);
  const int cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  ArgSet x = a;
  ArgSet y = b;
  while (x != 0 && y != 0) {
    const int i = std::countr_zero(x);
    const int j = std::countr_zero(y);
    if (i != j) return i < j;
    x &= x - 1;
    y &= y - 1;
  }
  return false;
}

/// Directed attack graph over dense argument indices with an optional-feeling
/// but always-present label table (generated frameworks get default labels).
class ArgumentationFramework {
 public:
  ArgumentationFramework() = default;

  explicit ArgumentationFramework(int arg_count)
      : ArgumentationFramework(arg_count, default_labels(arg_count)) {}

  ArgumentationFramework(int arg_count, std::vector<std::string> labels)
      : n_(arg_count),
        out_(static_cast<std::size_t>(arg_count), 0),
        in_(static_cast<std::size_t>(arg_count), 0),
        labels_(std::move(labels)) {
    if (arg_count < 0 || arg_count > kMaxArguments)
      throw CapacityError("argument count " + std::to_string(arg_count) +
                          " exceeds the capacity of " +
                          std::to_string(kMaxArguments));
    if (static_cast<int>(labels_.size()) != n_)
      throw Error("label table does not cover all arguments");
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (labels_[i] == labels_[j])
          throw Error("duplicate argument label '" + labels_[i] + "'");
  }

  int arg_count() const { return n_; }

  ArgSet universe() const { return full_set(n_); }

  void add_attack(int from, int to) {
    if (from < 0 || from >= n_ || to < 0 || to >= n_)
      throw Error("attack endpoint out of range");
    out_[from] |= arg_bit(to);
    in_[to] |= arg_bit(from);
  }

  bool has_attack(int from, int to) const {
    return (out_[from] & arg_bit(to)) != 0;
  }

  /// Arguments attacked by `arg`.
  ArgSet targets_of(int arg) const { return out_[arg]; }

  /// Arguments attacking `arg`.
  ArgSet attackers_of(int arg) const { return in_[arg]; }

  std::size_t attack_count() const {
    std::size_t total = 0;
    for (ArgSet row : out_) total += static_cast<std::size_t>(std::popcount(row));
    return total;
  }

  const std::string& label(int index) const { return labels_[index]; }

  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<int> index_of(std::string_view name) const {
    for (int i = 0; i < n_; ++i)
      if (labels_[i] == name) return i;
    return std::nullopt;
  }

  bool operator==(const ArgumentationFramework&) const = default;

  static std::vector<std::string> default_labels(int arg_count) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(std::max(arg_count, 0)));
    for (int i = 0; i < arg_count; ++i) labels.push_back("a" + std::to_string(i));
    return labels;
  }

 private:
  int n_ = 0;
  std::vector<ArgSet> out_;
  std::vector<ArgSet> in_;
  std::vector<std::string> labels_;
};

inline void require_member_set(const ArgumentationFramework& af, ArgSet set) {
  if ((set & ~af.universe()) != 0)
    throw MalformedSetError("argument set contains indices outside the framework");
}

/// E+ : arguments receiving an attack from E.
inline ArgSet attacked_by(const ArgumentationFramework& af, ArgSet e) {
  require_member_set(af, e);
  ArgSet result = 0;
  for (ArgSet rest = e; rest != 0; rest &= rest - 1)
    result |= af.targets_of(std::countr_zero(rest));
  return result;
}

/// E- : arguments attacking E.
inline ArgSet attackers_of(const ArgumentationFramework& af, ArgSet e) {
  require_member_set(af, e);
  ArgSet result = 0;
  for (ArgSet rest = e; rest != 0; rest &= rest - 1)
    result |= af.attackers_of(std::countr_zero(rest));
  return result;
}

/// Defense operator applied to a precomputed E+ value.
inline ArgSet defended_given_targets(const ArgumentationFramework& af,
                                     ArgSet e_targets) {
  ArgSet result = 0;
  for (int a = 0; a < af.arg_count(); ++a)
    if ((af.attackers_of(a) & ~e_targets) == 0) result |= arg_bit(a);
  return result;
}

/// Gamma(E) : arguments whose attackers are all attacked by E.
inline ArgSet defended_set(const ArgumentationFramework& af, ArgSet e) {
  return defended_given_targets(af, attacked_by(af, e));
}

inline bool is_conflict_free(const ArgumentationFramework& af, ArgSet e) {
  return (attacked_by(af, e) & e) == 0;
}

/// U is unattacked when every attacker of U lies inside U.
inline bool is_unattacked_set(const ArgumentationFramework& af, ArgSet u) {
  return (attackers_of(af, u) & ~u) == 0;
}

inline ArgSet self_attackers(const ArgumentationFramework& af) {
  ArgSet result = 0;
  for (int a = 0; a < af.arg_count(); ++a)
    if (af.has_attack(a, a)) result |= arg_bit(a);
  return result;
}

/// Result of cutting a framework down to a subset of its arguments. The
/// retained arguments are re-indexed densely; `kept[new_index]` gives the
/// original index, so identities survive the renumbering.
struct Restriction {
  ArgumentationFramework af;
  std::vector<int> kept;

  /// Maps a set over the restricted framework back into parent indices.
  ArgSet to_parent(ArgSet local) const {
    ArgSet parent = 0;
    for (ArgSet rest = local; rest != 0; rest &= rest - 1)
      parent |= arg_bit(kept[static_cast<std::size_t>(std::countr_zero(rest))]);
    return parent;
  }
};

/// F restricted to `keep`: the induced subframework on those arguments.
inline Restriction restriction(const ArgumentationFramework& af, ArgSet keep) {
  require_member_set(af, keep);
  std::vector<int> kept;
  kept.reserve(static_cast<std::size_t>(std::popcount(keep)));
  std::vector<std::string> labels;
  for (ArgSet rest = keep; rest != 0; rest &= rest - 1) {
    const int old = std::countr_zero(rest);
    kept.push_back(old);
    labels.push_back(af.label(old));
  }
  const int kept_count = static_cast<int>(kept.size());
  ArgumentationFramework sub(kept_count, std::move(labels));
  for (std::size_t i = 0; i < kept.size(); ++i)
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (af.has_attack(kept[i], kept[j]))
        sub.add_attack(static_cast<int>(i), static_cast<int>(j));
  return Restriction{std::move(sub), std::move(kept)};
}

/// The reduct F^E: F restricted to the arguments neither in E nor attacked by E.
inline Restriction reduct(const ArgumentationFramework& af, ArgSet e) {
  require_member_set(af, e);
  return restriction(af, af.universe() & ~(e | attacked_by(af, e)));
}

/// Canonically ordered, duplicate-free collection of argument sets.
class ExtensionSet {
 public:
  ExtensionSet() = default;

  static ExtensionSet of(std::vector<ArgSet> sets) {
    std::sort(sets.begin(), sets.end(), canonical_less);
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    ExtensionSet result;
    result.sets_ = std::move(sets);
    return result;
  }

  bool contains(ArgSet set) const {
    return std::binary_search(sets_.begin(), sets_.end(), set, canonical_less);
  }

  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  ArgSet at(std::size_t i) const { return sets_[i]; }

  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }

  const std::vector<ArgSet>& sets() const { return sets_; }

  /// True when the collection is empty or holds only the empty set.
  bool only_empty() const {
    return sets_.empty() || (sets_.size() == 1 && sets_[0] == 0);
  }

  ArgSet union_all() const {
    ArgSet all = 0;
    for (ArgSet s : sets_) all |= s;
    return all;
  }

  bool subset_of(const ExtensionSet& other) const {
    for (ArgSet s : sets_)
      if (!other.contains(s)) return false;
    return true;
  }

  bool operator==(const ExtensionSet&) const = default;

 private:
  std::vector<ArgSet> sets_;
};

inline std::string set_to_string(const ArgumentationFramework& af, ArgSet set) {
  std::string text = "{";
  bool first = true;
  for (ArgSet rest = set; rest != 0; rest &= rest - 1) {
    if (!first) text += ",";
    text += af.label(std::countr_zero(rest));
    first = false;
  }
  text += "}";
  return text;
}

inline std::string extensions_to_string(const ArgumentationFramework& af,
                                        const ExtensionSet& extensions) {
  std::string text = "{";
  bool first = true;
  for (ArgSet s : extensions) {
    if (!first) text += ",";
    text += set_to_string(af, s);
    first = false;
  }
  text += "}";
  return text;
}

inline ArgSet set_from_names(const ArgumentationFramework& af,
                             std::span<const std::string> names) {
  ArgSet set = 0;
  for (const std::string& name : names) {
    const auto index = af.index_of(name);
    if (!index) throw MalformedSetError("unknown argument name '" + name + "'");
    set |= arg_bit(*index);
  }
  return set;
}

/// Convenience constructor from labels and labelled attack pairs.
inline ArgumentationFramework make_af(
    std::vector<std::string> labels,
    const std::vector<std::pair<std::string, std::string>>& attacks) {
  const int count = static_cast<int>(labels.size());
  ArgumentationFramework af(count, std::move(labels));
  for (const auto& [from, to] : attacks) {
    const auto i = af.index_of(from);
    const auto j = af.index_of(to);
    if (!i || !j) throw Error("attack endpoint is not a declared argument");
    af.add_attack(*i, *j);
  }
  return af;
}

}  // namespace vacred
