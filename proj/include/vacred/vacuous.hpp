#pragma once

// The vacuous reduct combinator vac:<base>:<vacuity> and its named
// instantiations. vac(base, vacuity) accepts exactly the base-extensions
// whose reduct has no nonempty vacuity-extension.
//
// Vacuity is decided by searching for a single nonempty witness extension
// with early exit, not by full enumeration; singleton semantics (gr, id)
// reduce to an emptiness test of their unique extension, and for pr/sst/na a
// nonempty extension exists exactly when a nonempty adm/cf one does (every
// nonempty member of the underlying family extends to a nonempty maximal
// one, and conversely).

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "vacred/af.hpp"
#include "vacred/semantics.hpp"

namespace vacred {

/// Identifier tree for a semantics: a classical leaf or vac(base, vacuity).
/// Nodes are immutable and shared, so copies are cheap.
class SemanticsSpec {
 public:
  static SemanticsSpec classical(Classical sem) {
    return SemanticsSpec(std::make_shared<const Node>(
        Node{sem, nullptr, nullptr, std::string(to_token(sem))}));
  }

  static SemanticsSpec vac(SemanticsSpec base, SemanticsSpec vacuity) {
    std::string token =
        "vac:" + base.token() + ":" + vacuity.token();
    return SemanticsSpec(std::make_shared<const Node>(
        Node{std::nullopt, base.node_, vacuity.node_, std::move(token)}));
  }

  bool is_classical() const { return node_->leaf.has_value(); }

  Classical classical_id() const { return *node_->leaf; }

  SemanticsSpec base() const { return SemanticsSpec(node_->base); }

  SemanticsSpec vacuity() const { return SemanticsSpec(node_->vacuity); }

  /// Canonical token, e.g. "pr" or "vac:cf:adm".
  const std::string& token() const { return node_->token; }

  bool operator==(const SemanticsSpec& other) const {
    return node_->token == other.node_->token;
  }

 private:
  struct Node {
    std::optional<Classical> leaf;
    std::shared_ptr<const Node> base;
    std::shared_ptr<const Node> vacuity;
    std::string token;
  };

  explicit SemanticsSpec(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct NamedRegistryEntry {
  std::string token;
  SemanticsSpec definition;
  std::string summary;
  std::vector<std::string> known_equalities;
};

/// All named combinator instantiations, keyed by their ASCII tokens.
inline const std::vector<NamedRegistryEntry>& named_registry() {
  static const std::vector<NamedRegistryEntry> entries = [] {
    const auto v = [](Classical base, Classical vacuity) {
      return SemanticsSpec::vac(SemanticsSpec::classical(base),
                                SemanticsSpec::classical(vacuity));
    };
    std::vector<NamedRegistryEntry> list;
    list.push_back({"ud", v(Classical::Cf, Classical::Adm),
                    "undisputed: conflict-free sets with no nonempty "
                    "admissible set in their reduct",
                    {"vac:cf:co", "vac:cf:pr", "vac:cf:sst"}});
    list.push_back({"stb-cog", v(Classical::Cf, Classical::Cf),
                    "cogent stable: stable semantics after deleting "
                    "self-attackers",
                    {"vac:cf:na", "vac:na:cf", "vac:na:na"}});
    list.push_back({"co-ub", v(Classical::Cf, Classical::Gr),
                    "ub-complete: conflict-free sets closed under defense "
                    "from above",
                    {}});
    list.push_back({"adm-s1", v(Classical::Adm, Classical::Id),
                    "admissible sets with ideal-vacuous reduct",
                    {"vac:co:id"}});
    list.push_back({"adm-s2", v(Classical::Adm, Classical::Stb),
                    "admissible sets with stable-vacuous reduct",
                    {}});
    list.push_back({"adm-s3", v(Classical::Adm, Classical::Cf),
                    "admissible sets with conflict-free-vacuous reduct",
                    {"vac:adm:na", "vac:co:cf", "vac:co:na", "vac:pr:cf",
                     "vac:pr:na"}});
    list.push_back({"co-s1", v(Classical::Co, Classical::Stb),
                    "complete sets with stable-vacuous reduct", {}});
    list.push_back({"gr-s1", v(Classical::Gr, Classical::Adm),
                    "grounded extension when its reduct is adm-vacuous",
                    {"vac:gr:co", "vac:gr:pr", "vac:gr:sst"}});
    list.push_back({"gr-s2", v(Classical::Gr, Classical::Id),
                    "grounded extension when its reduct is id-vacuous", {}});
    list.push_back({"gr-s3", v(Classical::Gr, Classical::Stb),
                    "grounded extension when its reduct is stb-vacuous", {}});
    list.push_back({"gr-s4", v(Classical::Gr, Classical::Cf),
                    "grounded extension when its reduct is cf-vacuous",
                    {"vac:gr:na"}});
    list.push_back({"id-s1", v(Classical::Id, Classical::Adm),
                    "ideal extension when its reduct is adm-vacuous",
                    {"vac:id:co", "vac:id:pr", "vac:id:sst"}});
    list.push_back({"id-s2", v(Classical::Id, Classical::Stb),
                    "ideal extension when its reduct is stb-vacuous", {}});
    list.push_back({"id-s3", v(Classical::Id, Classical::Cf),
                    "ideal extension when its reduct is cf-vacuous",
                    {"vac:id:na"}});
    list.push_back({"sst-s1", v(Classical::Sst, Classical::Cf),
                    "semi-stable sets with conflict-free-vacuous reduct",
                    {"vac:sst:na"}});
    list.push_back({"cf-s1", v(Classical::Cf, Classical::Id),
                    "conflict-free sets with ideal-vacuous reduct", {}});
    list.push_back({"cf-s2", v(Classical::Cf, Classical::Stb),
                    "conflict-free sets with stable-vacuous reduct", {}});
    list.push_back({"na-s1", v(Classical::Na, Classical::Adm),
                    "naive sets with adm-vacuous reduct", {"vac:na:sst"}});
    list.push_back({"na-s2", v(Classical::Na, Classical::Gr),
                    "naive sets with gr-vacuous reduct", {}});
    list.push_back({"na-s3", v(Classical::Na, Classical::Id),
                    "naive sets with id-vacuous reduct", {}});
    list.push_back({"na-s4", v(Classical::Na, Classical::Stb),
                    "naive sets with stb-vacuous reduct", {}});
    return list;
  }();
  return entries;
}

namespace detail {

inline SemanticsSpec parse_spec_tokens(std::vector<std::string_view>& tokens,
                                       std::size_t& pos) {
  if (pos >= tokens.size())
    throw UnknownSemanticsError("incomplete semantics token");
  const std::string_view head = tokens[pos++];
  if (head == "vac") {
    SemanticsSpec base = parse_spec_tokens(tokens, pos);
    SemanticsSpec vacuity = parse_spec_tokens(tokens, pos);
    return SemanticsSpec::vac(std::move(base), std::move(vacuity));
  }
  if (const auto classical = classical_from_token(head))
    return SemanticsSpec::classical(*classical);
  for (const NamedRegistryEntry& entry : named_registry())
    if (entry.token == head) return entry.definition;
  throw UnknownSemanticsError("unknown semantics token '" + std::string(head) +
                              "'");
}

}  // namespace detail

/// Resolves a full semantics token: classical tokens, named tokens, and the
/// generic grammar `vac:<spec>:<spec>` with nesting via repeated prefixes.
inline SemanticsSpec resolve(std::string_view token) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (start <= token.size()) {
    const std::size_t colon = token.find(':', start);
    if (colon == std::string_view::npos) {
      parts.push_back(token.substr(start));
      break;
    }
    parts.push_back(token.substr(start, colon - start));
    start = colon + 1;
  }
  std::size_t pos = 0;
  SemanticsSpec spec = detail::parse_spec_tokens(parts, pos);
  if (pos != parts.size())
    throw UnknownSemanticsError("trailing input in semantics token '" +
                                std::string(token) + "'");
  return spec;
}

inline ExtensionSet spec_extensions(const ArgumentationFramework& af,
                                    const SemanticsSpec& spec);

/// Decides whether some nonempty spec-extension exists, with early exit.
inline bool exists_nonempty_extension(const ArgumentationFramework& af,
                                      const SemanticsSpec& spec) {
  if (!spec.is_classical()) {
    const ExtensionSet base = spec_extensions(af, spec.base());
    const SemanticsSpec vacuity = spec.vacuity();
    for (ArgSet e : base) {
      if (e == 0) continue;
      const Restriction red = reduct(af, e);
      if (!exists_nonempty_extension(red.af, vacuity)) return true;
    }
    return false;
  }
  switch (spec.classical_id()) {
    case Classical::Cf:
    case Classical::Na:
      // A nonempty conflict-free set exists iff some argument is not a
      // self-attacker; naive sets are their maximal completions.
      return (af.universe() & ~self_attackers(af)) != 0;
    case Classical::Gr:
      return grounded_mask(af) != 0;
    case Classical::Id:
      return ideal_mask(af) != 0;
    case Classical::Adm:
    case Classical::Pr:
    case Classical::Sst: {
      // Nonempty preferred / semi-stable extensions exist exactly when a
      // nonempty admissible set does.
      bool found = false;
      for_each_conflict_free(af, [&](ArgSet e, ArgSet targets) {
        if (e != 0 && is_admissible_set(af, e, targets)) {
          found = true;
          return false;
        }
        return true;
      });
      return found;
    }
    case Classical::Co: {
      bool found = false;
      for_each_conflict_free(af, [&](ArgSet e, ArgSet targets) {
        if (e != 0 && defended_given_targets(af, targets) == e) {
          found = true;
          return false;
        }
        return true;
      });
      return found;
    }
    case Classical::Stb: {
      bool found = false;
      for_each_conflict_free(af, [&](ArgSet e, ArgSet targets) {
        if (e != 0 && is_stable_set(af, e, targets)) {
          found = true;
          return false;
        }
        return true;
      });
      return found;
    }
  }
  return false;
}

/// True iff every tau-extension of the reduct of F wrt e is empty.
inline bool vacuity_holds(const ArgumentationFramework& af, ArgSet e,
                          const SemanticsSpec& tau) {
  require_member_set(af, e);
  const Restriction red = reduct(af, e);
  return !exists_nonempty_extension(red.af, tau);
}

inline ExtensionSet spec_extensions(const ArgumentationFramework& af,
                                    const SemanticsSpec& spec) {
  if (spec.is_classical()) return extensions(af, spec.classical_id());
  const ExtensionSet base = spec_extensions(af, spec.base());
  const SemanticsSpec vacuity = spec.vacuity();
  std::vector<ArgSet> kept;
  for (ArgSet e : base)
    if (vacuity_holds(af, e, vacuity)) kept.push_back(e);
  return ExtensionSet::of(std::move(kept));
}

/// Extensions of an arbitrary semantics spec; combinator specs filter their
/// base extensions through the vacuity condition.
inline ExtensionSet vac_extensions(const ArgumentationFramework& af,
                                   const SemanticsSpec& spec) {
  return spec_extensions(af, spec);
}

inline ExtensionSet vac_extensions(const ArgumentationFramework& af,
                                   std::string_view token) {
  return spec_extensions(af, resolve(token));
}

/// Per-framework memo for extension sets and vacuity verdicts. The corpus
/// sweeps evaluate dozens of combinator cells per framework; the candidate
/// extensions and reducts they share are computed once here.
class Evaluator {
 public:
  explicit Evaluator(const ArgumentationFramework& af) : af_(&af) {}

  const ArgumentationFramework& af() const { return *af_; }

  const ExtensionSet& extensions(const SemanticsSpec& spec) {
    const auto found = extensions_.find(spec.token());
    if (found != extensions_.end()) return found->second;
    ExtensionSet result;
    if (spec.is_classical()) {
      result = vacred::extensions(*af_, spec.classical_id());
    } else {
      const ExtensionSet& base = extensions(spec.base());
      const SemanticsSpec vacuity = spec.vacuity();
      std::vector<ArgSet> kept;
      for (ArgSet e : base)
        if (vacuity_holds(e, vacuity)) kept.push_back(e);
      result = ExtensionSet::of(std::move(kept));
    }
    return extensions_.emplace(spec.token(), std::move(result)).first->second;
  }

  const ExtensionSet& extensions(Classical sem) {
    return extensions(SemanticsSpec::classical(sem));
  }

  const Restriction& reduct_of(ArgSet e) {
    const auto found = reducts_.find(e);
    if (found != reducts_.end()) return found->second.reduct;
    return reducts_.emplace(e, ReductInfo{vacred::reduct(*af_, e), {}})
        .first->second.reduct;
  }

  bool vacuity_holds(ArgSet e, const SemanticsSpec& tau) {
    reduct_of(e);
    ReductInfo& info = reducts_.find(e)->second;
    const auto found = info.vacuous.find(tau.token());
    if (found != info.vacuous.end()) return found->second;
    const bool holds = !exists_nonempty_extension(info.reduct.af, tau);
    info.vacuous.emplace(tau.token(), holds);
    return holds;
  }

 private:
  struct ReductInfo {
    Restriction reduct;
    std::map<std::string, bool, std::less<>> vacuous;
  };

  const ArgumentationFramework* af_;
  std::map<std::string, ExtensionSet, std::less<>> extensions_;
  std::unordered_map<ArgSet, ReductInfo> reducts_;
};

}  // namespace vacred
