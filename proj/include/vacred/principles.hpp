#pragma once

// Principle checks: decides, per framework and semantics spec, each of the
// thirteen principles, with quantifiers evaluated literally. Violated
// verdicts carry minimal-first witnesses (smallest instantiating sets in
// canonical order) and can be replayed from the witness alone.

#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "vacred/af.hpp"
#include "vacred/enumeration.hpp"
#include "vacred/formats.hpp"
#include "vacred/sweep.hpp"
#include "vacred/vacuous.hpp"

namespace vacred {

enum class PrincipleId {
  ConflictFreeness,
  Admissibility,
  ContextFreeness,
  Reinstatement,
  Modularization,
  MeaninglessReduct,
  Existence,
  SingleStatus,
  IMaximality,
  Abstention,
  Directionality,
  NeglectionOfSelfAttackers,
  SeparationProperty,
};

inline constexpr std::array<PrincipleId, 13> kAllPrinciples = {
    PrincipleId::ConflictFreeness,
    PrincipleId::Admissibility,
    PrincipleId::ContextFreeness,
    PrincipleId::Reinstatement,
    PrincipleId::Modularization,
    PrincipleId::MeaninglessReduct,
    PrincipleId::Existence,
    PrincipleId::SingleStatus,
    PrincipleId::IMaximality,
    PrincipleId::Abstention,
    PrincipleId::Directionality,
    PrincipleId::NeglectionOfSelfAttackers,
    PrincipleId::SeparationProperty,
};

constexpr std::string_view to_token(PrincipleId principle) {
  switch (principle) {
    case PrincipleId::ConflictFreeness: return "conflict-freeness";
    case PrincipleId::Admissibility: return "admissibility";
    case PrincipleId::ContextFreeness: return "context-freeness";
    case PrincipleId::Reinstatement: return "reinstatement";
    case PrincipleId::Modularization: return "modularization";
    case PrincipleId::MeaninglessReduct: return "meaningless-reduct";
    case PrincipleId::Existence: return "existence";
    case PrincipleId::SingleStatus: return "single-status";
    case PrincipleId::IMaximality: return "i-maximality";
    case PrincipleId::Abstention: return "abstention";
    case PrincipleId::Directionality: return "directionality";
    case PrincipleId::NeglectionOfSelfAttackers:
      return "neglection-of-self-attackers";
    case PrincipleId::SeparationProperty: return "separation-property";
  }
  return "";
}

inline std::optional<PrincipleId> principle_from_token(std::string_view token) {
  for (PrincipleId principle : kAllPrinciples)
    if (to_token(principle) == token) return principle;
  return std::nullopt;
}

/// Outcome of one principle check on one framework. For violations, the
/// witness holds the sets instantiating the violated quantifier (e.g. for
/// modularization the pair E, E' whose union is rejected); abstention
/// additionally names the argument.
struct Verdict {
  PrincipleId principle = PrincipleId::ConflictFreeness;
  std::string semantics;
  ArgumentationFramework af;
  bool violated = false;
  std::vector<ArgSet> witness;
  std::optional<int> witness_argument;
};

namespace detail {

// Heavy quantifiers: context-freeness walks all E below all restrictions
// (3^n memberships) and directionality all unattacked subsets.
inline constexpr int kMaxQuantifiedArgs = 6;

inline std::vector<ArgSet> all_subsets_canonical(ArgSet universe) {
  std::vector<ArgSet> subsets;
  // Enumerate subsets of the universe mask, then canonically order.
  ArgSet sub = 0;
  for (;;) {
    subsets.push_back(sub);
    if (sub == universe) break;
    sub = (sub - universe) & universe;
  }
  std::sort(subsets.begin(), subsets.end(), canonical_less);
  return subsets;
}

/// Extensions of `spec` on the restriction of af to `keep`, mapped back to
/// parent indices.
inline ExtensionSet restricted_extensions(const ArgumentationFramework& af,
                                          ArgSet keep,
                                          const SemanticsSpec& spec) {
  const Restriction cut = restriction(af, keep);
  std::vector<ArgSet> mapped;
  for (ArgSet e : spec_extensions(cut.af, spec))
    mapped.push_back(cut.to_parent(e));
  return ExtensionSet::of(std::move(mapped));
}

/// Extensions of `spec` on the reduct wrt `e`, mapped back to parent indices.
inline ExtensionSet reduct_extensions(Evaluator& eval, ArgSet e,
                                      const SemanticsSpec& spec) {
  const Restriction& red = eval.reduct_of(e);
  std::vector<ArgSet> mapped;
  for (ArgSet local : spec_extensions(red.af, spec))
    mapped.push_back(red.to_parent(local));
  return ExtensionSet::of(std::move(mapped));
}

}  // namespace detail

inline Verdict check_principle(Evaluator& eval, const SemanticsSpec& spec,
                               PrincipleId principle) {
  const ArgumentationFramework& af = eval.af();
  Verdict verdict{principle, spec.token(), af, false, {}, std::nullopt};
  const auto violated = [&](std::vector<ArgSet> witness) {
    verdict.violated = true;
    verdict.witness = std::move(witness);
  };
  const ExtensionSet& sigma = eval.extensions(spec);

  switch (principle) {
    case PrincipleId::ConflictFreeness:
      for (ArgSet e : sigma)
        if (!is_conflict_free(af, e)) {
          violated({e});
          return verdict;
        }
      return verdict;

    case PrincipleId::Admissibility: {
      const ExtensionSet& admissible =
          eval.extensions(SemanticsSpec::classical(Classical::Adm));
      for (ArgSet e : sigma)
        if (!admissible.contains(e)) {
          violated({e});
          return verdict;
        }
      return verdict;
    }

    case PrincipleId::ContextFreeness: {
      if (af.arg_count() > detail::kMaxQuantifiedArgs)
        throw CapacityError("context-freeness check supports at most " +
                            std::to_string(detail::kMaxQuantifiedArgs) +
                            " arguments");
      std::map<ArgSet, ExtensionSet> by_restriction;
      const auto member_in_restriction = [&](ArgSet e, ArgSet s) {
        auto found = by_restriction.find(s);
        if (found == by_restriction.end())
          found = by_restriction
                      .emplace(s, detail::restricted_extensions(af, s, spec))
                      .first;
        return found->second.contains(e);
      };
      const std::vector<ArgSet> subsets =
          detail::all_subsets_canonical(af.universe());
      for (ArgSet e : subsets) {
        const bool member = sigma.contains(e);
        ArgSet failing_s = 0;
        bool in_all = true;
        for (ArgSet s : subsets) {
          if ((e & ~s) != 0) continue;
          if (!member_in_restriction(e, s)) {
            in_all = false;
            failing_s = s;
            break;
          }
        }
        if (member && !in_all) {
          violated({e, failing_s});
          return verdict;
        }
        if (!member && in_all) {
          violated({e});
          return verdict;
        }
      }
      return verdict;
    }

    case PrincipleId::Reinstatement:
      for (ArgSet e : sigma) {
        const ArgSet defended_outside = defended_set(af, e) & ~e;
        if (defended_outside != 0) {
          violated({e, arg_bit(std::countr_zero(defended_outside))});
          return verdict;
        }
      }
      return verdict;

    case PrincipleId::Modularization:
      for (ArgSet e : sigma)
        for (ArgSet ext : detail::reduct_extensions(eval, e, spec))
          if (!sigma.contains(e | ext)) {
            violated({e, ext});
            return verdict;
          }
      return verdict;

    case PrincipleId::MeaninglessReduct:
      for (ArgSet e : sigma)
        for (ArgSet ext : detail::reduct_extensions(eval, e, spec))
          if (ext != 0) {
            violated({e, ext});
            return verdict;
          }
      return verdict;

    case PrincipleId::Existence:
      if (sigma.empty()) violated({});
      return verdict;

    case PrincipleId::SingleStatus:
      if (sigma.size() != 1) {
        std::vector<ArgSet> witness;
        for (ArgSet e : sigma) {
          witness.push_back(e);
          if (witness.size() == 2) break;
        }
        violated(std::move(witness));
      }
      return verdict;

    case PrincipleId::IMaximality:
      for (ArgSet e : sigma)
        for (ArgSet d : sigma)
          if (e != d && (e & ~d) == 0) {
            violated({e, d});
            return verdict;
          }
      return verdict;

    case PrincipleId::Abstention: {
      for (int a = 0; a < af.arg_count(); ++a) {
        const ArgSet abit = arg_bit(a);
        bool accepted = false;
        bool attacked = false;
        bool undecided = false;
        for (ArgSet e : sigma) {
          if ((e & abit) != 0) accepted = true;
          const ArgSet range = e | attacked_by(af, e);
          if ((attacked_by(af, e) & abit) != 0) attacked = true;
          if ((range & abit) == 0) undecided = true;
        }
        if (accepted && attacked && !undecided) {
          verdict.witness_argument = a;
          violated({abit});
          return verdict;
        }
      }
      return verdict;
    }

    case PrincipleId::Directionality: {
      if (af.arg_count() > detail::kMaxQuantifiedArgs)
        throw CapacityError("directionality check supports at most " +
                            std::to_string(detail::kMaxQuantifiedArgs) +
                            " arguments");
      for (ArgSet u : detail::all_subsets_canonical(af.universe())) {
        if (!is_unattacked_set(af, u)) continue;
        const ExtensionSet left = detail::restricted_extensions(af, u, spec);
        std::vector<ArgSet> projected;
        for (ArgSet e : sigma) projected.push_back(e & u);
        if (left != ExtensionSet::of(std::move(projected))) {
          violated({u});
          return verdict;
        }
      }
      return verdict;
    }

    case PrincipleId::NeglectionOfSelfAttackers: {
      const ArgSet keep = af.universe() & ~self_attackers(af);
      const ExtensionSet pruned =
          detail::restricted_extensions(af, keep, spec);
      if (pruned != sigma) {
        ArgSet differing = 0;
        bool found = false;
        for (ArgSet e : sigma)
          if (!pruned.contains(e)) {
            differing = e;
            found = true;
            break;
          }
        if (!found)
          for (ArgSet e : pruned)
            if (!sigma.contains(e)) {
              differing = e;
              break;
            }
        violated({differing});
      }
      return verdict;
    }

    case PrincipleId::SeparationProperty:
      for (ArgSet u : detail::all_subsets_canonical(af.universe())) {
        if (!is_unattacked_set(af, u)) continue;
        if (!detail::restricted_extensions(af, u, spec).only_empty()) continue;
        const ExtensionSet rest =
            detail::restricted_extensions(af, af.universe() & ~u, spec);
        if (rest != sigma) {
          violated({u});
          return verdict;
        }
      }
      return verdict;
  }
  return verdict;
}

inline Verdict check_principle(const ArgumentationFramework& af,
                               const SemanticsSpec& spec,
                               PrincipleId principle) {
  Evaluator eval(af);
  return check_principle(eval, spec, principle);
}

/// Re-verifies a violated verdict from its stored witness alone; holds
/// verdicts re-verify by re-checking the principle.
inline bool replay(const Verdict& verdict) {
  const ArgumentationFramework& af = verdict.af;
  const SemanticsSpec spec = resolve(verdict.semantics);
  if (!verdict.violated) {
    Evaluator eval(af);
    return !check_principle(eval, spec, verdict.principle).violated;
  }
  Evaluator eval(af);
  const ExtensionSet& sigma = eval.extensions(spec);
  const auto witness = [&](std::size_t i) { return verdict.witness.at(i); };
  switch (verdict.principle) {
    case PrincipleId::ConflictFreeness:
      return sigma.contains(witness(0)) && !is_conflict_free(af, witness(0));
    case PrincipleId::Admissibility:
      return sigma.contains(witness(0)) &&
             !eval.extensions(SemanticsSpec::classical(Classical::Adm))
                  .contains(witness(0));
    case PrincipleId::ContextFreeness: {
      const ArgSet e = witness(0);
      if (verdict.witness.size() >= 2)
        return sigma.contains(e) &&
               !detail::restricted_extensions(af, witness(1), spec).contains(e);
      if (sigma.contains(e)) return false;
      for (ArgSet s : detail::all_subsets_canonical(af.universe())) {
        if ((e & ~s) != 0) continue;
        if (!detail::restricted_extensions(af, s, spec).contains(e))
          return false;
      }
      return true;
    }
    case PrincipleId::Reinstatement:
      return sigma.contains(witness(0)) &&
             (defended_set(af, witness(0)) & witness(1) & ~witness(0)) != 0;
    case PrincipleId::Modularization:
      return sigma.contains(witness(0)) &&
             detail::reduct_extensions(eval, witness(0), spec)
                 .contains(witness(1)) &&
             !sigma.contains(witness(0) | witness(1));
    case PrincipleId::MeaninglessReduct:
      return sigma.contains(witness(0)) && witness(1) != 0 &&
             detail::reduct_extensions(eval, witness(0), spec)
                 .contains(witness(1));
    case PrincipleId::Existence:
      return sigma.empty();
    case PrincipleId::SingleStatus:
      return sigma.size() != 1;
    case PrincipleId::IMaximality:
      return sigma.contains(witness(0)) && sigma.contains(witness(1)) &&
             witness(0) != witness(1) && (witness(0) & ~witness(1)) == 0;
    case PrincipleId::Abstention: {
      if (!verdict.witness_argument) return false;
      const ArgSet abit = arg_bit(*verdict.witness_argument);
      bool accepted = false;
      bool attacked = false;
      for (ArgSet e : sigma) {
        if ((e & abit) != 0) accepted = true;
        if ((attacked_by(af, e) & abit) != 0) attacked = true;
        if (((e | attacked_by(af, e)) & abit) == 0) return false;
      }
      return accepted && attacked;
    }
    case PrincipleId::Directionality: {
      const ArgSet u = witness(0);
      if (!is_unattacked_set(af, u)) return false;
      std::vector<ArgSet> projected;
      for (ArgSet e : sigma) projected.push_back(e & u);
      return detail::restricted_extensions(af, u, spec) !=
             ExtensionSet::of(std::move(projected));
    }
    case PrincipleId::NeglectionOfSelfAttackers:
      return detail::restricted_extensions(
                 af, af.universe() & ~self_attackers(af), spec) != sigma;
    case PrincipleId::SeparationProperty: {
      const ArgSet u = witness(0);
      return is_unattacked_set(af, u) &&
             detail::restricted_extensions(af, u, spec).only_empty() &&
             detail::restricted_extensions(af, af.universe() & ~u, spec) !=
                 sigma;
    }
  }
  return false;
}

/// First violated verdict in corpus order, if any. Parallel evaluation
/// resolves to the minimum corpus index, matching the serial result.
inline std::optional<Verdict> find_counterexample(const Corpus& corpus,
                                                  const SemanticsSpec& spec,
                                                  PrincipleId principle,
                                                  int jobs = 1) {
  FirstHit first;
  std::mutex lock;
  std::optional<Verdict> best;
  std::uint64_t best_index = FirstHit::kNone;
  parallel_chunks(corpus.size(), jobs, [&](int, std::uint64_t lo,
                                           std::uint64_t hi) {
    for (std::uint64_t index = lo; index < hi; ++index) {
      if (!first.before_current(index)) return;
      const ArgumentationFramework af = corpus.at(index);
      Evaluator eval(af);
      Verdict verdict = check_principle(eval, spec, principle);
      if (!verdict.violated) continue;
      if (first.record(index)) {
        const std::lock_guard<std::mutex> guard(lock);
        if (index < best_index) {
          best_index = index;
          best = std::move(verdict);
        }
      }
      return;
    }
  });
  return best;
}

inline nlohmann::ordered_json verdict_to_json(const Verdict& verdict) {
  nlohmann::ordered_json doc;
  doc["principle"] = std::string(to_token(verdict.principle));
  doc["semantics"] = verdict.semantics;
  doc["af"] = write_apx(verdict.af);
  doc["outcome"] = verdict.violated ? "violated" : "holds";
  if (verdict.violated) {
    nlohmann::ordered_json witness = nlohmann::ordered_json::array();
    for (ArgSet set : verdict.witness) {
      nlohmann::ordered_json names = nlohmann::ordered_json::array();
      for (ArgSet rest = set; rest != 0; rest &= rest - 1)
        names.push_back(verdict.af.label(std::countr_zero(rest)));
      witness.push_back(std::move(names));
    }
    doc["witness"] = std::move(witness);
    if (verdict.witness_argument)
      doc["witness_argument"] = verdict.af.label(*verdict.witness_argument);
  }
  return doc;
}

}  // namespace vacred
