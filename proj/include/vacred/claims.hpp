#pragma once

// Machine-encoded registry of the correspondence and characterization claims
// about vacuous reduct semantics, plus the engine that verifies each claim on
// a corpus. A claim evaluates per framework; the first mismatch (minimum
// corpus index, also under parallel evaluation) refutes it and the report
// carries the offending framework and both evaluated sides.

#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <span>
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

enum class ClaimKind { Equality, Subset, Nonempty, Iff, OracleMatch, Custom };

constexpr std::string_view to_token(ClaimKind kind) {
  switch (kind) {
    case ClaimKind::Equality: return "equality";
    case ClaimKind::Subset: return "subset";
    case ClaimKind::Nonempty: return "nonempty";
    case ClaimKind::Iff: return "iff";
    case ClaimKind::OracleMatch: return "oracle-match";
    case ClaimKind::Custom: return "custom";
  }
  return "";
}

/// One verifiable statement. `check` returns a refutation detail when the
/// statement fails on the evaluator's framework.
struct Claim {
  std::string id;
  ClaimKind kind = ClaimKind::Custom;
  std::string description;
  std::function<std::optional<std::string>(Evaluator&)> check;
};

namespace detail {

inline std::string sides(Evaluator& eval, const std::string& lhs_name,
                         const ExtensionSet& lhs, const std::string& rhs_name,
                         const ExtensionSet& rhs) {
  return lhs_name + " = " + extensions_to_string(eval.af(), lhs) + ", " +
         rhs_name + " = " + extensions_to_string(eval.af(), rhs);
}

inline Claim equality_claim(std::string id, ClaimKind kind,
                            const SemanticsSpec& lhs,
                            const SemanticsSpec& rhs) {
  const std::string description = lhs.token() + " = " + rhs.token();
  return Claim{
      std::move(id), kind, description,
      [lhs, rhs](Evaluator& eval) -> std::optional<std::string> {
        const ExtensionSet& left = eval.extensions(lhs);
        const ExtensionSet& right = eval.extensions(rhs);
        if (left == right) return std::nullopt;
        return sides(eval, lhs.token(), left, rhs.token(), right);
      }};
}

inline Claim subset_claim(std::string id, const SemanticsSpec& lhs,
                          const SemanticsSpec& rhs) {
  const std::string description = lhs.token() + " is a subset of " + rhs.token();
  return Claim{
      std::move(id), ClaimKind::Subset, description,
      [lhs, rhs](Evaluator& eval) -> std::optional<std::string> {
        const ExtensionSet& left = eval.extensions(lhs);
        const ExtensionSet& right = eval.extensions(rhs);
        if (left.subset_of(right)) return std::nullopt;
        return sides(eval, lhs.token(), left, rhs.token(), right);
      }};
}

inline SemanticsSpec cspec(Classical sem) {
  return SemanticsSpec::classical(sem);
}

inline SemanticsSpec vspec(Classical base, Classical vacuity) {
  return SemanticsSpec::vac(cspec(base), cspec(vacuity));
}

}  // namespace detail

/// The fixed claim registry. Cell claims `T1:<base>:<vacuity>` state which
/// semantics each combinator instantiation equals; COL-EQ / SST-EQ cover the
/// column collapses; the named claims encode bounds, characterizations,
/// equivalence criteria for the single-status rows, and the two independent
/// direct-characterization oracles.
inline const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> registry = [] {
    using detail::cspec;
    using detail::equality_claim;
    using detail::subset_claim;
    using detail::vspec;

    const SemanticsSpec adm = cspec(Classical::Adm);
    const SemanticsSpec co = cspec(Classical::Co);
    const SemanticsSpec pr = cspec(Classical::Pr);
    const SemanticsSpec gr = cspec(Classical::Gr);
    const SemanticsSpec id = cspec(Classical::Id);
    const SemanticsSpec stb = cspec(Classical::Stb);

    std::vector<Claim> claims;

    // Correspondence table: rows are base conditions, columns vacuity
    // conditions, each cell names the resulting semantics.
    const std::array<Classical, 9> rows = {
        Classical::Adm, Classical::Co,  Classical::Pr,
        Classical::Gr,  Classical::Id,  Classical::Stb,
        Classical::Sst, Classical::Cf,  Classical::Na};
    const std::array<Classical, 6> cols = {Classical::Adm, Classical::Gr,
                                           Classical::Id,  Classical::Stb,
                                           Classical::Sst, Classical::Cf};
    const char* cells[9][6] = {
        {"pr", "co", "adm-s1", "adm-s2", "pr", "adm-s3"},
        {"pr", "co", "adm-s1", "co-s1", "pr", "adm-s3"},
        {"pr", "pr", "pr", "pr", "pr", "adm-s3"},
        {"gr-s1", "gr", "gr-s2", "gr-s3", "gr-s1", "gr-s4"},
        {"id-s1", "id", "id", "id-s2", "id-s1", "id-s3"},
        {"stb", "stb", "stb", "stb", "stb", "stb"},
        {"sst", "sst", "sst", "sst", "sst", "sst-s1"},
        {"ud", "co-ub", "cf-s1", "cf-s2", "ud", "stb-cog"},
        {"na-s1", "na-s2", "na-s3", "na-s4", "na-s1", "stb-cog"},
    };
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c) {
        const std::string row_token(to_token(rows[r]));
        const std::string col_token(to_token(cols[c]));
        claims.push_back(equality_claim(
            "T1:" + row_token + ":" + col_token, ClaimKind::Equality,
            vspec(rows[r], cols[c]), resolve(cells[r][c])));
      }

    // Column collapses: conflict-free and naive vacuity coincide, as do the
    // admissible, complete and preferred vacuity conditions.
    for (Classical row : rows) {
      const std::string row_token(to_token(row));
      claims.push_back(equality_claim("COL-EQ:" + row_token + ":cf-na",
                                      ClaimKind::Equality,
                                      vspec(row, Classical::Cf),
                                      vspec(row, Classical::Na)));
      claims.push_back(equality_claim("COL-EQ:" + row_token + ":adm-co",
                                      ClaimKind::Equality,
                                      vspec(row, Classical::Adm),
                                      vspec(row, Classical::Co)));
      claims.push_back(equality_claim("COL-EQ:" + row_token + ":adm-pr",
                                      ClaimKind::Equality,
                                      vspec(row, Classical::Adm),
                                      vspec(row, Classical::Pr)));
    }

    // Semi-stable vacuity behaves exactly like admissible vacuity.
    for (Classical row : rows)
      claims.push_back(equality_claim(
          "SST-EQ:" + std::string(to_token(row)), ClaimKind::Equality,
          vspec(row, Classical::Sst), vspec(row, Classical::Adm)));

    // vac:adm:id sits between preferred and complete and contains the ideal
    // extension in each of its extensions.
    claims.push_back(Claim{
        "ADM1-BOUNDS", ClaimKind::Subset,
        "pr is a subset of vac:adm:id, vac:adm:id is a subset of co, and the "
        "ideal extension is contained in every vac:adm:id extension",
        [pr, co, id, spec = detail::vspec(Classical::Adm, Classical::Id)](
            Evaluator& eval) -> std::optional<std::string> {
          const ExtensionSet& mid = eval.extensions(spec);
          if (!eval.extensions(pr).subset_of(mid))
            return detail::sides(eval, "pr", eval.extensions(pr), spec.token(),
                                 mid);
          if (!mid.subset_of(eval.extensions(co)))
            return detail::sides(eval, spec.token(), mid, "co",
                                 eval.extensions(co));
          const ArgSet ideal = eval.extensions(id).at(0);
          for (ArgSet e : mid)
            if ((ideal & ~e) != 0)
              return "ideal extension " + set_to_string(eval.af(), ideal) +
                     " not contained in " + set_to_string(eval.af(), e);
          return std::nullopt;
        }});

    claims.push_back(Claim{
        "ADM2-EXIST", ClaimKind::Nonempty,
        "vac:adm:stb has at least one extension on every framework",
        [spec = detail::vspec(Classical::Adm, Classical::Stb)](
            Evaluator& eval) -> std::optional<std::string> {
          if (!eval.extensions(spec).empty()) return std::nullopt;
          return spec.token() + " = {} although extensions always exist";
        }});

    // Characterization route evaluated independently of the combinator:
    // stable extensions plus the admissible sets without a stable superset.
    const auto characterization_claim = [&](std::string claim_id,
                                            Classical base) {
      const SemanticsSpec combined = vspec(base, Classical::Stb);
      const SemanticsSpec base_spec = cspec(base);
      const std::string description =
          combined.token() + " equals stb plus the " + base_spec.token() +
          " sets with no stable superset";
      return Claim{
          std::move(claim_id), ClaimKind::OracleMatch, description,
          [combined, base_spec,
           stb](Evaluator& eval) -> std::optional<std::string> {
            const ExtensionSet& stable = eval.extensions(stb);
            std::vector<ArgSet> expected(stable.begin(), stable.end());
            for (ArgSet e : eval.extensions(base_spec)) {
              bool below_stable = false;
              for (ArgSet s : stable)
                if ((e & ~s) == 0) {
                  below_stable = true;
                  break;
                }
              if (!below_stable) expected.push_back(e);
            }
            const ExtensionSet want = ExtensionSet::of(std::move(expected));
            const ExtensionSet& got = eval.extensions(combined);
            if (got == want) return std::nullopt;
            return detail::sides(eval, combined.token(), got,
                                 "characterization", want);
          }};
    };
    claims.push_back(characterization_claim("ADM2-CHARA", Classical::Adm));
    claims.push_back(characterization_claim("CO1-CHARA", Classical::Co));

    claims.push_back(Claim{
        "ADM2-EMPTY", ClaimKind::Custom,
        "without stable extensions, vac:adm:stb equals adm",
        [adm, stb, spec = detail::vspec(Classical::Adm, Classical::Stb)](
            Evaluator& eval) -> std::optional<std::string> {
          if (!eval.extensions(stb).empty()) return std::nullopt;
          const ExtensionSet& got = eval.extensions(spec);
          const ExtensionSet& want = eval.extensions(adm);
          if (got == want) return std::nullopt;
          return detail::sides(eval, spec.token(), got, "adm", want);
        }});

    claims.push_back(subset_claim("CO1-SUB", vspec(Classical::Co, Classical::Stb),
                                  vspec(Classical::Adm, Classical::Stb)));

    claims.push_back(Claim{
        "ADM3-EQ", ClaimKind::Equality,
        "vac:co:cf and vac:pr:cf both equal vac:adm:cf",
        [a = detail::vspec(Classical::Co, Classical::Cf),
         b = detail::vspec(Classical::Pr, Classical::Cf),
         c = detail::vspec(Classical::Adm, Classical::Cf)](
            Evaluator& eval) -> std::optional<std::string> {
          const ExtensionSet& want = eval.extensions(c);
          if (eval.extensions(a) != want)
            return detail::sides(eval, a.token(), eval.extensions(a),
                                 c.token(), want);
          if (eval.extensions(b) != want)
            return detail::sides(eval, b.token(), eval.extensions(b),
                                 c.token(), want);
          return std::nullopt;
        }});

    claims.push_back(equality_claim("CO-ID-EQ", ClaimKind::Equality,
                                    vspec(Classical::Co, Classical::Id),
                                    vspec(Classical::Adm, Classical::Id)));

    claims.push_back(equality_claim("GR-SELF", ClaimKind::Equality,
                                    vspec(Classical::Gr, Classical::Gr), gr));

    // Criteria for when a single-status base survives the vacuity filter:
    // the refinement either produces the base extension or nothing.
    const auto iff_claim = [](std::string claim_id, std::string description,
                              std::vector<SemanticsSpec> refined,
                              SemanticsSpec base,
                              std::function<bool(Evaluator&)> condition,
                              std::string condition_text) {
      return Claim{
          std::move(claim_id), ClaimKind::Iff, std::move(description),
          [refined = std::move(refined), base = std::move(base),
           condition = std::move(condition),
           condition_text = std::move(condition_text)](
              Evaluator& eval) -> std::optional<std::string> {
            const bool rhs = condition(eval);
            for (const SemanticsSpec& spec : refined) {
              const bool lhs =
                  eval.extensions(spec) == eval.extensions(base);
              if (lhs == rhs) continue;
              return spec.token() + std::string(lhs ? " equals " : " differs from ") +
                     base.token() + " but " + condition_text +
                     (rhs ? " holds" : " fails") + "; " +
                     detail::sides(eval, spec.token(), eval.extensions(spec),
                                   base.token(), eval.extensions(base));
            }
            return std::nullopt;
          }};
    };

    claims.push_back(iff_claim(
        "GR-ADM-IFF",
        "vac:gr:{adm,co,pr,sst} keeps the grounded extension iff gr = pr",
        {vspec(Classical::Gr, Classical::Adm),
         vspec(Classical::Gr, Classical::Co),
         vspec(Classical::Gr, Classical::Pr),
         vspec(Classical::Gr, Classical::Sst)},
        gr,
        [gr, pr](Evaluator& eval) {
          return eval.extensions(gr) == eval.extensions(pr);
        },
        "gr = pr"));

    claims.push_back(iff_claim(
        "GR-STB-IFF",
        "vac:gr:stb keeps the grounded extension iff no stable extension "
        "strictly contains it",
        {vspec(Classical::Gr, Classical::Stb)}, gr,
        [gr, stb](Evaluator& eval) {
          const ArgSet grounded = eval.extensions(gr).at(0);
          for (ArgSet s : eval.extensions(stb))
            if (s != grounded && (grounded & ~s) == 0) return false;
          return true;
        },
        "the grounded extension has no strict stable superset"));

    claims.push_back(iff_claim(
        "GR-ID-IFF",
        "vac:gr:id keeps the grounded extension iff gr = id",
        {vspec(Classical::Gr, Classical::Id)}, gr,
        [gr, id](Evaluator& eval) {
          return eval.extensions(gr) == eval.extensions(id);
        },
        "gr = id"));

    claims.push_back(iff_claim(
        "GR-CF-IFF",
        "vac:gr:{cf,na} keeps the grounded extension iff it is a vac:cf:cf "
        "extension",
        {vspec(Classical::Gr, Classical::Cf),
         vspec(Classical::Gr, Classical::Na)},
        gr,
        [gr, cogent = detail::vspec(Classical::Cf, Classical::Cf)](
            Evaluator& eval) {
          return eval.extensions(cogent).contains(eval.extensions(gr).at(0));
        },
        "the grounded extension is in vac:cf:cf"));

    claims.push_back(Claim{
        "ID-GRID", ClaimKind::Equality,
        "vac:id:gr and vac:id:id both equal id",
        [a = detail::vspec(Classical::Id, Classical::Gr),
         b = detail::vspec(Classical::Id, Classical::Id),
         id](Evaluator& eval) -> std::optional<std::string> {
          const ExtensionSet& want = eval.extensions(id);
          if (eval.extensions(a) != want)
            return detail::sides(eval, a.token(), eval.extensions(a), "id",
                                 want);
          if (eval.extensions(b) != want)
            return detail::sides(eval, b.token(), eval.extensions(b), "id",
                                 want);
          return std::nullopt;
        }});

    claims.push_back(iff_claim(
        "ID-ADM-IFF",
        "vac:id:{adm,co,pr,sst} keeps the ideal extension iff there is "
        "exactly one preferred extension",
        {vspec(Classical::Id, Classical::Adm),
         vspec(Classical::Id, Classical::Co),
         vspec(Classical::Id, Classical::Pr),
         vspec(Classical::Id, Classical::Sst)},
        id,
        [pr](Evaluator& eval) { return eval.extensions(pr).size() == 1; },
        "|pr| = 1"));

    claims.push_back(iff_claim(
        "ID-STB-IFF",
        "vac:id:stb keeps the ideal extension iff at most one stable "
        "extension exists",
        {vspec(Classical::Id, Classical::Stb)}, id,
        [stb](Evaluator& eval) { return eval.extensions(stb).size() <= 1; },
        "|stb| <= 1"));

    claims.push_back(iff_claim(
        "ID-CF-IFF",
        "vac:id:{cf,na} keeps the ideal extension iff there is exactly one "
        "preferred extension and it is a vac:adm:cf extension",
        {vspec(Classical::Id, Classical::Cf),
         vspec(Classical::Id, Classical::Na)},
        id,
        [pr, adm3 = detail::vspec(Classical::Adm, Classical::Cf)](
            Evaluator& eval) {
          const ExtensionSet& preferred = eval.extensions(pr);
          return preferred.size() == 1 &&
                 eval.extensions(adm3).contains(preferred.at(0));
        },
        "|pr| = 1 and the preferred extension is in vac:adm:cf"));

    claims.push_back(equality_claim("CF-SST", ClaimKind::Equality,
                                    vspec(Classical::Cf, Classical::Sst),
                                    vspec(Classical::Cf, Classical::Adm)));

    claims.push_back(Claim{
        "CF-CHAIN", ClaimKind::Subset,
        "vac:cf:adm is a subset of vac:cf:id, which is a subset of vac:cf:gr",
        [a = detail::vspec(Classical::Cf, Classical::Adm),
         b = detail::vspec(Classical::Cf, Classical::Id),
         c = detail::vspec(Classical::Cf, Classical::Gr)](
            Evaluator& eval) -> std::optional<std::string> {
          if (!eval.extensions(a).subset_of(eval.extensions(b)))
            return detail::sides(eval, a.token(), eval.extensions(a),
                                 b.token(), eval.extensions(b));
          if (!eval.extensions(b).subset_of(eval.extensions(c)))
            return detail::sides(eval, b.token(), eval.extensions(b),
                                 c.token(), eval.extensions(c));
          return std::nullopt;
        }});

    claims.push_back(Claim{
        "NA-CF-EQ", ClaimKind::Equality,
        "vac:na:cf and vac:na:na equal vac:cf:cf and vac:cf:na",
        [a = detail::vspec(Classical::Na, Classical::Cf),
         b = detail::vspec(Classical::Cf, Classical::Cf),
         c = detail::vspec(Classical::Na, Classical::Na),
         d = detail::vspec(Classical::Cf, Classical::Na)](
            Evaluator& eval) -> std::optional<std::string> {
          if (eval.extensions(a) != eval.extensions(b))
            return detail::sides(eval, a.token(), eval.extensions(a),
                                 b.token(), eval.extensions(b));
          if (eval.extensions(c) != eval.extensions(d))
            return detail::sides(eval, c.token(), eval.extensions(c),
                                 d.token(), eval.extensions(d));
          return std::nullopt;
        }});

    // Two independent computation routes must agree exactly: the combinator
    // path and the direct characterizations.
    claims.push_back(Claim{
        "ORACLE-COG", ClaimKind::OracleMatch,
        "vac:cf:cf agrees with the direct cogent-stable characterization",
        [spec = detail::vspec(Classical::Cf, Classical::Cf)](
            Evaluator& eval) -> std::optional<std::string> {
          const ExtensionSet want = stb_cog_direct(eval.af());
          const ExtensionSet& got = eval.extensions(spec);
          if (got == want) return std::nullopt;
          return detail::sides(eval, spec.token(), got, "stb_cog_direct",
                               want);
        }});

    claims.push_back(Claim{
        "ORACLE-UB", ClaimKind::OracleMatch,
        "vac:cf:gr agrees with the direct ub-complete characterization",
        [spec = detail::vspec(Classical::Cf, Classical::Gr)](
            Evaluator& eval) -> std::optional<std::string> {
          const ExtensionSet want = co_ub_direct(eval.af());
          const ExtensionSet& got = eval.extensions(spec);
          if (got == want) return std::nullopt;
          return detail::sides(eval, spec.token(), got, "co_ub_direct", want);
        }});

    claims.push_back(Claim{
        "SST-LEVELS", ClaimKind::Custom,
        "every vac:adm:cf extension admits a vac:sst:cf extension whose "
        "reduct is a restriction of its own reduct",
        [a = detail::vspec(Classical::Adm, Classical::Cf),
         b = detail::vspec(Classical::Sst, Classical::Cf)](
            Evaluator& eval) -> std::optional<std::string> {
          const ArgumentationFramework& af = eval.af();
          const ExtensionSet& stronger = eval.extensions(b);
          for (ArgSet e : eval.extensions(a)) {
            const ArgSet reduct_args =
                af.universe() & ~(e | attacked_by(af, e));
            bool covered = false;
            for (ArgSet better : stronger) {
              const ArgSet better_args =
                  af.universe() & ~(better | attacked_by(af, better));
              if ((better_args & ~reduct_args) == 0) {
                covered = true;
                break;
              }
            }
            if (!covered)
              return "no vac:sst:cf extension covers " +
                     set_to_string(af, e) + " (reduct arguments " +
                     set_to_string(af, reduct_args) + ")";
          }
          return std::nullopt;
        }});

    claims.push_back(Claim{
        "SST-EMPTYEQ", ClaimKind::Iff,
        "vac:sst:{cf,na} has no extension iff vac:adm:{cf,na} has none",
        [a1 = detail::vspec(Classical::Sst, Classical::Cf),
         a2 = detail::vspec(Classical::Adm, Classical::Cf),
         b1 = detail::vspec(Classical::Sst, Classical::Na),
         b2 = detail::vspec(Classical::Adm, Classical::Na)](
            Evaluator& eval) -> std::optional<std::string> {
          if (eval.extensions(a1).empty() != eval.extensions(a2).empty())
            return detail::sides(eval, a1.token(), eval.extensions(a1),
                                 a2.token(), eval.extensions(a2));
          if (eval.extensions(b1).empty() != eval.extensions(b2).empty())
            return detail::sides(eval, b1.token(), eval.extensions(b1),
                                 b2.token(), eval.extensions(b2));
          return std::nullopt;
        }});

    // Equal credulous acceptance of two vacuity conditions makes the
    // combinators coincide; instantiated on the pairs with provably equal
    // credulous acceptance, with the antecedent still evaluated per
    // framework rather than assumed.
    const auto credulous_claim = [&](Classical tau1, Classical tau2) {
      const std::string t1(to_token(tau1));
      const std::string t2(to_token(tau2));
      const std::array<Classical, 9> bases = {
          Classical::Cf, Classical::Na, Classical::Adm,
          Classical::Co, Classical::Pr, Classical::Gr,
          Classical::Id, Classical::Stb, Classical::Sst};
      return Claim{
          "CRED-EQ:" + t1 + ":" + t2, ClaimKind::Custom,
          "equal credulous acceptance under " + t1 + " and " + t2 +
              " makes vac:<base>:" + t1 + " and vac:<base>:" + t2 +
              " coincide for every base",
          [tau1, tau2, bases](Evaluator& eval) -> std::optional<std::string> {
            if (eval.extensions(tau1).union_all() !=
                eval.extensions(tau2).union_all())
              return std::nullopt;
            for (Classical base : bases) {
              const SemanticsSpec left = detail::vspec(base, tau1);
              const SemanticsSpec right = detail::vspec(base, tau2);
              if (eval.extensions(left) != eval.extensions(right))
                return detail::sides(eval, left.token(),
                                     eval.extensions(left), right.token(),
                                     eval.extensions(right));
            }
            return std::nullopt;
          }};
    };
    claims.push_back(credulous_claim(Classical::Cf, Classical::Na));
    claims.push_back(credulous_claim(Classical::Adm, Classical::Co));
    claims.push_back(credulous_claim(Classical::Adm, Classical::Pr));

    return claims;
  }();
  return registry;
}

inline const Claim* find_claim(std::string_view id) {
  for (const Claim& claim : claim_registry())
    if (claim.id == id) return &claim;
  return nullptr;
}

struct ClaimRefutation {
  std::uint64_t corpus_index = 0;
  ArgumentationFramework af;
  std::string detail;
};

struct ClaimReport {
  std::string claim_id;
  std::string corpus;
  std::uint64_t afs_checked = 0;
  std::optional<ClaimRefutation> refutation;
  double wall_seconds = 0;

  bool confirmed() const { return !refutation.has_value(); }
};

/// Verifies many claims in one corpus sweep; the per-framework evaluator is
/// shared across all claims. Refuted claims stop being evaluated past their
/// current first refutation index.
inline std::vector<ClaimReport> verify_claims(std::span<const Claim> claims,
                                              const Corpus& corpus,
                                              int jobs = 1) {
  struct Local {
    std::uint64_t index = FirstHit::kNone;
    ArgumentationFramework af;
    std::string detail;
    double seconds = 0;
  };

  const int workers = jobs <= 1 ? 1 : jobs;
  std::vector<FirstHit> hits(claims.size());
  std::vector<std::vector<Local>> locals(
      static_cast<std::size_t>(workers),
      std::vector<Local>(claims.size()));

  parallel_chunks(corpus.size(), jobs,
                  [&](int worker, std::uint64_t lo, std::uint64_t hi) {
    std::vector<Local>& mine = locals[static_cast<std::size_t>(worker)];
    for (std::uint64_t index = lo; index < hi; ++index) {
      const ArgumentationFramework af = corpus.at(index);
      Evaluator eval(af);
      for (std::size_t c = 0; c < claims.size(); ++c) {
        if (!hits[c].before_current(index)) continue;
        const auto start = std::chrono::steady_clock::now();
        const std::optional<std::string> failure = claims[c].check(eval);
        mine[c].seconds +=
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
        if (failure) {
          hits[c].record(index);
          if (index < mine[c].index) {
            mine[c].index = index;
            mine[c].af = af;
            mine[c].detail = *failure;
          }
        }
      }
    }
  });

  std::vector<ClaimReport> reports;
  reports.reserve(claims.size());
  for (std::size_t c = 0; c < claims.size(); ++c) {
    ClaimReport report;
    report.claim_id = claims[c].id;
    report.corpus = corpus.describe();
    const Local* best = nullptr;
    for (const std::vector<Local>& mine : locals) {
      report.wall_seconds += mine[c].seconds;
      if (mine[c].index != FirstHit::kNone &&
          (best == nullptr || mine[c].index < best->index))
        best = &mine[c];
    }
    if (best != nullptr) {
      report.afs_checked = best->index + 1;
      report.refutation =
          ClaimRefutation{best->index, best->af, best->detail};
    } else {
      report.afs_checked = corpus.size();
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

inline ClaimReport verify_claim(const Claim& claim, const Corpus& corpus,
                                int jobs = 1) {
  return verify_claims(std::span<const Claim>(&claim, 1), corpus, jobs)
      .front();
}

/// Deterministic machine summary: no timing fields, so serial and parallel
/// runs emit identical bytes.
inline nlohmann::ordered_json reports_to_json(
    std::span<const ClaimReport> reports) {
  nlohmann::ordered_json doc;
  std::size_t confirmed = 0;
  std::size_t refuted = 0;
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  bool empty_corpus = false;
  for (const ClaimReport& report : reports) {
    nlohmann::ordered_json one;
    one["id"] = report.claim_id;
    one["corpus"] = report.corpus;
    one["afs_checked"] = report.afs_checked;
    if (report.afs_checked == 0) empty_corpus = true;
    if (report.confirmed()) {
      ++confirmed;
      one["outcome"] = "confirmed";
    } else {
      ++refuted;
      one["outcome"] = "refuted";
      one["at_index"] = report.refutation->corpus_index;
      one["af"] = write_apx(report.refutation->af);
      one["detail"] = report.refutation->detail;
    }
    list.push_back(std::move(one));
  }
  doc["confirmed"] = confirmed;
  doc["refuted"] = refuted;
  doc["claims"] = std::move(list);
  nlohmann::ordered_json warnings = nlohmann::ordered_json::array();
  if (empty_corpus)
    warnings.push_back("empty corpus: claims hold vacuously");
  doc["warnings"] = std::move(warnings);
  return doc;
}

/// Human-readable table with timing and the slowest claims, for stderr.
inline std::string reports_to_table(std::span<const ClaimReport> reports) {
  std::string text;
  std::size_t width = 4;
  for (const ClaimReport& report : reports)
    width = std::max(width, report.claim_id.size());
  for (const ClaimReport& report : reports) {
    text += report.claim_id;
    text.append(width + 2 - report.claim_id.size(), ' ');
    text += report.confirmed() ? "confirmed" : "REFUTED  ";
    text += "  afs=" + std::to_string(report.afs_checked);
    text += "  t=" + std::to_string(report.wall_seconds) + "s";
    if (!report.confirmed())
      text += "  " + report.refutation->detail;
    text += "\n";
  }
  std::vector<const ClaimReport*> slowest;
  for (const ClaimReport& report : reports) slowest.push_back(&report);
  std::sort(slowest.begin(), slowest.end(),
            [](const ClaimReport* a, const ClaimReport* b) {
              return a->wall_seconds > b->wall_seconds;
            });
  text += "slowest:";
  for (std::size_t i = 0; i < slowest.size() && i < 3; ++i)
    text += " " + slowest[i]->claim_id + " (" +
            std::to_string(slowest[i]->wall_seconds) + "s)";
  text += "\n";
  return text;
}

}  // namespace vacred
