#pragma once

// Command-line front door. Subcommands: solve, principles, verify, gen,
// explain. Machine output goes to `out`, diagnostics to `err`. Exit codes:
// 0 success, 1 refuted claim or (with --strict) violated principle, 2 usage
// error, 3 input parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vacred/claims.hpp"
#include "vacred/enumeration.hpp"
#include "vacred/formats.hpp"
#include "vacred/principles.hpp"
#include "vacred/vacuous.hpp"

namespace vacred::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFinding = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitParse = 3;

inline std::string semantics_help() {
  std::string text =
      "Semantics tokens:\n  classical: cf na adm co pr gr id stb sst\n  named:";
  for (const NamedRegistryEntry& entry : named_registry())
    text += " " + entry.token;
  text +=
      "\n  generic: vac:<base>:<vacuity>, nesting via repeated vac: prefixes"
      "\n           (e.g. vac:cf:adm, vac:vac:cf:adm:stb)\n";
  return text;
}

inline std::string principles_help() {
  std::string text = "Principles:";
  for (PrincipleId principle : kAllPrinciples)
    text += std::string("\n  ") + std::string(to_token(principle));
  return text + "\n";
}

namespace detail {

inline std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open input file '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

inline std::vector<ArgumentationFramework> parse_corpus_file(
    const std::string& text) {
  std::vector<ArgumentationFramework> afs;
  for (const std::string& block : split_apx_blocks(text))
    afs.push_back(parse_apx(block));
  if (afs.empty()) afs.push_back(parse_apx(text));
  return afs;
}

/// A --corpus value is either a corpus spec or a path to an APX corpus file.
inline void add_corpus_layer(Corpus& corpus, const std::string& value,
                             std::istream& in) {
  if (value.starts_with("exhaustive:") || value.starts_with("random:")) {
    corpus.add_layer(CorpusSpec::parse(value));
    return;
  }
  corpus.add_layer(parse_corpus_file(read_input(value, in)), value);
}

inline std::vector<std::string> split_names(const std::string& list) {
  std::vector<std::string> names;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = list.find(',', start);
    const std::string name = comma == std::string::npos
                                 ? list.substr(start)
                                 : list.substr(start, comma - start);
    if (!name.empty()) names.push_back(name);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return names;
}

inline std::string attacks_to_string(const ArgumentationFramework& af) {
  std::string text;
  bool first = true;
  for (int i = 0; i < af.arg_count(); ++i)
    for (int j = 0; j < af.arg_count(); ++j)
      if (af.has_attack(i, j)) {
        if (!first) text += " ";
        text += af.label(i) + "->" + af.label(j);
        first = false;
      }
  return first ? "(none)" : text;
}

inline void explain_set(std::ostream& out, const ArgumentationFramework& af,
                        const SemanticsSpec& spec, ArgSet set,
                        const std::string& indent) {
  Evaluator eval(af);
  const bool member = eval.extensions(spec).contains(set);
  out << indent << "set " << set_to_string(af, set) << " under "
      << spec.token() << "\n";
  out << indent << "  gamma = " << set_to_string(af, defended_set(af, set))
      << ", attacked = " << set_to_string(af, attacked_by(af, set))
      << ", attackers = " << set_to_string(af, attackers_of(af, set)) << "\n";
  if (spec.is_classical()) {
    out << indent << "  " << (member ? "member" : "not a member") << " of "
        << spec.token() << "\n";
    return;
  }
  const SemanticsSpec base = spec.base();
  const SemanticsSpec tau = spec.vacuity();
  const bool base_member = eval.extensions(base).contains(set);
  out << indent << "  base " << base.token() << ": "
      << (base_member ? "member" : "not a member") << "\n";
  const Restriction red = reduct(af, set);
  out << indent << "  reduct arguments: "
      << set_to_string(af, red.to_parent(red.af.universe())) << "\n";
  out << indent << "  reduct attacks: " << attacks_to_string(red.af) << "\n";
  const ExtensionSet tau_extensions = spec_extensions(red.af, tau);
  ArgSet witness = 0;
  bool vacuous = true;
  for (ArgSet e : tau_extensions)
    if (e != 0) {
      witness = e;
      vacuous = false;
      break;
    }
  if (vacuous) {
    out << indent << "  " << tau.token()
        << " vacuity holds (no nonempty " << tau.token()
        << " extension in the reduct)\n";
  } else {
    out << indent << "  " << tau.token() << " vacuity fails: witness "
        << set_to_string(af, red.to_parent(witness)) << "\n";
    if (!tau.is_classical()) {
      out << indent << "  witness chain:\n";
      explain_set(out, red.af, tau, witness, indent + "    ");
    }
  }
  out << indent << "  => " << set_to_string(af, set) << " is "
      << (member ? "accepted" : "rejected") << " under " << spec.token()
      << "\n";
}

}  // namespace detail

/// Runs the CLI on already-split arguments (no program name).
inline int run(std::vector<std::string> args, std::istream& in,
               std::ostream& out, std::ostream& err) {
  CLI::App app{"vacred: vacuous reduct semantics solver and verification harness"};
  app.require_subcommand(1);
  app.footer(semantics_help());

  std::string semantics_token;
  std::string format = "apx";
  std::string output = "iccma";
  std::string input_path = "-";
  std::string principle_token;
  bool all_principles = false;
  bool all_claims = false;
  std::string claim_id;
  std::vector<std::string> corpus_values;
  std::string exhaustive_value;
  std::string random_value;
  bool iso_reduce = false;
  std::string set_value;
  bool strict = false;
  int jobs = 1;

  CLI::App* solve = app.add_subcommand(
      "solve", "Enumerate the extensions of one or more frameworks");
  solve->add_option("--semantics", semantics_token, "semantics token")
      ->required();
  solve->add_option("--format", format, "input format")
      ->check(CLI::IsMember({"apx", "tgf"}));
  solve->add_option("--output", output, "output style")
      ->check(CLI::IsMember({"iccma", "json"}));
  solve->add_option("file", input_path, "input file, or - for stdin");
  solve->footer(semantics_help());

  CLI::App* principles = app.add_subcommand(
      "principles", "Check principles or search a corpus for counterexamples");
  principles->add_option("--semantics", semantics_token, "semantics token")
      ->required();
  principles->add_option("--principle", principle_token, "principle id");
  principles->add_flag("--all", all_principles, "check all principles");
  principles->add_option("--corpus", corpus_values,
                         "corpus spec or APX corpus file (repeatable; "
                         "default exhaustive:1..3)");
  principles->add_flag("--strict", strict, "exit 1 when a violation is found");
  principles->add_option("--jobs", jobs, "worker count");
  principles->footer(semantics_help() + "\n" + principles_help());

  CLI::App* verify = app.add_subcommand(
      "verify", "Verify registry claims on a corpus");
  verify->add_option("--claim", claim_id, "claim id (default: all)");
  verify->add_flag("--all", all_claims, "verify the whole registry");
  verify->add_option("--corpus", corpus_values,
                     "corpus spec or APX corpus file (repeatable; default "
                     "exhaustive:3 plus exhaustive:4)");
  verify->add_option("--jobs", jobs, "worker count");
  verify->add_flag("--strict", strict,
                   "accepted for symmetry; refutations always exit 1");

  CLI::App* gen = app.add_subcommand("gen", "Emit a corpus as APX blocks");
  gen->add_option("--exhaustive", exhaustive_value,
                  "argument count for exhaustive enumeration");
  gen->add_option("--random", random_value,
                  "n=<n>,p=<num>/<den>,loops=<num>/<den>,count=<k>,seed=<s>");
  gen->add_flag("--iso-reduce", iso_reduce,
                "keep one representative per isomorphism class");

  CLI::App* explain = app.add_subcommand(
      "explain", "Show the reduct chain and vacuity verdict for one set");
  explain->add_option("--semantics", semantics_token, "semantics token")
      ->required();
  explain->add_option("--set", set_value,
                      "comma-separated argument names (empty for {})");
  explain->add_option("--format", format, "input format")
      ->check(CLI::IsMember({"apx", "tgf"}));
  explain->add_option("file", input_path, "input file, or - for stdin");
  explain->footer(semantics_help());

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (solve->parsed()) {
      const SemanticsSpec spec = resolve(semantics_token);
      const std::string text = detail::read_input(input_path, in);
      std::vector<ArgumentationFramework> afs;
      if (format == "tgf") {
        afs.push_back(parse_tgf(text));
      } else {
        afs = detail::parse_corpus_file(text);
      }
      for (const ArgumentationFramework& af : afs) {
        const ExtensionSet found = vac_extensions(af, spec);
        out << write_extensions(af, found,
                                output == "json" ? ExtensionStyle::Json
                                                 : ExtensionStyle::Iccma,
                                semantics_token)
            << "\n";
      }
      return kExitOk;
    }

    if (principles->parsed()) {
      if (all_principles == !principle_token.empty()) {
        err << "pass exactly one of --principle <id> or --all\n";
        return kExitUsage;
      }
      const SemanticsSpec spec = resolve(semantics_token);
      std::vector<PrincipleId> selected;
      if (all_principles) {
        selected.assign(kAllPrinciples.begin(), kAllPrinciples.end());
      } else {
        const auto principle = principle_from_token(principle_token);
        if (!principle) {
          err << "unknown principle '" << principle_token << "'\n";
          return kExitUsage;
        }
        selected.push_back(*principle);
      }
      Corpus corpus;
      if (corpus_values.empty()) {
        corpus = Corpus::exhaustive_range(1, 3);
      } else {
        for (const std::string& value : corpus_values)
          detail::add_corpus_layer(corpus, value, in);
      }
      bool any_violation = false;
      for (PrincipleId principle : selected) {
        const std::optional<Verdict> verdict =
            find_counterexample(corpus, spec, principle, jobs);
        if (verdict) {
          any_violation = true;
          nlohmann::ordered_json doc = verdict_to_json(*verdict);
          doc["corpus"] = corpus.describe();
          out << doc.dump() << "\n";
        } else {
          nlohmann::ordered_json doc;
          doc["principle"] = std::string(to_token(principle));
          doc["semantics"] = semantics_token;
          doc["outcome"] = "no-violation";
          doc["afs_checked"] = corpus.size();
          doc["corpus"] = corpus.describe();
          out << doc.dump() << "\n";
        }
      }
      return any_violation && strict ? kExitFinding : kExitOk;
    }

    if (verify->parsed()) {
      std::vector<Claim> selected;
      if (!claim_id.empty()) {
        const Claim* claim = find_claim(claim_id);
        if (claim == nullptr) {
          err << "unknown claim id '" << claim_id << "'\n";
          return kExitUsage;
        }
        selected.push_back(*claim);
      } else {
        selected = claim_registry();
      }
      Corpus corpus;
      if (corpus_values.empty()) {
        corpus.add_layer(CorpusSpec::exhaustive(3));
        corpus.add_layer(CorpusSpec::exhaustive(4));
      } else {
        for (const std::string& value : corpus_values)
          detail::add_corpus_layer(corpus, value, in);
      }
      const std::vector<ClaimReport> reports =
          verify_claims(selected, corpus, jobs);
      out << reports_to_json(reports).dump(2) << "\n";
      err << reports_to_table(reports);
      for (const ClaimReport& report : reports)
        if (!report.confirmed()) return kExitFinding;
      return kExitOk;
    }

    if (gen->parsed()) {
      if (exhaustive_value.empty() == random_value.empty()) {
        err << "pass exactly one of --exhaustive <n> or --random <spec>\n";
        return kExitUsage;
      }
      CorpusSpec spec =
          exhaustive_value.empty()
              ? CorpusSpec::parse("random:" + random_value)
              : CorpusSpec::parse("exhaustive:" + exhaustive_value);
      spec.iso_reduce = iso_reduce;
      const Corpus corpus = Corpus::single(spec);
      for (std::uint64_t index = 0; index < corpus.size(); ++index) {
        if (index > 0) out << "%---\n";
        out << "% af " << index << " of " << corpus.describe() << "\n";
        out << write_apx(corpus.at(index));
      }
      return kExitOk;
    }

    if (explain->parsed()) {
      const SemanticsSpec spec = resolve(semantics_token);
      const std::string text = detail::read_input(input_path, in);
      const ArgumentationFramework af =
          format == "tgf" ? parse_tgf(text) : parse_apx(text);
      const std::vector<std::string> names = detail::split_names(set_value);
      const ArgSet set = set_from_names(af, names);
      detail::explain_set(out, af, spec, set, "");
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kExitParse;
  } catch (const UnknownSemanticsError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const MalformedSetError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitParse;
  }
  return kExitUsage;
}

}  // namespace vacred::cli
