#include <doctest.h>

#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "vacred/cli.hpp"

using namespace vacred;

namespace {

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(std::move(args), in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kF1 =
    "arg(a). arg(b). arg(c). arg(d). att(a,b). att(b,c). att(c,a). att(c,d).";

}  // namespace

TEST_CASE("solve") {
  const CliResult ud = run_cli({"solve", "--semantics", "ud", "-"}, kF1);
  CHECK(ud.exit_code == 0);
  CHECK(ud.out == "[[],[d]]\n");

  const CliResult stb = run_cli({"solve", "--semantics", "stb", "-"},
                                "arg(a). arg(b). arg(c). arg(d). arg(e). "
                                "att(a,b). att(b,c). att(c,a). att(d,e).");
  CHECK(stb.out == "NO\n");

  const CliResult tgf = run_cli(
      {"solve", "--semantics", "stb", "--format", "tgf", "-"},
      "a\nb\n#\na b\nb a\n");
  CHECK(tgf.out == "[[a],[b]]\n");

  const CliResult json = run_cli(
      {"solve", "--semantics", "ud", "--output", "json", "-"}, kF1);
  CHECK(json.exit_code == 0);
  CHECK(nlohmann::json::parse(json.out)["semantics"] == "ud");

  // Multi-framework corpus input: one result line per framework.
  const CliResult multi = run_cli({"solve", "--semantics", "gr", "-"},
                                  "arg(a).\n%---\narg(a). arg(b). att(a,b).");
  CHECK(multi.out == "[[a]]\n[[a]]\n");
}

TEST_CASE("solve error paths") {
  CHECK(run_cli({"solve", "--semantics", "xyzzy", "-"}, kF1).exit_code == 2);
  CHECK(run_cli({"solve", "--semantics", "ud", "-"}, "att(a,b).").exit_code ==
        3);
  CHECK(run_cli({"solve", "--unknown-flag"}, "").exit_code == 2);
  CHECK(run_cli({}, "").exit_code == 2);
  CHECK(run_cli({"solve", "--semantics", "ud", "/no/such/file.apx"}, "")
            .exit_code == 3);
}

TEST_CASE("explain shows the reduct chain and the vacuity verdict") {
  const CliResult accepted =
      run_cli({"explain", "--semantics", "ud", "--set", "d", "-"}, kF1);
  CHECK(accepted.exit_code == 0);
  CHECK(accepted.out.find("reduct arguments: {a,b,c}") != std::string::npos);
  CHECK(accepted.out.find("adm vacuity holds") != std::string::npos);
  CHECK(accepted.out.find("accepted") != std::string::npos);

  const CliResult rejected =
      run_cli({"explain", "--semantics", "ud", "--set", "a", "-"}, kF1);
  CHECK(rejected.out.find("vacuity fails") != std::string::npos);
  CHECK(rejected.out.find("rejected") != std::string::npos);

  const CliResult bad_name =
      run_cli({"explain", "--semantics", "ud", "--set", "z", "-"}, kF1);
  CHECK(bad_name.exit_code == 2);
}

TEST_CASE("verify subcommand") {
  const CliResult one = run_cli({"verify", "--claim", "T1:adm:adm",
                                 "--corpus", "exhaustive:3"});
  CHECK(one.exit_code == 0);
  const auto doc = nlohmann::json::parse(one.out);
  CHECK(doc["refuted"] == 0);
  CHECK(doc["claims"][0]["afs_checked"] == 512);
  CHECK(doc["claims"][0]["outcome"] == "confirmed");

  const CliResult unknown = run_cli({"verify", "--claim", "nope"});
  CHECK(unknown.exit_code == 2);

  // The genuinely false registry claim drives a nonzero exit.
  const CliResult refuted = run_cli({"verify", "--claim", "ID-STB-IFF",
                                     "--corpus", "exhaustive:3"});
  CHECK(refuted.exit_code == 1);
  CHECK(nlohmann::json::parse(refuted.out)["refuted"] == 1);
}

TEST_CASE("verify is byte-identical across worker counts") {
  const std::vector<std::string> base = {"verify", "--all", "--corpus",
                                         "exhaustive:3"};
  const CliResult serial = run_cli(base);
  std::vector<std::string> parallel = base;
  parallel.push_back("--jobs");
  parallel.push_back("8");
  const CliResult threaded = run_cli(parallel);
  CHECK(serial.out == threaded.out);
  CHECK(serial.exit_code == threaded.exit_code);
}

TEST_CASE("principles subcommand") {
  const CliResult search =
      run_cli({"principles", "--semantics", "ud", "--principle",
               "admissibility", "--corpus", "exhaustive:2"});
  CHECK(search.exit_code == 0);
  const auto doc = nlohmann::json::parse(search.out);
  CHECK(doc["outcome"] == "violated");
  CHECK(doc["witness"][0][0] == "a1");  // generated corpora use default labels

  const CliResult strict =
      run_cli({"principles", "--semantics", "ud", "--principle",
               "admissibility", "--corpus", "exhaustive:2", "--strict"});
  CHECK(strict.exit_code == 1);

  const CliResult clean =
      run_cli({"principles", "--semantics", "ud", "--principle",
               "conflict-freeness", "--corpus", "exhaustive:2", "--strict"});
  CHECK(clean.exit_code == 0);
  CHECK(nlohmann::json::parse(clean.out)["outcome"] == "no-violation");

  const CliResult all = run_cli({"principles", "--semantics", "ud", "--all",
                                 "--corpus", "exhaustive:2"});
  std::istringstream lines(all.out);
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line))
    if (!line.empty()) ++count;
  CHECK(count == 13);

  CHECK(run_cli({"principles", "--semantics", "ud"}).exit_code == 2);
  CHECK(run_cli({"principles", "--semantics", "ud", "--principle", "bogus",
                 "--corpus", "exhaustive:2"})
            .exit_code == 2);
}

TEST_CASE("gen emits a parseable corpus honoring iso reduction") {
  const CliResult gen = run_cli({"gen", "--exhaustive", "2"});
  CHECK(gen.exit_code == 0);
  CHECK(split_apx_blocks(gen.out).size() == 16);

  const CliResult reduced =
      run_cli({"gen", "--exhaustive", "3", "--iso-reduce"});
  CHECK(split_apx_blocks(reduced.out).size() == 104);

  const CliResult random = run_cli(
      {"gen", "--random", "n=4,p=1/4,loops=1/8,count=5,seed=9"});
  const auto blocks = split_apx_blocks(random.out);
  REQUIRE(blocks.size() == 5);
  for (const std::string& block : blocks)
    CHECK(parse_apx(block).arg_count() == 4);

  // A generated corpus feeds straight back into solve and principles.
  const CliResult solved =
      run_cli({"solve", "--semantics", "gr", "-"}, gen.out);
  std::istringstream lines(solved.out);
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) ++count;
  CHECK(count == 16);

  CHECK(run_cli({"gen"}).exit_code == 2);
  CHECK(run_cli({"gen", "--exhaustive", "2", "--random", "n=2,count=1"})
            .exit_code == 2);
}

TEST_CASE("corpus files work as principle search corpora") {
  const CliResult gen = run_cli({"gen", "--exhaustive", "2"});
  const std::string path = "cli_corpus_test.apx";
  {
    std::ofstream file(path);
    file << gen.out;
  }
  const CliResult search =
      run_cli({"principles", "--semantics", "ud", "--principle",
               "admissibility", "--corpus", path});
  CHECK(search.exit_code == 0);
  CHECK(nlohmann::json::parse(search.out)["outcome"] == "violated");
  std::remove(path.c_str());
}

TEST_CASE("help lists every named semantics token") {
  const CliResult help = run_cli({"--help"});
  CHECK(help.exit_code == 0);
  for (const NamedRegistryEntry& entry : named_registry())
    CHECK(help.out.find(entry.token) != std::string::npos);
  for (const char* token : {"cf", "na", "adm", "co", "pr", "gr", "id", "stb",
                            "sst", "vac:<base>:<vacuity>"})
    CHECK(help.out.find(token) != std::string::npos);
}

TEST_CASE("identical invocations produce identical bytes") {
  for (int round = 0; round < 2; ++round) {
    const CliResult a = run_cli({"solve", "--semantics", "ud", "-"}, kF1);
    const CliResult b = run_cli({"solve", "--semantics", "ud", "-"}, kF1);
    CHECK(a.out == b.out);
  }
}
