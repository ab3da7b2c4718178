#include <doctest.h>

#include <string>

#include "fixtures.hpp"
#include "vacred/enumeration.hpp"
#include "vacred/formats.hpp"
#include "vacred/vacuous.hpp"

using namespace vacred;

namespace {

std::string strip_whitespace(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

const char* kFixtureApx[] = {
    "arg(a). arg(b). arg(c). arg(d). att(a,b). att(b,c). att(c,a). att(c,d).",
    "arg(a). arg(b). arg(c). att(a,b). att(b,a). att(b,c). att(c,c).",
    "arg(a). arg(b). arg(c). arg(d). arg(e). att(a,b). att(b,c). att(c,a). "
    "att(d,e).",
    "arg(a). arg(b). arg(c). arg(d). att(a,b). att(a,c). att(b,a). att(c,a). "
    "att(c,d). att(d,c). att(d,d).",
    "arg(a). arg(b). att(a,a). att(a,b).",
    "arg(a). arg(b). att(a,b). att(b,a).",
    "arg(a). arg(b). arg(c). att(a,a). att(a,b). att(b,c).",
};

}  // namespace

TEST_CASE("apx parsing") {
  const ArgumentationFramework af =
      parse_apx("arg(a). arg(b). att(a,b). att(a,a).");
  CHECK(af == fixtures::f5());

  CHECK_THROWS_AS(parse_apx("att(a,b)."), ParseError);
  CHECK_THROWS_AS(parse_apx("arg(a). arg(a)."), ParseError);
  CHECK_THROWS_AS(parse_apx("arg(a) arg(b)."), ParseError);
  CHECK_THROWS_AS(parse_apx("foo(a)."), ParseError);

  // Comments, blank lines and whitespace are accepted anywhere.
  const ArgumentationFramework spaced = parse_apx(
      "% a comment\n\n  arg( a ).\narg(b).\n% another\natt( a , b ).\n");
  CHECK(spaced == make_af({"a", "b"}, {{"a", "b"}}));

  // Errors carry the offending position.
  try {
    parse_apx("arg(a).\natt(a,b).");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.diagnostic().line == 2);
    CHECK(e.diagnostic().severity == ParseDiagnostic::Severity::Error);
  }

  std::vector<ParseDiagnostic> warnings;
  parse_apx("arg(a). att(a,a). att(a,a).", &warnings);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].severity == ParseDiagnostic::Severity::Warning);
}

TEST_CASE("tgf parsing") {
  CHECK(parse_tgf("a\nb\n#\na b\nb a\n") == fixtures::f6());
  const ArgumentationFramework single = parse_tgf("a\n#\n");
  CHECK(single.arg_count() == 1);
  CHECK(single.attack_count() == 0);

  CHECK_THROWS_AS(parse_tgf("a b\n#\n"), ParseError);   // edge before separator
  CHECK_THROWS_AS(parse_tgf("a\nb\n"), ParseError);     // missing separator
  CHECK_THROWS_AS(parse_tgf("a\n#\na c\n"), ParseError);
}

TEST_CASE("write/parse round-trips on the fixtures, token for token") {
  for (const char* text : kFixtureApx) {
    const ArgumentationFramework af = parse_apx(text);
    CHECK(strip_whitespace(write_apx(af)) == strip_whitespace(text));
    CHECK(parse_apx(write_apx(af)) == af);
    CHECK(parse_tgf(write_tgf(af)) == af);
  }
}

TEST_CASE("write/parse identity over all small frameworks") {
  for (int n = 0; n <= 3; ++n)
    for_each_af(n, [&](const ArgumentationFramework& af) {
      CHECK(parse_apx(write_apx(af)) == af);
      CHECK(parse_tgf(write_tgf(af)) == af);
      return true;
    });
}

TEST_CASE("extension output styles") {
  const ArgumentationFramework f1 = fixtures::f1();
  CHECK(write_extensions(f1, vac_extensions(f1, "ud"),
                         ExtensionStyle::Iccma) == "[[],[d]]");

  const ArgumentationFramework f3 = fixtures::f3();
  CHECK(write_extensions(f3, vac_extensions(f3, "stb"),
                         ExtensionStyle::Iccma) == "NO");

  const ArgumentationFramework empty(0);
  CHECK(write_extensions(empty, vac_extensions(empty, "pr"),
                         ExtensionStyle::Iccma) == "[[]]");

  const std::string json = write_extensions(f1, vac_extensions(f1, "ud"),
                                            ExtensionStyle::Json, "ud");
  const auto doc = nlohmann::json::parse(json);
  CHECK(doc["semantics"] == "ud");
  CHECK(doc["extensions"].size() == 2);
  CHECK(doc["extensions"][1][0] == "d");
  CHECK(doc["af_hash"].get<std::string>().size() == 16);
}

TEST_CASE("corpus block splitting") {
  const std::string corpus =
      "% af 0\narg(a).\n%---\n% af 1\narg(a). arg(b). att(a,b).\n%---\n";
  const auto blocks = split_apx_blocks(corpus);
  REQUIRE(blocks.size() == 2);
  CHECK(parse_apx(blocks[0]).arg_count() == 1);
  CHECK(parse_apx(blocks[1]).arg_count() == 2);
}

TEST_CASE("parsers never crash on arbitrary bytes") {
  std::uint64_t seed = 0xfeed;
  std::size_t parsed = 0;
  std::size_t rejected = 0;
  for (int round = 0; round < 20000; ++round) {
    std::string text;
    const std::size_t length = splitmix64_next(seed) % 64;
    for (std::size_t i = 0; i < length; ++i)
      text += static_cast<char>(splitmix64_next(seed) & 0xff);
    // Half the rounds mutate a valid document instead.
    if (round % 2 == 0) {
      std::string base = "arg(a).\narg(b).\natt(a,b).\n";
      if (!base.empty()) {
        base[splitmix64_next(seed) % base.size()] =
            static_cast<char>(splitmix64_next(seed) & 0xff);
      }
      text = base;
    }
    for (int format = 0; format < 2; ++format) {
      try {
        if (format == 0)
          parse_apx(text);
        else
          parse_tgf(text);
        ++parsed;
      } catch (const ParseError&) {
        ++rejected;
      }
    }
  }
  CHECK(parsed + rejected == 2 * 20000);
}
