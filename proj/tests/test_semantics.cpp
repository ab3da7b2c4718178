#include <doctest.h>

#include "fixtures.hpp"
#include "vacred/enumeration.hpp"
#include "vacred/semantics.hpp"

using namespace vacred;
using fixtures::set;
using fixtures::sets;

TEST_CASE("fixture frameworks evaluate to the expected extensions") {
  const ArgumentationFramework f2 = fixtures::f2();
  CHECK(extensions(f2, Classical::Sst) == sets(f2, {{"b"}}));

  const ArgumentationFramework f3 = fixtures::f3();
  CHECK(extensions(f3, Classical::Stb).empty());
  CHECK(extensions(f3, Classical::Pr) == sets(f3, {{"d"}}));

  const ArgumentationFramework f4 = fixtures::f4();
  CHECK(extensions(f4, Classical::Id) == sets(f4, {{}}));
  CHECK(extensions(f4, Classical::Co).contains(set(f4, {"b"})));

  const ArgumentationFramework f6 = fixtures::f6();
  CHECK(extensions(f6, Classical::Stb) == sets(f6, {{"a"}, {"b"}}));
}

TEST_CASE("every semantics yields only the empty set on the empty framework") {
  const ArgumentationFramework empty(0);
  for (Classical sem : kAllClassical) {
    const ExtensionSet found = extensions(empty, sem);
    CHECK(found.size() == 1);
    CHECK(found.at(0) == 0);
  }
}

TEST_CASE("credulous union") {
  const ArgumentationFramework f2 = fixtures::f2();
  CHECK(credulous_union(f2, Classical::Adm) == set(f2, {"a", "b"}));
  CHECK(credulous_union(f2, Classical::Sst) == set(f2, {"b"}));

  // Every non-self-attacker is a conflict-free singleton.
  for (const ArgumentationFramework& af :
       {fixtures::f1(), fixtures::f2(), fixtures::f3(), fixtures::f4(),
        fixtures::f5(), fixtures::f6(), fixtures::f7()})
    CHECK(credulous_union(af, Classical::Cf) ==
          (af.universe() & ~self_attackers(af)));
}

TEST_CASE("direct characterizations") {
  const ArgumentationFramework f2 = fixtures::f2();
  CHECK(stb_cog_direct(f2) == sets(f2, {{"a"}, {"b"}}));
  const ArgumentationFramework f1 = fixtures::f1();
  CHECK(stb_cog_direct(f1).empty());
  const ArgumentationFramework empty(0);
  CHECK(stb_cog_direct(empty).size() == 1);
  CHECK(co_ub_direct(empty).size() == 1);

  const ArgumentationFramework f6 = fixtures::f6();
  CHECK(co_ub_direct(f6).contains(set(f6, {"a"})));
  CHECK(co_ub_direct(f6).contains(set(f6, {"b"})));

  const ArgumentationFramework f5 = fixtures::f5();
  CHECK(co_ub_direct(f5) == sets(f5, {{}, {"b"}}));
}

TEST_CASE("agrees with the brute-force oracle on all small frameworks") {
  const char* tokens[] = {"cf", "na", "adm", "co", "pr",
                          "gr", "id", "stb", "sst"};
  for (int n = 0; n <= 3; ++n) {
    for_each_af(n, [&](const ArgumentationFramework& af) {
      for (const char* token : tokens) {
        const ExtensionSet expected = fixtures::oracle::extensions(af, token);
        const ExtensionSet got =
            extensions(af, *classical_from_token(token));
        CHECK(got == expected);
      }
      return true;
    });
  }
}

TEST_CASE("agrees with the brute-force oracle on random frameworks") {
  std::uint64_t seed = 99;
  const char* tokens[] = {"cf", "na", "adm", "co", "pr",
                          "gr", "id", "stb", "sst"};
  for (int round = 0; round < 60; ++round) {
    const ArgumentationFramework af =
        random_af(5, 1, 4, 1, 8, splitmix64_next(seed));
    for (const char* token : tokens)
      CHECK(extensions(af, *classical_from_token(token)) ==
            fixtures::oracle::extensions(af, token));
  }
}

TEST_CASE("semantics chain and singleton guarantees on generated corpora") {
  const auto check_af = [](const ArgumentationFramework& af) {
    const ExtensionSet cf = extensions(af, Classical::Cf);
    const ExtensionSet na = extensions(af, Classical::Na);
    const ExtensionSet adm = extensions(af, Classical::Adm);
    const ExtensionSet co = extensions(af, Classical::Co);
    const ExtensionSet pr = extensions(af, Classical::Pr);
    const ExtensionSet gr = extensions(af, Classical::Gr);
    const ExtensionSet id = extensions(af, Classical::Id);
    const ExtensionSet stb = extensions(af, Classical::Stb);
    const ExtensionSet sst = extensions(af, Classical::Sst);

    CHECK(stb.subset_of(sst));
    CHECK(sst.subset_of(pr));
    CHECK(pr.subset_of(co));
    CHECK(co.subset_of(adm));
    CHECK(adm.subset_of(cf));
    CHECK(na.subset_of(cf));

    REQUIRE(gr.size() == 1);
    REQUIRE(id.size() == 1);
    for (ArgSet e : co) CHECK((gr.at(0) & ~e) == 0);
    for (ArgSet e : pr) CHECK((id.at(0) & ~e) == 0);

    // Grounded via defense-operator iteration equals grounded via the
    // least-complete filter (two independent routes).
    CHECK(gr == fixtures::oracle::extensions(af, "gr"));
    CHECK(grounded_mask(af) == gr.at(0));

    if (!stb.empty()) CHECK(sst == stb);

    for (ArgSet e : na)
      CHECK(!has_conflict_free_strict_superset(af, e, attacked_by(af, e)));
  };

  for (int n = 0; n <= 4; ++n)
    for_each_af(n, [&](const ArgumentationFramework& af) {
      check_af(af);
      return true;
    });
  std::uint64_t seed = 1234;
  for (int round = 0; round < 50; ++round)
    check_af(random_af(6, 1, 4, 1, 8, splitmix64_next(seed)));
}
