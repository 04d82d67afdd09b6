#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "regulus/regularity.hpp"

using namespace regulus;

TEST_CASE("von Neumann regularity of small rings") {
  struct Row {
    int n;
    bool regular;
  };
  // Z/n is regular exactly when n is squarefree.
  for (auto [n, want] : {Row{1, true}, Row{2, true}, Row{3, true},
                         Row{4, false}, Row{5, true}, Row{6, true},
                         Row{8, false}, Row{9, false}, Row{10, true},
                         Row{12, false}, Row{30, true}}) {
    auto cert = vnr_check(cyclic_ring(n));
    CHECK(cert.regular == want);
    CHECK(verify(cert));
  }
}

TEST_CASE("vnr witnesses and counterexamples") {
  SUBCASE("witnesses are the least quasi-inverses") {
    auto cert = vnr_check(cyclic_ring(6));
    REQUIRE(cert.regular);
    REQUIRE(cert.witness.size() == 6);
    // 2*2*2 = 8 = 2, 3*3*3 = 27 = 3, 5*5*5 = 125 = 5
    CHECK(cert.witness == std::vector<Idx>{0, 1, 2, 1, 1, 5});
    CHECK(cert.counterexample == std::nullopt);
  }
  SUBCASE("least counterexample is recorded") {
    auto cert = vnr_check(cyclic_ring(4));
    REQUIRE_FALSE(cert.regular);
    REQUIRE(cert.counterexample.has_value());
    CHECK(*cert.counterexample == 2);  // 2*s*2 = 0 for all s mod 4
    CHECK(verify(cert));
  }
  SUBCASE("matrix rings over fields are regular") {
    auto cert = vnr_check(matrix_ring(cyclic_ring(2), 2).ring);
    CHECK(cert.regular);
    CHECK(verify(cert));
  }
  SUBCASE("group algebra Z2[C2] has the nilpotent 1+g") {
    auto cert = vnr_check(group_ring(cyclic_ring(2), cyclic_group(2)).ring);
    CHECK_FALSE(cert.regular);
    CHECK(verify(cert));
  }
  SUBCASE("tampered witness fails replay") {
    auto cert = vnr_check(cyclic_ring(6));
    cert.witness[5] = 4;  // 5*4*5 = 100 = 4 != 5
    CHECK_FALSE(verify(cert));
  }
  SUBCASE("fabricated counterexample fails replay") {
    auto cert = vnr_check(cyclic_ring(4));
    cert.counterexample = 3;  // 3 is a unit, 3*3*3 = 27 = 3
    CHECK_FALSE(verify(cert));
  }
}

TEST_CASE("element_witness is minimal") {
  auto z6 = cyclic_ring(6);
  CHECK(element_witness(*z6, 0) == 0);
  CHECK(element_witness(*z6, 2) == 2);
  CHECK(element_witness(*cyclic_ring(4), 2) == std::nullopt);
}

TEST_CASE("relative regularity") {
  auto z4 = cyclic_ring(4);
  auto z6 = cyclic_ring(6);

  SUBCASE("regular module over Z6, not over Z4") {
    auto good = is_regular_module(regular_left_module(z6));
    CHECK(good.regular);
    CHECK(good.homs_checked == 6);
    CHECK(good.pairs.size() == 6);
    CHECK(verify(good));

    auto bad = is_regular_module(regular_left_module(z4));
    CHECK_FALSE(bad.regular);
    REQUIRE(bad.counterexample.has_value());
    CHECK(verify(bad));
  }
  SUBCASE("zero relator makes everything regular") {
    auto cert = is_relative_regular(regular_left_module(z4), zero_module(z4));
    CHECK(cert.regular);
    CHECK(cert.homs_checked == 1);
    CHECK(verify(cert));
  }
  SUBCASE("zero module is regular relative to anything") {
    auto cert = is_relative_regular(zero_module(z4), regular_left_module(z4));
    CHECK(cert.regular);
    CHECK(verify(cert));
  }
  SUBCASE("companions satisfy the triple identity") {
    auto m = regular_left_module(z6);
    auto cert = is_relative_regular(m, m);
    for (const auto& p : cert.pairs) {
      auto fgf = compose(p.f, compose(p.g, p.f));
      CHECK(fgf.map == p.f.map);
    }
  }
  SUBCASE("tampered companion fails replay") {
    auto cert = is_regular_module(regular_left_module(z6));
    REQUIRE(cert.regular);
    // replace the companion of a nonzero map by something wrong
    for (auto& p : cert.pairs) {
      bool zero = true;
      for (Idx x = 0; x < 6; ++x) zero = zero && p.f(x) == 0;
      if (zero) continue;
      p.g = zero_hom(p.g.source, p.g.target);
      break;
    }
    CHECK_FALSE(verify(cert));
  }
  SUBCASE("mismatched rings are rejected") {
    CHECK_THROWS_AS(
        is_relative_regular(regular_left_module(z4), regular_left_module(z6)),
        StructureError);
  }
}

TEST_CASE("summand route agrees with companion search") {
  auto z4 = cyclic_ring(4);
  auto z6 = cyclic_ring(6);
  auto two = [&] {
    ModuleTables t;
    t.ring = z4;
    t.order = 2;
    t.add = {0, 1, 1, 0};
    t.act = {0, 0, 0, 1, 0, 0, 0, 1};
    return std::make_shared<const FiniteModule>(t);
  }();

  struct Case {
    ModulePtr m, u;
  };
  for (const auto& c : {Case{regular_left_module(z6), regular_left_module(z6)},
                        Case{regular_left_module(z4), regular_left_module(z4)},
                        Case{two, regular_left_module(z4)},
                        Case{regular_left_module(z4), two}}) {
    auto direct = is_relative_regular(c.m, c.u);
    auto route = relative_regular_via_summands(c.m, c.u);
    CHECK(direct.regular == route.regular);
    if (route.regular) {
      CHECK(route.items.size() == static_cast<size_t>(direct.homs_checked));
      for (const auto& it : route.items) {
        CHECK(it.kernel_ok);
        CHECK(it.image_ok);
        REQUIRE(it.kernel_complement.has_value());
        CHECK(it.kernel_complement->order() * kernel(it.f).order() ==
              c.u->order());
      }
    } else {
      CHECK_FALSE(route.items.empty());
      bool last_ok =
          route.items.back().kernel_ok && route.items.back().image_ok;
      CHECK_FALSE(last_ok);
    }
  }
}

TEST_CASE("zelmanowitz elementwise check") {
  auto z6 = cyclic_ring(6);
  auto z4 = cyclic_ring(4);

  auto good = zelmanowitz_check(regular_left_module(z6));
  CHECK(good.regular);
  CHECK(good.counterexample == std::nullopt);

  auto bad = zelmanowitz_check(regular_left_module(z4));
  CHECK_FALSE(bad.regular);
  REQUIRE(bad.counterexample.has_value());
  CHECK(*bad.counterexample == 2);
  CHECK((bad.failure == "not-projective" || bad.failure == "not-summand"));

  SUBCASE("agrees with the companion oracle on a matrix ring") {
    auto m2 = regular_left_module(matrix_ring(cyclic_ring(2), 2).ring);
    CHECK(zelmanowitz_check(m2).regular == is_regular_module(m2).regular);
  }
}

TEST_CASE("cyclic projectivity") {
  auto z4 = cyclic_ring(4);
  auto reg = regular_left_module(z4);
  // R*1 = R is projective
  auto whole = cyclic_projective(reg, 1);
  CHECK(whole.projective);
  CHECK(hom_is_valid(whole.evaluation));
  // R*2 = {0,2} is not projective over Z4: kernel {0,2} is not a summand
  auto half = cyclic_projective(reg, 2);
  CHECK_FALSE(half.projective);
  CHECK(half.kernel.order() == 2);
  CHECK_FALSE(half.kernel_summand.is_summand);
}

TEST_CASE("budget errors surface") {
  auto z8 = cyclic_ring(8);
  Caps tiny;
  tiny.hom_budget = 2;
  CHECK_THROWS_AS(is_regular_module(regular_left_module(z8), tiny),
                  BudgetError);
  Caps small;
  small.module_order = 4;
  CHECK_THROWS_AS(is_regular_module(regular_left_module(z8), small), CapError);
}
