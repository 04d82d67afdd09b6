#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "regulus/extensions.hpp"

using namespace regulus;

TEST_CASE("descriptor constructors verify") {
  for (int n : {2, 3, 4, 6}) {
    auto d = matrix_extension(cyclic_ring(n), 2);
    CHECK(verify_free_normalizing(d).ok());
    CHECK(d.basis.size() == 4);
    CHECK(d.projectivity == ProjectivityStatus::AssumedByConstruction);
  }
  SUBCASE("group ring over invertible order splits by construction") {
    auto d = group_ring_extension(cyclic_ring(3), cyclic_group(2));
    CHECK(verify_free_normalizing(d).ok());
    CHECK(d.projectivity == ProjectivityStatus::AssumedByConstruction);
  }
  SUBCASE("group ring over even characteristic stays unchecked") {
    auto d = group_ring_extension(cyclic_ring(2), cyclic_group(2));
    CHECK(verify_free_normalizing(d).ok());
    CHECK(d.projectivity == ProjectivityStatus::Unchecked);
  }
}

TEST_CASE("free normalizing clauses fire on broken inputs") {
  auto d = matrix_extension(cyclic_ring(2), 2);

  SUBCASE("non-injective embedding") {
    auto bad = d;
    bad.embedding.map[1] = bad.embedding.map[0];
    auto rep = verify_free_normalizing(bad);
    CHECK_FALSE(rep.ok());
    CHECK(rep.clause == "embedding-injective");
  }
  SUBCASE("basis must start at one") {
    auto bad = d;
    std::swap(bad.basis.elements[0], bad.basis.elements[1]);
    auto rep = verify_free_normalizing(bad);
    CHECK_FALSE(rep.ok());
    CHECK(rep.clause == "a1-is-one");
  }
  SUBCASE("a freeness violation is named") {
    // replace a basis element with e_11; scalars stay normalized (the base
    // is central) but the coefficient map loses surjectivity
    auto m2 = matrix_ring(cyclic_ring(2), 2);
    Idx e11 = m2.codec.encode({1, 0, 0, 0});
    auto bad = d;
    bad.basis.elements[1] = e11;
    auto rep = verify_free_normalizing(bad);
    CHECK_FALSE(rep.ok());
    CHECK((rep.clause == "left-coefficient-freeness" ||
           rep.clause == "right-coefficient-freeness"));
  }
  SUBCASE("dropping a basis element breaks freeness") {
    auto bad = d;
    bad.basis.elements.pop_back();
    CHECK_FALSE(verify_free_normalizing(bad).ok());
  }
}

TEST_CASE("restriction of scalars") {
  auto d = matrix_extension(cyclic_ring(2), 2);
  auto big = regular_left_module(d.embedding.big);
  auto down = restrict_scalars(d, big);
  CHECK(down->order() == big->order());
  CHECK(down->ring() == d.embedding.small);
  // action factors through the embedding
  for (Idx r = 0; r < 2; ++r)
    for (Idx m = 0; m < down->order(); ++m)
      CHECK(down->act(r, m) ==
            big->act(d.embedding.map[r], m));
}

TEST_CASE("basis coordinates invert the expansion") {
  for (auto d : {matrix_extension(cyclic_ring(3), 2),
                 group_ring_extension(cyclic_ring(2), cyclic_group(2))}) {
    const auto& s_ring = *d.embedding.big;
    auto table = coordinate_table(d);
    REQUIRE(table.size() == s_ring.order());
    for (Idx s = 0; s < s_ring.order(); ++s) {
      auto coords = basis_coordinates(d, s);
      REQUIRE(coords == table[s]);
      Idx acc = 0;
      for (int i = 0; i < d.basis.size(); ++i) {
        Idx term = s_ring.mul(d.embedding.map[coords[i]],
                              d.basis.elements[i]);
        acc = s_ring.add(acc, term);
      }
      CHECK(acc == s);
    }
  }
}

TEST_CASE("bounded projectivity probe") {
  SUBCASE("matrix extensions pass") {
    auto d = matrix_extension(cyclic_ring(2), 2);
    auto rep = left_projectivity_bounded_check(d);
    CHECK(rep.passed);
    CHECK(rep.modules_checked > 0);
    CHECK(rep.submodules_checked > 0);
    // status assumed by construction is never downgraded
    CHECK(d.projectivity == ProjectivityStatus::AssumedByConstruction);
  }
  SUBCASE("a passing probe upgrades an unchecked descriptor") {
    auto d = group_ring_extension(cyclic_ring(3), cyclic_group(2));
    d.projectivity = ProjectivityStatus::Unchecked;
    auto rep = left_projectivity_bounded_check(d);
    CHECK(rep.passed);
    CHECK(d.projectivity == ProjectivityStatus::BoundedChecked);
  }
  SUBCASE("Z2[C2] fails on the socle") {
    auto d = group_ring_extension(cyclic_ring(2), cyclic_group(2));
    auto rep = left_projectivity_bounded_check(d);
    CHECK_FALSE(rep.passed);
    REQUIRE(rep.failing_submodule.has_value());
    // the violating submodule restricts to a summand but is none upstairs
    CHECK(d.projectivity == ProjectivityStatus::Unchecked);
  }
}

TEST_CASE("torsion freeness of the basis action") {
  // Over M2(Z2) with M = S: s*1 = 0 only for s = 0, vacuously torsion free.
  auto d = matrix_extension(cyclic_ring(2), 2);
  auto big = regular_left_module(d.embedding.big);
  SUBCASE("regular big module fails on zero divisors") {
    // e_12 * e_12 = 0 but the line of e_12 through some a_i m is nonzero;
    // the scan decides, we assert it matches a brute-force replay
    auto rep = basis_torsion_free(d, big);
    // brute force the defining condition
    bool brute = true;
    for (Idx s = 0; s < d.embedding.big->order() && brute; ++s) {
      auto coords = basis_coordinates(d, s);
      for (Idx m = 0; m < big->order() && brute; ++m) {
        if (big->act(s, m) != 0) continue;
        for (int i = 0; i < d.basis.size(); ++i) {
          Idx line = big->act(
              d.embedding.big->mul(d.embedding.map[coords[i]],
                                   d.basis.elements[i]),
              m);
          if (line != 0) {
            brute = false;
            break;
          }
        }
      }
    }
    CHECK(rep.torsion_free == brute);
    if (!rep.torsion_free) {
      // the recorded counterexample replays: annihilator kills the module
      // element but one basis line does not
      REQUIRE(rep.elem.has_value());
      CHECK(big->act(rep.annihilator, *rep.elem) == 0);
      REQUIRE(rep.line >= 0);
      Idx line_elt =
          d.embedding.big->mul(d.embedding.map[rep.coeffs[rep.line]],
                               d.basis.elements[rep.line]);
      CHECK(big->act(line_elt, *rep.elem) != 0);
    }
  }
  SUBCASE("zero module is trivially torsion free") {
    CHECK(basis_torsion_free(d, zero_module(d.embedding.big)).torsion_free);
  }
}

TEST_CASE("cyclic decomposition into basis lines") {
  auto d = group_ring_extension(cyclic_ring(3), cyclic_group(2));
  auto big = regular_left_module(d.embedding.big);
  for (Idx x = 0; x < big->order(); ++x) {
    auto dec = decompose_cyclic(d, big, x);
    // total is the full cyclic submodule
    auto sub = cyclic_submodule(restrict_scalars(d, big), x);
    // pieces jointly span when the sum is direct and covers
    if (dec.ok()) {
      size_t prod = 1;
      for (const auto& p : dec.pieces) prod *= p.size();
      CHECK(prod == dec.total.size());
    }
    CHECK(std::is_sorted(dec.total.begin(), dec.total.end()));
    CHECK_FALSE(dec.total.empty());
    (void)sub;
  }
}

TEST_CASE("regularity transfer along extensions") {
  Caps caps;

  SUBCASE("probative matrix extension over a field") {
    auto d = matrix_extension(cyclic_ring(2), 2);
    auto m = regular_left_module(d.embedding.big);
    auto rep = verify_theorem_2_2(d, m, caps);
    CHECK(rep.probative);
    CHECK(rep.p);
    CHECK(rep.q);
    CHECK(rep.ok());
  }
  SUBCASE("zero module over a big extension needs a raised cap") {
    auto d = matrix_extension(cyclic_ring(4), 2);
    auto m = zero_module(d.embedding.big);
    CHECK_THROWS_AS(verify_theorem_2_2(d, m, caps), CapError);
    Caps wide = caps;
    wide.module_order = 256;
    auto rep = verify_theorem_2_2(d, m, wide);
    CHECK(rep.p);
    CHECK(rep.q);
    CHECK(rep.ok());
  }
  SUBCASE("necessity of the splitting hypothesis") {
    // Z2[C2] over Z2: restriction of the regular module is free, hence
    // regular over the field, but the big ring has the nilpotent 1+g.
    auto d = group_ring_extension(cyclic_ring(2), cyclic_group(2));
    auto m = regular_left_module(d.embedding.big);
    auto rep = verify_theorem_2_2(d, m, caps);
    CHECK_FALSE(rep.probative);
    CHECK(rep.p);
    CHECK_FALSE(rep.q);
    CHECK_FALSE(rep.p_implies_q);
    // the reverse implication is unconditional
    CHECK(rep.qt_implies_p);
  }
  SUBCASE("probative group ring, both verdicts positive") {
    auto d = group_ring_extension(cyclic_ring(3), cyclic_group(2));
    auto m = regular_left_module(d.embedding.big);
    auto rep = verify_theorem_2_2(d, m, caps);
    CHECK(rep.probative);
    CHECK(rep.p);
    CHECK(rep.q);
    CHECK(rep.ok());
  }
}

TEST_CASE("elementwise transfer and witness projection") {
  SUBCASE("matrix extensions agree with the base ring") {
    struct Row {
      int n;
      bool regular;
    };
    for (auto [n, want] :
         {Row{2, true}, Row{3, true}, Row{4, false}, Row{6, true}}) {
      auto d = matrix_extension(cyclic_ring(n), 2);
      auto rep = verify_corollary_2_3(d);
      CHECK(rep.small_regular == want);
      CHECK(rep.big_regular == want);
      CHECK(rep.projections_ok);
      CHECK_FALSE(rep.projection_failure.has_value());
      if (rep.probative) CHECK(rep.verdicts_agree);
    }
  }
  SUBCASE("non-probative group ring never claims agreement") {
    auto d = group_ring_extension(cyclic_ring(2), cyclic_group(2));
    auto rep = verify_corollary_2_3(d);
    CHECK_FALSE(rep.probative);
    CHECK(rep.small_regular);
    CHECK_FALSE(rep.big_regular);
    // the coordinate identity is unconditional
    CHECK(rep.projections_ok);
  }
}
