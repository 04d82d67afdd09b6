#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "regulus/finring.hpp"

using namespace regulus;

TEST_CASE("cyclic ring arithmetic") {
  auto z6 = cyclic_ring(6);
  CHECK(z6->order() == 6);
  CHECK(z6->zero() == 0);
  CHECK(z6->one() == 1);
  CHECK(z6->add(4, 5) == 3);
  CHECK(z6->mul(4, 5) == 2);
  CHECK(z6->neg(2) == 4);
  CHECK(z6->sub(1, 5) == 2);
  CHECK(z6->additive_order(2) == 3);
  CHECK(z6->additive_order(0) == 1);
  CHECK(z6->label(5) == "5");
}

TEST_CASE("zero ring is the order-1 cyclic ring") {
  auto z1 = cyclic_ring(1);
  CHECK(z1->order() == 1);
  CHECK(z1->one() == 0);
  CHECK(check_ring_axioms(z1->tables()).ok());
}

TEST_CASE("constructor outputs pass the axiom scan") {
  for (int n = 1; n <= 8; ++n)
    CHECK(check_ring_axioms(cyclic_ring(n)->tables()).ok());
  auto z2 = cyclic_ring(2);
  auto z3 = cyclic_ring(3);
  CHECK(check_ring_axioms(product_ring(z2, z3)->tables()).ok());
  CHECK(check_ring_axioms(matrix_ring(z2, 2).ring->tables()).ok());
  CHECK(check_ring_axioms(group_ring(z2, cyclic_group(2)).ring->tables()).ok());
  CHECK(check_ring_axioms(opposite_ring(matrix_ring(z2, 2).ring)->tables()).ok());
}

TEST_CASE("axiom scan names the violated clause") {
  // non-distributive: Z3 addition with a truncated multiplication
  RingTables t;
  t.order = 3;
  t.add = {0, 1, 2, 1, 2, 0, 2, 0, 1};
  t.mul = {0, 0, 0, 0, 1, 2, 0, 2, 2};
  auto rep = check_ring_axioms(t);
  CHECK_FALSE(rep.ok());
  CHECK(rep.kind == AxiomReport::Kind::axiom);
  CHECK(rep.clause == "right-distributivity");

  SUBCASE("shape problems are structural") {
    t.mul.pop_back();
    auto broken = check_ring_axioms(t);
    CHECK(broken.kind == AxiomReport::Kind::structural);
    CHECK(broken.clause == "table-shape");
  }

  SUBCASE("no multiplicative identity") {
    t.mul = std::vector<Idx>(9, 0);
    auto broken = check_ring_axioms(t);
    CHECK(broken.clause == "mul-identity");
  }

  SUBCASE("zero not at index 0") {
    RingTables s = cyclic_ring(2)->tables();
    s.add = {1, 0, 0, 1};  // swapped: 0+0 = 1
    auto broken = check_ring_axioms(s);
    CHECK(broken.clause == "additive-identity-at-0");
  }
}

TEST_CASE("finite ring construction validates structure") {
  RingTables t;
  t.order = 2;
  t.add = {0, 1, 1, 0};
  t.mul = {0, 0, 0, 0};  // no unit
  CHECK_THROWS_AS(FiniteRing{t}, StructureError);
}

TEST_CASE("product ring componentwise structure") {
  auto z2 = cyclic_ring(2);
  auto z3 = cyclic_ring(3);
  auto p = product_ring(z2, z3);
  CHECK(p->order() == 6);
  // (1,2) has index 1*3+2 = 5; (1,2)+(1,1) = (0,0)
  CHECK(p->add(5, 4) == 0);
  CHECK(p->mul(5, 5) == z2->mul(1, 1) * 3 + z3->mul(2, 2));
  CHECK(p->label(5) == "(1,2)");

  SUBCASE("product of two Z2 has four idempotents") {
    auto q = product_ring(z2, z2);
    CHECK(idempotents(*q).size() == 4);
  }

  SUBCASE("Z2 x Z3 is isomorphic to Z6") {
    auto iso = find_ring_isomorphism(*p, *cyclic_ring(6));
    REQUIRE(iso.has_value());
    // images must respect both operations
    for (Idx a = 0; a < 6; ++a)
      for (Idx b = 0; b < 6; ++b) {
        CHECK((*iso)[p->add(a, b)] == cyclic_ring(6)->add((*iso)[a], (*iso)[b]));
        CHECK((*iso)[p->mul(a, b)] == cyclic_ring(6)->mul((*iso)[a], (*iso)[b]));
      }
  }

  SUBCASE("Z4 is not isomorphic to Z2 x Z2") {
    auto q = product_ring(z2, z2);
    CHECK_FALSE(find_ring_isomorphism(*cyclic_ring(4), *q).has_value());
  }
}

TEST_CASE("matrix ring over Z2") {
  auto m = matrix_ring(cyclic_ring(2), 2);
  CHECK(m.ring->order() == 16);
  CHECK(m.n == 2);
  // identity matrix is the ring's one
  CHECK(m.codec.decode(m.ring->one()) == std::vector<Idx>{1, 0, 0, 1});
  // e12 * e21 = e11
  Idx e12 = m.codec.encode({0, 1, 0, 0});
  Idx e21 = m.codec.encode({0, 0, 1, 0});
  Idx e11 = m.codec.encode({1, 0, 0, 0});
  CHECK(m.ring->mul(e12, e21) == e11);
  CHECK(m.ring->mul(e21, e12) == m.codec.encode({0, 0, 0, 1}));
  CHECK_FALSE(is_commutative(*m.ring));

  SUBCASE("cap refuses huge matrix rings") {
    CHECK_THROWS_AS(matrix_ring(matrix_ring(cyclic_ring(2), 2).ring, 3),
                    CapError);
  }
}

TEST_CASE("opposite ring") {
  auto z6 = cyclic_ring(6);
  SUBCASE("commutative rings are fixed") {
    auto op = opposite_ring(z6);
    CHECK(structurally_equal(*op, *z6));
  }
  SUBCASE("double opposite is the original") {
    auto m2 = matrix_ring(cyclic_ring(2), 2).ring;
    CHECK(structurally_equal(*opposite_ring(opposite_ring(m2)), *m2));
    CHECK_FALSE(structurally_equal(*opposite_ring(m2), *m2));
  }
  SUBCASE("opposite of the matrix ring is isomorphic via transpose") {
    auto m2 = matrix_ring(cyclic_ring(2), 2);
    auto op = opposite_ring(m2.ring);
    CHECK(find_ring_isomorphism(*op, *m2.ring).has_value());
  }
}

TEST_CASE("group constructions") {
  SUBCASE("cyclic group") {
    auto c4 = cyclic_group(4);
    CHECK(c4->order() == 4);
    CHECK(c4->mul(3, 2) == 1);
    CHECK(c4->inverse(1) == 3);
  }
  SUBCASE("klein four group") {
    auto k = klein_four_group();
    CHECK(k->order() == 4);
    for (Idx a = 0; a < 4; ++a) CHECK(k->mul(a, a) == 0);
  }
  SUBCASE("symmetric group orders") {
    CHECK(symmetric_group(1)->order() == 1);
    CHECK(symmetric_group(3)->order() == 6);
    CHECK(symmetric_group(4)->order() == 24);
    auto s3 = symmetric_group(3);
    // s3 is nonabelian: some pair fails to commute
    bool abelian = true;
    for (Idx a = 0; a < 6 && abelian; ++a)
      for (Idx b = 0; b < 6 && abelian; ++b)
        if (s3->mul(a, b) != s3->mul(b, a)) abelian = false;
    CHECK_FALSE(abelian);
  }
}

TEST_CASE("group ring over Z3 and C2") {
  auto gr = group_ring(cyclic_ring(3), cyclic_group(2));
  CHECK(gr.ring->order() == 9);
  // 2 + 2g squares to itself
  Idx e = gr.codec.encode({2, 2});
  CHECK(gr.ring->mul(e, e) == e);

  SUBCASE("group ring over the trivial group is the base ring") {
    auto t = group_ring(cyclic_ring(3), cyclic_group(1));
    CHECK(structurally_equal(*t.ring, *cyclic_ring(3)));
  }
  SUBCASE("1+g is nilpotent over Z2") {
    auto g2 = group_ring(cyclic_ring(2), cyclic_group(2));
    Idx x = g2.codec.encode({1, 1});
    CHECK(x != 0);
    CHECK(g2.ring->mul(x, x) == 0);
  }
}

TEST_CASE("idempotents and families") {
  auto z6 = cyclic_ring(6);
  CHECK(idempotents(*z6) == std::vector<Idx>{0, 1, 3, 4});

  auto singles = complete_orthogonal_families(*z6, 1);
  REQUIRE(singles.size() == 1);
  CHECK(singles[0] == std::vector<Idx>{1});

  auto pairs = complete_orthogonal_families(*z6, 2);
  // ordered pairs summing to 1: (0,1), (1,0), (3,4), (4,3)
  CHECK(pairs.size() == 4);
  for (const auto& fam : pairs) {
    CHECK(z6->add(fam[0], fam[1]) == 1);
    CHECK(z6->mul(fam[0], fam[1]) == 0);
  }
}

TEST_CASE("corner ring of a matrix idempotent") {
  auto m2 = matrix_ring(cyclic_ring(2), 2);
  Idx e11 = m2.codec.encode({1, 0, 0, 0});
  auto corner = corner_ring(m2.ring, e11);
  CHECK(corner.ring->order() == 2);
  CHECK(check_ring_axioms(corner.ring->tables()).ok());
  CHECK(find_ring_isomorphism(*corner.ring, *cyclic_ring(2)).has_value());
  CHECK(corner.carrier[0] == 0);

  SUBCASE("full corner at 1 is the ring itself") {
    auto whole = corner_ring(m2.ring, m2.ring->one());
    CHECK(structurally_equal(*whole.ring, *m2.ring));
  }
}

TEST_CASE("additive invariants") {
  auto z4 = cyclic_ring(4);
  auto z22 = product_ring(cyclic_ring(2), cyclic_ring(2));
  CHECK(additive_invariants(4, z4->add_table()) == std::vector<int>{4});
  CHECK(additive_invariants(4, z22->add_table()) == std::vector<int>{2, 2});
  CHECK(additive_invariants(6, cyclic_ring(6)->add_table()) ==
        std::vector<int>{2, 3});
}

TEST_CASE("structural ring identity") {
  auto a = cyclic_ring(4);
  auto b = cyclic_ring(4);
  CHECK(same_ring(a, a));
  CHECK(same_ring(a, b));  // equal tables, distinct objects
  CHECK_FALSE(same_ring(a, cyclic_ring(5)));
}
