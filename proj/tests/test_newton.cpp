#include <catch2/catch_amalgamated.hpp>

#include "coxcob/newton.hpp"

using namespace coxcob;

namespace {

LatticeVector vec(std::initializer_list<long long> xs) {
  LatticeVector v;
  for (long long x : xs) v.push_back(Int(x));
  return v;
}

MonomialIdeal ideal(std::size_t n, std::initializer_list<std::initializer_list<long long>> gens) {
  std::vector<Monomial> ms;
  for (auto g : gens) {
    Monomial m;
    for (long long x : g) m.push_back(Int(x));
    ms.push_back(m);
  }
  return MonomialIdeal(n, ms);
}

}  // namespace

TEST_CASE("minimalize") {
  CHECK(ideal(2, {{2, 0}, {2, 1}, {0, 3}}).generators() ==
        std::vector<Monomial>{vec({0, 3}), vec({2, 0})});
  CHECK(ideal(2, {{1, 1}}).generators() == std::vector<Monomial>{vec({1, 1})});
  CHECK(ideal(2, {{3, 0}, {1, 1}, {0, 4}, {2, 2}}).generators() ==
        std::vector<Monomial>{vec({0, 4}), vec({1, 1}), vec({3, 0})});
  CHECK_THROWS_AS(MonomialIdeal(2, {}), std::invalid_argument);
}

TEST_CASE("newton polytope vertices and facets") {
  SECTION("Example family (x^3, xy, y^4)") {
    NewtonPolytope p(ideal(2, {{3, 0}, {1, 1}, {0, 4}}));
    CHECK(p.vertices() == std::vector<Monomial>{vec({0, 4}), vec({1, 1}), vec({3, 0})});
  }
  SECTION("principal ideal (x^5)") {
    NewtonPolytope p(ideal(2, {{5, 0}}));
    CHECK(p.vertices() == std::vector<Monomial>{vec({5, 0})});
    REQUIRE(p.facets().size() == 2);
    CHECK(p.facets()[0].normal == vec({0, 1}));
    CHECK(p.facets()[0].offset == 0);
    CHECK(p.facets()[1].normal == vec({1, 0}));
    CHECK(p.facets()[1].offset == 5);
  }
  SECTION("generator inside the hull is not a vertex") {
    NewtonPolytope p(ideal(2, {{2, 0}, {1, 2}, {0, 3}}));
    CHECK(p.vertices() == std::vector<Monomial>{vec({0, 3}), vec({2, 0})});
  }
}

TEST_CASE("normal fan") {
  SECTION("(x^3, xy, y^4): three maximal cones in circular order e1,(3,1),(1,2),e2") {
    Fan f = NewtonPolytope(ideal(2, {{3, 0}, {1, 1}, {0, 4}})).normal_fan();
    REQUIRE(f.max_cones().size() == 3);
    CHECK(f.vertices() == std::vector<LatticeVector>{vec({0, 1}), vec({1, 0}),
                                                     vec({1, 2}), vec({3, 1})});
    std::vector<std::vector<LatticeVector>> expect = {
        {vec({0, 1}), vec({1, 2})}, {vec({1, 0}), vec({3, 1})}, {vec({1, 2}), vec({3, 1})}};
    std::vector<std::vector<LatticeVector>> got;
    for (const auto& c : f.max_cones()) got.push_back(c.rays());
    CHECK(got == expect);
    CHECK(is_subdivision(f, orthant_fan(2)));
  }
  SECTION("principal ideal gives the orthant fan") {
    Fan f = NewtonPolytope(ideal(3, {{2, 5, 1}})).normal_fan();
    CHECK(f == orthant_fan(3));
  }
  SECTION("(x1 x2, x3): cone over a square appears") {
    Fan f = NewtonPolytope(ideal(3, {{1, 1, 0}, {0, 0, 1}})).normal_fan();
    CHECK(f.vertices() ==
          std::vector<LatticeVector>{vec({0, 0, 1}), vec({0, 1, 0}), vec({0, 1, 1}),
                                     vec({1, 0, 0}), vec({1, 0, 1})});
    bool has_square = false;
    for (const auto& c : f.max_cones())
      if (c.rays() == std::vector<LatticeVector>{vec({0, 1, 0}), vec({0, 1, 1}),
                                                 vec({1, 0, 0}), vec({1, 0, 1})})
        has_square = true;
    CHECK(has_square);
    CHECK_FALSE(is_simplicial(f));
  }
}

TEST_CASE("exceptional rays") {
  SECTION("(x^3, xy, y^4)") {
    auto e = exceptional_rays(ideal(2, {{3, 0}, {1, 1}, {0, 4}}));
    REQUIRE(e.valuations.size() == 2);
    CHECK(e.valuations[0].vec == vec({1, 2}));
    CHECK(e.valuations[1].vec == vec({3, 1}));
    CHECK_FALSE(e.principal_no_divisors);
  }
  SECTION("3-variable family, k=3 l=4") {
    auto e = exceptional_rays(ideal(3, {{3, 0, 0}, {1, 1, 0}, {0, 4, 0},
                                        {0, 0, 12}, {1, 0, 11}, {0, 1, 11}}));
    REQUIRE(e.valuations.size() == 2);
    CHECK(e.valuations[0].vec == vec({4, 8, 1}));
    CHECK(e.valuations[1].vec == vec({9, 3, 1}));
  }
  SECTION("(x^2, y^3)") {
    auto e = exceptional_rays(ideal(2, {{2, 0}, {0, 3}}));
    REQUIRE(e.valuations.size() == 1);
    CHECK(e.valuations[0].vec == vec({3, 2}));
  }
  SECTION("principal: empty with warning") {
    auto e = exceptional_rays(ideal(2, {{5, 0}}));
    CHECK(e.valuations.empty());
    CHECK(e.principal_no_divisors);
  }
}

TEST_CASE("supporting faces") {
  SECTION("(x^3, xy, y^4)") {
    NewtonPolytope p(ideal(2, {{3, 0}, {1, 1}, {0, 4}}));
    auto faces = p.supporting_faces();
    REQUIRE(faces.size() == 3);
    // Two facets and their intersection point (1,1).
    CHECK(faces[0].dim == 1);
    CHECK(faces[0].vertices == std::vector<Monomial>{vec({0, 4}), vec({1, 1})});
    CHECK(faces[1].dim == 1);
    CHECK(faces[1].vertices == std::vector<Monomial>{vec({1, 1}), vec({3, 0})});
    CHECK(faces[2].dim == 0);
    CHECK(faces[2].vertices == std::vector<Monomial>{vec({1, 1})});
    CHECK(faces[2].exceptional_tight == std::vector<std::size_t>{0, 1});
  }
  SECTION("principal ideal has none") {
    CHECK(NewtonPolytope(ideal(2, {{5, 0}})).supporting_faces().empty());
  }
  SECTION("(x^2, y^3): a single facet") {
    auto faces = NewtonPolytope(ideal(2, {{2, 0}, {0, 3}})).supporting_faces();
    REQUIRE(faces.size() == 1);
    CHECK(faces[0].vertices == std::vector<Monomial>{vec({0, 3}), vec({2, 0})});
    CHECK(faces[0].dim == 1);
  }
  SECTION("Lemma comb: dim(face) + dim(dual cone) = n on a simplicial instance") {
    NewtonPolytope p(ideal(2, {{3, 0}, {1, 1}, {0, 4}}));
    for (const auto& f : p.supporting_faces()) {
      std::vector<LatticeVector> tight;
      for (std::size_t j : f.tight_facets) tight.push_back(p.facets()[j].normal);
      CHECK(f.dim + rank_of(tight) == 2);
    }
  }
}

TEST_CASE("face initial ideals") {
  MonomialIdeal I = ideal(2, {{3, 0}, {1, 1}, {0, 4}});
  NewtonPolytope p(I);
  auto faces = p.supporting_faces();
  REQUIRE(faces.size() == 3);
  CHECK(face_initial_ideal(I, p, faces[1]) == ideal(2, {{3, 0}, {1, 1}}));
  CHECK(face_initial_ideal(I, p, faces[0]) == ideal(2, {{1, 1}, {0, 4}}));
  CHECK(face_initial_ideal(I, p, faces[2]) == ideal(2, {{1, 1}}));
  CHECK(face_initial_ideal(I, p, p.full_face()) == I);
  SECTION("monotone under face inclusion") {
    // P2 = P12 cap P23, so its initial ideal sits inside both facets'
    MonomialIdeal small = face_initial_ideal(I, p, faces[2]);
    CHECK(face_initial_ideal(I, p, faces[0]).contains(small));
    CHECK(face_initial_ideal(I, p, faces[1]).contains(small));
  }
  SECTION("face of a different polytope is rejected") {
    MonomialIdeal J = ideal(2, {{2, 0}, {0, 3}});
    NewtonPolytope q(J);
    CHECK_THROWS_AS(face_initial_ideal(J, q, faces[2]), std::invalid_argument);
  }
}

TEST_CASE("integral closure") {
  CHECK(integral_closure(ideal(2, {{2, 0}, {0, 3}})) ==
        ideal(2, {{2, 0}, {1, 2}, {0, 3}}));
  CHECK(integral_closure(ideal(2, {{3, 0}, {1, 1}, {0, 4}})) ==
        ideal(2, {{3, 0}, {1, 1}, {0, 4}}));
  CHECK(integral_closure(ideal(2, {{5, 0}})) == ideal(2, {{5, 0}}));
  SECTION("idempotent and extensive") {
    MonomialIdeal I = ideal(2, {{2, 0}, {0, 3}});
    MonomialIdeal c = integral_closure(I);
    CHECK(integral_closure(c) == c);
    CHECK(c.contains(I));
  }
}

TEST_CASE("valuation ideals") {
  CHECK(valuation_ideal({MonomialValuation(vec({1, 2}))}, {Int(2)}, 2) ==
        ideal(2, {{2, 0}, {0, 1}}));
  CHECK(valuation_ideal({MonomialValuation(vec({1, 2}))}, {Int(0)}, 2) == unit_ideal(2));
  CHECK(valuation_ideal({MonomialValuation(vec({1, 2})), MonomialValuation(vec({3, 1}))},
                        {Int(1), Int(1)}, 2) == ideal(2, {{1, 0}, {0, 1}}));
  SECTION("negative bound treated as no condition") {
    CHECK(valuation_ideal({MonomialValuation(vec({1, 1}))}, {Int(-3)}, 2) == unit_ideal(2));
  }
}

TEST_CASE("valuation of polynomials-as-ideals and monomials") {
  MonomialValuation v12(vec({1, 2})), v31(vec({3, 1}));
  MonomialIdeal I = ideal(2, {{3, 0}, {1, 1}, {0, 4}});
  CHECK(val_of(v12, I) == 3);
  CHECK(val_of(v31, I) == 4);
  CHECK(val_of(MonomialValuation(vec({1, 0})), Monomial(vec({0, 4}))) == 0);
}
