#include <doctest.h>

#include "ysl/cartan.hpp"
#include "ysl/error.hpp"

using namespace ysl;

TEST_CASE("bilinear form values") {
  CartanDatum a2 = make_cartan("A2");
  CHECK(a2.bilinear(0, 1) == -1);
  CHECK(a2.bilinear(0, 0) == 2);
  CartanDatum b2 = make_cartan("B2");
  CHECK(b2.bilinear(0, 1) == -2);
  CHECK(b2.bilinear(1, 0) == -2);
  CHECK(b2.bilinear(0, 0) == 2 * 2);
  CHECK(b2.bilinear(1, 1) == 2 * 1);
}

TEST_CASE("datum validation") {
  CHECK_THROWS_AS(make_cartan({{2, -1}, {-3, 2}}, {1, 1}), ConfigError);  // not symmetrizable by d
  CHECK_THROWS_AS(make_cartan({{1}}, {1}), ConfigError);
  CHECK_THROWS_AS(make_cartan("G2"), ConfigError);
}

TEST_CASE("coroot decomposition") {
  CartanDatum a1 = make_cartan("A1");
  CHECK(coroot_decomposition(a1, {2}, {0}) == std::vector<long>{1});
  CartanDatum a2 = make_cartan("A2");
  CHECK(coroot_decomposition(a2, {1, 1}, {0, 0}) == std::vector<long>{1, 1});
  CHECK_THROWS_AS(coroot_decomposition(a1, {1}, {0}), DominanceError);
  CHECK_THROWS_AS(coroot_decomposition(a1, {0}, {2}), DominanceError);
  // B2: lambda=(1,1), mu=(0,0) is not in the coroot lattice
  CartanDatum b2 = make_cartan("B2");
  CHECK_THROWS_AS(coroot_decomposition(b2, {1, 1}, {0, 0}), DominanceError);
  CHECK(coroot_decomposition(b2, {1, 1}, {1, 0}) == std::vector<long>{1, 1});
  CHECK(coroot_decomposition(b2, {2, 0}, {0, 0}) == std::vector<long>{2, 1});
}

TEST_CASE("coroot decomposition re-expands to lambda - mu") {
  for (const char* name : {"A1", "A2", "B2", "A3"}) {
    CartanDatum dat = make_cartan(name);
    std::vector<std::pair<Coweight, Coweight>> cases;
    if (dat.n == 1) cases = {{{2}, {0}}, {{4}, {-2}}, {{3}, {1}}};
    if (dat.n == 2 && dat.name == "A2") cases = {{{1, 1}, {0, 0}}, {{2, 2}, {0, 0}}, {{1, 1}, {2, -1}}};
    if (dat.n == 2 && dat.name == "B2") cases = {{{1, 1}, {1, 0}}, {{2, 0}, {0, 0}}, {{0, 2}, {0, 0}}};
    if (dat.n == 3) cases = {{{1, 0, 1}, {0, 0, 0}}, {{1, 1, 1}, {0, 1, 0}}};
    for (const auto& [lambda, mu] : cases) {
      auto m = coroot_decomposition(dat, lambda, mu);
      Coweight acc(dat.n, 0);
      for (int j = 0; j < dat.n; ++j) {
        Coweight cr = dat.coroot(j);
        for (int k = 0; k < dat.n; ++k) acc[k] += static_cast<int>(m[j]) * cr[k];
      }
      CHECK(acc == sub(lambda, mu));
    }
  }
}

TEST_CASE("coroot pairings match the Cartan matrix") {
  for (const char* name : {"A1", "A2", "B2", "A3"}) {
    CartanDatum dat = make_cartan(name);
    for (int j = 0; j < dat.n; ++j) {
      Coweight cr = dat.coroot(j);
      for (int i = 0; i < dat.n; ++i) CHECK(dat.pairing(cr, i) == dat.cartan_entry(j, i));
    }
  }
}

TEST_CASE("positive roots") {
  CartanDatum a1 = make_cartan("A1");
  CHECK(positive_roots(a1) == std::vector<RootVec>{{1}});
  CartanDatum a2 = make_cartan("A2");
  CHECK(positive_roots(a2) == std::vector<RootVec>{{0, 1}, {1, 0}, {1, 1}});
  CartanDatum b2 = make_cartan("B2");
  CHECK(positive_roots(b2) == std::vector<RootVec>{{0, 1}, {1, 0}, {1, 1}, {1, 2}});
  CHECK(positive_roots(make_cartan("A3")).size() == 6);
}

TEST_CASE("dominance predicates") {
  CHECK(is_dominant({0, 0}));
  CHECK(is_antidominant({0, 0}));
  CHECK(is_antidominant({-1, -3}));
  CHECK(!is_dominant({1, -1}));
  CHECK(!is_antidominant({1, -1}));
}

TEST_CASE("transposed convention is the dual labeling") {
  CartanDatum b2t = make_cartan("B2", true);
  CHECK(b2t.cartan_entry(0, 1) == -2);
  CHECK(b2t.cartan_entry(1, 0) == -1);
  CHECK(b2t.d == std::vector<long>{1, 2});
  CHECK(b2t.bilinear(0, 1) == b2t.bilinear(1, 0));
  CHECK(positive_roots(b2t).size() == 4);
  // the dual labeling moves the coroot lattice: (1,1)-(0,0) becomes solvable
  CHECK(coroot_decomposition(b2t, {1, 1}, {0, 1}) == std::vector<long>{1, 1});
  CHECK(derive_symmetrizers({{2, -1}, {-2, 2}}) == std::vector<long>{2, 1});
}
