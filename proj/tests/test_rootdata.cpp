#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "primcone/rootdata.hpp"
#include "primcone/prng.hpp"

using namespace primcone;
using namespace primcone::rootdata;

namespace {

Weight fund(int rank, int i, long c = 1) {
  Weight w = Weight::zero(rank);
  w[i] = c;
  return w;
}

const char* kSimpleTypes[] = {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8",
                              "B2", "B3", "B4", "B5", "B6", "B7", "B8",
                              "C2", "C3", "C4", "C5", "C6", "C7", "C8",
                              "D3", "D4", "D5", "D6", "D7", "D8",
                              "E6", "E7", "E8", "F4", "G2"};

}  // namespace

TEST_CASE("Cartan type parsing and rank restrictions") {
  CHECK(CartanType::parse("A1xA1").factors.size() == 2);
  CHECK(CartanType::parse("B3").str() == "B3");
  CHECK(CartanType::parse("A1xB3xG2").total_rank() == 6);
  CHECK(CartanType::parse("C2").normalized().str() == "B2");
  CHECK(CartanType::parse("C3").normalized().str() == "C3");
  CHECK_THROWS(CartanType::parse("D2"));
  CHECK_THROWS(CartanType::parse("E5"));
  CHECK_THROWS(CartanType::parse("F5"));
  CHECK_THROWS(CartanType::parse("G3"));
  CHECK_THROWS(CartanType::parse("B1"));
  CHECK_THROWS(CartanType::parse("X4"));
  CHECK_THROWS(CartanType::parse(""));
}

TEST_CASE("positive root counts match the classical closed forms") {
  for (const char* t : kSimpleTypes) {
    CartanType ct = CartanType::parse(t);
    RootSystem rs(ct);
    auto [fam, rank] = ct.factors[0];
    CHECK_MESSAGE(static_cast<long>(rs.positive_roots().size()) ==
                      classical_positive_root_count(fam, rank),
                  t);
    // every positive root nonnegative; simple roots are unit vectors
    for (auto& r : rs.positive_roots())
      for (long c : r.coords) CHECK(c >= 0);
  }
  CHECK(RootSystem(CartanType::parse("A2")).positive_roots().size() == 3);
  CHECK(RootSystem(CartanType::parse("G2")).positive_roots().size() == 6);
  CHECK(RootSystem(CartanType::parse("F4")).positive_roots().size() == 24);
  CHECK(RootSystem(CartanType::parse("A1xA1")).positive_roots().size() == 2);
}

TEST_CASE("Cartan matrix shape and rho") {
  for (const char* t : {"A3", "B4", "C3", "D4", "E6", "F4", "G2"}) {
    RootSystem rs(CartanType::parse(t));
    int n = rs.rank();
    for (int i = 0; i < n; ++i) {
      CHECK(rs.cartan(i, i) == 2);
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        CHECK(rs.cartan(i, j) <= 0);
        CHECK(rs.cartan(i, j) >= -3);
      }
    }
    // rho = half sum of positive roots has fundamental coordinates (1,..,1)
    std::vector<long> twice(n, 0);
    for (auto& r : rs.positive_roots()) {
      Weight w = rs.root_to_weight(r);
      for (int k = 0; k < n; ++k) twice[k] += w[k];
    }
    for (int k = 0; k < n; ++k) CHECK(twice[k] == 2);
  }
}

TEST_CASE("pairing: fundamental weights vs simple coroots") {
  RootSystem rs(CartanType::parse("B3"));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Root aj(std::vector<long>(3, 0));
      aj.coords[j] = 1;
      CHECK(rs.pairing(fund(3, i), aj) == (i == j ? 1 : 0));
    }
  for (int j = 0; j < 3; ++j) {
    Root aj(std::vector<long>(3, 0));
    aj.coords[j] = 1;
    CHECK(rs.pairing(rs.rho(), aj) == 1);
  }
}

TEST_CASE("B2 pairing against explicit inverse-Cartan arithmetic") {
  RootSystem rs(CartanType::parse("B2"));
  // long simple root alpha_1: <omega_2, alpha_1^vee> = 0
  Root a1(std::vector<long>{1, 0});
  CHECK(rs.pairing(fund(2, 1), a1) == 0);
  // omega_2 = (1/2) alpha_1 + alpha_2 via the exact inverse Cartan
  auto rc = rs.weight_to_root_coords(fund(2, 1));
  CHECK(rc[0] == Rat(1, 2));
  CHECK(rc[1] == Rat(1));
  // pairing of omega_2 with the short coroot alpha_2^vee is 1
  Root a2(std::vector<long>{0, 1});
  CHECK(rs.pairing(fund(2, 1), a2) == 1);
  // highest root of B2 is the long root alpha_1 + 2 alpha_2
  CHECK(rs.highest_root().coords == std::vector<long>{1, 2});
}

TEST_CASE("dual highest weight") {
  RootSystem a2(CartanType::parse("A2"));
  CHECK(a2.dual_highest_weight(fund(2, 0)) == fund(2, 1));
  CHECK(a2.dual_highest_weight(fund(2, 1)) == fund(2, 0));
  RootSystem b2(CartanType::parse("B2"));
  CHECK(b2.dual_highest_weight(fund(2, 0)) == fund(2, 0));  // -1 in W(B2)
  CHECK(b2.dual_highest_weight(Weight::zero(2)) == Weight::zero(2));
  CHECK_THROWS(a2.dual_highest_weight(Weight({-1, 0})));

  // involution + dominance preservation across types and small weights
  for (const char* t : {"A3", "B3", "C3", "D4", "G2", "F4", "E6"}) {
    RootSystem rs(CartanType::parse(t));
    Prng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<long> c(rs.rank());
      for (auto& x : c) x = rng.int_in(0, 2);
      Weight w(c);
      Weight d = rs.dual_highest_weight(w);
      CHECK(d.is_dominant());
      CHECK(rs.dual_highest_weight(d) == w);
    }
  }
}

TEST_CASE("dot action") {
  RootSystem a1(CartanType::parse("A1"));
  WeylElement id, s1{{0}};
  Weight m5(std::vector<long>{5});
  CHECK(a1.dot_action(id, m5) == m5);
  CHECK(a1.dot_action(s1, m5) == Weight({-7}));  // s * m = -m-2

  RootSystem a2(CartanType::parse("A2"));
  Weight zero = Weight::zero(2);
  CHECK(a2.dot_action(WeylElement{{0}}, zero) == Weight({-2, 1}));  // -alpha_1

  // action property (w1 w2) * mu = w1 * (w2 * mu) on random words
  Prng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> w1, w2;
    for (int i = 0; i < 3; ++i) w1.push_back((int)rng.below(2));
    for (int i = 0; i < 3; ++i) w2.push_back((int)rng.below(2));
    std::vector<int> w12 = w1;
    w12.insert(w12.end(), w2.begin(), w2.end());
    Weight mu({rng.int_in(-3, 3), rng.int_in(-3, 3)});
    CHECK(a2.dot_action(WeylElement{w12}, mu) ==
          a2.dot_action(WeylElement{w1}, a2.dot_action(WeylElement{w2}, mu)));
  }
}

TEST_CASE("to_dominant_dot") {
  RootSystem a1(CartanType::parse("A1"));
  for (long m = 0; m <= 6; ++m) {
    auto r = a1.to_dominant_dot(Weight({m}));
    CHECK(!r.singular);
    CHECK(r.length == 0);
    CHECK(r.dominant == Weight({m}));
    auto r2 = a1.to_dominant_dot(Weight({-m - 2}));
    CHECK(!r2.singular);
    CHECK(r2.length == 1);
    CHECK(r2.dominant == Weight({m}));
  }
  CHECK(a1.to_dominant_dot(Weight({-1})).singular);

  // singular iff some pairing <mu+rho, alpha^vee> vanishes: both code paths
  for (const char* t : {"A2", "B2", "G2", "A3"}) {
    RootSystem rs(CartanType::parse(t));
    Prng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<long> c(rs.rank());
      for (auto& x : c) x = rng.int_in(-5, 5);
      Weight mu(c);
      CHECK(rs.to_dominant_dot(mu).singular == rs.dot_singular_by_pairings(mu));
    }
  }

  // straightening w * mu for dominant-regular mu recovers (l(w), mu)
  RootSystem b2(CartanType::parse("B2"));
  Weight mu({1, 2});
  for (auto word : std::vector<std::vector<int>>{{0}, {1}, {0, 1}, {1, 0}, {0, 1, 0}}) {
    Weight moved = b2.dot_action(WeylElement{word}, mu);
    auto r = b2.to_dominant_dot(moved);
    CHECK(!r.singular);
    CHECK(r.dominant == mu);
    CHECK(r.length == static_cast<long>(word.size()));  // these words are reduced
  }
}

TEST_CASE("decompose_as_root_sums") {
  // B3, omega_3: exactly one halfsum, alpha_3 + (alpha_1 + 2 alpha_2 + 2 alpha_3)
  RootSystem b3(CartanType::parse("B3"));
  auto dec = b3.decompose_as_root_sums(fund(3, 2));
  REQUIRE(dec.size() == 1);
  CHECK(dec[0].halfsum);
  CHECK(dec[0].simple_index == 2);
  CHECK(dec[0].beta.coords == std::vector<long>{1, 2, 2});
  CHECK(dec[0].str(b3) == "1/2[a3 + (a1+2a2+2a3)]");

  // A2, omega_1: empty (brute force over all pairs is the defining loop)
  RootSystem a2(CartanType::parse("A2"));
  CHECK(a2.decompose_as_root_sums(fund(2, 0)).empty());

  // A_n, omega_1 + omega_n: exactly two sums
  for (int n = 2; n <= 5; ++n) {
    RootSystem an(CartanType::simple(Family::A, n));
    Weight adj = fund(n, 0) + fund(n, n - 1);
    auto d = an.decompose_as_root_sums(adj);
    REQUIRE(d.size() == 2);
    CHECK(!d[0].halfsum);
    CHECK(!d[1].halfsum);
  }
}

TEST_CASE("product types: boundaries and concatenated coordinates") {
  RootSystem rs(CartanType::parse("A1xB2"));
  CHECK(rs.rank() == 3);
  REQUIRE(rs.factor_boundaries().size() == 2);
  CHECK(rs.factor_boundaries()[0] == std::pair<int, int>{0, 1});
  CHECK(rs.factor_boundaries()[1] == std::pair<int, int>{1, 3});
  CHECK(rs.positive_roots().size() == 1 + 4);
  // no cross-factor roots
  for (auto& r : rs.positive_roots()) {
    bool f1 = r.coords[0] != 0;
    bool f2 = r.coords[1] != 0 || r.coords[2] != 0;
    CHECK(f1 != f2);
  }
}

TEST_CASE("coroot coordinates are integral for every root") {
  for (const char* t : kSimpleTypes) {
    RootSystem rs(CartanType::parse(t));
    for (auto& r : rs.positive_roots()) (void)rs.coroot_coords(r);  // throws if not
  }
}

TEST_CASE("weight string round trip") {
  Weight w({1, 0, 2});
  CHECK(Weight::parse(w.str()) == w);
  CHECK(Weight::parse("1,0,1").coords == std::vector<long>{1, 0, 1});
  CHECK_THROWS(Weight::parse(""));
}
