#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "primcone/irrep.hpp"
#include "primcone/prng.hpp"

using namespace primcone;
using namespace primcone::rootdata;
using namespace primcone::irrep;

namespace {

Weight fund(int rank, int i, long c = 1) {
  Weight w = Weight::zero(rank);
  w[i] = c;
  return w;
}

RootSystem make(const char* t) { return RootSystem(CartanType::parse(t)); }

// brute-force oracle: sum of multiplicities over all weights, via dominant
// representatives and orbit sizes
Int total_multiplicity(const RootSystem& rs, const Weight& lambda) {
  Freudenthal f(rs, lambda);
  // enumerate dominant weights of height <= height(lambda)
  std::vector<Rat> hts(rs.rank());
  Rat hlam(0);
  for (int i = 0; i < rs.rank(); ++i) {
    auto rc = rs.weight_to_root_coords(fund(rs.rank(), i));
    for (auto& c : rc) hts[i] += c;
    hlam += hts[i] * lambda[i];
  }
  Int total = 0;
  std::vector<long> cur(rs.rank(), 0);
  std::function<void(int, Rat)> rec = [&](int pos, Rat left) {
    if (pos == rs.rank()) {
      Weight mu(cur);
      if (!rs.dominance_leq(mu, lambda)) return;
      Int m = f.mult(mu);
      if (m > 0) total += m * dominant_orbit_size(rs, mu);
      return;
    }
    for (long c = 0;; ++c) {
      Rat used = hts[pos] * c;
      if (used > left) break;
      cur[pos] = c;
      rec(pos + 1, left - used);
    }
    cur[pos] = 0;
  };
  rec(0, hlam);
  return total;
}

}  // namespace

TEST_CASE("weyl dimension: closed forms and spin/symplectic checks") {
  RootSystem a1 = make("A1");
  for (long m = 0; m <= 8; ++m) CHECK(weyl_dimension(a1, Weight({m})) == m + 1);
  CHECK(weyl_dimension(make("B3"), fund(3, 2)) == 8);    // spin rep
  CHECK(weyl_dimension(make("C3"), fund(3, 1)) == 14);
  CHECK(weyl_dimension(make("G2"), fund(2, 0)) == 7);
  CHECK(weyl_dimension(make("G2"), fund(2, 0, 2)) == 27);
  CHECK(weyl_dimension(make("F4"), fund(4, 3)) == 26);
  CHECK(weyl_dimension(make("E6"), fund(6, 1)) == 78);   // adjoint
  CHECK(weyl_dimension(make("E8"), fund(8, 7)) == 248);  // adjoint
  CHECK_THROWS(weyl_dimension(a1, Weight({-1})));
}

TEST_CASE("weyl orders and orbit sizes") {
  CHECK(weyl_order(make("A3")) == 24);
  CHECK(weyl_order(make("B4")) == 384);
  CHECK(weyl_order(make("D4")) == 192);
  CHECK(weyl_order(make("F4")) == 1152);
  CHECK(weyl_order(make("G2")) == 12);
  CHECK(weyl_order(make("E6")) == 51840);
  CHECK(weyl_order(make("A1xA1")) == 4);

  // cross-check orbit sizes against explicit orbit BFS
  for (const char* t : {"A2", "B2", "B3", "C3", "G2", "D4", "A1xA1"}) {
    RootSystem rs = make(t);
    Prng rng(5);
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<long> c(rs.rank());
      for (auto& x : c) x = rng.int_in(0, 2);
      Weight mu(c);
      std::set<Weight> orbit{mu};
      std::vector<Weight> stack{mu};
      while (!stack.empty()) {
        Weight w = stack.back();
        stack.pop_back();
        for (int i = 0; i < rs.rank(); ++i) {
          Weight v = rs.reflect_simple(w, i);
          if (orbit.insert(v).second) stack.push_back(v);
        }
      }
      CHECK(dominant_orbit_size(rs, mu) == Int(orbit.size()));
    }
  }
}

TEST_CASE("Freudenthal multiplicities from the worked cases") {
  // D_n, lambda = 2 omega_1, mu = 0 -> n - 1
  for (int n = 3; n <= 6; ++n) {
    RootSystem dn = RootSystem(CartanType::simple(Family::D, n));
    CHECK(freudenthal_multiplicity(dn, fund(n, 0, 2), Weight::zero(n)) == n - 1);
  }
  // G2, lambda = 2 omega_1: 0 has multiplicity 3, alpha_1 has multiplicity 2
  RootSystem g2 = make("G2");
  Weight two_w1 = fund(2, 0, 2);
  CHECK(freudenthal_multiplicity(g2, two_w1, Weight::zero(2)) == 3);
  CHECK(freudenthal_multiplicity(g2, two_w1, g2.simple_root_weight(0)) == 2);
  CHECK(freudenthal_multiplicity(g2, two_w1, g2.simple_root_weight(1)) == 1);
  CHECK(freudenthal_multiplicity(g2, two_w1, two_w1) == 1);
  CHECK(freudenthal_multiplicity(g2, two_w1, fund(2, 0, 3)) == 0);

  // Weyl invariance: multiplicity equals that of the dominant representative
  Freudenthal f(g2, two_w1);
  Prng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    Weight mu({rng.int_in(-4, 4), rng.int_in(-4, 4)});
    CHECK(f.mult(mu) == f.mult(g2.to_dominant(mu).second));
  }
}

TEST_CASE("multiplicity sum equals Weyl dimension (small sweep)") {
  for (const char* t : {"A1", "A2", "B2", "G2", "A3", "B3", "C3", "A1xA1"}) {
    RootSystem rs = make(t);
    std::vector<long> c(rs.rank(), 0);
    std::function<void(int)> rec = [&](int pos) {
      if (pos == rs.rank()) {
        Weight lam(c);
        CHECK(total_multiplicity(rs, lam) == weyl_dimension(rs, lam));
        return;
      }
      for (long v = 0; v <= 2; ++v) {
        c[pos] = v;
        rec(pos + 1);
      }
      c[pos] = 0;
    };
    rec(0);
  }
}

TEST_CASE("full multiplicity table: G2 adjoint") {
  RootSystem g2 = make("G2");
  auto table = full_multiplicity_table(g2, fund(2, 1));  // adjoint, dim 14
  Int total = 0;
  for (auto& [w, m] : table.entries) total += m;
  CHECK(total == 14);
  CHECK(table.entries.at(Weight::zero(2)) == 2);
  CHECK(table.entries.at(fund(2, 1)) == 1);
}

TEST_CASE("layer realization: sl2 strings") {
  RootSystem a1 = make("A1");
  Weight lam({2});
  IrrepModel model(a1, lam, {Weight::zero(1)});
  CHECK(model.layer_dim(lam) == 1);
  CHECK(model.layer_dim(Weight::zero(1)) == 1);
  // e then f on the zero layer are nonzero 1x1 matrices
  auto e = model.raising_action(0, Weight::zero(1));
  REQUIRE(e.rows == 1);
  CHECK(e[0][0] != 0);
  auto fm = model.lowering_action(0, Weight::zero(1));
  REQUIRE(fm.rows == 1);
  CHECK(fm[0][0] != 0);
  // e on the highest layer is the zero map
  CHECK(model.raising_action(0, lam).rows == 0);
}

TEST_CASE("layer realization: D4 zero layer is 3-dimensional") {
  RootSystem d4 = make("D4");
  Weight lam = fund(4, 0, 2);
  IrrepModel model(d4, lam, {Weight::zero(4)});
  CHECK(model.layer_dim(Weight::zero(4)) == 3);  // Freudenthal oracle n-1, n=4
  CHECK(model.layer_dim(lam) == 1);
}

TEST_CASE("realized layer dims equal Freudenthal on sampled cases") {
  struct Case { const char* t; std::vector<long> lam; };
  for (auto& cs : {Case{"A2", {1, 1}}, Case{"B2", {0, 2}}, Case{"G2", {2, 0}},
                   Case{"B3", {0, 0, 1}}, Case{"C3", {0, 1, 0}}}) {
    RootSystem rs = make(cs.t);
    Weight lam(cs.lam);
    Weight neg = -lam;
    std::set<Weight> targets{Weight::zero(rs.rank()), neg};
    IrrepModel model(rs, lam, targets);
    Freudenthal f(rs, lam);
    for (auto probe : targets) {
      if (f.mult(probe) > 0) CHECK(Int(model.layer_dim(probe)) == f.mult(probe));
    }
    // adjointness: E_i^T G_up = G_mu F_i on the zero layer where realized
    Weight mu = Weight::zero(rs.rank());
    if (model.realized(mu)) {
      for (int i = 0; i < rs.rank(); ++i) {
        Weight up = mu + rs.simple_root_weight(i);
        if (!model.realized(up)) continue;
        auto lhs = model.raising_action(i, mu).transpose() * model.layer(up).gram;
        auto rhs = model.layer(mu).gram * model.lowering_action(i, mu);
        CHECK(lhs.a == rhs.a);
      }
    }
  }
}

TEST_CASE("joint raising kernel on the zero layer is trivial (V_0^U = 0)") {
  struct Case { const char* t; std::vector<long> lam; };
  for (auto& cs : {Case{"A2", {1, 1}}, Case{"G2", {2, 0}}, Case{"B2", {2, 0}},
                   Case{"D4", {2, 0, 0, 0}}}) {
    RootSystem rs = make(cs.t);
    Weight lam(cs.lam);
    Weight zero = Weight::zero(rs.rank());
    IrrepModel model(rs, lam, {zero});
    size_t d = model.layer_dim(zero);
    REQUIRE(d > 0);
    size_t rows = 0;
    for (int i = 0; i < rs.rank(); ++i) rows += model.raising_action(i, zero).rows;
    Matrix<Rat> stacked(rows, d);
    size_t r0 = 0;
    for (int i = 0; i < rs.rank(); ++i) {
      auto& E = model.raising_action(i, zero);
      for (size_t r = 0; r < E.rows; ++r, ++r0)
        for (size_t c = 0; c < d; ++c) stacked[r0][c] = E[r][c];
    }
    CHECK(rank(stacked) == d);
  }
}

TEST_CASE("root lowering of the highest vector") {
  // f_beta v_lambda is nonzero iff <lambda, beta^vee> >= 1
  for (const char* t : {"A2", "B2", "G2", "B3"}) {
    RootSystem rs = make(t);
    Weight lam(std::vector<long>(rs.rank(), 1));  // regular lambda = rho
    std::set<Weight> targets;
    for (auto& b : rs.positive_roots()) targets.insert(lam - rs.root_to_weight(b));
    IrrepModel model(rs, lam, targets);
    for (auto& beta : rs.positive_roots()) {
      auto v = model.root_lowering_of_highest(beta);
      bool nonzero = false;
      for (auto& x : v) nonzero = nonzero || x != 0;
      CHECK(nonzero == (rs.pairing(lam, beta) >= 1));
    }
  }
  // a case with a vanishing pairing: A2, lambda = omega_1, beta = alpha_2
  RootSystem a2 = make("A2");
  Weight w1 = fund(2, 0);
  Root a2root(std::vector<long>{0, 1});
  IrrepModel model(a2, w1, {w1 - a2.root_to_weight(a2root)});
  // lambda - alpha_2 is not a weight of V(omega_1): layer is empty
  CHECK(model.layer_dim(w1 - a2.root_to_weight(a2root)) == 0);
}

TEST_CASE("height limit is enforced") {
  RootSystem a1 = make("A1");
  CHECK_THROWS(IrrepModel(a1, Weight({80}), {Weight({-80})}, 64));
}
