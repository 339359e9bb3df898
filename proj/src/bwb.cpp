#include "primcone/bwb.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace primcone::bwb {

ParabolicData::ParabolicData(const RootSystem& r, Weight def) : rs(&r), defining(std::move(def)) {
  if (!defining.is_dominant())
    throw std::invalid_argument("ParabolicData: defining weight must be dominant");
  for (int i = 0; i < r.rank(); ++i)
    if (defining.coords[i] == 0) levi_simples.push_back(i);
}

bool ParabolicData::is_levi(int i) const {
  return std::binary_search(levi_simples.begin(), levi_simples.end(), i);
}

bool ParabolicData::levi_dominant(const Weight& mu) const {
  for (int i : levi_simples)
    if (mu.coords[i] < 0) return false;
  return true;
}

CohomologyResult line_bundle_cohomology(const ParabolicData& p, const Weight& mu) {
  if (!p.levi_dominant(mu))
    throw std::invalid_argument("line_bundle_cohomology: weight not Levi-dominant");
  auto s = p.rs->to_dominant_dot(mu);
  CohomologyResult res;
  if (s.singular) return res;
  res.all_zero = false;
  res.degree = s.length;
  res.highest_weight = s.dominant;
  res.dimension = irrep::weyl_dimension(*p.rs, s.dominant);
  return res;
}

Int euler_characteristic_check(const ParabolicData& p, const Weight& mu) {
  if (!p.levi_dominant(mu))
    throw std::invalid_argument("euler_characteristic_check: weight not Levi-dominant");
  const RootSystem& rs = *p.rs;
  Weight mr = mu + rs.rho();
  Rat prod(1);
  for (auto& a : rs.positive_roots()) {
    long num = rs.pairing(mr, a);
    if (num == 0) return 0;
    prod *= Rat(num) / Rat(rs.pairing(rs.rho(), a));
  }
  if (!is_integer(prod)) throw std::logic_error("euler characteristic: non-integral");
  return to_int(prod);
}

std::vector<JHWeight> jordan_holder_weights(const ParabolicData& p) {
  std::vector<JHWeight> out;
  for (auto& beta : p.rs->positive_roots()) {
    bool levi_root = true;
    for (int i = 0; i < p.rs->rank(); ++i)
      if (beta.coords[i] != 0 && !p.is_levi(i)) levi_root = false;
    if (levi_root) continue;
    JHWeight jh;
    jh.beta = beta;
    jh.levi_dominant = p.levi_dominant(p.rs->root_to_weight(beta));
    out.push_back(jh);
  }
  return out;
}

namespace {

std::vector<H1Candidate> candidates_in_degree(const RootSystem& rs, const Weight& lambda,
                                              long d, long degree) {
  Weight lstar = rs.dual_highest_weight(lambda);
  ParabolicData pstar(rs, lstar);  // base point at the opposite parabolic
  std::map<Weight, H1Candidate> found;
  for (auto& jh : jordan_holder_weights(pstar)) {
    if (!jh.levi_dominant) continue;
    Weight twisted = lstar * d + rs.root_to_weight(jh.beta);
    auto s = rs.to_dominant_dot(twisted);
    if (s.singular || s.length != degree) continue;
    Weight mu = s.dominant;
    auto& cand = found[mu];
    cand.mu = mu;
    // the witnessing simple reflection (degree-1 case has exactly one)
    if (degree == 1) {
      for (int i = 0; i < rs.rank(); ++i) {
        if (rs.dot_action(rootdata::WeylElement{{i}}, mu) == twisted) {
          cand.witnesses.push_back({i, jh.beta});
          break;
        }
      }
    } else {
      cand.witnesses.push_back({-1, jh.beta});
    }
  }
  std::vector<H1Candidate> out;
  for (auto& [mu, c] : found) out.push_back(c);
  return out;
}

}  // namespace

std::vector<H1Candidate> h1_candidates_mechanical(const RootSystem& rs, const Weight& lambda,
                                                  long d) {
  return candidates_in_degree(rs, lambda, d, 1);
}

std::vector<H1Candidate> h0_candidates_mechanical(const RootSystem& rs, const Weight& lambda,
                                                  long d) {
  return candidates_in_degree(rs, lambda, d, 0);
}

std::vector<H1Candidate> twisted_tangent_h1_candidates(const ParabolicData& p,
                                                       const Weight& lambda, long d) {
  if (d >= 0) return {};  // H^1(X, L_{d lambda} (x) T) = 0 for d >= 0
  return h1_candidates_mechanical(*p.rs, lambda, d);
}

}  // namespace primcone::bwb
