#pragma once

#include <vector>

#include "primcone/irrep.hpp"
#include "primcone/rootdata.hpp"

namespace primcone::bwb {

using rootdata::Root;
using rootdata::RootSystem;
using rootdata::Weight;

/// Parabolic P containing B, cut out by a dominant defining weight: the Levi
/// simples are the nodes where the weight vanishes.
struct ParabolicData {
  const RootSystem* rs;
  Weight defining;
  std::vector<int> levi_simples;

  ParabolicData(const RootSystem& r, Weight def);
  bool is_levi(int i) const;
  /// mu pairs nonnegatively with every Levi simple coroot
  bool levi_dominant(const Weight& mu) const;
};

struct CohomologyResult {
  bool all_zero = true;
  long degree = 0;
  Weight highest_weight;
  Int dimension = 0;
};

/// Borel-Weil-Bott for the homogeneous bundle induced by a Levi-dominant
/// weight mu: all cohomology vanishes iff mu + rho is singular; otherwise one
/// simple module V(w*mu) sits in degree l(w).
CohomologyResult line_bundle_cohomology(const ParabolicData& p, const Weight& mu);

/// Signed Euler characteristic by the Weyl product formula, the independent
/// oracle for line_bundle_cohomology: equals (-1)^degree * dimension of the
/// concentrated result and 0 in the singular case. Over the Levi factors each
/// ratio is 1 when mu is a character of the parabolic, so this is the
/// non-Levi product in that case.
Int euler_characteristic_check(const ParabolicData& p, const Weight& mu);

struct JHWeight {
  Root beta;
  bool levi_dominant;  // highest weight of a Jordan-Holder piece of g/q
};

/// T-weights of g/q for the parabolic: the positive roots outside the Levi
/// subsystem, tagged with Levi-dominance (the tagged ones are the highest
/// weights of the Jordan-Holder pieces).
std::vector<JHWeight> jordan_holder_weights(const ParabolicData& p);

struct H1Candidate {
  Weight mu;                                    // dominant
  std::vector<std::pair<int, Root>> witnesses;  // (simple index, beta)
};

/// Candidate nonvanishing pieces of H^1(X_lambda, L_{d lambda} (x) T): for
/// each Jordan-Holder piece highest weight beta (taken for the parabolic of
/// lambda*, the natural base point), straighten d*lambda* + beta and keep the
/// degree-1 dominant outcomes. Upper-bound semantics: a candidate is a piece
/// whose cohomology is nonzero; exactness for the classification weights is
/// the caller's concern. Empty for d >= 0.
std::vector<H1Candidate> twisted_tangent_h1_candidates(const ParabolicData& p,
                                                       const Weight& lambda, long d);

/// Mechanical path without the d >= 0 cutoff; used to verify the cutoff.
std::vector<H1Candidate> h1_candidates_mechanical(const RootSystem& rs, const Weight& lambda,
                                                  long d);

/// Degree-0 analogue: candidate pieces of H^0(X_lambda, L_{d lambda} (x) T),
/// the ingredient of the product-type analysis.
std::vector<H1Candidate> h0_candidates_mechanical(const RootSystem& rs, const Weight& lambda,
                                                  long d);

}  // namespace primcone::bwb
