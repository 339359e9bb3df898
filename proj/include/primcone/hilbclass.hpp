#pragma once

#include <optional>
#include <string>
#include <vector>

#include "primcone/irrep.hpp"
#include "primcone/rootdata.hpp"

namespace primcone::hilbclass {

using rootdata::CartanType;
using rootdata::RootSystem;
using rootdata::Weight;

struct CandidateCase {
  CartanType cartan_type;
  Weight lambda;
  std::vector<RootSystem::Decomposition> decompositions;
  std::string paper_label;  // C1..C34 when the case appears in the published list
};

enum class TangentPart { Zero, MinusLambda };

struct TangentReport {
  long dim_zero_part = 0;
  long dim_minus_lambda_part = 0;
  long total = 0;
  bool affine_line = false;  // otherwise a (reduced) point
  std::string h_label;       // H1..H9 when the case deforms
};

/// All dominant weights admitting a decomposition as a sum or half-sum of a
/// simple root and a positive root. For product types only weights with every
/// factor component nonzero are kept.
std::vector<CandidateCase> enumerate_candidates(const CartanType& ct);

/// Published case label, canonical labelings only.
std::string paper_c_label(const CartanType& ct, const Weight& lambda);

/// Deforming-case label including the aliases forced by the low-rank
/// coincidences (A3 ~ D3, C2 ~ B2) and D4 triality.
std::optional<std::string> hilb_h_label(const CartanType& ct, const Weight& lambda);

/// dim of the invariant tangent-space component at weight 0 or -lambda:
/// {v in V(lambda)_nu : e_alpha v in (g.v_lambda)_{nu+alpha} for all simple
/// alpha} modulo (g.v_lambda)_nu, by exact linear algebra on realized layers.
long tangent_component_dim(const RootSystem& rs, const Weight& lambda, TangentPart part);

/// Both components from one realization (cheaper than two calls).
std::pair<long, long> tangent_component_dims(const RootSystem& rs, const Weight& lambda);

/// card(S intersect E) - 1 for the adjoint representation, E the set of roots
/// gamma with gamma + delta = highest root for some root delta.
long adjoint_tangent_dim(const RootSystem& rs);

struct ClassifiedCase {
  CandidateCase candidate;
  TangentReport report;
};

/// Sweep of the canonical simple types of rank <= max_rank plus A1xA1; every
/// candidate gets both tangent components. Adjoint candidates of rank >= 7
/// use the closed card(S cap E) - 1 formula; smaller adjoints run the generic
/// path and are checked against the formula.
std::vector<ClassifiedCase> classify(int max_rank);

/// The canonical sweep order used by classify and the CLI.
std::vector<CartanType> canonical_types(int max_rank);

}  // namespace primcone::hilbclass
