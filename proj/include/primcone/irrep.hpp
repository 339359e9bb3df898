#pragma once

#include <map>
#include <set>
#include <vector>

#include "primcone/linalg.hpp"
#include "primcone/rootdata.hpp"

namespace primcone::irrep {

using rootdata::Root;
using rootdata::RootSystem;
using rootdata::Weight;

/// dim V(lambda), by the Weyl product formula (exact).
Int weyl_dimension(const RootSystem& rs, const Weight& lambda);

/// Multiplicity of the weight mu in V(lambda), Freudenthal recursion.
/// Memoization is local to the call.
Int freudenthal_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu);

/// Reusable Freudenthal evaluator (shared cache across queries for one lambda).
class Freudenthal {
 public:
  Freudenthal(const RootSystem& rs, Weight lambda);
  Int mult(const Weight& mu);         // any weight; straightens internally
  bool is_weight(const Weight& mu);   // mult > 0

 private:
  const RootSystem& rs_;
  Weight lambda_;
  Rat top_norm_;  // |lambda+rho|^2
  std::map<Weight, Int> cache_;
  Int dominant_mult(const Weight& mu);
};

struct WeightMultiplicityTable {
  Weight lambda;
  std::map<Weight, Int> entries;  // full orbit expansion
};

/// All weights of V(lambda) with their multiplicities. Intended for small
/// modules (sweeps, table output); the layer realization below never needs it.
WeightMultiplicityTable full_multiplicity_table(const RootSystem& rs, const Weight& lambda);

/// Explicit realization of selected weight layers of V(lambda).
///
/// Vectors are tracked in coordinates relative to a per-layer basis of
/// lowering monomials applied to the highest weight vector; linear relations
/// are resolved through the contravariant (Shapovalov) form, so the layers
/// are layers of the simple quotient, not of the Verma module.
class IrrepModel {
 public:
  struct Layer {
    Weight mu;
    std::vector<std::vector<int>> basis_words;  // simple lowering monomials
    Matrix<Rat> gram;                           // contravariant form, nonsingular
    std::vector<Matrix<Rat>> e_out;  // e_out[i]: this layer -> layer(mu+alpha_i)
    std::vector<Matrix<Rat>> f_in;   // f_in[i]: layer(mu+alpha_i) -> this layer
    size_t dim() const { return basis_words.size(); }
  };

  IrrepModel(const RootSystem& rs, Weight lambda, const std::set<Weight>& targets,
             long height_limit = 64);

  const RootSystem& root_system() const { return rs_; }
  const Weight& lambda() const { return lambda_; }
  bool realized(const Weight& mu) const { return layers_.count(mu) > 0; }
  const Layer& layer(const Weight& mu) const;
  size_t layer_dim(const Weight& mu) const;

  /// Exact matrix of e_i : V(lambda)_mu -> V(lambda)_{mu+alpha_i}.
  const Matrix<Rat>& raising_action(int simple_index, const Weight& mu) const;
  /// Exact matrix of f_i : V(lambda)_{mu+alpha_i} -> V(lambda)_mu.
  const Matrix<Rat>& lowering_action(int simple_index, const Weight& mu) const;

  /// Matrix of the root lowering operator f_beta (beta a positive root, fixed
  /// commutator normalization) from layer(src) to layer(src - beta).
  Matrix<Rat> root_lowering(const Root& beta, const Weight& src);

  /// Coordinates of f_beta . v_lambda in layer(lambda - beta); the span of
  /// this vector is the weight-(lambda-beta) piece of g.v_lambda.
  std::vector<Rat> root_lowering_of_highest(const Root& beta);

 private:
  const RootSystem& rs_;
  Weight lambda_;
  Freudenthal freud_;
  std::map<Weight, Layer> layers_;
  std::map<std::pair<std::vector<long>, Weight>, Matrix<Rat>> froot_memo_;

  void realize(const std::set<Weight>& targets, long height_limit);
  void build_layer(const Weight& nu);
};

}  // namespace primcone::irrep
