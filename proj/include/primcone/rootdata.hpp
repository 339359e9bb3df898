#pragma once

#include <optional>
#include <string>
#include <vector>

#include "primcone/linalg.hpp"
#include "primcone/numeric.hpp"

namespace primcone::rootdata {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Cartan type: an ordered product of simple factors, Bourbaki labels.
struct CartanType {
  std::vector<std::pair<Family, int>> factors;

  static CartanType simple(Family f, int rank);
  /// Grammar: factors joined by "x", each `<letter><rank>`, e.g. "A1xA1", "B3".
  static CartanType parse(const std::string& s);

  int total_rank() const;
  bool is_simple() const { return factors.size() == 1; }
  std::string str() const;
  /// Renames C2 factors to B2 (the one exceptional coincidence kept explicit).
  CartanType normalized() const;

  bool operator==(const CartanType& o) const { return factors == o.factors; }
};

/// Integer vector in fundamental-weight coordinates.
struct Weight {
  std::vector<long> coords;

  Weight() = default;
  explicit Weight(std::vector<long> c) : coords(std::move(c)) {}
  static Weight zero(int rank) { return Weight(std::vector<long>(rank, 0)); }

  size_t rank() const { return coords.size(); }
  long operator[](size_t i) const { return coords[i]; }
  long& operator[](size_t i) { return coords[i]; }
  bool is_zero() const;
  bool is_dominant() const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight operator*(long k) const;
  bool operator==(const Weight& o) const { return coords == o.coords; }
  bool operator!=(const Weight& o) const { return coords != o.coords; }
  bool operator<(const Weight& o) const { return coords < o.coords; }

  std::string str() const;  // comma-separated fundamental coordinates
  static Weight parse(const std::string& s);
};

/// Integer vector in simple-root coordinates; positive roots carry sign +1.
struct Root {
  std::vector<long> coords;
  int sign = +1;

  Root() = default;
  explicit Root(std::vector<long> c, int s = +1) : coords(std::move(c)), sign(s) {}
  long height() const;
  bool operator==(const Root& o) const { return coords == o.coords && sign == o.sign; }
  bool operator<(const Root& o) const;
  std::string str() const;  // e.g. "a1+2a2"
};

struct WeylElement {
  std::vector<int> word;  // simple reflection indices, applied right-to-left
  size_t length() const { return word.size(); }
};

struct StraightenResult {
  bool singular = false;
  long length = 0;
  Weight dominant;
};

class RootSystem {
 public:
  explicit RootSystem(const CartanType& ct);

  const CartanType& type() const { return type_; }
  int rank() const { return rank_; }
  /// cartan(i,j) = <alpha_j, alpha_i^vee>; columns are the simple roots in
  /// fundamental coordinates.
  long cartan(int i, int j) const { return cartan_[i][j]; }
  const Matrix<Rat>& inverse_cartan() const { return inv_cartan_; }
  const std::vector<Root>& positive_roots() const { return positive_; }
  const Weight& rho() const { return rho_; }
  /// [begin, end) simple-root index range of each product factor.
  const std::vector<std::pair<int, int>>& factor_boundaries() const { return factors_; }
  /// squared length of simple root i (long roots normalized to 2; 6 for G2).
  const Rat& root_norm2(int i) const { return simple_norm2_[i]; }

  Weight simple_root_weight(int i) const;        // alpha_i in fundamental coords
  Weight root_to_weight(const Root& r) const;    // signed
  std::vector<Rat> weight_to_root_coords(const Weight& w) const;
  bool is_positive_root(const std::vector<long>& coords) const;
  Root highest_root() const;  // simple types only
  Rat norm2_of_root(const Root& r) const;
  /// coroot of r in simple-coroot coordinates (always integral)
  std::vector<long> coroot_coords(const Root& r) const;

  /// <mu, alpha^vee> for any root alpha (sign respected).
  long pairing(const Weight& mu, const Root& alpha) const;
  /// <mu, alpha_i^vee> = mu.coords[i] for simple roots.
  long pairing_simple(const Weight& mu, int i) const { return mu.coords[i]; }

  /// W-invariant inner product of two weights (rational).
  Rat inner(const Weight& a, const Weight& b) const;

  Weight reflect_simple(const Weight& mu, int i) const;  // s_i(mu)
  Weight apply(const WeylElement& w, const Weight& mu) const;
  Weight dot_action(const WeylElement& w, const Weight& mu) const;  // w*(mu+rho)-rho

  /// Plain Weyl straightening: returns (length of straightening word, dominant
  /// representative). For regular use to_dominant_dot.
  std::pair<long, Weight> to_dominant(const Weight& mu) const;

  /// rho-shifted straightening for Borel-Weil-Bott.
  StraightenResult to_dominant_dot(const Weight& mu) const;

  /// Cross-check path: singular iff <mu+rho, alpha^vee> = 0 for some alpha > 0.
  bool dot_singular_by_pairings(const Weight& mu) const;

  Weight dual_highest_weight(const Weight& lambda) const;  // -w0(lambda)

  /// mu <= lambda in the dominance order (difference a nonnegative integral
  /// combination of simple roots).
  bool dominance_leq(const Weight& mu, const Weight& lambda) const;

  struct Decomposition {
    int simple_index;  // alpha
    Root beta;
    bool halfsum;  // lambda = (alpha+beta)/2 instead of alpha+beta
    std::string str(const RootSystem& rs) const;
  };
  /// All ways lambda = alpha + beta or 2*lambda = alpha + beta, alpha simple,
  /// beta positive; sums first, then halfsums, each ordered by (alpha, beta).
  std::vector<Decomposition> decompose_as_root_sums(const Weight& lambda) const;

 private:
  CartanType type_;
  int rank_;
  std::vector<std::vector<long>> cartan_;
  Matrix<Rat> inv_cartan_;
  std::vector<Rat> simple_norm2_;
  std::vector<Root> positive_;
  std::vector<std::vector<long>> coroot_table_;
  Weight rho_;
  std::vector<std::pair<int, int>> factors_;

  void build_cartan();
  void generate_positive_roots();
  std::vector<long> compute_coroot(const Root& r) const;
};

/// Closed-form positive root counts, used as the test oracle for the
/// reflection-closure generator.
long classical_positive_root_count(Family f, int rank);

/// Order of the full Weyl group.
Int weyl_order(const RootSystem& rs);

/// Order of the Weyl group of the sub-diagram on the given simple nodes.
Int weyl_suborder(const RootSystem& rs, const std::vector<int>& nodes);

/// Size of the Weyl orbit of a dominant weight.
Int dominant_orbit_size(const RootSystem& rs, const Weight& mu);

}  // namespace primcone::rootdata
