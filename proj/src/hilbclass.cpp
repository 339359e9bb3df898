#include "primcone/hilbclass.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <stdexcept>

namespace primcone::hilbclass {

using rootdata::Family;
using rootdata::Root;

std::vector<CandidateCase> enumerate_candidates(const CartanType& ct) {
  RootSystem rs(ct);
  auto factor_components_nonzero = [&](const Weight& w) {
    for (auto& [b, e] : rs.factor_boundaries()) {
      bool nonzero = false;
      for (int i = b; i < e; ++i) nonzero = nonzero || w.coords[i] != 0;
      if (!nonzero) return false;
    }
    return true;
  };
  std::set<Weight> found;
  for (int i = 0; i < rs.rank(); ++i) {
    Weight ai = rs.simple_root_weight(i);
    for (auto& beta : rs.positive_roots()) {
      Weight sum = ai + rs.root_to_weight(beta);
      if (sum.is_dominant() && factor_components_nonzero(sum)) found.insert(sum);
      bool even = true;
      for (long c : sum.coords) even = even && c % 2 == 0;
      if (even) {
        Weight half = sum;
        for (auto& c : half.coords) c /= 2;
        if (half.is_dominant() && factor_components_nonzero(half)) found.insert(half);
      }
    }
  }
  std::vector<CandidateCase> out;
  for (auto& lam : found) {
    CandidateCase c;
    c.cartan_type = ct;
    c.lambda = lam;
    c.decompositions = rs.decompose_as_root_sums(lam);
    c.paper_label = paper_c_label(ct, lam);
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

Weight fund(int rank, int i, long c = 1) {
  Weight w = Weight::zero(rank);
  w[i] = c;
  return w;
}

bool is_adjoint_weight(const RootSystem& rs, const Weight& lambda) {
  if (!rs.type().is_simple()) return false;
  return rs.root_to_weight(rs.highest_root()) == lambda;
}

}  // namespace

std::string paper_c_label(const CartanType& ct, const Weight& lambda) {
  if (ct.factors.size() == 2 && ct.factors[0] == std::pair{Family::A, 1} &&
      ct.factors[1] == std::pair{Family::A, 1}) {
    if (lambda == Weight({1, 1})) return "C33";
    if (lambda == Weight({2, 2})) return "C34";
    return "";
  }
  if (!ct.is_simple()) return "";
  auto [f, n] = ct.factors[0];
  auto is = [&](int i, long c) { return lambda == fund(n, i, c); };
  switch (f) {
    case Family::A:
      if (n == 1 && is(0, 2)) return "C1";
      if (n == 1 && is(0, 4)) return "C2";
      if (n == 2 && is(0, 3)) return "C3";
      if (n == 2 && is(1, 3)) return "C4";
      if (n == 3 && is(1, 1)) return "C5";
      if (n == 3 && is(1, 2)) return "C6";
      if (n >= 2 && lambda == fund(n, 0) + fund(n, n - 1)) return "C7";
      break;
    case Family::B:
      if (n == 2 && is(1, 1)) return "C8";
      if (n == 2 && is(1, 2)) return "C9";
      if (n == 3 && is(2, 1)) return "C10";
      if (n == 3 && is(2, 2)) return "C11";
      if (n >= 3 && is(1, 1)) return "C12";
      if (n >= 2 && is(0, 1)) return "C13";
      if (n >= 2 && is(0, 2)) return "C14";
      break;
    case Family::C:
      if (n >= 3 && is(0, 1)) return "C15";
      if (n >= 3 && is(0, 2)) return "C16";
      if (n >= 3 && is(1, 1)) return "C17";
      break;
    case Family::D:
      if (n == 4 && is(2, 1)) return "C18";
      if (n == 4 && is(3, 1)) return "C19";
      if (n == 4 && is(2, 2)) return "C20";
      if (n == 4 && is(3, 2)) return "C21";
      if (n >= 4 && is(0, 1)) return "C22";
      if (n >= 4 && is(0, 2)) return "C23";
      if (n >= 4 && is(1, 1)) return "C24";
      break;
    case Family::E:
      if (n == 6 && is(1, 1)) return "C25";
      if (n == 7 && is(0, 1)) return "C26";
      if (n == 8 && is(7, 1)) return "C27";
      break;
    case Family::F:
      if (is(0, 1)) return "C28";
      if (is(3, 1)) return "C29";
      break;
    case Family::G:
      if (is(0, 1)) return "C30";
      if (is(0, 2)) return "C31";
      if (is(1, 1)) return "C32";
      break;
  }
  return "";
}

std::optional<std::string> hilb_h_label(const CartanType& ct, const Weight& lambda) {
  if (ct.factors.size() == 2 && ct.factors[0] == std::pair{Family::A, 1} &&
      ct.factors[1] == std::pair{Family::A, 1}) {
    if (lambda == Weight({1, 1}) || lambda == Weight({2, 2})) return "H9";
    return std::nullopt;
  }
  if (!ct.is_simple()) return std::nullopt;
  auto [f, n] = ct.factors[0];
  auto is = [&](int i, long c) { return lambda == fund(n, i, c); };
  switch (f) {
    case Family::A:
      if (n == 1 && (is(0, 2) || is(0, 4))) return "H1";
      if (n >= 2 && lambda == fund(n, 0) + fund(n, n - 1)) return "H2";
      if (n == 3 && (is(1, 1) || is(1, 2))) return "H6";  // D3 relabeling
      break;
    case Family::B:
      if (n == 3 && (is(2, 1) || is(2, 2))) return "H3";
      if (n >= 2 && (is(0, 1) || is(0, 2))) return "H4";
      break;
    case Family::C:
      if (n >= 3 && is(1, 1)) return "H5";
      if (n == 2 && (is(1, 1) || is(1, 2))) return "H4";  // C2 ~ B2
      break;
    case Family::D:
      if (n >= 3 && (is(0, 1) || is(0, 2))) return "H6";
      if (n == 3 && lambda == fund(3, 1) + fund(3, 2)) return "H2";  // D3 ~ A3 adjoint
      if (n == 4 && (is(2, 1) || is(3, 1) || is(2, 2) || is(3, 2)))
        return "H6";  // triality image of omega_1 / 2 omega_1
      break;
    case Family::E:
      break;
    case Family::F:
      if (is(3, 1)) return "H7";
      break;
    case Family::G:
      if (is(0, 1) || is(0, 2)) return "H8";
      break;
  }
  return std::nullopt;
}

namespace {

// Rows annihilating the span of w inside K^d; empty span -> full identity.
std::vector<std::vector<Rat>> annihilator_rows(const std::vector<Rat>& w) {
  size_t d = w.size();
  std::vector<std::vector<Rat>> rows;
  size_t pivot = d;
  for (size_t k = 0; k < d; ++k)
    if (w[k] != 0) {
      pivot = k;
      break;
    }
  if (pivot == d) {  // w = 0: annihilator is everything
    for (size_t k = 0; k < d; ++k) {
      std::vector<Rat> r(d, Rat(0));
      r[k] = 1;
      rows.push_back(std::move(r));
    }
    return rows;
  }
  for (size_t l = 0; l < d; ++l) {
    if (l == pivot) continue;
    std::vector<Rat> r(d, Rat(0));
    r[l] = 1;
    r[pivot] = -w[l] / w[pivot];
    rows.push_back(std::move(r));
  }
  return rows;
}

long tangent_dim_at(irrep::IrrepModel& model, const RootSystem& rs, const Weight& lambda,
                    const Weight& nu) {
  size_t d = model.layer_dim(nu);
  if (d == 0) return 0;

  // conditions: for each simple alpha with nu+alpha a realized layer,
  // e_alpha v must land in the line (g.v_lambda)_{nu+alpha}
  std::vector<std::vector<Rat>> rows;
  for (int i = 0; i < rs.rank(); ++i) {
    Weight up = nu + rs.simple_root_weight(i);
    size_t du = model.layer_dim(up);
    if (du == 0) continue;  // e_i is the zero map out of this layer
    if (up == lambda) continue;  // (g.v_lambda)_lambda = C v_lambda: whole layer
    Weight diff = lambda - up;   // candidate beta with lambda - beta = nu + alpha_i
    auto rc = rs.weight_to_root_coords(diff);
    std::vector<long> beta(rs.rank());
    bool is_root = true;
    for (int k = 0; k < rs.rank(); ++k) {
      if (!is_integer(rc[k])) { is_root = false; break; }
      beta[k] = to_long(rc[k]);
    }
    is_root = is_root && rs.is_positive_root(beta);
    std::vector<Rat> w(du, Rat(0));
    if (is_root) w = model.root_lowering_of_highest(Root(beta));
    auto ann = annihilator_rows(w);
    const Matrix<Rat>& E = model.raising_action(i, nu);
    for (auto& a : ann) {
      std::vector<Rat> row(d, Rat(0));
      for (size_t c = 0; c < d; ++c)
        for (size_t r = 0; r < du; ++r)
          if (a[r] != 0 && E[r][c] != 0) row[c] += a[r] * E[r][c];
      rows.push_back(std::move(row));
    }
  }

  long numerator_dim;
  if (rows.empty()) {
    numerator_dim = static_cast<long>(d);
  } else {
    Matrix<Rat> m(rows.size(), d);
    for (size_t r = 0; r < rows.size(); ++r) m[r] = rows[r];
    numerator_dim = static_cast<long>(d - rank(m));
  }

  // (g.v_lambda)_nu = C f_{lambda - nu} v_lambda when lambda - nu is a root
  long m_dim = 0;
  Weight diff = lambda - nu;
  auto rc = rs.weight_to_root_coords(diff);
  std::vector<long> beta(rs.rank());
  bool is_root = true;
  for (int k = 0; k < rs.rank(); ++k) {
    if (!is_integer(rc[k])) { is_root = false; break; }
    beta[k] = to_long(rc[k]);
  }
  if (is_root && rs.is_positive_root(beta)) {
    auto w = model.root_lowering_of_highest(Root(beta));
    for (auto& x : w)
      if (x != 0) { m_dim = 1; break; }
  }
  long result = numerator_dim - m_dim;
  if (result < 0) throw std::logic_error("tangent component: orbit line escaped numerator");
  return result;
}

}  // namespace

std::pair<long, long> tangent_component_dims(const RootSystem& rs, const Weight& lambda) {
  if (!lambda.is_dominant() || lambda.is_zero())
    throw std::invalid_argument("tangent components: lambda must be dominant nonzero");
  Weight zero = Weight::zero(rs.rank());
  Weight neg = -lambda;
  irrep::IrrepModel model(rs, lambda, {zero, neg});
  long d0 = model.realized(zero) ? tangent_dim_at(model, rs, lambda, zero) : 0;
  long dm = model.realized(neg) ? tangent_dim_at(model, rs, lambda, neg) : 0;
  return {d0, dm};
}

long tangent_component_dim(const RootSystem& rs, const Weight& lambda, TangentPart part) {
  if (!lambda.is_dominant() || lambda.is_zero())
    throw std::invalid_argument("tangent_component_dim: lambda must be dominant nonzero");
  Weight nu = part == TangentPart::Zero ? Weight::zero(rs.rank()) : -lambda;
  irrep::IrrepModel model(rs, lambda, {nu});
  if (!model.realized(nu)) return 0;  // nu is not a weight of V(lambda)
  return tangent_dim_at(model, rs, lambda, nu);
}

long adjoint_tangent_dim(const RootSystem& rs) {
  if (!rs.type().is_simple())
    throw std::invalid_argument("adjoint_tangent_dim: simple types only");
  if (rs.type().factors[0] == std::pair{Family::A, 1})
    throw std::invalid_argument("adjoint_tangent_dim: A1 is handled by the generic path");
  Root theta = rs.highest_root();
  long count = 0;
  for (int i = 0; i < rs.rank(); ++i) {
    std::vector<long> diff = theta.coords;
    diff[i] -= 1;
    bool nonneg = std::all_of(diff.begin(), diff.end(), [](long c) { return c >= 0; });
    if (nonneg && rs.is_positive_root(diff)) ++count;
  }
  return count - 1;
}

std::vector<CartanType> canonical_types(int max_rank) {
  std::vector<CartanType> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back(CartanType::simple(Family::A, n));
  for (int n = 2; n <= max_rank; ++n) out.push_back(CartanType::simple(Family::B, n));
  for (int n = 3; n <= max_rank; ++n) out.push_back(CartanType::simple(Family::C, n));
  for (int n = 4; n <= max_rank; ++n) out.push_back(CartanType::simple(Family::D, n));
  for (int n = 6; n <= std::min(max_rank, 8); ++n)
    out.push_back(CartanType::simple(Family::E, n));
  if (max_rank >= 4) out.push_back(CartanType::simple(Family::F, 4));
  if (max_rank >= 2) out.push_back(CartanType::simple(Family::G, 2));
  if (max_rank >= 2) out.push_back(CartanType::parse("A1xA1"));
  return out;
}

std::vector<ClassifiedCase> classify(int max_rank) {
  std::vector<CandidateCase> all;
  for (auto& ct : canonical_types(max_rank))
    for (auto& c : enumerate_candidates(ct)) all.push_back(c);

  auto run_one = [](const CandidateCase& cand) {
    RootSystem rs(cand.cartan_type);
    TangentReport rep;
    bool adjoint = is_adjoint_weight(rs, cand.lambda);
    bool a1 = cand.cartan_type.is_simple() &&
              cand.cartan_type.factors[0] == std::pair{Family::A, 1};
    if (adjoint && !a1 && rs.rank() >= 7) {
      rep.dim_zero_part = adjoint_tangent_dim(rs);
      rep.dim_minus_lambda_part = 0;
    } else {
      auto [d0, dm] = tangent_component_dims(rs, cand.lambda);
      rep.dim_zero_part = d0;
      rep.dim_minus_lambda_part = dm;
      if (adjoint && !a1) {
        if (adjoint_tangent_dim(rs) != d0 + dm)
          throw std::logic_error("adjoint closed formula disagrees with generic path for " +
                                 cand.cartan_type.str());
      }
    }
    rep.total = rep.dim_zero_part + rep.dim_minus_lambda_part;
    if (rep.total > 1)
      throw std::logic_error("tangent dimension exceeds 1 at " + cand.cartan_type.str() +
                             " lambda=" + cand.lambda.str());
    rep.affine_line = rep.total == 1;
    if (auto h = hilb_h_label(cand.cartan_type, cand.lambda)) rep.h_label = *h;
    return rep;
  };

  std::vector<std::future<TangentReport>> jobs;
  jobs.reserve(all.size());
  for (auto& cand : all)
    jobs.push_back(std::async(std::launch::async, run_one, std::cref(cand)));
  std::vector<ClassifiedCase> out;
  out.reserve(all.size());
  for (size_t k = 0; k < all.size(); ++k)
    out.push_back({all[k], jobs[k].get()});
  return out;
}

}  // namespace primcone::hilbclass
