#include "primcone/irrep.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace primcone::irrep {

namespace {

// (w, beta) for a weight w and root beta: sum_i c_i(beta) w_i |alpha_i|^2 / 2
Rat inner_weight_root(const RootSystem& rs, const Weight& w, const Root& beta) {
  Rat s(0);
  for (int i = 0; i < rs.rank(); ++i) {
    if (beta.coords[i] == 0) continue;
    s += Rat(beta.coords[i]) * Rat(w.coords[i]) * rs.root_norm2(i) / 2;
  }
  return s * beta.sign;
}

}  // namespace

Int weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  if (!lambda.is_dominant()) throw std::invalid_argument("weyl_dimension: non-dominant weight");
  Weight lr = lambda + rs.rho();
  Rat prod(1);
  for (auto& a : rs.positive_roots())
    prod *= Rat(rs.pairing(lr, a)) / Rat(rs.pairing(rs.rho(), a));
  if (!is_integer(prod)) throw std::logic_error("weyl_dimension: non-integral result");
  return to_int(prod);
}

Freudenthal::Freudenthal(const RootSystem& rs, Weight lambda)
    : rs_(rs), lambda_(std::move(lambda)) {
  if (!lambda_.is_dominant()) throw std::invalid_argument("Freudenthal: non-dominant weight");
  Weight lr = lambda_ + rs_.rho();
  top_norm_ = rs_.inner(lr, lr);
}

Int Freudenthal::mult(const Weight& mu) {
  return dominant_mult(rs_.to_dominant(mu).second);
}

bool Freudenthal::is_weight(const Weight& mu) { return mult(mu) > 0; }

Int Freudenthal::dominant_mult(const Weight& mu) {
  if (!rs_.dominance_leq(mu, lambda_)) return 0;  // a dominant mu <= lambda is a weight
  if (mu == lambda_) return 1;
  auto it = cache_.find(mu);
  if (it != cache_.end()) return it->second;

  Rat num(0);
  for (auto& alpha : rs_.positive_roots()) {
    Weight aw = rs_.root_to_weight(alpha);
    Weight v = mu;
    for (long k = 1;; ++k) {
      v = v + aw;
      if (!rs_.dominance_leq(rs_.to_dominant(v).second, lambda_)) break;
      Int m = dominant_mult(rs_.to_dominant(v).second);
      if (m != 0) num += Rat(m) * inner_weight_root(rs_, v, alpha);
    }
  }
  Weight mr = mu + rs_.rho();
  Rat den = top_norm_ - rs_.inner(mr, mr);
  if (den == 0) throw std::logic_error("Freudenthal: vanishing denominator");
  Rat m = 2 * num / den;
  if (!is_integer(m)) throw std::logic_error("Freudenthal: non-integral multiplicity");
  Int res = to_int(m);
  cache_[mu] = res;
  return res;
}

Int freudenthal_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  Freudenthal f(rs, lambda);
  return f.mult(mu);
}

WeightMultiplicityTable full_multiplicity_table(const RootSystem& rs, const Weight& lambda) {
  Freudenthal f(rs, lambda);
  WeightMultiplicityTable table;
  table.lambda = lambda;
  // all weights: downward closure from lambda by simple root steps
  std::set<Weight> seen{lambda};
  std::deque<Weight> queue{lambda};
  while (!queue.empty()) {
    Weight w = queue.front();
    queue.pop_front();
    table.entries[w] = f.mult(w);
    for (int i = 0; i < rs.rank(); ++i) {
      Weight v = w - rs.simple_root_weight(i);
      if (seen.count(v)) continue;
      if (f.mult(v) == 0) continue;
      seen.insert(v);
      queue.push_back(v);
    }
  }
  return table;
}

IrrepModel::IrrepModel(const RootSystem& rs, Weight lambda, const std::set<Weight>& targets,
                       long height_limit)
    : rs_(rs), lambda_(std::move(lambda)), freud_(rs, lambda_) {
  if (!lambda_.is_dominant()) throw std::invalid_argument("IrrepModel: non-dominant weight");
  realize(targets, height_limit);
}

const IrrepModel::Layer& IrrepModel::layer(const Weight& mu) const {
  auto it = layers_.find(mu);
  if (it == layers_.end())
    throw std::invalid_argument("layer not realized: " + mu.str());
  return it->second;
}

size_t IrrepModel::layer_dim(const Weight& mu) const {
  auto it = layers_.find(mu);
  return it == layers_.end() ? 0 : it->second.dim();
}

const Matrix<Rat>& IrrepModel::raising_action(int i, const Weight& mu) const {
  return layer(mu).e_out[i];
}

const Matrix<Rat>& IrrepModel::lowering_action(int i, const Weight& mu) const {
  return layer(mu).f_in[i];
}

void IrrepModel::realize(const std::set<Weight>& targets, long height_limit) {
  // needed layers: weights of V(lambda) lying over some target in the
  // root-lattice order, collected by downward walk from lambda (every weight
  // below lambda is reachable by single simple-root steps through weights)
  auto above_some_target = [&](const Weight& w) {
    for (auto& t : targets) {
      auto rc = rs_.weight_to_root_coords(w - t);
      bool ok = true;
      for (auto& c : rc)
        if (!is_integer(c) || c < 0) { ok = false; break; }
      if (ok) return true;
    }
    return false;
  };
  for (auto& t : targets) {
    auto rc = rs_.weight_to_root_coords(lambda_ - t);
    Rat h(0);
    bool lattice = true;
    for (auto& c : rc) {
      if (!is_integer(c)) lattice = false;
      h += c;
    }
    if (!lattice) continue;  // not a weight; nothing to realize for it
    if (h > height_limit)
      throw std::domain_error("realize_layers: height limit exceeded at weight " + t.str());
  }
  if (!above_some_target(lambda_)) return;

  std::set<Weight> needed{lambda_};
  std::deque<Weight> queue{lambda_};
  while (!queue.empty()) {
    Weight w = queue.front();
    queue.pop_front();
    for (int i = 0; i < rs_.rank(); ++i) {
      Weight v = w - rs_.simple_root_weight(i);
      if (needed.count(v)) continue;
      if (!above_some_target(v)) continue;
      if (freud_.mult(v) == 0) continue;
      needed.insert(v);
      queue.push_back(v);
    }
  }

  // process by increasing depth (height of lambda - mu)
  std::vector<std::pair<long, Weight>> order;
  for (auto& w : needed) {
    auto rc = rs_.weight_to_root_coords(lambda_ - w);
    Rat h(0);
    for (auto& c : rc) h += c;
    order.push_back({to_long(h), w});
  }
  std::sort(order.begin(), order.end());
  for (auto& [depth, w] : order) {
    if (depth == 0) {
      Layer top;
      top.mu = lambda_;
      top.basis_words.push_back({});
      top.gram = Matrix<Rat>(1, 1);
      top.gram[0][0] = 1;
      top.e_out.assign(rs_.rank(), Matrix<Rat>());
      top.f_in.assign(rs_.rank(), Matrix<Rat>());
      for (int i = 0; i < rs_.rank(); ++i) {
        top.e_out[i] = Matrix<Rat>(0, 1);
        top.f_in[i] = Matrix<Rat>(1, 0);
      }
      layers_[lambda_] = std::move(top);
    } else {
      build_layer(w);
    }
  }
}

void IrrepModel::build_layer(const Weight& nu) {
  long target_dim = static_cast<long>(freud_.mult(nu));
  Layer lay;
  lay.mu = nu;

  // candidate vectors f_i . b over realized parent layers
  struct Cand {
    int i;
    int b;
    std::vector<int> word;
  };
  std::vector<Cand> cands;
  std::vector<const Layer*> parent(rs_.rank(), nullptr);
  for (int i = 0; i < rs_.rank(); ++i) {
    Weight up = nu + rs_.simple_root_weight(i);
    auto it = layers_.find(up);
    if (it == layers_.end()) continue;
    parent[i] = &it->second;
    for (size_t b = 0; b < it->second.dim(); ++b) {
      std::vector<int> w{i};
      auto& pw = it->second.basis_words[b];
      w.insert(w.end(), pw.begin(), pw.end());
      cands.push_back({i, static_cast<int>(b), std::move(w)});
    }
  }

  // pairing of candidates: <f_i b, f_j b'> = <b, e_i f_j b'> with
  // e_i f_j b' = f_j(e_i b') + [i==j] <nu+alpha_i, alpha_i^vee> b'
  size_t nc = cands.size();
  Matrix<Rat> G(nc, nc);
  for (size_t c2 = 0; c2 < nc; ++c2) {
    int j = cands[c2].i, b2 = cands[c2].b;
    Weight upj = nu + rs_.simple_root_weight(j);
    for (int i = 0; i < rs_.rank(); ++i) {
      if (!parent[i]) continue;
      Weight upi = nu + rs_.simple_root_weight(i);
      // e_i f_j b2 expressed in layer(upi)
      const Matrix<Rat>& Ei = parent[j]->e_out[i];  // layer(upj) -> layer(upj+alpha_i)
      std::vector<Rat> vec(parent[i]->dim(), Rat(0));
      if (Ei.rows > 0) {
        std::vector<Rat> eb(Ei.rows, Rat(0));
        for (size_t r = 0; r < Ei.rows; ++r) eb[r] = Ei[r][b2];
        const Matrix<Rat>& Fj = parent[i]->f_in[j];  // layer(upi+alpha_j) -> layer(upi)
        // upj + alpha_i == upi + alpha_j
        if (Fj.cols == Ei.rows) vec = Fj.apply(eb);
      }
      if (i == j) vec[b2] += Rat(upi.coords[i]);
      // row of gram(upi) at each basis b1 dotted with vec
      for (size_t c1 = 0; c1 < nc; ++c1) {
        if (cands[c1].i != i) continue;
        Rat s(0);
        for (size_t k = 0; k < vec.size(); ++k) {
          if (vec[k] == 0) continue;
          s += parent[i]->gram[cands[c1].b][k] * vec[k];
        }
        G[c1][c2] = s;
      }
    }
  }

  // greedy basis selection by Gram rank
  std::vector<size_t> sel;
  for (size_t c = 0; c < nc && static_cast<long>(sel.size()) < target_dim; ++c) {
    std::vector<size_t> trial = sel;
    trial.push_back(c);
    Matrix<Rat> sub(trial.size(), trial.size());
    for (size_t a = 0; a < trial.size(); ++a)
      for (size_t b = 0; b < trial.size(); ++b) sub[a][b] = G[trial[a]][trial[b]];
    if (rank(sub) == trial.size()) sel = trial;
  }
  if (static_cast<long>(sel.size()) != target_dim)
    throw std::logic_error("layer dimension does not match Freudenthal multiplicity at " +
                           nu.str());

  lay.gram = Matrix<Rat>(sel.size(), sel.size());
  for (size_t a = 0; a < sel.size(); ++a) {
    lay.basis_words.push_back(cands[sel[a]].word);
    for (size_t b = 0; b < sel.size(); ++b) lay.gram[a][b] = G[sel[a]][sel[b]];
  }

  // f_in: coordinates of every candidate f_i b in the chosen basis
  lay.f_in.assign(rs_.rank(), Matrix<Rat>());
  for (int i = 0; i < rs_.rank(); ++i) {
    size_t up_dim = parent[i] ? parent[i]->dim() : 0;
    lay.f_in[i] = Matrix<Rat>(sel.size(), up_dim);
    if (!parent[i]) continue;
    for (size_t c = 0; c < nc; ++c) {
      if (cands[c].i != i) continue;
      std::vector<Rat> rhs(sel.size());
      for (size_t a = 0; a < sel.size(); ++a) rhs[a] = G[sel[a]][c];
      auto x = solve(lay.gram, rhs);
      for (size_t a = 0; a < sel.size(); ++a) lay.f_in[i][a][cands[c].b] = x[a];
    }
  }

  // e_out: e_j(f_i b) = f_i(e_j b) + [i==j] <nu+alpha_i, alpha_i^vee> b
  lay.e_out.assign(rs_.rank(), Matrix<Rat>());
  for (int j = 0; j < rs_.rank(); ++j) {
    size_t upj_dim = parent[j] ? parent[j]->dim() : 0;
    lay.e_out[j] = Matrix<Rat>(upj_dim, sel.size());
    if (!parent[j]) continue;
    for (size_t a = 0; a < sel.size(); ++a) {
      int i = cands[sel[a]].i, b = cands[sel[a]].b;
      Weight upi = nu + rs_.simple_root_weight(i);
      const Matrix<Rat>& Ej = parent[i]->e_out[j];  // layer(upi) -> layer(upi+alpha_j)
      std::vector<Rat> col(upj_dim, Rat(0));
      if (Ej.rows > 0) {
        std::vector<Rat> eb(Ej.rows, Rat(0));
        for (size_t r = 0; r < Ej.rows; ++r) eb[r] = Ej[r][b];
        const Matrix<Rat>& Fi = parent[j]->f_in[i];  // layer(upj+alpha_i) -> layer(upj)
        if (Fi.cols == Ej.rows) col = Fi.apply(eb);
      }
      if (i == j) col[b] += Rat(upi.coords[i]);
      for (size_t r = 0; r < upj_dim; ++r) lay.e_out[j][r][a] = col[r];
    }
  }

  layers_[nu] = std::move(lay);
}

Matrix<Rat> IrrepModel::root_lowering(const Root& beta, const Weight& src) {
  size_t sd = layer_dim(src);
  Weight dst = src - rs_.root_to_weight(beta);
  size_t dd = layer_dim(dst);
  if (sd == 0 || dd == 0) return Matrix<Rat>(dd, sd);
  if (beta.height() == 1) {
    int i = 0;
    while (beta.coords[i] == 0) ++i;
    return layer(dst).f_in[i];
  }
  auto key = std::make_pair(beta.coords, src);
  auto it = froot_memo_.find(key);
  if (it != froot_memo_.end()) return it->second;

  // fixed decomposition beta = alpha_i + gamma, smallest i with gamma positive
  int i = -1;
  Root gamma;
  for (int k = 0; k < rs_.rank(); ++k) {
    if (beta.coords[k] == 0) continue;
    std::vector<long> g = beta.coords;
    g[k] -= 1;
    if (rs_.is_positive_root(g)) {
      i = k;
      gamma = Root(g);
      break;
    }
  }
  if (i < 0) throw std::logic_error("root chain decomposition failed for " + beta.str());
  Root ai(std::vector<long>(rs_.rank(), 0));
  ai.coords[i] = 1;
  // f_beta = [f_i, f_gamma]
  Matrix<Rat> t1 = root_lowering(ai, src - rs_.root_to_weight(gamma)) * root_lowering(gamma, src);
  Matrix<Rat> t2 = root_lowering(gamma, src - rs_.root_to_weight(ai)) * root_lowering(ai, src);
  Matrix<Rat> m = t1 - t2;
  froot_memo_[key] = m;
  return m;
}

std::vector<Rat> IrrepModel::root_lowering_of_highest(const Root& beta) {
  Matrix<Rat> m = root_lowering(beta, lambda_);
  std::vector<Rat> v(m.rows, Rat(0));
  for (size_t r = 0; r < m.rows; ++r) v[r] = m.cols > 0 ? m[r][0] : Rat(0);
  return v;
}

}  // namespace primcone::irrep
