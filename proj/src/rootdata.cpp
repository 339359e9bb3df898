#include "primcone/rootdata.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace primcone::rootdata {

CartanType CartanType::simple(Family f, int rank) {
  CartanType ct;
  ct.factors.push_back({f, rank});
  switch (f) {
    case Family::A:
      if (rank < 1) throw std::invalid_argument("A requires rank >= 1");
      break;
    case Family::B:
      if (rank < 2) throw std::invalid_argument("B requires rank >= 2");
      break;
    case Family::C:
      if (rank < 2) throw std::invalid_argument("C requires rank >= 2");
      break;
    case Family::D:
      if (rank < 3) throw std::invalid_argument("D requires rank >= 3");
      break;
    case Family::E:
      if (rank < 6 || rank > 8) throw std::invalid_argument("E requires rank in {6,7,8}");
      break;
    case Family::F:
      if (rank != 4) throw std::invalid_argument("F requires rank 4");
      break;
    case Family::G:
      if (rank != 2) throw std::invalid_argument("G requires rank 2");
      break;
  }
  return ct;
}

CartanType CartanType::parse(const std::string& s) {
  CartanType ct;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find('x', pos);
    std::string tok = s.substr(pos, next == std::string::npos ? next : next - pos);
    if (tok.size() < 2) throw std::invalid_argument("bad Cartan type token: '" + tok + "'");
    char fam = static_cast<char>(std::toupper(tok[0]));
    if (std::string("ABCDEFG").find(fam) == std::string::npos)
      throw std::invalid_argument("bad family letter: '" + tok + "'");
    int rank = 0;
    for (size_t i = 1; i < tok.size(); ++i) {
      if (!std::isdigit(tok[i])) throw std::invalid_argument("bad rank in: '" + tok + "'");
      rank = rank * 10 + (tok[i] - '0');
    }
    CartanType f = CartanType::simple(static_cast<Family>(fam), rank);
    ct.factors.push_back(f.factors[0]);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (ct.factors.empty()) throw std::invalid_argument("empty Cartan type");
  return ct;
}

int CartanType::total_rank() const {
  int r = 0;
  for (auto& [f, n] : factors) r += n;
  return r;
}

std::string CartanType::str() const {
  std::string out;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "x";
    out += static_cast<char>(factors[i].first);
    out += std::to_string(factors[i].second);
  }
  return out;
}

CartanType CartanType::normalized() const {
  CartanType ct = *this;
  for (auto& [f, n] : ct.factors)
    if (f == Family::C && n == 2) f = Family::B;
  return ct;
}

bool Weight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](long c) { return c == 0; });
}

bool Weight::is_dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](long c) { return c >= 0; });
}

Weight Weight::operator+(const Weight& o) const {
  Weight w = *this;
  for (size_t i = 0; i < coords.size(); ++i) w.coords[i] += o.coords[i];
  return w;
}

Weight Weight::operator-(const Weight& o) const {
  Weight w = *this;
  for (size_t i = 0; i < coords.size(); ++i) w.coords[i] -= o.coords[i];
  return w;
}

Weight Weight::operator-() const {
  Weight w = *this;
  for (auto& c : w.coords) c = -c;
  return w;
}

Weight Weight::operator*(long k) const {
  Weight w = *this;
  for (auto& c : w.coords) c *= k;
  return w;
}

std::string Weight::str() const {
  std::string out;
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coords[i]);
  }
  return out;
}

Weight Weight::parse(const std::string& s) {
  std::vector<long> c;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("bad weight string: '" + s + "'");
    c.push_back(std::stol(tok));
  }
  if (c.empty()) throw std::invalid_argument("empty weight string");
  return Weight(c);
}

long Root::height() const {
  long h = 0;
  for (long c : coords) h += c;
  return h * sign;
}

bool Root::operator<(const Root& o) const {
  long h1 = 0, h2 = 0;
  for (long c : coords) h1 += c;
  for (long c : o.coords) h2 += c;
  if (h1 != h2) return h1 < h2;
  return coords < o.coords;
}

std::string Root::str() const {
  std::string out = sign < 0 ? "-(" : "";
  bool first = true;
  for (size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    if (!first) out += "+";
    if (coords[i] != 1) out += std::to_string(coords[i]);
    out += "a" + std::to_string(i + 1);
    first = false;
  }
  if (first) out += "0";
  if (sign < 0) out += ")";
  return out;
}

namespace {

// Fills the Cartan matrix block of one simple factor at offset `off`,
// and the squared lengths of its simple roots. Bourbaki numbering.
void fill_factor(Family fam, int n, int off, std::vector<std::vector<long>>& c,
                 std::vector<Rat>& norm2) {
  auto link = [&](int i, int j, long cij, long cji) {
    // c[i][j] = <alpha_j, alpha_i^vee>
    c[off + i][off + j] = cij;
    c[off + j][off + i] = cji;
  };
  for (int i = 0; i < n; ++i) norm2[off + i] = 2;
  switch (fam) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
      // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
      c[off + n - 1][off + n - 2] = -2;
      norm2[off + n - 1] = 1;
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
      // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
      c[off + n - 2][off + n - 1] = -2;
      norm2[off + n - 1] = 4;
      break;
    case Family::D:
      // chain 1..n-1, fork: alpha_n attached to alpha_{n-2}
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 3, n - 1, -1, -1);
      break;
    case Family::E:
      // chain 1-3-4-5-6(-7-8), node 2 attached to 4
      link(0, 2, -1, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1, -1);
      link(1, 3, -1, -1);
      break;
    case Family::F:
      // 1-2=3-4 with alpha_1, alpha_2 long
      link(0, 1, -1, -1);
      link(2, 3, -1, -1);
      c[off + 1][off + 2] = -1;
      c[off + 2][off + 1] = -2;
      norm2[off + 2] = 1;
      norm2[off + 3] = 1;
      break;
    case Family::G:
      // alpha_1 short, alpha_2 long
      c[off + 0][off + 1] = -3;
      c[off + 1][off + 0] = -1;
      norm2[off + 1] = 6;
      break;
  }
}

}  // namespace

RootSystem::RootSystem(const CartanType& ct) : type_(ct), rank_(ct.total_rank()) {
  int off = 0;
  for (auto& [f, n] : ct.factors) {
    // re-validate rank restrictions
    CartanType::simple(f, n);
    factors_.push_back({off, off + n});
    off += n;
  }
  build_cartan();
  generate_positive_roots();
  rho_ = Weight(std::vector<long>(rank_, 1));
}

void RootSystem::build_cartan() {
  cartan_.assign(rank_, std::vector<long>(rank_, 0));
  simple_norm2_.assign(rank_, Rat(2));
  for (int i = 0; i < rank_; ++i) cartan_[i][i] = 2;
  for (size_t k = 0; k < type_.factors.size(); ++k) {
    auto [f, n] = type_.factors[k];
    fill_factor(f, n, factors_[k].first, cartan_, simple_norm2_);
  }
  Matrix<Rat> m(rank_, rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) m[i][j] = cartan_[i][j];
  inv_cartan_ = inverse(m);
}

Weight RootSystem::simple_root_weight(int i) const {
  std::vector<long> w(rank_);
  for (int k = 0; k < rank_; ++k) w[k] = cartan_[k][i];
  return Weight(w);
}

Weight RootSystem::root_to_weight(const Root& r) const {
  std::vector<long> w(rank_, 0);
  for (int k = 0; k < rank_; ++k)
    for (int j = 0; j < rank_; ++j) w[k] += cartan_[k][j] * r.coords[j] * r.sign;
  return Weight(w);
}

std::vector<Rat> RootSystem::weight_to_root_coords(const Weight& w) const {
  std::vector<Rat> r(rank_, Rat(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) r[i] += inv_cartan_[i][j] * Rat(w.coords[j]);
  return r;
}

void RootSystem::generate_positive_roots() {
  // closure of the simple roots under simple reflections, keeping the
  // positive ones; deterministic order: height-graded, then lex
  std::set<std::vector<long>> seen;
  std::vector<std::vector<long>> queue;
  for (int i = 0; i < rank_; ++i) {
    std::vector<long> e(rank_, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    std::vector<long> r = queue.back();
    queue.pop_back();
    for (int i = 0; i < rank_; ++i) {
      long pair = 0;  // <r, alpha_i^vee> in root coordinates
      for (int j = 0; j < rank_; ++j) pair += cartan_[i][j] * r[j];
      std::vector<long> s = r;
      s[i] -= pair;
      bool nonneg = std::all_of(s.begin(), s.end(), [](long c) { return c >= 0; });
      if (nonneg && !seen.count(s)) {
        seen.insert(s);
        queue.push_back(s);
      }
    }
  }
  for (auto& c : seen) positive_.push_back(Root(c));
  std::sort(positive_.begin(), positive_.end());
  coroot_table_.reserve(positive_.size());
  for (auto& r : positive_) coroot_table_.push_back(compute_coroot(r));
}

std::vector<long> RootSystem::compute_coroot(const Root& r) const {
  Rat n2 = norm2_of_root(r);
  std::vector<long> cv(rank_);
  for (int i = 0; i < rank_; ++i) {
    Rat c = Rat(r.coords[i]) * simple_norm2_[i] / n2;
    if (!is_integer(c)) throw std::logic_error("coroot coordinates must be integral");
    cv[i] = to_long(c) * r.sign;
  }
  return cv;
}

bool RootSystem::is_positive_root(const std::vector<long>& coords) const {
  return std::binary_search(positive_.begin(), positive_.end(), Root(coords));
}

Root RootSystem::highest_root() const {
  if (!type_.is_simple()) throw std::invalid_argument("highest_root: simple types only");
  return positive_.back();
}

Rat RootSystem::norm2_of_root(const Root& r) const {
  // (r,r) from the Gram matrix (alpha_i, alpha_j) = cartan[i][j]*|alpha_i|^2/2
  Rat n(0);
  for (int i = 0; i < rank_; ++i) {
    if (r.coords[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) {
      if (r.coords[j] == 0) continue;
      n += Rat(r.coords[i]) * Rat(r.coords[j]) * Rat(cartan_[i][j]) * simple_norm2_[i] / 2;
    }
  }
  return n;
}

std::vector<long> RootSystem::coroot_coords(const Root& r) const {
  if (r.sign > 0) {
    auto it = std::lower_bound(positive_.begin(), positive_.end(), r);
    if (it != positive_.end() && it->coords == r.coords)
      return coroot_table_[static_cast<size_t>(it - positive_.begin())];
  }
  return compute_coroot(r);
}

long RootSystem::pairing(const Weight& mu, const Root& alpha) const {
  if (mu.rank() != static_cast<size_t>(rank_))
    throw std::invalid_argument("pairing: rank mismatch");
  auto cv = coroot_coords(alpha);
  long p = 0;
  for (int i = 0; i < rank_; ++i) p += cv[i] * mu.coords[i];
  return p;
}

Rat RootSystem::inner(const Weight& a, const Weight& b) const {
  // (a, b) = sum_j r_j(b) * a_j * |alpha_j|^2 / 2
  auto rb = weight_to_root_coords(b);
  Rat s(0);
  for (int j = 0; j < rank_; ++j) s += rb[j] * Rat(a.coords[j]) * simple_norm2_[j] / 2;
  return s;
}

Weight RootSystem::reflect_simple(const Weight& mu, int i) const {
  Weight w = mu;
  long p = mu.coords[i];
  for (int k = 0; k < rank_; ++k) w.coords[k] -= p * cartan_[k][i];
  return w;
}

Weight RootSystem::apply(const WeylElement& w, const Weight& mu) const {
  Weight v = mu;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) v = reflect_simple(v, *it);
  return v;
}

Weight RootSystem::dot_action(const WeylElement& w, const Weight& mu) const {
  return apply(w, mu + rho_) - rho_;
}

std::pair<long, Weight> RootSystem::to_dominant(const Weight& mu) const {
  Weight v = mu;
  long len = 0;
  while (true) {
    int neg = -1;
    for (int i = 0; i < rank_; ++i)
      if (v.coords[i] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) return {len, v};
    v = reflect_simple(v, neg);
    ++len;
  }
}

StraightenResult RootSystem::to_dominant_dot(const Weight& mu) const {
  Weight v = mu + rho_;
  long len = 0;
  while (true) {
    int neg = -1;
    for (int i = 0; i < rank_; ++i) {
      if (v.coords[i] == 0) return {.singular = true};
      if (v.coords[i] < 0 && neg < 0) neg = i;
    }
    if (neg < 0) {
      StraightenResult r;
      r.length = len;
      r.dominant = v - rho_;
      return r;
    }
    v = reflect_simple(v, neg);
    ++len;
  }
}

bool RootSystem::dot_singular_by_pairings(const Weight& mu) const {
  Weight v = mu + rho_;
  for (auto& a : positive_)
    if (pairing(v, a) == 0) return true;
  return false;
}

Weight RootSystem::dual_highest_weight(const Weight& lambda) const {
  if (!lambda.is_dominant())
    throw std::invalid_argument("dual_highest_weight: non-dominant input");
  return to_dominant(-lambda).second;
}

bool RootSystem::dominance_leq(const Weight& mu, const Weight& lambda) const {
  auto rc = weight_to_root_coords(lambda - mu);
  for (auto& c : rc)
    if (!is_integer(c) || c < 0) return false;
  return true;
}

std::string RootSystem::Decomposition::str(const RootSystem& rs) const {
  std::string a = "a" + std::to_string(simple_index + 1);
  if (halfsum) return "1/2[" + a + " + (" + beta.str() + ")]";
  return a + " + (" + beta.str() + ")";
}

std::vector<RootSystem::Decomposition> RootSystem::decompose_as_root_sums(
    const Weight& lambda) const {
  if (!lambda.is_dominant())
    throw std::invalid_argument("decompose_as_root_sums: non-dominant input");
  std::vector<Decomposition> out;
  for (int pass = 0; pass < 2; ++pass) {
    bool half = pass == 1;
    Weight target = half ? lambda * 2 : lambda;
    for (int i = 0; i < rank_; ++i) {
      Weight ai = simple_root_weight(i);
      for (auto& beta : positive_) {
        if (root_to_weight(beta) + ai == target)
          out.push_back({i, beta, half});
      }
    }
  }
  return out;
}

namespace {

Int factorial(long n) {
  Int f = 1;
  for (long k = 2; k <= n; ++k) f *= k;
  return f;
}

Int pow2(long n) {
  Int p = 1;
  for (long k = 0; k < n; ++k) p *= 2;
  return p;
}

// Weyl group order of one connected diagram component, identified by its
// size, edge multiplicities and arm structure.
Int component_weyl_order(const RootSystem& rs, const std::vector<int>& nodes) {
  long n = static_cast<long>(nodes.size());
  if (n == 1) return 2;
  long max_mult = 1;
  std::vector<int> degree(n, 0);
  int double_a = -1, double_b = -1;
  for (long a = 0; a < n; ++a)
    for (long b = a + 1; b < n; ++b) {
      long m = rs.cartan(nodes[a], nodes[b]) * rs.cartan(nodes[b], nodes[a]);
      if (m == 0) continue;
      ++degree[a];
      ++degree[b];
      max_mult = std::max(max_mult, m);
      if (m == 2) { double_a = (int)a; double_b = (int)b; }
    }
  if (max_mult == 3) return 12;  // G2
  int branch = -1;
  for (long a = 0; a < n; ++a)
    if (degree[a] >= 3) branch = (int)a;
  if (branch >= 0) {
    // arm lengths from the branch node distinguish D from E
    std::vector<long> arms;
    for (long a = 0; a < n; ++a) {
      if (a == branch || rs.cartan(nodes[a], nodes[branch]) == 0) continue;
      long len = 1;
      long prev = branch, cur = a;
      while (true) {
        long next = -1;
        for (long b = 0; b < n; ++b) {
          if (b == prev || b == cur) continue;
          if (rs.cartan(nodes[(size_t)cur], nodes[(size_t)b]) != 0) next = b;
        }
        if (next < 0) break;
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms.size() == 3 && arms[0] == 1 && arms[1] == 2 && arms[2] >= 2) {
      if (arms[2] == 2) return 51840;      // E6
      if (arms[2] == 3) return 2903040;    // E7
      if (arms[2] == 4) return 696729600;  // E8
    }
    return pow2(n - 1) * factorial(n);  // D_n
  }
  if (max_mult == 2) {
    if (n == 2) return 8;  // B2
    bool at_end = degree[double_a] == 1 || degree[double_b] == 1;
    if (!at_end) return 1152;  // F4
    return pow2(n) * factorial(n);
  }
  return factorial(n + 1);  // A_n
}

}  // namespace

Int weyl_order(const RootSystem& rs) {
  std::vector<int> all(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) all[i] = i;
  return weyl_suborder(rs, all);
}

Int weyl_suborder(const RootSystem& rs, const std::vector<int>& nodes) {
  // split into connected components
  std::vector<int> comp(nodes.size(), -1);
  Int order = 1;
  for (size_t s = 0; s < nodes.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{(int)s}, members;
    comp[s] = (int)s;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      members.push_back(nodes[a]);
      for (size_t b = 0; b < nodes.size(); ++b) {
        if (comp[b] >= 0 || rs.cartan(nodes[a], nodes[b]) == 0) continue;
        comp[b] = (int)s;
        stack.push_back((int)b);
      }
    }
    order *= component_weyl_order(rs, members);
  }
  return order;
}

Int dominant_orbit_size(const RootSystem& rs, const Weight& mu) {
  if (!mu.is_dominant()) throw std::invalid_argument("dominant_orbit_size: non-dominant");
  std::vector<int> stab;
  for (int i = 0; i < rs.rank(); ++i)
    if (mu.coords[i] == 0) stab.push_back(i);
  Int full = weyl_order(rs);
  Int sub = weyl_suborder(rs, stab);
  Int q = full / sub;
  if (q * sub != full) throw std::logic_error("orbit size: non-integral index");
  return q;
}

long classical_positive_root_count(Family f, int rank) {
  long n = rank;
  switch (f) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E:
      if (n == 6) return 36;
      if (n == 7) return 63;
      return 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return -1;
}

}  // namespace primcone::rootdata
