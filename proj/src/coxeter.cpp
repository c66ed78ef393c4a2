#include "dg/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <cmath>
#include <map>
#include <sstream>
#include <unordered_map>

namespace dg {

int Golden::sign() const {
  // a + b phi = (p + q sqrt5)/2 with p = 2a + b, q = b
  Q p = Q(2) * a + b, q = b;
  auto sg = [](Q x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); };
  int sp = sg(p), sq = sg(q);
  if (sp >= 0 && sq >= 0) return (sp || sq) ? 1 : 0;
  if (sp <= 0 && sq <= 0) return -1;
  Q p2 = p * p, q2 = Q(5) * q * q;  // compare |p| with |q| sqrt5
  if (sp > 0) return p2 > q2 ? 1 : -1;
  return q2 > p2 ? 1 : -1;
}

double Golden::value() const {
  double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  return boost::rational_cast<double>(a) + boost::rational_cast<double>(b) * phi;
}

namespace {

std::vector<std::vector<int>> identity_m(int n) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

CoxeterSystem CoxeterSystem::A(int n) {
  if (n < 1) throw Error(Err::BadParams, "A_n needs n >= 1");
  CoxeterSystem C;
  C.m_ = identity_m(n);
  for (int i = 0; i + 1 < n; ++i) C.m_[i][i + 1] = C.m_[i + 1][i] = 3;
  C.tag_ = "A" + std::to_string(n);
  C.family_ = 'A';
  return finish(C);
}

// m(1,2) = 4, then a chain 2-3-...-n
CoxeterSystem CoxeterSystem::B(int n) {
  if (n < 1) throw Error(Err::BadParams, "B_n needs n >= 1");
  CoxeterSystem C;
  C.m_ = identity_m(n);
  if (n >= 2) C.m_[0][1] = C.m_[1][0] = 4;
  for (int i = 1; i + 1 < n; ++i) C.m_[i][i + 1] = C.m_[i + 1][i] = 3;
  C.tag_ = "B" + std::to_string(n);
  C.family_ = 'B';
  return finish(C);
}

// 1-3, 2-3, then a chain 3-4-...-n (D2 = two commuting nodes)
CoxeterSystem CoxeterSystem::D(int n) {
  if (n < 2) throw Error(Err::BadParams, "D_n needs n >= 2");
  CoxeterSystem C;
  C.m_ = identity_m(n);
  if (n >= 3) {
    C.m_[0][2] = C.m_[2][0] = 3;
    C.m_[1][2] = C.m_[2][1] = 3;
  }
  for (int i = 2; i + 1 < n; ++i) C.m_[i][i + 1] = C.m_[i + 1][i] = 3;
  C.tag_ = "D" + std::to_string(n);
  C.family_ = 'D';
  return finish(C);
}

// E6: chain 1-3-4-5-6, node 2 on 4.  E7: chain 1-3-4-5-6-7, node 2 on 5.
CoxeterSystem CoxeterSystem::E(int n) {
  if (n != 6 && n != 7) throw Error(Err::BadParams, "E_n needs n in {6,7}");
  CoxeterSystem C;
  C.m_ = identity_m(n);
  auto edge = [&](int a, int b) { C.m_[a - 1][b - 1] = C.m_[b - 1][a - 1] = 3; };
  edge(1, 3);
  edge(3, 4);
  edge(4, 5);
  edge(5, 6);
  if (n == 6) {
    edge(2, 4);
  } else {
    edge(6, 7);
    edge(2, 5);
  }
  C.tag_ = "E" + std::to_string(n);
  C.family_ = 'E';
  return finish(C);
}

CoxeterSystem CoxeterSystem::H3() {
  CoxeterSystem C;
  C.m_ = identity_m(3);
  C.m_[0][1] = C.m_[1][0] = 5;
  C.m_[1][2] = C.m_[2][1] = 3;
  C.tag_ = "H3";
  C.family_ = 'H';
  return finish(C);
}

CoxeterSystem CoxeterSystem::I2(int m) {
  if (m < 2) throw Error(Err::BadParams, "I2(m) needs m >= 2");
  CoxeterSystem C;
  C.m_ = identity_m(2);
  C.m_[0][1] = C.m_[1][0] = m;
  C.tag_ = "I2:" + std::to_string(m);
  C.family_ = 'I';
  return finish(C);
}

// Cartan data: integral for crystallographic bonds, -phi for m = 5.
CoxeterSystem CoxeterSystem::finish(CoxeterSystem C) {
  int n = C.rank();
  C.cartan_.assign(n, std::vector<Golden>(n));
  bool ok = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int m = C.m_[i][j];
      Golden v;
      if (i == j) v = Golden(Q(2));
      else if (m == 2) v = Golden(Q(0));
      else if (m == 3) v = Golden(Q(-1));
      else if (m == 4) v = Golden(Q(i < j ? -2 : -1));
      else if (m == 6) v = Golden(Q(i < j ? -3 : -1));
      else if (m == 5) v = Golden(Q(0), Q(-1));
      else ok = false;
      C.cartan_[i][j] = v;
    }
  if (!ok) C.cartan_.clear();  // dihedral with m outside {2..6}: angle model
  return C;
}

CoxeterSystem CoxeterSystem::parse(const std::string& tag) {
  auto num = [&](size_t from) {
    if (from >= tag.size()) throw Error(Err::BadParams, "bad type tag '" + tag + "'");
    size_t pos = 0;
    int v = std::stoi(tag.substr(from), &pos);
    if (from + pos != tag.size()) throw Error(Err::BadParams, "bad type tag '" + tag + "'");
    return v;
  };
  if (tag.empty()) throw Error(Err::BadParams, "empty type tag");
  try {
    if (tag == "H3") return H3();
    if (tag.rfind("I2:", 0) == 0) return I2(num(3));
    switch (tag[0]) {
      case 'A': return A(num(1));
      case 'B':
      case 'C': return B(num(1));
      case 'D': return D(num(1));
      case 'E': return E(num(1));
    }
  } catch (const std::invalid_argument&) {
  }
  throw Error(Err::BadParams, "bad type tag '" + tag + "'");
}

void CoxeterSystem::check_word(const Word& w) const {
  for (int s : w)
    if (s < 1 || s > rank()) throw Error(Err::IndexOutOfRange, "letter " + std::to_string(s) + " in " + tag_);
}

std::uint64_t CoxeterSystem::group_order() const {
  int n = rank();
  switch (family_) {
    case 'A': return factorial(n + 1);
    case 'B': return (1ULL << n) * factorial(n);
    case 'D': return (1ULL << (n - 1)) * factorial(n);
    case 'E': return n == 6 ? 51840ULL : 2903040ULL;
    case 'H': return 120;
    case 'I': return 2ULL * m_[0][1];
  }
  return 0;
}

Poset heap_from_word(const CoxeterSystem& C, const Word& w) {
  C.check_word(w);
  std::vector<Cover> rel;
  for (int i = 0; i < (int)w.size(); ++i)
    for (int j = i + 1; j < (int)w.size(); ++j) {
      int m = C.m(w[i], w[j]);
      if (m >= 3 || m == 0) rel.push_back({i, j});
    }
  Poset P = Poset::from_covers((int)w.size(), rel);
  P.labels = w;
  return P;
}

RootSystem::RootSystem(const CoxeterSystem& C) : C_(C) {
  int n = C.rank();
  if (C.cartan_.empty()) {
    // I2(m): roots at angles k*pi/m, k = 0..2m-1; positive cone is k < m.
    int m = C.m_[0][1];
    N_ = m;
    simple_ = {0, m - 1};
    GroupElement s, t;
    s.perm.resize(2 * m);
    t.perm.resize(2 * m);
    for (int k = 0; k < 2 * m; ++k) {
      s.perm[k] = ((m - k) % (2 * m) + 2 * m) % (2 * m);
      t.perm[k] = ((3 * m - 2 - k) % (2 * m) + 2 * m) % (2 * m);
    }
    gens_ = {s, t};
    return;
  }
  auto reflect = [&](int i, const std::vector<Golden>& r) {
    Golden c;
    for (int j = 0; j < n; ++j) c = c + r[j] * C.cartan_[i][j];
    std::vector<Golden> out = r;
    out[i] = out[i] - c;
    return out;
  };
  auto is_pos = [&](const std::vector<Golden>& r) {
    bool nz = false;
    for (auto& g : r) {
      int s = g.sign();
      if (s < 0) return false;
      if (s > 0) nz = true;
    }
    return nz;
  };
  std::map<std::vector<Golden>, int> idx;
  std::vector<std::vector<Golden>> pos;
  for (int i = 0; i < n; ++i) {
    std::vector<Golden> e(n);
    e[i] = Golden(Q(1));
    idx[e] = i;
    pos.push_back(e);
  }
  for (size_t q = 0; q < pos.size(); ++q)
    for (int i = 0; i < n; ++i) {
      auto r = reflect(i, pos[q]);
      if (is_pos(r) && !idx.count(r)) {
        idx[r] = (int)pos.size();
        pos.push_back(r);
      }
    }
  N_ = (int)pos.size();
  for (int i = 0; i < n; ++i) simple_.push_back(i);
  coeffs_ = pos;
  for (int q = 0; q < N_; ++q) {
    std::vector<Golden> neg = pos[q];
    for (auto& g : neg) g = -g;
    idx[neg] = N_ + q;
    coeffs_.push_back(neg);
  }
  for (int i = 0; i < n; ++i) {
    GroupElement g;
    g.perm.resize(2 * N_);
    for (int q = 0; q < 2 * N_; ++q) {
      auto it = idx.find(reflect(i, coeffs_[q]));
      if (it == idx.end()) throw Error(Err::UnsupportedType, "root system not closed for " + C.tag());
      g.perm[q] = it->second;
    }
    gens_.push_back(g);
  }
}

GroupElement RootSystem::identity() const {
  GroupElement g;
  g.perm.resize(2 * N_);
  for (int i = 0; i < 2 * N_; ++i) g.perm[i] = i;
  return g;
}

GroupElement RootSystem::mul(const GroupElement& g, const GroupElement& h) const {
  GroupElement r;
  r.perm.resize(h.perm.size());
  for (size_t i = 0; i < h.perm.size(); ++i) r.perm[i] = g.perm[h.perm[i]];
  return r;
}

GroupElement RootSystem::inverse(const GroupElement& g) const {
  GroupElement r;
  r.perm.resize(g.perm.size());
  for (size_t i = 0; i < g.perm.size(); ++i) r.perm[g.perm[i]] = (int)i;
  return r;
}

GroupElement RootSystem::element(const Word& w) const {
  C_.check_word(w);
  GroupElement g = identity();
  for (int s : w) g = mul(g, gens_[s - 1]);
  return g;
}

GroupElement RootSystem::longest() const {
  GroupElement g = identity();
  for (bool grew = true; grew;) {
    grew = false;
    for (int s = 1; s <= C_.rank(); ++s)
      if (!right_descent(g, s)) {
        g = mul(g, gens_[s - 1]);
        grew = true;
        break;
      }
  }
  return g;
}

Word RootSystem::reduced_word(const GroupElement& g0) const {
  Word rev;
  GroupElement g = g0;
  while (length(g) > 0) {
    for (int s = 1; s <= C_.rank(); ++s)
      if (right_descent(g, s)) {
        rev.push_back(s);
        g = mul(g, gens_[s - 1]);
        break;
      }
  }
  return Word(rev.rbegin(), rev.rend());
}

int RootSystem::length(const GroupElement& g) const {
  int c = 0;
  for (int r = 0; r < N_; ++r)
    if (g.perm[r] >= N_) ++c;
  return c;
}

namespace {
struct PermHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = 1469598103934665603ULL;
    for (int x : v) h = (h ^ (size_t)x) * 1099511628211ULL;
    return h;
  }
};
}  // namespace

std::uint64_t RootSystem::red_word_count(const GroupElement& g) const {
  if (length(g) > 16 && C_.group_order() > 1000000ULL)
    throw Error(Err::FeasibilityGuard, "length " + std::to_string(length(g)) + " in " + C_.tag());
  std::unordered_map<std::vector<int>, std::uint64_t, PermHash> memo;
  std::function<std::uint64_t(const GroupElement&)> rec = [&](const GroupElement& x) -> std::uint64_t {
    if (length(x) == 0) return 1;
    auto it = memo.find(x.perm);
    if (it != memo.end()) return it->second;
    std::uint64_t c = 0;
    for (int s = 1; s <= C_.rank(); ++s)
      if (right_descent(x, s)) c += rec(mul(x, gens_[s - 1]));
    memo[x.perm] = c;
    return c;
  };
  return rec(g);
}

GroupElement RootSystem::reflection_at(const Word& w, int k) const {
  Word p(w.begin(), w.begin() + k);
  GroupElement pre = element(p);
  return mul(mul(pre, gens_[w[k] - 1]), inverse(pre));
}

int length(const CoxeterSystem& C, const Word& w) {
  RootSystem R(C);
  return R.length(R.element(w));
}

std::uint64_t red_word_count(const CoxeterSystem& C, const Word& w) {
  RootSystem R(C);
  return R.red_word_count(R.element(w));
}

std::uint64_t fc_red_word_count(const CoxeterSystem& C, const Word& w) {
  return count_linear_extensions(heap_from_word(C, w));
}

bool is_reduced(const CoxeterSystem& C, const Word& w) { return length(C, w) == (int)w.size(); }

std::vector<int> demazure_product_typeA(const Word& w, int a) {
  std::vector<int> p(a + 1);
  for (int i = 0; i <= a; ++i) p[i] = i + 1;
  for (int s : w) {
    if (s < 1 || s > a) throw Error(Err::IndexOutOfRange, "letter " + std::to_string(s));
    if (p[s - 1] < p[s]) std::swap(p[s - 1], p[s]);
  }
  return p;
}

std::vector<int> perm_product_typeA(const Word& w, int a) {
  std::vector<int> p(a + 1);
  for (int i = 0; i <= a; ++i) p[i] = i + 1;
  for (int s : w) {
    if (s < 1 || s > a) throw Error(Err::IndexOutOfRange, "letter " + std::to_string(s));
    std::swap(p[s - 1], p[s]);
  }
  return p;
}

std::string word_to_string(const Word& w) {
  std::ostringstream o;
  for (size_t i = 0; i < w.size(); ++i) o << (i ? "," : "") << w[i];
  return o.str();
}

Word parse_word(const std::string& s) {
  Word w;
  std::string tok;
  for (char c : s + ",") {
    if (c == ',' || c == ' ' || c == 's') {
      if (!tok.empty()) {
        try {
          w.push_back(std::stoi(tok));
        } catch (const std::exception&) {
          throw Error(Err::BadParams, "bad word '" + s + "'");
        }
        tok.clear();
      }
    } else if (std::isdigit((unsigned char)c)) {
      tok += c;
    } else {
      throw Error(Err::BadParams, "bad word '" + s + "'");
    }
  }
  return w;
}

}  // namespace dg
