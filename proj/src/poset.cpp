#include "dg/poset.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>

namespace dg {

const char* err_name(Err e) {
  switch (e) {
    case Err::CycleDetected: return "CycleDetected";
    case Err::IndexOutOfRange: return "IndexOutOfRange";
    case Err::ExplosionGuard: return "ExplosionGuard";
    case Err::NotUniformlyGraded: return "NotUniformlyGraded";
    case Err::UnsupportedType: return "UnsupportedType";
    case Err::FeasibilityGuard: return "FeasibilityGuard";
    case Err::BadParams: return "BadParams";
    case Err::TripleValidationFailed: return "TripleValidationFailed";
    case Err::NotMaximalCells: return "NotMaximalCells";
    case Err::NotDrawable: return "NotDrawable";
    case Err::NotMinusculeAmbient: return "NotMinusculeAmbient";
    case Err::SizeMismatch: return "SizeMismatch";
    case Err::ShapeAssertionFailed: return "ShapeAssertionFailed";
    case Err::InfusionMismatch: return "InfusionMismatch";
  }
  return "?";
}

Error::Error(Err c, const std::string& msg)
    : std::runtime_error(std::string(err_name(c)) + ": " + msg), code(c) {}

Poset Poset::from_covers(int n, const std::vector<Cover>& rel) {
  if (n < 0) throw Error(Err::IndexOutOfRange, "negative size");
  std::vector<std::vector<int>> out(n);
  std::vector<int> indeg(n, 0);
  for (auto [a, b] : rel) {
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw Error(Err::IndexOutOfRange, "pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
    if (a == b) throw Error(Err::CycleDetected, "self loop at " + std::to_string(a));
    out[a].push_back(b);
    indeg[b]++;
  }
  // Kahn; smallest index first so the order is deterministic
  std::vector<int> order;
  std::vector<int> ready;
  for (int i = n - 1; i >= 0; --i)
    if (!indeg[i]) ready.push_back(i);
  while (!ready.empty()) {
    std::sort(ready.begin(), ready.end(), std::greater<int>());
    int a = ready.back();
    ready.pop_back();
    order.push_back(a);
    for (int b : out[a])
      if (--indeg[b] == 0) ready.push_back(b);
  }
  if ((int)order.size() != n) throw Error(Err::CycleDetected, "relation has a cycle");

  Poset P;
  P.n_ = n;
  P.topo_ = order;
  P.up_.assign(n, boost::dynamic_bitset<>(n));
  P.down_.assign(n, boost::dynamic_bitset<>(n));
  for (int i = n - 1; i >= 0; --i) {
    int a = order[i];
    for (int b : out[a]) {
      P.up_[a].set(b);
      P.up_[a] |= P.up_[b];
    }
  }
  for (int a = 0; a < n; ++a)
    for (auto b = P.up_[a].find_first(); b != boost::dynamic_bitset<>::npos; b = P.up_[a].find_next(b))
      P.down_[b].set(a);
  P.upc_.assign(n, {});
  P.downc_.assign(n, {});
  for (int a = 0; a < n; ++a)
    for (auto b = P.up_[a].find_first(); b != boost::dynamic_bitset<>::npos; b = P.up_[a].find_next(b)) {
      if ((P.up_[a] & P.down_[b]).none()) {
        P.covers_.push_back({a, (int)b});
        P.upc_[a].push_back((int)b);
        P.downc_[b].push_back(a);
      }
    }
  return P;
}

Poset chain(int n) {
  std::vector<Cover> c;
  for (int i = 0; i + 1 < n; ++i) c.push_back({i, i + 1});
  return Poset::from_covers(n, c);
}

Poset antichain(int n) { return Poset::from_covers(n, {}); }

Poset dual(const Poset& P) {
  std::vector<Cover> c;
  for (auto [a, b] : P.covers()) c.push_back({b, a});
  Poset Q = Poset::from_covers(P.size(), c);
  Q.labels = P.labels;
  return Q;
}

Poset product_with_chain(const Poset& P, int l) {
  std::vector<Cover> c;
  for (int p = 0; p < P.size(); ++p)
    for (int i = 0; i + 1 < l; ++i) c.push_back({p * l + i, p * l + i + 1});
  for (auto [a, b] : P.covers())
    for (int i = 0; i < l; ++i) c.push_back({a * l + i, b * l + i});
  return Poset::from_covers(P.size() * l, c);
}

Poset disjoint_union(const Poset& P, const Poset& Q) {
  std::vector<Cover> c = P.covers();
  for (auto [a, b] : Q.covers()) c.push_back({a + P.size(), b + P.size()});
  return Poset::from_covers(P.size() + Q.size(), c);
}

Poset ordinal_sum(const Poset& P, const Poset& Q) {
  std::vector<Cover> c = P.covers();
  for (auto [a, b] : Q.covers()) c.push_back({a + P.size(), b + P.size()});
  for (int a = 0; a < P.size(); ++a)
    for (int b = 0; b < Q.size(); ++b) c.push_back({a, b + P.size()});
  return Poset::from_covers(P.size() + Q.size(), c);
}

Poset ferrers(const std::vector<Cell>& cells) {
  std::map<Cell, int> idx;
  for (int i = 0; i < (int)cells.size(); ++i) idx[cells[i]] = i;
  std::vector<Cover> c;
  for (int i = 0; i < (int)cells.size(); ++i) {
    auto [r, col] = cells[i];
    for (Cell nb : {Cell{r + 1, col}, Cell{r, col + 1}}) {
      auto it = idx.find(nb);
      if (it != idx.end()) c.push_back({i, it->second});
    }
  }
  Poset P = Poset::from_covers((int)cells.size(), c);
  P.coords = cells;
  return P;
}

Poset induced(const Poset& P, const std::vector<int>& elems) {
  int k = (int)elems.size();
  std::vector<Cover> c;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (P.lt(elems[i], elems[j])) c.push_back({i, j});
  Poset Q = Poset::from_covers(k, c);
  if (P.has_coords())
    for (int e : elems) Q.coords.push_back(P.coords[e]);
  if (P.has_labels())
    for (int e : elems) Q.labels.push_back(P.labels[e]);
  return Q;
}

std::vector<int> members(const Set& s) {
  std::vector<int> m;
  for (int i = 0; i < (int)s.size(); ++i)
    if (s[i]) m.push_back(i);
  return m;
}

Set make_set(int n, const std::vector<int>& elems) {
  Set s(n, false);
  for (int e : elems) {
    if (e < 0 || e >= n) throw Error(Err::IndexOutOfRange, "element " + std::to_string(e));
    s[e] = true;
  }
  return s;
}

int set_size(const Set& s) { return (int)std::count(s.begin(), s.end(), true); }

bool is_ideal(const Poset& P, const Set& s) {
  for (auto [a, b] : P.covers())
    if (s[b] && !s[a]) return false;
  return true;
}

bool is_subset(const Set& a, const Set& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

Set down_closure(const Poset& P, const std::vector<int>& elems) {
  Set s(P.size(), false);
  for (int e : elems) {
    s[e] = true;
    for (int x = 0; x < P.size(); ++x)
      if (P.lt(x, e)) s[x] = true;
  }
  return s;
}

Set up_closure(const Poset& P, const std::vector<int>& elems) {
  Set s(P.size(), false);
  for (int e : elems) {
    s[e] = true;
    for (int x = 0; x < P.size(); ++x)
      if (P.lt(e, x)) s[x] = true;
  }
  return s;
}

std::vector<int> minimal_elements(const Poset& P, const Set& s) {
  std::vector<int> r;
  for (int x = 0; x < P.size(); ++x) {
    if (!s[x]) continue;
    bool ok = true;
    for (int y = 0; y < P.size() && ok; ++y)
      if (s[y] && P.lt(y, x)) ok = false;
    if (ok) r.push_back(x);
  }
  return r;
}

std::vector<int> maximal_elements(const Poset& P, const Set& s) {
  std::vector<int> r;
  for (int x = 0; x < P.size(); ++x) {
    if (!s[x]) continue;
    bool ok = true;
    for (int y = 0; y < P.size() && ok; ++y)
      if (s[y] && P.lt(x, y)) ok = false;
    if (ok) r.push_back(x);
  }
  return r;
}

std::vector<int> depth(const Poset& P) {
  std::vector<int> d(P.size(), 1);
  for (int a : P.topo())
    for (int b : P.ups(a)) d[b] = std::max(d[b], d[a] + 1);
  return d;
}

std::vector<int> co_depth(const Poset& P) {
  std::vector<int> d(P.size(), 1);
  for (int i = P.size() - 1; i >= 0; --i) {
    int a = P.topo()[i];
    for (int b : P.ups(a)) d[a] = std::max(d[a], d[b] + 1);
  }
  return d;
}

int longest_chain(const Poset& P, const Set& s) {
  std::vector<int> d(P.size(), 0);
  int best = 0;
  for (int a : P.topo()) {
    if (!s[a]) continue;
    int v = 1;
    for (int b = 0; b < P.size(); ++b)
      if (s[b] && P.lt(b, a)) v = std::max(v, d[b] + 1);
    d[a] = v;
    best = std::max(best, v);
  }
  return best;
}

namespace {
std::uint64_t g_cap = 0;
}

std::uint64_t max_ideals() {
  if (g_cap) return g_cap;
  if (const char* e = std::getenv("DOPPEL_MAX_IDEALS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(e, &end, 10);
    if (end != e && v > 0) return v;
  }
  return 10000000ULL;
}

void set_max_ideals(std::uint64_t cap) { g_cap = cap; }

namespace {

// Walks J(P) by deciding elements in topological order.
template <class F>
void walk_ideals(const Poset& P, F&& visit) {
  const auto& order = P.topo();
  int n = P.size();
  Set in(n, false);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      visit(in);
      return;
    }
    int x = order[i];
    rec(i + 1);
    for (int y : P.downs(x))
      if (!in[y]) return;
    in[x] = true;
    rec(i + 1);
    in[x] = false;
  };
  rec(0);
}

}  // namespace

std::vector<Set> ideals_enumerate(const Poset& P) {
  std::vector<Set> out;
  std::uint64_t cap = max_ideals();
  walk_ideals(P, [&](const Set& s) {
    if (out.size() >= cap) throw Error(Err::ExplosionGuard, "more than " + std::to_string(cap) + " ideals");
    out.push_back(s);
  });
  return out;
}

std::uint64_t count_ideals(const Poset& P) {
  std::uint64_t c = 0, cap = max_ideals();
  walk_ideals(P, [&](const Set&) {
    if (++c > cap) throw Error(Err::ExplosionGuard, "more than " + std::to_string(cap) + " ideals");
  });
  return c;
}

std::uint64_t count_pp(const Poset& P, int l) {
  if (l < 0) throw Error(Err::BadParams, "negative height bound");
  if (l == 0 || P.size() == 0) return 1;
  return count_ideals(product_with_chain(P, l));
}

std::vector<std::vector<int>> pp_enumerate(const Poset& P, int l) {
  if (l < 0) throw Error(Err::BadParams, "negative height bound");
  std::vector<std::vector<int>> out;
  std::uint64_t cap = max_ideals();
  int n = P.size();
  std::vector<int> val(n, 0);
  const auto& order = P.topo();
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      if (out.size() >= cap) throw Error(Err::ExplosionGuard, "more than " + std::to_string(cap) + " partitions");
      out.push_back(val);
      return;
    }
    int x = order[i];
    int lo = 0;
    for (int y : P.downs(x)) lo = std::max(lo, val[y]);
    for (int v = lo; v <= l; ++v) {
      val[x] = v;
      rec(i + 1);
    }
    val[x] = 0;
  };
  rec(0);
  return out;
}

bool is_pp(const Poset& P, const std::vector<int>& values, int l) {
  if ((int)values.size() != P.size()) return false;
  for (int v : values)
    if (v < 0 || v > l) return false;
  for (auto [a, b] : P.covers())
    if (values[a] > values[b]) return false;
  return true;
}

std::vector<std::uint64_t> order_polynomial_values(const Poset& P, int lmax) {
  std::vector<std::uint64_t> v;
  for (int l = 0; l <= lmax; ++l) v.push_back(count_pp(P, l));
  return v;
}

bool doppelgangers(const Poset& P, const Poset& Q) {
  int m = std::max(P.size(), Q.size());
  return order_polynomial_values(P, m) == order_polynomial_values(Q, m);
}

std::vector<std::vector<int>> linear_extensions(const Poset& P) {
  int n = P.size();
  std::vector<std::vector<int>> out;
  std::uint64_t cap = max_ideals();
  std::vector<int> lab(n, 0), missing(n);
  for (int x = 0; x < n; ++x) missing[x] = (int)P.downs(x).size();
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      if (out.size() >= cap) throw Error(Err::ExplosionGuard, "more than " + std::to_string(cap) + " extensions");
      out.push_back(lab);
      return;
    }
    for (int x = 0; x < n; ++x) {
      if (lab[x] || missing[x]) continue;
      lab[x] = k + 1;
      for (int y : P.ups(x)) missing[y]--;
      rec(k + 1);
      for (int y : P.ups(x)) missing[y]++;
      lab[x] = 0;
    }
  };
  rec(0);
  return out;
}

std::uint64_t count_linear_extensions(const Poset& P) {
  int n = P.size();
  std::unordered_map<Set, std::uint64_t> layer{{Set(n, false), 1}};
  for (int k = 0; k < n; ++k) {
    std::unordered_map<Set, std::uint64_t> next;
    for (auto& [s, c] : layer) {
      for (int x = 0; x < n; ++x) {
        if (s[x]) continue;
        bool ok = true;
        for (int y : P.downs(x))
          if (!s[y]) ok = false;
        if (!ok) continue;
        Set t = s;
        t[x] = true;
        next[t] += c;
      }
    }
    if (next.size() > max_ideals()) throw Error(Err::ExplosionGuard, "ideal layer too large");
    layer.swap(next);
  }
  return layer.empty() ? 0 : layer.begin()->second;
}

std::vector<MobiusTerm> mobius_hat(const Poset& P, const std::vector<Set>& D) {
  std::vector<Set> up;
  for (const Set& y : ideals_enumerate(P))
    for (const Set& d : D)
      if (is_subset(d, y)) {
        up.push_back(y);
        break;
      }
  std::stable_sort(up.begin(), up.end(), [](const Set& a, const Set& b) { return set_size(a) < set_size(b); });
  std::vector<MobiusTerm> out;
  for (const Set& y : up) {
    long long v = 1;
    for (const auto& t : out)
      if (t.ideal != y && is_subset(t.ideal, y)) v -= t.value;
    out.push_back({y, v});
  }
  return out;
}

std::vector<int> RankFunction::sizes() const {
  std::vector<int> s(height, 0);
  for (int r : rank) s[r - 1]++;
  return s;
}

bool uniformly_graded(const Poset& P) {
  if (P.size() == 0) return true;
  auto d = depth(P), cd = co_depth(P);
  int h = *std::max_element(d.begin(), d.end());
  for (auto [a, b] : P.covers())
    if (d[b] != d[a] + 1) return false;
  for (int x = 0; x < P.size(); ++x)
    if (d[x] + cd[x] - 1 != h) return false;
  return true;
}

RankFunction rank_function(const Poset& P) {
  if (!uniformly_graded(P)) throw Error(Err::NotUniformlyGraded, "maximal chains differ in length");
  RankFunction r;
  r.rank = depth(P);
  r.height = r.rank.empty() ? 0 : *std::max_element(r.rank.begin(), r.rank.end());
  return r;
}

std::optional<std::vector<int>> iso_check(const Poset& P, const Poset& Q) { return iso_check(P, Q, {}, {}); }

std::optional<std::vector<int>> iso_check(const Poset& P, const Poset& Q, const std::vector<int>& colP,
                                          const std::vector<int>& colQ) {
  int n = P.size();
  if (n != Q.size() || P.covers().size() != Q.covers().size()) return std::nullopt;
  bool coloured = !colP.empty();
  if (coloured && ((int)colP.size() != n || (int)colQ.size() != n))
    throw Error(Err::SizeMismatch, "colour vectors must match the poset sizes");
  auto inv = [](const Poset& X) {
    auto d = depth(X), cd = co_depth(X);
    std::vector<std::array<int, 6>> v(X.size());
    for (int x = 0; x < X.size(); ++x)
      v[x] = {d[x], cd[x], (int)X.downs(x).size(), (int)X.ups(x).size(), (int)X.below(x).count(),
              (int)X.above(x).count()};
    return v;
  };
  auto ip = inv(P), iq = inv(Q);
  {
    auto a = ip, b = iq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  // assign P elements in topological order; candidates share invariants
  std::vector<int> order = P.topo();
  std::vector<int> f(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == n) return true;
    int p = order[i];
    for (int q = 0; q < n; ++q) {
      if (used[q] || iq[q] != ip[p] || (coloured && colP[p] != colQ[q])) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        int pj = order[j], qj = f[pj];
        if (P.lt(pj, p) != Q.lt(qj, q) || P.lt(p, pj) != Q.lt(q, qj)) ok = false;
      }
      if (!ok) continue;
      f[p] = q;
      used[q] = true;
      if (rec(i + 1)) return true;
      used[q] = false;
      f[p] = -1;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return f;
}

}  // namespace dg
