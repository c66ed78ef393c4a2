#include "dg/ktheory.hpp"

#include <atomic>
#include <deque>
#include <mutex>
#include <set>
#include <thread>

namespace dg {

namespace {

void check_shapes(const Poset& P, const Set& w, const Set& u, const Set& v) {
  if (!P.has_labels()) throw Error(Err::NotMinusculeAmbient, "ambient is not a labelled heap");
  int n = P.size();
  if ((int)w.size() != n || (int)u.size() != n || (int)v.size() != n) throw Error(Err::BadParams, "shape size mismatch");
  if (!is_ideal(P, w) || !is_ideal(P, u) || !is_ideal(P, v)) throw Error(Err::BadParams, "shapes must be order ideals");
  if (!is_subset(w, v)) throw Error(Err::BadParams, "w must lie in v");
}

Set skew(const Set& v, const Set& w) {
  Set s(v.size());
  for (size_t i = 0; i < v.size(); ++i) s[i] = v[i] && !w[i];
  return s;
}

std::vector<Filling> rectifying(const Poset& P, const Set& w, const Set& u, const std::vector<Filling>& cands) {
  Filling order = minimal_tableau(P, w), target = minimal_tableau(P, u);
  std::vector<Filling> out;
  for (auto& T : cands)
    if (rectify(P, order, T) == target) out.push_back(T);
  return out;
}

}  // namespace

std::vector<Filling> c_set(const Poset& P, const Set& w, const Set& u, const Set& v) {
  check_shapes(P, w, u, v);
  int h = longest_chain(P, u);
  return rectifying(P, w, u, increasing_fillings(P, skew(v, w), h, true));
}

std::vector<Filling> c_set_wide(const Poset& P, const Set& w, const Set& u, const Set& v) {
  check_shapes(P, w, u, v);
  Set s = skew(v, w);
  return rectifying(P, w, u, increasing_fillings(P, s, set_size(s), false));
}

long long k_coefficient(const Poset& P, const Set& w, const Set& u, const Set& v) {
  long long c = (long long)c_set(P, w, u, v).size();
  int e = set_size(v) - set_size(w) - set_size(u);
  return (e % 2 == 0) ? c : -c;
}

long long coh_coefficient(const Poset& P, const Set& w, const Set& u, const Set& v, const Filling& target) {
  check_shapes(P, w, u, v);
  if (set_size(v) != set_size(w) + set_size(u)) throw Error(Err::SizeMismatch, "|v| != |w| + |u|");
  Filling order = minimal_tableau(P, w);
  long long c = 0;
  for (auto& S : standard_fillings(P, skew(v, w)))
    if (rectify(P, order, S) == target) ++c;
  return c;
}

long long coh_coefficient(const Poset& P, const Set& w, const Set& u, const Set& v) {
  Filling target(P.size(), 0);
  int lab = 0;
  for (int x : P.topo())
    if (u[x]) target[x] = ++lab;
  return coh_coefficient(P, w, u, v, target);
}

KExpansion k_product_expansion(const Poset& P, const Set& w, const Set& u, int threads) {
  check_shapes(P, w, u, w);
  int h = longest_chain(P, u);
  // every v with a filling of v/w by [h] has chains of length <= h in v/w
  std::set<Set> seen{w};
  std::deque<Set> q{w};
  std::vector<Set> shapes;
  while (!q.empty()) {
    Set v = q.front();
    q.pop_front();
    shapes.push_back(v);
    for (int x = 0; x < P.size(); ++x) {
      if (v[x]) continue;
      bool addable = true;
      for (int d : P.downs(x)) addable = addable && v[d];
      if (!addable) continue;
      Set v2 = v;
      v2[x] = true;
      if (seen.count(v2) || longest_chain(P, skew(v2, w)) > h) continue;
      if (seen.size() >= max_ideals()) throw Error(Err::ExplosionGuard, "too many candidate shapes");
      seen.insert(v2);
      q.push_back(v2);
    }
  }
  std::vector<long long> coef(shapes.size(), 0);
  std::atomic<size_t> next{0};
  std::mutex err_m;
  std::exception_ptr err;
  auto work = [&] {
    try {
      for (size_t i; (i = next++) < shapes.size();) coef[i] = k_coefficient(P, w, u, shapes[i]);
    } catch (...) {
      std::lock_guard<std::mutex> g(err_m);
      if (!err) err = std::current_exception();
    }
  };
  int nt = std::max(1, threads);
  std::vector<std::thread> pool;
  for (int t = 1; t < nt; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
  KExpansion out;
  for (size_t i = 0; i < shapes.size(); ++i)
    if (coef[i]) out[shapes[i]] = coef[i];
  return out;
}

KExpansion coh_product_expansion(const Poset& P, const Set& w, const Set& u) {
  check_shapes(P, w, u, w);
  int target = set_size(w) + set_size(u);
  KExpansion out;
  for (auto& v : ideals_enumerate(P)) {
    if (set_size(v) != target || !is_subset(w, v)) continue;
    long long c = coh_coefficient(P, w, u, v);
    if (c) out[v] = c;
  }
  return out;
}

KExpansion knutson_expansion(const Poset& P, const std::vector<Set>& support) {
  KExpansion out;
  for (auto& t : mobius_hat(P, support))
    if (t.value) out[t.ideal] = t.value;
  return out;
}

std::vector<int> anti_automorphism(const Poset& P) {
  auto f = iso_check(P, dual(P));
  if (!f) throw Error(Err::UnsupportedType, "poset is not self-dual");
  return *f;
}

std::vector<int> anti_automorphism(const Poset& P, const CoxeterSystem& C) {
  if (!P.has_labels()) throw Error(Err::NotMinusculeAmbient, "ambient is not a labelled heap");
  RootSystem R(C);
  GroupElement w0 = R.longest();
  std::vector<int> sigma(C.rank() + 1, 0);
  for (int i = 1; i <= C.rank(); ++i)
    for (int j = 1; j <= C.rank(); ++j)
      if (w0.perm[R.simple(i)] == R.num_positive() + R.simple(j)) sigma[i] = j;
  std::vector<int> from(P.size());
  for (int x = 0; x < P.size(); ++x) from[x] = sigma[P.labels[x]];
  auto f = iso_check(P, dual(P), from, P.labels);
  if (!f) throw Error(Err::UnsupportedType, "no anti-automorphism compatible with -w0");
  return *f;
}

Set dual_shape(const Poset& P, const std::vector<int>& iota, const Set& x) {
  Set out(P.size(), false);
  for (int y = 0; y < P.size(); ++y)
    if (!x[y]) out[iota[y]] = true;
  return out;
}

}  // namespace dg
