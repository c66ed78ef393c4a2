#include "dg/tableaux.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

namespace dg {

Set domain(const Filling& T) {
  Set s(T.size(), false);
  for (size_t i = 0; i < T.size(); ++i) s[i] = T[i] != 0;
  return s;
}

bool is_increasing(const Poset& P, const Filling& T) {
  for (int a = 0; a < P.size(); ++a) {
    if (!T[a] || T[a] == kHole) continue;
    for (int b = 0; b < P.size(); ++b)
      if (T[b] && T[b] != kHole && P.lt(a, b) && T[a] >= T[b]) return false;
  }
  return true;
}

bool is_standard(const Filling& T) {
  std::vector<int> l;
  for (int x : T)
    if (x) l.push_back(x);
  std::sort(l.begin(), l.end());
  for (size_t i = 0; i < l.size(); ++i)
    if (l[i] != (int)i + 1) return false;
  return true;
}

int max_label(const Filling& T) {
  int m = 0;
  for (int x : T)
    if (x != kHole) m = std::max(m, x);
  return m;
}

std::vector<int> label_set(const Filling& T) {
  std::set<int> s;
  for (int x : T)
    if (x && x != kHole) s.insert(x);
  return {s.begin(), s.end()};
}

Filling minimal_tableau(const Poset& P, const Set& shape) {
  Filling T(P.size(), 0);
  for (int a : P.topo()) {
    if (!shape[a]) continue;
    int v = 1;
    for (int b : P.downs(a))
      if (shape[b]) v = std::max(v, T[b] + 1);
    T[a] = v;
  }
  return T;
}

Filling swap_labels(const Poset& P, const Filling& T, int a, int b) {
  Filling out = T;
  auto touches = [&](int x, int lab) {
    for (int y : P.ups(x))
      if (T[y] == lab) return true;
    for (int y : P.downs(x))
      if (T[y] == lab) return true;
    return false;
  };
  for (int x = 0; x < P.size(); ++x) {
    if (T[x] == b && touches(x, a)) out[x] = a;
    else if (T[x] == a && touches(x, b)) out[x] = b;
  }
  return out;
}

Filling jdt_slide(const Poset& P, const Filling& T, const std::vector<int>& cells) {
  Filling F = T;
  for (int c : cells) {
    if (c < 0 || c >= P.size()) throw Error(Err::IndexOutOfRange, "cell " + std::to_string(c));
    if (T[c]) throw Error(Err::NotMaximalCells, "cell " + std::to_string(c) + " is occupied");
    for (int d : cells)
      if (d != c && P.comparable(c, d)) throw Error(Err::NotMaximalCells, "cells are not an antichain");
    for (int x = 0; x < P.size(); ++x)
      if (T[x] && P.lt(x, c)) throw Error(Err::NotMaximalCells, "tableau entry below cell " + std::to_string(c));
    F[c] = kHole;
  }
  for (int a : label_set(T)) F = swap_labels(P, F, kHole, a);
  for (int& x : F)
    if (x == kHole) x = 0;
  return F;
}

Filling rectify(const Poset& P, const Filling& order, const Filling& U) {
  int m = max_label(order);
  Filling F = U;
  for (int i = 0; i < m; ++i) {
    std::vector<int> cells;
    for (int x = 0; x < P.size(); ++x)
      if (order[x] == m - i) cells.push_back(x);
    if (!cells.empty()) F = jdt_slide(P, F, cells);
  }
  return F;
}

std::pair<Filling, Filling> infusion(const Poset& P, const Filling& T, const Filling& U) {
  Filling C = U;
  for (int x = 0; x < P.size(); ++x)
    if (T[x]) {
      if (U[x]) throw Error(Err::BadParams, "infusion: overlapping tableaux");
      C[x] = -T[x];
    }
  auto tl = label_set(T), ul = label_set(U);
  for (auto a = tl.rbegin(); a != tl.rend(); ++a)
    for (int b : ul) C = swap_labels(P, C, -*a, b);
  Filling U2(P.size(), 0), T2(P.size(), 0);
  for (int x = 0; x < P.size(); ++x) {
    if (C[x] > 0) U2[x] = C[x];
    if (C[x] < 0) T2[x] = -C[x];
  }
  return {U2, T2};
}

std::vector<DrawnCell> drawn(const Poset& P, const Filling& T) {
  if (!P.has_coords()) throw Error(Err::NotDrawable, "shape has no Ferrers realisation");
  std::vector<DrawnCell> out;
  for (int x = 0; x < P.size(); ++x)
    if (T[x]) out.push_back({P.coords[x].first, P.coords[x].second, T[x]});
  return out;
}

Word reading_word(const std::vector<DrawnCell>& cells) {
  auto c = cells;
  std::sort(c.begin(), c.end(), [](const DrawnCell& a, const DrawnCell& b) {
    return a.col != b.col ? a.col < b.col : a.row > b.row;
  });
  Word w;
  for (auto& d : c) w.push_back(d.label);
  return w;
}

Word reading_word(const Poset& P, const Filling& T) { return reading_word(drawn(P, T)); }

std::vector<DrawnCell> doubling(const std::vector<DrawnCell>& shifted) {
  std::vector<DrawnCell> out;
  for (auto& d : shifted) {
    if (d.col < d.row) throw Error(Err::NotDrawable, "not a shifted shape");
    out.push_back(d);
    if (d.col != d.row) out.push_back({d.col, d.row, d.label});
  }
  return out;
}

std::vector<DrawnCell> doubling(const Poset& P, const Filling& T) { return doubling(drawn(P, T)); }

Filling pp_to_it(const Poset& P, const std::vector<int>& pp) {
  auto r = rank_function(P);
  Filling T(P.size());
  for (int x = 0; x < P.size(); ++x) T[x] = pp[x] + r.rank[x];
  return T;
}

std::vector<int> it_to_pp(const Poset& P, const Filling& T) {
  auto r = rank_function(P);
  std::vector<int> pp(P.size());
  for (int x = 0; x < P.size(); ++x) pp[x] = T[x] - r.rank[x];
  return pp;
}

const char* kknuth_name(KKnuth r) {
  switch (r) {
    case KKnuth::Yes: return "yes";
    case KKnuth::NoWithinBounds: return "no-within-bounds";
    case KKnuth::Exhausted: return "exhausted";
  }
  return "?";
}

namespace {

void kknuth_moves(const Word& w, bool weak, int max_len, std::vector<Word>& out) {
  int n = (int)w.size();
  auto between = [](int x, int lo, int hi) { return (lo < x && x < hi) || (hi < x && x < lo); };
  for (int i = 0; i + 2 < n; ++i) {
    int a = w[i], b = w[i + 1], c = w[i + 2];
    if (a != b && b != c && a != c) {
      if (between(a, b, c)) {  // bac ~ bca
        Word v = w;
        std::swap(v[i + 1], v[i + 2]);
        out.push_back(v);
      }
      if (between(c, a, b)) {  // cab ~ acb
        Word v = w;
        std::swap(v[i], v[i + 1]);
        out.push_back(v);
      }
    }
    if (a == c && a != b) {  // aba ~ bab
      Word v = w;
      v[i] = v[i + 2] = b;
      v[i + 1] = a;
      out.push_back(v);
    }
  }
  for (int i = 0; i < n; ++i) {
    if (i + 1 < n && w[i] == w[i + 1]) {  // aa -> a
      Word v = w;
      v.erase(v.begin() + i);
      out.push_back(v);
    }
    if (n < max_len) {  // a -> aa
      Word v = w;
      v.insert(v.begin() + i, w[i]);
      out.push_back(v);
    }
  }
  if (weak && n >= 2 && w[0] != w[1]) {  // ab u ~ ba u
    Word v = w;
    std::swap(v[0], v[1]);
    out.push_back(v);
  }
}

struct WordHash {
  size_t operator()(const Word& v) const {
    size_t h = 1469598103934665603ULL;
    for (int x : v) h = (h ^ (size_t)x) * 1099511628211ULL;
    return h;
  }
};

}  // namespace

KKnuth kknuth_equivalent_bounded(const Word& w1, const Word& w2, bool weak, int max_len,
                                 std::size_t max_states) {
  if (w1 == w2) return KKnuth::Yes;
  std::unordered_set<Word, WordHash> seen{w1};
  std::deque<Word> q{w1};
  std::vector<Word> nb;
  while (!q.empty()) {
    Word w = q.front();
    q.pop_front();
    nb.clear();
    kknuth_moves(w, weak, max_len, nb);
    for (auto& v : nb) {
      if ((int)v.size() > max_len || seen.count(v)) continue;
      if (v == w2) return KKnuth::Yes;
      if (seen.size() >= max_states) return KKnuth::Exhausted;
      seen.insert(v);
      q.push_back(v);
    }
  }
  return KKnuth::NoWithinBounds;
}

std::vector<Filling> increasing_fillings(const Poset& P, const Set& cells, int maxlabel, bool all_used) {
  std::vector<int> order;
  for (int x : P.topo())
    if (cells[x]) order.push_back(x);
  std::vector<std::vector<int>> lower(P.size());
  for (int x : order)
    for (int y : order)
      if (P.lt(y, x)) lower[x].push_back(y);
  int k = (int)order.size();
  std::vector<Filling> out;
  std::uint64_t cap = max_ideals();
  Filling T(P.size(), 0);
  std::vector<int> used(maxlabel + 2, 0);
  int distinct = 0;
  std::function<void(int)> rec = [&](int i) {
    if (all_used && maxlabel - distinct > k - i) return;
    if (i == k) {
      if (out.size() >= cap) throw Error(Err::ExplosionGuard, "too many fillings");
      out.push_back(T);
      return;
    }
    int x = order[i];
    int lo = 0;
    for (int y : lower[x]) lo = std::max(lo, T[y]);
    for (int v = lo + 1; v <= maxlabel; ++v) {
      T[x] = v;
      if (!used[v]++) ++distinct;
      rec(i + 1);
      if (!--used[v]) --distinct;
    }
    T[x] = 0;
  };
  rec(0);
  return out;
}

std::vector<Filling> standard_fillings(const Poset& P, const Set& cells) {
  auto elems = members(cells);
  Poset S = induced(P, elems);
  std::vector<Filling> out;
  for (auto& ext : linear_extensions(S)) {
    Filling T(P.size(), 0);
    for (size_t i = 0; i < elems.size(); ++i) T[elems[i]] = ext[i];
    out.push_back(T);
  }
  return out;
}

}  // namespace dg
