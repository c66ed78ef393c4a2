#include "dg/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace dg {

namespace {

// "gr:3,6" -> {3, 6}; the part after `prefix`.
std::vector<int> params(const std::string& spec, const std::string& prefix) {
  std::vector<int> out;
  std::string rest = spec.substr(prefix.size());
  std::stringstream ss(rest);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t pos = 0;
      out.push_back(std::stoi(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error(Err::BadParams, "bad parameters in '" + spec + "'");
    }
  }
  return out;
}

bool starts(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

std::vector<int> want(const std::string& spec, const std::string& prefix, size_t count) {
  auto v = params(spec, prefix);
  if (v.size() != count) throw Error(Err::BadParams, "'" + spec + "' needs " + std::to_string(count) + " parameter(s)");
  return v;
}

// Checks that labelled P is the heap of a reduced word for the same element
// as `word`: reading labels along a linear extension must reproduce P.
void validate_heap(const Poset& P, const CoxeterSystem& C, const Word& word) {
  Word w2;
  for (int x : P.topo()) w2.push_back(P.labels[x]);
  Poset H = heap_from_word(C, w2);
  const auto& t = P.topo();
  for (int i = 0; i < P.size(); ++i)
    for (int j = 0; j < P.size(); ++j)
      if (H.leq(i, j) != P.leq(t[i], t[j]))
        throw Error(Err::TripleValidationFailed, "labelled poset is not the heap of " + C.tag() + " word");
  RootSystem R(C);
  if (!(R.element(w2) == R.element(word)) || R.length(R.element(word)) != (int)word.size())
    throw Error(Err::TripleValidationFailed, "word mismatch in " + C.tag());
}

Poset staircase(int order, const std::function<int(int, int)>& label) {
  std::vector<Cell> cells;
  for (int r = 0; r < order; ++r)
    for (int c = r; c < order; ++c) cells.push_back({r, c});
  Poset P = ferrers(cells);
  for (auto& [r, c] : cells) P.labels.push_back(label(r, c));
  return P;
}

int cell_index(const Poset& P, int r, int c) {
  for (int x = 0; x < P.size(); ++x)
    if (P.coords[x] == Cell{r, c}) return x;
  throw Error(Err::TripleValidationFailed, "no cell (" + std::to_string(r) + "," + std::to_string(c) + ")");
}

// b - a is a nonnegative combination of simple roots
Poset root_order(const RootSystem& R, const std::vector<int>& roots) {
  std::vector<Cover> rel;
  int n = R.system().rank();
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = 0; j < roots.size(); ++j) {
      if (i == j) continue;
      bool ge = true;
      for (int q = 0; q < n && ge; ++q)
        if ((R.coeffs(roots[j])[q] - R.coeffs(roots[i])[q]).sign() < 0) ge = false;
      if (ge) rel.push_back({(int)i, (int)j});
    }
  return Poset::from_covers((int)roots.size(), rel);
}

}  // namespace

Word grassmannian_word(int k, int n) {
  Word w;
  for (int j = 1; j <= k; ++j)
    for (int i = k - j + 1; i <= n - j; ++i) w.push_back(i);
  return w;
}

Word lagrangian_word(int n) {
  Word w;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n - i + 1; ++j) w.push_back(j);
  return w;
}

Word orthogonal_word(int n, int variant) {
  Word w;
  for (int j = 1; j <= n - 1; ++j) {
    w.push_back((j + variant) % 2 == 0 ? 1 : 2);
    for (int k = 3; k <= n - j + 1; ++k) w.push_back(k);
  }
  return w;
}

Word quadric_word(int n) {
  Word w;
  for (int i = n; i >= 3; --i) w.push_back(i);
  w.push_back(1);
  w.push_back(2);
  for (int i = 3; i <= n; ++i) w.push_back(i);
  return w;
}

Word cayley_word() { return {1, 3, 4, 5, 6, 2, 4, 5, 3, 4, 1, 3, 2, 4, 5, 6}; }

Word freudenthal_word() {
  return {1, 3, 4, 5, 6, 2, 5, 4, 3, 1, 7, 6, 5, 4, 3, 2, 5, 4, 6, 5, 7, 6, 2, 5, 4, 3, 1};
}

Word trapezoid_word(int k, int n) {
  Word w;
  for (int j = 1; j <= k; ++j) {
    w.push_back(j % 2 ? 1 : 2);
    for (int i = 3; i <= n - 2 * j + 2; ++i) w.push_back(i);
  }
  return w;
}

Minuscule minuscule(const std::string& spec) {
  Minuscule M;
  if (starts(spec, "gr:")) {
    auto p = want(spec, "gr:", 2);
    int k = p[0], n = p[1];
    if (k < 1 || k >= n) throw Error(Err::BadParams, "gr:k,n needs 1 <= k < n");
    M.C = CoxeterSystem::A(n - 1);
    M.word = grassmannian_word(k, n);
    std::vector<Cell> cells;
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < n - k; ++c) cells.push_back({r, c});
    M.P = ferrers(cells);
    for (auto& [r, c] : cells) M.P.labels.push_back(k - r + c);
    M.tag = "gr:" + std::to_string(k) + "," + std::to_string(n);
  } else if (starts(spec, "lg:")) {
    int n = want(spec, "lg:", 1)[0];
    if (n < 2) throw Error(Err::BadParams, "lg:n needs n >= 2");
    M.C = CoxeterSystem::B(n);
    M.word = lagrangian_word(n);
    M.P = staircase(n, [](int r, int c) { return c - r + 1; });
    M.tag = "lg:" + std::to_string(n);
  } else if (starts(spec, "og:")) {
    int n = want(spec, "og:", 1)[0];
    if (n < 2) throw Error(Err::BadParams, "og:n needs n >= 2");
    M.C = CoxeterSystem::D(n);
    M.word = orthogonal_word(n, 1);
    M.P = staircase(n - 1, [](int r, int c) { return c == r ? (r % 2 ? 2 : 1) : c - r + 2; });
    M.tag = "og:" + std::to_string(n);
  } else if (starts(spec, "quadric:")) {
    int d = want(spec, "quadric:", 1)[0];
    if (d < 4 || d % 2) throw Error(Err::BadParams, "quadric:d needs even d >= 4");
    int n = d / 2 + 1;
    M.C = CoxeterSystem::D(n);
    M.word = quadric_word(n);
    M.P = heap_from_word(M.C, M.word);
    M.tag = "quadric:" + std::to_string(d);
  } else if (spec == "cayley") {
    M.C = CoxeterSystem::E(6);
    M.word = cayley_word();
    M.P = heap_from_word(M.C, M.word);
    M.tag = spec;
  } else if (spec == "freudenthal") {
    M.C = CoxeterSystem::E(7);
    M.word = freudenthal_word();
    M.P = heap_from_word(M.C, M.word);
    M.tag = spec;
  } else {
    throw Error(Err::BadParams, "unknown minuscule poset '" + spec + "'");
  }
  validate_heap(M.P, M.C, M.word);
  return M;
}

Poset minuscule_poset(const std::string& spec) { return minuscule(spec).P; }

Poset root_poset_A(int n) {
  RootSystem R(CoxeterSystem::A(n));
  std::vector<int> roots;
  for (int r = 0; r < R.num_positive(); ++r) roots.push_back(r);
  return root_order(R, roots);
}

// Positive roots sent negative by (s1 s2 ... s_{n-k})^k in B_{n-k}.
Poset root_poset_B(int k, int n) {
  if (k < 1 || n < 2 * k) throw Error(Err::BadParams, "rootB:k,n needs 1 <= k, n >= 2k");
  RootSystem R(CoxeterSystem::B(n - k));
  Word w;
  for (int j = 0; j < k; ++j)
    for (int i = 1; i <= n - k; ++i) w.push_back(i);
  GroupElement g = R.element(w);
  if (R.length(g) != (int)w.size()) throw Error(Err::TripleValidationFailed, "trapezoid word is not reduced");
  std::vector<int> roots;
  for (int r = 0; r < R.num_positive(); ++r)
    if (!R.positive(g.perm[r])) roots.push_back(r);
  return root_order(R, roots);
}

// Chain s < sts < ststs < ... (m-1 elements), and t below sts.
Poset root_poset_I2(int m) {
  if (m < 2) throw Error(Err::BadParams, "rootI2:m needs m >= 2");
  std::vector<Cover> rel;
  for (int i = 0; i + 2 < m; ++i) rel.push_back({i, i + 1});
  if (m >= 3) rel.push_back({m - 1, 1});
  return Poset::from_covers(m, rel);
}

// Parabolic I2(5) on {s2,s1} below the heap of the longest element of the
// quotient, both labelled by reflections; t < s3 t s3 whenever they differ.
Poset root_poset_H3() {
  auto C = CoxeterSystem::H3();
  RootSystem R(C);
  std::vector<GroupElement> refl;
  // the chain starts at s2, the generator joined to s3
  Word par = {2, 1, 2, 1};
  for (int i = 0; i < 4; ++i) refl.push_back(R.reflection_at(par, i));
  refl.push_back(R.gen(1));
  Word top = {3, 2, 1, 2, 1, 3, 2, 1, 2, 3};
  Poset H = heap_from_word(C, top);
  for (int i = 0; i < (int)top.size(); ++i) refl.push_back(R.reflection_at(top, i));
  std::vector<Cover> rel = root_poset_I2(5).covers();
  for (auto& [a, b] : H.covers()) rel.push_back({a + 5, b + 5});
  for (int t = 0; t < 5; ++t) {
    GroupElement c = R.mul(R.mul(R.gen(3), refl[t]), R.gen(3));
    if (c == refl[t]) continue;
    auto it = std::find(refl.begin() + 5, refl.end(), c);
    if (it == refl.end()) throw Error(Err::TripleValidationFailed, "H3 reflection missing from heap");
    rel.push_back({t, (int)(it - refl.begin())});
  }
  return Poset::from_covers(15, rel);
}

Poset root_poset(const std::string& spec) {
  if (starts(spec, "rootA:")) {
    int n = want(spec, "rootA:", 1)[0];
    if (n < 1) throw Error(Err::BadParams, "rootA:n needs n >= 1");
    return root_poset_A(n);
  }
  if (starts(spec, "rootB:")) {
    auto p = want(spec, "rootB:", 2);
    return root_poset_B(p[0], p[1]);
  }
  if (spec == "rootH3") return root_poset_H3();
  if (starts(spec, "rootI2:")) return root_poset_I2(want(spec, "rootI2:", 1)[0]);
  throw Error(Err::BadParams, "unknown root poset '" + spec + "'");
}

std::vector<int> ideal_from_word(const Poset& heap, const Word& word, const Set& start) {
  Set I = start;
  std::vector<int> added;
  for (int s : word) {
    int found = -1;
    for (int x = 0; x < heap.size(); ++x) {
      if (I[x] || heap.labels[x] != s) continue;
      bool ok = true;
      for (int d : heap.downs(x)) ok = ok && I[d];
      if (ok) {
        if (found >= 0) throw Error(Err::TripleValidationFailed, "ambiguous letter in heap word");
        found = x;
      }
    }
    if (found < 0)
      throw Error(Err::TripleValidationFailed, "word " + word_to_string(word) + " does not fit the heap");
    I[found] = true;
    added.push_back(found);
  }
  return added;
}

std::vector<int> ideal_from_word(const Poset& heap, const Word& word) {
  return ideal_from_word(heap, word, Set(heap.size(), false));
}

bool shifted_ambient(const Minuscule& M) { return starts(M.tag, "lg:") || starts(M.tag, "og:"); }

Set shape_from_partition(const Minuscule& M, const std::vector<int>& lambda) {
  if (!M.P.has_coords()) throw Error(Err::NotDrawable, M.tag + " shapes are given as words");
  bool sh = shifted_ambient(M);
  Set s(M.P.size(), false);
  int placed = 0;
  for (int x = 0; x < M.P.size(); ++x) {
    auto [r, c] = M.P.coords[x];
    int len = r < (int)lambda.size() ? lambda[r] : 0;
    int first = sh ? r : 0;
    if (c >= first && c < first + len) {
      s[x] = true;
      ++placed;
    }
  }
  int want_cells = 0;
  for (int l : lambda) want_cells += l;
  if (placed != want_cells || !is_ideal(M.P, s))
    throw Error(Err::BadParams, "partition does not fit in " + M.tag);
  return s;
}

std::vector<int> partition_of(const Minuscule& M, const Set& shape) {
  if (!M.P.has_coords()) throw Error(Err::NotDrawable, M.tag + " has no Ferrers drawing");
  std::vector<int> rows;
  for (int x = 0; x < M.P.size(); ++x) {
    if (!shape[x]) continue;
    int r = M.P.coords[x].first;
    if ((int)rows.size() <= r) rows.resize(r + 1, 0);
    ++rows[r];
  }
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  return rows;
}

Set shape_from_word(const Minuscule& M, const Word& w) { return make_set(M.P.size(), ideal_from_word(M.P, w)); }

std::vector<Filling> u_candidates(const Triple& t) {
  const Poset& P = t.Z.P;
  Set skew(P.size(), false);
  for (int x = 0; x < P.size(); ++x) skew[x] = t.v[x] && !t.w[x];
  Filling order = minimal_tableau(P, t.w);
  std::vector<Filling> out;
  for (auto& U : increasing_fillings(P, skew, max_label(t.Tmin_u), true))
    if (rectify(P, order, U) == t.Tmin_u) out.push_back(U);
  return out;
}

Triple build_triple(const std::string& spec) {
  Triple t;
  auto fail = [&](const std::string& why) { throw Error(Err::TripleValidationFailed, spec + ": " + why); };
  auto setof = [](int n, const std::vector<int>& e) { return make_set(n, e); };

  if (starts(spec, "B:")) {
    auto p = want(spec, "B:", 2);
    int k = p[0], n = p[1];
    if (k < 1 || n < 2 * k) throw Error(Err::BadParams, "B:k,n needs 1 <= k, n >= 2k");
    t.label = "B:" + std::to_string(k) + "," + std::to_string(n);
    t.Z = minuscule("og:" + std::to_string(n));
    const Poset& Z = t.Z.P;
    int N = Z.size();
    t.u.assign(N, false);
    t.v.assign(N, false);
    t.w.assign(N, false);
    for (int x = 0; x < N; ++x) {
      auto [r, c] = Z.coords[x];
      if (r < k - 1 && c <= k - 2) t.u[x] = true;
      if (r < k) t.v[x] = true;
      if (r < k && c <= n - 2 - r) t.w[x] = true;
    }
    if (setof(N, ideal_from_word(Z, trapezoid_word(k, n))) != t.w) fail("trapezoid word does not give w");
    t.X = minuscule("gr:" + std::to_string(k) + "," + std::to_string(n)).P;
    t.theta.resize(t.X.size());
    for (int x = 0; x < t.X.size(); ++x) {
      auto [r, c] = t.X.coords[x];
      t.theta[x] = cell_index(Z, r, k - 1 + c);
    }
    t.Y = root_poset_B(k, n);
  } else if (spec == "H") {
    t.label = "H";
    t.Z = minuscule("freudenthal");
    const Poset& Z = t.Z.P;
    int N = Z.size();
    auto ua = ideal_from_word(Z, {1, 3, 4, 5, 6, 7});
    t.u = setof(N, ua);
    static const int th[] = {0, 6, 2, 5, 4, 3, 1};
    Word cont;
    for (int s : orthogonal_word(6, 2)) cont.push_back(th[s]);
    auto va = ideal_from_word(Z, cont, t.u);
    t.v = t.u;
    for (int x : va) t.v[x] = true;
    t.w = setof(N, ideal_from_word(Z, {1, 3, 4, 5, 6, 7, 2, 5, 6, 4, 5, 2, 3, 4, 1}));
    t.X = minuscule("og:6").P;
    // the continuation word runs through the staircase row by row
    t.theta.assign(t.X.size(), -1);
    int i = 0;
    for (int r = 0; r < 5; ++r)
      for (int c = r; c < 5; ++c) t.theta[cell_index(t.X, r, c)] = va[i++];
    t.Y = root_poset_H3();
  } else if (starts(spec, "I:")) {
    int n = want(spec, "I:", 1)[0];
    if (n < 2) throw Error(Err::BadParams, "I:n needs n >= 2");
    t.label = "I:" + std::to_string(n);
    t.Z = minuscule("quadric:" + std::to_string(4 * n - 2));
    const Poset& Z = t.Z.P;
    int N = Z.size();
    Word uw;
    for (int s = 2 * n; s >= n + 2; --s) uw.push_back(s);
    t.u = setof(N, ideal_from_word(Z, uw));
    auto va = ideal_from_word(Z, quadric_word(n + 1), t.u);
    t.v = t.u;
    for (int x : va) t.v[x] = true;
    Word ww;
    for (int s = 2 * n; s >= 3; --s) ww.push_back(s);
    ww.push_back(1);
    ww.push_back(2);
    t.w = setof(N, ideal_from_word(Z, ww));
    t.X = minuscule("quadric:" + std::to_string(2 * n)).P;
    t.theta = va;  // X is the heap of the same word
    t.Y = root_poset_I2(2 * n);
  } else {
    throw Error(Err::BadParams, "unknown triple '" + spec + "' (B:k,n | H | I:n)");
  }

  const Poset& Z = t.Z.P;
  int N = Z.size();
  if (!is_ideal(Z, t.u) || !is_ideal(Z, t.v) || !is_ideal(Z, t.w)) fail("u, v, w must be order ideals");
  if (!is_subset(t.u, t.v) || !is_subset(t.w, t.v)) fail("u and w must lie in v");

  // theta: isomorphism onto v \ u
  Set img(N, false);
  for (int x : t.theta) {
    if (x < 0 || img[x]) fail("theta is not injective");
    img[x] = true;
  }
  for (int x = 0; x < N; ++x)
    if (img[x] != (t.v[x] && !t.u[x])) fail("theta image is not v \\ u");
  for (int a = 0; a < t.X.size(); ++a)
    for (int b = 0; b < t.X.size(); ++b)
      if (t.X.leq(a, b) != Z.leq(t.theta[a], t.theta[b])) fail("theta is not an order embedding");

  // chi: Y is the dual of the induced order on w
  auto wm = members(t.w);
  auto f = iso_check(t.Y, dual(induced(Z, wm)));
  if (!f) fail("w is not dual to the root poset");
  t.chi.resize(t.Y.size());
  for (int y = 0; y < t.Y.size(); ++y) t.chi[y] = wm[(*f)[y]];

  t.height_X = rank_function(t.X).height;
  t.Tmin_u = minimal_tableau(Z, t.u);

  auto cands = u_candidates(t);
  if (cands.size() != 1) fail(std::to_string(cands.size()) + " tableaux rectify to Tmin_u");
  t.U = cands[0];

  // second rectification order: standard, along a linear extension of w
  Filling order2(N, 0);
  int lab = 0;
  for (int x : Z.topo())
    if (t.w[x]) order2[x] = ++lab;
  if (rectify(Z, order2, t.U) != t.Tmin_u) fail("U depends on the rectification order");

  // closed forms
  if (t.label[0] == 'B') {
    auto p = params(t.label, "B:");
    int k = p[0], n = p[1];
    for (int x = 0; x < N; ++x) {
      if (!t.U[x]) continue;
      auto [r, c] = Z.coords[x];
      if (t.U[x] != 2 * (c - (n - 1 - r)) + (k - r)) fail("U differs from the diagonal labelling");
    }
  } else if (!is_standard(t.U)) {
    fail("U is not standard");
  }
  return t;
}

}  // namespace dg
