// One line per acceptance criterion; exit status is the number of failures.
//
//   acceptance [--seed N] [--threads N] [--only K]

#include "dg/doppel.hpp"
#include "dg/io.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

using namespace dg;

namespace {

int g_threads = 4;
unsigned g_seed = 1;

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool c, const std::string& what) {
    if (!c) {
      if (ok) detail = what;
      ok = false;
    }
  }
};

template <class F>
void parallel(size_t n, F f) {
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i; (i = next++) < n;) f(i);
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < g_threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
}

std::uint64_t brute_linext(const Poset& P) {
  std::vector<int> p(P.size());
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t c = 0;
  do {
    bool ok = true;
    for (int i = 0; i < P.size() && ok; ++i)
      for (int j = 0; j < i && ok; ++j) ok = !P.lt(p[i], p[j]);
    c += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return c;
}

Set skew(const Set& v, const Set& w) {
  Set s(v.size());
  for (size_t i = 0; i < v.size(); ++i) s[i] = v[i] && !w[i];
  return s;
}

Filling random_increasing(std::mt19937& rng, const Poset& P, const Set& cells) {
  Filling T(P.size(), 0);
  Set left = cells;
  for (int lab = 1; set_size(left); ++lab) {
    auto mins = minimal_elements(P, left);
    int x = mins[std::uniform_int_distribution<size_t>(0, mins.size() - 1)(rng)];
    T[x] = lab;
    left[x] = false;
  }
  std::bernoulli_distribution coin(0.5);
  for (int a = max_label(T); a >= 2; --a) {
    if (!coin(rng)) continue;
    Filling S = T;
    for (auto& x : S)
      if (x >= a) --x;
    if (is_increasing(P, S)) T = S;
  }
  return T;
}

using Terms = std::map<std::vector<int>, long long>;
Terms by_partition(const Minuscule& M, const KExpansion& E) {
  Terms t;
  for (auto& [s, c] : E) t[partition_of(M, s)] = c;
  return t;
}

// ---------------------------------------------------------------------------

Outcome c1() {
  Outcome o;
  Poset a = minuscule_poset("gr:2,4");
  Poset b = Poset::from_covers(4, {{0, 2}, {1, 2}, {2, 3}});
  for (const Poset* P : {&a, &b}) {
    auto v = order_polynomial_values(*P, 4);
    for (long long l = 0; l <= 4; ++l)
      o.require(v[l] == (std::uint64_t)((l + 1) * (l + 2) * (l + 2) * (l + 3) / 12), "value at l=" + std::to_string(l));
    o.require(v == std::vector<std::uint64_t>{1, 6, 20, 50, 105}, "values differ from 1 6 20 50 105");
  }
  o.detail = o.ok ? "[1, 6, 20, 50, 105] for both" : o.detail;
  return o;
}

Outcome c2() {
  Outcome o;
  auto rect = count_pp(minuscule_poset("gr:4,8"), 4);
  auto trap = count_pp(heap_from_word(CoxeterSystem::D(8), trapezoid_word(4, 8)), 4);
  // box product, cancelled prime by prime
  std::map<int, int> e;
  auto add = [&](int t, int s) {
    for (int p = 2; t > 1; ++p)
      while (t % p == 0) {
        e[p] += s;
        t /= p;
      }
  };
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      for (int k = 1; k <= 4; ++k) {
        add(i + j + k - 1, 1);
        add(i + j + k - 2, -1);
      }
  std::uint64_t mac = 1;
  for (auto [p, k] : e) {
    if (k < 0) mac = 0;
    for (int t = 0; t < k; ++t) mac *= p;
  }
  o.require(rect == 232848, "rectangle count " + std::to_string(rect));
  o.require(trap == 232848, "trapezoid count " + std::to_string(trap));
  o.require(mac == 232848, "box product");
  if (o.ok) o.detail = "232848 = 232848 = box product";
  return o;
}

Outcome c3() {
  Outcome o;
  auto ctx = make_context(build_triple("B:4,8"), 4);
  const Triple& t = ctx.t;
  const Poset& Z = t.Z.P;
  auto at = [&](int x, int y) {
    for (int e = 0; e < Z.size(); ++e)
      if (Z.coords[e] == Cell{(y - x) / 2, (x + y) / 2}) return e;
    return -1;
  };
  auto pp = pp_from_json(t.X, json::parse("[[4,4,3,2],[4,3,3,2],[4,3,2,1],[2,1,1]]"));
  auto out = forward(ctx, pp);
  std::vector<int> got(Z.size(), -1);
  for (int y = 0; y < t.Y.size(); ++y) got[t.chi[y]] = out[y];
  int want[][3] = {{0, 0, 0}, {1, 1, 1}, {0, 2, 1}, {2, 2, 1}, {1, 3, 2}, {0, 4, 3}, {3, 3, 1}, {4, 4, 1},
                   {5, 5, 2}, {6, 6, 3}, {2, 4, 2}, {3, 5, 2}, {4, 6, 4}, {1, 5, 3}, {2, 6, 3}, {0, 6, 4}};
  for (auto& w : want) o.require(got[at(w[0], w[1])] == w[2], "output differs at (" + std::to_string(w[0]) + "," + std::to_string(w[1]) + ")");
  Filling itX(t.X.size()), it(Z.size(), 0);
  for (int x = 0; x < t.X.size(); ++x) it[t.theta[x]] = itX[x] = pp[x] + ctx.rank_X[x];
  Filling F = it;
  std::vector<std::vector<std::pair<int, int>>> rows = {{{0, 4}}, {{1, 3}}, {{0, 2}, {2, 2}}, {{1, 1}}, {{0, 0}}};
  for (auto& row : rows) {
    std::vector<int> cells;
    for (auto [x, y] : row) cells.push_back(at(x, y));
    F = jdt_slide(Z, F, cells);
  }
  o.require(F == forward_it(ctx, itX), "row-by-row slides differ from the minimal-tableau order");
  o.require(inverse(ctx, out) == pp, "inverse does not recover the input");
  if (o.ok) o.detail = "16 values match; row order agrees; inverse recovers input";
  return o;
}

Outcome c4() {
  Outcome o;
  std::vector<std::pair<std::string, int>> jobs;
  for (int k = 1; k <= 3; ++k)
    for (int n = 2 * k; n <= 6; ++n) jobs.push_back({"B:" + std::to_string(k) + "," + std::to_string(n), 3});
  jobs.push_back({"H", 2});
  for (int n = 2; n <= 5; ++n) jobs.push_back({"I:" + std::to_string(n), 4});
  std::uint64_t total = 0;
  int runs = 0;
  for (auto& [spec, lmax] : jobs) {
    Triple t = build_triple(spec);
    for (int l = 0; l <= lmax; ++l) {
      auto r = verify(make_context(t, l), g_threads);
      ++runs;
      total += r.inputs;
      o.require(r.pass(), spec + " l=" + std::to_string(l) + ": " + (r.failures.empty() ? "" : r.failures[0]));
    }
  }
  if (o.ok) o.detail = std::to_string(runs) + " (triple, l) runs, " + std::to_string(total) + " plane partitions";
  return o;
}

Outcome c5_6() {
  Outcome o;
  Minuscule G = minuscule("gr:4,8");
  Set s = shape_from_partition(G, {2, 2});
  Terms want = {{{2, 2, 2, 2}, 1}, {{3, 2, 2, 1}, 1}, {{4, 2, 2}, 1},     {{3, 3, 1, 1}, 1}, {{4, 3, 1}, 1},
                {{4, 4}, 1},       {{3, 2, 2, 2}, -1}, {{3, 3, 2, 1}, -1}, {{4, 2, 2, 1}, -1}, {{4, 3, 1, 1}, -1},
                {{4, 3, 2}, -1},   {{4, 4, 1}, -1},    {{4, 3, 2, 1}, 1}};
  KExpansion K1 = k_product_expansion(G.P, s, s, g_threads);
  o.require(by_partition(G, K1) == want, "square of (2,2) differs");
  Minuscule H = minuscule("gr:3,6");
  Set w = shape_from_partition(H, {2, 1}), u = shape_from_partition(H, {1, 1});
  KExpansion K2 = k_product_expansion(H.P, w, u, g_threads);
  o.require(by_partition(H, K2) == Terms{{{2, 2, 1}, 1}, {{3, 1, 1}, 1}, {{3, 2}, 1}, {{3, 2, 1}, -2}}, "(2,1)*(1,1) differs");
  if (o.ok) o.detail = "13 terms; +221 +311 +32 -2*321";
  return o;
}

Outcome c6() {
  Outcome o;
  int checked = 0;
  auto knutson_agrees = [&](const Poset& P, const Set& a, const Set& b, const std::string& what) -> KExpansion {
    KExpansion H = coh_product_expansion(P, a, b);
    std::vector<Set> support;
    for (auto& [v, c] : H) {
      o.require(c == 1, what + ": cohomological product has multiplicities");
      support.push_back(v);
    }
    KExpansion K = k_product_expansion(P, a, b, g_threads);
    o.require(knutson_expansion(P, support) == K, what + ": Moebius expansion differs");
    ++checked;
    return K;
  };
  {
    Minuscule G = minuscule("gr:4,8");
    Set s = shape_from_partition(G, {2, 2});
    knutson_agrees(G.P, s, s, "gr:4,8 (2,2)^2");
    Minuscule H = minuscule("gr:3,6");
    knutson_agrees(H.P, shape_from_partition(H, {2, 1}), shape_from_partition(H, {1, 1}), "gr:3,6 (2,1)(1,1)");
  }
  std::vector<std::string> specs;
  for (int k = 1; k <= 3; ++k)
    for (int n = 2 * k; n <= 6; ++n) specs.push_back("B:" + std::to_string(k) + "," + std::to_string(n));
  specs.push_back("H");
  for (int n = 2; n <= 5; ++n) specs.push_back("I:" + std::to_string(n));
  for (auto& spec : specs) {
    Triple t = build_triple(spec);
    const Poset& Z = t.Z.P;
    auto iota = anti_automorphism(Z, t.Z.C);
    Set vd = dual_shape(Z, iota, t.v), wd = dual_shape(Z, iota, t.w);
    KExpansion K = knutson_agrees(Z, vd, t.u, spec);
    o.require(K == KExpansion{{wd, 1}}, spec + ": product is not the single dual class of w");
  }
  if (o.ok) o.detail = std::to_string(checked) + " multiplicity-free products agree";
  return o;
}

Outcome c7() {
  Outcome o;
  std::mt19937 rng(g_seed);
  std::vector<Minuscule> ambients = {minuscule("gr:4,8"), minuscule("og:6"), minuscule("cayley")};
  std::vector<std::vector<Set>> ideals;
  for (auto& M : ambients) ideals.push_back(ideals_enumerate(M.P));
  int done = 0;
  while (done < 1000) {
    size_t a = done % ambients.size();
    const Poset& P = ambients[a].P;
    auto& I = ideals[a];
    std::uniform_int_distribution<size_t> pick(0, I.size() - 1);
    Set w = I[pick(rng)], v = I[pick(rng)];
    if (!is_subset(w, v) || set_size(v) > 12) continue;
    Filling T = random_increasing(rng, P, w), U = random_increasing(rng, P, skew(v, w));
    auto [U2, T2] = infusion(P, T, U);
    auto [T3, U3] = infusion(P, U2, T2);
    o.require(T3 == T && U3 == U, "infusion is not an involution on pair " + std::to_string(done));
    ++done;
  }
  if (o.ok) o.detail = "1000 pairs, seed " + std::to_string(g_seed);
  return o;
}

Outcome c8() {
  Outcome o;
  std::atomic<std::uint64_t> fillings{0}, reached{0};
  std::mutex m;
  for (std::string spec : {"og:4", "gr:3,6"}) {
    Minuscule M = minuscule(spec);
    const Poset& P = M.P;
    auto I = ideals_enumerate(P);
    // rectification orders: every increasing tableau of w
    std::map<Set, std::vector<Filling>> orders;
    for (auto& w : I) {
      auto& list = orders[w];
      for (int k = 1; k <= set_size(w); ++k)
        for (auto& T : increasing_fillings(P, w, k, true)) list.push_back(T);
    }
    std::vector<std::pair<Set, Set>> pairs;
    for (auto& w : I)
      for (auto& v : I)
        if (is_subset(w, v) && set_size(w) && set_size(v) - set_size(w) <= 6) pairs.push_back({w, v});
    parallel(pairs.size(), [&](size_t i) {
      auto [w, v] = pairs[i];
      Set cells = skew(v, w);
      // a filling that rectifies to Tmin of a shape with <= 6 cells uses labels 1..h, h <= 6
      for (int h = 1; h <= std::min(6, set_size(cells)); ++h)
        for (auto& U : increasing_fillings(P, cells, h, true)) {
          ++fillings;
          std::set<Filling> outs;
          bool hit = false;
          for (auto& T : orders[w]) {
            Filling R = rectify(P, T, U);
            outs.insert(R);
            Set d = domain(R);
            hit = hit || (set_size(d) <= 6 && R == minimal_tableau(P, d));
          }
          if (hit) {
            ++reached;
            if (outs.size() != 1) {
              std::lock_guard<std::mutex> g(m);
              o.require(false, spec + ": a filling reaching a minimal tableau has " + std::to_string(outs.size()) + " rectifications");
            }
          }
        }
    });
  }
  if (o.ok) o.detail = std::to_string(reached.load()) + " of " + std::to_string(fillings.load()) + " fillings reach a minimal tableau; all orders agree";
  return o;
}

Outcome c9() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    RootSystem R(CoxeterSystem::I2(2 * n));
    auto a = R.red_word_count(R.longest());
    Word w;
    for (int j = 2 * n; j >= 3; --j) w.push_back(j);
    w.push_back(1);
    w.push_back(2);
    auto D = CoxeterSystem::D(2 * n);
    o.require(is_reduced(D, w), "D word not reduced for n=" + std::to_string(n));
    auto b = red_word_count(D, w);
    o.require(a == 2 && b == 2, "n=" + std::to_string(n) + ": " + std::to_string(a) + " vs " + std::to_string(b));
  }
  RootSystem H(CoxeterSystem::H3());
  auto h = H.red_word_count(H.longest());
  Word e7 = {1, 3, 4, 5, 6, 7, 2, 5, 6, 4, 5, 2, 3, 4, 1};
  auto E7 = CoxeterSystem::E(7);
  o.require(is_reduced(E7, e7), "E7 word not reduced");
  auto l = count_linear_extensions(heap_from_word(E7, e7));
  o.require(h == l, "H3: " + std::to_string(h) + " reduced words vs " + std::to_string(l) + " linear extensions");
  if (o.ok) o.detail = "I2(2n): 2 = 2 for n<=6; H3: " + std::to_string(h) + " = " + std::to_string(l);
  return o;
}

Outcome c10() {
  Outcome o;
  Poset rect = minuscule_poset("gr:3,6");
  Poset trap = heap_from_word(CoxeterSystem::D(6), trapezoid_word(3, 6));
  auto a = brute_linext(rect), b = brute_linext(trap);
  std::uint64_t hooks = 1;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) hooks *= (3 - i) + (3 - j) - 1;
  std::uint64_t hl = 362880 / hooks;
  o.require(a == 42 && b == 42 && hl == 42, std::to_string(a) + " " + std::to_string(b) + " " + std::to_string(hl));
  o.require(count_linear_extensions(rect) == a && count_linear_extensions(trap) == b, "library count differs from brute force");
  if (o.ok) o.detail = "42 = 42 = 9!/hooks";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  int only = 0;
  app.add_option("--seed", g_seed);
  app.add_option("--threads", g_threads)->check(CLI::PositiveNumber);
  app.add_option("--only", only)->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  struct Criterion {
    int id;
    const char* name;
    double limit;  // seconds
    std::function<Outcome()> run;
  };
  std::vector<Criterion> all = {
      {1, "order polynomial of two 4-element doppelgangers", 1, c1},
      {2, "rectangle and trapezoid at l=4 (232848)", 60, c2},
      {3, "worked example B:4,8, l=4", 1, c3},
      {4, "exhaustive bijection verification", 600, c4},
      {5, "K-theoretic product expansions", 120, c5_6},
      {6, "Moebius expansion agrees on multiplicity-free products", 120, c6},
      {7, "infusion involution on 1000 random pairs", 30, c7},
      {8, "unique rectification targets in OG(4,8), Gr(3,6)", 300, c8},
      {9, "reduced-word coincidences I2(2n), H3", 300, c9},
      {10, "standard tableaux of rectangle and trapezoid (42)", 5, c10},
  };
  int failed = 0;
  for (auto& c : all) {
    if (only && c.id != only) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.ok = false;
      r.detail = std::string("exception: ") + e.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.ok && dt > c.limit) {
      r.ok = false;
      r.detail += " (over the " + std::to_string((int)c.limit) + " s limit)";
    }
    failed += !r.ok;
    std::printf("%s [%2d] %s: %s (%.2f s)\n", r.ok ? "PASS" : "FAIL", c.id, c.name, r.detail.c_str(), dt);
    std::fflush(stdout);
  }
  return failed;
}
