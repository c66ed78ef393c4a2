#include "dg/doppel.hpp"

#include <atomic>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace dg {

namespace {

std::string show(const std::vector<int>& v) {
  std::ostringstream o;
  o << "[";
  for (size_t i = 0; i < v.size(); ++i) o << (i ? "," : "") << v[i];
  o << "]";
  return o.str();
}

// Runs f(i) for i in [0, n) on `threads` workers; first exception wins.
template <class F>
void parallel_for(size_t n, int threads, F f) {
  std::atomic<size_t> next{0};
  std::mutex m;
  std::exception_ptr err;
  auto work = [&] {
    try {
      for (size_t i; (i = next++) < n;) f(i);
    } catch (...) {
      std::lock_guard<std::mutex> g(m);
      if (!err) err = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace

DoppelContext make_context(const Triple& t, int ell) {
  if (ell < 0) throw Error(Err::BadParams, "ell must be >= 0");
  DoppelContext c;
  c.t = t;
  c.ell = ell;
  auto rx = rank_function(t.X);
  auto ry = rank_function(t.Y);
  if (rx.height != ry.height) throw Error(Err::TripleValidationFailed, "X and Y have different heights");
  c.rank_X = rx.rank;
  c.m = ell + rx.height;
  auto d = depth(t.Z.P);
  c.rank_w.assign(t.Z.P.size(), 0);
  for (int x = 0; x < t.Z.P.size(); ++x)
    if (t.w[x]) c.rank_w[x] = d[x];
  c.Ydual = dual(t.Y);
  return c;
}

Filling forward_it(const DoppelContext& ctx, const Filling& it_X) {
  const auto& t = ctx.t;
  Filling F(t.Z.P.size(), 0);
  for (int x = 0; x < t.X.size(); ++x) F[t.theta[x]] = it_X[x];
  Filling R = rectify(t.Z.P, t.Tmin_u, F);
  if (domain(R) != t.w) throw Error(Err::ShapeAssertionFailed, "rectified shape is not w for input " + show(it_X));
  return R;
}

std::vector<int> forward(const DoppelContext& ctx, const std::vector<int>& pp) {
  const auto& t = ctx.t;
  if ((int)pp.size() != t.X.size() || !is_pp(t.X, pp, ctx.ell))
    throw Error(Err::BadParams, "input is not a plane partition of X with entries <= " + std::to_string(ctx.ell));
  Filling it(t.X.size());
  for (int x = 0; x < t.X.size(); ++x) it[x] = pp[x] + ctx.rank_X[x];
  Filling R = forward_it(ctx, it);
  std::vector<int> out(t.Y.size());
  for (int y = 0; y < t.Y.size(); ++y) out[y] = R[t.chi[y]] - ctx.rank_w[t.chi[y]];
  return out;
}

Filling inverse_it(const DoppelContext& ctx, const Filling& it_w) {
  const auto& t = ctx.t;
  auto [U2, T2] = infusion(t.Z.P, it_w, t.U);
  if (U2 != t.Tmin_u) throw Error(Err::InfusionMismatch, "infusion did not return Tmin_u");
  Filling out(t.X.size());
  for (int x = 0; x < t.X.size(); ++x) {
    out[x] = T2[t.theta[x]];
    if (!out[x]) throw Error(Err::InfusionMismatch, "infused tableau does not fill v \\ u");
  }
  return out;
}

std::vector<int> inverse(const DoppelContext& ctx, const std::vector<int>& pp) {
  const auto& t = ctx.t;
  if ((int)pp.size() != t.Y.size() || !is_pp(ctx.Ydual, pp, ctx.ell))
    throw Error(Err::BadParams, "input is not a plane partition of w with entries <= " + std::to_string(ctx.ell));
  Filling F(t.Z.P.size(), 0);
  for (int y = 0; y < t.Y.size(); ++y) F[t.chi[y]] = pp[y] + ctx.rank_w[t.chi[y]];
  Filling it = inverse_it(ctx, F);
  std::vector<int> out(t.X.size());
  for (int x = 0; x < t.X.size(); ++x) out[x] = it[x] - ctx.rank_X[x];
  return out;
}

VerifyReport verify(const DoppelContext& ctx, int threads) {
  const auto& t = ctx.t;
  VerifyReport r;
  r.triple = t.label;
  r.ell = ctx.ell;
  r.m = ctx.m;
  threads = std::max(1, threads);

  auto inputs = pp_enumerate(t.X, ctx.ell);
  r.inputs = inputs.size();
  r.count_X = count_pp(t.X, ctx.ell);
  r.count_Y = count_pp(t.Y, ctx.ell);
  r.count_dual_X = count_pp(dual(t.X), ctx.ell);
  r.count_dual_Y = count_pp(ctx.Ydual, ctx.ell);
  if (r.count_X != r.inputs) r.failures.push_back("enumeration/count mismatch on X");
  if (r.count_X != r.count_Y) r.failures.push_back("order polynomials of X and Y differ");
  if (r.count_dual_X != r.count_dual_Y) r.failures.push_back("duals are not doppelgangers");

  std::vector<std::vector<int>> out(inputs.size());
  std::vector<char> bad(inputs.size(), 0), trip(inputs.size(), 0);
  std::mutex fm;
  parallel_for(inputs.size(), threads, [&](size_t i) {
    try {
      out[i] = forward(ctx, inputs[i]);
      if (!is_pp(ctx.Ydual, out[i], ctx.ell)) {
        bad[i] = 1;
        return;
      }
      trip[i] = inverse(ctx, out[i]) == inputs[i];
    } catch (const Error& e) {
      bad[i] = 1;
      std::lock_guard<std::mutex> g(fm);
      if (r.failures.size() < 20) r.failures.push_back(std::string(err_name(e.code)) + ": " + e.what());
    }
  });
  for (size_t i = 0; i < inputs.size(); ++i) {
    if (bad[i]) {
      if (r.well_defined) r.failures.push_back("forward not well defined at " + show(inputs[i]));
      r.well_defined = false;
    } else if (!trip[i]) {
      if (r.round_trip) r.failures.push_back("inverse(forward(T)) != T at " + show(inputs[i]));
      r.round_trip = false;
    }
  }
  std::set<std::vector<int>> image;
  for (size_t i = 0; i < inputs.size(); ++i)
    if (!bad[i]) image.insert(out[i]);
  r.images = image.size();
  r.injective = r.well_defined && r.images == r.inputs;
  r.surjective = r.well_defined && r.images == r.count_Y;
  if (!r.injective) r.failures.push_back("forward is not injective");
  if (!r.surjective) r.failures.push_back("forward does not hit every plane partition of Y");

  // standard fillings go to standard fillings
  auto syt = linear_extensions(t.X);
  r.syt_X = syt.size();
  r.syt_Y = count_linear_extensions(t.Y);
  std::vector<Filling> so(syt.size());
  std::vector<char> sbad(syt.size(), 0);
  parallel_for(syt.size(), threads, [&](size_t i) {
    try {
      so[i] = forward_it(ctx, syt[i]);
      sbad[i] = !is_standard(so[i]) || inverse_it(ctx, so[i]) != syt[i];
    } catch (const Error&) {
      sbad[i] = 1;
    }
  });
  std::set<Filling> simg;
  for (size_t i = 0; i < syt.size(); ++i) {
    if (sbad[i]) r.syt_bijective = false;
    else simg.insert(so[i]);
  }
  if (simg.size() != r.syt_X || r.syt_X != r.syt_Y) r.syt_bijective = false;
  if (!r.syt_bijective) r.failures.push_back("standard fillings are not carried bijectively");
  return r;
}

}  // namespace dg
