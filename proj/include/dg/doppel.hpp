// Bijections PP^[l](Lambda_X) <-> PP^[l](Phi+_Y) through an ambient
// minuscule poset: embed, rectify; inverse by infusion against U.
#pragma once

#include "dg/catalog.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dg {

struct DoppelContext {
  Triple t;
  int ell = 0;
  int m = 0;                   // alphabet size, ell + height of X
  std::vector<int> rank_X;     // per element of X
  std::vector<int> rank_w;     // per ambient element (0 outside w)
  Poset Ydual;                 // outputs are plane partitions of this poset
};

DoppelContext make_context(const Triple& t, int ell);

// Plane partitions are value vectors indexed by poset element.  Outputs of
// forward are indexed by elements of Y and weakly increase along Ydual
// (i.e. along the embedded shape w), so 0 maps to 0.
std::vector<int> forward(const DoppelContext& ctx, const std::vector<int>& pp);
Filling forward_it(const DoppelContext& ctx, const Filling& it_X);  // ambient IT of shape w
std::vector<int> inverse(const DoppelContext& ctx, const std::vector<int>& pp);
Filling inverse_it(const DoppelContext& ctx, const Filling& it_w);  // IT on X

struct VerifyReport {
  std::string triple;
  int ell = 0, m = 0;
  std::uint64_t inputs = 0, count_X = 0, count_Y = 0, count_dual_X = 0, count_dual_Y = 0, images = 0;
  std::uint64_t syt_X = 0, syt_Y = 0;
  bool well_defined = true, injective = true, surjective = true, round_trip = true, syt_bijective = true;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

VerifyReport verify(const DoppelContext& ctx, int threads = 1);

}  // namespace dg
