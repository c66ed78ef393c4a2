// Increasing tableaux on convex subsets of a poset and K-theoretic
// jeu de taquin.
#pragma once

#include "dg/coxeter.hpp"
#include "dg/poset.hpp"

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace dg {

// One label per element of the ambient poset; 0 means the element is not a
// cell of the tableau.  kHole marks an empty box during a slide.
using Filling = std::vector<int>;
constexpr int kHole = std::numeric_limits<int>::min();

Set domain(const Filling& T);
bool is_increasing(const Poset& P, const Filling& T);
bool is_standard(const Filling& T);
int max_label(const Filling& T);
std::vector<int> label_set(const Filling& T);

// entry = length of the longest chain in the shape ending at the cell
Filling minimal_tableau(const Poset& P, const Set& shape);

// Cells labelled b next to an a become a, and vice versa, simultaneously;
// "next to" means related by a cover in P.
Filling swap_labels(const Poset& P, const Filling& T, int a, int b);

// Slide into the given cells (an antichain with nothing of T below it).
Filling jdt_slide(const Poset& P, const Filling& T, const std::vector<int>& cells);

// Slides into order^{-1}(m), order^{-1}(m-1), ..., order^{-1}(1).
Filling rectify(const Poset& P, const Filling& order, const Filling& U);

// (T on w, U on v/w) -> (U' on u', T' on v/u').
std::pair<Filling, Filling> infusion(const Poset& P, const Filling& T, const Filling& U);

struct DrawnCell {
  int row, col, label;
};
std::vector<DrawnCell> drawn(const Poset& P, const Filling& T);
// Columns left to right, each read bottom to top.
Word reading_word(const std::vector<DrawnCell>& cells);
Word reading_word(const Poset& P, const Filling& T);
// Reflect a shifted tableau across its main diagonal (diagonal kept once).
std::vector<DrawnCell> doubling(const Poset& P, const Filling& T);
std::vector<DrawnCell> doubling(const std::vector<DrawnCell>& shifted);

// P uniformly graded; values indexed by element.
Filling pp_to_it(const Poset& P, const std::vector<int>& pp);
std::vector<int> it_to_pp(const Poset& P, const Filling& T);

enum class KKnuth { Yes, NoWithinBounds, Exhausted };
const char* kknuth_name(KKnuth r);
KKnuth kknuth_equivalent_bounded(const Word& w1, const Word& w2, bool weak, int max_len,
                                 std::size_t max_states);

// Increasing fillings of `cells` with labels in 1..maxlabel; with
// all_used, exactly the label set {1..maxlabel} occurs.
std::vector<Filling> increasing_fillings(const Poset& P, const Set& cells, int maxlabel, bool all_used);
std::vector<Filling> standard_fillings(const Poset& P, const Set& cells);

}  // namespace dg
