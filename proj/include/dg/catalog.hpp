// Named posets: minuscule posets, coincidental root posets, and the
// embedded triples behind the doppelganger bijections.
#pragma once

#include "dg/coxeter.hpp"
#include "dg/poset.hpp"
#include "dg/tableaux.hpp"

#include <string>
#include <vector>

namespace dg {

struct Minuscule {
  std::string tag;  // normalised spec, e.g. "gr:2,4"
  CoxeterSystem C;
  Word word;        // reduced word whose heap is P
  Poset P;          // labels always set; coords for gr/lg/og
};

// gr:k,n  lg:n  og:n  quadric:d (d = 2n-2, type D_n)  cayley  freudenthal
Minuscule minuscule(const std::string& spec);
Poset minuscule_poset(const std::string& spec);

Word grassmannian_word(int k, int n);
Word lagrangian_word(int n);
Word orthogonal_word(int n, int variant = 1);  // variant 1 or 2: which spin node
Word quadric_word(int n);                      // in D_n
Word cayley_word();
Word freudenthal_word();

// rootA:n  rootB:k,n  rootH3  rootI2:m ; simple roots are the minimal elements.
Poset root_poset(const std::string& spec);
Poset root_poset_A(int n);
Poset root_poset_B(int k, int n);
Poset root_poset_H3();
Poset root_poset_I2(int m);

// Reduced word in D_n whose heap is the shifted trapezoid inside OG(n,2n).
Word trapezoid_word(int k, int n);  // in D_n

// Greedily grows an order ideal of a labelled heap by the letters of `word`;
// returns the elements in the order they were added.
std::vector<int> ideal_from_word(const Poset& heap, const Word& word, const Set& start);
std::vector<int> ideal_from_word(const Poset& heap, const Word& word);

// Partitions index ideals of gr (Young diagrams) and lg/og (shifted
// diagrams); other ambients take shapes as heap words.
bool shifted_ambient(const Minuscule& M);
Set shape_from_partition(const Minuscule& M, const std::vector<int>& lambda);
std::vector<int> partition_of(const Minuscule& M, const Set& shape);
Set shape_from_word(const Minuscule& M, const Word& w);

struct Triple {
  std::string label;  // "B:k,n", "H", "I:n"
  Minuscule Z;        // ambient
  Set u, v, w;
  Poset X;
  std::vector<int> theta;  // X element -> ambient element; image is v \ u
  Poset Y;
  std::vector<int> chi;  // Y element -> ambient element; image is w, order reversed
  Filling Tmin_u;
  Filling U;  // on v/w
  int height_X = 0;
};

// B:k,n  H  I:n
Triple build_triple(const std::string& spec);

// Increasing tableaux of shape v/w in labels {1..h} (all used) that rectify
// to Tmin_u under the order Tmin_w.
std::vector<Filling> u_candidates(const Triple& t);

}  // namespace dg
