// Structure coefficients of minuscule Schubert calculus, counted by
// increasing tableaux (K-theory) and standard tableaux (cohomology).
#pragma once

#include "dg/coxeter.hpp"
#include "dg/poset.hpp"
#include "dg/tableaux.hpp"

#include <map>
#include <vector>

namespace dg {

// shape -> coefficient; zero coefficients are never stored
using KExpansion = std::map<Set, long long>;

// T in IT(v/w) with rectify(Tmin_w, T) = Tmin_u.  Slides never create or
// destroy a label value, so only fillings using exactly {1..max Tmin_u} are
// enumerated.
std::vector<Filling> c_set(const Poset& P, const Set& w, const Set& u, const Set& v);
// Same set, enumerated over every filling with labels in [|v/w|] (slow).
std::vector<Filling> c_set_wide(const Poset& P, const Set& w, const Set& u, const Set& v);

long long k_coefficient(const Poset& P, const Set& w, const Set& u, const Set& v);
// |v| = |w| + |u|; target defaults to a standard filling of u along P.topo()
long long coh_coefficient(const Poset& P, const Set& w, const Set& u, const Set& v);
long long coh_coefficient(const Poset& P, const Set& w, const Set& u, const Set& v, const Filling& target);

KExpansion k_product_expansion(const Poset& P, const Set& w, const Set& u, int threads = 1);
KExpansion coh_product_expansion(const Poset& P, const Set& w, const Set& u);
// Knutson's rule for a multiplicity-free cohomological product with the given support.
KExpansion knutson_expansion(const Poset& P, const std::vector<Set>& support);

// An order-reversing bijection of P onto itself (any one).
std::vector<int> anti_automorphism(const Poset& P);
// For a heap of W: the one sending label i to -w0(i), which realises
// Poincare duality x -> iota(P \ x).  Squares Gr(k,2k) and quadrics have
// other order-reversing bijections.
std::vector<int> anti_automorphism(const Poset& P, const CoxeterSystem& C);
// x -> iota(P \ x)
Set dual_shape(const Poset& P, const std::vector<int>& iota, const Set& x);

}  // namespace dg
