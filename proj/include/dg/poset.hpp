// Finite posets: construction, ideals, P-partitions, linear extensions,
// Moebius values on up-closures of J(P), isomorphism.
#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dg {

enum class Err {
  CycleDetected,
  IndexOutOfRange,
  ExplosionGuard,
  NotUniformlyGraded,
  UnsupportedType,
  FeasibilityGuard,
  BadParams,
  TripleValidationFailed,
  NotMaximalCells,
  NotDrawable,
  NotMinusculeAmbient,
  SizeMismatch,
  ShapeAssertionFailed,
  InfusionMismatch,
};

const char* err_name(Err e);

struct Error : std::runtime_error {
  Err code;
  Error(Err c, const std::string& msg);
};

using Set = std::vector<bool>;  // subset of elements, indexed 0..n-1
using Cover = std::pair<int, int>;  // (a, b): b covers a
using Cell = std::pair<int, int>;   // (row, col) in a (shifted) Ferrers drawing

class Poset {
 public:
  Poset() = default;

  // Rejects cycles and out-of-range indices; redundant pairs are dropped.
  static Poset from_covers(int n, const std::vector<Cover>& rel);

  int size() const { return n_; }
  bool lt(int a, int b) const { return up_[a][b]; }
  bool leq(int a, int b) const { return a == b || up_[a][b]; }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }
  const std::vector<int>& ups(int a) const { return upc_[a]; }
  const std::vector<int>& downs(int a) const { return downc_[a]; }
  const std::vector<Cover>& covers() const { return covers_; }
  const std::vector<int>& topo() const { return topo_; }  // a linear extension
  const boost::dynamic_bitset<>& above(int a) const { return up_[a]; }
  const boost::dynamic_bitset<>& below(int a) const { return down_[a]; }

  bool has_coords() const { return !coords.empty(); }
  bool has_labels() const { return !labels.empty(); }

  // Optional decorations, carried along by induced()/catalog.
  std::vector<Cell> coords;  // Ferrers drawing, English convention
  std::vector<int> labels;   // generator labels of a heap (1-based)

 private:
  int n_ = 0;
  std::vector<boost::dynamic_bitset<>> up_, down_;
  std::vector<std::vector<int>> upc_, downc_;
  std::vector<Cover> covers_;
  std::vector<int> topo_;
};

Poset chain(int n);
Poset antichain(int n);
Poset dual(const Poset& P);
Poset product_with_chain(const Poset& P, int l);  // element (p,i) -> p*l + i
Poset disjoint_union(const Poset& P, const Poset& Q);
Poset ordinal_sum(const Poset& P, const Poset& Q);  // every Q element above P
// Cells ordered componentwise; coordinates are attached.
Poset ferrers(const std::vector<Cell>& cells);
// Induced subposet on elems (in that order); decorations follow.
Poset induced(const Poset& P, const std::vector<int>& elems);

std::vector<int> members(const Set& s);
Set make_set(int n, const std::vector<int>& elems);
int set_size(const Set& s);
bool is_ideal(const Poset& P, const Set& s);
bool is_subset(const Set& a, const Set& b);
Set down_closure(const Poset& P, const std::vector<int>& elems);
Set up_closure(const Poset& P, const std::vector<int>& elems);
std::vector<int> minimal_elements(const Poset& P, const Set& s);
std::vector<int> maximal_elements(const Poset& P, const Set& s);

// Longest chain ending at each element, counted in elements.
std::vector<int> depth(const Poset& P);
// Longest chain starting at each element, counted in elements.
std::vector<int> co_depth(const Poset& P);
// Longest chain inside s (0 for empty s).
int longest_chain(const Poset& P, const Set& s);

// Explosion cap for enumerations (default 1e7; env DOPPEL_MAX_IDEALS).
std::uint64_t max_ideals();
void set_max_ideals(std::uint64_t cap);

std::vector<Set> ideals_enumerate(const Poset& P);
std::uint64_t count_ideals(const Poset& P);

std::uint64_t count_pp(const Poset& P, int l);
// Each partition is a value vector indexed by element.
std::vector<std::vector<int>> pp_enumerate(const Poset& P, int l);
bool is_pp(const Poset& P, const std::vector<int>& values, int l);
std::vector<std::uint64_t> order_polynomial_values(const Poset& P, int lmax);
bool doppelgangers(const Poset& P, const Poset& Q);

// Bijections element -> 1..n.
std::vector<std::vector<int>> linear_extensions(const Poset& P);
std::uint64_t count_linear_extensions(const Poset& P);

struct MobiusTerm {
  Set ideal;
  long long value;
};
// mu_hat(y) = -mu(0hat, y) over {y in J(P) : y contains some d in D}.
std::vector<MobiusTerm> mobius_hat(const Poset& P, const std::vector<Set>& D);

struct RankFunction {
  std::vector<int> rank;  // 1..height
  int height = 0;
  std::vector<int> sizes() const;
};
RankFunction rank_function(const Poset& P);
bool uniformly_graded(const Poset& P);

// Returns f with P.leq(a,b) <=> Q.leq(f[a],f[b]).
std::optional<std::vector<int>> iso_check(const Poset& P, const Poset& Q);
// Same, additionally requiring colP[a] == colQ[f[a]].
std::optional<std::vector<int>> iso_check(const Poset& P, const Poset& Q, const std::vector<int>& colP,
                                          const std::vector<int>& colQ);

}  // namespace dg
