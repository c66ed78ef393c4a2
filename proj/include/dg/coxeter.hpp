// Coxeter systems, heaps of words, and exact root-system arithmetic.
#pragma once

#include "dg/poset.hpp"

#include <boost/rational.hpp>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace dg {

using Q = boost::rational<long long>;

// a + b*phi, phi = (1+sqrt5)/2, phi^2 = phi + 1.
struct Golden {
  Q a{0}, b{0};
  Golden() = default;
  Golden(Q a_, Q b_ = Q(0)) : a(a_), b(b_) {}
  Golden operator+(const Golden& o) const { return {a + o.a, b + o.b}; }
  Golden operator-(const Golden& o) const { return {a - o.a, b - o.b}; }
  Golden operator-() const { return {-a, -b}; }
  Golden operator*(const Golden& o) const { return {a * o.a + b * o.b, a * o.b + b * o.a + b * o.b}; }
  bool operator==(const Golden& o) const { return a == o.a && b == o.b; }
  bool operator<(const Golden& o) const { return (o - *this).sign() > 0; }
  int sign() const;  // exact
  double value() const;
  static Golden phi() { return {Q(0), Q(1)}; }
};

using Word = std::vector<int>;  // generator indices, 1-based

class CoxeterSystem {
 public:
  // Tags: A<n>, B<n>, C<n>, D<n>, E6, E7, H3, I2:<m>.
  static CoxeterSystem parse(const std::string& tag);
  static CoxeterSystem A(int n);
  static CoxeterSystem B(int n);
  static CoxeterSystem D(int n);
  static CoxeterSystem E(int n);
  static CoxeterSystem H3();
  static CoxeterSystem I2(int m);

  int rank() const { return (int)m_.size(); }
  int m(int i, int j) const { return m_[i - 1][j - 1]; }  // 0 encodes infinity
  bool commute(int i, int j) const { return m(i, j) == 2 || i == j; }
  const std::string& tag() const { return tag_; }
  char family() const { return family_; }
  void check_word(const Word& w) const;
  std::uint64_t group_order() const;

 private:
  std::vector<std::vector<int>> m_;
  std::string tag_;
  char family_ = 'A';
  std::vector<std::vector<Golden>> cartan_;  // s_i(alpha_j) = alpha_j - cartan[i][j] alpha_i
  static CoxeterSystem finish(CoxeterSystem C);
  friend class RootSystem;
};

// Heap of a word: positions 0..|w|-1, labels = letters.
Poset heap_from_word(const CoxeterSystem& C, const Word& w);

// A group element, stored as the permutation it induces on the root system
// (faithful); roots 0..N-1 positive, N+i is the negative of root i.
struct GroupElement {
  std::vector<int> perm;
  bool operator==(const GroupElement& o) const { return perm == o.perm; }
};

class RootSystem {
 public:
  explicit RootSystem(const CoxeterSystem& C);
  const CoxeterSystem& system() const { return C_; }
  int num_positive() const { return N_; }
  int simple(int s) const { return simple_[s - 1]; }
  bool positive(int root) const { return root < N_; }
  // Coefficients in the simple-root basis (empty for the angle model).
  const std::vector<Golden>& coeffs(int root) const { return coeffs_[root]; }
  bool golden_model() const { return !coeffs_.empty(); }

  GroupElement identity() const;
  GroupElement gen(int s) const { return gens_[s - 1]; }
  GroupElement mul(const GroupElement& g, const GroupElement& h) const;  // g*h
  GroupElement inverse(const GroupElement& g) const;
  GroupElement element(const Word& w) const;
  GroupElement longest() const;
  Word reduced_word(const GroupElement& g) const;  // lexicographically first right-descent path
  bool right_descent(const GroupElement& g, int s) const { return !positive(g.perm[simple(s)]); }
  int length(const GroupElement& g) const;
  // |Red(g)| by descent DFS with memoisation; guarded.
  std::uint64_t red_word_count(const GroupElement& g) const;
  // Reflection s_{i1}..s_{ik-1} s_ik s_{ik-1}..s_i1 for the prefix ending at position k.
  GroupElement reflection_at(const Word& w, int k) const;

 private:
  CoxeterSystem C_;
  int N_ = 0;
  std::vector<int> simple_;
  std::vector<GroupElement> gens_;
  std::vector<std::vector<Golden>> coeffs_;
};

int length(const CoxeterSystem& C, const Word& w);
std::uint64_t red_word_count(const CoxeterSystem& C, const Word& w);
// |Red(w)| for w fully commutative: linear extensions of its heap.
std::uint64_t fc_red_word_count(const CoxeterSystem& C, const Word& w);
bool is_reduced(const CoxeterSystem& C, const Word& w);

// 0-Hecke product in S_{a+1}, letters 1..a, folded left to right; one-line
// notation (values 1..a+1).
std::vector<int> demazure_product_typeA(const Word& w, int a);
std::vector<int> perm_product_typeA(const Word& w, int a);

std::string word_to_string(const Word& w);
Word parse_word(const std::string& s);

}  // namespace dg
