#pragma once

// Exact arithmetic in the universal enveloping algebra of the Heisenberg Lie
// algebra.  Generators are X_1..X_d, Y_1..Y_d and the central S, subject to
//
//   [X_i, Y_j] = -delta_{ij} S,    [X_i, S] = [Y_i, S] = 0.
//
// Elements are kept in Poincare-Birkhoff-Witt normal form with the species
// order X < Y < S (ascending indices within a species), so equality of
// operators is literal equality of the stored term maps.  Coefficients are
// exact rationals; every rewrite below is an identity, not an approximation.

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "heisen/group.hpp"

namespace heisen::algebra {

using Rational = boost::multiprecision::cpp_rational;

// X^a Y^b S^c as exponent vectors; the unique PBW representative of its class.
struct Monomial {
  std::vector<int> xs;  // a, size d
  std::vector<int> ys;  // b, size d
  int s = 0;            // c

  int degree() const;  // letter count a + b + c
  int weight() const;  // homogeneous degree: S counts twice

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

class AlgebraElement {
 public:
  explicit AlgebraElement(int d);

  static AlgebraElement constant(const Rational& c, int d);
  // letter in 1..2d+1: 1..d -> X_i, d+1..2d -> Y_i, 2d+1 -> S
  static AlgebraElement generator(int letter, int d);

  int dim() const { return d_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Rational& c);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    return a += b;
  }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    return a -= b;
  }
  friend AlgebraElement operator-(AlgebraElement a) { return a *= Rational(-1); }
  friend AlgebraElement operator*(AlgebraElement a, const Rational& c) {
    return a *= c;
  }
  friend AlgebraElement operator*(const Rational& c, AlgebraElement a) {
    return a *= c;
  }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.d_ == b.d_ && a.terms_ == b.terms_;
  }

  void add_term(const Monomial& m, const Rational& c);

 private:
  int d_;
  std::map<Monomial, Rational> terms_;
};

// Normal-ordered product.  Rewrites Y_j X_i -> X_i Y_j + delta_{ij} S until no
// inversions remain; exact and associative.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
inline AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  return multiply(a, b);
}

AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement power(const AlgebraElement& a, int n);

// Delta = sum_i (X_i^2 + Y_i^2).  The positive sub-Laplacian is -Delta.
AlgebraElement laplacian(int d);

// Product of generators in the order the word lists them.
AlgebraElement word_element(const std::vector<int>& letters, int d);

std::string letter_name(int letter, int d);
std::string to_string(const AlgebraElement& a);

// Grammar: expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
// factor := primary ('^' uint)?; primary := 'X'i | 'Y'i | 'S' | 'Delta' |
// rational | '-' factor | '(' expr ')'.  Throws std::runtime_error with a
// position on malformed input or out-of-range generator indices.
AlgebraElement parse(const std::string& text, int d);

// Commutation of powers of the sub-Laplacian past a word of generators:
//
//   (-Delta)^n D^I = sum_{K,j} C_{K,j} D^K (-Delta)^{n-j} S^j
//   D^I (-Delta)^n = sum_{K,j} C'_{K,j} (-Delta)^{n-j} S^j D^K
//
// where K runs over words of the same length as I.  The constants are built
// by repeatedly commuting one Laplacian factor through one letter, and then
// both identities are re-checked by brute-force normal ordering; `match` is
// the result of that exact comparison.
struct SwapReport {
  bool match = false;
  // key: (word K as letters, S power j) -> constant
  std::map<std::pair<std::vector<int>, int>, Rational> forward;
  std::map<std::pair<std::vector<int>, int>, Rational> reversed;
};

SwapReport verify_swap_identities(int n, const group::MultiIndex& I, int d,
                                  int n_bound = 3);

}  // namespace heisen::algebra
