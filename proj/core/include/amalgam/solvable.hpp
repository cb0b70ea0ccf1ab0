#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "amalgam/word.hpp"

namespace amalgam {

// Index lambda of the derived series: delta_0 A = A, delta_{k+1} A = [delta_k A, delta_k A].
struct DerivedLevel {
  int lambda = 0;
};

// Deciding membership in delta_lambda A costs exponentially in lambda; calls
// above this level throw BudgetError unless a larger cap is passed.
inline constexpr int kDefaultMaxDerivedLevel = 4;

// Per-generator exponent sums; w lies in delta_1 A iff all are zero.
std::vector<long> exponent_vector(const Word& w);

// Finite integer combination of free-group words. Terms are merged only when
// the words are freely equal; equality in a derived quotient is what
// ring_is_zero decides.
class GroupRingElement {
 public:
  GroupRingElement() = default;

  void add(const Word& w, long coefficient);
  const std::map<Word, long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // u * e
  GroupRingElement left_multiplied(const Word& u) const;

  friend GroupRingElement operator+(GroupRingElement lhs, const GroupRingElement& rhs);
  friend GroupRingElement operator-(GroupRingElement lhs, const GroupRingElement& rhs);
  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  std::map<Word, long> terms_;  // shortlex word order, no zero coefficients
};

// "+2*ab -1*1" in shortlex word order; "0" for the zero element.
std::string to_string(const GroupRingElement& e);
std::ostream& operator<<(std::ostream& os, const GroupRingElement& e);

// Fox derivative d w / d x_generator (generator is 1-based).
GroupRingElement fox_derivative(const Word& w, int generator);

// Whether e vanishes in Z[A / delta_lambda A].
bool ring_is_zero(const GroupRingElement& e, DerivedLevel level,
                  int max_level = kDefaultMaxDerivedLevel);

// Membership in delta_lambda A. Levels >= 2 use the Magnus criterion: for
// N = delta_{lambda-1} A, w is in N' iff w is in N and every Fox derivative of
// w vanishes in Z[A/N].
bool in_derived(const Word& w, DerivedLevel level, int max_level = kDefaultMaxDerivedLevel);

// u and v are equal in A / delta_lambda A.
bool derived_eq(const Word& u, const Word& v, DerivedLevel level,
                int max_level = kDefaultMaxDerivedLevel);

// Least lambda in [1, max_lambda] with w outside delta_lambda A.
std::optional<int> first_escaping_level(const Word& w, int max_lambda,
                                        int max_level = kDefaultMaxDerivedLevel);

// Integer Laurent polynomial in `rank` commuting variables, stored as a sparse
// exponent-vector -> coefficient map in lexicographic monomial order.
class LaurentPolynomial {
 public:
  using Monomial = std::vector<int>;

  LaurentPolynomial() = default;

  void add(const Monomial& m, long coefficient);
  const std::map<Monomial, long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // X^m * p
  LaurentPolynomial shifted(const Monomial& m) const;

  friend LaurentPolynomial operator+(LaurentPolynomial lhs, const LaurentPolynomial& rhs);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  std::map<Monomial, long> terms_;
};

std::string to_string(const LaurentPolynomial& p);

// Image of a word under the Magnus embedding of A / delta_2 A into the 2x2
// upper-triangular matrices [[X^g, t], [0, 1]] with g in Z^rank and t a vector
// of Laurent polynomials, one coordinate per generator. Generator x_i maps to
// (X_i, e_i); products are (g, t)(g', t') = (g + g', t + X^g t').
class MagnusMatrix {
 public:
  static MagnusMatrix identity(Alphabet alphabet);
  static MagnusMatrix generator(Alphabet alphabet, Letter l);

  const LaurentPolynomial::Monomial& diagonal() const { return diagonal_; }
  const std::vector<LaurentPolynomial>& upper() const { return upper_; }
  bool is_identity() const;

  friend MagnusMatrix operator*(const MagnusMatrix& x, const MagnusMatrix& y);
  friend bool operator==(const MagnusMatrix&, const MagnusMatrix&) = default;

 private:
  LaurentPolynomial::Monomial diagonal_;
  std::vector<LaurentPolynomial> upper_;
};

std::string to_string(const MagnusMatrix& m);

MagnusMatrix magnus_matrix(const Word& w);

}  // namespace amalgam
