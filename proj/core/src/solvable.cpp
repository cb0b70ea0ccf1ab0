#include "amalgam/solvable.hpp"

#include <ostream>
#include <sstream>

#include "amalgam/errors.hpp"

namespace amalgam {
namespace {

void check_level(DerivedLevel level, int max_level) {
  if (level.lambda < 0) throw DomainError("derived level must be non-negative");
  if (level.lambda > max_level)
    throw BudgetError("derived level " + std::to_string(level.lambda) + " exceeds the cap of " +
                      std::to_string(max_level));
}

std::string format_coefficient(long c, bool first) {
  if (first) return (c < 0 ? "-" : "+") + std::to_string(c < 0 ? -c : c);
  return std::string(c < 0 ? " -" : " +") + std::to_string(c < 0 ? -c : c);
}

}  // namespace

std::vector<long> exponent_vector(const Word& w) {
  std::vector<long> out(static_cast<std::size_t>(w.rank()), 0);
  for (Letter l : w.letters()) out[static_cast<std::size_t>(generator_of(l) - 1)] += l > 0 ? 1 : -1;
  return out;
}

void GroupRingElement::add(const Word& w, long coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(w, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement GroupRingElement::left_multiplied(const Word& u) const {
  GroupRingElement out;
  for (const auto& [w, c] : terms_) out.add(mul(u, w), c);
  return out;
}

GroupRingElement operator+(GroupRingElement lhs, const GroupRingElement& rhs) {
  for (const auto& [w, c] : rhs.terms_) lhs.add(w, c);
  return lhs;
}

GroupRingElement operator-(GroupRingElement lhs, const GroupRingElement& rhs) {
  for (const auto& [w, c] : rhs.terms_) lhs.add(w, -c);
  return lhs;
}

std::string to_string(const GroupRingElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : e.terms()) {
    out += format_coefficient(c, first) + "*" + to_string(w);
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const GroupRingElement& e) { return os << to_string(e); }

GroupRingElement fox_derivative(const Word& w, int generator) {
  if (generator < 1 || generator > w.rank())
    throw DomainError("generator index " + std::to_string(generator) + " out of range for rank " +
                      std::to_string(w.rank()));
  // d(y_1...y_n) = sum_k y_1...y_{k-1} d(y_k); d(x) = 1, d(x^-1) = -x^-1.
  GroupRingElement out;
  for (std::size_t k = 0; k < w.length(); ++k) {
    if (w[k] == generator)
      out.add(w.slice(0, k), 1);
    else if (w[k] == -generator)
      out.add(w.slice(0, k + 1), -1);
  }
  return out;
}

bool ring_is_zero(const GroupRingElement& e, DerivedLevel level, int max_level) {
  check_level(level, max_level);
  if (e.is_zero()) return true;
  if (level.lambda == 0) {
    long total = 0;
    for (const auto& [w, c] : e.terms()) total += c;
    return total == 0;
  }
  // delta_lambda-classes refine exponent-vector classes, so bucket by those
  // first and compare pairwise only inside a bucket.
  std::map<std::vector<long>, std::vector<std::pair<Word, long>>> buckets;
  for (const auto& [w, c] : e.terms()) {
    auto& classes = buckets[exponent_vector(w)];
    if (level.lambda == 1) {
      if (classes.empty()) classes.emplace_back(w, 0);
      classes.front().second += c;
      continue;
    }
    bool placed = false;
    for (auto& [rep, sum] : classes) {
      if (derived_eq(rep, w, level, max_level)) {
        sum += c;
        placed = true;
        break;
      }
    }
    if (!placed) classes.emplace_back(w, c);
  }
  for (const auto& [key, classes] : buckets)
    for (const auto& [rep, sum] : classes)
      if (sum != 0) return false;
  return true;
}

bool in_derived(const Word& w, DerivedLevel level, int max_level) {
  check_level(level, max_level);
  if (level.lambda == 0 || w.empty()) return true;
  for (long e : exponent_vector(w))
    if (e != 0) return false;
  if (level.lambda == 1) return true;
  const DerivedLevel below{level.lambda - 1};
  if (!in_derived(w, below, max_level)) return false;
  for (int i = 1; i <= w.rank(); ++i)
    if (!ring_is_zero(fox_derivative(w, i), below, max_level)) return false;
  return true;
}

bool derived_eq(const Word& u, const Word& v, DerivedLevel level, int max_level) {
  return in_derived(mul(u, inv(v)), level, max_level);
}

std::optional<int> first_escaping_level(const Word& w, int max_lambda, int max_level) {
  for (int lambda = 1; lambda <= max_lambda; ++lambda)
    if (!in_derived(w, DerivedLevel{lambda}, max_level)) return lambda;
  return std::nullopt;
}

void LaurentPolynomial::add(const Monomial& m, long coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(m, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial LaurentPolynomial::shifted(const Monomial& m) const {
  LaurentPolynomial out;
  for (const auto& [mono, c] : terms_) {
    Monomial sum = mono;
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += m[i];
    out.terms_.emplace(std::move(sum), c);
  }
  return out;
}

LaurentPolynomial operator+(LaurentPolynomial lhs, const LaurentPolynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) lhs.add(m, c);
  return lhs;
}

std::string to_string(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, c] : p.terms()) {
    out += format_coefficient(c, first);
    first = false;
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i] == 0) continue;
      out += "*X" + std::to_string(i + 1);
      if (mono[i] != 1) out += "^" + std::to_string(mono[i]);
    }
  }
  return out;
}

MagnusMatrix MagnusMatrix::identity(Alphabet alphabet) {
  MagnusMatrix m;
  m.diagonal_.assign(static_cast<std::size_t>(alphabet.rank()), 0);
  m.upper_.assign(static_cast<std::size_t>(alphabet.rank()), LaurentPolynomial{});
  return m;
}

MagnusMatrix MagnusMatrix::generator(Alphabet alphabet, Letter l) {
  if (!alphabet.contains(l)) throw DomainError("letter outside alphabet");
  MagnusMatrix m = identity(alphabet);
  const std::size_t i = static_cast<std::size_t>(generator_of(l) - 1);
  if (l > 0) {
    m.diagonal_[i] = 1;
    m.upper_[i].add(LaurentPolynomial::Monomial(m.diagonal_.size(), 0), 1);
  } else {
    // (X_i, e_i)^-1 = (X_i^-1, -X_i^-1 e_i)
    m.diagonal_[i] = -1;
    m.upper_[i].add(m.diagonal_, -1);
  }
  return m;
}

bool MagnusMatrix::is_identity() const {
  for (int e : diagonal_)
    if (e != 0) return false;
  for (const auto& p : upper_)
    if (!p.is_zero()) return false;
  return true;
}

MagnusMatrix operator*(const MagnusMatrix& x, const MagnusMatrix& y) {
  if (x.diagonal_.size() != y.diagonal_.size()) throw DomainError("Magnus matrix rank mismatch");
  MagnusMatrix out;
  out.diagonal_ = x.diagonal_;
  for (std::size_t i = 0; i < out.diagonal_.size(); ++i) out.diagonal_[i] += y.diagonal_[i];
  out.upper_.reserve(x.upper_.size());
  for (std::size_t i = 0; i < x.upper_.size(); ++i) out.upper_.push_back(x.upper_[i] + y.upper_[i].shifted(x.diagonal_));
  return out;
}

std::string to_string(const MagnusMatrix& m) {
  std::ostringstream os;
  os << "diag X^(";
  for (std::size_t i = 0; i < m.diagonal().size(); ++i) os << (i ? "," : "") << m.diagonal()[i];
  os << ") upper [";
  for (std::size_t i = 0; i < m.upper().size(); ++i) os << (i ? "; " : "") << to_string(m.upper()[i]);
  os << "]";
  return os.str();
}

MagnusMatrix magnus_matrix(const Word& w) {
  const Alphabet alphabet = w.alphabet();
  MagnusMatrix out = MagnusMatrix::identity(alphabet);
  for (Letter l : w.letters()) out = out * MagnusMatrix::generator(alphabet, l);
  return out;
}

}  // namespace amalgam
