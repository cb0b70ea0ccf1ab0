#include "amalgam/smith.hpp"

#include <cstdlib>
#include <utility>

#include "amalgam/errors.hpp"

namespace amalgam {
namespace {

class Reducer {
 public:
  Reducer(IntMatrix m, std::size_t columns) : a_(std::move(m)), rows_(a_.size()), cols_(columns) {
    for (auto& row : a_)
      if (row.size() != cols_) throw DomainError("relation matrix rows must all have the same length");
    q_.assign(cols_, std::vector<long long>(cols_, 0));
    for (std::size_t i = 0; i < cols_; ++i) q_[i][i] = 1;
  }

  SmithForm run() {
    SmithForm out;
    out.columns = cols_;
    for (std::size_t t = 0; t < std::min(rows_, cols_); ++t) {
      if (!move_smallest_to(t)) break;
      bool clean = false;
      while (!clean) {
        clean = true;
        for (std::size_t i = t + 1; i < rows_; ++i) {
          if (a_[i][t] == 0) continue;
          add_row(i, t, -(a_[i][t] / a_[t][t]));
          if (a_[i][t] != 0) {
            std::swap(a_[i], a_[t]);
            clean = false;
          }
        }
        for (std::size_t j = t + 1; j < cols_; ++j) {
          if (a_[t][j] == 0) continue;
          add_col(j, t, -(a_[t][j] / a_[t][t]));
          if (a_[t][j] != 0) {
            swap_cols(t, j);
            clean = false;
          }
        }
        if (!clean) continue;
        // Enforce d_t | every remaining entry.
        for (std::size_t i = t + 1; i < rows_ && clean; ++i)
          for (std::size_t j = t + 1; j < cols_ && clean; ++j)
            if (a_[i][j] % a_[t][t] != 0) {
              add_row(t, i, 1);
              clean = false;
            }
      }
      out.invariants.push_back(std::llabs(a_[t][t]));
    }
    out.column_transform = std::move(q_);
    return out;
  }

 private:
  bool move_smallest_to(std::size_t t) {
    std::size_t bi = rows_, bj = cols_;
    long long best = 0;
    for (std::size_t i = t; i < rows_; ++i)
      for (std::size_t j = t; j < cols_; ++j)
        if (a_[i][j] != 0 && (best == 0 || std::llabs(a_[i][j]) < best)) {
          best = std::llabs(a_[i][j]);
          bi = i;
          bj = j;
        }
    if (best == 0) return false;
    std::swap(a_[bi], a_[t]);
    swap_cols(bj, t);
    return true;
  }

  // row_dst += k * row_src
  void add_row(std::size_t dst, std::size_t src, long long k) {
    for (std::size_t j = 0; j < cols_; ++j) a_[dst][j] += k * a_[src][j];
  }

  // col_dst += k * col_src, mirrored in Q
  void add_col(std::size_t dst, std::size_t src, long long k) {
    for (std::size_t i = 0; i < rows_; ++i) a_[i][dst] += k * a_[i][src];
    for (std::size_t i = 0; i < cols_; ++i) q_[i][dst] += k * q_[i][src];
  }

  void swap_cols(std::size_t x, std::size_t y) {
    if (x == y) return;
    for (auto& row : a_) std::swap(row[x], row[y]);
    for (auto& row : q_) std::swap(row[x], row[y]);
  }

  IntMatrix a_;
  std::size_t rows_;
  std::size_t cols_;
  IntMatrix q_;
};

}  // namespace

std::vector<long long> SmithForm::transform(const std::vector<long long>& v) const {
  if (v.size() != columns) throw DomainError("vector length does not match the relation matrix");
  std::vector<long long> y(columns, 0);
  for (std::size_t j = 0; j < columns; ++j)
    for (std::size_t i = 0; i < columns; ++i) y[j] += v[i] * column_transform[i][j];
  return y;
}

bool SmithForm::in_row_space(const std::vector<long long>& v) const {
  const std::vector<long long> y = transform(v);
  for (std::size_t j = 0; j < columns; ++j) {
    if (j < invariants.size()) {
      if (y[j] % invariants[j] != 0) return false;
    } else if (y[j] != 0) {
      return false;
    }
  }
  return true;
}

SmithForm smith_normal_form(const IntMatrix& m, std::size_t columns) { return Reducer(m, columns).run(); }

}  // namespace amalgam
