#pragma once

#include <cstddef>
#include <vector>

namespace amalgam {

using IntMatrix = std::vector<std::vector<long long>>;

// Smith normal form P * M * Q = diag(d_1, ..., d_k, 0, ...) with d_i > 0 and
// d_i | d_{i+1}. Only the column transform Q is kept: it is what maps a row
// vector into invariant-factor coordinates.
struct SmithForm {
  std::size_t columns = 0;
  std::vector<long long> invariants;  // d_1..d_k
  IntMatrix column_transform;         // Q, columns x columns, unimodular

  std::size_t rank() const { return invariants.size(); }
  // y = v * Q
  std::vector<long long> transform(const std::vector<long long>& v) const;
  // Whether v lies in the row space of M over the integers.
  bool in_row_space(const std::vector<long long>& v) const;
};

SmithForm smith_normal_form(const IntMatrix& m, std::size_t columns);

}  // namespace amalgam
