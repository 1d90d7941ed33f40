#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "rcoptoric/errors.hpp"

namespace rcoptoric {

/// Exact rational scalar: a fraction of arbitrary-precision integers, always
/// kept in lowest terms. No floating point enters any verification path.
using Rational = mpq_class;

/// Canonical "p/q" rendering in lowest terms; the "/q" part is omitted for
/// integers.
std::string to_string(const Rational& value);

class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rational(0));
  }

  static RationalMatrix identity(int n);
  static RationalMatrix from_int_rows(const std::vector<std::vector<long long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return data_[index(r, c)]; }
  const Rational& at(int r, int c) const { return data_[index(r, c)]; }

  RationalMatrix multiply(const RationalMatrix& other) const;
  RationalMatrix stacked_below(const RationalMatrix& other) const;
  bool is_identity() const;
  bool is_symmetric() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
  std::size_t index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw PreconditionError("matrix index out of range");
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }

  int rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank by fraction-free-in-spirit Gaussian elimination over exact rationals
/// (pivots chosen by smallest representation to curb coefficient growth).
int rational_rank(RationalMatrix m);

/// Exact inverse by Gauss-Jordan elimination. Throws PreconditionError on a
/// singular input.
RationalMatrix invert_exact(const RationalMatrix& m);

} // namespace rcoptoric
