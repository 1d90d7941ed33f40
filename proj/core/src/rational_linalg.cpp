#include "rcoptoric/rational_linalg.hpp"

namespace rcoptoric {

std::string to_string(const Rational& value) {
  // Callers may hand in a fraction that was never reduced; never print one.
  Rational reduced = value;
  reduced.canonicalize();
  return reduced.get_str();
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int k = 0; k < n; ++k) m.at(k, k) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_int_rows(const std::vector<std::vector<long long>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  RationalMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
      throw PreconditionError("ragged matrix rows");
    for (int j = 0; j < c; ++j)
      m.at(i, j) = Rational(static_cast<long>(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
  }
  return m;
}

RationalMatrix RationalMatrix::multiply(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw PreconditionError("matrix shape mismatch in multiply");
  RationalMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < other.cols_; ++j) {
        const Rational& b = other.at(k, j);
        if (b != 0) out.at(i, j) += a * b;
      }
    }
  return out;
}

RationalMatrix RationalMatrix::stacked_below(const RationalMatrix& other) const {
  if (cols_ != other.cols_) throw PreconditionError("matrix shape mismatch in stack");
  RationalMatrix out(rows_ + other.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
  for (int i = 0; i < other.rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(rows_ + i, j) = other.at(i, j);
  return out;
}

bool RationalMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool RationalMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

namespace {

// Pivot preference: the nonzero entry whose numerator and denominator are
// smallest in magnitude, which keeps intermediate fractions compact.
std::size_t representation_size(const Rational& q) {
  return mpz_sizeinbase(q.get_num().get_mpz_t(), 2) +
         mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
}

} // namespace

int rational_rank(RationalMatrix m) {
  int rank = 0;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    std::size_t best = 0;
    for (int r = row; r < m.rows(); ++r) {
      if (m.at(r, col) == 0) continue;
      std::size_t size = representation_size(m.at(r, col));
      if (pivot == -1 || size < best) {
        pivot = r;
        best = size;
      }
    }
    if (pivot == -1) continue;
    if (pivot != row)
      for (int c = col; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(row, c));
    for (int r = row + 1; r < m.rows(); ++r) {
      if (m.at(r, col) == 0) continue;
      Rational factor = m.at(r, col) / m.at(row, col);
      m.at(r, col) = 0;
      for (int c = col + 1; c < m.cols(); ++c) m.at(r, c) -= factor * m.at(row, c);
    }
    ++row;
    ++rank;
  }
  return rank;
}

RationalMatrix invert_exact(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("only square matrices invert");
  const int n = m.rows();
  RationalMatrix work = m;
  RationalMatrix inv = RationalMatrix::identity(n);

  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    std::size_t best = 0;
    for (int r = col; r < n; ++r) {
      if (work.at(r, col) == 0) continue;
      std::size_t size = representation_size(work.at(r, col));
      if (pivot == -1 || size < best) {
        pivot = r;
        best = size;
      }
    }
    if (pivot == -1) throw PreconditionError("matrix is singular");
    if (pivot != col)
      for (int c = 0; c < n; ++c) {
        std::swap(work.at(pivot, c), work.at(col, c));
        std::swap(inv.at(pivot, c), inv.at(col, c));
      }
    Rational lead = work.at(col, col);
    for (int c = 0; c < n; ++c) {
      work.at(col, c) /= lead;
      inv.at(col, c) /= lead;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || work.at(r, col) == 0) continue;
      Rational factor = work.at(r, col);
      for (int c = 0; c < n; ++c) {
        work.at(r, c) -= factor * work.at(col, c);
        inv.at(r, c) -= factor * inv.at(col, c);
      }
    }
  }
  return inv;
}

} // namespace rcoptoric
