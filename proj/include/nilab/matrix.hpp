#pragma once

#include "nilab/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nilab {

/// Dense row-major matrix of exact rationals.
class Mat {
public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);
  Mat(std::size_t rows, std::size_t cols, Vec entries);
  Mat(std::initializer_list<std::initializer_list<long>> rows);

  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Mat from_columns(const std::vector<Vec>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rat> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vec row_vec(std::size_t r) const;
  Vec col_vec(std::size_t c) const;
  const Vec& entries() const { return data_; }

  bool is_zero() const;
  Rat trace() const;
  Mat transpose() const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Rat& c);

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(const Rat& c, Mat a) { return a *= c; }
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Vec operator*(const Mat& a, const Vec& v);
  friend bool operator==(const Mat& a, const Mat& b) = default;

  /// Rows stacked below this one; column counts must agree.
  void append_rows(const Mat& below);

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec data_;
};

Mat commutator(const Mat& a, const Mat& b);
Mat power(const Mat& a, unsigned k);

/// Reduced row echelon form. Pivots are chosen as the first nonzero entry in
/// column order, so the result is canonical for the row space.
struct Echelon {
  Mat reduced;                      // rank rows, all nonzero
  std::vector<std::size_t> pivots;  // pivot column of each row
};

Echelon row_echelon(const Mat& m);

struct RankKernel {
  std::size_t rank = 0;
  /// One vector per free column: 1 in that column, 0 in every other free
  /// column. Laid side by side they form a reduced column-echelon matrix.
  std::vector<Vec> kernel;
};

RankKernel rank_kernel(const Mat& m);
std::size_t rank(const Mat& m);

/// Fraction-free (Bareiss) determinant. Rows are first scaled to integers.
Rat det(const Mat& m);

/// Some solution of m x = b with all free variables set to zero, or nullopt
/// when the system is inconsistent.
std::optional<Vec> solve(const Mat& m, const Vec& b);

/// Inverse of a square nonsingular matrix; throws contract_error if singular.
Mat inverse(const Mat& m);

} // namespace nilab
