#include "nilab/matrix.hpp"
#include "nilab/errors.hpp"

#include <sstream>
#include <utility>

namespace nilab {

Mat::Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

Mat::Mat(std::size_t rows, std::size_t cols, Vec entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols)
    throw shape_error("entry count does not match matrix shape");
}

Mat::Mat(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_)
      throw shape_error("ragged matrix literal");
    for (long x : r)
      data_.emplace_back(x);
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw shape_error("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = rows[r][c];
  }
  return m;
}

Mat Mat::from_columns(const std::vector<Vec>& columns, std::size_t rows) {
  Mat m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows)
      throw shape_error("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r)
      m(r, c) = columns[c][r];
  }
  return m;
}

Vec Mat::row_vec(std::size_t r) const { return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

Vec Mat::col_vec(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    v[r] = (*this)(r, c);
  return v;
}

bool Mat::is_zero() const { return nilab::is_zero(data_); }

Rat Mat::trace() const {
  if (!square())
    throw shape_error("trace of non-square matrix");
  Rat t = 0;
  for (std::size_t i = 0; i < rows_; ++i)
    t += (*this)(i, i);
  return t;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

Mat& Mat::operator+=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw shape_error("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] += o.data_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw shape_error("matrix difference shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] -= o.data_[i];
  return *this;
}

Mat& Mat::operator*=(const Rat& c) {
  for (auto& x : data_)
    x *= c;
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_)
    throw shape_error("matrix product shape mismatch");
  Mat p(a.rows_, b.cols_);
  Rat tmp;
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat& aik = a(i, k);
      if (sgn(aik) == 0)
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rat& bkj = b(k, j);
        if (sgn(bkj) == 0)
          continue;
        tmp = aik * bkj;
        p(i, j) += tmp;
      }
    }
  return p;
}

Vec operator*(const Mat& a, const Vec& v) {
  if (a.cols_ != v.size())
    throw shape_error("matrix-vector shape mismatch");
  Vec r(a.rows_, Rat(0));
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (sgn(a(i, k)) != 0 && sgn(v[k]) != 0)
        r[i] += a(i, k) * v[k];
  return r;
}

void Mat::append_rows(const Mat& below) {
  if (rows_ == 0 && cols_ == 0) {
    *this = below;
    return;
  }
  if (below.cols_ != cols_)
    throw shape_error("cannot stack matrices with different column counts");
  data_.insert(data_.end(), below.data_.begin(), below.data_.end());
  rows_ += below.rows_;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c)
      os << (c ? ", " : "") << (*this)(r, c).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

Mat power(const Mat& a, unsigned k) {
  if (!a.square())
    throw shape_error("power of non-square matrix");
  Mat result = Mat::identity(a.rows());
  for (unsigned i = 0; i < k; ++i)
    result = result * a;
  return result;
}

Echelon row_echelon(const Mat& m) {
  Mat a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  Rat factor;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a(p, c)) == 0)
      ++p;
    if (p == rows)
      continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(a(p, j), a(r, j));
    Rat inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j)
      if (sgn(a(r, j)) != 0)
        a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a(i, c)) == 0)
        continue;
      Rat f = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(a(r, j)) != 0) {
          factor = f * a(r, j);
          a(i, j) -= factor;
        }
    }
    pivots.push_back(c);
    ++r;
  }
  Mat reduced(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      reduced(i, j) = a(i, j);
  return {std::move(reduced), std::move(pivots)};
}

RankKernel rank_kernel(const Mat& m) {
  Echelon e = row_echelon(m);
  RankKernel out;
  out.rank = e.pivots.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots)
    is_pivot[p] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f])
      continue;
    Vec v(m.cols(), Rat(0));
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      v[e.pivots[i]] = -e.reduced(i, f);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const Mat& m) { return row_echelon(m).pivots.size(); }

Rat det(const Mat& m) {
  if (!m.square())
    throw shape_error("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0)
    return 1;
  std::vector<Int> a(n * n);
  Int scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Int l = 1;
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    scale *= l;
    for (std::size_t j = 0; j < n; ++j)
      a[i * n + j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  auto at = [&](std::size_t i, std::size_t j) -> Int& { return a[i * n + j]; };
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0)
        ++p;
      if (p == n)
        return 0;
      for (std::size_t j = 0; j < n; ++j)
        std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = at(k, k) * at(i, j) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  Rat d(Int(sign * at(n - 1, n - 1)), scale);
  d.canonicalize();
  return d;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (b.size() != m.rows())
    throw shape_error("right-hand side length mismatch");
  Mat aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Echelon e = row_echelon(aug);
  Vec x(m.cols(), Rat(0));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == m.cols())
      return std::nullopt;
    x[e.pivots[i]] = e.reduced(i, m.cols());
  }
  return x;
}

Mat inverse(const Mat& m) {
  if (!m.square())
    throw shape_error("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = row_echelon(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
    throw contract_error("matrix is singular");
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv(i, j) = e.reduced(i, n + j);
  return inv;
}

} // namespace nilab
