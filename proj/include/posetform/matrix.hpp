#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "posetform/rational.hpp"

namespace posetform {

using RatVec = std::vector<Rat>;

struct DimensionMismatch : std::runtime_error {
  DimensionMismatch() : std::runtime_error("dimension mismatch") {}
};

// Dense rational matrix, row major. Sizes stay small (n <= ~25).
class RatMat {
 public:
  RatMat() = default;
  RatMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMat(std::initializer_list<std::initializer_list<Rat>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionMismatch();
      for (const auto& v : row) data_.push_back(v);
    }
  }

  static RatMat identity(std::size_t n) {
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool operator==(const RatMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  RatMat transposed() const {
    RatMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  RatMat operator*(const RatMat& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch();
    RatMat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rat& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  RatMat operator+(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch();
    RatMat r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
  }

  RatMat operator-(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch();
    RatMat r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
  }

  RatMat scaled(const Rat& c) const {
    RatMat r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * c;
    return r;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

// row vector * matrix
inline RatVec vec_mat(const RatVec& v, const RatMat& m) {
  if (v.size() != m.rows()) throw DimensionMismatch();
  RatVec r(m.cols());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) r[j] += v[i] * m(i, j);
  }
  return r;
}

inline RatVec mat_vec(const RatMat& m, const RatVec& v) {
  if (v.size() != m.cols()) throw DimensionMismatch();
  RatVec r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += m(i, j) * v[j];
  return r;
}

inline Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch();
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat vec_sum(const RatVec& v) {
  Rat s = 0;
  for (const auto& x : v) s += x;
  return s;
}

inline bool is_zero_vec(const RatVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline RatVec vec_scaled(const RatVec& v, const Rat& c) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * c;
  return r;
}

inline RatVec vec_add(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch();
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline RatVec vec_neg(const RatVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

// Smallest integer multiple: clear denominators, divide by content,
// keep the sign pattern of v.
inline RatVec primitive_integer(const RatVec& v) {
  mpz_class lcm = 1;
  for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> num(v.size());
  mpz_class g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    num[i] = v[i].get_num() * (lcm / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num[i].get_mpz_t());
  }
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    r[i] = (g == 0) ? Rat(0) : Rat(num[i] / g);
  return r;
}

}  // namespace posetform
