#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "mvkit/errors.hpp"

namespace mvkit {

using i64 = std::int64_t;
using IntVec = std::vector<i64>;

// Checked 64-bit arithmetic: overflow is a hard error, never wraparound.
i64 chk_add(i64 a, i64 b);
i64 chk_sub(i64 a, i64 b);
i64 chk_mul(i64 a, i64 b);

// Exact rational with checked i64 numerator/denominator, den > 0.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(i64 n) : num_(n), den_(1) {}
  Rational(i64 n, i64 d);
  i64 num() const { return num_; }
  i64 den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational operator-() const { return Rational(chk_sub(0, num_), den_); }
  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }

 private:
  i64 num_, den_;
};

// Dense row-major integer matrix; dimensions are tiny (Cartan rank sized).
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}
  static Mat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  i64& operator()(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  i64 operator()(int r, int c) const { return a_[size_t(r) * cols_ + c]; }
  const std::vector<i64>& data() const { return a_; }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  Mat operator*(const Mat& o) const;
  IntVec operator*(const IntVec& v) const;
  Mat transposed() const;
  IntVec column(int c) const;

 private:
  int rows_, cols_;
  std::vector<i64> a_;
};

struct MatHash {
  size_t operator()(const Mat& m) const;
};

struct VecHash {
  size_t operator()(const IntVec& v) const;
};

IntVec unit_vec(int n, int i);
IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_scale(i64 k, const IntVec& a);
i64 dot(const IntVec& a, const IntVec& b);
bool is_zero(const IntVec& a);

// Exact determinant (Bareiss, fraction-free).
i64 det(const Mat& m);

// Solve m x = rhs exactly over the rationals; nullopt when singular/inconsistent.
std::optional<std::vector<Rational>> solve_rational(const Mat& m, const std::vector<Rational>& rhs);

// Integer solve: error `non_integral` if the exact solution is fractional.
IntVec solve_integer(const Mat& m, const IntVec& rhs);

// Inverse of an integer matrix whose inverse is again integral (|det| = 1 in
// all our uses); error `non_integral` otherwise.
Mat integer_inverse(const Mat& m);

// Definiteness of a symmetric integer matrix, exact.
bool is_positive_definite(const Mat& sym);
bool is_positive_semidefinite(const Mat& sym);

}  // namespace mvkit
