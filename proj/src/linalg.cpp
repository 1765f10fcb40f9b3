#include "mvkit/linalg.hpp"

#include <numeric>

namespace mvkit {

const char* errc_name(errc c) {
  switch (c) {
    case errc::not_gcm: return "NotGCM";
    case errc::not_symmetrizable: return "NotSymmetrizable";
    case errc::bad_symmetrizer: return "BadSymmetrizer";
    case errc::bad_orientation: return "BadOrientation";
    case errc::missing_orientation: return "MissingOrientation";
    case errc::incompatible_pairs: return "IncompatiblePairs";
    case errc::not_finite_type: return "NotFiniteType";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::size_guard: return "SizeGuard";
    case errc::not_reduced: return "NotReduced";
    case errc::not_reduced_target: return "NotReducedTarget";
    case errc::non_integral: return "NonIntegral";
    case errc::negative_multiplicity: return "NegativeMultiplicity";
    case errc::bad_window: return "BadWindow";
    case errc::g2_unsupported: return "G2Unsupported";
    case errc::nonneg_violation: return "NonnegViolation";
    case errc::on_wall: return "OnWall";
    case errc::phi_nonzero: return "PhiNonzero";
    case errc::non_termination: return "NonTermination";
    case errc::overflow: return "Overflow";
    case errc::bad_input: return "BadInput";
  }
  return "Unknown";
}

i64 chk_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) fail(errc::overflow, "integer overflow in addition");
  return r;
}

i64 chk_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) fail(errc::overflow, "integer overflow in subtraction");
  return r;
}

i64 chk_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) fail(errc::overflow, "integer overflow in multiplication");
  return r;
}

Rational::Rational(i64 n, i64 d) {
  if (d == 0) fail(errc::overflow, "rational with zero denominator");
  if (d < 0) { n = chk_sub(0, n); d = chk_sub(0, d); }
  i64 g = std::gcd(n < 0 ? -n : n, d);
  if (g > 1) { n /= g; d /= g; }
  num_ = n;
  den_ = d;
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(chk_add(chk_mul(num_, o.den_), chk_mul(o.num_, den_)), chk_mul(den_, o.den_));
}
Rational Rational::operator-(const Rational& o) const {
  return Rational(chk_sub(chk_mul(num_, o.den_), chk_mul(o.num_, den_)), chk_mul(den_, o.den_));
}
Rational Rational::operator*(const Rational& o) const {
  return Rational(chk_mul(num_, o.num_), chk_mul(den_, o.den_));
}
Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) fail(errc::overflow, "rational division by zero");
  return Rational(chk_mul(num_, o.den_), chk_mul(den_, o.num_));
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  Mat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      i64 v = (*this)(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols_; ++j)
        r(i, j) = chk_add(r(i, j), chk_mul(v, o(k, j)));
    }
  return r;
}

IntVec Mat::operator*(const IntVec& v) const {
  IntVec r(rows_, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      r[i] = chk_add(r[i], chk_mul((*this)(i, j), v[j]));
  return r;
}

Mat Mat::transposed() const {
  Mat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

IntVec Mat::column(int c) const {
  IntVec r(rows_);
  for (int i = 0; i < rows_; ++i) r[i] = (*this)(i, c);
  return r;
}

size_t MatHash::operator()(const Mat& m) const {
  size_t h = std::hash<int>()(m.rows()) * 1000003u + std::hash<int>()(m.cols());
  for (i64 v : m.data()) h = h * 1099511628211ULL + std::hash<i64>()(v);
  return h;
}

size_t VecHash::operator()(const IntVec& v) const {
  size_t h = v.size();
  for (i64 x : v) h = h * 1099511628211ULL + std::hash<i64>()(x);
  return h;
}

IntVec unit_vec(int n, int i) {
  IntVec v(n, 0);
  v[i] = 1;
  return v;
}

IntVec vec_add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = chk_add(a[i], b[i]);
  return r;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = chk_sub(a[i], b[i]);
  return r;
}

IntVec vec_scale(i64 k, const IntVec& a) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = chk_mul(k, a[i]);
  return r;
}

i64 dot(const IntVec& a, const IntVec& b) {
  i64 s = 0;
  for (size_t i = 0; i < a.size(); ++i) s = chk_add(s, chk_mul(a[i], b[i]));
  return s;
}

bool is_zero(const IntVec& a) {
  for (i64 v : a)
    if (v != 0) return false;
  return true;
}

i64 det(const Mat& m) {
  int n = m.rows();
  if (n != m.cols()) fail(errc::bad_input, "determinant of non-square matrix");
  if (n == 0) return 1;
  Mat a = m;
  i64 sign = 1, prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      int p = -1;
      for (int r = k + 1; r < n; ++r)
        if (a(r, k) != 0) { p = r; break; }
      if (p < 0) return 0;
      for (int c = k; c < n; ++c) std::swap(a(k, c), a(p, c));
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r)
      for (int c = k + 1; c < n; ++c) {
        i64 v = chk_sub(chk_mul(a(r, c), a(k, k)), chk_mul(a(r, k), a(k, c)));
        // Bareiss division is exact
        a(r, c) = v / prev;
      }
    prev = a(k, k);
  }
  return chk_mul(sign, a(n - 1, n - 1));
}

std::optional<std::vector<Rational>> solve_rational(const Mat& m, const std::vector<Rational>& rhs) {
  int n = m.rows();
  if (n != m.cols() || int(rhs.size()) != n) fail(errc::bad_input, "solve: shape mismatch");
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
    a[i][n] = rhs[i];
  }
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int r = k; r < n; ++r)
      if (a[r][k].sign() != 0) { p = r; break; }
    if (p < 0) return std::nullopt;
    std::swap(a[k], a[p]);
    for (int r = 0; r < n; ++r) {
      if (r == k || a[r][k].sign() == 0) continue;
      Rational f = a[r][k] / a[k][k];
      for (int c = k; c <= n; ++c) a[r][c] = a[r][c] - f * a[k][c];
    }
  }
  std::vector<Rational> x(n);
  for (int i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

IntVec solve_integer(const Mat& m, const IntVec& rhs) {
  std::vector<Rational> r(rhs.size());
  for (size_t i = 0; i < rhs.size(); ++i) r[i] = Rational(rhs[i]);
  auto x = solve_rational(m, r);
  if (!x) fail(errc::non_integral, "singular system");
  IntVec out(x->size());
  for (size_t i = 0; i < x->size(); ++i) {
    if (!(*x)[i].is_integer()) fail(errc::non_integral, "solution is not integral");
    out[i] = (*x)[i].num();
  }
  return out;
}

Mat integer_inverse(const Mat& m) {
  int n = m.rows();
  Mat inv(n, n);
  for (int c = 0; c < n; ++c) {
    IntVec col = solve_integer(m, unit_vec(n, c));
    for (int r = 0; r < n; ++r) inv(r, c) = col[r];
  }
  return inv;
}

bool is_positive_definite(const Mat& sym) {
  int n = sym.rows();
  // Sylvester: all leading principal minors positive.
  for (int k = 1; k <= n; ++k) {
    Mat sub(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub(i, j) = sym(i, j);
    if (det(sub) <= 0) return false;
  }
  return true;
}

bool is_positive_semidefinite(const Mat& sym) {
  int n = sym.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Rational(sym(i, j));
  std::vector<bool> done(n, false);
  for (int step = 0; step < n; ++step) {
    int piv = -1;
    for (int k = 0; k < n; ++k) {
      if (done[k]) continue;
      if (a[k][k].sign() < 0) return false;
      if (a[k][k].sign() > 0) { piv = k; break; }
    }
    if (piv < 0) {
      // all remaining diagonal entries are zero: psd forces zero rows
      for (int k = 0; k < n; ++k) {
        if (done[k]) continue;
        for (int j = 0; j < n; ++j)
          if (!done[j] && a[k][j].sign() != 0) return false;
      }
      return true;
    }
    for (int r = 0; r < n; ++r) {
      if (done[r] || r == piv || a[r][piv].sign() == 0) continue;
      Rational f = a[r][piv] / a[piv][piv];
      for (int c = 0; c < n; ++c)
        if (!done[c]) a[r][c] = a[r][c] - f * a[piv][c];
    }
    done[piv] = true;
  }
  return true;
}

}  // namespace mvkit
