#pragma once

#include "mtcdef/cyclotomic.hpp"

#include <cassert>
#include <vector>

namespace mtcdef {

/** Dense exact matrix over cyclotomic scalars. */
class Mat {
 public:
  Mat() : r_(0), c_(0) {}
  Mat(long r, long c) : r_(r), c_(c), d_(r * c) {}

  static Mat identity(long n) {
    Mat m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = CycScalar::one();
    return m;
  }

  long rows() const { return r_; }
  long cols() const { return c_; }
  CycScalar& at(long i, long j) { return d_[i * c_ + j]; }
  const CycScalar& at(long i, long j) const { return d_[i * c_ + j]; }

  friend Mat operator*(const Mat& a, const Mat& b) {
    assert(a.c_ == b.r_);
    Mat m(a.r_, b.c_);
    for (long i = 0; i < a.r_; ++i)
      for (long l = 0; l < a.c_; ++l) {
        const CycScalar& v = a.at(i, l);
        if (v.is_zero()) continue;
        for (long j = 0; j < b.c_; ++j) {
          if (b.at(l, j).is_zero()) continue;
          m.at(i, j) += v * b.at(l, j);
        }
      }
    return m;
  }
  friend Mat operator+(const Mat& a, const Mat& b) {
    assert(a.r_ == b.r_ && a.c_ == b.c_);
    Mat m = a;
    for (size_t i = 0; i < m.d_.size(); ++i) m.d_[i] += b.d_[i];
    return m;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    assert(a.r_ == b.r_ && a.c_ == b.c_);
    Mat m = a;
    for (size_t i = 0; i < m.d_.size(); ++i) m.d_[i] -= b.d_[i];
    return m;
  }
  Mat scaled(const CycScalar& s) const {
    Mat m = *this;
    for (auto& v : m.d_) v *= s;
    return m;
  }
  friend bool operator==(const Mat& a, const Mat& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) return false;
    for (size_t i = 0; i < a.d_.size(); ++i)
      if (a.d_[i] != b.d_[i]) return false;
    return true;
  }

  Mat transpose() const {
    Mat m(c_, r_);
    for (long i = 0; i < r_; ++i)
      for (long j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  bool is_zero() const {
    for (const auto& v : d_)
      if (!v.is_zero()) return false;
    return true;
  }

  struct Ech;

  Ech rref() const;
  long rank() const;
  CycScalar det() const;
  Mat inverse() const;

  /** Columns span the kernel. */
  Mat kernel_basis() const;

  /** One solution of Ax = b, or empty if inconsistent. */
  std::vector<CycScalar> solve(const std::vector<CycScalar>& b) const;

 private:
  long r_, c_;
  std::vector<CycScalar> d_;
};

struct Mat::Ech {
  Mat m;                     // reduced row echelon form
  long rank = 0;
  std::vector<long> pivots;  // pivot column per echelon row
};

inline Mat::Ech Mat::rref() const {
  Ech e{*this, 0, {}};
  Mat& m = e.m;
  long row = 0;
  for (long col = 0; col < c_ && row < r_; ++col) {
    long sel = -1;
    for (long i = row; i < r_; ++i)
      if (!m.at(i, col).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (long j = 0; j < c_; ++j) std::swap(m.at(sel, j), m.at(row, j));
    CycScalar piv = m.at(row, col).inv();
    for (long j = col; j < c_; ++j) m.at(row, j) *= piv;
    for (long i = 0; i < r_; ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      CycScalar f = m.at(i, col);
      for (long j = col; j < c_; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.rank = row;
  return e;
}

inline long Mat::rank() const { return rref().rank; }

inline CycScalar Mat::det() const {
  assert(r_ == c_);
  Mat m = *this;
  CycScalar acc = CycScalar::one();
  for (long col = 0; col < c_; ++col) {
    long sel = -1;
    for (long i = col; i < r_; ++i)
      if (!m.at(i, col).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) return CycScalar::zero();
    if (sel != col) {
      for (long j = 0; j < c_; ++j) std::swap(m.at(sel, j), m.at(col, j));
      acc = -acc;
    }
    acc *= m.at(col, col);
    CycScalar piv = m.at(col, col).inv();
    for (long i = col + 1; i < r_; ++i) {
      if (m.at(i, col).is_zero()) continue;
      CycScalar f = m.at(i, col) * piv;
      for (long j = col; j < c_; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return acc;
}

inline Mat Mat::inverse() const {
  assert(r_ == c_);
  Mat aug(r_, 2 * c_);
  for (long i = 0; i < r_; ++i) {
    for (long j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, c_ + i) = CycScalar::one();
  }
  Ech e = aug.rref();
  if (e.rank < r_) throw std::domain_error("Mat: singular");
  Mat inv(r_, c_);
  for (long i = 0; i < r_; ++i)
    for (long j = 0; j < c_; ++j) inv.at(i, j) = e.m.at(i, c_ + j);
  return inv;
}

inline Mat Mat::kernel_basis() const {
  Ech e = rref();
  std::vector<bool> is_piv(c_, false);
  for (long p : e.pivots) is_piv[p] = true;
  long nfree = c_ - e.rank;
  Mat ker(c_, nfree);
  long idx = 0;
  for (long col = 0; col < c_; ++col) {
    if (is_piv[col]) continue;
    ker.at(col, idx) = CycScalar::one();
    for (long i = 0; i < e.rank; ++i) ker.at(e.pivots[i], idx) = -e.m.at(i, col);
    ++idx;
  }
  return ker;
}

inline std::vector<CycScalar> Mat::solve(const std::vector<CycScalar>& b) const {
  assert(long(b.size()) == r_);
  Mat aug(r_, c_ + 1);
  for (long i = 0; i < r_; ++i) {
    for (long j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, c_) = b[i];
  }
  Ech e = aug.rref();
  for (long i = 0; i < r_; ++i) {
    bool all0 = true;
    for (long j = 0; j < c_; ++j)
      if (!e.m.at(i, j).is_zero()) {
        all0 = false;
        break;
      }
    if (all0 && !e.m.at(i, c_).is_zero()) return {};
  }
  std::vector<CycScalar> x(c_);
  for (long i = 0; i < e.rank; ++i)
    if (e.pivots[i] < c_) x[e.pivots[i]] = e.m.at(i, c_);
  return x;
}

}  // namespace mtcdef
