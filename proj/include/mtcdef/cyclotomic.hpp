#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mtcdef {

using Rat = mpq_class;
using Int = mpz_class;

/** Exact element of a cyclotomic field Q(zeta_N).
 *
 * Values are stored in the power basis 1, z, ..., z^(phi(N)-1) of Q(zeta_N),
 * reduced modulo the N-th cyclotomic polynomial, with arbitrary-precision
 * rational coefficients. Conductors are kept canonical (never 2 mod 4), so
 * every value has a unique representation and zero testing is a coefficient
 * scan. Mixed-conductor arithmetic lifts both operands to the lcm field.
 */
class CycScalar {
 public:
  CycScalar() : n_(1), c_(1, Rat(0)) {}
  explicit CycScalar(const Rat& r) : n_(1), c_(1, r) { c_[0].canonicalize(); }
  explicit CycScalar(long v) : n_(1), c_(1, Rat(v)) {}

  static CycScalar zero() { return CycScalar(); }
  static CycScalar one() { return CycScalar(1); }
  static CycScalar from_rational(const Rat& r) { return CycScalar(r); }

  /** zeta_N^e, stored at the canonical conductor of that root. */
  static CycScalar root_of_unity(long n, long e) {
    if (n <= 0) throw std::invalid_argument("root_of_unity: n must be positive");
    e %= n;
    if (e < 0) e += n;
    long g = std::gcd(e == 0 ? n : e, n);
    n /= g;
    e /= g;
    // zeta_{2m}^e with m odd and e odd equals -zeta_m^{e(m+1)/2 mod m}.
    if (n % 4 == 2) {
      long m = n / 2;
      long e2 = (e % 2 == 0) ? -1 : ((e * ((m + 1) / 2)) % m);
      if (e % 2 == 0) throw std::logic_error("root_of_unity: non-coprime survived");
      CycScalar r = root_of_unity(m, e2);
      return -r;
    }
    const Field& f = field(n);
    CycScalar r;
    r.n_ = n;
    r.c_.assign(f.phi, Rat(0));
    if (e < f.phi) {
      r.c_[e] = 1;
    } else {
      r.c_ = f.rows[e];
    }
    r.shrink_rational();
    return r;
  }

  long conductor() const { return n_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const Rat& x : c_)
      if (x != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  bool is_one() const { return is_rational() && c_[0] == 1; }

  /** Throws unless the value lies in Q. */
  Rat to_rational() const {
    if (!is_rational()) throw std::domain_error("CycScalar: not rational: " + to_string());
    return c_[0];
  }

  friend CycScalar operator+(const CycScalar& a, const CycScalar& b) {
    if (a.n_ == 1 && a.c_[0] == 0) return b;
    if (b.n_ == 1 && b.c_[0] == 0) return a;
    long l = std::lcm(a.n_, b.n_);
    CycScalar x = a.lifted(l), y = b.lifted(l);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    x.shrink_rational();
    return x;
  }
  friend CycScalar operator-(const CycScalar& a, const CycScalar& b) { return a + (-b); }
  CycScalar operator-() const {
    CycScalar r = *this;
    for (Rat& x : r.c_) x = -x;
    return r;
  }

  friend CycScalar operator*(const CycScalar& a, const CycScalar& b) {
    if (a.n_ == 1) return b.scaled(a.c_[0]);
    if (b.n_ == 1) return a.scaled(b.c_[0]);
    long l = std::lcm(a.n_, b.n_);
    CycScalar x = a.lifted(l), y = b.lifted(l);
    const Field& f = field(l);
    std::vector<Rat> prod(2 * f.phi - 1, Rat(0));
    for (size_t i = 0; i < x.c_.size(); ++i) {
      if (x.c_[i] == 0) continue;
      for (size_t j = 0; j < y.c_.size(); ++j) {
        if (y.c_[j] == 0) continue;
        prod[i + j] += x.c_[i] * y.c_[j];
      }
    }
    CycScalar r;
    r.n_ = l;
    r.c_ = reduce(f, prod);
    r.shrink_rational();
    return r;
  }

  CycScalar& operator+=(const CycScalar& o) { return *this = *this + o; }
  CycScalar& operator-=(const CycScalar& o) { return *this = *this - o; }
  CycScalar& operator*=(const CycScalar& o) { return *this = *this * o; }

  CycScalar scaled(const Rat& r) const {
    if (r == 0) return CycScalar();
    CycScalar x = *this;
    for (Rat& v : x.c_) v *= r;
    return x;
  }

  /** Galois action zeta_N -> zeta_N^e, gcd(e, N) = 1. */
  CycScalar galois(long e) const {
    if (n_ == 1) return *this;
    e %= n_;
    if (e < 0) e += n_;
    if (std::gcd(e, n_) != 1) throw std::invalid_argument("galois: exponent not coprime to conductor");
    const Field& f = field(n_);
    std::vector<Rat> poly(f.rmax, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      poly[(long(i) * e) % n_] += c_[i];
    }
    CycScalar r;
    r.n_ = n_;
    r.c_ = reduce(f, poly);
    r.shrink_rational();
    return r;
  }

  /** Complex conjugation (zeta -> zeta^{-1}). */
  CycScalar conj() const { return n_ == 1 ? *this : galois(n_ - 1); }

  CycScalar inv() const {
    if (is_zero()) throw std::domain_error("CycScalar: division by zero");
    if (n_ == 1) {
      CycScalar r;
      r.c_[0] = Rat(1) / c_[0];
      return r;
    }
    // Product of the nontrivial Galois conjugates; x times it is the norm.
    CycScalar y = CycScalar::one();
    for (long e = 2; e < n_; ++e) {
      if (std::gcd(e, n_) != 1) continue;
      y *= galois(e);
    }
    CycScalar nrm = (*this) * y;
    if (!nrm.is_rational()) throw std::logic_error("CycScalar: norm not rational");
    return y.scaled(Rat(1) / nrm.c_[0]);
  }

  CycScalar pow(long k) const {
    if (k < 0) return inv().pow(-k);
    CycScalar r = CycScalar::one(), b = *this;
    while (k) {
      if (k & 1) r *= b;
      b *= b;
      k >>= 1;
    }
    return r;
  }

  friend bool operator==(const CycScalar& a, const CycScalar& b) {
    if (a.n_ == b.n_) return a.c_ == b.c_;
    long l = std::lcm(a.n_, b.n_);
    return a.lifted(l).c_ == b.lifted(l).c_;
  }
  friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

  std::complex<double> to_complex() const {
    std::complex<double> s(0, 0);
    const double tau = 6.283185307179586476925286766559;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      double v = c_[i].get_d();
      s += v * std::polar(1.0, tau * double(i) / double(n_));
    }
    return s;
  }

  /** Rewrites the value at its minimal canonical conductor. */
  CycScalar minimal() const {
    CycScalar x = *this;
    bool again = true;
    while (again && x.n_ > 1) {
      again = false;
      std::vector<long> primes;
      long m = x.n_;
      for (long p = 2; p * p <= m; ++p)
        if (m % p == 0) {
          primes.push_back(p);
          while (m % p == 0) m /= p;
        }
      if (m > 1) primes.push_back(m);
      for (long p : primes) {
        long cand = x.n_ / p;
        if (cand % 4 == 2) cand /= 2;
        if (cand < 1) continue;
        if (x.try_descend(cand)) {
          again = true;
          break;
        }
      }
    }
    return x;
  }

  std::string to_string() const {
    if (is_rational()) return c_[0].get_str();
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      if (!s.empty()) s += " + ";
      s += "(" + c_[i].get_str() + ")";
      if (i > 0) s += "*z" + std::to_string(n_) + "^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
  }

 private:
  long n_;
  std::vector<Rat> c_;

  struct Field {
    long phi = 0;
    long rmax = 0;
    std::vector<std::vector<Rat>> rows;  // x^j mod Phi_N for j < rmax
  };

  static std::vector<Int> poly_xn_minus_1(long n) {
    std::vector<Int> p(n + 1, Int(0));
    p[0] = -1;
    p[n] = 1;
    return p;
  }

  // Exact division by a monic integer polynomial.
  static std::vector<Int> poly_div(std::vector<Int> num, const std::vector<Int>& den) {
    long dn = long(num.size()) - 1, dd = long(den.size()) - 1;
    std::vector<Int> q(dn - dd + 1, Int(0));
    for (long i = dn; i >= dd; --i) {
      Int f = num[i];
      if (f == 0) continue;
      q[i - dd] = f;
      for (long j = 0; j <= dd; ++j) num[i - dd + j] -= f * den[j];
    }
    return q;
  }

  static const std::vector<Int>& cyclo_poly(long n) {
    static std::map<long, std::vector<Int>> memo;
    static std::mutex mx;
    std::lock_guard<std::mutex> lk(mx);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    std::function<const std::vector<Int>&(long)> get = [&](long m) -> const std::vector<Int>& {
      auto jt = memo.find(m);
      if (jt != memo.end()) return jt->second;
      std::vector<Int> p = poly_xn_minus_1(m);
      for (long d = 1; d < m; ++d)
        if (m % d == 0) p = poly_div(std::move(p), get(d));
      return memo.emplace(m, std::move(p)).first->second;
    };
    return get(n);
  }

  static const Field& field(long n) {
    static std::map<long, Field> memo;
    static std::mutex mx;
    std::lock_guard<std::mutex> lk(mx);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    const std::vector<Int>& cp = cyclo_poly(n);
    Field f;
    f.phi = long(cp.size()) - 1;
    f.rmax = std::max(n, 2 * f.phi - 1) + 1;
    f.rows.assign(f.rmax, {});
    for (long j = 0; j < f.phi; ++j) {
      f.rows[j].assign(f.phi, Rat(0));
      f.rows[j][j] = 1;
    }
    for (long j = f.phi; j < f.rmax; ++j) {
      // x^j = x * x^{j-1}; fold the overflow through x^phi = -lower part.
      const std::vector<Rat>& prev = f.rows[j - 1];
      std::vector<Rat> cur(f.phi, Rat(0));
      for (long i = 0; i + 1 < f.phi; ++i) cur[i + 1] = prev[i];
      const Rat& top = prev[f.phi - 1];
      if (top != 0)
        for (long i = 0; i < f.phi; ++i) cur[i] -= top * Rat(cp[i]);
      f.rows[j] = std::move(cur);
    }
    return memo.emplace(n, std::move(f)).first->second;
  }

  static std::vector<Rat> reduce(const Field& f, const std::vector<Rat>& poly) {
    std::vector<Rat> out(f.phi, Rat(0));
    for (size_t j = 0; j < poly.size(); ++j) {
      if (poly[j] == 0) continue;
      if (long(j) < f.phi) {
        out[j] += poly[j];
      } else {
        const std::vector<Rat>& row = f.rows[j];
        for (long i = 0; i < f.phi; ++i)
          if (row[i] != 0) out[i] += poly[j] * row[i];
      }
    }
    return out;
  }

  CycScalar lifted(long m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw std::logic_error("CycScalar: bad lift");
    const Field& f = field(m);
    long step = m / n_;
    std::vector<Rat> poly(f.rmax, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) poly[long(i) * step] += c_[i];
    CycScalar r;
    r.n_ = m;
    r.c_ = reduce(f, poly);
    return r;
  }

  void shrink_rational() {
    if (n_ != 1 && is_rational()) {
      Rat v = c_[0];
      n_ = 1;
      c_.assign(1, v);
    }
  }

  // If the value lies in Q(zeta_cand), rewrite it there and return true.
  bool try_descend(long cand) {
    if (n_ % cand != 0 && !(cand == 1)) return false;
    if (cand == 1) {
      if (!is_rational()) return false;
      shrink_rational();
      return true;
    }
    if (n_ % cand != 0) return false;
    // Invariance under Gal(Q(zeta_N)/Q(zeta_cand)) = { e : e = 1 mod cand }.
    for (long e = 1 + cand; e < n_; e += cand) {
      if (std::gcd(e, n_) != 1) continue;
      if (!(galois(e) == *this)) return false;
    }
    // Solve for coordinates over the subfield's power basis.
    const Field& sub = field(cand);
    const Field& f = field(n_);
    long step = n_ / cand;
    long rows_n = f.phi, cols_n = sub.phi;
    std::vector<std::vector<Rat>> m(rows_n, std::vector<Rat>(cols_n + 1, Rat(0)));
    for (long j = 0; j < cols_n; ++j) {
      const std::vector<Rat>& col = f.rows[j * step];  // zeta_N^{j*step} in the big basis
      for (long i = 0; i < rows_n; ++i) m[i][j] = col[i];
    }
    for (long i = 0; i < rows_n; ++i) m[i][cols_n] = c_[i];
    std::vector<long> pivot_col(rows_n, -1);
    long rank = 0;
    for (long col = 0; col < cols_n && rank < rows_n; ++col) {
      long sel = -1;
      for (long i = rank; i < rows_n; ++i)
        if (m[i][col] != 0) {
          sel = i;
          break;
        }
      if (sel < 0) continue;
      std::swap(m[sel], m[rank]);
      Rat d = m[rank][col];
      for (long j = col; j <= cols_n; ++j) m[rank][j] /= d;
      for (long i = 0; i < rows_n; ++i) {
        if (i == rank || m[i][col] == 0) continue;
        Rat fmul = m[i][col];
        for (long j = col; j <= cols_n; ++j) m[i][j] -= fmul * m[rank][j];
      }
      pivot_col[rank] = col;
      ++rank;
    }
    std::vector<Rat> sol(cols_n, Rat(0));
    for (long i = 0; i < rank; ++i) sol[pivot_col[i]] = m[i][cols_n];
    for (long i = rank; i < rows_n; ++i)
      if (m[i][cols_n] != 0) return false;  // inconsistent; not actually in subfield
    n_ = cand;
    c_ = std::move(sol);
    shrink_rational();
    return true;
  }
};

inline CycScalar operator*(const Rat& r, const CycScalar& x) { return x.scaled(r); }

}  // namespace mtcdef
