#pragma once

#include "mtcdef/fusion.hpp"
#include "mtcdef/matrix.hpp"

#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <unordered_map>

namespace mtcdef {

/** One F-move block: the change of basis for fixed outer labels (a,b,c;d).
 *
 * Rows are indexed by the left-tree channel e (a,b,e)(e,c,d), columns by the
 * right-tree channel f (b,c,f)(a,f,d). Both the matrix and its inverse are
 * kept since tree rewrites use them in pairs.
 */
struct FBlock {
  std::vector<long> es, fs;
  Mat m, minv;

  long eindex(long e) const {
    for (size_t i = 0; i < es.size(); ++i)
      if (es[i] == e) return long(i);
    return -1;
  }
  long findex(long f) const {
    for (size_t i = 0; i < fs.size(); ++i)
      if (fs[i] == f) return long(i);
    return -1;
  }
};

/** Skeletal modular tensor category data with multiplicity-free fusion.
 *
 * F and R symbols may be given by a generator function (evaluated lazily and
 * memoized) or preloaded into the caches. Override maps take precedence over
 * both, which is how the mutation tests inject single-entry corruptions.
 */
struct MtcData {
  std::string name;
  FusionRing ring;
  std::vector<CycScalar> qdim;
  std::vector<CycScalar> theta;

  std::function<CycScalar(long, long, long, long, long, long)> fgen;
  std::function<CycScalar(long, long, long)> rgen;

  std::unordered_map<uint64_t, CycScalar> f_override;
  std::unordered_map<uint64_t, CycScalar> r_override;

  static uint64_t key6(long a, long b, long c, long d, long e, long f) {
    return (((((uint64_t(a) << 10 | b) << 10 | c) << 10 | d) << 10 | e) << 10) | f;
  }
  static uint64_t key3(long a, long b, long c) {
    return (uint64_t(a) << 20) | (uint64_t(b) << 10) | c;
  }

  bool adm(long a, long b, long c) const { return ring.fuses(a, b, c); }

  /** Admissibility of the F-symbol index (a,b,c;d;e,f). */
  bool f_admissible(long a, long b, long c, long d, long e, long f) const {
    return adm(a, b, e) && adm(e, c, d) && adm(b, c, f) && adm(a, f, d);
  }

  CycScalar F(long a, long b, long c, long d, long e, long f) const {
    if (!f_admissible(a, b, c, d, e, f))
      throw std::domain_error("F: inadmissible index");
    uint64_t k = key6(a, b, c, d, e, f);
    {
      auto it = f_override.find(k);
      if (it != f_override.end()) return it->second;
    }
    std::lock_guard<std::mutex> lk(mx_);
    auto it = fc_.find(k);
    if (it != fc_.end()) return it->second;
    if (!fgen) throw std::domain_error("F: entry missing and no generator");
    CycScalar v = fgen(a, b, c, d, e, f);
    fc_.emplace(k, v);
    return v;
  }

  /** F with the zero-extension convention: 0 on inadmissible indices. */
  CycScalar Fz(long a, long b, long c, long d, long e, long f) const {
    if (!f_admissible(a, b, c, d, e, f)) return CycScalar::zero();
    return F(a, b, c, d, e, f);
  }

  CycScalar R(long a, long b, long c) const {
    if (!adm(a, b, c)) throw std::domain_error("R: inadmissible index");
    uint64_t k = key3(a, b, c);
    {
      auto it = r_override.find(k);
      if (it != r_override.end()) return it->second;
    }
    std::lock_guard<std::mutex> lk(mx_);
    auto it = rc_.find(k);
    if (it != rc_.end()) return it->second;
    if (!rgen) throw std::domain_error("R: entry missing and no generator");
    CycScalar v = rgen(a, b, c);
    rc_.emplace(k, v);
    return v;
  }

  /** Inverse braiding eigenvalue: c^{-1} on (a,b;c) is R(b,a,c)^{-1}. */
  CycScalar Rinv(long a, long b, long c) const { return R(b, a, c).inv(); }

  const FBlock& fblock(long a, long b, long c, long d) const {
    uint64_t k = key6(a, b, c, d, 0, 0);
    std::lock_guard<std::mutex> lk(fbmx_);
    auto it = fb_.find(k);
    if (it != fb_.end()) return it->second;
    FBlock blk;
    for (long e : ring.channels(a, b))
      if (adm(e, c, d)) blk.es.push_back(e);
    for (long f : ring.channels(b, c))
      if (adm(a, f, d)) blk.fs.push_back(f);
    if (blk.es.size() != blk.fs.size())
      throw std::domain_error("F-move block not square at (" + std::to_string(a) + "," +
                              std::to_string(b) + "," + std::to_string(c) + ";" +
                              std::to_string(d) + ")");
    blk.m = Mat(blk.es.size(), blk.fs.size());
    for (size_t i = 0; i < blk.es.size(); ++i)
      for (size_t j = 0; j < blk.fs.size(); ++j)
        blk.m.at(i, j) = F(a, b, c, d, blk.es[i], blk.fs[j]);
    blk.minv = blk.es.empty() ? Mat(0, 0) : blk.m.inverse();
    return fb_.emplace(k, std::move(blk)).first->second;
  }

  /** Drops memoized F-blocks; call after installing overrides. */
  void drop_block_cache() const {
    std::lock_guard<std::mutex> lk(fbmx_);
    fb_.clear();
  }

  void preload_f(long a, long b, long c, long d, long e, long f, const CycScalar& v) {
    fc_.emplace(key6(a, b, c, d, e, f), v);
  }
  void preload_r(long a, long b, long c, const CycScalar& v) {
    rc_.emplace(key3(a, b, c), v);
  }
  const std::unordered_map<uint64_t, CycScalar>& f_cache() const { return fc_; }
  const std::unordered_map<uint64_t, CycScalar>& r_cache() const { return rc_; }

  /** Forces every admissible F and R entry into the caches. */
  void materialize() const {
    long n = ring.n;
    for (long a = 0; a < n; ++a)
      for (long b = 0; b < n; ++b)
        for (long c = 0; c < n; ++c) {
          if (adm(a, b, c)) R(a, b, c);
          for (long d = 0; d < n; ++d)
            for (long e : ring.channels(a, b)) {
              if (!adm(e, c, d)) continue;
              for (long f : ring.channels(b, c))
                if (adm(a, f, d)) F(a, b, c, d, e, f);
            }
        }
  }

 private:
  mutable std::unordered_map<uint64_t, CycScalar> fc_, rc_;
  mutable std::unordered_map<uint64_t, FBlock> fb_;
  mutable std::mutex mx_, fbmx_;

 public:
  MtcData() = default;
  MtcData(const MtcData& o)
      : name(o.name), ring(o.ring), qdim(o.qdim), theta(o.theta), fgen(o.fgen),
        rgen(o.rgen), f_override(o.f_override), r_override(o.r_override) {
    std::lock_guard<std::mutex> lk(o.mx_);
    fc_ = o.fc_;
    rc_ = o.rc_;
  }
  MtcData& operator=(const MtcData&) = delete;
};

struct VerifyMode {
  bool full = true;
  long count = 100000;
  unsigned long seed = 1;

  static VerifyMode full_sweep() { return {}; }
  static VerifyMode sampled(long count, unsigned long seed) {
    return {false, count, seed};
  }
  std::string str() const {
    if (full) return "full";
    return "sampled(" + std::to_string(count) + ",seed=" + std::to_string(seed) + ")";
  }
};

struct VerifyReport {
  std::string check;
  bool ok = true;
  long instances = 0;
  std::string mode;
  std::string detail;

  std::string str() const {
    return check + " [" + mode + "]: " + (ok ? "pass" : "FAIL") + " (" +
           std::to_string(instances) + " instances)" +
           (detail.empty() ? "" : " " + detail);
  }
};

namespace detail {

inline std::string lbl(std::initializer_list<long> xs) {
  std::string s = "(";
  bool first = true;
  for (long x : xs) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

/** One pentagon instance: both rewrite routes from ((ab)c)d to a(b(cd)).
 * Path data: x in ab, y in xc, t in yd on the left; w in cd, v in bw,
 * t in av on the right. */
inline bool pentagon_instance(const MtcData& C, long a, long b, long c, long d, long t,
                              long x, long y, long w, long v, std::string* why) {
  CycScalar lhs = C.Fz(x, c, d, t, y, w) * C.Fz(a, b, w, t, x, v);
  CycScalar rhs = CycScalar::zero();
  for (long u : C.ring.channels(b, c))
    rhs += C.Fz(a, b, c, y, x, u) * C.Fz(a, u, d, t, y, v) * C.Fz(b, c, d, v, u, w);
  if (lhs == rhs) return true;
  if (why)
    *why = "labels (a,b,c,d;t|x,y|w,v)=" + lbl({a, b, c, d, t, x, y, w, v}) +
           " lhs=" + lhs.to_string() + " rhs=" + rhs.to_string();
  return false;
}

/** One hexagon instance in cleared form:
 * R^{ab}_e F^{bac}_d[e,g] R^{ac}_g = sum_f F^{abc}_d[e,f] R^{af}_d F^{bca}_d[f,g].
 * mirror=true replaces R by the inverse braiding eigenvalues. */
inline bool hexagon_instance(const MtcData& C, long a, long b, long c, long d, long e,
                             long g, bool mirror, std::string* why) {
  auto r = [&](long x, long y, long z) { return mirror ? C.Rinv(x, y, z) : C.R(x, y, z); };
  CycScalar lhs = r(a, b, e) * C.Fz(b, a, c, d, e, g) * r(a, c, g);
  CycScalar rhs = CycScalar::zero();
  for (long f : C.ring.channels(b, c)) {
    if (!C.adm(a, f, d)) continue;
    rhs += C.Fz(a, b, c, d, e, f) * r(a, f, d) * C.Fz(b, c, a, d, f, g);
  }
  if (lhs == rhs) return true;
  if (why)
    *why = std::string(mirror ? "inverse braiding" : "braiding") +
           " labels (a,b,c;d|e,g)=" + lbl({a, b, c, d, e, g}) + " lhs=" + lhs.to_string() +
           " rhs=" + rhs.to_string();
  return false;
}

}  // namespace detail

inline VerifyReport verify_pentagon(const MtcData& C, VerifyMode mode = VerifyMode::full_sweep()) {
  VerifyReport rep{"pentagon", true, 0, mode.str(), ""};
  const FusionRing& g = C.ring;
  long n = g.n;
  std::string why;
  if (mode.full) {
    for (long a = 0; a < n && rep.ok; ++a)
      for (long b = 0; b < n && rep.ok; ++b)
        for (long c = 0; c < n && rep.ok; ++c)
          for (long d = 0; d < n && rep.ok; ++d) {
            // F-move blocks must be square and invertible
            try {
              C.fblock(a, b, c, d);
            } catch (const std::domain_error& err) {
              rep.ok = false;
              rep.detail = err.what();
              break;
            }
            for (long x : g.channels(a, b))
              for (long y : g.channels(x, c))
                for (long t : g.channels(y, d))
                  for (long w : g.channels(c, d))
                    for (long v : g.channels(b, w)) {
                      if (!g.fuses(a, v, t)) continue;
                      ++rep.instances;
                      if (!detail::pentagon_instance(C, a, b, c, d, t, x, y, w, v, &why)) {
                        rep.ok = false;
                        rep.detail = why;
                        goto done_full;
                      }
                    }
          }
  done_full:;
  } else {
    std::mt19937_64 rng(mode.seed);
    std::uniform_int_distribution<long> pick(0, n - 1);
    long guard = 0, guard_max = mode.count * 100000;
    while (rep.instances < mode.count) {
      if (++guard > guard_max) {
        rep.ok = false;
        rep.detail = "sampler failed to find admissible instances";
        break;
      }
      long a = pick(rng), b = pick(rng), c = pick(rng), d = pick(rng), t = pick(rng);
      long x = pick(rng), y = pick(rng), w = pick(rng), v = pick(rng);
      if (!g.fuses(a, b, x) || !g.fuses(x, c, y) || !g.fuses(y, d, t)) continue;
      if (!g.fuses(c, d, w) || !g.fuses(b, w, v) || !g.fuses(a, v, t)) continue;
      ++rep.instances;
      if (!detail::pentagon_instance(C, a, b, c, d, t, x, y, w, v, &why)) {
        rep.ok = false;
        rep.detail = why;
        break;
      }
    }
  }
  return rep;
}

inline VerifyReport verify_hexagon(const MtcData& C, VerifyMode mode = VerifyMode::full_sweep()) {
  VerifyReport rep{"hexagon", true, 0, mode.str(), ""};
  const FusionRing& g = C.ring;
  long n = g.n;
  std::string why;
  if (mode.full) {
    for (long a = 0; a < n; ++a)
      for (long b = 0; b < n; ++b)
        for (long c = 0; c < n; ++c)
          for (long d = 0; d < n; ++d)
            for (long e : g.channels(a, b)) {
              if (!g.fuses(e, c, d)) continue;
              for (long gg : g.channels(a, c)) {
                if (!g.fuses(b, gg, d)) continue;
                for (bool mirror : {false, true}) {
                  ++rep.instances;
                  if (!detail::hexagon_instance(C, a, b, c, d, e, gg, mirror, &why)) {
                    rep.ok = false;
                    rep.detail = why;
                    return rep;
                  }
                }
              }
            }
  } else {
    std::mt19937_64 rng(mode.seed);
    std::uniform_int_distribution<long> pick(0, n - 1);
    long guard = 0, guard_max = mode.count * 100000;
    while (rep.instances < mode.count) {
      if (++guard > guard_max) {
        rep.ok = false;
        rep.detail = "sampler failed to find admissible instances";
        break;
      }
      long a = pick(rng), b = pick(rng), c = pick(rng), d = pick(rng);
      long e = pick(rng), gg = pick(rng);
      if (!g.fuses(a, b, e) || !g.fuses(e, c, d)) continue;
      if (!g.fuses(a, c, gg) || !g.fuses(b, gg, d)) continue;
      bool mirror = (rep.instances % 2) != 0;
      ++rep.instances;
      if (!detail::hexagon_instance(C, a, b, c, d, e, gg, mirror, &why)) {
        rep.ok = false;
        rep.detail = why;
        break;
      }
    }
  }
  return rep;
}

inline VerifyReport verify_ribbon(const MtcData& C) {
  VerifyReport rep{"ribbon", true, 0, "full", ""};
  const FusionRing& g = C.ring;
  if (!C.theta[g.unit].is_one()) {
    rep.ok = false;
    rep.detail = "theta at the unit is " + C.theta[g.unit].to_string();
    return rep;
  }
  for (long i = 0; i < g.n; ++i) {
    ++rep.instances;
    if (C.theta[i] != C.theta[g.dual[i]]) {
      rep.ok = false;
      rep.detail = "theta not dual-invariant at " + std::to_string(i);
      return rep;
    }
  }
  for (long a = 0; a < g.n; ++a)
    for (long b = 0; b < g.n; ++b)
      for (long c : g.channels(a, b)) {
        ++rep.instances;
        CycScalar lhs = C.theta[c];
        CycScalar rhs = C.theta[a] * C.theta[b] * C.R(b, a, c) * C.R(a, b, c);
        if (lhs != rhs) {
          rep.ok = false;
          rep.detail = "twist relation fails at " + detail::lbl({a, b, c}) + " lhs=" +
                       lhs.to_string() + " rhs=" + rhs.to_string();
          return rep;
        }
      }
  return rep;
}

/** Ring axioms plus dimension sanity; cheap structural pre-check. */
inline VerifyReport verify_basic(const MtcData& C) {
  VerifyReport rep{"structure", true, 0, "full", ""};
  std::string msg = C.ring.validate();
  if (!msg.empty()) {
    rep.ok = false;
    rep.detail = msg;
    return rep;
  }
  if (long(C.qdim.size()) != C.ring.n || long(C.theta.size()) != C.ring.n) {
    rep.ok = false;
    rep.detail = "qdim/theta table size mismatch";
    return rep;
  }
  for (long i = 0; i < C.ring.n; ++i) {
    ++rep.instances;
    if (C.qdim[i].is_zero()) {
      rep.ok = false;
      rep.detail = "zero quantum dimension at " + std::to_string(i);
      return rep;
    }
    if (C.qdim[i] != C.qdim[C.ring.dual[i]]) {
      rep.ok = false;
      rep.detail = "qdim not dual-invariant at " + std::to_string(i);
      return rep;
    }
  }
  return rep;
}

/** Unnormalized Hopf link values: S_{ij} = sum_c N_{ij}^c (theta_c / theta_i theta_j) d_c. */
inline Mat smatrix(const MtcData& C) {
  long n = C.ring.n;
  Mat s(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      CycScalar acc = CycScalar::zero();
      for (long c : C.ring.channels(i, j))
        acc += C.theta[c] * C.qdim[c];
      s.at(i, j) = acc * (C.theta[i] * C.theta[j]).inv();
    }
  return s;
}

inline Mat tmatrix(const MtcData& C) {
  long n = C.ring.n;
  Mat t(n, n);
  for (long i = 0; i < n; ++i) t.at(i, i) = C.theta[i];
  return t;
}

/** The one-label category with trivial braiding; useful as a base case. */
inline MtcData gen_trivial() {
  MtcData C;
  C.name = "trivial";
  C.ring = FusionRing(1);
  C.ring.set_fuse(0, 0, 0);
  C.ring.finalize();
  C.qdim = {CycScalar::one()};
  C.theta = {CycScalar::one()};
  C.fgen = [](long, long, long, long, long, long) { return CycScalar::one(); };
  C.rgen = [](long, long, long) { return CycScalar::one(); };
  return C;
}

struct Anomaly {
  CycScalar p_plus, p_minus;    // sums of theta^{+-1} d
  bool anomaly_free_paper = false;
  CycScalar p_plus_sq, p_minus_sq;  // sums of theta^{+-1} d^2
  bool gauss_sums_equal = false;
};

inline Anomaly anomaly_check(const MtcData& C) {
  Anomaly a;
  a.p_plus = a.p_minus = a.p_plus_sq = a.p_minus_sq = CycScalar::zero();
  for (long i = 0; i < C.ring.n; ++i) {
    CycScalar ti = C.theta[i], tinv = ti.inv(), d = C.qdim[i];
    a.p_plus += ti * d;
    a.p_minus += tinv * d;
    a.p_plus_sq += ti * d * d;
    a.p_minus_sq += tinv * d * d;
  }
  a.anomaly_free_paper = (a.p_plus == a.p_minus);
  a.gauss_sums_equal = (a.p_plus_sq == a.p_minus_sq);
  return a;
}

}  // namespace mtcdef
