#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mtcdef {

/** Multiplicity-free fusion ring on labels 0..n-1 with unit 0.
 *
 * N_{ij}^k is stored as a bit per triple. Only N in {0,1} is supported,
 * which covers every category this library generates.
 */
struct FusionRing {
  long n = 0;
  long unit = 0;
  std::vector<std::string> names;
  std::vector<long> dual;
  std::vector<uint8_t> nt;                 // n^3 entries, N_{ij}^k
  std::vector<std::vector<long>> ch;       // channels(i,j), built by finalize()

  explicit FusionRing(long count = 0)
      : n(count), dual(count, 0), nt(count * count * count, 0) {
    for (long i = 0; i < n; ++i) {
      dual[i] = i;
      names.push_back(std::to_string(i));
    }
  }

  bool fuses(long i, long j, long k) const { return nt[(i * n + j) * n + k] != 0; }
  void set_fuse(long i, long j, long k, bool v = true) {
    nt[(i * n + j) * n + k] = v ? 1 : 0;
  }

  /** Rebuilds the channel lists; call after editing nt. */
  void finalize() {
    ch.assign(n * n, {});
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j)
        for (long k = 0; k < n; ++k)
          if (fuses(i, j, k)) ch[i * n + j].push_back(k);
  }

  const std::vector<long>& channels(long i, long j) const { return ch[i * n + j]; }

  /** Empty string when all ring axioms hold, else a diagnostic. */
  std::string validate() const {
    if (n <= 0) return "empty label set";
    if (unit < 0 || unit >= n) return "unit label out of range";
    for (long i = 0; i < n; ++i) {
      if (dual[i] < 0 || dual[i] >= n) return "dual out of range at " + std::to_string(i);
      if (dual[dual[i]] != i) return "dual is not an involution at " + std::to_string(i);
    }
    for (long j = 0; j < n; ++j)
      for (long k = 0; k < n; ++k) {
        if (fuses(unit, j, k) != (j == k))
          return "unit fusion fails at (" + std::to_string(j) + "," + std::to_string(k) + ")";
        if (fuses(j, unit, k) != (j == k))
          return "unit fusion fails at (" + std::to_string(j) + "," + std::to_string(k) + ") on the right";
      }
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        if (fuses(i, j, unit) != (j == dual[i]))
          return "dual pairing fails at (" + std::to_string(i) + "," + std::to_string(j) + ")";
        if (fuses(i, j, unit) != fuses(j, i, unit))
          return "dual pairing asymmetry at (" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
    // braided categories force N_{ij}^k = N_{ji}^k
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j)
        for (long k = 0; k < n; ++k)
          if (fuses(i, j, k) != fuses(j, i, k))
            return "fusion not symmetric at (" + std::to_string(i) + "," +
                   std::to_string(j) + ";" + std::to_string(k) + ")";
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j)
        for (long k = 0; k < n; ++k)
          for (long l = 0; l < n; ++l) {
            long lhs = 0, rhs = 0;
            for (long e = 0; e < n; ++e) {
              lhs += fuses(i, j, e) && fuses(e, k, l) ? 1 : 0;
              rhs += fuses(j, k, e) && fuses(i, e, l) ? 1 : 0;
            }
            if (lhs != rhs)
              return "associativity fails at (" + std::to_string(i) + "," + std::to_string(j) +
                     "," + std::to_string(k) + ";" + std::to_string(l) + ")";
          }
    return {};
  }
};

}  // namespace mtcdef
