#pragma once

#include "mtcdef/multimodule.hpp"

#include <map>
#include <optional>
#include <tuple>

namespace mtcdef {

enum class CenterSide { left, right };

/** A center of an algebra, presented by its idempotent on the algebra
 * object. The multiplicities give the center as a subobject. */
struct CenterData {
  const FrobeniusAlgebra* alg = nullptr;
  CenterSide side = CenterSide::left;
  Morphism projector;
  std::map<long, long> multiplicities;
  CycScalar qdim;

  SSObject object() const {
    SSObject o;
    for (auto& [l, m] : multiplicities)
      if (m > 0) o.mult[l] = m;
    return o;
  }
};

/** Projector onto the left or right center: twist one comultiplication leg,
 * braid it across with the matching handedness, multiply, and normalize by
 * the loop value of mu after delta. Verified idempotent, and the image must
 * braid-commute with the whole algebra in the defining direction. */
inline CenterData center_projector(const FrobeniusAlgebra& A, CenterSide side) {
  const MtcData& C = *A.C;
  SumWord w1{A.obj}, w2{A.obj, A.obj};
  std::optional<CycScalar> beta = scalar_of_endo(compose(A.mu, A.delta));
  if (!beta || beta->is_zero())
    throw std::domain_error("center_projector: " + A.name +
                            " is not special, mu after delta is not an "
                            "invertible scalar");
  bool invb = (side == CenterSide::right);
  Morphism inner = compose(twist_factor(C, w2, 0, invb), A.delta);
  Morphism P = compose(A.mu, compose(braid_adjacent(C, w2, 0, invb), inner))
                   .scaled(beta->inv());
  if (!(compose(P, P) == P))
    throw std::domain_error("center_projector: projector is not idempotent for " +
                            A.name);
  Morphism PA = apply_local(P, w2, 0);
  Morphism plain = compose(A.mu, PA);
  Morphism swapped = compose(A.mu, compose(braid_adjacent(C, w2, 0, invb), PA));
  if (!(plain == swapped))
    throw std::domain_error(
        "center_projector: image does not braid-commute with the algebra for " +
        A.name);

  CenterData out;
  out.alg = &A;
  out.side = side;
  out.projector = P;
  WordBasis b = make_basis(C, w1);
  for (auto& [c, elems] : b.sectors) {
    auto it = P.blocks.find(c);
    long r = (it == P.blocks.end()) ? 0 : it->second.rank();
    if (r > 0) out.multiplicities[c] = r;
  }
  out.qdim = qtrace(P);
  return out;
}

/** The bimodule on A (x) U_i whose right action lets the algebra cross the
 * label strand with the chosen handedness before multiplying. Sign +1
 * crosses one way, -1 the other; i = 0 gives the regular bimodule. */
inline MultiModule alpha_bimodule(const FrobeniusAlgebra& A, long i, int sign,
                                  std::string name = "") {
  const MtcData& C = *A.C;
  if (i < 0 || i >= C.ring.n)
    throw std::domain_error("alpha_bimodule: label out of range");
  SSObject Ui = SSObject::simple(i);
  auto [Z, pack] = fuse_object(C, A.obj, Ui);
  Morphism unpack = inverse_morphism(pack);

  SumWord wl{A.obj, Z};
  Morphism ul = apply_local(unpack, wl, 1);
  Morphism ml = apply_local(A.mu, ul.cod, 0);
  Morphism rho_l = compose(apply_local(pack, ml.cod, 0), compose(ml, ul));

  Morphism c1 = braid_adjacent(C, wl, 0);
  Morphism ur = apply_local(unpack, c1.cod, 0);
  Morphism br = braid_adjacent(C, ur.cod, 1, sign < 0);
  Morphism mr = apply_local(A.mu, br.cod, 0);
  Morphism rho_r = compose(apply_local(pack, mr.cod, 0),
                           compose(mr, compose(br, compose(ur, c1))));

  MultiModule M{name.empty() ? A.name + ":" + std::to_string(i) +
                                   (sign < 0 ? "-" : "+")
                             : std::move(name),
                &C, Z,
                {{&A, +1, rho_l}, {&A, -1, rho_r}}};
  ModuleReport rep = check_multimodule(M);
  if (!rep.ok)
    throw std::domain_error("alpha_bimodule: " + M.name + " " + rep.str());
  return M;
}

/** The modular-invariant matrix of an algebra, with the index convention
 * picked by a calibration suite and recorded. */
struct FullCenterMatrix {
  std::vector<std::vector<long>> z;
  std::string convention;
  std::vector<std::string> passing;

  long trace() const {
    long t = 0;
    for (size_t i = 0; i < z.size(); ++i) t += z[i][i];
    return t;
  }
};

namespace invdetail {

inline Mat to_cyc(const std::vector<std::vector<long>>& z) {
  long n = long(z.size());
  Mat m(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) m.at(i, j) = CycScalar(z[i][j]);
  return m;
}

inline bool calibration_passes(const MtcData& C, const FrobeniusAlgebra& A,
                               const std::vector<std::vector<long>>& z) {
  long n = C.ring.n;
  bool unit_algebra = (A.obj == SSObject::simple(C.ring.unit));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      if (z[i][j] < 0) return false;
      if (unit_algebra && z[i][j] != (i == j ? 1 : 0)) return false;
    }
  auto mu0 = A.mu.blocks.find(C.ring.unit);
  bool haploid = A.obj.mult.count(C.ring.unit) && A.obj.mult.at(C.ring.unit) == 1;
  (void)mu0;
  if (haploid && z[C.ring.unit][C.ring.unit] != 1) return false;
  Mat zc = to_cyc(z);
  Mat S = smatrix(C), T = tmatrix(C);
  if (!(zc * S == S * zc)) return false;
  if (!(zc * T == T * zc)) return false;
  return true;
}

}  // namespace invdetail

inline FullCenterMatrix full_center_matrix(const FrobeniusAlgebra& A) {
  const MtcData& C = *A.C;
  long n = C.ring.n;
  std::vector<MultiModule> ap, am;
  ap.reserve(n);
  am.reserve(n);
  for (long i = 0; i < n; ++i) {
    ap.push_back(alpha_bimodule(A, i, +1));
    am.push_back(alpha_bimodule(A, i, -1));
  }
  const char* names[4] = {"hom(alpha+_i, alpha-_j)", "hom(alpha+_i, alpha-_j*)",
                          "hom(alpha-_i, alpha+_j)", "hom(alpha-_i, alpha+_j*)"};
  FullCenterMatrix out;
  std::string dump;
  std::map<std::tuple<int, long, long>, long> memo;
  auto dim_of = [&](int order, long i, long jj) {
    auto key = std::make_tuple(order, i, jj);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    long v = order ? module_hom_dim(am[i], ap[jj]) : module_hom_dim(ap[i], am[jj]);
    memo[key] = v;
    return v;
  };
  for (int v = 0; v < 4; ++v) {
    std::vector<std::vector<long>> z(n, std::vector<long>(n, 0));
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        long jj = (v & 1) ? C.ring.dual[j] : j;
        z[i][j] = dim_of((v & 2) ? 1 : 0, i, jj);
      }
    if (invdetail::calibration_passes(C, A, z)) {
      if (out.passing.empty()) {
        out.z = z;
        out.convention = names[v];
      }
      out.passing.push_back(names[v]);
    } else if (out.passing.empty()) {
      dump += std::string(names[v]) + ":";
      for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
          if (z[i][j]) dump += " (" + std::to_string(i) + "," + std::to_string(j) +
                               ")=" + std::to_string(z[i][j]);
      dump += "\n";
    }
  }
  if (out.passing.empty())
    throw std::domain_error("full_center_matrix: no index convention passes for " +
                            A.name + "\n" + dump);
  return out;
}

struct T3Invariants {
  CycScalar iota0_plus, iota0_minus;
  long iota1_plus = 0, iota1_minus = 0;
  long iota2 = 0;
};

/** The three embedded-torus invariants, computed from both centers and the
 * modular-invariant matrix. Pass the matrix if already computed. */
inline T3Invariants t3_invariants(const FrobeniusAlgebra& A,
                                  const FullCenterMatrix* zmat = nullptr) {
  const MtcData& C = *A.C;
  long n = C.ring.n;
  CenterData cl = center_projector(A, CenterSide::left);
  CenterData cr = center_projector(A, CenterSide::right);
  auto iota1 = [&](const CenterData& cd) {
    long s = 0;
    for (long i = 0; i < n; ++i)
      for (auto& [c, m] : cd.multiplicities)
        if (C.ring.fuses(i, c, i)) s += m;
    return s;
  };
  T3Invariants out;
  out.iota0_plus = cl.qdim.scaled(Rat(n));
  out.iota0_minus = cr.qdim.scaled(Rat(n));
  out.iota1_plus = iota1(cl);
  out.iota1_minus = iota1(cr);
  out.iota2 = zmat ? zmat->trace() : full_center_matrix(A).trace();
  return out;
}

enum class Closed3Manifold { s2xs1, t3 };

/** Invariant of a sphere defect embedded in a closed manifold from the
 * fixed catalog: the algebra dimension times the bare invariant. */
inline CycScalar sphere_embedding_invariant(const FrobeniusAlgebra& A,
                                            Closed3Manifold m) {
  CycScalar zrt = (m == Closed3Manifold::t3) ? CycScalar(A.C->ring.n)
                                             : CycScalar::one();
  return algebra_dim(A) * zrt;
}

}  // namespace mtcdef
