#pragma once

#include "mtcdef/homspace.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace mtcdef {

/** A Frobenius algebra on a direct sum of simples. Structure morphisms live
 * in the fusion-tree bases of the homspace engine; the flags are filled in
 * by check_algebra and describe the verified structure. */
struct FrobeniusAlgebra {
  std::string name;
  const MtcData* C = nullptr;
  SSObject obj;
  Morphism mu;     // [A,A] -> [A]
  Morphism eta;    // []    -> [A]
  Morphism delta;  // [A]   -> [A,A]
  Morphism eps;    // [A]   -> []
  bool is_frobenius = false;
  bool is_symmetric = false;
  bool is_delta_separable = false;
  bool is_commutative = false;
  bool is_haploid = false;
};

struct AlgebraReport {
  bool ok = true;  // unit, associativity, counit, coassociativity, Frobenius law
  std::vector<std::string> failures;
  bool symmetric = false, delta_separable = false, commutative = false, haploid = false;

  std::string str() const {
    if (!ok) {
      std::string s = "algebra FAILED:";
      for (auto& f : failures) s += " " + f + ";";
      return s;
    }
    std::string s = "algebra ok";
    if (symmetric) s += ", symmetric";
    if (delta_separable) s += ", delta-separable";
    if (commutative) s += ", commutative";
    if (haploid) s += ", haploid";
    return s;
  }
};

/** Verify every axiom as an exact morphism identity and record which ones
 * fail. The symmetric / separable / commutative / haploid properties are
 * reported as flags rather than failures. */
inline AlgebraReport check_algebra(FrobeniusAlgebra& A) {
  const MtcData& C = *A.C;
  AlgebraReport r;
  auto fail = [&](const std::string& s) {
    r.ok = false;
    r.failures.push_back(s);
  };
  SumWord w0, w1{A.obj}, w2{A.obj, A.obj}, w3{A.obj, A.obj, A.obj};
  if (A.mu.dom != w2 || A.mu.cod != w1) fail("multiplication has wrong type");
  if (A.eta.dom != w0 || A.eta.cod != w1) fail("unit has wrong type");
  if (A.delta.dom != w1 || A.delta.cod != w2) fail("comultiplication has wrong type");
  if (A.eps.dom != w1 || A.eps.cod != w0) fail("counit has wrong type");
  if (!r.ok) return r;

  Morphism id1 = id_morphism(C, w1);
  if (compose(A.mu, apply_local(A.eta, w1, 0)) != id1) fail("left unit law");
  if (compose(A.mu, apply_local(A.eta, w1, 1)) != id1) fail("right unit law");
  if (compose(A.mu, apply_local(A.mu, w3, 0)) != compose(A.mu, apply_local(A.mu, w3, 1)))
    fail("associativity");
  if (compose(apply_local(A.eps, w2, 0), A.delta) != id1) fail("left counit law");
  if (compose(apply_local(A.eps, w2, 1), A.delta) != id1) fail("right counit law");
  if (compose(apply_local(A.delta, w2, 0), A.delta) !=
      compose(apply_local(A.delta, w2, 1), A.delta))
    fail("coassociativity");
  Morphism dm = compose(A.delta, A.mu);
  if (compose(apply_local(A.mu, w3, 1), apply_local(A.delta, w2, 0)) != dm)
    fail("frobenius law (comultiply first factor)");
  if (compose(apply_local(A.mu, w3, 0), apply_local(A.delta, w2, 1)) != dm)
    fail("frobenius law (comultiply second factor)");

  Morphism em = compose(A.eps, A.mu);
  Morphism turn = compose(braid_adjacent(C, w2, 0), twist_factor(C, w2, 1));
  r.symmetric = (em == compose(em, turn));
  r.delta_separable = (compose(A.mu, A.delta) == id1);
  r.commutative = (compose(A.mu, braid_adjacent(C, w2, 0)) == A.mu);
  r.haploid = (hom_dim(C, w0, w1) == 1);

  A.is_frobenius = r.ok;
  A.is_symmetric = r.symmetric;
  A.is_delta_separable = r.delta_separable;
  A.is_commutative = r.commutative;
  A.is_haploid = r.haploid;
  return r;
}

/** Quantum dimension of the underlying object. */
inline CycScalar algebra_dim(const FrobeniusAlgebra& A) {
  return qtrace(id_morphism(*A.C, {A.obj}));
}

inline FrobeniusAlgebra trivial_algebra(const MtcData& C) {
  FrobeniusAlgebra A;
  A.name = "trivial";
  A.C = &C;
  A.obj = SSObject::simple(C.ring.unit);
  SumWord w1{A.obj}, w2{A.obj, A.obj};
  long u = C.ring.unit;
  Mat one11(1, 1);
  one11.at(0, 0) = CycScalar::one();
  A.mu = Morphism(C, w2, w1);
  A.mu.blocks[u] = one11;
  A.eta = Morphism(C, {}, w1);
  A.eta.blocks[u] = one11;
  A.delta = Morphism(C, w1, w2);
  A.delta.blocks[u] = one11;
  A.eps = Morphism(C, w1, {});
  A.eps.blocks[u] = one11;
  check_algebra(A);
  return A;
}

/** Opposite algebra: multiply after braiding, comultiply before the inverse
 * braiding. Unit and counit are unchanged. */
inline FrobeniusAlgebra opposite(const FrobeniusAlgebra& A) {
  const MtcData& C = *A.C;
  FrobeniusAlgebra B = A;
  B.name = A.name + "^op";
  SumWord w2{A.obj, A.obj};
  B.mu = compose(A.mu, braid_adjacent(C, w2, 0));
  B.delta = compose(braid_adjacent(C, w2, 0, true), A.delta);
  check_algebra(B);
  return B;
}

/** The product object Z of a two-letter word [X, Y] together with the
 * packing isomorphism [X, Y] -> [Z]. Each sector basis of [X, Y] is taken,
 * in enumeration order, as the list of copies of that sector inside Z, so
 * the packing blocks are identity matrices. */
inline std::pair<SSObject, Morphism> fuse_object(const MtcData& C, const SSObject& X,
                                                 const SSObject& Y) {
  SumWord w{X, Y};
  WordBasis b = make_basis(C, w);
  SSObject Z;
  for (auto& [c, elems] : b.sectors) Z.mult[c] = long(elems.size());
  Morphism pack(C, w, {Z});
  for (auto& [c, elems] : b.sectors) pack.blocks[c] = Mat::identity(long(elems.size()));
  return {Z, pack};
}

/** Tensor product algebra on the fused object: the two multiplications act
 * after the middle factors are braided past each other, the two
 * comultiplications before the inverse braiding. */
inline FrobeniusAlgebra tensor_algebra(const FrobeniusAlgebra& A, const FrobeniusAlgebra& B) {
  const MtcData& C = *A.C;
  auto [Z, pack] = fuse_object(C, A.obj, B.obj);
  Morphism unpack = inverse_morphism(pack);
  FrobeniusAlgebra T;
  T.name = "(" + A.name + ")(x)(" + B.name + ")";
  T.C = &C;
  T.obj = Z;

  Morphism uu = tensor(unpack, unpack);       // [Z,Z] -> [A,B,A,B]
  Morphism mid = braid_adjacent(C, uu.cod, 1);  // -> [A,A,B,B]
  Morphism mm = tensor(A.mu, B.mu);           // [A,A,B,B] -> [A,B]
  T.mu = compose(pack, compose(mm, compose(mid, uu)));

  T.eta = compose(pack, tensor(A.eta, B.eta));

  Morphism dd = tensor(A.delta, B.delta);              // [A,B] -> [A,A,B,B]
  Morphism midi = braid_adjacent(C, dd.cod, 1, true);  // -> [A,B,A,B]
  T.delta = compose(tensor(pack, pack), compose(midi, compose(dd, unpack)));

  T.eps = compose(tensor(A.eps, B.eps), unpack);
  check_algebra(T);
  return T;
}

/** Internal endomorphism algebra of X, on the object X (x) X^. Its counit
 * and comultiplication come from the right duality, rescaled so that the
 * multiplication splits the comultiplication. */
inline FrobeniusAlgebra end_algebra(const MtcData& C, const SSObject& X,
                                    std::string name = "") {
  SSObject Xd = dual_object(C, X);
  auto [Z, pack] = fuse_object(C, X, Xd);
  Morphism unpack = inverse_morphism(pack);
  FrobeniusAlgebra A;
  A.name = name.empty() ? "end" + X.str() : std::move(name);
  A.C = &C;
  A.obj = Z;

  Morphism uu = tensor(unpack, unpack);                    // [Z,Z] -> [X,X^,X,X^]
  Morphism evmid = apply_local(ev_left(C, X), uu.cod, 1);  // -> [X,X^]
  A.mu = compose(pack, compose(evmid, uu));
  A.eta = compose(pack, coev_left(C, X));

  SumWord xxd{X, Xd};
  Morphism ins = apply_local(coev_right(C, X), xxd, 1);  // [X,X^] -> [X,X^,X,X^]
  Morphism d0 = compose(tensor(pack, pack), compose(ins, unpack));
  Morphism e0 = compose(ev_right(C, X), unpack);
  auto g = scalar_of_endo(compose(A.mu, d0));
  if (!g || g->is_zero())
    throw std::domain_error("end_algebra: quantum dimension of " + X.str() +
                            " is not invertible");
  A.delta = d0.scaled(g->inv());
  A.eps = e0.scaled(*g);
  check_algebra(A);
  return A;
}

namespace frobdetail {

/** Admissible product channels (a, b) -> c with all three labels in obj. */
inline std::vector<std::array<long, 3>> product_channels(const MtcData& C,
                                                         const SSObject& obj) {
  std::vector<std::array<long, 3>> out;
  for (auto& [a, ma] : obj.mult)
    for (auto& [b, mb] : obj.mult)
      for (long c : C.ring.channels(a, b))
        if (obj.mult.count(c)) out.push_back({a, b, c});
  std::sort(out.begin(), out.end());
  return out;
}

/** Multiplication morphism from per-channel structure constants
 * (multiplicity-free objects only). */
inline Morphism build_mu(const MtcData& C, const SSObject& obj,
                         const std::map<std::array<long, 3>, CycScalar>& lam) {
  SumWord w2{obj, obj}, w1{obj};
  WordBasis bd = make_basis(C, w2), bc = make_basis(C, w1);
  Morphism f(C, w2, w1);
  for (auto& [t, elems] : bd.sectors) {
    if (bc.dim(t) == 0) continue;
    Mat blk(bc.dim(t), long(elems.size()));
    bool nz = false;
    for (long col = 0; col < long(elems.size()); ++col) {
      const Expansion& e = bd.exps[elems[col].exp];
      auto it = lam.find({e.labels[0], e.labels[1], t});
      if (it == lam.end() || it->second.is_zero()) continue;
      blk.at(0, col) = it->second;
      nz = true;
    }
    if (nz) f.blocks[t] = std::move(blk);
  }
  return f;
}

inline Morphism unit_inclusion(const MtcData& C, const SSObject& obj) {
  Morphism f(C, {}, {obj});
  Mat blk(1, 1);
  blk.at(0, 0) = CycScalar::one();
  f.blocks[C.ring.unit] = std::move(blk);
  return f;
}

inline Morphism unit_projection(const MtcData& C, const SSObject& obj) {
  Morphism f(C, {obj}, {});
  Mat blk(1, 1);
  blk.at(0, 0) = CycScalar::one();
  f.blocks[C.ring.unit] = std::move(blk);
  return f;
}

/** Copairing kappa: [] -> [A,A] inverse to the pairing Phi = eps . mu, as the
 * solution of the two zig-zag identities; empty when Phi is degenerate. */
inline std::optional<Morphism> solve_copairing(const Morphism& Phi) {
  const MtcData& C = *Phi.C;
  SumWord w2 = Phi.dom;
  SumWord w1{w2[0]};
  long u = C.ring.unit;
  WordBasis b2 = make_basis(C, w2), b1 = make_basis(C, w1);
  long D = b2.dim(u);
  if (D == 0) return std::nullopt;

  std::vector<std::array<long, 3>> coords;  // sector, row, col of End([A])
  for (auto& [c, elems] : b1.sectors)
    for (long i = 0; i < long(elems.size()); ++i)
      for (long j = 0; j < long(elems.size()); ++j) coords.push_back({c, i, j});
  auto entry = [&](const Morphism& f, const std::array<long, 3>& co) {
    auto it = f.blocks.find(co[0]);
    return it == f.blocks.end() ? CycScalar::zero() : it->second.at(co[1], co[2]);
  };

  Mat sys(long(coords.size()), D);
  for (long t = 0; t < D; ++t) {
    Morphism kap(C, {}, w2);
    Mat blk(D, 1);
    blk.at(t, 0) = CycScalar::one();
    kap.blocks[u] = std::move(blk);
    Morphism s1 = apply_local(kap, w1, 0);  // [A] -> [A,A,A], kappa in front
    Morphism comp = compose(apply_local(Phi, s1.cod, 1), s1);
    for (size_t i = 0; i < coords.size(); ++i) sys.at(long(i), t) = entry(comp, coords[i]);
  }
  Morphism id1 = id_morphism(C, w1);
  std::vector<CycScalar> rhs;
  rhs.reserve(coords.size());
  for (auto& co : coords) rhs.push_back(entry(id1, co));

  auto sol = sys.solve(rhs);
  if (sol.empty()) return std::nullopt;
  Morphism kap(C, {}, w2);
  Mat blk(D, 1);
  bool nz = false;
  for (long t = 0; t < D; ++t) {
    blk.at(t, 0) = sol[t];
    nz = nz || !sol[t].is_zero();
  }
  if (nz) kap.blocks[u] = std::move(blk);
  Morphism s1 = apply_local(kap, w1, 1);  // [A] -> [A,A,A], kappa behind
  if (compose(apply_local(Phi, s1.cod, 0), s1) != id1) return std::nullopt;
  return kap;
}

struct SolveScenario {
  std::map<std::array<long, 3>, CycScalar> fixed;
};

/** Enumerate gauge scenarios. Per non-unit summand, one channel of scale
 * degree one is normalized to 1; each alternative where it vanishes instead
 * falls through to the next candidate, ending with the self-pairing
 * normalized to 1. The scenarios partition the solution space, one gauge
 * representative each. */
inline void enum_scenarios(const MtcData& C, const std::vector<std::array<long, 3>>& chans,
                           const std::vector<long>& summands, size_t i,
                           std::map<std::array<long, 3>, CycScalar>& fixed,
                           std::set<long>& scales, std::vector<SolveScenario>& out) {
  if (i == summands.size()) {
    out.push_back({fixed});
    return;
  }
  long a = summands[i];
  if (scales.count(a)) {
    enum_scenarios(C, chans, summands, i + 1, fixed, scales, out);
    return;
  }
  std::vector<std::array<long, 3>> deg1;
  for (auto& ch : chans) {
    if (fixed.count(ch)) continue;
    long deg = (ch[0] == a ? 1 : 0) + (ch[1] == a ? 1 : 0) - (ch[2] == a ? 1 : 0);
    if (deg != 1) continue;
    bool others_fixed = true;
    for (long l : ch)
      if (l != a && !scales.count(l)) others_fixed = false;
    if (others_fixed) deg1.push_back(ch);
  }
  scales.insert(a);
  for (auto& ch : deg1) {
    fixed[ch] = CycScalar::one();
    enum_scenarios(C, chans, summands, i + 1, fixed, scales, out);
    fixed[ch] = CycScalar::zero();  // vanishing branch for the alternatives below
  }
  long ad = C.ring.dual[a];
  std::array<long, 3> pair{a, ad, C.ring.unit};
  if (std::binary_search(chans.begin(), chans.end(), pair) && !fixed.count(pair)) {
    fixed[pair] = CycScalar::one();
    bool marked = ad != a && !scales.count(ad);
    if (marked) scales.insert(ad);
    enum_scenarios(C, chans, summands, i + 1, fixed, scales, out);
    if (marked) scales.erase(ad);
    fixed.erase(pair);
  }
  for (auto& ch : deg1) fixed.erase(ch);
  scales.erase(a);
}

}  // namespace frobdetail

/** Find every haploid symmetric delta-separable Frobenius algebra structure
 * on obj, up to rescaling of the simple summands. Unit channels are
 * normalized by the unit law, one channel per summand is fixed by the
 * rescaling gauge, and the remaining structure constants are solved from
 * the associativity and symmetry identities, which are linear in the
 * monomials of the constants. The counit is the unit projection and the
 * comultiplication the inverse of the invariant pairing, scaled so the
 * multiplication splits it. Every candidate is re-verified by check_algebra
 * before it is returned; an empty result means no structure exists. */
inline std::vector<FrobeniusAlgebra> solve_haploid_algebra(const MtcData& C, const SSObject& obj,
                                                           std::string* diagnostic = nullptr) {
  auto note = [&](const std::string& s) {
    if (diagnostic) {
      *diagnostic += s;
      *diagnostic += '\n';
    }
  };
  long u = C.ring.unit;
  {
    auto it = obj.mult.find(u);
    if (it == obj.mult.end() || it->second != 1)
      throw std::domain_error(
          "solve_haploid_algebra: the object must contain the unit exactly once");
    for (auto& [l, m] : obj.mult)
      if (m != 1)
        throw std::domain_error(
            "solve_haploid_algebra: only multiplicity-free objects are supported");
  }
  for (auto& [l, m] : obj.mult)
    if (!obj.mult.count(C.ring.dual[l])) {
      note("summand " + C.ring.names[l] + " has no dual partner, the pairing is degenerate");
      return {};
    }

  auto chans = frobdetail::product_channels(C, obj);
  std::map<std::array<long, 3>, CycScalar> base;
  for (auto& ch : chans)
    if (ch[0] == u || ch[1] == u) base[ch] = CycScalar::one();

  std::vector<long> summands;
  for (auto& [l, m] : obj.mult)
    if (l != u) summands.push_back(l);

  std::vector<frobdetail::SolveScenario> scenarios;
  {
    std::set<long> scales{u};
    frobdetail::enum_scenarios(C, chans, summands, 0, base, scales, scenarios);
  }

  SumWord w0, w1{obj}, w2{obj, obj}, w3{obj, obj, obj};
  WordBasis b1 = make_basis(C, w1), b3 = make_basis(C, w3);
  std::vector<std::array<long, 3>> acoords;  // sector, row, col of Hom([A,A,A],[A])
  for (auto& [c, elems] : b3.sectors)
    for (long r = 0; r < b1.dim(c); ++r)
      for (long j = 0; j < long(elems.size()); ++j) acoords.push_back({c, r, j});
  long symdim = hom_dim(C, w2, w0);

  Morphism eps0 = frobdetail::unit_projection(C, obj);
  Morphism turn = compose(braid_adjacent(C, w2, 0), twist_factor(C, w2, 1));

  auto defect = [&](const std::map<std::array<long, 3>, CycScalar>& lam) {
    Morphism mu = frobdetail::build_mu(C, obj, lam);
    Morphism ad = compose(mu, apply_local(mu, w3, 0)) - compose(mu, apply_local(mu, w3, 1));
    Morphism em = compose(eps0, mu);
    Morphism sd = em - compose(em, turn);
    std::vector<CycScalar> out;
    out.reserve(acoords.size() + symdim);
    for (auto& co : acoords) {
      auto it = ad.blocks.find(co[0]);
      out.push_back(it == ad.blocks.end() ? CycScalar::zero()
                                          : it->second.at(co[1], co[2]));
    }
    auto it = sd.blocks.find(u);
    for (long j = 0; j < symdim; ++j)
      out.push_back(it == sd.blocks.end() ? CycScalar::zero() : it->second.at(0, j));
    return out;
  };

  // column index of a monomial: 0 the constant, 1..n linear, then pairs
  std::vector<FrobeniusAlgebra> sols;
  std::set<std::string> seen;
  WordBasis b2 = make_basis(C, w2);

  for (auto& sc : scenarios) {
    std::vector<std::array<long, 3>> unk;
    for (auto& ch : chans)
      if (!sc.fixed.count(ch)) unk.push_back(ch);
    long n = long(unk.size());
    long K = 1 + n + n * (n + 1) / 2;
    auto paircol = [&](long i, long j) {
      return 1 + n + i * n - i * (i - 1) / 2 + (j - i);
    };
    auto lam_of = [&](const std::vector<CycScalar>& vals) {
      auto lam = sc.fixed;
      for (long i = 0; i < n; ++i) lam[unk[i]] = vals[i];
      return lam;
    };

    std::vector<CycScalar> zeros(n, CycScalar::zero());
    std::vector<CycScalar> c0 = defect(lam_of(zeros));
    long R = long(c0.size());
    CycScalar half = CycScalar::from_rational(Rat(1, 2));
    std::vector<std::vector<CycScalar>> lin(n), quad(n);
    for (long i = 0; i < n; ++i) {
      auto v = zeros;
      v[i] = CycScalar::one();
      auto e1 = defect(lam_of(v));
      v[i] = CycScalar(2);
      auto e2 = defect(lam_of(v));
      lin[i].resize(R);
      quad[i].resize(R);
      for (long r = 0; r < R; ++r) {
        quad[i][r] = (e2[r] - e1[r] - e1[r] + c0[r]) * half;
        lin[i][r] = e1[r] - c0[r] - quad[i][r];
      }
    }
    Mat sys(R, K);
    for (long r = 0; r < R; ++r) sys.at(r, 0) = c0[r];
    for (long i = 0; i < n; ++i)
      for (long r = 0; r < R; ++r) {
        sys.at(r, 1 + i) = lin[i][r];
        sys.at(r, paircol(i, i)) = quad[i][r];
      }
    for (long i = 0; i < n; ++i)
      for (long j = i + 1; j < n; ++j) {
        auto v = zeros;
        v[i] = CycScalar::one();
        v[j] = CycScalar::one();
        auto eij = defect(lam_of(v));
        for (long r = 0; r < R; ++r)
          sys.at(r, paircol(i, j)) =
              eij[r] - c0[r] - lin[i][r] - lin[j][r] - quad[i][r] - quad[j][r];
      }

    // monomials that occur in no equation are unconstrained by the linear
    // solve; drop their columns and let the rank-one structure define them
    std::vector<long> keep{0};
    for (long j = 1; j < K; ++j) {
      bool nz = false;
      for (long r = 0; r < R && !nz; ++r) nz = !sys.at(r, j).is_zero();
      if (nz) keep.push_back(j);
    }
    std::vector<long> pos(K, -1);
    for (size_t t = 0; t < keep.size(); ++t) pos[keep[t]] = long(t);
    {
      bool all_linear = true;
      for (long i = 0; i < n; ++i)
        if (pos[1 + i] < 0) all_linear = false;
      if (!all_linear) {
        note("a structure constant enters the equations only quadratically; its value "
             "would need a square root, candidate skipped");
        continue;
      }
    }
    Mat red(R, long(keep.size()));
    for (long r = 0; r < R; ++r)
      for (size_t t = 0; t < keep.size(); ++t) red.at(r, long(t)) = sys.at(r, keep[t]);
    Mat ker = red.kernel_basis();

    auto consistent = [&](const std::vector<CycScalar>& m) {
      for (long i = 0; i < n; ++i)
        for (long j = i; j < n; ++j) {
          long pc = pos[paircol(i, j)];
          if (pc >= 0 && m[pc] != m[pos[1 + i]] * m[pos[1 + j]]) return false;
        }
      return true;
    };

    std::vector<std::vector<CycScalar>> cands;
    if (ker.cols() == 1) {
      if (ker.at(0, 0).is_zero()) continue;
      CycScalar inv0 = ker.at(0, 0).inv();
      std::vector<CycScalar> m(keep.size());
      for (size_t t = 0; t < keep.size(); ++t) m[t] = ker.at(long(t), 0) * inv0;
      if (consistent(m))
        cands.push_back(std::move(m));
      else
        note("monomial solution is not rank one; the structure constants would need a "
             "quadratic extension of the cyclotomic field, candidate rejected");
    } else if (ker.cols() == 2) {
      // affine line of monomial vectors; rank-one consistency equations that
      // are linear in the line parameter select the candidate points
      long nk = long(keep.size());
      std::vector<CycScalar> a0(nk), a1(nk);
      long base_col = !ker.at(0, 0).is_zero() ? 0 : (!ker.at(0, 1).is_zero() ? 1 : -1);
      if (base_col < 0) continue;
      CycScalar inv0 = ker.at(0, base_col).inv();
      for (long t = 0; t < nk; ++t) a0[t] = ker.at(t, base_col) * inv0;
      CycScalar head = ker.at(0, 1 - base_col);
      for (long t = 0; t < nk; ++t) a1[t] = ker.at(t, 1 - base_col) - a0[t] * head;
      std::vector<CycScalar> ts;
      for (long i = 0; i < n; ++i)
        for (long j = i; j < n; ++j) {
          long pc = pos[paircol(i, j)];
          if (pc < 0) continue;
          const CycScalar &ui = a0[pos[1 + i]], &uj = a0[pos[1 + j]];
          const CycScalar &wi = a1[pos[1 + i]], &wj = a1[pos[1 + j]];
          CycScalar alpha = wi * wj;
          CycScalar beta = ui * wj + wi * uj - a1[pc];
          CycScalar gamma = ui * uj - a0[pc];
          if (alpha.is_zero() && !beta.is_zero()) {
            CycScalar t = -(gamma * beta.inv());
            if (std::find(ts.begin(), ts.end(), t) == ts.end()) ts.push_back(t);
          }
        }
      if (ts.empty())
        note("underdetermined quadratic system with no parameter-linear consistency "
             "equation; a square root outside the cyclotomic field would be needed, "
             "candidate skipped");
      for (const CycScalar& t : ts) {
        std::vector<CycScalar> m(nk);
        for (long q = 0; q < nk; ++q) m[q] = a0[q] + a1[q] * t;
        if (consistent(m)) cands.push_back(std::move(m));
      }
    } else if (ker.cols() > 2) {
      note("gauge scenario leaves an underdetermined quadratic system (dimension " +
           std::to_string(ker.cols()) + "), candidate skipped");
      continue;
    } else {
      continue;  // inconsistent scenario
    }

    for (auto& m : cands) {
      std::vector<CycScalar> vals(n);
      for (long i = 0; i < n; ++i) vals[i] = m[pos[1 + i]];

      auto lam = lam_of(vals);
      Morphism mu = frobdetail::build_mu(C, obj, lam);
      Morphism Phi = compose(eps0, mu);
      auto kap = frobdetail::solve_copairing(Phi);
      if (!kap) {
        note("invariant pairing is degenerate, candidate rejected");
        continue;
      }
      Morphism s1 = apply_local(*kap, w1, 1);  // [A] -> [A,A,A]
      Morphism delta0 = compose(apply_local(mu, s1.cod, 0), s1);
      auto g = scalar_of_endo(compose(mu, delta0));
      if (!g || g->is_zero()) {
        note("multiplication does not split any rescaled comultiplication, candidate "
             "rejected");
        continue;
      }

      FrobeniusAlgebra A;
      A.name = "alg" + obj.str();
      A.C = &C;
      A.obj = obj;
      A.mu = std::move(mu);
      A.eta = frobdetail::unit_inclusion(C, obj);
      A.eps = eps0.scaled(*g);
      A.delta = delta0.scaled(g->inv());
      AlgebraReport rep = check_algebra(A);
      if (!rep.ok || !rep.symmetric || !rep.delta_separable) {
        note("candidate failed re-verification: " + rep.str());
        continue;
      }
      std::string key;
      for (auto& ch : chans) {
        auto it = lam.find(ch);
        key += (it == lam.end() ? std::string("0") : it->second.to_string()) + "|";
      }
      if (seen.insert(key).second) sols.push_back(std::move(A));
    }
  }

  std::sort(sols.begin(), sols.end(),
            [&](const FrobeniusAlgebra& x, const FrobeniusAlgebra& y) {
              auto keyof = [&](const FrobeniusAlgebra& A) {
                std::string key;
                for (auto& [c, elems] : b2.sectors) {
                  auto it = A.mu.blocks.find(c);
                  for (long j = 0; j < long(elems.size()); ++j)
                    key += (it == A.mu.blocks.end() ? std::string("0")
                                                    : it->second.at(0, j).to_string()) +
                           "|";
                }
                return key;
              };
              return keyof(x) < keyof(y);
            });
  return sols;
}

}  // namespace mtcdef
