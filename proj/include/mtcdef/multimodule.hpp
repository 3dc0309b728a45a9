#pragma once

#include "mtcdef/frobenius.hpp"

#include <utility>

namespace mtcdef {

/** One algebra acting on a module object from the left, [A, M] -> [M].
 * Sign -1 marks an action of the opposite algebra: its associativity and
 * averaging use the multiplication and comultiplication of opposite(). */
struct ModuleAction {
  const FrobeniusAlgebra* alg = nullptr;
  int sign = +1;
  Morphism rho;
};

/** A module object together with an ordered list of commuting actions.
 * Earlier actions are outer: the combined action applies the last algebra
 * first. Compatibility braids the later algebra over the earlier one. */
struct MultiModule {
  std::string name;
  const MtcData* C = nullptr;
  SSObject obj;
  std::vector<ModuleAction> actions;

  long arity() const { return long(actions.size()); }
  SumWord word() const { return {obj}; }
};

struct ModuleReport {
  bool ok = true;
  std::vector<std::string> failures;

  std::string str() const {
    if (ok) return "ok";
    std::string s = "failed:";
    for (const auto& f : failures) s += " [" + f + "]";
    return s;
  }
};

/** Multiplication governing an action's associativity law. */
inline Morphism effective_mu(const ModuleAction& a) {
  if (a.sign >= 0) return a.alg->mu;
  const MtcData& C = *a.alg->C;
  SumWord w2{a.alg->obj, a.alg->obj};
  return compose(a.alg->mu, braid_adjacent(C, w2, 0));
}

/** Comultiplication used when averaging over an action. */
inline Morphism effective_delta(const ModuleAction& a) {
  if (a.sign >= 0) return a.alg->delta;
  const MtcData& C = *a.alg->C;
  SumWord w2{a.alg->obj, a.alg->obj};
  return compose(braid_adjacent(C, w2, 0, true), a.alg->delta);
}

namespace moddetail {

/** Same decorated list (algebra object, structure maps, and sign), so that
 * maps between the two modules make sense. */
inline bool same_decorations(const MultiModule& M, const MultiModule& N) {
  if (M.arity() != N.arity()) return false;
  for (long i = 0; i < M.arity(); ++i) {
    const ModuleAction& a = M.actions[i];
    const ModuleAction& b = N.actions[i];
    if (a.sign != b.sign) return false;
    if (a.alg == b.alg) continue;
    if (!(a.alg->obj == b.alg->obj) || !(a.alg->mu == b.alg->mu) ||
        !(a.alg->eta == b.alg->eta) || !(a.alg->delta == b.alg->delta) ||
        !(a.alg->eps == b.alg->eps))
      return false;
  }
  return true;
}

/** Left-nested packing of the first `count` letters of `w` into one object,
 * as a chain of two-letter fuses. Returns the packed object and the
 * isomorphism from w onto [Z, rest of w]. */
inline std::pair<SSObject, Morphism> pack_prefix(const MtcData& C, const SumWord& w,
                                                 long count) {
  if (count < 1 || count > long(w.size()))
    throw std::domain_error("pack_prefix: count out of range");
  SSObject Z = w[0];
  SumWord cur = w;
  Morphism chain = id_morphism(C, w);
  for (long t = 1; t < count; ++t) {
    auto [Z2, pk] = fuse_object(C, Z, cur[1]);
    Morphism step = apply_local(pk, cur, 0);
    chain = compose(step, chain);
    Z = Z2;
    cur = chain.cod;
  }
  return {Z, chain};
}

}  // namespace moddetail

inline ModuleReport check_multimodule(const MultiModule& M) {
  ModuleReport rep;
  const MtcData& C = *M.C;
  SumWord wM = M.word();
  long n = M.arity();
  auto fail = [&](const std::string& what) {
    rep.ok = false;
    rep.failures.push_back(what);
  };
  for (long i = 0; i < n; ++i) {
    const ModuleAction& a = M.actions[i];
    SumWord wAM{a.alg->obj, M.obj};
    if (a.rho.dom != wAM || a.rho.cod != wM) {
      fail("action " + std::to_string(i) + " has wrong type");
      continue;
    }
    if (!(compose(a.rho, apply_local(a.alg->eta, wM, 0)) == id_morphism(C, wM)))
      fail("action " + std::to_string(i) + " fails the unit law");
    SumWord wAAM{a.alg->obj, a.alg->obj, M.obj};
    Morphism lhs = compose(a.rho, apply_local(effective_mu(a), wAAM, 0));
    Morphism rhs = compose(a.rho, apply_local(a.rho, wAAM, 1));
    if (!(lhs == rhs)) fail("action " + std::to_string(i) + " fails associativity");
  }
  if (!rep.ok) return rep;
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j) {
      const ModuleAction& ai = M.actions[i];
      const ModuleAction& aj = M.actions[j];
      SumWord wij{ai.alg->obj, aj.alg->obj, M.obj};
      Morphism rhs = compose(ai.rho, apply_local(aj.rho, wij, 1));
      Morphism br = braid_adjacent(C, wij, 0, true);
      SumWord wji = br.cod;
      Morphism lhs = compose(aj.rho, compose(apply_local(ai.rho, wji, 1), br));
      if (!(lhs == rhs))
        fail("actions " + std::to_string(i) + " and " + std::to_string(j) +
             " are incompatible");
    }
  return rep;
}

/** Module map condition: f after each action equals the action after f. */
inline bool is_module_map(const Morphism& f, const MultiModule& M, const MultiModule& N) {
  if (!moddetail::same_decorations(M, N))
    throw std::invalid_argument("is_module_map: decoration lists differ");
  if (f.dom != M.word() || f.cod != N.word()) return false;
  for (long i = 0; i < M.arity(); ++i) {
    SumWord wAM{M.actions[i].alg->obj, M.obj};
    Morphism lhs = compose(f, M.actions[i].rho);
    Morphism rhs = compose(N.actions[i].rho, apply_local(f, wAM, 1));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

/** The whole list of actions as a single action of the packed product
 * algebra object, [Z, M] -> [M], outermost algebra first. */
inline Morphism combine(const MultiModule& M) {
  const MtcData& C = *M.C;
  long n = M.arity();
  if (n < 1) throw std::domain_error("combine: no actions");
  SumWord big;
  for (const auto& a : M.actions) big.push_back(a.alg->obj);
  big.push_back(M.obj);
  Morphism h = M.actions[n - 1].rho;
  for (long t = n - 2; t >= 0; --t) {
    SumWord wt(big.begin() + t, big.end());
    h = compose(M.actions[t].rho, apply_local(h, wt, 1));
  }
  if (n == 1) return h;
  auto [Z, chain] = moddetail::pack_prefix(C, big, n);
  return compose(h, inverse_morphism(chain));
}

/** Splits a combined action back into one action per algebra by feeding
 * units into the other slots. Validates the result: the factor actions must
 * form a multi-module whose combined action is the input. */
inline MultiModule split(const MtcData& C,
                         const std::vector<std::pair<const FrobeniusAlgebra*, int>>& decor,
                         const SSObject& Mobj, const Morphism& rho,
                         const std::string& name = "") {
  long n = long(decor.size());
  if (n < 1) throw std::invalid_argument("split: empty decoration list");
  SumWord big;
  for (auto& [alg, sign] : decor) big.push_back(alg->obj);
  big.push_back(Mobj);
  auto [Z, chain] = moddetail::pack_prefix(C, big, n);
  SumWord wZM{Z, Mobj}, wM{Mobj};
  if (rho.dom != wZM || rho.cod != wM)
    throw std::invalid_argument("split: the morphism is not an action on the packed object");

  MultiModule R;
  R.name = name;
  R.C = &C;
  R.obj = Mobj;
  for (long i = 0; i < n; ++i) {
    SumWord cur{decor[i].first->obj, Mobj};
    Morphism ins = id_morphism(C, cur);
    for (long j = 0; j < n; ++j) {
      if (j == i) continue;
      ins = compose(apply_local(decor[j].first->eta, ins.cod, j), ins);
    }
    Morphism rho_i = compose(rho, compose(chain, ins));
    R.actions.push_back({decor[i].first, decor[i].second, rho_i});
  }
  if (!check_multimodule(R).ok || !(combine(R) == rho))
    throw std::invalid_argument("split: the morphism is not a valid combined action");
  return R;
}

/** Conjugates one action by the twist of the module object. */
inline ModuleAction twist_action(const SSObject& Mobj, const ModuleAction& a) {
  const MtcData& C = *a.alg->C;
  SumWord wAM{a.alg->obj, Mobj}, wM{Mobj};
  ModuleAction t = a;
  t.rho = compose(twist_word(C, wM),
                  compose(a.rho, twist_factor(C, wAM, 1, true)));
  return t;
}

/** Rotates the action list by j places: the last n-j actions keep their
 * maps and move to the front, the first j actions are twisted and appended. */
inline MultiModule twist_multimodule(const MultiModule& M, long j) {
  long n = M.arity();
  if (j < 0 || j > n) throw std::domain_error("twist_multimodule: j out of range");
  MultiModule T;
  T.name = M.name.empty() ? "" : M.name + "^tw" + std::to_string(j);
  T.C = M.C;
  T.obj = M.obj;
  for (long i = j; i < n; ++i) T.actions.push_back(M.actions[i]);
  for (long i = 0; i < j; ++i) T.actions.push_back(twist_action(M.obj, M.actions[i]));
  return T;
}

/** Smallest k dividing the arity with a k-periodic decorated list. */
inline long minimal_period(const MultiModule& M) {
  long n = M.arity();
  for (long k = 1; k <= n; ++k) {
    if (n % k != 0) continue;
    bool per = true;
    for (long i = 0; i < n && per; ++i) {
      const ModuleAction& a = M.actions[i];
      const ModuleAction& b = M.actions[(i + k) % n];
      if (a.sign != b.sign) per = false;
      else if (a.alg != b.alg &&
               (!(a.alg->obj == b.alg->obj) || !(a.alg->mu == b.alg->mu)))
        per = false;
    }
    if (per) return k;
  }
  return n;
}

/** Rotation action of the cyclic group of order n/k on a module whose
 * decorated list has period k: a acts as the k*<a>-fold twist rotation. */
inline MultiModule cn_action(const MultiModule& M, long k, long a) {
  long n = M.arity();
  if (k < 1 || n % k != 0 || minimal_period(M) > k ||
      k % minimal_period(M) != 0)
    throw std::domain_error("cn_action: the decorated list does not have the declared period");
  long m = n / k;
  long rot = ((a % m) + m) % m;
  return twist_multimodule(M, rot * k);
}

inline long sigma_cocycle(long m, long a, long b) {
  long ra = ((a % m) + m) % m, rb = ((b % m) + m) % m;
  long rab = ((ra + rb) % m + m) % m;
  return (ra + rb - rab) / m;
}

/** Compositor of the rotation action: the inverse twist when the group
 * elements wrap past a full turn, the identity otherwise. */
inline Morphism tau(const MultiModule& M, long k, long a, long b) {
  const MtcData& C = *M.C;
  long m = M.arity() / k;
  if (sigma_cocycle(m, a, b) == 0) return id_morphism(C, M.word());
  return twist_word(C, M.word(), true);
}

struct CyclicStructure {
  const MultiModule* parent = nullptr;
  long k = 0;
  Morphism phi;
};

inline ModuleReport check_cyclic(const CyclicStructure& S) {
  ModuleReport rep;
  auto fail = [&](const std::string& what) {
    rep.ok = false;
    rep.failures.push_back(what);
  };
  const MultiModule& M = *S.parent;
  const MtcData& C = *M.C;
  long n = M.arity();
  SumWord wM = M.word();
  if (S.k < 1 || n % S.k != 0 || minimal_period(M) != S.k)
    fail("k is not the minimal period of the decorated list");
  if (S.phi.dom != wM || S.phi.cod != wM) {
    fail("phi has wrong type");
    return rep;
  }
  try {
    inverse_morphism(S.phi);
  } catch (const std::exception&) {
    fail("phi is not invertible");
    return rep;
  }
  if (S.k >= 1 && S.k <= n && n % S.k == 0) {
    MultiModule T = twist_multimodule(M, S.k);
    for (long i = 0; i < n; ++i) {
      SumWord wAM{T.actions[i].alg->obj, M.obj};
      Morphism lhs = compose(S.phi, T.actions[i].rho);
      Morphism rhs = compose(M.actions[i].rho, apply_local(S.phi, wAM, 1));
      if (!(lhs == rhs)) fail("phi fails to intertwine action " + std::to_string(i));
    }
    Morphism pw = id_morphism(C, wM);
    for (long t = 0; t < n / S.k; ++t) pw = compose(S.phi, pw);
    if (!(pw == twist_word(C, wM, true)))
      fail("phi power differs from the inverse twist");
  }
  return rep;
}

/** The regular module: the algebra acting on itself by multiplication. */
inline MultiModule regular_module(const FrobeniusAlgebra& A) {
  return {A.name, A.C, A.obj, {{&A, +1, A.mu}}};
}

/** The regular bimodule: multiplication on the left, and the opposite
 * multiplication as the second, sign minus, action. */
inline MultiModule regular_bimodule(const FrobeniusAlgebra& A) {
  const MtcData& C = *A.C;
  SumWord w2{A.obj, A.obj};
  Morphism rr = compose(A.mu, braid_adjacent(C, w2, 0));
  return {A.name, A.C, A.obj, {{&A, +1, A.mu}, {&A, -1, rr}}};
}

/** Any object as a module over the trivial algebra. */
inline MultiModule trivial_module(const FrobeniusAlgebra& T, const SSObject& X,
                                  const std::string& name = "") {
  const MtcData& C = *T.C;
  SumWord w{T.obj, X};
  return {name, &C, X, {{&T, +1, apply_local(T.eps, w, 0)}}};
}

/** Tensor product of two single-action modules as a two-action module on
 * the packed product object: the first algebra acts on the left factor, the
 * second braids over the left factor and acts on the right one. */
inline MultiModule module_pair_tensor(const MultiModule& M, const MultiModule& N,
                                      const std::string& name = "") {
  const MtcData& C = *M.C;
  if (M.arity() != 1 || N.arity() != 1)
    throw std::invalid_argument("module_pair_tensor: both factors must have one action");
  auto [Z, pack] = fuse_object(C, M.obj, N.obj);
  Morphism unpack = inverse_morphism(pack);
  const ModuleAction& am = M.actions[0];
  const ModuleAction& an = N.actions[0];

  SumWord w1{am.alg->obj, Z};
  Morphism u1 = apply_local(unpack, w1, 1);
  Morphism r1 = compose(apply_local(am.rho, u1.cod, 0), u1);
  r1 = compose(apply_local(pack, r1.cod, 0), r1);

  SumWord w2{an.alg->obj, Z};
  Morphism u2 = apply_local(unpack, w2, 1);
  Morphism b2 = braid_adjacent(C, u2.cod, 0);
  Morphism r2 = compose(apply_local(an.rho, b2.cod, 1), compose(b2, u2));
  r2 = compose(apply_local(pack, r2.cod, 0), r2);

  MultiModule R;
  R.name = name;
  R.C = &C;
  R.obj = Z;
  R.actions = {{am.alg, am.sign, r1}, {an.alg, an.sign, r2}};
  return R;
}

namespace moddetail {

struct HomCoord {
  long sector;
  long row;
  long col;
};

inline std::vector<HomCoord> hom_coords(const MtcData& C, const SumWord& M,
                                        const SumWord& N) {
  WordBasis bm = make_basis(C, M), bn = make_basis(C, N);
  std::vector<HomCoord> out;
  for (auto& [c, em] : bm.sectors) {
    long dn = bn.dim(c);
    for (long r = 0; r < dn; ++r)
      for (long col = 0; col < long(em.size()); ++col) out.push_back({c, r, col});
  }
  return out;
}

inline Morphism coords_to_morphism(const MtcData& C, const SumWord& M, const SumWord& N,
                                   const std::vector<HomCoord>& coords,
                                   const std::vector<CycScalar>& v) {
  WordBasis bm = make_basis(C, M), bn = make_basis(C, N);
  Morphism f(C, M, N);
  for (size_t t = 0; t < coords.size(); ++t) {
    if (v[t].is_zero()) continue;
    auto it = f.blocks.find(coords[t].sector);
    if (it == f.blocks.end())
      it = f.blocks.emplace(coords[t].sector, Mat(bn.dim(coords[t].sector),
                                                  bm.dim(coords[t].sector)))
               .first;
    it->second.at(coords[t].row, coords[t].col) = v[t];
  }
  return f;
}

inline std::vector<CycScalar> morphism_to_coords(const Morphism& f,
                                                 const std::vector<HomCoord>& coords) {
  std::vector<CycScalar> v(coords.size(), CycScalar::zero());
  for (size_t t = 0; t < coords.size(); ++t) {
    auto it = f.blocks.find(coords[t].sector);
    if (it != f.blocks.end()) v[t] = it->second.at(coords[t].row, coords[t].col);
  }
  return v;
}

/** One averaging pass: create a pair of algebra legs from the unit, act on
 * the source module, map across, act on the target module. */
inline Morphism average_once(const ModuleAction& aM, const ModuleAction& aN,
                             const SSObject& Mobj, const SSObject& Nobj,
                             const Morphism& f) {
  const MtcData& C = *aM.alg->C;
  SumWord wM{Mobj};
  Morphism kappa = compose(effective_delta(aM), aM.alg->eta);
  Morphism g = apply_local(kappa, wM, 0);
  g = compose(apply_local(aM.rho, g.cod, 1), g);
  g = compose(apply_local(f, g.cod, 1), g);
  return compose(aN.rho, g);
}

}  // namespace moddetail

/** Matrix of the averaging projector on the coordinates of Hom_C(M, N).
 * Its image is the space of multi-module maps. */
inline Mat module_hom_projector(const MultiModule& M, const MultiModule& N) {
  if (!moddetail::same_decorations(M, N))
    throw std::invalid_argument("module_hom_projector: decoration lists differ");
  const MtcData& C = *M.C;
  SumWord wM = M.word(), wN = N.word();
  auto coords = moddetail::hom_coords(C, wM, wN);
  long d = long(coords.size());
  // the half of each averaging pass below the mapped morphism is the same
  // for every coordinate, so build it once per action
  std::vector<Morphism> pre;
  for (long i = 0; i < M.arity(); ++i) {
    const ModuleAction& aM = M.actions[i];
    Morphism kappa = compose(effective_delta(aM), aM.alg->eta);
    Morphism g = apply_local(kappa, wM, 0);
    pre.push_back(compose(apply_local(aM.rho, g.cod, 1), g));
  }
  Mat P(d, d);
  for (long col = 0; col < d; ++col) {
    std::vector<CycScalar> e(d, CycScalar::zero());
    e[col] = CycScalar::one();
    Morphism f = moddetail::coords_to_morphism(C, wM, wN, coords, e);
    for (long i = 0; i < M.arity(); ++i)
      f = compose(N.actions[i].rho, compose(apply_local(f, pre[i].cod, 1), pre[i]));
    std::vector<CycScalar> v = moddetail::morphism_to_coords(f, coords);
    for (long r = 0; r < d; ++r) P.at(r, col) = v[r];
  }
  return P;
}

inline long module_hom_dim(const MultiModule& M, const MultiModule& N) {
  return module_hom_projector(M, N).rank();
}

/** Basis of the space of multi-module maps M -> N, canonicalized by row
 * reduction of the projector image. */
inline std::vector<Morphism> module_hom_basis(const MultiModule& M, const MultiModule& N) {
  const MtcData& C = *M.C;
  SumWord wM = M.word(), wN = N.word();
  auto coords = moddetail::hom_coords(C, wM, wN);
  Mat P = module_hom_projector(M, N);
  Mat::Ech e = P.transpose().rref();
  std::vector<Morphism> out;
  for (long r = 0; r < e.rank; ++r) {
    std::vector<CycScalar> v(coords.size());
    for (size_t t = 0; t < coords.size(); ++t) v[t] = e.m.at(r, long(t));
    out.push_back(moddetail::coords_to_morphism(C, wM, wN, coords, v));
  }
  return out;
}

/** Dimension of the same hom space by solving the module map equations as
 * one linear system, with no reference to the averaging projector. */
inline long intertwiner_hom_dim(const MultiModule& M, const MultiModule& N) {
  if (!moddetail::same_decorations(M, N))
    throw std::invalid_argument("intertwiner_hom_dim: decoration lists differ");
  const MtcData& C = *M.C;
  SumWord wM = M.word(), wN = N.word();
  auto coords = moddetail::hom_coords(C, wM, wN);
  long d = long(coords.size());
  std::vector<std::vector<CycScalar>> rows;
  for (long i = 0; i < M.arity(); ++i) {
    SumWord wAM{M.actions[i].alg->obj, M.obj};
    auto eqc = moddetail::hom_coords(C, wAM, wN);
    size_t base = rows.size();
    rows.resize(base + eqc.size(), std::vector<CycScalar>(d, CycScalar::zero()));
    for (long col = 0; col < d; ++col) {
      std::vector<CycScalar> e(d, CycScalar::zero());
      e[col] = CycScalar::one();
      Morphism f = moddetail::coords_to_morphism(C, wM, wN, coords, e);
      Morphism diff = compose(f, M.actions[i].rho) -
                      compose(N.actions[i].rho, apply_local(f, wAM, 1));
      std::vector<CycScalar> v = moddetail::morphism_to_coords(diff, eqc);
      for (size_t r = 0; r < eqc.size(); ++r) rows[base + r][col] = v[r];
    }
  }
  Mat A(long(rows.size()), d);
  for (size_t r = 0; r < rows.size(); ++r)
    for (long c2 = 0; c2 < d; ++c2) A.at(long(r), c2) = rows[r][c2];
  return d - A.rank();
}

}  // namespace mtcdef
