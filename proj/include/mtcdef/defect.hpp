#pragma once

#include "mtcdef/diagram.hpp"
#include "mtcdef/multimodule.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace mtcdef {

/** One oriented triangle, stored as the vertex cycle of its boundary. */
struct Tri {
  std::array<long, 3> v;
};

/** An abstract oriented triangulated surface piece carrying one algebra.
 * Triangle cycles must orient consistently: every interior edge is
 * traversed once in each direction. The total order on vertex ids splits
 * the triangles into the two coupon classes. */
struct TriangulatedPatch {
  const FrobeniusAlgebra* alg = nullptr;
  std::vector<Tri> tris;
  bool back_oriented = false;
};

/** The compiled form of a patch: a sliced ribbon diagram whose coupons are
 * the algebra three point states and the invariant pairing. */
struct DefectNetwork {
  SlicedDiagram diagram;
  bool closed = false;
};

namespace defdetail {

inline bool tri_positive(const Tri& t) {
  // parity of the cycle against ascending vertex order; rotations agree
  int inv = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (t.v[i] > t.v[j]) ++inv;
  return inv % 2 == 0;
}

struct PatchMaps {
  std::map<std::pair<long, long>, std::pair<long, int>> dir;  // directed edge -> (tri, slot)
  long n_vertices = 0, n_edges = 0;
  bool closed = true;
};

inline PatchMaps patch_maps(const TriangulatedPatch& P) {
  PatchMaps M;
  std::set<long> verts;
  std::set<std::pair<long, long>> undirected;
  for (long t = 0; t < long(P.tris.size()); ++t) {
    const Tri& tr = P.tris[t];
    if (tr.v[0] == tr.v[1] || tr.v[1] == tr.v[2] || tr.v[0] == tr.v[2])
      throw std::domain_error("patch: degenerate triangle");
    for (int s = 0; s < 3; ++s) {
      long u = tr.v[s], w = tr.v[(s + 1) % 3];
      if (!M.dir.emplace(std::make_pair(u, w), std::make_pair(t, s)).second)
        throw std::domain_error(
            "patch: an oriented edge is used twice, the orientation is not "
            "consistent");
      verts.insert(u);
      undirected.insert(std::minmax(u, w));
    }
  }
  for (auto& [e, ts] : M.dir)
    if (!M.dir.count({e.second, e.first})) M.closed = false;
  M.n_vertices = long(verts.size());
  M.n_edges = long(undirected.size());
  return M;
}

/** Validates the complex and reports its Euler characteristic. */
inline long patch_euler(const TriangulatedPatch& P) {
  PatchMaps M = patch_maps(P);
  return M.n_vertices - M.n_edges + long(P.tris.size());
}

struct ShellStep {
  long tri = 0;
  int rot = 0;    // rotation applied to the vertex cycle
  long pos = 0;   // frontier position of the first glued leg
  long glued = 0; // number of glued legs (0 for the opening triangle)
};

struct FLeg {
  long u, v;  // directed edge carried by the frontier, frontier direction
};

inline std::array<std::pair<long, long>, 3> tri_edges(const Tri& t, int rot) {
  std::array<std::pair<long, long>, 3> e;
  for (int s = 0; s < 3; ++s) {
    long a = t.v[(s + rot) % 3], b = t.v[(s + rot + 1) % 3];
    e[s] = {a, b};
  }
  return e;
}

/** Depth-first search for a build order in which every triangle glues to
 * the frontier along one contiguous arc, keeping the chart planar. */
struct ShellSearch {
  const TriangulatedPatch* P;
  long F;
  std::vector<bool> used;
  std::vector<FLeg> frontier;
  std::vector<ShellStep> steps;
  long visited = 0;

  bool frontier_has_vertex(long x) const {
    for (const FLeg& l : frontier)
      if (l.u == x) return true;
    return false;
  }

  bool dfs() {
    if (++visited > 500000)
      throw std::domain_error("dualize: planar build order search budget exhausted");
    long done = 0;
    for (bool b : used) done += b;
    if (done == F) return true;
    for (long t = 0; t < F; ++t) {
      if (used[t]) continue;
      for (int rot = 0; rot < 3; ++rot) {
        auto e = tri_edges(P->tris[t], rot);
        // the glued legs must be the leading ones, matched against a
        // descending run of frontier positions
        long m = long(frontier.size());
        for (long p = 0; p < m; ++p) {
          // contiguous matching: leg j of the triangle must be the reverse
          // of frontier leg p + (r - 1 - j) for j < r
          for (long r = std::min<long>(3, m - p); r >= 1; --r) {
            bool okm = true;
            for (long j = 0; j < r && okm; ++j) {
              const FLeg& fl = frontier[p + (r - 1 - j)];
              if (fl.u != e[j].second || fl.v != e[j].first) okm = false;
            }
            if (!okm) continue;
            // no other edge of the triangle may already lie on the frontier
            bool extra = false;
            for (long j = r; j < 3 && !extra; ++j)
              for (const FLeg& fl : frontier)
                if (fl.u == e[j].second && fl.v == e[j].first) extra = true;
            if (extra) continue;
            if (r == 1) {
              long apex = 0;
              for (long x : P->tris[t].v)
                if (x != e[0].first && x != e[0].second) apex = x;
              if (frontier_has_vertex(apex)) continue;
            }
            std::vector<FLeg> save = frontier;
            std::vector<FLeg> next(frontier.begin(), frontier.begin() + p);
            for (long j = r; j < 3; ++j) next.push_back({e[j].first, e[j].second});
            next.insert(next.end(), frontier.begin() + p + r, frontier.end());
            frontier = std::move(next);
            used[t] = true;
            steps.push_back({t, rot, p, r});
            if (dfs()) return true;
            steps.pop_back();
            used[t] = false;
            frontier = std::move(save);
          }
        }
      }
    }
    return false;
  }

  bool run() {
    used.assign(F, false);
    for (long t0 = 0; t0 < F; ++t0)
      for (int rot = 0; rot < 3; ++rot) {
        used.assign(F, false);
        used[t0] = true;
        auto e = tri_edges(P->tris[t0], rot);
        frontier.clear();
        for (auto& ed : e) frontier.push_back({ed.first, ed.second});
        steps.assign(1, {t0, rot, 0, 0});
        if (dfs()) return true;
      }
    return false;
  }
};

struct PatchCoupons {
  Morphism state_pos;  // 1 -> A A A for positively oriented triangles
  Morphism state_neg;  // 1 -> A A A for negatively oriented ones
  Morphism beta;       // A A -> 1, the invariant pairing
};

inline PatchCoupons patch_coupons(const FrobeniusAlgebra& A, bool back) {
  const MtcData& C = *A.C;
  SumWord w2{A.obj, A.obj}, w3{A.obj, A.obj, A.obj};
  Morphism mu = back ? compose(A.mu, braid_adjacent(C, w2, 0)) : A.mu;
  Morphism delta = back ? compose(braid_adjacent(C, w2, 0, true), A.delta) : A.delta;

  PatchCoupons pc;
  Morphism gamma = compose(delta, A.eta);
  pc.state_pos = compose(apply_local(delta, gamma.cod, 0), gamma);
  pc.beta = compose(A.eps, mu);
  // the negative state is the name of the triple product, taken through
  // nested pairings so its legs come out in the reversed cyclic order
  Morphism f = compose(pc.beta, apply_local(mu, w3, 0));
  Morphism h = gamma;
  h = compose(apply_local(gamma, h.cod, 1), h);
  h = compose(apply_local(gamma, h.cod, 2), h);
  pc.state_neg = compose(apply_local(f, h.cod, 3), h);
  return pc;
}

}  // namespace defdetail

/** Compiles a patch to its Poincare dual ribbon network: one three legged
 * state coupon per triangle, one pairing coupon per interior edge, built in
 * an order that keeps the chart planar. Boundary edges stay open. */
inline DefectNetwork dualize(const TriangulatedPatch& P) {
  if (!P.alg) throw std::domain_error("dualize: patch carries no algebra");
  if (P.tris.empty()) throw std::domain_error("dualize: empty patch");
  const FrobeniusAlgebra& A = *P.alg;
  const MtcData& C = *A.C;
  defdetail::PatchMaps M = defdetail::patch_maps(P);
  long chi = M.n_vertices - M.n_edges + long(P.tris.size());
  if (M.closed && chi != 2)
    throw std::domain_error("dualize: closed surface is not a sphere");
  if (!M.closed && chi != 1)
    throw std::domain_error("dualize: bounded surface is not a disk");

  defdetail::ShellSearch S;
  S.P = &P;
  S.F = long(P.tris.size());
  if (!S.run()) throw std::domain_error("dualize: no planar build order found");

  defdetail::PatchCoupons pc = defdetail::patch_coupons(A, P.back_oriented);
  DiagramBuilder B(C, {});
  for (const defdetail::ShellStep& st : S.steps) {
    bool pos = defdetail::tri_positive(P.tris[st.tri]);
    Gen state = Gen::named_gen(pos ? "state+" : "state-",
                               pos ? pc.state_pos : pc.state_neg);
    B.at(st.pos + st.glued, state);
    for (long j = 0; j < st.glued; ++j)
      B.at(st.pos + st.glued - 1 - j, Gen::named_gen("pair", pc.beta));
  }
  DefectNetwork N;
  N.diagram = B.finish();
  N.closed = M.closed;
  return N;
}

/** Value of a closed network; open networks evaluate to their boundary
 * morphism through the diagram engine instead. */
inline CycScalar evaluate_network(const DefectNetwork& N) {
  if (!N.closed)
    throw std::domain_error("evaluate_network: the network has open legs");
  return evaluate_closed(N.diagram);
}

/** Flips the diagonal of the quadrilateral formed by the two triangles
 * sharing the edge u v. */
inline TriangulatedPatch pachner_22(const TriangulatedPatch& P, long u, long v) {
  defdetail::PatchMaps M = defdetail::patch_maps(P);
  auto it1 = M.dir.find({u, v}), it2 = M.dir.find({v, u});
  if (it1 == M.dir.end() || it2 == M.dir.end())
    throw std::domain_error("pachner_22: the edge is not interior");
  auto [t1, s1] = it1->second;
  auto [t2, s2] = it2->second;
  long c = P.tris[t1].v[(s1 + 2) % 3];
  long d = P.tris[t2].v[(s2 + 2) % 3];
  if (c == d) throw std::domain_error("pachner_22: flip would degenerate");
  if (M.dir.count({c, d}) || M.dir.count({d, c}))
    throw std::domain_error("pachner_22: the flipped diagonal already exists");
  TriangulatedPatch Q = P;
  Q.tris[t1] = Tri{{u, d, c}};
  Q.tris[t2] = Tri{{v, c, d}};
  return Q;
}

/** Splits one triangle into three around a fresh interior vertex. */
inline TriangulatedPatch pachner_13(const TriangulatedPatch& P, long face) {
  if (face < 0 || face >= long(P.tris.size()))
    throw std::domain_error("pachner_13: no such face");
  long x = 0;
  for (const Tri& t : P.tris) x = std::max({x, t.v[0], t.v[1], t.v[2]});
  ++x;
  Tri t = P.tris[face];
  TriangulatedPatch Q = P;
  Q.tris[face] = Tri{{t.v[0], t.v[1], x}};
  Q.tris.push_back(Tri{{t.v[1], t.v[2], x}});
  Q.tris.push_back(Tri{{t.v[2], t.v[0], x}});
  return Q;
}

/** The boundary of the 3 simplex: the smallest sphere. */
inline TriangulatedPatch tetrahedron_patch(const FrobeniusAlgebra& A) {
  return {&A,
          {Tri{{1, 2, 3}}, Tri{{0, 3, 2}}, Tri{{0, 1, 3}}, Tri{{0, 2, 1}}},
          false};
}

/** The octahedron sphere: eight triangles around an equatorial square. */
inline TriangulatedPatch octahedron_patch(const FrobeniusAlgebra& A) {
  return {&A,
          {Tri{{0, 1, 2}}, Tri{{0, 2, 3}}, Tri{{0, 3, 4}}, Tri{{0, 4, 1}},
           Tri{{5, 2, 1}}, Tri{{5, 3, 2}}, Tri{{5, 4, 3}}, Tri{{5, 1, 4}}},
          false};
}

/** Labels for a configuration of defect strata. A surface piece carries an
 * algebra; a line records the cyclic list of surface crossings around it,
 * each with the sign of approach, plus an underlying object label used when
 * no surface is attached at all. */
struct SurfaceStratum {
  const FrobeniusAlgebra* alg = nullptr;
};

struct LineStratum {
  long label = 0;                            // object label for free lines
  std::vector<std::pair<long, int>> around;  // (surface id, sign)
};

struct DefectData {
  const MtcData* C = nullptr;
  std::vector<SurfaceStratum> surfaces;
  std::vector<LineStratum> lines;
};

struct DefectDataReport {
  bool ok = true;
  std::string error;
};

/** Orientation reversal of a line: the crossing list reverses and every
 * sign flips. */
inline LineStratum reverse_line(const LineStratum& l) {
  LineStratum r = l;
  std::reverse(r.around.begin(), r.around.end());
  for (auto& c : r.around) c.second = -c.second;
  return r;
}

/** Checks the stratum labels: every surface end with one sign must be
 * matched by an end of the same surface with the opposite sign, and a bare
 * line can only carry a label with trivial twist. */
inline DefectDataReport validate_defect_data(const DefectData& D) {
  DefectDataReport rep;
  auto fail = [&](const std::string& e) {
    rep.ok = false;
    rep.error = e;
    return rep;
  };
  if (!D.C) return fail("no category");
  for (size_t s = 0; s < D.surfaces.size(); ++s)
    if (!D.surfaces[s].alg || D.surfaces[s].alg->C != D.C)
      return fail("surface " + std::to_string(s) + ": bad algebra");
  std::map<long, long> balance;  // surface id -> (#+ ends) - (#- ends)
  for (size_t ln = 0; ln < D.lines.size(); ++ln) {
    const LineStratum& l = D.lines[ln];
    if (l.around.empty()) {
      if (l.label < 0 || l.label >= D.C->ring.n)
        return fail("line " + std::to_string(ln) + ": no such label");
      if (!D.C->theta[l.label].is_one())
        return fail("line " + std::to_string(ln) +
                    ": a free line needs a label with trivial twist");
      continue;
    }
    for (auto& [sid, sign] : l.around) {
      if (sid < 0 || sid >= long(D.surfaces.size()))
        return fail("line " + std::to_string(ln) + ": no such surface");
      if (sign != 1 && sign != -1)
        return fail("line " + std::to_string(ln) + ": sign must be +1 or -1");
      balance[sid] += sign;
    }
  }
  for (auto& [sid, b] : balance)
    if (b != 0)
      return fail("surface " + std::to_string(sid) +
                  ": sources and targets do not match up");
  return rep;
}

/** A sphere cut out around a point where n defect lines meet, with cyclic
 * multi modules at the two poles and a marked wedge. */
struct DefectSphereObject {
  const MtcData* C = nullptr;
  std::vector<std::pair<const FrobeniusAlgebra*, int>> lines;
  const CyclicStructure* south = nullptr;  // module M at the + pole
  const CyclicStructure* north = nullptr;  // module N at the - pole
  long star = 0;   // wedge carrying the base point
  long marks = 1;  // attachment marks per line
};

/** The signed algebra list a multi module acts through. */
inline std::vector<std::pair<const FrobeniusAlgebra*, int>> decoration_list(
    const MultiModule& M) {
  std::vector<std::pair<const FrobeniusAlgebra*, int>> out;
  for (const ModuleAction& a : M.actions) out.push_back({a.alg, a.sign});
  return out;
}

inline void validate_defect_sphere(const DefectSphereObject& S) {
  if (!S.C || !S.south || !S.north || !S.south->parent || !S.north->parent)
    throw std::domain_error("defect sphere: missing pole data");
  const MultiModule& M = *S.south->parent;
  const MultiModule& N = *S.north->parent;
  long n = long(S.lines.size());
  if (n < 1) throw std::domain_error("defect sphere: no lines");
  if (M.C != S.C || N.C != S.C)
    throw std::domain_error("defect sphere: pole modules live elsewhere");
  if (M.arity() != n || N.arity() != n)
    throw std::domain_error("defect sphere: pole arity does not match lines");
  for (long i = 0; i < n; ++i) {
    if (M.actions[i].alg != S.lines[i].first ||
        M.actions[i].sign != S.lines[i].second ||
        N.actions[i].alg != S.lines[i].first ||
        N.actions[i].sign != S.lines[i].second)
      throw std::domain_error("defect sphere: decoration mismatch at line " +
                              std::to_string(i));
  }
  auto rs = check_cyclic(*S.south);
  if (!rs.ok)
    throw std::domain_error("defect sphere: south pole: " + rs.str());
  auto rn = check_cyclic(*S.north);
  if (!rn.ok)
    throw std::domain_error("defect sphere: north pole: " + rn.str());
  if (S.star < 0 || S.star >= n)
    throw std::domain_error("defect sphere: star is not a wedge index");
  if (S.marks < 1) throw std::domain_error("defect sphere: marks must be positive");
}

namespace defdetail {

inline Morphism phi_power(const CyclicStructure& S, long j) {
  const MultiModule& M = *S.parent;
  Morphism step = j >= 0 ? S.phi : inverse_morphism(S.phi);
  Morphism acc = id_morphism(*M.C, M.word());
  for (long t = 0; t < std::abs(j); ++t) acc = compose(step, acc);
  return acc;
}

}  // namespace defdetail

/** The cylinder map over a defect sphere on the coordinates of
 * Hom_C(M, N): averaging passes over the lines in the cyclic order fixed by
 * the starting wedge, each repeated once per mark, then wedge transport by
 * powers of the cyclic structure. */
inline Mat psi(const DefectSphereObject& S, long tau_from, long tau_to,
               long star_from, long star_to) {
  validate_defect_sphere(S);
  if (tau_from < 1 || tau_to < 1)
    throw std::domain_error("psi: marks must be positive");
  const MultiModule& M = *S.south->parent;
  const MultiModule& N = *S.north->parent;
  const MtcData& C = *S.C;
  long n = M.arity();
  long kM = S.south->k, kN = S.north->k;
  long shift = star_to - star_from;
  if (shift % kM != 0 || shift % kN != 0)
    throw std::domain_error("psi: star transport must move by whole periods");
  long reps = std::max(tau_from, tau_to);

  SumWord wM = M.word(), wN = N.word();
  auto coords = moddetail::hom_coords(C, wM, wN);
  long d = long(coords.size());
  std::vector<Morphism> pre;
  for (long i = 0; i < n; ++i) {
    const ModuleAction& aM = M.actions[i];
    Morphism kappa = compose(effective_delta(aM), aM.alg->eta);
    Morphism g = apply_local(kappa, wM, 0);
    pre.push_back(compose(apply_local(aM.rho, g.cod, 1), g));
  }
  Morphism tM = inverse_morphism(defdetail::phi_power(*S.south, shift / kM));
  Morphism tN = defdetail::phi_power(*S.north, shift / kN);

  Mat P(d, d);
  for (long col = 0; col < d; ++col) {
    std::vector<CycScalar> e(d, CycScalar::zero());
    e[col] = CycScalar::one();
    Morphism f = moddetail::coords_to_morphism(C, wM, wN, coords, e);
    for (long t = 0; t < n; ++t) {
      long a = ((star_from + t) % n + n) % n;
      for (long r = 0; r < reps; ++r)
        f = compose(N.actions[a].rho, compose(apply_local(f, pre[a].cod, 1), pre[a]));
    }
    f = compose(tN, compose(f, tM));
    std::vector<CycScalar> v = moddetail::morphism_to_coords(f, coords);
    for (long r = 0; r < d; ++r) P.at(r, col) = v[r];
  }
  return P;
}

inline Mat psi(const DefectSphereObject& S) {
  return psi(S, S.marks, S.marks, S.star, S.star);
}

inline long state_space_dim(const DefectSphereObject& S) {
  return psi(S).rank();
}

/** The honest cylinder diagram over the sphere wrapped around a coupon f:
 * one unit to algebra pair per mark on each line, acting on the source
 * module going up and on the target module coming back, nested outward in
 * the wedge order. Evaluating it applies the averaging to f. */
inline SlicedDiagram assemble_sphere(const DefectSphereObject& S, const Morphism& f) {
  validate_defect_sphere(S);
  const MultiModule& M = *S.south->parent;
  const MultiModule& N = *S.north->parent;
  const MtcData& C = *S.C;
  long n = M.arity();
  if (!(f.dom == M.word() && f.cod == N.word()))
    throw std::domain_error("assemble_sphere: coupon does not map pole to pole");

  std::vector<long> seq;  // innermost to outermost line passes
  for (long t = 0; t < n; ++t)
    for (long r = 0; r < S.marks; ++r) seq.push_back(((S.star + t) % n + n) % n);

  DiagramBuilder B(C, up_strands(M.word()));
  long L = long(seq.size());
  for (long i = L - 1; i >= 0; --i) {
    const ModuleAction& aM = M.actions[seq[i]];
    Morphism kappa = compose(effective_delta(aM), aM.alg->eta);
    B.at(L - 1 - i, Gen::named_gen("kappa", kappa));
    B.at(L - i, Gen::named_gen("act_south", aM.rho));
  }
  B.at(L, Gen::named_gen("pole_map", f));
  for (long i = 0; i < L; ++i)
    B.at(L - 1 - i, Gen::named_gen("act_north", N.actions[seq[i]].rho));
  return B.finish();
}

inline SlicedDiagram assemble_sphere(const DefectSphereObject& S) {
  const MultiModule& M = *S.south->parent;
  const MultiModule& N = *S.north->parent;
  if (!(M.word() == N.word()))
    throw std::domain_error("assemble_sphere: poles differ, pass a coupon");
  return assemble_sphere(S, id_morphism(*S.C, M.word()));
}

/** A plain ribbon loop encoded as a defect: the X line bounds a 2-stratum
 * carrying the trivial algebra, attached by the given number of rungs. */
inline SlicedDiagram ribbon_as_defect_loop(const MtcData& C, long x, long rungs = 1) {
  if (x < 0 || x >= C.ring.n) throw std::domain_error("ribbon loop: no such label");
  FrobeniusAlgebra T = trivial_algebra(C);
  SSObject X = SSObject::simple(x);
  Morphism kappa = compose(T.delta, T.eta);
  Morphism act_l = apply_local(T.eps, SumWord{T.obj, X}, 0);  // T X -> X
  Morphism act_r = apply_local(T.eps, SumWord{X, T.obj}, 1);  // X T -> X
  DiagramBuilder B(C, {});
  B.at(0, Gen::cup(X, true));
  for (long r = 0; r < rungs; ++r) {
    B.at(1, Gen::named_gen("stratum", kappa));
    B.at(0, Gen::named_gen("attach", act_r));
    B.at(1, Gen::named_gen("attach", act_l));
  }
  B.at(0, Gen::cap(X, false));
  return B.finish();
}

/** The loop with a framing twist. A line with no surfaces attached only
 * admits labels of trivial twist, so anything else is rejected. */
inline SlicedDiagram ribbon_as_defect_twisted_loop(const MtcData& C, long x) {
  if (x < 0 || x >= C.ring.n) throw std::domain_error("ribbon loop: no such label");
  if (!C.theta[x].is_one())
    throw std::domain_error(
        "ribbon twist: a bare defect line needs a label with trivial twist");
  SSObject X = SSObject::simple(x);
  DiagramBuilder B(C, {});
  B.at(0, Gen::cup(X, true));
  B.at(0, Gen::twist(true));
  B.at(0, Gen::cap(X, false));
  return B.finish();
}

/** The Hopf link of two defect encoded ribbons. */
inline SlicedDiagram ribbon_as_defect_hopf(const MtcData& C, long i, long j) {
  if (i < 0 || i >= C.ring.n || j < 0 || j >= C.ring.n)
    throw std::domain_error("ribbon hopf: no such label");
  SSObject I = SSObject::simple(i), J = SSObject::simple(j);
  DiagramBuilder B(C, {});
  B.at(0, Gen::cup(I, true));
  B.at(2, Gen::cup(J, true));
  B.at(1, Gen::braid(true));
  B.at(1, Gen::braid(true));
  B.at(0, Gen::cap(I, false));
  B.at(0, Gen::cap(J, false));
  return B.finish();
}

}  // namespace mtcdef
