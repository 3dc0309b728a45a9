#pragma once

#include "mtcdef/homspace.hpp"

namespace mtcdef {

/** An oriented ribbon end: upward (+1) reads as the object itself,
 * downward (-1) as its dual. */
struct Strand {
  SSObject obj;
  int orient = +1;
  friend bool operator==(const Strand& a, const Strand& b) {
    return a.obj == b.obj && a.orient == b.orient;
  }
  friend bool operator!=(const Strand& a, const Strand& b) { return !(a == b); }
};
using StrandList = std::vector<Strand>;

inline StrandList up_strands(const SumWord& w) {
  StrandList s;
  for (const SSObject& x : w) s.push_back({x, +1});
  return s;
}

inline SSObject effective(const MtcData& C, const Strand& s) {
  return s.orient > 0 ? s.obj : dual_object(C, s.obj);
}

inline SumWord effective_word(const MtcData& C, const StrandList& s) {
  SumWord w;
  for (const Strand& t : s) w.push_back(effective(C, t));
  return w;
}

/** One generator occupying consecutive strand positions in a slice. */
struct Gen {
  enum class Kind {
    id,
    braid_pos,
    braid_neg,
    cup_left,   // births (X up, X down):  coev
    cup_right,  // births (X down, X up):  ribbon-side coev
    cap_left,   // kills (X down, X up):   ev
    cap_right,  // kills (X up, X down):   ribbon-side ev
    twist_pos,
    twist_neg,
    coupon,
    named,
    half_twist
  };
  Kind kind = Kind::id;
  SSObject obj;      // cup/cap color
  Morphism f;        // coupon payload; named generators carry theirs resolved
  std::string name;  // named-generator tag (mu, eta, delta, eps, rho, phi, ...)
  int chir = +1;     // half-twist chirality

  static Gen id_gen() { return {}; }
  static Gen braid(bool positive) {
    Gen g;
    g.kind = positive ? Kind::braid_pos : Kind::braid_neg;
    return g;
  }
  static Gen cup(const SSObject& x, bool left_up = true) {
    Gen g;
    g.kind = left_up ? Kind::cup_left : Kind::cup_right;
    g.obj = x;
    return g;
  }
  static Gen cap(const SSObject& x, bool right_up = true) {
    Gen g;
    g.kind = right_up ? Kind::cap_left : Kind::cap_right;
    g.obj = x;
    return g;
  }
  static Gen twist(bool positive) {
    Gen g;
    g.kind = positive ? Kind::twist_pos : Kind::twist_neg;
    return g;
  }
  static Gen coupon_gen(Morphism m) {
    Gen g;
    g.kind = Kind::coupon;
    g.f = std::move(m);
    return g;
  }
  static Gen named_gen(std::string n, Morphism m) {
    Gen g;
    g.kind = Kind::named;
    g.name = std::move(n);
    g.f = std::move(m);
    return g;
  }
  static Gen half_twist_marker(int chirality) {
    Gen g;
    g.kind = Kind::half_twist;
    g.chir = chirality >= 0 ? +1 : -1;
    return g;
  }

  long n_in() const {
    switch (kind) {
      case Kind::cup_left:
      case Kind::cup_right: return 0;
      case Kind::braid_pos:
      case Kind::braid_neg:
      case Kind::cap_left:
      case Kind::cap_right: return 2;
      case Kind::coupon:
      case Kind::named: return long(f.dom.size());
      default: return 1;
    }
  }
  long n_out() const {
    switch (kind) {
      case Kind::cup_left:
      case Kind::cup_right:
      case Kind::braid_pos:
      case Kind::braid_neg: return 2;
      case Kind::cap_left:
      case Kind::cap_right: return 0;
      case Kind::coupon:
      case Kind::named: return long(f.cod.size());
      default: return 1;
    }
  }
};

struct Slice {
  std::vector<Gen> gens;
};

/** A ribbon diagram stored as horizontal slices, composed bottom to top. */
struct SlicedDiagram {
  const MtcData* C = nullptr;
  StrandList bin, bout;
  std::vector<Slice> slices;
};

struct DiagramReport {
  bool ok = true;
  std::string error;
  long slice = -1;  // index of the offending slice, or -1
  bool closed = false;
  std::string str() const {
    if (ok) return closed ? "ok (closed)" : "ok";
    return "slice " + std::to_string(slice) + ": " + error;
  }
};

namespace diagdetail {

/** Applies one generator to the running strand types at position p.
 * Returns an error string, or empty on success. */
inline std::string step_types(const MtcData& C, StrandList& s, long p, const Gen& g) {
  long nin = g.n_in();
  if (p < 0 || p + nin > long(s.size())) return "generator exceeds slice width";
  auto eff = [&](long i) { return effective(C, s[i]); };
  using K = Gen::Kind;
  switch (g.kind) {
    case K::id:
    case K::twist_pos:
    case K::twist_neg:
    case K::half_twist: return "";
    case K::braid_pos:
    case K::braid_neg: std::swap(s[p], s[p + 1]); return "";
    case K::cup_left:
      s.insert(s.begin() + p, {Strand{g.obj, +1}, Strand{g.obj, -1}});
      return "";
    case K::cup_right:
      s.insert(s.begin() + p, {Strand{g.obj, -1}, Strand{g.obj, +1}});
      return "";
    case K::cap_left: {
      SSObject d = dual_object(C, g.obj);
      if (!(eff(p) == d && eff(p + 1) == g.obj))
        return "cap does not match strand colors " + eff(p).str() + "," + eff(p + 1).str();
      s.erase(s.begin() + p, s.begin() + p + 2);
      return "";
    }
    case K::cap_right: {
      SSObject d = dual_object(C, g.obj);
      if (!(eff(p) == g.obj && eff(p + 1) == d))
        return "cap does not match strand colors " + eff(p).str() + "," + eff(p + 1).str();
      s.erase(s.begin() + p, s.begin() + p + 2);
      return "";
    }
    case K::coupon:
    case K::named: {
      for (long i = 0; i < nin; ++i)
        if (!(eff(p + i) == g.f.dom[i]))
          return "coupon domain mismatch at strand " + std::to_string(p + i);
      s.erase(s.begin() + p, s.begin() + p + nin);
      StrandList outs = up_strands(g.f.cod);
      s.insert(s.begin() + p, outs.begin(), outs.end());
      return "";
    }
  }
  return "unknown generator";
}

/** Half-twist bookkeeping parallel to step_types: markers pair up along a
 * ribbon; a strand may not end while a mark is unpaired. pend[i] is 0 or
 * the chirality of the unpaired mark. resolved receives the net full-twist
 * power (+1, 0, -1) and position whenever a pair closes. */
inline std::string step_marks(std::vector<int>& pend, long p, const Gen& g,
                              std::vector<std::pair<long, int>>* resolved) {
  using K = Gen::Kind;
  long nin = g.n_in();
  switch (g.kind) {
    case K::id:
    case K::twist_pos:
    case K::twist_neg: return "";
    case K::half_twist:
      if (pend[p] == 0) {
        pend[p] = g.chir;
      } else {
        int net = pend[p] + g.chir;
        pend[p] = 0;
        if (resolved && net != 0) resolved->push_back({p, net / 2});
      }
      return "";
    case K::braid_pos:
    case K::braid_neg: std::swap(pend[p], pend[p + 1]); return "";
    case K::cup_left:
    case K::cup_right: pend.insert(pend.begin() + p, {0, 0}); return "";
    case K::cap_left:
    case K::cap_right:
    case K::coupon:
    case K::named:
      for (long i = 0; i < nin; ++i)
        if (pend[p + i] != 0) return "odd half-twist count on a ribbon";
      pend.erase(pend.begin() + p, pend.begin() + p + nin);
      for (long i = 0; i < g.n_out(); ++i) pend.insert(pend.begin() + p, 0);
      return "";
  }
  return "";
}

}  // namespace diagdetail

inline DiagramReport typecheck(const SlicedDiagram& D) {
  const MtcData& C = *D.C;
  DiagramReport rep;
  StrandList cur = D.bin;
  std::vector<int> pend(cur.size(), 0);
  for (long si = 0; si < long(D.slices.size()); ++si) {
    long width = 0;
    for (const Gen& g : D.slices[si].gens) width += g.n_in();
    if (width != long(cur.size())) {
      rep.ok = false;
      rep.slice = si;
      rep.error = "slice consumes " + std::to_string(width) + " strands but " +
                  std::to_string(cur.size()) + " are present";
      return rep;
    }
    long p = 0;
    for (const Gen& g : D.slices[si].gens) {
      std::string err = diagdetail::step_types(C, cur, p, g);
      if (err.empty()) err = diagdetail::step_marks(pend, p, g, nullptr);
      if (!err.empty()) {
        rep.ok = false;
        rep.slice = si;
        rep.error = err;
        return rep;
      }
      p += g.n_out();
    }
  }
  for (int m : pend)
    if (m != 0) {
      rep.ok = false;
      rep.slice = long(D.slices.size());
      rep.error = "odd half-twist count on a ribbon";
      return rep;
    }
  if (cur != D.bout) {
    rep.ok = false;
    rep.slice = long(D.slices.size());
    rep.error = "outgoing boundary does not match the declared one";
    return rep;
  }
  rep.closed = D.bin.empty() && D.bout.empty();
  return rep;
}

inline Morphism evaluate(const SlicedDiagram& D) {
  const MtcData& C = *D.C;
  DiagramReport rep = typecheck(D);
  if (!rep.ok) throw std::domain_error("diagram: " + rep.str());

  SumWord eff = effective_word(C, D.bin);
  Morphism acc = id_morphism(C, eff);
  StrandList cur = D.bin;
  std::vector<int> pend(cur.size(), 0);
  auto apply = [&](const Morphism& loc, long p) {
    Morphism full = apply_local(loc, eff, p);
    eff = full.cod;
    acc = compose(full, acc);
  };
  for (const Slice& sl : D.slices) {
    long p = 0;
    for (const Gen& g : sl.gens) {
      using K = Gen::Kind;
      switch (g.kind) {
        case K::id: break;
        case K::braid_pos: apply(braid_pair(C, eff[p], eff[p + 1], false), p); break;
        case K::braid_neg: apply(braid_pair(C, eff[p], eff[p + 1], true), p); break;
        case K::cup_left: apply(coev_left(C, g.obj), p); break;
        case K::cup_right: apply(coev_right(C, g.obj), p); break;
        case K::cap_left: apply(ev_left(C, g.obj), p); break;
        case K::cap_right: apply(ev_right(C, g.obj), p); break;
        case K::twist_pos: apply(twist_word(C, {eff[p]}, false), p); break;
        case K::twist_neg: apply(twist_word(C, {eff[p]}, true), p); break;
        case K::coupon:
        case K::named: apply(g.f, p); break;
        case K::half_twist: {
          std::vector<std::pair<long, int>> res;
          diagdetail::step_marks(pend, p, g, &res);
          for (auto& [rp, pw] : res) apply(twist_word(C, {eff[rp]}, pw < 0), rp);
          break;
        }
      }
      if (g.kind != K::half_twist) {
        std::vector<std::pair<long, int>> res;
        diagdetail::step_types(C, cur, p, g);
        diagdetail::step_marks(pend, p, g, &res);
      }
      p += g.n_out();
    }
  }
  return acc;
}

inline CycScalar evaluate_closed(const SlicedDiagram& D) {
  if (!D.bin.empty() || !D.bout.empty())
    throw std::domain_error("evaluate_closed: diagram has open boundary strands");
  Morphism m = evaluate(D);
  auto it = m.blocks.find(D.C->ring.unit);
  if (it == m.blocks.end()) return CycScalar::zero();
  return it->second.at(0, 0);
}

/** Convenience builder that tracks the running boundary. */
struct DiagramBuilder {
  SlicedDiagram D;
  StrandList cur;

  DiagramBuilder(const MtcData& C, StrandList in) : cur(in) {
    D.C = &C;
    D.bin = std::move(in);
  }

  /** Appends a slice with g at strand position p and identities elsewhere. */
  DiagramBuilder& at(long p, const Gen& g) {
    Slice sl;
    for (long i = 0; i < p; ++i) sl.gens.push_back(Gen::id_gen());
    sl.gens.push_back(g);
    for (long i = p + g.n_in(); i < long(cur.size()); ++i) sl.gens.push_back(Gen::id_gen());
    return row(std::move(sl.gens));
  }

  DiagramBuilder& row(std::vector<Gen> gens) {
    Slice sl{std::move(gens)};
    long p = 0;
    for (const Gen& g : sl.gens) {
      std::string err = diagdetail::step_types(*D.C, cur, p, g);
      if (!err.empty()) throw std::domain_error("diagram builder: " + err);
      p += g.n_out();
    }
    D.slices.push_back(std::move(sl));
    return *this;
  }

  SlicedDiagram finish() {
    D.bout = cur;
    return D;
  }
};

}  // namespace mtcdef
