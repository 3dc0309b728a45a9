#pragma once

#include "mtcdef/category.hpp"

#include <map>
#include <numeric>
#include <optional>

namespace mtcdef {

using Word = std::vector<long>;

/** Formal finite direct sum of simples. */
struct SSObject {
  std::map<long, long> mult;  // label -> multiplicity >= 1

  static SSObject simple(long l) {
    SSObject s;
    s.mult[l] = 1;
    return s;
  }
  long total() const {
    long t = 0;
    for (auto& [l, m] : mult) t += m;
    return t;
  }
  bool is_simple() const { return total() == 1; }
  friend bool operator==(const SSObject& a, const SSObject& b) { return a.mult == b.mult; }
  friend bool operator!=(const SSObject& a, const SSObject& b) { return !(a == b); }

  std::string str() const {
    std::string s = "(";
    bool first = true;
    for (auto& [l, m] : mult) {
      if (!first) s += "+";
      s += std::to_string(l);
      if (m > 1) s += "*" + std::to_string(m);
      first = false;
    }
    return s + ")";
  }
};

/** A tensor word whose factors are direct sums of simples. */
using SumWord = std::vector<SSObject>;

inline SumWord simple_word(const Word& ls) {
  SumWord w;
  for (long l : ls) w.push_back(SSObject::simple(l));
  return w;
}

inline SSObject dual_object(const MtcData& C, const SSObject& x) {
  SSObject d;
  for (auto& [l, m] : x.mult) d.mult[C.ring.dual[l]] += m;
  return d;
}

inline std::string word_str(const SumWord& w) {
  std::string s = "[";
  for (size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + w[i].str();
  return s + "]";
}

/** One choice of simple summand (label and copy index) per factor. */
struct Expansion {
  Word labels;
  std::vector<long> copies;
  friend bool operator==(const Expansion& a, const Expansion& b) {
    return a.labels == b.labels && a.copies == b.copies;
  }
};

namespace homdetail {

/** All left-nested fusion paths of a simple word landing on sector c.
 * A path lists the intermediates u_2..u_m; empty for words of length <= 1. */
inline std::vector<Word> enum_paths(const MtcData& C, const Word& ls, long c) {
  long m = ls.size();
  if (m == 0) return c == C.ring.unit ? std::vector<Word>{{}} : std::vector<Word>{};
  if (m == 1) return ls[0] == c ? std::vector<Word>{{}} : std::vector<Word>{};
  std::vector<Word> partial{{}};
  long u0 = ls[0];
  for (long j = 1; j < m; ++j) {
    std::vector<Word> next;
    for (const Word& p : partial) {
      long u = p.empty() ? u0 : p.back();
      for (long v : C.ring.channels(u, ls[j])) {
        if (j == m - 1 && v != c) continue;
        Word q = p;
        q.push_back(v);
        next.push_back(std::move(q));
      }
    }
    partial = std::move(next);
  }
  return partial;
}

}  // namespace homdetail

/** Enumerated fusion-tree basis of Hom(word -> c) for each sector c. */
struct WordBasis {
  struct Elem {
    long exp;   // index into exps
    Word path;  // intermediates u_2..u_m (ends at the sector)
  };
  std::vector<Expansion> exps;
  std::map<long, std::vector<Elem>> sectors;

  long dim(long c) const {
    auto it = sectors.find(c);
    return it == sectors.end() ? 0 : long(it->second.size());
  }
  long index_of(long c, long exp, const Word& path) const {
    auto it = sectors.find(c);
    if (it == sectors.end()) return -1;
    for (size_t i = 0; i < it->second.size(); ++i)
      if (it->second[i].exp == exp && it->second[i].path == path) return long(i);
    return -1;
  }
  long exp_index(const Expansion& e) const {
    for (size_t i = 0; i < exps.size(); ++i)
      if (exps[i] == e) return long(i);
    return -1;
  }
};

inline WordBasis make_basis(const MtcData& C, const SumWord& w) {
  WordBasis b;
  // mixed-radix enumeration of expansions, first factor most significant
  std::vector<std::vector<std::pair<long, long>>> opts;
  for (const SSObject& f : w) {
    std::vector<std::pair<long, long>> o;
    for (auto& [l, m] : f.mult)
      for (long s = 0; s < m; ++s) o.push_back({l, s});
    opts.push_back(std::move(o));
  }
  std::vector<long> idx(w.size(), 0);
  while (true) {
    Expansion e;
    for (size_t i = 0; i < w.size(); ++i) {
      e.labels.push_back(opts[i][idx[i]].first);
      e.copies.push_back(opts[i][idx[i]].second);
    }
    b.exps.push_back(std::move(e));
    long i = long(w.size()) - 1;
    while (i >= 0 && ++idx[i] == long(opts[i].size())) idx[i--] = 0;
    if (i < 0) break;
  }
  if (w.empty()) b.exps.assign(1, Expansion{});
  for (long ei = 0; ei < long(b.exps.size()); ++ei) {
    for (long c = 0; c < C.ring.n; ++c)
      for (Word& p : homdetail::enum_paths(C, b.exps[ei].labels, c))
        b.sectors[c].push_back({ei, std::move(p)});
  }
  // drop empty sectors
  for (auto it = b.sectors.begin(); it != b.sectors.end();)
    it = it->second.empty() ? b.sectors.erase(it) : std::next(it);
  return b;
}

/** Exact morphism between tensor words of direct sums, stored as one matrix
 * per total sector c in the fusion-tree bases of dom and cod. Missing
 * sectors are zero. */
struct Morphism {
  const MtcData* C = nullptr;
  SumWord dom, cod;
  std::map<long, Mat> blocks;

  Morphism() = default;
  Morphism(const MtcData& cat, SumWord d, SumWord c)
      : C(&cat), dom(std::move(d)), cod(std::move(c)) {}

  Morphism scaled(const CycScalar& s) const {
    Morphism r = *this;
    if (s.is_zero()) {
      r.blocks.clear();
      return r;
    }
    for (auto& [c, m] : r.blocks) m = m.scaled(s);
    return r;
  }

  friend Morphism operator+(const Morphism& a, const Morphism& b) {
    if (a.dom != b.dom || a.cod != b.cod)
      throw std::domain_error("morphism sum: type mismatch " + word_str(a.dom) + "->" +
                              word_str(a.cod) + " vs " + word_str(b.dom) + "->" +
                              word_str(b.cod));
    Morphism r = a;
    for (auto& [c, m] : b.blocks) {
      auto it = r.blocks.find(c);
      if (it == r.blocks.end())
        r.blocks[c] = m;
      else
        it->second = it->second + m;
    }
    return r;
  }
  friend Morphism operator-(const Morphism& a, const Morphism& b) {
    return a + b.scaled(-CycScalar::one());
  }

  bool is_zero() const {
    for (auto& [c, m] : blocks)
      if (!m.is_zero()) return false;
    return true;
  }

  friend bool operator==(const Morphism& a, const Morphism& b) {
    if (a.dom != b.dom || a.cod != b.cod) return false;
    return (a - b).is_zero();
  }
  friend bool operator!=(const Morphism& a, const Morphism& b) { return !(a == b); }
};

inline Morphism zero_morphism(const MtcData& C, const SumWord& dom, const SumWord& cod) {
  return Morphism(C, dom, cod);
}

inline Morphism id_morphism(const MtcData& C, const SumWord& w) {
  Morphism f(C, w, w);
  WordBasis b = make_basis(C, w);
  for (auto& [c, elems] : b.sectors) f.blocks[c] = Mat::identity(elems.size());
  return f;
}

inline Morphism compose(const Morphism& g, const Morphism& f) {
  if (f.cod != g.dom)
    throw std::domain_error("compose: cod " + word_str(f.cod) + " does not match dom " +
                            word_str(g.dom));
  Morphism r(*f.C, f.dom, g.cod);
  for (auto& [c, mg] : g.blocks) {
    auto it = f.blocks.find(c);
    if (it == f.blocks.end()) continue;
    Mat prod = mg * it->second;
    if (!prod.is_zero()) r.blocks[c] = std::move(prod);
  }
  return r;
}

namespace homdetail {

/** Coefficients of the decomposed basis element (b, q) of
 * Hom(a x_1..x_r -> v) (fuse x's along q to b, then one vertex (a,b;v))
 * over the left-nested path basis: a product of inverse F entries along
 * the ladder. */
inline CycScalar split_coeff(const MtcData& C, long a, const Word& xs, long v,
                             const Word& midpath, const Word& q, long b) {
  long r = xs.size();
  CycScalar coef = CycScalar::one();
  auto qat = [&](long j) { return j == 1 ? xs[0] : (j == r ? b : q[j - 2]); };
  auto wat = [&](long j) { return j == 0 ? a : (j == r ? v : midpath[j - 1]); };
  // mid path lists the labels after consuming x_1..x_r; w_j := label after x_j
  for (long j = 2; j <= r; ++j) {
    const FBlock& blk = C.fblock(a, qat(j - 1), xs[j - 1], wat(j));
    long fi = blk.findex(qat(j)), ei = blk.eindex(wat(j - 1));
    if (fi < 0 || ei < 0) return CycScalar::zero();
    coef *= blk.minv.at(fi, ei);
    if (coef.is_zero()) return coef;
  }
  return coef;
}

struct MidBasis {
  // left-nested side: (expansion of the segment word, labels after each letter)
  std::vector<std::pair<long, Word>> ln;
  // decomposed side: (expansion, segment-internal path q, segment total b)
  struct Dec {
    long exp;
    Word q;
    long b;
  };
  std::vector<Dec> dec;

  long ln_index(long exp, const Word& mid) const {
    for (size_t i = 0; i < ln.size(); ++i)
      if (ln[i].first == exp && ln[i].second == mid) return long(i);
    return -1;
  }
};

/** Bases of Hom(a (x_1..x_r) -> v) for a sum-word segment: the left-nested
 * basis (as embedded in host paths) and the split basis indexed by the
 * segment's own fusion trees. */
inline MidBasis make_mid_basis(const MtcData& C, long a, const WordBasis& wb, long v) {
  MidBasis mb;
  for (long ei = 0; ei < long(wb.exps.size()); ++ei) {
    const Word& xs = wb.exps[ei].labels;
    Word aug;
    aug.push_back(a);
    for (long x : xs) aug.push_back(x);
    for (Word& p : enum_paths(C, aug, v)) mb.ln.push_back({ei, std::move(p)});
  }
  for (auto& [b, elems] : wb.sectors) {
    if (!C.adm(a, b, v)) continue;
    for (auto& el : elems) mb.dec.push_back({el.exp, el.path, b});
  }
  return mb;
}

/** Matrix of the split isomorphism from the decomposed basis to the
 * left-nested basis. */
inline Mat split_iso(const MtcData& C, long a, const WordBasis& wb, long v,
                     const MidBasis& mb) {
  Mat m(mb.ln.size(), mb.dec.size());
  for (size_t col = 0; col < mb.dec.size(); ++col) {
    const auto& d = mb.dec[col];
    const Word& xs = wb.exps[d.exp].labels;
    for (size_t row = 0; row < mb.ln.size(); ++row) {
      if (mb.ln[row].first != d.exp) continue;
      m.at(row, col) = split_coeff(C, a, xs, v, mb.ln[row].second, d.q, d.b);
    }
  }
  return m;
}

}  // namespace homdetail

/** id (x) f (x) id on a host word, with f spanning factors [p, p+|dom f|). */
inline Morphism apply_local(const Morphism& f, const SumWord& host, long p) {
  const MtcData& C = *f.C;
  long r = f.dom.size(), s = f.cod.size(), m = host.size();
  if (p < 0 || p + r > m) throw std::domain_error("apply_local: position out of range");
  for (long i = 0; i < r; ++i)
    if (host[p + i] != f.dom[i])
      throw std::domain_error("apply_local: host factors " + word_str(host) +
                              " do not contain dom " + word_str(f.dom) + " at " +
                              std::to_string(p));
  SumWord E;
  E.insert(E.end(), host.begin(), host.begin() + p);
  E.insert(E.end(), f.cod.begin(), f.cod.end());
  E.insert(E.end(), host.begin() + p + r, host.end());

  WordBasis BD = make_basis(C, host), BE = make_basis(C, E);
  WordBasis BX = make_basis(C, f.dom), BY = make_basis(C, f.cod);

  // T^{(a,v)}: the matrix of id_a (x) f between mid-segment bases
  struct TEntry {
    homdetail::MidBasis mx, my;
    Mat t;
  };
  std::map<std::pair<long, long>, TEntry> tcache;
  auto tblock = [&](long a, long v) -> TEntry& {
    auto key = std::make_pair(a, v);
    auto it = tcache.find(key);
    if (it != tcache.end()) return it->second;
    TEntry te;
    if (a < 0) {
      // no prefix: mid bases are the segment's own bases at sector v
      for (auto& src : {std::make_pair(&BX, &te.mx), std::make_pair(&BY, &te.my)}) {
        auto bit = src.first->sectors.find(v);
        if (bit != src.first->sectors.end())
          for (auto& el : bit->second) {
            src.second->ln.push_back({el.exp, el.path});
            src.second->dec.push_back({el.exp, el.path, v});
          }
      }
      te.t = Mat(te.my.ln.size(), te.mx.ln.size());
      auto fit = f.blocks.find(v);
      if (fit != f.blocks.end()) te.t = fit->second;
      return tcache.emplace(key, std::move(te)).first->second;
    }
    te.mx = homdetail::make_mid_basis(C, a, BX, v);
    te.my = homdetail::make_mid_basis(C, a, BY, v);
    Mat phix = homdetail::split_iso(C, a, BX, v, te.mx);
    Mat phiy = homdetail::split_iso(C, a, BY, v, te.my);
    Mat mid(te.my.dec.size(), te.mx.dec.size());
    for (size_t i = 0; i < te.my.dec.size(); ++i)
      for (size_t j = 0; j < te.mx.dec.size(); ++j) {
        if (te.my.dec[i].b != te.mx.dec[j].b) continue;
        auto fit = f.blocks.find(te.my.dec[i].b);
        if (fit == f.blocks.end()) continue;
        long ri = BY.index_of(te.my.dec[i].b, te.my.dec[i].exp, te.my.dec[i].q);
        long ci = BX.index_of(te.mx.dec[j].b, te.mx.dec[j].exp, te.mx.dec[j].q);
        mid.at(i, j) = fit->second.at(ri, ci);
      }
    te.t = phiy * mid * phix.inverse();
    return tcache.emplace(key, std::move(te)).first->second;
  };

  Morphism out(C, host, E);
  for (auto& [c, delems] : BD.sectors) {
    Mat blk(BE.dim(c), delems.size());
    bool nonzero = false;
    for (size_t col = 0; col < delems.size(); ++col) {
      const auto& de = delems[col];
      const Expansion& expD = BD.exps[de.exp];
      const Word& letters = expD.labels;
      auto uat = [&](long j) -> long {  // label after consuming j letters
        if (j <= 0) return C.ring.unit;
        if (j == 1) return letters[0];
        return de.path[j - 2];
      };
      long a = (p == 0) ? -1 : uat(p);
      long v = (p + r == 0) ? C.ring.unit : uat(p + r);
      TEntry& te = tblock(a, v);
      // segment-local dom coordinates
      Expansion ex{Word(letters.begin() + p, letters.begin() + p + r),
                   std::vector<long>(expD.copies.begin() + p, expD.copies.begin() + p + r)};
      long exi = BX.exp_index(ex);
      Word mid;
      for (long j = p + 1; j <= p + r; ++j) mid.push_back(uat(j));
      if (p == 0 && r >= 1) mid.erase(mid.begin());  // segment path skips u_1
      long tcol = te.mx.ln_index(exi, mid);
      if (tcol < 0) throw std::logic_error("apply_local: dom mid coordinate missing");
      for (size_t trow = 0; trow < te.my.ln.size(); ++trow) {
        const CycScalar& coef = te.t.at(trow, tcol);
        if (coef.is_zero()) continue;
        // rebuild the codomain basis element
        Expansion expE;
        expE.labels.assign(letters.begin(), letters.begin() + p);
        expE.copies.assign(expD.copies.begin(), expD.copies.begin() + p);
        const Expansion& ey = BY.exps[te.my.ln[trow].first];
        expE.labels.insert(expE.labels.end(), ey.labels.begin(), ey.labels.end());
        expE.copies.insert(expE.copies.end(), ey.copies.begin(), ey.copies.end());
        expE.labels.insert(expE.labels.end(), letters.begin() + p + r, letters.end());
        expE.copies.insert(expE.copies.end(), expD.copies.begin() + p + r,
                           expD.copies.end());
        long eei = BE.exp_index(expE);
        // path entries of E are the labels after consuming 2..|E| letters:
        // prefix part, then the mid segment, then the tail
        Word pathE;
        for (long j = 2; j <= p; ++j) pathE.push_back(uat(j));
        const Word& midc = te.my.ln[trow].second;
        pathE.insert(pathE.end(), midc.begin(), midc.end());
        long tstart = (p == 0 && s == 0) ? 2 : 1;  // then the tail head is E's first letter
        for (long t = tstart; t <= m - p - r; ++t) pathE.push_back(uat(p + r + t));
        long row = BE.index_of(c, eei, pathE);
        if (row < 0) throw std::logic_error("apply_local: cod coordinate missing");
        blk.at(row, col) += coef;
        nonzero = true;
      }
    }
    if (nonzero) out.blocks[c] = std::move(blk);
  }
  return out;
}

inline Morphism tensor(const Morphism& f, const Morphism& g) {
  const MtcData& C = *f.C;
  SumWord host1 = f.dom;
  host1.insert(host1.end(), g.dom.begin(), g.dom.end());
  Morphism step1 = apply_local(f, host1, 0);
  SumWord host2 = f.cod;
  host2.insert(host2.end(), g.dom.begin(), g.dom.end());
  Morphism step2 = apply_local(g, host2, f.cod.size());
  return compose(step2, step1);
}

/** Braiding (or its inverse) of two sum objects as a standalone morphism
 * [X,Y] -> [Y,X]. */
inline Morphism braid_pair(const MtcData& C, const SSObject& X, const SSObject& Y,
                           bool inverse = false) {
  SumWord dom{X, Y}, cod{Y, X};
  Morphism f(C, dom, cod);
  WordBasis bd = make_basis(C, dom), bc = make_basis(C, cod);
  for (auto& [c, elems] : bd.sectors) {
    Mat blk(bc.dim(c), elems.size());
    for (size_t col = 0; col < elems.size(); ++col) {
      const Expansion& e = bd.exps[elems[col].exp];
      Expansion swapped{{e.labels[1], e.labels[0]}, {e.copies[1], e.copies[0]}};
      long ei = bc.exp_index(swapped);
      long row = bc.index_of(c, ei, elems[col].path);
      long i = e.labels[0], j = e.labels[1];
      blk.at(row, col) = inverse ? C.Rinv(i, j, c) : C.R(i, j, c);
    }
    f.blocks[c] = std::move(blk);
  }
  return f;
}

/** Adjacent braiding inside a host word, at factors (p, p+1). */
inline Morphism braid_adjacent(const MtcData& C, const SumWord& w, long p,
                               bool inverse = false) {
  if (p < 0 || p + 2 > long(w.size()))
    throw std::domain_error("braid_adjacent: position out of range");
  return apply_local(braid_pair(C, w[p], w[p + 1], inverse), w, p);
}

/** The twist of the whole word object: theta_c on each total sector. */
inline Morphism twist_word(const MtcData& C, const SumWord& w, bool inverse = false) {
  Morphism f = id_morphism(C, w);
  for (auto& [c, m] : f.blocks)
    m = m.scaled(inverse ? C.theta[c].inv() : C.theta[c]);
  return f;
}

/** theta applied to a single factor of the word. */
inline Morphism twist_factor(const MtcData& C, const SumWord& w, long p,
                             bool inverse = false) {
  return apply_local(twist_word(C, {w[p]}, inverse), w, p);
}

namespace homdetail {

/** Raw duality pairings with unit coefficients; the normalized versions
 * below rescale so the zig-zags hold. */
inline Morphism ev_raw(const MtcData& C, const SSObject& X, const CycScalar& lambda) {
  SumWord dom{dual_object(C, X), X};
  Morphism f(C, dom, {});
  WordBasis bd = make_basis(C, dom);
  long u = C.ring.unit;
  auto it = bd.sectors.find(u);
  if (it == bd.sectors.end()) return f;
  Mat blk(1, it->second.size());
  for (size_t col = 0; col < it->second.size(); ++col) {
    const Expansion& e = bd.exps[it->second[col].exp];
    if (e.copies[0] == e.copies[1]) blk.at(0, col) = lambda;
  }
  f.blocks[u] = std::move(blk);
  return f;
}

inline Morphism coev_raw(const MtcData& C, const SSObject& X, const CycScalar& mu) {
  SumWord cod{X, dual_object(C, X)};
  Morphism f(C, {}, cod);
  WordBasis bc = make_basis(C, cod);
  long u = C.ring.unit;
  auto it = bc.sectors.find(u);
  if (it == bc.sectors.end()) return f;
  Mat blk(it->second.size(), 1);
  for (size_t row = 0; row < it->second.size(); ++row) {
    const Expansion& e = bc.exps[it->second[row].exp];
    if (e.copies[0] == e.copies[1]) blk.at(row, 0) = mu;
  }
  f.blocks[u] = std::move(blk);
  return f;
}

/** Zig-zag scalar of label i with unit pairing coefficients. */
inline CycScalar zigzag_scale(const MtcData& C, long i) {
  SSObject X = SSObject::simple(i);
  SumWord wi{X};
  Morphism step1 = apply_local(coev_raw(C, X, CycScalar::one()), wi, 0);   // i -> i i* i
  Morphism step2 = apply_local(ev_raw(C, X, CycScalar::one()), step1.cod, 1);
  Morphism zz = compose(step2, step1);
  auto it = zz.blocks.find(i);
  if (it == zz.blocks.end()) throw std::logic_error("zigzag degenerate");
  return it->second.at(0, 0);
}

}  // namespace homdetail

/** Left evaluation X^ (x) X -> 1, normalized so both zig-zags hold. */
inline Morphism ev_left(const MtcData& C, const SSObject& X) {
  Morphism f = homdetail::ev_raw(C, X, CycScalar::one());
  // rescale per label: the pairing coefficient of the summand i absorbs 1/zz(i)
  WordBasis bd = make_basis(C, f.dom);
  long u = C.ring.unit;
  auto it = f.blocks.find(u);
  if (it == f.blocks.end()) return f;
  auto& elems = bd.sectors[u];
  for (size_t col = 0; col < elems.size(); ++col) {
    if (it->second.at(0, col).is_zero()) continue;
    long i = bd.exps[elems[col].exp].labels[1];
    it->second.at(0, col) = homdetail::zigzag_scale(C, i).inv();
  }
  return f;
}

inline Morphism coev_left(const MtcData& C, const SSObject& X) {
  return homdetail::coev_raw(C, X, CycScalar::one());
}

/** Right duality derived from the ribbon structure:
 * ev_right = ev_left . braid . (theta (x) id), coev_right likewise. */
inline Morphism ev_right(const MtcData& C, const SSObject& X) {
  SSObject Xd = dual_object(C, X);
  SumWord w{X, Xd};
  Morphism tw = twist_factor(C, w, 0);
  Morphism br = braid_adjacent(C, w, 0);
  return compose(ev_left(C, X), compose(br, tw));
}

inline Morphism coev_right(const MtcData& C, const SSObject& X) {
  SSObject Xd = dual_object(C, X);
  Morphism cv = coev_left(C, X);      // 1 -> X X^
  Morphism br = braid_adjacent(C, cv.cod, 0);  // -> X^ X
  Morphism tw = twist_factor(C, br.cod, 1);
  return compose(tw, compose(br, cv));
}

/** Right partial trace over the last tensor factor. */
inline Morphism partial_trace_last(const Morphism& f) {
  if (f.dom != f.cod || f.dom.empty())
    throw std::domain_error("partial_trace_last: needs a nonempty endomorphism");
  const MtcData& C = *f.C;
  SumWord rest(f.dom.begin(), f.dom.end() - 1);
  SSObject Z = f.dom.back();
  long m = f.dom.size();
  Morphism cv = coev_left(C, Z);  // 1 -> Z Z^
  Morphism step1 = apply_local(cv, rest, long(rest.size()));  // rest -> rest Z Z^
  Morphism step2 = apply_local(f, step1.cod, 0);              // acts on rest+Z
  Morphism step3 = apply_local(ev_right(C, Z), step2.cod, m - 1);
  return compose(step3, compose(step2, step1));
}

/** Quantum trace of an endomorphism, via the ribbon right duality. */
inline CycScalar qtrace(const Morphism& f) {
  if (f.dom != f.cod)
    throw std::domain_error("qtrace: not an endomorphism: " + word_str(f.dom) + " vs " +
                            word_str(f.cod));
  Morphism g = f;
  while (!g.dom.empty()) g = partial_trace_last(g);
  auto it = g.blocks.find(f.C->ring.unit);
  if (it == g.blocks.end() || it->second.rows() == 0) return CycScalar::zero();
  return it->second.at(0, 0);
}

/** Blockwise inverse; requires every sector block square and invertible. */
inline Morphism inverse_morphism(const Morphism& f) {
  const MtcData& C = *f.C;
  WordBasis bd = make_basis(C, f.dom), bc = make_basis(C, f.cod);
  Morphism g(C, f.cod, f.dom);
  for (long c = 0; c < C.ring.n; ++c) {
    long dd = bd.dim(c), dc = bc.dim(c);
    if (dd != dc)
      throw std::domain_error("inverse_morphism: sector " + std::to_string(c) +
                              " has mismatched dimensions");
    if (dd == 0) continue;
    auto it = f.blocks.find(c);
    if (it == f.blocks.end())
      throw std::domain_error("inverse_morphism: sector " + std::to_string(c) +
                              " is zero");
    g.blocks[c] = it->second.inverse();
  }
  return g;
}

/** The scalar g with f = g id, if f is a scalar multiple of the identity. */
inline std::optional<CycScalar> scalar_of_endo(const Morphism& f) {
  if (f.dom != f.cod) return std::nullopt;
  CycScalar g = CycScalar::zero();
  bool found = false;
  for (auto& [c, m] : f.blocks) {
    for (long i = 0; i < std::min(m.rows(), m.cols()) && !found; ++i)
      if (!m.at(i, i).is_zero()) {
        g = m.at(i, i);
        found = true;
      }
    if (found) break;
  }
  if (f == id_morphism(*f.C, f.dom).scaled(g)) return g;
  return std::nullopt;
}

inline long hom_dim(const MtcData& C, const SumWord& X, const SumWord& Y) {
  WordBasis bx = make_basis(C, X), by = make_basis(C, Y);
  long d = 0;
  for (auto& [c, ex] : bx.sectors) d += long(ex.size()) * by.dim(c);
  return d;
}

}  // namespace mtcdef
