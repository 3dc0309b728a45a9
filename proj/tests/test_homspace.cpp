#include "catch2/catch_amalgamated.hpp"

#include "mtcdef/homspace.hpp"
#include "mtcdef/sl2k.hpp"

#include <random>

using namespace mtcdef;

namespace {

Morphism random_morphism(const MtcData& C, const SumWord& dom, const SumWord& cod,
                         std::mt19937& rng) {
  Morphism f(C, dom, cod);
  WordBasis bd = make_basis(C, dom), bc = make_basis(C, cod);
  std::uniform_int_distribution<long> coef(-3, 3);
  for (auto& [c, delems] : bd.sectors) {
    long rows = bc.dim(c);
    if (rows == 0) continue;
    Mat m(rows, delems.size());
    bool nz = false;
    for (long i = 0; i < rows; ++i)
      for (long j = 0; j < long(delems.size()); ++j) {
        long v = coef(rng);
        if (v) {
          m.at(i, j) = CycScalar(v);
          nz = true;
        }
      }
    if (nz) f.blocks[c] = std::move(m);
  }
  return f;
}

Morphism double_braid(const MtcData& C, const SumWord& w) {
  Morphism b1 = braid_adjacent(C, w, 0);
  return compose(braid_adjacent(C, b1.cod, 0), b1);
}

}  // namespace

TEST_CASE("fusion tree bases and hom dimensions", "[homspace]") {
  MtcData C16 = gen_sl2k(16);
  CHECK(hom_dim(C16, simple_word({1, 1}), simple_word({0})) == 1);
  CHECK(hom_dim(C16, simple_word({8, 16}), simple_word({8})) == 1);
  CHECK(hom_dim(C16, simple_word({1, 1}), simple_word({1})) == 0);
  CHECK(hom_dim(C16, simple_word({16, 16}), simple_word({0})) == 1);

  MtcData C2 = gen_sl2k(2);
  CHECK(hom_dim(C2, simple_word({1, 1, 1}), simple_word({1})) == 2);
  // empty word is the tensor unit
  CHECK(hom_dim(C2, {}, simple_word({0})) == 1);
  CHECK(hom_dim(C2, {}, simple_word({1})) == 0);

  // direct sums with repeated summands keep separate copies
  SSObject X;
  X.mult[0] = 1;
  X.mult[1] = 1;
  CHECK(hom_dim(C2, {X, X}, simple_word({1})) == 2);
  CHECK(hom_dim(C2, {X, X}, {X}) == 4);

  WordBasis b = make_basis(C2, {X, X});
  CHECK(b.exps.size() == 4);
  CHECK(b.dim(0) == 2);  // 0x0 and 1x1
  CHECK(b.dim(1) == 2);
  CHECK(b.dim(2) == 1);
}

TEST_CASE("composition and identities", "[homspace]") {
  MtcData C = gen_sl2k(3);
  auto w = simple_word({1, 2, 1});
  Morphism id = id_morphism(C, w);
  CHECK(compose(id, id) == id);

  std::mt19937 rng(21);
  auto v = simple_word({2, 1});
  Morphism f = random_morphism(C, w, v, rng);
  CHECK(compose(id_morphism(C, v), f) == f);
  CHECK(compose(f, id) == f);
  CHECK_THROWS_AS(compose(f, f), std::domain_error);

  Morphism z = zero_morphism(C, w, v);
  CHECK(compose(z, id) == z);
  CHECK((f - f).is_zero());
  CHECK(f + z == f);
}

TEST_CASE("tensor is functorial", "[homspace]") {
  MtcData C = gen_sl2k(3);
  std::mt19937 rng(22);
  auto wa = simple_word({1, 2}), wb = simple_word({1}), wc = simple_word({2});
  Morphism f = random_morphism(C, wa, wb, rng);
  Morphism g = random_morphism(C, wb, wc, rng);
  Morphism f2 = random_morphism(C, wc, wb, rng);
  Morphism g2 = random_morphism(C, wb, wa, rng);

  // (g.f) (x) (g2.f2) == (g (x) g2) . (f (x) f2)
  Morphism lhs = tensor(compose(g, f), compose(g2, f2));
  Morphism rhs = compose(tensor(g, g2), tensor(f, f2));
  CHECK(lhs == rhs);

  // identity tensor identity
  CHECK(tensor(id_morphism(C, wa), id_morphism(C, wc)) ==
        id_morphism(C, simple_word({1, 2, 2})));
}

TEST_CASE("braiding: inverse, Yang-Baxter, naturality", "[homspace]") {
  for (long k : {1L, 2L, 3L, 4L}) {
    MtcData C = gen_sl2k(k);
    for (long i = 0; i <= k; ++i)
      for (long j = 0; j <= k; ++j) {
        auto w = simple_word({i, j});
        Morphism b = braid_adjacent(C, w, 0);
        CHECK(compose(braid_adjacent(C, b.cod, 0, true), b) == id_morphism(C, w));
      }
    for (long i = 0; i <= k; ++i)
      for (long j = 0; j <= k; ++j)
        for (long l = 0; l <= k; ++l) {
          auto w = simple_word({i, j, l});
          // braid strands 1,2 then 2,3 then 1,2 equals 2,3 then 1,2 then 2,3
          Morphism a1 = braid_adjacent(C, w, 0);
          Morphism a2 = compose(braid_adjacent(C, a1.cod, 1), a1);
          Morphism lhs = compose(braid_adjacent(C, a2.cod, 0), a2);
          Morphism b1 = braid_adjacent(C, w, 1);
          Morphism b2 = compose(braid_adjacent(C, b1.cod, 0), b1);
          Morphism rhs = compose(braid_adjacent(C, b2.cod, 1), b2);
          REQUIRE(lhs == rhs);
        }
  }

  MtcData C = gen_sl2k(3);
  std::mt19937 rng(23);
  // c . (f (x) g) == (g (x) f) . c for endomorphism-type blocks
  SSObject X;
  X.mult[1] = 1;
  X.mult[3] = 1;
  SSObject Y;
  Y.mult[0] = 1;
  Y.mult[2] = 1;
  Morphism f = random_morphism(C, {X}, {X}, rng);
  Morphism g = random_morphism(C, {Y}, {Y}, rng);
  Morphism lhs = compose(braid_pair(C, X, Y), tensor(f, g));
  Morphism rhs = compose(tensor(g, f), braid_pair(C, X, Y));
  CHECK(lhs == rhs);
  // and for morphisms that change the object
  SSObject Z = SSObject::simple(1);
  Morphism h = random_morphism(C, {X}, {Z}, rng);
  Morphism lhs2 = compose(braid_pair(C, Z, Y), tensor(h, g));
  Morphism rhs2 = compose(tensor(g, h), braid_pair(C, X, Y));
  CHECK(lhs2 == rhs2);
}

TEST_CASE("twist: values, inverse, and the double-braid identity", "[homspace]") {
  MtcData C = gen_sl2k(3);
  for (long i = 0; i <= 3; ++i) {
    auto w = simple_word({i});
    Morphism t = twist_word(C, w);
    CHECK(t == id_morphism(C, w).scaled(C.theta[i]));
    CHECK(compose(twist_word(C, w, true), t) == id_morphism(C, w));
  }
  // theta_{X(x)Y} = c_{YX} c_{XY} (theta_X (x) theta_Y) on all two-letter words
  for (long i = 0; i <= 3; ++i)
    for (long j = 0; j <= 3; ++j) {
      auto w = simple_word({i, j});
      Morphism tt = compose(twist_factor(C, w, 1), twist_factor(C, w, 0));
      CHECK(compose(double_braid(C, w), tt) == twist_word(C, w));
    }
  // also on a sum object pair
  SSObject X;
  X.mult[0] = 1;
  X.mult[2] = 1;
  SSObject Y = SSObject::simple(1);
  SumWord w{X, Y};
  Morphism tt = compose(twist_factor(C, w, 1), twist_factor(C, w, 0));
  CHECK(compose(double_braid(C, w), tt) == twist_word(C, w));
}

TEST_CASE("duality: zig-zags hold exactly", "[homspace]") {
  for (long k : {1L, 2L, 3L, 4L}) {
    MtcData C = gen_sl2k(k);
    for (long i = 0; i <= k; ++i) {
      SSObject X = SSObject::simple(i);
      SSObject Xd = dual_object(C, X);
      Morphism ev = ev_left(C, X), cv = coev_left(C, X);
      // (id (x) ev)(coev (x) id) = id_X
      SumWord wx{X};
      Morphism s1 = apply_local(cv, wx, 0);
      Morphism lhs1 = compose(apply_local(ev, s1.cod, 1), s1);
      REQUIRE(lhs1 == id_morphism(C, wx));
      // (ev (x) id)(id (x) coev) = id_{X^}
      SumWord wd{Xd};
      Morphism s2 = apply_local(cv, wd, 1);
      Morphism lhs2 = compose(apply_local(ev, s2.cod, 0), s2);
      REQUIRE(lhs2 == id_morphism(C, wd));
      // right duality zig-zags
      Morphism rev = ev_right(C, X), rcv = coev_right(C, X);
      Morphism s3 = apply_local(rcv, wx, 1);
      Morphism lhs3 = compose(apply_local(rev, s3.cod, 0), s3);
      REQUIRE(lhs3 == id_morphism(C, wx));
      Morphism s4 = apply_local(rcv, wd, 0);
      Morphism lhs4 = compose(apply_local(rev, s4.cod, 1), s4);
      REQUIRE(lhs4 == id_morphism(C, wd));
    }
  }
  // zig-zag for a sum object with a repeated summand
  MtcData C = gen_sl2k(2);
  SSObject X;
  X.mult[1] = 2;
  X.mult[2] = 1;
  SumWord wx{X};
  Morphism s1 = apply_local(coev_left(C, X), wx, 0);
  CHECK(compose(apply_local(ev_left(C, X), s1.cod, 1), s1) == id_morphism(C, wx));
}

TEST_CASE("quantum trace: dimensions, curls, cyclicity", "[homspace]") {
  for (long k : {1L, 2L, 3L, 4L}) {
    MtcData C = gen_sl2k(k);
    for (long i = 0; i <= k; ++i) {
      auto w = simple_word({i});
      CHECK(qtrace(id_morphism(C, w)) == C.qdim[i]);
      CHECK(qtrace(twist_word(C, w)) == C.theta[i] * C.qdim[i]);
      CHECK(qtrace(twist_word(C, w, true)) == C.theta[i].inv() * C.qdim[i]);
    }
  }
  MtcData C16 = gen_sl2k(16);
  for (long i : {0L, 1L, 8L, 15L, 16L}) {
    CHECK(qtrace(id_morphism(C16, simple_word({i}))) == C16.qdim[i]);
    CHECK(qtrace(twist_word(C16, simple_word({i}))) == C16.theta[i] * C16.qdim[i]);
  }
  // additivity on sums, multiplicativity on words
  SSObject A;
  A.mult[0] = 1;
  A.mult[16] = 1;
  CHECK(qtrace(id_morphism(C16, {A})) == CycScalar(2));
  MtcData C2 = gen_sl2k(2);
  SSObject X;
  X.mult[0] = 1;
  X.mult[1] = 1;
  CycScalar dX = CycScalar::one() + C2.qdim[1];
  CHECK(qtrace(id_morphism(C2, {X, X})) == dX * dX);

  // tr(fg) = tr(gf)
  MtcData C3 = gen_sl2k(3);
  std::mt19937 rng(24);
  auto wa = simple_word({1, 2}), wb = simple_word({3, 1});
  Morphism f = random_morphism(C3, wa, wb, rng);
  Morphism g = random_morphism(C3, wb, wa, rng);
  CHECK(qtrace(compose(g, f)) == qtrace(compose(f, g)));
  CHECK_THROWS_AS(qtrace(f), std::domain_error);
}

TEST_CASE("Hopf links reproduce the S-matrix", "[homspace]") {
  for (long k : {1L, 2L, 3L}) {
    MtcData C = gen_sl2k(k);
    Mat S = smatrix(C);
    for (long i = 0; i <= k; ++i)
      for (long j = 0; j <= k; ++j) {
        auto w = simple_word({i, j});
        REQUIRE(qtrace(double_braid(C, w)) == S.at(i, j));
      }
  }
  MtcData C16 = gen_sl2k(16);
  Mat S16 = smatrix(C16);
  for (auto [i, j] : std::vector<std::pair<long, long>>{{1, 1}, {8, 8}, {2, 5}, {16, 3}}) {
    auto w = simple_word({i, j});
    CHECK(qtrace(double_braid(C16, w)) == S16.at(i, j));
  }
}

TEST_CASE("local application respects interior positions", "[homspace]") {
  MtcData C = gen_sl2k(3);
  std::mt19937 rng(25);
  // inserting a morphism mid-word equals tensoring identities around it
  auto seg = simple_word({2, 1});
  Morphism f = random_morphism(C, seg, simple_word({1}), rng);
  SumWord host = simple_word({1, 2, 1, 3});
  Morphism loc = apply_local(f, host, 1);
  Morphism built =
      tensor(tensor(id_morphism(C, simple_word({1})), f), id_morphism(C, simple_word({3})));
  CHECK(loc == built);

  // two disjoint local applications commute
  SumWord w = simple_word({1, 1, 2, 2});
  Morphism a = random_morphism(C, simple_word({1}), simple_word({3}), rng);
  Morphism b = random_morphism(C, simple_word({2}), simple_word({0}), rng);
  Morphism ab = compose(apply_local(b, apply_local(a, w, 0).cod, 3), apply_local(a, w, 0));
  Morphism ba = compose(apply_local(a, apply_local(b, w, 3).cod, 0), apply_local(b, w, 3));
  CHECK(ab == ba);

  CHECK_THROWS_AS(apply_local(a, w, 2), std::domain_error);
  CHECK_THROWS_AS(apply_local(a, w, 9), std::domain_error);
}
