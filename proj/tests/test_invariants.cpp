#include "catch2/catch_amalgamated.hpp"

#include "mtcdef/invariants.hpp"
#include "mtcdef/sl2k.hpp"

using namespace mtcdef;

namespace {

const MtcData& k16() {
  static MtcData C = gen_sl2k(16);
  return C;
}
const MtcData& k3() {
  static MtcData C = gen_sl2k(3);
  return C;
}

SSObject mobj(std::initializer_list<long> ls) {
  SSObject o;
  for (long l : ls) o.mult[l]++;
  return o;
}

const FrobeniusAlgebra& d10() {
  static FrobeniusAlgebra A = solve_haploid_algebra(k16(), mobj({0, 16})).at(0);
  return A;
}
const FrobeniusAlgebra& e7() {
  static FrobeniusAlgebra A = solve_haploid_algebra(k16(), mobj({0, 8, 16})).at(0);
  return A;
}

// the expected pairing for the two line algebra: even labels pair with
// their mirror partner, the fixed point counts twice
long d_pairing(long i, long j) {
  if (i % 2 != 0) return 0;
  return (i == j ? 1 : 0) + (j == 16 - i ? 1 : 0);
}

}  // namespace

TEST_CASE("center projectors pick out the transparent part", "[invariants]") {
  for (CenterSide s : {CenterSide::left, CenterSide::right}) {
    CenterData cd = center_projector(d10(), s);
    REQUIRE(cd.multiplicities == std::map<long, long>{{0, 1}, {16, 1}});
    REQUIRE(cd.qdim == CycScalar(2));
    REQUIRE(cd.object() == mobj({0, 16}));

    CenterData ce = center_projector(e7(), s);
    REQUIRE(ce.multiplicities == std::map<long, long>{{0, 1}, {16, 1}});
    REQUIRE(ce.qdim == CycScalar(2));
  }

  FrobeniusAlgebra E01 = end_algebra(k3(), mobj({0, 1}), "E01");
  CenterData c0 = center_projector(E01, CenterSide::left);
  REQUIRE(c0.multiplicities == std::map<long, long>{{0, 1}});
  REQUIRE(c0.qdim == CycScalar(1));
  REQUIRE(center_projector(E01, CenterSide::right).qdim == CycScalar(1));

  CenterData ct = center_projector(trivial_algebra(k3()), CenterSide::left);
  REQUIRE(ct.qdim == CycScalar(1));

  SECTION("a comultiplication that is not dual to the product is rejected") {
    FrobeniusAlgebra bad = d10();
    bad.delta.blocks.at(16) = bad.delta.blocks.at(16).scaled(CycScalar(2));
    REQUIRE_THROWS_AS(center_projector(bad, CenterSide::left), std::domain_error);
  }
}

TEST_CASE("alpha bimodules extend the regular bimodule", "[invariants]") {
  MultiModule RB = regular_bimodule(d10());
  for (int s : {+1, -1}) {
    MultiModule A0 = alpha_bimodule(d10(), 0, s);
    REQUIRE(A0.obj == RB.obj);
    REQUIRE(A0.actions[0].rho == RB.actions[0].rho);
    REQUIRE(A0.actions[1].rho == RB.actions[1].rho);
  }

  FrobeniusAlgebra E01 = end_algebra(k3(), mobj({0, 1}), "E01");
  MultiModule RB3 = regular_bimodule(E01);
  for (int s : {+1, -1}) {
    MultiModule A0 = alpha_bimodule(E01, 0, s);
    REQUIRE(A0.actions[0].rho == RB3.actions[0].rho);
    REQUIRE(A0.actions[1].rho == RB3.actions[1].rho);
  }

  // construction runs the full law check, so building these is the test
  for (int s : {+1, -1}) {
    alpha_bimodule(d10(), 8, s);
    alpha_bimodule(d10(), 3, s);
  }

  REQUIRE_THROWS_AS(alpha_bimodule(d10(), 17, +1), std::domain_error);
  REQUIRE_THROWS_AS(alpha_bimodule(d10(), -1, +1), std::domain_error);
}

TEST_CASE("full center matrix of the trivial algebra is the identity",
          "[invariants]") {
  for (const MtcData* C : {&k3(), &k16()}) {
    FullCenterMatrix Z = full_center_matrix(trivial_algebra(*C));
    REQUIRE(Z.passing.size() == 4);
    REQUIRE(Z.trace() == C->ring.n);
    for (long i = 0; i < C->ring.n; ++i)
      for (long j = 0; j < C->ring.n; ++j)
        REQUIRE(Z.z[i][j] == (i == j ? 1 : 0));
  }
}

TEST_CASE("full center matrix of the two line algebra is the block pairing",
          "[invariants]") {
  FullCenterMatrix Z = full_center_matrix(d10());
  REQUIRE(Z.convention == "hom(alpha+_i, alpha-_j)");
  REQUIRE(Z.passing.size() == 4);
  REQUIRE(Z.trace() == 10);
  for (long i = 0; i < 17; ++i)
    for (long j = 0; j < 17; ++j) REQUIRE(Z.z[i][j] == d_pairing(i, j));

  // recheck the calibration conditions from outside
  Mat zc = invdetail::to_cyc(Z.z);
  Mat S = smatrix(k16()), T = tmatrix(k16());
  REQUIRE(zc * S == S * zc);
  REQUIRE(zc * T == T * zc);
}

TEST_CASE("full center matrix only sees the Morita class", "[invariants]") {
  // three presentations of the trivial class at level three: the
  // endomorphism algebras of U0+U1 and of U1, and the solved algebra on
  // U0+U2; all give the identity matrix
  FrobeniusAlgebra a = end_algebra(k3(), mobj({0, 1}), "E01");
  FrobeniusAlgebra b = end_algebra(k3(), mobj({1}), "EndU1");
  FrobeniusAlgebra c = solve_haploid_algebra(k3(), mobj({0, 2})).at(0);
  for (const FrobeniusAlgebra* A : {&a, &b, &c}) {
    FullCenterMatrix Z = full_center_matrix(*A);
    REQUIRE(Z.trace() == 4);
    for (long i = 0; i < 4; ++i)
      for (long j = 0; j < 4; ++j) REQUIRE(Z.z[i][j] == (i == j ? 1 : 0));
    T3Invariants t = t3_invariants(*A, &Z);
    REQUIRE(t.iota0_plus == CycScalar(4));
    REQUIRE(t.iota0_minus == CycScalar(4));
    REQUIRE(t.iota1_plus == 4);
    REQUIRE(t.iota1_minus == 4);
    REQUIRE(t.iota2 == 4);
  }
}

TEST_CASE("torus invariants match the known table rows", "[invariants]") {
  T3Invariants tt = t3_invariants(trivial_algebra(k16()));
  REQUIRE(tt.iota0_plus == CycScalar(17));
  REQUIRE(tt.iota0_minus == CycScalar(17));
  REQUIRE(tt.iota1_plus == 17);
  REQUIRE(tt.iota1_minus == 17);
  REQUIRE(tt.iota2 == 17);

  T3Invariants td = t3_invariants(d10());
  REQUIRE(td.iota0_plus == CycScalar(34));
  REQUIRE(td.iota0_minus == CycScalar(34));
  REQUIRE(td.iota1_plus == 18);
  REQUIRE(td.iota1_minus == 18);
  REQUIRE(td.iota2 == 10);
}

TEST_CASE("iota one equals a plain hom space count", "[invariants]") {
  for (const FrobeniusAlgebra* A : {&d10(), &e7()}) {
    CenterData cd = center_projector(*A, CenterSide::left);
    long by_hom = 0;
    for (long i = 0; i < 17; ++i)
      by_hom += hom_dim(k16(), {SSObject::simple(i), cd.object()},
                        {SSObject::simple(i)});
    REQUIRE(by_hom == 18);
  }
  CenterData ct = center_projector(trivial_algebra(k16()), CenterSide::left);
  long by_hom = 0;
  for (long i = 0; i < 17; ++i)
    by_hom += hom_dim(k16(), {SSObject::simple(i), ct.object()},
                      {SSObject::simple(i)});
  REQUIRE(by_hom == 17);
}

TEST_CASE("presentation changes leave the invariants alone", "[invariants]") {
  // the opposite algebra has a different product but the same centers
  FrobeniusAlgebra Eop = opposite(e7());
  REQUIRE(Eop.mu != e7().mu);
  for (CenterSide s : {CenterSide::left, CenterSide::right}) {
    REQUIRE(center_projector(Eop, s).qdim == CycScalar(2));
    REQUIRE(center_projector(Eop, s).multiplicities ==
            center_projector(e7(), s).multiplicities);
  }
}

TEST_CASE("sphere embeddings scale the algebra dimension", "[invariants]") {
  FrobeniusAlgebra T = trivial_algebra(k16());
  REQUIRE(sphere_embedding_invariant(T, Closed3Manifold::s2xs1) == CycScalar(1));
  REQUIRE(sphere_embedding_invariant(T, Closed3Manifold::t3) == CycScalar(17));
  REQUIRE(sphere_embedding_invariant(d10(), Closed3Manifold::s2xs1) ==
          CycScalar(2));
  REQUIRE(sphere_embedding_invariant(d10(), Closed3Manifold::t3) ==
          CycScalar(34));
  REQUIRE(sphere_embedding_invariant(e7(), Closed3Manifold::t3) ==
          algebra_dim(e7()).scaled(Rat(17)));
}
