#include "catch2/catch_amalgamated.hpp"
#include "mtcdef/sl2k.hpp"

using namespace mtcdef;

TEST_CASE("sl2 level 16 fusion with the top label", "[category]") {
  MtcData C = gen_sl2k(16);
  REQUIRE(C.ring.n == 17);
  REQUIRE(C.ring.fuses(8, 16, 8));
  for (long i = 0; i <= 16; ++i) {
    if (i != 8) REQUIRE(!C.ring.fuses(i, 16, i));
    // tensoring with the top label is the mirror involution
    REQUIRE(C.ring.channels(i, 16) == std::vector<long>{16 - i});
  }
  REQUIRE(C.ring.validate().empty());
}

TEST_CASE("sl2 quantum dimensions at the edge of the Weyl alcove", "[category]") {
  MtcData C16 = gen_sl2k(16);
  REQUIRE(C16.qdim[0].is_one());
  REQUIRE(C16.qdim[16].is_one());  // [17] at q = zeta_36 collapses to 1
  REQUIRE(C16.qdim[8] == C16.qdim[8].conj());

  MtcData C1 = gen_sl2k(1);
  REQUIRE(C1.qdim[0].is_one());
  REQUIRE(C1.qdim[1].is_one());
}

TEST_CASE("sl2 twists", "[category]") {
  MtcData C1 = gen_sl2k(1);
  REQUIRE(C1.theta[0].is_one());
  REQUIRE(C1.theta[1] == CycScalar::root_of_unity(4, 1));  // zeta_12^3

  MtcData C16 = gen_sl2k(16);
  REQUIRE(C16.theta[16].is_one());
  REQUIRE(C16.theta[8] == CycScalar::root_of_unity(9, 1));  // zeta_72^80 = zeta_9
  REQUIRE(!C16.theta[8].is_one());
}

TEST_CASE("axiom verifiers pass exhaustively for small levels", "[category]") {
  for (long k = 1; k <= 4; ++k) {
    MtcData C = gen_sl2k(k);
    auto b = verify_basic(C);
    auto p = verify_pentagon(C);
    auto h = verify_hexagon(C);
    auto r = verify_ribbon(C);
    INFO("k=" << k << " " << p.detail << h.detail << r.detail);
    REQUIRE(b.ok);
    REQUIRE(p.ok);
    REQUIRE(h.ok);
    REQUIRE(r.ok);
    REQUIRE(p.instances > 0);
    REQUIRE(h.instances > 0);
  }
}

TEST_CASE("sampled verifiers are deterministic and pass at level 16", "[category]") {
  MtcData C = gen_sl2k(16);
  auto p1 = verify_pentagon(C, VerifyMode::sampled(300, 7));
  auto p2 = verify_pentagon(C, VerifyMode::sampled(300, 7));
  REQUIRE(p1.ok);
  REQUIRE(p1.instances == 300);
  REQUIRE(p2.ok);
  REQUIRE(p1.mode == "sampled(300,seed=7)");
  auto h = verify_hexagon(C, VerifyMode::sampled(300, 7));
  REQUIRE(h.ok);
  auto r = verify_ribbon(C);
  REQUIRE(r.ok);
}

TEST_CASE("unit F entries are strict", "[category]") {
  MtcData C = gen_sl2k(3);
  long n = C.ring.n;
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      for (long c = 0; c < n; ++c) {
        if (a != 0 && b != 0 && c != 0) continue;
        for (long d = 0; d < n; ++d)
          for (long e : C.ring.channels(a, b)) {
            if (!C.adm(e, c, d)) continue;
            for (long f : C.ring.channels(b, c)) {
              if (!C.adm(a, f, d)) continue;
              REQUIRE(C.F(a, b, c, d, e, f).is_one());
            }
          }
      }
}

TEST_CASE("self-duality sign sits in the F-symbol", "[category]") {
  // the 00 entry of F^{iii}_i is (-1)^i / d_i: odd labels are pseudoreal
  MtcData C = gen_sl2k(16);
  for (long i : {1L, 2L, 5L, 8L, 15L, 16L}) {
    CycScalar lhs = C.F(i, i, i, i, 0, 0) * C.qdim[i];
    REQUIRE(lhs == (i % 2 ? -CycScalar::one() : CycScalar::one()));
  }
}

TEST_CASE("S-matrix identities", "[category]") {
  for (long k : {1L, 2L, 3L, 4L, 16L}) {
    MtcData C = gen_sl2k(k);
    Mat S = smatrix(C);
    INFO("k=" << k);
    REQUIRE(S.at(0, 0).is_one());
    for (long j = 0; j <= k; ++j) REQUIRE(S.at(0, j) == C.qdim[j]);
    for (long i = 0; i <= k; ++i)
      for (long j = 0; j <= k; ++j) {
        REQUIRE(S.at(i, j) == S.at(j, i));
        REQUIRE(S.at(i, C.ring.dual[j]) == S.at(i, j).conj());
      }
    REQUIRE(!S.det().is_zero());
  }
}

TEST_CASE("T-matrix is the diagonal of twists", "[category]") {
  MtcData C = gen_sl2k(3);
  Mat T = tmatrix(C);
  for (long i = 0; i <= 3; ++i)
    for (long j = 0; j <= 3; ++j)
      REQUIRE(T.at(i, j) == (i == j ? C.theta[i] : CycScalar::zero()));
}

TEST_CASE("anomaly sums at level 1 and for the trivial category", "[category]") {
  MtcData C1 = gen_sl2k(1);
  auto a = anomaly_check(C1);
  CycScalar i = CycScalar::root_of_unity(4, 1);
  REQUIRE(a.p_plus == CycScalar::one() + i);
  REQUIRE(a.p_minus == CycScalar::one() - i);
  REQUIRE(!a.anomaly_free_paper);
  REQUIRE(a.p_plus_sq == a.p_plus);  // all dims are 1 at level 1
  REQUIRE(!a.gauss_sums_equal);

  MtcData T = gen_trivial();
  auto at = anomaly_check(T);
  REQUIRE(at.p_plus.is_one());
  REQUIRE(at.p_minus.is_one());
  REQUIRE(at.anomaly_free_paper);
  REQUIRE(at.gauss_sums_equal);
  REQUIRE(verify_pentagon(T).ok);
  REQUIRE(verify_hexagon(T).ok);
  REQUIRE(verify_ribbon(T).ok);
}

TEST_CASE("level 16 anomaly sums are exact 17-term values", "[category]") {
  MtcData C = gen_sl2k(16);
  auto a = anomaly_check(C);
  // the two Gauss-type sums are conjugate, and the linear variant differs
  REQUIRE(a.p_plus == a.p_minus.conj());
  REQUIRE(a.p_plus_sq == a.p_minus_sq.conj());
  REQUIRE(!a.p_plus.is_zero());
  REQUIRE(!a.p_plus_sq.is_zero());
}

TEST_CASE("single-entry mutations are caught", "[category]") {
  MtcData C = gen_sl2k(2);
  SECTION("F entry shifted by one breaks the pentagon") {
    C.f_override[MtcData::key6(1, 1, 1, 1, 0, 0)] =
        C.F(1, 1, 1, 1, 0, 0) + CycScalar::one();
    C.drop_block_cache();
    auto p = verify_pentagon(C);
    REQUIRE(!p.ok);
    REQUIRE(!p.detail.empty());
  }
  SECTION("R sign flip breaks a hexagon") {
    C.r_override[MtcData::key3(1, 1, 2)] = -C.R(1, 1, 2);
    auto h = verify_hexagon(C);
    auto r = verify_ribbon(C);
    REQUIRE((!h.ok || !r.ok));
  }
  SECTION("twist perturbation breaks the ribbon relation") {
    C.theta[1] += CycScalar::one();
    REQUIRE(!verify_ribbon(C).ok);
  }
  SECTION("flipping the odd-label twist sign is NOT an error") {
    // theta times the parity character is another consistent ribbon
    // structure on the same braided data, so no verifier may reject it
    C.theta[1] = -C.theta[1];
    REQUIRE(verify_ribbon(C).ok);
  }
}

TEST_CASE("rejected sign conventions fail loudly", "[category]") {
  // flipping the triangle parity breaks the pentagon at level 2
  Sl2Gauge g;
  g.theta_parity = !g.theta_parity;
  MtcData C = gen_sl2k_gauged(2, g);
  bool bad_units = false;
  for (long d = 0; d <= 2; ++d)
    if (!C.Fz(0, d, d, 0, d, 0).is_zero() && !C.Fz(0, d, d, 0, d, 0).is_one())
      bad_units = true;
  REQUIRE((bad_units || !verify_pentagon(C).ok));
}

TEST_CASE("fusion ring validation rejects broken tables", "[category]") {
  FusionRing r(2);
  r.set_fuse(0, 0, 0);
  r.set_fuse(0, 1, 1);
  r.set_fuse(1, 0, 1);
  // missing 1x1 channels: dual pairing fails
  r.finalize();
  REQUIRE(!r.validate().empty());
  r.set_fuse(1, 1, 0);
  r.finalize();
  REQUIRE(r.validate().empty());
  r.set_fuse(1, 1, 1);
  r.finalize();
  // adding 1 in 1x1 keeps unit/dual axioms but breaks associativity at level 1?
  // it actually satisfies associativity (Fibonacci fusion), so validate passes
  REQUIRE(r.validate().empty());
}
