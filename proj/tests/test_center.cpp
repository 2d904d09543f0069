#include "doctest.h"
#include "logknot/center.hpp"

using namespace logknot;

namespace {

Cyclo rat(int p, long num, long den = 1) {
  return Cyclo::from_rational(CycloRing::get(p), BigRat(num, den));
}

bool all_one(const std::vector<Cyclo>& v, int p) {
  for (const Cyclo& x : v)
    if (!(x == rat(p, 1))) return false;
  return true;
}

bool all_zero(const std::vector<Cyclo>& v) {
  for (const Cyclo& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("unknot decomposition is trivial") {
  for (int p : {2, 3, 4, 5}) {
    for (DecomposeMode mode :
         {DecomposeMode::FullMatrices, DecomposeMode::ColumnExtraction}) {
      DecomposeOptions opts;
      opts.mode = mode;
      CentralDecomposition d = decompose(preset_braid("unknot"), p, opts);
      REQUIRE(d.a.size() == size_t(p) + 1);
      REQUIRE(d.b_plus.size() == size_t(p) - 1);
      CHECK(d.framing == 0);
      CHECK(all_one(d.a, p));
      CHECK(all_zero(d.b_plus));
      CHECK(all_zero(d.b_minus));
    }
  }
}

TEST_CASE("framed unknot decomposition matches the ribbon matrices") {
  for (int p : {2, 3, 4}) {
    CentralDecomposition d = decompose(parse_braid_word("t1", 1), p);
    CHECK(d.framing == 1);
    for (int s = 1; s <= p; ++s)
      CHECK(d.a[size_t(s)] == ribbon_matrix(build_irreducible(p, +1, s)).at(0, 0));
    CHECK(d.a[0] == ribbon_matrix(build_irreducible(p, -1, p)).at(0, 0));
    for (int s = 1; s <= p - 1; ++s) {
      ExactModule mp = build_projective(p, +1, s);
      CHECK(d.b_plus[size_t(s) - 1] ==
            ribbon_matrix(mp).at(mp.index_of("a0"), mp.index_of("b0")));
      ExactModule mm = build_projective(p, -1, p - s);
      CHECK(d.b_minus[size_t(s) - 1] ==
            ribbon_matrix(mm).at(mm.index_of("x0"), mm.index_of("y0")));
    }
  }
}

TEST_CASE("single twist and single crossing close to the same knot") {
  for (int p : {2, 3}) {
    CHECK(decompose(parse_braid_word("t1", 1), p) ==
          decompose(parse_braid_word("s1", 2), p));
    CHECK(decompose(parse_braid_word("T1", 1), p) ==
          decompose(parse_braid_word("S1", 2), p));
  }
}

TEST_CASE("decomposition modes agree") {
  for (int p : {2, 3}) {
    for (const char* name : {"trefoil", "figure8"}) {
      DecomposeOptions cols;
      cols.mode = DecomposeMode::ColumnExtraction;
      CHECK(decompose(preset_braid(name), p) ==
            decompose(preset_braid(name), p, cols));
    }
  }
}

TEST_CASE("decomposition is invariant under Markov moves") {
  FramedBraidWord b = preset_braid("trefoil");
  for (int p : {2, 3}) {
    CentralDecomposition base = decompose(b, p);
    CHECK(decompose(markov_conjugate(b, parse_braid_word("s1 T1", 2)), p) ==
          base);
    // A stabilization pair (twist-side on n strands, crossing-side on n+1)
    // closes to the same framed knot; their decompositions agree exactly.
    for (int sign : {+1, -1}) {
      CentralDecomposition tw =
          decompose(markov_stabilize(b, sign, StabilizationMode::TwistSide), p);
      CentralDecomposition cr = decompose(
          markov_stabilize(b, sign, StabilizationMode::CrossingSide), p);
      CHECK(tw == cr);
      CHECK(tw.framing == base.framing + sign);
    }
  }
}

TEST_CASE("trefoil decomposition at p = 2") {
  CentralDecomposition d = decompose(preset_braid("trefoil"), 2);
  CHECK(d.framing == 3);
  CHECK(d.a[0] == rat(2, -3) * root_power(2, 1));
  CHECK(d.a[1] == rat(2, 1));
  CHECK(d.a[2] == rat(2, 3) * root_power(2, 1));
  CHECK(d.b_plus[0] == rat(2, -6) * root_power(2, 2));
  CHECK(d.b_minus[0] == rat(2, 6) * root_power(2, 2));
}

TEST_CASE("connected sum identities") {
  ConnectedSumReport r =
      verify_connected_sum(preset_braid("trefoil"), preset_braid("trefoil"), 2);
  CHECK(r.pass());
  CHECK(r.sum.framing == 6);
  // Equal summands: the Leibniz rule degenerates to b(K#K) = 2 a(K) b(K).
  CHECK(r.sum.b_plus[0] == rat(2, 2) * r.left.a[1] * r.left.b_plus[0]);

  CHECK(verify_connected_sum(preset_braid("trefoil"), preset_braid("figure8"),
                             3)
            .pass());

  // Summing with the unknot changes nothing.
  ConnectedSumReport u =
      verify_connected_sum(preset_braid("unknot"), preset_braid("figure8"), 3);
  CHECK(u.pass());
  CHECK(u.sum == u.right);
}

TEST_CASE("partner irreducible carries the same scalar") {
  for (int p : {2, 3}) {
    for (const char* name : {"trefoil", "figure8"}) {
      CentralDecomposition d = decompose(preset_braid(name), p);
      for (int s = 1; s <= p - 1; ++s) {
        DenseMatrix<Cyclo> z =
            tangle_operator(preset_braid(name), build_irreducible(p, -1, p - s));
        CHECK(z.at(0, 0) == d.a[size_t(s)]);
        for (int i = 1; i < z.rows; ++i) CHECK(z.at(i, i) == z.at(0, 0));
      }
    }
  }
}

TEST_CASE("colored Jones basics") {
  CHECK(colored_jones(preset_braid("unknot"), 5, 3) == rat(5, 1));
  CentralDecomposition d = decompose(preset_braid("trefoil"), 3);
  for (int s = 1; s <= 3; ++s)
    CHECK(colored_jones(preset_braid("trefoil"), 3, s) == d.a[size_t(s)]);
  CHECK_THROWS_AS(colored_jones(preset_braid("trefoil"), 3, 0),
                  InvalidParameter);
  CHECK_THROWS_AS(colored_jones(preset_braid("trefoil"), 3, 4),
                  InvalidParameter);
  CHECK_THROWS_AS(colored_jones(parse_braid_word("s1 s1", 2), 3, 1),
                  MultiComponent);
}

TEST_CASE("decomposition input guards") {
  CHECK_THROWS_AS(decompose(parse_braid_word("s1 s1", 2), 2), MultiComponent);
  CHECK_THROWS_AS(decompose(preset_braid("trefoil"), 1), InvalidParameter);
}
