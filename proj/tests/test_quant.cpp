#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "coadj/oracle.hpp"
#include "coadj/quant.hpp"

using namespace coadj;

namespace {

WeightVec vec(std::initializer_list<Rat> xs) {
  WeightVec v(xs.size());
  std::size_t i = 0;
  for (const Rat& x : xs) v[i++] = x;
  return v;
}

}  // namespace

TEST_CASE("bott_dominantize") {
  RootDatum su3 = build_root_datum("SU(3)");
  WeightVec w2 = su3.fundamental_weights()[1];
  CHECK(bott_dominantize(su3, w2 + rho(su3) - rho(su3)) ==
        SignedIrrep::zero());  // w2 pairs to 0 with the first coroot
  CHECK(bott_dominantize(su3, rho(su3)) == SignedIrrep::of(+1, rho(su3)));

  RootDatum su2 = build_root_datum("SU(2)");
  CHECK(bott_dominantize(su2, -rho(su2)) == SignedIrrep::of(-1, rho(su2)));
  CHECK_THROWS_AS(bott_dominantize(su2, Rat(1, 2) * rho(su2)), MathError);
}

TEST_CASE("qspin golden cases") {
  RootDatum su3 = build_root_datum("SU(3)");
  WeightVec w1 = su3.fundamental_weights()[0];
  WeightVec w2 = su3.fundamental_weights()[1];
  CHECK(qspin(su3, orbit_from_point(su3, Rat(3, 2) * w1)) ==
        SignedIrrep::of(+1, rho(su3)));
  CHECK(qspin(su3, orbit_from_point(su3, Rat(1, 2) * w1)) ==
        SignedIrrep::zero());
  RootDatum u5 = build_root_datum("U(5)");
  CHECK(qspin(u5, orbit_from_point(u5, vec({Rat(1, 2), Rat(1, 2), 0,
                                            Rat(-1, 2), Rat(-1, 2)}))) ==
        SignedIrrep::zero());
  // Regular admissible orbits are their own labels; o(k) is trivial.
  CHECK(qspin(su3, orbit_from_point(su3, rho(su3) + w2)) ==
        SignedIrrep::of(+1, rho(su3) + w2));
  CHECK(qspin(su3, orbit_from_point(su3, rho(su3))) ==
        SignedIrrep::of(+1, rho(su3)));
  CHECK_THROWS_AS(qspin(su3, orbit_from_point(su3, w1)), MathError);
}

TEST_CASE("qspin duality") {
  RootDatum su3 = build_root_datum("SU(3)");
  WeightVec w1 = su3.fundamental_weights()[0];
  WeightVec w2 = su3.fundamental_weights()[1];
  CHECK(qspin_dual(su3, orbit_from_point(su3, Rat(3, 2) * w1)) ==
        SignedIrrep::of(+1, rho(su3)));
  RootDatum su2 = build_root_datum("SU(2)");
  CHECK(qspin_dual(su2, orbit_from_point(su2, rho(su2))) ==
        SignedIrrep::of(+1, rho(su2)));
  CHECK(qspin_dual(su3, orbit_from_point(su3, rho(su3) + w1)) ==
        SignedIrrep::of(+1, rho(su3) + w2));
}

TEST_CASE("components") {
  RootDatum su2 = build_root_datum("SU(2)");
  auto c2 = components(su2, face_from_mask(su2, 0));
  REQUIRE(c2.size() == 2);
  CHECK(c2[0].rho_c == rho(su2));
  CHECK(c2[1].rho_c == -rho(su2));

  RootDatum su3 = build_root_datum("SU(3)");
  Face s1 = face_of(su3, su3.fundamental_weights()[0]);
  auto c3 = components(su3, s1);
  CHECK(c3[0].rho_c == Rat(3, 2) * su3.fundamental_weights()[0]);
  CHECK(c3[0].rho_c == rho(su3) - rho_levi(su3, s1));
  for (const Component& c : c3)
    CHECK(c.signs.size() == su3.num_positive() - s1.levi_pos.size());

  // Full-group Levi: a single component with rho_C = 0.
  auto cf = components(su3, face_from_mask(su3, 3));
  REQUIRE(cf.size() == 1);
  CHECK(cf[0].rho_c == su3.zero());

  // The dominant pattern comes first and is always realizable.
  for (const char* s : {"SU(2)", "SU(3)", "U(4)"}) {
    RootDatum d = build_root_datum(s);
    for (const Face& f : faces(d)) {
      auto cs = components(d, f);
      REQUIRE(!cs.empty());
      for (int sg : cs[0].signs) CHECK(sg == +1);
      CHECK(cs[0].rho_c == rho(d) - rho_levi(d, f));
      std::set<std::vector<int>> uniq;
      for (const Component& c : cs) CHECK(uniq.insert(c.signs).second);
    }
  }
}

TEST_CASE("hol_induce torus cases") {
  RootDatum su2 = build_root_datum("SU(2)");
  auto cs = components(su2, face_from_mask(su2, 0));
  WeightVec r = rho(su2);
  CHECK(hol_induce(su2, cs[0], r) == SignedIrrep::of(+1, Rat(2) * r));
  CHECK(hol_induce(su2, cs[0], -r) == SignedIrrep::zero());
  // Opposite component: one flipped root pair gives the -1 sign.
  CHECK(hol_induce(su2, cs[1], Rat(3) * r) ==
        SignedIrrep::of(-1, Rat(2) * r));
  CHECK(hol_induce_oracle(su2, cs[1], Rat(3) * r) ==
        SignedIrrep::of(-1, Rat(2) * r));
  CHECK_THROWS_AS(hol_induce(su2, cs[0], Rat(1, 2) * r), MathError);
}

TEST_CASE("hol_induce reaches the ancestor label") {
  RootDatum su3 = build_root_datum("SU(3)");
  Face s1 = face_of(su3, su3.fundamental_weights()[0]);
  auto cs = components(su3, s1);
  WeightVec mu = rho_levi(su3, s1);  // the rho-orbit of the Levi
  CHECK(hol_induce(su3, cs[0], mu) == SignedIrrep::of(+1, rho(su3)));
  CHECK(hol_induce_oracle(su3, cs[0], mu) == SignedIrrep::of(+1, rho(su3)));
  // Same label as quantizing the ancestor orbit K(3/2 w1) directly.
  CHECK(qspin(su3, orbit_from_point(
                       su3, Rat(3, 2) * su3.fundamental_weights()[0])) ==
        SignedIrrep::of(+1, rho(su3)));
}

TEST_CASE("hol_induce with full-group Levi is qspin") {
  RootDatum su3 = build_root_datum("SU(3)");
  auto cs = components(su3, face_from_mask(su3, 3));
  for (WeightVec mu : {rho(su3), rho(su3) + su3.fundamental_weights()[0]})
    CHECK(hol_induce(su3, cs[0], mu) ==
          qspin(su3, orbit_from_point(su3, mu)));
}

TEST_CASE("ancestors quantize to the same label") {
  for (const char* s : {"SU(3)", "Sp(2)", "U(4)"}) {
    RootDatum d = build_root_datum(s);
    for (WeightVec lam : {rho(d), rho(d) + d.lattice_basis()[0]}) {
      Orbit o = orbit_from_point(d, dominantize(d, lam).dominant);
      SignedIrrep q = qspin(d, o);
      for (const Orbit& a : ancestors(d, o)) CHECK(qspin(d, a) == q);
    }
  }
}

TEST_CASE("qspin bijection on a ball") {
  // Over regular admissible orbits in a ball, labels are distinct and
  // sweep exactly rho^K + (Lambda_{>=0} within the ball).
  for (const char* s : {"SU(3)", "Sp(2)"}) {
    RootDatum d = build_root_datum(s);
    std::set<WeightVec> labels;
    std::set<WeightVec> expected;
    for (const WeightVec& v : coset_ball(d, rho(d), Rat(30))) {
      if (!is_dominant(d, v) || !is_regular(d, v)) continue;
      Orbit o = orbit_from_point(d, v);
      REQUIRE(is_admissible(d, o));
      SignedIrrep q = qspin(d, o);
      REQUIRE(!q.is_zero());
      CHECK(labels.insert(q.label).second);
      if (is_dominant(d, v - rho(d))) expected.insert(v);
    }
    for (const WeightVec& v : expected) CHECK(labels.count(v));
    CHECK(labels.count(rho(d)));
  }
}

TEST_CASE("hol oracle equivalence over all components") {
  for (const char* s : {"SU(2)", "SU(3)", "U(4)"}) {
    RootDatum d = build_root_datum(s);
    for (const Face& f : faces(d)) {
      WeightVec rho_h = rho_levi(d, f);
      for (const Component& c : components(d, f)) {
        for (const WeightVec& b : coset_ball(d, d.zero(), Rat(3))) {
          WeightVec mu = rho_h + b;
          if (!is_levi_dominant(d, f, mu) || !is_levi_admissible(d, f, mu))
            continue;
          INFO(s << " face mask " << f.mask);
          CHECK(hol_induce(d, c, mu) == hol_induce_oracle(d, c, mu));
        }
      }
    }
  }
}
