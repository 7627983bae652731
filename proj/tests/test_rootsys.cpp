#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "coadj/chamber.hpp"
#include "coadj/oracle.hpp"
#include "coadj/rootsys.hpp"

using namespace coadj;

namespace {

WeightVec vec(std::initializer_list<Rat> xs) {
  WeightVec v(xs.size());
  std::size_t i = 0;
  for (const Rat& x : xs) v[i++] = x;
  return v;
}

}  // namespace

TEST_CASE("group spec grammar") {
  CHECK(build_root_datum("SU(2)").num_positive() == 1);
  CHECK(build_root_datum("SU(3)xT1").dim() == 4);
  CHECK(build_root_datum("U(2)xSp(2)").rank() == 3);
  CHECK(build_root_datum("Spin(7)").num_positive() == 9);
  CHECK(build_root_datum("SU(3)@scale=3/2").inner_sq(
            build_root_datum("SU(3)").simple_roots()[0]) == Rat(3));
  CHECK_THROWS_AS(build_root_datum("SU(1)"), SpecError);
  CHECK_THROWS_AS(build_root_datum("Sp(1)"), SpecError);
  CHECK_THROWS_AS(build_root_datum("Spin(4)"), SpecError);
  CHECK_THROWS_AS(build_root_datum("E9"), SpecError);
  CHECK_THROWS_AS(build_root_datum("SU(3)@scale=0"), SpecError);
  CHECK_THROWS_AS(build_root_datum(""), SpecError);
  CHECK_THROWS_AS(build_root_datum("bogus"), SpecError);
}

TEST_CASE("root counts per Cartan type") {
  CHECK(build_root_datum("SU(5)").num_positive() == 10);
  CHECK(build_root_datum("Spin(9)").num_positive() == 16);
  CHECK(build_root_datum("Sp(3)").num_positive() == 9);
  CHECK(build_root_datum("Spin(8)").num_positive() == 12);
  CHECK(build_root_datum("G2").num_positive() == 6);
  CHECK(build_root_datum("F4").num_positive() == 24);
  CHECK(build_root_datum("E6").num_positive() == 36);
  CHECK(build_root_datum("E7").num_positive() == 63);
  CHECK(build_root_datum("E8").num_positive() == 120);
  CHECK(build_root_datum("T1").num_positive() == 0);
}

TEST_CASE("U(7) rho") {
  RootDatum d = build_root_datum("U(7)");
  CHECK(rho(d) == vec({3, 2, 1, 0, -1, -2, -3}));
  CHECK(d.inner_sq(rho(d)) == Rat(28));
}

TEST_CASE("SU(2) basics") {
  RootDatum d = build_root_datum("SU(2)");
  REQUIRE(d.num_positive() == 1);
  CHECK(d.inner_sq(d.positive_roots()[0]) == Rat(2));
  CHECK(d.inner_sq(rho(d)) == Rat(1, 2));
}

TEST_CASE("G2 closure and Weyl order") {
  RootDatum d = build_root_datum("G2");
  CHECK(d.num_positive() == 6);
  CHECK(weyl_orbit(d, rho(d)).size() == 12);
}

TEST_CASE("pairing") {
  RootDatum a2 = build_root_datum("SU(3)");
  CHECK(a2.pairing(rho(a2), a2.simple_roots()[0]) == Rat(1));
  CHECK(a2.pairing(a2.zero(), a2.simple_roots()[1]) == Rat(0));
  RootDatum u7 = build_root_datum("U(7)");
  WeightVec mu = vec({1, 0, 0, 0, 0, 0, -1});
  WeightVec e17 = vec({1, 0, 0, 0, 0, 0, -1});
  CHECK(u7.pairing(mu, e17) == Rat(2));
  CHECK_THROWS_AS(u7.pairing(mu, vec({1, 1, 0, 0, 0, 0, 0})), MathError);
}

TEST_CASE("inner_sq") {
  CHECK(build_root_datum("SU(2)").inner_sq(rho(build_root_datum("SU(2)"))) ==
        Rat(1, 2));
  RootDatum a2 = build_root_datum("SU(3)");
  CHECK(a2.inner_sq(rho(a2)) == Rat(2));
}

TEST_CASE("lattice membership") {
  RootDatum u5 = build_root_datum("U(5)");
  CHECK(u5.in_lattice(vec({-1, -1, 0, 1, 1})));
  CHECK_FALSE(u5.in_lattice(vec({Rat(1, 2), 0, 0, 0, 0})));
  RootDatum a2 = build_root_datum("SU(3)");
  CHECK(a2.in_lattice(a2.fundamental_weights()[0]));
  CHECK_FALSE(a2.in_lattice(Rat(1, 2) * a2.fundamental_weights()[0]));
}

TEST_CASE("SO(3) lattice preset: rho is not a weight") {
  RootDatum so3 = build_root_datum("SO(3)");
  CHECK(so3.in_lattice(so3.positive_roots()[0]));
  CHECK_FALSE(so3.in_lattice(rho(so3)));
  RootDatum spin3 = build_root_datum("Spin(3)");
  CHECK(spin3.in_lattice(rho(spin3)));
}

TEST_CASE("datum invariants across groups") {
  for (const char* s : {"SU(2)", "SU(4)", "U(3)", "Sp(2)", "Spin(7)",
                        "Spin(8)", "G2", "F4", "SU(2)xG2@scale=5"}) {
    RootDatum d = build_root_datum(s);
    INFO(s);
    WeightVec r = rho(d);
    for (std::size_t k = 0; k < d.num_positive(); ++k) {
      const WeightVec& a = d.positive_roots()[k];
      CHECK(d.pairing(a, a) == Rat(2));
      bool simple = false;
      for (const auto& sr : d.simple_roots())
        if (sr == a) simple = true;
      CHECK((d.pairing(r, a) == Rat(1)) == simple);
      CHECK(d.in_lattice(a));
      for (const auto& b : d.lattice_basis())
        CHECK(is_integer(d.pairing(b, a)));
    }
    for (std::size_t i = 0; i < d.rank(); ++i)
      for (std::size_t j = i + 1; j < d.rank(); ++j)
        CHECK(d.inner(d.simple_roots()[i], d.simple_roots()[j]) <= 0);
    for (std::size_t i = 0; i < d.rank(); ++i)
      CHECK(is_integer(d.pairing(d.fundamental_weights()[i],
                                 d.simple_roots()[i]) -
                       1));
  }
}

TEST_CASE("root string closure property") {
  for (const char* s : {"SU(4)", "Sp(2)", "G2", "Spin(7)"}) {
    RootDatum d = build_root_datum(s);
    INFO(s);
    for (const auto& a : d.positive_roots()) {
      for (const auto& b : d.positive_roots()) {
        if (a == b) continue;
        if (d.pairing(b, a) > 0) CHECK(d.is_root(b - a));
      }
    }
  }
}

TEST_CASE("Weyl invariance of the product") {
  std::mt19937_64 rng(7);
  for (const char* s : {"SU(3)", "Sp(2)", "G2"}) {
    RootDatum d = build_root_datum(s);
    for (int t = 0; t < 20; ++t) {
      WeightVec v(d.dim()), w(d.dim());
      for (std::size_t j = 0; j < d.dim(); ++j) {
        v[j] = Rat((long long)(rng() % 21) - 10, 3);
        w[j] = Rat((long long)(rng() % 21) - 10, 4);
      }
      for (std::size_t i = 0; i < d.rank(); ++i)
        CHECK(d.inner(d.reflect_simple(v, i), d.reflect_simple(w, i)) ==
              d.inner(v, w));
    }
  }
}

TEST_CASE("scale covariance of key predicates") {
  RootDatum d1 = build_root_datum("SU(3)");
  RootDatum d3 = build_root_datum("SU(3)@scale=3");
  WeightVec mu = Rat(3, 2) * d1.fundamental_weights()[0];
  CHECK(d3.inner_sq(rho(d3)) == Rat(3) * d1.inner_sq(rho(d1)));
  CHECK(d3.in_lattice(mu - rho_of_point(d3, mu)) ==
        d1.in_lattice(mu - rho_of_point(d1, mu)));
  CHECK(dominantize(d3, -rho(d3)).dominant == dominantize(d1, -rho(d1)).dominant);
}

TEST_CASE("custom lattice validation") {
  GroupSpec spec = parse_group_spec("SU(2)");
  spec.lattice_basis = {{Rat(1, 3), Rat(-1, 3)}};
  CHECK_THROWS_AS(build_root_datum(spec), SpecError);
  spec.lattice_basis = {{Rat(1), Rat(-1)}};
  RootDatum d = build_root_datum(spec);
  CHECK_FALSE(d.in_lattice(rho(d)));
}
