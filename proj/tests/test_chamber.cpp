#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "coadj/chamber.hpp"
#include "coadj/linalg.hpp"
#include "coadj/oracle.hpp"

using namespace coadj;

namespace {

WeightVec vec(std::initializer_list<Rat> xs) {
  WeightVec v(xs.size());
  std::size_t i = 0;
  for (const Rat& x : xs) v[i++] = x;
  return v;
}

}  // namespace

TEST_CASE("dominantize") {
  RootDatum su2 = build_root_datum("SU(2)");
  DominantizeResult r = dominantize(su2, -rho(su2));
  CHECK(r.sign == -1);
  CHECK(r.dominant == rho(su2));
  CHECK(r.length == 1);

  RootDatum u7 = build_root_datum("U(7)");
  DominantizeResult r7 = dominantize(u7, vec({1, 2, 1, 0, -1, -2, 0}));
  CHECK(r7.dominant == vec({2, 1, 1, 0, 0, -1, -2}));

  RootDatum su3 = build_root_datum("SU(3)");
  DominantizeResult r3 = dominantize(su3, rho(su3));
  CHECK(r3.sign == 1);
  CHECK(r3.dominant == rho(su3));
  CHECK(r3.length == 0);

  // Idempotent on its output, and the dominant representative is unique
  // within the full W-orbit.
  std::mt19937_64 rng(11);
  for (const char* s : {"SU(3)", "Sp(2)", "G2"}) {
    RootDatum d = build_root_datum(s);
    for (int t = 0; t < 10; ++t) {
      WeightVec v(d.dim());
      for (std::size_t j = 0; j < d.dim(); ++j)
        v[j] = Rat((long long)(rng() % 13) - 6, 2);
      WeightVec dom = dominantize(d, v).dominant;
      CHECK(dominantize(d, dom).length == 0);
      std::size_t count = 0;
      for (const WeightVec& w : weyl_orbit(d, v))
        if (is_dominant(d, w)) {
          ++count;
          CHECK(w == dom);
        }
      CHECK(count == 1);
    }
  }
}

TEST_CASE("rho per group") {
  CHECK(rho(build_root_datum("U(7)")) == vec({3, 2, 1, 0, -1, -2, -3}));
  CHECK(rho(build_root_datum("U(5)")) == vec({2, 1, 0, -1, -2}));
  CHECK(rho(build_root_datum("T1")) == vec({0}));
}

TEST_CASE("face_of") {
  RootDatum u7 = build_root_datum("U(7)");
  Face f = face_of(u7, vec({1, 0, 0, 0, 0, 0, -1}));
  CHECK(f.zero_set == std::vector<std::size_t>{1, 2, 3, 4});
  CHECK(face_of(u7, rho(u7)).zero_set.empty());
  Face all = face_of(u7, u7.zero());
  CHECK(all.zero_set.size() == u7.rank());
  CHECK_THROWS_AS(face_of(u7, vec({0, 1, 0, 0, 0, 0, 0})), MathError);
}

TEST_CASE("rho_levi") {
  RootDatum u7 = build_root_datum("U(7)");
  Face f = face_of(u7, vec({1, 0, 0, 0, 0, 0, -1}));
  CHECK(rho_levi(u7, f) == vec({0, 2, 1, 0, -1, -2, 0}));

  RootDatum u5 = build_root_datum("U(5)");
  Face f5 = face_of(u5, vec({1, 1, 0, -1, -1}));
  CHECK(f5.zero_set == std::vector<std::size_t>{0, 3});
  CHECK(rho_levi(u5, f5) ==
        vec({Rat(1, 2), Rat(-1, 2), 0, Rat(1, 2), Rat(-1, 2)}));

  CHECK(rho_levi(u5, face_of(u5, rho(u5))) == u5.zero());
}

TEST_CASE("rho_of_point") {
  RootDatum u7 = build_root_datum("U(7)");
  CHECK(rho_of_point(u7, vec({1, 0, 0, 0, 0, 0, -1})) ==
        vec({3, 0, 0, 0, 0, 0, -3}));
  CHECK(rho_of_point(u7, rho(u7)) == rho(u7));
  CHECK(rho_of_point(u7, u7.zero()) == u7.zero());
  // Dominant case decomposes through the face.
  for (const char* s : {"SU(3)", "Sp(2)", "U(4)"}) {
    RootDatum d = build_root_datum(s);
    for (const Face& f : faces(d)) {
      WeightVec v = rho(d) - rho_levi(d, f);  // interior point of f
      CHECK(rho_of_point(d, v) == rho(d) - rho_levi(d, face_of(d, v)));
    }
  }
}

TEST_CASE("face lattice size") {
  CHECK(faces(build_root_datum("SU(3)")).size() == 4);
  CHECK(faces(build_root_datum("SU(2)")).size() == 2);
  CHECK(faces(build_root_datum("U(5)")).size() == 16);
}

TEST_CASE("levi conjugacy") {
  RootDatum su3 = build_root_datum("SU(3)");
  Face s1 = face_of(su3, su3.fundamental_weights()[0]);
  Face s2 = face_of(su3, su3.fundamental_weights()[1]);
  CHECK(levi_conjugate(su3, s1, s2));
  CHECK(levi_conjugate(su3, s1, s1));

  RootDatum u4 = build_root_datum("U(4)");
  Face a = face_of(u4, vec({1, 1, 0, -1}));
  Face b = face_of(u4, vec({2, 1, 0, 0}));
  CHECK(levi_conjugate(u4, a, b));
  CHECK_FALSE(levi_conjugate(u4, a, face_of(u4, rho(u4))));
}

TEST_CASE("sheets") {
  CHECK(sheets(build_root_datum("SU(3)")).size() == 3);
  CHECK(sheets(build_root_datum("SU(2)")).size() == 2);
  CHECK(sheets(build_root_datum("U(4)")).size() == 5);

  for (const char* s : {"SU(3)", "Sp(2)", "U(4)", "G2"}) {
    RootDatum d = build_root_datum(s);
    auto sh = sheets(d);
    std::size_t covered = 0;
    std::set<detail::RootSet> canon;
    for (const Sheet& x : sh) {
      covered += x.representative_faces.size();
      CHECK(canon.insert(x.canonical_set).second);  // class invariant distinct
      for (const Face& f : x.representative_faces) {
        CHECK(d.inner_sq(rho_levi(d, f)) == x.rho_levi_sq);
        CHECK(f.zero_set.size() == x.semisimple_rank);
      }
      // Proper sheets have strictly smaller rho.
      Rat full = d.inner_sq(rho(d));
      if (x.semisimple_rank < d.rank())
        CHECK(x.rho_levi_sq < full);
      else
        CHECK(x.rho_levi_sq == full);
    }
    CHECK(covered == (std::size_t(1) << d.rank()));
  }
}

TEST_CASE("rho decomposition across faces") {
  for (const char* s : {"SU(3)", "Sp(2)", "G2", "U(4)"}) {
    RootDatum d = build_root_datum(s);
    for (const Face& f : faces(d)) {
      WeightVec rl = rho_levi(d, f);
      WeightVec diff = rho(d) - rl;
      CHECK(d.inner(diff, rl) == 0);  // orthogonal decomposition
      // rho^K - rho^{K_sigma} lies in sigma.
      for (std::size_t i = 0; i < d.rank(); ++i) {
        bool vanish =
            std::find(f.zero_set.begin(), f.zero_set.end(), i) !=
            f.zero_set.end();
        if (vanish)
          CHECK(d.pairing_simple(diff, i) == 0);
        else
          CHECK(d.pairing_simple(diff, i) > 0);
      }
    }
  }
}

TEST_CASE("projection of a regular dominant point lands in the face") {
  std::mt19937_64 rng(3);
  for (const char* s : {"SU(3)", "Sp(2)", "U(4)"}) {
    RootDatum d = build_root_datum(s);
    for (int t = 0; t < 8; ++t) {
      WeightVec xi = rho(d);
      for (const auto& w : d.fundamental_weights())
        xi += Rat((long long)(rng() % 5), 2) * w;
      for (const Face& f : faces(d)) {
        // Orthogonal projection onto the span of the face: subtract a
        // combination of zero-set simple roots to kill their products.
        const auto& zs = f.zero_set;
        RatMatrix a(zs.size(), std::vector<Rat>(zs.size()));
        std::vector<Rat> b(zs.size());
        for (std::size_t i = 0; i < zs.size(); ++i) {
          for (std::size_t j = 0; j < zs.size(); ++j)
            a[i][j] =
                d.inner(d.simple_roots()[zs[i]], d.simple_roots()[zs[j]]);
          b[i] = d.inner(xi, d.simple_roots()[zs[i]]);
        }
        auto c = solve_linear(a, b);
        REQUIRE(c);
        WeightVec proj = xi;
        for (std::size_t j = 0; j < zs.size(); ++j)
          proj -= (*c)[j] * d.simple_roots()[zs[j]];
        for (std::size_t i = 0; i < d.rank(); ++i) {
          bool vanish =
              std::find(zs.begin(), zs.end(), i) != zs.end();
          if (vanish)
            CHECK(d.pairing_simple(proj, i) == 0);
          else
            CHECK(d.pairing_simple(proj, i) > 0);
        }
      }
    }
  }
}
