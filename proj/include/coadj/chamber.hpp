#ifndef COADJ_CHAMBER_HPP_
#define COADJ_CHAMBER_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "coadj/rootsys.hpp"

namespace coadj {

// Relative-interior face of the positive Weyl chamber, encoded by the
// subset of simple roots vanishing on it.
struct Face {
  std::uint64_t mask = 0;            // bit i set <=> simple root i vanishes
  std::vector<std::size_t> zero_set; // indices of vanishing simple roots
  std::vector<std::size_t> levi_pos; // positive roots of the Levi K_sigma

  friend bool operator==(const Face& a, const Face& b) {
    return a.mask == b.mask;
  }
  friend bool operator<(const Face& a, const Face& b) {
    return a.mask < b.mask;
  }
};

struct DominantizeResult {
  int sign = 1;        // (-1)^length
  WeightVec dominant;
  std::size_t length = 0;  // number of simple reflections applied
};

inline bool is_dominant(const RootDatum& d, const WeightVec& v) {
  for (std::size_t i = 0; i < d.rank(); ++i)
    if (d.pairing_simple(v, i) < 0) return false;
  return true;
}

// Regular: no root vanishes on v.
inline bool is_regular(const RootDatum& d, const WeightVec& v) {
  for (std::size_t k = 0; k < d.num_positive(); ++k)
    if (d.inner(v, d.positive_roots()[k]) == 0) return false;
  return true;
}

// Reflect at the lowest-index negative simple pairing until dominant.
// Deterministic word, hence reproducible sign and length.
inline DominantizeResult dominantize(const RootDatum& d, WeightVec v) {
  DominantizeResult res;
  for (;;) {
    std::size_t i = 0;
    for (; i < d.rank(); ++i)
      if (d.pairing_simple(v, i) < 0) break;
    if (i == d.rank()) break;
    v = d.reflect_simple(v, i);
    res.sign = -res.sign;
    ++res.length;
  }
  res.dominant = std::move(v);
  return res;
}

// rho^K, the half-sum of positive roots.
inline WeightVec rho(const RootDatum& d) {
  WeightVec s(d.dim());
  for (const auto& a : d.positive_roots()) s += a;
  return Rat(1, 2) * s;
}

inline Face face_from_mask(const RootDatum& d, std::uint64_t mask) {
  Face f;
  f.mask = mask;
  for (std::size_t i = 0; i < d.rank(); ++i)
    if (mask >> i & 1) f.zero_set.push_back(i);
  for (std::size_t k = 0; k < d.num_positive(); ++k) {
    const auto& c = d.simple_coeffs(k);
    bool inside = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] != 0 && !(mask >> i & 1)) {
        inside = false;
        break;
      }
    }
    if (inside) f.levi_pos.push_back(k);
  }
  return f;
}

// The face whose relative interior contains the dominant point v.
inline Face face_of(const RootDatum& d, const WeightVec& v) {
  if (!is_dominant(d, v))
    throw MathError("face_of requires a dominant weight, got (" +
                    v.to_string() + ")");
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < d.rank(); ++i)
    if (d.pairing_simple(v, i) == 0) mask |= std::uint64_t(1) << i;
  return face_from_mask(d, mask);
}

// rho^{K_sigma}: half-sum of the positive roots vanishing on the face.
inline WeightVec rho_levi(const RootDatum& d, const Face& f) {
  WeightVec s(d.dim());
  for (std::size_t k : f.levi_pos) s += d.positive_roots()[k];
  return Rat(1, 2) * s;
}

// rho(v): half-sum of the roots positive on v (over both signs of each
// root pair). For dominant v this equals rho - rho_levi(face_of(v)).
inline WeightVec rho_of_point(const RootDatum& d, const WeightVec& v) {
  WeightVec s(d.dim());
  for (const auto& a : d.positive_roots()) {
    Rat x = d.inner(v, a);
    if (x > 0)
      s += a;
    else if (x < 0)
      s -= a;
  }
  return Rat(1, 2) * s;
}

// All 2^r faces, r = semisimple rank.
inline std::vector<Face> faces(const RootDatum& d) {
  if (d.rank() >= 63) throw MathError("face lattice too large to enumerate");
  std::vector<Face> out;
  out.reserve(std::size_t(1) << d.rank());
  for (std::uint64_t m = 0; m < (std::uint64_t(1) << d.rank()); ++m)
    out.push_back(face_from_mask(d, m));
  return out;
}

namespace detail {

using RootSet = std::vector<std::uint32_t>;  // sorted positive root indices

inline RootSet face_root_set(const Face& f) {
  RootSet s(f.levi_pos.begin(), f.levi_pos.end());
  std::sort(s.begin(), s.end());
  return s;
}

inline RootSet reflect_root_set(const RootDatum& d, const RootSet& s,
                                std::size_t i) {
  const std::size_t npos = d.num_positive();
  RootSet out;
  out.reserve(s.size());
  for (std::uint32_t k : s) {
    std::size_t img = d.reflect_root_index(i, k);
    out.push_back(std::uint32_t(img < npos ? img : img - npos));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Full W-orbit of a root subsystem (as a set of positive-root indices),
// by BFS over simple reflections. Throws past the state cap.
inline std::set<RootSet> root_set_orbit(const RootDatum& d, const RootSet& s0,
                                        std::size_t cap = 10'000'000) {
  std::set<RootSet> seen{s0};
  std::vector<RootSet> queue{s0};
  while (!queue.empty()) {
    RootSet s = std::move(queue.back());
    queue.pop_back();
    for (std::size_t i = 0; i < d.rank(); ++i) {
      RootSet t = reflect_root_set(d, s, i);
      if (seen.insert(t).second) {
        if (seen.size() > cap)
          throw MathError("Levi conjugacy search exceeded the state cap");
        queue.push_back(std::move(t));
      }
    }
  }
  return seen;
}

}  // namespace detail

// W-conjugacy of the Levi root subsystems of two faces.
inline bool levi_conjugate(const RootDatum& d, const Face& f1, const Face& f2,
                           std::size_t cap = 10'000'000) {
  if (f1.levi_pos.size() != f2.levi_pos.size()) return false;
  auto s1 = detail::face_root_set(f1);
  auto s2 = detail::face_root_set(f2);
  if (s1 == s2) return true;
  auto orbit = detail::root_set_orbit(d, s1, cap);
  return orbit.count(s2) != 0;
}

// One Dixmier sheet: a W-conjugacy class of Levi subalgebras, with the
// faces realizing it and the invariants used by the distance theorems.
struct Sheet {
  std::vector<Face> representative_faces;
  Rat rho_levi_sq;            // ||rho^H||^2
  std::size_t semisimple_rank;  // rank of [h, h]
  detail::RootSet canonical_set;  // smallest W-image, a class invariant
};

// Partition of the face lattice into Levi conjugacy classes.
inline std::vector<Sheet> sheets(const RootDatum& d,
                                 std::size_t cap = 10'000'000) {
  std::vector<Face> all = faces(d);
  std::map<detail::RootSet, std::size_t> cls;  // orbit member -> sheet index
  std::vector<Sheet> out;
  for (const Face& f : all) {
    auto s = detail::face_root_set(f);
    auto it = cls.find(s);
    if (it == cls.end()) {
      auto orbit = detail::root_set_orbit(d, s, cap);
      Sheet sh;
      sh.rho_levi_sq = d.inner_sq(rho_levi(d, f));
      sh.semisimple_rank = f.zero_set.size();
      sh.canonical_set = *orbit.begin();
      out.push_back(std::move(sh));
      for (const auto& member : orbit) cls[member] = out.size() - 1;
      it = cls.find(s);
    }
    out[it->second].representative_faces.push_back(f);
  }
  return out;
}

}  // namespace coadj

#endif  // COADJ_CHAMBER_HPP_
