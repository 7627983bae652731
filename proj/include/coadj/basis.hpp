#ifndef COADJ_BASIS_HPP_
#define COADJ_BASIS_HPP_

#include <string>
#include <vector>

#include "coadj/chamber.hpp"
#include "coadj/linalg.hpp"
#include "coadj/rootsys.hpp"

namespace coadj {

// Weight given as fundamental-weight coordinates (pairings with the simple
// coroots) followed by central coordinates, mapped to the ambient vector.
inline WeightVec from_fundamental(const RootDatum& d,
                                  const std::vector<Rat>& coords) {
  const std::size_t r = d.rank();
  const std::size_t z = d.central_basis().size();
  if (coords.size() != r + z)
    throw SpecError("expected " + std::to_string(r + z) +
                    " fundamental-basis coordinates, got " +
                    std::to_string(coords.size()));
  WeightVec v(d.dim());
  for (std::size_t i = 0; i < r; ++i)
    v += coords[i] * d.fundamental_weights()[i];
  for (std::size_t j = 0; j < z; ++j) v += coords[r + j] * d.central_basis()[j];
  return v;
}

// Inverse of from_fundamental: semisimple coordinates are the pairings
// with simple coroots, the central remainder is expressed in the central
// basis.
inline std::vector<Rat> to_fundamental(const RootDatum& d,
                                       const WeightVec& v) {
  const std::size_t r = d.rank();
  const std::size_t z = d.central_basis().size();
  std::vector<Rat> out;
  WeightVec rem = v;
  for (std::size_t i = 0; i < r; ++i) {
    Rat c = d.pairing_simple(v, i);
    out.push_back(c);
    rem -= c * d.fundamental_weights()[i];
  }
  if (z == 0) {
    if (!rem.is_zero())
      throw MathError("weight (" + v.to_string() +
                      ") is outside the span of the fundamental weights");
    return out;
  }
  RatMatrix a(d.dim(), std::vector<Rat>(z));
  for (std::size_t i = 0; i < d.dim(); ++i)
    for (std::size_t j = 0; j < z; ++j) a[i][j] = d.central_basis()[j][i];
  auto sol = solve_linear(std::move(a), rem.coords());
  if (!sol)
    throw MathError("weight (" + v.to_string() +
                    ") has a non-central component outside the root span");
  for (std::size_t j = 0; j < z; ++j) out.push_back((*sol)[j]);
  return out;
}

inline std::string coords_to_string(const std::vector<Rat>& coords) {
  std::string s;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ',';
    s += rat_to_string(coords[i]);
  }
  return s;
}

inline std::vector<Rat> coords_from_string(const std::string& text) {
  std::vector<Rat> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(rat_from_string(cur));
      cur.clear();
    } else if (!std::isspace((unsigned char)c)) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(rat_from_string(cur));
  return out;
}

// Parse a weight in either basis. "ambient" expects dim coordinates,
// "fundamental" expects rank + central coordinates.
inline WeightVec parse_weight(const RootDatum& d, const std::string& text,
                              const std::string& basis) {
  std::vector<Rat> coords;
  try {
    coords = coords_from_string(text);
  } catch (const std::invalid_argument& e) {
    throw SpecError("bad weight '" + text + "': " + e.what());
  }
  if (basis == "fundamental") return from_fundamental(d, coords);
  if (basis != "ambient")
    throw SpecError("unknown basis '" + basis + "' (ambient|fundamental)");
  if (coords.size() != d.dim())
    throw SpecError("expected " + std::to_string(d.dim()) +
                    " ambient coordinates, got " +
                    std::to_string(coords.size()));
  WeightVec v(d.dim());
  for (std::size_t i = 0; i < d.dim(); ++i) v[i] = coords[i];
  return v;
}

// Irrep labels are serialized in the fundamental-weight basis of lambda.
inline std::string label_string(const RootDatum& d, const WeightVec& lambda) {
  return coords_to_string(to_fundamental(d, lambda));
}

}  // namespace coadj

#endif  // COADJ_BASIS_HPP_
