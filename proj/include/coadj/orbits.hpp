#ifndef COADJ_ORBITS_HPP_
#define COADJ_ORBITS_HPP_

#include <optional>
#include <vector>

#include "coadj/chamber.hpp"
#include "coadj/rootsys.hpp"

namespace coadj {

// Coadjoint orbit, keyed by its unique dominant representative.
struct Orbit {
  WeightVec rep;
  Face face;

  friend bool operator==(const Orbit& a, const Orbit& b) {
    return a.rep == b.rep;
  }
  friend bool operator!=(const Orbit& a, const Orbit& b) { return !(a == b); }
  friend bool operator<(const Orbit& a, const Orbit& b) { return a.rep < b.rep; }
};

inline Orbit orbit_from_point(const RootDatum& d, const WeightVec& v) {
  Orbit o;
  o.rep = dominantize(d, v).dominant;
  o.face = face_of(d, o.rep);
  return o;
}

inline bool is_integral(const RootDatum& d, const Orbit& o) {
  return d.in_lattice(o.rep);
}

// Admissible: rep - rho(rep) in the weight lattice.
inline bool is_admissible(const RootDatum& d, const Orbit& o) {
  return d.in_lattice(o.rep - rho_of_point(d, o.rep));
}

inline bool is_orbit_regular(const RootDatum& d, const Orbit& o) {
  return o.face.mask == 0 && o.face.zero_set.empty() && is_regular(d, o.rep);
}

// s(P): orbit of rep + rho^{K_sigma}. The pre-image may be singular and
// non-dominant; it is dominantized internally.
inline Orbit shift(const RootDatum& d, const Orbit& o) {
  return orbit_from_point(d, o.rep + rho_levi(d, o.face));
}

// Squared Euclidean distance between the orbits, realized on dominant
// representatives. The reduction to dominant representatives is validated
// against full W-enumeration in the oracle suite.
inline Rat orbit_distance_sq(const RootDatum& d, const Orbit& a,
                             const Orbit& b) {
  return d.inner_sq(a.rep - b.rep);
}

// Very regular: conjugate into the shifted chamber rho^K + t*_{>=0}.
inline bool is_very_regular(const RootDatum& d, const Orbit& o) {
  if (!is_regular(d, o.rep)) return false;
  for (std::size_t i = 0; i < d.rank(); ++i)
    if (d.pairing_simple(o.rep, i) < 1) return false;
  return true;
}

inline bool in_shifted_chamber(const RootDatum& d, const WeightVec& v) {
  for (std::size_t i = 0; i < d.rank(); ++i)
    if (d.pairing_simple(v, i) < 1) return false;
  return true;
}

// Report of the two-step inequality ||l-m||^2 >= mid >= ||rho^{K_m}||^2,
// with full equality-case witnesses so each clause can be checked on its
// own.
struct MagicalReport {
  Rat lhs;  // ||lambda - mu||^2
  Rat mid;  // (1/2) sum over positive roots vanishing on mu of (lambda, a)
  Rat rhs;  // ||rho^{K_mu}||^2
  bool equality = false;
  // Witness clauses, populated when equality holds.
  bool mu_dominant = false;
  std::optional<Face> mu_face;
  bool shift_witness = false;       // lambda = mu + rho^{K_sigma}
  bool admissible_witness = false;  // lambda - rho(lambda) = mu - rho(mu)
};

inline MagicalReport magical_check(const RootDatum& d, const WeightVec& lambda,
                                   const WeightVec& mu) {
  if (!in_shifted_chamber(d, lambda))
    throw MathError("magical_check: lambda is outside the shifted chamber");
  MagicalReport r;
  r.lhs = d.inner_sq(lambda - mu);
  WeightVec rho_mu(d.dim());
  r.mid = 0;
  for (const auto& a : d.positive_roots()) {
    if (d.inner(mu, a) == 0) {
      r.mid += Rat(1, 2) * d.inner(lambda, a);
      rho_mu += a;
    }
  }
  rho_mu *= Rat(1, 2);
  r.rhs = d.inner_sq(rho_mu);
  if (r.lhs < r.mid || r.mid < r.rhs)
    throw MathError("magical inequality chain violated (internal error)");
  r.equality = (r.lhs == r.rhs);
  if (r.equality) {
    r.mu_dominant = is_dominant(d, mu);
    if (r.mu_dominant) {
      Face sigma = face_of(d, mu);
      r.shift_witness = (lambda == mu + rho_levi(d, sigma));
      r.mu_face = std::move(sigma);
    }
    r.admissible_witness =
        (lambda - rho_of_point(d, lambda) == mu - rho_of_point(d, mu));
  }
  return r;
}

// nTr_{k_mu}|b|: half the trace of |ad b| on the stabilizer of mu. Cartan
// directions contribute nothing; each root pair vanishing on mu
// contributes |(alpha, b)|.
inline Rat normalized_trace(const RootDatum& d, const WeightVec& mu,
                            const WeightVec& b) {
  Rat s = 0;
  for (const auto& a : d.positive_roots()) {
    if (d.inner(mu, a) == 0) {
      Rat x = d.inner(a, b);
      s += x < 0 ? -x : x;
    }
  }
  return s;
}

struct TraceReport {
  Rat beta_sq;        // ||beta||^2, beta = mu - lambda
  Rat half_trace;     // (1/2) nTr_{k_mu}|beta|
  bool equality = false;
  bool mu_in_chamber = false;       // mu in C_lambda
  bool admissible_witness = false;  // lambda - rho(lambda) = mu - rho(mu)
  bool shift_witness = false;       // s(K mu) = K lambda
};

inline TraceReport trace_inequality_check(const RootDatum& d,
                                          const WeightVec& lambda,
                                          const WeightVec& mu) {
  if (!is_very_regular(d, orbit_from_point(d, lambda)))
    throw MathError("trace_inequality_check: lambda is not very regular");
  TraceReport r;
  WeightVec beta = mu - lambda;
  r.beta_sq = d.inner_sq(beta);
  r.half_trace = Rat(1, 2) * normalized_trace(d, mu, beta);
  if (r.beta_sq < r.half_trace)
    throw MathError("trace inequality violated (internal error)");
  r.equality = (r.beta_sq == r.half_trace);
  if (r.equality) {
    // C_lambda is the chamber w^{-1}(dominant) for the word dominantizing
    // lambda; membership of mu is tested after applying the same word.
    WeightVec l = lambda, m = mu;
    for (;;) {
      std::size_t i = 0;
      for (; i < d.rank(); ++i)
        if (d.pairing_simple(l, i) < 0) break;
      if (i == d.rank()) break;
      l = d.reflect_simple(l, i);
      m = d.reflect_simple(m, i);
    }
    r.mu_in_chamber = is_dominant(d, m);
    r.admissible_witness =
        (lambda - rho_of_point(d, lambda) == mu - rho_of_point(d, mu));
    r.shift_witness =
        (shift(d, orbit_from_point(d, mu)) == orbit_from_point(d, lambda));
  }
  return r;
}

// P* = -P. Preserves admissibility.
inline Orbit dual_orbit(const RootDatum& d, const Orbit& o) {
  Orbit dual = orbit_from_point(d, -o.rep);
  if (is_admissible(d, o) && !is_admissible(d, dual))
    throw MathError("dual orbit lost admissibility (internal error)");
  return dual;
}

// Whether the dominant point v lies in the relative interior of sigma:
// zero pairing exactly on the zero set, strictly positive elsewhere.
inline bool point_in_face(const RootDatum& d, const WeightVec& v,
                          const Face& sigma) {
  for (std::size_t i = 0; i < d.rank(); ++i) {
    Rat p = d.pairing_simple(v, i);
    bool vanish = (sigma.mask >> i & 1) != 0;
    if (vanish ? p != 0 : p <= 0) return false;
  }
  return true;
}

// All ancestors of a regular admissible orbit, by face sweep: one
// candidate mu = rep - rho^{K_sigma} per face, kept when mu lands in
// sigma. Each returned orbit shifts back to the input, is admissible, and
// sits at squared distance ||rho^{K_sigma}||^2.
inline std::vector<Orbit> ancestors(const RootDatum& d, const Orbit& o,
                                    const Sheet* sheet = nullptr) {
  if (!is_orbit_regular(d, o) || !is_admissible(d, o))
    throw MathError("ancestors: input orbit is not regular admissible");
  std::vector<Face> sweep =
      sheet ? sheet->representative_faces : faces(d);
  std::vector<Orbit> out;
  for (const Face& sigma : sweep) {
    WeightVec rl = rho_levi(d, sigma);
    WeightVec mu = o.rep - rl;
    if (!point_in_face(d, mu, sigma)) continue;
    Orbit p{mu, sigma};
    if (shift(d, p) != o || !is_admissible(d, p) ||
        orbit_distance_sq(d, p, o) != d.inner_sq(rl))
      throw MathError("ancestor invariant violated (internal error)");
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace coadj

#endif  // COADJ_ORBITS_HPP_
