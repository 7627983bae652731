#ifndef COADJ_QUANT_HPP_
#define COADJ_QUANT_HPP_

#include <algorithm>
#include <vector>

#include "coadj/linalg.hpp"
#include "coadj/orbits.hpp"

namespace coadj {

// Result of quantization: zero, or a signed irreducible label
// lambda in rho^K + Lambda_{>=0}.
struct SignedIrrep {
  enum class Kind { Zero, NonZero };
  Kind kind = Kind::Zero;
  int sign = 1;      // meaningful for NonZero only
  WeightVec label;   // regular dominant, meaningful for NonZero only

  static SignedIrrep zero() { return SignedIrrep{}; }
  static SignedIrrep of(int sign, WeightVec label) {
    return SignedIrrep{Kind::NonZero, sign, std::move(label)};
  }
  bool is_zero() const { return kind == Kind::Zero; }

  friend bool operator==(const SignedIrrep& a, const SignedIrrep& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == Kind::Zero) return true;
    return a.sign == b.sign && a.label == b.label;
  }
  friend bool operator!=(const SignedIrrep& a, const SignedIrrep& b) {
    return !(a == b);
  }
};

// Antisymmetrization kernel: nu in rho^K + Lambda maps to zero when
// singular, otherwise to the unique dominant W-translate with the sign of
// the word.
inline SignedIrrep bott_dominantize(const RootDatum& d, const WeightVec& nu) {
  if (!d.in_lattice(nu - rho(d)))
    throw MathError("bott_dominantize: nu is not in rho^K + Lambda");
  if (!is_regular(d, nu)) return SignedIrrep::zero();
  DominantizeResult r = dominantize(d, nu);
  return SignedIrrep::of(r.sign, std::move(r.dominant));
}

// Spin quantization of an admissible orbit, by the closed form: label the
// orbit by its shift when the shift is regular, zero otherwise.
inline SignedIrrep qspin(const RootDatum& d, const Orbit& o) {
  if (!is_admissible(d, o))
    throw MathError("qspin: orbit is not admissible");
  WeightVec lambda = o.rep + rho_levi(d, o.face);
  if (!is_regular(d, lambda)) return SignedIrrep::zero();
  // Regular shift of an admissible orbit is dominant, admissible and in
  // the shifted chamber.
  if (!is_dominant(d, lambda) || !in_shifted_chamber(d, lambda) ||
      !d.in_lattice(lambda - rho(d)))
    throw MathError("qspin: regular shift failed its invariants");
  return SignedIrrep::of(+1, std::move(lambda));
}

// Dual label: -w_0 applied to the label.
inline SignedIrrep dual_irrep(const RootDatum& d, const SignedIrrep& s) {
  if (s.is_zero()) return s;
  return SignedIrrep::of(s.sign, dominantize(d, -s.label).dominant);
}

// Q^spin of the dual orbit; checked against the dual of Q^spin.
inline SignedIrrep qspin_dual(const RootDatum& d, const Orbit& o) {
  SignedIrrep via_dual = qspin(d, dual_orbit(d, o));
  if (via_dual != dual_irrep(d, qspin(d, o)))
    throw MathError("qspin duality violated (internal error)");
  return via_dual;
}

// Connected component of h*_0 for the Levi H = K_sigma, cut out in the
// H-fixed directions of t* by the roots outside the Levi. Recorded as the
// sign every non-Levi positive root takes on the component.
struct Component {
  Face face;
  std::vector<std::size_t> nonlevi;  // positive-root indices outside the Levi
  std::vector<int> signs;            // +-1, parallel to nonlevi
  WeightVec rho_c;                   // (1/2) sum signs(a) * a
};

// All realizable components for a face. The dominant (all +1) pattern
// comes first.
inline std::vector<Component> components(const RootDatum& d, const Face& f) {
  std::vector<std::size_t> nonlevi;
  for (std::size_t k = 0; k < d.num_positive(); ++k)
    if (std::find(f.levi_pos.begin(), f.levi_pos.end(), k) ==
        f.levi_pos.end())
      nonlevi.push_back(k);

  // Basis of z* = directions orthogonal to the Levi roots: null space of
  // the rows (alpha_i, .) for i in the zero set.
  const std::size_t dim = d.dim();
  std::vector<std::vector<Rat>> zbasis;
  {
    RatMatrix a;
    for (std::size_t i : f.zero_set) {
      std::vector<Rat> row(dim);
      for (std::size_t j = 0; j < dim; ++j) {
        WeightVec ej(dim);
        ej[j] = 1;
        row[j] = d.inner(d.simple_roots()[i], ej);
      }
      a.push_back(std::move(row));
    }
    // Gaussian elimination for the null space.
    std::vector<int> pivot_of_col(dim, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < dim && r < a.size(); ++c) {
      std::size_t p = r;
      while (p < a.size() && a[p][c] == 0) ++p;
      if (p == a.size()) continue;
      std::swap(a[p], a[r]);
      Rat inv = Rat(1) / a[r][c];
      for (std::size_t j = 0; j < dim; ++j) a[r][j] *= inv;
      for (std::size_t i2 = 0; i2 < a.size(); ++i2) {
        if (i2 == r || a[i2][c] == 0) continue;
        Rat fct = a[i2][c];
        for (std::size_t j = 0; j < dim; ++j) a[i2][j] -= fct * a[r][j];
      }
      pivot_of_col[c] = int(r);
      ++r;
    }
    for (std::size_t c = 0; c < dim; ++c) {
      if (pivot_of_col[c] >= 0) continue;
      std::vector<Rat> v(dim, Rat(0));
      v[c] = 1;
      for (std::size_t c2 = 0; c2 < dim; ++c2)
        if (pivot_of_col[c2] >= 0) v[c2] = -a[pivot_of_col[c2]][c];
      zbasis.push_back(std::move(v));
    }
  }

  // Each non-Levi root restricts to a linear functional on z*.
  std::vector<std::vector<Rat>> restricted;
  for (std::size_t k : nonlevi) {
    std::vector<Rat> row(zbasis.size());
    for (std::size_t j = 0; j < zbasis.size(); ++j)
      row[j] = d.inner(d.positive_roots()[k], WeightVec(zbasis[j]));
    restricted.push_back(std::move(row));
  }

  // Incremental chamber enumeration: extend feasible sign patterns one
  // root at a time, keeping exactly the realizable ones.
  std::vector<std::vector<int>> patterns{{}};
  for (std::size_t t = 0; t < nonlevi.size(); ++t) {
    std::vector<std::vector<int>> next;
    for (const auto& pat : patterns) {
      for (int s : {+1, -1}) {
        std::vector<std::vector<Rat>> strict;
        for (std::size_t j = 0; j <= t; ++j) {
          std::vector<Rat> row = restricted[j];
          int sj = j < t ? pat[j] : s;
          if (sj < 0)
            for (Rat& x : row) x = -x;
          strict.push_back(std::move(row));
        }
        if (!cone_feasible(std::move(strict), {})) continue;
        auto ext = pat;
        ext.push_back(s);
        next.push_back(std::move(ext));
      }
    }
    patterns = std::move(next);
  }

  std::vector<Component> out;
  for (const auto& pat : patterns) {
    Component c;
    c.face = f;
    c.nonlevi = nonlevi;
    c.signs = pat;
    WeightVec rc(d.dim());
    for (std::size_t j = 0; j < nonlevi.size(); ++j) {
      if (pat[j] > 0)
        rc += d.positive_roots()[nonlevi[j]];
      else
        rc -= d.positive_roots()[nonlevi[j]];
    }
    c.rho_c = Rat(1, 2) * rc;
    out.push_back(std::move(c));
  }
  // Dominant pattern first, then lexicographic (+1 before -1).
  std::sort(out.begin(), out.end(), [](const Component& a, const Component& b) {
    return a.signs < b.signs;
  });
  std::reverse(out.begin(), out.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const Component& a, const Component& b) {
                     auto neg = [](const Component& c) {
                       return std::count(c.signs.begin(), c.signs.end(), -1);
                     };
                     return neg(a) < neg(b);
                   });
  return out;
}

// H-dominance and H-admissibility of mu for the Levi of the face, using
// the shared lattice Lambda.
inline bool is_levi_dominant(const RootDatum& d, const Face& f,
                             const WeightVec& mu) {
  for (std::size_t k : f.levi_pos)
    if (d.inner(mu, d.positive_roots()[k]) < 0) return false;
  return true;
}

inline WeightVec levi_rho_of_point(const RootDatum& d, const Face& f,
                                   const WeightVec& mu) {
  WeightVec s(d.dim());
  for (std::size_t k : f.levi_pos) {
    Rat x = d.inner(mu, d.positive_roots()[k]);
    if (x > 0)
      s += d.positive_roots()[k];
    else if (x < 0)
      s -= d.positive_roots()[k];
  }
  return Rat(1, 2) * s;
}

inline bool is_levi_admissible(const RootDatum& d, const Face& f,
                               const WeightVec& mu) {
  return d.in_lattice(mu - levi_rho_of_point(d, f, mu));
}

// Holomorphic induction of Q^spin_H(H mu) to K, closed form: shift by
// rho_C, vanish when a non-Levi root vanishes, otherwise Q^spin of the
// shifted K-orbit with the orientation sign between the component of the
// shifted point and C.
inline SignedIrrep hol_induce(const RootDatum& d, const Component& c,
                              const WeightVec& mu) {
  const Face& f = c.face;
  if (!is_levi_dominant(d, f, mu))
    throw MathError("hol_induce: mu is not dominant for the Levi");
  if (!is_levi_admissible(d, f, mu))
    throw MathError("hol_induce: mu is not H-admissible");
  WeightVec mu_prime = mu + c.rho_c;
  int eps = 1;
  for (std::size_t j = 0; j < c.nonlevi.size(); ++j) {
    Rat x = d.inner(mu_prime, d.positive_roots()[c.nonlevi[j]]);
    if (x == 0) return SignedIrrep::zero();  // mu' left h*_0
    int s_prime = x > 0 ? +1 : -1;
    if (s_prime != c.signs[j]) eps = -eps;
  }
  Orbit p = orbit_from_point(d, mu_prime);
  if (!is_admissible(d, p))
    throw MathError("hol_induce: shifted orbit is not K-admissible");
  SignedIrrep q = qspin(d, p);
  if (q.is_zero()) return q;
  return SignedIrrep::of(eps * q.sign, std::move(q.label));
}

// Independent route through the torus: replace H mu by its H-regular
// shift mu~, then antisymmetrize mu~ + rho_C over W, with one orientation
// flip per non-Levi root negative on C and per Levi root negative on mu~.
inline SignedIrrep hol_induce_oracle(const RootDatum& d, const Component& c,
                                     const WeightVec& mu) {
  const Face& f = c.face;
  if (!is_levi_dominant(d, f, mu))
    throw MathError("hol_induce: mu is not dominant for the Levi");
  if (!is_levi_admissible(d, f, mu))
    throw MathError("hol_induce: mu is not H-admissible");
  // H-shift of mu: add the rho element of the sub-Levi fixing mu.
  WeightVec mu_tilde = mu;
  {
    WeightVec s(d.dim());
    for (std::size_t k : f.levi_pos)
      if (d.inner(mu, d.positive_roots()[k]) == 0)
        s += d.positive_roots()[k];
    mu_tilde += Rat(1, 2) * s;
  }
  int flips = 0;
  for (std::size_t k : f.levi_pos) {
    Rat x = d.inner(mu_tilde, d.positive_roots()[k]);
    if (x == 0) return SignedIrrep::zero();  // Q^spin_H vanishes
    if (x < 0) ++flips;
  }
  for (int s : c.signs)
    if (s < 0) ++flips;
  SignedIrrep b = bott_dominantize(d, mu_tilde + c.rho_c);
  if (b.is_zero()) return b;
  return SignedIrrep::of((flips % 2 ? -1 : 1) * b.sign, std::move(b.label));
}

}  // namespace coadj

#endif  // COADJ_QUANT_HPP_
