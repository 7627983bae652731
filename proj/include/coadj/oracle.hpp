#ifndef COADJ_ORACLE_HPP_
#define COADJ_ORACLE_HPP_

#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "coadj/quant.hpp"

namespace coadj {

inline constexpr std::size_t kWeylOrbitRankCap = 6;

// Full W-orbit of v by BFS over simple reflections.
inline std::set<WeightVec> weyl_orbit(const RootDatum& d, const WeightVec& v,
                                      std::size_t rank_cap = kWeylOrbitRankCap) {
  if (d.rank() > rank_cap)
    throw MathError("weyl_orbit: rank exceeds the enumeration cap");
  std::set<WeightVec> seen{v};
  std::vector<WeightVec> queue{v};
  while (!queue.empty()) {
    WeightVec w = std::move(queue.back());
    queue.pop_back();
    for (std::size_t i = 0; i < d.rank(); ++i) {
      WeightVec u = d.reflect_simple(w, i);
      if (seen.insert(u).second) queue.push_back(std::move(u));
    }
  }
  return seen;
}

// min over w in W of ||rep1 - w rep2||^2, by full enumeration.
inline Rat distance_bruteforce(const RootDatum& d, const Orbit& o1,
                               const Orbit& o2,
                               std::size_t rank_cap = kWeylOrbitRankCap) {
  std::optional<Rat> best;
  for (const WeightVec& w : weyl_orbit(d, o2.rep, rank_cap)) {
    Rat x = d.inner_sq(o1.rep - w);
    if (!best || x < *best) best = x;
  }
  return *best;
}

namespace detail {

// 2i sin(theta/2), the Weyl-denominator factor of a root at X.
inline std::complex<double> half_exp_diff(double theta) {
  return std::complex<double>(0.0, 2.0 * std::sin(theta / 2.0));
}

}  // namespace detail

// Weyl character formula at e^X, X a rational vector paired through the
// invariant product. Returns nullopt when the denominator guard trips
// (caller resamples X).
inline std::optional<std::complex<double>> character_eval(
    const RootDatum& d, const WeightVec& label, const WeightVec& x) {
  if (!is_regular(d, label) || !is_dominant(d, label) ||
      !d.in_lattice(label - rho(d)))
    throw MathError("character_eval: label is not a regular dominant weight "
                    "of rho^K + Lambda");
  std::complex<double> den(1.0, 0.0);
  for (const auto& a : d.positive_roots())
    den *= detail::half_exp_diff(to_double(d.inner(a, x)));
  if (std::abs(den) <= 1e-6) return std::nullopt;

  // Signed orbit: label is regular, so each orbit point carries the sign
  // of its unique Weyl word.
  std::map<WeightVec, int> signed_orbit{{label, +1}};
  std::vector<WeightVec> queue{label};
  while (!queue.empty()) {
    WeightVec w = std::move(queue.back());
    queue.pop_back();
    int s = signed_orbit.at(w);
    for (std::size_t i = 0; i < d.rank(); ++i) {
      WeightVec u = d.reflect_simple(w, i);
      if (signed_orbit.emplace(u, -s).second) queue.push_back(std::move(u));
    }
  }
  std::complex<double> num(0.0, 0.0);
  for (const auto& [w, s] : signed_orbit) {
    double th = to_double(d.inner(w, x));
    num += double(s) * std::complex<double>(std::cos(th), std::sin(th));
  }
  return num / den;
}

// Fixed-point sum over W/W_mu: each coset contributes
// e^{i<nu,X>} / prod_{gamma in w Delta_mu^+} 2i sin(<gamma,X>/2).
inline std::optional<std::complex<double>> fixedpoint_eval(const RootDatum& d,
                                                           const Orbit& o,
                                                           const WeightVec& x) {
  if (!is_admissible(d, o))
    throw MathError("fixedpoint_eval: orbit is not admissible");
  if (d.rank() > kWeylOrbitRankCap)
    throw MathError("fixedpoint_eval: rank exceeds the enumeration cap");
  std::vector<WeightVec> base;
  for (const auto& a : d.positive_roots())
    if (d.inner(o.rep, a) > 0) base.push_back(a);
  // Cosets are keyed by nu = w mu; the transformed root set only depends
  // on the coset.
  std::map<WeightVec, std::vector<WeightVec>> states{{o.rep, base}};
  std::vector<WeightVec> queue{o.rep};
  while (!queue.empty()) {
    WeightVec nu = std::move(queue.back());
    queue.pop_back();
    std::vector<WeightVec> roots = states.at(nu);
    for (std::size_t i = 0; i < d.rank(); ++i) {
      WeightVec nu2 = d.reflect_simple(nu, i);
      if (states.count(nu2)) continue;
      std::vector<WeightVec> roots2;
      roots2.reserve(roots.size());
      for (const auto& g : roots) roots2.push_back(d.reflect_simple(g, i));
      states.emplace(nu2, std::move(roots2));
      queue.push_back(std::move(nu2));
    }
  }
  std::complex<double> total(0.0, 0.0);
  for (const auto& [nu, roots] : states) {
    std::complex<double> den(1.0, 0.0);
    for (const auto& g : roots)
      den *= detail::half_exp_diff(to_double(d.inner(g, x)));
    if (std::abs(den) <= 1e-6) return std::nullopt;
    double th = to_double(d.inner(nu, x));
    total += std::complex<double>(std::cos(th), std::sin(th)) / den;
  }
  return total;
}

// All points of c0 + Lambda inside the closed ball of squared radius
// `bound`, by Gram-Schmidt branch-and-bound in exact arithmetic.
inline std::vector<WeightVec> coset_ball(const RootDatum& d,
                                         const WeightVec& c0, const Rat& bound,
                                         std::size_t cap = 2'000'000) {
  const auto& basis = d.lattice_basis();
  const std::size_t n = basis.size();
  // Orthogonalize the basis against the invariant product.
  std::vector<WeightVec> star;
  std::vector<Rat> norm(n);
  std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t j = 0; j < n; ++j) {
    WeightVec b = basis[j];
    for (std::size_t k = 0; k < j; ++k) {
      mu[j][k] = d.inner(basis[j], star[k]) / norm[k];
      b -= mu[j][k] * star[k];
    }
    norm[j] = d.inner_sq(b);
    if (norm[j] == 0)
      throw MathError("coset_ball: lattice basis is degenerate");
    star.push_back(std::move(b));
  }
  std::vector<Rat> gamma(n);
  Rat perp_sq = d.inner_sq(c0);
  for (std::size_t j = 0; j < n; ++j) {
    gamma[j] = d.inner(c0, star[j]) / norm[j];
    perp_sq -= gamma[j] * gamma[j] * norm[j];
  }

  std::vector<WeightVec> out;
  std::vector<long long> coeff(n, 0);
  auto recurse = [&](auto&& self, std::size_t level, const Rat& rem) -> void {
    if (level == 0) {
      WeightVec v = c0;
      for (std::size_t j = 0; j < n; ++j)
        if (coeff[j] != 0) v += Rat(coeff[j]) * basis[j];
      if (out.size() >= cap)
        throw MathError("coset_ball: enumeration exceeded the point cap");
      out.push_back(std::move(v));
      return;
    }
    const std::size_t k = level - 1;
    Rat s = gamma[k];
    for (std::size_t j = k + 1; j < n; ++j) s += mu[j][k] * Rat(coeff[j]);
    Rat q = rem / norm[k];
    if (q < 0) return;
    double r = std::sqrt(to_double(q));
    double sc = to_double(s);
    long long lo = (long long)std::floor(-sc - r) - 2;
    long long hi = (long long)std::ceil(-sc + r) + 2;
    while (lo <= hi && (Rat(lo) + s) * (Rat(lo) + s) > q) ++lo;
    while (hi >= lo && (Rat(hi) + s) * (Rat(hi) + s) > q) --hi;
    for (long long m = lo; m <= hi; ++m) {
      coeff[k] = m;
      self(self, k, rem - (Rat(m) + s) * (Rat(m) + s) * norm[k]);
    }
    coeff[k] = 0;
  };
  Rat rem0 = bound - perp_sq;
  if (rem0 >= 0) {
    if (n == 0) {
      if (d.inner_sq(c0) <= bound) out.push_back(c0);
    } else {
      recurse(recurse, n, rem0);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Property-sweep harness.

struct SweepConfig {
  std::uint64_t seed = 0;
  std::size_t samples = 10000;
  Rat radius_sq = 20;
  std::vector<std::string> groups;
  std::size_t threads = 1;
  // Test fixture: sabotage the shift used in the magical-equality
  // prediction so the harness demonstrably reports counterexamples.
  bool corrupt_rho_levi = false;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t prop,
                                  std::uint64_t group, std::uint64_t index) {
  return std::mt19937_64(
      splitmix64(seed ^ splitmix64(prop * 0x100000001b3ULL ^
                                   group * 0x1000193ULL ^ index)));
}

inline long long rand_range(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + (long long)(rng() % (std::uint64_t)(hi - lo + 1));
}

inline WeightVec rand_lattice(const RootDatum& d, std::mt19937_64& rng,
                              long long m) {
  WeightVec v(d.dim());
  for (const auto& b : d.lattice_basis())
    v += Rat(rand_range(rng, -m, m)) * b;
  return v;
}

inline WeightVec rand_half_lattice(const RootDatum& d, std::mt19937_64& rng,
                                   long long m) {
  return Rat(1, 2) * rand_lattice(d, rng, 2 * m);
}

inline nlohmann::json failure_entry(std::map<std::string, std::string> inputs,
                                    std::string expected, std::string got) {
  nlohmann::json f;
  f["inputs"] = std::move(inputs);
  f["expected"] = std::move(expected);
  f["got"] = std::move(got);
  return f;
}

struct PropResult {
  std::size_t samples = 0;
  std::size_t passes = 0;
  nlohmann::json failures = nlohmann::json::array();

  void pass() { ++samples, ++passes; }
  void fail(nlohmann::json f) {
    ++samples;
    failures.push_back(std::move(f));
  }
};

// Dominantize within the Levi of the face.
inline WeightVec levi_dominantize(const RootDatum& d, const Face& f,
                                  WeightVec v) {
  for (;;) {
    bool acted = false;
    for (std::size_t i : f.zero_set) {
      if (d.pairing_simple(v, i) < 0) {
        v = d.reflect_simple(v, i);
        acted = true;
      }
    }
    if (!acted) return v;
  }
}

// All admissible dominant mu with ||mu||^2 <= bound, listed per face.
inline std::vector<std::pair<Face, std::vector<WeightVec>>> admissible_by_face(
    const RootDatum& d, const Rat& bound) {
  std::vector<std::pair<Face, std::vector<WeightVec>>> out;
  WeightVec rho_k = rho(d);
  for (const Face& f : faces(d)) {
    std::vector<WeightVec> members;
    for (WeightVec& v : coset_ball(d, rho_k - rho_levi(d, f), bound))
      if (point_in_face(d, v, f)) members.push_back(std::move(v));
    std::sort(members.begin(), members.end());
    out.emplace_back(f, std::move(members));
  }
  return out;
}

inline PropResult sweep_magical(const RootDatum& d, const SweepConfig& cfg,
                                std::uint64_t prop, std::uint64_t gi) {
  PropResult res;
  WeightVec rho_k = rho(d);
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    auto rng = sample_rng(cfg.seed, prop, gi, i);
    WeightVec lambda = rho_k;
    for (const auto& w : d.fundamental_weights())
      lambda += Rat(rand_range(rng, 0, 6), 2) * w;
    for (const auto& z : d.central_basis())
      lambda += Rat(rand_range(rng, -3, 3), 2) * z;
    WeightVec mu(d.dim());
    std::optional<bool> predicted_equality;
    switch (rand_range(rng, 0, 3)) {
      case 0:
        mu = rand_half_lattice(d, rng, 3);
        break;
      case 1: {
        Face sigma = face_from_mask(
            d, (std::uint64_t)rand_range(rng, 0, (1LL << d.rank()) - 1));
        WeightVec shift_vec = rho_levi(d, sigma);
        if (cfg.corrupt_rho_levi && !sigma.zero_set.empty())
          shift_vec += d.simple_roots()[sigma.zero_set.front()];
        mu = lambda - shift_vec;
        predicted_equality = point_in_face(d, mu, sigma);
        break;
      }
      case 2:
        for (std::size_t j = 0; j < d.dim(); ++j)
          mu[j] = Rat(rand_range(rng, -16, 16), 8);
        break;
      default:
        mu = dominantize(d, rand_half_lattice(d, rng, 3)).dominant;
        break;
    }
    std::map<std::string, std::string> in{{"lambda", lambda.to_string()},
                                          {"mu", mu.to_string()}};
    try {
      MagicalReport r = magical_check(d, lambda, mu);
      if (r.equality && !(r.mu_dominant && r.shift_witness &&
                          r.admissible_witness)) {
        res.fail(failure_entry(in, "all equality witnesses",
                               "witness clause failed"));
      } else if (predicted_equality && r.equality != *predicted_equality) {
        res.fail(failure_entry(in,
                               *predicted_equality ? "equality" : "inequality",
                               r.equality ? "equality" : "inequality"));
      } else {
        res.pass();
      }
    } catch (const MathError& e) {
      res.fail(failure_entry(in, "chain lhs >= mid >= rhs", e.what()));
    }
  }
  return res;
}

inline PropResult sweep_shift_admissibility(const RootDatum& d,
                                            const SweepConfig& cfg) {
  PropResult res;
  auto by_face = admissible_by_face(d, cfg.radius_sq);
  // Admissible mu in sigma with regular shift -> the shift is admissible,
  // dominant, and lands in rho^K + (Lambda_{>=0} within the face closure).
  for (const auto& [f, members] : by_face) {
    WeightVec rho_k = rho(d);
    for (const auto& mu : members) {
      WeightVec lam = mu + rho_levi(d, f);
      std::map<std::string, std::string> in{{"mu", mu.to_string()}};
      if (!is_regular(d, lam)) {
        res.pass();
        continue;
      }
      WeightVec diff = lam - rho_k;
      bool in_closure = true;
      for (std::size_t i : f.zero_set)
        if (d.pairing_simple(diff, i) != 0) in_closure = false;
      if (is_dominant(d, lam) && in_shifted_chamber(d, lam) &&
          d.in_lattice(diff) && is_dominant(d, diff) && in_closure &&
          is_admissible(d, Orbit{lam, face_of(d, lam)}))
        res.pass();
      else
        res.fail(failure_entry(in, "regular shift in the shifted chamber",
                               "shift " + lam.to_string()));
    }
  }
  // Regular admissible lambda, lambda - rho^{K_sigma} in sigma -> admissible.
  WeightVec rho_k = rho(d);
  std::vector<WeightVec> regulars;
  for (WeightVec& v : coset_ball(d, rho_k, cfg.radius_sq))
    if (is_dominant(d, v) && is_regular(d, v)) regulars.push_back(std::move(v));
  std::sort(regulars.begin(), regulars.end());
  for (const auto& lambda : regulars) {
    for (const Face& f : faces(d)) {
      WeightVec mu = lambda - rho_levi(d, f);
      if (!point_in_face(d, mu, f)) continue;
      std::map<std::string, std::string> in{{"lambda", lambda.to_string()},
                                            {"mu", mu.to_string()}};
      if (is_admissible(d, Orbit{mu, f}))
        res.pass();
      else
        res.fail(failure_entry(in, "admissible ancestor candidate",
                               "not admissible"));
    }
  }
  return res;
}

inline PropResult sweep_trichotomy(const RootDatum& d, const SweepConfig& cfg) {
  PropResult res;
  for (const auto& [f, members] : admissible_by_face(d, cfg.radius_sq)) {
    for (const auto& mu : members) {
      Orbit p{mu, f};
      std::map<std::string, std::string> in{{"mu", mu.to_string()}};
      try {
        SignedIrrep q = qspin(d, p);
        Orbit s = shift(d, p);
        bool regular_shift = is_orbit_regular(d, s);
        bool ok = regular_shift
                      ? (q == SignedIrrep::of(+1, s.rep) &&
                         is_admissible(d, s))
                      : q.is_zero();
        if (ok)
          res.pass();
        else
          res.fail(failure_entry(
              in, regular_shift ? "(+1, " + s.rep.to_string() + ")" : "zero",
              q.is_zero() ? "zero" : q.label.to_string()));
      } catch (const MathError& e) {
        res.fail(failure_entry(in, "qspin defined", e.what()));
      }
    }
  }
  return res;
}

inline PropResult sweep_duality(const RootDatum& d, const SweepConfig& cfg) {
  PropResult res;
  for (const auto& [f, members] : admissible_by_face(d, cfg.radius_sq)) {
    for (const auto& mu : members) {
      std::map<std::string, std::string> in{{"mu", mu.to_string()}};
      try {
        qspin_dual(d, Orbit{mu, f});
        res.pass();
      } catch (const MathError& e) {
        res.fail(failure_entry(in, "qspin(P*) = qspin(P)*", e.what()));
      }
    }
  }
  return res;
}

inline PropResult sweep_ancestors(const RootDatum& d, const SweepConfig& cfg) {
  PropResult res;
  std::vector<Sheet> sh = sheets(d);
  std::map<std::uint64_t, std::size_t> sheet_of_mask;
  Rat max_rho_sq = 0;
  for (std::size_t s = 0; s < sh.size(); ++s) {
    for (const Face& f : sh[s].representative_faces) sheet_of_mask[f.mask] = s;
    if (sh[s].rho_levi_sq > max_rho_sq) max_rho_sq = sh[s].rho_levi_sq;
  }
  WeightVec rho_k = rho(d);
  std::vector<WeightVec> regulars;
  for (WeightVec& v : coset_ball(d, rho_k, cfg.radius_sq))
    if (is_dominant(d, v) && is_regular(d, v)) regulars.push_back(std::move(v));
  std::sort(regulars.begin(), regulars.end());
  if (regulars.size() > 25) regulars.resize(25);
  for (const auto& lam : regulars) {
    Orbit o = orbit_from_point(d, lam);
    std::map<std::string, std::string> in{{"lambda", lam.to_string()}};
    try {
      std::vector<std::vector<WeightVec>> by_sweep(sh.size());
      for (const Orbit& a : ancestors(d, o))
        by_sweep[sheet_of_mask.at(a.face.mask)].push_back(a.rep);
      // Independent scan: admissible orbits at the sheet's squared
      // distance inside the widest possible ball.
      std::vector<std::vector<WeightVec>> by_scan(sh.size());
      for (const Face& f : faces(d)) {
        std::size_t s = sheet_of_mask.at(f.mask);
        for (WeightVec& u :
             coset_ball(d, rho_k - rho_levi(d, f) - lam, max_rho_sq)) {
          WeightVec v = u + lam;
          if (!point_in_face(d, v, f)) continue;
          if (d.inner_sq(v - lam) == sh[s].rho_levi_sq)
            by_scan[s].push_back(std::move(v));
        }
      }
      bool ok = true;
      for (std::size_t s = 0; s < sh.size(); ++s) {
        std::sort(by_sweep[s].begin(), by_sweep[s].end());
        std::sort(by_scan[s].begin(), by_scan[s].end());
        if (by_sweep[s] != by_scan[s]) ok = false;
      }
      if (ok)
        res.pass();
      else
        res.fail(failure_entry(in, "face sweep = distance scan per sheet",
                               "sets differ"));
    } catch (const MathError& e) {
      res.fail(failure_entry(in, "ancestors defined", e.what()));
    }
  }
  return res;
}

inline PropResult sweep_hol_oracle(const RootDatum& d, const SweepConfig& cfg,
                                   std::uint64_t prop, std::uint64_t gi,
                                   std::size_t per_component = 100) {
  PropResult res;
  std::uint64_t stream = 0;
  for (const Face& f : faces(d)) {
    for (const Component& c : components(d, f)) {
      WeightVec rho_h = rho_levi(d, f);
      for (std::size_t i = 0; i < per_component; ++i) {
        auto rng = sample_rng(cfg.seed, prop, gi, stream++);
        WeightVec mu;
        if (i % 2 == 0) {
          mu = levi_dominantize(d, f, rho_h + rand_lattice(d, rng, 2));
        } else {
          WeightVec v = levi_dominantize(d, f, rand_half_lattice(d, rng, 2));
          mu = is_levi_admissible(d, f, v)
                   ? v
                   : levi_dominantize(d, f, rho_h + rand_lattice(d, rng, 2));
        }
        if (!is_levi_admissible(d, f, mu)) mu = rho_h;
        std::map<std::string, std::string> in{
            {"face_mask", std::to_string(f.mask)},
            {"mu", mu.to_string()}};
        {
          std::string sg;
          for (int s : c.signs) sg += s > 0 ? '+' : '-';
          in["component"] = sg;
        }
        try {
          SignedIrrep a = hol_induce(d, c, mu);
          SignedIrrep b = hol_induce_oracle(d, c, mu);
          auto show = [](const SignedIrrep& s) {
            return s.is_zero() ? std::string("zero")
                               : (s.sign > 0 ? "+(" : "-(") +
                                     s.label.to_string() + ")";
          };
          if (a == b)
            res.pass();
          else
            res.fail(failure_entry(in, show(b), show(a)));
        } catch (const MathError& e) {
          res.fail(failure_entry(in, "both routes defined", e.what()));
        }
      }
    }
  }
  return res;
}

inline PropResult sweep_distance(const RootDatum& d, const SweepConfig& cfg,
                                 std::uint64_t prop, std::uint64_t gi) {
  PropResult res;
  if (d.rank() > kWeylOrbitRankCap) return res;
  auto check = [&](const Orbit& a, const Orbit& b) {
    Rat fast = orbit_distance_sq(d, a, b);
    Rat slow = distance_bruteforce(d, a, b);
    std::map<std::string, std::string> in{{"rep1", a.rep.to_string()},
                                          {"rep2", b.rep.to_string()}};
    if (fast == slow)
      res.pass();
    else
      res.fail(failure_entry(in, rat_to_string(slow), rat_to_string(fast)));
  };
  if (d.rank() <= 3) {
    std::set<WeightVec> reps;
    for (const WeightVec& v : coset_ball(d, d.zero(), cfg.radius_sq))
      reps.insert(dominantize(d, v).dominant);
    std::vector<WeightVec> list(reps.begin(), reps.end());
    std::size_t budget = cfg.samples;
    for (std::size_t i = 0; i < list.size() && budget; ++i)
      for (std::size_t j = i; j < list.size() && budget; ++j, --budget)
        check(orbit_from_point(d, list[i]), orbit_from_point(d, list[j]));
  }
  std::size_t random_pairs = std::min<std::size_t>(cfg.samples, 1000);
  for (std::size_t i = 0; i < random_pairs; ++i) {
    auto rng = sample_rng(cfg.seed, prop, gi, i);
    Orbit a = orbit_from_point(d, rand_half_lattice(d, rng, 3));
    Orbit b = orbit_from_point(d, rand_half_lattice(d, rng, 3));
    check(a, b);
  }
  return res;
}

}  // namespace detail

// Property names in report order.
inline const std::vector<std::string>& sweep_properties() {
  static const std::vector<std::string> props{
      "ancestor_distance", "distance_oracle",      "duality",
      "hol_oracle",        "magical_chain",        "shift_admissibility",
      "trichotomy"};
  return props;
}

// Runs every property suite over every group. Deterministic for a fixed
// seed: each (property, group) task is seeded independently of scheduling,
// and the report is assembled in a fixed order.
inline nlohmann::json run_sweep(const SweepConfig& cfg) {
  const auto& props = sweep_properties();
  struct Task {
    std::size_t pi, gi;
  };
  std::vector<Task> tasks;
  for (std::size_t pi = 0; pi < props.size(); ++pi)
    for (std::size_t gi = 0; gi < cfg.groups.size(); ++gi)
      tasks.push_back({pi, gi});
  std::vector<detail::PropResult> results(tasks.size());
  std::vector<RootDatum> data;
  data.reserve(cfg.groups.size());
  for (const auto& g : cfg.groups) data.push_back(build_root_datum(g));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t t = next.fetch_add(1);
      if (t >= tasks.size()) return;
      const auto [pi, gi] = tasks[t];
      const RootDatum& d = data[gi];
      const std::string& p = props[pi];
      detail::PropResult r;
      if (p == "magical_chain")
        r = detail::sweep_magical(d, cfg, pi, gi);
      else if (p == "shift_admissibility")
        r = detail::sweep_shift_admissibility(d, cfg);
      else if (p == "trichotomy")
        r = detail::sweep_trichotomy(d, cfg);
      else if (p == "duality")
        r = detail::sweep_duality(d, cfg);
      else if (p == "ancestor_distance")
        r = detail::sweep_ancestors(d, cfg);
      else if (p == "hol_oracle")
        r = detail::sweep_hol_oracle(d, cfg, pi, gi);
      else
        r = detail::sweep_distance(d, cfg, pi, gi);
      results[t] = std::move(r);
    }
  };
  std::size_t nthreads = std::max<std::size_t>(1, cfg.threads);
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  nlohmann::json report;
  report["seed"] = cfg.seed;
  report["samples"] = cfg.samples;
  report["radius_sq"] = rat_to_string(cfg.radius_sq);
  report["groups"] = cfg.groups;
  std::size_t total_failures = 0;
  nlohmann::json plist = nlohmann::json::array();
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    const auto& r = results[t];
    nlohmann::json e;
    e["property"] = props[tasks[t].pi];
    e["group"] = cfg.groups[tasks[t].gi];
    e["samples"] = r.samples;
    e["passes"] = r.passes;
    e["failures"] = r.failures;
    total_failures += r.failures.size();
    plist.push_back(std::move(e));
  }
  report["properties"] = std::move(plist);
  report["total_failures"] = total_failures;
  return report;
}

}  // namespace coadj

#endif  // COADJ_ORACLE_HPP_
