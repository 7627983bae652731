#ifndef COADJ_ROOTSYS_HPP_
#define COADJ_ROOTSYS_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coadj/linalg.hpp"
#include "coadj/rational.hpp"
#include "coadj/weight.hpp"

namespace coadj {

// Malformed group spec or lattice (CLI exit code 2).
struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Violated mathematical precondition (CLI exit code 3).
struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Series { A, B, C, D, E6, E7, E8, F4, G2, Torus };

// One simple factor or central circle of the group.
struct FactorSpec {
  std::string token;  // as written, e.g. "SU(3)", "Spin(7)", "T1"
  Series series = Series::Torus;
  int rank = 0;    // Cartan rank of the factor (0 for T1)
  int dim = 1;     // ambient coordinates used by this factor
  Rat scale = 1;   // positive metric scale
  // Lattice preset: "simply-connected", "U(n)", "SO(2n+1)", "SO(3)", "torus".
  std::string preset = "simply-connected";
};

struct GroupSpec {
  std::vector<FactorSpec> factors;
  int central_torus_rank = 0;  // number of T1/U(1) style central circles
  // Optional override: rows are basis vectors of the character lattice in
  // ambient coordinates. Must contain the root lattice and pair integrally
  // with every coroot.
  std::optional<std::vector<std::vector<Rat>>> lattice_basis;
};

// Immutable exact description of (K, T). Safe to share across threads;
// everything below operates on const references to it.
class RootDatum {
 public:
  std::size_t dim() const { return dim_; }
  // Semisimple rank r: number of simple roots.
  std::size_t rank() const { return simple_roots_.size(); }
  std::size_t num_positive() const { return positive_roots_.size(); }

  const std::vector<WeightVec>& simple_roots() const { return simple_roots_; }
  const std::vector<WeightVec>& positive_roots() const {
    return positive_roots_;
  }
  // Expansion of positive root k in the simple roots.
  const std::vector<int>& simple_coeffs(std::size_t k) const {
    return pos_coeffs_[k];
  }
  const std::vector<WeightVec>& lattice_basis() const { return lattice_; }
  const std::vector<WeightVec>& fundamental_weights() const {
    return fundamental_weights_;
  }
  const std::vector<WeightVec>& central_basis() const { return central_; }
  const std::vector<FactorSpec>& factors() const { return factors_; }
  const std::string& spec_string() const { return spec_string_; }

  Rat inner(const WeightVec& v, const WeightVec& w) const {
    if (v.dim() != dim_ || w.dim() != dim_)
      throw MathError("weight dimension does not match datum");
    Rat s = 0;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (v[i] == 0) continue;
      // gram is block diagonal; row access is cheap at these sizes.
      for (std::size_t j = 0; j < dim_; ++j) {
        if (gram_[i][j] != 0 && w[j] != 0) s += v[i] * gram_[i][j] * w[j];
      }
    }
    return s;
  }
  Rat inner_sq(const WeightVec& v) const { return inner(v, v); }

  // <v, H_alpha> = 2 (v, alpha) / (alpha, alpha) for any root alpha.
  Rat pairing(const WeightVec& v, const WeightVec& alpha) const {
    std::size_t k = root_index(alpha);
    const WeightVec& pos = positive_roots_[k % num_positive()];
    Rat p = 2 * inner(v, pos) / pos_len_sq_[k % num_positive()];
    return k < num_positive() ? p : -p;
  }
  Rat pairing_pos(const WeightVec& v, std::size_t k) const {
    return 2 * inner(v, positive_roots_[k]) / pos_len_sq_[k];
  }
  Rat pairing_simple(const WeightVec& v, std::size_t i) const {
    return 2 * inner(v, simple_roots_[i]) / simple_len_sq_[i];
  }
  const Rat& pos_len_sq(std::size_t k) const { return pos_len_sq_[k]; }

  // Index of alpha among signed roots: k in [0, N) is positive root k,
  // k in [N, 2N) is minus positive root k - N. Throws if not a root.
  std::size_t root_index(const WeightVec& alpha) const {
    auto it = root_lookup_.find(alpha);
    if (it == root_lookup_.end())
      throw MathError("not a root of the datum: (" + alpha.to_string() + ")");
    return it->second;
  }
  bool is_root(const WeightVec& alpha) const {
    return root_lookup_.count(alpha) != 0;
  }

  // Simple reflection s_i acting on signed root indices.
  std::size_t reflect_root_index(std::size_t i, std::size_t k) const {
    return refl_table_[i][k];
  }

  WeightVec reflect_simple(const WeightVec& v, std::size_t i) const {
    return v - pairing_simple(v, i) * simple_roots_[i];
  }

  // Exact lattice membership: v in Lambda.
  bool in_lattice(const WeightVec& v) const {
    auto c = lattice_coords(v);
    if (!c) return false;
    for (const Rat& x : *c)
      if (!is_integer(x)) return false;
    return true;
  }

  // Coordinates of v in the lattice basis (rational), nullopt if v is
  // outside the rational span of the basis.
  std::optional<std::vector<Rat>> lattice_coords(const WeightVec& v) const {
    RatMatrix a(dim_, std::vector<Rat>(lattice_.size()));
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < lattice_.size(); ++j) a[i][j] = lattice_[j][i];
    return solve_linear(std::move(a), v.coords());
  }

  WeightVec zero() const { return WeightVec(dim_); }

 private:
  friend RootDatum build_root_datum(const GroupSpec& spec);

  std::size_t dim_ = 0;
  std::vector<FactorSpec> factors_;
  std::string spec_string_;
  std::vector<WeightVec> simple_roots_;
  std::vector<WeightVec> positive_roots_;
  std::vector<std::vector<int>> pos_coeffs_;
  RatMatrix gram_;
  std::vector<WeightVec> lattice_;
  std::vector<WeightVec> fundamental_weights_;
  std::vector<WeightVec> central_;
  std::vector<Rat> simple_len_sq_;
  std::vector<Rat> pos_len_sq_;
  std::map<WeightVec, std::size_t> root_lookup_;
  std::vector<std::vector<std::size_t>> refl_table_;
};

namespace detail {

inline void add_edge(RatMatrix& g, int a, int b, const Rat& v) {
  g[a][b] = v;
  g[b][a] = v;
}

// Gram matrix of the simple roots for the exceptional types, in the basis
// of the simple roots themselves, short roots normalized to length^2 = 2.
inline RatMatrix exceptional_gram(Series s, int rank) {
  RatMatrix g(rank, std::vector<Rat>(rank, Rat(0)));
  switch (s) {
    case Series::G2:
      g[0][0] = 2;
      g[1][1] = 6;
      add_edge(g, 0, 1, -3);
      break;
    case Series::F4:
      g[0][0] = 4;
      g[1][1] = 4;
      g[2][2] = 2;
      g[3][3] = 2;
      add_edge(g, 0, 1, -2);
      add_edge(g, 1, 2, -2);
      add_edge(g, 2, 3, -1);
      break;
    case Series::E6:
    case Series::E7:
    case Series::E8: {
      for (int i = 0; i < rank; ++i) g[i][i] = 2;
      // Bourbaki numbering: chain 1-3-4-5-..., node 2 attached to 4.
      add_edge(g, 0, 2, -1);
      for (int i = 2; i + 1 < rank; ++i) add_edge(g, i, i + 1, -1);
      add_edge(g, 1, 3, -1);
      break;
    }
    default:
      throw SpecError("internal: not an exceptional series");
  }
  return g;
}

struct FactorData {
  std::vector<std::vector<Rat>> simple_roots;  // block coordinates
  RatMatrix gram;                              // block Gram matrix
  std::vector<std::vector<Rat>> lattice;       // block lattice basis
  std::vector<std::vector<Rat>> central;       // block central directions
  bool lattice_is_fw = false;  // use computed fundamental weights instead
};

inline std::vector<Rat> unit(int dim, int i) {
  std::vector<Rat> v(dim, Rat(0));
  v[i] = 1;
  return v;
}

inline FactorData realize_factor(const FactorSpec& f) {
  FactorData d;
  const int n = f.rank;
  const int dim = f.dim;
  d.gram.assign(dim, std::vector<Rat>(dim, Rat(0)));
  auto e = [&](int i) { return unit(dim, i); };
  auto diff = [&](int i, int j) {
    auto v = unit(dim, i);
    v[j] = -1;
    return v;
  };
  switch (f.series) {
    case Series::A: {
      // Ambient e_1..e_{n+1}, standard dot product.
      for (int i = 0; i < dim; ++i) d.gram[i][i] = f.scale;
      for (int i = 0; i < n; ++i) d.simple_roots.push_back(diff(i, i + 1));
      if (f.preset == "U(n)") {
        for (int i = 0; i < dim; ++i) d.lattice.push_back(e(i));
        d.central.push_back(std::vector<Rat>(dim, Rat(1)));
      } else if (f.preset == "SO(3)") {
        d.lattice.push_back(diff(0, 1));
      } else {
        d.lattice_is_fw = true;
      }
      break;
    }
    case Series::B: {
      for (int i = 0; i < dim; ++i) d.gram[i][i] = 2 * f.scale;
      for (int i = 0; i + 1 < n; ++i) d.simple_roots.push_back(diff(i, i + 1));
      d.simple_roots.push_back(e(n - 1));
      if (f.preset == "SO(2n+1)") {
        for (int i = 0; i < dim; ++i) d.lattice.push_back(e(i));
      } else {
        d.lattice_is_fw = true;
      }
      break;
    }
    case Series::C: {
      for (int i = 0; i < dim; ++i) d.gram[i][i] = f.scale;
      for (int i = 0; i + 1 < n; ++i) d.simple_roots.push_back(diff(i, i + 1));
      auto last = e(n - 1);
      last[n - 1] = 2;
      d.simple_roots.push_back(last);
      d.lattice_is_fw = true;
      break;
    }
    case Series::D: {
      for (int i = 0; i < dim; ++i) d.gram[i][i] = f.scale;
      for (int i = 0; i + 1 < n; ++i) d.simple_roots.push_back(diff(i, i + 1));
      auto last = e(n - 2);
      last[n - 1] = 1;
      d.simple_roots.push_back(last);
      d.lattice_is_fw = true;
      break;
    }
    case Series::G2:
    case Series::F4:
    case Series::E6:
    case Series::E7:
    case Series::E8: {
      // Coordinates are coefficients in the simple-root basis.
      d.gram = exceptional_gram(f.series, n);
      for (auto& row : d.gram)
        for (Rat& x : row) x *= f.scale;
      for (int i = 0; i < n; ++i) d.simple_roots.push_back(e(i));
      d.lattice_is_fw = true;
      break;
    }
    case Series::Torus: {
      d.gram[0][0] = f.scale;
      d.lattice.push_back(e(0));
      d.central.push_back(e(0));
      break;
    }
  }
  return d;
}

// Positive roots by closure from the simple roots, level by level in
// height. Returns coefficient vectors; simple roots come first.
inline std::vector<std::vector<int>> positive_root_closure(
    const std::vector<WeightVec>& simple, const RootDatum& pairing_host);

}  // namespace detail

// ---------------------------------------------------------------------------
// Group spec grammar: FACTOR ("x" FACTOR)*, FACTOR in {SU(n), U(n), Spin(n),
// Sp(n), SO(2n+1), SO(3), G2, F4, E6, E7, E8, T1}, optional "@scale=p/q".

inline FactorSpec parse_factor(const std::string& tok) {
  FactorSpec f;
  f.token = tok;
  std::string body = tok;
  auto at = tok.find('@');
  if (at != std::string::npos) {
    body = tok.substr(0, at);
    std::string opt = tok.substr(at + 1);
    if (opt.rfind("scale=", 0) != 0)
      throw SpecError("unknown factor option '" + opt + "' in '" + tok + "'");
    f.scale = rat_from_string(opt.substr(6));
    if (f.scale <= 0) throw SpecError("metric scale must be positive: " + tok);
  }
  auto arg = [&](const std::string& head) -> std::optional<int> {
    if (body.rfind(head + "(", 0) != 0 || body.back() != ')')
      return std::nullopt;
    std::string num = body.substr(head.size() + 1,
                                  body.size() - head.size() - 2);
    if (num.empty() ||
        num.find_first_not_of("0123456789") != std::string::npos)
      throw SpecError("bad rank in factor '" + tok + "'");
    return std::stoi(num);
  };
  if (body == "T1") {
    f.series = Series::Torus;
    f.preset = "torus";
    return f;
  }
  if (body == "G2" || body == "F4" || body == "E6" || body == "E7" ||
      body == "E8") {
    f.series = body == "G2"   ? Series::G2
               : body == "F4" ? Series::F4
               : body == "E6" ? Series::E6
               : body == "E7" ? Series::E7
                              : Series::E8;
    f.rank = body == "G2" ? 2 : body == "F4" ? 4 : body[1] - '0';
    f.dim = f.rank;
    return f;
  }
  if (auto n = arg("SU")) {
    if (*n < 2) throw SpecError("SU(n) requires n >= 2");
    f.series = Series::A;
    f.rank = *n - 1;
    f.dim = *n;
    return f;
  }
  if (auto n = arg("U")) {
    if (*n < 1) throw SpecError("U(n) requires n >= 1");
    if (*n == 1) {
      f.series = Series::Torus;
      f.preset = "torus";
      return f;
    }
    f.series = Series::A;
    f.rank = *n - 1;
    f.dim = *n;
    f.preset = "U(n)";
    return f;
  }
  if (auto n = arg("Spin")) {
    if (*n == 3) {
      f.series = Series::A;
      f.rank = 1;
      f.dim = 2;
      return f;
    }
    if (*n >= 5 && *n % 2 == 1) {
      f.series = Series::B;
      f.rank = (*n - 1) / 2;
      f.dim = f.rank;
      return f;
    }
    if (*n >= 6 && *n % 2 == 0) {
      f.series = Series::D;
      f.rank = *n / 2;
      f.dim = f.rank;
      return f;
    }
    throw SpecError("Spin(n) requires n = 3 or n >= 5 (n >= 6 when even)");
  }
  if (auto n = arg("SO")) {
    if (*n == 3) {
      // A_1 realization with the root lattice: rho is not a weight.
      f.series = Series::A;
      f.rank = 1;
      f.dim = 2;
      f.preset = "SO(3)";
      return f;
    }
    if (*n >= 5 && *n % 2 == 1) {
      f.series = Series::B;
      f.rank = (*n - 1) / 2;
      f.dim = f.rank;
      f.preset = "SO(2n+1)";
      return f;
    }
    throw SpecError("SO(n) supported for odd n >= 3 only");
  }
  if (auto n = arg("Sp")) {
    if (*n < 2) throw SpecError("Sp(n) requires n >= 2");
    f.series = Series::C;
    f.rank = *n;
    f.dim = *n;
    return f;
  }
  throw SpecError("unrecognized factor '" + tok + "'");
}

inline GroupSpec parse_group_spec(const std::string& s) {
  GroupSpec spec;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto next = s.find('x', pos);
    std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos
                                                              : next - pos);
    if (tok.empty()) throw SpecError("empty factor in group spec '" + s + "'");
    FactorSpec f = parse_factor(tok);
    if (f.series == Series::Torus) ++spec.central_torus_rank;
    spec.factors.push_back(std::move(f));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (spec.factors.empty()) throw SpecError("empty group spec");
  return spec;
}

// ---------------------------------------------------------------------------

inline RootDatum build_root_datum(const GroupSpec& spec) {
  RootDatum d;
  for (const auto& f : spec.factors) {
    if (f.scale <= 0) throw SpecError("metric scale must be positive");
    d.spec_string_ += (d.spec_string_.empty() ? "" : "x") + f.token;
  }
  d.factors_ = spec.factors;

  std::size_t dim = 0;
  for (const auto& f : spec.factors) dim += f.dim;
  d.dim_ = dim;
  d.gram_.assign(dim, std::vector<Rat>(dim, Rat(0)));

  std::size_t offset = 0;
  std::vector<std::pair<std::size_t, detail::FactorData>> blocks;
  for (const auto& f : spec.factors) {
    detail::FactorData fd = detail::realize_factor(f);
    for (int i = 0; i < f.dim; ++i)
      for (int j = 0; j < f.dim; ++j) d.gram_[offset + i][offset + j] = fd.gram[i][j];
    auto lift = [&](const std::vector<Rat>& v) {
      WeightVec w(dim);
      for (std::size_t i = 0; i < v.size(); ++i) w[offset + i] = v[i];
      return w;
    };
    for (const auto& r : fd.simple_roots) d.simple_roots_.push_back(lift(r));
    for (const auto& v : fd.central) d.central_.push_back(lift(v));
    blocks.emplace_back(offset, std::move(fd));
    offset += f.dim;
  }

  // Positive roots by closure, level by level in height.
  {
    const std::size_t r = d.simple_roots_.size();
    std::map<std::vector<int>, std::size_t> seen;
    std::vector<std::vector<int>> coeffs;
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<int> c(r, 0);
      c[i] = 1;
      seen[c] = i;
      coeffs.push_back(c);
    }
    // Cache simple pairings via the Gram matrix.
    auto root_vec = [&](const std::vector<int>& c) {
      WeightVec v(dim);
      for (std::size_t i = 0; i < r; ++i)
        if (c[i]) v += Rat(c[i]) * d.simple_roots_[i];
      return v;
    };
    for (std::size_t i = 0; i < r; ++i)
      d.simple_len_sq_.push_back(d.inner(d.simple_roots_[i], d.simple_roots_[i]));
    std::size_t head = 0;
    std::vector<std::vector<int>> frontier = coeffs;
    while (head < coeffs.size()) {
      std::vector<int> c = coeffs[head++];
      WeightVec beta = root_vec(c);
      for (std::size_t i = 0; i < r; ++i) {
        // beta + alpha_i is a root iff p - <beta, H_i> > 0 where p is the
        // largest k with beta - k alpha_i a positive root (or beta simple).
        Rat pr = 2 * d.inner(beta, d.simple_roots_[i]) / d.simple_len_sq_[i];
        long p = 0;
        std::vector<int> down = c;
        while (down[i] > 0) {
          --down[i];
          bool all_zero = std::all_of(down.begin(), down.end(),
                                      [](int x) { return x == 0; });
          if (all_zero || seen.count(down)) {
            if (all_zero) break;
            ++p;
          } else {
            break;
          }
        }
        if (Rat(p) - pr <= 0) continue;
        std::vector<int> up = c;
        ++up[i];
        if (!seen.count(up)) {
          seen[up] = coeffs.size();
          coeffs.push_back(up);
        }
      }
    }
    // Sort by height then lexicographically: a stable, readable order.
    std::sort(coeffs.begin(), coeffs.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                int ha = 0, hb = 0;
                for (int x : a) ha += x;
                for (int x : b) hb += x;
                if (ha != hb) return ha < hb;
                return a < b;
              });
    for (const auto& c : coeffs) {
      d.positive_roots_.push_back(root_vec(c));
      d.pos_coeffs_.push_back(c);
    }
  }
  const std::size_t npos = d.positive_roots_.size();
  for (std::size_t k = 0; k < npos; ++k) {
    d.pos_len_sq_.push_back(d.inner(d.positive_roots_[k], d.positive_roots_[k]));
    d.root_lookup_[d.positive_roots_[k]] = k;
    d.root_lookup_[-d.positive_roots_[k]] = npos + k;
  }

  // Fundamental weights: solve within the span of the factor's simple roots.
  {
    const std::size_t r = d.simple_roots_.size();
    for (std::size_t i = 0; i < r; ++i) {
      RatMatrix a(r, std::vector<Rat>(r));
      std::vector<Rat> rhs(r, Rat(0));
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k)
          a[j][k] = d.pairing_simple(d.simple_roots_[k], j);
      rhs[i] = 1;
      auto m = solve_linear(std::move(a), std::move(rhs));
      if (!m) throw SpecError("internal: Cartan matrix is singular");
      WeightVec w(dim);
      for (std::size_t k = 0; k < r; ++k)
        if ((*m)[k] != 0) w += (*m)[k] * d.simple_roots_[k];
      d.fundamental_weights_.push_back(w);
    }
  }

  // Character lattice.
  if (spec.lattice_basis) {
    for (const auto& row : *spec.lattice_basis) {
      if (row.size() != dim)
        throw SpecError("lattice basis vector has wrong dimension");
      d.lattice_.push_back(WeightVec(row));
    }
  } else {
    std::size_t simple_offset = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const auto& fd = blocks[b].second;
      const std::size_t off = blocks[b].first;
      if (fd.lattice_is_fw) {
        for (std::size_t i = 0; i < fd.simple_roots.size(); ++i)
          d.lattice_.push_back(d.fundamental_weights_[simple_offset + i]);
      } else {
        for (const auto& v : fd.lattice) {
          WeightVec w(dim);
          for (std::size_t i = 0; i < v.size(); ++i) w[off + i] = v[i];
          d.lattice_.push_back(w);
        }
      }
      simple_offset += fd.simple_roots.size();
    }
  }

  // Lattice validation: contains the root lattice, pairs integrally with
  // every coroot.
  for (std::size_t k = 0; k < npos; ++k) {
    if (!d.in_lattice(d.positive_roots_[k]))
      throw SpecError("lattice does not contain the root (" +
                      d.positive_roots_[k].to_string() + ")");
  }
  for (const auto& b : d.lattice_) {
    for (std::size_t k = 0; k < npos; ++k) {
      if (!is_integer(d.pairing_pos(b, k)))
        throw SpecError("lattice vector (" + b.to_string() +
                        ") pairs non-integrally with the coroot of (" +
                        d.positive_roots_[k].to_string() + ")");
    }
  }

  // Reflection tables on signed roots.
  d.refl_table_.assign(d.rank(), std::vector<std::size_t>(2 * npos));
  for (std::size_t i = 0; i < d.rank(); ++i) {
    for (std::size_t k = 0; k < npos; ++k) {
      WeightVec img = d.reflect_simple(d.positive_roots_[k], i);
      std::size_t idx = d.root_index(img);
      d.refl_table_[i][k] = idx;
      d.refl_table_[i][npos + k] = idx < npos ? idx + npos : idx - npos;
    }
  }
  return d;
}

inline RootDatum build_root_datum(const std::string& spec_string) {
  return build_root_datum(parse_group_spec(spec_string));
}

}  // namespace coadj

#endif  // COADJ_ROOTSYS_HPP_
