#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "coadj/basis.hpp"
#include "coadj/oracle.hpp"

using nlohmann::json;
using namespace coadj;

namespace {

std::string g_output = "json";

void emit(const json& j) {
  if (g_output == "pretty")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump() << "\n";
}

json weight_json(const RootDatum& d, const WeightVec& v) {
  json j;
  j["ambient"] = v.to_string();
  j["fundamental"] = coords_to_string(to_fundamental(d, v));
  return j;
}

json irrep_json(const RootDatum& d, const SignedIrrep& s) {
  if (s.is_zero()) return json("zero");
  json j;
  j["sign"] = s.sign;
  j["label"] = label_string(d, s.label);
  j["label_ambient"] = s.label.to_string();
  return j;
}

json orbit_record(const RootDatum& d, const Orbit& o) {
  json j;
  j["dominant_rep"] = weight_json(d, o.rep);
  j["face_zero_set"] = o.face.zero_set;
  j["integral"] = is_integral(d, o);
  j["admissible"] = is_admissible(d, o);
  j["regular"] = is_orbit_regular(d, o);
  j["very_regular"] = is_very_regular(d, o);
  Orbit s = shift(d, o);
  j["shift_dominant"] = s.rep.to_string();
  j["shift_singular"] = !is_orbit_regular(d, s);
  if (is_admissible(d, o))
    j["qspin"] = irrep_json(d, qspin(d, o));
  return j;
}

json sheet_table(const RootDatum& d) {
  json arr = json::array();
  auto sh = sheets(d);
  for (std::size_t i = 0; i < sh.size(); ++i) {
    json e;
    e["index"] = i;
    e["rho_sheet_sq"] = rat_to_string(sh[i].rho_levi_sq);
    e["semisimple_rank"] = sh[i].semisimple_rank;
    json fs = json::array();
    for (const Face& f : sh[i].representative_faces) fs.push_back(f.zero_set);
    e["faces"] = fs;
    arr.push_back(std::move(e));
  }
  return arr;
}

Face parse_face(const RootDatum& d, const std::string& text) {
  Face f;
  std::uint64_t mask = 0;
  if (text != "none" && !text.empty()) {
    for (const Rat& x : coords_from_string(text)) {
      if (!is_integer(x) || x < 0 || x >= Rat((unsigned)d.rank()))
        throw SpecError("face indices must be simple-root indices 0.." +
                        std::to_string(d.rank() - 1));
      mask |= std::uint64_t(1) << numerator(x).convert_to<unsigned>();
    }
  }
  return face_from_mask(d, mask);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coadjoint-orbit classifier for compact connected Lie groups"};
  app.require_subcommand(1);
  app.add_option("--output", g_output, "json|pretty")
      ->check(CLI::IsMember({"json", "pretty"}));

  std::string spec, sub2, weight, lambda_s, mu_s, basis = "ambient";
  std::string face_s = "none";
  long long sheet_idx = -1, comp_idx = 0;

  auto* grp = app.add_subcommand("group", "group-level data");
  grp->add_option("action", sub2)->check(CLI::IsMember({"show"}))->required();
  grp->add_option("spec", spec)->required();

  auto* orb = app.add_subcommand("orbit", "orbit queries");
  orb->add_option("action", sub2)->check(CLI::IsMember({"info"}))->required();
  orb->add_option("spec", spec)->required();
  orb->add_option("--weight", weight)->required();
  orb->add_option("--basis", basis);

  auto* she = app.add_subcommand("sheets", "Dixmier sheet table");
  she->add_option("spec", spec)->required();

  auto* anc = app.add_subcommand("ancestors", "ancestors of a regular orbit");
  anc->add_option("spec", spec)->required();
  anc->add_option("--weight", weight)->required();
  anc->add_option("--basis", basis);
  anc->add_option("--sheet", sheet_idx);

  auto* qsp = app.add_subcommand("qspin", "spin quantization of an orbit");
  qsp->add_option("spec", spec)->required();
  qsp->add_option("--weight", weight)->required();
  qsp->add_option("--basis", basis);

  auto* ind = app.add_subcommand("induce", "holomorphic induction from a Levi");
  ind->add_option("spec", spec)->required();
  ind->add_option("--face", face_s)->required();
  ind->add_option("--component", comp_idx);
  ind->add_option("--weight", weight)->required();
  ind->add_option("--basis", basis);

  auto* mag = app.add_subcommand("magical", "two-step distance inequality");
  mag->add_option("spec", spec)->required();
  mag->add_option("--lambda", lambda_s)->required();
  mag->add_option("--mu", mu_s)->required();
  mag->add_option("--basis", basis);

  SweepConfig cfg;
  std::string radius_s = "20";
  std::vector<std::string> groups;
  long long workers = -1;
  auto* ver = app.add_subcommand("verify", "property-sweep verification");
  ver->add_option("--seed", cfg.seed);
  ver->add_option("--samples", cfg.samples);
  ver->add_option("--radius", radius_s, "squared-radius bound, rational");
  ver->add_option("--groups", groups);
  ver->add_option("--workers", workers);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (ver->parsed()) {
      cfg.radius_sq = rat_from_string(radius_s);
      cfg.groups = groups.empty()
                       ? std::vector<std::string>{"SU(2)", "SU(3)", "Sp(2)",
                                                  "G2", "U(4)"}
                       : groups;
      if (workers > 0) {
        cfg.threads = (std::size_t)workers;
      } else {
        const char* env = std::getenv("COADJ_THREADS");
        cfg.threads = env ? std::max(1L, std::atol(env)) : 1;
      }
      json report = run_sweep(cfg);
      emit(report);
      return report["total_failures"].get<std::size_t>() == 0 ? 0 : 1;
    }

    RootDatum d = build_root_datum(spec);

    if (grp->parsed()) {
      json j;
      j["spec"] = d.spec_string();
      j["dim"] = d.dim();
      j["semisimple_rank"] = d.rank();
      j["central_rank"] = d.central_basis().size();
      json roots = json::array();
      for (const auto& a : d.positive_roots()) roots.push_back(a.to_string());
      j["positive_roots"] = roots;
      j["rho"] = rho(d).to_string();
      j["rho_sq"] = rat_to_string(d.inner_sq(rho(d)));
      j["num_faces"] = (std::uint64_t(1) << d.rank());
      j["sheets"] = sheet_table(d);
      emit(j);
    } else if (she->parsed()) {
      json j;
      j["spec"] = d.spec_string();
      j["sheets"] = sheet_table(d);
      emit(j);
    } else if (orb->parsed() || qsp->parsed()) {
      Orbit o = orbit_from_point(d, parse_weight(d, weight, basis));
      if (qsp->parsed()) {
        json j;
        j["dominant_rep"] = weight_json(d, o.rep);
        if (!is_admissible(d, o))
          throw MathError("orbit is not admissible");
        j["qspin"] = irrep_json(d, qspin(d, o));
        emit(j);
      } else {
        emit(orbit_record(d, o));
      }
    } else if (anc->parsed()) {
      Orbit o = orbit_from_point(d, parse_weight(d, weight, basis));
      auto sh = sheets(d);
      std::vector<std::size_t> sheet_of(std::size_t(1) << d.rank());
      for (std::size_t i = 0; i < sh.size(); ++i)
        for (const Face& f : sh[i].representative_faces)
          sheet_of[f.mask] = i;
      json list = json::array();
      json points = json::array();
      for (const Orbit& a : ancestors(d, o)) {
        std::size_t si = sheet_of[a.face.mask];
        if (sheet_idx >= 0 && si != (std::size_t)sheet_idx) continue;
        json e;
        e["rep"] = weight_json(d, a.rep);
        e["face_zero_set"] = a.face.zero_set;
        e["sheet"] = si;
        e["distance_sq"] = rat_to_string(orbit_distance_sq(d, a, o));
        list.push_back(std::move(e));
        points.push_back(a.rep.to_string());
      }
      json j;
      j["orbit"] = o.rep.to_string();
      j["ancestors"] = list;
      j["count"] = list.size();
      j["points"] = points;
      emit(j);
    } else if (ind->parsed()) {
      Face f = parse_face(d, face_s);
      auto comps = components(d, f);
      if (comp_idx < 0 || (std::size_t)comp_idx >= comps.size())
        throw SpecError("component index out of range (the face has " +
                        std::to_string(comps.size()) + " components)");
      const Component& c = comps[(std::size_t)comp_idx];
      WeightVec mu = parse_weight(d, weight, basis);
      SignedIrrep a = hol_induce(d, c, mu);
      SignedIrrep b = hol_induce_oracle(d, c, mu);
      json j;
      j["face_zero_set"] = f.zero_set;
      std::string sg;
      for (int s : c.signs) sg += s > 0 ? '+' : '-';
      j["component_signs"] = sg;
      j["rho_c"] = c.rho_c.to_string();
      j["result"] = irrep_json(d, a);
      j["oracle_match"] = (a == b);
      emit(j);
    } else if (mag->parsed()) {
      WeightVec l = parse_weight(d, lambda_s, basis);
      WeightVec m = parse_weight(d, mu_s, basis);
      MagicalReport r = magical_check(d, l, m);
      json j;
      j["lhs"] = rat_to_string(r.lhs);
      j["mid"] = rat_to_string(r.mid);
      j["rhs"] = rat_to_string(r.rhs);
      j["equality"] = r.equality;
      if (r.equality) {
        j["mu_dominant"] = r.mu_dominant;
        j["shift_witness"] = r.shift_witness;
        j["admissible_witness"] = r.admissible_witness;
      }
      emit(j);
    }
  } catch (const SpecError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const MathError& e) {
    json err;
    err["error"] = e.what();
    std::cout << err.dump() << "\n";
    return 3;
  }
  return 0;
}
