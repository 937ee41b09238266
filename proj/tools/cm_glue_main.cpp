#include <CLI11.hpp>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <numbers>

#include "cmglue/arrangement.hpp"
#include "cmglue/gluing.hpp"
#include "cmglue/hyperbolic.hpp"
#include "cmglue/involutions.hpp"
#include "cmglue/quintic_moduli.hpp"
#include "cmglue/verify.hpp"

using json = nlohmann::json;
using namespace cmglue;

namespace {

constexpr const char* kSchema = "cm-glue-report/1";
constexpr const char* kTool = "cm-glue 1.0.0";

// 12 significant digits, rendered as a string for byte-stable output
std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

json cyc_to_json(const CycElt& x) {
  json coeffs = json::array();
  for (const auto& c : x.coeffs) coeffs.push_back(c.str());
  return json{{"field", x.field ? x.field->name() : "Q"}, {"coeffs", coeffs}};
}

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const FieldDescriptor& parse_field(const std::string& s) {
  if (s.rfind("cyclotomic:", 0) == 0)
    return FieldDescriptor::cyclotomic(std::stol(s.substr(11)));
  if (s.rfind("quadratic:", 0) == 0)
    return FieldDescriptor::imaginary_quadratic(std::stol(s.substr(10)));
  throw InputError("unknown field spec: " + s);
}

CycElt entry_to_cyc(const FieldDescriptor& f, const json& e) {
  if (e.is_number_integer()) return CycElt::from_rat(f, Rat(e.get<long>()));
  if (e.is_string()) return CycElt::from_rat(f, Rat(e.get<std::string>()));
  if (e.is_array()) {
    std::vector<Rat> c(f.degree, Rat(0));
    for (size_t i = 0; i < e.size() && i < c.size(); ++i)
      c[i] = e[i].is_string() ? Rat(e[i].get<std::string>()) : Rat(e[i].get<long>());
    return CycElt(f, std::move(c));
  }
  throw InputError("matrix entry must be integer, \"p/q\", or coefficient array");
}

std::complex<double> parse_point_token(std::string s) {
  double sign = 1.0;
  if (!s.empty() && s[0] == '-') { sign = -1.0; s = s.substr(1); }
  const double lam = (std::sqrt(5.0) - 1.0) / 2.0;
  if (s == "i") return {0.0, sign};
  if (s == "omega") return sign * std::complex<double>(-0.5, std::sqrt(3.0) / 2.0);
  if (s == "omega2") return sign * std::complex<double>(-0.5, -std::sqrt(3.0) / 2.0);
  if (s == "lambda") return {sign * lam, 0.0};
  if (s == "lambda+1") return {sign * (lam + 1.0), 0.0};
  try {
    size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw InputError("trailing characters in point token: " + s);
    return {sign * v, 0.0};
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw InputError("bad point token: " + s);
  }
}

PPoint parse_point(const json& e) {
  if (e.is_string()) {
    if (e.get<std::string>() == "inf") return PPoint::infinity();
    return PPoint::affine(parse_point_token(e.get<std::string>()));
  }
  if (e.is_array() && e.size() == 2)
    return PPoint(parse_point_token(e[0].get<std::string>()),
                  parse_point_token(e[1].get<std::string>()));
  throw InputError("point must be \"token\" or [\"z\",\"w\"]");
}

struct Emitter {
  std::string golden_dir = "golden";
  bool update_golden = false;

  // returns the process exit code
  int emit(const std::string& command, json inputs, json results, bool pass,
           const std::string& golden_name = "") {
    std::string status = pass ? "pass" : "fail";
    if (!golden_name.empty()) {
      std::string path = golden_dir + "/" + golden_name + ".json";
      if (update_golden) {
        json g{{"audit", {{"command", command}, {"note", "regenerated via --update-golden"}}},
               {"results", results},
               {"schema", kSchema}};
        std::ofstream out(path);
        if (!out) throw InputError("cannot write golden file " + path);
        out << g.dump(2) << "\n";
      } else if (std::ifstream in(path); in) {
        json g = json::parse(in);
        if (g["results"] != results) {
          status = "fail";
          pass = false;
          results["golden_mismatch"] = path;
        }
      }
    }
    json report{{"command", command},
                {"inputs", std::move(inputs)},
                {"results", std::move(results)},
                {"status", status},
                {"versions", {{"schema", kSchema}, {"tool", kTool}}}};
    std::cout << report.dump(2) << "\n";
    return pass ? 0 : 1;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for hermitian lattices, anti-unitary "
               "involutions, gluing, and triangle groups"};
  app.require_subcommand(1);
  Emitter em;
  unsigned long seed = 0;
  app.add_option("--seed", seed, "seed for randomized suites");
  app.add_option("--golden-dir", em.golden_dir, "directory with golden files");
  app.add_flag("--update-golden", em.update_golden, "regenerate golden files");

  auto* cmd_classify = app.add_subcommand("classify-involution",
                                          "classify an anti-unitary involution");
  std::string lattice_name = "quintic-std", matrix_json;
  cmd_classify->add_option("--lattice", lattice_name, "lattice preset");
  cmd_classify->add_option("--matrix", matrix_json, "matrix A of x -> A sigma(x), JSON rows");

  auto* cmd_fixed = app.add_subcommand("fixed-form", "fixed form of a reference involution");
  int ref_class = 0;
  cmd_fixed->add_option("--lattice", lattice_name, "lattice preset");
  cmd_fixed->add_option("--class", ref_class, "reference class index 0..2");

  auto* cmd_roots = app.add_subcommand("roots", "enumerate short roots and check Condition (*)");
  int bound = 1;
  bool check_orth = false;
  cmd_roots->add_option("--bound", bound, "coefficient height bound");
  cmd_roots->add_flag("--check-orthogonality", check_orth, "verify Condition (*)");

  auto* cmd_local = app.add_subcommand("local-model", "gluing local model counts");
  int ln = 2, lm = 10, la = 1, lb = 0;
  bool lverify = false;
  cmd_local->add_option("--n", ln, "complex dimension");
  cmd_local->add_option("--m", lm, "torsion order (even)");
  cmd_local->add_option("--a", la, "conjugate node pairs");
  cmd_local->add_option("--b", lb, "real nodes");
  cmd_local->add_flag("--verify", lverify, "run the equivalence-relation brute force");

  auto* cmd_stab = app.add_subcommand("stabilizer", "stabilizer of a real 5-point configuration");
  std::string points_json;
  cmd_stab->add_option("--points", points_json, "JSON list of projective points")->required();

  auto* cmd_quintic = app.add_subcommand("quintic", "roots, stability, and stabilizer of a"
                                                    " real binary quintic");
  std::vector<double> qcoeffs;
  cmd_quintic->add_option("--coeffs", qcoeffs, "a5,a4,a3,a2,a1,a0")
      ->delimiter(',')->expected(6)->required();

  auto* cmd_tri = app.add_subcommand("triangle", "hyperbolic triangle group");
  std::vector<int> orders{3, 5, 10};
  bool tri_verify = false, tri_arith = false;
  cmd_tri->add_option("--orders", orders, "p,q,r")->delimiter(',')->expected(3);
  cmd_tri->add_flag("--verify", tri_verify, "verify the presentation relations");
  cmd_tri->add_flag("--arithmetic-check", tri_arith, "run the Takeuchi criterion");

  auto* cmd_diff = app.add_subcommand("different", "different ideal generator");
  std::string field_spec = "cyclotomic:5";
  cmd_diff->add_option("--field", field_spec, "cyclotomic:n or quadratic:disc");

  auto* cmd_verify = app.add_subcommand("verify-all", "run the full acceptance suite");
  int vbound = 2;
  cmd_verify->add_option("--bound", vbound, "root enumeration bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << app.help() << "\n" << e.what() << "\n";
    return 2;
  }

  try {
    if (*cmd_classify) {
      if (lattice_name != "quintic-std") throw InputError("unsupported lattice preset");
      auto L = HermitianLattice::quintic_std();
      CMat A = CMat::Zero(3, 3);
      for (int i = 0; i < 3; ++i) A(i, i) = CycElt(1);
      json mj = json::array();
      if (!matrix_json.empty()) {
        mj = json::parse(matrix_json);
        if (!mj.is_array() || mj.size() != 3) throw InputError("matrix must have 3 rows");
        for (int i = 0; i < 3; ++i) {
          if (!mj[i].is_array() || mj[i].size() != 3) throw InputError("rows must have 3 entries");
          for (int j = 0; j < 3; ++j) A(i, j) = entry_to_cyc(*L.field, mj[i][j]);
        }
      }
      AntiUnitaryInvolution alpha(L, std::move(A));  // throws InputError-equivalent on bad input
      auto inv = invariant(alpha);
      auto F = fixed_lattice(alpha);
      json gram = json::array();
      for (int i = 0; i < 3; ++i) {
        json row = json::array();
        for (int j = 0; j < 3; ++j) row.push_back(F.gram(i, j).str());
        gram.push_back(row);
      }
      json results{{"class", classify(alpha)},
                   {"invariant",
                    {{"dim_fixed", inv.dim_fixed},
                     {"det_class", inv.det_class == InvolutionInvariant::DetClass::square
                                       ? "square"
                                       : inv.det_class == InvolutionInvariant::DetClass::nonsquare
                                             ? "nonsquare"
                                             : "zero"}}},
                   {"fixed_gram", gram}};
      return em.emit("classify-involution",
                     json{{"lattice", lattice_name}, {"matrix", mj}}, results, true);
    }

    if (*cmd_fixed) {
      if (lattice_name != "quintic-std") throw InputError("unsupported lattice preset");
      if (ref_class < 0 || ref_class > 2) throw InputError("--class must be 0, 1, or 2");
      auto refs = reference_involutions(HermitianLattice::quintic_std());
      auto F = fixed_lattice(refs[ref_class]);
      json gram = json::array(), basis = json::array();
      for (int i = 0; i < 3; ++i) {
        json row = json::array();
        for (int j = 0; j < 3; ++j) row.push_back(F.gram(i, j).str());
        gram.push_back(row);
      }
      for (const auto& b : F.basis) {
        json v = json::array();
        for (int i = 0; i < 3; ++i) v.push_back(cyc_to_json(b(i)));
        basis.push_back(v);
      }
      bool sat = saturation_check(refs[ref_class]);
      json results{{"fixed_gram", gram}, {"basis", basis}, {"saturated", sat}};
      return em.emit("fixed-form", json{{"lattice", lattice_name}, {"class", ref_class}},
                     results, sat, "fixed-form-" + std::to_string(ref_class));
    }

    if (*cmd_roots) {
      if (bound < 0) throw InputError("--bound must be nonnegative");
      auto L = HermitianLattice::quintic_std();
      auto roots = enumerate_short_roots(L, bound);
      json results{{"count", roots.size()}};
      bool pass = true;
      if (check_orth) {
        auto star = verify_condition_star(L, roots);
        json rel;
        for (const auto& [r, n] : star.counts) rel[relation_name(r)] = n;
        json viol = json::array();
        for (const auto& [i, j] : star.violations) viol.push_back(json::array({i, j}));
        results["relations"] = rel;
        results["violations"] = viol;
        pass = star.pass;
      }
      return em.emit("roots",
                     json{{"bound", bound}, {"check_orthogonality", check_orth}}, results,
                     pass, "roots-bound" + std::to_string(bound) + (check_orth ? "-star" : ""));
    }

    if (*cmd_local) {
      LocalModel model(ln, lm, la, lb);  // validates
      auto invs = involutions_at_center(model);
      auto comp = components_mod_Bf(model);
      json dims;
      for (const auto& [d, n] : comp.intersection_dims) dims[std::to_string(d)] = n;
      json results{{"involutions", invs.size()},
                   {"components", comp.copies},
                   {"intersection_dims", dims}};
      bool pass = true;
      if (lverify) {
        auto eq = equivalence_relation_bruteforce(model);
        results["eqrel"] = eq.pass ? "pass" : "fail";
        results["labels"] = eq.labels;
        pass = eq.pass;
      }
      return em.emit("local-model",
                     json{{"n", ln}, {"m", lm}, {"a", la}, {"b", lb}, {"verify", lverify}},
                     results, pass);
    }

    if (*cmd_stab) {
      json pj = json::parse(points_json);
      if (!pj.is_array() || pj.size() != 5) throw InputError("--points needs 5 points");
      std::vector<PPoint> pts;
      for (const auto& e : pj) pts.push_back(parse_point(e));
      auto cfg = make_config(std::move(pts));
      auto rep = stabilizer(cfg);
      json gens = json::array();
      for (const auto& g : rep.generators) {
        json m = json::array();
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j)
            m.push_back(json::array({num(g.m(i, j).real()), num(g.m(i, j).imag())}));
        gens.push_back(m);
      }
      json results{{"group", group_name(rep.group_type)},
                   {"order", rep.order},
                   {"normal_form", rep.matched_normal_form},
                   {"generators", gens},
                   {"stability", stability_name(stability(cfg))}};
      return em.emit("stabilizer", json{{"points", pj}}, results, true);
    }

    if (*cmd_quintic) {
      std::array<double, 6> coeffs;
      std::copy(qcoeffs.begin(), qcoeffs.end(), coeffs.begin());
      auto cfg = roots_of_quintic(coeffs);
      json pts = json::array();
      for (const auto& p : cfg.points)
        pts.push_back(json::array({json::array({num(p.z.real()), num(p.z.imag())}),
                                   json::array({num(p.w.real()), num(p.w.imag())})}));
      Stability st = stability(cfg);
      json results{{"roots", pts}, {"stability", stability_name(st)}};
      if (st == Stability::smooth) results["component_index"] = component_index(cfg);
      if (st != Stability::strictly_unstable) {
        auto rep = stabilizer(cfg);
        results["stabilizer"] = {{"group", group_name(rep.group_type)}, {"order", rep.order}};
      }
      return em.emit("quintic", json{{"coeffs", qcoeffs}}, results, true);
    }

    if (*cmd_tri) {
      TriangleGroupSpec spec;
      try {
        spec = build_triangle(orders[0], orders[1], orders[2]);
      } catch (const std::exception& e) {
        throw InputError(e.what());  // degenerate orders are an input error
      }
      json results{{"angles", json::array({num(std::numbers::pi / spec.p),
                                           num(std::numbers::pi / spec.q),
                                           num(std::numbers::pi / spec.r)})},
                   {"area", num(area(spec))},
                   {"area_numeric", num(area_numeric(spec))}};
      bool pass = true;
      if (tri_verify) {
        bool rel = verify_presentation(spec);
        results["relations"] = rel ? "pass" : "fail";
        pass = pass && rel;
      }
      if (tri_arith) {
        auto t = takeuchi_is_arithmetic(spec.p, spec.q, spec.r);
        results["arithmetic"] = t.arithmetic;
        results["takeuchi_worst_conjugate"] = num(t.worst_conjugate);
      }
      std::string slug = "triangle-" + std::to_string(orders[0]) + "-" +
                         std::to_string(orders[1]) + "-" + std::to_string(orders[2]) +
                         (tri_verify ? "-verify" : "") + (tri_arith ? "-arith" : "");
      return em.emit("triangle",
                     json{{"orders", orders}, {"verify", tri_verify},
                          {"arithmetic_check", tri_arith}},
                     results, pass, slug);
    }

    if (*cmd_diff) {
      const FieldDescriptor& f = parse_field(field_spec);
      CycElt eta = different_generator(f);
      json results{{"field", f.name()},
                   {"generator", cyc_to_json(eta)},
                   {"norm", norm_Q(eta).str()}};
      return em.emit("different", json{{"field", field_spec}}, results, true);
    }

    if (*cmd_verify) {
      auto rep = verify_all(vbound, seed);
      json items = json::array();
      for (const auto& item : rep.items)
        items.push_back(json{{"criterion", item.criterion},
                             {"name", item.name},
                             {"pass", item.pass},
                             {"detail", item.detail}});
      json results{{"criteria", items}, {"pass", rep.pass}};
      return em.emit("verify-all", json{{"bound", vbound}, {"seed", seed}}, results, rep.pass,
                     "verify-all-bound" + std::to_string(vbound));
    }
  } catch (const InputError& e) {
    std::cerr << app.help() << "\n" << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
