#include "cli.hpp"

#include "modr/complex.hpp"
#include "modr/deform.hpp"
#include "modr/doubling.hpp"
#include "modr/errors.hpp"
#include "modr/graded.hpp"
#include "modr/io.hpp"
#include "modr/rmatrix.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace modr::cli {

namespace {

using io::Json;

struct Options {
  std::string algebra, map, rhat, rhat1, rhat2, f, g, x;
  std::vector<std::string> candidates;
  std::string catalog_name;
  std::size_t n = 0;
  std::size_t max_degree = 3;
  bool representatives = false;
  std::string weight = "0", t1 = "0", t2 = "0";
  std::string algebra_out, map_out;
  bool json = false;
  bool force = false;
};

std::string sha256_hex(const std::string &bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i)
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return hex.str();
}

Json conventions() {
  return Json{
      {"rationals", "integers or \"p/q\" strings in lowest terms"},
      {"map_matrix", "row-major; column j is the image of basis vector j"},
      {"cochain_degree", "number of arguments k; cohomological degree is k + 1; C^0 = 0"},
      {"cochain_tuples", "strictly increasing basis indices in lexicographic order"},
      {"representation", "rho(x)y = [Rx,y] - R[x,y]"},
      {"induced_bracket", "[x,y]_R = [Rx,y] + [x,Ry]"},
      {"coboundary", "df(x_0..x_k) = sum_i (-1)^i rho(x_i) f(..^x_i..) + "
                     "sum_{i<j} (-1)^{i+j} f([x_i,x_j]_R, ..^x_i..^x_j..)"},
      {"graded_bracket", "shuffle sums; [[f,g]] = -(-1)^{pq} [[g,f]]; d f = (-1)^k [[R,f]] for k arguments"},
      {"mcybe", "S(R)(x,y) = [Rx,Ry] - R([Rx,y] + [x,Ry]) + [x,y]"},
      {"rota_baxter", "[Bx,By] = B([Bx,y] + [x,By] + w[x,y]); R = Id + 2B"},
  };
}

class Session {
public:
  explicit Session(const Options &o) : opts(o) {}

  const Options &opts;
  Json inputs = Json::array();

  Json load(const std::string &role, const std::string &path) {
    if (path.empty())
      throw InputError("missing required option for the " + role + " file");
    std::ifstream in(path, std::ios::binary);
    if (!in)
      throw InputError(path + ": cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string bytes = buf.str();
    inputs.push_back(Json{{"role", role}, {"path", path}, {"sha256", sha256_hex(bytes)}});
    try {
      return Json::parse(bytes);
    } catch (const nlohmann::json::parse_error &e) {
      throw InputError(path + ": " + e.what());
    }
  }

  LieAlgebra algebra(JacobiCheck check = JacobiCheck::Eager) {
    if (!algebra_)
      algebra_ = guarded(opts.algebra, [&] {
        return io::algebra_from_json(load("algebra", opts.algebra), check);
      });
    return *algebra_;
  }

  Endo endo(const std::string &role, const std::string &path) {
    const LieAlgebra g = algebra();
    return guarded(path, [&] { return io::endo_from_json(load(role, path), g); });
  }

  Endo r() { return endo("map", opts.map); }

  /// A cochain file, or a map file read as a one-argument cochain.
  Cochain cochain(const std::string &role, const std::string &path) {
    const LieAlgebra g = algebra();
    return guarded(path, [&] {
      const Json j = load(role, path);
      if (j.is_object() && j.contains("matrix"))
        return Cochain::from_endo(io::endo_from_json(j, g));
      return io::cochain_from_json(j, g);
    });
  }

  Vector vector(const std::string &text, const std::string &flag) {
    const LieAlgebra g = algebra();
    return parse_vector(g, text, flag);
  }

  static Vector parse_vector(const LieAlgebra &g, const std::string &text,
                             const std::string &flag) {
    const auto &names = g.basis_names();
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == text)
        return Vector::basis(g.dim(), i);
    std::vector<Rational> coeffs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        coeffs.push_back(parse_rational(item));
      } catch (const InputError &e) {
        throw InputError(flag + "[" + std::to_string(coeffs.size()) + "]: " + e.what());
      }
    }
    if (coeffs.size() != g.dim())
      throw InputError(flag + ": expected a basis name or " + std::to_string(g.dim()) +
                       " comma-separated rationals, got '" + text + "'");
    return Vector(std::move(coeffs));
  }

  static Rational rational(const std::string &text, const std::string &flag) {
    try {
      return parse_rational(text);
    } catch (const InputError &e) {
      throw InputError(flag + ": " + e.what());
    }
  }
private:
  std::optional<LieAlgebra> algebra_;

  template <class F> static std::invoke_result_t<F> guarded(const std::string &path, F &&fn) {
    try {
      return fn();
    } catch (const JacobiViolation &) {
      throw;
    } catch (const InputError &e) {
      const std::string msg = e.what();
      if (msg.rfind(path + ":", 0) == 0)
        throw;
      throw InputError(path + ": " + msg);
    }
  }
};

struct Report {
  std::string command;
  Json verdicts = Json::object();
  Json witnesses = Json::object();
  Json results = Json::object();
  bool passed = true;
};

Json pair_json(const LieAlgebra &g, const BasisPair &p) {
  const auto &names = g.basis_names();
  return Json{{"indices", {p.first, p.second}}, {"names", {names[p.first], names[p.second]}}};
}

Json triple_json(const LieAlgebra &g, const Triple &t) {
  const auto &names = g.basis_names();
  return Json{{"indices", {t[0], t[1], t[2]}},
              {"names", {names[t[0]], names[t[1]], names[t[2]]}}};
}

Json value_at(const Cochain &c, std::initializer_list<std::size_t> tuple) {
  const std::vector<std::size_t> t(tuple);
  return io::vector_to_json(c.value_at(t));
}

using Command = std::function<void(Session &, Report &)>;

void check_lie(Session &s, Report &rep) {
  const LieAlgebra g = s.algebra(JacobiCheck::Deferred);
  const JacobiResult j = verify_jacobi(g);
  rep.verdicts["jacobi"] = j.holds;
  if (j.counterexample) {
    rep.witnesses["triple"] = triple_json(g, *j.counterexample);
    rep.witnesses["jacobiator"] = io::vector_to_json(j.jacobiator);
  }
  rep.passed = j.holds;
}

void check_mcybe(Session &s, Report &rep) {
  const Endo r = s.r();
  const DefectReport d = mcybe_defect(r);
  rep.verdicts["mcybe"] = d.is_zero;
  if (d.worst_pair) {
    rep.witnesses["pair"] = pair_json(r.algebra(), *d.worst_pair);
    rep.witnesses["defect"] = value_at(d.defect, {d.worst_pair->first, d.worst_pair->second});
  }
  rep.passed = d.is_zero;
}

void check_rota_baxter(Session &s, Report &rep) {
  const Endo b = s.r();
  const Rational w = Session::rational(s.opts.weight, "--weight");
  const RotaBaxterVerdict v = is_rota_baxter(b, w);
  rep.results["weight"] = io::rational_to_json(w);
  rep.verdicts["rota_baxter"] = v.holds;
  if (v.failing_pair)
    rep.witnesses["pair"] = pair_json(b.algebra(), *v.failing_pair);
  rep.passed = v.holds;
}

void cohomology_cmd(Session &s, Report &rep) {
  const Endo r = s.r();
  const CohomologyReport c = cohomology(r, {s.opts.max_degree, s.opts.representatives});
  Json degrees = Json::array();
  for (const auto &d : c.degrees) {
    Json entry{{"degree", d.degree},
               {"cochains", d.dim_cochains},
               {"cocycles", d.dim_cocycles},
               {"coboundaries", d.dim_coboundaries},
               {"cohomology", d.dim_cohomology}};
    if (s.opts.representatives) {
      Json reps = Json::array();
      for (const auto &z : d.cohomology_representatives)
        reps.push_back(io::cochain_to_json(z));
      entry["representatives"] = std::move(reps);
    }
    degrees.push_back(std::move(entry));
  }
  rep.results["degrees"] = std::move(degrees);
}

void induced_cmd(Session &s, Report &rep) {
  const Endo r = s.r();
  if (!s.opts.force) {
    rep.results["algebra"] = io::algebra_to_json(induced_bracket(r));
    return;
  }
  const ForcedBracket fb = induced_bracket_forced(r);
  rep.verdicts["jacobi"] = fb.jacobi.holds;
  if (fb.jacobi.counterexample) {
    rep.witnesses["triple"] = triple_json(fb.algebra, *fb.jacobi.counterexample);
    rep.witnesses["jacobiator"] = io::vector_to_json(fb.jacobi.jacobiator);
  }
  rep.results["algebra"] = io::algebra_to_json(fb.algebra);
  rep.passed = fb.jacobi.holds;
}

void graded_bracket_cmd(Session &s, Report &rep) {
  const Cochain f = s.cochain("f", s.opts.f);
  const Cochain g = s.cochain("g", s.opts.g);
  rep.results["bracket"] = io::cochain_to_json(graded_bracket(f, g));
}

void mc_check(Session &s, Report &rep) {
  const Endo r = s.r();
  if (s.opts.rhat.empty()) {
    const bool mc = satisfies_mc_modified(r);
    rep.verdicts["modified_maurer_cartan"] = mc;
    rep.verdicts["mcybe"] = mcybe_defect(r).is_zero;
    rep.verdicts["weight0_maurer_cartan"] = is_maurer_cartan_weight0(r);
    rep.passed = mc;
    return;
  }
  const Endo rp = s.endo("rhat", s.opts.rhat);
  const McDeformationVerdict v = mc_deformation_check(r, rp);
  rep.verdicts["maurer_cartan"] = v.maurer_cartan;
  rep.verdicts["defect_zero"] = v.defect_zero;
  rep.passed = v.maurer_cartan;
}

void kuranishi_cmd(Session &s, Report &rep) {
  const Endo r = s.r();
  const Endo f = s.endo("rhat", s.opts.rhat);
  const KuranishiReport k = kuranishi(r, f);
  rep.verdicts["is_cocycle"] = k.is_cocycle;
  rep.verdicts["vanishes_in_h3"] = k.vanishes_in_h3;
  rep.results["ff"] = io::cochain_to_json(k.ff);
  if (k.witness)
    rep.witnesses["preimage"] = io::cochain_to_json(*k.witness);
  rep.passed = k.is_cocycle && k.vanishes_in_h3;
}

void deform_check(Session &s, Report &rep) {
  const Endo r = s.r();
  const Endo rhat = s.endo("rhat", s.opts.rhat);
  const DeformationVerdict v = check_linear_deformation(r, rhat);
  rep.verdicts["cocycle"] = v.cocycle_ok;
  rep.verdicts["weight0_rota_baxter"] = v.weight0_ok;
  rep.verdicts["valid"] = v.valid;
  rep.verdicts["polynomial_zero"] = v.polynomial_zero;
  if (v.failing_pair) {
    const auto [i, j] = *v.failing_pair;
    rep.witnesses["pair"] = pair_json(r.algebra(), *v.failing_pair);
    rep.witnesses["coefficient_t1"] = value_at(v.defect_polynomial[1], {i, j});
    rep.witnesses["coefficient_t2"] = value_at(v.defect_polynomial[2], {i, j});
  }
  rep.passed = v.valid;
}

Json equivalence_json(const LieAlgebra &g, const EquivalenceVerdict &e, Report &rep) {
  Json v{{"homomorphism", e.homomorphism}, {"intertwines", e.intertwines}};
  if (e.homomorphism_witness)
    rep.witnesses["homomorphism_pair"] = pair_json(g, *e.homomorphism_witness);
  if (e.intertwine_witness)
    rep.witnesses["intertwine"] = Json{{"power", e.intertwine_witness->first},
                                       {"column", e.intertwine_witness->second},
                                       {"name", g.basis_names()[e.intertwine_witness->second]}};
  return v;
}

void deform_trivial(Session &s, Report &rep) {
  const Endo r = s.r();
  const Vector x = s.vector(s.opts.x, "--x");
  const TrivialDeformation t = trivial_deformation(r, x);
  rep.results["rhat"] = io::endo_to_json(t.rhat);
  rep.verdicts["valid"] = t.verdict.valid;
  rep.verdicts["equivalence"] = equivalence_json(r.algebra(), t.equivalence, rep);
  rep.passed = t.verdict.valid && t.equivalence.equivalent();
}

void deform_equivalence(Session &s, Report &rep) {
  const Endo r = s.r();
  const Endo r1 = s.endo("rhat1", s.opts.rhat1);
  const Endo r2 = s.endo("rhat2", s.opts.rhat2);
  const Vector x = s.vector(s.opts.x, "--x");
  const EquivalenceVerdict e = check_equivalence(r, r1, r2, x);
  rep.verdicts["equivalence"] = equivalence_json(r.algebra(), e, rep);
  rep.verdicts["equivalent"] = e.equivalent();
  if (e.equivalent()) {
    const auto pre = coboundary_preimage(r, Cochain::from_endo(r1 - r2));
    rep.verdicts["difference_is_coboundary"] = pre.has_value();
    if (pre)
      rep.witnesses["preimage"] = io::vector_to_json(pre->to_vector());
  }
  rep.passed = e.equivalent();
}

Json nijenhuis_json(const LieAlgebra &g, const NijenhuisVerdict &v) {
  Json j{{"eq1", v.eq1_ok}, {"eq2", v.eq2_ok}, {"nijenhuis_element", v.is_nijenhuis_element}};
  if (v.eq1_witness)
    j["eq1_pair"] = pair_json(g, *v.eq1_witness);
  if (v.eq2_witness)
    j["eq2_basis"] = g.basis_names()[*v.eq2_witness];
  return j;
}

void nijenhuis_check_cmd(Session &s, Report &rep) {
  const Endo r = s.r();
  const Vector x = s.vector(s.opts.x, "--x");
  const NijenhuisVerdict v = nijenhuis_check(r, x);
  rep.verdicts["eq1"] = v.eq1_ok;
  rep.verdicts["eq2"] = v.eq2_ok;
  rep.verdicts["nijenhuis_element"] = v.is_nijenhuis_element;
  if (v.eq1_witness)
    rep.witnesses["eq1_pair"] = pair_json(r.algebra(), *v.eq1_witness);
  if (v.eq2_witness)
    rep.witnesses["eq2_basis"] = r.algebra().basis_names()[*v.eq2_witness];
  rep.passed = v.is_nijenhuis_element;
}

void nijenhuis_scan_cmd(Session &s, Report &rep) {
  const Endo r = s.r();
  std::vector<Vector> candidates;
  for (const auto &c : s.opts.candidates)
    candidates.push_back(s.vector(c, "--candidate"));
  if (candidates.empty())
    candidates = default_nijenhuis_candidates(r.dim());
  Json found = Json::array();
  Json all = Json::array();
  for (const auto &[x, v] : nijenhuis_scan(r, candidates)) {
    Json entry = nijenhuis_json(r.algebra(), v);
    entry["x"] = io::vector_to_json(x);
    if (v.is_nijenhuis_element)
      found.push_back(io::vector_to_json(x));
    all.push_back(std::move(entry));
  }
  rep.results["candidates"] = std::move(all);
  rep.results["nijenhuis_elements"] = std::move(found);
}

Json subspace_json(const LieAlgebra &g, const SubspaceCert &c) {
  Json basis = Json::array();
  for (const auto &v : c.basis)
    basis.push_back(io::vector_to_json(v));
  Json j{{"is_subalgebra", c.is_subalgebra}, {"basis", std::move(basis)}};
  if (c.failing_pair)
    j["failing_pair"] = Json{{"indices", {c.failing_pair->first, c.failing_pair->second}},
                             {"bracket", io::vector_to_json(g.bracket(c.basis[c.failing_pair->first],
                                                                      c.basis[c.failing_pair->second]))}};
  return j;
}

void double_graph(Session &s, Report &rep) {
  const Endo r = s.r();
  const GraphCert g = graph_complement(r);
  rep.verdicts["graph_subalgebra"] = g.graph.is_subalgebra;
  rep.verdicts["mcybe"] = g.mcybe;
  rep.verdicts["agree"] = g.agree();
  rep.results["graph"] = subspace_json(g.doubled.underlying, g.graph);
  rep.results["doubled_basis"] = g.doubled.underlying.basis_names();
  if (g.graph.failing_pair)
    rep.witnesses["pair"] = pair_json(r.algebra(), *g.graph.failing_pair);
  rep.passed = g.graph.is_subalgebra && g.agree();
}

void double_complement(Session &s, Report &rep) {
  const Endo r = s.r();
  const ComplementCert c = complement_certificate(r);
  const LieAlgebra d = build_double(r.algebra()).underlying;
  rep.verdicts["diagonal_subalgebra"] = c.diagonal.is_subalgebra;
  rep.verdicts["graph_subalgebra"] = c.graph.is_subalgebra;
  rep.verdicts["direct_sum"] = c.direct_sum();
  rep.results["stacked_rank"] = c.stacked_rank;
  rep.results["total_dim"] = c.total_dim;
  rep.results["diagonal"] = subspace_json(d, c.diagonal);
  rep.results["graph"] = subspace_json(d, c.graph);
  rep.passed = c.passes();
}

void involutive_cmd(Session &s, Report &rep) {
  const Endo r = s.r();
  const InvolutiveReport v = involutive_analyze(r);
  rep.verdicts["mcybe"] = v.mcybe;
  rep.verdicts["nijenhuis"] = v.nijenhuis;
  rep.verdicts["eigenspaces_subalgebras"] = v.eigenspaces_subalgebras;
  rep.verdicts["product_structure"] = v.product_structure;
  rep.verdicts["consistent"] = v.consistent();
  Json plus = Json::array(), minus = Json::array();
  for (const auto &b : v.plus_basis)
    plus.push_back(io::vector_to_json(b));
  for (const auto &b : v.minus_basis)
    minus.push_back(io::vector_to_json(b));
  rep.results["plus_eigenspace"] = std::move(plus);
  rep.results["minus_eigenspace"] = std::move(minus);
  rep.passed = v.mcybe && v.nijenhuis && v.eigenspaces_subalgebras && v.product_structure;
}

void compatible_cmd(Session &s, Report &rep) {
  const Endo r = s.r();
  const Endo rhat = s.endo("rhat", s.opts.rhat);
  const Rational t1 = Session::rational(s.opts.t1, "--t1");
  const Rational t2 = Session::rational(s.opts.t2, "--t2");
  const CompatibleVerdict v = compatible_bracket_check(r, rhat, t1, t2);
  rep.results["t1"] = io::rational_to_json(t1);
  rep.results["t2"] = io::rational_to_json(t2);
  rep.verdicts["jacobi"] = v.jacobi_holds;
  rep.verdicts["equals_twice_midpoint"] = v.equals_twice_midpoint;
  if (v.jacobi_witness)
    rep.witnesses["triple"] = triple_json(r.algebra(), *v.jacobi_witness);
  rep.passed = v.jacobi_holds && v.equals_twice_midpoint;
}

void write_file(const std::string &path, const Json &j) {
  std::ofstream out(path);
  if (!out)
    throw InputError(path + ": cannot write file");
  out << j.dump(2) << "\n";
}

void catalog_cmd(Session &s, Report &rep) {
  const CatalogEntry c = catalog(s.opts.catalog_name, s.opts.n);
  const Json a = io::algebra_to_json(c.algebra);
  const Json m = io::endo_to_json(c.r_matrix);
  if (!s.opts.algebra_out.empty())
    write_file(s.opts.algebra_out, a);
  if (!s.opts.map_out.empty())
    write_file(s.opts.map_out, m);
  rep.results["algebra"] = a;
  rep.results["map"] = m;
}

std::string verdict_text(const Json &v) {
  if (v.is_boolean())
    return v.get<bool>() ? "yes" : "no";
  return v.dump();
}

void render(std::ostream &out, const Session &s, const Report &rep, bool json) {
  if (json) {
    Json j;
    j["command"] = rep.command;
    j["inputs"] = s.inputs;
    j["passed"] = rep.passed;
    j["verdicts"] = rep.verdicts;
    j["witnesses"] = rep.witnesses;
    j["results"] = rep.results;
    j["conventions"] = conventions();
    out << j.dump(2) << "\n";
    return;
  }
  out << "command: " << rep.command << "\n";
  for (const auto &in : s.inputs)
    out << "input " << in["role"].get<std::string>() << ": " << in["path"].get<std::string>()
        << " (sha256 " << in["sha256"].get<std::string>() << ")\n";
  for (const auto &[k, v] : rep.verdicts.items())
    out << "verdict " << k << ": " << verdict_text(v) << "\n";
  for (const auto &[k, v] : rep.witnesses.items())
    out << "witness " << k << ": " << v.dump() << "\n";
  for (const auto &[k, v] : rep.results.items())
    out << k << ": " << v.dump() << "\n";
  out << "status: " << (rep.passed ? "passed" : "failed") << "\n";
}

struct Leaf {
  CLI::App *app;
  std::string name;
  Command action;
};

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  Options opts;
  CLI::App app{"Workbench for modified r-matrices on Lie algebras", "modr"};
  app.require_subcommand(1);
  std::vector<Leaf> leaves;

  auto needs = [&](CLI::App *sub, const std::string &flags) {
    sub->add_flag("--json", opts.json, "Emit the JSON report");
    if (flags.find('a') != std::string::npos)
      sub->add_option("--algebra", opts.algebra, "Algebra JSON file")->required();
    if (flags.find('m') != std::string::npos)
      sub->add_option("--map", opts.map, "Operator JSON file")->required();
    if (flags.find('h') != std::string::npos)
      sub->add_option("--rhat", opts.rhat, "Deformation direction JSON file")->required();
    if (flags.find('x') != std::string::npos)
      sub->add_option("--x", opts.x, "Element: a basis name or comma-separated rationals")
          ->required();
  };
  auto leaf = [&](CLI::App *parent, const std::string &name, const std::string &help,
                  const std::string &flags, Command action) {
    CLI::App *sub = parent->add_subcommand(name, help);
    needs(sub, flags);
    const std::string full = parent == &app ? name : parent->get_name() + " " + name;
    leaves.push_back({sub, full, std::move(action)});
    return sub;
  };
  auto group = [&](const std::string &name, const std::string &help) {
    CLI::App *sub = app.add_subcommand(name, help);
    sub->require_subcommand(1);
    return sub;
  };

  CLI::App *check = group("check", "Structural checks");
  leaf(check, "lie", "Jacobi identity of an algebra", "a", check_lie);
  leaf(check, "mcybe", "Modified classical Yang-Baxter equation", "am", check_mcybe);
  leaf(check, "rota-baxter", "Rota-Baxter identity of a given weight", "am", check_rota_baxter)
      ->add_option("--weight", opts.weight, "Weight (rational)");

  CLI::App *coh = leaf(&app, "cohomology", "Cohomology dimensions", "am", cohomology_cmd);
  coh->add_option("--max-degree", opts.max_degree, "Highest degree computed");
  coh->add_flag("--representatives", opts.representatives, "Include cohomology representatives");

  leaf(&app, "induced", "Induced bracket [x,y]_R", "am", induced_cmd)
      ->add_flag("--force", opts.force, "Build the bracket even if R fails the equation");

  CLI::App *gb = leaf(&app, "graded-bracket", "Graded bracket of two cochains", "a",
                      graded_bracket_cmd);
  gb->add_option("--f", opts.f, "First cochain or map file")->required();
  gb->add_option("--g", opts.g, "Second cochain or map file")->required();

  leaf(&app, "mc-check", "Maurer-Cartan characterizations", "am", mc_check)
      ->add_option("--rhat", opts.rhat, "Perturbation R' to test");
  leaf(&app, "kuranishi", "Obstruction class of a 2-cocycle", "amh", kuranishi_cmd);

  CLI::App *deform = group("deform", "Linear deformations");
  leaf(deform, "check", "Validity of R + t Rhat", "amh", deform_check);
  leaf(deform, "trivial", "Trivial deformation from a Nijenhuis element", "amx", deform_trivial);
  CLI::App *eq = leaf(deform, "equivalence", "Equivalence via Id + t ad_x", "amx",
                      deform_equivalence);
  eq->add_option("--rhat1", opts.rhat1, "First direction")->required();
  eq->add_option("--rhat2", opts.rhat2, "Second direction")->required();

  CLI::App *nij = group("nijenhuis", "Nijenhuis elements");
  leaf(nij, "check", "Test one element", "amx", nijenhuis_check_cmd);
  leaf(nij, "scan", "Test candidate elements", "am", nijenhuis_scan_cmd)
      ->add_option("--candidate", opts.candidates, "Candidate element (repeatable)");

  CLI::App *dbl = group("double", "The doubled algebra g + g");
  leaf(dbl, "graph", "Graph complement criterion", "am", double_graph);
  leaf(dbl, "complement", "Complement certificate", "am", double_complement);

  CLI::App *inv = group("involutive", "Involutive operators");
  leaf(inv, "analyze", "Four equivalent verdicts", "am", involutive_cmd);

  CLI::App *cat = leaf(&app, "catalog", "Emit a catalog algebra and its r-matrix", "", catalog_cmd);
  cat->add_option("name", opts.catalog_name, "sl, sl-borel, abelian, heisenberg or affine")
      ->required();
  cat->add_option("--n", opts.n, "Size parameter");
  cat->add_option("--algebra-out", opts.algebra_out, "Write the algebra JSON here");
  cat->add_option("--map-out", opts.map_out, "Write the map JSON here");

  CLI::App *comp = leaf(&app, "compatible", "Compatible brackets from a deformation", "amh",
                        compatible_cmd);
  comp->add_option("--t1", opts.t1, "First parameter (rational)");
  comp->add_option("--t2", opts.t2, "Second parameter (rational)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPassed : kInputError;
  }

  const Leaf *chosen = nullptr;
  for (const auto &l : leaves)
    if (l.app->parsed())
      chosen = &l;
  if (!chosen) {
    err << "usage error: no command given\n";
    return kInputError;
  }

  Session session(opts);
  Report rep;
  rep.command = chosen->name;
  try {
    chosen->action(session, rep);
  } catch (const InputError &e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const PreconditionError &e) {
    rep.passed = false;
    rep.verdicts["precondition"] = false;
    rep.results["error"] = e.what();
    render(out, session, rep, opts.json);
    err << "precondition failed: " << e.what() << "\n";
    return kFailed;
  }
  render(out, session, rep, opts.json);
  return rep.passed ? kPassed : kFailed;
}

} // namespace modr::cli
