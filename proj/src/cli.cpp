#include "sphcert/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "sphcert/certificates.hpp"
#include "sphcert/growth.hpp"
#include "sphcert/harmonic_families.hpp"
#include "sphcert/homogeneous.hpp"
#include "sphcert/lie_algebra.hpp"
#include "sphcert/sphere_ops.hpp"

namespace sphcert::cli {

using Json = nlohmann::ordered_json;

namespace {

constexpr int kSchema = 1;
constexpr const char* kControlFamily = "control:nonsubharmonic";

Json point_json(const SpherePoint& p) {
  Json out = Json::array();
  for (const auto& x : p) out.push_back(to_string(x));
  return out;
}

Json verdict_json(const std::string& name, const Verdict& v) {
  Json out;
  out["name"] = name;
  out["holds"] = v.holds;
  if (!v.holds) out["witness"] = v.witness;
  return out;
}

HarmonicFunction family_or_usage(const std::string& descriptor, double rho) {
  try {
    return parse_family(descriptor, rho);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

// so<m> or so<m>-over-so<m-1>, and su2-group.
struct CaseSpec {
  bool su2 = false;
  int m = 0;
  bool quotient = false;
};

CaseSpec parse_case(const std::string& name) {
  if (name == "su2-group") return {true, 4, false};
  for (int m = 3; m <= 5; ++m) {
    const std::string base = "so" + std::to_string(m);
    if (name == base) return {false, m, false};
    if (name == base + "-over-so" + std::to_string(m - 1)) return {false, m, true};
  }
  throw UsageError("unknown case '" + name + "'");
}

}  // namespace

const std::vector<std::string>& identity_cases() {
  static const std::vector<std::string> cases = {"so3", "so4", "so5", "so3-over-so2", "so4-over-so3",
                                                 "so5-over-so4", "su2-group"};
  return cases;
}

unsigned workers_from_env(unsigned fallback) {
  const char* raw = std::getenv("SPHCERT_WORKERS");
  if (raw == nullptr) return fallback;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || v < 1 || v > 1024) return fallback;
  return static_cast<unsigned>(v);
}

CommandResult cmd_certify(const CertifyConfig& config) {
  require(config.power >= 0 && config.power <= 8, "power must be in [0, 8]");
  require(config.samples >= 0, "sample count must be nonnegative");
  require(config.workers >= 1, "workers must be at least 1");
  require(config.rho > 0.0 && config.rho < 3.14159, "rho must be in (0, pi)");
  const auto h = family_or_usage(config.family, config.rho);

  CertificateOptions options;
  options.sample_count = config.samples;
  options.seed = config.seed;
  options.workers = config.workers;
  const auto report = verify_certificate(h, config.power, options);

  CommandResult result;
  Json& j = result.report;
  j["schema"] = kSchema;
  j["command"] = "certify";
  j["config"] = {{"family", config.family}, {"power", config.power},     {"samples", config.samples},
                 {"seed", config.seed},     {"workers", config.workers}, {"rho", config.rho}};
  j["family"] = report.family;
  j["ambient_dim"] = report.ambient_dim;
  j["k"] = report.k;
  j["term_count"] = report.term_count;
  j["trivial"] = report.trivial;
  j["equality_verified"] = report.equality_verified;
  j["terms_harmonic"] = report.terms_harmonic;
  j["seed"] = report.seed;
  j["cap_radius"] = report.cap_radius;
  j["all_samples_nonnegative"] = report.all_samples_nonnegative();
  Json samples = Json::array();
  for (const auto& s : report.samples)
    samples.push_back({{"point", point_json(s.point)}, {"value", to_string(s.value)}, {"nonnegative", s.nonnegative}});
  j["samples"] = std::move(samples);
  j["passed"] = report.passed();
  if (config.timings) j["timings"] = {{"wall_time_ms", report.wall_time_ms}};
  result.exit_code = report.passed() ? kExitPass : kExitFail;
  return result;
}

CommandResult cmd_verify_identities(const IdentitiesConfig& config) {
  const CaseSpec spec = parse_case(config.case_name);
  require(config.form == "trace" || config.form == "killing" || config.form == "perturbed",
          "form must be trace, killing or perturbed");
  require(config.degree >= 0 && config.degree <= 6, "degree must be in [0, 6]");
  require(config.random >= 0, "random count must be nonnegative");

  const LieAlgebra g = spec.su2 ? su2_algebra() : so_algebra(spec.m);
  const Realization realization = spec.su2 ? su2_realization() : so_realization(spec.m);
  // Under "trace" both families use -1/2 tr(XY) in the defining representation;
  // for su(2) with e_a = -i sigma_a / 2 that is 1/4 I.
  const BilinearForm trace = spec.su2 ? su2_sphere_form() : default_form(g);
  std::string form_description = "-1/2 tr(XY)";
  BilinearForm form = trace;
  if (config.form == "killing") {
    form = killing_form(g).scaled(Rational(-1));
    form_description = "-tr(ad X ad Y)";
  } else if (config.form == "perturbed") {
    // Symmetric and still positive definite, but not ad-invariant.
    Matrix gram = trace.gram();
    const Rational bump = gram(0, 0) / 2;
    gram(0, 1) += bump;
    gram(1, 0) += bump;
    form = BilinearForm(gram);
    form_description = "-1/2 tr(XY) with B(e1, e2) raised by B(e1, e1) / 2";
  }

  const auto suite = identity_test_suite(realization.ambient_dim(), config.degree, config.random, config.seed);

  Json identities = Json::array();
  bool all = true;
  auto record = [&](const std::string& name, const Verdict& v) {
    all = all && v.holds;
    identities.push_back(verdict_json(name, v));
  };

  record("antisymmetry", check_antisymmetry(g));
  record("jacobi", check_jacobi(g));
  record("positive_definite", check_positive_definite(form));
  record("ad_invariance", check_ad_invariance(g, form));

  std::vector<LieVector> k_basis;
  if (spec.quotient) k_basis = so_stabilizer_basis(spec.m);
  ReductiveDecomposition dec;
  try {
    dec = orthogonal_decomposition(g, k_basis, form);
    record("reductive", check_reductive(g, dec, form));
    record("natural_reductivity", check_natural_reductivity(g, dec, form));
  } catch (const std::invalid_argument& e) {
    record("reductive", Verdict::fail(e.what()));
  }

  const auto omega = casimir_element(form);
  record("casimir_gram_consistency", check_gram_consistency(omega, form));
  record("realization_antihomomorphism", check_antihomomorphism(g, realization, suite));

  const ProjectedCasimir projected(omega, realization);
  const auto factor = casimir_laplacian_factor(projected, suite);
  if (config.form == "killing") {
    record("casimir_proportional_to_laplacian",
           factor ? Verdict::pass() : Verdict::fail("Omega+ is not a multiple of lap_S on the suite"));
  } else {
    record("casimir_equals_laplacian", check_casimir_equals_laplacian(projected, suite));
  }

  const ProjectedCasimir other(casimir_element(form, random_basis(g.dim(), config.seed + 1)), realization);
  record("casimir_basis_independence", check_same_operator(projected, other, suite));

  std::vector<FieldCombination> m_fields, g_fields;
  for (const auto& v : dec.m_basis) m_fields.push_back(realization.realize(v));
  for (std::size_t i = 0; i < g.dim(); ++i) g_fields.push_back(realization.realize(g.basis_vector(i)));
  if (!dec.m_basis.empty()) record("casimir_commutes_m", check_casimir_commutation(projected, m_fields, suite));
  record("casimir_commutes_g", check_casimir_commutation(projected, g_fields, suite));

  if (spec.su2) {
    record("group_sum_of_squares", verify_su2_group_case(suite));
    const auto x1 = SphereRationalFunction::coordinate(4, 1);
    const auto x3 = SphereRationalFunction::coordinate(4, 3);
    Verdict spot;
    if (!(su2_sum_of_squares(x1) == x1 * Rational(-3)))
      spot = Verdict::fail("sum V_a^2 (x1) = " + to_string(su2_sum_of_squares(x1)));
    else if (!(su2_sum_of_squares(x1 * x3) == x1 * x3 * Rational(-8)))
      spot = Verdict::fail("sum V_a^2 (x1 x3) = " + to_string(su2_sum_of_squares(x1 * x3)));
    record("group_spot_values", spot);
  }

  CommandResult result;
  Json& j = result.report;
  j["schema"] = kSchema;
  j["command"] = "verify-identities";
  j["config"] = {{"case", config.case_name},
                 {"form", config.form},
                 {"degree", config.degree},
                 {"random", config.random},
                 {"seed", config.seed}};
  j["algebra"] = g.name();
  j["algebra_dim"] = g.dim();
  j["subalgebra_dim"] = k_basis.size();
  j["sphere_dim"] = realization.ambient_dim() - 1;
  j["form"] = form_description;
  j["test_functions"] = suite.size();
  j["laplacian_factor"] = factor ? Json(to_string(*factor)) : Json(nullptr);
  j["identities"] = std::move(identities);
  j["passed"] = all;
  result.exit_code = all ? kExitPass : kExitFail;
  return result;
}

CommandResult cmd_growth(const GrowthConfig& config) {
  require(config.grid >= 3, "grid too small: need at least 3 radii");
  require(config.quad >= 8, "quadrature order must be at least 8");
  require(config.rmax > 0.0, "rmax must be positive");
  require(config.rho > 0.0 && config.rho < 3.14159, "rho must be in (0, pi)");

  const bool control = config.family == kControlFamily;
  SphereRationalFunction h(3);
  std::unique_ptr<CapDomain> cap;
  if (control) {
    h = nonsubharmonic_control();
    cap = std::make_unique<CapDomain>(control_domain(config.rho));
  } else {
    const auto fam = family_or_usage(config.family, config.rho);
    h = fam.value();
    cap = std::make_unique<CapDomain>(fam.domain());
  }

  SpherePoint center;
  if (config.center == "auto") {
    center = control ? control_center() : SpherePoint{Rational(0), Rational(0), Rational(-1)};
  } else if (config.center == "south") {
    center = SpherePoint{Rational(0), Rational(0), Rational(-1)};
  } else {
    std::stringstream ss(config.center);
    std::string part;
    try {
      while (std::getline(ss, part, ',')) center.push_back(parse_rational(part));
    } catch (const std::exception&) {
      throw UsageError("center must be 'south' or three rationals x,y,z");
    }
    require(center.size() == 3, "center must have three coordinates");
    Rational norm(0);
    for (const auto& x : center) norm += x * x;
    require(norm == 1, "center must lie exactly on the unit sphere");
  }

  GrowthOptions options;
  options.rmax = config.rmax;
  options.grid = config.grid;
  options.quad = config.quad;
  GrowthReport report;
  try {
    report = analyze_growth(h, *cap, center, config.family, options);
  } catch (const GrowthError& e) {
    throw UsageError(e.what());
  }

  CommandResult result;
  Json& j = result.report;
  j["schema"] = kSchema;
  j["command"] = "growth";
  j["config"] = {{"family", config.family}, {"center", config.center}, {"rmax", config.rmax},
                 {"grid", config.grid},     {"quad", config.quad},     {"rho", config.rho}};
  j["family"] = report.family;
  j["center"] = point_json(report.center);
  j["cap_radius"] = report.cap_radius;
  j["quad_order"] = report.quad_order;
  j["mean_at_center"] = report.mean_at_center;
  j["radii"] = report.radii;
  j["means"] = report.means;
  const auto& sd = report.second_derivative;
  j["verdicts"] = {{"monotone", report.monotone},
                   {"monotonicity_tolerance", options.monotonicity_tol},
                   {"max_decrease", report.max_decrease},
                   {"second_derivative",
                    {{"estimate", sd.estimate},
                     {"reference", sd.reference},
                     {"error", sd.error},
                     {"tolerance", options.second_derivative_tol},
                     {"ok", sd.ok}}}};
  const bool passed = report.monotone && sd.ok;
  j["passed"] = passed;
  result.csv = growth_csv(report);
  result.exit_code = passed ? kExitPass : kExitFail;
  return result;
}

std::string cmd_gen_harmonic(const GenHarmonicConfig& config) {
  require(config.m >= 2 && config.m <= 8, "m must be in [2, 8]");
  require(config.d >= 0 && config.d <= 16, "d must be in [0, 16]");
  const auto basis = generate_harmonic_basis(config.m, config.d);
  std::string out = "# m=" + std::to_string(config.m) + " d=" + std::to_string(config.d) +
                    " dim=" + std::to_string(basis.size()) + "\n";
  for (const auto& p : basis) out += to_string(p) + "\n";
  return out;
}

namespace {

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    out.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "' for writing");
  file << text;
  if (!file.flush()) throw UsageError("failed writing '" + path + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact sum-of-squares certificates and identity checks for spherical Laplacians"};
  app.require_subcommand(1);

  std::string out_path;
  CertifyConfig certify;
  certify.workers = workers_from_env(1);
  auto* c = app.add_subcommand("certify", "Certify lap_S^k(h^2) >= 0 for a harmonic family member");
  c->add_option("--family", certify.family, "Family descriptor, e.g. stereo:k=3:re")->required();
  c->add_option("--power,-k", certify.power, "Laplacian power k");
  c->add_option("--samples", certify.samples, "Number of exact cap sample points");
  c->add_option("--seed", certify.seed, "Sampler seed");
  c->add_option("--workers", certify.workers, "Worker threads (default: $SPHCERT_WORKERS or 1)");
  c->add_option("--rho", certify.rho, "Cap radius about the south pole");
  c->add_flag("--timings", certify.timings, "Include wall-clock time in the report");
  c->add_option("--out", out_path, "Report path (default: stdout)");

  IdentitiesConfig ident;
  auto* v = app.add_subcommand("verify-identities", "Check Lie-theoretic identities for a homogeneous sphere");
  v->add_option("--case", ident.case_name, "so3|so4|so5|so3-over-so2|so4-over-so3|so5-over-so4|su2-group")
      ->required();
  v->add_option("--form", ident.form, "trace|killing|perturbed");
  v->add_option("--degree", ident.degree, "Maximum harmonic degree in the test suite");
  v->add_option("--random", ident.random, "Random rational test functions");
  v->add_option("--seed", ident.seed, "Seed for random test functions and bases");
  v->add_option("--out", out_path, "Report path (default: stdout)");

  GrowthConfig growth;
  std::string csv_path;
  auto* gr = app.add_subcommand("growth", "Spherical means of h^2 on S^2");
  gr->add_option("--family", growth.family, "Family descriptor or control:nonsubharmonic")->required();
  gr->add_option("--center", growth.center, "auto, south, or x,y,z with rational coordinates");
  gr->add_option("--rmax", growth.rmax, "Largest radius");
  gr->add_option("--grid", growth.grid, "Number of radii");
  gr->add_option("--quad", growth.quad, "Trapezoid points per circle");
  gr->add_option("--rho", growth.rho, "Cap radius");
  gr->add_option("--out", out_path, "JSON report path (default: stdout)");
  gr->add_option("--csv", csv_path, "CSV output path for r,mean");

  GenHarmonicConfig gen;
  auto* h = app.add_subcommand("gen-harmonic", "List a basis of harmonic polynomials");
  h->add_option("m", gen.m, "Number of variables")->required();
  h->add_option("d", gen.d, "Degree")->required();
  h->add_option("--out", out_path, "Output path (default: stdout)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("sphcert");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    CommandResult result;
    if (c->parsed()) {
      result = cmd_certify(certify);
    } else if (v->parsed()) {
      result = cmd_verify_identities(ident);
    } else if (gr->parsed()) {
      result = cmd_growth(growth);
      if (!csv_path.empty()) write_text(csv_path, result.csv, out);
    } else {
      write_text(out_path, cmd_gen_harmonic(gen), out);
      return kExitPass;
    }
    write_text(out_path, result.report.dump(2) + "\n", out);
    return result.exit_code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace sphcert::cli
