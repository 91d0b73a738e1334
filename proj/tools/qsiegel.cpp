// qsiegel: certificates, kernels and Bergman estimates for quasi-symmetric
// Siegel domains described by a JSON spec file.
//
// Exit status: 0 ok / consistent, 1 input error, 2 certifiers disagree.

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsiegel/catalog.hpp"
#include "qsiegel/certifier.hpp"
#include "qsiegel/cone_integrals.hpp"
#include "qsiegel/error.hpp"
#include "qsiegel/kernel.hpp"
#include "qsiegel/report.hpp"
#include "qsiegel/sampling.hpp"
#include "qsiegel/spec_file.hpp"

namespace {

using namespace qsiegel;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInconsistent = 2;

struct Globals {
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> samples;
  std::string out;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

double parse_real(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw Error(ErrorCode::SpecError, "cannot parse number '" + s + "'");
  }
  return v;
}

// a, bi, a+bi, a-bi, i, -i
Complex parse_complex(const std::string& raw) {
  const std::string s = trim(raw);
  if (s.empty()) throw Error(ErrorCode::SpecError, "empty number");
  if (s.back() != 'i') return parse_real(s);
  const std::string body = s.substr(0, s.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re = split == std::string::npos ? "" : body.substr(0, split);
  std::string im = split == std::string::npos ? body : body.substr(split);
  double imv = 0.0;
  if (im.empty() || im == "+") {
    imv = 1.0;
  } else if (im == "-") {
    imv = -1.0;
  } else {
    imv = parse_real(im);
  }
  return {re.empty() ? 0.0 : parse_real(re), imv};
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

Vec parse_real_list(const std::string& s) {
  const auto parts = split_commas(s);
  Vec v(static_cast<Eigen::Index>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i) v(static_cast<Eigen::Index>(i)) = parse_real(trim(parts[i]));
  return v;
}

// Either a JSON point or N + n comma-separated complex numbers (z then v).
SiegelPoint parse_point(const std::string& s, const JordanRepresentation& rep) {
  if (!trim(s).empty() && trim(s).front() == '{') {
    SiegelPoint p;
    try {
      p = point_from_json(nlohmann::json::parse(s));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::SpecError, e.what());
    }
    if (p.z.size() != rep.algebra().dim() || p.v.size() != rep.n()) {
      throw Error(ErrorCode::SpecError, "point has wrong dimensions");
    }
    return p;
  }
  const auto parts = split_commas(s);
  const int n = rep.algebra().dim(), nv = rep.n();
  if (static_cast<int>(parts.size()) != n + nv) {
    throw Error(ErrorCode::SpecError, "a point needs " + std::to_string(n + nv) +
                                          " comma-separated complex numbers");
  }
  SiegelPoint p{CVec(n), CVec(nv)};
  for (int i = 0; i < n; ++i) p.z(i) = parse_complex(parts[i]);
  for (int i = 0; i < nv; ++i) p.v(i) = parse_complex(parts[n + i]);
  return p;
}

void emit(const ojson& j, const Globals& g) {
  const std::string text = j.dump(2) + "\n";
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw Error(ErrorCode::SpecError, "cannot write '" + g.out + "'");
  f << text;
}

Tolerances tolerances(const DomainSpec& spec, const Globals& g) {
  Tolerances t = spec.tol;
  if (g.tol) t.sub = *g.tol;
  return t;
}

std::uint64_t seed_of(const DomainSpec& spec, const Globals& g) {
  return g.seed.value_or(spec.seed.value_or(0));
}

int cmd_check(const std::string& path, const Globals& g) {
  const DomainSpec spec = load_spec(path);
  const auto rep = spec.representation();
  CertifyConfig cfg;
  cfg.tol = tolerances(spec, g);
  cfg.seed = seed_of(spec, g);
  cfg.coisotropic_samples = static_cast<int>(g.samples.value_or(spec.samples.value_or(20)));
  cfg.orthocomplement_samples = cfg.coisotropic_samples;
  cfg.scale_samples = 20000;
  const CertifyReport r = certify_all(rep, spec.w(), cfg);
  emit(certify_report_json(r), g);
  return r.consistent ? kExitOk : kExitInconsistent;
}

int cmd_kernels(const std::string& path, const std::string& x_arg,
                const std::string& chi_arg, int points, const Globals& g) {
  const DomainSpec spec = load_spec(path);
  const auto rep = spec.representation();
  const Tolerances tol = tolerances(spec, g);
  const Vec x = parse_real_list(x_arg);
  const Vec chi = chi_arg.empty() ? Vec() : parse_real_list(chi_arg);
  const KernelParams kp = build_kernel_params(rep, spec.w(), x, chi, {}, tol);
  const std::uint64_t seed = seed_of(spec, g);
  std::vector<SiegelPoint> pts;
  for (int i = 0; i < points; ++i) {
    CounterRng rng(seed, static_cast<std::uint64_t>(i), 0x9a);
    pts.push_back(random_domain_point(rep, rng));
  }
  const GramReport gr = gram_psd_report(kp, pts, tol);
  ojson j;
  j["x"] = real_vector_json(x);
  j["k"] = kp.k;
  j["chi"] = real_vector_json(kp.chi);
  j["seed"] = seed;
  j["gram"] = gram_report_json(gr);
  emit(j, g);
  return kExitOk;
}

int cmd_bergman(const std::string& path, const std::string& p1s,
                const std::string& p2s, int threads, const Globals& g) {
  const DomainSpec spec = load_spec(path);
  const auto rep = spec.representation();
  const SiegelPoint p1 = parse_point(p1s, rep);
  const SiegelPoint p2 = parse_point(p2s, rep);
  McOptions mc;
  mc.samples = g.samples.value_or(spec.samples.value_or(1000000));
  mc.seed = seed_of(spec, g);
  mc.threads = threads;
  const BergmanEstimate b = bergman_kernel(rep, p1, p2, mc, tolerances(spec, g));
  ojson j;
  j["p1"] = point_json(p1);
  j["p2"] = point_json(p2);
  j["seed"] = mc.seed;
  j["kernel"] = bergman_json(b);
  emit(j, g);
  return kExitOk;
}

int cmd_orbit(const std::string& path, const std::string& x_arg, const Globals& g) {
  const DomainSpec spec = load_spec(path);
  const auto rep = spec.representation();
  const Vec x = parse_real_list(x_arg);
  rep.algebra().check_element(x);
  const Certificate c = check_orbit_multiplicity(rep, spec.w(), x, tolerances(spec, g));
  ojson j;
  j["x"] = real_vector_json(x);
  j["multiplicity_one"] = c.verdict;
  j["certificate"] = certificate_json(c);
  emit(j, g);
  return kExitOk;
}

int cmd_catalog(const std::string& export_name, const std::string& variant,
                const Globals& g) {
  if (export_name.empty()) {
    auto list = ojson::array();
    for (const auto& e : catalog_entries()) {
      ojson item;
      item["name"] = e.name;
      item["description"] = e.description;
      auto vs = ojson::array();
      for (const auto& v : e.variants) {
        vs.push_back(ojson{{"name", v.name}, {"expected_mf", v.expected_mf}, {"note", v.note}});
      }
      item["variants"] = vs;
      list.push_back(item);
    }
    emit(list, g);
    return kExitOk;
  }
  const CatalogEntry& e = catalog_get(export_name);
  const WVariant& v = variant.empty() ? e.variants.front() : e.variant(variant);
  emit(spec_to_json(spec_from_catalog(e, v)), g);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certificates, kernels and Bergman estimates for quasi-symmetric Siegel domains"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--tol", g.tol, "subspace inclusion/equality tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "random seed (overrides the spec)");
  app.add_option("--samples", g.samples, "sample count (overrides the spec)")->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "write the JSON report to this file");

  std::string spec_path, x_arg, chi_arg, p1, p2, export_name, variant;
  int points = 20, threads = 1;

  auto* check = app.add_subcommand("check", "run all certifiers and cross-check them");
  check->add_option("spec", spec_path, "domain spec JSON")->required();

  auto* kernels = app.add_subcommand("kernels", "Gram positivity of an extremal kernel");
  kernels->add_option("spec", spec_path, "domain spec JSON")->required();
  kernels->add_option("--x", x_arg, "x coordinates, comma separated")->required();
  kernels->add_option("--chi", chi_arg, "chi on the basis of S, comma separated");
  kernels->add_option("--points", points, "number of Gram points")->check(CLI::PositiveNumber);

  auto* bergman = app.add_subcommand("bergman", "numerical Bergman kernel");
  bergman->add_option("spec", spec_path, "domain spec JSON")->required();
  bergman->add_option("--p1", p1, "first point: z..., v... as complex numbers")->required();
  bergman->add_option("--p2", p2, "second point")->required();
  bergman->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  auto* orbit = app.add_subcommand("orbit", "multiplicity-one test at one x");
  orbit->add_option("spec", spec_path, "domain spec JSON")->required();
  orbit->add_option("--x", x_arg, "x coordinates, comma separated")->required();

  auto* catalog = app.add_subcommand("catalog", "list catalog entries or export one as a spec");
  catalog->add_option("--export", export_name, "entry to export");
  catalog->add_option("--variant", variant, "W variant of the exported entry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*check) return cmd_check(spec_path, g);
    if (*kernels) return cmd_kernels(spec_path, x_arg, chi_arg, points, g);
    if (*bergman) return cmd_bergman(spec_path, p1, p2, threads, g);
    if (*orbit) return cmd_orbit(spec_path, x_arg, g);
    if (*catalog) return cmd_catalog(export_name, variant, g);
  } catch (const Error& e) {
    std::cerr << "qsiegel: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "qsiegel: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
