// Command-line front end. Exit codes: 0 success, 1 internal invariant
// failure, 2 argument or validation error.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "jetci/acceptance.hpp"
#include "jetci/bounds.hpp"
#include "jetci/chow.hpp"
#include "jetci/jet_tower.hpp"
#include "jetci/json_io.hpp"
#include "jetci/schur.hpp"
#include "jetci/vecfields.hpp"

using namespace jetci;

namespace {

struct RunConfig {
  std::string format = "text";
  std::string out_path;
  std::uint64_t seed = 1;

  int N = 0;
  int n = 0;
  std::optional<int> c;
  int a = 0;
  int twist = 0;
  std::vector<long> degrees;
  std::string method = "rough";
  std::optional<int> d_max;

  std::string family;
  int samples = 100;
  int index = 1;
  std::vector<int> alpha;
  std::vector<int> ell;
  std::string convention = "displayed";
  std::vector<long> lambda;

  int only = 0;
};

struct Output {
  std::string text;
  Json json;
  int exit_code = 0;
};

ModelParams model(const RunConfig& cfg) {
  if (cfg.c && *cfg.c != cfg.N - cfg.n) {
    throw std::invalid_argument("contradictory dimensions: n + c must equal N (got N=" + std::to_string(cfg.N) +
                                ", n=" + std::to_string(cfg.n) + ", c=" + std::to_string(*cfg.c) + ")");
  }
  return ModelParams(cfg.N, cfg.n);
}

Output cmd_segre(const RunConfig& cfg) {
  const ModelParams params = model(cfg);
  const auto classes = segre_cotangent(params, cfg.twist);
  Output out;
  out.json = segre_table_to_json(params, cfg.twist, classes);
  std::ostringstream text;
  text << "s(Omega_X(" << cfg.twist << ")) for N=" << params.N() << " n=" << params.n() << " c=" << params.c()
       << " (e_k: elementary symmetric in d1..d" << params.c() << ")\n";
  for (int j = 0; j <= params.n(); ++j) {
    const MultidegreePoly coeff = classes[static_cast<std::size_t>(j)].coeff(j);
    text << "  s" << j << " = (" << coeff.to_string() << ") h^" << j;
    if (coeff.is_multilinear()) {
      std::ostringstream sym;
      bool first = true;
      for (const auto& [k, v] : express_in_elementary(coeff)) {
        sym << (first ? (v < 0 ? "-" : "") : (v < 0 ? " - " : " + "));
        first = false;
        const BigInt mag = abs(v);
        if (k == 0) {
          sym << mag.get_str();
        } else {
          if (mag != 1) sym << mag.get_str() << "*";
          sym << "e" << k;
        }
      }
      text << "   [" << (first ? "0" : sym.str()) << "]";
    }
    text << "\n";
  }
  out.text = text.str();
  return out;
}

Output cmd_positivity(const RunConfig& cfg) {
  const ModelParams params = model(cfg);
  if (params.c() < params.n()) {
    throw std::domain_error("positivity requires c >= n (codimension at least the dimension); got c=" +
                            std::to_string(params.c()) + " < n=" + std::to_string(params.n()));
  }
  const SchurReport report = positivity_report(params, cfg.a);
  Output out;
  out.json = schur_report_to_json(report);
  std::ostringstream text;
  text << "Schur positivity of Omega_X(" << cfg.a << "), N=" << params.N() << " n=" << params.n() << "\n";
  for (const auto& r : report.records) {
    text << "  " << r.lambda.to_string() << ": dominant " << r.dominant.to_string()
         << (r.dominant_positive ? " (positive)" : " (NOT positive)") << ", threshold " << r.threshold.get_str()
         << " [" << r.threshold_method << "]\n";
  }
  text << "threshold D = " << report.threshold.get_str() << " (degrees >= " << ceil_rational(report.threshold).get_str()
       << ")\n";
  out.text = text.str();
  return out;
}

Output cmd_bound(const RunConfig& cfg) {
  model(cfg);
  const BoundReport report = bound_report(cfg.N, cfg.n, cfg.a, parse_bound_method(cfg.method), cfg.d_max);
  Output out;
  out.json = bound_report_to_json(report);
  std::ostringstream text;
  if (report.method == BoundMethod::scan && !report.found) {
    text << "no uniform positivity frontier found up to d=" << *report.scan_limit << "\n";
    out.exit_code = 1;
  } else {
    text << ceil_rational(report.gamma).get_str() << "\n";
    text << "gamma = " << report.gamma.get_str() << " (method " << to_string(report.method) << ")\n";
  }
  out.text = text.str();
  return out;
}

Output cmd_jet(const RunConfig& cfg) {
  const ModelParams params = model(cfg);
  if (!cfg.degrees.empty() && static_cast<int>(cfg.degrees.size()) != params.c()) {
    throw std::invalid_argument("--degrees needs exactly c=" + std::to_string(params.c()) + " entries");
  }
  std::vector<BigInt> degrees;
  for (long d : cfg.degrees) {
    if (d < 1) throw std::invalid_argument("degrees must be positive");
    degrees.emplace_back(d);
  }
  const JetTower tower(params);
  const MorseCertificate cert = tower.morse_certificate(cfg.a, degrees);
  Output out;
  out.json = certificate_to_json(cert);
  std::ostringstream text;
  text << "Morse difference (normalized by deg X), N=" << params.N() << " n=" << params.n() << " kappa="
       << params.kappa() << " a=" << cfg.a << ":\n  " << cert.difference.to_string() << "\n";
  if (cert.difference.is_multilinear()) {
    const auto coeffs = express_in_elementary(cert.difference);
    out.json["elementary"] = elementary_expansion_to_json(coeffs);
    text << "  = ";
    bool first = true;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
      text << (first ? "" : " + ") << "(" << it->second.get_str() << ")*e" << it->first;
      first = false;
    }
    if (first) text << "0";
    text << "\n";
  }
  if (cert.value) {
    text << "value " << cert.value->get_str() << (*cert.positive ? " positive" : " not positive") << "\n";
  }
  out.text = text.str();
  return out;
}

Exponents exponents_or(const std::vector<int>& given, Exponents fallback, int N, const char* what) {
  if (given.empty()) return fallback;
  if (static_cast<int>(given.size()) != N) {
    throw std::invalid_argument(std::string("--") + what + " needs exactly N entries");
  }
  return given;
}

Output cmd_vecfields(const RunConfig& cfg) {
  std::vector<int> degrees(cfg.degrees.begin(), cfg.degrees.end());
  if (degrees.empty()) throw std::invalid_argument("--degrees is required");
  const UniversalChart chart(cfg.N, degrees);
  const int N = chart.N();

  std::vector<VectorField> fields;
  std::optional<bool> identical;
  std::mt19937_64 rng(cfg.seed);
  if (cfg.family == "tj") {
    for (int j = 1; j <= N; ++j) fields.push_back(build_Tj(chart, j));
  } else if (cfg.family == "solved") {
    std::uniform_int_distribution<int> value(-5, 5);
    for (int i = 1; i <= chart.c(); ++i) {
      std::map<Exponents, Rational> free_data;
      for (const auto& alpha : chart.exponents(i)) {
        int w = 0;
        for (int e : alpha) w += e;
        if (w < 2 && (w == 0 || alpha[0] == 1)) continue;
        if (w > N) continue;
        free_data[alpha] = value(rng);
      }
      fields.push_back(build_low_coeff_field(chart, i, free_data));
    }
  } else if (cfg.family == "talpha") {
    Exponents top(static_cast<std::size_t>(N), 0);
    top[0] = chart.degrees().at(static_cast<std::size_t>(cfg.index - 1));
    Exponents e1(static_cast<std::size_t>(N), 0);
    e1[0] = 1;
    const ShiftConvention convention =
        cfg.convention == "split" ? ShiftConvention::split : ShiftConvention::displayed;
    if (cfg.convention != "split" && cfg.convention != "displayed") {
      throw std::invalid_argument("--convention must be displayed or split");
    }
    fields.push_back(build_T_alpha_ell(chart, cfg.index, exponents_or(cfg.alpha, top, N, "alpha"),
                                       exponents_or(cfg.ell, e1, N, "ell"), convention));
  } else if (cfg.family == "tlambda") {
    std::vector<std::vector<Rational>> lambda(static_cast<std::size_t>(N), std::vector<Rational>(static_cast<std::size_t>(N), 0));
    if (cfg.lambda.empty()) {
      for (int k = 0; k < N; ++k) lambda[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = 1;
    } else if (static_cast<int>(cfg.lambda.size()) != N * N) {
      throw std::invalid_argument("--lambda needs N*N entries in row-major order");
    } else {
      for (int k = 0; k < N * N; ++k) lambda[static_cast<std::size_t>(k / N)][static_cast<std::size_t>(k % N)] = cfg.lambda[static_cast<std::size_t>(k)];
    }
    fields.push_back(build_T_Lambda(chart, lambda));
  } else {
    throw std::invalid_argument("--family must be one of solved, tj, talpha, tlambda");
  }

  if (cfg.family == "tj" || cfg.family == "solved") {
    identical = true;
    for (const auto& f : fields) identical = *identical && identically_tangent(chart, f);
  }
  TangencyReport total;
  total.seed = cfg.seed;
  PoleOrders poles;
  for (std::size_t k = 0; k < fields.size(); ++k) {
    const auto report = point_tangency_check(chart, fields[k], cfg.samples, cfg.seed + k);
    total.samples += report.samples;
    total.checks += report.checks;
    total.resamples += report.resamples;
    total.nonzero.insert(total.nonzero.end(), report.nonzero.begin(), report.nonzero.end());
    poles.z_degree = std::max(poles.z_degree, fields[k].pole_orders().z_degree);
    poles.a_degree = std::max(poles.a_degree, fields[k].pole_orders().a_degree);
  }
  Output out;
  out.json = tangency_to_json(cfg.family, identical, total, poles);
  std::ostringstream text;
  text << "family " << cfg.family << ": " << fields.size() << " field(s), identical vanishing "
       << (identical ? (*identical ? "yes" : "NO") : "n/a") << ", " << total.nonzero.size() << " nonzero residual(s) in "
       << total.checks << " checks, pole orders z<=" << poles.z_degree << " a<=" << poles.a_degree << ", seed "
       << cfg.seed << "\n";
  out.text = text.str();
  return out;
}

Output cmd_selftest(const RunConfig& cfg) {
  const auto results = run_acceptance(cfg.seed, cfg.only);
  Output out;
  out.json = Json::array();
  std::ostringstream text;
  text << "seed " << cfg.seed << "\n";
  for (const auto& r : results) {
    text << format_result(r) << "\n";
    out.json.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail},
                        {"seconds", r.seconds}, {"limit_seconds", r.limit_seconds}});
    if (!r.passed) out.exit_code = 1;
  }
  out.text = text.str();
  return out;
}

void emit(const RunConfig& cfg, const Output& out) {
  const std::string body = cfg.format == "json" ? out.json.dump(2) + "\n" : out.text;
  if (cfg.out_path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream file(cfg.out_path);
  if (!file) throw std::runtime_error("cannot write " + cfg.out_path);
  file << body;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact intersection numbers, positivity thresholds and vector fields for complete intersections"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", cfg.out_path, "Write output to this file");
  app.add_option("--seed", cfg.seed, "Seed for randomized checks");

  auto add_dims = [&cfg](CLI::App* sub) {
    sub->add_option("--N", cfg.N, "Ambient dimension")->required();
    sub->add_option("--n", cfg.n, "Dimension of X")->required();
    sub->add_option("--c", cfg.c, "Codimension (optional, must equal N - n)");
  };

  auto* segre = app.add_subcommand("segre", "Segre classes of the twisted cotangent bundle");
  add_dims(segre);
  segre->add_option("--twist", cfg.twist, "Twist m in Omega_X(m)");

  auto* positivity = app.add_subcommand("positivity", "Schur positivity report for Omega_X(-a)");
  add_dims(positivity);
  positivity->add_option("--a", cfg.a, "Twist a >= 0")->check(CLI::NonNegativeNumber);

  auto* bound = app.add_subcommand("bound", "Degree threshold");
  add_dims(bound);
  bound->add_option("--a", cfg.a, "Twist a >= 0")->check(CLI::NonNegativeNumber);
  bound->add_option("--method", cfg.method, "rough, dim2 or scan")->check(CLI::IsMember({"rough", "dim2", "scan"}));
  bound->add_option("--d-max", cfg.d_max, "Upper end of the scan window");

  auto* jet = app.add_subcommand("jet", "Morse certificate on the jet tower");
  add_dims(jet);
  jet->add_option("--a", cfg.a, "Twist a >= 0")->check(CLI::NonNegativeNumber);
  jet->add_option("--degrees", cfg.degrees, "Evaluate at d1,...,dc")->delimiter(',');

  auto* vec = app.add_subcommand("vecfields", "Vector fields on the universal chart");
  auto* verify = vec->add_subcommand("verify", "Check tangency of a vector-field family");
  vec->require_subcommand(1);
  verify->add_option("--N", cfg.N, "Ambient dimension")->required();
  verify->add_option("--degrees", cfg.degrees, "d1,...,dc")->delimiter(',')->required();
  verify->add_option("--family", cfg.family, "solved, tj, talpha or tlambda")->required();
  verify->add_option("--samples", cfg.samples, "Sample points per field")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", cfg.seed, "Seed for the sampled points");
  verify->add_option("--index", cfg.index, "Equation index i (talpha)");
  verify->add_option("--alpha", cfg.alpha, "Exponent alpha (talpha)")->delimiter(',');
  verify->add_option("--ell", cfg.ell, "Exponent ell (talpha)")->delimiter(',');
  verify->add_option("--convention", cfg.convention, "displayed or split (talpha)");
  verify->add_option("--lambda", cfg.lambda, "N*N matrix, row-major (tlambda)")->delimiter(',');

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance checks");
  selftest->add_option("--only", cfg.only, "Run a single criterion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Output out;
    if (*segre) out = cmd_segre(cfg);
    else if (*positivity) out = cmd_positivity(cfg);
    else if (*bound) out = cmd_bound(cfg);
    else if (*jet) out = cmd_jet(cfg);
    else if (*vec) out = cmd_vecfields(cfg);
    else out = cmd_selftest(cfg);
    emit(cfg, out);
    return out.exit_code;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
