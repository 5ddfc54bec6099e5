// cycleforge: exact enumerative checks for products of two n-cycles.
//
// Exit codes: 0 ok, 1 verification failure (a false verdict or two routes
// disagreeing), 2 invalid input.

#include <chrono>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <cycleforge/cycleforge.hpp>

namespace {

using namespace cycleforge;

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kInvalidInput = 2;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  }
};

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct PqArgs {
  std::string lambda_text;
  int n = -1;
  std::string method = "operator";
  bool oracle = false;
  bool json = false;
};

int run_pq(const PqArgs& args) {
  const Partition lambda = Partition::parse(args.lambda_text);
  if (args.n >= 0 && args.n != lambda.n())
    throw std::invalid_argument("--n " + std::to_string(args.n) + " does not match |lambda| = " +
                                std::to_string(lambda.n()));
  Timer timer;
  const CycleMethod method = parse_method(args.method);
  const Polynomial poly = method == CycleMethod::Oracle ? brute_p_lambda(lambda) : p_lambda(lambda, method).poly;

  std::optional<Polynomial> oracle_poly;
  if (args.oracle && method != CycleMethod::Oracle) oracle_poly = brute_p_lambda(lambda);
  const bool agree = !oracle_poly || *oracle_poly == poly;

  if (args.json) {
    Json j = poly_result_json(lambda.n(), lambda, args.method, poly);
    if (oracle_poly) {
      j["oracle_poly"] = poly_to_json(*oracle_poly);
      j["oracle_agrees"] = agree;
    }
    j["elapsed_ms"] = timer.ms();
    emit(j);
  } else {
    std::cout << "P_" << lambda.to_string() << "(q) = " << to_display_string(poly) << "\n";
    if (oracle_poly) {
      if (agree) {
        std::cout << "oracle: agrees\n";
      } else {
        std::cout << "oracle: " << to_display_string(*oracle_poly) << "\nroutes disagree\n";
      }
    }
  }
  return agree ? kOk : kVerificationFailure;
}

struct PlmArgs {
  std::string lambda_text;
  std::string mu_text;
  bool json = false;
};

int run_plm(const PlmArgs& args) {
  const Partition lambda = Partition::parse(args.lambda_text);
  const Partition mu = Partition::parse(args.mu_text);
  Timer timer;
  const Polynomial poly = brute_p_lambda_mu(lambda, mu);
  if (args.json) {
    Json j = poly_result_json(lambda.n(), lambda, "oracle", poly);
    j["mu"] = partition_to_json(mu);
    j["elapsed_ms"] = timer.ms();
    emit(j);
  } else {
    std::cout << "P_" << lambda.to_string() << "," << mu.to_string() << "(q) = " << to_display_string(poly) << "\n";
  }
  return kOk;
}

struct ProbArgs {
  int n = 0;
  int k = 2;
  std::string method = "closed";
  bool oracle = false;
  bool json = false;
};

int run_prob(const ProbArgs& args) {
  Timer timer;
  ProbabilityResult result = [&] {
    if (args.method == "closed") return pi_closed(args.n, args.k);
    if (args.method == "boccara") return pi_sum(args.n, args.k);
    if (args.method == "series") {
      if (args.k != 2) throw std::invalid_argument("--method series computes pi_n = pi_n^(2) only; use --k 2");
      return pi_series(args.n);
    }
    if (args.method == "brute") return make_probability(args.n, args.k, brute_pi(args.n, args.k), ProbRoute::Brute);
    throw std::invalid_argument("unknown method '" + args.method + "' (closed|boccara|series|brute)");
  }();

  std::optional<Rational> oracle_value;
  if (args.oracle && args.method != "brute") oracle_value = brute_pi(args.n, args.k);
  const bool agree = !oracle_value || *oracle_value == result.value;

  if (args.json) {
    Json j = probability_json(result);
    if (oracle_value) {
      j["oracle_value"] = oracle_value->str();
      j["oracle_agrees"] = agree;
    }
    j["elapsed_ms"] = timer.ms();
    emit(j);
  } else {
    std::cout << result.value.str() << "\n";
    if (oracle_value) {
      if (agree) std::cout << "oracle: agrees\n";
      else std::cout << "oracle: " << oracle_value->str() << "\nroutes disagree\n";
    }
  }
  return agree ? kOk : kVerificationFailure;
}

struct BoccaraArgs {
  std::string lambda_text;
  bool oracle = false;
  bool json = false;
};

int run_boccara(const BoccaraArgs& args) {
  const Partition lambda = Partition::parse(args.lambda_text);
  Timer timer;
  const Integer count = boccara_count(lambda);
  std::optional<Integer> oracle_count;
  if (args.oracle) oracle_count = brute_boccara_count(lambda);
  const bool agree = !oracle_count || *oracle_count == count;

  if (args.json) {
    Json j{{"n", lambda.n()},
           {"lambda", partition_to_json(lambda)},
           {"method", "integral"},
           {"value", count.str()}};
    if (oracle_count) {
      j["oracle_value"] = oracle_count->str();
      j["oracle_agrees"] = agree;
    }
    j["elapsed_ms"] = timer.ms();
    emit(j);
  } else {
    std::cout << count.str() << "\n";
    if (oracle_count) {
      if (agree) std::cout << "oracle: agrees\n";
      else std::cout << "oracle: " << oracle_count->str() << "\nroutes disagree\n";
    }
  }
  return agree ? kOk : kVerificationFailure;
}

struct RootsArgs {
  std::string lambda_text;
  std::string poly_text;
  std::string alpha_text = "0";
  bool json = false;
};

int run_roots(const RootsArgs& args) {
  if (args.lambda_text.empty() == args.poly_text.empty())
    throw std::invalid_argument("roots needs exactly one of --lambda or --poly");
  const Rational alpha = parse_rational(args.alpha_text);
  Timer timer;

  Polynomial poly;
  std::string label;
  if (!args.lambda_text.empty()) {
    const Partition lambda = Partition::parse(args.lambda_text);
    poly = p_lambda(lambda).poly;
    label = "P_" + lambda.to_string() + "(q)";
  } else {
    poly = Polynomial(parse_coeff_list(args.poly_text), Indet::q);
    label = "f(q)";
  }

  const RootLocationReport report = verify_real_part(poly, alpha);
  // Profile the even/odd part when the support has a single parity,
  // otherwise the raw coefficient sequence.
  bool profiled_r = true;
  CoeffProfile profile;
  try {
    profile = coeff_profile(r_part(poly));
  } catch (const std::invalid_argument&) {
    profiled_r = false;
    profile = coeff_profile(poly);
  }
  const bool pass = report.verdict && profile.all();

  if (args.json) {
    Json j = report_to_json(report);
    j["profile"] = Json{{"of", profiled_r ? "r-part" : "coefficients"},
                        {"log_concave", profile.log_concave},
                        {"no_internal_zeros", profile.no_internal_zeros},
                        {"unimodal", profile.unimodal}};
    j["elapsed_ms"] = timer.ms();
    emit(j);
  } else {
    std::cout << label << " = " << to_display_string(poly) << "\n";
    std::cout << "real part " << alpha.str() << ": " << (report.verdict ? "true" : "false") << "\n";
    if (!report.verdict) std::cout << "witness: " << report.witness << "\n";
    std::cout << (profiled_r ? "R profile" : "coefficient profile") << ": log-concave "
              << (profile.log_concave ? "true" : "false") << ", no internal zeros "
              << (profile.no_internal_zeros ? "true" : "false") << ", unimodal "
              << (profile.unimodal ? "true" : "false") << "\n";
  }
  return pass ? kOk : kVerificationFailure;
}

struct CnkArgs {
  int n = 0;
  bool json = false;
};

int run_cnk(const CnkArgs& args) {
  if (args.n < 1) throw std::invalid_argument("cnk needs --n >= 1");
  Timer timer;
  const CyclePolynomial result = p_ncycle(args.n);
  const std::vector<Integer> row = stirling_first_row(args.n + 1);
  const Integer binom = binomial(args.n + 1, 2);

  if (args.json) {
    Json rows = Json::array();
    for (int k = 1; k <= args.n + 1; ++k) {
      if ((args.n - k) % 2 != 0) continue;
      rows.push_back(Json{{"k", k},
                          {"stirling", row[static_cast<std::size_t>(k)].str()},
                          {"coeff", result.poly.coeff(k).str()}});
    }
    emit(Json{{"n", args.n},
              {"binomial", binom.str()},
              {"method", "stirling"},
              {"rows", rows},
              {"poly", poly_to_json(result.poly)},
              {"elapsed_ms", timer.ms()}});
  } else {
    std::cout << "P_" << args.n << "(q): coefficient of q^k is c(" << args.n + 1 << ",k)/" << binom.str()
              << " for k = " << args.n << " (mod 2)\n";
    std::cout << "  k   c(n+1,k)   coeff\n";
    for (int k = 1; k <= args.n + 1; ++k) {
      if ((args.n - k) % 2 != 0) continue;
      std::cout << "  " << k << "   " << row[static_cast<std::size_t>(k)].str() << "   "
                << result.poly.coeff(k).str() << "\n";
    }
    std::cout << "P_" << args.n << "(q) = " << to_display_string(result.poly) << "\n";
  }
  return kOk;
}

struct Theorem4Args {
  std::uint64_t seed = 42424242;
  int cases = 50;  // per branch
  bool json = false;
};

int run_theorem4(const Theorem4Args& args) {
  if (args.cases < 1) throw std::invalid_argument("theorem4 needs --cases >= 1");
  Timer timer;
  const std::vector<Theorem4Result> results = theorem4_sweep(args.seed, args.cases, args.cases);
  int failures = 0;
  Json failed = Json::array();
  for (const Theorem4Result& r : results) {
    if (r.verdict) continue;
    ++failures;
    failed.push_back(Json{{"g", poly_to_json(r.g)}, {"n", r.n}, {"witness", r.witness}});
    if (!args.json)
      std::cout << "FAIL g = " << to_display_string(r.g) << ", n = " << r.n << ": " << r.witness << "\n";
  }
  if (args.json) {
    emit(Json{{"seed", args.seed},
              {"cases", static_cast<int>(results.size())},
              {"failures", failed},
              {"pass", failures == 0},
              {"elapsed_ms", timer.ms()}});
  } else {
    std::cout << results.size() << " cases (seed " << args.seed << "): "
              << (failures == 0 ? "all pass" : std::to_string(failures) + " failures") << "\n";
  }
  return failures == 0 ? kOk : kVerificationFailure;
}

struct VerifyArgs {
  int max_n = 8;
  std::uint64_t seed = 42424242;
  bool json = false;
};

int run_verify(const VerifyArgs& args) {
  if (args.max_n < 1) throw std::invalid_argument("verify needs --max-n >= 1");
  Timer timer;
  const std::vector<CheckResult> results = run_verification({args.max_n, args.seed});
  const bool pass = all_passed(results);
  if (args.json) {
    Json checks = Json::array();
    for (const CheckResult& r : results)
      checks.push_back(Json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    emit(Json{{"max_n", args.max_n},
              {"seed", args.seed},
              {"checks", checks},
              {"pass", pass},
              {"elapsed_ms", timer.ms()}});
  } else {
    int passed = 0;
    for (const CheckResult& r : results) {
      std::cout << (r.passed ? "pass  " : "FAIL  ") << r.name
                << (r.detail.empty() ? "" : "  [" + r.detail + "]") << "\n";
      if (r.passed) ++passed;
    }
    std::cout << passed << "/" << results.size() << " checks passed (max-n " << args.max_n << ", "
              << timer.ms() << " ms)\n";
  }
  return pass ? kOk : kVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact enumerative checks for products of two n-cycles"};
  app.require_subcommand(1);

  PqArgs pq;
  CLI::App* pq_cmd = app.add_subcommand("pq", "cycle-count polynomial P_lambda(q)");
  pq_cmd->add_option("--lambda", pq.lambda_text, "partition, e.g. 3,3,2")->required();
  pq_cmd->add_option("--n", pq.n, "expected |lambda| (checked)");
  pq_cmd->add_option("--method", pq.method, "operator|gprime|hook|stirling|oracle (default operator)");
  pq_cmd->add_flag("--oracle", pq.oracle, "cross-check against the brute-force oracle");
  pq_cmd->add_flag("--json", pq.json, "JSON output");

  PlmArgs plm;
  CLI::App* plm_cmd = app.add_subcommand("plm", "two-class polynomial P_{lambda,mu}(q), oracle only");
  plm_cmd->add_option("--lambda", plm.lambda_text, "partition of n")->required();
  plm_cmd->add_option("--mu", plm.mu_text, "partition of the same n")->required();
  plm_cmd->add_flag("--json", plm.json, "JSON output");

  ProbArgs prob;
  CLI::App* prob_cmd = app.add_subcommand("prob", "probability that 1..k share a cycle of a product of two n-cycles");
  prob_cmd->add_option("--n", prob.n, "number of points")->required();
  prob_cmd->add_option("--k", prob.k, "marked points (default 2)");
  prob_cmd->add_option("--method", prob.method, "closed|boccara|series|brute (default closed)");
  prob_cmd->add_flag("--oracle", prob.oracle, "cross-check against the brute-force oracle");
  prob_cmd->add_flag("--json", prob.json, "JSON output");

  BoccaraArgs boccara;
  CLI::App* boccara_cmd = app.add_subcommand("boccara", "ordered pairs of n-cycles with a fixed product of type lambda");
  boccara_cmd->add_option("--lambda", boccara.lambda_text, "cycle type of the product")->required();
  boccara_cmd->add_flag("--oracle", boccara.oracle, "cross-check against the brute-force oracle");
  boccara_cmd->add_flag("--json", boccara.json, "JSON output");

  RootsArgs roots;
  CLI::App* roots_cmd = app.add_subcommand("roots", "root location and coefficient profile");
  roots_cmd->add_option("--lambda", roots.lambda_text, "analyze P_lambda(q)");
  roots_cmd->add_option("--poly", roots.poly_text, "explicit polynomial, ascending coefficients, e.g. 0,1,0,1");
  roots_cmd->add_option("--alpha", roots.alpha_text, "claimed common real part (default 0)");
  roots_cmd->add_flag("--json", roots.json, "JSON output");

  CnkArgs cnk;
  CLI::App* cnk_cmd = app.add_subcommand("cnk", "P_n(q) coefficients as c(n+1,k)/C(n+1,2)");
  cnk_cmd->add_option("--n", cnk.n, "cycle length")->required();
  cnk_cmd->add_flag("--json", cnk.json, "JSON output");

  Theorem4Args theorem4;
  CLI::App* theorem4_cmd = app.add_subcommand("theorem4", "randomized root-location sweep over the roots-of-unity family");
  theorem4_cmd->add_option("--seed", theorem4.seed, "RNG seed (default 42424242)");
  theorem4_cmd->add_option("--cases", theorem4.cases, "cases per degree branch (default 50)");
  theorem4_cmd->add_flag("--json", theorem4.json, "JSON output");

  VerifyArgs verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run every module's invariant sweep");
  verify_cmd->add_option("--max-n", verify.max_n, "cap for enumeration-backed sweeps (default 8)");
  verify_cmd->add_option("--seed", verify.seed, "RNG seed for the randomized sweeps");
  verify_cmd->add_flag("--json", verify.json, "JSON output");

  try {
    app.parse(argc, argv);
    if (*pq_cmd) return run_pq(pq);
    if (*plm_cmd) return run_plm(plm);
    if (*prob_cmd) return run_prob(prob);
    if (*boccara_cmd) return run_boccara(boccara);
    if (*roots_cmd) return run_roots(roots);
    if (*cnk_cmd) return run_cnk(cnk);
    if (*theorem4_cmd) return run_theorem4(theorem4);
    if (*verify_cmd) return run_verify(verify);
    return kInvalidInput;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidInput;
  } catch (const cap_exceeded& e) {
    std::cerr << "error: " << e.what() << " (CYCLEFORGE_MAX_N raises the cap)\n";
    return kInvalidInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kInvalidInput;
  } catch (const std::logic_error& e) {
    // A hard internal check tripped: routes disagree or a certified
    // invariant failed. Distinct from bad input.
    std::cerr << "verification failure: " << e.what() << "\n";
    return kVerificationFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}
