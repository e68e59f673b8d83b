// Command-line surface for the oscillator-transform library: build canonical
// DFT eigenbases, run the discrete oscillator transform and its fast variant,
// emit eigenvalue multiplicity tables, execute the verification suites and
// benchmark the transforms.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "osc/osc.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

struct CommonArgs {
  std::uint64_t p{0};
  std::string torus{"Tw"};
  std::string input;
  std::string output;
  std::size_t dense_cap{osc::kDefaultDenseCap};
  std::uint64_t seed{1};
};

void report_line(const std::string& key, const std::string& value) {
  std::cout << key << ": " << value << "\n";
}

int cmd_eigenbasis(const CommonArgs& args) {
  const auto start = Clock::now();
  osc::FieldContext F(args.p);
  if (F.p() > args.dense_cap)
    throw std::domain_error(
        "eigenbasis is a dense-only operation: p exceeds the dense cap (" +
        std::to_string(args.dense_cap) + "); raise --dense-cap if intended");
  const osc::MaximalTorus T =
      osc::build_torus(F, osc::torus_kind_from_name(args.torus));
  const osc::SpectralBasis basis = osc::eigenbasis(F, T);
  const std::string meta_path = args.output + ".meta.json";
  osc::save_basis_file(args.output, basis);
  osc::save_basis_metadata_file(meta_path, F, basis);
  report_line("command", "eigenbasis");
  report_line("p", std::to_string(args.p));
  report_line("torus", args.torus);
  report_line("vectors", std::to_string(basis.dimension()));
  report_line("output", args.output);
  report_line("output", meta_path);
  report_line("time_ms", osc::format_g17(ms_since(start)));
  return 0;
}

int cmd_transform(const CommonArgs& args, const std::string& mode,
                  bool synthesize) {
  const auto start = Clock::now();
  if (mode != "dot" && mode != "full")
    throw std::domain_error("transform mode must be 'dot' or 'full'");
  if (synthesize && mode != "full")
    throw std::domain_error("--synthesize requires --mode full");

  std::uint64_t p = 0;
  osc::CoefficientFile cf;
  osc::VectorFile vf;
  if (synthesize) {
    cf = osc::load_coefficient_file(args.input);
    p = cf.p;
  } else {
    vf = osc::load_vector_file(args.input);
    p = vf.p;
  }
  if (args.p != 0 && args.p != p)
    throw std::domain_error("p mismatch between file (" + std::to_string(p) +
                            ") and --p flag (" + std::to_string(args.p) + ")");
  osc::FieldContext F(p);
  if (F.p() > args.dense_cap)
    throw std::domain_error(
        "dense transform: p exceeds the dense cap (" +
        std::to_string(args.dense_cap) + "); use fot for large p = 1 mod 4");
  const osc::MaximalTorus T =
      osc::build_torus(F, osc::torus_kind_from_name(args.torus));
  const osc::SpectralBasis basis = osc::eigenbasis(F, T);

  report_line("command", synthesize ? "transform --synthesize" : "transform");
  report_line("p", std::to_string(p));
  report_line("torus", args.torus);
  report_line("mode", mode);
  if (synthesize) {
    if (cf.torus != args.torus)
      throw std::domain_error("coefficient file was produced for torus '" +
                              cf.torus + "', not '" + args.torus + "'");
    const osc::StateVector f = osc::full_synthesis(basis, cf.coeffs);
    osc::save_vector_file(args.output, {p, f});
  } else {
    const osc::CoefficientVector coeffs = mode == "dot"
                                              ? osc::dot_transform(basis, vf.values)
                                              : osc::full_analysis(basis, vf.values);
    osc::save_coefficient_file(args.output,
                               {p, args.torus, mode, coeffs});
  }
  report_line("output", args.output);
  report_line("time_ms", osc::format_g17(ms_since(start)));
  return 0;
}

int cmd_fot(const CommonArgs& args) {
  const auto start = Clock::now();
  const osc::VectorFile vf = osc::load_vector_file(args.input);
  if (args.p != 0 && args.p != vf.p)
    throw std::domain_error("p mismatch between file (" +
                            std::to_string(vf.p) + ") and --p flag (" +
                            std::to_string(args.p) + ")");
  osc::FieldContext F(vf.p);
  if (!F.has_sqrt_neg_one())
    throw std::domain_error(
        "the fast oscillator transform needs p = 1 mod 4; whether a fast "
        "algorithm exists for the non-split case (p = 3 mod 4) is an open "
        "problem -- use 'transform' below the dense cap instead");
  const auto setup = Clock::now();
  const osc::FastOscillator fot(F, args.dense_cap);
  const auto applied = Clock::now();
  const osc::CoefficientVector coeffs = fot.transform(vf.values);
  const double transform_ms = ms_since(applied);
  osc::save_coefficient_file(args.output, {vf.p, "Tw", "fot", coeffs});
  report_line("command", "fot");
  report_line("p", std::to_string(vf.p));
  report_line("setup_ms",
              osc::format_g17(std::chrono::duration<double, std::milli>(
                                  applied - setup)
                                  .count()));
  report_line("transform_ms", osc::format_g17(transform_ms));
  report_line("output", args.output);
  report_line("time_ms", osc::format_g17(ms_since(start)));
  return 0;
}

int cmd_multiplicities(std::uint64_t pmin, std::uint64_t pmax,
                       const std::string& output) {
  const auto start = Clock::now();
  std::ofstream out(output);
  if (!out) throw std::runtime_error("cannot write '" + output + "'");
  out << "p,p_mod_8,m_plus1,m_minus1,m_plus_i,m_minus_i,"
         "n_plus1,n_minus1,n_plus_i,n_minus_i\n";
  std::size_t rows = 0;
  for (std::uint64_t p = std::max<std::uint64_t>(pmin, 3); p <= pmax; ++p) {
    if (p % 2 == 0 || !osc::detail::is_prime(p)) continue;
    osc::FieldContext F(p);
    const osc::MultiplicityTable m = osc::weyl_element_multiplicities(F);
    const osc::MultiplicityTable n = osc::dft_multiplicities(F);
    out << p << ',' << p % 8 << ',' << m.plus_one() << ',' << m.minus_one()
        << ',' << m.plus_i() << ',' << m.minus_i() << ',' << n.plus_one()
        << ',' << n.minus_one() << ',' << n.plus_i() << ',' << n.minus_i()
        << '\n';
    ++rows;
  }
  report_line("command", "multiplicities");
  report_line("rows", std::to_string(rows));
  report_line("output", output);
  report_line("time_ms", osc::format_g17(ms_since(start)));
  return 0;
}

int cmd_verify(const osc::VerifyOptions& opt) {
  const auto start = Clock::now();
  const osc::VerifyReport report = osc::run_verification(opt);
  report_line("command", "verify");
  report_line("p_range",
              std::to_string(opt.pmin) + ".." + std::to_string(opt.pmax));
  for (const osc::CheckResult& c : report.checks) {
    std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name
              << "  max_err=" << osc::format_g17(c.max_err)
              << " tol=" << osc::format_g17(c.tolerance) << "\n";
  }
  report_line("checks", std::to_string(report.checks.size()));
  report_line("result", report.all_passed() ? "pass" : "fail");
  report_line("time_ms", osc::format_g17(ms_since(start)));
  return report.all_passed() ? 0 : 1;
}

int cmd_bench(const std::vector<std::uint64_t>& plist,
              const std::string& output, std::size_t dense_cap,
              std::uint64_t seed) {
  const auto start = Clock::now();
  std::ofstream out(output);
  if (!out) throw std::runtime_error("cannot write '" + output + "'");
  out << "p,fot_ms,dot_ms\n";
  std::mt19937_64 rng(seed);
  for (std::uint64_t p : plist) {
    if (!osc::detail::is_prime(p) || p < 3)
      throw std::domain_error("bench: " + std::to_string(p) +
                              " is not an odd prime");
    osc::FieldContext F(p);
    osc::StateVector f(p);
    std::normal_distribution<double> N(0.0, 1.0);
    for (std::uint64_t i = 0; i < p; ++i) f[i] = osc::cplx{N(rng), N(rng)};
    std::string fot_ms = "unsupported (p = 3 mod 4)";
    if (F.has_sqrt_neg_one()) {
      const osc::FastOscillator fot(F, dense_cap);
      const auto t0 = Clock::now();
      const osc::CoefficientVector c = fot.transform(f);
      fot_ms = osc::format_g17(ms_since(t0));
      (void)c;
    }
    std::string dot_ms = "skipped (dense cap)";
    if (p <= dense_cap) {
      const osc::MaximalTorus T = osc::MaximalTorus::weyl_centralizer(F);
      const osc::SpectralBasis basis = osc::eigenbasis(F, T);
      const auto t0 = Clock::now();
      const osc::CoefficientVector c = osc::dot_transform(basis, f);
      dot_ms = osc::format_g17(ms_since(t0));
      (void)c;
    }
    out << p << ',' << fot_ms << ',' << dot_ms << '\n';
    report_line("p " + std::to_string(p),
                "fot_ms=" + fot_ms + " dot_ms=" + dot_ms);
  }
  report_line("command", "bench");
  report_line("output", output);
  report_line("time_ms", osc::format_g17(ms_since(start)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Weil-representation toolkit: canonical DFT eigenbases, discrete "
      "oscillator transforms and eigenvalue multiplicity tables over F_p"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string mode{"dot"};
  bool synthesize = false;
  std::uint64_t pmin = 3, pmax = 31;
  std::vector<std::string> suites{"all"};
  double perturb_dft = 0.0;
  std::vector<std::uint64_t> plist;

  auto* eig = app.add_subcommand("eigenbasis",
                                 "write the canonical basis and its metadata");
  eig->add_option("--p", args.p, "odd prime modulus")->required();
  eig->add_option("--torus", args.torus, "torus: Tw, A or ns");
  eig->add_option("--output", args.output, "basis file path")->required();
  eig->add_option("--dense-cap", args.dense_cap, "dense operation cap");

  auto* tr = app.add_subcommand(
      "transform", "oscillator transform of a vector file (dense path)");
  tr->add_option("--p", args.p, "expected modulus (checked against the file)");
  tr->add_option("--torus", args.torus, "torus: Tw, A or ns");
  tr->add_option("--mode", mode, "dot (support only) or full (invertible)");
  tr->add_flag("--synthesize", synthesize,
               "apply the inverse transform to a coefficient file");
  tr->add_option("--input", args.input, "input file")->required();
  tr->add_option("--output", args.output, "output file")->required();
  tr->add_option("--dense-cap", args.dense_cap, "dense operation cap");

  auto* fo = app.add_subcommand(
      "fot", "fast oscillator transform, O(p log p), p = 1 mod 4");
  fo->add_option("--p", args.p, "expected modulus (checked against the file)");
  fo->add_option("--input", args.input, "input vector file")->required();
  fo->add_option("--output", args.output, "output coefficient file")
      ->required();
  fo->add_option("--dense-cap", args.dense_cap,
                 "cap for the dense scalar calibration");

  auto* mu = app.add_subcommand("multiplicities",
                                "CSV of DFT eigenvalue multiplicities");
  mu->add_option("--pmin", pmin, "smallest prime");
  mu->add_option("--pmax", pmax, "largest prime");
  mu->add_option("--output", args.output, "CSV path")->required();

  auto* ve = app.add_subcommand("verify", "run the verification suites");
  ve->add_option("--pmin", pmin, "smallest prime");
  ve->add_option("--pmax", pmax, "largest prime");
  ve->add_option("--suite", suites,
                 "suites: all, field, heisenberg, weil, tori, spectral, "
                 "oscillator");
  ve->add_option("--seed", args.seed, "seed for randomized checks");
  ve->add_option("--dense-cap", args.dense_cap, "dense operation cap");
  ve->add_option("--perturb-dft-relation", perturb_dft,
                 "test hook: perturb the Weyl operator before the DFT check")
      ->group("");  // hidden

  auto* be = app.add_subcommand("bench", "time the fast and dense transforms");
  be->add_option("--p-list", plist, "primes to benchmark")->required();
  be->add_option("--output", args.output, "CSV path")->required();
  be->add_option("--dense-cap", args.dense_cap, "dense operation cap");
  be->add_option("--seed", args.seed, "seed for the random input vector");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(eig)) return cmd_eigenbasis(args);
    if (app.got_subcommand(tr)) return cmd_transform(args, mode, synthesize);
    if (app.got_subcommand(fo)) return cmd_fot(args);
    if (app.got_subcommand(mu))
      return cmd_multiplicities(pmin, pmax, args.output);
    if (app.got_subcommand(ve)) {
      osc::VerifyOptions opt;
      opt.pmin = pmin;
      opt.pmax = pmax;
      opt.suites = suites;
      opt.seed = args.seed;
      opt.dense_cap = args.dense_cap;
      opt.perturb_dft_relation = perturb_dft;
      return cmd_verify(opt);
    }
    if (app.got_subcommand(be))
      return cmd_bench(plist, args.output, args.dense_cap, args.seed);
  } catch (const osc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    // numeric consistency gates
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
