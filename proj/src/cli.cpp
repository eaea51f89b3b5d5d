#include "butterfly/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "butterfly/combinatorics.hpp"
#include "butterfly/json_io.hpp"
#include "butterfly/parallel.hpp"
#include "butterfly/raster.hpp"
#include "butterfly/spectrum.hpp"
#include "butterfly/verify.hpp"

namespace butterfly {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

RationalFlux parse_flux(const std::string& text, std::ostream& err) {
  bool reduced = false;
  RationalFlux flux;
  try {
    flux = RationalFlux::parse(text, &reduced);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (reduced) err << "warning: flux " << text << " reduced to " << flux.str() << "\n";
  return flux;
}

int cmd_spectrum(const std::string& flux_text, bool json, bool csv, std::ostream& out, std::ostream& err) {
  const Spectrum s = compute_spectrum(parse_flux(flux_text, err));
  if (json) {
    out << to_json(s).dump(2) << "\n";
    return kExitOk;
  }
  out << (csv ? "band,lo,hi\n" : "# band lo hi\n");
  const char sep = csv ? ',' : ' ';
  for (std::size_t i = 0; i < s.bands().size(); ++i) {
    out << i << sep << num(s.bands()[i].lo) << sep << num(s.bands()[i].hi) << "\n";
  }
  if (!csv) out << "# total bandwidth " << num(total_bandwidth(s)) << "\n";
  return kExitOk;
}

int cmd_labels(const std::string& flux_text, bool json, std::ostream& out, std::ostream& err) {
  const auto records = label_spectrum(compute_spectrum(parse_flux(flux_text, err)));
  if (json) {
    Json arr = Json::array();
    for (const auto& r : records) arr.push_back(to_json(r));
    out << arr.dump(2) << "\n";
    return kExitOk;
  }
  out << "# j k rho e_lo e_hi central_closed\n";
  for (const auto& r : records) {
    out << r.j << ' ' << r.k() << ' ' << r.rho() << ' ' << num(r.interval.lo) << ' ' << num(r.interval.hi) << ' '
        << (r.central_closed() ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int cmd_count(const std::optional<std::int64_t>& k, const std::optional<std::int64_t>& k_max, std::ostream& out) {
  if (k.has_value() == k_max.has_value()) throw UsageError("count needs exactly one of --k or --k-max");
  if (k) {
    out << "k=" << *k << ", components=" << component_count(*k).count << "\n";
    return kExitOk;
  }
  if (*k_max < 1) throw UsageError("--k-max must be >= 1");
  out << "k,count,ratio\n";
  for (std::int64_t kk = 1; kk <= *k_max; ++kk) {
    out << kk << ',' << component_count(kk).count << ',' << num(asymptotic_ratio(kk)) << "\n";
  }
  return kExitOk;
}

BoundarySide parse_side(const std::string& s) {
  if (s == "right") return BoundarySide::Right;
  if (s == "left") return BoundarySide::Left;
  throw UsageError("--side must be left or right");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hofstadter butterfly as a quantum Hall phase diagram"};
  app.require_subcommand(1, 1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker thread cap (falls back to BUTTERFLY_THREADS)");

  std::string flux_text;
  bool json = false, csv = false;
  auto* spectrum = app.add_subcommand("spectrum", "Band edges at rational flux");
  spectrum->add_option("--flux", flux_text, "Flux P/Q")->required();
  auto* json_flag = spectrum->add_flag("--json", json, "JSON output");
  spectrum->add_flag("--csv", csv, "CSV output")->excludes(json_flag);

  auto* labels = app.add_subcommand("labels", "Hall conductance of every gap");
  labels->add_option("--flux", flux_text, "Flux P/Q")->required();
  labels->add_flag("--json", json, "JSON output");

  std::optional<std::int64_t> k_opt, k_max_opt;
  auto* count = app.add_subcommand("count", "Number of components of P(k)");
  count->add_option("--k", k_opt, "Phase label");
  count->add_option("--k-max", k_max_opt, "Table for k = 1..K");

  RenderConfig config;
  std::string out_path, sidecar_path;
  auto* rend = app.add_subcommand("render", "Colored phase diagram as binary PPM");
  rend->add_option("--out", out_path, "Output PPM file")->required();
  rend->add_option("--width", config.width, "Width in pixels")->required();
  rend->add_option("--height", config.height, "Height in pixels")->required();
  rend->add_option("--q-cap", config.q_cap, "Largest denominator sampled")->required();
  rend->add_option("--phi-min", config.phi_min);
  rend->add_option("--phi-max", config.phi_max);
  rend->add_option("--e-min", config.e_min);
  rend->add_option("--e-max", config.e_max);
  rend->add_option("--sidecar", sidecar_path, "Geometry JSON (default: <out>.json)");
  rend->add_flag("--black-spectrum", config.black_spectrum, "Paint bands black");

  std::int64_t k = 0, n_max = 12, l_max = 3;
  std::string side_text = "right";
  auto* coexist = app.add_subcommand("coexist", "Check phase coexistence along Bezout approximants");
  coexist->add_option("--flux", flux_text, "Flux P/Q")->required();
  coexist->add_option("--k", k, "Phase label")->required();
  coexist->add_option("--n-max", n_max)->check(CLI::PositiveNumber);
  coexist->add_option("--l-max", l_max)->check(CLI::PositiveNumber);
  coexist->add_option("--side", side_text)->check(CLI::IsMember({"left", "right"}));

  std::string suite;
  SuiteOptions suite_options;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"symmetry", "bounds", "proposition", "wada", "dimension"}));
  verify->add_option("--q-max", suite_options.q_max)->check(CLI::PositiveNumber);
  verify->add_option("--seed", suite_options.seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (threads > 0) set_max_threads(threads);
    if (spectrum->parsed()) return cmd_spectrum(flux_text, json, csv, out, err);
    if (labels->parsed()) return cmd_labels(flux_text, json, out, err);
    if (count->parsed()) return cmd_count(k_opt, k_max_opt, out);
    if (rend->parsed()) {
      try {
        config.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const Render r = render(config);
      write_file(out_path, encode_ppm(r.image));
      const std::string sidecar = sidecar_path.empty() ? out_path + ".json" : sidecar_path;
      write_file(sidecar, sidecar_json(r).dump() + "\n");
      std::size_t resolved = 0;
      for (const auto& c : r.columns) resolved += c.flux ? 1 : 0;
      out << "wrote " << out_path << " (" << config.width << "x" << config.height << ", " << resolved
          << " resolved columns) and " << sidecar << "\n";
      return kExitOk;
    }
    if (coexist->parsed()) {
      const RationalFlux flux = parse_flux(flux_text, err);
      CoexistenceReport report;
      try {
        report = verify_proposition(k, flux, parse_side(side_text), n_max, l_max);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      out << to_json(report).dump(2) << "\n";
      return report.pass ? kExitOk : kExitVerificationFailed;
    }
    if (verify->parsed()) {
      const SuiteResult result = run_suite(suite, suite_options);
      for (const auto& line : result.lines) out << line << "\n";
      out << "suite " << result.name << ": " << (result.pass ? "PASS" : "FAIL") << "\n";
      return result.pass ? kExitOk : kExitVerificationFailed;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitUsage;
}

}  // namespace butterfly
