#include "cli/commands.hpp"

#include "cli/descriptor.hpp"
#include "cli/parallel.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace circlight::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Complex parse_amplitude(const std::string& text) {
  auto parse_part = [&](std::string_view part) {
    double v = 0.0;
    const auto res = std::from_chars(part.data(), part.data() + part.size(), v);
    if (res.ec != std::errc{} || res.ptr != part.data() + part.size() || !std::isfinite(v)) {
      throw UsageError("invalid amplitude \"" + text + "\", expected RE or RE,IM");
    }
    return v;
  };
  const std::string_view sv(text);
  const auto comma = sv.find(',');
  if (comma == std::string_view::npos) return {parse_part(sv), 0.0};
  return {parse_part(sv.substr(0, comma)), parse_part(sv.substr(comma + 1))};
}

std::vector<Method> parse_methods(const std::vector<std::string>& names, std::vector<Method> fallback) {
  if (names.empty()) return fallback;
  std::vector<Method> out;
  for (const auto& name : names) {
    const auto m = parse_method(name);
    if (!m) throw UsageError("unknown method \"" + name + "\"");
    out.push_back(*m);
  }
  return out;
}

double amplitude_scale(bool in_amplitude) { return in_amplitude ? 1.0 / std::numbers::sqrt2 : 1.0; }

template <class Emit>
void emit(const std::string& path, std::ostream& out, Emit&& emit_to) {
  if (path.empty()) {
    emit_to(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file " + path);
  emit_to(file);
}

nlohmann::ordered_json complex_json(Complex z) { return nlohmann::ordered_json::array({z.real(), z.imag()}); }

std::string format_e(double v) {
  std::ostringstream ss;
  ss << std::setprecision(15) << v;
  return ss.str();
}

}  // namespace

std::vector<double> linear_grid(double lo, double hi, int steps) {
  if (steps < 1) throw UsageError("--steps must be at least 1");
  if (hi < lo) throw UsageError("grid maximum is below its minimum");
  if (steps == 1) return {lo};
  std::vector<double> grid(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) grid[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (steps - 1);
  grid.back() = hi;
  return grid;
}

double rics_entropy(const RicsLabel& label, Method method) {
  switch (method) {
    case Method::AnalyticRics:
      return entanglement_rics(label).e_bits;
    case Method::RicsBasisEig:
      return entanglement_general(rics_coefficients(label)).e_bits;
    case Method::FockOracle:
      return entanglement_fock(rics_coefficients(label)).e_bits;
  }
  throw std::logic_error("unhandled method");
}

SweepTable sweep_amplitude(const AmplitudeSweep& spec) {
  if (spec.n_list.empty()) throw UsageError("--n-list must name at least one component count");
  const auto grid = linear_grid(spec.alpha0_min, spec.alpha0_max, spec.steps);
  for (int n : spec.n_list) RicsLabel{n, spec.q, 1.0}.validate();

  struct Point {
    int n;
    double alpha0;
  };
  std::vector<Point> points;
  for (int n : spec.n_list) {
    for (double a : grid) points.push_back({n, a});
  }
  auto rows = parallel_map(points.size(), [&](std::size_t i) {
    std::vector<SweepRecord> out;
    const auto& p = points[i];
    for (Method m : spec.methods) {
      out.push_back({p.alpha0, p.n, std::to_string(spec.q), rics_entropy({p.n, spec.q, p.alpha0}, m),
                     std::string(to_string(m)), std::nullopt, std::nullopt});
    }
    return out;
  });

  SweepTable table;
  for (auto& chunk : rows) {
    for (auto& r : chunk) table.rows.push_back(std::move(r));
  }
  return table;
}

SweepTable sweep_components(const ComponentSweep& spec) {
  if (spec.q < 0) throw DomainError("q must be non-negative");
  const int n_min = std::max(1, spec.q + 1);
  if (spec.n_max < n_min) throw UsageError("--n-max must be at least q+1");
  const Complex alpha0 = spec.alpha0;

  auto rows = parallel_map(static_cast<std::size_t>(spec.n_max - n_min + 1), [&](std::size_t i) {
    const int n = n_min + static_cast<int>(i);
    std::optional<Decomposition> split;
    if (spec.decompose) split = Decomposition{asymptotic_B(n, alpha0), asymptotic_S(n, alpha0)};
    std::vector<SweepRecord> out;
    for (Method m : spec.methods) {
      out.push_back({spec.alpha0, n, std::to_string(spec.q), rics_entropy({n, spec.q, alpha0}, m),
                     std::string(to_string(m)), split, std::nullopt});
    }
    return out;
  });

  SweepTable table;
  table.with_decomposition = spec.decompose;
  for (auto& chunk : rows) {
    for (auto& r : chunk) table.rows.push_back(std::move(r));
  }
  return table;
}

SweepTable sweep_kerr(const KerrSweep& spec) {
  if (spec.n_max < 1) throw UsageError("--n-max must be at least 1");
  for (Method m : spec.methods) {
    if (m == Method::AnalyticRics) throw UsageError("analytic-rics does not apply to Kerr states");
  }
  const Complex alpha0 = spec.alpha0;
  std::optional<Thresholds> marks;
  if (spec.with_rics_qmax) marks = thresholds(alpha0, 1);

  auto rows = parallel_map(static_cast<std::size_t>(spec.n_max), [&](std::size_t i) {
    const int n = 1 + static_cast<int>(i);
    std::optional<QmaxColumns> qmax;
    if (marks) qmax = QmaxColumns{max_rics_entanglement(alpha0, n).e_bits, marks->n1, marks->n2};
    std::vector<SweepRecord> out;
    for (Method m : spec.methods) {
      const double e = m == Method::FockOracle ? entanglement_fock(kerr_state(n, alpha0)).e_bits
                                               : entanglement_kerr(n, alpha0).e_bits;
      out.push_back({spec.alpha0, n, "kerr", e, std::string(to_string(m)), std::nullopt, qmax});
    }
    return out;
  });

  SweepTable table;
  table.with_qmax = spec.with_rics_qmax;
  for (auto& chunk : rows) {
    for (auto& r : chunk) table.rows.push_back(std::move(r));
  }
  return table;
}

OracleReport run_oracle(const CircularState& s, bool kerr_closed_form, int cutoff) {
  OracleReport r;
  if (const auto label = as_rics(s)) r.analytic = entanglement_rics(*label).e_bits;
  r.rics_basis = kerr_closed_form ? entanglement_kerr(s.size(), s.alpha0()).e_bits : entanglement_general(s).e_bits;
  const auto in = in_state(s);
  r.cutoff = cutoff > 0 ? cutoff : default_fock_cutoff(in.alpha0(), in.size());
  r.fock = entanglement_fock(s, r.cutoff).e_bits;

  std::vector<double> values{r.rics_basis, r.fock};
  if (r.analytic) values.push_back(*r.analytic);
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) r.max_delta = std::max(r.max_delta, std::abs(values[i] - values[j]));
  }
  return r;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement of formation of two-mode circular states of light", "circlight"};
  app.require_subcommand(1);

  // Shared option storage.
  std::string alpha_text;
  bool in_amplitude = false;
  std::string out_path;
  std::vector<std::string> method_names;
  int n = 0;
  int q = 0;
  int n_max = 0;
  std::string state_text;
  int cutoff = 0;

  auto* schmidt = app.add_subcommand("schmidt", "Schmidt decomposition of a two-mode RICS");
  schmidt->add_option("--alpha0", alpha_text, "per-mode circle radius, RE or RE,IM")->required();
  schmidt->add_option("--n", n, "number of components")->required();
  schmidt->add_option("--q", q, "rotational index")->required();
  schmidt->add_flag("--in-amplitude", in_amplitude, "--alpha0 is the in-state amplitude (divided by sqrt 2)");

  AmplitudeSweep amp;
  auto* sweep_amp = app.add_subcommand("sweep-amplitude", "E versus |alpha0| at fixed q");
  sweep_amp->add_option("--n-list", amp.n_list, "comma-separated component counts")->required()->delimiter(',');
  sweep_amp->add_option("--q", amp.q, "rotational index")->required();
  sweep_amp->add_option("--alpha0-min", amp.alpha0_min, "smallest radius")->capture_default_str();
  sweep_amp->add_option("--alpha0-max", amp.alpha0_max, "largest radius")->capture_default_str();
  sweep_amp->add_option("--steps", amp.steps, "grid points, endpoints inclusive")->capture_default_str();
  sweep_amp->add_option("--methods", method_names, "analytic-rics,rics-basis-eig,fock-oracle")->delimiter(',');
  sweep_amp->add_flag("--in-amplitude", in_amplitude, "radii are in-state amplitudes");
  sweep_amp->add_option("--out", out_path, "write CSV here instead of stdout");

  ComponentSweep comp;
  auto* sweep_n = app.add_subcommand("sweep-n", "E versus N at fixed |alpha0| and q");
  sweep_n->add_option("--alpha0", alpha_text, "per-mode circle radius")->required();
  sweep_n->add_option("--q", comp.q, "rotational index")->required();
  sweep_n->add_option("--n-max", comp.n_max, "largest component count")->required();
  sweep_n->add_flag("--decompose", comp.decompose, "add B(N), S(N) and B+S columns");
  sweep_n->add_option("--methods", method_names, "analytic-rics,rics-basis-eig,fock-oracle")->delimiter(',');
  sweep_n->add_flag("--in-amplitude", in_amplitude, "--alpha0 is the in-state amplitude");
  sweep_n->add_option("--out", out_path, "write CSV here instead of stdout");

  KerrSweep kerr;
  auto* kerr_cmd = app.add_subcommand("kerr", "Kerr-state E versus N");
  kerr_cmd->add_option("--alpha0", alpha_text, "per-mode circle radius")->required();
  kerr_cmd->add_option("--n-max", n_max, "largest component count")->required();
  kerr_cmd->add_flag("--with-rics-qmax", kerr.with_rics_qmax, "add max-over-q RICS entanglement and N1, N2");
  kerr_cmd->add_option("--methods", method_names, "rics-basis-eig,fock-oracle")->delimiter(',');
  kerr_cmd->add_flag("--in-amplitude", in_amplitude, "--alpha0 is the in-state amplitude");
  kerr_cmd->add_option("--out", out_path, "write CSV here instead of stdout");

  auto* oracle = app.add_subcommand("oracle", "cross-check all methods on one state");
  oracle->add_option("--state", state_text, "JSON descriptor or path to one")->required();
  oracle->add_option("--cutoff", cutoff, "Fock cutoff for the oracle (default: automatic)");

  auto* decompose = app.add_subcommand("decompose", "coordinates of a state in the RICS basis");
  decompose->add_option("--state", state_text, "JSON descriptor or path to one")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    if (app.get_subcommands().empty()) err << app.help();
    return kExitUsage;
  }

  try {
    const double scale = amplitude_scale(in_amplitude);

    if (schmidt->parsed()) {
      const RicsLabel label{n, q, parse_amplitude(alpha_text) * scale};
      const auto decomposition = schmidt_rics(label);
      nlohmann::ordered_json j;
      j["lambdas"] = decomposition.lambdas.weights();
      auto pairs = nlohmann::ordered_json::array();
      for (const auto& [a, b] : decomposition.pairing) pairs.push_back({a, b});
      j["pairing"] = std::move(pairs);
      j["E_bits"] = shannon_entropy(decomposition.lambdas);
      out << j.dump() << '\n';
      return kExitOk;
    }

    if (sweep_amp->parsed()) {
      amp.alpha0_min *= scale;
      amp.alpha0_max *= scale;
      amp.methods = parse_methods(method_names, amp.methods);
      const auto table = sweep_amplitude(amp);
      emit(out_path, out, [&](std::ostream& os) { write_csv(os, table); });
      return kExitOk;
    }

    if (sweep_n->parsed()) {
      comp.alpha0 = std::abs(parse_amplitude(alpha_text)) * scale;
      comp.methods = parse_methods(method_names, comp.methods);
      const auto table = sweep_components(comp);
      emit(out_path, out, [&](std::ostream& os) { write_csv(os, table); });
      return kExitOk;
    }

    if (kerr_cmd->parsed()) {
      kerr.alpha0 = std::abs(parse_amplitude(alpha_text)) * scale;
      kerr.n_max = n_max;
      kerr.methods = parse_methods(method_names, kerr.methods);
      const auto table = sweep_kerr(kerr);
      emit(out_path, out, [&](std::ostream& os) { write_csv(os, table); });
      return kExitOk;
    }

    if (oracle->parsed()) {
      const auto desc = parse_descriptor(state_text);
      const auto state = build_state(desc);
      const auto r = run_oracle(state, desc.kind == StateKind::Kerr, cutoff);
      out << "state: " << kind_name(desc.kind) << " N=" << desc.n;
      if (desc.kind == StateKind::Rics) out << " q=" << desc.q;
      out << " alpha0=(" << desc.alpha0.real() << "," << desc.alpha0.imag() << ")\n";
      out << "analytic-rics   E_bits = " << (r.analytic ? format_e(*r.analytic) : std::string("n/a (not a single RICS)"))
          << '\n';
      out << "rics-basis-eig  E_bits = " << format_e(r.rics_basis) << '\n';
      out << "fock-oracle     E_bits = " << format_e(r.fock) << "  (cutoff " << r.cutoff << ")\n";
      out << "max |dE| = " << format_e(r.max_delta) << "  tolerance " << kOracleTolerance << '\n';
      const bool agree = r.max_delta < kOracleTolerance;
      out << (agree ? "agreement: PASS" : "agreement: FAIL") << '\n';
      return agree ? kExitOk : kExitDisagreement;
    }

    if (decompose->parsed()) {
      const auto desc = parse_descriptor(state_text);
      const auto state = build_state(desc);
      const auto b = to_rics_basis(state);
      nlohmann::ordered_json j;
      j["N"] = state.size();
      j["alpha0"] = complex_json(state.alpha0());
      auto coords = nlohmann::ordered_json::array();
      auto probs = nlohmann::ordered_json::array();
      for (const auto& z : b) {
        coords.push_back(complex_json(z));
        probs.push_back(std::norm(z));
      }
      j["b"] = std::move(coords);
      j["probabilities"] = std::move(probs);
      j["norm"] = b.norm_squared();
      out << j.dump() << '\n';
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DescriptorError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"circlight"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace circlight::cli
