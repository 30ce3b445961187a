#include "operadix/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "operadix/jacobi.hpp"
#include "operadix/report.hpp"

namespace operadix::cli {

namespace {

constexpr std::size_t kRandomTriples = 50;
constexpr double kDefaultA = 0.5;

json tolerances_json(const Tolerances& tol, Command c) {
  switch (c) {
    case Command::VerifyLax:
      return {{"ordinary_lax", tol.ordinary_lax},
              {"operadic_lax", tol.operadic_lax},
              {"convergence_ratio", {tol.convergence_lo, tol.convergence_hi}}};
    case Command::VerifyJacobi:
      return {{"jacobi_on_shell", tol.jacobi_on_shell},
              {"jacobi_off_shell", tol.jacobi_off_shell},
              {"closed_form", tol.closed_form},
              {"energy", tol.energy}};
    case Command::EnergyCheck:
      return {{"energy", tol.energy},
              {"ratio", kRatioTolerance},
              {"system", kSystemTolerance},
              {"off_shell_residual", tol.off_shell_residual}};
    default:
      return json::object();
  }
}

std::vector<BianchiType> selected_types(const RunConfig& config) {
  std::vector<BianchiTag> tags = config.types;
  if (tags.empty()) tags.assign(kAllTags.begin(), kAllTags.end());
  std::vector<BianchiType> out;
  for (BianchiTag tag : tags) {
    std::optional<double> a;
    if (takes_parameter(tag)) a = config.a.value_or(kDefaultA);
    out.push_back(BianchiType::make(tag, a));
  }
  return out;
}

json type_json(const BianchiType& type) {
  json j = {{"type", std::string(tag_name(type.tag()))}};
  if (type.a()) j["a"] = *type.a();
  return j;
}

double t_end_of(const RunConfig& config) {
  return config.t_end.value_or(config.t_start + 2.0 * OscParams(config.omega, config.p0).period());
}

double fd_step_of(const RunConfig& config) {
  return config.fd_step.value_or(default_time_step(config.omega));
}

std::uint64_t sampler_seed(const RunConfig& config, std::uint64_t stream) {
  return config.seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1));
}

json envelope(const RunConfig& config) {
  return {{"schema", kSchemaVersion},
          {"command", command_name(config.command)},
          {"omega", config.omega},
          {"p0", config.p0},
          {"seed", config.seed}};
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

struct Outcome {
  bool pass = true;
};

// -- tabulate ---------------------------------------------------------------

Outcome tabulate(const RunConfig& config, std::ostream& out) {
  const auto types = selected_types(config);
  switch (config.format) {
    case OutFormat::Markdown:
      out << (config.table == 2 ? table2_markdown() : table1_markdown());
      break;
    case OutFormat::Csv: {
      out << "type,a,alpha,n1,n2,n3,mu1_12,mu2_12,mu3_12,mu1_23,mu2_23,mu3_23,mu1_31,mu2_31,"
             "mu3_31\n";
      for (const auto& type : types) {
        const Table1Row& row = table1_row(type.tag());
        const double a = type.parameter();
        out << tag_name(type.tag()) << ',' << (type.a() ? format_17(*type.a()) : "") << ','
            << format_17(row.alpha.eval(a)) << ',' << format_17(row.n1.eval(a)) << ','
            << format_17(row.n2.eval(a)) << ',' << format_17(row.n3.eval(a));
        for (double v : independent_components(catalog(type).mu0)) out << ',' << format_17(v);
        out << '\n';
      }
      break;
    }
    case OutFormat::Json: {
      json j = {{"schema", kSchemaVersion}, {"command", "tabulate"}};
      json entries = json::array();
      for (const auto& type : types) entries.push_back(catalog_json(catalog(type)));
      j["catalog"] = entries;
      emit_json(out, j);
      break;
    }
  }
  return {};
}

// -- deform -----------------------------------------------------------------

Outcome deform_cmd(const RunConfig& config, std::ostream& out) {
  const OscParams params(config.omega, config.p0);
  const auto times = time_grid(config.t_start, t_end_of(config), config.samples, false);
  const auto types = selected_types(config);

  if (config.format == OutFormat::Csv) {
    out << "type,t,q,p,H,a_plus,a_minus,mu1_12,mu2_12,mu3_12,mu1_23,mu2_23,mu3_23,mu1_31,"
           "mu2_31,mu3_31\n";
  }
  json reports = json::array();
  for (std::size_t n = 0; n < types.size(); ++n) {
    const auto& type = types[n];
    const auto traj = deform_trajectory(type, params, times, Execution::Parallel);
    if (config.format == OutFormat::Markdown) {
      if (n > 0) out << '\n';
      out << deformation_markdown(type, traj);
    } else if (config.format == OutFormat::Csv) {
      for (const auto& s : traj) {
        out << type.label() << ',' << format_17(s.t) << ',' << format_17(s.state.q) << ','
            << format_17(s.state.p) << ',' << format_17(s.energy) << ','
            << format_17(s.aux.a_plus) << ',' << format_17(s.aux.a_minus);
        for (double v : s.mu) out << ',' << format_17(v);
        out << '\n';
      }
    } else {
      json entry = type_json(type);
      json samples = json::array();
      for (const auto& s : traj) {
        samples.push_back({{"t", s.t},
                           {"q", s.state.q},
                           {"p", s.state.p},
                           {"H", s.energy},
                           {"a_plus", s.aux.a_plus},
                           {"a_minus", s.aux.a_minus},
                           {"mu", s.mu}});
      }
      entry["samples"] = samples;
      reports.push_back(entry);
    }
  }
  if (config.format == OutFormat::Json) {
    json j = envelope(config);
    j["reports"] = reports;
    emit_json(out, j);
  }
  return {};
}

// -- verify-lax -------------------------------------------------------------

Outcome verify_lax(const RunConfig& config, std::ostream& out) {
  const Tolerances tol;
  const OscParams params(config.omega, config.p0);
  const auto times = time_grid(config.t_start, t_end_of(config), config.samples, false);
  const double h = fd_step_of(config);
  const auto types = selected_types(config);

  Outcome outcome;
  json reports = json::array();
  std::ostringstream csv;
  std::ostringstream md;
  csv << "type,t,ordinary,operadic\n";
  md << "| type | max ordinary | max operadic | convergence ratio | pass |\n"
     << "|---|---|---|---|---|\n";
  for (const auto& type : types) {
    const LaxCoefficients C = solve_coefficients(catalog(type), params.p0);
    const auto samples = lax_residuals(C, params, times, h, Execution::Parallel);
    const ConvergenceMeasure conv =
        operadic_convergence(C, params, times, 10.0 * h, Execution::Parallel);
    double max_ord = 0.0;
    double max_op = 0.0;
    json js = json::array();
    for (const auto& s : samples) {
      max_ord = std::max(max_ord, s.ordinary);
      max_op = std::max(max_op, s.operadic);
      js.push_back({{"t", s.t}, {"ordinary", s.ordinary}, {"operadic", s.operadic}});
      csv << type.label() << ',' << format_17(s.t) << ',' << format_17(s.ordinary) << ','
          << format_17(s.operadic) << '\n';
    }
    bool pass = max_ord < tol.ordinary_lax && max_op < tol.operadic_lax;
    if (conv.ratio) {
      pass = pass && *conv.ratio >= tol.convergence_lo && *conv.ratio <= tol.convergence_hi;
    }
    outcome.pass = outcome.pass && pass;

    json entry = type_json(type);
    entry["omega"] = params.omega;
    entry["p0"] = params.p0;
    entry["fd_step"] = h;
    entry["samples"] = js;
    entry["max_ordinary"] = max_ord;
    entry["max_operadic"] = max_op;
    entry["convergence"] = {{"coarse_step", 10.0 * h},
                            {"fine_step", 5.0 * h},
                            {"coarse", conv.coarse},
                            {"fine", conv.fine},
                            {"ratio", conv.ratio ? json(*conv.ratio) : json(nullptr)}};
    entry["pass"] = pass;
    reports.push_back(entry);
    md << "| " << type.label() << " | " << format_6(max_ord) << " | " << format_6(max_op)
       << " | " << (conv.ratio ? format_6(*conv.ratio) : "n/a") << " | "
       << (pass ? "yes" : "no") << " |\n";
  }

  if (config.format == OutFormat::Json) {
    json j = envelope(config);
    j["tolerances"] = tolerances_json(tol, config.command);
    j["reports"] = reports;
    j["pass"] = outcome.pass;
    emit_json(out, j);
  } else if (config.format == OutFormat::Csv) {
    out << csv.str();
  } else {
    out << "tolerances: ordinary < " << format_6(tol.ordinary_lax) << ", operadic < "
        << format_6(tol.operadic_lax) << ", ratio in [" << format_6(tol.convergence_lo) << ", "
        << format_6(tol.convergence_hi) << "]\n\n"
        << md.str();
  }
  return outcome;
}

// -- verify-jacobi ----------------------------------------------------------

Outcome verify_jacobi(const RunConfig& config, std::ostream& out) {
  const Tolerances tol;
  const OscParams params(config.omega, config.p0);
  const auto times = time_grid(config.t_start, t_end_of(config), config.samples, false);
  const auto types = selected_types(config);

  Sampler triple_sampler(sampler_seed(config, 0));
  const auto triples = random_triples(kRandomTriples, triple_sampler);
  const auto on_points = on_shell_points(params, times);
  std::vector<PhasePoint> off_points;
  if (config.off_shell) {
    Sampler point_sampler(sampler_seed(config, 1));
    off_points = off_shell_points(params, config.samples, point_sampler);
  }

  Outcome outcome;
  json reports = json::array();
  std::ostringstream md;
  md << "| type | on-shell max J | off-shell max J | closed-form max dev | energy recovered | "
        "pass |\n|---|---|---|---|---|---|\n";
  std::ostringstream csv;
  csv << "type,on_shell_max_J,off_shell_max_J,closed_form_max_dev,energy_recovered,pass\n";

  for (const auto& type : types) {
    const bool closed = has_energy_dependent_jacobiator(type.tag());
    const auto on_j = on_shell_jacobiators(type, params, times, triples, Execution::Parallel);
    const double on_max = on_j.empty() ? 0.0 : *std::max_element(on_j.begin(), on_j.end());

    double cf_dev = 0.0;
    for (const auto& s : point_jacobiators(type, params, on_points, triples, Execution::Parallel)) {
      cf_dev = std::max(cf_dev, s.closed_form_dev);
    }
    std::optional<double> off_max;
    if (config.off_shell) {
      off_max = 0.0;
      for (const auto& s :
           point_jacobiators(type, params, off_points, triples, Execution::Parallel)) {
        *off_max = std::max(*off_max, s.max_j);
        cf_dev = std::max(cf_dev, s.closed_form_dev);
      }
    }

    std::optional<double> energy;
    if (closed) {
      const auto certs = energy_certificates(params, on_points, Execution::Parallel);
      const bool all = std::all_of(certs.begin(), certs.end(),
                                   [](const EnergyCertificate& c) { return c.certified(); });
      if (all) energy = params.energy();
    }

    bool pass = on_max < tol.jacobi_on_shell;
    if (closed) {
      pass = pass && cf_dev < tol.closed_form && energy.has_value();
    } else if (off_max) {
      pass = pass && *off_max < tol.jacobi_off_shell;
    }
    outcome.pass = outcome.pass && pass;

    json entry = type_json(type);
    entry["on_shell_max_J"] = on_max;
    entry["off_shell_max_J"] = off_max ? json(*off_max) : json(nullptr);
    entry["closed_form_max_dev"] = closed ? json(cf_dev) : json(nullptr);
    entry["energy_recovered"] = energy ? json(*energy) : json(nullptr);
    entry["pass"] = pass;
    reports.push_back(entry);

    const std::string off_s = off_max ? format_6(*off_max) : "n/a";
    const std::string cf_s = closed ? format_6(cf_dev) : "n/a";
    const std::string en_s = energy ? format_6(*energy) : "n/a";
    md << "| " << type.label() << " | " << format_6(on_max) << " | " << off_s << " | " << cf_s
       << " | " << en_s << " | " << (pass ? "yes" : "no") << " |\n";
    csv << type.label() << ',' << format_17(on_max) << ','
        << (off_max ? format_17(*off_max) : "") << ',' << (closed ? format_17(cf_dev) : "")
        << ',' << (energy ? format_17(*energy) : "") << ',' << (pass ? 1 : 0) << '\n';
  }

  if (config.format == OutFormat::Json) {
    json j = envelope(config);
    j["off_shell"] = config.off_shell;
    j["random_triples"] = kRandomTriples;
    j["tolerances"] = tolerances_json(tol, config.command);
    j["reports"] = reports;
    j["pass"] = outcome.pass;
    emit_json(out, j);
  } else if (config.format == OutFormat::Csv) {
    out << csv.str();
  } else {
    out << "tolerances: on-shell J < " << format_6(tol.jacobi_on_shell) << ", off-shell J < "
        << format_6(tol.jacobi_off_shell) << " (identically-vanishing types), closed form < "
        << format_6(tol.closed_form) << "\n\n"
        << md.str();
  }
  return outcome;
}

// -- energy-check -----------------------------------------------------------

Outcome energy_check(const RunConfig& config, std::ostream& out) {
  const Tolerances tol;
  const OscParams params(config.omega, config.p0);
  const auto times = time_grid(config.t_start, t_end_of(config), config.samples, false);
  const auto on_points = on_shell_points(params, times);
  Sampler sampler(sampler_seed(config, 1));
  const auto off_points = off_shell_points(params, config.samples, sampler);

  const auto on = energy_certificates(params, on_points, Execution::Parallel);
  const auto off = energy_certificates(params, off_points, Execution::Parallel);
  const double e = params.energy();

  std::size_t on_certified = 0;
  double on_max_dev = 0.0;
  for (std::size_t n = 0; n < on.size(); ++n) {
    if (!on[n].certified()) continue;
    ++on_certified;
    on_max_dev = std::max(on_max_dev, std::abs(on[n].state_energy - *on[n].energy) / e);
  }
  std::size_t off_certified = 0;
  double off_min_residual = off.empty() ? 0.0 : off.front().system_residual;
  for (const auto& c : off) {
    if (c.certified()) ++off_certified;
    off_min_residual = std::min(off_min_residual, c.system_residual);
  }
  Outcome outcome;
  outcome.pass = on_certified == on.size() && on_max_dev < tol.energy && off_certified == 0 &&
                 (off.empty() || off_min_residual > tol.off_shell_residual);

  if (config.format == OutFormat::Json) {
    json j = envelope(config);
    j["tolerances"] = tolerances_json(tol, config.command);
    json on_js = json::array();
    for (std::size_t n = 0; n < on.size(); ++n) {
      on_js.push_back({{"q", on_points[n].state.q},
                       {"p", on_points[n].state.p},
                       {"residual", on[n].system_residual},
                       {"ratio", on[n].ratio ? json(*on[n].ratio) : json(nullptr)},
                       {"certified", on[n].certified()}});
    }
    json off_js = json::array();
    for (std::size_t n = 0; n < off.size(); ++n) {
      off_js.push_back({{"q", off_points[n].state.q},
                        {"p", off_points[n].state.p},
                        {"residual", off[n].system_residual},
                        {"ratio", off[n].ratio ? json(*off[n].ratio) : json(nullptr)},
                        {"certified", off[n].certified()}});
    }
    j["on_shell"] = {{"count", on.size()},
                     {"certified", on_certified},
                     {"max_relative_energy_dev", on_max_dev},
                     {"points", on_js}};
    j["off_shell"] = {{"count", off.size()},
                      {"certified", off_certified},
                      {"min_residual", off_min_residual},
                      {"points", off_js}};
    j["energy"] = e;
    j["pass"] = outcome.pass;
    emit_json(out, j);
  } else if (config.format == OutFormat::Csv) {
    out << "kind,q,p,residual,ratio,certified\n";
    auto rows = [&](const char* kind, const std::vector<PhasePoint>& pts,
                    const std::vector<EnergyCertificate>& certs) {
      for (std::size_t n = 0; n < certs.size(); ++n) {
        out << kind << ',' << format_17(pts[n].state.q) << ',' << format_17(pts[n].state.p) << ','
            << format_17(certs[n].system_residual) << ','
            << (certs[n].ratio ? format_17(*certs[n].ratio) : "") << ','
            << (certs[n].certified() ? 1 : 0) << '\n';
      }
    };
    rows("on_shell", on_points, on);
    rows("off_shell", off_points, off);
  } else {
    out << "tolerances: energy < " << format_6(tol.energy) << ", off-shell residual > "
        << format_6(tol.off_shell_residual) << "\n\n"
        << "| set | points | certified | metric |\n|---|---|---|---|\n"
        << "| on-shell | " << on.size() << " | " << on_certified
        << " | max rel. energy dev " << format_6(on_max_dev) << " |\n"
        << "| off-shell | " << off.size() << " | " << off_certified << " | min residual "
        << format_6(off_min_residual) << " |\n";
  }
  return outcome;
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  if (name == "tabulate") return Command::Tabulate;
  if (name == "deform") return Command::Deform;
  if (name == "verify-lax") return Command::VerifyLax;
  if (name == "verify-jacobi") return Command::VerifyJacobi;
  if (name == "energy-check") return Command::EnergyCheck;
  return std::nullopt;
}

std::optional<OutFormat> parse_format(const std::string& name) {
  if (name == "json") return OutFormat::Json;
  if (name == "csv") return OutFormat::Csv;
  if (name == "markdown" || name == "md") return OutFormat::Markdown;
  return std::nullopt;
}

std::string command_name(Command c) {
  switch (c) {
    case Command::Tabulate: return "tabulate";
    case Command::Deform: return "deform";
    case Command::VerifyLax: return "verify-lax";
    case Command::VerifyJacobi: return "verify-jacobi";
    case Command::EnergyCheck: return "energy-check";
  }
  return "unknown";
}

void validate(const RunConfig& config) {
  if (!std::isfinite(config.omega) || !(config.omega > 0.0)) {
    throw UsageError("--omega must be positive");
  }
  if (!std::isfinite(config.p0) || !(config.p0 > 0.0)) {
    throw UsageError("--p0 must be positive (only the p0 > 0 branch is implemented)");
  }
  if (config.a && (!std::isfinite(*config.a) || !(*config.a > 0.0))) {
    throw UsageError("--a must be positive");
  }
  if (config.table != 1 && config.table != 2) throw UsageError("--table must be 1 or 2");
  if (config.command != Command::Tabulate) {
    if (config.samples < 2) throw UsageError("--samples must be at least 2");
    if (config.t_end && !(*config.t_end > config.t_start)) {
      throw UsageError("--t-end must exceed --t-start");
    }
    if (config.fd_step && !(*config.fd_step > 0.0)) {
      throw UsageError("--fd-step must be positive");
    }
  }
  try {
    (void)selected_types(config);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!config.out_path.empty()) {
    file.open(config.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot write " << config.out_path << '\n';
      return kExitUsage;
    }
    sink = &file;
  }

  Outcome outcome;
  try {
    switch (config.command) {
      case Command::Tabulate: outcome = tabulate(config, *sink); break;
      case Command::Deform: outcome = deform_cmd(config, *sink); break;
      case Command::VerifyLax: outcome = verify_lax(config, *sink); break;
      case Command::VerifyJacobi: outcome = verify_jacobi(config, *sink); break;
      case Command::EnergyCheck: outcome = energy_check(config, *sink); break;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitToleranceFailure;
  }
  sink->flush();
  if (!*sink) {
    err << "error: failed writing output\n";
    return kExitUsage;
  }
  return outcome.pass ? kExitOk : kExitToleranceFailure;
}

}  // namespace operadix::cli
