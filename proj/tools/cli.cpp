#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qhj/action.hpp"
#include "qhj/formulas.hpp"
#include "qhj/qhje.hpp"
#include "qhj/residual.hpp"

namespace qhj::cli {

namespace {

using report::format_number;
using report::format_optional;

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return v;
}

std::optional<double> parse_double(const std::string& s) {
  if (s.empty()) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) return std::nullopt;
  return v;
}

struct ReferenceRow {
  int n;
  int l;
  double R;
};

// Residuals for the radial Coulomb problem with e2 = 1, by principal number.
const std::vector<ReferenceRow>& table1_rows() {
  static const std::vector<ReferenceRow> rows = {
      {1, 0, std::numbers::pi / 2}, {2, 1, 0.269506}, {3, 1, 0.269506},  {3, 2, 0.158683},
      {4, 1, 0.269506},             {4, 2, 0.158683}, {4, 3, 0.112778},  {5, 4, 0.0875375},
      {5, 3, 0.112778},             {5, 2, 0.158683}, {5, 1, 0.269506},  {6, 5, 0.071548},
      {6, 4, 0.0875375},            {6, 3, 0.112778}, {6, 2, 0.158683},  {6, 1, 0.269506},
  };
  return rows;
}

struct QuarticRow {
  int n;
  double E;
  double R;
};

// Quartic oscillator x^4 with a = 1.
const std::vector<QuarticRow>& table2_rows() {
  static const std::vector<QuarticRow> rows = {
      {0, 0.667986, 0.255796}, {1, 2.393644, 0.044912},   {2, 4.696795, 0.0331155},
      {3, 7.335730, 0.0235851}, {4, 10.244308, 0.0184221},
  };
  return rows;
}

int level_label(const PotentialModel& model, int nodes) {
  if (model.family() == Family::CoulombCentrifugal) return nodes + model.as<CoulombParams>().l + 1;
  return nodes;
}

// Per-level R values from a CSV file with columns n and R.
std::map<int, double> read_r_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open R file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  report::Table t;
  try {
    t = report::parse_csv(buf.str());
  } catch (const std::invalid_argument& e) {
    throw UsageError("R file '" + path + "': " + e.what());
  }
  std::size_t in_col = t.header.size();
  std::size_t r_col = t.header.size();
  for (std::size_t i = 0; i < t.header.size(); ++i) {
    if (t.header[i] == "n") in_col = i;
    if (t.header[i] == "R") r_col = i;
  }
  if (in_col == t.header.size() || r_col == t.header.size()) {
    throw UsageError("R file '" + path + "' needs columns n and R");
  }
  std::map<int, double> out;
  for (const auto& row : t.rows) {
    const auto n = parse_int(row[in_col]);
    const auto R = parse_double(row[r_col]);
    if (!n || !R) throw UsageError("R file '" + path + "': bad row");
    out[*n] = *R;
  }
  return out;
}

}  // namespace

LevelRange parse_levels(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const auto v = parse_int(text);
    if (!v || *v < 0) throw UsageError("level must be a non-negative integer, got '" + std::string(text) + "'");
    return {*v, *v};
  }
  const auto a = parse_int(text.substr(0, dots));
  const auto b = parse_int(text.substr(dots + 2));
  if (!a || !b || *a < 0 || *b < *a) {
    throw UsageError("level range must look like 0..4 with first <= last, got '" + std::string(text) + "'");
  }
  return {*a, *b};
}

PotentialModel build_model(const RunConfig& config) {
  try {
    return make_model(config.family, config.params);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<int> selected_nodes(const RunConfig& config, const PotentialModel& model) {
  std::vector<int> out;
  if (model.family() == Family::CoulombCentrifugal) {
    const int l = model.as<CoulombParams>().l;
    if (config.n && config.nr) throw UsageError("give either --n or --nr, not both");
    if (config.nr) {
      for (int k = config.nr->first; k <= config.nr->last; ++k) out.push_back(k);
      return out;
    }
    const LevelRange r = config.n.value_or(LevelRange{l + 1, l + 1});
    if (r.first < l + 1) {
      throw UsageError("principal number n must be >= l + 1 = " + std::to_string(l + 1));
    }
    for (int k = r.first; k <= r.last; ++k) out.push_back(k - l - 1);
    return out;
  }
  if (config.nr) throw UsageError("--nr applies to the hydrogen family only");
  const LevelRange r = config.n.value_or(LevelRange{0, 0});
  for (int k = r.first; k <= r.last; ++k) out.push_back(k);
  return out;
}

void apply_tolerance_override(RunConfig& config) {
  const char* env = std::getenv("QHJ_TOL_OVERRIDE");
  if (!env || !*env) return;
  const auto scale = parse_double(env);
  if (!scale || !(*scale > 0.0) || !std::isfinite(*scale)) {
    throw UsageError("QHJ_TOL_OVERRIDE must be a positive number");
  }
  config.eigen.tolerance *= *scale;
}

report::Table cmd_eigen(const RunConfig& config) {
  const PotentialModel model = build_model(config);
  report::Table t;
  t.header = {"n", "nodes", "E", "E_wkb", "E_exact", "E_minus_exact", "E_wkb_minus_E"};
  for (int nodes : selected_nodes(config, model)) {
    const double E = eigenvalue(model, nodes, config.eigen);
    const double E_wkb = wkb_energy(model, nodes);
    const auto exact = closed_form_energies(model, nodes).E_exact;
    std::optional<double> diff;
    if (exact) diff = E - *exact;
    t.add_row({std::to_string(level_label(model, nodes)), std::to_string(nodes),
               format_number(E, config.full), format_number(E_wkb, config.full),
               format_optional(exact, config.full), format_optional(diff, config.full),
               format_number(E_wkb - E, config.full)});
  }
  return t;
}

report::Table cmd_residual(const RunConfig& config) {
  const PotentialModel model = build_model(config);
  const auto nodes = selected_nodes(config, model);
  std::vector<ResidualReport> rows;
  std::vector<double> R;
  for (int k : nodes) {
    rows.push_back(residual_report(model, k, std::nullopt, config.with_fields, config.eigen));
    R.push_back(rows.back().R_B);
  }
  const CaseTag tag = classify_residuals(R);
  report::Table t;
  t.header = {"family", "params", "n", "E", "I_classical", "quantum_integral", "R_A", "R_B", "R_closed", "case"};
  for (const auto& r : rows) {
    t.add_row({r.family, r.params, std::to_string(r.n), format_number(r.E, config.full),
               format_number(r.I_classical, config.full), format_optional(r.quantum_integral, config.full),
               format_optional(r.R_A, config.full), format_number(r.R_B, config.full),
               format_optional(r.R_closed, config.full), std::string(case_name(tag))});
  }
  return t;
}

report::Table cmd_table(const RunConfig& config) {
  report::Table t;
  if (config.table == "table1") {
    t.header = {"n", "l", "R_computed", "R_paper", "diff"};
    for (const auto& row : table1_rows()) {
      const PotentialModel model = PotentialModel::coulomb(1.0, row.l);
      const int nodes = row.n - row.l - 1;
      const double R = residual_route_b(model, nodes, eigenvalue(model, nodes, config.eigen));
      t.add_row({std::to_string(row.n), std::to_string(row.l), format_number(R, config.full),
                 format_number(row.R, config.full), format_number(R - row.R, config.full)});
    }
    return t;
  }
  if (config.table == "table2") {
    t.header = {"n", "E_computed", "E_paper", "E_diff", "R_computed", "R_paper", "R_diff"};
    const PotentialModel model = PotentialModel::quartic(1.0);
    for (const auto& row : table2_rows()) {
      const double E = eigenvalue(model, row.n, config.eigen);
      const double R = residual_route_b(model, row.n, E);
      t.add_row({std::to_string(row.n), format_number(E, config.full), format_number(row.E, config.full),
                 format_number(E - row.E, config.full), format_number(R, config.full),
                 format_number(row.R, config.full), format_number(R - row.R, config.full)});
    }
    return t;
  }
  throw UsageError("unknown table '" + config.table + "' (expected table1 or table2)");
}

report::Table cmd_fields(const RunConfig& config) {
  const PotentialModel model = build_model(config);
  const auto nodes = selected_nodes(config, model);
  if (nodes.size() != 1) throw UsageError("fields needs a single level");
  const EigenState state = eigenstate(model, nodes.front(), config.eigen);
  QhjFieldOptions opts;
  opts.n_points = config.field_points;
  const QhjFields f = qhj_fields(model, state.E, opts);
  const auto psi_rec = reconstruct_wavefunction(f, state);
  const auto psi_num = interpolate_state(state, f.x);

  report::Table t;
  t.header = {"x", "X", "W_classical", "Xp", "p_classical", "Y", "F", "G", "psi_reconstructed", "psi_numerov"};
  const bool full = config.full;
  for (std::size_t i = 0; i < f.x.size(); ++i) {
    t.add_row({format_number(f.x[i], full), format_number(f.X[i], full), format_number(f.W_classical[i], full),
               format_number(f.Xp[i], full), format_number(f.p_classical[i], full), format_number(f.Y[i], full),
               format_number(f.F[i], full), format_number(f.G[i], full), format_number(psi_rec[i], full),
               format_number(psi_num[i], full)});
  }
  return t;
}

report::Table cmd_correct(const RunConfig& config) {
  const PotentialModel model = build_model(config);
  const auto nodes = selected_nodes(config, model);
  const bool automatic = config.r_source == "auto";
  const auto scalar = automatic ? std::nullopt : parse_double(config.r_source);
  std::map<int, double> per_level;
  if (!automatic && !scalar) per_level = read_r_file(config.r_source);
  if (scalar && nodes.size() > 1 && model.family() == Family::Quartic) {
    throw UsageError("the quartic residual depends on n; give per-level values in a file or use --r auto");
  }

  report::Table t;
  t.header = {"n", "nodes", "R", "E_corrected", "E_exact", "error"};
  for (int k : nodes) {
    const int label = level_label(model, k);
    const auto closed = closed_form_energies(model, k).E_exact;
    double R = 0.0;
    std::optional<double> exact = closed;
    if (automatic) {
      const double E = eigenvalue(model, k, config.eigen);
      R = residual_route_b(model, k, E);
      if (!exact) exact = E;
    } else if (scalar) {
      R = *scalar;
    } else {
      auto it = per_level.find(label);
      if (it == per_level.end()) throw UsageError("R file has no value for n=" + std::to_string(label));
      R = it->second;
    }
    if (!exact) exact = eigenvalue(model, k, config.eigen);
    const double E = corrected_energy(model, k, R);
    t.add_row({std::to_string(label), std::to_string(k), format_number(R, config.full),
               format_number(E, config.full), format_optional(exact, config.full),
               format_number(E - *exact, config.full)});
  }
  return t;
}

std::string render(const report::Table& table, Format format) {
  if (format == Format::Csv) return report::to_csv(table);
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const std::string& cell = row[i];
      if (cell.empty()) {
        obj[table.header[i]] = nullptr;
      } else if (const auto v = parse_double(cell); v && std::isfinite(*v)) {
        if (const auto iv = parse_int(cell)) {
          obj[table.header[i]] = *iv;
        } else {
          obj[table.header[i]] = *v;
        }
      } else {
        obj[table.header[i]] = cell;
      }
    }
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

namespace {

void add_model_options(CLI::App& app, RunConfig& cfg, std::map<std::string, double>& raw) {
  app.add_option("--family", cfg.family, "harmonic, morse, hydrogen, cot2 or quartic")
      ->check(CLI::IsMember({"harmonic", "morse", "hydrogen", "cot2", "quartic"}));
  for (const char* key : {"omega", "V0", "a", "e2", "l", "hbar", "mass"}) {
    app.add_option_function<double>(
        std::string("--") + key, [&raw, key](double v) { raw[key] = v; }, std::string("potential parameter ") + key);
  }
}

void add_output_options(CLI::App& app, RunConfig& cfg, std::string& format) {
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output,-o", cfg.output, "write to this file instead of standard output");
  app.add_flag("--full", cfg.full, "print 17 significant digits");
  app.add_option("--tol", cfg.eigen.tolerance, "eigenvalue tolerance")->check(CLI::PositiveNumber);
  app.add_option("--max-points", cfg.eigen.max_points, "largest Numerov grid")->check(CLI::Range(101, 50000001));
  app.add_option("--min-points", cfg.eigen.min_points, "smallest Numerov grid")->check(CLI::Range(101, 50000001));
}

void add_level_options(CLI::App& app, std::string& n, std::string& nr) {
  app.add_option("--n", n, "level or range a..b (principal number for hydrogen)");
  app.add_option("--nr", nr, "hydrogen radial quantum number or range");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::map<std::string, double> raw;
  std::string format = "csv";
  std::string n_text;
  std::string nr_text;

  CLI::App app{"Semiclassical and quantum Hamilton-Jacobi quantization of 1-D bound states", "qhj"};
  app.require_subcommand(1);

  auto* eigen = app.add_subcommand("eigen", "Numerov eigenvalues next to the WKB and exact levels");
  auto* residual = app.add_subcommand("residual", "Residual R per level and the case tag");
  auto* table = app.add_subcommand("table", "Reproduce a reference table (table1 or table2)");
  auto* fields = app.add_subcommand("fields", "Dump the QHJ fields of one level as CSV");
  auto* correct = app.add_subcommand("correct", "Energies from the corrected quantization rule");

  for (auto* sub : {eigen, residual, fields, correct}) {
    add_model_options(*sub, cfg, raw);
    add_level_options(*sub, n_text, nr_text);
  }
  for (auto* sub : {eigen, residual, table, fields, correct}) add_output_options(*sub, cfg, format);
  residual->add_flag("--with-fields", cfg.with_fields, "also solve the QHJ fields (route A)");
  fields->add_option("--points", cfg.field_points, "samples between the turning points")
      ->check(CLI::Range(3, 10000001));
  correct->add_option("--r", cfg.r_source, "auto, a value, or a CSV file with columns n,R");
  table->add_option("which", cfg.table, "table1 or table2")
      ->required()
      ->check(CLI::IsMember({"table1", "table2"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    cfg.params = raw;
    cfg.format = format == "json" ? Format::Json : Format::Csv;
    if (!n_text.empty()) cfg.n = parse_levels(n_text);
    if (!nr_text.empty()) cfg.nr = parse_levels(nr_text);
    apply_tolerance_override(cfg);
    if (cfg.eigen.min_points > cfg.eigen.max_points) throw UsageError("--min-points exceeds --max-points");

    report::Table result;
    if (eigen->parsed()) result = cmd_eigen(cfg);
    if (residual->parsed()) result = cmd_residual(cfg);
    if (table->parsed()) result = cmd_table(cfg);
    if (fields->parsed()) result = cmd_fields(cfg);
    if (correct->parsed()) result = cmd_correct(cfg);

    const std::string text = render(result, cfg.format);
    if (cfg.output.empty()) {
      out << text;
    } else {
      std::ofstream file(cfg.output, std::ios::binary);
      if (!file) throw UsageError("cannot write '" + cfg.output + "'");
      file << text;
    }
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "numerical failure in stage " << e.stage() << ": " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "numerical failure in stage unknown: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace qhj::cli
