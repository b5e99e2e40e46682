// qotto: spectrum evaluation, single-cycle breakdowns, coupling sweeps,
// critical-point reports and the self-check battery for the two-qubit XY-chain
// quantum Otto engine. CSV/JSON output for downstream plotting.
//
// Exit codes: 0 success, 1 verify failure, 2 invalid parameters, 3 I/O
// failure, 4 search failure.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qotto/qotto.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalidParams = 2;
constexpr int kExitIoFailure = 3;
constexpr int kExitSearchFailure = 4;

// Shortest decimal form that round-trips the double exactly (<= 17 significant
// digits by construction).
std::string format_double(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

struct Options {
  double gamma = 0.4;
  double eta = 0.3;
  double t1 = 1000.0;
  double j1 = 8.0;
  double t2 = 0.1;
  std::optional<double> j = 8.0;  // spectrum coupling
  std::optional<double> j2;
  std::optional<double> j2_min;
  std::optional<double> j2_max;
  int steps = 1000;
  std::string format;  // csv | json; per-command default when empty
  std::string out;     // empty = stdout
  std::string config;
};

void add_model_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--gamma", o.gamma, "anisotropy, in [-1, 1]");
  cmd->add_option("--eta", o.eta, "transverse-field ratio B = eta * J, >= 0");
}

void add_engine_flags(CLI::App* cmd, Options& o) {
  add_model_flags(cmd, o);
  cmd->add_option("--t1", o.t1, "hot bath temperature");
  cmd->add_option("--j1", o.j1, "hot-stage coupling");
  cmd->add_option("--t2", o.t2, "cold bath temperature");
}

void add_output_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", o.out, "output file path (default: stdout)");
  cmd->add_option("--config", o.config, "JSON file with the same keys; flags override");
}

// Flags beat config values; config values beat defaults.
void apply_config(const CLI::App* cmd, Options& o) {
  if (o.config.empty()) return;
  std::ifstream in(o.config);
  if (!in) throw qotto::InvalidParams("config file not readable: " + o.config);
  ordered_json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw qotto::InvalidParams(std::string("config file is not valid JSON: ") + e.what());
  }
  const auto flag_given = [&](const char* flag) {
    const CLI::Option* opt = cmd->get_option_no_throw(flag);
    return opt != nullptr && opt->count() > 0;
  };
  const auto take_double = [&](const char* flag, const char* key, auto setter) {
    if (doc.contains(key) && !flag_given(flag)) setter(doc[key].get<double>());
  };
  take_double("--gamma", "gamma", [&](double v) { o.gamma = v; });
  take_double("--eta", "eta", [&](double v) { o.eta = v; });
  take_double("--t1", "t1", [&](double v) { o.t1 = v; });
  take_double("--j1", "j1", [&](double v) { o.j1 = v; });
  take_double("--t2", "t2", [&](double v) { o.t2 = v; });
  take_double("--j", "j", [&](double v) { o.j = v; });
  take_double("--j2", "j2", [&](double v) { o.j2 = v; });
  take_double("--j2-min", "j2_min", [&](double v) { o.j2_min = v; });
  take_double("--j2-max", "j2_max", [&](double v) { o.j2_max = v; });
  if (doc.contains("steps") && cmd->count("--steps") == 0) o.steps = doc["steps"].get<int>();
  if (doc.contains("format") && cmd->count("--format") == 0)
    o.format = doc["format"].get<std::string>();
  if (doc.contains("out") && cmd->count("--out") == 0) o.out = doc["out"].get<std::string>();
}

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output path: " << path << "\n";
    return kExitIoFailure;
  }
  out << text;
  if (!out) {
    std::cerr << "error: write failed: " << path << "\n";
    return kExitIoFailure;
  }
  return kExitOk;
}

const char* kCsvHeader =
    "j2,W_AB,term_entropy,term_T1_relent,term_T2_relent,Q2,Q4,w_A,w_B,deficit,S1,S2,"
    "mutual_info_2,concurrence_2,p21,p22,p23,p24";

std::string row_to_csv(const qotto::SweepRow& r) {
  std::ostringstream os;
  os << format_double(r.j2) << ',' << format_double(r.w_ab) << ',' << format_double(r.term_entropy)
     << ',' << format_double(r.term_t1_relent) << ',' << format_double(r.term_t2_relent) << ','
     << format_double(r.q2) << ',' << format_double(r.q4) << ',' << format_double(r.w_a) << ','
     << format_double(r.w_b) << ',' << format_double(r.deficit) << ',' << format_double(r.s1)
     << ',' << format_double(r.s2) << ',' << format_double(r.mutual_info_2) << ','
     << format_double(r.concurrence_2) << ',' << format_double(r.p2[0]) << ','
     << format_double(r.p2[1]) << ',' << format_double(r.p2[2]) << ',' << format_double(r.p2[3]);
  return os.str();
}

ordered_json row_to_json(const qotto::SweepRow& r) {
  ordered_json j;
  j["j2"] = r.j2;
  j["W_AB"] = r.w_ab;
  j["term_entropy"] = r.term_entropy;
  j["term_T1_relent"] = r.term_t1_relent;
  j["term_T2_relent"] = r.term_t2_relent;
  j["Q2"] = r.q2;
  j["Q4"] = r.q4;
  j["w_A"] = r.w_a;
  j["w_B"] = r.w_b;
  j["deficit"] = r.deficit;
  j["S1"] = r.s1;
  j["S2"] = r.s2;
  j["mutual_info_2"] = r.mutual_info_2;
  j["concurrence_2"] = r.concurrence_2;
  j["p21"] = r.p2[0];
  j["p22"] = r.p2[1];
  j["p23"] = r.p2[2];
  j["p24"] = r.p2[3];
  return j;
}

int cmd_spectrum(const Options& o) {
  const qotto::ModelParams params(o.gamma, o.j.value(), o.eta);
  const qotto::XYSpectrum sp = qotto::analytic_spectrum(params);
  ordered_json doc;
  doc["gamma"] = params.gamma;
  doc["eta"] = params.eta;
  doc["j"] = params.j;
  doc["B_m"] = params.field();
  doc["calB"] = params.effective_field();
  doc["energies"] = sp.energies;
  ordered_json states = ordered_json::array();
  for (const auto& state : sp.states) {
    ordered_json vec = ordered_json::array();
    for (const auto& c : state) vec.push_back(std::real(c));  // all components real here
    states.push_back(vec);
  }
  doc["states"] = states;
  return write_output(doc.dump(2) + "\n", o.out);
}

int cmd_point(const Options& o) {
  if (!o.j2) throw qotto::InvalidParams("point: --j2 is required");
  const qotto::EnginePoint pt(o.gamma, o.eta, o.t1, o.j1, o.t2, *o.j2);
  const qotto::SweepRow row = qotto::evaluate_point(pt);
  if (o.format == "csv") {
    std::string text = std::string(kCsvHeader) + "\n" + row_to_csv(row) + "\n";
    return write_output(text, o.out);
  }
  return write_output(row_to_json(row).dump(2) + "\n", o.out);
}

int cmd_sweep(const Options& o) {
  const qotto::EngineTemplate tmpl(o.gamma, o.eta, o.t1, o.j1, o.t2);
  qotto::SweepGrid grid{};
  grid.j2_min = o.j2_min ? *o.j2_min : qotto::find_j_min(tmpl);
  grid.j2_max = o.j2_max ? *o.j2_max : tmpl.j1;
  grid.steps = o.steps;
  const auto rows = qotto::sweep(tmpl, grid);
  if (o.format == "json") {
    ordered_json doc = ordered_json::array();
    for (const auto& r : rows) doc.push_back(row_to_json(r));
    return write_output(doc.dump(2) + "\n", o.out);
  }
  std::ostringstream os;
  os << kCsvHeader << "\n";
  for (const auto& r : rows) os << row_to_csv(r) << "\n";
  return write_output(os.str(), o.out);
}

int cmd_critical(const Options& o) {
  const qotto::EngineTemplate tmpl(o.gamma, o.eta, o.t1, o.j1, o.t2);
  const qotto::CriticalReport rep = qotto::critical_report(tmpl);
  ordered_json doc;
  doc["J_min"] = rep.j_min;
  doc["J_max"] = rep.j_max;
  doc["W_max"] = rep.w_max;
  doc["concurrence_at_J_max"] = rep.concurrence_at_j_max_total;
  doc["j_max"] = rep.j_max_subsystem;
  doc["w_max"] = rep.w_max_subsystem;
  doc["concurrence_at_j_max"] = rep.concurrence_at_j_max_subsystem;
  doc["j_crit"] = rep.j_crit;
  doc["C_crit"] = rep.c_crit;
  doc["separability_threshold"] = rep.separability_threshold;
  doc["I_min"] = rep.i_min;
  doc["C_min"] = rep.c_min;
  return write_output(doc.dump(2) + "\n", o.out);
}

int cmd_verify(const Options& o) {
  const qotto::VerifyReport rep = qotto::verify_suite();
  std::ostringstream os;
  for (const auto& c : rep.checks) {
    os << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  measured=" << format_double(c.measured)
       << "  bound=" << format_double(c.bound) << "\n";
  }
  std::size_t failed = 0;
  for (const auto& c : rep.checks)
    if (!c.pass) ++failed;
  os << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed") << " ("
     << rep.checks.size() << " total)\n";
  const int io = write_output(os.str(), o.out);
  if (io != kExitOk) return io;
  return rep.all_pass() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-qubit XY-chain quantum Otto engine calculator"};
  app.require_subcommand(1);
  Options o;
  double j_flag = 8.0, j2_flag = 0.0, j2_min_flag = 0.0, j2_max_flag = 0.0;

  CLI::App* spectrum = app.add_subcommand("spectrum", "closed-form eigensystem of the chain");
  add_model_flags(spectrum, o);
  spectrum->add_option("--j", j_flag, "coupling");
  add_output_flags(spectrum, o);

  CLI::App* point = app.add_subcommand("point", "full breakdown of one engine cycle");
  add_engine_flags(point, o);
  point->add_option("--j2", j2_flag, "cold-stage coupling");
  add_output_flags(point, o);

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "sweep the cold-stage coupling");
  add_engine_flags(sweep_cmd, o);
  sweep_cmd->add_option("--j2-min", j2_min_flag, "grid start (default: (t2/t1) j1)");
  sweep_cmd->add_option("--j2-max", j2_max_flag, "grid end (default: j1)");
  sweep_cmd->add_option("--steps", o.steps, "number of rows, endpoints included");
  add_output_flags(sweep_cmd, o);

  CLI::App* critical = app.add_subcommand("critical", "locate the cycle's critical points");
  add_engine_flags(critical, o);
  add_output_flags(critical, o);

  CLI::App* verify = app.add_subcommand("verify", "run the cross-check battery");
  add_output_flags(verify, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidParams;
  }

  CLI::App* active = app.get_subcommands().front();
  if (spectrum->parsed() && spectrum->count("--j") > 0) o.j = j_flag;
  if (point->parsed() && point->count("--j2") > 0) o.j2 = j2_flag;
  if (sweep_cmd->parsed()) {
    if (sweep_cmd->count("--j2-min") > 0) o.j2_min = j2_min_flag;
    if (sweep_cmd->count("--j2-max") > 0) o.j2_max = j2_max_flag;
  }
  try {
    apply_config(active, o);
    if (spectrum->parsed()) return cmd_spectrum(o);
    if (point->parsed()) return cmd_point(o);
    if (sweep_cmd->parsed()) return cmd_sweep(o);
    if (critical->parsed()) return cmd_critical(o);
    return cmd_verify(o);
  } catch (const qotto::InvalidParams& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidParams;
  } catch (const qotto::InvalidTemperature& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidParams;
  } catch (const qotto::InvalidGrid& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidParams;
  } catch (const qotto::SearchFailed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSearchFailure;
  } catch (const qotto::NoBracket& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSearchFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidParams;
  }
}
