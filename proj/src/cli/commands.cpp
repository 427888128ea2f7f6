#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "sentinet/bounds.hpp"
#include "sentinet/channel.hpp"
#include "sentinet/cli.hpp"
#include "sentinet/error.hpp"
#include "sentinet/ising.hpp"
#include "sentinet/mc.hpp"

namespace sentinet::cli {

namespace {

const std::map<std::string, Command> kCommands{
    {"partition", Command::partition},
    {"detect", Command::detect},
    {"simulate", Command::simulate},
    {"bound", Command::bound},
    {"exponent-sweep", Command::exponent_sweep},
};

std::string_view detector_name(DetectorKind k) { return k == DetectorKind::map ? "map" : "majority"; }

std::string scalar_to_flag_value(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
  if (v.is_number_float()) {
    std::ostringstream s;
    s << std::setprecision(17) << v.get<double>();
    return s.str();
  }
  throw UsageError("config value " + v.dump() + " must be a string or a number");
}

// Turns a JSON object into "--key=value" tokens. Keys use the long flag
// names; underscores are accepted in place of dashes.
std::vector<std::string> config_tokens(const nlohmann::json& cfg, std::string& command) {
  if (!cfg.is_object()) throw UsageError("config file must hold a JSON object");
  std::vector<std::string> tokens;
  for (const auto& [key, value] : cfg.items()) {
    std::string flag = key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    if (flag == "command") {
      if (!value.is_string()) throw UsageError("config 'command' must be a string");
      command = value.get<std::string>();
      continue;
    }
    if (value.is_boolean()) {
      if (value.get<bool>()) tokens.push_back("--" + flag);
      continue;
    }
    if (value.is_null()) continue;
    tokens.push_back("--" + flag + "=" + scalar_to_flag_value(value));
  }
  return tokens;
}

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("config file '" + path + "': " + e.what());
  }
}

// Splices the JSON config (if any) in front of the explicit flags.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> user;
  std::optional<std::string> config_path;
  for (std::size_t i = 1; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config needs a path");
      config_path = args[++i];
    } else if (a.rfind("--config=", 0) == 0) {
      config_path = a.substr(9);
    } else {
      user.push_back(a);
    }
  }

  std::string command;
  std::vector<std::string> from_file;
  if (config_path) from_file = config_tokens(load_json(*config_path), command);

  auto sub = std::find_if(user.begin(), user.end(), [](const std::string& a) { return kCommands.count(a) > 0; });
  std::vector<std::string> out{args.empty() ? std::string("sentinet") : args.front()};
  if (sub != user.end()) {
    out.insert(out.end(), user.begin(), sub + 1);
    out.insert(out.end(), from_file.begin(), from_file.end());
    out.insert(out.end(), sub + 1, user.end());
  } else {
    if (!command.empty()) out.push_back(command);
    out.insert(out.end(), from_file.begin(), from_file.end());
    out.insert(out.end(), user.begin(), user.end());
  }
  return out;
}

struct Raw {
  std::string topology = "complete";
  std::string method = "both";
  std::string detector = "map";
  std::string sweep;
};

void add_topology(CLI::App& app, RunConfig& cfg, Raw& raw) {
  app.add_option("--topology", raw.topology, "complete, star, ring (chain) or custom");
  app.add_option("--n", cfg.n, "node count for stylized topologies");
  app.add_option("--edges", cfg.edges_path, "edge-list file for --topology custom");
}

void add_channel(CLI::App& app, RunConfig& cfg) {
  app.add_option("--pbsc", cfg.pbsc, "channel crossover probability in [0, 0.5]");
  app.add_option("--epsilon", cfg.epsilon, "channel weight 1/2 log((1-p)/p)");
}

void add_common(CLI::App& app, RunConfig& cfg) {
  app.add_option("--out", cfg.out_path, "write output to this file instead of stdout");
  app.add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream s;
  s << std::setprecision(12) << v;
  return s.str();
}

double RunConfig::resolved_epsilon() const {
  if (pbsc && epsilon) throw UsageError("give either --pbsc or --epsilon, not both");
  if (epsilon) {
    if (!(*epsilon >= 0.0)) throw DomainError("epsilon must be >= 0");
    return *epsilon;
  }
  if (pbsc) return epsilon_from_pbsc(*pbsc);
  throw UsageError("channel parameter missing: give --pbsc or --epsilon");
}

double RunConfig::resolved_pbsc() const { return pbsc ? *pbsc : pbsc_from_epsilon(resolved_epsilon()); }

Network RunConfig::network() const {
  if (topology == Topology::custom) {
    if (edges_path.empty()) throw UsageError("--topology custom needs --edges <file>");
    return load_edge_list(edges_path);
  }
  if (!edges_path.empty()) throw UsageError("--edges only applies to --topology custom");
  if (n == 0) throw UsageError("--n is required for --topology " + std::string(to_string(topology)));
  return make_topology(topology, n);
}

std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out) {
  const std::vector<std::string> tokens = expand_config(args);

  RunConfig cfg;
  Raw raw;
  CLI::App app{"Network-aided latent sentiment detection: partition functions, MAP detection, "
               "error bounds and exponents"};
  app.name(tokens.front());
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "help for every command");

  auto* partition = app.add_subcommand("partition", "log partition function, closed form and/or enumeration");
  add_topology(*partition, cfg, raw);
  partition->add_option("--theta", cfg.theta, "coupling (inverse temperature)");
  partition->add_option("--field", cfg.field, "signed uniform field h");
  partition->add_option("--method", raw.method, "closed, brute or both");
  add_common(*partition, cfg);

  auto* detect = app.add_subcommand("detect", "decide the latent bit from observations y");
  add_topology(*detect, cfg, raw);
  detect->add_option("--theta", cfg.theta);
  detect->add_option("--gamma", cfg.gamma);
  add_channel(*detect, cfg);
  detect->add_option("--y", cfg.y_text, "observations, e.g. \"+1,-1,+1\"");
  detect->add_option("--y-file", cfg.y_path, "file holding the observations");
  detect->add_option("--detector", raw.detector, "map, majority or both");
  add_common(*detect, cfg);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo error rate of the detectors");
  add_topology(*simulate, cfg, raw);
  simulate->add_option("--theta", cfg.theta);
  simulate->add_option("--gamma", cfg.gamma);
  add_channel(*simulate, cfg);
  simulate->add_option("--detector", raw.detector, "map, majority or both (paired)");
  simulate->add_option("--trials", cfg.trials, "trial count (each runs t = -1 and t = +1)");
  simulate->add_option("--seed", cfg.seed);
  add_common(*simulate, cfg);

  auto* bound = app.add_subcommand("bound", "upper bound on the MAP error probability");
  add_topology(*bound, cfg, raw);
  bound->add_option("--theta", cfg.theta);
  bound->add_option("--gamma", cfg.gamma);
  add_channel(*bound, cfg);
  add_common(*bound, cfg);

  auto* sweep = app.add_subcommand("exponent-sweep", "error exponents of all topologies over one parameter");
  sweep->add_option("--sweep", raw.sweep, "theta, gamma or epsilon")->required();
  sweep->add_option("--from", cfg.from)->required();
  sweep->add_option("--to", cfg.to)->required();
  sweep->add_option("--steps", cfg.steps)->required();
  sweep->add_option("--theta", cfg.theta);
  sweep->add_option("--gamma", cfg.gamma);
  add_channel(*sweep, cfg);
  sweep->add_option("--n-eval", cfg.n_eval, "node count used for the finite-n exponent");
  sweep->add_flag("--raw", cfg.raw, "append unclamped exponent columns");
  add_common(*sweep, cfg);

  std::vector<std::string> reversed(tokens.rbegin(), tokens.rend() - 1);
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  for (const auto& [name, command] : kCommands) {
    if (app.got_subcommand(name)) cfg.command = command;
  }
  cfg.topology = topology_from_string(raw.topology);

  if (raw.method == "closed") cfg.method = PartitionMethod::closed;
  else if (raw.method == "brute") cfg.method = PartitionMethod::brute;
  else if (raw.method == "both") cfg.method = PartitionMethod::both;
  else throw UsageError("--method must be closed, brute or both");

  if (raw.detector == "map") cfg.detectors = {DetectorKind::map};
  else if (raw.detector == "majority") cfg.detectors = {DetectorKind::majority};
  else if (raw.detector == "both") cfg.detectors = {DetectorKind::map, DetectorKind::majority};
  else throw UsageError("--detector must be map, majority or both");

  if (!raw.sweep.empty()) cfg.sweep = sweep_variable_from_string(raw.sweep);
  if (cfg.pbsc && cfg.epsilon) throw UsageError("give either --pbsc or --epsilon, not both");
  return cfg;
}

void run_partition(const RunConfig& cfg, std::ostream& out) {
  const Network g = cfg.network();
  if (!(cfg.theta >= 0.0) || !std::isfinite(cfg.theta)) throw DomainError("theta must be finite and >= 0");
  if (!std::isfinite(cfg.field)) throw DomainError("field must be finite");
  std::optional<double> closed;
  std::optional<double> brute;
  if (cfg.method != PartitionMethod::brute) closed = log_Z_closed(g.topology(), g.size(), cfg.theta, cfg.field);
  if (cfg.method != PartitionMethod::closed) brute = log_Z_brute(g, cfg.theta, cfg.field);

  out << "topology,n,theta,field,log_z_closed,log_z_brute,abs_diff\n";
  out << to_string(g.topology()) << ',' << g.size() << ',' << format_number(cfg.theta) << ','
      << format_number(cfg.field) << ',' << (closed ? format_number(*closed) : "") << ','
      << (brute ? format_number(*brute) : "") << ','
      << (closed && brute ? format_number(std::abs(*closed - *brute)) : "") << '\n';
}

void run_detect(const RunConfig& cfg, std::ostream& out) {
  const Network g = cfg.network();
  if (cfg.y_text.empty() == cfg.y_path.empty()) throw UsageError("give exactly one of --y or --y-file");
  std::string text = cfg.y_text;
  if (!cfg.y_path.empty()) {
    std::ifstream in(cfg.y_path);
    if (!in) throw UsageError("cannot open '" + cfg.y_path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  const SpinVector y = SpinVector::parse(text);
  const ModelParams p{cfg.theta, cfg.gamma, cfg.resolved_epsilon()};
  p.validate();

  out << "detector,t_hat,log_l\n";
  for (DetectorKind kind : cfg.detectors) {
    const DetectionResult r = kind == DetectorKind::map ? map_detect(y, g, p) : majority_detect(y, p);
    if (y.size() != g.size()) throw DimensionError("observation length does not match the network");
    out << detector_name(kind) << ',' << (r.t_hat > 0 ? "+1" : "-1") << ',' << format_number(r.log_l) << '\n';
  }
}

void run_simulate(const RunConfig& cfg, std::ostream& out) {
  const Network g = cfg.network();
  const ModelParams p{cfg.theta, cfg.gamma, cfg.resolved_epsilon()};
  p.validate();
  McOptions opt;
  opt.trials = cfg.trials;
  opt.seed = cfg.seed;
  opt.threads = cfg.threads;

  std::vector<ErrorEstimate> rows;
  if (cfg.detectors.size() == 2) {
    const PairedComparison cmp = compare_detectors(g, p, opt);
    rows = {cmp.map, cmp.majority};
  } else {
    rows = {estimate_pe(g, p, cfg.detectors.front(), opt)};
  }

  out << "topology,n,theta,gamma,pbsc,detector,trials,p_hat,ci_low,ci_high,seed\n";
  for (const ErrorEstimate& e : rows) {
    out << to_string(g.topology()) << ',' << g.size() << ',' << format_number(p.theta) << ','
        << format_number(p.gamma) << ',' << format_number(cfg.resolved_pbsc()) << ',' << detector_name(e.detector)
        << ',' << e.trials << ',' << format_number(e.p_hat) << ',' << format_number(e.ci_low) << ','
        << format_number(e.ci_high) << ',' << e.seed << '\n';
  }
}

void run_bound(const RunConfig& cfg, std::ostream& out) {
  const Network g = cfg.network();
  const ModelParams p{cfg.theta, cfg.gamma, cfg.resolved_epsilon()};
  const BoundResult r = pe_upper_bound(g, p);
  out << "topology,n,theta,gamma,epsilon,log_pe_ub,pe_ub,b_star,beta_star\n";
  out << to_string(g.topology()) << ',' << g.size() << ',' << format_number(p.theta) << ','
      << format_number(p.gamma) << ',' << format_number(p.epsilon) << ',' << format_number(r.log_pe_ub) << ','
      << format_number(std::exp(r.log_pe_ub)) << ',' << format_number(r.b_star) << ','
      << format_number(r.beta_star) << '\n';
}

void run_exponent_sweep(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.sweep) throw UsageError("--sweep is required");
  SweepSpec spec;
  spec.variable = *cfg.sweep;
  spec.from = cfg.from;
  spec.to = cfg.to;
  spec.steps = cfg.steps;
  spec.n_eval = cfg.n_eval;
  spec.fixed = {cfg.theta, cfg.gamma, 0.0};
  if (spec.variable == SweepVariable::epsilon) {
    if (cfg.pbsc || cfg.epsilon) throw UsageError("epsilon is swept; drop --pbsc/--epsilon");
  } else {
    spec.fixed.epsilon = cfg.resolved_epsilon();
  }
  if (spec.variable == SweepVariable::theta && cfg.theta != 0.0) {
    throw UsageError("theta is swept; drop --theta");
  }
  if (spec.variable == SweepVariable::gamma && cfg.gamma != 0.0) {
    throw UsageError("gamma is swept; drop --gamma");
  }
  const auto rows = exponent_sweep(spec, cfg.threads);

  out << "sweep_var,value,alpha_complete,alpha_star,alpha_chain,alpha_iid";
  if (cfg.raw) out << ",alpha_complete_raw,alpha_star_raw,alpha_chain_raw,alpha_iid_raw";
  out << '\n';
  for (const SweepRow& row : rows) {
    out << to_string(spec.variable) << ',' << format_number(row.value) << ',' << format_number(row.complete.alpha)
        << ',' << format_number(row.star.alpha) << ',' << format_number(row.chain.alpha) << ','
        << format_number(row.iid.alpha);
    if (cfg.raw) {
      out << ',' << format_number(row.complete.alpha_raw) << ',' << format_number(row.star.alpha_raw) << ','
          << format_number(row.chain.alpha_raw) << ',' << format_number(row.iid.alpha_raw);
    }
    out << '\n';
  }
}

void execute(const RunConfig& cfg, std::ostream& out) {
  switch (cfg.command) {
    case Command::partition: run_partition(cfg, out); return;
    case Command::detect: run_detect(cfg, out); return;
    case Command::simulate: run_simulate(cfg, out); return;
    case Command::bound: run_bound(cfg, out); return;
    case Command::exponent_sweep: run_exponent_sweep(cfg, out); return;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const auto cfg = parse_args(args, out);
    if (!cfg) return kExitOk;
    if (cfg->out_path.empty()) {
      execute(*cfg, out);
    } else {
      std::ostringstream buffer;
      execute(*cfg, buffer);
      std::ofstream file(cfg->out_path);
      if (!file) throw UsageError("cannot write '" + cfg->out_path + "'");
      file << buffer.str();
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ComputeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCompute;
  }
}

}  // namespace sentinet::cli
