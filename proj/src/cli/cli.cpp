#include "cli/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "fpc/parser.hpp"
#include "fpc/reduction.hpp"
#include "fpc/typecheck.hpp"
#include "ppcf/adequacy.hpp"
#include "ppcf/parser.hpp"

namespace kegel_cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string command;
  std::string path;
  std::size_t op_depth = 200;
  std::size_t fix_iters = 60;
  std::uint64_t support_cap = 64;
  std::uint64_t seed = 0;
  std::string tol = "2^-40";
  std::string format;
  std::uint64_t numeral = 0;
  std::size_t samples = 1;
  std::size_t max_steps = 100000;
  std::size_t fuel = 1000;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error while reading " + path);
  return buf.str();
}

bool is_fpc_path(const std::string& path) {
  return path.size() >= 4 && path.compare(path.size() - 4, 4, ".fpc") == 0;
}

bool json_output(const RunConfig& cfg, bool json_by_default) {
  if (cfg.format.empty()) return json_by_default;
  return cfg.format == "json";
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

ppcf::DenoteConfig denote_config(const RunConfig& cfg) {
  ppcf::DenoteConfig d;
  d.fix_iters = cfg.fix_iters;
  d.support_cap = cfg.support_cap;
  return d;
}

struct Program {
  ppcf::Term term;
  ppcf::PType type;
};

// Parses and typechecks a pPCF file; failures propagate as exceptions.
Program load_ppcf(const std::string& path) {
  ppcf::Term m = ppcf::parse(read_file(path));
  ppcf::PType t = ppcf::typecheck({}, m);
  return {m, t};
}

Program load_nat_program(const std::string& path, std::ostream& err, bool& ok) {
  Program p = load_ppcf(path);
  ok = p.type == ppcf::PType::nat();
  if (!ok) err << path << ": expected a program of type nat, found " << ppcf::to_string(p.type) << '\n';
  return p;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  std::string type;
  if (is_fpc_path(cfg.path)) {
    type = fpc::to_string(fpc::typecheck_fpc({}, {}, fpc::parse_fpc(read_file(cfg.path))));
  } else {
    type = ppcf::to_string(load_ppcf(cfg.path).type);
  }
  if (json_output(cfg, false)) {
    emit(out, json{{"type", type}});
  } else {
    out << type << '\n';
  }
  return kOk;
}

int cmd_run(const RunConfig& cfg, std::ostream& out) {
  Program p = load_ppcf(cfg.path);
  ppcf::CoinSource coins(cfg.seed);
  std::map<std::string, std::size_t> counts;
  std::size_t timeouts = 0;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    auto r = ppcf::run_sample(p.term, coins, cfg.max_steps);
    if (auto v = std::get_if<ppcf::Value>(&r)) {
      ++counts[ppcf::pretty(v->term)];
    } else {
      ++timeouts;
    }
  }
  if (json_output(cfg, true)) {
    emit(out, json{{"seed", cfg.seed}, {"samples", cfg.samples}, {"outcomes", counts}, {"timeouts", timeouts}});
  } else {
    for (const auto& [term, n] : counts) out << term << '\t' << n << '\n';
    if (timeouts) out << "<timeout>\t" << timeouts << '\n';
  }
  return kOk;
}

int cmd_dist(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  bool ok = false;
  Program p = load_nat_program(cfg.path, err, ok);
  if (!ok) return kFailure;
  ppcf::TermDist d = ppcf::distribution(p.term, cfg.op_depth);
  std::map<std::string, kegel::Rational> rows;
  for (const auto& [key, wt] : d.outcomes) rows[ppcf::pretty(wt.term)] += wt.weight;
  if (json_output(cfg, true)) {
    json outcomes = json::object();
    for (const auto& [term, w] : rows) outcomes[term] = kegel::to_string(w);
    emit(out, json{{"outcomes", outcomes}, {"residual", kegel::to_string(d.residual)}});
  } else {
    for (const auto& [term, w] : rows) out << term << '\t' << kegel::to_string(w) << '\n';
    out << "residual\t" << kegel::to_string(d.residual) << '\n';
  }
  return kOk;
}

int cmd_denote(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  bool ok = false;
  Program p = load_nat_program(cfg.path, err, ok);
  if (!ok) return kFailure;
  ppcf::NatDenotation d = ppcf::denote_nat(p.term, denote_config(cfg));
  if (json_output(cfg, true)) {
    json j = kegel::to_json(d.dist);
    j["discardedMass"] = kegel::to_string(d.discarded_mass);
    emit(out, j);
  } else {
    for (const auto& [n, w] : d.dist.weights()) out << n << '\t' << kegel::to_string(w) << '\n';
    out << "mass\t" << kegel::to_string(kegel::mass(d.dist)) << '\n';
    out << "discarded\t" << kegel::to_string(d.discarded_mass) << '\n';
  }
  return kOk;
}

kegel::Rational parse_tol(const std::string& text) {
  kegel::Rational tol;
  try {
    tol = kegel::parse_rational(text);
  } catch (const std::exception& e) {
    throw UsageError("--tol: " + std::string(e.what()));
  }
  if (tol < 0 || tol > 1) throw UsageError("--tol must lie in [0,1]");
  return tol;
}

int cmd_adequacy(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  kegel::Rational tol = parse_tol(cfg.tol);
  bool ok = false;
  Program p = load_nat_program(cfg.path, err, ok);
  if (!ok) return kFailure;
  ppcf::AdequacyReport r = ppcf::check_adequacy(p.term, cfg.numeral, cfg.op_depth, denote_config(cfg), tol);
  if (json_output(cfg, true)) {
    emit(out, ppcf::to_json(r));
  } else {
    out << (r.pass ? "PASS" : "FAIL") << " n=" << r.numeral << " op=" << kegel::to_string(r.op_lower)
        << " den=" << kegel::to_string(r.den_lower) << " gap=" << kegel::to_string(r.gap) << '\n';
  }
  return r.pass ? kOk : kFailure;
}

int cmd_fpc_check(const RunConfig& cfg, std::ostream& out) {
  fpc::FType t = fpc::typecheck_fpc({}, {}, fpc::parse_fpc(read_file(cfg.path)));
  if (json_output(cfg, false)) {
    emit(out, json{{"type", fpc::to_string(t)}});
  } else {
    out << fpc::to_string(t) << '\n';
  }
  return kOk;
}

int cmd_fpc_run(const RunConfig& cfg, std::ostream& out) {
  fpc::FTerm m = fpc::parse_fpc(read_file(cfg.path));
  fpc::FType t = fpc::typecheck_fpc({}, {}, m);
  auto result = fpc::normalize(m, cfg.fuel);
  bool normal = std::holds_alternative<fpc::Normal>(result);
  const fpc::FTerm& last = normal ? std::get<fpc::Normal>(result).term : std::get<fpc::OutOfFuel>(result).term;
  if (json_output(cfg, true)) {
    json j{{"status", normal ? "normal" : "outOfFuel"}, {"term", fpc::pretty(last)}, {"type", fpc::to_string(t)}};
    if (normal) j["steps"] = std::get<fpc::Normal>(result).steps;
    emit(out, j);
  } else {
    out << (normal ? "normal: " : "out of fuel: ") << fpc::pretty(last) << '\n';
  }
  return normal ? kOk : kFailure;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("file", cfg.path, "input program (.ppcf or .fpc)")->required();
  sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
}

void add_denote_flags(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--fix-iters", cfg.fix_iters, "Kleene iterations per fixpoint");
  sub->add_option("--support-cap", cfg.support_cap, "largest numeral kept in a sub-distribution");
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.command == "check") return cmd_check(cfg, out);
  if (cfg.command == "run") return cmd_run(cfg, out);
  if (cfg.command == "dist") return cmd_dist(cfg, out, err);
  if (cfg.command == "denote") return cmd_denote(cfg, out, err);
  if (cfg.command == "adequacy") return cmd_adequacy(cfg, out, err);
  if (cfg.command == "fpc-check") return cmd_fpc_check(cfg, out);
  return cmd_fpc_run(cfg, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app("Probabilistic PCF workbench", "kegel");
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "parse and typecheck a .ppcf or .fpc file");
  add_common(check, cfg);

  auto* run = app.add_subcommand("run", "sample reductions with a seeded coin source");
  add_common(run, cfg);
  run->add_option("--seed", cfg.seed, "64-bit seed");
  run->add_option("--samples", cfg.samples, "number of independent runs");
  run->add_option("--max-steps", cfg.max_steps, "step budget per run");

  auto* dist = app.add_subcommand("dist", "exact distribution after a number of steps");
  add_common(dist, cfg);
  dist->add_option("--op-depth,--depth", cfg.op_depth, "reduction steps");

  auto* denote = app.add_subcommand("denote", "finite approximation of the denotation");
  add_common(denote, cfg);
  add_denote_flags(denote, cfg);

  auto* adequacy = app.add_subcommand("adequacy", "compare operational and denotational lower bounds");
  add_common(adequacy, cfg);
  add_denote_flags(adequacy, cfg);
  adequacy->add_option("--op-depth,--depth", cfg.op_depth, "reduction steps");
  adequacy->add_option("--tol", cfg.tol, "tolerance as p/q, p or 2^-k");
  adequacy->add_option("--numeral", cfg.numeral, "target numeral");

  auto* fpc_check = app.add_subcommand("fpc-check", "typecheck an FPC program");
  add_common(fpc_check, cfg);

  auto* fpc_run = app.add_subcommand("fpc-run", "normalize an FPC program");
  add_common(fpc_run, cfg);
  fpc_run->add_option("--fuel", cfg.fuel, "maximum number of steps");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    return dispatch(cfg, out, err);
  } catch (const IoError& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const ppcf::ParseError& e) {
    err << cfg.path << ":" << e.what() << '\n';
    return kFailure;
  } catch (const fpc::ParseError& e) {
    err << cfg.path << ":" << e.what() << '\n';
    return kFailure;
  } catch (const ppcf::TypeError& e) {
    err << cfg.path << ": " << e.what() << '\n';
    return kFailure;
  } catch (const fpc::TypeError& e) {
    err << cfg.path << ": " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace kegel_cli
