// Copyright 2026 The tmut Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line driver: mutate, select, analyze, curve, cfg-dump.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tmut.hpp"

namespace {

namespace fs = std::filesystem;
using namespace tmut;

enum ExitCode { kOk = 0, kUsage = 1, kSubjectError = 2, kBaselineFailure = 3 };

// Bad option values detected after CLI11 parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Configuration file: "key = value" lines, '#' comments. A key names a long
// option with '.' and '_' read as '-' (lm.order → --lm-order). Values fill
// options the command line left unset; list values are whitespace- or
// comma-separated.

struct ConfigEntry {
  std::string key;
  std::string value;
  std::size_t line = 0;
};

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<ConfigEntry> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  std::vector<ConfigEntry> out;
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(n) + ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    std::replace(key.begin(), key.end(), '.', '-');
    std::replace(key.begin(), key.end(), '_', '-');
    out.push_back({key, trim(line.substr(eq + 1)), n});
  }
  return out;
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : v) {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// Command-line arguments the config file contributes for `sub`.
std::vector<std::string> config_arguments(const std::vector<ConfigEntry>& entries,
                                          CLI::App& app, CLI::App* sub) {
  std::set<std::string> known;
  for (CLI::App* s : app.get_subcommands({})) {
    for (const CLI::Option* o : s->get_options()) {
      for (const std::string& n : o->get_lnames()) known.insert(n);
    }
  }
  std::vector<std::string> args;
  for (const ConfigEntry& e : entries) {
    if (!known.count(e.key) || e.key == "config" || e.key == "help") {
      throw UsageError("config line " + std::to_string(e.line) + ": unknown key '" + e.key + "'");
    }
    CLI::Option* opt = sub->get_option_no_throw("--" + e.key);
    if (!opt || opt->count() > 0) continue;  // other subcommand, or overridden
    if (opt->get_expected_max() > 1) {
      for (const std::string& v : split_list(e.value)) args.push_back("--" + e.key + "=" + v);
    } else {
      args.push_back("--" + e.key + "=" + e.value);
    }
  }
  return args;
}

// Hash of every effective option of the subcommand except output location
// and config path, so equal hashes mean equal runs.
std::string config_hash(CLI::App* sub) {
  std::map<std::string, std::string> canon;
  for (const CLI::Option* o : sub->get_options()) {
    if (o->get_lnames().empty()) continue;
    const std::string name = o->get_lnames().front();
    if (name == "help" || name == "out" || name == "config") continue;
    std::string value;
    if (o->count() > 0) {
      for (const std::string& r : o->results()) value += r + "\x1f";
    } else {
      value = o->get_default_str();
    }
    canon[name] = value;
  }
  std::string text = sub->get_name() + "\n";
  for (const auto& [k, v] : canon) text += k + "=" + v + "\n";
  return hex64(fnv1a64(text));
}

mutators::OperatorSet operator_set(const std::string& name) {
  const auto set = mutators::parse_operator_set(name);
  if (!set) throw UsageError("unknown operator set '" + name + "'");
  return *set;
}

// ---------------------------------------------------------------------------
// Shared option groups.

struct MutateOptions {
  std::vector<std::string> corpus;
  std::string operators = "all";
  std::size_t lm_order = 3;
  std::vector<double> lm_weights;
  bool lm_exclude_self = false;
  std::string lm_window = "literal";

  void add_to(CLI::App* sub) {
    sub->add_option("--corpus", corpus, "Corpus .mini files or directories")->check(CLI::ExistingPath);
    sub->add_option("--operators", operators, "traditional | tailored | all")
        ->check(CLI::IsMember({"traditional", "tailored", "all"}));
    sub->add_option("--lm-order", lm_order, "n-gram order")->check(CLI::Range(1, 16));
    sub->add_option("--lm-weights", lm_weights, "Interpolation weights, highest order first");
    sub->add_flag("--lm-exclude-self", lm_exclude_self, "Train the model on the corpus only");
    sub->add_option("--lm-window", lm_window, "Naturalness window: literal | conventional")
        ->check(CLI::IsMember({"literal", "conventional"}));
  }

  harness::PipelineOptions pipeline(mutators::OperatorSet set) const {
    harness::PipelineOptions p;
    p.operators = set;
    p.lm_order = lm_order;
    p.lm_weights = lm_weights;
    p.lm_exclude_self = lm_exclude_self;
    p.window = lm_window == "literal" ? lm::ScoreWindow::Literal : lm::ScoreWindow::Conventional;
    return p;
  }

  std::vector<std::string> corpus_sources() const { return load_corpus(corpus); }

  static std::vector<std::string> load_corpus(const std::vector<std::string>& paths) {
    std::vector<std::string> out;
    for (const std::string& p : paths) {
      if (fs::is_directory(p)) {
        std::vector<fs::path> files;
        for (const auto& e : fs::recursive_directory_iterator(p)) {
          if (e.is_regular_file() && e.path().extension() == ".mini") files.push_back(e.path());
        }
        std::sort(files.begin(), files.end());
        for (const auto& f : files) out.push_back(harness::read_text_file(f));
      } else {
        out.push_back(harness::read_text_file(p));
      }
    }
    return out;
  }
};

struct AnalyzeOptions {
  std::uint64_t step_limit = minilang::kDefaultStepLimit;
  unsigned jobs = 0;
  std::string scope = "class";

  void add_to(CLI::App* sub) {
    sub->add_option("--step-limit", step_limit, "Interpreter steps per test")->check(CLI::PositiveNumber);
    sub->add_option("--jobs", jobs, "Worker threads (0: all cores)");
    sub->add_option("--scope", scope, "class | method | line")
        ->check(CLI::IsMember({"class", "method", "line"}));
  }

  harness::AnalysisOptions analysis() const { return {step_limit, jobs}; }
};

struct Outputs {
  std::string dir;
  ArtifactHeader header;

  fs::path path(const std::string& name) const { return fs::path(dir) / name; }

  std::ofstream open(const std::string& name) const {
    fs::create_directories(dir);
    std::ofstream os(path(name), std::ios::binary);
    if (!os) throw UsageError("cannot write " + path(name).string());
    return os;
  }

  void write_json(const std::string& name, nlohmann::ordered_json body) const {
    nlohmann::ordered_json j;
    j["header"] = header.to_json();
    for (auto& [k, v] : body.items()) j[k] = v;
    open(name) << j.dump(2) << '\n';
  }
};

mutators::MutantPool load_pool(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read pool file " + path);
  try {
    return mutators::read_pool(in).pool;
  } catch (const nlohmann::json::exception& e) {
    throw Error(path + ": " + e.what());
  }
}

// Union of the coupled mutant ids listed in a coupling.json.
std::set<std::string> load_coupled(const std::string& path) {
  const nlohmann::json j = harness::read_json_file(path);
  std::set<std::string> out;
  for (const auto& d : j.at("defects")) {
    for (const auto& [scope, body] : d.at("scopes").items()) {
      for (const auto& id : body.at("coupled")) out.insert(id.get<std::string>());
    }
  }
  return out;
}

// "0.1" (has '.' or exponent) is a fraction of the pool rounded up; "12"
// is an absolute count.
std::size_t resolve_budget(const std::string& text, std::size_t pool_size) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("invalid budget '" + text + "'");
  }
  if (used != text.size()) throw UsageError("invalid budget '" + text + "'");
  if (text.find_first_of(".eE") != std::string::npos) {
    if (!(v > 0.0 && v <= 1.0)) throw UsageError("budget fraction must lie in (0, 1]");
    const auto k = static_cast<std::size_t>(std::ceil(v * static_cast<double>(pool_size) - 1e-9));
    return std::max<std::size_t>(1, k);
  }
  if (v < 1 || v != std::floor(v)) throw UsageError("absolute budget must be a positive integer");
  return static_cast<std::size_t>(v);
}

std::string format_number(double v) {
  std::ostringstream ss;
  ss.precision(10);
  ss << v;
  return ss.str();
}

// Analyzes one defect and restricts its pool to the requested scope.
harness::DefectResult analyze_defect(const harness::Defect& defect, const harness::Subject& subject,
                                     const mutators::MutantPool& pool, harness::Scope scope,
                                     const harness::AnalysisOptions& options) {
  const auto& spec = defect.scope;
  const mutators::MutantPool scoped = harness::scope_filter(pool, subject.prog, spec, scope);
  harness::DefectResult r;
  r.name = defect.name;
  r.matrix = harness::mutation_analysis(defect, scoped, options);
  for (harness::Scope s : harness::kAllScopes) {
    r.scoped[static_cast<std::size_t>(s)] = harness::scope_filter(scoped, subject.prog, spec, s);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Subcommands.

int cmd_mutate(const Outputs& out, const std::string& subject_path, const MutateOptions& mo) {
  const std::string source = harness::read_text_file(subject_path);
  const auto set = operator_set(mo.operators);
  const harness::Subject subject =
      harness::prepare_subject(source, mo.corpus_sources(), mo.pipeline(set));
  {
    auto os = out.open("pool.jsonl");
    mutators::write_pool(os, subject.pool, out.header.to_json());
  }
  if (set != mutators::OperatorSet::Traditional) {
    std::vector<minilang::TokenStream> corpus;
    for (const std::string& text : mo.corpus_sources()) corpus.push_back(minilang::tokenize(text));
    const lm::NgramModel model = harness::train_model(subject.prog.tokens(), corpus, mo.pipeline(set));
    nlohmann::ordered_json body;
    body["model"] = model.to_json();
    out.write_json("model.json", body);
  }
  std::map<mutators::Operator, std::size_t> counts;
  for (const auto& m : subject.pool.mutants()) ++counts[m.op];
  for (mutators::Operator op : mutators::kAllOperators) {
    if (!mutators::includes(set, op)) continue;
    std::cout << mutators::to_string(op) << ' ' << counts[op] << '\n';
  }
  std::cout << "total " << subject.pool.size() << '\n';
  return kOk;
}

int cmd_select(const Outputs& out, const std::string& subject_path, const std::string& pool_path,
               const std::string& policy_name, const std::string& budget_text,
               const std::string& coupling_path, std::uint64_t seed) {
  const selection::Policy policy = selection::parse_policy(policy_name);
  if (policy == selection::Policy::MinDistOracle && coupling_path.empty()) {
    throw UsageError("policy min-dist-oracle needs --coupling");
  }
  const minilang::TypedProgram prog = minilang::compile(harness::read_text_file(subject_path));
  const auto cfgs = cfg::build_cfg(prog);
  const auto dt = cfg::all_distances(cfgs);
  const mutators::MutantPool pool = load_pool(pool_path);
  if (pool.empty()) throw UsageError("pool file holds no mutants");
  const std::set<std::string> coupled =
      coupling_path.empty() ? std::set<std::string>{} : load_coupled(coupling_path);
  const std::size_t kappa = resolve_budget(budget_text, pool.size());
  const selection::SelectionPlan plan = selection::select(policy, pool, cfgs, dt, kappa, seed, &coupled);
  out.write_json("plan.json", selection::plan_to_json(plan));
  std::cout << "selected " << plan.mutant_ids.size() << " of " << pool.size() << '\n';
  return kOk;
}

int cmd_analyze(const Outputs& out, const std::string& defect_dir, const std::string& pool_path,
                const std::string& plan_path, const MutateOptions& mo, const AnalyzeOptions& ao) {
  const harness::Defect defect = harness::load_defect(defect_dir);
  std::vector<std::string> corpus = defect.corpus;
  for (auto& s : mo.corpus_sources()) corpus.push_back(std::move(s));
  const harness::Subject subject = harness::prepare_subject(
      defect.source, corpus, mo.pipeline(operator_set(mo.operators)));
  mutators::MutantPool pool = pool_path.empty() ? subject.pool : load_pool(pool_path);
  if (!plan_path.empty()) {
    const selection::SelectionPlan plan = selection::plan_from_json(harness::read_json_file(plan_path));
    const std::set<std::string> ids(plan.mutant_ids.begin(), plan.mutant_ids.end());
    for (const std::string& id : ids) {
      if (!pool.find(id)) throw UsageError("plan names mutant " + id + " missing from the pool");
    }
    pool = pool.filter([&](const mutators::Mutant& m) { return ids.count(m.id) > 0; });
  }
  const harness::Scope scope = harness::parse_scope(ao.scope);
  const harness::DefectResult r = analyze_defect(defect, subject, pool, scope, ao.analysis());
  {
    auto os = out.open("kill_matrix.jsonl");
    os << out.header.jsonl_line() << '\n';
    harness::write_kill_matrix(os, r.matrix);
  }
  const harness::CouplingReport report = harness::operator_report({r});
  nlohmann::ordered_json body;
  body["scope"] = ao.scope;
  body["defects"] = nlohmann::ordered_json::array({harness::defect_to_json(r)});
  body["operators"] = harness::operator_report_to_json(report);
  out.write_json("coupling.json", body);
  {
    auto os = out.open("operators.csv");
    os << out.header.csv_comment() << '\n';
    harness::write_operator_csv(os, report);
  }
  const auto coupled = r.coupled(scope);
  std::cout << defect.name << ": " << r.matrix.mutant_ids.size() << " mutants analyzed, "
            << coupled.size() << " coupled\n";
  for (const std::string& id : coupled) std::cout << "  " << id << '\n';
  return kOk;
}

int cmd_curve(const Outputs& out, const std::vector<std::string>& defect_dirs,
              const std::vector<std::string>& policies, const std::vector<std::string>& operator_sets,
              std::vector<double> budgets, std::size_t trials, const MutateOptions& mo,
              const AnalyzeOptions& ao, std::uint64_t seed) {
  if (budgets.empty()) budgets = harness::percent_grid();
  std::sort(budgets.begin(), budgets.end());
  budgets.erase(std::unique(budgets.begin(), budgets.end()), budgets.end());
  try {
    harness::validate_budgets(budgets);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  std::vector<selection::Policy> parsed;
  for (const std::string& p : policies) parsed.push_back(selection::parse_policy(p));
  const harness::Scope scope = harness::parse_scope(ao.scope);

  std::vector<harness::Defect> defects;
  for (const std::string& d : defect_dirs) defects.push_back(harness::load_defect(d));

  auto os = out.open("curve.csv");
  os << out.header.csv_comment() << " trials=" << trials << " scope=" << ao.scope << '\n';
  os << "operators,budget,policy,mean,stddev,analytic_random\n";
  for (const std::string& set_name : operator_sets) {
    const auto set = operator_set(set_name);
    std::vector<harness::CurveSubject> subjects;
    for (const harness::Defect& d : defects) {
      std::vector<std::string> corpus = d.corpus;
      for (auto& s : mo.corpus_sources()) corpus.push_back(std::move(s));
      harness::Subject subject = harness::prepare_subject(d.source, corpus, mo.pipeline(set));
      const harness::DefectResult r = analyze_defect(d, subject, subject.pool, scope, ao.analysis());
      mutators::MutantPool analyzed = r.pool(scope).filter(
          [&](const mutators::Mutant& m) { return r.matrix.row(m.id).has_value(); });
      subjects.push_back({d.name, std::move(analyzed), subject.cfgs, subject.dt, r.coupled(scope)});
    }
    for (selection::Policy p : parsed) {
      const harness::CurveData data = harness::effectiveness_curve(subjects, p, budgets, trials, seed);
      for (const harness::CurvePoint& pt : data.points) {
        os << set_name << ',' << format_number(pt.budget) << ',' << selection::to_string(p) << ','
           << format_number(pt.mean) << ',' << format_number(pt.stddev) << ','
           << format_number(pt.analytic) << '\n';
      }
      std::cout << set_name << ' ' << selection::to_string(p)
                << ": mean first budget at maximum effectiveness "
                << format_number(harness::mean_first_attainment(data)) << '\n';
    }
  }
  return kOk;
}

int cmd_cfg_dump(const Outputs& out, const std::string& subject_path) {
  const minilang::TypedProgram prog = minilang::compile(harness::read_text_file(subject_path));
  const auto cfgs = cfg::build_cfg(prog);
  for (std::size_t i = 0; i < cfgs.size(); ++i) {
    std::string owner = cfgs[i].owner == cfg::kInitOwner ? "init" : cfgs[i].owner;
    const std::string name = std::to_string(i) + "-" + owner + ".dot";
    auto os = out.open(name);
    os << "// " << out.header.csv_comment().substr(2) << '\n' << cfg::to_dot(cfgs[i], prog);
    std::cout << name << ": " << cfgs[i].nodes.size() << " nodes, " << cfgs[i].edges.size()
              << " edges\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mutation analysis toolkit for MiniLang", "tmut"};
  app.set_version_flag("--version", std::string(tmut::kVersion));
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  std::string config_path;
  app.add_option("--config", config_path, "key = value configuration file")->check(CLI::ExistingFile);
  app.fallthrough();

  std::string out_dir;
  std::uint64_t seed = 0;
  std::string subject, pool_path, plan_path, coupling_path, defect_dir;
  std::string policy = "min-dist-nat", budget = "0.1";
  std::vector<std::string> defect_dirs, policies, operator_sets;
  std::vector<double> budgets;
  std::size_t trials = 1000;
  MutateOptions mo;
  AnalyzeOptions ao;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", out_dir, "Output directory")->required();
    sub->add_option("--seed", seed, "Master random seed");
  };

  CLI::App* mutate = app.add_subcommand("mutate", "Generate the mutant pool of a program");
  common(mutate);
  mutate->add_option("--subject", subject, "MiniLang source file")->required()->check(CLI::ExistingFile);
  mo.add_to(mutate);

  CLI::App* select = app.add_subcommand("select", "Select mutants from a pool");
  common(select);
  select->add_option("--subject", subject, "MiniLang source file")->required()->check(CLI::ExistingFile);
  select->add_option("--pool", pool_path, "Pool file from mutate")->required()->check(CLI::ExistingFile);
  select->add_option("--policy", policy, "random | rand-loc | min-dist | min-dist-nat | min-dist-oracle")
      ->check(CLI::IsMember({"random", "rand-loc", "min-dist", "min-dist-nat", "min-dist-oracle"}));
  select->add_option("--budget", budget, "Fraction of the pool (0.1) or absolute count (12)");
  select->add_option("--coupling", coupling_path, "coupling.json for the oracle")->check(CLI::ExistingFile);

  CLI::App* analyze = app.add_subcommand("analyze", "Run mutation analysis on a defect bundle");
  common(analyze);
  analyze->add_option("--defect", defect_dir, "Defect bundle directory")->required()->check(CLI::ExistingDirectory);
  analyze->add_option("--pool", pool_path, "Pool file (default: generate)")->check(CLI::ExistingFile);
  analyze->add_option("--plan", plan_path, "Analyze only the mutants of this plan")->check(CLI::ExistingFile);
  mo.add_to(analyze);
  ao.add_to(analyze);

  CLI::App* curve = app.add_subcommand("curve", "Selection-policy effectiveness curves");
  common(curve);
  curve->add_option("--defect", defect_dirs, "Defect bundle directories")->required()->check(CLI::ExistingDirectory);
  policies = {"random", "rand-loc", "min-dist", "min-dist-nat", "min-dist-oracle"};
  curve->add_option("--policy", policies, "Policies to evaluate")
      ->check(CLI::IsMember({"random", "rand-loc", "min-dist", "min-dist-nat", "min-dist-oracle"}));
  operator_sets = {"traditional", "all"};
  curve->add_option("--operator-sets", operator_sets, "Operator sets to compare")
      ->check(CLI::IsMember({"traditional", "tailored", "all"}));
  curve->add_option("--budgets", budgets, "Budget fractions (default 0.01..1.00)");
  curve->add_option("--trials", trials, "Monte Carlo trials per stochastic policy")->check(CLI::PositiveNumber);
  mo.add_to(curve);
  ao.add_to(curve);

  CLI::App* dump = app.add_subcommand("cfg-dump", "Write the CFGs of a program as Graphviz files");
  common(dump);
  dump->add_option("--subject", subject, "MiniLang source file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
    if (!config_path.empty()) {
      CLI::App* sub = app.get_subcommands().front();
      const auto extra = config_arguments(read_config(config_path), app, sub);
      if (!extra.empty()) {
        std::vector<std::string> args(argv + 1, argv + argc);
        args.insert(args.end(), extra.begin(), extra.end());
        std::reverse(args.begin(), args.end());
        app.clear();
        app.parse(args);
      }
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  Outputs out{out_dir, {config_hash(sub), seed}};
  try {
    if (sub == mutate) return cmd_mutate(out, subject, mo);
    if (sub == select) return cmd_select(out, subject, pool_path, policy, budget, coupling_path, seed);
    if (sub == analyze) return cmd_analyze(out, defect_dir, pool_path, plan_path, mo, ao);
    if (sub == curve) {
      return cmd_curve(out, defect_dirs, policies, operator_sets, budgets, trials, mo, ao, seed);
    }
    if (sub == dump) return cmd_cfg_dump(out, subject);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const harness::BaselineFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBaselineFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kSubjectError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kSubjectError;
  }
  return kUsage;
}
