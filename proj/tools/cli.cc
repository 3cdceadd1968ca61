// Copyright 2026 The Dirichlet Privacy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <algorithm>
#include <functional>
#include <limits>
#include <memory>
#include <utility>
#include <variant>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/string_view.h"
#include "absl/strings/ascii.h"
#include "dirichlet_privacy/accountant.h"
#include "dirichlet_privacy/benchmarks.h"
#include "dirichlet_privacy/config.h"
#include "dirichlet_privacy/psrl.h"
#include "dirichlet_privacy/stats.h"
#include "dirichlet_privacy/status_macros.h"
#include "json.hpp"

namespace dirichlet_privacy::cli {
namespace {

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();
constexpr uint64_t kDefaultSeed = 20260101;

// Ten significant digits for every reported number.
std::string FormatNumber(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return absl::StrFormat("%.10g", v);
}

// Shortest decimal that parses back to v, for the embedded config.
std::string ExactNumber(double v) {
  for (int precision : {15, 16}) {
    const std::string s = absl::StrFormat("%.*g", precision, v);
    double back;
    if (absl::SimpleAtod(s, &back) && back == v) return s;
  }
  return absl::StrFormat("%.17g", v);
}

// Flags of one subcommand, with the hooks needed to merge a config file
// under them and to print their resolved values.
class ParamSet {
 public:
  explicit ParamSet(CLI::App* app) : app_(app) {}

  void AddDouble(const std::string& name, double* value,
                 const std::string& help) {
    Add(name, app_->add_option("--" + name, *value, help),
        [value] { return std::isnan(*value) ? std::string() : ExactNumber(*value); },
        [value](const std::string& s) { return absl::SimpleAtod(s, value); });
  }
  void AddInt(const std::string& name, int64_t* value, const std::string& help) {
    Add(name, app_->add_option("--" + name, *value, help),
        [value] { return absl::StrFormat("%d", *value); },
        [value](const std::string& s) { return absl::SimpleAtoi(s, value); });
  }
  void AddSeed(uint64_t* value) {
    Add("seed", app_->add_option("--seed", *value, "root random seed"),
        [value] { return absl::StrFormat("%d", *value); },
        [value](const std::string& s) { return absl::SimpleAtoi(s, value); });
  }
  void AddString(const std::string& name, std::string* value,
                 const std::string& help) {
    Add(name, app_->add_option("--" + name, *value, help),
        [value] { return *value; },
        [value](const std::string& s) {
          *value = s;
          return true;
        });
  }
  void AddFlag(const std::string& name, bool* value, const std::string& help) {
    Add(name, app_->add_flag("--" + name, *value, help),
        [value] { return std::string(*value ? "true" : "false"); },
        [value](const std::string& s) { return absl::SimpleAtob(s, value); });
  }

  // Values from `config` for every flag not given on the command line.
  // Keys match with '_' and '-' treated alike.
  absl::Status ApplyConfig(const KeyValueConfig& raw) {
    KeyValueConfig config;
    for (const auto& [key, value] : raw.entries()) {
      std::string name = key;
      std::replace(name.begin(), name.end(), '_', '-');
      config.Set(name, value);
    }
    std::vector<std::string> known;
    for (const Param& p : params_) known.push_back(p.name);
    RETURN_IF_ERROR(config.CheckKnownKeys(known));
    for (const Param& p : params_) {
      if (p.option->count() > 0 || !config.Has(p.name)) continue;
      const std::string value = *config.GetString(p.name, "");
      if (!p.set(value)) {
        return absl::InvalidArgumentError(absl::StrFormat(
            "config key '%s': cannot parse '%s'", p.name, value));
      }
    }
    return absl::OkStatus();
  }

  // (name, value) for every flag with a value, in registration order.
  std::vector<std::pair<std::string, std::string>> Resolved() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const Param& p : params_) {
      std::string value = p.get();
      if (!value.empty()) out.emplace_back(p.name, std::move(value));
    }
    return out;
  }

 private:
  struct Param {
    std::string name;
    CLI::Option* option;
    std::function<std::string()> get;
    std::function<bool(const std::string&)> set;
  };

  void Add(const std::string& name, CLI::Option* option,
           std::function<std::string()> get,
           std::function<bool(const std::string&)> set) {
    option->capture_default_str();
    params_.push_back({name, option, std::move(get), std::move(set)});
  }

  CLI::App* app_;
  std::vector<Param> params_;
};

using Cell = std::variant<double, int64_t, std::string>;

struct Output {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  // Free-form summary lines, written as comments after the rows.
  std::vector<std::string> notes;
  // Nonempty when a requested check failed.
  std::string assertion_failure;
};

std::string CellText(const Cell& cell) {
  if (const double* d = std::get_if<double>(&cell)) return FormatNumber(*d);
  if (const int64_t* i = std::get_if<int64_t>(&cell)) return absl::StrFormat("%d", *i);
  return std::get<std::string>(cell);
}

nlohmann::ordered_json CellJson(const Cell& cell) {
  if (const double* d = std::get_if<double>(&cell)) {
    if (!std::isfinite(*d)) return FormatNumber(*d);
    double rounded;
    (void)absl::SimpleAtod(FormatNumber(*d), &rounded);
    return rounded;
  }
  if (const int64_t* i = std::get_if<int64_t>(&cell)) return *i;
  return std::get<std::string>(cell);
}

absl::Status Missing(const std::string& flag) {
  return absl::InvalidArgumentError(absl::StrFormat("missing --%s", flag));
}

absl::StatusOr<double> Required(double value, const std::string& flag) {
  if (std::isnan(value)) return Missing(flag);
  return value;
}

absl::StatusOr<std::vector<double>> DoubleList(const std::string& text,
                                               const std::string& flag) {
  if (text.empty()) return Missing(flag);
  auto list = ParseDoubleList(text);
  if (!list.ok()) {
    return absl::InvalidArgumentError(
        absl::StrFormat("--%s: %s", flag, list.status().message()));
  }
  return list;
}

absl::StatusOr<std::vector<int64_t>> IntList(const std::string& text,
                                             const std::string& flag) {
  if (text.empty()) return Missing(flag);
  auto list = ParseIntList(text);
  if (!list.ok()) {
    return absl::InvalidArgumentError(
        absl::StrFormat("--%s: %s", flag, list.status().message()));
  }
  return list;
}

Execution ExecutionFor(bool serial) {
  return serial ? Execution::kSerial : Execution::kParallel;
}

class Command {
 public:
  Command(CLI::App* parent, std::string name, const std::string& description)
      : name_(std::move(name)),
        app_(parent->add_subcommand(name_, description)),
        params_(app_) {
    app_->add_option("--config", config_path_,
                     "file of 'key = value' lines merged under the flags");
    app_->add_option("-o,--output", output_path_,
                     absl::StrFormat("output file (default: $%s/%s.<format>, "
                                     "else stdout)",
                                     kOutputDirEnv, name_));
    params_.AddString("format", &format_, "csv or json");
  }
  virtual ~Command() = default;

  CLI::App* app() const { return app_; }

  int Execute(std::ostream& out, std::ostream& err) {
    if (!config_path_.empty()) {
      auto config = KeyValueConfig::Load(config_path_);
      absl::Status status =
          config.ok() ? params_.ApplyConfig(*config) : config.status();
      if (!status.ok()) {
        err << "error: " << status.message() << "\n";
        return kExitUsage;
      }
    }
    if (format_ != "csv" && format_ != "json") {
      err << "error: --format must be csv or json, got '" << format_ << "'\n";
      return kExitUsage;
    }
    auto output = Run();
    if (!output.ok()) {
      err << "error: " << output.status().message() << "\n";
      return output.status().code() == absl::StatusCode::kInvalidArgument
                 ? kExitUsage
                 : kExitRuntimeError;
    }
    const std::string text =
        format_ == "csv" ? RenderCsv(*output) : RenderJson(*output);
    std::string path = output_path_;
    if (path.empty()) {
      const char* dir = std::getenv(kOutputDirEnv);
      if (dir != nullptr && *dir != '\0') {
        path = absl::StrFormat("%s/%s.%s", dir, name_, format_);
      }
    }
    if (path.empty()) {
      out << text;
    } else {
      std::ofstream file(path, std::ios::binary);
      file << text;
      if (!file) {
        err << "error: cannot write " << path << "\n";
        return kExitRuntimeError;
      }
      err << "wrote " << path << "\n";
    }
    if (!output->assertion_failure.empty()) {
      err << "assertion failed: " << output->assertion_failure << "\n";
      return kExitAssertionFailed;
    }
    return kExitOk;
  }

 protected:
  virtual absl::StatusOr<Output> Run() = 0;

  std::string name_;
  CLI::App* app_;
  ParamSet params_;

 private:
  std::string RenderCsv(const Output& output) const {
    std::string text = absl::StrFormat("# dirichlet-privacy %s\n", name_);
    for (const auto& [key, value] : params_.Resolved()) {
      absl::StrAppendFormat(&text, "# %s = %s\n", key, value);
    }
    absl::StrAppend(&text, absl::StrJoin(output.columns, ","), "\n");
    for (const auto& row : output.rows) {
      std::vector<std::string> cells;
      for (const Cell& c : row) cells.push_back(CellText(c));
      absl::StrAppend(&text, absl::StrJoin(cells, ","), "\n");
    }
    for (const std::string& note : output.notes) {
      absl::StrAppend(&text, "# ", note, "\n");
    }
    return text;
  }

  std::string RenderJson(const Output& output) const {
    nlohmann::ordered_json doc;
    doc["command"] = name_;
    doc["config"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : params_.Resolved()) doc["config"][key] = value;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : output.rows) {
      nlohmann::ordered_json obj;
      for (size_t i = 0; i < row.size(); ++i) {
        obj[output.columns[i]] = CellJson(row[i]);
      }
      doc["rows"].push_back(std::move(obj));
    }
    doc["notes"] = output.notes;
    return doc.dump(2) + "\n";
  }

  std::string config_path_;
  std::string output_path_;
  std::string format_ = "csv";
};

// Sensitivity flags shared by the accountant commands.
struct SensitivityFlags {
  double d2sq = kUnset;
  double dinf = kUnset;
  int64_t dim = 0;

  void Register(ParamSet& params) {
    params.AddDouble("d2sq", &d2sq, "squared l2 sensitivity");
    params.AddDouble("dinf", &dinf, "l-infinity sensitivity");
    params.AddInt("dim", &dim,
                  "histogram dimension; if positive, also checks d2sq <= dim * dinf^2");
  }

  absl::StatusOr<SensitivityBounds> Resolve() const {
    ASSIGN_OR_RETURN(const double l2, Required(d2sq, "d2sq"));
    ASSIGN_OR_RETURN(const double linf, Required(dinf, "dinf"));
    if (dim > 0) {
      return SensitivityBounds::CreateForDimension(l2, linf,
                                                   static_cast<size_t>(dim));
    }
    return SensitivityBounds::Create(l2, linf);
  }
};

class GuaranteeCommand : public Command {
 public:
  explicit GuaranteeCommand(CLI::App* parent)
      : Command(parent, "guarantee",
                "RDP epsilon of one draw from Dir(r x + alpha)") {
    params_.AddDouble("lambda", &lambda_, "Renyi order");
    sensitivity_.Register(params_);
    params_.AddDouble("alpha-min", &alpha_min_, "smallest prior entry");
    params_.AddString("alpha", &alpha_, "full prior vector (comma separated)");
    params_.AddDouble("r", &r_, "concentration multiplier");
  }

 protected:
  absl::StatusOr<Output> Run() override {
    ASSIGN_OR_RETURN(const SensitivityBounds sens, sensitivity_.Resolve());
    double alpha_min;
    double epsilon;
    if (!alpha_.empty()) {
      if (!std::isnan(alpha_min_)) {
        return absl::InvalidArgumentError("give --alpha or --alpha-min, not both");
      }
      ASSIGN_OR_RETURN(std::vector<double> alpha, DoubleList(alpha_, "alpha"));
      ASSIGN_OR_RETURN(const PriorSpec prior, PriorSpec::Create(alpha, r_));
      alpha_min = prior.alpha_min();
      ASSIGN_OR_RETURN(epsilon, RdpEpsilon(lambda_, sens, prior));
    } else {
      ASSIGN_OR_RETURN(alpha_min, Required(alpha_min_, "alpha-min"));
      ASSIGN_OR_RETURN(epsilon, RdpEpsilon(lambda_, sens, alpha_min, r_));
    }
    const double max_order = MaxOrder(alpha_min, sens.delta_inf, r_);
    Output output;
    output.columns = {"lambda", "d2sq", "dinf", "alpha_min", "r",
                      "epsilon", "lambda_max", "status"};
    output.rows.push_back(
        {lambda_, sens.delta2_sq, sens.delta_inf, alpha_min, r_, epsilon,
         max_order,
         std::string(std::isinf(epsilon) ? "infinite at this order" : "finite")});
    output.notes.push_back(absl::StrFormat("feasible orders: (1, %s)",
                                           FormatNumber(max_order)));
    return output;
  }

 private:
  double lambda_ = 2.0;
  SensitivityFlags sensitivity_;
  double alpha_min_ = kUnset;
  std::string alpha_;
  double r_ = 1.0;
};

class SolveCommand : public Command {
 public:
  explicit SolveCommand(CLI::App* parent)
      : Command(parent, "solve",
                "solve alpha_min or r for a target (lambda, epsilon)") {
    params_.AddString("unknown", &unknown_,
                      "alpha-min, alpha-min-closed or r");
    params_.AddDouble("lambda", &lambda_, "Renyi order of the target");
    params_.AddDouble("epsilon", &epsilon_, "target epsilon");
    sensitivity_.Register(params_);
    params_.AddDouble("r", &r_, "concentration multiplier (alpha-min solves)");
    params_.AddDouble("alpha-min", &alpha_min_, "fixed alpha_min (r solve)");
  }

 protected:
  absl::StatusOr<Output> Run() override {
    ASSIGN_OR_RETURN(const SensitivityBounds sens, sensitivity_.Resolve());
    ASSIGN_OR_RETURN(const double eps, Required(epsilon_, "epsilon"));
    ASSIGN_OR_RETURN(const RdpGuarantee target, RdpGuarantee::Create(lambda_, eps));
    double value;
    double achieved;
    if (unknown_ == "alpha-min" || unknown_ == "alpha-min-closed") {
      if (unknown_ == "alpha-min") {
        ASSIGN_OR_RETURN(value, AlphaMinForTarget(target, sens, r_));
      } else {
        ASSIGN_OR_RETURN(value, AlphaMinClosedForm(target, sens, r_));
      }
      ASSIGN_OR_RETURN(achieved, RdpEpsilon(lambda_, sens, value, r_));
    } else if (unknown_ == "r") {
      ASSIGN_OR_RETURN(const double alpha_min, Required(alpha_min_, "alpha-min"));
      ASSIGN_OR_RETURN(value, RForTarget(target, sens, alpha_min));
      ASSIGN_OR_RETURN(achieved, RdpEpsilon(lambda_, sens, alpha_min, value));
    } else {
      return absl::InvalidArgumentError(absl::StrFormat(
          "--unknown must be alpha-min, alpha-min-closed or r, got '%s'",
          unknown_));
    }
    Output output;
    output.columns = {"unknown", "value", "lambda", "target_epsilon",
                      "achieved_epsilon", "relative_error"};
    output.rows.push_back({unknown_, value, lambda_, eps, achieved,
                           std::abs(achieved - eps) / eps});
    output.notes.push_back(absl::StrFormat(
        "verification: forward epsilon at the solved value is %s (target %s)",
        FormatNumber(achieved), FormatNumber(eps)));
    return output;
  }

 private:
  std::string unknown_ = "alpha-min";
  double lambda_ = 2.0;
  double epsilon_ = kUnset;
  SensitivityFlags sensitivity_;
  double r_ = 1.0;
  double alpha_min_ = kUnset;
};

class ConvertCommand : public Command {
 public:
  explicit ConvertCommand(CLI::App* parent)
      : Command(parent, "convert", "convert RDP to (epsilon, delta)-DP") {
    params_.AddString("alpha-min", &alpha_min_, "alpha_min values (comma separated)");
    params_.AddString("epsilons", &epsilons_, "epsilon values (comma separated)");
    params_.AddDouble("eps-min", &eps_min_, "sweep start (instead of --epsilons)");
    params_.AddDouble("eps-max", &eps_max_, "sweep end");
    params_.AddInt("eps-count", &eps_count_, "sweep points");
    sensitivity_.Register(params_);
    params_.AddDouble("r", &r_, "concentration multiplier");
  }

 protected:
  absl::StatusOr<Output> Run() override {
    ASSIGN_OR_RETURN(const SensitivityBounds sens, sensitivity_.Resolve());
    ASSIGN_OR_RETURN(const std::vector<double> alphas,
                     DoubleList(alpha_min_, "alpha-min"));
    std::vector<double> epsilons;
    const bool sweep = !std::isnan(eps_min_) || !std::isnan(eps_max_);
    if (!epsilons_.empty()) {
      if (sweep) {
        return absl::InvalidArgumentError(
            "give --epsilons or --eps-min/--eps-max, not both");
      }
      ASSIGN_OR_RETURN(epsilons, DoubleList(epsilons_, "epsilons"));
    } else {
      ASSIGN_OR_RETURN(const double lo, Required(eps_min_, "eps-min"));
      ASSIGN_OR_RETURN(const double hi, Required(eps_max_, "eps-max"));
      if (eps_count_ < 2 || !(hi > lo)) {
        return absl::InvalidArgumentError(
            "sweep needs --eps-max > --eps-min and --eps-count >= 2");
      }
      for (int64_t i = 0; i < eps_count_; ++i) {
        epsilons.push_back(lo + (hi - lo) * static_cast<double>(i) /
                                    static_cast<double>(eps_count_ - 1));
      }
    }
    Output output;
    output.columns = {"alpha_min", "epsilon", "delta", "lambda", "vacuous"};
    for (double alpha : alphas) {
      for (double eps : epsilons) {
        ASSIGN_OR_RETURN(const ApproxDpGuarantee g,
                         RdpToApproxDp(eps, sens, alpha, r_));
        output.rows.push_back({alpha, eps, g.delta, g.lambda,
                               std::string(g.vacuous ? "true" : "false")});
      }
    }
    return output;
  }

 private:
  std::string alpha_min_;
  std::string epsilons_;
  double eps_min_ = kUnset;
  double eps_max_ = kUnset;
  int64_t eps_count_ = 50;
  SensitivityFlags sensitivity_;
  double r_ = 1.0;
};

class HistBenchCommand : public Command {
 public:
  explicit HistBenchCommand(CLI::App* parent)
      : Command(parent, "hist-bench",
                "l2 loss of Dirichlet, Gaussian and Laplace histogram releases") {
    params_.AddString("dims", &dims_, "dimensions d");
    params_.AddString("epsilons", &epsilons_, "RDP epsilons");
    params_.AddString("sample-sizes", &sample_sizes_, "sample sizes N");
    params_.AddInt("trials", &trials_, "trials per cell");
    params_.AddDouble("lambda", &lambda_, "Renyi order");
    params_.AddDouble("d2sq", &d2sq_, "squared l2 sensitivity");
    params_.AddDouble("dinf", &dinf_, "l-infinity sensitivity");
    params_.AddDouble("l1-sensitivity", &l1_, "Laplace l1 sensitivity");
    params_.AddFlag("project", &project_, "project baselines onto the simplex");
    params_.AddSeed(&seed_);
    params_.AddFlag("serial", &serial_, "run without OpenMP");
    params_.AddFlag("assert-crossover", &assert_crossover_,
                    "exit 3 unless every (d, eps) curve pair crosses once");
  }

 protected:
  absl::StatusOr<Output> Run() override {
    HistogramBenchmarkConfig config;
    ASSIGN_OR_RETURN(const std::vector<int64_t> dims, IntList(dims_, "dims"));
    for (int64_t d : dims) config.dimensions.push_back(static_cast<int>(d));
    ASSIGN_OR_RETURN(config.epsilons, DoubleList(epsilons_, "epsilons"));
    ASSIGN_OR_RETURN(config.sample_sizes, IntList(sample_sizes_, "sample-sizes"));
    config.trials = static_cast<int>(trials_);
    config.lambda = lambda_;
    ASSIGN_OR_RETURN(config.sensitivity, SensitivityBounds::Create(d2sq_, dinf_));
    config.l1_sensitivity = l1_;
    config.project = project_;
    ASSIGN_OR_RETURN(const std::vector<HistogramRow> rows,
                     RunHistogramBenchmark(config, seed_, ExecutionFor(serial_)));
    Output output;
    output.columns = {"mechanism", "d", "epsilon", "N",
                      "trials", "mean_l2_loss", "stderr"};
    for (const HistogramRow& row : rows) {
      output.rows.push_back({row.mechanism, int64_t{row.d}, row.epsilon, row.n,
                             int64_t{row.trials}, row.mean_l2_loss, row.std_error});
    }
    if (assert_crossover_) {
      std::vector<std::string> failed;
      for (int d : config.dimensions) {
        for (double eps : config.epsilons) {
          ASSIGN_OR_RETURN(const bool crosses, HasSingleCrossover(rows, d, eps));
          output.notes.push_back(absl::StrFormat(
              "crossover d %d eps %s: %s", d, FormatNumber(eps),
              crosses ? "single" : "absent or multiple"));
          if (!crosses) failed.push_back(absl::StrFormat("d %d eps %s", d, FormatNumber(eps)));
        }
      }
      if (!failed.empty()) {
        output.assertion_failure =
            "no single crossover for " + absl::StrJoin(failed, "; ");
      }
    }
    return output;
  }

 private:
  std::string dims_ = "10,1000";
  std::string epsilons_ = "0.01,0.1,1";
  std::string sample_sizes_ =
      "100,316,1000,3162,10000,31623,100000,316228,1000000";
  int64_t trials_ = 100;
  double lambda_ = 2.0;
  double d2sq_ = 2.0;
  double dinf_ = 1.0;
  double l1_ = 2.0;
  bool project_ = false;
  uint64_t seed_ = kDefaultSeed;
  bool serial_ = false;
  bool assert_crossover_ = false;
};

class PsrlCommand : public Command {
 public:
  explicit PsrlCommand(CLI::App* parent)
      : Command(parent, "psrl", "private posterior sampling RL on RiverSwim") {
    params_.AddString("epsilons", &epsilons_, "total Dirichlet budgets");
    params_.AddInt("episodes", &episodes_, "episodes per run");
    params_.AddInt("repetitions", &repetitions_, "runs per (variant, eps)");
    params_.AddString("variants", &variants_,
                      "subset of non_private, diffuse, concentrated");
    params_.AddDouble("lambda", &lambda_, "Renyi order");
    params_.AddDouble("prior-alpha", &prior_alpha_, "Dirichlet prior entry");
    params_.AddDouble("d2sq", &d2sq_, "squared l2 sensitivity of the counts");
    params_.AddDouble("dinf", &dinf_, "l-infinity sensitivity of the counts");
    params_.AddDouble("reward-epsilon", &reward_.epsilon, "reward noise budget");
    params_.AddDouble("reward-lambda-max", &reward_.lambda_max,
                      "largest order covered by the reward noise");
    params_.AddDouble("reward-sensitivity", &reward_.sensitivity, "reward range");
    params_.AddDouble("ng-mu0", &reward_prior_.mu0, "Normal-Gamma mu0");
    params_.AddDouble("ng-lambda0", &reward_prior_.lambda0, "Normal-Gamma lambda0");
    params_.AddDouble("ng-a0", &reward_prior_.a0, "Normal-Gamma a0");
    params_.AddDouble("ng-b0", &reward_prior_.b0, "Normal-Gamma b0");
    params_.AddString("env-config", &env_config_,
                      "RiverSwim parameter file (default: built-in values)");
    params_.AddSeed(&seed_);
    params_.AddFlag("serial", &serial_, "run without OpenMP");
    params_.AddFlag("assert-ordering", &assert_ordering_,
                    "exit 3 unless non_private >= diffuse >= concentrated");
  }

 protected:
  absl::StatusOr<Output> Run() override {
    RiverSwimParams env;
    if (!env_config_.empty()) {
      ASSIGN_OR_RETURN(const KeyValueConfig file, KeyValueConfig::Load(env_config_));
      RETURN_IF_ERROR(file.CheckKnownKeys(RiverSwimParams::ConfigKeys()));
      ASSIGN_OR_RETURN(env, RiverSwimParams::FromConfig(file));
    }
    ASSIGN_OR_RETURN(const TabularMdp mdp, RiverSwim(env));

    PsrlBenchmarkConfig config;
    ASSIGN_OR_RETURN(config.epsilons, DoubleList(epsilons_, "epsilons"));
    config.episodes = static_cast<int>(episodes_);
    config.repetitions = static_cast<int>(repetitions_);
    config.lambda = lambda_;
    config.variants.clear();
    for (absl::string_view name : absl::StrSplit(variants_, ',')) {
      ASSIGN_OR_RETURN(const PsrlVariant v,
                       ParseVariant(absl::StripAsciiWhitespace(name)));
      config.variants.push_back(v);
    }
    config.options.prior_alpha = prior_alpha_;
    ASSIGN_OR_RETURN(config.options.sensitivity,
                     SensitivityBounds::Create(d2sq_, dinf_));
    config.options.reward_prior = reward_prior_;
    config.reward = reward_;
    ASSIGN_OR_RETURN(const std::vector<PsrlRow> rows,
                     RunPsrlBenchmark(mdp, config, seed_, ExecutionFor(serial_)));

    Output output;
    output.columns = {"variant", "epsilon", "repetition", "episode",
                      "episodic_reward", "cumulative_reward",
                      "cumulative_rdp_epsilon"};
    for (const PsrlRow& row : rows) {
      output.rows.push_back({std::string(VariantName(row.variant)), row.epsilon,
                             int64_t{row.repetition}, int64_t{row.episode},
                             row.episodic_reward, row.cumulative_reward,
                             row.cumulative_rdp_epsilon});
    }
    Summarize(config, rows, output);
    return output;
  }

 private:
  static double MeanOf(const std::vector<double>& v) {
    double sum = 0.0;
    for (double x : v) sum += x;
    return v.empty() ? kUnset : sum / v.size();
  }

  void Summarize(const PsrlBenchmarkConfig& config,
                 const std::vector<PsrlRow>& rows, Output& output) const {
    auto has = [&](PsrlVariant v) {
      return std::find(config.variants.begin(), config.variants.end(), v) !=
             config.variants.end();
    };
    const std::vector<double> open =
        TotalRewards(rows, PsrlVariant::kNonPrivate, 0.0);
    std::vector<std::string> failed;
    for (double eps : config.epsilons) {
      const std::vector<double> diffuse =
          TotalRewards(rows, PsrlVariant::kDiffuse, eps);
      const std::vector<double> concentrated =
          TotalRewards(rows, PsrlVariant::kConcentrated, eps);
      std::string line = absl::StrFormat("summary eps %s: mean total reward",
                                         FormatNumber(eps));
      if (has(PsrlVariant::kNonPrivate)) {
        absl::StrAppend(&line, " non_private ", FormatNumber(MeanOf(open)));
      }
      if (has(PsrlVariant::kDiffuse)) {
        absl::StrAppend(&line, " diffuse ", FormatNumber(MeanOf(diffuse)));
      }
      if (has(PsrlVariant::kConcentrated)) {
        absl::StrAppend(&line, " concentrated ", FormatNumber(MeanOf(concentrated)));
      }
      if (!diffuse.empty() && !concentrated.empty()) {
        const auto test = MannWhitneyGreater(diffuse, concentrated);
        if (test.ok()) {
          absl::StrAppend(&line, "; diffuse > concentrated rank test p ",
                          FormatNumber(test->p_value));
        }
      }
      output.notes.push_back(line);
      if (assert_ordering_) {
        std::vector<double> chain;
        for (const auto* curve : {&open, &diffuse, &concentrated}) {
          if (!curve->empty()) chain.push_back(MeanOf(*curve));
        }
        for (size_t i = 1; i < chain.size(); ++i) {
          if (chain[i] > chain[i - 1]) {
            failed.push_back(absl::StrFormat("eps %s", FormatNumber(eps)));
            break;
          }
        }
      }
    }
    if (!failed.empty()) {
      output.assertion_failure =
          "reward ordering violated at " + absl::StrJoin(failed, ", ");
    }
  }

  std::string epsilons_ = "0.01,0.1,1,10";
  int64_t episodes_ = 300;
  int64_t repetitions_ = 20;
  std::string variants_ = "non_private,diffuse,concentrated";
  double lambda_ = 2.0;
  double prior_alpha_ = 10.0;
  double d2sq_ = 4.0;
  double dinf_ = 1.0;
  RewardPrivacy reward_;
  NormalGammaPrior reward_prior_;
  std::string env_config_;
  uint64_t seed_ = kDefaultSeed;
  bool serial_ = false;
  bool assert_ordering_ = false;
};

class KlUtilityCommand : public Command {
 public:
  explicit KlUtilityCommand(CLI::App* parent)
      : Command(parent, "kl-utility",
                "KL cost of a larger prior, with its closed-form bound") {
    params_.AddString("etas", &etas_, "Dir(eta) sparsity levels of p");
    params_.AddString("epsilons", &epsilons_, "RDP epsilons");
    params_.AddString("sample-sizes", &sample_sizes_, "sample sizes N");
    params_.AddInt("dim", &dim_, "dimension d");
    params_.AddInt("draws", &draws_, "draws per cell");
    params_.AddDouble("lambda", &lambda_, "Renyi order");
    params_.AddDouble("d2sq", &d2sq_, "squared l2 sensitivity");
    params_.AddDouble("dinf", &dinf_, "l-infinity sensitivity");
    params_.AddDouble("base-alpha", &base_alpha_, "non-private prior entry (>= 1)");
    params_.AddSeed(&seed_);
    params_.AddFlag("serial", &serial_, "run without OpenMP");
    params_.AddFlag("assert-bound", &assert_bound_,
                    "exit 3 if a mean KL exceeds its bound");
  }

 protected:
  absl::StatusOr<Output> Run() override {
    KlUtilityConfig config;
    ASSIGN_OR_RETURN(config.etas, DoubleList(etas_, "etas"));
    ASSIGN_OR_RETURN(config.epsilons, DoubleList(epsilons_, "epsilons"));
    ASSIGN_OR_RETURN(config.sample_sizes, IntList(sample_sizes_, "sample-sizes"));
    config.dimension = static_cast<int>(dim_);
    config.draws = static_cast<int>(draws_);
    config.lambda = lambda_;
    ASSIGN_OR_RETURN(config.sensitivity, SensitivityBounds::Create(d2sq_, dinf_));
    config.base_alpha = base_alpha_;
    ASSIGN_OR_RETURN(const std::vector<KlUtilityRow> rows,
                     RunKlUtilityBenchmark(config, seed_, ExecutionFor(serial_)));
    Output output;
    output.columns = {"eta", "epsilon", "N", "draws", "alpha_prime",
                      "mean_kl", "stderr", "mean_bound"};
    std::vector<std::string> failed;
    for (const KlUtilityRow& row : rows) {
      output.rows.push_back({row.eta, row.epsilon, row.n, int64_t{row.draws},
                             row.alpha_prime, row.mean_kl, row.std_error,
                             row.mean_bound});
      if (row.mean_kl > row.mean_bound) {
        failed.push_back(absl::StrFormat("eta %s eps %s N %d", FormatNumber(row.eta),
                                         FormatNumber(row.epsilon), row.n));
      }
    }
    if (assert_bound_ && !failed.empty()) {
      output.assertion_failure =
          "mean KL above bound at " + absl::StrJoin(failed, "; ");
    }
    return output;
  }

 private:
  std::string etas_ = "0.5,1,10";
  std::string epsilons_ = "0.01,0.1,1";
  std::string sample_sizes_ = "100,1000,10000";
  int64_t dim_ = 10;
  int64_t draws_ = 500;
  double lambda_ = 2.0;
  double d2sq_ = 2.0;
  double dinf_ = 1.0;
  double base_alpha_ = 1.0;
  uint64_t seed_ = kDefaultSeed;
  bool serial_ = false;
  bool assert_bound_ = false;
};

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app("Privacy accounting and experiments for Dirichlet posterior "
               "sampling.",
               "dirichlet-privacy");
  app.require_subcommand(1, 1);
  std::vector<std::unique_ptr<Command>> commands;
  commands.push_back(std::make_unique<GuaranteeCommand>(&app));
  commands.push_back(std::make_unique<SolveCommand>(&app));
  commands.push_back(std::make_unique<ConvertCommand>(&app));
  commands.push_back(std::make_unique<HistBenchCommand>(&app));
  commands.push_back(std::make_unique<PsrlCommand>(&app));
  commands.push_back(std::make_unique<KlUtilityCommand>(&app));

  std::vector<const char*> argv = {"dirichlet-privacy"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  for (const auto& command : commands) {
    if (command->app()->parsed()) return command->Execute(out, err);
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace dirichlet_privacy::cli
