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

#include "dirichlet_privacy/psrl.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "absl/strings/ascii.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "dirichlet_privacy/dirichlet.h"
#include "dirichlet_privacy/status_macros.h"

namespace dirichlet_privacy {
namespace {

constexpr double kRowTolerance = 1e-12;

enum Stream : uint64_t { kEnvironment = 1, kAgent = 2 };

int SampleIndex(std::span<const double> probs, Rng& rng) {
  const double u = UniformOpen(rng);
  double cumulative = 0.0;
  for (size_t i = 0; i < probs.size(); ++i) {
    cumulative += probs[i];
    if (u < cumulative) return static_cast<int>(i);
  }
  // Rounding left u above the last partial sum: take the last nonzero entry.
  for (size_t i = probs.size(); i-- > 0;) {
    if (probs[i] > 0.0) return static_cast<int>(i);
  }
  return 0;
}

// Q(h, s, a) = R(s, a) + sum_s' P(s'|s, a) V(h + 1, s').
double QValue(const TabularMdp& mdp, std::span<const double> next_value, int s,
              int a) {
  double q = mdp.RewardMean(s, a);
  const std::span<const double> row = mdp.Row(a, s);
  for (int t = 0; t < mdp.n_states(); ++t) q += row[t] * next_value[t];
  return q;
}

struct Step {
  int next_state;
  double reward;
};

Step Simulate(const TabularMdp& mdp, int s, int a, Rng& rng) {
  const int next = SampleIndex(mdp.Row(a, s), rng);
  double reward = mdp.RewardMean(s, a);
  if (mdp.RewardSd(s, a) > 0.0) reward += mdp.RewardSd(s, a) * StandardNormal(rng);
  return {next, reward};
}

absl::Status CheckProbability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("%s must be a probability, got %g", name, p));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<TabularMdp> TabularMdp::Create(int n_states, int n_actions,
                                              int horizon,
                                              std::vector<double> transition,
                                              std::vector<double> reward_mean,
                                              std::vector<double> reward_sd,
                                              int initial_state) {
  if (n_states < 1 || n_actions < 1 || horizon < 1) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "need positive sizes, got |S| = %d, |A| = %d, H = %d", n_states,
        n_actions, horizon));
  }
  const size_t rows = static_cast<size_t>(n_states) * n_actions;
  if (transition.size() != rows * n_states || reward_mean.size() != rows ||
      reward_sd.size() != rows) {
    return absl::InvalidArgumentError("table sizes do not match |S| and |A|");
  }
  if (initial_state < 0 || initial_state >= n_states) {
    return absl::InvalidArgumentError(
        absl::StrFormat("initial state %d out of range", initial_state));
  }
  for (size_t row = 0; row < rows; ++row) {
    double sum = 0.0;
    for (int t = 0; t < n_states; ++t) {
      const double p = transition[row * n_states + t];
      if (!(p >= 0.0)) {
        return absl::InvalidArgumentError("negative transition probability");
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > kRowTolerance) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "transition row (a = %d, s = %d) sums to %.17g", row / n_states,
          row % n_states, sum));
    }
  }
  for (size_t i = 0; i < rows; ++i) {
    if (!std::isfinite(reward_mean[i]) || !(reward_sd[i] >= 0.0)) {
      return absl::InvalidArgumentError("invalid reward distribution");
    }
  }
  TabularMdp mdp;
  mdp.n_states_ = n_states;
  mdp.n_actions_ = n_actions;
  mdp.horizon_ = horizon;
  mdp.initial_state_ = initial_state;
  mdp.transition_ = std::move(transition);
  mdp.reward_mean_ = std::move(reward_mean);
  mdp.reward_sd_ = std::move(reward_sd);
  return mdp;
}

const std::vector<std::string>& RiverSwimParams::ConfigKeys() {
  static const auto* keys = new std::vector<std::string>{
      "n_states",       "horizon",           "initial_state",
      "left_end_stay",  "left_end_advance",  "regress",
      "stay",           "advance",           "right_end_regress",
      "right_end_stay", "left_reward",       "right_reward",
      "reward_sd"};
  return *keys;
}

absl::StatusOr<RiverSwimParams> RiverSwimParams::FromConfig(
    const KeyValueConfig& config) {
  RiverSwimParams p;
  ASSIGN_OR_RETURN(const int64_t n_states, config.GetInt("n_states", p.n_states));
  ASSIGN_OR_RETURN(const int64_t horizon, config.GetInt("horizon", p.horizon));
  ASSIGN_OR_RETURN(const int64_t initial,
                   config.GetInt("initial_state", p.initial_state));
  p.n_states = static_cast<int>(n_states);
  p.horizon = static_cast<int>(horizon);
  p.initial_state = static_cast<int>(initial);
  struct Field {
    const char* key;
    double* value;
  };
  for (const Field& f : {Field{"left_end_stay", &p.left_end_stay},
                         Field{"left_end_advance", &p.left_end_advance},
                         Field{"regress", &p.regress}, Field{"stay", &p.stay},
                         Field{"advance", &p.advance},
                         Field{"right_end_regress", &p.right_end_regress},
                         Field{"right_end_stay", &p.right_end_stay},
                         Field{"left_reward", &p.left_reward},
                         Field{"right_reward", &p.right_reward},
                         Field{"reward_sd", &p.reward_sd}}) {
    ASSIGN_OR_RETURN(*f.value, config.GetDouble(f.key, *f.value));
  }
  return p;
}

absl::StatusOr<TabularMdp> RiverSwim(const RiverSwimParams& params) {
  const int n = params.n_states;
  if (n < 2) {
    return absl::InvalidArgumentError(
        absl::StrFormat("RiverSwim needs at least 2 states, got %d", n));
  }
  for (const auto& [value, name] :
       {std::pair{params.left_end_stay, "left_end_stay"},
        std::pair{params.left_end_advance, "left_end_advance"},
        std::pair{params.regress, "regress"}, std::pair{params.stay, "stay"},
        std::pair{params.advance, "advance"},
        std::pair{params.right_end_regress, "right_end_regress"},
        std::pair{params.right_end_stay, "right_end_stay"}}) {
    RETURN_IF_ERROR(CheckProbability(value, name));
  }
  std::vector<double> transition(2 * n * n, 0.0);
  auto at = [&](int a, int s, int t) -> double& {
    return transition[(static_cast<size_t>(a) * n + s) * n + t];
  };
  for (int s = 0; s < n; ++s) at(kLeft, s, std::max(s - 1, 0)) = 1.0;
  at(kRight, 0, 0) = params.left_end_stay;
  at(kRight, 0, 1) = params.left_end_advance;
  for (int s = 1; s + 1 < n; ++s) {
    at(kRight, s, s - 1) = params.regress;
    at(kRight, s, s) = params.stay;
    at(kRight, s, s + 1) = params.advance;
  }
  at(kRight, n - 1, n - 2) += params.right_end_regress;
  at(kRight, n - 1, n - 1) += params.right_end_stay;

  std::vector<double> reward_mean(2 * n, 0.0);
  reward_mean[0 * 2 + kLeft] = params.left_reward;
  reward_mean[(n - 1) * 2 + kRight] = params.right_reward;
  std::vector<double> reward_sd(2 * n, params.reward_sd);
  return TabularMdp::Create(n, 2, params.horizon, std::move(transition),
                            std::move(reward_mean), std::move(reward_sd),
                            params.initial_state);
}

absl::StatusOr<TabularMdp> RiverSwim(int n_states, int horizon) {
  RiverSwimParams params;
  params.n_states = n_states;
  params.horizon = horizon;
  return RiverSwim(params);
}

PlanResult PlanFiniteHorizon(const TabularMdp& mdp) {
  const int n = mdp.n_states();
  const int horizon = mdp.horizon();
  PlanResult result;
  result.policy = {n, horizon, std::vector<int>(static_cast<size_t>(horizon) * n)};
  std::vector<double> next_value(n, 0.0);
  std::vector<double> value(n);
  for (int h = horizon - 1; h >= 0; --h) {
    for (int s = 0; s < n; ++s) {
      int best_action = 0;
      double best = QValue(mdp, next_value, s, 0);
      for (int a = 1; a < mdp.n_actions(); ++a) {
        const double q = QValue(mdp, next_value, s, a);
        if (q > best) {
          best = q;
          best_action = a;
        }
      }
      value[s] = best;
      result.policy.action[static_cast<size_t>(h) * n + s] = best_action;
    }
    next_value.swap(value);
  }
  result.value = std::move(next_value);
  return result;
}

std::vector<double> EvaluatePolicy(const TabularMdp& mdp,
                                   const Policy& policy) {
  const int n = mdp.n_states();
  std::vector<double> next_value(n, 0.0);
  std::vector<double> value(n);
  for (int h = mdp.horizon() - 1; h >= 0; --h) {
    for (int s = 0; s < n; ++s) {
      value[s] = QValue(mdp, next_value, s, policy.At(h, s));
    }
    next_value.swap(value);
  }
  return next_value;
}

absl::string_view VariantName(PsrlVariant variant) {
  switch (variant) {
    case PsrlVariant::kNonPrivate:
      return "non_private";
    case PsrlVariant::kDiffuse:
      return "diffuse";
    case PsrlVariant::kConcentrated:
      return "concentrated";
  }
  return "unknown";
}

absl::StatusOr<PsrlVariant> ParseVariant(absl::string_view name) {
  for (PsrlVariant v : {PsrlVariant::kNonPrivate, PsrlVariant::kDiffuse,
                        PsrlVariant::kConcentrated}) {
    if (VariantName(v) == name) return v;
  }
  return absl::InvalidArgumentError(absl::StrFormat(
      "unknown variant '%s' (expected non_private, diffuse or concentrated)",
      name));
}

absl::StatusOr<double> RewardNoiseVariance(const RewardPrivacy& privacy) {
  if (!(privacy.epsilon > 0.0) || !(privacy.lambda_max > 1.0) ||
      !std::isfinite(privacy.lambda_max) || !(privacy.sensitivity >= 0.0)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "invalid reward privacy (eps = %g, lambda_max = %g, sensitivity = %g)",
        privacy.epsilon, privacy.lambda_max, privacy.sensitivity));
  }
  return privacy.lambda_max * privacy.sensitivity * privacy.sensitivity /
         (2.0 * privacy.epsilon);
}

absl::StatusOr<PrivacyBudgetPlan> PrivacyBudgetPlan::Create(
    PsrlVariant variant, const RdpGuarantee& total, int episodes,
    RewardPrivacy reward) {
  if (variant == PsrlVariant::kNonPrivate) return NonPrivate(episodes);
  if (episodes < 1) {
    return absl::InvalidArgumentError("need at least one episode");
  }
  ASSIGN_OR_RETURN(const RdpGuarantee checked,
                   RdpGuarantee::Create(total.lambda, total.epsilon));
  if (!(checked.epsilon > 0.0)) {
    return absl::InvalidArgumentError("private variants need a positive budget");
  }
  RETURN_IF_ERROR(RewardNoiseVariance(reward).status());
  PrivacyBudgetPlan plan;
  plan.variant = variant;
  plan.episodes = episodes;
  plan.total = checked;
  plan.per_episode = {checked.lambda, checked.epsilon / episodes};
  plan.reward = reward;
  return plan;
}

absl::StatusOr<PrivacyBudgetPlan> PrivacyBudgetPlan::NonPrivate(int episodes) {
  if (episodes < 1) {
    return absl::InvalidArgumentError("need at least one episode");
  }
  PrivacyBudgetPlan plan;
  plan.variant = PsrlVariant::kNonPrivate;
  plan.episodes = episodes;
  plan.total = {2.0, kInfiniteEpsilon};
  plan.per_episode = {2.0, kInfiniteEpsilon};
  return plan;
}

absl::StatusOr<std::vector<double>> SampleRewardMeans(
    std::span<const RewardStats> stats, const NormalGammaPrior& prior,
    const RewardPrivacy* privacy, Rng& rng) {
  if (!(prior.lambda0 > 0.0) || !(prior.a0 > 0.0) || !(prior.b0 > 0.0)) {
    return absl::InvalidArgumentError("Normal-Gamma prior needs positive "
                                      "lambda0, a0 and b0");
  }
  double noise_variance = 0.0;
  if (privacy != nullptr) {
    ASSIGN_OR_RETURN(noise_variance, RewardNoiseVariance(*privacy));
  }
  std::vector<double> means(stats.size());
  for (size_t i = 0; i < stats.size(); ++i) {
    const RewardStats& st = stats[i];
    const double lambda_n = prior.lambda0 + st.count;
    const double mu_n = (prior.lambda0 * prior.mu0 + st.sum) / lambda_n;
    const double a_n = prior.a0 + 0.5 * st.count;
    double b_n = prior.b0;
    if (st.count > 0.0) {
      const double mean = st.sum / st.count;
      const double scatter = std::max(0.0, st.sum_sq - st.sum * mean);
      b_n += 0.5 * scatter + prior.lambda0 * st.count *
                                 (mean - prior.mu0) * (mean - prior.mu0) /
                                 (2.0 * lambda_n);
    }
    // tau ~ Gamma(a_n, rate b_n), mu | tau ~ N(mu_n, 1 / (lambda_n tau)).
    const double tau = GammaVariate(a_n, rng) / b_n;
    means[i] = mu_n + StandardNormal(rng) / std::sqrt(lambda_n * tau);
    if (privacy != nullptr) {
      means[i] += std::sqrt(noise_variance) / lambda_n * StandardNormal(rng);
    }
  }
  return means;
}

absl::StatusOr<SamplingParameters> ResolveSampling(
    const PrivacyBudgetPlan& plan, const PsrlOptions& options) {
  if (!(options.prior_alpha > 0.0) || !std::isfinite(options.prior_alpha)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("prior alpha must be positive, got %g",
                        options.prior_alpha));
  }
  SamplingParameters params;
  params.alpha = options.prior_alpha;
  switch (plan.variant) {
    case PsrlVariant::kNonPrivate:
      return params;
    case PsrlVariant::kDiffuse: {
      ASSIGN_OR_RETURN(params.r, RForTarget(plan.per_episode,
                                            options.sensitivity,
                                            options.prior_alpha));
      break;
    }
    case PsrlVariant::kConcentrated: {
      ASSIGN_OR_RETURN(const double alpha_min,
                       AlphaMinForTarget(plan.per_episode, options.sensitivity));
      params.alpha = std::max(alpha_min, options.prior_alpha);
      break;
    }
  }
  ASSIGN_OR_RETURN(params.achieved_epsilon,
                   RdpEpsilon(plan.per_episode.lambda, options.sensitivity,
                              params.alpha, params.r));
  const double target = plan.per_episode.epsilon;
  if (!std::isfinite(params.achieved_epsilon) ||
      params.achieved_epsilon > target * (1.0 + 1e-8)) {
    return absl::FailedPreconditionError(absl::StrFormat(
        "per-episode budget %g is infeasible for %s sampling (achieved %g)",
        target, VariantName(plan.variant), params.achieved_epsilon));
  }
  return params;
}

void EpisodeLedger::Record(const RdpGuarantee& spent, double episodic_reward) {
  EpisodeRecord record;
  record.episode = static_cast<int>(records_.size());
  record.spent = spent;
  record.cumulative =
      records_.empty() ? spent : Compose(records_.back().cumulative, spent);
  record.episodic_reward = episodic_reward;
  records_.push_back(record);
}

double EpisodeLedger::TotalReward() const {
  double total = 0.0;
  for (const EpisodeRecord& r : records_) total += r.episodic_reward;
  return total;
}

RdpGuarantee EpisodeLedger::Cumulative() const {
  return records_.empty() ? RdpGuarantee{2.0, 0.0} : records_.back().cumulative;
}

absl::StatusOr<EpisodeLedger> PsrlRun(const TabularMdp& mdp,
                                      const PrivacyBudgetPlan& plan,
                                      const PsrlOptions& options,
                                      uint64_t environment_seed,
                                      uint64_t agent_seed) {
  ASSIGN_OR_RETURN(const SamplingParameters sampling,
                   ResolveSampling(plan, options));
  if (plan.episodes < 1) {
    return absl::InvalidArgumentError("need at least one episode");
  }
  const int n = mdp.n_states();
  const int num_actions = mdp.n_actions();
  const size_t rows = static_cast<size_t>(n) * num_actions;
  const RewardPrivacy* reward_privacy =
      plan.variant == PsrlVariant::kNonPrivate ? nullptr : &plan.reward;

  Rng env_rng(environment_seed);
  Rng agent_rng(agent_seed);
  // counts[(a * n + s) * n + s'] and reward_stats[s * |A| + a].
  std::vector<double> counts(rows * n, 0.0);
  std::vector<RewardStats> reward_stats(rows);
  std::vector<double> sampled_transition(rows * n);
  std::vector<double> zero_sd(rows, 0.0);
  std::vector<double> params(n);

  EpisodeLedger ledger;
  for (int episode = 0; episode < plan.episodes; ++episode) {
    for (size_t row = 0; row < rows; ++row) {
      for (int t = 0; t < n; ++t) {
        params[t] = sampling.r * counts[row * n + t] + sampling.alpha;
      }
      ASSIGN_OR_RETURN(const DirichletParams posterior,
                       DirichletParams::Create(params));
      const SimplexPoint draw = SampleDirichlet(posterior, agent_rng);
      std::copy(draw.probs().begin(), draw.probs().end(),
                sampled_transition.begin() + row * n);
    }
    ASSIGN_OR_RETURN(std::vector<double> reward_means,
                     SampleRewardMeans(reward_stats, options.reward_prior,
                                       reward_privacy, agent_rng));
    ASSIGN_OR_RETURN(const TabularMdp sampled,
                     TabularMdp::Create(n, num_actions, mdp.horizon(),
                                        sampled_transition,
                                        std::move(reward_means), zero_sd,
                                        mdp.initial_state()));
    const Policy policy = PlanFiniteHorizon(sampled).policy;

    double episodic_reward = 0.0;
    int s = mdp.initial_state();
    for (int h = 0; h < mdp.horizon(); ++h) {
      const int a = policy.At(h, s);
      const Step step = Simulate(mdp, s, a, env_rng);
      counts[(static_cast<size_t>(a) * n + s) * n + step.next_state] += 1.0;
      reward_stats[static_cast<size_t>(s) * num_actions + a].Add(step.reward);
      episodic_reward += step.reward;
      s = step.next_state;
    }
    ledger.Record(plan.per_episode, episodic_reward);
  }
  return ledger;
}

absl::StatusOr<EpisodeLedger> PsrlRun(const TabularMdp& mdp,
                                      const PrivacyBudgetPlan& plan,
                                      const PsrlOptions& options,
                                      uint64_t seed) {
  return PsrlRun(mdp, plan, options, DeriveSeed(seed, kEnvironment),
                 DeriveSeed(seed, kAgent));
}

double RandomPolicyReward(const TabularMdp& mdp, int episodes, uint64_t seed) {
  Rng rng(seed);
  std::uniform_int_distribution<int> action(0, mdp.n_actions() - 1);
  double total = 0.0;
  for (int episode = 0; episode < episodes; ++episode) {
    int s = mdp.initial_state();
    for (int h = 0; h < mdp.horizon(); ++h) {
      const Step step = Simulate(mdp, s, action(rng), rng);
      total += step.reward;
      s = step.next_state;
    }
  }
  return episodes > 0 ? total / episodes : 0.0;
}

const std::vector<std::string>& PsrlBenchmarkConfig::ConfigKeys() {
  static const auto* keys = new std::vector<std::string>{
      "epsilons",       "episodes",          "repetitions",
      "lambda",         "variants",          "prior_alpha",
      "d2sq",           "dinf",              "reward_epsilon",
      "reward_lambda_max", "reward_sensitivity", "ng_mu0",
      "ng_lambda0",     "ng_a0",             "ng_b0"};
  return *keys;
}

absl::StatusOr<PsrlBenchmarkConfig> PsrlBenchmarkConfig::FromConfig(
    const KeyValueConfig& config) {
  PsrlBenchmarkConfig c;
  ASSIGN_OR_RETURN(c.epsilons, config.GetDoubleList("epsilons", c.epsilons));
  ASSIGN_OR_RETURN(const int64_t episodes,
                   config.GetInt("episodes", c.episodes));
  ASSIGN_OR_RETURN(const int64_t repetitions,
                   config.GetInt("repetitions", c.repetitions));
  c.episodes = static_cast<int>(episodes);
  c.repetitions = static_cast<int>(repetitions);
  ASSIGN_OR_RETURN(c.lambda, config.GetDouble("lambda", c.lambda));
  if (config.Has("variants")) {
    ASSIGN_OR_RETURN(const std::string names, config.GetString("variants", ""));
    c.variants.clear();
    for (absl::string_view name : absl::StrSplit(names, ',')) {
      ASSIGN_OR_RETURN(const PsrlVariant v,
                       ParseVariant(absl::StripAsciiWhitespace(name)));
      c.variants.push_back(v);
    }
  }
  PsrlOptions& o = c.options;
  ASSIGN_OR_RETURN(o.prior_alpha, config.GetDouble("prior_alpha", o.prior_alpha));
  ASSIGN_OR_RETURN(const double delta2_sq,
                   config.GetDouble("d2sq", o.sensitivity.delta2_sq));
  ASSIGN_OR_RETURN(const double delta_inf,
                   config.GetDouble("dinf", o.sensitivity.delta_inf));
  ASSIGN_OR_RETURN(o.sensitivity, SensitivityBounds::Create(delta2_sq, delta_inf));
  ASSIGN_OR_RETURN(c.reward.epsilon,
                   config.GetDouble("reward_epsilon", c.reward.epsilon));
  ASSIGN_OR_RETURN(c.reward.lambda_max,
                   config.GetDouble("reward_lambda_max", c.reward.lambda_max));
  ASSIGN_OR_RETURN(c.reward.sensitivity,
                   config.GetDouble("reward_sensitivity", c.reward.sensitivity));
  NormalGammaPrior& ng = o.reward_prior;
  ASSIGN_OR_RETURN(ng.mu0, config.GetDouble("ng_mu0", ng.mu0));
  ASSIGN_OR_RETURN(ng.lambda0, config.GetDouble("ng_lambda0", ng.lambda0));
  ASSIGN_OR_RETURN(ng.a0, config.GetDouble("ng_a0", ng.a0));
  ASSIGN_OR_RETURN(ng.b0, config.GetDouble("ng_b0", ng.b0));
  return c;
}

absl::StatusOr<std::vector<PsrlRow>> RunPsrlBenchmark(
    const TabularMdp& mdp, const PsrlBenchmarkConfig& config, uint64_t seed,
    Execution execution) {
  if (config.repetitions < 1 || config.episodes < 1) {
    return absl::InvalidArgumentError("need positive episodes and repetitions");
  }
  if (config.variants.empty()) {
    return absl::InvalidArgumentError("no variants selected");
  }
  struct RunSpec {
    PsrlVariant variant;
    size_t epsilon_index;
    int repetition;
    PrivacyBudgetPlan plan;
  };
  std::vector<RunSpec> runs;
  for (PsrlVariant variant : config.variants) {
    const bool is_private = variant != PsrlVariant::kNonPrivate;
    if (is_private && config.epsilons.empty()) {
      return absl::InvalidArgumentError("empty epsilon grid");
    }
    const size_t num_eps = is_private ? config.epsilons.size() : 1;
    for (size_t ei = 0; ei < num_eps; ++ei) {
      PrivacyBudgetPlan plan;
      if (is_private) {
        ASSIGN_OR_RETURN(plan, PrivacyBudgetPlan::Create(
                                   variant, {config.lambda, config.epsilons[ei]},
                                   config.episodes, config.reward));
      } else {
        ASSIGN_OR_RETURN(plan, PrivacyBudgetPlan::NonPrivate(config.episodes));
      }
      // Fail before any episode runs if the budget cannot be met.
      RETURN_IF_ERROR(ResolveSampling(plan, config.options).status());
      for (int rep = 0; rep < config.repetitions; ++rep) {
        runs.push_back({variant, ei, rep, plan});
      }
    }
  }

  std::vector<std::vector<PsrlRow>> results(runs.size());
  std::vector<absl::Status> statuses(runs.size());
  ForEachTask(static_cast<int64_t>(runs.size()), execution, [&](int64_t i) {
    const RunSpec& run = runs[i];
    const uint64_t rep = static_cast<uint64_t>(run.repetition);
    auto ledger = PsrlRun(
        mdp, run.plan, config.options, DeriveSeed(seed, {kEnvironment, rep}),
        DeriveSeed(seed, {kAgent, static_cast<uint64_t>(run.variant),
                          run.epsilon_index, rep}));
    if (!ledger.ok()) {
      statuses[i] = ledger.status();
      return;
    }
    const double epsilon = run.variant == PsrlVariant::kNonPrivate
                               ? kInfiniteEpsilon
                               : config.epsilons[run.epsilon_index];
    double cumulative = 0.0;
    for (const EpisodeRecord& record : ledger->records()) {
      cumulative += record.episodic_reward;
      results[i].push_back({run.variant, epsilon, run.repetition,
                            record.episode, record.episodic_reward, cumulative,
                            record.cumulative.epsilon});
    }
  });
  for (const absl::Status& s : statuses) RETURN_IF_ERROR(s);
  std::vector<PsrlRow> rows;
  for (auto& r : results) rows.insert(rows.end(), r.begin(), r.end());
  return rows;
}

std::vector<double> TotalRewards(const std::vector<PsrlRow>& rows,
                                 PsrlVariant variant, double epsilon) {
  std::vector<double> totals;
  for (const PsrlRow& row : rows) {
    if (row.variant != variant) continue;
    if (variant != PsrlVariant::kNonPrivate && row.epsilon != epsilon) continue;
    if (row.repetition >= static_cast<int>(totals.size())) {
      totals.resize(row.repetition + 1, 0.0);
    }
    totals[row.repetition] += row.episodic_reward;
  }
  return totals;
}

}  // namespace dirichlet_privacy
