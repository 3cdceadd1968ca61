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

// Posterior sampling for reinforcement learning with private model draws.
//
// Each episode the agent samples transition rows P(.|s, a) from Dirichlet
// posteriors and reward means from Normal-Gamma posteriors, plans in the
// sampled MDP by backward induction, and acts greedily for H steps. The
// private variants replace Dir(x + alpha) by
//
//   diffuse:      Dir(r x + alpha),   r solved for the per-episode budget
//   concentrated: Dir(x + alpha'),    alpha' solved for the per-episode budget
//
// and add Gaussian noise to the sampled reward means. All rows of one
// episode form a single release, so T episodes compose to T times the
// per-episode budget.

#ifndef DIRICHLET_PRIVACY_PSRL_H_
#define DIRICHLET_PRIVACY_PSRL_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "dirichlet_privacy/accountant.h"
#include "dirichlet_privacy/config.h"
#include "dirichlet_privacy/parallel.h"
#include "dirichlet_privacy/random.h"

namespace dirichlet_privacy {

// Finite-horizon tabular MDP. Rewards are Gaussian with per-(s, a) mean and
// standard deviation (zero for deterministic rewards).
class TabularMdp {
 public:
  // `transition` is indexed [a][s][s'] and flattened; `reward_mean` and
  // `reward_sd` are indexed [s][a]. Rows must sum to 1 within 1e-12.
  static absl::StatusOr<TabularMdp> Create(int n_states, int n_actions,
                                           int horizon,
                                           std::vector<double> transition,
                                           std::vector<double> reward_mean,
                                           std::vector<double> reward_sd,
                                           int initial_state);

  int n_states() const { return n_states_; }
  int n_actions() const { return n_actions_; }
  int horizon() const { return horizon_; }
  int initial_state() const { return initial_state_; }

  double P(int a, int s, int next) const {
    return transition_[(static_cast<size_t>(a) * n_states_ + s) * n_states_ +
                       next];
  }
  std::span<const double> Row(int a, int s) const {
    return std::span<const double>(transition_).subspan(
        (static_cast<size_t>(a) * n_states_ + s) * n_states_, n_states_);
  }
  double RewardMean(int s, int a) const {
    return reward_mean_[static_cast<size_t>(s) * n_actions_ + a];
  }
  double RewardSd(int s, int a) const {
    return reward_sd_[static_cast<size_t>(s) * n_actions_ + a];
  }

 private:
  TabularMdp() = default;

  int n_states_ = 0;
  int n_actions_ = 0;
  int horizon_ = 0;
  int initial_state_ = 0;
  std::vector<double> transition_;
  std::vector<double> reward_mean_;
  std::vector<double> reward_sd_;
};

inline constexpr int kLeft = 0;
inline constexpr int kRight = 1;

// Chain with n_states states; action 0 swims left, action 1 swims right
// against the current.
struct RiverSwimParams {
  int n_states = 6;
  int horizon = 30;
  int initial_state = 0;
  // "right" at the leftmost state.
  double left_end_stay = 0.4;
  double left_end_advance = 0.6;
  // "right" at interior states.
  double regress = 0.05;
  double stay = 0.6;
  double advance = 0.35;
  // "right" at the rightmost state.
  double right_end_regress = 0.4;
  double right_end_stay = 0.6;
  // Reward for "left" at the leftmost state and "right" at the rightmost.
  double left_reward = 0.005;
  double right_reward = 1.0;
  double reward_sd = 0.0;

  // Reads the keys named like the fields above; absent keys keep defaults.
  static absl::StatusOr<RiverSwimParams> FromConfig(
      const KeyValueConfig& config);
  static const std::vector<std::string>& ConfigKeys();
};

absl::StatusOr<TabularMdp> RiverSwim(const RiverSwimParams& params);
absl::StatusOr<TabularMdp> RiverSwim(int n_states = 6, int horizon = 30);

// Nonstationary deterministic policy, action[h * n_states + s].
struct Policy {
  int n_states = 0;
  int horizon = 0;
  std::vector<int> action;

  int At(int h, int s) const { return action[h * n_states + s]; }
};

struct PlanResult {
  Policy policy;
  // Optimal expected return from each state at step 0.
  std::vector<double> value;
};

// Exact optimal policy by backward induction over the horizon. Ties go to
// the lower action index.
PlanResult PlanFiniteHorizon(const TabularMdp& mdp);

// Expected return of `policy` from each state at step 0.
std::vector<double> EvaluatePolicy(const TabularMdp& mdp, const Policy& policy);

enum class PsrlVariant { kNonPrivate, kDiffuse, kConcentrated };

absl::string_view VariantName(PsrlVariant variant);
absl::StatusOr<PsrlVariant> ParseVariant(absl::string_view name);

// Gaussian noise on the sampled reward means. The release is
// (lambda, epsilon)-RDP for every order up to lambda_max.
struct RewardPrivacy {
  double epsilon = 0.5;
  double lambda_max = 32.0;
  // Range of a single reward.
  double sensitivity = 1.0;
};

// lambda_max * sensitivity^2 / (2 epsilon).
absl::StatusOr<double> RewardNoiseVariance(const RewardPrivacy& privacy);

struct PrivacyBudgetPlan {
  PsrlVariant variant = PsrlVariant::kNonPrivate;
  int episodes = 0;
  // Dirichlet draws only. Infinite epsilon for the non-private variant.
  RdpGuarantee total;
  RdpGuarantee per_episode;
  RewardPrivacy reward;

  // per_episode = (total.lambda, total.epsilon / episodes).
  static absl::StatusOr<PrivacyBudgetPlan> Create(PsrlVariant variant,
                                                  const RdpGuarantee& total,
                                                  int episodes,
                                                  RewardPrivacy reward = {});
  static absl::StatusOr<PrivacyBudgetPlan> NonPrivate(int episodes);
};

struct NormalGammaPrior {
  double mu0 = 0.0;
  double lambda0 = 1.0;
  double a0 = 1.0;
  double b0 = 1.0;
};

// Sufficient statistics of the rewards observed at one (s, a).
struct RewardStats {
  double count = 0.0;
  double sum = 0.0;
  double sum_sq = 0.0;

  void Add(double reward) {
    count += 1.0;
    sum += reward;
    sum_sq += reward * reward;
  }
};

// Draws one mean per entry of `stats` from its Normal-Gamma posterior. With
// `privacy` set, adds N(0, v / (lambda0 + count)^2) with
// v = RewardNoiseVariance(*privacy), the noise for a posterior mean whose
// sensitivity to one reward is sensitivity / (lambda0 + count).
absl::StatusOr<std::vector<double>> SampleRewardMeans(
    std::span<const RewardStats> stats, const NormalGammaPrior& prior,
    const RewardPrivacy* privacy, Rng& rng);

struct PsrlOptions {
  double prior_alpha = 10.0;
  SensitivityBounds sensitivity{4.0, 1.0};
  NormalGammaPrior reward_prior;
};

// Dirichlet parameters of one episode's draw: Dir(r x + alpha).
struct SamplingParameters {
  double r = 1.0;
  double alpha = 0.0;
  // Epsilon of one draw at plan.per_episode.lambda.
  double achieved_epsilon = kInfiniteEpsilon;
};

// Solves r (diffuse) or alpha' (concentrated) for the per-episode budget and
// verifies the forward guarantee within 1e-8 relative.
absl::StatusOr<SamplingParameters> ResolveSampling(
    const PrivacyBudgetPlan& plan, const PsrlOptions& options);

struct EpisodeRecord {
  int episode = 0;
  RdpGuarantee spent;
  RdpGuarantee cumulative;
  double episodic_reward = 0.0;
};

class EpisodeLedger {
 public:
  // Appends one episode; the cumulative guarantee is the composition of the
  // previous cumulative guarantee with `spent`.
  void Record(const RdpGuarantee& spent, double episodic_reward);

  const std::vector<EpisodeRecord>& records() const { return records_; }
  double TotalReward() const;
  RdpGuarantee Cumulative() const;

 private:
  std::vector<EpisodeRecord> records_;
};

// Runs plan.episodes episodes of PSRL on `mdp`. State transitions and
// observed rewards come from `environment_seed`; posterior draws and
// privacy noise from `agent_seed`.
absl::StatusOr<EpisodeLedger> PsrlRun(const TabularMdp& mdp,
                                      const PrivacyBudgetPlan& plan,
                                      const PsrlOptions& options,
                                      uint64_t environment_seed,
                                      uint64_t agent_seed);
// Both streams derived from one seed.
absl::StatusOr<EpisodeLedger> PsrlRun(const TabularMdp& mdp,
                                      const PrivacyBudgetPlan& plan,
                                      const PsrlOptions& options,
                                      uint64_t seed);

// Mean episodic reward of the uniformly random policy over `episodes`.
double RandomPolicyReward(const TabularMdp& mdp, int episodes, uint64_t seed);

struct PsrlBenchmarkConfig {
  std::vector<double> epsilons = {0.1, 1.0, 10.0};
  int episodes = 300;
  int repetitions = 20;
  double lambda = 2.0;
  std::vector<PsrlVariant> variants = {PsrlVariant::kNonPrivate,
                                       PsrlVariant::kDiffuse,
                                       PsrlVariant::kConcentrated};
  PsrlOptions options;
  RewardPrivacy reward;

  // Keys: epsilons, episodes, repetitions, lambda, variants, prior_alpha,
  // delta2_sq, delta_inf, reward_epsilon, reward_lambda_max,
  // reward_sensitivity, ng_mu0, ng_lambda0, ng_a0, ng_b0.
  static absl::StatusOr<PsrlBenchmarkConfig> FromConfig(
      const KeyValueConfig& config);
  static const std::vector<std::string>& ConfigKeys();
};

struct PsrlRow {
  PsrlVariant variant = PsrlVariant::kNonPrivate;
  // Total Dirichlet budget; infinite for the non-private variant.
  double epsilon = 0.0;
  int repetition = 0;
  int episode = 0;
  double episodic_reward = 0.0;
  double cumulative_reward = 0.0;
  double cumulative_rdp_epsilon = 0.0;
};

// One run per (variant, eps, repetition); the non-private variant runs once
// per repetition. Repetition k uses the same environment stream in every
// run. Rows are ordered by variant, eps, repetition and episode.
absl::StatusOr<std::vector<PsrlRow>> RunPsrlBenchmark(
    const TabularMdp& mdp, const PsrlBenchmarkConfig& config, uint64_t seed,
    Execution execution = Execution::kParallel);

// Total reward of each repetition for one (variant, eps) curve.
std::vector<double> TotalRewards(const std::vector<PsrlRow>& rows,
                                 PsrlVariant variant, double epsilon);

}  // namespace dirichlet_privacy

#endif  // DIRICHLET_PRIVACY_PSRL_H_
