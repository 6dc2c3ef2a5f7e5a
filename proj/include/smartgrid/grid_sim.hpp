#pragma once

#include <Eigen/Core>
#include <functional>
#include <vector>

#include "smartgrid/rng.hpp"
#include "smartgrid/types.hpp"

namespace smartgrid {

// One step of experience. run_episode fills (state, action, costs,
// next_state); the learning rollout additionally fills the policy action
// and the policy sensitivity d pi / d theta (rows follow the flattened
// action order, columns the flattened theta order).
struct Transition {
  SystemState state;
  JointAction action;
  double stage_cost = 0.0;
  double cost_spot = 0.0;
  double cost_peak = 0.0;
  double phi_b = 0.0;
  double phi_s = 0.0;
  SystemState next_state;
  bool terminal = false;

  JointAction policy_action;
  Eigen::MatrixXd sensitivity;  // 2*N_a x (6*N_a+1); empty until filled
  bool degenerate = false;      // sensitivity unusable; skipped by the learner
};

struct StepResult {
  SystemState next;
  double stage_cost;
  double cost_spot;
  double cost_peak;
};

struct EpisodeResult {
  std::vector<Transition> trajectory;
  double total_cost = 0.0;  // J, sum of stage costs over k = 0..K
  double final_peak = 0.0;  // P^peak_{K+1}
};

// Running-peak recursion: max of the incumbent peak and the collective
// buy/sell quantities of the hour. Throws NegativeInput.
double update_peak(double p_peak, double sum_buy, double sum_sell);

// Collective spot-market stage cost: sum_i (phi_b*buy_i - phi_s*sell_i).
double spot_stage_cost(const JointAction& action, double phi_b, double phi_s);

// Peak stage cost lambda*(p_peak_next - p_peak). Throws PeakDecreased if
// the recursion went backwards.
double peak_stage_cost(double p_peak_next, double p_peak, double lambda_peak);

// Advances the plant one hour. `rngs` holds one stream per agent for the
// surplus innovations. Throws ActionOutOfBounds, SocOutOfRange,
// EpisodeOver. Actions are accepted with a 1e-9 feasibility slack (values
// within the slack are snapped to the boundary); anything beyond is an
// error, never silently saturated.
StepResult step(const SystemState& state, const JointAction& action,
                const std::vector<AgentConfig>& cfgs, const PriceSeries& prices,
                double lambda_peak, std::vector<RngStream>& rngs);

using Policy = std::function<JointAction(const SystemState&)>;

SystemState initial_state(std::size_t num_agents, double soc0 = 0.01, double delta0 = 0.0);

// Rolls the plant for K+1 control steps (k = 0..K) from `init`, drawing
// per-agent noise streams from episode.seed.
EpisodeResult run_episode(const Policy& policy, const std::vector<AgentConfig>& cfgs,
                          const PriceSeries& prices, const EpisodeConfig& episode,
                          const SystemState& init);

}  // namespace smartgrid
