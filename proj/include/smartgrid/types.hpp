#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "smartgrid/errors.hpp"

namespace smartgrid {

// Per-agent physical state: relative state of charge in [0,1] and the
// local production-consumption surplus in kWh.
struct AgentState {
  double soc = 0.0;
  double delta = 0.0;
};

// Fixed plant parameters of one agent.
struct AgentConfig {
  double alpha = 0.01;      // inverse battery size, 1/kWh
  double beta = 0.9;        // surplus autoregression coefficient, in [0,1)
  double noise_mean = 0.0;  // surplus innovation mean, kWh
  double noise_std = 0.5;   // surplus innovation standard deviation, kWh
  double u_max = 15.0;      // buy/sell bound per hour, kWh

  void validate() const {
    if (!(alpha > 0.0)) throw ConfigError("agent alpha must be > 0");
    if (!(beta >= 0.0 && beta < 1.0)) throw ConfigError("agent beta must be in [0,1)");
    if (!(noise_std >= 0.0)) throw ConfigError("agent noise_std must be >= 0");
    if (!(u_max > 0.0)) throw ConfigError("agent u_max must be > 0");
  }
};

// Full system state: the RL state s_k.
struct SystemState {
  std::vector<AgentState> agents;
  double p_peak = 0.0;  // running collective peak, kWh; non-decreasing
  int k = 0;            // hour index in [0, K]

  std::size_t num_agents() const { return agents.size(); }
};

// Joint buy/sell action, kWh; the RL action a_k. Flattened component
// order is (buy[0], sell[0], buy[1], sell[1], ...).
struct JointAction {
  std::vector<double> buy;
  std::vector<double> sell;

  std::size_t num_agents() const { return buy.size(); }
};

// Hourly buy/sell price pair series, currency/kWh.
struct PriceSeries {
  std::vector<double> buy_price;
  std::vector<double> sell_price;

  std::size_t size() const { return buy_price.size(); }
};

struct EpisodeConfig {
  int horizon_k = 720;       // episode length K, hours
  double lambda_peak = 100;  // peak penalty, currency/kWh
  std::uint64_t seed = 0;

  void validate() const {
    if (horizon_k <= 0) throw ConfigError("episode horizon_k must be > 0");
    if (lambda_peak < 0) throw ConfigError("episode lambda_peak must be >= 0");
  }
};

}  // namespace smartgrid
