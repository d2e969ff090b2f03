#pragma once

namespace chargeplan {

/// M/M/N service point: Poisson arrivals, exponential service, N slots.
struct QueueSpec {
  double arrival_rate = 0.0;  // lambda, customers per hour, > 0
  double service_rate = 0.0;  // mu, customers per hour per slot, > 0
  double sla_wait = 0.0;      // t, upper bound on E[W] in hours, >= 0
};

/// Probability an arrival waits in an M/M/n queue at offered load rho.
/// Computed by the inverse blocking-probability recurrence, so it stays
/// stable far beyond the n ~ 170 range where factorials overflow.
/// Throws UnstableQueue when rho >= n.
double erlang_c(int servers, double rho);

/// E[W] = ErlC(n, lambda/mu) / (n*mu - lambda), in hours.
/// Throws UnstableQueue when n*mu <= lambda.
double expected_wait(int servers, const QueueSpec& q);

/// Smallest slot count whose expected wait meets the SLA. The result is
/// stable and minimal: result-1 either violates the SLA or is unstable.
int min_slots(const QueueSpec& q);

/// lambda from a demand forecast: peak hourly energy / energy per session.
double arrival_rate_from_demand(double peak_hourly_energy, double energy_per_session);

}  // namespace chargeplan
