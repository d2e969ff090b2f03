#include "chargeplan/queueing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "chargeplan/errors.hpp"

namespace chargeplan {

double erlang_c(int servers, double rho) {
  if (servers < 1) throw std::invalid_argument("erlang_c: servers must be >= 1");
  if (rho < 0.0 || !std::isfinite(rho))
    throw std::invalid_argument("erlang_c: offered load must be finite and >= 0");
  if (rho >= static_cast<double>(servers))
    throw UnstableQueue("erlang_c: offered load " + std::to_string(rho) +
                        " >= servers " + std::to_string(servers));
  if (rho == 0.0) return 0.0;

  // Erlang B recurrence B_k = rho*B_{k-1} / (k + rho*B_{k-1}), then the
  // standard B -> C conversion. No factorials, stable for large k.
  double b = 1.0;
  for (int k = 1; k <= servers; ++k) b = rho * b / (static_cast<double>(k) + rho * b);
  const double n = static_cast<double>(servers);
  const double c = n * b / (n - rho * (1.0 - b));
  return std::clamp(c, 0.0, 1.0);
}

double expected_wait(int servers, const QueueSpec& q) {
  if (q.arrival_rate <= 0.0 || q.service_rate <= 0.0)
    throw std::invalid_argument("expected_wait: rates must be > 0");
  const double capacity = static_cast<double>(servers) * q.service_rate;
  if (capacity <= q.arrival_rate)
    throw UnstableQueue("expected_wait: n*mu <= lambda");
  return erlang_c(servers, q.arrival_rate / q.service_rate) /
         (capacity - q.arrival_rate);
}

int min_slots(const QueueSpec& q) {
  if (q.arrival_rate <= 0.0 || q.service_rate <= 0.0)
    throw std::invalid_argument("min_slots: rates must be > 0");
  if (q.sla_wait < 0.0) throw std::invalid_argument("min_slots: SLA must be >= 0");

  const double rho = q.arrival_rate / q.service_rate;
  const int floor_n = static_cast<int>(std::floor(rho)) + 1;  // smallest stable N
  if (expected_wait(floor_n, q) <= q.sla_wait) return floor_n;

  // E[W] decreases in N; expand to a satisfying hi, then bisect.
  int lo = floor_n;  // violates
  int hi = floor_n;
  int step = 1;
  for (;;) {
    hi = lo + step;
    if (expected_wait(hi, q) <= q.sla_wait) break;
    lo = hi;
    step *= 2;
  }
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    if (expected_wait(mid, q) <= q.sla_wait)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

double arrival_rate_from_demand(double peak_hourly_energy, double energy_per_session) {
  if (energy_per_session <= 0.0)
    throw std::invalid_argument("arrival_rate_from_demand: energy per session must be > 0");
  return peak_hourly_energy / energy_per_session;
}

}  // namespace chargeplan
