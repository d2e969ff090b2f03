#include <algorithm>
#include <cmath>

#include "chargeplan/costing.hpp"
#include "chargeplan/greedy.hpp"
#include "chargeplan/ipac.hpp"
#include "chargeplan/oracle.hpp"
#include "chargeplan/queueing.hpp"
#include "chargeplan/rng.hpp"

namespace chargeplan {

namespace {

std::vector<std::array<double, 2>> draw_points(rng::Engine& engine,
                                               std::size_t count, double extent) {
  std::vector<std::array<double, 2>> pts(count);
  for (auto& p : pts) {
    p[0] = rng::uniform(engine, 0.0, extent);
    p[1] = rng::uniform(engine, 0.0, extent);
  }
  return pts;
}

std::vector<double> pipeline_costs(const GenParams& p,
                                   const std::vector<std::array<double, 2>>& sites,
                                   const std::vector<double>& demand,
                                   rng::Engine& engine) {
  struct SyntheticPoi {
    double x, y, score;
  };
  std::vector<SyntheticPoi> pois(p.poi_count);
  for (auto& poi : pois) {
    poi.x = rng::uniform(engine, 0.0, p.extent_km);
    poi.y = rng::uniform(engine, 0.0, p.extent_km);
    poi.score = rng::unit(engine) < 1.0 / 3.0 ? 800.0 : 300.0;
  }

  const LandCostModel land;  // scores are carried directly on the synthetic PoIs
  const double mu = p.charge_power_kw / p.energy_per_session;
  const double sla_hours = p.sla_minutes / 60.0;

  std::vector<double> costs(sites.size());
  for (std::size_t i = 0; i < sites.size(); ++i) {
    int slots = 1;
    const double lambda =
        arrival_rate_from_demand(demand[i] * p.peak_demand_share, p.energy_per_session);
    if (lambda > 0.0) slots = min_slots({lambda, mu, sla_hours});

    double land_value = land.base_price;
    for (const SyntheticPoi& poi : pois) {
      const double d = planar_km(sites[i][0], sites[i][1], poi.x, poi.y);
      if (d <= land.poi_radius_km)
        land_value += poi.score / std::max(d, land.min_distance_km);
    }
    costs[i] = site_cost({slots, land_value, p.infra_unit_cost});
  }
  return costs;
}

}  // namespace

GeneratedInstance gen_instance(const GenParams& p) {
  rng::Engine engine(p.seed);

  GeneratedInstance out;
  out.site_xy = draw_points(engine, p.site_count, p.extent_km);
  out.interest_xy = draw_points(engine, p.interest_count, p.extent_km);

  MpcInstance& inst = out.instance;
  inst.site_count = p.site_count;
  inst.interest_count = p.interest_count;
  inst.radius = p.radius_km;

  inst.demand.resize(p.site_count);
  for (double& d : inst.demand) d = rng::uniform(engine, p.demand_lo, p.demand_hi);

  if (p.cost_source == CostSource::Uniform) {
    inst.cost.resize(p.site_count);
    for (double& c : inst.cost) c = rng::uniform(engine, p.cost_lo, p.cost_hi);
  } else {
    inst.cost = pipeline_costs(p, out.site_xy, inst.demand, engine);
  }

  out.dist = DistanceTable(p.interest_count, p.site_count);
  for (std::size_t l = 0; l < p.interest_count; ++l)
    for (std::size_t i = 0; i < p.site_count; ++i)
      out.dist.at(l, i) = planar_km(out.interest_xy[l][0], out.interest_xy[l][1],
                                    out.site_xy[i][0], out.site_xy[i][1]);
  inst.cover_sets = build_cover_sets(out.dist, p.radius_km);

  if (p.budget_rule == BudgetRule::FractionOfTotalCost) {
    inst.budget = p.budget_factor * inst.total_cost();
  } else {
    const double cover_cost = min_feasible_budget(inst);
    inst.budget = std::isfinite(cover_cost) ? p.budget_factor * cover_cost
                                            : p.budget_factor * inst.total_cost();
  }

  if (p.noise_sigma > 0.0)
    inst.cost = perturb_costs(inst.cost, p.noise_sigma,
                              rng::derive(p.seed, 0x6e6f697365ULL));
  return out;
}

MultiPeriodInstance gen_multi_period(const MultiPeriodGenParams& p) {
  const GeneratedInstance gen = gen_instance(p.base);
  const std::size_t n = p.base.site_count;
  const std::size_t periods = std::max<std::size_t>(p.periods, 1);

  MultiPeriodInstance mp;
  mp.site_count = n;
  mp.alpha = 1.0;
  for (std::size_t t = 0; t < periods; ++t) {
    PeriodSpec ps;
    // Active prefix grows linearly from the initial fraction to the full set.
    const double frac =
        periods == 1 ? 1.0
                     : p.activation_fraction +
                           (1.0 - p.activation_fraction) * static_cast<double>(t) /
                               static_cast<double>(periods - 1);
    const std::size_t active =
        std::max<std::size_t>(1, static_cast<std::size_t>(frac * static_cast<double>(n)));
    ps.active.assign(n, 0);
    for (std::size_t i = 0; i < std::min(active, n); ++i) ps.active[i] = 1;

    const double drift = std::pow(1.0 + p.demand_growth, static_cast<double>(t));
    ps.demand.resize(n);
    ps.cost = gen.instance.cost;
    for (std::size_t i = 0; i < n; ++i) ps.demand[i] = gen.instance.demand[i] * drift;
    ps.budget = gen.instance.budget / static_cast<double>(periods);
    ps.dist = gen.dist;
    ps.radius = p.base.radius_km;
    mp.periods.push_back(std::move(ps));
  }
  return mp;
}

SubsidyInstance gen_subsidy(const SubsidyGenParams& p) {
  SubsidyInstance s;
  s.base = gen_instance(p.base).instance;
  for (std::size_t j = 0; j < p.providers; ++j) {
    rng::Engine engine(rng::derive(p.base.seed, 0x70726f76ULL + j));
    Provider provider;
    double asked = 0.0;
    for (std::size_t i = 0; i < s.base.site_count; ++i) {
      if (rng::unit(engine) >= p.bid_probability) continue;
      const double reserve = s.base.cost[i];
      provider.bids.push_back(
          {static_cast<SiteId>(i),
           reserve * rng::uniform(engine, p.subsidy_lo, p.subsidy_hi),
           reserve * rng::uniform(engine, p.price_lo, p.price_hi)});
      asked += provider.bids.back().price;
    }
    provider.budget = p.provider_budget_factor * asked;
    s.providers.push_back(std::move(provider));
  }
  return s;
}

}  // namespace chargeplan
