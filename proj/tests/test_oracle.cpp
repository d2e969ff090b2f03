#include <doctest.h>

#include <cmath>

#include "chargeplan/errors.hpp"
#include "chargeplan/ipac.hpp"
#include "chargeplan/oracle.hpp"

using namespace chargeplan;

namespace {

InterestSet make_set(std::size_t universe, std::initializer_list<std::uint32_t> bits) {
  InterestSet s(universe);
  for (auto b : bits) s.set(b);
  return s;
}

}  // namespace

TEST_CASE("exact_mpc finds the knapsack optimum when coverage is free") {
  MpcInstance inst;
  inst.site_count = 3;
  inst.interest_count = 1;
  inst.demand = {6.0, 5.0, 4.0};
  inst.cost = {5.0, 4.0, 2.0};
  inst.budget = 6.0;
  inst.cover_sets = {make_set(1, {0}), make_set(1, {0}), make_set(1, {0})};

  const std::optional<Solution> best = exact_mpc(inst);
  REQUIRE(best.has_value());
  CHECK(best->total_demand == 9.0);
  CHECK(best->sites() == std::vector<SiteId>{1, 2});
}

TEST_CASE("exact_mpc selects everything under a slack budget") {
  MpcInstance inst;
  inst.site_count = 3;
  inst.interest_count = 1;
  inst.demand = {1.0, 2.0, 3.0};
  inst.cost = {1.0, 1.0, 1.0};
  inst.budget = 10.0;
  inst.cover_sets = {make_set(1, {0}), make_set(1, {}), make_set(1, {})};
  const std::optional<Solution> best = exact_mpc(inst);
  REQUIRE(best.has_value());
  CHECK(best->sites() == std::vector<SiteId>{0, 1, 2});
}

TEST_CASE("exact_mpc reports infeasibility and guards its size") {
  MpcInstance inst;
  inst.site_count = 2;
  inst.interest_count = 2;
  inst.demand = {1.0, 1.0};
  inst.cost = {1.0, 1.0};
  inst.budget = 5.0;
  inst.cover_sets = {make_set(2, {0}), make_set(2, {0})};  // interest 1 uncovered
  CHECK_FALSE(exact_mpc(inst).has_value());

  MpcInstance big;
  big.site_count = kMaxExactItems + 1;
  big.interest_count = 1;
  big.demand.assign(big.site_count, 1.0);
  big.cost.assign(big.site_count, 1.0);
  big.budget = 1.0;
  big.cover_sets.assign(big.site_count, make_set(1, {0}));
  CHECK_THROWS_AS(exact_mpc(big), TooLarge);
}

TEST_CASE("exact_cover matches the fixture optimum") {
  const InterestSet universe = make_set(3, {0, 1, 2});
  const std::vector<CoverCandidate> cands{
      {0, 2.0, make_set(3, {0, 1})},
      {1, 2.0, make_set(3, {1, 2})},
      {2, 5.0, make_set(3, {0, 1, 2})},
  };
  const auto sel = exact_cover(cands, universe);
  REQUIRE(sel.has_value());
  CHECK(sel->ids == std::vector<SiteId>{0, 1});
  CHECK(sel->total_cost == 4.0);

  CHECK(exact_cover(cands, InterestSet(3))->ids.empty());
  CHECK(exact_cover({cands.begin() + 2, cands.end()}, universe)->ids ==
        std::vector<SiteId>{2});

  const std::vector<CoverCandidate> weak{{0, 1.0, make_set(3, {0})}};
  CHECK_FALSE(exact_cover(weak, universe).has_value());
}

TEST_CASE("exact_pack handles both modes") {
  const std::vector<PackItem> items{{0, 6, 5}, {1, 5, 4}, {2, 4, 2}};
  const PackSelection kp = exact_pack(items, 6.0, PackMode::MaxValue);
  CHECK(kp.total_value == 9.0);
  CHECK(kp.ids == std::vector<SiteId>{1, 2});

  const std::vector<PackItem> mins{{0, 6, 3}, {1, 6, 3}, {2, 2, 2}};
  const PackSelection minkp = exact_pack(mins, 10.0, PackMode::MinCostToTarget);
  CHECK(minkp.total_weight == 6.0);
  CHECK(minkp.ids == std::vector<SiteId>{0, 1});

  CHECK(exact_pack(items, 0.0, PackMode::MaxValue).ids.empty());
  CHECK(exact_pack(items, 0.0, PackMode::MinCostToTarget).ids.empty());
  CHECK_THROWS_AS(exact_pack(items, 100.0, PackMode::MinCostToTarget),
                  UnreachableDemand);
}

TEST_CASE("exact_dsc minimizes cost under both constraint families") {
  const InterestSet universe = make_set(2, {0, 1});
  const std::vector<CoverCandidate> cands{
      {0, 2.0, make_set(2, {0})},
      {1, 3.0, make_set(2, {1})},
      {2, 4.0, make_set(2, {0, 1})},
  };
  const std::vector<PackItem> items{{0, 1.0, 2.0}, {1, 1.0, 3.0}, {2, 8.0, 4.0}};

  // Demand floor 8 forces site 2; its cover set alone satisfies coverage.
  const auto sel = exact_dsc(cands, universe, items, 8.0);
  REQUIRE(sel.has_value());
  CHECK(sel->ids == std::vector<SiteId>{2});
  CHECK(sel->total_cost == 4.0);

  CHECK_FALSE(exact_dsc(cands, universe, items, 100.0).has_value());
}

TEST_CASE("gen_instance is bit-reproducible under a fixed seed") {
  GenParams p;
  p.seed = 4242;
  p.site_count = 9;
  p.interest_count = 7;
  const GeneratedInstance a = gen_instance(p);
  const GeneratedInstance b = gen_instance(p);
  CHECK(a.instance.demand == b.instance.demand);
  CHECK(a.instance.cost == b.instance.cost);
  CHECK(a.instance.budget == b.instance.budget);
  CHECK(a.dist.values == b.dist.values);
  CHECK(a.site_xy == b.site_xy);

  GenParams q = p;
  q.seed = 4243;
  CHECK(gen_instance(q).instance.demand != a.instance.demand);
}

TEST_CASE("gen_instance with a radius past the diagonal covers everything") {
  GenParams p;
  p.seed = 7;
  p.site_count = 5;
  p.interest_count = 6;
  p.extent_km = 10.0;
  p.radius_km = 15.0;  // > 10 * sqrt(2)
  const GeneratedInstance gen = gen_instance(p);
  for (const InterestSet& s : gen.instance.cover_sets)
    CHECK(s.count() == p.interest_count);
}

TEST_CASE("gen_instance default parameters validate cleanly") {
  GenParams p;
  p.seed = 42;
  const GeneratedInstance gen = gen_instance(p);
  CHECK(validate_instance(gen.instance).ok());

  GenParams pipeline = p;
  pipeline.cost_source = CostSource::QueueingPipeline;
  const GeneratedInstance piped = gen_instance(pipeline);
  CHECK(validate_instance(piped.instance).ok());
  for (double c : piped.instance.cost) CHECK(c >= 4000.0 + 1852.0);
}

TEST_CASE("heuristics never beat the exhaustive optimum") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    GenParams p;
    p.seed = 600 + seed;
    p.site_count = 6 + seed % 6;
    p.interest_count = 5 + seed % 4;
    p.radius_km = 6.5;
    p.budget_factor = 0.3 + 0.05 * static_cast<double>(seed % 5);
    const GeneratedInstance gen = gen_instance(p);

    const std::optional<Solution> best = exact_mpc(gen.instance);
    for (const std::optional<Solution>& heur :
         {ipac_solve(gen.instance), naive_solve(gen.instance)}) {
      if (!heur) continue;
      REQUIRE(best.has_value());
      CHECK(heur->total_demand <= best->total_demand + 1e-9);
    }
  }
}
