#include "doctest.h"

#include <random>

#include "leash/error.hpp"
#include "leash/leash_metrics.hpp"
#include "leash/verify.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace leash;
using testutil::to_dyadic;

namespace {

Action z_action(Transformation t) {
  std::vector<Transformation> images;
  images.push_back(std::move(t));
  return Action::make(GroupModel::z(), std::move(images));
}

oracle::Perm perm_of(const Action& a) {
  auto span = a.generator_image(0).forward();
  return oracle::Perm(span.begin(), span.end());
}

}  // namespace

TEST_CASE("action_metric_d matches the oracle for Z") {
  std::mt19937_64 rng(31);
  DyadicSpace s = make_space(3);
  for (int rep = 0; rep < 15; ++rep) {
    Action t = z_action(random_transformation(s, rng()));
    Action u = z_action(random_transformation(s, rng()));
    CHECK(action_metric_d(t, u) == to_dyadic(oracle::oracle_d_G_z(perm_of(t), perm_of(u), 3)));
  }
  DyadicSpace l2 = make_space(2);
  Action rot = z_action(Transformation::rotation(l2));
  Action id = z_action(Transformation::identity(l2));
  CHECK(action_metric_d(rot, id) == DyadicRational::from_parts(BigInt(189), 8));
}

TEST_CASE("cover depth clamps to the cover list") {
  DyadicSpace s = make_space(2);
  Action t = z_action(random_transformation(s, 1));
  Action u = z_action(random_transformation(s, 2));
  CHECK(action_metric_a(t, u, 3, 6) == action_metric_a(t, u, 2, 6));
  CHECK(action_metric_d(t, u, 5) == action_metric_d(t, u));
  // Family depth beyond the family is still an error.
  CHECK_THROWS_AS(action_metric_a(t, u, 2, 7), Error);
}

TEST_CASE("gamma_sup exact matches the whole-Z oracle") {
  std::mt19937_64 rng(41);
  DyadicSpace s = make_space(2);
  GammaSpec whole = GammaSpec::whole();
  for (int rep = 0; rep < 10; ++rep) {
    Action t = z_action(random_transformation(s, rng()));
    Action u = z_action(random_transformation(s, rng()));
    GammaSupReport rep_exact = gamma_sup(t, u, whole, std::nullopt, SupMode::Exact);
    CHECK(rep_exact.exact);
    CHECK(rep_exact.value == to_dyadic(oracle::oracle_gamma_sup_z(perm_of(t), perm_of(u), 2, 6)));
  }
  Action rot = z_action(Transformation::rotation(s));
  Action id = z_action(Transformation::identity(s));
  GammaSupReport pinned = gamma_sup(rot, id, whole, std::nullopt, SupMode::Exact);
  CHECK(pinned.value == DyadicRational::from_parts(BigInt(6173), 14));
  REQUIRE(pinned.pair_period.has_value());
  CHECK(*pinned.pair_period == 4);
  // Identical actions short-circuit to zero.
  CHECK(gamma_sup(rot, rot, whole, std::nullopt, SupMode::Exact).value.is_zero());
}

TEST_CASE("gamma_sup truncation against the exact value") {
  DyadicSpace s = make_space(2);
  GammaSpec whole = GammaSpec::whole();
  Action rot = z_action(Transformation::rotation(s));
  Action id = z_action(Transformation::identity(s));
  DyadicRational exact = gamma_sup(rot, id, whole, std::nullopt, SupMode::Exact).value;
  for (unsigned radius = 1; radius <= 6; ++radius) {
    GammaSupReport trunc = gamma_sup(rot, id, whole, std::nullopt, SupMode::Truncated, radius);
    CHECK(!trunc.exact);
    CHECK(trunc.radius == radius);
    CHECK(trunc.value <= exact);
    if (radius >= 4) CHECK(trunc.value == exact);
  }
}

TEST_CASE("gamma_sup exact mode refuses what it cannot close") {
  // A permutation of order 3 * 5 * 7 * 11 * 13 * 17 = 255255 on 64 cells.
  DyadicSpace s = make_space(6);
  std::vector<std::uint32_t> fwd(64);
  for (std::uint32_t c = 0; c < 64; ++c) fwd[c] = c;
  std::uint32_t base = 0;
  for (std::uint32_t len : {3u, 5u, 7u, 11u, 13u, 17u}) {
    for (std::uint32_t i = 0; i < len; ++i) fwd[base + i] = base + (i + 1) % len;
    base += len;
  }
  Action huge = z_action(Transformation::from_forward(s, std::move(fwd)));
  Action id = z_action(Transformation::identity(s));
  GammaSpec whole = GammaSpec::whole();
  try {
    gamma_sup(huge, id, whole, 6, SupMode::Exact);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
  CHECK_NOTHROW(gamma_sup(huge, id, whole, 6, SupMode::Truncated, 3));
  // A non-cyclic Gamma has no exact mode.
  GammaSpec custom = GammaSpec::custom(
      "odd", [](const GroupModel&, const GroupElement& g) { return g.as_integer() % 2 != 0; },
      nullptr);
  DyadicSpace l2 = make_space(2);
  Action rot = z_action(Transformation::rotation(l2));
  Action idl2 = z_action(Transformation::identity(l2));
  try {
    gamma_sup(rot, idl2, custom, std::nullopt, SupMode::Exact);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ExactUnsupported);
  }
}

TEST_CASE("leash_m decomposes and certifies") {
  DyadicSpace s = make_space(3);
  Action o12 = z_action(order12_fixture(s));
  Action id = z_action(Transformation::identity(s));
  GammaSpec whole = GammaSpec::whole();
  DyadicRational dg = action_metric_d(o12, id);
  GammaSupReport sup = gamma_sup(o12, id, whole, std::nullopt, SupMode::Exact);
  DistanceResult exact = leash_m(o12, id, whole, std::nullopt, SupMode::Exact);
  CHECK(exact.value == dg + sup.value);
  CHECK(exact.exactness == Exactness::Exact);
  // Scanning a full pair period closes the certificate at the exact value.
  DistanceResult closed = leash_m(o12, id, whole, std::nullopt, SupMode::Truncated, 12);
  CHECK(closed.exactness == Exactness::TruncatedWithCertificate);
  REQUIRE(closed.certified_bound.has_value());
  CHECK(*closed.certified_bound == exact.value);
  // A shorter scan still brackets the exact value.
  DistanceResult open = leash_m(o12, id, whole, std::nullopt, SupMode::Truncated, 2);
  CHECK(open.value <= exact.value);
  REQUIRE(open.certified_bound.has_value());
  CHECK(exact.value <= *open.certified_bound);
  CertifiedBound cert = certified_m_bound(o12, id, whole, std::nullopt, 12);
  CHECK(cert.closed);
  CHECK(cert.value == exact.value);
}

TEST_CASE("leash_w and leash_s compose their parts") {
  DyadicSpace s = make_space(2);
  Action rot = z_action(Transformation::rotation(s));
  Action id = z_action(Transformation::identity(s));
  GammaSpec even = GammaSpec::lattice(2);
  std::size_t n = 2;
  std::size_t k = 6;
  DistanceResult w = leash_w(rot, id, even, n, k, SupMode::Truncated, 6);
  DistanceResult sv = leash_s(rot, id, even, n, k, SupMode::Truncated, 6);
  DyadicRational sup = gamma_sup(rot, id, even, k, SupMode::Truncated, 6).value;
  CHECK(w.value == action_metric_a(rot, id, n, k) + sup);
  // s is a single sup over Gamma and the covers together.
  GeneratingFamily fam = GeneratingFamily::canonical(s);
  DyadicRational cover_max;
  for (std::size_t i = 1; i <= n; ++i) {
    for (const GroupElement& g : rot.model().cover(i)) {
      cover_max = max(cover_max, metric_a(rot.evaluate(g), id.evaluate(g), fam, k));
    }
  }
  CHECK(sv.value == max(sup, cover_max));
}

TEST_CASE("mixing profile of the rotation") {
  DyadicSpace s = make_space(2);
  Action rot = z_action(Transformation::rotation(s));
  GammaSpec whole = GammaSpec::whole();
  MixingProfile near = mixing_profile(rot, whole, 0, 4);
  REQUIRE(near.elements.size() == 8);  // -1, 1, -2, 2, -3, 3, -4, 4
  auto v = [](long long num) { return DyadicRational::from_parts(BigInt(num), 16); };
  CHECK(near.values[0] == v(3205));
  CHECK(near.values[1] == v(3205));
  CHECK(near.values[2] == v(12401));
  CHECK(near.values[3] == v(12401));
  CHECK(near.values[4] == v(3205));
  CHECK(near.values[5] == v(3205));
  CHECK(near.values[6] == v(12491));
  CHECK(near.values[7] == v(12491));
  CHECK(near.deficiency == v(12491));
  // Period 4: the next annulus repeats the same values.
  MixingProfile far = mixing_profile(rot, whole, 4, 8);
  CHECK(far.values == near.values);
  CHECK(far.deficiency == near.deficiency);
  // Empty annulus: deficiency 0 by convention.
  CHECK(mixing_deficiency(rot, whole, 4, 4).is_zero());
  // The identity is perfectly Theta-distant everywhere: constant profile.
  Action id = z_action(Transformation::identity(s));
  MixingProfile flat = mixing_profile(id, whole, 0, 4);
  for (const DyadicRational& value : flat.values) CHECK(value == flat.values[0]);
}

TEST_CASE("h-net transport identity and coverage") {
  DyadicSpace s = make_space(2);
  Action rot = z_action(Transformation::rotation(s));
  const GroupModel& z = rot.model();
  GammaSpec even = GammaSpec::lattice(2);
  GeneratingFamily fam = GeneratingFamily::canonical(s);
  GroupElement h = z.generator(0);
  GroupElement g2 = z.power(h, 2);
  CHECK(h_net_transport(rot, h, g2) ==
        metric_a(rot.evaluate(z.power(h, 3)), theta, fam));
  std::vector<GroupElement> hset = {z.identity_element(), h};
  HNetReport report = h_net_bound(rot, hset, even, 8, 0, 8);
  CHECK(report.transport_verified);
  CHECK(report.pairs_checked == 18);  // 2 h's, identity + 8 gammas
  // {e} does not cover the odd integers.
  std::vector<GroupElement> only_e = {z.identity_element()};
  try {
    h_net_bound(rot, only_e, even, 8, 0, 8);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::HNotANet);
  }
}

TEST_CASE("product witness and rokhlin experiment") {
  DyadicSpace s = make_space(2);
  Action t = z_action(random_transformation(s, 61));
  Action u = z_action(random_transformation(s, 62));
  Action p = product_action(t, u);
  ApproxWitness w = product_approx_witness(p, t, 6, 6);
  CHECK(w.value.is_zero());
  CHECK(!w.gamma_max.has_value());
  GammaSpec even = GammaSpec::lattice(2);
  ApproxWitness wg = product_approx_witness(p, t, 6, 6, &even, 8);
  REQUIRE(wg.gamma_max.has_value());
  CHECK(wg.value.is_zero());
  std::vector<Action> factors = {t, u};
  RokhlinReport rok = rokhlin_experiment(factors, 6, 6);
  REQUIRE(rok.witness_values.size() == 2);
  CHECK(rok.max_value.is_zero());
}

TEST_CASE("greedy net") {
  DyadicSpace s = make_space(2);
  std::vector<Action> actions;
  actions.push_back(z_action(Transformation::rotation(s)));
  actions.push_back(z_action(Transformation::rotation(s)));
  actions.push_back(z_action(Transformation::identity(s)));
  ActionDistance dist = [](const Action& a, const Action& b) { return action_metric_d(a, b); };
  NetResult half = greedy_eps_net(actions, DyadicRational::pow2(-1), dist);
  CHECK(half.center_indices == std::vector<std::size_t>{0, 2});
  CHECK(half.assignment == std::vector<std::size_t>{0, 0, 1});
  CHECK(half.distances[1].is_zero());
  // eps = 0: duplicates still merge, distinct actions all become centers.
  NetResult zero = greedy_eps_net(actions, DyadicRational(), dist);
  CHECK(zero.center_indices == std::vector<std::size_t>{0, 2});
  // Large eps: one center.
  NetResult wide = greedy_eps_net(actions, DyadicRational::integer(3), dist);
  CHECK(wide.center_indices == std::vector<std::size_t>{0});
}
