// Acceptance gate: one PASS/FAIL line per criterion, tolerances pinned in
// code. Exit status is nonzero when any criterion fails. The sandwich-bounds
// criterion fails by design of the checked inequality; its notes carry the
// counterexample and the corrected bound that does hold.
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "leash/action.hpp"
#include "leash/dyadic.hpp"
#include "leash/error.hpp"
#include "leash/group.hpp"
#include "leash/leash.h"
#include "leash/leash_metrics.hpp"
#include "leash/metrics.hpp"
#include "leash/space.hpp"
#include "leash/transform.hpp"
#include "leash/verify.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace leash;

namespace {

constexpr std::uint64_t kSeed = 1729;

// Pinned tolerances and expected exact values.
const DyadicRational kTwo = DyadicRational::integer(2);
const DyadicRational kQuarter = DyadicRational::pow2(-2);
const DyadicRational kSixteenth = DyadicRational::pow2(-4);
const DyadicRational kPinnedD = DyadicRational::from_parts(BigInt(63), 6);         // d(rot, id), L=2
const DyadicRational kPinnedDG = DyadicRational::from_parts(BigInt(189), 8);       // d_G(rot, id), L=2
const DyadicRational kPinnedATheta = DyadicRational::from_parts(BigInt(9), 6);     // a(., Theta), L=1
const DyadicRational kPinnedSup = DyadicRational::from_parts(BigInt(6173), 14);    // whole-Z sup, L=2
const DyadicRational kPinnedM = DyadicRational::from_parts(BigInt(18269), 14);     // m(rot, id), L=2
const DyadicRational kPinnedCutoff = DyadicRational::from_parts(BigInt(153), 14);  // depth-6 witness
const DyadicRational kPinnedO12Sup = DyadicRational::from_parts(BigInt(50630269), 29);
const DyadicRational kPinnedO12First = DyadicRational::from_parts(BigInt(49683079), 29);
const DyadicRational kPinnedW = DyadicRational::from_parts(BigInt(15505), 15);   // w^(1,6)(rot, id)
const DyadicRational kPinnedS = DyadicRational::from_parts(BigInt(12346), 15);   // s^(1,6)(rot, id)

struct Gate {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first;

  template <typename F>
  void check(bool ok, F&& describe) {
    ++checks;
    if (!ok) {
      ++failures;
      if (first.empty()) first = describe();
    }
  }
};

struct Outcome {
  Gate gate;
  std::vector<std::string> notes;
};

std::string frac(const DyadicRational& v) { return v.to_fraction_string(); }

Action z_act(Transformation t) {
  std::vector<Transformation> images;
  images.push_back(std::move(t));
  return Action::make(GroupModel::z(), std::move(images));
}

// --- C1: d and a are premetrics (identity, symmetry, triangle) ---

void axiom_triple(Gate& g, const Transformation& t, const Transformation& s,
                  const Transformation& u, const GeneratingFamily& family,
                  const std::string& label) {
  struct Metric {
    const char* name;
    std::function<DyadicRational(const Transformation&, const Transformation&)> eval;
  };
  const std::vector<Metric> metrics = {
      {"d", [&](const Transformation& x, const Transformation& y) { return metric_d(x, y, family); }},
      {"a", [&](const Transformation& x, const Transformation& y) { return metric_a(x, y, family); }}};
  for (const Metric& m : metrics) {
    DyadicRational ts = m.eval(t, s);
    g.check(ts.is_zero() == (t == s),
            [&] { return label + ": " + m.name + " separation failed"; });
    g.check(ts == m.eval(s, t), [&] { return label + ": " + m.name + " asymmetric"; });
    DyadicRational via = m.eval(t, u) + m.eval(u, s);
    g.check(ts <= via, [&] {
      return label + ": " + m.name + " triangle: " + frac(ts) + " > " + frac(via);
    });
  }
}

Outcome criterion_axioms(std::uint64_t seed) {
  Outcome out;
  std::mt19937_64 rng(seed);
  {
    DyadicSpace space = make_space(1);
    GeneratingFamily family = GeneratingFamily::canonical(space);
    std::vector<Transformation> all = {Transformation::identity(space),
                                       Transformation::from_forward(space, {1, 0})};
    for (const Transformation& t : all)
      for (const Transformation& s : all)
        for (const Transformation& u : all) axiom_triple(out.gate, t, s, u, family, "L=1");
  }
  for (unsigned resolution : {2u, 4u}) {
    DyadicSpace space = make_space(resolution);
    GeneratingFamily family = GeneratingFamily::canonical(space);
    for (int rep = 0; rep < 500; ++rep) {
      Transformation t = random_transformation(space, rng());
      Transformation s = random_transformation(space, rng());
      Transformation u = random_transformation(space, rng());
      axiom_triple(out.gate, t, s, u, family,
                   "L=" + std::to_string(resolution) + " rep " + std::to_string(rep));
    }
  }
  out.notes.push_back("exhaustive at L=1, 500 sampled triples each at L=2 and L=4");
  return out;
}

// --- C2: a <= d <= 2 ---

Outcome criterion_domination(std::uint64_t seed) {
  Outcome out;
  std::mt19937_64 rng(seed);
  for (unsigned resolution : {2u, 3u, 4u}) {
    DyadicSpace space = make_space(resolution);
    GeneratingFamily family = GeneratingFamily::canonical(space);
    for (int rep = 0; rep < 500; ++rep) {
      Transformation t = random_transformation(space, rng());
      Transformation s = random_transformation(space, rng());
      std::string label = "L=" + std::to_string(resolution) + " rep " + std::to_string(rep);
      DyadicRational a = metric_a(t, s, family);
      DyadicRational d = metric_d(t, s, family);
      out.gate.check(a <= d, [&] { return label + ": a = " + frac(a) + " > d = " + frac(d); });
      out.gate.check(d <= kTwo, [&] { return label + ": d = " + frac(d) + " > 2"; });
    }
  }
  out.notes.push_back("500 random pairs each at L=2, 3, 4");
  return out;
}

// --- C3: truncation tails a - a_n <= 2^(1-n) ---

Outcome criterion_truncation(std::uint64_t seed) {
  Outcome out;
  std::mt19937_64 rng(seed);
  DyadicSpace space = make_space(3);
  GeneratingFamily family = GeneratingFamily::canonical(space);
  const std::size_t full_depth = family.size();
  for (int rep = 0; rep < 200; ++rep) {
    Transformation t = random_transformation(space, rng());
    Transformation s = random_transformation(space, rng());
    std::string label = "pair " + std::to_string(rep);
    DyadicRational full = metric_a(t, s, family);
    DyadicRational prev;
    for (std::size_t n = 1; n <= full_depth; ++n) {
      DyadicRational an = metric_a(t, s, family, n);
      out.gate.check(prev <= an && an <= full,
                     [&] { return label + " n=" + std::to_string(n) + ": a_n not monotone"; });
      DyadicRational tail = abs_diff(full, an);
      DyadicRational bound = DyadicRational::pow2(1 - static_cast<int>(n));
      out.gate.check(tail <= bound, [&] {
        return label + " n=" + std::to_string(n) + ": tail " + frac(tail) + " > " + frac(bound);
      });
      prev = an;
    }
    out.gate.check(prev == full, [&] { return label + ": a_N != a at full depth"; });
  }
  out.notes.push_back("200 random pairs at L=3, every depth n = 1..14, bound 2^(1-n)");
  return out;
}

// --- C4: sandwich bounds between w and s (documented failure) ---

Outcome criterion_sandwich(std::uint64_t seed) {
  Outcome out;
  std::mt19937_64 rng(seed);
  DyadicSpace space = make_space(3);
  struct Fixture {
    Action t;
    Action s;
    GammaSpec gamma;
    std::string label;
  };
  std::vector<Fixture> fixtures;
  for (int i = 0; i < 50; ++i) {
    fixtures.push_back({random_z_action(space, rng()), random_z_action(space, rng()),
                        GammaSpec::lattice(2), "Z pair " + std::to_string(i)});
  }
  GroupModelPtr h2 = GroupModel::h(2);
  GroupElement gamma0 = h2->power(h2->multiply(h2->generator(0), h2->generator(1)), 2);
  for (int i = 0; i < 50; ++i) {
    fixtures.push_back({random_h2_action(h2, space, rng()), random_h2_action(h2, space, rng()),
                        GammaSpec::cyclic_subgroup(gamma0), "H2 pair " + std::to_string(i)});
  }
  std::size_t lower_checks = 0;
  std::size_t lower_failures = 0;
  std::size_t upper_checks = 0;
  std::size_t upper_failures = 0;
  for (const Fixture& f : fixtures) {
    for (std::size_t n : {1, 2, 3}) {
      for (std::size_t k : {2, 6, 14}) {
        DistanceResult w = leash_w(f.t, f.s, f.gamma, n, k, SupMode::Truncated, 6);
        DistanceResult sv = leash_s(f.t, f.s, f.gamma, n, k, SupMode::Truncated, 6);
        std::string label = f.label + " (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")";
        ++lower_checks;
        lower_failures += w.value <= sv.value ? 0 : 1;
        out.gate.check(w.value <= sv.value, [&] {
          return label + ": w = " + frac(w.value) + " > s = " + frac(sv.value);
        });
        DyadicRational upper = DyadicRational::pow2(static_cast<int>(n)) * w.value;
        ++upper_checks;
        upper_failures += sv.value <= upper ? 0 : 1;
        out.gate.check(sv.value <= upper, [&] {
          return label + ": s = " + frac(sv.value) + " > 2^n w = " + frac(upper);
        });
      }
    }
  }
  // The smallest counterexample, pinned exactly.
  {
    DyadicSpace l2 = make_space(2);
    Action rot = z_act(Transformation::rotation(l2));
    Action id = z_act(Transformation::identity(l2));
    GammaSpec gamma = GammaSpec::lattice(2);
    DistanceResult w = leash_w(rot, id, gamma, 1, 6, SupMode::Truncated, 6);
    DistanceResult sv = leash_s(rot, id, gamma, 1, 6, SupMode::Truncated, 6);
    out.gate.check(w.value == kPinnedW && sv.value == kPinnedS, [&] {
      return "pinned counterexample drifted: w = " + frac(w.value) + ", s = " + frac(sv.value);
    });
    out.notes.push_back("lower bound w <= s: " + std::to_string(lower_failures) + "/" +
                        std::to_string(lower_checks) + " samples violate it");
    out.notes.push_back("counterexample (pinned): rotation vs identity at L=2, Gamma = 2Z, n=1, "
                        "k=6: w = " + frac(w.value) + " > s = " + frac(sv.value));
    out.notes.push_back("w adds the weighted cover sum to the tail sup while s takes their max, "
                        "so w > s whenever both parts are positive");
    out.notes.push_back("reversed domination s <= 2^n w: " +
                        std::to_string(upper_checks - upper_failures) + "/" +
                        std::to_string(upper_checks) + " passed");
  }
  return out;
}

// --- C5: conjugation continuity ---

Outcome criterion_conjugation(std::uint64_t seed) {
  Outcome out;
  std::mt19937_64 rng(seed);
  DyadicSpace space = make_space(4);
  GeneratingFamily family = GeneratingFamily::canonical(space);
  const std::size_t k = 6;
  struct Fixture {
    Action t;
    std::vector<GroupElement> elems;
    std::string label;
  };
  std::vector<Fixture> fixtures;
  auto z_elems = [](const GroupModel& model) {
    std::vector<GroupElement> elems = model.ball(6);
    for (GroupElement& g : GammaSpec::lattice(2).enumerate_annulus(model, 0, 8)) {
      elems.push_back(std::move(g));
    }
    return elems;
  };
  {
    Action rot = z_act(Transformation::rotation(space));
    std::vector<GroupElement> elems = z_elems(rot.model());
    fixtures.push_back({std::move(rot), std::move(elems), "Z rotation"});
    Action rnd = random_z_action(space, rng());
    elems = z_elems(rnd.model());
    fixtures.push_back({std::move(rnd), std::move(elems), "Z random"});
  }
  {
    GroupModelPtr h2 = GroupModel::h(2);
    GroupElement gamma0 = h2->power(h2->multiply(h2->generator(0), h2->generator(1)), 2);
    Action act = random_h2_action(h2, space, rng());
    std::vector<GroupElement> elems = h2->ball(6);
    for (GroupElement& g : GammaSpec::cyclic_subgroup(gamma0).enumerate_annulus(*h2, 0, 8)) {
      elems.push_back(std::move(g));
    }
    fixtures.push_back({std::move(act), std::move(elems), "H2 random"});
  }
  for (const DyadicRational& eps : {kQuarter, kSixteenth}) {
    DyadicRational half_eps = eps * DyadicRational::pow2(-1);
    bool with_straddle = eps == kQuarter;  // a straddling transposition costs 2*2^-L = eps/2 here
    for (int rep = 0; rep < 50; ++rep) {
      Transformation u = near_identity(space, half_eps, rng(), 2);
      if (with_straddle && rep % 2 == 1) u = compose(u, Transformation::transposition(space, 3));
      for (const Fixture& f : fixtures) {
        for (const GroupElement& g : f.elems) {
          const Transformation& image = f.t.evaluate(g);
          DyadicRational value = metric_a(conjugate(image, u), image, family, k);
          out.gate.check(value < eps, [&] {
            return f.label + " rep " + std::to_string(rep) + " g=" + f.t.model().format(g) +
                   ": a_6 = " + frac(value) + " >= " + frac(eps);
          });
        }
      }
    }
  }
  out.notes.push_back("eps in {1/4, 1/16}, 50 perturbations each, over ball(6) and the "
                      "Gamma-annulus (0,8] of three fixtures at L=4");
  return out;
}

// --- C6: product approximation witness and its depth cutoff ---

Outcome criterion_product(std::uint64_t seed) {
  Outcome out;
  std::mt19937_64 rng(seed);
  DyadicSpace space = make_space(3);
  for (int rep = 0; rep < 20; ++rep) {
    Action t = random_z_action(space, rng());
    Action s = random_z_action(space, rng());
    Action prod = product_action(t, s);
    for (std::size_t k : {6, 14}) {
      ApproxWitness witness = product_approx_witness(prod, t, k, 6);
      out.gate.check(witness.value.is_zero(), [&] {
        return "pair " + std::to_string(rep) + " k=" + std::to_string(k) + ": witness = " +
               frac(witness.value);
      });
    }
  }
  DyadicSpace base = make_space(1);
  Action tid = z_act(Transformation::identity(base));
  Action sswap = z_act(Transformation::from_forward(base, {1, 0}));
  Action prod = product_action(tid, sswap);
  Action tref = z_act(Transformation::identity(make_space(2)));
  ApproxWitness shallow = product_approx_witness(prod, tref, 2, 6);
  out.gate.check(shallow.value.is_zero(),
                 [&] { return "cutoff: depth-2 witness = " + frac(shallow.value); });
  ApproxWitness deep = product_approx_witness(prod, tref, 6, 6);
  out.gate.check(deep.value == kPinnedCutoff, [&] {
    return "cutoff: depth-6 witness = " + frac(deep.value) + ", expected " + frac(kPinnedCutoff);
  });
  out.notes.push_back("20 product pairs at L=3 with zero witness at k=6 and k=14; the depth "
                      "cutoff fixture is nonzero exactly beyond the factor resolution (" +
                      frac(kPinnedCutoff) + ")");
  return out;
}

// --- C7: transported net bound ---

Outcome criterion_h_net(std::uint64_t seed) {
  Outcome out;
  std::mt19937_64 rng(seed);
  GammaSpec gamma = GammaSpec::lattice(2);
  for (unsigned resolution : {2u, 3u}) {
    DyadicSpace space = make_space(resolution);
    GeneratingFamily family = GeneratingFamily::canonical(space);
    std::vector<Action> fixtures;
    fixtures.push_back(z_act(Transformation::rotation(space)));
    fixtures.push_back(random_z_action(space, rng()));
    for (std::size_t fi = 0; fi < fixtures.size(); ++fi) {
      const Action& t = fixtures[fi];
      const GroupModel& model = t.model();
      std::vector<GroupElement> hset = {model.identity_element(), model.generator(0)};
      std::string label = "L=" + std::to_string(resolution) + " fixture " + std::to_string(fi);
      HNetReport report = h_net_bound(t, hset, gamma, 8, 0, 8);
      out.gate.check(report.transport_verified,
                     [&] { return label + ": transported value differed from the direct a_k"; });
      DyadicRational ball_max;
      for (const GroupElement& g : model.ball(8)) {
        ball_max = max(ball_max, metric_a(t.evaluate(g), theta, family));
      }
      out.gate.check(ball_max <= report.bound, [&] {
        return label + ": ball deficiency " + frac(ball_max) + " exceeds the bound " +
               frac(report.bound);
      });
      if (fi == 0) {
        bool threw = false;
        try {
          std::vector<GroupElement> only_e = {model.identity_element()};
          h_net_bound(t, only_e, gamma, 8, 0, 8);
        } catch (const Error& e) {
          threw = e.code() == ErrorCode::HNotANet;
        }
        out.gate.check(threw, [&] { return label + ": H={e} accepted as a net for 2Z"; });
      }
    }
  }
  out.notes.push_back("H = {e, g} against Gamma = 2Z at L=2 and L=3: transport verified, the "
                      "ball(8) deficiency stays under the grid bound, H = {e} is rejected");
  return out;
}

// --- C8: truncated sup equals the exact sup at the pair period ---

Outcome criterion_period(std::uint64_t seed) {
  Outcome out;
  std::mt19937_64 rng(seed);
  GammaSpec whole = GammaSpec::whole();
  {
    DyadicSpace space = make_space(2);
    Action rot = z_act(Transformation::rotation(space));
    Action id = z_act(Transformation::identity(space));
    GammaSupReport exact = gamma_sup(rot, id, whole, std::nullopt, SupMode::Exact);
    out.gate.check(exact.exact && exact.pair_period == 4 && exact.value == kPinnedSup, [&] {
      return "rotation: exact sup " + frac(exact.value) + " (expected " + frac(kPinnedSup) + ")";
    });
    for (unsigned radius = 1; radius <= 8; ++radius) {
      GammaSupReport trunc = gamma_sup(rot, id, whole, std::nullopt, SupMode::Truncated, radius);
      out.gate.check(trunc.value <= exact.value && (radius < 4 || trunc.value == exact.value),
                     [&] { return "rotation R=" + std::to_string(radius) + " disagrees"; });
    }
    DistanceResult m = leash_m(rot, id, whole, std::nullopt, SupMode::Exact);
    out.gate.check(m.value == kPinnedM,
                   [&] { return "rotation: m = " + frac(m.value) + ", expected " + frac(kPinnedM); });
  }
  {
    DyadicSpace space = make_space(3);
    Action o12 = z_act(order12_fixture(space));
    Action id = z_act(Transformation::identity(space));
    GammaSupReport exact = gamma_sup(o12, id, whole, std::nullopt, SupMode::Exact);
    out.gate.check(exact.pair_period == 12 && exact.value == kPinnedO12Sup, [&] {
      return "order-12: exact sup " + frac(exact.value) + " (expected " + frac(kPinnedO12Sup) + ")";
    });
    GammaSupReport first = gamma_sup(o12, id, whole, std::nullopt, SupMode::Truncated, 1);
    out.gate.check(first.value == kPinnedO12First && first.value < exact.value, [&] {
      return "order-12: truncated(1) = " + frac(first.value);
    });
    for (unsigned radius = 1; radius <= 14; ++radius) {
      GammaSupReport trunc = gamma_sup(o12, id, whole, std::nullopt, SupMode::Truncated, radius);
      out.gate.check(trunc.value <= exact.value && (radius < 12 || trunc.value == exact.value),
                     [&] { return "order-12 R=" + std::to_string(radius) + " disagrees"; });
    }
    DyadicRational dg = action_metric_d(o12, id);
    DistanceResult closed = leash_m(o12, id, whole, std::nullopt, SupMode::Truncated, 12);
    out.gate.check(closed.exactness == Exactness::TruncatedWithCertificate &&
                       closed.certified_bound.has_value() &&
                       *closed.certified_bound == dg + exact.value,
                   [&] { return std::string("order-12: closure certificate != exact m"); });
  }
  {
    DyadicSpace space = make_space(2);
    for (int rep = 0; rep < 10; ++rep) {
      Action t = random_z_action(space, rng());
      Action s = random_z_action(space, rng());
      GammaSupReport exact = gamma_sup(t, s, whole, std::nullopt, SupMode::Exact);
      std::string label = "random pair " + std::to_string(rep);
      for (unsigned radius : {1u, 2u, 3u}) {
        GammaSupReport trunc = gamma_sup(t, s, whole, std::nullopt, SupMode::Truncated, radius);
        out.gate.check(trunc.value <= exact.value,
                       [&] { return label + ": truncated exceeds exact"; });
      }
      GammaSupReport at12 = gamma_sup(t, s, whole, std::nullopt, SupMode::Truncated, 12);
      out.gate.check(at12.value == exact.value,
                     [&] { return label + ": radius 12 missed the exact sup"; });
    }
  }
  out.notes.push_back("pair periods 4 and 12 pinned; truncation reaches the exact sup at the "
                      "period and never exceeds it; closure certificate matches the exact value");
  return out;
}

// --- C9: worked values against the independent oracle ---

Outcome criterion_worked_values(std::uint64_t) {
  Outcome out;
  {
    DyadicSpace space = make_space(2);
    GeneratingFamily family = GeneratingFamily::canonical(space);
    Transformation rot = Transformation::rotation(space);
    Transformation id = Transformation::identity(space);
    oracle::Perm prot = {1, 2, 3, 0};
    oracle::Perm pid = oracle::perm_identity(4);
    DyadicRational lib_d = metric_d(rot, id, family);
    DyadicRational orc_d = testutil::to_dyadic(oracle::oracle_d(prot, pid, 2, family.size()));
    out.gate.check(lib_d == orc_d && lib_d == kPinnedD, [&] {
      return "d(rot, id) = " + frac(lib_d) + ", oracle " + frac(orc_d) + ", pinned " +
             frac(kPinnedD);
    });
    DyadicRational lib_dg = action_metric_d(z_act(rot), z_act(id));
    DyadicRational orc_dg = testutil::to_dyadic(oracle::oracle_d_G_z(prot, pid, 2));
    out.gate.check(lib_dg == orc_dg && lib_dg == kPinnedDG, [&] {
      return "d_G(rot, id) = " + frac(lib_dg) + ", oracle " + frac(orc_dg) + ", pinned " +
             frac(kPinnedDG);
    });
  }
  {
    DyadicSpace space = make_space(1);
    GeneratingFamily family = GeneratingFamily::canonical(space);
    Transformation swap = Transformation::from_forward(space, {1, 0});
    Transformation id = Transformation::identity(space);
    DyadicRational lib_swap = metric_a(swap, theta, family);
    DyadicRational lib_id = metric_a(id, theta, family);
    DyadicRational orc_swap = testutil::to_dyadic(oracle::oracle_a_theta({1, 0}, 1, family.size()));
    out.gate.check(lib_swap == orc_swap && lib_swap == kPinnedATheta && lib_id == kPinnedATheta,
                   [&] {
                     return "a(swap, Theta) = " + frac(lib_swap) + ", a(id, Theta) = " +
                            frac(lib_id) + ", pinned " + frac(kPinnedATheta);
                   });
  }
  out.notes.push_back("d(rot, id) = " + frac(kPinnedD) + ", d_G = " + frac(kPinnedDG) +
                      ", a(., Theta) at L=1 = " + frac(kPinnedATheta) +
                      "; library == oracle == pinned literal");
  return out;
}

// --- C10: factors recovered from a product of four ---

Outcome criterion_product_recovery(std::uint64_t seed) {
  Outcome out;
  std::mt19937_64 rng(seed);
  DyadicSpace space = make_space(2);
  std::vector<Action> factors;
  factors.push_back(z_act(Transformation::rotation(space)));
  factors.push_back(z_act(Transformation::from_forward(space, {1, 0, 3, 2})));
  factors.push_back(z_act(Transformation::from_forward(space, {3, 2, 1, 0})));
  factors.push_back(random_z_action(space, rng()));
  Action prod = product_action_many(factors);
  out.gate.check(prod.resolution() == 8,
                 [&] { return std::string("product resolution != 8"); });
  RokhlinReport report = rokhlin_experiment(factors, 6, 6);
  out.gate.check(report.witness_values.size() == factors.size(),
                 [&] { return std::string("one witness per factor expected"); });
  out.gate.check(report.max_value.is_zero(), [&] {
    return "a factor witness is nonzero: max = " + frac(report.max_value);
  });
  out.notes.push_back("four distinct L=2 actions; the L=8 product, conjugated by each block "
                      "transposition, is at cross-distance zero (k=6, ball radius 6) from the "
                      "matching factor");
  return out;
}

// --- C11: byte-identical reports for identical seeds ---

Outcome criterion_determinism(std::uint64_t) {
  Outcome out;
  const char* options = R"({"seed":5,"suites":["truncation-bound","h-net"]})";
  char* first = nullptr;
  char* second = nullptr;
  int passed_first = -1;
  int passed_second = -1;
  out.gate.check(leash_verify(options, &passed_first, &first) == LEASH_OK && passed_first == 1,
                 [] { return std::string("verify run 1 failed"); });
  out.gate.check(leash_verify(options, &passed_second, &second) == LEASH_OK && passed_second == 1,
                 [] { return std::string("verify run 2 failed"); });
  out.gate.check(first && second && std::string(first) == second,
                 [] { return std::string("verify reports differ between identical runs"); });
  leash_string_free(first);
  leash_string_free(second);

  std::string config = std::string(R"({"command":"dist","metric":"m","gamma":"whole","files":[")") +
                       testutil::fixture("z_rotation_l2.json") + "\",\"" +
                       testutil::fixture("z_identity_l2.json") + "\"]}";
  char* run1 = nullptr;
  char* run2 = nullptr;
  int ap = -1;
  out.gate.check(leash_run(config.c_str(), &ap, &run1) == LEASH_OK &&
                     leash_run(config.c_str(), &ap, &run2) == LEASH_OK && run1 && run2 &&
                     std::string(run1) == run2,
                 [] { return std::string("dist reports differ between identical runs"); });
  leash_string_free(run1);
  leash_string_free(run2);
  out.notes.push_back("two seeded verify runs and two dist runs rendered byte-identical reports "
                      "through the shared-library API");
  return out;
}

struct Criterion {
  const char* id;
  const char* name;
  std::function<Outcome(std::uint64_t)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"C1", "premetric-axioms", criterion_axioms},
      {"C2", "d-dominates-a", criterion_domination},
      {"C3", "truncation-tails", criterion_truncation},
      {"C4", "sandwich-bounds", criterion_sandwich},
      {"C5", "conjugation-continuity", criterion_conjugation},
      {"C6", "product-witness", criterion_product},
      {"C7", "transported-net-bound", criterion_h_net},
      {"C8", "period-exactness", criterion_period},
      {"C9", "worked-values", criterion_worked_values},
      {"C10", "product-recovery", criterion_product_recovery},
      {"C11", "deterministic-reports", criterion_determinism},
  };
  std::size_t failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].run(kSeed * 1000003ULL + i);
    } catch (const std::exception& e) {
      outcome.gate.check(false, [&] { return std::string("unhandled error: ") + e.what(); });
    }
    const Gate& g = outcome.gate;
    bool passed = g.failures == 0;
    failed += passed ? 0 : 1;
    std::string suffix = passed ? "" : ", " + std::to_string(g.failures) + " failed";
    std::printf("%-4s %-24s %s  (%zu checks%s)\n", criteria[i].id, criteria[i].name,
                passed ? "PASS" : "FAIL", g.checks, suffix.c_str());
    if (!passed) std::printf("       first: %s\n", g.first.c_str());
    for (const std::string& note : outcome.notes) std::printf("       %s\n", note.c_str());
  }
  std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
