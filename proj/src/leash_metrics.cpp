#include "leash/leash_metrics.hpp"

#include <algorithm>
#include <numeric>

namespace leash {

namespace {

void require_compatible(const Action& t, const Action& s) {
  if (!t.model().same_model(s.model())) {
    fail(ErrorCode::ModelMismatch, "actions over different group models");
  }
  if (!(t.space() == s.space())) fail(ErrorCode::SpaceMismatch, "actions on different spaces");
}

// Covers beyond the declared list are empty and contribute nothing, so n clamps.
std::size_t checked_cover_depth(const GroupModel& model, std::optional<std::size_t> n) {
  return std::min(n.value_or(model.cover_count()), model.cover_count());
}

// max_{0 <= r < ord} a_k(g^r, Theta), the orthoprojection envelope of one orbit.
DyadicRational theta_envelope(const Transformation& gen_image, std::uint64_t ord,
                              const GeneratingFamily& family, std::size_t k) {
  Transformation cur = Transformation::identity(gen_image.space());
  DyadicRational best;
  for (std::uint64_t r = 0; r < ord; ++r) {
    best = max(best, metric_a(cur, theta, family, k));
    cur = compose(cur, gen_image);
  }
  return best;
}

struct TailCert {
  DyadicRational sup_bound;
  std::uint64_t pair_period;
  bool closed;
};

std::optional<TailCert> certify_tail(const Action& t, const Action& s, const GammaSpec& gamma,
                                     std::size_t k, unsigned radius,
                                     const DyadicRational& truncated_sup, std::uint64_t period_cap) {
  const GroupModel& model = t.model();
  auto gen = gamma.cyclic_generator(model);
  if (!gen) return std::nullopt;
  const Transformation& tg = t.evaluate(*gen);
  const Transformation& sg = s.evaluate(*gen);
  auto ord_t = order_up_to(tg, period_cap);
  auto ord_s = order_up_to(sg, period_cap);
  if (!ord_t || !ord_s) return std::nullopt;
  std::uint64_t period = std::lcm(*ord_t, *ord_s);
  if (period <= period_cap) {
    // Closure: image pairs repeat with the period, so if gamma0^r stayed inside
    // the scanned ball for every 0 < r < period, the truncated sup is the sup.
    std::vector<GroupElement> ball = model.ball(radius);
    std::sort(ball.begin(), ball.end());
    bool closed = true;
    GroupElement cur = *gen;
    for (std::uint64_t r = 1; r < period && closed; ++r) {
      if (!std::binary_search(ball.begin(), ball.end(), cur)) closed = false;
      cur = model.multiply(cur, *gen);
    }
    if (closed) return TailCert{truncated_sup, period, true};
  }
  // a(T^g, S^g) <= a(T^g, Theta) + a(S^g, Theta) caps every unscanned element.
  GeneratingFamily family = GeneratingFamily::canonical(t.space());
  DyadicRational envelope = theta_envelope(tg, *ord_t, family, k) + theta_envelope(sg, *ord_s, family, k);
  return TailCert{max(truncated_sup, envelope), period, false};
}

}  // namespace

DyadicRational action_metric_d(const Action& t, const Action& s, std::optional<std::size_t> n) {
  require_compatible(t, s);
  const GroupModel& model = t.model();
  std::size_t depth = checked_cover_depth(model, n);
  GeneratingFamily family = GeneratingFamily::canonical(t.space());
  DyadicRational total;
  for (std::size_t i = 1; i <= depth; ++i) {
    DyadicRational worst;
    for (const GroupElement& g : model.cover(i)) {
      worst = max(worst, metric_d(t.evaluate(g), s.evaluate(g), family));
    }
    total = total + DyadicRational::pow2(-static_cast<int>(i)) * worst;
  }
  return total;
}

DyadicRational action_metric_a(const Action& t, const Action& s, std::optional<std::size_t> n,
                               std::optional<std::size_t> k) {
  require_compatible(t, s);
  const GroupModel& model = t.model();
  std::size_t depth = checked_cover_depth(model, n);
  GeneratingFamily family = GeneratingFamily::canonical(t.space());
  std::size_t kk = k.value_or(family.size());
  DyadicRational total;
  for (std::size_t i = 1; i <= depth; ++i) {
    DyadicRational worst;
    for (const GroupElement& g : model.cover(i)) {
      worst = max(worst, metric_a(t.evaluate(g), s.evaluate(g), family, kk));
    }
    total = total + DyadicRational::pow2(-static_cast<int>(i)) * worst;
  }
  return total;
}

GammaSupReport gamma_sup(const Action& t, const Action& s, const GammaSpec& gamma,
                         std::optional<std::size_t> k, SupMode mode, unsigned radius,
                         std::uint64_t period_cap) {
  require_compatible(t, s);
  const GroupModel& model = t.model();
  GeneratingFamily family = GeneratingFamily::canonical(t.space());
  std::size_t kk = k.value_or(family.size());
  if (t.same_pointwise(s)) return {DyadicRational(), true, 0, std::nullopt};
  if (mode == SupMode::Exact) {
    auto gen = gamma.cyclic_generator(model);
    if (!gen) {
      fail(ErrorCode::ExactUnsupported, "exact gamma sup needs a cyclic-shaped gamma; give a radius");
    }
    const Transformation& tg = t.evaluate(*gen);
    const Transformation& sg = s.evaluate(*gen);
    auto ord_t = order_up_to(tg, period_cap);
    auto ord_s = order_up_to(sg, period_cap);
    if (!ord_t || !ord_s) fail(ErrorCode::CapExceeded, "image order exceeds the period cap");
    std::uint64_t period = std::lcm(*ord_t, *ord_s);
    if (period > period_cap) fail(ErrorCode::CapExceeded, "pair period exceeds the period cap");
    DyadicRational best;
    Transformation tc = tg;
    Transformation sc = sg;
    for (std::uint64_t j = 1; j < period; ++j) {
      best = max(best, metric_a(tc, sc, family, kk));
      tc = compose(tc, tg);
      sc = compose(sc, sg);
    }
    return {best, true, 0, period};
  }
  DyadicRational best;
  for (const GroupElement& g : gamma.enumerate_annulus(model, 0, radius)) {
    best = max(best, metric_a(t.evaluate(g), s.evaluate(g), family, kk));
  }
  return {best, false, radius, std::nullopt};
}

const char* exactness_name(Exactness e) {
  switch (e) {
    case Exactness::Exact: return "exact";
    case Exactness::Truncated: return "truncated";
    case Exactness::TruncatedWithCertificate: return "truncated-with-certificate";
  }
  return "unknown";
}

DistanceResult leash_m(const Action& t, const Action& s, const GammaSpec& gamma,
                       std::optional<std::size_t> k, SupMode mode, unsigned radius,
                       std::uint64_t period_cap) {
  require_compatible(t, s);
  gamma.check_unbounded(t.model());
  GeneratingFamily family = GeneratingFamily::canonical(t.space());
  std::size_t kk = k.value_or(family.size());
  DyadicRational dg = action_metric_d(t, s);
  GammaSupReport sup = gamma_sup(t, s, gamma, kk, mode, radius, period_cap);
  DistanceResult out;
  out.metric = "m";
  out.value = dg + sup.value;
  out.n = t.model().cover_count();
  out.k = kk;
  out.pair_period = sup.pair_period;
  if (sup.exact) {
    out.exactness = Exactness::Exact;
    return out;
  }
  out.radius = sup.radius;
  out.exactness = Exactness::Truncated;
  if (auto cert = certify_tail(t, s, gamma, kk, radius, sup.value, period_cap)) {
    out.exactness = Exactness::TruncatedWithCertificate;
    out.certified_bound = dg + cert->sup_bound;
    out.pair_period = cert->pair_period;
  }
  return out;
}

DistanceResult leash_w(const Action& t, const Action& s, const GammaSpec& gamma, std::size_t n,
                       std::size_t k, SupMode mode, unsigned radius, std::uint64_t period_cap) {
  require_compatible(t, s);
  gamma.check_unbounded(t.model());
  DyadicRational ag = action_metric_a(t, s, n, k);
  GammaSupReport sup = gamma_sup(t, s, gamma, k, mode, radius, period_cap);
  DistanceResult out;
  out.metric = "w";
  out.value = ag + sup.value;
  out.n = n;
  out.k = k;
  out.pair_period = sup.pair_period;
  out.exactness = sup.exact ? Exactness::Exact : Exactness::Truncated;
  if (!sup.exact) out.radius = sup.radius;
  return out;
}

DistanceResult leash_s(const Action& t, const Action& s, const GammaSpec& gamma, std::size_t n,
                       std::size_t k, SupMode mode, unsigned radius, std::uint64_t period_cap) {
  require_compatible(t, s);
  gamma.check_unbounded(t.model());
  const GroupModel& model = t.model();
  std::size_t depth = checked_cover_depth(model, n);
  GeneratingFamily family = GeneratingFamily::canonical(t.space());
  GammaSupReport sup = gamma_sup(t, s, gamma, k, mode, radius, period_cap);
  DyadicRational best = sup.value;
  for (std::size_t i = 1; i <= depth; ++i) {
    for (const GroupElement& g : model.cover(i)) {
      best = max(best, metric_a(t.evaluate(g), s.evaluate(g), family, k));
    }
  }
  DistanceResult out;
  out.metric = "s";
  out.value = best;
  out.n = n;
  out.k = k;
  out.pair_period = sup.pair_period;
  out.exactness = sup.exact ? Exactness::Exact : Exactness::Truncated;
  if (!sup.exact) out.radius = sup.radius;
  return out;
}

CertifiedBound certified_m_bound(const Action& t, const Action& s, const GammaSpec& gamma,
                                 std::optional<std::size_t> k, unsigned radius,
                                 std::uint64_t period_cap) {
  require_compatible(t, s);
  gamma.check_unbounded(t.model());
  if (t.same_pointwise(s)) return {DyadicRational(), 1, true};
  GeneratingFamily family = GeneratingFamily::canonical(t.space());
  std::size_t kk = k.value_or(family.size());
  GammaSupReport sup = gamma_sup(t, s, gamma, kk, SupMode::Truncated, radius, period_cap);
  auto cert = certify_tail(t, s, gamma, kk, radius, sup.value, period_cap);
  if (!cert) {
    fail(ErrorCode::NoEnvelopeAvailable,
         "no certificate: gamma is not cyclic-shaped or an image order exceeds the cap");
  }
  DyadicRational dg = action_metric_d(t, s);
  return {dg + cert->sup_bound, cert->pair_period, cert->closed};
}

MixingProfile mixing_profile(const Action& t, const GammaSpec& gamma, unsigned r1, unsigned r2,
                             std::optional<std::size_t> k) {
  const GroupModel& model = t.model();
  GeneratingFamily family = GeneratingFamily::canonical(t.space());
  std::size_t kk = k.value_or(family.size());
  MixingProfile profile;
  profile.elements = gamma.enumerate_annulus(model, r1, r2);
  profile.values.reserve(profile.elements.size());
  for (const GroupElement& g : profile.elements) {
    profile.values.push_back(metric_a(t.evaluate(g), theta, family, kk));
    profile.deficiency = max(profile.deficiency, profile.values.back());
  }
  return profile;
}

DyadicRational mixing_deficiency(const Action& t, const GammaSpec& gamma, unsigned r1, unsigned r2,
                                 std::optional<std::size_t> k) {
  return mixing_profile(t, gamma, r1, r2, k).deficiency;
}

DyadicRational h_net_transport(const Action& t, const GroupElement& h, const GroupElement& gamma,
                               std::optional<std::size_t> k) {
  GeneratingFamily family = GeneratingFamily::canonical(t.space());
  std::size_t kk = k.value_or(family.size());
  if (kk > family.size()) fail(ErrorCode::DepthOutOfRange, "depth exceeds family size");
  const Transformation& th = t.evaluate(h);
  std::vector<MeasurableSet> front;
  std::vector<MeasurableSet> back;
  std::vector<DyadicRational> weights;
  front.reserve(kk);
  back.reserve(kk);
  weights.reserve(kk);
  for (std::size_t i = 1; i <= kk; ++i) {
    MeasurableSet member = family.member(i);
    back.push_back(apply_inverse(th, member));
    front.push_back(std::move(member));
    weights.push_back(family.weight(i));
  }
  return correlation_sum(t.evaluate(gamma), front, back, weights);
}

HNetReport h_net_bound(const Action& t, std::span<const GroupElement> h_set, const GammaSpec& gamma,
                       unsigned coverage_radius, unsigned gamma_r1, unsigned gamma_r2,
                       std::optional<std::size_t> k) {
  const GroupModel& model = t.model();
  if (h_set.empty()) fail(ErrorCode::InvalidParams, "empty h set");
  std::vector<GroupElement> gammas;
  if (gamma_r1 == 0) gammas.push_back(model.identity_element());
  for (GroupElement& g : gamma.enumerate_annulus(model, gamma_r1, gamma_r2)) {
    gammas.push_back(std::move(g));
  }
  for (const GroupElement& g : model.ball(coverage_radius)) {
    bool covered = false;
    for (const GroupElement& h : h_set) {
      if (gamma.contains(model, model.multiply(model.inverse(h), g))) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      fail(ErrorCode::HNotANet, "ball element " + model.format(g) + " has no h*gamma factorization");
    }
  }
  GeneratingFamily family = GeneratingFamily::canonical(t.space());
  std::size_t kk = k.value_or(family.size());
  HNetReport report{DyadicRational(), 0, true};
  for (const GroupElement& h : h_set) {
    for (const GroupElement& g : gammas) {
      DyadicRational transported = h_net_transport(t, h, g, kk);
      DyadicRational direct = metric_a(t.evaluate(model.multiply(h, g)), theta, family, kk);
      if (transported != direct) report.transport_verified = false;
      report.bound = max(report.bound, transported);
      ++report.pairs_checked;
    }
  }
  return report;
}

ApproxWitness product_approx_witness(const Action& t, const Action& s, std::size_t k,
                                     unsigned ball_radius, const GammaSpec* gamma,
                                     unsigned gamma_radius) {
  if (!t.model().same_model(s.model())) {
    fail(ErrorCode::ModelMismatch, "actions over different group models");
  }
  const GroupModel& model = t.model();
  ApproxWitness out;
  for (const GroupElement& g : model.ball(ball_radius)) {
    out.ball_max = max(out.ball_max, metric_a_cross(t.evaluate(g), s.evaluate(g), k));
    ++out.elements_checked;
  }
  out.value = out.ball_max;
  if (gamma != nullptr) {
    DyadicRational gm;
    for (const GroupElement& g : gamma->enumerate_annulus(model, 0, gamma_radius)) {
      gm = max(gm, metric_a_cross(t.evaluate(g), s.evaluate(g), k));
      ++out.elements_checked;
    }
    out.gamma_max = gm;
    out.value = max(out.value, gm);
  }
  return out;
}

RokhlinReport rokhlin_experiment(std::span<const Action> factors, std::size_t k,
                                 unsigned ball_radius) {
  if (factors.empty()) fail(ErrorCode::InvalidParams, "product of zero actions");
  const Action& first = factors.front();
  for (const Action& f : factors) {
    if (!f.model().same_model(first.model())) {
      fail(ErrorCode::ModelMismatch, "factors over different group models");
    }
    if (!(f.space() == first.space())) fail(ErrorCode::SpaceMismatch, "factors on different spaces");
  }
  Action prod = product_action_many(factors);
  unsigned block = first.resolution();
  auto count = static_cast<unsigned>(factors.size());
  RokhlinReport report;
  std::vector<GroupElement> ball = first.model().ball(ball_radius);
  for (unsigned j = 0; j < count; ++j) {
    Action conj = conjugate_action(prod, block_transposition(block, count, j));
    DyadicRational witness;
    for (const GroupElement& g : ball) {
      witness = max(witness, metric_a_cross(conj.evaluate(g), factors[j].evaluate(g), k));
    }
    report.witness_values.push_back(witness);
    report.max_value = max(report.max_value, witness);
  }
  return report;
}

NetResult greedy_eps_net(std::span<const Action> actions, const DyadicRational& eps,
                         const ActionDistance& dist) {
  NetResult result;
  for (std::size_t idx = 0; idx < actions.size(); ++idx) {
    bool assigned = false;
    for (std::size_t c = 0; c < result.center_indices.size() && !assigned; ++c) {
      DyadicRational value = dist(actions[idx], actions[result.center_indices[c]]);
      if (value.is_zero() || value < eps) {
        result.assignment.push_back(c);
        result.distances.push_back(value);
        assigned = true;
      }
    }
    if (!assigned) {
      result.center_indices.push_back(idx);
      result.assignment.push_back(result.center_indices.size() - 1);
      result.distances.push_back(DyadicRational());
    }
  }
  return result;
}

}  // namespace leash
