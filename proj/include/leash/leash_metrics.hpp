#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "leash/action.hpp"
#include "leash/metrics.hpp"

namespace leash {

// d_G(T,S) = sum_{i<=n} 2^-i max_{g in K_i} d(T^g, S^g), at full family depth.
// n defaults to the model's cover count.
DyadicRational action_metric_d(const Action& t, const Action& s,
                               std::optional<std::size_t> n = std::nullopt);

// a_G^{(n,k)}(T,S) = sum_{i<=n} 2^-i max_{g in K_i} a_k(T^g, S^g).
DyadicRational action_metric_a(const Action& t, const Action& s,
                               std::optional<std::size_t> n = std::nullopt,
                               std::optional<std::size_t> k = std::nullopt);

enum class SupMode { Exact, Truncated };

inline constexpr std::uint64_t kDefaultPeriodCap = 4096;

struct GammaSupReport {
  DyadicRational value;
  bool exact = false;
  unsigned radius = 0;                       // annulus bound scanned when truncated
  std::optional<std::uint64_t> pair_period;  // image pair period in exact mode
};

// sup_{gamma in Gamma} a_k(T^gamma, S^gamma). Exact mode needs a cyclic-shaped
// Gamma and image orders within the period cap; truncated mode scans the
// annulus 0 < |gamma| <= radius.
GammaSupReport gamma_sup(const Action& t, const Action& s, const GammaSpec& gamma,
                         std::optional<std::size_t> k, SupMode mode, unsigned radius = 0,
                         std::uint64_t period_cap = kDefaultPeriodCap);

enum class Exactness { Exact, Truncated, TruncatedWithCertificate };

const char* exactness_name(Exactness e);

struct DistanceResult {
  std::string metric;
  DyadicRational value;
  std::optional<std::size_t> n;
  std::optional<std::size_t> k;
  std::optional<unsigned> radius;
  Exactness exactness = Exactness::Exact;
  std::optional<DyadicRational> certified_bound;  // upper bound on the exact value
  std::optional<std::uint64_t> pair_period;
};

// m(T,S) = d_G + sup_Gamma a_k (k defaults to the full family). In truncated
// mode a certified upper bound is attached when the tail can be closed off.
DistanceResult leash_m(const Action& t, const Action& s, const GammaSpec& gamma,
                       std::optional<std::size_t> k, SupMode mode, unsigned radius = 0,
                       std::uint64_t period_cap = kDefaultPeriodCap);

// w^{(n,k)} = a_G^{(n,k)} + sup_Gamma a_k.
DistanceResult leash_w(const Action& t, const Action& s, const GammaSpec& gamma, std::size_t n,
                       std::size_t k, SupMode mode, unsigned radius = 0,
                       std::uint64_t period_cap = kDefaultPeriodCap);

// s^{(n,k)} = sup of a_k over Gamma and the covers K_1..K_n together.
DistanceResult leash_s(const Action& t, const Action& s, const GammaSpec& gamma, std::size_t n,
                       std::size_t k, SupMode mode, unsigned radius = 0,
                       std::uint64_t period_cap = kDefaultPeriodCap);

struct CertifiedBound {
  DyadicRational value;        // upper bound on the exact m
  std::uint64_t pair_period;
  bool closed;                 // true when the scan covered a full image period
};

// Upper bound on the exact m from a truncated scan: either the scanned annulus
// already covers a full image period of gamma0, or the unscanned tail is capped
// by the orthoprojection triangle envelope. Throws NoEnvelopeAvailable when
// Gamma is not cyclic-shaped or the image orders exceed the cap.
CertifiedBound certified_m_bound(const Action& t, const Action& s, const GammaSpec& gamma,
                                 std::optional<std::size_t> k, unsigned radius,
                                 std::uint64_t period_cap = kDefaultPeriodCap);

struct MixingProfile {
  std::vector<GroupElement> elements;   // annulus r1 < |gamma| <= r2, in enumeration order
  std::vector<DyadicRational> values;   // a_k(T^gamma, Theta)
  DyadicRational deficiency;            // max of values; zero for an empty annulus
};

MixingProfile mixing_profile(const Action& t, const GammaSpec& gamma, unsigned r1, unsigned r2,
                             std::optional<std::size_t> k = std::nullopt);

DyadicRational mixing_deficiency(const Action& t, const GammaSpec& gamma, unsigned r1, unsigned r2,
                                 std::optional<std::size_t> k = std::nullopt);

// a_k(T^(h gamma), Theta) computed on the transported side:
// mu(T^(h gamma) A cap B) = mu(T^gamma A cap T^(h^-1) B).
DyadicRational h_net_transport(const Action& t, const GroupElement& h, const GroupElement& gamma,
                               std::optional<std::size_t> k = std::nullopt);

struct HNetReport {
  DyadicRational bound;         // max transported value over the (h, gamma) grid
  std::size_t pairs_checked;
  bool transport_verified;      // every grid value matched the direct a_k
};

// Bounds the mixing deficiency over {h gamma : h in h_set, gamma in Gamma with
// gamma_r1 < |gamma| <= gamma_r2} by transported sums (gamma_r1 = 0 includes
// the identity). Additionally verifies that every element of the
// coverage_radius ball factors as h gamma with gamma in Gamma; otherwise
// HNotANet.
HNetReport h_net_bound(const Action& t, std::span<const GroupElement> h_set, const GammaSpec& gamma,
                       unsigned coverage_radius, unsigned gamma_r1, unsigned gamma_r2,
                       std::optional<std::size_t> k = std::nullopt);

struct ApproxWitness {
  DyadicRational ball_max;
  std::optional<DyadicRational> gamma_max;
  DyadicRational value;
  std::size_t elements_checked = 0;
};

// max over the |g| <= ball_radius ball (and optionally a Gamma annulus) of the
// cross-resolution a_k(T^g, S^g). Zero exactly when S approximates T to depth k.
ApproxWitness product_approx_witness(const Action& t, const Action& s, std::size_t k,
                                     unsigned ball_radius, const GammaSpec* gamma = nullptr,
                                     unsigned gamma_radius = 0);

struct RokhlinReport {
  std::vector<DyadicRational> witness_values;  // one per factor
  DyadicRational max_value;
};

// Conjugates the product of the factors by the block transposition moving
// coordinate j to the front and measures the cross-resolution distance to
// factor j over the ball.
RokhlinReport rokhlin_experiment(std::span<const Action> factors, std::size_t k,
                                 unsigned ball_radius);

using ActionDistance = std::function<DyadicRational(const Action&, const Action&)>;

struct NetResult {
  std::vector<std::size_t> center_indices;   // indices into the input list
  std::vector<std::size_t> assignment;       // per input: position in center_indices
  std::vector<DyadicRational> distances;     // per input: distance to its center
};

// Greedy eps-net in input order. An input joins the first center at distance
// zero or below eps; otherwise it becomes a new center.
NetResult greedy_eps_net(std::span<const Action> actions, const DyadicRational& eps,
                         const ActionDistance& dist);

}  // namespace leash
