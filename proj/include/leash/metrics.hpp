#pragma once

#include <optional>
#include <vector>

#include "leash/space.hpp"
#include "leash/transform.hpp"

namespace leash {

// Pairing rule mu(A) * mu(B): the orthoprojection onto constants.
struct ThetaProjector {};
inline constexpr ThetaProjector theta{};

// d(T,S) = sum_i 2^-i ( mu(T A_i symdiff S A_i) + mu(T^-1 A_i symdiff S^-1 A_i) ),
// over i <= depth (full family when absent). Exact.
DyadicRational metric_d(const Transformation& t, const Transformation& s, const GeneratingFamily& family,
                        std::optional<std::size_t> depth = std::nullopt);

// a(T,S) = sum_{i,j} 2^-(i+j) | mu(T A_i cap A_j) - mu(S A_i cap A_j) |. Exact.
DyadicRational metric_a(const Transformation& t, const Transformation& s, const GeneratingFamily& family,
                        std::optional<std::size_t> depth = std::nullopt);

// Theta variant: the S-side pairing is mu(A_i) mu(A_j).
DyadicRational metric_a(const Transformation& t, ThetaProjector, const GeneratingFamily& family,
                        std::optional<std::size_t> depth = std::nullopt);

// a_k across resolutions: each operand evaluates mu(. A_i cap A_j) in its own space,
// with intervals identified by their (level, position) keys.
DyadicRational metric_a_cross(const Transformation& t, const Transformation& s, std::size_t depth);

// sum_{i,j} w_i w_j | mu(g_image A_i cap B_j) - mu(A_i) mu(B_j) | over A_i in f1, B_j in f2.
DyadicRational correlation_sum(const Transformation& g_image, const std::vector<MeasurableSet>& f1,
                               const std::vector<MeasurableSet>& f2,
                               const std::vector<DyadicRational>& weights);

// The values mu(T A_i cap A_j) for i, j <= depth.
class CorrelationMatrix {
 public:
  static CorrelationMatrix build(const Transformation& t, const GeneratingFamily& family,
                                 std::size_t depth);
  std::size_t depth() const { return depth_; }
  DyadicRational entry(std::size_t i, std::size_t j) const;  // 1-based

 private:
  CorrelationMatrix(std::size_t depth, unsigned resolution, std::vector<std::size_t> counts)
      : depth_(depth), resolution_(resolution), counts_(std::move(counts)) {}
  std::size_t depth_;
  unsigned resolution_;
  std::vector<std::size_t> counts_;
};

}  // namespace leash
