#include "leash/metrics.hpp"

#include "leash/error.hpp"

namespace leash {

namespace {

std::size_t checked_depth(const GeneratingFamily& family, std::optional<std::size_t> depth) {
  std::size_t n = depth.value_or(family.size());
  if (n > family.size()) fail(ErrorCode::DepthOutOfRange, "depth exceeds family size");
  return n;
}

void require_family_space(const Transformation& t, const GeneratingFamily& family) {
  if (t.space() != family.space()) {
    fail(ErrorCode::SpaceMismatch, "transformation not on the family's space");
  }
}

std::vector<MeasurableSet> family_prefix(const GeneratingFamily& family, std::size_t n) {
  std::vector<MeasurableSet> sets;
  sets.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) sets.push_back(family.member(i));
  return sets;
}

}  // namespace

DyadicRational metric_d(const Transformation& t, const Transformation& s, const GeneratingFamily& family,
                        std::optional<std::size_t> depth) {
  require_family_space(t, family);
  require_family_space(s, family);
  std::size_t n = checked_depth(family, depth);
  unsigned L = family.space().resolution();
  // Accumulate at fixed exponent n + L: the i-th term is cells * 2^-(i+L).
  BigInt acc = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    MeasurableSet a = family.member(i);
    std::size_t fwd = symdiff_cardinality(apply(t, a), apply(s, a));
    std::size_t bwd = symdiff_cardinality(apply_inverse(t, a), apply_inverse(s, a));
    acc += BigInt(fwd + bwd) << (n - i);
  }
  return DyadicRational::from_parts(acc, static_cast<unsigned>(n) + L);
}

namespace {

// Shared double sum; the S-side count is either |S A_i cap A_j| * 2^L or
// |A_i| * |A_j| (both at scale 2^-2L once the T side is rescaled by 2^L).
DyadicRational metric_a_impl(const Transformation& t, const Transformation* s,
                             const GeneratingFamily& family, std::optional<std::size_t> depth) {
  require_family_space(t, family);
  if (s != nullptr) require_family_space(*s, family);
  std::size_t n = checked_depth(family, depth);
  unsigned L = family.space().resolution();
  std::vector<MeasurableSet> prefix = family_prefix(family, n);
  BigInt acc = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    MeasurableSet ti = apply(t, prefix[i - 1]);
    MeasurableSet si = s != nullptr ? apply(*s, prefix[i - 1]) : prefix[i - 1];
    std::size_t mu_i = prefix[i - 1].cardinality();
    for (std::size_t j = 1; j <= n; ++j) {
      std::int64_t lhs =
          static_cast<std::int64_t>(intersection_cardinality(ti, prefix[j - 1])) << L;
      std::int64_t rhs;
      if (s != nullptr) {
        rhs = static_cast<std::int64_t>(intersection_cardinality(si, prefix[j - 1])) << L;
      } else {
        rhs = static_cast<std::int64_t>(mu_i) * static_cast<std::int64_t>(prefix[j - 1].cardinality());
      }
      std::int64_t diff = lhs >= rhs ? lhs - rhs : rhs - lhs;
      if (diff != 0) acc += BigInt(diff) << (2 * n - i - j);
    }
  }
  return DyadicRational::from_parts(acc, static_cast<unsigned>(2 * n) + 2 * L);
}

}  // namespace

DyadicRational metric_a(const Transformation& t, const Transformation& s, const GeneratingFamily& family,
                        std::optional<std::size_t> depth) {
  return metric_a_impl(t, &s, family, depth);
}

DyadicRational metric_a(const Transformation& t, ThetaProjector, const GeneratingFamily& family,
                        std::optional<std::size_t> depth) {
  return metric_a_impl(t, nullptr, family, depth);
}

DyadicRational metric_a_cross(const Transformation& t, const Transformation& s, std::size_t depth) {
  GeneratingFamily ft = GeneratingFamily::canonical(t.space());
  GeneratingFamily fs = GeneratingFamily::canonical(s.space());
  if (depth > ft.size() || depth > fs.size()) {
    fail(ErrorCode::DepthTooDeep, "depth exceeds the common canonical family");
  }
  std::vector<MeasurableSet> pt = family_prefix(ft, depth);
  std::vector<MeasurableSet> ps = family_prefix(fs, depth);
  unsigned lt = t.resolution();
  unsigned ls = s.resolution();
  DyadicRational total;
  for (std::size_t i = 1; i <= depth; ++i) {
    MeasurableSet ti = apply(t, pt[i - 1]);
    MeasurableSet si = apply(s, ps[i - 1]);
    for (std::size_t j = 1; j <= depth; ++j) {
      DyadicRational left =
          DyadicRational::from_parts(BigInt(intersection_cardinality(ti, pt[j - 1])), lt);
      DyadicRational right =
          DyadicRational::from_parts(BigInt(intersection_cardinality(si, ps[j - 1])), ls);
      if (left != right) {
        total = total + abs_diff(left, right).scaled_pow2(-static_cast<int>(i + j));
      }
    }
  }
  return total;
}

DyadicRational correlation_sum(const Transformation& g_image, const std::vector<MeasurableSet>& f1,
                               const std::vector<MeasurableSet>& f2,
                               const std::vector<DyadicRational>& weights) {
  if (weights.size() < f1.size() || weights.size() < f2.size()) {
    fail(ErrorCode::InvalidParams, "weight list shorter than a family");
  }
  unsigned L = g_image.resolution();
  DyadicRational total;
  for (std::size_t i = 0; i < f1.size(); ++i) {
    MeasurableSet gi = apply(g_image, f1[i]);
    DyadicRational mu_i = f1[i].measure();
    for (std::size_t j = 0; j < f2.size(); ++j) {
      DyadicRational lhs =
          DyadicRational::from_parts(BigInt(intersection_cardinality(gi, f2[j])), L);
      DyadicRational rhs = mu_i * f2[j].measure();
      if (lhs != rhs) total = total + weights[i] * weights[j] * abs_diff(lhs, rhs);
    }
  }
  return total;
}

CorrelationMatrix CorrelationMatrix::build(const Transformation& t, const GeneratingFamily& family,
                                           std::size_t depth) {
  require_family_space(t, family);
  std::size_t n = checked_depth(family, depth);
  std::vector<MeasurableSet> prefix = family_prefix(family, n);
  std::vector<std::size_t> counts(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    MeasurableSet ti = apply(t, prefix[i]);
    for (std::size_t j = 0; j < n; ++j) {
      counts[i * n + j] = intersection_cardinality(ti, prefix[j]);
    }
  }
  return CorrelationMatrix(n, family.space().resolution(), std::move(counts));
}

DyadicRational CorrelationMatrix::entry(std::size_t i, std::size_t j) const {
  if (i == 0 || j == 0 || i > depth_ || j > depth_) {
    fail(ErrorCode::DepthOutOfRange, "matrix index out of range");
  }
  return DyadicRational::from_parts(BigInt(counts_[(i - 1) * depth_ + (j - 1)]), resolution_);
}

}  // namespace leash
