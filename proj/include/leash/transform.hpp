#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "leash/space.hpp"

namespace leash {

// A measure-preserving automorphism at finite resolution: a permutation of cells
// with its inverse stored alongside.
class Transformation {
 public:
  static Transformation identity(const DyadicSpace& space);
  static Transformation from_forward(const DyadicSpace& space, std::vector<std::uint32_t> forward);
  // c -> c + shift (mod cell count).
  static Transformation rotation(const DyadicSpace& space, std::int64_t shift = 1);
  // Swaps cells c and c+1.
  static Transformation transposition(const DyadicSpace& space, std::uint32_t c);

  const DyadicSpace& space() const { return space_; }
  unsigned resolution() const { return space_.resolution(); }
  std::uint32_t forward_cell(std::uint32_t c) const { return forward_[c]; }
  std::uint32_t inverse_cell(std::uint32_t c) const { return inverse_[c]; }
  std::span<const std::uint32_t> forward() const { return forward_; }

  friend bool operator==(const Transformation& a, const Transformation& b) {
    return a.space_ == b.space_ && a.forward_ == b.forward_;
  }
  friend bool operator!=(const Transformation& a, const Transformation& b) { return !(a == b); }

 private:
  Transformation(DyadicSpace space, std::vector<std::uint32_t> fwd, std::vector<std::uint32_t> inv)
      : space_(space), forward_(std::move(fwd)), inverse_(std::move(inv)) {}
  DyadicSpace space_;
  std::vector<std::uint32_t> forward_;
  std::vector<std::uint32_t> inverse_;
};

// compose(a, b) applies b first, then a (the operator product a*b).
Transformation compose(const Transformation& a, const Transformation& b);
Transformation invert(const Transformation& t);
// u^(-1) t u: u acts first.
Transformation conjugate(const Transformation& t, const Transformation& u);
Transformation power(const Transformation& t, std::int64_t exponent);

MeasurableSet apply(const Transformation& t, const MeasurableSet& s);
MeasurableSet apply_inverse(const Transformation& t, const MeasurableSet& s);

// Order of the permutation, or nullopt if it exceeds the cap.
std::optional<std::uint64_t> order_up_to(const Transformation& t, std::uint64_t cap);

// The product T x S on the doubled space under the block-splitting identification
// (high bits = first coordinate): c -> (t[c >> L] << L) | s[c & (2^L - 1)].
Transformation lift_product(const Transformation& t, const Transformation& s);
// Iterated product; coordinate j occupies bit-block j, block 0 highest.
Transformation lift_product_many(std::span<const Transformation> factors);

// Block refinement onto a finer space: coarse cell c's subcells map
// order-preservingly onto the subcells of t[c].
Transformation refine(const Transformation& t, unsigned finer_resolution);

// Permutation of m bit-blocks of size block_resolution that swaps blocks 0 and j.
Transformation block_transposition(unsigned block_resolution, unsigned block_count, unsigned j);

Transformation random_transformation(const DyadicSpace& space, std::uint64_t seed);

// A permutation built from adjacent-cell transpositions with
// measure(A Delta U A) < eps for every canonical family member A of level <= level_cap
// (default: all levels). With level_cap < L, transpositions interior to a level_cap
// block are free (they fix every such interval exactly); straddling transpositions
// are budgeted by floor(eps * 2^L / 4).
Transformation near_identity(const DyadicSpace& space, const DyadicRational& eps, std::uint64_t seed,
                             std::optional<unsigned> level_cap = std::nullopt);

}  // namespace leash
