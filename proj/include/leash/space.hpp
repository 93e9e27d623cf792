#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "leash/dyadic.hpp"

namespace leash {

inline constexpr unsigned kMaxResolution = 16;

// The finite model of (X, mu): 2^L equal cells, each of measure 2^(-L).
class DyadicSpace {
 public:
  DyadicSpace() = default;

  unsigned resolution() const { return resolution_; }
  std::uint32_t cell_count() const { return std::uint32_t{1} << resolution_; }
  DyadicRational cell_measure() const { return DyadicRational::pow2(-static_cast<int>(resolution_)); }

  friend bool operator==(const DyadicSpace& a, const DyadicSpace& b) {
    return a.resolution_ == b.resolution_;
  }
  friend bool operator!=(const DyadicSpace& a, const DyadicSpace& b) { return !(a == b); }

 private:
  friend DyadicSpace make_space(unsigned resolution);
  explicit DyadicSpace(unsigned resolution) : resolution_(resolution) {}
  unsigned resolution_ = 0;
};

DyadicSpace make_space(unsigned resolution);  // throws ResolutionTooLarge above kMaxResolution

// A measurable set as a cell bitmask.
class MeasurableSet {
 public:
  static MeasurableSet empty(const DyadicSpace& space);
  static MeasurableSet full(const DyadicSpace& space);
  static MeasurableSet of_cells(const DyadicSpace& space, std::span<const std::uint32_t> cells);
  static MeasurableSet of_cells(const DyadicSpace& space, std::initializer_list<std::uint32_t> cells);
  // The dyadic interval [position * 2^(L-level), (position+1) * 2^(L-level)).
  static MeasurableSet interval(const DyadicSpace& space, unsigned level, std::uint32_t position);

  const DyadicSpace& space() const { return space_; }
  bool contains(std::uint32_t cell) const;
  void insert(std::uint32_t cell);
  std::size_t cardinality() const;
  DyadicRational measure() const;
  std::vector<std::uint32_t> cells() const;

  friend MeasurableSet operator&(const MeasurableSet& a, const MeasurableSet& b);
  friend MeasurableSet operator|(const MeasurableSet& a, const MeasurableSet& b);
  friend MeasurableSet operator^(const MeasurableSet& a, const MeasurableSet& b);  // symmetric difference
  friend MeasurableSet operator~(const MeasurableSet& a);
  friend bool operator==(const MeasurableSet& a, const MeasurableSet& b);
  friend bool operator!=(const MeasurableSet& a, const MeasurableSet& b) { return !(a == b); }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  explicit MeasurableSet(const DyadicSpace& space);
  DyadicSpace space_;
  std::vector<std::uint64_t> words_;

  friend class Transformation;
};

// Cardinality of the intersection without materializing it.
std::size_t intersection_cardinality(const MeasurableSet& a, const MeasurableSet& b);
std::size_t symdiff_cardinality(const MeasurableSet& a, const MeasurableSet& b);

struct IntervalKey {
  unsigned level;
  std::uint32_t position;

  friend bool operator==(const IntervalKey& a, const IntervalKey& b) {
    return a.level == b.level && a.position == b.position;
  }
};

// The canonical generating family: all dyadic intervals of levels 1..L, ordered by
// (level ascending, left endpoint ascending). N = 2^(L+1) - 2. Indices are 1-based
// and identify the same interval across spaces of different resolution.
class GeneratingFamily {
 public:
  static GeneratingFamily canonical(const DyadicSpace& space);

  const DyadicSpace& space() const { return space_; }
  std::size_t size() const { return size_; }
  MeasurableSet member(std::size_t index) const;  // 1-based
  IntervalKey key_at(std::size_t index) const;
  static std::size_t index_of(const IntervalKey& key);
  DyadicRational weight(std::size_t index) const;  // 2^(-index)

 private:
  explicit GeneratingFamily(const DyadicSpace& space);
  DyadicSpace space_;
  std::size_t size_;
};

// Smallest 1-based index i with measure(member(i) symdiff target) < eps, if any.
std::optional<std::size_t> approx_index(const GeneratingFamily& family, const MeasurableSet& target,
                                        const DyadicRational& eps);

}  // namespace leash
