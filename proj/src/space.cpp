#include "leash/space.hpp"

#include <bit>

#include "leash/error.hpp"

namespace leash {

DyadicSpace make_space(unsigned resolution) {
  if (resolution > kMaxResolution) {
    fail(ErrorCode::ResolutionTooLarge,
         "resolution " + std::to_string(resolution) + " exceeds cap " + std::to_string(kMaxResolution));
  }
  return DyadicSpace(resolution);
}

namespace {

void require_same_space(const MeasurableSet& a, const MeasurableSet& b) {
  if (a.space() != b.space()) fail(ErrorCode::SpaceMismatch, "sets live on different spaces");
}

}  // namespace

MeasurableSet::MeasurableSet(const DyadicSpace& space)
    : space_(space), words_((space.cell_count() + 63) / 64, 0) {}

MeasurableSet MeasurableSet::empty(const DyadicSpace& space) { return MeasurableSet(space); }

MeasurableSet MeasurableSet::full(const DyadicSpace& space) {
  MeasurableSet s(space);
  std::uint32_t n = space.cell_count();
  for (std::uint32_t c = 0; c < n; ++c) s.words_[c / 64] |= std::uint64_t{1} << (c % 64);
  return s;
}

MeasurableSet MeasurableSet::of_cells(const DyadicSpace& space, std::span<const std::uint32_t> cells) {
  MeasurableSet s(space);
  for (std::uint32_t c : cells) s.insert(c);
  return s;
}

MeasurableSet MeasurableSet::of_cells(const DyadicSpace& space,
                                      std::initializer_list<std::uint32_t> cells) {
  return of_cells(space, std::span<const std::uint32_t>(cells.begin(), cells.size()));
}

MeasurableSet MeasurableSet::interval(const DyadicSpace& space, unsigned level, std::uint32_t position) {
  if (level > space.resolution()) fail(ErrorCode::DepthOutOfRange, "interval level exceeds resolution");
  if (position >= (std::uint32_t{1} << level)) {
    fail(ErrorCode::InvalidParams, "interval position out of range");
  }
  MeasurableSet s(space);
  std::uint32_t width = std::uint32_t{1} << (space.resolution() - level);
  std::uint32_t first = position * width;
  for (std::uint32_t c = first; c < first + width; ++c) s.words_[c / 64] |= std::uint64_t{1} << (c % 64);
  return s;
}

bool MeasurableSet::contains(std::uint32_t cell) const {
  return (words_[cell / 64] >> (cell % 64)) & 1;
}

void MeasurableSet::insert(std::uint32_t cell) {
  if (cell >= space_.cell_count()) fail(ErrorCode::InvalidParams, "cell index out of range");
  words_[cell / 64] |= std::uint64_t{1} << (cell % 64);
}

std::size_t MeasurableSet::cardinality() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += std::popcount(w);
  return n;
}

DyadicRational MeasurableSet::measure() const {
  return DyadicRational::from_parts(BigInt(cardinality()), space_.resolution());
}

std::vector<std::uint32_t> MeasurableSet::cells() const {
  std::vector<std::uint32_t> out;
  std::uint32_t n = space_.cell_count();
  for (std::uint32_t c = 0; c < n; ++c) {
    if (contains(c)) out.push_back(c);
  }
  return out;
}

MeasurableSet operator&(const MeasurableSet& a, const MeasurableSet& b) {
  require_same_space(a, b);
  MeasurableSet r = a;
  for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] &= b.words_[i];
  return r;
}

MeasurableSet operator|(const MeasurableSet& a, const MeasurableSet& b) {
  require_same_space(a, b);
  MeasurableSet r = a;
  for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] |= b.words_[i];
  return r;
}

MeasurableSet operator^(const MeasurableSet& a, const MeasurableSet& b) {
  require_same_space(a, b);
  MeasurableSet r = a;
  for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] ^= b.words_[i];
  return r;
}

MeasurableSet operator~(const MeasurableSet& a) {
  MeasurableSet r = a;
  std::uint32_t n = r.space_.cell_count();
  for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] = ~r.words_[i];
  unsigned tail = n % 64;
  if (tail != 0) r.words_.back() &= (std::uint64_t{1} << tail) - 1;
  return r;
}

bool operator==(const MeasurableSet& a, const MeasurableSet& b) {
  return a.space_ == b.space_ && a.words_ == b.words_;
}

std::size_t intersection_cardinality(const MeasurableSet& a, const MeasurableSet& b) {
  require_same_space(a, b);
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.words().size(); ++i) n += std::popcount(a.words()[i] & b.words()[i]);
  return n;
}

std::size_t symdiff_cardinality(const MeasurableSet& a, const MeasurableSet& b) {
  require_same_space(a, b);
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.words().size(); ++i) n += std::popcount(a.words()[i] ^ b.words()[i]);
  return n;
}

GeneratingFamily::GeneratingFamily(const DyadicSpace& space)
    : space_(space), size_((std::size_t{1} << (space.resolution() + 1)) - 2) {}

GeneratingFamily GeneratingFamily::canonical(const DyadicSpace& space) {
  return GeneratingFamily(space);
}

MeasurableSet GeneratingFamily::member(std::size_t index) const {
  IntervalKey key = key_at(index);
  return MeasurableSet::interval(space_, key.level, key.position);
}

IntervalKey GeneratingFamily::key_at(std::size_t index) const {
  if (index == 0 || index > size_) fail(ErrorCode::DepthOutOfRange, "family index out of range");
  unsigned level = std::bit_width(index + 1) - 1;
  std::uint32_t position = static_cast<std::uint32_t>(index + 1 - (std::size_t{1} << level));
  return {level, position};
}

std::size_t GeneratingFamily::index_of(const IntervalKey& key) {
  return (std::size_t{1} << key.level) + key.position - 1;
}

DyadicRational GeneratingFamily::weight(std::size_t index) const {
  if (index == 0 || index > size_) fail(ErrorCode::DepthOutOfRange, "family index out of range");
  return DyadicRational::pow2(-static_cast<int>(index));
}

std::optional<std::size_t> approx_index(const GeneratingFamily& family, const MeasurableSet& target,
                                        const DyadicRational& eps) {
  if (family.space() != target.space()) fail(ErrorCode::SpaceMismatch, "target not on the family's space");
  for (std::size_t i = 1; i <= family.size(); ++i) {
    MeasurableSet candidate = family.member(i);
    DyadicRational delta =
        DyadicRational::from_parts(BigInt(symdiff_cardinality(candidate, target)),
                                   family.space().resolution());
    if (delta < eps) return i;
  }
  return std::nullopt;
}

}  // namespace leash
