#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leash/error.hpp"

namespace leash {

enum class GroupKind { Z, Zd, Cyclic, Free, H };

const char* group_kind_name(GroupKind kind);

// An element in its model's unique normal form.
//   Z: single integer. Zd: integer vector. Cyclic(m): residue in [0, m).
//   Free(r): reduced word of signed 1-based generator indices (+i, -i).
//   H(n): (v in Z^n, r in Z_n) for the wreath-like product Z^n x| Z_n.
class GroupElement {
 public:
  GroupKind kind() const { return kind_; }
  bool is_identity() const;

  std::int64_t as_integer() const;                    // Z, Cyclic
  const std::vector<std::int64_t>& vec() const { return ints_; }  // Zd, H
  std::int64_t rotation() const { return rot_; }      // H
  const std::vector<std::int32_t>& word() const { return word_; }  // Free

  // Total order used for deterministic enumeration tie-breaks.
  static int compare(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement& a, const GroupElement& b) { return compare(a, b) == 0; }
  friend bool operator!=(const GroupElement& a, const GroupElement& b) { return compare(a, b) != 0; }
  friend bool operator<(const GroupElement& a, const GroupElement& b) { return compare(a, b) < 0; }

 private:
  friend class GroupModel;
  GroupKind kind_ = GroupKind::Z;
  std::vector<std::int64_t> ints_;
  std::vector<std::int32_t> word_;
  std::int64_t rot_ = 0;
};

// A word over signed 1-based generator indices: +i means generator i-1, -i its inverse.
using GeneratorWord = std::vector<std::int32_t>;

// Run-length rendering, e.g. "g0^2*g1^-1"; the empty word renders as "e".
std::string format_generator_word(const GeneratorWord& word);

enum class CoverMode { Singletons, GeneratingSet };

// One of the five built-in presented groups, with word norm, ball enumeration,
// covers K_1, K_2, ... and relator words for validating actions.
class GroupModel : public std::enable_shared_from_this<GroupModel> {
 public:
  static std::shared_ptr<const GroupModel> z(CoverMode mode = CoverMode::Singletons);
  static std::shared_ptr<const GroupModel> zd(unsigned d, CoverMode mode = CoverMode::Singletons);
  static std::shared_ptr<const GroupModel> cyclic(std::uint64_t m,
                                                  CoverMode mode = CoverMode::Singletons);
  static std::shared_ptr<const GroupModel> free_group(unsigned r,
                                                      CoverMode mode = CoverMode::Singletons);
  static std::shared_ptr<const GroupModel> h(unsigned n, CoverMode mode = CoverMode::Singletons);
  static std::shared_ptr<const GroupModel> make(GroupKind kind, std::uint64_t param,
                                                CoverMode mode = CoverMode::Singletons);

  GroupKind kind() const { return kind_; }
  std::uint64_t param() const { return param_; }  // d, m, r, or n (0 for Z)
  CoverMode cover_mode() const { return cover_mode_; }
  bool same_model(const GroupModel& other) const;

  std::size_t generator_count() const;
  GroupElement generator(std::size_t index) const;  // 0-based
  GroupElement identity_element() const;

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  GroupElement power(const GroupElement& a, std::int64_t exponent) const;
  GroupElement word_element(const GeneratorWord& word) const;

  // Word norm over the declared generators (l1 norm for Z^d; BFS for H).
  unsigned norm(const GroupElement& g) const;
  // All elements of norm <= radius, ordered by (norm, canonical form).
  std::vector<GroupElement> ball(unsigned radius) const;

  std::size_t cover_count() const { return covers_.size(); }
  const std::vector<GroupElement>& cover(std::size_t index) const;  // 1-based, weights 2^-index
  const std::vector<GeneratorWord>& relator_words() const { return relators_; }
  // A generator word evaluating to g.
  GeneratorWord factor(const GroupElement& g) const;

  std::string format(const GroupElement& g) const;
  GroupElement parse(std::string_view text) const;  // throws ParseError
  std::string describe() const;                     // e.g. "Z", "H(2)"

  static constexpr unsigned kEnumerationCap = 64;
  static constexpr std::size_t kBallSizeCap = 200000;

 private:
  GroupModel(GroupKind kind, std::uint64_t param, CoverMode mode);
  GroupElement make_element() const;
  void build_covers();
  void expand_bfs(unsigned radius) const;  // H norm cache

  GroupKind kind_;
  std::uint64_t param_;
  CoverMode cover_mode_;
  std::vector<GroupElement> generators_;
  std::vector<std::vector<GroupElement>> covers_;
  std::vector<GeneratorWord> relators_;

  mutable std::mutex bfs_mutex_;
  mutable std::map<GroupElement, unsigned> bfs_norms_;
  mutable std::vector<GroupElement> bfs_frontier_;
  mutable unsigned bfs_radius_ = 0;
};

using GroupModelPtr = std::shared_ptr<const GroupModel>;

// The unbounded subset Gamma along which mixing is measured.
class GammaSpec {
 public:
  enum class Kind { Whole, Lattice, CyclicSubgroup, Custom };

  static GammaSpec whole();
  static GammaSpec lattice(std::int64_t m);  // mZ inside Z
  static GammaSpec cyclic_subgroup(GroupElement generator);
  static GammaSpec custom(
      std::string description, std::function<bool(const GroupModel&, const GroupElement&)> contains,
      std::function<std::vector<GroupElement>(const GroupModel&, unsigned, unsigned)> enumerate);

  Kind kind() const { return kind_; }
  bool contains(const GroupModel& model, const GroupElement& g) const;
  // Elements gamma with r1 < |gamma| <= r2, ordered by (norm, canonical form).
  std::vector<GroupElement> enumerate_annulus(const GroupModel& model, unsigned r1, unsigned r2) const;
  // gamma0 with Gamma = <gamma0>, when the spec is cyclic-shaped (whole Z counts).
  std::optional<GroupElement> cyclic_generator(const GroupModel& model) const;
  // Throws InvalidParams when Gamma is bounded in norm (checked up to the cap).
  void check_unbounded(const GroupModel& model, unsigned cap = GroupModel::kEnumerationCap) const;
  std::string describe(const GroupModel& model) const;

  static GammaSpec parse(const GroupModel& model, std::string_view text);  // throws ParseError

 private:
  GammaSpec() = default;
  Kind kind_ = Kind::Whole;
  std::int64_t lattice_m_ = 1;
  std::optional<GroupElement> generator_;
  std::string description_;
  std::function<bool(const GroupModel&, const GroupElement&)> contains_;
  std::function<std::vector<GroupElement>(const GroupModel&, unsigned, unsigned)> enumerate_;
};

}  // namespace leash
