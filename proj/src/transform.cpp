#include "leash/transform.hpp"

#include <array>
#include <numeric>
#include <random>

#include "leash/error.hpp"

namespace leash {

namespace {

std::vector<std::uint32_t> invert_map(const std::vector<std::uint32_t>& fwd) {
  std::vector<std::uint32_t> inv(fwd.size());
  for (std::uint32_t c = 0; c < fwd.size(); ++c) inv[fwd[c]] = c;
  return inv;
}

void require_same_space(const Transformation& a, const Transformation& b) {
  if (a.space() != b.space()) fail(ErrorCode::SpaceMismatch, "transformations live on different spaces");
}

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

}  // namespace

Transformation Transformation::identity(const DyadicSpace& space) {
  std::vector<std::uint32_t> fwd(space.cell_count());
  std::iota(fwd.begin(), fwd.end(), 0);
  std::vector<std::uint32_t> inv = fwd;
  return Transformation(space, std::move(fwd), std::move(inv));
}

Transformation Transformation::from_forward(const DyadicSpace& space,
                                            std::vector<std::uint32_t> forward) {
  if (forward.size() != space.cell_count()) {
    fail(ErrorCode::InvalidParams, "permutation length does not match cell count");
  }
  std::vector<bool> seen(forward.size(), false);
  for (std::uint32_t v : forward) {
    if (v >= forward.size() || seen[v]) fail(ErrorCode::InvalidParams, "not a bijection");
    seen[v] = true;
  }
  std::vector<std::uint32_t> inv = invert_map(forward);
  return Transformation(space, std::move(forward), std::move(inv));
}

Transformation Transformation::rotation(const DyadicSpace& space, std::int64_t shift) {
  std::int64_t n = space.cell_count();
  std::int64_t s = ((shift % n) + n) % n;
  std::vector<std::uint32_t> fwd(space.cell_count());
  for (std::int64_t c = 0; c < n; ++c) fwd[c] = static_cast<std::uint32_t>((c + s) % n);
  std::vector<std::uint32_t> inv = invert_map(fwd);
  return Transformation(space, std::move(fwd), std::move(inv));
}

Transformation Transformation::transposition(const DyadicSpace& space, std::uint32_t c) {
  if (c + 1 >= space.cell_count()) fail(ErrorCode::InvalidParams, "transposition out of range");
  std::vector<std::uint32_t> fwd(space.cell_count());
  std::iota(fwd.begin(), fwd.end(), 0);
  std::swap(fwd[c], fwd[c + 1]);
  std::vector<std::uint32_t> inv = fwd;
  return Transformation(space, std::move(fwd), std::move(inv));
}

Transformation compose(const Transformation& a, const Transformation& b) {
  require_same_space(a, b);
  std::vector<std::uint32_t> fwd(a.space().cell_count());
  for (std::uint32_t c = 0; c < fwd.size(); ++c) fwd[c] = a.forward_cell(b.forward_cell(c));
  return Transformation::from_forward(a.space(), std::move(fwd));
}

Transformation invert(const Transformation& t) {
  std::vector<std::uint32_t> fwd(t.forward().begin(), t.forward().end());
  std::vector<std::uint32_t> inv = invert_map(fwd);
  return Transformation::from_forward(t.space(), std::move(inv));
}

Transformation conjugate(const Transformation& t, const Transformation& u) {
  return compose(invert(u), compose(t, u));
}

Transformation power(const Transformation& t, std::int64_t exponent) {
  Transformation base = exponent < 0 ? invert(t) : t;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-(exponent + 1)) + 1
                                 : static_cast<std::uint64_t>(exponent);
  Transformation acc = Transformation::identity(t.space());
  while (e > 0) {
    if (e & 1) acc = compose(acc, base);
    base = compose(base, base);
    e >>= 1;
  }
  return acc;
}

MeasurableSet apply(const Transformation& t, const MeasurableSet& s) {
  if (t.space() != s.space()) fail(ErrorCode::SpaceMismatch, "set not on the transformation's space");
  MeasurableSet out = MeasurableSet::empty(t.space());
  std::uint32_t n = t.space().cell_count();
  for (std::uint32_t c = 0; c < n; ++c) {
    if (s.contains(c)) out.insert(t.forward_cell(c));
  }
  return out;
}

MeasurableSet apply_inverse(const Transformation& t, const MeasurableSet& s) {
  if (t.space() != s.space()) fail(ErrorCode::SpaceMismatch, "set not on the transformation's space");
  MeasurableSet out = MeasurableSet::empty(t.space());
  std::uint32_t n = t.space().cell_count();
  for (std::uint32_t c = 0; c < n; ++c) {
    if (s.contains(c)) out.insert(t.inverse_cell(c));
  }
  return out;
}

std::optional<std::uint64_t> order_up_to(const Transformation& t, std::uint64_t cap) {
  std::uint32_t n = t.space().cell_count();
  std::vector<bool> seen(n, false);
  std::uint64_t order = 1;
  for (std::uint32_t c = 0; c < n; ++c) {
    if (seen[c]) continue;
    std::uint64_t len = 0;
    std::uint32_t x = c;
    do {
      seen[x] = true;
      x = t.forward_cell(x);
      ++len;
    } while (x != c);
    std::uint64_t g = std::gcd(order, len);
    if (order / g > cap / len) return std::nullopt;  // lcm would exceed cap
    order = order / g * len;
    if (order > cap) return std::nullopt;
  }
  return order;
}

Transformation lift_product(const Transformation& t, const Transformation& s) {
  std::array<Transformation, 2> pair = {t, s};
  return lift_product_many(pair);
}

Transformation lift_product_many(std::span<const Transformation> factors) {
  if (factors.empty()) fail(ErrorCode::InvalidParams, "empty factor list");
  unsigned block = factors[0].resolution();
  for (const Transformation& f : factors) {
    if (f.resolution() != block) fail(ErrorCode::SpaceMismatch, "factors on different resolutions");
  }
  unsigned total = block * static_cast<unsigned>(factors.size());
  if (total > kMaxResolution) {
    fail(ErrorCode::ResolutionOverflow, "product resolution " + std::to_string(total) + " exceeds cap");
  }
  DyadicSpace space = make_space(total);
  std::uint32_t mask = (std::uint32_t{1} << block) - 1;
  std::size_t m = factors.size();
  std::vector<std::uint32_t> fwd(space.cell_count());
  for (std::uint32_t c = 0; c < fwd.size(); ++c) {
    std::uint32_t out = 0;
    for (std::size_t j = 0; j < m; ++j) {
      unsigned shift = static_cast<unsigned>(m - 1 - j) * block;
      std::uint32_t x = (c >> shift) & mask;
      out |= factors[j].forward_cell(x) << shift;
    }
    fwd[c] = out;
  }
  return Transformation::from_forward(space, std::move(fwd));
}

Transformation refine(const Transformation& t, unsigned finer_resolution) {
  if (finer_resolution > kMaxResolution) fail(ErrorCode::ResolutionOverflow, "refinement exceeds cap");
  if (finer_resolution < t.resolution()) fail(ErrorCode::InvalidParams, "refinement must not coarsen");
  unsigned extra = finer_resolution - t.resolution();
  DyadicSpace space = make_space(finer_resolution);
  std::uint32_t mask = (std::uint32_t{1} << extra) - 1;
  std::vector<std::uint32_t> fwd(space.cell_count());
  for (std::uint32_t c = 0; c < fwd.size(); ++c) {
    fwd[c] = (t.forward_cell(c >> extra) << extra) | (c & mask);
  }
  return Transformation::from_forward(space, std::move(fwd));
}

Transformation block_transposition(unsigned block_resolution, unsigned block_count, unsigned j) {
  unsigned total = block_resolution * block_count;
  if (total > kMaxResolution) fail(ErrorCode::ResolutionOverflow, "block space exceeds cap");
  if (j >= block_count) fail(ErrorCode::InvalidParams, "block index out of range");
  DyadicSpace space = make_space(total);
  if (j == 0) return Transformation::identity(space);
  std::uint32_t mask = (std::uint32_t{1} << block_resolution) - 1;
  unsigned shift0 = (block_count - 1) * block_resolution;
  unsigned shiftj = (block_count - 1 - j) * block_resolution;
  std::vector<std::uint32_t> fwd(space.cell_count());
  for (std::uint32_t c = 0; c < fwd.size(); ++c) {
    std::uint32_t b0 = (c >> shift0) & mask;
    std::uint32_t bj = (c >> shiftj) & mask;
    std::uint32_t out = c & ~((mask << shift0) | (mask << shiftj));
    fwd[c] = out | (bj << shift0) | (b0 << shiftj);
  }
  return Transformation::from_forward(space, std::move(fwd));
}

Transformation random_transformation(const DyadicSpace& space, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> fwd(space.cell_count());
  std::iota(fwd.begin(), fwd.end(), 0);
  for (std::size_t i = fwd.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(draw_below(rng, i));
    std::swap(fwd[i - 1], fwd[j]);
  }
  return Transformation::from_forward(space, std::move(fwd));
}

Transformation near_identity(const DyadicSpace& space, const DyadicRational& eps, std::uint64_t seed,
                             std::optional<unsigned> level_cap) {
  unsigned L = space.resolution();
  unsigned cap = level_cap.value_or(L);
  if (cap > L) fail(ErrorCode::InvalidParams, "level cap exceeds resolution");
  std::uint32_t n = space.cell_count();
  if (n < 2) fail(ErrorCode::EpsTooSmall, "no transpositions exist on a one-cell space");
  // Budget for transpositions that may perturb a constrained interval:
  // each one moves at most two cells, so t of them keep every such interval's
  // symmetric difference at most 2t * 2^-L <= eps/2 < eps.
  std::uint64_t budget = eps.scaled_pow2(static_cast<int>(L) - 2).floor_u64();
  std::uint32_t block = std::uint32_t{1} << (L - cap);
  if (cap == L && budget == 0) {
    fail(ErrorCode::EpsTooSmall, "eps admits no transpositions at this resolution");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> fwd(n);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::iota(fwd.begin(), fwd.end(), 0);
    if (cap < L) {
      // Interior transpositions never cross a level-<=cap boundary; apply a few.
      std::uint64_t count = 1 + draw_below(rng, 4);
      for (std::uint64_t i = 0; i < count; ++i) {
        std::uint32_t c;
        do {
          c = static_cast<std::uint32_t>(draw_below(rng, n - 1));
        } while ((c + 1) % block == 0);
        std::swap(fwd[c], fwd[c + 1]);
      }
    }
    if (budget > 0) {
      std::uint64_t count = cap == L ? 1 + draw_below(rng, budget) : draw_below(rng, budget + 1);
      for (std::uint64_t i = 0; i < count; ++i) {
        std::uint32_t c = static_cast<std::uint32_t>(draw_below(rng, n - 1));
        std::swap(fwd[c], fwd[c + 1]);
      }
    }
    bool is_identity = true;
    for (std::uint32_t c = 0; c < n; ++c) {
      if (fwd[c] != c) {
        is_identity = false;
        break;
      }
    }
    if (!is_identity) return Transformation::from_forward(space, std::move(fwd));
  }
  fail(ErrorCode::Internal, "failed to draw a non-identity permutation");
}

}  // namespace leash
