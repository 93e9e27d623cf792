#include "leash/group.hpp"

#include <algorithm>
#include <cstdlib>

namespace leash {

const char* group_kind_name(GroupKind kind) {
  switch (kind) {
    case GroupKind::Z: return "Z";
    case GroupKind::Zd: return "Zd";
    case GroupKind::Cyclic: return "cyclic";
    case GroupKind::Free: return "free";
    case GroupKind::H: return "H";
  }
  return "unknown";
}

bool GroupElement::is_identity() const {
  switch (kind_) {
    case GroupKind::Free: return word_.empty();
    case GroupKind::H:
      return rot_ == 0 && std::all_of(ints_.begin(), ints_.end(), [](auto v) { return v == 0; });
    default:
      return std::all_of(ints_.begin(), ints_.end(), [](auto v) { return v == 0; });
  }
}

std::int64_t GroupElement::as_integer() const {
  if (kind_ != GroupKind::Z && kind_ != GroupKind::Cyclic) {
    fail(ErrorCode::InvalidParams, "element has no single-integer form");
  }
  return ints_[0];
}

int GroupElement::compare(const GroupElement& a, const GroupElement& b) {
  if (a.kind_ != b.kind_) fail(ErrorCode::ModelMismatch, "elements from different model kinds");
  if (a.ints_ != b.ints_) return a.ints_ < b.ints_ ? -1 : 1;
  if (a.rot_ != b.rot_) return a.rot_ < b.rot_ ? -1 : 1;
  if (a.word_ != b.word_) return a.word_ < b.word_ ? -1 : 1;
  return 0;
}

namespace {

GeneratorWord concat(std::initializer_list<GeneratorWord> parts) {
  GeneratorWord out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

GeneratorWord repeated(std::int32_t letter, std::size_t count) {
  return GeneratorWord(count, letter);
}

GeneratorWord inverse_word(const GeneratorWord& w) {
  GeneratorWord out(w.rbegin(), w.rend());
  for (auto& l : out) l = -l;
  return out;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

}  // namespace

GroupModel::GroupModel(GroupKind kind, std::uint64_t param, CoverMode mode)
    : kind_(kind), param_(param), cover_mode_(mode) {}

GroupElement GroupModel::make_element() const {
  GroupElement e;
  e.kind_ = kind_;
  switch (kind_) {
    case GroupKind::Z:
    case GroupKind::Cyclic:
      e.ints_.assign(1, 0);
      break;
    case GroupKind::Zd:
    case GroupKind::H:
      e.ints_.assign(param_, 0);
      break;
    case GroupKind::Free:
      break;
  }
  return e;
}

std::shared_ptr<const GroupModel> GroupModel::make(GroupKind kind, std::uint64_t param,
                                                   CoverMode mode) {
  switch (kind) {
    case GroupKind::Z: return z(mode);
    case GroupKind::Zd: return zd(static_cast<unsigned>(param), mode);
    case GroupKind::Cyclic: return cyclic(param, mode);
    case GroupKind::Free: return free_group(static_cast<unsigned>(param), mode);
    case GroupKind::H: return h(static_cast<unsigned>(param), mode);
  }
  fail(ErrorCode::InvalidParams, "unknown group kind");
}

std::shared_ptr<const GroupModel> GroupModel::z(CoverMode mode) {
  auto m = std::shared_ptr<GroupModel>(new GroupModel(GroupKind::Z, 0, mode));
  GroupElement g = m->make_element();
  g.ints_[0] = 1;
  m->generators_.push_back(g);
  m->build_covers();
  return m;
}

std::shared_ptr<const GroupModel> GroupModel::zd(unsigned d, CoverMode mode) {
  if (d < 1) fail(ErrorCode::InvalidParams, "Zd needs d >= 1");
  auto m = std::shared_ptr<GroupModel>(new GroupModel(GroupKind::Zd, d, mode));
  for (unsigned i = 0; i < d; ++i) {
    GroupElement g = m->make_element();
    g.ints_[i] = 1;
    m->generators_.push_back(g);
  }
  for (unsigned i = 0; i < d; ++i) {
    for (unsigned j = i + 1; j < d; ++j) {
      auto a = static_cast<std::int32_t>(i + 1);
      auto b = static_cast<std::int32_t>(j + 1);
      m->relators_.push_back(concat({{a, b, static_cast<std::int32_t>(-a), static_cast<std::int32_t>(-b)}}));
    }
  }
  m->build_covers();
  return m;
}

std::shared_ptr<const GroupModel> GroupModel::cyclic(std::uint64_t order, CoverMode mode) {
  if (order < 1) fail(ErrorCode::InvalidParams, "cyclic needs m >= 1");
  auto m = std::shared_ptr<GroupModel>(new GroupModel(GroupKind::Cyclic, order, mode));
  GroupElement g = m->make_element();
  g.ints_[0] = order > 1 ? 1 : 0;
  m->generators_.push_back(g);
  m->relators_.push_back(repeated(1, order));
  m->build_covers();
  return m;
}

std::shared_ptr<const GroupModel> GroupModel::free_group(unsigned rank, CoverMode mode) {
  if (rank < 1) fail(ErrorCode::InvalidParams, "free needs r >= 1");
  auto m = std::shared_ptr<GroupModel>(new GroupModel(GroupKind::Free, rank, mode));
  for (unsigned i = 0; i < rank; ++i) {
    GroupElement g = m->make_element();
    g.word_.push_back(static_cast<std::int32_t>(i + 1));
    m->generators_.push_back(g);
  }
  m->build_covers();
  return m;
}

std::shared_ptr<const GroupModel> GroupModel::h(unsigned n, CoverMode mode) {
  if (n < 2) fail(ErrorCode::InvalidParams, "H needs n >= 2");
  auto m = std::shared_ptr<GroupModel>(new GroupModel(GroupKind::H, n, mode));
  GroupElement g0 = m->make_element();
  g0.rot_ = 1;
  GroupElement g1 = m->make_element();
  g1.ints_[0] = 1;
  m->generators_.push_back(g0);
  m->generators_.push_back(g1);
  m->relators_.push_back(repeated(1, n));  // g0^n
  // The conjugates g0^j g1 g0^-j are the coordinate translations; they commute.
  for (unsigned j = 0; j < n; ++j) {
    for (unsigned k = j + 1; k < n; ++k) {
      GeneratorWord cj = concat({repeated(1, j), {2}, repeated(-1, j)});
      GeneratorWord ck = concat({repeated(1, k), {2}, repeated(-1, k)});
      m->relators_.push_back(concat({cj, ck, inverse_word(cj), inverse_word(ck)}));
    }
  }
  m->build_covers();
  return m;
}

void GroupModel::build_covers() {
  covers_.clear();
  if (cover_mode_ == CoverMode::Singletons) {
    // K_{2i-1} = {g_i}, K_{2i} = {g_i^-1}, in generator order.
    for (const GroupElement& g : generators_) {
      covers_.push_back({g});
      covers_.push_back({inverse(g)});
    }
    return;
  }
  // One cover holding every generator and inverse, deduplicated.
  std::vector<GroupElement> all;
  for (const GroupElement& g : generators_) {
    all.push_back(g);
    all.push_back(inverse(g));
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  covers_.push_back(std::move(all));
}

bool GroupModel::same_model(const GroupModel& other) const {
  return kind_ == other.kind_ && param_ == other.param_ && cover_mode_ == other.cover_mode_;
}

std::size_t GroupModel::generator_count() const { return generators_.size(); }

GroupElement GroupModel::generator(std::size_t index) const {
  if (index >= generators_.size()) fail(ErrorCode::InvalidParams, "generator index out of range");
  return generators_[index];
}

GroupElement GroupModel::identity_element() const { return make_element(); }

GroupElement GroupModel::multiply(const GroupElement& a, const GroupElement& b) const {
  if (a.kind() != kind_ || b.kind() != kind_) fail(ErrorCode::ModelMismatch, "element kind mismatch");
  GroupElement out = make_element();
  switch (kind_) {
    case GroupKind::Z:
      out.ints_[0] = a.ints_[0] + b.ints_[0];
      break;
    case GroupKind::Cyclic:
      out.ints_[0] = mod_floor(a.ints_[0] + b.ints_[0], static_cast<std::int64_t>(param_));
      break;
    case GroupKind::Zd:
      for (std::size_t i = 0; i < param_; ++i) out.ints_[i] = a.ints_[i] + b.ints_[i];
      break;
    case GroupKind::Free: {
      out.word_ = a.word_;
      for (std::int32_t letter : b.word_) {
        if (!out.word_.empty() && out.word_.back() == -letter) {
          out.word_.pop_back();
        } else {
          out.word_.push_back(letter);
        }
      }
      break;
    }
    case GroupKind::H: {
      auto n = static_cast<std::int64_t>(param_);
      for (std::size_t i = 0; i < param_; ++i) {
        std::size_t src = static_cast<std::size_t>(mod_floor(static_cast<std::int64_t>(i) - a.rot_, n));
        out.ints_[i] = a.ints_[i] + b.ints_[src];
      }
      out.rot_ = mod_floor(a.rot_ + b.rot_, n);
      break;
    }
  }
  return out;
}

GroupElement GroupModel::inverse(const GroupElement& a) const {
  if (a.kind() != kind_) fail(ErrorCode::ModelMismatch, "element kind mismatch");
  GroupElement out = make_element();
  switch (kind_) {
    case GroupKind::Z:
      out.ints_[0] = -a.ints_[0];
      break;
    case GroupKind::Cyclic:
      out.ints_[0] = mod_floor(-a.ints_[0], static_cast<std::int64_t>(param_));
      break;
    case GroupKind::Zd:
      for (std::size_t i = 0; i < param_; ++i) out.ints_[i] = -a.ints_[i];
      break;
    case GroupKind::Free:
      out.word_ = inverse_word(a.word_);
      break;
    case GroupKind::H: {
      auto n = static_cast<std::int64_t>(param_);
      out.rot_ = mod_floor(-a.rot_, n);
      for (std::size_t i = 0; i < param_; ++i) {
        std::size_t src = static_cast<std::size_t>(mod_floor(static_cast<std::int64_t>(i) + a.rot_, n));
        out.ints_[i] = -a.ints_[src];
      }
      break;
    }
  }
  return out;
}

GroupElement GroupModel::power(const GroupElement& a, std::int64_t exponent) const {
  GroupElement base = exponent < 0 ? inverse(a) : a;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-(exponent + 1)) + 1
                                 : static_cast<std::uint64_t>(exponent);
  GroupElement acc = identity_element();
  while (e > 0) {
    if (e & 1) acc = multiply(acc, base);
    base = multiply(base, base);
    e >>= 1;
  }
  return acc;
}

GroupElement GroupModel::word_element(const GeneratorWord& word) const {
  GroupElement acc = identity_element();
  for (std::int32_t letter : word) {
    if (letter == 0 || static_cast<std::size_t>(std::abs(letter)) > generators_.size()) {
      fail(ErrorCode::InvalidParams, "word letter out of range");
    }
    const GroupElement& g = generators_[static_cast<std::size_t>(std::abs(letter)) - 1];
    acc = multiply(acc, letter > 0 ? g : inverse(g));
  }
  return acc;
}

unsigned GroupModel::norm(const GroupElement& g) const {
  if (g.kind() != kind_) fail(ErrorCode::ModelMismatch, "element kind mismatch");
  switch (kind_) {
    case GroupKind::Z:
      return static_cast<unsigned>(std::abs(g.ints_[0]));
    case GroupKind::Cyclic: {
      auto m = static_cast<std::int64_t>(param_);
      return static_cast<unsigned>(std::min(g.ints_[0], m - g.ints_[0]) % m);
    }
    case GroupKind::Zd: {
      std::uint64_t total = 0;
      for (auto v : g.ints_) total += static_cast<std::uint64_t>(std::abs(v));
      return static_cast<unsigned>(total);
    }
    case GroupKind::Free:
      return static_cast<unsigned>(g.word_.size());
    case GroupKind::H: {
      std::lock_guard<std::mutex> lock(bfs_mutex_);
      auto found = bfs_norms_.find(g);
      while (found == bfs_norms_.end()) {
        if (bfs_radius_ >= kEnumerationCap) {
          fail(ErrorCode::CapExceeded, "norm exceeds BFS cap " + std::to_string(kEnumerationCap));
        }
        expand_bfs(bfs_radius_ + 1);
        found = bfs_norms_.find(g);
      }
      return found->second;
    }
  }
  fail(ErrorCode::Internal, "unreachable");
}

void GroupModel::expand_bfs(unsigned radius) const {
  if (bfs_norms_.empty()) {
    bfs_norms_.emplace(identity_element(), 0);
    bfs_frontier_.push_back(identity_element());
    bfs_radius_ = 0;
  }
  while (bfs_radius_ < radius) {
    std::vector<GroupElement> next;
    for (const GroupElement& g : bfs_frontier_) {
      for (const GroupElement& gen : generators_) {
        for (const GroupElement& step : {gen, inverse(gen)}) {
          GroupElement candidate = multiply(g, step);
          if (bfs_norms_.emplace(candidate, bfs_radius_ + 1).second) {
            next.push_back(std::move(candidate));
          }
        }
      }
    }
    if (bfs_norms_.size() > kBallSizeCap) fail(ErrorCode::CapExceeded, "BFS ball exceeds size cap");
    bfs_frontier_ = std::move(next);
    ++bfs_radius_;
  }
}

std::vector<GroupElement> GroupModel::ball(unsigned radius) const {
  if (radius > kEnumerationCap) fail(ErrorCode::CapExceeded, "radius exceeds enumeration cap");
  std::vector<std::pair<unsigned, GroupElement>> staged;
  switch (kind_) {
    case GroupKind::Z: {
      for (std::int64_t v = -static_cast<std::int64_t>(radius); v <= static_cast<std::int64_t>(radius);
           ++v) {
        GroupElement g = make_element();
        g.ints_[0] = v;
        staged.emplace_back(norm(g), std::move(g));
      }
      break;
    }
    case GroupKind::Cyclic: {
      for (std::uint64_t r = 0; r < param_; ++r) {
        GroupElement g = make_element();
        g.ints_[0] = static_cast<std::int64_t>(r);
        unsigned nm = norm(g);
        if (nm <= radius) staged.emplace_back(nm, std::move(g));
      }
      break;
    }
    case GroupKind::Zd: {
      std::vector<std::int64_t> v(param_, 0);
      auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i == param_) {
          GroupElement g = make_element();
          g.ints_ = v;
          staged.emplace_back(radius - left, std::move(g));
          return;
        }
        for (std::int64_t x = -static_cast<std::int64_t>(left); x <= static_cast<std::int64_t>(left);
             ++x) {
          v[i] = x;
          self(self, i + 1, left - static_cast<unsigned>(std::abs(x)));
        }
        v[i] = 0;
      };
      rec(rec, 0, radius);
      break;
    }
    case GroupKind::Free: {
      GeneratorWord word;
      auto rec = [&](auto&& self) -> void {
        GroupElement g = make_element();
        g.word_ = word;
        staged.emplace_back(static_cast<unsigned>(word.size()), std::move(g));
        if (word.size() == radius) return;
        for (std::size_t i = 1; i <= generators_.size(); ++i) {
          for (std::int32_t letter : {static_cast<std::int32_t>(i), static_cast<std::int32_t>(-i)}) {
            if (!word.empty() && word.back() == -letter) continue;
            word.push_back(letter);
            self(self);
            word.pop_back();
          }
        }
      };
      rec(rec);
      break;
    }
    case GroupKind::H: {
      std::lock_guard<std::mutex> lock(bfs_mutex_);
      expand_bfs(radius);
      for (const auto& [g, nm] : bfs_norms_) {
        if (nm <= radius) staged.emplace_back(nm, g);
      }
      break;
    }
  }
  if (staged.size() > kBallSizeCap) fail(ErrorCode::CapExceeded, "ball exceeds size cap");
  std::sort(staged.begin(), staged.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return GroupElement::compare(a.second, b.second) < 0;
  });
  std::vector<GroupElement> out;
  out.reserve(staged.size());
  for (auto& [nm, g] : staged) out.push_back(std::move(g));
  return out;
}

const std::vector<GroupElement>& GroupModel::cover(std::size_t index) const {
  if (index == 0 || index > covers_.size()) fail(ErrorCode::DepthOutOfRange, "cover index out of range");
  return covers_[index - 1];
}

GeneratorWord GroupModel::factor(const GroupElement& g) const {
  if (g.kind() != kind_) fail(ErrorCode::ModelMismatch, "element kind mismatch");
  GeneratorWord out;
  switch (kind_) {
    case GroupKind::Z: {
      std::int64_t v = g.ints_[0];
      out = repeated(v >= 0 ? 1 : -1, static_cast<std::size_t>(std::abs(v)));
      break;
    }
    case GroupKind::Cyclic:
      out = repeated(1, static_cast<std::size_t>(g.ints_[0]));
      break;
    case GroupKind::Zd: {
      for (std::size_t i = 0; i < param_; ++i) {
        std::int64_t v = g.ints_[i];
        auto letter = static_cast<std::int32_t>(i + 1);
        GeneratorWord part = repeated(v >= 0 ? letter : -letter, static_cast<std::size_t>(std::abs(v)));
        out.insert(out.end(), part.begin(), part.end());
      }
      break;
    }
    case GroupKind::Free:
      out = g.word_;
      break;
    case GroupKind::H: {
      // (v, r) = prod_j g0^j g1^(v_j) g0^-j, then g0^r.
      for (std::size_t j = 0; j < param_; ++j) {
        std::int64_t v = g.ints_[j];
        if (v == 0) continue;
        GeneratorWord part = concat({repeated(1, j),
                                     repeated(v >= 0 ? 2 : -2, static_cast<std::size_t>(std::abs(v))),
                                     repeated(-1, j)});
        out.insert(out.end(), part.begin(), part.end());
      }
      GeneratorWord rot = repeated(1, static_cast<std::size_t>(g.rot_));
      out.insert(out.end(), rot.begin(), rot.end());
      break;
    }
  }
  return out;
}

std::string GroupModel::format(const GroupElement& g) const {
  if (g.kind() != kind_) fail(ErrorCode::ModelMismatch, "element kind mismatch");
  switch (kind_) {
    case GroupKind::Z:
    case GroupKind::Cyclic:
      return std::to_string(g.ints_[0]);
    case GroupKind::Zd: {
      std::string out = "(";
      for (std::size_t i = 0; i < g.ints_.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(g.ints_[i]);
      }
      return out + ")";
    }
    case GroupKind::Free:
    case GroupKind::H:
      return format_generator_word(kind_ == GroupKind::Free ? g.word_ : factor(g));
  }
  fail(ErrorCode::Internal, "unreachable");
}

std::string format_generator_word(const GeneratorWord& word) {
  if (word.empty()) return "e";
  std::string out;
  std::size_t i = 0;
  while (i < word.size()) {
    std::size_t run = i + 1;
    while (run < word.size() && word[run] == word[i]) ++run;
    std::size_t count = run - i;
    if (!out.empty()) out += "*";
    out += "g" + std::to_string(std::abs(word[i]) - 1);
    if (word[i] < 0) {
      out += "^-" + std::to_string(count);
    } else if (count > 1) {
      out += "^" + std::to_string(count);
    }
    i = run;
  }
  return out;
}

namespace {

bool parse_int64(std::string_view text, std::int64_t& out) {
  if (text.empty()) return false;
  bool negative = text[0] == '-';
  std::size_t i = negative ? 1 : 0;
  if (i == text.size()) return false;
  std::int64_t value = 0;
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
    value = value * 10 + (text[i] - '0');
    if (value < 0) return false;
  }
  out = negative ? -value : value;
  return true;
}

}  // namespace

GroupElement GroupModel::parse(std::string_view text) const {
  if (text.empty()) fail(ErrorCode::ParseError, "empty element");
  if (text == "e") return identity_element();
  switch (kind_) {
    case GroupKind::Z:
    case GroupKind::Cyclic: {
      std::int64_t v;
      if (!parse_int64(text, v)) fail(ErrorCode::ParseError, "bad integer element '" + std::string(text) + "'");
      GroupElement g = make_element();
      g.ints_[0] = kind_ == GroupKind::Cyclic ? mod_floor(v, static_cast<std::int64_t>(param_)) : v;
      return g;
    }
    case GroupKind::Zd: {
      if (text.front() != '(' || text.back() != ')') {
        fail(ErrorCode::ParseError, "Zd element must look like (a,b,...)");
      }
      std::string_view body = text.substr(1, text.size() - 2);
      GroupElement g = make_element();
      std::size_t index = 0;
      while (!body.empty()) {
        std::size_t comma = body.find(',');
        std::string_view piece = comma == std::string_view::npos ? body : body.substr(0, comma);
        std::int64_t v;
        if (index >= param_ || !parse_int64(piece, v)) {
          fail(ErrorCode::ParseError, "bad Zd element '" + std::string(text) + "'");
        }
        g.ints_[index++] = v;
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
      }
      if (index != param_) fail(ErrorCode::ParseError, "Zd element has wrong arity");
      return g;
    }
    case GroupKind::Free:
    case GroupKind::H: {
      GeneratorWord word;
      std::string_view rest = text;
      while (!rest.empty()) {
        std::size_t star = rest.find('*');
        std::string_view piece = star == std::string_view::npos ? rest : rest.substr(0, star);
        std::size_t caret = piece.find('^');
        std::string_view name = caret == std::string_view::npos ? piece : piece.substr(0, caret);
        std::int64_t exponent = 1;
        if (caret != std::string_view::npos && !parse_int64(piece.substr(caret + 1), exponent)) {
          fail(ErrorCode::ParseError, "bad exponent in '" + std::string(piece) + "'");
        }
        std::int64_t gen_index;
        if (name.size() < 2 || name[0] != 'g' || !parse_int64(name.substr(1), gen_index) ||
            gen_index < 0 || static_cast<std::size_t>(gen_index) >= generators_.size()) {
          fail(ErrorCode::ParseError, "unknown generator '" + std::string(name) + "'");
        }
        auto letter = static_cast<std::int32_t>(gen_index + 1);
        GeneratorWord part =
            repeated(exponent >= 0 ? letter : -letter, static_cast<std::size_t>(std::abs(exponent)));
        word.insert(word.end(), part.begin(), part.end());
        if (star == std::string_view::npos) break;
        rest.remove_prefix(star + 1);
      }
      return word_element(word);
    }
  }
  fail(ErrorCode::Internal, "unreachable");
}

std::string GroupModel::describe() const {
  switch (kind_) {
    case GroupKind::Z: return "Z";
    case GroupKind::Zd: return "Zd(" + std::to_string(param_) + ")";
    case GroupKind::Cyclic: return "cyclic(" + std::to_string(param_) + ")";
    case GroupKind::Free: return "free(" + std::to_string(param_) + ")";
    case GroupKind::H: return "H(" + std::to_string(param_) + ")";
  }
  return "unknown";
}

GammaSpec GammaSpec::whole() {
  GammaSpec g;
  g.kind_ = Kind::Whole;
  return g;
}

GammaSpec GammaSpec::lattice(std::int64_t m) {
  if (m < 1) fail(ErrorCode::InvalidParams, "lattice needs m >= 1");
  GammaSpec g;
  g.kind_ = Kind::Lattice;
  g.lattice_m_ = m;
  return g;
}

GammaSpec GammaSpec::cyclic_subgroup(GroupElement generator) {
  GammaSpec g;
  g.kind_ = Kind::CyclicSubgroup;
  g.generator_ = std::move(generator);
  return g;
}

GammaSpec GammaSpec::custom(
    std::string description, std::function<bool(const GroupModel&, const GroupElement&)> contains,
    std::function<std::vector<GroupElement>(const GroupModel&, unsigned, unsigned)> enumerate) {
  GammaSpec g;
  g.kind_ = Kind::Custom;
  g.description_ = std::move(description);
  g.contains_ = std::move(contains);
  g.enumerate_ = std::move(enumerate);
  return g;
}

bool GammaSpec::contains(const GroupModel& model, const GroupElement& g) const {
  switch (kind_) {
    case Kind::Whole:
      return true;
    case Kind::Lattice: {
      if (model.kind() != GroupKind::Z) fail(ErrorCode::InvalidParams, "lattice Gamma requires Z");
      return g.as_integer() % lattice_m_ == 0;
    }
    case Kind::CyclicSubgroup: {
      if (generator_->is_identity()) return g.is_identity();
      if (g.is_identity()) return true;
      // Scan powers; built-in models have no heavily distorted cyclic subgroups,
      // so a generous norm-bounded scan is exact here.
      unsigned bound = 4 * (model.norm(g) + 1) + 16;
      GroupElement pos = model.identity_element();
      GroupElement neg = model.identity_element();
      for (unsigned j = 1; j <= bound; ++j) {
        pos = model.multiply(pos, *generator_);
        if (pos == g) return true;
        if (pos.is_identity()) return false;  // finite subgroup fully scanned
        neg = model.multiply(neg, model.inverse(*generator_));
        if (neg == g) return true;
      }
      return false;
    }
    case Kind::Custom:
      return contains_(model, g);
  }
  fail(ErrorCode::Internal, "unreachable");
}

std::vector<GroupElement> GammaSpec::enumerate_annulus(const GroupModel& model, unsigned r1,
                                                       unsigned r2) const {
  if (r1 >= r2) {
    if (r1 == r2) return {};
    fail(ErrorCode::InvalidParams, "annulus needs r1 <= r2");
  }
  if (r2 > GroupModel::kEnumerationCap) fail(ErrorCode::CapExceeded, "annulus exceeds enumeration cap");
  std::vector<GroupElement> raw;
  switch (kind_) {
    case Kind::Whole:
      raw = model.ball(r2);
      break;
    case Kind::Lattice: {
      if (model.kind() != GroupKind::Z) fail(ErrorCode::InvalidParams, "lattice Gamma requires Z");
      for (std::int64_t v = -static_cast<std::int64_t>(r2); v <= static_cast<std::int64_t>(r2); ++v) {
        if (v % lattice_m_ != 0) continue;
        raw.push_back(model.parse(std::to_string(v)));
      }
      break;
    }
    case Kind::CyclicSubgroup: {
      GroupElement pos = model.identity_element();
      GroupElement neg = model.identity_element();
      unsigned misses = 0;
      for (unsigned j = 1; misses < 16 && j < 4 * (r2 + 4); ++j) {
        pos = model.multiply(pos, *generator_);
        neg = model.multiply(neg, model.inverse(*generator_));
        if (pos.is_identity()) break;  // finite subgroup: one period scanned
        bool any = false;
        for (const GroupElement* candidate : {&pos, &neg}) {
          unsigned nm = model.norm(*candidate);
          if (nm <= r2) {
            any = true;
            raw.push_back(*candidate);
          }
        }
        misses = any ? 0 : misses + 1;
      }
      break;
    }
    case Kind::Custom:
      raw = enumerate_(model, r1, r2);
      break;
  }
  std::vector<std::pair<unsigned, GroupElement>> staged;
  for (GroupElement& g : raw) {
    unsigned nm = model.norm(g);
    if (nm > r1 && nm <= r2) staged.emplace_back(nm, std::move(g));
  }
  std::sort(staged.begin(), staged.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return GroupElement::compare(a.second, b.second) < 0;
  });
  staged.erase(std::unique(staged.begin(), staged.end(),
                           [](const auto& a, const auto& b) { return a.second == b.second; }),
               staged.end());
  std::vector<GroupElement> out;
  out.reserve(staged.size());
  for (auto& [nm, g] : staged) out.push_back(std::move(g));
  return out;
}

std::optional<GroupElement> GammaSpec::cyclic_generator(const GroupModel& model) const {
  switch (kind_) {
    case Kind::Whole:
      if (model.kind() == GroupKind::Z) return model.generator(0);
      return std::nullopt;
    case Kind::Lattice:
      if (model.kind() != GroupKind::Z) fail(ErrorCode::InvalidParams, "lattice Gamma requires Z");
      return model.parse(std::to_string(lattice_m_));
    case Kind::CyclicSubgroup:
      return generator_;
    case Kind::Custom:
      return std::nullopt;
  }
  return std::nullopt;
}

void GammaSpec::check_unbounded(const GroupModel& model, unsigned cap) const {
  switch (kind_) {
    case Kind::Whole:
      if (model.kind() == GroupKind::Cyclic) {
        fail(ErrorCode::InvalidParams, "Gamma must be unbounded; cyclic groups are finite");
      }
      return;
    case Kind::Lattice:
      if (model.kind() != GroupKind::Z) fail(ErrorCode::InvalidParams, "lattice Gamma requires Z");
      return;
    case Kind::CyclicSubgroup: {
      GroupElement acc = model.identity_element();
      for (unsigned j = 1; j <= 4 * (cap + 4); ++j) {
        acc = model.multiply(acc, *generator_);
        if (acc.is_identity()) break;
        try {
          if (model.norm(acc) > cap) return;
        } catch (const Error& e) {
          // Escaping the BFS enumeration cap certainly escapes the cap ball.
          if (e.code() == ErrorCode::CapExceeded) return;
          throw;
        }
      }
      fail(ErrorCode::InvalidParams, "Gamma is bounded (no element of norm above " +
                                         std::to_string(cap) + " found)");
    }
    case Kind::Custom: {
      std::vector<GroupElement> tail = enumerate_(model, cap, cap + 8);
      if (tail.empty()) {
        fail(ErrorCode::InvalidParams, "Gamma is bounded (empty annulus beyond the cap)");
      }
      return;
    }
  }
}

std::string GammaSpec::describe(const GroupModel& model) const {
  switch (kind_) {
    case Kind::Whole: return "whole";
    case Kind::Lattice: return std::to_string(lattice_m_) + "Z";
    case Kind::CyclicSubgroup: return "<" + model.format(*generator_) + ">";
    case Kind::Custom: return description_;
  }
  return "unknown";
}

GammaSpec GammaSpec::parse(const GroupModel& model, std::string_view text) {
  if (text.empty()) fail(ErrorCode::ParseError, "empty Gamma spec");
  if (text == "whole" || text == "Z" || text == "G") return whole();
  if (text.front() == '<' && text.back() == '>') {
    return cyclic_subgroup(model.parse(text.substr(1, text.size() - 2)));
  }
  if (text.back() == 'Z') {
    std::int64_t m;
    std::string_view digits = text.substr(0, text.size() - 1);
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string_view::npos) {
      m = 0;
      for (char c : digits) m = m * 10 + (c - '0');
      if (m < 1) fail(ErrorCode::ParseError, "lattice modulus must be >= 1");
      return lattice(m);
    }
  }
  fail(ErrorCode::ParseError, "bad Gamma spec '" + std::string(text) +
                                  "' (expected whole, mZ, or <element>)");
}

}  // namespace leash
