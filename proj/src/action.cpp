#include "leash/action.hpp"

#include <cstdlib>
#include <string>
#include <utility>

namespace leash {

struct Action::State {
  std::vector<Transformation> images;
  mutable std::mutex mutex;
  mutable std::map<GroupElement, Transformation> cache;
};

namespace {

// Composes generator images along a word, collapsing runs into permutation powers.
Transformation word_image(const std::vector<Transformation>& images, const GeneratorWord& word) {
  Transformation out = Transformation::identity(images.front().space());
  std::size_t i = 0;
  while (i < word.size()) {
    std::size_t run = i + 1;
    while (run < word.size() && word[run] == word[i]) ++run;
    auto letter = static_cast<std::size_t>(std::abs(word[i])) - 1;
    auto count = static_cast<std::int64_t>(run - i);
    out = compose(out, power(images[letter], word[i] > 0 ? count : -count));
    i = run;
  }
  return out;
}

}  // namespace

Action Action::make(GroupModelPtr model, std::vector<Transformation> generator_images) {
  if (!model) fail(ErrorCode::InvalidParams, "action needs a group model");
  if (generator_images.size() != model->generator_count()) {
    fail(ErrorCode::InvalidParams,
         model->describe() + " needs " + std::to_string(model->generator_count()) +
             " generator images, got " + std::to_string(generator_images.size()));
  }
  const DyadicSpace& space = generator_images.front().space();
  for (const Transformation& t : generator_images) {
    if (!(t.space() == space)) fail(ErrorCode::SpaceMismatch, "generator images on different spaces");
  }
  Transformation id = Transformation::identity(space);
  for (const GeneratorWord& relator : model->relator_words()) {
    if (word_image(generator_images, relator) != id) {
      fail(ErrorCode::RelatorViolated,
           "relator " + format_generator_word(relator) + " of " + model->describe() +
               " is not satisfied by the generator images");
    }
  }
  auto state = std::make_shared<State>();
  state->images = std::move(generator_images);
  return Action(std::move(model), std::move(state));
}

const DyadicSpace& Action::space() const { return state_->images.front().space(); }

unsigned Action::resolution() const { return space().resolution(); }

const Transformation& Action::evaluate(const GroupElement& g) const {
  std::lock_guard<std::mutex> lock(state_->mutex);
  auto it = state_->cache.find(g);
  if (it != state_->cache.end()) return it->second;
  Transformation t = word_image(state_->images, model_->factor(g));
  return state_->cache.emplace(g, std::move(t)).first->second;
}

const Transformation& Action::generator_image(std::size_t index) const {
  if (index >= state_->images.size()) fail(ErrorCode::InvalidParams, "generator index out of range");
  return state_->images[index];
}

bool Action::same_pointwise(const Action& other) const {
  if (!model_->same_model(*other.model_)) return false;
  if (!(space() == other.space())) return false;
  return state_->images == other.state_->images;
}

Action conjugate_action(const Action& action, const Transformation& u) {
  if (!(u.space() == action.space())) fail(ErrorCode::SpaceMismatch, "conjugator on a different space");
  std::vector<Transformation> images;
  images.reserve(action.model().generator_count());
  for (std::size_t i = 0; i < action.model().generator_count(); ++i) {
    images.push_back(conjugate(action.generator_image(i), u));
  }
  return Action::make(action.model_ptr(), std::move(images));
}

Action product_action(const Action& a, const Action& b) {
  const Action factors[] = {a, b};
  return product_action_many(factors);
}

Action product_action_many(std::span<const Action> factors) {
  if (factors.empty()) fail(ErrorCode::InvalidParams, "product of zero actions");
  const GroupModel& model = factors.front().model();
  for (const Action& f : factors) {
    if (!f.model().same_model(model)) fail(ErrorCode::ModelMismatch, "product factors over different groups");
  }
  std::vector<Transformation> images;
  for (std::size_t i = 0; i < model.generator_count(); ++i) {
    std::vector<Transformation> coords;
    coords.reserve(factors.size());
    for (const Action& f : factors) coords.push_back(f.generator_image(i));
    images.push_back(lift_product_many(coords));
  }
  return Action::make(factors.front().model_ptr(), std::move(images));
}

}  // namespace leash
