#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "leash/group.hpp"
#include "leash/transform.hpp"

namespace leash {

// A homomorphism from a group model into the automorphisms of one dyadic space,
// given by generator images. Construction checks every relator of the model and
// throws RelatorViolated when one fails, so an Action is a genuine action.
class Action {
 public:
  static Action make(GroupModelPtr model, std::vector<Transformation> generator_images);

  const GroupModel& model() const { return *model_; }
  const GroupModelPtr& model_ptr() const { return model_; }
  const DyadicSpace& space() const;
  unsigned resolution() const;

  // The image of g. Memoized; the returned reference stays valid for the
  // lifetime of this action and its copies.
  const Transformation& evaluate(const GroupElement& g) const;
  const Transformation& generator_image(std::size_t index) const;  // 0-based

  // Same model, same space, equal generator images (hence equal everywhere).
  bool same_pointwise(const Action& other) const;

 private:
  struct State;
  Action(GroupModelPtr model, std::shared_ptr<State> state)
      : model_(std::move(model)), state_(std::move(state)) {}

  GroupModelPtr model_;
  std::shared_ptr<State> state_;
};

// The action g -> u^(-1) T(g) u on the same space.
Action conjugate_action(const Action& action, const Transformation& u);

// The coordinatewise product on the block-split space (first factor = high bits).
// Factors must share one group model.
Action product_action(const Action& a, const Action& b);
Action product_action_many(std::span<const Action> factors);

}  // namespace leash
