#include "leash/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace leash {

namespace {

GroupModelPtr parse_group(const nlohmann::json& j, CoverMode mode) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "Z") return GroupModel::z(mode);
  if (kind == "Zd") return GroupModel::zd(j.at("d").get<unsigned>(), mode);
  if (kind == "cyclic") return GroupModel::cyclic(j.at("m").get<std::uint64_t>(), mode);
  if (kind == "free") return GroupModel::free_group(j.at("r").get<unsigned>(), mode);
  if (kind == "H") return GroupModel::h(j.at("n").get<unsigned>(), mode);
  fail(ErrorCode::ParseError, "unknown group kind \"" + kind + "\"");
}

Action parse_action_json(const nlohmann::json& doc, CoverMode mode) {
  GroupModelPtr model = parse_group(doc.at("group"), mode);
  DyadicSpace space = make_space(doc.at("resolution").get<unsigned>());
  const nlohmann::json& gens = doc.at("generators");
  if (!gens.is_object()) fail(ErrorCode::ParseError, "\"generators\" must be an object");
  if (gens.size() != model->generator_count()) {
    fail(ErrorCode::ParseError, model->describe() + " needs exactly " +
                                    std::to_string(model->generator_count()) + " generators");
  }
  std::vector<Transformation> images;
  images.reserve(model->generator_count());
  for (std::size_t i = 0; i < model->generator_count(); ++i) {
    std::string key = "g" + std::to_string(i);
    if (!gens.contains(key)) fail(ErrorCode::ParseError, "missing generator \"" + key + "\"");
    auto forward = gens.at(key).get<std::vector<std::uint32_t>>();
    images.push_back(Transformation::from_forward(space, std::move(forward)));
  }
  return Action::make(std::move(model), std::move(images));
}

}  // namespace

Action parse_action_text(const std::string& text, CoverMode mode) {
  try {
    nlohmann::json doc = nlohmann::json::parse(text);
    return parse_action_json(doc, mode);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::RelatorViolated) throw;
    if (e.code() == ErrorCode::ParseError) throw;
    fail(ErrorCode::ParseError, e.what());
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

Action load_action(const std::string& path, CoverMode mode) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot open \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) fail(ErrorCode::IoError, "cannot read \"" + path + "\"");
  try {
    return parse_action_text(buffer.str(), mode);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) {
      fail(ErrorCode::ParseError, path + ": " + e.what());
    }
    throw;
  }
}

}  // namespace leash
