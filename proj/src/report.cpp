#include "leash/report.hpp"

#include <limits>

#include "leash/error.hpp"

namespace leash {

nlohmann::json value_to_json(const DyadicRational& value) {
  static const BigInt kMin = std::numeric_limits<std::int64_t>::min();
  static const BigInt kMax = std::numeric_limits<std::int64_t>::max();
  nlohmann::json j;
  const BigInt& num = value.numerator();
  if (num >= kMin && num <= kMax) {
    j["num"] = num.convert_to<std::int64_t>();
  } else {
    j["num"] = num.str();
  }
  j["log2_den"] = value.exponent();
  j["decimal"] = value.to_decimal_string();
  return j;
}

DyadicRational value_from_json(const nlohmann::json& j) {
  try {
    BigInt num;
    const nlohmann::json& n = j.at("num");
    if (n.is_string()) {
      num = BigInt(n.get<std::string>());
    } else if (n.is_number_integer()) {
      num = n.get<std::int64_t>();
    } else {
      fail(ErrorCode::ParseError, "\"num\" must be an integer or a decimal string");
    }
    DyadicRational value = DyadicRational::from_parts(num, j.at("log2_den").get<unsigned>());
    if (j.contains("decimal") && j.at("decimal").get<std::string>() != value.to_decimal_string()) {
      fail(ErrorCode::ParseError, "\"decimal\" does not match num/2^log2_den");
    }
    return value;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

bool is_value_object(const nlohmann::json& j) {
  return j.is_object() && j.contains("num") && j.contains("log2_den");
}

std::string render_json(const nlohmann::json& report) { return report.dump(2) + "\n"; }

namespace {

bool is_scalar(const nlohmann::json& j) { return !j.is_object() && !j.is_array(); }

bool all_scalars(const nlohmann::json& array) {
  for (const auto& el : array) {
    if (!is_scalar(el)) return false;
  }
  return true;
}

std::string scalar_text(const nlohmann::json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

std::string value_text(const nlohmann::json& j) {
  DyadicRational value = value_from_json(j);
  return value.to_fraction_string() + " (" + value.to_decimal_string() + ")";
}

void render_node(const nlohmann::json& node, const std::string& indent, std::string& out);

void render_entry(const std::string& key, const nlohmann::json& value, const std::string& indent,
                  std::string& out) {
  if (is_value_object(value)) {
    out += indent + key + ": " + value_text(value) + "\n";
  } else if (is_scalar(value)) {
    out += indent + key + ": " + scalar_text(value) + "\n";
  } else if (value.is_array() && all_scalars(value)) {
    std::string line;
    for (const auto& el : value) {
      if (!line.empty()) line += ", ";
      line += scalar_text(el);
    }
    out += indent + key + ": [" + line + "]\n";
  } else {
    out += indent + key + ":\n";
    render_node(value, indent + "  ", out);
  }
}

void render_node(const nlohmann::json& node, const std::string& indent, std::string& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) render_entry(key, value, indent, out);
  } else if (node.is_array()) {
    for (const auto& el : node) {
      if (is_value_object(el)) {
        out += indent + "- " + value_text(el) + "\n";
      } else if (is_scalar(el)) {
        out += indent + "- " + scalar_text(el) + "\n";
      } else {
        out += indent + "-\n";
        render_node(el, indent + "  ", out);
      }
    }
  } else {
    out += indent + scalar_text(node) + "\n";
  }
}

}  // namespace

std::string render_text(const nlohmann::json& report) {
  std::string out;
  render_node(report, "", out);
  return out;
}

}  // namespace leash
