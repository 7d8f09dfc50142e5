#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "trinomial/exact_int.hpp"
#include "trinomial/ternary.hpp"

namespace trinomial {

/// Raised for malformed spec documents; the message names the offending key.
class spec_format_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline ExactInt json_integer(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) throw spec_format_error(std::string("spec: missing key '") + key + "'");
  const auto& v = doc.at(key);
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? ExactInt(v.get<std::uint64_t>()) : ExactInt(v.get<std::int64_t>());
  }
  if (v.is_string()) {
    try {
      return parse_exact_int(v.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw spec_format_error(std::string("spec: key '") + key + "' is not a decimal integer string");
    }
  }
  if (v.is_number_float()) {
    throw spec_format_error(std::string("spec: key '") + key +
                            "' is not an integer (write large values as decimal strings)");
  }
  throw spec_format_error(std::string("spec: key '") + key + "' must be an integer or decimal string");
}

}  // namespace detail

/// Reads {"alpha", "beta", "gamma", "a0", "a1", "a2"}; each value is a JSON
/// integer or a decimal string for arbitrary precision.
inline TernarySpec ternary_spec_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw spec_format_error("spec: document must be a JSON object");
  try {
    return TernarySpec(detail::json_integer(doc, "alpha"), detail::json_integer(doc, "beta"),
                       detail::json_integer(doc, "gamma"), detail::json_integer(doc, "a0"),
                       detail::json_integer(doc, "a1"), detail::json_integer(doc, "a2"));
  } catch (const std::invalid_argument& e) {
    throw spec_format_error(e.what());
  }
}

inline TernarySpec parse_ternary_spec(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw spec_format_error(std::string("spec: invalid JSON: ") + e.what());
  }
  return ternary_spec_from_json(doc);
}

inline TernarySpec load_ternary_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw spec_format_error("spec: cannot open '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_ternary_spec(text);
}

/// Values are written as decimal strings so that no reader loses precision.
inline nlohmann::json to_json(const TernarySpec& spec) {
  return {{"alpha", spec.alpha().str()}, {"beta", spec.beta().str()}, {"gamma", spec.gamma().str()},
          {"a0", spec.a0().str()},       {"a1", spec.a1().str()},     {"a2", spec.a2().str()}};
}

}  // namespace trinomial
