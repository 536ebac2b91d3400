#pragma once

#include <string>
#include <string_view>
#include <variant>

namespace tbc::data {

enum class ValueKind { numeric, categorical, text, missing };

/// One cell of a table. Numeric payloads are always finite; anything that is
/// not becomes Missing at construction.
class FeatureValue {
 public:
  FeatureValue() = default;

  static FeatureValue numeric(double value);
  static FeatureValue categorical(std::string value);
  static FeatureValue text(std::string value);
  static FeatureValue missing() { return {}; }

  ValueKind kind() const noexcept;
  bool is_missing() const noexcept { return kind() == ValueKind::missing; }

  /// Throws tbc::Error unless kind() == numeric.
  double as_number() const;
  /// Throws tbc::Error unless kind() is categorical or text.
  const std::string& as_string() const;

  friend bool operator==(const FeatureValue&, const FeatureValue&) = default;

 private:
  struct Categorical {
    std::string value;
    friend bool operator==(const Categorical&, const Categorical&) = default;
  };
  struct Text {
    std::string value;
    friend bool operator==(const Text&, const Text&) = default;
  };

  std::variant<std::monostate, double, Categorical, Text> payload_;
};

std::string_view to_string(ValueKind kind) noexcept;

}  // namespace tbc::data
