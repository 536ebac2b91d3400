#include "tbc/data/value.hpp"

#include <cmath>

#include "tbc/error.hpp"

namespace tbc::data {

FeatureValue FeatureValue::numeric(double value) {
  FeatureValue v;
  if (std::isfinite(value)) v.payload_ = value;
  return v;
}

FeatureValue FeatureValue::categorical(std::string value) {
  FeatureValue v;
  v.payload_ = Categorical{std::move(value)};
  return v;
}

FeatureValue FeatureValue::text(std::string value) {
  FeatureValue v;
  v.payload_ = Text{std::move(value)};
  return v;
}

ValueKind FeatureValue::kind() const noexcept {
  switch (payload_.index()) {
    case 1:
      return ValueKind::numeric;
    case 2:
      return ValueKind::categorical;
    case 3:
      return ValueKind::text;
    default:
      return ValueKind::missing;
  }
}

double FeatureValue::as_number() const {
  if (const auto* d = std::get_if<double>(&payload_)) return *d;
  throw Error("feature value is not numeric");
}

const std::string& FeatureValue::as_string() const {
  if (const auto* c = std::get_if<Categorical>(&payload_)) return c->value;
  if (const auto* t = std::get_if<Text>(&payload_)) return t->value;
  throw Error("feature value is not categorical or text");
}

std::string_view to_string(ValueKind kind) noexcept {
  switch (kind) {
    case ValueKind::numeric:
      return "numeric";
    case ValueKind::categorical:
      return "categorical";
    case ValueKind::text:
      return "text";
    case ValueKind::missing:
      break;
  }
  return "missing";
}

}  // namespace tbc::data
