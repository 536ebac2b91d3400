#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tbc/data/table.hpp"

namespace tbc::text {

inline constexpr char kRowBegin = '*';
inline constexpr char kRowEnd = '~';
inline constexpr char kFieldSeparator = '\t';
inline constexpr std::size_t kAlphabetSize = 128;
inline constexpr std::uint8_t kReplacementChar = '?';

/// A table row rendered as "*field\tfield\t...~" plus its class index.
struct SerializedInstance {
  std::string text;
  std::size_t class_index = 0;

  friend bool operator==(const SerializedInstance&, const SerializedInstance&) = default;
};

/// Character codes of a string, one per Unicode code point, each below 128.
struct OneHotSequence {
  std::vector<std::uint8_t> indices;

  std::size_t length() const noexcept { return indices.size(); }
  /// Dense 128-wide indicator vector for position t.
  std::vector<double> dense(std::size_t t) const;

  friend bool operator==(const OneHotSequence&, const OneHotSequence&) = default;
};

/// Spells a number digit by digit: the shortest round-trip fixed-point
/// rendering with 0-9 -> "zero".."nine", '.' -> "point", '-' -> "minus",
/// joined by single spaces. 12.3 -> "one two point three".
/// Throws tbc::Error for non-finite input.
std::string number_to_words(double value);

/// Renders fields left to right: numbers via number_to_words, categorical and
/// text values verbatim with embedded tabs replaced by spaces, Missing as an
/// empty field. Throws tbc::Error for an empty row.
SerializedInstance serialize_instance(std::span<const data::FeatureValue> row, std::size_t class_index);

/// Serializes every row of a table, mapping labels through `classes`.
std::vector<SerializedInstance> serialize_table(const data::Table& table, const data::ClassDictionary& classes);

/// Decodes UTF-8 code points; code points >= 128 and malformed bytes map to '?'.
OneHotSequence encode_chars(std::string_view text);

}  // namespace tbc::text
