#include "tbc/text/serializer.hpp"

#include <array>
#include <cmath>

#include "tbc/data/csv.hpp"
#include "tbc/error.hpp"

namespace tbc::text {

namespace {

constexpr std::array<std::string_view, 10> kDigitWords = {
    "zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine"};

void append_field(std::string& out, const data::FeatureValue& v) {
  switch (v.kind()) {
    case data::ValueKind::numeric:
      out += number_to_words(v.as_number());
      break;
    case data::ValueKind::categorical:
    case data::ValueKind::text:
      for (char ch : v.as_string()) out.push_back(ch == kFieldSeparator ? ' ' : ch);
      break;
    case data::ValueKind::missing:
      break;
  }
}

// Length of the UTF-8 sequence introduced by `lead`, or 0 if it cannot start one.
std::size_t utf8_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead & 0xE0) == 0xC0) return 2;
  if ((lead & 0xF0) == 0xE0) return 3;
  if ((lead & 0xF8) == 0xF0) return 4;
  return 0;
}

}  // namespace

std::vector<double> OneHotSequence::dense(std::size_t t) const {
  if (t >= indices.size()) throw Error("sequence position out of range");
  std::vector<double> out(kAlphabetSize, 0.0);
  out[indices[t]] = 1.0;
  return out;
}

std::string number_to_words(double value) {
  if (!std::isfinite(value)) throw Error("cannot spell a non-finite number");
  const auto rendered = data::format_number(value);
  std::string out;
  for (char ch : rendered) {
    if (!out.empty()) out.push_back(' ');
    if (ch >= '0' && ch <= '9') {
      out += kDigitWords[static_cast<std::size_t>(ch - '0')];
    } else if (ch == '.') {
      out += "point";
    } else if (ch == '-') {
      out += "minus";
    } else {
      throw Error(std::string("unexpected character in number rendering: ") + ch);
    }
  }
  return out;
}

SerializedInstance serialize_instance(std::span<const data::FeatureValue> row, std::size_t class_index) {
  if (row.empty()) throw Error("cannot serialize an empty row");
  SerializedInstance out;
  out.class_index = class_index;
  out.text.push_back(kRowBegin);
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out.text.push_back(kFieldSeparator);
    append_field(out.text, row[i]);
  }
  out.text.push_back(kRowEnd);
  return out;
}

std::vector<SerializedInstance> serialize_table(const data::Table& table, const data::ClassDictionary& classes) {
  std::vector<SerializedInstance> out;
  out.reserve(table.size());
  for (std::size_t r = 0; r < table.size(); ++r) {
    out.push_back(serialize_instance(table.rows()[r], classes.index_of(table.labels()[r])));
  }
  return out;
}

OneHotSequence encode_chars(std::string_view text) {
  OneHotSequence seq;
  seq.indices.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const auto lead = static_cast<unsigned char>(text[i]);
    if (lead < 0x80) {
      seq.indices.push_back(lead);
      ++i;
      continue;
    }
    // Any multi-byte code point is >= 128; a malformed byte counts as one character.
    std::size_t len = utf8_length(lead);
    bool valid = len > 1 && i + len <= text.size();
    for (std::size_t k = 1; valid && k < len; ++k) {
      valid = (static_cast<unsigned char>(text[i + k]) & 0xC0) == 0x80;
    }
    seq.indices.push_back(kReplacementChar);
    i += valid ? len : 1;
  }
  return seq;
}

}  // namespace tbc::text
