#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "tbc/data/one_hot.hpp"
#include "tbc/data/table.hpp"
#include "tbc/data/value.hpp"
#include "tbc/error.hpp"

using namespace tbc::data;

namespace {

Schema mixed_schema() {
  return Schema({{"x", ColumnKind::numeric}, {"c", ColumnKind::categorical}, {"y", ColumnKind::label}});
}

}  // namespace

TEST(FeatureValue, NonFiniteNumbersBecomeMissing) {
  EXPECT_TRUE(FeatureValue::numeric(std::numeric_limits<double>::quiet_NaN()).is_missing());
  EXPECT_TRUE(FeatureValue::numeric(std::numeric_limits<double>::infinity()).is_missing());
  EXPECT_EQ(FeatureValue::numeric(1.5).as_number(), 1.5);
}

TEST(FeatureValue, KindsAndAccessors) {
  EXPECT_EQ(FeatureValue::categorical("AC3").kind(), ValueKind::categorical);
  EXPECT_EQ(FeatureValue::text("").as_string(), "");
  EXPECT_THROW((void)FeatureValue::text("a").as_number(), tbc::Error);
  EXPECT_THROW((void)FeatureValue::numeric(1).as_string(), tbc::Error);
  // Same payload, different kind.
  EXPECT_NE(FeatureValue::text("a"), FeatureValue::categorical("a"));
}

TEST(Schema, RequiresExactlyOneLabelAndUniqueNames) {
  EXPECT_THROW(Schema({{"a", ColumnKind::numeric}}), tbc::Error);
  EXPECT_THROW(Schema({{"a", ColumnKind::label}, {"b", ColumnKind::label}}), tbc::Error);
  EXPECT_THROW(Schema({{"a", ColumnKind::numeric}, {"a", ColumnKind::label}}), tbc::Error);

  const Schema s({{"y", ColumnKind::label}, {"a", ColumnKind::text}});
  EXPECT_EQ(s.label_position(), 0u);
  EXPECT_EQ(s.label_name(), "y");
  EXPECT_EQ(s.feature_count(), 1u);
  EXPECT_EQ(s.feature_columns().front().name, "a");
}

TEST(Table, ValidatesArityKindsAndLabels) {
  const auto schema = mixed_schema();
  EXPECT_NO_THROW(Table(schema, {{FeatureValue::numeric(1), FeatureValue::categorical("u")}}, {"0"}));
  EXPECT_NO_THROW(Table(schema, {{FeatureValue::missing(), FeatureValue::missing()}}, {"0"}));
  EXPECT_THROW(Table(schema, {{FeatureValue::numeric(1)}}, {"0"}), tbc::Error);
  EXPECT_THROW(Table(schema, {{FeatureValue::text("1"), FeatureValue::categorical("u")}}, {"0"}), tbc::Error);
  EXPECT_THROW(Table(schema, {{FeatureValue::numeric(1), FeatureValue::categorical("u")}}, {}), tbc::Error);
}

TEST(Table, SubsetKeepsRequestedOrder) {
  const Table t(mixed_schema(),
                {{FeatureValue::numeric(0), FeatureValue::categorical("a")},
                 {FeatureValue::numeric(1), FeatureValue::categorical("b")},
                 {FeatureValue::numeric(2), FeatureValue::categorical("c")}},
                {"x", "y", "z"});
  const std::vector<std::size_t> idx{2, 0};
  const auto s = t.subset(idx);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.labels()[0], "z");
  EXPECT_EQ(s.rows()[1][0].as_number(), 0.0);
}

TEST(ClassDictionary, LexicographicAndGapFree) {
  const std::vector<std::string> labels{"b", "a", "c", "a", ">50K", "<=50K"};
  const ClassDictionary d(labels);
  ASSERT_EQ(d.size(), 5u);
  EXPECT_EQ(d.names(), (std::vector<std::string>{"<=50K", ">50K", "a", "b", "c"}));
  for (std::size_t i = 0; i < d.size(); ++i) EXPECT_EQ(d.index_of(d.name(i)), i);
  EXPECT_THROW((void)d.index_of("zzz"), tbc::Error);
  EXPECT_FALSE(d.contains("zzz"));
}

TEST(OneHot, CategoricalExpandsWithUnseenColumn) {
  const Schema schema({{"c", ColumnKind::categorical}, {"y", ColumnKind::label}});
  const Table train(schema,
                    {{FeatureValue::categorical("a")}, {FeatureValue::categorical("b")},
                     {FeatureValue::categorical("a")}},
                    {"0", "1", "0"});
  const auto enc = OneHotEncoder::fit(train);
  EXPECT_EQ(enc.width(), 3u);
  const auto m = enc.transform(train);
  EXPECT_EQ(m(0, 0), 1.0);
  EXPECT_EQ(m(0, 1), 0.0);
  EXPECT_EQ(m(0, 2), 0.0);

  const Table test(schema, {{FeatureValue::categorical("zzz")}, {FeatureValue::missing()}}, {"0", "0"});
  const auto t = enc.transform(test);
  for (std::size_t r = 0; r < 2; ++r) {
    EXPECT_EQ(t(r, 0), 0.0);
    EXPECT_EQ(t(r, 1), 0.0);
    EXPECT_EQ(t(r, 2), 1.0);
  }
  EXPECT_EQ(enc.column_names(), (std::vector<std::string>{"c=a", "c=b", "c=<unseen>"}));
}

TEST(OneHot, NumericMissingTakesTrainingMean) {
  const Schema schema({{"x", ColumnKind::numeric}, {"y", ColumnKind::label}});
  const Table t(schema, {{FeatureValue::numeric(1.0)}, {FeatureValue::missing()}, {FeatureValue::numeric(3.0)}},
                {"0", "0", "1"});
  const auto e = one_hot_encode(t);
  ASSERT_EQ(e.matrix.cols(), 1u);
  EXPECT_EQ(e.matrix(0, 0), 1.0);
  EXPECT_EQ(e.matrix(1, 0), 2.0);
  EXPECT_EQ(e.matrix(2, 0), 3.0);
}

TEST(OneHot, WidthMatchesFormula) {
  const Schema schema({{"x", ColumnKind::numeric},
                       {"c", ColumnKind::categorical},
                       {"t", ColumnKind::text},
                       {"y", ColumnKind::label}});
  std::vector<Row> rows;
  std::vector<std::string> labels;
  for (int i = 0; i < 20; ++i) {
    rows.push_back({FeatureValue::numeric(i), FeatureValue::categorical(std::to_string(i % 3)),
                    FeatureValue::text(std::to_string(i % 7))});
    labels.push_back(std::to_string(i % 2));
  }
  const Table t(schema, rows, labels);
  // 1 numeric + (3 + 1) + (7 + 1)
  EXPECT_EQ(OneHotEncoder::fit(t).width(), 13u);
  // Deterministic.
  EXPECT_EQ(one_hot_encode(t).matrix, one_hot_encode(t).matrix);
}

TEST(OneHot, RejectsEmptyTable) {
  const Table t(mixed_schema(), {}, {});
  EXPECT_THROW(OneHotEncoder::fit(t), tbc::Error);
}
