#include <gtest/gtest.h>

#include "almab/record.hpp"

using namespace almab;

TEST(Record, FieldsFromModel)
{
  auto r = make_record(ComplexModel::make(Partition({2}), 3));
  EXPECT_EQ(r.n, 2);
  EXPECT_EQ(r.epsilon, 1);
  EXPECT_EQ(r.m, Partition({3, 2}));
  EXPECT_EQ(r.step, 3);
  EXPECT_EQ(r.source, TableSource::closed_form);
  EXPECT_TRUE(r.checks.frolicher);
  EXPECT_EQ(r.checks.symmetry, std::optional<bool>(true));
  EXPECT_TRUE(r.checks.nijenhuis);
}

TEST(Record, JsonRoundTrip)
{
  for (int n = 1; n <= 4; ++n)
    for (const auto& model : enumerate_models(n))
      for (bool oracle : {false, true}) {
        auto r = make_record(model, oracle);
        auto text = to_json(r).dump();
        auto back = record_from_json(nlohmann::json::parse(text));
        EXPECT_EQ(back, r) << model.to_string();
        EXPECT_EQ(to_json(back).dump(), text);
      }
}

TEST(Record, NullSymmetryRoundTrips)
{
  auto r = make_record(ComplexModel::make(Partition({1}), 2));
  r.checks.symmetry.reset();
  auto j = to_json(r);
  EXPECT_TRUE(j["checks"]["symmetry"].is_null());
  EXPECT_EQ(record_from_json(nlohmann::json::parse(j.dump())), r);
}

TEST(Record, JsonKeysInOrder)
{
  auto j = to_json(make_record(ComplexModel::make(Partition({1}), 2)));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it)
    keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"n", "q", "j", "epsilon", "m", "step", "betti", "hodge", "source",
                                            "equations", "checks"}));
  EXPECT_EQ(j["equations"][1]["gen"], "beta^0_1");
  EXPECT_EQ(j["equations"][1]["d"][0]["factors"], nlohmann::json({"alpha", "bar(alpha)"}));
}

TEST(Record, MalformedJsonRejected)
{
  auto good = nlohmann::json::parse(to_json(make_record(ComplexModel::make(Partition({1}), 2))).dump());
  auto missing = good;
  missing.erase("betti");
  EXPECT_THROW(record_from_json(missing), std::invalid_argument);
  auto bad_gen = good;
  bad_gen["equations"][1]["gen"] = "gamma";
  EXPECT_THROW(record_from_json(bad_gen), std::invalid_argument);
  auto bad_factor = good;
  bad_factor["equations"][1]["d"][0]["factors"][1] = "bar(beta^3_1)";
  EXPECT_THROW(record_from_json(bad_factor), std::invalid_argument);
  auto bad_source = good;
  bad_source["source"] = "guess";
  EXPECT_THROW(record_from_json(bad_source), std::invalid_argument);
  auto wrong_type = good;
  wrong_type["n"] = "two";
  EXPECT_THROW(record_from_json(wrong_type), std::invalid_argument);
}

TEST(Salamon, Examples)
{
  EXPECT_EQ(to_salamon(structure_equations(ComplexModel::make(Partition({1}), 2))), "(0, 1^1b)");
  EXPECT_EQ(to_salamon(structure_equations(ComplexModel::make(Partition({2}), 1))), "(0, 0, 1^2 + 1b^2)");
  EXPECT_EQ(to_salamon(structure_equations(ComplexModel::make(Partition({1, 1}), 2))), "(0, 1^1b, 0)");
}

TEST(Text, StableLayout)
{
  auto text = to_text(make_record(ComplexModel::make(Partition({1}), 2)));
  EXPECT_EQ(text,
            "model    q=[1] j=2 epsilon=1 dim=4\n"
            "jordan   [2,1]\n"
            "step     2\n"
            "source   closed-form\n"
            "betti    1 3 4 3 1\n"
            "hodge    rows p = 0..2, columns q = 0..2\n"
            "  p=0    1 2 1\n"
            "  p=1    1 2 1\n"
            "  p=2    1 2 1\n"
            "checks   frolicher=pass symmetry=pass nijenhuis=pass\n");
}
