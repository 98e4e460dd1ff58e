#include "csm/cache.hpp"
#include "csm/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace csm;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("csm_test_" + name + "_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST(Json, Expansion) {
  SchubertExpansion e(3, 6);
  e.add(Partition{1}, 3);
  e.add(Partition{2, 1}, 1);
  e.add(Partition{}, 1);
  e.add(Partition{1, 1}, 2);
  e.add(Partition{2}, 2);
  EXPECT_EQ(to_json(e).dump(), R"({"2,1":1,"2":2,"1,1":2,"1":3,"0":1})");
  EXPECT_EQ(expansion_from_json(to_json(e), 3, 6), e);
}

TEST(Json, BigIntegers) {
  Integer big = Integer(1) << 80;
  EXPECT_TRUE(to_json(big).is_string());
  EXPECT_EQ(integer_from_json(to_json(big)), big);
  EXPECT_EQ(integer_from_json(to_json(Integer(-7))), -7);
  EXPECT_THROW(integer_from_json(Json(1.5)), DomainError);
}

TEST(Json, PartitionsAndPeakForms) {
  Partition p{5, 5, 2, 1};
  EXPECT_EQ(to_json(p).dump(), "[5,5,2,1]");
  EXPECT_EQ(partition_from_json(to_json(p)), p);
  PeakForm pf = to_peak_form(p, 4);
  EXPECT_EQ(to_json(pf).dump(), R"({"a":[1,1,2],"b":[1,1,3]})");
  EXPECT_EQ(peak_form_from_json(to_json(pf)), pf);
  EXPECT_THROW(partition_from_json(Json("2,1")), DomainError);
}

TEST(Json, TableRoundTrip) {
  CsmEngine engine(2, 4);
  for (auto kind : {TableKind::Cell, TableKind::Variety, TableKind::Mather, TableKind::EulerObstruction, TableKind::DMatrix}) {
    CsmTable t = engine.table(kind);
    CsmTable back = table_from_json(Json::parse(to_json(t).dump()), 2, 4, kind);
    EXPECT_EQ(back.cells, t.cells);
    EXPECT_EQ(back.rows, t.rows);
    EXPECT_EQ(parse_table_kind(table_kind_name(kind)), kind);
  }
}

TEST(Json, Plan) {
  auto plan = build_plan(Partition{2, 1}, PeakOrder::identity(2), 2, 4);
  Json j = to_json(plan);
  EXPECT_EQ(j["steps"][1]["left"].dump(), R"({"factor":1})");
  EXPECT_EQ(j["image"].dump(), R"({"factor":2})");
  EXPECT_EQ(j["dimension"], 3);
}

TEST(Csv, Row) {
  SchubertExpansion e(2, 4);
  e.add(Partition{1}, 1);
  e.add(Partition{}, 1);
  std::string csv = to_csv(Partition{1}, e);
  EXPECT_EQ(csv, "alpha,\"2,2\",\"2,1\",2,\"1,1\",1,0\n1,0,0,0,0,1,1\n");
}

TEST(Csv, TableShape) {
  CsmEngine engine(3, 6);
  std::string csv = to_csv(engine.table(TableKind::Cell));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 21);
  std::string last = "0";
  for (int i = 0; i < 19; ++i) last += ",0";
  last += ",1\n";
  EXPECT_EQ(csv.substr(csv.size() - last.size()), last);
}

TEST(Pretty, Expansion) {
  SchubertExpansion e(2, 4);
  e.add(Partition{1}, 2);
  e.add(Partition{}, 1);
  EXPECT_EQ(to_pretty(e), "[1]  2\n[0]  1\n");
}

TEST(Cache, StoreAndLoad) {
  TableCache cache(scratch_dir("store"));
  Json key = TableCache::make_key(3, 6, "cell", "small", "localization", "");
  EXPECT_FALSE(cache.load(key));
  cache.store(key, R"({"0":{"0":1}})");
  auto hit = cache.load(key);
  ASSERT_TRUE(hit);
  EXPECT_EQ(*hit, R"({"0":{"0":1}})");
  Json other = TableCache::make_key(3, 6, "mather", "small", "localization", "");
  EXPECT_NE(cache.path_for(key), cache.path_for(other));
  EXPECT_FALSE(cache.load(other));
  // no temporary files left behind
  int files = 0;
  for ([[maybe_unused]] const auto& f : std::filesystem::directory_iterator(cache.dir())) ++files;
  EXPECT_EQ(files, 1);
  std::filesystem::remove_all(cache.dir());
}

TEST(Cache, StaleVersionIsIgnored) {
  TableCache cache(scratch_dir("stale"));
  Json key = TableCache::make_key(2, 4, "cell", "small", "localization", "");
  cache.store(key, "{}");
  Json entry = Json::parse(std::ifstream(cache.path_for(key)));
  entry["version"] = "csm-engine/0";
  std::ofstream(cache.path_for(key)) << entry.dump();
  EXPECT_FALSE(cache.load(key));
  std::ofstream(cache.path_for(key)) << "not json";
  EXPECT_FALSE(cache.load(key));
  std::filesystem::remove_all(cache.dir());
}
