#include <gtest/gtest.h>

#include <set>

#include "plie/catalog.hpp"
#include "plie/errors.hpp"

using namespace plie;

TEST(Catalog, NamesAreUniqueAndFindable) {
  std::set<std::string> names;
  for (const auto& e : catalog()) {
    EXPECT_TRUE(names.insert(e.name).second) << e.name;
    EXPECT_EQ(&find_entry(e.name), &e);
  }
  EXPECT_GE(names.size(), 12u);
  EXPECT_THROW(find_entry("no-such-entry"), UnknownNameError);
}

TEST(Catalog, EveryEntryMatchesItsExpectation) {
  for (const auto& e : catalog()) {
    const CatalogVerification v = verify_against(e);
    EXPECT_TRUE(v.passed()) << e.name << ": " << (v.mismatches.empty() ? "" : v.mismatches.front());
    EXPECT_TRUE(v.report.valid()) << e.name;
  }
}

TEST(Catalog, EntriesUseMilnorPositiveDefiniteData) {
  for (const auto& e : catalog()) {
    EXPECT_TRUE(is_positive_definite(e.triple.metric.gram())) << e.name;
    EXPECT_TRUE(is_lie_algebra(e.triple.algebra()).holds) << e.name;
  }
}

TEST(Catalog, MislabelledExpectationIsReported) {
  CatalogEntry e = find_entry("dim3-rho3-a1");
  e.expected.volume = VolumeVerdict::Satisfied;
  EXPECT_FALSE(verify_against(e).passed());
}

TEST(Catalog, ScaleInvariance) {
  for (const auto& e : catalog()) {
    const Triple scaled(e.triple.algebra(), e.triple.cocycle().scaled(3), e.triple.metric.scaled(2));
    const HawkinsReport a = full_report(e.triple), b = full_report(scaled);
    EXPECT_EQ(a.is_flat, b.is_flat) << e.name;
    EXPECT_EQ(a.is_metaflat, b.is_metaflat) << e.name;
    EXPECT_EQ(a.volume.verdict, b.volume.verdict) << e.name;
  }
}

TEST(Families, Rho3fIsHawkinsEverywhere) {
  const Family& f = find_family("dim3-rho3f");
  std::vector<Vector> grid;
  for (int c : {-2, -1, 1, 2}) grid.push_back({c, 1});
  const FamilyReport r = verify_family(f, grid);
  for (const auto& row : r.rows) {
    EXPECT_TRUE(row.valid);
    EXPECT_TRUE(row.hawkins);
  }
}

TEST(Families, Rho3WithNonzeroAViolatesVolume) {
  const Family& f = find_family("dim3-rho3");
  const FamilyReport r = verify_family(f, {{1, 0, 1}, {2, 0, 1}, {1, 0, 2}});
  for (const auto& row : r.rows) {
    EXPECT_TRUE(row.flat);
    EXPECT_TRUE(row.metaflat);
    EXPECT_EQ(row.volume, VolumeVerdict::Violated);
    EXPECT_FALSE(row.hawkins);
  }
}

TEST(Families, Rho4WithoutDIsFlatMetaflatAndValid) {
  const Family& f = find_family("dim4-rho4");
  const FamilyReport r = verify_family(f, {{1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}});
  for (const auto& row : r.rows) {
    EXPECT_TRUE(row.valid);
    EXPECT_TRUE(row.flat);
    EXPECT_TRUE(row.metaflat);
    EXPECT_EQ(row.volume, VolumeVerdict::NecessaryOnlyPassed);
  }
}

TEST(Families, DefaultGridShape) {
  EXPECT_EQ(default_grid(1).size(), 7u);
  EXPECT_EQ(default_grid(2).size(), 37u);
  EXPECT_EQ(default_grid(5).size(), 243u);
  EXPECT_TRUE(is_zero(default_grid(5).front()));
}

TEST(Families, WrongParameterCountThrows) {
  EXPECT_THROW(verify_family(find_family("dim3-rho3"), {{1}}), DimensionError);
  EXPECT_THROW(find_family("nope"), UnknownNameError);
}

TEST(Families, SummaryAndTableAreConsistent) {
  const FamilyReport r = verify_family(find_family("dim3-rho3"), default_grid(3));
  EXPECT_EQ(r.rows.size(), default_grid(3).size());
  bool any_violation = false;
  for (const auto& s : r.summary)
    if (s.condition == "volume") {
      EXPECT_FALSE(s.holds_everywhere);
      ASSERT_TRUE(s.first_failure.has_value());
      any_violation = true;
    }
  EXPECT_TRUE(any_violation);
  EXPECT_FALSE(r.table().empty());
}

TEST(Families, NormalFormFamilyIsHawkinsOnUnimodularLocus) {
  const Family& f = find_family("dim4-normal");
  const FamilyReport r = verify_family(f, {{0, 1, 0, 0}, {0, 1, 1, 0}, {0, 2, 0, 1}});
  for (const auto& row : r.rows) EXPECT_TRUE(row.hawkins) << (row.witness ? *row.witness : "");
}
