#include "csm/partition.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace csm;

TEST(Partition, ParseAndKey) {
  EXPECT_EQ(Partition::parse("2,1").key(), "2,1");
  EXPECT_EQ(Partition::parse("3, 1, 0, 0").key(), "3,1");
  EXPECT_EQ(Partition::parse("0").key(), "0");
  EXPECT_EQ(Partition{}.key(), "0");
  EXPECT_THROW(Partition::parse("1,2"), DomainError);
  EXPECT_THROW(Partition::parse("1,-1"), DomainError);
  EXPECT_THROW(Partition::parse("a"), DomainError);
  EXPECT_THROW(Partition::parse("2,,1"), DomainError);
}

TEST(Partition, Conjugate) {
  EXPECT_EQ(conjugate(Partition{5, 5, 2, 1}), (Partition{4, 3, 2, 2, 2}));
  EXPECT_EQ(conjugate(Partition{}), Partition{});
  EXPECT_EQ(conjugate(Partition{2, 1}), (Partition{2, 1}));
  for (const auto& p : enumerate_box(4, 4)) EXPECT_EQ(conjugate(conjugate(p)), p);
}

TEST(Partition, DualInBox) {
  EXPECT_EQ(dual_in_box(Partition{1, 1}, 2, 2), (Partition{1, 1}));
  EXPECT_EQ(dual_in_box(Partition{2}, 2, 2), (Partition{2}));
  EXPECT_EQ(dual_in_box(Partition{3, 1}, 3, 3), (Partition{3, 2}));
  for (const auto& p : enumerate_box(3, 4)) {
    EXPECT_EQ(dual_in_box(dual_in_box(p, 3, 4), 3, 4), p);
    EXPECT_EQ(dual_in_box(p, 3, 4).size(), 12 - p.size());
  }
}

TEST(Partition, Containment) {
  EXPECT_TRUE(leq(Partition{1, 1}, Partition{2, 1}));
  EXPECT_FALSE(leq(Partition{2}, Partition{1, 1}));
  EXPECT_TRUE(leq(Partition{}, Partition{3, 2}));
}

TEST(Partition, EnumerateBox) {
  EXPECT_EQ(enumerate_box(2, 2).size(), 6u);
  auto box = enumerate_box(3, 3);
  ASSERT_EQ(box.size(), 20u);
  EXPECT_EQ(box.front(), (Partition{3, 3, 3}));
  EXPECT_EQ(box.back(), Partition{});
  EXPECT_TRUE(std::is_sorted(box.begin(), box.end(), BoxOrder{}));
  EXPECT_EQ(lower_interval(Partition{1, 1}), (std::vector<Partition>{Partition{1, 1}, Partition{1}, Partition{}}));
  // lower intervals are the containment-filtered box
  for (const auto& a : box) {
    auto lo = lower_interval(a);
    auto expect = std::count_if(box.begin(), box.end(), [&](const Partition& b) { return leq(b, a); });
    EXPECT_EQ(static_cast<long>(lo.size()), expect);
  }
}

TEST(PeakForm, Examples) {
  EXPECT_EQ(to_peak_form(Partition{5, 5, 2, 1}, 4), (PeakForm{{1, 1, 2}, {1, 1, 3}}));
  EXPECT_EQ(to_peak_form(Partition{2, 1}, 2), (PeakForm{{1, 1}, {1, 1}}));
  EXPECT_EQ(to_peak_form(Partition{2}, 2), (PeakForm{{1, 1}, {0, 2}}));
  EXPECT_EQ(to_peak_form(Partition{2, 1}, 2).str(), "[1,1|1,1]");
  EXPECT_THROW(to_peak_form(Partition{1, 1, 1}, 2), DomainError);
}

TEST(PeakForm, RoundTrip) {
  for (int k = 1; k <= 4; ++k)
    for (const auto& p : enumerate_box(k, 4)) {
      PeakForm pf = to_peak_form(p, k);
      EXPECT_EQ(pf.k(), k);
      EXPECT_EQ(from_peak_form(pf), p);
      EXPECT_EQ(pf.flag_dim(pf.peaks()), k + p.first());
    }
}

TEST(PeakForm, RemovePeak) {
  PeakForm pf{{1, 1, 2}, {1, 1, 3}};
  EXPECT_EQ(remove_peak(pf, 1), (PeakForm{{1, 2}, {2, 3}}));
  EXPECT_EQ(remove_peak(pf, 2), (PeakForm{{2, 2}, {1, 4}}));
  EXPECT_EQ(remove_peak(pf, 3), (PeakForm{{1, 3}, {1, 1}}));
  EXPECT_EQ(remove_peak(PeakForm{{1, 1}, {1, 1}}, 1), (PeakForm{{1}, {2}}));
  EXPECT_THROW(remove_peak(pf, 4), DomainError);
}

TEST(PeakForm, RemovePeakKeepsShape) {
  // only the first peak carries rows away; a non-last peak keeps the first row
  for (const auto& p : enumerate_box(4, 4)) {
    PeakForm pf = to_peak_form(p, 4);
    for (int j = 1; j <= pf.peaks() && pf.peaks() > 1; ++j) {
      PeakForm r = remove_peak(pf, j);
      EXPECT_EQ(r.k(), j == 1 ? 4 - pf.a[0] : 4);
      EXPECT_EQ(r.peaks(), pf.peaks() - 1);
      if (j < pf.peaks()) {
        EXPECT_EQ(from_peak_form(r).first(), p.first()) << pf.str() << " j=" << j;
      }
    }
  }
}

TEST(CellCenter, Examples) {
  EXPECT_EQ(cell_center(Partition{}, 2, 4), (std::vector<int>{1, 2}));
  EXPECT_EQ(cell_center(Partition{2, 1}, 2, 4), (std::vector<int>{2, 4}));
  EXPECT_EQ(cell_center(Partition{2, 2}, 2, 4), (std::vector<int>{3, 4}));
}

TEST(DepthVector, Examples) {
  EXPECT_EQ(depth_vector(Partition{2, 1}, Partition{}, 2, 4), (std::vector<int>{0, 1, 0}));
  for (const auto& a : enumerate_box(3, 3)) {
    auto c = depth_vector(a, a, 3, 6);
    EXPECT_TRUE(std::all_of(c.begin(), c.end(), [](int x) { return x == 0; })) << a.key();
  }
  EXPECT_THROW(depth_vector(Partition{2}, Partition{1, 1}, 2, 4), DomainError);
}
