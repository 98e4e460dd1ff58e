#include "csm/symmetric.hpp"

#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <numeric>

using namespace csm;

namespace {

// s_lambda(x) = det(x_i^(lambda_j + n - j)) / det(x_i^(n - j))
Integer bialternant(const Partition& lambda, const WeightMultiset& x) {
  const int n = static_cast<int>(x.size());
  if (lambda.length() > n) return 0;
  std::vector<std::vector<Integer>> num(n, std::vector<Integer>(n)), den(n, std::vector<Integer>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      num[i][j] = boost::multiprecision::pow(x[i], static_cast<unsigned>(lambda[j] + n - 1 - j));
      den[i][j] = boost::multiprecision::pow(x[i], static_cast<unsigned>(n - 1 - j));
    }
  Integer d = determinant(den);
  Integer q = determinant(num);
  EXPECT_EQ(q % d, 0);
  return q / d;
}

const std::vector<WeightMultiset> kSamples = {{2, 3}, {1, 4, 6}, {-2, 1, 5, 7}, {3, -1, 2, 8}};

}  // namespace

TEST(Elementary, Basics) {
  EXPECT_EQ(elementary({2, 3}), (std::vector<Integer>{1, 5, 6}));
  EXPECT_EQ(complete({2, 3}, 2), (std::vector<Integer>{1, 5, 19}));
}

TEST(Schur, Examples) {
  EXPECT_EQ(schur_eval(Partition{1}, {4, 9}), 13);
  EXPECT_EQ(schur_eval(Partition{2}, {2, 3}), 4 + 6 + 9);
  EXPECT_EQ(schur_eval(Partition{1, 1}, {2, 3}), 6);
  EXPECT_EQ(schur_eval(Partition{1, 1, 1}, {2, 3}), 0);
  EXPECT_EQ(chern_schur_eval(Partition{1, 1}, {2, 3}), 19);
  EXPECT_EQ(chern_schur_eval(Partition{1}, {7}), 7);
  EXPECT_EQ(chern_schur_eval(Partition{2}, {2, 3}), 6);
}

TEST(Schur, MatchesBialternant) {
  for (const auto& x : kSamples)
    for (const auto& lambda : enumerate_box(3, 4)) EXPECT_EQ(schur_eval(lambda, x), bialternant(lambda, x)) << lambda.key();
}

TEST(Schur, ChernSchurIsConjugate) {
  for (const auto& x : kSamples)
    for (const auto& beta : enumerate_box(3, 3)) EXPECT_EQ(chern_schur_eval(beta, x), schur_eval(conjugate(beta), x));
}

TEST(BinomialDet, Examples) {
  EXPECT_EQ(binomial_det(Partition{1}, Partition{}, 2), 2);
  EXPECT_EQ(binomial_det(Partition{2}, Partition{2}, 1), 1);
  for (const auto& l : enumerate_box(3, 3)) {
    EXPECT_EQ(binomial_det(l, l, 3), 1);
    for (const auto& m : enumerate_box(3, 3)) EXPECT_GE(binomial_det(l, m, 3), 0) << l.key() << " " << m.key();
  }
}

TEST(Straighten, Examples) {
  Straightened s = straighten({1, 3});
  EXPECT_EQ(s.sign, -1);
  EXPECT_EQ(s.shape, (Partition{2, 2}));
  EXPECT_EQ(straighten({0, 1}).sign, 0);
  for (const auto& p : enumerate_box(3, 3)) {
    Straightened t = straighten(p.padded(3));
    EXPECT_EQ(t.sign, 1);
    EXPECT_EQ(t.shape, p);
  }
}

TEST(Straighten, AgreesWithJacobiTrudi) {
  // s_I = det(h_{I_i + j - i}) for any integer sequence I
  const WeightMultiset x{1, 3, 4};
  std::vector<Integer> h = complete(x, 12);
  for (int a = -2; a <= 4; ++a)
    for (int b = -2; b <= 4; ++b)
      for (int c = -2; c <= 4; ++c) {
        std::vector<int> seq{a, b, c};
        std::vector<std::vector<Integer>> m(3, std::vector<Integer>(3));
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) {
            int d = seq[i] + j - i;
            m[i][j] = d < 0 ? Integer(0) : h[d];
          }
        Straightened st = straighten(seq);
        Integer expect = st.sign == 0 ? Integer(0) : st.sign * schur_eval(st.shape, x);
        EXPECT_EQ(determinant(m), expect) << a << "," << b << "," << c;
      }
}

TEST(LittlewoodRichardson, Examples) {
  auto pieri = lr_coefficients(Partition{1}, Partition{1});
  EXPECT_EQ(pieri, (std::map<Partition, Integer>{{Partition{2}, 1}, {Partition{1, 1}, 1}}));
  auto p = lr_coefficients(Partition{2}, Partition{1, 1});
  EXPECT_EQ(p, (std::map<Partition, Integer>{{Partition{3, 1}, 1}, {Partition{2, 1, 1}, 1}}));
  auto id = lr_coefficients(Partition{}, Partition{3, 1});
  EXPECT_EQ(id, (std::map<Partition, Integer>{{Partition{3, 1}, 1}}));
  EXPECT_EQ(lr_coefficients(Partition{2, 1}, Partition{2, 1}).at(Partition{3, 2, 1}), 2);
}

TEST(LittlewoodRichardson, ProductIdentity) {
  const WeightMultiset x{-1, 2, 3, 5, 9};
  for (const auto& l : enumerate_box(2, 3))
    for (const auto& m : enumerate_box(3, 2)) {
      Integer sum = 0;
      for (const auto& [nu, c] : lr_coefficients(l, m)) sum += c * schur_eval(nu, x);
      EXPECT_EQ(sum, schur_eval(l, x) * schur_eval(m, x)) << l.key() << " * " << m.key();
    }
}

TEST(LittlewoodRichardson, SkewMatchesProduct) {
  for (const auto& nu : enumerate_box(3, 3))
    for (const auto& kappa : lower_interval(nu)) {
      auto skew = lr_skew(nu, kappa);
      for (const auto& rho : enumerate_box(3, 3)) {
        if (rho.size() + kappa.size() != nu.size()) continue;
        auto prod = lr_coefficients(kappa, rho);
        Integer expect = prod.count(nu) ? prod.at(nu) : Integer(0);
        Integer got = skew.count(rho) ? skew.at(rho) : Integer(0);
        EXPECT_EQ(got, expect) << nu.key() << "/" << kappa.key() << " -> " << rho.key();
      }
    }
}

TEST(GaussianBinomial, Examples) {
  EXPECT_EQ(gaussian_binomial(2, 1), QPolynomial({1, 1}));
  EXPECT_EQ(gaussian_binomial(4, 2), QPolynomial({1, 1, 2, 1, 1}));
  EXPECT_EQ(gaussian_binomial(5, 0), QPolynomial({1}));
  EXPECT_TRUE(gaussian_binomial(2, 3).is_zero());
}

TEST(GaussianBinomial, CountsSubsetsByInversions) {
  for (int n = 0; n <= 7; ++n)
    for (int k = 0; k <= n; ++k) {
      std::vector<Integer> count(k * (n - k) + 1, 0);
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != k) continue;
        // inversions of the 0/1 word: pairs (1 before 0)
        int inv = 0, ones = 0;
        for (int i = 0; i < n; ++i) {
          if (mask >> i & 1u) ++ones;
          else inv += ones;
        }
        count[inv] += 1;
      }
      EXPECT_EQ(gaussian_binomial(n, k), QPolynomial(count)) << n << " " << k;
      EXPECT_EQ(gaussian_binomial(n, k).at_one(), binomial(n, k));
    }
}

TEST(Unipotent, Inverse) {
  std::vector<Partition> idx{Partition{1}, Partition{}};
  UnipotentMatrix id{idx, {{1, 0}, {0, 1}}};
  EXPECT_EQ(invert_unipotent(id).entries, id.entries);
  UnipotentMatrix m{idx, {{1, 2}, {0, 1}}};
  EXPECT_EQ(invert_unipotent(m).entries, (std::vector<std::vector<Integer>>{{1, -2}, {0, 1}}));
  UnipotentMatrix bad{idx, {{1, 0}, {3, 1}}};
  EXPECT_THROW(invert_unipotent(bad), InvariantViolation);
}

TEST(Arith, Basics) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(3, 4), 0);
  EXPECT_EQ(binomial(3, -1), 0);
  EXPECT_EQ(determinant({{2, 1}, {1, 1}}), 1);
  EXPECT_EQ(determinant({{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(make_rational(3, -6), Rational(-1) / 2);
  EXPECT_THROW(to_integer(Rational(1) / 2, "x"), InvariantViolation);
}
