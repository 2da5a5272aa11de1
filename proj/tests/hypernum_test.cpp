#include "hyperkin/hypernum.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "test_support.hpp"

namespace hyperkin {
namespace {

using testing::Rng;

// 2x2 matrix representation [[x, y], [y, x]] of x + jy.
using Mat = std::array<double, 4>;
Mat as_matrix(HypNumber const& z) { return {z.x, z.y, z.y, z.x}; }
Mat matmul(Mat const& a, Mat const& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

TEST(HypNumberTest, ProductOfIsotropicConjugatesVanishes) {
  EXPECT_EQ(mul({1, 1}, {1, -1}), HypNumber(0, 0));
}

TEST(HypNumberTest, ProductMatchesMatrixRepresentation) {
  Mat const m = matmul(as_matrix({2, 1}), as_matrix({3, 2}));
  EXPECT_EQ(m[0], 8);
  EXPECT_EQ(m[1], 7);
  EXPECT_EQ(mul({2, 1}, {3, 2}), HypNumber(8, 7));

  Rng rng;
  for (int i = 0; i < 200; ++i) {
    HypNumber const z = rng.hyp(10), w = rng.hyp(10);
    Mat const p = matmul(as_matrix(z), as_matrix(w));
    HypNumber const zw = z * w;
    EXPECT_DOUBLE_EQ(zw.x, p[0]);
    EXPECT_DOUBLE_EQ(zw.y, p[1]);
    EXPECT_DOUBLE_EQ(p[0], p[3]);  // the product stays in the representation
  }
}

TEST(HypNumberTest, RingLaws) {
  Rng rng;
  for (int i = 0; i < 50; ++i) {
    HypNumber const a = rng.hyp(5), b = rng.hyp(5), c = rng.hyp(5);
    EXPECT_EQ(a * HypNumber(1, 0), a);
    EXPECT_EQ(a * b, b * a);
    HypNumber const assoc = (a * b) * c - a * (b * c);
    EXPECT_LE(max_abs(assoc), 1e-12);
    HypNumber const dist = a * (b + c) - (a * b + a * c);
    EXPECT_LE(max_abs(dist), 1e-12);
  }
}

TEST(HypNumberTest, Conjugate) {
  EXPECT_EQ(conj({2, 3}), HypNumber(2, -3));
  EXPECT_EQ(conj({5, 0}), HypNumber(5, 0));
  Rng rng;
  for (int i = 0; i < 50; ++i) {
    HypNumber const z = rng.hyp(5), w = rng.hyp(5);
    EXPECT_EQ(conj(conj(z)), z);
    EXPECT_LE(max_abs(conj(z * w) - conj(z) * conj(w)), 1e-13);
    HypNumber const n = z * conj(z);
    EXPECT_NEAR(n.x, z.x * z.x - z.y * z.y, 1e-12);
    EXPECT_EQ(n.y, 0.0);
  }
}

TEST(HypNumberTest, InnerProduct) {
  EXPECT_EQ(inner({2, 1}, {3, 2}), 4.0);
  EXPECT_EQ(inner({1, 1}, {1, 1}), 0.0);
  Rng rng;
  for (int i = 0; i < 50; ++i) {
    HypNumber const z = rng.hyp(10);
    EXPECT_LE(std::fabs(inner(z, HypNumber::j() * z)), 1e-12);
    HypNumber const w = rng.hyp(10);
    EXPECT_EQ(inner(z, w), inner(w, z));
    EXPECT_NEAR(inner(z, w), (z * conj(w)).x, 1e-12);
  }
}

TEST(HypNumberTest, Modulus) {
  EXPECT_NEAR(modulus_h({3, 4}), std::sqrt(7.0), 1e-15);
  EXPECT_EQ(modulus_h({5, 3}), 4.0);
  EXPECT_EQ(modulus_h({1, 1}), 0.0);
  EXPECT_EQ(modulus_h({-2, 2}), 0.0);
}

TEST(HypNumberTest, Classify) {
  EXPECT_EQ(classify({2, 1}), Branch::HI);
  EXPECT_EQ(classify({1, 2}), Branch::HII);
  EXPECT_EQ(classify({-2, 1}), Branch::HIII);
  EXPECT_EQ(classify({1, -2}), Branch::HIV);
  EXPECT_EQ(classify({-1, 1}), Branch::LIGHTLIKE);
  EXPECT_EQ(classify({0, 0}), Branch::LIGHTLIKE);
  // exact comparison: the next double away from the diagonal is not lightlike
  EXPECT_EQ(classify({std::nextafter(1.0, 2.0), 1.0}), Branch::HI);
}

TEST(HypNumberTest, PolarForm) {
  PolarForm p = polar({2, 0});
  EXPECT_EQ(p.r, 2.0);
  EXPECT_EQ(p.phi, 0.0);
  EXPECT_EQ(p.branch, Branch::HI);

  p = polar({0, 2});
  EXPECT_EQ(p.r, 2.0);
  EXPECT_EQ(p.phi, 0.0);
  EXPECT_EQ(p.branch, Branch::HII);

  // -3 (cosh 1 + j sinh 1)
  p = polar({-3 * std::cosh(1.0), -3 * std::sinh(1.0)});
  EXPECT_NEAR(p.r, 3.0, 1e-14);
  EXPECT_NEAR(p.phi, 1.0, 1e-14);
  EXPECT_EQ(p.branch, Branch::HIII);

  p = polar({-4.629241904445731, -3.525603580931404});
  EXPECT_NEAR(p.r, 3.0, 1e-12);
  EXPECT_NEAR(p.phi, 1.0, 1e-12);

  EXPECT_THROW(polar({1, -1}), LightlikeError);
}

TEST(HypNumberTest, PolarRoundTripAllBranches) {
  Rng rng;
  for (int i = 0; i < 1000; ++i) {
    HypNumber const z = rng.non_lightlike(1e-6, 1e6);
    PolarForm const p = polar(z);
    EXPECT_NEAR(p.r, modulus_h(z), 1e-12 * p.r);
    HypNumber const back = reconstruct(p);
    double const scale = std::hypot(z.x, z.y);
    ASSERT_LE(std::hypot(back.x - z.x, back.y - z.y), 1e-12 * scale)
        << z << " -> " << back;
  }
}

TEST(HypNumberTest, ExpJ) {
  EXPECT_EQ(exp_j(0), HypNumber(1, 0));
  HypNumber const e1 = exp_j(1);
  EXPECT_NEAR(e1.x, 1.5430806348152437, 1e-15);
  EXPECT_NEAR(e1.y, 1.1752011936438014, 1e-15);
  Rng rng;
  for (int i = 0; i < 50; ++i) {
    double const a = rng.uniform(-4, 4), b = rng.uniform(-4, 4);
    EXPECT_NEAR(modulus_h(exp_j(a)), 1.0, 1e-12 * std::cosh(a));
    HypNumber const d = exp_j(a) * exp_j(b) - exp_j(a + b);
    EXPECT_LE(max_abs(d), 1e-12 * std::cosh(a + b) * 4);

    // multiplication by e^{ja} is the matrix [[cosh a, sinh a], [sinh a, cosh a]]
    HypNumber const z = rng.hyp(3);
    HypNumber const rotated = z * exp_j(a);
    EXPECT_NEAR(rotated.x, std::cosh(a) * z.x + std::sinh(a) * z.y, 1e-12 * 60);
    EXPECT_NEAR(rotated.y, std::sinh(a) * z.x + std::cosh(a) * z.y, 1e-12 * 60);
  }
}

TEST(HypNumberTest, RotationsPreserveBranches) {
  Rng rng;
  for (int i = 0; i < 500; ++i) {
    HypNumber const z = rng.non_lightlike(1e-2, 1e2);
    double const a = rng.uniform(-3, 3);
    EXPECT_EQ(classify(z * exp_j(a)), classify(z));
  }
}

TEST(HypNumberTest, Division) {
  EXPECT_EQ(div({8, 7}, {3, 2}), HypNumber(2, 1));
  EXPECT_EQ(div({3.5, -2}, {1, 0}), HypNumber(3.5, -2));
  EXPECT_THROW(div({1, 0}, {1, 1}), LightlikeError);
  EXPECT_THROW(div({1, 0}, {0, 0}), LightlikeError);
  Rng rng;
  for (int i = 0; i < 200; ++i) {
    HypNumber const z = rng.hyp(10);
    HypNumber const w = rng.non_lightlike(1e-1, 1e1);
    HypNumber const q = div(z, w);
    HypNumber const back = q * w;
    EXPECT_LE(std::hypot(back.x - z.x, back.y - z.y),
              1e-12 * (1 + std::hypot(z.x, z.y)) * std::hypot(q.x, q.y) *
                  std::hypot(w.x, w.y));
  }
}

TEST(HypNumberTest, TextRendering) {
  EXPECT_EQ(to_string(HypNumber(1.5, -2)), "1.5-2j");
  EXPECT_EQ(to_string(HypNumber(0.1, 3)), "0.10000000000000001+3j");
}

}  // namespace
}  // namespace hyperkin
