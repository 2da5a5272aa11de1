#include "hyperkin/calculus.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "test_support.hpp"

namespace hyperkin {
namespace {

using testing::cosh_t;
using testing::exp_t;
using testing::poly;
using testing::sinh_t;

TEST(EvalJetTest, Polynomial) {
  ScalarPath const h = ScalarPath::linear(2, 1);
  EXPECT_EQ(eval_jet(h, 0.0), (Jet2{2, 1, 0}));

  ScalarPath const cubic({poly(2, 3)});
  Jet2 const j = eval_jet(cubic, -1.5);
  EXPECT_DOUBLE_EQ(j.v, 2 * -3.375);
  EXPECT_DOUBLE_EQ(j.d1, 6 * 2.25);
  EXPECT_DOUBLE_EQ(j.d2, 12 * -1.5);
  EXPECT_EQ(eval_jet(ScalarPath({poly(1, 2)}), 0.0), (Jet2{0, 0, 2}));
}

TEST(EvalJetTest, Hyperbolic) {
  EXPECT_EQ(eval_jet(ScalarPath({sinh_t(1, 1)}), 0.0), (Jet2{0, 1, 0}));

  Jet2 const j = eval_jet(ScalarPath({cosh_t(3, 2)}), 0.5);
  EXPECT_NEAR(j.v, 4.629241904445731, 1e-14);
  EXPECT_NEAR(j.d1, 7.051207161862808, 1e-14);
  EXPECT_NEAR(j.d2, 18.516967617782925, 1e-13);

  Jet2 const e = eval_jet(ScalarPath({exp_t(2, -1)}), 1.0);
  EXPECT_NEAR(e.v, 2 * std::exp(-1.0), 1e-15);
  EXPECT_NEAR(e.d1, -2 * std::exp(-1.0), 1e-15);
  EXPECT_NEAR(e.d2, 2 * std::exp(-1.0), 1e-15);
}

TEST(EvalJetTest, RejectsInvalidTerms) {
  EXPECT_THROW(ScalarPath({poly(1, 0), {BasisKind::POLY, 1, 1.5}}),
               std::invalid_argument);
  EXPECT_THROW(ScalarPath({{BasisKind::POLY, 1, -1}}), std::invalid_argument);
  EXPECT_THROW(ScalarPath({{BasisKind::COSH, NAN, 1}}), std::invalid_argument);
}

TEST(EvalHypJetTest, Components) {
  HypPath const u{ScalarPath({sinh_t(1, 1)}),
                  ScalarPath({cosh_t(1, 1), poly(-1, 0)})};
  HypJet const j = eval_hyp_jet(u, 0.0);
  EXPECT_EQ(j.v, HypNumber(0, 0));
  EXPECT_EQ(j.d1, HypNumber(1, 0));
  EXPECT_EQ(j.d2, HypNumber(0, 1));

  HypPath const c{ScalarPath::constant(2), ScalarPath::constant(-3)};
  for (double t : {-2.0, 0.0, 7.5}) {
    HypJet const k = eval_hyp_jet(c, t);
    EXPECT_EQ(k.v, HypNumber(2, -3));
    EXPECT_EQ(k.d1, HypNumber(0, 0));
    EXPECT_EQ(k.d2, HypNumber(0, 0));
  }

  HypJet const lin = eval_hyp_jet({ScalarPath({poly(1, 1)}), ScalarPath()}, 3.0);
  EXPECT_EQ(lin.v, HypNumber(3, 0));
  EXPECT_EQ(lin.d1, HypNumber(1, 0));
  EXPECT_EQ(lin.d2, HypNumber(0, 0));
}

TEST(FdJetTest, Examples) {
  EXPECT_NEAR(fd_jet(ScalarPath::linear(2, 1), 0.0, 1e-5).d1, 1.0, 1e-9);
  EXPECT_NEAR(fd_jet(ScalarPath({sinh_t(1, 1)}), 0.0, 1e-5).d1, 1.0, 1e-9);
  EXPECT_NEAR(fd_jet(ScalarPath({cosh_t(1, 1)}), 0.0, 1e-4).d2, 1.0, 1e-6);
  EXPECT_THROW(fd_jet(ScalarPath::linear(2, 1), 0.0, 0.0), std::invalid_argument);
}

// Every basis kind over a 41-point grid on [-2, 2] against central
// differences.
TEST(FdJetTest, ExactJetsAgreeWithFiniteDifferences) {
  std::vector<ScalarPath> const paths = {
      ScalarPath({poly(1.5, 0)}),       ScalarPath({poly(-2, 1)}),
      ScalarPath({poly(0.7, 2)}),       ScalarPath({poly(0.25, 5)}),
      ScalarPath({cosh_t(1.3, 0.8)}),   ScalarPath({sinh_t(-0.6, 1.7)}),
      ScalarPath({exp_t(0.9, -1.1)}),   ScalarPath({exp_t(1, 0.5)}),
      ScalarPath({poly(1, 1), cosh_t(2, 0.5), sinh_t(-1, 1), exp_t(0.3, 0.7)}),
  };
  for (auto const& path : paths) {
    for (int i = 0; i <= 40; ++i) {
      double const t = -2.0 + 0.1 * i;
      Jet2 const exact = eval_jet(path, t);
      Jet2 const fd1 = fd_jet(path, t, 1e-5);
      Jet2 const fd2 = fd_jet(path, t, 1e-4);
      EXPECT_LE(std::fabs(exact.d1 - fd1.d1), 1e-6 * (1 + std::fabs(exact.d1)))
          << "t=" << t;
      EXPECT_LE(std::fabs(exact.d2 - fd2.d2), 1e-4 * (1 + std::fabs(exact.d2)))
          << "t=" << t;
    }
  }
}

TEST(ScalarPathTest, ConcatenationIsLinear) {
  ScalarPath const a({poly(1, 1), cosh_t(2, 0.5), sinh_t(-1, 1)});
  ScalarPath const b({exp_t(0.3, 0.7)});
  ScalarPath const sum = a + b;
  ASSERT_EQ(sum.terms().size(), 4u);
  for (double t : {-1.7, -0.2, 0.0, 0.9, 2.0}) {
    Jet2 expected = eval_jet(a, t);
    expected += eval_jet(b, t);
    EXPECT_EQ(eval_jet(sum, t), expected);  // same summation order: exact
  }
  ScalarPath const c({poly(3, 2), sinh_t(1, 2)});
  for (double t : {-1.0, 0.5}) {
    Jet2 expected = eval_jet(a, t);
    expected += eval_jet(c, t);
    Jet2 const got = eval_jet(a + c, t);
    EXPECT_NEAR(got.v, expected.v, 1e-14 * (1 + std::fabs(expected.v)));
    EXPECT_NEAR(got.d1, expected.d1, 1e-14 * (1 + std::fabs(expected.d1)));
    EXPECT_NEAR(got.d2, expected.d2, 1e-14 * (1 + std::fabs(expected.d2)));
  }
}

}  // namespace
}  // namespace hyperkin
