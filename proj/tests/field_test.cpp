#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "ppcf/field.hpp"

namespace ppcf {
namespace {

ScalarField three_by_three() {
  // Node (i, j) at (i, j) holds 10 j + i.
  return ScalarField({0.0, 0.0}, 1.0, 3, 3, {0, 1, 2, 10, 11, 12, 20, 21, 22});
}

TEST(ScalarField, Validation) {
  EXPECT_THROW(ScalarField({0, 0}, 0.0, 2, 2, {0, 0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(ScalarField({0, 0}, 1.0, 1, 2, {0, 0}), std::invalid_argument);
  EXPECT_THROW(ScalarField({0, 0}, 1.0, 2, 2, {0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(ScalarField({0, 0}, 1.0, 2, 2, {0, 0, 0, std::nan("")}), std::invalid_argument);
  const ScalarField u = three_by_three();
  EXPECT_EQ(u.min_value(), 0.0);
  EXPECT_EQ(u.max_value(), 22.0);
  EXPECT_EQ(u.hull().hi, (Vec2{2.0, 2.0}));
  EXPECT_EQ(ScalarField::like(u, 3.5).at(2, 1), 3.5);
}

TEST(FromFunction, NodeCounts) {
  const auto zero = [](Vec2) { return 0.0; };
  const ScalarField u = from_function(zero, make_box(-2, -2, 2, 2), 0.01);
  EXPECT_EQ(u.nx(), 401u);
  EXPECT_EQ(u.ny(), 401u);
  const ScalarField v = from_function(zero, make_box(0, 0, 1, 0.5), 0.3);
  EXPECT_EQ(v.nx(), 4u);
  EXPECT_EQ(v.ny(), 2u);
  EXPECT_THROW(from_function(zero, make_box(0, 0, 0.1, 1), 0.2), std::invalid_argument);
  EXPECT_THROW(from_function(zero, make_box(0, 0, 1, 1), 0.0), std::invalid_argument);
}

TEST(FromFunction, SamplesAtNodes) {
  const ScalarField u = from_function([](Vec2 x) { return x.x - 2.0 * x.y; },
                                      make_box(-1, 0, 1, 1), 0.5);
  EXPECT_EQ(u.at(0, 0), -1.0);
  EXPECT_EQ(u.at(4, 2), 1.0 - 2.0);
  EXPECT_EQ(u.node(3, 1), (Vec2{0.5, 0.5}));
}

TEST(SampleBilinear, ConstantField) {
  const ScalarField u = from_function([](Vec2) { return 4.25; }, make_box(0, 0, 1, 1), 0.1);
  const OutsidePolicy clamp = OutsidePolicy::clamp_nearest();
  for (Vec2 p : {Vec2{0.33, 0.71}, Vec2{0.0, 1.0}, Vec2{-3.0, 0.5}, Vec2{0.999, 0.001}}) {
    EXPECT_DOUBLE_EQ(sample_bilinear(u, p, clamp), 4.25);
  }
}

TEST(SampleBilinear, AffineExactness) {
  const auto affine = [](Vec2 x) { return 0.3 + 1.7 * x.x - 2.9 * x.y; };
  const ScalarField u = from_function(affine, make_box(-1, -1, 1, 1), 0.05);
  const OutsidePolicy clamp = OutsidePolicy::clamp_nearest();
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  for (int n = 0; n < 1000; ++n) {
    const Vec2 p{coord(rng), coord(rng)};
    EXPECT_NEAR(sample_bilinear(u, p, clamp), affine(p), 1e-12);
  }
}

TEST(SampleBilinear, ReproducesNodesBitwise) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  std::vector<double> values(13 * 9);
  for (double& v : values) v = value(rng);
  const ScalarField u({-0.6, -0.4}, 0.1, 13, 9, values);
  const OutsidePolicy clamp = OutsidePolicy::clamp_nearest();
  for (std::size_t j = 0; j < u.ny(); ++j) {
    for (std::size_t i = 0; i < u.nx(); ++i) {
      EXPECT_EQ(sample_bilinear(u, u.node(i, j), clamp), u.at(i, j)) << i << ' ' << j;
    }
  }
}

TEST(SampleBilinear, CellMidpoint) {
  const ScalarField u = three_by_three();
  const OutsidePolicy clamp = OutsidePolicy::clamp_nearest();
  EXPECT_DOUBLE_EQ(sample_bilinear(u, {0.5, 0.5}, clamp), 5.5);
  EXPECT_DOUBLE_EQ(sample_bilinear(u, {1.25, 2.0}, clamp), 21.25);
}

TEST(SampleBilinear, ClampProjectsOntoNearestEdge) {
  const ScalarField u = three_by_three();
  const OutsidePolicy clamp = OutsidePolicy::clamp_nearest();
  // One cell to the left of node (0, 1): projection lands on that node.
  EXPECT_EQ(sample_bilinear(u, {-1.0, 1.0}, clamp), 10.0);
  EXPECT_EQ(sample_bilinear(u, {3.0, 2.0}, clamp), 22.0);
  EXPECT_EQ(sample_bilinear(u, {1.0, -1.0}, clamp), 1.0);
  EXPECT_EQ(sample_bilinear(u, {5.0, 5.0}, clamp), 22.0);
  EXPECT_DOUBLE_EQ(sample_bilinear(u, {-1.0, 0.5}, clamp), 5.0);
}

TEST(SampleBilinear, AnalyticOutside) {
  const ScalarField u = three_by_three();
  const OutsidePolicy analytic = OutsidePolicy::analytic([](Vec2 x) { return x.x * 100.0 + x.y; });
  EXPECT_EQ(sample_bilinear(u, {-1.0, 1.0}, analytic), -99.0);
  EXPECT_EQ(sample_bilinear(u, {2.0, 2.0}, analytic), 22.0);
  EXPECT_EQ(sample_bilinear(u, {2.0000001, 2.0}, analytic), 2.0000001 * 100.0 + 2.0);
  EXPECT_EQ(analytic.kind(), OutsidePolicy::Kind::AnalyticInitial);
  EXPECT_EQ(OutsidePolicy::clamp_nearest().kind(), OutsidePolicy::Kind::ClampNearest);
}

TEST(SampleBilinear, MonotoneAndShiftCommuting) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  std::uniform_real_distribution<double> bump(0.0, 0.5);
  std::uniform_real_distribution<double> coord(-0.7, 0.7);
  std::vector<double> a(11 * 11);
  for (double& v : a) v = value(rng);
  std::vector<double> b = a;
  std::vector<double> c = a;
  for (std::size_t n = 0; n < a.size(); ++n) {
    b[n] += bump(rng);
    c[n] += 2.5;
  }
  const ScalarField u({-0.5, -0.5}, 0.1, 11, 11, a);
  const ScalarField v({-0.5, -0.5}, 0.1, 11, 11, b);
  const ScalarField w({-0.5, -0.5}, 0.1, 11, 11, c);
  const OutsidePolicy clamp = OutsidePolicy::clamp_nearest();
  for (int n = 0; n < 500; ++n) {
    const Vec2 p{coord(rng), coord(rng)};
    EXPECT_LE(sample_bilinear(u, p, clamp), sample_bilinear(v, p, clamp));
    EXPECT_NEAR(sample_bilinear(w, p, clamp) - sample_bilinear(u, p, clamp), 2.5, 1e-12);
  }
}

TEST(WriteFieldCsv, Format) {
  const ScalarField u({0.5, -1.0}, 0.25, 2, 2, {1.0, 0.1, -2.0, 3.0});
  std::ostringstream out;
  write_field_csv(out, u);
  EXPECT_EQ(out.str(),
            "x,y,value\n"
            "0.5,-1,1\n"
            "0.75,-1,0.10000000000000001\n"
            "0.5,-0.75,-2\n"
            "0.75,-0.75,3\n");
}

}  // namespace
}  // namespace ppcf
