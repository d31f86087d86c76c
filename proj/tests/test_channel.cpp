#include <doctest.h>

#include <cmath>
#include <random>

#include "channel.hpp"
#include "test_util.hpp"

using namespace avck;

TEST_CASE("make_bsc produces the expected matrices") {
  Channel flip = make_bsc(0.0);
  CHECK(flip(0, 0) == 0.0);
  CHECK(flip(1, 0) == 1.0);
  CHECK(flip(0, 1) == 1.0);
  CHECK(flip(1, 1) == 0.0);

  Channel id = make_bsc(1.0);
  CHECK(id(0, 0) == 1.0);
  CHECK(id(1, 1) == 1.0);
  CHECK(id(1, 0) == 0.0);

  Channel w = make_bsc(0.3);
  CHECK(w(0, 0) == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(w(1, 0) == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(w(0, 1) == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(w(1, 1) == doctest::Approx(0.3).epsilon(1e-15));

  CHECK_THROWS_AS(make_bsc(-0.01), domain_error);
  CHECK_THROWS_AS(make_bsc(1.01), domain_error);
}

TEST_CASE("channel validation rejects bad matrices") {
  CHECK_THROWS_AS(Channel(2, 2, {0.5, 0.5, 0.4, 0.5}), domain_error);
  CHECK_THROWS_AS(Channel(2, 2, {1.5, 0.0, -0.5, 1.0}), domain_error);
  CHECK_THROWS_AS(Channel(2, 2, {0.5, 0.5}), domain_error);
}

TEST_CASE("compose multiplies crossover structure") {
  // two BSC(0.9) in series give BSC(0.9*0.9 + 0.1*0.1)
  Channel c = compose(make_bsc(0.9), make_bsc(0.9));
  CHECK(c(0, 0) == doctest::Approx(0.82).epsilon(1e-14));
  CHECK(c(1, 1) == doctest::Approx(0.82).epsilon(1e-14));

  std::mt19937_64 rng(101);
  Channel w = testutil::random_channel(rng, 3, 3);
  Channel left = compose(make_identity(3), w);
  for (std::size_t y = 0; y < 3; ++y)
    for (std::size_t x = 0; x < 3; ++x)
      CHECK(left(y, x) == doctest::Approx(w(y, x)).epsilon(1e-14));

  // flipping after a BSC mirrors the parameter
  Channel flipped = compose(make_flip(), make_bsc(0.3));
  Channel expected = make_bsc(0.7);
  for (std::size_t y = 0; y < 2; ++y)
    for (std::size_t x = 0; x < 2; ++x)
      CHECK(flipped(y, x) == doctest::Approx(expected(y, x)).epsilon(1e-14));

  CHECK_THROWS_AS(compose(make_bsc(0.5), make_identity(3)), domain_error);
}

TEST_CASE("bsc composition commutes") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    double a = unif(rng), b = unif(rng);
    Channel ab = compose(make_bsc(a), make_bsc(b));
    Channel ba = compose(make_bsc(b), make_bsc(a));
    for (std::size_t y = 0; y < 2; ++y)
      for (std::size_t x = 0; x < 2; ++x)
        CHECK(std::abs(ab(y, x) - ba(y, x)) <= 1e-12);
  }
}

TEST_CASE("tensor layout and dimensions") {
  Channel t = tensor(make_bsc(0.3), make_bsc(0.8));
  CHECK(t.input_size() == 4);
  CHECK(t.output_size() == 4);
  // entry (y=(0,0) | x=(0,0)) = w1 * w2
  CHECK(t(0, 0) == doctest::Approx(0.3 * 0.8).epsilon(1e-15));
  // entry (y=(1,0) | x=(0,1)): first branch flips in, second flips out
  CHECK(t(2, 1) == doctest::Approx(0.7 * 0.2).epsilon(1e-15));

  Channel id4 = tensor(make_identity(2), make_identity(2));
  for (std::size_t y = 0; y < 4; ++y)
    for (std::size_t x = 0; x < 4; ++x) CHECK(id4(y, x) == (y == x ? 1.0 : 0.0));
}

TEST_CASE("tensor respects product vectors") {
  std::mt19937_64 rng(202);
  for (int i = 0; i < 30; ++i) {
    Channel a = testutil::random_channel(rng, 2, 3);
    Channel b = testutil::random_channel(rng, 3, 2);
    ProbVector u = testutil::random_prob(rng, 2);
    ProbVector v = testutil::random_prob(rng, 3);

    std::vector<double> uv(6);
    for (std::size_t i1 = 0; i1 < 2; ++i1)
      for (std::size_t i2 = 0; i2 < 3; ++i2) uv[i1 * 3 + i2] = u[i1] * v[i2];
    ProbVector lhs = tensor(a, b).apply(ProbVector(uv));

    ProbVector au = a.apply(u);
    ProbVector bv = b.apply(v);
    for (std::size_t y1 = 0; y1 < 3; ++y1)
      for (std::size_t y2 = 0; y2 < 2; ++y2)
        CHECK(std::abs(lhs[y1 * 2 + y2] - au[y1] * bv[y2]) <= 1e-12);
  }
}

TEST_CASE("stochasticity is preserved by compose and tensor") {
  std::mt19937_64 rng(303);
  for (int i = 0; i < 25; ++i) {
    Channel a = testutil::random_channel(rng, 3, 4);
    Channel b = testutil::random_channel(rng, 2, 3);
    Channel c = compose(a, b);  // constructor re-validates column sums
    Channel t = tensor(a, b);
    CHECK(c.input_size() == 2);
    CHECK(t.input_size() == 6);
  }
}

TEST_CASE("mutual information reference points") {
  ProbVector half({0.5, 0.5});
  CHECK(mutual_information(half, make_bsc(0.5)) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(mutual_information(half, make_bsc(0.0)) == doctest::Approx(1.0).epsilon(1e-12));
  double expected = 1.0 - testutil::binary_entropy(0.1);
  CHECK(mutual_information(half, make_bsc(0.9)) == doctest::Approx(expected).epsilon(1e-9));
  CHECK_THROWS_AS(mutual_information(ProbVector({1.0}), make_bsc(0.5)), domain_error);
}

TEST_CASE("mutual information bounds and curvature") {
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int i = 0; i < 60; ++i) {
    std::size_t nx = 2 + static_cast<std::size_t>(unif(rng) * 3);
    std::size_t ny = 2 + static_cast<std::size_t>(unif(rng) * 3);
    ProbVector p = testutil::random_prob(rng, nx);
    Channel w1 = testutil::random_channel(rng, nx, ny);
    Channel w2 = testutil::random_channel(rng, nx, ny);
    double lambda = unif(rng);

    double i1 = mutual_information(p, w1);
    CHECK(i1 >= 0.0);
    CHECK(i1 <= std::min(std::log2(double(nx)), std::log2(double(ny))) + 1e-12);

    // convex in the channel
    std::vector<double> mix(nx * ny);
    for (std::size_t y = 0; y < ny; ++y)
      for (std::size_t x = 0; x < nx; ++x)
        mix[y * nx + x] = lambda * w1(y, x) + (1.0 - lambda) * w2(y, x);
    double i_mix = mutual_information(p, Channel(nx, ny, mix));
    double i2 = mutual_information(p, w2);
    CHECK(i_mix <= lambda * i1 + (1.0 - lambda) * i2 + 1e-9);

    // concave in the input distribution
    ProbVector q1 = testutil::random_prob(rng, nx);
    ProbVector q2 = testutil::random_prob(rng, nx);
    std::vector<double> qm(nx);
    for (std::size_t x = 0; x < nx; ++x) qm[x] = lambda * q1[x] + (1.0 - lambda) * q2[x];
    double im = mutual_information(ProbVector(qm), w1);
    CHECK(im >= lambda * mutual_information(q1, w1) +
                    (1.0 - lambda) * mutual_information(q2, w1) - 1e-9);
  }
}

TEST_CASE("flip conjugation closed form") {
  LinearMap2 x = flip_conjugation(0.1, 0.8);
  CHECK(x(0, 0) == doctest::Approx(-1.0 / 7.0).epsilon(1e-12));
  CHECK(x(0, 1) == doctest::Approx(6.0 / 7.0).epsilon(1e-12));
  CHECK(x(1, 0) == doctest::Approx(8.0 / 7.0).epsilon(1e-12));
  CHECK(x(1, 1) == doctest::Approx(1.0 / 7.0).epsilon(1e-12));

  // a flip pair conjugates to the flip itself
  LinearMap2 f = flip_conjugation(0.2, 0.8);
  CHECK(f(0, 0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(f(0, 1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(f(1, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(f(1, 1) == doctest::Approx(0.0).epsilon(1e-12));

  CHECK_THROWS_AS(flip_conjugation(0.4, 0.4), domain_error);
}

TEST_CASE("flip conjugation satisfies V X = F V and preserves column sums") {
  std::mt19937_64 rng(505);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int i = 0; i < 60; ++i) {
    double w1 = unif(rng), w2 = unif(rng);
    if (std::abs(w1 - w2) < 1e-3) continue;
    LinearMap2 x = flip_conjugation(w1, w2);

    CHECK(std::abs(x(0, 0) + x(1, 0) - 1.0) <= 1e-12);
    CHECK(std::abs(x(0, 1) + x(1, 1) - 1.0) <= 1e-12);

    // V has columns (w1, 1-w1) and (w2, 1-w2); F flips the output rows
    double v[2][2] = {{w1, w2}, {1.0 - w1, 1.0 - w2}};
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) {
        double vx = v[r][0] * x(0, c) + v[r][1] * x(1, c);
        double fv = v[1 - r][c];
        CHECK(std::abs(vx - fv) <= 1e-9);
      }
  }
}
