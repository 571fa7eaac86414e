#include "agmio/oracles.hpp"

#include "agmio/contract_check.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>

using namespace agmio;

namespace {

Vector vec(std::initializer_list<double> v) {
  Vector x(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double t : v) x[i++] = t;
  return x;
}

}  // namespace

TEST_CASE("effective smoothness L(delta)") {
  CHECK(holder_l_of_delta({1.0, 3.5}, 0.01) == 3.5);
  CHECK(holder_l_of_delta({1.0, 3.5}, 10.0) == 3.5);
  CHECK(holder_l_of_delta({0.0, 1.0}, 2.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(holder_l_of_delta({1.0 / 3.0, 2.0}, 0.5) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK_THROWS_AS(holder_l_of_delta({0.5, 1.0}, 0.0), std::invalid_argument);

  SUBCASE("nonincreasing in delta, log-affine with slope -(1-nu)/(1+nu)") {
    HolderParams p{0.4, 1.7};
    double prev = std::numeric_limits<double>::infinity();
    for (double d : {1e-4, 1e-2, 1.0}) {
      double l = holder_l_of_delta(p, d);
      CHECK(l <= prev);
      prev = l;
    }
    double slope = (std::log(holder_l_of_delta(p, 1e-2)) - std::log(holder_l_of_delta(p, 1e-4))) /
                   (std::log(1e-2) - std::log(1e-4));
    CHECK(slope == doctest::Approx(-(1.0 - p.nu) / (1.0 + p.nu)).epsilon(1e-9));
  }
}

TEST_CASE("Hoelder parameters from the inner-max reduction") {
  auto p1 = holder_params_from_inner_max(2.0, 1.0, 1.0);
  CHECK(p1.nu == 1.0);
  CHECK(p1.l_nu == 1.0);

  auto p2 = holder_params_from_inner_max(3.0, 4.0, 2.0);
  CHECK(p2.nu == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(p2.l_nu == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  auto p3 = holder_params_from_inner_max(2.0, 2.0, 3.0);
  CHECK(p3.nu == 1.0);
  CHECK(p3.l_nu == doctest::Approx(4.5).epsilon(1e-12));

  CHECK_THROWS_AS(holder_params_from_inner_max(1.5, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("exact oracle") {
  auto f = [](const Vector& x) { return 0.5 * x.squaredNorm(); };
  auto grad = [](const Vector& x) { return x; };
  auto set = FeasibleSet::box(vec({-2, -2}), vec({2, 2}));
  ExactOracle oracle(2, f, grad, set);

  auto a = oracle.query(vec({1, 0}), 0.123);
  CHECK(a.f_approx == 0.5);
  CHECK(a.g_approx == vec({1, 0}));
  CHECK(a.delta_u_bound == 0.0);
  CHECK(a.delta_c_used == 0.123);

  CHECK_THROWS_AS(oracle.query(vec({5, 0}), 0.1), std::domain_error);
  CHECK_THROWS_AS(oracle.query(vec({1, 0}), 0.0), std::invalid_argument);
}

TEST_CASE("noise wrapped oracle") {
  auto f = [](const Vector& x) { return 0.5 * x.squaredNorm(); };
  auto grad = [](const Vector& x) { return x; };
  auto set = FeasibleSet::box(vec({-1.0}), vec({1.0}));  // l2 diameter 2
  auto base = std::make_shared<ExactOracle>(1, f, grad, set);
  const double inf = std::numeric_limits<double>::infinity();

  SUBCASE("zero budgets reproduce the exact oracle") {
    auto oracle = make_noise_wrapped_oracle(base, {0, 0}, {0, 0}, set, NormKind::l2, 7);
    auto a = oracle->query(vec({0.5}), 0.01);
    CHECK(a.f_approx == 0.125);
    CHECK(a.g_approx == vec({0.5}));
    CHECK(a.delta_u_bound == 0.0);
  }

  SUBCASE("uncontrolled combination rule delta_u = du1 + du2 * D") {
    auto oracle = make_noise_wrapped_oracle(base, {0, 0}, {0, 0.1}, set, NormKind::l2, 7);
    CHECK(oracle->delta_u() == doctest::Approx(0.2).epsilon(1e-15));
    auto a = oracle->query(vec({0.25}), 0.01);
    CHECK(a.delta_u_bound == doctest::Approx(0.2).epsilon(1e-15));
  }

  SUBCASE("value noise respects the requested budget") {
    auto oracle = make_noise_wrapped_oracle(base, {inf, 0}, {inf, 0}, set, NormKind::l2, 13);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int t = 0; t < 1000; ++t) {
      Vector x = vec({u(rng)});
      double delta_c = 1e-3 + 0.1 * std::abs(u(rng));
      auto a = oracle->query(x, delta_c);
      CHECK(std::abs(a.f_approx - f(x)) <= delta_c + 1e-15);
      CHECK(a.delta_c_used <= delta_c + 1e-15);
      CHECK(a.delta_c_used == doctest::Approx(delta_c).epsilon(1e-12));
    }
  }

  SUBCASE("deterministic per (seed, x, delta_c)") {
    auto oracle = make_noise_wrapped_oracle(base, {inf, 1e-3}, {inf, 1e-3}, set, NormKind::l2, 99);
    auto a = oracle->query(vec({0.3}), 0.01);
    auto b = oracle->query(vec({0.3}), 0.01);
    CHECK(a.f_approx == b.f_approx);
    CHECK(a.g_approx == b.g_approx);
    auto c = oracle->query(vec({0.3}), 0.02);
    CHECK(a.f_approx != c.f_approx);  // different budget, different draw
  }

  SUBCASE("unbounded sets are rejected") {
    CHECK_THROWS_AS(make_noise_wrapped_oracle(base, {0, 0}, {0, 0}, FeasibleSet::whole_space(1),
                                              NormKind::l2, 0),
                    CapabilityError);
  }
}

TEST_CASE("oracle contract check") {
  SUBCASE("exact smooth oracle passes") {
    auto f = [](const Vector& x) { return 0.5 * x.squaredNorm() + x.array().cos().sum(); };
    auto grad = [](const Vector& x) { return Vector(x - x.array().sin().matrix()); };
    auto set = FeasibleSet::box(vec({-3, -3}), vec({3, 3}));
    ExactOracle oracle(2, f, grad, set);
    auto report = oracle_contract_check(oracle, set, [](double) { return 2.0; }, f, NormKind::l2);
    CHECK(report.pass);
    CHECK(report.worst_value_slack >= 0.0);
    CHECK(report.worst_model_slack >= -1e-9);
  }

  SUBCASE("Hoelder oracle with L(delta) passes on the whole space") {
    // f(x) = (2/3)|x|^(3/2): gradient sign(x) sqrt(|x|), nu = 1/2, sign flips
    // cost a factor sqrt(2)
    auto f = [](const Vector& x) { return 2.0 / 3.0 * std::pow(std::abs(x[0]), 1.5); };
    auto grad = [](const Vector& x) {
      return vec({(x[0] >= 0 ? 1.0 : -1.0) * std::sqrt(std::abs(x[0]))});
    };
    HolderParams p{0.5, std::sqrt(2.0)};
    ExactOracle oracle(1, f, grad);
    auto report = oracle_contract_check(
        oracle, FeasibleSet::whole_space(1), [p](double d) { return holder_l_of_delta(p, d); }, f,
        NormKind::l2);
    CHECK(report.pass);
  }

  SUBCASE("adversarial oracle violating the value bound by 10 delta_c fails") {
    auto f = [](const Vector& x) { return 0.5 * x.squaredNorm(); };
    class Adversarial final : public FirstOrderOracle {
     public:
      OracleAnswer query(const Vector& x, double delta_c) const override {
        OracleAnswer a;
        a.f_approx = 0.5 * x.squaredNorm() + 11.0 * delta_c;
        a.g_approx = x;
        a.delta_c_used = delta_c;
        a.delta_u_bound = 0.0;
        return a;
      }
      int dimension() const override { return 2; }
    };
    Adversarial oracle;
    auto report = oracle_contract_check(oracle, FeasibleSet::box(vec({-1, -1}), vec({1, 1})),
                                        [](double) { return 1.0; }, f, NormKind::l2);
    CHECK_FALSE(report.pass);
    CHECK(report.value_violations > 0);
  }
}
