#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "collapse/errors.hpp"
#include "collapse/specfun.hpp"

#include <cmath>
#include <vector>

using namespace collapse;
namespace sf = collapse::specfun;

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Independent Maclaurin oracle for erf, alternating series summed as the
// all-positive incomplete-gamma form; good to ~1e-14 for |x| <= 2.
double erf_series(double x) {
    const double x2 = x * x;
    double term = 1.0, sum = 1.0;
    for (int n = 1; n < 200; n++) {
        term *= 2.0 * x2 / (2.0 * n + 1.0);
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return 2.0 * x * std::exp(-x2) / std::sqrt(kPi) * sum;
}

}  // namespace

TEST_CASE("log_gamma reference values") {
    CHECK(sf::log_gamma(1.0) == 0.0);
    CHECK(sf::log_gamma(2.0) == 0.0);
    CHECK(sf::log_gamma(0.5) == doctest::Approx(0.57236494292470008707).epsilon(1e-14));
    CHECK(sf::log_gamma(5.0) == doctest::Approx(3.1780538303479456196).epsilon(1e-14));
    // mpmath anchors across the supported range
    CHECK(sf::log_gamma(1e-6) == doctest::Approx(13.815509980749431669).epsilon(1e-14));
    CHECK(sf::log_gamma(10.3) == doctest::Approx(13.482036786138356971).epsilon(1e-14));
    CHECK(sf::log_gamma(100.0) == doctest::Approx(359.13420536957539878).epsilon(1e-14));
    CHECK(sf::log_gamma(1e4) == doctest::Approx(82099.717496442377273).epsilon(1e-14));
    CHECK(sf::log_gamma(1e6) == doctest::Approx(12815504.56914761166).epsilon(1e-14));
    CHECK_THROWS_AS(sf::log_gamma(0.0), domain_error);
    CHECK_THROWS_AS(sf::log_gamma(-1.5), domain_error);
}

TEST_CASE("log_gamma recurrence property") {
    // lgamma(x+1) = lgamma(x) + ln x on a spread of scales
    for (double x : {1e-5, 0.1, 0.7, 3.3, 12.0, 400.0, 7e5}) {
        CHECK(sf::log_gamma(x + 1.0) ==
              doctest::Approx(sf::log_gamma(x) + std::log(x)).epsilon(5e-14));
    }
}

TEST_CASE("beta_complete") {
    CHECK(sf::beta_complete(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(sf::beta_complete(1.5, 0.5) == doctest::Approx(0.5 * kPi).epsilon(1e-14));
    // from tau(-4): B(5/6,1/2) = sqrt(6) * tau(-4)
    CHECK(sf::beta_complete(5.0 / 6.0, 0.5) ==
          doctest::Approx(2.2405026006665604393).epsilon(1e-14));
    CHECK(sf::beta_complete(5.0 / 6.0, 0.5) ==
          doctest::Approx(std::sqrt(6.0) * 0.91468136).epsilon(1e-7));
    CHECK_THROWS_AS(sf::beta_complete(0.0, 1.0), domain_error);
    CHECK_THROWS_AS(sf::beta_complete(1.0, -2.0), domain_error);
}

TEST_CASE("log_beta asymmetric arguments (Stirling branch)") {
    CHECK(sf::log_beta(1e4, 0.5) == doctest::Approx(-4.0327927430633964893).epsilon(1e-14));
    CHECK(sf::log_beta(1e6, 0.5) == doctest::Approx(-6.335390211057436965).epsilon(1e-14));
    CHECK(sf::log_beta(1e7, 0.5) == doctest::Approx(-7.486682870054459807).epsilon(1e-14));
    // symmetry of the arguments
    CHECK(sf::log_beta(0.5, 1e6) == sf::log_beta(1e6, 0.5));
    // both methods agree at the same argument near the branch switch
    const double q = 30.000001;
    CHECK(sf::log_beta(q, 0.5) ==
          doctest::Approx(sf::log_gamma(0.5) + sf::log_gamma(q) - sf::log_gamma(q + 0.5))
              .epsilon(1e-12));
}

TEST_CASE("reg_inc_beta endpoints and closed form") {
    CHECK(sf::reg_inc_beta(0.0, 2.0, 3.0) == 0.0);
    CHECK(sf::reg_inc_beta(1.0, 2.0, 3.0) == 1.0);
    // I(x;1,1/2) = 1 - sqrt(1-x)
    for (double x : {0.1, 0.25, 0.5, 0.75, 0.9, 0.99}) {
        CHECK(sf::reg_inc_beta(x, 1.0, 0.5) ==
              doctest::Approx(1.0 - std::sqrt(1.0 - x)).epsilon(1e-13));
    }
    // mpmath anchors
    CHECK(sf::reg_inc_beta(0.3, 5.0 / 6.0, 0.5) ==
          doctest::Approx(0.21217915176827731746).epsilon(1e-13));
    CHECK(sf::reg_inc_beta(0.9, 5.0 / 6.0, 0.5) ==
          doctest::Approx(0.71609097235807362033).epsilon(1e-13));
    CHECK(sf::reg_inc_beta(0.5, 1.5, 0.5) == doctest::Approx(0.18169011381620932846).epsilon(1e-13));
    CHECK(sf::reg_inc_beta(0.2, 10.0, 0.5) ==
          doctest::Approx(1.9949824936130936202e-8).epsilon(1e-12));
    CHECK(sf::reg_inc_beta(0.99, 10.0, 0.5) ==
          doctest::Approx(0.65792817515678447032).epsilon(1e-13));
    CHECK_THROWS_AS(sf::reg_inc_beta(-0.1, 1.0, 1.0), domain_error);
    CHECK_THROWS_AS(sf::reg_inc_beta(1.1, 1.0, 1.0), domain_error);
}

TEST_CASE("reg_inc_beta monotone in x") {
    for (double a : {5.0 / 6.0, 1.0, 1.5, 2.0, 10.0}) {
        double prev = 0.0;
        for (int i = 1; i <= 300; i++) {
            const double x = static_cast<double>(i) / 301;
            const double v = sf::reg_inc_beta(x, a, 0.5);
            CHECK(v > prev);
            prev = v;
        }
    }
}

TEST_CASE("reg_inc_beta reflection identity") {
    for (double a : {0.3, 5.0 / 6.0, 1.5, 4.0}) {
        for (double b : {0.5, 1.0, 2.5}) {
            for (double x : {0.05, 0.3, 0.62, 0.97}) {
                CHECK(sf::reg_inc_beta(x, a, b) ==
                      doctest::Approx(1.0 - sf::reg_inc_beta(1.0 - x, b, a)).epsilon(1e-13));
            }
        }
    }
}

TEST_CASE("inc_beta") {
    CHECK(sf::inc_beta(1.0, 1.5, 0.5) == doctest::Approx(0.5 * kPi).epsilon(1e-14));
    CHECK(sf::inc_beta(1.0, 1.5, 0.5) == sf::beta_complete(1.5, 0.5));  // bit-exact at x=1
    CHECK(sf::inc_beta(0.0, 2.0, 2.0) == 0.0);
    // B(x;1,1/2) = 2(1 - sqrt(1-x))
    CHECK(sf::inc_beta(0.75, 1.0, 0.5) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("inv_reg_inc_beta endpoints, closed form and anchors") {
    CHECK(sf::inv_reg_inc_beta(0.0, 2.0, 0.5) == 0.0);
    CHECK(sf::inv_reg_inc_beta(1.0, 2.0, 0.5) == 1.0);
    // inverse of I(x;1,1/2) = 1 - sqrt(1-x): Q(p) = 1-(1-p)^2
    CHECK(sf::inv_reg_inc_beta(0.5, 1.0, 0.5) == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(sf::inv_reg_inc_beta(0.3, 5.0 / 6.0, 0.5) ==
          doctest::Approx(0.43224781396711976473).epsilon(1e-12));
    CHECK(sf::inv_reg_inc_beta(0.7, 1.5, 0.5) ==
          doctest::Approx(0.94341194506322239654).epsilon(1e-12));
    CHECK(sf::inv_reg_inc_beta(1e-8, 1.5, 0.5) ==
          doctest::Approx(8.2187677891554524993e-6).epsilon(1e-10));
    CHECK_THROWS_AS(sf::inv_reg_inc_beta(-0.01, 1.0, 0.5), domain_error);
    CHECK_THROWS_AS(sf::inv_reg_inc_beta(1.01, 1.0, 0.5), domain_error);
}

TEST_CASE("inv_reg_inc_beta roundtrip gamma=-4 parameters") {
    for (double x : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
        const double p = sf::reg_inc_beta(x, 5.0 / 6.0, 0.5);
        CHECK(sf::inv_reg_inc_beta(p, 5.0 / 6.0, 0.5) == doctest::Approx(x).epsilon(1e-10));
    }
}

TEST_CASE("inverse pair residual over p grid") {
    for (double a : {5.0 / 6.0, 1.0, 1.5, 2.0, 10.0}) {
        for (int i = 0; i <= 500; i++) {
            const double p = static_cast<double>(i) / 500;
            const double x = sf::inv_reg_inc_beta(p, a, 0.5);
            CHECK(std::fabs(sf::reg_inc_beta(x, a, 0.5) - p) <= 1e-11);
        }
    }
}

TEST_CASE("inv_reg_inc_beta monotone in p") {
    for (double a : {5.0 / 6.0, 1.5, 10.0}) {
        double prev = -1.0;
        for (int i = 0; i <= 200; i++) {
            const double p = static_cast<double>(i) / 200;
            const double x = sf::inv_reg_inc_beta(p, a, 0.5);
            CHECK(x >= prev);
            prev = x;
        }
    }
}

TEST_CASE("inv_reg_inc_beta extreme first parameter (critical band regime)") {
    // a up to 1e4 is contractual; at a = 1e4 the root sits within ~1e-10
    // of x = 1 for large p, where one ulp of x already moves I by ~7e-10,
    // so the attainable residual is looser there.
    for (double a : {0.25, 100.0, 1e4}) {
        for (double p : {1e-6, 0.01, 0.3, 0.5, 0.77, 0.999}) {
            const double x = sf::inv_reg_inc_beta(p, a, 0.5);
            CHECK(x >= 0.0);
            CHECK(x <= 1.0);
            CHECK(std::fabs(sf::reg_inc_beta(x, a, 0.5) - p) <= (a > 100.0 ? 2e-9 : 1e-11));
        }
    }
    // a = 1e7 is exercised by the near-critical solution branch: the mass
    // sits within ~1e-7 of x = 1, where one ulp of x moves I by ~5e-7, so
    // the attainable residual is representation-limited (r = Q^eta itself
    // stays accurate to ~1e-9).
    for (double p : {1e-6, 0.01, 0.3, 0.5, 0.77, 0.999}) {
        const double x = sf::inv_reg_inc_beta(p, 1e7, 0.5);
        CHECK(std::fabs(sf::reg_inc_beta(x, 1e7, 0.5) - p) <= 1e-6);
    }
}

TEST_CASE("erf against independent series oracle and anchors") {
    for (int i = 0; i <= 100; i++) {
        const double x = -2.0 + 4.0 * i / 100;
        CHECK(sf::erf(x) == doctest::Approx(erf_series(x)).epsilon(2e-14));
    }
    CHECK(sf::erf(0.0) == 0.0);
    CHECK(sf::erf(1.0) == doctest::Approx(0.84270079294971486934).epsilon(1e-14));
    CHECK(sf::erf(2.0) == doctest::Approx(0.99532226501895273416).epsilon(1e-14));
    CHECK(sf::erf(3.0) == doctest::Approx(0.99997790950300141456).epsilon(1e-14));
    CHECK(sf::erf(0.1) == doctest::Approx(0.1124629160182848922).epsilon(1e-14));
    CHECK(sf::erf(5.0) == doctest::Approx(0.99999999999846254021).epsilon(1e-14));
    CHECK(sf::erf(10.0) == 1.0);   // saturates
    CHECK(sf::erf(-10.0) == -1.0);
}

TEST_CASE("erf is odd") {
    for (double x : {0.01, 0.3, 0.9, 1.7, 4.2}) CHECK(sf::erf(-x) == -sf::erf(x));
}

TEST_CASE("inv_erf") {
    CHECK(sf::inv_erf(0.0) == 0.0);
    CHECK(sf::inv_erf(0.5) == doctest::Approx(0.47693627620446987338).epsilon(1e-13));
    CHECK(sf::inv_erf(0.999) == doctest::Approx(2.3267537655135246706).epsilon(1e-13));
    CHECK(sf::inv_erf(-0.25) == doctest::Approx(-0.22531205501217810473).epsilon(1e-13));
    CHECK(sf::inv_erf(sf::erf(1.0)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(sf::inv_erf(1.0), domain_error);
    CHECK_THROWS_AS(sf::inv_erf(-1.0), domain_error);
    CHECK_THROWS_AS(sf::inv_erf(1.5), domain_error);
}

TEST_CASE("erf / inv_erf roundtrip on [-0.999, 0.999]") {
    for (int i = 0; i <= 400; i++) {
        const double y = -0.999 + 2 * 0.999 * i / 400;
        CHECK(sf::erf(sf::inv_erf(y)) == doctest::Approx(y).epsilon(1e-11));
    }
}

TEST_CASE("jacobi_cn basics") {
    CHECK(sf::jacobi_cn(0.0, 0.5) == 1.0);
    // degenerate parameter: cn(u|0) = cos u
    for (double u : {0.1, 0.9, 2.0, 5.5}) {
        CHECK(sf::jacobi_cn(u, 0.0) == doctest::Approx(std::cos(u)).epsilon(1e-12));
    }
    // m = 1: cn = sech
    CHECK(sf::jacobi_cn(1.3, 1.0) == doctest::Approx(1.0 / std::cosh(1.3)).epsilon(1e-12));
    CHECK_THROWS_AS(sf::jacobi_cn(1.0, -0.1), domain_error);
    CHECK_THROWS_AS(sf::jacobi_cn(1.0, 1.1), domain_error);
}

TEST_CASE("jacobi_cn mpmath anchors, m = 1/2 and m = 0.9") {
    CHECK(sf::jacobi_cn(0.5, 0.5) == doctest::Approx(0.88226639489044028649).epsilon(1e-12));
    CHECK(sf::jacobi_cn(1.0, 0.5) == doctest::Approx(0.59597656767214067402).epsilon(1e-12));
    CHECK(sf::jacobi_cn(1.5, 0.5) == doctest::Approx(0.25027025926055160724).epsilon(1e-12));
    CHECK(sf::jacobi_cn(0.3, 0.9) == doctest::Approx(0.95650008482778259057).epsilon(1e-12));
    CHECK(sf::jacobi_cn(2.2, 0.9) == doctest::Approx(0.12183256915257757986).epsilon(1e-11));
    // first zero of cn(.|1/2) is K(1/2) = tau(3)
    CHECK(std::fabs(sf::jacobi_cn(1.85407468, 0.5)) <= 1e-7);
    CHECK(sf::elliptic_k(0.5) == doctest::Approx(1.8540746773013719184).epsilon(1e-14));
}

TEST_CASE("jacobi_cn periodicity and symmetry") {
    const double period = 4.0 * sf::elliptic_k(0.5);
    for (double u : {0.2, 1.1, 2.9}) {
        CHECK(sf::jacobi_cn(u + period, 0.5) == doctest::Approx(sf::jacobi_cn(u, 0.5)).epsilon(1e-11));
        CHECK(sf::jacobi_cn(-u, 0.5) == doctest::Approx(sf::jacobi_cn(u, 0.5)).epsilon(1e-13));
    }
}

TEST_CASE("accuracy policy is honored") {
    const sf::AccuracyPolicy loose{1e-6, 200};
    // a loose policy still yields a valid inverse, just less precise
    const double x = sf::inv_reg_inc_beta(0.4, 1.5, 0.5, loose);
    CHECK(std::fabs(sf::reg_inc_beta(x, 1.5, 0.5) - 0.4) <= 1e-6);
    const sf::AccuracyPolicy tiny_budget{1e-14, 1};
    CHECK_THROWS_AS(sf::reg_inc_beta(0.5, 200.0, 150.5, tiny_budget), convergence_error);
}
