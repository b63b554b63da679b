#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "dpp/special_functions.hpp"
#include "oracles.hpp"

using namespace dpp;

namespace {

struct AiryAnchor {
  double x, ai, aip;
};

// High-precision reference values (30-digit arithmetic, rounded to double).
constexpr AiryAnchor kAiryAnchors[] = {
    {-30.0, -0.08796818845684216, 1.2286206026374851},
    {-12.5, -0.2762745613811602, -0.41933133041950516},
    {-8.0, -0.05270505035638620, 0.93556093819830655},
    {-6.5, -0.2380203019971158, -0.67495249251320217},
    {-5.0, 0.3507610090241143, 0.32719281855444314},
    {-2.0, 0.2274074282016856, 0.61825902074169104},
    {-1.0, 0.5355608832923521, -0.010160567116645209},
    {0.0, 0.35502805388781724, -0.25881940379280680},
    {0.5, 0.23169360648083349, -0.22491053266468389},
    {1.0, 0.13529241631288141, -0.15914744129679321},
    {2.0, 0.034924130423274379, -0.053090384433653632},
    {3.5, 0.0025840987869896350, -0.0050044139679525828},
    {5.0, 1.08344428136074417e-4, -2.47413890868462476e-4},
    {6.5, 2.79588234320491359e-6, -7.23193146660179256e-6},
    {8.0, 4.69220761609923163e-8, -1.34143929790678657e-7},
    {11.0, 4.22627586496035959e-12, -1.41114412466285173e-11},
    {15.0, 2.16496252073799230e-18, -8.42056795401777277e-18},
    {20.0, 1.69167286867054031e-27, -7.58639162574835496e-27},
};

}  // namespace

TEST_CASE("airy matches high-precision anchors") {
  for (const auto& a : kAiryAnchors) {
    const AiryPair p = airy(a.x);
    if (a.x <= 0.0) {
      // Oscillatory side: absolute accuracy.
      CHECK(std::abs(p.ai - a.ai) <= 1e-11);
      CHECK(std::abs(p.aip - a.aip) <= 1e-11);
    } else {
      // Decaying side: relative accuracy down to 1e-27 magnitudes.
      CHECK(std::abs(p.ai - a.ai) <= 1e-10 * std::abs(a.ai));
      CHECK(std::abs(p.aip - a.aip) <= 1e-10 * std::abs(a.aip));
    }
  }
}

TEST_CASE("airy agrees with the Maclaurin oracle on [-6, 4.5]") {
  for (double x = -6.0; x <= 4.5 + 1e-12; x += 0.125) {
    const AiryPair p = airy(x);
    const AiryPair q = oracle::airy_maclaurin(x);
    CHECK(std::abs(p.ai - q.ai) <= 2e-11);
    CHECK(std::abs(p.aip - q.aip) <= 2e-11);
  }
}

TEST_CASE("airy is continuous across evaluation-branch boundaries") {
  for (double b : {-8.0, -5.5, 4.0, 9.0}) {
    const AiryPair lo = airy(b - 1e-7);
    const AiryPair hi = airy(b + 1e-7);
    // The derivative bounds |Ai'| <= 1.3, |Ai''| = |x Ai| <= 9*0.4 near these
    // points, so a 2e-7 argument gap moves values by < 1e-6.
    CHECK(std::abs(lo.ai - hi.ai) <= 1e-6);
    CHECK(std::abs(lo.aip - hi.aip) <= 1e-5);
  }
}

TEST_CASE("airy first zero and domain guard") {
  CHECK(std::abs(airy_ai(-2.3381074104597670)) <= 1e-11);
  CHECK(airy_ai(-2.33) > 0.0);
  CHECK(airy_ai(-2.34) < 0.0);
  CHECK_THROWS_AS(airy(-40.5), std::domain_error);
  CHECK_THROWS_AS(airy(20.5), std::domain_error);
  CHECK(airy_ai_prime(0.0) == doctest::Approx(-0.25881940379280680).epsilon(1e-14));
}

TEST_CASE("regularized lower gamma for integer first argument") {
  CHECK(regularized_lower_gamma(1, 0.0) == 0.0);
  CHECK(std::abs(regularized_lower_gamma(1, 1.0) - 0.6321205588285577) <= 1e-14);
  CHECK(std::abs(regularized_lower_gamma(2, 1.0) - 0.26424111765711533) <= 1e-14);
  // Series branch (x < a+1) and complement branch (x >= a+1).
  CHECK(std::abs(regularized_lower_gamma(50, 50.0) - 0.5188083154720433) <= 1e-12);
  CHECK(std::abs(regularized_lower_gamma(10, 30.0) - 0.9999928782491372) <= 1e-12);
  CHECK(std::abs(regularized_lower_gamma(3, 100.0) - 1.0) <= 1e-14);
  // Monotone in x, bounded in [0,1].
  double prev = -1.0;
  for (double x = 0.0; x <= 12.0; x += 0.5) {
    const double p = regularized_lower_gamma(4, x);
    CHECK(p >= prev);
    CHECK(p >= 0.0);
    CHECK(p <= 1.0);
    prev = p;
  }
  CHECK_THROWS_AS(regularized_lower_gamma(0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(regularized_lower_gamma(-2, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(regularized_lower_gamma(2, -0.5), std::invalid_argument);
}

TEST_CASE("gaussian density and distribution function") {
  CHECK(gaussian_pdf(0.0) == doctest::Approx(0.39894228040143268).epsilon(1e-15));
  CHECK(gaussian_pdf(1.0) == gaussian_pdf(-1.0));
  CHECK(gaussian_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(std::abs(gaussian_cdf(1.96) - 0.97500210485177957) <= 1e-15);
  for (double x : {0.5, 1.0, 2.0, 3.0})
    CHECK(std::abs(gaussian_cdf(x) + gaussian_cdf(-x) - 1.0) <= 1e-15);
  for (double x = -3.0; x <= 3.0 + 1e-12; x += 0.25)
    CHECK(std::abs(gaussian_cdf(x) - oracle::gaussian_cdf_series(x)) <= 1e-13);
  CHECK(gaussian_cdf(-40.0) >= 0.0);
  CHECK(gaussian_cdf(40.0) == doctest::Approx(1.0).epsilon(1e-15));
}
