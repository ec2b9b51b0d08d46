// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "oracle.hpp"
#include "spout/error.hpp"
#include "spout/outage.hpp"
#include "spout/region_io.hpp"

using namespace spout;
using std::numbers::pi;

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();
const double noise_only = 1 - std::exp(-0.1);

ChannelParams channel(double alpha, double beta, double snr, double p) {
  return ChannelParams{alpha, beta, snr, p};
}

const ChannelParams baseline = channel(3.2, 1.0, 10.0, 1.0);

// Deficit E[beta / (beta + r^alpha)] against the annulus pdf 2 pi r / |A|.
double annulus_deficit(double r_in, double r_out, double alpha, double beta) {
  auto f = [=](double r) { return 2 * pi * r / (beta + std::pow(r, alpha)) * beta; };
  return oracle::simpson(f, r_in, r_out, 400'000) / (pi * (r_out * r_out - r_in * r_in));
}

}  // namespace

TEST_CASE("conditional outage") {
  CHECK(conditional_outage(channel(3.2, 1, 10, 1), {}) == doctest::Approx(noise_only).epsilon(1e-15));
  CHECK(conditional_outage(channel(3.2, 1, 10, 1), {}) == doctest::Approx(0.095163).epsilon(1e-5));
  const std::vector<double> one{1.0}, two{1.0, 1.0};
  CHECK(conditional_outage(channel(4, 1, inf, 1), one) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(conditional_outage(channel(4, 1, inf, 1), two) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(conditional_outage(channel(4, 1, inf, 0), two) == 0.0);
  const std::vector<double> bad{1.0, 0.0};
  CHECK_THROWS_AS(conditional_outage(channel(4, 1, inf, 1), bad), DomainError);
}

TEST_CASE("channel validation") {
  CHECK_THROWS_AS(channel(2, 1, 10, 1).validate(), DomainError);
  CHECK_THROWS_AS(channel(3, 0, 10, 1).validate(), DomainError);
  CHECK_THROWS_AS(channel(3, 1, 0, 1).validate(), DomainError);
  CHECK_THROWS_AS(channel(3, 1, 10, 1.5).validate(), DomainError);
  CHECK_THROWS_AS(channel(3, 1, 10, -0.1).validate(), DomainError);
  CHECK_NOTHROW(channel(3, 1, inf, 0).validate());
  CHECK(channel(3, 2, inf, 1).noise_term() == 0.0);
}

TEST_CASE("interference factor examples") {
  const Region ring = Annulus(1, 2);
  CHECK(std::abs(interference_factor(channel(4, 1e-12, inf, 1), ring).value - 1) < 1e-9);
  const InterferenceFactor f = interference_factor(channel(4, 1, inf, 1), ring);
  CHECK(f.method == MethodTag::closed_form_annulus);
  CHECK(f.value == doctest::Approx(1 + (pi / 4 - std::atan(4.0)) / 3).epsilon(1e-14));
  CHECK(f.value == doctest::Approx(0.819860).epsilon(1e-6));
  CHECK(std::abs(f.deficit - annulus_deficit(1, 2, 4, 1)) < 1e-12);
  CHECK(f.value + f.deficit == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(interference_factor(channel(4, 1, inf, 1), ring, Method::quadrature()).value ==
        doctest::Approx(f.value).epsilon(1e-12));

  const Region square = MultiPolygon({{{0, 0}, {1, 0}, {1, 1}, {0, 1}}});
  CHECK_THROWS_AS(interference_factor(channel(4, 1, inf, 1), square), UnsupportedOperation);
  CHECK_THROWS_AS(interference_factor(channel(4, 1, inf, 1), square, Method::quadrature()),
                  UnsupportedOperation);
  const InterferenceFactor g = interference_factor(channel(4, 1, inf, 1), square, Method::grid(100'000));
  const InterferenceFactor s =
      interference_factor(channel(4, 1, inf, 1), square, Method::sample(1'000'000, 42));
  CHECK(g.method == MethodTag::grid);
  CHECK(s.method == MethodTag::sampled);
  CHECK(s.diagnostics.std_error > 0);
  CHECK(std::abs(g.value - s.value) < 3 * s.diagnostics.std_error);
}

TEST_CASE("bpp examples") {
  for (const Region& r : {Region(Annulus(0, 2)), Region(RegularPolygon(3, 3.11)),
                          load_region(SPOUT_DATA_DIR "/regions/irregular.json")}) {
    const Method m = r.kind() == RegionKind::multipolygon ? Method::grid(20'000) : Method::closed();
    CHECK(bpp_outage(baseline, r, 0, m).epsilon == doctest::Approx(noise_only).epsilon(1e-15));
    CHECK(bpp_outage(channel(3.2, 1, 10, 0), r, 17, m).epsilon ==
          doctest::Approx(noise_only).epsilon(1e-15));
  }
  const OutageResult one = bpp_outage(channel(4, 1, inf, 1), Annulus(1, 2), 1);
  CHECK(one.epsilon == doctest::Approx((std::atan(4.0) - pi / 4) / 3).epsilon(1e-14));
  CHECK(one.epsilon == doctest::Approx(0.180140).epsilon(1e-5));
  CHECK(one.coverage == 1 - one.epsilon);
}

TEST_CASE("polygon closed form matches the generic integral") {
  std::mt19937_64 gen(4);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 40; ++i) {
    const int L = 3 + static_cast<int>(u(gen) * 10);
    const double r_out = 0.3 + 4 * u(gen);
    const RegularPolygon poly(L, r_out, u(gen) * r_out * std::cos(pi / L) * 0.999);
    const ChannelParams cp = channel(2.01 + 4 * u(gen), 0.1 + 9.9 * u(gen), 10, 1);
    // Independent deficit: Simpson over the inner branch and a sqrt-graded
    // Simpson over the outer branch of the pdf.
    auto f = [&](double r) { return distance_pdf(poly, r) / (1 + std::pow(r, cp.alpha) / cp.beta); };
    const double ref = oracle::simpson(f, poly.r_in(), poly.r_c(), 20'000) +
                       oracle::simpson_sqrt_left(f, poly.r_c(), r_out, 20'000);
    const InterferenceFactor closed = interference_factor(cp, poly);
    CHECK(closed.method == MethodTag::closed_form_polygon);
    CHECK(oracle::rel_diff(closed.deficit, ref) < 1e-6);
    CHECK(oracle::rel_diff(closed.value, 1 - ref) < 1e-6);
    const double quad = interference_factor(cp, poly, Method::quadrature()).value;
    CHECK(oracle::rel_diff(closed.value, quad) < 1e-6);
    // The same outage written through Theta.
    const double th = theta(poly.r_in(), poly.r_c(), r_out, L, cp.alpha, cp.beta).value;
    for (std::size_t m : {1u, 7u}) {
      const double direct = 1 - std::exp(-cp.noise_term()) * std::pow(1 + th / area(poly), m);
      CHECK(std::abs(bpp_outage(cp, poly, m).epsilon - direct) < 1e-12);
    }
    CHECK(std::abs(ppp_outage(cp, poly, 0.7).epsilon -
                   (1 - std::exp(-cp.noise_term() + 0.7 * th))) < 1e-12);
  }
}

TEST_CASE("annulus closed form matches quadrature") {
  std::mt19937_64 gen(6);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 40; ++i) {
    const double r_out = 0.2 + 5 * u(gen);
    const Annulus ring(u(gen) * r_out * 0.95, r_out);
    const ChannelParams cp = channel(2.01 + 4 * u(gen), 0.1 + 9.9 * u(gen), 10, 1);
    const double closed = interference_factor(cp, ring).value;
    CHECK(std::abs(closed - interference_factor(cp, ring, Method::quadrature()).value) < 1e-9);
    CHECK(std::abs((1 - closed) - annulus_deficit(ring.r_in(), r_out, cp.alpha, cp.beta)) < 1e-9);
  }
}

TEST_CASE("polygon tends to the disk") {
  const RegularPolygon poly(4096, 2.0);
  const Annulus disk(0, 2.0);
  for (std::size_t m = 1; m <= 50; ++m) {
    CHECK(std::abs(bpp_outage(baseline, poly, m).epsilon -
                   bpp_outage(baseline, disk, m).epsilon) <= 1e-4);
  }
}

TEST_CASE("monotonicity and range") {
  std::mt19937_64 gen(12);
  std::uniform_real_distribution<double> u(0, 1);
  const std::vector<Region> regions{Annulus(0.2, 2), RegularPolygon(3, 3.1), RegularPolygon(6, 1.5, 0.3)};
  for (int i = 0; i < 30; ++i) {
    const Region& r = regions[i % regions.size()];
    ChannelParams cp = channel(2.1 + 3.9 * u(gen), 0.1 + 5 * u(gen), 1 + 100 * u(gen), u(gen));
    double prev = -1;
    for (std::size_t m = 0; m < 40; ++m) {
      const double e = bpp_outage(cp, r, m).epsilon;
      CHECK((e >= 0 && e <= 1));
      CHECK(e >= prev);
      prev = e;
    }
    double last_b = -1, last_l = -1, last_p = -1;
    for (int k = 0; k < 10; ++k) {
      ChannelParams b = cp;
      b.beta = 0.05 * std::pow(1.8, k);
      const double eb = bpp_outage(b, r, 5).epsilon;
      CHECK(eb >= last_b);
      last_b = eb;
      const double el = ppp_outage(cp, r, 0.3 * k).epsilon;
      CHECK(el >= last_l);
      last_l = el;
      ChannelParams p = cp;
      p.p = k / 9.0;
      const double ep = ppp_outage(p, r, 1.0).epsilon;
      CHECK(ep >= last_p);
      last_p = ep;
    }
  }
}

TEST_CASE("ppp examples") {
  for (const Region& r : {Region(Annulus(0, 2)), Region(RegularPolygon(5, 2))}) {
    CHECK(ppp_outage(baseline, r, 0).epsilon == doctest::Approx(noise_only).epsilon(1e-15));
  }
  const OutageResult d = ppp_outage(channel(4, 1, inf, 1), Annulus(0, 2), 0.5);
  CHECK(d.epsilon == doctest::Approx(1 - std::exp(-0.5 * pi * std::atan(4.0))).epsilon(1e-14));
  CHECK(d.epsilon == doctest::Approx(0.8753).epsilon(1e-4));
  CHECK(ppp_outage(channel(4, 1, inf, 1), Annulus(0, 2), 0.5).epsilon ==
        doctest::Approx(1 - std::exp(pi * 0.5 * phi(2, 4, 1))).epsilon(1e-14));
  CHECK_THROWS_AS(ppp_outage(baseline, Annulus(0, 2), -1), DomainError);
}

TEST_CASE("poisson mixture equals the exponential form") {
  std::mt19937_64 gen(99);
  std::uniform_real_distribution<double> u(0, 1);
  const std::vector<Region> regions{Annulus(0, 2), RegularPolygon(3, 3.1102406031124283),
                                    RegularPolygon(8, 1, 0.5)};
  for (int i = 0; i < 20; ++i) {
    const Region& r = regions[i % regions.size()];
    const ChannelParams cp = channel(2.1 + 3.9 * u(gen), 0.1 + 5 * u(gen), 1 + 50 * u(gen), u(gen));
    const double lambda = 3 * u(gen);
    const InterferenceFactor f = interference_factor(cp, r);
    const double closed = ppp_outage(cp, area(r), f, lambda).epsilon;
    const double mixture = ppp_outage_poisson_sum(cp, area(r), f, lambda).epsilon;
    CHECK(std::abs(closed - mixture) < 1e-9);
  }
  double total = 0;
  for (std::size_t m = 0; m < 60; ++m) total += poisson_pmf(m, 7.5);
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(poisson_pmf(3, 2.0) == doctest::Approx(std::exp(-2.0) * 8 / 6).epsilon(1e-14));
}

TEST_CASE("full-plane limit") {
  CHECK(plane_ppp_outage(baseline, 0).epsilon == doctest::Approx(noise_only).epsilon(1e-15));
  const OutageResult e = plane_ppp_outage(channel(4, 1, inf, 1), 0.1);
  CHECK(e.method == MethodTag::plane);
  CHECK(std::abs(e.epsilon - (1 - std::exp(-2 * pi * pi * 0.1 / 4))) < 1e-12);
  CHECK(std::abs(e.epsilon - 0.389486) < 2e-5);
  CHECK(std::abs(ppp_outage(channel(4, 1, inf, 1), Annulus(0, 50), 0.1).epsilon - e.epsilon) < 1e-3);
  for (double alpha : {3.2, 4.0}) {
    const ChannelParams cp = channel(alpha, 1, inf, 1);
    CHECK(std::abs(ppp_outage(cp, Annulus(0, 200), 0.1).epsilon -
                   plane_ppp_outage(cp, 0.1).epsilon) <= 1e-3);
  }
  CHECK_THROWS_AS(plane_ppp_outage(channel(2, 1, inf, 1), 0.1), DomainError);
}
