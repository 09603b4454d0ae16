#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <random>

#include <locc/majorization.hpp>
#include <locc/propositions.hpp>

using locc::appendix_a1;
using locc::appendix_a2;
using locc::appendix_b1;
using locc::classify_regimes;
using locc::convertible_iff;
using locc::criterion_dominates;
using locc::endpoint_interval;
using locc::majorizes;
using locc::min_alpha2;
using locc::rational;
using locc::regime_tag;
using locc::regime_table;
using locc::scenario;
using locc::superposition_schmidt;
using locc::tail_bound;
using locc::thresholds;
using locc::to_string;

namespace {

const scenario<rational> worked_q(rational(9, 10), rational(4, 5),
                                  rational(7, 10), rational(3, 5));
const scenario<double> worked_d(0.9, 0.8, 0.7, 0.6);

// The scenario whose k=3 deficit shows the bare ratio criterion is not
// sufficient; the tail bound must gate it.
const scenario<rational> deficit_q(rational(4, 5), rational(79, 100),
                                   rational(37, 50), rational(101, 200));

// Four strictly separated branch parameters in (1/2, 1), or u[0] <= u[3].
std::array<double, 4> draw_chain(std::mt19937& rng) {
  std::uniform_real_distribution<double> upper(0.505, 0.995);
  std::array<double, 4> u;
  for (double& x : u) x = upper(rng);
  std::sort(u.begin(), u.end(), std::greater<>());
  return u;
}

bool well_separated(const std::array<double, 4>& u) {
  return u[0] - u[1] > 1e-4 && u[1] - u[2] > 1e-4 && u[2] - u[3] > 1e-4;
}

}  // namespace

TEST_CASE("regime tags have stable names") {
  CHECK(std::string(to_string(regime_tag::r1)) == "R1");
  CHECK(std::string(to_string(regime_tag::r2)) == "R2");
  CHECK(std::string(to_string(regime_tag::r3)) == "R3");
}

TEST_CASE("thresholds evaluate exactly on rational scenarios") {
  const auto thr = thresholds(worked_q);
  CHECK(thr.t_low == rational(2, 3));
  CHECK(thr.t_high == rational(4, 5));
  CHECK(thr.a == rational(8, 9));

  const scenario<double> s(0.85, 0.8, 0.75, 0.7);
  const auto thr_d = thresholds(s);
  CHECK(thr_d.t_low == Catch::Approx(0.571428571428571).epsilon(1e-12));
  CHECK(thr_d.t_high == Catch::Approx(0.715789473684211).epsilon(1e-12));
  CHECK(thr_d.a == Catch::Approx(0.842105263157895).epsilon(1e-12));
}

TEST_CASE("threshold ordering invariants hold across random scenarios") {
  // Exact arithmetic on dyadic rationals converted from double draws, so
  // boundary draws cannot flip a comparison.
  std::mt19937 rng(31337);
  int tested = 0;
  for (int i = 0; i < 4000 && tested < 2000; ++i) {
    const auto u = draw_chain(rng);
    if (!well_separated(u)) continue;
    const scenario<rational> s{rational(u[0]), rational(u[1]), rational(u[2]),
                               rational(u[3])};
    const auto thr = thresholds(s);
    REQUIRE(thr.t_low > rational(1, 2));
    REQUIRE(thr.a > thr.t_high);
    REQUIRE(thr.t_high < s.xi1());

    // A regime's alpha1 interval is nonempty whenever the regime applies,
    // and the first window applies exactly when its interval is nonempty.
    const auto table = regime_table(s);
    for (const auto& r : table) {
      if (r.applicable) REQUIRE_FALSE(r.alpha1_interval.empty());
    }
    REQUIRE(table[0].applicable == !table[0].alpha1_interval.empty());
    REQUIRE(table[0].alpha1_interval.empty() == (s.xi2() < thr.t_high));

    // Every admissible xi2 lands in at least one window.
    REQUIRE_FALSE(classify_regimes(s).empty());
    ++tested;
  }
  REQUIRE(tested == 2000);
}

TEST_CASE("regime classification matches the worked scenarios") {
  SECTION("middle window") {
    const auto regimes = classify_regimes(worked_q);
    REQUIRE(regimes.size() == 1);
    CHECK(regimes[0].tag == regime_tag::r2);
    CHECK(regimes[0].alpha1_interval.lo == rational(7, 10));
    CHECK(regimes[0].alpha1_interval.hi == rational(8, 9));
    CHECK(regimes[0].alpha1_interval.lo_closed);
    CHECK_FALSE(regimes[0].alpha1_interval.hi_closed);
    CHECK(regimes[0].alpha1_interval.str() == "[7/10, 8/9)");
  }
  SECTION("upper window") {
    const scenario<double> s(0.85, 0.8, 0.75, 0.7);
    const auto regimes = classify_regimes(s);
    REQUIRE(regimes.size() == 1);
    CHECK(regimes[0].tag == regime_tag::r1);
    CHECK(regimes[0].alpha1_interval.lo ==
          Catch::Approx(0.842105263157895).epsilon(1e-12));
    CHECK(regimes[0].alpha1_interval.hi ==
          Catch::Approx(0.882352941176471).epsilon(1e-12));
  }
  SECTION("lower window") {
    const scenario<rational> s(rational(9, 10), rational(4, 5),
                               rational(3, 5), rational(11, 20));
    const auto regimes = classify_regimes(s);
    REQUIRE(regimes.size() == 1);
    CHECK(regimes[0].tag == regime_tag::r3);
    CHECK(regimes[0].alpha1_interval.lo == rational(3, 5));
    CHECK(regimes[0].alpha1_interval.hi == rational(2, 3));
    CHECK(regimes[0].alpha1_interval.lo_closed);
    CHECK(regimes[0].alpha1_interval.hi_closed);
  }
}

TEST_CASE("regime windows can overlap and report every claim") {
  // t_low > t_high inverts the middle window; the outer two then overlap.
  const scenario<rational> s(rational(11, 20), rational(51, 100),
                             rational(101, 200), rational(501, 1000));
  const auto thr = thresholds(s);
  CHECK(thr.t_low == rational(49, 94));
  CHECK(thr.t_high == rational(187, 640));
  CHECK(thr.a == rational(17, 32));
  REQUIRE(thr.t_low > thr.t_high);

  const auto regimes = classify_regimes(s);
  REQUIRE(regimes.size() == 2);
  CHECK(regimes[0].tag == regime_tag::r1);
  CHECK(regimes[1].tag == regime_tag::r3);
  CHECK(regimes[0].alpha1_interval.contains(rational(3, 4)));
  CHECK(regimes[1].alpha1_interval.contains(rational(51, 100)));
}

TEST_CASE("endpoint intervals respect openness and tolerance") {
  SECTION("rational membership is exact") {
    const endpoint_interval<rational> half_open{rational(1, 2), rational(3, 4),
                                                true, false};
    CHECK(half_open.contains(rational(1, 2)));
    CHECK(half_open.contains(rational(5, 8)));
    CHECK_FALSE(half_open.contains(rational(3, 4)));
    CHECK_FALSE(half_open.contains(rational(1, 4)));
    CHECK(half_open.str() == "[1/2, 3/4)");
  }
  SECTION("real membership cushions closed ends and guards open ends") {
    const endpoint_interval<double> closed{0.5, 0.75, true, true};
    CHECK(closed.contains(0.5 - 1e-13));
    CHECK(closed.contains(0.75 + 1e-13));
    CHECK_FALSE(closed.contains(0.75 + 1e-6));

    const endpoint_interval<double> open{0.5, 0.75, false, false};
    CHECK_FALSE(open.contains(0.5 + 1e-13));
    CHECK(open.contains(0.5 + 1e-6));
    CHECK_FALSE(open.contains(0.75 - 1e-13));
  }
  SECTION("emptiness follows endpoint flags") {
    const endpoint_interval<rational> inverted{rational(3, 4), rational(1, 2),
                                               true, true};
    const endpoint_interval<rational> point{rational(1, 2), rational(1, 2),
                                            true, true};
    const endpoint_interval<rational> half_point{rational(1, 2),
                                                 rational(1, 2), true, false};
    CHECK(inverted.empty());
    CHECK_FALSE(point.empty());
    CHECK(half_point.empty());
  }
  SECTION("intersection merges endpoints and openness") {
    const endpoint_interval<rational> a{rational(1, 4), rational(3, 4), true,
                                        true};
    const endpoint_interval<rational> b{rational(1, 2), rational(1), true,
                                        false};
    const auto ab = a.intersect(b);
    CHECK(ab.lo == rational(1, 2));
    CHECK(ab.hi == rational(3, 4));
    CHECK(ab.lo_closed);
    CHECK(ab.hi_closed);

    const endpoint_interval<rational> c{rational(1, 2), rational(3, 4), true,
                                        false};
    const endpoint_interval<rational> d{rational(1, 4), rational(3, 4), false,
                                        true};
    const auto cd = c.intersect(d);
    CHECK(cd.str() == "[1/2, 3/4)");

    const endpoint_interval<rational> e{rational(1, 2), rational(1), true,
                                        true};
    const endpoint_interval<rational> f{rational(1, 2), rational(1), false,
                                        true};
    const auto ef = e.intersect(f);
    CHECK_FALSE(ef.lo_closed);
    CHECK(ef.hi_closed);
  }
}

TEST_CASE("minimum alpha2 bound tracks the ratio") {
  SECTION("interior point") {
    const auto bound = min_alpha2(worked_q, rational(3, 4));
    CHECK(bound.infimum == rational(27, 28));
    CHECK(bound.attainable);
    CHECK(bound.feasible);
  }
  SECTION("alpha1 at xi2 over xi1 pushes the bound to one") {
    const auto bound = min_alpha2(worked_q, rational(7, 9));
    CHECK(bound.infimum == rational(1));
    CHECK(bound.attainable);
    CHECK(bound.feasible);
  }
  SECTION("alpha1 at xi2 lands the bound on xi1") {
    const auto bound = min_alpha2(worked_q, rational(7, 10));
    CHECK(bound.infimum == rational(9, 10));
  }
  SECTION("past the feasible window no alpha2 works") {
    const auto bound = min_alpha2(worked_q, rational(4, 5));
    CHECK(bound.infimum == rational(36, 35));
    CHECK(bound.attainable);
    CHECK_FALSE(bound.feasible);
  }
  SECTION("a low ratio clamps to one half, unattained") {
    const auto bound = min_alpha2(worked_q, rational(1, 4));
    CHECK(bound.infimum == rational(1, 2));
    CHECK_FALSE(bound.attainable);
    CHECK(bound.feasible);
  }
  SECTION("alpha1 must be interior") {
    CHECK_THROWS_AS(min_alpha2(worked_q, rational(0)), locc::out_of_range);
    CHECK_THROWS_AS(min_alpha2(worked_q, rational(1)), locc::out_of_range);
  }
}

TEST_CASE("tail bound closes the last majorization inequality") {
  CHECK(tail_bound(worked_q, rational(3, 4)) == rational(7, 8));
  CHECK(criterion_dominates(worked_q, rational(3, 4)));
  CHECK_THROWS_AS(tail_bound(worked_q, rational(0)), locc::out_of_range);
  CHECK_THROWS_AS(tail_bound(worked_q, rational(1)), locc::out_of_range);
}

TEST_CASE("criterion verdicts on the worked scenario") {
  SECTION("alpha2 above the bound converts") {
    const auto v = convertible_iff(worked_d, 0.75, 0.98);
    CHECK(v.hypotheses_met);
    CHECK(v.convertible);
    REQUIRE(v.regime_used.has_value());
    CHECK(*v.regime_used == regime_tag::r2);
    CHECK(v.reason.find("holds") != std::string::npos);
  }
  SECTION("alpha2 below the bound does not") {
    const auto v = convertible_iff(worked_d, 0.75, 0.95);
    CHECK(v.hypotheses_met);
    CHECK_FALSE(v.convertible);
    CHECK(v.reason.find("fails") != std::string::npos);
  }
  SECTION("the rational boundary point converts exactly") {
    const auto v = convertible_iff(worked_q, rational(3, 4), rational(27, 28));
    CHECK(v.hypotheses_met);
    CHECK(v.convertible);
    CHECK(v.min_alpha2.infimum == rational(27, 28));
  }
  SECTION("just under the rational boundary does not") {
    const auto v = convertible_iff(worked_q, rational(3, 4), rational(67, 70));
    CHECK(v.hypotheses_met);
    CHECK_FALSE(v.convertible);
  }
  SECTION("alpha1 outside every interval withholds judgment") {
    for (const rational& alpha1 : {rational(13, 20), rational(19, 20)}) {
      const auto v = convertible_iff(worked_q, alpha1, rational(49, 50));
      CHECK_FALSE(v.hypotheses_met);
      CHECK_FALSE(v.regime_used.has_value());
      CHECK(v.reason == "alpha1 lies outside every applicable regime interval");
    }
  }
  SECTION("alpha2 at one half withholds judgment") {
    const auto v = convertible_iff(worked_q, rational(3, 4), rational(1, 2));
    CHECK_FALSE(v.hypotheses_met);
    CHECK(v.reason == "alpha2 is not above 1/2");
  }
  SECTION("arguments must be interior") {
    CHECK_THROWS_AS(convertible_iff(worked_q, rational(0), rational(3, 4)),
                    locc::out_of_range);
    CHECK_THROWS_AS(convertible_iff(worked_q, rational(3, 4), rational(1)),
                    locc::out_of_range);
  }
}

TEST_CASE("real mode refuses to classify a hairline xi2") {
  // xi2 sits within comparison_tolerance of 1/2: the cushioned window tests
  // all decline rather than guess a side.
  const scenario<double> s(0.9, 0.8, 0.5 + 1e-13, 0.5 + 5e-14);
  CHECK(classify_regimes(s).empty());
  const auto v = convertible_iff(s, 0.6, 0.75);
  CHECK_FALSE(v.hypotheses_met);
  CHECK(v.reason == "no proposition regime covers xi2");
}

TEST_CASE("tail bound gates the criterion where the ratio cannot reach") {
  const rational alpha1(41, 50);
  const rational alpha2(9, 10);

  // The regime hypotheses alone are satisfied and the first inequality
  // holds, yet the conversion is impossible.
  REQUIRE(classify_regimes(deficit_q).size() == 1);
  REQUIRE(classify_regimes(deficit_q)[0].tag == regime_tag::r1);
  REQUIRE(classify_regimes(deficit_q)[0].alpha1_interval.contains(alpha1));
  REQUIRE(alpha2 * deficit_q.xi2() >= alpha1 * deficit_q.xi1());

  CHECK(tail_bound(deficit_q, alpha1) == rational(254, 275));
  CHECK(alpha1 * deficit_q.xi1() / deficit_q.xi2() == rational(164, 185));
  CHECK_FALSE(criterion_dominates(deficit_q, alpha1));

  const auto v = convertible_iff(deficit_q, alpha1, alpha2);
  CHECK_FALSE(v.hypotheses_met);
  CHECK_FALSE(v.convertible);
  REQUIRE(v.regime_used.has_value());
  CHECK(*v.regime_used == regime_tag::r1);
  CHECK(v.reason.find("tail bound") != std::string::npos);

  const auto oracle =
      majorizes(superposition_schmidt(deficit_q.xi1(), deficit_q.eta1(),
                                      alpha1),
                superposition_schmidt(deficit_q.xi2(), deficit_q.eta2(),
                                      alpha2));
  CHECK_FALSE(oracle.convertible);
  REQUIRE(oracle.first_failure.has_value());
  CHECK(*oracle.first_failure == 3);
  REQUIRE(oracle.margins.size() == 4);
  CHECK(oracle.margins[0] == rational(1, 100));
  CHECK(oracle.margins[1] == rational(2, 25));
  CHECK(oracle.margins[2] == rational(-117, 10000));
  CHECK(oracle.margins[3] == rational(0));

  // The tail inequality itself is falsified at this point.
  CHECK_FALSE(appendix_b1(deficit_q, alpha1, alpha2));
}

TEST_CASE("appendix inequalities hold on the worked scenarios") {
  CHECK(appendix_a1(worked_q));
  CHECK(appendix_a1(deficit_q));
  CHECK(appendix_a2(rational(9, 10), rational(4, 5)));
  CHECK(appendix_a2(0.7, 0.6));
  CHECK_THROWS_AS(appendix_a2(0.8, 0.8), locc::out_of_range);
  CHECK_THROWS_AS(appendix_a2(0.6, 0.5), locc::out_of_range);
  CHECK_THROWS_AS(appendix_a2(1.0, 0.8), locc::out_of_range);
}

TEST_CASE("appendix tail inequality guards its hypothesis") {
  CHECK(appendix_b1(worked_q, rational(3, 4), rational(49, 50)));
  CHECK_THROWS_AS(appendix_b1(worked_q, rational(3, 4), rational(9, 10)),
                  locc::hypothesis_violated);
  CHECK_THROWS_AS(appendix_b1(worked_q, rational(-1, 10), rational(1, 2)),
                  locc::out_of_range);
  CHECK_THROWS_AS(appendix_b1(worked_q, rational(1, 2), rational(11, 10)),
                  locc::out_of_range);
}

TEST_CASE("appendix inequalities hold across random scenarios") {
  std::mt19937 rng(2024);
  int tested = 0;
  for (int i = 0; i < 200000 && tested < 100000; ++i) {
    const auto u = draw_chain(rng);
    if (!well_separated(u)) continue;
    const scenario<double> s(u[0], u[1], u[2], u[3]);
    REQUIRE(appendix_a1(s));
    REQUIRE(appendix_a2(s.xi1(), s.eta1()));
    REQUIRE(appendix_a2(s.xi2(), s.eta2()));
    ++tested;
  }
  REQUIRE(tested == 100000);
}

TEST_CASE("regime intervals pin the spectrum ordering") {
  // Raw products (a*xi1, a*(1-xi1), (1-a)*eta1, (1-a)*(1-eta1)) sort into
  // one fixed permutation per regime for alpha1 interior to its interval.
  static constexpr std::array<std::array<int, 4>, 3> orders{
      {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 2, 3, 1}}};
  std::mt19937 rng(60601);
  std::array<int, 3> hits{};
  for (int i = 0; i < 20000; ++i) {
    const auto u = draw_chain(rng);
    if (!well_separated(u)) continue;
    const scenario<double> s(u[0], u[1], u[2], u[3]);
    for (const auto& r : classify_regimes(s)) {
      const double lo = r.alpha1_interval.lo + 1e-6;
      const double hi = r.alpha1_interval.hi - 1e-6;
      if (!(lo < hi)) continue;
      for (const double t : {0.05, 0.5, 0.95}) {
        const double a = lo + t * (hi - lo);
        const std::array<double, 4> raw{a * s.xi1(), a * (1.0 - s.xi1()),
                                        (1.0 - a) * s.eta1(),
                                        (1.0 - a) * (1.0 - s.eta1())};
        const auto& order = orders[static_cast<std::size_t>(r.tag)];
        for (int k = 0; k < 3; ++k) {
          REQUIRE(raw[order[k]] > raw[order[k + 1]]);
        }
        // In the lowest regime alpha1 >= xi2 > 1 - eta2 makes the ratio
        // bound dominate unconditionally.
        if (r.tag == regime_tag::r3) REQUIRE(criterion_dominates(s, a));
      }
      hits[static_cast<std::size_t>(r.tag)] += 1;
    }
  }
  REQUIRE(hits[0] >= 500);
  REQUIRE(hits[1] >= 500);
  REQUIRE(hits[2] >= 500);
}
