#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "bohr/radii.hpp"
#include "oracle_utils.hpp"

using namespace bohr;

namespace {
bool near(double x, double y, double tol) { return std::abs(x - y) <= tol; }

const std::vector<double> kReferenceRoots{
    0.428676417, 0.463451649, 0.542709532, 0.661435909,
    0.781954566, 0.811851376, 0.861238751, 0.940732078,
};
}  // namespace

TEST_CASE("equation values match the displayed formulas") {
    const RadiusProblem y = YEquation{1.0, 1, 1, 1};
    for (double r : {0.1, 0.2, 0.3, 0.7}) CHECK(near(eval_equation(y, r), r * r + 4.0 * r - 1.0, 1e-14));

    const RadiusProblem rn = RNEquation{2};
    const RadiusProblem rnp = RNPrimeEquation{2};
    for (double r : {0.2, 0.5, 0.8}) {
        CHECK(near(eval_equation(rn, r), 2.0 * (1.0 + r) * r * r - (1.0 - r) * (1.0 - r), 1e-14));
        CHECK(near(eval_equation(rnp, r), (1.0 + r) * r * r - (1.0 - r) * (1.0 - r), 1e-14));
    }

    const RadiusProblem rap = RapEquation{0.5, 1.5};
    for (double r : {0.1, 0.4, 0.9}) {
        const double expect = static_cast<double>(oracle::rap_equation(0.5L, 1.5L, static_cast<long double>(r)));
        CHECK(near(eval_equation(rap, r), expect, 1e-12));
    }

    CHECK_THROWS_AS(eval_equation(RadiusProblem{ClosedForm{ClosedForm::Kind::bohr_third, 1}}, 0.5),
                    std::invalid_argument);
    CHECK_THROWS_AS(eval_equation(y, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(eval_equation(y, -0.1), std::invalid_argument);
}

TEST_CASE("closed forms evaluate exactly") {
    for (int k = 1; k <= 10; ++k) {
        const RootResult third = solve_radius(ClosedForm{ClosedForm::Kind::bohr_third, k});
        CHECK(near(third.root, std::pow(3.0, -1.0 / k), 1e-15));
        CHECK(third.residual == 0.0);
        CHECK(third.bracket_width == 0.0);
        CHECK(third.unique_on_grid);

        CHECK(near(solve_radius(ClosedForm{ClosedForm::Kind::bombieri, k}).root,
                   std::pow(2.0, -1.0 / (2.0 * k)), 1e-15));
        CHECK(near(solve_radius(ClosedForm{ClosedForm::Kind::refined_three_fifths, k}).root,
                   std::pow(0.6, 1.0 / k), 1e-15));
    }
    CHECK(solve_radius(ClosedForm{ClosedForm::Kind::rogosinski, 1}).root == 0.5);
    for (double p : {0.5, 1.0, 2.0})
        CHECK(near(solve_radius(ClosedForm{ClosedForm::Kind::power_p, 1, p}).root, p / (p + 2.0), 1e-15));
}

TEST_CASE("known roots are recovered to tolerance") {
    const double golden = std::sqrt(5.0) - 2.0;
    const RootResult y = solve_radius(YEquation{1.0, 1, 1, 1});
    CHECK(near(y.root, golden, 1e-9));
    CHECK(y.unique_on_grid);
    CHECK(y.bracket_width <= 1e-10 * 1.001);
    CHECK(std::abs(y.residual) < 1e-8);

    CHECK(near(solve_radius(RNEquation{1}).root, golden, 1e-9));
    CHECK(near(solve_radius(RNPrimeEquation{1}).root, 1.0 / 3.0, 1e-9));
    CHECK(near(solve_radius(RapEquation{0.0, 1.0}).root, (3.0 - std::sqrt(5.0)) / 2.0, 1e-9));
}

TEST_CASE("one-variable reductions collapse to the simpler families") {
    for (int N : {1, 2, 3, 4}) {
        const RadiusProblem y1 = YEquation{1.0, 1, N, 1};
        const RadiusProblem y2 = YEquation{2.0, 1, N, 1};
        const RadiusProblem rn = RNEquation{N};
        const RadiusProblem rnp = RNPrimeEquation{N};
        for (double r : {0.05, 0.3, 0.55, 0.85}) {
            CHECK(near(eval_equation(y1, r), eval_equation(rn, r), 1e-14));
            CHECK(near(eval_equation(y2, r), 2.0 * eval_equation(rnp, r), 1e-14));
        }
        CHECK(near(solve_radius(y1).root, solve_radius(rn).root, 1e-9));
        CHECK(near(solve_radius(y2).root, solve_radius(rnp).root, 1e-9));
    }
}

TEST_CASE("roots grow with the exponent and the start index") {
    double prev = 0.0;
    for (double p : {0.5, 1.0, 1.5, 2.0}) {
        const double root = solve_radius(YEquation{p, 2, 2, 3}).root;
        CHECK(root > prev);
        prev = root;
    }
    prev = 0.0;
    for (int N : {1, 2, 3, 4}) {
        const double root = solve_radius(YEquation{0.8, 2, N, 3}).root;
        CHECK(root > prev);
        prev = root;
        CHECK(solve_radius(RNEquation{N}).root < solve_radius(RNEquation{N + 1}).root);
    }
}

TEST_CASE("missing sign changes raise the dedicated error") {
    // At a = 1 both sides coincide and the equation vanishes identically.
    CHECK_THROWS_AS(solve_radius(RapEquation{1.0, 1.0}), NoRootFound);
    CHECK_THROWS_AS(solve_radius(RapEquation{1.0, 1.7}), NoRootFound);
}

TEST_CASE("parameter validation rejects out-of-range input") {
    CHECK_THROWS_AS(solve_radius(YEquation{3.0, 1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(solve_radius(YEquation{1e-7, 1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(solve_radius(YEquation{1.0, 0, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(solve_radius(YEquation{1.0, 1001, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(solve_radius(YEquation{1.0, 1, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(solve_radius(YEquation{1.0, 1, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(solve_radius(RNEquation{0}), std::invalid_argument);
    CHECK_THROWS_AS(solve_radius(RNEquation{1001}), std::invalid_argument);
    CHECK_THROWS_AS(solve_radius(RNPrimeEquation{0}), std::invalid_argument);
    CHECK_THROWS_AS(solve_radius(RapEquation{-0.1, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(solve_radius(RapEquation{1.1, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(solve_radius(RapEquation{0.5, 1e-7}), std::invalid_argument);
    CHECK_THROWS_AS(solve_radius(ClosedForm{ClosedForm::Kind::bohr_third, 0}), std::invalid_argument);
    CHECK_THROWS_AS(solve_radius(ClosedForm{ClosedForm::Kind::power_p, 1, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(solve_radius(YEquation{1.0, 1, 1, 1}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(solve_radius(YEquation{1.0, 1, 1, 1}, -1e-9), std::invalid_argument);
}

TEST_CASE("bundled reference radii reproduce the frozen values") {
    const std::vector<Table1Row> rows = table1();
    const std::vector<RadiusProblem> probs = table1_problems();
    REQUIRE(rows.size() == 8);
    REQUIRE(probs.size() == 8);
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(near(rows[i].root, kReferenceRoots[i], 1e-6));
        const auto& e = std::get<YEquation>(probs[i]);
        CHECK(rows[i].k == e.k);
        CHECK(rows[i].m0 == e.m0);
        CHECK(rows[i].N == e.N);
        CHECK(rows[i].p == e.p);
        CHECK(near(rows[i].root, solve_radius(probs[i]).root, 1e-12));
    }
}

TEST_CASE("curve sampling covers every problem on the open interval") {
    const std::vector<RadiusProblem> probs{YEquation{1.0, 1, 1, 1}, RNEquation{2}};
    const int grid = 50;
    const auto pts = figure1_data(probs, grid);
    REQUIRE(pts.size() == probs.size() * static_cast<size_t>(grid - 1));

    for (size_t c = 0; c < probs.size(); ++c) {
        const std::string label = problem_label(probs[c]);
        const double root = solve_radius(probs[c]).root;
        bool bracketed = false;
        for (int j = 0; j < grid - 1; ++j) {
            const CurvePoint& pt = pts[c * static_cast<size_t>(grid - 1) + static_cast<size_t>(j)];
            CHECK(pt.label == label);
            CHECK(pt.r > 0.0);
            CHECK(pt.r < 1.0);
            CHECK(near(pt.r, static_cast<double>(j + 1) / grid, 1e-15));
            CHECK(near(pt.y, eval_equation(probs[c], pt.r), 1e-15));
            if (pt.y >= 0.0 && j > 0) {
                const CurvePoint& prev = pts[c * static_cast<size_t>(grid - 1) + static_cast<size_t>(j - 1)];
                if (prev.y < 0.0 && !bracketed) {
                    bracketed = true;
                    CHECK(root >= prev.r);
                    CHECK(root <= pt.r);
                }
            }
        }
        CHECK(bracketed);
    }
    CHECK_THROWS_AS(figure1_data(probs, 1), std::invalid_argument);
}

TEST_CASE("solver agrees with a dense long-double scan") {
    struct Sample {
        RadiusProblem prob;
        std::function<long double(long double)> oracle_fn;
    };
    const std::vector<Sample> samples{
        {YEquation{0.12, 2, 2, 2}, [](long double r) { return oracle::y_equation(0.12L, 2, 2, 2, r); }},
        {YEquation{1.7, 5, 10, 7}, [](long double r) { return oracle::y_equation(1.7L, 5, 10, 7, r); }},
        {YEquation{0.7, 3, 2, 4}, [](long double r) { return oracle::y_equation(0.7L, 3, 2, 4, r); }},
        {RNEquation{3}, [](long double r) { return oracle::rn_equation(3, r); }},
        {RNPrimeEquation{4}, [](long double r) { return oracle::rnprime_equation(4, r); }},
        {RapEquation{0.5, 1.2}, [](long double r) { return oracle::rap_equation(0.5L, 1.2L, r); }},
    };
    for (const Sample& s : samples) {
        const auto ref = oracle::first_root(s.oracle_fn, 200000, 120);
        REQUIRE(ref.has_value());
        CHECK(near(solve_radius(s.prob).root, static_cast<double>(*ref), 1e-6));
    }
}

TEST_CASE("labels are stable strings") {
    CHECK(problem_label(YEquation{1.0, 1, 1, 1}) == "y p=1 k=1 N=1 m0=1");
    CHECK(problem_label(YEquation{0.12, 2, 2, 2}) == "y p=0.12 k=2 N=2 m0=2");
    CHECK(problem_label(RNEquation{3}) == "rn N=3");
    CHECK(problem_label(RNPrimeEquation{2}) == "rnprime N=2");
    CHECK(problem_label(RapEquation{0.5, 1.5}) == "rap a=0.5 p=1.5");
    CHECK(problem_label(ClosedForm{ClosedForm::Kind::bohr_third, 2}) == "bohr-third k=2");
    CHECK(problem_label(ClosedForm{ClosedForm::Kind::bombieri, 3}) == "bombieri k=3");
    CHECK(problem_label(ClosedForm{ClosedForm::Kind::refined_three_fifths, 1}) ==
          "refined-three-fifths k=1");
    CHECK(problem_label(ClosedForm{ClosedForm::Kind::rogosinski, 1}) == "rogosinski");
    CHECK(problem_label(ClosedForm{ClosedForm::Kind::power_p, 1, 0.5}) == "power-p p=0.5");
}
