#include <doctest.h>

#include <cmath>

#include "qoperad/error.hpp"
#include "qoperad/prob.hpp"

using namespace qoperad;

TEST_CASE("composeProb hand example and units") {
    const ProbVector p({0.5, 0.5});
    const std::vector<ProbVector> parts{ProbVector({1.0 / 3, 2.0 / 3}), ProbVector({1.0, 0.0})};
    const auto r = compose_prob(p, parts);
    const std::vector<double> expected{1.0 / 6, 1.0 / 3, 0.5, 0.0};
    REQUIRE(r.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(r[i] == doctest::Approx(expected[i]).epsilon(1e-15));

    const std::vector<ProbVector> one{p};
    CHECK(compose_prob(ProbVector::unit(), one).values() == p.values());
    const std::vector<ProbVector> units{ProbVector::unit(), ProbVector::unit()};
    CHECK(compose_prob(p, units).values() == p.values());
}

TEST_CASE("ProbVector validation") {
    CHECK_THROWS_AS(ProbVector({0.5, 0.6}), Error);
    CHECK_THROWS_AS(ProbVector({1.5, -0.5}), Error);
    CHECK_THROWS_AS(compose_prob(ProbVector({0.5, 0.5}), std::vector<ProbVector>{ProbVector::unit()}), Error);
}

TEST_CASE("average") {
    const std::vector<double> x{3.5};
    CHECK(average(ProbVector::unit(), x) == 3.5);
    const std::vector<double> xs{0.0, 2.0};
    CHECK(average(ProbVector({0.5, 0.5}), xs) == doctest::Approx(1.0));
}

TEST_CASE("entropy values") {
    const auto sh = EntropyFamily::shannon();
    CHECK(classical_entropy(sh, ProbVector({1.0, 0.0})) == 0.0);
    CHECK(classical_entropy(sh, ProbVector({0.5, 0.5})) == doctest::Approx(std::log(2.0)));
    CHECK(classical_entropy(EntropyFamily::renyi(2), ProbVector::uniform(4)) == doctest::Approx(std::log(4.0)));
    // Tsallis 2: 1 - sum p^2.
    CHECK(classical_entropy(EntropyFamily::tsallis(2), ProbVector({0.3, 0.7})) == doctest::Approx(1 - 0.09 - 0.49));
    for (auto fam : {sh, EntropyFamily::renyi(0.5), EntropyFamily::tsallis(3)})
        CHECK(classical_entropy(fam, ProbVector({1.0, 0.0, 0.0})) == doctest::Approx(0.0));
}

TEST_CASE("coherence under zero padding") {
    CHECK(classical_entropy(EntropyFamily::shannon(), ProbVector({0.5, 0.0, 0.5})) ==
          doctest::Approx(classical_entropy(EntropyFamily::shannon(), ProbVector({0.5, 0.5}))).epsilon(1e-15));
    CHECK(classical_entropy(EntropyFamily::tsallis(2), ProbVector({0.3, 0.7, 0.0})) ==
          doctest::Approx(classical_entropy(EntropyFamily::tsallis(2), ProbVector({0.3, 0.7}))).epsilon(1e-15));
    CHECK(coherence_check(EntropyFamily::renyi(2), ProbVector({0.2, 0.0, 0.8})));
}

TEST_CASE("tree entropy") {
    const std::vector<double> one{1.0};
    CHECK(tree_entropy_classical(EntropyFamily::shannon(), PlanarRootedTree::unit(), one) == 0.0);
    const std::vector<double> p{0.1, 0.2, 0.3, 0.4};
    const double flat = classical_entropy(EntropyFamily::shannon(), ProbVector(p));
    CHECK(tree_entropy_classical(EntropyFamily::shannon(), PlanarRootedTree::corolla(4), p) == doctest::Approx(flat));
    CHECK(tree_entropy_classical(EntropyFamily::shannon(), PlanarRootedTree::parse("((**)(**))"), p) ==
          doctest::Approx(flat));
    // Tsallis 2 on ((**)(**)): S(0.3, 0.7) + 0.3 S(1/3, 2/3) + 0.7 S(3/7, 4/7).
    const auto ts = EntropyFamily::tsallis(2);
    auto t2 = [](double a, double b) { return 1 - a * a - b * b; };
    const double expected = t2(0.3, 0.7) + 0.3 * t2(1.0 / 3, 2.0 / 3) + 0.7 * t2(3.0 / 7, 4.0 / 7);
    CHECK(tree_entropy_classical(ts, PlanarRootedTree::parse("((**)(**))"), p) == doctest::Approx(expected));
}

TEST_CASE("thermodynamic algebra") {
    const auto sh = EntropyFamily::shannon();
    const std::vector<double> single{2.5};
    CHECK(thermo_algebra(sh, PlanarRootedTree::unit(), single, 3.0) == doctest::Approx(2.5));
    const std::vector<double> zeros{0.0, 0.0};
    CHECK(thermo_algebra(sh, PlanarRootedTree::corolla(2), zeros, 1.0) == doctest::Approx(-std::log(2.0)));
    const std::vector<double> xs{1.0, 3.0};
    CHECK(std::abs(thermo_algebra(sh, PlanarRootedTree::corolla(2), xs, 100.0) - 1.0) <= 1e-2);
    // Free energy of the Gibbs state: -(1/beta) log sum exp(-beta x).
    const std::vector<double> ys{0.3, -1.2, 2.0};
    const double beta = 1.7;
    double z = 0;
    for (double y : ys) z += std::exp(-beta * y);
    CHECK(thermo_algebra(sh, PlanarRootedTree::corolla(3), ys, beta) == doctest::Approx(-std::log(z) / beta).epsilon(1e-12));
}

TEST_CASE("simplex projection") {
    const std::vector<double> y{0.5, 0.5, 0.5};
    const auto p = project_to_simplex(y);
    for (double x : p) CHECK(x == doctest::Approx(1.0 / 3));
    const std::vector<double> far{5.0, 0.0};
    CHECK(project_to_simplex(far) == std::vector<double>{1.0, 0.0});
}

TEST_CASE("non-Shannon thermodynamic value never exceeds the smallest energy") {
    // A vertex of the simplex has zero entropy, so the minimum is at most min x.
    const std::vector<double> xs{7.2137445016481223, 5.6541945752115055, 5.8570960583390805};
    for (const auto &fam : {EntropyFamily::renyi(0.5), EntropyFamily::tsallis(0.5), EntropyFamily::tsallis(2)})
        for (double beta : {1.0, 10.0, 100.0})
            CHECK(thermo_algebra(fam, PlanarRootedTree::corolla(3), xs, beta) <= 5.6541945752115055 + 1e-12);
}
