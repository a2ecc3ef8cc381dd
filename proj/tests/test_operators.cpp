#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nonsing/operators.hpp"

using namespace nonsing;

TEST_CASE("elementary operators") {
    CHECK(Operator::vertex(2, 1).images() == std::vector<int>{1});
    CHECK(Operator::face(2, 0).images() == std::vector<int>{1, 2});
    CHECK(Operator::face(2, 2).images() == std::vector<int>{0, 1});
    CHECK(Operator::degeneracy(2, 1).images() == std::vector<int>{0, 1, 1, 2});
    CHECK_THROWS_AS(Operator::face(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(Operator::vertex(2, -1), std::invalid_argument);
    CHECK_THROWS_AS(Operator({0, 2, 1}, 2), std::invalid_argument);
    CHECK_THROWS_AS(Operator({0, 3}, 2), std::invalid_argument);
}

TEST_CASE("composition basics") {
    Operator id2 = Operator::identity(2);
    Operator a({0, 0, 2}, 2);
    CHECK(compose(id2, a) == a);
    CHECK(compose(a, id2) == a);
    CHECK_THROWS_AS(compose(a, Operator::identity(3)), std::invalid_argument);
    // degeneracy followed by the face one past it is the identity
    for (int n = 0; n <= 4; ++n)
        for (int i = 0; i <= n; ++i)
            CHECK(compose(Operator::face(n + 1, i + 1), Operator::degeneracy(n, i)).is_identity());
}

TEST_CASE("face exchange rules, exhaustively") {
    // delta_{k+1} delta_{j+1} = delta_{j+1} delta_k for j < k (applied right-to-left)
    for (int n = 1; n <= 6; ++n)
        for (int j = 0; j < n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                CHECK(compose(Operator::face(n, j + 1), Operator::face(n + 1, k + 1)) ==
                      compose(Operator::face(n, k), Operator::face(n + 1, j + 1)));
            }
    // and the mirrored form: delta_{j+1} delta_{k+1} = delta_{k+1} delta_{j+2} for k <= j
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= n; ++k)
            for (int j = k; j <= n; ++j) {
                if (j + 2 > n + 1 || k + 1 > n) continue;
                CHECK(compose(Operator::face(n, k + 1), Operator::face(n + 1, j + 2)) ==
                      compose(Operator::face(n, j + 1), Operator::face(n + 1, k + 1)));
            }
}

TEST_CASE("sections to adjacent degeneracies") {
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k < n; ++k) {
            CHECK(compose(Operator::face(n + 1, k + 1), Operator::degeneracy(n, k)).is_identity());
            CHECK(compose(Operator::face(n + 1, k + 1), Operator::degeneracy(n, k + 1)).is_identity());
        }
}

TEST_CASE("associativity over small operators") {
    for (const Operator& a : all_operators(1, 2))
        for (const Operator& b : all_operators(2, 3))
            for (const Operator& g : all_operators(3, 2))
                CHECK(compose(compose(a, b), g) == compose(a, compose(b, g)));
}

TEST_CASE("epi-mono factorization") {
    Operator a({0, 0, 2}, 2);
    EpiMonoParts p = epi_mono_factor(a);
    CHECK(p.epi == Operator::degeneracy(1, 0));
    CHECK(p.mono.images() == std::vector<int>{0, 2});

    for (const Operator& m : all_injections(2, 4)) {
        EpiMonoParts q = epi_mono_factor(m);
        CHECK(q.epi.is_identity());
        CHECK(q.mono == m);
    }
    for (const Operator& r : all_surjections(4, 2)) {
        EpiMonoParts q = epi_mono_factor(r);
        CHECK(q.mono.is_identity());
        CHECK(q.epi == r);
    }
}

TEST_CASE("epi-mono factorization is unique, brute force") {
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; n <= 5; ++n)
            for (const Operator& a : all_operators(m, n)) {
                int found = 0;
                for (int mid = 0; mid <= std::min(m, n); ++mid)
                    for (const Operator& rho : all_surjections(m, mid))
                        for (const Operator& mu : all_injections(mid, n))
                            if (compose(rho, mu) == a) ++found;
                CHECK(found == 1);
                EpiMonoParts p = epi_mono_factor(a);
                CHECK(compose(p.epi, p.mono) == a);
                CHECK(p.epi.is_surjective());
                CHECK(p.mono.is_injective());
            }
}

TEST_CASE("minimal section") {
    // for sigma_k the least-preimage section is delta_{k+1}
    for (int n = 0; n <= 5; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(minimal_section(Operator::degeneracy(n, k)) == Operator::face(n + 1, k + 1));
    CHECK(minimal_section(Operator::identity(3)).is_identity());
    // the two-step collapse [2] ->> [0] has section the vertex at 0
    Operator all_to_zero({0, 0, 0}, 0);
    CHECK(minimal_section(all_to_zero) == Operator::vertex(2, 0));
    CHECK_THROWS_AS(minimal_section(Operator({0, 2}, 2)), std::invalid_argument);
    // every section composes to the identity; the minimal one is least
    for (const Operator& rho : all_surjections(4, 2)) {
        std::vector<Operator> secs = all_sections(rho);
        CHECK(!secs.empty());
        for (const Operator& mu : secs) CHECK(compose(mu, rho).is_identity());
        CHECK(*std::min_element(secs.begin(), secs.end()) == minimal_section(rho));
    }
}

TEST_CASE("collapse interval") {
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k < n; ++k)
            for (int l = k + 1; l <= n; ++l) {
                Operator rho = Operator::collapse_interval(n, k, l);
                // equals sigma_k ... sigma_{l-1} applied right-to-left
                Operator acc = Operator::degeneracy(n - l + k, k);
                for (int t = k + 1; t < l; ++t) acc = compose(Operator::degeneracy(n - l + t, t), acc);
                CHECK(rho == acc);
                CHECK(rho.is_surjective());
            }
}

TEST_CASE("elementary factor views") {
    Operator mono({0, 2, 4}, 5);
    CHECK(missed_values(mono) == std::vector<int>{1, 3, 5});
    Operator epi({0, 0, 1, 2, 2}, 2);
    CHECK(collapsed_positions(epi) == std::vector<int>{0, 3});
}
