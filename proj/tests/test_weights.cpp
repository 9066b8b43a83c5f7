#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "qcartan/weights.hpp"

using namespace qcartan;

namespace
{

Partition P(std::vector<int> parts)
{
    return Partition(std::move(parts));
}

ProductForm Q(int p, std::map<int, std::int64_t> exps)
{
    ProductForm f(p);
    for (const auto &[l, e] : exps) {
        f *= ProductForm::qint(l, p, e);
    }
    return f;
}

int base_digits(std::int64_t m, int p)
{
    int d = 0;
    for (; m > 0; m /= p) {
        ++d;
    }
    return d;
}

// (j)_[p] written out: j = a p^b gives [p]_a [p]_{ap} ... [p]_{ap^{b-1}}.
void mul_graded_part(ProductForm &f, int j, int p)
{
    int a = j;
    int b = 0;
    while (a % p == 0) {
        a /= p;
        ++b;
    }
    for (int t = 0, s = a; t < b; ++t, s *= p) {
        f *= ProductForm::qint(s, p);
    }
}

ProductForm oracle_w_E(const Partition &l, int p)
{
    ProductForm f(p);
    for (const auto &[i, m] : l.multiplicities()) {
        if (i % p != 0) {
            for (int j = 1; j <= m; ++j) {
                mul_graded_part(f, j, p);
            }
        }
    }
    return f;
}

ProductForm oracle_w_H(const Partition &l, int p)
{
    ProductForm f(p);
    for (const auto &[i, m] : l.multiplicities()) {
        if (i % p != 0) {
            for (int j = 1; j <= m; ++j) {
                f *= ProductForm::qint(j, p, base_digits(m / j, p));
            }
        }
    }
    return f;
}

ProductForm oracle_w_G(const Partition &l, int p)
{
    ProductForm f(p);
    for (const auto &[a, m] : l.multiplicities()) {
        std::int64_t pb = p;
        for (int b = 1; pb <= m; ++b, pb *= p) {
            f *= ProductForm::qint(static_cast<int>(a * pb / p), p, m / pb);
        }
    }
    return f;
}

} // namespace

TEST_CASE("w_E")
{
    CHECK(w_E(parse_partition("1^4 2^3 4 5^2"), 2) == Q(2, {{1, 3}, {2, 1}}));
    CHECK(w_E(Partition(), 2).is_identity());
    CHECK(w_E(parse_partition("1^9 3 5^3"), 2) == Q(2, {{1, 4}, {2, 2}, {3, 1}, {4, 1}}));
    for (int p = 2; p <= 5; ++p) {
        for (int n = 0; n <= 14; ++n) {
            for (const auto &l : enumerate_partitions(n)) {
                CHECK(w_E(l, p) == oracle_w_E(l, p));
            }
        }
    }
}

TEST_CASE("w_H")
{
    CHECK(w_H(parse_partition("1^4 2^3 4 5^2"), 2) == Q(2, {{1, 5}, {2, 3}, {3, 1}, {4, 1}}));
    CHECK(w_H(Partition(), 2).is_identity());
    CHECK(w_H(P({1, 1}), 2) == Q(2, {{1, 2}, {2, 1}}));
    for (int p = 2; p <= 5; ++p) {
        for (int n = 0; n <= 14; ++n) {
            for (const auto &l : enumerate_partitions(n)) {
                CHECK(w_H(l, p) == oracle_w_H(l, p));
            }
        }
    }
}

TEST_CASE("w_G")
{
    CHECK(w_G(parse_partition("1^9 3 5^3"), 2) == Q(2, {{1, 4}, {2, 2}, {4, 1}, {5, 1}}));
    CHECK(w_G(Partition(), 2).is_identity());
    CHECK(w_G(P({1, 1, 1}), 2) == Q(2, {{1, 1}}));
    for (int p = 2; p <= 5; ++p) {
        for (int n = 0; n <= 14; ++n) {
            for (const auto &l : enumerate_p_class_regular(n, p)) {
                CHECK(w_G(l, p) == oracle_w_G(l, p));
            }
        }
    }
    CHECK_THROWS_AS(w_G(P({2}), 2), std::invalid_argument);
}

TEST_CASE("Glaisher map")
{
    const GlaisherResult g = glaisher(parse_partition("1^9 3 5^3"), 2);
    CHECK(g.image == P({10, 8, 5, 3, 1}));
    CHECK(g.step_counts == std::map<int, int>{{1, 4}, {2, 2}, {4, 1}, {5, 1}});
    CHECK(glaisher(P({1, 1, 1}), 2).image == P({2, 1}));
    CHECK(glaisher(P({1, 1, 1}), 2).step_counts == std::map<int, int>{{1, 1}});
    const GlaisherResult fixed = glaisher(P({5, 4, 1}), 2);
    CHECK(fixed.image == P({5, 4, 1}));
    CHECK(fixed.step_counts.empty());

    std::mt19937 rng(3);
    for (int p = 2; p <= 4; ++p) {
        for (int n = 0; n <= 14; ++n) {
            std::set<Partition> images;
            for (const auto &l : enumerate_p_class_regular(n, p)) {
                const GlaisherResult a = glaisher(l, p);
                const GlaisherResult b =
                    glaisher(l, p, [&](std::span<const int> parts) { return parts[rng() % parts.size()]; });
                CHECK(a.image == b.image);
                CHECK(a.step_counts == b.step_counts);
                CHECK(a.image.is_p_regular(p));
                CHECK(a.image.size() == n);
                CHECK(glaisher_weight(a, p) == w_G(l, p));
                images.insert(a.image);
            }
            CHECK(images.size() == enumerate_p_regular(n, p).size());
        }
    }
}

TEST_CASE("concat")
{
    CHECK(concat(P({3, 1}), P({2, 1})) == P({3, 2, 1, 1}));
    CHECK(concat(Partition(), P({2})) == P({2}));
}

TEST_CASE("decorated diagram cells")
{
    const Partition l = parse_partition("1^9 3 5^3");
    std::vector<int> gs, es;
    for (const auto &c : cells_of(l, 2)) {
        if (c.i == 1) {
            gs.push_back(G_value(c));
            es.push_back(E_value(c));
        }
    }
    std::sort(gs.begin(), gs.end());
    std::sort(es.begin(), es.end());
    CHECK(gs == std::vector<int>{1, 1, 1, 1, 2, 2, 4});
    CHECK(es == std::vector<int>{1, 1, 1, 2, 2, 3, 4});
    CHECK(diagram(l, 2, 5) == std::vector<std::pair<int, int>>{{0, 1}});
    const DiagramCell five{l, 5, 0, 1, 2};
    CHECK(G_value(five) == 5);
    CHECK(E_value(five) == 1);
    CHECK(diagram(l, 2, 3).empty());
    CHECK(!is_valid_cell(DiagramCell{l, 1, 1, 3, 2}));
    CHECK(!is_valid_cell(DiagramCell{l, 1, 0, 5, 2}));
}

TEST_CASE("theta")
{
    const Partition l = parse_partition("1^9 3 5^3");
    const DiagramCell c{l, 1, 2, 4, 2};
    const DiagramCell t = theta(c);
    CHECK(t == DiagramCell{l, 1, 0, 4, 2});
    CHECK(E_value(t) == 4);
    CHECK(G_value(c) == 4);
    for (int p = 2; p <= 3; ++p) {
        for (int n = 0; n <= 16; ++n) {
            std::size_t fixed = 0;
            for (const auto &x : enumerate_cells(n, p)) {
                const DiagramCell y = theta(x);
                CHECK(is_valid_cell(y));
                CHECK(y.lambda.size() == n);
                CHECK(theta(y) == x);
                CHECK(E_value(y) == G_value(x));
                fixed += y == x;
            }
            // Cells with k = i p^{2j} are the only fixed points.
            std::size_t expected = 0;
            for (const auto &x : enumerate_cells(n, p)) {
                int pj = 1;
                for (int s = 0; s < x.j; ++s) {
                    pj *= p;
                }
                expected += x.k == x.i * pj * pj;
            }
            CHECK(fixed == expected);
        }
    }
}

TEST_CASE("cell products give the weights")
{
    for (int p = 2; p <= 4; ++p) {
        for (int n = 0; n <= 12; ++n) {
            for (const auto &l : enumerate_p_class_regular(n, p)) {
                ProductForm by_g(p), by_e(p);
                for (const auto &c : cells_of(l, p)) {
                    by_g *= ProductForm::qint(G_value(c), p);
                    by_e *= ProductForm::qint(E_value(c), p);
                }
                CHECK(by_g == w_G(l, p));
                CHECK(by_e == w_E(l, p));
            }
        }
    }
}
