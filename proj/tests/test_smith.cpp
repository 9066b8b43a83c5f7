#include <doctest.h>

#include <numeric>
#include <random>
#include <stdexcept>

#include "qcartan/fock.hpp"
#include "qcartan/smith.hpp"

using namespace qcartan;

namespace
{

QPoly qi(int l, int p = 2)
{
    return qint_p(l, p);
}

LaurentPoly L(const QPoly &a)
{
    return to_laurent(a);
}

Matrix<QPoly> diag(const std::vector<QPoly> &d)
{
    Matrix<QPoly> m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        m(i, i) = d[i];
    }
    return m;
}

// Random elementary row and column operations over Z[q] (unimodular).
Matrix<QPoly> scramble(Matrix<QPoly> m, std::mt19937 &rng)
{
    const std::size_t n = m.rows();
    for (int step = 0; step < 12; ++step) {
        const std::size_t a = rng() % n;
        std::size_t b = rng() % n;
        if (a == b) {
            b = (a + 1) % n;
        }
        const QPoly f(std::vector<mpz_class>{static_cast<int>(rng() % 5) - 2, static_cast<int>(rng() % 3) - 1});
        switch (rng() % 4) {
        case 0:
            for (std::size_t c = 0; c < n; ++c) {
                m(a, c) += f * m(b, c);
            }
            break;
        case 1:
            for (std::size_t r = 0; r < n; ++r) {
                m(r, a) += f * m(r, b);
            }
            break;
        case 2:
            m.swap_rows(a, b);
            break;
        default:
            m.swap_cols(a, b);
            break;
        }
    }
    return m;
}

mpz_class det3(const Matrix<mpz_class> &m)
{
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

// Determinantal divisors of a 3x3 integer matrix.
std::vector<mpz_class> minors_snf(const Matrix<mpz_class> &m)
{
    mpz_class g1 = 0, g2 = 0;
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            g1 = gcd(g1, m(r, c));
        }
    }
    for (std::size_t r1 = 0; r1 < 3; ++r1) {
        for (std::size_t r2 = r1 + 1; r2 < 3; ++r2) {
            for (std::size_t c1 = 0; c1 < 3; ++c1) {
                for (std::size_t c2 = c1 + 1; c2 < 3; ++c2) {
                    g2 = gcd(g2, m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1));
                }
            }
        }
    }
    const mpz_class g3 = abs(det3(m));
    std::vector<mpz_class> out;
    out.push_back(g1);
    out.push_back(g1 == 0 ? mpz_class(0) : mpz_class(g2 / g1));
    out.push_back(g2 == 0 ? mpz_class(0) : mpz_class(g3 / g2));
    return out;
}

std::vector<std::string> strings(std::initializer_list<QPoly> ps)
{
    std::vector<std::string> out;
    for (const auto &p : ps) {
        out.push_back(to_string(p));
    }
    return out;
}

} // namespace

TEST_CASE("snf examples")
{
    const DivisorChain id = snf(Matrix<QPoly>::identity(3));
    CHECK(id.to_strings() == std::vector<std::string>{"1", "1", "1"});
    CHECK(snf(diag({qi(1), qi(1) * qi(2)})).to_strings() == strings({qi(1), qi(1) * qi(2)}));
    CHECK(snf(diag({qi(1), qi(2)})).to_strings() == strings({QPoly(1), qi(1) * qi(2)}));
    CHECK(snf(diag({qi(1), QPoly()})).rank_deficiency == 1);
}

TEST_CASE("diagonal divisor chains")
{
    const ProductForm one(2);
    const ProductForm a = ProductForm::qint(1, 2);
    const ProductForm b = ProductForm::qint(2, 2);
    CHECK(divisors_of_diagonal({one, a}).to_strings() == strings({QPoly(1), qi(1)}));
    CHECK(divisors_of_diagonal({a, a}).to_strings() == strings({qi(1), qi(1)}));
    CHECK(divisors_of_diagonal({a, b}).to_strings() == strings({QPoly(1), qi(1) * qi(2)}));
    CHECK(divisors_of_diagonal({a, b}) == divisors_of_diagonal(std::vector<LaurentPoly>{L(qi(1)), L(qi(2))}));
}

TEST_CASE("snf is invariant under unimodular transformations")
{
    std::mt19937 rng(5);
    const std::vector<std::vector<QPoly>> diagonals{
        {QPoly(1), qi(1), qi(1) * qi(2)},
        {qi(1), qi(2), qi(3)},
        {qi(1, 3), qi(1, 3), qi(2, 3) * qi(1, 3)},
        {qi(1), qi(1) * qi(1), QPoly(1), qi(2)},
        {qi(1), QPoly(), qi(2)},
    };
    for (const auto &d : diagonals) {
        std::vector<LaurentPoly> ld;
        for (const auto &x : d) {
            ld.push_back(L(x));
        }
        const DivisorChain expected = divisors_of_diagonal(ld);
        CHECK(snf(diag(d)) == expected);
        for (int trial = 0; trial < 10; ++trial) {
            const Matrix<QPoly> m = scramble(diag(d), rng);
            CHECK(snf(m) == expected);
        }
    }
}

TEST_CASE("integer snf against determinantal divisors")
{
    std::mt19937 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        Matrix<mpz_class> m(3, 3);
        for (std::size_t r = 0; r < 3; ++r) {
            for (std::size_t c = 0; c < 3; ++c) {
                m(r, c) = static_cast<int>(rng() % 13) - 6;
            }
        }
        if (trial % 5 == 0) {
            for (std::size_t c = 0; c < 3; ++c) {
                m(2, c) = 2 * m(0, c) - m(1, c);
            }
        }
        CHECK(integer_snf(m) == minors_snf(m));
    }
}

TEST_CASE("specialization at one")
{
    Matrix<QPoly> m(1, 2);
    m(0, 0) = qi(1) * qi(2);
    m(0, 1) = QPoly(3);
    const Matrix<mpz_class> s = specialize_at_one(m);
    CHECK(s(0, 0) == 4);
    CHECK(s(0, 1) == 3);
    CHECK(integer_snf(specialize_at_one(cartan(4, 2).entries)) == std::vector<mpz_class>{1, 8});
}

TEST_CASE("chain comparison")
{
    const DivisorChain a = divisors_of_diagonal({ProductForm::qint(1, 2), ProductForm::qint(1, 2)});
    const DivisorChain b = divisors_of_diagonal({ProductForm(2), ProductForm::qint(1, 2, 2)});
    const ChainComparison same = compare_chains("a", a, "a", a);
    CHECK(same.equal);
    CHECK(!same.first_difference);
    const ChainComparison diff = compare_chains("a", a, "b", b);
    CHECK(!diff.equal);
    CHECK(diff.first_difference == std::size_t{0});
    CHECK(diff.lhs_value == "1 + q^2");
    CHECK(diff.rhs_value == "1");
}

TEST_CASE("conjecture harness")
{
    const ConjectureReport r2 = check_conjecture(2, 2);
    CHECK(r2.product_matches_det);
    CHECK(r2.all_equal());
    CHECK(r2.comparisons.size() == 3);
    CHECK(r2.cartan_chain.to_strings() == strings({qi(1)}));
    const ConjectureReport r3 = check_conjecture(3, 2);
    CHECK(r3.product_matches_det);
    CHECK(r3.cartan_chain.divisors.size() == 2);
    for (int n = 1; n <= 7; ++n) {
        for (const auto &r : check_conjecture_blocks(cartan(n, 3))) {
            CHECK(r.product_matches_det);
            if (r.weight == 0) {
                CHECK(r.cartan_chain.to_strings() == std::vector<std::string>{"1"});
                CHECK(r.all_equal());
            }
        }
    }
    CHECK(check_conjecture_block(2, 2, 5).size() == 1);
    CHECK(check_conjecture_block(2, 2, 6).empty());
    CHECK_THROWS_AS(check_conjecture(4, 4), std::invalid_argument);
    CHECK(is_prime(2));
    CHECK(is_prime(7));
    CHECK(!is_prime(1));
    CHECK(!is_prime(9));
}
