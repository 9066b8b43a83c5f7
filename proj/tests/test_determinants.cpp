#include <doctest.h>

#include <gmpxx.h>

#include "qcartan/determinants.hpp"
#include "qcartan/partitions.hpp"
#include "qcartan/weights.hpp"

using namespace qcartan;

namespace
{

ProductForm Q(int p, std::map<int, std::int64_t> exps)
{
    ProductForm f(p);
    for (const auto &[l, e] : exps) {
        f *= ProductForm::qint(l, p, e);
    }
    return f;
}

mpz_class binom(int a, int b)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

// sum_{lambda in P(d)} m_j/(p-1) prod_i binom(p-2+m_i, m_i)
mpq_class rational_A(int j, int d, int p)
{
    mpq_class total = 0;
    for (const auto &l : enumerate_partitions(d)) {
        mpq_class t(l.multiplicity(j), p - 1);
        for (const auto &[i, m] : l.multiplicities()) {
            t *= binom(p - 2 + m, m);
        }
        total += t;
    }
    total.canonicalize();
    return total;
}

std::size_t brute_core_count(int k, int p)
{
    std::size_t c = 0;
    for (const auto &l : enumerate_partitions(k)) {
        bool core = true;
        for (int r = 1; r <= l.length() && core; ++r) {
            for (int s = 1; s <= l.row(r) && core; ++s) {
                core = l.hook_length(r, s) % p != 0;
            }
        }
        c += core;
    }
    return c;
}

// Exponent of [p]_j in prod_lambda w_G(lambda), read off the definition.
std::int64_t brute_exponent(int j, int n, int p)
{
    std::int64_t total = 0;
    for (const auto &l : enumerate_p_class_regular(n, p)) {
        for (const auto &[a, m] : l.multiplicities()) {
            std::int64_t pb = p;
            for (int b = 1; pb <= m; ++b, pb *= p) {
                if (a * pb / p == j) {
                    total += m / pb;
                }
            }
        }
    }
    return total;
}

} // namespace

TEST_CASE("block exponents")
{
    for (int p = 2; p <= 5; ++p) {
        CHECK(block_exponent(1, 0, p) == 0);
        CHECK(block_exponent(1, 1, p) == 1);
        for (int d = 0; d <= 9; ++d) {
            for (int j = 1; j <= d + 1; ++j) {
                const std::int64_t a = block_exponent(j, d, p);
                CHECK(rational_A(j, d, p) == a);
                CHECK(block_exponent_by_last_component(j, d, p) == a);
                CHECK(block_exponent_by_digit_count(j, d, p) == a);
                if (j > d) {
                    CHECK(a == 0);
                }
            }
        }
    }
    CHECK(block_exponent(1, 2, 2) == 2);
    CHECK(block_exponent(2, 2, 2) == 1);
}

TEST_CASE("block determinants")
{
    CHECK(block_determinant(0, 2).value.is_identity());
    for (int p = 2; p <= 5; ++p) {
        CHECK(block_determinant(1, p).value == ProductForm::qint(1, p));
    }
    CHECK(block_determinant(2, 2).value == Q(2, {{1, 2}, {2, 1}}));
    // prod over M_{p-1}(d) of w_H of the last component
    for (int p = 2; p <= 4; ++p) {
        for (int d = 0; d <= 7; ++d) {
            ProductForm by_h(p);
            for (const auto &mu : enumerate_multipartitions(d, p - 1)) {
                by_h *= w_H(mu.components.back(), p);
            }
            CHECK(block_determinant(d, p).value == by_h);
        }
    }
}

TEST_CASE("core counts")
{
    CHECK(core_count(0, 2) == 1);
    CHECK(core_count(5, 2) == 0);
    CHECK(core_count(2, 3) == 2);
    for (int p = 2; p <= 5; ++p) {
        for (int k = 0; k <= 16; ++k) {
            CHECK(static_cast<std::size_t>(core_count(k, p)) == brute_core_count(k, p));
        }
    }
}

TEST_CASE("Cartan determinant")
{
    CHECK(cartan_determinant(0, 2).is_identity());
    CHECK(cartan_determinant(2, 2) == Q(2, {{1, 1}}));
    CHECK(cartan_determinant(3, 2) == Q(2, {{1, 1}}));
    CHECK(cartan_determinant(4, 2) == Q(2, {{1, 2}, {2, 1}}));
    for (int p = 2; p <= 5; ++p) {
        for (int n = 0; n <= 16; ++n) {
            ProductForm by_blocks(p);
            for (int d = 0; p * d <= n; ++d) {
                by_blocks *= block_determinant(d, p).value.pow(static_cast<std::int64_t>(brute_core_count(n - p * d, p)));
            }
            const ProductForm delta = cartan_determinant(n, p);
            CHECK(delta == by_blocks);
            for (int j = 1; j <= n + 1; ++j) {
                CHECK(determinant_exponent(j, n, p) == delta.exponent(j));
                CHECK(determinant_exponent(j, n, p) == brute_exponent(j, n, p));
            }
        }
    }
    CHECK(determinant_exponent(1, 2, 2) == 1);
    CHECK(determinant_exponent(1, 3, 2) == 1);
    CHECK(determinant_exponent(3, 5, 2) == 0);
}
