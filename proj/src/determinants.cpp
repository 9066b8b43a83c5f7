#include "qcartan/determinants.hpp"

#include <mutex>
#include <stdexcept>
#include <utility>

#include "qcartan/errors.hpp"
#include "qcartan/partitions.hpp"

namespace qcartan
{

namespace
{

void check_args(int d, int p)
{
    if (p < 2) {
        throw std::invalid_argument("p must be at least 2");
    }
    if (d < 0) {
        throw std::invalid_argument("block weight must be non-negative");
    }
}

// Combinations with repetition: choose k from n kinds.
mpz_class multichoose(int n, int k)
{
    if (k < 0) {
        return 0;
    }
    if (k == 0) {
        return 1;
    }
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n + k - 1), static_cast<unsigned long>(k));
    return r;
}

// One pass over P(d) yields every A_j(d).
std::map<int, std::int64_t> all_block_exponents(int d, int p)
{
    std::map<int, mpz_class> acc;
    for (const auto &l : enumerate_partitions(d)) {
        const auto mult = l.multiplicities();
        mpz_class base = 1;
        for (const auto &[i, m] : mult) {
            base *= multichoose(p - 1, m);
        }
        for (const auto &[j, mj] : mult) {
            // Replace the j-th factor multichoose(p-1, m_j) by multichoose(p, m_j - 1).
            mpz_class term = base / multichoose(p - 1, mj) * multichoose(p, mj - 1);
            acc[j] += term;
        }
    }
    std::map<int, std::int64_t> out;
    for (const auto &[j, v] : acc) {
        if (!v.fits_slong_p()) {
            throw consistency_error("block exponent overflows 64 bits");
        }
        if (v != 0) {
            out[j] = v.get_si();
        }
    }
    return out;
}

std::mutex cache_mutex;
std::map<std::pair<int, int>, BlockDeterminant> block_cache;
std::map<std::pair<int, int>, std::int64_t> core_cache;

} // namespace

std::int64_t block_exponent(int j, int d, int p)
{
    check_args(d, p);
    if (j < 1) {
        throw std::invalid_argument("block_exponent: j must be positive");
    }
    auto bd = block_determinant(d, p);
    auto it = bd.exponents.find(j);
    return it == bd.exponents.end() ? 0 : it->second;
}

std::int64_t block_exponent_by_last_component(int j, int d, int p)
{
    check_args(d, p);
    std::int64_t s = 0;
    for (const auto &mu : enumerate_multipartitions(d, p - 1)) {
        s += mu.components.back().multiplicity(j);
    }
    return s;
}

std::int64_t block_exponent_by_digit_count(int j, int d, int p)
{
    check_args(d, p);
    if (j < 1) {
        throw std::invalid_argument("block_exponent_by_digit_count: j must be positive");
    }
    std::int64_t s = 0;
    for (const auto &mu : enumerate_multipartitions(d, p - 1)) {
        for (const auto &[i, m] : mu.components.back().multiplicities()) {
            if (i % p != 0) {
                s += o_p(m / j, p);
            }
        }
    }
    return s;
}

BlockDeterminant block_determinant(int d, int p)
{
    check_args(d, p);
    const auto key = std::make_pair(p, d);
    {
        std::lock_guard lock(cache_mutex);
        if (auto it = block_cache.find(key); it != block_cache.end()) {
            return it->second;
        }
    }
    BlockDeterminant bd{d, p, ProductForm(p), all_block_exponents(d, p)};
    for (const auto &[j, e] : bd.exponents) {
        bd.value *= ProductForm::qint(j, p, e);
    }
    std::lock_guard lock(cache_mutex);
    return block_cache.emplace(key, std::move(bd)).first->second;
}

std::int64_t core_count(int k, int p)
{
    check_args(k, p);
    const auto key = std::make_pair(p, k);
    {
        std::lock_guard lock(cache_mutex);
        if (auto it = core_cache.find(key); it != core_cache.end()) {
            return it->second;
        }
    }
    auto c = static_cast<std::int64_t>(enumerate_p_cores(k, p).size());
    std::lock_guard lock(cache_mutex);
    return core_cache.emplace(key, c).first->second;
}

ProductForm cartan_determinant(int n, int p)
{
    check_args(n, p);
    ProductForm r(p);
    for (int d = 0; d <= n / p; ++d) {
        auto c = core_count(n - p * d, p);
        if (c > 0) {
            r *= block_determinant(d, p).value.pow(c);
        }
    }
    return r;
}

std::int64_t determinant_exponent(int j, int n, int p)
{
    check_args(n, p);
    if (j < 1) {
        throw std::invalid_argument("determinant_exponent: j must be positive");
    }
    std::int64_t s = 0;
    for (int d = 0; d <= n / p; ++d) {
        s += core_count(n - p * d, p) * block_exponent(j, d, p);
    }
    return s;
}

} // namespace qcartan
