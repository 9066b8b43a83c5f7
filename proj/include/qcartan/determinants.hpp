#ifndef QCARTAN_DETERMINANTS_HPP
#define QCARTAN_DETERMINANTS_HPP

#include <cstdint>
#include <map>

#include "qcartan/qpoly.hpp"

namespace qcartan
{

// Determinant of a weight-d block of the graded Cartan matrix, kept as
// prod_j [p]_j^{A_j(d)}; independent of n and of the block's core.
struct BlockDeterminant
{
    int d = 0;
    int p = 2;
    ProductForm value{2};
    // j -> A_j(d), positive entries only (A_j(d) = 0 for j > d).
    std::map<int, std::int64_t> exponents;
};

// A_j(d) = sum_{lambda in P(d)} multichoose(p, m_j - 1) prod_{i != j} multichoose(p - 1, m_i)
std::int64_t block_exponent(int j, int d, int p);

// A_j(d) as sum over (p-1)-multipartitions mu of d of m_j(mu^{(p-1)}).
std::int64_t block_exponent_by_last_component(int j, int d, int p);
// A_j(d) as sum over the same set of sum_{p not | i} o_p(floor(m_i(mu^{(p-1)}) / j)).
std::int64_t block_exponent_by_digit_count(int j, int d, int p);

// Cached per (p, d); safe to call concurrently.
BlockDeterminant block_determinant(int d, int p);

// prod_{0 <= d <= n/p} block_determinant(d, p)^{c_p(n - pd)}
ProductForm cartan_determinant(int n, int p);

// Exponent of [p]_j in cartan_determinant(n, p).
std::int64_t determinant_exponent(int j, int n, int p);

// c_p(k) = number of p-cores of k; cached.
std::int64_t core_count(int k, int p);

} // namespace qcartan

#endif
