#ifndef QCARTAN_SMITH_HPP
#define QCARTAN_SMITH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qcartan/fock.hpp"
#include "qcartan/matrix.hpp"
#include "qcartan/poly.hpp"
#include "qcartan/qpoly.hpp"

namespace qcartan
{

// Elementary divisors over Q[q, q^{-1}], each monic with nonzero constant
// term, each dividing the next.
struct DivisorChain
{
    std::vector<LaurentPoly> divisors;
    // Number of zero invariant factors dropped from the end.
    std::size_t rank_deficiency = 0;

    std::vector<std::string> to_strings() const;
    friend bool operator==(const DivisorChain &, const DivisorChain &) = default;
};

DivisorChain snf(const Matrix<LaurentPoly> &m);
DivisorChain snf(const Matrix<QPoly> &m);

// Chain of the diagonal matrix with the expanded entries, by pairwise
// (gcd, lcm) refinement.
DivisorChain divisors_of_diagonal(const std::vector<ProductForm> &entries);
DivisorChain divisors_of_diagonal(const std::vector<LaurentPoly> &entries);

// Non-negative invariant factors d_1 | d_2 | ..., zeros last.
std::vector<mpz_class> integer_snf(Matrix<mpz_class> m);

// C(1) as an integer matrix.
Matrix<mpz_class> specialize_at_one(const Matrix<QPoly> &m);

bool is_prime(int p);

struct ChainComparison
{
    std::string lhs;
    std::string rhs;
    bool equal = true;
    std::optional<std::size_t> first_difference;
    std::string lhs_value;
    std::string rhs_value;
};

ChainComparison compare_chains(const std::string &lhs_name, const DivisorChain &lhs, const std::string &rhs_name,
                               const DivisorChain &rhs);

struct ConjectureReport
{
    int n = 0;
    int p = 2;
    // Set for a single block; the block's weight and core.
    std::optional<int> weight;
    std::optional<Partition> core;
    DivisorChain cartan_chain;
    std::vector<ChainComparison> comparisons;
    // Product of the Cartan divisors equals det up to a unit.
    bool product_matches_det = false;

    bool all_equal() const;
};

// Global form: SNF of C_n(q) against the w_E and w_G diagonals, all three pairs.
ConjectureReport check_conjecture(const GradedCartan &c);
ConjectureReport check_conjecture(int n, int p);
// Block form: each block of C against the w_H diagonal over M_{p-1}(weight).
std::vector<ConjectureReport> check_conjecture_blocks(const GradedCartan &c);
// The weight-d blocks of C_n(q).
std::vector<ConjectureReport> check_conjecture_block(int d, int p, int n);

} // namespace qcartan

#endif
