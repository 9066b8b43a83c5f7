#ifndef QCARTAN_FOCK_HPP
#define QCARTAN_FOCK_HPP

#include <map>
#include <utility>
#include <vector>

#include "qcartan/matrix.hpp"
#include "qcartan/partitions.hpp"
#include "qcartan/poly.hpp"

namespace qcartan
{

// Residue (col - row) mod p of the node in row `row`, column `col` (1-based).
int residue(int row, int col, int p);

// Finite Z[q, q^{-1}]-combination of partitions of a common size.
class FockVector
{
public:
    using Terms = std::map<Partition, ZLaurent>;

    FockVector() = default;
    static FockVector basis(const Partition &lambda);

    const Terms &terms() const
    {
        return terms_;
    }
    bool is_zero() const
    {
        return terms_.empty();
    }
    ZLaurent coeff(const Partition &lambda) const;
    void add(const Partition &lambda, const ZLaurent &c);

    FockVector &operator+=(const FockVector &o);
    FockVector &operator-=(const FockVector &o);
    friend FockVector operator*(const ZLaurent &c, const FockVector &v);

    friend bool operator==(const FockVector &, const FockVector &) = default;

private:
    Terms terms_;
};

// f_i: adds one addable i-node; the node gets q^{a - r}, where a (resp. r)
// counts addable (resp. removable) i-nodes of lambda strictly above it.
FockVector apply_f(const FockVector &v, int i, int p);
// f_i^{(a)} = f_i^a / [a]!, applied directly: a addable i-nodes at once, each
// added node weighted by the addable i-nodes of the result above it minus
// the removable i-nodes of lambda above it.
FockVector apply_f_divided(const FockVector &v, int i, int a, int p);

// (residue, multiplicity) per nonempty ladder of mu, ladders ascending.
std::vector<std::pair<int, int>> ladder_sequence(const Partition &mu, int p);
// The product of divided powers along the ladder sequence applied to the
// empty partition.
FockVector ladder_vector(const Partition &mu, int p);

struct DecompositionMatrix
{
    int p = 2;
    int n = 0;
    std::vector<Partition> rows; // P(n)
    std::vector<Partition> cols; // p-regular partitions of n
    Matrix<QPoly> entries;

    const QPoly &entry(const Partition &lambda, const Partition &mu) const;
};

// Lower global crystal basis of the level-one Fock space, one column per
// p-regular partition of n. Throws consistency_error if a column cannot be
// brought into q Z[q] form.
DecompositionMatrix canonical_basis(int n, int p);

struct GradedCartan
{
    int p = 2;
    int n = 0;
    std::vector<Partition> labels;
    Matrix<QPoly> entries;
};

GradedCartan cartan(const DecompositionMatrix &d);
GradedCartan cartan(int n, int p);

// Blocks of C_n(q), weight ascending, then core in enumeration order.
std::vector<BlockIndex> blocks(const GradedCartan &c);
// Restriction of C to the labels whose p-core is b.core.
GradedCartan block(const GradedCartan &c, const BlockIndex &b);

} // namespace qcartan

#endif
