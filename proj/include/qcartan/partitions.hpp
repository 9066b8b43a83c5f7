#ifndef QCARTAN_PARTITIONS_HPP
#define QCARTAN_PARTITIONS_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qcartan
{

// An integer partition stored as its weakly decreasing list of positive
// parts. Instances are immutable; the multiplicity view is derived on demand.
class Partition
{
public:
    Partition() = default;

    // Parts must already be weakly decreasing and positive.
    explicit Partition(std::vector<int> parts);

    static Partition from_unsorted(std::vector<int> parts);
    // part -> multiplicity; zero multiplicities are ignored.
    static Partition from_multiplicities(const std::map<int, int> &mult);

    std::span<const int> parts() const
    {
        return parts_;
    }
    const std::vector<int> &part_vector() const
    {
        return parts_;
    }
    bool empty() const
    {
        return parts_.empty();
    }
    // |lambda|
    int size() const
    {
        return size_;
    }
    // l(lambda)
    int length() const
    {
        return static_cast<int>(parts_.size());
    }
    // Length of row r (1-based); 0 past the last row.
    int row(int r) const
    {
        return r >= 1 && r <= length() ? parts_[static_cast<std::size_t>(r - 1)] : 0;
    }
    int multiplicity(int i) const;
    std::map<int, int> multiplicities() const;

    Partition conjugate() const;
    // Dominance order: partial sums of *this are >= those of other.
    bool dominates(const Partition &other) const;
    int hook_length(int r, int c) const;

    bool is_p_regular(int p) const;
    bool is_p_class_regular(int p) const;
    bool is_strict() const;

    // "(5,3,1,1)"
    std::string to_string() const;
    // "1^2 3 5", ascending parts as in exponent notation.
    std::string to_exponent_string() const;

    friend bool operator==(const Partition &a, const Partition &b)
    {
        return a.parts_ == b.parts_;
    }
    // Lexicographic on part lists.
    friend std::strong_ordering operator<=>(const Partition &a, const Partition &b)
    {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Accepts "[5,3,1,1]", "5,3,1,1", "5 3 1 1", "1^9 3 5^3", "()" and "".
Partition parse_partition(std::string_view text);

struct Multipartition
{
    std::vector<Partition> components;

    int size() const;
    std::string to_string() const;

    friend bool operator==(const Multipartition &, const Multipartition &) = default;
    friend auto operator<=>(const Multipartition &, const Multipartition &) = default;
};

// A p-core together with a weight; the block of C_n(q) with that core.
struct BlockIndex
{
    Partition core;
    int weight = 0;
    int p = 2;

    friend bool operator==(const BlockIndex &, const BlockIndex &) = default;
    friend auto operator<=>(const BlockIndex &, const BlockIndex &) = default;
};

// An element (mu, chi) of Q_p(n); mu has p-1 components.
struct QIndex
{
    Multipartition mu;
    Partition chi;

    int p() const
    {
        return static_cast<int>(mu.components.size()) + 1;
    }
    int size() const
    {
        return p() * mu.size() + chi.size();
    }

    friend bool operator==(const QIndex &, const QIndex &) = default;
    friend auto operator<=>(const QIndex &, const QIndex &) = default;
};

struct CoreAndWeight
{
    Partition core;
    int weight = 0;
};

// All partitions of n, lexicographically decreasing: (n), (n-1,1), ...
std::vector<Partition> enumerate_partitions(int n);
std::vector<Partition> enumerate_p_regular(int n, int p);
std::vector<Partition> enumerate_p_class_regular(int n, int p);

CoreAndWeight p_core_and_weight(const Partition &lambda, int p);
bool is_p_core(const Partition &lambda, int p);
std::vector<Partition> enumerate_p_cores(int d, int p);

// r-tuples of partitions of total size d. r = 0 gives the single empty tuple
// for d = 0 and nothing otherwise.
std::vector<Multipartition> enumerate_multipartitions(int d, int r);
// Cardinality of the same set, as a product-set count over compositions of d.
std::uint64_t count_multipartitions(int d, int r);

// Q_p(n), ordered by d ascending, then multipartition, then core.
std::vector<QIndex> enumerate_Q(int n, int p);

// m_i(alpha(lambda)) = floor(m_i(lambda) / p); lambda must be p-class regular.
Partition alpha(const Partition &lambda, int p);
// mu^{(p-1)} with every part divisible by p removed.
Partition beta(const QIndex &qi);

} // namespace qcartan

#endif
