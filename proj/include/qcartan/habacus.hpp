#ifndef QCARTAN_HABACUS_HPP
#define QCARTAN_HABACUS_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "qcartan/partitions.hpp"
#include "qcartan/qpoly.hpp"

namespace qcartan
{

// Runners: the even positions 2, 4, 6, ... (leftmost), 1, 5, 9, ... and 3, 7, 11, ...
struct HMove
{
    enum class Kind
    {
        slide_even = 1,  // bead at 2k moves to 2k - 2
        remove_two = 2,  // bead at 2 is removed
        slide_odd = 3,   // bead at x >= 5 moves to x - 4
        remove_pair = 4, // beads at 1 and 3 are removed together
    };
    Kind kind;
    int position;

    friend bool operator==(const HMove &, const HMove &) = default;
};

class HAbacus
{
public:
    // lambda must be strict.
    static HAbacus from_partition(const Partition &lambda);

    const std::set<int> &beads() const
    {
        return beads_;
    }
    // Applicable moves, by kind then position ascending.
    std::vector<HMove> moves() const;
    bool is_stalemate() const
    {
        return moves().empty();
    }
    void apply(const HMove &m);
    Partition to_partition() const;

private:
    std::set<int> beads_;
};

// Picks the index of the next move among the applicable ones.
using HMoveChooser = std::function<std::size_t(std::span<const HMove>)>;

// Stalemate reached by moves (1)-(4), first applicable move first.
Partition h_core(const Partition &lambda);
Partition h_core(const Partition &lambda, const HMoveChooser &choose);
bool is_h_core(const Partition &lambda);

// Partition read from the Maya diagram of runners 3 (bottom-up) and 1 (top-down).
Partition h_quotient(const Partition &lambda);

// Diagonal hook lengths, as a strict partition.
Partition unfold(const Partition &lambda);

// Odd strict partitions of n.
std::vector<Partition> enumerate_odd_strict(int n);

struct EmptyCoreBlockReport
{
    int d = 0;
    // Odd partitions of 2d whose Glaisher image has empty H-core.
    std::vector<Partition> members;
    ProductForm product_g{2};
    ProductForm product_e{2};
    ProductForm block_value{2};
    // {w_E(lambda)} equals {w_H(mu) : mu in P(d)} as multisets.
    bool multiset_matches_w_h = false;
    // Determinant of the empty-core block of C_{2d}(q), when computed.
    std::optional<bool> cartan_block_matches;

    bool pass() const;
};

// With with_cartan the empty-core block of C_{2d}(q) is built by the LLT
// algorithm and its determinant compared as well.
EmptyCoreBlockReport check_empty_core_block(int d, bool with_cartan = false);

} // namespace qcartan

#endif
