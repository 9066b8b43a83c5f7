#ifndef QCARTAN_WEIGHTS_HPP
#define QCARTAN_WEIGHTS_HPP

#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "qcartan/partitions.hpp"
#include "qcartan/qpoly.hpp"

namespace qcartan
{

// prod_{p not | i} prod_{j=1}^{m_i} (j)_{[p]}
ProductForm w_E(const Partition &lambda, int p);
// prod_{j >= 1} prod_{p not | i} [p]_j^{o_p(floor(m_i / j))}
ProductForm w_H(const Partition &lambda, int p);
// w_H of the last component mu^{(p-1)}.
ProductForm w_H(const QIndex &qi);
// prod_a prod_{b >= 1} [p]_{a p^{b-1}}^{floor(m_a / p^b)}; lambda must be p-class regular.
ProductForm w_G(const Partition &lambda, int p);

struct GlaisherResult
{
    Partition image;
    // i -> number of times p copies of i were merged into one part p*i.
    std::map<int, int> step_counts;
};

// Chooses which applicable part to merge next, given the applicable parts in
// increasing order. Used to exercise confluence.
using GlaisherChooser = std::function<int(std::span<const int>)>;

// Merges p equal parts i into one part p*i until the result is p-regular,
// smallest applicable i first.
GlaisherResult glaisher(const Partition &lambda, int p);
GlaisherResult glaisher(const Partition &lambda, int p, const GlaisherChooser &choose);

// prod_i [p]_i^{d_i} from the recorded step counts.
ProductForm glaisher_weight(const GlaisherResult &g, int p);

// Union of the two multisets of parts.
Partition concat(const Partition &a, const Partition &b);

// An element (lambda; i, j, k) of the decorated diagram set: p does not divide
// i, 1 <= k <= floor(m_i(lambda) / p), p^j | k.
struct DiagramCell
{
    Partition lambda;
    int i = 1;
    int j = 0;
    int k = 1;
    int p = 2;

    friend bool operator==(const DiagramCell &, const DiagramCell &) = default;
    friend auto operator<=>(const DiagramCell &, const DiagramCell &) = default;
};

bool is_valid_cell(const DiagramCell &c);

// All (j, k) in D_i(lambda).
std::vector<std::pair<int, int>> diagram(const Partition &lambda, int p, int i);
// Every cell over lambda, i ascending then (j, k).
std::vector<DiagramCell> cells_of(const Partition &lambda, int p);
// Every cell over every p-class regular partition of n.
std::vector<DiagramCell> enumerate_cells(int n, int p);

// G(c) = i p^j
int G_value(const DiagramCell &c);
// E(c) = k / p^j
int E_value(const DiagramCell &c);

// Writes lambda = mu + (i^{pk}) with k = i' p^{j+j'} (i' the p'-part of k)
// and returns (mu + (i'^{p i p^{j+j'}}); i', j', i p^{j+j'}). An involution
// with E(theta(c)) = G(c).
DiagramCell theta(const DiagramCell &c);

} // namespace qcartan

#endif
