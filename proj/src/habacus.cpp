#include "qcartan/habacus.hpp"

#include <algorithm>
#include <stdexcept>

#include "qcartan/determinants.hpp"
#include "qcartan/fock.hpp"
#include "qcartan/matrix.hpp"
#include "qcartan/weights.hpp"

namespace qcartan
{

namespace
{

void require_strict(const Partition &lambda, const char *who)
{
    if (!lambda.is_strict()) {
        throw std::invalid_argument(std::string(who) + ": partition " + lambda.to_string() + " is not strict");
    }
}

} // namespace

HAbacus HAbacus::from_partition(const Partition &lambda)
{
    require_strict(lambda, "HAbacus");
    HAbacus a;
    a.beads_.insert(lambda.parts().begin(), lambda.parts().end());
    return a;
}

std::vector<HMove> HAbacus::moves() const
{
    std::vector<HMove> out;
    for (int x : beads_) {
        if (x % 2 == 0 && x >= 4 && !beads_.count(x - 2)) {
            out.push_back({HMove::Kind::slide_even, x});
        }
    }
    if (beads_.count(2)) {
        out.push_back({HMove::Kind::remove_two, 2});
    }
    for (int x : beads_) {
        if (x % 2 == 1 && x >= 5 && !beads_.count(x - 4)) {
            out.push_back({HMove::Kind::slide_odd, x});
        }
    }
    if (beads_.count(1) && beads_.count(3)) {
        out.push_back({HMove::Kind::remove_pair, 1});
    }
    return out;
}

void HAbacus::apply(const HMove &m)
{
    const auto current = moves();
    if (std::find(current.begin(), current.end(), m) == current.end()) {
        throw std::invalid_argument("HAbacus::apply: move is not applicable");
    }
    switch (m.kind) {
    case HMove::Kind::slide_even:
        beads_.erase(m.position);
        beads_.insert(m.position - 2);
        break;
    case HMove::Kind::remove_two:
        beads_.erase(2);
        break;
    case HMove::Kind::slide_odd:
        beads_.erase(m.position);
        beads_.insert(m.position - 4);
        break;
    case HMove::Kind::remove_pair:
        beads_.erase(1);
        beads_.erase(3);
        break;
    }
}

Partition HAbacus::to_partition() const
{
    return Partition(std::vector<int>(beads_.rbegin(), beads_.rend()));
}

Partition h_core(const Partition &lambda)
{
    return h_core(lambda, [](std::span<const HMove>) { return std::size_t{0}; });
}

Partition h_core(const Partition &lambda, const HMoveChooser &choose)
{
    HAbacus a = HAbacus::from_partition(lambda);
    for (auto ms = a.moves(); !ms.empty(); ms = a.moves()) {
        const std::size_t k = choose(ms);
        if (k >= ms.size()) {
            throw std::invalid_argument("h_core: chooser index out of range");
        }
        a.apply(ms[k]);
    }
    return a.to_partition();
}

bool is_h_core(const Partition &lambda)
{
    if (!lambda.is_strict()) {
        return false;
    }
    if (lambda.empty()) {
        return true;
    }
    // (1, 5, ..., 4m+1) or (3, 7, ..., 4m+3)
    const int start = lambda.parts().back();
    if (start != 1 && start != 3) {
        return false;
    }
    for (int k = 0; k < lambda.length(); ++k) {
        if (lambda.row(lambda.length() - k) != start + 4 * k) {
            return false;
        }
    }
    return true;
}

Partition h_quotient(const Partition &lambda)
{
    require_strict(lambda, "h_quotient");
    const std::set<int> beads(lambda.parts().begin(), lambda.parts().end());
    const int top = lambda.empty() ? 0 : lambda.row(1);
    std::vector<int> seq;
    // Runner of 3 bottom-up; positions past the largest bead read 1.
    for (int x = top + (3 - top % 4 + 4) % 4; x >= 3; x -= 4) {
        seq.push_back(beads.count(x) ? 0 : 1);
    }
    // Runner of 1 top-down; positions past the largest bead read 0.
    for (int x = 1; x <= top; x += 4) {
        seq.push_back(beads.count(x) ? 1 : 0);
    }
    std::vector<int> parts;
    int zeros = 0;
    for (int bit : seq) {
        if (bit == 0) {
            ++zeros;
        } else if (zeros > 0) {
            parts.push_back(zeros);
        }
    }
    return Partition::from_unsorted(std::move(parts));
}

Partition unfold(const Partition &lambda)
{
    std::vector<int> hooks;
    for (int r = 1; r <= lambda.length() && lambda.row(r) >= r; ++r) {
        hooks.push_back(lambda.hook_length(r, r));
    }
    return Partition::from_unsorted(std::move(hooks));
}

std::vector<Partition> enumerate_odd_strict(int n)
{
    std::vector<Partition> out;
    for (auto &l : enumerate_p_class_regular(n, 2)) {
        if (l.is_strict()) {
            out.push_back(std::move(l));
        }
    }
    return out;
}

bool EmptyCoreBlockReport::pass() const
{
    return product_g == product_e && product_e == block_value && multiset_matches_w_h &&
           cartan_block_matches.value_or(true);
}

EmptyCoreBlockReport check_empty_core_block(int d, bool with_cartan)
{
    if (d < 0) {
        throw std::invalid_argument("check_empty_core_block: d must be non-negative");
    }
    EmptyCoreBlockReport rep;
    rep.d = d;
    std::vector<ProductForm> e_weights;
    for (const auto &l : enumerate_p_class_regular(2 * d, 2)) {
        if (!h_core(glaisher(l, 2).image).empty()) {
            continue;
        }
        rep.members.push_back(l);
        rep.product_g *= w_G(l, 2);
        const ProductForm we = w_E(l, 2);
        rep.product_e *= we;
        e_weights.push_back(we);
    }
    rep.block_value = block_determinant(d, 2).value;

    std::vector<ProductForm> h_weights;
    for (const auto &mu : enumerate_partitions(d)) {
        h_weights.push_back(w_H(mu, 2));
    }
    std::sort(e_weights.begin(), e_weights.end());
    std::sort(h_weights.begin(), h_weights.end());
    rep.multiset_matches_w_h = e_weights == h_weights;

    if (with_cartan) {
        const GradedCartan blk = block(cartan(2 * d, 2), BlockIndex{Partition(), d, 2});
        rep.cartan_block_matches = det_exact(blk.entries) == rep.block_value.expand();
    }
    return rep;
}

} // namespace qcartan
