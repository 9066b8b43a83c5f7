#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "qcartan/determinants.hpp"
#include "qcartan/habacus.hpp"

using namespace qcartan;

namespace
{

Partition P(std::vector<int> parts)
{
    return Partition(std::move(parts));
}

void all_stalemates(const HAbacus &a, std::set<Partition> &out)
{
    const auto ms = a.moves();
    if (ms.empty()) {
        out.insert(a.to_partition());
        return;
    }
    for (const auto &m : ms) {
        HAbacus next = a;
        next.apply(m);
        all_stalemates(next, out);
    }
}

std::vector<Partition> strict_partitions(int n)
{
    std::vector<Partition> out;
    for (auto &l : enumerate_partitions(n)) {
        if (l.is_strict()) {
            out.push_back(std::move(l));
        }
    }
    return out;
}

bool triangular(int n)
{
    int m = 0;
    while (m * (m + 1) / 2 < n) {
        ++m;
    }
    return m * (m + 1) / 2 == n;
}

} // namespace

TEST_CASE("H-core examples")
{
    CHECK(h_core(P({9, 7, 3, 2})) == P({3}));
    CHECK(h_core(P({1})) == P({1}));
    std::set<Partition> ends;
    all_stalemates(HAbacus::from_partition(P({4, 3, 1})), ends);
    REQUIRE(ends.size() == 1);
    CHECK(h_core(P({4, 3, 1})) == *ends.begin());
    CHECK(is_h_core(*ends.begin()));
    CHECK(ends.begin()->size() <= 8);
    CHECK_THROWS_AS(h_core(P({2, 2})), std::invalid_argument);
    CHECK_THROWS_AS(h_quotient(P({2, 2})), std::invalid_argument);
}

TEST_CASE("moves are confluent")
{
    for (int n = 0; n <= 16; ++n) {
        for (const auto &l : strict_partitions(n)) {
            std::set<Partition> ends;
            all_stalemates(HAbacus::from_partition(l), ends);
            CHECK(ends.size() == 1);
            CHECK(h_core(l) == *ends.begin());
        }
    }
    std::mt19937 rng(17);
    for (int n = 17; n <= 30; ++n) {
        for (const auto &l : strict_partitions(n)) {
            const Partition c = h_core(l);
            CHECK(is_h_core(c));
            CHECK(triangular(c.size()));
            CHECK((l.size() - c.size()) % 2 == 0);
            const Partition random_order = h_core(l, [&](std::span<const HMove> ms) { return rng() % ms.size(); });
            CHECK(random_order == c);
        }
    }
}

TEST_CASE("H-cores")
{
    CHECK(is_h_core(Partition()));
    CHECK(is_h_core(P({9, 5, 1})));
    CHECK(is_h_core(P({7, 3})));
    CHECK(!is_h_core(P({5, 3})));
    CHECK(!is_h_core(P({2})));
}

TEST_CASE("H-quotient")
{
    CHECK(h_quotient(P({9, 7, 3, 2})) == P({4}));
    for (const auto &c : {Partition(), P({1}), P({5, 1}), P({3}), P({7, 3}), P({11, 7, 3})}) {
        CHECK(h_quotient(c) == Partition());
    }
    for (const auto &core : {Partition(), P({1}), P({3}), P({5, 1}), P({7, 3})}) {
        for (int d = 0; d <= 5; ++d) {
            std::set<Partition> images;
            std::size_t members = 0;
            for (const auto &l : enumerate_p_class_regular(4 * d + core.size(), 2)) {
                if (!l.is_strict() || h_core(l) != core) {
                    continue;
                }
                ++members;
                const Partition qt = h_quotient(l);
                CHECK(qt.size() == d);
                images.insert(qt);
            }
            CHECK(members == images.size());
            CHECK(images.size() == enumerate_partitions(d).size());
        }
    }
}

TEST_CASE("unfolding")
{
    CHECK(unfold(P({4, 3, 2, 1})) == P({7, 3}));
    CHECK(unfold(Partition()) == Partition());
    CHECK(unfold(P({1})) == P({1}));
    std::set<Partition> images;
    for (int m = 0; m <= 12; ++m) {
        std::vector<int> stair;
        for (int k = m; k >= 1; --k) {
            stair.push_back(k);
        }
        const Partition u = unfold(Partition(stair));
        CHECK(u.size() == m * (m + 1) / 2);
        CHECK(is_h_core(u));
        images.insert(u);
    }
    CHECK(images.size() == 13);
}

TEST_CASE("odd strict partitions")
{
    CHECK(enumerate_odd_strict(8) == std::vector<Partition>{P({7, 1}), P({5, 3})});
    CHECK(enumerate_odd_strict(0) == std::vector<Partition>{Partition()});
}

TEST_CASE("empty H-core blocks")
{
    const EmptyCoreBlockReport r0 = check_empty_core_block(0);
    CHECK(r0.product_g.is_identity());
    CHECK(r0.product_e.is_identity());
    CHECK(r0.pass());
    const EmptyCoreBlockReport r1 = check_empty_core_block(1, true);
    CHECK(r1.members == std::vector<Partition>{P({1, 1})});
    CHECK(r1.product_g == ProductForm::qint(1, 2));
    CHECK(r1.product_e == ProductForm::qint(1, 2));
    CHECK(r1.cartan_block_matches == true);
    const EmptyCoreBlockReport r2 = check_empty_core_block(2, true);
    CHECK(r2.product_g.expand() == block_determinant(2, 2).value.expand());
    CHECK(r2.pass());
    for (int d = 0; d <= 8; ++d) {
        const EmptyCoreBlockReport r = check_empty_core_block(d, 2 * d <= 10);
        CHECK(r.pass());
        CHECK(r.members.size() == enumerate_partitions(d).size());
        CHECK(r.cartan_block_matches.has_value() == (2 * d <= 10));
    }
}
