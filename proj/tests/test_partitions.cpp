#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "qcartan/partitions.hpp"

using namespace qcartan;

namespace
{

Partition P(std::vector<int> parts)
{
    return Partition(std::move(parts));
}

// Recursive enumeration with largest part at most m.
void all_partitions(int n, int m, std::vector<int> &cur, std::set<Partition> &out)
{
    if (n == 0) {
        out.insert(Partition(cur));
        return;
    }
    for (int k = std::min(n, m); k >= 1; --k) {
        cur.push_back(k);
        all_partitions(n - k, k, cur, out);
        cur.pop_back();
    }
}

std::set<Partition> brute_partitions(int n)
{
    std::set<Partition> out;
    std::vector<int> cur;
    all_partitions(n, n, cur, out);
    return out;
}

Partition from_beta(const std::set<int> &beta)
{
    std::vector<int> parts;
    int i = 0;
    for (auto it = beta.rbegin(); it != beta.rend(); ++it, ++i) {
        const int part = *it - (static_cast<int>(beta.size()) - 1 - i);
        if (part > 0) {
            parts.push_back(part);
        }
    }
    return Partition(parts);
}

// Every sequence of p-hook removals on beta numbers; returns the set of end points.
void remove_hooks(const std::set<int> &beta, int p, int removed, std::set<std::pair<Partition, int>> &ends)
{
    bool any = false;
    for (int b : beta) {
        if (b >= p && !beta.count(b - p)) {
            any = true;
            std::set<int> next = beta;
            next.erase(b);
            next.insert(b - p);
            remove_hooks(next, p, removed + 1, ends);
        }
    }
    if (!any) {
        ends.insert({from_beta(beta), removed});
    }
}

std::pair<Partition, int> brute_core(const Partition &l, int p)
{
    std::set<int> beta;
    const int len = l.length();
    for (int i = 1; i <= len; ++i) {
        beta.insert(l.row(i) + len - i);
    }
    std::set<std::pair<Partition, int>> ends;
    remove_hooks(beta, p, 0, ends);
    REQUIRE(ends.size() == 1);
    return *ends.begin();
}

bool has_hook_divisible_by(const Partition &l, int p)
{
    for (int r = 1; r <= l.length(); ++r) {
        for (int c = 1; c <= l.row(r); ++c) {
            if (l.hook_length(r, c) % p == 0) {
                return true;
            }
        }
    }
    return false;
}

} // namespace

TEST_CASE("enumeration matches recursive oracle, in lex-decreasing order")
{
    for (int n = 0; n <= 14; ++n) {
        const auto ls = enumerate_partitions(n);
        const auto oracle = brute_partitions(n);
        CHECK(std::set<Partition>(ls.begin(), ls.end()) == oracle);
        CHECK(ls.size() == oracle.size());
        CHECK(std::is_sorted(ls.begin(), ls.end(), std::greater<>()));
    }
    CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition()});
    CHECK(enumerate_partitions(4) ==
          std::vector<Partition>{P({4}), P({3, 1}), P({2, 2}), P({2, 1, 1}), P({1, 1, 1, 1})});
    CHECK(enumerate_partitions(30).size() == 5604);
}

TEST_CASE("regular and class regular filters")
{
    CHECK(enumerate_p_regular(5, 2) == std::vector<Partition>{P({5}), P({4, 1}), P({3, 2})});
    CHECK(enumerate_p_class_regular(5, 2) == std::vector<Partition>{P({5}), P({3, 1, 1}), P({1, 1, 1, 1, 1})});
    for (int p = 2; p <= 5; ++p) {
        CHECK(enumerate_p_regular(0, p) == std::vector<Partition>{Partition()});
        CHECK(enumerate_p_class_regular(0, p) == std::vector<Partition>{Partition()});
        for (int n = 1; n <= 16; ++n) {
            std::size_t reg = 0;
            std::size_t cls = 0;
            for (const auto &l : brute_partitions(n)) {
                const auto m = l.multiplicities();
                reg += std::all_of(m.begin(), m.end(), [&](auto &e) { return e.second < p; });
                cls += std::all_of(m.begin(), m.end(), [&](auto &e) { return e.first % p != 0; });
            }
            CHECK(enumerate_p_regular(n, p).size() == reg);
            CHECK(enumerate_p_class_regular(n, p).size() == cls);
        }
    }
    const Partition l = parse_partition("1^9 3 5^3");
    CHECK(l.size() == 27);
    CHECK(l.is_p_class_regular(2));
    const auto members = enumerate_p_class_regular(27, 2);
    CHECK(std::find(members.begin(), members.end(), l) != members.end());
}

TEST_CASE("p-core and weight agree with exhaustive hook removal")
{
    CHECK(p_core_and_weight(P({2, 1}), 2).core == P({2, 1}));
    CHECK(p_core_and_weight(P({2, 1}), 2).weight == 0);
    CHECK(p_core_and_weight(P({4, 1, 1}), 2).core == Partition());
    CHECK(p_core_and_weight(P({4, 1, 1}), 2).weight == 3);
    CHECK(p_core_and_weight(P({5}), 3).core == P({2}));
    CHECK(p_core_and_weight(P({5}), 3).weight == 1);
    for (int p = 2; p <= 4; ++p) {
        for (int n = 0; n <= 11; ++n) {
            for (const auto &l : enumerate_partitions(n)) {
                const auto cw = p_core_and_weight(l, p);
                const auto [core, removed] = brute_core(l, p);
                CHECK(cw.core == core);
                CHECK(cw.weight == removed);
                CHECK(!has_hook_divisible_by(cw.core, p));
                CHECK(is_p_core(l, p) == !has_hook_divisible_by(l, p));
            }
        }
    }
}

TEST_CASE("cores of small sizes")
{
    CHECK(enumerate_p_cores(0, 2) == std::vector<Partition>{Partition()});
    CHECK(enumerate_p_cores(5, 2).empty());
    const auto c3 = enumerate_p_cores(2, 3);
    CHECK(std::set<Partition>(c3.begin(), c3.end()) == std::set<Partition>{P({2}), P({1, 1})});
    // 2-cores are staircases
    for (int n = 0; n <= 21; ++n) {
        int m = 0;
        while (m * (m + 1) / 2 < n) {
            ++m;
        }
        CHECK(enumerate_p_cores(n, 2).size() == (m * (m + 1) / 2 == n ? 1u : 0u));
    }
}

TEST_CASE("multipartitions")
{
    const auto m = enumerate_multipartitions(1, 2);
    REQUIRE(m.size() == 2);
    CHECK(std::set<Multipartition>(m.begin(), m.end()) ==
          std::set<Multipartition>{Multipartition{{P({1}), Partition()}}, Multipartition{{Partition(), P({1})}}});
    CHECK(enumerate_multipartitions(2, 1).size() == 2);
    CHECK(count_multipartitions(3, 2) == 10);
    for (int r = 1; r <= 4; ++r) {
        for (int d = 0; d <= 7; ++d) {
            const auto ms = enumerate_multipartitions(d, r);
            CHECK(ms.size() == count_multipartitions(d, r));
            CHECK(std::set<Multipartition>(ms.begin(), ms.end()).size() == ms.size());
            for (const auto &mu : ms) {
                CHECK(mu.size() == d);
                CHECK(mu.components.size() == static_cast<std::size_t>(r));
            }
        }
    }
}

TEST_CASE("Q index set")
{
    CHECK(enumerate_Q(0, 2).size() == 1);
    const auto q3 = enumerate_Q(3, 2);
    REQUIRE(q3.size() == 2);
    std::set<std::pair<Partition, Partition>> got;
    for (const auto &qi : q3) {
        got.insert({qi.mu.components.at(0), qi.chi});
        CHECK(qi.size() == 3);
    }
    CHECK(got == std::set<std::pair<Partition, Partition>>{{Partition(), P({2, 1})}, {P({1}), P({1})}});
    CHECK(enumerate_Q(5, 2).size() == 3);
}

TEST_CASE("alpha and beta")
{
    CHECK(alpha(parse_partition("1^9 3 5^3"), 2) == parse_partition("1^4 5"));
    CHECK(alpha(Partition(), 2) == Partition());
    QIndex qi{Multipartition{{parse_partition("1^2 2 4")}}, P({1})};
    CHECK(beta(qi) == P({1, 1}));
}

TEST_CASE("partition basics")
{
    const Partition l = P({5, 3, 1, 1});
    CHECK(l.conjugate() == P({4, 2, 2, 1, 1}));
    CHECK(l.conjugate().conjugate() == l);
    CHECK(l.hook_length(1, 1) == 8);
    CHECK(P({3, 1}).dominates(P({2, 2})));
    CHECK(!P({2, 2}).dominates(P({3, 1})));
    CHECK(!P({3, 1, 1, 1}).dominates(P({2, 2, 2})));
    CHECK(!P({2, 2, 2}).dominates(P({3, 1, 1, 1})));
    CHECK(l.to_string() == "(5,3,1,1)");
    CHECK(parse_partition("1^9 3 5^3").to_exponent_string() == "1^9 3 5^3");
    CHECK(parse_partition("[5,3,1,1]") == l);
    CHECK(parse_partition("5,3,1,1") == l);
    CHECK(parse_partition("5 3 1 1") == l);
    CHECK(parse_partition("()") == Partition());
    CHECK(parse_partition("") == Partition());
    CHECK_THROWS_AS(parse_partition("3,x"), std::invalid_argument);
    CHECK_THROWS(Partition({1, 3}));
    CHECK_THROWS(Partition({2, 0}));
}
