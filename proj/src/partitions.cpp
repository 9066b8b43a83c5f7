#include "qcartan/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qcartan
{

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] < 1) {
            throw std::invalid_argument("Partition: parts must be positive");
        }
        if (k > 0 && parts_[k] > parts_[k - 1]) {
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts)
{
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::from_multiplicities(const std::map<int, int> &mult)
{
    std::vector<int> parts;
    for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
        if (it->second < 0) {
            throw std::invalid_argument("Partition: negative multiplicity");
        }
        parts.insert(parts.end(), static_cast<std::size_t>(it->second), it->first);
    }
    return Partition(std::move(parts));
}

int Partition::multiplicity(int i) const
{
    auto range = std::equal_range(parts_.begin(), parts_.end(), i, std::greater<>());
    return static_cast<int>(range.second - range.first);
}

std::map<int, int> Partition::multiplicities() const
{
    std::map<int, int> m;
    for (int x : parts_) {
        ++m[x];
    }
    return m;
}

Partition Partition::conjugate() const
{
    if (parts_.empty()) {
        return {};
    }
    std::vector<int> c(static_cast<std::size_t>(parts_.front()), 0);
    for (int x : parts_) {
        for (int j = 0; j < x; ++j) {
            ++c[static_cast<std::size_t>(j)];
        }
    }
    return Partition(std::move(c));
}

bool Partition::dominates(const Partition &other) const
{
    if (size_ != other.size_) {
        return false;
    }
    int a = 0;
    int b = 0;
    int len = std::max(length(), other.length());
    for (int r = 1; r <= len; ++r) {
        a += row(r);
        b += other.row(r);
        if (a < b) {
            return false;
        }
    }
    return true;
}

int Partition::hook_length(int r, int c) const
{
    if (c < 1 || c > row(r)) {
        throw std::invalid_argument("Partition::hook_length: cell outside diagram");
    }
    int leg = 0;
    for (int s = r + 1; row(s) >= c; ++s) {
        ++leg;
    }
    return row(r) - c + leg + 1;
}

bool Partition::is_p_regular(int p) const
{
    for (const auto &[part, m] : multiplicities()) {
        if (m >= p) {
            return false;
        }
    }
    return true;
}

bool Partition::is_p_class_regular(int p) const
{
    return std::none_of(parts_.begin(), parts_.end(), [p](int x) { return x % p == 0; });
}

bool Partition::is_strict() const
{
    return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

std::string Partition::to_string() const
{
    std::string s = "(";
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k > 0) {
            s += ',';
        }
        s += std::to_string(parts_[k]);
    }
    return s + ")";
}

std::string Partition::to_exponent_string() const
{
    if (parts_.empty()) {
        return "()";
    }
    std::string s;
    for (const auto &[part, m] : multiplicities()) {
        if (!s.empty()) {
            s += ' ';
        }
        s += std::to_string(part);
        if (m > 1) {
            s += '^' + std::to_string(m);
        }
    }
    return s;
}

Partition parse_partition(std::string_view text)
{
    std::string cleaned;
    for (char ch : text) {
        if (ch == '[' || ch == ']' || ch == '(' || ch == ')' || ch == ',') {
            cleaned += ' ';
        } else {
            cleaned += ch;
        }
    }
    std::istringstream in(cleaned);
    std::vector<int> parts;
    std::string tok;
    while (in >> tok) {
        auto caret = tok.find('^');
        try {
            std::size_t used = 0;
            int part = std::stoi(tok.substr(0, caret), &used);
            if (used != (caret == std::string::npos ? tok.size() : caret)) {
                throw std::invalid_argument(tok);
            }
            int mult = 1;
            if (caret != std::string::npos) {
                std::string m = tok.substr(caret + 1);
                mult = std::stoi(m, &used);
                if (used != m.size() || mult < 0) {
                    throw std::invalid_argument(tok);
                }
            }
            if (part < 1) {
                throw std::invalid_argument(tok);
            }
            parts.insert(parts.end(), static_cast<std::size_t>(mult), part);
        } catch (const std::logic_error &) {
            throw std::invalid_argument("parse_partition: bad token '" + tok + "'");
        }
    }
    return Partition::from_unsorted(std::move(parts));
}

int Multipartition::size() const
{
    int s = 0;
    for (const auto &c : components) {
        s += c.size();
    }
    return s;
}

std::string Multipartition::to_string() const
{
    std::string s = "(";
    for (std::size_t k = 0; k < components.size(); ++k) {
        if (k > 0) {
            s += ';';
        }
        s += components[k].to_string();
    }
    return s + ")";
}

namespace
{

void check_p(int p)
{
    if (p < 2) {
        throw std::invalid_argument("p must be at least 2");
    }
}

void partitions_rec(int remaining, int max_part, std::vector<int> &cur, std::vector<Partition> &out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_rec(remaining - part, part, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n)
{
    if (n < 0) {
        throw std::invalid_argument("enumerate_partitions: n must be non-negative");
    }
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

std::vector<Partition> enumerate_p_regular(int n, int p)
{
    check_p(p);
    std::vector<Partition> out;
    for (auto &l : enumerate_partitions(n)) {
        if (l.is_p_regular(p)) {
            out.push_back(std::move(l));
        }
    }
    return out;
}

std::vector<Partition> enumerate_p_class_regular(int n, int p)
{
    check_p(p);
    std::vector<Partition> out;
    for (auto &l : enumerate_partitions(n)) {
        if (l.is_p_class_regular(p)) {
            out.push_back(std::move(l));
        }
    }
    return out;
}

CoreAndWeight p_core_and_weight(const Partition &lambda, int p)
{
    check_p(p);
    const int len = lambda.length();
    if (len == 0) {
        return {Partition(), 0};
    }
    // First-column hook lengths; slide every bead as far up its runner as it goes.
    std::vector<int> beads_on_runner(static_cast<std::size_t>(p), 0);
    for (int r = 1; r <= len; ++r) {
        int beta = lambda.row(r) + len - r;
        ++beads_on_runner[static_cast<std::size_t>(beta % p)];
    }
    std::vector<int> beta_core;
    for (int runner = 0; runner < p; ++runner) {
        for (int t = 0; t < beads_on_runner[static_cast<std::size_t>(runner)]; ++t) {
            beta_core.push_back(runner + t * p);
        }
    }
    std::sort(beta_core.begin(), beta_core.end(), std::greater<>());
    std::vector<int> parts;
    for (int k = 0; k < len; ++k) {
        int part = beta_core[static_cast<std::size_t>(k)] - (len - 1 - k);
        if (part > 0) {
            parts.push_back(part);
        }
    }
    Partition core(std::move(parts));
    return {core, (lambda.size() - core.size()) / p};
}

bool is_p_core(const Partition &lambda, int p)
{
    return p_core_and_weight(lambda, p).weight == 0;
}

std::vector<Partition> enumerate_p_cores(int d, int p)
{
    check_p(p);
    std::vector<Partition> out;
    for (auto &l : enumerate_partitions(d)) {
        if (is_p_core(l, p)) {
            out.push_back(std::move(l));
        }
    }
    return out;
}

std::vector<Multipartition> enumerate_multipartitions(int d, int r)
{
    if (d < 0 || r < 0) {
        throw std::invalid_argument("enumerate_multipartitions: negative argument");
    }
    if (r == 0) {
        return d == 0 ? std::vector<Multipartition>{Multipartition{}} : std::vector<Multipartition>{};
    }
    std::vector<std::vector<Partition>> by_size;
    for (int k = 0; k <= d; ++k) {
        by_size.push_back(enumerate_partitions(k));
    }
    std::vector<Multipartition> out;
    Multipartition cur;
    cur.components.resize(static_cast<std::size_t>(r));
    std::function<void(int, int)> rec = [&](int slot, int remaining) {
        if (slot == r - 1) {
            for (const auto &l : by_size[static_cast<std::size_t>(remaining)]) {
                cur.components[static_cast<std::size_t>(slot)] = l;
                out.push_back(cur);
            }
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            for (const auto &l : by_size[static_cast<std::size_t>(k)]) {
                cur.components[static_cast<std::size_t>(slot)] = l;
                rec(slot + 1, remaining - k);
            }
        }
    };
    rec(0, d);
    return out;
}

std::uint64_t count_multipartitions(int d, int r)
{
    if (d < 0 || r < 0) {
        throw std::invalid_argument("count_multipartitions: negative argument");
    }
    std::vector<std::uint64_t> single(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) {
        single[static_cast<std::size_t>(k)] = enumerate_partitions(k).size();
    }
    std::vector<std::uint64_t> acc(static_cast<std::size_t>(d) + 1, 0);
    acc[0] = 1;
    for (int t = 0; t < r; ++t) {
        std::vector<std::uint64_t> next(acc.size(), 0);
        for (int a = 0; a <= d; ++a) {
            for (int b = 0; a + b <= d; ++b) {
                next[static_cast<std::size_t>(a + b)] += acc[static_cast<std::size_t>(a)] * single[static_cast<std::size_t>(b)];
            }
        }
        acc = std::move(next);
    }
    return acc[static_cast<std::size_t>(d)];
}

std::vector<QIndex> enumerate_Q(int n, int p)
{
    check_p(p);
    if (n < 0) {
        throw std::invalid_argument("enumerate_Q: n must be non-negative");
    }
    std::vector<QIndex> out;
    for (int d = 0; d <= n / p; ++d) {
        auto cores = enumerate_p_cores(n - p * d, p);
        if (cores.empty()) {
            continue;
        }
        for (const auto &mu : enumerate_multipartitions(d, p - 1)) {
            for (const auto &chi : cores) {
                out.push_back(QIndex{mu, chi});
            }
        }
    }
    return out;
}

Partition alpha(const Partition &lambda, int p)
{
    check_p(p);
    if (!lambda.is_p_class_regular(p)) {
        throw std::invalid_argument("alpha: partition is not p-class regular");
    }
    std::map<int, int> m;
    for (const auto &[part, mult] : lambda.multiplicities()) {
        if (mult / p > 0) {
            m[part] = mult / p;
        }
    }
    return Partition::from_multiplicities(m);
}

Partition beta(const QIndex &qi)
{
    const int p = qi.p();
    check_p(p);
    std::vector<int> parts;
    for (int x : qi.mu.components.back().parts()) {
        if (x % p != 0) {
            parts.push_back(x);
        }
    }
    return Partition(std::move(parts));
}

} // namespace qcartan
