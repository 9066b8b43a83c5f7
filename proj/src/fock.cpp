#include "qcartan/fock.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "qcartan/errors.hpp"

namespace qcartan
{

int residue(int row, int col, int p)
{
    if (row < 1 || col < 1) {
        throw std::invalid_argument("residue: rows and columns are 1-based");
    }
    if (p < 2) {
        throw std::invalid_argument("p must be at least 2");
    }
    return ((col - row) % p + p) % p;
}

FockVector FockVector::basis(const Partition &lambda)
{
    FockVector v;
    v.terms_.emplace(lambda, ZLaurent(1));
    return v;
}

ZLaurent FockVector::coeff(const Partition &lambda) const
{
    auto it = terms_.find(lambda);
    return it == terms_.end() ? ZLaurent() : it->second;
}

void FockVector::add(const Partition &lambda, const ZLaurent &c)
{
    if (c.is_zero()) {
        return;
    }
    if (!terms_.empty() && terms_.begin()->first.size() != lambda.size()) {
        throw std::invalid_argument("FockVector: partitions of different sizes");
    }
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

FockVector &FockVector::operator+=(const FockVector &o)
{
    for (const auto &[l, c] : o.terms_) {
        add(l, c);
    }
    return *this;
}

FockVector &FockVector::operator-=(const FockVector &o)
{
    for (const auto &[l, c] : o.terms_) {
        add(l, -c);
    }
    return *this;
}

FockVector operator*(const ZLaurent &c, const FockVector &v)
{
    FockVector out;
    if (c.is_zero()) {
        return out;
    }
    for (const auto &[l, x] : v.terms_) {
        out.terms_.emplace(l, c * x);
    }
    return out;
}

namespace
{

// Rows (1-based) of the addable and removable nodes of residue i.
struct INodes
{
    std::vector<int> addable;
    std::vector<int> removable;
};

INodes i_nodes(const Partition &l, int i, int p)
{
    INodes out;
    for (int r = 1; r <= l.length() + 1; ++r) {
        const int c = l.row(r) + 1;
        if ((r == 1 || l.row(r - 1) >= c) && residue(r, c, p) == i) {
            out.addable.push_back(r);
        }
        if (r <= l.length() && l.row(r) > l.row(r + 1) && residue(r, l.row(r), p) == i) {
            out.removable.push_back(r);
        }
    }
    return out;
}

int count_above(const std::vector<int> &rows, int r)
{
    return static_cast<int>(std::lower_bound(rows.begin(), rows.end(), r) - rows.begin());
}

Partition add_nodes(const Partition &l, const std::vector<int> &rows)
{
    std::vector<int> parts(l.parts().begin(), l.parts().end());
    for (int r : rows) {
        if (r == static_cast<int>(parts.size()) + 1) {
            parts.push_back(1);
        } else {
            ++parts[static_cast<std::size_t>(r - 1)];
        }
    }
    return Partition(std::move(parts));
}

void check_residue(int i, int p)
{
    if (p < 2) {
        throw std::invalid_argument("p must be at least 2");
    }
    if (i < 0 || i >= p) {
        throw std::invalid_argument("residue out of range");
    }
}

// Bar-invariant a with c - a in q Z[q].
ZLaurent bar_symmetric_part(const ZLaurent &c)
{
    ZLaurent a;
    for (int k = c.low_degree(); k <= 0; ++k) {
        const mpz_class ck = c.coeff(k);
        if (ck == 0) {
            continue;
        }
        a += ZLaurent::monomial(ck, k);
        if (k < 0) {
            a += ZLaurent::monomial(ck, -k);
        }
    }
    return a;
}

} // namespace

FockVector apply_f(const FockVector &v, int i, int p)
{
    return apply_f_divided(v, i, 1, p);
}

FockVector apply_f_divided(const FockVector &v, int i, int a, int p)
{
    check_residue(i, p);
    if (a < 1) {
        throw std::invalid_argument("apply_f_divided: a must be positive");
    }
    FockVector out;
    for (const auto &[lambda, c] : v.terms()) {
        const INodes nodes = i_nodes(lambda, i, p);
        const int total = static_cast<int>(nodes.addable.size());
        if (total < a) {
            continue;
        }
        // Every a-subset of the addable i-nodes, encoded by a selection mask.
        std::vector<bool> pick(static_cast<std::size_t>(total), false);
        std::fill(pick.begin(), pick.begin() + a, true);
        do {
            std::vector<int> rows;
            for (int t = 0; t < total; ++t) {
                if (pick[static_cast<std::size_t>(t)]) {
                    rows.push_back(nodes.addable[static_cast<std::size_t>(t)]);
                }
            }
            const Partition nu = add_nodes(lambda, rows);
            const INodes after = i_nodes(nu, i, p);
            int exponent = 0;
            for (int r : rows) {
                exponent += count_above(after.addable, r) - count_above(nodes.removable, r);
            }
            out.add(nu, c * ZLaurent::monomial(1, exponent));
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return out;
}

std::vector<std::pair<int, int>> ladder_sequence(const Partition &mu, int p)
{
    if (p < 2) {
        throw std::invalid_argument("p must be at least 2");
    }
    if (!mu.is_p_regular(p)) {
        throw std::invalid_argument("ladder_sequence: partition is not p-regular");
    }
    std::map<int, int> per_ladder;
    for (int r = 1; r <= mu.length(); ++r) {
        for (int c = 1; c <= mu.row(r); ++c) {
            ++per_ladder[(r - 1) + (p - 1) * (c - 1)];
        }
    }
    std::vector<std::pair<int, int>> seq;
    for (const auto &[ladder, count] : per_ladder) {
        seq.emplace_back((p - ladder % p) % p, count);
    }
    return seq;
}

FockVector ladder_vector(const Partition &mu, int p)
{
    FockVector v = FockVector::basis(Partition());
    for (const auto &[i, a] : ladder_sequence(mu, p)) {
        v = apply_f_divided(v, i, a, p);
    }
    return v;
}

const QPoly &DecompositionMatrix::entry(const Partition &lambda, const Partition &mu) const
{
    auto r = std::find(rows.begin(), rows.end(), lambda);
    auto c = std::find(cols.begin(), cols.end(), mu);
    if (r == rows.end() || c == cols.end()) {
        throw std::invalid_argument("DecompositionMatrix::entry: unknown label");
    }
    return entries(static_cast<std::size_t>(r - rows.begin()), static_cast<std::size_t>(c - cols.begin()));
}

DecompositionMatrix canonical_basis(int n, int p)
{
    if (n < 0) {
        throw std::invalid_argument("canonical_basis: n must be non-negative");
    }
    DecompositionMatrix dm;
    dm.p = p;
    dm.n = n;
    dm.rows = enumerate_partitions(n);
    dm.cols = enumerate_p_regular(n, p);
    dm.entries = Matrix<QPoly>(dm.rows.size(), dm.cols.size());

    // Lex order refines dominance, so lex-increasing processing has every
    // dominated G(nu) available when G(mu) needs it.
    std::map<Partition, FockVector> done;
    for (auto it = dm.cols.rbegin(); it != dm.cols.rend(); ++it) {
        const Partition &mu = *it;
        FockVector v = ladder_vector(mu, p);
        if (!(v.coeff(mu) == ZLaurent(1))) {
            throw consistency_error("canonical_basis: leading coefficient of " + mu.to_string() + " is not 1");
        }
        for (const auto &[lambda, c] : v.terms()) {
            if (!mu.dominates(lambda)) {
                throw consistency_error("canonical_basis: " + lambda.to_string() + " not dominated by " +
                                        mu.to_string());
            }
        }
        for (;;) {
            const Partition *offender = nullptr;
            for (auto t = v.terms().rbegin(); t != v.terms().rend(); ++t) {
                if (t->first != mu && done.count(t->first) && !t->second.in_positive_part()) {
                    offender = &t->first;
                    break;
                }
            }
            if (offender == nullptr) {
                break;
            }
            const Partition nu = *offender;
            v -= bar_symmetric_part(v.coeff(nu)) * done.at(nu);
        }
        for (const auto &[lambda, c] : v.terms()) {
            if (lambda != mu && !c.in_positive_part()) {
                throw consistency_error("canonical_basis: coefficient of " + lambda.to_string() + " in G(" +
                                        mu.to_string() + ") is not in qZ[q]");
            }
        }
        done.emplace(mu, v);
    }

    for (std::size_t c = 0; c < dm.cols.size(); ++c) {
        const FockVector &g = done.at(dm.cols[c]);
        const Partition core = p_core_and_weight(dm.cols[c], p).core;
        for (std::size_t r = 0; r < dm.rows.size(); ++r) {
            const ZLaurent x = g.coeff(dm.rows[r]);
            if (x.is_zero()) {
                continue;
            }
            if (p_core_and_weight(dm.rows[r], p).core != core) {
                throw consistency_error("canonical_basis: column " + dm.cols[c].to_string() +
                                        " meets a different p-core at " + dm.rows[r].to_string());
            }
            dm.entries(r, c) = x.to_poly();
            for (const auto &k : dm.entries(r, c).coefficients()) {
                if (k < 0) {
                    throw consistency_error("canonical_basis: negative coefficient in column " +
                                            dm.cols[c].to_string());
                }
            }
        }
    }
    return dm;
}

GradedCartan cartan(const DecompositionMatrix &d)
{
    GradedCartan c;
    c.p = d.p;
    c.n = d.n;
    c.labels = d.cols;
    c.entries = d.entries.transposed() * d.entries;
    std::vector<Partition> cores;
    for (const auto &l : c.labels) {
        cores.push_back(p_core_and_weight(l, c.p).core);
    }
    for (std::size_t r = 0; r < c.labels.size(); ++r) {
        for (std::size_t s = 0; s < c.labels.size(); ++s) {
            if (cores[r] != cores[s] && !c.entries(r, s).is_zero()) {
                throw consistency_error("cartan: nonzero entry between blocks at " + c.labels[r].to_string() + ", " +
                                        c.labels[s].to_string());
            }
        }
    }
    return c;
}

GradedCartan cartan(int n, int p)
{
    return cartan(canonical_basis(n, p));
}

std::vector<BlockIndex> blocks(const GradedCartan &c)
{
    std::vector<BlockIndex> out;
    for (int d = 0; d <= c.n / c.p; ++d) {
        for (const auto &core : enumerate_p_cores(c.n - c.p * d, c.p)) {
            out.push_back(BlockIndex{core, d, c.p});
        }
    }
    return out;
}

GradedCartan block(const GradedCartan &c, const BlockIndex &b)
{
    if (b.p != c.p || b.weight < 0 || b.core.size() + c.p * b.weight != c.n || !is_p_core(b.core, c.p)) {
        throw std::invalid_argument("block: unknown block label " + b.core.to_string());
    }
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < c.labels.size(); ++k) {
        if (p_core_and_weight(c.labels[k], c.p).core == b.core) {
            idx.push_back(k);
        }
    }
    GradedCartan out;
    out.p = c.p;
    out.n = c.n;
    out.entries = Matrix<QPoly>(idx.size(), idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r) {
        out.labels.push_back(c.labels[idx[r]]);
        for (std::size_t s = 0; s < idx.size(); ++s) {
            out.entries(r, s) = c.entries(idx[r], idx[s]);
        }
    }
    return out;
}

} // namespace qcartan
