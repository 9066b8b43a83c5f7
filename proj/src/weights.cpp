#include "qcartan/weights.hpp"

#include <algorithm>
#include <stdexcept>

#include "qcartan/errors.hpp"

namespace qcartan
{

namespace
{

void check_p(int p)
{
    if (p < 2) {
        throw std::invalid_argument("p must be at least 2");
    }
}

std::int64_t ipow(std::int64_t base, int e)
{
    std::int64_t r = 1;
    for (int t = 0; t < e; ++t) {
        r *= base;
    }
    return r;
}

} // namespace

ProductForm w_E(const Partition &lambda, int p)
{
    check_p(p);
    ProductForm r(p);
    for (const auto &[i, m] : lambda.multiplicities()) {
        if (i % p == 0) {
            continue;
        }
        for (int j = 1; j <= m; ++j) {
            r *= graded_p_part(j, p);
        }
    }
    return r;
}

ProductForm w_H(const Partition &lambda, int p)
{
    check_p(p);
    ProductForm r(p);
    for (const auto &[i, m] : lambda.multiplicities()) {
        if (i % p == 0) {
            continue;
        }
        for (int j = 1; j <= m; ++j) {
            if (int e = o_p(m / j, p); e > 0) {
                r *= ProductForm::qint(j, p, e);
            }
        }
    }
    return r;
}

ProductForm w_H(const QIndex &qi)
{
    return w_H(qi.mu.components.back(), qi.p());
}

ProductForm w_G(const Partition &lambda, int p)
{
    check_p(p);
    if (!lambda.is_p_class_regular(p)) {
        throw std::invalid_argument("w_G: partition is not p-class regular");
    }
    ProductForm r(p);
    for (const auto &[a, m] : lambda.multiplicities()) {
        std::int64_t index = a;
        std::int64_t power = p;
        while (m / power > 0) {
            r *= ProductForm::qint(static_cast<int>(index), p, m / power);
            index *= p;
            power *= p;
        }
    }
    return r;
}

GlaisherResult glaisher(const Partition &lambda, int p)
{
    return glaisher(lambda, p, [](std::span<const int> applicable) { return applicable.front(); });
}

GlaisherResult glaisher(const Partition &lambda, int p, const GlaisherChooser &choose)
{
    check_p(p);
    auto mult = lambda.multiplicities();
    GlaisherResult result;
    std::vector<int> applicable;
    for (;;) {
        applicable.clear();
        for (const auto &[i, m] : mult) {
            if (m >= p) {
                applicable.push_back(i);
            }
        }
        if (applicable.empty()) {
            break;
        }
        int i = choose(applicable);
        if (std::find(applicable.begin(), applicable.end(), i) == applicable.end()) {
            throw std::invalid_argument("glaisher: chooser returned a part with multiplicity below p");
        }
        if ((mult[i] -= p) == 0) {
            mult.erase(i);
        }
        ++mult[p * i];
        ++result.step_counts[i];
    }
    result.image = Partition::from_multiplicities(mult);
    return result;
}

ProductForm glaisher_weight(const GlaisherResult &g, int p)
{
    ProductForm r(p);
    for (const auto &[i, d] : g.step_counts) {
        r *= ProductForm::qint(i, p, d);
    }
    return r;
}

Partition concat(const Partition &a, const Partition &b)
{
    std::vector<int> parts(a.parts().begin(), a.parts().end());
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return Partition::from_unsorted(std::move(parts));
}

bool is_valid_cell(const DiagramCell &c)
{
    if (c.p < 2 || c.i < 1 || c.i % c.p == 0 || c.j < 0 || c.k < 1) {
        return false;
    }
    if (!c.lambda.is_p_class_regular(c.p)) {
        return false;
    }
    if (c.k > c.lambda.multiplicity(c.i) / c.p) {
        return false;
    }
    return c.k % ipow(c.p, c.j) == 0;
}

std::vector<std::pair<int, int>> diagram(const Partition &lambda, int p, int i)
{
    check_p(p);
    if (i < 1 || i % p == 0) {
        throw std::invalid_argument("diagram: i must be positive and prime to p");
    }
    if (!lambda.is_p_class_regular(p)) {
        throw std::invalid_argument("diagram: partition is not p-class regular");
    }
    std::vector<std::pair<int, int>> cells;
    const int kmax = lambda.multiplicity(i) / p;
    for (int j = 0; ipow(p, j) <= kmax; ++j) {
        const auto step = static_cast<int>(ipow(p, j));
        for (int k = step; k <= kmax; k += step) {
            cells.emplace_back(j, k);
        }
    }
    return cells;
}

std::vector<DiagramCell> cells_of(const Partition &lambda, int p)
{
    std::vector<DiagramCell> out;
    for (const auto &[i, m] : lambda.multiplicities()) {
        if (i % p == 0 || m < p) {
            continue;
        }
        for (const auto &[j, k] : diagram(lambda, p, i)) {
            out.push_back(DiagramCell{lambda, i, j, k, p});
        }
    }
    return out;
}

std::vector<DiagramCell> enumerate_cells(int n, int p)
{
    std::vector<DiagramCell> out;
    for (const auto &l : enumerate_p_class_regular(n, p)) {
        auto cs = cells_of(l, p);
        out.insert(out.end(), cs.begin(), cs.end());
    }
    return out;
}

int G_value(const DiagramCell &c)
{
    if (!is_valid_cell(c)) {
        throw std::invalid_argument("G_value: invalid diagram cell");
    }
    return static_cast<int>(c.i * ipow(c.p, c.j));
}

int E_value(const DiagramCell &c)
{
    if (!is_valid_cell(c)) {
        throw std::invalid_argument("E_value: invalid diagram cell");
    }
    return static_cast<int>(c.k / ipow(c.p, c.j));
}

DiagramCell theta(const DiagramCell &c)
{
    if (!is_valid_cell(c)) {
        throw std::invalid_argument("theta: invalid diagram cell");
    }
    const int p = c.p;
    int i_prime = c.k;
    int e = 0; // e = j + j'
    while (i_prime % p == 0) {
        i_prime /= p;
        ++e;
    }
    const int j_prime = e - c.j;
    const auto pe = static_cast<int>(ipow(p, e));

    // Remove p*k copies of i, then add p * i * p^e copies of i'.
    auto mult = c.lambda.multiplicities();
    if ((mult[c.i] -= p * c.k) == 0) {
        mult.erase(c.i);
    }
    mult[i_prime] += p * c.i * pe;
    DiagramCell out{Partition::from_multiplicities(mult), i_prime, j_prime, c.i * pe, p};
    if (!is_valid_cell(out)) {
        throw consistency_error("theta: image is not a diagram cell");
    }
    return out;
}

} // namespace qcartan
