#include "qcartan/smith.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "qcartan/errors.hpp"
#include "qcartan/weights.hpp"

namespace qcartan
{

namespace
{

using RatMatrix = Matrix<RatPoly>;

// Scales row r by a rational unit so its coefficients are coprime integers.
void strip_content(RatMatrix &a, std::size_t r, std::size_t from)
{
    mpz_class num_gcd = 0;
    mpz_class den_lcm = 1;
    for (std::size_t c = from; c < a.cols(); ++c) {
        for (const auto &x : a(r, c).coefficients()) {
            if (x == 0) {
                continue;
            }
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
        }
    }
    if (num_gcd == 0 || (num_gcd == 1 && den_lcm == 1)) {
        return;
    }
    const mpq_class scale(den_lcm, num_gcd);
    for (std::size_t c = from; c < a.cols(); ++c) {
        a(r, c) *= scale;
    }
}

void add_row_multiple(RatMatrix &a, std::size_t dst, std::size_t src, const RatPoly &f, std::size_t from)
{
    for (std::size_t c = from; c < a.cols(); ++c) {
        if (!a(src, c).is_zero()) {
            a(dst, c) += f * a(src, c);
        }
    }
}

void add_col_multiple(RatMatrix &a, std::size_t dst, std::size_t src, const RatPoly &f, std::size_t from)
{
    for (std::size_t r = from; r < a.rows(); ++r) {
        if (!a(r, src).is_zero()) {
            a(r, dst) += f * a(r, src);
        }
    }
}

DivisorChain finish_chain(std::vector<RatPoly> diag, std::size_t rank_deficiency)
{
    DivisorChain out;
    out.rank_deficiency = rank_deficiency;
    for (auto &d : diag) {
        out.divisors.push_back(normalize_unit(LaurentPoly(d)));
    }
    for (std::size_t k = 1; k < out.divisors.size(); ++k) {
        if (!laurent_divides(out.divisors[k - 1], out.divisors[k])) {
            throw consistency_error("snf: output is not a divisor chain");
        }
    }
    return out;
}

RatPoly lcm(const RatPoly &a, const RatPoly &b)
{
    const RatPoly g = gcd(a, b);
    return monic(exact_div(a * b, g));
}

std::vector<ProductForm> weights_over(const std::vector<Partition> &parts, int p,
                                      ProductForm (*weight)(const Partition &, int))
{
    std::vector<ProductForm> out;
    out.reserve(parts.size());
    for (const auto &l : parts) {
        out.push_back(weight(l, p));
    }
    return out;
}

bool product_matches_det(const Matrix<QPoly> &m, const DivisorChain &chain)
{
    if (chain.rank_deficiency > 0) {
        return det_exact(m).is_zero();
    }
    LaurentPoly prod(1);
    for (const auto &d : chain.divisors) {
        prod = prod * d;
    }
    return normalize_unit(prod) == normalize_unit(to_laurent(det_exact(m)));
}

void require_prime(int p)
{
    if (!is_prime(p)) {
        throw std::invalid_argument("conjecture: p = " + std::to_string(p) +
                                    " is not prime; the conjecture is stated for prime p only");
    }
}

} // namespace

std::vector<std::string> DivisorChain::to_strings() const
{
    std::vector<std::string> out;
    for (const auto &d : divisors) {
        out.push_back(to_string(d));
    }
    return out;
}

DivisorChain snf(const Matrix<LaurentPoly> &m)
{
    // Multiply through by a common power of q (a unit) to land in Q[q].
    int low = std::numeric_limits<int>::max();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (!m(r, c).is_zero()) {
                low = std::min(low, m(r, c).low_degree());
            }
        }
    }
    RatMatrix a(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (!m(r, c).is_zero()) {
                a(r, c) = m(r, c).body().shifted(m(r, c).low_degree() - low);
            }
        }
    }

    const std::size_t n = std::min(a.rows(), a.cols());
    std::vector<RatPoly> diag;
    std::size_t k = 0;
    for (; k < n; ++k) {
        bool empty = true;
        for (;;) {
            // Pivot: a nonzero entry of least degree.
            std::size_t pr = 0;
            std::size_t pc = 0;
            int best = std::numeric_limits<int>::max();
            for (std::size_t r = k; r < a.rows(); ++r) {
                for (std::size_t c = k; c < a.cols(); ++c) {
                    if (!a(r, c).is_zero() && a(r, c).degree() < best) {
                        best = a(r, c).degree();
                        pr = r;
                        pc = c;
                    }
                }
            }
            if (best == std::numeric_limits<int>::max()) {
                break;
            }
            empty = false;
            a.swap_rows(k, pr);
            a.swap_cols(k, pc);
            const mpq_class inv = 1 / a(k, k).leading();
            for (std::size_t c = k; c < a.cols(); ++c) {
                a(k, c) *= inv;
            }

            bool clean = true;
            for (std::size_t r = k + 1; r < a.rows(); ++r) {
                if (a(r, k).is_zero()) {
                    continue;
                }
                auto [quo, rem] = divmod(a(r, k), a(k, k));
                add_row_multiple(a, r, k, -quo, k);
                strip_content(a, r, k);
                clean = clean && rem.is_zero();
            }
            for (std::size_t c = k + 1; c < a.cols(); ++c) {
                if (a(k, c).is_zero()) {
                    continue;
                }
                auto [quo, rem] = divmod(a(k, c), a(k, k));
                add_col_multiple(a, c, k, -quo, k);
                clean = clean && rem.is_zero();
            }
            if (!clean) {
                continue;
            }
            // Row and column are clear; the pivot must divide the rest.
            std::size_t bad = 0;
            for (std::size_t r = k + 1; r < a.rows() && bad == 0; ++r) {
                for (std::size_t c = k + 1; c < a.cols(); ++c) {
                    if (!a(r, c).is_zero() && !divmod(a(r, c), a(k, k)).second.is_zero()) {
                        bad = r;
                        break;
                    }
                }
            }
            if (bad == 0) {
                break;
            }
            add_row_multiple(a, k, bad, RatPoly(1), k);
        }
        if (empty) {
            break;
        }
        diag.push_back(a(k, k));
    }
    DivisorChain out = finish_chain(std::move(diag), n - k);

    if (m.is_square() && out.rank_deficiency == 0) {
        Matrix<RatPoly> body(m.rows(), m.cols());
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c) {
                if (!m(r, c).is_zero()) {
                    body(r, c) = m(r, c).body().shifted(m(r, c).low_degree() - low);
                }
            }
        }
        LaurentPoly prod(1);
        for (const auto &d : out.divisors) {
            prod = prod * d;
        }
        if (!(normalize_unit(prod) == normalize_unit(LaurentPoly(det_exact(body))))) {
            throw consistency_error("snf: product of divisors differs from the determinant");
        }
    }
    return out;
}

DivisorChain snf(const Matrix<QPoly> &m)
{
    return snf(m.map([](const QPoly &x) { return to_laurent(x); }));
}

DivisorChain divisors_of_diagonal(const std::vector<LaurentPoly> &entries)
{
    if (entries.empty()) {
        throw std::invalid_argument("divisors_of_diagonal: no entries");
    }
    std::vector<RatPoly> d;
    std::size_t zeros = 0;
    for (const auto &e : entries) {
        if (e.is_zero()) {
            ++zeros;
        } else {
            d.push_back(normalize_unit(e).body());
        }
    }
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            if (divmod(d[j], d[i]).second.is_zero()) {
                continue;
            }
            RatPoly g = gcd(d[i], d[j]);
            RatPoly l = lcm(d[i], d[j]);
            d[i] = std::move(g);
            d[j] = std::move(l);
        }
    }
    return finish_chain(std::move(d), zeros);
}

DivisorChain divisors_of_diagonal(const std::vector<ProductForm> &entries)
{
    std::vector<LaurentPoly> e;
    e.reserve(entries.size());
    for (const auto &f : entries) {
        e.push_back(to_laurent(f.expand()));
    }
    return divisors_of_diagonal(e);
}

std::vector<mpz_class> integer_snf(Matrix<mpz_class> a)
{
    const std::size_t n = std::min(a.rows(), a.cols());
    std::vector<mpz_class> out;
    for (std::size_t k = 0; k < n; ++k) {
        bool empty = true;
        for (;;) {
            std::size_t pr = 0;
            std::size_t pc = 0;
            mpz_class best = 0;
            for (std::size_t r = k; r < a.rows(); ++r) {
                for (std::size_t c = k; c < a.cols(); ++c) {
                    if (a(r, c) != 0 && (best == 0 || abs(a(r, c)) < best)) {
                        best = abs(a(r, c));
                        pr = r;
                        pc = c;
                    }
                }
            }
            if (best == 0) {
                break;
            }
            empty = false;
            a.swap_rows(k, pr);
            a.swap_cols(k, pc);
            bool clean = true;
            for (std::size_t r = k + 1; r < a.rows(); ++r) {
                if (a(r, k) == 0) {
                    continue;
                }
                mpz_class quo = a(r, k) / a(k, k);
                for (std::size_t c = k; c < a.cols(); ++c) {
                    a(r, c) -= quo * a(k, c);
                }
                clean = clean && a(r, k) == 0;
            }
            for (std::size_t c = k + 1; c < a.cols(); ++c) {
                if (a(k, c) == 0) {
                    continue;
                }
                mpz_class quo = a(k, c) / a(k, k);
                for (std::size_t r = k; r < a.rows(); ++r) {
                    a(r, c) -= quo * a(r, k);
                }
                clean = clean && a(k, c) == 0;
            }
            if (!clean) {
                continue;
            }
            std::size_t bad = 0;
            for (std::size_t r = k + 1; r < a.rows() && bad == 0; ++r) {
                for (std::size_t c = k + 1; c < a.cols(); ++c) {
                    if (!mpz_divisible_p(a(r, c).get_mpz_t(), a(k, k).get_mpz_t())) {
                        bad = r;
                        break;
                    }
                }
            }
            if (bad == 0) {
                break;
            }
            for (std::size_t c = k; c < a.cols(); ++c) {
                a(k, c) += a(bad, c);
            }
        }
        if (empty) {
            break;
        }
        out.push_back(abs(a(k, k)));
    }
    out.resize(n, mpz_class(0));
    return out;
}

Matrix<mpz_class> specialize_at_one(const Matrix<QPoly> &m)
{
    return m.map([](const QPoly &x) { return x.eval(mpz_class(1)); });
}

bool is_prime(int p)
{
    if (p < 2) {
        return false;
    }
    for (int d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

ChainComparison compare_chains(const std::string &lhs_name, const DivisorChain &lhs, const std::string &rhs_name,
                               const DivisorChain &rhs)
{
    ChainComparison c;
    c.lhs = lhs_name;
    c.rhs = rhs_name;
    const std::size_t len = std::max(lhs.divisors.size(), rhs.divisors.size());
    for (std::size_t k = 0; k < len; ++k) {
        const bool in_l = k < lhs.divisors.size();
        const bool in_r = k < rhs.divisors.size();
        if (in_l && in_r && lhs.divisors[k] == rhs.divisors[k]) {
            continue;
        }
        c.equal = false;
        c.first_difference = k;
        c.lhs_value = in_l ? to_string(lhs.divisors[k]) : "<none>";
        c.rhs_value = in_r ? to_string(rhs.divisors[k]) : "<none>";
        return c;
    }
    if (lhs.rank_deficiency != rhs.rank_deficiency) {
        c.equal = false;
        c.first_difference = len;
        c.lhs_value = "rank deficiency " + std::to_string(lhs.rank_deficiency);
        c.rhs_value = "rank deficiency " + std::to_string(rhs.rank_deficiency);
    }
    return c;
}

bool ConjectureReport::all_equal() const
{
    return std::all_of(comparisons.begin(), comparisons.end(), [](const ChainComparison &c) { return c.equal; });
}

ConjectureReport check_conjecture(const GradedCartan &c)
{
    require_prime(c.p);
    ConjectureReport rep;
    rep.n = c.n;
    rep.p = c.p;
    rep.cartan_chain = snf(c.entries);
    rep.product_matches_det = product_matches_det(c.entries, rep.cartan_chain);
    const auto labels = enumerate_p_class_regular(c.n, c.p);
    const DivisorChain e = divisors_of_diagonal(weights_over(labels, c.p, &w_E));
    const DivisorChain g = divisors_of_diagonal(weights_over(labels, c.p, &w_G));
    rep.comparisons.push_back(compare_chains("snf(C)", rep.cartan_chain, "diag(w_E)", e));
    rep.comparisons.push_back(compare_chains("snf(C)", rep.cartan_chain, "diag(w_G)", g));
    rep.comparisons.push_back(compare_chains("diag(w_E)", e, "diag(w_G)", g));
    return rep;
}

ConjectureReport check_conjecture(int n, int p)
{
    require_prime(p);
    return check_conjecture(cartan(n, p));
}

std::vector<ConjectureReport> check_conjecture_blocks(const GradedCartan &c)
{
    require_prime(c.p);
    std::vector<ConjectureReport> out;
    for (const auto &b : blocks(c)) {
        const GradedCartan blk = block(c, b);
        ConjectureReport rep;
        rep.n = c.n;
        rep.p = c.p;
        rep.weight = b.weight;
        rep.core = b.core;
        rep.cartan_chain = snf(blk.entries);
        rep.product_matches_det = product_matches_det(blk.entries, rep.cartan_chain);
        std::vector<ProductForm> h;
        for (const auto &mu : enumerate_multipartitions(b.weight, c.p - 1)) {
            h.push_back(w_H(mu.components.back(), c.p));
        }
        rep.comparisons.push_back(compare_chains("snf(block)", rep.cartan_chain, "diag(w_H)", divisors_of_diagonal(h)));
        out.push_back(std::move(rep));
    }
    return out;
}

std::vector<ConjectureReport> check_conjecture_block(int d, int p, int n)
{
    require_prime(p);
    if (d < 0 || p * d > n) {
        throw std::invalid_argument("check_conjecture_block: need 0 <= p*d <= n");
    }
    std::vector<ConjectureReport> out;
    for (auto &rep : check_conjecture_blocks(cartan(n, p))) {
        if (rep.weight == d) {
            out.push_back(std::move(rep));
        }
    }
    return out;
}

} // namespace qcartan
