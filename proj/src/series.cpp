#include "qcartan/series.hpp"

#include <map>
#include <stdexcept>

#include "qcartan/determinants.hpp"
#include "qcartan/partitions.hpp"

namespace qcartan
{

TruncatedSeries::TruncatedSeries(int order) : order_(order), c_(static_cast<std::size_t>(order) + 1, 0)
{
    if (order < 0) {
        throw std::invalid_argument("TruncatedSeries: negative order");
    }
}

TruncatedSeries::TruncatedSeries(std::vector<mpz_class> coeffs, int order) : TruncatedSeries(order)
{
    if (coeffs.size() > c_.size()) {
        throw std::invalid_argument("TruncatedSeries: more coefficients than the order allows");
    }
    std::copy(coeffs.begin(), coeffs.end(), c_.begin());
}

TruncatedSeries TruncatedSeries::one(int order)
{
    return monomial(1, 0, order);
}

TruncatedSeries TruncatedSeries::monomial(const mpz_class &c, int k, int order)
{
    if (k < 0) {
        throw std::invalid_argument("TruncatedSeries::monomial: negative exponent");
    }
    TruncatedSeries s(order);
    if (k <= order) {
        s.c_[static_cast<std::size_t>(k)] = c;
    }
    return s;
}

TruncatedSeries TruncatedSeries::geometric(int k, int order)
{
    if (k < 1) {
        throw std::invalid_argument("TruncatedSeries::geometric: k must be positive");
    }
    TruncatedSeries s(order);
    for (int t = 0; t <= order; t += k) {
        s.c_[static_cast<std::size_t>(t)] = 1;
    }
    return s;
}

const mpz_class &TruncatedSeries::operator[](int k) const
{
    if (k < 0 || k > order_) {
        throw std::out_of_range("TruncatedSeries: coefficient " + std::to_string(k) + " beyond truncation order " +
                                std::to_string(order_));
    }
    return c_[static_cast<std::size_t>(k)];
}

void TruncatedSeries::check_same_order(const TruncatedSeries &o) const
{
    if (o.order_ != order_) {
        throw std::invalid_argument("TruncatedSeries: operands have different truncation orders");
    }
}

TruncatedSeries &TruncatedSeries::operator+=(const TruncatedSeries &o)
{
    check_same_order(o);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        c_[k] += o.c_[k];
    }
    return *this;
}

TruncatedSeries &TruncatedSeries::operator-=(const TruncatedSeries &o)
{
    check_same_order(o);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        c_[k] -= o.c_[k];
    }
    return *this;
}

TruncatedSeries &TruncatedSeries::operator*=(const TruncatedSeries &o)
{
    check_same_order(o);
    std::vector<mpz_class> r(c_.size(), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j < c_.size(); ++j) {
            r[i + j] += c_[i] * o.c_[j];
        }
    }
    c_ = std::move(r);
    return *this;
}

TruncatedSeries TruncatedSeries::inverse() const
{
    const mpz_class &c0 = c_[0];
    if (c0 != 1 && c0 != -1) {
        throw std::domain_error("TruncatedSeries::inverse: constant term is not a unit");
    }
    TruncatedSeries r(order_);
    r.c_[0] = c0;
    for (std::size_t n = 1; n < c_.size(); ++n) {
        mpz_class acc = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            acc += c_[k] * r.c_[n - k];
        }
        r.c_[n] = -acc * c0;
    }
    return r;
}

TruncatedSeries TruncatedSeries::pow(int e) const
{
    if (e < 0) {
        return inverse().pow(-e);
    }
    TruncatedSeries r = one(order_);
    TruncatedSeries base = *this;
    while (e > 0) {
        if (e & 1) {
            r *= base;
        }
        e >>= 1;
        if (e > 0) {
            base *= base;
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::substitute_xp(int p) const
{
    if (p < 1) {
        throw std::invalid_argument("TruncatedSeries::substitute_xp: p must be positive");
    }
    TruncatedSeries r(order_);
    for (int k = 0; k * p <= order_; ++k) {
        r.c_[static_cast<std::size_t>(k * p)] = c_[static_cast<std::size_t>(k)];
    }
    return r;
}

TruncatedSeries TruncatedSeries::shifted(int k) const
{
    if (k < 0) {
        throw std::invalid_argument("TruncatedSeries::shifted: negative shift");
    }
    TruncatedSeries r(order_);
    for (int n = k; n <= order_; ++n) {
        r.c_[static_cast<std::size_t>(n)] = c_[static_cast<std::size_t>(n - k)];
    }
    return r;
}

TruncatedSeries phi(int order)
{
    TruncatedSeries r = TruncatedSeries::one(order);
    for (int n = 1; n <= order; ++n) {
        r *= TruncatedSeries::one(order) - TruncatedSeries::monomial(1, n, order);
    }
    return r;
}

TruncatedSeries inverse(const TruncatedSeries &s)
{
    return s.inverse();
}

TruncatedSeries multiply(const TruncatedSeries &a, const TruncatedSeries &b)
{
    return a * b;
}

TruncatedSeries power(const TruncatedSeries &s, int e)
{
    return s.pow(e);
}

TruncatedSeries substitute_xp(const TruncatedSeries &s, int p)
{
    return s.substitute_xp(p);
}

bool SeriesReport::all_pass() const
{
    for (const auto &c : checks) {
        if (!c.pass) {
            return false;
        }
    }
    return true;
}

namespace
{

IdentityCheck compare(std::string name, std::string closed_form, int p, const TruncatedSeries &expected,
                      const std::vector<mpz_class> &counts)
{
    IdentityCheck check{std::move(name), std::move(closed_form), p, true, std::nullopt, {}, {}};
    for (int n = 0; n <= expected.order(); ++n) {
        const mpz_class &actual = counts.at(static_cast<std::size_t>(n));
        if (expected[n] != actual) {
            check.pass = false;
            check.first_failure = n;
            check.expected = expected[n].get_str();
            check.actual = actual.get_str();
            break;
        }
    }
    return check;
}

} // namespace

SeriesReport oracle_counts(int order, int p)
{
    if (p < 2) {
        throw std::invalid_argument("oracle_counts: p must be at least 2");
    }
    if (order < 0 || order > max_oracle_order) {
        throw std::invalid_argument("oracle_counts: order must lie in [0, " + std::to_string(max_oracle_order) + "]");
    }
    const int N = order;
    const auto sz = static_cast<std::size_t>(N) + 1;
    SeriesReport report{N, p, {}};
    auto &out = report.checks;

    const TruncatedSeries ph = phi(N);
    const TruncatedSeries ph_inv = ph.inverse();
    const TruncatedSeries ph_p = ph.substitute_xp(p);
    const TruncatedSeries ph_pp = ph.substitute_xp(p * p);

    std::vector<std::vector<Partition>> all(sz);
    std::vector<mpz_class> n_part(sz), n_class(sz), n_reg(sz), n_core(sz), n_mp(sz), n_mp1(sz);
    for (int n = 0; n <= N; ++n) {
        const auto k = static_cast<std::size_t>(n);
        all[k] = enumerate_partitions(n);
        n_part[k] = all[k].size();
        for (const auto &l : all[k]) {
            if (l.is_p_class_regular(p)) {
                n_class[k] += 1;
            }
            if (l.is_p_regular(p)) {
                n_reg[k] += 1;
            }
            if (is_p_core(l, p)) {
                n_core[k] += 1;
            }
        }
        n_mp[k] = static_cast<unsigned long>(count_multipartitions(n, p));
        n_mp1[k] = static_cast<unsigned long>(count_multipartitions(n, p - 1));
    }

    out.push_back(compare("partition-count", "1/phi(x)", p, ph_inv, n_part));
    out.push_back(compare("class-regular-count", "phi(x^p)/phi(x) vs #P_(p)(n)", p, ph_p * ph_inv, n_class));
    out.push_back(compare("regular-count", "phi(x^p)/phi(x) vs #P^(p)(n)", p, ph_p * ph_inv, n_reg));
    out.push_back(compare("multipartition-count", "1/phi(x)^p vs #M_p(n)", p, ph.pow(-p), n_mp));
    out.push_back(compare("multipartition-count-p-1", "1/phi(x)^(p-1) vs #M_(p-1)(n)", p, ph.pow(-(p - 1)), n_mp1));
    out.push_back(compare("core-count", "phi(x^p)^p/phi(x) vs c_p(n)", p, ph_p.pow(p) * ph_inv, n_core));

    // Z(n) = U_k M_{p-1}(k) x Core_p(n - pk) is Q_p(n); its series is the
    // product of the counting series of the two factors, x -> x^p on the first.
    {
        std::vector<mpz_class> a_counts(n_mp1), b_counts(n_core);
        TruncatedSeries a_series(a_counts, N);
        TruncatedSeries b_series(b_counts, N);
        std::vector<mpz_class> z(sz);
        for (int n = 0; n <= N; ++n) {
            z[static_cast<std::size_t>(n)] = static_cast<unsigned long>(enumerate_Q(n, p).size());
        }
        out.push_back(compare("Q-convolution", "(sum #M_(p-1)(n) x^(pn)) (sum c_p(n) x^n) vs #Q_p(n)", p,
                              a_series.substitute_xp(p) * b_series, z));
        out.push_back(compare("Q-vs-class-regular", "#Q_p(n) vs #P_(p)(n)", p, TruncatedSeries(n_class, N), z));
    }

    // Fibers of alpha and beta over small nu.
    {
        std::map<Partition, std::vector<mpz_class>> alpha_fibers;
        std::map<Partition, std::vector<mpz_class>> beta_fibers;
        for (int n = 0; n <= N; ++n) {
            for (const auto &l : all[static_cast<std::size_t>(n)]) {
                if (!l.is_p_class_regular(p)) {
                    continue;
                }
                auto &row = alpha_fibers[alpha(l, p)];
                row.resize(sz);
                row[static_cast<std::size_t>(n)] += 1;
            }
            for (const auto &qi : enumerate_Q(n, p)) {
                auto &row = beta_fibers[beta(qi)];
                row.resize(sz);
                row[static_cast<std::size_t>(n)] += 1;
            }
        }
        const TruncatedSeries a_form = ph_p.pow(2) * ph_inv * ph_pp.inverse();
        const TruncatedSeries b_form = ph_p.pow(-(p - 2)) * ph_pp.inverse() * ph_p.pow(p) * ph_inv;
        for (int s = 0; s <= 2; ++s) {
            for (const auto &nu : enumerate_p_class_regular(s, p)) {
                auto arow = alpha_fibers.count(nu) ? alpha_fibers[nu] : std::vector<mpz_class>(sz);
                auto brow = beta_fibers.count(nu) ? beta_fibers[nu] : std::vector<mpz_class>(sz);
                arow.resize(sz);
                brow.resize(sz);
                out.push_back(compare("fiber-alpha" + nu.to_string(), "x^(p|nu|) phi(x^p)^2/(phi(x) phi(x^(p^2)))", p,
                                      a_form.shifted(p * s), arow));
                out.push_back(compare("fiber-beta" + nu.to_string(),
                                      "x^(p|nu|) phi(x^p)^-(p-2) phi(x^(p^2))^-1 phi(x^p)^p/phi(x)", p,
                                      b_form.shifted(p * s), brow));
            }
        }
    }

    // N_{j,n}: exponent of [p]_j in Delta_{p,n}.
    for (int j = 1; j * p <= N && j <= 4; ++j) {
        const TruncatedSeries form =
            TruncatedSeries::monomial(1, j * p, N) * TruncatedSeries::geometric(j * p, N) * ph_p * ph_inv;
        std::vector<mpz_class> from_delta(sz), from_enum(sz);
        int a = j;
        int b = 1;
        while (a % p == 0) {
            a /= p;
            ++b;
        }
        long pb = 1;
        for (int t = 0; t < b; ++t) {
            pb *= p;
        }
        for (int n = 0; n <= N; ++n) {
            const auto k = static_cast<std::size_t>(n);
            from_delta[k] = static_cast<long>(determinant_exponent(j, n, p));
            for (const auto &l : all[k]) {
                if (l.is_p_class_regular(p)) {
                    from_enum[k] += l.multiplicity(a) / pb;
                }
            }
        }
        const std::string js = std::to_string(j);
        out.push_back(compare("N-series-determinants(j=" + js + ")", "x^(jp)/(1-x^(jp)) phi(x^p)/phi(x)", p, form,
                              from_delta));
        out.push_back(
            compare("N-series-enumeration(j=" + js + ")", "x^(jp)/(1-x^(jp)) phi(x^p)/phi(x)", p, form, from_enum));
    }

    // The two series in the generating-function proof of the A_j(d) identity.
    {
        std::vector<mpz_class> n_mp2(sz);
        for (int n = 0; n <= N; ++n) {
            n_mp2[static_cast<std::size_t>(n)] = static_cast<unsigned long>(count_multipartitions(n, p - 2));
        }
        for (int j = 1; j <= 4 && j <= N; ++j) {
            const TruncatedSeries form =
                TruncatedSeries::monomial(1, j, N) * TruncatedSeries::geometric(j, N) * ph.pow(-(p - 1));
            // sum over (mu^(1..p-2), mu^(p-1)) of m_j(mu^(p-1)): product set M_{p-2}(d-k) x P(k).
            std::vector<mpz_class> s_j(sz), via_multi(sz), via_a(sz);
            for (int k = 0; k <= N; ++k) {
                for (const auto &l : all[static_cast<std::size_t>(k)]) {
                    s_j[static_cast<std::size_t>(k)] += l.multiplicity(j);
                }
            }
            for (int d = 0; d <= N; ++d) {
                for (int k = 0; k <= d; ++k) {
                    via_multi[static_cast<std::size_t>(d)] +=
                        n_mp2[static_cast<std::size_t>(d - k)] * s_j[static_cast<std::size_t>(k)];
                }
                via_a[static_cast<std::size_t>(d)] = static_cast<long>(block_exponent(j, d, p));
            }
            const std::string js = std::to_string(j);
            out.push_back(compare("A-series-multipartitions(j=" + js + ")", "x^j/((1-x^j) phi(x)^(p-1))", p, form,
                                  via_multi));
            out.push_back(compare("A-series-block-exponent(j=" + js + ")", "x^j/((1-x^j) phi(x)^(p-1))", p, form, via_a));
        }
    }
    return report;
}

} // namespace qcartan
