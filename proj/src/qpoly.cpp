#include "qcartan/qpoly.hpp"

#include <stdexcept>

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

} // namespace

QPoly qint_p(int l, int p)
{
    check_p(p);
    if (l < 1) {
        throw std::invalid_argument("qint_p: l must be positive");
    }
    std::vector<mpz_class> c(static_cast<std::size_t>(2 * l * (p - 1)) + 1, 0);
    for (int t = 0; t < p; ++t) {
        c[static_cast<std::size_t>(2 * l * t)] = 1;
    }
    return QPoly(std::move(c));
}

int o_p(std::int64_t m, int p)
{
    check_p(p);
    if (m < 0) {
        throw std::invalid_argument("o_p: negative argument");
    }
    int digits = 0;
    while (m > 0) {
        m /= p;
        ++digits;
    }
    return digits;
}

mpz_class p_part(std::int64_t k, int p)
{
    check_p(p);
    if (k < 1) {
        throw std::invalid_argument("p_part: k must be positive");
    }
    mpz_class r = 1;
    while (k % p == 0) {
        k /= p;
        r *= p;
    }
    return r;
}

ProductForm::ProductForm(int p) : p_(p)
{
    check_p(p);
}

ProductForm ProductForm::qint(int l, int p, std::int64_t e)
{
    if (l < 1) {
        throw std::invalid_argument("ProductForm::qint: l must be positive");
    }
    if (e < 0) {
        throw std::invalid_argument("ProductForm::qint: negative exponent");
    }
    ProductForm f(p);
    if (e > 0) {
        f.exps_[l] = e;
    }
    return f;
}

std::int64_t ProductForm::exponent(int l) const
{
    auto it = exps_.find(l);
    return it == exps_.end() ? 0 : it->second;
}

std::int64_t ProductForm::degree() const
{
    std::int64_t d = 0;
    for (const auto &[l, e] : exps_) {
        d += e * 2 * l * (p_ - 1);
    }
    return d;
}

std::int64_t ProductForm::factor_count() const
{
    std::int64_t s = 0;
    for (const auto &[l, e] : exps_) {
        s += e;
    }
    return s;
}

ProductForm &ProductForm::operator*=(const ProductForm &o)
{
    if (o.p_ != p_) {
        throw std::invalid_argument("ProductForm: mismatched p");
    }
    for (const auto &[l, e] : o.exps_) {
        exps_[l] += e;
    }
    return *this;
}

ProductForm ProductForm::pow(std::int64_t e) const
{
    if (e < 0) {
        throw std::invalid_argument("ProductForm::pow: negative exponent");
    }
    ProductForm r(p_);
    if (e == 0) {
        return r;
    }
    for (const auto &[l, x] : exps_) {
        r.exps_[l] = x * e;
    }
    return r;
}

QPoly ProductForm::expand() const
{
    QPoly r(mpz_class(1));
    for (const auto &[l, e] : exps_) {
        QPoly base = qint_p(l, p_);
        for (std::int64_t t = 0; t < e; ++t) {
            r = r * base;
        }
    }
    return r;
}

mpq_class ProductForm::specialize(const mpq_class &q0) const
{
    mpq_class r = 1;
    for (const auto &[l, e] : exps_) {
        mpq_class v = to_rational(qint_p(l, p_)).eval(q0);
        for (std::int64_t t = 0; t < e; ++t) {
            r *= v;
        }
    }
    return r;
}

std::string ProductForm::to_string() const
{
    if (exps_.empty()) {
        return "1";
    }
    std::string s;
    for (const auto &[l, e] : exps_) {
        if (!s.empty()) {
            s += ' ';
        }
        s += '[' + std::to_string(p_) + "]_" + std::to_string(l);
        if (e > 1) {
            s += '^' + std::to_string(e);
        }
    }
    return s;
}

ProductForm graded_p_part(std::int64_t k, int p)
{
    check_p(p);
    if (k < 1) {
        throw std::invalid_argument("graded_p_part: k must be positive");
    }
    std::int64_t a = k;
    int b = 0;
    while (a % p == 0) {
        a /= p;
        ++b;
    }
    ProductForm f(p);
    std::int64_t l = a;
    for (int t = 0; t < b; ++t) {
        f *= ProductForm::qint(static_cast<int>(l), p);
        l *= p;
    }
    return f;
}

ProductForm multiply(const ProductForm &a, const ProductForm &b)
{
    return a * b;
}

QPoly expand(const ProductForm &a)
{
    return a.expand();
}

mpq_class specialize(const ProductForm &a, const mpq_class &q0)
{
    return a.specialize(q0);
}

LaurentPoly normalize_unit(const LaurentPoly &a)
{
    if (a.is_zero()) {
        return a;
    }
    return LaurentPoly(monic(a.body()));
}

LaurentPoly laurent_gcd(const LaurentPoly &a, const LaurentPoly &b)
{
    if (a.is_zero() && b.is_zero()) {
        throw std::domain_error("laurent_gcd: both arguments are zero");
    }
    return LaurentPoly(gcd(a.body(), b.body()));
}

std::pair<LaurentPoly, LaurentPoly> laurent_divmod(const LaurentPoly &a, const LaurentPoly &b)
{
    if (b.is_zero()) {
        throw std::domain_error("laurent_divmod: division by zero");
    }
    if (a.is_zero()) {
        return {LaurentPoly(), LaurentPoly()};
    }
    auto [quo, rem] = divmod(a.body(), b.body());
    return {LaurentPoly(quo, a.low_degree() - b.low_degree()), LaurentPoly(rem, a.low_degree())};
}

bool laurent_divides(const LaurentPoly &a, const LaurentPoly &b)
{
    if (a.is_zero()) {
        return b.is_zero();
    }
    return laurent_divmod(b, a).second.is_zero();
}

LaurentPoly to_laurent(const QPoly &a)
{
    return LaurentPoly(to_rational(a));
}

namespace
{

template <typename R>
std::string format_terms(const Poly<R> &a, int shift)
{
    if (a.is_zero()) {
        return "0";
    }
    std::string s;
    for (int k = a.valuation(); k <= a.degree(); ++k) {
        R c = a.coeff(k);
        if (c == 0) {
            continue;
        }
        const int e = k + shift;
        if (s.empty()) {
            if (c < 0) {
                s += '-';
            }
        } else {
            s += c < 0 ? " - " : " + ";
        }
        R mag = abs(c);
        if (mag != 1 || e == 0) {
            s += mag.get_str();
        }
        if (e != 0) {
            s += 'q';
            if (e != 1) {
                s += '^' + std::to_string(e);
            }
        }
    }
    return s;
}

} // namespace

std::string to_string(const QPoly &a)
{
    return format_terms(a, 0);
}

std::string to_string(const RatPoly &a)
{
    return format_terms(a, 0);
}

std::string to_string(const LaurentPoly &a)
{
    return format_terms(a.body(), a.low_degree());
}

} // namespace qcartan
