#ifndef QCARTAN_POLY_HPP
#define QCARTAN_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qcartan/errors.hpp"

namespace qcartan
{

// Dense univariate polynomial in q over an exact coefficient ring (mpz_class
// or mpq_class). The coefficient vector never carries trailing zeros, so the
// zero polynomial is the empty vector.
template <typename R>
class Poly
{
public:
    Poly() = default;

    Poly(const R &c)
    {
        if (c != 0) {
            c_.push_back(c);
        }
    }

    Poly(int c) : Poly(R(c)) {}

    explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs))
    {
        trim();
    }

    static Poly monomial(const R &c, int k)
    {
        if (k < 0) {
            throw std::invalid_argument("Poly::monomial: negative exponent");
        }
        Poly r;
        if (c != 0) {
            r.c_.assign(static_cast<std::size_t>(k) + 1, R(0));
            r.c_.back() = c;
        }
        return r;
    }

    bool is_zero() const
    {
        return c_.empty();
    }
    // -1 for the zero polynomial.
    int degree() const
    {
        return static_cast<int>(c_.size()) - 1;
    }
    const std::vector<R> &coefficients() const
    {
        return c_;
    }
    R coeff(int k) const
    {
        if (k < 0 || k > degree()) {
            return R(0);
        }
        return c_[static_cast<std::size_t>(k)];
    }
    const R &leading() const
    {
        if (c_.empty()) {
            throw std::domain_error("Poly::leading: zero polynomial");
        }
        return c_.back();
    }
    // Lowest exponent with a nonzero coefficient; -1 for zero.
    int valuation() const
    {
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] != 0) {
                return static_cast<int>(k);
            }
        }
        return -1;
    }

    R eval(const R &x) const
    {
        R acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * x + *it;
        }
        return acc;
    }

    // Multiplication by q^k.
    Poly shifted(int k) const
    {
        if (k < 0) {
            throw std::invalid_argument("Poly::shifted: negative shift");
        }
        if (is_zero() || k == 0) {
            return *this;
        }
        Poly r;
        r.c_.assign(static_cast<std::size_t>(k), R(0));
        r.c_.insert(r.c_.end(), c_.begin(), c_.end());
        return r;
    }
    // Division by q^k; the low k coefficients must vanish.
    Poly unshifted(int k) const
    {
        if (k < 0 || (!is_zero() && k > valuation())) {
            throw std::invalid_argument("Poly::unshifted: q^k does not divide");
        }
        if (is_zero() || k == 0) {
            return *this;
        }
        return Poly(std::vector<R>(c_.begin() + k, c_.end()));
    }

    Poly operator-() const
    {
        Poly r(*this);
        for (auto &x : r.c_) {
            x = -x;
        }
        return r;
    }

    Poly &operator+=(const Poly &o)
    {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size(), R(0));
        }
        for (std::size_t k = 0; k < o.c_.size(); ++k) {
            c_[k] += o.c_[k];
        }
        trim();
        return *this;
    }
    Poly &operator-=(const Poly &o)
    {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size(), R(0));
        }
        for (std::size_t k = 0; k < o.c_.size(); ++k) {
            c_[k] -= o.c_[k];
        }
        trim();
        return *this;
    }
    Poly &operator*=(const R &s)
    {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto &x : c_) {
            x *= s;
        }
        return *this;
    }
    Poly &operator*=(const Poly &o)
    {
        *this = *this * o;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly &b)
    {
        a += b;
        return a;
    }
    friend Poly operator-(Poly a, const Poly &b)
    {
        a -= b;
        return a;
    }
    friend Poly operator*(Poly a, const R &s)
    {
        a *= s;
        return a;
    }
    friend Poly operator*(const Poly &a, const Poly &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return Poly();
        }
        std::vector<R> r(a.c_.size() + b.c_.size() - 1, R(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                r[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return Poly(std::move(r));
    }

    friend bool operator==(const Poly &a, const Poly &b)
    {
        return a.c_ == b.c_;
    }

    // Total order used only for canonical sorting: by degree, then by
    // coefficients from the top.
    friend bool operator<(const Poly &a, const Poly &b)
    {
        if (a.c_.size() != b.c_.size()) {
            return a.c_.size() < b.c_.size();
        }
        for (std::size_t k = a.c_.size(); k-- > 0;) {
            if (a.c_[k] != b.c_[k]) {
                return a.c_[k] < b.c_[k];
            }
        }
        return false;
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0) {
            c_.pop_back();
        }
    }

    std::vector<R> c_;
};

using QPoly = Poly<mpz_class>;
using RatPoly = Poly<mpq_class>;

namespace detail
{

inline bool divides_exactly(const mpz_class &num, const mpz_class &den)
{
    return mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) != 0;
}

} // namespace detail

// Quotient of a by b, which must divide a exactly in R[q]. Throws
// consistency_error when the division leaves a remainder.
template <typename R>
Poly<R> exact_div(const Poly<R> &a, const Poly<R> &b)
{
    if (b.is_zero()) {
        throw std::domain_error("exact_div: division by zero polynomial");
    }
    if (a.is_zero()) {
        return Poly<R>();
    }
    if (a.degree() < b.degree()) {
        throw consistency_error("exact_div: divisor degree exceeds dividend degree");
    }
    std::vector<R> rem = a.coefficients();
    std::vector<R> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, R(0));
    const auto &bc = b.coefficients();
    const R &lb = b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        R &top = rem[static_cast<std::size_t>(k + b.degree())];
        if (top == 0) {
            continue;
        }
        R c;
        if constexpr (std::is_same_v<R, mpz_class>) {
            if (!detail::divides_exactly(top, lb)) {
                throw consistency_error("exact_div: non-exact integer division");
            }
            c = top / lb;
        } else {
            c = top / lb;
        }
        quo[static_cast<std::size_t>(k)] = c;
        for (std::size_t t = 0; t < bc.size(); ++t) {
            rem[static_cast<std::size_t>(k) + t] -= c * bc[t];
        }
    }
    for (const auto &x : rem) {
        if (x != 0) {
            throw consistency_error("exact_div: nonzero remainder");
        }
    }
    return Poly<R>(std::move(quo));
}

// Euclidean division over Q[q].
inline std::pair<RatPoly, RatPoly> divmod(const RatPoly &a, const RatPoly &b)
{
    if (b.is_zero()) {
        throw std::domain_error("divmod: division by zero polynomial");
    }
    if (a.degree() < b.degree()) {
        return {RatPoly(), a};
    }
    std::vector<mpq_class> rem = a.coefficients();
    std::vector<mpq_class> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const auto &bc = b.coefficients();
    const mpq_class lb = b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        const mpq_class &top = rem[static_cast<std::size_t>(k + b.degree())];
        if (top == 0) {
            continue;
        }
        mpq_class c = top / lb;
        quo[static_cast<std::size_t>(k)] = c;
        for (std::size_t t = 0; t < bc.size(); ++t) {
            rem[static_cast<std::size_t>(k) + t] -= c * bc[t];
        }
    }
    rem.resize(static_cast<std::size_t>(b.degree()));
    return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

inline RatPoly monic(const RatPoly &a)
{
    if (a.is_zero()) {
        return a;
    }
    mpq_class inv = 1 / a.leading();
    return a * inv;
}

// Monic gcd over Q[q]; gcd(0, 0) = 0.
inline RatPoly gcd(RatPoly a, RatPoly b)
{
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = monic(r);
    }
    return monic(a);
}

inline RatPoly to_rational(const QPoly &a)
{
    std::vector<mpq_class> c;
    c.reserve(a.coefficients().size());
    for (const auto &x : a.coefficients()) {
        c.emplace_back(x);
    }
    return RatPoly(std::move(c));
}

// Laurent polynomial in q: q^low * body with body(0) != 0 (zero has low = 0).
template <typename R>
class Laurent
{
public:
    Laurent() = default;

    Laurent(const R &c) : body_(c) {}
    Laurent(int c) : body_(R(c)) {}

    explicit Laurent(const Poly<R> &p, int shift = 0) : low_(shift), body_(p)
    {
        normalize();
    }

    static Laurent monomial(const R &c, int k)
    {
        Laurent r;
        if (c != 0) {
            r.body_ = Poly<R>(c);
            r.low_ = k;
        }
        return r;
    }

    bool is_zero() const
    {
        return body_.is_zero();
    }
    int low_degree() const
    {
        return low_;
    }
    int high_degree() const
    {
        return low_ + body_.degree();
    }
    const Poly<R> &body() const
    {
        return body_;
    }
    R coeff(int k) const
    {
        return body_.coeff(k - low_);
    }

    // True iff all exponents are non-negative.
    bool is_polynomial() const
    {
        return is_zero() || low_ >= 0;
    }
    // True iff the element lies in q*R[q].
    bool in_positive_part() const
    {
        return is_zero() || low_ >= 1;
    }
    Poly<R> to_poly() const
    {
        if (!is_polynomial()) {
            throw std::domain_error("Laurent::to_poly: negative exponent present");
        }
        return body_.shifted(low_);
    }

    // q -> q^{-1}
    Laurent bar() const
    {
        if (is_zero()) {
            return *this;
        }
        std::vector<R> c(body_.coefficients().rbegin(), body_.coefficients().rend());
        return Laurent(Poly<R>(std::move(c)), -high_degree());
    }

    Laurent operator-() const
    {
        Laurent r(*this);
        r.body_ = -r.body_;
        return r;
    }
    Laurent &operator+=(const Laurent &o)
    {
        if (o.is_zero()) {
            return *this;
        }
        if (is_zero()) {
            return *this = o;
        }
        int lo = std::min(low_, o.low_);
        body_ = body_.shifted(low_ - lo) + o.body_.shifted(o.low_ - lo);
        low_ = lo;
        normalize();
        return *this;
    }
    Laurent &operator-=(const Laurent &o)
    {
        return *this += -o;
    }
    Laurent &operator*=(const R &s)
    {
        body_ *= s;
        normalize();
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent &b)
    {
        a += b;
        return a;
    }
    friend Laurent operator-(Laurent a, const Laurent &b)
    {
        a -= b;
        return a;
    }
    friend Laurent operator*(const Laurent &a, const Laurent &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return Laurent();
        }
        Laurent r;
        r.body_ = a.body_ * b.body_;
        r.low_ = a.low_ + b.low_;
        return r;
    }
    friend bool operator==(const Laurent &a, const Laurent &b)
    {
        return a.low_ == b.low_ && a.body_ == b.body_;
    }

private:
    void normalize()
    {
        if (body_.is_zero()) {
            low_ = 0;
            return;
        }
        int v = body_.valuation();
        if (v > 0) {
            body_ = body_.unshifted(v);
            low_ += v;
        }
    }

    int low_ = 0;
    Poly<R> body_;
};

using ZLaurent = Laurent<mpz_class>;
using LaurentPoly = Laurent<mpq_class>;

} // namespace qcartan

#endif
