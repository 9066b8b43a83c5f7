#ifndef QCARTAN_QPOLY_HPP
#define QCARTAN_QPOLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "qcartan/poly.hpp"

namespace qcartan
{

// [p]_l = 1 + q^{2l} + ... + q^{2l(p-1)}
QPoly qint_p(int l, int p);

// Number of base-p digits of m; o_p(0) = 0 so that [p]_j^{o_p(0)} drops out.
int o_p(std::int64_t m, int p);

// Classical p-part (k)_p = p^b for k = a p^b, p not dividing a.
mpz_class p_part(std::int64_t k, int p);

// A product  prod_l [p]_l^{e_l}  kept in factored form. Exponent maps hold
// only positive entries, so equality of maps is equality of the products.
class ProductForm
{
public:
    explicit ProductForm(int p);

    static ProductForm qint(int l, int p, std::int64_t e = 1);

    int p() const
    {
        return p_;
    }
    const std::map<int, std::int64_t> &exponents() const
    {
        return exps_;
    }
    std::int64_t exponent(int l) const;
    bool is_identity() const
    {
        return exps_.empty();
    }
    // Degree in q of the expansion.
    std::int64_t degree() const;
    // Sum of exponents; specialize(1) = p^{factor_count}.
    std::int64_t factor_count() const;

    ProductForm &operator*=(const ProductForm &o);
    friend ProductForm operator*(ProductForm a, const ProductForm &b)
    {
        a *= b;
        return a;
    }
    ProductForm pow(std::int64_t e) const;

    QPoly expand() const;
    mpq_class specialize(const mpq_class &q0) const;

    // "[2]_1^3 [2]_2"; "1" for the identity.
    std::string to_string() const;

    friend bool operator==(const ProductForm &, const ProductForm &) = default;
    friend auto operator<=>(const ProductForm &, const ProductForm &) = default;

private:
    int p_;
    std::map<int, std::int64_t> exps_;
};

// (k)_{[p]} = [p]_a [p]_{ap} ... [p]_{ap^{b-1}} for k = a p^b, p not dividing a.
ProductForm graded_p_part(std::int64_t k, int p);

ProductForm multiply(const ProductForm &a, const ProductForm &b);
QPoly expand(const ProductForm &a);
mpq_class specialize(const ProductForm &a, const mpq_class &q0);

// Laurent-ring helpers over Q[q, q^{-1}], where the units are c q^k.

// The associate of a that is a monic polynomial with nonzero constant term.
LaurentPoly normalize_unit(const LaurentPoly &a);
LaurentPoly laurent_gcd(const LaurentPoly &a, const LaurentPoly &b);
// a = quot * b + rem, with rem's polynomial part of lower degree than b's.
std::pair<LaurentPoly, LaurentPoly> laurent_divmod(const LaurentPoly &a, const LaurentPoly &b);
bool laurent_divides(const LaurentPoly &a, const LaurentPoly &b);

LaurentPoly to_laurent(const QPoly &a);

// "1 + q^2 - 3q^5", "0" for zero; rational coefficients print as a/b.
std::string to_string(const QPoly &a);
std::string to_string(const RatPoly &a);
std::string to_string(const LaurentPoly &a);

} // namespace qcartan

#endif
