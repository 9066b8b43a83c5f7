#ifndef QCARTAN_SERIES_HPP
#define QCARTAN_SERIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qcartan
{

inline constexpr int default_series_order = 40;

// Integer power series in x truncated after x^order. Operands of a binary
// operation must share the same order; reading a coefficient past the order
// throws rather than returning a fabricated value.
class TruncatedSeries
{
public:
    explicit TruncatedSeries(int order = default_series_order);
    TruncatedSeries(std::vector<mpz_class> coeffs, int order);

    static TruncatedSeries one(int order);
    // c x^k (zero when k > order).
    static TruncatedSeries monomial(const mpz_class &c, int k, int order);
    // 1 / (1 - x^k)
    static TruncatedSeries geometric(int k, int order);

    int order() const
    {
        return order_;
    }
    const mpz_class &operator[](int k) const;
    const std::vector<mpz_class> &coefficients() const
    {
        return c_;
    }

    TruncatedSeries &operator+=(const TruncatedSeries &o);
    TruncatedSeries &operator-=(const TruncatedSeries &o);
    TruncatedSeries &operator*=(const TruncatedSeries &o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b)
    {
        a += b;
        return a;
    }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b)
    {
        a -= b;
        return a;
    }
    friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries &b)
    {
        a *= b;
        return a;
    }
    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

    // Requires constant term +-1.
    TruncatedSeries inverse() const;
    // Negative exponents go through inverse().
    TruncatedSeries pow(int e) const;
    // x -> x^p
    TruncatedSeries substitute_xp(int p) const;
    // Multiplication by x^k, k >= 0.
    TruncatedSeries shifted(int k) const;

private:
    void check_same_order(const TruncatedSeries &o) const;

    int order_;
    std::vector<mpz_class> c_;
};

// phi(x) = prod_{n >= 1} (1 - x^n)
TruncatedSeries phi(int order);
TruncatedSeries inverse(const TruncatedSeries &s);
TruncatedSeries multiply(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries power(const TruncatedSeries &s, int e);
TruncatedSeries substitute_xp(const TruncatedSeries &s, int p);

struct IdentityCheck
{
    std::string name;
    std::string closed_form;
    int p = 0;
    bool pass = true;
    // First index where closed form and enumeration disagree.
    std::optional<int> first_failure;
    std::string expected;
    std::string actual;
};

struct SeriesReport
{
    int order = 0;
    int p = 0;
    std::vector<IdentityCheck> checks;

    bool all_pass() const;
};

inline constexpr int max_oracle_order = 30;

// Every generating-function identity used by the weights, determinants and
// partitions modules, evaluated to the given order and compared
// coefficientwise against counts obtained by enumeration.
SeriesReport oracle_counts(int order, int p);

} // namespace qcartan

#endif
