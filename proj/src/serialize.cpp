#include "qcartan/serialize.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

namespace qcartan
{

namespace
{

json coefficient_to_json(const mpz_class &c)
{
    if (c.fits_slong_p()) {
        return static_cast<std::int64_t>(c.get_si());
    }
    return c.get_str();
}

mpz_class coefficient_from_json(const json &j)
{
    if (j.is_number_integer()) {
        return mpz_class(std::to_string(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        return mpz_class(j.get<std::string>());
    }
    throw std::invalid_argument("expected an integer coefficient");
}

json matrix_entries(const Matrix<QPoly> &m)
{
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row.push_back(to_json(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

json partitions_to_json(const std::vector<Partition> &ls)
{
    json a = json::array();
    for (const auto &l : ls) {
        a.push_back(to_json(l));
    }
    return a;
}

} // namespace

json to_json(const Partition &lambda)
{
    return json(lambda.part_vector());
}

Partition partition_from_json(const json &j)
{
    if (!j.is_array()) {
        throw std::invalid_argument("partition: expected an array of parts");
    }
    return Partition(j.get<std::vector<int>>());
}

json to_json(const Multipartition &mu)
{
    json a = json::array();
    for (const auto &c : mu.components) {
        a.push_back(to_json(c));
    }
    return a;
}

json to_json(const QPoly &a)
{
    json out = json::array();
    for (int k = 0; k <= a.degree(); ++k) {
        if (a.coeff(k) != 0) {
            out.push_back(json::array({k, coefficient_to_json(a.coeff(k))}));
        }
    }
    return out;
}

QPoly qpoly_from_json(const json &j)
{
    if (!j.is_array()) {
        throw std::invalid_argument("qpoly: expected an array of [exponent, coefficient]");
    }
    QPoly out;
    for (const auto &term : j) {
        if (!term.is_array() || term.size() != 2) {
            throw std::invalid_argument("qpoly: malformed term");
        }
        out += QPoly::monomial(coefficient_from_json(term[1]), term[0].get<int>());
    }
    return out;
}

json to_json(const ProductForm &f)
{
    json factors = json::object();
    for (const auto &[l, e] : f.exponents()) {
        factors[std::to_string(l)] = e;
    }
    return {{"p", f.p()}, {"factors", factors}, {"text", f.to_string()}};
}

ProductForm product_form_from_json(const json &j)
{
    ProductForm f(j.at("p").get<int>());
    for (const auto &[l, e] : j.at("factors").items()) {
        f *= ProductForm::qint(std::stoi(l), f.p(), e.get<std::int64_t>());
    }
    return f;
}

json to_json(const DivisorChain &c)
{
    return {{"divisors", c.to_strings()}, {"rank_deficiency", c.rank_deficiency}};
}

json to_json(const ChainComparison &c)
{
    json j = {{"lhs", c.lhs}, {"rhs", c.rhs}, {"equal", c.equal}};
    if (c.first_difference) {
        j["first_difference"] = {{"index", *c.first_difference}, {"lhs", c.lhs_value}, {"rhs", c.rhs_value}};
    }
    return j;
}

json to_json(const ConjectureReport &r)
{
    json j = {{"p", r.p}, {"n", r.n}, {"scope", r.weight ? "block" : "global"}};
    if (r.weight) {
        j["weight"] = *r.weight;
        j["core"] = to_json(*r.core);
    }
    j["snf"] = to_json(r.cartan_chain);
    json cmp = json::array();
    for (const auto &c : r.comparisons) {
        cmp.push_back(to_json(c));
    }
    j["comparisons"] = cmp;
    j["product_matches_det"] = r.product_matches_det;
    j["all_equal"] = r.all_equal();
    return j;
}

json to_json(const IdentityCheck &c)
{
    json j = {{"name", c.name}, {"closed_form", c.closed_form}, {"p", c.p}, {"pass", c.pass}};
    if (c.first_failure) {
        j["first_failure"] = {{"index", *c.first_failure}, {"expected", c.expected}, {"actual", c.actual}};
    }
    return j;
}

json to_json(const SeriesReport &r)
{
    json checks = json::array();
    for (const auto &c : r.checks) {
        checks.push_back(to_json(c));
    }
    return {{"order", r.order}, {"p", r.p}, {"all_pass", r.all_pass()}, {"checks", checks}};
}

json to_json(const EmptyCoreBlockReport &r)
{
    json j = {{"d", r.d},
              {"members", partitions_to_json(r.members)},
              {"product_w_G", to_json(r.product_g)},
              {"product_w_E", to_json(r.product_e)},
              {"block_determinant", to_json(r.block_value)},
              {"w_E_multiset_matches_w_H", r.multiset_matches_w_h},
              {"pass", r.pass()}};
    j["cartan_block_matches"] = r.cartan_block_matches ? json(*r.cartan_block_matches) : json(nullptr);
    return j;
}

json to_json(const GradedCartan &c)
{
    return {{"p", c.p}, {"n", c.n}, {"labels", partitions_to_json(c.labels)}, {"entries", matrix_entries(c.entries)}};
}

json to_json(const DecompositionMatrix &d)
{
    return {{"p", d.p},
            {"n", d.n},
            {"rows", partitions_to_json(d.rows)},
            {"cols", partitions_to_json(d.cols)},
            {"entries", matrix_entries(d.entries)}};
}

json decomposition_to_cache(const DecompositionMatrix &d)
{
    json columns = json::object();
    for (std::size_t c = 0; c < d.cols.size(); ++c) {
        json terms = json::array();
        for (std::size_t r = 0; r < d.rows.size(); ++r) {
            if (!d.entries(r, c).is_zero()) {
                terms.push_back(json::array({to_json(d.rows[r]), to_json(d.entries(r, c))}));
            }
        }
        columns[to_json(d.cols[c]).dump()] = terms;
    }
    return {{"version", decomposition_format_version},
            {"p", d.p},
            {"n", d.n},
            {"order", partitions_to_json(d.cols)},
            {"columns", columns}};
}

DecompositionMatrix decomposition_from_cache(const json &j)
{
    if (!j.is_object() || !j.contains("version") || j.at("version") != decomposition_format_version) {
        throw std::invalid_argument("decomposition cache: missing or stale version");
    }
    DecompositionMatrix d;
    d.p = j.at("p").get<int>();
    d.n = j.at("n").get<int>();
    d.rows = enumerate_partitions(d.n);
    d.cols = enumerate_p_regular(d.n, d.p);
    std::vector<Partition> order;
    for (const auto &x : j.at("order")) {
        order.push_back(partition_from_json(x));
    }
    if (order != d.cols) {
        throw std::invalid_argument("decomposition cache: column labels do not match");
    }
    d.entries = Matrix<QPoly>(d.rows.size(), d.cols.size());
    const auto &columns = j.at("columns");
    for (std::size_t c = 0; c < d.cols.size(); ++c) {
        const auto key = to_json(d.cols[c]).dump();
        if (!columns.contains(key)) {
            throw std::invalid_argument("decomposition cache: missing column " + key);
        }
        for (const auto &term : columns.at(key)) {
            const Partition lambda = partition_from_json(term.at(0));
            auto it = std::lower_bound(d.rows.begin(), d.rows.end(), lambda, std::greater<>());
            if (it == d.rows.end() || *it != lambda) {
                throw std::invalid_argument("decomposition cache: unknown row " + lambda.to_string());
            }
            d.entries(static_cast<std::size_t>(it - d.rows.begin()), c) = qpoly_from_json(term.at(1));
        }
    }
    return d;
}

} // namespace qcartan
