#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcartan/cache.hpp"
#include "qcartan/determinants.hpp"
#include "qcartan/errors.hpp"
#include "qcartan/habacus.hpp"
#include "qcartan/serialize.hpp"
#include "qcartan/smith.hpp"
#include "qcartan/verify.hpp"
#include "qcartan/weights.hpp"

using namespace qcartan;

namespace
{

constexpr int exit_pass = 0;
constexpr int exit_failure = 1;
constexpr int exit_difference = 2;
constexpr int exit_usage = 3;

struct Options
{
    bool table = false;
    bool exponent = false;
    std::string cache_dir;
    bool no_cache = false;
};

std::string partition_text(const Partition &l, const Options &o)
{
    return o.exponent ? l.to_exponent_string() : l.to_string();
}

json partition_out(const Partition &l, const Options &o)
{
    if (o.table) {
        return partition_text(l, o);
    }
    return o.exponent ? json(l.to_exponent_string()) : to_json(l);
}

// Cells of a table: ProductForms by their text, everything else compact.
std::string cell(const json &v)
{
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_object() && v.contains("text")) {
        return v["text"].get<std::string>();
    }
    return v.dump();
}

void print_table(const json &v, std::ostream &os, const std::string &indent = "")
{
    if (v.is_array() && !v.empty() && v.front().is_object()) {
        std::vector<std::string> keys;
        for (const auto &[k, _] : v.front().items()) {
            keys.push_back(k);
        }
        os << indent;
        for (std::size_t i = 0; i < keys.size(); ++i) {
            os << (i ? "\t" : "") << keys[i];
        }
        os << '\n';
        for (const auto &row : v) {
            os << indent;
            for (std::size_t i = 0; i < keys.size(); ++i) {
                os << (i ? "\t" : "") << (row.contains(keys[i]) ? cell(row[keys[i]]) : "");
            }
            os << '\n';
        }
        return;
    }
    if (v.is_array() && !v.empty() && v.front().is_string()) {
        for (const auto &x : v) {
            os << indent << cell(x) << '\n';
        }
        return;
    }
    if (v.is_object() && !v.contains("text")) {
        for (const auto &[k, x] : v.items()) {
            if ((x.is_array() && !x.empty() && x.front().is_object()) || (x.is_object() && !x.contains("text"))) {
                os << indent << k << ":\n";
                print_table(x, os, indent + "  ");
            } else {
                os << indent << k << ": " << cell(x) << '\n';
            }
        }
        return;
    }
    os << indent << cell(v) << '\n';
}

void emit(const json &v, const Options &o)
{
    if (o.table) {
        print_table(v, std::cout);
    } else {
        std::cout << v.dump(2) << '\n';
    }
}

DecompCache make_cache(const Options &o)
{
    if (o.no_cache) {
        return DecompCache();
    }
    return DecompCache(o.cache_dir.empty() ? DecompCache::default_root() : std::filesystem::path(o.cache_dir));
}

json multipartition_out(const Multipartition &mu, const Options &o)
{
    return o.table ? json(mu.to_string()) : to_json(mu);
}

json matrix_out(const std::vector<Partition> &rows, const std::vector<Partition> &cols, const Matrix<QPoly> &m,
                const Options &o)
{
    json out = json::array();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        json row = {{"row", partition_out(rows[r], o)}};
        json entries = json::array();
        for (std::size_t c = 0; c < cols.size(); ++c) {
            entries.push_back(o.table ? json(to_string(m(r, c))) : to_json(m(r, c)));
        }
        row["entries"] = entries;
        out.push_back(row);
    }
    return {{"columns", [&] {
                 json a = json::array();
                 for (const auto &c : cols) {
                     a.push_back(partition_out(c, o));
                 }
                 return a;
             }()},
            {"rows", out}};
}

BlockIndex find_block(const GradedCartan &c, const std::string &core_text)
{
    const Partition core = parse_partition(core_text);
    for (const auto &b : blocks(c)) {
        if (b.core == core) {
            return b;
        }
    }
    throw std::invalid_argument("no block with " + std::to_string(c.p) + "-core " + core.to_string() + " in C_" +
                                std::to_string(c.n));
}

int exit_for(const VerificationReport &r)
{
    if (r.verdict == Verdict::fail) {
        return exit_failure;
    }
    if (r.verdict == Verdict::reported && !r.witness.is_null()) {
        return exit_difference;
    }
    return exit_pass;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Graded Cartan determinants, weights and elementary divisors"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--table", o.table, "Human-readable output instead of JSON");
    app.add_flag("--json", [&](std::int64_t) { o.table = false; }, "JSON output (default)");
    app.add_flag("--exponent", o.exponent, "Write partitions in exponent notation");
    app.add_option("--cache-dir", o.cache_dir, "Decomposition matrix cache directory")->envname("QCARTAN_CACHE_DIR");
    app.add_flag("--no-cache", o.no_cache, "Do not read or write the cache");

    int p = 2;
    int n = 0;
    std::string partition_arg;
    int code = exit_pass;

    auto add_p = [&](CLI::App *c, bool required = true) {
        auto *opt = c->add_option("--p", p, "p >= 2")->check(CLI::Range(2, 1000));
        if (required) {
            opt->required();
        }
    };
    auto add_n = [&](CLI::App *c) { c->add_option("--n", n, "n >= 0")->required()->check(CLI::Range(0, 1000)); };

    auto *enumerate = app.add_subcommand("enumerate", "List partitions of n");
    std::string kind = "all";
    add_n(enumerate);
    add_p(enumerate, false);
    enumerate->add_option("--kind", kind, "all | regular | class-regular | cores | Q")
        ->check(CLI::IsMember({"all", "regular", "class-regular", "cores", "Q"}));
    enumerate->callback([&] {
        json out = json::array();
        if (kind == "Q") {
            for (const auto &qi : enumerate_Q(n, p)) {
                out.push_back({{"mu", multipartition_out(qi.mu, o)}, {"chi", partition_out(qi.chi, o)}});
            }
        } else {
            std::vector<Partition> ls = kind == "all"             ? enumerate_partitions(n)
                                        : kind == "regular"       ? enumerate_p_regular(n, p)
                                        : kind == "class-regular" ? enumerate_p_class_regular(n, p)
                                                                  : enumerate_p_cores(n, p);
            for (const auto &l : ls) {
                out.push_back(partition_out(l, o));
            }
        }
        emit(out, o);
    });

    auto *weights = app.add_subcommand("weights", "Weights of the partitions indexing Delta");
    std::string which = "e";
    add_p(weights);
    add_n(weights);
    weights->add_option("--which", which, "e | g over p-class regular partitions, h over Q_p(n)")
        ->check(CLI::IsMember({"e", "h", "g"}));
    weights->callback([&] {
        json out = json::array();
        if (which == "h") {
            for (const auto &qi : enumerate_Q(n, p)) {
                out.push_back({{"mu", multipartition_out(qi.mu, o)}, {"chi", partition_out(qi.chi, o)}, {"weight", to_json(w_H(qi))}});
            }
        } else {
            for (const auto &l : enumerate_p_class_regular(n, p)) {
                out.push_back({{"partition", partition_out(l, o)},
                               {"weight", to_json(which == "e" ? w_E(l, p) : w_G(l, p))}});
            }
        }
        emit(out, o);
    });

    auto *glaisher_cmd = app.add_subcommand("glaisher", "Glaisher map to a p-regular partition");
    add_p(glaisher_cmd);
    glaisher_cmd->add_option("partition", partition_arg, "p-class regular partition")->required();
    glaisher_cmd->callback([&] {
        const GlaisherResult g = glaisher(parse_partition(partition_arg), p);
        json steps = json::object();
        for (const auto &[i, k] : g.step_counts) {
            steps[std::to_string(i)] = k;
        }
        emit({{"image", partition_out(g.image, o)}, {"steps", steps}, {"weight", to_json(glaisher_weight(g, p))}}, o);
    });

    auto *delta = app.add_subcommand("delta", "Determinant of the graded Cartan matrix");
    bool by_block = false;
    bool expand = false;
    add_p(delta);
    add_n(delta);
    delta->add_flag("--by-block", by_block, "Table of (d, c_p(n - pd), block determinant)");
    delta->add_flag("--expand", expand, "Include expanded polynomials");
    delta->callback([&] {
        auto value = [&](const ProductForm &f) {
            json j = to_json(f);
            if (expand) {
                j["expanded"] = o.table ? json(to_string(f.expand())) : to_json(f.expand());
            }
            return j;
        };
        if (by_block) {
            json out = json::array();
            for (int k = 0; k * p <= n; ++k) {
                out.push_back({{"d", k}, {"blocks", core_count(n - p * k, p)}, {"determinant", value(block_determinant(k, p).value)}});
            }
            emit(out, o);
        } else {
            emit({{"p", p}, {"n", n}, {"determinant", value(cartan_determinant(n, p))}}, o);
        }
    });

    auto *decomp = app.add_subcommand("decomp", "Graded decomposition matrix D_n(q)");
    add_p(decomp);
    add_n(decomp);
    decomp->callback([&] {
        const DecompositionMatrix m = make_cache(o).get(n, p);
        json out = matrix_out(m.rows, m.cols, m.entries, o);
        out["p"] = p;
        out["n"] = n;
        emit(out, o);
    });

    auto *cartan_cmd = app.add_subcommand("cartan", "Graded Cartan matrix C_n(q)");
    std::string core_arg;
    bool det_only = false;
    add_p(cartan_cmd);
    add_n(cartan_cmd);
    cartan_cmd->add_option("--block", core_arg, "Restrict to the block with this p-core");
    cartan_cmd->add_flag("--det", det_only, "Print the determinant");
    cartan_cmd->callback([&] {
        GradedCartan c = make_cache(o).get_cartan(n, p);
        json out = {{"p", p}, {"n", n}};
        if (!core_arg.empty()) {
            const BlockIndex b = find_block(c, core_arg);
            c = block(c, b);
            out["core"] = partition_out(b.core, o);
            out["weight"] = b.weight;
        }
        if (det_only) {
            const QPoly det = det_exact(c.entries);
            out["determinant"] = o.table ? json(to_string(det)) : to_json(det);
        } else {
            out["matrix"] = matrix_out(c.labels, c.labels, c.entries, o);
        }
        emit(out, o);
    });

    auto *snf_cmd = app.add_subcommand("snf", "Elementary divisors of C_n(q) over Z[q, 1/q]");
    add_p(snf_cmd);
    add_n(snf_cmd);
    snf_cmd->add_option("--block", core_arg, "Restrict to the block with this p-core");
    snf_cmd->callback([&] {
        GradedCartan c = make_cache(o).get_cartan(n, p);
        json out = {{"p", p}, {"n", n}};
        if (!core_arg.empty()) {
            const BlockIndex b = find_block(c, core_arg);
            c = block(c, b);
            out["core"] = partition_out(b.core, o);
        }
        out["snf"] = to_json(snf(c.entries));
        emit(out, o);
    });

    auto *conjecture = app.add_subcommand("conjecture", "Compare elementary divisors with the diagonal weights");
    bool blockwise = false;
    add_p(conjecture);
    add_n(conjecture);
    conjecture->add_flag("--blockwise", blockwise, "One comparison per block");
    conjecture->callback([&] {
        const GradedCartan c = make_cache(o).get_cartan(n, p);
        std::vector<ConjectureReport> reports;
        if (blockwise) {
            reports = check_conjecture_blocks(c);
        } else {
            reports.push_back(check_conjecture(c));
        }
        json out = json::array();
        bool equal = true;
        bool consistent = true;
        for (const auto &r : reports) {
            out.push_back(to_json(r));
            equal = equal && r.all_equal();
            consistent = consistent && r.product_matches_det;
        }
        emit(blockwise ? json{{"blocks", out}} : out.front(), o);
        code = !consistent ? exit_failure : equal ? exit_pass : exit_difference;
    });

    auto *habacus = app.add_subcommand("habacus", "H-core and H-quotient of a strict partition");
    habacus->add_option("partition", partition_arg, "Strict partition")->required();
    habacus->callback([&] {
        const Partition l = parse_partition(partition_arg);
        emit({{"core", partition_out(h_core(l), o)}, {"quotient", partition_out(h_quotient(l), o)}}, o);
    });

    auto *series = app.add_subcommand("series-check", "Generating functions against enumeration");
    int order = max_oracle_order;
    add_p(series);
    series->add_option("--order", order, "Truncation order")->check(CLI::Range(0, max_oracle_order));
    series->callback([&] {
        const SeriesReport r = oracle_counts(order, p);
        json out = to_json(r);
        emit(o.table ? out["checks"] : out, o);
        code = r.all_pass() ? exit_pass : exit_failure;
    });

    auto *verify = app.add_subcommand("verify", "Run a statement's verification suite");
    std::string statement;
    bool all = false;
    bool list = false;
    bool no_runtime = false;
    std::vector<int> vps;
    VerifyParams params;
    int n_max = -1, d_max = -1, m_max = -1, v_order = -1;
    verify->add_option("statement", statement, "Statement id");
    verify->add_option("--theorem", statement, "Alias for the statement id, e.g. 7.1");
    verify->add_option("--p", vps, "Values of p")->check(CLI::Range(2, 1000));
    verify->add_option("--nmax,--n", n_max, "Bound on n")->check(CLI::NonNegativeNumber);
    verify->add_option("--dmax,--d", d_max, "Bound on the block weight d")->check(CLI::NonNegativeNumber);
    verify->add_option("--mmax", m_max, "Bound on m")->check(CLI::NonNegativeNumber);
    verify->add_option("--order", v_order, "Series order")->check(CLI::NonNegativeNumber);
    verify->add_flag("--all", all, "Run every statement with its defaults");
    verify->add_flag("--list", list, "List statement ids");
    verify->add_flag("--no-runtime", no_runtime, "Omit runtime_seconds");
    verify->callback([&] {
        if (list) {
            json out = json::array();
            for (const auto &s : statements()) {
                out.push_back({{"id", s.id}, {"summary", s.summary}});
            }
            emit(out, o);
            return;
        }
        if (!all && statement.empty()) {
            throw std::invalid_argument("verify: give a statement id, --theorem, --all or --list");
        }
        if (!vps.empty()) {
            params.ps = vps;
        }
        auto set = [](std::optional<int> &f, int v) {
            if (v >= 0) {
                f = v;
            }
        };
        set(params.n_max, n_max);
        set(params.d_max, d_max);
        set(params.m_max, m_max);
        set(params.order, v_order);
        params.cache = make_cache(o);
        std::vector<std::string> ids;
        if (all) {
            for (const auto &s : statements()) {
                ids.push_back(s.id);
            }
        } else {
            ids.push_back(statement);
        }
        json out = json::array();
        bool failed = false;
        bool difference = false;
        for (const auto &id : ids) {
            const VerificationReport r = run_verify(id, params);
            json j = r.to_json(!no_runtime);
            if (o.table) {
                j.erase("details");
            }
            out.push_back(j);
            failed = failed || exit_for(r) == exit_failure;
            difference = difference || exit_for(r) == exit_difference;
        }
        code = failed ? exit_failure : difference ? exit_difference : exit_pass;
        emit(all ? out : out.front(), o);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_usage;
    } catch (const consistency_error &e) {
        std::cerr << "consistency error: " << e.what() << '\n';
        return exit_failure;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return code;
}
