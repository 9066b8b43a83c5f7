#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

#include "qcartan/cache.hpp"
#include "qcartan/determinants.hpp"
#include "qcartan/serialize.hpp"
#include "qcartan/verify.hpp"

using namespace qcartan;
namespace fs = std::filesystem;

namespace
{

struct TempDir
{
    fs::path path;
    TempDir()
    {
        char tmpl[] = "/tmp/qcartan-test-XXXXXX";
        path = mkdtemp(tmpl);
    }
    ~TempDir()
    {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

struct Run
{
    int code = -1;
    std::string out;
};

Run run_cli(const std::string &args)
{
    const std::string cmd = std::string(QCARTAN_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    std::unique_ptr<FILE, int (*)(FILE *)> pipe(popen(cmd.c_str(), "r"), pclose);
    REQUIRE(pipe);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe.get())) > 0) {
        r.out.append(buf, got);
    }
    const int status = pclose(pipe.release());
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("JSON round trips")
{
    const Partition l({5, 3, 1, 1});
    CHECK(to_json(l).dump() == "[5,3,1,1]");
    CHECK(partition_from_json(to_json(l)) == l);
    CHECK(partition_from_json(json::array()) == Partition());

    const QPoly a = qint_p(1, 2) * qint_p(2, 3);
    CHECK(qpoly_from_json(to_json(a)) == a);
    CHECK(to_json(qint_p(1, 2)).dump() == "[[0,1],[2,1]]");
    QPoly big = QPoly::monomial(mpz_class("123456789012345678901234567890"), 3);
    CHECK(to_json(big)[0][1].is_string());
    CHECK(qpoly_from_json(to_json(big)) == big);

    const ProductForm f = ProductForm::qint(1, 2, 3) * ProductForm::qint(2, 2);
    const json jf = to_json(f);
    CHECK(jf["p"] == 2);
    CHECK(jf["factors"] == json{{"1", 3}, {"2", 1}});
    CHECK(jf["text"] == "[2]_1^3 [2]_2");
    CHECK(product_form_from_json(jf) == f);

    const DecompositionMatrix d = canonical_basis(6, 2);
    const DecompositionMatrix back = decomposition_from_cache(json::parse(decomposition_to_cache(d).dump()));
    CHECK(back.rows == d.rows);
    CHECK(back.cols == d.cols);
    CHECK(back.entries == d.entries);

    json stale = decomposition_to_cache(d);
    stale["version"] = decomposition_format_version + 1;
    CHECK_THROWS_AS(decomposition_from_cache(stale), std::invalid_argument);
    CHECK_THROWS_AS(partition_from_json(json("5")), std::invalid_argument);
}

TEST_CASE("cache: cold and warm give identical results")
{
    TempDir tmp;
    const DecompCache cache(tmp.path);
    CHECK(cache.path_for(7, 3) == tmp.path / "decomp" / "p3" / "n7.json");
    CHECK(!cache.load(7, 2));
    const GradedCartan cold = cache.get_cartan(7, 2);
    CHECK(fs::exists(cache.path_for(7, 2)));
    REQUIRE(cache.load(7, 2));
    const GradedCartan warm = cache.get_cartan(7, 2);
    CHECK(cold.labels == warm.labels);
    CHECK(cold.entries == warm.entries);
    CHECK(to_json(cold) == to_json(cartan(7, 2)));

    // A stale or corrupt file is a miss and is rewritten.
    {
        std::ofstream out(cache.path_for(7, 2));
        out << R"({"version": 0})";
    }
    CHECK(!cache.load(7, 2));
    CHECK(cache.get_cartan(7, 2).entries == cold.entries);
    REQUIRE(cache.load(7, 2));
    {
        std::ofstream out(cache.path_for(7, 2));
        out << "{not json";
    }
    CHECK(!cache.load(7, 2));

    const DecompCache disabled;
    CHECK(!disabled.enabled());
    CHECK(disabled.get_cartan(4, 2).entries == cartan(4, 2).entries);
}

TEST_CASE("verify registry")
{
    CHECK(statements().size() == 14);
    CHECK(resolve_statement("thm-7.1") == "thm-7.1");
    CHECK(resolve_statement("7.1") == "thm-7.1");
    CHECK(resolve_statement("3.1") == "lemma-3.1");
    CHECK(!resolve_statement("9.9"));
    CHECK_THROWS_AS(run_verify("nope", {}), std::invalid_argument);

    VerifyParams too_big;
    too_big.m_max = 100000;
    try {
        run_verify("lemma-3.1", too_big);
        FAIL("expected a refusal");
    } catch (const std::invalid_argument &e) {
        CHECK(std::string(e.what()).find("limit 2000") != std::string::npos);
    }
    VerifyParams composite;
    composite.ps = std::vector<int>{4};
    CHECK_THROWS_AS(run_verify("conj-8.2", composite), std::invalid_argument);
}

TEST_CASE("verify runs are deterministic")
{
    VerifyParams params;
    params.ps = std::vector<int>{2};
    params.n_max = 12;
    const VerificationReport a = run_verify("thm-4.1", params);
    CHECK(a.verdict == Verdict::pass);
    CHECK(a.witness.is_null());
    const VerificationReport b = run_verify("thm-4.1", params);
    CHECK(a.to_json(false).dump() == b.to_json(false).dump());
    CHECK(a.to_json().contains("runtime_seconds"));
    CHECK(!a.to_json(false).contains("runtime_seconds"));

    VerifyParams products;
    products.ps = std::vector<int>{2, 3, 5, 7};
    products.m_max = 200;
    CHECK(run_verify("lemma-3.1", products).verdict == Verdict::pass);

    VerifyParams conj;
    conj.ps = std::vector<int>{2};
    conj.n_max = 6;
    const VerificationReport c = run_verify("conj-8.2", conj);
    CHECK(c.verdict == Verdict::reported);
    CHECK(c.details.size() > 0);
}

TEST_CASE("command line")
{
    TempDir tmp;
    const std::string cache = "--cache-dir " + tmp.path.string() + " ";

    Run r = run_cli("glaisher --p 2 '1^9 3 5^3'");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["image"] == json::array({10, 8, 5, 3, 1}));
    CHECK(j["steps"] == json{{"1", 4}, {"2", 2}, {"4", 1}, {"5", 1}});

    r = run_cli("habacus '2,3,7,9'");
    CHECK(r.code == 0);
    j = json::parse(r.out);
    CHECK(j["core"] == json::array({3}));
    CHECK(j["quotient"] == json::array({4}));

    r = run_cli("weights --p 2 --n 4 --which h");
    CHECK(r.code == 0);
    CHECK(json::parse(r.out).size() == 2);

    r = run_cli("delta --p 2 --n 4");
    CHECK(json::parse(r.out)["determinant"]["text"] == "[2]_1^2 [2]_2");

    r = run_cli(cache + "cartan --p 2 --n 4 --det");
    CHECK(r.code == 0);
    CHECK(qpoly_from_json(json::parse(r.out)["determinant"]) == cartan_determinant(4, 2).expand());
    CHECK(fs::exists(tmp.path / "decomp" / "p2" / "n4.json"));

    r = run_cli(cache + "cartan --p 2 --n 5 --block '(1)' --det");
    CHECK(r.code == 0);
    CHECK(qpoly_from_json(json::parse(r.out)["determinant"]) == block_determinant(2, 2).value.expand());

    r = run_cli(cache + "conjecture --p 2 --n 5 --blockwise");
    CHECK((r.code == 0 || r.code == 2));
    CHECK(json::parse(r.out)["blocks"].size() == 2);

    r = run_cli("series-check --p 2 --order 20");
    CHECK(r.code == 0);

    r = run_cli(cache + "verify --theorem 7.1 --dmax 4 --no-runtime");
    CHECK(r.code == 0);
    j = json::parse(r.out);
    CHECK(j["statement"] == "thm-7.1");
    CHECK(j["verdict"] == "pass");
    CHECK(run_cli(cache + "verify --theorem 7.1 --dmax 4 --no-runtime").out == r.out);

    CHECK(run_cli("verify lemma-3.1 --mmax 99999").code == 3);
    CHECK(run_cli("verify no-such-statement").code == 3);
    CHECK(run_cli("delta --p 1 --n 3").code == 3);
    CHECK(run_cli("habacus '2,2'").code == 3);
    CHECK(run_cli("").code == 3);
    CHECK(run_cli("--table enumerate --n 4").out == "(4)\n(3,1)\n(2,2)\n(2,1,1)\n(1,1,1,1)\n");
}
