#ifndef QCARTAN_VERIFY_HPP
#define QCARTAN_VERIFY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qcartan/cache.hpp"
#include "qcartan/serialize.hpp"

namespace qcartan
{

// Unset fields fall back to the statement's defaults.
struct VerifyParams
{
    std::optional<std::vector<int>> ps;
    std::optional<int> n_max;
    std::optional<int> d_max;
    std::optional<int> m_max;
    std::optional<int> order;
    DecompCache cache;
};

enum class Verdict
{
    pass,
    fail,
    reported,
};

const char *to_string(Verdict v);

struct VerificationReport
{
    std::string statement;
    json parameters;
    Verdict verdict = Verdict::pass;
    std::size_t checks = 0;
    // First counterexample, or null.
    json witness;
    json details;
    double runtime_seconds = 0;

    // Everything except the runtime is deterministic.
    json to_json(bool with_runtime = true) const;
};

struct StatementInfo
{
    std::string id;
    std::string summary;
};

const std::vector<StatementInfo> &statements();
// Accepts the ids of statements(), and the bare numbers ("7.1", "3.1") as aliases.
std::optional<std::string> resolve_statement(const std::string &name);

// Throws std::invalid_argument for an unknown id or parameters beyond the
// statement's limits; the message names the limit.
VerificationReport run_verify(const std::string &statement, const VerifyParams &params);

} // namespace qcartan

#endif
