#ifndef QCARTAN_SERIALIZE_HPP
#define QCARTAN_SERIALIZE_HPP

#include <json.hpp>

#include "qcartan/fock.hpp"
#include "qcartan/habacus.hpp"
#include "qcartan/partitions.hpp"
#include "qcartan/qpoly.hpp"
#include "qcartan/series.hpp"
#include "qcartan/smith.hpp"

namespace qcartan
{

using json = nlohmann::json;

// [5,3,1,1]
json to_json(const Partition &lambda);
Partition partition_from_json(const json &j);
json to_json(const Multipartition &mu);

// [[exponent, coefficient], ...] ascending; coefficients outside the int64
// range are written as decimal strings.
json to_json(const QPoly &a);
QPoly qpoly_from_json(const json &j);

// {"p": 2, "factors": {"1": 3, "2": 1}, "text": "[2]_1^3 [2]_2"}
json to_json(const ProductForm &f);
ProductForm product_form_from_json(const json &j);

json to_json(const DivisorChain &c);
json to_json(const ChainComparison &c);
json to_json(const ConjectureReport &r);
json to_json(const IdentityCheck &c);
json to_json(const SeriesReport &r);
json to_json(const EmptyCoreBlockReport &r);

// Labelled matrices: {"p", "n", "labels" | "rows"/"cols", "entries"}.
json to_json(const GradedCartan &c);
json to_json(const DecompositionMatrix &d);

// Cache document: {"version", "p", "n", "order", "columns": {mu: [[lambda, qpoly], ...]}}.
inline constexpr int decomposition_format_version = 1;
json decomposition_to_cache(const DecompositionMatrix &d);
// Throws std::invalid_argument on a malformed or stale document.
DecompositionMatrix decomposition_from_cache(const json &j);

} // namespace qcartan

#endif
