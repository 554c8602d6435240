#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "liecp/borel.hpp"
#include "liecp/sl2embed.hpp"

namespace liecp {

/// Key-order-preserving JSON so that every dump is byte-deterministic.
using Json = nlohmann::ordered_json;

Json weight_to_json(const Weight& w);
Json matrix_to_json(const RationalMatrix& m);

/// Canonical multiset form: lexicographically sorted list of
/// {"coords": [...], "mult": n}.
Json multiset_to_json(const WeightMultiset& ws);

/// Canonical decomposition form: sorted list of {"highest": [...], "mult": n}.
Json decomposition_to_json(const Decomposition& d);

Json rootsys_to_json(const RootSystem& rs);
Json report_to_json(const EmbeddingReport& r);
Json audit_to_json(const std::vector<EmbeddingReport>& reports);

std::string audit_to_markdown(const std::vector<EmbeddingReport>& reports);

/// Canonical textual dump: two-space indentation plus a trailing newline.
std::string dump_json(const Json& j);

/// Parse a factor/weight multiset: either a bare list of
/// {"coords": [...], "mult": n} or an object carrying such a list under
/// "factors". Duplicated coordinate vectors accumulate. Throws ParseError
/// on malformed input and ShapeError on wrong coordinate counts.
WeightMultiset multiset_from_json(const Json& j, const RsTag& tag);

}  // namespace liecp
