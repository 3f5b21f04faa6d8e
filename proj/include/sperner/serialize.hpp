#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "sperner/brouwer.hpp"
#include "sperner/cochain.hpp"
#include "sperner/complex.hpp"
#include "sperner/sperner.hpp"
#include "sperner/verification.hpp"

namespace sperner {

using Json = nlohmann::ordered_json;

/// {"dim", "ambient_dim", "vertices": {"<id>": ["p/q", ...]}, "top_simplices": [[ids]]}
Json to_json(const EmbeddedComplex& K);
/// Rebuilds and revalidates a complex written by to_json.
ComplexPtr complex_from_json(const Json& j, const ComplexOptions& options = {});

/// {"<vertex id>": label}
Json to_json(const Labeling& L);
Labeling labeling_from_json(const ComplexPtr& K, const Json& j);

/// {"e", "f", "g", "h", "fully_labeled": [[ids]]}
Json to_json(const SpernerCensus& c, const EmbeddedComplex& K);

/// {"degree", "support": [[ids]]} with simplices in canonical order.
Json to_json(const Cochain& c);
Cochain cochain_from_json(const ComplexPtr& K, const Json& j);

Json to_json(const CommutationReport& r);
Json to_json(const ChainIdentityReport& r);
Json to_json(const TripleCheckReport& r);
/// One corpus-report line.
Json to_json(const CorpusEntry& e);
Json to_json(const ApproxFixedPoint& p);

/// Compact single-line dump.
std::string dump_line(const Json& j);

} // namespace sperner
