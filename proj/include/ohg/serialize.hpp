#pragma once

#include <string>

#include "json.hpp"

#include "ohg/combinat.hpp"
#include "ohg/partition.hpp"
#include "ohg/spectral.hpp"
#include "ohg/vectorchrom.hpp"
#include "ohg/verdict.hpp"

namespace ohg {

using Json = nlohmann::ordered_json;

/// Rounds to 15 significant digits; negative zero becomes zero.
double round15(double x);

/// Vertex ids and colours are 1-based in every JSON document.
Json to_json(const SpectralSummary& s);
Json to_json(const InvariantSet& inv);
Json to_json(const GramFeasibility& probe, bool with_witness = true);
Json to_json(const PartitionResult& p);
Json to_json(const BoundReport& r);

/// One check per line: name, left side, right side, verdict.
std::string render_text(const SpectralSummary& s);
std::string render_text(const BoundReport& r);

}  // namespace ohg
