#pragma once

#include <string>

#include "pgog/quotient.hpp"
#include "pgog/verify.hpp"
#include "pgog/wilkes.hpp"

// JSON instance and quotient files with a canonical emitter: stable key
// order, lexicographic object keys, two-space indent, inline arrays up to
// 100 characters.  Emitted text parses back to an equal value and re-emits
// byte for byte.

namespace pgog {

GraphOfGroups parse_instance(const std::string& text);
std::string emit_instance(const GraphOfGroups& g);

struct QuotientData {
  PQuotientMap phi;
  Subgroup q;
};

QuotientData parse_quotient(const std::string& text, const GraphOfGroups& gog);
std::string emit_quotient(const PQuotientMap& phi, const Subgroup& q);

// object -> representative and conjugator annex for a computed decomposition
std::string emit_transversal(const InducedDecomposition& dec);

std::string presentation_text(const Presentation& p);
std::string presentation_json(const Presentation& p);

std::string gog_report_json(const GogReport& r);
std::string reduce_summary_json(const GraphOfGroups& input, const ReduceResult& r);
std::string decompose_summary_json(const InducedDecomposition& dec);
std::string limitation_json(const LimitationReport& r);
std::string partition_json(const PartitionReport& r);
std::string confluence_json(const ConfluenceReport& r);
std::string growth_json(const GrowthTable& t);
std::string stage_json(const StageReport& r);

}  // namespace pgog
