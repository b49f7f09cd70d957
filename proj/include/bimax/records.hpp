#ifndef BIMAX_RECORDS_HPP
#define BIMAX_RECORDS_HPP

#include <string>

#include "bimax/extremal.hpp"
#include "bimax/oracle.hpp"

namespace bimax {

// Stable machine-readable record: {regime, k0, boundary{lhs,rhs,relation},
// max_sigma2, constructions[{k,q,r,degree_sequence,iso_class}], iso_classes}.
// k0 and boundary are omitted in the star regime.
std::string classification_to_json(const ExtremalClassification& c);

// Human-facing rendering of the same content.
std::string classification_to_text(const ExtremalClassification& c);

// The classification record family plus brute-force fields and the verdict.
std::string report_to_json(const OracleReport& r);

// One sweep line: "n m regime brute_max engine_max classes verdict".
std::string report_line(const OracleReport& r);

}  // namespace bimax

#endif
