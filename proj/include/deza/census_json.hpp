#ifndef DEZA_CENSUS_JSON_HPP
#define DEZA_CENSUS_JSON_HPP

#include <string>
#include <string_view>

#include "deza/enumeration.hpp"

namespace deza {

/// One compact JSON object, no trailing newline. Field names are frozen in
/// docs/census_schema.md.
std::string census_to_json_line(const CensusRecord& record);

/// Inverse of census_to_json_line. Throws ParseError on malformed input.
CensusRecord census_from_json_line(std::string_view line);

} // namespace deza

#endif // DEZA_CENSUS_JSON_HPP
