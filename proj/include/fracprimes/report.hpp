#pragma once

#include <string>

#include "fracprimes/census.hpp"
#include "fracprimes/frac_parts.hpp"

namespace fracprimes {

// CSV emitters and parsers for the two row-shaped report types. Doubles are
// emitted with 17 significant digits so parse(emit(r)) == r exactly.

std::string census_csv_header();
std::string census_csv_row(const CensusRecord& r);
CensusRecord parse_census_csv_row(const std::string& line);

std::string fracpart_csv_header();
std::string fracpart_csv_row(const FracPartSample& s);
FracPartSample parse_fracpart_csv_row(const std::string& line);

std::string format_double(double v);  // shortest 17-digit form used above

}  // namespace fracprimes
