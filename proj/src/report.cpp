#include "fracprimes/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace fracprimes {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::vector<std::string> split_csv(const std::string& line, size_t expect) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(tok);
    if (out.size() != expect)
        throw std::invalid_argument("csv row: expected " + std::to_string(expect) +
                                    " fields, got " + std::to_string(out.size()));
    return out;
}

}  // namespace

std::string census_csv_header() {
    return "x,weighted_sum,predicted,residual,distinct,multiplicity";
}

std::string census_csv_row(const CensusRecord& r) {
    return std::to_string(r.x) + "," + format_double(r.weighted_sum) + "," +
           format_double(r.predicted) + "," + format_double(r.residual) + "," +
           std::to_string(r.distinct_prime_count) + "," +
           std::to_string(r.multiplicity_count);
}

CensusRecord parse_census_csv_row(const std::string& line) {
    auto f = split_csv(line, 6);
    CensusRecord r;
    r.x = std::stoull(f[0]);
    r.weighted_sum = std::stod(f[1]);
    r.predicted = std::stod(f[2]);
    r.residual = std::stod(f[3]);
    r.distinct_prime_count = std::stoull(f[4]);
    r.multiplicity_count = std::stoull(f[5]);
    return r;
}

std::string fracpart_csv_header() { return "n,p,frac,bound,ratio"; }

std::string fracpart_csv_row(const FracPartSample& s) {
    return std::to_string(s.n) + "," + std::to_string(s.p) + "," +
           format_double(s.frac) + "," + format_double(s.bound) + "," +
           format_double(s.ratio);
}

FracPartSample parse_fracpart_csv_row(const std::string& line) {
    auto f = split_csv(line, 5);
    FracPartSample s;
    s.n = std::stoull(f[0]);
    s.p = std::stoull(f[1]);
    s.frac = std::stod(f[2]);
    s.bound = std::stod(f[3]);
    s.ratio = std::stod(f[4]);
    return s;
}

}  // namespace fracprimes
