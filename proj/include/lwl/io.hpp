#pragma once

#include <stdexcept>
#include <string>

#include "lwl/inequalities.hpp"
#include "lwl/model.hpp"
#include "lwl/witness.hpp"

namespace lwl {

// Malformed problem or report files (bad syntax, wrong types, NaN/Inf,
// non-monotone frequencies).  The CLI maps this to exit code 2.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Problem files are JSON objects:
//   { "lambdas": [0, 1, 2.5], "coeffs": [[1, 0], [0.5, -0.5], [0, 1]] }
// Diagnostics name the offending index.
ExponentialSum parse_problem(const std::string& text);
ExponentialSum load_problem(const std::string& path);

// Full-precision decimal formatting (%.17g): doubles survive a round trip.
std::string format_full(double x);

std::string report_to_json(const CertificateReport& report);
CertificateReport report_from_json(const std::string& text);

std::string check_csv_header();
std::string check_csv_row(const CheckResult& r);

}  // namespace lwl
