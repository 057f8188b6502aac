#include "lwl/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace lwl {

namespace {

using nlohmann::json;

double require_finite_number(const json& v, const std::string& what) {
  if (!v.is_number()) throw ParseError(what + " is not a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ParseError(what + " is not finite");
  return x;
}

}  // namespace

ExponentialSum parse_problem(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("problem file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("lambdas") || !doc.contains("coeffs"))
    throw ParseError("problem file must be an object with 'lambdas' and 'coeffs'");
  const json& jl = doc["lambdas"];
  const json& jc = doc["coeffs"];
  if (!jl.is_array() || !jc.is_array())
    throw ParseError("'lambdas' and 'coeffs' must be arrays");
  if (jl.size() != jc.size())
    throw ParseError("'lambdas' has " + std::to_string(jl.size()) + " entries but 'coeffs' has " +
                     std::to_string(jc.size()));
  if (jl.empty()) throw ParseError("'lambdas' must not be empty");

  std::vector<double> lambdas(jl.size());
  std::vector<cplx> coeffs(jc.size());
  for (std::size_t k = 0; k < jl.size(); ++k) {
    lambdas[k] = require_finite_number(jl[k], "lambda[" + std::to_string(k) + "]");
    if (k > 0 && !(lambdas[k] > lambdas[k - 1]))
      throw ParseError("lambda[" + std::to_string(k) + "] does not exceed lambda[" +
                       std::to_string(k - 1) + "]");
    const json& pair = jc[k];
    if (!pair.is_array() || pair.size() != 2)
      throw ParseError("coeff[" + std::to_string(k) + "] must be a [re, im] pair");
    coeffs[k] = cplx{require_finite_number(pair[0], "coeff[" + std::to_string(k) + "] re"),
                     require_finite_number(pair[1], "coeff[" + std::to_string(k) + "] im")};
  }
  return ExponentialSum(lambdas, coeffs);
}

ExponentialSum load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open problem file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

std::string format_full(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string report_to_json(const CertificateReport& report) {
  json doc;
  doc["params"] = {{"p", report.p},     {"delta", report.delta}, {"eps", report.eps},
                   {"eta", report.eta}, {"M", report.M}};
  doc["S_block"] = report.S_block;
  doc["S_harmonic"] = report.S_harmonic;
  doc["measured_norm"] = report.measured_norm;
  doc["certified_constant"] = report.certified_constant;
  doc["envelope"] = report.envelope;
  doc["witness_sup"] = report.witness_sup;
  doc["ledger"] = {{"leakage_max", report.ledger.leakage_max},
                   {"extraction_max", report.ledger.extraction_max},
                   {"substitution_max", report.ledger.substitution_max},
                   {"duality_rel", report.ledger.duality_rel}};
  doc["quadrature_converged"] = report.quadrature_converged;
  doc["aliasing_suspected"] = report.aliasing_suspected;
  doc["analytic_leak"] = report.analytic_leak;
  doc["pass"] = report.pass;
  return doc.dump(2);
}

CertificateReport report_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("report is not valid JSON: ") + e.what());
  }
  try {
    CertificateReport r;
    const json& params = doc.at("params");
    r.p = params.at("p").get<int>();
    r.delta = params.at("delta").get<int>();
    r.eps = params.at("eps").get<double>();
    r.eta = params.at("eta").get<double>();
    r.M = params.at("M").get<int>();
    r.S_block = doc.at("S_block").get<double>();
    r.S_harmonic = doc.at("S_harmonic").get<double>();
    r.measured_norm = doc.at("measured_norm").get<double>();
    r.certified_constant = doc.at("certified_constant").get<double>();
    r.envelope = doc.at("envelope").get<double>();
    r.witness_sup = doc.at("witness_sup").get<double>();
    const json& ledger = doc.at("ledger");
    r.ledger.leakage_max = ledger.at("leakage_max").get<double>();
    r.ledger.extraction_max = ledger.at("extraction_max").get<double>();
    r.ledger.substitution_max = ledger.at("substitution_max").get<double>();
    r.ledger.duality_rel = ledger.at("duality_rel").get<double>();
    r.quadrature_converged = doc.at("quadrature_converged").get<bool>();
    r.aliasing_suspected = doc.at("aliasing_suspected").get<bool>();
    r.analytic_leak = doc.at("analytic_leak").get<double>();
    r.pass = doc.at("pass").get<bool>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("report is missing fields: ") + e.what());
  }
}

std::string check_csv_header() { return "name,lhs,rhs,margin,pass"; }

std::string check_csv_row(const CheckResult& r) {
  return r.name + "," + format_full(r.lhs) + "," + format_full(r.rhs) + "," +
         format_full(r.margin) + "," + (r.pass ? "1" : "0");
}

}  // namespace lwl
