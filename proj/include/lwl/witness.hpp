#pragma once

#include <vector>

#include "lwl/model.hpp"
#include "lwl/quadrature.hpp"
#include "lwl/window.hpp"

namespace lwl {

struct WitnessConfig {
  // Grid size on the window interval.  0 = start at 2^14 and double while the
  // sampled level spectra look under-resolved, capped at 2^20.  An explicit
  // power of two (>= 256) is used as given.
  int M = 0;
  // Damping rate of the assembly recursion.  0 = 0.999 * eta_admissible.
  double eta = 0.0;
  // Error budget split: the substitution residual must stay within
  // eps * delta^{-j} per index.
  double eps = 0.5;
  QuadratureConfig quad;
};

// Worst-case residuals of the certified chain, all normalized so their
// budgets read: leakage <= 1/2, extraction <= 1, substitution <= eps,
// duality <= 1/(2 |I_p|).
struct ResidualLedger {
  double leakage_max = 0.0;       // max_l delta^{j_l} sum_{k != l} |W(l_k - l_l)| / |D_{j_k}|
  double extraction_max = 0.0;    // max_l 2|I_p| delta^{j_l} |<U, e_l phi>/|I_p| - u_l delta^{-j_l}|
  double substitution_max = 0.0;  // max_l delta^{j_l} |<U - V, e_l phi>| / |I_p|
  double duality_rel = 0.0;       // |<U, Phi phi>/|I_p| - S| / S
};

// The dual witness and everything computed on the shared grid
// t_m = -|I_p|/2 + m |I_p|/M.
struct WitnessBundle {
  BlockScheme scheme;
  std::vector<double> lambdas;  // padded to scheme capacity, unit gaps kept
  std::vector<cplx> coeffs;     // padded with zeros
  std::vector<cplx> phases;     // u_k with |a_k| = a_k u_k (u_k = 1 on padding)

  int M = 0;
  double interval_length = 0.0;
  double eta = 0.0;
  double eps = 0.0;
  double envelope = 0.0;  // 1/(1 - e^{-eta})

  std::vector<double> window_vals;          // phi on the grid
  std::vector<std::vector<cplx>> f_levels;  // block averages sum u_k e^{-2 i pi l_k t}/|D_j|
  std::vector<std::vector<cplx>> h_levels;  // analytic completions of |f_j|
  std::vector<cplx> U;                      // sum of levels
  std::vector<cplx> V;                      // damped assembly F_n

  double sup_V = 0.0;
  double sup_intermediate = 0.0;        // max over stages of sup|F_j|
  double recursion_expansion_gap = 0.0; // recursion vs explicit expansion
  double completion_identity_err = 0.0; // max over levels of max |Re h - |f||
  double completion_l2_ratio = 0.0;     // max ||h||_2/||f||_2 (must be <= sqrt 2)
  double suffix_norm_ratio = 0.0;       // max ||H_{j,k}||_2 / analytic bound
  double damping_norm_ratio = 0.0;      // max ||e^{-eta H}-1||_2 / (eta ||H||_2)
  double analytic_leak = 0.0;           // max negative-frequency bin of e^{-eta H}-1
  bool analytic_structure_ok = false;   // analytic_leak <= 1e-8
  bool aliasing_suspected = false;
};

// Unimodular phase vector: u_k = conj(a_k)/|a_k|, and 1 where a_k = 0.
std::vector<cplx> unimodular_phases(const std::vector<cplx>& coeffs);

// c_0 + 2 sum_{0 < s < M/2} c_s e_s + c_{M/2} e_{M/2} of the sampled input:
// kills negative frequencies while keeping Re(output) = input exactly on the
// grid (the +M/2 and -M/2 waves coincide there).  Input must be real-valued.
std::vector<cplx> analytic_completion(const std::vector<cplx>& samples, double interval_length);

WitnessBundle build_witness(const ExponentialSum& s, const BlockScheme& scheme,
                            const Window& w, const WitnessConfig& cfg = {});

// Off-frequency mass the window leaks across indices:
// max_l delta^{j_l} sum_{k != l} |transform(lambda_k - lambda_l)| / |D_{j_k}|.
// Guaranteed <= 1/2 when p >= min_admissible_p(delta) and gaps are >= 1.
double window_leakage_bound(const BlockScheme& scheme, const Window& w,
                            const std::vector<double>& padded_lambdas);

// How accurately pairing U against e^{2 i pi lambda_l t} phi recovers
// u_l delta^{-j_l}; normalized so the guarantee reads <= 1.
double extraction_residual(const WitnessBundle& b, const Window& w);

// Error from substituting the bounded witness V for U in that pairing;
// guaranteed <= eps for eta <= eta_admissible.
double substitution_residual(const WitnessBundle& b);

// Relative gap between the windowed pairing <U, Phi phi>/|I_p| and the
// block-weighted coefficient sum S; bounded by 1/(2 |I_p|).
double duality_gap(const WitnessBundle& b, const ExponentialSum& original, double block_sum);

struct CertifyConfig {
  int delta = 4;
  int p = 0;        // 0 = min_admissible_p(delta)
  double eps = 0.5;
  double eta = 0.0; // 0 = 0.999 * eta_admissible
  WitnessConfig witness;
  QuadratureConfig quad;
};

struct CertificateReport {
  int p = 0;
  int delta = 0;
  double eps = 0.0;
  double eta = 0.0;
  int M = 0;

  double S_block = 0.0;
  double S_harmonic = 0.0;
  double measured_norm = 0.0;       // (1/|I_p|) int_{I_p} |Phi|
  double certified_constant = 0.0;  // S_harmonic <= constant * measured_norm
  double envelope = 0.0;
  double witness_sup = 0.0;

  ResidualLedger ledger;
  bool quadrature_converged = false;
  bool aliasing_suspected = false;
  double analytic_leak = 0.0;
  bool pass = false;
};

// Runs the full pipeline and reports the certified inequality together with
// every residual that backs it.  Throws HypothesisViolated when gaps, p, or
// eta violate the assumptions the chain needs.
CertificateReport certify_lower_bound(const ExponentialSum& s, const CertifyConfig& cfg = {});

}  // namespace lwl
