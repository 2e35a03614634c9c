#pragma once

// Reproduction of the worked examples as self-checking certificates.

#include <chrono>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace pci {

struct CertificateResult {
  std::string id;
  std::string topic;
  /// What is being reproduced, e.g. "closure of (y - 2x) has basis {y - 2x, x^2}".
  std::string anchor;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct CertificateOptions {
  /// Topics to run; empty runs everything.
  std::set<std::string> only;
  /// Id of a certificate whose expected value is deliberately altered.
  std::optional<std::string> perturb;
  /// Budget for the long intersection computation.
  std::chrono::seconds stretch_budget{1800};
};

/// closure, laurent, univariate, principal, radical, symmetric.
const std::vector<std::string>& certificate_topics();
std::vector<std::string> certificate_ids();

/// Throws std::invalid_argument for unknown topics or perturbation ids.
std::vector<CertificateResult> run_certificates(const CertificateOptions& options = {});

}  // namespace pci
