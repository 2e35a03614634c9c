#include <gtest/gtest.h>

#include "pci/certificates.hpp"

using namespace pci;

TEST(Certificates, FullRunPasses) {
  auto results = run_certificates();
  EXPECT_EQ(results.size(), certificate_ids().size());
  for (const auto& r : results) EXPECT_TRUE(r.passed) << r.id << ": " << r.detail;
}

TEST(Certificates, PerturbationFailsExactlyThatEntry) {
  for (const std::string id : {"star-exponents", "psi-decomposition", "radical-validation"}) {
    CertificateOptions options;
    options.perturb = id;
    for (const auto& r : run_certificates(options)) EXPECT_EQ(r.passed, r.id != id) << id << " " << r.id;
  }
}

TEST(Certificates, OnlySelectsTopic) {
  CertificateOptions options;
  options.only = {"univariate"};
  auto results = run_certificates(options);
  EXPECT_FALSE(results.empty());
  for (const auto& r : results) EXPECT_EQ(r.topic, "univariate");
  options.only = {"nonsense"};
  EXPECT_THROW(run_certificates(options), std::invalid_argument);
}
