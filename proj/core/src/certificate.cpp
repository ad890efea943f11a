#include "sigbasis/engine.hpp"

namespace sigbasis {

CertificateReport faugere_certificate(const SigSet& g) {
  CertificateReport report;
  CriticalSet cs = critical_set(g);
  report.complete = cs.complete;
  for (const CriticalSignature& c : cs.entries) {
    ++report.checked;
    if (!rewrite_basis_at(g, c.signature)) {
      report.passed = false;
      report.failures.push_back(c.signature);
    }
  }
  return report;
}

std::optional<CertifiedBasis> CertifiedBasis::certify(SigSet set) {
  if (!faugere_certificate(set).passed)
    return std::nullopt;
  return CertifiedBasis(std::move(set));
}

} // namespace sigbasis
