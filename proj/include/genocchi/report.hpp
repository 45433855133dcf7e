// SPDX-License-Identifier: Apache-2.0
//
// Structured verdicts for the identity-audit harness.

#ifndef GENOCCHI_REPORT_HPP
#define GENOCCHI_REPORT_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "genocchi/mpoly.hpp"

namespace genocchi {

enum class IdentityStatus { Verified, Failed, DomainError };

inline const char* status_name(IdentityStatus s) {
  switch (s) {
    case IdentityStatus::Verified: return "verified";
    case IdentityStatus::Failed: return "failed";
    case IdentityStatus::DomainError: return "domain_error";
  }
  return "?";
}

/// One audited (identity, parameters) cell. For symbolic checks the
/// witness is the canonically rendered difference polynomial ("0" when
/// verified, tolerance 0); for numeric checks it is |LHS - RHS| against
/// the stated tolerance.
struct IdentityReport {
  std::string identity_id;
  std::map<std::string, std::string> parameters;
  IdentityStatus status = IdentityStatus::Failed;
  std::string witness;
  double tolerance = 0.0;

  /// Printed-variant cells are expected to fail and never affect the
  /// audit exit status.
  bool is_printed_variant() const {
    const std::string tag = "-printed";
    return identity_id.size() >= tag.size() &&
           identity_id.compare(identity_id.size() - tag.size(), tag.size(), tag) == 0;
  }
};

/// Verdict for an exact polynomial identity: verified iff lhs - rhs is
/// the zero polynomial; the difference is the witness either way.
inline IdentityReport symbolic_report(std::string id,
                                      std::map<std::string, std::string> params,
                                      const MPoly& lhs, const MPoly& rhs) {
  IdentityReport r;
  r.identity_id = std::move(id);
  r.parameters = std::move(params);
  MPoly diff = lhs - rhs;
  r.status = diff.is_zero() ? IdentityStatus::Verified : IdentityStatus::Failed;
  r.witness = diff.to_string();
  r.tolerance = 0.0;
  return r;
}

inline IdentityReport domain_error_report(std::string id,
                                          std::map<std::string, std::string> params,
                                          std::string reason) {
  IdentityReport r;
  r.identity_id = std::move(id);
  r.parameters = std::move(params);
  r.status = IdentityStatus::DomainError;
  r.witness = std::move(reason);
  r.tolerance = 0.0;
  return r;
}

/// Raised where an operation's contract is itself an identity claim and
/// the claim fails; the audit harness converts it into a failed report.
class IdentityViolation : public std::runtime_error {
 public:
  explicit IdentityViolation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace genocchi

#endif  // GENOCCHI_REPORT_HPP
