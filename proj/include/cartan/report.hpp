#ifndef CARTAN_REPORT_HPP
#define CARTAN_REPORT_HPP

#include <json.hpp>
#include <optional>
#include <string>

#include "cartan/bidersolve.hpp"
#include "cartan/dersolve.hpp"
#include "cartan/structchecks.hpp"

namespace cartan {

extern const char* kToolVersion;

/// Machine-readable verification record. Sections are filled by the
/// subcommands that ran; the verdict is "verified" only when every enabled
/// check passed, "partial" when a resource limit truncated a computation.
class VerificationReport {
 public:
  nlohmann::json config;

  void add_dimensions(const AlgebraTable& t, const ExtendedAlgebra& ext);
  void add_roots(const RootsReport& r);
  void add_jacobi(const AlgebraTable& t, const std::vector<std::string>& invariant_problems,
                  const JacobiReport& j);
  void add_derivations(const DerReport& d);
  void add_biderivations(const AlgebraTable& t, const BiderReport& b);
  void add_checks(const std::vector<CheckReport>& checks,
                  const std::optional<LieBiderReport>& degree0,
                  const std::string& degree0_family, const BiderReport* bider_blocks);
  void mark_incomplete() { incomplete_ = true; }

  bool all_passed() const { return failures_.empty(); }
  bool incomplete() const { return incomplete_; }
  const std::vector<std::string>& failures() const { return failures_; }
  std::string verdict() const;

  nlohmann::json to_json() const;
  std::string pretty() const { return to_json().dump(2) + "\n"; }

  /// Short human-readable summary derived from the same data.
  std::string summary() const;

 private:
  void fail(const std::string& label) { failures_.push_back(label); }

  nlohmann::json sections_ = nlohmann::json::object();
  std::vector<std::string> failures_;
  bool incomplete_ = false;
};

std::string weight_to_string(const Weight& w);

}  // namespace cartan

#endif
