#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace itdist {

/// One failing instance: which diagram, the input it was evaluated on, and
/// the two path results that disagreed.
struct Witness {
  std::string diagram;
  std::string input;
  std::string left;
  std::string right;
};

/// Outcome of a bounded exhaustive check. A report may own sub-reports; the
/// verdict is pass iff no report in the tree holds a witness.
class CheckReport {
 public:
  explicit CheckReport(std::string id = {});

  const std::string& id() const { return id_; }

  /// Count one checked instance; when `ok` is false `make_witness` is invoked.
  template <typename F>
  void expect(bool ok, F&& make_witness) {
    ++checked_;
    if (!ok) fail(make_witness());
  }
  void count(std::size_t n = 1) { checked_ += n; }
  void fail(Witness w);
  void add(CheckReport part);

  bool passed() const;
  /// Instances checked here and in every sub-report.
  std::size_t checked() const;
  /// Failures here and below, including those not retained as witnesses.
  std::size_t failures() const;
  const std::vector<Witness>& witnesses() const { return witnesses_; }
  const std::vector<CheckReport>& parts() const { return parts_; }
  /// Witnesses of this report and all sub-reports, depth first.
  std::vector<Witness> all_witnesses() const;

  /// One `CHECK <id> <PASS|FAIL> ...` line per leaf report.
  std::vector<std::string> lines() const;

  static constexpr std::size_t kMaxWitnesses = 16;

 private:
  std::string id_;
  std::size_t checked_ = 0;
  std::size_t failures_ = 0;
  std::vector<Witness> witnesses_;
  std::vector<CheckReport> parts_;
};

}  // namespace itdist
