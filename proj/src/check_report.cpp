#include "itdist/check_report.hpp"

namespace itdist {

CheckReport::CheckReport(std::string id) : id_(std::move(id)) {}

void CheckReport::fail(Witness w) {
  ++failures_;
  if (witnesses_.size() < kMaxWitnesses) witnesses_.push_back(std::move(w));
}

void CheckReport::add(CheckReport part) { parts_.push_back(std::move(part)); }

bool CheckReport::passed() const {
  if (failures_ != 0) return false;
  for (const auto& p : parts_) {
    if (!p.passed()) return false;
  }
  return true;
}

std::size_t CheckReport::checked() const {
  std::size_t n = checked_;
  for (const auto& p : parts_) n += p.checked();
  return n;
}

std::size_t CheckReport::failures() const {
  std::size_t n = failures_;
  for (const auto& p : parts_) n += p.failures();
  return n;
}

std::vector<Witness> CheckReport::all_witnesses() const {
  std::vector<Witness> out = witnesses_;
  for (const auto& p : parts_) {
    auto sub = p.all_witnesses();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

std::vector<std::string> CheckReport::lines() const {
  std::vector<std::string> out;
  if (parts_.empty() || checked_ != 0 || failures_ != 0) {
    std::string line = "CHECK " + id_ + (failures_ == 0 ? " PASS" : " FAIL");
    line += " checked=" + std::to_string(checked_);
    if (!witnesses_.empty()) {
      const Witness& w = witnesses_.front();
      line += " witness=" + w.input + " diagram=" + w.diagram + " left=" + w.left +
              " right=" + w.right;
    }
    out.push_back(std::move(line));
  }
  for (const auto& p : parts_) {
    auto sub = p.lines();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

}  // namespace itdist
