#include "qpers/report.hpp"

namespace qpers {

nlohmann::ordered_json subspace_rows(const Subspace& s) {
  auto rows = nlohmann::ordered_json::array();
  const Matrix& b = s.basis();
  for (Eigen::Index i = 0; i < b.rows(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (Eigen::Index j = 0; j < b.cols(); ++j) row.push_back(b(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

void Report::set_subspace(const std::string& key, const Subspace& s) {
  payload_[key + "_dim"] = s.dim();
  payload_[key + "_basis"] = subspace_rows(s);
}

std::string Report::text() const {
  std::string out = "command: " + command_ + "\n";
  out += "input_digest: " + digest_ + "\n";
  for (const auto& [key, value] : payload_.items()) {
    out += key + ": ";
    out += value.is_string() ? value.get<std::string>() : value.dump();
    out += "\n";
  }
  out += "exit_status: " + std::to_string(exit_status_) + "\n";
  return out;
}

std::string Report::json() const {
  nlohmann::ordered_json doc;
  doc["command"] = command_;
  doc["input_digest"] = digest_;
  doc["result"] = payload_;
  doc["exit_status"] = exit_status_;
  return doc.dump(2) + "\n";
}

std::string describe_path(const Quiver& q, const std::string& src, const std::vector<std::string>& edges) {
  std::string out = src;
  for (const auto& id : edges) out += " -[" + id + "]-> " + q.edge(id).dst;
  return out;
}

}  // namespace qpers
