#pragma once

// Deterministic command reports, as "key: value" lines or one JSON object.

#include <string>

#include <json.hpp>

#include "qpers/linalg.hpp"
#include "qpers/quiver.hpp"

namespace qpers {

class Report {
 public:
  explicit Report(std::string command, std::string digest = "-")
      : command_(std::move(command)), digest_(std::move(digest)) {}

  void set_digest(std::string digest) { digest_ = std::move(digest); }

  template <class T>
  void set(const std::string& key, T&& value) {
    payload_[key] = std::forward<T>(value);
  }
  void set_subspace(const std::string& key, const Subspace& s);

  void set_exit_status(int status) noexcept { exit_status_ = status; }
  int exit_status() const noexcept { return exit_status_; }

  /// Scalars print bare, everything else as compact JSON.
  std::string text() const;
  std::string json() const;

 private:
  std::string command_;
  std::string digest_;
  nlohmann::ordered_json payload_ = nlohmann::ordered_json::object();
  int exit_status_ = 0;
};

/// Rows of the RREF basis as nested lists.
nlohmann::ordered_json subspace_rows(const Subspace& s);

/// "s -[e1]-> a -[e2]-> t"; the empty path prints as its vertex.
std::string describe_path(const Quiver& q, const std::string& src, const std::vector<std::string>& edges);

}  // namespace qpers
