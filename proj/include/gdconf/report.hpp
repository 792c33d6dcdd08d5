#pragma once

#include <nlohmann/json.hpp>

#include <chrono>
#include <string>
#include <vector>

namespace gdconf {

enum class Status { pass = 0, fail = 1, inconclusive = 2, overflow = 3 };
const char* to_string(Status s);

// Worse of two statuses: overflow > fail > inconclusive > pass.
Status combine(Status a, Status b);

/// Outcome of one verification: {check, status, witnesses, bounds, timing}
/// plus free-form details and a text mirror.
struct Report {
  std::string check;
  Status status = Status::pass;
  nlohmann::json witnesses = nlohmann::json::array();
  nlohmann::json bounds = nlohmann::json::object();
  nlohmann::json details = nlohmann::json::object();
  double seconds = 0;
  std::vector<std::string> lines;

  bool ok() const { return status == Status::pass; }
  void note(std::string line) { lines.push_back(std::move(line)); }
  void fail(const std::string& line, nlohmann::json witness = nullptr);
  void merge_status(Status s) { status = combine(status, s); }

  nlohmann::json to_json() const;
  std::string to_text() const;
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// 0 pass, 1 fail, 3 overflow or inconclusive.
int exit_code(Status s);

}  // namespace gdconf
