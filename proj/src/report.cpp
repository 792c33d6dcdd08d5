#include "gdconf/report.hpp"

#include <sstream>

namespace gdconf {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::inconclusive:
      return "inconclusive";
    case Status::overflow:
      return "truncation-overflow";
  }
  return "?";
}

namespace {
int severity(Status s) {
  switch (s) {
    case Status::pass:
      return 0;
    case Status::inconclusive:
      return 1;
    case Status::fail:
      return 2;
    case Status::overflow:
      return 3;
  }
  return 0;
}
}  // namespace

Status combine(Status a, Status b) { return severity(a) >= severity(b) ? a : b; }

void Report::fail(const std::string& line, nlohmann::json witness) {
  merge_status(Status::fail);
  lines.push_back("FAIL " + line);
  if (!witness.is_null()) witnesses.push_back(std::move(witness));
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["check"] = check;
  j["status"] = to_string(status);
  j["witnesses"] = witnesses;
  j["bounds"] = bounds;
  j["timing"] = {{"seconds", seconds}};
  if (!details.empty()) j["details"] = details;
  j["lines"] = lines;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "[" << to_string(status) << "] " << check;
  if (!bounds.empty()) out << "  " << bounds.dump();
  out << "\n";
  for (const auto& l : lines) out << "  " << l << "\n";
  return out.str();
}

int exit_code(Status s) {
  switch (s) {
    case Status::pass:
      return 0;
    case Status::fail:
      return 1;
    case Status::inconclusive:
    case Status::overflow:
      return 3;
  }
  return 1;
}

}  // namespace gdconf
