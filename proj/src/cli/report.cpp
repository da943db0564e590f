#include "outfn/report.hpp"

#include <algorithm>
#include <cctype>

namespace outfn {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skip: return "skip";
  }
  return "?";
}

void Report::add(std::string name, bool ok, nlohmann::json details) {
  checks_.push_back({std::move(name), ok ? Status::pass : Status::fail, std::move(details)});
}

void Report::skip(std::string name, nlohmann::json details) {
  checks_.push_back({std::move(name), Status::skip, std::move(details)});
}

int Report::count(Status s) const {
  return static_cast<int>(std::count_if(checks_.begin(), checks_.end(), [s](const Check& c) { return c.status == s; }));
}

nlohmann::json Report::to_json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : checks_) checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"details", c.details}});
  return {{"command", command_},
          {"parameters", parameters_},
          {"checks", checks},
          {"summary",
           {{"total", checks_.size()}, {"pass", count(Status::pass)}, {"fail", count(Status::fail)}, {"skip", count(Status::skip)}}}};
}

void Report::print(std::ostream& out) const {
  for (const auto& c : checks_) {
    std::string status = to_string(c.status);
    std::transform(status.begin(), status.end(), status.begin(), [](unsigned char ch) { return std::toupper(ch); });
    out << status << "  " << c.name;
    if (c.details.contains("summary")) out << ": " << c.details.at("summary").get<std::string>();
    out << '\n';
  }
  out << command_ << ": " << count(Status::pass) << " passed, " << count(Status::fail) << " failed, "
      << count(Status::skip) << " skipped\n";
}

}  // namespace outfn
