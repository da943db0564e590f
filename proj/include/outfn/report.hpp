#pragma once

// Check reports printed by the command-line tool.

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace outfn {

enum class Status { pass, fail, skip };

std::string to_string(Status s);

struct Check {
  std::string name;
  Status status = Status::pass;
  nlohmann::json details;
};

class Report {
 public:
  Report(std::string command, nlohmann::json parameters)
      : command_(std::move(command)), parameters_(std::move(parameters)) {}

  void add(std::string name, bool ok, nlohmann::json details = nlohmann::json::object());
  void skip(std::string name, nlohmann::json details = nlohmann::json::object());

  const std::vector<Check>& checks() const { return checks_; }
  int count(Status s) const;
  // 0 when nothing failed, else 1.
  int exit_code() const { return count(Status::fail) ? 1 : 0; }

  nlohmann::json to_json() const;
  // One line per check, then a summary line.
  void print(std::ostream& out) const;

 private:
  std::string command_;
  nlohmann::json parameters_;
  std::vector<Check> checks_;
};

}  // namespace outfn
