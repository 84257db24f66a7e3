#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "khecke/workspace.hpp"

namespace khecke {

enum class Status { ok = 0, domain_error = 1, verification_failed = 2, io_error = 3, internal_error = 4 };

enum class OptionKind { text, integer, flag };

struct OptionSpec {
  std::string name;  // without leading dashes
  OptionKind kind;
  std::string help;
};

struct CommandSpec {
  std::string name;
  std::string help;
  std::vector<OptionSpec> options;  // besides format and cache-dir
};

// Every subcommand with the options it accepts.
const std::vector<CommandSpec>& command_specs();

struct CommandResult {
  Status status = Status::ok;
  std::string output;
  std::string error;
  std::vector<std::string> warnings;
};

using Options = std::map<std::string, std::string>;

// Runs subcommands against a workspace that persists across calls. Option
// values are strings; flags are present with any value. "format" selects
// text, json or latex-table.
class Session {
 public:
  Session();
  ~Session();
  void set_cache_dir(const std::string& dir);
  CommandResult run(const std::string& command, const Options& options);

 private:
  Workspace& workspace();

  std::string cache_flag_;
  std::unique_ptr<Workspace> ws_;
  std::shared_ptr<std::vector<std::string>> warnings_;
};

}  // namespace khecke
