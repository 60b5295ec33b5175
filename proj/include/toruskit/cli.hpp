#pragma once

#include <map>
#include <string>

#include "toruskit/json_io.hpp"

namespace toruskit {

// One batch invocation: a command, exactly one input source, an optional
// output path, and cap overrides. Unknown option keys are rejected.
struct JobSpec {
  std::string command;
  std::string input_path;
  std::string inline_json;
  std::string output_path;
  std::map<std::string, std::string> options;
};

// Executes the job and returns the artifact document. Raises DomainError;
// the command-line wrapper turns that into an error document and exit 2.
Json run_job(const JobSpec& job);

// Full command-line surface: parses arguments and TORUSKIT_CAPS, writes the
// artifact (or a toruskit/error/1 document) to the chosen sink.
// Returns the process exit code: 0 on success, 2 on any rejected input.
int run_cli(int argc, const char* const* argv);

}  // namespace toruskit
