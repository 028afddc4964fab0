#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

// Command implementations behind both the shared-library interface and the
// command-line tool. Every command returns a machine-readable JSON payload
// plus a human rendering; failures are mapped onto a small status set.

namespace mlv {

enum class Status { Ok = 0, Unsupported = 1, InvalidInput = 2, InternalError = 3 };

struct CommandResult {
  Status status = Status::Ok;
  nlohmann::json payload;
  std::string human_text;

  /// 0 on success, 2 when the request is valid but unsupported (e.g. no
  /// compatible basis exists), 1 otherwise.
  int exit_code() const {
    switch (status) {
      case Status::Ok: return 0;
      case Status::Unsupported: return 2;
      default: return 1;
    }
  }
};

CommandResult cmd_check(const std::string& code_path);
CommandResult cmd_basis(const std::string& code_path, const std::string& output_path);
CommandResult cmd_phase(const std::string& code_path, const std::string& signs,
                        const std::string& basis_path);
CommandResult cmd_concat(const std::string& spec_path, bool verify, std::size_t samples,
                         uint64_t seed);
CommandResult cmd_convert(std::size_t k, const std::string& source, const std::string& target,
                          std::size_t max_depth);
CommandResult cmd_catalog(const std::string& name, const std::string& output_path);
CommandResult cmd_verify(const std::string& code_path, const std::string& basis_path);

}  // namespace mlv
