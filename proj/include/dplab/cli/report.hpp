#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace dplab::cli {

inline constexpr const char* kVersion = "0.1.0";

// Canonical run record. Serialized bytes depend only on config and seed;
// wall time goes to the console, not into the file.
struct RunReport {
  std::string command;
  nlohmann::ordered_json inputs;   // resolved config, defaults filled in
  nlohmann::ordered_json results;  // values tagged with producing module
  nlohmann::ordered_json provenance;
};

RunReport make_report(const std::string& command, nlohmann::ordered_json inputs,
                      std::uint64_t seed);

nlohmann::ordered_json report_to_json(const RunReport& report);

// Writers throw std::ios_base::failure on I/O problems (exit code 3).
void write_text_file(const std::string& path, const std::string& content);

// RFC 4180: CRLF line endings, header row first.
std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows);

std::string format_double(double v);  // shortest round-trip

}  // namespace dplab::cli
