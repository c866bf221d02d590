#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "feel/simulator.hpp"

namespace feel::cli {

/// Writes manifest.txt, aggregate.csv and server_<i>.csv into `dir`.
/// Throws std::runtime_error on I/O failure.
void write_bundle(const std::filesystem::path& dir, const SimConfig& cfg, const ExperimentResult& result);

/// One-line summary of the last aggregate row.
std::string summary_line(const SimConfig& cfg, const ExperimentResult& result);

/// Entry point behind `feelsim`. args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace feel::cli
