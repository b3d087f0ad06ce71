// Copyright 2026 The fockhrt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fockhrt::cli {

struct RunConfig {
    std::string subcommand;
    /// File path, or inline JSON when it starts with '{'.
    std::string input;
    /// Empty writes to the output stream passed to run().
    std::string output;
    std::string format;
    std::uint64_t seed = 0;
    std::optional<std::size_t> M;
    std::optional<std::size_t> guard;
    std::optional<int> d;
    double beta_re = 1.0;
    double beta_im = 0.0;
    std::optional<long> bound;
    std::optional<double> radius;
};

inline const std::vector<std::string> kSubcommands = {"hrt-check", "deep-zero", "lattice",
                                                      "phi", "bargmann", "roots-figure"};

/// Exit status: 0 success, 1 input error, 2 engine error. Errors are written
/// to `err` as a single JSON object.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and dispatches to run().
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace fockhrt::cli
