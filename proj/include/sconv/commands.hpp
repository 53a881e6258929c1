#pragma once

// The command layer shared by the CLI and the Python module: JSON instance
// in, JSON certificate out. Every certificate is replayed through
// io::replay_document before it is returned and only then marked
// "replayable": true.

#include <cstdint>
#include <string>
#include <vector>

#include "sconv/io.hpp"

namespace sconv::commands {

struct Options {
    int float_digits = 12;
    std::uint64_t seed = 0;
    std::size_t samples = 1000;
    bool closed = false;
    /// verify: "prop1" runs the randomized suite on a set.
    std::string suite;
    /// verify: replay a previously emitted certificate.
    bool replay = false;
    /// verify --suite prop1: demand the ]0,1]S check (fails on non-convex gauges).
    bool require_star = false;
};

struct Result {
    io::json output;
    int exit_code = 0;
};

const std::vector<std::string>& names();

/// Throws sconv::Error for precondition and parse failures.
Result run(const std::string& command, const io::json& input, const Options& opts);

/// Structured error document for an exception raised by run().
io::json error_document(const std::string& command, const Error& e);

}  // namespace sconv::commands
