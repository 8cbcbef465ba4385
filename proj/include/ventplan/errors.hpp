#pragma once

#include <stdexcept>
#include <string>

namespace ventplan {

// Exit codes used by the CLI. Library code throws the matching exception
// type; tools/main.cpp maps them to these values.
enum ExitCode : int {
    kExitOk = 0,
    kExitConfig = 2,
    kExitInfeasible = 3,
    kExitSimulation = 4,
    kExitIo = 5,
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InfeasibleProgramError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SimulationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parse failures carry the 1-based line number of the offending line.
struct ParseError : std::runtime_error {
    ParseError(long line, const std::string& what)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_number(line) {}
    // Wraps an inner error with context (typically the file path).
    ParseError(const std::string& prefix, const ParseError& inner)
        : std::runtime_error(prefix + inner.what()), line_number(inner.line_number) {}
    long line_number;
};

}  // namespace ventplan
