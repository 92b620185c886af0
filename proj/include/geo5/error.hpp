#pragma once

#include <stdexcept>
#include <string>

namespace geo5 {

// Base class for all domain errors thrown by this library.  CLI maps these
// to exit code 1; I/O and parse failures use ParseError (exit code 2).
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DegenerateInput : Error {
    explicit DegenerateInput(const std::string& msg) : Error("DegenerateInput: " + msg) {}
};

struct DegreeCapExceeded : Error {
    explicit DegreeCapExceeded(const std::string& msg) : Error("DegreeCapExceeded: " + msg) {}
};

struct EndpointRoot : Error {
    explicit EndpointRoot(const std::string& msg) : Error("EndpointRoot: " + msg) {}
};

struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& msg) : Error("ShapeMismatch: " + msg) {}
};

struct NotSolvable : Error {
    explicit NotSolvable(const std::string& msg) : Error("NotSolvable: " + msg) {}
};

struct WrongBranch : Error {
    explicit WrongBranch(const std::string& msg) : Error("WrongBranch: " + msg) {}
};

struct WrongDimension : Error {
    explicit WrongDimension(const std::string& msg) : Error("WrongDimension: " + msg) {}
};

struct NotAGroup : Error {
    explicit NotAGroup(const std::string& msg) : Error("NotAGroup: " + msg) {}
};

struct ModelMismatch : Error {
    explicit ModelMismatch(const std::string& msg) : Error("ModelMismatch: " + msg) {}
};

struct IllConditioned : Error {
    explicit IllConditioned(const std::string& msg) : Error("IllConditioned: " + msg) {}
};

struct NotInKeyError : Error {
    std::string fingerprint_json;
    NotInKeyError(const std::string& msg, std::string fp)
        : Error("NotInKey: " + msg), fingerprint_json(std::move(fp)) {}
};

// I/O and syntax problems (CLI exit code 2).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error("ParseError: " + msg) {}
};

} // namespace geo5
