#pragma once

#include <stdexcept>
#include <string>

namespace hsc {

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct FieldMismatch : std::runtime_error {
    explicit FieldMismatch(const std::string& what) : std::runtime_error(what) {}
};

// Constructor-level violation of a structural equation; downstream math
// silently breaks, so this is a hard error rather than a report entry.
struct NotWellDefined : std::runtime_error {
    explicit NotWellDefined(const std::string& what) : std::runtime_error(what) {}
};

struct AxiomFailure : std::runtime_error {
    AxiomFailure(std::string axiom, const std::string& what)
        : std::runtime_error(what), axiom(std::move(axiom)) {}
    std::string axiom;
};

// Requested structure degenerates in characteristic two.
struct CharTwo : std::runtime_error {
    explicit CharTwo(const std::string& what) : std::runtime_error(what) {}
};

struct NotHopf : std::runtime_error {
    explicit NotHopf(const std::string& what) : std::runtime_error(what) {}
};

// Something a theorem guarantees failed anyway: flags a bug, not bad input.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

struct ParseError : std::runtime_error {
    ParseError(int line, int col, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg),
          line(line), col(col) {}
    int line;
    int col;
};

struct SemanticError : std::runtime_error {
    SemanticError(std::string key_path, const std::string& msg)
        : std::runtime_error(key_path + ": " + msg), key_path(std::move(key_path)) {}
    std::string key_path;
};

}  // namespace hsc
