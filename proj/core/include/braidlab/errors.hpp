#pragma once

#include <stdexcept>
#include <string>

namespace braidlab {

// A configured size cap was hit; carries how far the computation got.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(const std::string& what, size_t reached)
        : std::runtime_error(what), reached_(reached) {}
    size_t reached() const { return reached_; }

private:
    size_t reached_ = 0;
};

// Malformed user input (spec files, CLI arguments).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
    InputError(const std::string& what, int line, int col)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", col " +
                             std::to_string(col) + ")"),
          line_(line),
          col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_ = 0, col_ = 0;
};

// A structural precondition failed (not a Hopf ideal, not a sub-YD-module,
// not a right ideal, relation violation); the message names the witness.
class StructureError : public std::runtime_error {
public:
    explicit StructureError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace braidlab
