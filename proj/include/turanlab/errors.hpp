#pragma once

#include <stdexcept>
#include <string>

namespace turanlab {

// Domain error with a stable machine-readable name. The CLI prints the name
// verbatim, so the set of names is part of the external interface.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(message), name_(std::move(name)) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

struct MalformedGraph6 : Error {
    explicit MalformedGraph6(const std::string& msg) : Error("MalformedGraph6", msg) {}
};

struct TooLarge : Error {
    explicit TooLarge(const std::string& msg) : Error("TooLarge", msg) {}
};

struct Overflow : Error {
    explicit Overflow(const std::string& msg) : Error("Overflow", msg) {}
};

struct NonTermination : Error {
    explicit NonTermination(const std::string& msg) : Error("NonTermination", msg) {}
};

struct NoValidM : Error {
    explicit NoValidM(const std::string& msg) : Error("NoValidM", msg) {}
};

struct NotKkFree : Error {
    explicit NotKkFree(const std::string& msg) : Error("NotKkFree", msg) {}
};

struct DegeneratePair : Error {
    explicit DegeneratePair(const std::string& msg) : Error("DegeneratePair", msg) {}
};

struct IoFailure : Error {
    explicit IoFailure(const std::string& msg) : Error("IoFailure", msg) {}
};

}  // namespace turanlab
