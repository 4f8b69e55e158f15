#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

namespace singcat {

using json = nlohmann::ordered_json;

// Domain error: the input is well-formed enough to be understood but violates
// a precondition of the requested operation.  `code` is a stable short tag,
// `witness` carries whatever concrete object exhibits the violation.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message, json witness = nullptr)
        : std::runtime_error(message), code_(std::move(code)), witness_(std::move(witness)) {}

    const std::string& code() const noexcept { return code_; }
    const json& witness() const noexcept { return witness_; }

    json to_json() const {
        json j;
        j["error"] = code_;
        j["message"] = what();
        j["witness"] = witness_;
        return j;
    }

private:
    std::string code_;
    json witness_;
};

// Malformed command line or object syntax; maps to exit status 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace singcat
