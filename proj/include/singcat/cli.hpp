#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "singcat/error.hpp"

namespace singcat::cli {

enum Exit : int { Ok = 0, DomainError = 1, UsageFailure = 2 };

// Runs one command line (without the program name).  Results go to `out`
// (or the --out file), usage messages to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CaseResult {
    std::string name;
    std::string status;  // "pass", "fail" or "error"
    std::string detail;
};

struct CorpusReport {
    std::vector<CaseResult> cases;

    std::size_t count(const std::string& status) const;
    bool ok() const { return count("fail") == 0 && count("error") == 0; }
};

// Each "<name>.case.json" in `dir` holds {"args": [...], "exit": n, "expect": {...}};
// "{dir}" inside args expands to the corpus directory.  A case passes when the
// exit status matches and every key of "expect" matches the output.
CorpusReport run_corpus(const std::filesystem::path& dir);

json to_json(const CorpusReport& r);

// Recursive containment: objects match key-wise, arrays element-wise with
// equal length, everything else exactly.
bool json_contains(const json& actual, const json& expected);

}  // namespace singcat::cli
