#pragma once

#include "cutkit/group.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace cutkit {

enum class Status { Pass, Fail, Skipped };
std::string to_string(Status s);

struct Assertion {
    std::string claim;
    /// Short label of the statement being checked.
    std::string anchor;
    Status status = Status::Pass;
    /// Set for skipped assertions.
    std::string reason;
    /// Concrete data: group descriptor, class or character index, k, field.
    nlohmann::json witness = nlohmann::json::object();
};

struct SuiteReport {
    std::string suite;
    std::vector<Assertion> assertions;
    double elapsed_seconds = 0;

    bool passed() const;
    std::size_t count(Status s) const;
};

struct VerifyOptions {
    std::size_t max_order = kDefaultMaxOrder;
    unsigned jobs = 1;
};

struct CorpusEntry {
    std::string descriptor;
    /// named, perm, family, negative, product, camina, fuzz
    std::string role;
};

/// The bundled corpus in a fixed order. The fuzz entries are metacyclic groups
/// drawn from a fixed seed.
const std::vector<CorpusEntry>& corpus();
/// Builds (once per process) and returns the group for a descriptor.
PermutationGroup corpus_group(const std::string& descriptor);

SuiteReport suite_criteria_equivalence(const VerifyOptions& opts = {});
SuiteReport suite_theorem1(const VerifyOptions& opts = {});
SuiteReport suite_spectra_remark(const VerifyOptions& opts = {});
SuiteReport suite_complements(const VerifyOptions& opts = {});
SuiteReport suite_theorem2(const VerifyOptions& opts = {});
SuiteReport suite_camina(const VerifyOptions& opts = {});

const std::vector<std::string>& suite_names();
/// Throws UnknownName.
SuiteReport run_suite(const std::string& name, const VerifyOptions& opts = {});
/// "all" runs every suite in suite_names() order.
std::vector<SuiteReport> run_suites(const std::string& name, const VerifyOptions& opts = {});

nlohmann::json to_json(const SuiteReport& r, bool timings = false);
/// {"schema_version", "passed", "suites": [...]}
nlohmann::json to_json(const std::vector<SuiteReport>& reports, bool timings = false);

} // namespace cutkit
