#ifndef ANNIGRAPH_SUITES_HPP
#define ANNIGRAPH_SUITES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "annigraph/corpus.hpp"

namespace annigraph {

// Outcome of one claim suite over one corpus. A suite evaluates its
// hypothesis per instance and, where the hypothesis holds, checks the
// conclusion; the implication is never checked in reverse. A hypothesis
// that never fires is flagged instead of counted as a pass.
struct SuiteReport {
    std::string suite;
    std::string status;                   // pass | counterexample | hypothesis-never-satisfied
    int64_t instances_checked = 0;
    int64_t hypothesis_satisfied = 0;
    std::optional<std::string> witness;   // present iff status == counterexample
    std::vector<std::string> assumptions; // recorded interpretation notes

    bool failed() const { return status == "counterexample"; }
};

const std::vector<std::string>& suite_names();

// throws std::invalid_argument for an unknown suite name
SuiteReport run_suite(const std::string& name, const CorpusSpec& spec);

std::vector<SuiteReport> run_all(const CorpusSpec& spec);

// stable JSON serialization; byte-identical for any worker count
std::string serialize_reports(const std::vector<SuiteReport>& reports);

} // namespace annigraph

#endif
