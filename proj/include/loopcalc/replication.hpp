#ifndef LOOPCALC_REPLICATION_HPP
#define LOOPCALC_REPLICATION_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "loopcalc/algebra.hpp"

namespace loopcalc {

struct CaseResult {
    std::string id;
    bool pass = false;
    std::string detail; // computed vs expected, in canonical text
    std::string note;   // optional documented remark; never a failure
};

struct ReplicationCase {
    std::string id;
    std::string identity; // the checked identity, in engine notation
    std::function<CaseResult()> run;
};

struct ReplicationOptions {
    std::uint64_t seed = 0x10093;
};

/// The full fixed catalog of replication cases.
std::vector<ReplicationCase> replication_catalog(const ReplicationOptions& opts = {});

struct ReplicationReport {
    std::vector<CaseResult> results;
    int matched = 0;
    int passed = 0;
    int failed = 0;
    bool all_passed() const { return matched > 0 && failed == 0; }
};

/// Runs every case whose id starts with `filter` (empty matches all),
/// in catalog order.
ReplicationReport run_replication(std::string_view filter, const ReplicationOptions& opts = {});

} // namespace loopcalc

#endif
