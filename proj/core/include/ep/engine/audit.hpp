#pragma once

#include "ep/engine/registry.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace ep::engine {

struct CaseOutcome {
    enum class Status { NotEP, OutOfScope, DataRequired, Discrepancy };

    std::string table_row;
    std::string socle;
    std::string module;
    std::string route;
    Status status = Status::DataRequired;
    bool data_required = false;         // verdict rests on shipped values only
    std::vector<std::string> checks;    // re-derived (in)equalities, one per line
    std::string detail;

    std::string status_string() const;
};

struct AuditReport {
    std::vector<CaseOutcome> rows;
    std::size_t discrepancies = 0;
    std::size_t unaudited = 0;      // rows with nothing to re-derive
    std::size_t data_required = 0;  // rows audited from shipped values only

    /// 0 = all consistent, 2 = discrepancy, 3 = unauditable rows present.
    int exit_code() const;
    std::string to_text() const;
};

/// Re-derives every row of the registry: corollary and refined inequalities
/// from the shipped quantities (with wedge caps and spin dimensions
/// recomputed where declared), fvalue rows from their dataset when present
/// or from the shipped expected value otherwise.
AuditReport audit_registry(const std::vector<CaseRecord>& records,
                           const std::filesystem::path& base_dir);

} // namespace ep::engine
