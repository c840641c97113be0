#pragma once

#include "ep/bigint.hpp"
#include "ep/weights/weights.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ep::engine {

/// Expected spin fixed-space dimension recomputed during audit.
struct SpinWitness {
    weights::SpinExponentVector vector;
    unsigned expected_dim = 0;
};

/// One registry row: a candidate (d, socle, module) with its elimination
/// route and the shipped quantities the audit re-derives.
struct CaseRecord {
    enum class Route { Corollary, FValue, Refined, OutOfScopeS4 };

    std::string table_row; // the source-table row this record belongs to
    std::string socle;
    std::string module;
    std::size_t d = 0;
    Route route = Route::Corollary;

    std::optional<Nat> alpha;                       // corollary route
    std::vector<std::pair<std::size_t, Nat>> parts; // refined route
    std::optional<Nat> expected_sum;                // refined route
    std::optional<Nat> expected_f;                  // fvalue route
    std::optional<Nat> expected_f_extension;        // e.g. the .2 extension
    std::optional<std::string> dataset;             // relative path to .mxl
    std::optional<unsigned> wedge_k;                // re-derive the wedge cap
    std::vector<SpinWitness> spin_witnesses;        // re-derive spin dims
    std::string notes;

    static std::string route_string(Route r);
    static Route parse_route(const std::string& s);
};

std::vector<CaseRecord> parse_registry(std::istream& in);
std::vector<CaseRecord> parse_registry_file(const std::filesystem::path& path);
std::string write_registry(const std::vector<CaseRecord>& records);

} // namespace ep::engine
