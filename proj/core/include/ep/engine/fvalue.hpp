#pragma once

#include "ep/engine/records.hpp"

#include <span>

namespace ep::engine {

/// The fixed-space statistic: for each class, fix dim is the dimension of
/// the common fixed space of the induced generators; the total is
/// sum class_size * (2^fix_dim - 1), exact. Per-class tags override `tag`
/// when set; every induced dimension must equal d. Non-normal classes
/// (class_size >= 2) must satisfy fix_dim <= floor(d/2), else the data is
/// rejected.
FValueReport f_value(std::span<const MaximalClassRecord> classes, const rep::ModuleTag& tag,
                     std::size_t d);

/// Lemma criterion on a completed f: f < 2^d-1 is notEP, f = 2^d-1 is EP,
/// f > 2^d-1 is impossible and throws ep::data_error.
Verdict lemma_verdict(const Nat& f, std::size_t d);

/// Verdict for a dataset, honoring the completeness flag: equality only
/// certifies EP when the dataset is complete; incomplete data can reach
/// notEP only via a declared missing_bound.
Verdict dataset_verdict(const MaximalDataset& dataset, const FValueReport& report);

} // namespace ep::engine
