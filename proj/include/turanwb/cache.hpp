#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "turanwb/extremal.hpp"

namespace turan {

/// Directory of extremal records, content-addressed by a digest of the
/// search parameters (kind, n, d, k, serialized forbidden object). Records
/// are re-verified on both store and load: the witness must be free of the
/// forbidden object and attain the recorded value; a checksum guards the
/// file body. Single writer, many readers; writes go through a temp file
/// plus rename.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir);

    const std::filesystem::path& dir() const { return dir_; }

    /// Verifies then writes. Throws CorruptRecord if the record fails its
    /// own invariants.
    void store(const ExtremalRecord& rec, const std::string& forbidden_text) const;

    /// nullopt when absent; CorruptRecord when present but failing the
    /// checksum, the parameter echo, or witness re-verification.
    std::optional<ExtremalRecord> load(RecordKind kind, int n, int d, int k,
                                       const std::string& forbidden_text) const;

    static std::string param_digest(RecordKind kind, int n, int d, int k,
                                    const std::string& forbidden_text);
    std::filesystem::path record_path(RecordKind kind, int n, int d, int k,
                                      const std::string& forbidden_text) const;

private:
    std::filesystem::path dir_;
};

// Cache-through wrappers; pass cache = nullptr for a plain search. Only
// exact results are stored (a budget-limited lower bound would go stale).
ExtremalRecord ex_exact_cached(const ResultCache* cache, int n, const Hypergraph& h,
                               const SearchBudget& budget = {});
ExtremalRecord f_exact_cached(const ResultCache* cache, int n, int k, const Hypergraph& h,
                              const SearchBudget& budget = {});
ExtremalRecord mat_ex_exact_cached(const ResultCache* cache, int n, const Matrix01& q,
                                   const SearchBudget& budget = {});

}  // namespace turan
