#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rns/probability.hpp"

namespace rns {

/// One atlas record: the h-polynomial of Delta_n plus bookkeeping.
struct AtlasEntry {
    int n = 0;
    std::vector<std::int64_t> h_coeffs;
    std::int64_t num_irreducible = 0;
    double compute_seconds = 0.0;
};

/// Corrupt or inconsistent atlas file; line is 1-based.
class AtlasError : public std::runtime_error {
public:
    AtlasError(int line, const std::string& message);
    int line() const { return line_; }

private:
    int line_;
};

/// Line-delimited text store of h-polynomials, one record per line:
///   n <TAB> h0,h1,... <TAB> num_irreducible <TAB> compute_seconds
/// Lines starting with '#' are comments.  Append-friendly: building never
/// rewrites existing records.
class Atlas {
public:
    Atlas() = default;

    /// Missing file loads as an empty atlas; malformed contents throw
    /// AtlasError naming the offending line.
    static Atlas load(const std::filesystem::path& path);

    const AtlasEntry* find(int n) const;
    const std::map<int, AtlasEntry>& entries() const { return entries_; }

    /// Largest K such that entries 1..K are all present (0 if none).
    int max_contiguous_n() const;

    /// h_1..h_K for K = min(max_n, max_contiguous_n()).
    HTable h_table(int max_n) const;

    void insert(AtlasEntry entry);  // rejects duplicates / invalid entries

private:
    std::map<int, AtlasEntry> entries_;
};

struct AtlasBuildResult {
    int appended = 0;
    int max_n = 0;
};

/// Computes and appends the missing entries for n <= max_n.  Existing
/// entries are validated on load, never recomputed, so rebuilding with the
/// same max_n leaves the file byte-identical.  max_n >= 2.
AtlasBuildResult atlas_build(const std::filesystem::path& path, int max_n, int jobs = 1);

}  // namespace rns
