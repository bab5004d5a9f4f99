#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wci/classify.hpp"

namespace wci {

// One family per line, fixed field set.
std::string record_to_jsonl(const FamilyRecord& rec);
void write_jsonl(std::ostream& os, const std::vector<FamilyRecord>& records);

// Identity of a family for fixture comparison.
struct FamilyKey {
    WeightList weights;
    WeightList degrees;
    auto operator<=>(const FamilyKey&) const = default;
};

FamilyKey key_of(const FamilyRecord& rec);

// "a_0,...,a_n;d_1,...,d_c"
std::string fixture_line(const FamilyKey& key);

struct ParsedFamilies {
    std::vector<FamilyKey> rows;       // sorted, deduplicated
    std::vector<std::string> warnings; // malformed/duplicate rows, with line numbers
};

// Fixture CSV: one family per line, '#' starts a comment. Malformed rows
// are reported and skipped; duplicates collapse with a warning.
ParsedFamilies read_fixture_csv(std::istream& is);

// Accepts either fixture CSV or enumeration JSONL (sniffed per line).
ParsedFamilies read_families_any(std::istream& is);

struct DiffReport {
    std::vector<FamilyKey> ours_only;
    std::vector<FamilyKey> fixture_only;
    std::vector<std::string> warnings;
    bool empty() const { return ours_only.empty() && fixture_only.empty(); }
};

DiffReport diff_fixture(const std::vector<FamilyKey>& ours, const ParsedFamilies& fixture);

} // namespace wci
