#include "wci/serialize.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace wci {

namespace {

using OrderedJson = nlohmann::ordered_json;

OrderedJson record_to_json(const FamilyRecord& rec) {
    OrderedJson j;
    j["weights"] = rec.family.space.weights;
    j["degrees"] = rec.family.degrees;
    j["dim"] = rec.family.dim();
    j["codim"] = rec.family.codim();
    j["amplitude"] = rec.alpha;
    j["delta"] = rec.delta.total;
    j["o1_volume"] = rational_str(rec.volumes.o1_power);
    j["k_volume"] = rational_str(rec.volumes.canonical_power);
    j["wellformed"] = rec.wellformed;
    j["quasismooth"] = rec.quasismooth.pass ? "pass" : "fail";
    j["qs_mode"] = qs_mode_name(rec.quasismooth.mode);
    OrderedJson sings = OrderedJson::array();
    for (const auto& s : rec.singularities) {
        OrderedJson js;
        js["point"] = s.point_index;
        js["r"] = s.order;
        js["type"] = s.local_weights;
        js["discrepancy"] = rational_str(s.discrepancy);
        sings.push_back(std::move(js));
    }
    j["singularities"] = std::move(sings);
    j["klt_status"] = klt_status_name(rec.klt_status);
    return j;
}

} // namespace

std::string record_to_jsonl(const FamilyRecord& rec) {
    return record_to_json(rec).dump();
}

void write_jsonl(std::ostream& os, const std::vector<FamilyRecord>& records) {
    for (const auto& rec : records) os << record_to_jsonl(rec) << "\n";
}

FamilyKey key_of(const FamilyRecord& rec) {
    return FamilyKey{rec.family.space.weights, rec.family.degrees};
}

std::string fixture_line(const FamilyKey& key) {
    std::ostringstream os;
    for (std::size_t i = 0; i < key.weights.size(); ++i)
        os << (i ? "," : "") << key.weights[i];
    os << ";";
    for (std::size_t i = 0; i < key.degrees.size(); ++i)
        os << (i ? "," : "") << key.degrees[i];
    return os.str();
}

namespace {

bool parse_int_list(const std::string& text, WeightList& out) {
    out.clear();
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        if (b == std::string::npos) return false;
        const auto e = item.find_last_not_of(" \t");
        try {
            std::size_t used = 0;
            const long long v = std::stoll(item.substr(b, e - b + 1), &used);
            if (used != e - b + 1 || v < 1) return false;
            out.push_back(v);
        } catch (const std::exception&) {
            return false;
        }
    }
    return !out.empty();
}

bool parse_fixture_row(const std::string& line, FamilyKey& key) {
    const auto semi = line.find(';');
    if (semi == std::string::npos) return false;
    if (!parse_int_list(line.substr(0, semi), key.weights)) return false;
    if (!parse_int_list(line.substr(semi + 1), key.degrees)) return false;
    if (key.degrees.size() + 1 > key.weights.size()) return false;
    std::sort(key.weights.begin(), key.weights.end());
    std::sort(key.degrees.begin(), key.degrees.end());
    return true;
}

bool parse_jsonl_row(const std::string& line, FamilyKey& key) {
    const auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return false;
    if (!j.contains("weights") || !j.contains("degrees")) return false;
    try {
        key.weights = j["weights"].get<WeightList>();
        key.degrees = j["degrees"].get<WeightList>();
    } catch (const std::exception&) {
        return false;
    }
    if (key.weights.empty() || key.degrees.empty()) return false;
    std::sort(key.weights.begin(), key.weights.end());
    std::sort(key.degrees.begin(), key.degrees.end());
    return true;
}

ParsedFamilies read_lines(std::istream& is, bool allow_jsonl) {
    ParsedFamilies out;
    std::string line;
    int lineno = 0;
    std::vector<FamilyKey> rows;
    while (std::getline(is, line)) {
        ++lineno;
        const auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        if (line[begin] == '#') continue;
        FamilyKey key;
        bool ok = false;
        if (allow_jsonl && line[begin] == '{')
            ok = parse_jsonl_row(line, key);
        else
            ok = parse_fixture_row(line, key);
        if (!ok) {
            out.warnings.push_back("line " + std::to_string(lineno) + ": malformed row skipped");
            continue;
        }
        rows.push_back(std::move(key));
    }
    std::sort(rows.begin(), rows.end());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i > 0 && rows[i] == rows[i - 1]) {
            out.warnings.push_back("duplicate row collapsed: " + fixture_line(rows[i]));
            continue;
        }
        out.rows.push_back(rows[i]);
    }
    return out;
}

} // namespace

ParsedFamilies read_fixture_csv(std::istream& is) { return read_lines(is, false); }

ParsedFamilies read_families_any(std::istream& is) { return read_lines(is, true); }

DiffReport diff_fixture(const std::vector<FamilyKey>& ours, const ParsedFamilies& fixture) {
    DiffReport report;
    report.warnings = fixture.warnings;
    std::vector<FamilyKey> sorted_ours = ours;
    std::sort(sorted_ours.begin(), sorted_ours.end());
    sorted_ours.erase(std::unique(sorted_ours.begin(), sorted_ours.end()), sorted_ours.end());
    std::set_difference(sorted_ours.begin(), sorted_ours.end(), fixture.rows.begin(),
                        fixture.rows.end(), std::back_inserter(report.ours_only));
    std::set_difference(fixture.rows.begin(), fixture.rows.end(), sorted_ours.begin(),
                        sorted_ours.end(), std::back_inserter(report.fixture_only));
    return report;
}

} // namespace wci
