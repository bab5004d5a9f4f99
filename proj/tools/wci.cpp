#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wci/bounds.hpp"
#include "wci/classify.hpp"
#include "wci/enumerate.hpp"
#include "wci/serialize.hpp"

namespace {

using namespace wci;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

Rational parse_rational_or_throw(const std::string& text, const std::string& flag) {
    auto r = parse_rational(text);
    if (!r) throw CLI::ValidationError(flag, "expected an integer or P/Q fraction");
    return *r;
}

QsMode parse_mode(const std::string& text) {
    return text == "necessary" ? QsMode::necessary : QsMode::strict_hypersurface;
}

std::string subset_str(const VariableSubset& E) {
    std::string s = "{";
    for (std::size_t i = 0; i < E.size(); ++i) s += (i ? "," : "") + std::to_string(E[i]);
    return s + "}";
}

std::string singularity_str(const CyclicQuotientSingularity& s) {
    std::string t = "P_" + std::to_string(s.point_index) + ": 1/" + std::to_string(s.order) + "(";
    for (std::size_t i = 0; i < s.local_weights.size(); ++i)
        t += (i ? "," : "") + std::to_string(s.local_weights[i]);
    t += ") q=" + rational_str(s.discrepancy);
    if (s.reduced) t += " [reduced]";
    return t;
}

void print_record(std::ostream& os, const FamilyRecord& rec) {
    os << rec.family.str() << "\n";
    if (!rec.cone_steps.empty())
        os << "  linear cone: reduced through " << rec.cone_steps.size() << " step(s)\n";
    if (rec.degenerate_ambient) {
        os << "  degenerate: every degree cancels against a weight (X = ambient space)\n";
        return;
    }
    os << "  dim " << rec.family.dim() << ", codim " << rec.family.codim()
       << ", amplitude " << rec.alpha << ", delta " << rec.delta.total << " (";
    for (std::size_t j = 0; j < rec.delta.deltas.size(); ++j)
        os << (j ? "," : "") << rec.delta.deltas[j];
    os << ")\n";
    os << "  O(1)^m = " << rational_str(rec.volumes.o1_power)
       << ", K^m = " << rational_str(rec.volumes.canonical_power)
       << ", (-K)^m = " << rational_str(rec.volumes.anticanonical_power) << "\n";
    os << "  wellformed: " << (rec.wellformed ? "yes" : "no");
    if (rec.wf_witness) os << " (contained singular stratum " << subset_str(*rec.wf_witness) << ")";
    os << "\n";
    os << "  quasismooth: " << (rec.quasismooth.pass ? "pass" : "fail") << " ("
       << qs_mode_name(rec.quasismooth.mode) << " mode)";
    if (!rec.quasismooth.failing.empty())
        os << ", first failing subset " << subset_str(rec.quasismooth.failing.front().subset);
    os << "\n";
    if (rec.quasismooth.pass) {
        if (rec.singularities.empty()) {
            os << "  coordinate singularities: none\n";
        } else {
            os << "  coordinate singularities:\n";
            for (const auto& s : rec.singularities) os << "    " << singularity_str(s) << "\n";
        }
        os << "  klt: " << klt_status_name(rec.klt_status);
        if (rec.epsilon) os << " (epsilon " << rational_str(*rec.epsilon) << ")";
        os << "\n";
    }
}

int run_check(const std::vector<Weight>& weights, const std::vector<Weight>& degrees,
              const std::optional<std::string>& eps_text, const std::string& mode_text,
              bool as_json) {
    std::optional<Rational> eps;
    if (eps_text) eps = parse_rational_or_throw(*eps_text, "--epsilon");
    std::optional<QsMode> mode;
    if (!mode_text.empty()) mode = parse_mode(mode_text);
    const FamilyRecord rec = check_one(weights, degrees, eps, mode);
    if (as_json)
        std::cout << record_to_jsonl(rec) << "\n";
    else
        print_record(std::cout, rec);
    const bool ok = !rec.degenerate_ambient && rec.wellformed && rec.quasismooth.pass;
    return ok ? kExitOk : kExitFailed;
}

int run_bounds(int dim, Weight alpha, std::optional<int> codim,
               const std::optional<std::string>& b_text,
               const std::optional<std::string>& eps_text) {
    std::optional<Rational> b;
    if (b_text) b = parse_rational_or_throw(*b_text, "--volume-lb");
    if (!b) {
        // classical optimal threefold volume bounds
        if (dim == 3)
            b = alpha > 0 ? Rational(1, 420) : Rational(1, 330);
        else
            throw CLI::ValidationError("--volume-lb", "required for dimensions other than 3");
    }
    std::optional<Rational> eps;
    if (eps_text) eps = parse_rational_or_throw(*eps_text, "--epsilon");
    const BoundsQuery query(dim, alpha, codim, *b, eps);
    const BoundsResult res = dc_bound(query);
    std::cout << "codim_max = " << res.codim_max << "\n";
    if (!res.effective) {
        std::cout << "dc_max = none (amplitude 0 admits no effective degree bound; "
                     "supply --max-degree to enumerate)\n";
        return kExitOk;
    }
    std::cout << "N = " << rational_str(res.N) << "\n";
    std::cout << "delta_max = " << rational_str(res.delta_max) << "\n";
    std::cout << "an_strict_sup = " << rational_str(res.an_strict_sup) << "\n";
    std::cout << "dc_max = " << rational_str(res.dc_max) << "\n";
    return kExitOk;
}

int run_enumerate(const SearchParams& params, const std::string& out_path) {
    const std::vector<FamilyRecord> records = enumerate_families(params);
    if (out_path.empty() || out_path == "-") {
        write_jsonl(std::cout, records);
    } else {
        std::ofstream os(out_path, std::ios::binary);
        if (!os) throw CLI::ValidationError("--out", "cannot open output file");
        write_jsonl(os, records);
    }
    std::cerr << records.size() << " families\n";
    return kExitOk;
}

int run_jk(const std::vector<Weight>& ks, const std::string& triples_spec,
           const std::optional<std::string>& eps_text, const std::string& out_path) {
    std::optional<Rational> eps;
    if (eps_text) eps = parse_rational_or_throw(*eps_text, "--epsilon");
    std::vector<std::array<Weight, 3>> triples;
    if (triples_spec == "auto") {
        triples = jk_auto_triples();
    } else {
        std::ifstream is(triples_spec);
        if (!is) throw CLI::ValidationError("--triples", "cannot open triples file");
        std::string line;
        while (std::getline(is, line)) {
            const auto begin = line.find_first_not_of(" \t\r");
            if (begin == std::string::npos || line[begin] == '#') continue;
            std::array<Weight, 3> b{};
            char sep1 = 0, sep2 = 0;
            std::istringstream ls(line);
            if (!(ls >> b[0] >> sep1 >> b[1] >> sep2 >> b[2]) || sep1 != ',' || sep2 != ',' ||
                b[0] < 1 || b[1] < 1 || b[2] < 1)
                throw CLI::ValidationError("--triples", "each row must be b1,b2,b3");
            triples.push_back(b);
        }
    }
    std::cerr << triples.size() << " triples\n";
    const std::vector<FamilyRecord> records = jk_templates(ks, triples, eps);
    if (out_path.empty() || out_path == "-") {
        write_jsonl(std::cout, records);
    } else {
        std::ofstream os(out_path, std::ios::binary);
        if (!os) throw CLI::ValidationError("--out", "cannot open output file");
        write_jsonl(os, records);
    }
    return kExitOk;
}

int run_diff(const std::string& ours_path, const std::string& fixture_path) {
    std::ifstream ours_is(ours_path);
    if (!ours_is) throw CLI::ValidationError("--ours", "cannot open file");
    std::ifstream fix_is(fixture_path);
    if (!fix_is) throw CLI::ValidationError("--fixture", "cannot open file");
    const ParsedFamilies ours = read_families_any(ours_is);
    const ParsedFamilies fixture = read_fixture_csv(fix_is);
    for (const auto& w : ours.warnings) std::cerr << "warning (ours): " << w << "\n";
    const DiffReport report = diff_fixture(ours.rows, fixture);
    for (const auto& w : report.warnings) std::cerr << "warning (fixture): " << w << "\n";
    if (report.empty()) {
        std::cout << "diff empty: " << ours.rows.size() << " families match\n";
        return kExitOk;
    }
    std::cout << "ours-only (" << report.ours_only.size() << "):\n";
    for (const auto& k : report.ours_only) std::cout << "  " << fixture_line(k) << "\n";
    std::cout << "fixture-only (" << report.fixture_only.size() << "):\n";
    for (const auto& k : report.fixture_only) std::cout << "  " << fixture_line(k) << "\n";
    return kExitFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"classifier and bounded enumerator for quasismooth weighted "
                 "complete intersections"};
    app.require_subcommand(1);

    // check
    auto* check = app.add_subcommand("check", "classify a single family");
    std::vector<Weight> weights, degrees;
    check->add_option("--weights", weights, "ambient weights a_0,...,a_n")
        ->required()
        ->delimiter(',');
    check->add_option("--degrees", degrees, "defining degrees d_1,...,d_c")
        ->required()
        ->delimiter(',');
    std::optional<std::string> check_eps;
    check->add_option("--epsilon", check_eps, "klt threshold P/Q (default 1)");
    std::string check_mode;
    check->add_option("--mode", check_mode, "necessary|strict")
        ->check(CLI::IsMember({"necessary", "strict"}));
    bool check_json = false;
    check->add_flag("--json", check_json, "emit the JSONL record");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "bounded classification run");
    SearchParams params;
    enumerate->add_option("--dim", params.m, "dimension of X")->required();
    enumerate->add_option("--amplitude", params.alpha, "amplitude")->required();
    enumerate->add_option("--codim", params.c_range, "codimension list (default 1..bound)")
        ->delimiter(',');
    std::optional<Weight> d_max, a_max;
    enumerate->add_option("--max-degree", d_max, "cap on d_c (mandatory when amplitude is 0)");
    enumerate->add_option("--max-weight", a_max, "cap on a_n");
    enumerate->add_option("--jobs", params.jobs, "worker threads")->check(CLI::PositiveNumber);
    std::string enum_mode = "strict";
    enumerate->add_option("--mode", enum_mode, "hypersurface mode: necessary|strict")
        ->check(CLI::IsMember({"necessary", "strict"}));
    std::optional<std::string> enum_eps, enum_b;
    enumerate->add_option("--epsilon", enum_eps, "klt threshold P/Q");
    enumerate->add_option("--volume-lb", enum_b, "volume lower bound P/Q (derives the cap)");
    std::string out_path;
    enumerate->add_option("--out", out_path, "output JSONL file ('-' for stdout)");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "evaluate the effective bounds");
    int b_dim = 0;
    Weight b_alpha = 0;
    std::optional<int> b_codim;
    std::optional<std::string> b_b, b_eps;
    bounds->add_option("--dim", b_dim, "dimension")->required();
    bounds->add_option("--amplitude", b_alpha, "amplitude")->required();
    bounds->add_option("--codim", b_codim, "codimension (default: maximize over the bound)");
    bounds->add_option("--volume-lb", b_b, "volume lower bound P/Q (dim-3 default: 1/420 or 1/330)");
    bounds->add_option("--epsilon", b_eps, "klt epsilon P/Q (forced to 1 when amplitude > 0 or = -1)");

    // jk
    auto* jk = app.add_subcommand("jk", "instantiate the anticanonical template families");
    std::vector<Weight> k_values;
    jk->add_option("--k", k_values, "odd multipliers k1,k2,...")->required()->delimiter(',');
    std::string triples_spec = "auto";
    jk->add_option("--triples", triples_spec, "'auto' or a CSV file of b1,b2,b3 rows");
    std::optional<std::string> jk_eps;
    jk->add_option("--epsilon", jk_eps, "klt threshold P/Q");
    std::string jk_out;
    jk->add_option("--out", jk_out, "output JSONL file ('-' for stdout)");

    // diff
    auto* diff = app.add_subcommand("diff", "compare a run against a fixture");
    std::string ours_path, fixture_path;
    diff->add_option("--ours", ours_path, "our families (JSONL or CSV)")->required();
    diff->add_option("--fixture", fixture_path, "fixture CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp"
                   ? kExitOk
                   : kExitUsage;
    }

    try {
        if (check->parsed()) return run_check(weights, degrees, check_eps, check_mode, check_json);
        if (enumerate->parsed()) {
            params.d_max = d_max;
            params.a_max = a_max;
            params.mode = parse_mode(enum_mode);
            if (enum_eps) params.epsilon = parse_rational_or_throw(*enum_eps, "--epsilon");
            if (enum_b) params.volume_lb = parse_rational_or_throw(*enum_b, "--volume-lb");
            return run_enumerate(params, out_path);
        }
        if (bounds->parsed()) return run_bounds(b_dim, b_alpha, b_codim, b_b, b_eps);
        if (jk->parsed()) return run_jk(k_values, triples_spec, jk_eps, jk_out);
        if (diff->parsed()) return run_diff(ours_path, fixture_path);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailed;
    }
    return kExitUsage;
}
