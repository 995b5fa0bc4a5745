#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rectlab/bijection.hpp"
#include "rectlab/cases.hpp"
#include "rectlab/generators.hpp"
#include "rectlab/oeis.hpp"
#include "rectlab/table.hpp"
#include "rectlab/whirl_series.hpp"

using namespace rectlab;
using nlohmann::json;

namespace {

enum Exit { exit_pass = 0, exit_mismatch = 1, exit_usage = 2, exit_resource = 3 };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void print(const std::string& format, std::ostream& out) const {
        if (format == "json") {
            json arr = json::array();
            for (const auto& r : rows) {
                json obj = json::object();
                for (std::size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = r[i];
                arr.push_back(std::move(obj));
            }
            out << arr.dump(2) << "\n";
        } else if (format == "csv") {
            for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
            out << "\n";
            for (const auto& r : rows) {
                for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
                out << "\n";
            }
        } else {
            std::vector<std::size_t> w(columns.size());
            for (std::size_t i = 0; i < columns.size(); ++i) w[i] = columns[i].size();
            for (const auto& r : rows) {
                for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
            }
            auto line = [&](const std::vector<std::string>& cells) {
                for (std::size_t i = 0; i < cells.size(); ++i) {
                    out << (i ? "  " : "") << cells[i];
                    if (i + 1 < cells.size()) out << std::string(w[i] - cells[i].size(), ' ');
                }
                out << "\n";
            };
            line(columns);
            for (const auto& r : rows) line(r);
        }
    }
};

std::string str(const mpq_class& q) { return q.get_str(); }
std::string str(const mpz_class& z) { return z.get_str(); }
std::string str(std::uint64_t v) { return std::to_string(v); }

const TableRow& row_or_usage(const std::string& id) {
    try {
        return find_row(id);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

// Counts n = 1..N from the series of a row: its case system, or V for vortices.
QSeries row_series(const TableRow& row, int N) {
    if (row.case_number > 0) return solve_system(find_case_spec(row.case_number), N).F();
    return whirl_pipeline(std::max(N, 7)).V;
}

std::uint64_t count_by(const std::string& method, const TableRow& row, int n, int ceiling) {
    if (method == "bijective") return count_class(n, row.avoided, ClassMethod::bijective, ceiling);
    return count_class(n, row.avoided, ClassMethod::oracle, ceiling);
}

// ---------------------------------------------------------------------------

struct CountOptions {
    std::string row = "1234";
    int n = 6;
    std::vector<std::string> methods{"auto"};
    int ceiling = default_oracle_ceiling;
};

int cmd_count(const CountOptions& o, const std::string& format) {
    const TableRow& row = row_or_usage(o.row);
    std::vector<std::string> methods;
    for (const auto& m : o.methods) {
        if (m == "all") {
            if (row.guillotine_diagonal()) methods.push_back("bijective");
            methods.push_back("oracle");
            methods.push_back("gf");
        } else if (m == "auto") {
            methods.push_back(row.guillotine_diagonal() ? "bijective" : "oracle");
        } else {
            if (m == "bijective" && !row.guillotine_diagonal()) {
                throw UsageError("bijective counting needs a guillotine diagonal row");
            }
            methods.push_back(m);
        }
    }
    std::optional<QSeries> gf;
    Table t{{"n", "count", "method"}, {}};
    bool agree = true;
    for (int n = 1; n <= o.n; ++n) {
        std::optional<std::string> first;
        for (const auto& m : methods) {
            std::string value;
            if (m == "gf") {
                if (!gf) gf = row_series(row, o.n);
                value = str((*gf)[n]);
            } else {
                value = str(count_by(m, row, n, o.ceiling));
            }
            if (first && *first != value) agree = false;
            if (!first) first = value;
            t.rows.push_back({std::to_string(n), value, m});
        }
    }
    t.print(format, std::cout);
    if (!agree) std::cerr << "methods disagree\n";
    return agree ? exit_pass : exit_mismatch;
}

// ---------------------------------------------------------------------------

struct VerifyOptions {
    std::vector<std::string> suites{"all"};
    std::optional<int> order;  // per-suite default when unset
    int n = 7;
    int depth = 9;
};

int suite_order(const VerifyOptions& o, int fallback) { return o.order.value_or(fallback); }

std::pair<bool, std::string> run_suite(const std::string& suite, const VerifyOptions& o) {
    std::ostringstream info;
    if (suite == "theorem1") {
        bool ok = true;
        for (const auto& spec : bundled_cases()) {
            const auto chk = verify_theorem1(spec, suite_order(o, 30));
            if (!chk.ok) info << "case " << spec.id << " differs at t^" << chk.first_mismatch << "; ";
            ok = ok && chk.ok;
        }
        info << "ten cases at N=" << suite_order(o, 30);
        return {ok, info.str()};
    }
    if (suite == "bijection") {
        bool ok = true;
        for (int n = 1; n <= o.n; ++n) {
            for_each_separable(n, [&](const Permutation& p) { ok = ok && delta(delta_inv(p)) == p; });
        }
        info << "delta(delta_inv(p)) = p for n<=" << o.n;
        return {ok, info.str()};
    }
    if (suite == "translation") {
        bool ok = true;
        for (int n = 1; n <= o.n; ++n) {
            for (const auto& row : table_rows()) {
                const auto r = check_translation(row, n);
                if (!r.ok) info << "row " << row.id << " fails at n=" << n << "; ";
                ok = ok && r.ok;
            }
        }
        info << "ten rows for n<=" << o.n;
        return {ok, info.str()};
    }
    if (suite == "whirl-tree") {
        const auto levels = whirl_tree(o.depth);
        const QSeries c4 = catalan(o.depth).pow(4);
        bool ok = true;
        for (int k = 0; k <= o.depth; ++k) ok = ok && c4[k] == mpq_class(levels.sizes[static_cast<std::size_t>(k)]);
        info << "level sizes 0.." << o.depth << " vs [t^k]C^4";
        return {ok, info.str()};
    }
    if (suite == "funceq") {
        const int N = suite_order(o, 10);
        const auto chk = verify_closedform_F(N);
        const bool ok = chk.funceq_matches && chk.residual_zero && chk.specialization_ok && chk.cyclic_invariant;
        info << "N=" << N << ", transposition invariant: " << (chk.transposition_invariant ? "yes" : "no");
        return {ok, info.str()};
    }
    if (suite == "pipeline") {
        const int N = suite_order(o, 60);
        const auto p = whirl_pipeline(N);
        info << "V = W Z = t C^2 (1 + t^2 C^4) at N=" << N;
        return {p.identity_ok && p.radical_ok, info.str()};
    }
    if (suite == "recurrence") {
        const int N = suite_order(o, 203);
        const auto p = whirl_pipeline(N);
        const auto offsets = calibrate_recurrence_offset(p.V, N - 3);
        info << "offsets:";
        for (int s : offsets) info << " " << s;
        return {offsets == std::vector<int>{1}, info.str()};
    }
    throw UsageError("unknown suite '" + suite + "'");
}

int cmd_verify(const VerifyOptions& o, const std::string& format) {
    std::vector<std::string> suites;
    for (const auto& s : o.suites) {
        if (s == "all") {
            for (const char* x : {"theorem1", "bijection", "translation", "whirl-tree", "funceq", "pipeline", "recurrence"}) {
                suites.emplace_back(x);
            }
        } else {
            suites.push_back(s);
        }
    }
    Table t{{"suite", "result", "detail"}, {}};
    bool all = true;
    for (const auto& s : suites) {
        const auto [ok, detail] = run_suite(s, o);
        all = all && ok;
        t.rows.push_back({s, ok ? "pass" : "fail", detail});
    }
    t.print(format, std::cout);
    return all ? exit_pass : exit_mismatch;
}

int cmd_verify_bijection(int n, int ceiling, const std::string& format) {
    Table t{{"n", "classes", "separable", "bijective", "round_trip"}, {}};
    bool all = true;
    for (int k = 1; k <= n; ++k) {
        std::set<Permutation> images;
        std::size_t classes = 0;
        for (const auto& c : gen_all_rectangulations(k, ceiling)) {
            if (!avoids(c.drawing, guillotine_diagonal_set)) continue;
            ++classes;
            images.insert(delta(c.drawing));
        }
        const auto sep = generate_separable(k);
        const bool bij = images.size() == classes && images == std::set<Permutation>(sep.begin(), sep.end());
        bool round = true;
        for (const auto& p : sep) round = round && delta(delta_inv(p)) == p;
        all = all && bij && round;
        t.rows.push_back({std::to_string(k), std::to_string(classes), std::to_string(sep.size()),
                          bij ? "yes" : "no", round ? "yes" : "no"});
    }
    t.print(format, std::cout);
    return all ? exit_pass : exit_mismatch;
}

int cmd_whirl_tree(int depth, bool signatures, const std::string& format) {
    const auto levels = whirl_tree(depth);
    Table t;
    if (signatures) {
        t.columns = {"depth", "signature", "multiplicity"};
        for (int k = 0; k <= depth; ++k) {
            for (const auto& [s, m] : levels.signatures[static_cast<std::size_t>(k)]) {
                t.rows.push_back({std::to_string(k), to_string(s), std::to_string(m)});
            }
        }
    } else {
        t.columns = {"depth", "size", "nodes"};
        for (int k = 0; k <= depth; ++k) {
            t.rows.push_back({std::to_string(k), std::to_string(5 + k), str(levels.sizes[static_cast<std::size_t>(k)])});
        }
    }
    t.print(format, std::cout);
    return exit_pass;
}

int cmd_series(std::optional<int> case_id, const std::string& gf, int order, const std::string& format) {
    QSeries s;
    if (case_id) {
        s = solve_system(find_case_spec(*case_id), order).F();
    } else if (gf == "catalan") {
        s = catalan(order);
    } else if (gf == "F4") {
        s = solve_funceq(std::max(order, 5)).F.specialize_ones();
    } else {
        const auto p = whirl_pipeline(std::max(order, 7));
        s = gf == "V" ? p.V : gf == "P" ? p.P : gf == "W" ? p.W : p.Z;
    }
    Table t{{"k", "coefficient"}, {}};
    for (int k = 0; k <= std::min(order, s.order()); ++k) t.rows.push_back({std::to_string(k), str(s[k])});
    t.print(format, std::cout);
    return exit_pass;
}

// Local values for a cited sequence, indexed from 1 unless noted.
std::pair<std::vector<mpz_class>, long> local_values(const std::string& id, int n) {
    std::vector<mpz_class> v;
    for (const auto& row : table_rows()) {
        if (row.oeis != id) continue;
        for (int k = 1; k <= n; ++k) v.emplace_back(static_cast<unsigned long>(count_class(k, row.avoided)));
        return {v, 1};
    }
    if (id == vortex_row().oeis) {
        const auto V = whirl_pipeline(std::max(n, 7)).V;
        for (int k = 1; k <= n; ++k) v.push_back(V[k].get_num());
        return {v, 1};
    }
    if (id == "A002057") {
        const auto C4 = catalan(n).pow(4);
        for (int k = 0; k <= n; ++k) v.push_back(C4[k].get_num());
        return {v, 0};
    }
    if (id == "A342141") {
        for (int k = 1; k <= std::min(n, default_oracle_ceiling); ++k) {
            v.emplace_back(static_cast<unsigned long>(gen_all_rectangulations(k).size()));
        }
        return {v, 1};
    }
    throw UsageError("'" + id + "' is not a cited sequence");
}

int cmd_oeis(const std::vector<std::string>& ids_in, int n, NetworkPolicy policy,
             const std::optional<std::string>& cache, const std::string& format) {
    std::vector<std::string> ids = ids_in;
    if (ids.empty()) ids = cited_sequences();
    for (const auto& id : ids) {
        if (!is_cited_sequence(id)) throw UsageError("'" + id + "' is not a cited sequence");
    }
    std::optional<std::filesystem::path> dir;
    if (cache) dir = *cache;
    auto transport = make_transport(policy, dir);
    Table t{{"id", "status", "shifts", "compared", "detail"}, {}};
    bool all = true;
    bool unavailable = false;
    for (const auto& id : ids) {
        const auto [local, first] = local_values(id, n);
        const auto cmp = compare_with_oeis(*transport, id, local, first);
        std::string shifts;
        for (int s : cmp.shifts) shifts += (shifts.empty() ? "" : " ") + std::to_string(s);
        const std::string status = !cmp.available ? "unavailable" : cmp.matched() ? "match" : "mismatch";
        all = all && cmp.matched();
        unavailable = unavailable || !cmp.available;
        t.rows.push_back({id, status, shifts, std::to_string(cmp.compared), cmp.error});
    }
    t.print(format, std::cout);
    if (all) return exit_pass;
    return unavailable && policy == NetworkPolicy::fetch ? exit_resource : exit_mismatch;
}

int cmd_generate(const std::string& row_id, int n, const std::string& method, bool ascii, int ceiling) {
    const TableRow& row = row_or_usage(row_id);
    ClassMethod m = ClassMethod::automatic;
    if (method == "bijective") m = ClassMethod::bijective;
    if (method == "oracle") m = ClassMethod::oracle;
    if (m == ClassMethod::bijective && !row.guillotine_diagonal()) {
        throw UsageError("bijective generation needs a guillotine diagonal row");
    }
    for (const Drawing& d : gen_class(n, row.avoided, m, ceiling)) {
        if (ascii) {
            std::cout << render_ascii(d) << "\n";
        } else {
            std::cout << json(d).dump() << "\n";
        }
    }
    return exit_pass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Enumeration and verification of pattern-avoiding rectangulations"};
    app.set_config("--config", "", "key=value configuration file");
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "csv", "json"}));
    int ceiling = default_oracle_ceiling;
    app.add_option("--oracle-ceiling", ceiling, "largest n for brute-force enumeration");

    CountOptions count;
    auto* c = app.add_subcommand("count", "class counts per size");
    c->add_option("--row", count.row, "avoided pattern digits, e.g. 1234 or 1345678");
    c->add_option("-n,--n", count.n, "largest size")->check(CLI::Range(1, 30));
    c->add_option("--method", count.methods, "bijective, oracle, gf, auto or all")
        ->check(CLI::IsMember({"bijective", "oracle", "gf", "auto", "all"}));

    VerifyOptions verify;
    auto* v = app.add_subcommand("verify", "run verification suites");
    v->add_option("--suite", verify.suites, "theorem1, bijection, translation, whirl-tree, funceq, pipeline, recurrence, all");
    v->add_option("--order", verify.order, "series order (default per suite)")->check(CLI::Range(7, 400));
    v->add_option("-n,--n", verify.n, "largest permutation size")->check(CLI::Range(1, 12));
    v->add_option("--depth", verify.depth, "generating-tree depth")->check(CLI::Range(0, 14));

    int vb_n = 7;
    auto* vb = app.add_subcommand("verify-bijection", "delta against the oracle classes");
    vb->add_option("-n,--n", vb_n, "largest size")->check(CLI::Range(1, 12));

    int depth = 5;
    bool sigs = false;
    auto* wt = app.add_subcommand("whirl-tree", "generating-tree level sizes");
    wt->add_option("--depth", depth, "depth")->check(CLI::Range(0, 14));
    wt->add_flag("--signatures", sigs, "list signature multiplicities");

    std::optional<int> case_id;
    std::string gf = "V";
    int order = 20;
    auto* se = app.add_subcommand("series", "coefficients of a generating function");
    auto* case_opt = se->add_option("--case", case_id, "guillotine case 1..10")->check(CLI::Range(1, 10));
    se->add_option("--gf", gf, "catalan, V, P, W, Z or F4")
        ->check(CLI::IsMember({"catalan", "V", "P", "W", "Z", "F4"}))
        ->excludes(case_opt);
    se->add_option("--order", order, "order N")->check(CLI::Range(1, 400));

    std::vector<std::string> ids;
    int oeis_n = 10;
    bool fetch = false;
    std::optional<std::string> cache;
    auto* oe = app.add_subcommand("oeis", "compare local prefixes with OEIS b-files");
    oe->add_option("--id", ids, "A-number (default: every cited sequence)");
    oe->add_option("-n,--n", oeis_n, "prefix length")->check(CLI::Range(1, 12));
    oe->add_flag("--fetch", fetch, "download from oeis.org into the cache directory");
    oe->add_option("--cache", cache, "fixture directory")->envname("RECTLAB_OEIS_CACHE");

    std::string gen_row = "1234";
    int gen_n = 4;
    std::string gen_method = "auto";
    bool ascii = false;
    auto* ge = app.add_subcommand("generate", "JSON lines of one drawing per class");
    ge->add_option("--row", gen_row, "avoided pattern digits");
    ge->add_option("-n,--n", gen_n, "size")->check(CLI::Range(1, 12));
    ge->add_option("--method", gen_method, "auto, bijective or oracle")
        ->check(CLI::IsMember({"auto", "bijective", "oracle"}));
    ge->add_flag("--ascii", ascii, "render drawings as text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_pass : exit_usage;
    }

    count.ceiling = ceiling;
    try {
        if (*c) return cmd_count(count, format);
        if (*v) return cmd_verify(verify, format);
        if (*vb) return cmd_verify_bijection(vb_n, ceiling, format);
        if (*wt) return cmd_whirl_tree(depth, sigs, format);
        if (*se) return cmd_series(case_id, gf, order, format);
        if (*oe) return cmd_oeis(ids, oeis_n, fetch ? NetworkPolicy::fetch : NetworkPolicy::offline, cache, format);
        if (*ge) return cmd_generate(gen_row, gen_n, gen_method, ascii, ceiling);
    } catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return exit_resource;
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
