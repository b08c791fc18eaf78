#include "cli.hpp"

#include "fockcb/abacus.hpp"
#include "fockcb/avalue.hpp"
#include "fockcb/canonical.hpp"
#include "fockcb/combinatorics.hpp"
#include "fockcb/crystal.hpp"
#include "fockcb/errors.hpp"
#include "fockcb/wedge.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include <algorithm>
#include <optional>
#include <sstream>

namespace fockcb::cli {

namespace {

struct RunConfig {
    int e = 0;
    int l = 0;
    std::string charge_text;
    Charge charge;
    int rank = -1;
    std::string format;
    bool json = false;
    bool keep_q = false;
    int threads = 0;
    bool no_cache = false;
    std::uint64_t fuel = EngineOptions{}.fuel;
    long long max_degree = 64;
    std::string multipartition;
    std::string monomial;
    std::string indices;
    std::optional<int> s;
    std::optional<int> r;
    std::optional<int> alpha;
};

struct Output {
    std::string text;
    std::optional<nlohmann::json> json;  // native JSON form, when the command has one
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw InvalidInput(msg);
}

void check_e(const RunConfig& c) { require(c.e >= 2, "--e must be at least 2"); }

void check_charge(RunConfig& c, bool need_l) {
    require(!c.charge_text.empty(), "--charge is required");
    c.charge = parse_charge(c.charge_text);
    if (need_l) {
        require(c.l >= 1, "--l must be at least 1");
        require(static_cast<int>(c.charge.size()) == c.l, "--charge must have exactly l entries");
    } else if (c.l == 0) {
        c.l = static_cast<int>(c.charge.size());
    } else {
        require(static_cast<int>(c.charge.size()) == c.l, "--charge must have exactly l entries");
    }
}

void check_rank(const RunConfig& c) { require(c.rank >= 0, "--rank must be a nonnegative integer"); }

void check_format(const RunConfig& c, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (c.format == f) return;
    std::string list;
    for (const char* f : allowed) list += std::string(list.empty() ? "" : ", ") + f;
    throw InvalidInput("--format must be one of: " + list);
}

void check_degree(const RunConfig& c, long long d) {
    if (d > c.max_degree)
        throw InvalidInput("size guard: degree " + std::to_string(d) + " exceeds --max-degree " +
                           std::to_string(c.max_degree) + "; raise the cap to compute anyway");
}

EngineOptions engine_options(const RunConfig& c) {
    EngineOptions o;
    o.memoize = !c.no_cache;
    o.fuel = c.fuel;
    return o;
}

MultiPartition parse_label(const RunConfig& c) {
    require(!c.multipartition.empty(), "--multipartition is required");
    MultiPartition lam = parse_multipartition(c.multipartition);
    require(static_cast<int>(lam.size()) == c.l, "multipartition must have l components");
    return lam;
}

std::string wedge_text(const WedgeVector& v) {
    std::string out;
    for (auto it = v.rbegin(); it != v.rend(); ++it) out += "(" + to_text(it->second) + ") " + format_monomial(it->first) + "\n";
    return out.empty() ? "0\n" : out;
}

Output cmd_crystal(RunConfig& c) {
    check_e(c);
    check_charge(c, true);
    check_rank(c);
    if (c.format.empty()) c.format = "dot";
    check_format(c, {"dot", "json"});
    CrystalGraph g = crystal_graph(c.e, c.l, c.charge, c.rank);
    if (c.format == "json") {
        auto j = to_json(g);
        return {j.dump(2) + "\n", j};
    }
    return {to_dot(g), std::nullopt};
}

Output cmd_uglov(RunConfig& c) {
    check_e(c);
    check_charge(c, true);
    check_rank(c);
    if (c.format.empty()) c.format = "text";
    check_format(c, {"text", "json"});
    auto set = uglov_set(c.e, c.l, c.charge, c.rank);
    std::vector<std::string> labels;
    for (const auto& lam : set) labels.push_back(format_multipartition(lam));
    std::sort(labels.begin(), labels.end());
    nlohmann::json j = labels;
    std::string text;
    for (const auto& s : labels) text += s + "\n";
    if (c.format == "json") return {j.dump() + "\n", j};
    return {text, j};
}

Output cmd_flotw(RunConfig& c) {
    check_e(c);
    check_charge(c, false);
    if (!c.multipartition.empty()) {
        bool v = flotw_predicate(parse_label(c), c.e, c.charge);
        return {v ? "true\n" : "false\n", nlohmann::json(v)};
    }
    check_rank(c);
    std::vector<std::string> labels;
    for (const auto& lam : multipartitions(c.l, c.rank))
        if (flotw_predicate(lam, c.e, c.charge)) labels.push_back(format_multipartition(lam));
    std::sort(labels.begin(), labels.end());
    std::string text;
    for (const auto& s : labels) text += s + "\n";
    return {text, nlohmann::json(labels)};
}

Output cmd_avalue(RunConfig& c) {
    check_e(c);
    check_charge(c, true);
    check_rank(c);
    if (c.format.empty()) c.format = "csv";
    check_format(c, {"csv", "json"});
    AValueTable t = avalue_table(c.e, c.l, c.charge, c.rank);
    nlohmann::json j;
    j["calibration"] = format_multipartition(t.calibration);
    j["height"] = t.height;
    j["alpha"] = t.m.alpha;
    std::vector<long long> m;
    for (const auto& x : t.m.m) m.push_back(x.numerator());
    j["m"] = m;
    auto rows = nlohmann::json::array();
    std::string csv = "multipartition,a,calibration\n";
    for (const auto& r : t.rows) {
        rows.push_back({{"multipartition", format_multipartition(r.lambda)}, {"a", r.value}});
        csv += format_multipartition(r.lambda) + "," + std::to_string(r.value) + "," +
               format_multipartition(t.calibration) + "\n";
    }
    j["rows"] = rows;
    if (c.format == "json") return {j.dump(2) + "\n", j};
    return {csv, j};
}

Output cmd_straighten(RunConfig& c) {
    check_e(c);
    require(c.l >= 1, "--l must be at least 1");
    require(!c.indices.empty(), "--indices is required");
    std::vector<int> idx = parse_charge(c.indices);
    WedgeEngine engine(c.e, c.l, engine_options(c));
    if (c.s) {
        WedgeVector v = engine.straighten(idx, *c.s);
        return {wedge_text(v), to_json(v)};
    }
    FiniteVector v = engine.straighten(idx);
    std::string text;
    auto arr = nlohmann::json::array();
    for (const auto& [w, coef] : v) {
        text += "(" + to_text(coef) + ") " + format_charge(w) + "\n";
        arr.push_back({{"indices", w}, {"coefficient", to_json(coef)}});
    }
    return {text.empty() ? "0\n" : text, arr};
}

WedgeMonomial monomial_arg(RunConfig& c) {
    if (!c.monomial.empty()) return parse_monomial(c.monomial);
    check_charge(c, true);
    return from_pair(parse_label(c), c.charge, c.e, c.l);
}

Output cmd_bar(RunConfig& c) {
    check_e(c);
    require(c.l >= 1, "--l must be at least 1");
    WedgeMonomial u = monomial_arg(c);
    check_degree(c, degree(u));
    WedgeEngine engine(c.e, c.l, engine_options(c));
    WedgeVector v = c.r ? engine.bar(u, *c.r) : engine.bar(u);
    return {wedge_text(v), to_json(v)};
}

Output cmd_canonical(RunConfig& c) {
    check_e(c);
    require(c.l >= 1, "--l must be at least 1");
    check_charge(c, true);
    MultiPartition mu = parse_label(c);
    check_degree(c, degree(from_pair(mu, c.charge, c.e, c.l)));
    CanonicalBasis basis(c.e, c.l, engine_options(c));
    CanonicalElement g = canonical_element(basis, mu, c.charge);
    std::string text;
    for (const auto& [k, coef] : g.expansion)
        text += "(" + to_text(coef) + ") " + format_multipartition(k.lambda) + " @ " + format_charge(k.charge) + "\n";
    return {text, to_json(g.expansion)};
}

Output cmd_decomp(RunConfig& c) {
    check_e(c);
    check_charge(c, true);
    check_rank(c);
    if (c.format.empty()) c.format = "csv";
    check_format(c, {"csv", "latex", "json"});
    long long dmax = 0;
    for (const auto& lam : multipartitions(c.l, c.rank))
        dmax = std::max(dmax, degree(from_pair(lam, c.charge, c.e, c.l)));
    check_degree(c, dmax);
    DecompositionMatrix M = decomposition_matrix(c.e, c.l, c.charge, c.rank, engine_options(c));
    auto j = to_json(M, c.keep_q);
    if (c.format == "json") return {j.dump(2) + "\n", j};
    if (c.format == "latex") return {to_latex(M), j};
    return {to_csv(M), j};
}

Output cmd_semisimple(RunConfig& c) {
    check_e(c);
    check_charge(c, false);
    check_rank(c);
    bool v = is_split_semisimple(c.e, c.charge, c.rank);
    return {v ? "true\n" : "false\n", nlohmann::json(v)};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Canonical bases of higher-level Fock spaces and Ariki-Koike decomposition matrices", "fockcb"};
    app.require_subcommand(1);
    app.add_flag("--json", c.json, "Wrap the output in a JSON envelope");
    app.add_option("--threads", c.threads, "OpenMP threads (0 = runtime default)");

    auto with_e = [&](CLI::App* s) { s->add_option("--e", c.e, "Quantum characteristic e >= 2"); };
    auto with_l = [&](CLI::App* s) { s->add_option("--l", c.l, "Level l >= 1"); };
    auto with_charge = [&](CLI::App* s) { s->add_option("--charge", c.charge_text, "Charge, e.g. 0,1"); };
    auto with_rank = [&](CLI::App* s) { s->add_option("--rank", c.rank, "Rank n >= 0"); };
    auto with_format = [&](CLI::App* s, const char* help) { s->add_option("--format", c.format, help); };
    auto with_engine = [&](CLI::App* s) {
        s->add_flag("--no-cache", c.no_cache, "Disable memo caches (results are identical)");
        s->add_option("--fuel", c.fuel, "Rule applications allowed per straightening call");
        s->add_option("--max-degree", c.max_degree, "Refuse monomials above this degree");
    };
    auto with_label = [&](CLI::App* s) { s->add_option("--multipartition", c.multipartition, "e.g. 6,1|2,2|4,1"); };

    auto* crystal = app.add_subcommand("crystal", "Crystal graph up to a rank");
    with_e(crystal), with_l(crystal), with_charge(crystal), with_rank(crystal);
    with_format(crystal, "dot | json");
    auto* uglov = app.add_subcommand("uglov-set", "Uglov multipartitions of a rank");
    with_e(uglov), with_l(uglov), with_charge(uglov), with_rank(uglov);
    with_format(uglov, "text | json");
    auto* flotw = app.add_subcommand("flotw-check", "FLOTW predicate for one multipartition, or the FLOTW set of a rank");
    with_e(flotw), with_l(flotw), with_charge(flotw), with_rank(flotw), with_label(flotw);
    auto* avalue = app.add_subcommand("avalue", "Calibrated a-value table");
    with_e(avalue), with_l(avalue), with_charge(avalue), with_rank(avalue);
    with_format(avalue, "csv | json");
    auto* straighten = app.add_subcommand("straighten", "Straighten a wedge of indices");
    with_e(straighten), with_l(straighten), with_engine(straighten);
    straighten->add_option("--indices", c.indices, "Comma-separated indices, e.g. 0,3");
    straighten->add_option("--s", c.s, "Total charge: append the semi-infinite tail");
    auto* bar = app.add_subcommand("bar", "Bar involution of a monomial");
    with_e(bar), with_l(bar), with_charge(bar), with_label(bar), with_engine(bar);
    bar->add_option("--monomial", c.monomial, "s=<int>; k=<k1,...>");
    bar->add_option("--r", c.r, "Number of reversed factors");
    auto* canonical = app.add_subcommand("canonical", "Canonical basis element of a labeled standard vector");
    with_e(canonical), with_l(canonical), with_charge(canonical), with_label(canonical), with_engine(canonical);
    auto* decomp = app.add_subcommand("decomp", "Decomposition matrix at q = 1");
    with_e(decomp), with_l(decomp), with_charge(decomp), with_rank(decomp), with_engine(decomp);
    with_format(decomp, "csv | latex | json");
    decomp->add_flag("--keep-q", c.keep_q, "Keep q-polynomials in JSON output");
    auto* semisimple = app.add_subcommand("semisimple", "Split semisimplicity test");
    with_e(semisimple), with_l(semisimple), with_charge(semisimple), with_rank(semisimple);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    auto fail = [&](int code, const std::string& kind, const std::string& msg) {
        if (c.json) {
            nlohmann::json j{{"command", name}, {"ok", false}, {"exit_code", code}, {"error", kind}, {"message", msg}};
            out << j.dump() << "\n";
        }
        err << kind << ": " << msg << "\n";
        return code;
    };
    try {
        if (c.threads < 0) throw InvalidInput("--threads must be nonnegative");
        if (c.threads > 0) omp_set_num_threads(c.threads);
        Output o;
        if (sub == crystal) o = cmd_crystal(c);
        else if (sub == uglov) o = cmd_uglov(c);
        else if (sub == flotw) o = cmd_flotw(c);
        else if (sub == avalue) o = cmd_avalue(c);
        else if (sub == straighten) o = cmd_straighten(c);
        else if (sub == bar) o = cmd_bar(c);
        else if (sub == canonical) o = cmd_canonical(c);
        else if (sub == decomp) o = cmd_decomp(c);
        else o = cmd_semisimple(c);
        if (c.json) {
            nlohmann::json j{{"command", name}, {"ok", true}};
            j["result"] = o.json ? *o.json : nlohmann::json(o.text);
            out << j.dump() << "\n";
        } else {
            out << o.text;
        }
        return kOk;
    } catch (const InvalidInput& e) {
        return fail(kInvalidInput, "invalid input", e.what());
    } catch (const UnsupportedRegime& e) {
        return fail(kUnsupportedRegime, "unsupported regime", e.what());
    } catch (const InvariantViolation& e) {
        return fail(kInvariantViolation, "invariant violation", e.what());
    } catch (const std::exception& e) {
        return fail(kInvariantViolation, "internal error", e.what());
    }
}

}  // namespace fockcb::cli
