// Command-line front end: generate words from morphic, arithmetic, or
// geometric systems, analyze prefixes, export Rauzy graphs as DOT, and run
// the verification suites.
#include <CLI11.hpp>
#include <json.hpp>

#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "wordlib/analysis.hpp"
#include "wordlib/dot.hpp"
#include "wordlib/factor_index.hpp"
#include "wordlib/iet.hpp"
#include "wordlib/marking.hpp"
#include "wordlib/morphism.hpp"
#include "wordlib/quadratic.hpp"
#include "wordlib/rauzy.hpp"
#include "wordlib/rotation.hpp"
#include "wordlib/roulette.hpp"
#include "wordlib/suites.hpp"

using json = nlohmann::ordered_json;
using namespace wordlib;

namespace {

constexpr const char* kToolVersion = "wordtool 1.0.0";
constexpr int kSchemaVersion = 1;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

struct Context {
    std::string seed_config;
    std::string json_path;
    bool quiet = false;
    std::string invocation;
    std::map<std::string, QuadraticReal> names;

    void load_names() {
        if (seed_config.empty()) return;
        std::ifstream in(seed_config);
        if (!in) throw std::runtime_error("cannot read seed config " + seed_config);
        json cfg = json::parse(in);
        for (auto& [key, val] : cfg.items())
            names.emplace(key, QuadraticReal::parse(val.get<std::string>()));
    }

    QuadraticReal value(const std::string& text, const char* key) const {
        std::string t = trim(text);
        if (t.empty())
            throw CLI::ValidationError(std::string("--") + key, "missing exact-number value");
        auto it = names.find(t);
        if (it != names.end()) return it->second;
        try {
            return QuadraticReal::parse(t);
        } catch (const std::invalid_argument& e) {
            throw CLI::ValidationError(std::string("--") + key, e.what());
        }
    }

    void emit_json(const json& doc) const {
        if (!json_path.empty()) {
            std::ofstream out(json_path);
            if (!out) throw std::runtime_error("cannot write " + json_path);
            out << doc.dump(2) << "\n";
        } else if (!quiet) {
            std::cout << doc.dump(2) << "\n";
        }
    }
};

std::string timestamp() {
    char buf[32];
    std::time_t t = std::time(nullptr);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

// ---------------------------------------------------------------------------
// word sources

struct SourceOpts {
    std::string in_path;   // word file; wins over the generator
    std::string generator; // fibonacci | thue-morse | tribonacci | fraenkel |
                           // standard | rauzy-rules | closure | morphism |
                           // mechanical | rotation | iet | roulette
    std::size_t n = 10000;
    std::size_t k = 3, m = 1, component = 0;
    std::string d, alpha, beta, start, arcs, rules, letter = "a", directive, deltas;
    std::string red, blue, lengths, perm, flips;
};

void add_source_options(CLI::App* cmd, SourceOpts& o, bool with_in) {
    if (with_in) cmd->add_option("--in", o.in_path, "word file to read instead of generating");
    cmd->add_option("--gen", o.generator, "generator name");
    cmd->add_option("--n", o.n, "number of symbols to produce");
    cmd->add_option("--k", o.k, "order parameter (fraenkel)");
    cmd->add_option("--m", o.m, "component count (roulette)");
    cmd->add_option("--component", o.component, "start component (roulette)");
    cmd->add_option("--d", o.d, "directive sequence (standard) or radicand hint (rotation)");
    cmd->add_option("--alpha", o.alpha, "rotation/roulette angle, exact");
    cmd->add_option("--beta", o.beta, "mechanical intercept, exact");
    cmd->add_option("--start", o.start, "start point, exact");
    cmd->add_option("--arcs", o.arcs, "arc partition, e.g. \"a:[0,alpha);b:[alpha,1)\"");
    cmd->add_option("--rules", o.rules, "morphism rules, e.g. \"a -> ab; b -> a\"");
    cmd->add_option("--letter", o.letter, "seed letter for morphic fixed points");
    cmd->add_option("--directive", o.directive, "directive word (rauzy-rules)");
    cmd->add_option("--deltas", o.deltas, "delta word for palindromic closure");
    cmd->add_option("--red", o.red, "red polygon orders, comma-separated (roulette)");
    cmd->add_option("--blue", o.blue, "blue polygon orders, comma-separated (roulette)");
    cmd->add_option("--lengths", o.lengths, "interval lengths, comma-separated exact values (iet)");
    cmd->add_option("--perm", o.perm, "interval permutation, comma-separated (iet)");
    cmd->add_option("--flips", o.flips, "flip flags 0/1, comma-separated (iet)");
}

std::vector<std::size_t> parse_sizes(const std::string& text, const char* key) {
    std::vector<std::size_t> out;
    for (const auto& part : split(text, ','))
        try {
            out.push_back(std::stoul(trim(part)));
        } catch (const std::exception&) {
            throw CLI::ValidationError(std::string("--") + key, "bad entry \"" + part + "\"");
        }
    return out;
}

RotationSystem make_rotation(const Context& ctx, const SourceOpts& o) {
    if (o.alpha.empty()) throw CLI::ValidationError("--alpha", "required for rotation");
    QuadraticReal alpha = ctx.value(o.alpha, "alpha");
    if (!o.d.empty() && alpha.d() != std::stoul(o.d))
        throw CLI::ValidationError("--d", "radicand disagrees with --alpha");
    QuadraticReal start =
        o.start.empty() ? QuadraticReal::integer(0) : ctx.value(o.start, "start");
    std::map<std::string, QuadraticReal> local = ctx.names;
    local.emplace("alpha", alpha);
    local.emplace("start", start);
    Context scoped{ctx.seed_config, ctx.json_path, ctx.quiet, ctx.invocation, local};

    std::string arc_spec = o.arcs.empty() ? "a:[0,alpha);b:[alpha,1)" : o.arcs;
    std::vector<std::string> tokens;
    std::vector<std::pair<Arc, uint8_t>> arcs;
    for (const auto& piece : split(arc_spec, ';')) {
        std::string p = trim(piece);
        std::size_t colon = p.find(':');
        if (colon == std::string::npos || p.size() < colon + 5 || p[colon + 1] != '[' ||
            p.back() != ')')
            throw CLI::ValidationError("--arcs", "bad arc \"" + p + "\"");
        std::string sym = trim(p.substr(0, colon));
        std::string body = p.substr(colon + 2, p.size() - colon - 3);
        auto parts = split(body, ',');
        if (parts.size() != 2) throw CLI::ValidationError("--arcs", "bad arc \"" + p + "\"");
        if (std::find(tokens.begin(), tokens.end(), sym) == tokens.end()) tokens.push_back(sym);
        uint8_t s = static_cast<uint8_t>(std::find(tokens.begin(), tokens.end(), sym) - tokens.begin());
        arcs.push_back({{scoped.value(parts[0], "arcs"), scoped.value(parts[1], "arcs")}, s});
    }
    return RotationSystem(alpha, Alphabet(tokens), std::move(arcs), start);
}

IntervalExchange make_iet(const Context& ctx, const SourceOpts& o) {
    if (o.lengths.empty() || o.perm.empty())
        throw CLI::ValidationError("--lengths", "iet needs --lengths and --perm");
    std::vector<QuadraticReal> lengths;
    for (const auto& part : split(o.lengths, ',')) lengths.push_back(ctx.value(part, "lengths"));
    std::vector<std::size_t> perm = parse_sizes(o.perm, "perm");
    std::vector<bool> flips;
    if (!o.flips.empty())
        for (std::size_t f : parse_sizes(o.flips, "flips")) flips.push_back(f != 0);
    return IntervalExchange(std::move(lengths), std::move(perm), std::move(flips));
}

Word generate_word(const Context& ctx, const SourceOpts& o) {
    const std::string& g = o.generator;
    if (g.empty()) throw CLI::ValidationError("--gen", "no generator named");
    if (g == "fibonacci") return fixed_point_prefix(fibonacci_morphism(), 0, o.n);
    if (g == "thue-morse") return fixed_point_prefix(thue_morse_morphism(), 0, o.n);
    if (g == "tribonacci") return fixed_point_prefix(tribonacci_morphism(), 0, o.n);
    if (g == "fraenkel") return fraenkel_word(o.k, o.n);
    if (g == "standard") {
        if (o.d.empty()) throw CLI::ValidationError("--d", "standard word needs directives");
        return standard_word(DirectiveSequence::parse(o.d), o.n);
    }
    if (g == "rauzy-rules") {
        if (o.directive.empty()) throw CLI::ValidationError("--directive", "required");
        Word dir = Word::parse(o.directive);
        Word w = rauzy_rules_word(dir, static_cast<uint8_t>(dir.alphabet().index_of(o.letter)));
        if (w.size() < o.n)
            throw CLI::ValidationError("--directive", "too short for the requested length");
        return w.prefix(o.n);
    }
    if (g == "closure") {
        if (o.deltas.empty()) throw CLI::ValidationError("--deltas", "required");
        return closure_word(Word::parse(o.deltas), o.n);
    }
    if (g == "morphism") {
        if (o.rules.empty()) throw CLI::ValidationError("--rules", "required");
        std::string text = o.rules;
        std::replace(text.begin(), text.end(), ';', '\n');
        Morphism m = Morphism::parse(text);
        return fixed_point_prefix(m, static_cast<uint8_t>(m.alphabet().index_of(o.letter)), o.n);
    }
    if (g == "mechanical") {
        if (o.alpha.empty()) throw CLI::ValidationError("--alpha", "required for mechanical");
        QuadraticReal beta =
            o.beta.empty() ? QuadraticReal::integer(0) : ctx.value(o.beta, "beta");
        return mechanical_word(ctx.value(o.alpha, "alpha"), beta, o.n);
    }
    if (g == "rotation") return rotation_code(make_rotation(ctx, o), o.n).word;
    if (g == "iet") {
        QuadraticReal start =
            o.start.empty() ? QuadraticReal::integer(0) : ctx.value(o.start, "start");
        return iet_code(make_iet(ctx, o), start, o.n).word;
    }
    if (g == "roulette") {
        if (o.alpha.empty() || o.red.empty() || o.blue.empty())
            throw CLI::ValidationError("--gen", "roulette needs --alpha, --red, --blue");
        QuadraticReal start =
            o.start.empty() ? QuadraticReal::integer(0) : ctx.value(o.start, "start");
        RouletteSystem sys(o.m, ctx.value(o.alpha, "alpha"), parse_sizes(o.red, "red"),
                           parse_sizes(o.blue, "blue"), o.component, start);
        return roulette_code(sys, o.n).word;
    }
    throw CLI::ValidationError("--gen", "unknown generator \"" + g + "\"");
}

Word load_word(const Context& ctx, const SourceOpts& o, json& source_desc) {
    if (!o.in_path.empty()) {
        std::ifstream in(o.in_path);
        if (!in) throw std::runtime_error("cannot read " + o.in_path);
        std::stringstream ss;
        ss << in.rdbuf();
        source_desc = {{"kind", "file"}, {"path", o.in_path}};
        std::string text = trim(ss.str());
        if (text.empty()) throw std::runtime_error("empty word file " + o.in_path);
        return Word::parse(text);
    }
    source_desc = {{"kind", "generator"}, {"generator", o.generator}, {"n", o.n}};
    for (const auto& [key, val] :
         std::initializer_list<std::pair<const char*, const std::string&>>{
             {"d", o.d}, {"alpha", o.alpha}, {"beta", o.beta}, {"start", o.start},
             {"arcs", o.arcs}, {"rules", o.rules}, {"directive", o.directive},
             {"deltas", o.deltas}, {"red", o.red}, {"blue", o.blue},
             {"lengths", o.lengths}, {"perm", o.perm}, {"flips", o.flips}})
        if (!val.empty()) source_desc[key] = val;
    if (o.generator == "fraenkel") source_desc["k"] = o.k;
    if (o.generator == "roulette") {
        source_desc["m"] = o.m;
        source_desc["component"] = o.component;
    }
    return generate_word(ctx, o);
}

// ---------------------------------------------------------------------------
// analyze

json balance_json(const Word& w, std::size_t m, std::size_t cap, bool& pass) {
    BalanceResult res = is_m_balanced(w, m, std::nullopt, cap);
    json j = {{"m", m}, {"balanced", res.ok()}};
    if (!res.ok()) {
        pass = false;
        j["witness"] = {{"u", res.witness->u.str()},
                        {"v", res.witness->v.str()},
                        {"symbol", w.alphabet().token(res.witness->symbol)},
                        {"delta", res.witness->delta}};
    }
    return j;
}

int run_analyze(Context& ctx, const SourceOpts& src, std::size_t max_len,
                const std::string& checks_csv, std::size_t balance_m,
                std::size_t spectrum_n) {
    json source_desc;
    Word w = load_word(ctx, src, source_desc);
    if (w.size() < max_len + 2) max_len = w.size() > 2 ? w.size() - 2 : 1;
    FactorIndex idx(w, max_len + 2);

    std::set<std::string> checks;
    for (const auto& c : split(checks_csv, ',')) checks.insert(trim(c));

    bool pass = true;
    json rep;
    rep["schema"] = kSchemaVersion;
    rep["tool"] = kToolVersion;
    rep["invocation"] = ctx.invocation;
    rep["timestamp"] = timestamp();
    rep["source"] = source_desc;
    rep["prefix_length"] = w.size();
    rep["alphabet"] = w.alphabet().tokens();
    rep["max_len"] = max_len;
    json& out = rep["checks"];

    if (checks.count("complexity")) {
        json arr = json::array();
        for (std::size_t n = 1; n <= max_len; ++n) arr.push_back(idx.factor_count(n));
        out["complexity"] = {{"profile", arr}};
    }
    if (checks.count("balance")) out["balance"] = balance_json(w, balance_m, max_len, pass);
    if (checks.count("specials")) {
        json arr = json::array();
        for (std::size_t n = 1; n <= std::min<std::size_t>(max_len, 20); ++n)
            arr.push_back({{"n", n},
                           {"left", special_factors(idx, n, Side::Left).size()},
                           {"right", special_factors(idx, n, Side::Right).size()}});
        out["specials"] = arr;
    }
    if (checks.count("palindromes")) {
        json arr = json::array();
        for (std::size_t n = 1; n <= std::min<std::size_t>(max_len, 30); ++n)
            arr.push_back(palindrome_census(idx, n).size());
        out["palindromes"] = {{"census", arr}};
    }
    if (checks.count("returns")) {
        json table;
        for (std::size_t n = 1; n <= std::min<std::size_t>(max_len, 5); ++n)
            for (std::size_t id = 0; id < idx.level_size(n); ++id) {
                Word f = idx.factor_word(n, id);
                if (w.occurrences(f).size() < 2) continue;
                json rw = json::array();
                for (const auto& u : return_words(idx, f)) rw.push_back(u.str());
                table[f.str()] = rw;
            }
        out["returns"] = table;
    }
    if (checks.count("periodicity")) {
        auto p = periodicity_check(idx);
        json j = {{"eventually_periodic", p.eventually_periodic()}};
        if (p.plateau_at) j["plateau_at"] = *p.plateau_at;
        if (p.period) j["period"] = *p.period;
        out["periodicity"] = j;
    }
    if (checks.count("three-distance") || checks.count("spectrum")) {
        std::size_t n = std::min(spectrum_n, max_len);
        auto v = frequency_spectrum_check(idx, n);
        json means = json::array();
        for (const auto& m : v.cluster_means) means.push_back(m.get_str());
        json j = {{"n", n}, {"clusters", v.cluster_count}, {"means", means}};
        bool ok = v.cluster_count <= 3;
        if (v.sum_property) {
            j["sum_property"] = *v.sum_property;
            ok = ok && *v.sum_property;
        }
        j["pass"] = ok;
        if (!ok) pass = false;
        out["three-distance"] = j;
    }
    if (checks.count("criterion")) {
        auto v = iet_criterion(idx, max_len);
        json j = {{"status", v.status_str()},
                  {"k_window", {v.k_checked_min, v.k_checked_max}}};
        if (v.passes()) j["k_min"] = v.k_min;
        if (v.witness)
            j["witness"] = {{"k", v.witness->k},
                            {"factor", v.witness->factor.str()},
                            {"rule", v.witness->rule}};
        if (!v.passes()) pass = false;
        out["criterion"] = j;
    }

    rep["pass"] = pass;
    ctx.emit_json(rep);
    if (!ctx.quiet && !ctx.json_path.empty())
        std::cout << (pass ? "ok" : "violation") << "\n";
    return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// verify

SuiteResult run_suite(const std::string& name, std::size_t max_len, const std::string& word) {
    if (name == "equivalence") return suite_equivalence();
    if (name == "lemma34") return suite_lemma34(max_len ? max_len : 16);
    if (name == "extension") return suite_extension(max_len ? max_len : 14);
    if (name == "iet-criterion") return suite_iet_criterion(word.empty() ? "all" : word);
    if (name == "roulette") return suite_roulette();
    throw CLI::ValidationError("suite", "unknown suite \"" + name + "\"");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"word combinatorics toolkit"};
    app.require_subcommand(1);

    Context ctx;
    {
        std::ostringstream inv;
        for (int i = 0; i < argc; ++i) inv << (i ? " " : "") << argv[i];
        ctx.invocation = inv.str();
    }
    app.add_option("--seed-config", ctx.seed_config, "JSON file of named exact values");
    app.add_option("--json", ctx.json_path, "write the machine-readable summary here");
    app.add_flag("--quiet", ctx.quiet, "suppress stdout chatter");

    // generate
    auto* gen = app.add_subcommand("generate", "produce a word file");
    SourceOpts gen_src;
    std::string gen_out;
    gen->add_option("generator", gen_src.generator, "generator name")->required();
    add_source_options(gen, gen_src, false);
    gen->add_option("--out", gen_out, "output path (default stdout)");

    // analyze
    auto* ana = app.add_subcommand("analyze", "run checks on a word, JSON report");
    SourceOpts ana_src;
    std::size_t ana_maxlen = 30, ana_m = 1, ana_spectrum = 10;
    std::string ana_checks = "complexity,balance";
    add_source_options(ana, ana_src, true);
    ana->add_option("--maxlen", ana_maxlen, "longest factor length examined");
    ana->add_option("--checks", ana_checks,
                    "comma list: complexity,balance,specials,palindromes,returns,"
                    "periodicity,three-distance,criterion");
    ana->add_option("--balance-m", ana_m, "balance order m");
    ana->add_option("--spectrum-n", ana_spectrum, "factor length for the frequency spectrum");

    // graph
    auto* gra = app.add_subcommand("graph", "export a Rauzy graph as DOT");
    SourceOpts gra_src;
    std::size_t gra_k = 2;
    bool gra_marked = false;
    std::string gra_out;
    add_source_options(gra, gra_src, true);
    gra->add_option("--order", gra_k, "factor length k of the graph");
    gra->add_flag("--marked", gra_marked, "attach l/r labels and minus marks");
    gra->add_option("--out", gra_out, "output path (default stdout)");

    // verify
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    std::string ver_suite, ver_word;
    std::size_t ver_maxlen = 0;
    ver->add_option("suite", ver_suite, "equivalence|lemma34|extension|iet-criterion|roulette")
        ->required();
    ver->add_option("--maxlen", ver_maxlen, "exhaustive length bound (lemma34, extension)");
    ver->add_option("--word", ver_word, "word under test (iet-criterion)");

    try {
        app.parse(argc, argv);
        ctx.load_names();

        if (gen->parsed()) {
            Word w = generate_word(ctx, gen_src);
            std::string text = w.str() + "\n";
            if (gen_out.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(gen_out);
                if (!out) throw std::runtime_error("cannot write " + gen_out);
                out << text;
            }
            if (!ctx.json_path.empty())
                ctx.emit_json({{"schema", kSchemaVersion},
                               {"tool", kToolVersion},
                               {"invocation", ctx.invocation},
                               {"generator", gen_src.generator},
                               {"symbols", w.size()},
                               {"out", gen_out}});
            return 0;
        }

        if (ana->parsed())
            return run_analyze(ctx, ana_src, ana_maxlen, ana_checks, ana_m, ana_spectrum);

        if (gra->parsed()) {
            json desc;
            Word w = load_word(ctx, gra_src, desc);
            if (w.size() < gra_k + 3)
                throw CLI::ValidationError("--order", "word too short for this k");
            FactorIndex idx(w, gra_k + 2);
            RauzyGraph g = build_rauzy(idx, gra_k);
            int code = 0;
            std::string dot;
            if (gra_marked) {
                MarkingResult m =
                    find_marking(idx, std::min<std::size_t>(2, gra_k), gra_k, false);
                if (m.ok()) {
                    dot = to_dot(m.graphs.back());
                } else {
                    dot = to_dot(g); // still emit the plain graph
                    code = 1;
                    if (!ctx.quiet)
                        std::cerr << "marking violation at k = " << m.violation->k << ": "
                                  << m.violation->rule << " (" << m.violation->factor.str()
                                  << ")\n";
                }
            } else {
                dot = to_dot(g);
            }
            if (gra_out.empty()) {
                std::cout << dot;
            } else {
                std::ofstream out(gra_out);
                if (!out) throw std::runtime_error("cannot write " + gra_out);
                out << dot;
            }
            return code;
        }

        if (ver->parsed()) {
            SuiteResult r = run_suite(ver_suite, ver_maxlen, ver_word);
            json checks = json::array();
            for (const auto& c : r.checks) {
                checks.push_back({{"name", c.name}, {"pass", c.passed}, {"detail", c.detail}});
                if (!ctx.quiet)
                    std::cout << (c.passed ? "ok  " : "FAIL") << "  " << c.name
                              << (c.detail.empty() ? "" : " -- " + c.detail) << "\n";
            }
            json doc = {{"schema", kSchemaVersion},
                        {"tool", kToolVersion},
                        {"invocation", ctx.invocation},
                        {"suite", r.suite},
                        {"checks", checks},
                        {"pass", r.passed()}};
            if (!ctx.json_path.empty()) ctx.emit_json(doc);
            if (!ctx.quiet)
                std::cout << "suite " << r.suite << ": " << (r.passed() ? "pass" : "fail") << "\n";
            return r.passed() ? 0 : 1;
        }
    } catch (const CLI::Success& e) {
        return app.exit(e); // --help and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
