// Command-line front end. Talks to the library only through lvb.h.

#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lvb/lvb.h"

namespace {

using json = nlohmann::json;
using Seq = std::vector<int64_t>;
using Rows = std::vector<Seq>;

constexpr int exit_ok = 0;
constexpr int exit_verify = 1;
constexpr int exit_input = 2;

struct Failure {
    int code;
    std::string msg;
};

void check(lvb_status s)
{
    if (s == LVB_OK)
        return;
    int code = s == LVB_ERR_INTERNAL ? exit_verify : exit_input;
    throw Failure{code, std::string(lvb_status_name(s)) + ": " + lvb_last_error()};
}

struct SeqFree { void operator()(lvb_seq * s) const { lvb_seq_free(s); } };
struct DiagramFree { void operator()(lvb_diagram * d) const { lvb_diagram_free(d); } };
struct ListFree { void operator()(lvb_diagram_list * l) const { lvb_diagram_list_free(l); } };
struct ReportFree { void operator()(lvb_report * r) const { lvb_report_free(r); } };

Seq take(lvb_seq * s)
{
    std::unique_ptr<lvb_seq, SeqFree> h(s);
    auto const * p = lvb_seq_data(s);
    return Seq(p, p + lvb_seq_size(s));
}

Rows rows_of(lvb_diagram const * d)
{
    Rows r;
    for (size_t i = 0; i < lvb_diagram_rows(d); ++i) {
        auto const * p = lvb_diagram_row(d, i);
        r.emplace_back(p, p + lvb_diagram_row_length(d, i));
    }
    return r;
}

Rows take(lvb_diagram * d)
{
    std::unique_ptr<lvb_diagram, DiagramFree> h(d);
    return rows_of(d);
}

Seq parse_seq(std::string const & text, char const * name)
{
    static std::regex const grammar("-?[0-9]+(,-?[0-9]+)*");
    if (!std::regex_match(text, grammar))
        throw Failure{exit_input, std::string("--") + name
                                      + " expects comma-separated integers, got '" + text + "'"};
    Seq v;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            v.push_back(std::stoll(tok));
        } catch (std::exception const &) {
            throw Failure{exit_input, std::string("--") + name + ": value out of range: " + tok};
        }
    }
    return v;
}

std::string join(Seq const & v, char const * sep = ",")
{
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

std::string render(Rows const & rows)
{
    std::string s;
    for (auto const & r : rows)
        s += join(r, " ") + "\n";
    return s;
}

void require_same_length(Seq const & alpha, Seq const & nu)
{
    if (alpha.size() != nu.size())
        throw Failure{exit_input, "--alpha and --nu must have the same length"};
}

struct Options {
    std::string alpha, nu, lambda, format = "text";
    int eps = -1;
    bool check = false;
    int64_t n_max = 3, entry_bound = 2;
    std::optional<int64_t> window;
};

void emit(Options const & o, json const & doc, std::string const & text)
{
    if (o.format == "json")
        std::cout << doc.dump() << '\n';
    else
        std::cout << text;
}

int run_forward(Options const & o)
{
    Seq alpha = parse_seq(o.alpha, "alpha"), nu = parse_seq(o.nu, "nu");
    require_same_length(alpha, nu);
    lvb_seq * out = nullptr;
    check(lvb_gamma_forward(alpha.data(), nu.data(), alpha.size(), &out));
    Seq gamma = take(out);
    json doc = {{"command", "forward"}, {"alpha", alpha}, {"nu", nu}, {"gamma", gamma}};
    int rc = exit_ok;
    if (o.check) {
        check(lvb_gamma_via_diagrams(alpha.data(), nu.data(), alpha.size(), &out));
        Seq other = take(out);
        bool same = other == gamma;
        doc["check"] = {{"diagrams", other}, {"agree", same}};
        if (!same) {
            std::cerr << "check failed: diagram route gives " << join(other) << '\n';
            rc = exit_verify;
        }
    }
    emit(o, doc, join(gamma) + "\n");
    return rc;
}

int run_inverse(Options const & o)
{
    Seq lambda = parse_seq(o.lambda, "lambda");
    lvb_seq * a = nullptr;
    lvb_seq * v = nullptr;
    check(lvb_gamma_inverse(lambda.data(), lambda.size(), &a, &v));
    Seq alpha = take(a), nu = take(v);
    json doc = {{"command", "inverse"}, {"lambda", lambda}, {"alpha", alpha}, {"nu", nu}};
    int rc = exit_ok;
    if (o.check) {
        lvb_seq * out = nullptr;
        check(lvb_gamma_forward(alpha.data(), nu.data(), alpha.size(), &out));
        Seq back = take(out);
        bool same = back == lambda;
        doc["check"] = {{"forward", back}, {"agree", same}};
        if (!same) {
            std::cerr << "check failed: forward map gives " << join(back) << '\n';
            rc = exit_verify;
        }
    }
    emit(o, doc, "alpha=" + join(alpha) + " nu=" + join(nu) + "\n");
    return rc;
}

int run_diagram(Options const & o)
{
    if (o.eps != -1 && o.eps != 1)
        throw Failure{exit_input, "--eps must be -1 or 1"};
    Rows x, y;
    json doc = {{"command", "diagram"}, {"eps", o.eps}};
    if (!o.lambda.empty()) {
        if (!o.alpha.empty() || !o.nu.empty())
            throw Failure{exit_input, "give either --lambda or --alpha/--nu"};
        Seq lambda = parse_seq(o.lambda, "lambda");
        lvb_diagram * dy = nullptr;
        check(lvb_alg_B(lambda.data(), lambda.size(), o.eps, &dy));
        std::unique_ptr<lvb_diagram, DiagramFree> hy(dy);
        lvb_diagram * dx = nullptr;
        check(lvb_e_inverse(dy, &dx));
        x = take(dx);
        y = rows_of(dy);
        doc["lambda"] = lambda;
    } else {
        if (o.alpha.empty() || o.nu.empty())
            throw Failure{exit_input, "diagram needs --alpha and --nu, or --lambda"};
        Seq alpha = parse_seq(o.alpha, "alpha"), nu = parse_seq(o.nu, "nu");
        require_same_length(alpha, nu);
        lvb_diagram * dx = nullptr;
        lvb_diagram * dy = nullptr;
        check(lvb_alg_W(alpha.data(), nu.data(), alpha.size(), o.eps, &dx, &dy));
        x = take(dx);
        y = take(dy);
        doc["alpha"] = alpha;
        doc["nu"] = nu;
    }
    doc["x"] = x;
    doc["y"] = y;
    emit(o, doc, "X\n" + render(x) + "Y\n" + render(y));
    return exit_ok;
}

json report_json(lvb_report const * r)
{
    return json::parse(lvb_report_json(r));
}

int run_verify(Options const & o)
{
    std::vector<std::unique_ptr<lvb_report, ReportFree>> reports;
    lvb_report * r = nullptr;
    check(lvb_roundtrip_sweep(o.n_max, o.entry_bound, &r));
    reports.emplace_back(r);
    if (o.window) {
        check(lvb_oracle_sweep(o.n_max, o.entry_bound, *o.window, &r));
        reports.emplace_back(r);
    }
    bool ok = true;
    json doc = {{"command", "verify"}, {"reports", json::array()}};
    std::string text;
    for (auto const & rep : reports) {
        ok = ok && lvb_report_ok(rep.get());
        doc["reports"].push_back(report_json(rep.get()));
        text += lvb_report_text(rep.get());
    }
    doc["ok"] = ok;
    emit(o, doc, text);
    return ok ? exit_ok : exit_verify;
}

int run_enumerate(Options const & o)
{
    if (!o.alpha.empty() || !o.nu.empty()) {
        Seq alpha = parse_seq(o.alpha, "alpha"), nu = parse_seq(o.nu, "nu");
        require_same_length(alpha, nu);
        lvb_diagram_list * l = nullptr;
        check(lvb_enumerate_fillings(alpha.data(), nu.data(), alpha.size(), o.window.value_or(-1), &l));
        std::unique_ptr<lvb_diagram_list, ListFree> h(l);
        json list = json::array();
        std::string text;
        for (size_t k = 0; k < lvb_diagram_list_size(l); ++k) {
            Rows rows = rows_of(lvb_diagram_list_get(l, k));
            list.push_back(rows);
            if (k)
                text += "\n";
            text += render(rows);
        }
        json doc = {{"command", "enumerate"}, {"alpha", alpha}, {"nu", nu}, {"fillings", list}};
        emit(o, doc, text);
        return exit_ok;
    }
    lvb_diagram * da = nullptr;
    lvb_diagram * dn = nullptr;
    check(lvb_enumerate_omega(o.n_max, o.entry_bound, &da, &dn));
    Rows alphas = take(da), nus = take(dn);
    json pairs = json::array();
    std::string text;
    for (size_t k = 0; k < alphas.size(); ++k) {
        pairs.push_back({{"alpha", alphas[k]}, {"nu", nus[k]}});
        text += "alpha=" + join(alphas[k]) + " nu=" + join(nus[k]) + "\n";
    }
    json doc = {{"command", "enumerate"}, {"n_max", o.n_max}, {"entry_bound", o.entry_bound},
                {"pairs", pairs}};
    emit(o, doc, text);
    return exit_ok;
}

}  // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Lusztig-Vogan bijection for GL_n: forward and inverse maps, diagrams, checks"};
    app.require_subcommand(1, 1);
    Options o;
    int64_t window = 0;

    auto add_format = [&](CLI::App * sub) {
        sub->add_option("--format", o.format, "Output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto * fwd = app.add_subcommand("forward", "Compute gamma(alpha, nu)");
    fwd->add_option("--alpha", o.alpha, "Partition, e.g. 4,3,2,1,1")->required();
    fwd->add_option("--nu", o.nu, "Integer sequence dominant for alpha")->required();
    fwd->add_flag("--check", o.check, "Cross-check against the diagram route");
    add_format(fwd);

    auto * inv = app.add_subcommand("inverse", "Compute the preimage of a dominant weight");
    inv->add_option("--lambda", o.lambda, "Weakly decreasing integer sequence")->required();
    inv->add_flag("--check", o.check, "Map the result forward again and compare");
    add_format(inv);

    auto * dia = app.add_subcommand("diagram", "Print the diagram pair (X, Y)");
    dia->add_option("--alpha", o.alpha, "Row lengths");
    dia->add_option("--nu", o.nu, "Row data");
    dia->add_option("--lambda", o.lambda, "Build Y from a dominant weight instead");
    dia->add_option("--eps", o.eps, "Recursion sign, -1 or 1")->check(CLI::IsMember({-1, 1}));
    add_format(dia);

    auto * ver = app.add_subcommand("verify", "Run the exhaustive identity sweep");
    ver->add_option("--n-max", o.n_max, "Largest n")->check(CLI::Range(int64_t{1}, int64_t{12}));
    ver->add_option("--entry-bound", o.entry_bound, "Bound on |nu_i|")
        ->check(CLI::NonNegativeNumber);
    auto * ver_window = ver->add_option("--window", window,
                                        "Also run the filling oracle with this window (-1: default)");
    add_format(ver);

    auto * en = app.add_subcommand("enumerate", "List Omega pairs, or fillings of one pair");
    en->add_option("--n-max", o.n_max, "Largest n")->check(CLI::Range(int64_t{1}, int64_t{12}));
    en->add_option("--entry-bound", o.entry_bound, "Bound on |nu_i|")->check(CLI::NonNegativeNumber);
    en->add_option("--alpha", o.alpha, "List fillings of this shape");
    en->add_option("--nu", o.nu, "Row sums of the fillings");
    auto * en_window = en->add_option("--window", window, "Entry window (-1: default)");
    add_format(en);

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const & e) {
        return app.exit(e);
    } catch (CLI::CallForAllHelp const & e) {
        return app.exit(e);
    } catch (CLI::ParseError const & e) {
        app.exit(e);
        return exit_input;
    }
    if (ver_window->count() || en_window->count())
        o.window = window;

    try {
        if (fwd->parsed())
            return run_forward(o);
        if (inv->parsed())
            return run_inverse(o);
        if (dia->parsed())
            return run_diagram(o);
        if (ver->parsed())
            return run_verify(o);
        return run_enumerate(o);
    } catch (Failure const & f) {
        std::cerr << "error: " << f.msg << '\n';
        return f.code;
    } catch (std::exception const & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_verify;
    }
}
