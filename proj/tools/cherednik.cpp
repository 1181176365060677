// cherednik: command-line front end to the library.
// Exit codes: 0 ok, 1 domain error, 2 usage error.

#include "cherednik/aspherical.hpp"
#include "cherednik/combinatorics.hpp"
#include "cherednik/norms.hpp"
#include "cherednik/oracle_suite.hpp"
#include "cherednik/orders.hpp"
#include "cherednik/scalars.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <functional>
#include <numeric>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace cherednik;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "cherednik-kit/1";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { text, json, tsv };

json envelope(const std::string& command) {
    json j;
    j["schema"] = kSchema;
    j["command"] = command;
    return j;
}

// integers as numbers, everything else as "p/q"
json rat_json(const Rational& q) {
    if (q.is_integer() && q.num().fits_slong_p()) return q.num().get_si();
    return q.str();
}

json form_json(const AffineForm& f) {
    json a = json::array();
    for (const auto& c : f.coefficients()) a.push_back(rat_json(c));
    return a;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

std::string trim(std::string t) {
    while (!t.empty() && t.front() == ' ') t.erase(t.begin());
    while (!t.empty() && t.back() == ' ') t.pop_back();
    return t;
}

long parse_long(const std::string& tok, const std::string& flag) {
    std::string t = trim(tok);
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(t, &used);
    } catch (const std::exception&) {
        used = std::string::npos;
    }
    if (t.empty() || used != t.size()) throw UsageError(flag + ": bad integer '" + tok + "'");
    return v;
}

std::vector<long> parse_longs(const std::string& text, const std::string& flag) {
    std::vector<long> out;
    if (trim(text).empty()) return out;
    for (const auto& tok : split(text, ',')) out.push_back(parse_long(tok, flag));
    return out;
}

Rational parse_rat(const std::string& text, const std::string& flag) {
    try {
        return Rational::parse(text);
    } catch (const std::exception&) {
        throw UsageError(flag + ": bad rational '" + text + "'");
    }
}

std::vector<Rational> parse_rats(const std::string& text, const std::string& flag) {
    std::vector<Rational> out;
    if (trim(text).empty()) return out;
    for (const auto& tok : split(text, ',')) out.push_back(parse_rat(tok, flag));
    return out;
}

MultiPartition parse_shape(const std::string& text, std::optional<int> r, const std::string& flag = "--shape") {
    MultiPartition sh;
    try {
        sh = MultiPartition::parse(text);
    } catch (const DomainError& e) {
        throw UsageError(flag + ": " + e.what());
    }
    if (r && sh.r() != *r)
        throw UsageError(flag + ": '" + text + "' has " + std::to_string(sh.r()) + " components, --r is " +
                         std::to_string(*r));
    return sh;
}

ParameterPoint parse_point(int r, const std::string& c0, const std::string& d) {
    std::vector<Rational> dv = d.empty() ? std::vector<Rational>(r) : parse_rats(d, "--d");
    if (static_cast<int>(dv.size()) != r)
        throw UsageError("--d: need " + std::to_string(r) + " values, got " + std::to_string(dv.size()));
    return ParameterPoint(r, parse_rat(c0, "--c0"), std::move(dv));
}

Composition parse_composition(const std::string& text, int n) {
    Composition mu;
    for (long v : parse_longs(text, "--mu")) {
        if (v < 0) throw UsageError("--mu: negative entry " + std::to_string(v));
        mu.push_back(static_cast<int>(v));
    }
    if (static_cast<int>(mu.size()) != n)
        throw UsageError("--mu: need " + std::to_string(n) + " entries (one per box), got " + std::to_string(mu.size()));
    return mu;
}

// Gordon order on the command line: lambda^(1)|...|lambda^(r), lambda^(i) = component (r-i) mod r.
MultiPartition from_gordon(const MultiPartition& g) {
    const int r = g.r();
    std::vector<Partition> comps(r);
    for (int i = 1; i <= r; ++i) comps[mod(r - i, r)] = g.component(i - 1);
    return MultiPartition(std::move(comps));
}

MultiPartition to_gordon(const MultiPartition& q) {
    const int r = q.r();
    std::vector<Partition> comps(r);
    for (int i = 1; i <= r; ++i) comps[i - 1] = q.component(mod(r - i, r));
    return MultiPartition(std::move(comps));
}

std::string join_longs(const std::vector<long>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::vector<std::pair<int, StandardTableau>> pick_tableaux(const MultiPartition& sh, std::optional<int> t) {
    auto all = enumerate_syt(sh);
    std::vector<std::pair<int, StandardTableau>> out;
    if (t) {
        if (*t < 0 || *t >= static_cast<int>(all.size()))
            throw UsageError("--t: index " + std::to_string(*t) + " out of range [0, " + std::to_string(all.size()) + ")");
        out.emplace_back(*t, all[*t]);
    } else {
        for (std::size_t i = 0; i < all.size(); ++i) out.emplace_back(static_cast<int>(i), all[i]);
    }
    return out;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("CHEREDNIK_SEED")) {
        long v = parse_long(env, "CHEREDNIK_SEED");
        if (v < 0) throw UsageError("CHEREDNIK_SEED: must be non-negative");
        return static_cast<std::uint64_t>(v);
    }
    return 1;
}

void add_format(CLI::App* sub, Format& fmt, const std::string& tsv_doc) {
    sub->add_option_function<std::string>(
           "--format",
           [&fmt](const std::string& v) { fmt = v == "json" ? Format::json : v == "tsv" ? Format::tsv : Format::text; },
           "Output format: text, json or tsv. TSV columns: " + tsv_doc)
        ->check(CLI::IsMember({"text", "json", "tsv"}));
    sub->add_flag_callback("--json", [&fmt] { fmt = Format::json; }, "Shorthand for --format json");
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

json hyperplane_json(const Hyperplane& h) {
    json o;
    const auto& t = h.tags.front();
    o["kind"] = t.kind == HyperplaneTag::c0 ? "c0" : "d";
    o["k"] = t.k;
    o["l"] = t.kind == HyperplaneTag::c0 ? json(nullptr) : json(t.l);
    o["m"] = t.m;
    o["form"] = form_json(h.form);
    o["text"] = h.form.str() + " = 0";
    json tags = json::array();
    for (const auto& x : h.tags) tags.push_back(x.str());
    o["tags"] = tags;
    return o;
}

const char* order_symbol(Order o) {
    switch (o) {
    case Order::greater: return ">=_c";
    case Order::less: return "<=_c";
    case Order::equal: return "=";
    case Order::incomparable: return "incomparable";
    }
    return "?";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectra and norms of generalized Jack polynomials for G(r,1,n), the aspherical arrangement,\n"
                 "orders on r-partitions, and a brute-force standard-module oracle.\n"
                 "Shapes: components joined by '|', each a comma list, e.g. \"2,1||1\"."};
    app.require_subcommand(1);
    std::function<void()> run;
    Format fmt = Format::text;

    // partitions
    int opt_r = 1, opt_n = 1;
    {
        auto* sub = app.add_subcommand("partitions", "List the r-partitions of n");
        sub->add_option("--r", opt_r, "Number of components")->required()->check(CLI::Range(1, 12));
        sub->add_option("--n", opt_n, "Total size")->required()->check(CLI::Range(0, 30));
        add_format(sub, fmt, "index, shape, syt_count");
        sub->callback([&] {
            run = [&] {
                auto shapes = enumerate_multipartitions(opt_r, opt_n);
                if (fmt == Format::json) {
                    json j = envelope("partitions");
                    j["r"] = opt_r;
                    j["n"] = opt_n;
                    json a = json::array();
                    for (const auto& s : shapes) a.push_back({{"shape", s.str()}, {"syt_count", enumerate_syt(s).size()}});
                    j["shapes"] = a;
                    print_json(j);
                } else if (fmt == Format::tsv) {
                    std::cout << "index\tshape\tsyt_count\n";
                    for (std::size_t i = 0; i < shapes.size(); ++i)
                        std::cout << i << "\t" << shapes[i].str() << "\t" << enumerate_syt(shapes[i]).size() << "\n";
                } else {
                    for (const auto& s : shapes) std::cout << s.str() << "\n";
                }
            };
        });
    }

    // syt
    std::string opt_shape;
    std::optional<int> opt_rr;
    {
        auto* sub = app.add_subcommand("syt", "List the standard tableaux of a shape, indexed for --t");
        sub->add_option("--shape", opt_shape, "Shape text, e.g. \"2,1|1\"")->required();
        sub->add_option("--r", opt_rr, "Expected number of components (checked)");
        add_format(sub, fmt, "index, tableau");
        sub->callback([&] {
            run = [&] {
                auto sh = parse_shape(opt_shape, opt_rr);
                auto all = enumerate_syt(sh);
                if (fmt == Format::json) {
                    json j = envelope("syt");
                    j["shape"] = sh.str();
                    json a = json::array();
                    for (std::size_t i = 0; i < all.size(); ++i) {
                        json boxes = json::array();
                        for (int e = 1; e <= all[i].size(); ++e) {
                            const auto& b = all[i].box(e);
                            boxes.push_back({b.component, b.row, b.column});
                        }
                        a.push_back({{"index", i}, {"tableau", all[i].str()}, {"boxes", boxes}});
                    }
                    j["tableaux"] = a;
                    print_json(j);
                } else {
                    if (fmt == Format::tsv) std::cout << "index\ttableau\n";
                    for (std::size_t i = 0; i < all.size(); ++i)
                        std::cout << i << (fmt == Format::tsv ? "\t" : ": ") << all[i].str() << "\n";
                }
            };
        });
    }

    // spectrum
    std::string opt_mu;
    std::optional<int> opt_t;
    {
        auto* sub = app.add_subcommand("spectrum", "Joint spectrum of z_1..z_n and zeta_1..zeta_n on f_{mu,T}");
        sub->add_option("--shape", opt_shape, "Shape text")->required();
        sub->add_option("--mu", opt_mu, "Composition mu, one entry per box, e.g. \"0,2,1\"")->required();
        sub->add_option("--t", opt_t, "Tableau index from `syt` (default: all)");
        sub->add_option("--r", opt_rr, "Expected number of components (checked)");
        add_format(sub, fmt, "tableau_index, i, zeta_exponent, z_eigenvalue");
        sub->callback([&] {
            run = [&] {
                auto sh = parse_shape(opt_shape, opt_rr);
                Composition mu = parse_composition(opt_mu, sh.size());
                auto tabs = pick_tableaux(sh, opt_t);
                json all = json::array();
                if (fmt == Format::tsv) std::cout << "tableau_index\ti\tzeta_exponent\tz_eigenvalue\n";
                for (const auto& [idx, T] : tabs) {
                    auto sp = spectrum(mu, T);
                    if (fmt == Format::json) {
                        json rows = json::array();
                        for (const auto& s : sp)
                            rows.push_back({{"i", s.index}, {"zeta_exponent", s.zeta_residue},
                                            {"z_eigenvalue", s.z_eigenvalue.str()},
                                            {"z_form", form_json(s.z_eigenvalue)}});
                        all.push_back({{"tableau_index", idx}, {"tableau", T.str()}, {"spectrum", rows}});
                    } else if (fmt == Format::tsv) {
                        for (const auto& s : sp)
                            std::cout << idx << "\t" << s.index << "\t" << s.zeta_residue << "\t" << s.z_eigenvalue.str() << "\n";
                    } else {
                        std::cout << "T" << idx << " = " << T.str() << "\n";
                        for (const auto& s : sp)
                            std::cout << "  i=" << s.index << "  zeta^" << s.zeta_residue << "  z: " << s.z_eigenvalue.str() << "\n";
                    }
                }
                if (fmt == Format::json) {
                    json j = envelope("spectrum");
                    j["shape"] = sh.str();
                    j["mu"] = mu;
                    j["tableaux"] = all;
                    print_json(j);
                }
            };
        });
    }

    // norm-f
    std::string opt_c0, opt_d;
    {
        auto* sub = app.add_subcommand("norm-f", "Closed-form norm of f_{mu,T}");
        sub->add_option("--shape", opt_shape, "Shape text")->required();
        sub->add_option("--mu", opt_mu, "Composition mu, one entry per box")->required();
        sub->add_option("--t", opt_t, "Tableau index from `syt` (default: all)");
        sub->add_option("--r", opt_rr, "Expected number of components (checked)");
        sub->add_option("--c0", opt_c0, "Also evaluate at this c0 (p/q)");
        sub->add_option("--d", opt_d, "d_0,...,d_{r-1} for the evaluation (default zeros)");
        add_format(sub, fmt, "tableau_index, norm, value (empty without --c0)");
        sub->callback([&] {
            run = [&] {
                auto sh = parse_shape(opt_shape, opt_rr);
                Composition mu = parse_composition(opt_mu, sh.size());
                std::optional<ParameterPoint> p;
                if (!opt_c0.empty()) p = parse_point(sh.r(), opt_c0, opt_d);
                else if (!opt_d.empty()) throw UsageError("--d needs --c0");
                auto tabs = pick_tableaux(sh, opt_t);
                json all = json::array();
                if (fmt == Format::tsv) std::cout << "tableau_index\tnorm\tvalue\n";
                for (const auto& [idx, T] : tabs) {
                    FactoredScalar s = normalize(norm_f(mu, T));
                    std::string val = p ? s.evaluate(*p).str() : "";
                    if (fmt == Format::json) {
                        json o{{"tableau_index", idx}, {"tableau", T.str()}, {"norm", s.str()}};
                        if (p) o["value"] = val;
                        all.push_back(o);
                    } else if (fmt == Format::tsv) {
                        std::cout << idx << "\t" << s.str() << "\t" << val << "\n";
                    } else {
                        std::cout << (tabs.size() > 1 ? "T" + std::to_string(idx) + ": " : "") << s.str();
                        if (p) std::cout << "  = " << val;
                        std::cout << "\n";
                    }
                }
                if (fmt == Format::json) {
                    json j = envelope("norm-f");
                    j["shape"] = sh.str();
                    j["mu"] = mu;
                    j["norms"] = all;
                    print_json(j);
                }
            };
        });
    }

    // norm-g
    std::string opt_filling;
    bool opt_literal = false;
    {
        auto* sub = app.add_subcommand(
            "norm-g", "Norm of the symmetric g_S for a residue-compatible column-strict filling S.\n"
                      "The default output restores the tied-pair factors; --literal prints the bare product.");
        sub->add_option("--shape", opt_shape, "Shape text")->required();
        sub->add_option("--filling", opt_filling,
                        "Values of S box by box: component by component, rows top to bottom, left to right")
            ->required();
        sub->add_option("--r", opt_rr, "Expected number of components (checked)");
        sub->add_flag("--literal", opt_literal, "Print the product without the tied-pair constant");
        sub->add_option("--c0", opt_c0, "Also evaluate at this c0 (p/q)");
        sub->add_option("--d", opt_d, "d_0,...,d_{r-1} for the evaluation (default zeros)");
        add_format(sub, fmt, "filling, norm, tie_constant, value");
        sub->callback([&] {
            run = [&] {
                auto sh = parse_shape(opt_shape, opt_rr);
                std::vector<int> vals;
                for (long v : parse_longs(opt_filling, "--filling")) vals.push_back(static_cast<int>(v));
                if (static_cast<int>(vals.size()) != sh.size())
                    throw UsageError("--filling: need " + std::to_string(sh.size()) + " values, got " +
                                     std::to_string(vals.size()));
                ShapeAssignment S(sh, vals);
                std::optional<ParameterPoint> p;
                if (!opt_c0.empty()) p = parse_point(sh.r(), opt_c0, opt_d);
                else if (!opt_d.empty()) throw UsageError("--d needs --c0");
                FactoredScalar lit = norm_gS(S);
                Rational tie = symmetrizer_tie_constant(S.sorted_entries(), realizing_tableau(S));
                FactoredScalar s = normalize(opt_literal ? lit : norm_gS_tie_corrected(S));
                std::string val = p ? s.evaluate(*p).str() : "";
                if (fmt == Format::json) {
                    json j = envelope("norm-g");
                    j["shape"] = sh.str();
                    j["filling"] = S.str();
                    j["literal"] = opt_literal;
                    j["norm"] = s.str();
                    j["tie_constant"] = rat_json(tie);
                    if (p) j["value"] = val;
                    print_json(j);
                } else if (fmt == Format::tsv) {
                    std::cout << "filling\tnorm\ttie_constant\tvalue\n"
                              << S.str() << "\t" << s.str() << "\t" << tie.str() << "\t" << val << "\n";
                } else {
                    std::cout << s.str();
                    if (p) std::cout << "  = " << val;
                    std::cout << "\n";
                }
            };
        });
    }

    // norm-min
    {
        auto* sub = app.add_subcommand("norm-min", "Norm n! H E of the minimal symmetric element of a shape");
        sub->add_option("--shape", opt_shape, "Shape text")->required();
        sub->add_option("--r", opt_rr, "Expected number of components (checked)");
        add_format(sub, fmt, "shape, norm");
        sub->callback([&] {
            run = [&] {
                auto sh = parse_shape(opt_shape, opt_rr);
                FactoredScalar s = normalize(minimal_norm(sh));
                if (fmt == Format::json) {
                    json j = envelope("norm-min");
                    j["shape"] = sh.str();
                    j["minimal_tableau"] = minimal_tableau(sh).str();
                    j["norm"] = s.str();
                    print_json(j);
                } else if (fmt == Format::tsv) {
                    std::cout << "shape\tnorm\n" << sh.str() << "\t" << s.str() << "\n";
                } else {
                    std::cout << s.str() << "\n";
                }
            };
        });
    }

    // hook
    {
        auto* sub = app.add_subcommand("hook", "Hook product H, extra product E and their Pochhammer rewrites");
        sub->add_option("--shape", opt_shape, "Shape text")->required();
        sub->add_option("--r", opt_rr, "Expected number of components (checked)");
        add_format(sub, fmt, "name, value");
        sub->callback([&] {
            run = [&] {
                auto sh = parse_shape(opt_shape, opt_rr);
                FactoredScalar H = normalize(hook_product(sh)), E = normalize(extra_product(sh));
                auto [Ha, Ea] = alt_hook_extra(sh);
                auto ch = proportional(Ha, H), ce = proportional(Ea, E);
                std::vector<std::pair<std::string, std::string>> rows{
                    {"H", H.str()},
                    {"E", E.str()},
                    {"H_alt", normalize(Ha).str()},
                    {"E_alt", normalize(Ea).str()},
                    {"H_alt/H", ch ? ch->str() : "not proportional"},
                    {"E_alt/E", ce ? ce->str() : "not proportional"}};
                if (fmt == Format::json) {
                    json j = envelope("hook");
                    j["shape"] = sh.str();
                    for (const auto& [k, v] : rows) j[k] = v;
                    print_json(j);
                } else {
                    if (fmt == Format::tsv) std::cout << "name\tvalue\n";
                    for (const auto& [k, v] : rows) std::cout << k << (fmt == Format::tsv ? "\t" : " = ") << v << "\n";
                }
            };
        });
    }

    // aspherical
    std::string opt_xi;
    std::optional<int> opt_p;
    {
        auto* asp = app.add_subcommand("aspherical", "The aspherical hyperplane arrangement");
        asp->require_subcommand(1);
        auto* list = asp->add_subcommand("list", "List the hyperplanes, sorted canonically");
        list->add_option("--r", opt_r, "Number of components")->required()->check(CLI::Range(1, 12));
        list->add_option("--n", opt_n, "Rank")->required()->check(CLI::Range(1, 30));
        list->add_option("--xi", opt_xi, "Linear character I,J: sign exponent I in {0,1}, rotation J in [0,r)");
        list->add_option("--p", opt_p, "Restrict to G(r,p,n); p must divide r and n >= 3");
        add_format(list, fmt, "kind, k, l (empty for c0), m, form");
        list->callback([&] {
            run = [&] {
                Arrangement arr;
                if (opt_p && !opt_xi.empty()) throw UsageError("--p and --xi do not combine");
                if (opt_p) {
                    if (*opt_p < 1 || opt_r % *opt_p != 0) throw UsageError("--p: must divide --r");
                    arr = hyperplanes_rpn(opt_r, *opt_p, opt_n);
                } else if (!opt_xi.empty()) {
                    auto ij = parse_longs(opt_xi, "--xi");
                    if (ij.size() != 2) throw UsageError("--xi: expected I,J");
                    if (ij[0] != 0 && ij[0] != 1) throw UsageError("--xi: I must be 0 or 1");
                    if (ij[1] < 0 || ij[1] >= opt_r) throw UsageError("--xi: J must lie in [0, r)");
                    arr = hyperplanes_twisted(opt_r, opt_n, static_cast<int>(ij[0]), static_cast<int>(ij[1]));
                } else {
                    arr = hyperplanes_rectangle(opt_r, opt_n);
                }
                if (fmt == Format::json) {
                    json j = envelope("aspherical list");
                    j["r"] = opt_r;
                    j["n"] = opt_n;
                    if (opt_p) j["p"] = *opt_p;
                    if (!opt_xi.empty()) j["xi"] = opt_xi;
                    std::vector<std::string> basis{"1", "c0"};
                    for (int l = 0; l < (opt_p ? opt_r / *opt_p : opt_r); ++l) basis.push_back("d" + std::to_string(l));
                    j["basis"] = basis;
                    json a = json::array();
                    for (const auto& h : arr) a.push_back(hyperplane_json(h));
                    j["hyperplanes"] = a;
                    print_json(j);
                } else if (fmt == Format::tsv) {
                    std::cout << "kind\tk\tl\tm\tform\n";
                    for (const auto& h : arr) {
                        const auto& t = h.tags.front();
                        std::cout << (t.kind == HyperplaneTag::c0 ? "c0" : "d") << "\t" << t.k << "\t"
                                  << (t.kind == HyperplaneTag::c0 ? "" : std::to_string(t.l)) << "\t" << t.m << "\t"
                                  << h.form.str() << "\n";
                    }
                } else {
                    for (const auto& h : arr) std::cout << h.form.str() << " = 0\n";
                }
            };
        });

        auto* test = asp->add_subcommand("test", "Is the parameter point on the arrangement");
        test->add_option("--r", opt_r, "Number of components")->required()->check(CLI::Range(1, 12));
        test->add_option("--n", opt_n, "Rank")->required()->check(CLI::Range(1, 30));
        test->add_option("--c0", opt_c0, "c0 as p/q")->required();
        test->add_option("--d", opt_d, "d_0,...,d_{r-1} (default zeros)");
        add_format(test, fmt, "aspherical, witness");
        test->callback([&] {
            run = [&] {
                ParameterPoint p = parse_point(opt_r, opt_c0, opt_d);
                AsphericalTest res = is_aspherical(p, opt_r, opt_n);
                if (fmt == Format::json) {
                    json j = envelope("aspherical test");
                    j["aspherical"] = res.aspherical;
                    json a = json::array();
                    for (const auto& h : res.witnesses) a.push_back(hyperplane_json(h));
                    j["witnesses"] = a;
                    print_json(j);
                } else if (fmt == Format::tsv) {
                    std::cout << "aspherical\twitness\n";
                    if (res.witnesses.empty()) std::cout << "no\t\n";
                    for (const auto& h : res.witnesses) std::cout << "yes\t" << h.form.str() << "\n";
                } else {
                    std::cout << "aspherical: " << (res.aspherical ? "yes" : "no") << "\n";
                    for (const auto& h : res.witnesses) std::cout << "  on " << h.form.str() << " = 0\n";
                }
            };
        });
    }

    // order compare
    std::string opt_a, opt_b;
    {
        auto* ord = app.add_subcommand("order", "Orders on r-partitions");
        ord->require_subcommand(1);
        auto* cmp = ord->add_subcommand("compare", "Compare two r-partitions under >=_c, ==_c and, for integral charges, >='_c");
        cmp->add_option("--r", opt_r, "Number of components")->required()->check(CLI::Range(1, 12));
        cmp->add_option("--c0", opt_c0, "c0 as p/q, positive")->required();
        cmp->add_option("--d", opt_d, "d_0,...,d_{r-1} (default zeros)");
        cmp->add_option("--a", opt_a, "First shape")->required();
        cmp->add_option("--b", opt_b, "Second shape")->required();
        add_format(cmp, fmt, "order, equiv, prime (empty unless the charges d_{r-i}/(r c0) are integers summing to zero)");
        cmp->callback([&] {
            run = [&] {
                ParameterPoint p = parse_point(opt_r, opt_c0, opt_d);
                auto A = parse_shape(opt_a, opt_r, "--a"), B = parse_shape(opt_b, opt_r, "--b");
                OrderContext ctx(p);
                Order o = compare_c(A, B, ctx);
                bool eq = equiv_c(A, B, ctx);
                std::optional<std::string> prime;
                auto charges = ctx.integer_charges();
                if (charges && std::accumulate(charges->begin(), charges->end(), 0L) == 0) {
                    bool ab = geq_prime_c(A, B, ctx), ba = geq_prime_c(B, A, ctx);
                    prime = ab && ba ? "=" : ab ? ">='_c" : ba ? "<='_c" : "incomparable";
                }
                if (fmt == Format::json) {
                    json j = envelope("order compare");
                    j["a"] = A.str();
                    j["b"] = B.str();
                    j["order"] = order_symbol(o);
                    j["equiv"] = eq;
                    j["prime"] = prime ? json(*prime) : json(nullptr);
                    print_json(j);
                } else if (fmt == Format::tsv) {
                    std::cout << "order\tequiv\tprime\n"
                              << order_symbol(o) << "\t" << (eq ? "yes" : "no") << "\t" << prime.value_or("") << "\n";
                } else {
                    std::cout << order_symbol(o) << "\n" << "equiv: " << (eq ? "yes" : "no") << "\n";
                    if (prime) std::cout << "prime: " << *prime << "\n";
                }
            };
        });
    }

    // core-quotient
    std::string opt_charges;
    {
        auto* cq = app.add_subcommand("core-quotient",
                                      "Partition <-> (core point, r-quotient). Quotients use the order "
                                      "lambda^(1)|...|lambda^(r).");
        cq->require_subcommand(1);
        auto* enc = cq->add_subcommand("encode", "Assemble a partition from a core point and a quotient");
        enc->add_option("--r", opt_r, "Number of runners")->required()->check(CLI::Range(1, 12));
        enc->add_option("--a", opt_charges, "a_1,...,a_r, summing to zero")->required();
        enc->add_option("--shape", opt_shape, "Quotient lambda^(1)|...|lambda^(r)")->required();
        add_format(enc, fmt, "partition");
        enc->callback([&] {
            run = [&] {
                CorePoint a = parse_longs(opt_charges, "--a");
                if (static_cast<int>(a.size()) != opt_r) throw UsageError("--a: need " + std::to_string(opt_r) + " entries");
                auto q = from_gordon(parse_shape(opt_shape, opt_r));
                Partition lam = assemble(a, q);
                if (fmt == Format::json) {
                    json j = envelope("core-quotient encode");
                    j["partition"] = lam.str();
                    print_json(j);
                } else {
                    if (fmt == Format::tsv) std::cout << "partition\n";
                    std::cout << lam.str() << "\n";
                }
            };
        });
        auto* dec = cq->add_subcommand("decode", "Split a partition into core point and quotient");
        dec->add_option("--r", opt_r, "Number of runners")->required()->check(CLI::Range(1, 12));
        dec->add_option("--shape", opt_shape, "A partition, e.g. \"3,1\"")->required();
        add_format(dec, fmt, "a, quotient, core");
        dec->callback([&] {
            run = [&] {
                auto sh = parse_shape(opt_shape, 1);
                CoreQuotient cqv = disassemble(sh.component(0), opt_r);
                std::string q = to_gordon(cqv.quotient).str();
                std::string core = core_of(cqv.a).str();
                if (fmt == Format::json) {
                    json j = envelope("core-quotient decode");
                    j["a"] = cqv.a;
                    j["quotient"] = q;
                    j["core"] = core;
                    print_json(j);
                } else if (fmt == Format::tsv) {
                    std::cout << "a\tquotient\tcore\n" << join_longs(cqv.a) << "\t" << q << "\t" << core << "\n";
                } else {
                    std::cout << "a=" << join_longs(cqv.a) << "; quotient=" << q << "\n";
                }
            };
        });
    }

    // oracle verify
    int opt_degree = 2, opt_points = 3;
    std::optional<std::uint64_t> opt_seed;
    bool opt_no_time = false;
    {
        auto* orc = app.add_subcommand("oracle", "Brute-force standard-module oracle");
        orc->require_subcommand(1);
        auto* ver = orc->add_subcommand("verify", "Check every closed formula and structural identity; JSON report");
        ver->add_option("--r", opt_r, "Number of components")->required()->check(CLI::Range(1, 4));
        ver->add_option("--n", opt_n, "Rank")->required()->check(CLI::Range(1, 5));
        ver->add_option("--degree", opt_degree, "Maximal polynomial degree (default 2)")->check(CLI::Range(0, 5));
        ver->add_option("--seed", opt_seed, "RNG seed; overrides CHEREDNIK_SEED (default 1)");
        ver->add_option("--shape", opt_shape, "Restrict to one shape");
        ver->add_option("--points", opt_points, "Random parameter points per norm check (default 3)")->check(CLI::Range(1, 20));
        ver->add_flag("--no-timings", opt_no_time, "Omit wall times, for byte-identical reports");
        ver->callback([&] {
            run = [&] {
                SuiteOptions so;
                so.r = opt_r;
                so.n = opt_n;
                so.degree = opt_degree;
                so.seed = resolve_seed(opt_seed);
                so.points = opt_points;
                if (!opt_shape.empty()) {
                    so.shape = parse_shape(opt_shape, opt_r);
                    if (so.shape->size() != opt_n) throw UsageError("--shape: size differs from --n");
                }
                auto t0 = std::chrono::steady_clock::now();
                auto results = run_oracle_suite(so);
                double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                json j = envelope("oracle verify");
                j["r"] = so.r;
                j["n"] = so.n;
                j["degree"] = so.degree;
                j["seed"] = so.seed;
                if (so.shape) j["shape"] = so.shape->str();
                bool all = true;
                json checks = json::array();
                for (const auto& c : results) {
                    json o{{"name", c.name}, {"passed", c.passed()}, {"cases", c.cases}, {"failures", c.failures}};
                    if (!c.first_failure.empty()) o["first_failure"] = c.first_failure;
                    if (!c.note.empty()) o["note"] = c.note;
                    if (!opt_no_time) o["seconds"] = c.seconds;
                    all = all && c.passed();
                    checks.push_back(o);
                }
                j["checks"] = checks;
                j["all_passed"] = all;
                if (!opt_no_time) j["seconds"] = total;
                std::cout << j.dump(2) << "\n";
            };
        });
    }

    // params convert
    std::string opt_to = "gordon";
    {
        auto* par = app.add_subcommand("params", "Parameter conventions");
        par->require_subcommand(1);
        auto* conv = par->add_subcommand("convert", "Convert (c0, d) to another convention");
        conv->add_option("--r", opt_r, "Number of components")->required()->check(CLI::Range(1, 12));
        conv->add_option("--c0", opt_c0, "c0 as p/q")->required();
        conv->add_option("--d", opt_d, "d_0,...,d_{r-1} (default zeros)");
        conv->add_option("--to", opt_to, "gordon, rouquier or hecke (hecke values are exponents t of e^{2 pi i t})")
            ->check(CLI::IsMember({"gordon", "rouquier", "hecke"}));
        add_format(conv, fmt, "name, value");
        conv->callback([&] {
            run = [&] {
                ParameterPoint p = parse_point(opt_r, opt_c0, opt_d);
                Convention c = opt_to == "gordon" ? Convention::gordon : opt_to == "rouquier" ? Convention::rouquier : Convention::hecke;
                auto out = convert_parameters(p, c);
                if (fmt == Format::json) {
                    json j = envelope("params convert");
                    j["convention"] = opt_to;
                    json v = json::object();
                    for (const auto& [k, x] : out.values) v[k] = rat_json(x);
                    j["values"] = v;
                    print_json(j);
                } else {
                    if (fmt == Format::tsv) std::cout << "name\tvalue\n";
                    for (const auto& [k, x] : out.values) std::cout << k << (fmt == Format::tsv ? "\t" : " = ") << x.str() << "\n";
                }
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    try {
        if (run) run();
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
