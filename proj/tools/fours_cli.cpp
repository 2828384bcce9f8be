// Command-line front end for the fours-group toolkit: exact group-algebra
// arithmetic, the determinant unit criterion, dihedral length functions,
// split-form expansion, consistent chains, and bounded unit searches.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fours/io.hpp"
#include "fours/selftest.hpp"
#include "fours/splitting.hpp"

using namespace fours;
using nlohmann::json;

namespace {

Field parse_field_spec(const std::string &spec) {
    if (spec == "q" || spec == "Q")
        return Field::rationals();
    if (spec.rfind("fp:", 0) == 0 || spec.rfind("Fp:", 0) == 0)
        return Field::prime(std::stoull(spec.substr(3)));
    if (spec == "f2" || spec == "F2")
        return Field::prime(2);
    if (spec == "f3" || spec == "F3")
        return Field::prime(3);
    throw CLI::ValidationError("--field", "expected q, f2, f3 or fp:<p>");
}

std::string length_str(const std::optional<long> &l) {
    return l ? std::to_string(*l) : "-inf";
}

struct Options {
    std::string field_spec = "q";
    bool json_out = false;
    int quotient = 1;

    Field field() const { return parse_field_spec(field_spec); }
    QuotientChoice q() const { return QuotientChoice::of(quotient); }
};

void emit(const Options &opt, const json &j, const std::string &plain) {
    if (opt.json_out)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << plain;
}

LinearFactor parse_factor(const std::string &text, const Field &f) {
    auto p1 = text.find(';');
    auto p2 = text.find(';', p1 == std::string::npos ? p1 : p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos)
        throw ParseError("factor must be 'alpha; beta; x|y'", 0);
    AlgebraElement alpha = parse_element(text.substr(0, p1), f);
    AlgebraElement beta = parse_element(text.substr(p1 + 1, p2 - p1 - 1), f);
    std::string gs = text.substr(p2 + 1);
    gs.erase(std::remove_if(gs.begin(), gs.end(), ::isspace), gs.end());
    if (gs != "x" && gs != "y")
        throw ParseError("factor letter must be x or y", p2 + 1);
    if (!alpha.in_KH() || !beta.in_KH())
        throw ParseError("factor coefficients must lie in KN", 0);
    return LinearFactor(alpha.component(Tv::E), beta.component(Tv::E),
                        gs == "x" ? Tv::X : Tv::Y);
}

int run_search(const Options &opt, int max_word_len, const std::string &box_spec,
               int support_cap, std::uint64_t budget, int jobs) {
    auto dots = box_spec.find("..");
    if (dots == std::string::npos)
        throw CLI::ValidationError("--exp-box", "expected lo..hi");
    long lo = std::stol(box_spec.substr(0, dots));
    long hi = std::stol(box_spec.substr(dots + 2));

    SearchSpace space;
    space.words = words_up_to_length(max_word_len);
    space.box = ExpBox{lo, hi, lo, hi};
    space.field = opt.field();
    space.support_cap = support_cap;
    space.budget = budget;
    space.jobs = jobs;

    ScanResult res = unit_scan(space);
    json j{{"candidates", res.candidates},
           {"determinants", res.det_checked},
           {"units_found", res.units.size()},
           {"nontrivial", res.nontrivial}};
    std::string plain = "candidates: " + std::to_string(res.candidates) +
                        "\ndeterminant checks: " + std::to_string(res.det_checked) +
                        "\nunits found: " + std::to_string(res.units.size()) +
                        " (nontrivial: " + std::to_string(res.nontrivial) + ")\n";
    if (res.nontrivial > 0) {
        plain += "NON-TRIVIAL UNITS:\n";
        json units = json::array();
        for (const auto &u : res.units)
            if (u.support_size() > 1) {
                plain += "  " + to_string(u) + "\n";
                units.push_back(to_string(u));
            }
        j["nontrivial_units"] = units;
    }
    emit(opt, j, plain);
    return res.nontrivial == 0 ? 0 : 1;
}

int run_chains(const Options &opt, const std::string &mode, int n, const std::string &start_s,
               int bound) {
    if (mode == "orbits") {
        std::vector<SidedChain> family;
        for (Tv side : {Tv::X, Tv::Y})
            for (const Chain &c : recursive_minimal_chains(n, side))
                family.push_back(SidedChain{side, c});
        auto orbits = chain_orbits(family, n);
        json j{{"n", n}, {"orbits", json::array()}};
        std::string plain = "orbits: " + std::to_string(orbits.size()) + "\n";
        for (const auto &orbit : orbits) {
            json jo = json::array();
            plain += "-";
            for (const auto &sc : orbit) {
                std::string tag = std::string(1, tv_char(sc.side)) + ":" + to_string(sc.chain);
                plain += " " + tag;
                jo.push_back(tag);
            }
            plain += "\n";
            j["orbits"].push_back(jo);
        }
        emit(opt, j, plain);
        return 0;
    }

    Tv start = start_s == "y" ? Tv::Y : Tv::X;
    std::set<Chain> chains;
    if (mode == "enumerate")
        chains = minimal_chains(build_table(n, start), bound > 0 ? bound : n);
    else
        chains = recursive_minimal_chains(n, start);
    json j{{"n", n}, {"start", std::string(1, tv_char(start))}, {"chains", json::array()}};
    std::string plain;
    for (const Chain &c : chains) {
        plain += to_string(c) + "\n";
        j["chains"].push_back(to_string(c));
    }
    plain += "count: " + std::to_string(chains.size()) + "\n";
    emit(opt, j, plain);
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"fours: exact computations in the group algebra of the fours group"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand name

    Options opt;
    const char *env_field = std::getenv("FOURS_FIELD");
    if (env_field)
        opt.field_spec = env_field;
    app.add_option("--field", opt.field_spec, "coefficient field: q (default) or fp:<p>");
    app.add_flag("--json", opt.json_out, "machine-readable output");

    // mul
    auto *mul = app.add_subcommand("mul", "multiply elements");
    std::vector<std::string> mul_args;
    mul->add_option("elements", mul_args, "elements to multiply")->required()->expected(-2);

    // det / is-unit / invert
    std::string elem_arg;
    auto *det = app.add_subcommand("det", "determinant of the matrix embedding");
    det->add_option("element", elem_arg)->required();
    auto *isu = app.add_subcommand("is-unit", "determinant unit criterion");
    isu->add_option("element", elem_arg)->required();
    auto *inv = app.add_subcommand("invert", "invert a unit");
    inv->add_option("element", elem_arg)->required();

    // length / decompose
    auto *len = app.add_subcommand("length", "dihedral length of an element");
    len->add_option("element", elem_arg)->required();
    len->add_option("--quotient", opt.quotient, "normal subgroup 1, 2 or 3")->check(CLI::Range(1, 3));
    auto *dec = app.add_subcommand("decompose", "write a group element as n * w");
    dec->add_option("element", elem_arg)->required();
    dec->add_option("--quotient", opt.quotient, "normal subgroup 1, 2 or 3")->check(CLI::Range(1, 3));

    // expand-factors
    auto *exf = app.add_subcommand("expand-factors", "expand a product of linear factors");
    std::vector<std::string> factor_args;
    exf->add_option("factors", factor_args, "factors 'alpha; beta; x|y', leftmost first")
        ->required()
        ->expected(-1);

    // chains
    auto *chn = app.add_subcommand("chains", "consistent-chain machinery");
    chn->require_subcommand(1);
    int chain_n = 3, chain_bound = 0;
    std::string chain_start = "x";
    auto *che = chn->add_subcommand("enumerate", "brute-force minimal consistent chains");
    che->add_option("n", chain_n)->required()->check(CLI::Range(1, 12));
    che->add_option("start", chain_start)->check(CLI::IsMember({"x", "y"}));
    che->add_option("--bound", chain_bound, "maximum chain size (default n)");
    auto *chr = chn->add_subcommand("recursive", "recursive construction of minimal chains");
    chr->add_option("n", chain_n)->required()->check(CLI::Range(3, 12));
    chr->add_option("start", chain_start)->check(CLI::IsMember({"x", "y"}));
    auto *cho = chn->add_subcommand("orbits", "orbit partition under the chain symmetries");
    cho->add_option("n", chain_n)->required()->check(CLI::Range(3, 12));

    // promislow / unique-product
    auto *pro = app.add_subcommand("promislow", "verify the Promislow set computations");
    std::string up_file;
    auto *upc = app.add_subcommand("unique-product", "unique-product check for a set of elements");
    upc->add_option("file", up_file, "file with one group element per line")->required();

    // search
    auto *sea = app.add_subcommand("search", "bounded exhaustive unit search");
    int max_word_len = 2, support_cap = 0, jobs = 1;
    std::string box_spec = "0..1";
    std::uint64_t budget = 1ull << 32;
    sea->add_option("--max-word-len", max_word_len, "include words up to this length")
        ->check(CLI::Range(0, 6));
    sea->add_option("--exp-box", box_spec, "exponent range lo..hi for both a and b");
    sea->add_option("--support-cap", support_cap, "restrict to candidates with at most this many terms");
    sea->add_option("--budget", budget, "candidate-count budget");
    sea->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));

    auto *self = app.add_subcommand("selftest", "golden self-checks over Q and F2");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Field f = opt.field();

        if (mul->parsed()) {
            AlgebraElement acc = parse_element(mul_args[0], f);
            for (std::size_t i = 1; i < mul_args.size(); ++i)
                acc *= parse_element(mul_args[i], f);
            emit(opt, json{{"product", to_string(acc)}}, to_string(acc) + "\n");
            return 0;
        }
        if (det->parsed()) {
            LaurentPoly d = det4(embed(parse_element(elem_arg, f)));
            emit(opt, json{{"det", to_string(d)}}, to_string(d) + "\n");
            return 0;
        }
        if (isu->parsed()) {
            UnitVerdict v = is_unit(parse_element(elem_arg, f));
            emit(opt, json{{"is_unit", v.is_unit}, {"det", to_string(v.det)}},
                 std::string(v.is_unit ? "unit" : "not a unit") + " (det = " + to_string(v.det) + ")\n");
            return 0;
        }
        if (inv->parsed()) {
            try {
                AlgebraElement r = try_invert(parse_element(elem_arg, f));
                emit(opt, json{{"inverse", to_string(r)}}, to_string(r) + "\n");
                return 0;
            } catch (const NotAUnit &) {
                emit(opt, json{{"error", "not a unit"}}, "not a unit\n");
                return 1;
            }
        }
        if (len->parsed()) {
            auto l = length_alg(parse_element(elem_arg, f), opt.q());
            emit(opt, json{{"length", length_str(l)}}, length_str(l) + "\n");
            return 0;
        }
        if (dec->parsed()) {
            auto [n, w] = decompose(parse_group_element(elem_arg), opt.q());
            emit(opt, json{{"n", to_string(n)}, {"w", to_string(w)}},
                 to_string(n) + " | " + to_string(w) + "\n");
            return 0;
        }
        if (exf->parsed()) {
            std::vector<LinearFactor> factors;
            for (auto it = factor_args.rbegin(); it != factor_args.rend(); ++it)
                factors.push_back(parse_factor(*it, f));
            SplitForm form(factors, f);
            auto table = coefficient_table(form);
            AlgebraElement e = expand(form);
            json j{{"expansion", to_string(e)}, {"table", json::array()}};
            std::string plain;
            for (const auto &[w, coeff] : table) {
                plain += to_string(w) + "\t" + to_string(coeff) + "\n";
                j["table"].push_back(json{{"word", to_string(w)}, {"coefficient", to_string(coeff)}});
            }
            plain += "expansion: " + to_string(e) + "\n";
            if (!e.is_zero()) {
                LaurentPoly g = coeff_gcd(e);
                plain += "coefficient gcd: " + to_string(g) + "\n";
                j["coeff_gcd"] = to_string(g);
            }
            emit(opt, j, plain);
            return 0;
        }
        if (chn->parsed()) {
            std::string mode = che->parsed() ? "enumerate" : chr->parsed() ? "recursive" : "orbits";
            return run_chains(opt, mode, chain_n, chain_start, chain_bound);
        }
        if (pro->parsed()) {
            PromislowReport rep = promislow_check();
            json j{{"ok", rep.ok}, {"image_matches", rep.image_matches},
                   {"max_length", rep.max_length}, {"elements", json::array()}};
            std::string plain;
            for (const auto &[g, l] : rep.lengths) {
                plain += to_string(g) + "\tlength " + std::to_string(l) + "\n";
                j["elements"].push_back(json{{"element", to_string(g)}, {"length", l}});
            }
            plain += std::string("image matches: ") + (rep.image_matches ? "yes" : "no") + "\n";
            plain += "max length: " + std::to_string(rep.max_length) + "\n";
            plain += std::string(rep.ok ? "OK" : "FAILED") + "\n";
            emit(opt, j, plain);
            return rep.ok ? 0 : 1;
        }
        if (upc->parsed()) {
            std::ifstream in(up_file);
            if (!in)
                throw std::invalid_argument("cannot open " + up_file);
            std::vector<GroupElement> set;
            std::string line;
            while (std::getline(in, line)) {
                if (line.find_first_not_of(" \t\r") == std::string::npos)
                    continue;
                set.push_back(parse_group_element(line));
            }
            auto res = unique_product_check(set, set);
            if (!res) {
                emit(opt, json{{"unique_product", nullptr}}, "no unique product\n");
                return 0;
            }
            auto [x, y, g] = *res;
            emit(opt,
                 json{{"unique_product",
                       {{"x", to_string(x)}, {"y", to_string(y)}, {"product", to_string(g)}}}},
                 "unique product: " + to_string(g) + " = (" + to_string(x) + ") * (" + to_string(y) +
                     ")\n");
            return 1;
        }
        if (sea->parsed())
            return run_search(opt, max_word_len, box_spec, support_cap, budget, jobs);
        if (self->parsed()) {
            bool all_ok = true;
            json j = json::array();
            for (const Field &field : {Field::rationals(), Field::prime(2)}) {
                for (const auto &item : selftest(field)) {
                    all_ok = all_ok && item.passed;
                    std::string line = std::string(item.passed ? "PASS" : "FAIL") + "  [" +
                                       field.name() + "] " + item.name;
                    if (!opt.json_out)
                        std::cout << line << "\n";
                    j.push_back(json{{"field", field.name()}, {"name", item.name}, {"passed", item.passed}});
                }
            }
            if (opt.json_out)
                std::cout << j.dump(2) << "\n";
            return all_ok ? 0 : 1;
        }
    } catch (const BudgetExceeded &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
