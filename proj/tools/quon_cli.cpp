// Command-line front door: single computations and the full verification
// suite, with deterministic text or JSON reports.
//
// Exit codes: 0 success, 1 a verification verdict failed, 2 usage or parse
// error, 3 a documented resource limit was exceeded, 4 internal invariant
// breach.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "quon/quon.hpp"

namespace {

using nlohmann::json;
using namespace quon;

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> config;  // ordered echo
    std::vector<std::string> lines;                           // deterministic body
    std::vector<std::string> trailer;                         // timings etc.
    json results = json::array();
    std::string verdict;
    bool minimal_text = false;  // body only, for single-value commands
};

std::string render_text(const Report& r) {
    std::string s;
    if (!r.minimal_text) {
        s += "command: " + r.command + "\n";
        for (const auto& [k, v] : r.config) s += k + ": " + v + "\n";
    }
    for (const auto& line : r.lines) s += line + "\n";
    if (!r.minimal_text) s += "verdict: " + r.verdict + "\n";
    for (const auto& line : r.trailer) s += line + "\n";
    return s;
}

std::string render_json(const Report& r) {
    json doc;
    doc["command"] = r.command;
    json cfg = json::object();
    for (const auto& [k, v] : r.config) cfg[k] = v;
    doc["config"] = cfg;
    doc["results"] = r.results;
    doc["verdict"] = r.verdict;
    return doc.dump(2) + "\n";
}

std::string word_text(const std::vector<int>& w) {
    std::string s = "(";
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(w[k]);
    }
    return s + ")";
}

std::string assignment_text(const Assignment& point) {
    std::string s;
    for (const auto& [v, z] : point) {
        if (!s.empty()) s += ", ";
        s += to_string(v) + " = " + to_string(z);
    }
    return s;
}

int cmd_braket(const std::vector<int>& left, const std::vector<int>& right, Report& rep) {
    // Words are read as written in the sandwich; the engine takes the ket
    // letters outermost first, so the right word arrives reversed.
    const MPoly value = braket_pair(left, Word(right.rbegin(), right.rend()));
    rep.minimal_text = true;
    rep.config.emplace_back("left", word_text(left));
    rep.config.emplace_back("right", word_text(right));
    rep.lines.push_back(value.to_string());
    rep.results.push_back(json{{"value", value.to_string()}});
    rep.verdict = "OK";
    return 0;
}

int cmd_gram(const std::vector<int>& word, Report& rep) {
    const GramBlock g = gram_block(word);
    rep.config.emplace_back("multiset", word_text(g.multiset));
    json basis = json::array();
    rep.lines.push_back("basis:");
    for (std::size_t k = 0; k < g.basis.size(); ++k) {
        rep.lines.push_back("  " + std::to_string(k + 1) + ": " + word_text(g.basis[k]));
        basis.push_back(word_text(g.basis[k]));
    }
    json matrix = json::array();
    rep.lines.push_back("matrix:");
    for (std::size_t r = 0; r < g.matrix.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < g.matrix.cols(); ++c) {
            const std::string entry = g.matrix.at(r, c).to_string();
            rep.lines.push_back("  M[" + std::to_string(r + 1) + "][" + std::to_string(c + 1) +
                                "] = " + entry);
            row.push_back(entry);
        }
        matrix.push_back(std::move(row));
    }
    rep.results.push_back(json{{"basis", std::move(basis)}, {"matrix", std::move(matrix)}});
    rep.verdict = "OK";
    return 0;
}

int cmd_det(const std::vector<int>& word, const std::string& mode_name, std::size_t samples,
            std::uint64_t seed, Report& rep) {
    const DetMode mode = mode_name == "symbolic" ? DetMode::symbolic : DetMode::evaluated;
    const BlockDetReport r = block_determinant(word, mode, samples, seed);
    rep.config.emplace_back(r.is_set ? "set" : "multiset", word_text(r.multiset));
    rep.config.emplace_back("mode", mode_name);
    rep.config.emplace_back("samples", std::to_string(samples));
    rep.config.emplace_back("seed", std::to_string(seed));
    json result;
    rep.lines.push_back("method: " + r.method);
    result["method"] = r.method;
    if (r.is_set) {
        const std::string closed = r.closed_form.to_string();
        rep.lines.push_back("closed-form: " + closed);
        result["closed_form"] = closed;
    }
    if (r.determinant) {
        const std::string det = r.determinant->to_string();
        rep.lines.push_back("determinant: " + det);
        result["determinant"] = det;
    }
    if (r.samples_used > 0) {
        rep.lines.push_back("samples-used: " + std::to_string(r.samples_used));
        result["samples_used"] = r.samples_used;
    }
    for (const std::string& note : r.notes) rep.lines.push_back("note: " + note);
    result["notes"] = r.notes;
    result["verified"] = r.verified;
    rep.results.push_back(std::move(result));
    rep.verdict = r.is_set ? (r.verified ? "MATCH" : "MISMATCH")
                           : (r.verified ? "NONVANISHING" : "VANISHING");
    return r.verified ? 0 : 1;
}

int cmd_zagier(int n, Report& rep) {
    const ZagierReport r = zagier_check(n);
    rep.config.emplace_back("n", std::to_string(n));
    rep.config.emplace_back("dimension", std::to_string(r.dimension));
    rep.config.emplace_back("method", r.method);
    json result;
    rep.lines.push_back("bound: " + r.bound.to_string());
    result["bound"] = r.bound.to_string();
    rep.lines.push_back("determinant: " + r.det_factored.to_string());
    result["determinant"] = r.det_factored.to_string();
    rep.lines.push_back(std::string("determinant-match: ") + (r.det_matches ? "yes" : "no"));
    result["determinant_match"] = r.det_matches;
    rep.lines.push_back(std::string("inverse-identity: ") +
                        (r.inverse_verified ? "verified" : "failed"));
    result["inverse_identity"] = r.inverse_verified;
    rep.lines.push_back("denominators:");
    json denoms = json::array();
    for (const auto& [den, count] : r.denominators) {
        rep.lines.push_back("  " + den + "  x" + std::to_string(count));
        denoms.push_back(json{{"denominator", den}, {"entries", count}});
    }
    result["denominators"] = std::move(denoms);
    rep.results.push_back(std::move(result));
    rep.verdict = r.bound_holds ? "ALL-DIVIDE" : "VIOLATION";
    return r.bound_holds ? 0 : 1;
}

int cmd_posdef(const std::vector<int>& word, std::size_t samples, std::uint64_t seed,
               Report& rep) {
    const PosdefReport r = posdef_check(word, samples, seed);
    rep.config.emplace_back("multiset", word_text(r.multiset));
    rep.config.emplace_back("samples", std::to_string(samples));
    rep.config.emplace_back("seed", std::to_string(seed));
    for (std::size_t k = 0; k < r.samples.size(); ++k) {
        const PosdefSample& s = r.samples[k];
        rep.lines.push_back("sample " + std::to_string(k + 1) + ":");
        rep.lines.push_back("  point: " + assignment_text(s.point));
        std::string minors;
        json minor_list = json::array();
        for (const Rational& m : s.minors) {
            if (!minors.empty()) minors += ", ";
            minors += to_string(m);
            minor_list.push_back(to_string(m));
        }
        rep.lines.push_back("  minors: " + minors);
        rep.lines.push_back(std::string("  positive: ") + (s.positive ? "yes" : "no"));
        json point = json::object();
        for (const auto& [v, z] : s.point) point[to_string(v)] = to_string(z);
        rep.results.push_back(json{{"sample", k + 1},
                                   {"point", std::move(point)},
                                   {"minors", std::move(minor_list)},
                                   {"positive", s.positive}});
    }
    rep.verdict = r.all_positive ? "POSITIVE-DEFINITE" : "NOT-POSITIVE-DEFINITE";
    return r.all_positive ? 0 : 1;
}

int cmd_delta(int n, Report& rep) {
    const FactoredUPoly literal = delta_interval_specialized(identity_permutation(n));
    const FactoredUPoly corollary = corollary_delta_closed_form(n);
    rep.config.emplace_back("n", std::to_string(n));
    rep.lines.push_back("literal:   " + literal.to_string());
    rep.lines.push_back("corollary: " + corollary.to_string());
    std::map<int, int> diff;
    for (const auto& [d, e] : literal.factors) diff[d] += e;
    for (const auto& [d, e] : corollary.factors) diff[d] -= e;
    json differences = json::array();
    bool agree = true;
    for (const auto& [d, e] : diff) {
        if (e == 0) continue;
        agree = false;
        const std::string factor =
            "(1 - q^" + std::to_string(d) + ")" + (std::abs(e) > 1 ? "^" + std::to_string(std::abs(e)) : "");
        rep.lines.push_back(std::string("discrepancy: literal product ") +
                            (e > 0 ? "carries an extra " : "is missing ") + factor);
        differences.push_back(json{{"degree", d}, {"exponent", e}});
    }
    rep.results.push_back(json{{"literal", literal.to_string()},
                               {"corollary", corollary.to_string()},
                               {"differences", std::move(differences)}});
    rep.verdict = agree ? "AGREE" : "DISCREPANCY";
    return 0;
}

int cmd_verify(int max_n, std::size_t samples, std::uint64_t seed, bool extended, Report& rep) {
    CheckOptions opts;
    opts.max_n = max_n;
    opts.samples = samples;
    opts.seed = seed;
    opts.extended = extended || max_n == 5;
    rep.config.emplace_back("max-n", std::to_string(max_n));
    rep.config.emplace_back("samples", std::to_string(samples));
    rep.config.emplace_back("seed", std::to_string(seed));
    rep.config.emplace_back("extended", opts.extended ? "yes" : "no");
    const std::vector<CheckResult> checks = acceptance_checks(opts);
    bool all_pass = true;
    std::string timings = "timings-ms:";
    for (const CheckResult& c : checks) {
        all_pass = all_pass && c.pass;
        rep.lines.push_back(std::string(c.pass ? "PASS " : "FAIL ") + c.name + "  " + c.detail);
        rep.results.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.1f", c.ms);
        timings += " " + c.name + "=" + buf;
    }
    rep.trailer.push_back(timings);
    rep.verdict = all_pass ? "ALL-PASS" : "FAILURES-PRESENT";
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic toolkit for multiparametric quon Gram blocks"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string out_path;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "structured"}));
    app.add_option("--out", out_path, "write the report to a file instead of stdout");

    std::vector<int> left, right, word;
    std::string mode = "symbolic";
    std::size_t samples = 25;
    std::uint64_t seed = 20260813;
    int n = 2;
    int max_n = 4;
    bool extended = false;

    CLI::App* braket_cmd = app.add_subcommand("braket", "vacuum bra-ket of two words");
    braket_cmd->add_option("--left", left, "bra word, as written")
        ->required()
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    braket_cmd->add_option("--right", right, "ket word, as written")
        ->required()
        ->delimiter(',')
        ->check(CLI::PositiveNumber);

    CLI::App* gram_cmd = app.add_subcommand("gram", "Gram block of a multiset");
    gram_cmd->add_option("--multiset", word, "letters of the block")
        ->required()
        ->delimiter(',')
        ->check(CLI::PositiveNumber);

    CLI::App* det_cmd = app.add_subcommand("det", "block determinant against the closed form");
    det_cmd->add_option("--set,--multiset", word, "letters of the block")
        ->required()
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    det_cmd->add_option("--mode", mode, "symbolic or evaluated")
        ->check(CLI::IsMember({"symbolic", "evaluated"}));
    det_cmd->add_option("--samples", samples, "evaluation points")->check(CLI::Range(10, 1000000));
    det_cmd->add_option("--seed", seed, "random seed");

    CLI::App* zagier_cmd = app.add_subcommand("zagier", "denominator bound of the inverse block");
    zagier_cmd->add_option("--n", n, "block size")->required()->check(CLI::Range(1, 5));
    zagier_cmd->add_flag("--extended", extended, "allow the size-five run (slow)");

    CLI::App* posdef_cmd =
        app.add_subcommand("posdef", "positive definiteness at Hermitian points");
    posdef_cmd->add_option("--multiset", word, "letters of the block")
        ->required()
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    posdef_cmd->add_option("--samples", samples, "Hermitian points")->check(CLI::Range(10, 1000000));
    posdef_cmd->add_option("--seed", seed, "random seed");

    CLI::App* delta_cmd =
        app.add_subcommand("delta", "interval product against its closed form");
    delta_cmd->add_option("--n", n, "word size")->required()->check(CLI::Range(1, 8));

    CLI::App* verify_cmd = app.add_subcommand("verify", "full verification suite");
    verify_cmd->add_option("--max-n", max_n, "block-size ceiling")->check(CLI::Range(2, 5));
    verify_cmd->add_option("--samples", samples, "evaluation points per item")
        ->check(CLI::Range(10, 1000000));
    verify_cmd->add_option("--seed", seed, "random seed");
    verify_cmd->add_flag("--extended", extended, "add the size-five denominator bound");

    for (CLI::App* sub : {braket_cmd, gram_cmd, det_cmd, zagier_cmd, posdef_cmd, delta_cmd,
                          verify_cmd})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Report rep;
    int status = 0;
    try {
        if (app.got_subcommand(braket_cmd)) {
            rep.command = "braket";
            status = cmd_braket(left, right, rep);
        } else if (app.got_subcommand(gram_cmd)) {
            rep.command = "gram";
            status = cmd_gram(word, rep);
        } else if (app.got_subcommand(det_cmd)) {
            rep.command = "det";
            status = cmd_det(word, mode, samples, seed, rep);
        } else if (app.got_subcommand(zagier_cmd)) {
            rep.command = "zagier";
            if (n == 5 && !extended) {
                std::cerr << "zagier --n 5 requires --extended\n";
                return 2;
            }
            status = cmd_zagier(n, rep);
        } else if (app.got_subcommand(posdef_cmd)) {
            rep.command = "posdef";
            status = cmd_posdef(word, samples, seed, rep);
        } else if (app.got_subcommand(delta_cmd)) {
            rep.command = "delta";
            status = cmd_delta(n, rep);
        } else if (app.got_subcommand(verify_cmd)) {
            rep.command = "verify";
            if (max_n == 5 && !extended) {
                std::cerr << "verify --max-n 5 requires --extended\n";
                return 2;
            }
            status = cmd_verify(max_n, samples, seed, extended, rep);
        }
    } catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const SampleCountTooSmall& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal invariant breach: " << e.what() << "\n";
        return 4;
    }

    const std::string output = format == "text" ? render_text(rep) : render_json(rep);
    if (out_path.empty()) {
        std::cout << output;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return 2;
        }
        out << output;
    }
    return status;
}
