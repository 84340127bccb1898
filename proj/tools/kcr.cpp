#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kcr/families.hpp"
#include "kcr/io.hpp"
#include "kcr/sweep.hpp"

using namespace kcr;
using io::json;

namespace {

enum Exit { Ok = 0, InputFailure = 1, Mismatch = 2, UnknownStrict = 3 };

struct Options {
    std::string input = "-";
    std::string format = "table";
    int jobs = 0;
    int max_rank = 4;
    bool strict = false;
    int arity = 0;
    std::int64_t lemma_min = 2;
    std::int64_t lemma_max = 0;
};

json read_input(const std::string& path) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw io::InputError(path + ": cannot open");
        buf << in.rdbuf();
    }
    try {
        return json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw io::InputError(std::string("input is not valid JSON: ") + e.what());
    }
}

void check_ranks(const std::vector<GraphSpec>& specs, int max_rank) {
    for (const auto& s : specs) {
        if (s.rank() > max_rank)
            throw io::InputError(s.to_string() + ": rank " + std::to_string(s.rank()) + " exceeds --max-rank " +
                                 std::to_string(max_rank));
        const auto report = validate(s);
        if (!report.ok()) {
            std::string msg = s.to_string() + ":";
            for (const auto& p : report.problems) msg += " " + p + ";";
            throw io::InputError(msg);
        }
    }
}

std::optional<FamilyInvariants> invariants_if_known(const GraphSpec& spec) {
    if (spec.rank() != 3 && spec.rank() != 4) return std::nullopt;
    return closed_form(spec);
}

std::string header(const GraphSpec& spec, const std::optional<FamilyInvariants>& inv) {
    std::string s = spec.to_string();
    if (inv)
        s += "  " + inv->family_case.label() + "  g=" + inv->g.get_str() + " h=" + inv->h.get_str() +
             " k=" + inv->k.get_str();
    return s + "\n";
}

json base_document(const GraphSpec& spec, const std::optional<FamilyInvariants>& inv) {
    return {{"spec", io::spec_to_json(spec)}, {"invariants", inv ? io::invariants_to_json(*inv) : json(nullptr)}};
}

std::string unknown_status(const Convergence& conv) {
    const auto u = conv.unknowns();
    if (u.empty()) return "unknown convergence";
    const auto& c = u.front();
    return "unknown differential at (r=" + std::to_string(c.r) + ", p=" + std::to_string(c.p) +
           ", q=" + std::to_string(c.q) + ", " + to_string(c.part) + ")";
}

json unknown_document(json doc, const Convergence& conv) {
    doc["status"] = "unknown";
    doc["detail"] = unknown_status(conv);
    json certs = json::array();
    for (const auto& c : conv.certificates) certs.push_back(io::certificate_to_json(c));
    doc["certificates"] = certs;
    doc["ko"] = nullptr;
    doc["ku"] = nullptr;
    doc["resolved"] = false;
    return doc;
}

void unresolved_note(std::ostream& out, const KTheoryTable& t) {
    std::string s;
    for (int n = 0; n < 8; ++n)
        if (!t.ko[n].resolved()) s += " KO_" + std::to_string(n);
    for (int n = 0; n < 8; ++n)
        if (!t.ku[n].resolved()) s += " KU_" + std::to_string(n);
    if (!s.empty()) out << "unresolved extensions:" << s << "\n";
}

int run_compute(const Options& opt, bool verify) {
    const auto specs = io::parse_specs(read_input(opt.input));
    check_ranks(specs, opt.max_rank);
    bool unknown = false, mismatch = false;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const auto& spec = specs[i];
        const auto inv = invariants_if_known(spec);
        if (verify && !inv) throw UnsupportedRank(spec.rank());
        const PipelineResult res = compute_k_theory(spec);
        json doc = base_document(spec, inv);
        std::string text = header(spec, inv);
        if (!res.table) {
            unknown = true;
            doc = unknown_document(doc, res.convergence);
            text += "status: " + unknown_status(res.convergence) + "\n";
        } else {
            doc.update(io::table_to_json(*res.table));
            doc["status"] = "converged";
            text += io::format_table(*res.table);
            std::ostringstream note;
            unresolved_note(note, *res.table);
            text += note.str();
        }
        if (verify) {
            const KTheoryTable want = expected_table(spec);
            json exp = io::table_to_json(want);
            doc["expected"] = {{"ko", exp["ko"]}, {"ku", exp["ku"]}};
            std::string verdict = "unknown";
            if (res.table) {
                verdict = same_groups(*res.table, want) ? "match" : "mismatch";
                if (verdict == "mismatch") {
                    mismatch = true;
                    text += "expected:\n" + io::format_table(want);
                }
            }
            doc["verdict"] = verdict;
            text += "verdict: " + verdict + "\n";
        }
        if (opt.format == "structured") {
            std::cout << doc.dump() << "\n";
        } else {
            if (i) std::cout << "\n";
            std::cout << text;
        }
    }
    if (mismatch) return Mismatch;
    if (unknown && opt.strict) return UnknownStrict;
    return Ok;
}

int run_expected(const Options& opt) {
    const auto specs = io::parse_specs(read_input(opt.input));
    check_ranks(specs, opt.max_rank);
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const auto& spec = specs[i];
        const FamilyInvariants inv = closed_form(spec);
        const KTheoryTable t = expected_table(spec);
        if (opt.format == "structured") {
            json doc = base_document(spec, inv);
            doc.update(io::table_to_json(t));
            doc["status"] = "closed_form";
            std::cout << doc.dump() << "\n";
            continue;
        }
        if (i) std::cout << "\n";
        std::cout << header(spec, inv) << io::format_table(t);
        if (inv.g != 1) {
            std::cout << "cuntz:";
            for (const auto& c : cuntz_decomposition(spec)) std::cout << " " << c.to_string();
            std::cout << "\n";
        }
    }
    return Ok;
}

int run_sweep(const Options& opt) {
    const auto specs = io::expand_sweep(read_input(opt.input));
    check_ranks(specs, opt.max_rank);
    const auto verdicts = sweep::verify_instances(specs, opt.jobs);
    std::size_t counts[4] = {0, 0, 0, 0};
    for (const auto& v : verdicts) ++counts[static_cast<int>(v.verdict)];
    const auto n_match = counts[static_cast<int>(sweep::Verdict::Match)];
    const auto n_mismatch = counts[static_cast<int>(sweep::Verdict::Mismatch)];
    const auto n_unknown = counts[static_cast<int>(sweep::Verdict::Unknown)];
    const auto n_error = counts[static_cast<int>(sweep::Verdict::Error)];

    if (opt.format == "structured") {
        for (const auto& v : verdicts)
            std::cout << json{{"spec", io::spec_to_json(v.spec)}, {"verdict", to_string(v.verdict)}, {"detail", v.detail}}
                             .dump()
                      << "\n";
        std::cout << json{{"summary",
                           {{"instances", verdicts.size()},
                            {"match", n_match},
                            {"mismatch", n_mismatch},
                            {"unknown", n_unknown},
                            {"error", n_error}}}}
                         .dump()
                  << "\n";
    } else {
        for (const auto& v : verdicts)
            if (v.verdict != sweep::Verdict::Match)
                std::cout << v.spec.to_string() << "  " << to_string(v.verdict) << "  " << v.detail << "\n";
        if (n_match == verdicts.size())
            std::cout << "all " << verdicts.size() << " instances match\n";
        else
            std::cout << n_match << " of " << verdicts.size() << " instances match, " << n_mismatch << " mismatch, "
                      << n_unknown << " unknown, " << n_error << " error\n";
    }
    if (n_error) return InputFailure;
    if (n_mismatch) return Mismatch;
    if (n_unknown && opt.strict) return UnknownStrict;
    return Ok;
}

int run_lemmas(const Options& opt) {
    struct Range {
        int arity;
        std::int64_t lo, hi;
    };
    std::vector<Range> ranges;
    if (opt.arity) {
        if (opt.lemma_max == 0) throw io::InputError("--max is required with --arity");
        ranges.push_back({opt.arity, opt.lemma_min, opt.lemma_max});
    } else {
        ranges = {{2, 2, 40}, {3, 2, 20}, {4, 2, 20}};
    }
    bool all = true;
    for (const auto& r : ranges) {
        const auto rep = sweep::verify_lemmas(r.arity, r.lo, r.hi, opt.jobs);
        all = all && rep.holds();
        if (opt.format == "structured") {
            std::cout << json{{"arity", rep.arity},
                              {"min", rep.lo},
                              {"max", rep.hi},
                              {"tuples", rep.tuples},
                              {"equal_gcd_failures", rep.equal_gcd_failures},
                              {"hk_failures", rep.hk_failures},
                              {"counterexamples", rep.counterexamples},
                              {"holds", rep.holds()}}
                             .dump()
                      << "\n";
        } else {
            std::cout << "arity " << rep.arity << ", entries in [" << rep.lo << ", " << rep.hi << "]: " << rep.tuples
                      << " tuples, " << (rep.holds() ? "both lemmas hold" : "FAILED") << "\n";
            for (const auto& t : rep.counterexamples) {
                std::cout << "  counterexample:";
                for (auto x : t) std::cout << " " << x;
                std::cout << "\n";
            }
        }
    }
    return all ? Ok : Mismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"K-theory of two-vertex rank-k graph algebras"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&opt](CLI::App* sub) {
        sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"table", "structured"}));
        sub->add_option("--jobs", opt.jobs, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
    };
    auto add_specs = [&opt, &add_common](CLI::App* sub) {
        sub->add_option("--input", opt.input, "Spec document, '-' for stdin");
        sub->add_option("--max-rank", opt.max_rank, "Largest rank accepted")->check(CLI::Range(1, 6));
        sub->add_flag("--strict", opt.strict, "Exit 3 if any differential stays uncertified");
        add_common(sub);
    };

    auto* compute = app.add_subcommand("compute", "Run the spectral sequence");
    auto* expected = app.add_subcommand("expected", "Closed-form tables");
    auto* verify = app.add_subcommand("verify", "Spectral sequence against closed form");
    auto* sweep_cmd = app.add_subcommand("sweep", "Verify every instance of a parameter grid");
    auto* lemmas = app.add_subcommand("lemmas", "Brute-force the gcd lemmas");
    for (auto* sub : {compute, expected, verify, sweep_cmd}) add_specs(sub);
    add_common(lemmas);
    lemmas->add_option("--arity", opt.arity, "Tuple length")->check(CLI::Range(2, 8));
    lemmas->add_option("--min", opt.lemma_min, "Smallest entry");
    lemmas->add_option("--max", opt.lemma_max, "Largest entry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Ok : InputFailure;
    }

    try {
        if (*compute) return run_compute(opt, false);
        if (*verify) return run_compute(opt, true);
        if (*expected) return run_expected(opt);
        if (*sweep_cmd) return run_sweep(opt);
        return run_lemmas(opt);
    } catch (const io::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const InvalidSpec& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const UnsupportedRank& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return InputFailure;
}
