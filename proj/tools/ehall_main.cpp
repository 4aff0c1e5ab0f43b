// ehall: windowed verification suites for the presented algebra, batch style.
#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ehall/coproduct.hpp"
#include "ehall/report.hpp"
#include "ehall/shuffle.hpp"

using namespace ehall;

namespace {

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::pair<int, int> parse_range(const std::string& s) {
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(s);
            return {v, v};
        }
        int lo = std::stoi(s.substr(0, dots));
        int hi = std::stoi(s.substr(dots + 2));
        if (lo > hi) throw Usage("empty range: " + s);
        return {lo, hi};
    } catch (const Usage&) {
        throw;
    } catch (const std::exception&) {
        throw Usage("bad range: " + s);
    }
}

// "u=-4..4,th=3,n=2"; a bare "a..b" token is the u range
Window parse_window(const std::string& spec, Window w) {
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        auto eq = tok.find('=');
        std::string key = eq == std::string::npos ? "" : tok.substr(0, eq);
        std::string val = eq == std::string::npos ? tok : tok.substr(eq + 1);
        if (key == "" || key == "u") {
            auto [lo, hi] = parse_range(val);
            w.u_index_min = lo;
            w.u_index_max = hi;
        } else if (key == "th") {
            w.th_index_max = parse_range(val).second;
        } else if (key == "n") {
            w.n_max = parse_range(val).second;
        } else {
            throw Usage("unknown window key: " + key);
        }
    }
    return w;
}

std::string window_str(const Window& w) {
    std::ostringstream out;
    out << "u=" << w.u_index_min << ".." << w.u_index_max << ",th=" << w.th_index_max
        << ",n=" << w.n_max;
    return out.str();
}

std::string params_str(const std::vector<int>& ps) {
    std::string out = "(";
    for (std::size_t i = 0; i < ps.size(); ++i)
        out += (i ? "," : "") + std::to_string(ps[i]);
    return out + ")";
}

std::string bideg_str(Bidegree b) {
    return "(" + std::to_string(b.level) + "," + std::to_string(b.degree) + ")";
}

struct Options {
    std::string window_spec;
    std::vector<std::uint64_t> primes{kDefaultPrimes[0], kDefaultPrimes[1],
                                      kDefaultPrimes[2]};
    std::uint64_t seed = 42;
    std::string format = "json";
    std::string output;
    std::string mode = "exact";
    // per-command knobs
    std::string m_range = "-5..5";
    std::string grid_range = "-1..1";
    std::string param_range = "-2..2";
    std::string bidegree_spec = "2,1";
    int trials = 100;
    int max_dim = 6;
};

void echo_common(Report& rep, const Options& o, const Window& w) {
    rep.config["window"] = window_str(w);
    std::string ps;
    for (auto p : o.primes) ps += (ps.empty() ? "" : ",") + std::to_string(p);
    rep.config["primes"] = ps;
    rep.config["seed"] = std::to_string(o.seed);
    rep.config["format"] = o.format;
    rep.config["mode"] = o.mode;
}

Report run_relators(const Options& o, Window w) {
    Report rep;
    rep.command = "relators";
    echo_common(rep, o, w);
    for (const Relator& r : enumerate_relators(w, true)) {
        Record rec;
        rec.check_id = r.id();
        rec.family = family_name(r.family);
        rec.params = params_str(r.params);
        rec.bidegree = bideg_str(r.elem.bidegree());
        rec.status = "PASS";
        rec.data = r.elem.str();
        rep.records.push_back(std::move(rec));
    }
    return rep;
}

Report run_rank(const Options& o, Window w) {
    Report rep;
    rep.command = "rank";
    echo_common(rep, o, w);
    rep.config["bidegree"] = o.bidegree_spec;
    auto comma = o.bidegree_spec.find(',');
    if (comma == std::string::npos) throw Usage("--bidegree expects n,d or n,d1..d2");
    int level = parse_range(o.bidegree_spec.substr(0, comma)).first;
    auto [dlo, dhi] = parse_range(o.bidegree_spec.substr(comma + 1));
    for (std::uint64_t p : o.primes)
        for (int d = dlo; d <= dhi; ++d) {
            RankReport rr = rank_quotient({level, d}, w, p, o.seed);
            Record rec;
            rec.check_id = "rank" + bideg_str({level, d}) + "@" + std::to_string(p);
            rec.bidegree = bideg_str({level, d});
            rec.prime = p;
            rec.seed = o.seed;
            rec.status = "PASS";
            std::ostringstream data;
            data << "n_words=" << rr.n_words << ";relator_rank=" << rr.relator_rank
                 << ";quotient_rank=" << rr.quotient_rank;
            rec.data = data.str();
            rep.records.push_back(std::move(rec));
        }
    return rep;
}

Report run_check_cubic(const Options& o, Window w) {
    Report rep;
    rep.command = "check-cubic";
    echo_common(rep, o, w);
    rep.config["m"] = o.m_range;
    auto [lo, hi] = parse_range(o.m_range);
    auto uu = [](int d) { return AlgElem::gen(Generator::u(d)); };
    for (int m = lo; m <= hi; ++m) {
        Relator r = relator_cubic(m);
        bool ok = r.elem == commutator(commutator(uu(m + 1), uu(m + 3)), uu(m + 2));
        Record rec;
        rec.check_id = r.id();
        rec.family = family_name(r.family);
        rec.params = params_str(r.params);
        rec.bidegree = bideg_str(r.elem.bidegree());
        rec.status = ok ? "PASS" : "FAIL";
        rec.data = "residue vs nested commutator";
        rep.records.push_back(std::move(rec));
    }
    return rep;
}

Report run_check_R(const Options& o, Window w) {
    Report rep;
    rep.command = "check-R";
    echo_common(rep, o, w);
    rep.config["grid"] = o.grid_range;
    auto [lo, hi] = parse_range(o.grid_range);
    for (int m = lo; m <= hi; ++m)
        for (int n = lo; n <= hi; ++n)
            for (int l = lo; l <= hi; ++l) {
                Relator r = relator_R(m, n, l);
                Record rec;
                rec.check_id = r.id();
                rec.family = family_name(r.family);
                rec.params = params_str(r.params);
                rec.prime = o.primes.front();
                rec.seed = o.seed;
                if (r.elem.is_zero()) {
                    rec.status = "PASS";
                    rec.data = "identically zero";
                } else {
                    rec.bidegree = bideg_str(r.elem.bidegree());
                    auto cert = membership_checked(r.elem, w, o.primes, o.seed);
                    if (cert) {
                        rec.status = "PASS";
                        std::ostringstream data;
                        data << "certificate_terms=" << cert->combination.size()
                             << ";theta_cap=" << cert->theta_weight_cap;
                        rec.data = data.str();
                    } else {
                        rec.status = "INCONCLUSIVE";
                        rec.data = "no certificate in window";
                    }
                }
                rep.records.push_back(std::move(rec));
            }
    return rep;
}

Report run_check_delta(const Options& o, Window w) {
    Report rep;
    rep.command = "check-delta";
    echo_common(rep, o, w);
    EvalAssign a = generic_point(o.primes.front(), o.seed);
    std::vector<Relator> rels;
    for (const Relator& r : enumerate_relators(w, false))
        if (r.family != Family::CUBIC) rels.push_back(r); // CUBIC covered by eq1
    std::vector<CheckReport> reports = delta_check_relators(rels, w, a);
    for (std::size_t ri = 0; ri < rels.size(); ++ri) {
        const Relator& r = rels[ri];
        const CheckReport& cr = reports[ri];
        Record rec;
        rec.check_id = "delta:" + r.id();
        rec.family = family_name(r.family);
        rec.params = params_str(r.params);
        rec.bidegree = bideg_str(r.elem.bidegree());
        rec.prime = a.p;
        rec.seed = o.seed;
        rec.status = check_status_name(cr.status);
        int pass = 0, open = 0;
        for (const auto& cc : cr.components) {
            if (cc.status == CheckStatus::PASS) ++pass;
            if (cc.status == CheckStatus::INCONCLUSIVE) ++open;
        }
        std::ostringstream data;
        data << "components=" << cr.components.size() << ";pass=" << pass
             << ";truncated=" << open;
        rec.data = data.str();
        rep.records.push_back(std::move(rec));
    }
    return rep;
}

Report run_eq1(const Options& o, Window w) {
    Report rep;
    rep.command = "eq1";
    echo_common(rep, o, w);
    Eq1Decomposition eq = eq1_decompose(w);
    auto add = [&](const std::string& id, bool ok, const std::string& data) {
        Record rec;
        rec.check_id = id;
        rec.seed = o.seed;
        rec.status = ok ? "PASS" : "FAIL";
        rec.data = data;
        rep.records.push_back(std::move(rec));
    };
    add("eq1:term1", eq.term1_matches, "term1 = r (x) 1");
    add("eq1:term3", eq.term3_matches, "triple-Theta (x) nested commutator");
    bool evanish = true;
    for (std::uint64_t p : o.primes) {
        EvalAssign a = generic_point(p, o.seed);
        if (!oracle_tensor_zero(eq.E, a, 5)) evanish = false;
    }
    Record erec;
    erec.check_id = "eq1:E-vanish";
    erec.seed = o.seed;
    erec.status = evanish ? "PASS" : "FAIL";
    std::ostringstream edata;
    edata << "components=" << eq.E.components().size() << ";primes=" << o.primes.size();
    erec.data = edata.str();
    rep.records.push_back(std::move(erec));
    return rep;
}

Report run_oracle(const Options& o, Window w) {
    Report rep;
    rep.command = "oracle";
    echo_common(rep, o, w);
    rep.config["params"] = o.param_range;
    auto [plo, phi] = parse_range(o.param_range);
    EvalPointSet pts = draw_point_set(o.primes.front(), o.seed, 8, 4);
    for (const Relator& r : enumerate_relators(w, true)) {
        bool in_param_range = true;
        for (int p : r.params)
            if (p < plo || p > phi) in_param_range = false;
        if (!in_param_range) continue;
        bool ok = true;
        for (int lvl = 0; lvl <= 2; ++lvl)
            if (!rep_check_relator(r, lvl, pts)) ok = false;
        Record rec;
        rec.check_id = "oracle:" + r.id();
        rec.family = family_name(r.family);
        rec.params = params_str(r.params);
        rec.bidegree = bideg_str(r.elem.bidegree());
        rec.prime = pts.prime;
        rec.seed = o.seed;
        rec.status = ok ? "PASS" : "FAIL";
        rec.data = "probe levels 0..2";
        rep.records.push_back(std::move(rec));
    }
    // rank sandwich on one component: oracle lower bound vs quotient upper
    // bound, taken in the Theta-free window (the oracle models the
    // u-subalgebra; Theta-words have no independent image)
    auto comma = o.bidegree_spec.find(',');
    if (comma == std::string::npos) throw Usage("--bidegree expects n,d");
    Bidegree b{parse_range(o.bidegree_spec.substr(0, comma)).first,
               parse_range(o.bidegree_spec.substr(comma + 1)).first};
    Window wu{w.n_max, w.u_index_min, w.u_index_max, 0};
    std::vector<SymRat> imgs;
    for (const Word& word : component_words(b, wu))
        imgs.push_back(apply_word(word, SymRat::one()));
    EvalPointSet rpts = draw_point_set(o.primes.front(), o.seed,
                                       std::max(1, b.level), imgs.size() + 4);
    std::size_t lower = eval_rank(imgs, rpts);
    RankReport rr = rank_quotient(b, wu, o.primes.front(), o.seed);
    Record rec;
    rec.check_id = "sandwich" + bideg_str(b);
    rec.bidegree = bideg_str(b);
    rec.prime = o.primes.front();
    rec.seed = o.seed;
    rec.status = lower == rr.quotient_rank ? "PASS"
                 : lower < rr.quotient_rank ? "INCONCLUSIVE" : "FAIL";
    std::ostringstream data;
    data << "eval_rank=" << lower << ";quotient_rank=" << rr.quotient_rank;
    rec.data = data.str();
    rep.records.push_back(std::move(rec));
    return rep;
}

Report run_lemma_tensor(const Options& o, Window w) {
    Report rep;
    rep.command = "lemma-tensor";
    echo_common(rep, o, w);
    rep.config["trials"] = std::to_string(o.trials);
    rep.config["max_dim"] = std::to_string(o.max_dim);
    std::mt19937_64 rng(o.seed);
    bool ok = kernel_tensor_check(o.trials, o.max_dim, o.primes.front(), rng);
    Record rec;
    rec.check_id = "lemma-tensor";
    rec.prime = o.primes.front();
    rec.seed = o.seed;
    rec.status = ok ? "PASS" : "FAIL";
    rec.data = "trials=" + std::to_string(o.trials) +
               ";max_dim=" + std::to_string(o.max_dim);
    rep.records.push_back(std::move(rec));
    return rep;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"windowed verification suites for the presented algebra"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config");

    Options o;
    app.add_option("--window", o.window_spec, "window spec, e.g. u=-4..4,th=3,n=2");
    app.add_option("--prime", o.primes, "31-bit prime(s)");
    app.add_option("--seed", o.seed, "deterministic seed");
    app.add_option("--format", o.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--output", o.output, "write the report here instead of stdout");
    app.add_option("--mode", o.mode, "exact or modular")
        ->check(CLI::IsMember({"exact", "modular"}));

    auto* relators = app.add_subcommand("relators", "dump in-window relators");
    auto* rank = app.add_subcommand("rank", "component rank report");
    rank->add_option("--bidegree", o.bidegree_spec, "n,d or n,d1..d2");
    auto* cubic = app.add_subcommand("check-cubic", "residue vs nested commutator");
    cubic->add_option("--m", o.m_range, "parameter range a..b");
    auto* checkR = app.add_subcommand("check-R", "membership for the R grid");
    checkR->add_option("--grid", o.grid_range, "grid range a..b for m,n,l");
    auto* delta_cmd = app.add_subcommand("check-delta", "coproduct respects relators");
    auto* eq1_cmd = app.add_subcommand("eq1", "three-term coproduct decomposition");
    auto* oracle_cmd = app.add_subcommand("oracle", "representation checks + sandwich");
    oracle_cmd->add_option("--params", o.param_range, "relator parameter range a..b");
    oracle_cmd->add_option("--bidegree", o.bidegree_spec, "sandwich component n,d");
    auto* lemma = app.add_subcommand("lemma-tensor", "tensor-square kernel lemma");
    lemma->add_option("--trials", o.trials, "instance count");
    lemma->add_option("--max-dim", o.max_dim, "max space dimension");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        auto t0 = std::chrono::steady_clock::now();
        Report rep;
        if (relators->parsed()) {
            rep = run_relators(o, parse_window(o.window_spec, Window{3, -3, 3, 2}));
        } else if (rank->parsed()) {
            rep = run_rank(o, parse_window(o.window_spec, Window{3, -3, 3, 0}));
        } else if (cubic->parsed()) {
            rep = run_check_cubic(o, parse_window(o.window_spec, Window{3, -8, 8, 0}));
        } else if (checkR->parsed()) {
            rep = run_check_R(o, parse_window(o.window_spec, Window{3, -5, 5, 0}));
        } else if (delta_cmd->parsed()) {
            rep = run_check_delta(o, parse_window(o.window_spec, Window{2, -4, 4, 4}));
        } else if (eq1_cmd->parsed()) {
            rep = run_eq1(o, parse_window(o.window_spec, Window{3, -6, 6, 6}));
        } else if (oracle_cmd->parsed()) {
            rep = run_oracle(o, parse_window(o.window_spec, Window{2, -2, 2, 2}));
        } else {
            rep = run_lemma_tensor(o, parse_window(o.window_spec, Window{3, -3, 3, 0}));
        }
        rep.wall_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
        std::string doc = o.format == "csv" ? rep.to_csv() : rep.to_json();
        if (o.output.empty()) {
            std::cout << doc;
        } else {
            std::ofstream out(o.output);
            if (!out) throw Usage("cannot open output file: " + o.output);
            out << doc;
        }
        return rep.exit_code();
    } catch (const Usage& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
