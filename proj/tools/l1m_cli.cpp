// Batch command-line interface: reproducible reports over the exact engine.
// Subcommands: betti, cocycles, massey, singular, resolution, thread, verify.
// Exit codes: 0 success, 1 verification failure, 2 budget exceeded,
// 3 parse error.

#include "l1m/massey.hpp"
#include "l1m/resolution.hpp"
#include "l1m/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>

using namespace l1m;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitBudget = 2;
constexpr int kExitParse = 3;

struct Budget {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds = 600.0;
    bool exceeded() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() > seconds;
    }
};

Json envelope(const std::string& command, Json parameters, Json payload) {
    Json j;
    j["schema"] = "l1m-report-v1";
    j["engine"] = verify::kEngineVersion;
    j["command"] = command;
    j["parameters"] = std::move(parameters);
    j["deterministic"] = true;
    j["payload"] = std::move(payload);
    return j;
}

std::string mono_str(const Mono& m) {
    std::string s;
    for (size_t i = 0; i < m.size(); ++i) {
        if (i) s += "^";
        s += "e" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

std::string cochain_str(const Cochain& c) {
    if (c.empty()) return "0";
    std::string s;
    for (const auto& [m, coef] : c) {
        if (!s.empty()) s += " + ";
        s += "(" + coef.str() + ")*" + mono_str(m);
    }
    return s;
}

Json cochain_json(const Cochain& c) {
    Json j = Json::array();
    for (const auto& [m, coef] : c) {
        Json term;
        term["monomial"] = m;
        term["coeff"] = coef.str();
        j.push_back(term);
    }
    return j;
}

// Resolves one input token of a massey spec-string: e1, e2, g<k>+, g<k>-,
// h<q>w<w>, each optionally suffixed ^<count>.
std::vector<Cochain> parse_token(const std::string& token) {
    std::string base = token;
    int repeat = 1;
    if (auto caret = token.find('^'); caret != std::string::npos) {
        base = token.substr(0, caret);
        repeat = std::stoi(token.substr(caret + 1));
        if (repeat < 1) throw std::invalid_argument("repeat count must be positive");
    }
    Cochain rep;
    if (base == "e1") {
        rep = Cochain{{{1}, Rational(1)}};
    } else if (base == "e2") {
        rep = Cochain{{{2}, Rational(1)}};
    } else if (base.size() >= 3 && base.front() == 'g' && (base.back() == '+' || base.back() == '-')) {
        int q = std::stoi(base.substr(1, base.size() - 2));
        long w = base.back() == '+' ? pent_plus(q) : pent_minus(q);
        auto reps = cohomology_block(q, static_cast<int>(w)).representatives();
        if (reps.size() != 1) throw std::invalid_argument("generator block not one-dimensional");
        rep = reps[0];
    } else if (base.size() >= 4 && base.front() == 'h') {
        auto wpos = base.find('w');
        if (wpos == std::string::npos) throw std::invalid_argument("bad class token: " + token);
        int q = std::stoi(base.substr(1, wpos - 1));
        int w = std::stoi(base.substr(wpos + 1));
        auto reps = cohomology_block(q, w).representatives();
        if (reps.empty()) throw std::invalid_argument("zero cohomology block: " + token);
        rep = reps[0];
    } else {
        throw std::invalid_argument("unrecognized class token: " + token);
    }
    return std::vector<Cochain>(repeat, rep);
}

std::vector<Cochain> parse_spec_string(const std::string& spec) {
    std::vector<Cochain> out;
    std::string token;
    std::istringstream is(spec);
    while (std::getline(is, token, ',')) {
        if (token.empty()) continue;
        for (auto& c : parse_token(token)) out.push_back(std::move(c));
    }
    if (out.size() < 2) throw std::invalid_argument("need at least two input classes");
    return out;
}

ThreadSpec parse_module(const std::string& name, const Rational& alpha, const Rational& lambda,
                        const Rational& mu) {
    if (name == "A") return ThreadSpec::a_module(alpha);
    if (name == "F") return ThreadSpec::f_module(lambda, mu);
    if (name == "Mtilde") return ThreadSpec::mtilde();
    if (name == "MtildeNonzero") return ThreadSpec::mtilde_nonzero();
    if (name == "trivial") return ThreadSpec::trivial();
    throw std::invalid_argument("unknown module: " + name + " (A, F, Mtilde, MtildeNonzero, trivial)");
}

void emit(const Json& j, const std::string& format, const std::string& human) {
    if (format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << human;
}

std::string trivial_str(Trivial t) {
    switch (t) {
        case Trivial::Yes: return "yes";
        case Trivial::No: return "no";
        default: return "undetermined";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cohomology and Massey products of the positive Witt part"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "table";
    double budget_seconds = 600.0;
    app.add_option("--format", format, "output format: table or json")
        ->check(CLI::IsMember({"table", "json"}));
    app.add_option("--budget-seconds", budget_seconds, "soft time budget for long commands");

    // betti
    auto* betti = app.add_subcommand("betti", "Betti table of H^q_mu(L1)");
    int qmax = 3, wmax = 16;
    betti->add_option("--qmax", qmax, "largest degree");
    betti->add_option("--wmax", wmax, "largest weight");

    // cocycles
    auto* cocycles = app.add_subcommand("cocycles", "representative cocycles of one block");
    int cq = 2, cw = 5;
    cocycles->add_option("--q", cq, "degree");
    cocycles->add_option("--w", cw, "weight");

    // massey
    auto* massey = app.add_subcommand("massey", "Massey product verdict for a list of classes");
    std::string spec_string;
    int rigidity_target = 0;
    massey->add_option("spec", spec_string, "comma-separated classes, e.g. e1,e2,e2 or e1^2,e2,e1,g2+")
        ->required();
    massey->add_option("--rigidity-target", rigidity_target,
                       "also run the weight-minimality certification against this target weight");

    // singular
    auto* singular = app.add_subcommand("singular", "Virasoro singular vector operator S_{p,q}(t)");
    int sp = 2, sq = 1;
    std::string st = "-3/2";
    int level_cap = 20;
    singular->add_option("--p", sp, "p")->required();
    singular->add_option("--q", sq, "q")->required();
    singular->add_option("--t", st, "rational t as num/den");
    singular->add_option("--level-cap", level_cap, "refuse levels pq above this bound");

    // resolution
    auto* resolution = app.add_subcommand("resolution", "resolution stages and exactness");
    int rk = 1;
    resolution->add_option("--k", rk, "check delta_k . delta_{k+1} = 0 and print stage k");

    // thread
    auto* thread = app.add_subcommand("thread", "thread-module cohomology via the resolution");
    std::string module_name = "Mtilde";
    std::string alpha_str = "1/6", lambda_str = "0", mu_str = "0";
    int bm = -2, bn = 3, tqmax = 3;
    long ts_lo = -10, ts_hi = 10;
    bool do_cross = false;
    thread->add_option("--module", module_name, "A | F | Mtilde | MtildeNonzero | trivial");
    thread->add_option("--alpha", alpha_str, "alpha for A");
    thread->add_option("--lambda", lambda_str, "lambda for F");
    thread->add_option("--mu", mu_str, "mu for F");
    thread->add_option("--lo", bm, "subquotient lower bound");
    thread->add_option("--hi", bn, "subquotient upper bound");
    thread->add_option("--qmax", tqmax, "largest degree");
    thread->add_option("--slo", ts_lo, "lowest grading");
    thread->add_option("--shi", ts_hi, "highest grading");
    thread->add_flag("--cross-validate", do_cross, "compare against the Chevalley-Eilenberg route");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a named verification suite");
    std::string suite = "all";
    verify_cmd->add_option("suite", suite,
                           "goncharova | bsa | verma | thread | resolution | massey | ffr | properties | all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    Budget budget;
    budget.seconds = budget_seconds;

    try {
        if (*betti) {
            if (qmax > 5 || wmax > 40) {
                std::cerr << "budget exceeded: qmax <= 5 and wmax <= 40\n";
                return kExitBudget;
            }
            Json table = Json::array();
            std::ostringstream human;
            human << "dim H^q_mu(L1), q <= " << qmax << ", mu <= " << wmax << "\n";
            human << "  q\\mu";
            for (int w = 1; w <= wmax; ++w) human << " " << w % 10;
            human << "\n";
            for (int q = 1; q <= qmax; ++q) {
                human << "   " << q << "  ";
                for (int w = 1; w <= wmax; ++w) {
                    if (budget.exceeded()) return kExitBudget;
                    long d = cohomology_dim(q, w);
                    human << " " << (d == 0 ? "." : std::to_string(d));
                    if (d != 0) table.push_back(Json{{"q", q}, {"mu", w}, {"dim", d}});
                }
                human << "\n";
            }
            human << "nonzero cells sit at the pentagonal weights (3q^2 -+ q)/2\n";
            emit(envelope("betti", Json{{"qmax", qmax}, {"wmax", wmax}}, table), format, human.str());
            return kExitOk;
        }

        if (*cocycles) {
            auto rep = cohomology(cq, cw);
            Json payload;
            payload["degree"] = cq;
            payload["weight"] = cw;
            payload["dim"] = rep.dim;
            payload["boundary_dim"] = rep.boundary_dim;
            payload["representatives"] = Json::array();
            std::ostringstream human;
            human << "H^" << cq << "_" << cw << ": dim " << rep.dim << ", coboundary dim "
                  << rep.boundary_dim << "\n";
            for (const auto& r : rep.representatives) {
                payload["representatives"].push_back(cochain_json(r));
                human << "  " << cochain_str(r) << "\n";
            }
            emit(envelope("cocycles", Json{{"q", cq}, {"w", cw}}, payload), format, human.str());
            return kExitOk;
        }

        if (*massey) {
            std::vector<Cochain> inputs = parse_spec_string(spec_string);
            MasseyVerdict v = product_set(inputs);
            Json payload;
            payload["inputs"] = Json::array();
            std::ostringstream human;
            human << "massey " << spec_string << "\n";
            human << "label table (fixed representatives):\n";
            for (const auto& c : inputs) {
                payload["inputs"].push_back(cochain_json(c));
                human << "  " << cochain_str(c) << "\n";
            }
            payload["defined"] = v.defined;
            if (!v.defined) {
                payload["undefined_reason"] = v.undefined_reason;
                human << "verdict: UNDEFINED (" << v.undefined_reason << ")\n";
                emit(envelope("massey", Json{{"spec", spec_string}}, payload), format, human.str());
                return kExitOk;
            }
            const char* kind = v.kind == MasseyVerdict::Kind::Point ? "point"
                               : v.kind == MasseyVerdict::Kind::Affine ? "affine"
                                                                        : "search-bounded";
            payload["kind"] = kind;
            payload["value_dim"] = v.value_dim;
            payload["trivial"] = trivial_str(v.trivial);
            payload["degree"] = v.degree;
            payload["parameter_count"] = v.param_count;
            payload["blocks"] = Json::array();
            for (size_t i = 0; i < v.block_weights.size(); ++i)
                payload["blocks"].push_back(Json{{"weight", v.block_weights[i]},
                                                 {"h_dim", v.block_dims[i]}});
            Json offs = Json::array();
            for (const auto& x : v.offset) offs.push_back(x.str());
            payload["offset"] = offs;
            Json dirs = Json::array();
            for (const auto& d : v.directions) {
                Json dd = Json::array();
                for (const auto& x : d) dd.push_back(x.str());
                dirs.push_back(dd);
            }
            payload["directions"] = dirs;
            payload["certificate_corner"] = cochain_json(v.corner_cocycle);
            Json cert = Json::array();
            for (const auto& [slot, c] : v.certificate.a) {
                Json entry;
                entry["slot"] = Json::array({slot.first, slot.second});
                entry["cochain"] = cochain_json(constant_part(c));
                cert.push_back(entry);
            }
            payload["certificate_connection"] = cert;

            human << "degree " << v.degree << ", value set: " << kind;
            if (v.kind == MasseyVerdict::Kind::Affine) human << " (dim " << v.value_dim << ")";
            human << ", trivial: " << trivial_str(v.trivial) << "\n";
            human << "blocks:";
            for (size_t i = 0; i < v.block_weights.size(); ++i)
                human << " H_" << v.block_weights[i] << "=" << v.offset[i].str();
            human << "\ncorner cocycle: " << cochain_str(v.corner_cocycle) << "\n";

            if (rigidity_target > 0) {
                RigidityReport rr = rigidity_check(inputs, rigidity_target);
                payload["rigidity"] = Json{{"nontrivial", rr.nontrivial},
                                           {"single_valued", rr.single_valued},
                                           {"lower_blocks_vanish", rr.lower_blocks_vanish},
                                           {"value_dim", rr.value_dim}};
                human << "rigidity vs weight " << rigidity_target << ": nontrivial="
                      << rr.nontrivial << " single_valued=" << rr.single_valued << "\n";
            }
            emit(envelope("massey", Json{{"spec", spec_string}}, payload), format, human.str());
            return kExitOk;
        }

        if (*singular) {
            if (sp < 1 || sq < 1) {
                std::cerr << "parse error: p, q >= 1\n";
                return kExitParse;
            }
            if (sp * sq > level_cap) {
                std::cerr << "budget exceeded: level " << sp * sq << " > cap " << level_cap << "\n";
                return kExitBudget;
            }
            Rational t = Rational::parse(st);
            UEAElement op = as_operator(singular_vector(sp, sq, t));
            Json payload;
            payload["p"] = sp;
            payload["q"] = sq;
            payload["t"] = t.str();
            VermaParams params = VermaParams::from_pqt(sp, sq, t);
            payload["h"] = params.h.str();
            payload["c"] = params.c.str();
            Json terms = Json::array();
            for (const auto& [m, coef] : op.terms()) {
                Json term;
                term["monomial"] = m;
                term["coeff"] = coef.eval(Rational(0)).str();
                terms.push_back(term);
            }
            payload["operator"] = terms;
            std::ostringstream human;
            human << "S_{" << sp << "," << sq << "}(" << t.str() << ") over V(h=" << params.h.str()
                  << ", c=" << params.c.str() << "):\n  " << op.str() << "\n";
            emit(envelope("singular", Json{{"p", sp}, {"q", sq}, {"t", t.str()}}, payload), format,
                 human.str());
            return kExitOk;
        }

        if (*resolution) {
            verify_exactness(rk);
            const ResolutionStage& st_ = delta_stage(std::max(rk, 1));
            Json payload;
            payload["k"] = rk;
            payload["exact"] = true;
            Json rows = Json::array();
            std::ostringstream human;
            human << "delta_" << rk << " . delta_" << rk + 1 << " = 0 verified\n";
            human << "stage " << std::max(rk, 1) << " entries:\n";
            for (const auto& row : st_.entries) {
                Json jrow = Json::array();
                for (const auto& e : row) {
                    jrow.push_back(e.str());
                    human << "  " << e.str() << "\n";
                }
                rows.push_back(jrow);
            }
            payload["stage_entries"] = rows;
            emit(envelope("resolution", Json{{"k", rk}}, payload), format, human.str());
            return kExitOk;
        }

        if (*thread) {
            ThreadSpec spec = parse_module(module_name, Rational::parse(alpha_str),
                                           Rational::parse(lambda_str), Rational::parse(mu_str));
            if (module_name != "trivial") spec = spec.with_bounds(bm, bn);
            Json payload;
            payload["module"] = spec.name();
            payload["qmax"] = tqmax;
            Json rows = Json::array();
            std::ostringstream human;
            human << "H^q_s(L1, " << spec.name() << ") via the resolution, q <= " << tqmax << "\n";
            human << "   s :";
            for (int q = 0; q <= tqmax; ++q) human << " q" << q;
            human << (do_cross ? "   (cross-validated)" : "") << "\n";
            for (long s = ts_lo; s <= ts_hi; ++s) {
                if (budget.exceeded()) return kExitBudget;
                auto rep = thread_cohomology(spec, s, tqmax);
                Json row;
                row["s"] = s;
                row["dims"] = rep.dims;
                if (do_cross) {
                    auto mm = cross_validate(spec, s, tqmax);
                    row["cross_validated"] = !mm.has_value();
                    if (mm) {
                        std::cerr << "cross-validation mismatch at s=" << s << " degree "
                                  << mm->degree << "\n";
                        return kExitVerification;
                    }
                }
                rows.push_back(row);
                human << (s < 0 ? "  " : "   ") << s << " :";
                for (long d : rep.dims) human << "  " << d;
                human << "\n";
            }
            payload["table"] = rows;
            emit(envelope("thread",
                          Json{{"module", spec.name()}, {"slo", ts_lo}, {"shi", ts_hi}, {"qmax", tqmax}},
                          payload),
                 format, human.str());
            return kExitOk;
        }

        if (*verify_cmd) {
            auto results = l1m::verify::run_suite(suite);
            Json payload = Json::array();
            std::ostringstream human;
            bool all_pass = true;
            for (const auto& r : results) {
                all_pass = all_pass && r.pass;
                payload.push_back(Json{{"id", r.id}, {"name", r.name}, {"pass", r.pass},
                                       {"detail", r.detail}});
                human << (r.pass ? "PASS " : "FAIL ") << r.id;
                if (!r.pass) human << "  " << r.detail;
                human << "\n";
            }
            human << (all_pass ? "suite passed\n" : "suite FAILED\n");
            emit(envelope("verify", Json{{"suite", suite}}, payload), format, human.str());
            if (budget.exceeded()) return kExitBudget;
            return all_pass ? kExitOk : kExitVerification;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitOk;
}
