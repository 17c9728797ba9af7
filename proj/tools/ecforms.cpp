// ecforms: curve analysis, volcano descent, model conversion, CM
// classification, floor-invariant counts, and exhaustive verification
// sweeps over F_p.
#include <cstdio>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ec/cm.hpp"
#include "ec/errors.hpp"
#include "ec/forms.hpp"
#include "ec/isogeny.hpp"
#include "ec/sweeps.hpp"

using json = nlohmann::ordered_json;
using namespace ec;

namespace {

const char* type_name(TorsionType t) {
    switch (t) {
    case TorsionType::None: return "none";
    case TorsionType::I: return "I";
    default: return "III";
    }
}

const char* montgomery_name(MontgomeryColumn m) {
    switch (m) {
    case MontgomeryColumn::Yes: return "yes";
    case MontgomeryColumn::No: return "no";
    default: return "undetermined";
    }
}

const char* edwards_name(EdwardsColumn e) {
    switch (e) {
    case EdwardsColumn::Complete: return "complete";
    case EdwardsColumn::TwistedNotComplete: return "twisted, not complete";
    case EdwardsColumn::None: return "none";
    default: return "twisted at best";
    }
}

std::string curve_str(const Weierstrass& E) {
    return "(" + std::to_string(E.a2) + ", " + std::to_string(E.a4) + ", " +
           std::to_string(E.a6) + ")";
}

std::string pattern_str(const std::vector<int>& degs) {
    std::string s;
    for (size_t i = 0; i < degs.size(); ++i) s += (i ? "+" : "") + std::to_string(degs[i]);
    return s.empty() ? "-" : s;
}

json point_json(const Point& P) {
    if (P.infinity) return json{{"infinity", true}};
    return json{{"x", P.x}, {"y", P.y}};
}

json curve_json(const Weierstrass& E) {
    return json{{"a2", E.a2}, {"a4", E.a4}, {"a6", E.a6}};
}

std::vector<u64> primes_in(u64 lo, u64 hi) {
    std::vector<u64> ps;
    for (u64 p = lo; p <= hi; ++p)
        if (is_prime_u64(p) && p > 3) ps.push_back(p);
    return ps;
}

int cmd_analyze(u64 p, u64 a2, u64 a4, u64 a6, bool as_json) {
    Fp F(p);
    Weierstrass E = make_curve(F, a2, a4, a6);
    TwoTorsionReport rep = classify_two_torsion(E);
    u64 delta = discriminant(E);
    int chi_delta = F.legendre(delta);

    json out{{"p", p},          {"curve", curve_json(E)},
             {"delta", delta},  {"legendre_delta", chi_delta},
             {"j", j_invariant(E)}, {"torsion_type", type_name(rep.type)},
             {"two_torsion_roots", rep.roots}};
    json torsion4 = json::array();
    for (const auto& P : rep.four_torsion) torsion4.push_back(point_json(P));
    out["four_torsion"] = torsion4;

    if (rep.type == TorsionType::I) {
        out["x0"] = rep.x0;
        out["C"] = rep.C;
        out["D"] = rep.D;
        out["D2"] = rep.D2;
        out["legendre_D2"] = F.legendre(rep.D2);
        F4Factorization f4 = split_f4_type_one(F, rep.x0, rep.C, rep.D);
        auto predicted = predict_splitting(F, rep.D2);
        auto actual = std::make_pair(factor_degrees(F, f4.P2), factor_degrees(F, f4.P4));
        out["splitting"] = {{"P2_predicted", predicted.first},
                            {"P2_actual", actual.first},
                            {"P4_predicted", predicted.second},
                            {"P4_actual", actual.second}};
        if (predicted != actual) throw consistency_error("f4 splitting disagrees with the table");
    }

    if (as_json) {
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "curve       p=" << p << " " << curve_str(E) << "\n";
    std::cout << "delta       " << delta << "  (legendre " << chi_delta << ")\n";
    std::cout << "j           " << j_invariant(E) << "\n";
    std::cout << "torsion     type " << type_name(rep.type) << "\n";
    std::cout << "2-torsion   {";
    for (size_t i = 0; i < rep.roots.size(); ++i) std::cout << (i ? ", " : "") << rep.roots[i];
    std::cout << "}\n";
    if (rep.type == TorsionType::I) {
        std::cout << "x0 C D      " << rep.x0 << " " << rep.C << " " << rep.D << "\n";
        std::cout << "D2          " << rep.D2 << "  (legendre " << F.legendre(rep.D2) << ")\n";
        F4Factorization f4 = split_f4_type_one(F, rep.x0, rep.C, rep.D);
        std::cout << "f4 split    P2 " << pattern_str(factor_degrees(F, f4.P2)) << ", P4 "
                  << pattern_str(factor_degrees(F, f4.P4)) << "\n";
    }
    std::cout << "4-torsion   ";
    if (rep.four_torsion.empty()) {
        std::cout << "none\n";
    } else {
        for (size_t i = 0; i < rep.four_torsion.size(); ++i)
            std::cout << (i ? ", " : "") << "(" << rep.four_torsion[i].x << ", "
                      << rep.four_torsion[i].y << ")";
        std::cout << "\n";
    }
    return 0;
}

int cmd_descend(u64 p, u64 a2, u64 a4, u64 a6, const std::vector<u64>& kernels, bool as_json) {
    Fp F(p);
    Weierstrass E = make_curve(F, a2, a4, a6);
    DescentPath path =
        kernels.empty() ? descend_to_complete_edwards(E) : descend_scripted(E, kernels);

    std::vector<Weierstrass> chain{E};
    for (const auto& s : path.steps) chain.push_back(s.target);

    if (as_json) {
        json out{{"p", p}, {"start", curve_json(E)}};
        json steps = json::array();
        for (const auto& s : path.steps)
            steps.push_back({{"kernel_x0", s.kernel_x0},
                             {"target", curve_json(s.target)},
                             {"transported_roots", s.transported_roots}});
        out["steps"] = steps;
        out["terminal"] = curve_json(path.terminal);
        out["terminal_D2"] = path.terminal_report.D2;
        json torsion4 = json::array();
        for (const auto& P : path.terminal_report.four_torsion) torsion4.push_back(point_json(P));
        out["terminal_four_torsion"] = torsion4;
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::cout << " i  E_i                     2-torsion abscissas      kernel\n";
    for (size_t i = 0; i < chain.size(); ++i) {
        TwoTorsionReport rep = classify_two_torsion(chain[i]);
        std::ostringstream roots;
        roots << "{";
        for (size_t k = 0; k < rep.roots.size(); ++k) roots << (k ? ", " : "") << rep.roots[k];
        roots << "}";
        std::printf(" %-2zu %-23s %-24s %s\n", i, curve_str(chain[i]).c_str(),
                    roots.str().c_str(),
                    i < path.steps.size() ? std::to_string(path.steps[i].kernel_x0).c_str() : "-");
    }
    std::cout << "terminal 4-torsion: ";
    for (size_t i = 0; i < path.terminal_report.four_torsion.size(); ++i)
        std::cout << (i ? ", " : "") << "(" << path.terminal_report.four_torsion[i].x << ", "
                  << path.terminal_report.four_torsion[i].y << ")";
    std::cout << "\n";
    return 0;
}

int cmd_convert(u64 p, bool have_j, u64 j, u64 a2, u64 a4, u64 a6, u64 c,
                const std::string& target, bool as_json) {
    Fp F(p);
    Weierstrass E = have_j ? curve_from_j(F, j % p, F.reduce(static_cast<i64>(c)))
                           : make_curve(F, a2, a4, a6);
    u64 order = count_points(E);
    json out{{"p", p}, {"source", curve_json(E)}, {"j", j_invariant(E)}, {"order", order},
             {"target", target}};

    TwoTorsionReport rep = classify_two_torsion(E);
    if (rep.type == TorsionType::None)
        throw no_edwards_form_error("curve has no rational 2-torsion");

    auto conv = montgomery_from_type_one(E, rep);
    if (!conv)
        throw no_edwards_form_error("no Montgomery model over F_p (no root with c1 square)");

    // self-certification: the Montgomery model must carry the same j and order
    Weierstrass W = montgomery_to_weierstrass(conv->M);
    if (j_invariant(W) != j_invariant(E) || count_points(W) != order)
        throw consistency_error("Montgomery model fails j/order certification");

    if (target == "montgomery") {
        out["A"] = conv->M.A;
        out["B"] = conv->M.B;
        out["x0"] = conv->x0;
        out["s"] = conv->s;
        if (!as_json)
            std::cout << "montgomery  B y^2 = x^3 + A x^2 + x with A=" << conv->M.A
                      << " B=" << conv->M.B << "  (x0=" << conv->x0 << ", s=" << conv->s
                      << ", order " << order << ")\n";
    } else if (target == "edwards") {
        TwistedEdwards ed = montgomery_to_twisted_edwards(conv->M);
        if (twisted_edwards_j(F, ed.a, ed.d) != j_invariant(E))
            throw consistency_error("Edwards model fails j certification");
        out["a"] = ed.a;
        out["d"] = ed.d;
        out["complete"] = ed.complete;
        if (!as_json)
            std::cout << "edwards     a x^2 + y^2 = 1 + d x^2 y^2 with a=" << ed.a
                      << " d=" << ed.d << "  complete=" << (ed.complete ? "true" : "false")
                      << "\n";
    } else if (target == "kubert") {
        if (rep.type != TorsionType::I || F.legendre(rep.D2) != 1)
            throw no_edwards_form_error("Kubert model needs type I with D2 square");
        KubertFromTypeOne kb = kubert_from_type_one(E, rep);
        TwistedEdwards ed = edwards_from_kubert(F, kb.b);
        out["b"] = kb.b;
        out["d"] = ed.d;
        out["complete"] = ed.complete;
        out["iso_u"] = kb.iso.u;
        out["iso_r"] = kb.iso.r;
        if (!as_json)
            std::cout << "kubert      b=" << kb.b << "  edwards d=16b+1=" << ed.d
                      << "  complete=" << (ed.complete ? "true" : "false") << "  (iso u="
                      << kb.iso.u << ", r=" << kb.iso.r << ")\n";
    } else {
        throw invalid_parameter_error("unknown conversion target: " + target);
    }
    if (as_json) std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_classify(u64 p, bool have_curve, u64 a2, u64 a4, u64 a6, bool have_disc, i64 disc,
                 const std::string& vparity, bool as_json) {
    if (have_disc) {
        if (vparity != "even" && vparity != "odd")
            throw invalid_parameter_error("--vparity must be even or odd");
        CMClassification c = classify_cm_predict(disc, vparity == "even");
        if (as_json) {
            std::cout << json{{"D", c.D},
                              {"v_even", c.v_even},
                              {"torsion", type_name(c.torsion)},
                              {"montgomery", montgomery_name(c.montgomery)},
                              {"edwards", edwards_name(c.edwards)}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "D=" << c.D << " V " << vparity << ": torsion " << type_name(c.torsion)
                      << ", montgomery " << montgomery_name(c.montgomery) << ", edwards "
                      << edwards_name(c.edwards) << "\n";
        }
        return 0;
    }
    if (!have_curve) throw invalid_parameter_error("classify needs a curve or --disc/--vparity");

    Fp F(p);
    Weierstrass E = make_curve(F, a2, a4, a6);
    FrobeniusData frob = frobenius_data(E);
    int m = 0;
    for (i64 v = frob.V; v % 2 == 0; v /= 2) ++m;
    int k = volcano_level(E, frob);
    i64 D = frob.D_K;
    for (int i = 0; i < k; ++i) D *= 4;
    bool v_even = k < m;
    CMClassification c = classify_cm_predict(D, v_even, p % 4 == 1 ? 1 : -1);
    TwoTorsionReport rep = classify_two_torsion(E);
    bool complete = rep.type == TorsionType::I && F.legendre(rep.D2) == 1;

    json out{{"p", p},
             {"curve", curve_json(E)},
             {"order", frob.order},
             {"trace", frob.U},
             {"V", frob.V},
             {"D_K", frob.D_K},
             {"level", k},
             {"D", D},
             {"v_even", v_even},
             {"predicted",
              {{"torsion", type_name(c.torsion)},
               {"montgomery", montgomery_name(c.montgomery)},
               {"edwards", edwards_name(c.edwards)}}},
             {"observed",
              {{"torsion", type_name(rep.type)}, {"complete_edwards", complete}}}};
    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "curve      p=" << p << " " << curve_str(E) << "\n"
                  << "frobenius  order " << frob.order << ", U " << frob.U << ", V " << frob.V
                  << ", D_K " << frob.D_K << "\n"
                  << "level      k=" << k << "  ->  D=" << D << ", V at level "
                  << (v_even ? "even" : "odd") << "\n"
                  << "predicted  torsion " << type_name(c.torsion) << ", montgomery "
                  << montgomery_name(c.montgomery) << ", edwards " << edwards_name(c.edwards)
                  << "\n"
                  << "observed   torsion " << type_name(rep.type) << ", complete edwards "
                  << (complete ? "yes" : "no") << "\n";
    }
    if (c.torsion != rep.type) throw consistency_error("predicted torsion type disagrees");
    return 0;
}

int cmd_count(u64 p, i64 t, bool as_json) {
    EdwardsInvariantCount c = count_complete_edwards_invariants(p, t);
    if (as_json) {
        std::cout << json{{"p", p},         {"t", c.t},
                          {"n", c.n},       {"v", c.v},
                          {"D_K", c.D_K},   {"predicted", c.predicted},
                          {"observed", c.observed}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "p=" << p << " t=+-" << c.t << ": 4p = t^2 - v^2 2^(2n) ... D_K=" << c.D_K
                  << ", n=" << c.n << ", v=" << c.v << "\n"
                  << "predicted " << c.predicted << ", observed " << c.observed << "\n";
    }
    return c.predicted == c.observed ? 0 : 4;
}

int cmd_verify(const std::string& suite, u64 pmax, bool serial, bool as_json) {
    struct SuiteRun {
        u64 p;
        SweepOutcome out;
    };
    std::vector<SuiteRun> runs;
    bool parallel = !serial;

    if (suite == "prop2" || suite == "coro1" || suite == "splitting") {
        for (u64 p : primes_in(5, pmax)) {
            SweepOutcome out = suite == "prop2"     ? sweep_prop2(p, parallel)
                               : suite == "coro1"   ? sweep_coro1(p, parallel)
                                                    : sweep_splitting(p, parallel);
            runs.push_back({p, std::move(out)});
        }
    } else if (suite == "thm11" || suite == "thm4") {
        if (pmax < 101) throw invalid_parameter_error("thm11 suite needs --pmax >= 101");
        for (u64 p : primes_in(101, pmax)) runs.push_back({p, sweep_thm11(p, parallel)});
    } else if (suite == "exclusion") {
        for (u64 p : primes_in(5, pmax)) {
            ExclusionReport rep = check_fundamental_exclusion(p);
            SweepOutcome out;
            out.curves_scanned = rep.curves_scanned;
            out.checks = rep.fundamental_count;
            out.violations = rep.violations;
            runs.push_back({p, std::move(out)});
        }
    } else {
        throw invalid_parameter_error("unknown suite: " + suite);
    }

    SweepOutcome total;
    for (const auto& r : runs) total.merge(r.out);

    if (as_json) {
        json out{{"suite", suite}, {"pmax", pmax}, {"parallel", parallel}};
        json per = json::array();
        for (const auto& r : runs)
            per.push_back({{"p", r.p},
                           {"curves_scanned", r.out.curves_scanned},
                           {"checks", r.out.checks},
                           {"violations", r.out.violations}});
        out["per_prime"] = per;
        out["curves_scanned"] = total.curves_scanned;
        out["checks"] = total.checks;
        out["violations"] = total.violations;
        out["failures"] = total.failures;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : runs)
            std::cout << "p=" << r.p << ": scanned " << r.out.curves_scanned << ", checks "
                      << r.out.checks << ", violations " << r.out.violations << "\n";
        std::cout << "total: scanned " << total.curves_scanned << ", checks " << total.checks
                  << ", violations " << total.violations << "\n";
        for (const auto& f : total.failures) std::cout << "  ! " << f << "\n";
    }
    return total.violations == 0 ? 0 : 4;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Montgomery/Edwards forms, 2-volcano descent, and CM classification over F_p"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit one JSON object instead of text");

    u64 p = 0, a2 = 0, a4 = 0, a6 = 0, j = 0, c = 1, pmax = 0;
    i64 disc = 0, t = 0;
    std::vector<u64> kernels;
    std::string target, vparity, suite;
    bool serial = false;

    auto* an = app.add_subcommand("analyze", "torsion/f4 analysis of one curve");
    an->add_option("p", p)->required();
    an->add_option("a2", a2)->required();
    an->add_option("a4", a4)->required();
    an->add_option("a6", a6)->required();

    auto* de = app.add_subcommand("descend", "2-volcano descent to a complete-Edwards curve");
    de->add_option("p", p)->required();
    de->add_option("a2", a2)->required();
    de->add_option("a4", a4)->required();
    de->add_option("a6", a6)->required();
    de->add_option("--kernels", kernels, "replay these kernel abscissas instead of searching")
        ->delimiter(',');

    auto* co = app.add_subcommand("convert", "convert to montgomery/edwards/kubert model");
    co->add_option("p", p)->required();
    auto* jopt = co->add_option("--j", j, "build the source from its j-invariant");
    std::vector<u64> curve_opt;
    auto* copt = co->add_option("--curve", curve_opt, "source curve a2 a4 a6")->expected(3);
    jopt->excludes(copt);
    co->add_option("--c", c, "twist scale for --j (default 1)");
    co->add_option("--target", target, "montgomery|edwards|kubert")->required();

    auto* cl = app.add_subcommand("classify", "CM classification row (curve or --disc)");
    cl->add_option("p", p);
    cl->add_option("a2", a2);
    cl->add_option("a4", a4);
    cl->add_option("a6", a6);
    auto* dopt = cl->add_option("--disc", disc, "order discriminant D < 0");
    cl->add_option("--vparity", vparity, "even|odd");

    auto* cn = app.add_subcommand("count", "Proposition-9 floor-invariant count");
    cn->add_option("p", p)->required();
    cn->add_option("t", t)->required();

    auto* ve = app.add_subcommand("verify", "exhaustive verification sweeps");
    ve->add_option("--suite", suite, "prop2|coro1|splitting|thm11|exclusion")->required();
    ve->add_option("--pmax", pmax, "largest prime to sweep")->required();
    ve->add_flag("--serial", serial, "disable the parallel driver");

    // let the global --json flag appear after the subcommand as well
    for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (an->parsed()) return cmd_analyze(p, a2, a4, a6, as_json);
        if (de->parsed()) return cmd_descend(p, a2, a4, a6, kernels, as_json);
        if (co->parsed()) {
            bool have_j = jopt->count() > 0;
            if (!have_j && curve_opt.size() != 3)
                throw invalid_parameter_error("convert needs --j or --curve a2 a4 a6");
            if (!have_j) {
                a2 = curve_opt[0];
                a4 = curve_opt[1];
                a6 = curve_opt[2];
            }
            return cmd_convert(p, have_j, j, a2, a4, a6, c, target, as_json);
        }
        if (cl->parsed())
            return cmd_classify(p, cl->count("p") > 0, a2, a4, a6, dopt->count() > 0, disc,
                                vparity, as_json);
        if (cn->parsed()) return cmd_count(p, t, as_json);
        if (ve->parsed()) return cmd_verify(suite, pmax, serial, as_json);
    } catch (const invalid_parameter_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const singular_curve_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const not_on_curve_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const exceptional_point_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const resource_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const unsupported_curve_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const no_edwards_form_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const consistency_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
