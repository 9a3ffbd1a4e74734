// moduli-kit: batch command-line frontend. One JSON object per input line;
// see README for the subcommand grammar and exit codes.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include <moduli/moduli.hpp>

namespace {

using namespace moduli;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CmdResult {
    std::string json;
    int code = 0; // 0 ok, 1 usage/parse, 2 verification failure, 3 non-convergence
};

struct Flags {
    bool exact = false;
    long terms = 32;
    double tol = -1.0; // per-command default when negative
    std::string mode = "arithmetic";
    int bound = 50;
    int max_iter = 10000;
    int genus = 0; // 0: per-command default
    std::string method = "enumerate";
    std::string from, out, input;
};

double parse_double(const std::string& s) {
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw UsageError("not a number: " + s);
    }
    if (pos != s.size()) throw UsageError("not a number: " + s);
    return v;
}

long parse_long(const std::string& s) {
    std::size_t pos = 0;
    long v;
    try {
        v = std::stol(s, &pos);
    } catch (const std::exception&) {
        throw UsageError("not an integer: " + s);
    }
    if (pos != s.size()) throw UsageError("not an integer: " + s);
    return v;
}

// token forms: "inf" | "RE" | "RE,IM"; exact mode takes rational components
template <class C>
ProjectivePoint<C> parse_point(const std::string& tok);

std::complex<double> parse_complex_token(const std::string& tok) {
    auto comma = tok.find(',');
    if (comma == std::string::npos) return {parse_double(tok), 0.0};
    return {parse_double(tok.substr(0, comma)), parse_double(tok.substr(comma + 1))};
}

RationalComplex parse_rational_token(const std::string& tok) {
    auto part = [](const std::string& s) -> Rational {
        try {
            return Rational(s);
        } catch (const std::exception&) {
            throw UsageError("not a rational: " + s);
        }
    };
    auto comma = tok.find(',');
    if (comma == std::string::npos) return {part(tok), Rational(0)};
    return {part(tok.substr(0, comma)), part(tok.substr(comma + 1))};
}

template <>
ProjectivePoint<std::complex<double>> parse_point(const std::string& tok) {
    using P = ProjectivePoint<std::complex<double>>;
    if (tok == "inf") return P::infinity();
    return P::finite(parse_complex_token(tok));
}

template <>
ProjectivePoint<RationalComplex> parse_point(const std::string& tok) {
    using P = ProjectivePoint<RationalComplex>;
    if (tok == "inf") return P::infinity();
    return P::finite(parse_rational_token(tok));
}

std::string gamma_json(const IntegerMatrix2& g) {
    std::ostringstream os;
    os << "[" << g.a << "," << g.b << "," << g.c << "," << g.d << "]";
    return os.str();
}

std::pair<std::string, int> classify_error(const moduli::error& e) {
    auto is = [&](auto* p) { return p != nullptr; };
    if (is(dynamic_cast<const NonConvergence*>(&e))) return {"NonConvergence", 3};
    if (is(dynamic_cast<const DivergentTail*>(&e))) return {"DivergentTail", 3};
    if (is(dynamic_cast<const CoincidentPoints*>(&e))) return {"CoincidentPoints", 1};
    if (is(dynamic_cast<const DegenerateMap*>(&e))) return {"DegenerateMap", 1};
    if (is(dynamic_cast<const BadModuliPoint*>(&e))) return {"BadModuliPoint", 1};
    if (is(dynamic_cast<const NotInUpperHalfPlane*>(&e))) return {"NotInUpperHalfPlane", 1};
    if (is(dynamic_cast<const DegenerateBasis*>(&e))) return {"DegenerateBasis", 1};
    if (is(dynamic_cast<const NotUnimodular*>(&e))) return {"NotUnimodular", 1};
    if (is(dynamic_cast<const ScalarMatrix*>(&e))) return {"ScalarMatrix", 1};
    if (is(dynamic_cast<const NotAUnit*>(&e))) return {"NotAUnit", 1};
    if (is(dynamic_cast<const NonPositiveInput*>(&e))) return {"NonPositiveInput", 1};
    if (is(dynamic_cast<const ZeroClass*>(&e))) return {"ZeroClass", 1};
    if (is(dynamic_cast<const BadIntersection*>(&e))) return {"BadIntersection", 1};
    if (is(dynamic_cast<const BadGenus*>(&e))) return {"BadGenus", 1};
    if (is(dynamic_cast<const NonIntegralGenus*>(&e))) return {"NonIntegralGenus", 1};
    if (is(dynamic_cast<const BadOrbitSize*>(&e))) return {"BadOrbitSize", 1};
    if (is(dynamic_cast<const ModulusTooLarge*>(&e))) return {"ModulusTooLarge", 1};
    if (is(dynamic_cast<const BadModulus*>(&e))) return {"BadModulus", 1};
    if (is(dynamic_cast<const BoundTooLarge*>(&e))) return {"BoundTooLarge", 1};
    return {"Error", 1};
}

// ---- subcommand handlers ------------------------------------------------

template <class C>
CmdResult do_xratio(const std::vector<std::string>& args) {
    if (args.size() != 4) throw UsageError("xratio needs exactly four points");
    std::vector<ProjectivePoint<C>> p;
    for (const auto& t : args) p.push_back(parse_point<C>(t));
    C v = cross_ratio(p[0], p[1], p[2], p[3]);
    return {"{\"cross_ratio\":" + value_json(v) + "}", 0};
}

template <class C>
CmdResult do_normalize(const std::vector<std::string>& args) {
    if (args.empty()) throw UsageError("normalize needs at least one point");
    if (args.size() < 3) {
        std::ostringstream os;
        os << "{\"n\":" << args.size()
           << ",\"class\":\"point\",\"note\":\"M_{0,n} is a single point for n <= 3\"}";
        return {os.str(), 0};
    }
    std::vector<ProjectivePoint<C>> p;
    for (const auto& t : args) p.push_back(parse_point<C>(t));
    auto nc = normalize(PointedConfig<C>(std::move(p)));
    std::ostringstream os;
    os << "{\"n\":" << nc.n << ",\"coords\":[";
    for (std::size_t i = 0; i < nc.coords.size(); ++i)
        os << (i ? "," : "") << value_json(nc.coords[i]);
    os << "]}";
    return {os.str(), 0};
}

template <class C>
CmdResult do_orbit(const std::vector<std::string>& args) {
    if (args.size() != 1) throw UsageError("orbit needs one moduli point");
    auto p = parse_point<C>(args[0]);
    if (p.is_infinity()) throw UsageError("orbit: lambda must be finite");
    auto orbit = cross_ratio_orbit(p.value());
    std::ostringstream os;
    os << "{\"lambda\":" << value_json(p.value()) << ",\"orbit\":[";
    for (std::size_t i = 0; i < orbit.size(); ++i) os << (i ? "," : "") << value_json(orbit[i]);
    os << "],\"size\":" << orbit.size() << "}";
    return {os.str(), 0};
}

CmdResult do_reduce_tau(const std::vector<std::string>& args, const Flags& f) {
    if (args.size() != 2) throw UsageError("reduce-tau needs RE IM");
    HalfPlanePoint tau(parse_double(args[0]), parse_double(args[1]));
    ReduceResult r = reduce_tau(tau, f.max_iter);
    std::string out = "{\"tau\":" + fmt_complex(r.tau.value()) + ",\"gamma\":" + gamma_json(r.gamma) +
                      ",\"word\":\"" + json_escape(r.word.str()) + "\"}";
    return {out, 0};
}

CmdResult do_iso(const std::vector<std::string>& args) {
    if (args.size() != 4) throw UsageError("iso needs RE1 IM1 RE2 IM2");
    HalfPlanePoint t1(parse_double(args[0]), parse_double(args[1]));
    HalfPlanePoint t2(parse_double(args[2]), parse_double(args[3]));
    auto g = elliptic_isomorphic(t1, t2);
    if (!g) return {"{\"isomorphic\":false}", 0};
    return {"{\"isomorphic\":true,\"gamma\":" + gamma_json(*g) + "}", 0};
}

CmdResult do_aut(const std::vector<std::string>& args) {
    if (args.size() != 2) throw UsageError("aut needs RE IM");
    HalfPlanePoint tau(parse_double(args[0]), parse_double(args[1]));
    return {"{\"order\":" + std::to_string(aut_group_order(tau)) + "}", 0};
}

CmdResult do_classify(const std::vector<std::string>& args) {
    if (args.size() != 4) throw UsageError("classify needs A B C D");
    IntegerMatrix2 m(parse_long(args[0]), parse_long(args[1]), parse_long(args[2]),
                     parse_long(args[3]));
    auto cl = classify_sl2(m);
    std::ostringstream os;
    os << "{\"trace\":" << m.trace();
    switch (cl.type) {
        case Sl2Type::Elliptic:
            os << ",\"class\":\"elliptic\",\"fixed\":[" << fmt_complex(cl.fixed_in_h) << "]"
               << ",\"order\":" << sl2_element_order(m);
            break;
        case Sl2Type::Parabolic:
            os << ",\"class\":\"parabolic\",\"fixed\":[" << point_json(cl.fixed_real_1) << "]";
            break;
        case Sl2Type::Hyperbolic:
            os << ",\"class\":\"hyperbolic\",\"fixed\":[" << point_json(cl.fixed_real_1) << ","
               << point_json(cl.fixed_real_2) << "]";
            break;
    }
    os << "}";
    return {os.str(), 0};
}

CmdResult do_j(const std::vector<std::string>& args) {
    if (args.size() != 2) throw UsageError("j needs RE IM");
    HalfPlanePoint tau(parse_double(args[0]), parse_double(args[1]));
    return {"{\"j\":" + fmt_complex(j_invariant(tau)) + "}", 0};
}

QSeries named_series(const std::string& name, long terms) {
    if (name == "E4") return eisenstein(4, terms);
    if (name == "E6") return eisenstein(6, terms);
    if (name == "delta") return delta_series(terms).series;
    if (name == "j") return j_series(terms);
    throw UsageError("unknown series (want E4, E6, delta, j): " + name);
}

CmdResult do_series(const std::vector<std::string>& args, const Flags& f) {
    if (!f.from.empty()) {
        std::ifstream in(f.from);
        if (!in) throw UsageError("cannot open series file: " + f.from);
        QSeries s = read_series(in);
        if (args.size() == 3 && args[0] == "--eval") throw UsageError("use flags: series --from F RE IM");
        if (args.size() != 2) throw UsageError("series --from FILE RE IM evaluates the imported series");
        HalfPlanePoint tau(parse_double(args[0]), parse_double(args[1]));
        EvalResult ev = evaluate(s, tau);
        return {"{\"value\":" + fmt_complex(ev.value) + ",\"error_bound\":" + fmt_double(ev.error_bound) + "}",
                0};
    }
    if (args.size() != 1) throw UsageError("series needs a name (E4, E6, delta, j)");
    if (f.mode != "arithmetic" && f.mode != "paper") throw UsageError("--mode must be arithmetic or paper");
    QSeries s = named_series(args[0], f.terms);
    if (!f.out.empty()) {
        std::ofstream outf(f.out);
        if (!outf) throw UsageError("cannot open output file: " + f.out);
        write_series(outf, s);
        std::ostringstream os;
        os << "{\"name\":\"" << args[0] << "\",\"terms\":" << s.truncation() << ",\"file\":\""
           << json_escape(f.out) << "\"";
        if (args[0] == "delta" && f.mode == "paper")
            os << ",\"normalization\":\"paper\",\"symbolic_prefactor\":\"(2*pi)^12\"";
        os << "}";
        return {os.str(), 0};
    }
    std::ostringstream os;
    write_series(os, s);
    std::string text = os.str();
    if (!text.empty() && text.back() == '\n') text.pop_back();
    return {text, 0};
}

CmdResult do_weight_check(const std::vector<std::string>& args, const Flags& f) {
    if (args.size() != 8) throw UsageError("weight-check needs FORM K A B C D RE IM");
    FormName form;
    if (args[0] == "E4") form = FormName::E4;
    else if (args[0] == "E6") form = FormName::E6;
    else if (args[0] == "delta") form = FormName::Delta;
    else if (args[0] == "j") form = FormName::J;
    else throw UsageError("unknown form (want E4, E6, delta, j): " + args[0]);
    int k = static_cast<int>(parse_long(args[1]));
    IntegerMatrix2 gamma(parse_long(args[2]), parse_long(args[3]), parse_long(args[4]),
                         parse_long(args[5]));
    HalfPlanePoint tau(parse_double(args[6]), parse_double(args[7]));
    double tol = f.tol > 0 ? f.tol : 1e-6;
    double residual = weight_check(form, k, gamma, tau);
    bool holds = residual <= tol;
    std::ostringstream os;
    os << "{\"form\":\"" << args[0] << "\",\"k\":" << k << ",\"residual\":" << fmt_double(residual)
       << ",\"tol\":" << fmt_double(tol) << ",\"holds\":" << (holds ? "true" : "false") << "}";
    return {os.str(), holds ? 0 : 2};
}

CmdResult do_periods(const std::vector<std::string>& args) {
    if (args.size() != 1) throw UsageError("periods needs LAMBDA");
    LegendreParameter lp(parse_complex_token(args[0]));
    PeriodResult pr = legendre_periods(lp);
    HalfPlanePoint tau = tau_from_basis(LatticeBasis(pr.periods.w1, pr.periods.w2));
    std::complex<double> j = j_invariant(tau);
    std::ostringstream os;
    os << "{\"lambda\":" << fmt_complex(lp.lambda) << ",\"omega1\":" << fmt_complex(pr.periods.w1)
       << ",\"omega2\":" << fmt_complex(pr.periods.w2) << ",\"tau\":" << fmt_complex(tau.value())
       << ",\"j\":" << fmt_complex(j) << ",\"guaranteed\":" << (pr.guaranteed ? "true" : "false")
       << "}";
    return {os.str(), 0};
}

CmdResult do_j_lambda(const std::vector<std::string>& args) {
    if (args.size() != 1) throw UsageError("j-lambda needs LAMBDA");
    LegendreParameter lp(parse_complex_token(args[0]));
    std::ostringstream os;
    os << "{\"j\":" << fmt_complex(j_from_lambda(lp))
       << ",\"guaranteed\":" << (lp.in_guaranteed_domain() ? "true" : "false") << "}";
    return {os.str(), 0};
}

CmdResult verify_report(const std::string& relation, bool holds, long cases) {
    std::ostringstream os;
    os << "{\"relation\":\"" << relation << "\",\"holds\":" << (holds ? "true" : "false");
    if (cases > 0) os << ",\"cases\":" << cases;
    os << "}";
    return {os.str(), holds ? 0 : 2};
}

// deterministic small PRNG for the CLI verification suites
struct SplitMix {
    unsigned long long s;
    unsigned long long next() {
        s += 0x9e3779b97f4a7c15ull;
        unsigned long long z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    long long range(long long lo, long long hi) { // inclusive
        return lo + static_cast<long long>(next() % static_cast<unsigned long long>(hi - lo + 1));
    }
};

HomologyClass random_class(SplitMix& rng, int g) {
    while (true) {
        std::vector<McgInt> v;
        for (int i = 0; i < 2 * g; ++i) v.emplace_back(rng.range(-2, 2));
        HomologyClass h(g, std::move(v));
        if (!h.is_zero()) return h;
    }
}

CmdResult do_mcg(const std::vector<std::string>& args) {
    if (args.empty()) throw UsageError("mcg needs a subcommand: verify | h1");
    if (args[0] == "h1") {
        if (args.size() != 2) throw UsageError("mcg h1 needs G");
        auto rep = h1_mapping_class_group(static_cast<int>(parse_long(args[1])));
        std::ostringstream os;
        os << "{\"order\":" << rep.order << ",\"trivial\":" << (rep.trivial ? "true" : "false")
           << ",\"derivation\":[";
        for (std::size_t i = 0; i < rep.derivation.size(); ++i)
            os << (i ? "," : "") << "[\"" << rep.derivation[i].relation << "\",\""
               << rep.derivation[i].equation << "\"]";
        os << "]}";
        return {os.str(), 0};
    }
    if (args[0] != "verify" || args.size() != 2)
        throw UsageError("mcg verify needs one of: braid chain1 chain2 lantern conj");
    const std::string& what = args[1];
    if (what == "chain1") return verify_report("chain1", verify_chain_one_boundary(), 0);
    if (what == "chain2") return verify_report("chain2", verify_chain_two_boundary(), 0);
    if (what == "lantern") return verify_report("lantern", verify_lantern(), 0);
    if (what == "braid") {
        SplitMix rng{20260809ull};
        long cases = 0;
        bool ok = true;
        for (int g = 1; g <= 3 && ok; ++g) {
            ok = verify_braid(HomologyClass::basis_a(g, 1), HomologyClass::basis_b(g, 1));
            ++cases;
        }
        while (ok && cases < 200) {
            int g = static_cast<int>(rng.range(1, 3));
            HomologyClass a = random_class(rng, g), b = random_class(rng, g);
            McgInt p = intersection(a, b);
            if (p != 1 && p != -1) continue;
            ok = verify_braid(a, b);
            ++cases;
        }
        return verify_report("braid", ok, cases);
    }
    if (what == "conj") {
        SplitMix rng{40817ull};
        long cases = 0;
        bool ok = true;
        while (ok && cases < 100) {
            int g = static_cast<int>(rng.range(1, 3));
            SymplecticMatrix phi = SymplecticMatrix::identity(g);
            long twists = rng.range(0, 8);
            for (long i = 0; i < twists; ++i) phi = phi * transvection(random_class(rng, g));
            ok = dehn_conjugation_check(random_class(rng, g), phi);
            ++cases;
        }
        return verify_report("conj", ok, cases);
    }
    throw UsageError("mcg verify: unknown relation " + what);
}

CmdResult do_tables(const std::vector<std::string>& args) {
    if (args.size() != 1) throw UsageError("tables needs G");
    auto t = cited_tables(static_cast<int>(parse_long(args[0])));
    std::ostringstream os;
    os << "{\"g\":" << t.g << ",\"h2\":\"" << t.h2.value << "\",\"pic_orb\":\"" << t.pic_orb.value
       << "\",\"h2_rank\":" << t.h2_rank.value << ",\"note\":\"" << json_escape(t.generator_note)
       << "\",\"sources\":{\"h2\":\"" << json_escape(t.h2.source) << "\",\"pic_orb\":\""
       << json_escape(t.pic_orb.source) << "\",\"h2_rank\":\"" << json_escape(t.h2_rank.source)
       << "\"}}";
    return {os.str(), 0};
}

CmdResult do_pants(const std::vector<std::string>& args) {
    if (args.size() != 1) throw UsageError("pants needs G");
    auto [curves, pants] = pants_counts(static_cast<int>(parse_long(args[0])));
    return {"{\"curves\":" + std::to_string(curves) + ",\"pants\":" + std::to_string(pants) + "}", 0};
}

CmdResult do_dims(const std::vector<std::string>& args) {
    if (args.size() != 2) throw UsageError("dims needs G N");
    auto t = dimension_table(static_cast<int>(parse_long(args[0])), static_cast<int>(parse_long(args[1])));
    std::ostringstream os;
    os << "{\"stable\":" << (t.stable ? "true" : "false") << ",\"euler\":" << t.euler
       << ",\"teich_dim_real\":" << t.teich_dim_real;
    if (t.rep_dim) os << ",\"rep_dim\":" << *t.rep_dim;
    os << "}";
    return {os.str(), 0};
}

CmdResult do_rh(const std::vector<std::string>& args) {
    if (args.size() < 2) throw UsageError("rh needs D GY [ORBIT_SIZES...]");
    std::vector<long long> orbits;
    for (std::size_t i = 2; i < args.size(); ++i) orbits.push_back(parse_long(args[i]));
    long long g = riemann_hurwitz(parse_long(args[0]), parse_long(args[1]), orbits);
    return {"{\"genus\":" + std::to_string(g) + "}", 0};
}

CmdResult do_levels(const std::vector<std::string>& args, const Flags& f) {
    if (args.empty()) throw UsageError("levels needs a subcommand: order | degree | surjective | torsion");
    const std::string& what = args[0];
    if (what == "order") {
        if (args.size() != 2) throw UsageError("levels order needs L");
        int ell = static_cast<int>(parse_long(args[1]));
        int g = f.genus > 0 ? f.genus : 1;
        if (f.method != "enumerate" && f.method != "formula")
            throw UsageError("--method must be enumerate or formula");
        long long order;
        if (g == 1)
            order = sl2_mod_order(ell, f.method == "formula" ? OrderMethod::formula : OrderMethod::enumerate);
        else
            order = sp_mod_order(g, ell);
        std::ostringstream os;
        os << "{\"ell\":" << ell << ",\"g\":" << g << ",\"order\":" << order << ",\"method\":\""
           << (g == 1 ? f.method : "enumerate") << "\"}";
        return {os.str(), 0};
    }
    if (what == "degree") {
        if (args.size() != 2) throw UsageError("levels degree needs L");
        int ell = static_cast<int>(parse_long(args[1]));
        return {"{\"ell\":" + std::to_string(ell) + ",\"g\":1,\"degree\":" +
                    std::to_string(level_cover_degree(ell)) + "}",
                0};
    }
    if (what == "surjective") {
        if (args.size() != 2) throw UsageError("levels surjective needs L");
        int ell = static_cast<int>(parse_long(args[1]));
        bool ok = reduction_surjectivity_check(ell);
        std::ostringstream os;
        os << "{\"ell\":" << ell << ",\"g\":1,\"surjective\":" << (ok ? "true" : "false") << "}";
        return {os.str(), ok ? 0 : 2};
    }
    if (what == "torsion") {
        if (args.size() != 2) throw UsageError("levels torsion needs L");
        int ell = static_cast<int>(parse_long(args[1]));
        auto ws = torsion_search(ell, f.bound);
        std::ostringstream os;
        os << "{\"ell\":" << ell << ",\"g\":1,\"bound\":" << f.bound << ",\"witnesses\":[";
        for (std::size_t i = 0; i < ws.size(); ++i) os << (i ? "," : "") << gamma_json(ws[i]);
        os << "],\"count\":" << ws.size() << "}";
        return {os.str(), 0};
    }
    throw UsageError("levels: unknown subcommand " + what);
}

// ---- dispatch ------------------------------------------------------------

Flags parse_flags(std::vector<std::string>& args) {
    Flags f;
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        auto need = [&](const char* name) -> const std::string& {
            if (i + 1 >= args.size()) throw UsageError(std::string(name) + " needs a value");
            return args[++i];
        };
        if (a == "--exact") f.exact = true;
        else if (a == "--terms") f.terms = parse_long(need("--terms"));
        else if (a == "--tol") f.tol = parse_double(need("--tol"));
        else if (a == "--mode") f.mode = need("--mode");
        else if (a == "--bound") f.bound = static_cast<int>(parse_long(need("--bound")));
        else if (a == "--max-iter") f.max_iter = static_cast<int>(parse_long(need("--max-iter")));
        else if (a == "--genus") f.genus = static_cast<int>(parse_long(need("--genus")));
        else if (a == "--method") f.method = need("--method");
        else if (a == "--from") f.from = need("--from");
        else if (a == "--out") f.out = need("--out");
        else if (a == "--input") f.input = need("--input");
        else if (a.rfind("--", 0) == 0) throw UsageError("unknown flag: " + a);
        else rest.push_back(a);
    }
    args = std::move(rest);
    return f;
}

CmdResult run_command(std::vector<std::string> argv);

int batch_threads() {
    if (const char* env = std::getenv("MODULI_KIT_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return 1;
}

CmdResult run_batch_line(const std::string& line) {
    nlohmann::json req;
    try {
        req = nlohmann::json::parse(line);
    } catch (const std::exception& e) {
        return {std::string("{\"error\":\"ParseError\",\"detail\":\"") + json_escape(e.what()) + "\"}", 1};
    }
    std::vector<std::string> argv;
    if (!req.contains("cmd") || !req["cmd"].is_string())
        return {"{\"error\":\"ParseError\",\"detail\":\"missing cmd\"}", 1};
    std::istringstream cmd(req["cmd"].get<std::string>());
    std::string tok;
    while (cmd >> tok) argv.push_back(tok); // allow "mcg h1" as one cmd string
    auto stringify = [](const nlohmann::json& v) -> std::string {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_number_integer()) return std::to_string(v.get<long long>());
        if (v.is_number_float()) return fmt_double(v.get<double>());
        if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
        return v.dump();
    };
    if (req.contains("args")) {
        if (!req["args"].is_array())
            return {"{\"error\":\"ParseError\",\"detail\":\"args must be an array\"}", 1};
        for (const auto& v : req["args"]) argv.push_back(stringify(v));
    }
    if (req.contains("flags")) {
        if (!req["flags"].is_object())
            return {"{\"error\":\"ParseError\",\"detail\":\"flags must be an object\"}", 1};
        for (auto it = req["flags"].begin(); it != req["flags"].end(); ++it) {
            if (it.value().is_boolean()) {
                if (it.value().get<bool>()) argv.push_back("--" + it.key());
            } else {
                argv.push_back("--" + it.key());
                argv.push_back(stringify(it.value()));
            }
        }
    }
    return run_command(std::move(argv));
}

CmdResult do_batch(const Flags& f) {
    std::istream* in = &std::cin;
    std::ifstream file;
    if (!f.input.empty()) {
        file.open(f.input);
        if (!file) throw UsageError("cannot open batch input: " + f.input);
        in = &file;
    }
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(*in, line))
        if (!line.empty()) lines.push_back(line);

    std::vector<CmdResult> results(lines.size());
    int nthreads = std::min<int>(batch_threads(), std::max<std::size_t>(lines.size(), 1));
    if (nthreads <= 1) {
        for (std::size_t i = 0; i < lines.size(); ++i) results[i] = run_batch_line(lines[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < lines.size(); i = next.fetch_add(1))
                    results[i] = run_batch_line(lines[i]);
            });
        for (auto& th : pool) th.join();
    }
    // output buffered per line index; exit code is the most severe event,
    // with parse errors dominating verification failures dominating
    // non-convergence
    std::string out;
    int code = 0;
    auto severity = [](int c) { return c == 1 ? 3 : c == 2 ? 2 : c == 3 ? 1 : 0; };
    for (std::size_t i = 0; i < results.size(); ++i) {
        out += results[i].json;
        out += '\n';
        if (severity(results[i].code) > severity(code)) code = results[i].code;
    }
    if (!out.empty() && out.back() == '\n') out.pop_back();
    return {out, code};
}

CmdResult run_command(std::vector<std::string> argv) {
    try {
        if (argv.empty()) throw UsageError("no subcommand");
        std::string cmd = argv[0];
        std::vector<std::string> args(argv.begin() + 1, argv.end());
        Flags flags = parse_flags(args);
        if (cmd == "xratio") return flags.exact ? do_xratio<RationalComplex>(args) : do_xratio<std::complex<double>>(args);
        if (cmd == "normalize") return flags.exact ? do_normalize<RationalComplex>(args) : do_normalize<std::complex<double>>(args);
        if (cmd == "orbit") return flags.exact ? do_orbit<RationalComplex>(args) : do_orbit<std::complex<double>>(args);
        if (cmd == "reduce-tau") return do_reduce_tau(args, flags);
        if (cmd == "iso") return do_iso(args);
        if (cmd == "aut") return do_aut(args);
        if (cmd == "classify") return do_classify(args);
        if (cmd == "j") return do_j(args);
        if (cmd == "series") return do_series(args, flags);
        if (cmd == "weight-check") return do_weight_check(args, flags);
        if (cmd == "periods") return do_periods(args);
        if (cmd == "j-lambda") return do_j_lambda(args);
        if (cmd == "mcg") return do_mcg(args);
        if (cmd == "tables") return do_tables(args);
        if (cmd == "pants") return do_pants(args);
        if (cmd == "dims") return do_dims(args);
        if (cmd == "rh") return do_rh(args);
        if (cmd == "levels") return do_levels(args, flags);
        if (cmd == "batch") return do_batch(flags);
        throw UsageError("unknown subcommand: " + cmd);
    } catch (const UsageError& e) {
        return {"{\"error\":\"Usage\",\"detail\":\"" + json_escape(e.what()) + "\"}", 1};
    } catch (const moduli::error& e) {
        auto [name, code] = classify_error(e);
        return {"{\"error\":\"" + name + "\",\"detail\":\"" + json_escape(e.what()) + "\"}", code};
    }
}

const char* kUsage =
    "moduli-kit SUBCOMMAND [ARGS] [FLAGS]\n"
    "subcommands: xratio normalize orbit reduce-tau iso aut classify j series\n"
    "             weight-check periods j-lambda mcg tables pants dims rh levels batch\n"
    "flags: --exact --terms N --tol X --mode arithmetic|paper --bound B\n"
    "       --max-iter N --genus G --method enumerate|formula --from F --out F --input F\n"
    "batch mode reads JSON lines {\"cmd\":..., \"args\":[...], \"flags\":{...}} from stdin.\n";

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty() || args[0] == "--help" || args[0] == "-h") {
        std::cerr << kUsage;
        return args.empty() ? 1 : 0;
    }
    try {
        CmdResult r = run_command(std::move(args));
        std::cout << r.json << '\n';
        return r.code;
    } catch (const std::exception& e) {
        std::cout << "{\"error\":\"Internal\",\"detail\":\"" << moduli::json_escape(e.what()) << "\"}\n";
        return 1;
    }
}
