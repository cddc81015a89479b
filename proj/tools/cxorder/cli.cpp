#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <random>

#include <CLI11.hpp>

#include "cxorder/bernstein.hpp"
#include "cxorder/conv_poly.hpp"
#include "cxorder/error.hpp"
#include "cxorder/lattice.hpp"
#include "cxorder/majorization.hpp"
#include "cxorder/measure_io.hpp"
#include "cxorder/parse.hpp"
#include "output.hpp"

namespace cxorder::cli {

namespace {

struct Options {
    std::string mu, nu, phi, g, poly, P, Q, p, q, mode, out_file;
    std::string xs, ns, points, x, y, eps;
    std::vector<std::string> measures, families;
    unsigned n = 1, grid = 4, threads = 0, count = 1000;
    std::uint64_t seed = 1;
    std::string which;
};

Rational eps_or_default(const std::string& flag) {
    if (!flag.empty()) return Rational::parse(flag);
    if (const char* env = std::getenv("CXORDER_EPS"); env && *env) return Rational::parse(env);
    return default_truncation_eps();
}

std::vector<DiscreteMeasure> load_all(const std::vector<std::string>& files) {
    std::vector<DiscreteMeasure> ms;
    for (const auto& f : files) ms.push_back(read_measure(f));
    return ms;
}

void print_measure(const Output& o, const DiscreteMeasure& m) {
    if (o.csv) {
        o.out << "x_num,x_den,w_num,w_den\n";
        for (const Atom& a : m.atoms()) o.out << Output::csv_pair(a.x) << "," << Output::csv_pair(a.w) << "\n";
        return;
    }
    for (const Atom& a : m.atoms()) o.out << o.num(a.x) << " " << o.num(a.w) << "\n";
}

int print_verdict(const Output& o, const OrderVerdict& v) {
    o.out << describe(v) << "\n";
    return exit_code(v);
}

int print_gap(const Output& o, const Rational& gap) {
    o.out << "gap " << o.num(gap) << "\n";
    return sign_exit(gap);
}

// rasa ---------------------------------------------------------------------

int rasa_check(const Output& o, const Options& opt) {
    const auto r = rasa_criterion(read_measure(opt.mu), read_measure(opt.nu));
    if (r.verdict.holds && r.verdict.conclusive) {
        Rational lowest;
        for (const auto& v : r.profile.values) lowest = min(lowest, v);
        o.out << "holds; min " << o.num(lowest) << "\n";
        return Holds;
    }
    return print_verdict(o, r.verdict);
}

int rasa_profile(const Output& o, const Options& opt) {
    const auto r = rasa_criterion(read_measure(opt.mu), read_measure(opt.nu));
    const auto& pl = r.profile;
    if (o.csv) o.out << "a_num,a_den,value_num,value_den\n";
    for (std::size_t i = 0; i < pl.breakpoints.size(); ++i) {
        if (o.csv)
            o.out << Output::csv_pair(pl.breakpoints[i]) << "," << Output::csv_pair(pl.values[i]) << "\n";
        else
            o.out << o.num(pl.breakpoints[i]) << " " << o.num(pl.values[i]) << "\n";
    }
    return exit_code(r.verdict);
}

DiscreteMeasure random_measure(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> size(1, 8), pos(-6, 6), den(1, 3), weight(1, 6);
    std::vector<Atom> atoms;
    const int k = size(rng);
    for (int i = 0; i < k; ++i) atoms.push_back({Rational(pos(rng), den(rng)), Rational(weight(rng))});
    DiscreteMeasure m = make_measure(std::move(atoms));
    const Rational scale = Rational(1) / m.mass();
    return mix(std::vector<Rational>{scale}, std::vector<DiscreteMeasure>{m});
}

int rasa_selftest(const Output& o, const Options& opt) {
    std::mt19937_64 rng(opt.seed);
    unsigned agree = 0, holds = 0;
    for (unsigned i = 0; i < opt.count; ++i) {
        const DiscreteMeasure mu = random_measure(rng);
        const DiscreteMeasure nu = random_measure(rng);
        const bool a = rasa_criterion(mu, nu).verdict.holds;
        const bool b = rasa_direct(mu, nu).holds;
        if (a == b) ++agree;
        else o.out << "disagreement at pair " << i << "\n";
        if (a) ++holds;
    }
    o.out << "agree " << agree << "/" << opt.count << "; criterion holds in " << holds << "\n";
    return agree == opt.count ? Holds : Fails;
}

// genfun -------------------------------------------------------------------

std::pair<LatticeSeq, LatticeSeq> lattice_pair(const Options& opt) {
    if (!opt.families.empty()) {
        if (opt.families.size() != 2) throw Error(ErrorKind::BadParameter, "--family must be given twice");
        const Rational eps = eps_or_default(opt.eps);
        return {truncated_family(FamilySpec::parse(opt.families[0]), eps),
                truncated_family(FamilySpec::parse(opt.families[1]), eps)};
    }
    if (opt.mu.empty() || opt.nu.empty()) throw Error(ErrorKind::BadParameter, "give --mu and --nu, or two --family");
    return {as_lattice(read_measure(opt.mu)), as_lattice(read_measure(opt.nu))};
}

int genfun_test_cmd(const Output& o, const Options& opt) {
    const auto [a, b] = lattice_pair(opt);
    return print_verdict(o, genfun_test(a, b));
}

int genfun_coeffs(const Output& o, const Options& opt) {
    const auto [a, b] = lattice_pair(opt);
    const auto c = genfun_square_coeffs(a, b);
    if (o.csv) o.out << "index,num,den\n";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (o.csv) o.out << i << "," << Output::csv_pair(c[i]) << "\n";
        else o.out << i << " " << o.num(c[i]) << "\n";
    }
    return Holds;
}

int genfun_truncate(const Output& o, const Options& opt) {
    if (opt.families.size() != 1) throw Error(ErrorKind::BadParameter, "truncate takes exactly one --family");
    const FamilySpec spec = FamilySpec::parse(opt.families[0]);
    const LatticeSeq s = truncated_family(spec, eps_or_default(opt.eps));
    if (o.csv) {
        o.out << "index,num,den\n";
        for (std::size_t i = 0; i < s.coeffs.size(); ++i) o.out << i << "," << Output::csv_pair(s.coeffs[i]) << "\n";
        return Holds;
    }
    o.out << spec.str() << ": " << s.coeffs.size() << " coefficients, tail bound " << o.num(s.tail_bound);
    if (!s.coeff_slack.is_zero()) o.out << ", coefficient slack " << o.num(s.coeff_slack);
    o.out << "\n";
    for (std::size_t i = 0; i < s.coeffs.size(); ++i) o.out << i << " " << o.num(s.coeffs[i]) << "\n";
    return Holds;
}

// major --------------------------------------------------------------------

int major_compare(const Output& o, const Options& opt) {
    const auto p = ExponentTuple::parse(opt.p);
    const auto q = ExponentTuple::parse(opt.q);
    const bool yes = majorizes(p, q);
    o.out << p.str() << (yes ? " is majorized by " : " is not majorized by ") << q.str();
    if (yes && is_s_step(p, q)) o.out << " (one S-step)";
    o.out << "\n";
    return yes ? Holds : Fails;
}

int major_chain(const Output& o, const Options& opt) {
    const auto p = ExponentTuple::parse(opt.p);
    const auto q = ExponentTuple::parse(opt.q);
    if (!majorizes(p, q)) {
        o.out << p.str() << " is not majorized by " << q.str() << "\n";
        return Fails;
    }
    const auto chain = s_step_chain(p, q);
    const std::size_t steps = chain.empty() ? 0 : chain.size() - 1;
    o.out << steps << (steps == 1 ? " step\n" : " steps\n");
    for (std::size_t i = 0; i < steps; ++i) o.out << chain[i].str() << " -> " << chain[i + 1].str() << "\n";
    return Holds;
}

int major_muirhead(const Output& o, const Options& opt) {
    const auto xs = parse_rational_list(opt.xs);
    const auto v = muirhead_scalar(ExponentTuple::parse(opt.p), ExponentTuple::parse(opt.q), xs);
    o.out << "W^p " << o.num(v.lhs) << "\nW^q " << o.num(v.rhs) << "\n";
    return v.lhs <= v.rhs ? Holds : Fails;
}

// poly ---------------------------------------------------------------------

int poly_eval(const Output& o, const Options& opt) {
    const auto ms = load_all(opt.measures);
    const DiscreteMeasure m = poly_eval_measures(parse_polynomial(opt.poly, ms.size()), ms);
    if (!opt.out_file.empty()) write_measure(opt.out_file, m);
    print_measure(o, m);
    return Holds;
}

int poly_sos(const Output& o, const Options& opt) {
    const auto p = ExponentTuple::parse(opt.p);
    const auto q = ExponentTuple::parse(opt.q);
    const SosDecomposition d = sos_step_decomposition(p, q);
    for (const SosTerm& t : d.terms)
        o.out << "(x" << t.u + 1 << " - x" << t.v + 1 << ")^2 * [" << t.r.str() << "]\n";
    o.out << "expands to W^" << q.str() << " - W^" << p.str() << "\n";
    return Holds;
}

int poly_muirhead(const Output& o, const Options& opt) {
    const auto ms = load_all(opt.measures);
    return print_verdict(o, muirhead_cx_check(ExponentTuple::parse(opt.p), ExponentTuple::parse(opt.q), ms));
}

int poly_cx(const Output& o, const Options& opt) {
    const auto ms = load_all(opt.measures);
    const auto P = parse_polynomial(opt.P, ms.size());
    const auto Q = parse_polynomial(opt.Q, ms.size());
    const DiscreteMeasure pm = poly_eval_measures(P, ms);
    const DiscreteMeasure qm = poly_eval_measures(Q, ms);
    if (!o.csv) {
        o.out << "P:\n";
        print_measure(o, pm);
        o.out << "Q:\n";
        print_measure(o, qm);
    }
    return print_verdict(o, leq_cx(pm, qm));
}

// bernstein ----------------------------------------------------------------

std::vector<unsigned> ns_of(const Options& opt) { return parse_unsigned_list(opt.ns); }

int bern_rasa(const Output& o, const Options& opt) {
    const ConvexTestFn phi = parse_test_fn(opt.phi);
    return print_gap(o, rasa_gap(opt.n, Rational::parse(opt.x), Rational::parse(opt.y), phi));
}

int bern_multi(const Output& o, const Options& opt) {
    const auto xs = parse_rational_list(opt.xs);
    return print_gap(o, multi_rasa_gap(opt.n, xs, parse_test_fn(opt.phi)));
}

int bern_gav(const Output& o, const Options& opt) {
    const auto ns = ns_of(opt);
    const auto pts = parse_rational_list(opt.points);
    const MultiFn g = parse_multi_fn(opt.g, ns.size());
    return print_gap(o, gav_gap(parse_gav_mode(opt.mode), g, ns, pts));
}

int bern_scan(const Output& o, const Options& opt) {
    const auto ns = ns_of(opt);
    const MultiFn g = parse_multi_fn(opt.g, ns.size());
    const auto grid = unit_grid(opt.grid);
    const auto rows = gav_scan(parse_gav_mode(opt.mode), g, ns, grid, opt.threads);
    for (std::size_t i = 0; i < ns.size(); ++i) o.out << "x" << i + 1 << "_num,x" << i + 1 << "_den,";
    o.out << "gap_num,gap_den,sign\n";
    bool negative = false;
    for (const auto& r : rows) {
        for (const auto& c : r.point) o.out << Output::csv_pair(c) << ",";
        o.out << Output::csv_pair(r.gap) << "," << r.gap.sign() << "\n";
        negative = negative || r.gap.sign() < 0;
    }
    return negative ? Fails : Holds;
}

int bern_supermod(const Output& o, const Options& opt) {
    const MultiFn g = parse_multi_fn(opt.g, 2);
    return print_verdict(o, supermodularity_check(g, unit_grid(opt.grid)));
}

int bern_eq6(const Output& o, const Options& opt) {
    const auto ns = ns_of(opt);
    const auto xs = parse_rational_list(opt.xs);
    return print_gap(o, eq6prim_gap(ns, xs, parse_test_fn(opt.phi)));
}

int bern_p4(const Output& o, const Options& opt) {
    const P4Result r = gavrea_p4_sum(opt.n, Rational::parse(opt.x), Rational::parse(opt.y), parse_test_fn(opt.phi),
                                     eps_or_default(opt.eps));
    o.out << "sum in " << r.value.str() << "\n";
    o.out << "truncated sum " << o.num(r.truncated_sum) << ", radius " << o.num(r.radius) << ", terms "
          << r.terms_x << "x" << r.terms_y << "\n";
    if (r.value.hi.sign() < 0) {
        o.out << "certified negative\n";
        return Fails;
    }
    if (r.value.lo.sign() >= 0) {
        o.out << "certified nonnegative\n";
        return Holds;
    }
    o.out << "inconclusive\n";
    return Inconclusive;
}

// wiring -------------------------------------------------------------------

using Handler = std::function<int(const Output&, const Options&)>;

struct Builder {
    Options& opt;
    std::optional<Handler>& chosen;

    CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& desc, Handler h) {
        CLI::App* c = parent->add_subcommand(name, desc);
        c->callback([this, h] { chosen = h; });
        return c;
    }
    void measures2(CLI::App* c) {
        c->add_option("--mu", opt.mu, "measure file (JSON)")->required();
        c->add_option("--nu", opt.nu, "measure file (JSON)")->required();
    }
    void pq(CLI::App* c) {
        c->add_option("p,--p", opt.p, "exponent tuple, e.g. 1,1,0")->required();
        c->add_option("q,--q", opt.q, "exponent tuple")->required();
    }
    void measure_list(CLI::App* c) {
        c->add_option("--measures", opt.measures, "measure files, comma separated or repeated")
            ->required()
            ->delimiter(',');
    }
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact convex and stochastic order checks for discrete measures", "cxorder"};
    app.fallthrough();
    app.require_subcommand(1);
    Options opt;
    int decimal = 0;
    bool csv = false;
    std::optional<Handler> chosen;
    app.add_flag("--csv", csv, "emit CSV with numerator/denominator columns");
    app.add_option("--decimal", decimal, "also print k decimal digits next to fractions")->check(CLI::Range(0, 200));

    Builder b{opt, chosen};

    auto* order = app.add_subcommand("order", "decide <=st or <=cx between two measures")->require_subcommand(1);
    b.measures2(b.leaf(order, "st", "usual stochastic order",
                       [](const Output& o, const Options& x) {
                           return print_verdict(o, leq_st(read_measure(x.mu), read_measure(x.nu)));
                       }));
    b.measures2(b.leaf(order, "cx", "convex order",
                       [](const Output& o, const Options& x) {
                           return print_verdict(o, leq_cx(read_measure(x.mu), read_measure(x.nu)));
                       }));

    auto* rasa = app.add_subcommand("rasa", "mu*nu <=cx (mu*mu + nu*nu)/2")->require_subcommand(1);
    b.measures2(b.leaf(rasa, "check", "criterion (F-G)*(F-G) >= 0", rasa_check));
    b.measures2(b.leaf(rasa, "direct", "direct convex-order check", [](const Output& o, const Options& x) {
        return print_verdict(o, rasa_direct(read_measure(x.mu), read_measure(x.nu)));
    }));
    b.measures2(b.leaf(rasa, "profile", "breakpoints and values of (F-G)*(F-G)", rasa_profile));
    {
        auto* c = b.leaf(rasa, "gap", "integral of phi against mu*mu + nu*nu - 2 mu*nu",
                         [](const Output& o, const Options& x) {
                             return print_gap(o, gap_functional(read_measure(x.mu), read_measure(x.nu),
                                                                parse_test_fn(x.phi)));
                         });
        b.measures2(c);
        c->add_option("--phi", opt.phi, "convex test function")->required();
    }
    {
        auto* c = b.leaf(rasa, "selftest", "compare criterion and direct check on random pairs", rasa_selftest);
        c->add_option("--count", opt.count, "number of random pairs");
        c->add_option("--seed", opt.seed, "PRNG seed");
    }

    auto* genfun = app.add_subcommand("genfun", "generating-function test for lattice measures")->require_subcommand(1);
    for (auto [name, desc, h] : {std::tuple<const char*, const char*, Handler>{"test", "sign of the squared difference series", genfun_test_cmd},
                                 {"coeffs", "coefficients of the squared difference series", genfun_coeffs}}) {
        auto* c = b.leaf(genfun, name, desc, h);
        c->add_option("--mu", opt.mu, "measure file (JSON)");
        c->add_option("--nu", opt.nu, "measure file (JSON)");
        c->add_option("--family", opt.families, "negbinomial:n,x or poisson:lambda (give twice)");
        c->add_option("--eps", opt.eps, "truncation tolerance (default: $CXORDER_EPS or 2^-40)");
    }
    {
        auto* c = b.leaf(genfun, "truncate", "certified truncation of a lattice family", genfun_truncate);
        c->add_option("--family", opt.families, "negbinomial:n,x or poisson:lambda")->required();
        c->add_option("--eps", opt.eps, "truncation tolerance");
    }

    auto* major = app.add_subcommand("major", "majorization of exponent tuples")->require_subcommand(1);
    b.pq(b.leaf(major, "compare", "is p majorized by q", major_compare));
    b.pq(b.leaf(major, "chain", "S-step chain from p to q", major_chain));
    {
        auto* c = b.leaf(major, "muirhead", "compare W^p and W^q at a positive point", major_muirhead);
        b.pq(c);
        c->add_option("--xs", opt.xs, "positive fractions, comma separated")->required();
    }

    auto* poly = app.add_subcommand("poly", "convolution polynomials")->require_subcommand(1);
    {
        auto* c = b.leaf(poly, "eval", "evaluate P at measures", poly_eval);
        c->add_option("--poly", opt.poly, "polynomial, e.g. '1/2 * x1^3 x2 + 1/2 * x1 x2^3'")->required();
        b.measure_list(c);
        c->add_option("--out", opt.out_file, "also write the result as JSON");
    }
    b.pq(b.leaf(poly, "sos", "S-step sum-of-squares decomposition of W^q - W^p", poly_sos));
    {
        auto* c = b.leaf(poly, "muirhead", "W^p(measures) <=cx W^q(measures)", poly_muirhead);
        b.pq(c);
        b.measure_list(c);
    }
    {
        auto* c = b.leaf(poly, "cx", "P(measures) <=cx Q(measures)", poly_cx);
        c->add_option("--P", opt.P, "polynomial")->required();
        c->add_option("--Q", opt.Q, "polynomial")->required();
        b.measure_list(c);
    }

    auto* bern = app.add_subcommand("bernstein", "Bernstein-type inequalities")->require_subcommand(1);
    {
        auto* c = b.leaf(bern, "rasa", "Rasa gap for Bernstein bases", bern_rasa);
        c->add_option("--n", opt.n, "degree")->required();
        c->add_option("--x", opt.x)->required();
        c->add_option("--y", opt.y)->required();
        c->add_option("--phi", opt.phi, "convex test function")->required();
    }
    {
        auto* c = b.leaf(bern, "multi", "multi-point Rasa gap", bern_multi);
        c->add_option("--n", opt.n, "degree")->required();
        c->add_option("--xs", opt.xs, "points in [0,1]")->required();
        c->add_option("--phi", opt.phi, "convex test function")->required();
    }
    {
        auto* c = b.leaf(bern, "gav", "gap of P1, P1p, P3 or P3p", bern_gav);
        c->add_option("--mode", opt.mode, "P1|P1p|P3|P3p")->required();
        c->add_option("--g", opt.g, "function of len(ns) variables")->required();
        c->add_option("--ns", opt.ns, "degrees, comma separated")->required();
        c->add_option("--points", opt.points, "points in [0,1], comma separated")->required();
    }
    {
        auto* c = b.leaf(bern, "scan", "gap over a grid, CSV", bern_scan);
        c->add_option("--mode", opt.mode, "P1|P1p|P3|P3p")->required();
        c->add_option("--g", opt.g, "function of len(ns) variables")->required();
        c->add_option("--ns", opt.ns, "degrees, comma separated")->required();
        c->add_option("--grid", opt.grid, "grid denominator d: points i/d");
        c->add_option("--threads", opt.threads, "worker threads (0 = hardware)");
    }
    {
        auto* c = b.leaf(bern, "supermod", "supermodularity on a grid", bern_supermod);
        c->add_option("--g", opt.g, "bivariate function")->required();
        c->add_option("--grid", opt.grid, "grid denominator");
    }
    {
        auto* c = b.leaf(bern, "eq6", "gap of the multi-degree Bernstein inequality", bern_eq6);
        c->add_option("--ns", opt.ns, "degrees")->required();
        c->add_option("--xs", opt.xs, "points in [0,1]")->required();
        c->add_option("--phi", opt.phi, "convex test function")->required();
    }
    {
        auto* c = b.leaf(bern, "p4", "certified value of the negative binomial double sum", bern_p4);
        c->add_option("--n", opt.n)->required();
        c->add_option("--x", opt.x)->required();
        c->add_option("--y", opt.y)->required();
        c->add_option("--phi", opt.phi, "test function on [0,1]")->required();
        c->add_option("--eps", opt.eps, "truncation tolerance");
    }

    {
        auto* c = b.leaf(&app, "reproduce", "recompute a worked example", [](const Output& o, const Options& x) {
            return reproduce(x.which, eps_or_default(x.eps), o);
        });
        c->add_option("case", opt.which, "example-3 | gavrea-p4 | absdiff | rasa-binomial")
            ->required()
            ->check(CLI::IsMember({"example-3", "gavrea-p4", "absdiff", "rasa-binomial"}));
        c->add_option("--eps", opt.eps, "truncation tolerance for gavrea-p4");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Holds : Usage;
    }
    if (!chosen) {
        err << app.help();
        return Usage;
    }
    const Output o{out, err, decimal, csv};
    try {
        return (*chosen)(o, opt);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return Usage;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Inconclusive) {
            out << "inconclusive: " << e.what() << "\n";
            return Inconclusive;
        }
        err << "error: " << e.what() << "\n";
        return Usage;
    }
}

} // namespace cxorder::cli
