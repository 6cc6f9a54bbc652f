// fracprimes: prime censuses over floor-quotient sequences [x/n], density
// series with tail bounds, fixed divisors of integer polynomials, Beatty and
// Piatetski-Shapiro enumeration, and fractional-part statistics.
//
// Exit codes: 0 success, 1 domain/overflow error, 2 usage error.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "fracprimes/arith.hpp"
#include "fracprimes/census.hpp"
#include "fracprimes/density.hpp"
#include "fracprimes/floor_sum.hpp"
#include "fracprimes/frac_parts.hpp"
#include "fracprimes/poly.hpp"
#include "fracprimes/report.hpp"
#include "fracprimes/verify.hpp"

namespace fp = fracprimes;
using json = nlohmann::json;
using fp::u64;

namespace {

struct GlobalOpts {
    std::string format;  // per-subcommand default when empty
    std::string output_path;
    long long seed = 0;  // reserved; all operations are deterministic
    bool echo_config = false;
};

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(g.output_path);
    if (!out) throw std::domain_error("cannot open output file: " + g.output_path);
    out << text;
}

std::string pick_format(const GlobalOpts& g, const std::string& fallback) {
    return g.format.empty() ? fallback : g.format;
}

// ---------------------------------------------------------------------------

struct DensityArgs {
    std::string poly, poly2, precision = "double";
    u64 terms = 0;
    bool tail = false;
};

std::string density_echo(const DensityArgs& a) {
    std::string s = "density --poly " + a.poly;
    if (!a.poly2.empty()) s += " --poly2 " + a.poly2;
    s += " --terms " + std::to_string(a.terms);
    if (a.tail) s += " --tail";
    s += " --precision " + a.precision;
    return s;
}

int run_density(const GlobalOpts& g, const DensityArgs& a) {
    fp::IntPolynomial p = fp::IntPolynomial::parse(a.poly);
    unsigned digits = 0;
    if (a.precision != "double") {
        if (a.precision.rfind("extended:", 0) != 0)
            throw std::invalid_argument("precision must be double or extended:<digits>");
        digits = static_cast<unsigned>(std::stoul(a.precision.substr(9)));
        if (digits == 0) throw std::invalid_argument("extended digits must be >= 1");
    }
    fp::DensityEstimate est;
    if (!a.poly2.empty()) {
        if (digits > 0)
            throw std::invalid_argument("extended precision supports single-series mode only");
        if (a.tail)
            throw std::invalid_argument("--tail applies to single-series mode only");
        est = fp::density_series_pair(p, fp::IntPolynomial::parse(a.poly2), a.terms);
    } else if (digits > 0) {
        est = fp::density_series_extended(p, a.terms, digits);
    } else {
        est = fp::density_series(p, a.terms);
    }
    if (a.tail)
        est.tail = fp::tail_bound(static_cast<unsigned>(p.degree()), a.terms,
                                  p.coeff_slack());

    std::string format = pick_format(g, "json");
    std::ostringstream out;
    if (format == "json") {
        json j{{"value", est.value},
               {"terms_or_limit", est.terms},
               {"tail_bound", est.tail},
               {"is_lower_bound", est.is_lower_bound}};
        if (!est.value_extended.empty()) j["value_extended"] = est.value_extended;
        j["kind"] = est.kind;
        out << j.dump() << "\n";
    } else if (format == "csv") {
        out << "value,terms_or_limit,tail_bound,is_lower_bound\n"
            << fp::format_double(est.value) << "," << est.terms << ","
            << fp::format_double(est.tail) << "," << (est.is_lower_bound ? 1 : 0)
            << "\n";
    } else {
        out << (est.value_extended.empty() ? fp::format_double(est.value)
                                           : est.value_extended)
            << "\n";
        if (a.tail) out << "tail_bound " << fp::format_double(est.tail) << "\n";
    }
    emit(g, out.str());
    return 0;
}

// ---------------------------------------------------------------------------

struct ConstantsArgs {
    std::string kind = "twin";
    u64 prime_limit = 0;
};

std::string constants_echo(const ConstantsArgs& a) {
    return "constants --kind " + a.kind + " --prime-limit " +
           std::to_string(a.prime_limit);
}

int run_constants(const GlobalOpts& g, const ConstantsArgs& a) {
    fp::EulerProductEstimate est;
    if (a.kind == "twin") {
        est = fp::euler_product(fp::ProductKind::twin, a.prime_limit);
    } else if (a.kind == "hl2") {
        est = fp::euler_product(fp::ProductKind::hardy_littlewood_quadratic,
                                a.prime_limit);
    } else if (a.kind.rfind("polignac:", 0) == 0) {
        u64 m = std::stoull(a.kind.substr(9));
        est = fp::euler_product(fp::ProductKind::polignac, a.prime_limit, m);
    } else {
        throw std::invalid_argument("unknown constant kind: " + a.kind);
    }
    std::string format = pick_format(g, "json");
    std::ostringstream out;
    if (format == "json") {
        out << json{{"value", est.value},
                    {"terms_or_limit", est.prime_limit},
                    {"tail_bound", 0.0},
                    {"is_lower_bound", false},
                    {"kind", a.kind}}
                   .dump()
            << "\n";
    } else if (format == "csv") {
        out << "value,terms_or_limit,tail_bound,is_lower_bound\n"
            << fp::format_double(est.value) << "," << est.prime_limit << ",0,0\n";
    } else {
        out << fp::format_double(est.value) << "\n";
    }
    emit(g, out.str());
    return 0;
}

// ---------------------------------------------------------------------------

struct CensusArgs {
    std::string poly, poly2, mode = "weighted";
    u64 x = 0;
};

std::string census_echo(const CensusArgs& a) {
    std::string s = "census";
    if (!a.poly.empty()) s += " --poly " + a.poly;
    if (!a.poly2.empty()) s += " --poly2 " + a.poly2;
    s += " --x " + std::to_string(a.x) + " --mode " + a.mode;
    return s;
}

int run_census(const GlobalOpts& g, const CensusArgs& a) {
    std::string format = pick_format(g, "csv");
    std::ostringstream out;
    if (a.mode == "linking") {
        double ratio = fp::linking_ratio(a.x);
        if (format == "json")
            out << json{{"x", a.x}, {"linking_ratio", ratio}}.dump() << "\n";
        else if (format == "csv")
            out << "x,linking_ratio\n" << a.x << "," << fp::format_double(ratio) << "\n";
        else
            out << fp::format_double(ratio) << "\n";
        emit(g, out.str());
        return 0;
    }

    if (a.poly.empty()) throw std::invalid_argument("--poly is required");
    fp::IntPolynomial p = fp::IntPolynomial::parse(a.poly);
    fp::CensusRecord rec;
    if (a.mode == "weighted") {
        if (!a.poly2.empty())
            throw std::invalid_argument("--poly2 is only valid with --mode pair");
        rec = fp::weighted_census(p, a.x);
    } else if (a.mode == "count") {
        if (!a.poly2.empty())
            throw std::invalid_argument("--poly2 is only valid with --mode pair");
        rec = fp::fractional_prime_count(p, a.x);
    } else if (a.mode == "pair") {
        if (a.poly2.empty())
            throw std::invalid_argument("--mode pair requires --poly2");
        rec = fp::pair_census(p, fp::IntPolynomial::parse(a.poly2), a.x);
    } else {
        throw std::invalid_argument("unknown census mode: " + a.mode);
    }

    if (format == "json") {
        out << json{{"x", rec.x},
                    {"weighted_sum", rec.weighted_sum},
                    {"predicted", rec.predicted},
                    {"residual", rec.residual},
                    {"distinct", rec.distinct_prime_count},
                    {"multiplicity", rec.multiplicity_count}}
                   .dump()
            << "\n";
    } else if (format == "csv") {
        out << fp::census_csv_header() << "\n" << fp::census_csv_row(rec) << "\n";
    } else {
        out << "x " << rec.x << "\nweighted_sum " << fp::format_double(rec.weighted_sum)
            << "\npredicted " << fp::format_double(rec.predicted) << "\nresidual "
            << fp::format_double(rec.residual) << "\ndistinct "
            << rec.distinct_prime_count << "\nmultiplicity " << rec.multiplicity_count
            << "\n";
    }
    emit(g, out.str());
    return 0;
}

// ---------------------------------------------------------------------------

struct FloorSumArgs {
    std::string weight = "one";
    u64 x = 0;
    bool brute = false;
    bool allow_large = false;
};

std::string floor_sum_echo(const FloorSumArgs& a) {
    std::string s = "floor-sum --x " + std::to_string(a.x) + " --weight " + a.weight;
    if (a.brute) s += " --brute";
    if (a.allow_large) s += " --allow-large";
    return s;
}

fp::WeightFn parse_weight(const std::string& spec) {
    if (spec == "one") return [](u64) { return 1.0; };
    if (spec == "identity")
        return [](u64 v) { return static_cast<double>(v); };
    if (spec.rfind("lambda-shift:", 0) == 0) {
        u64 shift = std::stoull(spec.substr(13));
        return [shift](u64 v) { return fp::lambda_of(v + shift).log_value(); };
    }
    if (spec.rfind("lambda-poly:", 0) == 0) {
        fp::IntPolynomial p = fp::IntPolynomial::parse(spec.substr(12));
        return [p](u64 v) {
            auto a = fp::abs_u128(fp::evaluate(p, static_cast<fp::i128>(v)));
            if (a == 0 || a >= (static_cast<fp::u128>(1) << 63))
                throw std::domain_error("lambda argument out of range");
            return fp::lambda_of(static_cast<u64>(a)).log_value();
        };
    }
    throw std::invalid_argument("unknown weight: " + spec);
}

int run_floor_sum(const GlobalOpts& g, const FloorSumArgs& a) {
    fp::WeightFn w = parse_weight(a.weight);
    double value = a.brute ? fp::floor_weighted_sum_bruteforce(a.x, w, a.allow_large)
                           : fp::floor_weighted_sum(a.x, w);
    u64 nblocks = fp::decompose(a.x).blocks.size();
    std::string format = pick_format(g, "json");
    std::ostringstream out;
    if (format == "json") {
        out << json{{"value", value},
                    {"x", a.x},
                    {"blocks", nblocks},
                    {"weight", a.weight},
                    {"brute", a.brute}}
                   .dump()
            << "\n";
    } else if (format == "csv") {
        out << "value,x,blocks\n"
            << fp::format_double(value) << "," << a.x << "," << nblocks << "\n";
    } else {
        out << fp::format_double(value) << "\n";
    }
    emit(g, out.str());
    return 0;
}

// ---------------------------------------------------------------------------

struct FixedDivisorArgs {
    std::string poly;
};

int run_fixed_divisor(const GlobalOpts& g, const FixedDivisorArgs& a) {
    fp::IntPolynomial p = fp::IntPolynomial::parse(a.poly);
    fp::u128 dt = fp::fixed_divisor_truncated(p);
    fp::u128 df = fp::fixed_divisor_factorial(p);
    if (dt != df)
        throw std::logic_error("fixed-divisor algorithms disagree on " + p.to_string());
    if (dt > 1)
        std::cerr << "warning: fixed divisor " << fp::to_string(dt)
                  << " > 1; the polynomial can represent at most one prime\n";
    std::string format = pick_format(g, "plain");
    std::ostringstream out;
    if (format == "json") {
        out << json{{"divisor", fp::to_string(dt)},
                    {"poly", p.to_string()},
                    {"nontrivial", dt > 1}}
                   .dump()
            << "\n";
    } else if (format == "csv") {
        out << "poly,divisor\n\"" << p.to_string() << "\"," << fp::to_string(dt) << "\n";
    } else {
        out << fp::to_string(dt) << "\n";
    }
    emit(g, out.str());
    return 0;
}

// ---------------------------------------------------------------------------

struct BeattyArgs {
    std::string alpha;
    u64 limit = 1000;
    u64 first = 0;  // 0 = no cap
};

std::string beatty_echo(const BeattyArgs& a) {
    std::string s = "beatty --alpha " + a.alpha + " --limit " + std::to_string(a.limit);
    if (a.first) s += " --first " + std::to_string(a.first);
    return s;
}

int run_beatty(const GlobalOpts& g, const BeattyArgs& a) {
    fp::BeattyAlpha alpha = fp::BeattyAlpha::parse(a.alpha);
    fp::BeattyResult res = fp::beatty_primes(alpha, a.limit);
    if (res.rational_warning)
        std::cerr << "warning: alpha " << a.alpha
                  << " is rational; the sequence misses all but finitely many primes\n";
    std::vector<u64> primes = res.primes;
    if (a.first && primes.size() > a.first) primes.resize(a.first);
    if (a.first && primes.size() < a.first)
        std::cerr << "note: only " << primes.size() << " primes <= " << a.limit
                  << " (requested " << a.first << ")\n";
    std::string format = pick_format(g, "csv");
    std::ostringstream out;
    if (format == "json") {
        out << json{{"alpha", a.alpha},
                    {"limit", a.limit},
                    {"primes", primes},
                    {"count", primes.size()},
                    {"expected", res.expected},
                    {"rational_warning", res.rational_warning},
                    {"unstable", res.unstable}}
                   .dump()
            << "\n";
    } else if (format == "csv") {
        out << "p\n";
        for (u64 p : primes) out << p << "\n";
    } else {
        for (size_t i = 0; i < primes.size(); ++i)
            out << primes[i] << (i + 1 < primes.size() ? ' ' : '\n');
        if (primes.empty()) out << "\n";
    }
    emit(g, out.str());
    return 0;
}

// ---------------------------------------------------------------------------

struct PsArgs {
    std::string beta;
    long long offset = 0;
    u64 limit = 1000;
};

std::string ps_echo(const PsArgs& a) {
    return "ps --beta " + a.beta + " --offset " + std::to_string(a.offset) +
           " --limit " + std::to_string(a.limit);
}

int run_ps(const GlobalOpts& g, const PsArgs& a) {
    fp::PsExponent beta = fp::parse_ps_exponent(a.beta);
    fp::PsResult res = fp::piatetski_shapiro_primes(beta, a.offset, a.limit);
    std::string format = pick_format(g, "csv");
    std::ostringstream out;
    if (format == "json") {
        out << json{{"beta", beta.to_string()},
                    {"offset", a.offset},
                    {"limit", a.limit},
                    {"primes", res.primes},
                    {"count", res.primes.size()},
                    {"expected", res.expected}}
                   .dump()
            << "\n";
    } else if (format == "csv") {
        out << "p\n";
        for (u64 p : res.primes) out << p << "\n";
    } else {
        for (size_t i = 0; i < res.primes.size(); ++i)
            out << res.primes[i] << (i + 1 < res.primes.size() ? ' ' : '\n');
        if (res.primes.empty()) out << "\n";
    }
    emit(g, out.str());
    return 0;
}

// ---------------------------------------------------------------------------

struct GaussArgs {
    u64 limit = 100;
};

int run_gauss_twins(const GlobalOpts& g, const GaussArgs& a) {
    auto pairs = fp::gaussian_twin_pairs(a.limit);
    std::string format = pick_format(g, "csv");
    std::ostringstream out;
    if (format == "json") {
        json arr = json::array();
        for (const auto& p : pairs)
            arr.push_back({{"n", p.n},
                           {"p", p.p},
                           {"pair", {{p.a1, p.b1}, {p.a2, p.b2}}}});
        out << json{{"limit", a.limit}, {"pairs", arr}}.dump() << "\n";
    } else if (format == "csv") {
        out << "n,p,a1,b1,a2,b2\n";
        for (const auto& p : pairs)
            out << p.n << "," << p.p << "," << p.a1 << "," << p.b1 << "," << p.a2
                << "," << p.b2 << "\n";
    } else {
        for (const auto& p : pairs)
            out << p.p << " = (" << p.a1 << (p.b1 < 0 ? "" : "+") << p.b1 << "i)("
                << p.a2 << (p.b2 < 0 ? "" : "+") << p.b2 << "i)\n";
    }
    emit(g, out.str());
    return 0;
}

// ---------------------------------------------------------------------------

struct FracPartsArgs {
    std::string kind = "quad";
    u64 x = 100;
    double alpha = 2.0;
    std::string beta = "1";
};

std::string fracparts_echo(const FracPartsArgs& a) {
    std::string s = "fracparts --kind " + a.kind + " --x " + std::to_string(a.x);
    if (a.kind == "ps") {
        std::ostringstream al;
        al.precision(17);
        al << a.alpha;
        s += " --alpha " + al.str() + " --beta " + a.beta;
    }
    return s;
}

int run_fracparts(const GlobalOpts& g, const FracPartsArgs& a) {
    std::string format = pick_format(g, "csv");
    std::ostringstream out;
    if (a.kind == "dlvp") {
        double sum = fp::dlvp_sum(a.x);
        double main = fp::dlvp_main_term(a.x);
        if (format == "json")
            out << json{{"x", a.x},
                        {"sum", sum},
                        {"main_term", main},
                        {"ratio", sum / main}}
                       .dump()
                << "\n";
        else if (format == "csv")
            out << "x,sum,main_term,ratio\n"
                << a.x << "," << fp::format_double(sum) << ","
                << fp::format_double(main) << "," << fp::format_double(sum / main)
                << "\n";
        else
            out << fp::format_double(sum) << "\n";
        emit(g, out.str());
        return 0;
    }

    fp::FracPartReport rep;
    if (a.kind == "quad") {
        rep = fp::quad_frac_parts(a.x);
    } else if (a.kind == "cubic") {
        rep = fp::cubic_frac_parts(a.x);
    } else if (a.kind == "ps") {
        rep = fp::ps_frac_parts(a.alpha, fp::parse_ps_exponent(a.beta), a.x);
    } else {
        throw std::invalid_argument("unknown fracparts kind: " + a.kind);
    }
    if (format == "json") {
        json arr = json::array();
        for (const auto& s : rep.samples)
            arr.push_back({{"n", s.n},
                           {"p", s.p},
                           {"frac", s.frac},
                           {"bound", s.bound},
                           {"ratio", s.ratio}});
        out << json{{"kind", a.kind},
                    {"x", a.x},
                    {"sum", rep.sum},
                    {"max_ratio", rep.max_ratio},
                    {"asserted_from", rep.asserted_from},
                    {"asserted_ok", rep.asserted_ok},
                    {"samples", arr}}
                   .dump()
            << "\n";
    } else if (format == "csv") {
        out << fp::fracpart_csv_header() << "\n";
        for (const auto& s : rep.samples) out << fp::fracpart_csv_row(s) << "\n";
    } else {
        out << "sum " << fp::format_double(rep.sum) << "\nmax_ratio "
            << fp::format_double(rep.max_ratio) << "\nsamples " << rep.samples.size()
            << "\n";
    }
    emit(g, out.str());
    return 0;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
    std::string level = "quick";
};

int run_verify(const GlobalOpts& g, const VerifyArgs& a) {
    fp::VerifyLevel level;
    if (a.level == "quick")
        level = fp::VerifyLevel::quick;
    else if (a.level == "full")
        level = fp::VerifyLevel::full;
    else
        throw std::invalid_argument("level must be quick or full");
    auto results = fp::run_acceptance(level);
    std::string format = pick_format(g, "plain");
    std::ostringstream out;
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : results)
            arr.push_back({{"id", r.id},
                           {"name", r.name},
                           {"ran", r.ran},
                           {"pass", r.ran && r.pass},
                           {"seconds", r.seconds},
                           {"detail", r.detail}});
        out << arr.dump() << "\n";
    } else {
        for (const auto& r : results) {
            if (!r.ran) {
                out << "SKIP " << r.id << "  " << r.name << "\n";
                continue;
            }
            out << (r.pass ? "PASS " : "FAIL ") << r.id << "  " << r.name;
            if (!r.detail.empty()) out << "  (" << r.detail << ")";
            char buf[32];
            std::snprintf(buf, sizeof(buf), "  [%.2f s]", r.seconds);
            out << buf << "\n";
        }
    }
    emit(g, out.str());
    const fp::CriterionResult* first_fail = nullptr;
    for (const auto& r : results)
        if (r.ran && !r.pass && !first_fail) first_fail = &r;
    if (first_fail) {
        std::cerr << "verify: criterion " << first_fail->id << " failed: "
                  << first_fail->name << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"prime censuses over floor-quotient sequences"};
    app.require_subcommand(1);
    // let --format / --output / --seed appear after the subcommand too
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--format", g.format, "output format: json, csv or plain")
        ->check(CLI::IsMember({"json", "csv", "plain"}));
    app.add_option("--output", g.output_path, "write output to a file");
    app.add_option("--seed", g.seed, "reserved; all operations are deterministic");
    app.add_flag("--echo-config", g.echo_config,
                 "print the canonical command line and exit");

    if (const char* tc = std::getenv("FRACPRIMES_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(tc, &end, 10);
        if (end == tc || *end != '\0' || v < 1) {
            std::cerr << "FRACPRIMES_THREADS must be a positive integer\n";
            return 2;
        }
    }

    DensityArgs density_args;
    auto* sc_density = app.add_subcommand("density", "density series partial sums");
    sc_density->add_option("--poly", density_args.poly, "ascending coefficients, e.g. 1,0,1 = x^2+1")
        ->required();
    sc_density->add_option("--poly2", density_args.poly2, "second polynomial (pair series)");
    sc_density->add_option("--terms", density_args.terms, "number of terms")->required();
    sc_density->add_flag("--tail", density_args.tail, "include the integral tail bound");
    sc_density->add_option("--precision", density_args.precision,
                           "double or extended:<digits>");

    ConstantsArgs constants_args;
    auto* sc_constants = app.add_subcommand("constants", "Euler-product constants");
    sc_constants->add_option("--kind", constants_args.kind, "twin, hl2 or polignac:<m>")
        ->required();
    sc_constants->add_option("--prime-limit", constants_args.prime_limit,
                             "truncate the product at this prime")
        ->required();

    CensusArgs census_args;
    auto* sc_census = app.add_subcommand("census", "prime censuses over [x/n]");
    sc_census->add_option("--poly", census_args.poly, "ascending coefficients");
    sc_census->add_option("--poly2", census_args.poly2, "second polynomial (pair mode)");
    sc_census->add_option("--x", census_args.x, "census point")->required();
    sc_census->add_option("--mode", census_args.mode,
                          "weighted, count, pair or linking");

    FloorSumArgs floor_args;
    auto* sc_floor = app.add_subcommand("floor-sum", "sum w([x/n]) over n <= x");
    sc_floor->add_option("--x", floor_args.x, "upper limit")->required();
    sc_floor->add_option("--weight", floor_args.weight,
                         "one, identity, lambda-shift:<c> or lambda-poly:<coeffs>");
    sc_floor->add_flag("--brute", floor_args.brute, "force the literal loop oracle");
    sc_floor->add_flag("--allow-large", floor_args.allow_large,
                       "lift the 10^7 guard on --brute");

    FixedDivisorArgs fixdiv_args;
    auto* sc_fixdiv = app.add_subcommand("fixed-divisor",
                                         "gcd of a polynomial's integer image");
    sc_fixdiv->add_option("--poly", fixdiv_args.poly, "ascending coefficients")
        ->required();

    BeattyArgs beatty_args;
    auto* sc_beatty = app.add_subcommand("beatty", "primes floor(alpha n) <= limit");
    sc_beatty->add_option("--alpha", beatty_args.alpha, "sqrt2, pi, e or a decimal")
        ->required();
    sc_beatty->add_option("--limit", beatty_args.limit, "upper bound on the primes");
    sc_beatty->add_option("--first", beatty_args.first, "print only the first k primes");

    PsArgs ps_args;
    auto* sc_ps = app.add_subcommand("ps", "primes floor(n^beta) + offset <= limit");
    sc_ps->add_option("--beta", ps_args.beta, "exponent as a decimal or a/b")->required();
    sc_ps->add_option("--offset", ps_args.offset, "additive offset");
    sc_ps->add_option("--limit", ps_args.limit, "upper bound on the primes");

    GaussArgs gauss_args;
    auto* sc_gauss = app.add_subcommand("gauss-twins",
                                        "conjugate factor pairs of primes n^2+1");
    sc_gauss->add_option("--limit", gauss_args.limit, "upper bound on p")->required();

    FracPartsArgs fracparts_args;
    auto* sc_fracparts = app.add_subcommand("fracparts", "fractional-part statistics");
    sc_fracparts->add_option("--kind", fracparts_args.kind, "quad, cubic, ps or dlvp");
    sc_fracparts->add_option("--x", fracparts_args.x, "upper bound")->required();
    sc_fracparts->add_option("--alpha", fracparts_args.alpha, "root exponent (ps kind)");
    sc_fracparts->add_option("--beta", fracparts_args.beta, "sequence exponent (ps kind)");

    VerifyArgs verify_args;
    auto* sc_verify = app.add_subcommand("verify", "run the verification criteria");
    sc_verify->add_option("--level", verify_args.level, "quick or full");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (g.echo_config) {
            std::string echoed;
            if (*sc_density) echoed = density_echo(density_args);
            else if (*sc_constants) echoed = constants_echo(constants_args);
            else if (*sc_census) echoed = census_echo(census_args);
            else if (*sc_floor) echoed = floor_sum_echo(floor_args);
            else if (*sc_fixdiv) echoed = "fixed-divisor --poly " + fixdiv_args.poly;
            else if (*sc_beatty) echoed = beatty_echo(beatty_args);
            else if (*sc_ps) echoed = ps_echo(ps_args);
            else if (*sc_gauss) echoed = "gauss-twins --limit " + std::to_string(gauss_args.limit);
            else if (*sc_fracparts) echoed = fracparts_echo(fracparts_args);
            else if (*sc_verify) echoed = "verify --level " + verify_args.level;
            std::cout << echoed << "\n";
            return 0;
        }
        if (*sc_density) return run_density(g, density_args);
        if (*sc_constants) return run_constants(g, constants_args);
        if (*sc_census) return run_census(g, census_args);
        if (*sc_floor) return run_floor_sum(g, floor_args);
        if (*sc_fixdiv) return run_fixed_divisor(g, fixdiv_args);
        if (*sc_beatty) return run_beatty(g, beatty_args);
        if (*sc_ps) return run_ps(g, ps_args);
        if (*sc_gauss) return run_gauss_twins(g, gauss_args);
        if (*sc_fracparts) return run_fracparts(g, fracparts_args);
        if (*sc_verify) return run_verify(g, verify_args);
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
