#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <variant>

#include "simplexgauss/json_io.hpp"
#include "simplexgauss/verify_suites.hpp"

using namespace simplexgauss;

namespace {

int default_digits() {
    if (const char* env = std::getenv("SIMPLEX_GAUSS_DIGITS")) {
        int d = std::atoi(env);
        if (d > 0 && d <= 200) return d;
    }
    return 6;
}

struct PointInput {
    std::string coords;
    std::string minpoly;
    std::string interval;

    void attach(CLI::App* cmd, bool required = true) {
        auto* opt = cmd->add_option("coords", coords,
                                    "comma-separated coordinates: rationals \"p/q\" or integer "
                                    "polynomials in `a` (e.g. \"a,a^2,1\")");
        if (required) opt->required();
        cmd->add_option("--minpoly", minpoly,
                        "ascending integer coefficients of the defining polynomial of `a`");
        cmd->add_option("--root-interval", interval, "isolating interval \"lo,hi\" for `a`");
    }

    bool wants_field() const {
        for (const std::string& c : split_coords(coords))
            if (coord_mentions_generator(c)) return true;
        return false;
    }

    FieldPtr make_field() const {
        if (minpoly.empty() || interval.empty())
            throw ParseError("number-field coordinates need --minpoly and --root-interval", 0);
        auto [lo, hi] = parse_interval(interval);
        return NumberField::create(parse_minpoly(minpoly), lo, hi);
    }

    // dim+1 homogeneous coordinates (affine input gets a trailing 1)
    template <class S>
    Vec<S> homogeneous(int dim, const FieldPtr& field) const {
        auto parts = split_coords(coords);
        if (static_cast<int>(parts.size()) != dim && static_cast<int>(parts.size()) != dim + 1)
            throw ParseError("expected " + std::to_string(dim) + " or " + std::to_string(dim + 1) +
                                 " coordinates, got " + std::to_string(parts.size()),
                             0);
        Vec<S> v(dim + 1);
        for (size_t i = 0; i < parts.size(); ++i) {
            if constexpr (std::is_same_v<S, Rational>) {
                auto r = parse_rational(parts[i]);
                if (!r) throw ParseError("bad rational coordinate '" + parts[i] + "'", i);
                v[static_cast<Eigen::Index>(i)] = *r;
            } else {
                if (coord_mentions_generator(parts[i])) {
                    auto coeffs = parse_poly_coord(parts[i]);
                    std::vector<Rational> rc(coeffs.begin(), coeffs.end());
                    v[static_cast<Eigen::Index>(i)] = NFElement(field, std::move(rc));
                } else {
                    auto r = parse_rational(parts[i]);
                    if (!r) throw ParseError("bad coordinate '" + parts[i] + "'", i);
                    v[static_cast<Eigen::Index>(i)] = NFElement(*r).promoted(field);
                }
            }
        }
        if (static_cast<int>(parts.size()) == dim) v[dim] = S(1);
        return v;
    }
};

struct Envelope {
    Json j;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    explicit Envelope(const std::string& command) {
        j["schema_version"] = 1;
        j["command"] = command;
    }
    int emit(const Json& payload, int code = 0) {
        j["payload"] = payload;
        j["timing_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        std::cout << j.dump(2) << "\n";
        return code;
    }
};

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) s += ' ';
        s += argv[i];
    }
    return s;
}

std::vector<Symbol> parse_itinerary_spec(const std::string& text) {
    std::vector<Symbol> out;
    for (const std::string& piece : split_coords(text)) {
        if (piece.size() < 2) throw ParseError("bad itinerary symbol '" + piece + "'", 0);
        out.push_back(make_symbol(piece[0], std::stol(piece.substr(1))));
    }
    return out;
}

std::string status_name(OrbitStatus s) {
    switch (s) {
        case OrbitStatus::ReachedZero: return "reached_zero";
        case OrbitStatus::Periodic: return "periodic";
        default: return "ongoing";
    }
}

template <class S>
Json orbit_payload(const MapSystem& sys, const Orbit<S>& orbit, const FieldPtr& field,
                   int digits) {
    Json p;
    p["dim"] = sys.dim();
    p["field"] = field_to_json(field);
    p["status"] = status_name(orbit.status);
    if (orbit.status == OrbitStatus::Periodic) {
        p["preperiod"] = orbit.preperiod;
        p["period"] = orbit.period;
    }
    p["digits"] = digits;
    Json steps = Json::array();
    for (size_t i = 0; i < orbit.states.size(); ++i) {
        Json rec;
        rec["step"] = i;
        rec["symbol"] = i < orbit.symbols.size() ? to_json(orbit.symbols[i]) : Json(nullptr);
        rec["boundary"] = i < orbit.boundary_flags.size() ? Json(bool(orbit.boundary_flags[i]))
                                                          : Json(nullptr);
        Json exact = Json::array(), dec = Json::array();
        const Vec<S>& st = orbit.states[i];
        Eigen::Index w = st.size() - 1;
        for (Eigen::Index c = 0; c < st.size(); ++c) {
            if constexpr (std::is_same_v<S, NFElement>)
                exact.push_back(to_json(st[c]));
            else
                exact.push_back(to_string(st[c]));
        }
        for (Eigen::Index c = 0; c < w; ++c)  // projected affine coordinates
            dec.push_back(render_decimal(S(st[c] / st[w]), digits));
        rec["exact"] = exact;
        rec["decimal"] = dec;
        steps.push_back(rec);
    }
    p["steps"] = steps;
    return p;
}

template <class S>
std::string orbit_csv(const Orbit<S>& orbit, int digits) {
    std::ostringstream os;
    os << "step,symbol";
    int n = orbit.states.empty() ? 0 : static_cast<int>(orbit.states[0].size());
    for (int c = 0; c < n; ++c) os << ",exact" << c;
    for (int c = 0; c + 1 < n; ++c) os << ",dec" << c;
    os << "\n";
    for (size_t i = 0; i < orbit.states.size(); ++i) {
        os << i << ',' << (i < orbit.symbols.size() ? orbit.symbols[i].to_string() : "");
        const Vec<S>& st = orbit.states[i];
        Eigen::Index w = st.size() - 1;
        for (Eigen::Index c = 0; c < st.size(); ++c) os << ",\"" << to_string(st[c]) << '"';
        for (Eigen::Index c = 0; c < w; ++c)
            os << ',' << render_decimal(S(st[c] / st[w]), digits);
        os << "\n";
    }
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Farey/Gauss maps and their multidimensional generalizations"};
    app.require_subcommand(1);
    std::string command_echo = join_args(argc, argv);

    // ---- cf -------------------------------------------------------------
    auto* cf_cmd = app.add_subcommand("cf", "continued fraction expansion of a number in [0,1]");
    PointInput cf_in;
    cf_in.attach(cf_cmd);
    long cf_max_terms = 64;
    cf_cmd->add_option("--max-terms", cf_max_terms, "expansion length cap");

    // ---- orbit / itinerary ------------------------------------------------
    auto* orbit_cmd = app.add_subcommand("orbit", "orbit dump of the first-return map");
    auto* itin_cmd = app.add_subcommand("itinerary", "symbol sequence of the first-return map");
    PointInput orbit_in, itin_in;
    int orbit_dim = 2, itin_dim = 2;
    long orbit_steps = 100, itin_steps = 100;
    int orbit_digits = default_digits();
    std::string orbit_format = "json", orbit_expect;
    orbit_in.attach(orbit_cmd);
    orbit_cmd->add_option("--dim", orbit_dim, "ambient dimension")->check(CLI::Range(1, 8));
    orbit_cmd->add_option("--max-steps", orbit_steps, "step cap");
    orbit_cmd->add_option("--digits", orbit_digits, "decimal digits in renderings");
    orbit_cmd->add_option("--format", orbit_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    orbit_cmd->add_option("--expect-itinerary", orbit_expect,
                          "comma-separated symbols; mismatch exits 1");
    itin_in.attach(itin_cmd);
    itin_cmd->add_option("--dim", itin_dim, "ambient dimension")->check(CLI::Range(1, 8));
    itin_cmd->add_option("--max-steps", itin_steps, "step cap");

    // ---- approx ------------------------------------------------------------
    auto* approx_cmd = app.add_subcommand("approx", "approximating simplexes of an itinerary");
    PointInput approx_in;
    int approx_dim = 2;
    long approx_steps = 10;
    std::string approx_prefix;
    approx_in.attach(approx_cmd, false);
    approx_cmd->add_option("--dim", approx_dim, "ambient dimension")->check(CLI::Range(1, 8));
    approx_cmd->add_option("--steps", approx_steps, "prefix length");
    approx_cmd->add_option("--prefix", approx_prefix,
                           "explicit symbol prefix, e.g. \"A3,B1\" (instead of a point)");

    // ---- gamma ----------------------------------------------------------------
    auto* gamma_cmd = app.add_subcommand("gamma", "approximation-rate table gamma_i(n)");
    PointInput gamma_in;
    long gamma_steps = 50;
    std::string gamma_out = "-";
    gamma_in.attach(gamma_cmd);
    gamma_cmd->add_option("--steps", gamma_steps, "number of table rows");
    gamma_cmd->add_option("--out", gamma_out, "CSV destination path, or - for stdout");

    // ---- lyapunov ----------------------------------------------------------------
    auto* lyap_cmd = app.add_subcommand("lyapunov", "denominator growth rate of the expansion");
    PointInput lyap_in;
    long lyap_n = 200, lyap_window = 10;
    lyap_in.attach(lyap_cmd);
    lyap_cmd->add_option("--n", lyap_n, "expansion depth");
    lyap_cmd->add_option("--window", lyap_window, "tail window for the growth estimate");

    // ---- verify ----------------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "verification and evidence suites");
    std::string suite;
    SuiteParams sp;
    std::string verify_quad, verify_quad_interval = "0,1";
    long verify_max_steps = 400;
    verify_cmd->add_option("--suite", suite, "suite name")->required();
    verify_cmd->add_option("--dim", sp.dim)->check(CLI::Range(1, 8));
    verify_cmd->add_option("--samples", sp.samples);
    verify_cmd->add_option("--seed", sp.seed);
    verify_cmd->add_option("--scan-bound", sp.scan_bound);
    verify_cmd->add_option("--max-den", sp.max_denominator);
    verify_cmd->add_option("--n", sp.n);
    verify_cmd->add_option("--steps", sp.steps);
    verify_cmd->add_option("--max-steps", verify_max_steps);
    verify_cmd->add_option("--quad", verify_quad, "quadratic minpoly coefficients c0,c1,c2");
    verify_cmd->add_option("--quad-interval", verify_quad_interval);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    Envelope env(command_echo);
    try {
        if (cf_cmd->parsed()) {
            CFExpansion cf;
            if (cf_in.wants_field()) {
                FieldPtr field = cf_in.make_field();
                NVec v = cf_in.homogeneous<NFElement>(1, field);
                NFElement x = v[0] / v[1];
                cf = cf_expand(x, cf_max_terms);
            } else {
                QVec v = cf_in.homogeneous<Rational>(1, nullptr);
                Rational x = Rational(v[0]) / Rational(v[1]);
                cf = cf_expand(x, cf_max_terms);
            }
            return env.emit(to_json(cf));
        }

        if (orbit_cmd->parsed() || itin_cmd->parsed()) {
            bool full = orbit_cmd->parsed();
            PointInput& in = full ? orbit_in : itin_in;
            int dim = full ? orbit_dim : itin_dim;
            long max_steps = full ? orbit_steps : itin_steps;
            MapSystem sys = make_map_system(dim);
            Json payload;
            std::vector<Symbol> symbols;
            if (in.wants_field()) {
                FieldPtr field = in.make_field();
                NVec v = in.homogeneous<NFElement>(dim, field);
                Orbit<NFElement> orbit = run_orbit(sys, v, max_steps, full);
                symbols = orbit.symbols;
                if (full && orbit_format == "csv") {
                    std::cout << orbit_csv(orbit, orbit_digits);
                    return 0;
                }
                payload = orbit_payload(sys, orbit, field, orbit_digits);
            } else {
                QVec v = in.homogeneous<Rational>(dim, nullptr);
                Orbit<Rational> orbit = run_orbit(sys, v, max_steps, full);
                symbols = orbit.symbols;
                if (full && orbit_format == "csv") {
                    std::cout << orbit_csv(orbit, orbit_digits);
                    return 0;
                }
                payload = orbit_payload(sys, orbit, nullptr, orbit_digits);
            }
            if (!full) {
                Json slim;
                slim["dim"] = payload["dim"];
                slim["status"] = payload["status"];
                if (payload.contains("preperiod")) {
                    slim["preperiod"] = payload["preperiod"];
                    slim["period"] = payload["period"];
                }
                Json syms = Json::array();
                for (const Symbol& s : symbols) syms.push_back(to_json(s));
                slim["symbols"] = syms;
                payload = slim;
            }
            if (full && !orbit_expect.empty()) {
                auto expect = parse_itinerary_spec(orbit_expect);
                bool ok = expect.size() <= symbols.size() &&
                          std::equal(expect.begin(), expect.end(), symbols.begin());
                payload["expect_matched"] = ok;
                return env.emit(payload, ok ? 0 : 1);
            }
            return env.emit(payload);
        }

        if (approx_cmd->parsed()) {
            MapSystem sys = make_map_system(approx_dim);
            std::vector<Symbol> prefix;
            if (!approx_prefix.empty()) {
                prefix = parse_itinerary_spec(approx_prefix);
            } else if (!approx_in.coords.empty()) {
                if (approx_in.wants_field()) {
                    FieldPtr field = approx_in.make_field();
                    NVec v = approx_in.homogeneous<NFElement>(approx_dim, field);
                    prefix = run_orbit(sys, v, approx_steps, false).symbols;
                } else {
                    QVec v = approx_in.homogeneous<Rational>(approx_dim, nullptr);
                    prefix = run_orbit(sys, v, approx_steps, false).symbols;
                }
                if (static_cast<long>(prefix.size()) > approx_steps) prefix.resize(approx_steps);
            } else {
                throw ParseError("approx needs a point or --prefix", 0);
            }
            if (prefix.empty()) throw ParseError("empty itinerary prefix", 0);
            auto simplexes = approx_simplexes(sys, prefix);
            Json payload;
            Json syms = Json::array();
            for (const Symbol& s : prefix) syms.push_back(to_json(s));
            payload["prefix"] = syms;
            Json mats = Json::array(), dets = Json::array();
            for (const IMat& m : simplexes) {
                mats.push_back(to_json(m));
                dets.push_back(det(m).get_str());
            }
            payload["simplexes"] = mats;
            payload["determinants"] = dets;
            return env.emit(payload);
        }

        if (gamma_cmd->parsed()) {
            if (gamma_steps < 1) throw ParseError("--steps must be >= 1", 0);
            if (!gamma_in.wants_field())
                throw ParseError("gamma needs a non-rational (number-field) point", 0);
            FieldPtr field = gamma_in.make_field();
            MapSystem sys = make_map_system(2);
            NVec v = gamma_in.homogeneous<NFElement>(2, field);
            RateTable table = gamma_rates(sys, v, gamma_steps);
            std::string csv = rate_table_csv(table);
            Json payload;
            payload["rows"] = table.rows.size();
            payload["working_digits"] = table.working_digits;
            for (int i = 0; i < 3; ++i) {
                double mn = 0, mx = 0;
                bool first = true;
                for (const auto& row : table.rows) {
                    if (!row.gamma[i].finite) continue;
                    double g = row.gamma[i].approx;
                    if (first || g < mn) mn = g;
                    if (first || g > mx) mx = g;
                    first = false;
                }
                payload["gamma" + std::to_string(i + 1)] = Json{{"min", mn}, {"max", mx}};
            }
            if (gamma_out == "-") {
                std::cout << csv;
                std::cerr << payload.dump(2) << "\n";
                return 0;
            }
            std::ofstream out(gamma_out);
            if (!out) throw std::runtime_error("cannot write " + gamma_out);
            out << csv;
            payload["csv"] = gamma_out;
            return env.emit(payload);
        }

        if (lyap_cmd->parsed()) {
            LyapunovReport rep;
            if (lyap_in.wants_field()) {
                FieldPtr field = lyap_in.make_field();
                NVec v = lyap_in.homogeneous<NFElement>(1, field);
                rep = lyapunov_estimate(v[0] / v[1], lyap_n, lyap_window);
            } else {
                QVec v = lyap_in.homogeneous<Rational>(1, nullptr);
                CFExpansion cf = cf_expand(Rational(v[0] / v[1]), lyap_n + 1);
                if (!cf.truncated)
                    throw std::domain_error("rational input: expansion terminates, no growth rate");
                rep = lyapunov_from_terms(cf.terms, lyap_n, lyap_window);
            }
            Json payload;
            payload["n"] = rep.n;
            payload["window"] = rep.window;
            payload["value_at_n"] = rep.value_at_n;
            payload["tail_estimate"] = rep.tail_estimate;
            return env.emit(payload);
        }

        if (verify_cmd->parsed()) {
            auto names = verify_suite_names();
            VerificationReport rep;
            if (std::find(names.begin(), names.end(), suite) != names.end()) {
                if (!verify_quad.empty()) {
                    sp.quad = parse_minpoly(verify_quad);
                    std::tie(sp.quad_lo, sp.quad_hi) = parse_interval(verify_quad_interval);
                }
                rep = run_verify_suite(suite, sp);
            } else if (suite.rfind("conjecture-", 0) == 0) {
                HarnessParams hp;
                hp.dim = sp.dim;
                hp.max_denominator = sp.max_denominator;
                hp.samples = sp.samples;
                hp.seed = sp.seed;
                hp.max_steps = verify_max_steps;
                rep = conjecture_harness(suite.substr(11), hp);
            } else {
                std::cerr << "unknown suite: " << suite << "\n";
                return 2;
            }
            int code = rep.evidence_only ? 0 : (rep.passed() ? 0 : 1);
            return env.emit(to_json(rep), code);
        }
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
