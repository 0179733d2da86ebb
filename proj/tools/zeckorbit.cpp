#include "zeckorbit/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace zeckorbit;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot open output file: " + out_path);
        f << text;
    }
}

std::string theta_cache_path(const std::string& dir, std::uint64_t q, std::size_t m,
                             const Natural& n_cap) {
    return dir + "/theta_q" + std::to_string(q) + "_M" + std::to_string(m) + "_ncap" +
           n_cap.str() + ".json";
}

ThetaMap obtain_theta(std::uint64_t q, std::size_t m, const Natural& n_cap,
                      const std::string& cache_dir) {
    if (!cache_dir.empty()) {
        const std::string path = theta_cache_path(cache_dir, q, m, n_cap);
        if (std::filesystem::exists(path)) {
            std::ifstream f(path);
            nlohmann::json j;
            f >> j;
            return theta_from_json(j);
        }
        ThetaMap theta = theta_synthesize(q, m, n_cap);
        std::filesystem::create_directories(cache_dir);
        std::ofstream f(path);
        f << theta_to_json(theta).dump(2) << '\n';
        return theta;
    }
    return theta_synthesize(q, m, n_cap);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zeckendorf numeration arithmetic and window-orbit analysis"};
    app.require_subcommand(1);

    std::string n_str, word, window_word, family_str = "101", format = "text";
    std::string out_path, cache_dir, kind, scenario;
    std::string u_str = "1", n_cap_str = "100000";
    std::uint64_t q = 2;
    std::size_t m = 5, n_max = 10000, d_max = 8;
    bool override_ml = false, use_stream = false;

    auto* enc = app.add_subcommand("encode", "Zeckendorf word of N");
    enc->add_option("N", n_str)->required();

    auto* dec = app.add_subcommand("decode", "value of a Zeckendorf word");
    dec->add_option("word", word)->required();

    std::uint64_t carry_bound = 0;
    std::size_t delay_cap = 0;
    auto* mul = app.add_subcommand("mul", "Zeckendorf word of q*N");
    mul->add_option("N", n_str)->required();
    mul->add_option("--q", q);
    mul->add_flag("--stream", use_stream, "use the bounded-carry streaming machine");
    auto* carry_opt =
        mul->add_option("--carry-bound", carry_bound, "override the default carry bound q + C(q)");
    auto* delay_opt =
        mul->add_option("--delay-cap", delay_cap, "override the default emission delay C(q) + 2");

    auto* win = app.add_subcommand("window", "LSD-first padded window of N");
    win->add_option("N", n_str)->required();
    win->add_option("--M", m);

    auto* avd = app.add_subcommand("avoid", "does a word avoid the forbidden family?");
    avd->add_option("word", window_word)->required();
    avd->add_option("--family", family_str);

    auto* synth = app.add_subcommand("synthesize-theta", "empirical window-update map");
    synth->add_option("--q", q);
    synth->add_option("--M", m);
    synth->add_option("--n-cap", n_cap_str);
    synth->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
    synth->add_option("--family", family_str);
    synth->add_option("--out", out_path);
    synth->add_option("--cache-dir", cache_dir);

    auto* loc = app.add_subcommand("check-locality", "least extra width that removes conflicts");
    loc->add_option("--q", q);
    loc->add_option("--M", m);
    loc->add_option("--n-cap", n_cap_str);
    loc->add_option("--d-max", d_max);

    auto* orb = app.add_subcommand("orbit", "window orbit of u*q^n");
    orb->add_option("--u", u_str);
    orb->add_option("--q", q);
    orb->add_option("--M", m);
    orb->add_option("--family", family_str);
    orb->add_option("--n-max", n_max);
    orb->add_option("--n-cap", n_cap_str, "scan cap for theta synthesis (theta mode)");
    std::string mode = "oracle";
    orb->add_option("--mode", mode)->check(CLI::IsMember({"oracle", "theta"}));
    orb->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "dot", "text"}));
    orb->add_option("--out", out_path);
    orb->add_option("--cache-dir", cache_dir);
    orb->add_flag("--override-ml-check", override_ml, "allow M below the max pattern length");

    auto* dot = app.add_subcommand("export-dot", "DOT graph of a dfa, theta map, or orbit");
    dot->add_option("kind", kind)->required()->check(CLI::IsMember({"dfa", "theta", "orbit"}));
    dot->add_option("--family", family_str);
    dot->add_option("--q", q);
    dot->add_option("--M", m);
    dot->add_option("--n-cap", n_cap_str);
    dot->add_option("--n-max", n_max);
    dot->add_option("--u", u_str);
    dot->add_option("--out", out_path);
    dot->add_option("--cache-dir", cache_dir);
    dot->add_flag("--override-ml-check", override_ml);

    auto* verify = app.add_subcommand("verify-paper", "named regression against the stated example");
    verify->add_option("scenario", scenario)->required()->check(CLI::IsMember({"example-3"}));
    verify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    const auto t0 = std::chrono::steady_clock::now();
    try {
        if (enc->parsed()) {
            write_output(zeck_encode(Natural(n_str)).digits, out_path);
        } else if (dec->parsed()) {
            write_output(zeck_decode(ZeckWord{word}).str(), out_path);
        } else if (mul->parsed()) {
            const Natural n(n_str);
            if (use_stream) {
                auto spec = MultiplierSpec::make(q);
                if (carry_opt->count()) spec.carry_bound = carry_bound;
                if (delay_opt->count()) spec.delay_cap = delay_cap;
                const StreamResult r = stream_multiply(n, spec);
                if (const auto* w = std::get_if<ZeckWord>(&r)) {
                    write_output(w->digits, out_path);
                } else {
                    const auto& fail = std::get<StreamFailure>(r);
                    std::cerr << "stream failure at position " << fail.position << ": "
                              << fail.reason << "\n";
                    return 1;
                }
            } else {
                write_output(mul_oracle(n, q).digits, out_path);
            }
        } else if (win->parsed()) {
            write_output(lsd_prefix(Natural(n_str), m).symbols, out_path);
        } else if (avd->parsed()) {
            const auto family = ForbiddenFamily::parse(family_str);
            write_output(avoids(window_word, family) ? "yes" : "no", out_path);
        } else if (synth->parsed()) {
            const ThetaMap theta = obtain_theta(q, m, Natural(n_cap_str), cache_dir);
            if (format == "dot") {
                const auto family = ForbiddenFamily::parse(family_str);
                write_output(theta_to_dot(theta, &family), out_path);
            } else {
                write_output(theta_to_json(theta).dump(2), out_path);
            }
        } else if (loc->parsed()) {
            const auto d = locality_probe(q, m, Natural(n_cap_str), d_max);
            write_output(d ? std::to_string(*d) : std::string("not-found"), out_path);
        } else if (orb->parsed()) {
            OrbitConfig cfg;
            cfg.u = Natural(u_str);
            cfg.q = q;
            cfg.m = m;
            cfg.family = ForbiddenFamily::parse(family_str);
            cfg.n_max = n_max;
            cfg.override_ml_check = override_ml;
            OrbitSummary summary;
            if (mode == "theta") {
                summary = theta_orbit(cfg, obtain_theta(q, m, Natural(n_cap_str), cache_dir));
            } else {
                summary = exponent_set(cfg);
            }
            if (format == "csv")
                write_output(orbit_to_csv(summary), out_path);
            else if (format == "dot")
                write_output(orbit_to_dot(summary), out_path);
            else
                write_output(orbit_to_json(summary).dump(2), out_path);
        } else if (dot->parsed()) {
            const auto family = ForbiddenFamily::parse(family_str);
            if (kind == "dfa") {
                write_output(AvoidanceDFA(family).to_dot(), out_path);
            } else if (kind == "theta") {
                const ThetaMap theta = obtain_theta(q, m, Natural(n_cap_str), cache_dir);
                write_output(theta_to_dot(theta, &family), out_path);
            } else {
                OrbitConfig cfg;
                cfg.u = Natural(u_str);
                cfg.q = q;
                cfg.m = m;
                cfg.family = family;
                cfg.n_max = n_max;
                cfg.override_ml_check = override_ml;
                write_output(orbit_to_dot(exponent_set(cfg)), out_path);
            }
        } else if (verify->parsed()) {
            const Report report = verify_example3();
            if (format == "json") {
                write_output(report.to_json().dump(2), out_path);
            } else {
                std::ostringstream text;
                for (const auto& c : report.claims)
                    text << (c.match ? "match    " : "MISMATCH ") << c.id
                         << "  expected=" << c.expected.dump() << "  observed=" << c.observed.dump()
                         << "\n";
                write_output(text.str(), out_path);
            }
            const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - t0)
                                .count();
            std::cerr << "runtime_ms " << ms << "\n";
            return report.all_match() ? 0 : 2;
        }
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const FormatError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    std::cerr << "runtime_ms " << ms << "\n";
    return 0;
}
