// sl2p: command line front end.

#include "sl2p/acceptance.hpp"
#include "sl2p/arch_model.hpp"
#include "sl2p/ingest.hpp"
#include "sl2p/lfunction.hpp"
#include "sl2p/local_periods.hpp"
#include "sl2p/maass.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace sl2p;
using ojson = nlohmann::ordered_json;

namespace {

struct Globals {
    std::string format = "human";
    unsigned long seed = 20240607;
    unsigned threads = 1;
};

// one record per invocation; human lines, tsv rows, or a json object
class Report {
public:
    void put(const std::string& key, const std::string& machine, const std::string& human = "") {
        rows_.push_back({key, machine, human.empty() ? machine : human});
        json_[key] = machine;
    }
    void put(const std::string& key, const Rational& q) { put(key, sl2p::to_string(q)); }
    void put(const std::string& key, const ExactScalar& x) { put(key, x.serialize(), x.pretty()); }
    void put(const std::string& key, const PiPoly& x) {
        ojson m = ojson::object();
        for (auto& [e, c] : x.terms()) m[std::to_string(e)] = sl2p::to_string(c);
        rows_.push_back({key, m.dump(), x.to_string()});
        json_[key] = m;
    }
    void put(const std::string& key, const LaurentPoly& x) {
        ojson m = ojson::object();
        for (auto& [e, c] : x.terms()) m[std::to_string(e)] = c.serialize();
        rows_.push_back({key, m.dump(), x.to_string()});
        json_[key] = m;
    }
    void put(const std::string& key, bool b) { put(key, std::string(b ? "true" : "false")); }
    void put_real(const std::string& key, long double x) {
        std::ostringstream os;
        os << std::setprecision(17) << x;
        put(key, os.str());
    }
    void put_complex(const std::string& key, cplx z) {
        std::ostringstream os;
        os << std::setprecision(17) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "*i";
        put(key, os.str());
    }
    void put_json(const std::string& key, const ojson& j, const std::string& human) {
        rows_.push_back({key, j.dump(), human});
        json_[key] = j;
    }

    void print(const std::string& format, std::ostream& os) const {
        if (format == "json") {
            os << json_.dump(2) << "\n";
            return;
        }
        for (auto& r : rows_) {
            if (format == "tsv") os << r.key << "\t" << r.machine << "\n";
            else os << r.key << " = " << r.human << "\n";
        }
    }

private:
    struct Row {
        std::string key, machine, human;
    };
    std::vector<Row> rows_;
    ojson json_ = ojson::object();
};

std::map<long, int> parse_signs(const std::string& text) {
    // "3:+1,5:-1"
    std::map<long, int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("signs must look like 3:+1,5:-1");
        long p = std::stol(item.substr(0, colon));
        int w = std::stoi(item.substr(colon + 1));
        if (!is_prime(p) || (w != 1 && w != -1)) throw std::invalid_argument("bad sign entry: " + item);
        out[p] = w;
    }
    return out;
}

std::vector<Rational> parse_list(const std::string& text, std::size_t n, const char* what) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (out.size() != n) throw std::invalid_argument(std::string(what) + " needs " + std::to_string(n) + " comma-separated rationals");
    return out;
}

SymHalfIntegralMatrix parse_B(const std::string& text) {
    auto v = parse_list(text, 3, "--B");
    return {v[0], v[1], v[2]};
}

// X with X^2 = xi for xi = +-1
Gauss sqrt_unit(const Rational& xi) {
    if (xi == 1) return Gauss(1);
    if (xi == -1) return Gauss(0, 1);
    throw std::invalid_argument("--xi must be 1 or -1; use --xi-angle for other unit-circle points");
}

HalfIntegralData require_halfint(const std::string& path) {
    IngestResult r = ingest_newform(path);
    if (!r.halfIntegral) throw ingest_error(path + ": no c_fund block");
    return *r.halfIntegral;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sl2p: local periods, Fourier coefficients and central value constants"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"human", "tsv", "json"}));
    app.add_option("--seed", g.seed, "seed for randomised checks");
    app.add_option("--threads", g.threads, "worker threads for enumeration oracles")->check(CLI::Range(1u, 256u));

    Report out;
    std::function<int()> action;

    // ingest-check
    std::string ingestPath;
    auto* ingest = app.add_subcommand("ingest-check", "parse and validate a newform data file");
    ingest->add_option("file", ingestPath)->required();
    ingest->callback([&] {
        action = [&] {
            IngestResult r = ingest_newform(ingestPath);
            out.put("level", r.newform.level.get_str());
            out.put("weight", std::to_string(r.newform.weight));
            out.put("primes_with_ap", std::to_string(r.newform.heckeEigen.size()));
            if (r.halfIntegral) {
                out.put("c_fund_entries", std::to_string(r.halfIntegral->cFund.size()));
                out.put("D", r.halfIntegral->D.get_str());
            }
            out.put("status", std::string("ok"));
            return 0;
        };
    });

    // local-period
    long lp_p = 3;
    std::string lp_case = "mg";
    int lp_wp = 1;
    std::string lp_xi;
    double lp_angle = std::nan("");
    int lp_trunc = -1;
    auto* local = app.add_subcommand("local-period", "alpha^sharp, L-factor ratio and I^sharp at a finite prime");
    local->add_option("--p", lp_p)->required();
    local->add_option("--case", lp_case)->check(CLI::IsMember({"mg", "ng", "unramified"}));
    local->add_option("--wp", lp_wp)->check(CLI::IsMember({1, -1}));
    local->add_option("--xi", lp_xi, "evaluate at xi = 1 or -1 exactly");
    local->add_option("--xi-angle", lp_angle, "evaluate at xi = exp(i * angle)");
    local->add_option("--truncate", lp_trunc, "also sum the double coset series up to this cutoff");
    local->callback([&] {
        action = [&] {
            LocalConfig cfg = make_local_config(lp_p, parse_local_case(lp_case), lp_wp);
            if (cfg.kase != LocalCase::unramified) out.put("alpha_sharp", alpha_sharp_closed(cfg).to_string());
            LRatio lr = local_L_ratio(cfg);
            out.put("L_ratio", lr.value.to_string() + (lr.conventional ? " (convention)" : ""));
            out.put("I_sharp", I_sharp_p(cfg));
            if (!lp_xi.empty() && cfg.kase != LocalCase::unramified) {
                Gauss X = sqrt_unit(parse_rational(lp_xi));
                RationalFunction f = alpha_sharp_closed(cfg);
                ExactScalar v = f.num.eval_exact(ExactScalar(X)) / f.den.eval_exact(ExactScalar(X));
                out.put("alpha_sharp(xi)", v.is_rational() ? sl2p::to_string(v.to_rational()) : v.serialize());
            }
            if (!std::isnan(lp_angle) && cfg.kase != LocalCase::unramified) {
                cplx X = std::polar(1.0, lp_angle / 2);
                out.put_complex("alpha_sharp(xi)", alpha_sharp_closed(cfg).eval(X));
                if (lp_trunc >= 0) out.put_complex("alpha_sharp_truncated(xi)", alpha_sharp_truncated_exact(cfg, lp_trunc).eval(X));
            }
            return 0;
        };
    });

    // oracle
    std::string or_factor = "tau", or_element = "alpha(0)", or_variant = "mg";
    long or_p = 3, or_delta = 2;
    int or_M = 4;
    bool or_literal = false;
    auto* oracle = app.add_subcommand("oracle", "enumeration oracle for a matrix coefficient");
    oracle->add_option("--factor", or_factor)->check(CLI::IsMember({"tau", "pi", "omega"}));
    oracle->add_option("--p", or_p)->required();
    oracle->add_option("--M", or_M, "resolution p^M");
    oracle->add_option("--element", or_element, "alpha(n) or beta(m)");
    oracle->add_option("--delta", or_delta, "nonresidue unit for the pi-tilde vector");
    oracle->add_option("--variant", or_variant, "tau vector: mg (old vector) only has a closed form")
        ->check(CLI::IsMember({"mg", "ng", "unramified"}));
    oracle->add_flag("--literal", or_literal, "average over all of GL2(Z/p^M) instead of the projective line");
    oracle->callback([&] {
        action = [&] {
            OracleConfig cfg;
            cfg.p = or_p;
            cfg.M = or_M;
            cfg.threads = g.threads;
            cfg.h.p = or_p;
            cfg.h.delta = or_delta;
            cfg.variant = or_variant == "mg"   ? TauVariant::oldvector_Mg
                          : or_variant == "ng" ? TauVariant::newvector_Ng
                                               : TauVariant::unramified;
            Element e = Element::parse(or_element);
            out.put("element", e.to_string());
            if (or_factor == "tau") {
                LaurentPoly v = or_literal ? tau_oracle_literal(e, cfg) : tau_oracle(e, cfg);
                out.put("oracle", v);
                if (cfg.variant == TauVariant::oldvector_Mg) {
                    LaurentPoly c = tau_old_closed(e, or_p);
                    out.put("closed", c);
                    out.put("equal", v == c);
                }
            } else if (or_factor == "pi") {
                ExactScalar v = or_literal ? pi_tilde_oracle_literal(e, cfg) : pi_tilde_oracle(e, cfg);
                ExactScalar c = pi_tilde_closed(e, or_p, 1);
                out.put("oracle", v);
                out.put("closed", c);
                out.put("equal", v == c);
            } else {
                cplx v = omega_oracle(e, cfg);
                cplx c = omega_closed(e, or_p).to_complex();
                out.put_complex("oracle", v);
                out.put("closed", omega_closed(e, or_p));
                out.put_real("abs_error", std::abs(v - c));
            }
            return 0;
        };
    });

    // arch
    int ar_k = 1, ar_ell = 1;
    auto* arch = app.add_subcommand("arch", "archimedean period constants");
    arch->add_option("--k", ar_k)->required();
    arch->add_option("--ell", ar_ell)->required();
    arch->callback([&] {
        action = [&] {
            ArchPeriod a = arch_period(ar_k, ar_ell);
            out.put("C_inf(k,ell)", a.CinftyKL);
            out.put("I_inf_sharp", a.ISharp);
            out.put("C_inf(f,g)", a.CinftyFG);
            out.put("alpha_inf_sharp", a.alphaSharp);
            out.put("gamma_ratio", a.gammaRatio);
            return 0;
        };
    });

    // forms
    auto* forms = app.add_subcommand("forms", "Fourier coefficient layer");
    forms->require_subcommand(1);
    std::string fm_data, fm_xi = "1", fm_B, fm_Y = "1,0,1", fm_element = "one", fm_b = "1", fm_delta = "2",
                         fm_mode = "closed", fm_method = "euler", fm_source = "oracle";
    long fm_p = 3;
    int fm_m = 0;
    std::string fm_Mg = "1";
    bool fm_literal = false;

    auto* fpsi = forms->add_subcommand("psi", "local factor Psi_p(xi; alpha_p)");
    fpsi->add_option("--data", fm_data)->required();
    fpsi->add_option("--xi", fm_xi)->required();
    fpsi->add_option("--p", fm_p)->required();
    fpsi->add_flag("--literal-exponent", fm_literal, "read e_p as val_p(xi) instead of val_p(f_xi)");
    fpsi->callback([&] {
        action = [&] {
            NewformData nf = ingest_newform(fm_data).newform;
            out.put("psi", psi_factor(parse_rational(fm_xi), fm_p, nf,
                                      fm_literal ? PsiExponent::literal : PsiExponent::fundamental));
            return 0;
        };
    });
    auto* fc = forms->add_subcommand("c", "half-integral weight coefficient c(xi)");
    fc->add_option("--data", fm_data)->required();
    fc->add_option("--xi", fm_xi)->required();
    fc->add_option("--method", fm_method)->check(CLI::IsMember({"euler", "convolution", "both"}));
    fc->callback([&] {
        action = [&] {
            HalfIntegralData h = require_halfint(fm_data);
            Rational xi = parse_rational(fm_xi);
            if (fm_method != "convolution") out.put("c_euler", halfint_coefficient(h, xi, CoefficientMethod::euler));
            if (fm_method != "euler") out.put("c_convolution", halfint_coefficient(h, xi, CoefficientMethod::convolution));
            return 0;
        };
    });
    auto* fsk = forms->add_subcommand("sk", "Saito-Kurokawa coefficient A_F(B)");
    fsk->add_option("--data", fm_data)->required();
    fsk->add_option("--B", fm_B, "b1,b2,b3")->required();
    fsk->callback([&] {
        action = [&] {
            out.put("A_F", sk_coefficient(require_halfint(fm_data), parse_B(fm_B)));
            return 0;
        };
    });
    auto* fw = forms->add_subcommand("whittaker", "local Whittaker value at p | N_f");
    fw->add_option("--p", fm_p)->required();
    fw->add_option("--xi", fm_xi)->required();
    fw->add_option("--element", fm_element)->check(CLI::IsMember({"one", "s", "r"}));
    fw->add_option("--b", fm_b, "unit for the r element");
    fw->callback([&] {
        action = [&] {
            WhittakerElement el = fm_element == "one" ? WhittakerElement::one
                                  : fm_element == "s" ? WhittakerElement::s
                                                      : WhittakerElement::r;
            WhittakerValue w = whittaker_value(fm_p, parse_rational(fm_xi), el, parse_rational(fm_b));
            out.put("value", w.value);
            out.put("psi_argument", w.psiArg);
            return 0;
        };
    });
    auto* fcorr = forms->add_subcommand("correction", "correction factor E_p(B)");
    fcorr->add_option("--p", fm_p)->required();
    fcorr->add_option("--B", fm_B, "b1,b2,b3")->required();
    fcorr->add_option("--delta", fm_delta);
    fcorr->add_option("--mode", fm_mode)->check(CLI::IsMember({"closed", "sum"}));
    fcorr->callback([&] {
        action = [&] {
            Correction c = correction_factor(fm_p, parse_B(fm_B), parse_rational(fm_delta),
                                             fm_mode == "sum" ? CorrectionMode::sum : CorrectionMode::closed);
            out.put("E_p", c.value);
            out.put("vanishing", c.vanishing);
            return 0;
        };
    });
    auto* fbreve = forms->add_subcommand("breve", "coefficient of the twisted lift at (B, Y)");
    fbreve->add_option("--data", fm_data)->required();
    fbreve->add_option("--B", fm_B, "b1,b2,b3")->required();
    fbreve->add_option("--Y", fm_Y, "y1,v,y2");
    fbreve->add_option("--m", fm_m);
    fbreve->add_option("--Mg", fm_Mg);
    fbreve->add_option("--delta", fm_delta);
    fbreve->add_option("--source", fm_source)->check(CLI::IsMember({"oracle", "const_diff"}));
    fbreve->callback([&] {
        action = [&] {
            HalfIntegralData h = require_halfint(fm_data);
            auto Y = parse_list(fm_Y, 3, "--Y");
            PiPoly v = breve_coefficient(h, parse_B(fm_B), Y[0], Y[1], Y[2], h.parent.k(), fm_m, Integer(fm_Mg),
                                         parse_rational(fm_delta),
                                         fm_source == "oracle" ? MaassSource::oracle : MaassSource::const_diff);
            out.put("A_breve", v);
            return 0;
        };
    });

    // maass
    int ma_k = 1, ma_m = 1, ma_kmax = 3, ma_mmax = 2;
    bool ma_report = false;
    std::string ma_B, ma_Y = "1,0,1";
    auto* maass = app.add_subcommand("maass", "Maass raising cofactor C(B,Y)");
    maass->add_option("--k", ma_k);
    maass->add_option("--m", ma_m);
    maass->add_option("--B", ma_B, "b1,b2,b3: evaluate at this B");
    maass->add_option("--Y", ma_Y, "y1,v,y2");
    maass->add_flag("--report", ma_report, "compare the closed triple sum with the differentiation oracle");
    maass->add_option("--k-max", ma_kmax);
    maass->add_option("--m-max", ma_mmax);
    maass->callback([&] {
        action = [&] {
            if (ma_report) {
                ojson rows = ojson::array();
                std::string human;
                for (auto& r : maass_report(ma_kmax, ma_mmax)) {
                    ojson row;
                    row["k"] = r.k;
                    row["m"] = r.m;
                    row["agree"] = r.agree;
                    row["trace_coeff_const_diff"] = sl2p::to_string(r.traceCoeffConstDiff);
                    row["trace_coeff_oracle"] = sl2p::to_string(r.traceCoeffOracle);
                    row["differing_monomials"] = r.differingMonomials;
                    rows.push_back(row);
                    human += "\n  k=" + std::to_string(r.k) + " m=" + std::to_string(r.m) +
                             (r.agree ? "  agree" : "  DIFFER") + "  [b1 y1/(pi detY)] const_diff " +
                             sl2p::to_string(r.traceCoeffConstDiff) + ", oracle " + sl2p::to_string(r.traceCoeffOracle) +
                             ", " + std::to_string(r.differingMonomials) + " monomials differ";
                }
                out.put_json("comparison", rows, human);
                out.put("authoritative", std::string("oracle"));
                return 0;
            }
            out.put("oracle", maass_oracle(ma_k, ma_m).to_string());
            out.put("const_diff", const_diff_symbolic(ma_k, ma_m).to_string());
            if (!ma_B.empty()) {
                auto Y = parse_list(ma_Y, 3, "--Y");
                SymHalfIntegralMatrix B = parse_B(ma_B);
                out.put("C_oracle", maass_C_oracle(B, Y[0], Y[1], Y[2], ma_k, ma_m));
                out.put("C_const_diff", maass_C(B, Y[0], Y[1], Y[2], ma_k, ma_m));
            }
            return 0;
        };
    });

    // euler
    long eu_p = 3;
    std::string eu_af = "0", eu_ag = "0";
    int eu_k = 1, eu_ell = 1;
    double eu_s = std::nan("");
    auto* euler = app.add_subcommand("euler", "degree six Euler factor at an unramified prime");
    euler->add_option("--p", eu_p)->required();
    euler->add_option("--af", eu_af, "a_f(p)")->required();
    euler->add_option("--ag", eu_ag, "a_g(p)")->required();
    euler->add_option("--k", eu_k);
    euler->add_option("--ell", eu_ell);
    euler->add_option("--s", eu_s, "evaluate the local factor and the Gamma factor at real s");
    euler->callback([&] {
        action = [&] {
            EulerSixData d{eu_p, parse_rational(eu_af), parse_rational(eu_ag), eu_k, eu_ell};
            auto c = euler_polynomial(d);
            for (int j = 0; j <= 6; ++j) out.put("coeff_X^" + std::to_string(j), c[j]);
            if (!std::isnan(eu_s)) {
                out.put_complex("L_p(s)", euler_factor(d, cplx(eu_s, 0)));
                out.put_complex("gamma_factor(s)", gamma_factor(eu_k, eu_ell, cplx(eu_s, 0)));
                if (eu_s < eu_k + 1.5) out.put("warning", std::string("products converge only for Re(s) >> 0"));
            }
            return 0;
        };
    });

    // central-value
    std::string cv_config;
    auto* central = app.add_subcommand("central-value", "assemble the central value from Petersson data");
    central->add_option("--config", cv_config)->required();
    central->callback([&] {
        action = [&] {
            CentralValue v = central_value(ingest_central_value(cv_config));
            out.put("power_of_two", std::to_string(v.constants.powerOfTwo));
            out.put("C0", v.constants.C0);
            out.put("C_inf(f,g)", v.constants.CinftyFG);
            out.put_real("lambda", v.lambdaValue);
            return 0;
        };
    });

    // nonvanishing
    int nv_k = 1, nv_ell = 1;
    std::string nv_Nf = "1", nv_Ng = "1", nv_al;
    auto* nonvan = app.add_subcommand("nonvanishing", "local sign comparison");
    nonvan->add_option("--k", nv_k);
    nonvan->add_option("--ell", nv_ell);
    nonvan->add_option("--Nf", nv_Nf);
    nonvan->add_option("--Ng", nv_Ng);
    nonvan->add_option("--atkin-lehner", nv_al, "e.g. 3:+1,5:-1");
    nonvan->callback([&] {
        action = [&] {
            NonvanishingResult r = nonvanishing_criterion(nv_k, nv_ell, parse_signs(nv_al), Integer(nv_Nf), Integer(nv_Ng));
            for (auto& [place, s] : r.perPlace)
                out.put("place_" + place, std::to_string(s.required) + " " + std::to_string(s.provided) + " " +
                                              (s.match ? "match" : "mismatch"));
            out.put("overall", r.overall);
            return 0;
        };
    });

    // certify
    long ce_p = 3;
    std::string ce_case = "mg", ce_xi;
    int ce_wp = 1;
    double ce_angle = 0;
    auto* certify = app.add_subcommand("certify", "local witness for the subconvexity exponent");
    certify->add_option("--p", ce_p)->required();
    certify->add_option("--case", ce_case)->check(CLI::IsMember({"mg", "ng"}));
    certify->add_option("--wp", ce_wp)->check(CLI::IsMember({1, -1}));
    certify->add_option("--xi", ce_xi, "1 or -1, exact");
    certify->add_option("--xi-angle", ce_angle, "xi = exp(i * angle)");
    certify->callback([&] {
        action = [&] {
            LocalConfig cfg = make_local_config(ce_p, parse_local_case(ce_case), ce_wp);
            Certificate c = ce_xi.empty() ? subconvexity_certificate(cfg, std::polar(1.0, ce_angle))
                                          : subconvexity_certificate_exact(cfg, sqrt_unit(parse_rational(ce_xi)));
            if (c.alphaExact) out.put("alpha_sharp", *c.alphaExact);
            else out.put_real("alpha_sharp", c.alphaSharp);
            out.put_real("conductor_product", c.conductorProduct);
            out.put_real("bracket_lo", c.bracket.first);
            out.put_real("bracket_hi", c.bracket.second);
            out.put("vanishing", c.vanishing);
            out.put("passes", c.passes);
            return c.passes ? 0 : 1;
        };
    });

    // selftest
    bool st_quick = false, st_full = false;
    auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
    auto* q = selftest->add_flag("--quick", st_quick, "symbolic identities only");
    selftest->add_flag("--full", st_full, "include the enumeration oracles (default)")->excludes(q);
    selftest->callback([&] {
        action = [&] {
            AcceptanceOptions opts;
            opts.full = !st_quick;
            opts.threads = g.threads;
            opts.seed = g.seed;
            int failures = 0;
            run_acceptance(opts, [&](const CriterionResult& r) {
                if (!r.passed) ++failures;
                std::string tag = r.skipped ? "SKIP" : (r.passed ? "PASS" : "FAIL");
                out.put("criterion_" + std::to_string(r.id), tag + " " + r.detail, tag + "  " + r.title + " -- " + r.detail);
            });
            out.put("failures", std::to_string(failures));
            return failures == 0 ? 0 : 1;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    try {
        int rc = action ? action() : 0;
        out.print(g.format, std::cout);
        return rc;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
