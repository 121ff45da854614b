// wdlab: graded cohomology models of smooth projective varieties over finite
// fields, correspondence norms, dynamical degrees, Weil-bound and spectral
// diagnostics, on desk-scale exact models.
//
// Commands: validate | spectra | frobenius | lemma1 | make-model
// Exit codes: 0 ok, 1 semantic failure, 2 usage/parse error.

#include <CLI11.hpp>

#include <iostream>
#include <random>

#include "wdlab/io.hpp"

namespace {

using namespace wdlab;

void emit(const Json& report, const std::string& out_path) {
    const std::string text = report.dump(2) + "\n";
    if (out_path.empty()) std::cout << text;
    else write_file(out_path, text);
}

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stod(tok));
    }
    if (out.empty()) throw ParseError("empty numeric list: '" + csv + "'");
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& csv) {
    std::vector<Rational> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        if (tok.find('/') != std::string::npos) out.push_back(rat_from_string(tok));
        else out.push_back(rat_from_double(std::stod(tok)));
    }
    if (out.empty()) throw ParseError("empty grid: '" + csv + "'");
    return out;
}

const CorrespondenceAction& pick_action(const ModelBundle& bundle, const std::string& name) {
    const CorrespondenceAction* f = bundle.find(name);
    if (!f) throw Error("unknown action '" + name + "' (file has: " + [&] {
               std::string names;
               for (const auto& [n, a] : bundle.actions) names += (names.empty() ? "" : ", ") + n;
               return names.empty() ? std::string("none") : names;
           }() + ")");
    return *f;
}

int cmd_validate(const std::string& path, const std::string& out_path) {
    const std::string bytes = read_file(path);
    ModelBundle bundle;
    try {
        bundle = parse_model(bytes);
    } catch (const ActionError& e) {
        // Structurally parseable but semantically broken: report, exit 1.
        std::cerr << "invalid action: " << e.what() << "\n";
        Json rep = report_envelope("validate", path, bytes);
        rep["valid"] = false;
        rep["action_error"] = e.what();
        emit(rep, out_path);
        return 1;
    }
    const ValidationReport vr = validate_model(*bundle.model);
    Json rep = report_envelope("validate", path, bytes);
    rep.update(validation_report_json(vr));
    emit(rep, out_path);
    if (!vr.ok()) {
        std::cerr << "model invalid: " << vr.summary() << "\n";
        return 1;
    }
    std::cerr << "model valid (" << bundle.actions.size() << " action(s))\n";
    return 0;
}

int cmd_spectra(const std::string& path, const std::string& action, double tol, int iters,
                const std::string& out_path) {
    const std::string bytes = read_file(path);
    const ModelBundle bundle = parse_model(bytes);
    const ValidationReport vr = validate_model(*bundle.model);
    if (!vr.ok()) {
        std::cerr << "model invalid: " << vr.summary() << "\n";
        return 1;
    }
    const CorrespondenceAction& f = pick_action(bundle, action);
    SpectralConfig cfg;
    cfg.tol = tol;
    cfg.iterate_t = iters;
    Json rep = report_envelope("spectra", path, bytes);
    rep["action"] = action;
    rep["spectra"] = spectral_report_json(spectral_report(f, cfg));
    emit(rep, out_path);
    return 0;
}

int cmd_frobenius(const std::string& path, const std::string& action_name,
                  const std::string& s_grid_csv, const std::string& r_grid_csv,
                  const std::string& polarized_name, int t_max, const std::string& s_lattice_csv,
                  const std::string& mode_name, double tol, const std::string& out_path) {
    int mode_mask = 3;
    if (mode_name == "entrywise") mode_mask = 1;
    else if (mode_name == "conjugate-transpose") mode_mask = 2;
    else if (mode_name != "both")
        throw ParseError("mode must be entrywise | conjugate-transpose | both");
    const std::string bytes = read_file(path);
    const ModelBundle bundle = parse_model(bytes);
    const ValidationReport vr = validate_model(*bundle.model);
    if (!vr.ok()) {
        std::cerr << "model invalid: " << vr.summary() << "\n";
        return 1;
    }
    const CorrespondenceAction& F = pick_action(bundle, action_name);
    if (!bundle.model->q) throw Error("model carries no base-field cardinality q");
    const long long q = *bundle.model->q;

    Json rep = report_envelope("frobenius", path, bytes);
    rep["action"] = action_name;
    rep["q"] = q;
    rep["tolerance"] = tol;

    rep["weil_rh"] = weil_rows_json(weil_rh_check(F, q, tol));

    // Fractional powers across the s-grid; failures become rows, not errors.
    const std::vector<double> s_grid = parse_double_list(s_grid_csv);
    Json frac = Json::array();
    for (int k = 0; k <= 2 * bundle.model->n; ++k) {
        if (bundle.model->dim(k) == 0) continue;
        for (double s : s_grid) {
            Json row;
            row["k"] = k;
            row["s"] = s;
            try {
                const FractionalPower fp = fractional_power(F, k, s, tol);
                row["result"] = fractional_power_json(fp);
                double max_mod_dev = 0.0;
                const double target = std::pow(static_cast<double>(q), s * k / 2.0);
                for (Eigen::Index i = 0; i < fp.base_eigenvalues.size(); ++i) {
                    const double mod = std::pow(std::abs(fp.base_eigenvalues(i)), s);
                    max_mod_dev = std::max(max_mod_dev, std::abs(mod - target));
                }
                row["modulus_target"] = target;
                row["max_modulus_deviation"] = max_mod_dev;
            } catch (const Error& e) {
                row["error"] = e.what();
            }
            frac.push_back(std::move(row));
        }
    }
    rep["fractional_powers"] = std::move(frac);

    const std::vector<Rational> grid =
        r_grid_csv.empty() ? default_r_grid(q) : parse_rational_list(r_grid_csv);
    rep["eq2_sweep"] = eq2_sweep_json(eq2_sweep(F, grid));

    // Scaled-inequality numerics for a polarized action against F.
    const CorrespondenceAction& f = polarized_name.empty() ? F : pick_action(bundle, polarized_name);
    Json thm;
    thm["polarized_action"] = polarized_name.empty() ? action_name : polarized_name;
    if (!f.polarization) {
        thm["error"] = "selected action carries no polarization";
    } else {
        std::vector<double> lattice = parse_double_list(s_lattice_csv);
        thm.update(theorem1_json(theorem1_inequality(f, F, q, lattice, t_max, tol), mode_mask));
    }
    rep["theorem1"] = std::move(thm);
    emit(rep, out_path);
    return 0;
}

int cmd_lemma1(double lambda_re, double lambda_im, int size, const std::string& mode_name,
               int random_count, int random_dim, unsigned seed, int trace_t,
               const std::string& out_path) {
    std::vector<ConjugationMode> modes;
    if (mode_name == "both") modes = {ConjugationMode::entrywise, ConjugationMode::conjugate_transpose};
    else if (mode_name == "entrywise") modes = {ConjugationMode::entrywise};
    else if (mode_name == "conjugate-transpose") modes = {ConjugationMode::conjugate_transpose};
    else throw ParseError("mode must be entrywise | conjugate-transpose | both");

    Json rep = report_envelope("lemma1", "", "");
    rep["seed"] = seed;
    rep["tolerance"] = 1e-9;

    Json audits = Json::array();
    if (size > 0) {
        const Complex lambda(lambda_re, lambda_im);
        for (auto mode : modes) {
            audits.push_back(lemma1_audit_json(lemma1_audit_jordan(lambda, size, mode)));
            CplxMatrix j = CplxMatrix::Zero(size, size);
            for (int i = 0; i < size; ++i) {
                j(i, i) = lambda;
                if (i + 1 < size) j(i, i + 1) = 1.0;
            }
            Json tr;
            tr["input"] = audits.back()["input"];
            tr["mode"] = to_string(mode);
            tr["trace_radius"] = trace_radius_json(trace_radius_identity(j, mode, trace_t));
            audits.push_back(std::move(tr));
        }
    }

    if (random_count > 0) {
        std::mt19937 rng(seed);
        auto uniform = [&rng]() { return 2.0 * (rng() / 4294967296.0) - 1.0; };
        Json summary;
        int pass[2] = {0, 0};
        Json failures = Json::array();
        for (int i = 0; i < random_count; ++i) {
            const int dim = 2 + static_cast<int>(rng() % static_cast<unsigned>(std::max(1, random_dim - 1)));
            CplxMatrix a(dim, dim);
            for (int r = 0; r < dim; ++r)
                for (int c = 0; c < dim; ++c) a(r, c) = Complex(uniform(), uniform());
            for (auto mode : modes) {
                const Lemma1Audit audit = lemma1_audit(a, mode);
                const int mi = mode == ConjugationMode::entrywise ? 0 : 1;
                if (audit.pass) ++pass[mi];
                else {
                    Json f = lemma1_audit_json(audit);
                    f["sample"] = i;
                    failures.push_back(std::move(f));
                }
            }
        }
        summary["count"] = random_count;
        summary["max_dim"] = random_dim;
        summary["pass_entrywise"] = pass[0];
        summary["pass_conjugate_transpose"] = pass[1];
        summary["failures"] = std::move(failures);
        rep["random_sweep"] = std::move(summary);
    }

    // The shipped divergence case between the two conjugation readings.
    CplxMatrix shear = CplxMatrix::Zero(2, 2);
    shear(0, 1) = 100.0;
    Json builtin = Json::array();
    for (auto mode : {ConjugationMode::entrywise, ConjugationMode::conjugate_transpose}) {
        Json a = lemma1_audit_json(lemma1_audit(shear, mode));
        a["input"] = "[[0,100],[0,0]]";
        builtin.push_back(std::move(a));
    }
    rep["builtin_cases"] = std::move(builtin);
    rep["audits"] = std::move(audits);
    emit(rep, out_path);
    return 0;
}

int cmd_make_model(const std::string& kind, int n, long long q, long long p, long long a4,
                   long long a6, long long trace, bool have_trace,
                   const std::vector<std::string>& curves, const std::string& traces_csv,
                   const std::string& left, const std::string& right, long long mult_m,
                   const std::string& out_path) {
    ModelBundle bundle;
    if (kind == "pn") {
        bundle = projective_space_model(n, q);
    } else if (kind == "elliptic") {
        if (have_trace) bundle = elliptic_model(q, trace);
        else bundle = elliptic_model_from_curve({p, a4, a6});
    } else if (kind == "abelian-product") {
        std::vector<CountResult> counts;
        for (const auto& spec : curves) {
            std::stringstream ss(spec);
            std::string tok;
            std::vector<long long> v;
            while (std::getline(ss, tok, ',')) v.push_back(std::stoll(tok));
            if (v.size() != 3) throw ParseError("--curve expects p,a4,a6");
            counts.push_back(ec_point_count({v[0], v[1], v[2]}));
        }
        if (!traces_csv.empty()) {
            std::stringstream ss(traces_csv);
            std::string tok;
            while (std::getline(ss, tok, ','))
                counts.push_back({q, q + 1 - std::stoll(tok), std::stoll(tok)});
        }
        bundle = abelian_product_model(counts);
    } else if (kind == "kunneth") {
        bundle = kunneth_bundle(load_model_file(left), load_model_file(right));
    } else {
        throw ParseError("kind must be pn | elliptic | abelian-product | kunneth");
    }
    if (mult_m != 0) bundle.add("mult_m", mult_by_m_endomorphism(bundle.model, mult_m));

    const ValidationReport vr = validate_model(*bundle.model);
    if (!vr.ok()) throw Error("constructed model failed validation: " + vr.summary());
    const std::string text = serialize_model(bundle);
    if (out_path.empty()) std::cout << text;
    else write_file(out_path, text);
    std::cerr << "model written (" << bundle.actions.size() << " action(s))\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wdlab: correspondence norms, dynamical degrees, and spectral diagnostics "
                 "on exact graded cohomology models"};
    app.require_subcommand(1);

    std::string path, out_path, action = "frobenius";
    double tol = 1e-9;
    int iters = 24;

    auto* validate = app.add_subcommand("validate", "check a model file against every invariant");
    validate->add_option("path", path, "model file")->required();
    validate->add_option("--out", out_path, "write the report here instead of stdout");

    auto* spectra = app.add_subcommand("spectra", "full spectral report for one action");
    spectra->add_option("path", path, "model file")->required();
    std::string spectra_action;
    spectra->add_option("--action", spectra_action, "action name")->required();
    spectra->add_option("--tol", tol, "verdict tolerance");
    spectra->add_option("--iters", iters, "iterate-norm horizon");
    spectra->add_option("--out", out_path, "write the report here instead of stdout");

    auto* frob = app.add_subcommand("frobenius", "Weil checks, fractional powers, scaled sweeps");
    frob->add_option("path", path, "model file")->required();
    frob->add_option("--action", action, "Frobenius-type action name");
    std::string s_grid = "-1.5,-0.5,0.5,1.5", r_grid, polarized, s_lattice = "-3,-2,-1,0";
    std::string frob_mode = "both";
    int t_max = 5;
    frob->add_option("--s-grid", s_grid, "fractional exponents, comma separated");
    frob->add_option("--r-grid", r_grid, "scaling grid (default: 25 log-spaced points in [q^-3,q^3])");
    frob->add_option("--polarized-action", polarized, "polarized action for the inequality numerics");
    frob->add_option("--t-max", t_max, "iterate range 1..t_max");
    frob->add_option("--s-lattice", s_lattice, "integer exponents s <= 0 for the inequality numerics");
    frob->add_option("--mode", frob_mode, "conjugation reading(s) reported by the inequality numerics");
    frob->add_option("--tol", tol, "tolerance");
    frob->add_option("--out", out_path, "write the report here instead of stdout");

    auto* lemma = app.add_subcommand("lemma1", "spectral-bound audits for both conjugation readings");
    double lambda_re = 0.0, lambda_im = 0.0;
    int size = 0, random_count = 0, random_dim = 8, trace_t = 60;
    unsigned seed = 42;
    std::string mode = "both";
    lemma->add_option("--lambda", lambda_re, "Jordan eigenvalue, real part");
    lemma->add_option("--lambda-im", lambda_im, "Jordan eigenvalue, imaginary part");
    lemma->add_option("--size", size, "Jordan block size");
    lemma->add_option("--mode", mode, "entrywise | conjugate-transpose | both");
    lemma->add_option("--random", random_count, "number of seeded random matrices");
    lemma->add_option("--dim", random_dim, "max dimension of random matrices");
    lemma->add_option("--seed", seed, "RNG seed");
    lemma->add_option("--trace-t", trace_t, "trace-radius horizon");
    lemma->add_option("--out", out_path, "write the report here instead of stdout");

    auto* mk = app.add_subcommand("make-model", "emit a canonical built-in model file");
    std::string kind, traces_csv, left, right;
    int mk_n = 1;
    long long mk_q = 2, mk_p = 5, mk_a4 = 1, mk_a6 = 1, mk_trace = 0, mult_m = 0;
    bool have_trace = false;
    std::vector<std::string> curve_specs;
    mk->add_option("kind", kind, "pn | elliptic | abelian-product | kunneth")->required();
    mk->add_option("--n", mk_n, "projective-space dimension");
    mk->add_option("--q", mk_q, "base-field cardinality");
    mk->add_option("--p", mk_p, "curve characteristic (runs the counting oracle)");
    mk->add_option("--a4", mk_a4, "curve coefficient a4");
    mk->add_option("--a6", mk_a6, "curve coefficient a6");
    auto* topt = mk->add_option("--trace", mk_trace, "Frobenius trace (skips the oracle)");
    mk->add_option("--curve", curve_specs, "curve as p,a4,a6 (repeatable)");
    mk->add_option("--traces", traces_csv, "comma-separated traces over --q");
    mk->add_option("--left", left, "left factor model file (kunneth)");
    mk->add_option("--right", right, "right factor model file (kunneth)");
    mk->add_option("--mult-m", mult_m, "attach multiplication-by-m (abelian models)");
    mk->add_option("--out", out_path, "write the model here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(path, out_path);
        if (spectra->parsed()) return cmd_spectra(path, spectra_action, tol, iters, out_path);
        if (frob->parsed())
            return cmd_frobenius(path, action, s_grid, r_grid, polarized, t_max, s_lattice,
                                 frob_mode, tol, out_path);
        if (lemma->parsed())
            return cmd_lemma1(lambda_re, lambda_im, size, mode, random_count, random_dim, seed,
                              trace_t, out_path);
        if (mk->parsed()) {
            have_trace = topt->count() > 0;
            return cmd_make_model(kind, mk_n, mk_q, mk_p, mk_a4, mk_a6, mk_trace, have_trace,
                                  curve_specs, traces_csv, left, right, mult_m, out_path);
        }
    } catch (const wdlab::ParseError& e) {
        std::cerr << "error: " << e.what() << " (see --help for usage)\n";
        return 2;
    } catch (const wdlab::SpecError& e) {
        std::cerr << "error: " << e.what() << " (see --help for usage)\n";
        return 2;
    } catch (const wdlab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
