#include "wdlab/io.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

namespace wdlab {

namespace {

Rational parse_rat_field(const Json& j, const std::string& where) {
    if (!j.is_string()) throw ParseError(where + ": expected a \"num/den\" string");
    return rat_from_string(j.get<std::string>());
}

long long int_field(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
    return j.get<long long>();
}

const Json& member(const Json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(where + ": missing field '" + key + "'");
    return *it;
}

RatVector parse_rat_vector(const Json& j, Eigen::Index expect, const std::string& where) {
    if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != expect)
        throw ParseError(where + ": expected an array of " + std::to_string(expect) + " rationals");
    RatVector v(expect);
    for (Eigen::Index i = 0; i < expect; ++i)
        v(i) = parse_rat_field(j[static_cast<size_t>(i)], where);
    return v;
}

RatMatrix parse_rat_matrix(const Json& j, Eigen::Index rows, Eigen::Index cols,
                           const std::string& where) {
    if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != rows)
        throw ParseError(where + ": expected " + std::to_string(rows) + " rows");
    RatMatrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r)
        m.row(r) = parse_rat_vector(j[static_cast<size_t>(r)], cols,
                                    where + " row " + std::to_string(r))
                       .transpose();
    return m;
}

}  // namespace

Json json_rat(const Rational& r) { return rat_to_string(r); }

Json json_rat_vector(const RatVector& v) {
    Json a = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(rat_to_string(v(i)));
    return a;
}

Json json_rat_matrix(const RatMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(rat_to_string(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string serialize_model(const ModelBundle& b) {
    const VarietyModel& m = *b.model;
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["n"] = m.n;
    if (m.q) j["q"] = *m.q;
    j["dims"] = Json::array();
    for (auto d : m.dims) j["dims"].push_back(d);
    j["basis_labels"] = m.labels;

    Json cup = Json::array();
    for (int k = 0; k <= 2 * m.n; ++k)
        for (int l = 0; k + l <= 2 * m.n; ++l) {
            const RatMatrix& block = m.cup_block(k, l);
            for (Eigen::Index i = 0; i < m.dim(k); ++i)
                for (Eigen::Index jj = 0; jj < m.dim(l); ++jj) {
                    const Eigen::Index row = i * m.dim(l) + jj;
                    bool nonzero = false;
                    for (Eigen::Index t = 0; t < block.cols(); ++t)
                        if (block(row, t) != 0) nonzero = true;
                    if (!nonzero) continue;
                    Json entry;
                    entry["k"] = k;
                    entry["l"] = l;
                    entry["i"] = i;
                    entry["j"] = jj;
                    entry["target_coeffs"] = json_rat_vector(block.row(row).transpose());
                    cup.push_back(std::move(entry));
                }
        }
    j["cup"] = std::move(cup);
    j["integrate"] = json_rat_vector(m.integrate);
    j["ample"] = json_rat_vector(m.ample);
    Json alg = Json::array();
    for (const auto& idx : m.algebraic) {
        Json level = Json::array();
        for (auto i : idx) level.push_back(i);
        alg.push_back(std::move(level));
    }
    j["algebraic"] = std::move(alg);

    std::vector<std::pair<std::string, const CorrespondenceAction*>> sorted;
    for (const auto& [name, act] : b.actions) sorted.emplace_back(name, &act);
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& c) { return a.first < c.first; });
    Json actions = Json::array();
    for (const auto& [name, act] : sorted) {
        Json aj;
        aj["name"] = name;
        Json mats;
        for (int k = 0; k <= 2 * m.n; ++k)
            if (m.dim(k) > 0) mats[std::to_string(k)] = json_rat_matrix(act->mats[static_cast<size_t>(k)]);
        aj["matrices"] = std::move(mats);
        if (act->polarization) aj["polarization"] = rat_to_string(*act->polarization);
        aj["is_ring_map"] = act->is_ring_map;
        actions.push_back(std::move(aj));
    }
    j["actions"] = std::move(actions);
    return j.dump(2) + "\n";
}

ModelBundle parse_model(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("JSON syntax error: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("model file: top level must be an object");
    if (int_field(member(j, "schema_version", "model"), "schema_version") != kSchemaVersion)
        throw ParseError("unsupported schema_version");

    auto model = std::make_shared<VarietyModel>();
    model->n = static_cast<int>(int_field(member(j, "n", "model"), "n"));
    if (model->n < 0 || model->n > 64) throw ParseError("n out of range");
    const int top = 2 * model->n;
    if (j.contains("q")) model->q = int_field(j["q"], "q");

    const Json& dims = member(j, "dims", "model");
    if (!dims.is_array() || static_cast<int>(dims.size()) != top + 1)
        throw ParseError("dims: expected " + std::to_string(top + 1) + " entries");
    for (const auto& d : dims) {
        const long long v = int_field(d, "dims");
        if (v < 0 || v > 4096) throw ParseError("dims: entry out of range");
        model->dims.push_back(static_cast<Eigen::Index>(v));
    }

    const Json& labels = member(j, "basis_labels", "model");
    if (!labels.is_array() || static_cast<int>(labels.size()) != top + 1)
        throw ParseError("basis_labels: expected one list per degree");
    for (int k = 0; k <= top; ++k) {
        const Json& lk = labels[static_cast<size_t>(k)];
        if (!lk.is_array() || static_cast<Eigen::Index>(lk.size()) != model->dim(k))
            throw ParseError("basis_labels: wrong count at degree " + std::to_string(k));
        std::vector<std::string> out;
        for (const auto& s : lk) {
            if (!s.is_string()) throw ParseError("basis_labels: labels must be strings");
            out.push_back(s.get<std::string>());
        }
        model->labels.push_back(std::move(out));
    }

    allocate_cup_blocks(*model);
    const Json& cup = member(j, "cup", "model");
    if (!cup.is_array()) throw ParseError("cup: expected an array of entries");
    for (const auto& entry : cup) {
        const int k = static_cast<int>(int_field(member(entry, "k", "cup"), "cup.k"));
        const int l = static_cast<int>(int_field(member(entry, "l", "cup"), "cup.l"));
        const auto i = static_cast<Eigen::Index>(int_field(member(entry, "i", "cup"), "cup.i"));
        const auto jj = static_cast<Eigen::Index>(int_field(member(entry, "j", "cup"), "cup.j"));
        if (k < 0 || l < 0 || k + l > top) throw ParseError("cup: degrees out of range");
        if (i < 0 || i >= model->dim(k) || jj < 0 || jj >= model->dim(l))
            throw ParseError("cup: basis index out of range");
        model->cup_block(k, l).row(i * model->dim(l) + jj) =
            parse_rat_vector(member(entry, "target_coeffs", "cup"), model->dim(k + l),
                             "cup.target_coeffs")
                .transpose();
    }

    model->integrate = parse_rat_vector(member(j, "integrate", "model"), model->dim(top), "integrate");
    model->ample = parse_rat_vector(member(j, "ample", "model"), model->n >= 1 ? model->dim(2) : 0,
                                    "ample");

    const Json& alg = member(j, "algebraic", "model");
    if (!alg.is_array() || static_cast<int>(alg.size()) != model->n + 1)
        throw ParseError("algebraic: expected one index list per level");
    for (int lev = 0; lev <= model->n; ++lev) {
        const Json& idx = alg[static_cast<size_t>(lev)];
        if (!idx.is_array()) throw ParseError("algebraic: level must be an array");
        std::vector<Eigen::Index> out;
        for (const auto& v : idx) {
            const long long x = int_field(v, "algebraic index");
            if (x < 0 || x >= model->dim(2 * lev)) throw ParseError("algebraic: index out of range");
            out.push_back(static_cast<Eigen::Index>(x));
        }
        model->algebraic.push_back(std::move(out));
    }

    ModelBundle bundle;
    bundle.model = model;
    const Json& actions = member(j, "actions", "model");
    if (!actions.is_array()) throw ParseError("actions: expected an array");
    for (const auto& aj : actions) {
        const Json& namej = member(aj, "name", "action");
        if (!namej.is_string()) throw ParseError("action name must be a string");
        const std::string name = namej.get<std::string>();
        const Json& mats = member(aj, "matrices", "action " + name);
        std::vector<RatMatrix> out(static_cast<size_t>(top) + 1);
        for (int k = 0; k <= top; ++k) {
            const Eigen::Index d = model->dim(k);
            if (d == 0) {
                out[static_cast<size_t>(k)] = RatMatrix::Zero(0, 0);
                continue;
            }
            auto it = mats.find(std::to_string(k));
            if (it == mats.end())
                throw ParseError("action " + name + ": missing matrix for degree " +
                                 std::to_string(k));
            out[static_cast<size_t>(k)] =
                parse_rat_matrix(*it, d, d, "action " + name + " degree " + std::to_string(k));
        }
        std::optional<Rational> pol;
        if (aj.contains("polarization"))
            pol = parse_rat_field(aj["polarization"], "action " + name + " polarization");
        const Json& ring = member(aj, "is_ring_map", "action " + name);
        if (!ring.is_boolean()) throw ParseError("action " + name + ": is_ring_map must be boolean");
        bundle.add(name, make_action(model, std::move(out), ring.get<bool>(), std::move(pol)));
    }
    return bundle;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << text;
}

ModelBundle load_model_file(const std::string& path) { return parse_model(read_file(path)); }

std::string content_hash(const std::string& bytes) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

std::string timestamp_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&t, &tm_utc);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

Json validation_report_json(const ValidationReport& rep) {
    Json j;
    j["valid"] = rep.ok();
    Json issues = Json::array();
    for (const auto& i : rep.issues) {
        Json e;
        e["check"] = i.check;
        e["detail"] = i.detail;
        issues.push_back(std::move(e));
    }
    j["issues"] = std::move(issues);
    return j;
}

Json norm_table_json(const NormTable& t) {
    Json j;
    j["h_norms"] = Json::array();
    for (const auto& v : t.h_norms) j["h_norms"].push_back(rat_to_string(v));
    j["n_norms"] = Json::array();
    for (const auto& v : t.n_norms) j["n_norms"].push_back(rat_to_string(v));
    j["degrees"] = Json::array();
    for (const auto& v : t.degrees) j["degrees"].push_back(rat_to_string(v));
    return j;
}

namespace {

Json growth_json(const GrowthRate& g) {
    Json j;
    j["spectral"] = g.spectral;
    j["empirical"] = g.empirical;
    j["gap"] = g.gap;
    return j;
}

}  // namespace

Json spectral_report_json(const SpectralReport& rep) {
    Json j;
    j["tolerance"] = rep.config.tol;
    j["iterate_t"] = rep.config.iterate_t;
    Json degrees = Json::array();
    for (const auto& d : rep.degrees) {
        Json row;
        row["k"] = d.k;
        row["chi"] = growth_json(d.chi);
        row["semisimple"] = d.semisimple;
        degrees.push_back(std::move(row));
    }
    j["degrees"] = std::move(degrees);
    Json levels = Json::array();
    for (const auto& l : rep.levels) {
        Json row;
        row["j"] = l.j;
        row["lambda"] = growth_json(l.lambda);
        if (l.b) {
            row["b_coh"] = l.b->b_coh;
            row["b_alg"] = l.b->b_alg;
            row["prop1_violation"] = l.prop1_violation;
        } else {
            row["b_error"] = l.b_error;
        }
        levels.push_back(std::move(row));
    }
    j["levels"] = std::move(levels);
    Json ddc = Json::array();
    for (const auto& r : rep.ddc) {
        Json row;
        row["j"] = r.j;
        row["chi_2j"] = r.chi;
        row["lambda_j"] = r.lambda;
        row["gap"] = r.gap;
        row["pass"] = r.pass;
        ddc.push_back(std::move(row));
    }
    j["ddc"] = std::move(ddc);
    Json lc;
    lc["holds"] = rep.log_concave.holds;
    lc["degrees"] = Json::array();
    for (const auto& d : rep.log_concave.degrees) lc["degrees"].push_back(rat_to_string(d));
    lc["witnesses"] = Json::array();
    for (const auto& w : rep.log_concave.witnesses) {
        Json wj;
        wj["k"] = w.k;
        wj["a_prev"] = rat_to_string(w.a_prev);
        wj["a_k"] = rat_to_string(w.a_k);
        wj["a_next"] = rat_to_string(w.a_next);
        lc["witnesses"].push_back(std::move(wj));
    }
    j["log_concavity"] = std::move(lc);
    Json ent;
    ent["max_chi"] = rep.entropy.max_chi;
    ent["max_lambda"] = rep.entropy.max_lambda;
    ent["gap"] = rep.entropy.gap;
    ent["pass"] = rep.entropy.pass;
    j["entropy_comparison"] = std::move(ent);
    if (rep.norm_comparison_error.empty()) {
        Json nc;
        nc["c"] = rep.norm_comparison.c;
        if (rep.norm_comparison.c_exact) nc["c_exact"] = rat_to_string(*rep.norm_comparison.c_exact);
        nc["rows"] = Json::array();
        for (const auto& r : rep.norm_comparison.rows) {
            Json row;
            row["k"] = r.k;
            row["odd"] = r.odd;
            row["norm_h"] = rat_to_string(r.norm_h);
            row["ratio"] = r.ratio;
            if (r.exact) row["ratio_exact"] = rat_to_string(*r.exact);
            nc["rows"].push_back(std::move(row));
        }
        j["norm_comparison"] = std::move(nc);
    } else {
        j["norm_comparison_error"] = rep.norm_comparison_error;
    }
    j["norms"] = norm_table_json(rep.norms);
    return j;
}

Json weil_rows_json(const std::vector<WeilRow>& rows) {
    Json j = Json::array();
    for (const auto& r : rows) {
        Json row;
        row["k"] = r.k;
        row["target"] = r.target;
        row["moduli"] = r.moduli;
        row["max_deviation"] = r.max_deviation;
        row["pass"] = r.pass;
        j.push_back(std::move(row));
    }
    return j;
}

Json eq2_sweep_json(const Eq2Sweep& sweep) {
    Json j;
    j["c_global"] = to_double(sweep.c_global);
    j["c_global_exact"] = rat_to_string(sweep.c_global);
    j["transpose_identity_exact"] = sweep.transpose_identity_exact;
    Json rows = Json::array();
    for (const auto& r : sweep.rows) {
        Json row;
        row["r"] = to_double(r.r);
        row["r_exact"] = rat_to_string(r.r);
        row["max_ratio"] = to_double(r.max_ratio);
        row["max_ratio_exact"] = rat_to_string(r.max_ratio);
        Json per_k = Json::array();
        for (const auto& v : r.ratio_per_k) per_k.push_back(to_double(v));
        row["ratio_per_k"] = std::move(per_k);
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

Json complex_matrix_json(const CplxMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            Json e;
            e["re"] = m(r, c).real();
            e["im"] = m(r, c).imag();
            row.push_back(std::move(e));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json lemma1_audit_json(const Lemma1Audit& audit) {
    Json j;
    j["input"] = audit.input;
    j["mode"] = to_string(audit.mode);
    j["b"] = complex_matrix_json(audit.b);
    j["sp_a"] = audit.sp_a;
    j["sp_b"] = audit.sp_b;
    j["bound"] = audit.bound;
    j["pass"] = audit.pass;
    if (audit.has_entry_comparison) {
        j["entries_match_exactly"] = audit.entries_match_exactly;
        j["max_entry_deviation"] = audit.max_entry_deviation;
        j["mismatched_formulas"] = audit.mismatched_formulas;
    }
    return j;
}

Json trace_radius_json(const TraceRadiusReport& rep) {
    Json j;
    j["sp"] = rep.sp;
    j["final_gap"] = rep.final_gap;
    j["limsup_estimate"] = rep.limsup_estimate;
    j["direction_changes"] = rep.direction_changes;
    j["converged"] = rep.converged;
    Json rows = Json::array();
    for (const auto& r : rep.rows) {
        Json row;
        row["n"] = r.n;
        row["trace_re"] = r.trace.real();
        row["trace_im"] = r.trace.imag();
        row["root"] = r.root;
        row["gap"] = r.gap;
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

Json theorem1_json(const Theorem1Report& rep, int mode_mask) {
    Json j;
    const char* mode_name[2] = {"entrywise", "conjugate_transpose"};
    for (int mi = 0; mi < 2; ++mi) {
        if (!(mode_mask & (1 << mi))) continue;
        Json mj;
        mj["c_global"] = rep.c_global[mi];
        mj["c_per_t"] = rep.c_per_t[mi];
        j[mode_name[mi]] = std::move(mj);
    }
    Json points = Json::array();
    for (const auto& p : rep.points) {
        Json row;
        row["s"] = p.s;
        row["t"] = p.t;
        row["k"] = p.k;
        row["rhs"] = p.rhs;
        for (int mi = 0; mi < 2; ++mi) {
            if (!(mode_mask & (1 << mi))) continue;
            Json mj;
            mj["sp_factor"] = p.sp_factor[mi];
            mj["lemma1_pass"] = p.lemma1_pass[mi];
            mj["lower_bound_ok"] = p.lower_bound_ok[mi];
            mj["lhs"] = p.lhs[mi];
            row[mode_name[mi]] = std::move(mj);
        }
        points.push_back(std::move(row));
    }
    j["points"] = std::move(points);
    return j;
}

Json fractional_power_json(const FractionalPower& fp) {
    Json j;
    j["degree"] = fp.degree;
    j["s"] = fp.s;
    j["branch"] = "principal-log";
    j["condition_number"] = fp.condition_number;
    j["integer_check_gap"] = fp.integer_check_gap;
    Json evs = Json::array();
    for (Eigen::Index i = 0; i < fp.base_eigenvalues.size(); ++i) {
        Json e;
        e["re"] = fp.base_eigenvalues(i).real();
        e["im"] = fp.base_eigenvalues(i).imag();
        evs.push_back(std::move(e));
    }
    j["base_eigenvalues"] = std::move(evs);
    j["matrix"] = complex_matrix_json(fp.power);
    return j;
}

Json report_envelope(const std::string& command, const std::string& input_path,
                     const std::string& input_bytes) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["tool"] = "wdlab";
    j["tool_version"] = kToolVersion;
    j["command"] = command;
    j["generated_at"] = timestamp_utc();
    if (!input_path.empty()) {
        j["input"] = input_path;
        j["input_hash"] = content_hash(input_bytes);
    }
    return j;
}

}  // namespace wdlab
