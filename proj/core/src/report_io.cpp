#include "mdphase/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "mdphase/errors.hpp"

namespace mdphase {

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

const std::array<BoundName, bound_count> bound_order{
    BoundName::eq8,  BoundName::eq11, BoundName::eq12, BoundName::eq15, BoundName::eq16,
    BoundName::eq17, BoundName::eq18, BoundName::eq24, BoundName::eq25};

std::string header_columns(bool has_sz) {
    std::string h = "t,re_z,im_z,abs_z,theta,phi_rel,a1,a2,var1,var2,comm,d12,d23,d13";
    if (has_sz) h += ",sz";
    for (const auto name : bound_order) {
        const std::string n = to_string(name);
        h += "," + n + "_lhs," + n + "_rhs," + n + "_slack," + n + "_verdict";
    }
    return h;
}

std::string row_columns(const TimeRow& row, bool has_sz) {
    std::string line = fmt(row.t);
    line += "," + fmt(row.z.real()) + "," + fmt(row.z.imag()) + "," + fmt(std::abs(row.z));
    line += "," + fmt(row.theta) + "," + fmt(row.phi);
    line += "," + fmt(row.a1) + "," + fmt(row.a2);
    line += "," + fmt(row.var1) + "," + fmt(row.var2) + "," + fmt(row.comm);
    line += "," + fmt(row.d12) + "," + fmt(row.d23) + "," + fmt(row.d13);
    if (has_sz) line += "," + fmt(row.sz);
    for (const auto& b : row.bounds) {
        line += "," + fmt(b.lhs) + "," + fmt(b.rhs) + "," + fmt(b.slack) + "," +
                to_string(b.verdict);
    }
    return line;
}

nlohmann::ordered_json bound_to_json(const BoundReport& b) {
    nlohmann::ordered_json j;
    j["lhs"] = b.lhs;
    j["rhs"] = b.rhs;
    j["slack"] = b.slack;
    j["verdict"] = to_string(b.verdict);
    j["inputs"] = {{"ci2", b.inputs.ci2},
                   {"cj2", b.inputs.cj2},
                   {"abs_z", b.inputs.abs_z},
                   {"phi", b.inputs.phi}};
    if (!b.note.empty()) j["note"] = b.note;
    return j;
}

nlohmann::ordered_json tally_to_json(const TrialTally& t) {
    nlohmann::ordered_json j;
    j["trials"] = t.trials;
    j["violations"] = t.violations;
    j["skipped"] = t.skipped;
    j["max_violation_magnitude"] = t.max_violation;
    j["min_slack"] = t.min_slack;
    j["violations_at"] = t.violations_at;
    j["slack_hist"] = t.slack_hist;
    return j;
}

nlohmann::ordered_json sign_tally_to_json(const SignTally& t) {
    nlohmann::ordered_json j;
    j["trials"] = t.trials;
    j["defined"] = t.defined;
    j["undefined"] = t.undefined;
    j["rhs_positive"] = t.rhs_positive;
    j["max_rhs"] = t.max_rhs;
    j["rhs_hist"] = t.rhs_hist;
    return j;
}

} // namespace

std::string timeseries_csv(const TimeSeries& ts) {
    std::string out = header_columns(ts.has_sz) + "\n";
    for (const auto& row : ts.rows) out += row_columns(row, ts.has_sz) + "\n";
    return out;
}

std::string sweep_csv_header(const TimeSeries& sample, const std::string& axis_name) {
    return axis_name + "," + header_columns(sample.has_sz) + "\n";
}

std::string sweep_csv_rows(const TimeSeries& ts, double axis_value) {
    std::string out;
    for (const auto& row : ts.rows) {
        out += fmt(axis_value) + "," + row_columns(row, ts.has_sz) + "\n";
    }
    return out;
}

nlohmann::ordered_json bounds_json(const TimeSeries& ts) {
    nlohmann::ordered_json j;
    j["scenario"] = to_string(ts.scenario);
    j["pair"] = {ts.pair.first, ts.pair.second};
    j["definite_state"] = ts.definite_state;
    j["expect_observable"] = ts.expect_obs;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : ts.rows) {
        nlohmann::ordered_json r;
        r["t"] = row.t;
        r["z"] = {{"re", row.z.real()},
                  {"im", row.z.imag()},
                  {"abs", std::abs(row.z)},
                  {"theta", row.theta}};
        r["phi"] = row.phi;
        r["a1"] = row.a1;
        r["a2"] = row.a2;
        r["var1"] = row.var1;
        r["var2"] = row.var2;
        r["comm"] = row.comm;
        if (ts.has_sz) r["sz"] = row.sz;
        r["distances"] = {{"d12", row.d12}, {"d23", row.d23}, {"d13", row.d13}};
        r["phi_min"] = row.phi_min;
        r["z_route_residual"] = row.z_route_residual;
        r["fs_residual"] = row.fs_residual;
        nlohmann::ordered_json bounds;
        for (const auto& b : row.bounds) bounds[to_string(b.name)] = bound_to_json(b);
        r["bounds"] = bounds;
        rows.push_back(std::move(r));
    }
    j["rows"] = rows;
    return j;
}

nlohmann::ordered_json peres_json(const PeresReport& report) {
    nlohmann::ordered_json j;
    j["z_threshold"] = report.z_threshold;
    if (report.first_crossing) {
        j["first_crossing"] = *report.first_crossing;
    } else {
        j["first_crossing"] = nullptr;
    }
    j["min_abs_z"] = report.min_abs_z;
    j["min_abs_z_at"] = report.min_abs_z_at;
    j["commutator_residual"] = report.commutator_residual;
    j["probe_count"] = report.probe_count;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : report.rows) {
        rows.push_back({{"t", r.t},
                        {"exp_A_re", r.exp_A.real()},
                        {"exp_A_im", r.exp_A.imag()},
                        {"exp_A_direct_re", r.exp_A_direct.real()},
                        {"exp_A_direct_im", r.exp_A_direct.imag()},
                        {"route_residual", r.route_residual},
                        {"abs_residual", r.abs_residual},
                        {"exp_A_prime_re", r.exp_A_prime.real()},
                        {"exp_A_prime_im", r.exp_A_prime.imag()},
                        {"undo_residual", r.undo_residual},
                        {"abs_z", r.abs_z}});
    }
    j["rows"] = rows;
    return j;
}

nlohmann::ordered_json falsifier_json(const FalsifierReport& report) {
    nlohmann::ordered_json j;
    j["kind"] = report.kind;
    j["trials"] = report.trials;
    j["seed"] = report.seed;
    j["uncertainty"] = tally_to_json(report.uncertainty);
    j["triangle_structured"] = tally_to_json(report.triangle_structured);
    j["triangle_random"] = tally_to_json(report.triangle_random);
    nlohmann::ordered_json cn, cu;
    for (const auto& [name, tally] : report.census_normalized) {
        cn[name] = sign_tally_to_json(tally);
    }
    for (const auto& [name, tally] : report.census_unnormalized) {
        cu[name] = sign_tally_to_json(tally);
    }
    j["census_normalized"] = cn;
    j["census_unnormalized"] = cu;
    return j;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + path);
    out << content;
    if (!out) throw ConfigError("failed writing " + path);
}

void write_json_file(const std::string& path, const nlohmann::ordered_json& j) {
    write_text_file(path, j.dump(2) + "\n");
}

} // namespace mdphase
