#include "disklab/report.hpp"

#include <json.hpp>

#include <chrono>
#include <fstream>
#include <stdexcept>

namespace disklab {

using ordered_json = nlohmann::ordered_json;

namespace {

const char* status_name(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::pass: return "pass";
        case VerdictStatus::fail: return "fail";
        case VerdictStatus::unstable: return "unstable";
    }
    return "fail";
}

} // namespace

void ExperimentReport::add_table(const std::string& name, Table t) {
    tables.emplace_back(name, std::move(t));
}

const Table* ExperimentReport::find_table(const std::string& name) const {
    for (const auto& [n, t] : tables)
        if (n == name) return &t;
    return nullptr;
}

void ExperimentReport::add_verdict(const std::string& name, bool pass, const std::string& table,
                                   const std::string& note) {
    if (!table.empty() && find_table(table) == nullptr)
        throw std::logic_error("verdict cites unknown table: " + table);
    verdicts.push_back({name, pass ? VerdictStatus::pass : VerdictStatus::fail, table, note});
}

void ExperimentReport::demote_unstable(const std::string& verdict_name, const std::string& note) {
    for (auto& v : verdicts) {
        if (v.name == verdict_name) {
            v.status = VerdictStatus::unstable;
            v.note = note;
            return;
        }
    }
    throw std::logic_error("demote_unstable: unknown verdict " + verdict_name);
}

void ExperimentReport::add_constant(const std::string& name, double value,
                                    const std::string& provenance) {
    constants.push_back({name, value, provenance});
}

const RecordedConstant* ExperimentReport::find_constant(const std::string& name) const {
    for (const auto& c : constants)
        if (c.name == name) return &c;
    return nullptr;
}

bool ExperimentReport::all_pass() const {
    for (const auto& v : verdicts)
        if (v.status != VerdictStatus::pass) return false;
    return true;
}

std::string ExperimentReport::to_json(bool include_timestamp) const {
    ordered_json j;
    j["schema"] = "disklab-report/1";
    j["experiment"] = experiment;
    if (include_timestamp) {
        const auto now = std::chrono::system_clock::now().time_since_epoch();
        j["timestamp_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(now).count();
    }
    ordered_json cfg = ordered_json::object();
    for (const auto& [k, v] : config_echo) cfg[k] = v;
    j["config"] = cfg;

    ordered_json tabs = ordered_json::object();
    for (const auto& [name, t] : tables) {
        ordered_json tj;
        tj["columns"] = t.columns;
        tj["rows"] = t.rows;
        tabs[name] = tj;
    }
    j["tables"] = tabs;

    ordered_json verds = ordered_json::array();
    for (const auto& v : verdicts) {
        ordered_json vj;
        vj["name"] = v.name;
        vj["status"] = status_name(v.status);
        vj["table"] = v.table;
        if (!v.note.empty()) vj["note"] = v.note;
        verds.push_back(vj);
    }
    j["verdicts"] = verds;

    ordered_json consts = ordered_json::object();
    for (const auto& c : constants) {
        ordered_json cj;
        cj["value"] = c.value;
        cj["provenance"] = c.provenance;
        consts[c.name] = cj;
    }
    j["recorded_constants"] = consts;

    ordered_json deltas = ordered_json::object();
    for (const auto& [k, v] : refinement_deltas) deltas[k] = v;
    j["refinement_deltas"] = deltas;

    return j.dump(2) + "\n";
}

void ExperimentReport::write_json(const std::string& path, bool include_timestamp) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write report: " + path);
    out << to_json(include_timestamp);
}

void ExperimentReport::write_csv_tables(const std::string& base) const {
    for (const auto& [name, t] : tables) {
        std::ofstream out(base + "." + name + ".csv");
        if (!out) throw std::runtime_error("cannot write table csv for " + name);
        out.precision(17);
        for (std::size_t c = 0; c < t.columns.size(); ++c)
            out << t.columns[c] << (c + 1 < t.columns.size() ? ',' : '\n');
        for (const auto& row : t.rows) {
            for (std::size_t c = 0; c < row.size(); ++c)
                out << row[c] << (c + 1 < row.size() ? ',' : '\n');
        }
    }
}

} // namespace disklab
