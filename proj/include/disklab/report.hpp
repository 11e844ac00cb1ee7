#pragma once

#include <string>
#include <utility>
#include <vector>

namespace disklab {

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

enum class VerdictStatus { pass, fail, unstable };

struct Verdict {
    std::string name;
    VerdictStatus status;
    std::string table;  // the table the verdict is recomputable from
    std::string note;
};

struct RecordedConstant {
    std::string name;
    double value;
    std::string provenance;  // grid / truncation the value was produced with
};

/// Machine-readable experiment record; serialization is deterministic (field
/// and row order fixed by insertion) apart from the optional timestamp.
struct ExperimentReport {
    std::string experiment;
    std::vector<std::pair<std::string, std::string>> config_echo;
    std::vector<std::pair<std::string, Table>> tables;
    std::vector<Verdict> verdicts;
    std::vector<RecordedConstant> constants;
    std::vector<std::pair<std::string, double>> refinement_deltas;

    void add_table(const std::string& name, Table t);
    const Table* find_table(const std::string& name) const;
    void add_verdict(const std::string& name, bool pass, const std::string& table,
                     const std::string& note = "");
    void demote_unstable(const std::string& verdict_name, const std::string& note);
    void add_constant(const std::string& name, double value, const std::string& provenance);
    const RecordedConstant* find_constant(const std::string& name) const;

    bool all_pass() const;

    std::string to_json(bool include_timestamp) const;
    void write_json(const std::string& path, bool include_timestamp = true) const;
    /// One CSV per table next to `base`: <base>.<table>.csv
    void write_csv_tables(const std::string& base) const;
};

} // namespace disklab
