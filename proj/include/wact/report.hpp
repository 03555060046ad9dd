#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wact/algebra.hpp"

namespace wact {

/// A run report: human text plus a flat machine record of key=value lines.
/// Scalars print exactly; re-parsing a record reproduces identical values.
struct Report {
    std::vector<std::pair<std::string, std::string>> records;
    std::string human;

    void add(const std::string& key, const std::string& value) { records.emplace_back(key, value); }
    void add(const std::string& key, std::size_t value) { add(key, std::to_string(value)); }
    void add(const std::string& key, bool value) { add(key, std::string(value ? "true" : "false")); }
    void note(const std::string& line) { human += line + "\n"; }

    std::string machine_text() const;
    static std::vector<std::pair<std::string, std::string>> parse_machine(const std::string& text);
};

std::string scalar_list(const Vec& v);
Vec parse_scalar_list(const FieldSpec& f, const std::string& text);
void add_matrix(Report& rep, const std::string& prefix, const ExactMatrix& m);

}  // namespace wact
