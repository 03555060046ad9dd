#include "wact/report.hpp"

#include <sstream>
#include <stdexcept>

namespace wact {

std::string Report::machine_text() const {
    std::string out;
    for (const auto& [k, v] : records) out += k + "=" + v + "\n";
    return out;
}

std::vector<std::pair<std::string, std::string>> Report::parse_machine(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("machine record line without '=': " + line);
        out.emplace_back(line.substr(0, eq), line.substr(eq + 1));
    }
    return out;
}

std::string scalar_list(const Vec& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].str();
    return out;
}

Vec parse_scalar_list(const FieldSpec& f, const std::string& text) {
    Vec out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        out.push_back(Scalar::parse(f, token));
    }
    return out;
}

void add_matrix(Report& rep, const std::string& prefix, const ExactMatrix& m) {
    rep.add(prefix + ".rows", m.rows());
    rep.add(prefix + ".cols", m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) rep.add(prefix + ".row" + std::to_string(i), scalar_list(m.row(i)));
}

}  // namespace wact
