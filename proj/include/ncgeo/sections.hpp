#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ncgeo/connection.hpp"
#include "ncgeo/metric.hpp"
#include "ncgeo/parse.hpp"

namespace ncgeo {

// Input files are UTF-8 text with '#' comments, labeled sections like
// [metric] and key = expression lines in the expression grammar.
class SectionFile {
  public:
    static SectionFile parse(const std::string& text) {
        SectionFile out;
        std::istringstream in(text);
        std::string line, section;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            size_t hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            size_t a = line.find_first_not_of(" \t\r");
            if (a == std::string::npos) continue;
            size_t b = line.find_last_not_of(" \t\r");
            line = line.substr(a, b - a + 1);
            if (line.front() == '[') {
                if (line.back() != ']') throw ParseError(lineno, 1, "unterminated section header");
                section = line.substr(1, line.size() - 2);
                out.data_[section];
                continue;
            }
            size_t eq = line.find('=');
            if (eq == std::string::npos) throw ParseError(lineno, 1, "expected key = value");
            std::string key = line.substr(0, eq);
            size_t ke = key.find_last_not_of(" \t");
            key = key.substr(0, ke + 1);
            std::string value = line.substr(eq + 1);
            if (section.empty()) throw ParseError(lineno, 1, "entry outside of any [section]");
            out.data_[section][key] = {value, lineno};
            out.order_[section].push_back(key);
        }
        return out;
    }

    static SectionFile load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw ParseError(0, 0, "cannot open file: " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse(buf.str());
    }

    bool has_section(const std::string& section) const { return data_.count(section) > 0; }

    const std::string& get(const std::string& section, const std::string& key) const {
        auto s = data_.find(section);
        if (s == data_.end()) throw ParseError(0, 0, "missing section [" + section + "]");
        auto k = s->second.find(key);
        if (k == s->second.end()) throw ParseError(0, 0, "missing key " + key + " in [" + section + "]");
        return k->second.first;
    }

    template <QField F>
    AlgElem<F> get_alg(const std::string& section, const std::string& key, PowerMode mode) const {
        auto s = data_.find(section);
        if (s == data_.end()) throw ParseError(0, 0, "missing section [" + section + "]");
        auto k = s->second.find(key);
        if (k == s->second.end()) throw ParseError(0, 0, "missing key " + key + " in [" + section + "]");
        try {
            return parse_alg<F>(k->second.first, mode);
        } catch (const ParseError& e) {
            throw ParseError(k->second.second, e.column(), std::string(e.what()) + " (in [" + section + "] " + key + ")");
        }
    }

  private:
    std::map<std::string, std::map<std::string, std::pair<std::string, int>>> data_;
    std::map<std::string, std::vector<std::string>> order_;
};

inline std::string christoffel_key(int i, int j, int k) {
    return "G^" + std::to_string(i + 1) + "_" + std::to_string(j + 1) + std::to_string(k + 1);
}

template <QField F>
Metric<F> load_metric(const SectionFile& file, PowerMode mode = PowerMode::Polynomial) {
    return Metric<F>::from_grid(file.get_alg<F>("metric", "G11", mode), file.get_alg<F>("metric", "G12", mode),
                                file.get_alg<F>("metric", "G21", mode), file.get_alg<F>("metric", "G22", mode));
}

template <QField F>
Christoffel<F> load_christoffel(const SectionFile& file, const std::string& section,
                                PowerMode mode = PowerMode::Polynomial) {
    Christoffel<F> c(section == "gammatilde" ? Side::Right : Side::Left);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) c.entry(i, j, k) = file.get_alg<F>(section, christoffel_key(i, j, k), mode);
    return c;
}

template <QField F>
GaugeMatrix<F> load_gauge(const SectionFile& file, PowerMode mode = PowerMode::Polynomial) {
    std::array<std::array<AlgElem<F>, 2>, 2> u{{{AlgElem<F>(mode), AlgElem<F>(mode)}, {AlgElem<F>(mode), AlgElem<F>(mode)}}};
    auto uinv = u;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            std::string suffix = std::to_string(i + 1) + std::to_string(j + 1);
            u[i][j] = file.get_alg<F>("gauge", "U" + suffix, mode);
            uinv[i][j] = file.get_alg<F>("gauge", "Uinv" + suffix, mode);
        }
    return GaugeMatrix<F>(std::move(u), std::move(uinv));
}

template <QField F>
std::string write_metric(const Metric<F>& g) {
    std::ostringstream out;
    out << "[metric]\n";
    out << "G11 = " << g.entry(0, 0).to_string() << "\n";
    out << "G12 = " << g.entry(0, 1).to_string() << "\n";
    out << "G21 = " << g.entry(1, 0).to_string() << "\n";
    out << "G22 = " << g.entry(1, 1).to_string() << "\n";
    return out.str();
}

template <QField F>
std::string write_christoffel(const Christoffel<F>& c, const std::string& section) {
    std::ostringstream out;
    out << "[" << section << "]\n";
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                out << christoffel_key(i, j, k) << " = " << c.entry(i, j, k).to_string() << "\n";
    return out.str();
}

} // namespace ncgeo
