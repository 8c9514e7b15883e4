#pragma once

#include "specbasis/basis.hpp"
#include "specbasis/complex_matrix.hpp"
#include "specbasis/grouprep.hpp"
#include "specbasis/hadamard.hpp"
#include "specbasis/monomial.hpp"
#include "specbasis/pseudoclosure.hpp"
#include "specbasis/report.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace specbasis {

using json = nlohmann::json;

// ---------------------------------------------------------------- files

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

inline json parse_json_file(const std::string& path) {
    try {
        return json::parse(read_text_file(path));
    } catch (const json::parse_error& e) {
        throw std::runtime_error("invalid JSON in " + path + ": " + e.what());
    }
}

// ------------------------------------------------------------- matrices

inline json cmatrix_to_json(const CMatrix& a) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            row.push_back({a(i, j).real(), a(i, j).imag()});
        rows.push_back(std::move(row));
    }
    return json{{"n", a.rows()}, {"entries", std::move(rows)}};
}

inline CMatrix cmatrix_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("entries"))
        throw std::runtime_error("matrix JSON needs fields \"n\" and \"entries\"");
    const int n = j.at("n").get<int>();
    if (n < 1) throw std::runtime_error("matrix JSON: n must be >= 1");
    const auto& rows = j.at("entries");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw std::runtime_error("matrix JSON: expected " + std::to_string(n) + " rows");
    CMatrix a(n, n);
    for (int i = 0; i < n; ++i) {
        const auto& row = rows.at(size_t(i));
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw std::runtime_error("matrix JSON: row " + std::to_string(i) + " has wrong length");
        for (int jj = 0; jj < n; ++jj) {
            const auto& cell = row.at(size_t(jj));
            if (!cell.is_array() || cell.size() != 2)
                throw std::runtime_error("matrix JSON: entries must be [re, im] pairs");
            a(i, jj) = Complex(cell.at(0).get<double>(), cell.at(1).get<double>());
        }
    }
    if (!all_finite(a)) throw std::runtime_error("matrix JSON: non-finite entry");
    return a;
}

inline std::string format_complex_cell(const Complex& z) {
    std::ostringstream os;
    os << std::setprecision(17) << z.real();
    os << (z.imag() < 0 ? "" : "+") << std::setprecision(17) << z.imag() << 'j';
    return os.str();
}

inline Complex parse_complex_cell(std::string s) {
    auto trim = [](std::string& t) {
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(0, 1);
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
    };
    trim(s);
    if (s.empty()) throw std::runtime_error("empty complex cell");
    const bool has_j = s.back() == 'j' || s.back() == 'J';
    if (has_j) s.pop_back();
    // split at the last +/- that is not an exponent sign
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    try {
        if (!has_j) return Complex(std::stod(s), 0.0);
        if (split == std::string::npos) {
            std::string im = s;
            if (im.empty() || im == "+" || im == "-") im += "1";
            return Complex(0.0, std::stod(im));
        }
        std::string im = s.substr(split);
        if (im == "+" || im == "-") im += "1";
        return Complex(std::stod(s.substr(0, split)), std::stod(im));
    } catch (const std::exception&) {
        throw std::runtime_error("cannot parse complex cell: " + s);
    }
}

inline std::string cmatrix_to_csv(const CMatrix& a) {
    std::ostringstream os;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            if (j) os << ',';
            os << format_complex_cell(a(i, j));
        }
        os << '\n';
    }
    return os.str();
}

inline CMatrix cmatrix_from_csv(const std::string& text) {
    std::vector<std::vector<Complex>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<Complex> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(parse_complex_cell(cell));
        rows.push_back(std::move(row));
    }
    const int n = static_cast<int>(rows.size());
    if (n == 0) throw std::runtime_error("matrix CSV: no rows");
    CMatrix a(n, n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[size_t(i)].size()) != n)
            throw std::runtime_error("matrix CSV: not square");
        for (int j = 0; j < n; ++j) a(i, j) = rows[size_t(i)][size_t(j)];
    }
    return a;
}

inline void save_cmatrix(const std::string& path, const CMatrix& a) {
    if (path.size() > 4 && path.substr(path.size() - 4) == ".csv")
        write_text_file(path, cmatrix_to_csv(a));
    else
        write_text_file(path, cmatrix_to_json(a).dump(2) + "\n");
}

inline CMatrix load_cmatrix(const std::string& path) {
    if (path.size() > 4 && path.substr(path.size() - 4) == ".csv")
        return cmatrix_from_csv(read_text_file(path));
    return cmatrix_from_json(parse_json_file(path));
}

/// Sparse triplet form for the large representation images.
inline json cmatrix_to_sparse_json(const CMatrix& a, double drop_tol = 0.0) {
    json triplets = json::array();
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (std::abs(a(i, j)) > drop_tol)
                triplets.push_back({i, j, a(i, j).real(), a(i, j).imag()});
    return json{{"rows", a.rows()}, {"cols", a.cols()}, {"triplets", std::move(triplets)}};
}

// ------------------------------------------------------------ monomials

inline json monomial_to_json(const Monomial& g) {
    return json{{"n", g.n}, {"m", g.m}, {"perm", g.perm}, {"phase_exp", g.phase_exp}};
}

inline Monomial monomial_from_json(const json& j) {
    for (const char* f : {"n", "m", "perm", "phase_exp"})
        if (!j.contains(f))
            throw std::runtime_error(std::string("monomial JSON needs field \"") + f + "\"");
    try {
        const Monomial g = make_monomial(j.at("perm").get<std::vector<int>>(),
                                         j.at("phase_exp").get<std::vector<int>>(),
                                         j.at("m").get<int>());
        if (g.n != j.at("n").get<int>())
            throw std::invalid_argument("field \"n\" disagrees with the permutation length");
        return g;
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("monomial JSON: ") + e.what());
    }
}

// -------------------------------------------------------------- bases

inline json basis_to_json(const BasisSet& b) {
    json els = json::array(), labels = json::array();
    for (const auto& e : b.elements) els.push_back(cmatrix_to_json(e));
    for (const auto& [k, l] : b.labels) labels.push_back({k, l});
    return json{{"n", b.n},
                {"kind", to_string(b.kind)},
                {"elements", std::move(els)},
                {"labels", std::move(labels)}};
}

inline BasisSet basis_from_json(const json& j) {
    for (const char* f : {"n", "kind", "elements", "labels"})
        if (!j.contains(f))
            throw std::runtime_error(std::string("basis JSON needs field \"") + f + "\"");
    BasisSet b;
    b.n = j.at("n").get<int>();
    if (b.n < 1) throw std::runtime_error("basis JSON: n must be >= 1");
    b.kind = basis_kind_from_string(j.at("kind").get<std::string>());
    for (const auto& e : j.at("elements")) {
        b.elements.push_back(cmatrix_from_json(e));
        if (b.elements.back().rows() != b.n)
            throw std::runtime_error("basis JSON: element dimension mismatch");
    }
    for (const auto& lab : j.at("labels")) {
        if (!lab.is_array() || lab.size() != 2)
            throw std::runtime_error("basis JSON: labels must be [k,l] pairs");
        b.labels.emplace_back(lab.at(0).get<int>(), lab.at(1).get<int>());
    }
    if (std::set<std::pair<int, int>>(b.labels.begin(), b.labels.end()).size() != b.labels.size())
        throw std::runtime_error("basis JSON: duplicate labels");
    if (b.elements.size() != b.labels.size())
        throw std::runtime_error("basis JSON: element/label count mismatch");
    if (static_cast<int>(b.elements.size()) != b.n * b.n)
        throw std::runtime_error("basis JSON: expected n^2 elements");
    for (const auto& e : b.elements) b.norms_sq.push_back(e.squaredNorm());
    return b;
}

inline void save_basis(const std::string& path, const BasisSet& b) {
    write_text_file(path, basis_to_json(b).dump() + "\n");
}

inline BasisSet load_basis(const std::string& path) {
    return basis_from_json(parse_json_file(path));
}

// ------------------------------------------------------- coefficients

inline json coeffs_to_json(const CoeffTable& c) {
    json labels = json::array();
    for (int k = 0; k < c.n; ++k)
        for (int l = 0; l < c.n; ++l) labels.push_back({k, l});
    json j = cmatrix_to_json(c.coeffs);
    j["labels"] = std::move(labels);
    return j;
}

inline CoeffTable coeffs_from_json(const json& j) {
    CoeffTable c;
    c.coeffs = cmatrix_from_json(j);
    c.n = static_cast<int>(c.coeffs.rows());
    return c;
}

// ----------------------------------------------------------- hadamard

inline json hmatrix_to_json(const HMatrix& h) {
    json rows = json::array();
    for (int i = 0; i < h.n; ++i) {
        json row = json::array();
        for (int j = 0; j < h.n; ++j) row.push_back(h(i, j));
        rows.push_back(std::move(row));
    }
    return json{{"n", h.n}, {"rows", std::move(rows)}};
}

inline HMatrix hmatrix_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("rows"))
        throw std::runtime_error("Hadamard JSON needs fields \"n\" and \"rows\"");
    const int n = j.at("n").get<int>();
    if (n < 1) throw std::runtime_error("Hadamard JSON: n must be >= 1");
    HMatrix h = make_hmatrix(n);
    const auto& rows = j.at("rows");
    if (static_cast<int>(rows.size()) != n) throw std::runtime_error("Hadamard JSON: row count");
    for (int i = 0; i < n; ++i) {
        const auto& row = rows.at(size_t(i));
        if (static_cast<int>(row.size()) != n)
            throw std::runtime_error("Hadamard JSON: row length");
        for (int jj = 0; jj < n; ++jj) {
            const int v = row.at(size_t(jj)).get<int>();
            if (v != 1 && v != -1)
                throw std::runtime_error("Hadamard JSON: entries must be +1 or -1");
            h(i, jj) = v;
        }
    }
    return h;
}

/// One row per line of '+'/'-' characters, the catalog interchange form.
inline std::string hmatrix_to_text(const HMatrix& h) {
    std::string out;
    out.reserve(size_t(h.n) * (h.n + 1));
    for (int i = 0; i < h.n; ++i) {
        for (int j = 0; j < h.n; ++j) out.push_back(h(i, j) == 1 ? '+' : '-');
        out.push_back('\n');
    }
    return out;
}

inline HMatrix hmatrix_from_text(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
            line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    const int n = static_cast<int>(lines.size());
    if (n == 0) throw std::runtime_error("Hadamard text: empty input");
    HMatrix h = make_hmatrix(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(lines[size_t(i)].size()) != n)
            throw std::runtime_error("Hadamard text: not square");
        for (int j = 0; j < n; ++j) {
            const char c = lines[size_t(i)][size_t(j)];
            if (c != '+' && c != '-')
                throw std::runtime_error("Hadamard text: only '+'/'-' allowed");
            h(i, j) = c == '+' ? 1 : -1;
        }
    }
    return h;
}

// ------------------------------------------------------------ reports

inline json report_to_json(const VerificationReport& rep) {
    json checks = json::array(), obs = json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"residual", c.residual}});
    for (const auto& o : rep.observations)
        obs.push_back({{"name", o.name}, {"value", o.value}, {"note", o.note}});
    return json{
        {"checks", std::move(checks)}, {"observations", std::move(obs)}, {"summary", rep.summary()}};
}

inline std::string report_to_text(const VerificationReport& rep) {
    std::ostringstream os;
    for (const auto& c : rep.checks)
        os << (c.pass ? "PASS " : "FAIL ") << c.name << "  residual=" << c.residual << '\n';
    for (const auto& o : rep.observations) {
        os << "DATA " << o.name << "=" << o.value;
        if (!o.note.empty()) os << "  (" << o.note << ")";
        os << '\n';
    }
    os << (rep.summary() ? "summary: PASS" : "summary: FAIL") << '\n';
    return os.str();
}

inline json closure_report_to_json(const ClosureReport& rep, bool include_witnesses = true) {
    json j{{"k", rep.k},
           {"eligible_elements", rep.eligible_elements},
           {"eligible_pairs", rep.eligible_pairs},
           {"total_pairs", rep.total_pairs},
           {"verdict", rep.verdict()}};
    json fails = json::array();
    for (const auto& [a, b] : rep.failures)
        fails.push_back({{a.first, a.second}, {b.first, b.second}});
    j["failures"] = std::move(fails);
    if (include_witnesses) {
        json ws = json::array();
        for (const auto& w : rep.witnesses) {
            ws.push_back({{"pair", {{w.pair_a.first, w.pair_a.second},
                                    {w.pair_b.first, w.pair_b.second}}},
                          {"closing_label", {w.closing_label.first, w.closing_label.second}},
                          {"diag", cmatrix_to_json(w.diag_matrix())},
                          {"residual", w.residual}});
        }
        j["witnesses"] = std::move(ws);
    }
    double worst = 0.0;
    for (const auto& w : rep.witnesses) worst = std::max(worst, w.residual);
    j["worst_witness_residual"] = worst;
    return j;
}

// -------------------------------------------------------- group tables

inline json group_table_to_json(const GroupTable& t) {
    json els = json::array(), labels = json::array();
    for (const auto& g : t.elements) els.push_back(monomial_to_json(g));
    for (const auto& [k, l] : t.generator_labels) labels.push_back({k, l});
    return json{{"n", t.n},
                {"order", t.order()},
                {"closed", t.closed},
                {"generator_labels", std::move(labels)},
                {"elements", std::move(els)}};
}

}  // namespace specbasis
