#include "paraboson/io.hpp"

#include <sstream>

namespace paraboson {

json tableau_to_json(const YoungTableau& a) {
    json j;
    j["shape"] = a.shape().parts();
    j["rows"] = a.rows();
    return j;
}

json gamma_to_json(const ExponentMatrix& g) { return json(g.reading()); }

json matrix_to_json(const RatMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json vector_to_json(const FockVector& v) {
    json terms = json::array();
    for (const auto& [w, q] : v.terms()) {
        json t;
        t["word"] = w;
        t["coeff"] = to_string(q);
        terms.push_back(std::move(t));
    }
    return terms;
}

json hw_expansion_to_json(const HwExpansion& e, int n) {
    json terms = json::array();
    for (const auto& t : e.terms) {
        json rec;
        rec["coeff"] = to_string(t.coeff);
        rec["gamma"] = gamma_to_json(t.gamma);
        rec["lambda"] = t.lam.padded(n);
        terms.push_back(std::move(rec));
    }
    return terms;
}

std::string vector_pretty(const FockVector& v) {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, q] : v.terms()) {
        if (!first) os << " + ";
        first = false;
        os << to_string(q) << " ";
        for (int letter : w) os << "B" << letter << "+ ";
        os << "|0>";
    }
    return os.str();
}

std::string omega_bracket_latex(const YoungTableau& a) {
    Partition conj = a.shape().conjugate();
    std::ostringstream os;
    int l = 1;
    while (l <= conj.length()) {
        // Group equal consecutive columns into powers.
        std::vector<int> col;
        for (int k = 1; k <= conj.part(l); ++k) col.push_back(a.at(k, l));
        int reps = 1;
        while (l + reps <= conj.length() && conj.part(l + reps) == conj.part(l)) {
            bool same = true;
            for (int k = 1; k <= conj.part(l); ++k)
                if (a.at(k, l + reps) != a.at(k, l)) { same = false; break; }
            if (!same) break;
            ++reps;
        }
        if (col.size() == 1) {
            os << "(B_{" << col[0] << "}^+)";
        } else {
            os << "[";
            for (std::size_t i = 0; i < col.size(); ++i) {
                if (i) os << ",";
                os << "B_{" << col[i] << "}^+";
            }
            os << "]";
        }
        if (reps > 1) os << "^{" << reps << "}";
        l += reps;
    }
    os << "v_0";
    return os.str();
}

namespace {

json config_json(const JobConfig& cfg) {
    json j;
    j["n"] = cfg.n;
    j["p"] = cfg.p;
    j["deg"] = cfg.deg;
    j["seed"] = cfg.seed;
    return j;
}

std::string shape_str(const Partition& lam) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < lam.length(); ++i) {
        if (i) os << ",";
        os << lam.parts()[i];
    }
    os << ")";
    return os.str();
}

std::string flat_rows(const YoungTableau& a) {
    std::ostringstream os;
    const auto& rows = a.rows();
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (k) os << "|";
        for (std::size_t l = 0; l < rows[k].size(); ++l) {
            if (l) os << " ";
            os << rows[k][l];
        }
    }
    return os.str();
}

std::string flat_gamma(const ExponentMatrix& g) {
    std::ostringstream os;
    auto r = g.reading();
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) os << " ";
        os << r[i];
    }
    return os.str();
}

std::string flat_vector(const FockVector& v) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, q] : v.terms()) {
        if (!first) os << ";";
        first = false;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) os << " ";
            os << w[i];
        }
        os << ":" << to_string(q);
    }
    return os.str();
}

std::string latex_escape_none(const std::string& s) { return s; }

}  // namespace

std::string format_enumerate(const std::vector<EnumerateRecord>& records, const JobConfig& cfg) {
    std::ostringstream os;
    if (cfg.format == "json") {
        json j;
        j["config"] = config_json(cfg);
        j["records"] = json::array();
        for (const auto& r : records) {
            json rec;
            rec["tableau"] = tableau_to_json(r.tableau);
            rec["gamma"] = gamma_to_json(r.gamma);
            rec["coeff_norm2"] = to_string(r.norm2);
            rec["vector"] = vector_to_json(r.vector);
            j["records"].push_back(std::move(rec));
        }
        os << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        os << "tableau,gamma,coeff_norm2,vector\n";
        for (const auto& r : records)
            os << '"' << flat_rows(r.tableau) << "\",\"" << flat_gamma(r.gamma) << "\",\""
               << to_string(r.norm2) << "\",\"" << flat_vector(r.vector) << "\"\n";
    } else if (cfg.format == "latex") {
        os << "\\begin{tabular}{llll}\n";
        os << "shape & tableau & $\\gamma$ & basis vector \\\\\n\\hline\n";
        for (const auto& r : records) {
            Rational scale(r.tableau.shape().factorial_product());
            scale /= Rational(r.gamma.diag_factorial());
            os << "$" << latex_escape_none(shape_str(r.tableau.shape())) << "$ & "
               << "$" << flat_rows(r.tableau) << "$ & "
               << "$" << flat_gamma(r.gamma) << "$ & "
               << "$" << to_string(scale) << "\\,\\Omega generated by "
               << omega_bracket_latex(r.tableau) << "$ \\\\\n";
        }
        os << "\\end{tabular}\n";
    } else {
        os << "# basis records: " << records.size() << " (n=" << cfg.n << ", p=" << cfg.p
           << ", degree " << cfg.deg << ")\n";
        for (const auto& r : records) {
            os << "shape " << shape_str(r.tableau.shape()) << "  tableau [" << flat_rows(r.tableau)
               << "]  gamma [" << flat_gamma(r.gamma) << "]  norm2 " << to_string(r.norm2)
               << "\n  " << vector_pretty(r.vector) << "\n";
        }
    }
    return os.str();
}

std::string format_verify(const std::vector<CheckResult>& results, const std::string& suite,
                          const JobConfig& cfg) {
    std::ostringstream os;
    if (cfg.format == "json") {
        json j;
        j["config"] = config_json(cfg);
        j["suite"] = suite;
        j["checks"] = json::array();
        bool ok = true;
        for (const auto& r : results) {
            json rec;
            rec["name"] = r.name;
            rec["pass"] = r.pass;
            rec["detail"] = r.detail;
            j["checks"].push_back(std::move(rec));
            ok = ok && r.pass;
        }
        j["pass"] = ok;
        os << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        os << "status,name,detail\n";
        for (const auto& r : results)
            os << (r.pass ? "PASS" : "FAIL") << ",\"" << r.name << "\",\"" << r.detail << "\"\n";
    } else if (cfg.format == "latex") {
        os << "\\begin{tabular}{lll}\n";
        os << "status & identity & detail \\\\\n\\hline\n";
        for (const auto& r : results)
            os << (r.pass ? "PASS" : "FAIL") << " & " << r.name << " & " << r.detail << " \\\\\n";
        os << "\\end{tabular}\n";
    } else {
        os << "suite " << suite << " (n=" << cfg.n << ", p=" << cfg.p << ", deg=" << cfg.deg
           << ", seed=" << cfg.seed << ")\n";
        for (const auto& r : results)
            os << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  [" << r.detail << "]\n";
        os << (all_passed(results) ? "ALL PASSED" : "FAILURES PRESENT") << "\n";
    }
    return os.str();
}

std::string format_transition(const std::vector<TransitionBlock>& blocks, const Partition& lam,
                              const JobConfig& cfg) {
    std::ostringstream os;
    if (cfg.format == "json") {
        json j;
        j["config"] = config_json(cfg);
        j["lambda"] = lam.parts();
        j["blocks"] = json::array();
        for (const auto& b : blocks) {
            json rec;
            rec["weight"] = b.weight_counts;
            rec["tableaux"] = json::array();
            for (const auto& t : b.tableaux) rec["tableaux"].push_back(tableau_to_json(t));
            rec["T"] = matrix_to_json(b.T);
            rec["Tinv"] = matrix_to_json(b.Tinv);
            j["blocks"].push_back(std::move(rec));
        }
        os << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        os << "weight,row,col,T,Tinv\n";
        for (const auto& b : blocks) {
            std::ostringstream wk;
            for (std::size_t i = 0; i < b.weight_counts.size(); ++i) {
                if (i) wk << " ";
                wk << b.weight_counts[i];
            }
            for (std::size_t r = 0; r < b.T.rows(); ++r)
                for (std::size_t c = 0; c < b.T.cols(); ++c)
                    os << '"' << wk.str() << "\"," << r << "," << c << ","
                       << to_string(b.T.at(r, c)) << "," << to_string(b.Tinv.at(r, c)) << "\n";
        }
    } else if (cfg.format == "latex") {
        for (const auto& b : blocks) {
            os << "% weight";
            for (int c : b.weight_counts) os << " " << c;
            os << "\n\\begin{pmatrix}\n";
            for (std::size_t r = 0; r < b.T.rows(); ++r) {
                for (std::size_t c = 0; c < b.T.cols(); ++c) {
                    if (c) os << " & ";
                    os << to_string(b.T.at(r, c));
                }
                os << " \\\\\n";
            }
            os << "\\end{pmatrix}\n";
        }
    } else {
        os << "transition blocks for shape " << shape_str(lam) << " (n=" << cfg.n
           << ", p=" << cfg.p << ")\n";
        for (const auto& b : blocks) {
            os << "weight (";
            for (std::size_t i = 0; i < b.weight_counts.size(); ++i) {
                if (i) os << ",";
                os << b.weight_counts[i];
            }
            os << "), tableaux:";
            for (const auto& t : b.tableaux) os << " [" << flat_rows(t) << "]";
            os << "\n  T:\n";
            for (std::size_t r = 0; r < b.T.rows(); ++r) {
                os << "   ";
                for (std::size_t c = 0; c < b.T.cols(); ++c)
                    os << " " << to_string(b.T.at(r, c));
                os << "\n";
            }
            os << "  Tinv:\n";
            for (std::size_t r = 0; r < b.Tinv.rows(); ++r) {
                os << "   ";
                for (std::size_t c = 0; c < b.Tinv.cols(); ++c)
                    os << " " << to_string(b.Tinv.at(r, c));
                os << "\n";
            }
        }
    }
    return os.str();
}

}  // namespace paraboson
