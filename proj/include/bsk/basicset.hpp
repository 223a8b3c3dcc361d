#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bsk/crystal.hpp"
#include "bsk/rational.hpp"

namespace bsk {

// Labelled nonnegative-integer multiplicity matrix. Column labels must
// be a subset of the row labels. Labels are opaque strings so the
// verifier stays independent of where the matrix came from.
struct DecompMatrix {
    std::vector<std::string> rows;
    std::vector<std::string> cols;
    std::vector<std::vector<long long>> entries;  // rows x cols
};

inline void validate(const DecompMatrix& matrix) {
    if (matrix.entries.size() != matrix.rows.size())
        throw std::invalid_argument("decomp matrix: entry row count does not match row labels");
    for (const auto& row : matrix.entries) {
        if (row.size() != matrix.cols.size())
            throw std::invalid_argument("decomp matrix: entry column count does not match column labels");
        for (long long value : row)
            if (value < 0)
                throw std::invalid_argument("decomp matrix: negative entry");
    }
    std::map<std::string, int> row_index;
    for (std::size_t i = 0; i < matrix.rows.size(); ++i)
        if (!row_index.emplace(matrix.rows[i], static_cast<int>(i)).second)
            throw std::invalid_argument("decomp matrix: duplicate row label '" + matrix.rows[i] + "'");
    for (const std::string& col : matrix.cols)
        if (row_index.find(col) == row_index.end())
            throw std::invalid_argument("decomp matrix: column label '" + col +
                                        "' is not among the row labels");
}

// Rational-valued ordering function on labels. The default mode compares
// with plain <; the positive_integer_step mode requires the difference
// to be a positive integer.
struct OrderingFunction {
    enum class Mode { rational_less, positive_integer_step };

    std::map<std::string, Rational> values;
    Mode mode = Mode::rational_less;

    const Rational& at(const std::string& label) const {
        const auto it = values.find(label);
        if (it == values.end())
            throw std::invalid_argument("ordering function: no value for label '" + label + "'");
        return it->second;
    }

    bool strictly_below(const std::string& e_label, const std::string& f_label) const {
        const Rational diff = at(f_label) - at(e_label);
        if (mode == Mode::positive_integer_step)
            return is_integer(diff) && diff > Rational(0);
        return diff > Rational(0);
    }
};

struct BasicSetViolation {
    enum class Type { diagonal, order };
    Type type;
    std::string row;
    std::string col;
    long long entry = 0;
};

struct BasicSetReport {
    bool pass = true;
    std::vector<BasicSetViolation> violations;
    long long nonzero_entries = 0;
    // Completeness of the set of simples cannot be read off the matrix;
    // it stays an assumption and is echoed in every report.
    std::string assumption = "completeness of the simple modules is assumed, not checked";
};

// Unitriangularity check: for every column E, the diagonal entry d_{E,E}
// must be 1 and every other nonzero entry d_{F,E} must satisfy
// f(E) < f(F). Violations are reported per (row, column) pair.
inline BasicSetReport verify_basic_set(const DecompMatrix& matrix, const OrderingFunction& f) {
    validate(matrix);
    for (const std::string& label : matrix.rows)
        f.at(label);  // f must be total on the row labels

    std::map<std::string, std::size_t> row_index;
    for (std::size_t i = 0; i < matrix.rows.size(); ++i)
        row_index.emplace(matrix.rows[i], i);

    BasicSetReport report;
    for (std::size_t j = 0; j < matrix.cols.size(); ++j) {
        const std::string& col = matrix.cols[j];
        const std::size_t diag = row_index.at(col);
        if (matrix.entries[diag][j] != 1) {
            report.violations.push_back(
                {BasicSetViolation::Type::diagonal, col, col, matrix.entries[diag][j]});
        }
        for (std::size_t i = 0; i < matrix.rows.size(); ++i) {
            const long long entry = matrix.entries[i][j];
            if (entry == 0)
                continue;
            ++report.nonzero_entries;
            if (i == diag)
                continue;
            if (!f.strictly_below(col, matrix.rows[i]))
                report.violations.push_back(
                    {BasicSetViolation::Type::order, matrix.rows[i], col, entry});
        }
    }
    report.pass = report.violations.empty();
    return report;
}

// The predicted basic set: the crystal-generated multipartitions of n.
inline std::vector<Multipartition> predicted_basic_set(int n, int level, int e,
                                                       const std::vector<int>& s) {
    return uglov_multipartitions(n, level, e, s).elements;
}

}  // namespace bsk
