#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "ttu/errors.hpp"

namespace ttu {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

/// Exact rational matrix whose rows and columns are indexed by label sets,
/// not by position. Labels are kept sorted; all arithmetic is exact.
class LabeledMatrix {
public:
    LabeledMatrix() = default;
    LabeledMatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels);

    const std::vector<std::string>& row_labels() const { return rows_; }
    const std::vector<std::string>& col_labels() const { return cols_; }
    std::size_t n_rows() const { return rows_.size(); }
    std::size_t n_cols() const { return cols_.size(); }

    bool has_row(const std::string& r) const;
    bool has_col(const std::string& c) const;
    std::size_t row_index(const std::string& r) const;
    std::size_t col_index(const std::string& c) const;

    const Rational& at(const std::string& r, const std::string& c) const;
    const Rational& at_index(std::size_t i, std::size_t j) const { return data_[i * cols_.size() + j]; }
    void set(const std::string& r, const std::string& c, Rational value);
    void set_index(std::size_t i, std::size_t j, Rational value) { data_[i * cols_.size() + j] = std::move(value); }

    LabeledMatrix transpose() const;
    bool is_integral() const;
    bool is_zero() const;

    bool operator==(const LabeledMatrix& other) const = default;

private:
    std::vector<std::string> rows_;
    std::vector<std::string> cols_;
    std::vector<Rational> data_;  // row-major, label-sorted
};

LabeledMatrix submatrix(const LabeledMatrix& m,
                        const std::vector<std::string>& rows,
                        const std::vector<std::string>& cols);

/// Column restriction only, keeping every row.
LabeledMatrix restrict_cols(const LabeledMatrix& m, const std::vector<std::string>& cols);

/// Exact determinant via fraction-free (Bareiss) elimination under the
/// lexicographic row/column order. Only |det| is order-independent.
Rational det(const LabeledMatrix& m);

std::size_t rank_q(const LabeledMatrix& m);
std::size_t rank_gf2(const LabeledMatrix& m);

LabeledMatrix multiply(const LabeledMatrix& a, const LabeledMatrix& b);

bool is_unimodular(const LabeledMatrix& m);

struct TuWitness {
    std::vector<std::string> rows;
    std::vector<std::string> cols;
    Rational determinant;
};

struct TuResult {
    bool totally_unimodular = false;
    std::optional<TuWitness> witness;  // present iff not totally unimodular
};

/// Exhaustive check over every square submatrix. Throws SizeError when the
/// number of square submatrices exceeds kTuEnumerationCap.
inline constexpr unsigned long long kTuEnumerationCap = 10'000'000ULL;
TuResult is_totally_unimodular(const LabeledMatrix& m);

/// Independent second checker: a matrix is totally unimodular iff every row
/// subset admits a +-1 signing whose signed sum has entries in {-1,0,1}.
bool is_totally_unimodular_signing(const LabeledMatrix& m);

/// Text emitter: rows and columns sorted by label unless an explicit column
/// order is supplied.
std::string to_text(const LabeledMatrix& m,
                    const std::vector<std::string>& col_order = {},
                    const std::vector<std::string>& row_order = {});

nlohmann::json matrix_to_json(const LabeledMatrix& m);
LabeledMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace ttu
