#include "ttu/matrix.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ttu {

std::string rational_to_string(const Rational& q) {
    std::ostringstream os;
    if (denominator(q) == 1) {
        os << numerator(q);
    } else {
        os << numerator(q) << "/" << denominator(q);
    }
    return os.str();
}

Rational rational_from_string(const std::string& s) {
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) {
            return Rational(Integer(s));
        }
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw InputError("zero denominator in rational: " + s);
        return Rational(num, den);
    } catch (const InputError&) {
        throw;
    } catch (const std::exception&) {
        throw InputError("malformed rational: " + s);
    }
}

namespace {

std::vector<std::string> sorted_unique(std::vector<std::string> labels, const char* what) {
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
        throw ContractError(std::string("duplicate ") + what + " label");
    }
    return labels;
}

std::size_t find_label(const std::vector<std::string>& labels, const std::string& l, const char* what) {
    auto it = std::lower_bound(labels.begin(), labels.end(), l);
    if (it == labels.end() || *it != l) {
        throw InputError(std::string("unknown ") + what + " label: " + l);
    }
    return static_cast<std::size_t>(it - labels.begin());
}

}  // namespace

LabeledMatrix::LabeledMatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels)
    : rows_(sorted_unique(std::move(row_labels), "row")),
      cols_(sorted_unique(std::move(col_labels), "column")),
      data_(rows_.size() * cols_.size(), Rational(0)) {}

bool LabeledMatrix::has_row(const std::string& r) const {
    return std::binary_search(rows_.begin(), rows_.end(), r);
}

bool LabeledMatrix::has_col(const std::string& c) const {
    return std::binary_search(cols_.begin(), cols_.end(), c);
}

std::size_t LabeledMatrix::row_index(const std::string& r) const { return find_label(rows_, r, "row"); }
std::size_t LabeledMatrix::col_index(const std::string& c) const { return find_label(cols_, c, "column"); }

const Rational& LabeledMatrix::at(const std::string& r, const std::string& c) const {
    return at_index(row_index(r), col_index(c));
}

void LabeledMatrix::set(const std::string& r, const std::string& c, Rational value) {
    set_index(row_index(r), col_index(c), std::move(value));
}

LabeledMatrix LabeledMatrix::transpose() const {
    LabeledMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < cols_.size(); ++j)
            t.set_index(j, i, at_index(i, j));
    return t;
}

bool LabeledMatrix::is_integral() const {
    for (const auto& v : data_)
        if (denominator(v) != 1) return false;
    return true;
}

bool LabeledMatrix::is_zero() const {
    for (const auto& v : data_)
        if (v != 0) return false;
    return true;
}

LabeledMatrix submatrix(const LabeledMatrix& m,
                        const std::vector<std::string>& rows,
                        const std::vector<std::string>& cols) {
    LabeledMatrix s(rows, cols);
    for (const auto& r : rows)
        for (const auto& c : cols)
            s.set(r, c, m.at(r, c));
    return s;
}

LabeledMatrix restrict_cols(const LabeledMatrix& m, const std::vector<std::string>& cols) {
    return submatrix(m, m.row_labels(), cols);
}

namespace {

std::vector<std::vector<Rational>> to_dense(const LabeledMatrix& m) {
    std::vector<std::vector<Rational>> a(m.n_rows(), std::vector<Rational>(m.n_cols()));
    for (std::size_t i = 0; i < m.n_rows(); ++i)
        for (std::size_t j = 0; j < m.n_cols(); ++j)
            a[i][j] = m.at_index(i, j);
    return a;
}

}  // namespace

Rational det(const LabeledMatrix& m) {
    if (m.n_rows() != m.n_cols()) {
        throw ContractError("det: matrix is not square");
    }
    const std::size_t n = m.n_rows();
    if (n == 0) return Rational(1);
    auto a = to_dense(m);
    int sign = 1;
    Rational prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot][k] == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

std::size_t rank_q(const LabeledMatrix& m) {
    auto a = to_dense(m);
    const std::size_t nr = m.n_rows(), nc = m.n_cols();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < nc && rank < nr; ++col) {
        std::size_t pivot = rank;
        while (pivot < nr && a[pivot][col] == 0) ++pivot;
        if (pivot == nr) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t i = rank + 1; i < nr; ++i) {
            if (a[i][col] == 0) continue;
            Rational f = a[i][col] / a[rank][col];
            for (std::size_t j = col; j < nc; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_gf2(const LabeledMatrix& m) {
    if (!m.is_integral()) {
        throw ContractError("rank_gf2: matrix has a non-integral entry");
    }
    const std::size_t nr = m.n_rows(), nc = m.n_cols();
    std::vector<std::vector<int>> a(nr, std::vector<int>(nc));
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j)
            a[i][j] = static_cast<int>(numerator(m.at_index(i, j)) % 2 != 0);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < nc && rank < nr; ++col) {
        std::size_t pivot = rank;
        while (pivot < nr && a[pivot][col] == 0) ++pivot;
        if (pivot == nr) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t i = 0; i < nr; ++i) {
            if (i != rank && a[i][col]) {
                for (std::size_t j = col; j < nc; ++j) a[i][j] ^= a[rank][j];
            }
        }
        ++rank;
    }
    return rank;
}

LabeledMatrix multiply(const LabeledMatrix& a, const LabeledMatrix& b) {
    if (a.col_labels() != b.row_labels()) {
        throw ContractError("multiply: inner label sets differ");
    }
    LabeledMatrix p(a.row_labels(), b.col_labels());
    const std::size_t inner = a.n_cols();
    for (std::size_t i = 0; i < a.n_rows(); ++i) {
        for (std::size_t j = 0; j < b.n_cols(); ++j) {
            Rational acc(0);
            for (std::size_t k = 0; k < inner; ++k) acc += a.at_index(i, k) * b.at_index(k, j);
            p.set_index(i, j, std::move(acc));
        }
    }
    return p;
}

bool is_unimodular(const LabeledMatrix& m) {
    if (m.n_rows() != m.n_cols()) {
        throw ContractError("is_unimodular: matrix is not square");
    }
    if (!m.is_integral()) {
        throw ContractError("is_unimodular: matrix has a non-integral entry");
    }
    Rational d = det(m);
    return d == 1 || d == -1;
}

namespace {

// Streams all k-subsets of {0,...,n-1} through `fn`; `fn` returns false to abort.
template <typename Fn>
bool for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (!fn(idx)) return false;
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - k) break;
            if (i == 0) return true;
        }
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

unsigned long long binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    unsigned long long r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        r = r * (n - i) / (i + 1);
        if (r > kTuEnumerationCap * 2) return kTuEnumerationCap * 2;  // saturate
    }
    return r;
}

}  // namespace

TuResult is_totally_unimodular(const LabeledMatrix& m) {
    if (!m.is_integral()) {
        throw ContractError("is_totally_unimodular: matrix has a non-integral entry");
    }
    const std::size_t nr = m.n_rows(), nc = m.n_cols();
    unsigned long long total = 0;
    for (std::size_t k = 1; k <= std::min(nr, nc); ++k) {
        total += binomial(nr, k) * binomial(nc, k);
        if (total > kTuEnumerationCap) {
            throw SizeError("is_totally_unimodular: submatrix count exceeds enumeration cap");
        }
    }
    TuResult result;
    result.totally_unimodular = true;
    for (std::size_t k = 1; k <= std::min(nr, nc) && result.totally_unimodular; ++k) {
        for_each_combination(nr, k, [&](const std::vector<std::size_t>& ri) {
            return for_each_combination(nc, k, [&](const std::vector<std::size_t>& ci) {
                std::vector<std::string> rl, cl;
                for (auto i : ri) rl.push_back(m.row_labels()[i]);
                for (auto j : ci) cl.push_back(m.col_labels()[j]);
                Rational d = det(submatrix(m, rl, cl));
                if (d > 1 || d < -1) {
                    result.totally_unimodular = false;
                    result.witness = TuWitness{rl, cl, d};
                    return false;
                }
                return true;
            });
        });
    }
    return result;
}

bool is_totally_unimodular_signing(const LabeledMatrix& m) {
    if (!m.is_integral()) {
        throw ContractError("is_totally_unimodular_signing: matrix has a non-integral entry");
    }
    const std::size_t nr = m.n_rows(), nc = m.n_cols();
    if (nr > 20) {
        throw SizeError("is_totally_unimodular_signing: too many rows for exhaustive signing");
    }
    for (std::size_t k = 1; k <= nr; ++k) {
        bool all_subsets_ok = for_each_combination(nr, k, [&](const std::vector<std::size_t>& ri) {
            // Signing of the first row is free (negating all signs is symmetric).
            const std::size_t signings = 1ULL << (k - 1);
            for (std::size_t bits = 0; bits < signings; ++bits) {
                bool ok = true;
                for (std::size_t j = 0; j < nc && ok; ++j) {
                    Rational sum(0);
                    for (std::size_t i = 0; i < k; ++i) {
                        bool neg = i > 0 && ((bits >> (i - 1)) & 1);
                        if (neg) sum -= m.at_index(ri[i], j);
                        else sum += m.at_index(ri[i], j);
                    }
                    if (sum > 1 || sum < -1) ok = false;
                }
                if (ok) return true;  // this subset has a good signing
            }
            return false;
        });
        if (!all_subsets_ok) return false;
    }
    return true;
}

std::string to_text(const LabeledMatrix& m,
                    const std::vector<std::string>& col_order,
                    const std::vector<std::string>& row_order) {
    const auto& cols = col_order.empty() ? m.col_labels() : col_order;
    const auto& rows = row_order.empty() ? m.row_labels() : row_order;
    std::size_t label_w = 0;
    for (const auto& r : rows) label_w = std::max(label_w, r.size());
    std::vector<std::size_t> col_w(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        col_w[j] = cols[j].size();
        for (const auto& r : rows) col_w[j] = std::max(col_w[j], rational_to_string(m.at(r, cols[j])).size());
    }
    std::ostringstream os;
    os << std::string(label_w, ' ');
    for (std::size_t j = 0; j < cols.size(); ++j) os << "  " << std::setw(static_cast<int>(col_w[j])) << cols[j];
    os << "\n";
    for (const auto& r : rows) {
        os << std::setw(static_cast<int>(label_w)) << r;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            os << "  " << std::setw(static_cast<int>(col_w[j])) << rational_to_string(m.at(r, cols[j]));
        }
        os << "\n";
    }
    return os.str();
}

nlohmann::json matrix_to_json(const LabeledMatrix& m) {
    nlohmann::json j;
    j["rows"] = m.row_labels();
    j["cols"] = m.col_labels();
    auto entries = nlohmann::json::array();
    for (const auto& r : m.row_labels()) {
        for (const auto& c : m.col_labels()) {
            const Rational& v = m.at(r, c);
            if (v != 0) entries.push_back({r, c, rational_to_string(v)});
        }
    }
    j["entries"] = std::move(entries);
    return j;
}

LabeledMatrix matrix_from_json(const nlohmann::json& j) {
    try {
        LabeledMatrix m(j.at("rows").get<std::vector<std::string>>(),
                        j.at("cols").get<std::vector<std::string>>());
        for (const auto& e : j.at("entries")) {
            m.set(e.at(0).get<std::string>(), e.at(1).get<std::string>(),
                  rational_from_string(e.at(2).get<std::string>()));
        }
        return m;
    } catch (const nlohmann::json::exception& ex) {
        throw InputError(std::string("malformed matrix JSON: ") + ex.what());
    }
}

}  // namespace ttu
