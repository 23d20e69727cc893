#include "hilbsq/integer.hpp"

#include <stdexcept>

namespace hilbsq {

Integer isqrt(const Integer& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

std::optional<Integer> exact_sqrt(const Integer& t) {
    if (t < 0) return std::nullopt;
    Integer r = isqrt(t);
    if (r * r == t) return r;
    return std::nullopt;
}

Integer floor_div(const Integer& a, const Integer& b) {
    if (b == 0) throw std::domain_error("floor_div: division by zero");
    Integer q = a / b;
    if (q * b != a && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

Integer mod_floor(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += m;
    return r;
}

std::string to_string(const Integer& n) { return n.str(); }

Integer parse_integer(std::string_view text) {
    std::string s(text);
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("not an integer: '" + s + "'");
    }
    if (s[0] == '+') s.erase(0, 1);
    return Integer(s);
}

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long long>> rows) {
    const auto n_rows = static_cast<Eigen::Index>(rows.size());
    const auto n_cols = n_rows == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
    IntMatrix m(n_rows, n_cols);
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        if (static_cast<Eigen::Index>(row.size()) != n_cols) {
            throw std::invalid_argument("int_matrix: ragged rows");
        }
        Eigen::Index j = 0;
        for (long long v : row) m(i, j++) = Integer(v);
        ++i;
    }
    return m;
}

IntVector int_vector(std::initializer_list<long long> entries) {
    IntVector v(static_cast<Eigen::Index>(entries.size()));
    Eigen::Index i = 0;
    for (long long e : entries) v(i++) = Integer(e);
    return v;
}

IntMatrix identity_matrix(Eigen::Index n) { return IntMatrix::Identity(n, n); }

}  // namespace hilbsq
