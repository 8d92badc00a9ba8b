#include "feuler/rational.hpp"

namespace feuler {

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("malformed rational literal: " + text);
    if (q.get_den() == 0) throw std::domain_error("division by zero");
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::vector<std::vector<Rational>> binomial_triangle(int n_max) {
    std::vector<std::vector<Rational>> t;
    t.reserve(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        std::vector<Rational> row(static_cast<size_t>(n) + 1, Rational(1));
        for (int l = 1; l < n; ++l) row[static_cast<size_t>(l)] = t[static_cast<size_t>(n - 1)][static_cast<size_t>(l - 1)] + t[static_cast<size_t>(n - 1)][static_cast<size_t>(l)];
        t.push_back(std::move(row));
    }
    return t;
}

}  // namespace feuler
