#include "braidrep/serialize.hpp"

#include "braidrep/error.hpp"

namespace braidrep {

namespace {

Integer parse_integer(const std::string& text)
{
    Integer z;
    if (text.empty() || z.set_str(text, 10) != 0) {
        throw DomainError("malformed integer '" + text + "'");
    }
    return z;
}

template <class R, class F>
Json matrix_json(const Matrix<R>& m, F&& entry)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(entry(m(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

template <class R, class F>
Matrix<R> matrix_from_json(const Json& j, const R& zero, F&& entry)
{
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
        throw DomainError("matrix JSON needs rows, cols and entries");
    }
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const Json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows) {
        throw DomainError("matrix JSON row count does not match 'rows'");
    }
    Matrix<R> m(rows, cols, zero);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!entries[r].is_array() || entries[r].size() != cols) {
            throw DomainError("matrix JSON row " + std::to_string(r) + " does not match 'cols'");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m(r, c) = entry(entries[r][c]);
        }
    }
    return m;
}

std::string latex_rational(const Rational& x)
{
    if (x.get_den() == 1) {
        return x.get_num().get_str();
    }
    const std::string sign = sgn(x) < 0 ? "-" : "";
    return sign + "\\frac{" + Integer(abs(x.get_num())).get_str() + "}{" + x.get_den().get_str() + "}";
}

std::string latex_poly(const LaurentPoly& p, std::span<const std::string> names)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        std::string mono;
        for (int k = 0; k < p.nvars(); ++k) {
            const int e = it->exp[static_cast<std::size_t>(k)];
            if (e == 0) {
                continue;
            }
            mono += names[static_cast<std::size_t>(k)];
            if (e != 1) {
                mono += "^{" + std::to_string(e) + "}";
            }
        }
        const bool negative = sgn(it->coeff) < 0;
        const Integer mag = abs(it->coeff);
        std::string body = (mag == 1 && !mono.empty()) ? mono : mag.get_str() + mono;
        if (out.empty()) {
            out = (negative ? "-" : "") + body;
        } else {
            out += (negative ? " - " : " + ") + body;
        }
    }
    return out;
}

template <class R, class F>
std::string latex_matrix(const Matrix<R>& m, F&& entry)
{
    std::string out = "\\left[\\begin{array}{" + std::string(m.cols(), 'c') + "}\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out += (j == 0 ? "" : " & ") + entry(m(i, j));
        }
        out += i + 1 < m.rows() ? " \\\\\n" : "\n";
    }
    return out + "\\end{array}\\right]";
}

} // namespace

Json to_json(const LaurentPoly& p)
{
    Json out = Json::array();
    for (const auto& term : p.terms()) {
        Json exp = Json::array();
        for (int k = 0; k < p.nvars(); ++k) {
            exp.push_back(term.exp[static_cast<std::size_t>(k)]);
        }
        out.push_back(Json{{"coeff", term.coeff.get_str()}, {"exp", std::move(exp)}});
    }
    return out;
}

LaurentPoly poly_from_json(const Json& j, int nvars)
{
    if (!j.is_array()) {
        throw DomainError("polynomial JSON must be an array of terms");
    }
    LaurentPoly p(nvars);
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("coeff") || !term.contains("exp")) {
            throw DomainError("polynomial term needs coeff and exp");
        }
        const auto& exp = term.at("exp");
        if (!exp.is_array() || exp.size() != static_cast<std::size_t>(nvars)) {
            throw DomainError("term exponent has wrong length");
        }
        ExponentVec e{};
        for (int k = 0; k < nvars; ++k) {
            e[static_cast<std::size_t>(k)] = exp[static_cast<std::size_t>(k)].get<int>();
        }
        p += LaurentPoly::monomial(nvars, e, parse_integer(term.at("coeff").get<std::string>()));
    }
    return p;
}

Json to_json(const Matrix<Rational>& m)
{
    return matrix_json(m, [](const Rational& x) { return rational_to_string(x); });
}

Json to_json(const Matrix<Integer>& m)
{
    return matrix_json(m, [](const Integer& x) { return x.get_str(); });
}

Json to_json(const Matrix<LaurentPoly>& m)
{
    return matrix_json(m, [](const LaurentPoly& p) { return to_json(p); });
}

Matrix<Rational> rational_matrix_from_json(const Json& j)
{
    return matrix_from_json(j, Rational(0), [](const Json& e) {
        if (!e.is_string()) {
            throw DomainError("rational matrix entries must be \"P/Q\" strings");
        }
        return parse_rational(e.get<std::string>());
    });
}

Matrix<LaurentPoly> poly_matrix_from_json(const Json& j, int nvars)
{
    return matrix_from_json(j, LaurentPoly(nvars), [nvars](const Json& e) { return poly_from_json(e, nvars); });
}

std::string to_latex(const Matrix<Rational>& m) { return latex_matrix(m, latex_rational); }

std::string to_latex(const Matrix<LaurentPoly>& m, std::span<const std::string> names)
{
    if (!m.entries().empty() && names.size() < static_cast<std::size_t>(m.sample().nvars())) {
        throw DomainError("not enough variable names for LaTeX output");
    }
    return latex_matrix(m, [names](const LaurentPoly& p) { return latex_poly(p, names); });
}

} // namespace braidrep
