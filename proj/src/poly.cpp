#include "eulercat/poly.hpp"

#include <stdexcept>

namespace eulercat {

namespace {

void require_same_var(const Poly& a, const Poly& b, const char* op) {
    if (a.var() != b.var()) {
        throw std::invalid_argument(std::string("Poly ") + op + ": variable mismatch (" +
                                    var_name(a.var()) + " vs " + var_name(b.var()) + ")");
    }
}

}  // namespace

Poly::Poly(Var var, std::vector<Rat> ascending_coeffs) : var_(var), c_(std::move(ascending_coeffs)) {
    trim();
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(Var var, const Rat& c) {
    Poly p(var);
    if (c != 0) p.c_ = {c};
    return p;
}

Poly Poly::monomial(Var var, std::size_t power, const Rat& c) {
    Poly p(var);
    if (c != 0) {
        p.c_.assign(power + 1, Rat(0));
        p.c_[power] = c;
    }
    return p;
}

const Rat& Poly::leading() const {
    if (c_.empty()) throw std::logic_error("Poly::leading on zero polynomial");
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    require_same_var(*this, o, "+");
    Poly r(var_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = coeff(k) + o.coeff(k);
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    Poly r(var_);
    r.c_.reserve(c_.size());
    for (const Rat& c : c_) r.c_.push_back(-c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    require_same_var(*this, o, "*");
    Poly r(var_);
    if (is_zero() || o.is_zero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

Poly Poly::scaled(const Rat& c) const {
    Poly r(var_);
    if (c == 0) return r;
    r.c_.reserve(c_.size());
    for (const Rat& x : c_) r.c_.push_back(x * c);
    return r;
}

Poly Poly::shifted(std::size_t k) const {
    Poly r(var_);
    if (is_zero()) return r;
    r.c_.assign(c_.size() + k, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
}

Poly Poly::derivative() const {
    Poly r(var_);
    for (std::size_t k = 1; k < c_.size(); ++k) r.c_.push_back(c_[k] * Rat(static_cast<long>(k)));
    r.trim();
    return r;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    require_same_var(a, b, "divmod");
    if (b.is_zero()) throw std::invalid_argument("poly_divmod: division by zero polynomial");
    Poly q(a.var());
    Poly r = a;
    const int db = b.degree();
    if (r.degree() >= db) q.c_.assign(r.degree() - db + 1, Rat(0));
    while (!r.is_zero() && r.degree() >= db) {
        const std::size_t shift = static_cast<std::size_t>(r.degree() - db);
        const Rat factor = r.leading() / b.leading();
        q.c_[shift] = factor;
        r = r - b.scaled(factor).shifted(shift);
    }
    q.trim();
    return {q, r};
}

Poly poly_gcd(Poly a, Poly b) {
    require_same_var(a, b, "gcd");
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = a.scaled(Rat(1) / a.leading());  // monic
    return a;
}

bool poly_squarefree(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("poly_squarefree: zero polynomial");
    return poly_gcd(p, p.derivative()).degree() <= 0;
}

Poly poly_interpolate(Var var, const std::vector<std::pair<Rat, Rat>>& points) {
    // Newton divided differences, expanded to the monomial basis.
    const std::size_t n = points.size();
    std::vector<Rat> dd(n);
    for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n; i-- > level;) {
            const Rat dx = points[i].first - points[i - level].first;
            if (dx == 0) throw std::invalid_argument("poly_interpolate: repeated x value");
            dd[i] = (dd[i] - dd[i - 1]) / dx;
        }
    }
    Poly result(var);
    Poly basis = Poly::constant(var, Rat(1));
    for (std::size_t i = 0; i < n; ++i) {
        result = result + basis.scaled(dd[i]);
        basis = basis * Poly(var, {-points[i].first, Rat(1)});
    }
    return result;
}

std::string to_string(const Poly& p) { return list_str(p.coeffs()); }

}  // namespace eulercat
