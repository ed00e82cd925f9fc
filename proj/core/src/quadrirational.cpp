#include "ybx/quadrirational.hpp"

#include "ybx/errors.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace ybx {

namespace {

Poly poly_y() { return Poly::var(); }

/// (r Y + s)^2 * e((p Y + q)/(r Y + s)) for deg e <= 2: the cleared form of a
/// Moebius substitution into a quadratic.
Poly subst_moebius_deg2(const Poly& e, const Moebius& m) {
    if (e.degree() > 2) throw Error("subst_moebius_deg2: degree > 2");
    Poly num = Poly(m.b()) + Poly::monomial(m.a(), 1); // p Y + q, ascending: b + a Y
    Poly den = Poly(m.d()) + Poly::monomial(m.c(), 1);
    return num * num * Poly(e.coeff(2)) + num * den * Poly(e.coeff(1)) + den * den * Poly(e.coeff(0));
}

struct Fraction {
    // (n1 * t + n0) / (d1 * t + d0) where t is the linear slot and the
    // coefficients are polynomials in the other variable
    Poly n1, n0, d1, d0;
};

Fraction post_compose(const Fraction& f, const Moebius& m) {
    return {f.n1.scaled(m.a()) + f.d1.scaled(m.b()), f.n0.scaled(m.a()) + f.d0.scaled(m.b()),
            f.n1.scaled(m.c()) + f.d1.scaled(m.d()), f.n0.scaled(m.c()) + f.d0.scaled(m.d())};
}

Fraction subst_linear_slot(const Fraction& f, const Moebius& m) {
    // t -> (p t + q)/(r t + s); clearing the common factor (r t + s)
    return {f.n1.scaled(m.a()) + f.n0.scaled(m.c()), f.n1.scaled(m.b()) + f.n0.scaled(m.d()),
            f.d1.scaled(m.a()) + f.d0.scaled(m.c()), f.d1.scaled(m.b()) + f.d0.scaled(m.d())};
}

Fraction subst_coeff_slot(const Fraction& f, const Moebius& m) {
    return {subst_moebius_deg2(f.n1, m), subst_moebius_deg2(f.n0, m), subst_moebius_deg2(f.d1, m),
            subst_moebius_deg2(f.d0, m)};
}

Rat eval_fraction(const Fraction& f, const Rat& coeff_var, const Rat& linear_var,
                  const char* what) {
    Rat den = f.d1.eval(coeff_var) * linear_var + f.d0.eval(coeff_var);
    if (den == 0) throw SingularInput(std::string(what) + ": denominator vanishes");
    return (f.n1.eval(coeff_var) * linear_var + f.n0.eval(coeff_var)) / den;
}

Fraction u_fraction(const QuadriMap& q) { return {q.a, q.b, q.c, q.d}; }
Fraction v_fraction(const QuadriMap& q) { return {q.A, q.B, q.C, q.D}; }

} // namespace

void QuadriMap::validate() const {
    for (const Poly* p : {&a, &b, &c, &d, &A, &B, &C, &D})
        if (p->degree() > 2) throw ParseError("quadrirational map: coefficient degree exceeds 2");
    if ((a * d - b * c).is_zero())
        throw ParseError("quadrirational map: first fraction is degenerate");
    if ((A * D - B * C).is_zero())
        throw ParseError("quadrirational map: second fraction is degenerate");
}

std::pair<int, int> QuadriMap::bidegree() const {
    auto deg4 = [](const Poly& p1, const Poly& p2, const Poly& p3, const Poly& p4) {
        return std::max(std::max(p1.degree(), p2.degree()), std::max(p3.degree(), p4.degree()));
    };
    return {deg4(a, b, c, d), deg4(A, B, C, D)};
}

std::string QuadriMap::str() const {
    return "u=(" + a.str("y") + ")x+(" + b.str("y") + ") / (" + c.str("y") + ")x+(" + d.str("y") +
           "), v=(" + A.str("x") + ")y+(" + B.str("x") + ") / (" + C.str("x") + ")y+(" +
           D.str("x") + ")";
}

std::pair<Rat, Rat> quadri_apply(const QuadriMap& q, const Rat& x, const Rat& y) {
    Rat u = eval_fraction(u_fraction(q), y, x, "u");
    Rat v = eval_fraction(v_fraction(q), x, y, "v");
    return {u, v};
}

std::pair<Rat, Rat> companion(const QuadriMap& q, const Rat& x, const Rat& v) {
    Rat ax = q.A.eval(x), bx = q.B.eval(x), cx = q.C.eval(x), dx = q.D.eval(x);
    if (ax * dx - bx * cx == 0)
        throw DegenerateFiber("companion: v-fraction is not invertible in y at this x");
    // y = (dx v - bx) / (-cx v + ax)
    Rat den = -cx * v + ax;
    if (den == 0) throw DegenerateFiber("companion: Moebius inversion has a pole at v");
    Rat y = (dx * v - bx) / den;
    Rat u = eval_fraction(u_fraction(q), y, x, "companion u");
    return {y, u};
}

QuadriMap conjugate(const QuadriMap& q, const Moebius& sx, const Moebius& sy, const Moebius& su,
                    const Moebius& sv) {
    Fraction uf = u_fraction(q);
    uf = post_compose(uf, su);
    uf = subst_linear_slot(uf, sx); // x is the linear slot of the u-fraction
    uf = subst_coeff_slot(uf, sy);

    Fraction vf = v_fraction(q);
    vf = post_compose(vf, sv);
    vf = subst_linear_slot(vf, sy); // y is the linear slot of the v-fraction
    vf = subst_coeff_slot(vf, sx);

    QuadriMap out{uf.n1, uf.n0, uf.d1, uf.d0, vf.n1, vf.n0, vf.d1, vf.d0};
    out.validate();
    return out;
}

QuadriMap conjugate_diagonal(const QuadriMap& q, const Moebius& m) {
    Moebius mi = m.inverse();
    return conjugate(q, mi, mi, m, m);
}

QuadriMap normalized(const QuadriMap& q) {
    auto scale_block = [](Poly* ps[4]) {
        Rat pivot = 0;
        for (int k = 0; k < 4 && pivot == 0; ++k)
            for (int d = 0; d <= ps[k]->degree() && pivot == 0; ++d)
                if (ps[k]->coeff(d) != 0) pivot = ps[k]->coeff(d);
        if (pivot == 0) return;
        for (int k = 0; k < 4; ++k) *ps[k] = ps[k]->divided_by(pivot);
    };
    QuadriMap out = q;
    Poly* ub[4] = {&out.a, &out.b, &out.c, &out.d};
    Poly* vb[4] = {&out.A, &out.B, &out.C, &out.D};
    scale_block(ub);
    scale_block(vb);
    return out;
}

QuadriForm quadri_form_from_string(const std::string& s) {
    if (s == "f1") return QuadriForm::FI;
    if (s == "f2") return QuadriForm::FII;
    if (s == "f3") return QuadriForm::FIII;
    if (s == "f4") return QuadriForm::FIV;
    if (s == "f5") return QuadriForm::FV;
    throw ParseError("unknown quadrirational form: " + s);
}

std::string to_string(QuadriForm f) {
    switch (f) {
        case QuadriForm::FI: return "f1";
        case QuadriForm::FII: return "f2";
        case QuadriForm::FIII: return "f3";
        case QuadriForm::FIV: return "f4";
        case QuadriForm::FV: return "f5";
    }
    return "?";
}

namespace {
void require_form_params(QuadriForm form, const Rat& alpha, const Rat& beta) {
    switch (form) {
        case QuadriForm::FI:
            if (alpha == 0 || beta == 0 || alpha == 1 || beta == 1)
                throw ParameterCollision("F_I: parameters must avoid 0 and 1");
            break;
        case QuadriForm::FII:
        case QuadriForm::FIII:
            if (alpha == 0 || beta == 0)
                throw ParameterCollision(to_string(form) + ": parameters must be nonzero");
            break;
        default: break;
    }
}
} // namespace

std::pair<Rat, Rat> quadrirational(QuadriForm form, const Rat& alpha, const Rat& beta,
                                   const Rat& x, const Rat& y) {
    require_form_params(form, alpha, beta);
    switch (form) {
        case QuadriForm::FI: {
            Rat num = (1 - beta) * x + beta - alpha + (alpha - 1) * y;
            Rat den = beta * (1 - alpha) * x + (alpha - beta) * x * y + alpha * (beta - 1) * y;
            if (den == 0) throw SingularInput("F_I: denominator vanishes");
            Rat p = num / den;
            return {alpha * y * p, beta * x * p};
        }
        case QuadriForm::FII: {
            if (x == y) throw SingularInput("F_II: x == y");
            Rat p = (alpha * x - beta * y + beta - alpha) / (x - y);
            return {y / alpha * p, x / beta * p};
        }
        case QuadriForm::FIII: {
            if (x == y) throw SingularInput("F_III: x == y");
            Rat p = (alpha * x - beta * y) / (x - y);
            return {y / alpha * p, x / beta * p};
        }
        case QuadriForm::FIV: {
            if (x == y) throw SingularInput("F_IV: x == y");
            Rat p = 1 + (beta - alpha) / (x - y);
            return {y * p, x * p};
        }
        case QuadriForm::FV: {
            if (x == y) throw SingularInput("F_V: x == y");
            Rat p = (alpha - beta) / (x - y);
            return {y + p, x + p};
        }
    }
    throw Error("quadrirational: unreachable");
}

QuadriMap quadri_form_map(QuadriForm form, const Rat& alpha, const Rat& beta) {
    require_form_params(form, alpha, beta);
    // At alpha == beta every normal form collapses to a map whose fractions
    // lose their dependence on x resp. y, which the coefficient table cannot
    // represent; the closed-form evaluator still handles that case.
    if (alpha == beta)
        throw ParameterCollision(to_string(form) + ": coefficient table degenerates at alpha == beta");
    Poly y = poly_y(), y2 = y * y;
    Poly x = Poly::var(), x2 = x * x;
    QuadriMap q;
    switch (form) {
        case QuadriForm::FI:
            q.a = y.scaled(alpha * (1 - beta));
            q.b = y.scaled(alpha * (beta - alpha)) + y2.scaled(alpha * (alpha - 1));
            q.c = Poly(beta * (1 - alpha)) + y.scaled(alpha - beta);
            q.d = y.scaled(alpha * (beta - 1));
            q.A = x.scaled(beta * (alpha - 1));
            q.B = x2.scaled(beta * (1 - beta)) + x.scaled(beta * (beta - alpha));
            q.C = x.scaled(alpha - beta) + Poly(alpha * (beta - 1));
            q.D = x.scaled(beta * (1 - alpha));
            break;
        case QuadriForm::FII:
            q.a = y;
            q.b = y2.scaled(-beta / alpha) + y.scaled((beta - alpha) / alpha);
            q.c = Poly(1);
            q.d = -y;
            q.A = -x;
            q.B = x2.scaled(alpha / beta) + x.scaled((beta - alpha) / beta);
            q.C = Poly(-1);
            q.D = x;
            break;
        case QuadriForm::FIII:
            q.a = y;
            q.b = y2.scaled(-beta / alpha);
            q.c = Poly(1);
            q.d = -y;
            q.A = -x;
            q.B = x2.scaled(alpha / beta);
            q.C = Poly(-1);
            q.D = x;
            break;
        case QuadriForm::FIV:
            q.a = y;
            q.b = -y2 + y.scaled(beta - alpha);
            q.c = Poly(1);
            q.d = -y;
            q.A = -x;
            q.B = x2 + x.scaled(beta - alpha);
            q.C = Poly(-1);
            q.D = x;
            break;
        case QuadriForm::FV:
            q.a = y;
            q.b = -y2 + Poly(alpha - beta);
            q.c = Poly(1);
            q.d = -y;
            q.A = -x;
            q.B = x2 + Poly(alpha - beta);
            q.C = Poly(-1);
            q.D = x;
            break;
    }
    q.validate();
    return q;
}

std::pair<Rat, Rat> fv_negated(const Rat& alpha, const Rat& beta, const Rat& x, const Rat& y) {
    if (x == y) throw SingularInput("fv-negated: x == y");
    Rat p = (alpha - beta) / (x - y);
    return {-y - p, -x - p};
}

namespace {
Poly parse_triple(const std::string& line, const std::string& name) {
    std::istringstream in(line);
    std::string c2, c1, c0;
    if (!(in >> c2 >> c1 >> c0))
        throw ParseError("map file: '" + name + "' needs three coefficients (deg2 deg1 deg0)");
    std::string extra;
    if (in >> extra) throw ParseError("map file: trailing tokens after '" + name + "'");
    // built piecewise: brace-init lists leak constructed elements on gcc when
    // a later element's constructor throws
    std::vector<Rat> coeffs;
    coeffs.reserve(3);
    coeffs.push_back(rat_parse(c0));
    coeffs.push_back(rat_parse(c1));
    coeffs.push_back(rat_parse(c2));
    return Poly(std::move(coeffs));
}
} // namespace

QuadriMap quadri_parse(std::istream& in) {
    std::map<std::string, Poly> got;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("map file line " + std::to_string(lineno) + ": expected 'name: c2 c1 c0'");
        std::string name = line.substr(first, colon - first);
        while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) name.pop_back();
        static const char* names[] = {"a", "b", "c", "d", "A", "B", "C", "D"};
        bool known = false;
        for (const char* n : names) known |= (name == n);
        if (!known) throw ParseError("map file line " + std::to_string(lineno) + ": unknown name '" + name + "'");
        if (got.count(name)) throw ParseError("map file: duplicate entry '" + name + "'");
        got.emplace(name, parse_triple(line.substr(colon + 1), name));
    }
    if (got.size() != 8) throw ParseError("map file: need all eight entries a b c d A B C D");
    QuadriMap q{got.at("a"), got.at("b"), got.at("c"), got.at("d"),
                got.at("A"), got.at("B"), got.at("C"), got.at("D")};
    q.validate();
    return q;
}

QuadriMap quadri_load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open map file: " + path);
    return quadri_parse(in);
}

std::string quadri_serialize(const QuadriMap& q) {
    std::ostringstream out;
    auto put = [&](const char* name, const Poly& p) {
        out << name << ": " << rat_str(p.coeff(2)) << " " << rat_str(p.coeff(1)) << " "
            << rat_str(p.coeff(0)) << "\n";
    };
    put("a", q.a);
    put("b", q.b);
    put("c", q.c);
    put("d", q.d);
    put("A", q.A);
    put("B", q.B);
    put("C", q.C);
    put("D", q.D);
    return out.str();
}

} // namespace ybx
